//! Systolicity checks for restricted triangular presentations given as
//! partial multiplication tables.
//!
//! A [`ProductTable`] lists generators and defined products `s · t = u`.
//! [`ProductTable::validate`] checks the consequences of realizability in a
//! group that a finite table can be tested for; it cannot certify that a
//! table comes from a group. The constructive backends ([`garside`],
//! [`artin`], [`free`]) produce tables whose groups are known.

pub mod artin;
pub mod cli;
pub mod conditions;
pub mod corpus;
pub mod cycles;
pub mod free;
pub mod garside;
pub mod link;
pub mod order;
pub mod order_conditions;
pub mod sample;
pub mod table;

pub use conditions::{
    check_literal_conditions, check_systolic_conditions, check_systolic_conditions_with, CheckOptions,
    ConditionOutcome, ConditionReport, Reading,
};
pub use cycles::{
    check_six_large, classify_diagonal_free_4cycle, enumerate_embedded_cycles, has_diagonal, CycleType,
    EmbeddedCycle, SixLargeReport,
};
pub use link::{build_link, LinkGraph, SignedVertex};
pub use order::DivisibilityOrder;
pub use order_conditions::check_conditions_via_orders;
pub use table::{validate_table, Elem, Gen, ProductTable, ValidationReport};
