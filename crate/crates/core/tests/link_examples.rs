use syspres::corpus::f2xf2_table;
use syspres::cycles::{check_six_large, classify_diagonal_free_4cycle, enumerate_embedded_cycles, has_diagonal};
use syspres::free::counterexample_realization;
use syspres::garside::{garside_table, AmalgamSpec};
use syspres::link::build_link;

#[test]
fn each_counterexample_link_has_its_cycle_type() {
    for i in 1..=5u8 {
        let link = build_link(&counterexample_realization(i).table());
        let rep = check_six_large(&link);
        assert!(!rep.passed());
        let types: Vec<u8> = rep
            .diagonal_free
            .iter()
            .map(|c| classify_diagonal_free_4cycle(&link, c).unwrap().number())
            .collect();
        assert!(types.contains(&i), "R{i}: {types:?}");
        assert!(types.iter().all(|&t| t == i), "R{i}: {types:?}");
    }
}

#[test]
fn f2xf2_cycles_are_type_five() {
    let link = build_link(&f2xf2_table());
    let rep = check_six_large(&link);
    assert_eq!(rep.total_diagonal_free, 2);
    for c in &rep.diagonal_free {
        assert_eq!(classify_diagonal_free_4cycle(&link, c).unwrap().number(), 5);
    }
}

#[test]
fn garside_2x3_link() {
    let t = garside_table(&AmalgamSpec::single(2, 3).unwrap());
    let link = build_link(&t);
    assert_eq!(link.num_vertices(), 10);
    assert_eq!(link.edges().len(), 18);
    assert!(check_six_large(&link).passed());
    for c in enumerate_embedded_cycles(&link, 5).unwrap() {
        assert!(has_diagonal(&link, &c).unwrap());
    }
}
