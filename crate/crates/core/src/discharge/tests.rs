use super::*;
use crate::graph::families;
use FaceClass::*;

fn q(n: i64, d: i64) -> Charge {
    Charge::new(n, d)
}

fn scenario(center: usize, neighbors: &[FaceClass]) -> ChargeScenario {
    ChargeScenario::new(center, neighbors.to_vec()).unwrap()
}

#[test]
fn initial_charges() {
    assert_eq!(initial_charge(3), Ok(q(-3, 1)));
    assert_eq!(initial_charge(6), Ok(q(0, 1)));
    assert_eq!(initial_charge(9), Ok(q(3, 1)));
    assert_eq!(initial_charge(2), Err(DischargeError::ShortFace(2)));
}

#[test]
fn rule_amounts_are_exact() {
    let amounts: Vec<_> = charge_rules().iter().map(|r| (r.receiver, r.amount)).collect();
    assert_eq!(amounts, vec![(3, q(1, 1)), (4, q(2, 3)), (5, q(1, 3))]);
    assert_eq!(transfer_to(L6), q(0, 1));
    assert_eq!(transfer_to(L7Plus), q(0, 1));
}

#[test]
fn final_charge_examples() {
    assert_eq!(final_charge(&scenario(3, &[L7Plus; 3])), q(0, 1));
    let seven = scenario(7, &[L3, L7Plus, L7Plus, L6, L7Plus, L6, L7Plus]);
    assert_eq!(final_charge(&seven), q(0, 1));
    assert_eq!(final_charge(&scenario(6, &[L3, L4, L5, L7Plus, L7Plus, L3])), q(0, 1));
    assert_eq!(final_charge(&scenario(4, &[L5, L7Plus, L7Plus, L7Plus])), q(0, 1));
    assert_eq!(final_charge(&scenario(8, &[L5; 8])), q(-2, 3));
}

#[test]
fn scenario_validation_and_canonical_form() {
    assert!(ChargeScenario::new(4, vec![L3]).is_err());
    let s = scenario(4, &[L7Plus, L5, L3, L4]);
    let c = s.canonical();
    assert_eq!(c.neighbors, vec![L3, L4, L7Plus, L5]);
    assert!(c.is_canonical());
    // 5 classes around a triangle: necklaces with reflection
    assert_eq!(scenarios(3).count(), 35);
}

#[test]
fn total_charge_on_platonic_graphs() {
    for g in [families::k4(), families::cube(), families::dodecahedron(), families::prism(7)] {
        assert_eq!(total_charge_check(&g), Ok(q(-12, 1)));
    }
    assert!(total_charge_check(&families::cycle(5)).is_err());
}

#[test]
fn discharge_examples_conserve_charge() {
    let dodeca = discharge_graph(&families::dodecahedron()).unwrap();
    assert!(dodeca.iter().all(|&c| c == q(-1, 1)));
    let k4 = discharge_graph(&families::k4()).unwrap();
    assert_eq!(k4, vec![q(-3, 1); 4]);
    // a 7-prism has two 7-faces feeding seven 4-faces
    let prism = discharge_graph(&families::prism(7)).unwrap();
    assert_eq!(prism.iter().sum::<Charge>(), q(-12, 1));
    assert!(prism.contains(&q(-2, 3)));
    assert!(prism.contains(&q(-11, 3)));
}

#[test]
fn exclusion_examples() {
    let rules = RuleSet::full();
    let tri = scenario(3, &[L6, L7Plus, L7Plus]);
    assert_eq!(rules.excluded_by(&tri), Some(vec!["3c6".to_string()]));

    // a 4 and two 5s around a 7-face, over all placements
    let mut fired = std::collections::BTreeSet::new();
    for s in scenarios(7).filter(|s| s.count(L4) == 1 && s.count(L5) == 2 && s.count(L7Plus) == 4) {
        fired.extend(rules.firing(&s));
    }
    for name in ["4c5*5", "7c4*5", "7c4**5"] {
        assert!(fired.contains(name), "{name} missing from {fired:?}");
    }

    let eight = scenario(8, &[L5, L5, L5, L5, L5, L5, L7Plus, L7Plus]);
    assert!(rules.firing(&eight).contains("5c5*5"));
    // two 4-faces across an 8-face are within distance 3
    let far = scenario(8, &[L4, L7Plus, L7Plus, L7Plus, L4, L7Plus, L7Plus, L7Plus]);
    assert_eq!(rules.excluded_by(&far), Some(["4c4", "4d1-4", "4d2-4", "4d3-4"].iter().map(|s| s.to_string()).collect()));
    // a lone 5 beside a 4 around a 4-face is fine
    assert!(!rules.excludes(&scenario(4, &[L5, L7Plus, L7Plus, L7Plus])));
}

#[test]
fn every_rule_names_a_catalog_entry() {
    let names: Vec<String> = crate::config::catalog_specs().iter().map(|s| s.to_string()).collect();
    let rules = exclusion_rules();
    assert_eq!(rules.len(), 31);
    for r in &rules {
        assert!(names.contains(&r.name()));
        assert!(!r.describe().is_empty());
    }
}

#[test]
fn drop_rule_parsing() {
    let mut rules = RuleSet::full();
    rules.drop_rule("3c6m").unwrap();
    assert_eq!(rules.active_names().len(), 27);
    assert!(rules.drop_rule("9c9").is_err());
    assert!(rules.drop_rule("nonsense").is_err());
    rules.drop_rule("ALL").unwrap();
    assert!(rules.active_names().is_empty());
}

#[test]
fn full_rule_set_passes_small_faces() {
    let report = check_unavoidability(3..=8, &RuleSet::full());
    assert!(report.pass(), "{report}");
    for len in 3..=8 {
        assert_eq!(report.row(len).unwrap().worst.as_ref().unwrap().0, q(0, 1), "length {len}");
    }
    let no_small = |s: &ChargeScenario| s.count(L3) == 0 && s.count(L4) == 0;
    let (min, _) = min_final_charge(8, &RuleSet::full(), no_small).unwrap();
    assert_eq!(min, q(1, 3));
}

#[test]
fn mutations_fail() {
    let mut without = RuleSet::full();
    without.drop_rule("5c5*5").unwrap();
    let report = check_unavoidability(3..=8, &without);
    assert!(!report.row(8).unwrap().pass(), "{report}");

    let report = check_unavoidability(3..=8, &RuleSet::empty());
    assert!(!report.row(3).unwrap().pass());
}

#[test]
fn large_faces_pass_and_fail_under_mutation() {
    let report = check_large_faces(20, &RuleSet::full());
    assert!(report.pass(), "{report}");
    assert_eq!(report.slack[0], (9, q(0, 1)));
    assert_eq!(report.slack.len(), 12);
    let text = report.to_string();
    assert!(text.contains("BUNDLE 3 drawn=1/1 rule=1/1 PASS"));
    assert!(text.contains("BUNDLE 4 drawn=2/3 rule=2/3 PASS"));

    let mut without = RuleSet::full();
    without.drop_rule("4c5*5").unwrap();
    let report = check_large_faces(20, &without);
    assert!(!report.missing_flanks.is_empty());
    let mut without = RuleSet::full();
    without.drop_rule("3d1-3").unwrap();
    assert!(!check_large_faces(9, &without).double_claims.is_empty());
}

#[test]
fn adding_rules_never_lowers_the_minimum() {
    let names: Vec<String> = exclusion_rules().iter().map(|r| r.name()).collect();
    let mut rules = RuleSet::empty();
    let mut last: Vec<Charge> = (3..=7).map(|l| min_final_charge(l, &rules, |_| true).unwrap().0).collect();
    for name in &names {
        rules.add_rule(name).unwrap();
        let now: Vec<Charge> = (3..=7).map(|l| min_final_charge(l, &rules, |_| true).unwrap().0).collect();
        for (a, b) in last.iter().zip(&now) {
            assert!(b >= a, "adding {name} lowered a minimum");
        }
        last = now;
    }
}
