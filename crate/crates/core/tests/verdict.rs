//! Classification, the equioriented equivalence tables, and the lemma
//! suites, pinned on small line quivers.

use std::sync::Arc;

use stabmod::linalg::Fp;
use stabmod::quiver::Quiver;
use stabmod::verdict::{census, classify, equivalence_table, run_suite, suite_names};
use stabmod::Error;

fn f() -> Fp {
    Fp::default_field()
}

fn an(n: usize, orientation: &str) -> Arc<Quiver> {
    Arc::new(Quiver::an(n, orientation).unwrap())
}

#[test]
fn two_sink_line_is_not_abelian() {
    let v = classify(f(), &an(3, "><")).unwrap();
    assert!(!v.abelian);
    assert!(!v.envelope_projective);
    assert_eq!(v.envelope_of_ring.dims, vec![3, 3, 3]);
    assert_eq!(v.algebra, "A3(><)");
    assert_eq!(v.field, 101);
    let w = v.witness.expect("non-abelian line quiver carries a witness");
    assert!(w.mono && w.epi && !w.iso);
    assert!(v.reasons.iter().any(|r| r.contains("factorization system")));
}

#[test]
fn monotone_and_semisimple_lines_are_abelian() {
    let v = classify(f(), &an(3, ">>")).unwrap();
    assert!(v.abelian && v.envelope_projective);
    assert_eq!(v.envelope_of_ring.dims, vec![3, 3, 3]);
    assert!(v.witness.is_none());

    let point = classify(f(), &an(1, "")).unwrap();
    assert!(point.abelian);
    assert_eq!(point.envelope_of_ring.dims, vec![1]);
}

#[test]
fn census_matches_the_monotone_pattern() {
    for n in 2..=4 {
        let verdicts = census(f(), n).unwrap();
        assert_eq!(verdicts.len(), 1 << (n - 1));
        let mut non_abelian = 0;
        for v in &verdicts {
            let orientation = v
                .algebra
                .trim_start_matches(&format!("A{n}("))
                .trim_end_matches(')')
                .to_string();
            let monotone =
                orientation.chars().all(|c| c == '>') || orientation.chars().all(|c| c == '<');
            assert_eq!(v.abelian, monotone, "{}", v.algebra);
            assert_eq!(v.witness.is_some(), !v.abelian);
            if !v.abelian {
                non_abelian += 1;
            }
        }
        assert_eq!(non_abelian, (1 << (n - 1)) - 2);
    }
}

#[test]
fn smallest_equivalence_table_is_one_simple_object() {
    let r = equivalence_table(f(), 2).unwrap();
    assert_eq!(r.expected_count, 1);
    assert_eq!(r.stable_objects, vec!["[1,1]".to_string()]);
    assert_eq!(r.module_objects, vec!["[1,1]".to_string()]);
    assert_eq!(r.stable_table, vec![vec![1]]);
    assert_eq!(r.module_table, vec![vec![1]]);
    assert!(r.matched);
    assert_eq!(r.bijection.len(), 1);
}

#[test]
fn equivalence_tables_match_up_to_length_five() {
    for n in 3..=5 {
        let r = equivalence_table(f(), n).unwrap();
        assert_eq!(r.expected_count, n * (n - 1) / 2);
        assert_eq!(r.stable_objects.len(), r.expected_count, "n = {n}");
        assert_eq!(r.module_objects.len(), r.expected_count, "n = {n}");
        assert!(r.matched, "n = {n}");
        // the pairing really carries one table onto the other
        let pos = |label: &str, side: &[String]| {
            side.iter().position(|l| l == label).unwrap()
        };
        for (sa, ma) in &r.bijection {
            for (sb, mb) in &r.bijection {
                let i = pos(sa, &r.stable_objects);
                let j = pos(sb, &r.stable_objects);
                let pi = pos(ma, &r.module_objects);
                let pj = pos(mb, &r.module_objects);
                assert_eq!(r.stable_table[i][j], r.module_table[pi][pj]);
            }
        }
    }
}

#[test]
fn equivalence_table_rejects_out_of_range_lengths() {
    assert!(matches!(
        equivalence_table(f(), 1),
        Err(Error::InvalidInput(_))
    ));
    assert!(matches!(
        equivalence_table(f(), 6),
        Err(Error::InvalidInput(_))
    ));
}

#[test]
fn every_suite_passes_on_seeded_instances() {
    for name in suite_names() {
        let report = run_suite(f(), name, 26, 7).unwrap();
        assert!(
            report.passed,
            "suite {name} failed: {:?}",
            report.failures
        );
        assert_eq!(report.trials, 26);
        assert_eq!(report.seed, 7);
        assert_eq!(report.field, 101);
    }
}

#[test]
fn suite_reports_are_deterministic() {
    let a = run_suite(f(), "S-mono", 40, 42).unwrap();
    let b = run_suite(f(), "S-mono", 40, 42).unwrap();
    assert_eq!(
        serde_json::to_string(&a).unwrap(),
        serde_json::to_string(&b).unwrap()
    );
    assert!(a.passed);
}

#[test]
fn unknown_suites_are_rejected() {
    assert!(matches!(
        run_suite(f(), "S-bogus", 1, 0),
        Err(Error::UnknownSuite(_))
    ));
}

#[test]
fn quotient_suite_exhibits_a_destroyed_epimorphism() {
    let report = run_suite(f(), "S-quotient", 20, 1).unwrap();
    assert!(report.passed);
    assert!(report
        .evidence
        .iter()
        .any(|e| e.starts_with("A2(>)") && e.contains("cover projection P_1 -> S_1")));
}

#[test]
fn witness_suite_reports_the_factorization_failure() {
    let report = run_suite(f(), "S-witness", 12, 3).unwrap();
    assert!(report.passed);
    assert!(report
        .evidence
        .iter()
        .any(|e| e.contains("not a factorization system")));
}
