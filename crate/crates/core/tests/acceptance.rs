//! Acceptance battery. Each test is one headline criterion and prints a
//! single PASS line (visible with `--nocapture`); the assertions hold at
//! 100% — no tolerance for disagreement between decision routes.

use stabmod::linalg::{Fp, Mat};
use stabmod::normality::{
    alpha_pushout, bimorphism_witness, is_normal_epi, normal_mono_certificate, sequence_splits,
    stable_envelope_procedure,
};
use stabmod::quiver::Quiver;
use stabmod::rep::{
    compose, factor_left, hom_basis, image, injective_envelope, intervals, is_injective,
    is_projective, kernel, proj_at, Morphism, Ses,
};
use stabmod::sample::Sampler;
use stabmod::stable::{
    epi_representative, epi_witness, is_stable_epi, is_stable_iso, is_stable_mono,
    is_stable_split_epi, is_stable_split_mono, pushout_lift, Method, StableHom,
};
use stabmod::torsion::{canonical_split, is_stable_module, sharp, torsion_submodule};
use stabmod::verdict::{census, classify, equivalence_table};
use std::sync::Arc;
use std::time::{Duration, Instant};

fn field() -> Fp {
    Fp::default_field()
}

fn pass(n: usize, label: &str, started: Instant, budget: Option<Duration>) {
    let elapsed = started.elapsed();
    if let Some(b) = budget {
        assert!(
            elapsed <= b,
            "criterion {n} blew its {b:?} budget: took {elapsed:?}"
        );
    }
    println!("criterion {n:2} ({label}): PASS in {elapsed:?}");
}

fn line_quivers(n: usize) -> Vec<Arc<Quiver>> {
    Quiver::an_orientations(n).into_iter().map(Arc::new).collect()
}

/// An epimorphism representative of the class of `f` (identity padding when
/// `f` is already vertex-wise surjective).
fn representative(f: &Morphism) -> Morphism {
    if f.is_vertexwise_surjective() {
        f.clone()
    } else {
        epi_representative(f)
    }
}

/// Sampled pushout-lift probes: random maps from the source of an epi
/// representative into each vertex projective. If the class of `f` is an
/// epimorphism, every one of them must admit a lift; the converse direction
/// is covered by the constructed witness probe, because lift existence is
/// *not* linear in the probe (the pushout varies with it), so single hom
/// basis vectors can lift even when generic combinations do not.
fn sampled_probes_lift(f: &Morphism, s: &mut Sampler) -> bool {
    let padded = representative(f);
    let q = padded.source.quiver.clone();
    for v in 0..q.vertices {
        let basis = hom_basis(&padded.source, &proj_at(padded.field(), &q, v));
        if basis.is_empty() {
            continue;
        }
        for _ in 0..3 {
            let h = s.combination(&basis);
            if pushout_lift(&padded, &h).unwrap().is_none() {
                return false;
            }
        }
    }
    true
}

/// Exact two-sided check of the pushout-lift characterization: epimorphisms
/// lift every sampled probe; non-epimorphisms come with a constructed probe
/// that provably fails to lift.
fn check_lift_characterization(f: &Morphism, s: &mut Sampler, verdict: bool) {
    if verdict {
        assert!(
            sampled_probes_lift(f, s),
            "epi with a non-lifting probe: {:?} -> {:?}",
            f.source.dims,
            f.target.dims
        );
    } else {
        let failure = epi_witness(f).unwrap();
        assert!(
            pushout_lift(&failure.representative, &failure.probe).unwrap().is_none(),
            "witness probe lifts: {:?} -> {:?}",
            f.source.dims,
            f.target.dims
        );
        assert!(!failure.probe.target.is_zero());
    }
}

#[test]
fn criterion_01_two_vertex_line_is_stably_a_vector_space_category() {
    let t0 = Instant::now();
    let q = Arc::new(Quiver::an(2, ">").unwrap());
    let ind = intervals(field(), &q).unwrap();
    assert_eq!(ind.len(), 3);
    let mut total = 0;
    for (lo_a, hi_a, a) in &ind {
        for (lo_b, hi_b, b) in &ind {
            let dim = StableHom::new(a, b).unwrap().quotient_dim();
            let expect = usize::from((*lo_a, *hi_a) == (0, 0) && (*lo_b, *hi_b) == (0, 0));
            assert_eq!(
                dim, expect,
                "stable hom [{lo_a},{hi_a}] -> [{lo_b},{hi_b}]"
            );
            total += dim;
        }
    }
    // One simple object with a one-dimensional endomorphism algebra: the
    // stable category of the two-vertex line is the category of
    // finite-dimensional vector spaces.
    assert_eq!(total, 1);
    pass(1, "A2 stable category = vector spaces", t0, Some(Duration::from_secs(1)));
}

#[test]
fn criterion_02_equivalence_tables_match_the_shorter_line() {
    let t0 = Instant::now();
    for n in 2..=4 {
        let report = equivalence_table(field(), n).unwrap();
        assert_eq!(report.stable_objects.len(), n * (n - 1) / 2, "n = {n}");
        assert_eq!(report.module_objects.len(), n * (n - 1) / 2, "n = {n}");
        assert!(report.matched, "n = {n}: no hom-table bijection found");
    }
    pass(2, "stable A_n = modules over A_(n-1), n <= 4", t0, Some(Duration::from_secs(10)));
}

#[test]
fn criterion_03_census_abelian_iff_monotone_with_independent_envelopes() {
    let t0 = Instant::now();
    for n in 1..=4 {
        let verdicts = census(field(), n).unwrap();
        assert_eq!(verdicts.len(), 1 << (n - 1));
        for v in &verdicts {
            let q = Arc::new(
                Quiver::an(n, v.algebra.trim_start_matches(&format!("A{n}(")).trim_end_matches(')'))
                    .unwrap(),
            );
            let monotone = q.is_monotone_an().unwrap();
            assert_eq!(v.abelian, monotone, "{}", v.algebra);
            // Second, independent computation: the envelope of the regular
            // module is projective iff every vertex projective has a
            // projective envelope.
            let vertexwise = (0..n).all(|i| {
                is_projective(&injective_envelope(&proj_at(field(), &q, i)).unwrap().rep)
            });
            assert_eq!(v.envelope_projective, vertexwise, "{}", v.algebra);
            assert_eq!(v.abelian, v.envelope_projective, "{}", v.algebra);
        }
    }
    pass(3, "abelian <=> monotone, two envelope routes agree", t0, Some(Duration::from_secs(10)));
}

#[test]
fn criterion_04_criteria_agree_with_the_interval_oracle() {
    let t0 = Instant::now();
    let quivers = line_quivers(3);
    let mut s = Sampler::new(field(), 42);
    let mut sampled = 0;
    for t in 0..520 {
        let q = &quivers[t % quivers.len()];
        let a = s.rep(q, 3);
        let b = s.rep(q, 3);
        let f = s.morphism(&a, &b);
        sampled += 1;

        // Every decision errors out on any route disagreement; Method::Both
        // certifies that the interval sweep actually ran and concurred.
        let mono = is_stable_mono(&f).unwrap();
        let epi = is_stable_epi(&f).unwrap();
        let split_epi = is_stable_split_epi(&f).unwrap();
        let split_mono = is_stable_split_mono(&f).unwrap();
        let iso = is_stable_iso(&f).unwrap();
        for (name, r) in [
            ("mono", &mono),
            ("epi", &epi),
            ("split-epi", &split_epi),
            ("split-mono", &split_mono),
            ("iso", &iso),
        ] {
            assert_eq!(r.method, Method::Both, "{name} skipped the oracle");
        }

        // Definitional cross-checks, independent of the decision routes.
        let (ker_rep, _) = kernel(&f).to_rep();
        assert_eq!(mono.verdict, is_projective(&ker_rep));
        check_lift_characterization(&f, &mut s, epi.verdict);
        assert_eq!(iso.verdict, split_epi.verdict && split_mono.verdict);
        if split_epi.verdict {
            assert!(epi.verdict);
        }
        if split_mono.verdict {
            assert!(mono.verdict);
        }
    }
    assert!(sampled >= 500);
    pass(4, "mono/epi/split/iso vs oracle on 520 morphisms", t0, Some(Duration::from_secs(60)));
}

#[test]
fn criterion_05_pushout_lifts_characterize_epimorphisms() {
    let t0 = Instant::now();
    let quivers = line_quivers(3);
    let mut s = Sampler::new(field(), 4242);
    let mut epis = 0;
    let mut non_epis = 0;
    for t in 0..220 {
        let q = &quivers[t % quivers.len()];
        let m = s.nonzero_rep(q, 3);
        let e = s.module_epi(&m);
        let verdict = is_stable_epi(&e).unwrap().verdict;
        check_lift_characterization(&e, &mut s, verdict);
        if verdict {
            epis += 1;
        } else {
            non_epis += 1;
        }
    }
    assert!(epis + non_epis >= 200);
    assert!(epis > 0, "sampling never produced a stable epi");
    assert!(non_epis > 0, "sampling never produced a failing epi");
    pass(5, "lift-test <=> epi on 220 module epis, witnesses for failures", t0, Some(Duration::from_secs(60)));
}

#[test]
fn criterion_06_normal_epi_decision_matches_the_cokernel_oracle() {
    let t0 = Instant::now();
    let quivers = line_quivers(3);
    let mut s = Sampler::new(field(), 777);
    let mut collected = 0;
    let mut attempts = 0;
    while collected < 200 && attempts < 8000 {
        attempts += 1;
        let q = &quivers[attempts % quivers.len()];
        let m = s.nonzero_rep(q, 3);
        let e = s.module_epi(&m);
        if !is_stable_epi(&e).unwrap().verdict {
            continue;
        }
        collected += 1;
        // The decision runs the basis pushout-splitting sweep and the
        // cokernel universal-property oracle and errors on disagreement.
        let report = is_normal_epi(&e).unwrap();
        assert_eq!(report.method, Method::Both);

        // Random linear combinations of kernel maps must behave like the
        // basis: extension over the kernel inclusion <=> split pushout.
        let ses = Ses::of_epi(&e).unwrap();
        for v in 0..q.vertices {
            let basis = hom_basis(ses.left(), &proj_at(field(), q, v));
            if basis.is_empty() {
                continue;
            }
            let alpha = s.combination(&basis);
            let extends = factor_left(&ses.incl, &alpha).is_some();
            let splits = sequence_splits(&alpha_pushout(&ses, &alpha).unwrap().result).is_some();
            assert_eq!(extends, splits, "vertex {v}");
            if report.verdict {
                assert!(splits, "normal epi with a non-split pushout");
            }
        }
    }
    assert_eq!(collected, 200, "only {collected} stable epis in {attempts} attempts");
    pass(6, "normal-epi vs cokernel oracle on 200 stable epis", t0, Some(Duration::from_secs(120)));
}

#[test]
fn criterion_07_every_non_monotone_small_line_carries_a_witness() {
    let t0 = Instant::now();
    for n in [3, 4] {
        for q in line_quivers(n) {
            if q.is_monotone_an().unwrap() {
                continue;
            }
            let pair = stable_envelope_procedure(field(), &q)
                .unwrap()
                .expect("non-monotone orientation must yield a pair");
            assert!(!pair.projective.is_zero());
            assert!(is_projective(&pair.projective));
            assert!(is_stable_module(&pair.envelope));
            assert!(is_injective(&pair.envelope));

            let w = bimorphism_witness(field(), &q).unwrap();
            assert!(w.mono, "{}", q.describe());
            assert!(w.epi, "{}", q.describe());
            assert!(!w.iso, "{}", q.describe());

            let verdict = classify(field(), &q).unwrap();
            assert!(!verdict.abelian);
            assert!(
                verdict.reasons.iter().any(|r| r.contains("factorization system")),
                "{}: report must state the factorization-system failure",
                q.describe()
            );
        }
    }
    pass(7, "bimorphism witnesses on all non-monotone A3/A4", t0, None);
}

#[test]
fn criterion_08_abelian_side_normality_holds_everywhere() {
    let t0 = Instant::now();
    let quivers: Vec<Arc<Quiver>> = [">", "<", ">>", "<<", ">>>", "<<<"]
        .iter()
        .map(|o| Arc::new(Quiver::an(o.len() + 1, o).unwrap()))
        .collect();
    let mut s = Sampler::new(field(), 2026);

    let mut monos = 0;
    while monos < 200 {
        let q = &quivers[monos % quivers.len()];
        let a = s.nonzero_rep(q, 3);
        let b = s.rep(q, 3);
        let sampled = s.morphism(&a, &b);
        let mono = if is_stable_mono(&sampled).unwrap().verdict {
            sampled
        } else {
            s.subrep(&a).to_rep().1
        };
        // Certificate construction self-validates against the kernel
        // universal-property oracle and errors on any defect.
        let cert = normal_mono_certificate(&mono).unwrap();
        assert!(is_projective(&cert.envelope.rep));
        monos += 1;
    }

    let mut epis = 0;
    let mut attempts = 0;
    while epis < 200 && attempts < 8000 {
        attempts += 1;
        let q = &quivers[attempts % quivers.len()];
        let m = s.nonzero_rep(q, 3);
        let e = s.module_epi(&m);
        if !is_stable_epi(&e).unwrap().verdict {
            continue;
        }
        assert!(
            is_normal_epi(&e).unwrap().verdict,
            "stable epi {:?} -> {:?} on {} is not normal",
            m.dims,
            e.target.dims,
            q.describe()
        );
        epis += 1;
    }
    assert_eq!(epis, 200, "only {epis} stable epis in {attempts} attempts");
    pass(8, "200 kernel certificates + 200 normal epis on monotone lines", t0, None);
}

#[test]
fn criterion_09_torsion_theory_behaves() {
    let t0 = Instant::now();
    let mut quivers = Vec::new();
    for n in 2..=4 {
        quivers.extend(line_quivers(n));
    }
    let mut s = Sampler::new(field(), 909);
    for t in 0..150 {
        let q = &quivers[t % quivers.len()];
        let m = s.nonzero_rep(q, 3);
        let split = canonical_split(&m).unwrap();

        // The torsion-free quotient is projective, and the projection and the
        // torsion inclusion are stable epis; the inclusion is even an iso
        // exactly because the quotient is projective.
        assert!(is_projective(&split.sharp));
        assert!(is_stable_epi(&split.proj).unwrap().verdict);
        assert!(is_stable_epi(&split.incl).unwrap().verdict);
        assert!(is_stable_iso(&split.incl).unwrap().verdict);

        // A module epi whose kernel lies inside the torsion part is a stable
        // epi.
        let e = s.module_epi(&m);
        if torsion_submodule(&m).contains(&kernel(&e), field()) {
            assert!(is_stable_epi(&e).unwrap().verdict);
        }

        // Stable epis cover the torsion of the target.
        let b = s.rep(q, 3);
        let f = s.morphism(&m, &b);
        if is_stable_epi(&f).unwrap().verdict {
            assert!(image(&f).contains(&torsion_submodule(&b), field()));
        }

        // Reflector: precomposition with M -> M-sharp is a bijection of
        // stable classes into any torsion-free target.
        let (x, _) = sharp(&s.rep(q, 3));
        let (msharp, proj) = sharp(&m);
        let from_sharp = StableHom::new(&msharp, &x).unwrap();
        let from_m = StableHom::new(&m, &x).unwrap();
        assert_eq!(from_sharp.quotient_dim(), from_m.quotient_dim());
        let dim = from_sharp.quotient_dim();
        let cols: Vec<Vec<u64>> = (0..dim)
            .map(|j| {
                let mut unit = vec![0; dim];
                unit[j] = 1;
                let rep = from_sharp.from_class(&unit);
                from_m.project(&compose(&rep, &proj).unwrap()).unwrap()
            })
            .collect();
        let mat = Mat::from_cols(cols, dim).unwrap();
        assert_eq!(mat.rank(field()), dim, "precomposition dropped rank");
    }

    // The canonical splitting holds on every interval module of every
    // orientation of lines up to five vertices.
    let mut interval_count = 0;
    for n in 1..=5 {
        for q in line_quivers(n) {
            for (_, _, rep) in intervals(field(), &q).unwrap() {
                let split = canonical_split(&rep).unwrap();
                assert!(is_projective(&split.sharp));
                interval_count += 1;
            }
        }
    }
    assert_eq!(interval_count, 351);
    pass(9, "torsion theory on 150 samples + 351 interval splits", t0, None);
}

#[test]
fn criterion_10_cli_output_is_deterministic_and_self_describing() {
    let t0 = Instant::now();
    let run = |args: &[&str]| {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("stabmod").chain(args.iter().copied());
        let code = stabmod::cli::run(argv, &mut out, &mut err);
        (code, out, err)
    };
    let invocations: Vec<Vec<&str>> = vec![
        vec!["classify", "--an", "3", "--orientation", "><"],
        vec!["census", "--an", "4"],
        vec!["equivalence", "--n", "4"],
        vec!["verify", "--suite", "S-epi", "--trials", "12", "--seed", "42"],
        vec!["witness", "--an", "4", "--orientation", "<><"],
        vec!["classify", "--an", "3", "--orientation", "><", "--format", "text"],
    ];
    for args in &invocations {
        let (c1, o1, e1) = run(args);
        let (c2, o2, e2) = run(args);
        assert_eq!(c1, c2, "{args:?}");
        assert_eq!(o1, o2, "stdout drifted for {args:?}");
        assert_eq!(e1, e2, "stderr drifted for {args:?}");
        assert_eq!(c1, 0, "{args:?}");
    }
    let (_, out, _) = run(&["verify", "--suite", "S-epi", "--trials", "12", "--seed", "42"]);
    let report: stabmod::verdict::SuiteReport =
        serde_json::from_str(std::str::from_utf8(&out).unwrap()).unwrap();
    assert_eq!(report.seed, 42);
    assert_eq!(report.field, 101);
    assert!(report.passed);
    let raw = String::from_utf8(out).unwrap();
    assert!(raw.contains("\"seed\":42") && raw.contains("\"field\":101"));
    pass(10, "byte-identical CLI reruns, reports embed seed and field", t0, None);
}
