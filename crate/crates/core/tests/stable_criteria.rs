//! Hand-checked stable-category verdicts, the bimorphism phenomenon, and
//! agreement of all decision routes on random morphisms.

use stabmod::linalg::Fp;
use stabmod::quiver::Quiver;
use stabmod::rep::{
    compose, hom_basis, inj_at, is_projective, proj_at, quotient, simple_at, socle, Morphism,
};
use stabmod::sample::Sampler;
use stabmod::stable::{
    epi_representative, epi_witness, is_stable_epi, is_stable_iso, is_stable_mono,
    is_stable_split_epi, is_stable_split_mono, is_stable_zero, pushout_lift, stable_kernel,
    Method, StableHom, Witness,
};
use stabmod::Error;
use std::sync::Arc;

fn f() -> Fp {
    Fp::default_field()
}

fn an(n: usize, o: &str) -> Arc<Quiver> {
    Arc::new(Quiver::an(n, o).unwrap())
}

#[test]
fn stable_hom_dimensions() {
    let q = an(2, ">");
    let s1 = simple_at(f(), &q, 0);
    let p1 = proj_at(f(), &q, 0);
    // End(S_1) is one-dimensional and nothing factors through a projective
    let sh = StableHom::new(&s1, &s1).unwrap();
    assert_eq!(sh.dim_hom(), 1);
    assert_eq!(sh.trivial_dim(), 0);
    assert_eq!(sh.quotient_dim(), 1);
    // maps out of a projective are all trivial
    let sh = StableHom::new(&p1, &s1).unwrap();
    assert_eq!(sh.dim_hom(), 1);
    assert_eq!(sh.quotient_dim(), 0);
    // maps into a projective are all trivial
    let s2 = simple_at(f(), &q, 1);
    let sh = StableHom::new(&s2, &p1).unwrap();
    assert_eq!(sh.dim_hom(), 1);
    assert_eq!(sh.quotient_dim(), 0);
}

#[test]
fn triviality_comes_with_a_factorization() {
    let q = an(2, ">");
    let p1 = proj_at(f(), &q, 0);
    let s1 = simple_at(f(), &q, 0);
    let pi = hom_basis(&p1, &s1).remove(0);
    let report = is_stable_zero(&pi).unwrap();
    assert!(report.verdict);
    match report.witness {
        Some(Witness::Factorization(fact)) => {
            assert!(is_projective(&fact.through));
            assert_eq!(compose(&fact.right, &fact.left).unwrap(), pi);
        }
        other => panic!("expected a factorization, got {other:?}"),
    }
    // the identity of a non-projective module is not trivial
    let id = Morphism::identity(&s1);
    assert!(!is_stable_zero(&id).unwrap().verdict);
}

#[test]
fn identity_of_simple_is_an_isomorphism() {
    let q = an(2, ">");
    let s1 = simple_at(f(), &q, 0);
    let id = Morphism::identity(&s1);
    for (report, name) in [
        (is_stable_mono(&id).unwrap(), "mono"),
        (is_stable_epi(&id).unwrap(), "epi"),
        (is_stable_split_mono(&id).unwrap(), "split mono"),
        (is_stable_split_epi(&id).unwrap(), "split epi"),
        (is_stable_iso(&id).unwrap(), "iso"),
    ] {
        assert!(report.verdict, "{name} should hold for the identity");
        assert_eq!(report.method, Method::Both, "interval sweep must have run");
    }
}

#[test]
fn cover_projection_is_mono_but_not_epi() {
    // π : P_1 -> S_1 over 1 -> 2 is stably zero; its kernel is projective, so
    // it is a monomorphism (the source is stably zero), but it is not an
    // epimorphism: the identity test map on S_1 survives.
    let q = an(2, ">");
    let p1 = proj_at(f(), &q, 0);
    let s1 = simple_at(f(), &q, 0);
    let pi = hom_basis(&p1, &s1).remove(0);
    assert!(is_stable_zero(&pi).unwrap().verdict);
    assert!(is_stable_mono(&pi).unwrap().verdict);
    let epi = is_stable_epi(&pi).unwrap();
    assert!(!epi.verdict);
    assert!(matches!(epi.witness, Some(Witness::FailingInterval { .. })));
    assert!(!is_stable_iso(&pi).unwrap().verdict);

    // the witness machinery: a probe with projective codomain that does not
    // lift over the pushout
    let failure = epi_witness(&pi).unwrap();
    assert!(is_projective(&failure.probe.target));
    assert!(failure.representative.is_vertexwise_surjective());
    assert!(pushout_lift(&failure.representative, &failure.probe)
        .unwrap()
        .is_none());
}

#[test]
fn quotient_by_socle_is_a_bimorphism_not_an_iso() {
    // Over 1 -> 2 <- 3, the projection p : I_2 -> I_2 / soc(I_2) is both a
    // monomorphism and an epimorphism in the stable category, yet not an
    // isomorphism — the stable category of this orientation is not abelian.
    let q = an(3, "><");
    let i2 = inj_at(f(), &q, 1);
    let (_, p) = quotient(&i2, &socle(&i2));
    assert!(is_stable_mono(&p).unwrap().verdict, "mono");
    assert!(is_stable_epi(&p).unwrap().verdict, "epi");
    assert!(!is_stable_split_mono(&p).unwrap().verdict, "split mono");
    assert!(!is_stable_split_epi(&p).unwrap().verdict, "split epi");
    assert!(!is_stable_iso(&p).unwrap().verdict, "iso");

    // its stable kernel is projective, hence stably zero — yet p is not monic
    // in the module category, which is exactly the bimorphism phenomenon
    let (ker, _) = stable_kernel(&p);
    assert!(is_projective(&ker));
    assert!(!p.is_vertexwise_injective());
}

#[test]
fn equioriented_socle_quotient_is_mono_but_not_epi() {
    // Over 1 -> 2 -> 3 the projection P_1 -> P_1/soc has projective kernel
    // S_3 = P_3, so it is a stable monomorphism. Its source is projective
    // (stably zero) while the target is a stable module, so it cannot be an
    // epimorphism.
    let q = an(3, ">>");
    let p1 = proj_at(f(), &q, 0);
    let (_, pr) = quotient(&p1, &socle(&p1));
    assert!(is_stable_mono(&pr).unwrap().verdict);
    assert!(!is_stable_epi(&pr).unwrap().verdict);
    assert!(!is_stable_iso(&pr).unwrap().verdict);
}

#[test]
fn pushout_lift_decides_liftability() {
    let q = an(2, ">");
    let p1 = proj_at(f(), &q, 0);
    let s1 = simple_at(f(), &q, 0);
    let pi = hom_basis(&p1, &s1).remove(0);
    // h = identity on P_1 has projective codomain and does not lift: π is
    // not a stable epimorphism
    let id = Morphism::identity(&p1);
    assert!(pushout_lift(&pi, &id).unwrap().is_none());
    // the zero probe always lifts
    let zero = Morphism::zero(&p1, &p1);
    let lift = pushout_lift(&pi, &zero).unwrap();
    assert!(lift.is_some());
    // lifting against a non-surjective map is a usage error
    let not_epi = Morphism::zero(&s1, &p1);
    assert!(matches!(pushout_lift(&not_epi, &id), Err(Error::NotEpi)));
}

#[test]
fn epi_witness_rejects_actual_epis() {
    let q = an(3, "><");
    let i2 = inj_at(f(), &q, 1);
    let (_, p) = quotient(&i2, &socle(&i2));
    assert!(matches!(epi_witness(&p), Err(Error::IsActuallyEpi)));
}

#[test]
fn padding_preserves_the_stable_class() {
    let q = an(3, "<>");
    let mut s = Sampler::new(f(), 11);
    for _ in 0..15 {
        let a = s.rep(&q, 2);
        let b = s.rep(&q, 2);
        let m = s.morphism(&a, &b);
        let padded = epi_representative(&m);
        assert!(padded.is_vertexwise_surjective());
        // padding cannot change any verdict
        assert_eq!(
            is_stable_epi(&m).unwrap().verdict,
            is_stable_epi(&padded).unwrap().verdict
        );
        assert_eq!(
            is_stable_iso(&m).unwrap().verdict,
            is_stable_iso(&padded).unwrap().verdict
        );
    }
}

#[test]
fn all_routes_agree_on_random_morphisms() {
    // every criterion call compares the structural route, the definitional
    // solve, and the interval sweep internally; any disagreement surfaces as
    // a mismatch error
    for o in ["<<", "<>", "><", ">>"] {
        let q = an(3, o);
        let mut s = Sampler::new(f(), 0xA11CE);
        for _ in 0..15 {
            let a = s.rep(&q, 2);
            let b = s.rep(&q, 2);
            let m = s.morphism(&a, &b);
            for (name, r) in [
                ("mono", is_stable_mono(&m)),
                ("epi", is_stable_epi(&m)),
                ("split-mono", is_stable_split_mono(&m)),
                ("split-epi", is_stable_split_epi(&m)),
                ("iso", is_stable_iso(&m)),
            ] {
                let report = r.unwrap_or_else(|e| panic!("{o} {name}: {e}"));
                assert_eq!(report.method, Method::Both);
            }
        }
    }
}

#[test]
fn epi_verdict_matches_probe_liftability() {
    // a surjective module map is a stable epimorphism exactly when every
    // probe into a projective lifts over the glued square; for failures the
    // witness supplies a probe that does not lift
    for o in ["<<", "><"] {
        let q = an(3, o);
        let mut s = Sampler::new(f(), 7);
        for _ in 0..8 {
            let m = s.nonzero_rep(&q, 2);
            let epi = s.module_epi(&m);
            let verdict = is_stable_epi(&epi).unwrap().verdict;
            let mut probes: Vec<Morphism> = Vec::new();
            for v in 0..3 {
                let p = proj_at(f(), &q, v);
                let basis = hom_basis(&m, &p);
                if !basis.is_empty() {
                    probes.push(s.combination(&basis));
                }
                probes.extend(basis);
            }
            let all_lift = probes
                .iter()
                .all(|h| pushout_lift(&epi, h).unwrap().is_some());
            if verdict {
                assert!(all_lift, "{o}: a probe failed to lift under an epi");
            } else {
                let failure = epi_witness(&epi).unwrap();
                assert!(pushout_lift(&epi, &failure.probe).unwrap().is_none());
            }
        }
    }
}

#[test]
fn witnesses_certify_their_verdicts() {
    let q = an(3, "><");
    let mut s = Sampler::new(f(), 99);
    let mut seen_section = 0;
    let mut seen_retraction = 0;
    for _ in 0..40 {
        let a = s.rep(&q, 2);
        let b = s.rep(&q, 2);
        let m = s.morphism(&a, &b);
        if let Some(Witness::Section(sec)) = is_stable_split_epi(&m).unwrap().witness {
            let sh = StableHom::new(&b, &b).unwrap();
            let diff = compose(&m, &sec).unwrap().sub(&Morphism::identity(&b));
            assert!(sh.is_trivial(&diff).unwrap());
            seen_section += 1;
        }
        if let Some(Witness::Retraction(ret)) = is_stable_split_mono(&m).unwrap().witness {
            let sh = StableHom::new(&a, &a).unwrap();
            let diff = compose(&ret, &m).unwrap().sub(&Morphism::identity(&a));
            assert!(sh.is_trivial(&diff).unwrap());
            seen_retraction += 1;
        }
    }
    assert!(seen_section > 0, "sampling should hit some split epis");
    assert!(seen_retraction > 0, "sampling should hit some split monos");
}
