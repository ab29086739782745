use std::collections::HashSet;

use cartan_ds::criterion::extended_stabilizer;
use cartan_ds::exponents::{dominates, leading_exponents, orbit_plus, DualChamber, FormalDSDatum};
use cartan_ds::realform::{catalog_form, restricted_roots, RealForm, RealFormSpec};
use cartan_ds::rootdata::{generated_group, Weight, WeylElement};
use cartan_ds::translation::{translate_line, weight_spectrum, TranslationConfig};
use cartan_ds::{Rational64, RootSystem64, Scalar, Weight64};
use proptest::prelude::*;

const TYPES: &[&str] = &["A1", "A2", "A3", "B2", "B3", "C3", "G2", "A1xA1", "A2xB2", "D4"];
const FORMS: &[&str] = &["sl(2,R)", "sl(3,R)", "su(2,1)", "su(3,1)", "sp(2,R)", "so(3,2)", "so(4,1)", "split(G2)"];

fn q(n: i64, d: i64) -> Rational64 {
    Rational64::new(n, d)
}

fn rational() -> impl Strategy<Value = Rational64> {
    (-6i64..=6, 1i64..=3).prop_map(|(n, d)| q(n, d))
}

fn weight(rank: usize) -> impl Strategy<Value = Weight64> {
    prop::collection::vec(rational(), rank).prop_map(Weight)
}

fn typed_weight() -> impl Strategy<Value = (RootSystem64, Weight64)> {
    prop::sample::select(TYPES).prop_flat_map(|t| {
        let r = RootSystem64::from_type_str(t).unwrap();
        let n = r.rank();
        (Just(r), weight(n))
    })
}

fn typed_weight_word() -> impl Strategy<Value = (RootSystem64, Weight64, Vec<usize>)> {
    typed_weight().prop_flat_map(|(r, w)| {
        let n = r.rank();
        (Just(r), Just(w), prop::collection::vec(0..n, 0..12))
    })
}

fn form(id: &str) -> RealForm<Rational64> {
    catalog_form(&RealFormSpec::Catalog(id.parse().unwrap())).unwrap()
}

fn form_weight() -> impl Strategy<Value = (RealForm<Rational64>, Weight64)> {
    prop::sample::select(FORMS).prop_flat_map(|id| {
        let f = form(id);
        let n = f.root_system.rank();
        (Just(f), weight(n))
    })
}

fn dominant_integral(r: &RootSystem64, labels: &[i64]) -> Weight64 {
    let c: Vec<Rational64> = labels.iter().map(|&x| Rational64::from_int(x)).collect();
    r.from_fundamental(&c)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn orbit_times_stabilizer_is_group_order((r, lam) in typed_weight()) {
        let order = r.enumerate_weyl(1_000_000).unwrap().len();
        let orbit = r.weyl_orbit(&lam, 1_000_000).unwrap();
        let gens: Vec<_> = r.stabilizer_generators(&lam).generators.into_iter().map(|g| g.matrix).collect();
        let stab = generated_group(r.rank(), &gens, 1_000_000).unwrap();
        prop_assert_eq!(orbit.len() * stab.len(), order);
        for g in &stab {
            prop_assert_eq!(&Weight(g.apply(&lam.0)), &lam);
        }
    }

    #[test]
    fn dominant_representative_is_idempotent_and_constant((r, lam, word) in typed_weight_word()) {
        let chase = r.dominant_representative(&lam);
        prop_assert!(r.is_dominant(&chase.dominant));
        prop_assert_eq!(&chase.element.apply(&lam).unwrap(), &chase.dominant);
        prop_assert_eq!(&r.dominant_representative(&chase.dominant).dominant, &chase.dominant);
        let w = WeylElement::from_word(&r, &word);
        let moved = w.apply(&lam).unwrap();
        prop_assert_eq!(r.dominant_representative(&moved).dominant, chase.dominant);
    }

    #[test]
    fn longest_element_is_an_involution((r, lam) in typed_weight()) {
        let w0 = r.longest_element();
        prop_assert!(w0.compose(&w0).is_identity());
        prop_assert_eq!(w0.apply(&w0.apply(&lam).unwrap()).unwrap(), lam);
        prop_assert_eq!(w0.apply(r.rho()).unwrap(), r.rho().neg());
    }

    #[test]
    fn orbits_are_closed_under_reflections((r, lam) in typed_weight()) {
        let orbit: HashSet<Weight64> = r.weyl_orbit(&lam, 1_000_000).unwrap().into_iter().collect();
        prop_assert!(orbit.contains(&lam));
        for nu in &orbit {
            prop_assert_eq!(r.norm_sq(nu), r.norm_sq(&lam));
            for i in 0..r.rank() {
                prop_assert!(orbit.contains(&r.reflect(i, nu)));
            }
        }
    }

    #[test]
    fn reflections_permute_roots((r, word) in typed_weight_word().prop_map(|(r, _, w)| (r, w))) {
        let w = WeylElement::from_word(&r, &word);
        prop_assert!(r.permutes_roots(&w.matrix));
        prop_assert!(r.preserves_pairing(&w.matrix));
    }

    #[test]
    fn restriction_is_odd_under_theta((f, lam) in form_weight()) {
        let inv = &f.involution;
        let a = inv.restrict(&lam);
        let b = inv.restrict(&inv.apply(&lam));
        let neg: Vec<Rational64> = a.iter().map(|x| -*x).collect();
        prop_assert_eq!(&b, &neg);
        prop_assert_eq!(inv.restrict(&inv.lift(&a)), a);
    }

    #[test]
    fn margins_scale_linearly((f, lam) in form_weight(), c in 1i64..=20) {
        let rrs = restricted_roots(&f.root_system, &f.involution);
        let chamber = DualChamber::new(&rrs);
        let v = f.involution.restrict(&lam);
        let s = Rational64::from_int(c);
        let scaled: Vec<Rational64> = v.iter().map(|x| x * s).collect();
        let m1 = chamber.cone_position(&v);
        let m2 = chamber.cone_position(&scaled);
        prop_assert_eq!(m2.margin, m1.margin.scale(&s));
        prop_assert_eq!(m2.position, m1.position);
    }

    #[test]
    fn leading_exponents_form_an_antichain(
        id in prop::sample::select(FORMS),
        pts in prop::collection::vec(prop::collection::vec(-4i64..=4, 3), 1..8),
    ) {
        let f = form(id);
        let rrs = restricted_roots(&f.root_system, &f.involution);
        let n = rrs.a_rank();
        let s: Vec<Vec<Rational64>> =
            pts.iter().map(|p| p[..n].iter().map(|&x| Rational64::from_int(x)).collect()).collect();
        let lead = leading_exponents(&rrs, &s);
        prop_assert!(!lead.is_empty());
        for (i, a) in lead.iter().enumerate() {
            for (j, b) in lead.iter().enumerate() {
                if i != j {
                    prop_assert!(!dominates(&rrs, a, b));
                }
            }
        }
        for x in &s {
            prop_assert!(lead.iter().any(|l| dominates(&rrs, l, x)));
        }
        prop_assert_eq!(leading_exponents(&rrs, &lead), lead);
    }

    #[test]
    fn orbit_plus_selects_negative_interior((f, lam) in form_weight()) {
        let r = &f.root_system;
        let inv = &f.involution;
        let plus: HashSet<Weight64> = orbit_plus(r, inv, &lam, 1_000_000).unwrap().into_iter().collect();
        for nu in r.weyl_orbit(&lam, 1_000_000).unwrap() {
            let x = inv.restrict(&nu);
            let inside = !x.is_empty() && x.iter().all(|c| *c < Rational64::from_int(0));
            prop_assert_eq!(plus.contains(&nu), inside);
        }
    }

    #[test]
    fn extended_trivial_implies_regular((f, lam) in form_weight()) {
        let r = &f.root_system;
        if extended_stabilizer(r, &f.involution, &lam).trivial {
            prop_assert!(r.is_regular(&lam));
        }
        if !r.is_regular(&lam) {
            prop_assert!(!extended_stabilizer(r, &f.involution, &lam).trivial);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn spectra_are_stable_and_bounded(
        t in prop::sample::select(&["A2", "B2", "G2", "A3", "C3"][..]),
        labels in prop::collection::vec(0i64..=2, 3),
    ) {
        let r = RootSystem64::from_type_str(t).unwrap();
        let mu = dominant_integral(&r, &labels[..r.rank()]);
        let spec: HashSet<Weight64> = weight_spectrum(&r, &mu, 1_000_000).unwrap().into_iter().collect();
        let orbit: HashSet<Weight64> = r.weyl_orbit(&mu, 1_000_000).unwrap().into_iter().collect();
        let top = r.norm_sq(&mu);
        for nu in &spec {
            for i in 0..r.rank() {
                prop_assert!(spec.contains(&r.reflect(i, nu)));
            }
            let n = r.norm_sq(nu);
            prop_assert!(n <= top);
            prop_assert_eq!(n == top, orbit.contains(nu));
        }
        prop_assert!(orbit.is_subset(&spec));
    }

    #[test]
    fn translate_line_scales_margins(
        id in prop::sample::select(&["sl(2,R)", "su(2,1)", "sp(2,R)", "sl(3,R)"][..]),
        k in 0u64..=10,
        n in 1u64..=3,
    ) {
        let f = form(id);
        let r = &f.root_system;
        let inv = &f.involution;
        let rrs = restricted_roots(r, inv);
        let chamber = DualChamber::new(&rrs);
        let d = FormalDSDatum::antidominant(r, inv, r.rho().clone(), id, 1_000_000).unwrap();
        let cfg = TranslationConfig { n, ..TranslationConfig::default() };
        let line = translate_line(r, inv, &d, k, &cfg).unwrap();
        let s = Rational64::from_int((k * n + 1) as i64);
        prop_assert_eq!(&line.lambda, &d.lambda.scale(&s));
        for (e, e2) in d.exponents.iter().zip(&line.exponents) {
            prop_assert_eq!(chamber.cone_position(e2).margin, chamber.cone_position(e).margin.scale(&s));
        }
    }

    #[test]
    fn canonical_strings_round_trip(x in rational()) {
        let s = x.to_canonical();
        prop_assert_eq!(Rational64::parse_canonical(&s).unwrap(), x);
        prop_assert!(!s.contains('+'));
    }
}
