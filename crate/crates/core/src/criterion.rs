//! The compact-Cartan test `-sigma|_{c_R} in W` and strong regularity in
//! the extended Weyl group `<W, -sigma>`.
//!
//! On `c_R*` we have `-sigma = theta`, so every test below is phrased in
//! terms of the involution matrix.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::realform::CartanInvolution;
use crate::rootdata::{RootSystem, Weight, WeylElement};
use crate::scalar::Scalar;
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CosetStructure {
    /// `-sigma` lies in `W`, so the extended group is `W` itself.
    EqualsW,
    /// `W_ext = W ⊔ W (-sigma)`.
    TwoCosets,
}

#[derive(Clone, Debug)]
pub struct ExtendedWeylGroup<T: Scalar = Rational> {
    pub minus_sigma: Matrix<T>,
    pub minus_sigma_in_w: Option<WeylElement<T>>,
    pub coset_structure: CosetStructure,
}

impl<T: Scalar> ExtendedWeylGroup<T> {
    pub fn new(r: &RootSystem<T>, inv: &CartanInvolution<T>) -> Self {
        let witness = theta_in_weyl(r, inv);
        ExtendedWeylGroup {
            minus_sigma: inv.minus_sigma().clone(),
            coset_structure: if witness.is_some() {
                CosetStructure::EqualsW
            } else {
                CosetStructure::TwoCosets
            },
            minus_sigma_in_w: witness,
        }
    }

    /// Order, given `|W|`.
    pub fn order(&self, order_w: usize) -> usize {
        match self.coset_structure {
            CosetStructure::EqualsW => order_w,
            CosetStructure::TwoCosets => 2 * order_w,
        }
    }

    /// `(-sigma)^2 = 1`, `-sigma` conjugates each simple reflection to the
    /// reflection in the image root, and the witness (if any) is `-sigma`.
    pub fn check_invariants(&self, r: &RootSystem<T>) -> bool {
        let m = &self.minus_sigma;
        let involutive = m.matmul(m).is_identity();
        let normalizes = (0..r.rank()).all(|i| {
            let image = Weight(m.apply(&r.simple_root(i).0));
            r.is_root(&image)
                && m.matmul(r.reflection_matrix(i)).matmul(m) == r.root_reflection_matrix(&image)
        });
        let witness_ok = self.minus_sigma_in_w.as_ref().is_none_or(|w| &w.matrix == m);
        involutive && normalizes && witness_ok
    }
}

/// The Weyl group element equal to `theta`, if there is one.
///
/// `rho` is regular, so at most one `w` satisfies `w rho = theta rho`; it is
/// read off from the dominant chase of `theta rho` and then compared with
/// `theta` entrywise.
pub fn theta_in_weyl<T: Scalar>(r: &RootSystem<T>, inv: &CartanInvolution<T>) -> Option<WeylElement<T>> {
    let v = r.rho();
    let u = inv.apply(v);
    let chase = r.dominant_representative(&u);
    if &chase.dominant != v {
        return None;
    }
    let w = chase.element.inverse();
    (&w.matrix == inv.theta()).then_some(w)
}

#[derive(Clone, Debug)]
pub struct CriterionVerdict<T: Scalar = Rational> {
    pub minus_sigma_in_weyl: bool,
    pub witness: Option<WeylElement<T>>,
    /// Equal to `minus_sigma_in_weyl`.
    pub compact_cartan: bool,
    /// `rank k == rank g`, from catalog data.
    pub oracle_compact_rank_equal: Option<bool>,
    pub consistent: Option<bool>,
}

pub fn compact_cartan_verdict<T: Scalar>(
    r: &RootSystem<T>,
    inv: &CartanInvolution<T>,
    oracle_compact_rank: Option<usize>,
) -> CriterionVerdict<T> {
    let witness = theta_in_weyl(r, inv);
    let yes = witness.is_some();
    let oracle = oracle_compact_rank.map(|k| k == r.rank());
    CriterionVerdict {
        minus_sigma_in_weyl: yes,
        witness,
        compact_cartan: yes,
        oracle_compact_rank_equal: oracle,
        consistent: oracle.map(|o| o == yes),
    }
}

/// Serialized verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerdictDocument {
    pub form_id: String,
    pub minus_sigma_in_weyl: bool,
    /// 1-based simple reflection indices, leftmost acts last.
    pub witness_word: Option<Vec<usize>>,
    pub compact_cartan: bool,
    pub oracle: Option<bool>,
    pub consistent: Option<bool>,
}

impl VerdictDocument {
    pub fn new<T: Scalar>(form_id: &str, v: &CriterionVerdict<T>) -> Self {
        VerdictDocument {
            form_id: form_id.to_string(),
            minus_sigma_in_weyl: v.minus_sigma_in_weyl,
            witness_word: v.witness.as_ref().map(|w| w.word.iter().map(|i| i + 1).collect()),
            compact_cartan: v.compact_cartan,
            oracle: v.oracle_compact_rank_equal,
            consistent: v.consistent,
        }
    }
}

#[derive(Clone, Debug)]
pub struct ExtendedStabilizer<T: Scalar = Rational> {
    /// Generators of `Stab_{W_ext}(lambda)` as matrices.
    pub generators: Vec<Matrix<T>>,
    /// True iff `lambda` is strongly regular.
    pub trivial: bool,
}

/// Stabilizer of `lambda` in `<W, -sigma>`.
pub fn extended_stabilizer<T: Scalar>(
    r: &RootSystem<T>,
    inv: &CartanInvolution<T>,
    lambda: &Weight<T>,
) -> ExtendedStabilizer<T> {
    let st = r.stabilizer_generators(lambda);
    let mut generators: Vec<Matrix<T>> = st.generators.into_iter().map(|g| g.matrix).collect();
    if theta_in_weyl(r, inv).is_none() {
        if let Some(w) = twisting_element(r, inv, lambda) {
            // w^-1 theta fixes lambda and lies in the nontrivial coset
            generators.push(w.inverse().matrix.matmul(inv.theta()));
        }
    }
    ExtendedStabilizer { trivial: generators.is_empty(), generators }
}

/// `w` with `w lambda = theta lambda`, when `theta lambda` lies in `W lambda`.
pub fn twisting_element<T: Scalar>(
    r: &RootSystem<T>,
    inv: &CartanInvolution<T>,
    lambda: &Weight<T>,
) -> Option<WeylElement<T>> {
    let a = r.dominant_representative(lambda);
    let b = r.dominant_representative(&inv.apply(lambda));
    (a.dominant == b.dominant).then(|| b.element.inverse().compose(&a.element))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InferenceReport {
    /// `-sigma lambda` lies in `W lambda` (checked, never assumed).
    pub hypothesis: bool,
    pub strongly_regular: bool,
    /// `theta_in_weyl` returned a witness.
    pub witness_found: bool,
    /// For strongly regular `lambda`: the element `w` with
    /// `w lambda = -sigma lambda` equals `-sigma` entrywise.
    pub twisting_element_is_minus_sigma: Option<bool>,
    /// `strongly_regular => witness_found`, and the two certificates agree.
    pub implication_holds: bool,
}

/// Checks "strongly regular discrete-series character implies compact
/// Cartan" on a concrete `lambda`.
pub fn sr_implies_compact_cartan<T: Scalar>(
    r: &RootSystem<T>,
    inv: &CartanInvolution<T>,
    lambda: &Weight<T>,
) -> Result<InferenceReport> {
    r.check_rank(lambda)?;
    let w = twisting_element(r, inv, lambda).ok_or_else(|| {
        Error::HypothesisFailed(format!("-sigma({lambda}) is not in the Weyl orbit of {lambda}"))
    })?;
    let sr = extended_stabilizer(r, inv, lambda).trivial;
    let witness = theta_in_weyl(r, inv).is_some();
    let twisting = sr.then(|| &w.matrix == inv.theta());
    let implication_holds = !sr || (witness && twisting == Some(true));
    Ok(InferenceReport {
        hypothesis: true,
        strongly_regular: sr,
        witness_found: witness,
        twisting_element_is_minus_sigma: twisting,
        implication_holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realform::{catalog_form, validate_involution, RealForm, RealFormSpec};
    use num_rational::Rational64;

    fn form(s: &str) -> RealForm<Rational64> {
        catalog_form(&RealFormSpec::Catalog(s.parse().unwrap())).unwrap()
    }

    #[test]
    fn theta_in_weyl_examples() {
        let r = RootSystem::<Rational64>::from_type_str("B2").unwrap();
        let inv = validate_involution(&r, &Matrix::identity(2)).unwrap();
        assert!(theta_in_weyl(&r, &inv).unwrap().is_identity());

        let f = form("sl(2,R)");
        let w = theta_in_weyl(&f.root_system, &f.involution).unwrap();
        assert_eq!(w, WeylElement::simple(&f.root_system, 0));

        let f = form("sl(3,R)");
        assert!(theta_in_weyl(&f.root_system, &f.involution).is_none());
    }

    #[test]
    fn verdict_examples() {
        let f = form("su(2,1)");
        let v = compact_cartan_verdict(&f.root_system, &f.involution, f.compact_rank);
        assert!(v.compact_cartan);
        assert_eq!(v.consistent, Some(true));

        let f = form("sl(3,R)");
        let v = compact_cartan_verdict(&f.root_system, &f.involution, f.compact_rank);
        assert!(!v.compact_cartan);
        assert_eq!(v.oracle_compact_rank_equal, Some(false));
        assert_eq!(v.consistent, Some(true));

        let f = form("so(3,3)");
        assert!(!compact_cartan_verdict(&f.root_system, &f.involution, None).compact_cartan);
    }

    #[test]
    fn extended_stabilizer_examples() {
        let f = form("sl(2,R)");
        let (r, inv) = (&f.root_system, &f.involution);
        assert!(extended_stabilizer(r, inv, r.fundamental_weight(0)).trivial);

        let f = form("sl(3,R)");
        let (r, inv) = (&f.root_system, &f.involution);
        let st = extended_stabilizer(r, inv, r.rho());
        assert!(!st.trivial);
        assert_eq!(st.generators.len(), 1);
        assert_eq!(Weight(st.generators[0].apply(&r.rho().0)), r.rho().clone());

        let lam = r.from_fundamental(&[Rational64::from_int(1), Rational64::from_int(2)]);
        assert!(extended_stabilizer(r, inv, &lam).trivial);
    }

    #[test]
    fn inference_examples() {
        let f = form("sl(2,R)");
        let rep = sr_implies_compact_cartan(&f.root_system, &f.involution, f.root_system.fundamental_weight(0)).unwrap();
        assert!(rep.strongly_regular && rep.witness_found && rep.implication_holds);

        let f = form("su(2,1)");
        let rep = sr_implies_compact_cartan(&f.root_system, &f.involution, f.root_system.rho()).unwrap();
        assert!(rep.implication_holds);

        let f = form("sl(3,R)");
        let r = &f.root_system;
        let lam = r.from_fundamental(&[Rational64::from_int(1), Rational64::from_int(2)]);
        assert!(matches!(
            sr_implies_compact_cartan(r, &f.involution, &lam),
            Err(Error::HypothesisFailed(_))
        ));
    }

    #[test]
    fn extended_group_invariants() {
        for id in ["sl(3,R)", "su(2,1)", "so(5,3)", "split(E6)", "sp(3,R)"] {
            let f = form(id);
            let g = ExtendedWeylGroup::new(&f.root_system, &f.involution);
            assert!(g.check_invariants(&f.root_system), "{id}");
        }
    }
}
