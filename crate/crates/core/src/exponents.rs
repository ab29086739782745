//! Formal exponent calculus on `a*`: the dual chamber, the monoid order,
//! leading exponents, the square-integrability test and `[Lambda]^+`.
//!
//! Vectors in `a*` are coefficient vectors with respect to the simple
//! restricted roots.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::realform::{CartanInvolution, RestrictedRootSystem};
use crate::rootdata::{RootSystem, Weight};
use crate::scalar::{Scalar, SignedRoot};
use crate::Rational;

/// `C = sum R_{>=0} alpha` over the positive restricted roots.
#[derive(Clone, Debug)]
pub struct DualChamber<T: Scalar = Rational> {
    generators: Vec<Vec<T>>,
    /// `X_j` represented in `a*` through the pairing: `(X_j, beta_i) = delta_ij`.
    facet_rays: Vec<Vec<T>>,
    ray_norms_sq: Vec<T>,
    fulldim: bool,
    gram: Matrix<T>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Position {
    NegInterior,
    BoundaryOrOutside,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConePosition<T: Scalar = Rational> {
    pub position: Position,
    /// `min_j -v(X_j) / |X_j|`, carried as a signed square root.
    pub margin: SignedRoot<T>,
}

impl<T: Scalar> DualChamber<T> {
    pub fn new(rrs: &RestrictedRootSystem<T>) -> Self {
        let n = rrs.a_rank();
        let gram = rrs.gram().clone();
        let inv = gram.inverse().expect("restricted Gram matrix is positive definite");
        let facet_rays = (0..n).map(|j| inv.column(j)).collect();
        let ray_norms_sq = (0..n).map(|j| inv[(j, j)].clone()).collect();
        DualChamber {
            generators: rrs.positive_roots().iter().map(|a| a.coords.clone()).collect(),
            facet_rays,
            ray_norms_sq,
            fulldim: n > 0,
            gram,
        }
    }

    pub fn a_rank(&self) -> usize {
        self.gram.rows()
    }

    pub fn generators(&self) -> &[Vec<T>] {
        &self.generators
    }

    pub fn facet_rays(&self) -> &[Vec<T>] {
        &self.facet_rays
    }

    pub fn is_fulldim(&self) -> bool {
        self.fulldim
    }

    /// `v(X_j)`.
    pub fn evaluate(&self, v: &[T], j: usize) -> T {
        linalg::bilinear(&self.gram, v, &self.facet_rays[j])
    }

    /// Membership through the ray description.
    pub fn contains(&self, v: &[T]) -> bool {
        (0..self.a_rank()).all(|j| !self.evaluate(v, j).is_negative())
    }

    /// Membership through the generator description: `v` is a nonnegative
    /// combination of the indecomposable generators.
    pub fn contains_by_generators(&self, v: &[T]) -> bool {
        let set: HashSet<&Vec<T>> = self.generators.iter().collect();
        let simple: Vec<Vec<T>> = self
            .generators
            .iter()
            .filter(|g| !self.generators.iter().any(|h| set.contains(&linalg::sub_vec(g, h))))
            .cloned()
            .collect();
        let n = self.a_rank();
        if simple.len() != n {
            return false;
        }
        let b = Matrix::from_columns(n, &simple);
        match b.inverse() {
            Some(bi) => bi.apply(v).iter().all(|c| !c.is_negative()),
            None => false,
        }
    }

    /// The two descriptions agree on all `±` combinations of generators and
    /// rays.
    pub fn check_descriptions(&self) -> bool {
        let mut sample: Vec<Vec<T>> = Vec::new();
        for g in self.generators.iter().chain(&self.facet_rays) {
            sample.push(g.clone());
            sample.push(linalg::neg_vec(g));
        }
        let base = sample.clone();
        for a in &base {
            for b in &base {
                sample.push(linalg::add_vec(a, b));
            }
        }
        sample.iter().all(|v| self.contains(v) == self.contains_by_generators(v))
    }

    pub fn cone_position(&self, v: &[T]) -> ConePosition<T> {
        if !self.fulldim {
            return ConePosition { position: Position::BoundaryOrOutside, margin: SignedRoot::zero() };
        }
        let margin = (0..self.a_rank())
            .map(|j| SignedRoot::quotient(&-self.evaluate(v, j), &self.ray_norms_sq[j]))
            .min()
            .expect("a_rank > 0");
        let position = if margin.is_positive() { Position::NegInterior } else { Position::BoundaryOrOutside };
        ConePosition { position, margin }
    }

    /// Minimal margin of `E + H_1 + ... + H_m` where `H_i` is the convex hull
    /// of the given point sets, computed through support functions.
    pub fn minkowski_margin(&self, exponents: &[Vec<T>], hulls: &[Vec<Vec<T>>]) -> SignedRoot<T> {
        if !self.fulldim || exponents.is_empty() {
            return SignedRoot::zero();
        }
        (0..self.a_rank())
            .map(|j| {
                let shift = hulls.iter().fold(T::zero(), |acc, pts| {
                    acc + pts.iter().map(|p| self.evaluate(p, j)).max().unwrap_or_else(T::zero)
                });
                let worst = exponents.iter().map(|e| self.evaluate(e, j)).max().expect("nonempty");
                SignedRoot::quotient(&-(worst + shift), &self.ray_norms_sq[j])
            })
            .min()
            .expect("a_rank > 0")
    }
}

pub fn cone_position<T: Scalar>(c: &DualChamber<T>, v: &[T]) -> ConePosition<T> {
    c.cone_position(v)
}

/// `lambda|_a` in `a*` coordinates.
pub fn restrict<T: Scalar>(inv: &CartanInvolution<T>, lambda: &Weight<T>) -> Vec<T> {
    inv.restrict(lambda)
}

/// `xi` is a nonnegative integer combination of positive restricted roots.
///
/// Positive restricted roots are nonnegative integer combinations of the
/// simple ones, which are themselves positive roots, so membership is read
/// off the coordinates.
pub fn monoid_member<T: Scalar>(rrs: &RestrictedRootSystem<T>, xi: &[T]) -> bool {
    xi.len() == rrs.a_rank() && xi.iter().all(|c| c.is_integer() && !c.is_negative())
}

/// `xi1 ⪰ xi2`.
pub fn dominates<T: Scalar>(rrs: &RestrictedRootSystem<T>, xi1: &[T], xi2: &[T]) -> bool {
    monoid_member(rrs, &linalg::sub_vec(xi1, xi2))
}

/// Maximal elements of `s` under `⪰`, duplicates removed, in input order.
pub fn leading_exponents<T: Scalar>(rrs: &RestrictedRootSystem<T>, s: &[Vec<T>]) -> Vec<Vec<T>> {
    let mut seen = HashSet::new();
    let distinct: Vec<&Vec<T>> = s.iter().filter(|v| seen.insert(*v)).collect();
    distinct
        .iter()
        .filter(|v| !distinct.iter().any(|w| w != *v && dominates(rrs, w, v)))
        .map(|v| (*v).clone())
        .collect()
}

/// A formal discrete-series datum `(Lambda, E)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct FormalDSDatum<T: Scalar = Rational> {
    pub lambda: Weight<T>,
    #[serde(with = "coord_lists")]
    pub exponents: Vec<Vec<T>>,
    #[serde(default)]
    pub label: String,
}

impl<T: Scalar> FormalDSDatum<T> {
    /// Checks that every exponent is the restriction of an orbit element.
    pub fn new(
        r: &RootSystem<T>,
        inv: &CartanInvolution<T>,
        lambda: Weight<T>,
        exponents: Vec<Vec<T>>,
        label: &str,
        cap: usize,
    ) -> Result<Self> {
        let d = FormalDSDatum { lambda, exponents, label: label.to_string() };
        d.validate(r, inv, cap)?;
        Ok(d)
    }

    pub fn validate(&self, r: &RootSystem<T>, inv: &CartanInvolution<T>, cap: usize) -> Result<()> {
        r.check_rank(&self.lambda)?;
        let restricted: HashSet<Vec<T>> =
            r.weyl_orbit(&self.lambda, cap)?.iter().map(|nu| inv.restrict(nu)).collect();
        match self.exponents.iter().find(|e| !restricted.contains(*e)) {
            Some(e) => Err(Error::InvalidDatum(format!(
                "exponent {} is not the restriction of an element of the orbit of {}",
                crate::scalar::format_vector(e),
                self.lambda
            ))),
            None => Ok(()),
        }
    }

    /// The datum whose exponents are all restrictions of `[Lambda]^+`.
    pub fn antidominant(
        r: &RootSystem<T>,
        inv: &CartanInvolution<T>,
        lambda: Weight<T>,
        label: &str,
        cap: usize,
    ) -> Result<Self> {
        let exponents = orbit_plus_restrictions(r, inv, &lambda, cap)?;
        Ok(FormalDSDatum { lambda, exponents, label: label.to_string() })
    }
}

pub(crate) mod coord_lists {
    use super::*;

    pub fn serialize<T: Scalar, S: serde::Serializer>(v: &[Vec<T>], s: S) -> std::result::Result<S::Ok, S::Error> {
        let strs: Vec<Vec<String>> =
            v.iter().map(|row| row.iter().map(Scalar::to_canonical).collect()).collect();
        strs.serialize(s)
    }

    pub fn deserialize<'de, T: Scalar, D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Vec<Vec<T>>, D::Error> {
        let strs = Vec::<Vec<String>>::deserialize(d)?;
        strs.iter()
            .map(|row| row.iter().map(|x| T::parse_canonical(x)).collect::<Result<Vec<T>>>())
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct L2Report<T: Scalar = Rational> {
    pub pass: bool,
    pub margins: Vec<ConePosition<T>>,
}

impl<T: Scalar> L2Report<T> {
    /// Smallest margin, zero for an empty exponent set.
    pub fn min_margin(&self) -> SignedRoot<T> {
        self.margins.iter().map(|m| m.margin.clone()).min().unwrap_or_else(SignedRoot::zero)
    }
}

/// `E ⊂ -int C`.
pub fn l2_check<T: Scalar>(c: &DualChamber<T>, d: &FormalDSDatum<T>) -> L2Report<T> {
    let margins: Vec<ConePosition<T>> = d.exponents.iter().map(|e| c.cone_position(e)).collect();
    let pass = margins.iter().all(|m| m.position == Position::NegInterior);
    L2Report { pass, margins }
}

/// In `-int C`, tested on `a*` coordinates directly.
pub fn in_negative_interior<T: Scalar>(coords: &[T]) -> bool {
    !coords.is_empty() && coords.iter().all(|c| c.is_negative())
}

/// `[Lambda]^+`: orbit elements whose restriction lies in `-int C`.
pub fn orbit_plus<T: Scalar>(
    r: &RootSystem<T>,
    inv: &CartanInvolution<T>,
    lambda: &Weight<T>,
    cap: usize,
) -> Result<Vec<Weight<T>>> {
    r.check_rank(lambda)?;
    if inv.a_rank() == 0 {
        return Ok(Vec::new());
    }
    Ok(r.weyl_orbit(lambda, cap)?
        .into_iter()
        .filter(|nu| in_negative_interior(&inv.restrict(nu)))
        .collect())
}

/// Distinct restrictions of `[Lambda]^+`, sorted.
pub fn orbit_plus_restrictions<T: Scalar>(
    r: &RootSystem<T>,
    inv: &CartanInvolution<T>,
    lambda: &Weight<T>,
    cap: usize,
) -> Result<Vec<Vec<T>>> {
    let mut out: Vec<Vec<T>> = orbit_plus(r, inv, lambda, cap)?.iter().map(|nu| inv.restrict(nu)).collect();
    out.sort();
    out.dedup();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realform::{catalog_form, restricted_roots, RealForm, RealFormSpec};
    use num_rational::Rational64;

    fn q(n: i64, d: i64) -> Rational64 {
        Rational64::new(n, d)
    }

    fn setup(id: &str) -> (RealForm<Rational64>, RestrictedRootSystem<Rational64>, DualChamber<Rational64>) {
        let f = catalog_form(&RealFormSpec::Catalog(id.parse().unwrap())).unwrap();
        let rrs = restricted_roots(&f.root_system, &f.involution);
        let c = DualChamber::new(&rrs);
        (f, rrs, c)
    }

    #[test]
    fn cone_positions() {
        let (f, _, c) = setup("sl(2,R)");
        let w = f.involution.restrict(f.root_system.fundamental_weight(0));
        let p = c.cone_position(&linalg::neg_vec(&w));
        assert_eq!(p.position, Position::NegInterior);
        assert!(p.margin.is_positive());
        let p = c.cone_position(&[q(0, 1)]);
        assert_eq!(p.position, Position::BoundaryOrOutside);
        assert_eq!(p.margin, SignedRoot::zero());

        let (_, _, c) = setup("compact(A2)");
        assert!(!c.is_fulldim());
        assert_eq!(c.cone_position(&[]).position, Position::BoundaryOrOutside);
    }

    #[test]
    fn descriptions_agree() {
        for id in ["sl(3,R)", "su(3,1)", "so(5,2)", "split(G2)", "sp(3,R)"] {
            assert!(setup(id).2.check_descriptions(), "{id}");
        }
    }

    #[test]
    fn monoid_examples() {
        let (f, rrs, _) = setup("sl(3,R)");
        assert!(monoid_member(&rrs, &[q(0, 1), q(0, 1)]));
        assert!(monoid_member(&rrs, &[q(1, 1), q(2, 1)]));
        let w1 = f.involution.restrict(f.root_system.fundamental_weight(0));
        assert_eq!(w1, vec![q(2, 3), q(1, 3)]);
        assert!(!monoid_member(&rrs, &w1));
    }

    #[test]
    fn leading_exponent_examples() {
        let (f, rrs, _) = setup("sl(3,R)");
        let r = &f.root_system;
        let inv = &f.involution;
        let m_rho = inv.restrict(&r.rho().neg());
        assert_eq!(leading_exponents(&rrs, std::slice::from_ref(&m_rho)), vec![m_rho.clone()]);
        let lower = linalg::sub_vec(&m_rho, &inv.restrict(&r.simple_root(0)));
        assert_eq!(leading_exponents(&rrs, &[m_rho.clone(), lower]), vec![m_rho.clone()]);
        let shifted = linalg::add_vec(
            &m_rho,
            &inv.restrict(&r.fundamental_weight(0).sub(r.fundamental_weight(1))),
        );
        assert_eq!(leading_exponents(&rrs, &[m_rho.clone(), shifted]).len(), 2);
    }

    #[test]
    fn l2_examples() {
        let (f, _, c) = setup("sl(2,R)");
        let w = f.involution.restrict(f.root_system.fundamental_weight(0));
        let lam = f.root_system.fundamental_weight(0).clone();
        let d = FormalDSDatum { lambda: lam.clone(), exponents: vec![linalg::neg_vec(&w)], label: String::new() };
        assert!(l2_check(&c, &d).pass);
        let d = FormalDSDatum { lambda: lam, exponents: vec![w], label: String::new() };
        assert!(!l2_check(&c, &d).pass);

        let (f, _, c) = setup("sl(3,R)");
        let e = f.involution.restrict(&f.root_system.rho().neg());
        let d = FormalDSDatum { lambda: f.root_system.rho().clone(), exponents: vec![e], label: String::new() };
        assert!(l2_check(&c, &d).pass);
    }

    #[test]
    fn orbit_plus_examples() {
        let (f, _, _) = setup("sl(2,R)");
        let r = &f.root_system;
        let out = orbit_plus(r, &f.involution, r.fundamental_weight(0), 100).unwrap();
        assert_eq!(out, vec![r.fundamental_weight(0).neg()]);

        let (f, _, _) = setup("sl(3,R)");
        let r = &f.root_system;
        assert_eq!(orbit_plus(r, &f.involution, r.rho(), 100).unwrap(), vec![r.rho().neg()]);

        let (f, _, _) = setup("compact(B2)");
        let r = &f.root_system;
        assert!(orbit_plus(r, &f.involution, r.rho(), 100).unwrap().is_empty());
    }

    #[test]
    fn datum_validation_and_serde() {
        let (f, _, _) = setup("su(2,1)");
        let r = &f.root_system;
        let d = FormalDSDatum::antidominant(r, &f.involution, r.rho().clone(), "rho", 100).unwrap();
        assert!(!d.exponents.is_empty());
        d.validate(r, &f.involution, 100).unwrap();
        let bad = FormalDSDatum { exponents: vec![vec![q(7, 1)]], ..d.clone() };
        assert!(matches!(bad.validate(r, &f.involution, 100), Err(Error::InvalidDatum(_))));

        let json = serde_json::to_string(&d).unwrap();
        let back: FormalDSDatum<Rational64> = serde_json::from_str(&json).unwrap();
        assert_eq!(back, d);
    }
}
