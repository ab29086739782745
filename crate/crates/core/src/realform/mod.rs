//! Real forms, encoded by a Cartan involution on a maximally split Cartan
//! subalgebra, and their restricted root systems.
//!
//! The `a*` coordinates used throughout are coefficients with respect to the
//! simple restricted roots, so the dual chamber is the nonnegative orthant
//! and the monoid generated by positive restricted roots is the set of
//! nonnegative integer vectors.

mod catalog;
mod sequence;

use std::collections::{HashMap, HashSet};

use serde::Serialize;

pub use catalog::{
    catalog_entries, catalog_form, oracle_compact_rank, CatalogDocument, FormId,
    RealForm, RealFormSpec,
};
pub use sequence::{verify_exact_sequence, ExactSequenceReport};

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::rootdata::{RootSystem, Weight, WeylElement};
use crate::scalar::Scalar;
use crate::Rational;

/// A validated Cartan involution `theta` on `c_R*`, in simple-root coordinates.
///
/// Column `j` of `theta` holds the coordinates of `theta(alpha_j)`.
#[derive(Clone, Debug)]
pub struct CartanInvolution<T: Scalar = Rational> {
    theta: Matrix<T>,
    sigma: Matrix<T>,
    minus_basis: Vec<Weight<T>>,
    plus_basis: Vec<Weight<T>>,
    /// `a_rank x n`, sends a weight to its `a*` coordinates.
    restriction: Matrix<T>,
    a_gram: Matrix<T>,
    supplied: Matrix<T>,
    conjugated_by: Option<WeylElement<T>>,
    realizability_verified: bool,
}

impl<T: Scalar> CartanInvolution<T> {
    pub fn theta(&self) -> &Matrix<T> {
        &self.theta
    }

    /// `sigma = -theta` on `c_R*`.
    pub fn sigma(&self) -> &Matrix<T> {
        &self.sigma
    }

    /// `-sigma`, which equals `theta`.
    pub fn minus_sigma(&self) -> &Matrix<T> {
        &self.theta
    }

    /// Basis of the `(-1)`-eigenspace: the simple restricted roots.
    pub fn minus_eigenspace_basis(&self) -> &[Weight<T>] {
        &self.minus_basis
    }

    pub fn plus_eigenspace_basis(&self) -> &[Weight<T>] {
        &self.plus_basis
    }

    pub fn a_rank(&self) -> usize {
        self.minus_basis.len()
    }

    pub fn rank(&self) -> usize {
        self.theta.rows()
    }

    /// Gram matrix of the simple restricted roots.
    pub fn a_gram(&self) -> &Matrix<T> {
        &self.a_gram
    }

    pub fn restriction_matrix(&self) -> &Matrix<T> {
        &self.restriction
    }

    /// The matrix passed to [`validate_involution`].
    pub fn supplied_theta(&self) -> &Matrix<T> {
        &self.supplied
    }

    /// When the supplied involution was not compatible with the standard
    /// positive system, the element `u` with `theta = u theta_supplied u^-1`.
    /// The positive system used for the supplied matrix is `u^-1 Sigma^+`.
    pub fn conjugated_by(&self) -> Option<&WeylElement<T>> {
        self.conjugated_by.as_ref()
    }

    /// False for user-supplied matrices that are not known to come from a
    /// real form; such matrices pass the algebraic checks only.
    pub fn realizability_verified(&self) -> bool {
        self.realizability_verified
    }

    pub(crate) fn mark_realizable(mut self) -> Self {
        self.realizability_verified = true;
        self
    }

    /// `theta(lambda)`.
    pub fn apply(&self, lambda: &Weight<T>) -> Weight<T> {
        Weight(self.theta.apply(&lambda.0))
    }

    /// `a*` coordinates of `lambda|_a`, i.e. of `(lambda - theta lambda) / 2`.
    pub fn restrict(&self, lambda: &Weight<T>) -> Vec<T> {
        self.restriction.apply(&lambda.0)
    }

    /// The element of the `(-1)`-eigenspace with the given `a*` coordinates.
    pub fn lift(&self, coords: &[T]) -> Weight<T> {
        coords
            .iter()
            .zip(&self.minus_basis)
            .fold(Weight::zero(self.rank()), |acc, (c, b)| acc.add(&b.scale(c)))
    }

    /// `(u, v)` for `a*` coordinate vectors.
    pub fn a_pairing(&self, u: &[T], v: &[T]) -> T {
        linalg::bilinear(&self.a_gram, u, v)
    }
}

/// Validates `theta` and picks a positive system compatible with the
/// restricted roots.
///
/// If the standard positive system is not compatible, `theta` is replaced by
/// a Weyl conjugate that is; the conjugating element is recorded.
pub fn validate_involution<T: Scalar>(r: &RootSystem<T>, theta: &Matrix<T>) -> Result<CartanInvolution<T>> {
    let n = r.rank();
    if theta.rows() != n || theta.cols() != n {
        return Err(Error::RankMismatch { expected: n, found: theta.rows() });
    }
    if !theta.matmul(theta).is_identity() {
        return Err(Error::NotInvolution);
    }
    if !r.permutes_roots(theta) {
        return Err(Error::NotRootPreserving);
    }
    if !r.preserves_pairing(theta) {
        return Err(Error::NotIsometric);
    }

    if let Some(inv) = try_compatible(r, theta, theta, None) {
        return Ok(inv);
    }
    for p in [1009, 1013, 1019, 1021, 1031, 1033] {
        let Some(u) = compatible_conjugator(r, theta, p) else { continue };
        let conj = u.matrix.matmul(theta).matmul(&u.inverse().matrix);
        if let Some(inv) = try_compatible(r, &conj, theta, Some(u)) {
            return Ok(inv);
        }
    }
    Err(Error::PreconditionFailed(
        "no positive system compatible with the restricted roots was found".into(),
    ))
}

/// Builds the involution data if the standard positive system is compatible.
fn try_compatible<T: Scalar>(
    r: &RootSystem<T>,
    theta: &Matrix<T>,
    supplied: &Matrix<T>,
    conjugated_by: Option<WeylElement<T>>,
) -> Option<CartanInvolution<T>> {
    let n = r.rank();
    let half = T::ratio(1, 2);
    let project = |a: &Weight<T>| {
        Weight(linalg::scale_vec(&half, &linalg::sub_vec(&a.0, &theta.apply(&a.0))))
    };

    let mut positive: Vec<Weight<T>> = Vec::new();
    let mut seen = HashSet::new();
    for a in r.positive_roots() {
        let p = project(a);
        if !p.is_zero() && seen.insert(p.clone()) {
            positive.push(p);
        }
    }
    if positive.iter().any(|p| seen.contains(&p.neg())) {
        return None;
    }

    // simple: not a sum of two positive restrictions
    let simple: Vec<Weight<T>> = positive
        .iter()
        .filter(|p| !positive.iter().any(|q| seen.contains(&p.sub(q))))
        .cloned()
        .collect();

    let minus_dim = n - theta.add(&Matrix::identity(n)).rank();
    let b = Matrix::from_columns(n, &simple.iter().map(|w| w.0.clone()).collect::<Vec<_>>());
    if simple.len() != minus_dim || b.rank() != minus_dim {
        return None;
    }
    let a_gram = b.transpose().matmul(r.gram()).matmul(&b);
    let restriction = a_gram.inverse()?.matmul(&b.transpose()).matmul(r.gram());

    // every positive restriction must have nonnegative integer coordinates
    let ok = positive.iter().all(|p| {
        restriction.apply(&p.0).iter().all(|c| c.is_integer() && !c.is_negative())
    });
    if !ok {
        return None;
    }

    let plus_basis = theta.sub(&Matrix::identity(n)).nullspace().into_iter().map(Weight).collect();
    Some(CartanInvolution {
        theta: theta.clone(),
        sigma: theta.neg(),
        minus_basis: simple,
        plus_basis,
        restriction,
        a_gram,
        supplied: supplied.clone(),
        conjugated_by,
        realizability_verified: false,
    })
}

/// `u` such that `u theta u^-1` is compatible with the standard positive
/// system: `u` moves a regular vector `y = x_a + delta x_t` (with `x_a`
/// generic in the `(-1)`-eigenspace) into the dominant chamber.
fn compatible_conjugator<T: Scalar>(r: &RootSystem<T>, theta: &Matrix<T>, p: i64) -> Option<WeylElement<T>> {
    let half = T::ratio(1, 2);
    let x = r.perturbed_rho_with(p);
    let tx = Weight(theta.apply(&x.0));
    let xa = x.sub(&tx).scale(&half);
    let xt = x.add(&tx).scale(&half);

    let mut min_a: Option<T> = None;
    let mut max_t = T::one();
    for a in r.positive_roots() {
        let restricted_zero = a.0 == theta.apply(&a.0);
        let pa = r.pairing(a, &xa).abs();
        if restricted_zero {
            if r.pairing(a, &xt).is_zero() {
                return None;
            }
        } else {
            if pa.is_zero() {
                return None;
            }
            min_a = Some(match min_a {
                Some(m) if m < pa => m,
                _ => pa,
            });
        }
        let pt = r.pairing(a, &xt).abs();
        if pt > max_t {
            max_t = pt;
        }
    }
    let delta = match min_a {
        Some(m) => m / (T::from_int(2) * max_t),
        None => T::one(),
    };
    let y = xa.add(&xt.scale(&delta));
    if !r.is_regular(&y) {
        return None;
    }
    Some(r.dominant_representative(&y).element)
}

/// One restricted root with its multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RestrictedRoot<T: Scalar = Rational> {
    #[serde(serialize_with = "ser_vec")]
    pub coords: Vec<T>,
    pub multiplicity: usize,
}

pub(crate) fn ser_vec<T: Scalar, S: serde::Serializer>(v: &[T], s: S) -> std::result::Result<S::Ok, S::Error> {
    let strs: Vec<String> = v.iter().map(Scalar::to_canonical).collect();
    strs.serialize(s)
}

/// The restricted root system `Sigma_a` with multiplicities, `Sigma_m` and
/// the restricted half-sum.
#[derive(Clone, Debug)]
pub struct RestrictedRootSystem<T: Scalar = Rational> {
    a_rank: usize,
    /// Positive roots first, by height.
    roots: Vec<RestrictedRoot<T>>,
    n_positive: usize,
    index: HashMap<Vec<T>, usize>,
    sigma_m: Vec<Weight<T>>,
    rho: Vec<T>,
    gram: Matrix<T>,
}

/// Projects every root to `a*` and counts preimages.
pub fn restricted_roots<T: Scalar>(r: &RootSystem<T>, inv: &CartanInvolution<T>) -> RestrictedRootSystem<T> {
    let mut counts: HashMap<Vec<T>, usize> = HashMap::new();
    let mut sigma_m = Vec::new();
    for a in r.all_roots() {
        let c = inv.restrict(a);
        if linalg::is_zero_vec(&c) {
            sigma_m.push(a.clone());
        } else {
            *counts.entry(c).or_default() += 1;
        }
    }
    let mut roots: Vec<RestrictedRoot<T>> =
        counts.into_iter().map(|(coords, multiplicity)| RestrictedRoot { coords, multiplicity }).collect();
    let height = |v: &[T]| v.iter().fold(T::zero(), |s, x| s + x.clone());
    roots.sort_by(|a, b| {
        let ha = height(&a.coords);
        let hb = height(&b.coords);
        let pa = ha.is_positive();
        let pb = hb.is_positive();
        pb.cmp(&pa)
            .then(if pa { ha.cmp(&hb) } else { hb.cmp(&ha) })
            .then(b.coords.cmp(&a.coords))
    });
    let n_positive = roots.iter().filter(|a| height(&a.coords).is_positive()).count();
    let index = roots.iter().enumerate().map(|(i, a)| (a.coords.clone(), i)).collect();

    let a_rank = inv.a_rank();
    let half = T::ratio(1, 2);
    let rho = roots[..n_positive].iter().fold(vec![T::zero(); a_rank], |acc, a| {
        linalg::add_vec(&acc, &linalg::scale_vec(&T::from_int(a.multiplicity as i64), &a.coords))
    });
    let rho = linalg::scale_vec(&half, &rho);

    RestrictedRootSystem { a_rank, roots, n_positive, index, sigma_m, rho, gram: inv.a_gram().clone() }
}

impl<T: Scalar> RestrictedRootSystem<T> {
    pub fn a_rank(&self) -> usize {
        self.a_rank
    }

    pub fn roots(&self) -> &[RestrictedRoot<T>] {
        &self.roots
    }

    pub fn positive_roots(&self) -> &[RestrictedRoot<T>] {
        &self.roots[..self.n_positive]
    }

    pub fn is_root(&self, v: &[T]) -> bool {
        self.index.contains_key(v)
    }

    /// 0 for non-roots.
    pub fn multiplicity(&self, v: &[T]) -> usize {
        self.index.get(v).map_or(0, |&i| self.roots[i].multiplicity)
    }

    pub fn sigma_m_roots(&self) -> &[Weight<T>] {
        &self.sigma_m
    }

    /// Half the multiplicity-weighted sum of positive restricted roots.
    pub fn rho_restricted(&self) -> &[T] {
        &self.rho
    }

    pub fn gram(&self) -> &Matrix<T> {
        &self.gram
    }

    pub fn pairing(&self, u: &[T], v: &[T]) -> T {
        linalg::bilinear(&self.gram, u, v)
    }

    /// Roots whose half is not a root.
    pub fn indivisible_positive_roots(&self) -> Vec<&RestrictedRoot<T>> {
        let half = T::ratio(1, 2);
        self.positive_roots()
            .iter()
            .filter(|a| !self.is_root(&linalg::scale_vec(&half, &a.coords)))
            .collect()
    }

    pub fn is_reduced(&self) -> bool {
        let two = T::from_int(2);
        self.roots.iter().all(|a| !self.is_root(&linalg::scale_vec(&two, &a.coords)))
    }

    /// `s_beta` on `a*` coordinates.
    pub fn reflection_matrix(&self, beta: &[T]) -> Matrix<T> {
        let n = self.a_rank;
        let two = T::from_int(2);
        let bb = self.pairing(beta, beta);
        let cols: Vec<Vec<T>> = (0..n)
            .map(|j| {
                let mut e = vec![T::zero(); n];
                e[j] = T::one();
                let c = two.clone() * self.pairing(&e, beta) / bb.clone();
                linalg::sub_vec(&e, &linalg::scale_vec(&c, beta))
            })
            .collect();
        Matrix::from_columns(n, &cols)
    }

    /// Cartan type of the restricted system, e.g. `BC1` or `A2`; `0` when
    /// `a = 0`.
    pub fn restricted_type(&self) -> String {
        if self.a_rank == 0 {
            return "0".to_string();
        }
        let n = self.a_rank;
        let two = T::from_int(2);
        // simple restricted roots are the unit vectors
        let unit = |i: usize| {
            let mut e = vec![T::zero(); n];
            e[i] = T::one();
            e
        };
        let cartan: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let v = two.clone() * self.pairing(&unit(i), &unit(j)) / self.pairing(&unit(j), &unit(j));
                        v.as_int().expect("restricted Cartan integers")
                    })
                    .collect()
            })
            .collect();
        let doubled: Vec<bool> =
            (0..n).map(|i| self.is_root(&linalg::scale_vec(&two, &unit(i)))).collect();
        classify_components(&cartan, &doubled).join("x")
    }
}

/// Names the connected components of a Cartan matrix (finite type).
fn classify_components(a: &[Vec<i64>], doubled: &[bool]) -> Vec<String> {
    let n = a.len();
    let mut seen = vec![false; n];
    let mut names = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut k = 0;
        while k < comp.len() {
            let i = comp[k];
            k += 1;
            for j in 0..n {
                if !seen[j] && a[i][j] != 0 {
                    seen[j] = true;
                    comp.push(j);
                }
            }
        }
        comp.sort_unstable();
        names.push(classify_one(a, doubled, &comp));
    }
    names
}

fn classify_one(a: &[Vec<i64>], doubled: &[bool], comp: &[usize]) -> String {
    let r = comp.len();
    let bc = comp.iter().any(|&i| doubled[i]);
    let degree = |i: usize| comp.iter().filter(|&&j| j != i && a[i][j] != 0).count();
    let max_label = comp
        .iter()
        .flat_map(|&i| comp.iter().map(move |&j| (i, j)))
        .filter(|&(i, j)| i != j)
        .map(|(i, j)| a[i][j] * a[j][i])
        .max()
        .unwrap_or(0);
    if bc {
        return format!("BC{r}");
    }
    match max_label {
        3 => "G2".into(),
        2 => {
            if r == 4 {
                // F4 has its double edge between the two middle nodes
                let (i, j) = comp
                    .iter()
                    .flat_map(|&i| comp.iter().map(move |&j| (i, j)))
                    .find(|&(i, j)| i != j && a[i][j] * a[j][i] == 2)
                    .unwrap();
                if degree(i) == 2 && degree(j) == 2 {
                    return "F4".into();
                }
            }
            if r == 2 {
                // first node long: B2, first node short: C2
                return if a[comp[0]][comp[1]] == -2 { "B2".into() } else { "C2".into() };
            }
            // the end node of the double edge is short in B, long in C
            let end = *comp.iter().find(|&&i| degree(i) == 1 && comp.iter().any(|&j| a[i][j] * a[j][i] == 2)).unwrap();
            let other = *comp.iter().find(|&&j| j != end && a[end][j] != 0).unwrap();
            // a[end][other] = -2 means end is long
            if a[end][other] == -2 {
                format!("C{r}")
            } else {
                format!("B{r}")
            }
        }
        _ => {
            let branch = comp.iter().find(|&&i| degree(i) == 3);
            match branch {
                None => format!("A{r}"),
                Some(&b) => {
                    let mut arms: Vec<usize> = comp
                        .iter()
                        .filter(|&&j| j != b && a[b][j] != 0)
                        .map(|&j| arm_length(a, comp, b, j))
                        .collect();
                    arms.sort_unstable();
                    if arms[0] == 1 && arms[1] == 1 {
                        format!("D{r}")
                    } else {
                        format!("E{r}")
                    }
                }
            }
        }
    }
}

fn arm_length(a: &[Vec<i64>], comp: &[usize], from: usize, start: usize) -> usize {
    let mut prev = from;
    let mut cur = start;
    let mut len = 1;
    while let Some(&next) = comp.iter().find(|&&j| j != prev && j != cur && a[cur][j] != 0) {
        prev = cur;
        cur = next;
        len += 1;
    }
    len
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Rational64;

    type R = RootSystem<Rational64>;

    fn q(n: i64) -> Rational64 {
        Rational64::from_int(n)
    }

    #[test]
    fn identity_and_minus_identity() {
        let r = R::from_type_str("A2").unwrap();
        let inv = validate_involution(&r, &Matrix::identity(2)).unwrap();
        assert_eq!(inv.a_rank(), 0);
        assert_eq!(inv.plus_eigenspace_basis().len(), 2);
        assert!(inv.restrict(&r.simple_root(0)).is_empty());

        let inv = validate_involution(&r, &Matrix::identity(2).neg()).unwrap();
        assert_eq!(inv.a_rank(), 2);
        assert_eq!(inv.restrict(&Weight::from_i64(&[3, -1])), vec![q(3), q(-1)]);
        assert_eq!(inv.sigma(), &Matrix::identity(2));
    }

    #[test]
    fn rejects_bad_matrices() {
        let r = R::from_type_str("A2").unwrap();
        let m = Matrix::from_i64_rows(&[vec![2, 0], vec![0, 1]]);
        assert_eq!(validate_involution(&r, &m).unwrap_err(), Error::NotInvolution);
        let m = Matrix::from_i64_rows(&[vec![1, 1], vec![0, -1]]);
        assert_eq!(validate_involution(&r, &m).unwrap_err(), Error::NotRootPreserving);
        // swaps a short and a long root of B2: involutive, not root preserving
        let b2 = R::from_type_str("B2").unwrap();
        let swap = Matrix::from_i64_rows(&[vec![0, 1], vec![1, 0]]);
        assert!(validate_involution(&b2, &swap).is_err());
        assert!(validate_involution(&r, &Matrix::identity(3)).is_err());
    }

    #[test]
    fn reflection_involution_is_rechosen() {
        let r = R::from_type_str("A2").unwrap();
        let s1 = r.reflection_matrix(0).clone();
        let inv = validate_involution(&r, &s1).unwrap();
        assert!(inv.conjugated_by().is_some());
        assert!(!inv.realizability_verified());
        let rrs = restricted_roots(&r, &inv);
        assert_eq!(rrs.restricted_type(), "BC1");
        assert_eq!(rrs.multiplicity(&[q(1)]), 2);
        assert_eq!(rrs.multiplicity(&[q(2)]), 1);
        assert!(rrs.sigma_m_roots().is_empty());
    }

    #[test]
    fn split_restriction_is_ambient() {
        for t in ["B2", "G2", "A3"] {
            let r = R::from_type_str(t).unwrap();
            let inv = validate_involution(&r, &Matrix::identity(r.rank()).neg()).unwrap();
            let rrs = restricted_roots(&r, &inv);
            assert_eq!(rrs.roots().len(), r.all_roots().len());
            assert!(rrs.roots().iter().all(|a| a.multiplicity == 1));
            assert!(rrs.sigma_m_roots().is_empty());
            assert_eq!(rrs.restricted_type(), t);
            assert_eq!(rrs.rho_restricted(), r.rho().coords());
        }
    }

    #[test]
    fn compact_restriction_is_empty() {
        let r = R::from_type_str("C3").unwrap();
        let inv = validate_involution(&r, &Matrix::identity(3)).unwrap();
        let rrs = restricted_roots(&r, &inv);
        assert!(rrs.roots().is_empty());
        assert_eq!(rrs.sigma_m_roots().len(), r.all_roots().len());
        assert_eq!(rrs.restricted_type(), "0");
    }

    #[test]
    fn classifies_types() {
        for t in ["A1", "B3", "C3", "D4", "E6", "F4", "G2", "B2xA1"] {
            let r = R::from_type_str(t).unwrap();
            let inv = validate_involution(&r, &Matrix::identity(r.rank()).neg()).unwrap();
            assert_eq!(restricted_roots(&r, &inv).restricted_type(), t);
        }
    }
}
