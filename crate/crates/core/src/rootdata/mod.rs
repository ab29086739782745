//! Finite root systems and their Weyl groups, over an exact field.
//!
//! Weights are stored in simple-root coordinates. Simple reflections act on
//! those coordinates through the integer Cartan matrix, so no inner products
//! are needed for orbit, dominance or stabilizer computations.

mod cartan;
mod fast;
mod weyl;

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

pub use cartan::{CartanType, Family, SimpleType};
pub use weyl::{apply, generated_group, DominantChase, StabilizerInfo, WeylElement, DEFAULT_CAP};

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::scalar::Scalar;
use crate::Rational;

/// A weight in simple-root coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Weight<T = Rational>(pub Vec<T>);

impl<T: Scalar> Hash for Weight<T> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        state.write_usize(self.0.len());
        for x in &self.0 {
            x.hash_reduced(state);
        }
    }
}

impl<T: Scalar> Weight<T> {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![T::zero(); rank])
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        Weight(coords.iter().map(|&x| T::from_int(x)).collect())
    }

    pub fn coords(&self) -> &[T] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        linalg::is_zero_vec(&self.0)
    }

    pub fn add(&self, other: &Self) -> Self {
        Weight(linalg::add_vec(&self.0, &other.0))
    }

    pub fn sub(&self, other: &Self) -> Self {
        Weight(linalg::sub_vec(&self.0, &other.0))
    }

    pub fn scale(&self, c: &T) -> Self {
        Weight(linalg::scale_vec(c, &self.0))
    }

    pub fn neg(&self) -> Self {
        Weight(linalg::neg_vec(&self.0))
    }

    /// True when every coordinate is an integer.
    pub fn is_integral_vector(&self) -> bool {
        self.0.iter().all(Scalar::is_integer)
    }
}

impl<T: Scalar> fmt::Display for Weight<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::scalar::format_vector(&self.0))
    }
}

impl<T: Scalar> Serialize for Weight<T> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<String> = self.0.iter().map(Scalar::to_canonical).collect();
        v.serialize(s)
    }
}

impl<'de, T: Scalar> Deserialize<'de> for Weight<T> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        v.iter()
            .map(|s| T::parse_canonical(s))
            .collect::<Result<Vec<T>>>()
            .map(Weight)
            .map_err(serde::de::Error::custom)
    }
}

/// A finite crystallographic root system with its Weyl group data.
#[derive(Clone, Debug)]
pub struct RootSystem<T: Scalar = Rational> {
    cartan_type: CartanType,
    cartan: Vec<Vec<i64>>,
    symmetrizer: Vec<T>,
    /// Gram matrix `(alpha_i, alpha_j)` of the simple roots.
    gram: Matrix<T>,
    roots: Vec<Weight<T>>,
    root_index: HashMap<Weight<T>, usize>,
    n_positive: usize,
    rho: Weight<T>,
    fundamental: Vec<Weight<T>>,
    reflections: Vec<Matrix<T>>,
}

impl<T: Scalar> RootSystem<T> {
    pub fn new(cartan_type: CartanType) -> Self {
        let rank = cartan_type.rank();
        let cartan = cartan_type.cartan_matrix();
        let symmetrizer: Vec<T> = symmetrizer_of(&cartan);
        let gram = Matrix::from_fn(rank, rank, |i, j| {
            T::from_int(cartan[i][j]) * symmetrizer[j].clone()
        });

        let mut roots = close_simple_roots(&cartan);
        // positive roots first, ordered by height, then lexicographically
        roots.sort_by(|a, b| {
            let pa = a.iter().all(|&x| x >= 0);
            let pb = b.iter().all(|&x| x >= 0);
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            pb.cmp(&pa).then(if pa { ha.cmp(&hb) } else { hb.cmp(&ha) }).then(b.cmp(a))
        });
        let n_positive = roots.iter().filter(|r| r.iter().all(|&x| x >= 0)).count();
        let roots: Vec<Weight<T>> = roots.iter().map(|r| Weight::from_i64(r)).collect();
        let root_index = roots.iter().enumerate().map(|(i, r)| (r.clone(), i)).collect();

        let two = T::from_int(2);
        let rho = roots[..n_positive]
            .iter()
            .fold(Weight::zero(rank), |acc, r| acc.add(r))
            .scale(&(T::one() / two));

        // rows of A^{-1} are the fundamental weights
        let a = Matrix::<T>::from_i64_rows(&cartan);
        let inv = a.inverse().expect("finite-type Cartan matrices are invertible");
        let fundamental = (0..rank).map(|i| Weight(inv.row(i).to_vec())).collect();

        let reflections = (0..rank)
            .map(|i| {
                Matrix::from_fn(rank, rank, |r, c| {
                    let id = if r == c { T::one() } else { T::zero() };
                    if r == i {
                        id - T::from_int(cartan[c][i])
                    } else {
                        id
                    }
                })
            })
            .collect();

        RootSystem {
            cartan_type,
            cartan,
            symmetrizer,
            gram,
            roots,
            root_index,
            n_positive,
            rho,
            fundamental,
            reflections,
        }
    }

    /// Parses a type string such as `"B3xA1"`.
    pub fn from_type_str(s: &str) -> Result<Self> {
        Ok(Self::new(s.parse()?))
    }

    pub fn cartan_type(&self) -> &CartanType {
        &self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn symmetrizer(&self) -> &[T] {
        &self.symmetrizer
    }

    pub fn gram(&self) -> &Matrix<T> {
        &self.gram
    }

    pub fn simple_root(&self, i: usize) -> Weight<T> {
        let mut v = Weight::zero(self.rank());
        v.0[i] = T::one();
        v
    }

    pub fn simple_roots(&self) -> Vec<Weight<T>> {
        (0..self.rank()).map(|i| self.simple_root(i)).collect()
    }

    pub fn all_roots(&self) -> &[Weight<T>] {
        &self.roots
    }

    pub fn positive_roots(&self) -> &[Weight<T>] {
        &self.roots[..self.n_positive]
    }

    pub fn is_root(&self, v: &Weight<T>) -> bool {
        self.root_index.contains_key(v)
    }

    pub fn root_position(&self, v: &Weight<T>) -> Option<usize> {
        self.root_index.get(v).copied()
    }

    pub fn rho(&self) -> &Weight<T> {
        &self.rho
    }

    pub fn fundamental_weights(&self) -> &[Weight<T>] {
        &self.fundamental
    }

    pub fn fundamental_weight(&self, i: usize) -> &Weight<T> {
        &self.fundamental[i]
    }

    /// Matrix of the simple reflection `s_i` on simple-root coordinates.
    pub fn reflection_matrix(&self, i: usize) -> &Matrix<T> {
        &self.reflections[i]
    }

    /// The invariant inner product `(u, v)`.
    pub fn pairing(&self, u: &Weight<T>, v: &Weight<T>) -> T {
        linalg::bilinear(&self.gram, &u.0, &v.0)
    }

    pub fn norm_sq(&self, v: &Weight<T>) -> T {
        self.pairing(v, v)
    }

    /// `<lambda, alpha^vee> = 2 (lambda, alpha) / (alpha, alpha)`.
    pub fn coroot_pairing(&self, lambda: &Weight<T>, alpha: &Weight<T>) -> T {
        T::from_int(2) * self.pairing(lambda, alpha) / self.norm_sq(alpha)
    }

    /// `<lambda, alpha_i^vee>` for a simple root, computed from the Cartan matrix.
    pub fn simple_coroot_pairing(&self, lambda: &Weight<T>, i: usize) -> T {
        lambda
            .0
            .iter()
            .zip(&self.cartan)
            .filter(|(c, row)| row[i] != 0 && !c.is_zero())
            .fold(T::zero(), |acc, (c, row)| match row[i] {
                1 => acc + c.clone(),
                -1 => acc - c.clone(),
                a => acc + c.clone() * T::from_int(a),
            })
    }

    /// Coordinates in the basis of fundamental weights.
    pub fn to_fundamental(&self, lambda: &Weight<T>) -> Vec<T> {
        (0..self.rank()).map(|i| self.simple_coroot_pairing(lambda, i)).collect()
    }

    pub fn from_fundamental(&self, coords: &[T]) -> Weight<T> {
        coords
            .iter()
            .zip(&self.fundamental)
            .fold(Weight::zero(self.rank()), |acc, (c, w)| acc.add(&w.scale(c)))
    }

    /// Applies `s_i` in place.
    pub fn reflect_in_place(&self, i: usize, lambda: &mut Weight<T>) {
        let p = self.simple_coroot_pairing(lambda, i);
        if !p.is_zero() {
            lambda.0[i] = lambda.0[i].clone() - p;
        }
    }

    pub fn reflect(&self, i: usize, lambda: &Weight<T>) -> Weight<T> {
        let mut out = lambda.clone();
        self.reflect_in_place(i, &mut out);
        out
    }

    /// Reflection `s_alpha` in an arbitrary root.
    pub fn reflect_in_root(&self, alpha: &Weight<T>, lambda: &Weight<T>) -> Weight<T> {
        lambda.sub(&alpha.scale(&self.coroot_pairing(lambda, alpha)))
    }

    /// Matrix of `s_alpha` for an arbitrary root.
    pub fn root_reflection_matrix(&self, alpha: &Weight<T>) -> Matrix<T> {
        let n = self.rank();
        let cols: Vec<Vec<T>> =
            (0..n).map(|j| self.reflect_in_root(alpha, &self.simple_root(j)).0).collect();
        Matrix::from_columns(n, &cols)
    }

    pub fn is_dominant(&self, lambda: &Weight<T>) -> bool {
        (0..self.rank()).all(|i| !self.simple_coroot_pairing(lambda, i).is_negative())
    }

    /// Dominant with integer pairings against every simple coroot.
    pub fn is_dominant_integral(&self, lambda: &Weight<T>) -> bool {
        (0..self.rank()).all(|i| {
            let p = self.simple_coroot_pairing(lambda, i);
            p.is_integer() && !p.is_negative()
        })
    }

    /// True when `lambda` lies in the root lattice.
    pub fn in_root_lattice(&self, lambda: &Weight<T>) -> bool {
        lambda.is_integral_vector()
    }

    /// Regular: no root is orthogonal to `lambda`.
    pub fn is_regular(&self, lambda: &Weight<T>) -> bool {
        self.positive_roots().iter().all(|a| !self.pairing(lambda, a).is_zero())
    }

    pub fn check_rank(&self, lambda: &Weight<T>) -> Result<()> {
        if lambda.rank() == self.rank() {
            Ok(())
        } else {
            Err(Error::RankMismatch { expected: self.rank(), found: lambda.rank() })
        }
    }

    /// Checks that a matrix permutes the roots.
    pub fn permutes_roots(&self, m: &Matrix<T>) -> bool {
        if m.rows() != self.rank() || m.cols() != self.rank() {
            return false;
        }
        let mut hit = HashSet::with_capacity(self.roots.len());
        self.roots.iter().all(|r| {
            let img = Weight(m.apply(&r.0));
            match self.root_position(&img) {
                Some(p) => hit.insert(p),
                None => false,
            }
        })
    }

    /// Checks `m^T G m = G`.
    pub fn preserves_pairing(&self, m: &Matrix<T>) -> bool {
        m.rows() == self.rank()
            && m.cols() == self.rank()
            && m.transpose().matmul(&self.gram).matmul(m) == self.gram
    }

    /// A regular vector built from `rho` plus `sum_i eps_i varpi_i`,
    /// `eps_i = 1/(p + i)` for a fixed prime `p`.
    pub fn perturbed_rho(&self) -> Weight<T> {
        self.perturbed_rho_with(1009)
    }

    pub fn perturbed_rho_with(&self, p: i64) -> Weight<T> {
        let eps: Vec<T> = (0..self.rank()).map(|i| T::ratio(1, p + i as i64)).collect();
        self.rho.add(&self.from_fundamental(&eps))
    }
}

/// Positive diagonal `d` with `a_ij d_j = a_ji d_i`, normalised so that the
/// shortest root of each component has `(alpha, alpha) = 2`.
fn symmetrizer_of<T: Scalar>(a: &[Vec<i64>]) -> Vec<T> {
    let n = a.len();
    let mut d: Vec<Option<T>> = vec![None; n];
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        let mut component = vec![start];
        d[start] = Some(T::one());
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            for j in 0..n {
                if j != i && a[i][j] != 0 && d[j].is_none() {
                    let di = d[i].clone().unwrap();
                    d[j] = Some(di * T::from_int(a[j][i]) / T::from_int(a[i][j]));
                    component.push(j);
                    queue.push_back(j);
                }
            }
        }
        let min = component.iter().map(|&i| d[i].clone().unwrap()).min().unwrap();
        for &i in &component {
            d[i] = Some(d[i].clone().unwrap() / min.clone());
        }
    }
    d.into_iter().map(Option::unwrap).collect()
}

/// Closure of the simple roots (and their negatives) under simple reflections.
fn close_simple_roots(a: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue = VecDeque::new();
    for i in 0..n {
        let mut e = vec![0i64; n];
        e[i] = 1;
        if seen.insert(e.clone()) {
            queue.push_back(e);
        }
    }
    while let Some(r) = queue.pop_front() {
        for i in 0..n {
            let p: i64 = (0..n).map(|j| r[j] * a[j][i]).sum();
            let mut s = r.clone();
            s[i] -= p;
            if seen.insert(s.clone()) {
                queue.push_back(s);
            }
        }
    }
    let mut out: Vec<Vec<i64>> = seen.into_iter().collect();
    out.sort();
    out
}
