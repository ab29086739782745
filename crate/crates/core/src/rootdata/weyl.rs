//! Weyl group elements and the algorithms that avoid enumerating the group.

use std::collections::{HashSet, VecDeque};
use std::hash::{Hash, Hasher};

use num_integer::Integer;

use super::{fast, RootSystem, Weight};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Scalar;
use crate::Rational;

/// Enumeration cap used when callers do not pass one.
pub const DEFAULT_CAP: usize = 1_000_000;

/// An element of the Weyl group, as a matrix on simple-root coordinates
/// together with a (not necessarily reduced) word in simple reflections.
///
/// The word `[i1, i2, ..., ik]` denotes `s_i1 s_i2 ... s_ik`, so `s_ik`
/// acts first. Equality and hashing look at the matrix only.
#[derive(Clone, Debug)]
pub struct WeylElement<T: Scalar = Rational> {
    pub matrix: Matrix<T>,
    pub word: Vec<usize>,
}

impl<T: Scalar> PartialEq for WeylElement<T> {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl<T: Scalar> Eq for WeylElement<T> {}

impl<T: Scalar> Hash for WeylElement<T> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.matrix.hash(state);
    }
}

impl<T: Scalar> WeylElement<T> {
    pub fn identity(rank: usize) -> Self {
        WeylElement { matrix: Matrix::identity(rank), word: Vec::new() }
    }

    pub fn simple(r: &RootSystem<T>, i: usize) -> Self {
        WeylElement { matrix: r.reflection_matrix(i).clone(), word: vec![i] }
    }

    pub fn from_word(r: &RootSystem<T>, word: &[usize]) -> Self {
        let mut m = Matrix::identity(r.rank());
        for &i in word {
            m = m.matmul(r.reflection_matrix(i));
        }
        WeylElement { matrix: m, word: word.to_vec() }
    }

    pub fn rank(&self) -> usize {
        self.matrix.rows()
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }

    /// `self * other` (apply `other` first).
    pub fn compose(&self, other: &Self) -> Self {
        let mut word = self.word.clone();
        word.extend_from_slice(&other.word);
        WeylElement { matrix: self.matrix.matmul(&other.matrix), word }
    }

    pub fn inverse(&self) -> Self {
        let matrix = self.matrix.inverse().expect("Weyl group elements are invertible");
        let word = self.word.iter().rev().copied().collect();
        WeylElement { matrix, word }
    }

    pub fn apply(&self, lambda: &Weight<T>) -> Result<Weight<T>> {
        if lambda.rank() != self.rank() {
            return Err(Error::RankMismatch { expected: self.rank(), found: lambda.rank() });
        }
        Ok(Weight(self.matrix.apply(&lambda.0)))
    }

    /// Length of the stored word (an upper bound for the Coxeter length).
    pub fn word_len(&self) -> usize {
        self.word.len()
    }
}

/// `apply` as a free function.
pub fn apply<T: Scalar>(w: &WeylElement<T>, lambda: &Weight<T>) -> Result<Weight<T>> {
    w.apply(lambda)
}

/// Result of moving a weight into the dominant chamber.
#[derive(Clone, Debug)]
pub struct DominantChase<T: Scalar = Rational> {
    pub dominant: Weight<T>,
    /// `element.apply(lambda) == dominant`
    pub element: WeylElement<T>,
}

#[derive(Clone, Debug)]
pub struct StabilizerInfo<T: Scalar = Rational> {
    pub generators: Vec<WeylElement<T>>,
    pub is_regular: bool,
}

impl<T: Scalar> RootSystem<T> {
    /// Repeatedly reflects in the first simple root with negative pairing.
    pub fn dominant_representative(&self, lambda: &Weight<T>) -> DominantChase<T> {
        let n = self.rank();
        let mut mu = lambda.clone();
        let mut m = Matrix::identity(n);
        let mut word_rev = Vec::new();
        while let Some(i) = (0..n).find(|&i| self.simple_coroot_pairing(&mu, i).is_negative()) {
            self.reflect_in_place(i, &mut mu);
            m = left_reflect(self, i, &m);
            word_rev.push(i);
        }
        word_rev.reverse();
        DominantChase { dominant: mu, element: WeylElement { matrix: m, word: word_rev } }
    }

    /// Orbit `W . lambda` by breadth-first closure under simple reflections.
    pub fn weyl_orbit(&self, lambda: &Weight<T>, cap: usize) -> Result<Vec<Weight<T>>> {
        if let Some(res) = self.weyl_orbit_int(lambda, cap) {
            return res;
        }
        self.weyl_orbit_exact(lambda, cap)
    }

    /// The same orbit computed on scaled integer Dynkin labels; `None` on
    /// `i64` overflow.
    fn weyl_orbit_int(&self, lambda: &Weight<T>, cap: usize) -> Option<Result<Vec<Weight<T>>>> {
        let mut both = self.to_fundamental(lambda);
        both.extend(lambda.0.iter().cloned());
        let (mut ints, denom) = fast::to_scaled_ints(&both)?;
        let coords = ints.split_off(self.rank());
        let small = |v: &[i128]| v.iter().map(|&x| i64::try_from(x).ok()).collect::<Option<Vec<i64>>>();
        // i64 labels hash faster; fall back to i128 on overflow
        let orbit: Vec<Vec<i128>> = match (small(&ints), small(&coords)) {
            (Some(l), Some(c)) if l.iter().chain(&c).all(|x| x.unsigned_abs() < 1 << 40) => {
                match fast::label_orbit::<i64>(self.cartan_matrix(), l, c, cap) {
                    Some(Ok(o)) => o.into_iter().map(|v| v.into_iter().map(i128::from).collect()).collect(),
                    Some(Err(e)) => return Some(Err(e)),
                    None => match fast::label_orbit::<i128>(self.cartan_matrix(), ints, coords, cap)? {
                        Ok(o) => o,
                        Err(e) => return Some(Err(e)),
                    },
                }
            }
            _ => match fast::label_orbit::<i128>(self.cartan_matrix(), ints, coords, cap)? {
                Ok(o) => o,
                Err(e) => return Some(Err(e)),
            },
        };
        let mut out = Vec::with_capacity(orbit.len());
        for coords in orbit {
            let mut w = Vec::with_capacity(coords.len());
            for c in coords {
                let (p, q) = match (i64::try_from(c), i64::try_from(denom)) {
                    (Ok(p), Ok(q)) => (p, q),
                    _ => {
                        let g = c.gcd(&denom);
                        (i64::try_from(c / g).ok()?, i64::try_from(denom / g).ok()?)
                    }
                };
                w.push(T::ratio(p, q));
            }
            out.push(Weight(w));
        }
        Some(Ok(out))
    }

    /// Orbit by closure with exact scalars.
    pub fn weyl_orbit_exact(&self, lambda: &Weight<T>, cap: usize) -> Result<Vec<Weight<T>>> {
        let mut seen = HashSet::new();
        seen.insert(lambda.clone());
        let mut out = vec![lambda.clone()];
        let mut head = 0;
        while head < out.len() {
            let cur = out[head].clone();
            head += 1;
            for i in 0..self.rank() {
                let next = self.reflect(i, &cur);
                if !seen.contains(&next) {
                    if out.len() >= cap {
                        return Err(Error::CapExceeded { cap });
                    }
                    seen.insert(next.clone());
                    out.push(next);
                }
            }
        }
        Ok(out)
    }

    /// Generators of `Stab_W(lambda)`: simple reflections fixing the dominant
    /// representative, conjugated back by the chasing element.
    pub fn stabilizer_generators(&self, lambda: &Weight<T>) -> StabilizerInfo<T> {
        let chase = self.dominant_representative(lambda);
        let w = &chase.element;
        let w_inv = w.inverse();
        let generators: Vec<WeylElement<T>> = (0..self.rank())
            .filter(|&i| self.simple_coroot_pairing(&chase.dominant, i).is_zero())
            .map(|i| w_inv.compose(&WeylElement::simple(self, i)).compose(w))
            .collect();
        StabilizerInfo { is_regular: generators.is_empty(), generators }
    }

    /// The longest element `w0`, obtained by chasing `-rho` to `rho`.
    pub fn longest_element(&self) -> WeylElement<T> {
        self.dominant_representative(&self.rho().neg()).element
    }

    /// Longest element of the parabolic subgroup generated by `{s_j : j in subset}`.
    pub fn longest_element_of(&self, subset: &[usize]) -> WeylElement<T> {
        let n = self.rank();
        let mut mu = subset
            .iter()
            .fold(Weight::zero(n), |acc, &j| acc.sub(self.fundamental_weight(j)));
        let mut m = Matrix::identity(n);
        let mut word_rev = Vec::new();
        while let Some(&i) =
            subset.iter().find(|&&i| self.simple_coroot_pairing(&mu, i).is_negative())
        {
            self.reflect_in_place(i, &mut mu);
            m = left_reflect(self, i, &m);
            word_rev.push(i);
        }
        word_rev.reverse();
        WeylElement { matrix: m, word: word_rev }
    }

    /// All elements of `W`, by closure of `{id}` under right multiplication
    /// by simple reflections.
    pub fn enumerate_weyl(&self, cap: usize) -> Result<Vec<WeylElement<T>>> {
        let n = self.rank();
        let gens: Option<Vec<Vec<i64>>> = self.reflections.iter().map(fast::matrix_ints).collect();
        if let Some(res) = gens.and_then(|g| fast::matrix_closure(n, &g, cap)) {
            let (mats, links) = res?;
            let mut words: Vec<Vec<usize>> = Vec::with_capacity(mats.len());
            let mut out = Vec::with_capacity(mats.len());
            for (k, m) in mats.into_iter().enumerate() {
                let word = if k == 0 {
                    Vec::new()
                } else {
                    let (parent, g) = links[k];
                    let mut w = words[parent].clone();
                    w.push(g);
                    w
                };
                words.push(word.clone());
                out.push(WeylElement { matrix: int_matrix(n, &m), word });
            }
            return Ok(out);
        }
        let id = WeylElement::identity(n);
        let mut index: HashSet<Matrix<T>> = HashSet::new();
        index.insert(id.matrix.clone());
        let mut out = vec![id];
        let mut queue = VecDeque::from([0usize]);
        while let Some(k) = queue.pop_front() {
            for i in 0..n {
                let m = right_reflect(self, &out[k].matrix, i);
                if index.contains(&m) {
                    continue;
                }
                if out.len() >= cap {
                    return Err(Error::CapExceeded { cap });
                }
                index.insert(m.clone());
                let mut word = out[k].word.clone();
                word.push(i);
                out.push(WeylElement { matrix: m, word });
                queue.push_back(out.len() - 1);
            }
        }
        Ok(out)
    }

    /// Closure of a set of matrices under multiplication (the generated
    /// finite group, identity included).
    pub fn generated_group(&self, gens: &[Matrix<T>], cap: usize) -> Result<Vec<Matrix<T>>> {
        generated_group(self.rank(), gens, cap)
    }
}

/// Closure of a set of invertible matrices of finite order under
/// multiplication.
pub fn generated_group<T: Scalar>(n: usize, gens: &[Matrix<T>], cap: usize) -> Result<Vec<Matrix<T>>> {
    let ints: Option<Vec<Vec<i64>>> = gens.iter().map(fast::matrix_ints).collect();
    if let Some(res) = ints.and_then(|g| fast::matrix_closure(n, &g, cap)) {
        return Ok(res?.0.iter().map(|m| int_matrix(n, m)).collect());
    }
    let id = Matrix::identity(n);
    let mut seen = HashSet::new();
    seen.insert(id.clone());
    let mut out = vec![id];
    let mut head = 0;
    while head < out.len() {
        let cur = out[head].clone();
        head += 1;
        for g in gens {
            let m = cur.matmul(g);
            if seen.insert(m.clone()) {
                if out.len() >= cap {
                    return Err(Error::CapExceeded { cap });
                }
                out.push(m);
            }
        }
    }
    Ok(out)
}

fn int_matrix<T: Scalar>(n: usize, m: &[i64]) -> Matrix<T> {
    Matrix::from_fn(n, n, |i, j| T::from_int(m[i * n + j]))
}

/// `s_i * m`: only row `i` changes.
fn left_reflect<T: Scalar>(r: &RootSystem<T>, i: usize, m: &Matrix<T>) -> Matrix<T> {
    let n = r.rank();
    let a = r.cartan_matrix();
    let mut out = m.clone();
    for c in 0..n {
        let p = (0..n)
            .filter(|&j| a[j][i] != 0)
            .fold(T::zero(), |acc, j| acc + m[(j, c)].clone() * T::from_int(a[j][i]));
        out[(i, c)] = m[(i, c)].clone() - p;
    }
    out
}

/// `m * s_i`: `m - (m e_i) r_i^T` with `r_i[j] = a_ji`.
fn right_reflect<T: Scalar>(r: &RootSystem<T>, m: &Matrix<T>, i: usize) -> Matrix<T> {
    let n = r.rank();
    let a = r.cartan_matrix();
    let mut out = m.clone();
    for row in 0..n {
        let mi = m[(row, i)].clone();
        if mi.is_zero() {
            continue;
        }
        for j in 0..n {
            if a[j][i] != 0 {
                out[(row, j)] = out[(row, j)].clone() - mi.clone() * T::from_int(a[j][i]);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Rational64;

    type R = RootSystem<Rational64>;

    fn q(n: i64, d: i64) -> Rational64 {
        Rational64::new(n, d)
    }

    #[test]
    fn apply_examples() {
        let a1 = R::from_type_str("A1").unwrap();
        let s = WeylElement::simple(&a1, 0);
        let w = a1.fundamental_weight(0).clone();
        assert_eq!(s.apply(&w).unwrap(), w.neg());

        let a2 = R::from_type_str("A2").unwrap();
        let s1 = WeylElement::simple(&a2, 0);
        assert_eq!(s1.apply(&a2.simple_root(1)).unwrap(), Weight::from_i64(&[1, 1]));
        let any = WeylElement::from_word(&a2, &[0, 1, 0]);
        assert!(any.apply(&Weight::zero(2)).unwrap().is_zero());
        assert_eq!(
            any.apply(&Weight::zero(3)).unwrap_err(),
            Error::RankMismatch { expected: 2, found: 3 }
        );
    }

    #[test]
    fn dominant_representative_examples() {
        let a1 = R::from_type_str("A1").unwrap();
        let lam = a1.fundamental_weight(0).scale(&q(-3, 1));
        let chase = a1.dominant_representative(&lam);
        assert_eq!(chase.dominant, a1.fundamental_weight(0).scale(&q(3, 1)));
        assert_eq!(chase.element, WeylElement::simple(&a1, 0));

        let a2 = R::from_type_str("A2").unwrap();
        let chase = a2.dominant_representative(&a2.rho().neg());
        assert_eq!(&chase.dominant, a2.rho());
        assert_eq!(chase.element, a2.longest_element());

        let chase = a2.dominant_representative(a2.rho());
        assert!(chase.element.is_identity());
    }

    #[test]
    fn chase_element_matches_word() {
        let b3 = R::from_type_str("B3").unwrap();
        let lam = Weight(vec![q(-1, 2), q(3, 1), q(-7, 3)]);
        let chase = b3.dominant_representative(&lam);
        assert_eq!(chase.element.apply(&lam).unwrap(), chase.dominant);
        assert_eq!(WeylElement::from_word(&b3, &chase.element.word), chase.element);
    }

    #[test]
    fn orbit_examples() {
        let a2 = R::from_type_str("A2").unwrap();
        assert_eq!(a2.weyl_orbit(a2.rho(), 100).unwrap().len(), 6);
        assert_eq!(a2.weyl_orbit(a2.fundamental_weight(0), 100).unwrap().len(), 3);
        assert_eq!(a2.weyl_orbit(&Weight::zero(2), 100).unwrap(), vec![Weight::zero(2)]);
        assert_eq!(a2.weyl_orbit(a2.rho(), 5).unwrap_err(), Error::CapExceeded { cap: 5 });
    }

    #[test]
    fn stabilizer_examples() {
        let a2 = R::from_type_str("A2").unwrap();
        let w1 = a2.fundamental_weight(0).clone();
        let st = a2.stabilizer_generators(&w1);
        assert!(!st.is_regular);
        assert_eq!(st.generators.len(), 1);
        assert_eq!(st.generators[0], WeylElement::simple(&a2, 1));
        assert!(a2.stabilizer_generators(a2.rho()).is_regular);
        let st0 = a2.stabilizer_generators(&Weight::zero(2));
        assert_eq!(st0.generators.len(), 2);

        // non-dominant input: stabilizer of s1(varpi_2) is conjugate to <s1>
        let lam = a2.reflect(1, a2.fundamental_weight(1));
        let st = a2.stabilizer_generators(&lam);
        assert_eq!(st.generators.len(), 1);
        assert_eq!(st.generators[0].apply(&lam).unwrap(), lam);
        assert!(!st.generators[0].is_identity());
    }

    #[test]
    fn longest_element_examples() {
        let a1 = R::from_type_str("A1").unwrap();
        assert_eq!(a1.longest_element().matrix, Matrix::identity(1).neg());

        let a2 = R::from_type_str("A2").unwrap();
        let w0 = a2.longest_element();
        assert_ne!(w0.matrix, Matrix::identity(2).neg());
        assert_eq!(w0.apply(&a2.simple_root(0)).unwrap(), a2.simple_root(1).neg());

        let b2 = R::from_type_str("B2").unwrap();
        assert_eq!(b2.longest_element().matrix, Matrix::identity(2).neg());
    }

    #[test]
    fn enumeration_orders() {
        for (t, n) in [("A2", 6), ("G2", 12), ("B2", 8), ("A3", 24), ("B3", 48), ("F4", 1152)] {
            let r = R::from_type_str(t).unwrap();
            assert_eq!(r.enumerate_weyl(DEFAULT_CAP).unwrap().len(), n, "{t}");
        }
        let a3 = R::from_type_str("A3").unwrap();
        assert_eq!(a3.enumerate_weyl(10).unwrap_err(), Error::CapExceeded { cap: 10 });
    }

    #[test]
    fn enumerated_words_match_matrices() {
        let g2 = R::from_type_str("G2").unwrap();
        for w in g2.enumerate_weyl(100).unwrap() {
            assert_eq!(WeylElement::from_word(&g2, &w.word).matrix, w.matrix);
            assert!(g2.permutes_roots(&w.matrix));
            assert!(g2.preserves_pairing(&w.matrix));
        }
    }
}
