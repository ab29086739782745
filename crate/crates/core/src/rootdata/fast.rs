//! Checked machine-integer kernels for orbit and group closure.
//!
//! Weyl group matrices are integral in simple-root coordinates and orbit
//! points have integral Dynkin labels after clearing one common
//! denominator, so both closures can run on machine integers. Every kernel returns
//! `None` on overflow and callers fall back to exact scalars.

use std::hash::Hash;

use num_integer::Integer;
use num_traits::{CheckedMul, CheckedSub, Zero};
use rustc_hash::FxHashSet;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Common denominator and scaled integer numerators.
pub(super) fn to_scaled_ints<T: Scalar>(v: &[T]) -> Option<(Vec<i128>, i128)> {
    let pairs: Vec<(i128, i128)> = v
        .iter()
        .map(|x| x.to_i64_pair().map(|(n, d)| (n as i128, d as i128)))
        .collect::<Option<_>>()?;
    let mut l: i128 = 1;
    for &(_, d) in &pairs {
        l = l.checked_mul(d / l.gcd(&d))?;
    }
    let ints = pairs
        .iter()
        .map(|&(n, d)| n.checked_mul(l / d))
        .collect::<Option<Vec<i128>>>()?;
    Some((ints, l))
}

/// Orbit of a point given by integer Dynkin labels `n` and integer
/// simple-root coordinates `c` (both scaled by the same denominator). The
/// reflection `s_i` subtracts `n_i` from `c_i` and `n_i a_i.` from `n`, where
/// `a_i.` is row `i` of the Cartan matrix. Returns the coordinate vectors;
/// `Some(Err)` when the cap is hit.
pub(super) fn label_orbit<I>(cartan: &[Vec<i64>], labels: Vec<I>, coords: Vec<I>, cap: usize) -> Option<Result<Vec<Vec<I>>>>
where
    I: Copy + Eq + Hash + Zero + CheckedMul + CheckedSub + From<i64>,
{
    let n = cartan.len();
    let mut seen: FxHashSet<Vec<I>> = FxHashSet::default();
    seen.insert(labels.clone());
    // flat storage, `n` entries per orbit point
    let mut all_labels = labels;
    let mut all_coords = coords;
    let mut next = vec![I::zero(); n];
    let mut head = 0;
    while head * n < all_labels.len() {
        for i in 0..n {
            let c = all_labels[head * n + i];
            if c.is_zero() {
                continue;
            }
            next.copy_from_slice(&all_labels[head * n..(head + 1) * n]);
            for (j, x) in next.iter_mut().enumerate() {
                let a = cartan[i][j];
                if a != 0 {
                    *x = x.checked_sub(&c.checked_mul(&I::from(a))?)?;
                }
            }
            if !seen.contains(&next) {
                if seen.len() >= cap {
                    return Some(Err(Error::CapExceeded { cap }));
                }
                seen.insert(next.clone());
                all_labels.extend_from_slice(&next);
                let start = all_coords.len();
                all_coords.extend_from_within(head * n..(head + 1) * n);
                all_coords[start + i] = all_coords[start + i].checked_sub(&c)?;
            }
        }
        head += 1;
    }
    Some(Ok(all_coords.chunks(n).map(<[I]>::to_vec).collect()))
}

/// Closure of `{id}` under right multiplication by the generators
/// (row-major `n x n` integer matrices), with `(parent, generator)` links
/// for every element but the identity.
pub(super) type Closure = (Vec<Vec<i64>>, Vec<(usize, usize)>);

pub(super) fn matrix_closure(n: usize, gens: &[Vec<i64>], cap: usize) -> Option<Result<Closure>> {
    let mut id = vec![0i64; n * n];
    for i in 0..n {
        id[i * n + i] = 1;
    }
    let mut seen: FxHashSet<Vec<i64>> = FxHashSet::default();
    seen.insert(id.clone());
    let mut out = vec![id];
    let mut links = vec![(0, 0)];
    let mut head = 0;
    while head < out.len() {
        for (gi, g) in gens.iter().enumerate() {
            let m = mul(n, &out[head], g)?;
            if !seen.contains(&m) {
                if out.len() >= cap {
                    return Some(Err(Error::CapExceeded { cap }));
                }
                seen.insert(m.clone());
                out.push(m);
                links.push((head, gi));
            }
        }
        head += 1;
    }
    Some(Ok((out, links)))
}

/// Integer entries of a matrix, row-major.
pub(super) fn matrix_ints<T: Scalar>(m: &crate::linalg::Matrix<T>) -> Option<Vec<i64>> {
    (0..m.rows()).flat_map(|i| m.row(i).iter()).map(Scalar::as_int).collect()
}

fn mul(n: usize, a: &[i64], b: &[i64]) -> Option<Vec<i64>> {
    let mut out = vec![0i64; n * n];
    for i in 0..n {
        for k in 0..n {
            let x = a[i * n + k];
            if x == 0 {
                continue;
            }
            for j in 0..n {
                let y = b[k * n + j];
                if y != 0 {
                    out[i * n + j] = out[i * n + j].checked_add(x.checked_mul(y)?)?;
                }
            }
        }
    }
    Some(out)
}
