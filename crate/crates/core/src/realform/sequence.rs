//! Exhaustive check of `1 -> W_m -> W^theta -> W_a -> 1`.

use std::collections::HashSet;

use serde::Serialize;

use super::{restricted_roots, CartanInvolution};
use crate::error::Result;
use crate::linalg::Matrix;
use crate::rootdata::{generated_group, RootSystem};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExactSequenceReport {
    pub order_w: usize,
    pub order_w_theta: usize,
    pub order_w_m: usize,
    pub order_w_a: usize,
    /// Restriction of `W^theta` to `a*` has image exactly `W_a`.
    pub image_is_w_a: bool,
    /// Its kernel is exactly `W_m`.
    pub kernel_is_w_m: bool,
    pub pass: bool,
}

pub fn verify_exact_sequence<T: Scalar>(
    r: &RootSystem<T>,
    inv: &CartanInvolution<T>,
    cap: usize,
) -> Result<ExactSequenceReport> {
    let theta = inv.theta();
    let all = r.enumerate_weyl(cap)?;
    let w_theta: Vec<&Matrix<T>> = all
        .iter()
        .map(|w| &w.matrix)
        .filter(|m| m.matmul(theta) == theta.matmul(m))
        .collect();

    let rrs = restricted_roots(r, inv);
    let m_gens: Vec<Matrix<T>> = rrs
        .sigma_m_roots()
        .iter()
        .filter(|a| a.0.iter().all(|x| !x.is_negative()))
        .map(|a| r.root_reflection_matrix(a))
        .collect();
    let w_m: HashSet<Matrix<T>> = generated_group(r.rank(), &m_gens, cap)?.into_iter().collect();

    let a_gens: Vec<Matrix<T>> = rrs
        .indivisible_positive_roots()
        .iter()
        .map(|b| rrs.reflection_matrix(&b.coords))
        .collect();
    let w_a: HashSet<Matrix<T>> = generated_group(inv.a_rank(), &a_gens, cap)?.into_iter().collect();

    let n = r.rank();
    let basis: Vec<Vec<T>> = inv.minus_eigenspace_basis().iter().map(|w| w.0.clone()).collect();
    let b = Matrix::from_columns(n, &basis);
    let l = inv.restriction_matrix();
    let mut image = HashSet::new();
    let mut kernel = HashSet::new();
    for m in &w_theta {
        let restricted = l.matmul(m).matmul(&b);
        if restricted.is_identity() {
            kernel.insert((*m).clone());
        }
        image.insert(restricted);
    }

    let image_is_w_a = image == w_a;
    let kernel_is_w_m = kernel == w_m;
    let pass = image_is_w_a && kernel_is_w_m && w_theta.len() == w_m.len() * w_a.len();
    Ok(ExactSequenceReport {
        order_w: all.len(),
        order_w_theta: w_theta.len(),
        order_w_m: w_m.len(),
        order_w_a: w_a.len(),
        image_is_w_a,
        kernel_is_w_m,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realform::{catalog_form, RealFormSpec};
    use crate::rootdata::DEFAULT_CAP;
    use num_rational::Rational64;

    fn report(id: &str) -> ExactSequenceReport {
        let f = catalog_form::<Rational64>(&RealFormSpec::Catalog(id.parse().unwrap())).unwrap();
        verify_exact_sequence(&f.root_system, &f.involution, DEFAULT_CAP).unwrap()
    }

    #[test]
    fn small_examples() {
        let r = report("sl(2,R)");
        assert_eq!((r.order_w_theta, r.order_w_m, r.order_w_a), (2, 1, 2));
        assert!(r.pass);

        let r = report("su(2,1)");
        assert_eq!((r.order_w_m, r.order_w_a), (1, 2));
        assert!(r.pass);

        let r = report("compact(A2)");
        assert_eq!((r.order_w_theta, r.order_w_m, r.order_w_a), (6, 6, 1));
        assert!(r.pass);
    }

    #[test]
    fn nonreduced_and_mixed_forms() {
        for id in ["su(3,1)", "so(5,1)", "so(4,3)", "sp(3,R)", "split(G2)"] {
            assert!(report(id).pass, "{id}");
        }
    }

    #[test]
    fn cap_is_respected() {
        let f = catalog_form::<Rational64>(&RealFormSpec::Catalog("split(F4)".parse().unwrap())).unwrap();
        assert!(verify_exact_sequence(&f.root_system, &f.involution, 100).is_err());
    }
}
