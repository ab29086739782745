//! Translation-principle arithmetic: weight spectra, the uniqueness lemma
//! for `Lambda + mu_0`, tensoring with finite-dimensional representations,
//! scaling along lines `(kN+1) Lambda`, and the search for a strongly
//! regular target.

use std::collections::{HashSet, VecDeque};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::criterion::extended_stabilizer;
use crate::error::{Error, Result};
use crate::exponents::{orbit_plus_restrictions, DualChamber, FormalDSDatum, Position};
use crate::linalg;
use crate::realform::{CartanInvolution, RestrictedRootSystem};
use crate::rootdata::{RootSystem, Weight, DEFAULT_CAP};
use crate::scalar::{Scalar, SignedRoot};
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct TranslationConfig {
    /// Integrality constant: `N Lambda` is integral.
    #[serde(rename = "N")]
    pub n: u64,
    pub max_k: u64,
    pub max_mu_coeff: u64,
    pub worst_case_exponents: bool,
    pub cap: usize,
}

impl Default for TranslationConfig {
    fn default() -> Self {
        TranslationConfig { n: 1, max_k: 10, max_mu_coeff: 2, worst_case_exponents: false, cap: DEFAULT_CAP }
    }
}

impl TranslationConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n == 0 || self.max_k == 0 || self.max_mu_coeff == 0 || self.cap == 0 {
            return Err(Error::PreconditionFailed("translation bounds must be positive".into()));
        }
        Ok(())
    }

    /// `kN + 1`.
    pub fn scale<T: Scalar>(&self, k: u64) -> T {
        T::from_int((k * self.n + 1) as i64)
    }
}

fn require_dominant_integral<T: Scalar>(r: &RootSystem<T>, mu: &Weight<T>) -> Result<()> {
    r.check_rank(mu)?;
    if r.is_dominant_integral(mu) {
        Ok(())
    } else {
        Err(Error::NotDominantIntegral(mu.to_string()))
    }
}

/// Dominant weights of `F_mu`: `mu` minus sums of positive roots, kept while
/// dominant.
pub fn dominant_weights_below<T: Scalar>(r: &RootSystem<T>, mu: &Weight<T>) -> Result<Vec<Weight<T>>> {
    require_dominant_integral(r, mu)?;
    let mut seen = HashSet::new();
    seen.insert(mu.clone());
    let mut out = vec![mu.clone()];
    let mut queue = VecDeque::from([mu.clone()]);
    while let Some(lam) = queue.pop_front() {
        for a in r.positive_roots() {
            let next = lam.sub(a);
            if r.is_dominant(&next) && seen.insert(next.clone()) {
                out.push(next.clone());
                queue.push_back(next);
            }
        }
    }
    Ok(out)
}

/// The saturated weight set of the irreducible representation `F_mu`.
pub fn weight_spectrum<T: Scalar>(r: &RootSystem<T>, mu: &Weight<T>, cap: usize) -> Result<Vec<Weight<T>>> {
    let mut out = Vec::new();
    for lam in dominant_weights_below(r, mu)? {
        out.extend(r.weyl_orbit(&lam, cap)?);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LambdaMuViolation {
    pub word: Vec<usize>,
    pub nu: Vec<String>,
    pub sigma: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LambdaMuReport {
    /// Solutions `(w, nu, sigma)` of `w(Lambda + mu_0) = nu + sigma`.
    pub checked: usize,
    pub violations: Vec<LambdaMuViolation>,
}

/// Brute-force check that `w(Lambda + mu_0) = nu + sigma` with `nu` in
/// `W Lambda` and `sigma` a weight of `F_mu` forces `w Lambda = nu` and
/// `w mu_0 = sigma`, for `Lambda` a positive multiple of `mu_0`.
pub fn check_lambda_mu_comp<T: Scalar>(
    r: &RootSystem<T>,
    lambda: &Weight<T>,
    mu0: &Weight<T>,
    cap: usize,
) -> Result<LambdaMuReport> {
    r.check_rank(lambda)?;
    r.check_rank(mu0)?;
    let t = positive_multiple(lambda, mu0).ok_or_else(|| {
        Error::PreconditionFailed(format!("{lambda} is not a positive multiple of {mu0}"))
    })?;
    debug_assert!(t.is_positive());
    let mu = r.dominant_representative(mu0).dominant;
    let spectrum: HashSet<Weight<T>> = weight_spectrum(r, &mu, cap)?.into_iter().collect();
    let orbit = r.weyl_orbit(lambda, cap)?;
    let group = r.enumerate_weyl(cap)?;
    let sum = lambda.add(mu0);

    let mut checked = 0;
    let mut violations = Vec::new();
    for w in &group {
        let target = Weight(w.matrix.apply(&sum.0));
        let w_lambda = Weight(w.matrix.apply(&lambda.0));
        let w_mu0 = Weight(w.matrix.apply(&mu0.0));
        for nu in &orbit {
            let sigma = target.sub(nu);
            if !spectrum.contains(&sigma) {
                continue;
            }
            checked += 1;
            if &w_lambda != nu || w_mu0 != sigma {
                violations.push(LambdaMuViolation {
                    word: w.word.clone(),
                    nu: nu.0.iter().map(Scalar::to_canonical).collect(),
                    sigma: sigma.0.iter().map(Scalar::to_canonical).collect(),
                });
            }
        }
    }
    Ok(LambdaMuReport { checked, violations })
}

/// `t > 0` with `lambda = t mu`.
fn positive_multiple<T: Scalar>(lambda: &Weight<T>, mu: &Weight<T>) -> Option<T> {
    let i = mu.0.iter().position(|x| !x.is_zero())?;
    let t = lambda.0[i].clone() / mu.0[i].clone();
    (t.is_positive() && &mu.scale(&t) == lambda).then_some(t)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorReport<T: Scalar = Rational> {
    pub pass: bool,
    pub exact: bool,
    /// Per exponent: the smallest margin over the orbit of `mu` (exact mode)
    /// or the margin of the exponent itself (fast mode).
    pub margins: Vec<SignedRoot<T>>,
    /// Fast mode only: `|mu|^2`, the bound on `|(w mu)|_a|^2`.
    pub norm_bound_sq: Option<T>,
}

/// `e + (w mu)|_a` in `-int C` for all exponents `e` and `w in W`.
///
/// Fast mode checks the sufficient condition `margin(e) > |mu|`, using that
/// restriction to `a` does not increase norms.
pub fn tensor_l2_condition<T: Scalar>(
    r: &RootSystem<T>,
    inv: &CartanInvolution<T>,
    chamber: &DualChamber<T>,
    d: &FormalDSDatum<T>,
    mu: &Weight<T>,
    exact: bool,
    cap: usize,
) -> Result<TensorReport<T>> {
    require_dominant_integral(r, mu)?;
    if exact {
        let shifts: HashSet<Vec<T>> = r.weyl_orbit(mu, cap)?.iter().map(|nu| inv.restrict(nu)).collect();
        let margins: Vec<SignedRoot<T>> = d
            .exponents
            .iter()
            .map(|e| {
                shifts
                    .iter()
                    .map(|s| chamber.cone_position(&linalg::add_vec(e, s)).margin)
                    .min()
                    .unwrap_or_else(SignedRoot::zero)
            })
            .collect();
        let pass = chamber.is_fulldim() && margins.iter().all(SignedRoot::is_positive);
        Ok(TensorReport { pass, exact, margins, norm_bound_sq: None })
    } else {
        let bound = r.norm_sq(mu);
        let margins: Vec<SignedRoot<T>> =
            d.exponents.iter().map(|e| chamber.cone_position(e).margin).collect();
        let pass = chamber.is_fulldim()
            && margins.iter().all(|m| m.is_positive() && m.square > bound);
        Ok(TensorReport { pass, exact, margins, norm_bound_sq: Some(bound) })
    }
}

/// `((kN+1) Lambda, E')` with `E' = (kN+1) E`, or all of
/// `[(kN+1) Lambda]^+|_a` in worst-case mode.
pub fn translate_line<T: Scalar>(
    r: &RootSystem<T>,
    inv: &CartanInvolution<T>,
    d: &FormalDSDatum<T>,
    k: u64,
    cfg: &TranslationConfig,
) -> Result<FormalDSDatum<T>> {
    let allowed: HashSet<Vec<T>> = orbit_plus_restrictions(r, inv, &d.lambda, cfg.cap)?.into_iter().collect();
    if let Some(e) = d.exponents.iter().find(|e| !allowed.contains(*e)) {
        return Err(Error::InvalidDatum(format!(
            "exponent {} is not in [Lambda]^+|_a",
            crate::scalar::format_vector(e)
        )));
    }
    let s: T = cfg.scale(k);
    let lambda = d.lambda.scale(&s);
    let exponents = if cfg.worst_case_exponents {
        orbit_plus_restrictions(r, inv, &lambda, cfg.cap)?
    } else {
        d.exponents.iter().map(|e| linalg::scale_vec(&s, e)).collect()
    };
    Ok(FormalDSDatum { lambda, exponents, label: d.label.clone() })
}

/// One tensoring step of the certificate ledger.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound = "")]
pub struct StepCertificate<T: Scalar = Rational> {
    pub mu: Weight<T>,
    /// Dominant representative of the infinitesimal character after the step.
    pub target: Weight<T>,
    /// Margin of `E_k + conv(W mu_1)|_a + ... + conv(W mu_j)|_a`.
    pub margin_sq: SerSigned<T>,
}

/// A signed square root serialized as `{sign, square}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound = "")]
pub struct SerSigned<T: Scalar = Rational> {
    pub sign: i8,
    #[serde(serialize_with = "ser_scalar")]
    pub square: T,
}

fn ser_scalar<T: Scalar, S: serde::Serializer>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_canonical())
}

impl<T: Scalar> From<SignedRoot<T>> for SerSigned<T> {
    fn from(m: SignedRoot<T>) -> Self {
        SerSigned { sign: m.sign, square: m.square }
    }
}

impl<T: Scalar> From<&SerSigned<T>> for SignedRoot<T> {
    fn from(m: &SerSigned<T>) -> Self {
        SignedRoot { sign: m.sign, square: m.square.clone() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound = "")]
pub struct Certificates<T: Scalar = Rational> {
    pub strongly_regular: bool,
    pub cone_condition: bool,
    /// Margin of `E_k` before any tensoring.
    pub initial_margin: SerSigned<T>,
    pub steps: Vec<StepCertificate<T>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound = "")]
pub struct TranslationResult<T: Scalar = Rational> {
    pub k: u64,
    #[serde(rename = "N")]
    pub n: u64,
    /// Dominant representative of `Lambda`.
    pub lambda_tilde: Weight<T>,
    /// Fundamental-weight coefficients of `mu_1 + ... + mu_m`.
    pub mu_coefficients: Vec<u64>,
    pub mus: Vec<Weight<T>>,
    pub lambda_final: Weight<T>,
    /// Exponents `E_k` on the line, before tensoring.
    #[serde(serialize_with = "ser_lists")]
    pub line_exponents: Vec<Vec<T>>,
    pub certificates: Certificates<T>,
    /// The selection rule among admissible targets.
    pub convention: String,
}

fn ser_lists<T: Scalar, S: serde::Serializer>(v: &[Vec<T>], s: S) -> std::result::Result<S::Ok, S::Error> {
    crate::exponents::coord_lists::serialize(v, s)
}

impl<T: Scalar> TranslationResult<T> {
    /// `(kN+1) Lambda_tilde + sum mus`, recomputed.
    pub fn recompute_final(&self) -> Weight<T> {
        let s = T::from_int((self.k * self.n + 1) as i64);
        self.mus.iter().fold(self.lambda_tilde.scale(&s), |acc, m| acc.add(m))
    }
}

/// k, the target weight, the initial margin and the cumulative margins.
type Hit<T> = (u64, Weight<T>, SignedRoot<T>, Vec<SignedRoot<T>>);

/// Candidate coefficient vectors, by total height, then preferring
/// lower-index fundamental weights.
pub fn mu_candidates(rank: usize, max_coeff: u64) -> Vec<Vec<u64>> {
    let mut out: Vec<Vec<u64>> = vec![Vec::new()];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=max_coeff).map(move |c| {
                    let mut w = v.clone();
                    w.push(c);
                    w
                })
            })
            .collect();
    }
    out.sort_by(|a, b| {
        let ha: u64 = a.iter().sum();
        let hb: u64 = b.iter().sum();
        ha.cmp(&hb).then(b.cmp(a))
    });
    out
}

/// Finds `k` and dominant integral `mu_1, ..., mu_m` such that
/// `(kN+1) Lambda_tilde + sum mu_i` is strongly regular while every
/// tensoring step keeps the exponents in `-int C`.
pub fn strong_regularization<T: Scalar>(
    r: &RootSystem<T>,
    inv: &CartanInvolution<T>,
    rrs: &RestrictedRootSystem<T>,
    d: &FormalDSDatum<T>,
    cfg: &TranslationConfig,
) -> Result<TranslationResult<T>> {
    cfg.validate()?;
    r.check_rank(&d.lambda)?;
    let allowed = orbit_plus_restrictions(r, inv, &d.lambda, cfg.cap)?;
    if allowed.is_empty() {
        return Err(Error::NoAdmissibleDirection(format!(
            "no element of the orbit of {} restricts into -int C",
            d.lambda
        )));
    }
    let chamber = DualChamber::new(rrs);
    if d.exponents.is_empty() {
        return Err(Error::InvalidDatum("empty exponent set".into()));
    }
    let allowed: HashSet<Vec<T>> = allowed.into_iter().collect();
    if let Some(e) = d.exponents.iter().find(|e| !allowed.contains(*e)) {
        return Err(Error::InvalidDatum(format!(
            "exponent {} is not in [Lambda]^+|_a",
            crate::scalar::format_vector(e)
        )));
    }

    let lambda_tilde = r.dominant_representative(&d.lambda).dominant;
    let fundamental = r.fundamental_weights();
    let mut hull_cache: Vec<Vec<Vec<T>>> = Vec::with_capacity(r.rank());
    for w in fundamental {
        let pts: HashSet<Vec<T>> = r.weyl_orbit(w, cfg.cap)?.iter().map(|nu| inv.restrict(nu)).collect();
        hull_cache.push(pts.into_iter().collect());
    }
    // E_k for every k, computed once
    let lines: Vec<FormalDSDatum<T>> =
        (0..=cfg.max_k).map(|k| translate_line(r, inv, d, k, cfg)).collect::<Result<_>>()?;

    let candidates = mu_candidates(r.rank(), cfg.max_mu_coeff);
    let evaluate = |coeffs: &Vec<u64>| -> Option<Hit<T>> {
        let shift = coeffs
            .iter()
            .zip(fundamental)
            .fold(Weight::zero(r.rank()), |acc, (&c, w)| acc.add(&w.scale(&T::from_int(c as i64))));
        let hulls: Vec<Vec<Vec<T>>> = coeffs
            .iter()
            .enumerate()
            .flat_map(|(i, &c)| std::iter::repeat_n(hull_cache[i].clone(), c as usize))
            .collect();
        (0..=cfg.max_k).find_map(|k| {
            let lam = lambda_tilde.scale(&cfg.scale(k)).add(&shift);
            if !extended_stabilizer(r, inv, &lam).trivial {
                return None;
            }
            let ex = &lines[k as usize].exponents;
            let initial = chamber.minkowski_margin(ex, &[]);
            let steps: Vec<SignedRoot<T>> =
                (1..=hulls.len()).map(|j| chamber.minkowski_margin(ex, &hulls[..j])).collect();
            let ok = initial.is_positive() && steps.iter().all(SignedRoot::is_positive);
            ok.then_some((k, lam, initial, steps))
        })
    };

    let found = candidates.par_iter().map(|c| (c, evaluate(c))).find_map_first(|(c, res)| res.map(|x| (c.clone(), x)));
    let Some((coeffs, (k, lambda_final, initial, step_margins))) = found else {
        return Err(Error::SearchExhausted(format!(
            "no strongly regular target with k <= {} and coefficients <= {}",
            cfg.max_k, cfg.max_mu_coeff
        )));
    };

    let mus: Vec<Weight<T>> = coeffs
        .iter()
        .enumerate()
        .flat_map(|(i, &c)| std::iter::repeat_n(fundamental[i].clone(), c as usize))
        .collect();
    let s: T = cfg.scale(k);
    let mut cur = lambda_tilde.scale(&s);
    let steps = mus
        .iter()
        .zip(step_margins)
        .map(|(mu, m)| {
            cur = cur.add(mu);
            StepCertificate { mu: mu.clone(), target: r.dominant_representative(&cur).dominant, margin_sq: m.into() }
        })
        .collect();
    Ok(TranslationResult {
        k,
        n: cfg.n,
        lambda_tilde,
        mu_coefficients: coeffs,
        mus,
        lambda_final,
        line_exponents: lines[k as usize].exponents.clone(),
        certificates: Certificates {
            strongly_regular: true,
            cone_condition: true,
            initial_margin: initial.into(),
            steps,
        },
        convention: "least total height of mu, then lower-index fundamental weights first, then least k"
            .into(),
    })
}

/// Re-checks a result with independent code paths: the extended stabilizer
/// and the exact-mode tensor condition on explicit orbit points.
pub fn verify_result<T: Scalar>(
    r: &RootSystem<T>,
    inv: &CartanInvolution<T>,
    rrs: &RestrictedRootSystem<T>,
    res: &TranslationResult<T>,
    cap: usize,
) -> Result<bool> {
    let chamber = DualChamber::new(rrs);
    let final_ok = res.recompute_final() == res.lambda_final;
    let sr = extended_stabilizer(r, inv, &res.lambda_final).trivial;
    let mut exps = res.line_exponents.clone();
    let initial_ok = exps.iter().all(|e| chamber.cone_position(e).position == Position::NegInterior);
    let mut cone_ok = initial_ok;
    for mu in &res.mus {
        let d = FormalDSDatum { lambda: res.lambda_final.clone(), exponents: exps.clone(), label: String::new() };
        cone_ok &= tensor_l2_condition(r, inv, &chamber, &d, mu, true, cap)?.pass;
        let shifts: HashSet<Vec<T>> = r.weyl_orbit(mu, cap)?.iter().map(|nu| inv.restrict(nu)).collect();
        let mut next: HashSet<Vec<T>> = HashSet::new();
        for e in &exps {
            for s in &shifts {
                next.insert(linalg::add_vec(e, s));
            }
        }
        exps = next.into_iter().collect();
    }
    Ok(final_ok && sr && cone_ok)
}

/// `w (Lambda + mu0)` for a Weyl element, as used in reports.
pub fn zuckerman_target<T: Scalar>(r: &RootSystem<T>, lambda: &Weight<T>, mu0: &Weight<T>) -> Weight<T> {
    r.dominant_representative(&lambda.add(mu0)).dominant
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realform::{catalog_form, restricted_roots, RealForm, RealFormSpec};
    use num_rational::Rational64;

    type R = RootSystem<Rational64>;

    fn q(n: i64, d: i64) -> Rational64 {
        Rational64::new(n, d)
    }

    fn form(id: &str) -> (RealForm<Rational64>, RestrictedRootSystem<Rational64>) {
        let f = catalog_form(&RealFormSpec::Catalog(id.parse().unwrap())).unwrap();
        let rrs = restricted_roots(&f.root_system, &f.involution);
        (f, rrs)
    }

    #[test]
    fn spectrum_examples() {
        let a1 = R::from_type_str("A1").unwrap();
        let w = a1.fundamental_weight(0).clone();
        let mut s = weight_spectrum(&a1, &w, 100).unwrap();
        s.sort();
        assert_eq!(s, vec![w.neg(), w.clone()]);

        let a2 = R::from_type_str("A2").unwrap();
        let w1 = a2.fundamental_weight(0).clone();
        let s: HashSet<_> = weight_spectrum(&a2, &w1, 100).unwrap().into_iter().collect();
        let expected: HashSet<_> = [
            w1.clone(),
            w1.sub(&a2.simple_root(0)),
            w1.sub(&a2.simple_root(0)).sub(&a2.simple_root(1)),
        ]
        .into_iter()
        .collect();
        assert_eq!(s, expected);

        let s = weight_spectrum(&a2, a2.rho(), 100).unwrap();
        assert_eq!(s.len(), 7);
        assert!(s.contains(&Weight::zero(2)));

        let half = a2.fundamental_weight(0).scale(&q(1, 2));
        assert!(matches!(weight_spectrum(&a2, &half, 100), Err(Error::NotDominantIntegral(_))));
    }

    #[test]
    fn lambda_mu_examples() {
        let a1 = R::from_type_str("A1").unwrap();
        let w = a1.fundamental_weight(0).clone();
        let rep = check_lambda_mu_comp(&a1, &w, &w, 100).unwrap();
        assert_eq!(rep.checked, 2);
        assert!(rep.violations.is_empty());

        let a2 = R::from_type_str("A2").unwrap();
        let rho = a2.rho().clone();
        let rep = check_lambda_mu_comp(&a2, &rho.scale(&q(1, 2)), &rho, 100).unwrap();
        assert!(rep.checked >= 6);
        assert!(rep.violations.is_empty());

        let b2 = R::from_type_str("B2").unwrap();
        for mu in b2.fundamental_weights() {
            for mu0 in b2.weyl_orbit(mu, 100).unwrap() {
                let rep = check_lambda_mu_comp(&b2, &mu0.scale(&q(2, 1)), &mu0, 100).unwrap();
                assert!(rep.violations.is_empty());
            }
        }

        assert!(matches!(
            check_lambda_mu_comp(&a2, a2.fundamental_weight(1), a2.fundamental_weight(0), 100),
            Err(Error::PreconditionFailed(_))
        ));
    }

    #[test]
    fn tensor_examples() {
        let (f, rrs) = form("sl(2,R)");
        let (r, inv) = (&f.root_system, &f.involution);
        let c = DualChamber::new(&rrs);
        let w = r.fundamental_weight(0).clone();
        let e = inv.restrict(&w.scale(&q(-5, 1)));
        let d = FormalDSDatum { lambda: w.scale(&q(5, 1)), exponents: vec![e], label: String::new() };
        assert!(tensor_l2_condition(r, inv, &c, &d, &w, true, 100).unwrap().pass);
        assert!(tensor_l2_condition(r, inv, &c, &d, &w, false, 100).unwrap().pass);

        let e = inv.restrict(&w.neg());
        let d = FormalDSDatum { lambda: w.clone(), exponents: vec![e], label: String::new() };
        let two_w = w.scale(&q(2, 1));
        assert!(!tensor_l2_condition(r, inv, &c, &d, &two_w, true, 100).unwrap().pass);

        let (f, rrs) = form("compact(A2)");
        let c = DualChamber::new(&rrs);
        let r = &f.root_system;
        let d = FormalDSDatum { lambda: r.rho().clone(), exponents: vec![vec![]], label: String::new() };
        assert!(!tensor_l2_condition(r, &f.involution, &c, &d, r.rho(), true, 100).unwrap().pass);
    }

    #[test]
    fn translate_line_examples() {
        let (f, _) = form("sl(2,R)");
        let (r, inv) = (&f.root_system, &f.involution);
        let w = r.fundamental_weight(0).clone();
        let d = FormalDSDatum::antidominant(r, inv, w.clone(), "", 100).unwrap();
        let cfg = TranslationConfig::default();
        assert_eq!(translate_line(r, inv, &d, 0, &cfg).unwrap(), d);
        let t = translate_line(r, inv, &d, 2, &cfg).unwrap();
        assert_eq!(t.lambda, w.scale(&q(3, 1)));
        assert_eq!(t.exponents, vec![inv.restrict(&w.scale(&q(-3, 1)))]);

        let bad = FormalDSDatum { exponents: vec![inv.restrict(&w)], ..d };
        assert!(matches!(translate_line(r, inv, &bad, 1, &cfg), Err(Error::InvalidDatum(_))));
    }

    #[test]
    fn candidate_order() {
        let c = mu_candidates(2, 1);
        assert_eq!(c, vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]]);
    }

    #[test]
    fn strong_regularization_examples() {
        let cfg = TranslationConfig::default();

        let (f, rrs) = form("sl(2,R)");
        let (r, inv) = (&f.root_system, &f.involution);
        let d = FormalDSDatum::antidominant(r, inv, r.fundamental_weight(0).clone(), "", 100).unwrap();
        let res = strong_regularization(r, inv, &rrs, &d, &cfg).unwrap();
        assert_eq!((res.k, res.mus.len()), (0, 0));
        assert_eq!(&res.lambda_final, r.fundamental_weight(0));
        assert!(verify_result(r, inv, &rrs, &res, 1000).unwrap());

        let (f, rrs) = form("sl(3,R)");
        let (r, inv) = (&f.root_system, &f.involution);
        let d = FormalDSDatum::antidominant(r, inv, r.rho().clone(), "", 100).unwrap();
        let res = strong_regularization(r, inv, &rrs, &d, &cfg).unwrap();
        assert_eq!(res.mus, vec![r.fundamental_weight(0).clone()]);
        assert!(verify_result(r, inv, &rrs, &res, 1000).unwrap());

        let (f, rrs) = form("su(2,1)");
        let (r, inv) = (&f.root_system, &f.involution);
        let lam = r.fundamental_weight(0).clone();
        let d = FormalDSDatum::antidominant(r, inv, lam, "", 100).unwrap();
        let res = strong_regularization(r, inv, &rrs, &d, &cfg).unwrap();
        assert!(!res.mus.is_empty());
        assert!(verify_result(r, inv, &rrs, &res, 1000).unwrap());

        let (f, rrs) = form("compact(A2)");
        let (r, inv) = (&f.root_system, &f.involution);
        let d = FormalDSDatum { lambda: r.rho().clone(), exponents: vec![vec![]], label: String::new() };
        assert!(matches!(
            strong_regularization(r, inv, &rrs, &d, &cfg),
            Err(Error::NoAdmissibleDirection(_))
        ));
    }
}
