//! Built-in catalog of real forms.
//!
//! Each form is given by its painted diagram: a set of black nodes `J` and
//! an involutive diagram automorphism `eps` (arrows on white nodes, the
//! opposition involution of `J` on black nodes). The involution on the
//! maximally split Cartan is then `theta = w_J (-eps)`, where `w_J` is the
//! longest element of the parabolic subgroup `W_J`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{validate_involution, CartanInvolution};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rootdata::{CartanType, Family, RootSystem, SimpleType};
use crate::scalar::Scalar;
use crate::Rational;

/// Largest rank accepted by the catalog constructors.
pub const MAX_CATALOG_RANK: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FormId {
    /// `su(p,q)`, normalised to `p >= q >= 1`.
    Su(usize, usize),
    /// `sl(n,R)`.
    Sl(usize),
    /// `so(p,q)`, normalised to `p >= q >= 1`.
    So(usize, usize),
    /// `sp(n,R)`.
    Sp(usize),
    Compact(CartanType),
    Split(CartanType),
}

impl FormId {
    /// Checks the parameter bounds and normalises `(p,q)` order.
    pub fn normalized(self) -> Result<Self> {
        let bad = |form: &FormId, reason: &str| Error::BadParameters {
            form: form.to_string(),
            reason: reason.to_string(),
        };
        let max = MAX_CATALOG_RANK;
        match self {
            FormId::Su(p, q) | FormId::So(p, q) if p < q => match self {
                FormId::Su(..) => FormId::Su(q, p).normalized(),
                _ => FormId::So(q, p).normalized(),
            },
            FormId::Su(p, q) => {
                if q == 0 {
                    Err(bad(&self, "q must be positive; use compact(A..) for su(n)"))
                } else if p + q > max + 1 {
                    Err(bad(&self, "p + q must be at most 9"))
                } else {
                    Ok(self)
                }
            }
            FormId::Sl(n) => {
                if (2..=max + 1).contains(&n) {
                    Ok(self)
                } else {
                    Err(bad(&self, "n must lie in 2..=9"))
                }
            }
            FormId::So(p, q) => {
                if q == 0 {
                    Err(bad(&self, "q must be positive; use compact(B..) or compact(D..) for so(n)"))
                } else if !(3..=2 * max + 1).contains(&(p + q)) {
                    Err(bad(&self, "p + q must lie in 3..=17"))
                } else {
                    Ok(self)
                }
            }
            FormId::Sp(n) => {
                if (1..=max).contains(&n) {
                    Ok(self)
                } else {
                    Err(bad(&self, "n must lie in 1..=8"))
                }
            }
            FormId::Compact(ref t) | FormId::Split(ref t) => {
                if t.rank() <= max {
                    Ok(self)
                } else {
                    Err(bad(&self, "rank must be at most 8"))
                }
            }
        }
    }

    /// Cartan type of the complexification.
    pub fn cartan_type(&self) -> CartanType {
        let simple = |f: Family, r: usize| CartanType(vec![SimpleType { family: f, rank: r }]);
        match *self {
            FormId::Su(p, q) => simple(Family::A, p + q - 1),
            FormId::Sl(n) => simple(Family::A, n - 1),
            FormId::Sp(1) => simple(Family::A, 1),
            FormId::Sp(n) => simple(Family::C, n),
            FormId::So(p, q) => match p + q {
                3 => simple(Family::A, 1),
                4 => CartanType(vec![SimpleType { family: Family::A, rank: 1 }; 2]),
                n if n % 2 == 1 => simple(Family::B, (n - 1) / 2),
                n => simple(Family::D, n / 2),
            },
            FormId::Compact(ref t) | FormId::Split(ref t) => t.clone(),
        }
    }

    /// Black nodes and white-node arrows of the painted diagram.
    fn painting(&self) -> (Vec<usize>, Vec<(usize, usize)>) {
        let rank = self.cartan_type().rank();
        match *self {
            FormId::Su(p, q) => {
                let m = p + q - 1;
                let black = (q..m.saturating_sub(q)).collect();
                let arrows = (0..q).map(|i| (i, m - 1 - i)).collect();
                (black, arrows)
            }
            FormId::So(p, q) => {
                let n = p + q;
                match n {
                    3 => (vec![], vec![]),
                    4 if q == 2 => (vec![], vec![]),
                    4 => (vec![], vec![(0, 1)]),
                    _ if n % 2 == 1 => ((q..rank).collect(), vec![]),
                    _ if q == rank => (vec![], vec![]),
                    _ if q + 1 == rank => (vec![], vec![(rank - 2, rank - 1)]),
                    _ => ((q..rank).collect(), vec![]),
                }
            }
            FormId::Compact(_) => ((0..rank).collect(), vec![]),
            FormId::Sl(_) | FormId::Sp(_) | FormId::Split(_) => (vec![], vec![]),
        }
    }
}

impl fmt::Display for FormId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormId::Su(p, q) => write!(f, "su({p},{q})"),
            FormId::Sl(n) => write!(f, "sl({n},R)"),
            FormId::So(p, q) => write!(f, "so({p},{q})"),
            FormId::Sp(n) => write!(f, "sp({n},R)"),
            FormId::Compact(t) => write!(f, "compact({t})"),
            FormId::Split(t) => write!(f, "split({t})"),
        }
    }
}

impl FromStr for FormId {
    type Err = Error;

    /// Accepts `su(2,1)`, `sl(3,R)`, `sl(3)`, `so(4,4)`, `sp(2,R)`,
    /// `compact(A2)`, `split(G2)`; `ℝ` may replace `R`.
    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownForm(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (name, rest) = compact.split_once('(').ok_or_else(unknown)?;
        let args = rest.strip_suffix(')').ok_or_else(unknown)?;
        let name = name.to_ascii_lowercase();
        let parts: Vec<&str> = args.split(',').collect();
        let int = |t: &str| t.parse::<usize>().map_err(|_| unknown());
        let real_field = |t: &str| matches!(t, "R" | "r" | "ℝ");
        let id = match (name.as_str(), parts.as_slice()) {
            ("su", [p, q]) => FormId::Su(int(p)?, int(q)?),
            ("so", [p, q]) => FormId::So(int(p)?, int(q)?),
            ("sl", [n]) => FormId::Sl(int(n)?),
            ("sl", [n, f]) if real_field(f) => FormId::Sl(int(n)?),
            ("sp", [n]) => FormId::Sp(int(n)?),
            ("sp", [n, f]) if real_field(f) => FormId::Sp(int(n)?),
            ("compact", [t]) => FormId::Compact(t.parse()?),
            ("split", [t]) => FormId::Split(t.parse()?),
            _ => return Err(unknown()),
        };
        id.normalized()
    }
}

impl Serialize for FormId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Compact-subalgebra rank from the classical isomorphism type of `k`.
/// Independent of every root-system computation.
pub fn oracle_compact_rank(id: &FormId) -> usize {
    match id {
        // k = s(u(p) + u(q))
        FormId::Su(p, q) => p + q - 1,
        // k = so(n)
        FormId::Sl(n) => n / 2,
        // k = so(p) + so(q)
        FormId::So(p, q) => p / 2 + q / 2,
        // k = u(n)
        FormId::Sp(n) => *n,
        FormId::Compact(t) => t.rank(),
        FormId::Split(t) => t
            .factors()
            .iter()
            .map(|f| match (f.family, f.rank) {
                (Family::A, n) => n.div_ceil(2),
                (Family::B, n) | (Family::C, n) => n,
                (Family::D, n) => 2 * (n / 2),
                // k = su(2) + su(2), sp(3) + su(2), sp(4), su(8), so(16)
                (Family::G, _) => 2,
                (Family::F, _) => 4,
                (Family::E, 6) => 4,
                (Family::E, n) => n,
            })
            .sum(),
    }
}

/// Request for a real form: a catalog identifier or an explicit involution.
#[derive(Clone, Debug)]
pub enum RealFormSpec<T: Scalar = Rational> {
    Catalog(FormId),
    Explicit {
        label: String,
        cartan_type: CartanType,
        theta: Matrix<T>,
        /// Known compact rank, when the caller has one.
        compact_rank: Option<usize>,
    },
}

/// A constructed real form.
#[derive(Clone, Debug)]
pub struct RealForm<T: Scalar = Rational> {
    pub id: String,
    pub root_system: RootSystem<T>,
    pub involution: CartanInvolution<T>,
    pub compact_rank: Option<usize>,
}

impl<T: Scalar> RealForm<T> {
    /// `compact_rank == rank`, when the compact rank is known.
    pub fn expected_verdict(&self) -> Option<bool> {
        self.compact_rank.map(|k| k == self.root_system.rank())
    }
}

/// Builds `(RootSystem, CartanInvolution)` for a catalog entry or validates
/// an explicit involution.
pub fn catalog_form<T: Scalar>(spec: &RealFormSpec<T>) -> Result<RealForm<T>> {
    match spec {
        RealFormSpec::Catalog(id) => {
            let id = id.clone().normalized()?;
            let r = RootSystem::new(id.cartan_type());
            let theta = catalog_theta(&r, &id);
            let inv = validate_involution(&r, &theta)?.mark_realizable();
            Ok(RealForm {
                id: id.to_string(),
                root_system: r,
                involution: inv,
                compact_rank: Some(oracle_compact_rank(&id)),
            })
        }
        RealFormSpec::Explicit { label, cartan_type, theta, compact_rank } => {
            let r = RootSystem::new(cartan_type.clone());
            let mut inv = validate_involution(&r, theta)?;
            // the same matrix as a catalog entry is realisable
            if let Ok(id) = label.parse::<FormId>() {
                if &id.cartan_type() == cartan_type && &catalog_theta(&r, &id) == theta {
                    inv = inv.mark_realizable();
                }
            }
            Ok(RealForm { id: label.clone(), root_system: r, involution: inv, compact_rank: *compact_rank })
        }
    }
}

fn catalog_theta<T: Scalar>(r: &RootSystem<T>, id: &FormId) -> Matrix<T> {
    let (black, arrows) = id.painting();
    satake_theta(r, &black, &arrows)
}

/// `theta = w_J (-eps)`.
fn satake_theta<T: Scalar>(r: &RootSystem<T>, black: &[usize], arrows: &[(usize, usize)]) -> Matrix<T> {
    let n = r.rank();
    let w_j = r.longest_element_of(black);
    let mut eps: Vec<usize> = (0..n).collect();
    for &(a, b) in arrows {
        eps[a] = b;
        eps[b] = a;
    }
    for &b in black {
        let img = w_j.apply(&r.simple_root(b)).expect("rank matches").neg();
        eps[b] = (0..n).find(|&i| img == r.simple_root(i)).expect("w_J permutes -J");
    }
    let p = Matrix::from_fn(n, n, |i, j| if eps[j] == i { T::one() } else { T::zero() });
    w_j.matrix.matmul(&p.neg())
}

/// The built-in catalog, in display order.
pub fn catalog_entries() -> Vec<FormId> {
    let mut out = Vec::new();
    for n in 2..=5 {
        for q in 1..=n / 2 {
            out.push(FormId::Su(n - q, q));
        }
    }
    for n in 2..=5 {
        out.push(FormId::Sl(n));
    }
    for n in 3..=8 {
        for q in 1..=n / 2 {
            out.push(FormId::So(n - q, q));
        }
    }
    for n in 1..=4 {
        out.push(FormId::Sp(n));
    }
    for t in ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "G2", "F4", "E6", "E7", "E8"] {
        out.push(FormId::Compact(t.parse().expect("valid type")));
    }
    for t in ["G2", "F4", "E6", "E7", "E8"] {
        out.push(FormId::Split(t.parse().expect("valid type")));
    }
    out
}

/// On-disk catalog document. `theta_matrix[i][j]` is the coefficient of
/// `alpha_i` in `theta(alpha_j)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogDocument {
    pub id: String,
    pub cartan_type: CartanType,
    pub theta_matrix: Vec<Vec<String>>,
    pub compact_rank: usize,
    pub expected_verdict: bool,
}

impl CatalogDocument {
    pub fn from_form<T: Scalar>(form: &RealForm<T>) -> Result<Self> {
        let compact_rank = form
            .compact_rank
            .ok_or_else(|| Error::InvalidDatum(format!("{}: compact rank unknown", form.id)))?;
        let theta_matrix = form
            .involution
            .supplied_theta()
            .to_rows()
            .iter()
            .map(|row| row.iter().map(Scalar::to_canonical).collect())
            .collect();
        Ok(CatalogDocument {
            id: form.id.clone(),
            cartan_type: form.root_system.cartan_type().clone(),
            theta_matrix,
            compact_rank,
            expected_verdict: compact_rank == form.root_system.rank(),
        })
    }

    pub fn to_spec<T: Scalar>(&self) -> Result<RealFormSpec<T>> {
        let rows = self
            .theta_matrix
            .iter()
            .map(|row| row.iter().map(|s| T::parse_canonical(s)).collect::<Result<Vec<T>>>())
            .collect::<Result<Vec<_>>>()?;
        let n = self.cartan_type.rank();
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(Error::Parse(format!(
                "{}: theta_matrix must be {n}x{n} for type {}",
                self.id, self.cartan_type
            )));
        }
        if self.expected_verdict != (self.compact_rank == n) {
            return Err(Error::Parse(format!(
                "{}: expected_verdict disagrees with compact_rank",
                self.id
            )));
        }
        Ok(RealFormSpec::Explicit {
            label: self.id.clone(),
            cartan_type: self.cartan_type.clone(),
            theta: Matrix::from_rows(rows),
            compact_rank: Some(self.compact_rank),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realform::restricted_roots;
    use num_rational::Rational64;

    fn form(s: &str) -> RealForm<Rational64> {
        catalog_form(&RealFormSpec::Catalog(s.parse().unwrap())).unwrap()
    }

    #[test]
    fn parses_ids() {
        assert_eq!("su(2,1)".parse::<FormId>().unwrap(), FormId::Su(2, 1));
        assert_eq!("SU(1, 2)".parse::<FormId>().unwrap(), FormId::Su(2, 1));
        assert_eq!("sl(3,ℝ)".parse::<FormId>().unwrap(), FormId::Sl(3));
        assert_eq!("sp(2,R)".parse::<FormId>().unwrap().to_string(), "sp(2,R)");
        assert_eq!("split(g2)".parse::<FormId>().unwrap().to_string(), "split(G2)");
        assert!(matches!("xx(1)".parse::<FormId>(), Err(Error::UnknownForm(_))));
        assert!(matches!("sl(1,R)".parse::<FormId>(), Err(Error::BadParameters { .. })));
        assert!(matches!("so(2,0)".parse::<FormId>(), Err(Error::BadParameters { .. })));
        assert!(matches!("su(3)".parse::<FormId>(), Err(Error::UnknownForm(_))));
    }

    #[test]
    fn sl2_and_sl3_are_split() {
        let f = form("sl(2,R)");
        assert_eq!(f.involution.theta(), &Matrix::identity(1).neg());
        assert_eq!(f.compact_rank, Some(1));
        let f = form("sl(3,R)");
        assert_eq!(f.involution.theta(), &Matrix::identity(2).neg());
        assert_eq!(f.expected_verdict(), Some(false));
    }

    #[test]
    fn su21_is_bc1() {
        let f = form("su(2,1)");
        assert_eq!(f.involution.a_rank(), 1);
        assert!(f.involution.conjugated_by().is_none());
        let rrs = restricted_roots(&f.root_system, &f.involution);
        assert_eq!(rrs.restricted_type(), "BC1");
        let one = Rational64::from_int(1);
        let two = Rational64::from_int(2);
        assert_eq!(rrs.multiplicity(&[one]), 2);
        assert_eq!(rrs.multiplicity(&[two]), 1);
        assert_eq!(rrs.multiplicity(&[-one]), 2);
        assert_eq!(rrs.roots().len(), 4);
    }

    #[test]
    fn every_catalog_theta_is_valid_and_compatible() {
        for id in catalog_entries() {
            let f: RealForm<Rational64> = catalog_form(&RealFormSpec::Catalog(id.clone())).unwrap();
            assert!(f.involution.conjugated_by().is_none(), "{id}");
            assert!(f.involution.realizability_verified());
        }
    }

    #[test]
    fn restricted_types_of_classical_forms() {
        for (id, t) in [
            ("su(3,1)", "BC1"),
            ("su(2,2)", "C2"),
            ("su(3,2)", "BC2"),
            ("so(4,1)", "A1"),
            ("so(3,1)", "A1"),
            ("so(4,2)", "B2"),
            ("so(5,3)", "B3"),
            ("so(4,4)", "D4"),
            ("sp(3,R)", "C3"),
            ("split(F4)", "F4"),
        ] {
            let f = form(id);
            assert_eq!(restricted_roots(&f.root_system, &f.involution).restricted_type(), t, "{id}");
        }
    }

    #[test]
    fn documents_round_trip() {
        let f = form("so(5,2)");
        let doc = CatalogDocument::from_form(&f).unwrap();
        let json = serde_json::to_string(&doc).unwrap();
        let back: CatalogDocument = serde_json::from_str(&json).unwrap();
        assert_eq!(back, doc);
        let g: RealForm<Rational64> = catalog_form(&back.to_spec().unwrap()).unwrap();
        assert_eq!(g.involution.theta(), f.involution.theta());
        assert!(g.involution.realizability_verified());

        let mut other = doc.clone();
        other.id = "my-form".into();
        let g: RealForm<Rational64> = catalog_form(&other.to_spec().unwrap()).unwrap();
        assert!(!g.involution.realizability_verified());
    }

    #[test]
    fn oracle_values() {
        assert_eq!(oracle_compact_rank(&FormId::So(4, 4)), 4);
        assert_eq!(oracle_compact_rank(&FormId::So(3, 3)), 2);
        assert_eq!(oracle_compact_rank(&"split(E6)".parse().unwrap()), 4);
        assert_eq!(oracle_compact_rank(&FormId::Su(3, 2)), 4);
    }
}
