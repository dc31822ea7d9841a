//! Composite representations (R, P) in the stable limit: diagrams at finite
//! rank, uniform quantum dimensions, Casimir weights and the Koike expansion.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bracket::{Bracket, BracketForm};
use crate::error::{Error, Result};
use crate::young::{content_sum, lr_coefficient, partitions_inside, quantum_dimension_shifted, Partition};

/// The irreducible component (R, P) of R (x) conj(P) in the stable limit.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CompositeRep {
    #[serde(rename = "R")]
    pub r: Partition,
    #[serde(rename = "P")]
    pub p: Partition,
}

impl fmt::Debug for CompositeRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.r, self.p)
    }
}

impl fmt::Display for CompositeRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.r, self.p)
    }
}

impl CompositeRep {
    pub fn new(r: Partition, p: Partition) -> Self {
        CompositeRep { r, p }
    }

    /// Shorthand from part lists.
    pub fn of(r: &[u32], p: &[u32]) -> Self {
        CompositeRep { r: Partition::of(r), p: Partition::of(p) }
    }

    pub fn scalar() -> Self {
        CompositeRep { r: Partition::empty(), p: Partition::empty() }
    }

    pub fn adjoint() -> Self {
        Self::of(&[1], &[1])
    }

    pub fn is_scalar(&self) -> bool {
        self.r.is_empty() && self.p.is_empty()
    }

    /// The grade |R|; callers only form composites with |R| = |P|.
    pub fn grade(&self) -> u32 {
        self.r.size()
    }
}

/// The ordinary N-row diagram [R_1+P_1, ..., P_1-P_2] of (R, P).
pub fn composite_diagram(c: &CompositeRep, n: usize) -> Result<Partition> {
    let need = c.r.len() + c.p.len();
    if n < need || n == 0 {
        return Err(Error::RankTooSmall { n, need });
    }
    let p1 = c.p.row(0);
    let rows = (0..n).map(|i| c.r.row(i) + p1 - c.p.row(n - 1 - i)).collect();
    Partition::new(rows)
}

/// D_(R,P)(q, v) with v standing for q^N.
pub fn composite_qdim(c: &CompositeRep) -> Result<BracketForm> {
    let (lr, lp) = (c.r.len() as i64, c.p.len() as i64);
    let mut num = Vec::new();
    let mut den = Vec::new();
    for (i, &ri) in c.r.parts().iter().enumerate() {
        for (j, &pj) in c.p.parts().iter().enumerate() {
            let (i, j) = (i as i64, j as i64);
            // [N+a]_q = {v q^a}/{q}; the {q} factors cancel pairwise.
            num.push(Bracket::VQ(ri as i64 + pj as i64 - i - j - 1));
            den.push(Bracket::VQ(-i - j - 1));
        }
    }
    let f = quantum_dimension_shifted(&c.r, -lp)
        .mul(&quantum_dimension_shifted(&c.p, -lr))
        .mul(&BracketForm::new(num, den)?);
    if let Some(b) = f.den.keys().find(|b| matches!(b, Bracket::VQ(_))) {
        return Err(Error::CancellationFailure(b.to_string()));
    }
    Ok(f)
}

/// N-independent part of the Casimir, kappa_(R,P) - 2N|R| = 2(c(R) + c(P)).
pub fn reduced_casimir(c: &CompositeRep) -> Result<i64> {
    if c.r.size() != c.p.size() {
        return Err(Error::GradeMismatch(c.r.size(), c.p.size()));
    }
    Ok(2 * (content_sum(&c.r) + content_sum(&c.p)))
}

/// s_lambda(x) s_mu(1/x) in the composite basis:
/// c_(A,B) = sum over kappa of lr(lambda; A, kappa) lr(mu; B, kappa).
pub fn koike_expand(lambda: &Partition, mu: &Partition) -> BTreeMap<CompositeRep, i64> {
    let mut out: BTreeMap<CompositeRep, i64> = BTreeMap::new();
    for s in 0..=lambda.size().min(mu.size()) {
        for kappa in partitions_inside(s, lambda).into_iter().filter(|k| mu.contains(k)) {
            let as_: Vec<(Partition, u64)> = partitions_inside(lambda.size() - s, lambda)
                .into_iter()
                .map(|a| {
                    let c = lr_coefficient(lambda, &a, &kappa);
                    (a, c)
                })
                .filter(|(_, c)| *c > 0)
                .collect();
            if as_.is_empty() {
                continue;
            }
            for b in partitions_inside(mu.size() - s, mu) {
                let cb = lr_coefficient(mu, &b, &kappa);
                if cb == 0 {
                    continue;
                }
                for (a, ca) in &as_ {
                    *out.entry(CompositeRep::new(a.clone(), b.clone())).or_insert(0) += (ca * cb) as i64;
                }
            }
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bracket::Fraction;
    use crate::young::{partitions, quantum_dimension};
    use num_bigint::BigInt;

    fn form(num: &[Bracket], den: &[Bracket]) -> BracketForm {
        BracketForm::new(num.to_vec(), den.to_vec()).unwrap()
    }

    #[test]
    fn diagrams() {
        assert_eq!(composite_diagram(&CompositeRep::adjoint(), 4).unwrap(), Partition::of(&[2, 1, 1]));
        assert_eq!(composite_diagram(&CompositeRep::of(&[], &[1]), 5).unwrap(), Partition::of(&[1, 1, 1, 1]));
        assert_eq!(composite_diagram(&CompositeRep::of(&[2], &[2]), 4).unwrap(), Partition::of(&[4, 2, 2]));
        assert!(matches!(
            composite_diagram(&CompositeRep::of(&[1, 1], &[1]), 2),
            Err(Error::RankTooSmall { .. })
        ));
    }

    #[test]
    fn displayed_dimensions() {
        use Bracket::{Q, VQ};
        assert_eq!(composite_qdim(&CompositeRep::adjoint()).unwrap(), form(&[VQ(1), VQ(-1)], &[Q(1), Q(1)]));
        assert_eq!(
            composite_qdim(&CompositeRep::of(&[2], &[2])).unwrap(),
            form(&[VQ(0), VQ(0), VQ(3), VQ(-1)], &[Q(2), Q(2), Q(1), Q(1)])
        );
        assert_eq!(
            composite_qdim(&CompositeRep::of(&[3], &[3])).unwrap(),
            form(
                &[VQ(5), VQ(1), VQ(1), VQ(0), VQ(0), VQ(-1)],
                &[Q(3), Q(3), Q(2), Q(2), Q(1), Q(1)]
            )
        );
        assert_eq!(composite_qdim(&CompositeRep::scalar()).unwrap(), BracketForm::one());
    }

    #[test]
    fn casimir_weights() {
        assert_eq!(reduced_casimir(&CompositeRep::of(&[2], &[2])).unwrap(), 4);
        assert_eq!(reduced_casimir(&CompositeRep::of(&[1, 1], &[1, 1])).unwrap(), -4);
        assert_eq!(reduced_casimir(&CompositeRep::of(&[1, 1], &[2])).unwrap(), 0);
        assert!(reduced_casimir(&CompositeRep::of(&[1], &[])).is_err());
    }

    #[test]
    fn koike_small() {
        let k = koike_expand(&Partition::of(&[1]), &Partition::of(&[1]));
        assert_eq!(k, [(CompositeRep::scalar(), 1), (CompositeRep::adjoint(), 1)].into());
        let k = koike_expand(&Partition::of(&[2]), &Partition::empty());
        assert_eq!(k, [(CompositeRep::of(&[2], &[]), 1)].into());
        let k = koike_expand(&Partition::of(&[2]), &Partition::of(&[1, 1]));
        assert_eq!(k, [(CompositeRep::of(&[2], &[1, 1]), 1), (CompositeRep::adjoint(), 1)].into());
    }

    fn cross_equal(a: &BracketForm, b: &BracketForm, n: i64) -> bool {
        let mul = |x: &BTreeMap<i64, BigInt>, y: &BTreeMap<i64, BigInt>| {
            let mut out: BTreeMap<i64, BigInt> = BTreeMap::new();
            for (i, c) in x {
                for (j, d) in y {
                    *out.entry(i + j).or_default() += c * d;
                }
            }
            out.retain(|_, c| *c != BigInt::from(0));
            out
        };
        let (an, ad) = Fraction::from_form(a).unwrap().specialize_v(n);
        let (bn, bd) = Fraction::from_form(b).unwrap().specialize_v(n);
        mul(&an, &bd) == mul(&bn, &ad)
    }

    #[test]
    fn uniform_dimension_matches_finite_rank() {
        for g in 0..=3 {
            for r in partitions(g) {
                for p in partitions(g) {
                    let c = CompositeRep::new(r.clone(), p.clone());
                    let uni = composite_qdim(&c).unwrap();
                    for n in [6usize, 7] {
                        let d = quantum_dimension(&composite_diagram(&c, n).unwrap());
                        assert!(cross_equal(&uni, &d, n as i64), "{c} at N={n}");
                    }
                }
            }
        }
    }

    #[test]
    fn koike_inverts_the_alternating_contraction() {
        // (R,P) = sum (-1)^|Y| N^R_{Y Y1} N^P_{Y^T Y2} s_Y1 conj(s_Y2)
        for g in 0..=3u32 {
            for r in partitions(g) {
                for p in partitions(g) {
                    let mut total: BTreeMap<CompositeRep, i64> = BTreeMap::new();
                    for s in 0..=g {
                        for y in partitions(s) {
                            let yt = y.transpose();
                            let sign = if s % 2 == 0 { 1 } else { -1 };
                            for y1 in partitions(g - s) {
                                let a = lr_coefficient(&r, &y, &y1) as i64;
                                if a == 0 {
                                    continue;
                                }
                                for y2 in partitions(g - s) {
                                    let b = lr_coefficient(&p, &yt, &y2) as i64;
                                    if b == 0 {
                                        continue;
                                    }
                                    for (k, c) in koike_expand(&y1, &y2) {
                                        *total.entry(k).or_insert(0) += sign * a * b * c;
                                    }
                                }
                            }
                        }
                    }
                    total.retain(|_, c| *c != 0);
                    assert_eq!(total, [(CompositeRep::new(r.clone(), p.clone()), 1)].into(), "{r} {p}");
                }
            }
        }
    }

    #[test]
    fn json_shape() {
        let s = serde_json::to_string(&CompositeRep::of(&[2, 1], &[1])).unwrap();
        assert_eq!(s, r#"{"R":[2,1],"P":[1]}"#);
    }
}
