//! Reverse 2-cables of torus links: HOMFLY-PT polynomials at any framing,
//! the panhandle decomposition, and the degree invariants read off them.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::adams::zeta;
use crate::bracket::{Bracket, Fraction};
use crate::coeff::{Integer, Rational};
use crate::conventions::{EPSILON, SIGMA};
use crate::error::{Error, Result};
use crate::laurent::{Exp, LaurentPoly1, LaurentPoly2};
use crate::rosso_jones::{adjoint_homfly_torus, TorusParams};
use crate::zv::ZVTable;

/// One framing per component of the base link.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FramingVector(pub Vec<i64>);

impl FramingVector {
    pub fn uniform(value: i64, len: usize) -> Self {
        FramingVector(vec![value; len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// delta = (1 - m/l)(n/l), the per-component vertical framing.
pub fn vertical_delta(tp: TorusParams) -> i64 {
    let (a, b) = ((tp.m / tp.l) as i64, (tp.n / tp.l) as i64);
    (1 - a) * b
}

pub fn vertical_framing(tp: TorusParams) -> FramingVector {
    FramingVector::uniform(vertical_delta(tp), tp.l as usize)
}

/// Absolute framing -> corrected framing e_i = t_i - delta.
pub fn corrected(tp: TorusParams, t: &FramingVector) -> FramingVector {
    FramingVector(t.0.iter().map(|x| x - vertical_delta(tp)).collect())
}

/// Corrected framing -> absolute framing.
pub fn from_corrected(tp: TorusParams, e: &FramingVector) -> FramingVector {
    FramingVector(e.0.iter().map(|x| x + vertical_delta(tp)).collect())
}

fn check_len(tp: TorusParams, f: &FramingVector) -> Result<()> {
    if f.len() != tp.l as usize {
        return Err(Error::LengthMismatch { expected: tp.l as usize, got: f.len() });
    }
    Ok(())
}

/// Elementary symmetric polynomials e_0..e_l of the monomials v^{x_i}.
fn elementary(xs: &[i64]) -> Vec<LaurentPoly2> {
    let mut e = vec![LaurentPoly2::one()];
    for &x in xs {
        let mono = LaurentPoly2::monomial(Integer::one(), 0, x);
        let mut next = e.clone();
        next.push(LaurentPoly2::zero());
        for k in 1..next.len() {
            next[k] = &next[k] + &(&e[k - 1] * &mono);
        }
        e = next;
    }
    e
}

type CableKey = (u32, u32, Vec<i64>);

fn cable_cache() -> &'static Mutex<HashMap<CableKey, Arc<ZVTable>>> {
    static C: OnceLock<Mutex<HashMap<CableKey, Arc<ZVTable>>>> = OnceLock::new();
    C.get_or_init(|| Mutex::new(HashMap::new()))
}

/// HOMFLY-PT polynomial of the reverse 2-cable of T(m, n) with the given
/// absolute framings, in the table convention.
///
/// z^{2l-1} P = {q}^{2l} / {v} * sum_k e_k(v^{2 sigma D_i}) H_Adj(T(mk/l, nk/l)),
/// with D_i the framing excess over the vertical framing.
pub fn reverse_cable_homfly(tp: TorusParams, f: &FramingVector) -> Result<Arc<ZVTable>> {
    check_len(tp, f)?;
    let key = (tp.m, tp.n, f.0.clone());
    if let Some(t) = cable_cache().lock().unwrap().get(&key) {
        return Ok(t.clone());
    }
    let table = Arc::new(cable_with_sigma(tp, f, SIGMA)?);
    cable_cache().lock().unwrap().insert(key, table.clone());
    Ok(table)
}

/// The cable sum with an explicit framing factor v^{2 sigma} per unit of
/// framing; used to calibrate `SIGMA`.
pub fn cable_with_sigma(tp: TorusParams, f: &FramingVector, sigma: i64) -> Result<ZVTable> {
    check_len(tp, f)?;
    let shifts: Vec<i64> = corrected(tp, f).0.iter().map(|d| 2 * sigma * d).collect();
    let e = elementary(&shifts);
    let mut sum = Fraction::zero();
    for (k, ek) in e.iter().enumerate() {
        let h = adjoint_homfly_torus(tp.sublink(k as u32))?;
        sum = sum.add(&h.mul_poly(ek));
    }
    let l = tp.l as usize;
    let numer = sum.mul_brackets(&vec![Bracket::Q(1); 2 * l], &[Bracket::VQ(0)])?.into_poly()?;
    ZVTable::from_q(&numer, 2 * tp.l - 1)
}

/// Cable polynomial at the vertical framing.
pub fn vertical_cable(tp: TorusParams) -> Result<Arc<ZVTable>> {
    reverse_cable_homfly(tp, &vertical_framing(tp))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PanhandleDecomposition {
    pub bulk: ZVTable,
    pub handle_coefficient: i64,
    /// Lowest and highest v-exponent of the subtracted handle (empty when m = n).
    pub handle_range: Option<(i64, i64)>,
    pub handle_length: i64,
    pub full: ZVTable,
}

impl PanhandleDecomposition {
    /// zeta z (v^{2m+1} + ... + v^{2n-1}).
    pub fn handle(&self) -> ZVTable {
        handle_table(self.handle_coefficient, self.handle_range)
    }
}

fn handle_table(c: i64, range: Option<(i64, i64)>) -> ZVTable {
    let mut p = LaurentPoly2::zero();
    if let Some((lo, hi)) = range {
        for j in (lo..=hi).step_by(2) {
            p.add_term(Exp::new(1, j), Integer::from(c));
        }
    }
    ZVTable { pole_order: 0, poly: p }
}

/// Splits the vertical-framing cable polynomial into the handle
/// zeta z v (v^{2n} - v^{2m})/(v^2 - 1) and the bounded bulk.
pub fn panhandle_decompose(p: &ZVTable, tp: TorusParams) -> Result<PanhandleDecomposition> {
    let (m, n, l) = (tp.m as i64, tp.n as i64, tp.l as i64);
    if m > n {
        return Err(Error::Invalid(format!("panhandle needs m <= n, got T({m},{n})")));
    }
    let c = zeta(tp.m, tp.l)?;
    let range = (m < n).then_some((2 * m + 1, 2 * n - 1));
    let handle = handle_table(c, range);
    let bulk = p.sub(&handle);
    let (lo, hi) = (bulk.min_v(), bulk.max_v());
    let hi_bound = if l == 1 { 2 * m - 1 } else { 2 * n * (l - 1) / l + 2 * m / l - 1 };
    let ok_lo = lo == Some(1 - 2 * m);
    let ok_hi = if l == 1 { hi == Some(hi_bound) } else { hi.is_some_and(|h| h <= hi_bound) };
    if !ok_lo || !ok_hi {
        return Err(Error::ShapeViolation(format!(
            "bulk v-support {lo:?}..{hi:?}, expected min {} and max {} {hi_bound}",
            1 - 2 * m,
            if l == 1 { "=" } else { "<=" }
        )));
    }
    Ok(PanhandleDecomposition {
        bulk,
        handle_coefficient: c,
        handle_range: range,
        handle_length: 2 * (n - m) / l,
        full: p.clone(),
    })
}

/// [P(C_2(K,t))]_{z^-1} = EPSILON v^{2t} (v^-1 - v) ([P(K)]_{z^0})^2.
pub fn z_minus1_identity_check(k_z0: &LaurentPoly1, t: i64, cable: &ZVTable) -> bool {
    let factor = LaurentPoly1::from_terms([(2 * t - 1, Integer::from(EPSILON)), (2 * t + 1, Integer::from(-EPSILON))]);
    let rhs = &factor * &(k_z0 * k_z0);
    cable.z_coefficient(-1) == rhs
}

/// (l, theta) from the cable polynomial of a knot at framing t.
pub fn ell_theta(cable: &ZVTable, t: i64) -> Result<(i64, i64)> {
    let (Some(lo), Some(hi)) = (cable.min_v(), cable.max_v()) else {
        return Err(Error::DegreeConditionUnmet { min: 0, max: 0 });
    };
    if lo >= 0 || hi <= 0 {
        return Err(Error::DegreeConditionUnmet { min: lo, max: hi });
    }
    let m = (1 - lo) / 2;
    Ok((1 + (hi - lo) / 2, t + m))
}

/// (l, theta) of a torus knot, read at the vertical framing.
pub fn ell_theta_torus(tp: TorusParams) -> Result<(i64, i64)> {
    if !tp.is_knot() {
        return Err(Error::NotAKnot { m: tp.m, n: tp.n });
    }
    let t = vertical_delta(tp);
    ell_theta(&*reverse_cable_homfly(tp, &FramingVector(vec![t]))?, t)
}

/// 1 + (max deg_v P - min(1, min deg_v [P]_{z^{1-2l}}))/2 for the cable at
/// an admissible framing.
pub fn ell_phi(tp: TorusParams, phi: &FramingVector) -> Result<Rational> {
    check_len(tp, phi)?;
    if !crate::grid::is_admissible(tp, false, &phi.0) {
        return Err(Error::InadmissibleFraming(phi.0.clone()));
    }
    let p = reverse_cable_homfly(tp, phi)?;
    ell_phi_of(&p, tp.l)
}

/// The l_phi quantity of an arbitrary cable table of an l-component link.
pub fn ell_phi_of(p: &ZVTable, l: u32) -> Result<Rational> {
    let hi = p.max_v().ok_or_else(|| Error::Invalid("zero polynomial".into()))?;
    let row = p.z_coefficient(1 - 2 * l as i64);
    let lo = row.min_deg().map_or(1, |d| d.min(1));
    Ok(Rational::new(BigInt::from(2 + hi - lo), BigInt::from(2)))
}

/// Morton-Franks-Williams lower bound 1/2 span_v + 1.
pub fn mfw_bound(p: &ZVTable) -> i64 {
    p.span_v().map_or(1, |s| s / 2 + 1)
}

/// Sum of every fixed-z row; all zero for links by the Conway vanishing.
pub fn row_sums(p: &ZVTable) -> Vec<(i64, BigInt)> {
    p.z_exponents()
        .into_iter()
        .map(|k| (k, p.z_coefficient(k).iter().fold(BigInt::zero(), |a, (_, c)| a + c)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zv::v_poly;

    fn tp(m: u32, n: u32) -> TorusParams {
        TorusParams::new(m, n).unwrap()
    }

    #[test]
    fn framings() {
        assert_eq!(vertical_framing(tp(4, 5)).0, vec![-15]);
        assert_eq!(vertical_framing(tp(3, 4)).0, vec![-8]);
        assert_eq!(vertical_framing(tp(3, 12)).0, vec![0, 0, 0]);
        assert_eq!(vertical_framing(tp(4, 6)).0, vec![-3, -3]);
        let t = FramingVector(vec![1, -2]);
        assert_eq!(from_corrected(tp(4, 6), &corrected(tp(4, 6), &t)), t);
    }

    #[test]
    fn unknot_cable() {
        let u = tp(1, 1);
        let p = reverse_cable_homfly(u, &FramingVector(vec![0])).unwrap();
        // (v - v^-1) z^-1
        assert_eq!(p.poly, crate::laurent::poly(&[(-1, 1, 1), (-1, -1, -1)]));
        assert!(z_minus1_identity_check(&v_poly(&[(0, 1)]), 0, &p));
    }

    #[test]
    fn table_one_spots() {
        let p = reverse_cable_homfly(tp(2, 5), &FramingVector(vec![-5])).unwrap();
        assert_eq!(p.coeff(1, -3), BigInt::from(-24));
        assert_eq!(p.coeff(9, -1), BigInt::from(1));
        for j in [5, 7, 9] {
            assert_eq!(p.coeff(1, j), BigInt::from(1));
        }
        assert_eq!(p.z_coefficient(-1), v_poly(&[(-3, -9), (-1, 21), (1, -16), (3, 4)]));
        assert!(z_minus1_identity_check(&v_poly(&[(4, 3), (6, -2)]), -5, &p));
        assert_eq!(mfw_bound(&p), 7);
        assert_eq!(ell_theta(&p, -5).unwrap(), (7, -3));
    }

    #[test]
    fn panhandle_of_table_one() {
        let p = reverse_cable_homfly(tp(2, 5), &FramingVector(vec![-5])).unwrap();
        let d = panhandle_decompose(&p, tp(2, 5)).unwrap();
        assert_eq!(d.handle_coefficient, 1);
        assert_eq!(d.handle_range, Some((5, 9)));
        assert_eq!((d.bulk.min_v(), d.bulk.max_v()), (Some(-3), Some(3)));
        assert_eq!(d.bulk.add(&d.handle()), p.as_ref().clone());
    }

    #[test]
    fn theta_is_framing_independent() {
        let a = reverse_cable_homfly(tp(2, 5), &FramingVector(vec![-5])).unwrap();
        let b = reverse_cable_homfly(tp(2, 5), &FramingVector(vec![-4])).unwrap();
        assert_eq!(ell_theta(&a, -5).unwrap().1, ell_theta(&b, -4).unwrap().1);
    }

    #[test]
    fn degree_condition() {
        let p = ZVTable::from_zv(crate::laurent::poly(&[(0, 2, 1)]));
        assert!(matches!(ell_theta(&p, 0), Err(Error::DegreeConditionUnmet { .. })));
    }

    #[test]
    fn wrong_length() {
        assert!(matches!(
            reverse_cable_homfly(tp(2, 4), &FramingVector(vec![0])),
            Err(Error::LengthMismatch { .. })
        ));
    }
}
