//! Rosso-Jones sums for torus links in the vertical framing.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_integer::Integer as _;
use serde::{Deserialize, Serialize};

use crate::adams::{adjoint_adams, power_sum_schur};
use crate::bracket::{Bracket, BracketForm, Fraction};
use crate::coeff::Rational;
use crate::composite::{composite_qdim, reduced_casimir};
use crate::error::{Error, Result};
use crate::young::{content_sum, quantum_dimension};
use crate::zv::ZVTable;

/// T(m, n) with l = gcd(m, n) components. T(0, 0) is allowed as the empty
/// link so that cable sums can include it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TorusParams {
    pub m: u32,
    pub n: u32,
    pub l: u32,
}

impl TorusParams {
    pub fn new(m: u32, n: u32) -> Result<Self> {
        if (m == 0) != (n == 0) {
            return Err(Error::Invalid(format!("T({m},{n}) is not a torus link")));
        }
        Ok(TorusParams { m, n, l: m.gcd(&n) })
    }

    pub fn is_knot(&self) -> bool {
        self.l == 1
    }

    /// The sublink T(mk/l, nk/l) made of k of the l components.
    pub fn sublink(&self, k: u32) -> TorusParams {
        TorusParams::new(self.m / self.l * k, self.n / self.l * k).expect("sublink of a torus link")
    }
}

fn exact_div(num: i64, den: i64) -> Result<i64> {
    if num % den != 0 {
        return Err(Error::NonIntegralExponent { num, den });
    }
    Ok(num / den)
}

fn adj_cache() -> &'static Mutex<HashMap<(u32, u32), Arc<Fraction>>> {
    static C: OnceLock<Mutex<HashMap<(u32, u32), Arc<Fraction>>>> = OnceLock::new();
    C.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Unnormalized adjoint-colored invariant of T(m, n), every component
/// colored Adj, as a fraction over bracket products in q.
pub fn adjoint_homfly_torus(tp: TorusParams) -> Result<Arc<Fraction>> {
    if tp.m == 0 {
        return Ok(Arc::new(Fraction::from_poly(crate::laurent::LaurentPoly2::one())));
    }
    if let Some(f) = adj_cache().lock().unwrap().get(&(tp.m, tp.n)) {
        return Ok(f.clone());
    }
    let forms = adjoint_terms(tp)?;
    let f = Arc::new(Fraction::sum_forms(forms.iter())?.reduced());
    adj_cache().lock().unwrap().insert((tp.m, tp.n), f.clone());
    Ok(f)
}

/// The individual summands v^{2n} zeta and c v^{2n(1-p/m)} q^{-2n(c(R)+c(P))/m} D_(R,P).
pub fn adjoint_terms(tp: TorusParams) -> Result<Vec<BracketForm>> {
    let (m, n) = (tp.m as i64, tp.n as i64);
    let e = adjoint_adams(tp.m, tp.l)?;
    let mut forms = vec![BracketForm::one().with_scalar(Rational::from_integer(e.scalar.into())).with_shift(0, 2 * n)];
    for (comp, &c) in &e.terms {
        let p = comp.grade() as i64;
        let ve = exact_div(2 * n * (m - p), m)?;
        let qe = exact_div(-n * reduced_casimir(comp)?, m)?;
        let f = composite_qdim(comp)?.with_scalar(Rational::from_integer(c.into())).with_shift(qe, ve);
        forms.push(f);
    }
    Ok(forms)
}

/// Normalized HOMFLY-PT polynomial of the torus knot T(m, n) from the
/// fundamental-color sum, in the convention v^-1 P(L+) - v P(L-) = z P(L0).
pub fn fundamental_homfly_torus(tp: TorusParams) -> Result<ZVTable> {
    let raw = fundamental_unframed(tp)?;
    Ok(ZVTable { pole_order: raw.pole_order, poly: raw.poly.shift(0, crate::conventions::fundamental_prefactor(tp)) })
}

/// {q}/{v} times the fundamental Rosso-Jones sum, before the v-power that
/// fixes the framing.
pub fn fundamental_unframed(tp: TorusParams) -> Result<ZVTable> {
    if !tp.is_knot() || tp.m == 0 {
        return Err(Error::NotAKnot { m: tp.m, n: tp.n });
    }
    let (m, n) = (tp.m as i64, tp.n as i64);
    let mut forms = Vec::new();
    for (lam, chi) in power_sum_schur(tp.m, 1) {
        let qe = exact_div(-2 * n * content_sum(&lam), m)?;
        forms.push(quantum_dimension(&lam).with_scalar(Rational::from_integer(chi.into())).with_shift(qe, 0));
    }
    let h = Fraction::sum_forms(forms.iter())?;
    let p = h.mul_brackets(&[Bracket::Q(1)], &[Bracket::VQ(0)])?.into_poly()?;
    ZVTable::from_q(&p, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::poly;

    #[test]
    fn trefoil_and_cinquefoil() {
        let t = fundamental_homfly_torus(TorusParams::new(2, 3).unwrap()).unwrap();
        assert_eq!(t.poly, poly(&[(0, 2, 2), (0, 4, -1), (2, 2, 1)]));
        let t = fundamental_homfly_torus(TorusParams::new(2, 5).unwrap()).unwrap();
        assert_eq!(t.z_coefficient(0), crate::zv::v_poly(&[(4, 3), (6, -2)]));
        assert!(fundamental_homfly_torus(TorusParams::new(2, 4).unwrap()).is_err());
    }

    #[test]
    fn unknot_adjoint_is_its_dimension() {
        let f = adjoint_homfly_torus(TorusParams::new(1, 1).unwrap()).unwrap();
        let d = Fraction::from_form(&composite_qdim(&crate::composite::CompositeRep::adjoint()).unwrap()).unwrap();
        assert!(f.same_value(&d));
    }

    #[test]
    fn adjoint_is_q_symmetric() {
        for (m, n) in [(2, 3), (2, 5), (3, 4), (2, 4), (3, 6)] {
            let f = adjoint_homfly_torus(TorusParams::new(m, n).unwrap()).unwrap();
            // numerator over a product of {q^h}: q -> 1/q flips the sign once per atom
            let atoms: u32 = f.den.values().sum();
            let mut flipped = f.num.invert_x();
            if atoms % 2 == 1 {
                flipped = -flipped;
            }
            assert_eq!(flipped, f.num, "T({m},{n})");
        }
    }
}
