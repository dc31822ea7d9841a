//! Convention ledger: the sign and framing constants the representation
//! theoretic formulas need to agree with the skein normalization
//! v^-1 P(L+) - v P(L-) = z P(L0), P(unknot) = 1.
//!
//! Each constant is re-derived by `verify::calibrate` and asserted in tests.

use serde::Serialize;

use crate::rosso_jones::TorusParams;

/// Cable tables equal (-1)^{components - 1} times the skein normalization.
/// For the z^-1 identity of a knot cable this is the factor in front of
/// (v^-1 - v).
pub const EPSILON: i64 = -1;

/// Each unit of framing above the vertical framing multiplies the adjoint
/// channel of that component by v^{2 SIGMA}.
pub const SIGMA: i64 = 1;

/// v-exponent turning the fundamental Rosso-Jones sum of a torus knot into
/// the zero-framed polynomial.
pub fn fundamental_prefactor(tp: TorusParams) -> i64 {
    (tp.m as i64 - 1) * tp.n as i64
}

/// Sign turning a skein-normalized invariant of a `components`-component
/// link into the table convention.
pub fn table_sign(components: usize) -> i64 {
    if components % 2 == 1 {
        1
    } else {
        -1
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Ledger {
    pub epsilon: i64,
    pub sigma: i64,
    pub fundamental_prefactor: &'static str,
    pub table_sign: &'static str,
}

pub fn ledger() -> Ledger {
    Ledger {
        epsilon: EPSILON,
        sigma: SIGMA,
        fundamental_prefactor: "v^{(m-1)n}",
        table_sign: "(-1)^{components-1}",
    }
}
