//! Bracket atoms {x} = x - 1/x, products of them, and fractions whose
//! denominators are bracket products.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::coeff::{Integer, Rational};
use crate::error::{Error, Result};
use crate::laurent::{Exp, LaurentPoly2};

/// A bracket {q^a} or {v q^a}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Bracket {
    Q(i64),
    VQ(i64),
}

/// Which variable a bracket is built on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BracketKind {
    Q,
    VQ,
}

impl Bracket {
    pub fn new(kind: BracketKind, a: i64) -> Self {
        match kind {
            BracketKind::Q => Bracket::Q(a),
            BracketKind::VQ => Bracket::VQ(a),
        }
    }

    /// The monomial x with {x} = x - 1/x.
    pub fn inner(self) -> Exp {
        match self {
            Bracket::Q(a) => Exp::new(a, 0),
            Bracket::VQ(a) => Exp::new(a, 1),
        }
    }

    /// Sign-normalized form: {q^-a} = -{q^a}; {1} = 0 is reported as `None`.
    pub fn canonical(self) -> Option<(Bracket, bool)> {
        match self {
            Bracket::Q(0) => None,
            Bracket::Q(a) if a < 0 => Some((Bracket::Q(-a), true)),
            b => Some((b, false)),
        }
    }

    pub fn expand(self) -> LaurentPoly2 {
        bracket_poly(self.inner())
    }
}

impl fmt::Display for Bracket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Bracket::Q(1) => write!(f, "{{q}}"),
            Bracket::Q(a) => write!(f, "{{q^{a}}}"),
            Bracket::VQ(0) => write!(f, "{{v}}"),
            Bracket::VQ(1) => write!(f, "{{vq}}"),
            Bracket::VQ(-1) => write!(f, "{{v/q}}"),
            Bracket::VQ(a) if a < 0 => write!(f, "{{v/q^{}}}", -a),
            Bracket::VQ(a) => write!(f, "{{vq^{a}}}"),
        }
    }
}

fn bracket_poly(x: Exp) -> LaurentPoly2 {
    if x == Exp::new(0, 0) {
        return LaurentPoly2::zero();
    }
    let mut p = LaurentPoly2::monomial(Integer::one(), x.x, x.v);
    p.add_term(Exp::new(-x.x, -x.v), -Integer::one());
    p
}

/// x - 1/x for x = q^a or x = v q^a.
pub fn bracket(kind: BracketKind, a: i64) -> LaurentPoly2 {
    Bracket::new(kind, a).expand()
}

/// Multiset of bracket atoms.
pub type Atoms = BTreeMap<Bracket, u32>;

fn atoms_from<I: IntoIterator<Item = Bracket>>(it: I, negate: &mut bool) -> Option<Atoms> {
    let mut out = Atoms::new();
    for b in it {
        let (b, flip) = b.canonical()?;
        *negate ^= flip;
        *out.entry(b).or_insert(0) += 1;
    }
    Some(out)
}

fn atom_count(a: &Atoms) -> u32 {
    a.values().sum()
}

/// Least common multiple of two bracket multisets.
pub fn atoms_lcm(a: &Atoms, b: &Atoms) -> Atoms {
    let mut out = a.clone();
    for (k, &m) in b {
        let e = out.entry(*k).or_insert(0);
        *e = (*e).max(m);
    }
    out
}

/// `a - b` as multisets; `b` must be contained in `a`.
fn atoms_sub(a: &Atoms, b: &Atoms) -> Atoms {
    let mut out = a.clone();
    for (k, &m) in b {
        let e = out.get_mut(k).expect("multiset difference underflow");
        assert!(*e >= m, "multiset difference underflow");
        *e -= m;
        if *e == 0 {
            out.remove(k);
        }
    }
    out
}

/// Expanded product of a bracket multiset.
pub fn expand_atoms(a: &Atoms) -> LaurentPoly2 {
    let mut p = LaurentPoly2::one();
    for (b, &m) in a {
        let f = b.expand();
        for _ in 0..m {
            p = &p * &f;
        }
    }
    p
}

/// Exact quotient of `p` by a single bracket.
pub fn div_bracket(p: &LaurentPoly2, b: Bracket) -> Result<LaurentPoly2> {
    let x = b.inner();
    let shifted = p.shift(x.x, x.v);
    shifted.div_binomial(x + x).map_err(|_| Error::NonExactDivision { divisor: b.to_string() })
}

/// scalar * q^shift.x * v^shift.v * prod(num) / prod(den), kept in canonical
/// cancelled form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketForm {
    pub num: Atoms,
    pub den: Atoms,
    pub scalar: Rational,
    pub shift: Exp,
}

impl BracketForm {
    pub fn new<I, J>(num: I, den: J) -> Result<Self>
    where
        I: IntoIterator<Item = Bracket>,
        J: IntoIterator<Item = Bracket>,
    {
        let mut neg = false;
        let den = atoms_from(den, &mut neg)
            .ok_or_else(|| Error::NonExactDivision { divisor: "{1}".into() })?;
        let Some(num) = atoms_from(num, &mut neg) else {
            return Ok(Self::zero());
        };
        let scalar = if neg { -Rational::one() } else { Rational::one() };
        Ok(BracketForm { num, den, scalar, shift: Exp::new(0, 0) }.cancelled())
    }

    pub fn zero() -> Self {
        BracketForm {
            num: Atoms::new(),
            den: Atoms::new(),
            scalar: Rational::zero(),
            shift: Exp::new(0, 0),
        }
    }

    pub fn one() -> Self {
        BracketForm {
            num: Atoms::new(),
            den: Atoms::new(),
            scalar: Rational::one(),
            shift: Exp::new(0, 0),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.scalar.is_zero()
    }

    fn cancelled(mut self) -> Self {
        if self.scalar.is_zero() {
            return Self::zero();
        }
        let common: Vec<(Bracket, u32)> = self
            .num
            .iter()
            .filter_map(|(b, &m)| self.den.get(b).map(|&d| (*b, m.min(d))))
            .collect();
        for (b, c) in common {
            for side in [&mut self.num, &mut self.den] {
                let e = side.get_mut(&b).unwrap();
                *e -= c;
                if *e == 0 {
                    side.remove(&b);
                }
            }
        }
        self
    }

    pub fn with_scalar(mut self, s: Rational) -> Self {
        self.scalar *= s;
        self.cancelled()
    }

    pub fn with_shift(mut self, dx: i64, dv: i64) -> Self {
        self.shift = self.shift + Exp::new(dx, dv);
        self
    }

    pub fn mul(&self, o: &BracketForm) -> BracketForm {
        let mut out = self.clone();
        for (b, &m) in &o.num {
            *out.num.entry(*b).or_insert(0) += m;
        }
        for (b, &m) in &o.den {
            *out.den.entry(*b).or_insert(0) += m;
        }
        out.scalar *= o.scalar.clone();
        out.shift = out.shift + o.shift;
        out.cancelled()
    }

    /// Image under q -> 1/q, v -> 1/v.
    pub fn mirror(&self) -> BracketForm {
        // {x} -> {1/x} = -{x} for every atom.
        let mut out = self.clone();
        if (atom_count(&self.num) + atom_count(&self.den)) % 2 == 1 {
            out.scalar = -out.scalar;
        }
        out.shift = Exp::new(-self.shift.x, -self.shift.v);
        out
    }

    /// Image under q -> 1/q with v fixed.
    pub fn invert_q(&self) -> BracketForm {
        let mut neg = false;
        let flip = |a: &Atoms, neg: &mut bool| {
            let mut out = Atoms::new();
            for (b, &m) in a {
                let nb = match *b {
                    Bracket::Q(x) => Bracket::Q(-x),
                    Bracket::VQ(x) => Bracket::VQ(-x),
                };
                let (nb, f) = nb.canonical().expect("nonzero atom");
                if f && m % 2 == 1 {
                    *neg = !*neg;
                }
                *out.entry(nb).or_insert(0) += m;
            }
            out
        };
        let num = flip(&self.num, &mut neg);
        let den = flip(&self.den, &mut neg);
        let scalar = if neg { -self.scalar.clone() } else { self.scalar.clone() };
        BracketForm { num, den, scalar, shift: Exp::new(-self.shift.x, self.shift.v) }.cancelled()
    }

    /// Expands to a Laurent polynomial; fails unless the denominator divides.
    pub fn expand(&self) -> Result<LaurentPoly2> {
        if self.is_zero() {
            return Ok(LaurentPoly2::zero());
        }
        let top = expand_atoms(&self.num).shift(self.shift.x, self.shift.v);
        let top = scale_rational(&top, &self.scalar)?;
        let mut p = top;
        for (b, &m) in &self.den {
            for _ in 0..m {
                p = div_bracket(&p, *b)?;
            }
        }
        Ok(p)
    }
}

fn scale_rational(p: &LaurentPoly2, s: &Rational) -> Result<LaurentPoly2> {
    let (n, d) = (s.numer(), s.denom());
    let mut out = LaurentPoly2::zero();
    for (e, c) in p.iter() {
        let (q, r) = (c * n).div_rem(d);
        if !r.is_zero() {
            return Err(Error::NonExactDivision { divisor: d.to_string() });
        }
        out.add_term(*e, q);
    }
    Ok(out)
}

impl fmt::Display for BracketForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |a: &Atoms| {
            a.iter()
                .map(|(b, &m)| if m == 1 { b.to_string() } else { format!("{b}^{m}") })
                .collect::<Vec<_>>()
                .join("")
        };
        write!(f, "{}", self.scalar)?;
        if self.shift != Exp::new(0, 0) {
            write!(f, "*q^{}*v^{}", self.shift.x, self.shift.v)?;
        }
        if !self.num.is_empty() {
            write!(f, "*{}", side(&self.num))?;
        }
        if !self.den.is_empty() {
            write!(f, "/({})", side(&self.den))?;
        }
        Ok(())
    }
}

/// Laurent numerator over a bracket-product denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fraction {
    pub num: LaurentPoly2,
    pub den: Atoms,
}

impl Fraction {
    pub fn zero() -> Self {
        Fraction { num: LaurentPoly2::zero(), den: Atoms::new() }
    }

    pub fn from_poly(p: LaurentPoly2) -> Self {
        Fraction { num: p, den: Atoms::new() }
    }

    /// Expands the numerator of an integral bracket form.
    pub fn from_form(f: &BracketForm) -> Result<Self> {
        Self::from_form_over(f, &f.den)
    }

    /// Writes `f` over the larger denominator `den`, which must contain f.den.
    fn from_form_over(f: &BracketForm, den: &Atoms) -> Result<Self> {
        if f.is_zero() {
            return Ok(Fraction { num: LaurentPoly2::zero(), den: den.clone() });
        }
        let mut top = f.num.clone();
        for (b, m) in atoms_sub(den, &f.den) {
            *top.entry(b).or_insert(0) += m;
        }
        let num = expand_atoms(&top).shift(f.shift.x, f.shift.v);
        Ok(Fraction { num: scale_rational(&num, &f.scalar)?, den: den.clone() })
    }

    /// Sums bracket forms over their least common denominator.
    pub fn sum_forms<'a, I: IntoIterator<Item = &'a BracketForm>>(forms: I) -> Result<Self> {
        let forms: Vec<&BracketForm> = forms.into_iter().filter(|f| !f.is_zero()).collect();
        let den = forms.iter().fold(Atoms::new(), |acc, f| atoms_lcm(&acc, &f.den));
        let mut num = LaurentPoly2::zero();
        for f in forms {
            num += &Self::from_form_over(f, &den)?.num;
        }
        Ok(Fraction { num, den })
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, o: &Fraction) -> Fraction {
        let den = atoms_lcm(&self.den, &o.den);
        let a = &self.num * &expand_atoms(&atoms_sub(&den, &self.den));
        let b = &o.num * &expand_atoms(&atoms_sub(&den, &o.den));
        Fraction { num: &a + &b, den }
    }

    pub fn mul_poly(&self, p: &LaurentPoly2) -> Fraction {
        Fraction { num: &self.num * p, den: self.den.clone() }
    }

    pub fn mul_brackets(&self, num: &[Bracket], den: &[Bracket]) -> Result<Fraction> {
        let mut neg = false;
        let n = atoms_from(num.iter().copied(), &mut neg);
        let d = atoms_from(den.iter().copied(), &mut neg)
            .ok_or_else(|| Error::NonExactDivision { divisor: "{1}".into() })?;
        let Some(n) = n else { return Ok(Fraction::zero()) };
        let mut out = self.clone();
        let mut top = Atoms::new();
        for (b, m) in n {
            let cancel = out.den.get(&b).copied().unwrap_or(0).min(m);
            if cancel > 0 {
                let e = out.den.get_mut(&b).unwrap();
                *e -= cancel;
                if *e == 0 {
                    out.den.remove(&b);
                }
            }
            if m > cancel {
                top.insert(b, m - cancel);
            }
        }
        out.num = &out.num * &expand_atoms(&top);
        if neg {
            out.num = -&out.num;
        }
        for (b, m) in d {
            *out.den.entry(b).or_insert(0) += m;
        }
        Ok(out)
    }

    /// Divides out every denominator atom that divides the numerator.
    pub fn reduced(&self) -> Fraction {
        let mut num = self.num.clone();
        let mut den = Atoms::new();
        for (b, &m) in &self.den {
            let mut left = m;
            while left > 0 {
                match div_bracket(&num, *b) {
                    Ok(q) => {
                        num = q;
                        left -= 1;
                    }
                    Err(_) => break,
                }
            }
            if left > 0 {
                den.insert(*b, left);
            }
        }
        if num.is_zero() {
            den.clear();
        }
        Fraction { num, den }
    }

    /// The polynomial value; fails if any denominator atom survives.
    pub fn into_poly(self) -> Result<LaurentPoly2> {
        let r = self.reduced();
        match r.den.keys().next() {
            None => Ok(r.num),
            Some(b) => Err(Error::NonExactDivision { divisor: b.to_string() }),
        }
    }

    /// Image under q -> 1/q, v -> 1/v.
    pub fn mirror(&self) -> Fraction {
        let mut num = self.num.mirror();
        if atom_count(&self.den) % 2 == 1 {
            num = -&num;
        }
        Fraction { num, den: self.den.clone() }
    }

    /// Equality of rational functions (cross-multiplied).
    pub fn same_value(&self, o: &Fraction) -> bool {
        let den = atoms_lcm(&self.den, &o.den);
        let a = &self.num * &expand_atoms(&atoms_sub(&den, &self.den));
        let b = &o.num * &expand_atoms(&atoms_sub(&den, &o.den));
        a == b
    }

    /// Substitutes v = q^n and returns the numerator and denominator as
    /// univariate polynomials in q with v eliminated.
    pub fn specialize_v(&self, n: i64) -> (BTreeMap<i64, BigInt>, BTreeMap<i64, BigInt>) {
        let sub = |p: &LaurentPoly2| {
            let mut m: BTreeMap<i64, BigInt> = BTreeMap::new();
            for (e, c) in p.iter() {
                *m.entry(e.x + n * e.v).or_insert_with(BigInt::zero) += c;
            }
            m.retain(|_, c| !c.is_zero());
            m
        };
        (sub(&self.num), sub(&expand_atoms(&self.den)))
    }
}

/// Evaluates a univariate Laurent polynomial (as a map) at q = 1.
pub fn value_at_one(p: &BTreeMap<i64, BigInt>) -> BigInt {
    p.values().fold(BigInt::zero(), |a, c| a + c)
}

/// Quotient of univariate Laurent polynomials (as maps); `None` if inexact.
pub fn univariate_div(a: &BTreeMap<i64, BigInt>, b: &BTreeMap<i64, BigInt>) -> Option<BTreeMap<i64, BigInt>> {
    let (&bl, bc) = b.iter().next_back()?;
    let (&bmin, _) = b.iter().next()?;
    let mut rem = a.clone();
    let mut q: BTreeMap<i64, BigInt> = BTreeMap::new();
    let floor = a.keys().next().copied().unwrap_or(0);
    while let Some((&l, c)) = rem.iter().next_back() {
        let k = l - bl;
        if k + bmin < floor {
            return None;
        }
        let (f, r) = c.div_rem(bc);
        if !r.is_zero() {
            return None;
        }
        for (e, d) in b {
            let slot = rem.entry(e + k).or_insert_with(BigInt::zero);
            *slot -= &f * d;
            if slot.is_zero() {
                rem.remove(&(e + k));
            }
        }
        q.insert(k, f);
    }
    Some(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::poly;

    #[test]
    fn bracket_definition() {
        assert_eq!(bracket(BracketKind::Q, 1), poly(&[(1, 0, 1), (-1, 0, -1)]));
        assert!(bracket(BracketKind::Q, 0).is_zero());
        assert_eq!(bracket(BracketKind::VQ, -1), poly(&[(-1, 1, 1), (1, -1, -1)]));
    }

    #[test]
    fn cancellation_and_expansion() {
        let f = BracketForm::new([Bracket::Q(2), Bracket::Q(1)], [Bracket::Q(1)]).unwrap();
        assert!(f.den.is_empty());
        assert_eq!(f.expand().unwrap(), poly(&[(2, 0, 1), (-2, 0, -1)]));
        let d1 = BracketForm::new([Bracket::VQ(0)], [Bracket::Q(1)]).unwrap();
        assert!(d1.expand().is_err());
    }

    #[test]
    fn negative_q_atoms_fold_sign() {
        let f = BracketForm::new([Bracket::Q(-2)], []).unwrap();
        assert_eq!(f.expand().unwrap(), poly(&[(-2, 0, 1), (2, 0, -1)]));
        assert!(BracketForm::new([Bracket::Q(0)], []).unwrap().is_zero());
    }

    #[test]
    fn unknot_cable_numerator() {
        // {q}^2 + {vq}{v/q} = {v}^2, so (1 + D_Adj) = {v}^2/{q}^2.
        let one = BracketForm::one();
        let adj = BracketForm::new([Bracket::VQ(1), Bracket::VQ(-1)], [Bracket::Q(1), Bracket::Q(1)]).unwrap();
        let s = Fraction::sum_forms([&one, &adj]).unwrap();
        let target = BracketForm::new([Bracket::VQ(0), Bracket::VQ(0)], [Bracket::Q(1), Bracket::Q(1)]).unwrap();
        assert!(s.same_value(&Fraction::from_form(&target).unwrap()));
        // still not a Laurent polynomial
        assert!(s.clone().into_poly().is_err());
        let r = s.mul_brackets(&[Bracket::Q(1)], &[Bracket::VQ(0)]).unwrap().reduced();
        assert_eq!(r.den.len(), 1);
    }

    #[test]
    fn fraction_mirror_matches_form_mirror() {
        let f = BracketForm::new([Bracket::VQ(3), Bracket::VQ(0), Bracket::VQ(-1)], [Bracket::Q(2), Bracket::Q(1)])
            .unwrap()
            .with_shift(2, 1);
        let a = Fraction::from_form(&f.mirror()).unwrap();
        let b = Fraction::from_form(&f).unwrap().mirror();
        assert!(a.same_value(&b));
    }

    #[test]
    fn univariate_division() {
        let a: BTreeMap<i64, BigInt> = [(2, 1.into()), (0, (-1).into())].into();
        let b: BTreeMap<i64, BigInt> = [(1, 1.into()), (0, (-1).into())].into();
        let q = univariate_div(&a, &b).unwrap();
        assert_eq!(q, [(1, 1.into()), (0, 1.into())].into());
        let c: BTreeMap<i64, BigInt> = [(2, 1.into()), (0, 1.into())].into();
        assert!(univariate_div(&c, &b).is_none());
    }
}
