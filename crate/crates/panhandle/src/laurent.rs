//! Exact Laurent polynomials in one and two variables.
//!
//! The bivariate type is used both for (q, v) and for (z, v); the first
//! variable is called `x` below and the second is always `v`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use crate::coeff::{Coeff, Integer};
use crate::error::{Error, Result};

/// Exponent pair. Ordering is lexicographic by (v, x), which is also the
/// canonical serialization order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Exp {
    pub v: i64,
    pub x: i64,
}

impl Exp {
    pub fn new(x: i64, v: i64) -> Self {
        Exp { v, x }
    }
}

impl Add for Exp {
    type Output = Exp;
    fn add(self, o: Exp) -> Exp {
        Exp { v: self.v + o.v, x: self.x + o.x }
    }
}

impl Sub for Exp {
    type Output = Exp;
    fn sub(self, o: Exp) -> Exp {
        Exp { v: self.v - o.v, x: self.x - o.x }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Laurent2<C> {
    terms: BTreeMap<Exp, C>,
}

/// The (q, v) or (z, v) polynomial with big-integer coefficients.
pub type LaurentPoly2 = Laurent2<Integer>;

impl<C: Coeff> Default for Laurent2<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> Laurent2<C> {
    pub fn zero() -> Self {
        Laurent2 { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(C::one(), 0, 0)
    }

    pub fn monomial(c: C, x: i64, v: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(Exp::new(x, v), c);
        p
    }

    /// Builds from `(x, v, c)` triples, summing repeated exponents.
    pub fn from_terms<I: IntoIterator<Item = (i64, i64, C)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (x, v, c) in it {
            p.add_term(Exp::new(x, v), c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, x: i64, v: i64) -> C {
        self.terms.get(&Exp::new(x, v)).cloned().unwrap_or_else(C::zero)
    }

    /// Terms in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = (&Exp, &C)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, e: Exp, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Laurent2 {
            terms: self.terms.iter().map(|(e, a)| (*e, a.clone() * c.clone())).collect(),
        }
    }

    /// Multiplies by the monomial x^dx v^dv.
    pub fn shift(&self, dx: i64, dv: i64) -> Self {
        let d = Exp::new(dx, dv);
        Laurent2 { terms: self.terms.iter().map(|(e, a)| (*e + d, a.clone())).collect() }
    }

    /// Substitutes x -> x^-1 and v -> v^-1 simultaneously.
    pub fn mirror(&self) -> Self {
        self.map_exponents(|e| Exp { v: -e.v, x: -e.x })
    }

    /// Substitutes x -> x^-1 only.
    pub fn invert_x(&self) -> Self {
        self.map_exponents(|e| Exp { v: e.v, x: -e.x })
    }

    /// Substitutes v -> v^-1 only.
    pub fn invert_v(&self) -> Self {
        self.map_exponents(|e| Exp { v: -e.v, x: e.x })
    }

    pub fn map_exponents<F: Fn(Exp) -> Exp>(&self, f: F) -> Self {
        let mut p = Self::zero();
        for (e, c) in &self.terms {
            p.add_term(f(*e), c.clone());
        }
        p
    }

    pub fn map_coeffs<D: Coeff, F: Fn(&Exp, &C) -> D>(&self, f: F) -> Laurent2<D> {
        let mut p = Laurent2::zero();
        for (e, c) in &self.terms {
            p.add_term(*e, f(e, c));
        }
        p
    }

    pub fn min_v(&self) -> Option<i64> {
        self.terms.keys().map(|e| e.v).min()
    }

    pub fn max_v(&self) -> Option<i64> {
        self.terms.keys().map(|e| e.v).max()
    }

    pub fn min_x(&self) -> Option<i64> {
        self.terms.keys().map(|e| e.x).min()
    }

    pub fn max_x(&self) -> Option<i64> {
        self.terms.keys().map(|e| e.x).max()
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Coefficient of v^j as a Laurent polynomial in x.
    pub fn v_column(&self, j: i64) -> Laurent1<C> {
        let lo = Exp { v: j, x: i64::MIN };
        let hi = Exp { v: j, x: i64::MAX };
        Laurent1::from_terms(self.terms.range(lo..=hi).map(|(e, c)| (e.x, c.clone())))
    }

    /// Coefficient of x^k as a Laurent polynomial in v.
    pub fn x_row(&self, k: i64) -> Laurent1<C> {
        Laurent1::from_terms(
            self.terms.iter().filter(|(e, _)| e.x == k).map(|(e, c)| (e.v, c.clone())),
        )
    }

    /// Exact quotient by `x^m.x v^m.v - 1`, where the monomial must be
    /// positive in the (v, x) lexicographic order.
    pub fn div_binomial(&self, m: Exp) -> Result<Self> {
        assert!(m > Exp { v: 0, x: 0 }, "binomial divisor must be positive");
        let fail = || Error::NonExactDivision { divisor: format!("x^{} v^{} - 1", m.x, m.v) };
        let Some(floor) = self.terms.keys().next().copied() else {
            return Ok(Self::zero());
        };
        // With m.v = 0 the division splits into v-columns; (v, x) order alone
        // would not bound the descent in x.
        let mut col_min: BTreeMap<i64, i64> = BTreeMap::new();
        for e in self.terms.keys() {
            col_min.entry(e.v).or_insert(e.x);
        }
        let mut rem = self.clone();
        let mut quot = Self::zero();
        // p = Q (M - 1)  <=>  Q M = p + Q; peel the leading term each round.
        while let Some((&lead, c)) = rem.terms.iter().next_back() {
            let e = lead - m;
            let below = if m.v == 0 { col_min.get(&e.v).map_or(true, |&lo| e.x < lo) } else { e < floor };
            if below {
                return Err(fail());
            }
            let c = c.clone();
            rem.terms.remove(&lead);
            rem.add_term(e, c.clone());
            quot.add_term(e, c);
        }
        Ok(quot)
    }

    pub fn fmt_with(&self, f: &mut fmt::Formatter<'_>, xname: &str) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let s = format!("{c:?}");
            let (neg, mag) = match s.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, s),
            };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let mut factors = Vec::new();
            if mag != "1" || (e.x == 0 && e.v == 0) {
                factors.push(mag);
            }
            for (name, k) in [(xname, e.x), ("v", e.v)] {
                match k {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    _ => factors.push(format!("{name}^{k}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Debug for Laurent2<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(f, "x")
    }
}

impl<C: Coeff> fmt::Display for Laurent2<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(f, "q")
    }
}

impl<C: Coeff> AddAssign<&Laurent2<C>> for Laurent2<C> {
    fn add_assign(&mut self, o: &Laurent2<C>) {
        for (e, c) in &o.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl<C: Coeff> SubAssign<&Laurent2<C>> for Laurent2<C> {
    fn sub_assign(&mut self, o: &Laurent2<C>) {
        for (e, c) in &o.terms {
            self.add_term(*e, -c.clone());
        }
    }
}

impl<C: Coeff> Add for &Laurent2<C> {
    type Output = Laurent2<C>;
    fn add(self, o: &Laurent2<C>) -> Laurent2<C> {
        let mut p = self.clone();
        p += o;
        p
    }
}

impl<C: Coeff> Sub for &Laurent2<C> {
    type Output = Laurent2<C>;
    fn sub(self, o: &Laurent2<C>) -> Laurent2<C> {
        let mut p = self.clone();
        p -= o;
        p
    }
}

impl<C: Coeff> Mul for &Laurent2<C> {
    type Output = Laurent2<C>;
    fn mul(self, o: &Laurent2<C>) -> Laurent2<C> {
        let mut p = Laurent2::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                p.add_term(*e1 + *e2, c1.clone() * c2.clone());
            }
        }
        p
    }
}

impl<C: Coeff> Neg for &Laurent2<C> {
    type Output = Laurent2<C>;
    fn neg(self) -> Laurent2<C> {
        Laurent2 { terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<C: Coeff> $tr for Laurent2<C> {
            type Output = Laurent2<C>;
            fn $m(self, o: Laurent2<C>) -> Laurent2<C> {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<C: Coeff> Neg for Laurent2<C> {
    type Output = Laurent2<C>;
    fn neg(self) -> Laurent2<C> {
        -&self
    }
}

/// Univariate Laurent polynomial.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Laurent1<C> {
    terms: BTreeMap<i64, C>,
}

pub type LaurentPoly1 = Laurent1<Integer>;

impl<C: Coeff> Default for Laurent1<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> Laurent1<C> {
    pub fn zero() -> Self {
        Laurent1 { terms: BTreeMap::new() }
    }

    pub fn monomial(c: C, k: i64) -> Self {
        Self::from_terms([(k, c)])
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, C)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (k, c) in it {
            p.add_term(k, c);
        }
        p
    }

    pub fn add_term(&mut self, k: i64, c: C) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(k).or_insert_with(C::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn coeff(&self, k: i64) -> C {
        self.terms.get(&k).cloned().unwrap_or_else(C::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&i64, &C)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_deg(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_deg(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn shift(&self, d: i64) -> Self {
        Laurent1 { terms: self.terms.iter().map(|(k, c)| (k + d, c.clone())).collect() }
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_terms(self.terms.iter().map(|(k, a)| (*k, a.clone() * c.clone())))
    }

    pub fn sum_coeffs(&self) -> C {
        let mut s = C::zero();
        for c in self.terms.values() {
            s += c.clone();
        }
        s
    }
}

impl<C: Coeff> Add for &Laurent1<C> {
    type Output = Laurent1<C>;
    fn add(self, o: &Laurent1<C>) -> Laurent1<C> {
        let mut p = self.clone();
        for (k, c) in &o.terms {
            p.add_term(*k, c.clone());
        }
        p
    }
}

impl<C: Coeff> Sub for &Laurent1<C> {
    type Output = Laurent1<C>;
    fn sub(self, o: &Laurent1<C>) -> Laurent1<C> {
        let mut p = self.clone();
        for (k, c) in &o.terms {
            p.add_term(*k, -c.clone());
        }
        p
    }
}

impl<C: Coeff> Mul for &Laurent1<C> {
    type Output = Laurent1<C>;
    fn mul(self, o: &Laurent1<C>) -> Laurent1<C> {
        let mut p = Laurent1::zero();
        for (a, c1) in &self.terms {
            for (b, c2) in &o.terms {
                p.add_term(a + b, c1.clone() * c2.clone());
            }
        }
        p
    }
}

impl<C: Coeff> fmt::Debug for Laurent1<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = Laurent2 {
            terms: self.terms.iter().map(|(k, c)| (Exp::new(0, *k), c.clone())).collect(),
        };
        p.fmt_with(f, "x")
    }
}

impl<C: Coeff> fmt::Display for Laurent1<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl<C: Coeff> One for Laurent2<C> {
    fn one() -> Self {
        Laurent2::one()
    }
}

impl<C: Coeff> Zero for Laurent2<C> {
    fn zero() -> Self {
        Laurent2::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Integer helper: builds a polynomial from small-integer triples.
pub fn poly(terms: &[(i64, i64, i64)]) -> LaurentPoly2 {
    Laurent2::from_terms(terms.iter().map(|&(x, v, c)| (x, v, Integer::from(c))))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let p = poly(&[(1, 0, 1), (-1, 0, -1)]);
        let q = poly(&[(1, 0, -1)]);
        let s = &p + &q;
        assert_eq!(s, poly(&[(-1, 0, -1)]));
        assert!((&p - &p).is_zero());
        assert!((&p * &LaurentPoly2::zero()).is_zero());
    }

    #[test]
    fn binomial_division() {
        // (q^2 - 1)(v + q) / (q^2 - 1)
        let f = poly(&[(2, 0, 1), (0, 0, -1)]);
        let g = poly(&[(0, 1, 1), (1, 0, 1), (-3, 2, 5)]);
        let h = &f * &g;
        assert_eq!(h.div_binomial(Exp::new(2, 0)).unwrap(), g);
        let vq = poly(&[(2, 2, 1), (0, 0, -1)]);
        let h2 = &vq * &g;
        assert_eq!(h2.div_binomial(Exp::new(2, 2)).unwrap(), g);
        assert!(g.div_binomial(Exp::new(2, 0)).is_err());
    }

    #[test]
    fn rows_and_columns() {
        let p = poly(&[(2, 2, 1), (-2, 2, 1), (0, 4, -1)]);
        assert_eq!(p.v_column(2), Laurent1::from_terms([(2, 1.into()), (-2, 1.into())]));
        assert_eq!(p.x_row(0), Laurent1::from_terms([(4, (-1).into())]));
        assert_eq!(p.min_v(), Some(2));
        assert_eq!(p.max_x(), Some(2));
    }

    #[test]
    fn generic_over_machine_integers() {
        let p: Laurent2<i64> = Laurent2::from_terms([(1, 0, 1), (-1, 0, -1)]);
        let sq = &p * &p;
        assert_eq!(sq.coeff(0, 0), -2);
        assert_eq!(sq.div_binomial(Exp::new(2, 0)).unwrap().len(), 2);
    }

    #[test]
    fn display() {
        let p = poly(&[(0, 2, 2), (0, 4, -1), (2, 2, 1)]);
        assert_eq!(p.to_string(), "2*v^2 + q^2*v^2 - v^4");
    }
}
