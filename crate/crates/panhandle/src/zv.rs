//! (z, v) coefficient tables, z = q - 1/q, and their text formats.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::coeff::Integer;
use crate::error::{Error, Result};
use crate::laurent::{Exp, Laurent1, LaurentPoly1, LaurentPoly2};

/// A polynomial in z^{±1} and v^{±1}, with z-exponents bounded below by
/// `-pole_order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZVTable {
    pub pole_order: u32,
    /// Coefficients keyed with `x` = z-exponent.
    pub poly: LaurentPoly2,
}

/// Expansion of z^d in q.
fn z_power(d: u32, cache: &mut HashMap<u32, Vec<(i64, BigInt)>>) -> &Vec<(i64, BigInt)> {
    cache.entry(d).or_insert_with(|| {
        let mut out = Vec::with_capacity(d as usize + 1);
        let mut binom = BigInt::one();
        for k in 0..=d {
            let sign = if k % 2 == 0 { binom.clone() } else { -binom.clone() };
            out.push((d as i64 - 2 * k as i64, sign));
            binom = binom * BigInt::from(d - k) / BigInt::from(k + 1);
        }
        out
    })
}

impl ZVTable {
    pub fn zero() -> Self {
        ZVTable { pole_order: 0, poly: LaurentPoly2::zero() }
    }

    /// Wraps a (z, v) polynomial; the pole order is read off its support.
    pub fn from_zv(poly: LaurentPoly2) -> Self {
        let pole_order = poly.min_x().map(|k| (-k).max(0) as u32).unwrap_or(0);
        ZVTable { pole_order, poly }
    }

    /// Converts `numer = z^pole_order * P`, given in (q, v), to the (z, v)
    /// coefficients of P.
    pub fn from_q(numer: &LaurentPoly2, pole_order: u32) -> Result<Self> {
        let mut cache = HashMap::new();
        let mut out = LaurentPoly2::zero();
        let vs: BTreeSet<i64> = numer.iter().map(|(e, _)| e.v).collect();
        for j in vs {
            let mut col: BTreeMap<i64, BigInt> =
                numer.v_column(j).iter().map(|(k, c)| (*k, c.clone())).collect();
            while let Some((&d, c)) = col.iter().next_back() {
                if d < 0 {
                    return Err(Error::NotInZSubring { v_exp: j });
                }
                let c = c.clone();
                for (k, b) in z_power(d as u32, &mut cache) {
                    let slot = col.entry(*k).or_insert_with(BigInt::zero);
                    *slot -= &c * b;
                    if slot.is_zero() {
                        col.remove(k);
                    }
                }
                out.add_term(Exp::new(d - pole_order as i64, j), c);
            }
        }
        Ok(ZVTable { pole_order, poly: out })
    }

    /// The inverse of [`ZVTable::from_q`]: z^pole_order * P written in (q, v).
    pub fn to_q(&self) -> LaurentPoly2 {
        let mut cache = HashMap::new();
        let mut out = LaurentPoly2::zero();
        for (e, c) in self.poly.iter() {
            let d = e.x + self.pole_order as i64;
            assert!(d >= 0, "z-exponent below the pole order");
            for (k, b) in z_power(d as u32, &mut cache) {
                out.add_term(Exp::new(*k, e.v), c * b);
            }
        }
        out
    }

    pub fn coeff(&self, k: i64, j: i64) -> BigInt {
        self.poly.coeff(k, j)
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// The coefficient of z^k as a polynomial in v.
    pub fn z_coefficient(&self, k: i64) -> LaurentPoly1 {
        self.poly.x_row(k)
    }

    pub fn z_exponents(&self) -> BTreeSet<i64> {
        self.poly.iter().map(|(e, _)| e.x).collect()
    }

    pub fn v_exponents(&self) -> BTreeSet<i64> {
        self.poly.iter().map(|(e, _)| e.v).collect()
    }

    pub fn min_v(&self) -> Option<i64> {
        self.poly.min_v()
    }

    pub fn max_v(&self) -> Option<i64> {
        self.poly.max_v()
    }

    pub fn span_v(&self) -> Option<i64> {
        Some(self.max_v()? - self.min_v()?)
    }

    /// Invariant of the mirror image: z^k v^j -> (-1)^k z^k v^-j.
    pub fn mirror(&self) -> Self {
        let p = self.poly.map_coeffs(|e, c| if e.x.rem_euclid(2) == 1 { -c.clone() } else { c.clone() });
        ZVTable { pole_order: self.pole_order, poly: p.invert_v() }
    }

    pub fn scale(&self, c: i64) -> Self {
        ZVTable { pole_order: self.pole_order, poly: self.poly.scale(&Integer::from(c)) }
    }

    pub fn mul(&self, o: &ZVTable) -> Self {
        ZVTable { pole_order: self.pole_order + o.pole_order, poly: &self.poly * &o.poly }
    }

    pub fn add(&self, o: &ZVTable) -> Self {
        ZVTable { pole_order: self.pole_order.max(o.pole_order), poly: &self.poly + &o.poly }
    }

    pub fn sub(&self, o: &ZVTable) -> Self {
        ZVTable { pole_order: self.pole_order.max(o.pole_order), poly: &self.poly - &o.poly }
    }

    /// Checks the z-parity and pole bound of an l-component link invariant.
    pub fn check_link_shape(&self, components: u32) -> bool {
        let lo = 1 - components as i64;
        self.poly.iter().all(|(e, _)| e.x >= lo && (e.x - lo).rem_euclid(2) == 0)
    }

    fn grid_axes(&self) -> (Vec<i64>, Vec<i64>) {
        let axis = |s: BTreeSet<i64>| -> Vec<i64> {
            let (Some(&lo), Some(&hi)) = (s.first(), s.last()) else { return vec![] };
            let step = if s.iter().all(|k| (k - lo).rem_euclid(2) == 0) { 2 } else { 1 };
            (lo..=hi).step_by(step).collect()
        };
        (axis(self.z_exponents()), axis(self.v_exponents()))
    }

    /// Table layout: header row of v-exponents, one row per z-exponent.
    pub fn to_csv(&self) -> String {
        let (zs, vs) = self.grid_axes();
        let mut s = String::from("z\\v");
        for j in &vs {
            write!(s, ",{j}").unwrap();
        }
        s.push('\n');
        for k in &zs {
            write!(s, "{k}").unwrap();
            for j in &vs {
                write!(s, ",{}", self.coeff(*k, *j)).unwrap();
            }
            s.push('\n');
        }
        s
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let bad = |m: &str| Error::Invalid(format!("csv: {m}"));
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| bad("empty input"))?;
        let vs: Vec<i64> = header
            .split(',')
            .skip(1)
            .map(|t| t.trim().parse::<i64>().map_err(|_| bad(t)))
            .collect::<Result<_>>()?;
        let mut p = LaurentPoly2::zero();
        for line in lines {
            let cells: Vec<&str> = line.split(',').map(str::trim).collect();
            let k: i64 = cells[0].parse().map_err(|_| bad(cells[0]))?;
            if cells.len() - 1 > vs.len() {
                return Err(bad("row longer than header"));
            }
            for (j, cell) in vs.iter().zip(&cells[1..]) {
                if cell.is_empty() {
                    continue;
                }
                let c: BigInt = cell.parse().map_err(|_| bad(cell))?;
                p.add_term(Exp::new(k, *j), c);
            }
        }
        Ok(Self::from_zv(p))
    }

    /// Tabular layout for visual comparison with typeset tables.
    pub fn to_latex(&self, caption: &str) -> String {
        let (zs, vs) = self.grid_axes();
        let mut s = String::new();
        writeln!(s, "\\begin{{tabular}}{{|c|{}}}", "c|".repeat(vs.len())).unwrap();
        writeln!(s, "\\hline").unwrap();
        write!(s, "$(z\\backslash v)$").unwrap();
        for j in &vs {
            write!(s, " & \\bf {j}").unwrap();
        }
        writeln!(s, " \\\\\n\\hline").unwrap();
        for k in &zs {
            write!(s, "{k}").unwrap();
            for j in &vs {
                write!(s, " & {}", self.coeff(*k, *j)).unwrap();
            }
            writeln!(s, " \\\\ \\hline").unwrap();
        }
        writeln!(s, "\\end{{tabular}}").unwrap();
        if !caption.is_empty() {
            writeln!(s, "% {caption}").unwrap();
        }
        s
    }

    pub fn to_json(&self) -> Value {
        poly_json(&self.poly, ["z", "v"], self.pole_order)
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let (vars, r, p) = poly_from_json(v)?;
        if vars != ["z", "v"] {
            return Err(Error::Invalid("expected vars [\"z\",\"v\"]".into()));
        }
        Ok(ZVTable { pole_order: r, poly: p })
    }
}

/// Polynomial JSON: vars, pole order and canonically ordered terms.
pub fn poly_json(p: &LaurentPoly2, vars: [&str; 2], pole_order: u32) -> Value {
    let terms: Vec<Value> = p
        .iter()
        .map(|(e, c)| json!({"e1": e.x, "e2": e.v, "c": c.to_string()}))
        .collect();
    json!({"vars": vars, "pole_order": pole_order, "terms": terms})
}

pub fn poly_from_json(v: &Value) -> Result<(Vec<String>, u32, LaurentPoly2)> {
    let bad = |m: &str| Error::Invalid(format!("polynomial json: {m}"));
    let vars: Vec<String> = v["vars"]
        .as_array()
        .ok_or_else(|| bad("vars"))?
        .iter()
        .map(|s| s.as_str().map(String::from).ok_or_else(|| bad("vars")))
        .collect::<Result<_>>()?;
    let r = v["pole_order"].as_u64().ok_or_else(|| bad("pole_order"))? as u32;
    let mut p = LaurentPoly2::zero();
    for t in v["terms"].as_array().ok_or_else(|| bad("terms"))? {
        let e1 = t["e1"].as_i64().ok_or_else(|| bad("e1"))?;
        let e2 = t["e2"].as_i64().ok_or_else(|| bad("e2"))?;
        let c: BigInt = t["c"].as_str().ok_or_else(|| bad("c"))?.parse().map_err(|_| bad("c"))?;
        p.add_term(Exp::new(e1, e2), c);
    }
    Ok((vars, r, p))
}

/// Converts a univariate v-polynomial back to a map for comparisons.
pub fn v_poly(terms: &[(i64, i64)]) -> LaurentPoly1 {
    Laurent1::from_terms(terms.iter().map(|&(k, c)| (k, Integer::from(c))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::poly;

    #[test]
    fn trefoil_q_to_z() {
        // q^2 v^2 + q^-2 v^2 - v^4 = 2v^2 - v^4 + z^2 v^2
        let p = poly(&[(2, 2, 1), (-2, 2, 1), (0, 4, -1)]);
        let t = ZVTable::from_q(&p, 0).unwrap();
        assert_eq!(t.poly, poly(&[(0, 2, 2), (0, 4, -1), (2, 2, 1)]));
        assert_eq!(t.to_q(), p);
    }

    #[test]
    fn unknot_over_bracket() {
        // z * {v}/{q} = v - 1/v
        let t = ZVTable::from_q(&poly(&[(0, 1, 1), (0, -1, -1)]), 1).unwrap();
        assert_eq!(t.poly, poly(&[(-1, 1, 1), (-1, -1, -1)]));
        assert!(ZVTable::from_q(&LaurentPoly2::zero(), 3).unwrap().is_zero());
    }

    #[test]
    fn residue_is_reported() {
        assert!(matches!(
            ZVTable::from_q(&poly(&[(1, 0, 1)]), 0),
            Err(Error::NotInZSubring { v_exp: 0 })
        ));
    }

    #[test]
    fn csv_round_trip() {
        let t = ZVTable::from_zv(poly(&[(-1, -3, -9), (-1, -1, 21), (1, 5, 1)]));
        let csv = t.to_csv();
        assert!(csv.starts_with("z\\v,-3,-1,1,3,5\n-1,-9,21,0,0,0\n1,0,0,0,0,1\n"));
        assert_eq!(ZVTable::from_csv(&csv).unwrap(), t);
        assert_eq!(ZVTable::from_json(&t.to_json()).unwrap(), t);
    }

    #[test]
    fn mirror_negates_v_and_odd_z() {
        let t = ZVTable::from_zv(poly(&[(1, 3, 2), (0, 2, 1)]));
        assert_eq!(t.mirror().poly, poly(&[(1, -3, -2), (0, -2, 1)]));
        assert_eq!(t.mirror().mirror(), t);
    }
}
