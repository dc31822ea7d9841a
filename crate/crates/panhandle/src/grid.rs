//! Grid diagrams, Thurston-Bennequin counts, and the closed-form geometric
//! data of torus links and their bandings.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::rosso_jones::TorusParams;

/// Column c carries an X in row `x[c]` and an O in row `o[c]` (0-based,
/// rows counted upward). Verticals run X -> O, horizontals O -> X, and
/// verticals pass over horizontals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridDiagram {
    pub x: Vec<usize>,
    pub o: Vec<usize>,
}

/// Per-component and total Thurston-Bennequin data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TbData {
    pub total: i64,
    pub per_component: Vec<i64>,
    pub writhe: i64,
    pub corners: i64,
    /// Linking numbers between distinct components.
    pub linking: Vec<Vec<i64>>,
}

fn is_perm(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    p.iter().all(|&i| i < p.len() && !std::mem::replace(&mut seen[i], true))
}

fn sgn(a: usize, b: usize) -> i64 {
    if b > a {
        1
    } else {
        -1
    }
}

impl GridDiagram {
    pub fn new(x: Vec<usize>, o: Vec<usize>) -> Result<Self> {
        if x.len() != o.len() || x.is_empty() || !is_perm(&x) || !is_perm(&o) {
            return Err(Error::Invalid("grid needs two permutations of equal size".into()));
        }
        if x.iter().zip(&o).any(|(a, b)| a == b) {
            return Err(Error::Invalid("X and O share a cell".into()));
        }
        Ok(GridDiagram { x, o })
    }

    pub fn size(&self) -> usize {
        self.x.len()
    }

    fn x_col_of_row(&self) -> Vec<usize> {
        let mut r = vec![0; self.size()];
        for (c, &row) in self.x.iter().enumerate() {
            r[row] = c;
        }
        r
    }

    fn o_col_of_row(&self) -> Vec<usize> {
        let mut r = vec![0; self.size()];
        for (c, &row) in self.o.iter().enumerate() {
            r[row] = c;
        }
        r
    }

    /// Component index of each column (and of the row of its O marking).
    pub fn components(&self) -> Vec<usize> {
        let xr = self.x_col_of_row();
        let mut comp = vec![usize::MAX; self.size()];
        let mut k = 0;
        for start in 0..self.size() {
            if comp[start] != usize::MAX {
                continue;
            }
            let mut c = start;
            while comp[c] == usize::MAX {
                comp[c] = k;
                c = xr[self.o[c]];
            }
            k += 1;
        }
        comp
    }

    pub fn component_count(&self) -> usize {
        self.components().iter().max().map_or(0, |m| m + 1)
    }

    /// Signed crossings (vertical column, horizontal row, sign).
    pub fn crossings(&self) -> Vec<(usize, usize, i64)> {
        let (xr, or) = (self.x_col_of_row(), self.o_col_of_row());
        let mut out = Vec::new();
        for c in 0..self.size() {
            let (a, b) = (self.x[c].min(self.o[c]), self.x[c].max(self.o[c]));
            let sv = sgn(self.x[c], self.o[c]);
            for r in a + 1..b {
                let (h0, h1) = (or[r].min(xr[r]), or[r].max(xr[r]));
                if h0 < c && c < h1 {
                    let sh = sgn(or[r], xr[r]);
                    out.push((c, r, -sv * sh));
                }
            }
        }
        out
    }

    /// Thurston-Bennequin number: writhe minus the number of corners where
    /// the vertical partner lies below and the horizontal partner to the right.
    pub fn tb(&self) -> TbData {
        let comp = self.components();
        let k = self.component_count();
        let (xr, or) = (self.x_col_of_row(), self.o_col_of_row());
        // component owning horizontal row r: the column of its O
        let row_comp = |r: usize| comp[or[r]];
        let mut z = vec![0i64; k];
        for c in 0..self.size() {
            for (row, other_row) in [(self.x[c], self.o[c]), (self.o[c], self.x[c])] {
                let partner_col = if row == self.x[c] { or[row] } else { xr[row] };
                if other_row < row && partner_col > c {
                    z[comp[c]] += 1;
                }
            }
        }
        let mut self_w = vec![0i64; k];
        let mut link = vec![vec![0i64; k]; k];
        for (c, r, s) in self.crossings() {
            let (a, b) = (comp[c], row_comp(r));
            if a == b {
                self_w[a] += s;
            } else {
                link[a][b] += s;
                link[b][a] += s;
            }
        }
        for row in link.iter_mut() {
            for v in row.iter_mut() {
                *v /= 2;
            }
        }
        let per: Vec<i64> = (0..k).map(|i| self_w[i] - z[i]).collect();
        let writhe: i64 = self.crossings().iter().map(|c| c.2).sum();
        let corners: i64 = z.iter().sum();
        TbData { total: writhe - corners, per_component: per, writhe, corners, linking: link }
    }

    /// lambda = -TB.
    pub fn lambda(&self) -> i64 {
        -self.tb().total
    }

    /// Grid of the mirror image, obtained by a quarter turn.
    pub fn mirror(&self) -> GridDiagram {
        let n = self.size();
        let mut x = vec![0; n];
        let mut o = vec![0; n];
        for c in 0..n {
            x[n - 1 - self.x[c]] = c;
            o[n - 1 - self.o[c]] = c;
        }
        GridDiagram { x, o }
    }

    /// Replaces the X in column `c` by a 2x2 block: the old cell empties,
    /// its horizontal and vertical neighbours (towards `dc`, `dr`) get X and
    /// the diagonal cell gets O.
    pub fn stabilize_at_x(&self, c: usize, dc: i8, dr: i8) -> GridDiagram {
        let r = self.x[c];
        let (new_c, c0, c1) = if dc > 0 { (c + 1, c, c + 1) } else { (c, c + 1, c) };
        let (new_r, r0, r1) = if dr > 0 { (r + 1, r, r + 1) } else { (r, r + 1, r) };
        let bump = |v: usize, at: usize| if v >= at { v + 1 } else { v };
        let n = self.size() + 1;
        let mut x = vec![usize::MAX; n];
        let mut o = vec![usize::MAX; n];
        for col in 0..self.size() {
            let nc = bump(col, new_c);
            x[nc] = bump(self.x[col], new_r);
            o[nc] = bump(self.o[col], new_r);
        }
        x[c0] = r1;
        x[c1] = r0;
        o[c1] = r1;
        GridDiagram { x, o }
    }

    /// Stabilization of the component through column `c` lowering its TB by one.
    pub fn stabilize(&self, c: usize) -> GridDiagram {
        let (dc, dr) = STABILIZATION;
        self.stabilize_at_x(c, dc, dr)
    }

    pub fn to_json(&self) -> Value {
        let one = |v: &[usize]| v.iter().map(|i| i + 1).collect::<Vec<_>>();
        json!({"size": self.size(), "X": one(&self.x), "O": one(&self.o)})
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = || Error::Invalid("grid json needs size, X, O".into());
        let read = |k: &str| -> Result<Vec<usize>> {
            v[k].as_array()
                .ok_or_else(bad)?
                .iter()
                .map(|e| e.as_u64().filter(|&i| i >= 1).map(|i| i as usize - 1).ok_or_else(bad))
                .collect()
        };
        let g = GridDiagram::new(read("X")?, read("O")?)?;
        if v["size"].as_u64() != Some(g.size() as u64) {
            return Err(bad());
        }
        Ok(g)
    }
}

/// Block direction (columns, rows) of the TB-lowering stabilization.
pub const STABILIZATION: (i8, i8) = (1, -1);

/// Staircase X(i) = i, O(i) = i + n mod (m + n); it carries !T(m, n).
fn staircase(m: usize, n: usize) -> Result<GridDiagram> {
    if m == 0 || n == 0 {
        return Err(Error::Invalid("torus grid needs m, n > 0".into()));
    }
    let s = m + n;
    GridDiagram::new((0..s).collect(), (0..s).map(|i| (i + n) % s).collect())
}

/// Size m + n grid of T(m, n) with maximal TB = mn - m - n.
pub fn standard_torus_grid(m: usize, n: usize) -> Result<GridDiagram> {
    Ok(staircase(m, n)?.mirror())
}

/// Size m + n grid of !T(m, n) with TB = -mn.
pub fn standard_mirror_grid(m: usize, n: usize) -> Result<GridDiagram> {
    staircase(m, n)
}

pub fn lambda_torus(m: i64, n: i64, mirrored: bool) -> i64 {
    if mirrored {
        m * n
    } else {
        -m * n + m + n
    }
}

pub fn arc_index_torus(m: i64, n: i64) -> i64 {
    m + n
}

fn parts(tp: TorusParams) -> (i64, i64, i64) {
    (tp.m as i64, tp.n as i64, tp.l as i64)
}

/// (1 - m/l)(n/l) + m/l: the per-component TB bound of the positive banding.
pub fn positive_threshold(tp: TorusParams) -> i64 {
    let (m, n, l) = parts(tp);
    (1 - m / l) * (n / l) + m / l
}

/// k = n/m when every component of T(m, n) is an unknot.
fn pure_k(tp: TorusParams) -> Option<i64> {
    let (m, n, _) = parts(tp);
    (tp.l == tp.m).then_some(n / m)
}

/// Whether each component can carry the given TB (as framing) in a
/// Legendrian realization of T(m, n) or its mirror.
pub fn tb_tuple_realizable(tp: TorusParams, mirrored: bool, t: &[i64]) -> bool {
    if t.len() != tp.l as usize {
        return false;
    }
    let (m, n, l) = parts(tp);
    if !mirrored {
        let a = positive_threshold(tp);
        return t.iter().all(|&x| x >= a);
    }
    match pure_k(tp) {
        None => t.iter().all(|&x| x >= m * n / (l * l)),
        Some(k) => {
            if t.iter().all(|&x| x >= k) {
                return true;
            }
            let low: Vec<usize> = (0..t.len()).filter(|&i| t[i] < k).collect();
            if k <= 1 || low.len() != 1 {
                return false;
            }
            let u = t[low[0]];
            u >= 1 && (0..t.len()).all(|i| i == low[0] || t[i] >= 2 * k - u)
        }
    }
}

fn permutations_of(base: Vec<i64>, out: &mut Vec<Vec<i64>>) {
    for i in 0..base.len() {
        let mut v = base.clone();
        v.swap(0, i);
        out.push(v);
    }
}

/// Minimal realizable tuples.
pub fn corner_framings(tp: TorusParams, mirrored: bool) -> Vec<Vec<i64>> {
    let (m, n, l) = parts(tp);
    let l_us = tp.l as usize;
    let mut out = Vec::new();
    if !mirrored {
        out.push(vec![positive_threshold(tp); l_us]);
    } else {
        match pure_k(tp) {
            None => out.push(vec![m * n / (l * l); l_us]),
            Some(k) => {
                for u in 1..=k {
                    let mut base = vec![2 * k - u; l_us];
                    base[0] = u;
                    permutations_of(base, &mut out);
                }
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// phi lies below every corner framing.
pub fn is_admissible(tp: TorusParams, mirrored: bool, phi: &[i64]) -> bool {
    phi.len() == tp.l as usize
        && corner_framings(tp, mirrored).iter().all(|c| c.iter().zip(phi).all(|(a, b)| b <= a))
}

/// Braid index of C_2(K, t) for an arc-index-sharp knot with arc index a
/// and lambda = lam.
pub fn braid_index_cable(a: i64, lam: i64, t: i64) -> i64 {
    if t <= lam - a {
        lam - t
    } else if t <= lam {
        a
    } else {
        t - lam + a
    }
}

/// Braid index of the banding of T(m, n) (or its mirror) with framings t.
pub fn braid_index_banded(tp: TorusParams, mirrored: bool, t: &[i64]) -> Result<i64> {
    if !tb_tuple_realizable(tp, mirrored, t) {
        return Err(Error::NotRealizable(t.to_vec()));
    }
    let (m, n, l) = parts(tp);
    if mirrored {
        Ok(m + n + t.iter().map(|x| x - m * n / (l * l)).sum::<i64>())
    } else {
        let d = crate::cable::vertical_delta(tp);
        Ok(n + t.iter().map(|x| x - d).sum::<i64>())
    }
}

/// max deg_v of the banded cable at corrected framings e >= 0.
pub fn banded_max_degree(tp: TorusParams, e: &[i64]) -> Result<i64> {
    if e.iter().any(|&x| x < 0) {
        return Err(Error::NegativeCorrectedFraming(e.to_vec()));
    }
    Ok(2 * tp.n as i64 - 1 + 2 * e.iter().sum::<i64>())
}

/// Strong quasipositivity of the Whitehead-doubled banding: every clasp
/// positive and the framings realizable.
pub fn sqp_whitehead_predicate(tp: TorusParams, mirrored: bool, t: &[i64], clasps: &[bool]) -> bool {
    clasps.len() == t.len() && clasps.iter().all(|&c| c) && tb_tuple_realizable(tp, mirrored, t)
}

/// Bennequin-sharp bandings of torus links are exactly the strongly
/// quasipositive ones.
pub fn bennequin_sharp(tp: TorusParams, mirrored: bool, t: &[i64]) -> bool {
    tb_tuple_realizable(tp, mirrored, t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tp(m: u32, n: u32) -> TorusParams {
        TorusParams::new(m, n).unwrap()
    }

    #[test]
    fn standard_grids() {
        let g = standard_torus_grid(2, 3).unwrap();
        assert_eq!(g.size(), 5);
        assert_eq!(g.tb().total, 1);
        assert_eq!(standard_torus_grid(3, 5).unwrap().tb().total, 7);
        let g = standard_torus_grid(4, 6).unwrap();
        assert_eq!((g.size(), g.component_count()), (10, 2));
        assert_eq!(g.tb().per_component, vec![1, 1]);
        assert_eq!(g.tb().linking[0][1], 6);
    }

    #[test]
    fn mirror_sum() {
        for (m, n) in [(2, 3), (3, 4), (2, 4), (3, 6)] {
            let g = standard_torus_grid(m, n).unwrap();
            assert_eq!(g.lambda() + g.mirror().lambda(), g.size() as i64);
            assert_eq!(g.mirror().lambda(), lambda_torus(m as i64, n as i64, true));
        }
    }

    #[test]
    fn stabilization_lowers_one_component() {
        let g = standard_torus_grid(4, 6).unwrap();
        let before = g.tb().per_component;
        let comp = g.components();
        let s = g.stabilize(0);
        let after = s.tb().per_component;
        let moved = comp[0];
        // component labels follow the first column, which keeps its label
        assert_eq!(after[moved], before[moved] - 1);
        assert_eq!(after[1 - moved], before[1 - moved]);
    }

    #[test]
    fn closed_forms() {
        assert_eq!(lambda_torus(2, 5, false), -3);
        assert_eq!(lambda_torus(2, 5, true), 10);
        assert_eq!(lambda_torus(4, 6, false), -14);
        assert_eq!(arc_index_torus(6, 9), 15);
        assert_eq!(arc_index_torus(1, 1), 2);
    }

    #[test]
    fn realizability() {
        assert!(tb_tuple_realizable(tp(2, 4), true, &[1, 3]));
        assert!(!tb_tuple_realizable(tp(2, 4), true, &[1, 2]));
        assert!(tb_tuple_realizable(tp(2, 4), true, &[2, 2]));
        assert!(tb_tuple_realizable(tp(4, 6), false, &[-1, -1]));
        assert!(!tb_tuple_realizable(tp(4, 6), false, &[-2, 0]));
        assert!(tb_tuple_realizable(tp(3, 6), true, &[1, 3, 3]));
        assert!(!tb_tuple_realizable(tp(3, 6), true, &[1, 3, 2]));
    }

    #[test]
    fn corners() {
        assert_eq!(corner_framings(tp(4, 6), false), vec![vec![-1, -1]]);
        assert_eq!(corner_framings(tp(4, 6), true), vec![vec![6, 6]]);
        assert_eq!(corner_framings(tp(2, 4), true), vec![vec![1, 3], vec![2, 2], vec![3, 1]]);
    }

    #[test]
    fn braid_indices() {
        assert_eq!(braid_index_cable(5, 1, -6), 7);
        assert_eq!(braid_index_cable(5, 1, 0), 5);
        assert_eq!(braid_index_cable(5, 1, 4), 8);
        assert_eq!(braid_index_cable(5, 1, 1), 5);
        assert_eq!(braid_index_cable(5, 1, -4), 5);
        assert_eq!(braid_index_banded(tp(2, 4), true, &[2, 2]).unwrap(), 6);
        assert_eq!(braid_index_banded(tp(2, 4), true, &[3, 2]).unwrap(), 7);
        assert_eq!(braid_index_banded(tp(3, 12), false, &[1, 1, 1]).unwrap(), 15);
        assert!(matches!(braid_index_banded(tp(3, 12), false, &[1, 0, 0]), Err(Error::NotRealizable(_))));
    }

    #[test]
    fn max_degree_law() {
        assert_eq!(banded_max_degree(tp(2, 4), &[0, 0]).unwrap(), 7);
        assert_eq!(banded_max_degree(tp(2, 4), &[1, 0]).unwrap(), 9);
        assert_eq!(banded_max_degree(tp(3, 12), &[0, 0, 0]).unwrap(), 23);
        assert!(banded_max_degree(tp(2, 4), &[-1, 0]).is_err());
    }

    #[test]
    fn whitehead() {
        assert!(!sqp_whitehead_predicate(tp(2, 4), true, &[1, 3], &[true, false]));
        assert!(!sqp_whitehead_predicate(tp(2, 2), false, &[0, 1], &[true, true]));
        assert!(sqp_whitehead_predicate(tp(2, 4), true, &[1, 3], &[true, true]));
    }

    #[test]
    fn json_round_trip() {
        let g = standard_torus_grid(2, 3).unwrap();
        let j = g.to_json();
        assert_eq!(j["size"], 5);
        assert_eq!(GridDiagram::from_json(&j).unwrap(), g);
    }
}
