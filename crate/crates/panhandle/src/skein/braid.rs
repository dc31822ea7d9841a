//! Braid words, their closures, and reverse-parallel cables of closures.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use super::diagram::{Crossing, Edge, PlanarDiagram};
use crate::error::{Error, Result};

/// A word in the Artin generators: letter `i > 0` is sigma_i, `-i` its inverse.
/// sigma_i crosses positions i and i+1 (1-based) with the left strand on top.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidWord {
    pub strands: usize,
    pub letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::Invalid("a braid needs at least one strand".into()));
        }
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize >= strands {
                return Err(Error::Invalid(format!("generator {l} on {strands} strands")));
            }
        }
        Ok(BraidWord { strands, letters })
    }

    /// (sigma_1 ... sigma_{m-1})^n.
    pub fn torus(m: usize, n: usize) -> Result<Self> {
        let letters = (0..n).flat_map(|_| 1..m as i32).collect();
        Self::new(m, letters)
    }

    /// Band generator a_{i,j} (i < j): strands i and j cross in front of the ones between.
    pub fn band(strands: usize, i: usize, j: usize, positive: bool) -> Result<Self> {
        if !(1 <= i && i < j && j <= strands) {
            return Err(Error::Invalid(format!("band ({i},{j}) on {strands} strands")));
        }
        let conj: Vec<i32> = (i as i32..j as i32 - 1).collect();
        let mut letters = conj.clone();
        letters.push(if positive { j as i32 - 1 } else { 1 - j as i32 });
        letters.extend(conj.iter().rev().map(|l| -l));
        Self::new(strands, letters)
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord { strands: self.strands, letters: self.letters.iter().rev().map(|l| -l).collect() }
    }

    pub fn concat(&self, o: &BraidWord) -> Result<BraidWord> {
        if self.strands != o.strands {
            return Err(Error::LengthMismatch { expected: self.strands, got: o.strands });
        }
        let mut letters = self.letters.clone();
        letters.extend(&o.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|l| l.signum() as i64).sum()
    }

    /// perm[p] is the bottom position that ends at top position p.
    pub fn permutation(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            at.swap(i, i + 1);
        }
        at
    }

    /// Cycles of the closure, each listed from its smallest position (0-based).
    pub fn closure_cycles(&self) -> Vec<Vec<usize>> {
        let perm = self.permutation();
        // bottom position b travels to top position t with perm[t] = b; closure feeds t back to b = t
        let mut up = vec![0; self.strands];
        for (t, &b) in perm.iter().enumerate() {
            up[b] = t;
        }
        let mut seen = vec![false; self.strands];
        let mut out = Vec::new();
        for s in 0..self.strands {
            if seen[s] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut p = s;
            while !seen[p] {
                seen[p] = true;
                cyc.push(p);
                p = up[p];
            }
            out.push(cyc);
        }
        out
    }

    /// Closure with every strand oriented upwards.
    pub fn closure(&self) -> PlanarDiagram {
        self.closure_oriented(&vec![true; self.strands]).expect("upward closure")
    }

    /// Closure with per-position orientations (true = up). Orientation must be
    /// preserved by the permutation for the closure to be oriented.
    pub fn closure_oriented(&self, up: &[bool]) -> Result<PlanarDiagram> {
        if up.len() != self.strands {
            return Err(Error::LengthMismatch { expected: self.strands, got: up.len() });
        }
        let s = self.strands;
        let mut pos_edge: Vec<Edge> = (0..s as Edge).collect();
        let mut pos_up = up.to_vec();
        let mut next = s as Edge;
        let mut crossings = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            let (ll, lr) = (pos_edge[i], pos_edge[i + 1]);
            let (ul, ur) = (next, next + 1);
            next += 2;
            // strand a: lower left to upper right; strand b: lower right to upper left
            let (a_up, b_up) = (pos_up[i], pos_up[i + 1]);
            let (ai, ao) = if a_up { (ll, ur) } else { (ur, ll) };
            let (bi, bo) = if b_up { (lr, ul) } else { (ul, lr) };
            let o = |u: bool| if u { 1i8 } else { -1 };
            let sign = l.signum() as i8 * o(a_up) * o(b_up);
            crossings.push(if l > 0 {
                Crossing { ui: bi, uo: bo, oi: ai, oo: ao, sign }
            } else {
                Crossing { ui: ai, uo: ao, oi: bi, oo: bo, sign }
            });
            pos_edge[i] = ul;
            pos_edge[i + 1] = ur;
            pos_up.swap(i, i + 1);
        }
        if pos_up != up {
            return Err(Error::MalformedDiagram("closure orientations do not match".into()));
        }
        // identify top edge at p with bottom edge p
        let mut map: HashMap<Edge, Edge> = HashMap::new();
        for (p, &top) in pos_edge.iter().enumerate() {
            if top != p as Edge {
                map.insert(top, p as Edge);
            }
        }
        let f = |e: Edge| *map.get(&e).unwrap_or(&e);
        let crossings: Vec<Crossing> = crossings
            .into_iter()
            .map(|c| Crossing { ui: f(c.ui), uo: f(c.uo), oi: f(c.oi), oo: f(c.oo), sign: c.sign })
            .collect();
        let used: BTreeSet<Edge> = crossings.iter().flat_map(|c| c.edges()).collect();
        let free = self.closure_cycles().iter().filter(|cyc| cyc.iter().all(|&p| !used.contains(&(p as Edge)))).count();
        PlanarDiagram::new(crossings, free)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|l| format!("s{l}")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Accepts "s1 s1 s-2", "s1 s2^-1", or signed integers "1 1 -2"; the strand
/// count is one more than the largest generator index.
impl FromStr for BraidWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for tok in s.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
            let body = tok.trim_start_matches(['s', 'S']);
            let (idx, inv) = match body.split_once('^') {
                Some((i, "-1")) => (i, true),
                Some(_) => return Err(Error::Invalid(format!("bad braid letter {tok}"))),
                None => (body, false),
            };
            let k: i32 = idx.parse().map_err(|_| Error::Invalid(format!("bad braid letter {tok}")))?;
            letters.push(if inv { -k } else { k });
        }
        let strands = letters.iter().map(|l| l.unsigned_abs() as usize + 1).max().unwrap_or(1);
        BraidWord::new(strands, letters)
    }
}

/// Reverse-parallel cable of the closure of `b`: each strand is doubled into an
/// (up, down) pair, and component c receives `twists[c]` extra full twists
/// between its two copies, each adding +1 to their linking number. Components
/// are ordered as in `closure_cycles`.
pub fn reverse_cable_braid(b: &BraidWord, twists: &[i64]) -> Result<PlanarDiagram> {
    let cycles = b.closure_cycles();
    if twists.len() != cycles.len() {
        return Err(Error::LengthMismatch { expected: cycles.len(), got: twists.len() });
    }
    let mut letters = Vec::with_capacity(4 * b.letters.len());
    for &l in &b.letters {
        let i = l.abs();
        if l > 0 {
            letters.extend([2 * i, 2 * i + 1, 2 * i - 1, 2 * i]);
        } else {
            letters.extend([-2 * i, -(2 * i - 1), -(2 * i + 1), -2 * i]);
        }
    }
    for (cyc, &t) in cycles.iter().zip(twists) {
        let g = 2 * cyc[0] as i32 + 1;
        let letter = if t > 0 { -g } else { g };
        letters.extend(std::iter::repeat_n(letter, 2 * t.unsigned_abs() as usize));
    }
    let word = BraidWord::new(2 * b.strands, letters)?;
    let up: Vec<bool> = (0..2 * b.strands).map(|p| p % 2 == 0).collect();
    word.closure_oriented(&up)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        let a: BraidWord = "s1 s1 s-2".parse().unwrap();
        let b: BraidWord = "1, 1, -2".parse().unwrap();
        let c: BraidWord = "s1 s1 s2^-1".parse().unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c);
        assert_eq!(a.strands, 3);
        assert!("s0".parse::<BraidWord>().is_err());
        assert!("sx".parse::<BraidWord>().is_err());
    }

    #[test]
    fn torus_closure_linking() {
        let d = BraidWord::torus(4, 6).unwrap().closure();
        assert_eq!(d.component_count(), 2);
        let lk = d.linking_matrix();
        assert_eq!(lk[0][1], 6);
        let d = BraidWord::torus(2, 3).unwrap().closure();
        assert_eq!((d.component_count(), d.writhe()), (1, 3));
    }

    #[test]
    fn trivial_strands_are_free_loops() {
        let d = BraidWord::new(3, vec![1]).unwrap().closure();
        assert_eq!(d.free_loops, 1);
        assert_eq!(d.component_count(), 2);
    }

    #[test]
    fn cable_linking() {
        let b = BraidWord::new(1, vec![]).unwrap();
        for t in -2..=2 {
            let d = reverse_cable_braid(&b, &[t]).unwrap();
            assert_eq!(d.component_count(), 2);
            let lk = if d.crossings.is_empty() { 0 } else { d.linking_matrix()[0][1] };
            assert_eq!(lk, t);
        }
        let b = BraidWord::torus(2, 3).unwrap();
        let d = reverse_cable_braid(&b, &[0]).unwrap();
        assert_eq!(d.linking_matrix()[0][1], -3);
        assert!(matches!(reverse_cable_braid(&b, &[0, 0]), Err(Error::LengthMismatch { .. })));
    }

    #[test]
    fn band_word() {
        let w = BraidWord::band(4, 1, 3, true).unwrap();
        assert_eq!(w.letters, vec![1, 2, -1]);
    }
}
