//! HOMFLY-PT by skein recursion towards descending diagrams.
//!
//! Normalization v^-1 P(L+) - v P(L-) = z P(L0), P(unknot) = 1. Polynomials
//! are kept in z and v directly (the `x` slot of `LaurentPoly2` is z).

use std::collections::{BTreeSet, HashMap};
use std::sync::{Mutex, OnceLock};

use super::diagram::{Crossing, Edge, PlanarDiagram};
use crate::coeff::Integer;
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly2;
use crate::zv::ZVTable;

pub const DEFAULT_MAX_CROSSINGS: usize = 24;

/// Crossing budget: `PANHANDLE_MAX_CROSSINGS` if set, else the default.
pub fn crossing_budget() -> usize {
    std::env::var("PANHANDLE_MAX_CROSSINGS")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_MAX_CROSSINGS)
}

/// Evaluation settings. `order_key` permutes the base points and component
/// order of the descending-diagram recursion; the result must not depend on it.
#[derive(Clone, Copy, Debug)]
pub struct SkeinOptions {
    pub max_crossings: usize,
    pub order_key: u64,
    pub parallel: bool,
    /// Share results through the global memo table.
    pub memo: bool,
}

impl Default for SkeinOptions {
    fn default() -> Self {
        SkeinOptions { max_crossings: crossing_budget(), order_key: 0, parallel: true, memo: true }
    }
}

/// HOMFLY-PT polynomial of a diagram with the default options.
pub fn homfly(d: &PlanarDiagram) -> Result<ZVTable> {
    homfly_with(d, SkeinOptions::default())
}

pub fn homfly_with(d: &PlanarDiagram, opts: SkeinOptions) -> Result<ZVTable> {
    if d.crossing_count() > opts.max_crossings {
        return Err(Error::BudgetExceeded { crossings: d.crossing_count(), budget: opts.max_crossings });
    }
    d.validate()?;
    if d.crossings.is_empty() && d.free_loops == 0 {
        return Err(Error::MalformedDiagram("empty diagram".into()));
    }
    let p = eval(d.crossings.clone(), d.free_loops, &opts);
    Ok(ZVTable::from_zv(p))
}

fn mono(c: i64, z: i64, v: i64) -> LaurentPoly2 {
    LaurentPoly2::monomial(Integer::from(c), z, v)
}

/// (v^-1 - v)/z, the value of a split unknot.
fn delta_pow(k: usize) -> LaurentPoly2 {
    let d = &mono(1, -1, -1) + &mono(-1, -1, 1);
    d.pow(k as u32)
}

type Code = Vec<u32>;

fn memo() -> &'static Mutex<HashMap<Code, LaurentPoly2>> {
    static M: OnceLock<Mutex<HashMap<Code, LaurentPoly2>>> = OnceLock::new();
    M.get_or_init(|| Mutex::new(HashMap::new()))
}

struct Uf(HashMap<Edge, Edge>);

impl Uf {
    fn find(&mut self, e: Edge) -> Edge {
        let p = *self.0.get(&e).unwrap_or(&e);
        if p == e {
            return e;
        }
        let r = self.find(p);
        self.0.insert(e, r);
        r
    }

    fn join(&mut self, a: Edge, b: Edge) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // keep the smaller label as representative
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.0.insert(hi, lo);
        }
    }
}

#[derive(Clone, Copy)]
enum Resolve {
    /// Drop the crossing, keeping both strands (R1/R2 removal).
    Keep,
    /// Oriented smoothing: ui -> oo and oi -> uo.
    Smooth,
}

/// Removes the crossings in `idx`, reconnecting edges; returns the new
/// crossing list and the number of closed loops created.
fn resolve(cr: &[Crossing], idx: &[usize], how: Resolve) -> (Vec<Crossing>, usize) {
    let mut uf = Uf(HashMap::new());
    let mut touched = Vec::new();
    for &k in idx {
        let c = cr[k];
        match how {
            Resolve::Keep => {
                uf.join(c.ui, c.uo);
                uf.join(c.oi, c.oo);
            }
            Resolve::Smooth => {
                uf.join(c.ui, c.oo);
                uf.join(c.oi, c.uo);
            }
        }
        touched.extend(c.edges());
    }
    let rest: Vec<Crossing> = cr
        .iter()
        .enumerate()
        .filter(|(k, _)| !idx.contains(k))
        .map(|(_, c)| Crossing {
            ui: uf.find(c.ui),
            uo: uf.find(c.uo),
            oi: uf.find(c.oi),
            oo: uf.find(c.oo),
            sign: c.sign,
        })
        .collect();
    let used: BTreeSet<Edge> = rest.iter().flat_map(|c| c.edges()).collect();
    let roots: BTreeSet<Edge> = touched.into_iter().map(|e| uf.find(e)).collect();
    let loops = roots.iter().filter(|r| !used.contains(r)).count();
    (rest, loops)
}

/// Reidemeister I and II reductions until none applies.
fn simplify(mut cr: Vec<Crossing>, mut free: usize) -> (Vec<Crossing>, usize) {
    'outer: loop {
        for (k, c) in cr.iter().enumerate() {
            if c.uo == c.oi || c.oo == c.ui {
                let (r, l) = resolve(&cr, &[k], Resolve::Keep);
                cr = r;
                free += l;
                continue 'outer;
            }
        }
        let mut by_oi: HashMap<Edge, usize> = HashMap::new();
        for (k, c) in cr.iter().enumerate() {
            by_oi.insert(c.oi, k);
        }
        for (k1, a) in cr.iter().enumerate() {
            let Some(&k2) = by_oi.get(&a.oo) else { continue };
            let b = cr[k2];
            if k1 != k2 && a.sign != b.sign && (a.uo == b.ui || b.uo == a.ui) {
                let (r, l) = resolve(&cr, &[k1, k2], Resolve::Keep);
                cr = r;
                free += l;
                continue 'outer;
            }
        }
        return (cr, free);
    }
}

/// Connected pieces of the crossing graph.
fn split(cr: Vec<Crossing>) -> Vec<Vec<Crossing>> {
    let mut uf = Uf(HashMap::new());
    for c in &cr {
        uf.join(c.ui, c.uo);
        uf.join(c.ui, c.oi);
        uf.join(c.ui, c.oo);
    }
    let mut groups: HashMap<Edge, Vec<Crossing>> = HashMap::new();
    let mut order = Vec::new();
    for c in cr {
        let r = uf.find(c.ui);
        if !groups.contains_key(&r) {
            order.push(r);
        }
        groups.entry(r).or_default().push(c);
    }
    order.into_iter().map(|r| groups.remove(&r).unwrap()).collect()
}

fn heads(cr: &[Crossing]) -> HashMap<Edge, (usize, bool)> {
    let mut h = HashMap::with_capacity(2 * cr.len());
    for (k, c) in cr.iter().enumerate() {
        h.insert(c.ui, (k, true));
        h.insert(c.oi, (k, false));
    }
    h
}

fn next_edge(cr: &[Crossing], h: &HashMap<Edge, (usize, bool)>, e: Edge) -> (usize, bool, Edge) {
    let (k, under) = h[&e];
    (k, under, if under { cr[k].uo } else { cr[k].oo })
}

fn rank(e: Edge, key: u64) -> u64 {
    if key == 0 {
        return e as u64;
    }
    // splitmix64 finalizer
    let mut x = (e as u64) ^ key;
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d049bb133111eb);
    x ^ (x >> 31)
}

/// Components as edge cycles, each rotated to start at its lowest-ranked
/// edge, ordered by that rank.
fn cycles(cr: &[Crossing], key: u64) -> Vec<Vec<Edge>> {
    let h = heads(cr);
    let mut seen: BTreeSet<Edge> = BTreeSet::new();
    let mut out: Vec<Vec<Edge>> = Vec::new();
    let mut all: Vec<Edge> = h.keys().copied().collect();
    all.sort_unstable();
    for start in all {
        if seen.contains(&start) {
            continue;
        }
        let mut cyc = Vec::new();
        let mut e = start;
        while seen.insert(e) {
            cyc.push(e);
            e = next_edge(cr, &h, e).2;
        }
        let base = (0..cyc.len()).min_by_key(|&i| rank(cyc[i], key)).unwrap();
        cyc.rotate_left(base);
        out.push(cyc);
    }
    out.sort_by_key(|c| rank(c[0], key));
    out
}

/// First crossing met from below when walking the components in order.
fn first_ascending(cr: &[Crossing], key: u64) -> (Option<usize>, usize) {
    let h = heads(cr);
    let cyc = cycles(cr, key);
    let mut seen = vec![false; cr.len()];
    for c in &cyc {
        for &e in c {
            let (k, under, _) = next_edge(cr, &h, e);
            if !std::mem::replace(&mut seen[k], true) && under {
                return (Some(k), cyc.len());
            }
        }
    }
    (None, cyc.len())
}

/// Relabelling-invariant code of a connected diagram.
fn canonical_code(cr: &[Crossing]) -> Code {
    let h = heads(cr);
    let mut best: Option<Code> = None;
    for start in h.keys().copied() {
        let mut label: HashMap<Edge, u32> = HashMap::with_capacity(h.len());
        let mut met: Vec<usize> = Vec::with_capacity(cr.len());
        let mut met_flag = vec![false; cr.len()];
        let mut scan = 0;
        let mut s = Some(start);
        while let Some(first) = s {
            let mut e = first;
            while !label.contains_key(&e) {
                label.insert(e, label.len() as u32);
                let (k, _, nx) = next_edge(cr, &h, e);
                if !std::mem::replace(&mut met_flag[k], true) {
                    met.push(k);
                }
                e = nx;
            }
            s = None;
            while scan < met.len() {
                let c = cr[met[scan]];
                if !label.contains_key(&c.ui) {
                    s = Some(c.ui);
                    break;
                }
                if !label.contains_key(&c.oi) {
                    s = Some(c.oi);
                    break;
                }
                scan += 1;
            }
        }
        let mut rows: Vec<[u32; 5]> = cr
            .iter()
            .map(|c| [label[&c.ui], label[&c.uo], label[&c.oi], label[&c.oo], (c.sign + 1) as u32])
            .collect();
        rows.sort_unstable();
        let code: Code = rows.into_iter().flatten().collect();
        if best.as_ref().is_none_or(|b| code < *b) {
            best = Some(code);
        }
    }
    best.unwrap_or_default()
}

fn eval(cr: Vec<Crossing>, free: usize, opts: &SkeinOptions) -> LaurentPoly2 {
    let (cr, free) = simplify(cr, free);
    let pieces = split(cr);
    if pieces.is_empty() {
        return delta_pow(free.saturating_sub(1));
    }
    let mut out = delta_pow(pieces.len() + free - 1);
    for piece in pieces {
        out = &out * &eval_piece(piece, opts);
    }
    out
}

fn eval_piece(cr: Vec<Crossing>, opts: &SkeinOptions) -> LaurentPoly2 {
    let code = if opts.memo { canonical_code(&cr) } else { Code::new() };
    if opts.memo {
        if let Some(p) = memo().lock().unwrap().get(&code) {
            return p.clone();
        }
    }
    let (bad, comps) = first_ascending(&cr, opts.order_key);
    let p = match bad {
        None => delta_pow(comps - 1),
        Some(k) => {
            let sign = cr[k].sign;
            let mut switched = cr.clone();
            switched[k] = cr[k].switched();
            let (smooth, loops) = resolve(&cr, &[k], Resolve::Smooth);
            let run_s = || eval(switched, 0, opts);
            let run_0 = || eval(smooth, loops, opts);
            let (ps, p0) = if opts.parallel && cr.len() >= 12 { rayon::join(run_s, run_0) } else { (run_s(), run_0()) };
            if sign > 0 {
                // P+ = v^2 P- + v z P0
                &(&mono(1, 0, 2) * &ps) + &(&mono(1, 1, 1) * &p0)
            } else {
                // P- = v^-2 P+ - v^-1 z P0
                &(&mono(1, 0, -2) * &ps) + &(&mono(-1, 1, -1) * &p0)
            }
        }
    };
    if opts.memo {
        memo().lock().unwrap().insert(code, p.clone());
    }
    p
}

/// Clears the shared memo table.
pub fn clear_memo() {
    memo().lock().unwrap().clear();
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::poly;

    fn c(ui: Edge, uo: Edge, oi: Edge, oo: Edge, sign: i8) -> Crossing {
        Crossing { ui, uo, oi, oo, sign }
    }

    #[test]
    fn unknot_and_unlink() {
        assert_eq!(homfly(&PlanarDiagram::unknot()).unwrap().poly, LaurentPoly2::one());
        let u2 = homfly(&PlanarDiagram::unlink(2)).unwrap();
        assert_eq!(u2.poly, poly(&[(-1, -1, 1), (-1, 1, -1)]));
        // a curl is still the unknot
        let curl = PlanarDiagram::new(vec![c(0, 1, 1, 0, 1)], 0).unwrap();
        assert_eq!(homfly(&curl).unwrap().poly, LaurentPoly2::one());
    }

    #[test]
    fn hopf() {
        let d = PlanarDiagram::new(vec![c(0, 1, 2, 3, 1), c(3, 2, 1, 0, 1)], 0).unwrap();
        // v^-1 P(H+) - v P(unlink) = z P(unknot)
        let p = homfly(&d).unwrap().poly;
        let want = &(&mono(1, 1, 1) + &mono(1, -1, 1)) + &mono(-1, -1, 3);
        assert_eq!(p, want);
    }

    #[test]
    fn code_is_relabel_invariant() {
        let a = vec![c(0, 1, 2, 3, 1), c(3, 2, 1, 0, 1)];
        let b = vec![c(13, 12, 11, 10, 1), c(10, 11, 12, 13, 1)];
        assert_eq!(canonical_code(&a), canonical_code(&b));
    }

    #[test]
    fn budget() {
        let d = PlanarDiagram::new(vec![c(0, 1, 2, 3, 1), c(3, 2, 1, 0, 1)], 0).unwrap();
        let opts = SkeinOptions { max_crossings: 1, ..Default::default() };
        assert!(matches!(homfly_with(&d, opts), Err(Error::BudgetExceeded { .. })));
    }
}
