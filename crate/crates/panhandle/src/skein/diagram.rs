//! Oriented link diagrams as lists of crossings between labelled edges.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde_json::{json, Value};

use crate::error::{Error, Result};

pub type Edge = u32;

/// A crossing: the under strand runs `ui -> uo`, the over strand `oi -> oo`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Crossing {
    pub ui: Edge,
    pub uo: Edge,
    pub oi: Edge,
    pub oo: Edge,
    pub sign: i8,
}

impl Crossing {
    /// The same crossing with the other strand on top.
    pub fn switched(self) -> Crossing {
        Crossing { ui: self.oi, uo: self.oo, oi: self.ui, oo: self.uo, sign: -self.sign }
    }

    pub fn edges(&self) -> [Edge; 4] {
        [self.ui, self.uo, self.oi, self.oo]
    }
}

/// Crossings plus a number of crossingless unknotted components.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PlanarDiagram {
    pub crossings: Vec<Crossing>,
    pub free_loops: usize,
}

impl PlanarDiagram {
    pub fn new(crossings: Vec<Crossing>, free_loops: usize) -> Result<Self> {
        let d = PlanarDiagram { crossings, free_loops };
        d.validate()?;
        Ok(d)
    }

    pub fn unknot() -> Self {
        PlanarDiagram { crossings: vec![], free_loops: 1 }
    }

    pub fn unlink(k: usize) -> Self {
        PlanarDiagram { crossings: vec![], free_loops: k }
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    /// Every edge must enter exactly one crossing and leave exactly one.
    pub fn validate(&self) -> Result<()> {
        let mut ins: HashMap<Edge, usize> = HashMap::new();
        let mut outs: HashMap<Edge, usize> = HashMap::new();
        for c in &self.crossings {
            if c.sign != 1 && c.sign != -1 {
                return Err(Error::MalformedDiagram(format!("crossing sign {}", c.sign)));
            }
            *ins.entry(c.ui).or_default() += 1;
            *ins.entry(c.oi).or_default() += 1;
            *outs.entry(c.uo).or_default() += 1;
            *outs.entry(c.oo).or_default() += 1;
        }
        let keys: BTreeSet<Edge> = ins.keys().chain(outs.keys()).copied().collect();
        for e in keys {
            let (i, o) = (ins.get(&e).copied().unwrap_or(0), outs.get(&e).copied().unwrap_or(0));
            if i != 1 || o != 1 {
                return Err(Error::MalformedDiagram(format!("edge {e} enters {i} and leaves {o} crossings")));
            }
        }
        Ok(())
    }

    /// For every edge, the crossing it enters and whether it enters as the under strand.
    pub fn heads(&self) -> HashMap<Edge, (usize, bool)> {
        let mut h = HashMap::with_capacity(2 * self.crossings.len());
        for (k, c) in self.crossings.iter().enumerate() {
            h.insert(c.ui, (k, true));
            h.insert(c.oi, (k, false));
        }
        h
    }

    /// Edge cycles of the components that have crossings, ordered by their
    /// smallest edge, each starting at that edge.
    pub fn edge_cycles(&self) -> Vec<Vec<Edge>> {
        let heads = self.heads();
        let mut seen: BTreeSet<Edge> = BTreeSet::new();
        let all: BTreeSet<Edge> = heads.keys().copied().collect();
        let mut out = Vec::new();
        for &start in &all {
            if seen.contains(&start) {
                continue;
            }
            let mut cyc = Vec::new();
            let mut e = start;
            while seen.insert(e) {
                cyc.push(e);
                let (k, under) = heads[&e];
                let c = self.crossings[k];
                e = if under { c.uo } else { c.oo };
            }
            out.push(cyc);
        }
        out
    }

    /// Number of components, free loops included.
    pub fn component_count(&self) -> usize {
        self.edge_cycles().len() + self.free_loops
    }

    /// Component index of every edge.
    pub fn edge_components(&self) -> HashMap<Edge, usize> {
        let mut m = HashMap::new();
        for (i, cyc) in self.edge_cycles().into_iter().enumerate() {
            for e in cyc {
                m.insert(e, i);
            }
        }
        m
    }

    /// Pairwise linking numbers, with each component's writhe on the diagonal.
    /// Free loops come last as zero rows.
    pub fn linking_matrix(&self) -> Vec<Vec<i64>> {
        let comp = self.edge_components();
        let k = self.component_count();
        let mut twice = vec![vec![0i64; k]; k];
        for c in &self.crossings {
            let (a, b) = (comp[&c.ui], comp[&c.oi]);
            if a == b {
                twice[a][a] += 2 * c.sign as i64;
            } else {
                twice[a][b] += c.sign as i64;
                twice[b][a] += c.sign as i64;
            }
        }
        twice.into_iter().map(|r| r.into_iter().map(|x| x / 2).collect()).collect()
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign as i64).sum()
    }

    /// Mirror image: every crossing switched.
    pub fn mirror(&self) -> PlanarDiagram {
        PlanarDiagram { crossings: self.crossings.iter().map(|c| c.switched()).collect(), free_loops: self.free_loops }
    }

    /// Split union with relabelled copies.
    pub fn disjoint_union(&self, o: &PlanarDiagram) -> PlanarDiagram {
        let off = self.crossings.iter().flat_map(|c| c.edges()).max().map_or(0, |m| m + 1);
        let mut crossings = self.crossings.clone();
        crossings.extend(o.crossings.iter().map(|c| Crossing {
            ui: c.ui + off,
            uo: c.uo + off,
            oi: c.oi + off,
            oo: c.oo + off,
            sign: c.sign,
        }));
        PlanarDiagram { crossings, free_loops: self.free_loops + o.free_loops }
    }

    /// Renumbers edges 0, 1, 2, ... in order of first appearance.
    pub fn compacted(&self) -> PlanarDiagram {
        let mut map: BTreeMap<Edge, Edge> = BTreeMap::new();
        let mut crossings = Vec::with_capacity(self.crossings.len());
        for c in &self.crossings {
            let mut f = |e: Edge| {
                let n = map.len() as Edge;
                *map.entry(e).or_insert(n)
            };
            crossings.push(Crossing { ui: f(c.ui), uo: f(c.uo), oi: f(c.oi), oo: f(c.oo), sign: c.sign });
        }
        PlanarDiagram { crossings, free_loops: self.free_loops }
    }

    /// PD entries [a, b, c, d, sign]: a incoming under, c outgoing under, and
    /// b, d the over strand (outgoing first for positive crossings).
    pub fn to_pd(&self) -> Vec<[i64; 5]> {
        self.crossings
            .iter()
            .map(|c| {
                let (b, d) = if c.sign > 0 { (c.oo, c.oi) } else { (c.oi, c.oo) };
                [c.ui as i64, b as i64, c.uo as i64, d as i64, c.sign as i64]
            })
            .collect()
    }

    pub fn from_pd(pd: &[[i64; 5]], free_loops: usize) -> Result<Self> {
        let mut crossings = Vec::with_capacity(pd.len());
        for x in pd {
            if x[..4].iter().any(|&e| e < 0 || e > Edge::MAX as i64) {
                return Err(Error::MalformedDiagram(format!("edge label out of range in {x:?}")));
            }
            let [a, b, c, d] = [x[0] as Edge, x[1] as Edge, x[2] as Edge, x[3] as Edge];
            let cr = match x[4] {
                1 => Crossing { ui: a, uo: c, oi: d, oo: b, sign: 1 },
                -1 => Crossing { ui: a, uo: c, oi: b, oo: d, sign: -1 },
                s => return Err(Error::MalformedDiagram(format!("crossing sign {s}"))),
            };
            crossings.push(cr);
        }
        Self::new(crossings, free_loops)
    }

    pub fn to_json(&self) -> Value {
        json!({"crossings": self.to_pd(), "free_loops": self.free_loops})
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |m: &str| Error::MalformedDiagram(format!("pd json: {m}"));
        let arr = v["crossings"].as_array().ok_or_else(|| bad("missing crossings"))?;
        let mut pd = Vec::with_capacity(arr.len());
        for x in arr {
            let xs = x.as_array().filter(|a| a.len() == 5).ok_or_else(|| bad("entries need 5 integers"))?;
            let mut row = [0i64; 5];
            for (slot, e) in row.iter_mut().zip(xs) {
                *slot = e.as_i64().ok_or_else(|| bad("non-integer entry"))?;
            }
            pd.push(row);
        }
        let free = v.get("free_loops").and_then(Value::as_u64).unwrap_or(0) as usize;
        if pd.is_empty() && free == 0 {
            return Ok(Self::unknot());
        }
        Self::from_pd(&pd, free)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Positive Hopf link.
    pub fn hopf() -> PlanarDiagram {
        PlanarDiagram::new(
            vec![
                Crossing { ui: 0, uo: 1, oi: 2, oo: 3, sign: 1 },
                Crossing { ui: 3, uo: 2, oi: 1, oo: 0, sign: 1 },
            ],
            0,
        )
        .unwrap()
    }

    #[test]
    fn pd_round_trip() {
        let d = hopf();
        let back = PlanarDiagram::from_pd(&d.to_pd(), 0).unwrap();
        assert_eq!(back, d);
        let j = d.to_json();
        assert_eq!(PlanarDiagram::from_json(&j).unwrap(), d);
    }

    #[test]
    fn malformed() {
        let bad = vec![Crossing { ui: 0, uo: 1, oi: 2, oo: 2, sign: 1 }];
        assert!(matches!(PlanarDiagram::new(bad, 0), Err(Error::MalformedDiagram(_))));
        assert!(PlanarDiagram::from_pd(&[[0, 1, 1, 0, 2]], 0).is_err());
    }

    #[test]
    fn linking() {
        let d = hopf();
        assert_eq!(d.component_count(), 2);
        assert_eq!(d.linking_matrix(), vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(PlanarDiagram::unlink(2).linking_matrix(), vec![vec![0, 0], vec![0, 0]]);
    }
}
