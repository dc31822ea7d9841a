//! Adams operations on the adjoint character, expanded in the composite basis.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use serde_json::{json, Value};

use crate::composite::{koike_expand, CompositeRep};
use crate::error::{Error, Result};
use crate::young::{mn_character, partitions, Partition};

/// scalar + sum of c * S_(R,P).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdamsExpansion {
    pub scalar: i64,
    pub terms: BTreeMap<CompositeRep, i64>,
}

impl AdamsExpansion {
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(c, k)| json!({"R": c.r.parts(), "P": c.p.parts(), "c": k}))
            .collect();
        json!({"scalar": self.scalar, "terms": terms})
    }

    /// Grades |R| that occur.
    pub fn grades(&self) -> Vec<u32> {
        let mut g: Vec<u32> = self.terms.keys().map(|c| c.grade()).collect();
        g.dedup();
        g.sort_unstable();
        g.dedup();
        g
    }
}

fn binomial(n: u64, k: u64) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

/// sum_{k=0}^{l} (-1)^{l+k} l!/(l-k)! (m/l)^k.
pub fn zeta(m: u32, l: u32) -> Result<i64> {
    if l == 0 || m % l != 0 {
        return Err(Error::Invalid(format!("{l} does not divide {m}")));
    }
    let a = (m / l) as i64;
    let mut total = 0i64;
    let mut falling = 1i64;
    for k in 0..=l as i64 {
        if k > 0 {
            falling *= l as i64 - k + 1;
        }
        let sign = if (l as i64 + k) % 2 == 0 { 1 } else { -1 };
        total += sign * falling * a.pow(k as u32);
    }
    Ok(total)
}

/// Power sum p_(a^k) in the Schur basis.
pub fn power_sum_schur(a: u32, k: u32) -> Vec<(Partition, i64)> {
    let mu = Partition::of(&vec![a; k as usize]);
    partitions(a * k)
        .into_iter()
        .filter_map(|lam| {
            let c = mn_character(&lam, &mu).expect("sizes agree");
            (c != 0).then_some((lam, c))
        })
        .collect()
}

fn cache() -> &'static Mutex<HashMap<(u32, u32), Arc<AdamsExpansion>>> {
    static C: OnceLock<Mutex<HashMap<(u32, u32), Arc<AdamsExpansion>>>> = OnceLock::new();
    C.get_or_init(|| Mutex::new(HashMap::new()))
}

/// (p_a(x) p_a(1/x) - 1)^l with a = m/l, in the composite basis.
pub fn adjoint_adams(m: u32, l: u32) -> Result<Arc<AdamsExpansion>> {
    if m == 0 || l == 0 || m % l != 0 {
        return Err(Error::Invalid(format!("adams({m},{l}) needs a positive divisor l of m")));
    }
    if let Some(e) = cache().lock().unwrap().get(&(m, l)) {
        return Ok(e.clone());
    }
    let a = m / l;
    let mut acc: BTreeMap<CompositeRep, i64> = BTreeMap::new();
    for k in 0..=l {
        let coef = binomial(l as u64, k as u64) * if (l - k) % 2 == 0 { 1 } else { -1 };
        let ps = power_sum_schur(a, k);
        for (lam, c1) in &ps {
            for (mu, c2) in &ps {
                for (comp, c) in koike_expand(lam, mu) {
                    *acc.entry(comp).or_insert(0) += coef * c1 * c2 * c;
                }
            }
        }
    }
    acc.retain(|_, c| *c != 0);
    let scalar = acc.remove(&CompositeRep::scalar()).unwrap_or(0);
    let e = Arc::new(AdamsExpansion { scalar, terms: acc });
    cache().lock().unwrap().insert((m, l), e.clone());
    Ok(e)
}
