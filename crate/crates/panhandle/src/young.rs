//! Partitions, hooks and contents, quantum dimensions, Littlewood-Richardson
//! coefficients and symmetric-group characters.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::bracket::{Bracket, BracketForm};
use crate::error::{Error, Result};

/// Young diagram with weakly decreasing positive rows.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.0
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl Partition {
    /// Validates weak decrease; trailing zeros are dropped.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::Invalid(format!("{parts:?} is not a partition")));
        }
        Ok(Partition(parts))
    }

    /// Panicking constructor for literals.
    pub fn of(parts: &[u32]) -> Self {
        Self::new(parts.to_vec()).expect("valid partition")
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The hook [a-r, 1^r].
    pub fn hook(a: u32, r: u32) -> Self {
        let mut v = vec![a - r];
        v.extend(std::iter::repeat(1).take(r as usize));
        Partition(v)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Row i (0-based), zero past the end.
    pub fn row(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn transpose(&self) -> Partition {
        let w = self.row(0);
        Partition((0..w).map(|j| self.0.iter().filter(|&&r| r > j).count() as u32).collect())
    }

    /// Cells (i, j), both 0-based.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &r)| (0..r as usize).map(move |j| (i, j)))
    }

    pub fn contains(&self, o: &Partition) -> bool {
        o.len() <= self.len() && o.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn is_hook(&self) -> bool {
        self.0.iter().skip(1).all(|&r| r == 1)
    }

    /// Weight coordinates a_1..a_{N-1} with a_i = R_i - R_{i+1}.
    pub fn to_weight(&self, n: usize) -> Result<Vec<u32>> {
        if self.len() >= n.max(1) {
            return Err(Error::RankTooSmall { n, need: self.len() + 1 });
        }
        Ok((0..n - 1).map(|i| self.row(i) - self.row(i + 1)).collect())
    }
}

/// Hook length of every cell.
pub fn hooks(r: &Partition) -> Vec<u32> {
    let t = r.transpose();
    r.cells().map(|(i, j)| r.row(i) - j as u32 + t.row(j) - i as u32 - 1).collect()
}

/// Sum of contents j - i over the cells.
pub fn content_sum(r: &Partition) -> i64 {
    r.cells().map(|(i, j)| j as i64 - i as i64).sum()
}

/// Partition with R_i = a_i + ... + a_{N-1}.
pub fn weight_to_partition(a: &[u32]) -> Partition {
    let mut parts: Vec<u32> = (0..a.len()).map(|i| a[i..].iter().sum()).collect();
    while parts.last() == Some(&0) {
        parts.pop();
    }
    Partition(parts)
}

/// All partitions of n in reverse lexicographic order.
pub fn partitions(n: u32) -> Vec<Partition> {
    fn go(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=n.min(max)).rev() {
            cur.push(p);
            go(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Partitions of n contained in the diagram `outer`.
pub fn partitions_inside(n: u32, outer: &Partition) -> Vec<Partition> {
    partitions(n).into_iter().filter(|p| outer.contains(p)).collect()
}

/// D_R(q, v q^shift) as a bracket form.
pub fn quantum_dimension_shifted(r: &Partition, shift: i64) -> BracketForm {
    let num = r.cells().map(|(i, j)| Bracket::VQ(j as i64 - i as i64 + shift));
    let den = hooks(r).into_iter().map(|h| Bracket::Q(h as i64));
    BracketForm::new(num.collect::<Vec<_>>(), den.collect::<Vec<_>>()).expect("hooks are positive")
}

/// Hook-content quantum dimension D_R(q, v).
pub fn quantum_dimension(r: &Partition) -> BracketForm {
    quantum_dimension_shifted(r, 0)
}

/// Order of the centralizer of a permutation of cycle type mu.
pub fn centralizer(mu: &Partition) -> u64 {
    let mut counts: HashMap<u32, u64> = HashMap::new();
    for &p in mu.parts() {
        *counts.entry(p).or_insert(0) += 1;
    }
    counts
        .into_iter()
        .map(|(p, k)| (p as u64).pow(k as u32) * (1..=k).product::<u64>())
        .product()
}

type CharKey = (Partition, Partition);

fn char_cache() -> &'static Mutex<HashMap<CharKey, i64>> {
    static C: OnceLock<Mutex<HashMap<CharKey, i64>>> = OnceLock::new();
    C.get_or_init(|| Mutex::new(HashMap::new()))
}

/// chi^lambda(mu) by border-strip removal on beta-numbers.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(lambda.size(), mu.size()));
    }
    let key = (lambda.clone(), mu.clone());
    if let Some(&c) = char_cache().lock().unwrap().get(&key) {
        return Ok(c);
    }
    let l = lambda.len();
    let beta: Vec<i64> = (0..l).map(|i| lambda.row(i) as i64 + (l - 1 - i) as i64).collect();
    let c = mn_beta(&beta, mu.parts());
    char_cache().lock().unwrap().insert(key, c);
    Ok(c)
}

fn mn_beta(beta: &[i64], mu: &[u32]) -> i64 {
    let Some((&r, rest)) = mu.split_first() else {
        return 1;
    };
    let r = r as i64;
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        let nb = b - r;
        if nb < 0 || beta.contains(&nb) {
            continue;
        }
        let between = beta.iter().filter(|&&x| x > nb && x < b).count();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        let mut next = beta.to_vec();
        next[idx] = nb;
        next.sort_unstable_by(|a, b| b.cmp(a));
        total += sign * mn_beta(&next, rest);
    }
    total
}

type LrKey = (Partition, Partition, Partition);

fn lr_cache() -> &'static Mutex<HashMap<LrKey, u64>> {
    static C: OnceLock<Mutex<HashMap<LrKey, u64>>> = OnceLock::new();
    C.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Multiplicity of s_lambda in s_mu * s_nu, counted as LR fillings of
/// lambda/mu with content nu.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.size() != mu.size() + nu.size() || !lambda.contains(mu) || !lambda.contains(nu) {
        return 0;
    }
    if nu.is_empty() || mu.is_empty() {
        return 1;
    }
    let key = (lambda.clone(), mu.clone(), nu.clone());
    if let Some(&c) = lr_cache().lock().unwrap().get(&key) {
        return c;
    }
    let cells: Vec<(usize, usize)> = (0..lambda.len())
        .flat_map(|i| (mu.row(i) as usize..lambda.row(i) as usize).rev().map(move |j| (i, j)))
        .collect();
    let mut fill: HashMap<(usize, usize), usize> = HashMap::new();
    let mut count = vec![0u32; nu.len()];
    let c = lr_fill(&cells, 0, mu, nu.parts(), &mut fill, &mut count);
    lr_cache().lock().unwrap().insert(key, c);
    c
}

fn lr_fill(
    cells: &[(usize, usize)],
    at: usize,
    mu: &Partition,
    nu: &[u32],
    fill: &mut HashMap<(usize, usize), usize>,
    count: &mut [u32],
) -> u64 {
    let Some(&(i, j)) = cells.get(at) else {
        return 1;
    };
    let hi = fill.get(&(i, j + 1)).copied().unwrap_or(nu.len() - 1);
    let lo = if i > 0 && j >= mu.row(i - 1) as usize {
        fill.get(&(i - 1, j)).map(|&a| a + 1).unwrap_or(0)
    } else {
        0
    };
    let mut total = 0;
    for k in lo..=hi.min(nu.len() - 1) {
        if count[k] >= nu[k] || (k > 0 && count[k] + 1 > count[k - 1]) {
            continue;
        }
        count[k] += 1;
        fill.insert((i, j), k);
        total += lr_fill(cells, at + 1, mu, nu, fill, count);
        fill.remove(&(i, j));
        count[k] -= 1;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bracket::Fraction;

    fn p(v: &[u32]) -> Partition {
        Partition::of(v)
    }

    #[test]
    fn hook_lengths() {
        let mut h = hooks(&p(&[2, 1]));
        h.sort();
        assert_eq!(h, vec![1, 1, 3]);
        assert_eq!(hooks(&p(&[1])), vec![1]);
        let mut h = hooks(&p(&[3, 2]));
        h.sort();
        assert_eq!(h, vec![1, 1, 2, 3, 4]);
    }

    #[test]
    fn contents() {
        assert_eq!(content_sum(&p(&[2])), 1);
        assert_eq!(content_sum(&p(&[1, 1])), -1);
        assert_eq!(content_sum(&p(&[2, 1])), 0);
    }

    #[test]
    fn qdim_of_box_and_21() {
        let d1 = quantum_dimension(&p(&[1]));
        assert_eq!(d1, BracketForm::new([Bracket::VQ(0)], [Bracket::Q(1)]).unwrap());
        let d21 = quantum_dimension(&p(&[2, 1]));
        let want = BracketForm::new(
            [Bracket::VQ(0), Bracket::VQ(1), Bracket::VQ(-1)],
            [Bracket::Q(3), Bracket::Q(1), Bracket::Q(1)],
        )
        .unwrap();
        assert_eq!(d21, want);
    }

    #[test]
    fn qdim_of_column_is_gaussian_binomial() {
        // [N choose k]_q in symmetric normalization, via the q-analogue recursion.
        fn gauss(n: i64, k: i64) -> std::collections::BTreeMap<i64, num_bigint::BigInt> {
            use num_bigint::BigInt;
            let mut out = std::collections::BTreeMap::new();
            if k < 0 || k > n {
                return out;
            }
            if k == 0 || k == n {
                out.insert(0, BigInt::from(1));
                return out;
            }
            // [n,k] = q^{-k}[n-1,k-1] + q^{n-k}[n-1,k]
            for (e, c) in gauss(n - 1, k - 1) {
                *out.entry(e - (n - k)).or_insert_with(|| BigInt::from(0)) += c;
            }
            for (e, c) in gauss(n - 1, k) {
                *out.entry(e + k).or_insert_with(|| BigInt::from(0)) += c;
            }
            out.retain(|_, c| *c != BigInt::from(0));
            out
        }
        for n in 1..=6i64 {
            for k in 1..=n.min(4) {
                let d = Fraction::from_form(&quantum_dimension(&Partition::hook(k as u32, k as u32 - 1))).unwrap();
                let (num, den) = d.specialize_v(n);
                let val = crate::bracket::univariate_div(&num, &den).expect("polynomial at v = q^N");
                assert_eq!(val, gauss(n, k), "N={n} k={k}");
            }
        }
    }

    #[test]
    fn characters() {
        assert_eq!(mn_character(&p(&[1, 1]), &p(&[2])).unwrap(), -1);
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[3])).unwrap(), -1);
        for mu in partitions(5) {
            assert_eq!(mn_character(&p(&[5]), &mu).unwrap(), 1);
        }
        assert!(mn_character(&p(&[2]), &p(&[1])).is_err());
    }

    #[test]
    fn s3_table_by_orbit_counting() {
        // permutation character of S3 on 3 points = chi^[3] + chi^[2,1]
        let fixed = [(p(&[1, 1, 1]), 3), (p(&[2, 1]), 1), (p(&[3]), 0)];
        for (mu, f) in fixed {
            let s = mn_character(&p(&[3]), &mu).unwrap() + mn_character(&p(&[2, 1]), &mu).unwrap();
            assert_eq!(s, f);
        }
    }

    #[test]
    fn column_orthogonality() {
        for n in 1..=6 {
            let ps = partitions(n);
            for mu in &ps {
                for nu in &ps {
                    let s: i64 = ps
                        .iter()
                        .map(|l| mn_character(l, mu).unwrap() * mn_character(l, nu).unwrap())
                        .sum();
                    let want = if mu == nu { centralizer(mu) as i64 } else { 0 };
                    assert_eq!(s, want, "{mu} {nu}");
                }
            }
        }
    }

    #[test]
    fn pieri_and_small_lr() {
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[1]), &p(&[1, 1])), 1);
        assert_eq!(lr_coefficient(&p(&[2]), &p(&[1]), &p(&[1])), 1);
        assert_eq!(lr_coefficient(&p(&[1, 1]), &p(&[1]), &p(&[1])), 1);
        assert_eq!(lr_coefficient(&p(&[3, 2, 1]), &p(&[2, 1]), &p(&[2, 1])), 2);
        assert_eq!(lr_coefficient(&p(&[2]), &p(&[1]), &p(&[2])), 0);
    }

    #[test]
    fn weights() {
        assert_eq!(weight_to_partition(&[1, 1]), p(&[2, 1]));
        assert_eq!(weight_to_partition(&[0, 0, 0]), Partition::empty());
        for n in 3..7 {
            let mut a = vec![0; n - 1];
            a[0] = 1;
            a[n - 2] = 1;
            let adj = weight_to_partition(&a);
            assert_eq!(adj, Partition::hook(n as u32, n as u32 - 2));
            assert_eq!(adj.to_weight(n).unwrap(), a);
        }
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..9).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(Partition::new(vec![2, 1, 0]).unwrap(), p(&[2, 1]));
    }
}
