//! Partitions, the `(n, k)` restriction predicates, and the permuted
//! composition action used by the determinantal expansions.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of nonnegative integers.
///
/// Trailing zeros are stripped on construction, so `(2,1,0)` and `(2,1)`
/// compare equal.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        Ok(Self::from_decreasing(parts))
    }

    /// Builds a partition from parts already known to be weakly decreasing.
    pub(crate) fn from_decreasing(mut parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// Nonzero parts.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Part `i` (0-indexed), reading zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Parts padded with zeros to length `n` (never truncates).
    pub fn padded(&self, n: usize) -> Vec<usize> {
        let mut v = self.parts.clone();
        if v.len() < n {
            v.resize(n, 0);
        }
        v
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (0..other.len()).all(|i| self.parts[i] >= other.parts[i])
    }

    /// The partition of column lengths.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (0..width)
            .map(|c| self.parts.iter().take_while(|&&p| p > c).count())
            .collect();
        Partition::from_decreasing(parts)
    }

    /// Adds `columns` full columns of height `n`.
    pub fn add_columns(&self, n: usize, columns: usize) -> Partition {
        let parts = self.padded(n).into_iter().map(|p| p + columns).collect();
        Partition::from_decreasing(parts)
    }

    /// All partitions of `size` with at most `max_len` parts, in
    /// reverse-lexicographic order.
    pub fn all_of_size(size: usize, max_len: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fill(size, size, max_len, &mut cur, &mut out);
        out
    }

    /// All partitions with at most `max_len` parts and at most `max_size` boxes.
    pub fn all_up_to(max_size: usize, max_len: usize) -> Vec<Partition> {
        (0..=max_size)
            .flat_map(|s| Partition::all_of_size(s, max_len))
            .collect()
    }
}

fn fill(rest: usize, cap: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition { parts: cur.clone() });
        return;
    }
    if slots == 0 {
        return;
    }
    for p in (1..=cap.min(rest)).rev() {
        cur.push(p);
        fill(rest - p, p, slots - 1, cur, out);
        cur.pop();
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for p in &self.parts {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// Parses `"3,2,1"`; both `""` and `"0"` denote the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidInput(format!("bad partition entry {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// The pair `(n, k)`: at most `n` rows, level `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FusionContext {
    n: usize,
    k: usize,
}

impl FusionContext {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if n < 2 || k < 1 {
            return Err(Error::InvalidInput(format!(
                "fusion context needs n >= 2 and k >= 1, got n={n}, k={k}"
            )));
        }
        Ok(FusionContext { n, k })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// The swapped context `(k, n)` used by rank-level duality. When `k = 1`
    /// this is the degenerate one-row context, which is only meaningful as a
    /// duality target.
    pub fn dual(&self) -> FusionContext {
        FusionContext {
            n: self.k,
            k: self.n,
        }
    }

    /// Same rank, level `k`.
    pub fn with_level(&self, k: usize) -> FusionContext {
        FusionContext {
            n: self.n,
            k: k.max(1),
        }
    }

    /// `p_1 - p_n`, or `None` when `p` has more than `n` rows.
    pub fn spread(&self, p: &Partition) -> Option<usize> {
        (p.len() <= self.n).then(|| p.part(0) - p.part(self.n - 1))
    }

    /// At most `n` rows and `p_1 - p_n <= k`. Rectangles (spread 0) are
    /// accepted.
    pub fn is_restricted(&self, p: &Partition) -> bool {
        self.spread(p).is_some_and(|d| d <= self.k)
    }

    pub fn is_edge(&self, p: &Partition) -> bool {
        self.spread(p) == Some(self.k)
    }

    pub fn is_border(&self, p: &Partition) -> bool {
        self.spread(p) == Some(self.k + 1)
    }

    /// `(p_1 - p_n, ..., p_{n-1} - p_n)`.
    pub fn quotient(&self, p: &Partition) -> Result<Partition> {
        if p.len() > self.n {
            return Err(Error::InvalidInput(format!(
                "{p:?} has more than n={} rows",
                self.n
            )));
        }
        let last = p.part(self.n - 1);
        let parts = (0..self.n - 1).map(|i| p.part(i) - last).collect();
        Ok(Partition::from_decreasing(parts))
    }

    /// The bijection onto `(k, n)`-restricted partitions: cut the diagram
    /// into vertical slabs of width `k`, conjugate every slab, and add the
    /// conjugated slabs part-wise.
    pub fn rank_level_dual(&self, p: &Partition) -> Result<Partition> {
        if !self.is_restricted(p) {
            return Err(Error::InvalidInput(format!(
                "{p:?} is not ({},{})-restricted",
                self.n, self.k
            )));
        }
        Ok(slab_transpose(p, self.k))
    }
}

/// Cuts `p` into vertical slabs of width `k`, conjugates every slab and adds
/// the conjugated slabs part-wise. No restriction check.
pub fn slab_transpose(p: &Partition, k: usize) -> Partition {
    assert!(k > 0, "slab width must be positive");
    let mut acc = vec![0usize; k];
    for s in 0..p.part(0).div_ceil(k) {
        let offset = s * k;
        let slab = Partition::from_decreasing(
            p.parts()
                .iter()
                .map(|&x| x.saturating_sub(offset).min(k))
                .collect(),
        );
        for (i, c) in slab.conjugate().parts().iter().enumerate() {
            acc[i] += c;
        }
    }
    Partition::from_decreasing(acc)
}

/// A permutation of `{0, .., m-1}` in one-line notation: `images[i] = σ(i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(m: usize) -> Self {
        Permutation {
            images: (0..m).collect(),
        }
    }

    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidInput(format!(
                    "{images:?} is not a permutation"
                )));
            }
        }
        Ok(Permutation { images })
    }

    /// Every permutation of `m` letters, lexicographic.
    pub fn all(m: usize) -> impl Iterator<Item = Permutation> {
        use itertools::Itertools;
        (0..m).permutations(m).map(|images| Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &s)| i == s)
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &s) in self.images.iter().enumerate() {
            inv[s] = i;
        }
        Permutation { images: inv }
    }

    /// `+1` or `-1`.
    pub fn sign(&self) -> i64 {
        let inversions = (0..self.images.len())
            .flat_map(|i| (i + 1..self.images.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| self.images[i] > self.images[j])
            .count();
        if inversions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// `(r, r+1) ∘ σ`, with `r` 0-indexed.
    pub fn left_swap(&self, r: usize) -> Permutation {
        let images = self
            .images
            .iter()
            .map(|&s| match s {
                s if s == r => r + 1,
                s if s == r + 1 => r,
                s => s,
            })
            .collect();
        Permutation { images }
    }
}

/// `σ.μ' = σ(ρ + μ') - ρ` with `ρ = (m-1, .., 1, 0)`: entry `i` is
/// `(ρ + μ')_{σ^{-1}(i)} - ρ_i`. Entries may be negative.
pub fn sigma_dot(sigma: &Permutation, mu_conj: &[i64]) -> Result<Vec<i64>> {
    let m = sigma.degree();
    if mu_conj.len() != m {
        return Err(Error::InvalidInput(format!(
            "composition {mu_conj:?} has length {} but the permutation has degree {m}",
            mu_conj.len()
        )));
    }
    let rho = |i: usize| (m - 1 - i) as i64;
    let inv = sigma.inverse();
    Ok((0..m)
        .map(|i| {
            let j = inv.images[i];
            rho(j) + mu_conj[j] - rho(i)
        })
        .collect())
}

/// `μ'` padded with zeros to length `m`, as a signed composition.
pub fn conjugate_composition(mu: &Partition, m: usize) -> Vec<i64> {
    let conj = mu.conjugate();
    (0..m.max(conj.len()))
        .map(|i| conj.part(i) as i64)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn ctx(n: usize, k: usize) -> FusionContext {
        FusionContext::new(n, k).unwrap()
    }

    #[test]
    fn restriction_examples() {
        assert!(ctx(3, 2).is_restricted(&p("2,1,0")));
        assert!(!ctx(3, 2).is_restricted(&p("3,1,0")));
        assert!(!ctx(3, 1).is_restricted(&p("2,1")));
        assert!(ctx(3, 2).is_restricted(&p("2,2,2")));
        assert!(!ctx(2, 5).is_restricted(&p("1,1,1")));
    }

    #[test]
    fn edge_and_border() {
        assert!(ctx(3, 2).is_edge(&p("3,2,1")));
        assert!(ctx(3, 2).is_border(&p("3,1,0")));
        assert!(!ctx(3, 2).is_edge(&p("2,2,2")));
    }

    #[test]
    fn conjugates() {
        assert_eq!(p("2,1").conjugate(), p("2,1"));
        assert_eq!(p("3,1").conjugate(), p("2,1,1"));
        assert_eq!(p("5,4,3,2,1").conjugate(), p("5,4,3,2,1"));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn conjugation_is_involutive_up_to_twelve() {
        for q in Partition::all_up_to(12, 12) {
            assert_eq!(q.conjugate().conjugate(), q);
        }
    }

    #[test]
    fn quotients() {
        assert_eq!(ctx(3, 2).quotient(&p("3,2,1")).unwrap(), p("2,1"));
        assert_eq!(ctx(3, 2).quotient(&p("2,2,2")).unwrap(), p("0,0"));
        assert_eq!(ctx(4, 4).quotient(&p("4,2,1,0")).unwrap(), p("4,2,1"));
        assert!(matches!(
            ctx(2, 2).quotient(&p("1,1,1")),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn quotient_ignores_full_columns() {
        let c = ctx(3, 3);
        for q in Partition::all_up_to(8, 3) {
            let bar = c.quotient(&q).unwrap();
            assert_eq!(c.quotient(&q.add_columns(3, 1)).unwrap(), bar);
            assert_eq!(c.quotient(&bar).unwrap(), bar);
        }
    }

    #[test]
    fn duals() {
        assert_eq!(ctx(3, 2).rank_level_dual(&p("2,2,0")).unwrap(), p("2,2"));
        // (3,1,0) is not (3,2)-restricted, so only the raw slab map applies
        assert_eq!(slab_transpose(&p("3,1,0"), 2), p("3,1"));
        assert!(ctx(3, 2).rank_level_dual(&p("3,1,0")).is_err());
        assert_eq!(ctx(3, 2).rank_level_dual(&p("3,1,1")).unwrap(), p("4,1"));
        assert_eq!(ctx(2, 1).rank_level_dual(&p("1,0")).unwrap(), p("1"));
        assert!(ctx(3, 2).rank_level_dual(&p("4,1")).is_err());
    }

    #[test]
    fn duality_round_trips() {
        for n in 2..=4 {
            for k in 1..=4 {
                let c = ctx(n, k);
                for q in Partition::all_up_to(n * k, n) {
                    if !c.is_restricted(&q) {
                        continue;
                    }
                    let d = c.rank_level_dual(&q).unwrap();
                    assert!(c.dual().is_restricted(&d), "{q:?} -> {d:?}");
                    assert_eq!(d.size(), q.size());
                    assert_eq!(c.dual().rank_level_dual(&d).unwrap(), q, "n={n} k={k}");
                }
            }
        }
    }

    #[test]
    fn sigma_dot_examples() {
        let id = Permutation::identity(2);
        let swap = Permutation::new(vec![1, 0]).unwrap();
        assert_eq!(sigma_dot(&id, &[2, 1]).unwrap(), vec![2, 1]);
        assert_eq!(sigma_dot(&swap, &[2, 1]).unwrap(), vec![0, 3]);
        assert_eq!(sigma_dot(&swap, &[1, 1]).unwrap(), vec![0, 2]);
        assert!(sigma_dot(&id, &[1]).is_err());
    }

    #[test]
    fn sigma_dot_preserves_weight() {
        let mu = p("3,2,2,1");
        let conj = conjugate_composition(&mu, 3);
        for s in Permutation::all(3) {
            let c = sigma_dot(&s, &conj).unwrap();
            assert_eq!(c.iter().sum::<i64>(), mu.size() as i64);
            assert_eq!(sigma_dot(&s.left_swap(1), &conj).unwrap()[1], c[2] - 1);
        }
    }

    #[test]
    fn signs() {
        assert_eq!(Permutation::identity(4).sign(), 1);
        assert_eq!(Permutation::identity(4).left_swap(2).sign(), -1);
        assert_eq!(Permutation::all(4).map(|s| s.sign()).sum::<i64>(), 0);
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p(""), Partition::empty());
        assert_eq!(p("0"), Partition::empty());
        assert_eq!(p("3, 2,1,0").to_string(), "3,2,1");
        assert!("1,2".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
    }
}
