//! Finite complexes of `K`-vector spaces with exact rational differentials.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graded::GradedDims;
use crate::rational::Rational;

/// Sparse matrix stored as `(row, col, value)` triples with nonzero values.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct SparseMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<(usize, usize, Rational)>,
}

impl SparseMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, entries: Vec::new() }
    }

    pub fn push(&mut self, row: usize, col: usize, v: Rational) {
        debug_assert!(row < self.rows && col < self.cols);
        if !v.is_zero() {
            self.entries.push((row, col, v));
        }
    }

    /// Sums duplicate positions and drops zeros.
    pub fn normalized(&self) -> SparseMatrix {
        let mut acc: BTreeMap<(usize, usize), Rational> = BTreeMap::new();
        for &(r, c, v) in &self.entries {
            *acc.entry((r, c)).or_insert_with(Rational::zero) += v;
        }
        SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: acc.into_iter().filter(|(_, v)| !v.is_zero()).map(|((r, c), v)| (r, c, v)).collect(),
        }
    }

    /// `self · rhs`.
    pub fn mul(&self, rhs: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut by_row: HashMap<usize, Vec<(usize, Rational)>> = HashMap::new();
        for &(r, c, v) in &rhs.entries {
            by_row.entry(r).or_default().push((c, v));
        }
        let mut out = SparseMatrix::new(self.rows, rhs.cols);
        for &(r, k, a) in &self.entries {
            if let Some(row) = by_row.get(&k) {
                for &(c, b) in row {
                    out.entries.push((r, c, a * b));
                }
            }
        }
        out.normalized()
    }

    pub fn is_zero(&self) -> bool {
        self.normalized().entries.is_empty()
    }

    /// Exact rank: connected components of the bipartite support graph, then
    /// fraction-free elimination on each component.
    pub fn rank(&self) -> usize {
        let m = self.normalized();
        if m.entries.is_empty() {
            return 0;
        }
        let mut uf = UnionFind::new(m.rows + m.cols);
        for &(r, c, _) in &m.entries {
            uf.union(r, m.rows + c);
        }
        let mut comps: HashMap<usize, Vec<(usize, usize, Rational)>> = HashMap::new();
        for &e in &m.entries {
            comps.entry(uf.find(e.0)).or_default().push(e);
        }
        comps.values().map(|es| dense_rank(es)).sum()
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut a: usize) -> usize {
        while self.parent[a] != a {
            self.parent[a] = self.parent[self.parent[a]];
            a = self.parent[a];
        }
        a
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

/// Rank of the dense matrix spanned by `entries`, rows scaled to integers, by Bareiss
/// elimination.
fn dense_rank(entries: &[(usize, usize, Rational)]) -> usize {
    let mut rows: Vec<usize> = entries.iter().map(|e| e.0).collect();
    let mut cols: Vec<usize> = entries.iter().map(|e| e.1).collect();
    rows.sort_unstable();
    rows.dedup();
    cols.sort_unstable();
    cols.dedup();
    if rows.len() == 1 || cols.len() == 1 {
        return 1;
    }
    let ri: HashMap<usize, usize> = rows.iter().enumerate().map(|(i, &r)| (r, i)).collect();
    let ci: HashMap<usize, usize> = cols.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let mut dens = vec![1i64; rows.len()];
    for &(r, _, v) in entries {
        let d = &mut dens[ri[&r]];
        *d = num_integer::lcm(*d, *v.denom());
    }
    let mut a = vec![vec![BigInt::zero(); cols.len()]; rows.len()];
    for &(r, c, v) in entries {
        let i = ri[&r];
        a[i][ci[&c]] = BigInt::from(*v.numer()) * BigInt::from(dens[i] / *v.denom());
    }
    bareiss_rank(a)
}

fn bareiss_rank(mut a: Vec<Vec<BigInt>>) -> usize {
    let (m, n) = (a.len(), a[0].len());
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..n {
        if rank == m {
            break;
        }
        let Some(p) = (rank..m).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for r in rank + 1..m {
            for c in col + 1..n {
                let v = (&a[r][c] * &a[rank][col] - &a[r][col] * &a[rank][c]) / &prev;
                a[r][c] = v;
            }
            a[r][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    rank
}

/// `C^k` has dimension `dims[k]`; `diffs[k]: C^k -> C^{k+1}` (rows index `C^{k+1}`).
#[derive(Debug, Clone, PartialEq, Default)]
pub struct FiniteComplex {
    dims: BTreeMap<i64, usize>,
    diffs: BTreeMap<i64, SparseMatrix>,
}

impl FiniteComplex {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn new(dims: BTreeMap<i64, usize>, diffs: BTreeMap<i64, SparseMatrix>) -> Result<Self> {
        let dims: BTreeMap<i64, usize> = dims.into_iter().filter(|(_, d)| *d > 0).collect();
        for (&k, m) in &diffs {
            let (src, tgt) = (dims.get(&k).copied().unwrap_or(0), dims.get(&(k + 1)).copied().unwrap_or(0));
            if m.cols != src || m.rows != tgt {
                return Err(Error::Integrity(format!(
                    "d_{k} is {}x{}, expected {tgt}x{src}",
                    m.rows, m.cols
                )));
            }
        }
        Ok(FiniteComplex { dims, diffs })
    }

    pub fn dim(&self, k: i64) -> usize {
        self.dims.get(&k).copied().unwrap_or(0)
    }

    pub fn dims(&self) -> &BTreeMap<i64, usize> {
        &self.dims
    }

    pub fn total_dim(&self) -> usize {
        self.dims.values().sum()
    }

    pub fn differential(&self, k: i64) -> Option<&SparseMatrix> {
        self.diffs.get(&k)
    }

    /// Verifies `d_{k+1} ∘ d_k = 0` for every `k`.
    pub fn check_square_zero(&self) -> Result<()> {
        for (&k, d) in &self.diffs {
            if let Some(next) = self.diffs.get(&(k + 1)) {
                if !next.mul(d).is_zero() {
                    return Err(Error::Integrity(format!("d_{} ∘ d_{k} ≠ 0", k + 1)));
                }
            }
        }
        Ok(())
    }
}

/// Incremental construction of a [`FiniteComplex`] from keyed basis vectors.
pub(crate) struct ComplexBuilder<K> {
    index: HashMap<K, (i64, usize)>,
    dims: BTreeMap<i64, usize>,
    entries: Vec<(K, K, Rational)>,
}

impl<K: std::hash::Hash + Eq + Clone + std::fmt::Debug> ComplexBuilder<K> {
    pub(crate) fn new() -> Self {
        ComplexBuilder { index: HashMap::new(), dims: BTreeMap::new(), entries: Vec::new() }
    }

    pub(crate) fn basis(&mut self, key: K, degree: i64) {
        let slot = self.dims.entry(degree).or_insert(0);
        let prev = self.index.insert(key, (degree, *slot));
        debug_assert!(prev.is_none(), "duplicate basis key");
        *slot += 1;
    }

    pub(crate) fn contains(&self, key: &K) -> bool {
        self.index.contains_key(key)
    }

    pub(crate) fn entry(&mut self, source: K, target: K, coeff: Rational) {
        self.entries.push((source, target, coeff));
    }

    pub(crate) fn finish(self) -> Result<FiniteComplex> {
        let mut diffs: BTreeMap<i64, SparseMatrix> = BTreeMap::new();
        for (s, t, c) in self.entries {
            let (Some(&(ds, cs)), Some(&(dt, rt))) = (self.index.get(&s), self.index.get(&t)) else {
                continue;
            };
            if dt != ds + 1 {
                return Err(Error::Integrity(format!("entry {s:?} -> {t:?} is not of degree +1")));
            }
            let src = self.dims[&ds];
            let tgt = self.dims[&dt];
            diffs.entry(ds).or_insert_with(|| SparseMatrix::new(tgt, src)).push(rt, cs, c);
        }
        FiniteComplex::new(self.dims, diffs)
    }
}

/// `dim H^k = dim C^k - rank d_k - rank d_{k-1}`.
pub fn cohomology_dims(c: &FiniteComplex) -> Result<GradedDims> {
    c.check_square_zero()?;
    let ranks: BTreeMap<i64, usize> = c.diffs.iter().map(|(&k, m)| (k, m.rank())).collect();
    let mut out = GradedDims::new();
    for (&k, &dim) in &c.dims {
        let r_out = ranks.get(&k).copied().unwrap_or(0);
        let r_in = ranks.get(&(k - 1)).copied().unwrap_or(0);
        let h = dim
            .checked_sub(r_out + r_in)
            .ok_or_else(|| Error::Internal(format!("negative cohomology in degree {k}")))?;
        out.add_at(k, h as u64);
    }
    Ok(out)
}
