//! Schubert cells of partial flag varieties `FL(I)` and the free decomposition of their
//! cohomology.
//!
//! A flag type `I = {i_1 < ... < i_r} ⊆ {1..N-1}` has `r+1` blocks of sizes
//! `i_t - i_{t-1}` (with `i_0 = 0`, `i_{r+1} = N`). Schubert cells are indexed by ordered
//! set partitions of `{1..N}` with these block sizes; the cell of `A` has complex
//! dimension `inversions(A)`.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graded::GradedDims;
use crate::root_system::check_rank;
use crate::subset::Subset;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FlagType {
    n: usize,
    indices: Subset,
}

impl FlagType {
    pub fn new(n: usize, indices: Subset) -> Result<Self> {
        check_rank(n)?;
        if let Some(k) = indices.max_index().filter(|&k| k >= n) {
            return Err(Error::IndexOutOfRange { index: k, max: n - 1 });
        }
        Ok(FlagType { n, indices })
    }

    /// Every flag type for rank `n`, in increasing bitmask order.
    pub fn all(n: usize) -> Result<Vec<FlagType>> {
        check_rank(n)?;
        Ok(Subset::all(n - 1).map(|s| FlagType { n, indices: s }).collect())
    }

    pub fn n(self) -> usize {
        self.n
    }

    pub fn indices(self) -> Subset {
        self.indices
    }

    pub fn block_count(self) -> usize {
        self.indices.len() + 1
    }

    /// `0 = i_0 < i_1 < ... < i_r < i_{r+1} = N`.
    pub fn boundaries(self) -> Vec<usize> {
        let mut b = vec![0];
        b.extend(self.indices.iter());
        b.push(self.n);
        b
    }

    pub fn block_sizes(self) -> Vec<usize> {
        self.boundaries().windows(2).map(|w| w[1] - w[0]).collect()
    }

    /// `N! / ∏ (block size)!`.
    pub fn cell_count(self) -> u64 {
        let fact = |m: usize| (1..=m as u64).product::<u64>();
        fact(self.n) / self.block_sizes().into_iter().map(fact).product::<u64>()
    }

    /// The partition with blocks `{1..i_1}, {i_1+1..i_2}, ...`.
    pub fn identity_partition(self) -> FlagPartition {
        let blocks = self.boundaries().windows(2).map(|w| (w[0] + 1..=w[1]).collect()).collect();
        FlagPartition { blocks }
    }
}

impl fmt::Display for FlagType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FL({{{}}}; {})", self.indices, self.n)
    }
}

/// Ordered partition `A_1 ⊔ ... ⊔ A_{r+1}` of `{1..N}`; each block is kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FlagPartition {
    blocks: Vec<Vec<usize>>,
}

impl FlagPartition {
    pub fn new(mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        let n: usize = blocks.iter().map(Vec::len).sum();
        if blocks.iter().any(Vec::is_empty) {
            return Err(Error::InvalidInput("flag partition has an empty block".into()));
        }
        let mut seen = vec![false; n + 1];
        for &a in blocks.iter().flatten() {
            if a == 0 || a > n || std::mem::replace(&mut seen[a], true) {
                return Err(Error::InvalidInput(format!("blocks do not partition 1..={n}")));
            }
        }
        for b in &mut blocks {
            b.sort_unstable();
        }
        Ok(FlagPartition { blocks })
    }

    /// Block `w[a-1]` receives element `a`; `w` takes values `0..blocks`.
    fn from_word(word: &[usize], blocks: usize) -> Self {
        let mut out = vec![Vec::new(); blocks];
        for (a, &b) in word.iter().enumerate() {
            out[b].push(a + 1);
        }
        FlagPartition { blocks: out }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn n(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    /// The flag type whose block sizes are those of `self`.
    pub fn flag_type(&self) -> Result<FlagType> {
        let mut acc = 0;
        let mut s = Subset::EMPTY;
        for b in &self.blocks[..self.blocks.len() - 1] {
            acc += b.len();
            s = s.with(acc);
        }
        FlagType::new(self.n(), s)
    }

    fn word(&self) -> Vec<usize> {
        let mut w = vec![0; self.n()];
        for (t, b) in self.blocks.iter().enumerate() {
            for &a in b {
                w[a - 1] = t;
            }
        }
        w
    }
}

impl fmt::Display for FlagPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                let s: Vec<String> = b.iter().map(|a| a.to_string()).collect();
                format!("{{{}}}", s.join(","))
            })
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// `#{a < b : block(a) > block(b)}`.
pub fn inversions(a: &FlagPartition) -> usize {
    let w = a.word();
    (0..w.len()).map(|i| w[i + 1..].iter().filter(|&&b| b < w[i]).count()).sum()
}

/// `V(I)`: all partitions of flag type `I`, in lexicographic order of block words.
pub fn partitions(ty: FlagType) -> Vec<FlagPartition> {
    let sizes = ty.block_sizes();
    let mut word: Vec<usize> =
        sizes.iter().enumerate().flat_map(|(t, &s)| std::iter::repeat(t).take(s)).collect();
    let mut out = vec![FlagPartition::from_word(&word, sizes.len())];
    while next_permutation(&mut word) {
        out.push(FlagPartition::from_word(&word, sizes.len()));
    }
    out
}

fn next_permutation(w: &mut [usize]) -> bool {
    let Some(i) = (1..w.len()).rev().find(|&i| w[i - 1] < w[i]) else {
        return false;
    };
    let j = (i..w.len()).rev().find(|&j| w[j] > w[i - 1]).expect("pivot has a successor");
    w.swap(i - 1, j);
    w[i..].reverse();
    true
}

/// Graded dimensions of `H^*(FL(I))`: degree `2·inversions` per cell.
pub fn betti(ty: FlagType) -> GradedDims {
    let mut g = GradedDims::new();
    for a in partitions(ty) {
        g.add_at(2 * inversions(&a) as i64, 1);
    }
    g
}

/// No adjacent blocks with `max(A_j) < min(A_{j+1})`.
pub fn elementary(a: &FlagPartition) -> bool {
    !a.blocks.windows(2).any(|w| fully_ascending(&w[0], &w[1]))
}

fn fully_ascending(a: &[usize], b: &[usize]) -> bool {
    a.last() < b.first()
}

/// Graded span of the elementary partitions of `V(I)`.
pub fn g_space(ty: FlagType) -> GradedDims {
    let mut g = GradedDims::new();
    for a in partitions(ty).iter().filter(|a| elementary(a)) {
        g.add_at(2 * inversions(a) as i64, 1);
    }
    g
}

/// The pullback of the cell class along `FL(I) -> FL(J)` for `J ⊆ I`: each `J`-block is
/// sorted and cut into consecutive runs of the `I`-block sizes it contains.
pub fn refine(j: FlagType, i: FlagType, a: &FlagPartition) -> Result<FlagPartition> {
    if j.n != i.n || !j.indices.is_subset_of(i.indices) {
        return Err(Error::InvalidInput(format!("{j} is not coarser than {i}")));
    }
    let sizes = a.blocks.iter().map(Vec::len).collect::<Vec<_>>();
    if a.n() != j.n || sizes != j.block_sizes() {
        return Err(Error::InvalidInput(format!("partition {a} is not of type {j}")));
    }
    let ib = i.boundaries();
    let jb = j.boundaries();
    let mut blocks = Vec::with_capacity(i.block_count());
    for (t, block) in a.blocks.iter().enumerate() {
        let (start, end) = (jb[t], jb[t + 1]);
        let cuts: Vec<usize> = ib.iter().copied().filter(|&c| start <= c && c <= end).collect();
        for w in cuts.windows(2) {
            blocks.push(block[w[0] - start..w[1] - start].to_vec());
        }
    }
    Ok(FlagPartition { blocks })
}

/// Inverse of the free decomposition: merges maximal runs of fully ascending adjacent
/// blocks, giving the unique `(J, A')` with `A'` elementary and `refine(A') = A`.
pub fn coarsen(a: &FlagPartition) -> Result<(FlagType, FlagPartition)> {
    let mut merged: Vec<Vec<usize>> = Vec::new();
    for b in &a.blocks {
        match merged.last_mut() {
            Some(last) if fully_ascending(last, b) => last.extend_from_slice(b),
            _ => merged.push(b.clone()),
        }
    }
    let coarse = FlagPartition { blocks: merged };
    Ok((coarse.flag_type()?, coarse))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FreeDecompositionReport {
    pub n: usize,
    pub flag: Subset,
    pub cohomology: GradedDims,
    /// `J ↦ G(J)` for every `J ⊆ I`.
    pub pieces: BTreeMap<String, GradedDims>,
    pub image_count: u64,
    pub cell_count: u64,
    pub passed: bool,
    pub first_mismatch: Option<String>,
}

/// Checks that `⊕_{J⊆I} G(J) -> H(I)`, `A ↦ refine(J→I, A)`, is a degree-preserving
/// bijection on cell bases.
pub fn verify_free_decomposition(ty: FlagType) -> FreeDecompositionReport {
    let cells = partitions(ty);
    let cohomology = betti(ty);
    let mut pieces = BTreeMap::new();
    let mut images = HashSet::new();
    let mut graded = GradedDims::new();
    let mut mismatch = None;
    for sub in ty.indices.subsets() {
        let j = FlagType { n: ty.n, indices: sub };
        pieces.insert(sub.to_string(), g_space(j));
        for a in partitions(j).into_iter().filter(elementary) {
            let img = refine(j, ty, &a).expect("J ⊆ I by construction");
            let (d_src, d_img) = (inversions(&a), inversions(&img));
            if mismatch.is_none() && d_src != d_img {
                mismatch = Some(format!("refine {a} -> {img} changes inversions {d_src} -> {d_img}"));
            }
            graded.add_at(2 * d_img as i64, 1);
            if !images.insert(img.clone()) && mismatch.is_none() {
                mismatch = Some(format!("image {img} hit twice"));
            }
        }
    }
    if mismatch.is_none() && graded != cohomology {
        mismatch = Some(format!("graded images {graded} differ from H = {cohomology}"));
    }
    if mismatch.is_none() && images.len() != cells.len() {
        mismatch = Some(format!("{} images for {} cells", images.len(), cells.len()));
    }
    FreeDecompositionReport {
        n: ty.n,
        flag: ty.indices,
        cohomology,
        pieces,
        image_count: images.len() as u64,
        cell_count: cells.len() as u64,
        passed: mismatch.is_none(),
        first_mismatch: mismatch,
    }
}
