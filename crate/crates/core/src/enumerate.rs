//! Exhaustive enumeration of F_p-spaces with incremental weight tracking.
//!
//! Codewords are visited in a p-ary Gray order: step t adds basis row v_p(t)
//! to the current word, so each step costs the support size of one row. The
//! coefficient space is split on its top digits into independent chunks which
//! run on the rayon pool when the `parallel` feature is enabled.

use crate::error::{Error, Result};

/// Largest number of codewords an exhaustive scan will visit.
pub const MAX_WORDS: u64 = 1 << 24;
const TARGET_CHUNKS: u64 = 256;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

/// An F_p-space given by basis rows in expanded digit coordinates.
///
/// The first `marked` rows span a complement of a distinguished subspace
/// (spanned by the remaining rows); words with zero coefficients on every
/// marked row are counted as `inner`, all others as `outer`.
pub struct Space<'a> {
    pub p: u32,
    pub rows: &'a [Vec<u32>],
    pub marked: usize,
    /// Weight group of each coordinate; the weight of a word is the number of
    /// groups holding a nonzero digit.
    pub groups: &'a [u32],
    pub ngroups: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ScanResult {
    pub inner: Vec<u64>,
    pub outer: Vec<u64>,
}

impl ScanResult {
    fn empty(len: usize) -> Self {
        ScanResult {
            inner: vec![0; len],
            outer: vec![0; len],
        }
    }

    fn merge(mut self, other: ScanResult) -> ScanResult {
        for (a, b) in self.inner.iter_mut().zip(other.inner) {
            *a += b;
        }
        for (a, b) in self.outer.iter_mut().zip(other.outer) {
            *a += b;
        }
        self
    }

    /// Smallest weight among words outside the subspace.
    pub fn min_outer(&self) -> Option<usize> {
        self.outer.iter().position(|&c| c > 0)
    }

    /// Smallest weight among nonzero words of the subspace.
    pub fn min_inner_nonzero(&self) -> Option<usize> {
        self.inner.iter().skip(1).position(|&c| c > 0).map(|w| w + 1)
    }

    /// Histogram over the whole space.
    pub fn total(&self) -> Vec<u64> {
        self.inner.iter().zip(&self.outer).map(|(a, b)| a + b).collect()
    }
}

/// Number of words, or `CodeTooLarge` when beyond the guard.
pub fn word_count(p: u32, dim: usize) -> Result<u64> {
    match (p as u64).checked_pow(dim as u32) {
        Some(c) if c <= MAX_WORDS => Ok(c),
        _ => Err(Error::CodeTooLarge {
            bits: ((dim as f64) * (p as f64).log2()).ceil() as u32,
        }),
    }
}

struct Walker<'a> {
    p: u32,
    supports: &'a [Vec<(usize, u32)>],
    groups: &'a [u32],
    marked: usize,
    word: Vec<u32>,
    counts: Vec<u32>,
    weight: usize,
    coeffs: Vec<u32>,
    marked_nonzero: usize,
}

impl<'a> Walker<'a> {
    fn new(space: &Space<'_>, supports: &'a [Vec<(usize, u32)>], groups: &'a [u32]) -> Self {
        let len = space.rows.first().map_or(space.groups.len(), Vec::len);
        Walker {
            p: space.p,
            supports,
            groups,
            marked: space.marked,
            word: vec![0; len],
            counts: vec![0; space.ngroups],
            weight: 0,
            coeffs: vec![0; space.rows.len()],
            marked_nonzero: 0,
        }
    }

    #[inline]
    fn add_row(&mut self, i: usize, times: u32) {
        let p = self.p;
        for &(c, v) in &self.supports[i] {
            let old = self.word[c];
            let mut new = old + (v * times) % p;
            if new >= p {
                new -= p;
            }
            self.word[c] = new;
            let g = self.groups[c] as usize;
            if old == 0 && new != 0 {
                if self.counts[g] == 0 {
                    self.weight += 1;
                }
                self.counts[g] += 1;
            } else if old != 0 && new == 0 {
                self.counts[g] -= 1;
                if self.counts[g] == 0 {
                    self.weight -= 1;
                }
            }
        }
        let old = self.coeffs[i];
        let new = (old + times) % p;
        self.coeffs[i] = new;
        if i < self.marked {
            if old == 0 && new != 0 {
                self.marked_nonzero += 1;
            } else if old != 0 && new == 0 {
                self.marked_nonzero -= 1;
            }
        }
    }

    #[inline]
    fn is_inner(&self) -> bool {
        self.marked_nonzero == 0
    }

    /// Visits every word of the chunk whose top digits are given by `chunk`.
    fn walk<F: FnMut(&Walker<'a>)>(&mut self, low: usize, chunk: u64, mut visit: F) {
        let p = self.p as u64;
        let mut rest = chunk;
        for i in low..self.supports.len() {
            let d = (rest % p) as u32;
            rest /= p;
            if d != 0 {
                self.add_row(i, d);
            }
        }
        visit(self);
        let steps = p.pow(low as u32);
        for t in 1..steps {
            let mut i = 0;
            let mut s = t;
            while s % p == 0 {
                s /= p;
                i += 1;
            }
            self.add_row(i, 1);
            visit(self);
        }
    }
}

fn sparse(rows: &[Vec<u32>]) -> Vec<Vec<(usize, u32)>> {
    rows.iter()
        .map(|r| {
            r.iter()
                .enumerate()
                .filter(|(_, &v)| v != 0)
                .map(|(c, &v)| (c, v))
                .collect()
        })
        .collect()
}

fn split(p: u32, dim: usize) -> (usize, u64) {
    let mut top = 0;
    let mut chunks = 1u64;
    while top < dim && chunks < TARGET_CHUNKS {
        top += 1;
        chunks *= p as u64;
    }
    (dim - top, chunks)
}

fn run_chunks<T, F, R>(chunks: u64, exec: Execution, identity: T, work: F, reduce: R) -> T
where
    T: Send + Sync + Clone,
    F: Fn(u64) -> T + Sync + Send,
    R: Fn(T, T) -> T + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            (0..chunks)
                .into_par_iter()
                .map(&work)
                .reduce(|| identity.clone(), &reduce)
        }
        _ => (0..chunks).map(work).fold(identity, reduce),
    }
}

/// Weight histograms of the inner subspace and of its complement.
pub fn scan(space: &Space<'_>, exec: Execution) -> Result<ScanResult> {
    let dim = space.rows.len();
    word_count(space.p, dim)?;
    let supports = sparse(space.rows);
    let (low, chunks) = split(space.p, dim);
    let len = space.ngroups + 1;
    let work = |chunk: u64| {
        let mut res = ScanResult::empty(len);
        let mut w = Walker::new(space, &supports, space.groups);
        w.walk(low, chunk, |w| {
            if w.is_inner() {
                res.inner[w.weight] += 1;
            } else {
                res.outer[w.weight] += 1;
            }
        });
        res
    };
    Ok(run_chunks(chunks, exec, ScanResult::empty(len), work, ScanResult::merge))
}

/// The word of the given weight that is smallest under `key`, over the whole space.
pub fn find_weight<K, F>(space: &Space<'_>, weight: usize, key: F, exec: Execution) -> Result<Option<Vec<u32>>>
where
    K: Ord + Send + Sync + Clone,
    F: Fn(&[u32]) -> K + Sync + Send,
{
    let dim = space.rows.len();
    word_count(space.p, dim)?;
    let supports = sparse(space.rows);
    let (low, chunks) = split(space.p, dim);
    let work = |chunk: u64| {
        let mut best: Option<(K, Vec<u32>)> = None;
        let mut w = Walker::new(space, &supports, space.groups);
        w.walk(low, chunk, |w| {
            if w.weight == weight {
                let k = key(&w.word);
                if best.as_ref().map_or(true, |(b, _)| k < *b) {
                    best = Some((k, w.word.clone()));
                }
            }
        });
        best
    };
    let pick = |a: Option<(K, Vec<u32>)>, b: Option<(K, Vec<u32>)>| match (a, b) {
        (Some(x), Some(y)) => Some(if y.0 < x.0 { y } else { x }),
        (x, None) => x,
        (None, y) => y,
    };
    Ok(run_chunks(chunks, exec, None, work, pick).map(|(_, w)| w))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(space: &Space<'_>) -> ScanResult {
        let dim = space.rows.len();
        let len = space.rows[0].len();
        let total = (space.p as u64).pow(dim as u32);
        let mut res = ScanResult::empty(space.ngroups + 1);
        for idx in 0..total {
            let mut c = vec![0u32; dim];
            let mut r = idx;
            for x in c.iter_mut() {
                *x = (r % space.p as u64) as u32;
                r /= space.p as u64;
            }
            let mut word = vec![0u32; len];
            for (ci, row) in c.iter().zip(space.rows) {
                for (w, &v) in word.iter_mut().zip(row) {
                    *w = (*w + ci * v) % space.p;
                }
            }
            let mut hit = vec![false; space.ngroups];
            for (i, &d) in word.iter().enumerate() {
                if d != 0 {
                    hit[space.groups[i] as usize] = true;
                }
            }
            let wt = hit.iter().filter(|&&h| h).count();
            if c[..space.marked].iter().all(|&x| x == 0) {
                res.inner[wt] += 1;
            } else {
                res.outer[wt] += 1;
            }
        }
        res
    }

    #[test]
    fn gray_walk_matches_brute_force() {
        let rows = vec![
            vec![1, 0, 2, 1, 0, 0],
            vec![0, 1, 1, 0, 2, 0],
            vec![2, 2, 0, 0, 1, 1],
            vec![0, 0, 1, 1, 1, 2],
            vec![1, 1, 1, 0, 0, 1],
        ];
        let groups = [0, 0, 1, 1, 2, 2];
        for marked in 0..=2 {
            let space = Space {
                p: 3,
                rows: &rows,
                marked,
                groups: &groups,
                ngroups: 3,
            };
            let expect = brute(&space);
            assert_eq!(scan(&space, Execution::Sequential).unwrap(), expect);
            assert_eq!(scan(&space, Execution::Parallel).unwrap(), expect);
        }
    }

    #[test]
    fn guard_trips() {
        let rows = vec![vec![1u32]; 25];
        let space = Space {
            p: 2,
            rows: &rows,
            marked: 0,
            groups: &[0],
            ngroups: 1,
        };
        assert_eq!(
            scan(&space, Execution::Sequential).unwrap_err(),
            Error::CodeTooLarge { bits: 25 }
        );
    }

    #[test]
    fn smallest_word_of_weight() {
        let rows = vec![vec![1, 1, 0, 0], vec![0, 1, 1, 0], vec![0, 0, 1, 1]];
        let groups = [0, 1, 2, 3];
        let space = Space {
            p: 2,
            rows: &rows,
            marked: 0,
            groups: &groups,
            ngroups: 4,
        };
        let w = find_weight(&space, 2, |w| w.to_vec(), Execution::Parallel).unwrap();
        assert_eq!(w, Some(vec![0, 0, 1, 1]));
        assert_eq!(find_weight(&space, 3, |w| w.to_vec(), Execution::Sequential).unwrap(), None);
    }
}
