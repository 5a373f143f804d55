//! Counting, enumerating and sampling plane partitions in a box.
//!
//! The dynamic program walks the box column by column. A state is one
//! column, a weakly decreasing vector of length `a` with entries in `0..=c`,
//! and column `j + 1` may follow column `j` iff it is pointwise smaller or
//! equal. `forward[j][s]` counts fillings of columns `1..=j` that end in `s`;
//! `backward[j][s]` counts fillings of columns `j..=b` that start with `s`.

use std::collections::HashMap;

use num_bigint::{BigInt, Sign};
use num_traits::{One, Zero};
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha20Rng;

use crate::error::{Error, Result};
use crate::numeric::Rational;
use crate::pp::{BoxDims, PlanePartition};

/// Default cap on the number of objects an enumeration may produce.
pub const DEFAULT_ENUM_LIMIT: u64 = 10_000_000;

/// One column of a plane partition, top entry first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColumnState(Vec<usize>);

impl ColumnState {
    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn dominates(&self, other: &ColumnState) -> bool {
        self.0.iter().zip(&other.0).all(|(x, y)| x >= y)
    }
}

/// All weakly decreasing `len`-vectors over `0..=max`, lexicographically.
fn column_states(len: usize, max: usize) -> Vec<ColumnState> {
    fn extend(prefix: &mut Vec<usize>, len: usize, bound: usize, out: &mut Vec<ColumnState>) {
        if prefix.len() == len {
            out.push(ColumnState(prefix.clone()));
            return;
        }
        for v in 0..=bound {
            prefix.push(v);
            extend(prefix, len, v, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::with_capacity(len), len, max, &mut out);
    out
}

/// Forward and backward column tables for one box.
#[derive(Debug, Clone)]
pub struct ColumnDp {
    dims: BoxDims,
    states: Vec<ColumnState>,
    forward: Vec<Vec<BigInt>>,
    backward: Vec<Vec<BigInt>>,
    total: BigInt,
}

impl ColumnDp {
    pub fn new(dims: BoxDims) -> Self {
        let (a, b, c) = (dims.a(), dims.b(), dims.c());
        let states = column_states(a, c);
        let index: HashMap<&ColumnState, usize> = states.iter().enumerate().map(|(k, s)| (s, k)).collect();

        // up[k][s] / down[k][s]: s with coordinate k raised / lowered by one,
        // if that is still a state
        let mut up = vec![vec![None; states.len()]; a];
        let mut down = vec![vec![None; states.len()]; a];
        for (idx, s) in states.iter().enumerate() {
            for k in 0..a {
                let mut t = s.0.clone();
                if t[k] < c {
                    t[k] += 1;
                    up[k][idx] = index.get(&ColumnState(t.clone())).copied();
                    t[k] -= 1;
                }
                if t[k] > 0 {
                    t[k] -= 1;
                    down[k][idx] = index.get(&ColumnState(t)).copied();
                }
            }
        }

        let ones = vec![BigInt::one(); states.len()];
        let mut forward = vec![ones.clone()];
        for _ in 1..b {
            let next = upper_set_sums(forward.last().expect("nonempty"), &up);
            forward.push(next);
        }
        let mut backward = vec![ones];
        for _ in 1..b {
            let next = lower_set_sums(backward.last().expect("nonempty"), &down);
            backward.push(next);
        }
        backward.reverse();

        let total = forward[b - 1].iter().sum();
        Self {
            dims,
            states,
            forward,
            backward,
            total,
        }
    }

    pub fn dims(&self) -> BoxDims {
        self.dims
    }

    pub fn states(&self) -> &[ColumnState] {
        &self.states
    }

    /// Weights for column `j` (1-indexed).
    pub fn forward(&self, j: usize) -> &[BigInt] {
        &self.forward[j - 1]
    }

    pub fn backward(&self, j: usize) -> &[BigInt] {
        &self.backward[j - 1]
    }

    /// Number of plane partitions in the box.
    pub fn total(&self) -> &BigInt {
        &self.total
    }

    /// Number of plane partitions whose column `j` equals each state.
    pub fn column_weights(&self, j: usize) -> Vec<BigInt> {
        self.forward(j)
            .iter()
            .zip(self.backward(j))
            .map(|(f, g)| f * g)
            .collect()
    }
}

/// `g(s) = sum of f(t)` over states `t >= s`.
///
/// Sweeps coordinates from last to first. After handling coordinate `k`,
/// `g(s)` sums `f(t)` over `t` agreeing with `s` before `k` and dominating
/// it from `k` on; raising coordinate `k` of `s` is only possible while it
/// stays below coordinate `k - 1`, otherwise the extra term is empty.
fn upper_set_sums(f: &[BigInt], up: &[Vec<Option<usize>>]) -> Vec<BigInt> {
    let mut g = f.to_vec();
    for raise in up.iter().rev() {
        // lexicographically larger states first
        for idx in (0..g.len()).rev() {
            if let Some(next) = raise[idx] {
                let add = g[next].clone();
                g[idx] += add;
            }
        }
    }
    g
}

/// `g(s) = sum of f(t)` over states `t <= s`; mirror of [`upper_set_sums`].
fn lower_set_sums(f: &[BigInt], down: &[Vec<Option<usize>>]) -> Vec<BigInt> {
    let mut g = f.to_vec();
    for lower in down {
        for idx in 0..g.len() {
            if let Some(prev) = lower[idx] {
                let add = g[prev].clone();
                g[idx] += add;
            }
        }
    }
    g
}

/// `N(a, b, c)`, the number of plane partitions in the box.
pub fn count_box(dims: BoxDims) -> BigInt {
    ColumnDp::new(dims).total
}

/// Size of the transfer computation: `b` columns over `C(a + c, a)` states.
/// Commands that build a [`ColumnDp`] check this against the limit.
pub fn dp_cells(dims: BoxDims) -> BigInt {
    let (a, c) = (dims.a(), dims.c());
    let mut states = BigInt::one();
    for k in 1..=a {
        states = states * (c + k) / k;
    }
    states * dims.b()
}

/// Enumeration cap: objects beyond `limit` are refused unless forced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumLimit {
    pub limit: u64,
    pub force: bool,
}

impl Default for EnumLimit {
    fn default() -> Self {
        Self {
            limit: DEFAULT_ENUM_LIMIT,
            force: false,
        }
    }
}

impl EnumLimit {
    pub fn new(limit: u64) -> Self {
        Self { limit, force: false }
    }

    pub fn forced() -> Self {
        Self {
            limit: DEFAULT_ENUM_LIMIT,
            force: true,
        }
    }

    pub fn check(&self, count: &BigInt) -> Result<()> {
        if !self.force && *count > BigInt::from(self.limit) {
            return Err(Error::TooLarge {
                count: count.to_string(),
                limit: self.limit,
            });
        }
        Ok(())
    }
}

/// All plane partitions in the box, in row-major lexicographic order.
pub fn enumerate_box(dims: BoxDims, limit: EnumLimit) -> Result<BoxEnumerator> {
    limit.check(&count_box(dims))?;
    Ok(BoxEnumerator {
        dims,
        current: Some(vec![0; dims.cells()]),
    })
}

/// Iterator behind [`enumerate_box`].
///
/// Each cell is bounded above by its left and upper neighbours only, so the
/// successor of a partition increments the last cell that has room and
/// resets every later cell to zero.
#[derive(Debug, Clone)]
pub struct BoxEnumerator {
    dims: BoxDims,
    current: Option<Vec<usize>>,
}

impl BoxEnumerator {
    fn bound(&self, cells: &[usize], idx: usize) -> usize {
        let b = self.dims.b();
        let (i, j) = (idx / b, idx % b);
        let mut bound = self.dims.c();
        if i > 0 {
            bound = bound.min(cells[idx - b]);
        }
        if j > 0 {
            bound = bound.min(cells[idx - 1]);
        }
        bound
    }
}

impl Iterator for BoxEnumerator {
    type Item = PlanePartition;

    fn next(&mut self) -> Option<PlanePartition> {
        let cells = self.current.take()?;
        let out = PlanePartition::from_entries_unchecked(self.dims, cells.clone());
        let mut next = cells;
        let mut idx = next.len();
        while idx > 0 {
            idx -= 1;
            if next[idx] < self.bound(&next, idx) {
                next[idx] += 1;
                next[idx + 1..].iter_mut().for_each(|v| *v = 0);
                self.current = Some(next);
                break;
            }
        }
        Some(out)
    }
}

/// Exact distribution of every cell of a uniformly random plane partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellMarginals {
    dims: BoxDims,
    // [(i - 1) * b + (j - 1)][k]
    probs: Vec<Vec<Rational>>,
}

impl CellMarginals {
    pub fn from_dp(dp: &ColumnDp) -> Self {
        let dims = dp.dims();
        let (a, b, c) = (dims.a(), dims.b(), dims.c());
        let mut counts = vec![vec![BigInt::zero(); c + 1]; a * b];
        for j in 1..=b {
            for (s, w) in dp.states().iter().zip(dp.column_weights(j)) {
                for (i, &v) in s.values().iter().enumerate() {
                    counts[i * b + (j - 1)][v] += &w;
                }
            }
        }
        let probs = counts
            .into_iter()
            .map(|cell| cell.into_iter().map(|n| Rational::new(n, dp.total().clone())).collect())
            .collect();
        Self { dims, probs }
    }

    /// Marginals from empirical counts over an explicit list; used to
    /// cross-check the DP against enumeration.
    pub fn from_partitions<'a>(dims: BoxDims, pps: impl IntoIterator<Item = &'a PlanePartition>) -> Self {
        let (a, b, c) = (dims.a(), dims.b(), dims.c());
        let mut counts = vec![vec![BigInt::zero(); c + 1]; a * b];
        let mut total = BigInt::zero();
        for pp in pps {
            for (idx, &v) in pp.entries().iter().enumerate() {
                counts[idx][v] += 1;
            }
            total += 1;
        }
        let probs = counts
            .into_iter()
            .map(|cell| cell.into_iter().map(|n| Rational::new(n, total.clone())).collect())
            .collect();
        Self { dims, probs }
    }

    pub fn dims(&self) -> BoxDims {
        self.dims
    }

    /// `Prob(entry(i, j) = k)`; zero for `k > c`.
    pub fn prob(&self, i: usize, j: usize, k: usize) -> Rational {
        self.probs[(i - 1) * self.dims.b() + (j - 1)]
            .get(k)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn distribution(&self, i: usize, j: usize) -> &[Rational] {
        &self.probs[(i - 1) * self.dims.b() + (j - 1)]
    }

    /// `E(i, j)`.
    pub fn expectation(&self, i: usize, j: usize) -> Rational {
        self.distribution(i, j)
            .iter()
            .enumerate()
            .map(|(k, p)| p * BigInt::from(k))
            .sum()
    }

    /// Matrix of `E(i, j)`, row-major.
    pub fn expected_entries(&self) -> Vec<Vec<Rational>> {
        (1..=self.dims.a())
            .map(|i| (1..=self.dims.b()).map(|j| self.expectation(i, j)).collect())
            .collect()
    }

    /// Moves probability mass `amount` in cell `(i, j)` from value `from`
    /// to value `to`. Exists to check that the verification harness notices
    /// a corrupted distribution.
    pub fn perturb(&mut self, i: usize, j: usize, from: usize, to: usize, amount: &Rational) {
        let cell = &mut self.probs[(i - 1) * self.dims.b() + (j - 1)];
        cell[from] -= amount;
        cell[to] += amount;
    }
}

pub fn cell_marginals(dims: BoxDims) -> CellMarginals {
    CellMarginals::from_dp(&ColumnDp::new(dims))
}

pub fn expected_entries(dims: BoxDims) -> Vec<Vec<Rational>> {
    cell_marginals(dims).expected_entries()
}

/// Exact uniform sampler.
///
/// The first column is drawn with weight `backward[1][s]`, every later
/// column among the states below its predecessor with weight
/// `backward[j][t]`. Randomness comes from ChaCha20 seeded through
/// `seed_from_u64`, whose output is fixed across platforms, and big
/// uniform integers are drawn by rejection from little-endian bytes.
#[derive(Debug, Clone)]
pub struct Sampler {
    dp: ColumnDp,
    rng: ChaCha20Rng,
}

impl Sampler {
    pub fn new(dims: BoxDims, seed: u64) -> Self {
        Self::from_dp(ColumnDp::new(dims), seed)
    }

    pub fn from_dp(dp: ColumnDp, seed: u64) -> Self {
        Self {
            dp,
            rng: ChaCha20Rng::seed_from_u64(seed),
        }
    }

    pub fn sample(&mut self) -> PlanePartition {
        let dims = self.dp.dims();
        let (a, b) = (dims.a(), dims.b());
        let mut columns: Vec<usize> = Vec::with_capacity(b);
        for j in 1..=b {
            let weights = self.dp.backward(j);
            let allowed = |t: usize| match columns.last() {
                None => true,
                Some(&prev) => self.dp.states[prev].dominates(&self.dp.states[t]),
            };
            let candidates: Vec<usize> = (0..weights.len()).filter(|&t| allowed(t)).collect();
            let total: BigInt = candidates.iter().map(|&t| &weights[t]).sum();
            let mut r = uniform_below(&mut self.rng, &total);
            let mut chosen = *candidates.last().expect("some state is always allowed");
            for &t in &candidates {
                if r < weights[t] {
                    chosen = t;
                    break;
                }
                r -= &weights[t];
            }
            columns.push(chosen);
        }
        let mut entries = vec![0; a * b];
        for (j, &s) in columns.iter().enumerate() {
            for (i, &v) in self.dp.states[s].values().iter().enumerate() {
                entries[i * b + j] = v;
            }
        }
        PlanePartition::from_entries_unchecked(dims, entries)
    }
}

/// Uniform integer in `0..bound` by rejection on `bits(bound)` random bits.
fn uniform_below(rng: &mut impl RngCore, bound: &BigInt) -> BigInt {
    debug_assert!(*bound > BigInt::zero());
    let bits = bound.bits();
    let nbytes = bits.div_ceil(8) as usize;
    let spare = (nbytes as u64 * 8 - bits) as u32;
    let mut buf = vec![0u8; nbytes];
    loop {
        rng.fill_bytes(&mut buf);
        if let Some(last) = buf.last_mut() {
            *last &= 0xffu8 >> spare;
        }
        let candidate = BigInt::from_bytes_le(Sign::Plus, &buf);
        if candidate < *bound {
            return candidate;
        }
    }
}

/// One uniform plane partition; the first draw of [`Sampler::new`]`(dims, seed)`.
pub fn sample_uniform(dims: BoxDims, seed: u64) -> PlanePartition {
    Sampler::new(dims, seed).sample()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat;

    fn dims(a: usize, b: usize, c: usize) -> BoxDims {
        BoxDims::new(a, b, c).unwrap()
    }

    fn binomial(n: u64, k: u64) -> BigInt {
        (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - k + i) / BigInt::from(i))
    }

    /// Direct transfer-matrix product, quadratic in the number of states.
    fn quadratic_count(d: BoxDims) -> BigInt {
        let states = column_states(d.a(), d.c());
        let mut w = vec![BigInt::one(); states.len()];
        for _ in 1..d.b() {
            w = states
                .iter()
                .map(|s| {
                    states
                        .iter()
                        .zip(&w)
                        .filter(|(t, _)| t.dominates(s))
                        .map(|(_, x)| x)
                        .sum()
                })
                .collect();
        }
        w.iter().sum()
    }

    #[test]
    fn dp_cells_counts_states() {
        let d = BoxDims::new(3, 2, 2).unwrap();
        assert_eq!(dp_cells(d), BigInt::from(2 * ColumnDp::new(d).states().len()));
    }

    #[test]
    fn small_counts() {
        assert_eq!(count_box(dims(1, 1, 1)), BigInt::from(2));
        assert_eq!(count_box(dims(2, 2, 2)), BigInt::from(20));
        assert_eq!(count_box(dims(3, 3, 3)), BigInt::from(980));
        for b in 1..=6 {
            for c in 1..=6 {
                assert_eq!(count_box(dims(1, b, c)), binomial((b + c) as u64, c as u64));
            }
        }
    }

    #[test]
    fn column_state_count_is_binomial() {
        for a in 1..=5 {
            for c in 1..=5 {
                assert_eq!(
                    BigInt::from(column_states(a, c).len()),
                    binomial((a + c) as u64, a as u64)
                );
            }
        }
    }

    #[test]
    fn prefix_sums_match_quadratic_transfer() {
        for a in 1..=4 {
            for b in 1..=4 {
                for c in 1..=4 {
                    let d = dims(a, b, c);
                    let dp = ColumnDp::new(d);
                    assert_eq!(dp.total(), &quadratic_count(d), "{d}");
                    let back: BigInt = dp.backward(1).iter().sum();
                    assert_eq!(&back, dp.total());
                    for j in 1..=b {
                        let w: BigInt = dp.column_weights(j).iter().sum();
                        assert_eq!(&w, dp.total());
                    }
                }
            }
        }
    }

    #[test]
    fn enumeration_order_and_size() {
        let unit: Vec<_> = enumerate_box(dims(1, 1, 1), EnumLimit::default()).unwrap().collect();
        assert_eq!(
            unit.iter().map(|p| p.rows()).collect::<Vec<_>>(),
            vec![vec![vec![0]], vec![vec![1]]]
        );

        let all: Vec<_> = enumerate_box(dims(2, 2, 2), EnumLimit::default()).unwrap().collect();
        assert_eq!(all.len(), 20);
        assert!(all.windows(2).all(|w| w[0].entries() < w[1].entries()));
        for p in &all {
            assert_eq!(PlanePartition::from_rows(p.dims(), &p.rows()).as_ref(), Ok(p));
        }
        assert_eq!(enumerate_box(dims(3, 3, 3), EnumLimit::default()).unwrap().count(), 980);
    }

    #[test]
    fn enumeration_limit() {
        let d = dims(3, 3, 3);
        assert!(matches!(
            enumerate_box(d, EnumLimit::new(979)),
            Err(Error::TooLarge { limit: 979, .. })
        ));
        assert!(enumerate_box(d, EnumLimit::new(980)).is_ok());
        let forced = EnumLimit { limit: 1, force: true };
        assert_eq!(enumerate_box(d, forced).unwrap().count(), 980);
    }

    #[test]
    fn unit_box_marginals() {
        let m = cell_marginals(dims(1, 1, 1));
        assert_eq!(m.prob(1, 1, 0), rat(1, 2));
        assert_eq!(m.prob(1, 1, 1), rat(1, 2));
        assert_eq!(m.expectation(1, 1), rat(1, 2));
    }

    #[test]
    fn marginals_sum_to_one_and_complement() {
        for d in [dims(2, 3, 2), dims(3, 2, 4), dims(2, 2, 5)] {
            let m = cell_marginals(d);
            for i in 1..=d.a() {
                for j in 1..=d.b() {
                    let s: Rational = m.distribution(i, j).iter().sum();
                    assert_eq!(s, rat(1, 1));
                    let opposite = m.expectation(d.a() + 1 - i, d.b() + 1 - j);
                    assert_eq!(m.expectation(i, j) + opposite, rat(d.c() as i64, 1));
                }
            }
        }
    }

    #[test]
    fn marginals_match_enumeration() {
        let d = dims(2, 2, 2);
        let all: Vec<_> = enumerate_box(d, EnumLimit::default()).unwrap().collect();
        assert_eq!(cell_marginals(d), CellMarginals::from_partitions(d, &all));
        let e11: Rational = Rational::new(all.iter().map(|p| BigInt::from(p.entry(1, 1))).sum(), BigInt::from(20));
        assert_eq!(expected_entries(d)[0][0], e11);
    }

    #[test]
    fn sampler_is_deterministic_and_valid() {
        let d = dims(3, 4, 3);
        let mut s1 = Sampler::new(d, 7);
        let mut s2 = Sampler::new(d, 7);
        for _ in 0..50 {
            let p = s1.sample();
            assert_eq!(p, s2.sample());
            assert!(PlanePartition::from_rows(d, &p.rows()).is_ok());
        }
        assert_eq!(sample_uniform(d, 11), Sampler::new(d, 11).sample());
    }

    #[test]
    fn unit_box_sampler_is_balanced() {
        let d = dims(1, 1, 1);
        let zeros = (0..10_000u64)
            .filter(|&seed| sample_uniform(d, seed).entry(1, 1) == 0)
            .count();
        // 5 sigma of Binomial(10000, 1/2) is 250
        assert!((zeros as i64 - 5000).abs() <= 250, "{zeros}");
    }

    #[test]
    fn uniform_below_stays_in_range() {
        let mut rng = ChaCha20Rng::seed_from_u64(1);
        for bound in [1u64, 2, 3, 255, 256, 257, 1 << 40] {
            let bound = BigInt::from(bound);
            for _ in 0..200 {
                let r = uniform_below(&mut rng, &bound);
                assert!(r >= BigInt::zero() && r < bound);
            }
        }
    }
}
