//! Plane partitions in a box, their shifted arrays, and the lozenge tilings
//! they encode.
//!
//! Rows and columns are 1-indexed everywhere in the public API: `entry(i, j)`
//! is the entry in row `i` (top to bottom) and column `j` (left to right).
//!
//! A horizontal lozenge is named by its lowest vertex in the oblique
//! coordinate system whose origin is the hexagon corner where the sides of
//! lengths `b` and `c` meet. Cell `(i, j)` with entry `e` contributes the
//! horizontal lozenge at `x = j - i + a`, `y = e + a - i`.

mod render;

use std::collections::BTreeSet;

use crate::error::{Direction, Error, Result};

pub use render::{faces, render_ascii, render_svg, Face, Orientation};

/// Side lengths `a, b, c` of the hexagon, equivalently the box dimensions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoxDims {
    a: usize,
    b: usize,
    c: usize,
}

impl BoxDims {
    pub fn new(a: usize, b: usize, c: usize) -> Result<Self> {
        if a == 0 || b == 0 || c == 0 {
            return Err(Error::ZeroSide { a, b, c });
        }
        Ok(Self { a, b, c })
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn c(&self) -> usize {
        self.c
    }

    /// `(a, b, c)` as signed integers, handy for closed-form arithmetic.
    pub fn signed(&self) -> (i64, i64, i64) {
        (self.a as i64, self.b as i64, self.c as i64)
    }

    /// Largest `x` carrying horizontal lozenges, `a + b - 1`.
    pub fn x_max(&self) -> i64 {
        (self.a + self.b - 1) as i64
    }

    /// Largest `y` carrying horizontal lozenges, `a + c - 1`.
    pub fn y_max(&self) -> i64 {
        (self.a + self.c - 1) as i64
    }

    pub fn cells(&self) -> usize {
        self.a * self.b
    }

    /// Rows `i` whose diagonal cell `(i, x - a + i)` lies in the box.
    pub fn diagonal_rows(&self, x: i64) -> std::ops::RangeInclusive<usize> {
        let (a, b, _) = self.signed();
        let lo = (a - x + 1).max(1);
        let hi = (a + b - x).min(a);
        if lo > hi {
            #[allow(clippy::reversed_empty_ranges)]
            return 1..=0;
        }
        lo as usize..=hi as usize
    }

    /// The same box with `b` and `c` exchanged, and so on for the other
    /// five orderings.
    pub fn permutations(&self) -> [BoxDims; 6] {
        let (a, b, c) = (self.a, self.b, self.c);
        [
            BoxDims { a, b, c },
            BoxDims { a, b: c, c: b },
            BoxDims { a: b, b: a, c },
            BoxDims { a: b, b: c, c: a },
            BoxDims { a: c, b: a, c: b },
            BoxDims { a: c, b, c: a },
        ]
    }
}

impl std::fmt::Display for BoxDims {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

fn check_shape(dims: BoxDims, rows: &[Vec<usize>]) -> Result<Vec<usize>> {
    let bad = Error::BadShape {
        rows: dims.a,
        cols: dims.b,
    };
    if rows.len() != dims.a || rows.iter().any(|r| r.len() != dims.b) {
        return Err(bad);
    }
    Ok(rows.concat())
}

/// An `a x b` matrix with entries in `0..=c`, weakly decreasing along rows
/// and down columns.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlanePartition {
    dims: BoxDims,
    entries: Vec<usize>,
}

impl PlanePartition {
    pub fn from_rows(dims: BoxDims, rows: &[Vec<usize>]) -> Result<Self> {
        let entries = check_shape(dims, rows)?;
        let pp = Self { dims, entries };
        for i in 1..=dims.a {
            for j in 1..=dims.b {
                let v = pp.entry(i, j);
                if v > dims.c {
                    return Err(Error::EntryOutOfRange {
                        row: i,
                        col: j,
                        value: v,
                        max: dims.c,
                    });
                }
                if j > 1 && pp.entry(i, j - 1) < v {
                    return Err(Error::NotDecreasing {
                        dir: Direction::Row,
                        index: i,
                        row: i,
                        col: j,
                    });
                }
                if i > 1 && pp.entry(i - 1, j) < v {
                    return Err(Error::NotDecreasing {
                        dir: Direction::Column,
                        index: j,
                        row: i,
                        col: j,
                    });
                }
            }
        }
        Ok(pp)
    }

    /// Row-major entries already known to be valid.
    pub(crate) fn from_entries_unchecked(dims: BoxDims, entries: Vec<usize>) -> Self {
        debug_assert_eq!(entries.len(), dims.cells());
        Self { dims, entries }
    }

    pub fn zero(dims: BoxDims) -> Self {
        Self {
            dims,
            entries: vec![0; dims.cells()],
        }
    }

    pub fn full(dims: BoxDims) -> Self {
        Self {
            dims,
            entries: vec![dims.c; dims.cells()],
        }
    }

    pub fn dims(&self) -> BoxDims {
        self.dims
    }

    pub fn entry(&self, i: usize, j: usize) -> usize {
        self.entries[(i - 1) * self.dims.b + (j - 1)]
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.entries.chunks(self.dims.b).map(<[usize]>::to_vec).collect()
    }

    /// Number of unit cubes, i.e. the sum of the entries.
    pub fn volume(&self) -> usize {
        self.entries.iter().sum()
    }

    /// `T(i, j) = c - T(a + 1 - i, b + 1 - j)`.
    pub fn complement(&self) -> Self {
        let BoxDims { a, b, c } = self.dims;
        let mut entries = Vec::with_capacity(a * b);
        for i in 1..=a {
            for j in 1..=b {
                entries.push(c - self.entry(a + 1 - i, b + 1 - j));
            }
        }
        Self::from_entries_unchecked(self.dims, entries)
    }

    /// `T(i, j) = c - T(n + 1 - j, n + 1 - i)` on an `n x n x c` box.
    pub fn transpose_complement(&self) -> Result<Self> {
        let BoxDims { a, b, c } = self.dims;
        if a != b {
            return Err(Error::NotSquare { a, b });
        }
        let n = a;
        let mut entries = Vec::with_capacity(n * n);
        for i in 1..=n {
            for j in 1..=n {
                entries.push(c - self.entry(n + 1 - j, n + 1 - i));
            }
        }
        Ok(Self::from_entries_unchecked(self.dims, entries))
    }

    /// Adds `a - i` to every entry of row `i`.
    pub fn shift_rows(&self) -> ShiftedArray {
        let BoxDims { a, b, .. } = self.dims;
        let entries = self
            .entries
            .iter()
            .enumerate()
            .map(|(idx, &v)| v + a - (idx / b + 1))
            .collect();
        ShiftedArray {
            dims: self.dims,
            entries,
        }
    }

    /// Lowest vertices of the `a * b` horizontal lozenges, sorted.
    pub fn horizontal_positions(&self) -> Vec<ObliquePos> {
        let BoxDims { a, b, .. } = self.dims;
        let mut out: Vec<ObliquePos> = (1..=a)
            .flat_map(|i| (1..=b).map(move |j| (i, j)))
            .map(|(i, j)| ObliquePos {
                x: (j + a) as i64 - i as i64,
                y: (self.entry(i, j) + a) as i64 - i as i64,
            })
            .collect();
        out.sort();
        out
    }

    pub fn to_tiling(&self) -> LozengeTiling {
        LozengeTiling {
            dims: self.dims,
            horizontals: self.horizontal_positions().into_iter().collect(),
        }
    }
}

/// A plane partition with `a - i` added to row `i`: rows weakly decreasing,
/// columns strictly decreasing, row `i` within `a - i ..= c + a - i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ShiftedArray {
    dims: BoxDims,
    entries: Vec<usize>,
}

impl ShiftedArray {
    pub fn from_rows(dims: BoxDims, rows: &[Vec<usize>]) -> Result<Self> {
        let entries = check_shape(dims, rows)?;
        let sa = Self { dims, entries };
        let BoxDims { a, b, c } = dims;
        for i in 1..=a {
            for j in 1..=b {
                let v = sa.entry(i, j);
                if v + i < a || v + i > c + a {
                    return Err(Error::EntryOutOfRange {
                        row: i,
                        col: j,
                        value: v,
                        max: c + a - i,
                    });
                }
                if j > 1 && sa.entry(i, j - 1) < v {
                    return Err(Error::NotDecreasing {
                        dir: Direction::Row,
                        index: i,
                        row: i,
                        col: j,
                    });
                }
                if i > 1 && sa.entry(i - 1, j) <= v {
                    return Err(Error::NotDecreasing {
                        dir: Direction::Column,
                        index: j,
                        row: i,
                        col: j,
                    });
                }
            }
        }
        Ok(sa)
    }

    pub fn dims(&self) -> BoxDims {
        self.dims
    }

    pub fn entry(&self, i: usize, j: usize) -> usize {
        self.entries[(i - 1) * self.dims.b + (j - 1)]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.entries.chunks(self.dims.b).map(<[usize]>::to_vec).collect()
    }

    pub fn unshift_rows(&self) -> PlanePartition {
        let BoxDims { a, b, .. } = self.dims;
        let entries = self
            .entries
            .iter()
            .enumerate()
            .map(|(idx, &v)| v + idx / b + 1 - a)
            .collect();
        PlanePartition::from_entries_unchecked(self.dims, entries)
    }

    pub fn content(&self) -> ContentSeq {
        let mut mult = vec![0; self.dims.a + self.dims.c];
        for &v in &self.entries {
            mult[v] += 1;
        }
        ContentSeq(mult)
    }

    /// Bender–Knuth toggle exchanging the multiplicities of `j` and `j + 1`.
    ///
    /// A `j + 1` sitting directly above a `j` is paired and never moves. In
    /// each row the remaining `j + 1`s and `j`s form one contiguous run
    /// `(j+1)^s j^r`, which is rewritten as `(j+1)^r j^s`.
    pub fn bender_knuth_swap(&self, j: usize) -> Result<ShiftedArray> {
        let BoxDims { a, b, c } = self.dims;
        let top = (a + c - 1) as i64;
        if j as i64 + 1 > top {
            return Err(Error::OutOfRange {
                what: "j",
                value: j as i64,
                lo: 0,
                hi: top - 1,
            });
        }
        let lo = j;
        let hi = j + 1;
        let mut out = self.entries.clone();
        for i in 1..=a {
            let mut free = Vec::new();
            for col in 1..=b {
                let v = self.entry(i, col);
                let paired = (v == lo && i > 1 && self.entry(i - 1, col) == hi)
                    || (v == hi && i < a && self.entry(i + 1, col) == lo);
                if (v == lo || v == hi) && !paired {
                    free.push(col);
                }
            }
            debug_assert!(free.windows(2).all(|w| w[1] == w[0] + 1));
            let lows = free.iter().filter(|&&col| self.entry(i, col) == lo).count();
            for (k, &col) in free.iter().enumerate() {
                out[(i - 1) * b + col - 1] = if k < lows { hi } else { lo };
            }
        }
        Ok(ShiftedArray {
            dims: self.dims,
            entries: out,
        })
    }
}

/// Multiplicities of each value in a shifted array; index = value.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ContentSeq(Vec<usize>);

impl ContentSeq {
    pub fn multiplicity(&self, value: usize) -> usize {
        self.0.get(value).copied().unwrap_or(0)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }
}

/// Lowest vertex of a horizontal lozenge in oblique coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ObliquePos {
    pub x: i64,
    pub y: i64,
}

impl ObliquePos {
    pub fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }
}

/// A lozenge tiling of the hexagon, recorded by its horizontal lozenges.
/// The other two orientations are determined by these and are rebuilt only
/// for drawing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LozengeTiling {
    dims: BoxDims,
    horizontals: BTreeSet<ObliquePos>,
}

impl LozengeTiling {
    /// Accepts a set of horizontal lozenges only if it comes from a plane
    /// partition in the box.
    pub fn from_horizontals(dims: BoxDims, horizontals: BTreeSet<ObliquePos>) -> Result<Self> {
        let tiling = Self { dims, horizontals };
        let pp = tiling.to_plane_partition()?;
        if pp.to_tiling() != tiling {
            return Err(Error::InvalidArray("horizontal lozenges do not form a tiling".into()));
        }
        Ok(tiling)
    }

    pub fn dims(&self) -> BoxDims {
        self.dims
    }

    pub fn horizontals(&self) -> &BTreeSet<ObliquePos> {
        &self.horizontals
    }

    /// Lozenges on the vertical line `x`.
    pub fn count_on_line(&self, x: i64) -> usize {
        self.horizontals.iter().filter(|p| p.x == x).count()
    }

    /// Inverts [`PlanePartition::to_tiling`]: along each line `x` the
    /// heights `y` strictly decrease with the row index.
    pub fn to_plane_partition(&self) -> Result<PlanePartition> {
        let dims = self.dims;
        let a = dims.a as i64;
        let mut rows = vec![vec![usize::MAX; dims.b]; dims.a];
        for x in 1..=dims.x_max() {
            let mut ys: Vec<i64> = self.horizontals.iter().filter(|p| p.x == x).map(|p| p.y).collect();
            ys.sort_unstable_by(|p, q| q.cmp(p));
            let cells = dims.diagonal_rows(x);
            if ys.len() != cells.clone().count() {
                return Err(Error::InvalidArray(format!(
                    "line x = {x} carries {} horizontal lozenges",
                    ys.len()
                )));
            }
            for (i, y) in cells.zip(ys) {
                let j = (x - a + i as i64) as usize;
                let e = y - a + i as i64;
                if e < 0 {
                    return Err(Error::InvalidArray(format!("lozenge ({x}, {y}) below the floor")));
                }
                rows[i - 1][j - 1] = e as usize;
            }
        }
        if self.horizontals.iter().any(|p| p.x < 1 || p.x > dims.x_max()) {
            return Err(Error::InvalidArray("lozenge outside the hexagon".into()));
        }
        PlanePartition::from_rows(dims, &rows)
    }
}
