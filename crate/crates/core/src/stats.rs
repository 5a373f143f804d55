//! Placement probabilities of horizontal lozenges and their moments.
//!
//! `P(x, y)` is the probability that a uniformly random tiling contains the
//! horizontal lozenge with lowest vertex `(x, y)`. The lozenge on line `x`
//! coming from row `i` is cell `(i, x - a + i)`, at height `entry + a - i`,
//! so `P(x, y)` sums the cell marginals along that diagonal. Cells on one
//! diagonal always sit at distinct heights, so the events are disjoint.

use num_traits::{One, Zero};

use crate::engine::{CellMarginals, ColumnDp};
use crate::error::{Error, Result};
use crate::numeric::{int, rat, Rational};
use crate::pp::BoxDims;

/// Exact `P(x, y)` for `1 <= x <= a + b - 1`, `0 <= y <= a + c - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProbTable {
    dims: BoxDims,
    // [(x - 1) * (a + c) + y]
    p: Vec<Rational>,
}

impl ProbTable {
    pub fn from_marginals(m: &CellMarginals) -> Self {
        let dims = m.dims();
        let (a, _, c) = dims.signed();
        let height = (a + c) as usize;
        let mut p = vec![Rational::zero(); dims.x_max() as usize * height];
        for x in 1..=dims.x_max() {
            for i in dims.diagonal_rows(x) {
                let j = (x - a + i as i64) as usize;
                for (k, prob) in m.distribution(i, j).iter().enumerate() {
                    let y = k as i64 + a - i as i64;
                    p[(x - 1) as usize * height + y as usize] += prob;
                }
            }
        }
        Self { dims, p }
    }

    pub fn dims(&self) -> BoxDims {
        self.dims
    }

    /// `P(x, y)`, zero outside the table.
    pub fn prob(&self, x: i64, y: i64) -> Rational {
        if x < 1 || x > self.dims.x_max() || y < 0 || y > self.dims.y_max() {
            return Rational::zero();
        }
        let height = self.dims.y_max() + 1;
        self.p[((x - 1) * height + y) as usize].clone()
    }

    /// `(x, y, P)` in x-major order.
    pub fn entries(&self) -> impl Iterator<Item = (i64, i64, &Rational)> + '_ {
        let height = self.dims.y_max() + 1;
        self.p
            .iter()
            .enumerate()
            .map(move |(idx, p)| (idx as i64 / height + 1, idx as i64 % height, p))
    }

    pub fn total(&self) -> Rational {
        self.p.iter().sum()
    }

    fn check_y(&self, y0: i64) -> Result<()> {
        if y0 < 0 || y0 > self.dims.y_max() {
            return Err(Error::OutOfRange {
                what: "y0",
                value: y0,
                lo: 0,
                hi: self.dims.y_max(),
            });
        }
        Ok(())
    }

    /// Expected number of horizontal lozenges on the line `y = y0`.
    pub fn row_sum(&self, y0: i64) -> Result<Rational> {
        self.check_y(y0)?;
        Ok((1..=self.dims.x_max()).map(|x| self.prob(x, y0)).sum())
    }

    /// Expected number of horizontal lozenges on the line `x = x0`.
    pub fn column_sum(&self, x0: i64) -> Result<Rational> {
        check_x(self.dims, x0)?;
        Ok((0..=self.dims.y_max()).map(|y| self.prob(x0, y)).sum())
    }

    /// `sum_y P(x0, y) * (y - (a + c - 1) / 2)`.
    pub fn column_first_moment(&self, x0: i64) -> Result<Rational> {
        check_x(self.dims, x0)?;
        let mid = rat(self.dims.y_max(), 2);
        Ok((0..=self.dims.y_max())
            .map(|y| self.prob(x0, y) * (int(y) - &mid))
            .sum())
    }

    /// `sum P(x, y) (x - (a + b) / 2)^2`.
    pub fn horizontal_moment(&self) -> Rational {
        let center = Center::of(self.dims);
        self.entries()
            .map(|(x, _, p)| {
                let dx = int(x) - &center.sx;
                p * &dx * &dx
            })
            .sum()
    }

    /// `sum P(x, y) (2 (y - (a + c - 1) / 2) - (x - (a + b) / 2))^2`.
    pub fn vertical_moment(&self) -> Rational {
        let center = Center::of(self.dims);
        let mid_y = rat(self.dims.y_max(), 2);
        self.entries()
            .map(|(x, y, p)| {
                let v = (int(y) - &mid_y) * int(2) - (int(x) - &center.sx);
                p * &v * &v
            })
            .sum()
    }

    /// The three pieces of the vertical moment: the row-sum part, the
    /// first-moment cross term (before its minus sign), and the
    /// horizontal moment.
    pub fn vertical_split(&self) -> [Rational; 3] {
        let center = Center::of(self.dims);
        let mid_y = rat(self.dims.y_max(), 2);
        let rows: Rational = (0..=self.dims.y_max())
            .map(|y| {
                let dy = int(y) - &mid_y;
                self.row_sum(y).expect("in range") * &dy * &dy
            })
            .sum();
        let cross: Rational = (1..=self.dims.x_max())
            .map(|x| self.column_first_moment(x).expect("in range") * (int(x) - &center.sx))
            .sum();
        [rows * int(4), cross * int(4), self.horizontal_moment()]
    }

    /// Moves mass inside one cell marginal before building the table; the
    /// verification harness uses this to prove it can fail.
    pub fn with_injected_fault(dims: BoxDims) -> Self {
        let mut m = CellMarginals::from_dp(&ColumnDp::new(dims));
        let c = dims.c();
        let amount = m.prob(1, 1, c) / int(2);
        m.perturb(1, 1, c, c - 1, &amount);
        Self::from_marginals(&m)
    }
}

pub fn prob_table(dims: BoxDims) -> ProbTable {
    ProbTable::from_marginals(&CellMarginals::from_dp(&ColumnDp::new(dims)))
}

/// The centre `S = ((a + b) / 2, (a + c) / 2)` of the hexagon.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Center {
    pub sx: Rational,
    pub sy: Rational,
}

impl Center {
    pub fn of(dims: BoxDims) -> Self {
        let (a, b, c) = dims.signed();
        Self {
            sx: rat(a + b, 2),
            sy: rat(a + c, 2),
        }
    }
}

fn check_x(dims: BoxDims, x0: i64) -> Result<()> {
    if x0 < 1 || x0 > dims.x_max() {
        return Err(Error::OutOfRange {
            what: "x0",
            value: x0,
            lo: 1,
            hi: dims.x_max(),
        });
    }
    Ok(())
}

/// The row sum every line `y = y0` must have: `ab / (a + c)`.
pub fn row_sum_closed_form(dims: BoxDims) -> Rational {
    let (a, b, c) = dims.signed();
    rat(a * b, a + c)
}

/// Horizontal lozenges on line `x0` in every tiling: `x0`, then
/// `min(a, b)`, then `a + b - x0`.
pub fn line_count_closed_form(dims: BoxDims, x0: i64) -> Result<i64> {
    check_x(dims, x0)?;
    let (a, b, _) = dims.signed();
    let (lo, hi) = (a.min(b), a.max(b));
    Ok(if x0 <= lo {
        x0
    } else if x0 <= hi {
        lo
    } else {
        a + b - x0
    })
}

/// Which piece of the first-moment formula applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FirstMomentPiece {
    /// `1 <= x0 <= min(a, b)`
    Left,
    /// `min(a, b) <= x0 <= max(a, b)`
    Middle,
    /// `max(a, b) <= x0 <= a + b - 1`
    Right,
}

/// Evaluates one piece of the first-moment formula at `x0` with no range
/// check; the middle piece differs between `a <= b` and `a >= b`.
pub fn first_moment_piece_value(dims: BoxDims, x0: i64, branch: FirstMomentPiece) -> Rational {
    let (a, b, c) = dims.signed();
    let den = 2 * (a + b);
    match branch {
        FirstMomentPiece::Left => rat((-a * a - a * b - a * c + b * c + a * x0 + b * x0) * x0, den),
        FirstMomentPiece::Middle if a <= b => rat(a * c * (a + b - 2 * x0), den),
        FirstMomentPiece::Middle => rat(-b * (a + b + c) * (a + b - 2 * x0), den),
        FirstMomentPiece::Right => rat((-b * b - a * b - b * c + a * c + a * x0 + b * x0) * (a + b - x0), den),
    }
}

/// Every piece whose range contains `x0`; two at a seam, one elsewhere.
pub fn first_moment_pieces(dims: BoxDims, x0: i64) -> Result<Vec<(FirstMomentPiece, Rational)>> {
    check_x(dims, x0)?;
    let (a, b, _) = dims.signed();
    let (lo, hi) = (a.min(b), a.max(b));
    let mut out = Vec::new();
    if x0 <= lo {
        out.push(FirstMomentPiece::Left);
    }
    if lo <= x0 && x0 <= hi {
        out.push(FirstMomentPiece::Middle);
    }
    if x0 >= hi {
        out.push(FirstMomentPiece::Right);
    }
    Ok(out
        .into_iter()
        .map(|br| (br, first_moment_piece_value(dims, x0, br)))
        .collect())
}

/// Closed form of `sum_y P(x0, y) (y - (a + c - 1) / 2)`.
pub fn first_moment_closed_form(dims: BoxDims, x0: i64) -> Result<Rational> {
    let branches = first_moment_pieces(dims, x0)?;
    Ok(branches[0].1.clone())
}

/// Square-box first moment: `(x0 - n) x0 / 2` up to `n`, then
/// `(x0 - n)(2n - x0) / 2`.
pub fn square_first_moment_closed_form(n: usize, m: usize, x0: i64) -> Result<Rational> {
    let dims = BoxDims::new(n, n, m)?;
    check_x(dims, x0)?;
    let n = n as i64;
    Ok(if x0 <= n {
        rat((x0 - n) * x0, 2)
    } else {
        rat((x0 - n) * (2 * n - x0), 2)
    })
}

/// `D(x)`: the sum of `E(i, x - a + i)` along the diagonal feeding line `x`.
pub fn diagonal_expected_sum(dims: BoxDims, expected: &[Vec<Rational>], x: i64) -> Result<Rational> {
    check_x(dims, x)?;
    let a = dims.a() as i64;
    Ok(dims
        .diagonal_rows(x)
        .map(|i| expected[i - 1][(x - a + i as i64 - 1) as usize].clone())
        .sum())
}

/// Closed form of `D(x)`: `bcx / (a + b)` while the diagonal still grows
/// (through `x = a` when `a >= b`), `x D(1) - (x - a) c` in the middle when
/// `a <= b`, and `ac (a + b - x) / (a + b)` on the shrinking end.
pub fn diagonal_closed_form(dims: BoxDims, x: i64) -> Result<Rational> {
    check_x(dims, x)?;
    let (a, b, c) = dims.signed();
    let d1 = rat(b * c, a + b);
    Ok(if a <= b {
        if x <= a {
            &d1 * int(x)
        } else if x <= b {
            &d1 * int(x) - int((x - a) * c)
        } else {
            rat(a * c * (a + b - x), a + b)
        }
    } else if x <= a {
        &d1 * int(x)
    } else {
        rat(a * c * (a + b - x), a + b)
    })
}

/// `ab (a^2 + b^2 - 2) / 12`.
pub fn closed_form_horizontal(dims: BoxDims) -> Rational {
    let (a, b, _) = dims.signed();
    rat(a * b * (a * a + b * b - 2), 12)
}

/// `ab (a^2 + b^2 - 2 + 4c^2 + 4ac + 4bc) / 12`.
pub fn closed_form_vertical(dims: BoxDims) -> Rational {
    let (a, b, c) = dims.signed();
    rat(a * b * (a * a + b * b - 2 + 4 * c * c + 4 * a * c + 4 * b * c), 12)
}

/// Closed forms of the first two pieces of [`ProbTable::vertical_split`]:
/// `ab (a + c - 1)(a + c + 1) / 3` and `ab (a^2 + ac - bc - 1) / 3`.
pub fn closed_form_split(dims: BoxDims) -> [Rational; 2] {
    let (a, b, c) = dims.signed();
    [
        rat(a * b * (a + c - 1) * (a + c + 1), 3),
        rat(a * b * (a * a + a * c - b * c - 1), 3),
    ]
}

/// Moments computed from the table next to their closed forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentReport {
    pub dims: BoxDims,
    pub horizontal: Rational,
    pub vertical: Rational,
    pub closed_horizontal: Rational,
    pub closed_vertical: Rational,
    /// `[4 sum_y rowsum (y - ym)^2, 4 sum_x firstmoment (x - xm), horizontal]`;
    /// the vertical moment is `split[0] - split[1] + split[2]`.
    pub split: [Rational; 3],
    pub closed_split: [Rational; 2],
}

impl MomentReport {
    pub fn from_table(table: &ProbTable) -> Self {
        let dims = table.dims();
        Self {
            dims,
            horizontal: table.horizontal_moment(),
            vertical: table.vertical_moment(),
            closed_horizontal: closed_form_horizontal(dims),
            closed_vertical: closed_form_vertical(dims),
            split: table.vertical_split(),
            closed_split: closed_form_split(dims),
        }
    }

    pub fn split_total(&self) -> Rational {
        &self.split[0] - &self.split[1] + &self.split[2]
    }

    pub fn consistent(&self) -> bool {
        self.horizontal == self.closed_horizontal
            && self.vertical == self.closed_vertical
            && self.split[0] == self.closed_split[0]
            && self.split[1] == self.closed_split[1]
            && self.split[2] == self.horizontal
            && self.split_total() == self.closed_vertical
    }
}

impl std::fmt::Display for MomentReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "dims {}: horizontal {} (closed {}), vertical {} (closed {}), split [{}, {}, {}] (closed [{}, {}])",
            self.dims,
            self.horizontal,
            self.closed_horizontal,
            self.vertical,
            self.closed_vertical,
            self.split[0],
            self.split[1],
            self.split[2],
            self.closed_split[0],
            self.closed_split[1]
        )
    }
}

/// Computes every moment and fails with the full report if any identity
/// is off.
pub fn verify_theorem(table: &ProbTable) -> Result<MomentReport> {
    let report = MomentReport::from_table(table);
    if report.consistent() {
        Ok(report)
    } else {
        Err(Error::Mismatch(Box::new(report)))
    }
}

/// Sum of the whole table; must be `ab`.
pub fn table_total_closed_form(dims: BoxDims) -> Rational {
    int(dims.cells() as i64)
}

/// Point symmetry `P(x, y) = P(a + b - x, a + c - 1 - y)`.
pub fn is_point_symmetric(table: &ProbTable) -> bool {
    let d = table.dims();
    table
        .entries()
        .all(|(x, y, p)| *p == table.prob(d.x_max() + 1 - x, d.y_max() - y))
}

pub fn in_unit_interval(table: &ProbTable) -> bool {
    table
        .entries()
        .all(|(_, _, p)| *p >= Rational::zero() && *p <= Rational::one())
}
