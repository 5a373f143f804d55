//! Checks every closed form against exact computation, over one box or a
//! sweep of boxes.

use std::fmt;

use num_bigint::BigInt;

use crate::engine::{CellMarginals, ColumnDp, EnumLimit};
use crate::error::Result;
use crate::numeric::{fraction_string, int, Rational};
use crate::pp::BoxDims;
use crate::qcomb::{
    enumerate_nk_arrays, enumerate_ssyt, hook_content_gf, mean_norm_nk, mean_norm_ssyt, mean_norm_ssyt_closed_form,
    norm_generating_function, partitions, NkParams,
};
use crate::stats::{
    diagonal_closed_form, diagonal_expected_sum, first_moment_pieces, line_count_closed_form, row_sum_closed_form,
    square_first_moment_closed_form, table_total_closed_form, MomentReport, ProbTable,
};

/// Identity families, in report order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckKind {
    TableTotal,
    RowSum,
    ColumnSum,
    FirstMoment,
    SquareFirstMoment,
    DiagonalSum,
    HorizontalMoment,
    VerticalMoment,
    VerticalSplit,
    ArrayMeanNorm,
    HookContent,
}

impl CheckKind {
    pub fn name(self) -> &'static str {
        match self {
            CheckKind::TableTotal => "table-total",
            CheckKind::RowSum => "row-sum",
            CheckKind::ColumnSum => "column-sum",
            CheckKind::FirstMoment => "first-moment",
            CheckKind::SquareFirstMoment => "square-first-moment",
            CheckKind::DiagonalSum => "diagonal-sum",
            CheckKind::HorizontalMoment => "horizontal-moment",
            CheckKind::VerticalMoment => "vertical-moment",
            CheckKind::VerticalSplit => "vertical-split",
            CheckKind::ArrayMeanNorm => "array-mean-norm",
            CheckKind::HookContent => "hook-content",
        }
    }
}

/// One comparison: `expected` is the closed form, `actual` what was computed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub kind: CheckKind,
    pub subject: String,
    pub expected: String,
    pub actual: String,
    pub passed: bool,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {}: expected {}, got {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.kind.name(),
            self.subject,
            self.expected,
            self.actual
        )
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    /// `(kind, passed, total)` per kind that ran.
    pub fn summary(&self) -> Vec<(CheckKind, usize, usize)> {
        let mut out: Vec<(CheckKind, usize, usize)> = Vec::new();
        let mut kinds: Vec<CheckKind> = self.checks.iter().map(|c| c.kind).collect();
        kinds.sort();
        kinds.dedup();
        for kind in kinds {
            let of_kind = self.checks.iter().filter(|c| c.kind == kind);
            let (pass, total) = of_kind.fold((0, 0), |(p, t), c| (p + c.passed as usize, t + 1));
            out.push((kind, pass, total));
        }
        out
    }

    fn push(&mut self, kind: CheckKind, subject: String, expected: &Rational, actual: &Rational) {
        self.checks.push(Check {
            kind,
            subject,
            expected: fraction_string(expected),
            actual: fraction_string(actual),
            passed: expected == actual,
        });
    }

    fn extend(&mut self, other: VerifyReport) {
        self.checks.extend(other.checks);
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct VerifyOptions {
    pub limit: EnumLimit,
    /// Shift mass inside the marginal of cell (1, 1) before building the
    /// table. Exists only to show the harness catches errors.
    pub inject_fault: bool,
}

/// Largest `n` in the array sweeps.
const ARRAY_MAX_N: usize = 2;

/// Largest shape size checked for a single box.
const SINGLE_SHAPE_MAX: usize = 6;

/// Every table identity for one box.
pub fn verify_box(dims: BoxDims, opts: VerifyOptions) -> VerifyReport {
    let dp = ColumnDp::new(dims);
    let marginals = CellMarginals::from_dp(&dp);
    let table = if opts.inject_fault {
        ProbTable::with_injected_fault(dims)
    } else {
        ProbTable::from_marginals(&marginals)
    };
    let mut r = VerifyReport::default();
    let (a, b, c) = dims.signed();

    r.push(
        CheckKind::TableTotal,
        format!("{dims}"),
        &table_total_closed_form(dims),
        &table.total(),
    );

    let row = row_sum_closed_form(dims);
    for y in 0..=dims.y_max() {
        r.push(
            CheckKind::RowSum,
            format!("{dims} y0={y}"),
            &row,
            &table.row_sum(y).expect("y in range"),
        );
    }

    let expected = marginals.expected_entries();
    for x in 1..=dims.x_max() {
        let line = int(line_count_closed_form(dims, x).expect("x in range"));
        r.push(
            CheckKind::ColumnSum,
            format!("{dims} x0={x}"),
            &line,
            &table.column_sum(x).expect("x in range"),
        );

        let moment = table.column_first_moment(x).expect("x in range");
        for (piece, value) in first_moment_pieces(dims, x).expect("x in range") {
            r.push(
                CheckKind::FirstMoment,
                format!("{dims} x0={x} {piece:?}"),
                &value,
                &moment,
            );
        }
        if a == b {
            let sq = square_first_moment_closed_form(a as usize, c as usize, x).expect("x in range");
            r.push(CheckKind::SquareFirstMoment, format!("{dims} x0={x}"), &sq, &moment);
        }

        let d = diagonal_expected_sum(dims, &expected, x).expect("x in range");
        let closed = diagonal_closed_form(dims, x).expect("x in range");
        r.push(CheckKind::DiagonalSum, format!("{dims} x={x}"), &closed, &d);
    }

    let m = MomentReport::from_table(&table);
    r.push(
        CheckKind::HorizontalMoment,
        format!("{dims}"),
        &m.closed_horizontal,
        &m.horizontal,
    );
    r.push(
        CheckKind::VerticalMoment,
        format!("{dims}"),
        &m.closed_vertical,
        &m.vertical,
    );
    r.push(
        CheckKind::VerticalSplit,
        format!("{dims} rows"),
        &m.closed_split[0],
        &m.split[0],
    );
    r.push(
        CheckKind::VerticalSplit,
        format!("{dims} cross"),
        &m.closed_split[1],
        &m.split[1],
    );
    r.push(
        CheckKind::VerticalSplit,
        format!("{dims} total"),
        &m.closed_vertical,
        &m.split_total(),
    );
    r
}

/// Mean interior norm over all `(n; k)`-arrays, by exhaustive generation,
/// for every `k` and `n <= 2`.
pub fn verify_arrays(a: usize, c: usize, limit: EnumLimit) -> Result<VerifyReport> {
    let mut r = VerifyReport::default();
    for n in 0..=ARRAY_MAX_N {
        for p in NkParams::all(a, n, c) {
            let arrays = enumerate_nk_arrays(&p, limit)?;
            let total: BigInt = arrays.iter().map(|t| BigInt::from(t.interior_norm())).sum();
            let mean = Rational::new(total, BigInt::from(arrays.len()));
            r.push(
                CheckKind::ArrayMeanNorm,
                format!("a={a} n={n} c={c} k={:?}", p.k()),
                &mean_norm_nk(&p),
                &mean,
            );
        }
    }
    Ok(r)
}

/// Hook-content polynomial and mean norm against enumerated tableaux for
/// every shape of size at most `max_size`.
pub fn verify_hook_content(max_size: usize, max_entry: usize, limit: EnumLimit) -> Result<VerifyReport> {
    let mut r = VerifyReport::default();
    for size in 0..=max_size {
        for shape in partitions(size) {
            let tableaux = enumerate_ssyt(&shape, max_entry, limit)?;
            let brute = norm_generating_function(&tableaux);
            let gf = hook_content_gf(&shape, max_entry)?;
            let subject = format!("shape={:?} max_entry={max_entry}", shape.parts());
            r.checks.push(Check {
                kind: CheckKind::HookContent,
                subject: format!("{subject} polynomial"),
                expected: gf.to_string(),
                actual: brute.to_string(),
                passed: gf == brute,
            });
            if !tableaux.is_empty() {
                let mean = mean_norm_ssyt(&shape, max_entry)?;
                r.push(
                    CheckKind::HookContent,
                    format!("{subject} mean"),
                    &mean_norm_ssyt_closed_form(&shape, max_entry),
                    &mean,
                );
            }
        }
    }
    Ok(r)
}

/// All checks for one box: its table identities, the arrays with the same
/// `a` and `c`, and small tableaux with entries at most `a + 2`.
pub fn verify_single(dims: BoxDims, opts: VerifyOptions) -> Result<VerifyReport> {
    let mut r = verify_box(dims, opts);
    r.extend(verify_arrays(dims.a(), dims.c(), opts.limit)?);
    let size = (dims.a() * dims.c()).min(SINGLE_SHAPE_MAX);
    r.extend(verify_hook_content(size, dims.a() + ARRAY_MAX_N, opts.limit)?);
    Ok(r)
}

/// Every box with sides at most `max`, arrays with `a, c <= max`, and
/// tableaux of size at most `max + 3` with entries at most `max + 1`.
pub fn verify_sweep(max: usize, opts: VerifyOptions) -> Result<VerifyReport> {
    let mut r = VerifyReport::default();
    for a in 1..=max {
        for b in 1..=max {
            for c in 1..=max {
                r.extend(verify_box(BoxDims::new(a, b, c)?, opts));
            }
        }
    }
    for a in 1..=max {
        for c in 0..=max {
            r.extend(verify_arrays(a, c, opts.limit)?);
        }
    }
    for entries in 1..=max + 1 {
        r.extend(verify_hook_content(max + 3, entries, opts.limit)?);
    }
    Ok(r)
}
