//! Slow, independent reference implementations. Nothing here calls into
//! the library's engine, statistics or tableau code.

#![allow(dead_code)]

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Q = BigRational;

pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Every `a x b` matrix over `0..=c`, decreasing in rows and columns,
/// as row-major vectors. Filled cell by cell, bounded by left and upper
/// neighbours.
pub fn plane_partitions(a: usize, b: usize, c: usize) -> Vec<Vec<usize>> {
    fn go(a: usize, b: usize, c: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let k = cur.len();
        if k == a * b {
            out.push(cur.clone());
            return;
        }
        let (i, j) = (k / b, k % b);
        let mut hi = c;
        if i > 0 {
            hi = hi.min(cur[k - b]);
        }
        if j > 0 {
            hi = hi.min(cur[k - 1]);
        }
        for v in 0..=hi {
            cur.push(v);
            go(a, b, c, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(a, b, c, &mut Vec::new(), &mut out);
    out
}

/// `prod_{i,j,k} (i + j + k - 1) / (i + j + k - 2)` over the box.
pub fn macmahon(a: usize, b: usize, c: usize) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 1..=a {
        for j in 1..=b {
            for k in 1..=c {
                num *= i + j + k - 1;
                den *= i + j + k - 2;
            }
        }
    }
    assert!((&num % &den).is_zero());
    num / den
}

/// Lowest vertex `(x, y)` of the horizontal lozenge on top of each cell.
pub fn lozenge_positions(pp: &[usize], a: usize, b: usize) -> Vec<(i64, i64)> {
    (0..a * b)
        .map(|idx| {
            let (i, j) = (idx / b + 1, idx % b + 1);
            (j as i64 - i as i64 + a as i64, pp[idx] as i64 + a as i64 - i as i64)
        })
        .collect()
}

/// Relative frequencies of horizontal lozenge positions.
pub fn position_frequencies(a: usize, b: usize, c: usize) -> HashMap<(i64, i64), Q> {
    let all = plane_partitions(a, b, c);
    let n = BigInt::from(all.len());
    let mut counts: HashMap<(i64, i64), i64> = HashMap::new();
    for pp in &all {
        for pos in lozenge_positions(pp, a, b) {
            *counts.entry(pos).or_default() += 1;
        }
    }
    counts
        .into_iter()
        .map(|(k, v)| (k, Q::new(BigInt::from(v), n.clone())))
        .collect()
}

/// `freq[cell][value]` over all plane partitions in the box.
pub fn cell_frequencies(a: usize, b: usize, c: usize) -> Vec<Vec<Q>> {
    let all = plane_partitions(a, b, c);
    let n = BigInt::from(all.len());
    let mut counts = vec![vec![0i64; c + 1]; a * b];
    for pp in &all {
        for (idx, &v) in pp.iter().enumerate() {
            counts[idx][v] += 1;
        }
    }
    counts
        .into_iter()
        .map(|row| row.into_iter().map(|v| Q::new(BigInt::from(v), n.clone())).collect())
        .collect()
}

pub fn horizontal_moment(a: i64, b: i64) -> Q {
    q(a * b * (a * a + b * b - 2), 12)
}

pub fn vertical_moment(a: i64, b: i64, c: i64) -> Q {
    q(a * b * (a * a + b * b - 2 + 4 * c * c + 4 * a * c + 4 * b * c), 12)
}

/// Trapezoid profile of lozenges per vertical line.
pub fn line_count(a: i64, b: i64, x: i64) -> i64 {
    x.min(a).min(b).min(a + b - x)
}

/// Piecewise first moment of column `x`, picking the piece by position.
pub fn first_moment(a: i64, b: i64, c: i64, x: i64) -> Q {
    let den = 2 * (a + b);
    if x <= a.min(b) {
        q((-a * a - a * b - a * c + b * c + a * x + b * x) * x, den)
    } else if x >= a.max(b) {
        q((-b * b - a * b - b * c + a * c + a * x + b * x) * (a + b - x), den)
    } else if a < b {
        q(a * c * (a + b - 2 * x), den)
    } else {
        q(-b * (a + b + c) * (a + b - 2 * x), den)
    }
}

pub fn square_first_moment(n: i64, x: i64) -> Q {
    if x <= n {
        q((x - n) * x, 2)
    } else {
        q((x - n) * (2 * n - x), 2)
    }
}

/// Staircase arrays: row `i` (1-based) has `i + n` entries over `0..=c`,
/// weakly decreasing, ending in `k[i - 1]`, and at most the entry above.
pub fn staircase_arrays(a: usize, n: usize, c: usize, k: &[usize]) -> Vec<Vec<Vec<usize>>> {
    fn rows_below(len: usize, last: usize, c: usize, above: Option<&[usize]>) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(len);
        fn go(
            len: usize,
            last: usize,
            c: usize,
            above: Option<&[usize]>,
            cur: &mut Vec<usize>,
            out: &mut Vec<Vec<usize>>,
        ) {
            if cur.len() == len {
                if cur.last() == Some(&last) {
                    out.push(cur.clone());
                }
                return;
            }
            let j = cur.len();
            let mut hi = cur.last().copied().unwrap_or(c);
            if let Some(up) = above {
                if j < up.len() {
                    hi = hi.min(up[j]);
                }
            }
            for v in last..=hi {
                cur.push(v);
                go(len, last, c, above, cur, out);
                cur.pop();
            }
        }
        go(len, last, c, above, &mut cur, &mut out);
        out
    }

    let mut partial: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
    for i in 1..=a {
        let mut next = Vec::new();
        for arr in &partial {
            let above = arr.last().map(|r: &Vec<usize>| r.as_slice());
            for row in rows_below(i + n, k[i - 1], c, above) {
                let mut grown = arr.clone();
                grown.push(row);
                next.push(grown);
            }
        }
        partial = next;
    }
    partial
}

/// All decreasing `k` of length `a` over `0..=c`.
pub fn boundaries(a: usize, c: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..a {
        out = out
            .into_iter()
            .flat_map(|k: Vec<usize>| {
                let hi = k.last().copied().unwrap_or(c);
                (0..=hi).map(move |v| {
                    let mut k = k.clone();
                    k.push(v);
                    k
                })
            })
            .collect();
    }
    out
}

/// Every filling of `shape` over `1..=m`, kept when rows weakly and
/// columns strictly increase.
pub fn ssyt_brute(shape: &[usize], m: usize) -> Vec<Vec<Vec<usize>>> {
    let cells: usize = shape.iter().sum();
    let mut out = Vec::new();
    let mut digits = vec![1usize; cells];
    if m == 0 {
        return if cells == 0 { vec![Vec::new()] } else { out };
    }
    loop {
        let mut rows = Vec::new();
        let mut at = 0;
        for &len in shape {
            rows.push(digits[at..at + len].to_vec());
            at += len;
        }
        let ok = rows.iter().enumerate().all(|(r, row)| {
            row.windows(2).all(|w| w[0] <= w[1]) && (r == 0 || row.iter().enumerate().all(|(c, &v)| rows[r - 1][c] < v))
        });
        if ok {
            out.push(rows);
        }
        let mut p = 0;
        while p < cells && digits[p] == m {
            digits[p] = 1;
            p += 1;
        }
        if p == cells {
            return out;
        }
        digits[p] += 1;
    }
}

/// All partitions of `n`.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in 1..=rest.min(max) {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Coefficients of `sum q^{norm}` over the tableaux.
pub fn norm_coefficients(tabs: &[Vec<Vec<usize>>]) -> Vec<BigInt> {
    let norms: Vec<usize> = tabs.iter().map(|t| t.iter().flatten().sum()).collect();
    let deg = norms.iter().copied().max().unwrap_or(0);
    let mut coeffs = vec![BigInt::zero(); deg + 1];
    for n in norms {
        coeffs[n] += 1;
    }
    while coeffs.last().is_some_and(|c| c.is_zero()) {
        coeffs.pop();
    }
    coeffs
}
