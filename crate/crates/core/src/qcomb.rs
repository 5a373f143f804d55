//! Young diagrams, semistandard tableaux, the hook-content generating
//! function, and staircase arrays with a prescribed boundary diagonal.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::engine::EnumLimit;
use crate::error::{Error, Result};
use crate::numeric::{rat, QPolynomial, Rational};

/// A partition `lambda_1 >= ... >= lambda_r > 0`. The empty shape is allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Shape(Vec<usize>);

impl Shape {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidShape(format!("{parts:?} is not weakly decreasing")));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidShape(format!("{parts:?} has a zero part")));
        }
        Ok(Self(parts))
    }

    /// Drops trailing zeros first.
    pub fn from_padded(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Self::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn rows(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> Shape {
        let width = self.0.first().copied().unwrap_or(0);
        Shape(
            (1..=width)
                .map(|j| self.0.iter().filter(|&&p| p >= j).count())
                .collect(),
        )
    }

    /// Cells `(row, col)`, 1-indexed, row-major.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |c| (r + 1, c)))
    }

    pub fn hook(&self, row: usize, col: usize) -> usize {
        let arm = self.0[row - 1] - col;
        let leg = self.0[row..].iter().filter(|&&p| p >= col).count();
        arm + leg + 1
    }

    pub fn content(&self, row: usize, col: usize) -> i64 {
        col as i64 - row as i64
    }

    /// `sum_i i * lambda_i`, the norm of the tableau with `i` in row `i`.
    pub fn row_weighted_size(&self) -> usize {
        self.0.iter().enumerate().map(|(i, &p)| (i + 1) * p).sum()
    }
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions(n: usize) -> Vec<Shape> {
    fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Shape>) {
        if rest == 0 {
            out.push(Shape(prefix.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            prefix.push(p);
            go(rest - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// The two ways of writing each of `sum i lambda_i` and `sum j lambda'_j`:
/// returns `[(row-weighted, via conjugate), (column-weighted, via rows)]`.
pub fn norm_identities(shape: &Shape) -> [(usize, usize); 2] {
    let conj = shape.conjugate();
    let tri = |p: usize| p * (p + 1) / 2;
    [
        (shape.row_weighted_size(), conj.parts().iter().map(|&p| tri(p)).sum()),
        (conj.row_weighted_size(), shape.parts().iter().map(|&p| tri(p)).sum()),
    ]
}

/// Rows weakly increasing, columns strictly increasing, entries in
/// `1..=max_entry`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ssyt {
    shape: Shape,
    rows: Vec<Vec<usize>>,
    max_entry: usize,
}

impl Ssyt {
    pub fn new(rows: Vec<Vec<usize>>, max_entry: usize) -> Result<Self> {
        let shape = Shape::new(rows.iter().map(Vec::len).collect())?;
        for (r, row) in rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if v == 0 || v > max_entry {
                    return Err(Error::InvalidArray(format!("entry {v} outside 1..={max_entry}")));
                }
                if c > 0 && row[c - 1] > v {
                    return Err(Error::InvalidArray(format!("row {} decreases", r + 1)));
                }
                if r > 0 && rows[r - 1][c] >= v {
                    return Err(Error::InvalidArray(format!("column {} not strict", c + 1)));
                }
            }
        }
        Ok(Self { shape, rows, max_entry })
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn max_entry(&self) -> usize {
        self.max_entry
    }

    pub fn entry(&self, row: usize, col: usize) -> usize {
        self.rows[row - 1][col - 1]
    }

    /// Sum of the entries.
    pub fn norm(&self) -> usize {
        self.rows.iter().flatten().sum()
    }
}

/// Every SSYT of `shape` with entries at most `max_entry`.
pub fn enumerate_ssyt(shape: &Shape, max_entry: usize, limit: EnumLimit) -> Result<Vec<Ssyt>> {
    struct Walk<'a> {
        cells: Vec<(usize, usize)>,
        rows: Vec<Vec<usize>>,
        max_entry: usize,
        limit: EnumLimit,
        out: &'a mut Vec<Ssyt>,
    }

    impl Walk<'_> {
        fn go(&mut self, k: usize) -> Result<()> {
            if k == self.cells.len() {
                self.limit.check(&BigInt::from(self.out.len() + 1))?;
                self.out.push(Ssyt {
                    shape: Shape(self.rows.iter().map(Vec::len).collect()),
                    rows: self.rows.clone(),
                    max_entry: self.max_entry,
                });
                return Ok(());
            }
            let (r, c) = self.cells[k];
            let mut lo = 1;
            if c > 1 {
                lo = lo.max(self.rows[r - 1][c - 2]);
            }
            if r > 1 {
                lo = lo.max(self.rows[r - 2][c - 1] + 1);
            }
            for v in lo..=self.max_entry {
                self.rows[r - 1][c - 1] = v;
                self.go(k + 1)?;
            }
            Ok(())
        }
    }

    let mut out = Vec::new();
    let mut walk = Walk {
        cells: shape.cells().collect(),
        rows: shape.parts().iter().map(|&p| vec![0; p]).collect(),
        max_entry,
        limit,
        out: &mut out,
    };
    walk.go(0)?;
    Ok(out)
}

/// `sum_T q^{norm T}` over SSYT of `shape` with entries in `1..=max_entry`,
/// from the hook-content product
/// `q^{sum i lambda_i} prod (1 - q^{max_entry + content}) / (1 - q^{hook})`.
///
/// The numerator is multiplied out completely and then divided exactly by
/// each hook factor. A shape with more rows than `max_entry` has a cell of
/// content `-max_entry`, whose factor `1 - q^0` vanishes.
pub fn hook_content_gf(shape: &Shape, max_entry: usize) -> Result<QPolynomial> {
    let m = max_entry as i64;
    let mut num = QPolynomial::monomial(shape.row_weighted_size());
    for (r, c) in shape.cells() {
        let e = m + shape.content(r, c);
        if e <= 0 {
            return Ok(QPolynomial::zero());
        }
        num = &num * &QPolynomial::one_minus_q_pow(e as usize);
    }
    for (r, c) in shape.cells() {
        num = num.div_exact(&QPolynomial::one_minus_q_pow(shape.hook(r, c)))?;
    }
    Ok(num)
}

/// Mean norm of the SSYT of `shape` with entries at most `max_entry`, as
/// `p'(1) / p(1)` of the hook-content generating function.
pub fn mean_norm_ssyt(shape: &Shape, max_entry: usize) -> Result<Rational> {
    let gf = hook_content_gf(shape, max_entry)?;
    if gf.is_zero() {
        return Err(Error::NoTableaux { max_entry });
    }
    Ok(Rational::new(gf.derivative_at_one(), gf.eval_at_one()))
}

/// `(max_entry + 1) |lambda| / 2`.
pub fn mean_norm_ssyt_closed_form(shape: &Shape, max_entry: usize) -> Rational {
    rat(((max_entry + 1) * shape.size()) as i64, 2)
}

/// Parameters of an `(n; k_1, ..., k_a)`-array: a filling of the staircase
/// `F = {(i, j) : 1 <= i <= a, 1 <= j <= i + n}` with entries at most `c`,
/// rows and columns weakly decreasing, and `T(i, i + n) = k_i`.
///
/// `n = 0` and `k_i = 0` are both allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NkParams {
    a: usize,
    n: usize,
    c: usize,
    k: Vec<usize>,
}

impl NkParams {
    pub fn new(a: usize, n: usize, c: usize, k: Vec<usize>) -> Result<Self> {
        if a == 0 || k.len() != a {
            return Err(Error::InvalidArray(format!(
                "need {a} > 0 boundary values, got {}",
                k.len()
            )));
        }
        if k.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArray(format!("boundary {k:?} is not decreasing")));
        }
        if k.iter().any(|&v| v > c) {
            return Err(Error::InvalidArray(format!("boundary {k:?} exceeds {c}")));
        }
        Ok(Self { a, n, c, k })
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn c(&self) -> usize {
        self.c
    }

    pub fn k(&self) -> &[usize] {
        &self.k
    }

    pub fn k_sum(&self) -> usize {
        self.k.iter().sum()
    }

    /// Cells of the staircase in row-major order.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        (1..=self.a)
            .flat_map(|i| (1..=i + self.n).map(move |j| (i, j)))
            .collect()
    }

    /// Shape of the matching tableaux, `(c - k_a, ..., c - k_1)`.
    pub fn ssyt_shape(&self) -> Shape {
        Shape::from_padded(self.k.iter().rev().map(|&v| self.c - v).collect()).expect("c - k is weakly decreasing")
    }

    /// Largest tableau entry, `a + n`.
    pub fn ssyt_max_entry(&self) -> usize {
        self.a + self.n
    }

    /// All parameter tuples with the given sizes: every decreasing `k` over
    /// `0..=c`.
    pub fn all(a: usize, n: usize, c: usize) -> Vec<NkParams> {
        fn go(a: usize, bound: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if prefix.len() == a {
                out.push(prefix.clone());
                return;
            }
            for v in 0..=bound {
                prefix.push(v);
                go(a, v, prefix, out);
                prefix.pop();
            }
        }
        let mut ks = Vec::new();
        go(a, c, &mut Vec::new(), &mut ks);
        ks.into_iter().map(|k| NkParams { a, n, c, k }).collect()
    }
}

/// One `(n; k)`-array; `rows[i - 1]` has `i + n` entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NkArray {
    rows: Vec<Vec<usize>>,
    c: usize,
    n: usize,
}

impl NkArray {
    pub fn new(params: &NkParams, rows: Vec<Vec<usize>>) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidArray(msg));
        if rows.len() != params.a || rows.iter().enumerate().any(|(i, r)| r.len() != i + 1 + params.n) {
            return bad("rows do not match the staircase".into());
        }
        for (i, row) in rows.iter().enumerate() {
            if row[i + params.n] != params.k[i] {
                return bad(format!("boundary of row {} is not {}", i + 1, params.k[i]));
            }
            for (j, &v) in row.iter().enumerate() {
                if v > params.c {
                    return bad(format!("entry {v} exceeds {}", params.c));
                }
                if j > 0 && row[j - 1] < v {
                    return bad(format!("row {} increases", i + 1));
                }
                if i > 0 && j < rows[i - 1].len() && rows[i - 1][j] < v {
                    return bad(format!("column {} increases", j + 1));
                }
            }
        }
        Ok(Self {
            rows,
            c: params.c,
            n: params.n,
        })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn a(&self) -> usize {
        self.rows.len()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn c(&self) -> usize {
        self.c
    }

    pub fn entry(&self, i: usize, j: usize) -> usize {
        self.rows[i - 1][j - 1]
    }

    pub fn k(&self) -> Vec<usize> {
        self.rows.iter().map(|r| *r.last().expect("nonempty row")).collect()
    }

    pub fn params(&self) -> NkParams {
        NkParams {
            a: self.a(),
            n: self.n,
            c: self.c,
            k: self.k(),
        }
    }

    /// Sum over the whole staircase.
    pub fn norm(&self) -> usize {
        self.rows.iter().flatten().sum()
    }

    /// Sum over the staircase minus its boundary diagonal `j = i + n`.
    pub fn interior_norm(&self) -> usize {
        self.norm() - self.k().iter().sum::<usize>()
    }
}

/// Every `(n; k)`-array for `params`.
pub fn enumerate_nk_arrays(params: &NkParams, limit: EnumLimit) -> Result<Vec<NkArray>> {
    struct Walk<'a> {
        p: &'a NkParams,
        rows: Vec<Vec<usize>>,
        limit: EnumLimit,
        out: Vec<NkArray>,
    }

    impl Walk<'_> {
        fn go(&mut self, i: usize, j: usize) -> Result<()> {
            let n = self.p.n;
            if i > self.p.a {
                self.limit.check(&BigInt::from(self.out.len() + 1))?;
                self.out.push(NkArray {
                    rows: self.rows.clone(),
                    c: self.p.c,
                    n,
                });
                return Ok(());
            }
            let boundary = self.p.k[i - 1];
            if j == i + n {
                let fits_left = j == 1 || self.rows[i - 1][j - 2] >= boundary;
                if fits_left {
                    self.rows[i - 1][j - 1] = boundary;
                    self.go(i + 1, 1)?;
                }
                return Ok(());
            }
            let mut hi = self.p.c;
            if j > 1 {
                hi = hi.min(self.rows[i - 1][j - 2]);
            }
            if i > 1 && j <= i - 1 + n {
                hi = hi.min(self.rows[i - 2][j - 1]);
            }
            for v in boundary..=hi {
                self.rows[i - 1][j - 1] = v;
                self.go(i, j + 1)?;
            }
            Ok(())
        }
    }

    let mut walk = Walk {
        p: params,
        rows: (1..=params.a).map(|i| vec![0; i + params.n]).collect(),
        limit,
        out: Vec::new(),
    };
    walk.go(1, 1)?;
    Ok(walk.out)
}

/// `(A, S)`: how many arrays there are and the total of their interior norms.
pub fn nk_counts(params: &NkParams, limit: EnumLimit) -> Result<(BigInt, BigInt)> {
    let arrays = enumerate_nk_arrays(params, limit)?;
    let s: BigInt = arrays.iter().map(|t| BigInt::from(t.interior_norm())).sum();
    Ok((BigInt::from(arrays.len()), s))
}

/// Mean interior norm: `(nac + (a + n - 1) sum k) / 2`.
pub fn mean_norm_nk(params: &NkParams) -> Rational {
    let (a, n, c) = (params.a as i64, params.n as i64, params.c as i64);
    rat(n * a * c + (a + n - 1) * params.k_sum() as i64, 2)
}

/// Mean full norm, boundary included: `(nac + (a + n + 1) sum k) / 2`.
pub fn mean_full_norm_nk(params: &NkParams) -> Rational {
    let (a, n, c) = (params.a as i64, params.n as i64, params.c as i64);
    rat(n * a * c + (a + n + 1) * params.k_sum() as i64, 2)
}

/// Array to tableau.
///
/// Complement every entry to `c - T`; row `i` is then a partition (read
/// right to left) with largest part `c - k_i`. Its conjugate, sorted
/// increasingly and right-justified, becomes row `i` of a reverse tableau;
/// rotating by 180 degrees and replacing `e` by `a + n + 1 - e` yields an
/// SSYT of shape `(c - k_a, ..., c - k_1)` with entries in `1..=a + n`.
pub fn array_to_ssyt(t: &NkArray) -> Ssyt {
    let (a, n, c) = (t.a(), t.n, t.c);
    let top = a + n + 1;
    // conj[i - 1][r] = #{j : c - T(i, j) > r}, r = 0 .. c - k_i
    let conj: Vec<Vec<usize>> = t
        .rows
        .iter()
        .map(|row| {
            let len = c - row.last().expect("nonempty row");
            (0..len).map(|r| row.iter().filter(|&&v| c - v > r).count()).collect()
        })
        .collect();
    let rows: Vec<Vec<usize>> = (1..=a)
        .map(|out_row| conj[a - out_row].iter().map(|&w| top - w).collect())
        .take_while(|r: &Vec<usize>| !r.is_empty())
        .collect();
    Ssyt {
        shape: Shape(rows.iter().map(Vec::len).collect()),
        rows,
        max_entry: a + n,
    }
}

/// Tableau to array; inverse of [`array_to_ssyt`].
pub fn ssyt_to_array(tab: &Ssyt, a: usize, n: usize, c: usize) -> Result<NkArray> {
    let top = a + n + 1;
    if tab.shape.rows() > a {
        return Err(Error::ShapeMismatch(format!("{} rows but a = {a}", tab.shape.rows())));
    }
    if tab.shape.parts().first().is_some_and(|&p| p > c) {
        return Err(Error::ShapeMismatch(format!("first row longer than c = {c}")));
    }
    if tab.rows.iter().flatten().any(|&v| v > a + n) {
        return Err(Error::ShapeMismatch(format!("entries exceed a + n = {}", a + n)));
    }
    let k: Vec<usize> = (1..=a)
        .map(|i| c - tab.shape.parts().get(a - i).copied().unwrap_or(0))
        .collect();
    let params = NkParams::new(a, n, c, k)?;
    let mut rows = Vec::with_capacity(a);
    for i in 1..=a {
        let conj: Vec<usize> = tab
            .rows
            .get(a - i)
            .map(|r| r.iter().map(|&e| top - e).collect())
            .unwrap_or_default();
        if conj.iter().any(|&w| w > i + n) {
            return Err(Error::ShapeMismatch(format!(
                "row {} does not fit the staircase",
                a + 1 - i
            )));
        }
        let row: Vec<usize> = (1..=i + n)
            .map(|j| c - conj.iter().filter(|&&w| w > i + n - j).count())
            .collect();
        rows.push(row);
    }
    NkArray::new(&params, rows)
}

/// `n(T) = c (an + a(a + 1)/2) - (a + n + 1)(ac - sum k) + n(T')`.
pub fn check_norm_relation(t: &NkArray) -> bool {
    let (a, n, c) = (t.a() as i64, t.n as i64, t.c as i64);
    let k_sum: i64 = t.k().iter().sum::<usize>() as i64;
    let tab = array_to_ssyt(t);
    let rhs = c * (a * n + (a + 1) * a / 2) - (a + n + 1) * (a * c - k_sum) + tab.norm() as i64;
    t.norm() as i64 == rhs
}

/// `sum_T q^{norm T}` straight from a list of tableaux.
pub fn norm_generating_function(tableaux: &[Ssyt]) -> QPolynomial {
    let degree = tableaux.iter().map(Ssyt::norm).max().unwrap_or(0);
    let mut coeffs = vec![BigInt::zero(); degree + 1];
    for t in tableaux {
        coeffs[t.norm()] += 1;
    }
    QPolynomial::new(coeffs)
}
