//! Dense matrices over arbitrary-precision rationals, plus the elimination
//! subroutines the rest of the crate consumes: rank/nullspace, commutant of a
//! matrix family, and multiplicative span closure.
//!
//! Elimination is fraction-free: rows are cleared to primitive integer
//! vectors and combined Bareiss-style, so coefficients stay small even though
//! every result is exact.

use crate::{Error, Result};
use num::integer::Integer;
use num::{BigInt, BigRational, One, Signed, Zero};

/// Exact rational scalar; always stored in lowest terms with positive denominator.
pub type Rational = BigRational;

/// Rational `p/q` from machine integers. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Rational from a machine integer.
pub fn ri(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

/// Parses `"p"` or `"p/q"` into a rational in lowest terms.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let parse_int = |t: &str| -> Result<BigInt> {
        t.trim()
            .parse::<BigInt>()
            .map_err(|_| Error::InvalidInput(format!("not an integer: {t:?}")))
    };
    match s.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(s)?)),
        Some((p, q)) => {
            let num = parse_int(p)?;
            let den = parse_int(q)?;
            if den.is_zero() {
                return Err(Error::InvalidInput(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(num, den))
        }
    }
}

/// Canonical text form: lowest terms, positive denominator, no `/1` suffix.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Dense row-major matrix over [`Rational`].
#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl ExactMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        ExactMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(d: usize) -> Self {
        let mut m = ExactMatrix::zero(d, d);
        for i in 0..d {
            m.entries[i * d + i] = Rational::one();
        }
        m
    }

    /// `c * Id_d`.
    pub fn scalar(d: usize, c: &Rational) -> Self {
        let mut m = ExactMatrix::zero(d, d);
        for i in 0..d {
            m.entries[i * d + i] = c.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        if rows.is_empty() || rows[0].is_empty() {
            return Err(Error::Shape("matrix must be nonempty".into()));
        }
        let cols = rows[0].len();
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Ok(ExactMatrix {
            rows: rows.len(),
            cols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Convenience constructor from machine integers.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        ExactMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| ri(x)).collect())
                .collect(),
        )
        .expect("literal matrix must be rectangular and nonempty")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rational::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = self.get(i, j);
                    if i == j {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    pub fn is_diagonal(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    /// Diagonal entries of a square matrix.
    pub fn diagonal(&self) -> Vec<Rational> {
        assert!(self.is_square(), "diagonal of a non-square matrix");
        (0..self.rows).map(|i| self.get(i, i).clone()).collect()
    }

    pub fn transpose(&self) -> ExactMatrix {
        let mut t = ExactMatrix::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.entries[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        t
    }

    pub fn trace(&self) -> Result<Rational> {
        if !self.is_square() {
            return Err(Error::Shape(format!(
                "trace of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        Ok((0..self.rows).map(|i| self.get(i, i)).sum())
    }

    pub fn add(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        self.check_same_shape(other, "add")?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        Ok(ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn sub(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        self.check_same_shape(other, "sub")?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a - b)
            .collect();
        Ok(ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn neg(&self) -> ExactMatrix {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> ExactMatrix {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| a * c).collect(),
        }
    }

    /// Matrix product. Skips zero entries of `self`, which makes words in the
    /// very sparse generator matrices cheap to evaluate.
    pub fn mul(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "mul of {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = vec![Rational::zero(); self.rows * other.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(ExactMatrix {
            rows: self.rows,
            cols: other.cols,
            entries: out,
        })
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &ExactMatrix) -> ExactMatrix {
        let mut out = ExactMatrix::zero(self.rows + other.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c).clone());
            }
        }
        for r in 0..other.rows {
            for c in 0..other.cols {
                out.set(self.rows + r, self.cols + c, other.get(r, c).clone());
            }
        }
        out
    }

    /// Submatrix picking `idx` rows and columns (square selection).
    pub fn principal_submatrix(&self, idx: &[usize]) -> ExactMatrix {
        let mut out = ExactMatrix::zero(idx.len(), idx.len());
        for (r, &i) in idx.iter().enumerate() {
            for (c, &j) in idx.iter().enumerate() {
                out.set(r, c, self.get(i, j).clone());
            }
        }
        out
    }

    /// Row-major flattening, used when matrices are treated as vectors in d².
    pub fn flatten(&self) -> &[Rational] {
        &self.entries
    }

    fn check_same_shape(&self, other: &ExactMatrix, op: &str) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Shape(format!(
                "{op} of {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }
}

impl std::fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "ExactMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|c| format_rational(self.get(r, c)))
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

// ---------------------------------------------------------------------------
// Fraction-free row echelon accumulator.
// ---------------------------------------------------------------------------

/// A sparse integer row: nonzero entries sorted by column. The first entry is
/// the pivot; rows are primitive (content 1) with positive pivot.
#[derive(Clone, Debug)]
struct SparseRow {
    entries: Vec<(usize, BigInt)>,
}

impl SparseRow {
    fn pivot(&self) -> usize {
        self.entries[0].0
    }

    fn lead(&self) -> &BigInt {
        &self.entries[0].1
    }

    fn coeff(&self, col: usize) -> Option<&BigInt> {
        self.entries
            .binary_search_by_key(&col, |&(c, _)| c)
            .ok()
            .map(|i| &self.entries[i].1)
    }
}

fn normalize(entries: &mut Vec<(usize, BigInt)>) {
    entries.retain(|(_, v)| !v.is_zero());
    if entries.is_empty() {
        return;
    }
    let mut g = BigInt::zero();
    for (_, v) in entries.iter() {
        g = g.gcd(v);
    }
    if entries[0].1.is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for (_, v) in entries.iter_mut() {
            *v = &*v / &g;
        }
    }
}

/// `a*u - b*v` over sorted sparse vectors.
fn combine(
    a: &BigInt,
    u: &[(usize, BigInt)],
    b: &BigInt,
    v: &[(usize, BigInt)],
) -> Vec<(usize, BigInt)> {
    let mut out = Vec::with_capacity(u.len() + v.len());
    let (mut i, mut j) = (0, 0);
    while i < u.len() || j < v.len() {
        match (u.get(i), v.get(j)) {
            (Some(&(cu, ref xu)), Some(&(cv, ref xv))) if cu == cv => {
                let val = a * xu - b * xv;
                if !val.is_zero() {
                    out.push((cu, val));
                }
                i += 1;
                j += 1;
            }
            (Some(&(cu, ref xu)), Some(&(cv, _))) if cu < cv => {
                out.push((cu, a * xu));
                i += 1;
            }
            (Some(_), Some(&(cv, ref xv))) => {
                out.push((cv, -(b * xv)));
                j += 1;
            }
            (Some(&(cu, ref xu)), None) => {
                out.push((cu, a * xu));
                i += 1;
            }
            (None, Some(&(cv, ref xv))) => {
                out.push((cv, -(b * xv)));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

/// Incremental row echelon form over ℚ with primitive-integer rows.
struct Echelon {
    cols: usize,
    /// Rows kept sorted by pivot column.
    rows: Vec<SparseRow>,
}

impl Echelon {
    fn new(cols: usize) -> Self {
        Echelon {
            cols,
            rows: Vec::new(),
        }
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }

    fn sparse_from_rationals(v: &[Rational]) -> Vec<(usize, BigInt)> {
        let mut lcm = BigInt::one();
        for x in v {
            if !x.is_zero() {
                lcm = lcm.lcm(x.denom());
            }
        }
        v.iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(c, x)| (c, x.numer() * (&lcm / x.denom())))
            .collect()
    }

    /// Reduces `v` against the current rows; returns the surviving primitive row.
    fn reduce(&self, mut v: Vec<(usize, BigInt)>) -> Option<Vec<(usize, BigInt)>> {
        normalize(&mut v);
        let mut row_idx = 0;
        while !v.is_empty() && row_idx < self.rows.len() {
            let lead_col = v[0].0;
            // Skip rows whose pivot is left of the current leading column.
            while row_idx < self.rows.len() && self.rows[row_idx].pivot() < lead_col {
                row_idx += 1;
            }
            if row_idx == self.rows.len() {
                break;
            }
            let row = &self.rows[row_idx];
            if row.pivot() == lead_col {
                let c = v[0].1.clone();
                v = combine(row.lead(), &v, &c, &row.entries);
                normalize(&mut v);
            } else {
                // No pivot at the leading column: v survives. Entries further
                // right at pivot columns are cleared below for cleanliness,
                // but are not required for rank counting.
                break;
            }
        }
        // Clear any remaining entries sitting on pivot columns to the right.
        loop {
            let mut hit = None;
            for (c, _) in v.iter() {
                if let Ok(i) = self.rows.binary_search_by_key(c, |r| r.pivot()) {
                    hit = Some(i);
                    break;
                }
            }
            match hit {
                None => break,
                Some(i) => {
                    let row = &self.rows[i];
                    let c = v
                        .iter()
                        .find(|(col, _)| *col == row.pivot())
                        .map(|(_, x)| x.clone())
                        .unwrap();
                    v = combine(row.lead(), &v, &c, &row.entries);
                    normalize(&mut v);
                }
            }
        }
        if v.is_empty() {
            None
        } else {
            Some(v)
        }
    }

    /// Inserts a rational vector; returns true if it enlarged the row space.
    fn insert_rationals(&mut self, v: &[Rational]) -> bool {
        debug_assert_eq!(v.len(), self.cols);
        self.insert_sparse(Self::sparse_from_rationals(v))
    }

    fn insert_sparse(&mut self, v: Vec<(usize, BigInt)>) -> bool {
        match self.reduce(v) {
            None => false,
            Some(row) => {
                let pos = self
                    .rows
                    .binary_search_by_key(&row[0].0, |r| r.pivot())
                    .unwrap_err();
                self.rows.insert(pos, SparseRow { entries: row });
                true
            }
        }
    }

    /// Back-eliminates so each pivot column has a single nonzero entry.
    fn finalize_rref(&mut self) {
        for i in (0..self.rows.len()).rev() {
            let (pivot, lead, entries) = {
                let r = &self.rows[i];
                (r.pivot(), r.lead().clone(), r.entries.clone())
            };
            for j in 0..i {
                if let Some(c) = self.rows[j].coeff(pivot).cloned() {
                    let mut combined = combine(&lead, &self.rows[j].entries, &c, &entries);
                    normalize(&mut combined);
                    self.rows[j] = SparseRow { entries: combined };
                }
            }
        }
    }

    /// Basis of the right nullspace. Requires `finalize_rref` to have run.
    fn nullspace(&self) -> Vec<Vec<Rational>> {
        let pivots: Vec<usize> = self.rows.iter().map(|r| r.pivot()).collect();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for f in 0..self.cols {
            if is_pivot[f] {
                continue;
            }
            let mut x = vec![Rational::zero(); self.cols];
            x[f] = Rational::one();
            for row in &self.rows {
                if let Some(c) = row.coeff(f) {
                    x[row.pivot()] = -Rational::new(c.clone(), row.lead().clone());
                }
            }
            basis.push(x);
        }
        basis
    }
}

// ---------------------------------------------------------------------------
// Public elimination-based operations.
// ---------------------------------------------------------------------------

/// Exact rank and a basis of the right nullspace.
pub fn rank_nullspace(m: &ExactMatrix) -> (usize, Vec<Vec<Rational>>) {
    let mut ech = Echelon::new(m.cols());
    for r in 0..m.rows() {
        let row: Vec<Rational> = (0..m.cols()).map(|c| m.get(r, c).clone()).collect();
        ech.insert_rationals(&row);
    }
    ech.finalize_rref();
    (ech.rank(), ech.nullspace())
}

/// The commutant of a family of `d`×`d` matrices: all `X` with `XM = MX` for
/// every `M`, solved as one linear system in the d² entries of `X`.
///
/// Returns the dimension and an exact basis. The identity always commutes, so
/// the dimension is at least 1.
pub fn commutant(mats: &[ExactMatrix], d: usize) -> Result<(usize, Vec<ExactMatrix>)> {
    for m in mats {
        if m.rows() != d || m.cols() != d {
            return Err(Error::Shape(format!(
                "commutant expects {d}x{d} matrices, got {}x{}",
                m.rows(),
                m.cols()
            )));
        }
    }
    let mut ech = Echelon::new(d * d);
    // Diagonal matrices first: their constraints are single-entry rows and
    // kill most unknowns before the dense constraints arrive.
    let mut ordered: Vec<&ExactMatrix> = mats.iter().filter(|m| m.is_diagonal()).collect();
    ordered.extend(mats.iter().filter(|m| !m.is_diagonal()));
    'outer: for m in ordered {
        for a in 0..d {
            for b in 0..d {
                // (XM - MX)[a,b] = sum_k X[a,k] M[k,b] - M[a,k] X[k,b]
                let mut coeffs: std::collections::BTreeMap<usize, Rational> =
                    std::collections::BTreeMap::new();
                for k in 0..d {
                    let mkb = m.get(k, b);
                    if !mkb.is_zero() {
                        *coeffs.entry(a * d + k).or_insert_with(Rational::zero) += mkb;
                    }
                    let mak = m.get(a, k);
                    if !mak.is_zero() {
                        *coeffs.entry(k * d + b).or_insert_with(Rational::zero) -= mak;
                    }
                }
                // The map is empty or carries the equation's coefficients;
                // clear denominators to get a primitive integer row.
                let mut lcm = BigInt::one();
                for v in coeffs.values() {
                    if !v.is_zero() {
                        lcm = lcm.lcm(v.denom());
                    }
                }
                let row: Vec<(usize, BigInt)> = coeffs
                    .into_iter()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(col, v)| (col, v.numer() * (&lcm / v.denom())))
                    .collect();
                ech.insert_sparse(row);
                if ech.rank() == d * d - 1 {
                    // Identity always commutes; the rank cannot grow further.
                    break 'outer;
                }
            }
        }
    }
    ech.finalize_rref();
    let basis = ech
        .nullspace()
        .into_iter()
        .map(|x| {
            let mut m = ExactMatrix::zero(d, d);
            for (i, v) in x.into_iter().enumerate() {
                m.set(i / d, i % d, v);
            }
            m
        })
        .collect::<Vec<_>>();
    Ok((basis.len(), basis))
}

/// Dimension of the smallest multiplicatively closed subspace of d×d matrices
/// containing the inputs (and the identity when requested).
///
/// Breadth-first: multiply the current basis by each generator and re-reduce
/// until the dimension stabilizes. Terminates since the dimension is bounded
/// by d²; a round cap of d²+1 guards against bugs.
pub fn span_closure(mats: &[ExactMatrix], include_identity: bool) -> Result<usize> {
    span_closure_basis(mats, include_identity).map(|b| b.len())
}

/// Same as [`span_closure`] but returns an explicit basis of the closure.
pub fn span_closure_basis(
    mats: &[ExactMatrix],
    include_identity: bool,
) -> Result<Vec<ExactMatrix>> {
    if mats.is_empty() && !include_identity {
        return Ok(Vec::new());
    }
    let d = if mats.is_empty() {
        0
    } else {
        let d = mats[0].rows();
        for m in mats {
            if !m.is_square() || m.rows() != d {
                return Err(Error::Shape(
                    "span_closure expects equal square matrices".into(),
                ));
            }
        }
        d
    };
    if d == 0 {
        // include_identity with no matrices: degenerate, treat as 1-dim.
        return Ok(vec![ExactMatrix::identity(1)]);
    }
    let dim_cap = d * d;
    let mut ech = Echelon::new(dim_cap);
    let mut basis: Vec<ExactMatrix> = Vec::new();
    let mut frontier: Vec<usize> = Vec::new();
    let push = |m: ExactMatrix, ech: &mut Echelon, basis: &mut Vec<ExactMatrix>| -> Option<usize> {
        if ech.insert_rationals(m.flatten()) {
            basis.push(m);
            Some(basis.len() - 1)
        } else {
            None
        }
    };
    if include_identity {
        if let Some(i) = push(ExactMatrix::identity(d), &mut ech, &mut basis) {
            frontier.push(i);
        }
    }
    for m in mats {
        if let Some(i) = push(m.clone(), &mut ech, &mut basis) {
            frontier.push(i);
        }
    }
    let mut rounds = 0usize;
    while !frontier.is_empty() && basis.len() < dim_cap {
        rounds += 1;
        if rounds > dim_cap + 1 {
            unreachable!("span closure exceeded the dimension-bound round cap");
        }
        let mut next = Vec::new();
        'round: for &bi in &frontier {
            for g in mats {
                let prod = g.mul(&basis[bi])?;
                if let Some(i) = push(prod, &mut ech, &mut basis) {
                    next.push(i);
                }
                if basis.len() == dim_cap {
                    break 'round;
                }
            }
        }
        frontier = next;
    }
    Ok(basis)
}
