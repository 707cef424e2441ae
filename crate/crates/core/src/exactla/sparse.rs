//! Sparse vectors and matrices over [`Scalar`].

use std::fmt;

use super::Scalar;

/// A sparse vector: entries sorted by index, no stored zeros.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    entries: Vec<(usize, Scalar)>,
}

impl SparseVec {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn unit(i: usize) -> Self {
        Self { entries: vec![(i, Scalar::ONE)] }
    }

    pub fn single(i: usize, c: Scalar) -> Self {
        if c.is_zero() {
            Self::new()
        } else {
            Self { entries: vec![(i, c)] }
        }
    }

    /// Builds a vector from arbitrary `(index, value)` pairs, summing duplicates.
    pub fn from_entries(mut entries: Vec<(usize, Scalar)>) -> Self {
        entries.sort_by_key(|(i, _)| *i);
        let mut out: Vec<(usize, Scalar)> = Vec::with_capacity(entries.len());
        for (i, c) in entries {
            match out.last_mut() {
                Some((j, acc)) if *j == i => *acc += &c,
                _ => out.push((i, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Self { entries: out }
    }

    /// Trusts the caller: indices strictly increasing, values nonzero.
    pub(crate) fn from_sorted_unchecked(entries: Vec<(usize, Scalar)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(entries.iter().all(|(_, c)| !c.is_zero()));
        Self { entries }
    }

    pub fn from_dense(values: &[Scalar]) -> Self {
        Self {
            entries: values
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i, c.clone()))
                .collect(),
        }
    }

    pub fn from_ints(values: &[i64]) -> Self {
        Self::from_dense(&values.iter().map(|&v| Scalar::from_int(v)).collect::<Vec<_>>())
    }

    pub fn to_dense(&self, dim: usize) -> Vec<Scalar> {
        let mut out = vec![Scalar::ZERO; dim];
        for (i, c) in &self.entries {
            out[*i] = c.clone();
        }
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Scalar)> + '_ {
        self.entries.iter().map(|(i, c)| (*i, c))
    }

    pub fn entries(&self) -> &[(usize, Scalar)] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<(usize, Scalar)> {
        self.entries
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> Scalar {
        match self.entries.binary_search_by_key(&i, |(j, _)| *j) {
            Ok(k) => self.entries[k].1.clone(),
            Err(_) => Scalar::ZERO,
        }
    }

    pub fn leading(&self) -> Option<(usize, &Scalar)> {
        self.entries.first().map(|(i, c)| (*i, c))
    }

    /// One past the largest stored index (0 for the zero vector).
    pub fn support_bound(&self) -> usize {
        self.entries.last().map_or(0, |(i, _)| i + 1)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::new();
        }
        Self {
            entries: self.entries.iter().map(|(i, x)| (*i, x * c)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            entries: self.entries.iter().map(|(i, x)| (*i, -x)).collect(),
        }
    }

    /// `self + c * other`, merged in one pass.
    pub fn add_scaled(&self, c: &Scalar, other: &SparseVec) -> SparseVec {
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) => {
                    if i < j {
                        out.push((*i, x.clone()));
                        a.next();
                    } else if j < i {
                        out.push((*j, c * y));
                        b.next();
                    } else {
                        let s = x + &(c * y);
                        if !s.is_zero() {
                            out.push((*i, s));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((i, x)), None) => {
                    out.push((*i, x.clone()));
                    a.next();
                }
                (None, Some((j, y))) => {
                    out.push((*j, c * y));
                    b.next();
                }
                (None, None) => break,
            }
        }
        SparseVec { entries: out }
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        self.add_scaled(&Scalar::ONE, other)
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        self.add_scaled(&-Scalar::ONE, other)
    }

    pub fn dot(&self, other: &SparseVec) -> Scalar {
        let mut acc = Scalar::ZERO;
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        while let (Some((i, x)), Some((j, y))) = (a.peek(), b.peek()) {
            if i < j {
                a.next();
            } else if j < i {
                b.next();
            } else {
                acc += &(x * y);
                a.next();
                b.next();
            }
        }
        acc
    }

    /// Reindexes entries through `f`; entries mapped to `None` are dropped.
    pub fn remap(&self, mut f: impl FnMut(usize) -> Option<usize>) -> SparseVec {
        SparseVec::from_entries(
            self.entries
                .iter()
                .filter_map(|(i, c)| f(*i).map(|j| (j, c.clone())))
                .collect(),
        )
    }

    /// Adds `offset` to every index.
    pub fn shifted(&self, offset: usize) -> SparseVec {
        SparseVec {
            entries: self.entries.iter().map(|(i, c)| (i + offset, c.clone())).collect(),
        }
    }
}

impl fmt::Debug for SparseVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, (i, c)) in self.entries.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{i}:{c}")?;
        }
        f.write_str("]")
    }
}

/// Accumulates a linear combination of sparse vectors in a dense buffer.
///
/// Used for long sums (brackets of combinations, matrix products) where
/// repeated sorted merges would be quadratic.
pub struct DenseAccumulator {
    values: Vec<Scalar>,
    touched: Vec<usize>,
    marked: Vec<bool>,
}

impl DenseAccumulator {
    pub fn new(dim: usize) -> Self {
        Self {
            values: vec![Scalar::ZERO; dim],
            touched: Vec::new(),
            marked: vec![false; dim],
        }
    }

    pub fn add(&mut self, i: usize, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        if !self.marked[i] {
            self.marked[i] = true;
            self.touched.push(i);
        }
        self.values[i] += c;
    }

    pub fn add_scaled(&mut self, c: &Scalar, v: &SparseVec) {
        if c.is_zero() {
            return;
        }
        for (i, x) in v.iter() {
            self.add(i, &(c * x));
        }
    }

    /// Drains the buffer into a sparse vector, leaving it empty for reuse.
    pub fn take(&mut self) -> SparseVec {
        self.touched.sort_unstable();
        let mut out = Vec::with_capacity(self.touched.len());
        for &i in &self.touched {
            self.marked[i] = false;
            let c = std::mem::take(&mut self.values[i]);
            if !c.is_zero() {
                out.push((i, c));
            }
        }
        self.touched.clear();
        SparseVec::from_sorted_unchecked(out)
    }
}

/// A sparse matrix stored by rows.
#[derive(Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    nrows: usize,
    ncols: usize,
    rows: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn zero(nrows: usize, ncols: usize) -> Self {
        Self { nrows, ncols, rows: vec![SparseVec::new(); nrows] }
    }

    pub fn identity(n: usize) -> Self {
        Self { nrows: n, ncols: n, rows: (0..n).map(SparseVec::unit).collect() }
    }

    /// Panics if a row has an entry outside `0..ncols`.
    pub fn from_rows(ncols: usize, rows: Vec<SparseVec>) -> Self {
        assert!(rows.iter().all(|r| r.support_bound() <= ncols), "row entry out of range");
        Self { nrows: rows.len(), ncols, rows }
    }

    pub fn from_columns(nrows: usize, columns: &[SparseVec]) -> Self {
        let mut rows: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); nrows];
        for (j, col) in columns.iter().enumerate() {
            for (i, c) in col.iter() {
                assert!(i < nrows, "column entry out of range");
                rows[i].push((j, c.clone()));
            }
        }
        Self {
            nrows,
            ncols: columns.len(),
            rows: rows.into_iter().map(SparseVec::from_sorted_unchecked).collect(),
        }
    }

    /// Builds from `(row, column, value)` triples; duplicate positions are summed.
    pub fn from_triples(nrows: usize, ncols: usize, triples: &[(usize, usize, Scalar)]) -> Self {
        let mut rows: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); nrows];
        for (i, j, c) in triples {
            assert!(*i < nrows && *j < ncols, "triple out of range");
            rows[*i].push((*j, c.clone()));
        }
        Self { nrows, ncols, rows: rows.into_iter().map(SparseVec::from_entries).collect() }
    }

    pub fn from_dense_ints(rows: &[&[i64]]) -> Self {
        let ncols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(ncols, rows.iter().map(|r| SparseVec::from_ints(r)).collect())
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &SparseVec {
        &self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        self.rows[i].get(j)
    }

    pub fn triples(&self) -> Vec<(usize, usize, Scalar)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().map(move |(j, c)| (i, j, c.clone())))
            .collect()
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(SparseVec::nnz).sum()
    }

    pub fn transpose(&self) -> SparseMatrix {
        SparseMatrix::from_columns(self.ncols, &self.rows)
    }

    pub fn columns(&self) -> Vec<SparseVec> {
        self.transpose().rows
    }

    pub fn mul_vec(&self, v: &SparseVec) -> SparseVec {
        SparseVec::from_sorted_unchecked(
            self.rows
                .iter()
                .enumerate()
                .filter_map(|(i, r)| {
                    let d = r.dot(v);
                    (!d.is_zero()).then_some((i, d))
                })
                .collect(),
        )
    }

    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.ncols, other.nrows, "shape mismatch in matrix product");
        let mut acc = DenseAccumulator::new(other.ncols);
        let rows = self
            .rows
            .iter()
            .map(|r| {
                for (k, c) in r.iter() {
                    acc.add_scaled(c, &other.rows[k]);
                }
                acc.take()
            })
            .collect();
        SparseMatrix { nrows: self.nrows, ncols: other.ncols, rows }
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(SparseVec::is_zero)
    }

    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        self.rows.iter().map(|r| r.to_dense(self.ncols)).collect()
    }
}

impl fmt::Debug for SparseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SparseMatrix {}x{}", self.nrows, self.ncols)?;
        for r in &self.rows {
            writeln!(f, "  {r:?}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_entries_merges_and_drops_zeros() {
        let v = SparseVec::from_entries(vec![
            (3, Scalar::ONE),
            (1, Scalar::from_int(2)),
            (3, -Scalar::ONE),
            (1, Scalar::ONE),
        ]);
        assert_eq!(v.entries(), &[(1, Scalar::from_int(3))]);
    }

    #[test]
    fn add_scaled_cancels() {
        let a = SparseVec::from_ints(&[1, 2, 0, 4]);
        let b = SparseVec::from_ints(&[0, 1, 5, 2]);
        let c = a.add_scaled(&Scalar::from_int(-2), &b);
        assert_eq!(c, SparseVec::from_ints(&[1, 0, -10, 0]));
    }

    #[test]
    fn matrix_product_and_transpose() {
        let a = SparseMatrix::from_dense_ints(&[&[1, 2], &[0, 1]]);
        let b = SparseMatrix::from_dense_ints(&[&[3, 0], &[1, 1]]);
        assert_eq!(a.mul(&b), SparseMatrix::from_dense_ints(&[&[5, 2], &[1, 1]]));
        assert_eq!(a.transpose(), SparseMatrix::from_dense_ints(&[&[1, 0], &[2, 1]]));
        let t = SparseMatrix::from_triples(2, 2, &a.triples());
        assert_eq!(t, a);
    }
}
