//! Incremental Gaussian elimination to reduced row-echelon form.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use super::{Scalar, SparseMatrix, SparseVec};

/// Dense scratch space for reducing one vector against a set of pivot rows.
struct Workspace {
    values: Vec<Scalar>,
    touched: Vec<usize>,
    marked: Vec<bool>,
    heap: BinaryHeap<Reverse<usize>>,
}

impl Workspace {
    fn new(dim: usize) -> Self {
        Self {
            values: vec![Scalar::ZERO; dim],
            touched: Vec::new(),
            marked: vec![false; dim],
            heap: BinaryHeap::new(),
        }
    }

    fn add(&mut self, i: usize, c: &Scalar) {
        if !self.marked[i] {
            self.marked[i] = true;
            self.touched.push(i);
        }
        self.values[i] += c;
    }

    fn take(&mut self) -> SparseVec {
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

/// Eliminates `v` against `rows` (indexed through `pivot_row`), in increasing
/// column order. Each stored row has a unit leading entry at its pivot column.
fn reduce_into(
    ws: &mut Workspace,
    rows: &[SparseVec],
    pivot_row: &[Option<usize>],
    v: &SparseVec,
) -> SparseVec {
    for (i, c) in v.iter() {
        ws.add(i, c);
        if pivot_row[i].is_some() {
            ws.heap.push(Reverse(i));
        }
    }
    let mut last = usize::MAX;
    while let Some(Reverse(c)) = ws.heap.pop() {
        if c == last {
            continue;
        }
        last = c;
        let x = ws.values[c].clone();
        if x.is_zero() {
            continue;
        }
        let row = &rows[pivot_row[c].expect("heap holds pivot columns only")];
        let minus_x = -x;
        for (j, y) in row.iter() {
            ws.add(j, &(&minus_x * y));
            if j != c && pivot_row[j].is_some() {
                ws.heap.push(Reverse(j));
            }
        }
    }
    ws.take()
}

/// Row-echelon basis under construction.
///
/// Rows are kept reduced against the pivots that existed when they were
/// inserted; [`EchelonBuilder::finish`] back-substitutes to the unique reduced
/// form.
pub struct EchelonBuilder {
    ncols: usize,
    rows: Vec<SparseVec>,
    pivot_row: Vec<Option<usize>>,
    ws: Workspace,
}

impl EchelonBuilder {
    pub fn new(ncols: usize) -> Self {
        Self {
            ncols,
            rows: Vec::new(),
            pivot_row: vec![None; ncols],
            ws: Workspace::new(ncols),
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ncols
    }

    /// Reduces `v` against the current rows; the result has no entries in
    /// pivot columns and is zero iff `v` lies in the current span.
    pub fn reduce(&mut self, v: &SparseVec) -> SparseVec {
        reduce_into(&mut self.ws, &self.rows, &self.pivot_row, v)
    }

    /// Adds `v` to the span. Returns the new pivot column when `v` was
    /// independent of the rows inserted so far.
    pub fn insert(&mut self, v: &SparseVec) -> Option<usize> {
        assert!(v.support_bound() <= self.ncols, "vector longer than ambient space");
        if self.is_full() {
            return None;
        }
        let r = self.reduce(v);
        let (p, lead) = r.leading()?;
        let r = if lead.is_one() { r.clone() } else { r.scale(&lead.recip()) };
        self.pivot_row[p] = Some(self.rows.len());
        self.rows.push(r);
        Some(p)
    }

    pub fn finish(self) -> Echelon {
        let EchelonBuilder { ncols, rows, pivot_row, mut ws } = self;
        let mut order: Vec<usize> = (0..rows.len()).collect();
        order.sort_by_key(|&k| Reverse(rows[k].leading().map(|(p, _)| p).unwrap()));

        // Back-substitute from the rightmost pivot leftwards; rows already
        // finished are fully reduced, so one pass per row suffices.
        let mut done: Vec<SparseVec> = vec![SparseVec::new(); rows.len()];
        let mut done_pivot: Vec<Option<usize>> = vec![None; ncols];
        for k in order {
            let row = &rows[k];
            let (p, _) = row.leading().unwrap();
            let tail = SparseVec::from_sorted_unchecked(row.entries()[1..].to_vec());
            let reduced = reduce_into(&mut ws, &done, &done_pivot, &tail);
            let mut entries = Vec::with_capacity(reduced.nnz() + 1);
            entries.push((p, Scalar::ONE));
            entries.extend(reduced.into_entries());
            done[k] = SparseVec::from_sorted_unchecked(entries);
            done_pivot[p] = Some(k);
        }
        let _ = pivot_row;

        let mut indexed: Vec<(usize, SparseVec)> =
            done.into_iter().map(|r| (r.leading().unwrap().0, r)).collect();
        indexed.sort_by_key(|(p, _)| *p);
        let mut pivot_index = vec![None; ncols];
        let mut pivots = Vec::with_capacity(indexed.len());
        let mut out_rows = Vec::with_capacity(indexed.len());
        for (k, (p, r)) in indexed.into_iter().enumerate() {
            pivot_index[p] = Some(k);
            pivots.push(p);
            out_rows.push(r);
        }
        Echelon { ncols, rows: out_rows, pivots, pivot_index }
    }
}

/// A subspace in reduced row-echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    ncols: usize,
    rows: Vec<SparseVec>,
    pivots: Vec<usize>,
    pivot_index: Vec<Option<usize>>,
}

impl Echelon {
    pub fn from_vectors<'a>(ncols: usize, vectors: impl IntoIterator<Item = &'a SparseVec>) -> Self {
        let mut b = EchelonBuilder::new(ncols);
        for v in vectors {
            b.insert(v);
        }
        b.finish()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn pivot_row(&self, col: usize) -> Option<&SparseVec> {
        self.pivot_index[col].map(|k| &self.rows[k])
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_index[col].is_some()
    }

    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ncols).filter(|&c| self.pivot_index[c].is_none()).collect()
    }

    /// `v` minus its component along the subspace, expressed with zero
    /// entries in every pivot column.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut out = v.clone();
        for (i, c) in v.iter() {
            if let Some(k) = self.pivot_index[i] {
                out = out.add_scaled(&-c, &self.rows[k]);
            }
        }
        out
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Coordinates of `v` with respect to the echelon rows, when `v` lies in
    /// the span.
    pub fn coordinates(&self, v: &SparseVec) -> Option<SparseVec> {
        if !self.contains(v) {
            return None;
        }
        Some(SparseVec::from_entries(
            v.iter()
                .filter_map(|(i, c)| self.pivot_index[i].map(|k| (k, c.clone())))
                .collect(),
        ))
    }

    pub fn to_matrix(&self) -> SparseMatrix {
        SparseMatrix::from_rows(self.ncols, self.rows.clone())
    }

    /// Basis of the null space of the row space (vectors `x` with `r . x = 0`
    /// for every row `r`), one vector per free column.
    pub fn null_space(&self) -> Vec<SparseVec> {
        let free = self.free_columns();
        let mut by_free: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); self.ncols];
        for (k, row) in self.rows.iter().enumerate() {
            let p = self.pivots[k];
            for (j, c) in row.iter().skip(1) {
                by_free[j].push((p, -c));
            }
        }
        free.into_iter()
            .map(|f| {
                let mut entries = std::mem::take(&mut by_free[f]);
                entries.push((f, Scalar::ONE));
                SparseVec::from_entries(entries)
            })
            .collect()
    }
}

/// Reduced row-echelon form of `m`: the echelon matrix (zero rows dropped),
/// its pivot columns in increasing order, and the rank.
pub fn rref(m: &SparseMatrix) -> (SparseMatrix, Vec<usize>, usize) {
    let e = Echelon::from_vectors(m.ncols(), m.rows());
    let rank = e.rank();
    (e.to_matrix(), e.pivots().to_vec(), rank)
}

pub fn rank(m: &SparseMatrix) -> usize {
    Echelon::from_vectors(m.ncols(), m.rows()).rank()
}

/// Basis of `{v : m v = 0}`.
pub fn kernel_basis(m: &SparseMatrix) -> Vec<SparseVec> {
    Echelon::from_vectors(m.ncols(), m.rows()).null_space()
}
