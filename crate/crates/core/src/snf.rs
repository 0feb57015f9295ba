//! Smith normal form over the integers.
//!
//! Only the nonzero invariant factors are returned. Two eliminators are
//! provided: a dense one for small matrices and a sparse one that keeps a
//! row-major store plus a column index and prefers small, sparse pivots.

use std::collections::BTreeMap;

use crate::integer::Integer;

/// Matrices with at most this many entries go through the dense eliminator.
pub const DENSE_LIMIT: usize = 10_000;

type Row = Vec<(usize, Integer)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    nrows: usize,
    ncols: usize,
    rows: Vec<Row>,
}

impl SparseMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        SparseMatrix { nrows, ncols, rows: vec![Vec::new(); nrows] }
    }

    /// Rows given as `(column, value)` pairs; zeros are dropped and columns sorted.
    ///
    /// # Panics
    /// If a column index is out of range or repeated within a row.
    pub fn from_rows(ncols: usize, rows: Vec<Vec<(usize, Integer)>>) -> Self {
        let rows: Vec<Row> = rows
            .into_iter()
            .map(|mut r| {
                r.retain(|(_, v)| !v.is_zero());
                r.sort_by_key(|(c, _)| *c);
                assert!(r.windows(2).all(|w| w[0].0 < w[1].0), "repeated column");
                assert!(r.iter().all(|(c, _)| *c < ncols), "column out of range");
                r
            })
            .collect();
        SparseMatrix { nrows: rows.len(), ncols, rows }
    }

    pub fn from_dense(dense: &[Vec<i64>]) -> Self {
        let ncols = dense.first().map_or(0, Vec::len);
        let rows = dense
            .iter()
            .map(|r| {
                assert_eq!(r.len(), ncols, "ragged matrix");
                r.iter().enumerate().map(|(c, &v)| (c, Integer::from(v))).collect()
            })
            .collect();
        SparseMatrix::from_rows(ncols, rows)
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn row(&self, r: usize) -> &[(usize, Integer)] {
        &self.rows[r]
    }

    pub fn to_dense(&self) -> Vec<Vec<Integer>> {
        let mut out = vec![vec![Integer::ZERO; self.ncols]; self.nrows];
        for (r, row) in self.rows.iter().enumerate() {
            for (c, v) in row {
                out[r][*c] = v.clone();
            }
        }
        out
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut rows = vec![Vec::new(); self.ncols];
        for (r, row) in self.rows.iter().enumerate() {
            for (c, v) in row {
                rows[*c].push((r, v.clone()));
            }
        }
        SparseMatrix { nrows: self.ncols, ncols: self.nrows, rows }
    }

    /// `self * other`.
    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.ncols, other.nrows, "dimension mismatch");
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut acc: BTreeMap<usize, Integer> = BTreeMap::new();
                for (k, a) in row {
                    for (c, b) in &other.rows[*k] {
                        let e = acc.entry(*c).or_default();
                        *e = &*e + &(a * b);
                    }
                }
                acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
            })
            .collect();
        SparseMatrix { nrows: self.nrows, ncols: other.ncols, rows }
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }
}

/// Nonzero invariant factors `d_1 | d_2 | ... | d_r`, all positive.
pub fn smith_invariants(m: &SparseMatrix) -> Vec<Integer> {
    if m.nrows * m.ncols <= DENSE_LIMIT {
        smith_invariants_dense(m.to_dense())
    } else {
        smith_invariants_sparse(m)
    }
}

pub fn rank(m: &SparseMatrix) -> usize {
    smith_invariants(m).len()
}

/// Puts a list of positive diagonal entries into a divisibility chain.
fn divisibility_chain(diag: Vec<Integer>) -> Vec<Integer> {
    let (units, mut rest): (Vec<Integer>, Vec<Integer>) = diag.into_iter().partition(Integer::is_one);
    rest.sort();
    for i in 0..rest.len() {
        for j in i + 1..rest.len() {
            if rest[i].is_one() {
                break;
            }
            if rest[j].is_divisible_by(&rest[i]) {
                continue;
            }
            let g = rest[i].gcd(&rest[j]);
            let l = rest[i].lcm(&rest[j]);
            rest[i] = g;
            rest[j] = l;
        }
    }
    let mut out = units;
    out.extend(rest);
    out
}

pub fn smith_invariants_dense(mut a: Vec<Vec<Integer>>) -> Vec<Integer> {
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    for t in 0..nrows.min(ncols) {
        let Some((pr, pc)) = smallest_entry(&a, t..nrows, t..ncols) else { break };
        a.swap(t, pr);
        for row in a.iter_mut() {
            row.swap(t, pc);
        }
        loop {
            let mut dirty = false;
            for i in t + 1..nrows {
                if a[i][t].is_zero() {
                    continue;
                }
                let (q, r) = a[i][t].div_rem(&a[t][t]);
                for j in t..ncols {
                    let sub = &q * &a[t][j];
                    a[i][j] = &a[i][j] - &sub;
                }
                dirty |= !r.is_zero();
            }
            for j in t + 1..ncols {
                if a[t][j].is_zero() {
                    continue;
                }
                let (q, r) = a[t][j].div_rem(&a[t][t]);
                for row in a.iter_mut().skip(t) {
                    let sub = &q * &row[t];
                    row[j] = &row[j] - &sub;
                }
                dirty |= !r.is_zero();
            }
            if !dirty {
                break;
            }
            if let Some((pr, _)) = smallest_entry(&a, t..nrows, t..t + 1) {
                if a[pr][t].cmp_abs(&a[t][t]).is_lt() {
                    a.swap(t, pr);
                    continue;
                }
            }
            if let Some((_, pc)) = smallest_entry(&a, t..t + 1, t..ncols) {
                if a[t][pc].cmp_abs(&a[t][t]).is_lt() {
                    for row in a.iter_mut() {
                        row.swap(t, pc);
                    }
                }
            }
        }
        diag.push(a[t][t].abs());
    }
    divisibility_chain(diag)
}

fn smallest_entry(a: &[Vec<Integer>], rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in rows {
        for j in cols.clone() {
            if a[i][j].is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| a[i][j].cmp_abs(&a[bi][bj]).is_lt()) {
                best = Some((i, j));
                if a[i][j].is_unit() {
                    return best;
                }
            }
        }
    }
    best
}

struct Eliminator {
    rows: Vec<Row>,
    cols: Vec<Vec<usize>>,
}

fn linear_combination(x: &Row, cx: &Integer, y: &Row, cy: &Integer) -> Row {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    let scaled = |c: &Integer, v: &Integer| if c.is_one() { v.clone() } else { c * v };
    while i < x.len() || j < y.len() {
        let cxi = x.get(i).map(|e| e.0);
        let cyj = y.get(j).map(|e| e.0);
        let (col, v) = match (cxi, cyj) {
            (Some(a), Some(b)) if a == b => {
                let v = &scaled(cx, &x[i].1) + &scaled(cy, &y[j].1);
                i += 1;
                j += 1;
                (a, v)
            }
            (Some(a), Some(b)) if a < b => {
                i += 1;
                (a, scaled(cx, &x[i - 1].1))
            }
            (Some(a), None) => {
                i += 1;
                (a, scaled(cx, &x[i - 1].1))
            }
            (_, Some(b)) => {
                j += 1;
                (b, scaled(cy, &y[j - 1].1))
            }
            (None, None) => unreachable!(),
        };
        if !v.is_zero() {
            out.push((col, v));
        }
    }
    out
}

impl Eliminator {
    fn new(m: &SparseMatrix) -> Self {
        let mut cols = vec![Vec::new(); m.ncols];
        for (r, row) in m.rows.iter().enumerate() {
            for (c, _) in row {
                cols[*c].push(r);
            }
        }
        Eliminator { rows: m.rows.clone(), cols }
    }

    fn get(&self, r: usize, c: usize) -> Integer {
        let row = &self.rows[r];
        row.binary_search_by_key(&c, |e| e.0).map_or(Integer::ZERO, |k| row[k].1.clone())
    }

    fn unlink(&mut self, r: usize, c: usize) {
        let col = &mut self.cols[c];
        let k = col.iter().position(|&x| x == r).expect("column index out of sync");
        col.swap_remove(k);
    }

    fn replace_row(&mut self, r: usize, new: Row) {
        let old = std::mem::replace(&mut self.rows[r], new);
        let (mut i, mut j) = (0, 0);
        while i < old.len() || j < self.rows[r].len() {
            let a = old.get(i).map(|e| e.0);
            let b = self.rows[r].get(j).map(|e| e.0);
            match (a, b) {
                (Some(x), Some(y)) if x == y => {
                    i += 1;
                    j += 1;
                }
                (Some(x), Some(y)) if x < y => {
                    self.unlink(r, x);
                    i += 1;
                }
                (Some(x), None) => {
                    self.unlink(r, x);
                    i += 1;
                }
                (_, Some(y)) => {
                    self.cols[y].push(r);
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
    }

    fn set(&mut self, r: usize, c: usize, v: Integer) {
        let row = &mut self.rows[r];
        match row.binary_search_by_key(&c, |e| e.0) {
            Ok(k) if v.is_zero() => {
                row.remove(k);
                self.unlink(r, c);
            }
            Ok(k) => row[k].1 = v,
            Err(_) if v.is_zero() => {}
            Err(k) => {
                row.insert(k, (c, v));
                self.cols[c].push(r);
            }
        }
    }

    /// Smallest magnitude first, then fewest entries in its row and column.
    fn choose_pivot(&self) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, usize)> = None;
        let mut best_val = Integer::ZERO;
        for (r, row) in self.rows.iter().enumerate() {
            for (c, v) in row {
                let cost = row.len() + self.cols[*c].len();
                let better = match best {
                    None => true,
                    Some((_, _, bc)) => match v.cmp_abs(&best_val) {
                        std::cmp::Ordering::Less => true,
                        std::cmp::Ordering::Equal => cost < bc,
                        std::cmp::Ordering::Greater => false,
                    },
                };
                if better {
                    best = Some((r, *c, cost));
                    best_val = v.clone();
                    if cost == 2 && v.is_unit() {
                        return Some((r, *c));
                    }
                }
            }
        }
        best.map(|(r, c, _)| (r, c))
    }

    /// Diagonalizes around the pivot at `(r, c)` and returns its final value.
    fn eliminate(&mut self, r: usize, c: usize) -> Integer {
        loop {
            let mut p = self.get(r, c);
            let others: Vec<usize> = self.cols[c].iter().copied().filter(|&i| i != r).collect();
            for i in others {
                let a = self.get(i, c);
                if a.is_divisible_by(&p) {
                    let q = -a.div_exact(&p);
                    let new = linear_combination(&self.rows[i], &Integer::ONE, &self.rows[r], &q);
                    self.replace_row(i, new);
                } else {
                    let (g, s, t) = p.extended_gcd(&a);
                    let new_r = linear_combination(&self.rows[r], &s, &self.rows[i], &t);
                    let new_i = linear_combination(&self.rows[r], &-a.div_exact(&g), &self.rows[i], &p.div_exact(&g));
                    self.replace_row(r, new_r);
                    self.replace_row(i, new_i);
                    p = g;
                }
            }
            let offender = self.rows[r].iter().find(|(j, v)| *j != c && !v.is_divisible_by(&p)).map(|(j, v)| (*j, v.clone()));
            let Some((j, b)) = offender else {
                let row = std::mem::take(&mut self.rows[r]);
                for (col, _) in &row {
                    self.unlink(r, *col);
                }
                return p.abs();
            };
            // Column operation on columns c and j; column c is zero outside row r here.
            let (g, _, t) = p.extended_gcd(&b);
            let rows_j: Vec<usize> = self.cols[j].iter().copied().filter(|&i| i != r).collect();
            let pg = p.div_exact(&g);
            for i in rows_j {
                let aij = self.get(i, j);
                self.set(i, c, &t * &aij);
                self.set(i, j, &pg * &aij);
            }
            self.set(r, c, g);
            self.set(r, j, Integer::ZERO);
        }
    }
}

pub fn smith_invariants_sparse(m: &SparseMatrix) -> Vec<Integer> {
    let mut e = Eliminator::new(m);
    let mut diag = Vec::new();
    while let Some((r, c)) = e.choose_pivot() {
        diag.push(e.eliminate(r, c));
    }
    divisibility_chain(diag)
}
