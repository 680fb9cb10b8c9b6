//! Exact linear algebra: sparse matrices over Q, certified rank, kernels,
//! determinants.
//!
//! Rank is the load-bearing primitive: prehomogeneity is literally a rank
//! statement. Two paths are provided. The fast path eliminates modulo a
//! 61-bit prime; a full-rank result there is already a certificate (a
//! nonvanishing minor mod p is nonzero over Z). Whenever the modular rank is
//! not full, the fraction-free integer elimination (Bareiss-style with
//! content division) recomputes the rank exactly.

use crate::rat::*;
use num::{One, Signed, Zero};

pub const RANK_PRIME: u64 = (1 << 61) - 1;

/// Sparse matrix over Q, coordinate list representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMat {
    pub nrows: usize,
    pub ncols: usize,
    pub entries: Vec<(u32, u32, Q)>,
}

impl SparseMat {
    pub fn zero(nrows: usize, ncols: usize) -> Self {
        SparseMat { nrows, ncols, entries: Vec::new() }
    }

    pub fn identity(n: usize) -> Self {
        SparseMat {
            nrows: n,
            ncols: n,
            entries: (0..n as u32).map(|i| (i, i, qone())).collect(),
        }
    }

    pub fn from_triplets(nrows: usize, ncols: usize, mut ts: Vec<(u32, u32, Q)>) -> Self {
        ts.sort_by_key(|(r, c, _)| (*r, *c));
        let mut entries: Vec<(u32, u32, Q)> = Vec::with_capacity(ts.len());
        for (r, c, v) in ts {
            debug_assert!((r as usize) < nrows && (c as usize) < ncols);
            if let Some(last) = entries.last_mut() {
                if last.0 == r && last.1 == c {
                    last.2 += v;
                    continue;
                }
            }
            entries.push((r, c, v));
        }
        entries.retain(|(_, _, v)| !v.is_zero());
        SparseMat { nrows, ncols, entries }
    }

    pub fn from_dense(d: &[Vec<Q>]) -> Self {
        let nrows = d.len();
        let ncols = d.first().map_or(0, |r| r.len());
        let mut ts = Vec::new();
        for (i, row) in d.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    ts.push((i as u32, j as u32, v.clone()));
                }
            }
        }
        SparseMat::from_triplets(nrows, ncols, ts)
    }

    pub fn to_dense(&self) -> Vec<Vec<Q>> {
        let mut d = vec![vec![qzero(); self.ncols]; self.nrows];
        for (r, c, v) in &self.entries {
            d[*r as usize][*c as usize] = v.clone();
        }
        d
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Q]) -> Vec<Q> {
        debug_assert_eq!(v.len(), self.ncols);
        let mut out = vec![qzero(); self.nrows];
        for (r, c, a) in &self.entries {
            let x = &v[*c as usize];
            if !x.is_zero() {
                out[*r as usize] += a * x;
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let ts = self
            .entries
            .iter()
            .map(|(r, c, v)| (*c, *r, v.clone()))
            .collect();
        SparseMat::from_triplets(self.ncols, self.nrows, ts)
    }

    /// Dual action map X -> -X^T.
    pub fn neg_transpose(&self) -> Self {
        let ts = self
            .entries
            .iter()
            .map(|(r, c, v)| (*c, *r, -v.clone()))
            .collect();
        SparseMat::from_triplets(self.ncols, self.nrows, ts)
    }

    pub fn scale(&self, s: &Q) -> Self {
        let ts = self
            .entries
            .iter()
            .map(|(r, c, v)| (*r, *c, v * s))
            .collect();
        SparseMat::from_triplets(self.nrows, self.ncols, ts)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.nrows, self.ncols), (other.nrows, other.ncols));
        let mut ts = self.entries.clone();
        ts.extend(other.entries.iter().cloned());
        SparseMat::from_triplets(self.nrows, self.ncols, ts)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&qi(-1)))
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.ncols, other.nrows);
        // rows of other, bucketed
        let mut rows: Vec<Vec<(u32, Q)>> = vec![Vec::new(); other.nrows];
        for (r, c, v) in &other.entries {
            rows[*r as usize].push((*c, v.clone()));
        }
        let mut ts = Vec::new();
        for (r, c, v) in &self.entries {
            for (c2, v2) in &rows[*c as usize] {
                ts.push((*r, *c2, v * v2));
            }
        }
        SparseMat::from_triplets(self.nrows, other.ncols, ts)
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.matmul(other).sub(&other.matmul(self))
    }

    /// Kronecker product, index (i,a) -> i * other.nrows + a on rows, same on
    /// columns. This fixes the coordinate layout of tensor summands repo-wide.
    pub fn kron(&self, other: &Self) -> Self {
        let nrows = self.nrows * other.nrows;
        let ncols = self.ncols * other.ncols;
        let mut ts = Vec::with_capacity(self.nnz() * other.nnz());
        for (r1, c1, v1) in &self.entries {
            for (r2, c2, v2) in &other.entries {
                ts.push((
                    r1 * other.nrows as u32 + r2,
                    c1 * other.ncols as u32 + c2,
                    v1 * v2,
                ));
            }
        }
        SparseMat::from_triplets(nrows, ncols, ts)
    }

    /// Flatten to a row vector of length nrows*ncols (row-major).
    pub fn flatten(&self) -> Vec<Q> {
        let mut v = vec![qzero(); self.nrows * self.ncols];
        for (r, c, val) in &self.entries {
            v[*r as usize * self.ncols + *c as usize] = val.clone();
        }
        v
    }

    pub fn get(&self, r: usize, c: usize) -> Q {
        for (er, ec, v) in &self.entries {
            if *er as usize == r && *ec as usize == c {
                return v.clone();
            }
        }
        qzero()
    }
}

/// Incremental exact rank of a set of rows, fraction-free.
///
/// Rows are fed one at a time; the basis is kept in echelon form over Z with
/// content divided out, so entry growth stays bounded by minor sizes.
pub struct RowRank {
    ncols: usize,
    // (pivot column, integer row)
    basis: Vec<(usize, Vec<Z>)>,
}

impl RowRank {
    pub fn new(ncols: usize) -> Self {
        RowRank { ncols, basis: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Insert a rational row; returns true if it enlarged the span.
    pub fn insert(&mut self, row: &[Q]) -> bool {
        debug_assert_eq!(row.len(), self.ncols);
        let r = clear_denominators(row);
        self.insert_int(r)
    }

    pub fn insert_int(&mut self, mut r: Vec<Z>) -> bool {
        for (pc, b) in &self.basis {
            if !r[*pc].is_zero() {
                // r <- p*r - r[pc]*b, fraction-free
                let p = b[*pc].clone();
                let f = r[*pc].clone();
                for j in 0..self.ncols {
                    let t = &r[j] * &p - &f * &b[j];
                    r[j] = t;
                }
                divide_content(&mut r);
            }
        }
        if let Some(pc) = r.iter().position(|x| !x.is_zero()) {
            divide_content(&mut r);
            self.basis.push((pc, r));
            self.basis.sort_by_key(|(c, _)| *c);
            true
        } else {
            false
        }
    }
}

/// Exact rank of a dense rational matrix.
pub fn rank_exact(rows: &[Vec<Q>]) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rr = RowRank::new(ncols);
    for row in rows {
        rr.insert(row);
    }
    rr.rank()
}

/// Rank modulo RANK_PRIME. This is always a lower bound for the rank over Q.
pub fn rank_mod_p(rows: &[Vec<Q>]) -> Option<usize> {
    let p = RANK_PRIME;
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut basis: Vec<(usize, Vec<u64>)> = Vec::new();
    for row in rows {
        let mut r = Vec::with_capacity(ncols);
        for x in row {
            r.push(mod_p(x, p)?);
        }
        for (pc, b) in &basis {
            if r[*pc] != 0 {
                let f = mulmod(r[*pc], inv_mod(b[*pc], p), p);
                for j in 0..ncols {
                    r[j] = submod(r[j], mulmod(f, b[j], p), p);
                }
            }
        }
        if let Some(pc) = r.iter().position(|x| *x != 0) {
            basis.push((pc, r));
            basis.sort_by_key(|(c, _)| *c);
            if basis.len() == ncols {
                break;
            }
        }
    }
    Some(basis.len())
}

/// Certified rank with a fast modular path.
///
/// If the modular elimination already reaches the maximal possible rank the
/// answer is certified (a nonzero minor mod p is nonzero). Otherwise fall
/// back to exact elimination.
pub fn rank(rows: &[Vec<Q>]) -> usize {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, |r| r.len());
    let maxrank = nrows.min(ncols);
    if maxrank == 0 {
        return 0;
    }
    if let Some(rp) = rank_mod_p(rows) {
        if rp == maxrank {
            return rp;
        }
    }
    rank_exact(rows)
}

/// Exact reduced row echelon form over Q. Returns (rref rows, pivot columns).
pub fn rref(mut rows: Vec<Vec<Q>>) -> (Vec<Vec<Q>>, Vec<usize>) {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut rank = 0usize;
    for col in 0..ncols {
        let mut sel = None;
        for r in rank..nrows {
            if !rows[r][col].is_zero() {
                sel = Some(r);
                break;
            }
        }
        let Some(sel) = sel else { continue };
        rows.swap(rank, sel);
        let inv = rows[rank][col].recip();
        for j in col..ncols {
            let v = &rows[rank][j] * &inv;
            rows[rank][j] = v;
        }
        for r in 0..nrows {
            if r != rank && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                for j in col..ncols {
                    let v = &rows[r][j] - &f * &rows[rank][j];
                    rows[r][j] = v;
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rows.truncate(rank);
    (rows, pivots)
}

/// Basis of the solution space of the homogeneous system rows * x = 0.
/// Deterministic: free variables in increasing column order.
pub fn kernel_basis(rows: Vec<Vec<Q>>, ncols: usize) -> Vec<Vec<Q>> {
    let (r, pivots) = rref(rows);
    let mut is_pivot = vec![false; ncols];
    for p in &pivots {
        is_pivot[*p] = true;
    }
    let mut basis = Vec::new();
    for free in 0..ncols {
        if is_pivot[free] {
            continue;
        }
        let mut v = vec![qzero(); ncols];
        v[free] = qone();
        for (i, p) in pivots.iter().enumerate() {
            v[*p] = -r[i][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Exact determinant via fraction-free (Bareiss) elimination.
pub fn det_exact(m: &[Vec<Q>]) -> Q {
    let n = m.len();
    if n == 0 {
        return qone();
    }
    assert!(m.iter().all(|r| r.len() == n), "determinant of non-square matrix");
    // Clear denominators row by row, tracking the product.
    let mut scale = qone();
    let mut a: Vec<Vec<Z>> = Vec::with_capacity(n);
    for row in m {
        let l = denominator_lcm(row);
        if !l.is_one() {
            scale *= Q::from_integer(l.clone());
        }
        a.push(row.iter().map(|x| x.numer() * (&l / x.denom())).collect());
    }
    let mut sign = 1i64;
    let mut prev = Z::one();
    for k in 0..n {
        // pivot
        if a[k][k].is_zero() {
            let Some(s) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return qzero();
            };
            a.swap(k, s);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = t;
            }
            a[i][k] = Z::zero();
        }
        prev = a[k][k].clone();
    }
    Q::from_integer(a[n - 1][n - 1].clone() * Z::from(sign)) / scale
}

/// Solve B * x = y for each column y of `targets`, where B has full column
/// rank. Used to restrict an action to an invariant subspace given its basis.
/// Panics if a target is not in the column span (caller guarantees it).
pub fn solve_in_column_span(basis_cols: &[Vec<Q>], targets: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let dim = basis_cols.first().map_or(0, |c| c.len());
    let k = basis_cols.len();
    // Augmented RREF of [B | T] transposed handling: build rows of length k + t.
    let t = targets.len();
    let mut rows = Vec::with_capacity(dim);
    for i in 0..dim {
        let mut row = Vec::with_capacity(k + t);
        for b in basis_cols {
            row.push(b[i].clone());
        }
        for y in targets {
            row.push(y[i].clone());
        }
        rows.push(row);
    }
    let (r, pivots) = rref(rows);
    assert_eq!(pivots.len(), k, "basis columns not independent");
    assert!(pivots.iter().all(|p| *p < k), "target outside the column span");
    let mut out = vec![vec![qzero(); k]; t];
    for (i, p) in pivots.iter().enumerate() {
        for j in 0..t {
            out[j][*p] = r[i][k + j].clone();
        }
    }
    out
}

/// Exact rank of the span of a family of sparse matrices (flattened rows).
pub fn span_rank(mats: &[SparseMat]) -> usize {
    if mats.is_empty() {
        return 0;
    }
    let ncols = mats[0].nrows * mats[0].ncols;
    let mut rr = RowRank::new(ncols);
    for m in mats {
        rr.insert(&m.flatten());
    }
    rr.rank()
}

/// Does `x` lie in the span of `mats`? Exact.
pub fn in_span(mats: &[SparseMat], x: &SparseMat) -> bool {
    let ncols = x.nrows * x.ncols;
    let mut rr = RowRank::new(ncols);
    for m in mats {
        rr.insert(&m.flatten());
    }
    let before = rr.rank();
    let _ = rr.insert(&x.flatten());
    rr.rank() == before
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qm(rows: &[&[i64]]) -> Vec<Vec<Q>> {
        rows.iter()
            .map(|r| r.iter().map(|x| qi(*x)).collect())
            .collect()
    }

    #[test]
    fn rank_small() {
        let m = qm(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(rank(&m), 2);
        assert_eq!(rank_exact(&m), 2);
        assert_eq!(rank_mod_p(&m), Some(2));
    }

    #[test]
    fn det_matches_cofactor() {
        let m = qm(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        // 2*(12-1) - 1*(4-0) = 18
        assert_eq!(det_exact(&m), qi(18));
    }

    #[test]
    fn det_with_fractions() {
        let m = vec![vec![qr(1, 2), qi(1)], vec![qi(1), qr(1, 2)]];
        assert_eq!(det_exact(&m), qr(-3, 4));
    }

    #[test]
    fn kernel_of_rank_one() {
        let rows = qm(&[&[1, 1, 1]]);
        let k = kernel_basis(rows, 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            let s = v.iter().fold(qzero(), |a, b| a + b);
            assert!(s.is_zero());
        }
    }

    #[test]
    fn kron_layout() {
        let a = SparseMat::from_dense(&qm(&[&[0, 1], &[0, 0]]));
        let id = SparseMat::identity(3);
        let k = a.kron(&id);
        assert_eq!(k.nrows, 6);
        // (0,a),(1,a) blocks: entry ((0*3+a),(1*3+a))
        assert_eq!(k.get(0, 3), qone());
        assert_eq!(k.get(2, 5), qone());
    }

    #[test]
    fn solve_span() {
        let b1 = vec![qi(1), qi(0), qi(1)];
        let b2 = vec![qi(0), qi(1), qi(1)];
        let y = vec![qi(2), qi(3), qi(5)];
        let sol = solve_in_column_span(&[b1, b2], &[y]);
        assert_eq!(sol[0], vec![qi(2), qi(3)]);
    }
}
