//! Gamma matrices over the split bilinear form and the spin representations
//! built from them.
//!
//! The spinor space is the exterior algebra on r = floor(n/2) creation
//! indices, with basis vectors indexed by bitmasks. Vector-space index v
//! (1-based, 1..=n) maps to:
//!   v <= r            creation operator for slot v-1
//!   v == r+1, n odd   parity involution (-1)^{|S|}
//!   v >= n+1-r        annihilation operator for slot n-v
//!
//! With the bilinear form B given by B(e_i, e_{n+1-i}) = 1/2 off the middle
//! and B(e_m, e_m) = 1 at the middle, these satisfy the Clifford relation
//! g(x)g(y) + g(y)g(x) = 2 B(x,y).
//!
//! The orthogonal algebra is spanned by X_ij = 2(e_i (B e_j)^T - e_j (B e_i)^T)
//! for i < j, and X_ij acts on spinors as (g_i g_j - g_j g_i)/2. The pair of
//! realizations shares this generator order, so vector and spinor summands of
//! one group stay aligned in direct sums.

use crate::linalg::{kernel_basis, SparseMat};
use crate::rat::*;

fn creation(r: usize, i: usize) -> SparseMat {
    let dim = 1usize << r;
    let mut ts = Vec::new();
    for s in 0..dim {
        if s & (1 << i) == 0 {
            let sign = ((s & ((1 << i) - 1)).count_ones() % 2 == 0) as i64 * 2 - 1;
            ts.push(((s | (1 << i)) as u32, s as u32, qi(sign)));
        }
    }
    SparseMat::from_triplets(dim, dim, ts)
}

fn annihilation(r: usize, i: usize) -> SparseMat {
    let dim = 1usize << r;
    let mut ts = Vec::new();
    for s in 0..dim {
        if s & (1 << i) != 0 {
            let sign = ((s & ((1 << i) - 1)).count_ones() % 2 == 0) as i64 * 2 - 1;
            ts.push(((s & !(1 << i)) as u32, s as u32, qi(sign)));
        }
    }
    SparseMat::from_triplets(dim, dim, ts)
}

fn parity(r: usize) -> SparseMat {
    let dim = 1usize << r;
    let ts = (0..dim)
        .map(|s| {
            let sign = if s.count_ones() % 2 == 0 { 1 } else { -1 };
            (s as u32, s as u32, qi(sign))
        })
        .collect();
    SparseMat::from_triplets(dim, dim, ts)
}

/// All n gamma matrices for so(n) in the split realization.
pub fn gammas(n: usize) -> Vec<SparseMat> {
    let r = n / 2;
    let mut out = Vec::with_capacity(n);
    for v in 1..=n {
        if v <= r {
            out.push(creation(r, v - 1));
        } else if 2 * v == n + 1 {
            out.push(parity(r));
        } else {
            out.push(annihilation(r, n - v));
        }
    }
    out
}

/// Matrix of the split bilinear form B, doubled to stay integral:
/// antidiagonal ones, with 2 in the middle for odd n. The orthogonal algebra
/// condition X^T P + P X = 0 is insensitive to the doubling.
pub fn split_form(n: usize) -> Vec<Vec<Q>> {
    let mut p = vec![vec![qzero(); n]; n];
    for i in 0..n {
        p[i][n - 1 - i] = qone();
    }
    if n % 2 == 1 {
        p[n / 2][n / 2] = qi(2);
    }
    p
}

/// so(n) generators in the split realization, pairs (i,j), i < j, 1-based,
/// lexicographic. X_ij = 2(e_i (B e_j)^T - e_j (B e_i)^T).
pub fn so_split_generators(n: usize) -> Vec<SparseMat> {
    let b_col = |k: usize| -> Vec<(usize, Q)> {
        // column B e_k, 1-based k
        if n % 2 == 1 && 2 * k == n + 1 {
            vec![(k, qone())]
        } else {
            vec![(n + 1 - k, qr(1, 2))]
        }
    };
    let mut gens = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            let mut ts = Vec::new();
            for (row, v) in b_col(j) {
                ts.push(((i - 1) as u32, (row - 1) as u32, qi(2) * v.clone()));
            }
            for (row, v) in b_col(i) {
                ts.push(((j - 1) as u32, (row - 1) as u32, qi(-2) * v.clone()));
            }
            gens.push(SparseMat::from_triplets(n, n, ts));
        }
    }
    gens
}

/// Spin generators: X_ij acts as (g_i g_j - g_j g_i)/2, same (i,j) order as
/// `so_split_generators`.
pub fn spin_generators(n: usize) -> Vec<SparseMat> {
    let g = gammas(n);
    let half = qr(1, 2);
    let mut gens = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let c = g[i].commutator(&g[j]).scale(&half);
            gens.push(c);
        }
    }
    gens
}

/// Indices of a parity subspace of the spinor space.
fn parity_indices(r: usize, even: bool) -> Vec<usize> {
    (0..1usize << r)
        .filter(|s| (s.count_ones() % 2 == 0) == even)
        .collect()
}

/// Restrict a parity-preserving operator to one half-spin subspace.
fn restrict(m: &SparseMat, idx: &[usize]) -> SparseMat {
    let pos: std::collections::HashMap<usize, usize> =
        idx.iter().enumerate().map(|(k, &s)| (s, k)).collect();
    let mut ts = Vec::new();
    for (r, c, v) in &m.entries {
        match (pos.get(&(*r as usize)), pos.get(&(*c as usize))) {
            (Some(&nr), Some(&nc)) => ts.push((nr as u32, nc as u32, v.clone())),
            (None, None) => {}
            _ => panic!("operator does not preserve the parity split"),
        }
    }
    SparseMat::from_triplets(idx.len(), idx.len(), ts)
}

pub fn halfspin_generators(n: usize, even: bool) -> Vec<SparseMat> {
    assert!(n % 2 == 0, "half-spin representations need even n");
    let idx = parity_indices(n / 2, even);
    spin_generators(n)
        .iter()
        .map(|g| restrict(g, &idx))
        .collect()
}

/// The invariant symmetric bilinear form on a spinor module, when it exists
/// and is unique up to scale: solves S^T M + M S = 0 for all generators.
/// Returns an integer-scaled symmetric matrix. Panics if the solution space
/// is not one-dimensional.
pub fn invariant_bilinear_form(gens: &[SparseMat]) -> Vec<Vec<Q>> {
    let d = gens[0].nrows;
    let mut rows = Vec::new();
    for g in gens {
        let dense = g.to_dense();
        // equation for each (a,b): sum_c S[c][a] M[c][b] + M[a][c] S[c][b] = 0
        for a in 0..d {
            for b in 0..d {
                let mut row = vec![qzero(); d * d];
                for c in 0..d {
                    row[c * d + b] += dense[c][a].clone();
                    row[a * d + c] += dense[c][b].clone();
                }
                if row.iter().any(|x| !num::Zero::is_zero(x)) {
                    rows.push(row);
                }
            }
        }
    }
    let ker = kernel_basis(rows, d * d);
    assert_eq!(
        ker.len(),
        1,
        "invariant bilinear form is not unique (dim {})",
        ker.len()
    );
    let flat = clear_denominators(&ker[0]);
    let mut m = vec![vec![qzero(); d]; d];
    for a in 0..d {
        for b in 0..d {
            m[a][b] = Q::from_integer(flat[a * d + b].clone());
        }
    }
    // symmetric by uniqueness; check and normalize sign on first nonzero
    for a in 0..d {
        for b in 0..d {
            assert_eq!(m[a][b], m[b][a], "spinor form not symmetric");
        }
    }
    let lead = m
        .iter()
        .flatten()
        .find(|x| !num::Zero::is_zero(*x))
        .cloned()
        .unwrap();
    if lead < qzero() {
        for row in m.iter_mut() {
            for x in row.iter_mut() {
                *x = -x.clone();
            }
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::in_span;

    #[test]
    fn clifford_relations() {
        for n in [4, 5, 7, 8] {
            let g = gammas(n);
            let p = split_form(n);
            let dim = g[0].nrows;
            for i in 0..n {
                for j in 0..n {
                    let anti = g[i].matmul(&g[j]).add(&g[j].matmul(&g[i]));
                    let expected = SparseMat::identity(dim).scale(&p[i][j]);
                    assert_eq!(anti, expected, "relation fails at n={n} ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn so_split_preserves_form() {
        for n in [5, 7, 10] {
            let p = SparseMat::from_dense(&split_form(n));
            for x in so_split_generators(n) {
                let lhs = x.transpose().matmul(&p).add(&p.matmul(&x));
                assert!(lhs.is_zero(), "X^T P + P X != 0 for n={n}");
            }
        }
    }

    #[test]
    fn spin7_dims_and_closure() {
        let gens = spin_generators(7);
        assert_eq!(gens.len(), 21);
        assert_eq!(gens[0].nrows, 8);
        // bracket closure
        assert!(in_span(&gens, &gens[0].commutator(&gens[5])));
        assert!(in_span(&gens, &gens[3].commutator(&gens[17])));
    }

    #[test]
    fn halfspin_dims() {
        let e = halfspin_generators(10, true);
        assert_eq!(e.len(), 45);
        assert_eq!(e[0].nrows, 16);
        let o = halfspin_generators(8, false);
        assert_eq!(o.len(), 28);
        assert_eq!(o[0].nrows, 8);
    }

    #[test]
    fn spin7_form_exists() {
        let gens = spin_generators(7);
        let b = invariant_bilinear_form(&gens);
        assert_eq!(b.len(), 8);
        // nondegenerate
        assert!(!num::Zero::is_zero(&crate::linalg::det_exact(&b)));
    }
}
