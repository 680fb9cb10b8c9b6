//! Octonion structure constants and the derivation algebra.
//!
//! Imaginary units e_1..e_7 multiply along the Fano lines (i, i+1, i+3)
//! mod 7: e_i e_{i+1} = e_{i+3} and cyclic, anticommuting off the line,
//! e_i^2 = -1. The derivation algebra of this product is the G2 realization
//! used everywhere a G2 factor appears.

use crate::linalg::{kernel_basis, SparseMat};
use crate::rat::*;

/// table[a][b] = (coefficient, index) with indices 0..=7, index 0 the unit.
pub fn multiplication_table() -> [[(i64, usize); 8]; 8] {
    let mut t = [[(0i64, 0usize); 8]; 8];
    for a in 0..8 {
        t[0][a] = (1, a);
        t[a][0] = (1, a);
    }
    for a in 1..8 {
        t[a][a] = (-1, 0);
    }
    // lines (i, i+1, i+3) with 1-based indices mod 7
    let m = |x: usize| (x - 1) % 7 + 1;
    for i in 1..=7 {
        let (p, q, r) = (i, m(i + 1), m(i + 3));
        for (a, b, c) in [(p, q, r), (q, r, p), (r, p, q)] {
            t[a][b] = (1, c);
            t[b][a] = (-1, c);
        }
    }
    t
}

/// Basis of the 14-dimensional derivation algebra, as 7x7 matrices on the
/// imaginary units. Deterministic order from the kernel computation.
pub fn derivation_basis() -> Vec<SparseMat> {
    let t = multiplication_table();
    // unknowns: D[r][c], r,c in 0..8, row-major (64)
    let idx = |r: usize, c: usize| r * 8 + c;
    let mut rows = Vec::new();
    for a in 0..8 {
        for b in 0..8 {
            let (coef, prod) = t[a][b];
            // coordinate k of: D(e_a e_b) - D(e_a) e_b - e_a D(e_b) = 0
            for k in 0..8 {
                let mut row = vec![qzero(); 64];
                row[idx(k, prod)] += qi(coef);
                // (D e_a) e_b = sum_r D[r][a] e_r e_b
                for r in 0..8 {
                    let (c2, p2) = t[r][b];
                    if p2 == k {
                        row[idx(r, a)] -= qi(c2);
                    }
                }
                // e_a (D e_b)
                for r in 0..8 {
                    let (c2, p2) = t[a][r];
                    if p2 == k {
                        row[idx(r, b)] -= qi(c2);
                    }
                }
                if row.iter().any(|x| !num::Zero::is_zero(x)) {
                    rows.push(row);
                }
            }
        }
    }
    let ker = kernel_basis(rows, 64);
    assert_eq!(ker.len(), 14, "derivation algebra has dimension {}", ker.len());
    ker.into_iter()
        .map(|flat| {
            let ints = clear_denominators(&flat);
            let mut ts = Vec::new();
            for r in 0..8 {
                for c in 0..8 {
                    let v = &ints[idx(r, c)];
                    if !num::Zero::is_zero(v) {
                        assert!(r >= 1 && c >= 1, "derivation touches the unit");
                        ts.push(((r - 1) as u32, (c - 1) as u32, Q::from_integer(v.clone())));
                    }
                }
            }
            SparseMat::from_triplets(7, 7, ts)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{in_span, span_rank};

    #[test]
    fn fano_pairs_cover() {
        let t = multiplication_table();
        for a in 1..8 {
            for b in 1..8 {
                if a != b {
                    let (c, p) = t[a][b];
                    assert!(p >= 1 && c.abs() == 1);
                    assert_eq!(t[b][a], (-c, p));
                }
            }
        }
    }

    #[test]
    fn alternative_squares() {
        // (e_a e_a) e_b = e_a (e_a e_b) for all a, b
        let t = multiplication_table();
        for a in 1..8 {
            for b in 0..8 {
                let (c1, p1) = t[a][a];
                let (c2, p2) = t[p1][b];
                let lhs = (c1 * c2, p2);
                let (d1, q1) = t[a][b];
                let (d2, q2) = t[a][q1];
                let rhs = (d1 * d2, q2);
                assert_eq!(lhs, rhs, "alternativity fails at ({a},{b})");
            }
        }
    }

    #[test]
    fn g2_dimension_and_skewness() {
        let d = derivation_basis();
        assert_eq!(d.len(), 14);
        assert_eq!(span_rank(&d), 14);
        for x in &d {
            assert!(x.add(&x.transpose()).is_zero(), "derivation not skew");
        }
        // closed under bracket
        assert!(in_span(&d, &d[0].commutator(&d[1])));
        assert!(in_span(&d, &d[4].commutator(&d[9])));
    }
}
