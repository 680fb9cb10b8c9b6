//! Castling calculus on triplets (k, m, n): membership in T, the recurrence
//! a_i, the ratios b_i, the reduction map and its step count nu, plus the
//! admissibility predicates for the two-parameter families that are stated
//! in terms of these quantities.

use crate::rep::{sl, ModuleSpec, RepLabel, RepSpec, SimpleGroupId};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Triplet {
    pub k: i64,
    pub m: i64,
    pub n: i64,
}

impl Triplet {
    pub fn new(k: i64, m: i64, n: i64) -> Self {
        Triplet { k, m, n }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CastlingError {
    #[error("castling partner undefined: km - n = {0} < 1")]
    NoPartner(i64),
    #[error("nu undefined: ({0}, {1}, {2}) is outside T and mk > n")]
    OutsideDomain(i64, i64, i64),
    #[error("castling does not terminate from ({0}, {1}, {2})")]
    NonTerminating(i64, i64, i64),
}

/// k >= 2, n > m >= 2 and k + m^2 + n^2 - 2 > kmn.
pub fn in_t(t: Triplet) -> bool {
    let Triplet { k, m, n } = t;
    k >= 2 && n > m && m >= 2 && k + m * m + n * n - 2 > k * m * n
}

/// a_{-1} = -1, a_0 = 0, a_i = k a_{i-1} - a_{i-2}.
pub fn a_seq(k: i64, i: i64) -> i128 {
    assert!(i >= -1, "a_i defined for i >= -1");
    let mut prev: i128 = -1;
    let mut cur: i128 = 0;
    if i == -1 {
        return prev;
    }
    for _ in 0..i {
        let next = k as i128 * cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// b_i = a_i / a_{i+1} as an exact pair (num, den). Errors when a_{i+1} = 0.
pub fn b_ratio(k: i64, i: i64) -> Result<(i128, i128), CastlingError> {
    let num = a_seq(k, i);
    let den = a_seq(k, i + 1);
    if den == 0 {
        return Err(CastlingError::NonTerminating(k, i, 0));
    }
    Ok((num, den))
}

/// The castling partner: replace n by km - n, reorder so the last entry is
/// the larger one.
pub fn castle_triplet(t: Triplet) -> Result<Triplet, CastlingError> {
    let n2 = t.k * t.m - t.n;
    if n2 < 1 {
        return Err(CastlingError::NoPartner(n2));
    }
    Ok(Triplet::new(t.k, t.m.min(n2), t.m.max(n2)))
}

/// Number of dimension-decreasing castling steps to a trivial module
/// (mk <= n). Defined on T and on the already-trivial region; an error
/// anywhere else.
pub fn nu(t: Triplet) -> Result<u32, CastlingError> {
    if t.m * t.k <= t.n {
        return Ok(0);
    }
    if !in_t(t) {
        return Err(CastlingError::OutsideDomain(t.k, t.m, t.n));
    }
    let mut cur = t;
    let mut steps = 0u32;
    loop {
        if cur.m * cur.k <= cur.n {
            return Ok(steps);
        }
        let n2 = cur.k * cur.m - cur.n;
        if n2 >= cur.n || n2 < 1 {
            return Err(CastlingError::NonTerminating(t.k, t.m, t.n));
        }
        cur = Triplet::new(cur.k, cur.m.min(n2), cur.m.max(n2));
        steps += 1;
        if steps > 10_000 {
            return Err(CastlingError::NonTerminating(t.k, t.m, t.n));
        }
    }
}

/// The chain of dimension-decreasing steps from t down to a trivial module,
/// including both endpoints.
pub fn reduction_chain(t: Triplet) -> Result<Vec<Triplet>, CastlingError> {
    let steps = nu(t)?; // validates the domain
    let mut chain = vec![t];
    let mut cur = t;
    for _ in 0..steps {
        let n2 = cur.k * cur.m - cur.n;
        cur = Triplet::new(cur.k, cur.m.min(n2), cur.m.max(n2));
        chain.push(cur);
    }
    Ok(chain)
}

/// The module (GL_1^k x SL_m x SL_n, (w1 (x) w1)^{+k}). Degenerate factors
/// (size 1) are dropped.
pub fn triplet_module(t: Triplet) -> ModuleSpec {
    let mut factors: Vec<SimpleGroupId> = Vec::new();
    if t.m >= 2 {
        factors.push(sl(t.m as usize));
    }
    if t.n >= 2 {
        factors.push(sl(t.n as usize));
    }
    let summand: Vec<RepSpec> = factors
        .iter()
        .map(|f| RepSpec::new(*f, RepLabel::Omega(1), false))
        .collect();
    let summands = vec![summand; t.k as usize];
    ModuleSpec::with_free_scalars(factors, summands)
}

// ---------------------------------------------------------------------------
// Admissibility of the (w1 (x) w1)-family rows stated through T, nu and b.
//
// Inputs are (k, m, n, s1, s2, t1, t2) with n >= m >= 2, k >= 1: s1/s2 count
// plain/dual vectors on the first factor, t1/t2 on the second. Each lettered
// case is one predicate; parenthetical bounds on the derived quantities are
// checked as preconditions and fail the case when violated.
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilyParams {
    pub k: i64,
    pub m: i64,
    pub n: i64,
    pub s1: i64,
    pub s2: i64,
    pub t1: i64,
    pub t2: i64,
}

impl FamilyParams {
    fn shape_ok(&self) -> bool {
        let FamilyParams { k, m, n, s1, s2, t1, t2 } = *self;
        let group = k + s1 + s2 + t1 + t2 + m * m - 1 + n * n - 1;
        let space = m * (s1 + s2) + k * m * n + n * (t1 + t2);
        k >= 1
            && m >= 2
            && n >= m
            && s1 >= 0
            && s2 >= 0
            && t1 >= 0
            && t2 >= 0
            && group >= space
    }
}

/// q <= a - b_j * c, all in exact arithmetic (b_j = a_j / a_{j+1} >= 0).
fn le_minus_b(q: i64, a: i64, k: i64, j: u32, c: i64) -> bool {
    let num = a_seq(k, j as i64);
    let den = a_seq(k, j as i64 + 1);
    debug_assert!(den > 0);
    // q <= a - (num/den) c  <=>  q*den <= a*den - num*c
    (q as i128) * den <= (a as i128) * den - num * (c as i128)
}

/// The region n >= km: enumerable side conditions.
pub fn family_case_large_n(p: FamilyParams) -> Option<&'static str> {
    if !p.shape_ok() || p.n < p.k * p.m {
        return None;
    }
    let FamilyParams { k, m, n, s1, s2, t1, t2 } = p;
    // n = m forces k = 1
    if n == m {
        if k != 1 {
            return None;
        }
        let a = s1 + t2;
        let b = s2 + t1;
        if (1..=n + 1).contains(&(a + b)) && (a <= 1 || b <= 1) && (a + b) >= 1 {
            return Some("16-i");
        }
        return None;
    }
    if n == k * m && k >= 2 {
        if t1 == 0 && (2..=n).contains(&t2) && s2 == 0 && s1 + k * t2 <= m {
            return Some("16-ii-a");
        }
        if t2 == 0 && (2..=n).contains(&t1) && s1 == 0 && s2 + k * t1 <= m {
            return Some("16-ii-b");
        }
        return None;
    }
    if n == k * m + 1 && t1 >= 3 && t2 == 0 && s1 == 0 && s2 + k * (t1 - 1) <= m {
        return Some("16-iii");
    }
    if n > k * m && n >= k * m + t1 {
        if k == 1 && t1 == 0 && (2..=n).contains(&t2) {
            let a = s1 + t2;
            if s2 <= 1 && (1..=m + 1).contains(&(a + s2)) {
                return Some("16-iv-a");
            }
        }
        if k >= 2 && t1 == 0 && (2..=n).contains(&t2) && s2 == 0 && s1 + k * t2 <= m {
            return Some("16-iv-b");
        }
        if k >= 1 && t1 == 1 && (2..=n).contains(&t2) && s2 == 0 && s1 + k * t2 <= m {
            return Some("16-iv-c");
        }
    }
    None
}

/// The region km > n: castling-controlled side conditions.
pub fn family_case_castling(p: FamilyParams) -> Option<&'static str> {
    if !p.shape_ok() || p.k * p.m <= p.n || p.k < 2 {
        return None;
    }
    let FamilyParams { k, m, n, s1, s2, t1, t2 } = p;

    // 17-i (a): duals on the second factor only.
    if t2 >= 1 && s2 == 0 && t1 == 0 {
        let t = Triplet::new(k, m, n);
        if in_t(t) {
            if let Ok(j) = nu(t) {
                if le_minus_b(s1 + k * t2, m, k, j, n - t2) {
                    return Some("17-i-a");
                }
            }
        }
    }

    // 17-i (b): plain vectors on both sides, s2 = t2 = 0.
    if s2 == 0 && t2 == 0 {
        let pq = k * m + t1 - n;
        if pq >= 1 && pq < m {
            let q = k * pq - m;
            if m >= k * pq {
                if s1 == 0 && t1 <= pq + 1 && t1 >= 0 {
                    return Some("17-i-b-i");
                }
                if s1 == 1 && k + t1 <= pq + 1 {
                    return Some("17-i-b-ii");
                }
                if (2..=m).contains(&s1) && t1 + k * s1 <= pq {
                    return Some("17-i-b-iii");
                }
            } else {
                // kp > m
                if s1 >= 1 {
                    let tp = Triplet::new(k, pq, m);
                    if in_t(tp) {
                        if let Ok(j) = nu(tp) {
                            if le_minus_b(t1 + k * s1, pq, k, j, m - s1) {
                                return Some("17-i-b-iv");
                            }
                        }
                    }
                }
                if q < n && q >= 1 {
                    if pq >= k * q {
                        if s1 == 0 && t1 == 1 && k <= q + 1 {
                            return Some("17-i-b-v");
                        }
                        if s1 == 0 && (2..=pq).contains(&t1) && k * t1 <= q {
                            return Some("17-i-b-vi");
                        }
                    } else if s1 == 0 && t1 >= 1 {
                        let tq = Triplet::new(k, q, pq);
                        if in_t(tq) {
                            if let Ok(j) = nu(tq) {
                                if le_minus_b(k * t1, q, k, j, pq - t1) {
                                    return Some("17-i-b-vii");
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    // 17-i (c): duals on the first factor, t2 = 0, s1 = 0, s2 >= 1.
    if t2 == 0 && s2 >= 1 && s1 == 0 {
        let pp = k * m + t1 - n;
        if pp >= 1 && pp < m {
            let q = k * pp + s2 - m;
            let r = k * q - pp;
            if m >= k * pp + s2 && t1 <= pp + 1 {
                return Some("17-i-c-i");
            }
            if m == k * pp + s2 - 1 && (0..=1).contains(&t1) && k + t1 <= pp + 1 {
                return Some("17-i-c-ii");
            }
            if m == k * pp + 1 && (3..=m).contains(&s2) && t1 == 0 && k * (s2 - 1) <= pp {
                return Some("17-i-c-iii");
            }
            if m == k * pp && (2..=m).contains(&s2) && k * s2 <= pp {
                return Some("17-i-c-iv");
            }
            if k * pp > m && q >= 1 && q < pp {
                if pp >= k * q {
                    if t1 == 0 && s2 <= q + 1 {
                        return Some("17-i-c-v");
                    }
                    if t1 == 1 && s2 + k <= q + 1 {
                        return Some("17-i-c-vi");
                    }
                    if (2..=pp).contains(&t1) && s2 + k * t1 <= q {
                        return Some("17-i-c-vii");
                    }
                } else {
                    // kq > p
                    if t1 >= 1 {
                        let tq = Triplet::new(k, q, pp);
                        if in_t(tq) {
                            if let Ok(j) = nu(tq) {
                                if le_minus_b(s2 + k * t1, q, k, j, pp - t1) {
                                    return Some("17-i-c-viii");
                                }
                            }
                        }
                    }
                    if r >= 1 && r < q {
                        if q >= k * r {
                            if t1 == 0 && s2 == 1 && k <= r + 1 {
                                return Some("17-i-c-ix");
                            }
                            if t1 == 0 && (2..=q).contains(&s2) && k * s2 <= r {
                                return Some("17-i-c-x");
                            }
                        } else if t1 == 0 && s2 >= 1 {
                            let tr = Triplet::new(k, r, q);
                            if in_t(tr) {
                                if let Ok(j) = nu(tr) {
                                    if le_minus_b(k * s2, r, k, j, q - s2) {
                                        return Some("17-i-c-xi");
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    // 17-ii (a): one dual among the second-factor vectors.
    if t2 == 1 && s2 == 0 && t1 >= 1 {
        let pp = k * m + t1 - n - 1;
        if pp >= 1 {
            let lhs = (t1 - 1) + k * (k + s1);
            if m >= k * pp && lhs <= pp {
                return Some("17-ii-a-i");
            }
            if k * pp > m {
                let tp = Triplet::new(k, pp, m);
                if in_t(tp) {
                    if let Ok(j) = nu(tp) {
                        if le_minus_b(lhs, pp, k, j, m - k - s1) {
                            return Some("17-ii-a-ii");
                        }
                    }
                }
            }
        }
    }

    // 17-ii (b): one plain among the first-factor duals.
    if t2 == 0 && s2 >= 1 && s1 == 1 {
        let pp = k * m + t1 - n;
        if pp >= 1 {
            let q = k * pp + s2 - m - 1;
            let lhs = (s2 - 1) + k * (k + t1);
            if k * pp > m && q >= 1 {
                if pp >= k * q && lhs <= q {
                    return Some("17-ii-b-i");
                }
                if k * q > pp {
                    let tq = Triplet::new(k, q, pp);
                    if in_t(tq) {
                        if let Ok(j) = nu(tq) {
                            if le_minus_b(lhs, q, k, j, pp - k - t1) {
                                return Some("17-ii-b-ii");
                            }
                        }
                    }
                }
            }
        }
    }

    // 17-iii (a): single plain second-factor vector alongside duals.
    if s2 == 0 && t1 == 1 && t2 >= 0 {
        let t = Triplet::new(k, m, n - 1);
        if in_t(t) {
            if let Ok(j) = nu(t) {
                if le_minus_b((s1 + k) + k * (t2 - 1), m, k, j, n - t2) {
                    return Some("17-iii-a");
                }
            }
        }
    }

    // 17-iii (b): single dual among many plain first-factor vectors.
    if t2 == 0 && s2 == 1 && s1 >= 2 {
        let pp = k * m + t1 - n;
        if pp >= 1 && pp < m {
            if m >= k * pp && t1 + k * s1 <= pp {
                return Some("17-iii-b-i");
            }
            if k * pp > m {
                let tp = Triplet::new(k, pp, m - 1);
                if in_t(tp) {
                    if let Ok(j) = nu(tp) {
                        if le_minus_b(t1 + k * s1, pp, k, j, m - s1) {
                            return Some("17-iii-b-ii");
                        }
                    }
                }
            }
        }
    }

    // 17-iv (a): one dual on each side; the stated triplet must lie in T
    if t2 == 1 && s2 == 1 {
        let pp = k * m + t1 - n;
        if pp >= 1 && in_t(Triplet::new(k, pp, m - 1)) {
            let lhs = (k + t1 - 2) + k * (k + s1 - 2);
            if m - 1 >= k * pp && lhs <= pp {
                return Some("17-iv-a-i");
            }
            if k * pp > m {
                if let Ok(j) = nu(Triplet::new(k, pp, m - 1)) {
                    if le_minus_b(lhs, pp, k, j, n - k - s1) {
                        return Some("17-iv-a-ii");
                    }
                }
            }
        }
    }

    None
}

/// The module described by a FamilyParams tuple.
pub fn family_module(p: FamilyParams) -> ModuleSpec {
    let fm = sl(p.m as usize);
    let fn_ = sl(p.n as usize);
    let w1 = |g: SimpleGroupId, dual: bool| RepSpec::new(g, RepLabel::Omega(1), dual);
    let tr = |g: SimpleGroupId| RepSpec::new(g, RepLabel::Trivial, false);
    let mut summands = Vec::new();
    for _ in 0..p.s1 {
        summands.push(vec![w1(fm, false), tr(fn_)]);
    }
    for _ in 0..p.s2 {
        summands.push(vec![w1(fm, true), tr(fn_)]);
    }
    for _ in 0..p.k {
        summands.push(vec![w1(fm, false), w1(fn_, false)]);
    }
    for _ in 0..p.t1 {
        summands.push(vec![tr(fm), w1(fn_, false)]);
    }
    for _ in 0..p.t2 {
        summands.push(vec![tr(fm), w1(fn_, true)]);
    }
    ModuleSpec::with_free_scalars(vec![fm, fn_], summands)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn t_membership() {
        assert!(in_t(Triplet::new(2, 2, 3))); // 13 > 12
        assert!(in_t(Triplet::new(2, 2, 4))); // 20 > 16
        assert!(!in_t(Triplet::new(3, 3, 4))); // 26 <= 36
    }

    #[test]
    fn a_seq_values() {
        // k=2: a_i = i
        for i in 0..10 {
            assert_eq!(a_seq(2, i), i as i128);
        }
        assert_eq!(a_seq(3, 1), 1);
        assert_eq!(a_seq(3, 2), 3);
        assert_eq!(a_seq(3, 3), 8);
        assert_eq!(a_seq(3, 4), 21);
        for k in 2..=6 {
            assert_eq!(a_seq(k, 0), 0);
            assert_eq!(a_seq(k, -1), -1);
        }
    }

    #[test]
    fn a_seq_determinant_identity() {
        // a_{i+1} a_{i-1} - a_i^2 is constant in i
        for k in 2..=6i64 {
            let c0 = a_seq(k, 1) * a_seq(k, -1) - a_seq(k, 0) * a_seq(k, 0);
            for i in 0..=20i64 {
                let c = a_seq(k, i + 1) * a_seq(k, i - 1) - a_seq(k, i) * a_seq(k, i);
                assert_eq!(c, c0, "identity fails at k={k}, i={i}");
            }
        }
    }

    #[test]
    fn castle_examples() {
        assert_eq!(
            castle_triplet(Triplet::new(2, 2, 3)).unwrap(),
            Triplet::new(2, 1, 2)
        );
        // km - n = 5 pairs with m = 3
        assert_eq!(
            castle_triplet(Triplet::new(3, 3, 4)).unwrap(),
            Triplet::new(3, 3, 5)
        );
        assert_eq!(
            castle_triplet(Triplet::new(2, 1, 2)),
            Err(CastlingError::NoPartner(0))
        );
    }

    #[test]
    fn castle_involution_on_increasing_side() {
        for (k, m, n) in [(3, 3, 4), (4, 3, 5), (5, 2, 3)] {
            let t = Triplet::new(k, m, n);
            if k * m - n > n {
                let c = castle_triplet(t).unwrap();
                assert_eq!(castle_triplet(c).unwrap(), t);
            }
        }
    }

    #[test]
    fn nu_values() {
        assert_eq!(nu(Triplet::new(2, 2, 3)).unwrap(), 1);
        assert_eq!(nu(Triplet::new(2, 1, 5)).unwrap(), 0); // mk <= n
        assert_eq!(nu(Triplet::new(3, 2, 6)).unwrap(), 0);
        assert!(nu(Triplet::new(3, 3, 4)).is_err()); // outside the domain
    }

    #[test]
    fn nu_zero_iff_trivial_small() {
        for k in 1..=12i64 {
            for m in 1..=12 {
                for n in 1..=12 {
                    let t = Triplet::new(k, m, n);
                    if let Ok(j) = nu(t) {
                        assert_eq!(j == 0, m * k <= n, "mismatch at ({k},{m},{n})");
                    } else {
                        assert!(m * k > n);
                    }
                }
            }
        }
    }

    #[test]
    fn chain_reaches_trivial() {
        let chain = reduction_chain(Triplet::new(2, 3, 4)).unwrap();
        let last = chain.last().unwrap();
        assert!(last.m * last.k <= last.n);
        for w in chain.windows(2) {
            assert!(w[1].k * w[1].m * w[1].n < w[0].k * w[0].m * w[0].n);
        }
    }

    #[test]
    fn family_module_dims() {
        let p = FamilyParams { k: 2, m: 2, n: 3, s1: 0, s2: 0, t1: 0, t2: 0 };
        let ms = family_module(p);
        assert_eq!(ms.space_dim().unwrap(), 12);
        assert_eq!(ms.group_dim(), 2 + 3 + 8);
    }
}
