//! Commutative ring abstraction so the invariant evaluators run both over Q
//! and over dual numbers Q[t]/(t^2). The dual-number pass gives exact
//! first-order directional derivatives without finite differences.

use crate::rat::*;
use num::Zero;

pub trait Ring: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn from_q(q: &Q) -> Self;

    fn scale(&self, q: &Q) -> Self {
        self.mul(&Self::from_q(q))
    }
}

impl Ring for Q {
    fn zero() -> Self {
        qzero()
    }
    fn one() -> Self {
        qone()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self.clone()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_q(q: &Q) -> Self {
        q.clone()
    }
}

/// a + b*t with t^2 = 0.
#[derive(Clone, Debug, PartialEq)]
pub struct Dual {
    pub val: Q,
    pub der: Q,
}

impl Dual {
    pub fn new(val: Q, der: Q) -> Self {
        Dual { val, der }
    }
    pub fn constant(val: Q) -> Self {
        Dual { val, der: qzero() }
    }
}

impl Ring for Dual {
    fn zero() -> Self {
        Dual::constant(qzero())
    }
    fn one() -> Self {
        Dual::constant(qone())
    }
    fn add(&self, o: &Self) -> Self {
        Dual::new(&self.val + &o.val, &self.der + &o.der)
    }
    fn sub(&self, o: &Self) -> Self {
        Dual::new(&self.val - &o.val, &self.der - &o.der)
    }
    fn mul(&self, o: &Self) -> Self {
        Dual::new(&self.val * &o.val, &self.val * &o.der + &self.der * &o.val)
    }
    fn neg(&self) -> Self {
        Dual::new(-self.val.clone(), -self.der.clone())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.val) && Zero::is_zero(&self.der)
    }
    fn from_q(q: &Q) -> Self {
        Dual::constant(q.clone())
    }
}

/// Division-free determinant (Berkowitz); works over any commutative ring.
pub fn det_berkowitz<R: Ring>(a: &[Vec<R>]) -> R {
    let n = a.len();
    if n == 0 {
        return R::one();
    }
    // c holds the characteristic-polynomial coefficients so far, c[0] = 1.
    let mut c: Vec<R> = vec![R::one(), a[0][0].neg()];
    for k in 1..n {
        // Toeplitz data: t0 = a[k][k], powers row*col via principal minors.
        let m = k; // leading block size
        let mut t = Vec::with_capacity(k + 2);
        t.push(R::one());
        t.push(a[k][k].clone());
        // r = row a[k][0..k], col = a[0..k][k]
        let row: Vec<R> = (0..m).map(|j| a[k][j].clone()).collect();
        let col: Vec<R> = (0..m).map(|i| a[i][k].clone()).collect();
        let mut vec_cur = col.clone();
        for _pw in 0..m {
            // row . vec_cur
            let mut s = R::zero();
            for i in 0..m {
                s = s.add(&row[i].mul(&vec_cur[i]));
            }
            t.push(s);
            // vec_cur = A_block * vec_cur
            let mut nv = vec![R::zero(); m];
            for i in 0..m {
                let mut s = R::zero();
                for j in 0..m {
                    s = s.add(&a[i][j].mul(&vec_cur[j]));
                }
                nv[i] = s;
            }
            vec_cur = nv;
        }
        // new c' of length k+2: c'[i] = sum_{j} q[j] * c[i-j]
        // where the Toeplitz column entries are q[0]=1, q[1]=-t[1], q[v]=-t[v].
        let mut q = vec![R::one()];
        for v in 1..=k + 1 {
            q.push(t[v].neg());
        }
        let mut nc = vec![R::zero(); k + 2];
        for (i, qi) in q.iter().enumerate() {
            for (j, cj) in c.iter().enumerate() {
                if i + j < k + 2 {
                    nc[i + j] = nc[i + j].add(&qi.mul(cj));
                }
            }
        }
        c = nc;
    }
    // det = (-1)^n * c[n]
    let d = c[n].clone();
    if n % 2 == 1 {
        d.neg()
    } else {
        d
    }
}

/// Pfaffian by expansion along the first row. Input must be antisymmetric of
/// even size; the caller checks antisymmetry where it is a contract.
pub fn pfaffian_ring<R: Ring>(a: &[Vec<R>]) -> R {
    let n = a.len();
    assert!(n % 2 == 0, "pfaffian needs even size");
    if n == 0 {
        return R::one();
    }
    if n == 2 {
        return a[0][1].clone();
    }
    let mut acc = R::zero();
    for j in 1..n {
        if a[0][j].is_zero() {
            continue;
        }
        // remove rows/cols 0 and j
        let keep: Vec<usize> = (0..n).filter(|&k| k != 0 && k != j).collect();
        let sub: Vec<Vec<R>> = keep
            .iter()
            .map(|&r| keep.iter().map(|&c| a[r][c].clone()).collect())
            .collect();
        let term = a[0][j].mul(&pfaffian_ring(&sub));
        // sign (-1)^{j-1} for column j of the first row
        acc = if (j - 1) % 2 == 0 {
            acc.add(&term)
        } else {
            acc.sub(&term)
        };
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::det_exact;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn berkowitz_matches_bareiss() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 1..=5 {
            for _ in 0..10 {
                let m: Vec<Vec<Q>> = (0..n)
                    .map(|_| (0..n).map(|_| qi(rng.gen_range(-5..=5))).collect())
                    .collect();
                assert_eq!(det_berkowitz(&m), det_exact(&m));
            }
        }
    }

    #[test]
    fn dual_derivative_of_square() {
        // f(x) = x^2 at x=3 along direction 1: derivative 6
        let x = Dual::new(qi(3), qi(1));
        let y = x.mul(&x);
        assert_eq!(y.val, qi(9));
        assert_eq!(y.der, qi(6));
    }

    #[test]
    fn pf_squared_is_det_4x4() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let mut a = vec![vec![qzero(); 4]; 4];
            for i in 0..4 {
                for j in i + 1..4 {
                    let v = qi(rng.gen_range(-6..=6));
                    a[i][j] = v.clone();
                    a[j][i] = -v;
                }
            }
            let pf = pfaffian_ring(&a);
            assert_eq!(&pf * &pf, det_exact(&a));
        }
    }
}
