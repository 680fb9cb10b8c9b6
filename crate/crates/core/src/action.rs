//! Orbit dimension, prehomogeneity and the etale condition, decided by exact
//! rank of the infinitesimal action at sampled rational points.
//!
//! A full-rank witness is a proof of prehomogeneity. A "not prehomogeneous"
//! verdict is only probabilistic (no open orbit found at the sampled
//! points), and is reported as such.

use crate::linalg;
use crate::rat::*;
use crate::rep::RealizedModule;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use serde::{Deserialize, Serialize};

/// Rows = generator images of v; the rank of this matrix is the dimension of
/// the orbit through v. (This is the transpose of the space_dim x group_dim
/// tangent map; the rank is the same and rows are cheaper here.)
pub fn infinitesimal_action_rows(m: &RealizedModule, v: &[Q]) -> Vec<Vec<Q>> {
    assert_eq!(v.len(), m.space_dim(), "dimension mismatch");
    m.action.gens.iter().map(|g| g.apply(v)).collect()
}

/// The space_dim x group_dim matrix whose j-th column is generator_j . v.
pub fn infinitesimal_action_matrix(m: &RealizedModule, v: &[Q]) -> Vec<Vec<Q>> {
    let rows = infinitesimal_action_rows(m, v);
    let s = m.space_dim();
    let g = m.group_dim();
    let mut out = vec![vec![qzero(); g]; s];
    for (j, row) in rows.iter().enumerate() {
        for (i, val) in row.iter().enumerate() {
            out[i][j] = val.clone();
        }
    }
    out
}

pub fn orbit_dim_at(m: &RealizedModule, v: &[Q]) -> usize {
    linalg::rank(&infinitesimal_action_rows(m, v))
}

/// Best witness found, with exact coordinates.
#[derive(Clone, Debug)]
pub struct OrbitCertificate {
    pub witness_vector: Vec<Q>,
    pub orbit_dim: usize,
    pub isotropy_dim: usize,
    pub samples_tried: usize,
}

/// Serializable form of a certificate (witness coordinates as strings).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OrbitCertificateRecord {
    pub witness_vector: Vec<String>,
    pub orbit_dim: usize,
    pub isotropy_dim: usize,
    pub samples_tried: usize,
}

impl OrbitCertificate {
    fn new(m: &RealizedModule, witness: Vec<Q>, orbit_dim: usize, samples: usize) -> Self {
        OrbitCertificate {
            witness_vector: witness,
            orbit_dim,
            isotropy_dim: m.group_dim() - orbit_dim,
            samples_tried: samples,
        }
    }

    pub fn to_record(&self) -> OrbitCertificateRecord {
        OrbitCertificateRecord {
            witness_vector: self.witness_vector.iter().map(|q| q.to_string()).collect(),
            orbit_dim: self.orbit_dim,
            isotropy_dim: self.isotropy_dim,
            samples_tried: self.samples_tried,
        }
    }
}

/// Sample rational vectors of bounded height, keep the best witness.
/// Deterministic for a fixed seed.
pub fn generic_orbit(m: &RealizedModule, samples: usize, height: i64, seed: u64) -> OrbitCertificate {
    assert!(samples >= 1, "need at least one sample");
    assert!(height >= 2, "height must be at least 2");
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let s = m.space_dim();
    if s == 0 {
        return OrbitCertificate::new(m, vec![], 0, samples);
    }
    let mut best: Option<(Vec<Q>, usize)> = None;
    for _ in 0..samples {
        let v = random_vector(&mut rng, s, height);
        let r = orbit_dim_at(m, &v);
        let better = best.as_ref().map_or(true, |(_, b)| r > *b);
        if better {
            best = Some((v, r));
        }
        if let Some((_, b)) = &best {
            if *b == s.min(m.group_dim()) {
                break; // orbit dimension is maximal, no point sampling on
            }
        }
    }
    let (v, r) = best.unwrap();
    OrbitCertificate::new(m, v, r, samples)
}

/// True iff a sampled witness certifies an open orbit.
pub fn is_prehomogeneous(
    m: &RealizedModule,
    samples: usize,
    height: i64,
    seed: u64,
) -> (bool, OrbitCertificate) {
    let cert = generic_orbit(m, samples, height, seed);
    (cert.orbit_dim == m.space_dim(), cert)
}

/// Etale: dim G = dim V and the orbit is open.
pub fn is_etale(m: &RealizedModule, samples: usize, height: i64, seed: u64) -> (bool, OrbitCertificate) {
    let (open, cert) = is_prehomogeneous(m, samples, height, seed);
    (open && m.group_dim() == m.space_dim(), cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::*;

    fn module(torus: usize, factors: Vec<SimpleGroupId>, summands: Vec<Vec<RepSpec>>) -> RealizedModule {
        let k = summands.len();
        let pattern: Vec<Vec<i64>> = (0..torus)
            .map(|i| (0..k).map(|j| (i == j) as i64).collect())
            .collect();
        ModuleSpec::with_pattern(factors, summands, pattern)
            .realize()
            .unwrap()
    }

    #[test]
    fn zero_vector_rank_zero() {
        let f = sl(2);
        let m = module(1, vec![f], vec![vec![RepSpec::new(f, RepLabel::ThreeOmega1, false)]]);
        let v = vec![qzero(); 4];
        assert_eq!(orbit_dim_at(&m, &v), 0);
    }

    #[test]
    fn sl2_on_binary_cubics_without_torus() {
        let f = sl(2);
        let ms = ModuleSpec::with_pattern(
            vec![f],
            vec![vec![RepSpec::new(f, RepLabel::ThreeOmega1, false)]],
            vec![],
        );
        let m = ms.realize().unwrap();
        let cert = generic_orbit(&m, 5, 50, 7);
        assert_eq!(cert.orbit_dim, 3); // < 4: sl2 alone is not enough
    }

    #[test]
    fn gl2_on_binary_cubics_is_etale() {
        let f = sl(2);
        let m = module(1, vec![f], vec![vec![RepSpec::new(f, RepLabel::ThreeOmega1, false)]]);
        let (et, cert) = is_etale(&m, 5, 50, 7);
        assert!(et);
        assert_eq!(cert.isotropy_dim, 0);
    }

    #[test]
    fn sym2_c3_isotropy_is_so3() {
        // GL(3) on symmetric 3x3: generic stabilizer is the orthogonal algebra
        let f = sl(3);
        let m = module(1, vec![f], vec![vec![RepSpec::new(f, RepLabel::TwoOmega1, false)]]);
        let (open, cert) = is_prehomogeneous(&m, 5, 50, 13);
        assert!(open);
        assert_eq!(cert.isotropy_dim, 3);
    }

    #[test]
    fn wedge2_c6_isotropy_is_sp3() {
        let f = sl(6);
        let m = module(1, vec![f], vec![vec![RepSpec::new(f, RepLabel::Omega(2), false)]]);
        let (open, cert) = is_prehomogeneous(&m, 5, 50, 99);
        assert!(open);
        assert_eq!(cert.orbit_dim, 15);
        assert_eq!(cert.isotropy_dim, 21);
    }

    #[test]
    fn deficient_module_not_prehomogeneous() {
        // one scalar, three copies of C^2: group dim 4 < space dim 6
        let f = sl(2);
        let w1 = RepSpec::new(f, RepLabel::Omega(1), false);
        let ms = ModuleSpec::with_pattern(
            vec![f],
            vec![vec![w1], vec![w1], vec![w1]],
            vec![vec![1, 1, 1]],
        );
        let m = ms.realize().unwrap();
        let (open, cert) = is_prehomogeneous(&m, 5, 50, 3);
        assert!(!open);
        assert!(cert.orbit_dim <= 4);
    }

    #[test]
    fn rescaling_keeps_rank() {
        let f = sl(3);
        let m = module(1, vec![f], vec![vec![RepSpec::new(f, RepLabel::TwoOmega1, false)]]);
        let mut rng = rand_chacha::ChaCha20Rng::seed_from_u64(5);
        let v = random_vector(&mut rng, 6, 20);
        let r1 = orbit_dim_at(&m, &v);
        let scaled: Vec<Q> = v.iter().map(|x| x * qr(7, 3)).collect();
        assert_eq!(r1, orbit_dim_at(&m, &scaled));
    }
}
