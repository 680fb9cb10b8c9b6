//! Construction of explicit exact-rational matrix realizations of the Lie
//! algebras acting in the tables, and the combinators (dual, tensor,
//! symmetric/exterior power, direct sum with scalar pattern) that assemble
//! whole modules from them.

use crate::clifford;
use crate::linalg::{solve_in_column_span, SparseMat};
use crate::octonion;
use crate::rat::*;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt;
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    Sl,
    Sp,
    So,
    Spin,
    G2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SimpleGroupId {
    pub family: Family,
    /// rank parameter; ignored for G2
    pub n: usize,
}

pub fn sl(n: usize) -> SimpleGroupId {
    SimpleGroupId { family: Family::Sl, n }
}
pub fn sp(n: usize) -> SimpleGroupId {
    SimpleGroupId { family: Family::Sp, n }
}
pub fn so(n: usize) -> SimpleGroupId {
    SimpleGroupId { family: Family::So, n }
}
pub fn spin(n: usize) -> SimpleGroupId {
    SimpleGroupId { family: Family::Spin, n }
}
pub fn g2() -> SimpleGroupId {
    SimpleGroupId { family: Family::G2, n: 0 }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RepError {
    #[error("invalid group parameter: {0}")]
    InvalidGroup(String),
    #[error("label not available for this group: {0}")]
    InvalidLabel(String),
    #[error("unsupported construction: {0}")]
    Unsupported(String),
    #[error("empty direct sum")]
    EmptySum,
    #[error("scalar pattern refers to missing summand or coordinate")]
    BadPattern,
    #[error("summands are representations of different algebras")]
    MixedAlgebras,
}

impl SimpleGroupId {
    pub fn validate(&self) -> Result<(), RepError> {
        let ok = match self.family {
            Family::Sl => self.n >= 2,
            Family::Sp => self.n >= 1,
            Family::So | Family::Spin => self.n >= 3,
            Family::G2 => true,
        };
        if ok {
            Ok(())
        } else {
            Err(RepError::InvalidGroup(format!("{self}")))
        }
    }

    /// Dimension of the group (= of its Lie algebra).
    pub fn dim(&self) -> usize {
        match self.family {
            Family::Sl => self.n * self.n - 1,
            Family::Sp => self.n * (2 * self.n + 1),
            Family::So | Family::Spin => self.n * (self.n - 1) / 2,
            Family::G2 => 14,
        }
    }
}

impl fmt::Display for SimpleGroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::Sl => write!(f, "SL({})", self.n),
            Family::Sp => write!(f, "Sp({})", self.n),
            Family::So => write!(f, "SO({})", self.n),
            Family::Spin => write!(f, "Spin({})", self.n),
            Family::G2 => write!(f, "G2"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RepLabel {
    Omega(usize),
    TwoOmega1,
    ThreeOmega1,
    SpinRep,
    HalfSpinEven,
    HalfSpinOdd,
    VecRep,
    Trivial,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RepSpec {
    pub group: SimpleGroupId,
    pub label: RepLabel,
    pub dual: bool,
}

impl RepSpec {
    pub fn new(group: SimpleGroupId, label: RepLabel, dual: bool) -> Self {
        RepSpec { group, label, dual }
    }

    pub fn dualized(mut self) -> Self {
        // the dual of a self-dual trivial slot stays trivial
        if self.label != RepLabel::Trivial {
            self.dual = !self.dual;
        }
        self
    }

    pub fn dim(&self) -> Result<usize, RepError> {
        self.group.validate()?;
        let n = self.group.n;
        let bad = || RepError::InvalidLabel(format!("{:?} on {}", self.label, self.group));
        Ok(match (self.group.family, self.label) {
            (_, RepLabel::Trivial) => 1,
            (Family::Sl, RepLabel::Omega(k)) => {
                // k = n is the one-dimensional top power; the algebra acts by 0
                if k < 1 || k > n {
                    return Err(bad());
                }
                binomial(n, k)
            }
            (Family::Sl, RepLabel::TwoOmega1) => n * (n + 1) / 2,
            (Family::Sl, RepLabel::ThreeOmega1) => binomial(n + 2, 3),
            (Family::Sp, RepLabel::Omega(1)) => 2 * n,
            (Family::Sp, RepLabel::Omega(2)) if n >= 2 => n * (2 * n - 1) - 1,
            (Family::Sp, RepLabel::Omega(3)) if n >= 3 => binomial(2 * n, 3) - 2 * n,
            (Family::So, RepLabel::VecRep | RepLabel::Omega(1)) => n,
            (Family::Spin, RepLabel::VecRep | RepLabel::Omega(1)) => n,
            (Family::Spin, RepLabel::SpinRep) if n % 2 == 1 && (7..=13).contains(&n) => {
                1 << (n / 2)
            }
            (Family::Spin, RepLabel::HalfSpinEven | RepLabel::HalfSpinOdd)
                if n % 2 == 0 && (8..=14).contains(&n) =>
            {
                1 << (n / 2 - 1)
            }
            (Family::G2, RepLabel::Omega(2)) => 7,
            _ => return Err(bad()),
        })
    }
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as usize
}

/// Matrices of one Lie algebra acting on a space. `gens.len()` is the
/// algebra dimension; all generators are `space_dim` square.
#[derive(Clone, Debug)]
pub struct LieAction {
    pub space_dim: usize,
    pub gens: Vec<SparseMat>,
}

impl LieAction {
    pub fn algebra_dim(&self) -> usize {
        self.gens.len()
    }

    pub fn trivial(space_dim: usize, algebra_dim: usize) -> Self {
        LieAction {
            space_dim,
            gens: vec![SparseMat::zero(space_dim, space_dim); algebra_dim],
        }
    }
}

/// sl(n): off-diagonal units E_ij (i != j, lexicographic), then the Cartan
/// differences E_ii - E_{i+1,i+1}.
fn sl_defining(n: usize) -> LieAction {
    let mut gens = Vec::with_capacity(n * n - 1);
    for i in 0..n {
        for j in 0..n {
            if i != j {
                gens.push(SparseMat::from_triplets(
                    n,
                    n,
                    vec![(i as u32, j as u32, qone())],
                ));
            }
        }
    }
    for i in 0..n - 1 {
        gens.push(SparseMat::from_triplets(
            n,
            n,
            vec![
                (i as u32, i as u32, qone()),
                ((i + 1) as u32, (i + 1) as u32, qi(-1)),
            ],
        ));
    }
    LieAction { space_dim: n, gens }
}

/// The fixed symplectic form: antidiagonal, +1 in the top rows, -1 below.
pub fn symplectic_form(n: usize) -> SparseMat {
    let d = 2 * n;
    let ts = (0..d)
        .map(|i| {
            let v = if i < n { qone() } else { qi(-1) };
            (i as u32, (d - 1 - i) as u32, v)
        })
        .collect();
    SparseMat::from_triplets(d, d, ts)
}

/// sp(n) on dimension 2n: X with X^T J + J X = 0, i.e. X = -J S for S
/// symmetric. Basis order: S = E_ii, then E_ij + E_ji lexicographic.
fn sp_defining(n: usize) -> LieAction {
    let d = 2 * n;
    let j = symplectic_form(n);
    let neg_j = j.scale(&qi(-1));
    let mut gens = Vec::with_capacity(n * (2 * n + 1));
    let mut push = |s: SparseMat| {
        gens.push(neg_j.matmul(&s));
    };
    for i in 0..d {
        push(SparseMat::from_triplets(
            d,
            d,
            vec![(i as u32, i as u32, qone())],
        ));
    }
    for i in 0..d {
        for k in i + 1..d {
            push(SparseMat::from_triplets(
                d,
                d,
                vec![(i as u32, k as u32, qone()), (k as u32, i as u32, qone())],
            ));
        }
    }
    LieAction { space_dim: d, gens }
}

/// so(n) in the orthonormal realization (form Q = identity): E_ij - E_ji.
fn so_defining(n: usize) -> LieAction {
    let mut gens = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            gens.push(SparseMat::from_triplets(
                n,
                n,
                vec![(i as u32, j as u32, qone()), (j as u32, i as u32, qi(-1))],
            ));
        }
    }
    LieAction { space_dim: n, gens }
}

/// Defining representation of a group.
pub fn build_defining(group: SimpleGroupId) -> Result<LieAction, RepError> {
    group.validate()?;
    Ok(match group.family {
        Family::Sl => sl_defining(group.n),
        Family::Sp => sp_defining(group.n),
        Family::So => so_defining(group.n),
        Family::Spin => LieAction {
            space_dim: group.n,
            gens: clifford::so_split_generators(group.n),
        },
        Family::G2 => build_g2(),
    })
}

/// Spin and half-spin representations, 7 <= n <= 14.
pub fn build_spin(group: SimpleGroupId, label: RepLabel) -> Result<LieAction, RepError> {
    if group.family != Family::Spin {
        return Err(RepError::InvalidLabel(format!("{label:?} on {group}")));
    }
    let n = group.n;
    let spec = RepSpec::new(group, label, false);
    let dim = spec.dim()?;
    let gens = match label {
        RepLabel::SpinRep => clifford::spin_generators(n),
        RepLabel::HalfSpinEven => clifford::halfspin_generators(n, true),
        RepLabel::HalfSpinOdd => clifford::halfspin_generators(n, false),
        _ => return Err(RepError::InvalidLabel(format!("{label:?} on {group}"))),
    };
    debug_assert_eq!(gens[0].nrows, dim);
    Ok(LieAction { space_dim: dim, gens })
}

/// The 7-dimensional fundamental representation of G2 as octonion
/// derivations restricted to the imaginary units.
pub fn build_g2() -> LieAction {
    LieAction {
        space_dim: 7,
        gens: octonion::derivation_basis(),
    }
}

/// Dual action: X -> -X^T on each generator.
pub fn dualize(a: &LieAction) -> LieAction {
    LieAction {
        space_dim: a.space_dim,
        gens: a.gens.iter().map(|g| g.neg_transpose()).collect(),
    }
}

/// Outer tensor product: the product algebra acts on V (x) W by the
/// generators X (x) 1 followed by 1 (x) Y. Coordinate (i,a) -> i*dim(W)+a.
pub fn tensor(a: &LieAction, b: &LieAction) -> LieAction {
    let ia = SparseMat::identity(a.space_dim);
    let ib = SparseMat::identity(b.space_dim);
    let mut gens = Vec::with_capacity(a.gens.len() + b.gens.len());
    for x in &a.gens {
        gens.push(x.kron(&ib));
    }
    for y in &b.gens {
        gens.push(ia.kron(y));
    }
    LieAction {
        space_dim: a.space_dim * b.space_dim,
        gens,
    }
}

pub fn tensor_many(actions: &[LieAction]) -> Result<LieAction, RepError> {
    let mut it = actions.iter();
    let first = it.next().ok_or(RepError::EmptySum)?.clone();
    Ok(it.fold(first, |acc, b| tensor(&acc, b)))
}

fn multiset_basis(n: usize, p: usize) -> (Vec<Vec<usize>>, HashMap<Vec<usize>, usize>) {
    // nondecreasing index tuples, lexicographic
    let mut out = Vec::new();
    let mut cur = vec![0usize; p];
    fn rec(n: usize, p: usize, start: usize, cur: &mut Vec<usize>, pos: usize, out: &mut Vec<Vec<usize>>) {
        if pos == p {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur[pos] = i;
            rec(n, p, i, cur, pos + 1, out);
        }
    }
    rec(n, p, 0, &mut cur, 0, &mut out);
    let map = out
        .iter()
        .enumerate()
        .map(|(k, v)| (v.clone(), k))
        .collect();
    (out, map)
}

fn subset_basis(n: usize, p: usize) -> (Vec<Vec<usize>>, HashMap<Vec<usize>, usize>) {
    let mut out = Vec::new();
    let mut cur = vec![0usize; p];
    fn rec(n: usize, p: usize, start: usize, cur: &mut Vec<usize>, pos: usize, out: &mut Vec<Vec<usize>>) {
        if pos == p {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur[pos] = i;
            rec(n, p, i + 1, cur, pos + 1, out);
        }
    }
    rec(n, p, 0, &mut cur, 0, &mut out);
    let map = out
        .iter()
        .enumerate()
        .map(|(k, v)| (v.clone(), k))
        .collect();
    (out, map)
}

/// Induced derivation action on the p-th symmetric power. Basis: monomials
/// (nondecreasing tuples), lexicographic.
pub fn sym_power(a: &LieAction, p: usize) -> Result<LieAction, RepError> {
    if p == 0 || p > 64 {
        return Err(RepError::Unsupported(format!("symmetric power {p}")));
    }
    let n = a.space_dim;
    let (basis, index) = multiset_basis(n, p);
    let dim = basis.len();
    let gens = a
        .gens
        .iter()
        .map(|x| {
            let mut ts = Vec::new();
            for (col, mono) in basis.iter().enumerate() {
                // distinct indices with multiplicity
                let mut seen: Vec<(usize, usize)> = Vec::new();
                for &i in mono {
                    match seen.last_mut() {
                        Some((j, c)) if *j == i => *c += 1,
                        _ => seen.push((i, 1)),
                    }
                }
                for &(i, mult) in &seen {
                    for (r, c, v) in &x.entries {
                        if *c as usize != i {
                            continue;
                        }
                        let mut m = mono.clone();
                        let pos = m.iter().position(|&t| t == i).unwrap();
                        m[pos] = *r as usize;
                        m.sort_unstable();
                        let row = index[&m];
                        ts.push((row as u32, col as u32, v * qi(mult as i64)));
                    }
                }
            }
            SparseMat::from_triplets(dim, dim, ts)
        })
        .collect();
    Ok(LieAction { space_dim: dim, gens })
}

/// Induced derivation action on the p-th exterior power. Basis: strictly
/// increasing tuples, lexicographic.
pub fn wedge_power(a: &LieAction, p: usize) -> Result<LieAction, RepError> {
    let n = a.space_dim;
    if p == 0 || p > n {
        return Err(RepError::Unsupported(format!("exterior power {p} of dim {n}")));
    }
    let (basis, index) = subset_basis(n, p);
    let dim = basis.len();
    let gens = a
        .gens
        .iter()
        .map(|x| {
            let mut ts = Vec::new();
            for (col, set) in basis.iter().enumerate() {
                for (slot, &i) in set.iter().enumerate() {
                    for (r, c, v) in &x.entries {
                        if *c as usize != i {
                            continue;
                        }
                        let r = *r as usize;
                        if set.binary_search(&r).is_ok() && r != i {
                            continue; // repeated index kills the wedge
                        }
                        let mut m = set.clone();
                        m[slot] = r;
                        // sort with sign
                        let mut sign = 1i64;
                        let mut k = slot;
                        while k > 0 && m[k - 1] > m[k] {
                            m.swap(k - 1, k);
                            sign = -sign;
                            k -= 1;
                        }
                        while k + 1 < m.len() && m[k] > m[k + 1] {
                            m.swap(k, k + 1);
                            sign = -sign;
                            k += 1;
                        }
                        let row = index[&m];
                        ts.push((row as u32, col as u32, v * qi(sign)));
                    }
                }
            }
            SparseMat::from_triplets(dim, dim, ts)
        })
        .collect();
    Ok(LieAction { space_dim: dim, gens })
}

/// Fundamental representations omega_2, omega_3 of Sp(n): kernels of the
/// contraction maps from the exterior powers. Returns the restricted action
/// together with the embedding basis (columns into the exterior power).
pub fn sp_fundamental_with_embedding(
    n: usize,
    k: usize,
) -> Result<(LieAction, Vec<Vec<Q>>), RepError> {
    let d = 2 * n;
    let j = symplectic_form(n).to_dense();
    let wedge = wedge_power(&sp_defining(n), k)?;
    let (basis, _) = subset_basis(d, k);
    // rows of the contraction map
    let mut rows = Vec::new();
    match k {
        2 => {
            let mut row = vec![qzero(); basis.len()];
            for (idx, s) in basis.iter().enumerate() {
                row[idx] = j[s[0]][s[1]].clone();
            }
            rows.push(row);
        }
        3 => {
            for coord in 0..d {
                let mut row = vec![qzero(); basis.len()];
                for (idx, s) in basis.iter().enumerate() {
                    // c(e_a^e_b^e_c) = J_ab e_c - J_ac e_b + J_bc e_a
                    let (a, b, c) = (s[0], s[1], s[2]);
                    let mut v = qzero();
                    if c == coord {
                        v += &j[a][b];
                    }
                    if b == coord {
                        v -= &j[a][c];
                    }
                    if a == coord {
                        v += &j[b][c];
                    }
                    row[idx] = v;
                }
                rows.push(row);
            }
        }
        _ => return Err(RepError::Unsupported(format!("sp fundamental omega_{k}"))),
    }
    let kernel = crate::linalg::kernel_basis(rows, basis.len());
    let dim = kernel.len();
    // restrict each generator: solve B R = X B columnwise
    let gens = wedge
        .gens
        .iter()
        .map(|x| {
            let images: Vec<Vec<Q>> = kernel.iter().map(|b| x.apply(b)).collect();
            let cols = solve_in_column_span(&kernel, &images);
            let mut ts = Vec::new();
            for (c, colv) in cols.iter().enumerate() {
                for (r, v) in colv.iter().enumerate() {
                    if !num::Zero::is_zero(v) {
                        ts.push((r as u32, c as u32, v.clone()));
                    }
                }
            }
            SparseMat::from_triplets(dim, dim, ts)
        })
        .collect();
    Ok((LieAction { space_dim: dim, gens }, kernel))
}

/// Build the matrices for one RepSpec.
pub fn build_rep(spec: &RepSpec) -> Result<LieAction, RepError> {
    spec.group.validate()?;
    let _ = spec.dim()?; // validates the label
    let base = match (spec.group.family, spec.label) {
        (_, RepLabel::Trivial) => LieAction::trivial(1, spec.group.dim()),
        (Family::Sl, RepLabel::Omega(1)) => sl_defining(spec.group.n),
        (Family::Sl, RepLabel::Omega(k)) => wedge_power(&sl_defining(spec.group.n), k)?,
        (Family::Sl, RepLabel::TwoOmega1) => sym_power(&sl_defining(spec.group.n), 2)?,
        (Family::Sl, RepLabel::ThreeOmega1) => sym_power(&sl_defining(spec.group.n), 3)?,
        (Family::Sp, RepLabel::Omega(1)) => sp_defining(spec.group.n),
        (Family::Sp, RepLabel::Omega(k @ (2 | 3))) => {
            sp_fundamental_with_embedding(spec.group.n, k)?.0
        }
        (Family::So, RepLabel::VecRep | RepLabel::Omega(1)) => so_defining(spec.group.n),
        (Family::Spin, RepLabel::VecRep | RepLabel::Omega(1)) => build_defining(spec.group)?,
        (Family::Spin, RepLabel::SpinRep | RepLabel::HalfSpinEven | RepLabel::HalfSpinOdd) => {
            build_spin(spec.group, spec.label)?
        }
        (Family::G2, RepLabel::Omega(2)) => build_g2(),
        _ => {
            return Err(RepError::InvalidLabel(format!(
                "{:?} on {}",
                spec.label, spec.group
            )))
        }
    };
    Ok(if spec.dual { dualize(&base) } else { base })
}

/// Direct sum of representations of one algebra, plus one torus generator
/// per pattern row acting as the stated integer weight on each summand.
/// Generator order: torus coordinates first, then the shared algebra.
pub fn direct_sum(summands: &[LieAction], pattern: &[Vec<i64>]) -> Result<LieAction, RepError> {
    if summands.is_empty() {
        return Err(RepError::EmptySum);
    }
    let alg = summands[0].algebra_dim();
    if summands.iter().any(|s| s.algebra_dim() != alg) {
        return Err(RepError::MixedAlgebras);
    }
    if pattern.iter().any(|row| row.len() != summands.len()) {
        return Err(RepError::BadPattern);
    }
    let total: usize = summands.iter().map(|s| s.space_dim).sum();
    let offsets: Vec<usize> = summands
        .iter()
        .scan(0usize, |acc, s| {
            let o = *acc;
            *acc += s.space_dim;
            Some(o)
        })
        .collect();
    let mut gens = Vec::with_capacity(pattern.len() + alg);
    for row in pattern {
        let mut ts = Vec::new();
        for (s, w) in row.iter().enumerate() {
            if *w != 0 {
                for i in 0..summands[s].space_dim {
                    let p = (offsets[s] + i) as u32;
                    ts.push((p, p, qi(*w)));
                }
            }
        }
        gens.push(SparseMat::from_triplets(total, total, ts));
    }
    for g in 0..alg {
        let mut ts = Vec::new();
        for (s, act) in summands.iter().enumerate() {
            for (r, c, v) in &act.gens[g].entries {
                ts.push((
                    (offsets[s] + *r as usize) as u32,
                    (offsets[s] + *c as usize) as u32,
                    v.clone(),
                ));
            }
        }
        gens.push(SparseMat::from_triplets(total, total, ts));
    }
    Ok(LieAction { space_dim: total, gens })
}

/// A symbolic module: torus rank, simple factors, tensor summands, and the
/// scalar pattern saying which torus coordinate scales which summand (with
/// integer weight, so GL_n-center style patterns are expressible).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleSpec {
    pub torus_rank: usize,
    pub factors: Vec<SimpleGroupId>,
    /// summands[s][f] is the representation of factor f in summand s
    pub summands: Vec<Vec<RepSpec>>,
    /// pattern[t][s] = weight of torus coordinate t on summand s
    pub pattern: Vec<Vec<i64>>,
}

impl ModuleSpec {
    /// Independent scalar per summand.
    pub fn with_free_scalars(factors: Vec<SimpleGroupId>, summands: Vec<Vec<RepSpec>>) -> Self {
        let k = summands.len();
        let pattern = (0..k)
            .map(|i| (0..k).map(|j| (i == j) as i64).collect())
            .collect();
        ModuleSpec { torus_rank: k, factors, summands, pattern }
    }

    pub fn with_pattern(
        factors: Vec<SimpleGroupId>,
        summands: Vec<Vec<RepSpec>>,
        pattern: Vec<Vec<i64>>,
    ) -> Self {
        ModuleSpec {
            torus_rank: pattern.len(),
            factors,
            summands,
            pattern,
        }
    }

    pub fn validate(&self) -> Result<(), RepError> {
        for f in &self.factors {
            f.validate()?;
        }
        for s in &self.summands {
            if s.len() != self.factors.len() {
                return Err(RepError::BadPattern);
            }
            for (f, r) in self.factors.iter().zip(s) {
                if r.group != *f {
                    return Err(RepError::MixedAlgebras);
                }
                r.dim()?;
            }
        }
        if self.pattern.len() != self.torus_rank
            || self.pattern.iter().any(|row| row.len() != self.summands.len())
        {
            return Err(RepError::BadPattern);
        }
        Ok(())
    }

    pub fn summand_dim(&self, s: usize) -> Result<usize, RepError> {
        self.summands[s]
            .iter()
            .try_fold(1usize, |acc, r| Ok(acc * r.dim()?))
    }

    pub fn space_dim(&self) -> Result<usize, RepError> {
        (0..self.summands.len()).try_fold(0usize, |acc, s| Ok(acc + self.summand_dim(s)?))
    }

    pub fn group_dim(&self) -> usize {
        self.torus_rank + self.factors.iter().map(|f| f.dim()).sum::<usize>()
    }

    /// Byte offset of each summand in the flat coordinate vector.
    pub fn summand_offsets(&self) -> Result<Vec<usize>, RepError> {
        let mut out = Vec::with_capacity(self.summands.len());
        let mut acc = 0;
        for s in 0..self.summands.len() {
            out.push(acc);
            acc += self.summand_dim(s)?;
        }
        Ok(out)
    }

    pub fn realize(&self) -> Result<RealizedModule, RepError> {
        self.validate()?;
        let mut cache: HashMap<RepSpec, LieAction> = HashMap::new();
        let mut built: Vec<LieAction> = Vec::new();
        for s in &self.summands {
            if s.is_empty() {
                // no simple factors: a line acted on by the torus alone
                built.push(LieAction { space_dim: 1, gens: vec![] });
                continue;
            }
            let per_factor: Vec<LieAction> = s
                .iter()
                .map(|r| -> Result<LieAction, RepError> {
                    if let Some(a) = cache.get(r) {
                        return Ok(a.clone());
                    }
                    let a = build_rep(r)?;
                    cache.insert(*r, a.clone());
                    Ok(a)
                })
                .collect::<Result<_, _>>()?;
            built.push(tensor_many(&per_factor)?);
        }
        let action = direct_sum(&built, &self.pattern)?;
        debug_assert_eq!(action.algebra_dim(), self.group_dim());
        Ok(RealizedModule {
            spec: self.clone(),
            action,
        })
    }
}

impl fmt::Display for ModuleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GL1^{} x ", self.torus_rank)?;
        for (i, g) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " x ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, " on ")?;
        for (i, s) in self.summands.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let parts: Vec<String> = s.iter().map(|r| format!("{:?}{}", r.label, if r.dual { "*" } else { "" })).collect();
            write!(f, "({})", parts.join("(x)"))?;
        }
        Ok(())
    }
}

/// A module together with its realized matrices.
#[derive(Clone, Debug)]
pub struct RealizedModule {
    pub spec: ModuleSpec,
    pub action: LieAction,
}

impl RealizedModule {
    pub fn group_dim(&self) -> usize {
        self.action.algebra_dim()
    }
    pub fn space_dim(&self) -> usize {
        self.action.space_dim
    }
    pub fn torus_rank(&self) -> usize {
        self.spec.torus_rank
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{in_span, span_rank};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn bracket_closed(a: &LieAction) -> bool {
        for i in 0..a.gens.len() {
            for j in i + 1..a.gens.len() {
                if !in_span(&a.gens, &a.gens[i].commutator(&a.gens[j])) {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn sl2_triple() {
        let a = sl_defining(2);
        assert_eq!(a.algebra_dim(), 3);
        assert_eq!(a.space_dim, 2);
        assert!(bracket_closed(&a));
    }

    #[test]
    fn sp1_equals_sl2() {
        let a = sp_defining(1);
        assert_eq!(a.algebra_dim(), 3);
        assert_eq!(a.space_dim, 2);
        let mut all = a.gens.clone();
        all.extend(sl_defining(2).gens);
        assert_eq!(span_rank(&all), 3, "sp(1) and sl(2) span the same matrices");
    }

    #[test]
    fn sp_preserves_form() {
        for n in [1, 2, 3] {
            let a = sp_defining(n);
            assert_eq!(a.algebra_dim(), n * (2 * n + 1));
            let j = symplectic_form(n);
            for x in &a.gens {
                assert!(x.transpose().matmul(&j).add(&j.matmul(x)).is_zero());
            }
            assert!(bracket_closed(&a));
        }
    }

    #[test]
    fn so3_antisymmetric() {
        let a = so_defining(3);
        assert_eq!(a.algebra_dim(), 3);
        for x in &a.gens {
            assert!(x.add(&x.transpose()).is_zero());
        }
        assert!(bracket_closed(&a));
    }

    #[test]
    fn dualize_involution_and_trace() {
        let a = sl_defining(3);
        let d = dualize(&dualize(&a));
        for (x, y) in a.gens.iter().zip(&d.gens) {
            assert_eq!(x, y);
        }
        let dual = dualize(&a);
        let mut all = a.gens.clone();
        all.extend(dual.gens.clone());
        // sl(n) defining and its dual have the same span of generators
        assert_eq!(span_rank(&all), 8);
    }

    #[test]
    fn wedge_and_sym_dims() {
        let sl6 = sl_defining(6);
        let w3 = wedge_power(&sl6, 3).unwrap();
        assert_eq!(w3.space_dim, 20);
        let sl2 = sl_defining(2);
        let s3 = sym_power(&sl2, 3).unwrap();
        assert_eq!(s3.space_dim, 4);
        assert!(bracket_closed(&w3));
        assert!(bracket_closed(&s3));
    }

    #[test]
    fn tensor_leibniz() {
        let a = sl_defining(3);
        let b = sl_defining(2);
        let t = tensor(&a, &b);
        assert_eq!(t.space_dim, 6);
        assert_eq!(t.algebra_dim(), 11);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let v = random_vector(&mut rng, 3, 10);
        let w = random_vector(&mut rng, 2, 10);
        let mut vw = vec![qzero(); 6];
        for i in 0..3 {
            for j in 0..2 {
                vw[i * 2 + j] = &v[i] * &w[j];
            }
        }
        // generator 0 comes from the first factor: acts as (Xv) (x) w
        let xv = a.gens[0].apply(&v);
        let lhs = t.gens[0].apply(&vw);
        for i in 0..3 {
            for j in 0..2 {
                assert_eq!(lhs[i * 2 + j], &xv[i] * &w[j]);
            }
        }
        // a generator of the second factor: acts as v (x) (Yw)
        let y = &t.gens[a.algebra_dim()];
        let yw = b.gens[0].apply(&w);
        let rhs = y.apply(&vw);
        for i in 0..3 {
            for j in 0..2 {
                assert_eq!(rhs[i * 2 + j], &v[i] * &yw[j]);
            }
        }
    }

    #[test]
    fn direct_sum_counts() {
        let n = 3;
        let a = sl_defining(n);
        let sums: Vec<LieAction> = (0..n).map(|_| a.clone()).collect();
        let pattern: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| (i == j) as i64).collect())
            .collect();
        let d = direct_sum(&sums, &pattern).unwrap();
        assert_eq!(d.algebra_dim(), n * n - 1 + n);
        assert_eq!(d.space_dim, n * n);
    }

    #[test]
    fn sp_fundamentals() {
        let (w2, _) = sp_fundamental_with_embedding(2, 2).unwrap();
        assert_eq!(w2.space_dim, 5);
        assert_eq!(w2.algebra_dim(), 10);
        assert!(bracket_closed(&w2));
        let (w3, emb) = sp_fundamental_with_embedding(3, 3).unwrap();
        assert_eq!(w3.space_dim, 14);
        assert_eq!(emb.len(), 14);
        assert_eq!(w3.algebra_dim(), 21);
    }

    #[test]
    fn spin_actions_close() {
        let s7 = build_spin(spin(7), RepLabel::SpinRep).unwrap();
        assert_eq!((s7.space_dim, s7.algebra_dim()), (8, 21));
        assert!(bracket_closed(&s7));
        let h10 = build_spin(spin(10), RepLabel::HalfSpinEven).unwrap();
        assert_eq!((h10.space_dim, h10.algebra_dim()), (16, 45));
        let h14 = build_spin(spin(14), RepLabel::HalfSpinEven).unwrap();
        assert_eq!((h14.space_dim, h14.algebra_dim()), (64, 91));
    }

    #[test]
    fn vec_plus_spin_closes() {
        // the two realizations must share structure constants
        let g = spin(7);
        let v = build_rep(&RepSpec::new(g, RepLabel::VecRep, false)).unwrap();
        let s = build_rep(&RepSpec::new(g, RepLabel::SpinRep, false)).unwrap();
        let d = direct_sum(&[v, s], &[vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(d.space_dim, 15);
        // spot-check closure on the non-torus part
        let g0 = &d.gens[2];
        let g5 = &d.gens[7];
        assert!(in_span(&d.gens, &g0.commutator(g5)));
    }

    #[test]
    fn g2_shape() {
        let a = build_g2();
        assert_eq!((a.space_dim, a.algebra_dim()), (7, 14));
        assert_eq!(span_rank(&a.gens), 14);
    }

    #[test]
    fn module_spec_realize() {
        // GL1^2 x SL(4) on wedge^2 + vector
        let f = sl(4);
        let ms = ModuleSpec::with_free_scalars(
            vec![f],
            vec![
                vec![RepSpec::new(f, RepLabel::Omega(2), false)],
                vec![RepSpec::new(f, RepLabel::Omega(1), false)],
            ],
        );
        assert_eq!(ms.space_dim().unwrap(), 10);
        assert_eq!(ms.group_dim(), 17);
        let m = ms.realize().unwrap();
        assert_eq!(m.group_dim(), 17);
        assert_eq!(m.space_dim(), 10);
    }
}
