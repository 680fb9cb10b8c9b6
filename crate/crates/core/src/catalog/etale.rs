//! The etale lists: every listed module satisfies dim G = dim V under its
//! stated scalar pattern. Fixed rows point back at catalog entries; the
//! families over a base module or over castling data are enumerated here
//! with the patterns as printed (free scalars, or the centers of GL factors
//! with signed weights on dual summands).

use super::dsl::*;
use super::*;
use crate::castling::{a_seq as a_seq_wide, nu, Triplet};

fn a_seq(k: i64, i: i64) -> i64 {
    a_seq_wide(k, i) as i64
}
use crate::rep::{sl, RepLabel};

#[derive(Clone, Debug)]
pub struct EtaleItem {
    pub id: String,
    pub section: &'static str,
    pub spec: ModuleSpec,
    pub note: Option<&'static str>,
}

fn item(id: String, section: &'static str, spec: ModuleSpec) -> EtaleItem {
    EtaleItem { id, section, spec, note: None }
}

/// Every etale-list instance with space dimension within the bound.
pub fn etale_items(bound: usize) -> Vec<EtaleItem> {
    let mut out = Vec::new();
    catalog_refs(&mut out, bound);
    base_families(&mut out, bound);
    tensor_case_refs(&mut out, bound);
    family16(&mut out, bound);
    family17(&mut out, bound);
    out.retain(|it| it.spec.space_dim().map_or(false, |s| s <= bound));
    out
}

fn push_ref(out: &mut Vec<EtaleItem>, section: &'static str, id: &str, params: &[(&str, i64)], variant: &str, bound: usize) {
    let p = Params::of(params);
    if let Ok(ms) = super::template(id, &p, variant) {
        if ms.space_dim().map_or(false, |s| s <= bound) {
            let label = if params.is_empty() {
                id.to_string()
            } else {
                format!("{id}({})", p)
            };
            out.push(item(label, section, ms));
        }
    }
}

fn catalog_refs(out: &mut Vec<EtaleItem>, bound: usize) {
    // 2.1.1 / 2.3: one-simple items
    push_ref(out, "2.1.1", "SK I-4", &[], "", bound);
    let mut n = 2i64;
    while (n * n) as usize <= bound {
        push_ref(out, "2.1.1", "Ks I-2", &[("n", n)], "reduced", bound);
        n += 1;
    }
    let mut n = 2i64;
    while (n * (n + 1)) as usize <= bound {
        push_ref(out, "2.3", "Ks I-3", &[("n", n)], "", bound);
        if n >= 3 {
            push_ref(out, "2.3", "Ks I-4", &[("n", n)], "", bound);
        }
        n += 1;
    }
    push_ref(out, "2.3", "Ks I-11", &[("n", 2)], "", bound);

    // 2.1.2 / 2.4: two-simple fixed items
    push_ref(out, "2.1.2", "SK I-8", &[], "", bound);
    push_ref(out, "2.1.2", "SK I-11", &[], "", bound);
    push_ref(out, "2.4", "KI I-1", &[], "", bound);
    push_ref(out, "2.4", "KI I-2", &[], "reduced", bound);
    for e0 in 0..=1 {
        push_ref(out, "2.4", "KI I-6", &[("e0", e0)], "", bound);
    }
    push_ref(out, "2.2", "KI I-16", &[], "reduced", bound);
    push_ref(out, "2.2", "KI I-18", &[], "", bound);
    push_ref(out, "2.2", "KI I-19", &[], "", bound);
}

// --- families over an etale simple module -----------------------------------

struct EtaleBase {
    tag: &'static str,
    g: SimpleGroupId,
    reps: Vec<RepSpec>,
    /// the j scalars of the base, as pattern rows over its summands
    pattern: Vec<Vec<i64>>,
}

fn etale_bases() -> Vec<EtaleBase> {
    let mut v = Vec::new();
    v.push(EtaleBase {
        tag: "SK I-4",
        g: sl(2),
        reps: vec![w3a(sl(2))],
        pattern: vec![vec![1]],
    });
    for d in [2usize, 3] {
        v.push(EtaleBase {
            tag: if d == 2 { "Ks I-2(n=2)" } else { "Ks I-2(n=3)" },
            g: sl(d),
            reps: vec![w1(sl(d)); d],
            pattern: vec![vec![1; d]],
        });
    }
    v.push(EtaleBase {
        tag: "Ks I-3(n=2)",
        g: sl(2),
        reps: vec![w1(sl(2)); 3],
        pattern: vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]],
    });
    v.push(EtaleBase {
        tag: "Ks I-4(n=3)",
        g: sl(3),
        reps: vec![w1(sl(3)), w1(sl(3)), w1(sl(3)), w1d(sl(3))],
        pattern: vec![
            vec![1, 0, 0, 0],
            vec![0, 1, 0, 0],
            vec![0, 0, 1, 0],
            vec![0, 0, 0, 1],
        ],
    });
    v.push(EtaleBase {
        tag: "Ks I-11(n=2)",
        g: sl(2),
        reps: vec![w2a(sl(2)), w1(sl(2))],
        pattern: vec![vec![1, 0], vec![0, 1]],
    });
    v
}

fn rdim(r: &RepSpec) -> i64 {
    r.dim().expect("etale base rep") as i64
}

fn base_families(out: &mut Vec<EtaleItem>, bound: usize) {
    let b = bound as i64;
    for base in etale_bases() {
        let l = base.reps.len();
        let total: i64 = base.reps.iter().map(rdim).sum();

        // KII I-1 etale: sigma block tensored with GL_n, n = sum dim sigma
        for sigma in [vec![w1(base.g)], vec![w1(base.g), w1(base.g)], vec![w1d(base.g)]] {
            let n: i64 = sigma.iter().map(rdim).sum();
            if n < 2 || n * n + total > b {
                continue;
            }
            let gb = sl(n as usize);
            let mut summands: Vec<Vec<RepSpec>> = Vec::new();
            for s in &sigma {
                summands.push(vec![*s, w1(gb)]);
            }
            for r in &base.reps {
                summands.push(vec![*r, trv(gb)]);
            }
            // base scalars on the bare block, plus the center of GL_n
            let mut pattern = Vec::new();
            for row in &base.pattern {
                let mut p = vec![0i64; summands.len()];
                for (i, w) in row.iter().enumerate() {
                    p[sigma.len() + i] = *w;
                }
                pattern.push(p);
            }
            let mut center = vec![0i64; summands.len()];
            for ci in center.iter_mut().take(sigma.len()) {
                *ci = 1;
            }
            pattern.push(center);
            out.push(item(
                format!("KII I-1[{} s={}]", base.tag, sigma.len()),
                "2.4",
                msp(vec![base.g, gb], summands, pattern),
            ));
        }

        // KII I-2 / I-3 etale: n = t - 1 + sum_{i<=k} dim rho_i
        for k in 1..=l {
            for t in 0..=3i64 {
                let head: i64 = base.reps[..k].iter().map(rdim).sum();
                let tail: i64 = base.reps[k..].iter().map(rdim).sum();
                let n = t - 1 + head;
                if n < 2 {
                    continue;
                }
                if head * n + tail + t * n > b {
                    continue;
                }
                let gb = sl(n as usize);
                // I-2: dualized bare block, t plain vectors
                let mut summands: Vec<Vec<RepSpec>> = Vec::new();
                for r in &base.reps[..k] {
                    summands.push(vec![*r, w1(gb)]);
                }
                for r in &base.reps[k..] {
                    summands.push(vec![r.dualized(), trv(gb)]);
                }
                for _ in 0..t {
                    summands.push(vec![trv(base.g), w1(gb)]);
                }
                let mut pattern = Vec::new();
                for row in &base.pattern {
                    let mut p = vec![0i64; summands.len()];
                    for (i, w) in row.iter().enumerate() {
                        p[i] = *w;
                    }
                    pattern.push(p);
                }
                for i in 0..t as usize {
                    let mut p = vec![0i64; summands.len()];
                    p[l + i] = 1;
                    pattern.push(p);
                }
                out.push(item(
                    format!("KII I-2[{} k={k} t={t}]", base.tag),
                    "2.4",
                    msp(vec![base.g, gb], summands.clone(), pattern.clone()),
                ));
                // I-3: undualized bare block, t-1 vectors and one dual
                if t >= 1 {
                    let mut summands3: Vec<Vec<RepSpec>> = Vec::new();
                    for r in &base.reps[..k] {
                        summands3.push(vec![*r, w1(gb)]);
                    }
                    for r in &base.reps[k..] {
                        summands3.push(vec![*r, trv(gb)]);
                    }
                    for _ in 0..t - 1 {
                        summands3.push(vec![trv(base.g), w1(gb)]);
                    }
                    summands3.push(vec![trv(base.g), w1d(gb)]);
                    out.push(item(
                        format!("KII I-3[{} k={k} t={t}]", base.tag),
                        "2.4",
                        msp(vec![base.g, gb], summands3, pattern),
                    ));
                }
            }
        }

        // KII II-10 etale: needs G = SL_n
        if base.g.family == crate::rep::Family::Sl {
            let n = base.g.n;
            for k in 0..=l {
                if (n * n) as i64 + total > b {
                    continue;
                }
                let gb = sl(n);
                let mut summands = vec![vec![w1(base.g), w1(gb)]];
                for r in &base.reps[..k] {
                    summands.push(vec![*r, trv(gb)]);
                }
                for r in &base.reps[k..] {
                    summands.push(vec![trv(base.g), r.dualized()]);
                }
                let mut pattern = Vec::new();
                for row in &base.pattern {
                    let mut p = vec![0i64; summands.len()];
                    for (i, w) in row.iter().enumerate() {
                        p[1 + i] = *w;
                    }
                    pattern.push(p);
                }
                let mut first = vec![0i64; summands.len()];
                first[0] = 1;
                pattern.push(first);
                out.push(item(
                    format!("KII II-10[{} k={k}]", base.tag),
                    "2.4",
                    msp(vec![base.g, gb], summands, pattern),
                ));
            }
        }
    }
}

// --- pinned tensor-case items --------------------------------------------------

fn tensor_case_refs(out: &mut Vec<EtaleItem>, bound: usize) {
    // (id, m, n, star names set to every combination)
    let items: &[(&str, i64, i64, usize, Option<&'static str>)] = &[
        ("KII II-4-i-b", 2, 3, 2, None),
        ("KII II-4-ii-a", 3, 4, 3, None),
        ("KII II-4-iii-d", 2, 3, 1, None),
        ("KII II-4-iii-f", 2, 3, 0, None),
        ("KII II-4-iii-g", 2, 3, 0, None),
        ("KII II-4-iii-h", 2, 3, 0, None),
        ("KII II-4-iii-n", 2, 3, 2, None),
        ("KII II-4-iii-p", 2, 3, 0, None),
        ("KII II-4-iii-q", 2, 3, 1, None),
        ("KII II-5-i-b", 2, 3, 1, None),
        ("KII II-5-ii-b", 2, 3, 0, None),
        ("KII II-5-iii-e", 2, 3, 1, None),
        ("KII II-5-iv-a", 2, 5, 0, Some("the list prints SL_3; the n = 5 pin of the source row is used")),
        ("KII II-6-b", 3, 5, 0, None),
        ("KII II-9-a", 2, 3, 0, Some("the list prints SL_6 x SL_7; only the j = 1 instance is etale")),
        ("KII III-12", 4, 8, 0, None),
        ("KII III-13-i-d", 2, 3, 1, None),
        ("KII III-13-i-e", 2, 3, 0, None),
        ("KII III-13-i-g", 2, 3, 0, None),
        ("KII III-13-ii-a", 2, 3, 0, None),
        ("KII III-13-ii-b", 2, 3, 0, None),
    ];
    for (id, m, n, stars, note) in items {
        for mask in 0..(1u32 << stars) {
            let mut params = vec![("m", *m), ("n", *n)];
            let names = ["e0", "e1", "e2"];
            for (i, name) in names.iter().enumerate().take(*stars) {
                params.push((name, ((mask >> i) & 1) as i64));
            }
            let p = Params::of(&params);
            if let Ok(ms) = super::template(id, &p, "") {
                if ms.space_dim().map_or(false, |s| s <= bound) {
                    let mut it = item(format!("{id}({p})"), "2.4", ms);
                    it.note = *note;
                    out.push(it);
                }
            }
        }
    }
}

// --- the (w1 (x) w1)-family etale rows -----------------------------------------

/// Signed center pattern: one coordinate per simple factor, weight +1/-1 on
/// summands where the factor acts by w1 / its dual.
fn center_pattern(summands: &[Vec<RepSpec>]) -> Vec<Vec<i64>> {
    let nf = summands[0].len();
    (0..nf)
        .map(|f| {
            summands
                .iter()
                .map(|s| match (s[f].label, s[f].dual) {
                    (RepLabel::Trivial, _) => 0,
                    (_, false) => 1,
                    (_, true) => -1,
                })
                .collect()
        })
        .collect()
}

struct FamilyShape {
    /// s copies of (w1 (x) 1) or its dual, k tensors, t copies of (1 (x) w1)
    /// or its dual; `sd`/`td` say how many of s/t are dualized (from the end)
    s: i64,
    sd: i64,
    k: i64,
    t: i64,
    td: i64,
}

fn family_summands(m: i64, n: i64, sh: &FamilyShape) -> Vec<Vec<RepSpec>> {
    let (a, b) = (sl(m as usize), sl(n as usize));
    let mut out = Vec::new();
    for i in 0..sh.s {
        out.push(vec![dual_if(w1(a), i >= sh.s - sh.sd), trv(b)]);
    }
    for _ in 0..sh.k {
        out.push(vec![w1(a), w1(b)]);
    }
    for i in 0..sh.t {
        out.push(vec![trv(a), dual_if(w1(b), i >= sh.t - sh.td)]);
    }
    out
}

fn gl_gl_item(id: String, m: i64, n: i64, sh: &FamilyShape) -> EtaleItem {
    let s = family_summands(m, n, sh);
    let pattern = center_pattern(&s);
    item(id, "2.4", msp(vec![sl(m as usize), sl(n as usize)], s, pattern))
}

/// A GL x GL row whose summand list groups some slots apart. The grouping
/// marks carry extra scalars; how many is fixed by the dimension balance
/// (0..=sep.len() extra coordinates on the separated slots). Returns None
/// when no count balances.
fn balanced_gl_item(
    id: String,
    m: i64,
    n: i64,
    sh: &FamilyShape,
    sep: &[usize],
) -> Option<EtaleItem> {
    let summands = family_summands(m, n, sh);
    let space: i64 = summands
        .iter()
        .map(|s| {
            s.iter()
                .map(|r| r.dim().unwrap() as i64)
                .product::<i64>()
        })
        .sum();
    let needed = space - (m * m + n * n - 2) - 2;
    if needed < 0 || needed as usize > sep.len() {
        return None;
    }
    let mut pattern = center_pattern(&summands);
    for &slot in sep.iter().take(needed as usize) {
        let mut row = vec![0i64; summands.len()];
        row[slot] = 1;
        pattern.push(row);
    }
    let mut it = item(id, "2.4", msp(vec![sl(m as usize), sl(n as usize)], summands, pattern));
    if needed > 0 {
        it.note = Some("extra scalars on the separated slots, fixed by the dimension balance");
    }
    Some(it)
}

fn free_item(id: String, m: i64, n: i64, sh: &FamilyShape) -> EtaleItem {
    let s = family_summands(m, n, sh);
    let k = s.len();
    let pattern: Vec<Vec<i64>> = (0..k)
        .map(|i| (0..k).map(|j| (i == j) as i64).collect())
        .collect();
    item(id, "2.4", msp(vec![sl(m as usize), sl(n as usize)], s, pattern))
}

fn family16(out: &mut Vec<EtaleItem>, bound: usize) {
    let b = bound as i64;
    // 16-i, free scalars (GL_1^{n+2}): s1 + t2 = n with s2 + t1 = 1, and
    // s1 + t2 = n + 1
    for n in 2..=12i64 {
        if n * n + n * (n + 1) > b {
            break;
        }
        for s1 in 0..=n {
            let t2 = n - s1;
            for (s2, t1) in [(1i64, 0i64), (0, 1)] {
                let sh = FamilyShape { s: s1 + s2, sd: s2, k: 1, t: t1 + t2, td: t2 };
                // ordering inside the blocks: plains then duals on the left,
                // vectors then duals on the right; matches the printed shape
                let _ = &sh;
                let summands = {
                    let (a, bb) = (sl(n as usize), sl(n as usize));
                    let mut v = Vec::new();
                    for _ in 0..s1 {
                        v.push(vec![w1(a), trv(bb)]);
                    }
                    for _ in 0..s2 {
                        v.push(vec![w1d(a), trv(bb)]);
                    }
                    v.push(vec![w1(a), w1(bb)]);
                    for _ in 0..t1 {
                        v.push(vec![trv(a), w1(bb)]);
                    }
                    for _ in 0..t2 {
                        v.push(vec![trv(a), w1d(bb)]);
                    }
                    v
                };
                let kk = summands.len();
                let pattern: Vec<Vec<i64>> = (0..kk)
                    .map(|i| (0..kk).map(|j| (i == j) as i64).collect())
                    .collect();
                out.push(item(
                    format!("KII IV-16-i(n={n},s1={s1},s2={s2},t1={t1},t2={t2})"),
                    "2.4",
                    msp(vec![sl(n as usize), sl(n as usize)], summands, pattern),
                ));
            }
        }
        // s1 + t2 = n + 1 with s2 = t1 = 0
        for s1 in 0..=n + 1 {
            let t2 = n + 1 - s1;
            out.push(free_item(
                format!("KII IV-16-i'(n={n},s1={s1},t2={t2})"),
                n,
                n,
                &FamilyShape { s: s1, sd: 0, k: 1, t: t2, td: t2 },
            ));
        }
        // GL_n x GL_n with s1 + t2 = n
        for s1 in 0..=n {
            let t2 = n - s1;
            out.push(gl_gl_item(
                format!("KII IV-16-i''(n={n},s1={s1},t2={t2})"),
                n,
                n,
                &FamilyShape { s: s1, sd: 0, k: 1, t: t2, td: t2 },
            ));
        }
    }
    // 16-ii (a)/(b): GL_m x GL_n, n = km, k >= 2
    for k in 2..=4i64 {
        for m in 2..=8 {
            let n = k * m;
            for t2 in 2..=n {
                let s1 = m - k * t2;
                if s1 < 0 {
                    break;
                }
                if s1 * m + k * m * n + t2 * n > b {
                    continue;
                }
                out.push(gl_gl_item(
                    format!("KII IV-16-ii-a(k={k},m={m},t2={t2})"),
                    m,
                    n,
                    &FamilyShape { s: s1, sd: 0, k, t: t2, td: t2 },
                ));
                out.push(gl_gl_item(
                    format!("KII IV-16-ii-b(k={k},m={m},t1={t2})"),
                    m,
                    n,
                    &FamilyShape { s: s1, sd: s1, k, t: t2, td: 0 },
                ));
            }
        }
    }
    // 16-iii: GL_1^{t1-1} x GL_m x GL_n, n = m+1, s2 + t1 = m + 1, t1 >= 3
    for m in 2..=10i64 {
        let n = m + 1;
        for t1 in 3..=m + 1 {
            let s2 = m + 1 - t1;
            let sh = FamilyShape { s: s2, sd: s2, k: 1, t: t1, td: 0 };
            let summands = family_summands(m, n, &sh);
            if s2 * m + m * n + t1 * n > b {
                continue;
            }
            let mut pattern = center_pattern(&summands);
            // the extra mu coordinates on all vectors past the first
            for i in 1..t1 as usize {
                let mut row = vec![0i64; summands.len()];
                row[(s2 + 1) as usize + i] = 1;
                pattern.push(row);
            }
            out.push(item(
                format!("KII IV-16-iii(m={m},t1={t1})"),
                "2.4",
                msp(vec![sl(m as usize), sl(n as usize)], summands, pattern),
            ));
        }
    }
    // 16-iv (a): four printed reduced forms at n = m+1
    for m in 2..=10i64 {
        let n = m + 1;
        if m + m * n + m * n > b {
            continue;
        }
        // GL_1^{m+1}: dual (or plain) bare vector with mu, tensor unscaled,
        // m dual vectors each with mu
        for (tag, first_dual) in [("dual", true), ("plain", false)] {
            let sh = FamilyShape { s: 1, sd: first_dual as i64, k: 1, t: m, td: m };
            let summands = family_summands(m, n, &sh);
            let total = summands.len();
            let mut pattern = Vec::new();
            for i in 0..total {
                if i == 1 {
                    continue; // the tensor summand carries no scalar
                }
                let mut row = vec![0i64; total];
                row[i] = 1;
                pattern.push(row);
            }
            out.push(item(
                format!("KII IV-16-iv-a[{tag}](m={m})"),
                "2.4",
                msp(vec![sl(m as usize), sl(n as usize)], summands, pattern),
            ));
        }
        // GL_m x SL_n with m duals
        let sh = FamilyShape { s: 0, sd: 0, k: 1, t: m, td: m };
        let summands = family_summands(m, n, &sh);
        let mut pattern = center_pattern(&summands);
        pattern.truncate(1); // only the first factor's center
        out.push(item(
            format!("KII IV-16-iv-a[center](m={m})"),
            "2.4",
            msp(vec![sl(m as usize), sl(n as usize)], summands, pattern),
        ));
        // GL_1^{m+2} x SL_m x SL_n with m+1 duals, free scalars
        out.push(free_item(
            format!("KII IV-16-iv-a[free](m={m})"),
            m,
            n,
            &FamilyShape { s: 0, sd: 0, k: 1, t: m + 1, td: m + 1 },
        ));
    }
    // 16-iv (c): GL_1^{t2} x GL_m x GL_n, s1 + t2 = m, n = m+1
    for m in 2..=10i64 {
        let n = m + 1;
        for t2 in 0..=m {
            let s1 = m - t2;
            let sh = FamilyShape { s: s1, sd: 0, k: 1, t: 1 + t2, td: t2 };
            let summands = family_summands(m, n, &sh);
            if s1 * m + m * n + (1 + t2) * n > b {
                continue;
            }
            let mut pattern = center_pattern(&summands);
            for i in 0..t2 as usize {
                let mut row = vec![0i64; summands.len()];
                row[(s1 + 2) as usize + i] = 1;
                pattern.push(row);
            }
            out.push(item(
                format!("KII IV-16-iv-c(m={m},t2={t2})"),
                "2.4",
                msp(vec![sl(m as usize), sl(n as usize)], summands, pattern),
            ));
        }
    }
}

/// The reduced pair reached from (k, m, n) after j = nu steps, as printed:
/// m0 = a_{j+1} m - a_j n, n0 = a_j m - a_{j-1} n.
fn reduced_pair(k: i64, m: i64, n: i64) -> Option<(i64, i64, i64)> {
    let t = Triplet::new(k, m, n);
    let j = nu(t).ok()? as i64;
    let m0 = a_seq(k, j + 1) * m - a_seq(k, j) * n;
    let n0 = a_seq(k, j) * m - a_seq(k, j - 1) * n;
    Some((j, m0, n0))
}

fn family17(out: &mut Vec<EtaleItem>, bound: usize) {
    let b = bound as i64;
    let kmax = 4i64;
    // 17 (1a): duals on the right, plains on the left
    for k in 2..=kmax {
        for m in 2..=10 {
            for n in m + 1..=30 {
                if k * m * n > b {
                    break;
                }
                let Some((j, m0, n0)) = reduced_pair(k, m, n) else { continue };
                if n0 != k * m0 {
                    continue;
                }
                for s in 0..=6i64 {
                    for t in 0..=6i64 {
                        if s * a_seq(k, j + 1) + t * a_seq(k, j + 2) != m0 {
                            continue;
                        }
                        if s * m + k * m * n + t * n > b {
                            continue;
                        }
                        out.push(gl_gl_item(
                            format!("KII IV-17-1a(k={k},m={m},n={n},s={s},t={t})"),
                            m,
                            n,
                            &FamilyShape { s, sd: 0, k, t, td: t },
                        ));
                    }
                }
            }
        }
    }
    // 17 (1b) and (1c) pinned shapes; p = km + t - n
    for k in 2..=kmax {
        for m in 2..=10 {
            for n in 2..=30 {
                for s in 0..=6i64 {
                    for t in 0..=6i64 {
                        let space = s * m + k * m * n + t * n;
                        if space > b || n < m {
                            continue;
                        }
                        let p = k * m + t - n;
                        if p < 1 {
                            continue;
                        }
                        let q1b = k * p - m;
                        // 1b rows (plain s-block, plain t-block)
                        if k * p > m {
                            if let Some((j, m0, n0)) = reduced_pair(k, p, m) {
                                if s > 0
                                    && n0 == k * m0
                                    && t * a_seq(k, j + 1) + s * a_seq(k, j + 2) == m0
                                {
                                    out.push(gl_gl_item(
                                        format!("KII IV-17-1b(k={k},m={m},n={n},s={s},t={t})"),
                                        m, n,
                                        &FamilyShape { s, sd: 0, k, t, td: 0 },
                                    ));
                                }
                            }
                            if s == 0 && q1b >= 1 {
                                if k * q1b == p && t >= 2 && k * t == q1b {
                                    out.push(gl_gl_item(
                                        format!("KII IV-17-1b'(k={k},m={m},n={n},t={t})"),
                                        m, n,
                                        &FamilyShape { s: 0, sd: 0, k, t, td: 0 },
                                    ));
                                }
                                if t == 1 && k == q1b + 1 && p == q1b * q1b + q1b {
                                    out.push(free_item(
                                        format!("KII IV-17-1b''(k={k},m={m},n={n})"),
                                        m, n,
                                        &FamilyShape { s: 0, sd: 0, k, t: 1, td: 0 },
                                    ));
                                }
                                if t == 1 && k == q1b && p == q1b * q1b {
                                    out.push(gl_gl_item(
                                        format!("KII IV-17-1b'''(k={k},m={m},n={n})"),
                                        m, n,
                                        &FamilyShape { s: 0, sd: 0, k, t: 1, td: 0 },
                                    ));
                                }
                                if k * q1b > p && q1b >= 1 {
                                    if let Some((j, m0, n0)) = reduced_pair(k, q1b, p) {
                                        if n0 == k * m0 && t * a_seq(k, j + 2) == m0 {
                                            out.push(gl_gl_item(
                                                format!("KII IV-17-1b''''(k={k},m={m},n={n},t={t})"),
                                                m, n,
                                                &FamilyShape { s: 0, sd: 0, k, t, td: 0 },
                                            ));
                                        }
                                    }
                                }
                            }
                        }
                        if k * p == m {
                            if s == 1 && t + k == p + 1 {
                                out.push(free_item(
                                    format!("KII IV-17-1b-f(k={k},m={m},n={n},t={t})"),
                                    m, n,
                                    &FamilyShape { s: 1, sd: 0, k, t, td: 0 },
                                ));
                            }
                            if s == 1 && t + k == p {
                                out.push(gl_gl_item(
                                    format!("KII IV-17-1b-g(k={k},m={m},n={n},t={t})"),
                                    m, n,
                                    &FamilyShape { s: 1, sd: 0, k, t, td: 0 },
                                ));
                            }
                            if s >= 2 && t + k * s == p {
                                out.push(gl_gl_item(
                                    format!("KII IV-17-1b-h(k={k},m={m},n={n},s={s},t={t})"),
                                    m, n,
                                    &FamilyShape { s, sd: 0, k, t, td: 0 },
                                ));
                            }
                        }
                        // 1c rows (dual s-block): q = kp + s - m, r = kq - p
                        let q = k * p + s - m;
                        let r = k * q - p;
                        if k * p > m && q >= 1 {
                            if k * q > p {
                                if t > 0 {
                                    if let Some((j, m0, n0)) = reduced_pair(k, q, p) {
                                        if n0 == k * m0
                                            && s * a_seq(k, j + 1) + t * a_seq(k, j + 2)
                                                == m0
                                        {
                                            out.push(gl_gl_item(
                                                format!("KII IV-17-1c(k={k},m={m},n={n},s={s},t={t})"),
                                                m, n,
                                                &FamilyShape { s, sd: s, k, t, td: 0 },
                                            ));
                                        }
                                    }
                                }
                                if t == 0 && r >= 1 {
                                    if k * r == q && s >= 2 && k * s == r {
                                        out.push(gl_gl_item(
                                            format!("KII IV-17-1c'(k={k},m={m},n={n},s={s})"),
                                            m, n,
                                            &FamilyShape { s, sd: s, k, t: 0, td: 0 },
                                        ));
                                    }
                                    if s == 1 && k == r + 1 && q == r * r + r {
                                        out.push(free_item(
                                            format!("KII IV-17-1c''(k={k},m={m},n={n})"),
                                            m, n,
                                            &FamilyShape { s: 1, sd: 1, k, t: 0, td: 0 },
                                        ));
                                    }
                                    if s == 1 && k == r && q == r * r {
                                        out.push(gl_gl_item(
                                            format!("KII IV-17-1c'''(k={k},m={m},n={n})"),
                                            m, n,
                                            &FamilyShape { s: 1, sd: 1, k, t: 0, td: 0 },
                                        ));
                                    }
                                    if k * r > q && r >= 1 {
                                        if let Some((j, m0, n0)) = reduced_pair(k, r, q) {
                                            if n0 == k * m0 && s * a_seq(k, j + 2) == m0 {
                                                out.push(gl_gl_item(
                                                    format!("KII IV-17-1c''''(k={k},m={m},n={n},s={s})"),
                                                    m, n,
                                                    &FamilyShape { s, sd: s, k, t: 0, td: 0 },
                                                ));
                                            }
                                        }
                                    }
                                }
                            }
                            if k * q == p {
                                if t == 1 && s + k == q + 1 {
                                    out.push(free_item(
                                        format!("KII IV-17-1c-f(k={k},m={m},n={n},s={s})"),
                                        m, n,
                                        &FamilyShape { s, sd: s, k, t: 1, td: 0 },
                                    ));
                                }
                                if t == 1 && s + k == q {
                                    out.push(gl_gl_item(
                                        format!("KII IV-17-1c-g(k={k},m={m},n={n},s={s})"),
                                        m, n,
                                        &FamilyShape { s, sd: s, k, t: 1, td: 0 },
                                    ));
                                }
                                if t >= 2 && s + k * t == q {
                                    out.push(gl_gl_item(
                                        format!("KII IV-17-1c-h(k={k},m={m},n={n},s={s},t={t})"),
                                        m, n,
                                        &FamilyShape { s, sd: s, k, t, td: 0 },
                                    ));
                                }
                            }
                        }
                        if t == 0 && k == p && k * p + s - 1 == m {
                            // GL_1^s x SL_m x GL_n
                            let sh = FamilyShape { s, sd: s, k, t: 0, td: 0 };
                            let summands = family_summands(m, n, &sh);
                            let mut pattern: Vec<Vec<i64>> = (0..s as usize)
                                .map(|i| {
                                    let mut row = vec![0i64; summands.len()];
                                    row[i] = 1;
                                    row
                                })
                                .collect();
                            pattern.push(center_pattern(&summands)[1].clone());
                            out.push(item(
                                format!("KII IV-17-1c-i(k={k},m={m},n={n},s={s})"),
                                "2.4",
                                msp(vec![sl(m as usize), sl(n as usize)], summands, pattern),
                            ));
                        }
                        if t == 0 && k == p + 1 && k * p + s - 1 == m {
                            out.push(free_item(
                                format!("KII IV-17-1c-j(k={k},m={m},n={n},s={s})"),
                                m, n,
                                &FamilyShape { s, sd: s, k, t: 0, td: 0 },
                            ));
                        }
                        if t == 1 && k == p && k * p + s - 1 == m {
                            out.push(free_item(
                                format!("KII IV-17-1c-k(k={k},m={m},n={n},s={s})"),
                                m, n,
                                &FamilyShape { s, sd: s, k, t: 1, td: 0 },
                            ));
                        }
                        if t == 0 && k * s == p && k * p == m {
                            out.push(gl_gl_item(
                                format!("KII IV-17-1c-l(k={k},m={m},n={n},s={s})"),
                                m, n,
                                &FamilyShape { s, sd: s, k, t: 0, td: 0 },
                            ));
                        }
                        // 2a: one dual among the right vectors; p' = km+t-n-1
                        let p2 = k * m + t - n - 1;
                        if t >= 1 && p2 >= 1 {
                            if k * p2 > m {
                                if let Some((j, m0, n0)) = reduced_pair(k, p2, m) {
                                    if n0 == k * m0
                                        && (t - 2) * a_seq(k, j + 1) + (k + s) * a_seq(k, j + 2)
                                            == m0
                                    {
                                        let sh = FamilyShape { s, sd: 0, k, t, td: 1 };
                                        out.extend(balanced_gl_item(
                                            format!("KII IV-17-2a(k={k},m={m},n={n},s={s},t={t})"),
                                            m, n, &sh,
                                            &[(s + k + t - 1) as usize],
                                        ));
                                    }
                                }
                            }
                            if k * p2 == m && t - 2 + k * (k + s) == p2 {
                                let sh = FamilyShape { s, sd: 0, k, t, td: 1 };
                                out.extend(balanced_gl_item(
                                    format!("KII IV-17-2a'(k={k},m={m},n={n},s={s},t={t})"),
                                    m, n, &sh,
                                    &[(s + k + t - 1) as usize],
                                ));
                            }
                        }
                        // 2b: one plain among the left duals; q' = kp + t - m - 1
                        let q2 = k * p + s - m - 1;
                        if s >= 1 && p >= 1 && k * p > m && q2 >= 1 {
                            if k * q2 > p {
                                if let Some((j, m0, n0)) = reduced_pair(k, q2, p) {
                                    if n0 == k * m0
                                        && (s - 2) * a_seq(k, j + 1) + (k + t) * a_seq(k, j + 2)
                                            == m0
                                    {
                                        let sh = FamilyShape { s, sd: s - 1, k, t, td: 0 };
                                        out.extend(balanced_gl_item(
                                            format!("KII IV-17-2b(k={k},m={m},n={n},s={s},t={t})"),
                                            m, n, &sh, &[0],
                                        ));
                                    }
                                }
                            }
                            if k * q2 == p && s - 2 + k * (k + t) == q2 {
                                let sh = FamilyShape { s, sd: s - 1, k, t, td: 0 };
                                out.extend(balanced_gl_item(
                                    format!("KII IV-17-2b'(k={k},m={m},n={n},s={s},t={t})"),
                                    m, n, &sh, &[0],
                                ));
                            }
                        }
                        if s >= 1 && m == s - 1 + k * p && p >= 1 {
                            if k + t == p + 1 {
                                out.push(free_item(
                                    format!("KII IV-17-2b-f(k={k},m={m},n={n},s={s},t={t})"),
                                    m, n,
                                    &FamilyShape { s, sd: s - 1, k, t, td: 0 },
                                ));
                            }
                            if k + t == p {
                                // GL_1^s x SL_m x GL_n
                                let sh = FamilyShape { s, sd: s - 1, k, t, td: 0 };
                                let summands = family_summands(m, n, &sh);
                                let mut pattern: Vec<Vec<i64>> = (0..s as usize)
                                    .map(|i| {
                                        let mut row = vec![0i64; summands.len()];
                                        row[i] = 1;
                                        row
                                    })
                                    .collect();
                                pattern.push(center_pattern(&summands)[1].clone());
                                out.push(item(
                                    format!("KII IV-17-2b-g(k={k},m={m},n={n},s={s},t={t})"),
                                    "2.4",
                                    msp(vec![sl(m as usize), sl(n as usize)], summands, pattern),
                                ));
                            }
                        }
                        // 3a: all-plain both sides, controlled by (k, m, n-1);
                        // the j = 0 boundary over-generates and is excluded
                        if t >= 2 {
                            if let Some((j, m0, n0)) = reduced_pair(k, m, n - 1) {
                                if j >= 1 && n0 == k * m0
                                    && (k + s) * a_seq(k, j + 1) + (t - 2) * a_seq(k, j + 2)
                                        == m0
                                {
                                    let sh = FamilyShape { s, sd: 0, k, t, td: 0 };
                                    out.extend(balanced_gl_item(
                                        format!("KII IV-17-3a(k={k},m={m},n={n},s={s},t={t})"),
                                        m, n, &sh,
                                        &[(s + k) as usize],
                                    ));
                                }
                            }
                        }
                        // 3b: controlled by (k, p, m-1); j = 0 excluded as in 3a
                        if s >= 2 && p >= 1 && k * p > m {
                            if let Some((j, m0, n0)) = reduced_pair(k, p, m - 1) {
                                if j >= 1 && n0 == k * m0
                                    && (k + t) * a_seq(k, j + 1) + (s - 2) * a_seq(k, j + 2)
                                        == m0
                                {
                                    let sh = FamilyShape { s, sd: 0, k, t, td: 0 };
                                    out.extend(balanced_gl_item(
                                        format!("KII IV-17-3b(k={k},m={m},n={n},s={s},t={t})"),
                                        m, n, &sh,
                                        &[(s + k) as usize],
                                    ));
                                }
                            }
                        }
                        // 4: one dual on each side; p' = km + t - n - 1
                        if s >= 1 && t >= 1 && p2 >= 1 && k * p2 > m - 1 {
                            if let Some((j, m0, n0)) = reduced_pair(k, p2, m - 1) {
                                if n0 == k * m0
                                    && (k + t - 2) * a_seq(k, j + 1)
                                        + (k + s - 2) * a_seq(k, j + 2)
                                        == m0
                                {
                                    let sh = FamilyShape { s, sd: 1, k, t, td: 1 };
                                    out.extend(balanced_gl_item(
                                        format!("KII IV-17-4(k={k},m={m},n={n},s={s},t={t})"),
                                        m, n, &sh,
                                        &[(s - 1) as usize, (s + k + t - 1) as usize],
                                    ));
                                }
                            }
                        }
                        if s >= 1 && t >= 1 && p2 >= 1 && m - 1 == k * p2
                            && (k + t - 2) + k * (k + s - 2) == p2
                        {
                            let sh = FamilyShape { s, sd: 1, k, t, td: 1 };
                            out.extend(balanced_gl_item(
                                format!("KII IV-17-4'(k={k},m={m},n={n},s={s},t={t})"),
                                m, n, &sh,
                                &[(s - 1) as usize, (s + k + t - 1) as usize],
                            ));
                        }
                    }
                }
            }
        }
    }
}
