//! Two-simple rows of type II. No isotropy groups are printed for these, so
//! the audit certifies prehomogeneity; the castling-governed families
//! (n < km) are stored as predicates with a bounded sampler.

use super::dsl::*;
use super::*;
use crate::castling::{family_case_castling, family_case_large_n, family_module, FamilyParams};
use crate::rep::{sl, sp, spin, RepLabel};

pub(crate) fn push_entries(v: &mut Vec<CatalogEntry>) {
    kii1(v);
    kii2(v);
    kii3(v);
    kii4(v);
}

// --- families built on top of a verified simple module ----------------------

#[derive(Clone)]
struct SimpleBase {
    /// provenance tag of the base row
    tag: &'static str,
    g: SimpleGroupId,
    reps: Vec<RepSpec>,
}

fn base_menu() -> Vec<SimpleBase> {
    vec![
        SimpleBase { tag: "Ks I-2(n=2)", g: sl(2), reps: vec![w1(sl(2)), w1(sl(2))] },
        SimpleBase { tag: "Ks I-2(n=3)", g: sl(3), reps: vec![w1(sl(3)), w1(sl(3)), w1(sl(3))] },
        SimpleBase { tag: "Ks I-1(n=3)", g: sl(3), reps: vec![w1(sl(3)), w1d(sl(3))] },
        SimpleBase { tag: "Ks I-11(n=2)", g: sl(2), reps: vec![w2a(sl(2)), w1(sl(2))] },
        SimpleBase { tag: "Ks I-11(n=3)", g: sl(3), reps: vec![w2a(sl(3)), w1(sl(3))] },
        SimpleBase { tag: "Ks I-20(n=2)", g: sp(2), reps: vec![w1(sp(2)), w1(sp(2))] },
        SimpleBase { tag: "Ks II-1(n=3,k=2)", g: sl(3), reps: vec![w1(sl(3)), w1(sl(3))] },
        SimpleBase { tag: "Ks II-4(n=2)", g: sl(4), reps: vec![w(sl(4), 2), w1(sl(4))] },
        SimpleBase { tag: "SK I-4", g: sl(2), reps: vec![w3a(sl(2))] },
        SimpleBase { tag: "SK I-2(n=3)", g: sl(3), reps: vec![w2a(sl(3))] },
    ]
}

fn sigma_menu(g: SimpleGroupId) -> Vec<Vec<RepSpec>> {
    let mut out = vec![vec![w1(g)], vec![w1d(g)], vec![w1(g), w1(g)]];
    if g.family == crate::rep::Family::Sl && g.n <= 3 {
        out.push(vec![w2a(g)]);
    }
    out
}

fn rdim(r: &RepSpec) -> i64 {
    r.dim().expect("menu rep dimension") as i64
}

fn kii1(v: &mut Vec<CatalogEntry>) {
    // KII I-1: (sigma_j (x) w1)_j + (rho_i (x) 1)_i with n >= sum dim sigma
    let mut e = entry("KII I-1", Table::KiiI);
    e.enumerate = Box::new(|bound| {
        let mut out = Vec::new();
        for (bi, base) in base_menu().iter().enumerate() {
            let base_space: i64 = base.reps.iter().map(rdim).sum();
            for (si, sigma) in sigma_menu(base.g).iter().enumerate() {
                let sd: i64 = sigma.iter().map(rdim).sum();
                let mut n = sd.max(2);
                while sd * n + base_space <= bound as i64 {
                    out.push(Params::of(&[("base", bi as i64), ("sigma", si as i64), ("n", n)]));
                    n += 1;
                }
            }
        }
        out
    });
    e.dims = Box::new(|p| {
        let base = &base_menu()[p.u("base")];
        let sigma = &sigma_menu(base.g)[p.u("sigma")];
        let n = p.i("n");
        let l = base.reps.len() as i64;
        let s = sigma.len() as i64;
        let space = sigma.iter().map(rdim).sum::<i64>() * n + base.reps.iter().map(rdim).sum::<i64>();
        (l + s + base.g.dim() as i64 + n * n - 1, space)
    });
    e.variants.push(variant_no_iso("", |p| {
        let base = &base_menu()[p.u("base")];
        let sigma = sigma_menu(base.g)[p.u("sigma")].clone();
        let n = p.u("n");
        let b = sl(n);
        let mut summands = Vec::new();
        for s in &sigma {
            summands.push(vec![*s, w1(b)]);
        }
        for r in &base.reps {
            summands.push(vec![*r, trv(b)]);
        }
        Ok(msn(vec![base.g, b], summands))
    }));
    v.push(e);

    // KII I-2: k of the rho tensored up, the rest dualized bare, t extra
    // vectors; n = t - 1 + sum_{i<=k} dim rho_i
    let mut e = entry("KII I-2", Table::KiiI);
    e.enumerate = Box::new(|bound| {
        let mut out = Vec::new();
        for (bi, base) in base_menu().iter().enumerate() {
            for k in 1..=base.reps.len() {
                for t in 0..=3i64 {
                    let head: i64 = base.reps[..k].iter().map(rdim).sum();
                    let n = t - 1 + head;
                    if n < 2 {
                        continue;
                    }
                    let tail: i64 = base.reps[k..].iter().map(rdim).sum();
                    let space = head * n + tail + t * n;
                    if space <= bound as i64 {
                        out.push(Params::of(&[("base", bi as i64), ("k", k as i64), ("t", t)]));
                    }
                }
            }
        }
        out
    });
    e.dims = Box::new(|p| {
        let base = &base_menu()[p.u("base")];
        let (k, t) = (p.u("k"), p.i("t"));
        let head: i64 = base.reps[..k].iter().map(rdim).sum();
        let tail: i64 = base.reps[k..].iter().map(rdim).sum();
        let n = t - 1 + head;
        let l = base.reps.len() as i64;
        (l + t + base.g.dim() as i64 + n * n - 1, head * n + tail + t * n)
    });
    e.variants.push(variant_no_iso("", |p| {
        let base = &base_menu()[p.u("base")];
        let (k, t) = (p.u("k"), p.u("t"));
        let head: i64 = base.reps[..k].iter().map(rdim).sum();
        let n = (t as i64 - 1 + head) as usize;
        let b = sl(n);
        let mut summands = Vec::new();
        for r in &base.reps[..k] {
            summands.push(vec![*r, w1(b)]);
        }
        for r in &base.reps[k..] {
            summands.push(vec![r.dualized(), trv(b)]);
        }
        for _ in 0..t {
            summands.push(vec![trv(base.g), w1(b)]);
        }
        Ok(msn(vec![base.g, b], summands))
    }));
    v.push(e);

    // KII I-3: like I-2 but undualized bare summands, t-1 vectors and one
    // dual vector on the right, any n >= t - 1 + sum_{i<=k}
    let mut e = entry("KII I-3", Table::KiiI);
    e.enumerate = Box::new(|bound| {
        let mut out = Vec::new();
        for (bi, base) in base_menu().iter().enumerate() {
            for k in 1..=base.reps.len() {
                for t in 1..=3i64 {
                    let head: i64 = base.reps[..k].iter().map(rdim).sum();
                    let tail: i64 = base.reps[k..].iter().map(rdim).sum();
                    let mut n = (t - 1 + head).max(2);
                    while head * n + tail + t * n <= bound as i64 {
                        out.push(Params::of(&[
                            ("base", bi as i64),
                            ("k", k as i64),
                            ("t", t),
                            ("n", n),
                        ]));
                        n += 1;
                    }
                }
            }
        }
        out
    });
    e.dims = Box::new(|p| {
        let base = &base_menu()[p.u("base")];
        let (k, t, n) = (p.u("k"), p.i("t"), p.i("n"));
        let head: i64 = base.reps[..k].iter().map(rdim).sum();
        let tail: i64 = base.reps[k..].iter().map(rdim).sum();
        let l = base.reps.len() as i64;
        (l + t + base.g.dim() as i64 + n * n - 1, head * n + tail + t * n)
    });
    e.variants.push(variant_no_iso("", |p| {
        let base = &base_menu()[p.u("base")];
        let (k, t, n) = (p.u("k"), p.u("t"), p.u("n"));
        let b = sl(n);
        let mut summands = Vec::new();
        for r in &base.reps[..k] {
            summands.push(vec![*r, w1(b)]);
        }
        for r in &base.reps[k..] {
            summands.push(vec![*r, trv(b)]);
        }
        for _ in 0..t - 1 {
            summands.push(vec![trv(base.g), w1(b)]);
        }
        summands.push(vec![trv(base.g), w1d(b)]);
        Ok(msn(vec![base.g, b], summands))
    }));
    v.push(e);
}

// --- fixed-shape case rows ----------------------------------------------------

#[derive(Clone, Copy)]
enum GKind {
    /// SL_m with m a parameter, 2 <= m < n
    SlFree,
    /// SL of a pinned size
    SlPin(usize),
    /// SL_{2j} with n = 2j+1
    SlEven,
    /// Sp_m with 2m < n
    SpFree,
    /// Spin_10
    Spin10,
}

struct Case {
    id: &'static str,
    table: Table,
    g: GKind,
    /// summand tokens (g-side, n-side)
    s: &'static [(&'static str, &'static str)],
    /// groups of summand indices sharing one dual-toggle bit
    stars: &'static [&'static [usize]],
    /// extra constraint on (m, n) beyond the family shape
    ok: fn(i64, i64) -> bool,
}

fn tok_rep(g: SimpleGroupId, t: &str) -> RepSpec {
    match t {
        "1" => trv(g),
        "w1" => w1(g),
        "w1*" => w1d(g),
        "w2" => w(g, 2),
        "w2*" => wd(g, 2),
        "w3" => w(g, 3),
        "w3*" => wd(g, 3),
        "2w1" => w2a(g),
        "2w1*" => RepSpec::new(g, RepLabel::TwoOmega1, true),
        "3w1" => w3a(g),
        "hs" => hse(g),
        _ => panic!("bad token {t}"),
    }
}

fn tok_dim(g: SimpleGroupId, t: &str) -> i64 {
    tok_rep(g, t).dim().map(|d| d as i64).unwrap_or(i64::MAX / 4)
}

fn tok_valid(g: SimpleGroupId, t: &str) -> bool {
    t == "1" || tok_rep(g, t).dim().is_ok()
}

fn case_groups(c: &Case, m: i64, n: i64) -> (SimpleGroupId, SimpleGroupId) {
    let ga = match c.g {
        GKind::SlFree => sl(m as usize),
        GKind::SlPin(k) => sl(k),
        GKind::SlEven => sl(m as usize),
        GKind::SpFree => sp(m as usize),
        GKind::Spin10 => spin(10),
    };
    (ga, sl(n as usize))
}

fn case_space(c: &Case, m: i64, n: i64) -> i64 {
    let (ga, gb) = case_groups(c, m, n);
    c.s
        .iter()
        .map(|(t1, t2)| tok_dim(ga, t1) * tok_dim(gb, t2))
        .sum()
}

fn case_shape_ok(c: &Case, m: i64, n: i64) -> bool {
    let (ga, gb) = case_groups(c, m, n);
    if !c.s.iter().all(|(t1, t2)| tok_valid(ga, t1) && tok_valid(gb, t2)) {
        return false;
    }
    let base = match c.g {
        GKind::SlFree => m >= 2 && m < n,
        GKind::SlPin(k) => m == k as i64 && n > k as i64,
        GKind::SlEven => m >= 2 && m % 2 == 0 && n == m + 1,
        GKind::SpFree => m >= 1,
        GKind::Spin10 => m == 1 && n >= 16,
    };
    base && (c.ok)(m, n) && n >= 2
}

fn push_case(v: &mut Vec<CatalogEntry>, c: &'static Case) {
    let mut e = entry(c.id, c.table);
    let star_names: &'static [&'static str] = match c.stars.len() {
        0 => &[],
        1 => &["e0"],
        2 => &["e0", "e1"],
        _ => &["e0", "e1", "e2"],
    };
    let inner: EnumFn = Box::new(move |bound| {
        let mut out = Vec::new();
        for m in 1..=40i64 {
            let mut hit_any = false;
            for n in 2..=(bound as i64 + 1).min(80) {
                if !case_shape_ok(c, m, n) {
                    continue;
                }
                if case_space(c, m, n) > bound as i64 {
                    continue;
                }
                hit_any = true;
                out.push(Params::of(&[("m", m), ("n", n)]));
            }
            if !hit_any && m > 12 {
                break;
            }
        }
        out
    });
    e.enumerate = if star_names.is_empty() {
        inner
    } else {
        with_stars(inner, star_names)
    };
    e.dims = Box::new(move |p| {
        let (m, n) = (p.i("m"), p.i("n"));
        let (ga, gb) = case_groups(c, m, n);
        let g = c.s.len() as i64 + ga.dim() as i64 + gb.dim() as i64;
        (g, case_space(c, m, n))
    });
    e.variants.push(variant_no_iso("", move |p| {
        let (m, n) = (p.i("m"), p.i("n"));
        if !case_shape_ok(c, m, n) {
            return Err(CatalogError::Constraint(format!("{} at m={m}, n={n}", c.id)));
        }
        let (ga, gb) = case_groups(c, m, n);
        let mut summands: Vec<Vec<RepSpec>> = c
            .s
            .iter()
            .map(|(t1, t2)| vec![tok_rep(ga, t1), tok_rep(gb, t2)])
            .collect();
        for (gi, group) in c.stars.iter().enumerate() {
            if p.flag(star_names[gi]) {
                for &si in group.iter() {
                    for slot in summands[si].iter_mut() {
                        if slot.label != RepLabel::Trivial {
                            *slot = slot.dualized();
                        }
                    }
                }
            }
        }
        Ok(msn(vec![ga, gb], summands))
    }));
    v.push(e);
}

fn any(_: i64, _: i64) -> bool {
    true
}

fn kii2(v: &mut Vec<CatalogEntry>) {
    use GKind::*;
    use Table::KiiII as T2;
    static CASES: &[Case] = &[
        // 4: G = SL_m, 2 <= m < n
        Case { id: "KII II-4-i-a", table: T2, g: SlFree, s: &[("w1", "w1"), ("1", "2w1")], stars: &[&[1]], ok: any },
        Case { id: "KII II-4-i-b", table: T2, g: SlFree, s: &[("w1", "w1"), ("1", "2w1"), ("w1", "1")], stars: &[&[1], &[2]], ok: any },
        Case { id: "KII II-4-i-c", table: T2, g: SlFree, s: &[("w1", "w1"), ("1", "w2")], stars: &[&[1]], ok: any },
        Case { id: "KII II-4-i-d", table: T2, g: SlFree, s: &[("w1", "w1"), ("1", "w2"), ("w1", "1")], stars: &[&[1], &[2]], ok: any },
        Case { id: "KII II-4-i-e", table: T2, g: SlFree, s: &[("w1", "w1"), ("1", "w2"), ("w1", "1"), ("w1", "1")], stars: &[&[1], &[2], &[3]], ok: any },
        Case { id: "KII II-4-i-f", table: T2, g: SlFree, s: &[("w1", "w1"), ("1", "w2"), ("1", "w1")], stars: &[&[1], &[2]], ok: any },
        Case { id: "KII II-4-i-g", table: T2, g: SlFree, s: &[("w1", "w1"), ("1", "w2"), ("w1", "1"), ("1", "w1")], stars: &[&[1], &[2], &[3]], ok: any },
        // 4-ii: n even
        Case { id: "KII II-4-ii-a", table: T2, g: SlFree, s: &[("w1", "w1"), ("1", "w2"), ("w1", "1"), ("w1", "1"), ("1", "w1")], stars: &[&[1], &[2, 3], &[4]], ok: |_, n| n % 2 == 0 },
        Case { id: "KII II-4-ii-b", table: T2, g: SlFree, s: &[("w1", "w1"), ("1", "w2"), ("w1", "1"), ("w1*", "1"), ("w1*", "1")], stars: &[&[1]], ok: |_, n| n % 2 == 0 },
        Case { id: "KII II-4-ii-c", table: T2, g: SlFree, s: &[("w1", "w1"), ("1", "w2"), ("w1", "1"), ("w1", "1"), ("w1", "1")], stars: &[&[1], &[2, 3, 4]], ok: |_, n| n % 2 == 0 },
        Case { id: "KII II-4-ii-d", table: T2, g: SlFree, s: &[("w1", "w1"), ("1", "w2"), ("w1", "1"), ("w1", "1"), ("w1*", "1")], stars: &[&[1]], ok: |m, n| n % 2 == 0 && m % 2 == 0 },
        Case { id: "KII II-4-ii-e", table: T2, g: SlFree, s: &[("w1", "w1"), ("1", "w2"), ("w1", "1"), ("w1*", "1"), ("1", "w1")], stars: &[&[1], &[4]], ok: |m, n| n % 2 == 0 && m % 2 == 0 },
        Case { id: "KII II-4-ii-f", table: T2, g: SlFree, s: &[("w1", "w1"), ("1", "w2"), ("w2", "1")], stars: &[&[1]], ok: |m, n| n % 2 == 0 && m % 2 == 1 },
        Case { id: "KII II-4-ii-g", table: T2, g: SlFree, s: &[("w1", "w1"), ("1", "w2"), ("1", "w1"), ("1", "w1")], stars: &[&[1], &[2], &[3]], ok: |m, n| n % 2 == 0 && m % 2 == 1 },
        // 4-iii: n odd
        Case { id: "KII II-4-iii-a", table: T2, g: SlFree, s: &[("w1", "w1"), ("1", "w2"), ("w1", "1"), ("w1", "1"), ("1", "w1*")], stars: &[], ok: |m, n| n % 2 == 1 && m >= 3 },
        Case { id: "KII II-4-iii-b", table: T2, g: SlFree, s: &[("w1", "w1"), ("1", "w2"), ("w2*", "1")], stars: &[], ok: |_, n| n % 2 == 1 },
        Case { id: "KII II-4-iii-c", table: T2, g: SlFree, s: &[("w1", "w1"), ("1", "w2"), ("w1", "1"), ("w1", "1"), ("w1", "1")], stars: &[&[2, 3, 4]], ok: |m, n| n % 2 == 1 && m >= 3 },
        Case { id: "KII II-4-iii-d", table: T2, g: SlFree, s: &[("w1", "w1"), ("1", "w2"), ("w1", "1"), ("w1", "1"), ("1", "w1")], stars: &[&[2, 3]], ok: |_, n| n % 2 == 1 },
        Case { id: "KII II-4-iii-e", table: T2, g: SlFree, s: &[("w1", "w1"), ("1", "w2"), ("w2", "1")], stars: &[], ok: |m, n| n % 2 == 1 && m % 2 == 0 },
        Case { id: "KII II-4-iii-f", table: T2, g: SlFree, s: &[("w1", "w1"), ("1", "w2"), ("w1", "1"), ("w1*", "1"), ("1", "w1")], stars: &[], ok: |m, n| n % 2 == 1 && m % 2 == 0 },
        Case { id: "KII II-4-iii-g", table: T2, g: SlFree, s: &[("w1", "w1"), ("1", "w2"), ("1", "w1"), ("1", "w1*")], stars: &[], ok: |m, n| n % 2 == 1 && m % 2 == 0 },
        Case { id: "KII II-4-iii-h", table: T2, g: SlFree, s: &[("w1", "w1"), ("1", "w2"), ("1", "w1*"), ("1", "w1*")], stars: &[], ok: |m, n| n % 2 == 1 && m % 2 == 0 },
        Case { id: "KII II-4-iii-i", table: T2, g: SlFree, s: &[("w1", "w1"), ("1", "w2"), ("w1", "1"), ("w1", "1"), ("w1*", "1")], stars: &[], ok: |m, n| n % 2 == 1 && m % 2 == 1 },
        Case { id: "KII II-4-iii-j", table: T2, g: SlFree, s: &[("w1", "w1"), ("1", "w2"), ("1", "w1"), ("1", "w1")], stars: &[], ok: |m, n| n % 2 == 1 && m % 2 == 1 },
        Case { id: "KII II-4-iii-k", table: T2, g: SlFree, s: &[("w1", "w1"), ("1", "w2"), ("w1", "1"), ("w1*", "1"), ("1", "w1*")], stars: &[], ok: |m, n| n % 2 == 1 && m % 2 == 1 },
        Case { id: "KII II-4-iii-l", table: T2, g: SlFree, s: &[("w1", "w1"), ("1", "w2*"), ("w1", "1"), ("w1*", "1"), ("w1*", "1")], stars: &[], ok: |_, n| n % 2 == 1 },
        Case { id: "KII II-4-iii-m", table: T2, g: SlFree, s: &[("w1", "w1"), ("1", "w2*"), ("w1", "1"), ("w1", "1"), ("w1", "1")], stars: &[&[2, 3, 4]], ok: |m, n| n % 2 == 1 && m >= 3 },
        Case { id: "KII II-4-iii-n", table: T2, g: SlFree, s: &[("w1", "w1"), ("1", "w2*"), ("w1", "1"), ("w1", "1"), ("1", "w1")], stars: &[&[2, 3], &[4]], ok: |_, n| n % 2 == 1 },
        Case { id: "KII II-4-iii-o", table: T2, g: SlFree, s: &[("w1", "w1"), ("1", "w2*"), ("w1", "1"), ("w1", "1"), ("w1*", "1")], stars: &[], ok: |m, n| n % 2 == 1 && m % 2 == 0 },
        Case { id: "KII II-4-iii-p", table: T2, g: SlFree, s: &[("w1", "w1"), ("1", "w2*"), ("1", "w1*"), ("1", "w1*")], stars: &[], ok: |m, n| n % 2 == 1 && m % 2 == 0 },
        Case { id: "KII II-4-iii-q", table: T2, g: SlFree, s: &[("w1", "w1"), ("1", "w2*"), ("w1", "1"), ("w1*", "1"), ("1", "w1")], stars: &[&[4]], ok: |m, n| n % 2 == 1 && m % 2 == 0 },
        Case { id: "KII II-4-iii-r", table: T2, g: SlFree, s: &[("w1", "w1"), ("1", "w2*"), ("w2", "1")], stars: &[], ok: |m, n| n % 2 == 1 && m % 2 == 1 },
        Case { id: "KII II-4-iii-s", table: T2, g: SlFree, s: &[("w1", "w1"), ("1", "w2*"), ("1", "w1"), ("1", "w1")], stars: &[], ok: |m, n| n % 2 == 1 && m % 2 == 1 },
        Case { id: "KII II-4-iii-t", table: T2, g: SlFree, s: &[("w1", "w1"), ("1", "w2*"), ("1", "w1"), ("1", "w1*")], stars: &[], ok: |m, n| n % 2 == 1 && m % 2 == 1 },
        // 5: G = SL_2, n > 2
        Case { id: "KII II-5-i-a", table: T2, g: SlPin(2), s: &[("2w1", "w1"), ("1", "w2")], stars: &[&[1]], ok: any },
        Case { id: "KII II-5-i-b", table: T2, g: SlPin(2), s: &[("2w1", "w1"), ("1", "w2"), ("w1", "1")], stars: &[&[1]], ok: any },
        Case { id: "KII II-5-ii-a", table: T2, g: SlPin(2), s: &[("w1", "w1"), ("1", "w2"), ("2w1", "1")], stars: &[], ok: any },
        Case { id: "KII II-5-ii-b", table: T2, g: SlPin(2), s: &[("w1", "w1"), ("1", "w2"), ("2w1", "1"), ("1", "w1")], stars: &[], ok: any },
        Case { id: "KII II-5-ii-c", table: T2, g: SlPin(2), s: &[("w1", "w1"), ("1", "w2"), ("3w1", "1")], stars: &[], ok: |_, n| n % 2 == 0 },
        Case { id: "KII II-5-ii-d", table: T2, g: SlPin(2), s: &[("w1", "w1"), ("1", "w2"), ("2w1", "1"), ("w1", "1")], stars: &[], ok: |_, n| n % 2 == 0 },
        Case { id: "KII II-5-ii-e", table: T2, g: SlPin(2), s: &[("w1", "w1"), ("1", "w2"), ("2w1", "1"), ("1", "w1*")], stars: &[], ok: |_, n| n % 2 == 0 },
        Case { id: "KII II-5-iii-a", table: T2, g: SlPin(2), s: &[("w1", "w1"), ("1", "w2*")], stars: &[], ok: any },
        Case { id: "KII II-5-iii-b", table: T2, g: SlPin(2), s: &[("w1", "w1"), ("1", "w2*"), ("2w1", "1")], stars: &[], ok: any },
        Case { id: "KII II-5-iii-c", table: T2, g: SlPin(2), s: &[("w1", "w1"), ("1", "w2*"), ("3w1", "1")], stars: &[], ok: any },
        Case { id: "KII II-5-iii-d", table: T2, g: SlPin(2), s: &[("w1", "w1"), ("1", "w2*"), ("2w1", "1"), ("w1", "1")], stars: &[], ok: any },
        Case { id: "KII II-5-iii-e", table: T2, g: SlPin(2), s: &[("w1", "w1"), ("1", "w2*"), ("2w1", "1"), ("1", "w1")], stars: &[&[3]], ok: any },
        Case { id: "KII II-5-iv-a", table: T2, g: SlPin(2), s: &[("w1", "w1"), ("1", "w2*"), ("1", "w2*")], stars: &[], ok: |_, n| n == 5 },
        Case { id: "KII II-5-v-a", table: T2, g: SlPin(2), s: &[("w1", "w1"), ("1", "w3")], stars: &[], ok: |_, n| n == 6 },
        Case { id: "KII II-5-v-b", table: T2, g: SlPin(2), s: &[("w1", "w1"), ("1", "w3"), ("1", "w1*")], stars: &[], ok: |_, n| n == 6 },
        Case { id: "KII II-5-v-c", table: T2, g: SlPin(2), s: &[("w1", "w1"), ("1", "w3"), ("w1", "1")], stars: &[], ok: |_, n| n == 6 },
        Case { id: "KII II-5-v-d", table: T2, g: SlPin(2), s: &[("w1", "w1"), ("1", "w3"), ("2w1", "1")], stars: &[], ok: |_, n| n == 6 },
        Case { id: "KII II-5-v-e", table: T2, g: SlPin(2), s: &[("w1", "w1"), ("1", "w3"), ("3w1", "1")], stars: &[], ok: |_, n| n == 6 },
        Case { id: "KII II-5-v-f", table: T2, g: SlPin(2), s: &[("w1", "w1"), ("1", "w3"), ("w1", "1"), ("w1", "1")], stars: &[], ok: |_, n| n == 6 },
        Case { id: "KII II-5-v-g", table: T2, g: SlPin(2), s: &[("w1", "w1"), ("1", "w3"), ("2w1", "1"), ("w1", "1")], stars: &[], ok: |_, n| n == 6 },
        Case { id: "KII II-5-v-h", table: T2, g: SlPin(2), s: &[("w1", "w1"), ("1", "w3"), ("w1", "1"), ("w1", "1"), ("w1", "1")], stars: &[], ok: |_, n| n == 6 },
        Case { id: "KII II-5-vi-a", table: T2, g: SlPin(2), s: &[("w1", "w1"), ("1", "w3")], stars: &[&[1]], ok: |_, n| n == 7 },
        Case { id: "KII II-5-vi-b", table: T2, g: SlPin(2), s: &[("w1", "w1"), ("1", "w3"), ("w1", "1")], stars: &[&[1]], ok: |_, n| n == 7 },
        // 6: G = SL_3, n > 3
        Case { id: "KII II-6-a", table: T2, g: SlPin(3), s: &[("w1", "w1"), ("1", "w2"), ("2w1", "1")], stars: &[&[1], &[2]], ok: any },
        Case { id: "KII II-6-b", table: T2, g: SlPin(3), s: &[("w1", "w1"), ("1", "w2"), ("1", "w2")], stars: &[], ok: |_, n| n == 5 },
        // 7: G = SL_4, n > 4
        Case { id: "KII II-7-i-a", table: T2, g: SlPin(4), s: &[("w1", "w1"), ("1", "w2"), ("2w1", "1")], stars: &[], ok: |_, n| n % 2 == 1 },
        Case { id: "KII II-7-i-b", table: T2, g: SlPin(4), s: &[("w1", "w1"), ("1", "w2"), ("w2", "1"), ("w1", "1")], stars: &[&[3]], ok: |_, n| n % 2 == 1 },
        Case { id: "KII II-7-i-c", table: T2, g: SlPin(4), s: &[("w1", "w1"), ("1", "w2"), ("w2", "1"), ("1", "w1*")], stars: &[], ok: |_, n| n % 2 == 1 },
        Case { id: "KII II-7-ii-a", table: T2, g: SlPin(4), s: &[("w1", "w1"), ("1", "w2"), ("1", "w2")], stars: &[], ok: |_, n| n == 5 },
        Case { id: "KII II-7-iii-a", table: T2, g: SlPin(4), s: &[("w1", "w1"), ("1", "w3")], stars: &[], ok: |_, n| n == 6 },
        Case { id: "KII II-7-iii-b", table: T2, g: SlPin(4), s: &[("w1", "w1"), ("1", "w3"), ("w1*", "1")], stars: &[], ok: |_, n| n == 6 },
        Case { id: "KII II-7-iii-c", table: T2, g: SlPin(4), s: &[("w1", "w1"), ("1", "w3"), ("w2", "1")], stars: &[&[2]], ok: |_, n| n == 6 },
        Case { id: "KII II-7-iii-d", table: T2, g: SlPin(4), s: &[("w1", "w1"), ("1", "w3"), ("w1*", "1"), ("w1*", "1")], stars: &[], ok: |_, n| n == 6 },
        Case { id: "KII II-7-iii-e", table: T2, g: SlPin(4), s: &[("w1", "w1"), ("1", "w3"), ("1", "w1")], stars: &[], ok: |_, n| n == 6 },
        // 8: G = SL_5, n > 5
        Case { id: "KII II-8-i-a", table: T2, g: SlPin(5), s: &[("w1", "w1"), ("1", "w2"), ("w2", "1"), ("w1*", "1")], stars: &[&[1]], ok: |_, n| n % 2 == 0 },
        Case { id: "KII II-8-ii-a", table: T2, g: SlPin(5), s: &[("w1", "w1"), ("1", "w2*"), ("w2", "1"), ("w1*", "1")], stars: &[], ok: |_, n| n % 2 == 1 },
        Case { id: "KII II-8-ii-b", table: T2, g: SlPin(5), s: &[("w1", "w1"), ("1", "w2*"), ("1", "w2"), ("w2*", "1"), ("w1", "1")], stars: &[], ok: |_, n| n % 2 == 1 },
        Case { id: "KII II-8-ii-c", table: T2, g: SlPin(5), s: &[("w1", "w1"), ("1", "w2*"), ("1", "w2"), ("w2*", "1"), ("1", "w1*")], stars: &[], ok: |_, n| n % 2 == 1 },
        Case { id: "KII II-8-iii-a", table: T2, g: SlPin(5), s: &[("w1", "w1"), ("1", "w3")], stars: &[], ok: |_, n| n == 6 },
        Case { id: "KII II-8-iii-b", table: T2, g: SlPin(5), s: &[("w1", "w1"), ("1", "w3"), ("w1", "1")], stars: &[&[2]], ok: |_, n| n == 6 },
        Case { id: "KII II-8-iii-c", table: T2, g: SlPin(5), s: &[("w1", "w1"), ("1", "w3"), ("w2*", "1")], stars: &[], ok: |_, n| n == 6 },
        Case { id: "KII II-8-iii-d", table: T2, g: SlPin(5), s: &[("w1", "w1"), ("1", "w3"), ("w1*", "1"), ("w1", "1")], stars: &[&[3]], ok: |_, n| n == 6 },
        Case { id: "KII II-8-iii-e", table: T2, g: SlPin(5), s: &[("w1", "w1"), ("1", "w3"), ("1", "w1*")], stars: &[], ok: |_, n| n == 6 },
        Case { id: "KII II-8-iv-a", table: T2, g: SlPin(5), s: &[("w1", "w1"), ("1", "w3")], stars: &[&[1]], ok: |_, n| n == 7 },
        // 9: G = SL_2j, n = 2j+1
        Case { id: "KII II-9-a", table: T2, g: SlEven, s: &[("w1", "w1"), ("1", "w2*"), ("1", "w1"), ("1", "w1")], stars: &[], ok: any },
        Case { id: "KII II-9-b", table: T2, g: SlEven, s: &[("w1", "w1"), ("1", "w3"), ("w1", "1")], stars: &[&[1], &[2]], ok: |m, _| m == 6 },
        // 11: G = Sp_m, 2m < n
        Case { id: "KII II-11-i-a", table: T2, g: SpFree, s: &[("w1", "w1"), ("1", "w2")], stars: &[], ok: |m, n| 2 * m < n && n % 2 == 1 },
        Case { id: "KII II-11-i-b", table: T2, g: SpFree, s: &[("w1", "w1"), ("1", "w2"), ("w1", "1")], stars: &[], ok: |m, n| 2 * m < n && n % 2 == 1 && m == 2 },
        Case { id: "KII II-11-i-c", table: T2, g: SpFree, s: &[("w1", "w1"), ("1", "w2"), ("w2", "1")], stars: &[], ok: |m, n| 2 * m < n && n % 2 == 1 && m == 2 },
        Case { id: "KII II-11-i-d", table: T2, g: SpFree, s: &[("w1", "w1"), ("1", "w2"), ("1", "w1*")], stars: &[], ok: |m, n| 2 * m < n && n % 2 == 1 && m == 2 },
        Case { id: "KII II-11-ii-a", table: T2, g: SpFree, s: &[("w1", "w1"), ("1", "w3")], stars: &[], ok: |m, n| 2 * m < n && n == 6 && m == 2 },
    ];
    for c in CASES {
        push_case(v, c);
    }

    // KII II-10: built on a simple module of SL_n against a second SL_n
    let mut e = entry("KII II-10", Table::KiiII);
    e.enumerate = Box::new(|bound| {
        let mut out = Vec::new();
        for (bi, base) in base_menu().iter().enumerate() {
            if base.g.family != crate::rep::Family::Sl {
                continue;
            }
            let n = base.g.n as i64;
            for k in 0..=base.reps.len() as i64 {
                let space = n * n
                    + base.reps[..k as usize].iter().map(rdim).sum::<i64>()
                    + base.reps[k as usize..].iter().map(rdim).sum::<i64>();
                if space <= bound as i64 {
                    out.push(Params::of(&[("base", bi as i64), ("k", k)]));
                }
            }
        }
        out
    });
    e.dims = Box::new(|p| {
        let base = &base_menu()[p.u("base")];
        let n = base.g.n as i64;
        let r = base.reps.len() as i64;
        let space = n * n + base.reps.iter().map(rdim).sum::<i64>();
        (r + 1 + 2 * (n * n - 1), space)
    });
    e.variants.push(variant_no_iso("", |p| {
        let base = &base_menu()[p.u("base")];
        let k = p.u("k");
        let a = base.g;
        let b = sl(a.n);
        let mut summands = vec![vec![w1(a), w1(b)]];
        for r in &base.reps[..k] {
            summands.push(vec![*r, trv(b)]);
        }
        for r in &base.reps[k..] {
            summands.push(vec![trv(a), r.dualized()]);
        }
        Ok(msn(vec![a, b], summands))
    }));
    v.push(e);
}

fn kii3(v: &mut Vec<CatalogEntry>) {
    use GKind::*;
    use Table::KiiIII as T3;
    static CASES: &[Case] = &[
        Case { id: "KII III-12", table: T3, g: SlPin(4), s: &[("w2", "w1"), ("w1", "w1")], stars: &[], ok: |_, n| n == 8 },
        // 13-i: m < n
        Case { id: "KII III-13-i-a", table: T3, g: SlFree, s: &[("w1", "w1"), ("1", "w1*"), ("1", "w1*"), ("w2", "1")], stars: &[&[3]], ok: any },
        Case { id: "KII III-13-i-b", table: T3, g: SlFree, s: &[("w1", "w1"), ("1", "w1*"), ("1", "w1*"), ("w2", "1"), ("w1", "1")], stars: &[&[3]], ok: any },
        Case { id: "KII III-13-i-c", table: T3, g: SlFree, s: &[("w1", "w1"), ("1", "w1*"), ("1", "w1*"), ("w2*", "1"), ("w1*", "1")], stars: &[], ok: any },
        Case { id: "KII III-13-i-d", table: T3, g: SlFree, s: &[("w1", "w1"), ("1", "w1*"), ("1", "w1*"), ("w2", "1"), ("1", "w1*")], stars: &[&[3]], ok: any },
        Case { id: "KII III-13-i-e", table: T3, g: SlFree, s: &[("w1", "w1"), ("1", "w1*"), ("1", "w1*"), ("w2*", "1"), ("1", "w1")], stars: &[], ok: any },
        Case { id: "KII III-13-i-f", table: T3, g: SlFree, s: &[("w1", "w1"), ("1", "w1*"), ("1", "w1*"), ("w2", "1"), ("w1*", "1")], stars: &[], ok: |m, _| m % 2 == 0 },
        Case { id: "KII III-13-i-g", table: T3, g: SlFree, s: &[("w1", "w1"), ("1", "w1*"), ("1", "w1*"), ("w2", "1"), ("1", "w1")], stars: &[], ok: |m, _| m % 2 == 0 },
        Case { id: "KII III-13-i-h", table: T3, g: SlFree, s: &[("w1", "w1"), ("1", "w1*"), ("1", "w1*"), ("w3", "1")], stars: &[], ok: |m, _| m == 6 },
        Case { id: "KII III-13-i-i", table: T3, g: SlFree, s: &[("w1", "w1"), ("1", "w1*"), ("1", "w1*"), ("w3", "1"), ("1", "w1")], stars: &[], ok: |m, _| m == 6 },
        // 13-ii: n = m + 1
        Case { id: "KII III-13-ii-a", table: T3, g: SlFree, s: &[("w1", "w1"), ("1", "w1"), ("1", "w1"), ("1", "w1"), ("w2", "1")], stars: &[], ok: |m, n| n == m + 1 },
        Case { id: "KII III-13-ii-b", table: T3, g: SlFree, s: &[("w1", "w1"), ("1", "w1"), ("1", "w1"), ("1", "w1"), ("w2*", "1")], stars: &[], ok: |m, n| n == m + 1 && m % 2 == 0 },
        Case { id: "KII III-13-ii-c", table: T3, g: SlFree, s: &[("w1", "w1"), ("1", "w1"), ("1", "w1"), ("1", "w1"), ("w3", "1")], stars: &[], ok: |m, n| n == m + 1 && m == 6 },
        // 13-iii: n >= m(m-1)/2, wedge tensored up
        Case { id: "KII III-13-iii-a", table: T3, g: SlFree, s: &[("w2", "w1"), ("1", "w1*"), ("1", "w1*")], stars: &[], ok: |m, n| m % 2 == 1 && 2 * n >= m * (m - 1) },
        Case { id: "KII III-13-iii-b", table: T3, g: SlFree, s: &[("w2", "w1"), ("1", "w1"), ("1", "w1*"), ("1", "w1*")], stars: &[], ok: |m, n| m % 2 == 1 && 2 * n > m * (m - 1) },
        Case { id: "KII III-13-iii-c", table: T3, g: SlFree, s: &[("w2", "w1"), ("w1*", "1"), ("1", "w1*"), ("1", "w1*")], stars: &[], ok: |m, n| m == 5 && 2 * n >= m * (m - 1) },
        Case { id: "KII III-13-iii-d", table: T3, g: SlFree, s: &[("w2", "w1"), ("1", "w1"), ("1", "w1"), ("1", "w1")], stars: &[], ok: |m, n| m % 2 == 1 && 2 * n == m * m + m + 2 },
        Case { id: "KII III-13-iii-e", table: T3, g: SlFree, s: &[("w2", "w1"), ("1", "w1"), ("1", "w1")], stars: &[], ok: |m, n| m % 2 == 0 && 2 * n == m * m + m },
        Case { id: "KII III-13-iii-f", table: T3, g: SlFree, s: &[("w2", "w1"), ("w1", "1"), ("1", "w1"), ("1", "w1")], stars: &[], ok: |m, n| m == 5 && n == 10 },
        // 14: G = Sp_m, n >= 2m
        Case { id: "KII III-14-a", table: T3, g: SpFree, s: &[("w1", "w1"), ("1", "w1*"), ("1", "w1*")], stars: &[], ok: |m, n| n >= 2 * m },
        Case { id: "KII III-14-b", table: T3, g: SpFree, s: &[("w1", "w1"), ("1", "w1*"), ("1", "w1*"), ("w1", "1")], stars: &[], ok: |m, n| n >= 2 * m },
        Case { id: "KII III-14-c", table: T3, g: SpFree, s: &[("w1", "w1"), ("1", "w1*"), ("1", "w1*"), ("1", "w1*")], stars: &[], ok: |m, n| n >= 2 * m },
        Case { id: "KII III-14-d", table: T3, g: SpFree, s: &[("w1", "w1"), ("1", "w1*"), ("1", "w1*"), ("1", "w1")], stars: &[], ok: |m, n| n > 2 * m },
        Case { id: "KII III-14-e", table: T3, g: SpFree, s: &[("w1", "w1"), ("1", "w1"), ("1", "w1*"), ("w1", "1")], stars: &[], ok: |m, n| n == 2 * m },
        Case { id: "KII III-14-f", table: T3, g: SpFree, s: &[("w1", "w1"), ("1", "w1"), ("1", "w1*"), ("1", "w1")], stars: &[&[3]], ok: |m, n| n == 2 * m },
        // 15: G = Spin_10, n >= 16
        Case { id: "KII III-15-a", table: T3, g: Spin10, s: &[("hs", "w1"), ("1", "w1*"), ("1", "w1*")], stars: &[], ok: any },
        Case { id: "KII III-15-b", table: T3, g: Spin10, s: &[("hs", "w1"), ("1", "w1"), ("1", "w1*"), ("1", "w1*")], stars: &[], ok: |_, n| n >= 17 },
        Case { id: "KII III-15-c", table: T3, g: Spin10, s: &[("hs", "w1"), ("1", "w1"), ("1", "w1"), ("1", "w1")], stars: &[], ok: |_, n| n == 17 },
        Case { id: "KII III-15-d", table: T3, g: Spin10, s: &[("hs", "w1"), ("1", "w1"), ("1", "w1")], stars: &[], ok: |_, n| n == 16 },
    ];
    for c in CASES {
        push_case(v, c);
    }
}

fn kii4(v: &mut Vec<CatalogEntry>) {
    // KII IV-16: n >= km, stored as a predicate with a bounded sampler
    let mut e = entry("KII IV-16", Table::KiiIV);
    e.enumerate = Box::new(|bound| sample_family(bound, false));
    e.dims = Box::new(family_dims);
    e.variants.push(variant_no_iso("", |p| {
        let fp = family_params(p);
        if family_case_large_n(fp).is_none() {
            return Err(CatalogError::Constraint(format!("KII IV-16 at {p}")));
        }
        Ok(family_module(fp))
    }));
    v.push(e);

    // KII IV-17: km > n, the castling-controlled cases
    let mut e = entry("KII IV-17", Table::KiiIV);
    e.enumerate = Box::new(|bound| sample_family(bound, true));
    e.dims = Box::new(family_dims);
    e.variants.push(variant_no_iso("", |p| {
        let fp = family_params(p);
        if family_case_castling(fp).is_none() {
            return Err(CatalogError::Constraint(format!("KII IV-17 at {p}")));
        }
        Ok(family_module(fp))
    }));
    v.push(e);

    // the four supplementary shapes listed with the triple definition
    supplementary(v);
}

fn family_params(p: &Params) -> FamilyParams {
    FamilyParams {
        k: p.i("k"),
        m: p.i("m"),
        n: p.i("n"),
        s1: p.i("s1"),
        s2: p.i("s2"),
        t1: p.i("t1"),
        t2: p.i("t2"),
    }
}

fn family_dims(p: &Params) -> (i64, i64) {
    let f = family_params(p);
    let torus = f.k + f.s1 + f.s2 + f.t1 + f.t2;
    let group = torus + f.m * f.m - 1 + f.n * f.n - 1;
    let space = f.m * (f.s1 + f.s2) + f.k * f.m * f.n + f.n * (f.t1 + f.t2);
    (group, space)
}

fn sample_family(bound: usize, castling: bool) -> Vec<Params> {
    let b = bound as i64;
    let mut out = Vec::new();
    for k in 1..=4i64 {
        for m in 2..=12 {
            for n in m..=40 {
                let core = k * m * n;
                if core > b {
                    break;
                }
                let budget = b - core;
                for s1 in 0..=budget / m {
                    for s2 in 0..=(budget - s1 * m) / m {
                        let left = budget - (s1 + s2) * m;
                        for t1 in 0..=left / n {
                            for t2 in 0..=(left - t1 * n) / n {
                                let fp = FamilyParams { k, m, n, s1, s2, t1, t2 };
                                let hit = if castling {
                                    family_case_castling(fp).is_some()
                                } else {
                                    family_case_large_n(fp).is_some()
                                };
                                if hit {
                                    out.push(Params::of(&[
                                        ("k", k),
                                        ("m", m),
                                        ("n", n),
                                        ("s1", s1),
                                        ("s2", s2),
                                        ("t1", t1),
                                        ("t2", t2),
                                    ]));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// min(a,b) <= 1 and a+b <= m+1: the simple rows made of vectors and dual
/// vectors of SL_m; two or more of each orientation admit an absolute
/// invariant and are excluded.
fn vectors_simple_pv(plain: i64, dual: i64, m: i64) -> bool {
    plain.min(dual) <= 1 && plain + dual <= m + 1
}

fn supplementary(v: &mut Vec<CatalogEntry>) {
    // s1: k = 1, t >= 1, n >= m+t-1, s <= m
    let mut e = entry("KII IV-s1", Table::KiiIV);
    e.enumerate = Box::new(|bound| {
        let b = bound as i64;
        let mut out = Vec::new();
        for m in 2..=10i64 {
            for n in m..=20 {
                for s in 0..=m {
                    for t in 1..=5i64 {
                        for e0 in 0..=if s > 0 { 1 } else { 0 } {
                            if n >= m + t - 1 && s * m + m * n + t * n <= b {
                                out.push(Params::of(&[
                                    ("m", m),
                                    ("n", n),
                                    ("s", s),
                                    ("t", t),
                                    ("e0", e0),
                                ]));
                            }
                        }
                    }
                }
            }
        }
        out
    });
    e.dims = Box::new(|p| {
        let (m, n, s, t) = (p.i("m"), p.i("n"), p.i("s"), p.i("t"));
        (1 + s + t + m * m - 1 + n * n - 1, s * m + m * n + t * n)
    });
    e.variants.push(variant_no_iso("", |p| {
        let (m, n, s, t) = (p.u("m"), p.u("n"), p.u("s"), p.u("t"));
        let (a, b) = (sl(m), sl(n));
        let mut summands = Vec::new();
        for _ in 0..s {
            summands.push(vec![dual_if(w1(a), p.flag("e0")), trv(b)]);
        }
        summands.push(vec![w1(a), w1(b)]);
        summands.push(vec![trv(a), w1d(b)]);
        for _ in 0..t - 1 {
            summands.push(vec![trv(a), w1(b)]);
        }
        Ok(msn(vec![a, b], summands))
    }));
    v.push(e);

    // s2: k >= 2, t >= 1, n >= km+t-1, s + k <= m + 1
    let mut e = entry("KII IV-s2", Table::KiiIV);
    e.enumerate = Box::new(|bound| {
        let b = bound as i64;
        let mut out = Vec::new();
        for k in 2..=3i64 {
            for m in 2..=8 {
                for s in 1..=(m + 1 - k).max(0) {
                    for t in 1..=4i64 {
                        for n in (k * m + t - 1).max(2)..=20 {
                            if s * m + k * m * n + t * n <= b {
                                for e0 in 0..=1 {
                                    out.push(Params::of(&[
                                        ("k", k),
                                        ("m", m),
                                        ("n", n),
                                        ("s", s),
                                        ("t", t),
                                        ("e0", e0),
                                    ]));
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    });
    e.dims = Box::new(|p| {
        let (k, m, n, s, t) = (p.i("k"), p.i("m"), p.i("n"), p.i("s"), p.i("t"));
        (k + s + t + m * m - 1 + n * n - 1, s * m + k * m * n + t * n)
    });
    e.variants.push(variant_no_iso("", |p| {
        let (k, m, n, s, t) = (p.u("k"), p.u("m"), p.u("n"), p.u("s"), p.u("t"));
        let (a, b) = (sl(m), sl(n));
        let mut summands = Vec::new();
        for _ in 0..s - 1 {
            summands.push(vec![w1(a), trv(b)]);
        }
        summands.push(vec![dual_if(w1(a), p.flag("e0")), trv(b)]);
        for _ in 0..k {
            summands.push(vec![w1(a), w1(b)]);
        }
        summands.push(vec![trv(a), w1d(b)]);
        for _ in 0..t - 1 {
            summands.push(vec![trv(a), w1(b)]);
        }
        Ok(msn(vec![a, b], summands))
    }));
    v.push(e);

    // s3: n >= km+t with a simple-module condition on the bare vectors
    let mut e = entry("KII IV-s3", Table::KiiIV);
    e.enumerate = Box::new(|bound| {
        let b = bound as i64;
        let mut out = Vec::new();
        for k in 1..=3i64 {
            for m in 2..=8 {
                for s in 0..=m + 1 {
                    for t in 0..=4i64 {
                        for n in (k * m + t).max(2)..=20 {
                            if s * m + k * m * n + t * n <= b {
                                for e0 in 0..=if s > 0 { 1 } else { 0 } {
                                    out.push(Params::of(&[
                                        ("k", k),
                                        ("m", m),
                                        ("n", n),
                                        ("s", s),
                                        ("t", t),
                                        ("e0", e0),
                                    ]));
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    });
    e.dims = Box::new(|p| {
        let (k, m, n, s, t) = (p.i("k"), p.i("m"), p.i("n"), p.i("s"), p.i("t"));
        (k + s + t + m * m - 1 + n * n - 1, s * m + k * m * n + t * n)
    });
    e.variants.push(variant_no_iso("", |p| {
        let (k, m, n, s, t) = (p.i("k"), p.i("m"), p.i("n"), p.i("s"), p.i("t"));
        if !vectors_simple_pv(if p.flag("e0") { 0 } else { s }, if p.flag("e0") { s } else { 0 }, m) {
            return Err(CatalogError::Constraint(format!("KII IV-s3 at {p}")));
        }
        let (a, b) = (sl(m as usize), sl(n as usize));
        let mut summands = Vec::new();
        for _ in 0..s {
            summands.push(vec![dual_if(w1(a), p.flag("e0")), trv(b)]);
        }
        for _ in 0..k {
            summands.push(vec![w1(a), w1(b)]);
        }
        for _ in 0..t {
            summands.push(vec![trv(a), w1(b)]);
        }
        Ok(msn(vec![a, b], summands))
    }));
    v.push(e);

    // s4: t >= 3, n = km+t-1, mixed-orientation simple-module condition
    let mut e = entry("KII IV-s4", Table::KiiIV);
    e.enumerate = Box::new(|bound| {
        let b = bound as i64;
        let mut out = Vec::new();
        for k in 1..=3i64 {
            for m in 2..=8 {
                for s in 0..=m + 1 {
                    for t in 3..=6i64 {
                        let n = k * m + t - 1;
                        if n < 2 || s * m + k * m * n + t * n > b {
                            continue;
                        }
                        for e0 in 0..=if s > 0 { 1 } else { 0 } {
                            let (plain, dual) = if e0 == 1 { (0, s + k) } else { (s, k) };
                            if vectors_simple_pv(plain, dual, m) {
                                out.push(Params::of(&[
                                    ("k", k),
                                    ("m", m),
                                    ("n", n),
                                    ("s", s),
                                    ("t", t),
                                    ("e0", e0),
                                ]));
                            }
                        }
                    }
                }
            }
        }
        out
    });
    e.dims = Box::new(|p| {
        let (k, m, n, s, t) = (p.i("k"), p.i("m"), p.i("n"), p.i("s"), p.i("t"));
        (k + s + t + m * m - 1 + n * n - 1, s * m + k * m * n + t * n)
    });
    e.variants.push(variant_no_iso("", |p| {
        let (k, m, n, s, t) = (p.u("k"), p.u("m"), p.u("n"), p.u("s"), p.u("t"));
        let (a, b) = (sl(m), sl(n));
        let mut summands = Vec::new();
        for _ in 0..s {
            summands.push(vec![dual_if(w1(a), p.flag("e0")), trv(b)]);
        }
        for _ in 0..k {
            summands.push(vec![w1(a), w1(b)]);
        }
        for _ in 0..t {
            summands.push(vec![trv(a), w1(b)]);
        }
        Ok(msn(vec![a, b], summands))
    }));
    v.push(e);
}
