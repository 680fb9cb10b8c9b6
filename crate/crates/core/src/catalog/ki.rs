//! Two-simple rows of type I: the regular list and the non-regular list.
//! No relative invariants are printed for these rows (they live in later
//! papers), so the stated isotropy dimensions carry the audit.

use super::dsl::*;
use super::*;
use crate::rep::{g2, sl, so, sp, spin};

/// A fixed two-factor entry: summands built from the star parameters, dims
/// given literally, isotropy a closure.
fn fixed(
    id: &'static str,
    table: Table,
    group: i64,
    space: i64,
    stars: &'static [&'static str],
    build: impl Fn(&Params) -> (Vec<SimpleGroupId>, Vec<Vec<RepSpec>>) + Sync + Send + 'static,
    isotropy: impl Fn(&Params) -> IsotropySpec + Sync + Send + 'static,
) -> CatalogEntry {
    let mut e = entry(id, table);
    e.enumerate = if stars.is_empty() {
        en0(space)
    } else {
        with_stars(en0(space), stars)
    };
    e.dims = Box::new(move |_| (group, space));
    e.variants.push(variant(
        "",
        move |p| {
            let (f, s) = build(p);
            Ok(msn(f, s))
        },
        isotropy,
    ));
    e
}

pub(crate) fn push_entries(v: &mut Vec<CatalogEntry>) {
    ki1(v);
    ki2(v);
}

#[allow(clippy::vec_init_then_push)]
fn ki1(v: &mut Vec<CatalogEntry>) {
    use IsoFactor::*;

    // KI I-1
    let mut e = fixed("KI I-1", Table::KiI, 20, 20, &[], |_| {
        let (a, b) = (sl(4), sl(2));
        (vec![a, b], vec![vec![w(a, 2), w1(b)], vec![w1(a), w1(b)]])
    }, |_| iso(&[], 0));
    e.variants[0].etale_listed = true;
    v.push(e);

    // KI I-2 (+ reduced with two scalars, the etale form)
    let mut e = fixed("KI I-2", Table::KiI, 21, 20, &[], |_| {
        let (a, b) = (sl(4), sl(2));
        (vec![a, b], vec![vec![w(a, 2), w1(b)], vec![w1(a), trv(b)], vec![w1(a), trv(b)]])
    }, |_| iso(&[Torus(1)], 0));
    let mut red = variant(
        "reduced",
        |_| {
            let (a, b) = (sl(4), sl(2));
            Ok(msp(
                vec![a, b],
                vec![vec![w(a, 2), w1(b)], vec![w1(a), trv(b)], vec![w1(a), trv(b)]],
                vec![vec![1, 0, 0], vec![0, 1, 1]],
            ))
        },
        |_| iso(&[], 0),
    );
    red.etale_listed = true;
    e.variants.push(red);
    v.push(e);

    // KI I-3
    v.push(fixed("KI I-3", Table::KiI, 25, 22, &[], |_| {
        let (a, b) = (sl(4), sl(3));
        (vec![a, b], vec![vec![w(a, 2), w1(b)], vec![w1(a), trv(b)]])
    }, |_| iso(&[So(3)], 0)));

    // KI I-4
    v.push(fixed("KI I-4", Table::KiI, 26, 25, &["e0"], |p| {
        let (a, b) = (sl(4), sl(3));
        (vec![a, b], vec![
            vec![w(a, 2), w1(b)],
            vec![w1(a), trv(b)],
            vec![trv(a), dual_if(w1(b), p.flag("e0"))],
        ])
    }, |_| iso(&[So(2)], 0)));

    // KI I-5
    v.push(fixed("KI I-5", Table::KiI, 33, 32, &[], |_| {
        let (a, b) = (sl(4), sl(4));
        (vec![a, b], vec![
            vec![w(a, 2), w1(b)],
            vec![w1(a), trv(b)],
            vec![trv(a), w1d(b)],
        ])
    }, |_| iso(&[So(2)], 0)));

    // KI I-6
    let mut e = fixed("KI I-6", Table::KiI, 30, 30, &["e0"], |p| {
        let (a, b) = (sl(5), sl(2));
        (vec![a, b], vec![
            vec![w(a, 2), w1(b)],
            vec![w1d(a), trv(b)],
            vec![dual_if(w1(a), p.flag("e0")), trv(b)],
        ])
    }, |_| iso(&[], 0));
    e.variants[0].etale_listed = true;
    v.push(e);

    // KI I-7
    v.push(fixed("KI I-7", Table::KiI, 34, 33, &["e0"], |p| {
        let (a, b) = (sl(5), sl(3));
        (vec![a, b], vec![
            vec![w(a, 2), w1(b)],
            vec![trv(a), dual_if(w1(b), p.flag("e0"))],
        ])
    }, |_| iso(&[So(2)], 0)));

    // KI I-8
    v.push(fixed("KI I-8", Table::KiI, 89, 88, &[], |_| {
        let (a, b) = (sl(5), sl(8));
        (vec![a, b], vec![vec![w(a, 2), w1(b)], vec![trv(a), w1d(b)]])
    }, |_| iso(&[So(2)], 0)));

    // KI I-9 (+ reduced with one scalar)
    let mut e = fixed("KI I-9", Table::KiI, 106, 99, &[], |_| {
        let (a, b) = (sl(5), sl(9));
        (vec![a, b], vec![vec![w(a, 2), w1(b)], vec![trv(a), w1d(b)]])
    }, |_| iso(&[Torus(1), Sl(2), Sl(2)], 0));
    e.variants.push(variant(
        "reduced",
        |_| {
            let (a, b) = (sl(5), sl(9));
            Ok(msp(
                vec![a, b],
                vec![vec![w(a, 2), w1(b)], vec![trv(a), w1d(b)]],
                vec![vec![1, 1]],
            ))
        },
        |_| iso(&[Sl(2), Sl(2)], 0),
    ));
    v.push(e);

    // KI I-10: printed reduced statement is internally inconsistent
    let mut e = entry("KI I-10", Table::KiI);
    e.enumerate = with_stars(
        en2("n", 2, "m", 1, |n, m| n > m, |n, m| 4 * n * m + 4 * m),
        &["e0", "e1"],
    );
    e.dims = Box::new(|p| {
        let (n, m) = (p.i("n"), p.i("m"));
        (3 + n * (2 * n + 1) + 4 * m * m - 1, 4 * n * m + 4 * m)
    });
    e.variants.push(variant(
        "",
        |p| {
            let (a, b) = (sp(p.u("n")), sl(2 * p.u("m")));
            Ok(msn(vec![a, b], vec![
                vec![w1(a), w1(b)],
                vec![trv(a), dual_if(w1(b), p.flag("e0"))],
                vec![trv(a), dual_if(w1(b), p.flag("e1"))],
            ]))
        },
        |p| iso(&[Torus(1), Sp(p.i("n") - p.i("m")), Sp(p.i("m") - 1)], 0),
    ));
    e.flags = vec![Flag::NeedsSourceCheck];
    e.note = Some("the printed reduced statement replaces SL_{2m} by Sp_{2m}; audit skipped");
    v.push(e);

    // KI I-11
    let mut e = entry("KI I-11", Table::KiI);
    e.enumerate = en1("n", 2, |n| 4 * n + 3);
    e.dims = Box::new(|p| (2 + p.i("n") * (2 * p.i("n") + 1) + 3, 4 * p.i("n") + 3));
    e.variants.push(variant(
        "",
        |p| {
            let (a, b) = (sp(p.u("n")), sl(2));
            Ok(msn(vec![a, b], vec![vec![w1(a), w1(b)], vec![trv(a), w2a(b)]]))
        },
        |p| iso(&[Sp(p.i("n") - 1), So(2)], 0),
    ));
    v.push(e);

    // KI I-12: printed with SL_3; the dimensions force SL_2
    let mut e = entry("KI I-12", Table::KiI);
    e.enumerate = en1("n", 2, |n| 4 * n + 4);
    e.dims = Box::new(|p| (2 + p.i("n") * (2 * p.i("n") + 1) + 3, 4 * p.i("n") + 4));
    e.variants.push(variant(
        "",
        |p| {
            let (a, b) = (sp(p.u("n")), sl(2));
            Ok(msn(vec![a, b], vec![vec![w1(a), w1(b)], vec![trv(a), w3a(b)]]))
        },
        |p| iso(&[Sp(p.i("n") - 1)], 0),
    ));
    e.flags = vec![Flag::CorrectedTypo];
    e.note = Some("printed second factor SL_3; dimension arithmetic forces SL_2");
    v.push(e);

    // KI I-13: printed 2w2; the weight label must be 2w1
    let mut e = entry("KI I-13", Table::KiI);
    e.enumerate = en1("n", 2, |n| 4 * n + 5);
    e.dims = Box::new(|p| (3 + p.i("n") * (2 * p.i("n") + 1) + 3, 4 * p.i("n") + 5));
    e.variants.push(variant(
        "",
        |p| {
            let (a, b) = (sp(p.u("n")), sl(2));
            Ok(msn(vec![a, b], vec![
                vec![w1(a), w1(b)],
                vec![trv(a), w2a(b)],
                vec![trv(a), w1(b)],
            ]))
        },
        |p| iso(&[Sp(p.i("n") - 1)], 0),
    ));
    e.flags = vec![Flag::CorrectedTypo];
    e.note = Some("printed 2w2 on SL_2; read as 2w1 (dimension arithmetic)");
    v.push(e);

    // KI I-14 (+ reduced)
    let mut e = entry("KI I-14", Table::KiI);
    e.enumerate = en2("n", 2, "m", 1, |n, m| n >= m + 1, |n, m| 2 * n * (2 * m + 1) + 2 * n);
    e.dims = Box::new(|p| {
        let (n, m) = (p.i("n"), p.i("m"));
        (2 + n * (2 * n + 1) + (2 * m + 1) * (2 * m + 1) - 1, 2 * n * (2 * m + 1) + 2 * n)
    });
    e.variants.push(variant(
        "",
        |p| {
            let (a, b) = (sp(p.u("n")), sl(2 * p.u("m") + 1));
            Ok(msn(vec![a, b], vec![vec![w1(a), w1(b)], vec![w1(a), trv(b)]]))
        },
        |p| iso(&[Torus(1), Sp(p.i("m")), Sp(p.i("n") - p.i("m") - 1)], 0),
    ));
    e.variants.push(variant(
        "reduced",
        |p| {
            let (a, b) = (sp(p.u("n")), sl(2 * p.u("m") + 1));
            Ok(msp(
                vec![a, b],
                vec![vec![w1(a), w1(b)], vec![w1(a), trv(b)]],
                vec![vec![1, 1]],
            ))
        },
        |p| iso(&[Sp(p.i("m")), Sp(p.i("n") - p.i("m") - 1)], 0),
    ));
    v.push(e);

    // KI I-15: the extra pair of vectors shares one star
    let mut e = entry("KI I-15", Table::KiI);
    e.enumerate = with_stars(
        en2("n", 2, "m", 1, |n, m| n >= m + 1, |n, m| 2 * n * (2 * m + 1) + 2 * n + 2 * (2 * m + 1)),
        &["e0"],
    );
    e.dims = Box::new(|p| {
        let (n, m) = (p.i("n"), p.i("m"));
        (
            4 + n * (2 * n + 1) + (2 * m + 1) * (2 * m + 1) - 1,
            2 * n * (2 * m + 1) + 2 * n + 2 * (2 * m + 1),
        )
    });
    e.variants.push(variant(
        "",
        |p| {
            let (a, b) = (sp(p.u("n")), sl(2 * p.u("m") + 1));
            let d = p.flag("e0");
            Ok(msn(vec![a, b], vec![
                vec![w1(a), w1(b)],
                vec![w1(a), trv(b)],
                vec![trv(a), dual_if(w1(b), d)],
                vec![trv(a), dual_if(w1(b), d)],
            ]))
        },
        |p| iso(&[Sp(p.i("m") - 1), Sp(p.i("n") - p.i("m") - 1)], 0),
    ));
    v.push(e);

    // KI I-16 (+ reduced, the etale form)
    let mut e = fixed("KI I-16", Table::KiI, 21, 20, &[], |_| {
        let (a, b) = (sp(2), sl(3));
        (vec![a, b], vec![
            vec![w1(a), w1(b)],
            vec![w(a, 2), trv(b)],
            vec![trv(a), w1d(b)],
        ])
    }, |_| iso(&[Torus(1)], 0));
    let mut red = variant(
        "reduced",
        |_| {
            let (a, b) = (sp(2), sl(3));
            Ok(msp(
                vec![a, b],
                vec![
                    vec![w1(a), w1(b)],
                    vec![w(a, 2), trv(b)],
                    vec![trv(a), w1d(b)],
                ],
                vec![vec![1, 0, 0], vec![0, 1, 1]],
            ))
        },
        |_| iso(&[], 0),
    );
    red.etale_listed = true;
    e.variants.push(red);
    v.push(e);

    // KI I-17
    v.push(fixed("KI I-17", Table::KiI, 15, 14, &[], |_| {
        let (a, b) = (sp(2), sl(2));
        (vec![a, b], vec![vec![w(a, 2), w1(b)], vec![w1(a), trv(b)]])
    }, |_| iso(&[So(2)], 0)));

    // KI I-18
    let mut e = fixed("KI I-18", Table::KiI, 16, 16, &[], |_| {
        let (a, b) = (sp(2), sl(2));
        (vec![a, b], vec![
            vec![w(a, 2), w1(b)],
            vec![w1(a), trv(b)],
            vec![trv(a), w1(b)],
        ])
    }, |_| iso(&[], 0));
    e.variants[0].etale_listed = true;
    v.push(e);

    // KI I-19
    let mut e = fixed("KI I-19", Table::KiI, 28, 28, &[], |_| {
        let (a, b) = (sp(2), sl(4));
        (vec![a, b], vec![
            vec![w(a, 2), w1(b)],
            vec![w1(a), trv(b)],
            vec![trv(a), w1d(b)],
        ])
    }, |_| iso(&[], 0));
    e.variants[0].etale_listed = true;
    v.push(e);

    // KI I-20
    let mut e = entry("KI I-20", Table::KiI);
    e.enumerate = with_stars(
        en2("n", 3, "m", 2, |n, m| m <= n, |n, m| n * m + m),
        &["e0"],
    );
    e.dims = Box::new(|p| {
        let (n, m) = (p.i("n"), p.i("m"));
        (2 + n * (n - 1) / 2 + m * m - 1, n * m + m)
    });
    e.variants.push(variant(
        "",
        |p| {
            let (a, b) = (so(p.u("n")), sl(p.u("m")));
            Ok(msn(vec![a, b], vec![
                vec![vecr(a), w1(b)],
                vec![trv(a), dual_if(w1(b), p.flag("e0"))],
            ]))
        },
        |p| iso(&[So(p.i("m") - 1), So(p.i("n") - p.i("m"))], 0),
    ));
    v.push(e);

    // KI I-21..24: spin(7) (x) vector families
    v.push(fixed("KI I-21", Table::KiI, 26, 18, &[], |_| {
        let (a, b) = (spin(7), sl(2));
        (vec![a, b], vec![vec![spn(a), w1(b)], vec![trv(a), w1(b)]])
    }, |_| iso(&[Sl(3)], 0)));
    v.push(fixed("KI I-22", Table::KiI, 31, 27, &["e0"], |p| {
        let (a, b) = (spin(7), sl(3));
        (vec![a, b], vec![
            vec![spn(a), w1(b)],
            vec![trv(a), dual_if(w1(b), p.flag("e0"))],
        ])
    }, |_| iso(&[Sl(2), So(2)], 0)));
    v.push(fixed("KI I-23", Table::KiI, 58, 54, &[], |_| {
        let (a, b) = (spin(7), sl(6));
        (vec![a, b], vec![vec![spn(a), w1(b)], vec![trv(a), w1d(b)]])
    }, |_| iso(&[Sl(2), So(2)], 0)));
    v.push(fixed("KI I-24", Table::KiI, 71, 63, &[], |_| {
        let (a, b) = (spin(7), sl(7));
        (vec![a, b], vec![vec![spn(a), w1(b)], vec![trv(a), w1d(b)]])
    }, |_| iso(&[Sl(3)], 0)));

    // KI I-25..27: vector (x) w1 plus a bare spin module
    v.push(fixed("KI I-25", Table::KiI, 26, 22, &[], |_| {
        let (a, b) = (spin(7), sl(2));
        (vec![a, b], vec![vec![vecr(a), w1(b)], vec![spn(a), trv(b)]])
    }, |_| iso(&[Gl(2)], 0)));
    v.push(fixed("KI I-26", Table::KiI, 27, 24, &[], |_| {
        let (a, b) = (spin(7), sl(2));
        (vec![a, b], vec![
            vec![vecr(a), w1(b)],
            vec![spn(a), trv(b)],
            vec![trv(a), w1(b)],
        ])
    }, |_| iso(&[Sl(2)], 0)));
    v.push(fixed("KI I-27", Table::KiI, 59, 56, &[], |_| {
        let (a, b) = (spin(7), sl(6));
        (vec![a, b], vec![
            vec![vecr(a), w1(b)],
            vec![spn(a), trv(b)],
            vec![trv(a), w1d(b)],
        ])
    }, |_| iso(&[Sl(2)], 0)));

    // KI I-28..33: spin(8) families
    v.push(fixed("KI I-28", Table::KiI, 33, 24, &[], |_| {
        let (a, b) = (spin(8), sl(2));
        (vec![a, b], vec![vec![vecr(a), w1(b)], vec![hse(a), trv(b)]])
    }, |_| iso(&[Sl(3), So(2)], 0)));
    v.push(fixed("KI I-29", Table::KiI, 38, 32, &[], |_| {
        let (a, b) = (spin(8), sl(3));
        (vec![a, b], vec![vec![vecr(a), w1(b)], vec![hse(a), trv(b)]])
    }, |_| iso(&[Sl(2), So(3)], 0)));
    v.push(fixed("KI I-30", Table::KiI, 34, 26, &[], |_| {
        let (a, b) = (spin(8), sl(2));
        (vec![a, b], vec![
            vec![vecr(a), w1(b)],
            vec![hse(a), trv(b)],
            vec![trv(a), w1(b)],
        ])
    }, |_| iso(&[Sl(3)], 0)));
    v.push(fixed("KI I-31", Table::KiI, 39, 35, &["e0"], |p| {
        let (a, b) = (spin(8), sl(3));
        (vec![a, b], vec![
            vec![vecr(a), w1(b)],
            vec![hse(a), trv(b)],
            vec![trv(a), dual_if(w1(b), p.flag("e0"))],
        ])
    }, |_| iso(&[Sl(2), So(2)], 0)));
    v.push(fixed("KI I-32", Table::KiI, 66, 62, &[], |_| {
        let (a, b) = (spin(8), sl(6));
        (vec![a, b], vec![
            vec![vecr(a), w1(b)],
            vec![hse(a), trv(b)],
            vec![trv(a), w1d(b)],
        ])
    }, |_| iso(&[Sl(2), So(2)], 0)));
    v.push(fixed("KI I-33", Table::KiI, 79, 71, &[], |_| {
        let (a, b) = (spin(8), sl(7));
        (vec![a, b], vec![
            vec![vecr(a), w1(b)],
            vec![hse(a), trv(b)],
            vec![trv(a), w1d(b)],
        ])
    }, |_| iso(&[Sl(3)], 0)));

    // KI I-34: printed G2 x SO_3; dimensions force G2 x SO_2
    let mut e = fixed("KI I-34", Table::KiI, 50, 35, &[], |_| {
        let (a, b) = (spin(10), sl(2));
        (vec![a, b], vec![vec![hse(a), w1(b)], vec![trv(a), w2a(b)]])
    }, |_| iso(&[G2, So(2)], 0));
    e.flags = vec![Flag::CorrectedTypo];
    e.note = Some("printed G2 x SO_3; dimension arithmetic forces G2 x SO_2");
    v.push(e);

    v.push(fixed("KI I-35", Table::KiI, 50, 36, &[], |_| {
        let (a, b) = (spin(10), sl(2));
        (vec![a, b], vec![vec![hse(a), w1(b)], vec![trv(a), w3a(b)]])
    }, |_| iso(&[G2], 0)));

    // KI I-36: the printed reduced statement repeats the main line verbatim
    let mut e = fixed("KI I-36", Table::KiI, 51, 36, &[], |_| {
        let (a, b) = (spin(10), sl(2));
        (vec![a, b], vec![
            vec![hse(a), w1(b)],
            vec![trv(a), w1(b)],
            vec![trv(a), w1(b)],
        ])
    }, |_| iso(&[Torus(1), G2], 0));
    let mut red = variant(
        "reduced",
        |_| {
            let (a, b) = (spin(10), sl(2));
            Ok(msn(vec![a, b], vec![
                vec![hse(a), w1(b)],
                vec![trv(a), w1(b)],
                vec![trv(a), w1(b)],
            ]))
        },
        |_| iso(&[G2], 0),
    );
    red.flags = vec![Flag::Erratum];
    e.variants.push(red);
    e.note = Some("reduced line printed with the same scalars as the main line; recorded verbatim");
    v.push(e);

    v.push(fixed("KI I-37", Table::KiI, 51, 37, &[], |_| {
        let (a, b) = (spin(10), sl(2));
        (vec![a, b], vec![
            vec![hse(a), w1(b)],
            vec![trv(a), w2a(b)],
            vec![trv(a), w1(b)],
        ])
    }, |_| iso(&[G2], 0)));
    v.push(fixed("KI I-38", Table::KiI, 52, 38, &[], |_| {
        let (a, b) = (spin(10), sl(2));
        (vec![a, b], vec![
            vec![hse(a), w1(b)],
            vec![trv(a), w1(b)],
            vec![trv(a), w1(b)],
            vec![trv(a), w1(b)],
        ])
    }, |_| iso(&[G2], 0)));
    v.push(fixed("KI I-39", Table::KiI, 55, 51, &["e0"], |p| {
        let (a, b) = (spin(10), sl(3));
        (vec![a, b], vec![
            vec![hse(a), w1(b)],
            vec![trv(a), dual_if(w1(b), p.flag("e0"))],
        ])
    }, |_| iso(&[Sl(2), So(2)], 0)));
    v.push(fixed("KI I-40", Table::KiI, 242, 238, &[], |_| {
        let (a, b) = (spin(10), sl(14));
        (vec![a, b], vec![vec![hse(a), w1(b)], vec![trv(a), w1d(b)]])
    }, |_| iso(&[Sl(2), So(2)], 0)));

    // KI I-41 (+ reduced, with its own star)
    let mut e = fixed("KI I-41", Table::KiI, 271, 255, &[], |_| {
        let (a, b) = (spin(10), sl(15));
        (vec![a, b], vec![vec![hse(a), w1(b)], vec![trv(a), w1d(b)]])
    }, |_| iso(&[Torus(1), Sl(4)], 0));
    e.variants.push(variant(
        "reduced",
        |_| {
            let (a, b) = (spin(10), sl(15));
            Ok(msp(
                vec![a, b],
                vec![vec![hse(a), w1(b)], vec![trv(a), w1d(b)]],
                vec![vec![1, 1]],
            ))
        },
        |_| iso(&[Sl(4)], 0),
    ));
    v.push(e);

    v.push(fixed("KI I-42", Table::KiI, 50, 36, &[], |_| {
        let (a, b) = (spin(10), sl(2));
        (vec![a, b], vec![vec![vecr(a), w1(b)], vec![hse(a), trv(b)]])
    }, |_| iso(&[G2], 0)));

    // KI I-43 / I-44: printed with the tensor and bare summands swapped;
    // only the swapped reading is prehomogeneous
    let mut e = fixed("KI I-43", Table::KiI, 55, 46, &[], |_| {
        let (a, b) = (spin(10), sl(3));
        (vec![a, b], vec![vec![vecr(a), w1(b)], vec![hse(a), trv(b)]])
    }, |_| iso(&[Sl(3), So(2)], 0));
    e.flags = vec![Flag::CorrectedTypo];
    e.note = Some("printed (halfspin (x) w1) + (vec (x) 1), whose space exceeds the group; summands read swapped");
    v.push(e);
    let mut e = fixed("KI I-44", Table::KiI, 62, 56, &[], |_| {
        let (a, b) = (spin(10), sl(4));
        (vec![a, b], vec![vec![vecr(a), w1(b)], vec![hse(a), trv(b)]])
    }, |_| iso(&[Sl(2), Sl(2)], 0));
    e.flags = vec![Flag::CorrectedTypo];
    e.note = Some("printed (halfspin (x) w1) + (vec (x) 1), whose space exceeds the group; summands read swapped");
    v.push(e);

    v.push(fixed("KI I-45", Table::KiI, 19, 16, &[], |_| {
        let (a, b) = (g2(), sl(2));
        (vec![a, b], vec![vec![w(a, 2), w1(b)], vec![trv(a), w1(b)]])
    }, |_| iso(&[Sl(2)], 0)));
    v.push(fixed("KI I-46", Table::KiI, 51, 48, &[], |_| {
        let (a, b) = (g2(), sl(6));
        (vec![a, b], vec![vec![w(a, 2), w1(b)], vec![trv(a), w1d(b)]])
    }, |_| iso(&[Sl(2)], 0)));
}

fn ki2(v: &mut Vec<CatalogEntry>) {
    use IsoFactor::*;

    // entries on SL_{2n+1} x SL_2 with a wedge summand
    struct WedgeRow {
        id: &'static str,
        extra: &'static [&'static str], // tokens: "w1", "2w1", "3w1"
        iso: fn(i64) -> IsotropySpec,
        flag: Option<&'static str>,
    }
    let rows = [
        WedgeRow { id: "KI II-1a", extra: &["w1"], iso: |n| iso(&[Torus(2)], 2 * n + 1), flag: Some("printed G+_1; dimension arithmetic forces G+_{2n+1}") },
        WedgeRow { id: "KI II-1b", extra: &["2w1"], iso: |n| iso(&[Torus(1), So(2)], 2 * n), flag: None },
        WedgeRow { id: "KI II-1c", extra: &["3w1"], iso: |n| iso(&[Torus(1)], 2 * n), flag: Some("printed G+_n; dimension arithmetic forces G+_{2n}") },
        WedgeRow { id: "KI II-2a", extra: &["w1", "w1"], iso: |n| iso(&[Torus(2)], 2 * n), flag: None },
        WedgeRow { id: "KI II-2b", extra: &["w1", "2w1"], iso: |n| iso(&[Torus(1)], 2 * n), flag: None },
        WedgeRow { id: "KI II-3", extra: &["w1", "w1", "w1"], iso: |n| iso(&[Torus(1)], 2 * n), flag: None },
    ];
    for row in rows {
        let extra = row.extra;
        let isofn = row.iso;
        let mut e = entry(row.id, Table::KiII);
        let nextra: i64 = extra.iter().map(|t| match *t { "w1" => 2, "2w1" => 3, _ => 4 }).sum();
        e.enumerate = en1("n", 2, move |n| 2 * n * (2 * n + 1) + nextra);
        e.dims = Box::new(move |p| {
            let n = p.i("n");
            (
                1 + extra.len() as i64 + (2 * n + 1) * (2 * n + 1) - 1 + 3,
                2 * n * (2 * n + 1) + nextra,
            )
        });
        e.variants.push(variant(
            "",
            move |p| {
                let (a, b) = (sl(2 * p.u("n") + 1), sl(2));
                let mut s = vec![vec![w(a, 2), w1(b)]];
                for t in extra {
                    let r = match *t {
                        "w1" => w1(b),
                        "2w1" => w2a(b),
                        _ => w3a(b),
                    };
                    s.push(vec![trv(a), r]);
                }
                Ok(msn(vec![a, b], s))
            },
            move |p| isofn(p.i("n")),
        ));
        if let Some(n) = row.flag {
            e.flags = vec![Flag::CorrectedTypo];
            e.note = Some(n);
        }
        v.push(e);
    }

    // fixed small rows on SL_a x SL_2
    struct FixedRow {
        id: &'static str,
        a: usize,
        b: usize,
        summands: &'static [(&'static str, &'static str)],
        stars: &'static [&'static str],
        group: i64,
        space: i64,
        iso: IsotropySpec,
        flag: Option<&'static str>,
    }
    fn tok(g: SimpleGroupId, t: &str, p: &Params, star: Option<&str>) -> RepSpec {
        let base = match t {
            "w1" => w1(g),
            "w1*" => w1d(g),
            "w2" => w(g, 2),
            "2w1" => w2a(g),
            "1" => trv(g),
            _ => panic!("bad token {t}"),
        };
        match star {
            Some(s) => dual_if(base, p.flag(s)),
            None => base,
        }
    }
    let fixed_rows = [
        FixedRow { id: "KI II-4", a: 4, b: 2, summands: &[("w2", "w1"), ("w1", "1")], stars: &[], group: 20, space: 16, iso: iso(&[Torus(1), So(2)], 2), flag: None },
        FixedRow { id: "KI II-5", a: 4, b: 2, summands: &[("w2", "w1"), ("w1", "1"), ("1", "w1")], stars: &[], group: 21, space: 18, iso: iso(&[Torus(1)], 2), flag: None },
        FixedRow { id: "KI II-6", a: 4, b: 2, summands: &[("w2", "w1"), ("w1", "1"), ("1", "w1*")], stars: &[], group: 21, space: 18, iso: iso(&[Torus(1)], 2), flag: None },
        FixedRow { id: "KI II-7a", a: 5, b: 2, summands: &[("w2", "w1"), ("w1", "1")], stars: &[], group: 29, space: 25, iso: iso(&[Torus(1), So(2)], 2), flag: None },
        FixedRow { id: "KI II-7b", a: 5, b: 2, summands: &[("w2", "w1"), ("w1*", "1")], stars: &[], group: 29, space: 25, iso: iso(&[Torus(2)], 2), flag: None },
        FixedRow { id: "KI II-8a", a: 5, b: 2, summands: &[("w2", "w1"), ("w1", "1"), ("1", "w1")], stars: &[], group: 30, space: 27, iso: iso(&[Torus(1)], 2), flag: None },
        FixedRow { id: "KI II-8b", a: 5, b: 2, summands: &[("w2", "w1"), ("w1*", "1"), ("1", "w1")], stars: &[], group: 30, space: 27, iso: iso(&[Torus(1)], 2), flag: Some("printed GL_1^2 Un_2 (dim 4); dimension arithmetic forces total 3") },
        FixedRow { id: "KI II-9", a: 5, b: 9, summands: &[("w2", "w1"), ("w1", "1"), ("1", "w1*")], stars: &["e0"], group: 107, space: 104, iso: iso(&[Torus(1)], 2), flag: None },
        FixedRow { id: "KI II-10", a: 5, b: 2, summands: &[("w2", "w1"), ("w1*", "1"), ("1", "2w1")], stars: &[], group: 30, space: 28, iso: iso(&[], 2), flag: Some("printed GL_1 Un_2 (dim 3); dimension arithmetic forces total 2") },
        FixedRow { id: "KI II-11", a: 5, b: 2, summands: &[("w2", "w1"), ("w1*", "1"), ("1", "w1"), ("1", "w1")], stars: &[], group: 31, space: 29, iso: iso(&[], 2), flag: Some("printed GL_1 Un_2 (dim 3); dimension arithmetic forces total 2") },
        FixedRow { id: "KI II-12", a: 6, b: 2, summands: &[("w2", "w1"), ("w1", "1")], stars: &["e0"], group: 40, space: 36, iso: iso(&[Torus(1)], 3), flag: None },
        FixedRow { id: "KI II-13a", a: 7, b: 2, summands: &[("w2", "w1"), ("w1", "1")], stars: &[], group: 53, space: 49, iso: iso(&[Torus(1)], 3), flag: None },
        FixedRow { id: "KI II-13b", a: 7, b: 2, summands: &[("w2", "w1"), ("w1*", "1")], stars: &[], group: 53, space: 49, iso: iso(&[Torus(1), So(2)], 2), flag: None },
        FixedRow { id: "KI II-14", a: 7, b: 2, summands: &[("w2", "w1"), ("w1*", "1"), ("1", "w1")], stars: &[], group: 54, space: 51, iso: iso(&[Torus(1)], 2), flag: None },
        FixedRow { id: "KI II-15", a: 9, b: 2, summands: &[("w2", "w1"), ("w1*", "1")], stars: &[], group: 85, space: 81, iso: iso(&[Torus(1)], 3), flag: None },
    ];
    for row in fixed_rows {
        let (a, b, summands, stars) = (row.a, row.b, row.summands, row.stars);
        let mut e = entry(row.id, Table::KiII);
        e.enumerate = if stars.is_empty() {
            en0(row.space)
        } else {
            with_stars(en0(row.space), stars)
        };
        let (gd, sd) = (row.group, row.space);
        e.dims = Box::new(move |_| (gd, sd));
        let isov = row.iso.clone();
        e.variants.push(variant(
            "",
            move |p| {
                let (ga, gb) = (sl(a), sl(b));
                let s: Vec<Vec<RepSpec>> = summands
                    .iter()
                    .enumerate()
                    .map(|(i, (t1, t2))| {
                        // the star, when present, rides on the second summand
                        let star1 = if stars.len() == 1 && i == 1 { Some(stars[0]) } else { None };
                        vec![tok(ga, t1, p, star1), tok(gb, t2, p, None)]
                    })
                    .collect();
                Ok(msn(vec![ga, gb], s))
            },
            move |_| isov.clone(),
        ));
        if let Some(n) = row.flag {
            e.flags = vec![Flag::CorrectedTypo];
            e.note = Some(n);
        }
        v.push(e);
    }

    // Sp_n x SL_{2m} / SL_{2m+1} families; the unipotent subscripts marked
    // in notes are corrected by dimension arithmetic
    struct SpRow {
        id: &'static str,
        odd: bool, // second factor SL_{2m+1} instead of SL_{2m}
        summands: &'static [(&'static str, &'static str)],
        stars: &'static [usize], // indices of summands whose b-token is starred
        nmin: fn(i64) -> i64,    // minimal n for given m
        mmin: i64,
        iso: fn(i64, i64) -> IsotropySpec,
        flag: Option<&'static str>,
    }
    let sp_rows = [
        SpRow { id: "KI II-16a", odd: false, summands: &[("w1", "w1"), ("w1", "1")], stars: &[], nmin: |m| m + 1, mmin: 1,
            iso: |n, m| iso(&[Torus(1), Sp(m - 1), Sp(n - m - 1)], 2 * n - 2), flag: None },
        SpRow { id: "KI II-16b", odd: false, summands: &[("w1", "w1"), ("1", "w1")], stars: &[1], nmin: |m| m + 1, mmin: 1,
            iso: |n, m| iso(&[Torus(1), Sp(m - 1), Sp(n - m - 1)], 4 * n - 2 * m - 2),
            flag: Some("printed Un_{2n-2}; dimension arithmetic forces Un_{4n-2m-2}") },
        SpRow { id: "KI II-17", odd: false, summands: &[("w1", "w1"), ("w1", "1"), ("1", "w1")], stars: &[2], nmin: |m| m + 1, mmin: 1,
            iso: |n, m| iso(&[Torus(1), Sp(m - 1), Sp(n - m - 1)], 2 * n - 2 * m - 1),
            flag: Some("printed Un_{2n-2m-2}; dimension arithmetic forces Un_{2n-2m-1}") },
        SpRow { id: "KI II-18a", odd: false, summands: &[("w1", "w1"), ("w1", "1"), ("1", "w1"), ("1", "w1")], stars: &[2, 3], nmin: |m| m + 1, mmin: 2,
            iso: |n, m| iso(&[Sp(m - 2), Sp(n - m - 1)], 2 * n - 4), flag: None },
        SpRow { id: "KI II-18c", odd: false, summands: &[("w1", "w1"), ("1", "w1"), ("1", "w1"), ("1", "w1")], stars: &[1, 2, 3], nmin: |m| m + 1, mmin: 2,
            iso: |n, m| iso(&[Sp(m - 2), Sp(n - m - 1)], 4 * n - 2 * m - 4),
            flag: Some("printed Un_{2n-4}; dimension arithmetic forces Un_{4n-2m-4}") },
        SpRow { id: "KI II-20a", odd: true, summands: &[("w1", "w1"), ("1", "w1")], stars: &[], nmin: |m| m + 1, mmin: 1,
            iso: |n, m| iso(&[Torus(1), Sp(m), Sp(n - m - 1)], 2 * n - 2 * m - 1), flag: None },
        SpRow { id: "KI II-20b", odd: true, summands: &[("w1", "w1"), ("1", "w1*")], stars: &[], nmin: |m| m + 1, mmin: 1,
            iso: |n, m| iso(&[Torus(2), Sp(m), Sp(n - m - 1)], 2 * n - 2 * m - 2),
            flag: Some("printed Un_{2n-2m-3}; dimension arithmetic forces Un_{2n-2m-2}") },
        SpRow { id: "KI II-20d", odd: true, summands: &[("w1", "w1"), ("1", "w2")], stars: &[], nmin: |m| m + 2, mmin: 1,
            iso: |n, m| iso(&[Torus(1), SoPow(2, m), Sp(n - m - 1)], 2 * n - m),
            flag: Some("printed Un_{2n-2m-1}; dimension arithmetic forces Un_{2n-m}") },
        SpRow { id: "KI II-21a", odd: true, summands: &[("w1", "w1"), ("w1", "1"), ("w1", "1")], stars: &[], nmin: |m| m + 2, mmin: 1,
            iso: |n, m| iso(&[Sp(m - 1), Sp(n - m - 2)], 2 * n - 4), flag: None },
        SpRow { id: "KI II-21b", odd: true, summands: &[("w1", "w1"), ("w1", "1"), ("1", "w1")], stars: &[2], nmin: |m| m + 2, mmin: 1,
            iso: |n, m| iso(&[Sp(m - 1), Sp(n - m - 2)], 4 * n - 2 * m - 5),
            flag: Some("printed Un_{2n-4}; dimension arithmetic forces Un_{4n-2m-5}") },
        SpRow { id: "KI II-21c", odd: true, summands: &[("w1", "w1"), ("1", "w1"), ("1", "w1")], stars: &[1, 2], nmin: |m| m + 2, mmin: 1,
            iso: |n, m| iso(&[Sp(m - 1), Sp(n - m - 2)], 6 * n - 4 * m - 6),
            flag: Some("printed Un_{2n-4}; dimension arithmetic forces Un_{6n-4m-6}") },
        SpRow { id: "KI II-22a", odd: true, summands: &[("w1", "w1"), ("1", "w1"), ("1", "w1"), ("1", "w1")], stars: &[9], nmin: |m| m + 1, mmin: 1,
            iso: |n, m| iso(&[Sp(m - 1), Sp(n - m - 1)], 2 * n - 2 * m - 1), flag: None },
        SpRow { id: "KI II-22b", odd: true, summands: &[("w1", "w1"), ("1", "w1*"), ("1", "w1*"), ("1", "w1*")], stars: &[], nmin: |m| m + 1, mmin: 2,
            iso: |n, m| iso(&[Sp(m - 2), Sp(n - m - 1)], 2 * n + 2 * m - 6),
            flag: Some("printed Un_{2n+2m-7} for n > m >= 1; dimension arithmetic forces Un_{2n+2m-6} and m >= 2") },
    ];
    for row in sp_rows {
        let SpRow { id, odd, summands, stars, nmin, mmin, iso: isofn, flag } = row;
        let bdim = move |m: i64| if odd { 2 * m + 1 } else { 2 * m };
        let space = move |n: i64, m: i64| -> i64 {
            summands
                .iter()
                .enumerate()
                .map(|(_i, (t1, t2))| {
                    let d1 = match *t1 { "w1" => 2 * n, "1" => 1, _ => unreachable!() };
                    let d2 = match *t2 {
                        "w1" | "w1*" => bdim(m),
                        "w2" => bdim(m) * (bdim(m) - 1) / 2,
                        "1" => 1,
                        _ => unreachable!(),
                    };
                    d1 * d2
                })
                .sum()
        };
        let mut e = entry(id, Table::KiII);
        let base_en = en2("n", 2, "m", mmin, move |n, m| n >= nmin(m), space);
        // the shared-star pair in 22a rides one flag; per-summand stars otherwise
        e.enumerate = match id {
            "KI II-22a" => with_stars(base_en, &["e0"]),
            _ if !stars.is_empty() => {
                let names: &'static [&'static str] = match stars.len() {
                    1 => &["e0"],
                    2 => &["e0", "e1"],
                    _ => &["e0", "e1", "e2"],
                };
                with_stars(base_en, names)
            }
            _ => base_en,
        };
        e.dims = Box::new(move |p| {
            let (n, m) = (p.i("n"), p.i("m"));
            let g = summands.len() as i64 + n * (2 * n + 1) + bdim(m) * bdim(m) - 1;
            (g, space(n, m))
        });
        e.variants.push(variant(
            "",
            move |p| {
                let (n, m) = (p.u("n"), p.u("m"));
                let (ga, gb) = (sp(n), sl(if odd { 2 * m + 1 } else { 2 * m }));
                let s: Vec<Vec<RepSpec>> = summands
                    .iter()
                    .enumerate()
                    .map(|(i, (t1, t2))| {
                        let r1 = match *t1 { "w1" => w1(ga), _ => trv(ga) };
                        let mut r2 = match *t2 {
                            "w1" => w1(gb),
                            "w1*" => w1d(gb),
                            "w2" => w(gb, 2),
                            _ => trv(gb),
                        };
                        if id == "KI II-22a" && i >= 2 {
                            r2 = dual_if(r2, p.flag("e0"));
                        } else if let Some(k) = stars.iter().position(|&x| x == i) {
                            r2 = dual_if(r2, p.flag(["e0", "e1", "e2"][k]));
                        }
                        vec![r1, r2]
                    })
                    .collect();
                Ok(msn(vec![ga, gb], s))
            },
            move |p| isofn(p.i("n"), p.i("m")),
        ));
        if let Some(n) = flag {
            e.flags = vec![Flag::CorrectedTypo];
            e.note = Some(n);
        }
        v.push(e);
    }

    // KI II-18b: the m = 1 special case with its own unipotent dimension
    let mut e = entry("KI II-18b", Table::KiII);
    e.enumerate = en1("n", 2, |n| 6 * n + 4);
    e.dims = Box::new(|p| {
        let n = p.i("n");
        (4 + n * (2 * n + 1) + 3, 6 * n + 4)
    });
    e.variants.push(variant(
        "",
        |p| {
            let (a, b) = (sp(p.u("n")), sl(2));
            Ok(msn(vec![a, b], vec![
                vec![w1(a), w1(b)],
                vec![w1(a), trv(b)],
                vec![trv(a), w1(b)],
                vec![trv(a), w1(b)],
            ]))
        },
        |p| iso(&[Sp(p.i("n") - 2)], 2 * p.i("n") - 3),
    ));
    v.push(e);

    // KI II-19
    let mut e = entry("KI II-19", Table::KiII);
    e.enumerate = en1("n", 2, |n| 6 * n + 3);
    e.dims = Box::new(|p| {
        let n = p.i("n");
        (3 + n * (2 * n + 1) + 3, 6 * n + 3)
    });
    e.variants.push(variant(
        "",
        |p| {
            let (a, b) = (sp(p.u("n")), sl(2));
            Ok(msn(vec![a, b], vec![
                vec![w1(a), w1(b)],
                vec![w1(a), trv(b)],
                vec![trv(a), w2a(b)],
            ]))
        },
        |p| iso(&[Sp(p.i("n") - 2)], 2 * p.i("n") - 3),
    ));
    v.push(e);

    // KI II-20c: boundary case n = m + 1
    let mut e = entry("KI II-20c", Table::KiII);
    e.enumerate = en1("m", 1, |m| 2 * (m + 1) * (2 * m + 1) + 2 * m + 1);
    e.dims = Box::new(|p| {
        let m = p.i("m");
        (
            2 + (m + 1) * (2 * m + 3) + (2 * m + 1) * (2 * m + 1) - 1,
            2 * (m + 1) * (2 * m + 1) + 2 * m + 1,
        )
    });
    e.variants.push(variant(
        "",
        |p| {
            let m = p.u("m");
            let (a, b) = (sp(m + 1), sl(2 * m + 1));
            Ok(msn(vec![a, b], vec![vec![w1(a), w1(b)], vec![trv(a), w1(b)]]))
        },
        |p| iso(&[Torus(2), Sp(p.i("m") - 1)], 4 * p.i("m") - 1),
    ));
    v.push(e);

    // KI II-22c: m = 1 special case
    let mut e = entry("KI II-22c", Table::KiII);
    e.enumerate = en1("n", 2, |n| 6 * n + 9);
    e.dims = Box::new(|p| {
        let n = p.i("n");
        (4 + n * (2 * n + 1) + 8, 6 * n + 9)
    });
    e.variants.push(variant(
        "",
        |p| {
            let (a, b) = (sp(p.u("n")), sl(3));
            Ok(msn(vec![a, b], vec![
                vec![w1(a), w1(b)],
                vec![trv(a), w1d(b)],
                vec![trv(a), w1d(b)],
                vec![trv(a), w1d(b)],
            ]))
        },
        |p| iso(&[Sp(p.i("n") - 2)], 2 * p.i("n") - 3),
    ));
    v.push(e);

    // KI II-23
    let mut e = entry("KI II-23", Table::KiII);
    e.enumerate = en1("n", 2, |n| 6 * n + 6);
    e.dims = Box::new(|p| {
        let n = p.i("n");
        (2 + n * (2 * n + 1) + 8, 6 * n + 6)
    });
    e.variants.push(variant(
        "",
        |p| {
            let (a, b) = (sp(p.u("n")), sl(3));
            Ok(msn(vec![a, b], vec![vec![w1(a), w1(b)], vec![trv(a), w2a(b)]]))
        },
        |p| iso(&[So(2), Sp(p.i("n") - 2)], 2 * p.i("n") - 3),
    ));
    v.push(e);

    // KI II-24
    let mut e = entry("KI II-24", Table::KiII);
    e.enumerate = en1("n", 3, |n| 10 * n + 15);
    e.dims = Box::new(|p| {
        let n = p.i("n");
        (3 + n * (2 * n + 1) + 24, 10 * n + 15)
    });
    e.variants.push(variant(
        "",
        |p| {
            let (a, b) = (sp(p.u("n")), sl(5));
            Ok(msn(vec![a, b], vec![
                vec![w1(a), w1(b)],
                vec![trv(a), w(b, 2)],
                vec![trv(a), w1d(b)],
            ]))
        },
        |p| iso(&[Torus(1), Sp(p.i("n") - 3)], 2 * p.i("n") - 4),
    ));
    v.push(e);

    // KI II-25
    let mut e = entry("KI II-25", Table::KiII);
    e.enumerate = en1("n", 2, |n| 6 * n + 2);
    e.dims = Box::new(|p| {
        let n = p.i("n");
        (2 + n * (2 * n + 1) + 3, 6 * n + 2)
    });
    e.variants.push(variant(
        "",
        |p| {
            let (a, b) = (sp(p.u("n")), sl(2));
            Ok(msn(vec![a, b], vec![vec![w1(a), w2a(b)], vec![trv(a), w1(b)]]))
        },
        |p| iso(&[Sp(p.i("n") - 2)], 2 * p.i("n") - 3),
    ));
    v.push(e);

    // KI II-26
    let mut e = entry("KI II-26", Table::KiII);
    e.enumerate = en0(34);
    e.dims = Box::new(|_| (50, 34));
    e.variants.push(variant(
        "",
        |_| {
            let (a, b) = (spin(10), sl(2));
            Ok(msn(vec![a, b], vec![vec![hse(a), w1(b)], vec![trv(a), w1(b)]]))
        },
        |_| iso(&[Torus(1), G2], 1),
    ));
    v.push(e);
}
