//! Simple-group rows with scalar multiplications: the regular list and the
//! non-regular list, including every printed invariant and the printed
//! reduced-scalar statements.

use super::dsl::*;
use super::sk::{spin7_form, spin8_even_form, spin8_odd_form};
use super::*;
use crate::clifford;
use crate::invariants::EvalKind;
use crate::rep::{sl, sp, spin};

fn cited(name: &str) -> InvariantMeta {
    InvariantMeta {
        name: name.to_string(),
        degree: None,
        form: None,
    }
}

pub(crate) fn push_entries(v: &mut Vec<CatalogEntry>) {
    ks1(v);
    ks2(v);
}

fn ks1(v: &mut Vec<CatalogEntry>) {
    // Ks I-1: w1 + w1*, n >= 3
    let mut e = entry("Ks I-1", Table::KsI);
    e.enumerate = en1("n", 3, |n| 2 * n);
    e.dims = Box::new(|p| (2 + p.i("n") * p.i("n") - 1, 2 * p.i("n")));
    e.variants.push(variant(
        "",
        |p| {
            let g = sl(p.u("n"));
            Ok(ms1(g, vec![w1(g), w1d(g)]))
        },
        |p| iso(&[IsoFactor::Torus(1), IsoFactor::Sl(p.i("n") - 1)], 0),
    ));
    e.variants.push(variant(
        "reduced",
        |p| {
            let g = sl(p.u("n"));
            Ok(msp(vec![g], vec![vec![w1(g)], vec![w1d(g)]], vec![vec![1, 0]]))
        },
        |p| iso(&[IsoFactor::Sl(p.i("n") - 1)], 0),
    ));
    e.invariants = Box::new(|p| {
        let n = p.u("n");
        vec![InvariantMeta::printed(InvariantForm::new(
            "f1",
            2,
            EvalKind::Pairing { off_x: 0, off_y: n, n },
        ))]
    });
    v.push(e);

    // Ks I-2: n copies of the vector, n >= 2
    let mut e = entry("Ks I-2", Table::KsI);
    e.enumerate = en1("n", 2, |n| n * n);
    e.dims = Box::new(|p| (p.i("n") + p.i("n") * p.i("n") - 1, p.i("n") * p.i("n")));
    e.variants.push(variant(
        "",
        |p| {
            let g = sl(p.u("n"));
            Ok(ms1(g, vec![w1(g); p.u("n")]))
        },
        |p| iso(&[IsoFactor::Torus(p.i("n") - 1)], 0),
    ));
    let mut red = variant(
        "reduced",
        |p| {
            let g = sl(p.u("n"));
            let n = p.u("n");
            Ok(msp(
                vec![g],
                (0..n).map(|_| vec![w1(g)]).collect(),
                vec![vec![1; n]],
            ))
        },
        |_| iso(&[], 0),
    );
    red.etale_listed = true;
    e.variants.push(red);
    e.invariants = Box::new(|p| {
        let n = p.u("n");
        vec![InvariantMeta::printed(InvariantForm::new(
            "f1",
            n,
            EvalKind::DetColumns {
                n,
                col_offsets: (0..n).map(|i| i * n).collect(),
            },
        ))]
    });
    v.push(e);

    // Ks I-3: n+1 copies of the vector
    let mut e = entry("Ks I-3", Table::KsI);
    e.enumerate = en1("n", 2, |n| n * (n + 1));
    e.dims = Box::new(|p| {
        let n = p.i("n");
        (n + 1 + n * n - 1, n * (n + 1))
    });
    let mut var0 = variant(
        "",
        |p| {
            let g = sl(p.u("n"));
            Ok(ms1(g, vec![w1(g); p.u("n") + 1]))
        },
        |_| iso(&[], 0),
    );
    var0.etale_listed = true;
    e.variants.push(var0);
    e.invariants = Box::new(|p| {
        let n = p.u("n");
        (0..n + 1)
            .map(|omit| {
                let cols: Vec<usize> = (0..n + 1).filter(|i| *i != omit).map(|i| i * n).collect();
                InvariantMeta::printed(InvariantForm::new(
                    &format!("f{}", omit + 1),
                    n,
                    EvalKind::DetColumns { n, col_offsets: cols },
                ))
            })
            .collect()
    });
    v.push(e);

    // Ks I-4: n vectors + one dual, n >= 3
    let mut e = entry("Ks I-4", Table::KsI);
    e.enumerate = en1("n", 3, |n| n * (n + 1));
    e.dims = Box::new(|p| {
        let n = p.i("n");
        (n + 1 + n * n - 1, n * (n + 1))
    });
    let mut var0 = variant(
        "",
        |p| {
            let g = sl(p.u("n"));
            let mut s = vec![w1(g); p.u("n")];
            s.push(w1d(g));
            Ok(ms1(g, s))
        },
        |_| iso(&[], 0),
    );
    var0.etale_listed = true;
    e.variants.push(var0);
    e.invariants = Box::new(|p| {
        let n = p.u("n");
        let mut out: Vec<InvariantMeta> = (0..n)
            .map(|i| {
                InvariantMeta::printed(InvariantForm::new(
                    &format!("f{}", i + 1),
                    2,
                    EvalKind::Pairing { off_x: i * n, off_y: n * n, n },
                ))
            })
            .collect();
        out.push(InvariantMeta::printed(InvariantForm::new(
            &format!("f{}", n + 1),
            n,
            EvalKind::DetColumns {
                n,
                col_offsets: (0..n).map(|i| i * n).collect(),
            },
        )));
        out
    });
    v.push(e);

    // Ks I-5/6/7: wedge^2 plus two (dual) vectors on SL_{2n}
    for (id, nstart, dual1, dual2) in [
        ("Ks I-5", 2, false, false),
        ("Ks I-6", 2, false, true),
        ("Ks I-7", 3, true, true),
    ] {
        let mut e = entry(id, Table::KsI);
        e.enumerate = en1("n", nstart, |n| n * (2 * n - 1) + 4 * n);
        e.dims = Box::new(|p| {
            let n = p.i("n");
            (3 + 4 * n * n - 1, n * (2 * n - 1) + 4 * n)
        });
        e.variants.push(variant(
            "",
            move |p| {
                let g = sl(2 * p.u("n"));
                Ok(ms1(g, vec![w(g, 2), dual_if(w1(g), dual1), dual_if(w1(g), dual2)]))
            },
            |p| iso(&[IsoFactor::Torus(1), IsoFactor::Sp(p.i("n") - 1)], 0),
        ));
        e.variants.push(variant(
            "reduced",
            move |p| {
                let g = sl(2 * p.u("n"));
                Ok(msp(
                    vec![g],
                    vec![
                        vec![w(g, 2)],
                        vec![dual_if(w1(g), dual1)],
                        vec![dual_if(w1(g), dual2)],
                    ],
                    vec![vec![1, 0, 0], vec![0, 1, 1]],
                ))
            },
            |p| iso(&[IsoFactor::Sp(p.i("n") - 1)], 0),
        ));
        e.invariants = Box::new(move |p| {
            let n = p.u("n");
            let d = 2 * n;
            let o1 = d * (d - 1) / 2;
            let o2 = o1 + d;
            let f2 = match (dual1, dual2) {
                (false, false) => InvariantForm::new(
                    "f2",
                    d + 1,
                    EvalKind::AdjBilinearWedge { n: d, off_a: 0, off_x: o1, off_y: o2 },
                ),
                (false, true) => InvariantForm::new(
                    "f2",
                    2,
                    EvalKind::Pairing { off_x: o1, off_y: o2, n: d },
                ),
                (true, true) => InvariantForm::new(
                    "f2",
                    3,
                    EvalKind::BilinearWedge { n: d, off_a: 0, off_x: o1, off_y: o2 },
                ),
                _ => unreachable!(),
            };
            vec![
                InvariantMeta::printed(InvariantForm::new("f1", n, EvalKind::WedgePf { n: d })),
                InvariantMeta::printed(f2),
            ]
        });
        v.push(e);
    }

    // Ks I-8: wedge^2 + vector on SL_{2n+1}
    let mut e = entry("Ks I-8", Table::KsI);
    e.enumerate = en1("n", 2, |n| n * (2 * n + 1) + 2 * n + 1);
    e.dims = Box::new(|p| {
        let n = p.i("n");
        (2 + (2 * n + 1) * (2 * n + 1) - 1, n * (2 * n + 1) + 2 * n + 1)
    });
    e.variants.push(variant(
        "",
        |p| {
            let g = sl(2 * p.u("n") + 1);
            Ok(ms1(g, vec![w(g, 2), w1(g)]))
        },
        |p| iso(&[IsoFactor::Torus(1), IsoFactor::Sp(p.i("n"))], 0),
    ));
    e.variants.push(variant(
        "reduced",
        |p| {
            let g = sl(2 * p.u("n") + 1);
            Ok(msp(
                vec![g],
                vec![vec![w(g, 2)], vec![w1(g)]],
                vec![vec![1, 1]],
            ))
        },
        |p| iso(&[IsoFactor::Sp(p.i("n"))], 0),
    ));
    e.invariants = Box::new(|_| vec![cited("f1")]);
    e.note = Some("the reduced line prints the group as Sp_{2n+1}; it is SL_{2n+1}");
    v.push(e);

    // Ks I-9: wedge^2 + three vectors
    let mut e = entry("Ks I-9", Table::KsI);
    e.enumerate = en1("n", 2, |n| n * (2 * n + 1) + 3 * (2 * n + 1));
    e.dims = Box::new(|p| {
        let n = p.i("n");
        (4 + (2 * n + 1) * (2 * n + 1) - 1, (n + 3) * (2 * n + 1))
    });
    e.variants.push(variant(
        "",
        |p| {
            let g = sl(2 * p.u("n") + 1);
            Ok(ms1(g, vec![w(g, 2), w1(g), w1(g), w1(g)]))
        },
        |p| iso(&[IsoFactor::Sp(p.i("n") - 1)], 0),
    ));
    e.invariants = Box::new(|_| vec![cited("f")]);
    v.push(e);

    // Ks I-10: wedge^2 + vector + two duals, with the bordered Pfaffian
    let mut e = entry("Ks I-10", Table::KsI);
    e.enumerate = en1("n", 2, |n| n * (2 * n + 1) + 3 * (2 * n + 1));
    e.dims = Box::new(|p| {
        let n = p.i("n");
        (4 + (2 * n + 1) * (2 * n + 1) - 1, (n + 3) * (2 * n + 1))
    });
    e.variants.push(variant(
        "",
        |p| {
            let g = sl(2 * p.u("n") + 1);
            Ok(ms1(g, vec![w(g, 2), w1(g), w1d(g), w1d(g)]))
        },
        |p| iso(&[IsoFactor::Sp(p.i("n") - 1)], 0),
    ));
    e.invariants = Box::new(|p| {
        let n = p.u("n");
        let d = 2 * n + 1;
        let o1 = d * (d - 1) / 2;
        let (o2, o3) = (o1 + d, o1 + 2 * d);
        vec![
            InvariantMeta::printed(InvariantForm::new(
                "f1",
                n + 1,
                EvalKind::BorderedPfWedge { n: d, off_a: 0, off_x: o1 },
            )),
            InvariantMeta::printed(InvariantForm::new(
                "f2",
                2,
                EvalKind::Pairing { off_x: o1, off_y: o2, n: d },
            )),
            InvariantMeta::printed(InvariantForm::new(
                "f3",
                2,
                EvalKind::Pairing { off_x: o1, off_y: o3, n: d },
            )),
            InvariantMeta::printed(InvariantForm::new(
                "f4",
                3,
                EvalKind::BilinearWedge { n: d, off_a: 0, off_x: o2, off_y: o3 },
            )),
        ]
    });
    v.push(e);

    // Ks I-11 / I-12: Sym^2 plus a vector or a dual vector
    for (id, nstart, dual) in [("Ks I-11", 2, false), ("Ks I-12", 3, true)] {
        let mut e = entry(id, Table::KsI);
        e.enumerate = en1("n", nstart, |n| n * (n + 1) / 2 + n);
        e.dims = Box::new(|p| {
            let n = p.i("n");
            (2 + n * n - 1, n * (n + 1) / 2 + n)
        });
        let mut var0 = variant(
            "",
            move |p| {
                let g = sl(p.u("n"));
                Ok(ms1(g, vec![w2a(g), dual_if(w1(g), dual)]))
            },
            |p| iso(&[IsoFactor::So(p.i("n") - 1)], 0),
        );
        // Ks I-11 at n = 2 appears in the etale lists
        var0.etale_listed = id == "Ks I-11";
        e.variants.push(var0);
        e.invariants = Box::new(move |p| {
            let n = p.u("n");
            let o1 = n * (n + 1) / 2;
            let f2 = if dual {
                InvariantForm::new(
                    "f2",
                    3,
                    EvalKind::BilinearSym { n, off_a: 0, off_x: o1, off_y: o1 },
                )
            } else {
                InvariantForm::new(
                    "f2",
                    n + 1,
                    EvalKind::AdjBilinearSym { n, off_a: 0, off_x: o1, off_y: o1 },
                )
            };
            vec![
                InvariantMeta::printed(InvariantForm::new("f1", n, EvalKind::DetSym { n, off_a: 0 })),
                InvariantMeta::printed(f2),
            ]
        });
        v.push(e);
    }

    // Ks I-13 / I-14: wedge^3 of SL_7 plus a vector / dual vector
    for (id, dual) in [("Ks I-13", false), ("Ks I-14", true)] {
        let mut e = entry(id, Table::KsI);
        e.enumerate = en0(42);
        e.dims = Box::new(|_| (50, 42));
        e.variants.push(variant(
            "",
            move |_| {
                let g = sl(7);
                Ok(ms1(g, vec![w(g, 3), dual_if(w1(g), dual)]))
            },
            |_| iso(&[IsoFactor::Sl(3)], 0),
        ));
        e.invariants = Box::new(|_| vec![cited("f")]);
        v.push(e);
    }

    // Ks I-15: both half-spin modules of Spin_8
    let mut e = entry("Ks I-15", Table::KsI);
    e.enumerate = en0(16);
    e.dims = Box::new(|_| (30, 16));
    e.variants.push(variant(
        "",
        |_| {
            let g = spin(8);
            Ok(ms1(g, vec![hse(g), hso(g)]))
        },
        |_| iso(&[IsoFactor::G2], 0),
    ));
    e.invariants = Box::new(|_| {
        vec![
            InvariantMeta::printed(InvariantForm::new(
                "f1",
                2,
                EvalKind::QuadForm { q: spin8_even_form(), off: 0 },
            )),
            InvariantMeta::printed(InvariantForm::new(
                "f2",
                2,
                EvalKind::QuadForm { q: spin8_odd_form(), off: 8 },
            )),
        ]
    });
    v.push(e);

    // Ks I-16: vector + spin module of Spin_7
    let mut e = entry("Ks I-16", Table::KsI);
    e.enumerate = en0(15);
    e.dims = Box::new(|_| (23, 15));
    e.variants.push(variant(
        "",
        |_| {
            let g = spin(7);
            Ok(ms1(g, vec![vecr(g), spn(g)]))
        },
        |_| iso(&[IsoFactor::Sl(3)], 0),
    ));
    e.invariants = Box::new(|_| {
        vec![
            InvariantMeta::printed(InvariantForm::new(
                "f1",
                2,
                EvalKind::QuadForm { q: clifford::split_form(7), off: 0 },
            )),
            InvariantMeta::printed(InvariantForm::new(
                "f2",
                2,
                EvalKind::QuadForm { q: spin7_form(), off: 7 },
            )),
        ]
    });
    v.push(e);

    // Ks I-17: two copies of one half-spin module of Spin_10
    let mut e = entry("Ks I-17", Table::KsI);
    e.enumerate = en0(32);
    e.dims = Box::new(|_| (47, 32));
    e.variants.push(variant(
        "",
        |_| {
            let g = spin(10);
            Ok(ms1(g, vec![hse(g), hse(g)]))
        },
        |_| iso(&[IsoFactor::Torus(1), IsoFactor::G2], 0),
    ));
    e.variants.push(variant(
        "reduced",
        |_| {
            let g = spin(10);
            Ok(msp(
                vec![g],
                vec![vec![hse(g)], vec![hse(g)]],
                vec![vec![1, 1]],
            ))
        },
        |_| iso(&[IsoFactor::G2], 0),
    ));
    e.invariants = Box::new(|_| vec![cited("f")]);
    v.push(e);

    // Ks I-18 / I-19: vector + half-spin of Spin_10 / Spin_12
    for (id, n, isof) in [
        ("Ks I-18", 10usize, IsoFactor::Spin(7)),
        ("Ks I-19", 12, IsoFactor::Sl(5)),
    ] {
        let mut e = entry(id, Table::KsI);
        let space = n as i64 + (1i64 << (n / 2 - 1));
        e.enumerate = en0(space);
        let gdim = 2 + (n * (n - 1) / 2) as i64;
        e.dims = Box::new(move |_| (gdim, space));
        e.variants.push(variant(
            "",
            move |_| {
                let g = spin(n);
                Ok(ms1(g, vec![vecr(g), hse(g)]))
            },
            move |_| iso(&[isof], 0),
        ));
        e.invariants = Box::new(|_| vec![cited("f")]);
        v.push(e);
    }

    // Ks I-20: two vectors of Sp_n
    let mut e = entry("Ks I-20", Table::KsI);
    e.enumerate = en1("n", 2, |n| 4 * n);
    e.dims = Box::new(|p| (2 + p.i("n") * (2 * p.i("n") + 1), 4 * p.i("n")));
    e.variants.push(variant(
        "",
        |p| {
            let g = sp(p.u("n"));
            Ok(ms1(g, vec![w1(g), w1(g)]))
        },
        |p| iso(&[IsoFactor::Torus(1), IsoFactor::Sp(p.i("n") - 1)], 0),
    ));
    e.variants.push(variant(
        "reduced",
        |p| {
            let g = sp(p.u("n"));
            Ok(msp(
                vec![g],
                vec![vec![w1(g)], vec![w1(g)]],
                vec![vec![1, 1]],
            ))
        },
        |p| iso(&[IsoFactor::Sp(p.i("n") - 1)], 0),
    ));
    e.invariants = Box::new(|_| vec![cited("f")]);
    v.push(e);

    // Ks I-21: omega_3 + vector of Sp_3
    let mut e = entry("Ks I-21", Table::KsI);
    e.enumerate = en0(20);
    e.dims = Box::new(|_| (23, 20));
    e.variants.push(variant(
        "",
        |_| {
            let g = sp(3);
            Ok(ms1(g, vec![w(g, 3), w1(g)]))
        },
        |_| iso(&[IsoFactor::Sl(2)], 0),
    ));
    e.invariants = Box::new(|_| vec![cited("f")]);
    v.push(e);
}

fn ks2(v: &mut Vec<CatalogEntry>) {
    // Ks II-1: k vectors, 2 <= k <= n-1
    let mut e = entry("Ks II-1", Table::KsII);
    e.enumerate = en2("n", 3, "k", 2, |n, k| k <= n - 1, |n, k| n * k);
    e.dims = Box::new(|p| {
        let (n, k) = (p.i("n"), p.i("k"));
        (k + n * n - 1, n * k)
    });
    e.variants.push(variant(
        "",
        |p| {
            let g = sl(p.u("n"));
            Ok(ms1(g, vec![w1(g); p.u("k")]))
        },
        |p| {
            let (n, k) = (p.i("n"), p.i("k"));
            iso(
                &[IsoFactor::Torus(k), IsoFactor::Sl(n - k)],
                k * (n - k),
            )
        },
    ));
    e.variants.push(variant(
        "reduced",
        |p| {
            let g = sl(p.u("n"));
            Ok(msp(
                vec![g],
                (0..p.u("k")).map(|_| vec![w1(g)]).collect(),
                vec![],
            ))
        },
        |p| {
            let (n, k) = (p.i("n"), p.i("k"));
            iso(&[IsoFactor::Sl(n - k)], k * (n - k))
        },
    ));
    e.regularity = Regularity::NonRegularNoInvariant;
    v.push(e);

    // Ks II-2: k-1 vectors + one dual, 3 <= k <= n
    let mut e = entry("Ks II-2", Table::KsII);
    e.enumerate = en2("n", 3, "k", 3, |n, k| k <= n, |n, k| n * k);
    e.dims = Box::new(|p| {
        let (n, k) = (p.i("n"), p.i("k"));
        (k + n * n - 1, n * k)
    });
    e.variants.push(variant(
        "",
        |p| {
            let g = sl(p.u("n"));
            let mut s = vec![w1(g); p.u("k") - 1];
            s.push(w1d(g));
            Ok(ms1(g, s))
        },
        |p| {
            let (n, k) = (p.i("n"), p.i("k"));
            iso(
                &[IsoFactor::Torus(1), IsoFactor::Sl(n - k + 1)],
                (n - k + 1) * (k - 2),
            )
        },
    ));
    e.variants.push(variant(
        "reduced",
        |p| {
            let g = sl(p.u("n"));
            let k = p.u("k");
            let mut s: Vec<Vec<RepSpec>> = (0..k - 1).map(|_| vec![w1(g)]).collect();
            s.push(vec![w1d(g)]);
            let pattern: Vec<Vec<i64>> = (0..k - 1)
                .map(|i| (0..k).map(|j| (i == j) as i64).collect())
                .collect();
            Ok(msp(vec![g], s, pattern))
        },
        |p| {
            let (n, k) = (p.i("n"), p.i("k"));
            iso(&[IsoFactor::Sl(n - k + 1)], (n - k + 1) * (k - 2))
        },
    ));
    e.invariants = Box::new(|p| {
        let (n, k) = (p.u("n"), p.u("k"));
        (0..k - 1)
            .map(|i| {
                InvariantMeta::printed(InvariantForm::new(
                    &format!("f{}", i + 1),
                    2,
                    EvalKind::Pairing { off_x: i * n, off_y: (k - 1) * n, n },
                ))
            })
            .collect()
    });
    e.regularity = Regularity::NonRegularWithInvariant;
    v.push(e);

    // Ks II-3: two copies of wedge^2 on SL_{2n+1}
    let mut e = entry("Ks II-3", Table::KsII);
    e.enumerate = en1("n", 2, |n| 2 * n * (2 * n + 1));
    e.dims = Box::new(|p| {
        let n = p.i("n");
        (2 + (2 * n + 1) * (2 * n + 1) - 1, 2 * n * (2 * n + 1))
    });
    e.variants.push(variant(
        "",
        |p| {
            let g = sl(2 * p.u("n") + 1);
            Ok(ms1(g, vec![w(g, 2), w(g, 2)]))
        },
        |p| iso(&[IsoFactor::Torus(2)], 2 * p.i("n")),
    ));
    e.variants.push(variant(
        "reduced",
        |p| {
            let g = sl(2 * p.u("n") + 1);
            Ok(msp(vec![g], vec![vec![w(g, 2)], vec![w(g, 2)]], vec![]))
        },
        |p| iso(&[], 2 * p.i("n")),
    ));
    e.regularity = Regularity::NonRegularNoInvariant;
    v.push(e);

    // Ks II-4 / II-5: wedge^2 + vector (or dual) on SL_{2n}; the printed
    // unipotent subscript n-1 is off by n (dimension arithmetic gives 2n-1)
    for (id, nstart, dual) in [("Ks II-4", 2, false), ("Ks II-5", 3, true)] {
        let mut e = entry(id, Table::KsII);
        e.enumerate = en1("n", nstart, |n| n * (2 * n - 1) + 2 * n);
        e.dims = Box::new(|p| {
            let n = p.i("n");
            (2 + 4 * n * n - 1, n * (2 * n - 1) + 2 * n)
        });
        e.variants.push(variant(
            "",
            move |p| {
                let g = sl(2 * p.u("n"));
                Ok(ms1(g, vec![w(g, 2), dual_if(w1(g), dual)]))
            },
            |p| {
                let n = p.i("n");
                iso(&[IsoFactor::Torus(1), IsoFactor::Sp(n - 1)], 2 * n - 1)
            },
        ));
        e.variants.push(variant(
            "reduced",
            move |p| {
                let g = sl(2 * p.u("n"));
                Ok(msp(
                    vec![g],
                    vec![vec![w(g, 2)], vec![dual_if(w1(g), dual)]],
                    vec![vec![1, 1]],
                ))
            },
            |p| {
                let n = p.i("n");
                iso(&[IsoFactor::Sp(n - 1)], 2 * n - 1)
            },
        ));
        e.invariants = Box::new(|p| {
            vec![InvariantMeta::printed(InvariantForm::new(
                "f1",
                p.u("n"),
                EvalKind::WedgePf { n: 2 * p.u("n") },
            ))]
        });
        e.flags = vec![Flag::CorrectedTypo];
        e.note = Some("printed Un_{n-1}; dimension arithmetic forces Un_{2n-1}");
        e.regularity = Regularity::NonRegularWithInvariant;
        v.push(e);
    }

    // Ks II-6..9: wedge^2 + three (dual) vectors on SL_{2n}
    for (id, nstart, duals) in [
        ("Ks II-6", 2, [false, false, false]),
        ("Ks II-7", 2, [false, false, true]),
        ("Ks II-8", 3, [false, true, true]),
        ("Ks II-9", 3, [true, true, true]),
    ] {
        let mut e = entry(id, Table::KsII);
        e.enumerate = en1("n", nstart, |n| n * (2 * n - 1) + 6 * n);
        e.dims = Box::new(|p| {
            let n = p.i("n");
            (4 + 4 * n * n - 1, n * (2 * n - 1) + 6 * n)
        });
        e.variants.push(variant(
            "",
            move |p| {
                let g = sl(2 * p.u("n"));
                Ok(ms1(
                    g,
                    vec![
                        w(g, 2),
                        dual_if(w1(g), duals[0]),
                        dual_if(w1(g), duals[1]),
                        dual_if(w1(g), duals[2]),
                    ],
                ))
            },
            |p| iso(&[IsoFactor::Sp(p.i("n") - 2)], 2 * p.i("n") - 3),
        ));
        e.invariants = Box::new(move |p| {
            let n = p.u("n");
            let d = 2 * n;
            let o1 = d * (d - 1) / 2;
            let (o2, o3) = (o1 + d, o1 + 2 * d);
            let pf = InvariantMeta::printed(InvariantForm::new(
                "f1",
                n,
                EvalKind::WedgePf { n: d },
            ));
            let adj = |name: &str, x, y| {
                InvariantMeta::printed(InvariantForm::new(
                    name,
                    d + 1,
                    EvalKind::AdjBilinearWedge { n: d, off_a: 0, off_x: x, off_y: y },
                ))
            };
            let pairing = |name: &str, x, y| {
                InvariantMeta::printed(InvariantForm::new(
                    name,
                    2,
                    EvalKind::Pairing { off_x: x, off_y: y, n: d },
                ))
            };
            let bil = |name: &str, x, y| {
                InvariantMeta::printed(InvariantForm::new(
                    name,
                    3,
                    EvalKind::BilinearWedge { n: d, off_a: 0, off_x: x, off_y: y },
                ))
            };
            match id {
                // f4 is printed as z^T A x, which is not equivariant for
                // plain vectors; the adjugate variant passes the checker
                "Ks II-6" => vec![pf, adj("f2", o1, o2), adj("f3", o2, o3), adj("f4", o3, o1)],
                "Ks II-7" => vec![pf, adj("f2", o1, o2), pairing("f3", o1, o3), pairing("f4", o2, o3)],
                "Ks II-8" => vec![pf, pairing("f2", o1, o2), pairing("f3", o1, o3), bil("f4", o2, o3)],
                _ => vec![pf, bil("f2", o1, o2), bil("f3", o2, o3), bil("f4", o3, o1)],
            }
        });
        if id == "Ks II-6" {
            e.note = Some("f4 printed as z^T A x; the cofactor form z^T A# x is the one that passes the invariance check");
        }
        e.regularity = Regularity::NonRegularWithInvariant;
        v.push(e);
    }

    // Ks II-10: wedge^2 + dual vector on SL_{2n+1}
    let mut e = entry("Ks II-10", Table::KsII);
    e.enumerate = en1("n", 2, |n| n * (2 * n + 1) + 2 * n + 1);
    e.dims = Box::new(|p| {
        let n = p.i("n");
        (2 + (2 * n + 1) * (2 * n + 1) - 1, (n + 1) * (2 * n + 1))
    });
    e.variants.push(variant(
        "",
        |p| {
            let g = sl(2 * p.u("n") + 1);
            Ok(ms1(g, vec![w(g, 2), w1d(g)]))
        },
        |p| {
            let n = p.i("n");
            iso(&[IsoFactor::Torus(2), IsoFactor::Sp(n - 1)], 4 * n - 2)
        },
    ));
    e.variants.push(variant(
        "reduced",
        |p| {
            let g = sl(2 * p.u("n") + 1);
            Ok(msp(vec![g], vec![vec![w(g, 2)], vec![w1d(g)]], vec![]))
        },
        |p| iso(&[IsoFactor::Sp(p.i("n") - 1)], 4 * p.i("n") - 2),
    ));
    e.regularity = Regularity::NonRegularNoInvariant;
    v.push(e);

    // Ks II-11 / II-12: wedge^2 + vector + (vector | dual)
    for (id, dual) in [("Ks II-11", false), ("Ks II-12", true)] {
        let mut e = entry(id, Table::KsII);
        e.enumerate = en1("n", 2, |n| (n + 2) * (2 * n + 1));
        e.dims = Box::new(|p| {
            let n = p.i("n");
            (3 + (2 * n + 1) * (2 * n + 1) - 1, (n + 2) * (2 * n + 1))
        });
        e.variants.push(variant(
            "",
            move |p| {
                let g = sl(2 * p.u("n") + 1);
                Ok(ms1(g, vec![w(g, 2), w1(g), dual_if(w1(g), dual)]))
            },
            |p| {
                let n = p.i("n");
                iso(&[IsoFactor::Torus(1), IsoFactor::Sp(n - 1)], 2 * n - 1)
            },
        ));
        e.variants.push(variant(
            "reduced",
            move |p| {
                let g = sl(2 * p.u("n") + 1);
                Ok(msp(
                    vec![g],
                    vec![vec![w(g, 2)], vec![w1(g)], vec![dual_if(w1(g), dual)]],
                    vec![vec![1, 1, 0], vec![0, 0, 1]],
                ))
            },
            |p| iso(&[IsoFactor::Sp(p.i("n") - 1)], 2 * p.i("n") - 1),
        ));
        e.invariants = Box::new(|_| vec![cited("f")]);
        e.regularity = Regularity::NonRegularWithInvariant;
        v.push(e);
    }

    // Ks II-13: wedge^2 + two duals on SL_{2n+1}
    let mut e = entry("Ks II-13", Table::KsII);
    e.enumerate = en1("n", 2, |n| (n + 2) * (2 * n + 1));
    e.dims = Box::new(|p| {
        let n = p.i("n");
        (3 + (2 * n + 1) * (2 * n + 1) - 1, (n + 2) * (2 * n + 1))
    });
    e.variants.push(variant(
        "",
        |p| {
            let g = sl(2 * p.u("n") + 1);
            Ok(ms1(g, vec![w(g, 2), w1d(g), w1d(g)]))
        },
        |p| {
            let n = p.i("n");
            iso(&[IsoFactor::Torus(1), IsoFactor::Sp(n - 1)], 2 * n - 1)
        },
    ));
    e.variants.push(variant(
        "reduced",
        |p| {
            let g = sl(2 * p.u("n") + 1);
            Ok(msp(
                vec![g],
                vec![vec![w(g, 2)], vec![w1d(g)], vec![w1d(g)]],
                vec![vec![0, 1, 1]],
            ))
        },
        |p| iso(&[IsoFactor::Sp(p.i("n") - 1)], 2 * p.i("n") - 2),
    ));
    e.invariants = Box::new(|p| {
        let n = p.u("n");
        let d = 2 * n + 1;
        let o1 = d * (d - 1) / 2;
        vec![InvariantMeta::printed(InvariantForm::new(
            "f1",
            3,
            EvalKind::BilinearWedge { n: d, off_a: 0, off_x: o1, off_y: o1 + d },
        ))]
    });
    e.regularity = Regularity::NonRegularWithInvariant;
    v.push(e);

    // Ks II-14: wedge^2 + three duals on SL_{2n+1}; the printed row shows
    // dual labels over non-dual spaces, kept as the header says and flagged
    let mut e = entry("Ks II-14", Table::KsII);
    e.enumerate = en1("n", 2, |n| (n + 3) * (2 * n + 1));
    e.dims = Box::new(|p| {
        let n = p.i("n");
        (4 + (2 * n + 1) * (2 * n + 1) - 1, (n + 3) * (2 * n + 1))
    });
    e.variants.push(variant(
        "",
        |p| {
            let g = sl(2 * p.u("n") + 1);
            Ok(ms1(g, vec![w(g, 2), w1d(g), w1d(g), w1d(g)]))
        },
        |p| {
            let n = p.i("n");
            iso(&[IsoFactor::Torus(1), IsoFactor::Sp(n - 2)], 4 * n - 6)
        },
    ));
    e.variants.push(variant(
        "reduced",
        |p| {
            let g = sl(2 * p.u("n") + 1);
            Ok(msp(
                vec![g],
                vec![vec![w(g, 2)], vec![w1d(g)], vec![w1d(g)], vec![w1d(g)]],
                vec![
                    vec![0, 1, 0, 0],
                    vec![0, 0, 1, 0],
                    vec![0, 0, 0, 1],
                ],
            ))
        },
        |p| iso(&[IsoFactor::Sp(p.i("n") - 2)], 4 * p.i("n") - 6),
    ));
    e.invariants = Box::new(|p| {
        let n = p.u("n");
        let d = 2 * n + 1;
        let o1 = d * (d - 1) / 2;
        let (o2, o3) = (o1 + d, o1 + 2 * d);
        let bil = |name: &str, x, y| {
            InvariantMeta::printed(InvariantForm::new(
                name,
                3,
                EvalKind::BilinearWedge { n: d, off_a: 0, off_x: x, off_y: y },
            ))
        };
        vec![bil("f1", o1, o2), bil("f2", o2, o3), bil("f3", o3, o1)]
    });
    e.flags = vec![Flag::Erratum];
    e.note = Some("header says three dual vectors but the displayed spaces are not dual; stored per the header");
    e.regularity = Regularity::NonRegularWithInvariant;
    v.push(e);

    // Ks II-15 / II-16: wedge^3 of SL_6 plus one / two vectors
    let mut e = entry("Ks II-15", Table::KsII);
    e.enumerate = en0(26);
    e.dims = Box::new(|_| (37, 26));
    e.variants.push(variant(
        "",
        |_| {
            let g = sl(6);
            Ok(ms1(g, vec![w(g, 3), w1(g)]))
        },
        |_| iso(&[IsoFactor::Torus(1), IsoFactor::Sl(2), IsoFactor::Sl(2)], 4),
    ));
    e.variants.push(variant(
        "reduced",
        |_| {
            let g = sl(6);
            Ok(msp(
                vec![g],
                vec![vec![w(g, 3)], vec![w1(g)]],
                vec![vec![1, 1]],
            ))
        },
        |_| iso(&[IsoFactor::Sl(2), IsoFactor::Sl(2)], 4),
    ));
    e.invariants = Box::new(|_| vec![cited("f")]);
    e.regularity = Regularity::NonRegularWithInvariant;
    v.push(e);

    let mut e = entry("Ks II-16", Table::KsII);
    e.enumerate = en0(32);
    e.dims = Box::new(|_| (38, 32));
    e.variants.push(variant(
        "",
        |_| {
            let g = sl(6);
            Ok(ms1(g, vec![w(g, 3), w1(g), w1(g)]))
        },
        |_| iso(&[IsoFactor::Torus(2)], 4),
    ));
    e.variants.push(variant(
        "reduced",
        |_| {
            let g = sl(6);
            Ok(msp(
                vec![g],
                vec![vec![w(g, 3)], vec![w1(g)], vec![w1(g)]],
                vec![vec![1, 1, 1]],
            ))
        },
        |_| iso(&[], 4),
    ));
    e.invariants = Box::new(|_| vec![cited("f")]);
    e.regularity = Regularity::NonRegularWithInvariant;
    v.push(e);

    // Ks II-17: three vectors of Sp_n
    let mut e = entry("Ks II-17", Table::KsII);
    e.enumerate = en1("n", 2, |n| 6 * n);
    e.dims = Box::new(|p| (3 + p.i("n") * (2 * p.i("n") + 1), 6 * p.i("n")));
    e.variants.push(variant(
        "",
        |p| {
            let g = sp(p.u("n"));
            Ok(ms1(g, vec![w1(g), w1(g), w1(g)]))
        },
        |p| iso(&[IsoFactor::Sp(p.i("n") - 2)], 2 * p.i("n") - 3),
    ));
    e.invariants = Box::new(|_| vec![cited("f")]);
    e.regularity = Regularity::NonRegularWithInvariant;
    v.push(e);

    // Ks II-18: omega_2 + vector of Sp_2
    let mut e = entry("Ks II-18", Table::KsII);
    e.enumerate = en0(9);
    e.dims = Box::new(|_| (12, 9));
    e.variants.push(variant(
        "",
        |_| {
            let g = sp(2);
            Ok(ms1(g, vec![w(g, 2), w1(g)]))
        },
        |_| iso(&[IsoFactor::Torus(1)], 2),
    ));
    e.variants.push(variant(
        "reduced",
        |_| {
            let g = sp(2);
            Ok(msp(
                vec![g],
                vec![vec![w(g, 2)], vec![w1(g)]],
                vec![vec![1, 0]],
            ))
        },
        |_| iso(&[], 2),
    ));
    e.invariants = Box::new(|_| vec![cited("f")]);
    e.regularity = Regularity::NonRegularWithInvariant;
    v.push(e);

    // Ks II-19: two wedges and a dual vector of SL_5; the source states
    // prehomogeneity but prints no isotropy group
    let mut e = entry("Ks II-19", Table::KsII);
    e.enumerate = en0(25);
    e.dims = Box::new(|_| (27, 25));
    e.variants.push(variant_no_iso("", |_| {
        let g = sl(5);
        Ok(ms1(g, vec![w(g, 2), w(g, 2), w1d(g)]))
    }));
    e.note = Some("no isotropy group printed; only prehomogeneity is audited");
    e.regularity = Regularity::NonRegularNoInvariant;
    v.push(e);
}
