//! Irreducible reduced rows: the regular list, the non-regular row with an
//! invariant, and the non-regular rows without one.

use super::dsl::*;
use super::*;
use crate::clifford;
use crate::invariants::EvalKind;
use crate::rep::{g2, sl, so, sp, spin, sp_fundamental_with_embedding, Family, RepLabel};
use once_cell::sync::Lazy;

/// Menu of small irreducible representations of semisimple groups used to
/// instantiate the rows with a free representation slot. `None` is the
/// trivial group on a line.
pub(crate) fn irrep_menu() -> Vec<(Option<(SimpleGroupId, RepLabel)>, usize)> {
    let mut m: Vec<(Option<(SimpleGroupId, RepLabel)>, usize)> = vec![(None, 1)];
    for k in 2..=12 {
        m.push((Some((sl(k), RepLabel::Omega(1))), k));
    }
    for k in 1..=6 {
        m.push((Some((sp(k), RepLabel::Omega(1))), 2 * k));
    }
    for k in 3..=12 {
        m.push((Some((so(k), RepLabel::VecRep)), k));
    }
    m.push((Some((sl(2), RepLabel::TwoOmega1)), 3));
    m.push((Some((sl(2), RepLabel::ThreeOmega1)), 4));
    m.push((Some((sl(3), RepLabel::TwoOmega1)), 6));
    m.push((Some((sl(4), RepLabel::Omega(2))), 6));
    m.push((Some((g2(), RepLabel::Omega(2))), 7));
    m.push((Some((spin(7), RepLabel::SpinRep)), 8));
    m.push((Some((spin(9), RepLabel::SpinRep)), 16));
    m
}

fn menu_group_dim(i: usize) -> i64 {
    irrep_menu()[i].0.map_or(0, |(g, _)| g.dim() as i64)
}

fn menu_tensor_gl(i: usize, gln: usize) -> Result<ModuleSpec, CatalogError> {
    let (slot, d) = irrep_menu()[i];
    match slot {
        None => {
            assert_eq!(d, 1);
            Ok(msp(vec![], vec![vec![]], vec![vec![1]]))
        }
        Some((gp, label)) => {
            let f2 = sl(gln);
            Ok(msp(
                vec![gp, f2],
                vec![vec![RepSpec::new(gp, label, false), w1(f2)]],
                vec![vec![1]],
            ))
        }
    }
}

static SPIN7_FORM: Lazy<Vec<Vec<Q>>> =
    Lazy::new(|| clifford::invariant_bilinear_form(&clifford::spin_generators(7)));
static SPIN8_EVEN_FORM: Lazy<Vec<Vec<Q>>> =
    Lazy::new(|| clifford::invariant_bilinear_form(&clifford::halfspin_generators(8, true)));
static SPIN8_ODD_FORM: Lazy<Vec<Vec<Q>>> =
    Lazy::new(|| clifford::invariant_bilinear_form(&clifford::halfspin_generators(8, false)));

pub(crate) fn spin7_form() -> Vec<Vec<Q>> {
    SPIN7_FORM.clone()
}
pub(crate) fn spin8_even_form() -> Vec<Vec<Q>> {
    SPIN8_EVEN_FORM.clone()
}
pub(crate) fn spin8_odd_form() -> Vec<Vec<Q>> {
    SPIN8_ODD_FORM.clone()
}

pub(crate) fn push_entries(v: &mut Vec<CatalogEntry>) {
    sk1(v);
    sk2(v);
    sk3(v);
}

fn sk1(v: &mut Vec<CatalogEntry>) {
    // SK I-1: (G x GL_m, rho (x) w1, V^m (x) C^m), any m-dim irrep rho.
    let mut e = entry("SK I-1", Table::SkI);
    e.enumerate = Box::new(|bound| {
        let menu = irrep_menu();
        (0..menu.len())
            .filter(|&i| menu[i].1 * menu[i].1 <= bound)
            .map(|i| Params::of(&[("rho", i as i64)]))
            .collect()
    });
    e.dims = Box::new(|p| {
        let i = p.u("rho");
        let m = irrep_menu()[i].1 as i64;
        (1 + menu_group_dim(i) + m * m - 1, m * m)
    });
    e.variants.push(variant(
        "",
        |p| {
            let i = p.u("rho");
            let m = irrep_menu()[i].1;
            menu_tensor_gl(i, m)
        },
        |p| {
            let i = p.u("rho");
            match irrep_menu()[i].0 {
                None => iso(&[], 0),
                Some((g, _)) => iso(&[group_iso(g)], 0),
            }
        },
    ));
    e.invariants = Box::new(|p| {
        let m = irrep_menu()[p.u("rho")].1;
        vec![InvariantMeta::printed(InvariantForm::new(
            "f",
            m,
            EvalKind::TensorDet { da: m, db: m },
        ))]
    });
    v.push(e);

    // SK I-2: GL_n on Sym^2 C^n
    let mut e = entry("SK I-2", Table::SkI);
    e.enumerate = en1("n", 2, |n| n * (n + 1) / 2);
    e.dims = Box::new(|p| {
        let n = p.i("n");
        (n * n, n * (n + 1) / 2)
    });
    e.variants.push(variant(
        "",
        |p| Ok(ms1(sl(p.u("n")), vec![w2a(sl(p.u("n")))])),
        |p| iso(&[IsoFactor::So(p.i("n"))], 0),
    ));
    e.invariants = Box::new(|p| {
        vec![InvariantMeta::printed(InvariantForm::new(
            "f",
            p.u("n"),
            EvalKind::SymDet { n: p.u("n") },
        ))]
    });
    v.push(e);

    // SK I-3: GL_2n on wedge^2 C^2n, n >= 3
    let mut e = entry("SK I-3", Table::SkI);
    e.enumerate = en1("n", 3, |n| n * (2 * n - 1));
    e.dims = Box::new(|p| {
        let n = p.i("n");
        (4 * n * n, n * (2 * n - 1))
    });
    e.variants.push(variant(
        "",
        |p| Ok(ms1(sl(2 * p.u("n")), vec![w(sl(2 * p.u("n")), 2)])),
        |p| iso(&[IsoFactor::Sp(p.i("n"))], 0),
    ));
    e.invariants = Box::new(|p| {
        vec![InvariantMeta::printed(InvariantForm::new(
            "f",
            p.u("n"),
            EvalKind::WedgePf { n: 2 * p.u("n") },
        ))]
    });
    v.push(e);

    // SK I-4: GL_2 on binary cubics
    let mut e = entry("SK I-4", Table::SkI);
    e.enumerate = en0(4);
    e.dims = Box::new(|_| (4, 4));
    e.variants[..].iter_mut().for_each(|_| {});
    let mut var0 = variant(
        "",
        |_| Ok(ms1(sl(2), vec![w3a(sl(2))])),
        |_| iso(&[], 0),
    );
    var0.etale_listed = true;
    e.variants.push(var0);
    e.invariants = Box::new(|_| {
        vec![InvariantMeta::printed(InvariantForm::new(
            "f",
            4,
            EvalKind::BinaryCubicDisc { printed_variant: false },
        ))]
    });
    e.note = Some("discriminant implemented with the -4 a2^3 a4 term; the printed -4 a3^3 a4 fails the invariance check and is reported as an erratum");
    v.push(e);

    // SK I-5: GL_6 on wedge^3 C^6
    let mut e = entry("SK I-5", Table::SkI);
    e.enumerate = en0(20);
    e.dims = Box::new(|_| (36, 20));
    e.variants.push(variant(
        "",
        |_| Ok(ms1(sl(6), vec![w(sl(6), 3)])),
        |_| iso(&[IsoFactor::Sl(3), IsoFactor::Sl(3)], 0),
    ));
    e.invariants = Box::new(|_| {
        vec![InvariantMeta::printed(InvariantForm::new(
            "f",
            4,
            EvalKind::TrivectorQuartic,
        ))]
    });
    v.push(e);

    // SK I-6: GL_7 on wedge^3 C^7 (degree stated, formula not printed)
    let mut e = entry("SK I-6", Table::SkI);
    e.enumerate = en0(35);
    e.dims = Box::new(|_| (49, 35));
    e.variants.push(variant(
        "",
        |_| Ok(ms1(sl(7), vec![w(sl(7), 3)])),
        |_| iso(&[IsoFactor::G2], 0),
    ));
    e.invariants = Box::new(|_| vec![InvariantMeta::unprinted("f", 7)]);
    v.push(e);

    // SK I-7: GL_8 on wedge^3 C^8 (space symbol misprinted as wedge^3 C^2)
    let mut e = entry("SK I-7", Table::SkI);
    e.enumerate = en0(56);
    e.dims = Box::new(|_| (64, 56));
    e.variants.push(variant(
        "",
        |_| Ok(ms1(sl(8), vec![w(sl(8), 3)])),
        |_| iso(&[IsoFactor::Sl(3)], 0),
    ));
    e.invariants = Box::new(|_| vec![InvariantMeta::unprinted("f", 16)]);
    e.flags = vec![Flag::CorrectedTypo];
    e.note = Some("printed space wedge^3 C^2; the dimension forces wedge^3 C^8");
    v.push(e);

    // SK I-8: SL_3 x GL_2 on Sym^2 C^3 (x) C^2
    let mut e = entry("SK I-8", Table::SkI);
    e.enumerate = en0(12);
    e.dims = Box::new(|_| (12, 12));
    let mut var0 = variant(
        "",
        |_| {
            Ok(msp(
                vec![sl(3), sl(2)],
                vec![vec![w2a(sl(3)), w1(sl(2))]],
                vec![vec![1]],
            ))
        },
        |_| iso(&[], 0),
    );
    var0.etale_listed = true;
    e.variants.push(var0);
    e.invariants = Box::new(|_| {
        vec![InvariantMeta::printed(InvariantForm::new(
            "f",
            12,
            EvalKind::PencilDiscDetSym,
        ))]
    });
    v.push(e);

    // SK I-9: SL_6 x GL_2 on wedge^2 C^6 (x) C^2
    let mut e = entry("SK I-9", Table::SkI);
    e.enumerate = en0(30);
    e.dims = Box::new(|_| (39, 30));
    e.variants.push(variant(
        "",
        |_| {
            Ok(msp(
                vec![sl(6), sl(2)],
                vec![vec![w(sl(6), 2), w1(sl(2))]],
                vec![vec![1]],
            ))
        },
        |_| iso(&[IsoFactor::Sl(2), IsoFactor::Sl(2), IsoFactor::Sl(2)], 0),
    ));
    e.invariants = Box::new(|_| {
        vec![InvariantMeta::printed(InvariantForm::new(
            "f",
            12,
            EvalKind::PencilDiscPf6,
        ))]
    });
    v.push(e);

    // SK I-10: SL_5 x GL_3
    let mut e = entry("SK I-10", Table::SkI);
    e.enumerate = en0(30);
    e.dims = Box::new(|_| (33, 30));
    e.variants.push(variant(
        "",
        |_| {
            Ok(msp(
                vec![sl(5), sl(3)],
                vec![vec![w(sl(5), 2), w1(sl(3))]],
                vec![vec![1]],
            ))
        },
        |_| iso(&[IsoFactor::Sl(2)], 0),
    ));
    e.invariants = Box::new(|_| vec![InvariantMeta::unprinted("f", 15)]);
    v.push(e);

    // SK I-11: SL_5 x GL_4
    let mut e = entry("SK I-11", Table::SkI);
    e.enumerate = en0(40);
    e.dims = Box::new(|_| (40, 40));
    let mut var0 = variant(
        "",
        |_| {
            Ok(msp(
                vec![sl(5), sl(4)],
                vec![vec![w(sl(5), 2), w1(sl(4))]],
                vec![vec![1]],
            ))
        },
        |_| iso(&[], 0),
    );
    var0.etale_listed = true;
    e.variants.push(var0);
    e.invariants = Box::new(|_| vec![InvariantMeta::unprinted("f", 40)]);
    v.push(e);

    // SK I-12: SL_3 x SL_3 x GL_2 on C^3 (x) C^3 (x) C^2
    let mut e = entry("SK I-12", Table::SkI);
    e.enumerate = en0(18);
    e.dims = Box::new(|_| (20, 18));
    e.variants.push(variant(
        "",
        |_| {
            Ok(msp(
                vec![sl(3), sl(3), sl(2)],
                vec![vec![w1(sl(3)), w1(sl(3)), w1(sl(2))]],
                vec![vec![1]],
            ))
        },
        |_| iso(&[IsoFactor::Torus(2)], 0),
    ));
    e.invariants = Box::new(|_| {
        vec![InvariantMeta::printed(InvariantForm::new(
            "f",
            12,
            EvalKind::PencilDiscDetMat3,
        ))]
    });
    v.push(e);

    // SK I-13: Sp_n x GL_2m, n >= 2m >= 1
    let mut e = entry("SK I-13", Table::SkI);
    e.enumerate = en2("n", 1, "m", 1, |n, m| n >= 2 * m, |n, m| 4 * n * m);
    e.dims = Box::new(|p| {
        let (n, m) = (p.i("n"), p.i("m"));
        (1 + n * (2 * n + 1) + 4 * m * m - 1, 4 * n * m)
    });
    e.variants.push(variant(
        "",
        |p| {
            let (n, m) = (p.u("n"), p.u("m"));
            Ok(msp(
                vec![sp(n), sl(2 * m)],
                vec![vec![w1(sp(n)), w1(sl(2 * m))]],
                vec![vec![1]],
            ))
        },
        |p| iso(&[IsoFactor::Sp(p.i("m")), IsoFactor::Sp(p.i("n") - p.i("m"))], 0),
    ));
    e.invariants = Box::new(|p| {
        vec![InvariantMeta::printed(InvariantForm::new(
            "f",
            2 * p.u("m"),
            EvalKind::GramPf { n: p.u("n"), m: p.u("m") },
        ))]
    });
    v.push(e);

    // SK I-14: GL_1 x Sp_3 on the 14-dimensional fundamental module
    let mut e = entry("SK I-14", Table::SkI);
    e.enumerate = en0(14);
    e.dims = Box::new(|_| (22, 14));
    e.variants.push(variant(
        "",
        |_| Ok(ms1(sp(3), vec![w(sp(3), 3)])),
        |_| iso(&[IsoFactor::Sl(3)], 0),
    ));
    e.invariants = Box::new(|_| {
        let (_, emb) = sp_fundamental_with_embedding(3, 3).expect("sp(3) omega_3");
        vec![InvariantMeta::printed(InvariantForm::new(
            "f",
            4,
            EvalKind::EmbeddedTrivectorQuartic { embedding: emb },
        ))]
    });
    v.push(e);

    // SK I-15: SO_n x GL_m, n >= 3, n >= 2m >= 2
    let mut e = entry("SK I-15", Table::SkI);
    e.enumerate = en2("n", 3, "m", 1, |n, m| n >= 2 * m, |n, m| n * m);
    e.dims = Box::new(|p| {
        let (n, m) = (p.i("n"), p.i("m"));
        (1 + n * (n - 1) / 2 + m * m - 1, n * m)
    });
    e.variants.push(variant(
        "",
        |p| {
            let (n, m) = (p.u("n"), p.u("m"));
            if m == 1 {
                Ok(ms1(so(n), vec![vecr(so(n))]))
            } else {
                Ok(msp(
                    vec![so(n), sl(m)],
                    vec![vec![vecr(so(n)), w1(sl(m))]],
                    vec![vec![1]],
                ))
            }
        },
        |p| iso(&[IsoFactor::So(p.i("m")), IsoFactor::So(p.i("n") - p.i("m"))], 0),
    ));
    e.invariants = Box::new(|p| {
        let (n, m) = (p.u("n"), p.u("m"));
        vec![InvariantMeta::printed(InvariantForm::new(
            "f",
            2 * m,
            EvalKind::GramDet {
                vdim: n,
                cols: m,
                q: identity_n(n),
                factor_second: false,
            },
        ))]
    });
    v.push(e);

    // SK I-16..18: GL_m x Spin_7 on C^m (x) V^8
    for (id, m, isof) in [
        ("SK I-16", 1usize, vec![IsoFactor::G2]),
        ("SK I-17", 2, vec![IsoFactor::So(2), IsoFactor::Sl(3)]),
        ("SK I-18", 3, vec![IsoFactor::So(3), IsoFactor::Sl(2)]),
    ] {
        let mut e = entry(id, Table::SkI);
        e.enumerate = en0(8 * m as i64);
        e.dims = Box::new(move |_| (m as i64 * m as i64 + 21, 8 * m as i64));
        let isof2 = isof.clone();
        e.variants.push(variant(
            "",
            move |_| {
                if m == 1 {
                    Ok(ms1(spin(7), vec![spn(spin(7))]))
                } else {
                    Ok(msp(
                        vec![sl(m), spin(7)],
                        vec![vec![w1(sl(m)), spn(spin(7))]],
                        vec![vec![1]],
                    ))
                }
            },
            move |_| iso(&isof2, 0),
        ));
        e.invariants = Box::new(move |_| {
            let q = spin7_form();
            let kind = if m == 1 {
                EvalKind::QuadForm { q, off: 0 }
            } else {
                EvalKind::GramDet { vdim: 8, cols: m, q, factor_second: true }
            };
            vec![InvariantMeta::printed(InvariantForm::new("f", 2 * m, kind))]
        });
        v.push(e);
    }

    // SK I-19: GL_1 x Spin_9 on V^16
    let mut e = entry("SK I-19", Table::SkI);
    e.enumerate = en0(16);
    e.dims = Box::new(|_| (37, 16));
    e.variants.push(variant(
        "",
        |_| Ok(ms1(spin(9), vec![spn(spin(9))])),
        |_| iso(&[IsoFactor::Spin(7)], 0),
    ));
    e.invariants = Box::new(|_| vec![InvariantMeta::unprinted("f", 2)]);
    v.push(e);

    // SK I-20: GL_2 x Spin_10 on C^2 (x) V^16
    let mut e = entry("SK I-20", Table::SkI);
    e.enumerate = en0(32);
    e.dims = Box::new(|_| (49, 32));
    e.variants.push(variant(
        "",
        |_| {
            Ok(msp(
                vec![sl(2), spin(10)],
                vec![vec![w1(sl(2)), hse(spin(10))]],
                vec![vec![1]],
            ))
        },
        |_| iso(&[IsoFactor::Sl(2), IsoFactor::G2], 0),
    ));
    e.invariants = Box::new(|_| vec![InvariantMeta::unprinted("f", 4)]);
    v.push(e);

    // SK I-21: GL_3 x Spin_10 on C^3 (x) V^16 (printed C^2; GL_3 forces C^3)
    let mut e = entry("SK I-21", Table::SkI);
    e.enumerate = en0(48);
    e.dims = Box::new(|_| (54, 48));
    e.variants.push(variant(
        "",
        |_| {
            Ok(msp(
                vec![sl(3), spin(10)],
                vec![vec![w1(sl(3)), hse(spin(10))]],
                vec![vec![1]],
            ))
        },
        |_| iso(&[IsoFactor::So(3), IsoFactor::Sl(2)], 0),
    ));
    e.invariants = Box::new(|_| vec![InvariantMeta::unprinted("f", 12)]);
    e.flags = vec![Flag::CorrectedTypo];
    e.note = Some("printed space C^2 (x) V^16; the GL_3 factor forces C^3");
    v.push(e);

    // SK I-22..24: spin towers
    for (id, n, dim, deg, isof) in [
        ("SK I-22", 11usize, 32i64, 4usize, vec![IsoFactor::Sl(5)]),
        ("SK I-23", 12, 32, 4, vec![IsoFactor::Sl(6)]),
        ("SK I-24", 14, 64, 8, vec![IsoFactor::G2, IsoFactor::G2]),
    ] {
        let mut e = entry(id, Table::SkI);
        e.enumerate = en0(dim);
        let gd = 1 + (n * (n - 1) / 2) as i64;
        e.dims = Box::new(move |_| (gd, dim));
        let isof2 = isof.clone();
        e.variants.push(variant(
            "",
            move |_| {
                let g = spin(n);
                let r = if n % 2 == 1 { spn(g) } else { hse(g) };
                Ok(ms1(g, vec![r]))
            },
            move |_| iso(&isof2, 0),
        ));
        e.invariants = Box::new(move |_| vec![InvariantMeta::unprinted("f", deg)]);
        v.push(e);
    }

    // SK I-25, I-26: GL_m x G2 on C^m (x) V^7
    for (id, m, isof) in [
        ("SK I-25", 1usize, vec![IsoFactor::Sl(3)]),
        ("SK I-26", 2, vec![IsoFactor::Gl(2)]),
    ] {
        let mut e = entry(id, Table::SkI);
        e.enumerate = en0(7 * m as i64);
        e.dims = Box::new(move |_| (m as i64 * m as i64 + 14, 7 * m as i64));
        let isof2 = isof.clone();
        e.variants.push(variant(
            "",
            move |_| {
                if m == 1 {
                    Ok(ms1(g2(), vec![w(g2(), 2)]))
                } else {
                    Ok(msp(
                        vec![sl(m), g2()],
                        vec![vec![w1(sl(m)), w(g2(), 2)]],
                        vec![vec![1]],
                    ))
                }
            },
            move |_| iso(&isof2, 0),
        ));
        e.invariants = Box::new(move |_| {
            let q = identity_n(7);
            let kind = if m == 1 {
                EvalKind::QuadForm { q, off: 0 }
            } else {
                EvalKind::GramDet { vdim: 7, cols: m, q, factor_second: true }
            };
            vec![InvariantMeta::printed(InvariantForm::new("f", 2 * m, kind))]
        });
        v.push(e);
    }

    // SK I-27..29: exceptional rows, dimension arithmetic only
    for (id, gdim, space, deg, isof) in [
        ("SK I-27", 1 + 78i64, 27i64, 4usize, vec![IsoFactor::F4]),
        ("SK I-28", 4 + 78, 54, 12, vec![IsoFactor::So(8)]),
        ("SK I-29", 1 + 133, 56, 4, vec![IsoFactor::E6]),
    ] {
        let mut e = entry(id, Table::SkI);
        e.enumerate = en0(space);
        e.dims = Box::new(move |_| (gdim, space));
        let isof2 = isof.clone();
        let mut var0 = variant(
            "",
            move |_| Err(CatalogError::UnsupportedGroup(id.to_string())),
            move |_| iso(&isof2, 0),
        );
        var0.flags = vec![];
        e.variants.push(var0);
        e.invariants = Box::new(move |_| vec![InvariantMeta::unprinted("f", deg)]);
        v.push(e);
    }
}

pub(crate) fn group_iso(g: SimpleGroupId) -> IsoFactor {
    match g.family {
        Family::Sl => IsoFactor::Sl(g.n as i64),
        Family::Sp => IsoFactor::Sp(g.n as i64),
        Family::So => IsoFactor::So(g.n as i64),
        Family::Spin => IsoFactor::Spin(g.n as i64),
        Family::G2 => IsoFactor::G2,
    }
}

fn sk2(v: &mut Vec<CatalogEntry>) {
    // SK II-1: GL_1 x Sp_n x SO_3, n >= 2
    let mut e = entry("SK II-1", Table::SkII);
    e.enumerate = en1("n", 2, |n| 6 * n);
    e.dims = Box::new(|p| {
        let n = p.i("n");
        (1 + n * (2 * n + 1) + 3, 6 * n)
    });
    e.variants.push(variant(
        "",
        |p| {
            let n = p.u("n");
            Ok(msp(
                vec![sp(n), so(3)],
                vec![vec![w1(sp(n)), vecr(so(3))]],
                vec![vec![1]],
            ))
        },
        |p| {
            let n = p.i("n");
            iso(&[IsoFactor::Sp(n - 2), IsoFactor::So(2)], 2 * n - 3)
        },
    ));
    e.invariants = Box::new(|p| {
        vec![InvariantMeta::printed(InvariantForm::new(
            "f",
            4,
            EvalKind::SpSoTraceSq { n: p.u("n") },
        ))]
    });
    e.regularity = Regularity::NonRegularWithInvariant;
    v.push(e);
}

fn sk3(v: &mut Vec<CatalogEntry>) {
    // SK III-1: (G x GL_m, rho (x) w1), dim rho = d >= 3, G != SL_d, m > d.
    let mut e = entry("SK III-1", Table::SkIII);
    e.enumerate = Box::new(|bound| {
        let menu = irrep_menu();
        let mut out = Vec::new();
        for (i, (slot, d)) in menu.iter().enumerate() {
            let Some((g, _)) = slot else { continue };
            if *d < 3 || (g.family == Family::Sl && matches!(menu[i].0, Some((_, RepLabel::Omega(1))))) {
                continue;
            }
            let mut m = *d as i64 + 1;
            while (*d as i64) * m <= bound as i64 {
                out.push(Params::of(&[("rho", i as i64), ("m", m)]));
                m += 1;
            }
        }
        out
    });
    e.dims = Box::new(|p| {
        let i = p.u("rho");
        let d = irrep_menu()[i].1 as i64;
        let m = p.i("m");
        (1 + menu_group_dim(i) + m * m - 1, d * m)
    });
    e.variants.push(variant(
        "",
        |p| menu_tensor_gl(p.u("rho"), p.u("m")),
        |p| {
            let i = p.u("rho");
            let d = irrep_menu()[i].1 as i64;
            let m = p.i("m");
            let g = irrep_menu()[i].0.unwrap().0;
            iso(&[group_iso(g), IsoFactor::Gl(m - d)], d * (m - d))
        },
    ));
    // reduced: G x SL_m, no scalar
    e.variants.push(variant(
        "reduced",
        |p| {
            let mut ms = menu_tensor_gl(p.u("rho"), p.u("m"))?;
            ms.torus_rank = 0;
            ms.pattern = vec![];
            Ok(ms)
        },
        |p| {
            let i = p.u("rho");
            let d = irrep_menu()[i].1 as i64;
            let m = p.i("m");
            let g = irrep_menu()[i].0.unwrap().0;
            iso(&[group_iso(g), IsoFactor::Sl(m - d)], d * (m - d))
        },
    ));
    e.regularity = Regularity::NonRegularNoInvariant;
    v.push(e);

    // SK III-2: SL_n x GL_m, m >= 2n >= 2
    let mut e = entry("SK III-2", Table::SkIII);
    e.enumerate = en2("n", 1, "m", 2, |n, m| m >= 2 * n && m > n, |n, m| n * m);
    e.dims = Box::new(|p| {
        let (n, m) = (p.i("n"), p.i("m"));
        (1 + n * n - 1 + m * m - 1, n * m)
    });
    e.variants.push(variant(
        "",
        |p| {
            let (n, m) = (p.u("n"), p.u("m"));
            if n == 1 {
                Ok(msp(vec![sl(m)], vec![vec![w1(sl(m))]], vec![vec![1]]))
            } else {
                Ok(msp(
                    vec![sl(n), sl(m)],
                    vec![vec![w1(sl(n)), w1(sl(m))]],
                    vec![vec![1]],
                ))
            }
        },
        |p| {
            let (n, m) = (p.i("n"), p.i("m"));
            iso(&[IsoFactor::Sl(n), IsoFactor::Gl(m - n)], n * (m - n))
        },
    ));
    e.variants.push(variant(
        "reduced",
        |p| {
            let (n, m) = (p.u("n"), p.u("m"));
            let mut ms = if n == 1 {
                msp(vec![sl(m)], vec![vec![w1(sl(m))]], vec![vec![1]])
            } else {
                msp(
                    vec![sl(n), sl(m)],
                    vec![vec![w1(sl(n)), w1(sl(m))]],
                    vec![vec![1]],
                )
            };
            ms.torus_rank = 0;
            ms.pattern = vec![];
            Ok(ms)
        },
        |p| {
            let (n, m) = (p.i("n"), p.i("m"));
            iso(&[IsoFactor::Sl(n), IsoFactor::Sl(m - n)], n * (m - n))
        },
    ));
    e.regularity = Regularity::NonRegularNoInvariant;
    v.push(e);

    // SK III-3: GL_{2n+1} on wedge^2 C^{2n+1}, n >= 2
    let mut e = entry("SK III-3", Table::SkIII);
    e.enumerate = en1("n", 2, |n| n * (2 * n + 1));
    e.dims = Box::new(|p| {
        let n = p.i("n");
        ((2 * n + 1) * (2 * n + 1), n * (2 * n + 1))
    });
    e.variants.push(variant(
        "",
        |p| Ok(ms1(sl(2 * p.u("n") + 1), vec![w(sl(2 * p.u("n") + 1), 2)])),
        |p| {
            let n = p.i("n");
            iso(&[IsoFactor::Sp(n), IsoFactor::Torus(1)], 2 * n)
        },
    ));
    e.variants.push(variant(
        "reduced",
        |p| {
            let g = sl(2 * p.u("n") + 1);
            Ok(msp(vec![g], vec![vec![w(g, 2)]], vec![]))
        },
        |p| iso(&[IsoFactor::Sp(p.i("n"))], 2 * p.i("n")),
    ));
    e.regularity = Regularity::NonRegularNoInvariant;
    v.push(e);

    // SK III-4: GL_2 x SL_{2n+1} on C^2 (x) wedge^2 C^{2n+1}, n >= 2
    let mut e = entry("SK III-4", Table::SkIII);
    e.enumerate = en1("n", 2, |n| 2 * n * (2 * n + 1));
    e.dims = Box::new(|p| {
        let n = p.i("n");
        (4 + (2 * n + 1) * (2 * n + 1) - 1, 2 * n * (2 * n + 1))
    });
    e.variants.push(variant(
        "",
        |p| {
            let g = sl(2 * p.u("n") + 1);
            Ok(msp(
                vec![sl(2), g],
                vec![vec![w1(sl(2)), w(g, 2)]],
                vec![vec![1]],
            ))
        },
        |p| iso(&[IsoFactor::Torus(1), IsoFactor::Sl(2)], 2 * p.i("n")),
    ));
    e.variants.push(variant(
        "reduced",
        |p| {
            let g = sl(2 * p.u("n") + 1);
            Ok(msp(vec![sl(2), g], vec![vec![w1(sl(2)), w(g, 2)]], vec![]))
        },
        |p| iso(&[IsoFactor::Sl(2)], 2 * p.i("n")),
    ));
    e.regularity = Regularity::NonRegularNoInvariant;
    v.push(e);

    // SK III-5: Sp_n x GL_{2m+1}, n > 2m+1 (reductive part corrected to
    // Sp_m x Sp_{n-m-1} by dimension arithmetic)
    let mut e = entry("SK III-5", Table::SkIII);
    e.enumerate = en2(
        "n",
        2,
        "m",
        0,
        |n, m| n > 2 * m + 1,
        |n, m| 2 * n * (2 * m + 1),
    );
    e.dims = Box::new(|p| {
        let (n, m) = (p.i("n"), p.i("m"));
        (
            1 + n * (2 * n + 1) + (2 * m + 1) * (2 * m + 1) - 1,
            2 * n * (2 * m + 1),
        )
    });
    e.variants.push(variant(
        "",
        |p| {
            let (n, m) = (p.u("n"), p.u("m"));
            if m == 0 {
                Ok(ms1(sp(n), vec![w1(sp(n))]))
            } else {
                Ok(msp(
                    vec![sp(n), sl(2 * m + 1)],
                    vec![vec![w1(sp(n)), w1(sl(2 * m + 1))]],
                    vec![vec![1]],
                ))
            }
        },
        |p| {
            let (n, m) = (p.i("n"), p.i("m"));
            iso(
                &[
                    IsoFactor::Torus(1),
                    IsoFactor::Sp(m),
                    IsoFactor::Sp(n - m - 1),
                ],
                2 * n - 1,
            )
        },
    ));
    e.variants.push(variant(
        "reduced",
        |p| {
            let (n, m) = (p.u("n"), p.u("m"));
            let mut ms = if m == 0 {
                ms1(sp(n), vec![w1(sp(n))])
            } else {
                msp(
                    vec![sp(n), sl(2 * m + 1)],
                    vec![vec![w1(sp(n)), w1(sl(2 * m + 1))]],
                    vec![vec![1]],
                )
            };
            ms.torus_rank = 0;
            ms.pattern = vec![];
            Ok(ms)
        },
        |p| {
            let (n, m) = (p.i("n"), p.i("m"));
            iso(&[IsoFactor::Sp(m), IsoFactor::Sp(n - m - 1)], 2 * n - 1)
        },
    ));
    e.flags = vec![Flag::CorrectedTypo];
    e.note = Some("printed Sp_{n-m}; dimension arithmetic forces Sp_{n-m-1}");
    e.regularity = Regularity::NonRegularNoInvariant;
    v.push(e);

    // SK III-6: GL_1 x Spin_10 on a half-spin module
    let mut e = entry("SK III-6", Table::SkIII);
    e.enumerate = en0(16);
    e.dims = Box::new(|_| (46, 16));
    e.variants.push(variant(
        "",
        |_| Ok(ms1(spin(10), vec![hse(spin(10))])),
        |_| iso(&[IsoFactor::Torus(1), IsoFactor::Spin(7)], 8),
    ));
    e.variants.push(variant(
        "reduced",
        |_| {
            let g = spin(10);
            Ok(msp(vec![g], vec![vec![hse(g)]], vec![]))
        },
        |_| iso(&[IsoFactor::Spin(7)], 8),
    ));
    e.regularity = Regularity::NonRegularNoInvariant;
    v.push(e);
}
