//! One-off probe: which scalar placements make the (2,3,7,s=1,t=2) family
//! instance an etale module, if any.

use prehomog_core::action::generic_orbit;
use prehomog_core::rep::{sl, ModuleSpec, RepLabel, RepSpec};

fn main() {
    let (m, n) = (3usize, 7usize);
    let a = sl(m);
    let b = sl(n);
    let w1 = |g| RepSpec::new(g, RepLabel::Omega(1), false);
    let trv = |g| RepSpec::new(g, RepLabel::Trivial, false);
    let summands = vec![
        vec![w1(a), trv(b)],
        vec![w1(a), w1(b)],
        vec![w1(a), w1(b)],
        vec![trv(a), w1(b)],
        vec![trv(a), w1(b)],
    ];
    let centers = vec![
        vec![1, 1, 1, 0, 0], // center of GL_m
        vec![0, 1, 1, 1, 1], // center of GL_n
    ];
    let variants: Vec<(&str, Vec<i64>)> = vec![
        ("mu on first vector", vec![0, 0, 0, 1, 0]),
        ("mu on second vector", vec![0, 0, 0, 0, 1]),
        ("mu shared by both vectors", vec![0, 0, 0, 1, 1]),
        ("mu on the bare vector", vec![1, 0, 0, 0, 0]),
        ("mu on one tensor", vec![0, 1, 0, 0, 0]),
    ];
    for (name, extra) in variants {
        let mut pattern = centers.clone();
        pattern.push(extra);
        let ms = ModuleSpec::with_pattern(vec![a, b], summands.clone(), pattern);
        let rm = ms.realize().unwrap();
        let cert = generic_orbit(&rm, 6, 100, 7);
        println!(
            "{name}: group {} space {} orbit {} iso {}",
            rm.group_dim(),
            rm.space_dim(),
            cert.orbit_dim,
            cert.isotropy_dim
        );
    }
}
