//! Shared fixtures, seeded random graph generators, and brute-force oracles
//! used by the integration suites. The oracles are deliberately independent
//! of the library's computation sequences: they enumerate boxes of integral
//! cycles and check defining properties directly.

// Each test target compiles its own copy and uses a different subset.
#![allow(dead_code)]

use std::collections::HashSet;

use num::{BigInt, BigRational, One, Signed};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use plumbing_core::{ClassGroup, Cycle, GroupClass, Lattice, PlumbingGraph};

pub fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

pub fn a4() -> Lattice {
    Lattice::new(PlumbingGraph::from_parts(&[-2, -2, -2], &[(0, 1), (1, 2)]).unwrap()).unwrap()
}

pub fn star_233() -> Lattice {
    Lattice::new(PlumbingGraph::from_parts(&[-2, -3, -3, -3], &[(0, 1), (0, 2), (0, 3)]).unwrap())
        .unwrap()
}

pub fn e8() -> Lattice {
    Lattice::new(
        PlumbingGraph::from_parts(
            &[-2; 8],
            &[(0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (5, 6), (6, 7)],
        )
        .unwrap(),
    )
    .unwrap()
}

pub fn brieskorn(t: i64) -> Lattice {
    let star =
        plumbing_core::seifert::star_graph(&plumbing_core::seifert::brieskorn_family(t)).unwrap();
    Lattice::new(star.graph).unwrap()
}

/// One attempt at a random connected graph: a tree over 1..=max_vertices
/// vertices with Euler numbers in [-5, -1], occasionally with one extra edge.
pub fn random_graph_attempt(rng: &mut ChaCha8Rng, max_vertices: usize) -> Option<Lattice> {
    let s = rng.gen_range(1..=max_vertices);
    let eulers: Vec<i64> = (0..s).map(|_| -rng.gen_range(1..=5i64)).collect();
    let mut edges: Vec<(usize, usize)> = (1..s).map(|v| (rng.gen_range(0..v), v)).collect();
    if s >= 3 && rng.gen_range(0..4) == 0 {
        let a = rng.gen_range(0..s);
        let b = rng.gen_range(0..s);
        if a != b && !edges.contains(&(a.min(b), a.max(b))) {
            edges.push((a, b));
        }
    }
    let graph = PlumbingGraph::from_parts(&eulers, &edges).ok()?;
    Lattice::new(graph).ok()
}

/// A random negative-definite lattice with at most `max_vertices` vertices.
pub fn random_negdef(rng: &mut ChaCha8Rng, max_vertices: usize) -> Lattice {
    loop {
        if let Some(lat) = random_graph_attempt(rng, max_vertices) {
            if lat.is_negative_definite() {
                return lat;
            }
        }
    }
}

/// A random rational negative-definite graph with group order at most max_det.
pub fn random_rational(rng: &mut ChaCha8Rng, max_vertices: usize, max_det: i64) -> Lattice {
    loop {
        let lat = random_negdef(rng, max_vertices);
        if lat.group_order() <= BigInt::from(max_det)
            && plumbing_core::rational::is_rational(&lat).unwrap()
        {
            return lat;
        }
    }
}

/// A random dual-lattice cycle with pairing vector in [-3, 3]^s.
pub fn random_dual_cycle(rng: &mut ChaCha8Rng, lat: &Lattice) -> Cycle {
    let pairings: Vec<BigRational> = (0..lat.vertex_count())
        .map(|_| BigRational::from_integer(BigInt::from(rng.gen_range(-3..=3i64))))
        .collect();
    lat.solve_pairings(&pairings)
}

/// Visits every integral vector 0 <= c <= bounds (coordinatewise).
pub fn for_each_box(bounds: &[i64], mut visit: impl FnMut(&[i64])) {
    let mut c = vec![0i64; bounds.len()];
    loop {
        visit(&c);
        let mut i = bounds.len();
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            c[i] += 1;
            if c[i] <= bounds[i] {
                break;
            }
            c[i] = 0;
        }
    }
}

fn ceil_coeff(value: &BigRational) -> i64 {
    let c = -(-value).floor();
    c.to_integer().try_into().expect("small test coefficients")
}

/// Brute-force check that `reduced` is the minimum of
/// { l in L_e : target - l nef }, searching the box 0 <= l <= reduced + margin.
pub fn assert_laufer_minimal(lat: &Lattice, target: &Cycle, reduced: &Cycle, margin: i64) {
    let bounds: Vec<i64> = reduced
        .coeffs()
        .iter()
        .map(|c| ceil_coeff(c) + margin)
        .collect();
    let mut found = Vec::new();
    for_each_box(&bounds, |c| {
        let l = Cycle::from_integers(c);
        if lat.cone_flags(&(target - &l)).nef {
            found.push(l);
        }
    });
    assert!(
        found.iter().any(|l| l == reduced),
        "reduction not found by brute force"
    );
    for l in &found {
        assert!(
            reduced.dominated_by(l),
            "brute force found a smaller reduction {l} than {reduced} for {target}"
        );
    }
}

/// Brute-force check that `lift` is the minimum of the class of h inside the
/// anti-nef cone, searching cube + l over 0 <= l <= (lift - cube) + margin.
pub fn assert_anti_nef_minimal(lat: &Lattice, h: &GroupClass, lift: &Cycle, margin: i64) {
    let cube = plumbing_core::lifting::unit_cube_rep(h);
    let bounds: Vec<i64> = (lift - &cube)
        .coeffs()
        .iter()
        .map(|c| ceil_coeff(c) + margin)
        .collect();
    let mut found = Vec::new();
    for_each_box(&bounds, |c| {
        let member = &cube + &Cycle::from_integers(c);
        if lat.cone_flags(&member).anti_nef {
            found.push(member);
        }
    });
    assert!(
        found.iter().any(|m| m == lift),
        "lift not found by brute force"
    );
    for m in &found {
        assert!(
            lift.dominated_by(m),
            "brute force found a smaller anti-nef member {m} than {lift}"
        );
    }
}

/// Brute-force check that `zmin` is the minimum of the positive integral
/// anti-nef cycles, searching 0 <= l <= zmin + margin.
pub fn assert_fundamental_minimal(lat: &Lattice, zmin: &Cycle, margin: i64) {
    let bounds: Vec<i64> = zmin
        .coeffs()
        .iter()
        .map(|c| ceil_coeff(c) + margin)
        .collect();
    for_each_box(&bounds, |c| {
        if c.iter().all(|&x| x == 0) {
            return;
        }
        let l = Cycle::from_integers(c);
        if lat.cone_flags(&l).anti_nef {
            assert!(
                zmin.dominated_by(&l),
                "positive anti-nef cycle {l} does not dominate {zmin}"
            );
        }
    });
}

/// The Artin-style enumeration oracle: chi(l) >= 1 for every integral
/// 0 < l <= zmin.
pub fn artin_box_oracle(lat: &Lattice, zmin: &Cycle) -> bool {
    let bounds: Vec<i64> = zmin.coeffs().iter().map(ceil_coeff).collect();
    let mut ok = true;
    for_each_box(&bounds, |c| {
        if c.iter().all(|&x| x == 0) {
            return;
        }
        let l = Cycle::from_integers(c);
        if lat.chi(&l) < BigRational::one() {
            ok = false;
        }
    });
    ok
}

/// Explores every admissible tie-breaking choice of the Laufer reduction and
/// returns the set of final cycles (memoized on intermediate states).
pub fn laufer_all_tiebreaks(lat: &Lattice, target: &Cycle) -> HashSet<Cycle> {
    let mut seen = HashSet::new();
    let mut finals = HashSet::new();
    let mut stack = vec![Cycle::zero(lat.vertex_count())];
    while let Some(x) = stack.pop() {
        if !seen.insert(x.clone()) {
            continue;
        }
        let p = lat.pairings(&(target - &x));
        let triggers: Vec<usize> = p
            .iter()
            .enumerate()
            .filter(|(_, v)| v.is_negative())
            .map(|(j, _)| j)
            .collect();
        if triggers.is_empty() {
            finals.insert(x);
            continue;
        }
        for j in triggers {
            let mut next = x.clone();
            *next.coeff_mut(j) += BigRational::one();
            stack.push(next);
        }
    }
    finals
}

/// Sum of chi over the unit cube representatives.
pub fn cube_chi_sum(lat: &Lattice, group: &ClassGroup, cap: u64) -> BigRational {
    group
        .enumerate(cap)
        .unwrap()
        .iter()
        .map(|h| lat.chi(&plumbing_core::lifting::unit_cube_rep(h)))
        .sum()
}
