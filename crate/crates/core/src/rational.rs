//! Invariants of rational graphs: the Artin fundamental cycle, the
//! rationality test, the topological h^1 of natural line bundles, the
//! Seiberg-Witten invariants of the link per spin^c structure, and the
//! bound that the main identity compares h^1 against.

use num::{BigInt, BigRational, One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::classgroup::{ClassGroup, GroupClass};
use crate::cycle::Cycle;
use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::lifting::{
    ascend_to_anti_nef, distinguished_char, laufer_reduce, nef_lift, LauferTrace,
};

/// Outcome of the rationality test on a graph.
#[derive(Debug, Clone, Serialize)]
pub struct RationalityReport {
    /// Z_min: the minimal positive integral anti-nef cycle.
    pub fundamental_cycle: Cycle,
    #[serde(with = "crate::numeric::serde_ratio")]
    pub chi_zmin: BigRational,
    pub is_rational: bool,
    pub trace: LauferTrace,
}

/// Seiberg-Witten data of one spin^c structure on the link of a rational
/// graph, from the distinguished characteristic representative.
#[derive(Debug, Clone, Serialize)]
pub struct SwInvariants {
    pub k_r: Cycle,
    #[serde(with = "crate::numeric::serde_ratio")]
    pub sw: BigRational,
    /// The d-invariant d = (k_r^2 + s)/4.
    #[serde(with = "crate::numeric::serde_ratio")]
    pub d: BigRational,
}

/// Computes the fundamental cycle by Laufer's ascent: start at the first
/// basis cycle and add E_j while some pairing (x, E_j) is positive.
pub fn fundamental_cycle(lattice: &Lattice) -> Result<(Cycle, LauferTrace)> {
    lattice.require_negative_definite()?;
    let start = Cycle::basis(lattice.vertex_count(), 0);
    Ok(ascend_to_anti_nef(lattice, start))
}

/// Decides rationality by the Artin-Laufer criterion chi(Z_min) = 1.
pub fn rationality(lattice: &Lattice) -> Result<RationalityReport> {
    let (zmin, trace) = fundamental_cycle(lattice)?;
    let chi_zmin = lattice.chi(&zmin);
    Ok(RationalityReport {
        is_rational: chi_zmin.is_one(),
        fundamental_cycle: zmin,
        chi_zmin,
        trace,
    })
}

pub fn is_rational(lattice: &Lattice) -> Result<bool> {
    Ok(rationality(lattice)?.is_rational)
}

pub fn require_rational(lattice: &Lattice) -> Result<()> {
    if is_rational(lattice)? {
        Ok(())
    } else {
        Err(Error::NotRational)
    }
}

/// h^1 of the natural line bundle O(l') on a rational graph, read off from
/// the Laufer reduction: h^1 = -(l', l_red) - chi(l_red).
pub fn h1(lattice: &Lattice, x: &Cycle) -> Result<BigRational> {
    require_rational(lattice)?;
    lattice.require_dual_lattice(x)?;
    let reduction = laufer_reduce(lattice, x)?;
    Ok(-lattice.pair(x, &reduction.reduced) - lattice.chi(&reduction.reduced))
}

/// Seiberg-Witten invariant of the spin^c structure attached to h:
/// -sw = d/2 = (k_r^2 + s)/8, valid on rational graphs.
pub fn sw(lattice: &Lattice, h: &GroupClass) -> Result<SwInvariants> {
    require_rational(lattice)?;
    let k_r = distinguished_char(lattice, h)?.into_cycle();
    let quarter = (lattice.square(&k_r)
        + BigRational::from_integer(BigInt::from(lattice.vertex_count() as i64)))
        / BigRational::from_integer(BigInt::from(4));
    Ok(SwInvariants {
        sw: -&quarter / BigRational::from_integer(BigInt::from(2)),
        d: quarter,
        k_r,
    })
}

/// The topological upper bound for h^1(O(l')): with k = K - 2l' and k_r the
/// distinguished representative of its orbit, the bound is (k_r^2 - k^2)/8.
pub fn conjecture_rhs(lattice: &Lattice, group: &ClassGroup, x: &Cycle) -> Result<BigRational> {
    require_rational(lattice)?;
    lattice.require_dual_lattice(x)?;
    let k = lattice.canonical_cycle() - &x.scaled(2);
    // The orbit of K - 2l' corresponds to the inverse of the class of l'.
    let h = group.neg(&group.class_of(x)?);
    let k_r = distinguished_char(lattice, &h)?.into_cycle();
    let eight = BigRational::from_integer(BigInt::from(8));
    Ok((lattice.square(&k_r) - lattice.square(&k)) / eight)
}

/// Options for the equality suite: enumeration cap, sampling seed, and the
/// maximal number of sampled shifts.
#[derive(Debug, Clone, Copy)]
pub struct SuiteOptions {
    pub cap: u64,
    pub seed: u64,
    pub sample_cap: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            cap: crate::classgroup::DEFAULT_ENUMERATION_CAP,
            seed: 0,
            sample_cap: 400,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassCheck {
    pub class: GroupClass,
    #[serde(with = "crate::numeric::serde_ratio")]
    pub h1_at_nef_lift: BigRational,
    #[serde(with = "crate::numeric::serde_ratio")]
    pub rhs_at_nef_lift: BigRational,
    pub ok: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SampleCheck {
    pub cycle: Cycle,
    pub in_distinguished_set: bool,
    #[serde(with = "crate::numeric::serde_ratio")]
    pub h1: BigRational,
    #[serde(with = "crate::numeric::serde_ratio")]
    pub rhs: BigRational,
    pub ok: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct EqualitySuiteReport {
    pub classes: Vec<ClassCheck>,
    pub samples: Vec<SampleCheck>,
    pub passed: bool,
}

/// Verifies the main identity on a rational graph: both sides vanish at
/// every nef lifting; equality holds on sampled members of the distinguished
/// set; the bound still holds (as an inequality) off it.
pub fn verify_equality_suite(
    lattice: &Lattice,
    group: &ClassGroup,
    options: SuiteOptions,
) -> Result<EqualitySuiteReport> {
    require_rational(lattice)?;
    let classes = group.enumerate(options.cap)?;
    let s = lattice.vertex_count();
    let eight = BigRational::from_integer(BigInt::from(8));

    // Precompute per-class data once; the sample loop only reduces and
    // pairs. Index classes by their canonical coordinates.
    let mut index = std::collections::HashMap::new();
    let mut nef_lifts = Vec::with_capacity(classes.len());
    let mut k_r = Vec::with_capacity(classes.len());
    for (i, h) in classes.iter().enumerate() {
        index.insert(h.coords().to_vec(), i);
        nef_lifts.push(nef_lift(lattice, group, h)?);
        k_r.push(distinguished_char(lattice, h)?.into_cycle());
    }
    let neg_index: Vec<usize> = classes
        .iter()
        .map(|h| index[group.neg(h).coords()])
        .collect();

    let h1_of = |x: &Cycle| -> Result<(BigRational, Cycle)> {
        let red = laufer_reduce(lattice, x)?;
        let val = -lattice.pair(x, &red.reduced) - lattice.chi(&red.reduced);
        Ok((val, red.nef_part))
    };
    // RHS of the bound for a cycle in the class with the given index.
    let rhs_of = |x: &Cycle, i: usize| -> BigRational {
        let k = lattice.canonical_cycle() - &x.scaled(2);
        let kr = &k_r[neg_index[i]];
        (lattice.square(kr) - lattice.square(&k)) / &eight
    };

    let mut class_checks = Vec::new();
    let mut bases = Vec::new();
    for (i, h) in classes.iter().enumerate() {
        let lift = &nef_lifts[i];
        let (h1_val, _) = h1_of(lift)?;
        let rhs_val = rhs_of(lift, i);
        class_checks.push(ClassCheck {
            class: h.clone(),
            ok: h1_val.is_zero() && rhs_val.is_zero(),
            h1_at_nef_lift: h1_val,
            rhs_at_nef_lift: rhs_val,
        });
        bases.push(crate::lifting::unit_cube_rep(h));
        bases.push(lift.clone());
    }

    // Candidate cycles: base +/- sum of c_j E_j with c_j in {0,1,2}. All of
    // them when the pool is small, otherwise a seeded random subsample.
    let shifts_per_base: u128 = 2 * 3u128.checked_pow(s as u32).unwrap_or(u128::MAX / 2);
    let pool = shifts_per_base.saturating_mul(bases.len() as u128);
    let mut candidates: Vec<Cycle> = Vec::new();
    if pool <= options.sample_cap as u128 {
        let mut shift = vec![0u8; s];
        loop {
            let shift_cycle =
                Cycle::from_integers(&shift.iter().map(|&c| c as i64).collect::<Vec<_>>());
            let all_zero = shift.iter().all(|&c| c == 0);
            for base in &bases {
                candidates.push(base + &shift_cycle);
                if !all_zero {
                    candidates.push(base - &shift_cycle);
                }
            }
            let mut i = s;
            let done = loop {
                if i == 0 {
                    break true;
                }
                i -= 1;
                shift[i] += 1;
                if shift[i] < 3 {
                    break false;
                }
                shift[i] = 0;
            };
            if done {
                break;
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(options.seed);
        for _ in 0..options.sample_cap {
            let base = &bases[rng.gen_range(0..bases.len())];
            let sign = if rng.gen_range(0..2) == 0 { 1 } else { -1 };
            let shift: Vec<i64> = (0..s).map(|_| sign * rng.gen_range(0..3i64)).collect();
            candidates.push(base + &Cycle::from_integers(&shift));
        }
    }
    candidates.sort_by(|a, b| a.coeffs().cmp(b.coeffs()));
    candidates.dedup();

    let mut samples = Vec::new();
    for cycle in candidates {
        let i = index[group.class_of(&cycle)?.coords()];
        let (h1_val, nef_part) = h1_of(&cycle)?;
        let member = nef_part == nef_lifts[i];
        let rhs_val = rhs_of(&cycle, i);
        let ok = if member {
            h1_val == rhs_val
        } else {
            h1_val <= rhs_val
        };
        samples.push(SampleCheck {
            cycle,
            in_distinguished_set: member,
            h1: h1_val,
            rhs: rhs_val,
            ok,
        });
    }

    let passed = class_checks.iter().all(|c| c.ok) && samples.iter().all(|s| s.ok);
    Ok(EqualitySuiteReport {
        classes: class_checks,
        samples,
        passed,
    })
}
