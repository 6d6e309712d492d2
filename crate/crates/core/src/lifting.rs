//! Set-theoretical sections of L' -> H and the generalized Laufer reduction.
//!
//! Two liftings are in play for a class h: the unit-cube representative
//! (minimal in the effective cone) and the anti-nef representative (minimal
//! in -NE_Q). The ascent that computes the latter, and the reduction that
//! splits any rational cycle into an effective part plus a nef remainder,
//! are both Laufer-style computation sequences; the traces are kept as
//! certificates.
//!
//! Why the ascent from the cube representative reaches the class minimum in
//! -NE_Q: every class member in -NE_Q is effective, and effectivity against
//! coefficients < 1 forces it to dominate the cube representative; the usual
//! Laufer induction then keeps every intermediate cycle below the minimum.

use num::{BigInt, BigRational, Integer, Signed};
use serde::Serialize;

use crate::classgroup::{ClassGroup, GroupClass};
use crate::cycle::Cycle;
use crate::error::Result;
use crate::lattice::Lattice;

/// One step of a computation sequence: the vertex added and the pairing
/// (target, E_vertex) before and after the step.
#[derive(Debug, Clone, Serialize)]
pub struct TraceStep {
    pub vertex: usize,
    #[serde(with = "crate::numeric::serde_ratio")]
    pub before: BigRational,
    #[serde(with = "crate::numeric::serde_ratio")]
    pub after: BigRational,
}

/// Certificate of a Laufer-style run: x_{i+1} = x_i + E_{j(i)}.
#[derive(Debug, Clone, Serialize)]
pub struct LauferTrace {
    pub start: Cycle,
    pub steps: Vec<TraceStep>,
    pub end: Cycle,
}

impl LauferTrace {
    /// The vertex sequence j(0), j(1), ...
    pub fn vertex_sequence(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.vertex).collect()
    }
}

/// Result of the generalized Laufer algorithm on l': the minimal effective
/// integral cycle whose removal leaves a nef remainder.
#[derive(Debug, Clone, Serialize)]
pub struct LauferReduction {
    /// l_{l'}: effective, integral, minimal.
    pub reduced: Cycle,
    /// e(l') = l' - l_{l'}, which lies in NE_Q.
    pub nef_part: Cycle,
    pub trace: LauferTrace,
}

/// A characteristic element k: (k, x) + (x, x) is even for all x in L.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CharElement {
    cycle: Cycle,
}

impl CharElement {
    pub fn cycle(&self) -> &Cycle {
        &self.cycle
    }

    pub fn into_cycle(self) -> Cycle {
        self.cycle
    }
}

/// The representative of h with all coefficients in [0,1).
pub fn unit_cube_rep(h: &GroupClass) -> Cycle {
    h.representative().frac()
}

/// Splits l' in L_Q as l_red + nef_part with l_red in L_e minimal and
/// nef_part in NE_Q, by the computation sequence of the generalized Laufer
/// algorithm: while some (l' - x, E_j) < 0, add E_j (smallest such j).
pub fn laufer_reduce(lattice: &Lattice, target: &Cycle) -> Result<LauferReduction> {
    lattice.require_negative_definite()?;
    let s = lattice.vertex_count();
    let mut x = Cycle::zero(s);
    // pairings of l' - x against every E_j, updated in place per step
    let mut p = lattice.pairings(target);
    let mut steps = Vec::new();
    while let Some(j) = p.iter().position(|v| v.is_negative()) {
        let before = p[j].clone();
        *x.coeff_mut(j) += BigRational::from_integer(BigInt::from(1));
        for (i, pi) in p.iter_mut().enumerate() {
            *pi -= BigRational::from_integer(lattice.matrix()[j][i].clone());
        }
        steps.push(TraceStep {
            vertex: j,
            before,
            after: p[j].clone(),
        });
    }
    let nef_part = target - &x;
    Ok(LauferReduction {
        trace: LauferTrace {
            start: Cycle::zero(s),
            steps,
            end: x.clone(),
        },
        reduced: x,
        nef_part,
    })
}

/// Ascends from `start` to the smallest dominating anti-nef cycle by adding
/// E_j while some pairing (x, E_j) is positive.
pub(crate) fn ascend_to_anti_nef(lattice: &Lattice, start: Cycle) -> (Cycle, LauferTrace) {
    let mut x = start.clone();
    let mut p = lattice.pairings(&x);
    let mut steps = Vec::new();
    while let Some(j) = p.iter().position(|v| v.is_positive()) {
        let before = p[j].clone();
        *x.coeff_mut(j) += BigRational::from_integer(BigInt::from(1));
        for (i, pi) in p.iter_mut().enumerate() {
            *pi += BigRational::from_integer(lattice.matrix()[j][i].clone());
        }
        steps.push(TraceStep {
            vertex: j,
            before,
            after: p[j].clone(),
        });
    }
    let trace = LauferTrace {
        start,
        steps,
        end: x.clone(),
    };
    (x, trace)
}

/// The unique minimal representative of h inside -NE_Q.
pub fn anti_nef_lift(lattice: &Lattice, h: &GroupClass) -> Result<Cycle> {
    Ok(anti_nef_lift_traced(lattice, h)?.0)
}

pub fn anti_nef_lift_traced(lattice: &Lattice, h: &GroupClass) -> Result<(Cycle, LauferTrace)> {
    lattice.require_negative_definite()?;
    Ok(ascend_to_anti_nef(lattice, unit_cube_rep(h)))
}

/// The unique maximal representative of h inside NE_Q, via the identity
/// with the anti-nef lifting of the inverse class.
pub fn nef_lift(lattice: &Lattice, group: &ClassGroup, h: &GroupClass) -> Result<Cycle> {
    Ok(-&anti_nef_lift(lattice, &group.neg(h))?)
}

/// The distinguished characteristic representative k_r = K + 2 l'_ne(h) of
/// the spin^c orbit attached to h.
pub fn distinguished_char(lattice: &Lattice, h: &GroupClass) -> Result<CharElement> {
    let lift = anti_nef_lift(lattice, h)?;
    let cycle = &lift.scaled(2) + lattice.canonical_cycle();
    debug_assert!(is_characteristic(lattice, &cycle));
    Ok(CharElement { cycle })
}

/// Checks the parity condition (k, E_j) + (E_j, E_j) in 2Z on every generator.
pub fn is_characteristic(lattice: &Lattice, k: &Cycle) -> bool {
    let two = BigInt::from(2);
    lattice.pairings(k).iter().enumerate().all(|(j, kp)| {
        if !kp.is_integer() {
            return false;
        }
        let val = kp.to_integer() + BigInt::from(lattice.graph().euler(j));
        val.mod_floor(&two) == BigInt::from(0)
    })
}

/// Membership in the distinguished set of cycles whose nef part is the nef
/// lifting of their own class.
pub fn script_l_membership(lattice: &Lattice, group: &ClassGroup, x: &Cycle) -> Result<bool> {
    lattice.require_dual_lattice(x)?;
    let reduction = laufer_reduce(lattice, x)?;
    let h = group.class_of(x)?;
    Ok(reduction.nef_part == nef_lift(lattice, group, &h)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::PlumbingGraph;

    fn a4() -> (Lattice, ClassGroup) {
        let g = PlumbingGraph::from_parts(&[-2, -2, -2], &[(0, 1), (1, 2)]).unwrap();
        let lat = Lattice::new(g).unwrap();
        let cg = ClassGroup::new(&lat).unwrap();
        (lat, cg)
    }

    fn star_233() -> (Lattice, ClassGroup) {
        let g = PlumbingGraph::from_parts(&[-2, -3, -3, -3], &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let lat = Lattice::new(g).unwrap();
        let cg = ClassGroup::new(&lat).unwrap();
        (lat, cg)
    }

    #[test]
    fn cube_rep_examples() {
        let (lat, cg) = a4();
        assert_eq!(unit_cube_rep(&cg.identity()), Cycle::zero(3));
        let h = cg.class_of(&-&lat.dual_cycle(1)).unwrap();
        assert_eq!(
            unit_cube_rep(&h),
            Cycle::from_fracs(&[(1, 2), (0, 1), (1, 2)])
        );

        let (_, cg) = star_233();
        let lp = Cycle::from_fracs(&[(1, 1), (2, 3), (2, 3), (2, 3)]);
        let h = cg.class_of(&lp).unwrap();
        assert_eq!(
            unit_cube_rep(&h),
            Cycle::from_fracs(&[(0, 1), (2, 3), (2, 3), (2, 3)])
        );
    }

    #[test]
    fn laufer_reduce_examples() {
        let (lat, _) = a4();

        // Already nef: nothing to peel off.
        let d1 = lat.dual_cycle(0);
        let red = laufer_reduce(&lat, &d1).unwrap();
        assert_eq!(red.reduced, Cycle::zero(3));
        assert_eq!(red.nef_part, d1);
        assert!(red.trace.steps.is_empty());

        // E_2 itself: one step.
        let e2 = Cycle::basis(3, 1);
        let red = laufer_reduce(&lat, &e2).unwrap();
        assert_eq!(red.reduced, e2);
        assert_eq!(red.nef_part, Cycle::zero(3));
        assert_eq!(red.trace.vertex_sequence(), vec![1]);

        // -(1/2, 0, 1/2): the middle pairing is -1, one step again.
        let x = -&Cycle::from_fracs(&[(1, 2), (0, 1), (1, 2)]);
        let red = laufer_reduce(&lat, &x).unwrap();
        assert_eq!(red.reduced, Cycle::basis(3, 1));
        assert_eq!(red.nef_part, -&Cycle::from_fracs(&[(1, 2), (1, 1), (1, 2)]));
    }

    #[test]
    fn laufer_trace_is_consistent() {
        let (lat, _) = star_233();
        let x = -&Cycle::from_fracs(&[(0, 1), (2, 3), (2, 3), (2, 3)]);
        let red = laufer_reduce(&lat, &x).unwrap();
        // each recorded step had a strictly negative trigger
        for step in &red.trace.steps {
            assert!(step.before.is_negative());
        }
        // replaying the vertex sequence reproduces the end cycle
        let mut replay = red.trace.start.clone();
        for step in &red.trace.steps {
            *replay.coeff_mut(step.vertex) += BigRational::from_integer(BigInt::from(1));
        }
        assert_eq!(replay, red.trace.end);
        assert_eq!(red.trace.end, red.reduced);
        // the nef part really is nef
        assert!(lat.cone_flags(&red.nef_part).nef);
    }

    #[test]
    fn anti_nef_lift_examples() {
        let (lat, cg) = a4();
        assert_eq!(anti_nef_lift(&lat, &cg.identity()).unwrap(), Cycle::zero(3));
        let h = cg.class_of(&-&lat.dual_cycle(1)).unwrap();
        assert_eq!(
            anti_nef_lift(&lat, &h).unwrap(),
            Cycle::from_fracs(&[(1, 2), (1, 1), (1, 2)])
        );

        let (lat, cg) = star_233();
        let lp = Cycle::from_fracs(&[(1, 1), (2, 3), (2, 3), (2, 3)]);
        let h = cg.class_of(&lp).unwrap();
        assert_eq!(anti_nef_lift(&lat, &h).unwrap(), lp);
    }

    #[test]
    fn nef_lift_examples() {
        let (lat, cg) = a4();
        assert_eq!(nef_lift(&lat, &cg, &cg.identity()).unwrap(), Cycle::zero(3));
        let d2 = lat.dual_cycle(1);
        let h = cg.class_of(&d2).unwrap();
        assert_eq!(nef_lift(&lat, &cg, &h).unwrap(), d2);

        let (lat, cg) = star_233();
        let lp = Cycle::from_fracs(&[(1, 1), (2, 3), (2, 3), (2, 3)]);
        let h = cg.class_of(&-&lp).unwrap();
        assert_eq!(nef_lift(&lat, &cg, &h).unwrap(), -&lp);
    }

    #[test]
    fn distinguished_char_examples() {
        let (lat, cg) = a4();
        let k = distinguished_char(&lat, &cg.identity()).unwrap();
        assert_eq!(k.cycle(), lat.canonical_cycle());

        let h = cg.class_of(&-&lat.dual_cycle(1)).unwrap();
        let k = distinguished_char(&lat, &h).unwrap();
        assert_eq!(k.cycle(), &Cycle::from_integers(&[1, 2, 1]));
        assert_eq!(
            lat.square(k.cycle()),
            BigRational::from_integer(BigInt::from(-4))
        );

        let (lat, cg) = star_233();
        let lp = Cycle::from_fracs(&[(1, 1), (2, 3), (2, 3), (2, 3)]);
        let h = cg.class_of(&lp).unwrap();
        let k = distinguished_char(&lat, &h).unwrap();
        assert_eq!(k.cycle(), &lp);
        assert_eq!(
            lat.square(k.cycle()),
            BigRational::from_integer(BigInt::from(-2))
        );
    }

    #[test]
    fn characteristic_parity() {
        let (lat, cg) = star_233();
        for h in cg.enumerate(100).unwrap() {
            let k = distinguished_char(&lat, &h).unwrap();
            assert!(is_characteristic(&lat, k.cycle()));
            // k_r differs from K + 2 rep by an element of 2L
            let base = &h.representative().scaled(2) + lat.canonical_cycle();
            let diff = k.cycle() - &base;
            let halved = Cycle::new(
                diff.coeffs()
                    .iter()
                    .map(|c| c / BigRational::from_integer(BigInt::from(2)))
                    .collect(),
            );
            assert!(halved.is_integral());
        }
        assert!(!is_characteristic(
            &lat,
            &Cycle::from_fracs(&[(1, 3), (0, 1), (0, 1), (0, 1)])
        ));
    }

    #[test]
    fn script_l_membership_examples() {
        let (lat, cg) = a4();

        // nef_lift(h) + E_j is always a member
        for h in cg.enumerate(10).unwrap() {
            let base = nef_lift(&lat, &cg, &h).unwrap();
            for j in 0..3 {
                let x = &base + &Cycle::basis(3, j);
                assert!(script_l_membership(&lat, &cg, &x).unwrap());
            }
        }

        let d2 = lat.dual_cycle(1);
        assert!(script_l_membership(&lat, &cg, &d2).unwrap());

        let not_member = -&Cycle::basis(3, 0);
        assert!(!script_l_membership(&lat, &cg, &not_member).unwrap());

        let bad = Cycle::from_fracs(&[(1, 3), (0, 1), (0, 1)]);
        assert!(script_l_membership(&lat, &cg, &bad).is_err());
    }

    #[test]
    fn cube_rep_min_with_zero_is_zero() {
        let (_, cg) = star_233();
        for h in cg.enumerate(100).unwrap() {
            let cube = unit_cube_rep(&h);
            assert_eq!(cube.min(&Cycle::zero(4)), Cycle::zero(4));
            assert!(cube
                .coeffs()
                .iter()
                .all(|c| !c.is_negative() && c < &BigRational::from_integer(BigInt::from(1))));
        }
    }

    #[test]
    fn anti_nef_dominates_cube_and_is_anti_nef() {
        let (lat, cg) = star_233();
        for h in cg.enumerate(100).unwrap() {
            let cube = unit_cube_rep(&h);
            let lift = anti_nef_lift(&lat, &h).unwrap();
            assert!(cube.dominated_by(&lift));
            let flags = lat.cone_flags(&lift);
            assert!(flags.anti_nef && flags.effective);
            assert!((&lift - &cube).is_integral());
            // identity with the nef lifting of the inverse class
            let neg = nef_lift(&lat, &cg, &cg.neg(&h)).unwrap();
            assert_eq!(lift, -&neg);
        }
    }

    #[test]
    fn rejects_indefinite_lattices() {
        let g = PlumbingGraph::from_parts(&[1], &[]).unwrap();
        let lat = Lattice::new(g).unwrap();
        assert!(laufer_reduce(&lat, &Cycle::zero(1)).is_err());
    }

    #[test]
    fn laufer_reduce_accepts_rational_cycles() {
        let (lat, _) = a4();
        let x = Cycle::from_fracs(&[(7, 5), (-3, 5), (1, 5)]);
        let red = laufer_reduce(&lat, &x).unwrap();
        assert!(red.reduced.is_integral() && red.reduced.is_effective());
        assert!(lat.cone_flags(&red.nef_part).nef);
        assert_eq!(&red.reduced + &red.nef_part, x);
        assert!(!Cycle::zero(3).is_empty());
    }
}
