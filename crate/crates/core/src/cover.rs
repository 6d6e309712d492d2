//! Equivariant geometric genus of the universal abelian cover of a rational
//! graph, intermediate covers, the lambda identity (sum of Seiberg-Witten
//! invariants over spin^c structures), and the closed sum formula whose right
//! hand side bounds the cover genus.

use num::{BigInt, BigRational, One, Zero};
use serde::Serialize;

use crate::classgroup::{ClassGroup, GroupClass};
use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::lifting::{anti_nef_lift, unit_cube_rep};
use crate::rational::{require_rational, sw};

/// One row of the eigengenus table.
#[derive(Debug, Clone, Serialize)]
pub struct CoverRow {
    pub class: GroupClass,
    #[serde(with = "crate::numeric::serde_ratio_vec")]
    pub theta_exponents: Vec<BigRational>,
    #[serde(with = "crate::numeric::serde_ratio")]
    pub eigengenus: BigRational,
}

/// Character-by-character geometric genus of the universal abelian cover.
#[derive(Debug, Clone, Serialize)]
pub struct CoverGenusTable {
    pub rows: Vec<CoverRow>,
    #[serde(with = "crate::numeric::serde_ratio")]
    pub total: BigRational,
    /// True exactly when every eigengenus vanishes.
    pub cover_rational: bool,
}

fn eigengenus_raw(lattice: &Lattice, h: &GroupClass) -> Result<BigRational> {
    let cube = unit_cube_rep(h);
    let lift = anti_nef_lift(lattice, h)?;
    Ok(lattice.chi(&cube) - lattice.chi(&lift))
}

/// The eigengenus attached to the character theta(h):
/// chi(l'_e(h)) - chi(anti-nef lift of h), always >= 0 on rational graphs.
pub fn equivariant_pg(lattice: &Lattice, h: &GroupClass) -> Result<BigRational> {
    require_rational(lattice)?;
    eigengenus_raw(lattice, h)
}

/// The full eigengenus table over H.
pub fn cover_pg_table(lattice: &Lattice, group: &ClassGroup, cap: u64) -> Result<CoverGenusTable> {
    require_rational(lattice)?;
    let mut rows = Vec::new();
    let mut total = BigRational::zero();
    for h in group.enumerate(cap)? {
        let eigengenus = eigengenus_raw(lattice, &h)?;
        total += &eigengenus;
        rows.push(CoverRow {
            theta_exponents: group.theta_exponents(&h),
            class: h,
            eigengenus,
        });
    }
    let cover_rational = rows.iter().all(|r| r.eigengenus.is_zero());
    Ok(CoverGenusTable {
        rows,
        total,
        cover_rational,
    })
}

/// Geometric genus of the intermediate cover whose Galois group is the
/// quotient of H by the subgroup generated by `kernel`: the eigengenera of
/// the characters trivial on that subgroup survive.
pub fn intermediate_cover_pg(
    lattice: &Lattice,
    group: &ClassGroup,
    kernel: &[GroupClass],
    cap: u64,
) -> Result<BigRational> {
    require_rational(lattice)?;
    let mut total = BigRational::zero();
    for h in group.enumerate(cap)? {
        let survives = kernel.iter().all(|g| {
            lattice
                .pair(h.representative(), g.representative())
                .is_integer()
        });
        if survives {
            total += eigengenus_raw(lattice, &h)?;
        }
    }
    Ok(total)
}

/// The Casson-Walker invariant of the link of a rational graph, through the
/// identity lambda(M) = sum of sw over all spin^c structures.
pub fn lambda_from_sw(lattice: &Lattice, group: &ClassGroup, cap: u64) -> Result<BigRational> {
    require_rational(lattice)?;
    let mut total = BigRational::zero();
    for h in group.enumerate(cap)? {
        total += sw(lattice, &h)?.sw;
    }
    Ok(total)
}

/// Sum over the unit cube of the quadratic terms ((K + 2l')^2 + s)/8,
/// evaluated both directly and through the rewrite
/// |H| (K^2+s)/8 - sum chi(l'); the two must agree exactly.
fn cube_quadratic_sum(lattice: &Lattice, group: &ClassGroup, cap: u64) -> Result<BigRational> {
    let eight = BigRational::from_integer(BigInt::from(8));
    let s = BigRational::from_integer(BigInt::from(lattice.vertex_count() as i64));
    let k = lattice.canonical_cycle();

    let mut direct = BigRational::zero();
    let mut chi_sum = BigRational::zero();
    let mut count = BigRational::zero();
    for h in group.enumerate(cap)? {
        let cube = unit_cube_rep(&h);
        let shifted = k + &cube.scaled(2);
        direct += (lattice.square(&shifted) + &s) / &eight;
        chi_sum += lattice.chi(&cube);
        count += BigRational::one();
    }
    let rewritten = count * lattice.k2_plus_s() / &eight - chi_sum;
    assert_eq!(direct, rewritten, "quadratic sum rewrite identity violated");
    Ok(direct)
}

/// Right hand side of the closed sum formula for the cover genus:
/// -lambda - sum over the unit cube of ((K + 2l')^2 + s)/8.
pub fn sum_formula_rhs(
    lattice: &Lattice,
    group: &ClassGroup,
    lambda: &BigRational,
    cap: u64,
) -> Result<BigRational> {
    Ok(-lambda - cube_quadratic_sum(lattice, group, cap)?)
}

/// Both sides of the two-resolution comparison: when the cover link is an
/// integral homology sphere, lambda(M_a) + (K_a^2 + s_a)/8 must equal
/// lambda(M) + the cube quadratic sum of the base.
#[derive(Debug, Clone, Serialize)]
pub struct CoverComparison {
    #[serde(with = "crate::numeric::serde_ratio")]
    pub cover_side: BigRational,
    #[serde(with = "crate::numeric::serde_ratio")]
    pub base_side: BigRational,
    pub holds: bool,
}

/// Evaluates the comparison identity between a graph and (a resolution graph
/// of) its universal abelian cover, given both Casson-Walker invariants.
pub fn cover_comparison(
    base: &Lattice,
    base_group: &ClassGroup,
    lambda_base: &BigRational,
    cover: &Lattice,
    lambda_cover: &BigRational,
    cap: u64,
) -> Result<CoverComparison> {
    if !cover.group_order().is_one() {
        return Err(Error::CoverNotIntegralHomologySphere(
            cover.group_order().to_string(),
        ));
    }
    let eight = BigRational::from_integer(BigInt::from(8));
    let cover_side = lambda_cover + cover.k2_plus_s() / eight;
    let base_side = lambda_base + cube_quadratic_sum(base, base_group, cap)?;
    Ok(CoverComparison {
        holds: cover_side == base_side,
        cover_side,
        base_side,
    })
}
