//! The intersection lattice of a plumbing graph: the symmetric matrix B with
//! B_jj = e_j and B_ij = 1 on edges, its exact inverse and determinant, the
//! bilinear form on rational cycles, dual cycles, the canonical cycle and the
//! Riemann-Roch Euler characteristic.

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::cycle::Cycle;
use crate::error::{Error, Result};
use crate::graph::PlumbingGraph;

/// Positivity flags of a rational cycle with respect to the two cones.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConeFlags {
    /// All coefficients >= 0.
    pub effective: bool,
    /// All pairings (x, E_j) >= 0.
    pub nef: bool,
    /// All pairings (x, E_j) <= 0.
    pub anti_nef: bool,
}

/// A plumbing graph together with its intersection data. Construction fails
/// only on a singular matrix; definiteness is a flag queried by callers.
#[derive(Debug, Clone)]
pub struct Lattice {
    graph: PlumbingGraph,
    b: Vec<Vec<BigInt>>,
    det: BigInt,
    b_inv: Vec<Vec<BigRational>>,
    negdef: bool,
    canonical: Cycle,
}

impl Lattice {
    pub fn new(graph: PlumbingGraph) -> Result<Self> {
        let s = graph.vertex_count();
        let mut b = vec![vec![BigInt::zero(); s]; s];
        for j in 0..s {
            b[j][j] = BigInt::from(graph.euler(j));
        }
        for &(i, j) in graph.edges() {
            b[i][j] = BigInt::one();
            b[j][i] = BigInt::one();
        }

        let det = bareiss_det(&b);
        if det.is_zero() {
            return Err(Error::SingularMatrix);
        }
        let b_inv = invert(&b).expect("nonsingular matrix inverts");
        let negdef = leading_minors_alternate(&b);

        // K solves (K, E_j) = -e_j - 2: its pairing vector is fixed, so its
        // coefficient vector is B^{-1} applied to that vector.
        let adjunction: Vec<BigRational> = (0..s)
            .map(|j| BigRational::from_integer(BigInt::from(-graph.euler(j) - 2)))
            .collect();
        let canonical = Cycle::new(mat_vec(&b_inv, &adjunction));

        Ok(Lattice {
            graph,
            b,
            det,
            b_inv,
            negdef,
            canonical,
        })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Lattice::new(PlumbingGraph::from_json(text)?)
    }

    pub fn graph(&self) -> &PlumbingGraph {
        &self.graph
    }

    /// Number of vertices, written s.
    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn matrix(&self) -> &[Vec<BigInt>] {
        &self.b
    }

    pub fn det(&self) -> &BigInt {
        &self.det
    }

    /// Order of the discriminant group H = L'/L.
    pub fn group_order(&self) -> BigInt {
        self.det.abs()
    }

    pub fn is_negative_definite(&self) -> bool {
        self.negdef
    }

    pub fn require_negative_definite(&self) -> Result<()> {
        if self.negdef {
            Ok(())
        } else {
            Err(Error::NotNegativeDefinite)
        }
    }

    /// The dual cycle D_j: the j-th column of B^{-1}, so (D_j, E_i) = delta_ji.
    pub fn dual_cycle(&self, j: usize) -> Cycle {
        Cycle::new(
            (0..self.vertex_count())
                .map(|i| self.b_inv[i][j].clone())
                .collect(),
        )
    }

    /// Exact bilinear form (x, y) = x^T B y.
    pub fn pair(&self, x: &Cycle, y: &Cycle) -> BigRational {
        let bx = self.pairings(x);
        bx.iter().zip(y.coeffs()).map(|(a, b)| a * b).sum()
    }

    /// The square x^2 = (x, x).
    pub fn square(&self, x: &Cycle) -> BigRational {
        self.pair(x, x)
    }

    /// All pairings ((x, E_j))_j, i.e. the vector B x.
    pub fn pairings(&self, x: &Cycle) -> Vec<BigRational> {
        assert_eq!(x.len(), self.vertex_count(), "cycle on a different graph");
        self.b
            .iter()
            .map(|row| {
                row.iter()
                    .zip(x.coeffs())
                    .map(|(bij, r)| BigRational::from_integer(bij.clone()) * r)
                    .sum()
            })
            .collect()
    }

    /// The canonical cycle K, the unique solution of (K, E_j) = -e_j - 2.
    pub fn canonical_cycle(&self) -> &Cycle {
        &self.canonical
    }

    /// Riemann-Roch Euler characteristic chi(x) = -(x, x + K)/2.
    pub fn chi(&self, x: &Cycle) -> BigRational {
        let two = BigRational::from_integer(BigInt::from(2));
        -self.pair(x, &(x + &self.canonical)) / two
    }

    /// K^2 + s, the quadratic normalization entering every d-invariant.
    pub fn k2_plus_s(&self) -> BigRational {
        self.square(&self.canonical)
            + BigRational::from_integer(BigInt::from(self.vertex_count() as i64))
    }

    pub fn cone_flags(&self, x: &Cycle) -> ConeFlags {
        let p = self.pairings(x);
        ConeFlags {
            effective: x.is_effective(),
            nef: p.iter().all(|v| !v.is_negative()),
            anti_nef: p.iter().all(|v| !v.is_positive()),
        }
    }

    /// True when x lies in the dual lattice L', i.e. all pairings integral.
    pub fn in_dual_lattice(&self, x: &Cycle) -> bool {
        self.pairings(x).iter().all(|v| v.is_integer())
    }

    pub fn require_dual_lattice(&self, x: &Cycle) -> Result<()> {
        for (j, v) in self.pairings(x).iter().enumerate() {
            if !v.is_integer() {
                return Err(Error::NotInLprime {
                    vertex: j,
                    pairing: v.to_string(),
                });
            }
        }
        Ok(())
    }

    /// Solves B y = a exactly, returning the cycle with pairing vector a.
    pub fn solve_pairings(&self, a: &[BigRational]) -> Cycle {
        Cycle::new(mat_vec(&self.b_inv, a))
    }
}

fn mat_vec(m: &[Vec<BigRational>], v: &[BigRational]) -> Vec<BigRational> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

/// Fraction-free determinant (Bareiss); exact for integer matrices.
fn bareiss_det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

/// Exact inverse by Gauss-Jordan elimination with partial pivoting.
fn invert(m: &[Vec<BigInt>]) -> Option<Vec<Vec<BigRational>>> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect()
        })
        .collect();
    let mut inv: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();

    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] /= &p;
            inv[col][j] /= &p;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for j in 0..n {
                let t = &a[col][j] * &f;
                a[r][j] -= t;
                let t = &inv[col][j] * &f;
                inv[r][j] -= t;
            }
        }
    }
    Some(inv)
}

/// Negative definiteness: the k-th leading principal minor has sign (-1)^k.
fn leading_minors_alternate(m: &[Vec<BigInt>]) -> bool {
    let n = m.len();
    for k in 1..=n {
        let sub: Vec<Vec<BigInt>> = m[..k].iter().map(|row| row[..k].to_vec()).collect();
        let d = bareiss_det(&sub);
        let expected_positive = k % 2 == 0;
        if d.is_zero() || d.is_positive() != expected_positive {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::traits::FromPrimitive;

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    pub(crate) fn a4() -> Lattice {
        let g = PlumbingGraph::from_parts(&[-2, -2, -2], &[(0, 1), (1, 2)]).unwrap();
        Lattice::new(g).unwrap()
    }

    pub(crate) fn star_233() -> Lattice {
        let g = PlumbingGraph::from_parts(&[-2, -3, -3, -3], &[(0, 1), (0, 2), (0, 3)]).unwrap();
        Lattice::new(g).unwrap()
    }

    #[test]
    fn chain_determinant_and_definiteness() {
        let lat = a4();
        assert_eq!(lat.det(), &BigInt::from(-4));
        assert!(lat.is_negative_definite());
        assert_eq!(lat.group_order(), BigInt::from(4));
    }

    #[test]
    fn star_determinant() {
        let lat = star_233();
        assert_eq!(lat.group_order(), BigInt::from(27));
        assert!(lat.is_negative_definite());
    }

    #[test]
    fn positive_vertex_is_not_negative_definite() {
        let g = PlumbingGraph::from_parts(&[1], &[]).unwrap();
        let lat = Lattice::new(g).unwrap();
        assert!(!lat.is_negative_definite());
        assert!(lat.require_negative_definite().is_err());
    }

    #[test]
    fn cycles_in_the_graph_are_allowed() {
        // connectivity and definiteness are the gates, not tree shape
        let g =
            PlumbingGraph::from_parts(&[-5, -5, -5], &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let lat = Lattice::new(g).unwrap();
        assert!(lat.is_negative_definite());
        assert_eq!(lat.det(), &BigInt::from(-108));
        assert_eq!(lat.group_order(), BigInt::from(108));
    }

    #[test]
    fn zero_vertex_is_singular() {
        let g = PlumbingGraph::from_parts(&[0], &[]).unwrap();
        assert!(matches!(Lattice::new(g), Err(Error::SingularMatrix)));
    }

    #[test]
    fn dual_cycles_of_chain() {
        let lat = a4();
        assert_eq!(
            lat.dual_cycle(1),
            Cycle::from_fracs(&[(-1, 2), (-1, 1), (-1, 2)])
        );
        assert_eq!(
            lat.dual_cycle(0),
            Cycle::from_fracs(&[(-3, 4), (-1, 2), (-1, 4)])
        );
    }

    #[test]
    fn dual_cycle_of_single_vertex() {
        let g = PlumbingGraph::from_parts(&[-5], &[]).unwrap();
        let lat = Lattice::new(g).unwrap();
        assert_eq!(lat.dual_cycle(0), Cycle::from_fracs(&[(-1, 5)]));
    }

    #[test]
    fn pairing_duality() {
        for lat in [a4(), star_233()] {
            let s = lat.vertex_count();
            for j in 0..s {
                let d = lat.dual_cycle(j);
                for i in 0..s {
                    let e = Cycle::basis(s, i);
                    let expected = if i == j { rat(1, 1) } else { rat(0, 1) };
                    assert_eq!(lat.pair(&d, &e), expected);
                }
                // Strict negativity of dual cycles on a connected negdef graph.
                assert!(d.coeffs().iter().all(|c| c.is_negative()));
            }
        }
    }

    #[test]
    fn star_square_of_dual_sum() {
        let lat = star_233();
        let lp = Cycle::from_fracs(&[(1, 1), (2, 3), (2, 3), (2, 3)]);
        assert_eq!(lat.square(&lp), rat(-2, 1));
        assert_eq!(lat.pair(&Cycle::zero(4), &lp), rat(0, 1));
    }

    #[test]
    fn canonical_cycle_values() {
        let lat = a4();
        assert_eq!(lat.canonical_cycle(), &Cycle::zero(3));

        let lat = star_233();
        assert_eq!(
            lat.canonical_cycle(),
            &Cycle::from_fracs(&[(-1, 1), (-2, 3), (-2, 3), (-2, 3)])
        );
        // Adjunction holds on every vertex.
        for j in 0..4 {
            let e = Cycle::basis(4, j);
            let expected = BigRational::from_i64(-lat.graph().euler(j) - 2).unwrap();
            assert_eq!(lat.pair(lat.canonical_cycle(), &e), expected);
        }
    }

    #[test]
    fn chi_values() {
        let lat = star_233();
        assert_eq!(lat.chi(&Cycle::zero(4)), rat(0, 1));
        assert_eq!(lat.chi(&Cycle::from_integers(&[2, 1, 1, 1])), rat(1, 1));
    }

    #[test]
    fn cone_flags_examples() {
        let lat = a4();
        let d1 = lat.dual_cycle(0);
        let f = lat.cone_flags(&d1);
        assert!(f.nef && !f.effective);
        let f = lat.cone_flags(&-&d1);
        assert!(f.anti_nef && f.effective);
        let e1 = Cycle::basis(3, 0);
        let f = lat.cone_flags(&e1);
        assert!(f.effective && !f.nef);
        let f = lat.cone_flags(&Cycle::zero(3));
        assert!(f.effective && f.nef && f.anti_nef);
    }

    #[test]
    fn dual_lattice_membership() {
        let lat = star_233();
        let lp = Cycle::from_fracs(&[(1, 1), (2, 3), (2, 3), (2, 3)]);
        assert!(lat.in_dual_lattice(&lp));
        let not = Cycle::from_fracs(&[(1, 2), (0, 1), (0, 1), (0, 1)]);
        assert!(!lat.in_dual_lattice(&not));
        assert!(matches!(
            lat.require_dual_lattice(&not),
            Err(Error::NotInLprime { .. })
        ));
    }
}
