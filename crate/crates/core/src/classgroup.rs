//! The discriminant group H = L'/L of a negative-definite plumbing lattice:
//! invariant factors via Smith normal form, canonical class coordinates,
//! enumeration, and the theta character H -> H^ written as rational exponents.
//!
//! In the basis of dual cycles the inclusion L -> L' has matrix B, so H is
//! the cokernel of B and class coordinates come from U B V = diag(d_i).

use num::{BigInt, BigRational, Integer, One, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::cycle::Cycle;
use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::snf::{smith_normal_form, Snf};

/// Default bound on full class enumerations.
pub const DEFAULT_ENUMERATION_CAP: u64 = 100_000;

/// An element of H, stored as canonical residues modulo the nontrivial
/// invariant factors together with a deterministic representative in L'.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupClass {
    coords: Vec<BigInt>,
    rep: Cycle,
}

impl GroupClass {
    /// Canonical coordinates, one residue per invariant factor > 1.
    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    /// The stored representative cycle in L'.
    pub fn representative(&self) -> &Cycle {
        &self.rep
    }

    pub fn is_identity(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }
}

impl Serialize for GroupClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("GroupClass", 2)?;
        let coords: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        st.serialize_field("coords", &coords)?;
        st.serialize_field("representative", &self.rep)?;
        st.end()
    }
}

/// The discriminant group of a negative-definite lattice.
#[derive(Debug, Clone)]
pub struct ClassGroup {
    s: usize,
    order: BigInt,
    /// Invariant factors > 1, in divisibility order d_1 | d_2 | ...
    factors: Vec<BigInt>,
    /// Positions of those factors on the SNF diagonal.
    positions: Vec<usize>,
    snf: Snf,
    lattice: Lattice,
}

impl ClassGroup {
    pub fn new(lattice: &Lattice) -> Result<Self> {
        lattice.require_negative_definite()?;
        let snf = smith_normal_form(lattice.matrix());
        let mut factors = Vec::new();
        let mut positions = Vec::new();
        for (i, d) in snf.diag.iter().enumerate() {
            if d > &BigInt::one() {
                factors.push(d.clone());
                positions.push(i);
            }
        }
        Ok(ClassGroup {
            s: lattice.vertex_count(),
            order: lattice.group_order(),
            factors,
            positions,
            snf,
            lattice: lattice.clone(),
        })
    }

    /// |H| = |det B|.
    pub fn order(&self) -> &BigInt {
        &self.order
    }

    /// The invariant factors d_1 | d_2 | ... (each > 1).
    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.factors
    }

    pub fn identity(&self) -> GroupClass {
        self.from_coords(&vec![BigInt::zero(); self.factors.len()])
    }

    /// Builds the class with the given coordinates (reduced modulo the
    /// invariant factors) and its canonical representative.
    pub fn from_coords(&self, coords: &[BigInt]) -> GroupClass {
        assert_eq!(coords.len(), self.factors.len(), "wrong coordinate count");
        let coords: Vec<BigInt> = coords
            .iter()
            .zip(&self.factors)
            .map(|(c, d)| c.mod_floor(d))
            .collect();
        // Lift: embed into the full diagonal, pull back through U, then read
        // the dual-basis coordinates off as a cycle.
        let mut full = vec![BigInt::zero(); self.s];
        for (c, &p) in coords.iter().zip(&self.positions) {
            full[p] = c.clone();
        }
        let dual_coords: Vec<BigRational> = (0..self.s)
            .map(|i| {
                let acc: BigInt = (0..self.s).map(|j| &self.snf.u_inv[i][j] * &full[j]).sum();
                BigRational::from_integer(acc)
            })
            .collect();
        let rep = self.lattice.solve_pairings(&dual_coords);
        GroupClass { coords, rep }
    }

    /// The class [x] of a dual-lattice cycle; two cycles map to the same
    /// class exactly when they differ by an element of L.
    pub fn class_of(&self, x: &Cycle) -> Result<GroupClass> {
        self.lattice.require_dual_lattice(x)?;
        let pairings = self.lattice.pairings(x);
        let dual_coords: Vec<BigInt> = pairings.iter().map(|p| p.to_integer()).collect();
        let coords: Vec<BigInt> = self
            .positions
            .iter()
            .map(|&i| {
                let acc: BigInt = (0..self.s)
                    .map(|j| &self.snf.u[i][j] * &dual_coords[j])
                    .sum();
                acc.mod_floor(&self.snf.diag[i])
            })
            .collect();
        Ok(self.from_coords(&coords))
    }

    pub fn neg(&self, h: &GroupClass) -> GroupClass {
        let coords: Vec<BigInt> = h.coords.iter().map(|c| -c).collect();
        self.from_coords(&coords)
    }

    pub fn add(&self, a: &GroupClass, b: &GroupClass) -> GroupClass {
        let coords: Vec<BigInt> = a.coords.iter().zip(&b.coords).map(|(x, y)| x + y).collect();
        self.from_coords(&coords)
    }

    /// Order of h in H.
    pub fn class_order(&self, h: &GroupClass) -> BigInt {
        let mut ord = BigInt::one();
        for (c, d) in h.coords.iter().zip(&self.factors) {
            let o = d / c.gcd(d);
            ord = ord.lcm(&o);
        }
        ord
    }

    /// Generator classes (unit coordinate vectors), one per invariant factor.
    pub fn generators(&self) -> Vec<GroupClass> {
        (0..self.factors.len())
            .map(|i| {
                let mut coords = vec![BigInt::zero(); self.factors.len()];
                coords[i] = BigInt::one();
                self.from_coords(&coords)
            })
            .collect()
    }

    /// All classes in lexicographic coordinate order. Errors when |H| > cap.
    pub fn enumerate(&self, cap: u64) -> Result<Vec<GroupClass>> {
        if self.order > BigInt::from(cap) {
            return Err(Error::EnumerationCapExceeded {
                order: self.order.to_string(),
                cap,
            });
        }
        let mut out = Vec::new();
        let mut coords = vec![BigInt::zero(); self.factors.len()];
        loop {
            out.push(self.from_coords(&coords));
            // Mixed-radix increment, last coordinate fastest.
            let mut i = self.factors.len();
            loop {
                if i == 0 {
                    return Ok(out);
                }
                i -= 1;
                coords[i] += 1;
                if coords[i] < self.factors[i] {
                    break;
                }
                coords[i] = BigInt::zero();
            }
        }
    }

    /// Exponents (q_j) of the character theta(h): theta(h)(g_j) = e^{2 pi i q_j}.
    ///
    /// Since (l', D_j) equals the j-th coefficient of l', the exponents are
    /// the fractional parts of any representative's coefficients.
    pub fn theta_exponents(&self, h: &GroupClass) -> Vec<BigRational> {
        h.rep.frac().coeffs().to_vec()
    }
}
