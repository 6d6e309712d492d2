//! Star-shaped plumbing graphs from normalized Seifert data: each leg
//! (alpha, omega) expands into a chain through the negative continued
//! fraction alpha/omega = b_1 - 1/(b_2 - 1/(... - 1/b_k)).

use num::{BigInt, BigRational, Integer, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::PlumbingGraph;
use crate::lattice::Lattice;

/// Normalized Seifert invariants: central Euler number and legs with
/// 0 < omega < alpha, gcd(alpha, omega) = 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeifertData {
    pub e0: i64,
    pub legs: Vec<(i64, i64)>,
}

impl SeifertData {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))
    }

    /// Orbifold Euler number e0 + sum omega_i/alpha_i.
    pub fn orbifold_euler(&self) -> BigRational {
        let mut e = BigRational::from_integer(BigInt::from(self.e0));
        for &(alpha, omega) in &self.legs {
            e += BigRational::new(BigInt::from(omega), BigInt::from(alpha));
        }
        e
    }
}

/// Expands alpha/omega into its negative continued fraction [b_1, ..., b_k],
/// all entries >= 2.
pub fn neg_cont_fraction(alpha: i64, omega: i64) -> Result<Vec<i64>> {
    if !(0 < omega && omega < alpha) || alpha.gcd(&omega) != 1 {
        return Err(Error::InvalidSeifertPair { alpha, omega });
    }
    let mut bs = Vec::new();
    let (mut a, mut w) = (alpha, omega);
    while w > 0 {
        // ceil(a / w)
        let b = (a + w - 1) / w;
        bs.push(b);
        let r = b * w - a;
        a = w;
        w = r;
    }
    Ok(bs)
}

/// Evaluates [b_1, ..., b_k] back into b_1 - 1/(b_2 - ...).
pub fn eval_neg_cont_fraction(bs: &[i64]) -> BigRational {
    let mut value = BigRational::zero();
    for &b in bs.iter().rev() {
        let b = BigRational::from_integer(BigInt::from(b));
        value = if value.is_zero() {
            b
        } else {
            &b - value.recip()
        };
    }
    value
}

/// Summary invariants of a star-shaped graph.
#[derive(Debug, Clone, Serialize)]
pub struct StarSummary {
    #[serde(with = "crate::numeric::serde_ratio")]
    pub orbifold_euler: BigRational,
    #[serde(with = "crate::numeric::serde_bigint")]
    pub det: BigInt,
    pub negdef: bool,
    #[serde(with = "crate::numeric::serde_ratio")]
    pub k2_plus_s: BigRational,
}

#[derive(Debug, Clone)]
pub struct StarGraph {
    pub graph: PlumbingGraph,
    pub summary: StarSummary,
}

/// Builds the star-shaped plumbing graph of the Seifert data: the central
/// vertex carries e0, each leg is the chain -b_1, ..., -b_k with -b_1
/// adjacent to the center.
pub fn star_graph(data: &SeifertData) -> Result<StarGraph> {
    let mut eulers = vec![data.e0];
    let mut edges = Vec::new();
    for &(alpha, omega) in &data.legs {
        let bs = neg_cont_fraction(alpha, omega)?;
        let mut prev = 0usize;
        for b in bs {
            eulers.push(-b);
            let id = eulers.len() - 1;
            edges.push((prev, id));
            prev = id;
        }
    }
    let graph = PlumbingGraph::from_parts(&eulers, &edges)?;
    let lattice = Lattice::new(graph.clone())?;
    Ok(StarGraph {
        summary: StarSummary {
            orbifold_euler: data.orbifold_euler(),
            det: lattice.det().clone(),
            negdef: lattice.is_negative_definite(),
            k2_plus_s: lattice.k2_plus_s(),
        },
        graph,
    })
}

/// The Seifert data of the Brieskorn links used throughout the fixtures:
/// three legs (3,1), (3,1), (6t+1, 2t) around a -1 central curve.
pub fn brieskorn_family(t: i64) -> SeifertData {
    SeifertData {
        e0: -1,
        legs: vec![(3, 1), (3, 1), (6 * t + 1, 2 * t)],
    }
}
