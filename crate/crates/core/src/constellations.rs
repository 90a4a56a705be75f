//! King θ-stability for dimension-δ representations of the doubled cyclic
//! quiver of an affine type A diagram.
//!
//! With dimension vector `(1,…,1)` every arrow is a scalar, and a
//! subrepresentation is the same thing as a set of vertices closed under
//! the nonzero arrows leaving it. Semistability is therefore decided by
//! enumerating vertex subsets.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::diagrams::{Diagram, Family};
use crate::error::{Error, Result};
use crate::gauss::{int, Rational};

/// Largest cycle handled by subset enumeration (`n + 1 = 9` vertices).
pub const MAX_RANK: usize = 8;

/// The rank `n` of an affine type A diagram, which has `n + 1` vertices.
pub fn cycle_rank(d: &Diagram) -> Result<usize> {
    if d.family() != Family::A || !d.is_affine() {
        return Err(Error::invalid(format!(
            "{d} is not an affine type A diagram"
        )));
    }
    if d.rank() > MAX_RANK {
        return Err(Error::invalid(format!(
            "rank {} exceeds the supported maximum {MAX_RANK}",
            d.rank()
        )));
    }
    Ok(d.rank())
}

/// A stability weight on the vertices of the cycle, with `θ·δ = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(#[serde(with = "crate::gauss::rational_vec")] Vec<Rational>);

impl Weight {
    pub fn new(values: Vec<Rational>) -> Result<Self> {
        if values.len() < 2 || values.len() > MAX_RANK + 1 {
            return Err(Error::invalid(format!(
                "a weight needs 2 to {} entries, got {}",
                MAX_RANK + 1,
                values.len()
            )));
        }
        let total: Rational = values.iter().sum();
        if !total.is_zero() {
            return Err(Error::invalid(format!("θ·δ = {total}, expected 0")));
        }
        Ok(Weight(values))
    }

    /// Weight for `d`, checking the length against the vertex count.
    pub fn for_diagram(d: &Diagram, values: Vec<Rational>) -> Result<Self> {
        let n = cycle_rank(d)?;
        crate::error::check_dim(n + 1, values.len())?;
        Weight::new(values)
    }

    pub fn values(&self) -> &[Rational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `θ(S)` for a set of vertices.
    pub fn of_subset(&self, subset: &[usize]) -> Rational {
        subset.iter().map(|&v| &self.0[v]).sum()
    }
}

/// A representation of dimension `(1,…,1)`: `x[i]` on the arrow
/// `i → i+1` and `y[i]` on the arrow `i+1 → i`, indices mod `n + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleRep {
    #[serde(with = "crate::gauss::rational_vec")]
    pub x: Vec<Rational>,
    #[serde(with = "crate::gauss::rational_vec")]
    pub y: Vec<Rational>,
}

impl CycleRep {
    /// The representation with every arrow zero.
    pub fn zero(vertices: usize) -> Self {
        CycleRep {
            x: vec![Rational::zero(); vertices],
            y: vec![Rational::zero(); vertices],
        }
    }

    pub fn vertices(&self) -> usize {
        self.x.len()
    }

    /// The dimension vector, always `δ = (1,…,1)`.
    pub fn dimension(&self) -> Vec<i64> {
        vec![1; self.vertices()]
    }

    /// The nonzero arrows as `(tail, head)` pairs.
    pub fn arrows(&self) -> Vec<(usize, usize)> {
        let m = self.vertices();
        let mut out = Vec::new();
        for i in 0..m {
            if !self.x[i].is_zero() {
                out.push((i, (i + 1) % m));
            }
            if !self.y[i].is_zero() {
                out.push(((i + 1) % m, i));
            }
        }
        out
    }

    /// `x_{v−1} y_{v−1} − y_v x_v` at every vertex must vanish.
    pub fn satisfies_preprojective(&self) -> bool {
        let m = self.vertices();
        (0..m).all(|v| {
            let prev = (v + m - 1) % m;
            &self.x[prev] * &self.y[prev] == &self.y[v] * &self.x[v]
        })
    }

    /// Every `x_i y_i` is zero and neither full turn around the cycle acts.
    pub fn is_nilpotent(&self) -> bool {
        let two_cycles = self.x.iter().zip(&self.y).all(|(a, b)| (a * b).is_zero());
        let around = |v: &[Rational]| v.iter().fold(int(1), |acc, s| acc * s).is_zero();
        two_cycles && around(&self.x) && around(&self.y)
    }

    pub fn validate(&self) -> Result<()> {
        let m = self.vertices();
        if !(2..=MAX_RANK + 1).contains(&m) {
            return Err(Error::invalid(format!(
                "a cycle representation needs 2 to {} vertices",
                MAX_RANK + 1
            )));
        }
        crate::error::check_dim(m, self.y.len())?;
        if !self.satisfies_preprojective() {
            return Err(Error::invalid(
                "representation violates the preprojective relation",
            ));
        }
        if !self.is_nilpotent() {
            return Err(Error::invalid("representation is not nilpotent"));
        }
        Ok(())
    }

    /// Whether the vertex set `mask` is closed under the nonzero arrows.
    pub fn is_closed(&self, mask: u32) -> bool {
        self.arrows()
            .iter()
            .all(|&(t, h)| mask & (1 << t) == 0 || mask & (1 << h) != 0)
    }
}

/// Result of a semistability check; `certificate` is a closed proper
/// subset with positive weight when the representation is unstable.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Semistability {
    pub semistable: bool,
    pub certificate: Option<Vec<usize>>,
}

fn members(mask: u32, m: usize) -> Vec<usize> {
    (0..m).filter(|&v| mask & (1 << v) != 0).collect()
}

/// King semistability: every proper nonzero subrepresentation has
/// `θ ≤ 0`. The certificate is the violating subset with the smallest
/// bitmask.
pub fn is_semistable(rep: &CycleRep, theta: &Weight) -> Result<Semistability> {
    rep.validate()?;
    let m = rep.vertices();
    crate::error::check_dim(m, theta.len())?;
    let full = (1u32 << m) - 1;
    for mask in 1..full {
        if !rep.is_closed(mask) {
            continue;
        }
        let s = members(mask, m);
        if theta.of_subset(&s).is_positive() {
            return Ok(Semistability {
                semistable: false,
                certificate: Some(s),
            });
        }
    }
    Ok(Semistability {
        semistable: true,
        certificate: None,
    })
}

/// A semistable nilpotent representation of dimension `δ` for `θ`.
///
/// All `y` vanish and all `x` are 1 except on one arrow `k → k+1`, where
/// `k` is the last position minimizing the prefix sums of `θ`. The closed
/// subsets are then the tails of the chain `k+1 → … → k`, and each tail
/// has `θ ≤ 0` because every prefix starting at `k+1` has `θ ≥ 0`.
pub fn find_semistable(theta: &Weight) -> Result<CycleRep> {
    let m = theta.len();
    let mut prefix = Rational::zero();
    let mut best = (Rational::zero(), 0usize);
    for (k, t) in theta.values().iter().enumerate() {
        prefix += t;
        if k == 0 || prefix <= best.0 {
            best = (prefix.clone(), k);
        }
    }
    let cut = best.1;
    let mut rep = CycleRep::zero(m);
    for (i, x) in rep.x.iter_mut().enumerate() {
        if i != cut {
            *x = int(1);
        }
    }
    let check = is_semistable(&rep, theta)?;
    if !check.semistable {
        return Err(Error::Invariant(format!(
            "cut after vertex {cut} left a destabilizing subset"
        )));
    }
    Ok(rep)
}
