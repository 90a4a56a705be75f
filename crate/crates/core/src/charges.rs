//! Exact central charges and the group actions on them.

use std::ops::{Deref, Index};

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::diagrams::Diagram;
use crate::error::{check_dim, Error, Result};
use crate::gauss::Gauss;
use crate::linalg;
use crate::weylbraid::WeylMatrix;

/// Values of a central charge on the simple classes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CentralCharge(pub Vec<Gauss>);

impl CentralCharge {
    pub fn new(values: Vec<Gauss>) -> Self {
        CentralCharge(values)
    }

    /// The charge `(i, …, i)`.
    pub fn standard(n: usize) -> Self {
        CentralCharge(vec![Gauss::i(); n])
    }

    pub fn values(&self) -> &[Gauss] {
        &self.0
    }

    /// Rotates and rescales every value by `μ`.
    pub fn scaled(&self, mu: &Gauss) -> Self {
        CentralCharge(self.0.iter().map(|z| z * mu).collect())
    }

    pub fn lerp(a: &CentralCharge, b: &CentralCharge, t: &crate::gauss::Rational) -> Self {
        CentralCharge(
            a.0.iter()
                .zip(&b.0)
                .map(|(x, y)| Gauss::lerp(x, y, t))
                .collect(),
        )
    }
}

impl Deref for CentralCharge {
    type Target = [Gauss];
    fn deref(&self) -> &[Gauss] {
        &self.0
    }
}

impl Index<usize> for CentralCharge {
    type Output = Gauss;
    fn index(&self, i: usize) -> &Gauss {
        &self.0[i]
    }
}

/// `Z(v) = Σ v_i Z(e_i)`.
pub fn evaluate(z: &CentralCharge, v: &[i64]) -> Result<Gauss> {
    check_dim(z.len(), v.len())?;
    Ok(evaluate_unchecked(z, v))
}

pub(crate) fn evaluate_unchecked(z: &CentralCharge, v: &[i64]) -> Gauss {
    let mut acc = Gauss::zero();
    for (zi, &k) in z.0.iter().zip(v) {
        if k != 0 {
            acc += &zi.scale_int(k);
        }
    }
    acc
}

/// Imaginary part of `Z(v)`, without computing the real part.
pub(crate) fn imag_unchecked(z: &CentralCharge, v: &[i64]) -> crate::gauss::Rational {
    let mut acc = crate::gauss::int(0);
    for (zi, &k) in z.0.iter().zip(v) {
        if k != 0 {
            acc += &zi.im * crate::gauss::int(k);
        }
    }
    acc
}

/// Weyl action on charges: `(w·Z)(v) = Z(w⁻¹v)`.
pub fn act_weyl(w: &WeylMatrix, z: &CentralCharge) -> Result<CentralCharge> {
    check_dim(w.size(), z.len())?;
    let inv = linalg::integer_inverse(w.matrix())
        .ok_or_else(|| Error::invalid("Weyl matrix is not invertible over the integers"))?;
    let cols = linalg::transpose(&inv);
    Ok(CentralCharge(
        cols.iter().map(|c| evaluate_unchecked(z, c)).collect(),
    ))
}

/// An element `λ` of the ℂ-action, stored as the exact scalar `μ = e^{−iπλ}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScalarAction {
    mu: Gauss,
}

impl ScalarAction {
    pub fn new(mu: Gauss) -> Result<Self> {
        if mu.is_zero() {
            return Err(Error::invalid(
                "the scalar of a ℂ-action element must be nonzero",
            ));
        }
        Ok(ScalarAction { mu })
    }

    pub fn mu(&self) -> &Gauss {
        &self.mu
    }

    /// `Z' = μ·Z`.
    pub fn apply(&self, z: &CentralCharge) -> CentralCharge {
        z.scaled(&self.mu)
    }
}

/// Whether `Im Z(e_i) > 0` for every vertex: the complexified fundamental
/// chamber.
pub fn in_fundamental(d: &Diagram, z: &CentralCharge) -> Result<bool> {
    check_dim(d.size(), z.len())?;
    Ok(z.iter().all(|v| v.im.is_positive()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gauss::{int, rat};
    use crate::weylbraid::{word_to_matrix, BraidWord};

    fn d(s: &str) -> Diagram {
        s.parse().unwrap()
    }

    #[test]
    fn evaluation() {
        let z = CentralCharge::standard(2);
        assert_eq!(evaluate(&z, &[1, 1]).unwrap(), Gauss::from_ints(0, 2));
        let z = CentralCharge::new(vec![Gauss::i(), Gauss::one()]);
        assert_eq!(evaluate(&z, &[1, 1]).unwrap(), Gauss::from_ints(1, 1));
        assert!(evaluate(&z, &[0, 0]).unwrap().is_zero());
        assert!(evaluate(&z, &[1]).is_err());
    }

    #[test]
    fn weyl_action() {
        let a2 = d("A2");
        let z = CentralCharge::standard(2);
        let s1 = word_to_matrix(&a2, &BraidWord::parse_signed(&a2, &[1]).unwrap()).unwrap();
        let once = act_weyl(&s1, &z).unwrap();
        assert_eq!(
            once,
            CentralCharge::new(vec![Gauss::from_ints(0, -1), Gauss::from_ints(0, 2)])
        );
        assert_eq!(act_weyl(&s1, &once).unwrap(), z);
        let id = WeylMatrix::identity(2);
        assert_eq!(act_weyl(&id, &z).unwrap(), z);
    }

    #[test]
    fn fundamental_chamber() {
        assert!(in_fundamental(&d("A3"), &CentralCharge::standard(3)).unwrap());
        let z = CentralCharge::new(vec![Gauss::i(), Gauss::real(rat(1, 2))]);
        assert!(!in_fundamental(&d("A2"), &z).unwrap());
        let z = CentralCharge::new(vec![Gauss::i(), Gauss::real(int(1))]);
        assert!(!in_fundamental(&d("A1~"), &z).unwrap());
        assert!(ScalarAction::new(Gauss::zero()).is_err());
    }
}
