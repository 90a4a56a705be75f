//! Root lattices, reflections and regularity of central charges.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::ops::{Deref, DerefMut};

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::charges::{evaluate, CentralCharge};
use crate::diagrams::Diagram;
use crate::error::{check_dim, Error, Result};

/// A class in the Grothendieck group, in the basis of simple classes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ClassVector(pub Vec<i64>);

impl ClassVector {
    pub fn zero(n: usize) -> Self {
        ClassVector(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        ClassVector(v)
    }

    pub fn neg(&self) -> Self {
        ClassVector(self.0.iter().map(|x| -x).collect())
    }

    /// `self + k·other`.
    pub fn add_scaled(&self, k: i64, other: &ClassVector) -> Self {
        ClassVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + k * b)
                .collect(),
        )
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&x| x >= 0) && self.0.iter().any(|&x| x > 0)
    }
}

impl Deref for ClassVector {
    type Target = Vec<i64>;
    fn deref(&self) -> &Vec<i64> {
        &self.0
    }
}

impl DerefMut for ClassVector {
    fn deref_mut(&mut self) -> &mut Vec<i64> {
        &mut self.0
    }
}

impl From<Vec<i64>> for ClassVector {
    fn from(v: Vec<i64>) -> Self {
        ClassVector(v)
    }
}

impl fmt::Display for ClassVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// The Euler form `xᵀ E y`.
pub fn euler_form(d: &Diagram, x: &[i64], y: &[i64]) -> Result<i64> {
    check_dim(d.size(), x.len())?;
    check_dim(d.size(), y.len())?;
    Ok(euler_unchecked(d, x, y))
}

pub(crate) fn euler_unchecked(d: &Diagram, x: &[i64], y: &[i64]) -> i64 {
    let e = d.euler_matrix();
    let mut acc = 0;
    for (i, &xi) in x.iter().enumerate() {
        if xi == 0 {
            continue;
        }
        for (j, &yj) in y.iter().enumerate() {
            acc += xi * e[i][j] * yj;
        }
    }
    acc
}

/// Reflection of `v` in the spherical class `s`: `v − χ(s, v)·s`.
pub fn reflect(d: &Diagram, s: &ClassVector, v: &ClassVector) -> Result<ClassVector> {
    let ss = euler_form(d, s, s)?;
    if ss != 2 {
        return Err(Error::invalid(format!(
            "χ(s, s) = {ss} for s = {s}; reflections need a spherical class"
        )));
    }
    let k = euler_form(d, s, v)?;
    Ok(v.add_scaled(-k, s))
}

/// All roots of a finite diagram, as the closure of `±e_i` under simple
/// reflections. Sorted by height, then lexicographically.
pub fn enumerate_roots(d: &Diagram) -> Result<Vec<ClassVector>> {
    if d.is_affine() {
        return Err(Error::invalid(format!(
            "{d} is affine and has infinitely many roots; use AffineRootView"
        )));
    }
    let n = d.size();
    let simples: Vec<ClassVector> = (0..n).map(|i| ClassVector::unit(n, i)).collect();
    let mut seen: BTreeSet<ClassVector> = BTreeSet::new();
    let mut queue: VecDeque<ClassVector> = VecDeque::new();
    for s in &simples {
        for v in [s.clone(), s.neg()] {
            if seen.insert(v.clone()) {
                queue.push_back(v);
            }
        }
    }
    while let Some(v) = queue.pop_front() {
        for s in &simples {
            let w = v.add_scaled(-euler_unchecked(d, s, &v), s);
            if seen.insert(w.clone()) {
                queue.push_back(w);
            }
        }
    }
    let mut roots: Vec<ClassVector> = seen.into_iter().collect();
    roots.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.cmp(b)));
    Ok(roots)
}

pub fn positive_roots(d: &Diagram) -> Result<Vec<ClassVector>> {
    Ok(enumerate_roots(d)?
        .into_iter()
        .filter(ClassVector::is_positive)
        .collect())
}

/// Decomposition of an affine class as `α + dδ`, with `α` supported on the
/// finite vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineRootView {
    /// Finite part, indexed by the finite vertices `1..=n`.
    pub finite: ClassVector,
    /// Coefficient of `δ`.
    pub d: i64,
    /// `χ(v, v)`.
    pub norm: i64,
}

impl AffineRootView {
    pub fn new(diagram: &Diagram, v: &ClassVector) -> Result<Self> {
        let marks = diagram.delta()?;
        check_dim(diagram.size(), v.len())?;
        // δ has entry 1 at the extending vertex.
        let d = v[0];
        let finite = ClassVector(
            v.iter()
                .zip(marks.as_slice())
                .skip(1)
                .map(|(x, m)| x - d * m)
                .collect(),
        );
        let norm = euler_unchecked(diagram, v, v);
        Ok(AffineRootView { finite, d, norm })
    }

    pub fn is_real_root(&self) -> bool {
        self.norm == 2
    }

    pub fn is_imaginary_root(&self) -> bool {
        self.d != 0 && self.finite.iter().all(|&x| x == 0)
    }

    /// Reassembles `α + dδ` as a class vector of the affine diagram.
    pub fn to_class(&self, diagram: &Diagram) -> Result<ClassVector> {
        let marks = diagram.delta()?;
        let mut v = vec![self.d];
        v.extend(
            self.finite
                .iter()
                .zip(&marks.0[1..])
                .map(|(a, m)| a + self.d * m),
        );
        Ok(ClassVector(v))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Regularity {
    pub regular: bool,
    /// A root on which the charge vanishes.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<ClassVector>,
}

impl Regularity {
    fn regular() -> Self {
        Regularity {
            regular: true,
            witness: None,
        }
    }

    fn vanishes_on(v: ClassVector) -> Self {
        Regularity {
            regular: false,
            witness: Some(v),
        }
    }
}

/// Decides whether `z` vanishes on no root.
///
/// Finite diagrams: direct check over the positive roots. Affine diagrams:
/// `Z(δ) ≠ 0` and, for every positive finite root `α`, `Z(α)/Z(δ)` is not an
/// integer; `Z(α + dδ) = 0` for some `d` exactly when it is.
pub fn is_regular(d: &Diagram, z: &CentralCharge) -> Result<Regularity> {
    check_dim(d.size(), z.len())?;
    if !d.is_affine() {
        for alpha in positive_roots(d)? {
            if evaluate(z, &alpha)?.is_zero() {
                return Ok(Regularity::vanishes_on(alpha));
            }
        }
        return Ok(Regularity::regular());
    }
    let marks = d.delta()?;
    let delta = ClassVector(marks.0.clone());
    let z_delta = evaluate(z, &delta)?;
    if z_delta.is_zero() {
        return Ok(Regularity::vanishes_on(delta));
    }
    for alpha in positive_roots(&d.finite_part())? {
        let mut embedded = vec![0];
        embedded.extend(alpha.iter().copied());
        let embedded = ClassVector(embedded);
        let q = evaluate(z, &embedded)?
            .checked_div(&z_delta)
            .expect("Z(δ) is nonzero");
        if let Some(k) = q.as_integer() {
            let k = overflow_checked(&k)?;
            // Z(α − kδ) = 0.
            return Ok(Regularity::vanishes_on(embedded.add_scaled(-k, &delta)));
        }
    }
    Ok(Regularity::regular())
}

fn overflow_checked(k: &BigInt) -> Result<i64> {
    k.to_i64()
        .ok_or_else(|| Error::invalid("vanishing root has an imaginary coefficient beyond i64"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gauss::Gauss;

    fn d(s: &str) -> Diagram {
        s.parse().unwrap()
    }

    fn cv(v: &[i64]) -> ClassVector {
        ClassVector(v.to_vec())
    }

    #[test]
    fn euler_form_values() {
        let a2 = d("A2");
        assert_eq!(euler_form(&a2, &[1, 0], &[1, 0]).unwrap(), 2);
        assert_eq!(euler_form(&a2, &[1, 0], &[0, 1]).unwrap(), -1);
        assert_eq!(euler_form(&d("A1~"), &[1, 1], &[1, 0]).unwrap(), 0);
        assert!(euler_form(&a2, &[1], &[1, 0]).is_err());
    }

    #[test]
    fn reflections() {
        let a2 = d("A2");
        assert_eq!(
            reflect(&a2, &cv(&[1, 0]), &cv(&[0, 1])).unwrap(),
            cv(&[1, 1])
        );
        assert_eq!(
            reflect(&a2, &cv(&[1, 1]), &cv(&[1, 1])).unwrap(),
            cv(&[-1, -1])
        );
        let a1t = d("A1~");
        assert_eq!(
            reflect(&a1t, &cv(&[1, 0]), &cv(&[1, 1])).unwrap(),
            cv(&[1, 1])
        );
        assert!(reflect(&a1t, &cv(&[1, 1]), &cv(&[1, 0])).is_err());
    }

    #[test]
    fn root_counts() {
        assert_eq!(
            enumerate_roots(&d("A1")).unwrap(),
            vec![cv(&[-1]), cv(&[1])]
        );
        assert_eq!(enumerate_roots(&d("A2")).unwrap().len(), 6);
        assert_eq!(enumerate_roots(&d("E6")).unwrap().len(), 72);
        assert!(enumerate_roots(&d("A2~")).is_err());
    }

    #[test]
    fn affine_view() {
        let dt = d("D4~");
        let v = AffineRootView::new(&dt, &cv(&[1, 1, 2, 1, 1])).unwrap();
        assert!(v.is_imaginary_root());
        assert_eq!(v.norm, 0);
        let r = AffineRootView::new(&dt, &cv(&[1, 1, 3, 1, 1])).unwrap();
        assert!(r.is_real_root());
        assert_eq!(r.finite, cv(&[0, 1, 0, 0]));
        assert_eq!(r.to_class(&dt).unwrap(), cv(&[1, 1, 3, 1, 1]));
    }

    #[test]
    fn regularity_examples() {
        let a2 = d("A2");
        let z = CentralCharge::new(vec![Gauss::i(), Gauss::i()]);
        assert!(is_regular(&a2, &z).unwrap().regular);
        let z = CentralCharge::new(vec![Gauss::from_ints(1, 0), Gauss::from_ints(-1, 0)]);
        assert_eq!(is_regular(&a2, &z).unwrap().witness, Some(cv(&[1, 1])));

        let a1t = d("A1~");
        let z = CentralCharge::new(vec![Gauss::i(), Gauss::one()]);
        assert!(is_regular(&a1t, &z).unwrap().regular);
        let z = CentralCharge::new(vec![Gauss::from_ints(1, 1), Gauss::from_ints(-1, -1)]);
        assert_eq!(is_regular(&a1t, &z).unwrap().witness, Some(cv(&[1, 1])));
        // Z(e_1) = 3·Z(δ) vanishes on e_1 − 3δ.
        let z = CentralCharge::new(vec![Gauss::from_ints(-2, 0), Gauss::from_ints(3, 0)]);
        let w = is_regular(&a1t, &z).unwrap().witness.unwrap();
        assert_eq!(w, cv(&[-3, -2]));
        assert!(evaluate(&z, &w).unwrap().is_zero());
    }
}
