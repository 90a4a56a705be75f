use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::lift::{lift_with_retries, ChargePath, Crossed};
use super::state::{initial_state, CoverState, Direction};
use crate::charges::{act_weyl, evaluate_unchecked, CentralCharge, ScalarAction};
use crate::diagrams::Diagram;
use crate::error::{Error, Result};
use crate::gauss::{int, Gauss, Rational};
use crate::rootsys::{is_regular, positive_roots};
use crate::weylbraid::{word_to_matrix, BraidWord, Letter};

/// Result of moving a regular charge back to the closed fundamental chamber.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Normalization {
    /// Exact rescaling applied first.
    pub scalar: Gauss,
    /// Crossings met on the way from `μZ` to the chamber target.
    pub word: BraidWord,
    /// The chamber target reached at the end.
    pub target: CentralCharge,
}

/// `Z*` for `d`: `(i, …, i)` for finite diagrams, `Z*(e_j) = i/(m_j·r)`
/// for affine ones (`r` vertices), so that `Z*(δ) = i`.
pub fn normalization_target(d: &Diagram) -> Result<CentralCharge> {
    if !d.is_affine() {
        return Ok(CentralCharge::standard(d.size()));
    }
    let marks = d.delta()?;
    let r = d.size() as i64;
    Ok(CentralCharge(
        marks
            .as_slice()
            .iter()
            .map(|&m| Gauss::new(int(0), Rational::new(1.into(), (m * r).into())))
            .collect(),
    ))
}

/// Rational directions `a + bi` with `|a|, |b| ≤ 8`, nearest to 1 first.
fn scalar_fan() -> Vec<Gauss> {
    let mut pts: Vec<(i64, i64)> = Vec::new();
    for a in -8i64..=8 {
        for b in -8i64..=8 {
            if num_integer::gcd(a, b) == 1 {
                pts.push((a, b));
            }
        }
    }
    // Order by the angle away from the positive real axis, then by size.
    pts.sort_by_key(|&(a, b)| {
        (
            a < 0,
            b.abs() * 16 / (a.abs() + b.abs()),
            a.abs() + b.abs(),
            b < 0,
        )
    });
    pts.into_iter()
        .map(|(a, b)| Gauss::from_ints(a, b))
        .collect()
}

/// Whether `w` is off every wall: no root has a real charge. For affine
/// diagrams with `Im w(δ) > 0` this means `Im w(α) / Im w(δ)` is not an
/// integer for any finite root `α`.
fn off_walls(d: &Diagram, w: &CentralCharge) -> Result<bool> {
    if !d.is_affine() {
        return Ok(positive_roots(d)?
            .iter()
            .all(|a| !evaluate_unchecked(w, a).im.is_zero()));
    }
    let w_delta = evaluate_unchecked(w, d.delta()?.as_slice());
    if !w_delta.im.is_positive() {
        return Ok(false);
    }
    for alpha in positive_roots(&d.finite_part())? {
        let mut v = vec![0; d.size()];
        v[1..].copy_from_slice(&alpha);
        if (evaluate_unchecked(w, &v).im / &w_delta.im).is_integer() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn choose_scalar(d: &Diagram, z: &CentralCharge) -> Result<Gauss> {
    let candidates: Vec<Gauss> = if d.is_affine() {
        let z_delta = evaluate_unchecked(z, d.delta()?.as_slice());
        let base = Gauss::i()
            .checked_div(&z_delta)
            .ok_or_else(|| Error::invalid("charge vanishes on the imaginary root"))?;
        // Small rotations of the slice scalar; Im μZ(δ) stays 1.
        (0..64)
            .map(|k| if k % 2 == 0 { k / 2 } else { -(k + 1) / 2 })
            .map(|k| &base * &Gauss::new(int(1), Rational::new(k.into(), 16.into())))
            .collect()
    } else {
        scalar_fan()
    };
    for mu in candidates {
        if off_walls(d, &z.scaled(&mu))? {
            return Ok(mu);
        }
    }
    Err(Error::NonGenericPath(
        "no candidate scalar moves the charge off every wall".into(),
    ))
}

/// Finds a scalar `μ` and a braid word taking `Z` into the closed chamber.
///
/// The chamber target is joined to `μZ` by a straight path (jittered at an
/// added midpoint when not generic) and lifted from the chamber state; the
/// reverse of that path is then lifted back, and its crossings form the
/// returned word. Returns the normalization together with the final state,
/// which is checked to sit over the target with standard classes and
/// uniform ledgers.
pub fn normalize(d: &Diagram, z: &CentralCharge) -> Result<(Normalization, CoverState)> {
    let reg = is_regular(d, z)?;
    if !reg.regular {
        return Err(Error::invalid(format!(
            "charge is not regular; it vanishes on {}",
            reg.witness.expect("witness")
        )));
    }
    let mu = choose_scalar(d, z)?;
    let scaled = ScalarAction::new(mu.clone())?.apply(z);
    let target = normalization_target(d)?;
    let start = initial_state(d, &target)?;

    let mid = CentralCharge::lerp(&target, &scaled, &Rational::new(1.into(), 2.into()));
    let outward = ChargePath::new(vec![target.clone(), mid, scaled.clone()])?;
    let scale = target
        .iter()
        .chain(scaled.iter())
        .map(Gauss::l1)
        .max()
        .expect("nonempty");
    let (reached, _, used) = lift_with_retries(&start, &outward, &(scale / int(4)))?;

    let (home, events) = super::lift::lift_path(&reached, &used.reversed())?;
    if !home.has_standard_classes() || !home.has_uniform_ledgers() {
        return Err(Error::Invariant(
            "normalization did not return to the standard heart".into(),
        ));
    }
    let mut letters = Vec::with_capacity(events.len());
    for e in &events {
        let Crossed::Slot(i) = e.slot else {
            return Err(Error::NonGenericPath(
                "normalization path passes through a real charge".into(),
            ));
        };
        let l = Letter::pos(d.label_of(i));
        letters.push(if e.direction == Direction::Ascending {
            l
        } else {
            l.inverse()
        });
    }
    let word = BraidWord(letters);
    Ok((
        Normalization {
            scalar: mu,
            word,
            target,
        },
        home,
    ))
}

/// Applies the scalar and then the Weyl element of the word to `z`. For a
/// valid normalization the result lies in the fundamental chamber.
pub fn replay(d: &Diagram, z: &CentralCharge, n: &Normalization) -> Result<CentralCharge> {
    let scaled = z.scaled(&n.scalar);
    act_weyl(&word_to_matrix(d, &n.word)?, &scaled)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charges::in_fundamental;
    use crate::gauss::rat;

    fn d(s: &str) -> Diagram {
        s.parse().unwrap()
    }

    #[test]
    fn chamber_charge_needs_nothing() {
        let a2 = d("A2");
        let z = CentralCharge::new(vec![Gauss::from_ints(3, 1), Gauss::new(rat(-1, 2), int(2))]);
        let (n, home) = normalize(&a2, &z).unwrap();
        assert_eq!(n.scalar, Gauss::one());
        assert!(n.word.is_empty());
        assert_eq!(home.ledgers(), vec![0, 0]);
    }

    #[test]
    fn reflected_charge_needs_one_letter() {
        let a2 = d("A2");
        let z = CentralCharge::new(vec![Gauss::from_ints(0, -1), Gauss::from_ints(0, 2)]);
        let (n, home) = normalize(&a2, &z).unwrap();
        assert_eq!(n.word.len(), 1);
        assert_eq!(n.word.letters()[0].vertex, 1);
        assert!(home.has_standard_classes());
        assert!(in_fundamental(&a2, &replay(&a2, &z, &n).unwrap()).unwrap());
    }

    #[test]
    fn affine_a1_replays_into_chamber() {
        let a1t = d("A1~");
        let z = CentralCharge::new(vec![Gauss::from_ints(0, 2), Gauss::from_ints(-1, 1)]);
        let (n, _) = normalize(&a1t, &z).unwrap();
        let back = replay(&a1t, &z, &n).unwrap();
        assert!(in_fundamental(&a1t, &back).unwrap());
        assert_eq!(evaluate_unchecked(&back, &[1, 1]), Gauss::i());
    }

    #[test]
    fn affine_target_has_unit_delta() {
        for name in ["A1~", "D4~", "E6~"] {
            let dd = d(name);
            let t = normalization_target(&dd).unwrap();
            assert_eq!(
                evaluate_unchecked(&t, dd.delta().unwrap().as_slice()),
                Gauss::i()
            );
        }
    }
}
