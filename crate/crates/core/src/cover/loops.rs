use num_traits::Signed;
use serde::{Deserialize, Serialize};

use super::lift::{is_non_generic, lift_path, lift_with_retries, ChargePath, Crossed, MAX_RETRIES};
use super::state::{initial_state, CoverState, Direction};
use crate::charges::{act_weyl, evaluate_unchecked, CentralCharge};
use crate::diagrams::Diagram;
use crate::error::{Error, Result};
use crate::gauss::{int, rat, Gauss, Rational};
use crate::linalg::{from_columns, integer_inverse, IntMatrix};
use crate::weylbraid::{matrix_order, word_to_matrix, BraidWord, Sign, WeylMatrix};

/// Lifts `turns` full turns of the scalar loop `1 → −i → −1 → i → 1`
/// (clockwise; counter-clockwise for negative `turns`) applied to the
/// charge of `state`.
///
/// The exact polygon is tried first. When all slots share one phase (as
/// for the standard charge) they reach the real axis together and the lift
/// records whole-heart shifts. Otherwise finite diagrams retry with
/// jittered interior vertices. Affine diagrams cannot: `Z(δ)` becomes real
/// twice per turn and walls accumulate there unless the whole charge is
/// real at that moment. They use the freely homotopic loop that first
/// moves straight to the charge with `Z(c_t) = i` on the current simples
/// (crossing no wall), turns there, and comes back.
pub fn rotate_loop(state: &CoverState, turns: i64) -> Result<CoverState> {
    if turns == 0 {
        return Err(Error::invalid("turns must be nonzero"));
    }
    let path = scalar_polygon(state.charge(), turns)?;
    let err = match lift_path(state, &path) {
        Ok((out, _)) => return Ok(out),
        Err(e) if is_non_generic(&e) => e,
        Err(e) => return Err(e),
    };
    if !state.diagram().is_affine() {
        let (out, _, _) = lift_with_retries(state, &path, &jitter_scale(state))?;
        return Ok(out);
    }
    let uniform = uniform_charge(state)?;
    if &uniform == state.charge() {
        return Err(err);
    }
    let there = ChargePath::new(vec![state.charge().clone(), uniform.clone()])?;
    let full = there
        .concat(&scalar_polygon(&uniform, turns)?)?
        .concat(&there.reversed())?;
    let (out, _) = lift_path(state, &full)?;
    Ok(out)
}

fn scalar_polygon(z: &CentralCharge, turns: i64) -> Result<ChargePath> {
    let quarter = if turns > 0 {
        Gauss::from_ints(0, -1)
    } else {
        Gauss::i()
    };
    let mut vertices = vec![z.clone()];
    let mut mu = Gauss::one();
    for _ in 0..turns.unsigned_abs() * 4 {
        mu = &mu * &quarter;
        vertices.push(z.scaled(&mu));
    }
    ChargePath::new(vertices)
}

/// The charge with `Z(c_t) = i` on every simple class of `state`.
fn uniform_charge(state: &CoverState) -> Result<CentralCharge> {
    let cols: Vec<Vec<i64>> = state.classes().iter().map(|c| c.0.clone()).collect();
    let inv = integer_inverse(&from_columns(&cols))
        .ok_or_else(|| Error::Invariant("simple classes are not a basis".into()))?;
    let n = cols.len();
    Ok(CentralCharge(
        (0..n)
            .map(|j| Gauss::new(int(0), int((0..n).map(|t| inv[t][j]).sum())))
            .collect(),
    ))
}

/// A jitter size well below the smallest slot charge.
fn jitter_scale(state: &CoverState) -> Rational {
    let min = state
        .slots()
        .iter()
        .map(|s| evaluate_unchecked(state.charge(), &s.class).l1())
        .min()
        .unwrap_or_else(|| int(1));
    let max_coeff = state
        .slots()
        .iter()
        .flat_map(|s| s.class.iter().map(|x| x.abs()))
        .max()
        .unwrap_or(1);
    min / int(16 * (state.slots().len() as i64 + 1) * max_coeff)
}

/// Waypoint of the dip for `letter` starting at `p`: the crossed coordinate
/// moves to `∓1 + ½·Im P(e_s)·i`, the others stay.
fn dip_waypoint(p: &CentralCharge, index: usize, sign: Sign, nudge: &Rational) -> CentralCharge {
    let mut w = p.clone();
    let re = match sign {
        Sign::Pos => int(-1),
        Sign::Neg => int(1),
    };
    w.0[index] = Gauss::new(re + nudge, &p[index].im * rat(1, 2) + nudge);
    w
}

/// Builds a loop in the charge space (closed up to the Weyl group) whose
/// lift from the chamber state at `base` realizes `w`.
///
/// Letters are processed first to last, each as a two-segment dip across
/// the wall of one slot, transported by the Weyl element accumulated so
/// far. The resulting event log is `w` itself, letter for letter.
pub fn loop_from_word(d: &Diagram, w: &BraidWord, base: &CentralCharge) -> Result<ChargePath> {
    w.validate(d)?;
    let start = initial_state(d, base)?;
    if w.is_empty() {
        return Ok(ChargePath::constant(base));
    }
    let mut nudge = Rational::from_integer(0.into());
    let mut last_err = None;
    for attempt in 0..=MAX_RETRIES {
        if attempt > 0 {
            nudge = rat(1, 1 << (attempt + 2));
        }
        let path = build_dips(d, w, base, &nudge)?;
        match validate_dips(&start, &path, w) {
            Ok(()) => return Ok(path),
            Err(e) => last_err = Some(e),
        }
    }
    Err(Error::NonGenericPath(format!(
        "could not realize {w} as a generic loop: {}",
        last_err.map(|e| e.to_string()).unwrap_or_default()
    )))
}

fn build_dips(
    d: &Diagram,
    w: &BraidWord,
    base: &CentralCharge,
    nudge: &Rational,
) -> Result<ChargePath> {
    let mut acc = WeylMatrix::identity(d.size());
    let mut vertices = vec![base.clone()];
    for l in w.letters() {
        let i = d.index_of(l.vertex)?;
        let s = WeylMatrix::simple_reflection(d, i);
        vertices.push(act_weyl(&acc, &dip_waypoint(base, i, l.sign, nudge))?);
        acc = acc.mul(&s);
        vertices.push(act_weyl(&acc, base)?);
    }
    ChargePath::new(vertices)
}

fn validate_dips(start: &CoverState, path: &ChargePath, w: &BraidWord) -> Result<()> {
    let (_, events) = lift_path(start, path)?;
    let d = start.diagram();
    if events.len() != w.len() {
        return Err(Error::NonGenericPath(format!(
            "{} events for {} letters",
            events.len(),
            w.len()
        )));
    }
    for (k, (e, l)) in events.iter().zip(w.letters()).enumerate() {
        let want = match l.sign {
            Sign::Pos => Direction::Ascending,
            Sign::Neg => Direction::Descending,
        };
        let slot_ok = matches!(e.slot, Crossed::Slot(i) if d.label_of(i) == l.vertex);
        if e.segment != 2 * k + 1 || !slot_ok || e.direction != want {
            return Err(Error::NonGenericPath(format!(
                "dip {k} did not cross the wall of {l}"
            )));
        }
    }
    Ok(())
}

/// The deck transformation induced by a braid word.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeckTransform {
    /// The event log of the lifted loop.
    pub word: BraidWord,
    /// Classes of the final simples as columns.
    pub k_matrix: IntMatrix,
    pub ledger_delta: Vec<i64>,
    /// Standard classes and uniform ledgers: the transform acts as a shift.
    pub pure_shift: bool,
}

impl DeckTransform {
    /// The shift `[m]` when the transform is pure.
    pub fn shift(&self) -> Option<i64> {
        self.pure_shift
            .then(|| self.ledger_delta.first().copied().unwrap_or(0))
    }
}

/// Lifts the loop of `w` from the standard chamber state and reads off the
/// deck transformation.
pub fn monodromy(d: &Diagram, w: &BraidWord) -> Result<DeckTransform> {
    let base = CentralCharge::standard(d.size());
    let path = loop_from_word(d, w, &base)?;
    let start = initial_state(d, &base)?;
    let (end, _) = lift_path(&start, &path)?;
    let expected = word_to_matrix(d, w)?;
    let k = WeylMatrix::from_matrix(crate::linalg::from_columns(
        &end.classes()
            .iter()
            .map(|c| c.0.clone())
            .collect::<Vec<_>>(),
    ));
    if k != expected {
        return Err(Error::Invariant(format!(
            "monodromy of {w} disagrees with its Weyl matrix"
        )));
    }
    let ledger_delta: Vec<i64> = end.ledgers();
    Ok(DeckTransform {
        word: end.log().clone(),
        k_matrix: k.matrix().clone(),
        pure_shift: end.has_standard_classes() && end.has_uniform_ledgers(),
        ledger_delta,
    })
}

/// Monodromy of `c^h` for the Coxeter word `c = (1)(2)…(n)` of a finite
/// diagram, where `h` is the order of its Weyl matrix (the Coxeter number).
/// Returns `h` with the transform.
pub fn coxeter_monodromy(d: &Diagram) -> Result<(usize, DeckTransform)> {
    if d.is_affine() {
        return Err(Error::invalid(format!(
            "{d} is affine; its Coxeter element has infinite order"
        )));
    }
    let c = BraidWord::coxeter_element(d);
    let h = matrix_order(&word_to_matrix(d, &c)?, 4 * d.size() * d.size() + 4)
        .ok_or_else(|| Error::Invariant(format!("Coxeter element of {d} has no finite order")))?;
    Ok((h, monodromy(d, &c.repeat(h))?))
}

/// Whether the two words give loops with the same endpoint state.
pub fn same_monodromy(d: &Diagram, a: &BraidWord, b: &BraidWord) -> Result<bool> {
    let base = CentralCharge::standard(d.size());
    let start = initial_state(d, &base)?;
    let (ea, _) = lift_path(&start, &loop_from_word(d, a, &base)?)?;
    let (eb, _) = lift_path(&start, &loop_from_word(d, b, &base)?)?;
    Ok(ea == eb)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weylbraid::Letter;

    fn d(s: &str) -> Diagram {
        s.parse().unwrap()
    }

    fn word(dd: &Diagram, v: &[i64]) -> BraidWord {
        BraidWord::parse_signed(dd, v).unwrap()
    }

    #[test]
    fn single_letter_loop() {
        let a2 = d("A2");
        let base = CentralCharge::standard(2);
        let path = loop_from_word(&a2, &word(&a2, &[1]), &base).unwrap();
        let (_, events) = lift_path(&initial_state(&a2, &base).unwrap(), &path).unwrap();
        assert_eq!(events.len(), 1);
        assert_eq!(events[0].slot, Crossed::Slot(0));
        assert_eq!(events[0].direction, Direction::Ascending);
        assert_eq!(
            loop_from_word(&a2, &BraidWord::empty(), &base).unwrap(),
            ChargePath::constant(&base)
        );
    }

    #[test]
    fn coxeter_power_is_minus_two() {
        for (name, h) in [("A1", 2), ("A2", 3), ("A3", 4), ("D4", 6)] {
            let (got, m) = coxeter_monodromy(&d(name)).unwrap();
            assert_eq!(got, h);
            assert_eq!(m.shift(), Some(-2), "{name}");
        }
        assert!(coxeter_monodromy(&d("A2~")).is_err());
    }

    #[test]
    fn a1_square_is_shift_minus_two() {
        let a1 = d("A1");
        let m = monodromy(&a1, &word(&a1, &[1, 1])).unwrap();
        assert!(m.pure_shift);
        assert_eq!(m.ledger_delta, vec![-2]);
        assert_eq!(m.shift(), Some(-2));
    }

    #[test]
    fn empty_word_is_identity() {
        let m = monodromy(&d("D4"), &BraidWord::empty()).unwrap();
        assert!(m.pure_shift);
        assert_eq!(m.shift(), Some(0));
    }

    #[test]
    fn single_generator_is_one_shift_for_a1() {
        let a1 = d("A1");
        let m = monodromy(&a1, &BraidWord(vec![Letter::pos(1)])).unwrap();
        assert!(!m.pure_shift);
        assert_eq!(m.k_matrix, vec![vec![-1]]);
        assert_eq!(m.ledger_delta, vec![-1]);
    }

    #[test]
    fn rotation_adds_two() {
        for name in ["A1", "A2", "A1~", "A2~"] {
            let dd = d(name);
            let s = initial_state(&dd, &CentralCharge::standard(dd.size())).unwrap();
            let r = rotate_loop(&s, 1).unwrap();
            assert_eq!(r.classes(), s.classes(), "{name}");
            assert!(
                r.ledgers().iter().all(|&k| k == 2),
                "{name}: {:?}",
                r.ledgers()
            );
            let back = rotate_loop(&r, -1).unwrap();
            assert_eq!(back, s, "{name}");
        }
    }

    #[test]
    fn jittered_rotation_agrees_for_finite_types() {
        for name in ["A2", "A3", "D4"] {
            let dd = d(name);
            let s = initial_state(&dd, &CentralCharge::standard(dd.size())).unwrap();
            let exact = rotate_loop(&s, 1).unwrap();
            let mut vertices = vec![s.charge().clone()];
            let mut mu = Gauss::one();
            for _ in 0..4 {
                mu = &mu * &Gauss::from_ints(0, -1);
                vertices.push(s.charge().scaled(&mu));
            }
            let polygon = ChargePath::new(vertices).unwrap();
            let (out, events) = (1..=8)
                .find_map(|seed| lift_path(&s, &polygon.jittered(&rat(1, 64), seed)).ok())
                .expect("some jitter is generic");
            assert!(!events.is_empty() && events.iter().all(|e| e.slot != Crossed::All));
            assert_eq!(out, exact, "{name}");
        }
    }

    #[test]
    fn rotation_from_other_chambers() {
        for name in ["A2", "A1~", "A2~", "D4~"] {
            let dd = d(name);
            let n = dd.size();
            let s = CoverState::standard(&dd, CentralCharge::standard(n))
                .cross(0, Direction::Descending)
                .unwrap();
            // Prescribe Z(c_t) = (t − 1)/3 + (t + 2)/5 i on the crossed classes.
            let cols: Vec<Vec<i64>> = s.classes().iter().map(|c| c.0.clone()).collect();
            let inv = integer_inverse(&from_columns(&cols)).unwrap();
            let w: Vec<Gauss> = (0..n)
                .map(|t| Gauss::new(rat(t as i64 - 1, 3), rat(t as i64 + 2, 5)))
                .collect();
            let z = CentralCharge::new(
                (0..n)
                    .map(|j| (0..n).fold(Gauss::zero(), |acc, t| &acc + &w[t].scale_int(inv[t][j])))
                    .collect(),
            );
            assert!(crate::rootsys::is_regular(&dd, &z).unwrap().regular);
            let s = s.with_charge(z);
            s.check_invariants(None).unwrap();
            let r = rotate_loop(&s, 1).unwrap();
            assert_eq!(r.classes(), s.classes(), "{name}");
            assert!(
                r.ledgers().iter().zip(s.ledgers()).all(|(a, b)| a - b == 2),
                "{name}: {:?}",
                r.ledgers()
            );
            assert_eq!(rotate_loop(&r, -1).unwrap(), s, "{name}");
        }
    }

    #[test]
    fn affine_rotation_needs_a_real_charge() {
        let dd = d("A1~");
        let s = initial_state(&dd, &CentralCharge::standard(2)).unwrap();
        let mut vertices = vec![s.charge().clone()];
        let mut mu = Gauss::one();
        for _ in 0..4 {
            mu = &mu * &Gauss::from_ints(0, -1);
            vertices.push(s.charge().scaled(&mu));
        }
        let path = ChargePath::new(vertices).unwrap().jittered(&rat(1, 64), 7);
        assert!(matches!(
            lift_path(&s, &path),
            Err(Error::NonGenericPath(_))
        ));
    }
}
