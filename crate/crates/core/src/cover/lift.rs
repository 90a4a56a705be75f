use std::cmp::Ordering;

use num_traits::{Signed, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};

use super::state::{CoverState, Direction};
use crate::charges::{evaluate_unchecked, imag_unchecked, CentralCharge};
use crate::error::{check_dim, Error, Result};
use crate::gauss::{int, rat, Gauss, Rational};

/// A polyline of central charges, affine in the parameter on each segment.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ChargePath(Vec<CentralCharge>);

impl ChargePath {
    pub fn new(vertices: Vec<CentralCharge>) -> Result<Self> {
        if vertices.len() < 2 {
            return Err(Error::invalid("a charge path needs at least two vertices"));
        }
        let n = vertices[0].len();
        for v in &vertices {
            check_dim(n, v.len())?;
        }
        Ok(ChargePath(vertices))
    }

    /// The constant path sitting at `z`.
    pub fn constant(z: &CentralCharge) -> Self {
        ChargePath(vec![z.clone(), z.clone()])
    }

    pub fn vertices(&self) -> &[CentralCharge] {
        &self.0
    }

    pub fn start(&self) -> &CentralCharge {
        &self.0[0]
    }

    pub fn end(&self) -> &CentralCharge {
        self.0.last().expect("paths have at least two vertices")
    }

    pub fn segments(&self) -> usize {
        self.0.len() - 1
    }

    pub fn reversed(&self) -> ChargePath {
        ChargePath(self.0.iter().rev().cloned().collect())
    }

    /// This path followed by `other`, which must start where this one ends.
    pub fn concat(&self, other: &ChargePath) -> Result<ChargePath> {
        if self.end() != other.start() {
            return Err(Error::invalid("paths do not join up"));
        }
        let mut v = self.0.clone();
        v.extend(other.0.iter().skip(1).cloned());
        Ok(ChargePath(v))
    }

    /// Moves every interior vertex by `eps·(a + b i)` per coordinate with
    /// `a, b` pseudo-random rationals in `[−1, 1]`. Endpoints are never
    /// touched.
    pub fn jittered(&self, eps: &Rational, seed: u64) -> ChargePath {
        let mut rng = StdRng::seed_from_u64(seed);
        let last = self.0.len() - 1;
        let vertices = self
            .0
            .iter()
            .enumerate()
            .map(|(k, v)| {
                if k == 0 || k == last {
                    return v.clone();
                }
                CentralCharge(
                    v.iter()
                        .map(|z| {
                            let a = rat(rng.gen_range(-64..=64), 64);
                            let b = rat(rng.gen_range(-64..=64), 64);
                            z + &Gauss::new(a, b).scale(eps)
                        })
                        .collect(),
                )
            })
            .collect();
        ChargePath(vertices)
    }

    pub fn map(&self, f: impl Fn(&CentralCharge) -> CentralCharge) -> ChargePath {
        ChargePath(self.0.iter().map(f).collect())
    }
}

/// What a wall crossing acts on: a single slot, or every slot at once
/// (the whole heart is shifted). Serialized as the slot index or `"all"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Crossed {
    Slot(usize),
    All,
}

impl Serialize for Crossed {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Crossed::Slot(i) => s.serialize_u64(*i as u64),
            Crossed::All => s.serialize_str("all"),
        }
    }
}

impl<'de> Deserialize<'de> for Crossed {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Index(usize),
            Word(String),
        }
        match Raw::deserialize(d)? {
            Raw::Index(i) => Ok(Crossed::Slot(i)),
            Raw::Word(w) if w == "all" => Ok(Crossed::All),
            Raw::Word(w) => Err(serde::de::Error::custom(format!("unknown slot {w:?}"))),
        }
    }
}

/// A wall crossing met while lifting a path.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Event {
    pub segment: usize,
    #[serde(with = "crate::gauss::rational_str")]
    pub time: Rational,
    /// Slot index (not label), or every slot.
    pub slot: Crossed,
    pub direction: Direction,
}

/// Lifts `path` from `state`, crossing walls as they are met.
pub fn lift_path(state: &CoverState, path: &ChargePath) -> Result<(CoverState, Vec<Event>)> {
    lift_path_observed(state, path, |_, _| {})
}

/// [`lift_path`] with a callback run after every event on the new state.
///
/// On each segment the imaginary part of `Z_t(c_s)` is affine in `t`, so
/// the next wall is the smallest exact root among the current slots. After
/// every crossing the pending roots are recomputed for the new classes.
///
/// When every slot reaches the same real half-axis at once the charge is
/// real there and the whole heart is shifted. For affine diagrams a segment
/// on which `Z(δ)` becomes real anywhere else is rejected: walls accumulate
/// towards that point and no finite sequence of crossings reaches it.
pub fn lift_path_observed(
    state: &CoverState,
    path: &ChargePath,
    mut observe: impl FnMut(&Event, &CoverState),
) -> Result<(CoverState, Vec<Event>)> {
    let d = state.diagram.clone();
    let n = d.size();
    check_dim(n, path.start().len())?;
    if path.start() != &state.charge {
        return Err(Error::invalid(
            "path does not start at the charge of the state",
        ));
    }
    state.check_invariants(None)?;
    let delta = if d.is_affine() {
        Some(d.delta()?)
    } else {
        None
    };
    let mut current = state.clone();
    let mut events = Vec::new();
    let one = int(1);
    // Set when the previous segment ended with every slot on the real axis.
    let mut pending: Option<Direction> = None;
    let last_segment = path.segments() - 1;
    for (segment, pair) in path.vertices().windows(2).enumerate() {
        let (a, b) = (&pair[0], &pair[1]);
        let mut t_now = Rational::zero();
        let mut on_wall = vec![false; n];
        if let Some(direction) = pending.take() {
            // Every Im Z_a(c_t) is zero, so the slope on this segment is Im Z_b(c_t).
            let slopes: Vec<Rational> = current
                .slots
                .iter()
                .map(|s| imag_unchecked(b, &s.class))
                .collect();
            if slopes.iter().all(|x| x.is_negative()) {
                current = current.cross_all(direction).with_charge(a.clone());
                on_wall = vec![true; n];
                current.check_invariants_on_walls(&on_wall)?;
                let event = Event {
                    segment,
                    time: Rational::zero(),
                    slot: Crossed::All,
                    direction,
                };
                observe(&event, &current);
                events.push(event);
            } else if slopes.iter().all(|x| x.is_positive()) {
                on_wall = vec![true; n];
            } else {
                return Err(Error::NonGenericPath(format!(
                    "the path leaves the real charge at vertex {segment} in a degenerate direction"
                )));
            }
        }
        loop {
            if let Some(delta) = &delta {
                check_no_accumulation(a, b, delta.as_slice(), &t_now, segment)?;
            }
            let mut best: Option<Rational> = None;
            let mut hits: Vec<usize> = Vec::new();
            for (t, slot) in current.slots.iter().enumerate() {
                let ia = imag_unchecked(a, &slot.class);
                let ib = imag_unchecked(b, &slot.class);
                if on_wall[t] {
                    if (&ib - &ia).is_positive() {
                        continue;
                    }
                    return Err(Error::Invariant(
                        "crossed slot does not re-enter the upper half-plane".into(),
                    ));
                }
                if ib.is_positive() {
                    continue;
                }
                let root = if ib.is_zero() {
                    one.clone()
                } else {
                    &ia / (&ia - &ib)
                };
                if root <= t_now {
                    return Err(Error::Invariant(format!(
                        "slot {t} is not in the upper half-plane"
                    )));
                }
                match best.as_ref().map(|r| root.cmp(r)) {
                    None | Some(Ordering::Less) => {
                        best = Some(root);
                        hits = vec![t];
                    }
                    Some(Ordering::Equal) => hits.push(t),
                    Some(Ordering::Greater) => {}
                }
            }
            let Some(time) = best else { break };
            let z_event = CentralCharge::lerp(a, b, &time);
            let directions: Vec<Option<Direction>> = hits
                .iter()
                .map(|&t| direction_of(&evaluate_unchecked(&z_event, &current.slots[t].class).re))
                .collect();
            let at_vertex = time == one;
            if hits.len() == n
                && n > 1
                && directions
                    .iter()
                    .all(|x| x.is_some() && *x == directions[0])
            {
                let direction = directions[0].expect("checked above");
                if at_vertex {
                    if segment == last_segment {
                        return Err(Error::NonGenericEndpoint(
                            "the path ends on a real charge".into(),
                        ));
                    }
                    pending = Some(direction);
                    break;
                }
                current = current.cross_all(direction).with_charge(z_event);
                on_wall = vec![true; n];
                current.check_invariants_on_walls(&on_wall)?;
                let event = Event {
                    segment,
                    time: time.clone(),
                    slot: Crossed::All,
                    direction,
                };
                observe(&event, &current);
                events.push(event);
                t_now = time;
                continue;
            }
            if at_vertex {
                return Err(Error::NonGenericEndpoint(format!(
                    "vertex {} of the path lies on the wall of slot {}",
                    segment + 1,
                    hits[0]
                )));
            }
            if hits.len() > 1 {
                return Err(Error::NonGenericPath(format!(
                    "{} walls are crossed simultaneously on segment {segment} at t = {time}",
                    hits.len()
                )));
            }
            let slot = hits[0];
            let Some(direction) = directions[0] else {
                return Err(Error::NonGenericPath(format!(
                    "segment {segment} passes through a non-regular charge at t = {time}"
                )));
            };
            current = current.cross(slot, direction)?.with_charge(z_event);
            on_wall = (0..n).map(|t| t == slot).collect();
            current.check_invariants_on_walls(&on_wall)?;
            let event = Event {
                segment,
                time: time.clone(),
                slot: Crossed::Slot(slot),
                direction,
            };
            observe(&event, &current);
            events.push(event);
            t_now = time;
        }
        current.charge = b.clone();
    }
    current.check_invariants(None)?;
    current.verify_log()?;
    Ok((current, events))
}

fn direction_of(re: &Rational) -> Option<Direction> {
    if re.is_negative() {
        Some(Direction::Ascending)
    } else if re.is_positive() {
        Some(Direction::Descending)
    } else {
        None
    }
}

/// Rejects a segment on which `Im Z(δ)` vanishes after `t_now` at a charge
/// that is not entirely real.
fn check_no_accumulation(
    a: &CentralCharge,
    b: &CentralCharge,
    delta: &[i64],
    t_now: &Rational,
    segment: usize,
) -> Result<()> {
    let ia = evaluate_unchecked(a, delta).im;
    let ib = evaluate_unchecked(b, delta).im;
    if ia == ib {
        return Ok(());
    }
    let tau = &ia / (&ia - &ib);
    if tau <= *t_now || tau > int(1) {
        return Ok(());
    }
    let z = CentralCharge::lerp(a, b, &tau);
    if z.iter().all(|x| x.im.is_zero()) {
        return Ok(());
    }
    Err(Error::NonGenericPath(format!(
        "the imaginary root's charge becomes real on segment {segment} at t = {tau}; walls accumulate there"
    )))
}

pub(crate) const MAX_RETRIES: u32 = 8;

pub(crate) fn is_non_generic(e: &Error) -> bool {
    matches!(e, Error::NonGenericPath(_) | Error::NonGenericEndpoint(_))
}

/// Lifts `path`, and on a genericity failure retries with jittered interior
/// vertices, halving `eps` each time.
pub(crate) fn lift_with_retries(
    state: &CoverState,
    path: &ChargePath,
    eps: &Rational,
) -> Result<(CoverState, Vec<Event>, ChargePath)> {
    let mut last_err = match lift_path(state, path) {
        Ok((s, e)) => return Ok((s, e, path.clone())),
        Err(e) if is_non_generic(&e) => e,
        Err(e) => return Err(e),
    };
    let mut eps = eps.clone();
    for attempt in 1..=MAX_RETRIES {
        let p = path.jittered(&eps, u64::from(attempt));
        match lift_path(state, &p) {
            Ok((s, e)) => return Ok((s, e, p)),
            Err(e) if is_non_generic(&e) => last_err = e,
            Err(e) => return Err(e),
        }
        eps /= int(2);
    }
    Err(match last_err {
        Error::NonGenericEndpoint(m) | Error::NonGenericPath(m) => {
            Error::NonGenericPath(format!("perturbation retries exhausted: {m}"))
        }
        other => other,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::initial_state;
    use crate::diagrams::Diagram;
    use crate::rootsys::ClassVector;

    fn d(s: &str) -> Diagram {
        s.parse().unwrap()
    }

    #[test]
    fn single_ascending_event() {
        let a2 = d("A2");
        let z0 = CentralCharge::standard(2);
        let z1 = CentralCharge::new(vec![Gauss::i(), Gauss::new(int(-1), rat(-1, 2))]);
        let s = initial_state(&a2, &z0).unwrap();
        let (out, events) = lift_path(&s, &ChargePath::new(vec![z0, z1.clone()]).unwrap()).unwrap();
        assert_eq!(
            events,
            vec![Event {
                segment: 0,
                time: rat(2, 3),
                slot: Crossed::Slot(1),
                direction: Direction::Ascending
            }]
        );
        assert_eq!(
            out.classes(),
            vec![ClassVector(vec![1, 1]), ClassVector(vec![0, -1])]
        );
        assert_eq!(out.ledgers(), vec![0, -1]);
        assert_eq!(out.charge(), &z1);
    }

    #[test]
    fn constant_path_is_trivial() {
        let a2 = d("A2");
        let s = initial_state(&a2, &CentralCharge::standard(2)).unwrap();
        let (out, events) = lift_path(&s, &ChargePath::constant(s.charge())).unwrap();
        assert!(events.is_empty());
        assert_eq!(out, s);
    }

    #[test]
    fn passing_through_zero_is_rejected() {
        let a2 = d("A2");
        let s = initial_state(&a2, &CentralCharge::standard(2)).unwrap();
        let end = CentralCharge::new(vec![Gauss::from_ints(0, -1), Gauss::i()]);
        let err =
            lift_path(&s, &ChargePath::new(vec![s.charge().clone(), end]).unwrap()).unwrap_err();
        assert!(matches!(err, Error::NonGenericPath(_)));
    }

    #[test]
    fn real_charge_shifts_the_heart() {
        let a2 = d("A2");
        let s = initial_state(&a2, &CentralCharge::standard(2)).unwrap();
        let end = CentralCharge::new(vec![Gauss::from_ints(-1, -1), Gauss::from_ints(-3, -1)]);
        let (out, events) =
            lift_path(&s, &ChargePath::new(vec![s.charge().clone(), end]).unwrap()).unwrap();
        assert_eq!(
            events,
            vec![Event {
                segment: 0,
                time: rat(1, 2),
                slot: Crossed::All,
                direction: Direction::Ascending
            }]
        );
        assert_eq!(
            out.classes(),
            vec![ClassVector(vec![-1, 0]), ClassVector(vec![0, -1])]
        );
        assert_eq!(out.ledgers(), vec![-1, -1]);
        assert_eq!(out.shift_count(), -1);
        let (back, _) = lift_path(
            &out,
            &ChargePath::new(vec![out.charge().clone(), s.charge().clone()]).unwrap(),
        )
        .unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn endpoint_on_wall_and_coincidences() {
        let a2 = d("A2");
        let s = initial_state(&a2, &CentralCharge::standard(2)).unwrap();
        let end = CentralCharge::new(vec![Gauss::from_ints(-1, 0), Gauss::i()]);
        let err =
            lift_path(&s, &ChargePath::new(vec![s.charge().clone(), end]).unwrap()).unwrap_err();
        assert!(matches!(err, Error::NonGenericEndpoint(_)));
        let end = CentralCharge::new(vec![Gauss::from_ints(1, -1), Gauss::from_ints(-3, -1)]);
        let err =
            lift_path(&s, &ChargePath::new(vec![s.charge().clone(), end]).unwrap()).unwrap_err();
        assert!(matches!(err, Error::NonGenericPath(_)));
        let off = CentralCharge::new(vec![Gauss::i(), Gauss::from_ints(0, 2)]);
        assert!(lift_path(&s, &ChargePath::constant(&off)).is_err());
    }
}
