use std::fmt;

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::charges::{evaluate_unchecked, imag_unchecked, in_fundamental, CentralCharge};
use crate::diagrams::{Diagram, GraphAutomorphism};
use crate::error::{Error, Result};
use crate::linalg;
use crate::rootsys::{euler_unchecked, is_regular, ClassVector};
use crate::weylbraid::{gram, word_to_matrix, BraidWord, Letter, Sign, WeylMatrix};

/// Which way the charge of the crossed simple leaves the upper half-plane.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    /// Through the negative real axis, phase rising through 1.
    Ascending,
    /// Through the positive real axis, phase falling through 0.
    Descending,
}

impl Direction {
    pub fn reverse(self) -> Direction {
        match self {
            Direction::Ascending => Direction::Descending,
            Direction::Descending => Direction::Ascending,
        }
    }

    pub fn sign(self) -> Sign {
        match self {
            Direction::Ascending => Sign::Pos,
            Direction::Descending => Sign::Neg,
        }
    }

    pub(crate) fn ledger_step(self) -> i64 {
        match self {
            Direction::Ascending => -1,
            Direction::Descending => 1,
        }
    }
}

/// One simple object of the current heart: its class and the shift ledger
/// of the vertex with the same index.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Slot {
    pub class: ClassVector,
    pub ledger: i64,
}

/// A point of the modelled component: a charge, the simple classes of the
/// heart, per-vertex shift ledgers and the audit log of crossings.
///
/// The audit trail is the braid word of single-slot crossings plus the
/// number of global shifts (all simples crossing together), so that
/// `c_t = (−1)^shift · M_log · e_t`.
///
/// Equality compares the charge, classes and ledgers; the audit trail is
/// ignored.
#[derive(Clone, Debug)]
pub struct CoverState {
    pub(crate) diagram: Diagram,
    pub(crate) charge: CentralCharge,
    pub(crate) slots: Vec<Slot>,
    pub(crate) log: BraidWord,
    pub(crate) shift: i64,
    log_matrix: WeylMatrix,
}

impl PartialEq for CoverState {
    fn eq(&self, other: &Self) -> bool {
        self.diagram == other.diagram && self.charge == other.charge && self.slots == other.slots
    }
}

impl Eq for CoverState {}

impl CoverState {
    /// Assembles a state; see [`CoverState::check_invariants`] for what is
    /// expected of the parts.
    pub fn from_parts(
        diagram: Diagram,
        charge: CentralCharge,
        slots: Vec<Slot>,
        log: BraidWord,
        shift: i64,
    ) -> Result<Self> {
        let log_matrix = word_to_matrix(&diagram, &log)?;
        Ok(CoverState {
            diagram,
            charge,
            slots,
            log,
            shift,
            log_matrix,
        })
    }

    /// Standard slots `(e_t, 0)` at charge `z`, without the chamber check.
    /// Used for combinatorial exploration.
    pub fn standard(diagram: &Diagram, charge: CentralCharge) -> Self {
        let n = diagram.size();
        CoverState {
            diagram: diagram.clone(),
            charge,
            slots: (0..n)
                .map(|t| Slot {
                    class: ClassVector::unit(n, t),
                    ledger: 0,
                })
                .collect(),
            log: BraidWord::empty(),
            shift: 0,
            log_matrix: WeylMatrix::identity(n),
        }
    }

    pub fn diagram(&self) -> &Diagram {
        &self.diagram
    }

    pub fn charge(&self) -> &CentralCharge {
        &self.charge
    }

    pub fn slots(&self) -> &[Slot] {
        &self.slots
    }

    pub fn classes(&self) -> Vec<ClassVector> {
        self.slots.iter().map(|s| s.class.clone()).collect()
    }

    pub fn ledgers(&self) -> Vec<i64> {
        self.slots.iter().map(|s| s.ledger).collect()
    }

    pub fn log(&self) -> &BraidWord {
        &self.log
    }

    /// Net number of global shifts met so far.
    pub fn shift_count(&self) -> i64 {
        self.shift
    }

    pub fn has_standard_classes(&self) -> bool {
        let n = self.slots.len();
        self.slots
            .iter()
            .enumerate()
            .all(|(t, s)| s.class == ClassVector::unit(n, t))
    }

    pub fn has_uniform_ledgers(&self) -> bool {
        self.slots.windows(2).all(|w| w[0].ledger == w[1].ledger)
    }

    /// The same point with the ledgers shifted so that the first is zero.
    pub fn shift_normalized(&self) -> CoverState {
        let k0 = self.slots.first().map_or(0, |s| s.ledger);
        let mut out = self.clone();
        out.slots.iter_mut().for_each(|s| s.ledger -= k0);
        out
    }

    pub(crate) fn with_charge(mut self, charge: CentralCharge) -> Self {
        self.charge = charge;
        self
    }

    /// Wall crossing at `slot` without any charge check. The charge is left
    /// unchanged.
    ///
    /// Every class is reflected in the old class of the crossed slot. The
    /// ledger of a vertex `t` moves when the crossed class is `±e_t`: the
    /// charge of the simple `S_t` then makes a half turn, counter-clockwise
    /// for ascending crossings (ledger −1) and clockwise for descending ones
    /// (ledger +1).
    pub fn cross(&self, slot: usize, direction: Direction) -> Result<CoverState> {
        let n = self.slots.len();
        if slot >= n {
            return Err(Error::invalid(format!(
                "slot {slot} out of range for {} slots",
                n
            )));
        }
        let pivot = self.slots[slot].class.clone();
        let mut out = self.clone();
        for s in out.slots.iter_mut() {
            let k = euler_unchecked(&self.diagram, &pivot, &s.class);
            s.class = s.class.add_scaled(-k, &pivot);
        }
        if let Some(t) = unit_index(&pivot) {
            out.slots[t].ledger += direction.ledger_step();
        }
        out.log.push(Letter {
            vertex: self.diagram.label_of(slot),
            sign: direction.sign(),
        });
        out.log_matrix = out
            .log_matrix
            .mul(&WeylMatrix::simple_reflection(&self.diagram, slot));
        Ok(out)
    }

    /// All simples crossing together: the heart is replaced by its shift,
    /// `[1]` when they leave through the positive real axis (descending) and
    /// `[−1]` through the negative one. Every class is negated and every
    /// ledger moves by one step.
    pub fn cross_all(&self, direction: Direction) -> CoverState {
        let mut out = self.clone();
        for s in out.slots.iter_mut() {
            s.class = s.class.neg();
            s.ledger += direction.ledger_step();
        }
        out.shift += direction.ledger_step();
        out
    }

    /// Recomputes the Weyl matrix of the log from scratch and compares it
    /// with the classes.
    pub fn verify_log(&self) -> Result<()> {
        let m = word_to_matrix(&self.diagram, &self.log)?;
        if m != self.log_matrix {
            return Err(Error::Invariant("cached log matrix is stale".into()));
        }
        self.check_log_columns(&m)
    }

    fn check_log_columns(&self, m: &WeylMatrix) -> Result<()> {
        let sign = if self.shift.rem_euclid(2) == 0 { 1 } else { -1 };
        for (t, s) in self.slots.iter().enumerate() {
            let col = m.column(t);
            if col.iter().zip(s.class.iter()).any(|(a, b)| sign * a != *b) {
                return Err(Error::Invariant(format!(
                    "class of slot {t} disagrees with the log"
                )));
            }
        }
        Ok(())
    }

    /// Checks the structural invariants: unimodular classes, the Euler-form
    /// pattern of the diagram, agreement with the audit trail, and
    /// strict positivity of `Im Z(c_t)` on every slot except `skip`.
    pub fn check_invariants(&self, skip: Option<usize>) -> Result<()> {
        let on_wall: Vec<bool> = (0..self.slots.len()).map(|t| Some(t) == skip).collect();
        self.check_invariants_on_walls(&on_wall)
    }

    /// [`CoverState::check_invariants`] where every slot flagged in
    /// `on_wall` may sit on the real axis.
    pub(crate) fn check_invariants_on_walls(&self, on_wall: &[bool]) -> Result<()> {
        let d = &self.diagram;
        let n = d.size();
        if self.slots.len() != n || self.charge.len() != n {
            return Err(Error::Invariant(format!(
                "state has {} slots for {n} vertices",
                self.slots.len()
            )));
        }
        let classes = self.classes();
        let cols: Vec<Vec<i64>> = classes.iter().map(|c| c.0.clone()).collect();
        if !linalg::is_unimodular(&linalg::from_columns(&cols)) {
            return Err(Error::Invariant(
                "simple classes do not form a basis".into(),
            ));
        }
        let g = gram(d, &classes);
        for s in 0..n {
            for t in 0..n {
                let ok = if s == t {
                    g[s][t] == 2
                } else {
                    g[s][t] == -d.multiplicity(s, t)
                };
                if !ok {
                    return Err(Error::Invariant(format!(
                        "χ(c_{s}, c_{t}) = {} breaks the diagram pattern",
                        g[s][t]
                    )));
                }
            }
        }
        self.check_log_columns(&self.log_matrix)?;
        for (t, c) in classes.iter().enumerate() {
            if !on_wall.get(t).copied().unwrap_or(false)
                && !imag_unchecked(&self.charge, c).is_positive()
            {
                return Err(Error::Invariant(format!("Im Z(c_{t}) is not positive")));
            }
        }
        if d.is_affine() {
            let delta = d.delta()?;
            if evaluate_unchecked(&self.charge, delta.as_slice()).is_zero() {
                return Err(Error::Invariant(
                    "charge vanishes on the imaginary root".into(),
                ));
            }
        }
        Ok(())
    }

    /// Applies a graph automorphism: charge coordinates, slots, class
    /// coordinates and log letters are all relabelled by `g`.
    pub fn act_automorphism(&self, g: &GraphAutomorphism) -> Result<CoverState> {
        g.validate(&self.diagram)?;
        let d = &self.diagram;
        let moved: Vec<Slot> = self
            .slots
            .iter()
            .map(|s| Slot {
                class: ClassVector(g.permute(&s.class)),
                ledger: s.ledger,
            })
            .collect();
        let log = BraidWord(
            self.log
                .letters()
                .iter()
                .map(|l| {
                    let i = d.index_of(l.vertex).expect("log letters are valid");
                    Letter {
                        vertex: d.label_of(g.apply(i)),
                        sign: l.sign,
                    }
                })
                .collect(),
        );
        CoverState::from_parts(
            d.clone(),
            CentralCharge(g.permute(&self.charge)),
            g.permute(&moved),
            log,
            self.shift,
        )
    }
}

fn unit_index(v: &ClassVector) -> Option<usize> {
    let mut found = None;
    for (i, &x) in v.iter().enumerate() {
        match x {
            0 => {}
            1 | -1 if found.is_none() => found = Some(i),
            _ => return None,
        }
    }
    found
}

impl fmt::Display for CoverState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} at Z = [{}]",
            self.diagram,
            self.charge
                .iter()
                .map(|z| z.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        )?;
        for (t, s) in self.slots.iter().enumerate() {
            writeln!(
                f,
                "  slot {}: class {} ledger {}",
                self.diagram.label_of(t),
                s.class,
                s.ledger
            )?;
        }
        write!(f, "  log {} shift {}", self.log, self.shift)
    }
}

/// The unique state in the fundamental chamber over `z`.
pub fn initial_state(d: &Diagram, z: &CentralCharge) -> Result<CoverState> {
    if !in_fundamental(d, z)? {
        return Err(Error::invalid(
            "charge is outside the fundamental chamber (some Im Z(e_i) <= 0)",
        ));
    }
    let reg = is_regular(d, z)?;
    if !reg.regular {
        return Err(Error::invalid(format!(
            "charge is not regular; it vanishes on {}",
            reg.witness.expect("non-regular charges carry a witness")
        )));
    }
    Ok(CoverState::standard(d, z.clone()))
}

/// Convenience for [`CoverState::cross`].
pub fn cross(state: &CoverState, slot: usize, direction: Direction) -> Result<CoverState> {
    state.cross(slot, direction)
}

/// Convenience for [`CoverState::act_automorphism`].
pub fn act_automorphism(g: &GraphAutomorphism, state: &CoverState) -> Result<CoverState> {
    state.act_automorphism(g)
}
