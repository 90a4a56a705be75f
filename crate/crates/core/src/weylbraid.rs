//! Braid words, their Weyl-group shadows, and relation checks.

use std::fmt;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::diagrams::Diagram;
use crate::error::{Error, Result};
use crate::linalg::{self, IntMatrix};
use crate::rootsys::{euler_unchecked, ClassVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }
}

/// A generator `σ_v` or its inverse, `v` a vertex label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub vertex: usize,
    pub sign: Sign,
}

impl Letter {
    pub fn pos(vertex: usize) -> Self {
        Letter {
            vertex,
            sign: Sign::Pos,
        }
    }

    pub fn neg(vertex: usize) -> Self {
        Letter {
            vertex,
            sign: Sign::Neg,
        }
    }

    pub fn inverse(self) -> Self {
        Letter {
            vertex: self.vertex,
            sign: self.sign.flip(),
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Sign::Pos => write!(f, "{}", self.vertex),
            Sign::Neg => write!(f, "-{}", self.vertex),
        }
    }
}

impl std::str::FromStr for Letter {
    type Err = Error;

    /// `"3"`, `"+3"`, `"-3"`; `"-0"` is the inverse of the extending generator.
    fn from_str(s: &str) -> Result<Letter> {
        let t = s.trim();
        let (sign, body) = if let Some(b) = t.strip_prefix('-') {
            (Sign::Neg, b)
        } else {
            (Sign::Pos, t.strip_prefix('+').unwrap_or(t))
        };
        if body.is_empty() || !body.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::invalid(format!("bad braid letter {s:?}")));
        }
        let vertex = body
            .parse()
            .map_err(|_| Error::invalid(format!("bad braid letter {s:?}")))?;
        Ok(Letter { vertex, sign })
    }
}

impl Serialize for Letter {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match (self.sign, self.vertex) {
            // −0 has no integer spelling.
            (Sign::Neg, 0) => s.serialize_str("-0"),
            (Sign::Pos, v) => s.serialize_i64(v as i64),
            (Sign::Neg, v) => s.serialize_i64(-(v as i64)),
        }
    }
}

impl<'de> Deserialize<'de> for Letter {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Letter, D::Error> {
        struct LetterVisitor;
        impl Visitor<'_> for LetterVisitor {
            type Value = Letter;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a signed integer or a string such as \"-0\"")
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Letter, E> {
                let vertex = v.unsigned_abs() as usize;
                Ok(if v < 0 {
                    Letter::neg(vertex)
                } else {
                    Letter::pos(vertex)
                })
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Letter, E> {
                Ok(Letter::pos(v as usize))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Letter, E> {
                v.parse().map_err(E::custom)
            }
        }
        d.deserialize_any(LetterVisitor)
    }
}

/// A word in the braid generators. The first letter is the outermost
/// functor: `[a, b]` stands for `Φ_a ∘ Φ_b`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BraidWord(pub Vec<Letter>);

impl BraidWord {
    pub fn empty() -> Self {
        BraidWord(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, l: Letter) {
        self.0.push(l);
    }

    /// Signed-integer form; `0` is always the positive extending letter.
    pub fn parse_signed(d: &Diagram, letters: &[i64]) -> Result<Self> {
        let w = BraidWord(
            letters
                .iter()
                .map(|&v| {
                    let vertex = v.unsigned_abs() as usize;
                    if v < 0 {
                        Letter::neg(vertex)
                    } else {
                        Letter::pos(vertex)
                    }
                })
                .collect(),
        );
        w.validate(d)?;
        Ok(w)
    }

    /// Comma-separated letters, e.g. `"1,2,-1"` or `"0,-0"`.
    pub fn parse_str(d: &Diagram, s: &str) -> Result<Self> {
        let letters = s
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(str::parse)
            .collect::<Result<Vec<Letter>>>()?;
        let w = BraidWord(letters);
        w.validate(d)?;
        Ok(w)
    }

    pub fn validate(&self, d: &Diagram) -> Result<()> {
        for l in &self.0 {
            d.index_of(l.vertex)?;
        }
        Ok(())
    }

    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        BraidWord(self.0.iter().chain(&other.0).copied().collect())
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn repeat(&self, k: usize) -> BraidWord {
        BraidWord(self.0.repeat(k))
    }

    /// Cancels adjacent `x x⁻¹` pairs.
    pub fn free_reduce(&self) -> BraidWord {
        let mut out: Vec<Letter> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        BraidWord(out)
    }

    /// `(1)(2)…(n)` over the labels of `d`, in increasing label order.
    pub fn coxeter_element(d: &Diagram) -> BraidWord {
        BraidWord(d.labels().map(Letter::pos).collect())
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "]")
    }
}

/// Integer matrix of a Weyl group element acting on column class vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeylMatrix(IntMatrix);

impl WeylMatrix {
    pub fn identity(n: usize) -> Self {
        WeylMatrix(linalg::identity(n))
    }

    /// The simple reflection `s_i` (by index): `s_i e_j = e_j − χ(e_i, e_j) e_i`.
    pub fn simple_reflection(d: &Diagram, i: usize) -> Self {
        let mut m = linalg::identity(d.size());
        for (j, x) in m[i].iter_mut().enumerate() {
            *x -= d.euler_matrix()[i][j];
        }
        WeylMatrix(m)
    }

    pub fn from_matrix(m: IntMatrix) -> Self {
        WeylMatrix(m)
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn mul(&self, rhs: &WeylMatrix) -> WeylMatrix {
        WeylMatrix(linalg::mat_mul(&self.0, &rhs.0))
    }

    pub fn apply(&self, v: &[i64]) -> ClassVector {
        ClassVector(linalg::mat_vec(&self.0, v))
    }

    pub fn column(&self, j: usize) -> ClassVector {
        ClassVector(self.0.iter().map(|r| r[j]).collect())
    }

    pub fn is_identity(&self) -> bool {
        self.0 == linalg::identity(self.size())
    }

    pub fn determinant(&self) -> i128 {
        linalg::determinant(&self.0)
    }

    /// `MᵀEM = E`.
    pub fn preserves_form(&self, d: &Diagram) -> bool {
        let e = d.euler_matrix();
        linalg::mat_mul(&linalg::transpose(&self.0), &linalg::mat_mul(e, &self.0)) == *e
    }
}

/// Product of simple reflections in word order; letter signs are ignored.
pub fn word_to_matrix(d: &Diagram, w: &BraidWord) -> Result<WeylMatrix> {
    let mut m = WeylMatrix::identity(d.size());
    for l in w.letters() {
        let i = d.index_of(l.vertex)?;
        m = m.mul(&WeylMatrix::simple_reflection(d, i));
    }
    Ok(m)
}

/// Action of the shift `[m]` on classes: multiplication by `(−1)^m`.
pub fn shift_matrix(m: i64) -> i64 {
    if m.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

pub fn apply_shift(m: i64, v: &ClassVector) -> ClassVector {
    let s = shift_matrix(m);
    ClassVector(v.iter().map(|x| s * x).collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum Relation {
    /// `s_i² = 1`.
    Involution { i: usize },
    /// `s_i s_j s_i = s_j s_i s_j` for joined vertices.
    Braid { i: usize, j: usize },
    /// `s_i s_j = s_j s_i` for non-joined vertices.
    Commute { i: usize, j: usize },
    /// `s_i s_j` has no power `≤ bound` equal to the identity (double edge).
    InfiniteOrder { i: usize, j: usize, bound: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationCheck {
    pub relation: Relation,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationReport {
    pub diagram: String,
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Matrix-level check of the defining relations of the braid group.
/// Vertices in the report are labels.
pub fn verify_relations(d: &Diagram) -> RelationReport {
    const INFINITE_ORDER_BOUND: usize = 100;
    let n = d.size();
    let s: Vec<WeylMatrix> = (0..n)
        .map(|i| WeylMatrix::simple_reflection(d, i))
        .collect();
    let mut checks = Vec::new();
    for i in 0..n {
        checks.push(RelationCheck {
            relation: Relation::Involution { i: d.label_of(i) },
            passed: s[i].mul(&s[i]).is_identity(),
        });
    }
    for i in 0..n {
        for j in i + 1..n {
            let (li, lj) = (d.label_of(i), d.label_of(j));
            let check = match d.multiplicity(i, j) {
                0 => RelationCheck {
                    relation: Relation::Commute { i: li, j: lj },
                    passed: s[i].mul(&s[j]) == s[j].mul(&s[i]),
                },
                1 => RelationCheck {
                    relation: Relation::Braid { i: li, j: lj },
                    passed: s[i].mul(&s[j]).mul(&s[i]) == s[j].mul(&s[i]).mul(&s[j]),
                },
                _ => {
                    let p = s[i].mul(&s[j]);
                    let mut acc = p.clone();
                    let mut never = true;
                    for _ in 0..INFINITE_ORDER_BOUND {
                        if acc.is_identity() {
                            never = false;
                            break;
                        }
                        acc = acc.mul(&p);
                    }
                    RelationCheck {
                        relation: Relation::InfiniteOrder {
                            i: li,
                            j: lj,
                            bound: INFINITE_ORDER_BOUND,
                        },
                        passed: never,
                    }
                }
            };
            checks.push(check);
        }
    }
    RelationReport {
        diagram: d.name(),
        checks,
    }
}

/// Order of `M`, if some power up to `bound` is the identity.
pub fn matrix_order(m: &WeylMatrix, bound: usize) -> Option<usize> {
    let mut acc = m.clone();
    for k in 1..=bound {
        if acc.is_identity() {
            return Some(k);
        }
        acc = acc.mul(m);
    }
    None
}

/// χ between the columns of `m`, for pattern checks.
pub(crate) fn gram(d: &Diagram, cols: &[ClassVector]) -> IntMatrix {
    cols.iter()
        .map(|a| cols.iter().map(|b| euler_unchecked(d, a, b)).collect())
        .collect()
}
