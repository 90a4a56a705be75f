//! Catalog of finite and affine simply-laced Dynkin diagrams.
//!
//! Vertices are addressed in two ways. A *label* is the vertex number used
//! in the usual pictures (`1..=n` for finite diagrams, `0..=n` for affine
//! ones, with `0` the extending vertex). An *index* is the position of the
//! vertex in class vectors and matrices, always starting at zero.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, IntMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    D,
    E,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => 'A',
            Family::D => 'D',
            Family::E => 'E',
        };
        write!(f, "{c}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Diagram {
    family: Family,
    rank: usize,
    affine: bool,
    /// Edge multiplicities by index.
    edges: IntMatrix,
    euler: IntMatrix,
}

/// Edge list of the finite diagram, by label.
fn finite_edges(family: Family, n: usize) -> Vec<(usize, usize)> {
    match family {
        Family::A => (1..n).map(|i| (i, i + 1)).collect(),
        Family::D => {
            let mut e: Vec<_> = (1..n - 1).map(|i| (i, i + 1)).collect();
            e.push((n - 2, n));
            e
        }
        Family::E => {
            let mut e = vec![(1, 3), (2, 4)];
            e.extend((3..n).map(|i| (i, i + 1)));
            e
        }
    }
}

/// Label of the vertex the extending vertex `0` attaches to.
fn extending_neighbours(family: Family, n: usize) -> Vec<usize> {
    match (family, n) {
        (Family::A, 1) => vec![1, 1],
        (Family::A, _) => vec![1, n],
        (Family::D, _) => vec![2],
        (Family::E, 6) => vec![2],
        (Family::E, 7) => vec![1],
        (Family::E, _) => vec![8],
    }
}

impl Diagram {
    /// Builds a catalog diagram. `rank` is the rank of the finite part, so
    /// an affine diagram has `rank + 1` vertices.
    pub fn build(family: Family, rank: usize, affine: bool) -> Result<Diagram> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
        };
        if !ok {
            return Err(Error::invalid(format!(
                "{family}{rank} is not a Dynkin diagram (A needs n>=1, D n>=4, E n in 6..=8)"
            )));
        }
        let size = rank + usize::from(affine);
        let offset = usize::from(!affine);
        let mut edges = vec![vec![0i64; size]; size];
        let mut join = |a: usize, b: usize| {
            let (i, j) = (a - offset, b - offset);
            edges[i][j] += 1;
            edges[j][i] += 1;
        };
        for (a, b) in finite_edges(family, rank) {
            join(a, b);
        }
        if affine {
            for b in extending_neighbours(family, rank) {
                join(0, b);
            }
        }
        let euler = (0..size)
            .map(|i| {
                (0..size)
                    .map(|j| if i == j { 2 } else { -edges[i][j] })
                    .collect()
            })
            .collect();
        Ok(Diagram {
            family,
            rank,
            affine,
            edges,
            euler,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Rank of the finite part.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_affine(&self) -> bool {
        self.affine
    }

    /// Number of vertices, i.e. the dimension of class vectors.
    pub fn size(&self) -> usize {
        self.euler.len()
    }

    pub fn euler_matrix(&self) -> &IntMatrix {
        &self.euler
    }

    pub fn multiplicity(&self, i: usize, j: usize) -> i64 {
        self.edges[i][j]
    }

    pub fn joined(&self, i: usize, j: usize) -> bool {
        i != j && self.edges[i][j] > 0
    }

    pub fn label_of(&self, index: usize) -> usize {
        index + usize::from(!self.affine)
    }

    pub fn index_of(&self, label: usize) -> Result<usize> {
        let offset = usize::from(!self.affine);
        label
            .checked_sub(offset)
            .filter(|&i| i < self.size())
            .ok_or_else(|| Error::invalid(format!("vertex {label} does not exist in {self}")))
    }

    pub fn labels(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.size()).map(|i| self.label_of(i))
    }

    /// The finite diagram obtained by deleting the extending vertex.
    pub fn finite_part(&self) -> Diagram {
        Diagram::build(self.family, self.rank, false).expect("catalog rank already validated")
    }

    /// Name in the CLI syntax, e.g. `A2` or `D4~`.
    pub fn name(&self) -> String {
        self.to_string()
    }

    /// Primitive positive generator of the Euler-form kernel, with entry 1
    /// at the extending vertex.
    pub fn delta(&self) -> Result<Marks> {
        if !self.affine {
            return Err(Error::invalid(format!(
                "{self} is finite; marks need an affine diagram"
            )));
        }
        let kernel = linalg::rational_kernel(&self.euler);
        if kernel.len() != 1 {
            return Err(Error::Invariant(format!(
                "Euler form of {self} has a {}-dimensional kernel",
                kernel.len()
            )));
        }
        let mut v = linalg::primitive_integer(&kernel[0]);
        if v[0] < 0 {
            v.iter_mut().for_each(|x| *x = -*x);
        }
        if v[0] != 1 || v.iter().any(|&x| x <= 0) {
            return Err(Error::Invariant(format!(
                "kernel generator {v:?} of {self} is not a marks vector"
            )));
        }
        Ok(Marks(v))
    }

    /// All graph automorphisms, by backtracking over vertex images.
    pub fn automorphism_group(&self, fix_extending: bool) -> Vec<GraphAutomorphism> {
        let n = self.size();
        let mut out = Vec::new();
        let mut image = vec![usize::MAX; n];
        let mut used = vec![false; n];
        self.extend_automorphism(0, &mut image, &mut used, fix_extending, &mut out);
        out
    }

    fn extend_automorphism(
        &self,
        v: usize,
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
        fix_extending: bool,
        out: &mut Vec<GraphAutomorphism>,
    ) {
        let n = self.size();
        if v == n {
            out.push(GraphAutomorphism {
                perm: image.clone(),
            });
            return;
        }
        let degree = |x: usize| self.edges[x].iter().sum::<i64>();
        for w in 0..n {
            if used[w] || degree(w) != degree(v) {
                continue;
            }
            if fix_extending && self.affine && v == 0 && w != 0 {
                continue;
            }
            if (0..v).any(|u| self.edges[u][v] != self.edges[image[u]][w]) {
                continue;
            }
            image[v] = w;
            used[w] = true;
            self.extend_automorphism(v + 1, image, used, fix_extending, out);
            used[w] = false;
        }
        image[v] = usize::MAX;
    }

    /// A generating set of the automorphism group (optionally of the
    /// stabiliser of the extending vertex). The trivial group has no
    /// generators.
    pub fn automorphisms(&self, fix_extending: bool) -> Vec<GraphAutomorphism> {
        let group = self.automorphism_group(fix_extending);
        let mut generators: Vec<GraphAutomorphism> = Vec::new();
        let mut generated: BTreeSet<Vec<usize>> = BTreeSet::new();
        generated.insert((0..self.size()).collect());
        for g in group {
            if generated.contains(&g.perm) {
                continue;
            }
            generators.push(g);
            generated = closure(self.size(), &generators);
        }
        generators
    }

    pub fn to_json(&self) -> DiagramJson {
        DiagramJson {
            family: self.family,
            rank: self.rank,
            affine: self.affine,
            euler_matrix: self.euler.clone(),
            marks: self.delta().ok().map(|m| m.0),
        }
    }
}

fn closure(n: usize, gens: &[GraphAutomorphism]) -> BTreeSet<Vec<usize>> {
    let id: Vec<usize> = (0..n).collect();
    let mut seen = BTreeSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(p) = queue.pop_front() {
        for g in gens {
            let q: Vec<usize> = p.iter().map(|&x| g.perm[x]).collect();
            if seen.insert(q.clone()) {
                queue.push_back(q);
            }
        }
    }
    seen
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{}{}",
            self.family,
            self.rank,
            if self.affine { "~" } else { "" }
        )
    }
}

impl FromStr for Diagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Diagram> {
        let bad = || {
            Error::invalid(format!(
                "bad diagram name {s:?} (expected e.g. A2, D4, E8, A1~)"
            ))
        };
        let t = s.trim();
        let (body, affine) = match t.strip_suffix('~') {
            Some(b) => (b, true),
            None => (t, false),
        };
        let mut chars = body.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('D') => Family::D,
            Some('E') => Family::E,
            _ => return Err(bad()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        Diagram::build(family, rank, affine)
    }
}

/// Marks of an affine diagram: the imaginary root `δ` in the simple basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Marks(pub Vec<i64>);

impl Marks {
    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }
}

/// A vertex permutation preserving edge multiplicities, by index.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GraphAutomorphism {
    pub perm: Vec<usize>,
}

impl GraphAutomorphism {
    pub fn identity(n: usize) -> Self {
        GraphAutomorphism {
            perm: (0..n).collect(),
        }
    }

    /// Builds an automorphism from a label-to-label map given as the list of
    /// images of the labels in increasing order.
    pub fn from_labels(d: &Diagram, images: &[usize]) -> Result<Self> {
        let perm = images
            .iter()
            .map(|&l| d.index_of(l))
            .collect::<Result<Vec<_>>>()?;
        let g = GraphAutomorphism { perm };
        g.validate(d)?;
        Ok(g)
    }

    pub fn validate(&self, d: &Diagram) -> Result<()> {
        let n = d.size();
        let mut seen = vec![false; n];
        if self.perm.len() != n
            || self
                .perm
                .iter()
                .any(|&x| x >= n || std::mem::replace(&mut seen[x], true))
        {
            return Err(Error::invalid(format!(
                "{:?} is not a permutation of {n} vertices",
                self.perm
            )));
        }
        for i in 0..n {
            for j in 0..n {
                if d.multiplicity(i, j) != d.multiplicity(self.perm[i], self.perm[j]) {
                    return Err(Error::invalid(format!(
                        "{:?} does not preserve the edges of {d}",
                        self.perm
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn apply(&self, i: usize) -> usize {
        self.perm[i]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.perm.len()];
        for (i, &p) in self.perm.iter().enumerate() {
            inv[p] = i;
        }
        GraphAutomorphism { perm: inv }
    }

    /// Moves coordinate `i` of `v` to position `g(i)`.
    pub fn permute<T: Clone>(&self, v: &[T]) -> Vec<T> {
        let mut out = v.to_vec();
        for (i, x) in v.iter().enumerate() {
            out[self.perm[i]] = x.clone();
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramJson {
    pub family: Family,
    pub rank: usize,
    pub affine: bool,
    pub euler_matrix: IntMatrix,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub marks: Option<Vec<i64>>,
}

/// Every diagram in the catalog with finite rank at most `max_rank`.
pub fn catalog(max_rank: usize, affine: bool) -> Vec<Diagram> {
    let mut out = Vec::new();
    for n in 1..=max_rank {
        out.push(Diagram::build(Family::A, n, affine).unwrap());
    }
    for n in 4..=max_rank {
        out.push(Diagram::build(Family::D, n, affine).unwrap());
    }
    for n in 6..=max_rank.min(8) {
        out.push(Diagram::build(Family::E, n, affine).unwrap());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> Diagram {
        s.parse().unwrap()
    }

    #[test]
    fn small_euler_matrices() {
        assert_eq!(d("A2").euler_matrix(), &vec![vec![2, -1], vec![-1, 2]]);
        assert_eq!(d("A1~").euler_matrix(), &vec![vec![2, -2], vec![-2, 2]]);
        assert_eq!(d("A1").euler_matrix(), &vec![vec![2]]);
    }

    #[test]
    fn rank_bounds() {
        assert!(Diagram::build(Family::A, 0, false).is_err());
        assert!(Diagram::build(Family::D, 3, true).is_err());
        assert!(Diagram::build(Family::E, 9, false).is_err());
        assert!(Diagram::build(Family::E, 5, false).is_err());
        assert!("B2".parse::<Diagram>().is_err());
        assert!("A".parse::<Diagram>().is_err());
    }

    #[test]
    fn e8_is_affine_e8_minus_extending_vertex() {
        let fin = d("E8");
        let aff = d("E8~");
        for i in 0..8 {
            for j in 0..8 {
                assert_eq!(fin.euler_matrix()[i][j], aff.euler_matrix()[i + 1][j + 1]);
            }
        }
        // Arms of lengths 1, 2 and 5 around the trivalent vertex in the affine picture.
        let deg: Vec<i64> = (0..9)
            .map(|i| (0..9).map(|j| aff.multiplicity(i, j)).sum())
            .collect();
        assert_eq!(deg.iter().filter(|&&x| x == 3).count(), 1);
        assert_eq!(deg.iter().filter(|&&x| x == 1).count(), 3);
    }

    #[test]
    fn marks() {
        assert_eq!(d("A1~").delta().unwrap().0, vec![1, 1]);
        assert_eq!(d("A4~").delta().unwrap().0, vec![1; 5]);
        // D4~: labels 0,1,3,4 are leaves, 2 is the centre.
        assert_eq!(d("D4~").delta().unwrap().0, vec![1, 1, 2, 1, 1]);
        assert_eq!(d("E8~").delta().unwrap().sum(), 30);
        assert_eq!(d("E7~").delta().unwrap().sum(), 18);
        assert_eq!(d("E6~").delta().unwrap().sum(), 12);
        assert!(d("A3").delta().is_err());
    }

    #[test]
    fn automorphism_generators() {
        assert!(d("A1").automorphisms(false).is_empty());
        let a2 = d("A2").automorphisms(false);
        assert_eq!(a2, vec![GraphAutomorphism { perm: vec![1, 0] }]);
        assert_eq!(d("D4~").automorphism_group(false).len(), 24);
        assert_eq!(d("D4~").automorphism_group(true).len(), 6);
        assert_eq!(d("A3~").automorphism_group(false).len(), 8);
        assert_eq!(d("E6").automorphism_group(false).len(), 2);
        assert_eq!(d("E6~").automorphism_group(false).len(), 6);
        assert_eq!(d("D4").automorphism_group(false).len(), 6);
    }

    #[test]
    fn name_round_trip() {
        for s in ["A1", "A7~", "D5", "E6~", "E8"] {
            assert_eq!(d(s).name(), s);
        }
    }
}
