use std::collections::HashMap;
use std::fmt::Write;

use serde::{Deserialize, Serialize};

use super::state::{CoverState, Direction};
use crate::charges::CentralCharge;
use crate::diagrams::Diagram;
use crate::error::{Error, Result};
use crate::rootsys::ClassVector;

/// A combinatorial heart: simple classes plus ledgers modulo a uniform shift.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HeartKey {
    pub classes: Vec<ClassVector>,
    /// Normalized so that the first ledger is zero.
    pub ledgers: Vec<i64>,
}

impl HeartKey {
    fn of(state: &CoverState) -> Self {
        let s = state.shift_normalized();
        HeartKey {
            classes: s.classes(),
            ledgers: s.ledgers(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExchangeEdge {
    pub from: usize,
    pub to: usize,
    /// Slot label.
    pub slot: usize,
    pub direction: Direction,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExchangeGraph {
    pub diagram: String,
    pub depth: usize,
    pub nodes: Vec<HeartKey>,
    pub edges: Vec<ExchangeEdge>,
    /// Every node's neighbours were found before the depth bound.
    pub closed: bool,
}

/// Breadth-first exploration of hearts reachable by crossings, starting at
/// the standard heart. Nodes at distance `depth` are not expanded, but
/// their edges back into the explored set are recorded and decide whether
/// the graph closed.
///
/// Every edge is checked to be undone by the crossing in the opposite
/// direction at the same slot.
pub fn exchange_bfs(d: &Diagram, depth: usize) -> Result<ExchangeGraph> {
    let start = CoverState::standard(d, CentralCharge::standard(d.size()));
    let mut index: HashMap<HeartKey, usize> = HashMap::new();
    let mut states = vec![start.clone()];
    let mut nodes = vec![HeartKey::of(&start)];
    index.insert(nodes[0].clone(), 0);
    let mut edges = Vec::new();
    let mut level = vec![0usize];
    let mut closed = true;
    let mut head = 0;
    while head < states.len() {
        let here = states[head].clone();
        let dist = level[head];
        for slot in 0..d.size() {
            for direction in [Direction::Ascending, Direction::Descending] {
                let next = here.cross(slot, direction)?;
                let back = next.cross(slot, direction.reverse())?;
                if back != here {
                    return Err(Error::Invariant(format!(
                        "crossing at slot {slot} is not undone by its reverse"
                    )));
                }
                let key = HeartKey::of(&next);
                let to = match index.get(&key) {
                    Some(&i) => i,
                    None if dist < depth => {
                        let i = nodes.len();
                        index.insert(key.clone(), i);
                        nodes.push(key);
                        states.push(next.shift_normalized());
                        level.push(dist + 1);
                        i
                    }
                    None => {
                        closed = false;
                        continue;
                    }
                };
                edges.push(ExchangeEdge {
                    from: head,
                    to,
                    slot: d.label_of(slot),
                    direction,
                });
            }
        }
        head += 1;
    }
    Ok(ExchangeGraph {
        diagram: d.name(),
        depth,
        nodes,
        edges,
        closed,
    })
}

impl ExchangeGraph {
    pub fn out_degree(&self, node: usize) -> usize {
        self.edges.iter().filter(|e| e.from == node).count()
    }

    /// Graphviz rendering.
    pub fn to_dot(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "digraph exchange {{");
        let _ = writeln!(s, "  label=\"{} depth {}\";", self.diagram, self.depth);
        for (i, n) in self.nodes.iter().enumerate() {
            let classes: Vec<String> = n.classes.iter().map(|c| c.to_string()).collect();
            let _ = writeln!(
                s,
                "  n{i} [label=\"{} | {:?}\"];",
                classes.join(" "),
                n.ledgers
            );
        }
        for e in &self.edges {
            let tag = match e.direction {
                Direction::Ascending => "+",
                Direction::Descending => "-",
            };
            let _ = writeln!(
                s,
                "  n{} -> n{} [label=\"{}{}\"];",
                e.from, e.to, tag, e.slot
            );
        }
        s.push_str("}\n");
        s
    }
}
