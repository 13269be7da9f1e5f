//! Realizations of degree sequences: Havel–Hakimi construction, exhaustive
//! enumeration up to isomorphism, degree-preserving 2-switches, and the
//! four-copies construction for cubic graphs.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::canon::{key_from_masks, next_combination};
use crate::graph::{disjoint_union, CanonicalKey, Graph};
use crate::recognition::{is_graphical, is_graphical_desc, DegreeSequence};

/// Largest `n` accepted by [`enumerate_realizations`].
pub const ENUMERATION_CAP: usize = 10;

/// Builds one realization: repeatedly join the vertex of largest residual
/// degree to the next-largest ones. Vertex `i` gets the `i`-th smallest
/// degree.
pub fn havel_hakimi_realize(d: &DegreeSequence) -> Result<Graph> {
    if !is_graphical(d) {
        return Err(Error::NotGraphical);
    }
    let n = d.n();
    let mut g = Graph::new(n);
    let mut residual: Vec<(usize, usize)> = d
        .degrees()
        .iter()
        .enumerate()
        .map(|(v, &deg)| (deg, v))
        .collect();
    loop {
        // largest residual first, lower index first among ties
        residual.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        let (k, v) = residual[0];
        if k == 0 {
            break;
        }
        residual[0].0 = 0;
        for slot in residual.iter_mut().skip(1).take(k) {
            if slot.0 == 0 {
                return Err(Error::NotGraphical);
            }
            slot.0 -= 1;
            g.add_edge(v, slot.1)?;
        }
    }
    Ok(g)
}

/// Lazily enumerates every realization of a degree sequence, one graph per
/// isomorphism class.
///
/// Vertices are laid out in descending degree order and the adjacency matrix
/// is filled row by row. After each row the residual degrees of the later
/// vertices must still be graphical. Within a run of equal target degrees,
/// consecutive vertices `v, v + 1` must have neighbor vectors (ignoring each
/// other) in non-increasing lexicographic order; the lexicographically
/// largest labeling of every isomorphism class satisfies this, so no class
/// is lost. Survivors are deduplicated by canonical key.
pub struct RealizationStream {
    target: DegreeSequence,
    degree_of: Vec<usize>,
    adj: Vec<u32>,
    residual: Vec<usize>,
    frames: Vec<Frame>,
    // true when the top frame must move to its next combination
    advance: bool,
    done: bool,
    seen: HashSet<CanonicalKey>,
}

struct Frame {
    row: usize,
    cands: Vec<usize>,
    combo: Vec<usize>,
}

pub fn enumerate_realizations(d: &DegreeSequence) -> Result<RealizationStream> {
    if d.n() > ENUMERATION_CAP {
        return Err(Error::SizeLimit {
            what: "realization enumeration",
            cap: ENUMERATION_CAP,
            n: d.n(),
        });
    }
    if !is_graphical(d) {
        return Err(Error::NotGraphical);
    }
    let degree_of: Vec<usize> = d.degrees().iter().rev().copied().collect();
    Ok(RealizationStream {
        target: d.clone(),
        residual: degree_of.clone(),
        adj: vec![0; d.n()],
        degree_of,
        frames: Vec::new(),
        advance: false,
        done: false,
        seen: HashSet::new(),
    })
}

impl RealizationStream {
    pub fn target(&self) -> &DegreeSequence {
        &self.target
    }

    fn n(&self) -> usize {
        self.degree_of.len()
    }

    fn apply(&mut self, f: usize, sign: bool) {
        let frame = &self.frames[f];
        let r = frame.row;
        for &c in &frame.combo {
            let v = frame.cands[c];
            if sign {
                self.adj[r] |= 1 << v;
                self.adj[v] |= 1 << r;
                self.residual[v] -= 1;
            } else {
                self.adj[r] &= !(1 << v);
                self.adj[v] &= !(1 << r);
                self.residual[v] += 1;
            }
        }
        let k = frame.combo.len();
        self.residual[r] = if sign { 0 } else { k };
    }

    fn edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    /// Pair ordering check for every equal-degree pair, given rows `0..=r`.
    fn pairs_ordered(&self, r: usize) -> bool {
        let n = self.n();
        for v in 0..n.saturating_sub(1) {
            let w = v + 1;
            if self.degree_of[v] != self.degree_of[w] {
                continue;
            }
            for x in (0..n).filter(|&x| x != v && x != w) {
                let known = if x < v { x <= r } else { w <= r };
                if !known {
                    break;
                }
                match (self.edge(x, v), self.edge(x, w)) {
                    (true, false) => break,
                    (false, true) => return false,
                    _ => {}
                }
            }
        }
        true
    }

    fn feasible(&self, r: usize) -> bool {
        let mut rest: Vec<usize> = self.residual[r + 1..].to_vec();
        rest.sort_unstable_by(|a, b| b.cmp(a));
        let len = rest.len();
        rest.first().is_none_or(|&d| d < len) && is_graphical_desc(&rest) && self.pairs_ordered(r)
    }

    /// Advances to the next labeled realization passing the pruning rules.
    fn next_labeled(&mut self) -> bool {
        if self.done {
            return false;
        }
        loop {
            if self.advance {
                let Some(top) = self.frames.len().checked_sub(1) else {
                    self.done = true;
                    return false;
                };
                self.apply(top, false);
                let frame = &mut self.frames[top];
                let ncands = frame.cands.len();
                if next_combination(&mut frame.combo, ncands) {
                    let r = frame.row;
                    self.apply(top, true);
                    if self.feasible(r) {
                        self.advance = false;
                    }
                } else {
                    self.frames.pop();
                }
                continue;
            }
            let r = self.frames.len();
            if r == self.n() {
                self.advance = true;
                return true;
            }
            let k = self.residual[r];
            let cands: Vec<usize> = (r + 1..self.n())
                .filter(|&j| self.residual[j] > 0)
                .collect();
            if k > cands.len() {
                self.advance = true;
                continue;
            }
            self.frames.push(Frame {
                row: r,
                cands,
                combo: (0..k).collect(),
            });
            self.apply(r, true);
            if !self.feasible(r) {
                self.advance = true;
            }
        }
    }

    fn current_graph(&self) -> Graph {
        let n = self.n();
        Graph::from_edges(
            n,
            (0..n).flat_map(|u| {
                (u + 1..n)
                    .filter(move |&v| self.adj[u] >> v & 1 == 1)
                    .map(move |v| (u, v))
            }),
        )
        .expect("valid adjacency")
    }
}

impl Iterator for RealizationStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next_labeled() {
            if self.seen.insert(key_from_masks(&self.adj)) {
                return Some(self.current_graph());
            }
        }
        None
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rewiring {
    /// `{a,b},{c,d}` becomes `{a,d},{b,c}`.
    Crossed,
    /// `{a,b},{c,d}` becomes `{a,c},{b,d}`.
    Parallel,
}

/// Replace two edges by two others on the same four endpoints.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SwitchStep {
    pub removed: [(usize, usize); 2],
    pub added: [(usize, usize); 2],
}

impl SwitchStep {
    /// Removes `{a,b}` and `{c,d}`, adds the pair chosen by `rewiring`.
    pub fn new(a: usize, b: usize, c: usize, d: usize, rewiring: Rewiring) -> Self {
        let added = match rewiring {
            Rewiring::Crossed => [(a, d), (b, c)],
            Rewiring::Parallel => [(a, c), (b, d)],
        };
        SwitchStep {
            removed: [(a, b), (c, d)],
            added,
        }
    }

    pub fn inverse(&self) -> Self {
        SwitchStep {
            removed: self.added,
            added: self.removed,
        }
    }

    pub fn check(&self, g: &Graph) -> Result<()> {
        let [(a, b), (c, d)] = self.removed;
        let verts = [a, b, c, d];
        if verts.iter().any(|&v| v >= g.n()) {
            return Err(Error::InvalidSwitch("vertex out of range".into()));
        }
        for i in 0..4 {
            if verts[i + 1..].contains(&verts[i]) {
                return Err(Error::InvalidSwitch("endpoints must be distinct".into()));
            }
        }
        let norm = |(u, v): (usize, usize)| (u.min(v), u.max(v));
        let mut added: Vec<_> = self.added.iter().map(|&e| norm(e)).collect();
        let mut removed: Vec<_> = self.removed.iter().map(|&e| norm(e)).collect();
        added.sort_unstable();
        removed.sort_unstable();
        let mut covered: Vec<usize> = self.added.iter().flat_map(|&(u, v)| [u, v]).collect();
        covered.sort_unstable();
        let mut expected = verts.to_vec();
        expected.sort_unstable();
        if covered != expected || added == removed {
            return Err(Error::InvalidSwitch(
                "added edges must rematch the same four endpoints".into(),
            ));
        }
        if let Some(&(u, v)) = self.removed.iter().find(|&&(u, v)| !g.has_edge(u, v)) {
            return Err(Error::InvalidSwitch(format!("edge {u}-{v} is absent")));
        }
        if let Some(&(u, v)) = self.added.iter().find(|&&(u, v)| g.has_edge(u, v)) {
            return Err(Error::InvalidSwitch(format!(
                "edge {u}-{v} already present"
            )));
        }
        Ok(())
    }
}

pub fn two_switch(g: &Graph, step: &SwitchStep) -> Result<Graph> {
    step.check(g)?;
    let mut h = g.clone();
    for &(u, v) in &step.removed {
        h.remove_edge(u, v)?;
    }
    for &(u, v) in &step.added {
        h.add_edge(u, v)?;
    }
    Ok(h)
}

/// Runs `steps` proposals of the switch chain from `g`.
///
/// Each proposal draws an ordered pair of distinct edges uniformly and one of
/// the two rewirings uniformly; proposals that would create a loop or a
/// multi-edge are rejected but still consume the step. Randomness comes from
/// ChaCha8 seeded with `seed`, so walks are reproducible.
pub fn random_switch_walk(g: &Graph, steps: u64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut h = g.clone();
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    let m = edges.len();
    if m < 2 {
        return h;
    }
    for _ in 0..steps {
        let i = rng.gen_range(0..m);
        let mut j = rng.gen_range(0..m - 1);
        if j >= i {
            j += 1;
        }
        let rewiring = if rng.gen::<bool>() {
            Rewiring::Crossed
        } else {
            Rewiring::Parallel
        };
        let ((a, b), (c, d)) = (edges[i], edges[j]);
        let step = SwitchStep::new(a, b, c, d, rewiring);
        if step.check(&h).is_err() {
            continue;
        }
        for &(u, v) in &step.removed {
            h.remove_edge(u, v).expect("checked present");
        }
        for &(u, v) in &step.added {
            h.add_edge(u, v).expect("checked absent");
        }
        let norm = |(u, v): (usize, usize)| (u.min(v), u.max(v));
        edges[i] = norm(step.added[0]);
        edges[j] = norm(step.added[1]);
    }
    h
}

/// Disjoint union of four copies of a cubic graph. Its degree sequence is
/// that of `n` disjoint copies of `K_4`.
pub fn four_copies(g: &Graph) -> Result<Graph> {
    if (0..g.n()).any(|v| g.degree(v) != 3) {
        return Err(Error::NotCubic);
    }
    Ok(disjoint_union(&[
        g.clone(),
        g.clone(),
        g.clone(),
        g.clone(),
    ]))
}
