//! Recognition of complete multipartite graphs, clique unions, and of
//! degree sequences shared with either family.
//!
//! The graph predicates run in `O(n + m)`; the degree-sequence predicates
//! sort the degrees once (`O(n log n)`) and then only walk the multiplicity
//! runs.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::OpCounter;

/// A multiset of vertex degrees, stored sorted ascending.
///
/// Construction does not validate; [`DegreeSequence::check`] reports whether
/// the values could belong to a simple graph on `n` vertices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct DegreeSequence {
    degrees: Vec<usize>,
}

impl DegreeSequence {
    pub fn new(mut degrees: Vec<usize>) -> Self {
        degrees.sort_unstable();
        DegreeSequence { degrees }
    }

    /// Parses `"2,2,3"` or `"2 2 3"`.
    pub fn parse(s: &str) -> Result<Self> {
        let degrees = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::InvalidDegreeSequence(format!("'{t}' is not a degree")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(DegreeSequence::new(degrees))
    }

    pub fn n(&self) -> usize {
        self.degrees.len()
    }

    /// Sorted ascending.
    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn sum(&self) -> usize {
        self.degrees.iter().sum()
    }

    /// `(degree, count)` runs in ascending degree order.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &d in &self.degrees {
            match out.last_mut() {
                Some((last, count)) if *last == d => *count += 1,
                _ => out.push((d, 1)),
            }
        }
        out
    }

    /// `{n - 1 - d}`; requires every degree below `n`.
    pub fn complement(&self) -> Result<Self> {
        self.check_range()?;
        let n = self.n();
        Ok(DegreeSequence::new(
            self.degrees.iter().map(|&d| n - 1 - d).collect(),
        ))
    }

    fn check_range(&self) -> Result<()> {
        match self.degrees.last() {
            Some(&d) if d >= self.n() => Err(Error::InvalidDegreeSequence(format!(
                "degree {d} impossible on {} vertices",
                self.n()
            ))),
            _ => Ok(()),
        }
    }

    /// Degrees in range and even sum.
    pub fn check(&self) -> Result<()> {
        self.check_range()?;
        if !self.sum().is_multiple_of(2) {
            return Err(Error::InvalidDegreeSequence("odd degree sum".into()));
        }
        Ok(())
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.degrees.iter().map(usize::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Flavor {
    /// Part sizes of a complete multipartite graph.
    Multipartite,
    /// Component sizes of a disjoint union of cliques.
    CliqueUnion,
}

/// Sorted part sizes `a_1 <= ... <= a_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PartitionProfile {
    parts: Vec<usize>,
    flavor: Flavor,
}

impl PartitionProfile {
    /// Rejects zero-sized parts.
    pub fn new(mut parts: Vec<usize>, flavor: Flavor) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidArgument("part sizes must be positive".into()));
        }
        parts.sort_unstable();
        Ok(PartitionProfile { parts, flavor })
    }

    /// Parses `"3,3,4"`.
    pub fn parse(s: &str, flavor: Flavor) -> Result<Self> {
        let parts = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::InvalidArgument(format!("'{t}' is not a part size")))
            })
            .collect::<Result<Vec<_>>>()?;
        PartitionProfile::new(parts, flavor)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn k(&self) -> usize {
        self.parts.len()
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    /// Number of parts of minimum size.
    pub fn min_part_count(&self) -> usize {
        match self.parts.first() {
            Some(&a) => self.parts.iter().take_while(|&&x| x == a).count(),
            None => 0,
        }
    }

    pub fn with_flavor(&self, flavor: Flavor) -> Self {
        PartitionProfile {
            parts: self.parts.clone(),
            flavor,
        }
    }

    /// The canonical graph of the profile for its flavor.
    pub fn canonical_graph(&self) -> Graph {
        match self.flavor {
            Flavor::Multipartite => Graph::complete_multipartite(&self.parts),
            Flavor::CliqueUnion => Graph::clique_union(&self.parts),
        }
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        let n = self.n();
        let per_part = |a: usize| match self.flavor {
            Flavor::Multipartite => n - a,
            Flavor::CliqueUnion => a - 1,
        };
        DegreeSequence::new(
            self.parts
                .iter()
                .flat_map(|&a| std::iter::repeat_n(per_part(a), a))
                .collect(),
        )
    }
}

impl fmt::Display for PartitionProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

pub fn is_complete_multipartite(g: &Graph) -> Option<PartitionProfile> {
    is_complete_multipartite_counted(g, &mut OpCounter::default())
}

/// Peels parts off one at a time: the part of an unassigned vertex `v` must be
/// exactly its non-neighbors plus itself, and every member must have degree
/// `n - |part|` with no neighbor inside the part. Each peeled part costs
/// `O(n + sum of member degrees)`, which is `O(m)` per part once `k >= 2`.
pub fn is_complete_multipartite_counted(
    g: &Graph,
    ops: &mut OpCounter,
) -> Option<PartitionProfile> {
    let n = g.n();
    let mut part_of = vec![usize::MAX; n];
    let mut mark = vec![usize::MAX; n];
    let mut parts = Vec::new();
    for v in 0..n {
        ops.tick(1);
        if part_of[v] != usize::MAX {
            continue;
        }
        let id = parts.len();
        for &u in g.neighbors(v) {
            ops.tick(1);
            mark[u] = id;
        }
        let mut members = Vec::new();
        for u in 0..n {
            ops.tick(1);
            if mark[u] != id {
                if part_of[u] != usize::MAX {
                    return None;
                }
                members.push(u);
            }
        }
        let size = members.len();
        for &u in &members {
            part_of[u] = id;
        }
        for &u in &members {
            ops.tick(1);
            if g.degree(u) != n - size {
                return None;
            }
            for &w in g.neighbors(u) {
                ops.tick(1);
                if part_of[w] == id {
                    return None;
                }
            }
        }
        parts.push(size);
    }
    Some(PartitionProfile::new(parts, Flavor::Multipartite).expect("parts are non-empty"))
}

pub fn is_clique_union(g: &Graph) -> Option<PartitionProfile> {
    is_clique_union_counted(g, &mut OpCounter::default())
}

/// Every component must have all degrees equal to its size minus one.
pub fn is_clique_union_counted(g: &Graph, ops: &mut OpCounter) -> Option<PartitionProfile> {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut parts = Vec::new();
    let mut stack = Vec::new();
    for s in 0..n {
        ops.tick(1);
        if seen[s] {
            continue;
        }
        seen[s] = true;
        stack.push(s);
        let mut members = Vec::new();
        while let Some(u) = stack.pop() {
            members.push(u);
            for &w in g.neighbors(u) {
                ops.tick(1);
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        let size = members.len();
        if members.iter().any(|&u| g.degree(u) != size - 1) {
            return None;
        }
        parts.push(size);
    }
    Some(PartitionProfile::new(parts, Flavor::CliqueUnion).expect("parts are non-empty"))
}

/// Profile `p` with `D(K_p) = d`, if any: every degree value `d` must occur a
/// positive multiple of `n - d` times.
pub fn multipartite_profile_from_degrees(d: &DegreeSequence) -> Result<Option<PartitionProfile>> {
    multipartite_profile_from_degrees_counted(d, &mut OpCounter::default())
}

pub fn multipartite_profile_from_degrees_counted(
    d: &DegreeSequence,
    ops: &mut OpCounter,
) -> Result<Option<PartitionProfile>> {
    d.check_range()?;
    let n = d.n();
    let mut parts = Vec::new();
    for (deg, count) in d.multiplicities() {
        ops.tick(1);
        let size = n - deg;
        if count % size != 0 {
            return Ok(None);
        }
        parts.extend(std::iter::repeat_n(size, count / size));
    }
    Ok(Some(PartitionProfile::new(parts, Flavor::Multipartite)?))
}

/// Profile `p` with `D(K_{a_1} ∪ ... ∪ K_{a_k}) = d`, if any: every degree
/// value `d` must occur a multiple of `d + 1` times.
pub fn clique_union_profile_from_degrees(d: &DegreeSequence) -> Option<PartitionProfile> {
    clique_union_profile_from_degrees_counted(d, &mut OpCounter::default())
}

pub fn clique_union_profile_from_degrees_counted(
    d: &DegreeSequence,
    ops: &mut OpCounter,
) -> Option<PartitionProfile> {
    let mut parts = Vec::new();
    for (deg, count) in d.multiplicities() {
        ops.tick(1);
        let size = deg + 1;
        if count % size != 0 {
            return None;
        }
        parts.extend(std::iter::repeat_n(size, count / size));
    }
    PartitionProfile::new(parts, Flavor::CliqueUnion).ok()
}

/// Erdős–Gallai: with degrees sorted descending, for every `r`,
/// `sum_{i<=r} d_i <= r(r-1) + sum_{i>r} min(d_i, r)`.
pub fn is_graphical(d: &DegreeSequence) -> bool {
    let n = d.n();
    if !d.sum().is_multiple_of(2) || d.degrees().last().is_some_and(|&x| x >= n) {
        return false;
    }
    let desc: Vec<usize> = d.degrees().iter().rev().copied().collect();
    is_graphical_desc(&desc)
}

/// Erdős–Gallai on a sequence already sorted descending. Parity and range
/// are assumed checked by the caller.
pub(crate) fn is_graphical_desc(desc: &[usize]) -> bool {
    let n = desc.len();
    let mut lhs = 0usize;
    for r in 1..=n {
        lhs += desc[r - 1];
        let rhs = r * (r - 1) + desc[r..].iter().map(|&x| x.min(r)).sum::<usize>();
        if lhs > rhs {
            return false;
        }
    }
    true
}
