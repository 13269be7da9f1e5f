//! Constructive `k + 1` certificates.
//!
//! Given a graph with the degree sequence of `K_{a_1} ∪ ... ∪ K_{a_k}` that is
//! not that graph itself, build an independent set of size `k + 1` in
//! polynomial time:
//!
//! 1. Strip clique components. Each removed `K_q` drops one part `q` from the
//!    profile and contributes one vertex to the final set.
//! 2. Layer the remaining vertices by degree: `S_i` holds `a_i` vertices of
//!    degree `a_i - 1`. Let `c` be the number of minimum-size parts.
//! 3. In `G^c = G[S_1 ∪ ... ∪ S_c]`, a greedy maximal independent set has at
//!    least `c` members. If it has exactly `c`, their closed neighborhoods
//!    partition `G^c`, and some neighborhood is not a clique (otherwise `G`
//!    would have a clique component); swapping its center for two
//!    non-adjacent neighbors gives `c + 1`.
//! 4. For each further layer, some vertex of `G^{c+j+1}` avoids the current
//!    set, because the set's degree sum is strictly smaller than the number of
//!    vertices outside it. Add the first such vertex.

use crate::error::{Error, Result};
use crate::exact::{CertificateKind, WitnessCertificate};
use crate::graph::{complement, connected_components, induced_subgraph, Graph, VertexSet};
use crate::recognition::{
    clique_union_profile_from_degrees, is_clique_union, is_complete_multipartite,
    multipartite_profile_from_degrees, Flavor, PartitionProfile,
};
use crate::OpCounter;

/// Result of removing every clique component.
#[derive(Clone, Debug)]
pub struct Stripped {
    pub graph: Graph,
    pub profile: PartitionProfile,
    /// Original index of each vertex of `graph`.
    pub kept: Vec<usize>,
    /// Removed clique components, in original indices.
    pub removed: Vec<VertexSet>,
}

pub fn strip_clique_components(g: &Graph, p: &PartitionProfile) -> Result<Stripped> {
    strip_clique_components_counted(g, p, &mut OpCounter::default())
}

fn strip_clique_components_counted(
    g: &Graph,
    p: &PartitionProfile,
    ops: &mut OpCounter,
) -> Result<Stripped> {
    let mut parts = p.parts().to_vec();
    let mut kept = Vec::new();
    let mut removed = Vec::new();
    for comp in connected_components(g) {
        let q = comp.len();
        ops.tick((q + comp.iter().map(|v| g.degree(v)).sum::<usize>()) as u64);
        if comp.iter().all(|v| g.degree(v) == q - 1) {
            let pos = parts.iter().position(|&a| a == q).ok_or_else(|| {
                Error::ProofInvariant(format!("clique component of size {q} has no matching part"))
            })?;
            parts.remove(pos);
            removed.push(comp);
        } else {
            kept.extend(comp.iter());
        }
    }
    kept.sort_unstable();
    let keep_set = VertexSet::new(kept.clone());
    Ok(Stripped {
        graph: induced_subgraph(g, &keep_set)?,
        profile: PartitionProfile::new(parts, Flavor::CliqueUnion)?,
        kept,
        removed,
    })
}

/// Bookkeeping of the layered construction on a clique-free working graph.
#[derive(Clone, Debug)]
pub struct ProofState {
    pub graph: Graph,
    pub profile: PartitionProfile,
    /// Number of parts of minimum size.
    pub c: usize,
    /// `layers[i]` holds `a_i` vertices of degree `a_i - 1`.
    pub layers: Vec<Vec<usize>>,
    pub independent: Vec<usize>,
    /// Layers added beyond the base `c`.
    pub j: usize,
}

impl ProofState {
    /// Assigns vertices to layers: vertices sorted by (degree, index) are cut
    /// into consecutive blocks of sizes `a_1, ..., a_k`.
    pub fn new(graph: Graph, profile: PartitionProfile) -> Result<Self> {
        if graph.n() != profile.n() {
            return Err(Error::ProofInvariant(format!(
                "graph has {} vertices, profile covers {}",
                graph.n(),
                profile.n()
            )));
        }
        let mut order: Vec<usize> = (0..graph.n()).collect();
        order.sort_by_key(|&v| (graph.degree(v), v));
        let mut layers = Vec::with_capacity(profile.k());
        let mut start = 0;
        for &a in profile.parts() {
            let layer: Vec<usize> = order[start..start + a].to_vec();
            if layer.iter().any(|&v| graph.degree(v) != a - 1) {
                return Err(Error::OutsideFamily("disjoint union of cliques"));
            }
            start += a;
            layers.push(layer);
        }
        Ok(ProofState {
            c: profile.min_part_count(),
            graph,
            profile,
            layers,
            independent: Vec::new(),
            j: 0,
        })
    }

    fn prefix_mask(&self, layers: usize) -> Vec<bool> {
        let mut mask = vec![false; self.graph.n()];
        for layer in &self.layers[..layers] {
            for &v in layer {
                mask[v] = true;
            }
        }
        mask
    }
}

pub fn base_independent_set(state: &ProofState) -> Result<VertexSet> {
    base_independent_set_counted(state, &mut OpCounter::default())
}

fn base_independent_set_counted(state: &ProofState, ops: &mut OpCounter) -> Result<VertexSet> {
    let g = &state.graph;
    let c = state.c;
    if g.n() == 0 || c == 0 {
        return Err(Error::ProofInvariant("empty working graph".into()));
    }
    let inside = state.prefix_mask(c);
    let mut blocked = vec![false; g.n()];
    let mut greedy = Vec::new();
    for v in 0..g.n() {
        ops.tick(1);
        if !inside[v] || blocked[v] {
            continue;
        }
        greedy.push(v);
        for &u in g.neighbors(v) {
            ops.tick(1);
            blocked[u] = true;
        }
    }
    if greedy.len() > c {
        greedy.truncate(c + 1);
        return Ok(VertexSet::new(greedy));
    }
    if greedy.len() < c {
        return Err(Error::ProofInvariant(format!(
            "maximal independent set of size {} below c = {c}",
            greedy.len()
        )));
    }
    for (idx, &x) in greedy.iter().enumerate() {
        let nbrs: Vec<usize> = g
            .neighbors(x)
            .iter()
            .copied()
            .filter(|&u| inside[u])
            .collect();
        for (i, &y) in nbrs.iter().enumerate() {
            for &z in &nbrs[i + 1..] {
                ops.tick(1);
                if !g.has_edge(y, z) {
                    let mut set = greedy.clone();
                    set.remove(idx);
                    set.extend([y, z]);
                    return Ok(VertexSet::new(set));
                }
            }
        }
    }
    Err(Error::ProofInvariant(
        "every greedy neighborhood is a clique; graph has a clique component".into(),
    ))
}

pub fn extend_independent_set(state: ProofState) -> Result<ProofState> {
    extend_independent_set_counted(state, &mut OpCounter::default())
}

fn extend_independent_set_counted(
    mut state: ProofState,
    ops: &mut OpCounter,
) -> Result<ProofState> {
    let k = state.profile.k();
    let expected = state.c + state.j + 1;
    if state.c + state.j >= k || state.independent.len() != expected {
        return Err(Error::ProofInvariant(format!(
            "cannot extend at layer {} of {k} with {} vertices",
            state.c + state.j,
            state.independent.len()
        )));
    }
    let inside = state.prefix_mask(state.c + state.j + 1);
    let mut hit = vec![false; state.graph.n()];
    for &x in &state.independent {
        hit[x] = true;
        for &u in state.graph.neighbors(x) {
            ops.tick(1);
            hit[u] = true;
        }
    }
    let next = (0..state.graph.n())
        .inspect(|_| ops.tick(1))
        .find(|&v| inside[v] && !hit[v])
        .ok_or_else(|| Error::ProofInvariant("no vertex extends the independent set".into()))?;
    state.independent.push(next);
    state.j += 1;
    Ok(state)
}

pub fn witness_independent_set(g: &Graph) -> Result<WitnessCertificate> {
    witness_independent_set_counted(g, &mut OpCounter::default())
}

pub fn witness_independent_set_counted(
    g: &Graph,
    ops: &mut OpCounter,
) -> Result<WitnessCertificate> {
    let profile = clique_union_profile_from_degrees(&g.degree_sequence())
        .ok_or(Error::OutsideFamily("disjoint union of cliques"))?;
    ops.tick((g.n() + 2 * g.m()) as u64);
    if is_clique_union(g).is_some() {
        return Err(Error::Canonical("disjoint union of cliques"));
    }
    let stripped = strip_clique_components_counted(g, &profile, ops)?;
    let mut state = ProofState::new(stripped.graph, stripped.profile)?;
    state.independent = base_independent_set_counted(&state, ops)?.into_vec();
    while state.c + state.j < state.profile.k() {
        state = extend_independent_set_counted(state, ops)?;
    }
    let mut vertices: Vec<usize> = state
        .independent
        .iter()
        .map(|&v| stripped.kept[v])
        .collect();
    vertices.extend(stripped.removed.iter().map(|comp| comp.as_slice()[0]));
    let cert = WitnessCertificate {
        vertices: VertexSet::new(vertices),
        kind: CertificateKind::IndependentSet,
    };
    if cert.size() != profile.k() + 1 || !cert.validate(g) {
        return Err(Error::ProofInvariant(
            "certificate failed validation".into(),
        ));
    }
    Ok(cert)
}

/// Clique of size `k + 1` in a non-canonical realization of the degree
/// sequence of `K_{a_1,...,a_k}`, via the complement.
pub fn witness_clique(g: &Graph) -> Result<WitnessCertificate> {
    multipartite_profile_from_degrees(&g.degree_sequence())?
        .ok_or(Error::OutsideFamily("complete multipartite graph"))?;
    if is_complete_multipartite(g).is_some() {
        return Err(Error::Canonical("complete multipartite graph"));
    }
    let cert = witness_independent_set(&complement(g)).map_err(|e| match e {
        Error::Canonical(_) => Error::Canonical("complete multipartite graph"),
        Error::OutsideFamily(_) => Error::OutsideFamily("complete multipartite graph"),
        other => other,
    })?;
    Ok(WitnessCertificate {
        vertices: cert.vertices,
        kind: CertificateKind::Clique,
    })
}
