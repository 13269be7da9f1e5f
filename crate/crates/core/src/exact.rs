//! Exact independence and clique numbers with certificates.
//!
//! The solver is a branch-and-bound over independent sets. A greedy clique
//! cover of the remaining candidates bounds how many more vertices can be
//! added; the branching vertex is the candidate of maximum remaining degree,
//! lowest index first. Connected components are solved separately.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{complement, connected_components, induced_subgraph, Graph, VertexSet};

pub const DEFAULT_CAP: usize = 64;
pub const BRUTE_FORCE_CAP: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertificateKind {
    IndependentSet,
    Clique,
}

/// A vertex set claimed to be independent (or a clique) in some graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessCertificate {
    pub vertices: VertexSet,
    pub kind: CertificateKind,
}

impl WitnessCertificate {
    pub fn size(&self) -> usize {
        self.vertices.len()
    }

    pub fn validate(&self, g: &Graph) -> bool {
        match self.kind {
            CertificateKind::IndependentSet => self.vertices.is_independent_in(g),
            CertificateKind::Clique => self.vertices.is_clique_in(g),
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
struct Bitset(Vec<u64>);

impl Bitset {
    fn empty(n: usize) -> Self {
        Bitset(vec![0; n.div_ceil(64)])
    }

    fn full(n: usize) -> Self {
        let mut b = Bitset::empty(n);
        for v in 0..n {
            b.insert(v);
        }
        b
    }

    fn insert(&mut self, v: usize) {
        self.0[v / 64] |= 1 << (v % 64);
    }

    fn remove(&mut self, v: usize) {
        self.0[v / 64] &= !(1 << (v % 64));
    }

    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    fn first(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, &w)| i * 64 + w.trailing_zeros() as usize)
    }

    fn and_count(&self, other: &Bitset) -> u32 {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a & b).count_ones())
            .sum()
    }

    fn and_assign(&mut self, other: &Bitset) {
        self.0.iter_mut().zip(&other.0).for_each(|(a, b)| *a &= b);
    }

    fn and_not_assign(&mut self, other: &Bitset) {
        self.0.iter_mut().zip(&other.0).for_each(|(a, b)| *a &= !b);
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            })
        })
    }
}

/// Exact solver with a configurable vertex cap.
#[derive(Clone, Copy, Debug)]
pub struct ExactSolver {
    pub cap: usize,
}

impl Default for ExactSolver {
    fn default() -> Self {
        ExactSolver { cap: DEFAULT_CAP }
    }
}

impl ExactSolver {
    pub fn with_cap(cap: usize) -> Self {
        ExactSolver { cap }
    }

    pub fn max_independent_set(&self, g: &Graph) -> Result<WitnessCertificate> {
        if g.n() > self.cap {
            return Err(Error::SizeLimit {
                what: "exact solver",
                cap: self.cap,
                n: g.n(),
            });
        }
        let mut members = Vec::new();
        for comp in connected_components(g) {
            let sub = induced_subgraph(g, &comp)?;
            members.extend(solve(&sub).into_iter().map(|v| comp.as_slice()[v]));
        }
        Ok(WitnessCertificate {
            vertices: VertexSet::new(members),
            kind: CertificateKind::IndependentSet,
        })
    }

    /// Maximum independent set of the complement, read as a clique.
    pub fn max_clique(&self, g: &Graph) -> Result<WitnessCertificate> {
        let cert = self.max_independent_set(&complement(g))?;
        Ok(WitnessCertificate {
            vertices: cert.vertices,
            kind: CertificateKind::Clique,
        })
    }
}

fn solve(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let adj: Vec<Bitset> = (0..n)
        .map(|u| {
            let mut b = Bitset::empty(n);
            g.neighbors(u).iter().for_each(|&v| b.insert(v));
            b
        })
        .collect();
    let mut search = MisSearch {
        adj: &adj,
        best: Vec::new(),
        current: Vec::new(),
    };
    search.run(Bitset::full(n));
    search.best
}

struct MisSearch<'a> {
    adj: &'a [Bitset],
    best: Vec<usize>,
    current: Vec<usize>,
}

impl MisSearch<'_> {
    fn record(&mut self) {
        let mut cand = self.current.clone();
        cand.sort_unstable();
        if cand.len() > self.best.len() || (cand.len() == self.best.len() && cand < self.best) {
            self.best = cand;
        }
    }

    /// Number of cliques in a greedy clique cover of `cand`.
    fn clique_cover_bound(&self, cand: &Bitset) -> usize {
        let mut rest = cand.clone();
        let mut count = 0;
        while let Some(u) = rest.first() {
            rest.remove(u);
            let mut common = rest.clone();
            common.and_assign(&self.adj[u]);
            while let Some(w) = common.first() {
                rest.remove(w);
                common.remove(w);
                common.and_assign(&self.adj[w]);
            }
            count += 1;
        }
        count
    }

    fn run(&mut self, cand: Bitset) {
        if cand.is_empty() {
            self.record();
            return;
        }
        if self.current.len() + self.clique_cover_bound(&cand) <= self.best.len() {
            return;
        }
        let mut branch = None;
        let mut best_deg = 0;
        for v in cand.iter() {
            let deg = cand.and_count(&self.adj[v]);
            if branch.is_none() || deg > best_deg {
                branch = Some(v);
                best_deg = deg;
            }
        }
        let v = branch.expect("non-empty candidates");
        if best_deg == 0 {
            let before = self.current.len();
            self.current.extend(cand.iter());
            self.record();
            self.current.truncate(before);
            return;
        }
        let mut with = cand.clone();
        with.remove(v);
        with.and_not_assign(&self.adj[v]);
        self.current.push(v);
        self.run(with);
        self.current.pop();

        let mut without = cand;
        without.remove(v);
        self.run(without);
    }
}

pub fn max_independent_set(g: &Graph) -> Result<WitnessCertificate> {
    ExactSolver::default().max_independent_set(g)
}

pub fn max_clique(g: &Graph) -> Result<WitnessCertificate> {
    ExactSolver::default().max_clique(g)
}

pub fn independence_number(g: &Graph) -> Result<usize> {
    Ok(max_independent_set(g)?.size())
}

pub fn clique_number(g: &Graph) -> Result<usize> {
    Ok(max_clique(g)?.size())
}

/// Largest independent subset over all `2^n` subsets. Independent of the
/// branch-and-bound; used as a cross-check.
pub fn brute_force_alpha(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n > BRUTE_FORCE_CAP {
        return Err(Error::SizeLimit {
            what: "brute-force independence number",
            cap: BRUTE_FORCE_CAP,
            n,
        });
    }
    let adj: Vec<u32> = (0..n)
        .map(|u| g.neighbors(u).iter().fold(0, |acc, &v| acc | (1 << v)))
        .collect();
    let mut best = 0;
    for mask in 0u32..(1u32 << n) {
        let size = mask.count_ones();
        if size <= best {
            continue;
        }
        let mut rest = mask;
        let mut independent = true;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if adj[v] & mask != 0 {
                independent = false;
                break;
            }
        }
        if independent {
            best = size;
        }
    }
    Ok(best as usize)
}
