//! Canonical labeling for small graphs.
//!
//! Vertices are first split into an ordered partition by iterated degree
//! refinement (color = rank of the multiset of neighbor colors). The key is
//! the lexicographically smallest upper-triangle bit string over all vertex
//! orderings that respect that partition. Bits are emitted column by column,
//! so placing vertex `p` appends its adjacency to positions `0..p`, which
//! lets the search discard any branch whose prefix is already larger.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest graph accepted by the canonical labeler.
pub const CANON_MAX_N: usize = 12;

/// Largest pattern accepted by [`contains_induced`].
pub const PATTERN_MAX_N: usize = 6;

/// Isomorphism-invariant key: two graphs share a key iff they are isomorphic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey {
    n: u8,
    bits: u128,
}

impl CanonicalKey {
    pub fn n(&self) -> usize {
        self.n as usize
    }
}

pub fn canonical_key(g: &Graph) -> Result<CanonicalKey> {
    if g.n() > CANON_MAX_N {
        return Err(Error::SizeLimit {
            what: "canonical labeling",
            cap: CANON_MAX_N,
            n: g.n(),
        });
    }
    let adj: Vec<u32> = (0..g.n())
        .map(|u| g.neighbors(u).iter().fold(0u32, |acc, &v| acc | (1 << v)))
        .collect();
    Ok(key_from_masks(&adj))
}

pub(crate) fn key_from_masks(adj: &[u32]) -> CanonicalKey {
    let n = adj.len();
    debug_assert!(n <= CANON_MAX_N);
    let cells = refine(adj);
    let mut cell_at = Vec::with_capacity(n);
    for (c, cell) in cells.iter().enumerate() {
        cell_at.extend(std::iter::repeat_n(c, cell.len()));
    }
    let mut search = Search {
        adj,
        cells: &cells,
        cell_at: &cell_at,
        placed: Vec::with_capacity(n),
        used: 0,
        cur: vec![0; n + 1],
        best: None,
    };
    search.run(0, false);
    CanonicalKey {
        n: n as u8,
        bits: search.best.map_or(0, |b| b[n]),
    }
}

fn refine(adj: &[u32]) -> Vec<Vec<usize>> {
    let n = adj.len();
    let mut color = vec![0usize; n];
    let mut ncolors = usize::from(n > 0);
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut counts = vec![0usize; ncolors];
                let mut rest = adj[v];
                while rest != 0 {
                    let u = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    counts[color[u]] += 1;
                }
                (color[v], counts)
            })
            .collect();
        let mut distinct: Vec<&(usize, Vec<usize>)> = sigs.iter().collect();
        distinct.sort();
        distinct.dedup();
        let next = distinct.len();
        for v in 0..n {
            color[v] = distinct.binary_search(&&sigs[v]).expect("present");
        }
        if next == ncolors {
            break;
        }
        ncolors = next;
    }
    let mut cells = vec![Vec::new(); ncolors];
    for v in 0..n {
        cells[color[v]].push(v);
    }
    cells
}

struct Search<'a> {
    adj: &'a [u32],
    cells: &'a [Vec<usize>],
    cell_at: &'a [usize],
    placed: Vec<usize>,
    used: u32,
    // prefix value after placing `depth` vertices
    cur: Vec<u128>,
    best: Option<Vec<u128>>,
}

impl Search<'_> {
    fn row_bits(&self, v: usize) -> u128 {
        let p = self.placed.len();
        let mut bits = 0u128;
        for (i, &u) in self.placed.iter().enumerate() {
            if self.adj[v] & (1 << u) != 0 {
                bits |= 1 << (p - 1 - i);
            }
        }
        bits
    }

    fn run(&mut self, depth: usize, better: bool) {
        let n = self.adj.len();
        if depth == n {
            if self.best.is_none() || better {
                self.best = Some(self.cur.clone());
            }
            return;
        }
        let cell = &self.cells[self.cell_at[depth]];
        let mut min = u128::MAX;
        let mut choices: Vec<usize> = Vec::with_capacity(cell.len());
        for &v in cell {
            if self.used & (1 << v) != 0 {
                continue;
            }
            let bits = self.row_bits(v);
            if bits < min {
                min = bits;
                choices.clear();
            }
            if bits == min {
                choices.push(v);
            }
        }
        let prefix = (self.cur[depth] << depth) | min;
        let mut better = better;
        if let (false, Some(best)) = (better, &self.best) {
            match prefix.cmp(&best[depth + 1]) {
                std::cmp::Ordering::Greater => return,
                std::cmp::Ordering::Less => better = true,
                std::cmp::Ordering::Equal => {}
            }
        }
        self.cur[depth + 1] = prefix;
        for v in choices {
            self.placed.push(v);
            self.used |= 1 << v;
            self.run(depth + 1, better);
            self.used &= !(1 << v);
            self.placed.pop();
            // once a leaf improved on the incumbent, siblings compare against it
            if better {
                let best = self.best.as_ref().expect("leaf recorded");
                if prefix > best[depth + 1] {
                    return;
                }
                better = prefix < best[depth + 1];
            }
        }
    }
}

/// Isomorphism test via canonical keys; both graphs must have at most
/// [`CANON_MAX_N`] vertices.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    for x in [g, h] {
        if x.n() > CANON_MAX_N {
            return Err(Error::SizeLimit {
                what: "isomorphism testing",
                cap: CANON_MAX_N,
                n: x.n(),
            });
        }
    }
    if g.n() != h.n() || g.m() != h.m() || g.degree_sequence() != h.degree_sequence() {
        return Ok(false);
    }
    Ok(canonical_key(g)? == canonical_key(h)?)
}

/// Whether some vertex subset of `g` induces a copy of `pattern`.
pub fn contains_induced(g: &Graph, pattern: &Graph) -> Result<bool> {
    let k = pattern.n();
    if k > PATTERN_MAX_N {
        return Err(Error::SizeLimit {
            what: "induced pattern search",
            cap: PATTERN_MAX_N,
            n: k,
        });
    }
    if k > g.n() {
        return Ok(false);
    }
    let target = canonical_key(pattern)?;
    let mut subset: Vec<usize> = (0..k).collect();
    let mut masks = vec![0u32; k];
    loop {
        let mut edges = 0;
        for (i, &u) in subset.iter().enumerate() {
            masks[i] = 0;
            for (j, &v) in subset.iter().enumerate() {
                if i != j && g.has_edge(u, v) {
                    masks[i] |= 1 << j;
                    edges += 1;
                }
            }
        }
        if edges / 2 == pattern.m() && key_from_masks(&masks) == target {
            return Ok(true);
        }
        if !next_combination(&mut subset, g.n()) {
            return Ok(false);
        }
    }
}

/// Advances `combo` (strictly increasing indices below `n`) to the next
/// combination in lexicographic order.
pub(crate) fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if combo[i] < n - k + i {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::disjoint_union;

    fn relabel(g: &Graph, perm: &[usize]) -> Graph {
        Graph::from_edges(g.n(), g.edges().map(|(u, v)| (perm[u], perm[v]))).unwrap()
    }

    #[test]
    fn isomorphism_examples() {
        let c4 = Graph::cycle(4).unwrap();
        assert!(is_isomorphic(&c4, &Graph::complete_multipartite(&[2, 2])).unwrap());
        assert!(!is_isomorphic(&Graph::cycle(6).unwrap(), &Graph::clique_union(&[3, 3])).unwrap());
        let k3k2 = disjoint_union(&[Graph::complete(3), Graph::complete(2)]);
        assert!(!is_isomorphic(&Graph::path(5), &k3k2).unwrap());
    }

    #[test]
    fn relabeled_petersen_has_same_key() {
        let p = Graph::petersen();
        let perm = [7, 3, 9, 0, 5, 1, 8, 2, 6, 4];
        assert_eq!(
            canonical_key(&p).unwrap(),
            canonical_key(&relabel(&p, &perm)).unwrap()
        );
    }

    #[test]
    fn oversized_inputs_rejected() {
        let big = Graph::new(13);
        assert!(matches!(
            is_isomorphic(&big, &big),
            Err(Error::SizeLimit { cap: 12, .. })
        ));
        assert!(contains_induced(&big, &Graph::new(7)).is_err());
    }

    #[test]
    fn induced_patterns() {
        let c5 = Graph::cycle(5).unwrap();
        let p4 = Graph::path(4);
        assert!(contains_induced(&c5, &p4).unwrap());
        assert!(!contains_induced(&Graph::complete(4), &p4).unwrap());
        assert!(!contains_induced(&Graph::cycle(6).unwrap(), &c5).unwrap());
        assert!(contains_induced(&c5, &Graph::new(0)).unwrap());
    }

    #[test]
    fn key_distinguishes_all_graphs_on_five_vertices() {
        // 34 isomorphism classes of graphs on 5 vertices
        let pairs: Vec<(usize, usize)> = (0..5)
            .flat_map(|u| (u + 1..5).map(move |v| (u, v)))
            .collect();
        let mut keys = std::collections::HashSet::new();
        for mask in 0u32..1 << pairs.len() {
            let g = Graph::from_edges(
                5,
                pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e),
            )
            .unwrap();
            keys.insert(canonical_key(&g).unwrap());
        }
        assert_eq!(keys.len(), 34);
    }
}
