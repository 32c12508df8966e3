//! Exhaustive enumeration of small labeled connected graphs.
//!
//! Graphs on n vertices are identified with bitmasks over the n(n-1)/2
//! vertex pairs in column order (the graph6 bit order), and yielded in
//! ascending mask order, which makes every run reproduce the same stream.
//! With `dedupe` set, only the first representative of each isomorphism
//! class survives; canonical forms are computed by brute force over all
//! vertex permutations, which is the reason for the small n cap.

use std::collections::HashSet;

use thiserror::Error;

use crate::graph::Graph;

/// Permutation canonicalization is n! work per graph, so the enumerator
/// stops at 8 vertices.
pub const MAX_ENUMERATE_N: usize = 8;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("enumeration supports 1..={MAX_ENUMERATE_N} vertices, got {0}")]
pub struct EnumerateError(pub usize);

/// Bit position of pair (u, v), u < v, in column order.
fn pair_index(u: usize, v: usize) -> usize {
    v * (v - 1) / 2 + u
}

fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut adj = vec![0u64; n];
    for v in 1..n {
        for u in 0..v {
            if mask >> pair_index(u, v) & 1 == 1 {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
        }
    }
    Graph::from_adjacency_masks(n, adj)
}

/// Smallest pair mask obtainable by relabeling the vertices; equal keys
/// mean isomorphic graphs. Callers should keep n at most `MAX_ENUMERATE_N`.
pub fn canonical_key(g: &Graph) -> u64 {
    let n = g.n();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    // Heap's algorithm over all n! relabelings.
    let mut c = vec![0usize; n];
    let relabeled_mask = |perm: &[usize]| -> u64 {
        let mut mask = 0u64;
        for (u, v) in g.edges() {
            let (a, b) = (perm[u].min(perm[v]), perm[u].max(perm[v]));
            mask |= 1 << pair_index(a, b);
        }
        mask
    };
    best = best.min(relabeled_mask(&perm));
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            best = best.min(relabeled_mask(&perm));
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    best
}

/// Iterator over every labeled simple connected graph on exactly `n`
/// vertices, in ascending pair-mask order. With `dedupe`, one graph per
/// isomorphism class (the first encountered).
pub fn enumerate_connected_graphs(
    n: usize,
    dedupe: bool,
) -> Result<impl Iterator<Item = Graph>, EnumerateError> {
    if n == 0 || n > MAX_ENUMERATE_N {
        return Err(EnumerateError(n));
    }
    let bits = n * (n - 1) / 2;
    let mut seen: HashSet<u64> = HashSet::new();
    Ok((0u64..1 << bits).filter_map(move |mask| {
        let g = graph_from_mask(n, mask);
        if !g.is_connected() {
            return None;
        }
        if dedupe && !seen.insert(canonical_key(&g)) {
            return None;
        }
        Some(g)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cycle, path};

    // Labeled connected graph counts 1, 1, 4, 38, 728, 26704 and
    // isomorphism class counts 1, 1, 2, 6, 21, 112 are standard.
    #[test]
    fn labeled_counts_up_to_6() {
        let expected = [1usize, 1, 4, 38, 728, 26704];
        for (i, &want) in expected.iter().enumerate() {
            let n = i + 1;
            assert_eq!(
                enumerate_connected_graphs(n, false).unwrap().count(),
                want,
                "n={n}"
            );
        }
    }

    #[test]
    fn class_counts_up_to_6() {
        let expected = [1usize, 1, 2, 6, 21, 112];
        for (i, &want) in expected.iter().enumerate() {
            let n = i + 1;
            assert_eq!(
                enumerate_connected_graphs(n, true).unwrap().count(),
                want,
                "n={n}"
            );
        }
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(enumerate_connected_graphs(0, false).is_err());
        assert!(enumerate_connected_graphs(9, false).is_err());
    }

    #[test]
    fn masks_ascend_and_end_at_complete() {
        let graphs: Vec<_> = enumerate_connected_graphs(3, false).unwrap().collect();
        assert_eq!(graphs.len(), 4);
        // The last graph in mask order on 3 vertices is the triangle.
        assert_eq!(graphs.last().unwrap().edge_count(), 3);
        let edge_counts: Vec<_> = graphs.iter().map(|g| g.edge_count()).collect();
        assert_eq!(edge_counts, [2, 2, 2, 3]);
    }

    #[test]
    fn canonical_key_identifies_isomorphs() {
        let p4a = path(4).unwrap();
        // The same path with the ends relabeled inward.
        let p4b = Graph::from_edge_list(4, &[(2, 0), (0, 1), (1, 3)]).unwrap();
        assert_eq!(canonical_key(&p4a), canonical_key(&p4b));
        assert_ne!(canonical_key(&p4a), canonical_key(&cycle(4).unwrap()));
    }
}
