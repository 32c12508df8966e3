//! Brute-force reference for the three domination parameters.
//!
//! `oracle_min_set` enumerates all vertex subsets in increasing cardinality
//! and returns the first valid one. It deliberately shares no code with the
//! branch-and-bound minimizers: validity is rechecked here vertex by vertex
//! through `has_edge`, and connectivity of a candidate set is decided with
//! union-find instead of the bitset expansion used elsewhere. Exponential
//! and happy about it; meant for graphs of at most a dozen or so vertices,
//! where it double-checks the clever code.

use crate::graph::{Graph, VertexSet};
use crate::solve::{ParameterTriple, SolveError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    Plain,
    Total,
    Connected,
}

fn valid_plain(g: &Graph, mask: u64) -> bool {
    (0..g.n())
        .all(|v| mask >> v & 1 == 1 || (0..g.n()).any(|u| mask >> u & 1 == 1 && g.has_edge(u, v)))
}

fn valid_total(g: &Graph, mask: u64) -> bool {
    (0..g.n()).all(|v| (0..g.n()).any(|u| u != v && mask >> u & 1 == 1 && g.has_edge(u, v)))
}

/// Union-find connectivity over the subgraph induced by `mask`.
fn mask_connected(g: &Graph, mask: u64) -> bool {
    let n = g.n();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for u in 0..n {
        for v in u + 1..n {
            if mask >> u & 1 == 1 && mask >> v & 1 == 1 && g.has_edge(u, v) {
                let ru = find(&mut parent, u);
                let rv = find(&mut parent, v);
                parent[ru] = rv;
            }
        }
    }
    let mut root = None;
    for v in 0..n {
        if mask >> v & 1 == 1 {
            let r = find(&mut parent, v);
            if *root.get_or_insert(r) != r {
                return false;
            }
        }
    }
    root.is_some()
}

fn valid(g: &Graph, mask: u64, variant: Variant) -> bool {
    match variant {
        Variant::Plain => valid_plain(g, mask),
        Variant::Total => valid_total(g, mask),
        Variant::Connected => valid_plain(g, mask) && mask_connected(g, mask),
    }
}

/// Next mask with the same popcount (Gosper's hack), or `None` once the
/// masks leave the `n`-bit range.
fn next_same_size(mask: u64, n: usize) -> Option<u64> {
    let low = mask & mask.wrapping_neg();
    let carry = mask + low;
    let next = (((mask ^ carry) >> 2) / low) | carry;
    (next >> n == 0).then_some(next)
}

/// Smallest valid set of the given kind, by exhaustive enumeration in
/// increasing cardinality. Same undefinedness rules as the minimizers:
/// `Total` on a graph with an isolated vertex and `Connected` on a
/// disconnected graph are errors.
pub fn oracle_min_set(g: &Graph, variant: Variant) -> Result<(usize, VertexSet), SolveError> {
    let n = g.n();
    debug_assert!(n < 64, "oracle enumeration needs n < 64");
    match variant {
        Variant::Total => {
            if let Some(vertex) = g.isolated_vertex() {
                return Err(SolveError::IsolatedVertex { vertex });
            }
        }
        Variant::Connected => {
            if !g.is_connected() {
                return Err(SolveError::Disconnected);
            }
        }
        Variant::Plain => {}
    }
    for k in 1..=n {
        let mut mask = (1u64 << k) - 1;
        loop {
            if valid(g, mask, variant) {
                return Ok((k, VertexSet::from_bits(mask)));
            }
            match next_same_size(mask, n) {
                Some(next) => mask = next,
                None => break,
            }
        }
    }
    unreachable!("the full vertex set is always valid once the variant is defined");
}

/// All three parameters by brute force, with the same absence rules as the
/// solver's `parameter_triple`.
pub fn oracle_triple(g: &Graph) -> ParameterTriple {
    let (gamma, gamma_certificate) = oracle_min_set(g, Variant::Plain).unwrap();
    let (gamma_t, gamma_t_certificate) = match oracle_min_set(g, Variant::Total) {
        Ok((k, s)) => (Some(k), Some(s)),
        Err(_) => (None, None),
    };
    let (gamma_c, gamma_c_certificate) = match oracle_min_set(g, Variant::Connected) {
        Ok((k, s)) => (Some(k), Some(s)),
        Err(_) => (None, None),
    };
    ParameterTriple {
        gamma,
        gamma_t,
        gamma_c,
        gamma_certificate,
        gamma_t_certificate,
        gamma_c_certificate,
    }
}
