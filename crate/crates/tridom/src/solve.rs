//! Exact minimizers for the three domination parameters.
//!
//! A set S dominates the graph when every vertex is in S or adjacent to a
//! member (N[S] = V). It totally dominates when every vertex, members of S
//! included, has a neighbor in S (N(S) = V); this needs an isolated-free
//! graph. A connected dominating set additionally induces a connected
//! subgraph, which needs the whole graph connected.
//!
//! The minimizers search by increasing cardinality with branch-and-bound,
//! so the first set found is optimal. Branching is by ascending vertex
//! index everywhere, making the returned certificate a deterministic
//! function of the graph alone. `oracle_min_set` in the oracle module
//! recomputes the same values by plain subset enumeration and shares none
//! of this search code.

use std::time::Instant;

use thiserror::Error;

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum SolveError {
    #[error("total domination undefined: vertex {vertex} is isolated")]
    IsolatedVertex { vertex: usize },
    #[error("connected domination undefined: graph is disconnected")]
    Disconnected,
    #[error("time budget exhausted")]
    Timeout,
}

/// N[s] = V: every vertex is in `s` or adjacent to it.
pub fn is_dominating(g: &Graph, s: VertexSet) -> bool {
    g.closed_neighborhood(s) == g.full_set()
}

/// N(s) = V: every vertex has a neighbor in `s`.
pub fn is_total_dominating(g: &Graph, s: VertexSet) -> bool {
    g.open_neighborhood(s) == g.full_set()
}

/// Dominating and inducing a connected subgraph. The empty set fails
/// `is_dominating` first, so the connectivity question never sees it.
pub fn is_connected_dominating(g: &Graph, s: VertexSet) -> bool {
    is_dominating(g, s) && g.induces_connected(s).unwrap()
}

/// All three parameters of one graph with optimal certificates.
///
/// `gamma_t` is absent when the graph has an isolated vertex and `gamma_c`
/// when it is disconnected; `gamma` always exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParameterTriple {
    pub gamma: usize,
    pub gamma_t: Option<usize>,
    pub gamma_c: Option<usize>,
    pub gamma_certificate: VertexSet,
    pub gamma_t_certificate: Option<VertexSet>,
    pub gamma_c_certificate: Option<VertexSet>,
}

impl ParameterTriple {
    pub fn values(&self) -> (usize, Option<usize>, Option<usize>) {
        (self.gamma, self.gamma_t, self.gamma_c)
    }
}

/// How often the search polls the deadline, as a node-count mask.
const DEADLINE_POLL_MASK: u64 = 0xfff;

/// Search for a minimum cover under a "picking c covers cover[c]" rule.
/// Instantiated with closed neighborhoods for plain domination and open
/// neighborhoods for total domination.
struct CoverSearch<'a> {
    g: &'a Graph,
    full: u64,
    /// cover[c]: vertices covered by picking c.
    cover: Vec<u64>,
    /// Most vertices one pick can cover; used for the cardinality prune.
    max_gain: usize,
    deadline: Option<Instant>,
    nodes: u64,
}

impl<'a> CoverSearch<'a> {
    fn new(g: &'a Graph, closed: bool, deadline: Option<Instant>) -> CoverSearch<'a> {
        let cover: Vec<u64> = (0..g.n())
            .map(|v| {
                let row = g.neighbors(v).bits();
                if closed {
                    row | 1 << v
                } else {
                    row
                }
            })
            .collect();
        let max_gain = cover
            .iter()
            .map(|c| c.count_ones() as usize)
            .max()
            .unwrap_or(0);
        CoverSearch {
            g,
            full: g.full_set().bits(),
            cover,
            max_gain,
            deadline,
            nodes: 0,
        }
    }

    fn poll_deadline(&mut self) -> Result<(), SolveError> {
        if self.nodes & DEADLINE_POLL_MASK == 0 {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    return Err(SolveError::Timeout);
                }
            }
        }
        self.nodes += 1;
        Ok(())
    }

    /// Tries to extend to a full cover using at most `remaining` more
    /// picks. Branches on the candidates covering an uncovered vertex with
    /// the fewest of them; by symmetry of the neighborhood relation, the
    /// candidates covering v are exactly cover[v].
    fn dfs(
        &mut self,
        covered: u64,
        chosen: &mut Vec<usize>,
        remaining: usize,
    ) -> Result<bool, SolveError> {
        self.poll_deadline()?;
        if covered == self.full {
            return Ok(true);
        }
        if remaining == 0 {
            return Ok(false);
        }
        let uncovered = self.full & !covered;
        if uncovered.count_ones() as usize > remaining * self.max_gain {
            return Ok(false);
        }
        let mut best_cands = u64::MAX;
        let mut best_count = u32::MAX;
        let mut bits = uncovered;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let cands = self.cover[v];
            let count = cands.count_ones();
            if count < best_count {
                best_count = count;
                best_cands = cands;
                if count == 0 {
                    return Ok(false);
                }
            }
        }
        let mut cands = best_cands;
        while cands != 0 {
            let c = cands.trailing_zeros() as usize;
            cands &= cands - 1;
            chosen.push(c);
            if self.dfs(covered | self.cover[c], chosen, remaining - 1)? {
                return Ok(true);
            }
            chosen.pop();
        }
        Ok(false)
    }

    /// Increasing-cardinality outer loop: the first size that admits a
    /// cover is the minimum.
    fn run(&mut self, min_size: usize) -> Result<(usize, VertexSet), SolveError> {
        let n = self.g.n();
        let floor = (n + self.max_gain - 1) / self.max_gain.max(1);
        for k in min_size.max(floor)..=n {
            let mut chosen = Vec::with_capacity(k);
            if self.dfs(0, &mut chosen, k)? {
                return Ok((chosen.len(), chosen.into_iter().collect()));
            }
        }
        unreachable!("the full vertex set is a cover whenever the parameter is defined");
    }
}

/// Search for a minimum connected dominating set by growing connected sets
/// from each possible minimum vertex ("root"). At every step the branch
/// vertex is the lowest-index frontier vertex (adjacent to the partial set,
/// not yet decided); it is either included or excluded for good, so each
/// connected set rooted at the current root is visited once.
struct ConnectedSearch<'a> {
    g: &'a Graph,
    full: u64,
    closed: Vec<u64>,
    max_gain: usize,
    k: usize,
    deadline: Option<Instant>,
    nodes: u64,
}

impl<'a> ConnectedSearch<'a> {
    fn new(g: &'a Graph, deadline: Option<Instant>) -> ConnectedSearch<'a> {
        let closed: Vec<u64> = (0..g.n()).map(|v| g.neighbors(v).bits() | 1 << v).collect();
        let max_gain = closed
            .iter()
            .map(|c| c.count_ones() as usize)
            .max()
            .unwrap();
        ConnectedSearch {
            g,
            full: g.full_set().bits(),
            closed,
            max_gain,
            k: 0,
            deadline,
            nodes: 0,
        }
    }

    fn poll_deadline(&mut self) -> Result<(), SolveError> {
        if self.nodes & DEADLINE_POLL_MASK == 0 {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    return Err(SolveError::Timeout);
                }
            }
        }
        self.nodes += 1;
        Ok(())
    }

    fn dfs(
        &mut self,
        s: u64,
        size: usize,
        covered: u64,
        forbidden: u64,
    ) -> Result<Option<u64>, SolveError> {
        self.poll_deadline()?;
        if covered == self.full {
            return Ok(Some(s));
        }
        if size == self.k {
            return Ok(None);
        }
        let uncovered = self.full & !covered;
        if uncovered.count_ones() as usize > (self.k - size) * self.max_gain {
            return Ok(None);
        }
        // Even admitting every reachable allowed vertex, the set must be
        // able to cover the graph.
        let allowed = self.full & !forbidden;
        let mut reach = s;
        loop {
            let mut next = reach;
            let mut bits = reach;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                next |= self.closed[v] & allowed;
            }
            if next == reach {
                break;
            }
            reach = next;
        }
        let mut potential = reach;
        let mut bits = reach;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            potential |= self.closed[v];
        }
        if potential != self.full {
            return Ok(None);
        }
        let mut frontier = 0u64;
        let mut bits = s;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            frontier |= self.closed[v];
        }
        frontier &= !s & allowed;
        if frontier == 0 {
            return Ok(None);
        }
        let f = frontier.trailing_zeros() as usize;
        let f_bit = 1u64 << f;
        if let Some(solution) =
            self.dfs(s | f_bit, size + 1, covered | self.closed[f], forbidden)?
        {
            return Ok(Some(solution));
        }
        self.dfs(s, size, covered, forbidden | f_bit)
    }

    fn run(&mut self) -> Result<(usize, VertexSet), SolveError> {
        let n = self.g.n();
        let floor = n.div_ceil(self.max_gain);
        for k in floor.max(1)..=n {
            self.k = k;
            for root in 0..n {
                // Vertices below the root are off limits, so each candidate
                // set is explored only from its minimum vertex.
                let forbidden = (1u64 << root) - 1;
                if let Some(s) = self.dfs(1 << root, 1, self.closed[root], forbidden)? {
                    return Ok((s.count_ones() as usize, VertexSet::from_bits(s)));
                }
            }
        }
        unreachable!("the full vertex set of a connected graph is connected dominating");
    }
}

/// gamma and an optimal dominating set.
pub fn domination_number(g: &Graph) -> (usize, VertexSet) {
    domination_number_with_deadline(g, None).unwrap()
}

pub fn domination_number_with_deadline(
    g: &Graph,
    deadline: Option<Instant>,
) -> Result<(usize, VertexSet), SolveError> {
    CoverSearch::new(g, true, deadline).run(1)
}

/// gamma_t and an optimal total dominating set. Errors when some vertex is
/// isolated, naming the smallest such vertex.
pub fn total_domination_number(g: &Graph) -> Result<(usize, VertexSet), SolveError> {
    total_domination_number_with_deadline(g, None)
}

pub fn total_domination_number_with_deadline(
    g: &Graph,
    deadline: Option<Instant>,
) -> Result<(usize, VertexSet), SolveError> {
    if let Some(vertex) = g.isolated_vertex() {
        return Err(SolveError::IsolatedVertex { vertex });
    }
    // No single vertex totally dominates (it cannot cover itself), so the
    // search starts at two.
    CoverSearch::new(g, false, deadline).run(2.min(g.n()))
}

/// gamma_c and an optimal connected dominating set. Errors when the graph
/// is disconnected.
pub fn connected_domination_number(g: &Graph) -> Result<(usize, VertexSet), SolveError> {
    connected_domination_number_with_deadline(g, None)
}

pub fn connected_domination_number_with_deadline(
    g: &Graph,
    deadline: Option<Instant>,
) -> Result<(usize, VertexSet), SolveError> {
    if !g.is_connected() {
        return Err(SolveError::Disconnected);
    }
    ConnectedSearch::new(g, deadline).run()
}

/// All three parameters in one call. Undefined parameters come back as
/// `None`; only a timeout is an error.
pub fn parameter_triple(g: &Graph) -> ParameterTriple {
    parameter_triple_with_deadline(g, None).unwrap()
}

pub fn parameter_triple_with_deadline(
    g: &Graph,
    deadline: Option<Instant>,
) -> Result<ParameterTriple, SolveError> {
    let (gamma, gamma_certificate) = domination_number_with_deadline(g, deadline)?;
    let (gamma_t, gamma_t_certificate) = match total_domination_number_with_deadline(g, deadline) {
        Ok((k, s)) => (Some(k), Some(s)),
        Err(SolveError::IsolatedVertex { .. }) => (None, None),
        Err(e) => return Err(e),
    };
    let (gamma_c, gamma_c_certificate) =
        match connected_domination_number_with_deadline(g, deadline) {
            Ok((k, s)) => (Some(k), Some(s)),
            Err(SolveError::Disconnected) => (None, None),
            Err(e) => return Err(e),
        };
    if let (Some(gt), Some(gc)) = (gamma_t, gamma_c) {
        if gamma > 1 {
            // Any total or connected dominating set is dominating, and for
            // gamma > 1 a connected dominating set is also total. A breach
            // here is a search bug, never a property of the graph.
            assert!(
                gamma <= gt && gt <= gc,
                "solver inconsistency: gamma={gamma}, gamma_t={gt}, gamma_c={gc}"
            );
        }
    }
    Ok(ParameterTriple {
        gamma,
        gamma_t,
        gamma_c,
        gamma_certificate,
        gamma_t_certificate,
        gamma_c_certificate,
    })
}
