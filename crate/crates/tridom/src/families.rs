//! Named graph families, their constructors, and closed-form values of the
//! domination parameters where these are known.
//!
//! The formula functions return errors below their validity thresholds
//! instead of extrapolating; each threshold is noted on the function.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Graph, MAX_VERTICES};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("{family}({n}) undefined, needs n >= {min}")]
    TooSmall {
        family: &'static str,
        n: usize,
        min: usize,
    },
    #[error("{family}({n}) has {vertices} vertices, beyond the {MAX_VERTICES}-vertex limit")]
    TooLarge {
        family: &'static str,
        n: usize,
        vertices: usize,
    },
}

fn check_range(
    family: &'static str,
    n: usize,
    min: usize,
    vertices: usize,
) -> Result<(), FamilyError> {
    if n < min {
        Err(FamilyError::TooSmall { family, n, min })
    } else if vertices > MAX_VERTICES {
        Err(FamilyError::TooLarge {
            family,
            n,
            vertices,
        })
    } else {
        Ok(())
    }
}

/// Cycle `C_n`, `n >= 3`.
pub fn cycle(n: usize) -> Result<Graph, FamilyError> {
    check_range("cycle", n, 3, n)?;
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(Graph::from_edge_list(n, &edges).unwrap())
}

/// Path `P_n`, `n >= 1`.
pub fn path(n: usize) -> Result<Graph, FamilyError> {
    check_range("path", n, 1, n)?;
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Ok(Graph::from_edge_list(n, &edges).unwrap())
}

/// Complete graph `K_n`, `n >= 1`.
pub fn complete(n: usize) -> Result<Graph, FamilyError> {
    check_range("complete", n, 1, n)?;
    let mut edges = vec![];
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Ok(Graph::from_edge_list(n, &edges).unwrap())
}

/// Star `K_{1,n}` with `n >= 1` leaves. The center is vertex 0.
pub fn star(leaves: usize) -> Result<Graph, FamilyError> {
    check_range("star", leaves, 1, leaves + 1)?;
    let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
    Ok(Graph::from_edge_list(leaves + 1, &edges).unwrap())
}

/// Cartesian product: `(u, a)` is adjacent to `(v, b)` when `u = v` and
/// `ab` is an edge of `h`, or `a = b` and `uv` is an edge of `g`. Vertex
/// `(u, a)` gets index `u * h.n() + a`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph, FamilyError> {
    let vertices = g.n() * h.n();
    check_range("cartesian_product", vertices, 1, vertices)?;
    let mut edges = vec![];
    for u in 0..g.n() {
        for (a, b) in h.edges() {
            edges.push((u * h.n() + a, u * h.n() + b));
        }
    }
    for (u, v) in g.edges() {
        for a in 0..h.n() {
            edges.push((u * h.n() + a, v * h.n() + a));
        }
    }
    Ok(Graph::from_edge_list(vertices, &edges).unwrap())
}

/// Grid `P_3 x P_n` (3 rows of length `n`), `n >= 1`.
pub fn grid_p3(n: usize) -> Result<Graph, FamilyError> {
    check_range("p3grid", n, 1, 3 * n)?;
    cartesian_product(&path(3)?, &path(n)?)
}

/// Grid `P_4 x P_n` (4 rows of length `n`), `n >= 1`.
pub fn grid_p4(n: usize) -> Result<Graph, FamilyError> {
    check_range("p4grid", n, 1, 4 * n)?;
    cartesian_product(&path(4)?, &path(n)?)
}

/// The 15-vertex tree H: a three-vertex spine 0-1-2, a pendant path of two
/// vertices below each spine vertex, and two pendant paths of three
/// vertices attached to the middle spine vertex 1. Its parameter triple
/// (5, 10, 10) attains gamma_t = gamma + gamma_c / 2 with equality.
pub fn graph_h() -> Graph {
    Graph::from_edge_list(
        15,
        &[
            (0, 1),
            (1, 2),
            (0, 3),
            (3, 4),
            (1, 5),
            (5, 6),
            (2, 7),
            (7, 8),
            (1, 9),
            (9, 10),
            (10, 11),
            (1, 12),
            (12, 13),
            (13, 14),
        ],
    )
    .unwrap()
}

/// The 6-vertex graph G': a triangle on 0, 1, 2 with every side subdivided
/// once (3 between 0 and 1, 4 between 0 and 2, 5 between 1 and 2) plus a
/// triangle on the three subdivision vertices. Its parameter triple
/// (2, 2, 2) attains gamma_t = 2 gamma - gamma_c with equality.
pub fn graph_g_prime() -> Graph {
    Graph::from_edge_list(
        6,
        &[
            (0, 3),
            (1, 3),
            (0, 4),
            (2, 4),
            (1, 5),
            (2, 5),
            (3, 4),
            (4, 5),
            (3, 5),
        ],
    )
    .unwrap()
}

fn formula_range(family: &'static str, n: usize, min: usize) -> Result<(), FamilyError> {
    if n < min {
        Err(FamilyError::TooSmall { family, n, min })
    } else {
        Ok(())
    }
}

/// gamma(C_n) = ceil(n / 3), `n >= 3`.
pub fn gamma_cycle(n: usize) -> Result<usize, FamilyError> {
    formula_range("gamma_cycle", n, 3)?;
    Ok(n.div_ceil(3))
}

/// gamma_t(C_n): n/2 when n = 0 mod 4, (n+2)/2 when n = 2 mod 4, and
/// (n+1)/2 when n is odd. `n >= 3`.
pub fn gamma_t_cycle(n: usize) -> Result<usize, FamilyError> {
    formula_range("gamma_t_cycle", n, 3)?;
    Ok(match n % 4 {
        0 => n / 2,
        2 => (n + 2) / 2,
        _ => n.div_ceil(2),
    })
}

/// gamma_c(C_n) = n - 2, `n >= 3`.
pub fn gamma_c_cycle(n: usize) -> Result<usize, FamilyError> {
    formula_range("gamma_c_cycle", n, 3)?;
    Ok(n - 2)
}

/// gamma(P_4 x P_n) = n + 1 for n in {1, 2, 3, 5, 6, 9}, else n. `n >= 1`.
pub fn gamma_p4grid(n: usize) -> Result<usize, FamilyError> {
    formula_range("gamma_p4grid", n, 1)?;
    Ok(if [1, 2, 3, 5, 6, 9].contains(&n) {
        n + 1
    } else {
        n
    })
}

/// gamma_t(P_4 x P_n) = floor((6n+8)/5), plus one when n = 0 or 3 mod 5.
/// `n >= 4`.
pub fn gamma_t_p4grid(n: usize) -> Result<usize, FamilyError> {
    formula_range("gamma_t_p4grid", n, 4)?;
    let base = (6 * n + 8) / 5;
    Ok(match n % 5 {
        0 | 3 => base + 1,
        _ => base,
    })
}

/// gamma_c(P_4 x P_n) = 2n - floor(n/3), `n >= 4`.
pub fn gamma_c_p4grid(n: usize) -> Result<usize, FamilyError> {
    formula_range("gamma_c_p4grid", n, 4)?;
    Ok(2 * n - n / 3)
}

/// gamma_t(P_3 x P_n) = n, `n >= 3`.
pub fn gamma_t_p3grid(n: usize) -> Result<usize, FamilyError> {
    formula_range("gamma_t_p3grid", n, 3)?;
    Ok(n)
}

/// gamma_c(P_3 x P_n) = n, `n >= 3`.
pub fn gamma_c_p3grid(n: usize) -> Result<usize, FamilyError> {
    formula_range("gamma_c_p3grid", n, 3)?;
    Ok(n)
}

/// A named family instance as written on the command line: `cycle(9)`,
/// `path(4)`, `complete(5)`, `star(4)`, `p3grid(6)`, `p4grid(5)`, `H`,
/// or `Gprime` (names are case-insensitive).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilySpec {
    Cycle(usize),
    Path(usize),
    Complete(usize),
    Star(usize),
    GridP3(usize),
    GridP4(usize),
    H,
    GPrime,
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("not a family spec: {0:?} (expected e.g. cycle(9), p4grid(5), H, Gprime)")]
pub struct FamilySpecParseError(pub String);

impl FromStr for FamilySpec {
    type Err = FamilySpecParseError;

    fn from_str(s: &str) -> Result<FamilySpec, FamilySpecParseError> {
        let lower = s.trim().to_ascii_lowercase();
        match lower.as_str() {
            "h" => return Ok(FamilySpec::H),
            "gprime" | "g'" => return Ok(FamilySpec::GPrime),
            _ => {}
        }
        let err = || FamilySpecParseError(s.to_string());
        let (name, rest) = lower.split_once('(').ok_or_else(err)?;
        let arg = rest.strip_suffix(')').ok_or_else(err)?;
        let n: usize = arg.trim().parse().map_err(|_| err())?;
        match name.trim() {
            "cycle" | "c" => Ok(FamilySpec::Cycle(n)),
            "path" | "p" => Ok(FamilySpec::Path(n)),
            "complete" | "k" => Ok(FamilySpec::Complete(n)),
            "star" => Ok(FamilySpec::Star(n)),
            "p3grid" => Ok(FamilySpec::GridP3(n)),
            "p4grid" => Ok(FamilySpec::GridP4(n)),
            _ => Err(err()),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Cycle(n) => write!(f, "cycle({n})"),
            FamilySpec::Path(n) => write!(f, "path({n})"),
            FamilySpec::Complete(n) => write!(f, "complete({n})"),
            FamilySpec::Star(n) => write!(f, "star({n})"),
            FamilySpec::GridP3(n) => write!(f, "p3grid({n})"),
            FamilySpec::GridP4(n) => write!(f, "p4grid({n})"),
            FamilySpec::H => write!(f, "H"),
            FamilySpec::GPrime => write!(f, "Gprime"),
        }
    }
}

impl FamilySpec {
    pub fn build(self) -> Result<Graph, FamilyError> {
        match self {
            FamilySpec::Cycle(n) => cycle(n),
            FamilySpec::Path(n) => path(n),
            FamilySpec::Complete(n) => complete(n),
            FamilySpec::Star(n) => star(n),
            FamilySpec::GridP3(n) => grid_p3(n),
            FamilySpec::GridP4(n) => grid_p4(n),
            FamilySpec::H => Ok(graph_h()),
            FamilySpec::GPrime => Ok(graph_g_prime()),
        }
    }
}
