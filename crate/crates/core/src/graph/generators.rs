//! Named graphs with fixed vertex labelings.
//!
//! | generator | labeling |
//! |---|---|
//! | `path(n)` | `i ~ i+1` |
//! | `cycle(n)` | `i ~ i+1 mod n` |
//! | `complete(n)` | all pairs |
//! | `complete_bipartite(p, q)` | parts `0..p` and `p..p+q` |
//! | `petersen()` | outer cycle `0..5`, spokes `i ~ i+5`, inner pentagram `5+i ~ 5+(i+2 mod 5)` |
//! | `disjoint_union(g, h)` | `g` on `0..n_g`, `h` shifted by `n_g` |
//! | `subdivision(g)` | originals keep labels; the midpoint of the `e`-th edge of `g.edges()` is `n_g + e` |
//! | `rook_graph(r, c)` | cell `(a, b)` is `a*c + b`; same row or same column |
//! | `shrikhande()` | `(a, b)` in `Z4 x Z4` is `4a + b`; differences `±(1,0), ±(0,1), ±(1,1)` |

use super::Graph;
use crate::error::{Error, Result};

fn at_least(what: &'static str, min: usize, got: usize) -> Result<()> {
    if got < min {
        Err(Error::TooSmall { what, min, got })
    } else {
        Ok(())
    }
}

pub fn path(n: usize) -> Result<Graph> {
    at_least("path", 1, n)?;
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::new(n, &edges)
}

pub fn cycle(n: usize) -> Result<Graph> {
    at_least("cycle", 3, n)?;
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n, &edges)
}

pub fn complete(n: usize) -> Result<Graph> {
    at_least("complete graph", 1, n)?;
    Ok(Graph::empty(n).complement())
}

pub fn complete_bipartite(p: usize, q: usize) -> Result<Graph> {
    at_least("complete bipartite part", 1, p.min(q))?;
    let mut edges = Vec::with_capacity(p * q);
    for u in 0..p {
        for v in p..p + q {
            edges.push((u, v));
        }
    }
    Graph::new(p + q, &edges)
}

pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::new(10, &edges).expect("static edge list")
}

pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let shift = g.order();
    let mut edges = g.edges();
    edges.extend(h.edges().into_iter().map(|(u, v)| (u + shift, v + shift)));
    Graph::new(shift + h.order(), &edges).expect("union of valid graphs")
}

/// Replaces every edge by a path of length 2.
pub fn subdivision(g: &Graph) -> Graph {
    let n = g.order();
    let old = g.edges();
    let mut edges = Vec::with_capacity(2 * old.len());
    for (e, &(u, v)) in old.iter().enumerate() {
        edges.push((u, n + e));
        edges.push((n + e, v));
    }
    Graph::new(n + old.len(), &edges).expect("subdivision of a valid graph")
}

/// The `rows x cols` rook's graph (Cartesian product `K_rows □ K_cols`).
pub fn rook_graph(rows: usize, cols: usize) -> Result<Graph> {
    at_least("rook graph side", 1, rows.min(cols))?;
    let n = rows * cols;
    let mut edges = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            let (a, b) = (x / cols, x % cols);
            let (c, d) = (y / cols, y % cols);
            if (a == c) != (b == d) {
                edges.push((x, y));
            }
        }
    }
    Graph::new(n, &edges)
}

/// The Shrikhande graph, strongly regular with parameters (16, 6, 2, 2).
pub fn shrikhande() -> Graph {
    const STEPS: [(usize, usize); 6] = [(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)];
    let mut edges = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            for (da, db) in STEPS {
                let (c, d) = ((a + da) % 4, (b + db) % 4);
                edges.push((4 * a + b, 4 * c + d));
            }
        }
    }
    Graph::new(16, &edges).expect("static edge list")
}

/// Parses a generator expression:
/// `petersen`, `shrikhande`, `empty:N`, `path:N`, `cycle:N`, `complete:N`,
/// `complete-bipartite:P,Q`, `rook:R,C`, `subdivision:EXPR` and
/// `union:EXPR+EXPR+…`.
pub fn named(spec: &str) -> Result<Graph> {
    let spec = spec.trim();
    let bad = || Error::Precondition(format!("unknown generator `{spec}`"));
    let (name, arg) = spec.split_once(':').unwrap_or((spec, ""));
    let nums = || -> Result<Vec<usize>> {
        arg.split(',').map(|t| t.trim().parse::<usize>().map_err(|_| bad())).collect()
    };
    let one = || -> Result<usize> {
        match nums()?.as_slice() {
            [a] => Ok(*a),
            _ => Err(bad()),
        }
    };
    let two = || -> Result<(usize, usize)> {
        match nums()?.as_slice() {
            [a, b] => Ok((*a, *b)),
            _ => Err(bad()),
        }
    };
    match name {
        "petersen" if arg.is_empty() => Ok(petersen()),
        "shrikhande" if arg.is_empty() => Ok(shrikhande()),
        "empty" => Ok(Graph::empty(one()?)),
        "path" => path(one()?),
        "cycle" => cycle(one()?),
        "complete" => complete(one()?),
        "complete-bipartite" => {
            let (p, q) = two()?;
            complete_bipartite(p, q)
        }
        "rook" => {
            let (r, c) = two()?;
            rook_graph(r, c)
        }
        "subdivision" => Ok(subdivision(&named(arg)?)),
        "union" => {
            let mut parts = arg.split('+');
            let first = named(parts.next().ok_or_else(bad)?)?;
            parts.try_fold(first, |acc, p| Ok(disjoint_union(&acc, &named(p)?)))
        }
        _ => Err(bad()),
    }
}
