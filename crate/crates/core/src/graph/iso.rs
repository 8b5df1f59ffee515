use super::Graph;

/// Per-vertex isomorphism invariant: degree, sorted neighbour degrees and
/// the number of triangles through the vertex.
fn vertex_invariant(g: &Graph, x: usize) -> (usize, Vec<usize>, usize) {
    let nb = g.neighbors(x);
    let mut nd: Vec<usize> = nb.iter().map(|&y| g.degree(y)).collect();
    nd.sort_unstable();
    let mut tri = 0;
    for (i, &y) in nb.iter().enumerate() {
        for &z in &nb[i + 1..] {
            if g.adjacent(y, z) {
                tri += 1;
            }
        }
    }
    (nb.len(), nd, tri)
}

/// Plain backtracking isomorphism search, pruned by vertex invariants and
/// adjacency consistency. Returns `perm` with `x ~ y` iff `perm[x] ~ perm[y]`.
///
/// Intended as an independent oracle on small graphs; its worst case is
/// exponential.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    let n = g.order();
    if n != h.order() || g.size() != h.size() {
        return None;
    }
    let ig: Vec<_> = (0..n).map(|x| vertex_invariant(g, x)).collect();
    let ih: Vec<_> = (0..n).map(|x| vertex_invariant(h, x)).collect();
    let mut sg = ig.clone();
    let mut sh = ih.clone();
    sg.sort();
    sh.sort();
    if sg != sh {
        return None;
    }

    // BFS order from the highest-degree vertex of each component so every
    // placed vertex after the first has an already placed neighbour.
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    let mut comps = g.components();
    comps.sort_by_key(|c| std::cmp::Reverse(c.len()));
    for comp in comps {
        let root = *comp.iter().max_by_key(|&&x| (g.degree(x), std::cmp::Reverse(x))).unwrap();
        placed[root] = true;
        let start = order.len();
        order.push(root);
        let mut head = start;
        while head < order.len() {
            let x = order[head];
            head += 1;
            for &y in g.neighbors(x) {
                if !placed[y] {
                    placed[y] = true;
                    order.push(y);
                }
            }
        }
    }

    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend(g, h, &ig, &ih, &order, 0, &mut perm, &mut used) {
        Some(perm)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g: &Graph,
    h: &Graph,
    ig: &[(usize, Vec<usize>, usize)],
    ih: &[(usize, Vec<usize>, usize)],
    order: &[usize],
    depth: usize,
    perm: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let x = order[depth];
    for cand in 0..h.order() {
        if used[cand] || ig[x] != ih[cand] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&y| g.adjacent(x, y) == h.adjacent(cand, perm[y]));
        if !consistent {
            continue;
        }
        perm[x] = cand;
        used[cand] = true;
        if extend(g, h, ig, ih, order, depth + 1, perm, used) {
            return true;
        }
        used[cand] = false;
        perm[x] = usize::MAX;
    }
    false
}
