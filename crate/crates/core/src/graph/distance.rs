use super::Graph;

/// All-pairs BFS distances. Unreachable pairs are `None`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceTable {
    n: usize,
    dist: Vec<Option<usize>>,
}

impl DistanceTable {
    pub fn new(g: &Graph) -> Self {
        let n = g.order();
        let mut dist = vec![None; n * n];
        let mut queue = Vec::with_capacity(n);
        for s in 0..n {
            let row = &mut dist[s * n..(s + 1) * n];
            row[s] = Some(0);
            queue.clear();
            queue.push(s);
            let mut head = 0;
            while head < queue.len() {
                let x = queue[head];
                head += 1;
                let dx = row[x].unwrap();
                for &y in g.neighbors(x) {
                    if row[y].is_none() {
                        row[y] = Some(dx + 1);
                        queue.push(y);
                    }
                }
            }
        }
        DistanceTable { n, dist }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> Option<usize> {
        self.dist[x * self.n + y]
    }

    /// Largest distance from `x`, or `None` if some vertex is unreachable.
    pub fn eccentricity(&self, x: usize) -> Option<usize> {
        let row = &self.dist[x * self.n..(x + 1) * self.n];
        row.iter().try_fold(0, |m, d| d.map(|d| m.max(d)))
    }

    /// `None` for disconnected (or empty) graphs.
    pub fn diameter(&self) -> Option<usize> {
        if self.n == 0 {
            return None;
        }
        (0..self.n).try_fold(0, |m, x| self.eccentricity(x).map(|e| m.max(e)))
    }

    /// The layer `Γ_i(x)` of vertices at distance exactly `i` from `x`.
    pub fn layer(&self, x: usize, i: usize) -> Vec<usize> {
        (0..self.n).filter(|&y| self.get(x, y) == Some(i)).collect()
    }
}
