use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::point::Point;

const NO_VERTEX: u32 = u32::MAX;

/// Largest full lattice `(m+1)^(n+1)` the builder will index.
pub const MAX_LATTICE_POINTS: u64 = 1 << 26;

/// The lattice points `k/m` of the cube boundary with unit steps along the
/// axes as directed edges.
///
/// An edge `u -> u + e_i` exists when the unit segment between them lies on
/// the boundary, that is, some coordinate `j != i` of `u` is 0 or `m`.
/// Coordinates are stored as integer numerators over the fixed denominator
/// `m`, so every comparison is exact.
#[derive(Debug, Clone)]
pub struct GridGraph {
    n: usize,
    m: u32,
    coords: Vec<u32>,
    lookup: Vec<u32>,
    successors: Vec<Vec<(usize, usize)>>,
    predecessors: Vec<Vec<usize>>,
}

impl GridGraph {
    /// Builds the grid on `∂I^(n+1)` at resolution `m`.
    pub fn build(n: usize, m: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter {
                reason: "dimension n must be at least 1".into(),
            });
        }
        if m == 0 {
            return Err(Error::InvalidParameter {
                reason: "resolution m must be at least 1".into(),
            });
        }
        let len = n + 1;
        let side = u64::from(m) + 1;
        let total = u32::try_from(len)
            .ok()
            .and_then(|e| side.checked_pow(e))
            .filter(|&t| t <= MAX_LATTICE_POINTS)
            .ok_or_else(|| Error::InvalidParameter {
                reason: format!(
                    "lattice of {side}^{len} points exceeds the limit of {MAX_LATTICE_POINTS}"
                ),
            })? as usize;

        let mut coords = Vec::new();
        let mut lookup = vec![NO_VERTEX; total];
        let mut point = vec![0u32; len];
        for (dense, slot) in lookup.iter_mut().enumerate() {
            // coordinate 0 is the most significant digit, so ids are lexicographic
            let mut rest = dense;
            for c in (0..len).rev() {
                point[c] = (rest % side as usize) as u32;
                rest /= side as usize;
            }
            if point.iter().any(|&k| k == 0 || k == m) {
                *slot = (coords.len() / len) as u32;
                coords.extend_from_slice(&point);
            }
        }

        let mut graph = GridGraph {
            n,
            m,
            coords,
            lookup,
            successors: Vec::new(),
            predecessors: Vec::new(),
        };
        let count = graph.vertex_count();
        let mut successors = vec![Vec::new(); count];
        let mut predecessors = vec![Vec::new(); count];
        for (id, out) in successors.iter_mut().enumerate() {
            let u = graph.vertex(id).to_vec();
            for axis in 0..len {
                if u[axis] == m {
                    continue;
                }
                let pinned_elsewhere = u
                    .iter()
                    .enumerate()
                    .any(|(j, &k)| j != axis && (k == 0 || k == m));
                if !pinned_elsewhere {
                    continue;
                }
                let mut v = u.clone();
                v[axis] += 1;
                let target = graph
                    .vertex_id(&v)
                    .expect("a pinned step stays on the boundary");
                out.push((axis, target));
                predecessors[target].push(id);
            }
        }
        graph.successors = successors;
        graph.predecessors = predecessors;
        Ok(graph)
    }

    /// Sphere dimension `n`.
    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn resolution(&self) -> u32 {
        self.m
    }

    pub fn vertex_count(&self) -> usize {
        self.coords.len() / (self.n + 1)
    }

    pub fn edge_count(&self) -> usize {
        self.successors.iter().map(Vec::len).sum()
    }

    pub fn vertex(&self, id: usize) -> &[u32] {
        let len = self.n + 1;
        &self.coords[id * len..(id + 1) * len]
    }

    pub fn vertices(&self) -> impl Iterator<Item = &[u32]> {
        self.coords.chunks_exact(self.n + 1)
    }

    pub fn vertex_id(&self, coords: &[u32]) -> Option<usize> {
        if coords.len() != self.n + 1 || coords.iter().any(|&k| k > self.m) {
            return None;
        }
        let side = self.m as usize + 1;
        let dense = coords
            .iter()
            .fold(0usize, |acc, &k| acc * side + k as usize);
        match self.lookup[dense] {
            NO_VERTEX => None,
            id => Some(id as usize),
        }
    }

    pub(crate) fn require_vertex(&self, coords: &[u32]) -> Result<usize> {
        self.vertex_id(coords).ok_or_else(|| Error::NotAVertex {
            coords: coords.to_vec(),
        })
    }

    /// Outgoing edges of `id` as `(axis, head)` in increasing axis order.
    pub fn successors(&self, id: usize) -> &[(usize, usize)] {
        &self.successors[id]
    }

    pub fn predecessors(&self, id: usize) -> &[usize] {
        &self.predecessors[id]
    }

    /// All edges as `(tail, axis, head)`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.successors
            .iter()
            .enumerate()
            .flat_map(|(u, out)| out.iter().map(move |&(axis, v)| (u, axis, v)))
    }

    /// The vertex as an exact point of the unit cube.
    pub fn point(&self, id: usize) -> Point {
        Point::from_lattice(self.vertex(id), self.m).expect("grid vertices lie in the cube")
    }

    /// Vertices reachable from `source` along directed edges, by BFS.
    pub fn reachable_from(&self, source: usize) -> Vec<bool> {
        self.bfs(source, |g, u| {
            g.successors[u].iter().map(|&(_, v)| v).collect::<Vec<_>>()
        })
    }

    /// Vertices that can reach `target`, by BFS on reversed edges.
    pub fn reaching(&self, target: usize) -> Vec<bool> {
        self.bfs(target, |g, u| g.predecessors[u].clone())
    }

    fn bfs(&self, start: usize, next: impl Fn(&Self, usize) -> Vec<usize>) -> Vec<bool> {
        let mut seen = vec![false; self.vertex_count()];
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(u) = queue.pop_front() {
            for v in next(self, u) {
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen
    }

    /// Whether a directed lattice path runs from `x` to `y`.
    pub fn oracle_reach(&self, x: &[u32], y: &[u32]) -> Result<bool> {
        let source = self.require_vertex(x)?;
        let target = self.require_vertex(y)?;
        Ok(self.reachable_from(source)[target])
    }

    /// Whether a nonempty directed path leads from `source` back to itself.
    pub fn returns_to(&self, source: usize) -> bool {
        let mut seen = vec![false; self.vertex_count()];
        let mut queue: VecDeque<usize> = self.successors[source].iter().map(|&(_, v)| v).collect();
        while let Some(u) = queue.pop_front() {
            if u == source {
                return true;
            }
            if std::mem::replace(&mut seen[u], true) {
                continue;
            }
            queue.extend(self.successors[u].iter().map(|&(_, v)| v));
        }
        false
    }

    pub fn coordinate_sum(&self, id: usize) -> u64 {
        self.vertex(id).iter().map(|&k| u64::from(k)).sum()
    }

    /// Every edge strictly raises the coordinate sum, so the graph has no cycles.
    pub fn is_acyclic(&self) -> bool {
        self.edges()
            .all(|(u, _, v)| self.coordinate_sum(u) < self.coordinate_sum(v))
    }
}

/// `(m+1)^(n+1) − (m−1)^(n+1)`: all lattice points minus the interior ones.
pub fn expected_vertex_count(n: usize, m: u32) -> u128 {
    let e = n as u32 + 1;
    let m = u128::from(m);
    (m + 1).pow(e) - (m - 1).pow(e)
}
