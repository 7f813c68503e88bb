use std::collections::HashMap;

use crate::error::{Error, Result};

use super::GridGraph;

/// Default ceiling on the number of lattice paths a single query may produce.
pub const DEFAULT_PATH_CAP: usize = 1_000_000;

/// A directed path along grid edges, as vertex ids plus the axis of each step.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticeDipath {
    vertices: Vec<usize>,
    steps: Vec<usize>,
}

impl LatticeDipath {
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Axis raised by each step; empty for the constant path.
    pub fn steps(&self) -> &[usize] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

impl GridGraph {
    /// Every directed lattice path from `x` to `y`, with steps in
    /// lexicographic order of their axis sequences.
    ///
    /// Fails with `PathExplosion` as soon as more than `cap` paths exist.
    pub fn enumerate_dipaths(
        &self,
        x: &[u32],
        y: &[u32],
        cap: usize,
    ) -> Result<Vec<LatticeDipath>> {
        let source = self.require_vertex(x)?;
        let target = self.require_vertex(y)?;
        if let Some(coordinate) = x.iter().zip(y).position(|(a, b)| a > b) {
            return Err(Error::NotOrdered { coordinate });
        }
        let useful = self.reaching(target);
        let mut found = Vec::new();
        if !useful[source] {
            return Ok(found);
        }
        let mut walk = Walk {
            graph: self,
            useful: &useful,
            target,
            cap,
            vertices: vec![source],
            steps: Vec::new(),
            found: &mut found,
        };
        walk.extend()?;
        Ok(found)
    }

    /// Number of dihomotopy classes of lattice paths from `x` to `y`.
    ///
    /// Two paths are related by an elementary move when they differ by
    /// swapping two consecutive steps along distinct axes `i`, `j` and the
    /// unit square they span lies on the boundary: some coordinate other
    /// than `i` and `j` is 0 or `m` there. Classes are the connected
    /// components of that relation on the enumerated paths. Returns 0 when
    /// no path exists.
    pub fn dihomotopy_classes(&self, x: &[u32], y: &[u32], cap: usize) -> Result<usize> {
        let paths = self.enumerate_dipaths(x, y, cap)?;
        let index: HashMap<&[usize], usize> = paths
            .iter()
            .enumerate()
            .map(|(i, p)| (p.steps(), i))
            .collect();
        let mut classes = UnionFind::new(paths.len());
        let mut swapped = Vec::new();
        for (i, path) in paths.iter().enumerate() {
            for pos in 0..path.len().saturating_sub(1) {
                let (a, b) = (path.steps[pos], path.steps[pos + 1]);
                if a == b || !self.square_on_boundary(path.vertices[pos], a, b) {
                    continue;
                }
                swapped.clear();
                swapped.extend_from_slice(path.steps());
                swapped.swap(pos, pos + 1);
                let j = index[swapped.as_slice()];
                classes.union(i, j);
            }
        }
        Ok(classes.count())
    }

    /// The unit square at `corner` spanned by axes `a` and `b` lies on the boundary.
    pub fn square_on_boundary(&self, corner: usize, a: usize, b: usize) -> bool {
        let m = self.resolution();
        self.vertex(corner)
            .iter()
            .enumerate()
            .any(|(k, &c)| k != a && k != b && (c == 0 || c == m))
    }
}

struct Walk<'a> {
    graph: &'a GridGraph,
    useful: &'a [bool],
    target: usize,
    cap: usize,
    vertices: Vec<usize>,
    steps: Vec<usize>,
    found: &'a mut Vec<LatticeDipath>,
}

impl Walk<'_> {
    fn extend(&mut self) -> Result<()> {
        let here = *self.vertices.last().expect("walk starts at the source");
        if here == self.target {
            if self.found.len() == self.cap {
                return Err(Error::PathExplosion {
                    cap: self.cap,
                    reached: self.cap + 1,
                });
            }
            self.found.push(LatticeDipath {
                vertices: self.vertices.clone(),
                steps: self.steps.clone(),
            });
            return Ok(());
        }
        for &(axis, next) in self.graph.successors(here) {
            if !self.useful[next] {
                continue;
            }
            self.vertices.push(next);
            self.steps.push(axis);
            self.extend()?;
            self.vertices.pop();
            self.steps.pop();
        }
        Ok(())
    }
}

/// Disjoint sets with path halving and union by size.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
    roots: usize,
}

impl UnionFind {
    pub fn new(len: usize) -> Self {
        UnionFind {
            parent: (0..len).collect(),
            size: vec![1; len],
            roots: len,
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns true if `a` and `b` were in different sets.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        self.roots -= 1;
        true
    }

    /// Number of disjoint sets.
    pub fn count(&self) -> usize {
        self.roots
    }
}
