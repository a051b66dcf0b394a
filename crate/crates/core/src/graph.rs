//! Simple undirected graphs, BFS machinery and the brute-force oracles.
//!
//! Vertices are dense ids `0..n`. Distances are `u32`; the unreachable
//! sentinel of a [`DistanceRow`] is `n`, a distance no simple path can have.

use std::collections::VecDeque;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};

/// Immutable simple undirected graph stored as sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list, rejecting loops, parallel edges and
    /// out-of-range endpoints. Errors carry the 1-based position of the edge.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        let mut seen = std::collections::HashSet::new();
        for (idx, (u, v)) in edges.into_iter().enumerate() {
            let line = idx + 1;
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop { line, vertex: u });
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(Error::DuplicateEdge { line, u: key.0, v: key.1 });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        Self::from_unsorted_adjacency(adj)
    }

    /// Builds a graph from symmetric adjacency lists in any order.
    ///
    /// The lists are sorted; asymmetric lists, loops or duplicate entries
    /// are rejected.
    pub fn from_unsorted_adjacency(mut adj: Vec<Vec<usize>>) -> Result<Self> {
        let n = adj.len();
        let mut m2 = 0usize;
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            for w in list.windows(2) {
                if w[0] == w[1] {
                    let (a, b) = (u.min(w[0]), u.max(w[0]));
                    return Err(Error::DuplicateEdge { line: 0, u: a, v: b });
                }
            }
            if let Some(&last) = list.last() {
                if last >= n {
                    return Err(Error::VertexOutOfRange { vertex: last, n });
                }
            }
            if list.binary_search(&u).is_ok() {
                return Err(Error::SelfLoop { line: 0, vertex: u });
            }
            m2 += list.len();
        }
        for u in 0..n {
            for &v in &adj[u] {
                if adj[v].binary_search(&u).is_err() {
                    return Err(Error::BadParameter(format!(
                        "adjacency not symmetric at edge {u} {v}"
                    )));
                }
            }
        }
        Ok(Graph { adj, m: m2 / 2 })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() {
            (u, v)
        } else {
            (v, u)
        };
        self.adj[a].binary_search(&b).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Subgraph induced by `vertices`. Vertex `i` of the result is
    /// `vertices[i]` of `self`; the returned vector is that mapping.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> (Graph, Vec<usize>) {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut adj = vec![Vec::new(); vertices.len()];
        let mut m = 0;
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                if index[w] != usize::MAX {
                    adj[i].push(index[w]);
                }
            }
            adj[i].sort_unstable();
            m += adj[i].len();
        }
        (Graph { adj, m: m / 2 }, vertices.to_vec())
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || bfs(self, 0).is_complete()
    }

    pub fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::DisconnectedGraph)
        }
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }
}

/// Distances from one source vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceRow {
    pub source: usize,
    pub dist: Vec<u32>,
}

impl DistanceRow {
    /// The unreachable sentinel, equal to the vertex count.
    pub fn infinity(&self) -> u32 {
        self.dist.len() as u32
    }

    pub fn is_complete(&self) -> bool {
        let inf = self.infinity();
        self.dist.iter().all(|&d| d != inf)
    }

    /// Largest finite distance together with the smallest vertex attaining it.
    pub fn furthest(&self) -> (usize, u32) {
        let inf = self.infinity();
        let mut best = (self.source, 0);
        for (v, &d) in self.dist.iter().enumerate() {
            if d != inf && d > best.1 {
                best = (v, d);
            }
        }
        best
    }

    /// Maximum distance, `None` when some vertex is unreachable.
    pub fn eccentricity(&self) -> Option<u32> {
        if self.is_complete() {
            Some(self.dist.iter().copied().max().unwrap_or(0))
        } else {
            None
        }
    }
}

/// Breadth-first distances from `source`. Panics if `source >= n`.
pub fn bfs(g: &Graph, source: usize) -> DistanceRow {
    let n = g.n();
    assert!(source < n, "bfs source {source} out of range (n = {n})");
    let inf = n as u32;
    let mut dist = vec![inf; n];
    let mut queue = VecDeque::with_capacity(n);
    dist[source] = 0;
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        let du = dist[u] + 1;
        for &w in g.neighbors(u) {
            if dist[w] == inf {
                dist[w] = du;
                queue.push_back(w);
            }
        }
    }
    DistanceRow { source, dist }
}

/// BFS restricted to the vertices with `alive[v]`. Dead vertices, and live
/// ones not reachable through live vertices, get the sentinel `n`.
pub fn bfs_within(g: &Graph, source: usize, alive: &[bool]) -> DistanceRow {
    let n = g.n();
    assert!(alive[source], "bfs source {source} is not alive");
    let inf = n as u32;
    let mut dist = vec![inf; n];
    let mut queue = VecDeque::new();
    dist[source] = 0;
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        let du = dist[u] + 1;
        for &w in g.neighbors(u) {
            if alive[w] && dist[w] == inf {
                dist[w] = du;
                queue.push_back(w);
            }
        }
    }
    DistanceRow { source, dist }
}

/// All-pairs distances, one BFS row per vertex.
#[derive(Debug, Clone)]
pub struct DistanceMatrix {
    rows: Vec<Vec<u32>>,
}

impl DistanceMatrix {
    /// Computes every row; rows are independent and evaluated in parallel.
    pub fn new(g: &Graph) -> Self {
        let rows = (0..g.n()).into_par_iter().map(|s| bfs(g, s).dist).collect();
        DistanceMatrix { rows }
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.rows[u][v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.rows[u]
    }

    pub fn is_connected(&self) -> bool {
        let inf = self.n() as u32;
        self.rows.iter().all(|r| r.iter().all(|&d| d != inf))
    }

    /// Distance from `v` to the nearest vertex of `set` (`set` nonempty).
    pub fn to_set(&self, v: usize, set: &[usize]) -> u32 {
        set.iter().map(|&s| self.get(v, s)).min().expect("nonempty set")
    }
}

/// Exact eccentricities with radius, diameter, center and diametral set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EccTable {
    pub ecc: Vec<u32>,
    pub rad: u32,
    pub diam: u32,
    /// Vertices of minimum eccentricity, ascending.
    pub center: Vec<usize>,
    /// Vertices of maximum eccentricity, ascending.
    pub diametral: Vec<usize>,
}

impl EccTable {
    /// Fills radius, diameter and the extremal sets from `ecc` (nonempty).
    pub fn from_ecc(ecc: Vec<u32>) -> Self {
        assert!(!ecc.is_empty(), "eccentricity table of an empty graph");
        let rad = *ecc.iter().min().unwrap();
        let diam = *ecc.iter().max().unwrap();
        let center = (0..ecc.len()).filter(|&v| ecc[v] == rad).collect();
        let diametral = (0..ecc.len()).filter(|&v| ecc[v] == diam).collect();
        EccTable {
            ecc,
            rad,
            diam,
            center,
            diametral,
        }
    }

    /// `C^k(G)`: vertices with `e(v) <= rad + k`.
    pub fn within(&self, k: u32) -> Vec<usize> {
        (0..self.ecc.len())
            .filter(|&v| self.ecc[v] <= self.rad + k)
            .collect()
    }
}

/// Ground-truth eccentricities: one BFS per vertex.
pub fn all_pairs_ecc_oracle(g: &Graph) -> Result<EccTable> {
    if g.n() == 0 {
        return Err(Error::BadParameter("empty graph".into()));
    }
    let ecc: Option<Vec<u32>> = (0..g.n())
        .into_par_iter()
        .map(|s| bfs(g, s).eccentricity())
        .collect();
    ecc.map(EccTable::from_ecc).ok_or(Error::DisconnectedGraph)
}

/// `S_k(x, y)`: vertices on shortest `x`-`y` paths at distance `k` from `x`.
pub fn interval_slice(g: &Graph, x: usize, y: usize, k: u32) -> Result<Vec<usize>> {
    g.check_vertex(x)?;
    g.check_vertex(y)?;
    let dx = bfs(g, x);
    let dy = bfs(g, y);
    let dxy = dx.dist[y];
    if dxy == dx.infinity() {
        return Err(Error::DisconnectedGraph);
    }
    if k > dxy {
        return Err(Error::OutOfRange(format!("slice index {k} (d(x,y) = {dxy})")));
    }
    Ok(slice_from_rows(&dx.dist, &dy.dist, dxy, k))
}

pub(crate) fn slice_from_rows(dx: &[u32], dy: &[u32], dxy: u32, k: u32) -> Vec<usize> {
    (0..dx.len())
        .filter(|&v| dx[v] == k && dx[v] + dy[v] == dxy)
        .collect()
}

/// Outcome of [`four_point_check`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FourPointReport {
    pub holds: bool,
    pub witness: Option<[usize; 4]>,
}

/// Whether the quadruple satisfies the DH 4-point condition.
pub fn four_point_holds(d: &DistanceMatrix, a: usize, b: usize, c: usize, e: usize) -> bool {
    let mut sums = [
        d.get(a, b) + d.get(c, e),
        d.get(a, c) + d.get(b, e),
        d.get(a, e) + d.get(b, c),
    ];
    sums.sort_unstable();
    let [lo, mid, hi] = sums;
    mid == hi || (lo == mid && hi - mid <= 2)
}

/// Exhaustive 4-point condition over all `C(n, 4)` quadruples.
///
/// Intended as an oracle for small graphs only.
pub fn four_point_check(d: &DistanceMatrix) -> FourPointReport {
    let n = d.n();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for e in c + 1..n {
                    if !four_point_holds(d, a, b, c, e) {
                        return FourPointReport {
                            holds: false,
                            witness: Some([a, b, c, e]),
                        };
                    }
                }
            }
        }
    }
    FourPointReport {
        holds: true,
        witness: None,
    }
}

/// A pair in `N^k(root)`, connected above layer `k - 1`, whose
/// down-neighborhoods differ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LayeringViolation {
    pub layer: u32,
    pub u: usize,
    pub v: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LayeringReport {
    pub holds: bool,
    pub violation: Option<LayeringViolation>,
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Checks the down-neighborhood characterization from `root`.
///
/// Removing `N^{k-1}(root)` separates the vertices at distance `>= k` from
/// the rest, so the components that matter are those of the subgraph
/// induced by layers `>= k`; they are grown with a union-find while the
/// layers are added deepest first.
pub fn layering_check(g: &Graph, root: usize) -> Result<LayeringReport> {
    g.check_vertex(root)?;
    let row = bfs(g, root);
    if !row.is_complete() {
        return Err(Error::DisconnectedGraph);
    }
    let depth = row.furthest().1 as usize;
    let mut layers: Vec<Vec<usize>> = vec![Vec::new(); depth + 1];
    for (v, &d) in row.dist.iter().enumerate() {
        layers[d as usize].push(v);
    }
    let mut parent: Vec<usize> = (0..g.n()).collect();
    for k in (1..=depth).rev() {
        for &v in &layers[k] {
            for &w in g.neighbors(v) {
                if row.dist[w] as usize >= k {
                    let (a, b) = (find(&mut parent, v), find(&mut parent, w));
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }
        let mut first_in_component: std::collections::HashMap<usize, (usize, Vec<usize>)> =
            std::collections::HashMap::new();
        for &v in &layers[k] {
            let down: Vec<usize> = g
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&w| row.dist[w] as usize == k - 1)
                .collect();
            let r = find(&mut parent, v);
            match first_in_component.get(&r) {
                Some((u, du)) if *du != down => {
                    return Ok(LayeringReport {
                        holds: false,
                        violation: Some(LayeringViolation {
                            layer: k as u32,
                            u: *u,
                            v,
                        }),
                    });
                }
                Some(_) => {}
                None => {
                    first_in_component.insert(r, (v, down));
                }
            }
        }
    }
    Ok(LayeringReport {
        holds: true,
        violation: None,
    })
}

/// True iff consecutive slices of `I(x, y)` are joined.
pub fn slices_joined_check(g: &Graph, x: usize, y: usize) -> bool {
    let dx = bfs(g, x);
    let dy = bfs(g, y);
    slices_joined_from_rows(g, &dx.dist, &dy.dist, dx.dist[y])
}

pub(crate) fn slices_joined_from_rows(g: &Graph, dx: &[u32], dy: &[u32], dxy: u32) -> bool {
    let slices: Vec<Vec<usize>> = (0..=dxy).map(|k| slice_from_rows(dx, dy, dxy, k)).collect();
    slices
        .windows(2)
        .all(|w| w[0].iter().all(|&v| w[1].iter().all(|&u| g.has_edge(u, v))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{self, NamedGraph};

    fn path3() -> Graph {
        Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn rejects_loops_and_parallel_edges() {
        assert!(matches!(
            Graph::from_edges(2, [(1, 1)]),
            Err(Error::SelfLoop { vertex: 1, .. })
        ));
        assert!(matches!(
            Graph::from_edges(2, [(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge { .. })
        ));
        assert!(matches!(
            Graph::from_edges(2, [(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        ));
    }

    #[test]
    fn bfs_on_path_and_singleton() {
        assert_eq!(bfs(&path3(), 0).dist, vec![0, 1, 2]);
        assert_eq!(bfs(&Graph::empty(1), 0).dist, vec![0]);
    }

    #[test]
    fn bfs_marks_unreachable_with_n() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        let row = bfs(&g, 0);
        assert_eq!(row.dist, vec![0, 1, 3]);
        assert!(!row.is_complete());
        assert_eq!(all_pairs_ecc_oracle(&g), Err(Error::DisconnectedGraph));
    }

    #[test]
    fn fig5_distance_x1_y1() {
        // x1 - u1 - v2 - v1 - y1 is a shortest path
        let g = builders::build_named(NamedGraph::Fig5 { l: 3 }).unwrap();
        let lab = builders::Fig5Labels { l: 3 };
        let row = bfs(&g, lab.x(0));
        assert_eq!(row.dist[lab.y(0)], 4);
        assert_eq!(row.dist[lab.u(0)], 1);
        assert_eq!(row.dist[lab.v(1)], 2);
        assert_eq!(row.dist[lab.v(0)], 3);
    }

    #[test]
    fn oracle_on_path_and_fig5() {
        let t = all_pairs_ecc_oracle(&path3()).unwrap();
        assert_eq!((t.ecc.clone(), t.rad, t.diam), (vec![2, 1, 2], 1, 2));

        let lab = builders::Fig5Labels { l: 3 };
        let t = all_pairs_ecc_oracle(&builders::build_named(NamedGraph::Fig5 { l: 3 }).unwrap())
            .unwrap();
        assert_eq!((t.rad, t.diam), (3, 4));
        assert_eq!(t.center, lab.center());
        assert_eq!(t.diametral, lab.diametral());
    }

    #[test]
    fn slices() {
        assert_eq!(interval_slice(&path3(), 0, 2, 1).unwrap(), vec![1]);
        assert_eq!(interval_slice(&path3(), 1, 2, 0).unwrap(), vec![1]);
        assert!(matches!(
            interval_slice(&path3(), 0, 2, 3),
            Err(Error::OutOfRange(_))
        ));
        // I(x1, y1) in the fig5 family: x1 - u1 - {u2, u3, v2, v3} - v1 - y1,
        // since u_i ~ v1 and v_i ~ u1 for i != 1
        let g = builders::build_named(NamedGraph::Fig5 { l: 3 }).unwrap();
        let lab = builders::Fig5Labels { l: 3 };
        assert_eq!(
            interval_slice(&g, lab.x(0), lab.y(0), 2).unwrap(),
            vec![lab.u(1), lab.u(2), lab.v(1), lab.v(2)]
        );
        assert_eq!(interval_slice(&g, lab.x(0), lab.y(0), 1).unwrap(), vec![lab.u(0)]);
    }

    #[test]
    fn four_point_on_small_graphs() {
        let c4 = builders::build_named(NamedGraph::Cycle { k: 4 }).unwrap();
        assert!(four_point_check(&DistanceMatrix::new(&c4)).holds);
        for g in [
            builders::build_named(NamedGraph::Cycle { k: 6 }).unwrap(),
            builders::build_named(NamedGraph::House).unwrap(),
        ] {
            let r = four_point_check(&DistanceMatrix::new(&g));
            assert!(!r.holds);
            let [a, b, c, e] = r.witness.unwrap();
            assert!(!four_point_holds(&DistanceMatrix::new(&g), a, b, c, e));
        }
    }

    #[test]
    fn layering_on_trees_and_c5() {
        let tree = Graph::from_edges(6, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5)]).unwrap();
        for r in 0..6 {
            assert!(layering_check(&tree, r).unwrap().holds);
        }
        let c5 = builders::build_named(NamedGraph::Cycle { k: 5 }).unwrap();
        for r in 0..5 {
            let rep = layering_check(&c5, r).unwrap();
            assert!(!rep.holds);
            assert_eq!(rep.violation.unwrap().layer, 2);
        }
    }

    #[test]
    fn joined_slices() {
        let p = builders::build_named(NamedGraph::Path { k: 6 }).unwrap();
        assert!(slices_joined_check(&p, 0, 5));
        let g = builders::build_named(NamedGraph::Fig5 { l: 3 }).unwrap();
        let lab = builders::Fig5Labels { l: 3 };
        assert!(slices_joined_check(&g, lab.x(0), lab.y(0)));
        // C6, antipodal: S1 = {1, 5}, S2 = {2, 4}, and 1 is not adjacent to 4
        let c6 = builders::build_named(NamedGraph::Cycle { k: 6 }).unwrap();
        assert!(!slices_joined_check(&c6, 0, 3));
    }

    #[test]
    fn induced_subgraph_keeps_order() {
        let g = builders::build_named(NamedGraph::Gem).unwrap();
        let (h, map) = g.induced_subgraph(&[1, 2, 4]);
        assert_eq!(map, vec![1, 2, 4]);
        assert_eq!(h.m(), 3);
    }
}
