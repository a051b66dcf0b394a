//! Mutually distant pairs and the eccentricity intervals they induce.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bfs, DistanceRow, Graph};

/// `x`, `y` with `y` furthest from `x` and `x` furthest from `y`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MutuallyDistantPair {
    pub x: usize,
    pub y: usize,
    pub dist: u32,
    /// BFS runs spent by the search.
    pub sweeps: usize,
    /// `v_0, v_1, ...` visited by the search.
    pub trace: Vec<usize>,
}

/// Repeated furthest-vertex sweeps from `start`: `v_i` is the smallest
/// furthest vertex from `v_{i-1}`, until `d(v_k, v_{k-1}) = d(v_{k-1},
/// v_{k-2})`. Returns the pair `v_{k-2}, v_{k-1}`.
///
/// The distances along the trace never decrease and are bounded, so this
/// terminates on any connected graph.
pub fn mutually_distant_pair(g: &Graph, start: usize) -> Result<MutuallyDistantPair> {
    g.check_vertex(start)?;
    let mut trace = vec![start];
    let row = bfs(g, start);
    if !row.is_complete() {
        return Err(Error::DisconnectedGraph);
    }
    let (mut cur, mut last) = row.furthest();
    trace.push(cur);
    let mut sweeps = 1;
    loop {
        let (next, d) = bfs(g, cur).furthest();
        sweeps += 1;
        if d == last {
            let prev = trace[trace.len() - 2];
            return Ok(MutuallyDistantPair {
                x: prev,
                y: cur,
                dist: d,
                sweeps,
                trace,
            });
        }
        trace.push(next);
        cur = next;
        last = d;
    }
}

/// Per-vertex interval `lower <= e(u) <= upper` from a mutually distant
/// pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EccBounds {
    pub x: usize,
    pub y: usize,
    pub dist: u32,
    pub lower: Vec<u32>,
    pub upper: Vec<u32>,
}

impl EccBounds {
    /// Vertices whose interval is a single value.
    pub fn exact(&self) -> Vec<usize> {
        (0..self.lower.len())
            .filter(|&v| self.lower[v] == self.upper[v])
            .collect()
    }

    /// Central vertices never need the `+2` slack.
    pub fn tighten_with_center(&mut self, center: &[usize]) {
        for &c in center {
            self.upper[c] = self.upper[c].min(self.lower[c] + 1);
        }
    }
}

/// The slack added to `max(a, b)` for a vertex at distances `a`, `b` from
/// a pair at distance `dxy`.
pub fn slack(a: u32, b: u32, dxy: u32) -> u32 {
    let diff = a.abs_diff(b);
    if diff >= 2 {
        0
    } else if diff == 1 || dxy % 2 == 1 {
        1
    } else {
        2
    }
}

pub fn ecc_bounds_from_pair(g: &Graph, pair: &MutuallyDistantPair) -> EccBounds {
    let dx = bfs(g, pair.x);
    let dy = bfs(g, pair.y);
    bounds_from_rows(pair, &dx, &dy)
}

pub(crate) fn bounds_from_rows(pair: &MutuallyDistantPair, dx: &DistanceRow, dy: &DistanceRow) -> EccBounds {
    let (lower, upper) = dx
        .dist
        .iter()
        .zip(&dy.dist)
        .map(|(&a, &b)| {
            let lo = a.max(b);
            (lo, lo + slack(a, b, pair.dist))
        })
        .unzip();
    EccBounds {
        x: pair.x,
        y: pair.y,
        dist: pair.dist,
        lower,
        upper,
    }
}

/// Outcome of [`duality_audit`] for one vertex `u`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualityReport {
    pub u: usize,
    pub ecc: u32,
    /// `F(u)`, ascending.
    pub furthest: Vec<usize>,
    pub violations: Vec<String>,
}

/// Checks both sandwich inequalities relating `e(u)`, `d(x, y)` and the
/// distances of `u` and of every `v` in `F(u)` to the pair, including the
/// equalities forced when an upper bound is met with slack 2.
pub fn duality_audit(g: &Graph, pair: &MutuallyDistantPair, u: usize) -> Result<DualityReport> {
    g.check_vertex(u)?;
    let dx = bfs(g, pair.x);
    let dy = bfs(g, pair.y);
    let du = bfs(g, u);
    if !du.is_complete() {
        return Err(Error::DisconnectedGraph);
    }
    Ok(duality_from_rows(pair, &dx.dist, &dy.dist, &du))
}

pub(crate) fn duality_from_rows(
    pair: &MutuallyDistantPair,
    dx: &[u32],
    dy: &[u32],
    du: &DistanceRow,
) -> DualityReport {
    let u = du.source;
    let e = du.furthest().1;
    let dxy = pair.dist;
    let furthest: Vec<usize> = (0..du.dist.len()).filter(|&v| du.dist[v] == e).collect();
    let mut violations = Vec::new();

    let (a, b) = (dx[u], dy[u]);
    let (hi, lo) = (a.max(b), a.min(b));
    if e < hi || e > hi.max(lo + 2) {
        violations.push(format!("e({u}) = {e} outside [{hi}, {}]", hi.max(lo + 2)));
    }
    for &v in &furthest {
        if e == hi + 2 && !(a == e - 2 && b == e - 2 && dx[v] == dxy && dy[v] == dxy) {
            violations.push(format!("e({u}) = max + 2 but forced equalities fail at v = {v}"));
        }
        let (a2, b2) = (dx[v], dy[v]);
        let (hi2, lo2) = (a2.max(b2), a2.min(b2));
        if dxy < hi2 || dxy > hi2.max(lo2 + 2) {
            violations.push(format!(
                "d(x,y) = {dxy} outside [{hi2}, {}] for v = {v}",
                hi2.max(lo2 + 2)
            ));
        }
        if dxy == hi2 + 2 && !(a2 == dxy - 2 && b2 == dxy - 2 && a == e && b == e) {
            violations.push(format!("d(x,y) = max + 2 but forced equalities fail at v = {v}"));
        }
    }
    DualityReport {
        u,
        ecc: e,
        furthest,
        violations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{build_named, Fig5Labels, NamedGraph};
    use crate::graph::all_pairs_ecc_oracle;

    #[test]
    fn path4_pair_is_the_endpoints() {
        let g = build_named(NamedGraph::Path { k: 4 }).unwrap();
        for s in 0..4 {
            let p = mutually_distant_pair(&g, s).unwrap();
            let mut ends = [p.x, p.y];
            ends.sort();
            assert_eq!((ends, p.dist), ([0, 3], 3));
        }
    }

    #[test]
    fn fig5_from_u1() {
        let lab = Fig5Labels { l: 3 };
        let g = build_named(NamedGraph::Fig5 { l: 3 }).unwrap();
        let p = mutually_distant_pair(&g, lab.u(0)).unwrap();
        assert_eq!((p.x, p.y, p.dist, p.sweeps), (lab.y(0), lab.x(0), 4, 3));
        let b = ecc_bounds_from_pair(&g, &p);
        // d(u1, x1) = 1, d(u1, y1) = 3
        assert_eq!((b.lower[lab.u(0)], b.upper[lab.u(0)]), (3, 3));
        assert_eq!((b.lower[lab.x(0)], b.upper[lab.x(0)]), (4, 4));
    }

    #[test]
    fn c4_pair_is_antipodal() {
        let g = build_named(NamedGraph::Cycle { k: 4 }).unwrap();
        for s in 0..4 {
            let p = mutually_distant_pair(&g, s).unwrap();
            assert_eq!(p.dist, 2);
            assert_eq!(bfs(&g, p.x).furthest().1, 2);
        }
    }

    #[test]
    fn slack_cases() {
        assert_eq!(slack(5, 3, 4), 0);
        assert_eq!(slack(3, 4, 4), 1);
        assert_eq!(slack(3, 3, 5), 1);
        assert_eq!(slack(3, 3, 4), 2);
    }

    #[test]
    fn pair_endpoint_is_exact() {
        let g = build_named(NamedGraph::Fig5 { l: 4 }).unwrap();
        let p = mutually_distant_pair(&g, 0).unwrap();
        let b = ecc_bounds_from_pair(&g, &p);
        assert_eq!((b.lower[p.x], b.upper[p.x]), (p.dist, p.dist));
        let t = all_pairs_ecc_oracle(&g).unwrap();
        for u in 0..g.n() {
            assert!(b.lower[u] <= t.ecc[u] && t.ecc[u] <= b.upper[u]);
            assert!(duality_audit(&g, &p, u).unwrap().violations.is_empty());
        }
    }
}
