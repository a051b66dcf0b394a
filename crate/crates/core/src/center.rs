//! Centers, the sets `C^k`, the two possible center shapes, and audits that
//! relate eccentricities to distances from the center.

use std::collections::VecDeque;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::ecc_exact::all_eccentricities;
use crate::error::Result;
use crate::graph::{all_pairs_ecc_oracle, slice_from_rows, DistanceMatrix, EccTable, Graph};
use crate::pruning::is_distance_hereditary;

/// Number of checks run and what failed.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct AuditOutcome {
    pub checked: usize,
    pub violations: Vec<String>,
}

impl AuditOutcome {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }

    pub(crate) fn expect(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.violations.push(msg());
        }
    }
}

/// `C(G)` and `C^k(G)`.
pub fn center_and_ck(table: &EccTable, k: u32) -> (Vec<usize>, Vec<usize>) {
    (table.center.clone(), table.within(k))
}

/// Multi-source BFS: distance from every vertex to the nearest member of
/// `set`. Unreachable vertices get `n`.
pub fn distance_to_set(g: &Graph, set: &[usize]) -> Vec<u32> {
    let n = g.n();
    let mut dist = vec![n as u32; n];
    let mut queue = VecDeque::new();
    for &s in set {
        if dist[s] != 0 {
            dist[s] = 0;
            queue.push_back(s);
        }
    }
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if dist[w] == n as u32 {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// An induced path `a - b - c - d`, if any.
///
/// Every induced P4 has a middle edge `bc`; for each edge the candidates are
/// `a` in `N(b) \ N[c]` and `d` in `N(c) \ N[b]`.
pub fn find_induced_p4(h: &Graph) -> Option<[usize; 4]> {
    for (b, c) in h.edges() {
        for (b, c) in [(b, c), (c, b)] {
            let ends_a: Vec<usize> = h
                .neighbors(b)
                .iter()
                .copied()
                .filter(|&a| a != c && !h.has_edge(a, c))
                .collect();
            if ends_a.is_empty() {
                continue;
            }
            for &d in h.neighbors(c) {
                if d == b || h.has_edge(d, b) {
                    continue;
                }
                if let Some(&a) = ends_a.iter().find(|&&a| !h.has_edge(a, d)) {
                    return Some([a, b, c, d]);
                }
            }
        }
    }
    None
}

pub fn is_cograph(h: &Graph) -> bool {
    find_induced_p4(h).is_none()
}

/// Everything needed to decide whether a graph has the second center shape:
/// connected, DH, diameter 3, and a center that induces a connected cograph
/// of radius 2.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Diam3Shape {
    pub connected: bool,
    pub distance_hereditary: bool,
    pub diameter: Option<u32>,
    /// `C(H)`, in the vertex ids of `H`.
    pub inner_center: Vec<usize>,
    pub inner_center_connected: bool,
    pub inner_center_cograph: bool,
    pub inner_center_radius: Option<u32>,
}

impl Diam3Shape {
    /// First failed condition, or `None` if the shape is valid.
    pub fn failure(&self) -> Option<String> {
        if !self.connected {
            Some("graph is not connected".into())
        } else if !self.distance_hereditary {
            Some("graph is not distance-hereditary".into())
        } else if self.diameter != Some(3) {
            Some(format!("diameter is {:?}, not 3", self.diameter))
        } else if !self.inner_center_connected {
            Some("its center is not connected".into())
        } else if !self.inner_center_cograph {
            Some("its center is not a cograph".into())
        } else if self.inner_center_radius != Some(2) {
            Some(format!("its center has radius {:?}, not 2", self.inner_center_radius))
        } else {
            None
        }
    }

    pub fn is_valid(&self) -> bool {
        self.failure().is_none()
    }
}

/// Evaluates [`Diam3Shape`] by brute force (`h` is small).
pub fn diam3_shape(h: &Graph) -> Diam3Shape {
    let mut shape = Diam3Shape {
        connected: h.n() > 0 && h.is_connected(),
        distance_hereditary: false,
        diameter: None,
        inner_center: Vec::new(),
        inner_center_connected: false,
        inner_center_cograph: false,
        inner_center_radius: None,
    };
    if !shape.connected {
        return shape;
    }
    shape.distance_hereditary = is_distance_hereditary(h).unwrap_or(false);
    let t = all_pairs_ecc_oracle(h).expect("connected");
    shape.diameter = Some(t.diam);
    let (c, _) = h.induced_subgraph(&t.center);
    shape.inner_center = t.center;
    shape.inner_center_connected = c.is_connected();
    shape.inner_center_cograph = is_cograph(&c);
    if shape.inner_center_connected {
        shape.inner_center_radius = Some(all_pairs_ecc_oracle(&c).expect("connected").rad);
    }
    shape
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CenterClass {
    Cograph,
    Diam3Special,
    /// Neither shape; impossible for DH graphs.
    Invalid,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CenterReport {
    pub rad: u32,
    pub diam: u32,
    pub center: Vec<usize>,
    pub c1: Vec<usize>,
    pub classification: CenterClass,
    /// Induced P4 inside the center, in the ids of `G`.
    pub p4: Option<[usize; 4]>,
    /// Details of the second shape, with `inner_center` in the ids of `G`.
    pub diam3: Option<Diam3Shape>,
    pub witness: Option<String>,
}

/// Classifies `C(G)` of a connected DH graph.
pub fn classify_center(g: &Graph) -> Result<CenterReport> {
    let t = all_eccentricities(g)?;
    Ok(classify_center_with(g, &t))
}

/// Classification from a known eccentricity table.
pub fn classify_center_with(g: &Graph, t: &EccTable) -> CenterReport {
    let (h, map) = g.induced_subgraph(&t.center);
    let p4 = find_induced_p4(&h);
    let mut report = CenterReport {
        rad: t.rad,
        diam: t.diam,
        center: t.center.clone(),
        c1: t.within(1),
        classification: CenterClass::Cograph,
        p4: p4.map(|q| q.map(|v| map[v])),
        diam3: None,
        witness: None,
    };
    if p4.is_some() {
        let mut shape = diam3_shape(&h);
        shape.inner_center = shape.inner_center.iter().map(|&v| map[v]).collect();
        match shape.failure() {
            None => report.classification = CenterClass::Diam3Special,
            Some(why) => {
                report.classification = CenterClass::Invalid;
                report.witness = Some(why);
            }
        }
        report.diam3 = Some(shape);
    }
    report
}

/// A non-central vertex without a neighbor of smaller eccentricity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnimodalityBreak {
    pub vertex: usize,
    pub ecc: u32,
    pub dist_to_center: u32,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct UnimodalityReport {
    pub breaks: Vec<UnimodalityBreak>,
    /// Breaks where `e(v) = rad + 1`, `diam = 2 rad`, `d(v, C) = 2` fails.
    pub violations: Vec<UnimodalityBreak>,
}

pub fn unimodality_audit(g: &Graph, t: &EccTable) -> UnimodalityReport {
    let dc = distance_to_set(g, &t.center);
    let mut rep = UnimodalityReport::default();
    for v in 0..g.n() {
        if t.ecc[v] == t.rad || g.neighbors(v).iter().any(|&w| t.ecc[w] < t.ecc[v]) {
            continue;
        }
        let b = UnimodalityBreak {
            vertex: v,
            ecc: t.ecc[v],
            dist_to_center: dc[v],
        };
        if !(b.ecc == t.rad + 1 && t.diam == 2 * t.rad && b.dist_to_center == 2) {
            rep.violations.push(b.clone());
        }
        rep.breaks.push(b);
    }
    rep
}

/// Eccentricity against distance to `C(G)` and `C^1(G)`.
///
/// * `d(v,C) + rad - 1 <= e(v) <= d(v,C) + rad` for every `v`;
/// * `e(v) = d(v,C) + rad` for every `v` when `diam < 2 rad`;
/// * `e(v) = d(v,C^1) + rad + 1` for every non-central `v`;
/// * `e(v) = rad + 1` implies `d(v,C) <= 2`;
/// * eccentricity profiles along every shortest path from `v` to a closest
///   central vertex `v'`.
///
/// The path condition is checked on the interval `I(v', v)`: a vertex `w`
/// lies on some shortest `v'`-`v` path exactly when it is in the interval,
/// and then its index on every such path is `d(v', w)`. Checking every
/// interval vertex for every closest `v'` therefore covers all paths
/// without enumerating them. For `e(v) = d(v,C) + rad` each `w` must have
/// `e(w) = rad + i`; for `e(v) = d(v,C) + rad - 1` (which forces
/// `d(v,C) >= 2`) indices 1 and 2 have `e = rad + 1` and indices `i >= 3`
/// have `e = rad + i - 1`.
pub fn center_distance_audit(g: &Graph, t: &EccTable, dm: &DistanceMatrix) -> AuditOutcome {
    let n = g.n();
    let r = t.rad;
    let dc = distance_to_set(g, &t.center);
    let dc1 = distance_to_set(g, &t.within(1));
    let mut out = AuditOutcome::default();
    for v in 0..n {
        let (e, d) = (t.ecc[v], dc[v]);
        out.expect(e <= d + r, ||format!("v={v}: e={e} above d(v,C)+rad={}", d + r));
        out.expect(e + 1 >= d + r, || format!("v={v}: e={e} below d(v,C)+rad-1={}", d + r - 1));
        if t.diam < 2 * r {
            out.expect(e == d + r, || format!("v={v}: diam<2rad but e={e} != d(v,C)+rad={}", d + r));
        }
        if e > r {
            out.expect(e == dc1[v] + r + 1, || {
                format!("v={v}: e={e} != d(v,C1)+rad+1={}", dc1[v] + r + 1)
            });
        }
        if e == r + 1 {
            out.expect(d <= 2, || format!("v={v}: e=rad+1 but d(v,C)={d}"));
        }
        let upper_regime = e == d + r;
        for &c in &t.center {
            if dm.get(v, c) != d {
                continue;
            }
            for w in 0..n {
                let i = dm.get(c, w);
                if i + dm.get(w, v) != d {
                    continue;
                }
                let want = if upper_regime {
                    r + i
                } else if i == 0 {
                    r
                } else if i <= 2 {
                    r + 1
                } else {
                    r + i - 1
                };
                out.expect(t.ecc[w] == want, || {
                    format!("v={v}, v'={c}: path vertex {w} at index {i} has e={}, expected {want}", t.ecc[w])
                });
            }
        }
    }
    out
}

/// Diametral pairs `x < y`.
pub fn diametral_pairs(t: &EccTable, dm: &DistanceMatrix) -> Vec<(usize, usize)> {
    let d = &t.diametral;
    let mut pairs = Vec::new();
    for (i, &x) in d.iter().enumerate() {
        for &y in &d[i + 1..] {
            if dm.get(x, y) == t.diam {
                pairs.push((x, y));
            }
        }
    }
    pairs
}

fn within_one(g: &Graph, v: usize, set: &[usize]) -> bool {
    set.iter().any(|&s| s == v || g.has_edge(s, v))
}

/// Structure of `C(G)` around every diametral pair, depending on the gap
/// `2 rad - diam` (0, 1 or 2). Other gaps only get the bound
/// `diam >= 2 rad - 2` checked.
pub fn gap_lemma_audit(g: &Graph, t: &EccTable, dm: &DistanceMatrix) -> AuditOutcome {
    let mut out = AuditOutcome::default();
    let (r, diam) = (t.rad, t.diam);
    out.expect(diam + 2 >= 2 * r, || format!("diam={diam} < 2rad-2={}", 2 * r - 2));
    if g.n() == 1 {
        return out;
    }
    let c1 = t.within(1);
    for (x, y) in diametral_pairs(t, dm) {
        let (dx, dy) = (dm.row(x), dm.row(y));
        let slice = |k: u32| slice_from_rows(dx, dy, diam, k);
        let tag = format!("pair ({x},{y})");
        if diam == 2 * r {
            let s = slice(r);
            for &c in &t.center {
                out.expect(s.contains(&c), || format!("{tag}: central {c} not in S_rad"));
            }
            for w in slice(r - 1).into_iter().chain(slice(r + 1)) {
                for &u in &s {
                    out.expect(g.has_edge(w, u), || format!("{tag}: {w} not adjacent to slice vertex {u}"));
                }
            }
            for &c in &c1 {
                out.expect(within_one(g, c, &s), || format!("{tag}: {c} in C1 but not within 1 of S_rad"));
            }
            let (sg, _) = g.induced_subgraph(&s);
            out.expect(is_cograph(&sg), || format!("{tag}: S_rad is not a cograph"));
        } else if diam + 1 == 2 * r {
            let (a, b) = (slice(r - 1), slice(r));
            for &u in &a {
                for &w in &b {
                    if !g.has_edge(u, w) {
                        continue;
                    }
                    for &c in &t.center {
                        out.expect(within_one(g, c, &[u, w]), || {
                            format!("{tag}: central {c} not within 1 of edge {u}{w}")
                        });
                    }
                }
            }
            out.expect(a.iter().any(|v| t.center.contains(v)), || format!("{tag}: A misses C"));
            out.expect(b.iter().any(|v| t.center.contains(v)), || format!("{tag}: B misses C"));
        } else if diam + 2 == 2 * r {
            let (a, s, b) = (slice(r - 2), slice(r - 1), slice(r));
            for &v in a.iter().chain(&b) {
                out.expect(t.ecc[v] == r, || format!("{tag}: {v} in A or B is not central"));
            }
            let sc: Vec<usize> = s.iter().copied().filter(|&v| t.ecc[v] == r).collect();
            out.expect(!sc.is_empty(), || format!("{tag}: S misses C"));
            if !sc.is_empty() {
                for &c in &t.center {
                    out.expect(within_one(g, c, &sc), || format!("{tag}: central {c} not within 1 of S and C"));
                }
            }
        }
    }
    out
}

/// When `diam = 2 rad - 2`, every set `M` of central vertices at pairwise
/// distance 2 has a common central neighbor. Checks every such pair, and
/// `samples` random larger sets grown greedily up to size 6.
pub fn helly_audit(g: &Graph, t: &EccTable, dm: &DistanceMatrix, samples: usize, seed: u64) -> AuditOutcome {
    let mut out = AuditOutcome::default();
    if t.diam + 2 != 2 * t.rad || g.n() == 1 {
        return out;
    }
    let c = &t.center;
    let check = |m: &[usize], out: &mut AuditOutcome| {
        let ok = c.iter().any(|&u| m.iter().all(|&w| g.has_edge(u, w)));
        out.expect(ok, || format!("no central vertex universal to {m:?}"));
    };
    for (i, &a) in c.iter().enumerate() {
        for &b in &c[i + 1..] {
            if dm.get(a, b) == 2 {
                check(&[a, b], &mut out);
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order = c.clone();
    for _ in 0..samples {
        order.shuffle(&mut rng);
        let mut m: Vec<usize> = Vec::new();
        for &v in &order {
            if m.len() == 6 {
                break;
            }
            if m.iter().all(|&w| dm.get(v, w) == 2) {
                m.push(v);
            }
        }
        if m.len() >= 3 {
            m.sort_unstable();
            check(&m, &mut out);
        }
    }
    out
}
