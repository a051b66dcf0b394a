//! All eccentricities of a distance-hereditary graph in one pass over a
//! layered pruning sequence.
//!
//! Weighted eccentricities `e_{G,p}(v) = max_u d(v, u) + p(u)` are carried
//! through the sequence. A forward pass pushes the weight of every pruned
//! pendant onto its partner, so the residual graph `G_z` (root plus what is
//! left of layer 1) sees the whole graph through its weights. The backward
//! phases then compute weighted eccentricities in `G_z`, in `G_y` (adding
//! the trailing layer-2 pendants), and finally in every earlier `G_i`; with
//! `p_1 = 0` the last values are the plain eccentricities.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bfs_within, EccTable, Graph};
use crate::pruning::{build_pruning_sequence, find_central_vertex, PruningSequence, StepKind};

/// Per-vertex non-negative weights.
pub type WeightMap = Vec<u32>;

/// `max_u d(v, u) + p(u)` by one BFS.
pub fn weighted_ecc_bruteforce(g: &Graph, p: &[u32], v: usize) -> Result<u32> {
    g.check_vertex(v)?;
    weighted_ecc_within(g, p, v, &vec![true; g.n()]).ok_or(Error::DisconnectedGraph)
}

/// Weighted eccentricity of `v` in the subgraph induced by `alive`;
/// `None` if that subgraph is disconnected.
pub fn weighted_ecc_within(g: &Graph, p: &[u32], v: usize, alive: &[bool]) -> Option<u32> {
    let row = bfs_within(g, v, alive);
    let inf = row.infinity();
    let mut best = 0;
    for (u, &d) in row.dist.iter().enumerate() {
        if alive[u] {
            if d == inf {
                return None;
            }
            best = best.max(d + p[u]);
        }
    }
    Some(best)
}

/// A step of the sequence with twin roles oriented so that the removed
/// vertex is never heavier than its survivor, plus the weights of both
/// right before the step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OrientedStep {
    pub removed: usize,
    pub survivor: usize,
    pub kind: StepKind,
    pub p_removed: u32,
    pub p_survivor: u32,
}

/// Result of the forward pass over the steps before `z`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ForwardPass {
    pub steps: Vec<OrientedStep>,
    /// Weights when `G_y` is reached.
    pub p_y: WeightMap,
    /// Weights when `G_z` is reached.
    pub p_z: WeightMap,
    /// Vertices of `G_z`.
    pub alive_z: Vec<bool>,
    /// Twin steps whose roles were exchanged.
    pub swaps: usize,
}

/// Runs the weight recurrence along `seq` up to `marker_z`.
///
/// When a twin step would remove the heavier twin, the two exchange roles;
/// from then on the name of the recorded partner refers to the other
/// physical vertex, which is legitimate because twins are interchangeable
/// in the residual graph.
pub fn forward_weight_pass(g: &Graph, seq: &PruningSequence) -> Result<ForwardPass> {
    let n = g.n();
    if seq.n != n {
        return Err(Error::MalformedSequence("sequence is for a different graph".into()));
    }
    let mut phys: Vec<usize> = (0..n).collect();
    let mut p = vec![0u32; n];
    let mut alive = vec![true; n];
    let mut steps = Vec::with_capacity(seq.marker_z);
    let mut swaps = 0;
    let mut p_y = Vec::new();
    for (i, st) in seq.steps[..seq.marker_z].iter().enumerate() {
        if i == seq.marker_y {
            p_y = p.clone();
        }
        let (a, b) = (phys[st.vertex], phys[st.partner]);
        let (removed, survivor) = if st.kind.is_twin() && p[a] > p[b] {
            phys[st.partner] = a;
            phys[st.vertex] = b;
            swaps += 1;
            (b, a)
        } else {
            (a, b)
        };
        steps.push(OrientedStep {
            removed,
            survivor,
            kind: st.kind,
            p_removed: p[removed],
            p_survivor: p[survivor],
        });
        if st.kind == StepKind::Pendant {
            p[survivor] = p[survivor].max(p[removed] + 1);
        }
        alive[removed] = false;
    }
    if p_y.is_empty() {
        p_y = p.clone();
    }
    Ok(ForwardPass {
        steps,
        p_y,
        p_z: p,
        alive_z: alive,
        swaps,
    })
}

/// Weighted eccentricities in `G_z` plus, for every vertex of `G_z`, the
/// heaviest neighbor weight and heaviest non-neighbor weight inside `G_z`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Phase1 {
    /// Entries outside `G_z` are 0.
    pub we: Vec<u32>,
    pub nbr_max: Vec<Option<u32>>,
    pub nonnbr_max: Vec<Option<u32>>,
}

/// Phase 1. `G_z` has a universal vertex, so every distance in it is 1 or 2.
pub fn backward_phase1(g: &Graph, alive_z: &[bool], p_z: &[u32]) -> Phase1 {
    let n = g.n();
    let top = alive_z
        .iter()
        .zip(p_z)
        .filter(|(&a, _)| a)
        .map(|(_, &w)| w as usize)
        .max()
        .unwrap_or(0);
    // V*: decreasing weight, ascending id within a weight
    let mut buckets = vec![Vec::new(); top + 1];
    for v in (0..n).filter(|&v| alive_z[v]) {
        buckets[p_z[v] as usize].push(v);
    }
    let vstar: Vec<usize> = buckets.into_iter().rev().flatten().collect();

    let mut we = vec![0u32; n];
    let mut nbr_max = vec![None; n];
    let mut nonnbr_max = vec![None; n];
    let mut mark = vec![usize::MAX; n];
    for &v in &vstar {
        let mut w: Option<u32> = None;
        for &x in g.neighbors(v) {
            if alive_z[x] {
                mark[x] = v;
                w = Some(w.map_or(p_z[x], |c| c.max(p_z[x])));
            }
        }
        let u = vstar
            .iter()
            .find(|&&x| x != v && mark[x] != v)
            .map(|&x| p_z[x]);
        let mut e = p_z[v];
        if let Some(w) = w {
            e = e.max(w + 1);
        }
        if let Some(u) = u {
            e = e.max(u + 2);
        }
        we[v] = e;
        nbr_max[v] = w;
        nonnbr_max[v] = u;
    }
    Phase1 {
        we,
        nbr_max,
        nonnbr_max,
    }
}

/// Phase 2: layer-2 pendants in `[y, z)`, each hanging from a vertex `v_j`
/// of `G_z`. Their distance to anything in `G_z` goes through `v_j`; the
/// other pendants of `v_j` are at distance 2, so besides `v_j`'s own weight
/// at `y` the heaviest sibling is tracked separately.
fn backward_phase2(fp: &ForwardPass, ph1: &Phase1, y: usize, e: &mut [u32]) {
    let n = e.len();
    let run = &fp.steps[y..];
    // two heaviest pendants of each partner, by weight at y
    let mut best: Vec<[Option<(u32, usize)>; 2]> = vec![[None, None]; n];
    for s in run {
        debug_assert_eq!(s.kind, StepKind::Pendant);
        let w = (fp.p_y[s.removed], s.removed);
        let slot = &mut best[s.survivor];
        if slot[0].map_or(true, |b| w.0 > b.0) {
            slot[1] = slot[0];
            slot[0] = Some(w);
        } else if slot[1].map_or(true, |b| w.0 > b.0) {
            slot[1] = Some(w);
        }
    }
    for s in run {
        let (vi, vj) = (s.removed, s.survivor);
        let mut val = fp.p_y[vi].max(fp.p_y[vj] + 1);
        let sibling = match best[vj] {
            [Some((_, a)), other] if a == vi => other,
            [first, _] => first,
        };
        if let Some((w, _)) = sibling {
            val = val.max(w + 2);
        }
        if let Some(w) = ph1.nbr_max[vj] {
            val = val.max(w + 2);
        }
        if let Some(u) = ph1.nonnbr_max[vj] {
            val = val.max(u + 3);
        }
        e[vi] = val;
    }
}

/// One mismatch found by shadow mode.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShadowMismatch {
    pub phase: u8,
    /// 0-based step for phase 3.
    pub step: Option<usize>,
    pub vertex: usize,
    pub computed: u32,
    pub expected: u32,
}

/// Shadow-mode tally: every value produced by the backward phases compared
/// against brute-force weighted eccentricities in the matching residual
/// graph.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ShadowReport {
    pub checks: usize,
    pub mismatches: Vec<ShadowMismatch>,
}

impl ShadowReport {
    fn check(&mut self, g: &Graph, p: &[u32], alive: &[bool], v: usize, computed: u32, phase: u8, step: Option<usize>) {
        self.checks += 1;
        let expected = weighted_ecc_within(g, p, v, alive).unwrap_or(u32::MAX);
        if expected != computed {
            self.mismatches.push(ShadowMismatch {
                phase,
                step,
                vertex: v,
                computed,
                expected,
            });
        }
    }

    fn check_all(&mut self, g: &Graph, p: &[u32], alive: &[bool], e: &[u32], phase: u8) {
        for v in (0..g.n()).filter(|&v| alive[v]) {
            self.check(g, p, alive, v, e[v], phase, None);
        }
    }
}

/// Everything produced by one run of the algorithm.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EccRun {
    pub table: EccTable,
    pub root: usize,
    pub marker_y: usize,
    pub marker_z: usize,
    pub swaps: usize,
    /// Value of each vertex's weighted eccentricity in the residual graph
    /// where it was first computed.
    pub finalized: Vec<u32>,
}

/// Exact eccentricities of a connected DH graph.
pub fn all_eccentricities(g: &Graph) -> Result<EccTable> {
    Ok(run_with_root(g, None)?.table)
}

/// Full run; `root` defaults to a central vertex. The backward phases are
/// only guaranteed correct for a central root.
pub fn run_with_root(g: &Graph, root: Option<usize>) -> Result<EccRun> {
    run(g, root, None)
}

/// Full run that re-checks every phase against brute force. Quadratic or
/// worse; meant for tests on small graphs.
pub fn run_shadow(g: &Graph, root: Option<usize>) -> Result<(EccRun, ShadowReport)> {
    let mut report = ShadowReport::default();
    let r = run(g, root, Some(&mut report))?;
    Ok((r, report))
}

fn run(g: &Graph, root: Option<usize>, mut shadow: Option<&mut ShadowReport>) -> Result<EccRun> {
    let n = g.n();
    if n == 0 {
        return Err(Error::BadParameter("empty graph".into()));
    }
    if let Some(r) = root {
        g.check_vertex(r)?;
    }
    g.require_connected()?;
    if n <= 2 {
        let e = (n - 1) as u32;
        return Ok(EccRun {
            table: EccTable::from_ecc(vec![e; n]),
            root: root.unwrap_or(0),
            marker_y: 0,
            marker_z: 0,
            swaps: 0,
            finalized: vec![e; n],
        });
    }
    let root = match root {
        Some(r) => r,
        None => find_central_vertex(g)?,
    };
    let seq = build_pruning_sequence(g, root)?;
    let (y, z) = (seq.marker_y, seq.marker_z);
    let fp = forward_weight_pass(g, &seq)?;

    let ph1 = backward_phase1(g, &fp.alive_z, &fp.p_z);
    let mut e = ph1.we.clone();
    if let Some(rep) = shadow.as_deref_mut() {
        rep.check_all(g, &fp.p_z, &fp.alive_z, &e, 1);
    }

    backward_phase2(&fp, &ph1, y, &mut e);
    let mut alive = fp.alive_z.clone();
    for s in &fp.steps[y..] {
        alive[s.removed] = true;
    }
    if let Some(rep) = shadow.as_deref_mut() {
        rep.check_all(g, &fp.p_y, &alive, &e, 2);
    }

    let mut finalized = e.clone();
    let mut p = fp.p_y.clone();
    for i in (0..y).rev() {
        let s = fp.steps[i];
        let (vi, vj) = (s.removed, s.survivor);
        if s.kind == StepKind::Pendant {
            e[vi] = s.p_removed.max(e[vj] + 1);
        } else {
            let d = s.kind.partner_distance();
            e[vj] = (s.p_removed + d).max(e[vj]);
            e[vi] = (s.p_survivor + d).max(e[vj]);
        }
        finalized[vi] = e[vi];
        if let Some(rep) = shadow.as_deref_mut() {
            p[vj] = s.p_survivor;
            p[vi] = s.p_removed;
            alive[vi] = true;
            rep.check(g, &p, &alive, vi, e[vi], 3, Some(i));
            rep.check(g, &p, &alive, vj, e[vj], 3, Some(i));
        }
    }
    if let Some(rep) = shadow.as_deref_mut() {
        rep.check_all(g, &vec![0; n], &vec![true; n], &e, 3);
    }

    Ok(EccRun {
        table: EccTable::from_ecc(e),
        root,
        marker_y: y,
        marker_z: z,
        swaps: fp.swaps,
        finalized,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{build_named, random_dh, Fig5Labels, KindWeights, NamedGraph};
    use crate::graph::all_pairs_ecc_oracle;

    #[test]
    fn brute_force_examples() {
        let k2 = build_named(NamedGraph::Clique { k: 2 }).unwrap();
        assert_eq!(weighted_ecc_bruteforce(&k2, &[0, 0], 0).unwrap(), 1);
        let p3 = build_named(NamedGraph::Path { k: 3 }).unwrap();
        assert_eq!(weighted_ecc_bruteforce(&p3, &[1, 0, 0], 2).unwrap(), 3);
    }

    #[test]
    fn forward_pass_on_a_star() {
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let seq = build_pruning_sequence(&star, 0).unwrap();
        // everything is in iteration 1, so run the recurrence by hand
        let mut p = vec![0u32; 4];
        for s in &seq.steps {
            p[s.partner] = p[s.partner].max(p[s.vertex] + 1);
        }
        assert_eq!(p[0], 1);
    }

    #[test]
    fn phase1_star_with_heavy_leaf() {
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let p = [0, 2, 0, 0];
        let ph = backward_phase1(&star, &[true; 4], &p);
        for v in 0..4 {
            assert_eq!(ph.we[v], weighted_ecc_bruteforce(&star, &p, v).unwrap());
        }
        assert_eq!((ph.we[1], ph.we[2]), (2, 4));
    }

    #[test]
    fn small_graphs() {
        assert_eq!(all_eccentricities(&Graph::empty(1)).unwrap().ecc, vec![0]);
        let p3 = build_named(NamedGraph::Path { k: 3 }).unwrap();
        assert_eq!(all_eccentricities(&p3).unwrap().ecc, vec![2, 1, 2]);
        let p5 = build_named(NamedGraph::Path { k: 5 }).unwrap();
        assert_eq!(all_eccentricities(&p5).unwrap().ecc, vec![4, 3, 2, 3, 4]);
    }

    #[test]
    fn fig5_family() {
        for l in 3..=8 {
            let lab = Fig5Labels { l };
            let t = all_eccentricities(&build_named(NamedGraph::Fig5 { l }).unwrap()).unwrap();
            assert_eq!((t.rad, t.diam), (3, 4));
            assert_eq!(t.center, lab.center());
        }
    }

    #[test]
    fn fig5_weights_after_the_deepest_iteration() {
        let g = build_named(NamedGraph::Fig5 { l: 3 }).unwrap();
        let run = run_with_root(&g, None).unwrap();
        let seq = build_pruning_sequence(&g, run.root).unwrap();
        let fp = forward_weight_pass(&g, &seq).unwrap();
        // the pendants x_i, y_i sit below the clique vertices other than the root
        let lab = Fig5Labels { l: 3 };
        for v in lab.center() {
            if v != run.root && fp.alive_z[v] {
                assert!(fp.p_z[v] >= 1);
            }
        }
    }

    #[test]
    fn shadow_mode_on_random_graphs() {
        for seed in 0..30 {
            let (g, _) = random_dh(2 + seed as usize * 3, seed, KindWeights::default()).unwrap();
            let (run, rep) = run_shadow(&g, None).unwrap();
            assert!(rep.mismatches.is_empty(), "seed {seed}: {:?}", rep.mismatches);
            assert_eq!(run.table, all_pairs_ecc_oracle(&g).unwrap());
        }
    }

    #[test]
    fn rejects_non_dh_and_disconnected() {
        let c5 = build_named(NamedGraph::Cycle { k: 5 }).unwrap();
        assert!(matches!(all_eccentricities(&c5), Err(Error::NotDistanceHereditary { .. })));
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(all_eccentricities(&g), Err(Error::DisconnectedGraph));
    }
}
