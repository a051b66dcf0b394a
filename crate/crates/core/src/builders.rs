//! Named graphs, a seeded random DH generator and the center-embedding
//! constructions.
//!
//! Random generation is reproducible bit-for-bit: every generator seeds a
//! `ChaCha8Rng` with `seed_from_u64(seed)` and draws, for step `i` (the new
//! vertex), first `anchor = gen_range(0..i)` and then a uniform `f64` in
//! `[0, 1)` that selects the step kind by cumulative weight.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::center;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pruning::StepKind;

/// Graphs with a fixed, named shape.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedGraph {
    House,
    Gem,
    Domino,
    Cycle { k: usize },
    Path { k: usize },
    Clique { k: usize },
    /// Two `l`-cliques `u_i`, `v_i` with `u_i ~ v_j` for `i != j` and a
    /// pendant on every clique vertex.
    Fig5 { l: usize },
    /// The cograph embedding applied to `C4`.
    Fig7CographDemo,
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedGraph::House => write!(f, "house"),
            NamedGraph::Gem => write!(f, "gem"),
            NamedGraph::Domino => write!(f, "domino"),
            NamedGraph::Cycle { k } => write!(f, "cycle:{k}"),
            NamedGraph::Path { k } => write!(f, "path:{k}"),
            NamedGraph::Clique { k } => write!(f, "clique:{k}"),
            NamedGraph::Fig5 { l } => write!(f, "fig5:{l}"),
            NamedGraph::Fig7CographDemo => write!(f, "fig7-demo"),
        }
    }
}

impl FromStr for NamedGraph {
    type Err = Error;

    /// Parses `house`, `gem`, `domino`, `cycle:K`, `path:K`, `clique:K`,
    /// `fig5:L` and `fig7-demo`.
    fn from_str(s: &str) -> Result<Self> {
        let (name, arg) = match s.split_once(':') {
            Some((a, b)) => (a, Some(b)),
            None => (s, None),
        };
        let num = || -> Result<usize> {
            arg.ok_or_else(|| Error::BadParameter(format!("`{name}` needs a size, e.g. {name}:4")))?
                .parse()
                .map_err(|_| Error::BadParameter(format!("bad size in `{s}`")))
        };
        Ok(match name {
            "house" => NamedGraph::House,
            "gem" => NamedGraph::Gem,
            "domino" => NamedGraph::Domino,
            "cycle" => NamedGraph::Cycle { k: num()? },
            "path" => NamedGraph::Path { k: num()? },
            "clique" => NamedGraph::Clique { k: num()? },
            "fig5" => NamedGraph::Fig5 { l: num()? },
            "fig7-demo" => NamedGraph::Fig7CographDemo,
            _ => return Err(Error::BadParameter(format!("unknown graph name `{s}`"))),
        })
    }
}

/// Vertex ids of [`NamedGraph::Fig5`]; indices are 0-based.
#[derive(Debug, Clone, Copy)]
pub struct Fig5Labels {
    pub l: usize,
}

impl Fig5Labels {
    pub fn u(&self, i: usize) -> usize {
        i
    }
    pub fn v(&self, i: usize) -> usize {
        self.l + i
    }
    pub fn x(&self, i: usize) -> usize {
        2 * self.l + i
    }
    pub fn y(&self, i: usize) -> usize {
        3 * self.l + i
    }
    /// All `u_i` and `v_i`.
    pub fn center(&self) -> Vec<usize> {
        (0..2 * self.l).collect()
    }
    /// All `x_i` and `y_i`.
    pub fn diametral(&self) -> Vec<usize> {
        (2 * self.l..4 * self.l).collect()
    }
}

pub fn build_named(name: NamedGraph) -> Result<Graph> {
    let bad = |what: &str| Err(Error::BadParameter(format!("{name}: {what}")));
    match name {
        NamedGraph::House => Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1)]),
        NamedGraph::Gem => {
            Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3)])
        }
        NamedGraph::Domino => Graph::from_edges(
            6,
            [(0, 1), (1, 2), (3, 4), (4, 5), (0, 3), (1, 4), (2, 5)],
        ),
        NamedGraph::Cycle { k } => {
            if k < 3 {
                return bad("cycles need k >= 3");
            }
            Graph::from_edges(k, (0..k).map(|i| (i, (i + 1) % k)))
        }
        NamedGraph::Path { k } => {
            if k < 1 {
                return bad("paths need k >= 1");
            }
            Graph::from_edges(k, (1..k).map(|i| (i - 1, i)))
        }
        NamedGraph::Clique { k } => {
            if k < 1 {
                return bad("cliques need k >= 1");
            }
            Graph::from_edges(k, (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))))
        }
        NamedGraph::Fig5 { l } => {
            if l < 2 {
                return bad("the family needs l >= 2");
            }
            let lab = Fig5Labels { l };
            let mut edges = Vec::new();
            for i in 0..l {
                for j in i + 1..l {
                    edges.push((lab.u(i), lab.u(j)));
                    edges.push((lab.v(i), lab.v(j)));
                }
                for j in 0..l {
                    if i != j {
                        edges.push((lab.u(i), lab.v(j)));
                    }
                }
                edges.push((lab.u(i), lab.x(i)));
                edges.push((lab.v(i), lab.y(i)));
            }
            Graph::from_edges(4 * l, edges)
        }
        NamedGraph::Fig7CographDemo => {
            let c4 = build_named(NamedGraph::Cycle { k: 4 })?;
            embed_as_center(&c4, CenterBranch::Cograph)
        }
    }
}

/// Probabilities of the three step kinds used by [`random_dh`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct KindWeights {
    pub pendant: f64,
    pub true_twin: f64,
    pub false_twin: f64,
}

impl Default for KindWeights {
    fn default() -> Self {
        KindWeights {
            pendant: 0.4,
            true_twin: 0.3,
            false_twin: 0.3,
        }
    }
}

impl KindWeights {
    pub fn new(pendant: f64, true_twin: f64, false_twin: f64) -> Result<Self> {
        let w = KindWeights {
            pendant,
            true_twin,
            false_twin,
        };
        let parts = [pendant, true_twin, false_twin];
        if parts.iter().any(|p| !p.is_finite() || *p < 0.0) {
            return Err(Error::BadParameter(format!("kind weights must be non-negative: {parts:?}")));
        }
        if (parts.iter().sum::<f64>() - 1.0).abs() > 1e-9 {
            return Err(Error::BadParameter(format!("kind weights must sum to 1: {parts:?}")));
        }
        Ok(w)
    }

    fn pick(&self, r: f64) -> StepKind {
        if r < self.pendant {
            StepKind::Pendant
        } else if r < self.pendant + self.true_twin {
            StepKind::TrueTwin
        } else {
            StepKind::FalseTwin
        }
    }
}

/// One step of a forward construction sequence. The first step creates
/// vertex 0 and has no attachment.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ConstructionStep {
    pub new_vertex: usize,
    /// Step kind and the existing vertex it attaches to.
    pub attach: Option<(StepKind, usize)>,
}

/// Adjacency lists grown one vertex at a time by pendant or twin steps.
#[derive(Debug, Default)]
pub(crate) struct Grower {
    adj: Vec<Vec<usize>>,
}

impl Grower {
    pub(crate) fn with_vertices(n: usize) -> Self {
        Grower {
            adj: vec![Vec::new(); n],
        }
    }

    /// Attaches `new` (already allocated, currently isolated) to `anchor`.
    pub(crate) fn attach(&mut self, new: usize, kind: StepKind, anchor: usize) {
        let mut nbrs = match kind {
            StepKind::Pendant => Vec::new(),
            StepKind::TrueTwin | StepKind::FalseTwin => self.adj[anchor].clone(),
        };
        if kind != StepKind::FalseTwin {
            nbrs.push(anchor);
        }
        for &w in &nbrs {
            self.adj[w].push(new);
        }
        self.adj[new] = nbrs;
    }

    pub(crate) fn finish(self) -> Graph {
        Graph::from_unsorted_adjacency(self.adj).expect("grown graphs are simple")
    }
}

/// Random connected DH graph on `n` vertices together with its construction
/// sequence. A false twin of the lone starting vertex would disconnect the
/// graph, so that draw becomes a pendant.
pub fn random_dh(n: usize, seed: u64, weights: KindWeights) -> Result<(Graph, Vec<ConstructionStep>)> {
    if n == 0 {
        return Err(Error::BadParameter("random_dh needs n >= 1".into()));
    }
    let weights = KindWeights::new(weights.pendant, weights.true_twin, weights.false_twin)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut grower = Grower::with_vertices(n);
    let mut steps = Vec::with_capacity(n);
    steps.push(ConstructionStep {
        new_vertex: 0,
        attach: None,
    });
    for i in 1..n {
        let anchor = rng.gen_range(0..i);
        let mut kind = weights.pick(rng.gen::<f64>());
        if i == 1 && kind == StepKind::FalseTwin {
            kind = StepKind::Pendant;
        }
        grower.attach(i, kind, anchor);
        steps.push(ConstructionStep {
            new_vertex: i,
            attach: Some((kind, anchor)),
        });
    }
    Ok((grower.finish(), steps))
}

/// Random cograph (possibly disconnected) built from twin steps only, each
/// kind with probability 1/2.
pub fn random_cograph(n: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::BadParameter("random_cograph needs n >= 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut grower = Grower::with_vertices(n);
    for i in 1..n {
        let anchor = rng.gen_range(0..i);
        let kind = if rng.gen::<f64>() < 0.5 {
            StepKind::TrueTwin
        } else {
            StepKind::FalseTwin
        };
        grower.attach(i, kind, anchor);
    }
    Ok(grower.finish())
}

/// One member of a seeded corpus.
#[derive(Debug, Clone)]
pub struct CorpusInstance {
    pub index: usize,
    pub seed: u64,
    pub graph: Graph,
}

/// `count` random DH graphs with sizes uniform in `[1, max_n]`. The corpus
/// seed drives a `ChaCha8Rng` that draws, per instance, the size and then a
/// 64-bit instance seed passed to [`random_dh`] with default weights.
pub fn corpus(count: usize, max_n: usize, seed: u64) -> Result<Vec<CorpusInstance>> {
    if max_n == 0 {
        return Err(Error::BadParameter("corpus needs max_n >= 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|index| {
            let n = rng.gen_range(1..=max_n);
            let seed = rng.gen::<u64>();
            let (graph, _) = random_dh(n, seed, KindWeights::default())?;
            Ok(CorpusInstance { index, seed, graph })
        })
        .collect()
}

/// Which center shape [`embed_as_center`] builds around.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CenterBranch {
    Cograph,
    Diam3,
}

impl FromStr for CenterBranch {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cograph" => Ok(CenterBranch::Cograph),
            "diam3" => Ok(CenterBranch::Diam3),
            _ => Err(Error::BadParameter(format!("unknown center branch `{s}`"))),
        }
    }
}

/// Builds a DH graph whose center is exactly `V(h)`; vertices of `h` keep
/// their ids.
///
/// * `Cograph`: `h` must be P4-free. Adds `x`, `y` universal to `h` and not
///   adjacent to each other, then pendants `x*` on `x` and `y*` on `y`
///   (ids `n, n+1, n+2, n+3` for `x, x*, y, y*`).
/// * `Diam3`: `h` must be a connected DH graph of diameter 3 whose center is
///   a connected cograph of radius 2. Adds one pendant per vertex of `C(h)`.
pub fn embed_as_center(h: &Graph, branch: CenterBranch) -> Result<Graph> {
    let n = h.n();
    if n == 0 {
        return Err(Error::InvalidCenterShape("empty graph".into()));
    }
    let mut edges: Vec<(usize, usize)> = h.edges().collect();
    match branch {
        CenterBranch::Cograph => {
            if let Some(p4) = center::find_induced_p4(h) {
                return Err(Error::InvalidCenterShape(format!(
                    "not a cograph, induced P4 on {p4:?}"
                )));
            }
            let (x, xs, y, ys) = (n, n + 1, n + 2, n + 3);
            for v in 0..n {
                edges.push((x, v));
                edges.push((y, v));
            }
            edges.push((x, xs));
            edges.push((y, ys));
            Graph::from_edges(n + 4, edges)
        }
        CenterBranch::Diam3 => {
            let shape = center::diam3_shape(h);
            if let Some(reason) = shape.failure() {
                return Err(Error::InvalidCenterShape(reason));
            }
            let inner = &shape.inner_center;
            for (i, &c) in inner.iter().enumerate() {
                edges.push((c, n + i));
            }
            Graph::from_edges(n + inner.len(), edges)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::all_pairs_ecc_oracle;
    use crate::pruning::is_distance_hereditary;

    #[test]
    fn named_sizes() {
        let house = build_named(NamedGraph::House).unwrap();
        assert_eq!((house.n(), house.m()), (5, 6));
        let gem = build_named(NamedGraph::Gem).unwrap();
        assert_eq!((gem.n(), gem.m()), (5, 7));
        let domino = build_named(NamedGraph::Domino).unwrap();
        assert_eq!((domino.n(), domino.m()), (6, 7));
        let f = build_named(NamedGraph::Fig5 { l: 3 }).unwrap();
        // two triangles, six cross edges, six pendants
        assert_eq!((f.n(), f.m()), (12, 18));
    }

    #[test]
    fn bad_parameters() {
        for name in [
            NamedGraph::Cycle { k: 2 },
            NamedGraph::Path { k: 0 },
            NamedGraph::Clique { k: 0 },
            NamedGraph::Fig5 { l: 1 },
        ] {
            assert!(matches!(build_named(name), Err(Error::BadParameter(_))), "{name}");
        }
        assert!(KindWeights::new(0.5, 0.5, 0.5).is_err());
        assert!(KindWeights::new(-0.5, 1.0, 0.5).is_err());
        assert!(random_dh(0, 1, KindWeights::default()).is_err());
    }

    #[test]
    fn name_round_trip() {
        for s in ["house", "gem", "domino", "cycle:7", "path:3", "clique:5", "fig5:4", "fig7-demo"] {
            assert_eq!(s.parse::<NamedGraph>().unwrap().to_string(), s);
        }
        assert!("cycle".parse::<NamedGraph>().is_err());
        assert!("petersen".parse::<NamedGraph>().is_err());
    }

    #[test]
    fn cycles_four_and_five() {
        assert!(is_distance_hereditary(&build_named(NamedGraph::Cycle { k: 4 }).unwrap()).unwrap());
        assert!(!is_distance_hereditary(&build_named(NamedGraph::Cycle { k: 5 }).unwrap()).unwrap());
    }

    #[test]
    fn tiny_random_graphs() {
        let (g, steps) = random_dh(1, 3, KindWeights::default()).unwrap();
        assert_eq!((g.n(), g.m(), steps.len()), (1, 0, 1));
        let only_false = KindWeights::new(0.0, 0.0, 1.0).unwrap();
        for seed in 0..20 {
            let (g, steps) = random_dh(2, seed, only_false).unwrap();
            assert_eq!((g.n(), g.m()), (2, 1));
            assert_eq!(steps[1].attach, Some((StepKind::Pendant, 0)));
        }
    }

    #[test]
    fn random_dh_is_reproducible_and_connected() {
        let a = random_dh(300, 42, KindWeights::default()).unwrap();
        let b = random_dh(300, 42, KindWeights::default()).unwrap();
        assert_eq!(a, b);
        assert!(a.0.is_connected());
        let c = random_dh(300, 43, KindWeights::default()).unwrap();
        assert_ne!(a.0, c.0);
    }

    #[test]
    fn random_dh_200_is_recognized() {
        for seed in 0..10 {
            let (g, _) = random_dh(200, seed, KindWeights::default()).unwrap();
            assert!(is_distance_hereditary(&g).unwrap(), "seed {seed}");
        }
    }

    #[test]
    fn embed_k2_and_k1() {
        let k2 = build_named(NamedGraph::Clique { k: 2 }).unwrap();
        let g = embed_as_center(&k2, CenterBranch::Cograph).unwrap();
        assert_eq!(g.n(), 6);
        let t = all_pairs_ecc_oracle(&g).unwrap();
        assert_eq!((t.rad, t.diam, t.center.clone()), (2, 4, vec![0, 1]));

        let k1 = Graph::empty(1);
        let g = embed_as_center(&k1, CenterBranch::Cograph).unwrap();
        let t = all_pairs_ecc_oracle(&g).unwrap();
        assert_eq!(t.center, vec![0]);
    }

    #[test]
    fn embed_rejects_bad_shapes() {
        let p4 = build_named(NamedGraph::Path { k: 4 }).unwrap();
        assert!(matches!(
            embed_as_center(&p4, CenterBranch::Diam3),
            Err(Error::InvalidCenterShape(_))
        ));
        assert!(matches!(
            embed_as_center(&p4, CenterBranch::Cograph),
            Err(Error::InvalidCenterShape(_))
        ));
    }

    #[test]
    fn fig7_demo_center_is_the_c4() {
        let g = build_named(NamedGraph::Fig7CographDemo).unwrap();
        assert_eq!(all_pairs_ecc_oracle(&g).unwrap().center, vec![0, 1, 2, 3]);
    }

    #[test]
    fn corpus_is_reproducible() {
        let a = corpus(20, 50, 9).unwrap();
        let b = corpus(20, 50, 9).unwrap();
        assert!(a.iter().zip(&b).all(|(x, y)| x.seed == y.seed && x.graph == y.graph));
        assert!(a.iter().all(|c| (1..=50).contains(&c.graph.n())));
    }
}
