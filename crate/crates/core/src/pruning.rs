//! BFS-layer pruning sequences and distance-hereditary recognition.
//!
//! A pruning sequence removes one vertex at a time, each a pendant or one of
//! a pair of twins in the residual graph, until only the root is left. The
//! layered variant built here processes the BFS layers of the root from the
//! deepest one up. Iteration `k` runs four phases:
//!
//! * (a) twins inside one connected component of layer `k`,
//! * (b) pendants of layer `k` hanging from layer `k - 1`,
//! * (c) twins of layer `k - 1` sharing a neighbor in layer `k`,
//! * (d) pendants of layer `k` hanging from layer `k - 1`.
//!
//! Each phase runs until no eligible vertex remains. If layer `k` is still
//! nonempty after (d) the four phases are repeated; an iteration that removes
//! nothing proves the graph is not distance-hereditary.

use std::cmp::Reverse;
use std::collections::hash_map::Entry;
use std::collections::{BinaryHeap, HashMap};
use std::fmt;
use std::str::FromStr;

use rustc_hash::FxHashMap;
use serde::Serialize;

use crate::builders::Grower;
use crate::error::{Error, Result};
use crate::extremal;
use crate::graph::{bfs, Graph};

/// How a vertex leaves (or, read backwards, joins) the graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StepKind {
    Pendant,
    TrueTwin,
    FalseTwin,
}

impl StepKind {
    pub fn as_str(self) -> &'static str {
        match self {
            StepKind::Pendant => "pendant",
            StepKind::TrueTwin => "true-twin",
            StepKind::FalseTwin => "false-twin",
        }
    }

    /// Distance between a vertex and its partner.
    pub fn partner_distance(self) -> u32 {
        match self {
            StepKind::Pendant | StepKind::TrueTwin => 1,
            StepKind::FalseTwin => 2,
        }
    }

    pub fn is_twin(self) -> bool {
        self != StepKind::Pendant
    }
}

impl FromStr for StepKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pendant" => Ok(StepKind::Pendant),
            "true-twin" => Ok(StepKind::TrueTwin),
            "false-twin" => Ok(StepKind::FalseTwin),
            _ => Err(Error::BadParameter(format!("unknown step kind `{s}`"))),
        }
    }
}

/// The phase of an iteration that removed a vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Phase {
    A,
    B,
    C,
    D,
}

impl Phase {
    pub fn as_str(self) -> &'static str {
        match self {
            Phase::A => "a",
            Phase::B => "b",
            Phase::C => "c",
            Phase::D => "d",
        }
    }
}

impl FromStr for Phase {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "a" => Ok(Phase::A),
            "b" => Ok(Phase::B),
            "c" => Ok(Phase::C),
            "d" => Ok(Phase::D),
            _ => Err(Error::BadParameter(format!("unknown phase `{s}`"))),
        }
    }
}

/// One elimination. `index` is the 0-based position in the sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PruningStep {
    pub index: usize,
    pub vertex: usize,
    pub kind: StepKind,
    pub partner: usize,
    /// BFS layer of `vertex`.
    pub layer: u32,
    pub phase: Phase,
}

/// A complete layered pruning sequence.
///
/// Positions are 0-based: step `i` removes `steps[i].vertex`, and position
/// `n - 1` is the root. `marker_z` is the position of the first removal of
/// iteration 1 and `marker_y` the position where the trailing run of
/// layer-2 pendants of iteration 2 begins (`marker_y == marker_z` when there
/// is none), so `marker_y <= marker_z <= n - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PruningSequence {
    pub n: usize,
    pub root: usize,
    /// Eccentricity of the root, i.e. the number of iterations.
    pub depth: u32,
    pub steps: Vec<PruningStep>,
    pub marker_y: usize,
    pub marker_z: usize,
}

impl PruningSequence {
    /// Rebuilds the graph by running the sequence backwards as construction
    /// steps starting from the root.
    pub fn replay(&self) -> Graph {
        let mut grower = Grower::with_vertices(self.n);
        for s in self.steps.iter().rev() {
            grower.attach(s.vertex, s.kind, s.partner);
        }
        grower.finish()
    }

    /// Checks every step against the residual graph of `g`: pendants have
    /// residual degree 1 towards their partner, twins have equal open or
    /// closed residual neighborhoods, and every vertex is removed once.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if g.n() != self.n || self.steps.len() + 1 != self.n.max(1) {
            return Err(Error::MalformedSequence("size mismatch".into()));
        }
        let mut res = Residual::new(g);
        for s in &self.steps {
            let bad = |what: &str| Err(Error::MalformedSequence(format!("step {}: {what}", s.index + 1)));
            if s.vertex == self.root || !res.alive[s.vertex] || !res.alive[s.partner] {
                return bad("vertex or partner not in the residual graph");
            }
            match s.kind {
                StepKind::Pendant => {
                    if res.deg[s.vertex] != 1 || !g.has_edge(s.vertex, s.partner) {
                        return bad("not a pendant of its partner");
                    }
                }
                kind => {
                    if res.twin_kind(s.vertex, s.partner) != Some(kind) {
                        return bad("not a twin of its partner");
                    }
                }
            }
            res.remove(s.vertex);
        }
        Ok(())
    }

    /// Line-oriented dump: a header comment followed by one line
    /// `i vertex kind partner layer phase` per step, with 1-based `i`.
    /// The markers in the header are 1-based as well.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "# pruning n={} root={} depth={} y={} z={}\n",
            self.n,
            self.root,
            self.depth,
            self.marker_y + 1,
            self.marker_z + 1
        );
        for s in &self.steps {
            out.push_str(&format!(
                "{} {} {} {} {} {}\n",
                s.index + 1,
                s.vertex,
                s.kind.as_str(),
                s.partner,
                s.layer,
                s.phase.as_str()
            ));
        }
        out
    }

    /// Parses the format written by [`PruningSequence::to_text`].
    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate();
        let (_, header) = lines
            .next()
            .ok_or(Error::Parse { line: 1, message: "missing header".into() })?;
        let mut fields: HashMap<&str, usize> = HashMap::new();
        for tok in header
            .strip_prefix("# pruning")
            .ok_or(Error::Parse { line: 1, message: "expected `# pruning` header".into() })?
            .split_whitespace()
        {
            let (k, v) = tok
                .split_once('=')
                .ok_or(Error::Parse { line: 1, message: format!("bad header field `{tok}`") })?;
            let v = v
                .parse()
                .map_err(|_| Error::Parse { line: 1, message: format!("bad header value `{tok}`") })?;
            fields.insert(k, v);
        }
        let get = |k: &str| {
            fields
                .get(k)
                .copied()
                .ok_or(Error::Parse { line: 1, message: format!("header lacks `{k}`") })
        };
        let mut steps = Vec::new();
        for (idx, line) in lines {
            let lineno = idx + 1;
            let perr = |m: String| Error::Parse { line: lineno, message: m };
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks.is_empty() || toks[0].starts_with('#') {
                continue;
            }
            if toks.len() != 6 {
                return Err(perr(format!("expected 6 fields, found {}", toks.len())));
            }
            let num = |t: &str| t.parse::<usize>().map_err(|_| perr(format!("bad integer `{t}`")));
            let i = num(toks[0])?;
            if i != steps.len() + 1 {
                return Err(perr(format!("expected step {}, found {i}", steps.len() + 1)));
            }
            steps.push(PruningStep {
                index: i - 1,
                vertex: num(toks[1])?,
                kind: toks[2].parse().map_err(|e: Error| perr(e.to_string()))?,
                partner: num(toks[3])?,
                layer: num(toks[4])? as u32,
                phase: toks[5].parse().map_err(|e: Error| perr(e.to_string()))?,
            });
        }
        let (y, z) = (get("y")?, get("z")?);
        if y == 0 || z == 0 {
            return Err(Error::Parse { line: 1, message: "markers are 1-based".into() });
        }
        Ok(PruningSequence {
            n: get("n")?,
            root: get("root")?,
            depth: get("depth")? as u32,
            steps,
            marker_y: y - 1,
            marker_z: z - 1,
        })
    }
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = x;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Residual graph during pruning: liveness flags, residual degrees and an
/// additive fingerprint of each open neighborhood.
struct Residual<'g> {
    g: &'g Graph,
    alive: Vec<bool>,
    deg: Vec<usize>,
    hash: Vec<u64>,
    keys: Vec<u64>,
}

impl<'g> Residual<'g> {
    fn new(g: &'g Graph) -> Self {
        let n = g.n();
        let keys: Vec<u64> = (0..n as u64).map(splitmix64).collect();
        let hash = (0..n)
            .map(|v| {
                g.neighbors(v)
                    .iter()
                    .fold(0u64, |h, &w| h.wrapping_add(keys[w]))
            })
            .collect();
        Residual {
            g,
            alive: vec![true; n],
            deg: (0..n).map(|v| g.degree(v)).collect(),
            hash,
            keys,
        }
    }

    fn remove(&mut self, x: usize) {
        self.alive[x] = false;
        for &w in self.g.neighbors(x) {
            if self.alive[w] {
                self.deg[w] -= 1;
                self.hash[w] = self.hash[w].wrapping_sub(self.keys[x]);
            }
        }
    }

    fn fingerprint(&self, v: usize, closed: bool) -> u64 {
        if closed {
            self.hash[v].wrapping_add(self.keys[v])
        } else {
            self.hash[v]
        }
    }

    fn alive_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.g.neighbors(v).iter().copied().filter(|&w| self.alive[w])
    }

    /// Twin relation of two live vertices in the residual graph.
    fn twin_kind(&self, v: usize, w: usize) -> Option<StepKind> {
        if v == w || self.deg[v] != self.deg[w] {
            return None;
        }
        let mut a = self.alive_neighbors(v).filter(|&x| x != w);
        let mut b = self.alive_neighbors(w).filter(|&x| x != v);
        loop {
            match (a.next(), b.next()) {
                (None, None) => break,
                (Some(x), Some(y)) if x == y => {}
                _ => return None,
            }
        }
        Some(if self.g.has_edge(v, w) {
            StepKind::TrueTwin
        } else {
            StepKind::FalseTwin
        })
    }

    fn sole_neighbor(&self, v: usize) -> Option<usize> {
        if self.deg[v] == 1 {
            self.alive_neighbors(v).next()
        } else {
            None
        }
    }
}

struct Builder<'g> {
    res: Residual<'g>,
    layer: Vec<u32>,
    layers: Vec<Vec<usize>>,
    remaining: Vec<usize>,
    steps: Vec<PruningStep>,
    /// Twin-phase group of each candidate, `NO_GROUP` elsewhere.
    group: Vec<usize>,
    /// Membership flags of the twin-phase worklist.
    queued: Vec<bool>,
}

const NO_GROUP: usize = usize::MAX;
const NIL: usize = usize::MAX;

impl<'g> Builder<'g> {
    fn push(&mut self, vertex: usize, kind: StepKind, partner: usize, phase: Phase) {
        let layer = self.layer[vertex];
        self.steps.push(PruningStep {
            index: self.steps.len(),
            vertex,
            kind,
            partner,
            layer,
            phase,
        });
        self.remaining[layer as usize] -= 1;
        self.res.remove(vertex);
    }

    fn alive_in(&self, k: usize) -> Vec<usize> {
        self.layers[k]
            .iter()
            .copied()
            .filter(|&v| self.res.alive[v])
            .collect()
    }

    /// Exhaustively removes twins among `cands`; two candidates may only be
    /// paired when `group` agrees. Candidates are examined smallest id first;
    /// the examined vertex is the one removed.
    /// `self.group` must be set on `cands`; it is cleared on return.
    fn twin_phase(&mut self, cands: &[usize], phase: Phase) {
        // min-heap plus membership flags behaves like an ordered set
        let mut dirty: BinaryHeap<Reverse<usize>> = cands.iter().map(|&c| Reverse(c)).collect();
        for &c in cands {
            self.queued[c] = true;
        }
        // bucket chains live in one arena: key -> (head, tail), entry -> (vertex, next)
        let mut buckets: FxHashMap<(usize, bool, u64), (usize, usize)> = FxHashMap::default();
        let mut chain: Vec<(usize, usize)> = Vec::with_capacity(2 * cands.len());
        while let Some(Reverse(v)) = dirty.pop() {
            self.queued[v] = false;
            if !self.res.alive[v] {
                continue;
            }
            let gv = self.group[v];
            let mut found = None;
            'search: for closed in [false, true] {
                let fp = self.res.fingerprint(v, closed);
                let mut at = buckets.get(&(gv, closed, fp)).map_or(NIL, |b| b.0);
                while at != NIL {
                    let (w, next) = chain[at];
                    if w != v && self.res.alive[w] && self.res.fingerprint(w, closed) == fp {
                        if let Some(kind) = self.res.twin_kind(v, w) {
                            found = Some((w, kind));
                            break 'search;
                        }
                    }
                    at = next;
                }
            }
            match found {
                Some((w, kind)) => {
                    for &u in self.res.g.neighbors(v) {
                        if self.res.alive[u] && self.group[u] != NO_GROUP && !self.queued[u] {
                            self.queued[u] = true;
                            dirty.push(Reverse(u));
                        }
                    }
                    self.push(v, kind, w, phase);
                }
                None => {
                    for closed in [false, true] {
                        let fp = self.res.fingerprint(v, closed);
                        let id = chain.len();
                        chain.push((v, NIL));
                        match buckets.entry((gv, closed, fp)) {
                            Entry::Occupied(mut e) => {
                                let tail = e.get().1;
                                chain[tail].1 = id;
                                e.get_mut().1 = id;
                            }
                            Entry::Vacant(e) => {
                                e.insert((id, id));
                            }
                        }
                    }
                }
            }
        }
        for &c in cands {
            self.group[c] = NO_GROUP;
        }
    }

    /// Removes every vertex of layer `k` that is a pendant of layer `k - 1`.
    fn pendant_phase(&mut self, k: usize, phase: Phase) {
        for v in self.alive_in(k) {
            if let Some(w) = self.res.sole_neighbor(v) {
                if self.layer[w] as usize + 1 == k {
                    self.push(v, StepKind::Pendant, w, phase);
                }
            }
        }
    }

    /// Groups the live part of layer `k` by connected component and
    /// returns it.
    fn components(&mut self, k: usize) -> Vec<usize> {
        let cands = self.alive_in(k);
        let mut stack = Vec::new();
        for &s in &cands {
            if self.group[s] != NO_GROUP {
                continue;
            }
            self.group[s] = s;
            stack.push(s);
            while let Some(u) = stack.pop() {
                for &w in self.res.g.neighbors(u) {
                    if self.res.alive[w] && self.layer[w] as usize == k && self.group[w] == NO_GROUP {
                        self.group[w] = s;
                        stack.push(w);
                    }
                }
            }
        }
        cands
    }
}

/// Builds the layered pruning sequence of `g` rooted at `root`.
///
/// Fails with [`Error::NotDistanceHereditary`] if some layer cannot be
/// emptied, and with [`Error::DisconnectedGraph`] on disconnected input.
pub fn build_pruning_sequence(g: &Graph, root: usize) -> Result<PruningSequence> {
    g.check_vertex(root)?;
    let n = g.n();
    let row = bfs(g, root);
    if !row.is_complete() {
        return Err(Error::DisconnectedGraph);
    }
    let depth = row.furthest().1;
    let mut layers = vec![Vec::new(); depth as usize + 1];
    for (v, &d) in row.dist.iter().enumerate() {
        layers[d as usize].push(v);
    }
    let remaining = layers.iter().map(Vec::len).collect();
    let mut b = Builder {
        res: Residual::new(g),
        layer: row.dist,
        layers,
        remaining,
        steps: Vec::with_capacity(n.saturating_sub(1)),
        group: vec![NO_GROUP; n],
        queued: vec![false; n],
    };

    let mut marker_z = 0;
    let (mut first_b2, mut first_d2) = (None, None);
    for k in (1..=depth as usize).rev() {
        let iteration_start = b.steps.len();
        let mut cycle = 0;
        loop {
            let before = b.steps.len();

            let cands = b.components(k);
            b.twin_phase(&cands, Phase::A);

            let b_start = b.steps.len();
            b.pendant_phase(k, Phase::B);
            if b.remaining[k] == 0 {
                if k == 2 && cycle == 0 && b.steps.len() > b_start {
                    first_b2 = Some(b_start);
                }
                break;
            }

            // twins of layer k-1 that still see layer k
            let cands: Vec<usize> = b
                .alive_in(k - 1)
                .into_iter()
                .filter(|&x| b.res.alive_neighbors(x).any(|w| b.layer[w] as usize == k))
                .collect();
            for &c in &cands {
                b.group[c] = 0;
            }
            b.twin_phase(&cands, Phase::C);

            let d_start = b.steps.len();
            b.pendant_phase(k, Phase::D);
            if k == 2 && cycle == 0 && b.steps.len() > d_start {
                first_d2 = Some(d_start);
            }
            if b.remaining[k] == 0 {
                break;
            }
            if b.steps.len() == before {
                return Err(Error::NotDistanceHereditary {
                    layer: k,
                    remaining: b.remaining[k],
                });
            }
            cycle += 1;
        }
        if k == 1 {
            marker_z = iteration_start;
        }
    }

    let steps = b.steps;
    let mut marker_y = first_d2.or(first_b2).unwrap_or(marker_z);
    // Everything in [y, z) must be a layer-2 pendant; a repeated cycle of
    // iteration 2 could leave other removals behind the first (d) pendant.
    if let Some(i) = (marker_y..marker_z)
        .rev()
        .find(|&i| steps[i].kind != StepKind::Pendant || steps[i].layer != 2)
    {
        marker_y = i + 1;
    }
    Ok(PruningSequence {
        n,
        root,
        depth,
        steps,
        marker_y,
        marker_z,
    })
}

/// Recognizes distance-hereditary graphs by pruning from vertex 0.
pub fn is_distance_hereditary(g: &Graph) -> Result<bool> {
    if g.n() == 0 {
        return Err(Error::BadParameter("empty graph".into()));
    }
    match build_pruning_sequence(g, 0) {
        Ok(_) => Ok(true),
        Err(Error::NotDistanceHereditary { .. }) => Ok(false),
        Err(e) => Err(e),
    }
}

/// A vertex of minimum eccentricity.
///
/// Starts from a mutually distant pair, whose distances bound every
/// eccentricity from below, and runs BFS from the candidate with the
/// smallest current lower bound. Each BFS from `c` raises the lower bounds
/// of all `v` to `max(d(c, v), e(c) - d(c, v))`. The search stops once no
/// remaining lower bound is below the best eccentricity seen, so the answer
/// is exact on every connected graph; the pair bounds of the DH case only
/// order the candidates.
pub fn find_central_vertex(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n == 0 {
        return Err(Error::BadParameter("empty graph".into()));
    }
    if n == 1 {
        return Ok(0);
    }
    g.require_connected()?;
    let pair = extremal::mutually_distant_pair(g, 0)?;
    let bounds = extremal::ecc_bounds_from_pair(g, &pair);
    let mut lower = bounds.lower.clone();
    let hint = bounds.upper;

    let mut heap: BinaryHeap<Reverse<(u32, u32, usize)>> =
        (0..n).map(|v| Reverse((lower[v], hint[v], v))).collect();
    let mut done = vec![false; n];
    let mut best: Option<(u32, usize)> = None;
    while let Some(Reverse((lb, h, v))) = heap.pop() {
        if done[v] {
            continue;
        }
        if lb != lower[v] {
            heap.push(Reverse((lower[v], h, v)));
            continue;
        }
        if best.is_some_and(|(e, _)| lb >= e) {
            break;
        }
        done[v] = true;
        let row = bfs(g, v);
        let e = row.eccentricity().ok_or(Error::DisconnectedGraph)?;
        if best.map_or(true, |(be, _)| e < be) {
            best = Some((e, v));
        }
        for (u, &d) in row.dist.iter().enumerate() {
            let cand = d.max(e - d.min(e));
            if cand > lower[u] {
                lower[u] = cand;
            }
        }
    }
    Ok(best.expect("at least one BFS ran").1)
}

impl fmt::Display for PruningSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{build_named, random_dh, Fig5Labels, KindWeights, NamedGraph};
    use crate::graph::all_pairs_ecc_oracle;

    fn named(name: NamedGraph) -> Graph {
        build_named(name).unwrap()
    }

    #[test]
    fn path3_from_middle() {
        let g = named(NamedGraph::Path { k: 3 });
        let seq = build_pruning_sequence(&g, 1).unwrap();
        assert_eq!(seq.steps.len(), 2);
        assert!(seq.steps.iter().all(|s| s.kind == StepKind::Pendant && s.partner == 1));
        assert_eq!(seq.root, 1);
        assert_eq!((seq.marker_y, seq.marker_z), (0, 0));
    }

    #[test]
    fn singleton() {
        let seq = build_pruning_sequence(&Graph::empty(1), 0).unwrap();
        assert!(seq.steps.is_empty());
        assert_eq!((seq.marker_y, seq.marker_z), (0, 0));
        assert_eq!(seq.replay(), Graph::empty(1));
    }

    #[test]
    fn forbidden_graphs_are_rejected() {
        for name in [
            NamedGraph::House,
            NamedGraph::Gem,
            NamedGraph::Domino,
            NamedGraph::Cycle { k: 5 },
            NamedGraph::Cycle { k: 9 },
        ] {
            let g = named(name);
            assert!(!is_distance_hereditary(&g).unwrap(), "{name}");
            for r in 0..g.n() {
                assert!(matches!(
                    build_pruning_sequence(&g, r),
                    Err(Error::NotDistanceHereditary { .. })
                ));
            }
        }
    }

    #[test]
    fn fig5_is_dh() {
        assert!(is_distance_hereditary(&named(NamedGraph::Fig5 { l: 4 })).unwrap());
    }

    #[test]
    fn disconnected_is_an_error() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(is_distance_hereditary(&g), Err(Error::DisconnectedGraph));
        assert_eq!(find_central_vertex(&g), Err(Error::DisconnectedGraph));
    }

    #[test]
    fn central_vertices() {
        assert_eq!(find_central_vertex(&named(NamedGraph::Path { k: 5 })).unwrap(), 2);
        let lab = Fig5Labels { l: 3 };
        let c = find_central_vertex(&named(NamedGraph::Fig5 { l: 3 })).unwrap();
        assert!(lab.center().contains(&c));
    }

    #[test]
    fn random_sequences_validate_and_replay() {
        for seed in 0..40 {
            let (g, _) = random_dh(1 + (seed as usize * 7) % 120, seed, KindWeights::default()).unwrap();
            let root = find_central_vertex(&g).unwrap();
            let t = all_pairs_ecc_oracle(&g).unwrap();
            assert_eq!(t.ecc[root], t.rad);
            let seq = build_pruning_sequence(&g, root).unwrap();
            assert_eq!(seq.steps.len() + 1, g.n());
            seq.validate(&g).unwrap();
            assert_eq!(seq.replay(), g);
            assert!(seq.marker_y <= seq.marker_z && seq.marker_z < g.n());
            // twin partners share the layer, pendant partners sit one above
            for s in &seq.steps {
                let pl = if s.partner == root { 0 } else {
                    seq.steps.iter().find(|t| t.vertex == s.partner).unwrap().layer
                };
                match (s.kind, s.phase) {
                    (StepKind::Pendant, _) => assert_eq!(pl + 1, s.layer),
                    (_, Phase::A | Phase::C) => assert_eq!(pl, s.layer),
                    _ => panic!("twin removed in a pendant phase"),
                }
            }
        }
    }

    #[test]
    fn text_round_trip() {
        let (g, _) = random_dh(60, 5, KindWeights::default()).unwrap();
        let seq = build_pruning_sequence(&g, find_central_vertex(&g).unwrap()).unwrap();
        let back = PruningSequence::from_text(&seq.to_text()).unwrap();
        assert_eq!(back, seq);
        assert!(PruningSequence::from_text("1 2 pendant 0 1 b").is_err());
    }
}
