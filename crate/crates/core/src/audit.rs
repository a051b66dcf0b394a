//! Full invariant sweep over one graph or a corpus.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::builders::CorpusInstance;
use crate::center::{
    self, center_distance_audit, classify_center_with, gap_lemma_audit, helly_audit, unimodality_audit,
    AuditOutcome, CenterClass, UnimodalityBreak,
};
use crate::certificates::{furthest_path_audit, verify_diameter_certificate, verify_radius_certificate, verify_tight_upper};
use crate::ecc_exact::{forward_weight_pass, run_shadow, run_with_root};
use crate::error::Result;
use crate::extremal::{duality_from_rows, ecc_bounds_from_pair, mutually_distant_pair};
use crate::graph::{
    all_pairs_ecc_oracle, bfs, four_point_check, layering_check, slices_joined_from_rows, DistanceMatrix, Graph,
};
use crate::pruning::{build_pruning_sequence, is_distance_hereditary};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub checked: usize,
    pub violations: Vec<String>,
}

impl Check {
    fn new(name: &'static str, o: AuditOutcome) -> Self {
        Check {
            name,
            checked: o.checked,
            violations: o.violations,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AuditOptions {
    /// Random `(x, y)` pairs per graph for the joined-slices check.
    pub slice_pairs: usize,
    pub helly_samples: usize,
    /// Also replay the backward phases against brute force.
    pub shadow: bool,
    /// Exhaustive 4-point check up to this many vertices.
    pub four_point_max_n: usize,
    pub seed: u64,
}

impl Default for AuditOptions {
    fn default() -> Self {
        AuditOptions {
            slice_pairs: 20,
            helly_samples: 20,
            shadow: false,
            four_point_max_n: 30,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InstanceAudit {
    pub index: usize,
    pub seed: Option<u64>,
    pub n: usize,
    pub m: usize,
    pub rad: u32,
    pub diam: u32,
    pub sweeps: usize,
    pub classification: CenterClass,
    pub unimodality_breaks: Vec<UnimodalityBreak>,
    pub checks: Vec<Check>,
}

impl InstanceAudit {
    pub fn violation_count(&self) -> usize {
        self.checks.iter().map(|c| c.violations.len()).sum()
    }

    pub fn passed(&self) -> bool {
        self.violation_count() == 0
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Runs every invariant on a connected DH graph. Needs all-pairs distances,
/// so it is meant for graphs of a few thousand vertices at most.
pub fn audit_graph(g: &Graph, index: usize, seed: Option<u64>, opts: &AuditOptions) -> Result<InstanceAudit> {
    let n = g.n();
    let oracle = all_pairs_ecc_oracle(g)?;
    let dm = DistanceMatrix::new(g);
    let t = &oracle;
    let mut checks = Vec::new();

    // recognition and the pruning sequence
    let mut o = AuditOutcome::default();
    o.expect(is_distance_hereditary(g)?, || "pruning recognition rejects the graph".into());
    let run = run_with_root(g, None)?;
    o.expect(t.ecc[run.root] == t.rad, || format!("root {} is not central", run.root));
    let seq = build_pruning_sequence(g, run.root)?;
    o.expect(seq.validate(g).is_ok(), || "pruning steps are not valid residual eliminations".into());
    o.expect(seq.replay() == *g, || "replaying the sequence does not rebuild the graph".into());
    if n <= opts.four_point_max_n {
        o.expect(four_point_check(&dm).holds, || "4-point condition fails".into());
    }
    let roots: Vec<usize> = if n <= 200 { (0..n).collect() } else { vec![0, run.root] };
    for r in roots {
        o.expect(layering_check(g, r)?.holds, || format!("layering fails from root {r}"));
    }
    checks.push(Check::new("recognition", o));

    let mut o = AuditOutcome::default();
    o.expect(run.table == oracle, || "pruning-based eccentricities differ from the oracle".into());
    let fp = forward_weight_pass(g, &seq)?;
    let layer = bfs(g, run.root).dist;
    for v in 0..n {
        o.expect(fp.p_z[v] + layer[v] <= t.rad, || {
            format!("weight {} of {v} exceeds rad - layer = {}", fp.p_z[v], t.rad - layer[v])
        });
    }
    checks.push(Check::new("exact-eccentricities", o));

    if opts.shadow {
        let (_, rep) = run_shadow(g, None)?;
        checks.push(Check {
            name: "shadow",
            checked: rep.checks,
            violations: rep.mismatches.iter().map(|m| format!("{m:?}")).collect(),
        });
    }

    // bounds from a mutually distant pair
    let pair = mutually_distant_pair(g, 0)?;
    let mut bounds = ecc_bounds_from_pair(g, &pair);
    let mut o = AuditOutcome::default();
    o.expect(pair.sweeps <= 5, || format!("pair search used {} sweeps", pair.sweeps));
    let first = pair.trace[1];
    o.expect(t.ecc[first] + 2 >= t.diam, || format!("first furthest vertex {first} has e < diam - 2"));
    bounds.tighten_with_center(&t.center);
    for v in 0..n {
        let (lo, hi, e) = (bounds.lower[v], bounds.upper[v], t.ecc[v]);
        o.expect(lo <= e && e <= hi && hi - lo <= 2, || format!("v={v}: e={e} outside [{lo}, {hi}]"));
        let (a, b) = (dm.get(pair.x, v), dm.get(pair.y, v));
        if a.abs_diff(b) >= 2 {
            o.expect(e == a.max(b), || format!("v={v}: |a-b|>=2 but e={e} != {}", a.max(b)));
        }
    }
    checks.push(Check::new("bounds", o));

    let mut o = AuditOutcome::default();
    let (dx, dy) = (dm.row(pair.x), dm.row(pair.y));
    for u in 0..n {
        let du = bfs(g, u);
        let rep = duality_from_rows(&pair, dx, dy, &du);
        o.checked += 1;
        o.violations.extend(rep.violations);
        for &v in &rep.furthest {
            o.expect(t.ecc[v] + 2 >= t.diam, || format!("{v} furthest from {u} has e < diam - 2"));
            o.expect(t.ecc[v] + 3 >= 2 * t.rad, || format!("{v} furthest from {u} has e < 2rad - 3"));
        }
    }
    checks.push(Check::new("duality", o));

    // structural inequalities
    let mut o = AuditOutcome::default();
    o.expect(t.diam + 2 >= 2 * t.rad, || "diam < 2rad - 2".into());
    for (u, v) in g.edges() {
        o.expect(t.ecc[u].abs_diff(t.ecc[v]) <= 1, || format!("edge {u}{v}: eccentricities differ by > 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ index as u64);
    for _ in 0..opts.slice_pairs {
        let (x, y) = (rng.gen_range(0..n), rng.gen_range(0..n));
        o.expect(slices_joined_from_rows(g, dm.row(x), dm.row(y), dm.get(x, y)), || {
            format!("slices of I({x},{y}) are not joined")
        });
    }
    checks.push(Check::new("structure", o));

    let mut o = AuditOutcome::default();
    let r = verify_radius_certificate(g, &t.diametral, t)?;
    o.expect(r.pass, || format!("D(G) is not a radius certificate, witness {:?}", r.witness));
    let d = verify_diameter_certificate(g, &t.center, t)?;
    o.expect(d.pass, || format!("C(G) is not a diameter certificate, witness {:?}", d.witness));
    let c1 = verify_tight_upper(g, &t.within(1), t)?;
    o.expect(c1.pass, || format!("C1(G) is not a tight upper certificate, witness {:?}", c1.witness));
    checks.push(Check::new("certificates", o));
    checks.push(Check::new("furthest-path", furthest_path_audit(t, &dm)));

    let class = classify_center_with(g, t);
    let mut o = AuditOutcome::default();
    o.expect(class.classification != CenterClass::Invalid, || {
        format!("center fits neither shape: {:?}", class.witness)
    });
    if class.classification == CenterClass::Cograph {
        let (h, _) = g.induced_subgraph(&t.center);
        o.expect(center::is_cograph(&h), || "cograph branch but the center has a P4".into());
    }
    checks.push(Check::new("center-class", o));

    let uni = unimodality_audit(g, t);
    checks.push(Check {
        name: "unimodality",
        checked: n,
        violations: uni.violations.iter().map(|b| format!("{b:?}")).collect(),
    });
    checks.push(Check::new("center-distance", center_distance_audit(g, t, &dm)));
    checks.push(Check::new("gap-lemmas", gap_lemma_audit(g, t, &dm)));
    checks.push(Check::new(
        "helly",
        helly_audit(g, t, &dm, opts.helly_samples, opts.seed ^ index as u64),
    ));

    Ok(InstanceAudit {
        index,
        seed,
        n,
        m: g.m(),
        rad: t.rad,
        diam: t.diam,
        sweeps: pair.sweeps,
        classification: class.classification,
        unimodality_breaks: uni.breaks,
        checks,
    })
}

/// Audits every instance in parallel; results keep corpus order.
pub fn audit_corpus(corpus: &[CorpusInstance], opts: &AuditOptions) -> Result<Vec<InstanceAudit>> {
    corpus
        .par_iter()
        .map(|c| audit_graph(&c.graph, c.index, Some(c.seed), opts))
        .collect()
}
