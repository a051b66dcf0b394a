//! Lower and upper eccentricity certificates.
//!
//! For a vertex set `L`, `e_L(v) = max_{x in L} d(v, x)` never exceeds
//! `e(v)`; for a set `U` with known eccentricities,
//! `e^U(v) = min_{x in U} d(v, x) + e(x)` never falls below it.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::center::AuditOutcome;
use crate::error::{Error, Result};
use crate::graph::{all_pairs_ecc_oracle, bfs, DistanceMatrix, EccTable, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertificateKind {
    Radius,
    Diameter,
    TightUpper,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateReport {
    pub kind: CertificateKind,
    pub cert_set: Vec<usize>,
    /// `e_L` for radius certificates, `e^U` otherwise.
    pub values: Vec<u32>,
    pub pass: bool,
    /// First vertex where the certificate fails.
    pub witness: Option<usize>,
}

fn check_set(g: &Graph, set: &[usize]) -> Result<()> {
    if set.is_empty() {
        return Err(Error::EmptyCertificate);
    }
    for &v in set {
        g.check_vertex(v)?;
    }
    Ok(())
}

/// Folds one BFS row per set member into a per-vertex value.
fn fold_rows<F>(g: &Graph, set: &[usize], init: u32, merge: F) -> Result<Vec<u32>>
where
    F: Fn(u32, u32, usize) -> u32 + Sync,
{
    check_set(g, set)?;
    let n = g.n();
    set.par_iter()
        .map(|&s| {
            let row = bfs(g, s);
            if row.is_complete() {
                Ok((s, row.dist))
            } else {
                Err(Error::DisconnectedGraph)
            }
        })
        .try_fold(
            || vec![init; n],
            |mut acc, item| {
                let (s, dist) = item?;
                for (a, d) in acc.iter_mut().zip(dist) {
                    *a = merge(*a, d, s);
                }
                Ok(acc)
            },
        )
        .try_reduce(
            || vec![init; n],
            |a, b| Ok(a.into_iter().zip(b).map(|(x, y)| merge(x, y, usize::MAX)).collect()),
        )
}

/// `e_L(v)` for every `v`.
pub fn eval_lower(g: &Graph, set: &[usize]) -> Result<Vec<u32>> {
    fold_rows(g, set, 0, |a, d, _| a.max(d))
}

/// `e^U(v)` for every `v`; `ecc` holds exact eccentricities indexed by
/// vertex (only entries of `set` are read).
pub fn eval_upper(g: &Graph, set: &[usize], ecc: &[u32]) -> Result<Vec<u32>> {
    // when reducing partial results `s` is a sentinel and `d` is already a sum
    fold_rows(g, set, u32::MAX, |a, d, s| {
        if s == usize::MAX {
            a.min(d)
        } else {
            a.min(d + ecc[s])
        }
    })
}

fn report(kind: CertificateKind, set: &[usize], values: Vec<u32>, bad: impl Fn(usize, u32) -> bool) -> CertificateReport {
    let witness = values.iter().enumerate().find(|&(v, &x)| bad(v, x)).map(|(v, _)| v);
    let mut cert_set = set.to_vec();
    cert_set.sort_unstable();
    cert_set.dedup();
    CertificateReport {
        kind,
        cert_set,
        values,
        pass: witness.is_none(),
        witness,
    }
}

/// Passes iff `e_L(v) >= rad` for every `v`.
pub fn verify_radius_certificate(g: &Graph, set: &[usize], t: &EccTable) -> Result<CertificateReport> {
    let values = eval_lower(g, set)?;
    Ok(report(CertificateKind::Radius, set, values, |_, x| x < t.rad))
}

/// Passes iff `e^U(v) <= diam` for every `v`.
pub fn verify_diameter_certificate(g: &Graph, set: &[usize], t: &EccTable) -> Result<CertificateReport> {
    let values = eval_upper(g, set, &t.ecc)?;
    Ok(report(CertificateKind::Diameter, set, values, |_, x| x > t.diam))
}

/// Passes iff `e^U(v) = e(v)` for every `v`.
pub fn verify_tight_upper(g: &Graph, set: &[usize], t: &EccTable) -> Result<CertificateReport> {
    let values = eval_upper(g, set, &t.ecc)?;
    Ok(report(CertificateKind::TightUpper, set, values, |v, x| x != t.ecc[v]))
}

/// For every `v` and `u` in `F(v)`: if `v` is not central some `w` in
/// `I(v, u)` with `e(w) <= rad + 1` has `u` in `F(w)`; if `diam < 2 rad`
/// such a `w` exists already in `C(G)`, for every `v`.
pub fn furthest_path_audit(t: &EccTable, dm: &DistanceMatrix) -> AuditOutcome {
    let n = dm.n();
    let mut out = AuditOutcome::default();
    let strict = t.diam < 2 * t.rad;
    for v in 0..n {
        let e = t.ecc[v];
        let central = e == t.rad;
        if central && !strict {
            continue;
        }
        for u in (0..n).filter(|&u| dm.get(v, u) == e) {
            let on_path = |w: usize| dm.get(v, w) + dm.get(w, u) == e && dm.get(w, u) == t.ecc[w];
            if !central {
                let ok = (0..n).any(|w| t.ecc[w] <= t.rad + 1 && on_path(w));
                out.expect(ok, || format!("v={v}, u={u}: no w in I(v,u) and C1 with u furthest"));
            }
            if strict {
                let ok = (0..n).any(|w| t.ecc[w] == t.rad && on_path(w));
                out.expect(ok, || format!("v={v}, u={u}: no w in I(v,u) and C with u furthest"));
            }
        }
    }
    out
}

/// A graph on which the diametral set is not a radius certificate and the
/// center is not a diameter certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualFailure {
    #[serde(skip)]
    pub graph: Graph,
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub rad: u32,
    pub diam: u32,
    /// Vertex minimizing `e_D`, with that value (below `rad`).
    pub radius_witness: (usize, u32),
    /// Vertex maximizing `e^C`, with that value (above `diam`).
    pub diameter_witness: (usize, u32),
    pub attempts: usize,
}

impl DualFailure {
    /// `(diam, rad, min e_D, max e^C)`.
    pub fn signature(&self) -> (u32, u32, u32, u32) {
        (self.diam, self.rad, self.radius_witness.1, self.diameter_witness.1)
    }
}

fn arg_by(values: &[u32], better: impl Fn(u32, u32) -> bool) -> (usize, u32) {
    let mut best = (0, values[0]);
    for (v, &x) in values.iter().enumerate() {
        if better(x, best.1) {
            best = (v, x);
        }
    }
    best
}

/// Seeded search over random connected graphs with `min_n..=max_n`
/// vertices for a [`DualFailure`]. Each candidate is a random spanning tree
/// plus sparse random edges. With `want` set, only instances whose
/// [`DualFailure::signature`] equals it are accepted.
pub fn search_dual_failure(
    seed: u64,
    min_n: usize,
    max_n: usize,
    attempts: usize,
    want: Option<(u32, u32, u32, u32)>,
) -> Option<DualFailure> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 1..=attempts {
        let n = rng.gen_range(min_n..=max_n);
        // sparse graphs have large radius, which the interesting cases need
        let p = rng.gen_range(1.2..2.6) / n as f64;
        let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen::<f64>() < p && !edges.contains(&(u, v)) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, edges).expect("simple by construction");
        let t = all_pairs_ecc_oracle(&g).expect("spanning tree keeps it connected");
        if want.is_some_and(|w| (w.0, w.1) != (t.diam, t.rad)) {
            continue;
        }
        let r = verify_radius_certificate(&g, &t.diametral, &t).expect("nonempty");
        let d = verify_diameter_certificate(&g, &t.center, &t).expect("nonempty");
        if r.pass || d.pass {
            continue;
        }
        let found = DualFailure {
            n,
            edges: g.edges().collect(),
            graph: g,
            rad: t.rad,
            diam: t.diam,
            radius_witness: arg_by(&r.values, |a, b| a < b),
            diameter_witness: arg_by(&d.values, |a, b| a > b),
            attempts: attempt,
        };
        if want.map_or(true, |w| w == found.signature()) {
            return Some(found);
        }
    }
    None
}
