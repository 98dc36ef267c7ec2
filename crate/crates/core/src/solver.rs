//! Exact computation of range(G) by forward reachability over
//! (cop position, survivor set) states.
//!
//! Because the cop receives no information during play, the set of patrols
//! equals the set of deterministic cop strategies, so "some patrol wins"
//! reduces to plain reachability: no game-tree alternation is needed. The
//! robber side is folded into the survivor set — the set of vertices an
//! omniscient robber could still occupy after the patrol prefix played so
//! far.
//!
//! Move order is pinned as follows. The cop picks a start c0; the robber
//! then places on any vertex at distance greater than rho (if none exists
//! the cop wins at placement); thereafter the cop moves first and the
//! robber second, either may stay, and capture is checked exactly after
//! each cop move. From state (c, S), a cop move to c' in N[c] leaves
//! A = S \ B_rho(c') survivable robber positions; A empty is a capture,
//! otherwise the robber steps and the successor is (c', N[A] \ B_rho(c')).

use std::collections::HashSet;
use std::hash::Hash;
use std::time::Instant;

use indexmap::IndexMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, Radius, Walk};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone)]
pub struct SolverConfig {
    /// Transition-evaluation budget; exceeding it aborts the solve with an
    /// "undecided at budget" error, never a guessed outcome.
    pub budget: u64,
    /// Skip a new state (c, S) when some recorded (c, T) has T a subset of
    /// S. Outcome-preserving (see `solve_with`), but the visited table is
    /// no longer transition-closed, so loss certificates are not collected
    /// and witnesses may be longer than the BFS-shortest ones.
    pub prune_dominated: bool,
    /// Collect the full reachable state set as a machine-checkable
    /// cop-loss certificate.
    pub collect_certificate: bool,
}

pub const DEFAULT_BUDGET: u64 = 200_000_000;

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            budget: DEFAULT_BUDGET,
            prune_dominated: false,
            collect_certificate: true,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    #[serde(rename = "win")]
    CopWin,
    #[serde(rename = "loss")]
    CopLoss,
}

#[derive(Debug, Clone, Default)]
pub struct SolveStats {
    pub states: u64,
    pub transitions: u64,
    pub millis: u128,
}

/// Closed set of reachable states proving that no patrol wins at this rho.
#[derive(Debug, Clone)]
pub struct Certificate {
    pub rho: Radius,
    pub states: Vec<(usize, VertexSet)>,
}

#[derive(Debug, Clone)]
pub struct SolveResult {
    pub rho: Radius,
    pub outcome: Outcome,
    /// Winning patrol; present exactly on cop-win.
    pub witness: Option<Walk>,
    /// Present on cop-loss when certificate collection is enabled.
    pub certificate: Option<Certificate>,
    pub stats: SolveStats,
}

impl SolveResult {
    /// The JSON shape used by result files; timing is included here and
    /// split out by the CLI writer.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "rho": self.rho.0,
            "outcome": self.outcome,
            "witness": self.witness.as_ref().map(|w| w.0.clone()),
            "certificate_size": self.certificate.as_ref().map_or(0, |c| c.states.len()),
            "states": self.stats.states,
            "millis": self.stats.millis,
        })
    }
}

/// Survivor-set storage used by the search. Graphs with at most 64
/// vertices run on bare u64 words; larger ones fall back to boxed slices.
trait Bits: Clone + Eq + Hash {
    fn from_set(s: &VertexSet) -> Self;
    fn to_set(&self, n: usize) -> VertexSet;
    fn is_empty(&self) -> bool;
    fn minus(&self, other: &Self) -> Self;
    fn is_subset_of(&self, other: &Self) -> bool;
    /// N[self] \ excluded with adjacency rows in the same representation.
    fn closed_nbhd_minus(&self, adj: &[Self], excluded: &Self) -> Self;
}

impl Bits for u64 {
    fn from_set(s: &VertexSet) -> Self {
        s.words()[0]
    }

    fn to_set(&self, n: usize) -> VertexSet {
        VertexSet::from_indices(n, (0..n).filter(|&v| self & (1 << v) != 0))
    }

    fn is_empty(&self) -> bool {
        *self == 0
    }

    fn minus(&self, other: &Self) -> Self {
        self & !other
    }

    fn is_subset_of(&self, other: &Self) -> bool {
        self & !other == 0
    }

    fn closed_nbhd_minus(&self, adj: &[Self], excluded: &Self) -> Self {
        let mut out = *self;
        let mut bits = *self;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            out |= adj[v];
        }
        out & !excluded
    }
}

impl Bits for Box<[u64]> {
    fn from_set(s: &VertexSet) -> Self {
        s.words().to_vec().into_boxed_slice()
    }

    fn to_set(&self, n: usize) -> VertexSet {
        VertexSet::from_indices(
            n,
            (0..n).filter(|&v| self[v / 64] & (1 << (v % 64)) != 0),
        )
    }

    fn is_empty(&self) -> bool {
        self.iter().all(|&w| w == 0)
    }

    fn minus(&self, other: &Self) -> Self {
        self.iter()
            .zip(other.iter())
            .map(|(a, b)| a & !b)
            .collect()
    }

    fn is_subset_of(&self, other: &Self) -> bool {
        self.iter().zip(other.iter()).all(|(a, b)| a & !b == 0)
    }

    fn closed_nbhd_minus(&self, adj: &[Self], excluded: &Self) -> Self {
        let mut out = self.clone();
        for (wi, &w) in self.iter().enumerate() {
            let mut bits = w;
            while bits != 0 {
                let v = wi * 64 + bits.trailing_zeros() as usize;
                bits &= bits - 1;
                for (o, a) in out.iter_mut().zip(adj[v].iter()) {
                    *o |= a;
                }
            }
        }
        for (o, e) in out.iter_mut().zip(excluded.iter()) {
            *o &= !e;
        }
        out
    }
}

/// Decides whether some patrol captures at radius rho, with a winning
/// patrol on success and (by default) a closed reachable-state certificate
/// on failure.
pub fn cop_wins(g: &Graph, rho: Radius, cfg: &SolverConfig) -> Result<SolveResult> {
    let start = Instant::now();
    if g.n() <= 64 {
        solve_with::<u64>(g, rho, cfg, start)
    } else {
        solve_with::<Box<[u64]>>(g, rho, cfg, start)
    }
}

fn solve_with<B: Bits>(g: &Graph, rho: Radius, cfg: &SolverConfig, start: Instant) -> Result<SolveResult> {
    let n = g.n();
    let balls: Vec<B> = (0..n).map(|v| B::from_set(&g.ball(v, rho))).collect();
    let adj: Vec<B> = (0..n).map(|v| B::from_set(g.adjacency(v))).collect();
    let full = B::from_set(&VertexSet::full(n));
    let closed_nbrs: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            let mut ns = g.neighbors(v).to_vec();
            ns.push(v);
            ns.sort_unstable();
            ns
        })
        .collect();

    // Placement wins first: the smallest start whose ball covers everything.
    for c0 in 0..n {
        if full.minus(&balls[c0]).is_empty() {
            return Ok(SolveResult {
                rho,
                outcome: Outcome::CopWin,
                witness: Some(Walk(vec![c0])),
                certificate: None,
                stats: SolveStats {
                    states: 0,
                    transitions: 0,
                    millis: start.elapsed().as_millis(),
                },
            });
        }
    }

    // Insertion order doubles as the BFS queue, so witnesses are the
    // breadth-first shortest ones under a fixed vertex order.
    let mut states: IndexMap<(u32, B), u32> = IndexMap::new();
    for c0 in 0..n {
        states.insert((c0 as u32, full.minus(&balls[c0])), u32::MAX);
    }
    let mut dominated: Vec<Vec<B>> = if cfg.prune_dominated {
        let mut d: Vec<Vec<B>> = vec![Vec::new(); n];
        for ((c, s), _) in states.iter() {
            d[*c as usize].push(s.clone());
        }
        d
    } else {
        Vec::new()
    };

    let mut transitions: u64 = 0;
    let mut cursor = 0usize;
    while cursor < states.len() {
        let (c, survivors) = {
            let (key, _) = states.get_index(cursor).expect("cursor in range");
            (key.0 as usize, key.1.clone())
        };
        for &c2 in &closed_nbrs[c] {
            transitions += 1;
            if transitions > cfg.budget {
                return Err(Error::Budget(transitions));
            }
            let after_move = survivors.minus(&balls[c2]);
            if after_move.is_empty() {
                let mut patrol = reconstruct(&states, cursor);
                patrol.push(c2);
                return Ok(SolveResult {
                    rho,
                    outcome: Outcome::CopWin,
                    witness: Some(Walk(patrol)),
                    certificate: None,
                    stats: SolveStats {
                        states: states.len() as u64,
                        transitions,
                        millis: start.elapsed().as_millis(),
                    },
                });
            }
            let next = after_move.closed_nbhd_minus(&adj, &balls[c2]);
            if cfg.prune_dominated {
                // Sound for the outcome: emptying a superset empties every
                // subset along the same cop moves, so any win reachable
                // from the pruned state is reachable from the kept one.
                if dominated[c2].iter().any(|t| t.is_subset_of(&next)) {
                    continue;
                }
                if !states.contains_key(&(c2 as u32, next.clone())) {
                    dominated[c2].push(next.clone());
                }
            }
            states.entry((c2 as u32, next)).or_insert(cursor as u32);
        }
        cursor += 1;
    }

    let certificate = (cfg.collect_certificate && !cfg.prune_dominated).then(|| Certificate {
        rho,
        states: states
            .keys()
            .map(|(c, s)| (*c as usize, s.to_set(n)))
            .collect(),
    });
    Ok(SolveResult {
        rho,
        outcome: Outcome::CopLoss,
        witness: None,
        certificate,
        stats: SolveStats {
            states: states.len() as u64,
            transitions,
            millis: start.elapsed().as_millis(),
        },
    })
}

fn reconstruct<B: Bits>(states: &IndexMap<(u32, B), u32>, mut idx: usize) -> Vec<usize> {
    let mut cops = Vec::new();
    loop {
        let ((c, _), parent) = states.get_index(idx).expect("valid index");
        cops.push(*c as usize);
        if *parent == u32::MAX {
            break;
        }
        idx = *parent as usize;
    }
    cops.reverse();
    cops
}

#[derive(Debug, Clone)]
pub struct RangeResult {
    pub range: Radius,
    /// One solve per tested rho, ascending; the last entry is the win.
    pub runs: Vec<SolveResult>,
}

/// Least rho with a winning patrol, by ascending scan from 0. Win at some
/// rho implies win at rho+1 (the same patrol works with a bigger ball), so
/// the first win is minimal; the scan also yields the loss certificate at
/// rho-1 for free.
pub fn range_of(g: &Graph, cfg: &SolverConfig) -> Result<RangeResult> {
    let mut runs = Vec::new();
    for rho in 0..=g.radius() {
        let res = cop_wins(g, Radius(rho), cfg)?;
        let won = res.outcome == Outcome::CopWin;
        runs.push(res);
        if won {
            return Ok(RangeResult {
                range: Radius(rho),
                runs,
            });
        }
    }
    unreachable!("a center vertex wins at placement when rho equals the graph radius")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BestResponse {
    /// First patrol index whose cop move leaves the robber no survivable
    /// position (index 0 means no safe placement exists).
    Capture { time: usize },
    /// A robber walk of the same length as the patrol that stays at
    /// distance greater than rho at every half-step.
    Evasion { walk: Walk },
}

/// Optimal play of the omniscient robber against a fixed patrol, by
/// time-expanded survivor propagation with backward walk reconstruction.
pub fn best_response(g: &Graph, patrol: &Walk, rho: Radius) -> Result<BestResponse> {
    if !patrol.is_valid_on(g) {
        return Err(Error::input("patrol is not a valid walk"));
    }
    let n = g.n();
    let balls: Vec<VertexSet> = (0..n).map(|v| g.ball(v, rho)).collect();
    let mut survivors: Vec<VertexSet> = Vec::with_capacity(patrol.len());
    let first = VertexSet::full(n).difference(&balls[patrol.0[0]]);
    if first.is_empty() {
        return Ok(BestResponse::Capture { time: 0 });
    }
    survivors.push(first);
    for (t, &c) in patrol.0.iter().enumerate().skip(1) {
        let after_move = survivors[t - 1].difference(&balls[c]);
        if after_move.is_empty() {
            return Ok(BestResponse::Capture { time: t });
        }
        survivors.push(g.closed_neighborhood(&after_move).difference(&balls[c]));
    }

    // Trace one evasion backwards through the survivor sets.
    let last = patrol.len() - 1;
    let mut walk = vec![0usize; patrol.len()];
    walk[last] = survivors[last].min().expect("nonempty survivor set");
    for t in (0..last).rev() {
        let stayed = survivors[t].difference(&balls[patrol.0[t + 1]]);
        walk[t] = stayed
            .iter()
            .find(|&v| g.dist(v, walk[t + 1]) <= 1)
            .expect("survivor sets are closed-neighborhood reachable");
    }
    Ok(BestResponse::Evasion { walk: Walk(walk) })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertificateViolation {
    EmptyCertificate,
    /// Some start vertex covers everything at placement, so the cop wins
    /// immediately and no loss certificate can exist.
    ImmediateCaptureStart { start: usize },
    MissingInitialState { start: usize },
    /// A cop move from a certificate state captures (empty survivor set).
    CaptureTransition { state: usize, cop_move: usize },
    /// A successor of a certificate state is missing from the set.
    MissingSuccessor { state: usize, cop_move: usize },
}

impl std::fmt::Display for CertificateViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CertificateViolation::EmptyCertificate => write!(f, "certificate is empty"),
            CertificateViolation::ImmediateCaptureStart { start } => {
                write!(f, "start {start} captures at placement")
            }
            CertificateViolation::MissingInitialState { start } => {
                write!(f, "initial state for start {start} missing")
            }
            CertificateViolation::CaptureTransition { state, cop_move } => {
                write!(f, "state {state} is captured by cop move to {cop_move}")
            }
            CertificateViolation::MissingSuccessor { state, cop_move } => {
                write!(f, "successor of state {state} under cop move to {cop_move} missing")
            }
        }
    }
}

/// Checks that a state set certifies cop-loss at rho: it contains every
/// initial state, and every cop move from a member survives into another
/// member. A valid certificate proves no patrol whatsoever wins.
pub fn verify_certificate(
    g: &Graph,
    rho: Radius,
    cert: &Certificate,
) -> std::result::Result<(), CertificateViolation> {
    if cert.states.is_empty() {
        return Err(CertificateViolation::EmptyCertificate);
    }
    let n = g.n();
    let balls: Vec<VertexSet> = (0..n).map(|v| g.ball(v, rho)).collect();
    let members: HashSet<(usize, &VertexSet)> =
        cert.states.iter().map(|(c, s)| (*c, s)).collect();
    for c0 in 0..n {
        let s0 = VertexSet::full(n).difference(&balls[c0]);
        if s0.is_empty() {
            return Err(CertificateViolation::ImmediateCaptureStart { start: c0 });
        }
        if !members.contains(&(c0, &s0)) {
            return Err(CertificateViolation::MissingInitialState { start: c0 });
        }
    }
    for (idx, (c, s)) in cert.states.iter().enumerate() {
        let mut moves: Vec<usize> = g.neighbors(*c).to_vec();
        moves.push(*c);
        for c2 in moves {
            let after_move = s.difference(&balls[c2]);
            if after_move.is_empty() {
                return Err(CertificateViolation::CaptureTransition {
                    state: idx,
                    cop_move: c2,
                });
            }
            let next = g.closed_neighborhood(&after_move).difference(&balls[c2]);
            if !members.contains(&(c2, &next)) {
                return Err(CertificateViolation::MissingSuccessor {
                    state: idx,
                    cop_move: c2,
                });
            }
        }
    }
    Ok(())
}

const CERT_MAGIC: &str = "copsrange-certificate v1";

/// Compact binary form: a one-line textual header followed by
/// length-prefixed state records (little-endian cop index plus the
/// survivor-set words).
pub fn certificate_to_bytes(n: usize, cert: &Certificate) -> Vec<u8> {
    let words = n.div_ceil(64);
    let mut out = Vec::new();
    out.extend_from_slice(
        format!(
            "{CERT_MAGIC} n={n} rho={} states={} words={words}\n",
            cert.rho.0,
            cert.states.len()
        )
        .as_bytes(),
    );
    for (c, s) in &cert.states {
        let record_len = 4 + 8 * words as u32;
        out.extend_from_slice(&record_len.to_le_bytes());
        out.extend_from_slice(&(*c as u32).to_le_bytes());
        for w in s.words() {
            out.extend_from_slice(&w.to_le_bytes());
        }
    }
    out
}

pub fn certificate_from_bytes(bytes: &[u8]) -> Result<(usize, Certificate)> {
    let newline = bytes
        .iter()
        .position(|&b| b == b'\n')
        .ok_or_else(|| Error::input("certificate header missing"))?;
    let header = std::str::from_utf8(&bytes[..newline])
        .map_err(|_| Error::input("certificate header not UTF-8"))?;
    if !header.starts_with(CERT_MAGIC) {
        return Err(Error::input("not a certificate file"));
    }
    let mut n = None;
    let mut rho = None;
    let mut count = None;
    let mut words = None;
    for part in header.split_whitespace() {
        if let Some((k, v)) = part.split_once('=') {
            let v: usize = v
                .parse()
                .map_err(|_| Error::input(format!("bad header field {part}")))?;
            match k {
                "n" => n = Some(v),
                "rho" => rho = Some(v),
                "states" => count = Some(v),
                "words" => words = Some(v),
                _ => {}
            }
        }
    }
    let (n, rho, count, words) = match (n, rho, count, words) {
        (Some(n), Some(r), Some(c), Some(w)) => (n, r, c, w),
        _ => return Err(Error::input("incomplete certificate header")),
    };
    let mut pos = newline + 1;
    let mut states = Vec::with_capacity(count);
    for _ in 0..count {
        if pos + 4 > bytes.len() {
            return Err(Error::input("truncated certificate"));
        }
        let record_len = u32::from_le_bytes(bytes[pos..pos + 4].try_into().unwrap()) as usize;
        pos += 4;
        if record_len != 4 + 8 * words || pos + record_len > bytes.len() {
            return Err(Error::input("corrupt certificate record"));
        }
        let cop = u32::from_le_bytes(bytes[pos..pos + 4].try_into().unwrap()) as usize;
        let mut set = VertexSet::empty(n);
        for wi in 0..words {
            let off = pos + 4 + 8 * wi;
            let w = u64::from_le_bytes(bytes[off..off + 8].try_into().unwrap());
            let mut bits = w;
            while bits != 0 {
                let v = wi * 64 + bits.trailing_zeros() as usize;
                bits &= bits - 1;
                set.insert(v);
            }
        }
        states.push((cop, set));
        pos += record_len;
    }
    Ok((n, Certificate { rho: Radius(rho), states }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn cfg() -> SolverConfig {
        SolverConfig::default()
    }

    #[test]
    fn path_wins_at_zero() {
        let p5 = families::make_path(5);
        let res = cop_wins(&p5, Radius(0), &cfg()).unwrap();
        assert_eq!(res.outcome, Outcome::CopWin);
        let witness = res.witness.unwrap();
        assert!(witness.is_valid_on(&p5));
        assert!(matches!(
            best_response(&p5, &witness, Radius(0)).unwrap(),
            BestResponse::Capture { .. }
        ));
    }

    #[test]
    fn cycle6_loses_at_one() {
        let c6 = families::make_cycle(6);
        let res = cop_wins(&c6, Radius(1), &cfg()).unwrap();
        assert_eq!(res.outcome, Outcome::CopLoss);
        let cert = res.certificate.unwrap();
        assert!(verify_certificate(&c6, Radius(1), &cert).is_ok());
    }

    #[test]
    fn spider_222_range_one() {
        let spider = families::make_triod(2, 2, 2);
        let loss = cop_wins(&spider, Radius(0), &cfg()).unwrap();
        assert_eq!(loss.outcome, Outcome::CopLoss);
        assert!(verify_certificate(&spider, Radius(0), &loss.certificate.unwrap()).is_ok());
        let win = cop_wins(&spider, Radius(1), &cfg()).unwrap();
        assert_eq!(win.outcome, Outcome::CopWin);
        let witness = win.witness.unwrap();
        assert!(matches!(
            best_response(&spider, &witness, Radius(1)).unwrap(),
            BestResponse::Capture { .. }
        ));
    }

    #[test]
    fn range_examples() {
        let k13 = families::make_triod(1, 1, 1);
        assert_eq!(range_of(&k13, &cfg()).unwrap().range, Radius(0));
        let t22 = families::make_cycle_triod(2, 2).0;
        let rr = range_of(&t22, &cfg()).unwrap();
        assert_eq!(rr.range, Radius(2));
        assert_eq!(rr.runs.len(), 3);
        assert!(rr.runs[..2].iter().all(|r| r.outcome == Outcome::CopLoss));
    }

    #[test]
    fn best_response_capture_at_placement() {
        let p3 = families::make_path(3);
        let res = best_response(&p3, &Walk(vec![1]), Radius(1)).unwrap();
        assert_eq!(res, BestResponse::Capture { time: 0 });
    }

    #[test]
    fn best_response_evasion_on_cycle() {
        let c6 = families::make_cycle(6);
        let patrol = Walk(vec![0, 1, 2, 3, 4, 5, 0]);
        match best_response(&c6, &patrol, Radius(1)).unwrap() {
            BestResponse::Evasion { walk } => {
                assert!(walk.is_valid_on(&c6));
                assert_eq!(walk.len(), patrol.len());
                for (t, &r) in walk.0.iter().enumerate() {
                    assert!(c6.dist(r, patrol.0[t]) > 1, "post-move gap at {t}");
                    if t + 1 < patrol.len() {
                        assert!(c6.dist(r, patrol.0[t + 1]) > 1, "cop-move gap at {t}");
                    }
                }
            }
            other => panic!("expected evasion, got {other:?}"),
        }
    }

    #[test]
    fn no_certificate_exists_when_cop_wins_at_placement() {
        let p3 = families::make_path(3);
        let bogus = Certificate {
            rho: Radius(1),
            states: vec![(0, VertexSet::singleton(3, 2))],
        };
        assert_eq!(
            verify_certificate(&p3, Radius(1), &bogus),
            Err(CertificateViolation::ImmediateCaptureStart { start: 1 })
        );
    }

    #[test]
    fn tampered_certificate_rejected() {
        let c6 = families::make_cycle(6);
        let mut cert = cop_wins(&c6, Radius(1), &cfg()).unwrap().certificate.unwrap();
        cert.states.pop();
        assert!(verify_certificate(&c6, Radius(1), &cert).is_err());
    }

    #[test]
    fn certificate_binary_roundtrip() {
        let c5 = families::make_cycle(5);
        let cert = cop_wins(&c5, Radius(1), &cfg()).unwrap().certificate.unwrap();
        let bytes = certificate_to_bytes(5, &cert);
        let (n, back) = certificate_from_bytes(&bytes).unwrap();
        assert_eq!(n, 5);
        assert_eq!(back.rho, cert.rho);
        assert_eq!(back.states.len(), cert.states.len());
        assert!(verify_certificate(&c5, Radius(1), &back).is_ok());
    }

    #[test]
    fn budget_exhaustion_is_an_error() {
        let g = families::make_cycle_triod(2, 2).0;
        let tiny = SolverConfig {
            budget: 10,
            ..SolverConfig::default()
        };
        assert!(matches!(cop_wins(&g, Radius(1), &tiny), Err(Error::Budget(_))));
    }

    #[test]
    fn pruning_preserves_outcomes() {
        let pruned_cfg = SolverConfig {
            prune_dominated: true,
            ..SolverConfig::default()
        };
        for g in [
            families::make_cycle(6),
            families::make_triod(2, 2, 2),
            families::make_triod(3, 2, 4),
            families::make_cycle_triod(1, 2).0,
        ] {
            for rho in 0..=g.radius() {
                let a = cop_wins(&g, Radius(rho), &cfg()).unwrap();
                let b = cop_wins(&g, Radius(rho), &pruned_cfg).unwrap();
                assert_eq!(a.outcome, b.outcome, "rho={rho} on {g:?}");
            }
        }
    }

    #[test]
    fn deterministic_witness() {
        let spider = families::make_triod(2, 2, 2);
        let a = cop_wins(&spider, Radius(1), &cfg()).unwrap().witness.unwrap();
        let b = cop_wins(&spider, Radius(1), &cfg()).unwrap().witness.unwrap();
        assert_eq!(a, b);
    }
}
