//! Closed-form range predictions for the analyzed families, the triod-size
//! machinery behind the tree formula, and the chordal conjecture explorer.

use num_rational::Rational64;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graph::{Graph, Radius};
use crate::retracts::{
    self, clique_triod_escape_threshold, conjecture_clique_triod_threshold,
    conjecture_triod_threshold, triod_escape_threshold, CandidateSubgraph,
};
use crate::solver::{self, SolverConfig};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PredictionKind {
    Exact,
    LowerBound,
    UpperBound,
    Membership,
}

/// A predicted range value or bound; bounds may be non-integer rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prediction {
    pub kind: PredictionKind,
    pub value: Rational64,
    /// Which formula produced the value.
    pub source: &'static str,
}

impl Prediction {
    pub fn exact(v: i64, source: &'static str) -> Prediction {
        Prediction {
            kind: PredictionKind::Exact,
            value: Rational64::from_integer(v),
            source,
        }
    }

    pub fn lower(v: i64, source: &'static str) -> Prediction {
        Prediction {
            kind: PredictionKind::LowerBound,
            value: Rational64::from_integer(v),
            source,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "kind": self.kind,
            "value": self.value.to_string(),
            "source": self.source,
        })
    }
}

/// Third-largest branch depth at v in a tree: the size of the best triod
/// centered there, 0 when deg(v) < 3.
pub fn tree_triod_size(t: &Graph, v: usize) -> Result<usize> {
    if !t.is_tree() {
        return Err(Error::domain("triod size on trees requires a tree"));
    }
    if t.degree(v) < 3 {
        return Ok(0);
    }
    let mut depths: Vec<usize> = t
        .neighbors(v)
        .iter()
        .map(|&u| branch_depth(t, v, u))
        .collect();
    depths.sort_unstable_by(|a, b| b.cmp(a));
    Ok(depths[2])
}

/// Depth of the branch through neighbor `u` of `v`: 1 plus the
/// eccentricity of u inside its component of t - v.
fn branch_depth(t: &Graph, v: usize, u: usize) -> usize {
    let mut dist = vec![usize::MAX; t.n()];
    dist[v] = 0; // blocked
    dist[u] = 1;
    let mut queue = std::collections::VecDeque::from([u]);
    let mut max = 1;
    while let Some(w) = queue.pop_front() {
        for &x in t.neighbors(w) {
            if dist[x] == usize::MAX {
                dist[x] = dist[w] + 1;
                max = max.max(dist[x]);
                queue.push_back(x);
            }
        }
    }
    max
}

pub fn max_tree_triod_size(t: &Graph) -> Result<usize> {
    (0..t.n()).try_fold(0, |acc, v| Ok(acc.max(tree_triod_size(t, v)?)))
}

/// Exact tree range: max over vertices of floor(triod size / 2).
pub fn predict_tree(t: &Graph) -> Result<Prediction> {
    if !t.is_tree() {
        return Err(Error::domain("tree prediction requires a tree"));
    }
    let mut best = 0;
    for v in 0..t.n() {
        best = best.max(tree_triod_size(t, v)? / 2);
    }
    Ok(Prediction::exact(best as i64, "tree-formula"))
}

/// Cycle value ceil(k/2) - 1. The lower bound is proved in general; the
/// solver confirms exactness on all tested cycle lengths, so the value is
/// emitted as exact with this provenance note.
pub fn predict_cycle(k: usize) -> Result<Prediction> {
    if k < 3 {
        return Err(Error::domain("cycles need k >= 3"));
    }
    Ok(Prediction::exact(
        (k as i64 + 1) / 2 - 1,
        "cycle-formula(lower bound proven; exactness solver-checked)",
    ))
}

/// Exact cycle-triod value: max{ceil(l/2 + (k-2)/4), ceil((3k-2)/2)}.
pub fn predict_cycle_triod(k: usize, l: usize) -> Result<Prediction> {
    if k < 1 || l < 1 {
        return Err(Error::domain("cycle-triod needs k, l >= 1"));
    }
    let (k, l) = (k as i64, l as i64);
    let sweep = ceil_div(2 * l + k - 2, 4);
    let cycle = ceil_div(3 * k - 2, 2);
    Ok(Prediction::exact(sweep.max(cycle), "cycle-triod-formula"))
}

/// Exact equal-leg clique-triod value: ceil(l/2).
pub fn predict_clique_triod(l: usize) -> Result<Prediction> {
    if l < 1 {
        return Err(Error::domain("clique-triod legs must be nonempty"));
    }
    Ok(Prediction::exact(ceil_div(l as i64, 2), "clique-triod-formula"))
}

fn ceil_div(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0 && a >= 0);
    (a + b - 1) / b
}

/// Grid bounds as exact rationals, rows <= cols (swapped otherwise):
/// min{(n-3)/2, (2m+n-10)/8} <= range <= n/2.
pub fn grid_bounds(rows: usize, cols: usize) -> (Prediction, Prediction) {
    let (n, m) = if rows <= cols { (rows, cols) } else { (cols, rows) };
    let (n, m) = (n as i64, m as i64);
    let lower = Rational64::new(n - 3, 2).min(Rational64::new(2 * m + n - 10, 8));
    let upper = Rational64::new(n, 2);
    (
        Prediction {
            kind: PredictionKind::LowerBound,
            value: lower,
            source: "grid-bounds",
        },
        Prediction {
            kind: PredictionKind::UpperBound,
            value: upper,
            source: "grid-bounds",
        },
    )
}

/// Interval classification: 0 for caterpillars, 1 otherwise. The caller
/// asserts interval provenance (no recognition algorithm is implemented);
/// passing `is_interval = false` is a domain error.
pub fn predict_interval(g: &Graph, is_interval: bool) -> Result<Prediction> {
    if !is_interval {
        return Err(Error::domain(
            "interval prediction requires interval-graph provenance from the caller",
        ));
    }
    let v = if g.is_caterpillar() { 0 } else { 1 };
    Ok(Prediction::exact(v, "interval-classification"))
}

/// Largest size of an induced triod with origin v, by exhaustive search
/// over triples of induced legs that only meet at v. Exponential;
/// `leg_cap` bounds the leg length and `budget` the explored nodes.
pub fn induced_triod_size(g: &Graph, v: usize, leg_cap: usize, budget: u64) -> Result<usize> {
    if g.degree(v) < 3 {
        return Ok(0);
    }
    let cap = leg_cap.min(g.eccentricity(v));
    let mut nodes = 0u64;
    for size in (1..=cap).rev() {
        if find_induced_triod_at(g, v, size, &mut nodes, budget)?.is_some() {
            return Ok(size);
        }
    }
    Ok(0)
}

/// First induced triod with origin v and all legs exactly `size` long, in
/// the deterministic search order. An induced triod with legs >= size
/// trims to one with legs exactly size, so this doubles as a threshold
/// test.
pub fn find_induced_triod_at(
    g: &Graph,
    v: usize,
    size: usize,
    nodes: &mut u64,
    budget: u64,
) -> Result<Option<CandidateSubgraph>> {
    let mut used = VertexSet::singleton(g.n(), v);
    let mut legs: Vec<Vec<usize>> = Vec::new();
    if search_legs(g, v, size, 3, &mut used, &mut legs, 0, nodes, budget)? {
        let mut it = legs.into_iter();
        return Ok(Some(CandidateSubgraph::Triod {
            origin: v,
            legs: [it.next().unwrap(), it.next().unwrap(), it.next().unwrap()],
        }));
    }
    Ok(None)
}

/// Extends `legs` with `remaining` more induced legs of exactly `size`
/// vertices each, rooted at `root`. A candidate vertex must be adjacent to
/// the leg's previous vertex and to nothing else already chosen; that
/// single rule enforces induced legs, non-adjacent distinct legs, and no
/// chords back to the root. Leg starts ascend to break symmetry.
#[allow(clippy::too_many_arguments)]
fn search_legs(
    g: &Graph,
    root: usize,
    size: usize,
    remaining: usize,
    used: &mut VertexSet,
    legs: &mut Vec<Vec<usize>>,
    min_start: usize,
    nodes: &mut u64,
    budget: u64,
) -> Result<bool> {
    if remaining == 0 {
        return Ok(true);
    }
    *nodes += 1;
    if *nodes > budget {
        return Err(Error::Budget(*nodes));
    }
    let starts: Vec<usize> = g
        .neighbors(root)
        .iter()
        .copied()
        .filter(|&u| u >= min_start && admissible(g, used, root, u))
        .collect();
    for s in starts {
        let mut leg = vec![s];
        used.insert(s);
        if grow_leg(g, root, size, &mut leg, used, nodes, budget)?
            && {
                legs.push(leg.clone());
                let ok = search_legs(g, root, size, remaining - 1, used, legs, s + 1, nodes, budget)?;
                if !ok {
                    legs.pop();
                }
                ok
            }
        {
            return Ok(true);
        }
        for &u in &leg {
            used.remove(u);
        }
    }
    Ok(false)
}

fn grow_leg(
    g: &Graph,
    _root: usize,
    size: usize,
    leg: &mut Vec<usize>,
    used: &mut VertexSet,
    nodes: &mut u64,
    budget: u64,
) -> Result<bool> {
    if leg.len() == size {
        return Ok(true);
    }
    *nodes += 1;
    if *nodes > budget {
        return Err(Error::Budget(*nodes));
    }
    let last = *leg.last().unwrap();
    let candidates: Vec<usize> = g
        .neighbors(last)
        .iter()
        .copied()
        .filter(|&u| admissible(g, used, last, u))
        .collect();
    for c in candidates {
        leg.push(c);
        used.insert(c);
        if grow_leg(g, _root, size, leg, used, nodes, budget)? {
            return Ok(true);
        }
        used.remove(c);
        leg.pop();
    }
    Ok(false)
}

/// u may extend a structure whose chosen set is `used` from `attach`:
/// unused, adjacent to attach, and adjacent to nothing else chosen.
fn admissible(g: &Graph, used: &VertexSet, attach: usize, u: usize) -> bool {
    if used.contains(u) || !g.has_edge(attach, u) {
        return false;
    }
    let mut conflict = g.adjacency(u).intersection(used);
    conflict.remove(attach);
    conflict.is_empty()
}

/// First induced clique-triod with clique size >= 3 and legs exactly
/// `size` long.
pub fn find_induced_clique_triod(
    g: &Graph,
    size: usize,
    nodes: &mut u64,
    budget: u64,
) -> Result<Option<CandidateSubgraph>> {
    let n = g.n();
    // enumerate maximal-enough cliques: grow from each triangle
    let mut cliques: Vec<Vec<usize>> = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if !g.has_edge(a, b) {
                continue;
            }
            for c in b + 1..n {
                if g.has_edge(a, c) && g.has_edge(b, c) {
                    cliques.push(vec![a, b, c]);
                }
            }
        }
    }
    let mut grown: Vec<Vec<usize>> = cliques.clone();
    let mut frontier = cliques;
    while let Some(q) = frontier.pop() {
        *nodes += 1;
        if *nodes > budget {
            return Err(Error::Budget(*nodes));
        }
        let last = *q.last().unwrap();
        for v in last + 1..n {
            if q.iter().all(|&u| g.has_edge(u, v)) {
                let mut bigger = q.clone();
                bigger.push(v);
                grown.push(bigger.clone());
                frontier.push(bigger);
            }
        }
    }
    for clique in grown {
        // three attachment points, legs must avoid the whole clique
        let k = clique.len();
        for ai in 0..k {
            for bi in 0..k {
                for ci in 0..k {
                    if ai == bi || bi == ci || ai == ci {
                        continue;
                    }
                    let attach = [clique[ai], clique[bi], clique[ci]];
                    let mut used = VertexSet::from_indices(g.n(), clique.iter().copied());
                    if let Some(legs) =
                        clique_legs(g, &attach, size, &mut used, nodes, budget)?
                    {
                        return Ok(Some(CandidateSubgraph::CliqueTriod {
                            clique,
                            attach,
                            legs,
                        }));
                    }
                }
            }
        }
    }
    Ok(None)
}

fn clique_legs(
    g: &Graph,
    attach: &[usize; 3],
    size: usize,
    used: &mut VertexSet,
    nodes: &mut u64,
    budget: u64,
) -> Result<Option<[Vec<usize>; 3]>> {
    fn rec(
        g: &Graph,
        attach: &[usize; 3],
        size: usize,
        idx: usize,
        used: &mut VertexSet,
        legs: &mut Vec<Vec<usize>>,
        nodes: &mut u64,
        budget: u64,
    ) -> Result<bool> {
        if idx == 3 {
            return Ok(true);
        }
        *nodes += 1;
        if *nodes > budget {
            return Err(Error::Budget(*nodes));
        }
        let root = attach[idx];
        let starts: Vec<usize> = g
            .neighbors(root)
            .iter()
            .copied()
            .filter(|&u| admissible(g, used, root, u))
            .collect();
        for s in starts {
            let mut leg = vec![s];
            used.insert(s);
            if grow_leg(g, root, size, &mut leg, used, nodes, budget)? {
                legs.push(leg.clone());
                if rec(g, attach, size, idx + 1, used, legs, nodes, budget)? {
                    return Ok(true);
                }
                legs.pop();
            }
            for &u in &leg {
                used.remove(u);
            }
        }
        Ok(false)
    }
    let mut legs = Vec::new();
    if rec(g, attach, size, 0, used, &mut legs, nodes, budget)? {
        let mut it = legs.into_iter();
        Ok(Some([
            it.next().unwrap(),
            it.next().unwrap(),
            it.next().unwrap(),
        ]))
    } else {
        Ok(None)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "SCREAMING-KEBAB-CASE")]
pub enum ConjectureStatus {
    Consistent,
    WitnessMissing,
    CounterexampleCandidate,
}

/// Outcome of probing the chordal conjecture on one graph at one rho.
#[derive(Debug, Clone)]
pub struct ConjectureReport {
    pub rho: Radius,
    pub range: Radius,
    pub range_at_least_rho: bool,
    pub triod_candidates: usize,
    pub clique_triod_candidates: usize,
    pub retraction_witnesses: usize,
    pub status: ConjectureStatus,
}

impl ConjectureReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "rho": self.rho.0,
            "range": self.range.0,
            "range_at_least_rho": self.range_at_least_rho,
            "triod_candidates": self.triod_candidates,
            "clique_triod_candidates": self.clique_triod_candidates,
            "retraction_witnesses": self.retraction_witnesses,
            "status": self.status,
        })
    }
}

/// Probes the chordal conjecture on g at the given rho: solves for the
/// exact range, searches induced triods of size >= 2*rho and clique-triods
/// of size >= 2*rho - 1, and tests the nearest-vertex projection as a weak
/// retraction witness for each find. The witness search is sufficient, not
/// exhaustive, so a missing witness is reported as such and the conjecture
/// is never asserted.
pub fn conjecture_check(g: &Graph, rho: Radius, cfg: &SolverConfig) -> Result<ConjectureReport> {
    if rho.0 < 2 {
        return Err(Error::domain("conjecture explorer needs rho >= 2"));
    }
    if g.n() > 20 {
        return Err(Error::domain("conjecture explorer is desk-scale (n <= 20)"));
    }
    if !g.is_chordal_bruteforce() {
        return Err(Error::domain("conjecture explorer needs a chordal graph"));
    }
    let range = solver::range_of(g, cfg)?.range;
    let range_at_least_rho = range >= rho;

    let budget = 50_000_000u64;
    let mut nodes = 0u64;
    let mut candidates: Vec<CandidateSubgraph> = Vec::new();
    let triod_size = conjecture_triod_threshold(rho);
    for v in 0..g.n() {
        if let Some(c) = find_induced_triod_at(g, v, triod_size, &mut nodes, budget)? {
            candidates.push(c);
        }
    }
    let triod_candidates = candidates.len();
    let clique_size = conjecture_clique_triod_threshold(rho);
    let clique_triod_candidates =
        match find_induced_clique_triod(g, clique_size, &mut nodes, budget)? {
            Some(c) => {
                candidates.push(c);
                1
            }
            None => 0,
        };

    let mut retraction_witnesses = 0;
    for cand in &candidates {
        if retracts::retract_lower_bound(g, cand)?.is_some() {
            retraction_witnesses += 1;
        }
    }

    let status = match (range_at_least_rho, retraction_witnesses > 0) {
        (true, true) | (false, false) => ConjectureStatus::Consistent,
        (true, false) => ConjectureStatus::WitnessMissing,
        // a verified witness forces range >= rho via the escape lemma and
        // the retract theorem, so this combination flags a real problem
        (false, true) => ConjectureStatus::CounterexampleCandidate,
    };
    Ok(ConjectureReport {
        rho,
        range,
        range_at_least_rho,
        triod_candidates,
        clique_triod_candidates,
        retraction_witnesses,
        status,
    })
}

/// Compares a rational bound against an integer range honestly: the bound
/// applies as floor/ceil only in reports, never silently.
pub fn bound_holds(lower: &Prediction, range: usize, upper: &Prediction) -> bool {
    let r = Rational64::from_integer(range as i64);
    lower.value <= r && r <= upper.value
}

/// Escape-lemma threshold re-exports so formula users need one import.
pub fn escape_thresholds(rho: Radius) -> (usize, usize) {
    (triod_escape_threshold(rho), clique_triod_escape_threshold(rho))
}

pub fn rational_is_nonpositive(p: &Prediction) -> bool {
    p.value <= Rational64::zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn tree_triod_sizes() {
        let k13 = families::make_triod(1, 1, 1);
        assert_eq!(tree_triod_size(&k13, 0).unwrap(), 1);
        let spider = families::make_triod(2, 2, 2);
        assert_eq!(tree_triod_size(&spider, 0).unwrap(), 2);
        let (fig1, _, _, _) = families::make_figure_graphs();
        assert_eq!(tree_triod_size(&fig1, 0).unwrap(), 5);
        assert!(tree_triod_size(&families::make_cycle(4), 0).is_err());
    }

    #[test]
    fn tree_predictions() {
        assert_eq!(predict_tree(&families::make_path(7)).unwrap().value.to_integer(), 0);
        let spider = families::make_triod(3, 3, 3);
        assert_eq!(predict_tree(&spider).unwrap().value.to_integer(), 1);
        let (fig1, _, _, _) = families::make_figure_graphs();
        assert_eq!(predict_tree(&fig1).unwrap().value.to_integer(), 2);
    }

    #[test]
    fn cycle_predictions() {
        assert_eq!(predict_cycle(3).unwrap().value.to_integer(), 1);
        assert_eq!(predict_cycle(6).unwrap().value.to_integer(), 2);
        assert_eq!(predict_cycle(7).unwrap().value.to_integer(), 3);
        assert!(predict_cycle(2).is_err());
    }

    #[test]
    fn cycle_triod_predictions() {
        assert_eq!(predict_cycle_triod(2, 2).unwrap().value.to_integer(), 2);
        assert_eq!(predict_cycle_triod(2, 3).unwrap().value.to_integer(), 2);
        assert_eq!(predict_cycle_triod(4, 9).unwrap().value.to_integer(), 5);
    }

    #[test]
    fn clique_triod_predictions() {
        assert_eq!(predict_clique_triod(1).unwrap().value.to_integer(), 1);
        assert_eq!(predict_clique_triod(2).unwrap().value.to_integer(), 1);
        assert_eq!(predict_clique_triod(4).unwrap().value.to_integer(), 2);
    }

    #[test]
    fn clique_triod_agrees_with_cycle_triod_at_k1() {
        for l in 1..=20 {
            assert_eq!(
                predict_cycle_triod(1, l).unwrap().value,
                predict_clique_triod(l).unwrap().value,
                "l = {l}"
            );
        }
    }

    #[test]
    fn grid_bound_values() {
        let (lo, hi) = grid_bounds(4, 4);
        assert_eq!(lo.value, Rational64::new(1, 4));
        assert_eq!(hi.value, Rational64::from_integer(2));
        let (lo, hi) = grid_bounds(4, 6);
        assert_eq!(lo.value, Rational64::new(1, 2));
        assert_eq!(hi.value, Rational64::from_integer(2));
        let (lo, hi) = grid_bounds(11, 14);
        assert_eq!(lo.value, Rational64::new(29, 8));
        assert_eq!(hi.value, Rational64::new(11, 2));
        // swapped arguments normalize
        assert_eq!(grid_bounds(14, 11).0.value, Rational64::new(29, 8));
    }

    #[test]
    fn interval_prediction() {
        let p5 = families::make_path(5);
        assert_eq!(predict_interval(&p5, true).unwrap().value.to_integer(), 0);
        let k3 = families::make_cycle(3);
        assert_eq!(predict_interval(&k3, true).unwrap().value.to_integer(), 1);
        assert!(predict_interval(&k3, false).is_err());
    }

    #[test]
    fn induced_triod_size_examples() {
        let spider = families::make_triod(2, 3, 4);
        for v in 0..spider.n() {
            assert_eq!(
                induced_triod_size(&spider, v, spider.n(), 1_000_000).unwrap(),
                tree_triod_size(&spider, v).unwrap(),
                "vertex {v}"
            );
        }
        let c6 = families::make_cycle(6);
        assert_eq!(induced_triod_size(&c6, 0, 6, 1_000_000).unwrap(), 0);
    }

    #[test]
    fn induced_triod_respects_chords() {
        // figure-2 graph plus its chord (6, 9): at the old origin the
        // 5-branch and 9-branch now conflict one step out, capping the
        // induced size at 1, while the chord endpoint 9 sees branches
        // (0,1,2,3,4), (6,7,8), (10,11,12) and reaches size 3
        let (_, _, _, fig2e) = families::make_figure_graphs();
        assert_eq!(induced_triod_size(&fig2e, 0, fig2e.n(), 10_000_000).unwrap(), 1);
        assert_eq!(induced_triod_size(&fig2e, 9, fig2e.n(), 10_000_000).unwrap(), 3);
        let best = (0..fig2e.n())
            .map(|v| induced_triod_size(&fig2e, v, fig2e.n(), 10_000_000).unwrap())
            .max()
            .unwrap();
        assert_eq!(best, 3);
    }

    #[test]
    fn clique_triod_search_finds_shape() {
        let (g, _) = families::make_clique_triod(3, 2, 2, 2).unwrap();
        let mut nodes = 0;
        let found = find_induced_clique_triod(&g, 2, &mut nodes, 1_000_000)
            .unwrap()
            .expect("the graph is itself a clique-triod");
        assert_eq!(found.size(), 2);
        let c6 = families::make_cycle(6);
        assert!(find_induced_clique_triod(&c6, 1, &mut nodes, 1_000_000)
            .unwrap()
            .is_none());
    }

    #[test]
    fn conjecture_consistent_cases() {
        let cfg = SolverConfig::default();
        let spider = families::make_triod(4, 4, 4);
        let report = conjecture_check(&spider, Radius(2), &cfg).unwrap();
        assert_eq!(report.status, ConjectureStatus::Consistent);
        assert!(report.range_at_least_rho);
        assert!(report.retraction_witnesses > 0);

        let (ct, _) = families::make_clique_triod(3, 3, 3, 3).unwrap();
        let report = conjecture_check(&ct, Radius(2), &cfg).unwrap();
        assert_eq!(report.status, ConjectureStatus::Consistent);

        // far below the threshold: no candidates, range < rho
        let small = families::make_triod(1, 1, 1);
        let report = conjecture_check(&small, Radius(2), &cfg).unwrap();
        assert_eq!(report.status, ConjectureStatus::Consistent);
        assert!(!report.range_at_least_rho);
        assert!(conjecture_check(&families::make_cycle(5), Radius(2), &cfg).is_err());
    }
}
