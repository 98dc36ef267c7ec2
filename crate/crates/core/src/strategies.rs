//! Constructive cop patrols and robber evasion automata transcribed from
//! the strategy constructions, validated downstream against the solver and
//! the best-response simulator.

use crate::error::{Error, Result};
use crate::families;
use crate::formulas;
use crate::graph::{Graph, Radius, Walk};
use crate::retracts::{self, GridProjections, LEG_DOWN, LEG_RIGHT, LEG_UP};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ConstructionTag {
    TreeDfs,
    CaterpillarBackbone,
    IntervalSweep,
    GridFiber,
    CycleTriodSweep,
    CliqueTriodSweep,
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct StepNote {
    pub step: usize,
    pub note: String,
}

/// A cop patrol with the radius it is built for and per-step notes.
#[derive(Debug, Clone)]
pub struct PatrolPlan {
    pub walk: Walk,
    pub rho: Radius,
    pub construction: ConstructionTag,
    pub annotations: Vec<StepNote>,
}

impl PatrolPlan {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "rho": self.rho.0,
            "walk": self.walk.0,
            "construction": self.construction,
            "annotations": self.annotations,
        })
    }
}

/// The guard-post excursion: from the vertex at distance rho from `origin`
/// nearest to `target`, one step out checks the target, one step returns.
/// The origin goes unguarded for at most one cop turn. A target already
/// inside the origin's ball yields the trivial fragment (the guard post
/// alone).
pub fn check_around(g: &Graph, origin: usize, target: usize, rho: Radius) -> Result<Walk> {
    let d = g.dist(origin, target);
    if d > 2 * rho.0 + 1 {
        return Err(Error::domain(format!(
            "target at distance {d} > 2*rho + 1 = {}",
            2 * rho.0 + 1
        )));
    }
    let path = g.shortest_path(origin, target);
    let guard = path[rho.0.min(d)];
    if d <= rho.0 {
        return Ok(Walk(vec![guard]));
    }
    let step_out = path[rho.0 + 1];
    Ok(Walk(vec![guard, step_out, guard]))
}

/// Longest path (diameter pair, lexicographically first) that contains all
/// of `must_contain`; falls back to the first diameter pair.
fn diameter_path_through(t: &Graph, must_contain: &[usize]) -> Vec<usize> {
    let diam = t.diameter();
    let mut fallback = None;
    for a in 0..t.n() {
        for b in a + 1..t.n() {
            if t.dist(a, b) != diam {
                continue;
            }
            let path = t.shortest_path(a, b);
            if fallback.is_none() {
                fallback = Some(path.clone());
            }
            if must_contain.iter().all(|v| path.contains(v)) {
                return path;
            }
        }
    }
    fallback.expect("every graph has a diameter pair")
}

/// Walks a longest path containing every origin of a maximum triod,
/// clearing each hanging subtree with check-around excursions before
/// moving on. rho is the exact tree value.
pub fn tree_dfs_patrol(t: &Graph) -> Result<PatrolPlan> {
    if !t.is_tree() {
        return Err(Error::domain("tree patrol requires a tree"));
    }
    let rho = formulas::predict_tree(t)?.value.to_integer() as usize;
    if t.n() == 1 {
        return Ok(PatrolPlan {
            walk: Walk(vec![0]),
            rho: Radius(0),
            construction: ConstructionTag::TreeDfs,
            annotations: Vec::new(),
        });
    }
    let best = formulas::max_tree_triod_size(t)?;
    let origins: Vec<usize> = if best == 0 {
        Vec::new()
    } else {
        (0..t.n())
            .filter(|&v| formulas::tree_triod_size(t, v).unwrap_or(0) == best)
            .collect()
    };
    let path = diameter_path_through(t, &origins);
    let on_path = VertexSet::from_indices(t.n(), path.iter().copied());

    let mut walk = Vec::new();
    let mut annotations = Vec::new();
    walk.push(path[0]);
    for (idx, &station) in path.iter().enumerate() {
        for &u in t.neighbors(station) {
            if on_path.contains(u) {
                continue;
            }
            for target in hanging_targets(t, station, u, rho.into()) {
                let d = t.dist(station, target);
                let out = t.shortest_path(station, target);
                annotations.push(StepNote {
                    step: walk.len(),
                    note: format!("check-around excursion for {target}"),
                });
                // out to distance d - rho (one past the guard post when the
                // target sits at the 2*rho + 1 horizon) and straight back
                for &v in &out[1..=d - rho] {
                    walk.push(v);
                }
                for &v in out[..d - rho].iter().rev() {
                    walk.push(v);
                }
            }
        }
        if idx + 1 < path.len() {
            walk.push(path[idx + 1]);
        }
    }
    Ok(PatrolPlan {
        walk: Walk(walk),
        rho: Radius(rho),
        construction: ConstructionTag::TreeDfs,
        annotations,
    })
}

/// Vertices of the subtree hanging at `station` through its neighbor `u`
/// that are deeper than rho, in depth-first preorder.
fn hanging_targets(t: &Graph, station: usize, u: usize, rho: Radius) -> Vec<usize> {
    let mut targets = Vec::new();
    let mut stack = vec![u];
    let mut seen = VertexSet::singleton(t.n(), station);
    seen.insert(u);
    while let Some(v) = stack.pop() {
        if t.dist(station, v) > rho.0 {
            targets.push(v);
        }
        let mut children: Vec<usize> = t
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| !seen.contains(w))
            .collect();
        children.sort_unstable_by(|a, b| b.cmp(a)); // ascending after pop
        for w in children {
            seen.insert(w);
            stack.push(w);
        }
    }
    targets
}

/// Backbone traversal with one-step leg detours; the cop is on the
/// backbone every second move. rho is 0.
pub fn caterpillar_patrol(g: &Graph) -> Result<PatrolPlan> {
    if !g.is_caterpillar() {
        return Err(Error::domain("caterpillar patrol requires a caterpillar"));
    }
    if g.n() == 1 {
        return Ok(PatrolPlan {
            walk: Walk(vec![0]),
            rho: Radius(0),
            construction: ConstructionTag::CaterpillarBackbone,
            annotations: Vec::new(),
        });
    }
    let path = diameter_path_through(g, &[]);
    let on_path = VertexSet::from_indices(g.n(), path.iter().copied());
    let mut walk = vec![path[0]];
    let mut annotations = Vec::new();
    for (idx, &station) in path.iter().enumerate() {
        for &leaf in g.neighbors(station) {
            if !on_path.contains(leaf) {
                annotations.push(StepNote {
                    step: walk.len(),
                    note: format!("leg detour to {leaf}"),
                });
                walk.push(leaf);
                walk.push(station);
            }
        }
        if idx + 1 < path.len() {
            walk.push(path[idx + 1]);
        }
    }
    Ok(PatrolPlan {
        walk: Walk(walk),
        rho: Radius(0),
        construction: ConstructionTag::CaterpillarBackbone,
        annotations,
    })
}

/// Visits every vertex in left-endpoint order, joining consecutive order
/// elements by shortest paths through already-seen vertices. rho is 1, or
/// 0 on caterpillars (where the backbone sweep applies).
pub fn interval_sweep_patrol(g: &Graph, left_endpoint_order: &[usize]) -> Result<PatrolPlan> {
    let n = g.n();
    let mut seen_perm = vec![false; n];
    if left_endpoint_order.len() != n
        || left_endpoint_order.iter().any(|&v| {
            if v >= n || seen_perm[v] {
                true
            } else {
                seen_perm[v] = true;
                false
            }
        })
    {
        return Err(Error::domain("order is not a permutation of the vertices"));
    }
    if g.is_caterpillar() {
        let base = caterpillar_patrol(g)?;
        return Ok(PatrolPlan {
            walk: base.walk,
            rho: Radius(0),
            construction: ConstructionTag::IntervalSweep,
            annotations: vec![StepNote {
                step: 0,
                note: "caterpillar case: backbone sweep at rho 0".into(),
            }],
        });
    }
    let mut allowed = VertexSet::singleton(n, left_endpoint_order[0]);
    let mut walk = vec![left_endpoint_order[0]];
    let mut annotations = vec![StepNote {
        step: 0,
        note: "visit order position 0".into(),
    }];
    for (k, &target) in left_endpoint_order.iter().enumerate().skip(1) {
        allowed.insert(target);
        let from = *walk.last().unwrap();
        let hop = bfs_path_within(g, &allowed, from, target).ok_or_else(|| {
            Error::domain("order inconsistent with the graph: prefix not connected")
        })?;
        annotations.push(StepNote {
            step: walk.len() + hop.len() - 2,
            note: format!("visit order position {k}"),
        });
        walk.extend_from_slice(&hop[1..]);
    }
    Ok(PatrolPlan {
        walk: Walk(walk),
        rho: Radius(1),
        construction: ConstructionTag::IntervalSweep,
        annotations,
    })
}

fn bfs_path_within(g: &Graph, allowed: &VertexSet, from: usize, to: usize) -> Option<Vec<usize>> {
    if from == to {
        return Some(vec![from]);
    }
    let mut parent = vec![usize::MAX; g.n()];
    parent[from] = from;
    let mut queue = std::collections::VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        for &u in g.neighbors(v) {
            if allowed.contains(u) && parent[u] == usize::MAX {
                parent[u] = v;
                if u == to {
                    let mut path = vec![to];
                    let mut cur = to;
                    while cur != from {
                        cur = parent[cur];
                        path.push(cur);
                    }
                    path.reverse();
                    return Some(path);
                }
                queue.push_back(u);
            }
        }
    }
    None
}

/// Middle-row sweep of the rows x cols grid: every column is fully covered
/// from the fiber, so rho = floor(rows/2) suffices; the literal rows/2
/// upper bound is noted alongside.
pub fn grid_fiber_patrol(rows: usize, cols: usize) -> Result<PatrolPlan> {
    if rows > cols {
        return Err(Error::domain("fiber patrol needs rows <= cols"));
    }
    let (_, info) = families::make_grid(rows, cols);
    let fiber_row = rows.div_ceil(2) - 1;
    let walk: Vec<usize> = (0..cols).map(|j| info.vertex(fiber_row, j)).collect();
    let rho = rows / 2;
    Ok(PatrolPlan {
        walk: Walk(walk),
        rho: Radius(rho),
        construction: ConstructionTag::GridFiber,
        annotations: vec![StepNote {
            step: 0,
            note: format!(
                "middle fiber at row {}; exact coverage rho {} alongside the rows/2 = {}/2 bound",
                fiber_row + 1,
                rho,
                rows
            ),
        }],
    })
}

/// Sweep of the cycle-triod T_{k,l}: start at the house vertex of the
/// first path nearest the cycle, sweep that path tip-and-back, round the
/// cycle to sweep the second path fully, then head for the third tip.
/// The turn-back points are the interpreted reading validated by the
/// best-response oracle; rho is the exact formula value.
pub fn cycle_triod_patrol(k: usize, l: usize) -> Result<PatrolPlan> {
    let rho = formulas::predict_cycle_triod(k, l)?.value.to_integer() as usize;
    let (_, info) = families::make_cycle_triod(k, l);
    // positions along path i: position 0 is the attachment, position l the tip
    let at = |i: usize, pos: usize| -> usize {
        if pos == 0 {
            info.attach[i]
        } else {
            info.legs[i][pos - 1]
        }
    };
    let start_pos = l.saturating_sub(rho);
    let mut walk = Vec::new();
    let mut annotations = Vec::new();
    annotations.push(StepNote {
        step: 0,
        note: format!("start at house vertex of path 1 nearest the cycle (position {start_pos})"),
    });
    walk.push(at(0, start_pos));
    for pos in start_pos + 1..=l {
        walk.push(at(0, pos));
    }
    annotations.push(StepNote {
        step: walk.len().saturating_sub(1),
        note: "tip of path 1; sweep back to the cycle".into(),
    });
    for pos in (0..l).rev() {
        walk.push(at(0, pos));
    }
    for c in info.attach[0] + 1..=info.attach[1] {
        walk.push(c);
    }
    annotations.push(StepNote {
        step: walk.len().saturating_sub(1),
        note: "reached path 2; sweep it fully".into(),
    });
    for pos in 1..=l {
        walk.push(at(1, pos));
    }
    for pos in (0..l).rev() {
        walk.push(at(1, pos));
    }
    for c in info.attach[1] + 1..=info.attach[2] {
        walk.push(c);
    }
    annotations.push(StepNote {
        step: walk.len().saturating_sub(1),
        note: "reached path 3; head for its tip".into(),
    });
    for pos in 1..=l {
        walk.push(at(2, pos));
    }
    Ok(PatrolPlan {
        walk: Walk(walk),
        rho: Radius(rho),
        construction: if k == 1 {
            ConstructionTag::CliqueTriodSweep
        } else {
            ConstructionTag::CycleTriodSweep
        },
        annotations,
    })
}

/// Robber automata: the shadow strategies on triods and clique-triods, and
/// the projection-driven strategy on grids.
#[derive(Debug, Clone)]
pub enum RobberAutomaton {
    TriodShadow {
        origin: usize,
        legs: [Vec<usize>; 3],
    },
    CliqueTriodShadow {
        clique: Vec<usize>,
        attach: [usize; 3],
        legs: [Vec<usize>; 3],
    },
    GridProjection {
        rows: usize,
        cols: usize,
    },
}

impl RobberAutomaton {
    /// Reads the triod structure off a graph: a unique degree-3 origin and
    /// three pendant paths.
    pub fn triod(g: &Graph) -> Result<RobberAutomaton> {
        let heavy: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) >= 3).collect();
        if heavy.len() != 1 || g.degree(heavy[0]) != 3 || !g.is_tree() {
            return Err(Error::domain("not a triod"));
        }
        let origin = heavy[0];
        let mut legs: Vec<Vec<usize>> = Vec::new();
        for &u in g.neighbors(origin) {
            let mut leg = vec![u];
            let mut prev = origin;
            let mut cur = u;
            while let Some(&next) = g.neighbors(cur).iter().find(|&&w| w != prev) {
                prev = cur;
                cur = next;
                leg.push(cur);
            }
            legs.push(leg);
        }
        let mut it = legs.into_iter();
        Ok(RobberAutomaton::TriodShadow {
            origin,
            legs: [it.next().unwrap(), it.next().unwrap(), it.next().unwrap()],
        })
    }

    /// Reads a clique-triod structure off a graph: a clique on at least 3
    /// vertices with exactly three pendant paths on distinct members.
    pub fn clique_triod(g: &Graph) -> Result<RobberAutomaton> {
        let mut clique: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) >= 3).collect();
        if clique.len() < 3 {
            return Err(Error::domain("not a clique-triod: clique too small"));
        }
        for (i, &u) in clique.iter().enumerate() {
            for &v in &clique[i + 1..] {
                if !g.has_edge(u, v) {
                    return Err(Error::domain("not a clique-triod: core is not a clique"));
                }
            }
        }
        clique.sort_unstable();
        let q = clique.len();
        let in_clique = VertexSet::from_indices(g.n(), clique.iter().copied());
        let mut attach = Vec::new();
        let mut legs = Vec::new();
        for &o in &clique {
            let outward: Vec<usize> = g
                .neighbors(o)
                .iter()
                .copied()
                .filter(|&u| !in_clique.contains(u))
                .collect();
            match outward.len() {
                0 => {
                    if g.degree(o) != q - 1 {
                        return Err(Error::domain("not a clique-triod"));
                    }
                }
                1 => {
                    attach.push(o);
                    let mut leg = vec![outward[0]];
                    let mut prev = o;
                    let mut cur = outward[0];
                    while let Some(&next) = g.neighbors(cur).iter().find(|&&w| w != prev) {
                        if in_clique.contains(next) {
                            return Err(Error::domain("not a clique-triod: leg loops back"));
                        }
                        prev = cur;
                        cur = next;
                        leg.push(cur);
                    }
                    legs.push(leg);
                }
                _ => return Err(Error::domain("not a clique-triod: multiple pendant paths")),
            }
        }
        if attach.len() != 3 {
            return Err(Error::domain(format!(
                "not a clique-triod: {} pendant paths",
                attach.len()
            )));
        }
        let covered: usize = q + legs.iter().map(|l| l.len()).sum::<usize>();
        if covered != g.n() {
            return Err(Error::domain("not a clique-triod: stray vertices"));
        }
        let mut it = legs.into_iter();
        Ok(RobberAutomaton::CliqueTriodShadow {
            clique,
            attach: [attach[0], attach[1], attach[2]],
            legs: [it.next().unwrap(), it.next().unwrap(), it.next().unwrap()],
        })
    }

    pub fn grid(rows: usize, cols: usize) -> RobberAutomaton {
        RobberAutomaton::GridProjection { rows, cols }
    }
}

#[derive(Debug, Clone)]
pub enum RobberOutcome {
    /// The robber walk, one entry per patrol step, never within rho.
    Evasion { walk: Walk },
    /// The rules had no safe continuation (or a safety re-check failed):
    /// either the cop genuinely wins here or the transcription is wrong.
    Failure { reason: String, time: Option<usize> },
}

impl RobberOutcome {
    pub fn is_evasion(&self) -> bool {
        matches!(self, RobberOutcome::Evasion { .. })
    }
}

/// Shadow world: a triod-shaped metric with branch assignment and houses.
struct ShadowWorld<'a> {
    g: &'a Graph,
    branch_of: Vec<Option<usize>>,
    houses: [VertexSet; 3],
    rho: usize,
}

impl<'a> ShadowWorld<'a> {
    /// Builds the world from the three branch paths. For a plain triod the
    /// paths are the legs (shared origin excluded); for a clique-triod each
    /// path starts at its attachment vertex, which therefore belongs to its
    /// branch — the robber standing there is already inside that branch's
    /// danger zone.
    fn from_paths(g: &'a Graph, paths: &[Vec<usize>; 3], rho: usize) -> ShadowWorld<'a> {
        let mut branch_of = vec![None; g.n()];
        let mut houses = [
            VertexSet::empty(g.n()),
            VertexSet::empty(g.n()),
            VertexSet::empty(g.n()),
        ];
        for (b, path) in paths.iter().enumerate() {
            for &v in path {
                branch_of[v] = Some(b);
            }
            let tail = path.len().saturating_sub(rho + 1);
            for &v in &path[tail..] {
                houses[b].insert(v);
            }
        }
        ShadowWorld {
            g,
            branch_of,
            houses,
            rho,
        }
    }

    /// Steps needed to leave the given branch from x: distance to the
    /// nearest vertex outside it. Drives the full-speed evacuation when
    /// the cop's next house is in the robber's branch.
    fn exit_distance(&self, x: usize, branch: usize) -> usize {
        (0..self.g.n())
            .filter(|&w| self.branch_of[w] != Some(branch))
            .map(|w| self.g.dist(x, w))
            .min()
            .unwrap_or(0)
    }
}

/// For each time, the branch of the next house the cop will enter skipping
/// houses on `skip_branch`, scanning strictly forward.
fn next_house_branch(
    world: &ShadowWorld,
    patrol: &[usize],
    from: usize,
    skip_branch: Option<usize>,
) -> Option<usize> {
    for &p in &patrol[from..] {
        for b in 0..3 {
            if Some(b) != skip_branch && world.houses[b].contains(p) {
                return Some(b);
            }
        }
    }
    None
}

/// Runs the shadow rules: sit at distance rho+2 before an approaching cop
/// move, rho+1 before a retreating one, stay otherwise; when several moves
/// fit, avoid the cop's branch and the branch of the next house he visits,
/// prefer standing still, then the move furthest from the cop's
/// next-next position, then the lowest index. A robber standing in the
/// branch whose house the cop enters next evacuates it at full speed —
/// the migrations in the escape proofs run "straight towards" the refuge,
/// not at shadow pace.
fn run_shadow(world: &ShadowWorld, patrol: &[usize]) -> RobberOutcome {
    let g = world.g;
    let rho = world.rho;
    let len = patrol.len();
    let pat = |t: usize| patrol[t.min(len - 1)];

    let select = |candidates: &[usize], t: usize, current: Option<usize>| -> Option<usize> {
        let p_now = pat(t);
        let p_next = pat(t + 1);
        let p_after = pat(t + 2);
        let cop_branch = world.branch_of[p_now];
        let doomed = next_house_branch(world, patrol, t + 1, None);
        let avoid_house = next_house_branch(world, patrol, t + 1, cop_branch);
        let desired = |x: usize| -> usize {
            let d_now = match current {
                Some(r) => g.dist(p_now, r),
                None => g.dist(p_now, x),
            };
            let d_next = match current {
                Some(r) => g.dist(p_next, r),
                None => g.dist(p_next, x),
            };
            if d_next < d_now {
                rho + 2
            } else {
                rho + 1
            }
        };
        candidates
            .iter()
            .copied()
            .min_by_key(|&x| {
                let evacuate = match (world.branch_of[x], doomed) {
                    (Some(b), Some(d)) if b == d => world.exit_distance(x, b),
                    _ => 0,
                };
                let gap = g.dist(p_now, x).abs_diff(desired(x));
                let branch_penalty = match world.branch_of[x] {
                    Some(b) => (Some(b) == cop_branch) as usize + (Some(b) == avoid_house) as usize,
                    None => 0,
                };
                let moved = current.map_or(0, |r| (x != r) as usize);
                (
                    evacuate,
                    gap,
                    branch_penalty,
                    moved,
                    g.n() - g.dist(p_after, x).min(g.n()),
                    x,
                )
            })
    };

    // placement: any vertex respecting the distance rules
    let safe0: Vec<usize> = (0..g.n())
        .filter(|&x| g.dist(pat(0), x) > rho && g.dist(pat(1), x) > rho)
        .collect();
    let Some(mut r) = select(&safe0, 0, None) else {
        return RobberOutcome::Failure {
            reason: "no safe placement".into(),
            time: Some(0),
        };
    };
    let mut walk = vec![r];

    for t in 1..len {
        let p_now = patrol[t];
        if g.dist(p_now, r) <= rho {
            return RobberOutcome::Failure {
                reason: "caught after cop move".into(),
                time: Some(t),
            };
        }
        let in_doomed_branch = match (
            world.branch_of[r],
            next_house_branch(world, patrol, t + 1, None),
        ) {
            (Some(b), Some(d)) => b == d,
            _ => false,
        };
        if !in_doomed_branch
            && g.dist(pat(t + 1), r) == g.dist(p_now, r)
            && g.dist(pat(t + 1), r) > rho
        {
            // cop's next move keeps the distance: the robber does not move
            walk.push(r);
            continue;
        }
        let mut candidates: Vec<usize> = g.neighbors(r).to_vec();
        candidates.push(r);
        candidates.retain(|&x| g.dist(p_now, x) > rho && g.dist(pat(t + 1), x) > rho);
        match select(&candidates, t, Some(r)) {
            Some(x) => {
                r = x;
                walk.push(r);
            }
            None => {
                return RobberOutcome::Failure {
                    reason: "rule deadlock: no safe move".into(),
                    time: Some(t),
                };
            }
        }
    }
    RobberOutcome::Evasion { walk: Walk(walk) }
}

/// Plays the shadow strategy against a patrol on a triod or clique-triod.
/// Structural mismatches are domain errors; a sub-threshold instance is
/// allowed to run and reports failure if the rules deadlock (consistent
/// with a cop win there).
pub fn triod_shadow_robber(
    g: &Graph,
    automaton: &RobberAutomaton,
    patrol: &Walk,
    rho: Radius,
) -> Result<RobberOutcome> {
    if !patrol.is_valid_on(g) {
        return Err(Error::input("patrol is not a valid walk"));
    }
    let world = match automaton {
        RobberAutomaton::TriodShadow { legs, .. } => ShadowWorld::from_paths(g, legs, rho.0),
        RobberAutomaton::CliqueTriodShadow { attach, legs, .. } => {
            let paths = [0, 1, 2].map(|i| {
                let mut p = vec![attach[i]];
                p.extend(&legs[i]);
                p
            });
            ShadowWorld::from_paths(g, &paths, rho.0)
        }
        RobberAutomaton::GridProjection { .. } => {
            return Err(Error::domain("grid automaton runs via grid_projection_robber"))
        }
    };
    let outcome = run_shadow(&world, &patrol.0);
    Ok(verify_evasion(g, patrol, rho, outcome))
}

/// Re-checks claimed evasions against the real metric; a violation is
/// downgraded to a failure report that flags the transcription.
fn verify_evasion(g: &Graph, patrol: &Walk, rho: Radius, outcome: RobberOutcome) -> RobberOutcome {
    if let RobberOutcome::Evasion { walk } = &outcome {
        if !walk.is_valid_on(g) {
            return RobberOutcome::Failure {
                reason: "robber walk is not a valid walk".into(),
                time: None,
            };
        }
        if let Some(t) = min_gap_violation(g, patrol, walk, rho) {
            return RobberOutcome::Failure {
                reason: "safety re-check failed: robber entered the capture ball".into(),
                time: Some(t),
            };
        }
    }
    outcome
}

/// First time the robber is within rho of the cop, checked after every
/// half-step (cop move, then robber move); None means the evasion is good.
pub fn min_gap_violation(g: &Graph, patrol: &Walk, robber: &Walk, rho: Radius) -> Option<usize> {
    debug_assert_eq!(patrol.len(), robber.len());
    for t in 0..patrol.len() {
        if g.dist(patrol.0[t], robber.0[t]) <= rho.0 {
            return Some(t);
        }
        if t + 1 < patrol.len() && g.dist(patrol.0[t + 1], robber.0[t]) <= rho.0 {
            return Some(t + 1);
        }
    }
    None
}

/// Projection-based grid robber: imagines the game on the embedded tree T,
/// projecting the cop through the upper or lower map. The journey between
/// houses picks the map while the robber stands on ground fixed by both
/// (the origin and the right leg, switching maps when the cop crosses the
/// switching area); on a corner branch the robber always uses that
/// branch's own map, the one that fixes his position and therefore
/// under-approximates the real gap. Being omniscient, he additionally
/// never steps inside the real capture ball. Even row counts reuse the
/// odd rows-1 construction on the subgrid, with the cop's row clamped.
pub fn grid_projection_robber(
    rows: usize,
    cols: usize,
    rho: Radius,
    patrol: &Walk,
) -> Result<RobberOutcome> {
    let (grid, info) = families::make_grid(rows, cols);
    if !patrol.is_valid_on(&grid) {
        return Err(Error::input("patrol is not a valid walk on the grid"));
    }
    let odd_rows = if rows % 2 == 0 { rows - 1 } else { rows };
    let proj = retracts::grid_projections(odd_rows, cols, rho)?;
    let t_local = proj.tree.local();

    // clamp the cop into the odd subgrid; vertex ids coincide there
    let clamp = |v: usize| -> usize {
        let (i, j) = info.coords(v);
        i.min(odd_rows - 1) * cols + j
    };

    let modes = projection_modes(&proj, &grid, &patrol.0, clamp, rho);

    // houses on T: the rho+1 tail on the two corner legs (their length is
    // exactly 2*rho + 2), and everything at distance >= rho+2 on the right
    // leg, matching the projection-defined right house.
    let mut world = ShadowWorld::from_paths(t_local, &proj.legs, rho.0);
    let right = &proj.legs[LEG_RIGHT];
    world.houses[LEG_RIGHT] = VertexSet::from_indices(
        t_local.n(),
        right.iter().skip(rho.0 + 1).copied(),
    );

    let outcome = run_grid_shadow(&grid, &proj, &world, &patrol.0, &modes, clamp, rho.0);
    let outcome = match outcome {
        RobberOutcome::Evasion { walk } => RobberOutcome::Evasion {
            walk: Walk(walk.0.iter().map(|&v| proj.tree.ambient(v)).collect()),
        },
        f => f,
    };
    Ok(verify_evasion(&grid, patrol, rho, outcome))
}

/// The shadow loop specialized to the grid: distances to the cop are taken
/// through the projection that fixes the robber's current branch, the
/// next-house lookahead runs over the real grid house regions, and every
/// candidate move must clear the real capture ball as well.
fn run_grid_shadow(
    grid: &Graph,
    proj: &GridProjections,
    world: &ShadowWorld,
    patrol: &[usize],
    modes: &[bool],
    clamp: impl Fn(usize) -> usize,
    rho: usize,
) -> RobberOutcome {
    let t_local = world.g;
    let len = patrol.len();
    let pat = |t: usize| patrol[t.min(len - 1)];
    let im = |t: usize, up: bool| -> usize {
        let m = if up { &proj.up } else { &proj.down };
        m.image[clamp(pat(t))]
    };
    // map fixing a local T vertex: its own corner branch, else the journey mode
    let map_up_for = |x: usize, t: usize| -> bool {
        match world.branch_of[x] {
            Some(LEG_UP) => true,
            Some(LEG_DOWN) => false,
            _ => modes[t.min(len - 1)],
        }
    };
    let grid_houses = grid_house_regions(grid, proj, &clamp, rho);
    let next_house = |from: usize, skip: Option<usize>| -> Option<usize> {
        for t in from..len {
            for (b, region) in grid_houses.iter().enumerate() {
                if Some(b) != skip && region.contains(patrol[t]) {
                    return Some(b);
                }
            }
        }
        None
    };

    let amb = |x: usize| proj.tree.ambient(x);
    let real_safe = |t: usize, x: usize| -> bool {
        grid.dist(pat(t), amb(x)) > rho && grid.dist(pat(t + 1), amb(x)) > rho
    };

    let select = |candidates: &[usize], t: usize, current: Option<usize>| -> Option<usize> {
        let cop_branch = world.branch_of[im(t, modes[t.min(len - 1)])];
        let doomed = next_house(t + 1, None);
        let avoid_house = next_house(t + 1, cop_branch);
        candidates
            .iter()
            .copied()
            .min_by_key(|&x| {
                let anchor = current.unwrap_or(x);
                let up = map_up_for(anchor, t);
                let evacuate = match (world.branch_of[x], doomed) {
                    (Some(b), Some(d)) if b == d => world.exit_distance(x, b),
                    _ => 0,
                };
                let d_now = t_local.dist(anchor, im(t, up));
                let d_next = t_local.dist(anchor, im(t + 1, up));
                let desired = if d_next < d_now { rho + 2 } else { rho + 1 };
                let gap = t_local.dist(x, im(t, up)).abs_diff(desired);
                let branch_penalty = match world.branch_of[x] {
                    Some(b) => {
                        (Some(b) == cop_branch) as usize + (Some(b) == avoid_house) as usize
                    }
                    None => 0,
                };
                let moved = current.map_or(0, |r| (x != r) as usize);
                let after = t_local.dist(x, im(t + 2, map_up_for(x, t)));
                (
                    evacuate,
                    gap,
                    branch_penalty,
                    moved,
                    t_local.n() - after.min(t_local.n()),
                    x,
                )
            })
    };

    let safe0: Vec<usize> = (0..t_local.n()).filter(|&x| real_safe(0, x)).collect();
    let Some(mut r) = select(&safe0, 0, None) else {
        return RobberOutcome::Failure {
            reason: "no safe placement".into(),
            time: Some(0),
        };
    };
    let mut walk = vec![r];

    for t in 1..len {
        if grid.dist(patrol[t], amb(r)) <= rho {
            return RobberOutcome::Failure {
                reason: "caught after cop move".into(),
                time: Some(t),
            };
        }
        let in_doomed_branch = match (world.branch_of[r], next_house(t + 1, None)) {
            (Some(b), Some(d)) => b == d,
            _ => false,
        };
        let up = map_up_for(r, t);
        let unchanged = t_local.dist(r, im(t + 1, up)) == t_local.dist(r, im(t, up));
        if !in_doomed_branch && unchanged && real_safe(t, r) {
            walk.push(r);
            continue;
        }
        let mut candidates: Vec<usize> = t_local.neighbors(r).to_vec();
        candidates.push(r);
        candidates.retain(|&x| real_safe(t, x));
        match select(&candidates, t, Some(r)) {
            Some(x) => {
                r = x;
                walk.push(r);
            }
            None => {
                return RobberOutcome::Failure {
                    reason: format!(
                        "rule deadlock: no safe move (robber {}, cop {} then {})",
                        amb(r),
                        patrol[t],
                        pat(t + 1)
                    ),
                    time: Some(t),
                };
            }
        }
    }
    RobberOutcome::Evasion { walk: Walk(walk) }
}

/// The three grid house regions: balls around the two corner leaves, and
/// the vertices projecting deep onto the right leg.
fn grid_house_regions(
    grid: &Graph,
    proj: &GridProjections,
    clamp: &impl Fn(usize) -> usize,
    rho: usize,
) -> [VertexSet; 3] {
    let t_local = proj.tree.local();
    let up_leaf = proj.tree.ambient(*proj.legs[LEG_UP].last().unwrap());
    let down_leaf = proj.tree.ambient(*proj.legs[LEG_DOWN].last().unwrap());
    let right_deep = VertexSet::from_indices(
        t_local.n(),
        proj.legs[LEG_RIGHT].iter().skip(rho + 1).copied(),
    );
    let mut right_region = VertexSet::empty(grid.n());
    for v in 0..grid.n() {
        if right_deep.contains(proj.up.image[clamp(v)]) {
            right_region.insert(v);
        }
    }
    [
        grid.ball(up_leaf, Radius(rho)),
        grid.ball(down_leaf, Radius(rho)),
        right_region,
    ]
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum GridHouse {
    Up,
    Down,
    Right,
}

/// Per-step choice between the two projections, following the travel
/// rules: journeys touching the upper house use the upper map, journeys
/// touching the lower house the lower map, and a trip between the two
/// switches maps when the cop first reaches the switching area.
fn projection_modes(
    proj: &GridProjections,
    grid: &Graph,
    patrol: &[usize],
    clamp: impl Fn(usize) -> usize,
    rho: Radius,
) -> Vec<bool> {
    let [up_house, down_house, right_house] = grid_house_regions(grid, proj, &clamp, rho.0);
    let switching = VertexSet::from_indices(grid.n(), proj.switching_area.iter().copied());

    let house_at = |v: usize| -> Option<GridHouse> {
        if up_house.contains(v) {
            Some(GridHouse::Up)
        } else if down_house.contains(v) {
            Some(GridHouse::Down)
        } else if right_house.contains(v) {
            Some(GridHouse::Right)
        } else {
            None
        }
    };

    let len = patrol.len();
    let mut next: Vec<Option<GridHouse>> = vec![None; len + 1];
    for t in (0..len).rev() {
        next[t] = house_at(patrol[t]).or(next[t + 1]);
    }
    let mut modes = Vec::with_capacity(len);
    let mut mode = !matches!(next[0], Some(GridHouse::Down));
    let mut last: Option<GridHouse> = None;
    let mut touched_switch = false;
    for (t, &c) in patrol.iter().enumerate() {
        match house_at(c) {
            Some(h) => {
                last = Some(h);
                touched_switch = false;
                mode = match h {
                    GridHouse::Up => true,
                    GridHouse::Down => false,
                    GridHouse::Right => mode,
                };
            }
            None => {
                if switching.contains(c) {
                    touched_switch = true;
                }
                mode = match (last, next[t + 1]) {
                    (Some(GridHouse::Up), Some(GridHouse::Down)) => !touched_switch,
                    (Some(GridHouse::Down), Some(GridHouse::Up)) => touched_switch,
                    (_, Some(GridHouse::Up)) => true,
                    (_, Some(GridHouse::Down)) => false,
                    (_, Some(GridHouse::Right)) | (_, None) => match last {
                        Some(GridHouse::Up) => true,
                        Some(GridHouse::Down) => false,
                        _ => mode,
                    },
                };
            }
        }
        modes.push(mode);
    }
    modes
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::{self, BestResponse, SolverConfig};

    fn captures(g: &Graph, plan: &PatrolPlan) -> bool {
        assert!(plan.walk.is_valid_on(g), "plan walk must be valid");
        matches!(
            solver::best_response(g, &plan.walk, plan.rho).unwrap(),
            BestResponse::Capture { .. }
        )
    }

    #[test]
    fn check_around_examples() {
        let spider = families::make_triod(3, 3, 3);
        // leaf of the first leg sits at distance 3 from the origin
        let frag = check_around(&spider, 0, 3, Radius(1)).unwrap();
        assert_eq!(frag.len(), 3, "net length 2 from the guard post");
        assert!(frag.is_valid_on(&spider));
        let trivial = check_around(&spider, 0, 0, Radius(1)).unwrap();
        assert_eq!(trivial.len(), 1);
        // P7 from its center: the end is coverable at rho 1
        let p7 = families::make_path(7);
        let frag = check_around(&p7, 3, 6, Radius(1)).unwrap();
        let covered = frag
            .0
            .iter()
            .any(|&v| p7.ball(v, Radius(1)).contains(6));
        assert!(covered);
        assert!(check_around(&p7, 3, 6, Radius(0)).is_err(), "too far at rho 0");
    }

    #[test]
    fn caterpillar_patrols() {
        let p4 = families::make_path(4);
        let plan = caterpillar_patrol(&p4).unwrap();
        assert_eq!(plan.walk.0, vec![0, 1, 2, 3]);
        assert!(captures(&p4, &plan));

        let k13 = families::make_triod(1, 1, 1);
        let plan = caterpillar_patrol(&k13).unwrap();
        assert!(captures(&k13, &plan));

        let cat = families::random_caterpillar(12, 9);
        let plan = caterpillar_patrol(&cat).unwrap();
        assert_eq!(plan.rho, Radius(0));
        assert!(captures(&cat, &plan));

        assert!(caterpillar_patrol(&families::make_triod(2, 2, 2)).is_err());
    }

    #[test]
    fn tree_dfs_patrols_capture() {
        let p6 = families::make_path(6);
        let plan = tree_dfs_patrol(&p6).unwrap();
        assert_eq!(plan.rho, Radius(0));
        assert!(captures(&p6, &plan));

        let spider = families::make_triod(2, 2, 2);
        let plan = tree_dfs_patrol(&spider).unwrap();
        assert_eq!(plan.rho, Radius(1));
        assert!(captures(&spider, &plan));

        let (fig1, _, _, _) = families::make_figure_graphs();
        let plan = tree_dfs_patrol(&fig1).unwrap();
        assert_eq!(plan.rho, Radius(2));
        assert!(captures(&fig1, &plan));
    }

    #[test]
    fn interval_patrols_capture() {
        let r = |a: i64, b: i64| {
            (
                num_rational::Rational64::from_integer(a),
                num_rational::Rational64::from_integer(b),
            )
        };
        let (k3, info) = families::make_interval_graph(&[r(0, 3), r(1, 4), r(2, 5)]).unwrap();
        let plan = interval_sweep_patrol(&k3, &info.order).unwrap();
        assert_eq!(plan.rho, Radius(1));
        assert!(captures(&k3, &plan));

        let (p5, info) =
            families::make_interval_graph(&[r(0, 2), r(1, 4), r(3, 6), r(5, 8), r(7, 9)]).unwrap();
        let plan = interval_sweep_patrol(&p5, &info.order).unwrap();
        assert_eq!(plan.rho, Radius(0));
        assert!(captures(&p5, &plan));

        let (g, info) = families::random_interval_graph(12, 4);
        let plan = interval_sweep_patrol(&g, &info.order).unwrap();
        assert!(captures(&g, &plan));

        assert!(interval_sweep_patrol(&k3, &[0, 0, 1]).is_err());
    }

    #[test]
    fn grid_fiber_patrols() {
        let plan = grid_fiber_patrol(1, 5).unwrap();
        assert_eq!(plan.rho, Radius(0));
        let (g, _) = families::make_grid(1, 5);
        assert!(captures(&g, &plan));

        let plan = grid_fiber_patrol(3, 4).unwrap();
        assert_eq!(plan.rho, Radius(1));
        let (g, _) = families::make_grid(3, 4);
        assert!(captures(&g, &plan));

        assert!(grid_fiber_patrol(4, 3).is_err());
    }

    #[test]
    fn cycle_triod_sweep_small() {
        let plan = cycle_triod_patrol(1, 1).unwrap();
        assert_eq!(plan.rho, Radius(1));
        let (g, _) = families::make_cycle_triod(1, 1);
        assert!(captures(&g, &plan));
    }

    #[test]
    fn automaton_detection() {
        let spider = families::make_triod(2, 3, 4);
        assert!(matches!(
            RobberAutomaton::triod(&spider).unwrap(),
            RobberAutomaton::TriodShadow { origin: 0, .. }
        ));
        assert!(RobberAutomaton::triod(&families::make_path(5)).is_err());
        let (ct, _) = families::make_clique_triod(3, 2, 2, 2).unwrap();
        assert!(RobberAutomaton::clique_triod(&ct).is_ok());
        let (ct4, _) = families::make_clique_triod(4, 2, 2, 2).unwrap();
        assert!(RobberAutomaton::clique_triod(&ct4).is_ok());
        assert!(RobberAutomaton::clique_triod(&spider).is_err());
    }

    #[test]
    fn shadow_evades_tree_patrol_on_big_spider() {
        let spider = families::make_triod(4, 4, 4);
        let automaton = RobberAutomaton::triod(&spider).unwrap();
        let plan = tree_dfs_patrol(&spider).unwrap();
        // range is 2, so at rho 1 the robber wins; the patrol is built for 2
        let out = triod_shadow_robber(&spider, &automaton, &plan.walk, Radius(1)).unwrap();
        assert!(out.is_evasion(), "expected evasion, got {out:?}");
    }

    #[test]
    fn shadow_fails_where_cop_wins() {
        let spider = families::make_triod(2, 2, 2);
        let automaton = RobberAutomaton::triod(&spider).unwrap();
        let plan = tree_dfs_patrol(&spider).unwrap();
        let out = triod_shadow_robber(&spider, &automaton, &plan.walk, Radius(1)).unwrap();
        assert!(!out.is_evasion(), "range is 1; the shadow must fail");
    }

    #[test]
    fn clique_shadow_evades() {
        let (ct, _) = families::make_clique_triod(3, 3, 3, 3).unwrap();
        let automaton = RobberAutomaton::clique_triod(&ct).unwrap();
        // an aggressive full sweep of the clique-triod at rho 1
        let plan = cycle_triod_patrol(1, 3).unwrap();
        let out = triod_shadow_robber(&ct, &automaton, &plan.walk, Radius(1)).unwrap();
        assert!(out.is_evasion(), "size 3 >= 2*1+1, got {out:?}");
    }

    #[test]
    fn grid_robber_evades_fiber_patrol() {
        let fiber = grid_fiber_patrol(11, 14).unwrap();
        let out = grid_projection_robber(11, 14, Radius(3), &fiber.walk).unwrap();
        assert!(out.is_evasion(), "got {out:?}");
    }

    #[test]
    fn strategy_rho_matches_solver_on_small_cases() {
        let cfg = SolverConfig::default();
        let spider = families::make_triod(2, 2, 2);
        let plan = tree_dfs_patrol(&spider).unwrap();
        assert_eq!(solver::range_of(&spider, &cfg).unwrap().range, plan.rho);
    }
}
