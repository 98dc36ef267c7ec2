//! Weak-homomorphism and weak-retraction machinery.
//!
//! A weak homomorphism maps every edge to an edge or a single vertex,
//! measured in the codomain's own metric; a weak retraction additionally
//! fixes the codomain pointwise. Verified retractions onto triods and
//! clique-triods transfer the robber's escape strategies and therefore
//! lower-bound range(G).

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::formulas::Prediction;
use crate::graph::{Graph, Radius};


/// A subgraph H of an ambient graph carrying its own metric. Weak
/// homomorphisms compare distances inside H, not ambient distances
/// restricted to H, so the view keeps a private distance matrix.
#[derive(Debug, Clone)]
pub struct SubgraphView {
    vertices: Vec<usize>,
    local: Graph,
    index: HashMap<usize, usize>,
}

impl SubgraphView {
    /// Induced subgraph on the given ambient vertices (sorted, deduped).
    pub fn induced(g: &Graph, vertices: &[usize]) -> Result<SubgraphView> {
        let mut verts = vertices.to_vec();
        verts.sort_unstable();
        verts.dedup();
        if verts.is_empty() {
            return Err(Error::domain("subgraph must be nonempty"));
        }
        if verts.iter().any(|&v| v >= g.n()) {
            return Err(Error::input("subgraph vertex out of range"));
        }
        let index: HashMap<usize, usize> =
            verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut edges = Vec::new();
        for (i, &u) in verts.iter().enumerate() {
            for &w in g.neighbors(u) {
                if let Some(&j) = index.get(&w) {
                    if i < j {
                        edges.push((i, j));
                    }
                }
            }
        }
        let local = Graph::from_edges(verts.len(), &edges)
            .map_err(|_| Error::domain("subgraph is not connected"))?;
        Ok(SubgraphView {
            vertices: verts,
            local,
            index,
        })
    }

    /// Partial subgraph: only the listed ambient edges are kept.
    pub fn with_edges(g: &Graph, vertices: &[usize], edges: &[(usize, usize)]) -> Result<SubgraphView> {
        let mut verts = vertices.to_vec();
        verts.sort_unstable();
        verts.dedup();
        let index: HashMap<usize, usize> =
            verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut local_edges = Vec::new();
        for &(u, v) in edges {
            if !g.has_edge(u, v) {
                return Err(Error::input(format!("({u}, {v}) is not an edge of the ambient graph")));
            }
            match (index.get(&u), index.get(&v)) {
                (Some(&i), Some(&j)) => local_edges.push((i, j)),
                _ => return Err(Error::input("edge endpoint outside the vertex list")),
            }
        }
        let local = Graph::from_edges(verts.len(), &local_edges)
            .map_err(|_| Error::domain("subgraph is not connected"))?;
        Ok(SubgraphView {
            vertices: verts,
            local,
            index,
        })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn local(&self) -> &Graph {
        &self.local
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn local_index(&self, ambient: usize) -> Option<usize> {
        self.index.get(&ambient).copied()
    }

    pub fn ambient(&self, local: usize) -> usize {
        self.vertices[local]
    }
}

/// Total map from ambient vertices to local codomain indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexMap {
    pub image: Vec<usize>,
}

impl VertexMap {
    pub fn identity_onto(g: &Graph, h: &SubgraphView) -> Result<VertexMap> {
        let image = (0..g.n())
            .map(|v| {
                h.local_index(v)
                    .ok_or_else(|| Error::input("identity map needs the codomain to cover the graph"))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(VertexMap { image })
    }

    pub fn constant(g: &Graph, local_target: usize) -> VertexMap {
        VertexMap {
            image: vec![local_target; g.n()],
        }
    }

    pub fn to_json(&self, h: &SubgraphView) -> serde_json::Value {
        serde_json::json!({
            "image": self.image,
            "codomain": h.vertices(),
        })
    }
}

fn validate_map(g: &Graph, h: &SubgraphView, phi: &VertexMap) -> Result<()> {
    if phi.image.len() != g.n() {
        return Err(Error::input(format!(
            "map covers {} of {} vertices",
            phi.image.len(),
            g.n()
        )));
    }
    if phi.image.iter().any(|&t| t >= h.len()) {
        return Err(Error::input("map image outside the codomain"));
    }
    Ok(())
}

/// True iff every ambient edge maps to codomain vertices at codomain
/// distance at most 1.
pub fn is_weak_homomorphism(g: &Graph, h: &SubgraphView, phi: &VertexMap) -> Result<bool> {
    validate_map(g, h, phi)?;
    Ok(g.edges()
        .iter()
        .all(|&(u, v)| h.local().dist(phi.image[u], phi.image[v]) <= 1))
}

/// Weak homomorphism that fixes the codomain pointwise.
pub fn is_weak_retraction(g: &Graph, h: &SubgraphView, phi: &VertexMap) -> Result<bool> {
    validate_map(g, h, phi)?;
    let fixes = h
        .vertices()
        .iter()
        .enumerate()
        .all(|(i, &v)| phi.image[v] == i);
    Ok(fixes && is_weak_homomorphism(g, h, phi)?)
}

/// Maps each tree vertex to the unique nearest vertex of a connected
/// subtree. Uniqueness is guaranteed on trees; its failure means the
/// codomain was not a subtree and is reported as a domain error.
pub fn closest_vertex_projection(t: &Graph, h: &SubgraphView) -> Result<VertexMap> {
    if !t.is_tree() {
        return Err(Error::domain("closest-vertex projection is defined on trees"));
    }
    let mut image = Vec::with_capacity(t.n());
    for u in 0..t.n() {
        let best = h
            .vertices()
            .iter()
            .map(|&v| t.dist(u, v))
            .min()
            .expect("nonempty codomain");
        let nearest: Vec<usize> = h
            .vertices()
            .iter()
            .copied()
            .filter(|&v| t.dist(u, v) == best)
            .collect();
        if nearest.len() != 1 {
            return Err(Error::domain(format!(
                "vertex {u} has {} nearest codomain vertices; codomain is not a subtree",
                nearest.len()
            )));
        }
        image.push(h.local_index(nearest[0]).unwrap());
    }
    Ok(VertexMap { image })
}

/// Nearest-vertex map for general graphs; ties break to the lowest
/// ambient index. Used as a cheap sufficient witness candidate.
pub fn nearest_vertex_projection(g: &Graph, h: &SubgraphView) -> VertexMap {
    let image = (0..g.n())
        .map(|u| {
            let v = h
                .vertices()
                .iter()
                .copied()
                .min_by_key(|&v| (g.dist(u, v), v))
                .expect("nonempty codomain");
            h.local_index(v).unwrap()
        })
        .collect();
    VertexMap { image }
}

/// Escape-lemma thresholds. A robber wins on a triod of size at least
/// `triod_escape_threshold(rho)`, and on a clique-triod of size at least
/// `clique_triod_escape_threshold(rho)`. Both the conjecture explorer and
/// `retract_lower_bound` funnel through these, so they cannot drift apart.
pub fn triod_escape_threshold(rho: Radius) -> usize {
    2 * rho.0 + 2
}

pub fn clique_triod_escape_threshold(rho: Radius) -> usize {
    2 * rho.0 + 1
}

/// Conjectured chordal thresholds: range >= rho iff a weak retract triod
/// of size at least 2*rho or clique-triod of size at least 2*rho - 1 exists.
pub fn conjecture_triod_threshold(rho: Radius) -> usize {
    2 * rho.0
}

pub fn conjecture_clique_triod_threshold(rho: Radius) -> usize {
    (2 * rho.0).saturating_sub(1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CandidateKind {
    Triod,
    CliqueTriod,
}

/// An induced triod or clique-triod candidate located inside a host graph,
/// as ambient vertex chains.
#[derive(Debug, Clone)]
pub enum CandidateSubgraph {
    Triod {
        origin: usize,
        legs: [Vec<usize>; 3],
    },
    CliqueTriod {
        clique: Vec<usize>,
        attach: [usize; 3],
        legs: [Vec<usize>; 3],
    },
}

impl CandidateSubgraph {
    pub fn kind(&self) -> CandidateKind {
        match self {
            CandidateSubgraph::Triod { .. } => CandidateKind::Triod,
            CandidateSubgraph::CliqueTriod { .. } => CandidateKind::CliqueTriod,
        }
    }

    /// Shortest leg length: the triod size.
    pub fn size(&self) -> usize {
        let legs = match self {
            CandidateSubgraph::Triod { legs, .. } => legs,
            CandidateSubgraph::CliqueTriod { legs, .. } => legs,
        };
        legs.iter().map(|l| l.len()).min().unwrap_or(0)
    }

    pub fn vertices(&self) -> Vec<usize> {
        let mut out = match self {
            CandidateSubgraph::Triod { origin, legs } => {
                let mut v = vec![*origin];
                v.extend(legs.iter().flatten().copied());
                v
            }
            CandidateSubgraph::CliqueTriod { clique, legs, .. } => {
                let mut v = clique.clone();
                v.extend(legs.iter().flatten().copied());
                v
            }
        };
        out.sort_unstable();
        out
    }
}

/// Largest lower bound on range(G) the escape lemma yields for a
/// candidate of the given size.
pub fn lemma_lower_bound(kind: CandidateKind, size: usize) -> usize {
    let mut bound = 0;
    loop {
        let rho = Radius(bound);
        let needed = match kind {
            CandidateKind::Triod => triod_escape_threshold(rho),
            CandidateKind::CliqueTriod => clique_triod_escape_threshold(rho),
        };
        if size >= needed {
            bound += 1;
        } else {
            return bound;
        }
    }
}

#[derive(Debug, Clone)]
pub struct VerifiedBound {
    pub prediction: Prediction,
    pub candidate: CandidateSubgraph,
    /// The verified weak retraction witnessing the bound.
    pub witness: VertexMap,
}

/// Lower-bounds range(G) from a located candidate by searching for a weak
/// retraction witness (the nearest-vertex projection). Emits a bound only
/// with a verified witness; `None` means "no certificate", never a bound
/// of 0.
pub fn retract_lower_bound(g: &Graph, candidate: &CandidateSubgraph) -> Result<Option<VerifiedBound>> {
    let view = SubgraphView::induced(g, &candidate.vertices())?;
    let phi = if g.is_tree() {
        closest_vertex_projection(g, &view)?
    } else {
        nearest_vertex_projection(g, &view)
    };
    if !is_weak_retraction(g, &view, &phi)? {
        return Ok(None);
    }
    let bound = lemma_lower_bound(candidate.kind(), candidate.size());
    let source = match candidate.kind() {
        CandidateKind::Triod => "triod-retract-bound",
        CandidateKind::CliqueTriod => "clique-triod-retract-bound",
    };
    Ok(Some(VerifiedBound {
        prediction: Prediction::lower(bound as i64, source),
        candidate: candidate.clone(),
        witness: phi,
    }))
}

/// The two grid-to-tree projections and the structures they rely on. T is
/// the triod embedded in the grid: two bent legs of length 2*rho + 2 to
/// the left corners and the middle-row leg running right.
#[derive(Debug, Clone)]
pub struct GridProjections {
    pub rows: usize,
    pub cols: usize,
    pub rho: Radius,
    /// Column offset of the origin: x = (4*rho + 5 - n) / 2.
    pub x: usize,
    pub tree: SubgraphView,
    /// Local index of the origin o inside `tree`.
    pub origin: usize,
    /// Up, down and right legs as local index chains leaving the origin.
    pub legs: [Vec<usize>; 3],
    /// Grid vertex -> local T index, imagining the cop via the upper map.
    pub up: VertexMap,
    /// Same for the lower map.
    pub down: VertexMap,
    /// Middle-row vertices at columns <= x+1 (ambient ids), origin included.
    pub switching_area: Vec<usize>,
    /// Transcription guard: vertices whose computed image fell outside T
    /// and was clamped. Must stay empty for valid parameters.
    pub clamped: Vec<usize>,
}

pub const LEG_UP: usize = 0;
pub const LEG_DOWN: usize = 1;
pub const LEG_RIGHT: usize = 2;

pub fn grid_projections(rows: usize, cols: usize, rho: Radius) -> Result<GridProjections> {
    let (n, m, r) = (rows as i64, cols as i64, rho.0 as i64);
    if n % 2 == 0 {
        return Err(Error::domain("projection construction needs an odd number of rows"));
    }
    if n > m {
        return Err(Error::domain("needs rows <= cols"));
    }
    if 2 * r + 3 > n {
        return Err(Error::domain(format!("needs 2*rho + 3 <= {n}, got rho = {r}")));
    }
    if 8 * r > 2 * m + n - 11 {
        return Err(Error::domain(format!(
            "needs rho <= (2m + n - 11)/8 = {}/8, got rho = {r}",
            2 * m + n - 11
        )));
    }
    let x = (4 * r + 5 - n) / 2;
    if x < 0 {
        return Err(Error::domain(format!(
            "x = (4*rho + 5 - n)/2 = {x} is negative; parameters excluded"
        )));
    }
    let np = (n + 1) / 2;
    let grid_id = |i: i64, j: i64| -> usize { ((i - 1) * m + (j - 1)) as usize };

    // T: origin, then the three legs in grid coordinates.
    let origin_coord = (np, x + 1);
    let mut leg_up = Vec::new();
    for i in (1..np).rev() {
        leg_up.push((i, x + 1));
    }
    for j in (1..=x).rev() {
        leg_up.push((1, j));
    }
    let mut leg_down = Vec::new();
    for i in np + 1..=n {
        leg_down.push((i, x + 1));
    }
    for j in (1..=x).rev() {
        leg_down.push((n, j));
    }
    let mut leg_right = Vec::new();
    for j in x + 2..=m {
        leg_right.push((np, j));
    }
    debug_assert_eq!(leg_up.len() as i64, 2 * r + 2);
    debug_assert_eq!(leg_down.len() as i64, 2 * r + 2);
    debug_assert!(leg_right.len() as i64 >= 2 * r + 2);

    let mut t_vertices: Vec<usize> = vec![grid_id(origin_coord.0, origin_coord.1)];
    for leg in [&leg_up, &leg_down, &leg_right] {
        t_vertices.extend(leg.iter().map(|&(i, j)| grid_id(i, j)));
    }
    let (grid, _) = crate::families::make_grid(rows, cols);
    let tree = SubgraphView::induced(&grid, &t_vertices)?;
    let origin = tree.local_index(grid_id(origin_coord.0, origin_coord.1)).unwrap();
    let legs = [
        leg_up.iter().map(|&(i, j)| tree.local_index(grid_id(i, j)).unwrap()).collect::<Vec<_>>(),
        leg_down.iter().map(|&(i, j)| tree.local_index(grid_id(i, j)).unwrap()).collect::<Vec<_>>(),
        leg_right.iter().map(|&(i, j)| tree.local_index(grid_id(i, j)).unwrap()).collect::<Vec<_>>(),
    ];

    // The four-case rule shared by both maps on columns >= x+1, and the
    // per-map two-case rules on columns < x+1. Side conditions follow the
    // drawn case split (upper half i <= (n+1)/2 versus lower half).
    let project = |i: i64, j: i64, upper: bool| -> (i64, i64) {
        if j >= x + 1 {
            if i <= np {
                if i + j >= np + x + 1 {
                    (np, j - np + i)
                } else {
                    (i + j - x - 1, x + 1)
                }
            } else if j - i >= x + 1 - np {
                (np, j + np - i)
            } else {
                (i - j + x + 1, x + 1)
            }
        } else if upper {
            if i + j <= x + 2 {
                (1, i + j - 1)
            } else {
                (i + j - x - 1, x + 1)
            }
        } else if i - j >= n - x - 1 {
            (n, n - i + j)
        } else {
            (i + x + 1 - j, x + 1)
        }
    };

    let mut clamped = Vec::new();
    let build = |upper: bool, clamped: &mut Vec<usize>| -> VertexMap {
        let mut image = Vec::with_capacity((n * m) as usize);
        for i in 1..=n {
            for j in 1..=m {
                let (pi, pj) = project(i, j, upper);
                let target = if pi >= 1 && pi <= n && pj >= 1 && pj <= m {
                    tree.local_index(grid_id(pi, pj))
                } else {
                    None
                };
                match target {
                    Some(t) => image.push(t),
                    None => {
                        // out-of-tree arithmetic: clamp to the nearest T
                        // vertex and record the event for the tests to flag
                        let v = grid_id(i, j);
                        clamped.push(v);
                        let nearest = tree
                            .vertices()
                            .iter()
                            .copied()
                            .min_by_key(|&t| (grid.dist(v, t), t))
                            .unwrap();
                        image.push(tree.local_index(nearest).unwrap());
                    }
                }
            }
        }
        VertexMap { image }
    };
    let up = build(true, &mut clamped);
    let down = build(false, &mut clamped);

    let switching_area = (1..=x + 1).map(|j| grid_id(np, j)).collect();

    Ok(GridProjections {
        rows,
        cols,
        rho,
        x: x as usize,
        tree,
        origin,
        legs,
        up,
        down,
        switching_area,
        clamped,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn identity_and_constant_maps() {
        let g = families::make_cycle(5);
        let all: Vec<usize> = (0..5).collect();
        let h = SubgraphView::induced(&g, &all).unwrap();
        let id = VertexMap::identity_onto(&g, &h).unwrap();
        assert!(is_weak_homomorphism(&g, &h, &id).unwrap());
        assert!(is_weak_retraction(&g, &h, &id).unwrap());
        let c = VertexMap::constant(&g, 2);
        assert!(is_weak_homomorphism(&g, &h, &c).unwrap());
        assert!(!is_weak_retraction(&g, &h, &c).unwrap());
    }

    #[test]
    fn tree_projection_onto_triod() {
        // a triod with one extra pendant hair on a leg vertex
        let spider = families::make_triod(3, 3, 3);
        let mut edges = spider.edges();
        edges.push((2, 10));
        let t = Graph::from_edges(11, &edges).unwrap();
        let triod_vertices: Vec<usize> = (0..10).collect();
        let h = SubgraphView::induced(&t, &triod_vertices).unwrap();
        let phi = closest_vertex_projection(&t, &h).unwrap();
        assert!(is_weak_retraction(&t, &h, &phi).unwrap());
        assert_eq!(phi.image[10], h.local_index(2).unwrap());
    }

    #[test]
    fn projection_on_triod_itself_is_identity() {
        let spider = families::make_triod(2, 2, 2);
        let all: Vec<usize> = (0..spider.n()).collect();
        let h = SubgraphView::induced(&spider, &all).unwrap();
        let phi = closest_vertex_projection(&spider, &h).unwrap();
        assert_eq!(phi, VertexMap::identity_onto(&spider, &h).unwrap());
    }

    #[test]
    fn composition_of_weak_homomorphisms() {
        // g -> triod -> its middle edge; composing stays weak
        let spider = families::make_triod(2, 2, 2);
        let mut edges = spider.edges();
        edges.push((1, 7));
        let g = Graph::from_edges(8, &edges).unwrap();
        let triod: Vec<usize> = (0..7).collect();
        let h1 = SubgraphView::induced(&g, &triod).unwrap();
        let phi1 = nearest_vertex_projection(&g, &h1);
        assert!(is_weak_homomorphism(&g, &h1, &phi1).unwrap());
        let sub: Vec<usize> = vec![0, 1];
        let h2 = SubgraphView::induced(&g, &sub).unwrap();
        let phi2_on_h1 = nearest_vertex_projection(h1.local(), &{
            let local_sub: Vec<usize> = sub.iter().map(|&v| h1.local_index(v).unwrap()).collect();
            SubgraphView::induced(h1.local(), &local_sub).unwrap()
        });
        let composed = VertexMap {
            image: (0..g.n()).map(|v| phi2_on_h1.image[phi1.image[v]]).collect(),
        };
        assert!(is_weak_homomorphism(&g, &h2, &composed).unwrap());
    }

    #[test]
    fn lemma_bounds() {
        assert_eq!(lemma_lower_bound(CandidateKind::Triod, 4), 2);
        assert_eq!(lemma_lower_bound(CandidateKind::Triod, 5), 2);
        assert_eq!(lemma_lower_bound(CandidateKind::Triod, 1), 0);
        assert_eq!(lemma_lower_bound(CandidateKind::CliqueTriod, 3), 2);
        assert_eq!(lemma_lower_bound(CandidateKind::CliqueTriod, 1), 1);
    }

    #[test]
    fn retract_bound_on_spider() {
        let spider = families::make_triod(4, 4, 4);
        let (_, info) = families::make_triod_with_info(4, 4, 4);
        let cand = CandidateSubgraph::Triod {
            origin: info.origin,
            legs: info.legs,
        };
        let bound = retract_lower_bound(&spider, &cand).unwrap().unwrap();
        assert_eq!(bound.prediction.value.to_integer(), 2);
    }

    #[test]
    fn grid_projection_parameter_guards() {
        assert!(grid_projections(10, 14, Radius(3)).is_err(), "even rows");
        assert!(grid_projections(11, 14, Radius(1)).is_err(), "x negative");
        assert!(grid_projections(11, 14, Radius(4)).is_err(), "too large rho");
        assert!(grid_projections(11, 10, Radius(3)).is_err(), "rows > cols");
        assert!(grid_projections(11, 14, Radius(3)).is_ok());
        assert!(grid_projections(11, 14, Radius(2)).is_ok(), "x = 1 is fine");
    }

    #[test]
    fn grid_projection_structure() {
        let p = grid_projections(11, 14, Radius(3)).unwrap();
        assert_eq!(p.x, 3);
        assert_eq!(p.legs[LEG_UP].len(), 8);
        assert_eq!(p.legs[LEG_DOWN].len(), 8);
        assert_eq!(p.legs[LEG_RIGHT].len(), 10);
        assert!(p.clamped.is_empty());
        assert_eq!(p.switching_area.len(), 4);
        // switching-area vertices project to equidistant branch points
        let d = |m: &VertexMap, v: usize| p.tree.local().dist(m.image[v], p.origin);
        for &v in &p.switching_area {
            assert_eq!(d(&p.up, v), d(&p.down, v));
        }
    }
}
