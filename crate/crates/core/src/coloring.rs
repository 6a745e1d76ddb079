//! F-free colourings: checkers, span metrics, L(p,1) labellings and exact
//! exponential solvers for small graphs.
//!
//! A colouring is a map from vertices to integers. It is F-free when it is
//! proper and no subgraph isomorphic to a member of the forbidden family uses
//! only two colours. The solvers here are the ground truth the constructive
//! pipelines are checked against, so each one re-validates its witness through
//! the independent checkers before returning it.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::budget::{Budget, NodeCounter};
use crate::graphs::{cycle, path, power, Graph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoringError {
    #[error("colouring has {got} entries but the graph has {expected} vertices")]
    LengthMismatch { expected: usize, got: usize },
    #[error("colouring is not proper")]
    NotProper,
    #[error("invalid forbidden family: {0}")]
    InvalidFamily(String),
    #[error("graph has no edges")]
    Edgeless,
    #[error("separation p must be at least 1")]
    ZeroSeparation,
    #[error("node budget exhausted after {nodes} nodes; best upper bound {upper_bound}")]
    BudgetExceeded {
        nodes: u64,
        upper_bound: u64,
        witness: Coloring,
    },
}

/// Vertex colours, indexed by vertex id. JSON form: `{"colors": [c0, c1, ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Coloring {
    pub colors: Vec<i64>,
}

impl Coloring {
    pub fn new(colors: Vec<i64>) -> Self {
        Coloring { colors }
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn get(&self, v: usize) -> i64 {
        self.colors[v]
    }

    /// Number of distinct colours used.
    pub fn colour_count(&self) -> usize {
        let mut c = self.colors.clone();
        c.sort_unstable();
        c.dedup();
        c.len()
    }

    /// `max - min` over all vertices (0 for the empty colouring).
    pub fn range(&self) -> u64 {
        match (self.colors.iter().min(), self.colors.iter().max()) {
            (Some(lo), Some(hi)) => hi.abs_diff(*lo),
            _ => 0,
        }
    }

    /// Shifts all colours so the minimum is 0.
    pub fn normalised(&self) -> Coloring {
        let lo = self.colors.iter().copied().min().unwrap_or(0);
        Coloring::new(self.colors.iter().map(|c| c - lo).collect())
    }
}

impl From<Vec<i64>> for Coloring {
    fn from(colors: Vec<i64>) -> Self {
        Coloring::new(colors)
    }
}

/// The forbidden bichromatic subgraphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ForbiddenFamily {
    /// Distance-2 colourings.
    P3,
    /// Star colourings.
    P4,
    /// Acyclic colourings: all even cycles.
    EvenCycles,
    /// An explicit list; the empty list means plain proper colouring.
    Explicit(Vec<Graph>),
}

impl ForbiddenFamily {
    /// Plain proper colouring.
    pub fn none() -> Self {
        ForbiddenFamily::Explicit(Vec::new())
    }

    /// Each explicit member must be connected, bipartite and have at least three vertices.
    pub fn validate(&self) -> Result<(), ColoringError> {
        if let ForbiddenFamily::Explicit(list) = self {
            for (i, h) in list.iter().enumerate() {
                if h.vertex_count() < 3 {
                    return Err(ColoringError::InvalidFamily(format!(
                        "member {i} has fewer than three vertices"
                    )));
                }
                if !h.is_connected() {
                    return Err(ColoringError::InvalidFamily(format!(
                        "member {i} is disconnected"
                    )));
                }
                if !h.is_bipartite() {
                    return Err(ColoringError::InvalidFamily(format!(
                        "member {i} is not bipartite"
                    )));
                }
            }
        }
        Ok(())
    }

    /// The explicit equivalent of this family on graphs with at most `n` vertices.
    pub fn to_explicit(&self, n: usize) -> ForbiddenFamily {
        match self {
            ForbiddenFamily::P3 => ForbiddenFamily::Explicit(vec![path(3)]),
            ForbiddenFamily::P4 => ForbiddenFamily::Explicit(vec![path(4)]),
            ForbiddenFamily::EvenCycles => ForbiddenFamily::Explicit(
                (2..=n / 2)
                    .map(|h| cycle(2 * h).expect("even cycle length >= 4"))
                    .collect(),
            ),
            ForbiddenFamily::Explicit(list) => ForbiddenFamily::Explicit(list.clone()),
        }
    }
}

impl fmt::Display for ForbiddenFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ForbiddenFamily::P3 => f.write_str("p3"),
            ForbiddenFamily::P4 => f.write_str("p4"),
            ForbiddenFamily::EvenCycles => f.write_str("acyclic"),
            ForbiddenFamily::Explicit(list) if list.is_empty() => f.write_str("none"),
            ForbiddenFamily::Explicit(list) => write!(f, "explicit({} graphs)", list.len()),
        }
    }
}

impl FromStr for ForbiddenFamily {
    type Err = String;

    /// Parses `p3`, `p4`, `acyclic` (or `even-cycles`) and `none`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "p3" => Ok(ForbiddenFamily::P3),
            "p4" | "star" => Ok(ForbiddenFamily::P4),
            "acyclic" | "even-cycles" | "c" => Ok(ForbiddenFamily::EvenCycles),
            "none" | "proper" => Ok(ForbiddenFamily::none()),
            other => Err(format!(
                "unknown family {other:?}; expected p3, p4, acyclic or none"
            )),
        }
    }
}

fn check_len(g: &Graph, c: &Coloring) -> Result<(), ColoringError> {
    if c.len() != g.vertex_count() {
        return Err(ColoringError::LengthMismatch {
            expected: g.vertex_count(),
            got: c.len(),
        });
    }
    Ok(())
}

pub fn is_proper(g: &Graph, c: &Coloring) -> Result<bool, ColoringError> {
    check_len(g, c)?;
    Ok(g.edges().into_iter().all(|(u, v)| c.get(u) != c.get(v)))
}

/// Largest colour difference across an edge; 0 for edgeless graphs.
pub fn span(g: &Graph, c: &Coloring) -> Result<u64, ColoringError> {
    if !is_proper(g, c)? {
        return Err(ColoringError::NotProper);
    }
    Ok(edge_span(g, c))
}

fn edge_span(g: &Graph, c: &Coloring) -> u64 {
    g.edges()
        .into_iter()
        .map(|(u, v)| c.get(u).abs_diff(c.get(v)))
        .max()
        .unwrap_or(0)
}

/// Whether a proper colouring has no bichromatic member of `family`.
pub fn is_f_free(g: &Graph, c: &Coloring, family: &ForbiddenFamily) -> Result<bool, ColoringError> {
    family.validate()?;
    if !is_proper(g, c)? {
        return Err(ColoringError::NotProper);
    }
    Ok(match family {
        ForbiddenFamily::P3 => p3_free(g, c),
        ForbiddenFamily::P4 => p4_free(g, c),
        ForbiddenFamily::EvenCycles => bichromatic_forests(g, c),
        ForbiddenFamily::Explicit(list) => {
            let colours: Vec<Option<i64>> = c.colors.iter().copied().map(Some).collect();
            list.iter()
                .all(|h| !contains_bichromatic_copy(g, &colours, h, None))
        }
    })
}

/// No vertex sees one colour twice among its neighbours.
fn p3_free(g: &Graph, c: &Coloring) -> bool {
    (0..g.vertex_count()).all(|v| {
        let mut seen: Vec<i64> = g.neighbors(v).iter().map(|&w| c.get(w)).collect();
        let before = seen.len();
        seen.sort_unstable();
        seen.dedup();
        seen.len() == before
    })
}

/// No edge `uv` where `u` has another neighbour coloured like `v` and `v`
/// has another neighbour coloured like `u`; that is exactly a bichromatic `P4`.
fn p4_free(g: &Graph, c: &Coloring) -> bool {
    let count = |x: usize, colour: i64| {
        g.neighbors(x)
            .iter()
            .filter(|&&w| c.get(w) == colour)
            .count()
    };
    g.edges()
        .into_iter()
        .all(|(u, v)| count(u, c.get(v)) < 2 || count(v, c.get(u)) < 2)
}

/// Every two-colour edge class is a forest.
fn bichromatic_forests(g: &Graph, c: &Coloring) -> bool {
    let mut classes: HashMap<(i64, i64), Vec<(usize, usize)>> = HashMap::new();
    for (u, v) in g.edges() {
        let key = (c.get(u).min(c.get(v)), c.get(u).max(c.get(v)));
        classes.entry(key).or_default().push((u, v));
    }
    let mut parent: Vec<usize> = (0..g.vertex_count()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for edges in classes.values() {
        for &(u, v) in edges {
            parent[u] = u;
            parent[v] = v;
        }
        for &(u, v) in edges {
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru == rv {
                return false;
            }
            parent[ru] = rv;
        }
    }
    true
}

/// Searches for a copy of `h` (not necessarily induced) among coloured vertices
/// of `g` that uses exactly two colours. With `anchor`, the copy must use that vertex.
fn contains_bichromatic_copy(
    g: &Graph,
    colours: &[Option<i64>],
    h: &Graph,
    anchor: Option<usize>,
) -> bool {
    let roots: Vec<usize> = if anchor.is_some() {
        (0..h.vertex_count()).collect()
    } else {
        vec![0]
    };
    for root in roots {
        let plan = EmbeddingPlan::new(h, root);
        let images: Vec<usize> = match anchor {
            Some(a) => vec![a],
            None => (0..g.vertex_count()).collect(),
        };
        for image in images {
            if colours[image].is_none() {
                continue;
            }
            let mut map = vec![usize::MAX; h.vertex_count()];
            map[root] = image;
            let mut side_colour = [colours[image], None];
            if plan.extend(g, colours, h, 1, &mut map, &mut side_colour) {
                return true;
            }
        }
    }
    false
}

/// BFS order of a pattern graph with parents and bipartition sides.
struct EmbeddingPlan {
    order: Vec<usize>,
    parent: Vec<usize>,
    side: Vec<usize>,
}

impl EmbeddingPlan {
    fn new(h: &Graph, root: usize) -> Self {
        let n = h.vertex_count();
        let mut order = vec![root];
        let mut parent = vec![usize::MAX; n];
        let mut side = vec![usize::MAX; n];
        side[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &w in h.neighbors(u) {
                if side[w] == usize::MAX {
                    side[w] = 1 - side[u];
                    parent[w] = u;
                    order.push(w);
                    queue.push_back(w);
                }
            }
        }
        EmbeddingPlan {
            order,
            parent,
            side,
        }
    }

    fn extend(
        &self,
        g: &Graph,
        colours: &[Option<i64>],
        h: &Graph,
        idx: usize,
        map: &mut [usize],
        side_colour: &mut [Option<i64>; 2],
    ) -> bool {
        if idx == self.order.len() {
            return true;
        }
        let u = self.order[idx];
        let side = self.side[u];
        let anchor_image = map[self.parent[u]];
        for &w in g.neighbors(anchor_image) {
            let Some(cw) = colours[w] else { continue };
            if map.contains(&w) {
                continue;
            }
            match side_colour[side] {
                Some(required) if required != cw => continue,
                _ => {}
            }
            let consistent = h
                .neighbors(u)
                .iter()
                .all(|&x| map[x] == usize::MAX || g.has_edge(map[x], w));
            if !consistent {
                continue;
            }
            let fresh_side = side_colour[side].is_none();
            side_colour[side] = Some(cw);
            map[u] = w;
            if self.extend(g, colours, h, idx + 1, map, side_colour) {
                return true;
            }
            map[u] = usize::MAX;
            if fresh_side {
                side_colour[side] = None;
            }
        }
        false
    }
}

/// Whether `c` is an L(p,1)-labelling: P3-free and adjacent labels at least `p` apart.
pub fn is_lp1_labelling(g: &Graph, c: &Coloring, p: u64) -> Result<bool, ColoringError> {
    if p == 0 {
        return Err(ColoringError::ZeroSeparation);
    }
    check_len(g, c)?;
    let separated = g
        .edges()
        .into_iter()
        .all(|(u, v)| c.get(u).abs_diff(c.get(v)) >= p);
    Ok(separated && p3_free(g, c))
}

/// Largest label difference across an edge.
pub fn lp1_span(g: &Graph, c: &Coloring) -> Result<u64, ColoringError> {
    check_len(g, c)?;
    Ok(edge_span(g, c))
}

/// `max label - min label`.
pub fn lp1_range(g: &Graph, c: &Coloring) -> Result<u64, ColoringError> {
    check_len(g, c)?;
    Ok(c.range())
}

/// `floor(|E|/|V| + 1) + 1`, a lower bound on the acyclic chromatic number.
pub fn acyclic_lower_bound(g: &Graph) -> Result<u64, ColoringError> {
    if g.edge_count() == 0 {
        return Err(ColoringError::Edgeless);
    }
    Ok((g.edge_count() / g.vertex_count()) as u64 + 2)
}

/// An optimum value together with a witness colouring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Optimum {
    pub value: u64,
    pub coloring: Coloring,
}

/// Incremental feasibility test used by the searches: after colouring `v`,
/// reports whether some forbidden configuration now lies entirely on coloured
/// vertices and contains `v`.
struct LocalChecker<'a> {
    g: &'a Graph,
    family: &'a ForbiddenFamily,
    square: Option<Graph>,
    min_separation: u64,
}

impl<'a> LocalChecker<'a> {
    fn new(g: &'a Graph, family: &'a ForbiddenFamily, min_separation: u64) -> Self {
        let square = matches!(family, ForbiddenFamily::P3).then(|| power(g, 2));
        LocalChecker {
            g,
            family,
            square,
            min_separation,
        }
    }

    /// Adjacency the colour must differ across.
    fn conflict_graph(&self) -> &Graph {
        self.square.as_ref().unwrap_or(self.g)
    }

    fn admissible(&self, colours: &[Option<i64>], v: usize) -> bool {
        let Some(cv) = colours[v] else { return true };
        for &w in self.g.neighbors(v) {
            if let Some(cw) = colours[w] {
                if cv.abs_diff(cw) < self.min_separation {
                    return false;
                }
            }
        }
        match self.family {
            ForbiddenFamily::P3 => self
                .conflict_graph()
                .neighbors(v)
                .iter()
                .all(|&w| colours[w] != Some(cv)),
            ForbiddenFamily::P4 => !self.p4_through(colours, v),
            ForbiddenFamily::EvenCycles => !self.cycle_through(colours, v),
            ForbiddenFamily::Explicit(list) => list
                .iter()
                .all(|h| !contains_bichromatic_copy(self.g, colours, h, Some(v))),
        }
    }

    fn p4_through(&self, colours: &[Option<i64>], v: usize) -> bool {
        let g = self.g;
        let cv = colours[v];
        // v at an end: v - a - b - c
        for &a in g.neighbors(v) {
            let ca = colours[a];
            if ca.is_none() {
                continue;
            }
            for &b in g.neighbors(a) {
                if b == v || colours[b] != cv {
                    continue;
                }
                if g.neighbors(b).iter().any(|&c| c != a && colours[c] == ca) {
                    return true;
                }
            }
        }
        // v inside: a - v - b - c
        for &b in g.neighbors(v) {
            let cb = colours[b];
            if cb.is_none() {
                continue;
            }
            let has_twin = g.neighbors(v).iter().any(|&a| a != b && colours[a] == cb);
            if has_twin && g.neighbors(b).iter().any(|&c| c != v && colours[c] == cv) {
                return true;
            }
        }
        false
    }

    fn cycle_through(&self, colours: &[Option<i64>], v: usize) -> bool {
        let g = self.g;
        let cv = colours[v];
        let mut by_colour: HashMap<i64, Vec<usize>> = HashMap::new();
        for &w in g.neighbors(v) {
            if let Some(cw) = colours[w] {
                by_colour.entry(cw).or_default().push(w);
            }
        }
        for (cw, group) in by_colour {
            if group.len() < 2 {
                continue;
            }
            // Are two members joined by a {cv, cw} path avoiding v?
            let mut seen = vec![false; g.vertex_count()];
            seen[v] = true;
            for &start in &group {
                if seen[start] {
                    return true;
                }
                seen[start] = true;
                let mut queue = VecDeque::from([start]);
                while let Some(x) = queue.pop_front() {
                    for &y in g.neighbors(x) {
                        if seen[y] {
                            continue;
                        }
                        let cy = colours[y];
                        if cy == cv || cy == Some(cw) {
                            if group.contains(&y) {
                                return true;
                            }
                            seen[y] = true;
                            queue.push_back(y);
                        }
                    }
                }
            }
        }
        false
    }
}

/// Static branching order: highest degree first, then repeatedly the vertex
/// with the most already-ordered neighbours in `conflict`, ties by degree, then id.
fn branching_order(conflict: &Graph) -> Vec<usize> {
    let n = conflict.vertex_count();
    let mut placed = vec![false; n];
    let mut weight = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by(|&a, &b| {
                (weight[a], conflict.degree(a), std::cmp::Reverse(a)).cmp(&(
                    weight[b],
                    conflict.degree(b),
                    std::cmp::Reverse(b),
                ))
            })
            .expect("unplaced vertex remains");
        placed[next] = true;
        order.push(next);
        for &w in conflict.neighbors(next) {
            weight[w] += 1;
        }
    }
    order
}

/// Size of a greedily grown clique, the best over all start vertices.
fn greedy_clique(g: &Graph) -> usize {
    let mut best = usize::from(g.vertex_count() > 0);
    for start in 0..g.vertex_count() {
        let mut clique = vec![start];
        let mut cands: Vec<usize> = g.neighbors(start).to_vec();
        cands.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        for v in cands {
            if clique.iter().all(|&u| g.has_edge(u, v)) {
                clique.push(v);
            }
        }
        best = best.max(clique.len());
    }
    best
}

fn chromatic_lower_bound(g: &Graph, family: &ForbiddenFamily) -> u64 {
    if g.vertex_count() == 0 {
        return 0;
    }
    if g.edge_count() == 0 {
        return 1;
    }
    let mut lb = greedy_clique(g) as u64;
    match family {
        ForbiddenFamily::P3 => {
            lb = lb
                .max(g.max_degree() as u64 + 1)
                .max(greedy_clique(&power(g, 2)) as u64);
        }
        ForbiddenFamily::P4 | ForbiddenFamily::EvenCycles => {
            lb = lb.max(acyclic_lower_bound(g).unwrap_or(2));
        }
        ForbiddenFamily::Explicit(_) => {}
    }
    lb
}

enum Outcome {
    Found,
    Exhausted,
    OutOfBudget,
}

struct ColourSearch<'a> {
    checker: LocalChecker<'a>,
    order: Vec<usize>,
    colours: Vec<Option<i64>>,
    counter: NodeCounter,
}

impl ColourSearch<'_> {
    fn run(&mut self, idx: usize, k: i64, max_used: i64) -> Outcome {
        if idx == self.order.len() {
            return Outcome::Found;
        }
        let v = self.order[idx];
        for c in 0..k.min(max_used + 2) {
            if !self.counter.tick() {
                return Outcome::OutOfBudget;
            }
            self.colours[v] = Some(c);
            if self.checker.admissible(&self.colours, v) {
                match self.run(idx + 1, k, max_used.max(c)) {
                    Outcome::Exhausted => {}
                    done => return done,
                }
            }
        }
        self.colours[v] = None;
        Outcome::Exhausted
    }
}

fn all_distinct(n: usize) -> Coloring {
    Coloring::new((0..n as i64).collect())
}

/// Exact `chi(G, F)` with a witness using exactly that many colours.
///
/// Tries `k = lower bound, lower bound + 1, ...`; colours are interchangeable,
/// so a vertex may only open the next unused colour.
pub fn chromatic_number(
    g: &Graph,
    family: &ForbiddenFamily,
    budget: Budget,
) -> Result<Optimum, ColoringError> {
    family.validate()?;
    let n = g.vertex_count();
    if n == 0 {
        return Ok(Optimum {
            value: 0,
            coloring: Coloring::new(Vec::new()),
        });
    }
    let checker = LocalChecker::new(g, family, 1);
    let order = branching_order(checker.conflict_graph());
    let mut search = ColourSearch {
        checker,
        order,
        colours: vec![None; n],
        counter: NodeCounter::new(budget),
    };
    for k in chromatic_lower_bound(g, family)..=n as u64 {
        search.colours.iter_mut().for_each(|c| *c = None);
        match search.run(0, k as i64, -1) {
            Outcome::Found => {
                let coloring =
                    Coloring::new(search.colours.iter().map(|c| c.unwrap_or(0)).collect());
                debug_assert!(is_f_free(g, &coloring, family).unwrap_or(false));
                return Ok(Optimum { value: k, coloring });
            }
            Outcome::Exhausted => {}
            Outcome::OutOfBudget => {
                return Err(ColoringError::BudgetExceeded {
                    nodes: search.counter.used(),
                    upper_bound: n as u64,
                    witness: all_distinct(n),
                });
            }
        }
    }
    // n distinct colours always work.
    Ok(Optimum {
        value: n as u64,
        coloring: all_distinct(n),
    })
}

/// Searches for labellings where each vertex after the first lies within
/// `limit` of its coloured neighbours, anchored at colour 0.
struct SpanSearch<'a> {
    checker: LocalChecker<'a>,
    order: Vec<usize>,
    colours: Vec<Option<i64>>,
    counter: &'a mut NodeCounter,
}

impl SpanSearch<'_> {
    fn run(&mut self, idx: usize, limit: i64) -> Outcome {
        if idx == self.order.len() {
            return Outcome::Found;
        }
        let v = self.order[idx];
        let g = self.checker.g;
        let assigned: Vec<i64> = g
            .neighbors(v)
            .iter()
            .filter_map(|&w| self.colours[w])
            .collect();
        let (lo, hi) = if assigned.is_empty() {
            (0, 0)
        } else {
            let lo = assigned.iter().max().copied().unwrap_or(0) - limit;
            let hi = assigned.iter().min().copied().unwrap_or(0) + limit;
            // reflecting every colour preserves validity, so the second vertex goes up
            (if idx == 1 { lo.max(1) } else { lo }, hi)
        };
        for c in lo..=hi {
            if !self.counter.tick() {
                return Outcome::OutOfBudget;
            }
            self.colours[v] = Some(c);
            if self.checker.admissible(&self.colours, v) {
                match self.run(idx + 1, limit) {
                    Outcome::Exhausted => {}
                    done => return done,
                }
            }
        }
        self.colours[v] = None;
        Outcome::Exhausted
    }
}

/// BFS order from the highest-degree vertex (lowest id on ties), neighbours by
/// descending degree; every vertex after the first has an earlier neighbour.
fn bfs_order(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    if n == 0 {
        return Vec::new();
    }
    let start = (0..n)
        .max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)))
        .unwrap_or(0);
    let mut seen = vec![false; n];
    seen[start] = true;
    let mut order = vec![start];
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        let mut next: Vec<usize> = g
            .neighbors(u)
            .iter()
            .copied()
            .filter(|&w| !seen[w])
            .collect();
        next.sort_by_key(|&w| (std::cmp::Reverse(g.degree(w)), w));
        for w in next {
            seen[w] = true;
            order.push(w);
            queue.push_back(w);
        }
    }
    order
}

/// Minimum edge span over colourings of one connected graph that pass
/// `family` with adjacent colours at least `min_sep` apart.
fn min_span_connected(
    g: &Graph,
    family: &ForbiddenFamily,
    min_sep: u64,
    start: u64,
    counter: &mut NodeCounter,
) -> Result<Optimum, Coloring> {
    let n = g.vertex_count();
    let order = bfs_order(g);
    let fallback = {
        let mut c = vec![0i64; n];
        for (pos, &v) in order.iter().enumerate() {
            c[v] = pos as i64 * min_sep as i64;
        }
        Coloring::new(c)
    };
    if g.edge_count() == 0 {
        return Ok(Optimum {
            value: 0,
            coloring: Coloring::new(vec![0; n]),
        });
    }
    let ceiling = edge_span(g, &fallback);
    let mut search = SpanSearch {
        checker: LocalChecker::new(g, family, min_sep),
        order,
        colours: vec![None; n],
        counter,
    };
    for limit in start.max(min_sep)..=ceiling {
        search.colours.iter_mut().for_each(|c| *c = None);
        match search.run(0, limit as i64) {
            Outcome::Found => {
                let coloring =
                    Coloring::new(search.colours.iter().map(|c| c.unwrap_or(0)).collect())
                        .normalised();
                return Ok(Optimum {
                    value: edge_span(g, &coloring),
                    coloring,
                });
            }
            Outcome::Exhausted => {}
            Outcome::OutOfBudget => return Err(fallback),
        }
    }
    Ok(Optimum {
        value: ceiling,
        coloring: fallback,
    })
}

/// Solves each component separately and stitches the witnesses together.
fn min_span_by_component(
    g: &Graph,
    family: &ForbiddenFamily,
    min_sep: u64,
    lower_bound: impl Fn(&Graph) -> u64,
    budget: Budget,
) -> Result<Optimum, ColoringError> {
    let mut counter = NodeCounter::new(budget);
    let mut colours = vec![0i64; g.vertex_count()];
    let mut value = 0;
    let mut exhausted = false;
    for comp in g.components() {
        let sub = g.induced(&comp);
        let local = if exhausted {
            Err(Coloring::new(
                (0..comp.len() as i64).map(|i| i * min_sep as i64).collect(),
            ))
        } else {
            min_span_connected(&sub, family, min_sep, lower_bound(&sub), &mut counter)
        };
        let local = match local {
            Ok(opt) => opt.coloring,
            Err(fallback) => {
                exhausted = true;
                fallback
            }
        };
        value = value.max(edge_span(&sub, &local));
        for (i, &v) in comp.iter().enumerate() {
            colours[v] = local.get(i);
        }
    }
    let coloring = Coloring::new(colours);
    if exhausted {
        return Err(ColoringError::BudgetExceeded {
            nodes: counter.used(),
            upper_bound: value,
            witness: coloring,
        });
    }
    Ok(Optimum { value, coloring })
}

/// Exact chromatic span `Λ(G, F)` with a witness.
///
/// Each component is solved on its own with its first vertex anchored at 0;
/// every other vertex is branched within `s` of an already coloured
/// neighbour, so colours stay inside `[0, s·(n_c - 1)]` after normalising.
pub fn chromatic_span(
    g: &Graph,
    family: &ForbiddenFamily,
    budget: Budget,
) -> Result<Optimum, ColoringError> {
    family.validate()?;
    min_span_by_component(
        g,
        family,
        1,
        |sub| {
            let chi_lb = chromatic_lower_bound(sub, family);
            let mut lb = chi_lb.saturating_sub(1).div_ceil(2).max(1);
            if matches!(family, ForbiddenFamily::P3) {
                // a vertex's neighbours need distinct colours within ±s of its own
                lb = lb.max((sub.max_degree() as u64).div_ceil(2));
            }
            lb
        },
        budget,
    )
}

/// Exact `Λ_{p,1}(G)`: minimum edge span over L(p,1)-labellings.
pub fn min_lp1_span(g: &Graph, p: u64, budget: Budget) -> Result<Optimum, ColoringError> {
    if p == 0 {
        return Err(ColoringError::ZeroSeparation);
    }
    let family = ForbiddenFamily::P3;
    min_span_by_component(
        g,
        &family,
        p,
        |sub| p + (sub.max_degree() as u64).div_ceil(2) - 1,
        budget,
    )
}

struct RangeSearch<'a> {
    checker: LocalChecker<'a>,
    order: Vec<usize>,
    colours: Vec<Option<i64>>,
    counter: NodeCounter,
}

impl RangeSearch<'_> {
    fn run(&mut self, idx: usize, range: i64) -> Outcome {
        if idx == self.order.len() {
            return Outcome::Found;
        }
        let v = self.order[idx];
        // c -> range - c preserves validity, so the first label sits in the lower half
        let hi = if idx == 0 { range / 2 } else { range };
        for c in 0..=hi {
            if !self.counter.tick() {
                return Outcome::OutOfBudget;
            }
            self.colours[v] = Some(c);
            if self.checker.admissible(&self.colours, v) {
                match self.run(idx + 1, range) {
                    Outcome::Exhausted => {}
                    done => return done,
                }
            }
        }
        self.colours[v] = None;
        Outcome::Exhausted
    }
}

/// Exact `λ_{p,1}(G)`: minimum label range over L(p,1)-labellings.
pub fn min_lp1_range(g: &Graph, p: u64, budget: Budget) -> Result<Optimum, ColoringError> {
    if p == 0 {
        return Err(ColoringError::ZeroSeparation);
    }
    let n = g.vertex_count();
    if g.edge_count() == 0 {
        return Ok(Optimum {
            value: 0,
            coloring: Coloring::new(vec![0; n]),
        });
    }
    let family = ForbiddenFamily::P3;
    let checker = LocalChecker::new(g, &family, p);
    let order = branching_order(checker.conflict_graph());
    let mut search = RangeSearch {
        checker,
        order,
        colours: vec![None; n],
        counter: NodeCounter::new(budget),
    };
    let ceiling = p * (n as u64 - 1);
    let start = p + g.max_degree() as u64 - 1;
    for range in start..=ceiling {
        search.colours.iter_mut().for_each(|c| *c = None);
        match search.run(0, range as i64) {
            Outcome::Found => {
                let coloring =
                    Coloring::new(search.colours.iter().map(|c| c.unwrap_or(0)).collect())
                        .normalised();
                return Ok(Optimum {
                    value: coloring.range(),
                    coloring,
                });
            }
            Outcome::Exhausted => {}
            Outcome::OutOfBudget => {
                return Err(ColoringError::BudgetExceeded {
                    nodes: search.counter.used(),
                    upper_bound: ceiling,
                    witness: Coloring::new((0..n as i64).map(|i| i * p as i64).collect()),
                });
            }
        }
    }
    Ok(Optimum {
        value: ceiling,
        coloring: Coloring::new((0..n as i64).map(|i| i * p as i64).collect()),
    })
}
