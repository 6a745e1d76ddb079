//! Finite simple undirected graphs and the constructions used throughout the
//! crate: paths, cycles, cliques, trees, hypercubes, powers and n-ary
//! Cartesian products.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rational::Rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("a cycle needs at least 3 vertices, got {0}")]
    CycleTooShort(usize),
    #[error("edge list does not form a tree")]
    NotATree,
    #[error("a product needs at least one factor")]
    EmptyProduct,
    #[error("product factor {0} has no vertices")]
    EmptyFactor(usize),
    #[error("cannot parse graph {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

/// Simple undirected graph on vertices `0..n`, stored as sorted adjacency lists.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.vertex_count())
            .field("edges", &self.edges())
            .finish()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list. Repeated edges collapse; loops are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj })
    }

    fn from_adjacency(mut adj: Vec<Vec<usize>>) -> Self {
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Graph { adj }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
            .collect()
    }

    /// BFS distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        self.distances_within(source, usize::MAX)
    }

    fn distances_within(&self, source: usize, radius: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap_or(0);
            if du == radius {
                continue;
            }
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.vertex_count()];
        let mut out = Vec::new();
        for start in 0..self.vertex_count() {
            if seen[start] {
                continue;
            }
            let mut comp = Vec::new();
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(u) = stack.pop() {
                comp.push(u);
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_tree(&self) -> bool {
        self.vertex_count() >= 1
            && self.edge_count() + 1 == self.vertex_count()
            && self.is_connected()
    }

    pub fn is_bipartite(&self) -> bool {
        let mut side: Vec<Option<bool>> = vec![None; self.vertex_count()];
        for start in 0..self.vertex_count() {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap_or(false);
                for &w in &self.adj[u] {
                    match side[w] {
                        None => {
                            side[w] = Some(!su);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    /// Largest finite distance between two vertices of the same component.
    pub fn diameter(&self) -> usize {
        (0..self.vertex_count())
            .filter_map(|v| self.distances_from(v).into_iter().flatten().max())
            .max()
            .unwrap_or(0)
    }

    /// The subgraph induced by `vertices`, relabelled `0..vertices.len()` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter(|&&w| index[w] != usize::MAX)
                    .map(|&w| index[w])
                    .collect()
            })
            .collect();
        Graph::from_adjacency(adj)
    }
}

/// JSON exchange format: `{"n": 3, "edges": [[0, 1], [1, 2]]}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            n: g.vertex_count(),
            edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = GraphError;

    fn try_from(json: GraphJson) -> Result<Self, Self::Error> {
        let edges: Vec<(usize, usize)> = json.edges.iter().map(|e| (e[0], e[1])).collect();
        Graph::from_edges(json.n, &edges)
    }
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        GraphJson::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let json = GraphJson::deserialize(deserializer)?;
        Graph::try_from(json).map_err(serde::de::Error::custom)
    }
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges).expect("path edges are valid")
}

pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::CycleTooShort(n));
    }
    let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

pub fn complete(n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Graph::from_edges(n, &edges).expect("clique edges are valid")
}

/// Star `K_{1,leaves}` with centre 0.
pub fn star(leaves: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (1..=leaves).map(|v| (0, v)).collect();
    Graph::from_edges(leaves + 1, &edges).expect("star edges are valid")
}

/// `Q_d` as the product of `d` copies of `K_2`. `Q_0` is a single vertex.
pub fn hypercube(d: usize) -> Graph {
    if d == 0 {
        return Graph::empty(1);
    }
    let factors = vec![complete(2); d];
    cartesian_product(&factors)
        .expect("K2 factors are nonempty")
        .graph
}

/// `Q_d` built directly: `u ~ v` iff their binary labels differ in one bit.
pub fn hypercube_by_bit_flips(d: usize) -> Graph {
    let n = 1usize << d;
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| {
            (0..d)
                .map(move |b| (u, u ^ (1 << b)))
                .filter(|&(u, v)| u < v)
        })
        .collect();
    Graph::from_edges(n, &edges).expect("hypercube edges are valid")
}

pub fn tree_from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
    let g = Graph::from_edges(n, edges)?;
    if edges.len() + 1 != n || !g.is_tree() {
        return Err(GraphError::NotATree);
    }
    Ok(g)
}

/// `G^k`: vertices adjacent when their distance is at most `k`.
pub fn power(g: &Graph, k: usize) -> Graph {
    let adj = (0..g.vertex_count())
        .map(|v| {
            g.distances_within(v, k)
                .into_iter()
                .enumerate()
                .filter(|&(w, d)| w != v && matches!(d, Some(d) if d <= k))
                .map(|(w, _)| w)
                .collect()
        })
        .collect();
    Graph::from_adjacency(adj)
}

/// Half the average degree, `|E| / |V|`.
pub fn half_average_degree(g: &Graph) -> Rational {
    assert!(
        g.vertex_count() >= 1,
        "half average degree of the null graph"
    );
    Rational::new(g.edge_count() as i64, g.vertex_count() as i64)
}

/// A Cartesian product together with its coordinate bookkeeping.
///
/// Vertex ids are the row-major flattening of coordinate tuples, factor 0 slowest.
#[derive(Clone, Debug)]
pub struct ProductGraph {
    pub factors: Vec<Graph>,
    pub graph: Graph,
    sizes: Vec<usize>,
    strides: Vec<usize>,
}

impl ProductGraph {
    pub fn dimension(&self) -> usize {
        self.factors.len()
    }

    pub fn coord_of(&self, v: usize) -> Vec<usize> {
        self.sizes
            .iter()
            .zip(&self.strides)
            .map(|(&size, &stride)| (v / stride) % size)
            .collect()
    }

    pub fn vertex_of(&self, coords: &[usize]) -> usize {
        coords
            .iter()
            .zip(&self.strides)
            .map(|(&c, &stride)| c * stride)
            .sum()
    }

    /// The dimension an edge lies in, or `None` if `(u, v)` is not an edge.
    pub fn dimension_of_edge(&self, u: usize, v: usize) -> Option<usize> {
        if !self.graph.has_edge(u, v) {
            return None;
        }
        let (cu, cv) = (self.coord_of(u), self.coord_of(v));
        let mut differing = (0..cu.len()).filter(|&i| cu[i] != cv[i]);
        let i = differing.next()?;
        debug_assert!(differing.next().is_none());
        Some(i)
    }
}

pub fn cartesian_product(factors: &[Graph]) -> Result<ProductGraph, GraphError> {
    if factors.is_empty() {
        return Err(GraphError::EmptyProduct);
    }
    if let Some(i) = factors.iter().position(|g| g.vertex_count() == 0) {
        return Err(GraphError::EmptyFactor(i));
    }
    let sizes: Vec<usize> = factors.iter().map(Graph::vertex_count).collect();
    let mut strides = vec![1usize; sizes.len()];
    for i in (0..sizes.len().saturating_sub(1)).rev() {
        strides[i] = strides[i + 1] * sizes[i + 1];
    }
    let n: usize = sizes.iter().product();
    let mut adj = vec![Vec::new(); n];
    for (v, list) in adj.iter_mut().enumerate() {
        for (i, factor) in factors.iter().enumerate() {
            let ci = (v / strides[i]) % sizes[i];
            let base = v - ci * strides[i];
            list.extend(factor.neighbors(ci).iter().map(|&w| base + w * strides[i]));
        }
    }
    Ok(ProductGraph {
        factors: factors.to_vec(),
        graph: Graph::from_adjacency(adj),
        sizes,
        strides,
    })
}

/// An ordering of `C_n`'s vertices along a path such that every cycle edge
/// joins vertices at most two positions apart: `(0, n-1, 1, n-2, ...)`.
///
/// `order[position]` is the cycle vertex placed at that position.
pub fn cycle_in_path_square_order(n: usize) -> Result<Vec<usize>, GraphError> {
    if n < 3 {
        return Err(GraphError::CycleTooShort(n));
    }
    let mut order = Vec::with_capacity(n);
    for i in 0..n / 2 {
        order.push(i);
        order.push(n - 1 - i);
    }
    if n % 2 == 1 {
        order.push(n / 2);
    }
    Ok(order)
}

/// Largest position gap across an edge of `g` when its vertices are laid out in `order`.
pub fn layout_stretch(g: &Graph, order: &[usize]) -> usize {
    let mut position = vec![0usize; g.vertex_count()];
    for (pos, &v) in order.iter().enumerate() {
        position[v] = pos;
    }
    g.edges()
        .into_iter()
        .map(|(u, v)| position[u].abs_diff(position[v]))
        .max()
        .unwrap_or(0)
}

/// Base graph of one factor in a shorthand expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BaseGraph {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Hypercube(usize),
    Star(usize),
    Explicit(Graph),
}

impl BaseGraph {
    pub fn build(&self) -> Result<Graph, GraphError> {
        Ok(match self {
            BaseGraph::Path(n) => path(*n),
            BaseGraph::Cycle(n) => cycle(*n)?,
            BaseGraph::Complete(n) => complete(*n),
            BaseGraph::Hypercube(d) => hypercube(*d),
            BaseGraph::Star(l) => star(*l),
            BaseGraph::Explicit(g) => g.clone(),
        })
    }
}

/// One factor `base^power`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorExpr {
    pub base: BaseGraph,
    pub power: usize,
}

impl FactorExpr {
    pub fn build(&self) -> Result<Graph, GraphError> {
        let g = self.base.build()?;
        Ok(if self.power == 1 {
            g
        } else {
            power(&g, self.power)
        })
    }
}

/// A product of factors, parsed from shorthand such as `P3xP3xC5` or `P5^2`.
///
/// Recognised bases are `P<n>`, `C<n>`, `K<n>`, `Q<d>` and `S<leaves>` (a star);
/// `^k` binds tighter than `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphExpr {
    pub factors: Vec<FactorExpr>,
}

impl GraphExpr {
    pub fn single(g: Graph) -> Self {
        GraphExpr {
            factors: vec![FactorExpr {
                base: BaseGraph::Explicit(g),
                power: 1,
            }],
        }
    }

    pub fn factor_graphs(&self) -> Result<Vec<Graph>, GraphError> {
        self.factors.iter().map(FactorExpr::build).collect()
    }

    pub fn build(&self) -> Result<ProductGraph, GraphError> {
        cartesian_product(&self.factor_graphs()?)
    }
}

impl FromStr for GraphExpr {
    type Err = GraphError;

    fn from_str(input: &str) -> Result<Self, Self::Err> {
        let trimmed = input.trim();
        let err = |reason: &str| GraphError::Parse {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        if trimmed.starts_with('{') {
            let g: Graph = serde_json::from_str(trimmed).map_err(|e| err(&e.to_string()))?;
            return Ok(GraphExpr::single(g));
        }
        let mut factors = Vec::new();
        for token in trimmed.split(['x', 'X', '*']) {
            let token = token.trim();
            if token.is_empty() {
                return Err(err("empty factor"));
            }
            let (base, exp) = match token.split_once('^') {
                Some((b, e)) => (b, e.parse::<usize>().map_err(|_| err("bad exponent"))?),
                None => (token, 1),
            };
            if exp == 0 {
                return Err(err("exponent must be positive"));
            }
            let mut chars = base.chars();
            let letter = chars.next().ok_or_else(|| err("empty factor"))?;
            let size: usize = chars
                .as_str()
                .parse()
                .map_err(|_| err("expected a size after the graph letter"))?;
            let base = match letter.to_ascii_uppercase() {
                'P' if size >= 1 => BaseGraph::Path(size),
                'C' if size >= 3 => BaseGraph::Cycle(size),
                'K' if size >= 1 => BaseGraph::Complete(size),
                'Q' => BaseGraph::Hypercube(size),
                'S' => BaseGraph::Star(size),
                'P' | 'C' | 'K' => return Err(err("size too small")),
                _ => return Err(err("unknown graph letter")),
            };
            factors.push(FactorExpr { base, power: exp });
        }
        Ok(GraphExpr { factors })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_constructions() {
        assert_eq!(path(3).edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(hypercube(2), cycle(4).unwrap().induced(&[0, 1, 3, 2]));
        assert_eq!(cycle(3).unwrap(), complete(3));
        assert_eq!(cycle(2), Err(GraphError::CycleTooShort(2)));
        assert_eq!(hypercube(0).vertex_count(), 1);
    }

    #[test]
    fn hypercube_matches_bit_flips() {
        for d in 1..=5 {
            assert_eq!(hypercube(d), hypercube_by_bit_flips(d), "d = {d}");
        }
    }

    #[test]
    fn from_edges_validation() {
        assert_eq!(
            Graph::from_edges(2, &[(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })
        );
        assert_eq!(
            Graph::from_edges(2, &[(1, 1)]),
            Err(GraphError::SelfLoop(1))
        );
        let g = Graph::from_edges(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn trees() {
        assert!(tree_from_edges(4, &[(0, 1), (0, 2), (0, 3)]).is_ok());
        assert_eq!(
            tree_from_edges(4, &[(0, 1), (1, 2), (2, 0)]),
            Err(GraphError::NotATree)
        );
        assert_eq!(
            tree_from_edges(4, &[(0, 1), (2, 3)]),
            Err(GraphError::NotATree)
        );
        assert!(tree_from_edges(1, &[]).is_ok());
    }

    #[test]
    fn powers() {
        let p52 = power(&path(5), 2);
        assert_eq!(p52.neighbors(2), &[0, 1, 3, 4]);
        assert_eq!(power(&path(5), 4), complete(5));
        let c62 = power(&cycle(6).unwrap(), 2);
        assert!((0..6).all(|v| c62.degree(v) == 4));
        assert_eq!(power(&path(4), 1), path(4));
        // no edges appear between components
        let two = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(power(&two, 3), two);
    }

    #[test]
    fn products() {
        let p = cartesian_product(&[path(2), path(2)]).unwrap();
        assert_eq!(p.graph.edge_count(), 4);
        assert!((0..4).all(|v| p.graph.degree(v) == 2));
        let p = cartesian_product(&[path(3), path(3)]).unwrap();
        assert_eq!(p.graph.vertex_count(), 9);
        assert_eq!(p.graph.edge_count(), 12);
        assert_eq!(p.coord_of(5), vec![1, 2]);
        assert_eq!(p.vertex_of(&[2, 1]), 7);
        assert_eq!(p.dimension_of_edge(0, 3), Some(0));
        assert_eq!(p.dimension_of_edge(0, 1), Some(1));
        assert_eq!(p.dimension_of_edge(0, 4), None);
        assert_eq!(
            cartesian_product(&[]).unwrap_err(),
            GraphError::EmptyProduct
        );
        assert_eq!(
            cartesian_product(&[path(2), Graph::empty(0)]).unwrap_err(),
            GraphError::EmptyFactor(1)
        );
    }

    #[test]
    fn cycle_orderings() {
        assert_eq!(cycle_in_path_square_order(4).unwrap(), vec![0, 3, 1, 2]);
        assert_eq!(
            cycle_in_path_square_order(6).unwrap(),
            vec![0, 5, 1, 4, 2, 3]
        );
        assert_eq!(cycle_in_path_square_order(3).unwrap().len(), 3);
        for n in 3..=50 {
            let order = cycle_in_path_square_order(n).unwrap();
            assert!(layout_stretch(&cycle(n).unwrap(), &order) <= 2, "n = {n}");
        }
    }

    #[test]
    fn half_average_degrees() {
        assert_eq!(half_average_degree(&path(4)), Rational::new(3, 4));
        let p = cartesian_product(&[path(3), path(3)]).unwrap();
        assert_eq!(half_average_degree(&p.graph), Rational::new(4, 3));
        assert_eq!(half_average_degree(&cycle(5).unwrap()), Rational::one());
    }

    #[test]
    fn parse_shorthand() {
        let e: GraphExpr = "P3xP3xC5".parse().unwrap();
        assert_eq!(e.factors.len(), 3);
        assert_eq!(e.factors[2].base, BaseGraph::Cycle(5));
        let e: GraphExpr = "P5^2".parse().unwrap();
        assert_eq!(e.build().unwrap().graph, power(&path(5), 2));
        let e: GraphExpr = "Q3".parse().unwrap();
        assert_eq!(e.build().unwrap().graph, hypercube(3));
        let e: GraphExpr = r#"{"n": 3, "edges": [[0, 1], [1, 2]]}"#.parse().unwrap();
        assert_eq!(e.build().unwrap().graph, path(3));
        assert!("C2".parse::<GraphExpr>().is_err());
        assert!("Z4".parse::<GraphExpr>().is_err());
        assert!("P3xx".parse::<GraphExpr>().is_err());
        assert!("P3^0".parse::<GraphExpr>().is_err());
    }

    #[test]
    fn json_roundtrip() {
        let g = cycle(5).unwrap();
        let text = serde_json::to_string(&g).unwrap();
        assert_eq!(text, r#"{"n":5,"edges":[[0,1],[0,4],[1,2],[2,3],[3,4]]}"#);
        let back: Graph = serde_json::from_str(&text).unwrap();
        assert_eq!(back, g);
        assert!(serde_json::from_str::<Graph>(r#"{"n":1,"edges":[[0,0]]}"#).is_err());
    }
}
