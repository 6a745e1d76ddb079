//! Constructive colourings of Cartesian products.
//!
//! The central device: given F-free colourings `c_i` of the factors with span
//! at most `k`, and a k-multiplicative set `{s_1, ..., s_d}`, the product
//! colouring `c(v) = sum s_i * c_i(v_i)` is F-free with span at most
//! `k * max s_i`. Reducing it modulo `2 * span + 1` then gives an F-free
//! colouring with few colours.

use serde::Serialize;
use thiserror::Error;

use crate::budget::Budget;
use crate::coloring::{
    chromatic_span, is_f_free, is_lp1_labelling, is_proper, lp1_span, min_lp1_span, span, Coloring,
    ColoringError, ForbiddenFamily,
};
use crate::graphs::{
    cartesian_product, cycle, cycle_in_path_square_order, path, power, BaseGraph, FactorExpr,
    Graph, GraphError, ProductGraph,
};
use crate::sidon::{first_elements, SetKind, SidonError, SidonSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error(transparent)]
    Sidon(#[from] SidonError),
    #[error("{factors} factors but {elements} Sidon elements")]
    DimensionMismatch { factors: usize, elements: usize },
    #[error("factor {factor}: {reason}")]
    BadFactorColouring { factor: usize, reason: String },
    #[error("Sidon set is {set_k}-multiplicative but span bound is {k}")]
    SidonParameterTooSmall { set_k: u64, k: u64 },
    #[error("factor {0} is not a tree")]
    NotATree(usize),
    #[error("input colouring {0}")]
    Precondition(String),
    #[error("constructed colouring failed verification: {0}")]
    VerificationFailed(String),
}

/// Inputs to the product construction.
#[derive(Clone, Debug)]
pub struct ProductColoringPlan {
    pub factor_colourings: Vec<Coloring>,
    pub sidon: SidonSet,
    pub family: ForbiddenFamily,
    /// Uniform span bound every factor colouring respects.
    pub k: u64,
}

impl ProductColoringPlan {
    pub fn validate(&self, product: &ProductGraph) -> Result<(), ConstructError> {
        let d = product.dimension();
        if self.factor_colourings.len() != d || self.sidon.len() != d {
            return Err(ConstructError::DimensionMismatch {
                factors: d,
                elements: self.sidon.len().min(self.factor_colourings.len()),
            });
        }
        if self.sidon.k() < self.k {
            return Err(ConstructError::SidonParameterTooSmall {
                set_k: self.sidon.k(),
                k: self.k,
            });
        }
        for (i, (g, c)) in product
            .factors
            .iter()
            .zip(&self.factor_colourings)
            .enumerate()
        {
            let bad = |reason: String| ConstructError::BadFactorColouring { factor: i, reason };
            if !is_proper(g, c).map_err(|e| bad(e.to_string()))? {
                return Err(bad("not proper".into()));
            }
            if !is_f_free(g, c, &self.family)? {
                return Err(bad(format!("not {}-free", self.family)));
            }
            let s = span(g, c)?;
            if s > self.k {
                return Err(bad(format!("span {s} exceeds {}", self.k)));
            }
        }
        Ok(())
    }
}

/// `c(v) = sum s_i * c_i(v_i)`, shifted so the minimum colour is 0.
pub fn key_construction(
    plan: &ProductColoringPlan,
    product: &ProductGraph,
) -> Result<Coloring, ConstructError> {
    plan.validate(product)?;
    Ok(linear_combination(
        &plan.factor_colourings,
        plan.sidon.elements(),
        product,
    ))
}

fn linear_combination(factors: &[Coloring], weights: &[u64], product: &ProductGraph) -> Coloring {
    let n = product.graph.vertex_count();
    let colors = (0..n)
        .map(|v| {
            product
                .coord_of(v)
                .iter()
                .zip(factors.iter().zip(weights))
                .map(|(&x, (c, &s))| s as i64 * c.get(x))
                .sum()
        })
        .collect();
    Coloring::new(colors).normalised()
}

/// Checks `c(v) - c(w) = s_i * (c_i(v_i) - c_i(w_i))` on every product edge.
pub fn edge_differences_match(
    factor_colourings: &[Coloring],
    sidon: &SidonSet,
    product: &ProductGraph,
    c: &Coloring,
) -> bool {
    product.graph.edges().into_iter().all(|(u, v)| {
        let Some(i) = product.dimension_of_edge(u, v) else {
            return false;
        };
        let (cu, cv) = (product.coord_of(u), product.coord_of(v));
        let factor = &factor_colourings[i];
        let expected = sidon.elements()[i] as i64 * (factor.get(cu[i]) - factor.get(cv[i]));
        c.get(u) - c.get(v) == expected
    })
}

/// Reduces a span-`s` F-free colouring modulo `2s + 1`.
pub fn fold_span_to_colours(
    g: &Graph,
    c: &Coloring,
    s: u64,
    family: &ForbiddenFamily,
) -> Result<Coloring, ConstructError> {
    if !is_proper(g, c)? {
        return Err(ConstructError::Precondition("is not proper".into()));
    }
    if !is_f_free(g, c, family)? {
        return Err(ConstructError::Precondition(format!(
            "is not {family}-free"
        )));
    }
    let actual = span(g, c)?;
    if actual > s {
        return Err(ConstructError::Precondition(format!(
            "has span {actual}, more than {s}"
        )));
    }
    let modulus = 2 * s as i64 + 1;
    Ok(Coloring::new(
        c.colors.iter().map(|x| x.rem_euclid(modulus)).collect(),
    ))
}

/// A product factor together with how to colour it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Factor {
    Path(usize),
    /// `P_n^k`
    PathPower {
        n: usize,
        k: usize,
    },
    Cycle(usize),
    /// `C_n^k`
    CyclePower {
        n: usize,
        k: usize,
    },
    /// Coloured by BFS depth from vertex 0.
    Tree(Graph),
    /// Coloured by the exact span solver.
    General(Graph),
}

impl Factor {
    pub fn graph(&self) -> Result<Graph, ConstructError> {
        Ok(match self {
            Factor::Path(n) => path(*n),
            Factor::PathPower { n, k } => power(&path(*n), *k),
            Factor::Cycle(n) => cycle(*n)?,
            Factor::CyclePower { n, k } => power(&cycle(*n)?, *k),
            Factor::Tree(g) | Factor::General(g) => g.clone(),
        })
    }

    /// An injective colouring with small span, when the factor has one built in:
    /// index order for path powers, the path-square layout for cycle powers.
    fn layout_colouring(&self) -> Result<Option<Coloring>, ConstructError> {
        Ok(match self {
            Factor::Path(n) | Factor::PathPower { n, .. } => {
                Some(Coloring::new((0..*n as i64).collect()))
            }
            Factor::Cycle(n) | Factor::CyclePower { n, .. } => {
                let order = cycle_in_path_square_order(*n)?;
                let mut colors = vec![0i64; *n];
                for (pos, &v) in order.iter().enumerate() {
                    colors[v] = pos as i64;
                }
                Some(Coloring::new(colors))
            }
            Factor::Tree(g) => Some(Coloring::new(
                g.distances_from(0)
                    .into_iter()
                    .map(|d| d.unwrap_or(0) as i64)
                    .collect(),
            )),
            Factor::General(_) => None,
        })
    }

    /// An F-free colouring of this factor with small span, and that span.
    pub fn span_colouring(
        &self,
        family: &ForbiddenFamily,
        budget: Budget,
    ) -> Result<(Coloring, u64), ConstructError> {
        let g = self.graph()?;
        if let Some(c) = self.layout_colouring()? {
            if is_f_free(&g, &c, family)? {
                let s = span(&g, &c)?;
                return Ok((c, s));
            }
        }
        let opt = chromatic_span(&g, family, budget)?;
        Ok((opt.coloring, opt.value))
    }

    /// An L(p,1)-labelling with small edge span.
    pub fn lp1_labelling(&self, p: u64, budget: Budget) -> Result<(Coloring, u64), ConstructError> {
        let g = self.graph()?;
        if let Some(c) = self.layout_colouring()? {
            let scaled = Coloring::new(c.colors.iter().map(|x| x * p as i64).collect());
            if is_lp1_labelling(&g, &scaled, p)? {
                let s = lp1_span(&g, &scaled)?;
                return Ok((scaled, s));
            }
        }
        let opt = min_lp1_span(&g, p, budget)?;
        Ok((opt.coloring, opt.value))
    }
}

impl TryFrom<&FactorExpr> for Factor {
    type Error = ConstructError;

    fn try_from(expr: &FactorExpr) -> Result<Self, Self::Error> {
        let k = expr.power;
        Ok(match (&expr.base, k) {
            (BaseGraph::Path(n), 1) => Factor::Path(*n),
            (BaseGraph::Path(n), k) => Factor::PathPower { n: *n, k },
            (BaseGraph::Cycle(n), 1) => Factor::Cycle(*n),
            (BaseGraph::Cycle(n), k) => Factor::CyclePower { n: *n, k },
            (BaseGraph::Star(_), 1) => Factor::Tree(expr.build()?),
            (BaseGraph::Explicit(g), 1) if g.is_tree() => Factor::Tree(g.clone()),
            _ => Factor::General(expr.build()?),
        })
    }
}

/// `2k(kd - k + 1) + 1`, the colour bound obtained from `R_k`.
pub fn r_set_colour_bound(k: u64, d: u64) -> u64 {
    2 * k * (k * d - k + 1) + 1
}

/// `4t + 1` where `t` is the `d`-th smallest element of `T_2`.
pub fn two_grid_colour_bound(d: usize) -> Result<u64, SidonError> {
    let t = first_elements(SetKind::T, 2, d)?
        .max()
        .ok_or(SidonError::NonPositive("d"))?;
    Ok(4 * t + 1)
}

/// Everything a product pipeline produced.
#[derive(Clone, Debug, Serialize)]
pub struct PipelineReport {
    #[serde(skip)]
    pub product: ProductGraph,
    pub strategy: SetKind,
    pub k: u64,
    pub sidon: SidonSet,
    pub factor_spans: Vec<u64>,
    pub factor_colourings: Vec<Coloring>,
    /// The linear-combination colouring before folding.
    pub span_coloring: Coloring,
    pub span: u64,
    /// The folded colouring.
    pub coloring: Coloring,
    pub colour_count: usize,
    /// `2 * k * max S + 1`.
    pub bound: u64,
    /// `2k(kd - k + 1) + 1`.
    pub closed_form_bound: u64,
}

/// Colours a product of factors end to end: factor colourings, the d smallest
/// elements of the chosen k-multiplicative set, the linear combination, then
/// the fold. Both stages are re-checked before returning.
///
/// `k` defaults to the largest factor span; a larger value may be forced.
pub fn product_pipeline(
    factors: &[Factor],
    family: &ForbiddenFamily,
    k: Option<u64>,
    strategy: SetKind,
    budget: Budget,
) -> Result<PipelineReport, ConstructError> {
    family.validate()?;
    let mut graphs = Vec::with_capacity(factors.len());
    let mut colourings = Vec::with_capacity(factors.len());
    let mut spans = Vec::with_capacity(factors.len());
    for f in factors {
        graphs.push(f.graph()?);
        let (c, s) = f.span_colouring(family, budget)?;
        colourings.push(c);
        spans.push(s);
    }
    let needed = spans.iter().copied().max().unwrap_or(0).max(1);
    let k = match k {
        Some(k) if k < needed => {
            return Err(ConstructError::BadFactorColouring {
                factor: spans.iter().position(|&s| s > k).unwrap_or(0),
                reason: format!("needs span {needed}, more than the requested k = {k}"),
            })
        }
        Some(k) => k,
        None => needed,
    };
    let product = cartesian_product(&graphs)?;
    let d = factors.len();
    let sidon = first_elements(strategy, k, d)?;
    let plan = ProductColoringPlan {
        factor_colourings: colourings,
        sidon,
        family: family.clone(),
        k,
    };
    let span_coloring = key_construction(&plan, &product)?;
    let max_s = plan.sidon.max().unwrap_or(1);
    let declared = k * max_s;
    let g = &product.graph;
    if !is_f_free(g, &span_coloring, family)? {
        return Err(ConstructError::VerificationFailed(format!(
            "linear combination is not {family}-free"
        )));
    }
    let actual_span = span(g, &span_coloring)?;
    if actual_span > declared {
        return Err(ConstructError::VerificationFailed(format!(
            "span {actual_span} exceeds k * max S = {declared}"
        )));
    }
    let coloring = fold_span_to_colours(g, &span_coloring, declared, family)?;
    if !is_f_free(g, &coloring, family)? {
        return Err(ConstructError::VerificationFailed(format!(
            "folded colouring is not {family}-free"
        )));
    }
    Ok(PipelineReport {
        strategy,
        k,
        factor_spans: spans,
        factor_colourings: plan.factor_colourings,
        span: actual_span,
        colour_count: coloring.colour_count(),
        bound: 2 * declared + 1,
        closed_form_bound: r_set_colour_bound(k, d as u64),
        sidon: plan.sidon,
        span_coloring,
        coloring,
        product,
    })
}

/// Distance-2 colouring of `C_{n_1}^k x ... x C_{n_d}^k` through the
/// `C_n ⊂ P_n^2` layout: each factor gets a span-`2k` colouring.
pub fn torus_coloring(
    cycle_lengths: &[usize],
    k: usize,
    strategy: SetKind,
    budget: Budget,
) -> Result<PipelineReport, ConstructError> {
    if let Some(&n) = cycle_lengths.iter().find(|&&n| n < 3) {
        return Err(GraphError::CycleTooShort(n).into());
    }
    let factors: Vec<Factor> = cycle_lengths
        .iter()
        .map(|&n| {
            if k == 1 {
                Factor::Cycle(n)
            } else {
                Factor::CyclePower { n, k }
            }
        })
        .collect();
    product_pipeline(
        &factors,
        &ForbiddenFamily::P3,
        Some(2 * k as u64),
        strategy,
        budget,
    )
}

fn depth_colouring(tree: &Graph) -> Coloring {
    Coloring::new(
        tree.distances_from(0)
            .into_iter()
            .map(|d| d.unwrap_or(0) as i64)
            .collect(),
    )
}

fn check_trees(trees: &[Graph]) -> Result<(), ConstructError> {
    match trees.iter().position(|t| !t.is_tree()) {
        Some(i) => Err(ConstructError::NotATree(i)),
        None => Ok(()),
    }
}

/// Acyclic `(d+1)`-colouring of a product of `d` trees:
/// `sum (i+1) * depth_i(v_i)` reduced modulo `d + 1`.
pub fn acyclic_tree_product(trees: &[Graph]) -> Result<(ProductGraph, Coloring), ConstructError> {
    check_trees(trees)?;
    let product = cartesian_product(trees)?;
    let depths: Vec<Coloring> = trees.iter().map(depth_colouring).collect();
    let weights: Vec<u64> = (1..=trees.len() as u64).collect();
    let modulus = trees.len() as i64 + 1;
    let raw = linear_combination(&depths, &weights, &product);
    let coloring = Coloring::new(raw.colors.iter().map(|x| x.rem_euclid(modulus)).collect());
    if !is_f_free(&product.graph, &coloring, &ForbiddenFamily::EvenCycles)? {
        return Err(ConstructError::VerificationFailed(
            "tree product colouring has a bichromatic cycle".into(),
        ));
    }
    Ok((product, coloring))
}

/// Star colouring of a product of `d` trees with at most `2d + 1` colours.
pub fn star_tree_product(trees: &[Graph]) -> Result<PipelineReport, ConstructError> {
    check_trees(trees)?;
    let factors: Vec<Factor> = trees.iter().cloned().map(Factor::Tree).collect();
    product_pipeline(
        &factors,
        &ForbiddenFamily::P4,
        Some(1),
        SetKind::R,
        Budget::default(),
    )
}

/// Inputs to the L(p,1) product construction.
#[derive(Clone, Debug)]
pub struct Lp1Plan {
    pub factor_labellings: Vec<Coloring>,
    pub sidon: SidonSet,
    pub p: u64,
    /// Edge-span bound every factor labelling respects.
    pub k: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Lp1Report {
    /// Linear-combination labelling.
    pub labelling: Coloring,
    pub span: u64,
    /// Labelling reduced modulo `2 * k * max S + 1`.
    pub folded: Coloring,
    pub range: u64,
}

pub fn lp1_key_construction(
    plan: &Lp1Plan,
    product: &ProductGraph,
) -> Result<Lp1Report, ConstructError> {
    let d = product.dimension();
    if plan.factor_labellings.len() != d || plan.sidon.len() != d {
        return Err(ConstructError::DimensionMismatch {
            factors: d,
            elements: plan.sidon.len().min(plan.factor_labellings.len()),
        });
    }
    if plan.sidon.k() < plan.k {
        return Err(ConstructError::SidonParameterTooSmall {
            set_k: plan.sidon.k(),
            k: plan.k,
        });
    }
    for (i, (g, l)) in product
        .factors
        .iter()
        .zip(&plan.factor_labellings)
        .enumerate()
    {
        let bad = |reason: String| ConstructError::BadFactorColouring { factor: i, reason };
        if !is_lp1_labelling(g, l, plan.p).map_err(|e| bad(e.to_string()))? {
            return Err(bad(format!("not an L({},1)-labelling", plan.p)));
        }
        let s = lp1_span(g, l)?;
        if s > plan.k {
            return Err(bad(format!("edge span {s} exceeds {}", plan.k)));
        }
    }
    let g = &product.graph;
    let labelling = linear_combination(&plan.factor_labellings, plan.sidon.elements(), product);
    if !is_lp1_labelling(g, &labelling, plan.p)? {
        return Err(ConstructError::VerificationFailed(
            "linear combination is not an L(p,1)-labelling".into(),
        ));
    }
    let declared = plan.k * plan.sidon.max().unwrap_or(1);
    let modulus = 2 * declared as i64 + 1;
    let folded = Coloring::new(
        labelling
            .colors
            .iter()
            .map(|x| x.rem_euclid(modulus))
            .collect(),
    );
    if !is_lp1_labelling(g, &folded, plan.p)? {
        return Err(ConstructError::VerificationFailed(
            "folded labelling is not an L(p,1)-labelling".into(),
        ));
    }
    Ok(Lp1Report {
        span: lp1_span(g, &labelling)?,
        range: folded.range(),
        labelling,
        folded,
    })
}

/// L(p,1)-labels a product end to end: factor labellings, `k` as the largest
/// factor edge span, the first `d` elements of the chosen set, then
/// [`lp1_key_construction`].
pub fn lp1_pipeline(
    factors: &[Factor],
    p: u64,
    strategy: SetKind,
    budget: Budget,
) -> Result<(ProductGraph, Lp1Plan, Lp1Report), ConstructError> {
    if p == 0 {
        return Err(ColoringError::ZeroSeparation.into());
    }
    let mut graphs = Vec::with_capacity(factors.len());
    let mut labellings = Vec::with_capacity(factors.len());
    let mut k = p;
    for f in factors {
        graphs.push(f.graph()?);
        let (l, s) = f.lp1_labelling(p, budget)?;
        k = k.max(s);
        labellings.push(l);
    }
    let product = cartesian_product(&graphs)?;
    let plan = Lp1Plan {
        factor_labellings: labellings,
        sidon: first_elements(strategy, k, factors.len())?,
        p,
        k,
    };
    let report = lp1_key_construction(&plan, &product)?;
    Ok((product, plan, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::chromatic_number;
    use crate::graphs::{complete, hypercube, star};
    use crate::sidon::{generate_r, SidonSet};

    fn depth(n: usize) -> Coloring {
        Coloring::new((0..n as i64).collect())
    }

    #[test]
    fn key_construction_two_paths() {
        let product = cartesian_product(&[path(3), path(3)]).unwrap();
        let plan = ProductColoringPlan {
            factor_colourings: vec![depth(3), depth(3)],
            sidon: SidonSet::new(1, vec![1, 2]).unwrap(),
            family: ForbiddenFamily::P3,
            k: 1,
        };
        let c = key_construction(&plan, &product).unwrap();
        assert!(span(&product.graph, &c).unwrap() <= 2);
        assert!(is_f_free(&product.graph, &c, &ForbiddenFamily::P3).unwrap());
        // vertex (v1, v2) gets v1 + 2 v2
        assert_eq!(c.get(product.vertex_of(&[2, 1])), 4);
        assert!(edge_differences_match(
            &plan.factor_colourings,
            &plan.sidon,
            &product,
            &c
        ));
    }

    #[test]
    fn key_construction_single_factor() {
        let product = cartesian_product(&[path(4)]).unwrap();
        let plan = ProductColoringPlan {
            factor_colourings: vec![depth(4)],
            sidon: SidonSet::new(1, vec![1]).unwrap(),
            family: ForbiddenFamily::P4,
            k: 1,
        };
        assert_eq!(key_construction(&plan, &product).unwrap(), depth(4));
    }

    #[test]
    fn key_construction_path_squares_with_t2() {
        let f = power(&path(5), 2);
        let product = cartesian_product(&[f.clone(), f.clone(), f]).unwrap();
        let sidon = first_elements(SetKind::T, 2, 3).unwrap();
        assert_eq!(sidon.elements(), &[1, 3, 4]);
        let plan = ProductColoringPlan {
            factor_colourings: vec![depth(5), depth(5), depth(5)],
            sidon,
            family: ForbiddenFamily::P3,
            k: 2,
        };
        let c = key_construction(&plan, &product).unwrap();
        assert!(span(&product.graph, &c).unwrap() <= 8);
        assert!(is_f_free(&product.graph, &c, &ForbiddenFamily::P3).unwrap());
    }

    #[test]
    fn key_construction_rejects_bad_plans() {
        let product = cartesian_product(&[path(3), path(3)]).unwrap();
        let mut plan = ProductColoringPlan {
            factor_colourings: vec![depth(3)],
            sidon: SidonSet::new(1, vec![1, 2]).unwrap(),
            family: ForbiddenFamily::P3,
            k: 1,
        };
        assert!(matches!(
            key_construction(&plan, &product),
            Err(ConstructError::DimensionMismatch { .. })
        ));
        plan.factor_colourings = vec![depth(3), Coloring::new(vec![0, 1, 0])];
        assert!(matches!(
            key_construction(&plan, &product),
            Err(ConstructError::BadFactorColouring { factor: 1, .. })
        ));
        plan.factor_colourings = vec![depth(3), depth(3)];
        plan.k = 2;
        assert!(matches!(
            key_construction(&plan, &product),
            Err(ConstructError::SidonParameterTooSmall { .. })
        ));
    }

    #[test]
    fn fold_examples() {
        let c = fold_span_to_colours(&path(9), &depth(9), 1, &ForbiddenFamily::P3).unwrap();
        assert_eq!(c.colors, (0..9).map(|i| i % 3).collect::<Vec<_>>());
        assert!(is_f_free(&path(9), &c, &ForbiddenFamily::P3).unwrap());

        let edgeless = Graph::empty(4);
        let zero = Coloring::new(vec![0; 4]);
        assert_eq!(
            fold_span_to_colours(&edgeless, &zero, 0, &ForbiddenFamily::P4).unwrap(),
            zero
        );

        let p72 = power(&path(7), 2);
        let c = fold_span_to_colours(&p72, &depth(7), 2, &ForbiddenFamily::P3).unwrap();
        assert_eq!(c.colour_count(), 5);
        assert!(is_f_free(&p72, &c, &ForbiddenFamily::P3).unwrap());

        assert!(matches!(
            fold_span_to_colours(&path(3), &depth(3), 0, &ForbiddenFamily::P3),
            Err(ConstructError::Precondition(_))
        ));
        assert!(matches!(
            fold_span_to_colours(
                &path(3),
                &Coloring::new(vec![0, 1, 0]),
                1,
                &ForbiddenFamily::P3
            ),
            Err(ConstructError::Precondition(_))
        ));
    }

    #[test]
    fn pipeline_grid_strategy_r() {
        let factors = vec![Factor::Path(3); 3];
        let r = product_pipeline(
            &factors,
            &ForbiddenFamily::P3,
            None,
            SetKind::R,
            Budget::default(),
        )
        .unwrap();
        assert_eq!(r.k, 1);
        assert_eq!(r.sidon.elements(), &[1, 2, 3]);
        assert_eq!(r.bound, 7);
        assert_eq!(r.colour_count, 7);
        assert_eq!(r.closed_form_bound, 7);
    }

    #[test]
    fn pipeline_path_squares_strategy_t() {
        let factors = vec![Factor::PathPower { n: 5, k: 2 }; 2];
        let r = product_pipeline(
            &factors,
            &ForbiddenFamily::P3,
            None,
            SetKind::T,
            Budget::default(),
        )
        .unwrap();
        assert_eq!(r.k, 2);
        assert!(r.colour_count as u64 <= 13);
        assert_eq!(r.bound, 13);
        let one = product_pipeline(
            &factors[..1],
            &ForbiddenFamily::P3,
            None,
            SetKind::T,
            Budget::default(),
        )
        .unwrap();
        assert!(one.colour_count <= 5);
    }

    #[test]
    fn pipeline_general_factor_uses_solver() {
        let factors = vec![Factor::General(complete(3)), Factor::Path(2)];
        let r = product_pipeline(
            &factors,
            &ForbiddenFamily::P4,
            None,
            SetKind::S,
            Budget::default(),
        )
        .unwrap();
        assert!(r.factor_spans[0] >= 1);
        assert!(r.colour_count as u64 <= r.bound);
        let err = product_pipeline(
            &factors,
            &ForbiddenFamily::P4,
            Some(0),
            SetKind::S,
            Budget::default(),
        );
        assert!(err.is_err());
    }

    #[test]
    fn tree_factor_falls_back_for_p3() {
        // depth colouring of a star is not distance-2
        let f = Factor::Tree(star(3));
        let (c, s) = f
            .span_colouring(&ForbiddenFamily::P3, Budget::default())
            .unwrap();
        assert!(is_f_free(&star(3), &c, &ForbiddenFamily::P3).unwrap());
        assert_eq!(s, 2);
    }

    #[test]
    fn torus_examples() {
        let b = Budget::default();
        let r = torus_coloring(&[4, 4], 1, SetKind::T, b).unwrap();
        assert!(r.colour_count <= 13);
        let r = torus_coloring(&[5], 1, SetKind::T, b).unwrap();
        assert!(r.colour_count <= 5);
        let c5 = cycle(5).unwrap();
        assert_eq!(
            chromatic_number(&c5, &ForbiddenFamily::P3, b)
                .unwrap()
                .value,
            5
        );
        let r = torus_coloring(&[3, 3, 3], 1, SetKind::T, b).unwrap();
        assert!(r.colour_count <= 17);
        let r = torus_coloring(&[7, 8], 2, SetKind::R, b).unwrap();
        assert!(r.colour_count as u64 <= 4 * 2 * (2 * 2 * 2 - 2 * 2 + 1) + 1);
        assert!(torus_coloring(&[2], 1, SetKind::T, b).is_err());
    }

    #[test]
    fn acyclic_trees() {
        let (p, c) = acyclic_tree_product(&[path(3), path(3)]).unwrap();
        assert_eq!(c.colour_count(), 3);
        assert!(is_f_free(&p.graph, &c, &ForbiddenFamily::EvenCycles).unwrap());
        let (p, c) = acyclic_tree_product(&[path(2), path(2), path(2)]).unwrap();
        assert_eq!(p.graph, hypercube(3));
        assert!(c.colour_count() <= 4);
        let (_, c) = acyclic_tree_product(&[star(3)]).unwrap();
        assert_eq!(c.colour_count(), 2);
        assert_eq!(
            acyclic_tree_product(&[path(2), cycle(3).unwrap()]).unwrap_err(),
            ConstructError::NotATree(1)
        );
    }

    #[test]
    fn star_trees() {
        let r = star_tree_product(&[path(4), path(4)]).unwrap();
        assert!(r.colour_count <= 5);
        let r = star_tree_product(&[path(2)]).unwrap();
        assert_eq!(r.colour_count, 2);
        let r = star_tree_product(&[path(5), path(5), path(5)]).unwrap();
        assert!(r.colour_count <= 7);
        assert!(is_f_free(&r.product.graph, &r.coloring, &ForbiddenFamily::P4).unwrap());
    }

    #[test]
    fn lp1_construction() {
        let product = cartesian_product(&[path(3), path(3)]).unwrap();
        let labels = Coloring::new(vec![0, 2, 4]);
        let plan = Lp1Plan {
            factor_labellings: vec![labels.clone(), labels],
            sidon: SidonSet::new(2, vec![1, 3]).unwrap(),
            p: 2,
            k: 2,
        };
        let report = lp1_key_construction(&plan, &product).unwrap();
        assert!(is_lp1_labelling(&product.graph, &report.labelling, 2).unwrap());
        assert!(report.span <= 6);
        assert!(is_lp1_labelling(&product.graph, &report.folded, 2).unwrap());
        assert!(report.range <= 12);
    }

    #[test]
    fn lp1_with_p1_matches_key_construction() {
        let product = cartesian_product(&[path(4), path(3)]).unwrap();
        let sidon = generate_r(1, 2).unwrap();
        let plan = Lp1Plan {
            factor_labellings: vec![depth(4), depth(3)],
            sidon: sidon.clone(),
            p: 1,
            k: 1,
        };
        let lp1 = lp1_key_construction(&plan, &product).unwrap();
        let key = key_construction(
            &ProductColoringPlan {
                factor_colourings: vec![depth(4), depth(3)],
                sidon,
                family: ForbiddenFamily::P3,
                k: 1,
            },
            &product,
        )
        .unwrap();
        assert_eq!(lp1.labelling, key);
    }

    #[test]
    fn lp1_single_factor_identity() {
        let product = cartesian_product(&[path(3)]).unwrap();
        let labels = Coloring::new(vec![0, 2, 4]);
        let plan = Lp1Plan {
            factor_labellings: vec![labels.clone()],
            sidon: SidonSet::new(2, vec![1]).unwrap(),
            p: 2,
            k: 2,
        };
        assert_eq!(
            lp1_key_construction(&plan, &product).unwrap().labelling,
            labels
        );
    }

    #[test]
    fn closed_forms() {
        assert_eq!(r_set_colour_bound(1, 3), 7);
        assert_eq!(r_set_colour_bound(2, 2), 13);
        let expected = [5, 13, 17, 21, 29, 37, 45, 49, 53, 61, 65, 69, 77, 81, 85];
        for (d, &e) in (1..=15).zip(&expected) {
            assert_eq!(two_grid_colour_bound(d).unwrap(), e);
        }
    }
}
