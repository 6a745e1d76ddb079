//! k-multiplicative Sidon sets.
//!
//! A set `A` of positive integers is k-multiplicative when `a*x == b*y` with
//! `x, y` in `A` and `a, b` in `1..=k` forces `a == b` and `x == y`. This module
//! generates the three standard families (`R_k`, `S_k`, `T_k`), verifies the
//! property, computes exact densities, and searches for maximum
//! k-multiplicative subsets of `1..=n` through the auxiliary graph `G(n, k)`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::budget::{Budget, NodeCounter};
use crate::rational::Rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SidonError {
    #[error("{0} must be a positive integer")]
    NonPositive(&'static str),
    #[error("elements must be strictly increasing positive integers")]
    NotSorted,
    #[error("set is not {k}-multiplicative: {violation}")]
    NotMultiplicative { k: u64, violation: Violation },
    #[error("node budget exhausted after {nodes} nodes; best set found has {} elements", best.len())]
    BudgetExceeded { nodes: u64, best: Vec<u64> },
}

/// Primes `<= k` in increasing order, by trial division.
pub fn primes_up_to(k: u64) -> Vec<u64> {
    let mut primes: Vec<u64> = Vec::new();
    for candidate in 2..=k {
        if primes
            .iter()
            .take_while(|&&p| p * p <= candidate)
            .all(|&p| candidate % p != 0)
        {
            primes.push(candidate);
        }
    }
    primes
}

/// Product of the primes `<= k`, or `None` on overflow. Empty product for `k < 2`.
pub fn prime_product(k: u64) -> Option<u64> {
    primes_up_to(k)
        .into_iter()
        .try_fold(1u64, |acc, p| acc.checked_mul(p))
}

/// Decomposition `x = coprime_part * prod(p_i ^ e_i)` over the primes `p_i <= k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorProfile {
    pub primes: Vec<u64>,
    pub small_exponents: Vec<u32>,
    pub coprime_part: u64,
}

impl FactorProfile {
    /// Multiplies the profile back out.
    pub fn reconstruct(&self) -> u64 {
        self.primes
            .iter()
            .zip(&self.small_exponents)
            .fold(self.coprime_part, |acc, (&p, &e)| acc * p.pow(e))
    }
}

pub fn factor_profile(x: u64, k: u64) -> Result<FactorProfile, SidonError> {
    if x == 0 {
        return Err(SidonError::NonPositive("x"));
    }
    if k == 0 {
        return Err(SidonError::NonPositive("k"));
    }
    let primes = primes_up_to(k);
    let mut rest = x;
    let small_exponents = primes
        .iter()
        .map(|&p| {
            let mut e = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                e += 1;
            }
            e
        })
        .collect();
    Ok(FactorProfile {
        primes,
        small_exponents,
        coprime_part: rest,
    })
}

/// The primes `<= k` together with `alpha_i = floor(log_{p_i} k) + 1`.
///
/// Membership tests for `S_k` and `T_k` go through this so the prime list is
/// computed once per `k`.
#[derive(Clone, Debug)]
pub struct SmallPrimes {
    k: u64,
    primes: Vec<u64>,
    alphas: Vec<u32>,
}

impl SmallPrimes {
    pub fn new(k: u64) -> Self {
        let primes = primes_up_to(k);
        let alphas = primes
            .iter()
            .map(|&p| {
                let mut e = 0u32;
                let mut power = 1u64;
                while power * p <= k {
                    power *= p;
                    e += 1;
                }
                e + 1
            })
            .collect();
        SmallPrimes { k, primes, alphas }
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn alphas(&self) -> &[u32] {
        &self.alphas
    }

    pub fn coprime_part(&self, mut x: u64) -> u64 {
        for &p in &self.primes {
            while x.is_multiple_of(p) {
                x /= p;
            }
        }
        x
    }

    pub fn in_s(&self, x: u64) -> bool {
        x >= 1 && self.primes.iter().all(|&p| !x.is_multiple_of(p))
    }

    pub fn in_t(&self, mut x: u64) -> bool {
        if x == 0 {
            return false;
        }
        for (&p, &alpha) in self.primes.iter().zip(&self.alphas) {
            let mut e = 0u32;
            while x.is_multiple_of(p) {
                x /= p;
                e += 1;
            }
            if !e.is_multiple_of(alpha) {
                return false;
            }
        }
        true
    }
}

/// Which construction a Sidon set comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SetKind {
    /// `{x : x ≡ 1 (mod k)}`
    R,
    /// integers coprime to every prime `<= k`
    S,
    /// integers whose small-prime exponents are multiples of `alpha_i`
    T,
}

impl FromStr for SetKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "r" => Ok(SetKind::R),
            "s" => Ok(SetKind::S),
            "t" => Ok(SetKind::T),
            other => Err(format!("unknown set {other:?}; expected r, s or t")),
        }
    }
}

impl fmt::Display for SetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SetKind::R => "r",
            SetKind::S => "s",
            SetKind::T => "t",
        })
    }
}

/// A witness `a*x == b*y` against k-multiplicativity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub a: u64,
    pub b: u64,
    pub x: u64,
    pub y: u64,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*{} = {}*{}", self.a, self.x, self.b, self.y)
    }
}

/// A strictly increasing set of positive integers known to be k-multiplicative.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SidonSet {
    k: u64,
    elements: Vec<u64>,
}

impl SidonSet {
    /// Validates ordering and the k-multiplicative property.
    pub fn new(k: u64, elements: Vec<u64>) -> Result<Self, SidonError> {
        if k == 0 {
            return Err(SidonError::NonPositive("k"));
        }
        if elements.first() == Some(&0) || elements.windows(2).any(|w| w[0] >= w[1]) {
            return Err(SidonError::NotSorted);
        }
        if let Some(violation) = find_violation(&elements, k) {
            return Err(SidonError::NotMultiplicative { k, violation });
        }
        Ok(SidonSet { k, elements })
    }

    fn trusted(k: u64, elements: Vec<u64>) -> Self {
        debug_assert!(find_violation(&elements, k).is_none());
        SidonSet { k, elements }
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn max(&self) -> Option<u64> {
        self.elements.last().copied()
    }

    /// The `d` smallest elements, still k-multiplicative.
    pub fn prefix(&self, d: usize) -> SidonSet {
        SidonSet {
            k: self.k,
            elements: self.elements[..d.min(self.elements.len())].to_vec(),
        }
    }
}

/// Finds a violating quadruple, scanning `x` then `y` in increasing order.
///
/// Elements are grouped by coprime part first: `a*x == b*y` with `a, b <= k`
/// forces equal coprime parts. Within a group, distinct `x < y` collide iff
/// `y / gcd(x, y) <= k`, with minimal witness `a = y/g`, `b = x/g`.
pub fn find_violation(set: &[u64], k: u64) -> Option<Violation> {
    let small = SmallPrimes::new(k);
    let mut groups: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
    let mut sorted: Vec<u64> = set.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    for &x in &sorted {
        groups.entry(small.coprime_part(x)).or_default().push(x);
    }
    let mut best: Option<Violation> = None;
    for members in groups.values() {
        for (i, &x) in members.iter().enumerate() {
            for &y in &members[i + 1..] {
                let g = x.gcd(&y);
                if y / g <= k {
                    let v = Violation {
                        a: y / g,
                        b: x / g,
                        x,
                        y,
                    };
                    if best.is_none_or(|b| (v.x, v.y) < (b.x, b.y)) {
                        best = Some(v);
                    }
                    break;
                }
            }
        }
    }
    best
}

/// Plain quadruple scan over all `x, y, a, b`; the reference oracle.
pub fn find_violation_naive(set: &[u64], k: u64) -> Option<Violation> {
    let mut sorted: Vec<u64> = set.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    for &x in &sorted {
        for &y in &sorted {
            for a in 1..=k {
                for b in 1..=k {
                    if a * x == b * y && !(a == b && x == y) {
                        return Some(Violation { a, b, x, y });
                    }
                }
            }
        }
    }
    None
}

pub fn is_k_multiplicative(set: &[u64], k: u64) -> bool {
    find_violation(set, k).is_none()
}

pub fn is_k_multiplicative_naive(set: &[u64], k: u64) -> bool {
    find_violation_naive(set, k).is_none()
}

/// First `count` elements of `R_k = {1, k+1, 2k+1, ...}`.
pub fn generate_r(k: u64, count: usize) -> Result<SidonSet, SidonError> {
    if k == 0 {
        return Err(SidonError::NonPositive("k"));
    }
    let elements = (0..count as u64).map(|i| i * k + 1).collect();
    Ok(SidonSet::trusted(k, elements))
}

/// `S_k ∩ [1, limit]`.
pub fn generate_s(k: u64, limit: u64) -> Result<SidonSet, SidonError> {
    if k == 0 {
        return Err(SidonError::NonPositive("k"));
    }
    let small = SmallPrimes::new(k);
    let elements = (1..=limit).filter(|&x| small.in_s(x)).collect();
    Ok(SidonSet::trusted(k, elements))
}

/// `T_k ∩ [1, limit]`.
pub fn generate_t(k: u64, limit: u64) -> Result<SidonSet, SidonError> {
    if k == 0 {
        return Err(SidonError::NonPositive("k"));
    }
    let small = SmallPrimes::new(k);
    let elements = (1..=limit).filter(|&x| small.in_t(x)).collect();
    Ok(SidonSet::trusted(k, elements))
}

/// The `count` smallest elements of the chosen family.
pub fn first_elements(kind: SetKind, k: u64, count: usize) -> Result<SidonSet, SidonError> {
    if k == 0 {
        return Err(SidonError::NonPositive("k"));
    }
    if kind == SetKind::R {
        return generate_r(k, count);
    }
    let small = SmallPrimes::new(k);
    let member = |x: &u64| match kind {
        SetKind::S => small.in_s(*x),
        _ => small.in_t(*x),
    };
    let elements = (1u64..).filter(member).take(count).collect();
    Ok(SidonSet::trusted(k, elements))
}

pub fn density_r(k: u64) -> Result<Rational, SidonError> {
    if k == 0 {
        return Err(SidonError::NonPositive("k"));
    }
    Ok(Rational::new(1, k as i64))
}

/// `prod (1 - 1/p)` over primes `p <= k`.
pub fn density_s(k: u64) -> Result<Rational, SidonError> {
    if k == 0 {
        return Err(SidonError::NonPositive("k"));
    }
    Ok(primes_up_to(k)
        .into_iter()
        .map(|p| Rational::new(p as i64 - 1, p as i64))
        .product())
}

/// `density_s(k) * prod (1 + 1/(p^alpha - 1))`.
pub fn density_t(k: u64) -> Result<Rational, SidonError> {
    let base = density_s(k)?;
    let small = SmallPrimes::new(k);
    let boost: Rational = small
        .primes()
        .iter()
        .zip(small.alphas())
        .map(|(&p, &alpha)| {
            let q = p.pow(alpha) as i64;
            Rational::new(q, q - 1)
        })
        .product();
    Ok(base * boost)
}

pub fn density(kind: SetKind, k: u64) -> Result<Rational, SidonError> {
    match kind {
        SetKind::R => density_r(k),
        SetKind::S => density_s(k),
        SetKind::T => density_t(k),
    }
}

/// One connected component of `G(n, k)`: all `x <= n` sharing a coprime part.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuxGraphComponent {
    pub seed: u64,
    pub members: Vec<u64>,
}

/// Components of `G(n, k)`, ordered by seed.
pub fn aux_graph_components(n: u64, k: u64) -> Result<Vec<AuxGraphComponent>, SidonError> {
    if n == 0 {
        return Err(SidonError::NonPositive("n"));
    }
    if k == 0 {
        return Err(SidonError::NonPositive("k"));
    }
    let small = SmallPrimes::new(k);
    let mut groups: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
    for x in 1..=n {
        groups.entry(small.coprime_part(x)).or_default().push(x);
    }
    Ok(groups
        .into_iter()
        .map(|(seed, members)| AuxGraphComponent { seed, members })
        .collect())
}

/// Whether distinct `x` and `y` are adjacent in `G(n, k)`.
pub fn aux_adjacent(x: u64, y: u64, k: u64) -> bool {
    if x == y {
        return false;
    }
    let g = x.gcd(&y);
    x.max(y) / g <= k
}

/// Closed neighbourhood `N_k(x) = { y <= n : a*y == b*x for some a, b <= k }`.
pub fn closed_neighbourhood(x: u64, n: u64, k: u64) -> Vec<u64> {
    let mut out = Vec::new();
    for a in 1..=k {
        for b in 1..=k {
            let bx = b * x;
            if bx.is_multiple_of(a) && bx / a <= n {
                out.push(bx / a);
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// True iff every vertex in a component with at least `k` members has a closed
/// neighbourhood of size `>= floor(sqrt(k))`.
pub fn min_neighbourhood_check(n: u64, k: u64) -> Result<bool, SidonError> {
    let floor_sqrt = (1..=k).take_while(|r| r * r <= k).last().unwrap_or(0) as usize;
    for comp in aux_graph_components(n, k)? {
        if (comp.members.len() as u64) < k {
            continue;
        }
        if comp
            .members
            .iter()
            .any(|&x| closed_neighbourhood(x, n, k).len() < floor_sqrt)
        {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A maximum k-multiplicative subset of `1..=n`.
///
/// Each component of `G(n, k)` is solved by branch and bound (vertices in
/// increasing order, include-first, greedy clique-cover bound), so among all
/// maximum subsets the lexicographically smallest one is returned.
pub fn max_sidon_subset(n: u64, k: u64, budget: Budget) -> Result<SidonSet, SidonError> {
    let components = aux_graph_components(n, k)?;
    let mut counter = NodeCounter::new(budget);
    let mut chosen = Vec::new();
    let mut exhausted = false;
    for comp in &components {
        let (best, complete) = if exhausted {
            (greedy_independent(&comp.members, k), false)
        } else {
            max_independent_in_component(&comp.members, k, &mut counter)
        };
        exhausted |= !complete;
        chosen.extend(best);
    }
    chosen.sort_unstable();
    if exhausted {
        return Err(SidonError::BudgetExceeded {
            nodes: counter.used(),
            best: chosen,
        });
    }
    Ok(SidonSet::trusted(k, chosen))
}

fn greedy_independent(members: &[u64], k: u64) -> Vec<u64> {
    let mut out: Vec<u64> = Vec::new();
    for &x in members {
        if out.iter().all(|&y| !aux_adjacent(x, y, k)) {
            out.push(x);
        }
    }
    out
}

struct MisSearch<'a> {
    adj: Vec<Vec<bool>>,
    counter: &'a mut NodeCounter,
    current: Vec<usize>,
    best: Vec<usize>,
    /// Size a new solution must exceed to be recorded.
    threshold: usize,
    out_of_budget: bool,
}

impl MisSearch<'_> {
    fn clique_cover_bound(&self, cands: &[usize]) -> usize {
        let mut cliques: Vec<Vec<usize>> = Vec::new();
        for &v in cands {
            match cliques
                .iter_mut()
                .find(|c| c.iter().all(|&u| self.adj[u][v]))
            {
                Some(c) => c.push(v),
                None => cliques.push(vec![v]),
            }
        }
        cliques.len()
    }

    fn expand(&mut self, cands: &[usize]) {
        if self.out_of_budget {
            return;
        }
        if !self.counter.tick() {
            self.out_of_budget = true;
            return;
        }
        if cands.is_empty() {
            if self.current.len() > self.threshold {
                self.threshold = self.current.len();
                self.best = self.current.clone();
            }
            return;
        }
        if self.current.len() + self.clique_cover_bound(cands) <= self.threshold {
            return;
        }
        let v = cands[0];
        let rest = &cands[1..];
        let with_v: Vec<usize> = rest.iter().copied().filter(|&u| !self.adj[v][u]).collect();
        self.current.push(v);
        self.expand(&with_v);
        self.current.pop();
        self.expand(rest);
    }
}

/// Returns the best set found and whether the search completed.
fn max_independent_in_component(
    members: &[u64],
    k: u64,
    counter: &mut NodeCounter,
) -> (Vec<u64>, bool) {
    let m = members.len();
    let adj: Vec<Vec<bool>> = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| aux_adjacent(members[i], members[j], k))
                .collect()
        })
        .collect();
    let greedy = greedy_independent(members, k);
    let mut search = MisSearch {
        adj,
        counter,
        current: Vec::new(),
        best: Vec::new(),
        threshold: greedy.len() - 1,
        out_of_budget: false,
    };
    let all: Vec<usize> = (0..m).collect();
    search.expand(&all);
    if search.out_of_budget {
        let found: Vec<u64> = search.best.iter().map(|&i| members[i]).collect();
        let best = if found.len() >= greedy.len() {
            found
        } else {
            greedy
        };
        return (best, false);
    }
    (search.best.iter().map(|&i| members[i]).collect(), true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_small() {
        assert_eq!(primes_up_to(1), Vec::<u64>::new());
        assert_eq!(primes_up_to(13), vec![2, 3, 5, 7, 11, 13]);
        assert_eq!(prime_product(1), Some(1));
        assert_eq!(prime_product(10), Some(210));
    }

    #[test]
    fn factor_profile_examples() {
        let p = factor_profile(12, 3).unwrap();
        assert_eq!(p.primes, vec![2, 3]);
        assert_eq!(p.small_exponents, vec![2, 1]);
        assert_eq!(p.coprime_part, 1);

        let p = factor_profile(37, 1).unwrap();
        assert!(p.small_exponents.is_empty());
        assert_eq!(p.coprime_part, 37);

        let p = factor_profile(45, 4).unwrap();
        assert_eq!(p.small_exponents, vec![0, 2]);
        assert_eq!(p.coprime_part, 5);
        assert_eq!(3u64.pow(2) * 5, 45);
        assert_eq!(p.reconstruct(), 45);

        assert_eq!(factor_profile(0, 3), Err(SidonError::NonPositive("x")));
        assert_eq!(factor_profile(3, 0), Err(SidonError::NonPositive("k")));
    }

    #[test]
    fn multiplicative_examples() {
        assert!(is_k_multiplicative(&[1, 3, 5, 7], 2));
        assert!(!is_k_multiplicative(&[2, 3], 3));
        assert!(is_k_multiplicative(&[1, 7, 11, 13, 17], 6));
        assert_eq!(
            find_violation(&[2, 3], 3),
            Some(Violation {
                a: 3,
                b: 2,
                x: 2,
                y: 3
            })
        );
        assert_eq!(find_violation_naive(&[2, 3], 3), find_violation(&[2, 3], 3));
    }

    #[test]
    fn generators() {
        assert_eq!(generate_r(3, 5).unwrap().elements(), &[1, 4, 7, 10, 13]);
        assert_eq!(generate_r(1, 4).unwrap().elements(), &[1, 2, 3, 4]);
        let r4 = generate_r(4, 3).unwrap();
        assert_eq!(r4.elements(), &[1, 5, 9]);
        assert!(is_k_multiplicative_naive(r4.elements(), 4));

        assert_eq!(generate_s(2, 10).unwrap().elements(), &[1, 3, 5, 7, 9]);
        assert_eq!(
            generate_s(5, 53).unwrap().elements(),
            &[1, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 49, 53]
        );
        assert_eq!(
            generate_s(13, 71).unwrap().elements(),
            &[1, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71]
        );
        assert_eq!(generate_s(1, 5).unwrap().elements(), &[1, 2, 3, 4, 5]);

        assert_eq!(
            generate_t(2, 21).unwrap().elements(),
            &[1, 3, 4, 5, 7, 9, 11, 12, 13, 15, 16, 17, 19, 20, 21]
        );
        assert_eq!(
            generate_t(7, 47).unwrap().elements(),
            &[1, 8, 9, 11, 13, 17, 19, 23, 25, 29, 31, 37, 41, 43, 47]
        );
        assert_eq!(
            generate_t(9, 47).unwrap().elements(),
            &[1, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 37, 41, 43, 47]
        );
    }

    #[test]
    fn alphas() {
        let sp = SmallPrimes::new(9);
        assert_eq!(sp.primes(), &[2, 3, 5, 7]);
        assert_eq!(sp.alphas(), &[4, 3, 2, 2]);
    }

    #[test]
    fn densities() {
        assert_eq!(density_s(5).unwrap().to_string(), "4/15");
        assert_eq!(density_t(2).unwrap().to_string(), "2/3");
        assert_eq!(density_t(11).unwrap().to_string(), "77/312");
        assert_eq!(density_s(29).unwrap().to_string(), "442368/2800733");
        assert_eq!(density_r(7).unwrap(), Rational::new(1, 7));
        assert_eq!(density_s(1).unwrap(), Rational::one());
        assert_eq!(density_t(1).unwrap(), Rational::one());
    }

    #[test]
    fn components_examples() {
        let comps = aux_graph_components(10, 2).unwrap();
        let members: Vec<Vec<u64>> = comps.iter().map(|c| c.members.clone()).collect();
        assert_eq!(
            members,
            vec![vec![1, 2, 4, 8], vec![3, 6], vec![5, 10], vec![7], vec![9]]
        );
        let comps = aux_graph_components(5, 5).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].members, vec![1, 2, 3, 4, 5]);
        let comps = aux_graph_components(1, 3).unwrap();
        assert_eq!(
            comps,
            vec![AuxGraphComponent {
                seed: 1,
                members: vec![1]
            }]
        );
    }

    #[test]
    fn max_subset_examples() {
        let best = max_sidon_subset(10, 2, Budget::default()).unwrap();
        assert_eq!(best.len(), 6);
        assert_eq!(best.elements(), &[1, 3, 4, 5, 7, 9]);
        for k in 2..=8 {
            assert_eq!(max_sidon_subset(k, k, Budget::default()).unwrap().len(), 1);
        }
    }

    #[test]
    fn max_subset_budget_exhaustion_keeps_feasible_set() {
        let err = max_sidon_subset(60, 4, Budget::new(3)).unwrap_err();
        match err {
            SidonError::BudgetExceeded { best, .. } => {
                assert!(!best.is_empty());
                assert!(is_k_multiplicative_naive(&best, 4));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn neighbourhood_examples() {
        assert!(min_neighbourhood_check(30, 4).unwrap());
        assert!(min_neighbourhood_check(100, 9).unwrap());
        assert!(min_neighbourhood_check(5, 2).unwrap());
    }

    #[test]
    fn sidon_set_rejects_bad_input() {
        assert!(matches!(
            SidonSet::new(3, vec![2, 3]),
            Err(SidonError::NotMultiplicative { .. })
        ));
        assert_eq!(SidonSet::new(3, vec![3, 2]), Err(SidonError::NotSorted));
        assert_eq!(SidonSet::new(3, vec![0, 2]), Err(SidonError::NotSorted));
        assert!(SidonSet::new(2, vec![1, 3, 4]).is_ok());
    }
}
