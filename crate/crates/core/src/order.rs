//! Shelling, weak shelling and strong gcd-orders: validation and existence search.
//!
//! The step condition of both shelling and weak shelling, when a facet is
//! appended, depends only on the *set* of facets already placed. Existence is
//! therefore decided by depth-first search over prefix sets with a memo of
//! dead sets, which visits each of the `2^r` subsets at most once.
//!
//! Strong gcd-orders are not prefix-closed (the filling non-face may come
//! after the pair), so they are searched through the dual: a strong gcd-order
//! of the minimal non-faces is a weak shelling order of the dual's facets read
//! backwards, with every facet complemented.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::face::Face;

pub const THRESHOLD_ENV: &str = "SHELLGCD_SEARCH_THRESHOLD";

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OrderKind {
    Shelling,
    WeakShelling,
    StrongGcd,
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrderKind::Shelling => "shelling",
            OrderKind::WeakShelling => "weak-shelling",
            OrderKind::StrongGcd => "strong-gcd",
        })
    }
}

/// A linear order of facets (shelling, weak shelling) or of minimal non-faces (strong gcd).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderCertificate {
    pub kind: OrderKind,
    pub sequence: Vec<Face>,
}

impl OrderCertificate {
    pub fn new(kind: OrderKind, sequence: Vec<Face>) -> Self {
        Self { kind, sequence }
    }

    /// Runs the checker matching `kind`.
    pub fn verify(&self, c: &Complex) -> Result<CheckReport> {
        match self.kind {
            OrderKind::Shelling => check_shelling_order(c, &self.sequence),
            OrderKind::WeakShelling => check_weak_shelling_order(c, &self.sequence),
            OrderKind::StrongGcd => check_strong_gcd_order(c, &self.sequence),
        }
    }
}

/// Why an order fails. Positions are 0-based indices into the checked sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// `<F_step> ∩ <F_0..F_{step-1}>` is not pure of dimension `dim F_step - 1`.
    ShellingStep { step: usize, intersection: Vec<Face> },
    /// `F_i ∪ F_j = V` but no `k < j`, `k ≠ i` has `F_i ∩ F_j ⊆ F_k`.
    WeakPair { i: usize, j: usize },
    /// `M_i ∩ M_j = ∅` but no `k > i`, `k ≠ j` has `M_k ⊆ M_i ∪ M_j`.
    GcdPair { i: usize, j: usize },
}

impl Violation {
    /// Re-evaluates the definition at the recorded position only.
    pub fn reproduces(&self, sequence: &[Face], universe: Face) -> bool {
        match *self {
            Violation::ShellingStep { step, .. } => {
                step > 0 && step < sequence.len() && !shelling_step_ok(sequence[..step].iter().copied(), sequence[step])
            }
            Violation::WeakPair { i, j } => i < j && j < sequence.len() && !weak_pair_ok(sequence, i, j, universe),
            Violation::GcdPair { i, j } => i < j && j < sequence.len() && !gcd_pair_ok(sequence, i, j),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub verdict: bool,
    pub witness: Option<Violation>,
}

impl CheckReport {
    fn from_violation(v: Option<Violation>) -> Self {
        Self {
            verdict: v.is_none(),
            witness: v,
        }
    }
}

fn ensure_permutation(order: &[Face], expected: &[Face], what: &'static str) -> Result<()> {
    let mut a = order.to_vec();
    a.sort_unstable();
    if a != expected {
        return Err(Error::NotAPermutation(what));
    }
    Ok(())
}

/// Appending `facet` after `prefix` keeps the intersection pure of codimension one.
///
/// Equivalently: every `facet \ F_i` contains a vertex `v` such that
/// `facet \ {v}` lies in some earlier facet.
pub(crate) fn shelling_step_ok(prefix: impl Iterator<Item = Face> + Clone, facet: Face) -> bool {
    let singles = prefix
        .clone()
        .map(|f| facet.difference(f))
        .filter(|d| d.len() == 1)
        .fold(Face::EMPTY, Face::union);
    prefix.into_iter().all(|f| !facet.difference(f).is_disjoint(singles))
}

fn weak_pair_ok(seq: &[Face], i: usize, j: usize, universe: Face) -> bool {
    let (fi, fj) = (seq[i], seq[j]);
    if fi.union(fj) != universe {
        return true;
    }
    let meet = fi.intersection(fj);
    (0..j).any(|k| k != i && meet.is_subset(seq[k]))
}

fn gcd_pair_ok(seq: &[Face], i: usize, j: usize) -> bool {
    let (mi, mj) = (seq[i], seq[j]);
    if !mi.is_disjoint(mj) {
        return true;
    }
    let join = mi.union(mj);
    (i + 1..seq.len()).any(|k| k != j && seq[k].is_subset(join))
}

pub fn shelling_violation(seq: &[Face]) -> Option<Violation> {
    (1..seq.len())
        .find(|&j| !shelling_step_ok(seq[..j].iter().copied(), seq[j]))
        .map(|step| Violation::ShellingStep {
            step,
            intersection: Complex::intersection_with_prefix(seq, step),
        })
}

pub fn weak_shelling_violation(seq: &[Face], universe: Face) -> Option<Violation> {
    for j in 1..seq.len() {
        for i in 0..j {
            if !weak_pair_ok(seq, i, j, universe) {
                return Some(Violation::WeakPair { i, j });
            }
        }
    }
    None
}

pub fn strong_gcd_violation(seq: &[Face]) -> Option<Violation> {
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if !gcd_pair_ok(seq, i, j) {
                return Some(Violation::GcdPair { i, j });
            }
        }
    }
    None
}

pub fn check_shelling_order(c: &Complex, order: &[Face]) -> Result<CheckReport> {
    ensure_permutation(order, c.facets(), "facets")?;
    Ok(CheckReport::from_violation(shelling_violation(order)))
}

pub fn check_weak_shelling_order(c: &Complex, order: &[Face]) -> Result<CheckReport> {
    ensure_permutation(order, c.facets(), "facets")?;
    Ok(CheckReport::from_violation(weak_shelling_violation(
        order,
        c.universe().full(),
    )))
}

pub fn check_strong_gcd_order(c: &Complex, order: &[Face]) -> Result<CheckReport> {
    ensure_permutation(order, &c.minimal_nonfaces(), "minimal non-faces")?;
    Ok(CheckReport::from_violation(strong_gcd_violation(order)))
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Facet counts up to this are decided exactly with a dense `2^r` memo.
    pub exact_threshold: usize,
    /// Above the threshold, the search gives up after expanding this many prefix sets.
    pub node_budget: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            exact_threshold: 22,
            node_budget: 2_000_000,
        }
    }
}

impl SearchConfig {
    /// Defaults, with the threshold overridable through `SHELLGCD_SEARCH_THRESHOLD`.
    pub fn from_env() -> Self {
        let mut cfg = Self::default();
        if let Some(t) = std::env::var(THRESHOLD_ENV).ok().and_then(|v| v.trim().parse().ok()) {
            cfg.exact_threshold = t;
        }
        cfg
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(OrderCertificate),
    NoneExists,
    Undecided(String),
}

impl SearchOutcome {
    pub fn certificate(&self) -> Option<&OrderCertificate> {
        match self {
            SearchOutcome::Found(c) => Some(c),
            _ => None,
        }
    }

    /// `Some(true)` / `Some(false)` when decided.
    pub fn exists(&self) -> Option<bool> {
        match self {
            SearchOutcome::Found(_) => Some(true),
            SearchOutcome::NoneExists => Some(false),
            SearchOutcome::Undecided(_) => None,
        }
    }
}

enum Memo {
    Dense(Vec<u64>),
    Sparse(HashSet<u64>),
}

impl Memo {
    fn contains(&self, s: u64) -> bool {
        match self {
            Memo::Dense(bits) => bits[(s >> 6) as usize] >> (s & 63) & 1 == 1,
            Memo::Sparse(set) => set.contains(&s),
        }
    }

    fn insert(&mut self, s: u64) {
        match self {
            Memo::Dense(bits) => bits[(s >> 6) as usize] |= 1 << (s & 63),
            Memo::Sparse(set) => {
                set.insert(s);
            }
        }
    }
}

struct BudgetExhausted;

struct PrefixSearch<'a, A> {
    facets: &'a [Face],
    admissible: A,
    dead: Memo,
    expansions: usize,
    budget: Option<usize>,
    path: Vec<usize>,
}

impl<A: Fn(&[Face], u64, usize) -> bool> PrefixSearch<'_, A> {
    fn extend(&mut self, placed: u64) -> std::result::Result<bool, BudgetExhausted> {
        let r = self.facets.len();
        if self.path.len() == r {
            return Ok(true);
        }
        if self.dead.contains(placed) {
            return Ok(false);
        }
        self.expansions += 1;
        if self.budget.is_some_and(|b| self.expansions > b) {
            return Err(BudgetExhausted);
        }
        for cand in 0..r {
            if placed >> cand & 1 == 0 && (self.admissible)(self.facets, placed, cand) {
                self.path.push(cand);
                if self.extend(placed | 1 << cand)? {
                    return Ok(true);
                }
                self.path.pop();
            }
        }
        self.dead.insert(placed);
        Ok(false)
    }
}

fn placed_faces(facets: &[Face], placed: u64) -> impl Iterator<Item = Face> + Clone + '_ {
    Face(placed).indices().map(move |i| facets[i])
}

fn search_orders<A>(facets: &[Face], kind: OrderKind, config: &SearchConfig, admissible: A) -> SearchOutcome
where
    A: Fn(&[Face], u64, usize) -> bool,
{
    let r = facets.len();
    if r > 64 {
        return SearchOutcome::Undecided(format!("{r} facets exceed the 64-facet state width"));
    }
    let (dead, budget) = if r <= config.exact_threshold {
        (Memo::Dense(vec![0u64; (1usize << r).div_ceil(64)]), None)
    } else {
        (Memo::Sparse(HashSet::new()), Some(config.node_budget))
    };
    let mut dfs = PrefixSearch {
        facets,
        admissible,
        dead,
        expansions: 0,
        budget,
        path: Vec::with_capacity(r),
    };
    match dfs.extend(0) {
        Ok(true) => SearchOutcome::Found(OrderCertificate::new(
            kind,
            dfs.path.iter().map(|&i| facets[i]).collect(),
        )),
        Ok(false) => SearchOutcome::NoneExists,
        Err(BudgetExhausted) => SearchOutcome::Undecided(format!(
            "{r} facets exceed the exact threshold {} and {} prefix sets did not settle it",
            config.exact_threshold, config.node_budget
        )),
    }
}

pub fn find_shelling_order(c: &Complex, config: &SearchConfig) -> SearchOutcome {
    search_orders(c.facets(), OrderKind::Shelling, config, |facets, placed, cand| {
        shelling_step_ok(placed_faces(facets, placed), facets[cand])
    })
}

pub fn find_weak_shelling_order(c: &Complex, config: &SearchConfig) -> SearchOutcome {
    if let TrivialWeak::TriviallyYes { .. } = trivial_weak_shellability(c) {
        return SearchOutcome::Found(OrderCertificate::new(OrderKind::WeakShelling, c.facets().to_vec()));
    }
    let universe = c.universe().full();
    search_orders(
        c.facets(),
        OrderKind::WeakShelling,
        config,
        move |facets, placed, cand| {
            let fj = facets[cand];
            placed_faces(facets, placed).enumerate().all(|(a, fi)| {
                if fi.union(fj) != universe {
                    return true;
                }
                let meet = fi.intersection(fj);
                placed_faces(facets, placed)
                    .enumerate()
                    .any(|(b, fk)| a != b && meet.is_subset(fk))
            })
        },
    )
}

/// A strong gcd-order for `c`, found as a reversed, complemented weak shelling of the dual.
pub fn find_strong_gcd_order(c: &Complex, config: &SearchConfig) -> SearchOutcome {
    let n = c.n_vertices();
    match find_weak_shelling_order(&c.alexander_dual(), config) {
        SearchOutcome::Found(cert) => SearchOutcome::Found(OrderCertificate::new(
            OrderKind::StrongGcd,
            cert.sequence.iter().rev().map(|f| f.complement(n)).collect(),
        )),
        other => other,
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum TrivialWeak {
    /// No two facets union to the full vertex set, so every order is a weak shelling order.
    /// `dimension_bound` records whether `|V| ≥ 2·dim + 3` already implies it.
    TriviallyYes {
        dimension_bound: bool,
    },
    Inconclusive,
}

pub fn trivial_weak_shellability(c: &Complex) -> TrivialWeak {
    let universe = c.universe().full();
    let facets = c.facets();
    let pair_covers = (0..facets.len()).any(|i| (i + 1..facets.len()).any(|j| facets[i].union(facets[j]) == universe));
    if pair_covers {
        TrivialWeak::Inconclusive
    } else {
        TrivialWeak::TriviallyYes {
            dimension_bound: dimension_bound_applies(c),
        }
    }
}

/// `|V| ≥ 2·dim + 3`.
pub fn dimension_bound_applies(c: &Complex) -> bool {
    match c.dim() {
        Some(d) => c.n_vertices() as i64 >= 2 * d as i64 + 3,
        None => true,
    }
}
