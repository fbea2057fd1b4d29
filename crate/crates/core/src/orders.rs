//! The weak, chain and chain-strip orders on `SYT_n`, and the weak Bruhat
//! order on `S_n` they are compared against.
//!
//! Every poset over tableaux uses the canonical enumeration order of
//! [`enumerate_syt`] for its element indices and the tableau text format
//! for its labels.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use rayon::prelude::*;

use crate::enumerate::enumerate_syt;
use crate::error::{check_capacity, invalid, Error, Result};
use crate::jdt::restrict_unchecked;
use crate::ops::{backslash_concat, slash_concat};
use crate::partition::Partition;
use crate::permutation::Permutation;
use crate::poset::{poset_from_edges, FinitePoset};
use crate::rsk::{insert_word, insertion_tableau, knuth_class};
use crate::strip::StripSequence;
use crate::tableau::StandardTableau;

/// Largest `n` for which orders on `SYT_n` are built.
pub const MAX_SYT_POSET_N: usize = 7;
/// Largest `n` for the weak Bruhat order on `S_n`.
pub const MAX_PERMUTATION_POSET_N: usize = 8;

/// The orders on `SYT_n` this crate constructs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Weak,
    Chain,
    /// Chain condition plus at most a one-step SHS refinement, closed.
    ChainStrip,
    /// Chain condition plus at most a two-step SHS refinement, closed.
    ChainStrip2,
}

impl OrderKind {
    pub const ALL: [OrderKind; 4] = [
        OrderKind::Weak,
        OrderKind::Chain,
        OrderKind::ChainStrip,
        OrderKind::ChainStrip2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            OrderKind::Weak => "weak",
            OrderKind::Chain => "chain",
            OrderKind::ChainStrip => "chain-strip",
            OrderKind::ChainStrip2 => "chain-strip-2",
        }
    }
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OrderKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        OrderKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| invalid(format!("unknown order {s:?}; expected weak, chain, chain-strip or chain-strip-2")))
    }
}

/// `SYT_n` in canonical order with a reverse index.
#[derive(Debug, Clone)]
pub struct SytCatalog {
    n: usize,
    tableaux: Vec<StandardTableau>,
    index: HashMap<StandardTableau, usize>,
}

impl SytCatalog {
    pub fn new(n: usize) -> Result<Self> {
        let tableaux = enumerate_syt(n)?;
        let index = tableaux.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        Ok(SytCatalog { n, tableaux, index })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn tableaux(&self) -> &[StandardTableau] {
        &self.tableaux
    }

    pub fn len(&self) -> usize {
        self.tableaux.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tableaux.is_empty()
    }

    pub fn index_of(&self, t: &StandardTableau) -> Option<usize> {
        self.index.get(t).copied()
    }

    pub fn labels(&self) -> Vec<String> {
        self.tableaux.iter().map(|t| t.to_string()).collect()
    }

    /// `index_map(f)[i]` is the index of `f(T_i)`.
    pub fn index_map(&self, f: impl Fn(&StandardTableau) -> StandardTableau) -> Vec<usize> {
        self.tableaux
            .iter()
            .map(|t| self.index_of(&f(t)).expect("map stays inside SYT_n"))
            .collect()
    }
}

/// All restrictions `T_{[i,j]}`, `1 <= i < j <= n`, in a fixed pair order.
struct ChainProfile {
    restrictions: Vec<(Partition, StandardTableau)>,
}

impl ChainProfile {
    fn of(t: &StandardTableau) -> Self {
        let n = t.n();
        let restrictions = (1..=n)
            .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
            .map(|(i, j)| {
                let r = restrict_unchecked(t, i, j);
                (r.shape(), r)
            })
            .collect();
        ChainProfile { restrictions }
    }

    fn leq(&self, other: &ChainProfile) -> bool {
        self.restrictions
            .iter()
            .zip(&other.restrictions)
            .all(|((sh_s, r_s), (sh_t, r_t))| {
                r_s == r_t || (sh_s != sh_t && sh_s.opp_leq_unchecked(sh_t))
            })
    }
}

/// Chain order test: for every `i < j`, either `sh(S_{[i,j]})` lies strictly
/// below `sh(T_{[i,j]})` in opposite dominance or `S_{[i,j]} = T_{[i,j]}`.
pub fn chain_leq(s: &StandardTableau, t: &StandardTableau) -> Result<bool> {
    if s.n() != t.n() {
        return Err(invalid(format!(
            "chain order compares tableaux of equal size, got {} and {}",
            s.n(),
            t.n()
        )));
    }
    Ok(ChainProfile::of(s).leq(&ChainProfile::of(t)))
}

/// Which base relation to close over `SYT_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BaseRelation {
    /// The chain condition alone.
    Chain,
    /// Chain condition and `SHS(T)` a refinement of `SHS(S)` by at most the
    /// given number of steps.
    ChainStrip { max_refinement_steps: usize },
    /// Chain condition and `Des(S) ⊆ Des(T)` with `|Des(T)| - |Des(S)| <= 1`.
    ChainDescent,
}

/// A poset over `SYT_n` together with the catalog indexing it.
#[derive(Debug, Clone)]
pub struct SytOrder {
    pub catalog: SytCatalog,
    pub poset: FinitePoset,
}

impl SytOrder {
    pub fn n(&self) -> usize {
        self.catalog.n()
    }

    /// `s ≤ t`; `None` when either tableau is not in `SYT_n`.
    pub fn leq(&self, s: &StandardTableau, t: &StandardTableau) -> Option<bool> {
        Some(self.poset.leq(self.catalog.index_of(s)?, self.catalog.index_of(t)?))
    }

    pub fn tableau(&self, i: usize) -> &StandardTableau {
        &self.catalog.tableaux()[i]
    }

    /// Strict pairs as tableaux.
    pub fn strict_pairs(&self) -> Vec<(StandardTableau, StandardTableau)> {
        self.poset
            .strict_pairs()
            .into_iter()
            .map(|(a, b)| (self.tableau(a).clone(), self.tableau(b).clone()))
            .collect()
    }
}

/// Pairs `(a, b)` of the base relation, scanned in parallel over `a`.
fn base_edges(catalog: &SytCatalog, relation: BaseRelation) -> Vec<(usize, usize)> {
    let tabs = catalog.tableaux();
    let profiles: Vec<ChainProfile> = tabs.par_iter().map(ChainProfile::of).collect();
    let shs: Vec<StripSequence> = tabs.iter().map(StandardTableau::shs).collect();
    let des: Vec<_> = tabs.iter().map(StandardTableau::descent_set).collect();
    let rows: Vec<Vec<(usize, usize)>> = (0..tabs.len())
        .into_par_iter()
        .map(|a| {
            (0..tabs.len())
                .filter(|&b| {
                    a != b
                        && match relation {
                            BaseRelation::Chain => true,
                            BaseRelation::ChainStrip { max_refinement_steps } => shs[b]
                                .refinement_steps(&shs[a])
                                .expect("same n")
                                .is_some_and(|k| k <= max_refinement_steps),
                            BaseRelation::ChainDescent => {
                                des[a].is_subset(&des[b]) && des[b].len() - des[a].len() <= 1
                            }
                        }
                        && profiles[a].leq(&profiles[b])
                })
                .map(|b| (a, b))
                .collect()
        })
        .collect();
    rows.concat()
}

/// The pairwise base relation itself, without closure, as strict pairs.
pub fn base_relation(n: usize, relation: BaseRelation) -> Result<Vec<(usize, usize)>> {
    check_capacity("syt order", n, MAX_SYT_POSET_N)?;
    Ok(base_edges(&SytCatalog::new(n)?, relation))
}

/// Transitive closure of a base relation over `SYT_n`.
pub fn close_relation(n: usize, relation: BaseRelation) -> Result<SytOrder> {
    check_capacity("syt order", n, MAX_SYT_POSET_N)?;
    close_relation_uncapped(n, relation)
}

pub(crate) fn close_relation_uncapped(n: usize, relation: BaseRelation) -> Result<SytOrder> {
    let catalog = SytCatalog::new(n)?;
    let edges = base_edges(&catalog, relation);
    let poset = poset_from_edges(catalog.labels(), &edges)?;
    Ok(SytOrder { catalog, poset })
}

/// The chain order on `SYT_n`.
pub fn chain_poset(n: usize) -> Result<FinitePoset> {
    Ok(close_relation(n, BaseRelation::Chain)?.poset)
}

/// The chain-strip order on `SYT_n`, generalized to refinements of at most
/// `max_refinement_steps` steps (1 is the defining case, 2 the variant).
pub fn chain_strip_poset(n: usize, max_refinement_steps: usize) -> Result<FinitePoset> {
    Ok(chain_strip_order(n, max_refinement_steps)?.poset)
}

pub fn chain_strip_order(n: usize, max_refinement_steps: usize) -> Result<SytOrder> {
    if !(1..=2).contains(&max_refinement_steps) {
        return Err(invalid(format!(
            "refinement budget must be 1 or 2, got {max_refinement_steps}"
        )));
    }
    close_relation(n, BaseRelation::ChainStrip { max_refinement_steps })
}

/// Right weak Bruhat order on `S_n`, closed from the covers `σ ⋖ σ·s_i`.
/// Elements are in lexicographic order.
pub fn weak_bruhat_poset(n: usize) -> Result<FinitePoset> {
    check_capacity("weak_bruhat_poset", n, MAX_PERMUTATION_POSET_N)?;
    let perms: Vec<Permutation> = Permutation::all(n).collect();
    let index: HashMap<&[usize], usize> = perms.iter().enumerate().map(|(i, p)| (p.word(), i)).collect();
    let mut edges = Vec::new();
    for (a, p) in perms.iter().enumerate() {
        let w = p.word();
        for i in 0..n.saturating_sub(1) {
            if w[i] < w[i + 1] {
                let mut up = w.to_vec();
                up.swap(i, i + 1);
                edges.push((a, index[up.as_slice()]));
            }
        }
    }
    poset_from_edges(perms.iter().map(|p| p.to_string()).collect(), &edges)
}

/// Weak order on `SYT_n`: images of weak Bruhat covers under `P`, closed.
pub fn weak_order_syt(n: usize) -> Result<FinitePoset> {
    Ok(weak_order(n)?.poset)
}

pub fn weak_order(n: usize) -> Result<SytOrder> {
    check_capacity("weak_order_syt", n, MAX_SYT_POSET_N)?;
    let catalog = SytCatalog::new(n)?;
    let perms: Vec<Permutation> = Permutation::all(n).collect();
    let chunks: Vec<BTreeSet<(usize, usize)>> = perms
        .par_iter()
        .map(|p| {
            let w = p.word();
            let from = catalog.index_of(&insertion_tableau(p)).expect("P lies in SYT_n");
            let mut out = BTreeSet::new();
            for i in 0..n.saturating_sub(1) {
                if w[i] < w[i + 1] {
                    let mut up = w.to_vec();
                    up.swap(i, i + 1);
                    let to_rows = insert_word(&up);
                    let to = catalog
                        .index_of(&StandardTableau::from_rows_unchecked(to_rows))
                        .expect("P lies in SYT_n");
                    if to != from {
                        out.insert((from, to));
                    }
                }
            }
            out
        })
        .collect();
    let edges: Vec<(usize, usize)> = chunks.into_iter().flatten().collect::<BTreeSet<_>>().into_iter().collect();
    let poset = poset_from_edges(catalog.labels(), &edges)?;
    Ok(SytOrder { catalog, poset })
}

/// Builds the named order on `SYT_n`.
pub fn build_order(kind: OrderKind, n: usize) -> Result<SytOrder> {
    match kind {
        OrderKind::Weak => weak_order(n),
        OrderKind::Chain => close_relation(n, BaseRelation::Chain),
        OrderKind::ChainStrip => chain_strip_order(n, 1),
        OrderKind::ChainStrip2 => chain_strip_order(n, 2),
    }
}

/// Poirier-Reutenauer product `S ∗ T` as the chain-strip interval between
/// the two concatenation tableaux, in canonical order.
pub fn pr_product(s: &StandardTableau, t: &StandardTableau) -> Result<Vec<StandardTableau>> {
    let order = chain_strip_order(s.n() + t.n(), 1)?;
    pr_product_in(&order, s, t)
}

/// [`pr_product`] against a prebuilt chain-strip order on `SYT_{k+l}`.
pub fn pr_product_in(order: &SytOrder, s: &StandardTableau, t: &StandardTableau) -> Result<Vec<StandardTableau>> {
    if order.n() != s.n() + t.n() {
        return Err(invalid(format!(
            "order is over SYT_{}, product needs SYT_{}",
            order.n(),
            s.n() + t.n()
        )));
    }
    let e1 = order.catalog.index_of(&slash_concat(s, t)).expect("in SYT_n");
    let e2 = order.catalog.index_of(&backslash_concat(s, t)).expect("in SYT_n");
    let (bottom, top) = if order.poset.leq(e1, e2) {
        (e1, e2)
    } else if order.poset.leq(e2, e1) {
        (e2, e1)
    } else {
        return Err(Error::Inconsistent(format!(
            "concatenations {} and {} are incomparable",
            order.tableau(e1),
            order.tableau(e2)
        )));
    };
    Ok(order
        .poset
        .interval(bottom, top)
        .into_iter()
        .map(|i| order.tableau(i).clone())
        .collect())
}

/// Largest `k + l` accepted by the shuffle route.
pub const MAX_ORACLE_N: usize = 7;

/// Support of the product of the Knuth class sums of `S` and `T`: insertion
/// tableaux of every shuffle of a word of `κ_S` with a word of `κ_T` shifted
/// by `k`, in canonical order.
///
/// A single pair of words is not enough in general: shuffling `1` with the
/// shifted row word `4,2,3` of `1,2/3` misses `1,3/2,4`, which the word
/// `2,4,3` reaches.
pub fn pr_product_oracle(s: &StandardTableau, t: &StandardTableau) -> Result<Vec<StandardTableau>> {
    check_capacity("pr_product_oracle", s.n() + t.n(), MAX_ORACLE_N)?;
    let (left, right) = (knuth_class(s)?, knuth_class(t)?);
    let mut out = BTreeSet::new();
    for u in &left {
        for v in &right {
            out.extend(pr_product_oracle_words(u, v)?);
        }
    }
    Ok(out.into_iter().collect())
}

/// Distinct insertion tableaux of the shuffles of `u` with `v` shifted by
/// `u.n()`.
pub fn pr_product_oracle_words(u: &Permutation, v: &Permutation) -> Result<Vec<StandardTableau>> {
    let (k, l) = (u.n(), v.n());
    let n = k + l;
    check_capacity("pr_product_oracle", n, MAX_ORACLE_N)?;
    let shifted: Vec<usize> = v.word().iter().map(|x| x + k).collect();
    let mut out = BTreeSet::new();
    for slots in (0..n).combinations(k) {
        let mut word = Vec::with_capacity(n);
        let (mut iu, mut iv) = (0, 0);
        for pos in 0..n {
            if slots.get(iu) == Some(&pos) {
                word.push(u.word()[iu]);
                iu += 1;
            } else {
                word.push(shifted[iv]);
                iv += 1;
            }
        }
        out.insert(StandardTableau::from_rows_unchecked(insert_word(&word)));
    }
    Ok(out.into_iter().collect())
}
