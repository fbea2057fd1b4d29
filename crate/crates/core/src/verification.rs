//! Named, exhaustive checks of the structural claims about the three orders.
//!
//! Each claim has a fixed range of `n`; nothing scales with the machine, so
//! two runs produce the same report up to the `elapsed_ms` fields.

use std::collections::{BTreeSet, HashMap};
use std::rc::Rc;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::enumerate::enumerate_syt;
use crate::error::{invalid, Result};
use crate::jdt::restrict;
use crate::ops::{backslash_concat, slash_concat};
use crate::orders::{
    base_relation, close_relation, close_relation_uncapped, pr_product_in, pr_product_oracle,
    pr_product_oracle_words, BaseRelation, OrderKind, SytCatalog, SytOrder,
};
use crate::partition::Partition;
use crate::permutation::Permutation;
use crate::poset::{MapMode, MapVerdict, Pair};
use crate::rsk::insertion_tableau;
use crate::tableau::StandardTableau;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimResult {
    pub claim_id: String,
    pub status: Status,
    pub detail: String,
    pub witnesses: Vec<String>,
    pub elapsed_ms: u64,
}

impl ClaimResult {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

struct Outcome {
    pass: bool,
    detail: String,
    witnesses: Vec<String>,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>, witnesses: Vec<String>) -> Self {
        Outcome { pass, detail: detail.into(), witnesses }
    }
}

/// Constructed orders shared between claims of one run.
#[derive(Default)]
pub struct OrderCache {
    orders: HashMap<(OrderKind, usize), Rc<SytOrder>>,
}

impl OrderCache {
    pub fn get(&mut self, kind: OrderKind, n: usize) -> Result<Rc<SytOrder>> {
        if let Some(o) = self.orders.get(&(kind, n)) {
            return Ok(Rc::clone(o));
        }
        let built = Rc::new(crate::orders::build_order(kind, n)?);
        built.poset.check_axioms()?;
        self.orders.insert((kind, n), Rc::clone(&built));
        Ok(built)
    }

    fn chain_strip(&mut self, n: usize) -> Result<Rc<SytOrder>> {
        self.get(OrderKind::ChainStrip, n)
    }
}

type ClaimFn = fn(&mut OrderCache) -> Result<Outcome>;
type ShiftedInsert = fn(&StandardTableau, usize) -> Result<StandardTableau>;

/// A registered claim.
pub struct Claim {
    pub id: &'static str,
    pub summary: &'static str,
    run: ClaimFn,
}

const REGISTRY: &[Claim] = &[
    Claim { id: "counts", summary: "|SYT_n| for n = 1..8", run: counts },
    Claim { id: "si-equals-shs", summary: "SI(π) = SHS(P(π)) over S_n, n <= 7", run: si_equals_shs },
    Claim { id: "identities", summary: "descent, reversal and evacuation identities over S_n, n = 2..6", run: identities },
    Claim { id: "weak-subset-chainstrip", summary: "weak ⊆ chain-strip, n = 2..7", run: weak_subset_chainstrip },
    Claim { id: "containments", summary: "weak ⊆ chain-strip ⊆ chain-strip-2 ⊆ chain, n = 2..7", run: containments },
    Claim { id: "coincide-n6", summary: "chain-strip = weak, n = 2..6", run: coincide_n6 },
    Claim { id: "four-pairs-n7", summary: "chain-strip minus weak at n = 7 is four pairs", run: four_pairs_n7 },
    Claim { id: "transpose-anti", summary: "transpose is an anti-automorphism, n = 2..7", run: transpose_anti },
    Claim { id: "evac-auto", summary: "evacuation is an automorphism, n = 2..7", run: evac_auto },
    Claim { id: "restricts-segments", summary: "S ≤ T implies S_[i,j] ≤ T_[i,j], n = 2..6", run: restricts_segments },
    Claim { id: "extends-segments", summary: "S ≤ T implies Ω₁, Ω₂ preserve ≤, n = 2..6", run: extends_segments },
    Claim { id: "descent-map", summary: "S ≤ T implies Des(S) ⊆ Des(T), n = 2..7", run: descent_map },
    Claim { id: "shape-map", summary: "S ≤ T implies sh(S) ≤opp sh(T), n = 2..7", run: shape_map },
    Claim { id: "descent-recharacterization", summary: "descent-subset base relation closes to chain-strip, n = 2..7", run: descent_recharacterization },
    Claim { id: "chain-transitive", summary: "pairwise chain relation is transitive, n = 2..6", run: chain_transitive },
    Claim { id: "pr-product", summary: "interval product equals shuffle product, k + l <= 6", run: pr_product_claim },
    Claim { id: "interval-R", summary: "tableaux with inner tableau R form an interval, m <= 7", run: interval_r },
    Claim { id: "rs-insertion-fails", summary: "column insertion breaks comparability in SYT_8", run: rs_insertion_fails },
    Claim { id: "rs-insertion-shs-note", summary: "shifted insertions keep SHS within one step, n <= 5", run: rs_insertion_shs_note },
    Claim { id: "inner-translation-fails", summary: "dual Knuth and inner translation break comparability", run: inner_translation_fails },
];

/// Every claim, in execution order.
pub fn registry() -> &'static [Claim] {
    REGISTRY
}

pub fn claim_ids() -> Vec<&'static str> {
    REGISTRY.iter().map(|c| c.id).collect()
}

/// Runs the selected claims (all when `filter` is `None`) in registry order.
pub fn run_claims(filter: Option<&[String]>) -> Result<Vec<ClaimResult>> {
    let selected: Vec<&Claim> = match filter {
        None => REGISTRY.iter().collect(),
        Some(ids) => {
            if let Some(bad) = ids.iter().find(|id| !REGISTRY.iter().any(|c| c.id == id.as_str())) {
                return Err(invalid(format!(
                    "unknown claim {bad:?}; known claims: {}",
                    claim_ids().join(", ")
                )));
            }
            REGISTRY.iter().filter(|c| ids.iter().any(|id| id == c.id)).collect()
        }
    };
    let mut cache = OrderCache::default();
    Ok(selected.into_iter().map(|c| run_one(c, &mut cache)).collect())
}

fn run_one(claim: &Claim, cache: &mut OrderCache) -> ClaimResult {
    let start = Instant::now();
    let outcome = (claim.run)(cache)
        .unwrap_or_else(|e| Outcome::new(false, format!("error: {e}"), Vec::new()));
    ClaimResult {
        claim_id: claim.id.to_string(),
        status: if outcome.pass { Status::Pass } else { Status::Fail },
        detail: outcome.detail,
        witnesses: outcome.witnesses,
        elapsed_ms: start.elapsed().as_millis() as u64,
    }
}

/// One line per claim: id, status, elapsed time.
pub fn report_text(results: &[ClaimResult]) -> String {
    let width = results.iter().map(|r| r.claim_id.len()).max().unwrap_or(0);
    let mut out = String::new();
    for r in results {
        let status = if r.passed() { "pass" } else { "FAIL" };
        out.push_str(&format!("{:<width$}  {status}  {:>6} ms\n", r.claim_id, r.elapsed_ms));
    }
    let passed = results.iter().filter(|r| r.passed()).count();
    out.push_str(&format!("{passed}/{} claims passed\n", results.len()));
    out
}

pub fn report_json(results: &[ClaimResult]) -> String {
    let mut s = serde_json::to_string_pretty(results).expect("claim results serialize");
    s.push('\n');
    s
}

const MAX_WITNESSES: usize = 8;

fn push_witness(witnesses: &mut Vec<String>, w: impl FnOnce() -> String) {
    if witnesses.len() < MAX_WITNESSES {
        witnesses.push(w());
    }
}

fn pair_label(order: &SytOrder, (a, b): (usize, usize)) -> String {
    format!("{} < {}", order.tableau(a), order.tableau(b))
}

fn tab(s: &str) -> StandardTableau {
    s.parse().expect("claim constants are valid tableaux")
}

fn counts(_: &mut OrderCache) -> Result<Outcome> {
    const EXPECTED: [usize; 8] = [1, 2, 4, 10, 26, 76, 232, 764];
    // involutions satisfy a(n) = a(n-1) + (n-1) a(n-2)
    let mut involutions = vec![1usize, 1];
    for n in 2..=8 {
        involutions.push(involutions[n - 1] + (n - 1) * involutions[n - 2]);
    }
    let got = (1..=8).map(|n| Ok(enumerate_syt(n)?.len())).collect::<Result<Vec<_>>>()?;
    let pass = got == EXPECTED && got == involutions[1..];
    let shown = got.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
    Ok(Outcome::new(pass, format!("|SYT_n| for n = 1..8: {shown}"), Vec::new()))
}

fn si_equals_shs(_: &mut OrderCache) -> Result<Outcome> {
    let mut checked = 0;
    let mut witnesses = Vec::new();
    for n in 1..=7 {
        for pi in Permutation::all(n) {
            checked += 1;
            if pi.si() != insertion_tableau(&pi).shs() {
                push_witness(&mut witnesses, || pi.to_string());
            }
        }
    }
    Ok(Outcome::new(
        witnesses.is_empty(),
        format!("{checked} permutations, {} mismatches", witnesses.len()),
        witnesses,
    ))
}

fn identities(_: &mut OrderCache) -> Result<Outcome> {
    let mut checked = 0;
    let mut witnesses = Vec::new();
    for n in 2..=6 {
        for pi in Permutation::all(n) {
            checked += 1;
            let p = insertion_tableau(&pi);
            let si = pi.si();
            let p_rp = insertion_tableau(&pi.rp());
            let p_evac = insertion_tableau(&pi.evac());
            let failures = [
                (pi.descent_set_left() == si.phi(), "Des_L = Φ(SI)"),
                (pi.descent_set_left() == p.descent_set(), "Des_L = Des(P)"),
                (p_rp.shs() == p.shs().reversed(), "SHS(π^rp) = SHS(π)^r"),
                (p_evac.shs() == p.shs().evacuated(), "SHS(π^evac) = SHS(π)^evac"),
                (p_rp == p.transpose(), "P(π^rp) = P(π)^t"),
                (p_evac == p.evacuate(), "P(π^evac) = P(π)^evac"),
            ];
            for (ok, name) in failures {
                if !ok {
                    push_witness(&mut witnesses, || format!("{pi}: {name}"));
                }
            }
        }
    }
    Ok(Outcome::new(
        witnesses.is_empty(),
        format!("six identities over {checked} permutations"),
        witnesses,
    ))
}

/// Strict pairs of `a` missing from `b`.
fn missing_pairs(cache: &mut OrderCache, a: OrderKind, b: OrderKind, n: usize) -> Result<(Rc<SytOrder>, Vec<Pair>)> {
    let pa = cache.get(a, n)?;
    let pb = cache.get(b, n)?;
    let (only_a, _) = pa.poset.diff(&pb.poset)?;
    Ok((pa, only_a))
}

fn containment_chain(cache: &mut OrderCache, chain: &[OrderKind]) -> Result<Outcome> {
    let mut witnesses = Vec::new();
    let mut sizes = Vec::new();
    for n in 2..=7 {
        for w in chain.windows(2) {
            let (pa, missing) = missing_pairs(cache, w[0], w[1], n)?;
            for &pair in &missing {
                push_witness(&mut witnesses, || format!("{} ⊄ {}: {}", w[0], w[1], pair_label(&pa, pair)));
            }
        }
        let counts: Vec<String> = chain
            .iter()
            .map(|&k| Ok(cache.get(k, n)?.poset.strict_pairs().len().to_string()))
            .collect::<Result<_>>()?;
        sizes.push(format!("n={n}: {}", counts.join(" ≤ ")));
    }
    let names: Vec<&str> = chain.iter().map(|k| k.name()).collect();
    Ok(Outcome::new(
        witnesses.is_empty(),
        format!("strict pairs of {}; {}", names.join(", "), sizes.join("; ")),
        witnesses,
    ))
}

fn weak_subset_chainstrip(cache: &mut OrderCache) -> Result<Outcome> {
    containment_chain(cache, &[OrderKind::Weak, OrderKind::ChainStrip])
}

fn containments(cache: &mut OrderCache) -> Result<Outcome> {
    containment_chain(
        cache,
        &[OrderKind::Weak, OrderKind::ChainStrip, OrderKind::ChainStrip2, OrderKind::Chain],
    )
}

fn coincide_n6(cache: &mut OrderCache) -> Result<Outcome> {
    let mut witnesses = Vec::new();
    for n in 2..=6 {
        let cs = cache.chain_strip(n)?;
        let weak = cache.get(OrderKind::Weak, n)?;
        let (only_cs, only_weak) = cs.poset.diff(&weak.poset)?;
        for &p in only_cs.iter().chain(&only_weak) {
            push_witness(&mut witnesses, || format!("n={n}: {}", pair_label(&cs, p)));
        }
    }
    Ok(Outcome::new(
        witnesses.is_empty(),
        "comparabilities of chain-strip and weak agree for n = 2..6",
        witnesses,
    ))
}

/// The four pairs `(S,T)`, `(S^evac,T^evac)`, `(T^t,S^t)`, `(T^evac,t, S^evac,t)`.
pub fn exceptional_pairs_n7() -> Vec<(StandardTableau, StandardTableau)> {
    let s = tab("1,3,4,5/2,7/6");
    let t = tab("1,3,4/2,5,7/6");
    let (se, te) = (s.evacuate(), t.evacuate());
    vec![
        (s.clone(), t.clone()),
        (se.clone(), te.clone()),
        (t.transpose(), s.transpose()),
        (te.transpose(), se.transpose()),
    ]
}

fn four_pairs_n7(cache: &mut OrderCache) -> Result<Outcome> {
    let cs = cache.chain_strip(7)?;
    let weak = cache.get(OrderKind::Weak, 7)?;
    let (only_cs, only_weak) = cs.poset.diff(&weak.poset)?;
    let got: BTreeSet<(StandardTableau, StandardTableau)> = only_cs
        .iter()
        .map(|&(a, b)| (cs.tableau(a).clone(), cs.tableau(b).clone()))
        .collect();
    let expected: BTreeSet<_> = exceptional_pairs_n7().into_iter().collect();
    let witnesses = only_cs.iter().map(|&p| pair_label(&cs, p)).collect();
    Ok(Outcome::new(
        got == expected && only_weak.is_empty(),
        format!(
            "{} pairs in chain-strip only, {} in weak only; expected the four exceptional pairs",
            only_cs.len(),
            only_weak.len()
        ),
        witnesses,
    ))
}

fn map_claim(cache: &mut OrderCache, mode: MapMode, f: fn(&StandardTableau) -> StandardTableau, name: &str) -> Result<Outcome> {
    let mut witnesses = Vec::new();
    for n in 2..=7 {
        let cs = cache.chain_strip(n)?;
        let map = cs.catalog.index_map(f);
        if let MapVerdict::Fails { witness, reason } = cs.poset.check_map(&cs.poset, &map, mode)? {
            let w = witness.map(|(a, b)| format!("{} and {}", cs.tableau(a), cs.tableau(b)));
            witnesses.push(format!("n={n}: {reason} {}", w.unwrap_or_default()));
        }
    }
    Ok(Outcome::new(
        witnesses.is_empty(),
        format!("{name} checked on chain-strip for n = 2..7"),
        witnesses,
    ))
}

fn transpose_anti(cache: &mut OrderCache) -> Result<Outcome> {
    map_claim(cache, MapMode::AntiAutomorphism, StandardTableau::transpose, "transpose anti-automorphism")
}

fn evac_auto(cache: &mut OrderCache) -> Result<Outcome> {
    map_claim(cache, MapMode::Automorphism, StandardTableau::evacuate, "evacuation automorphism")
}

fn restricts_segments(cache: &mut OrderCache) -> Result<Outcome> {
    let mut checked = 0;
    let mut witnesses = Vec::new();
    for n in 2..=6 {
        let cs = cache.chain_strip(n)?;
        let smaller = (2..=n).map(|m| cache.chain_strip(m)).collect::<Result<Vec<_>>>()?;
        for (a, b) in cs.poset.strict_pairs() {
            let (s, t) = (cs.tableau(a), cs.tableau(b));
            for i in 1..n {
                for j in i + 1..=n {
                    checked += 1;
                    let (rs, rt) = (restrict(s, i, j)?, restrict(t, i, j)?);
                    if smaller[j - i - 1].leq(&rs, &rt) != Some(true) {
                        push_witness(&mut witnesses, || format!("{s} < {t} on [{i},{j}]"));
                    }
                }
            }
        }
    }
    Ok(Outcome::new(
        witnesses.is_empty(),
        format!("{checked} restricted pairs checked for n = 2..6"),
        witnesses,
    ))
}

fn extends_segments(cache: &mut OrderCache) -> Result<Outcome> {
    let mut checked = 0;
    let mut witnesses = Vec::new();
    for n in 2..=6 {
        let cs = cache.chain_strip(n)?;
        let up = cache.chain_strip(n + 1)?;
        for (a, b) in cs.poset.strict_pairs() {
            let (s, t) = (cs.tableau(a), cs.tableau(b));
            checked += 1;
            if up.leq(&s.omega1(), &t.omega1()) != Some(true) {
                push_witness(&mut witnesses, || format!("Ω₁: {s} < {t}"));
            }
            if up.leq(&s.omega2(), &t.omega2()) != Some(true) {
                push_witness(&mut witnesses, || format!("Ω₂: {s} < {t}"));
            }
        }
    }
    Ok(Outcome::new(
        witnesses.is_empty(),
        format!("{checked} pairs extended by Ω₁ and Ω₂ for n = 2..6"),
        witnesses,
    ))
}

fn pairwise_map(cache: &mut OrderCache, ok: fn(&StandardTableau, &StandardTableau) -> bool, name: &str) -> Result<Outcome> {
    let mut checked = 0;
    let mut witnesses = Vec::new();
    for n in 2..=7 {
        let cs = cache.chain_strip(n)?;
        for pair in cs.poset.strict_pairs() {
            checked += 1;
            if !ok(cs.tableau(pair.0), cs.tableau(pair.1)) {
                push_witness(&mut witnesses, || pair_label(&cs, pair));
            }
        }
    }
    Ok(Outcome::new(
        witnesses.is_empty(),
        format!("{name} preserved on {checked} strict pairs for n = 2..7"),
        witnesses,
    ))
}

fn descent_map(cache: &mut OrderCache) -> Result<Outcome> {
    pairwise_map(cache, |s, t| s.descent_set().is_subset(&t.descent_set()), "descent inclusion")
}

fn shape_map(cache: &mut OrderCache) -> Result<Outcome> {
    pairwise_map(cache, |s, t| s.shape().opp_leq_unchecked(&t.shape()), "opposite dominance of shapes")
}

fn descent_recharacterization(cache: &mut OrderCache) -> Result<Outcome> {
    let mut witnesses = Vec::new();
    for n in 2..=7 {
        let cs = cache.chain_strip(n)?;
        let by_descents = close_relation(n, BaseRelation::ChainDescent)?;
        let (a, b) = cs.poset.diff(&by_descents.poset)?;
        for &p in a.iter().chain(&b) {
            push_witness(&mut witnesses, || format!("n={n}: {}", pair_label(&cs, p)));
        }
    }
    Ok(Outcome::new(
        witnesses.is_empty(),
        "SHS-refinement and descent-subset base relations close to the same order for n = 2..7",
        witnesses,
    ))
}

fn chain_transitive(cache: &mut OrderCache) -> Result<Outcome> {
    let mut witnesses = Vec::new();
    let mut sizes = Vec::new();
    for n in 2..=6 {
        let chain = cache.get(OrderKind::Chain, n)?;
        let base: BTreeSet<(usize, usize)> = base_relation(n, BaseRelation::Chain)?.into_iter().collect();
        let closed: BTreeSet<(usize, usize)> = chain.poset.strict_pairs().into_iter().collect();
        for &p in closed.difference(&base) {
            push_witness(&mut witnesses, || format!("n={n}: {}", pair_label(&chain, p)));
        }
        sizes.push(format!("n={n}: {}", base.len()));
    }
    Ok(Outcome::new(
        witnesses.is_empty(),
        format!("pairwise chain relation equals its closure; strict pairs {}", sizes.join(", ")),
        witnesses,
    ))
}

fn pr_product_claim(cache: &mut OrderCache) -> Result<Outcome> {
    let mut checked = 0;
    let mut backslash_bottom = 0;
    let mut row_words_short = 0;
    let mut witnesses = Vec::new();
    for n in 2..=6 {
        let cs = cache.chain_strip(n)?;
        for k in 1..n {
            let left = enumerate_syt(k)?;
            let right = enumerate_syt(n - k)?;
            for s in &left {
                for t in &right {
                    checked += 1;
                    let interval = pr_product_in(&cs, s, t)?;
                    if interval != pr_product_oracle(s, t)? {
                        push_witness(&mut witnesses, || format!("{s} * {t}"));
                    }
                    if cs.leq(&backslash_concat(s, t), &slash_concat(s, t)) == Some(true) {
                        backslash_bottom += 1;
                    }
                    let single = pr_product_oracle_words(&s.row_word(), &t.row_word())?;
                    if single.len() < interval.len() {
                        row_words_short += 1;
                    }
                    if !single.iter().all(|r| interval.contains(r)) {
                        push_witness(&mut witnesses, || format!("{s} * {t} via row words"));
                    }
                }
            }
        }
    }
    Ok(Outcome::new(
        witnesses.is_empty(),
        format!(
            "{checked} products with k + l <= 6 agree with the shuffle oracle; the row concatenation is the bottom endpoint in {backslash_bottom} of them; shuffling only the row words misses terms in {row_words_short}"
        ),
        witnesses,
    ))
}

fn inner_part(t: &StandardTableau, k: usize) -> StandardTableau {
    StandardTableau::from_rows_unchecked(
        t.rows()
            .iter()
            .map(|row| row.iter().copied().filter(|&v| v <= k).collect::<Vec<_>>())
            .filter(|row| !row.is_empty())
            .collect(),
    )
}

fn interval_r(cache: &mut OrderCache) -> Result<Outcome> {
    let mut checked = 0;
    let mut witnesses = Vec::new();
    for m in 2..=7 {
        let cs = cache.chain_strip(m)?;
        for k in 1..m {
            for r in enumerate_syt(k)? {
                checked += 1;
                let mut bottom_rows = r.rows().to_vec();
                bottom_rows[0].extend(k + 1..=m);
                let mut top_rows = r.rows().to_vec();
                top_rows.extend((k + 1..=m).map(|v| vec![v]));
                let bottom = cs.catalog.index_of(&StandardTableau::new(bottom_rows)?).expect("in SYT_m");
                let top = cs.catalog.index_of(&StandardTableau::new(top_rows)?).expect("in SYT_m");
                let with_inner: Vec<usize> = (0..cs.catalog.len())
                    .filter(|&i| inner_part(cs.tableau(i), k) == r)
                    .collect();
                if !cs.poset.leq(bottom, top) || cs.poset.interval(bottom, top) != with_inner {
                    push_witness(&mut witnesses, || format!("R = {r} in SYT_{m}"));
                }
            }
        }
    }
    Ok(Outcome::new(
        witnesses.is_empty(),
        format!("{checked} inner tableaux R with m <= 7 give exactly the interval between the row and column extensions"),
        witnesses,
    ))
}

fn rs_insertion_fails(cache: &mut OrderCache) -> Result<Outcome> {
    let t = tab("1,2,6/3,5/4,7");
    let s = tab("1,2,6/3,7/4/5");
    let cs7 = cache.chain_strip(7)?;
    let mut problems = Vec::new();
    let expect = |ok: bool, what: &str, problems: &mut Vec<String>| {
        if !ok {
            problems.push(what.to_string());
        }
    };
    expect(cs7.leq(&t, &s) == Some(true), "T ≤ S", &mut problems);
    expect(crate::orders::chain_leq(&t, &s)? && t != s, "T < S in the chain order", &mut problems);
    let ct = t.insert_shifted_col(5)?;
    let cs_ = s.insert_shifted_col(5)?;
    expect(ct == tab("1,2,7/3,6/4,8/5"), "c_5 of T̄_5 as displayed", &mut problems);
    expect(cs_ == tab("1,2,7/3,6,8/4/5"), "c_5 of S̄_5 as displayed", &mut problems);
    let shs = "1-2|3|4|5-7|8";
    expect(ct.shs().to_string() == shs && cs_.shs().to_string() == shs, "both SHS equal 1-2|3|4|5-7|8", &mut problems);
    let chain = crate::orders::chain_leq(&ct, &cs_)?;
    expect(!chain, "chain condition fails after insertion", &mut problems);
    let cs8 = close_relation_uncapped(8, BaseRelation::ChainStrip { max_refinement_steps: 1 })?;
    expect(cs8.leq(&ct, &cs_) == Some(false), "not comparable in chain-strip on SYT_8", &mut problems);
    let failing: Vec<String> = (1..8)
        .flat_map(|i| (i + 1..=8).map(move |j| (i, j)))
        .filter(|&(i, j)| {
            let (a, b) = (restrict(&ct, i, j).unwrap(), restrict(&cs_, i, j).unwrap());
            a != b && !(a.shape() != b.shape() && a.shape().opp_leq_unchecked(&b.shape()))
        })
        .map(|(i, j)| format!("[{i},{j}]"))
        .collect();
    Ok(Outcome::new(
        problems.is_empty(),
        if problems.is_empty() {
            format!("chain condition fails on {}", failing.join(" "))
        } else {
            format!("violated: {}", problems.join("; "))
        },
        vec![ct.to_string(), cs_.to_string()],
    ))
}

fn rs_insertion_shs_note(_: &mut OrderCache) -> Result<Outcome> {
    let mut checked = 0;
    let mut witnesses = Vec::new();
    for n in 2..=5 {
        let catalog = SytCatalog::new(n)?;
        for (a, b) in base_relation(n, BaseRelation::ChainStrip { max_refinement_steps: 1 })? {
            let (s, t) = (&catalog.tableaux()[a], &catalog.tableaux()[b]);
            for x in 1..=n + 1 {
                checked += 1;
                let inserts: [(&str, ShiftedInsert); 2] = [
                    ("r", StandardTableau::insert_shifted_row),
                    ("c", StandardTableau::insert_shifted_col),
                ];
                for (name, ins) in inserts {
                    let (is, it) = (ins(s, x)?, ins(t, x)?);
                    let steps = it.shs().refinement_steps(&is.shs())?;
                    if !matches!(steps, Some(0 | 1)) {
                        push_witness(&mut witnesses, || {
                            format!("{name}_{x}: {s} < {t} gives {is} and {it}, steps {steps:?}")
                        });
                    }
                }
            }
        }
    }
    Ok(Outcome::new(
        witnesses.is_empty(),
        format!("{checked} base pairs and insertion points checked for n = 2..5"),
        witnesses,
    ))
}

fn inner_translation_fails(cache: &mut OrderCache) -> Result<Outcome> {
    let mut problems = Vec::new();
    let mut expect = |ok: bool, what: &str| {
        if !ok {
            problems.push(what.to_string());
        }
    };

    let cs6 = cache.chain_strip(6)?;
    let s = tab("1,2,4/3,5,6");
    let t = tab("1,2,4/3,6/5");
    expect(s.shs() == t.shs() && s.shs().to_string() == "1-2|3-4|5-6", "SYT_6 pair shares SHS 1-2|3-4|5-6");
    expect(cs6.leq(&s, &t) == Some(true), "S ≤ T in SYT_6");
    let (s1, t1) = (s.dual_knuth_move(4)?, t.dual_knuth_move(4)?);
    expect(s1 == tab("1,2,3/4,5,6") && t1 == tab("1,2,5/3,6/4"), "dual Knuth images as displayed");
    expect(t1.shs().refinement_steps(&s1.shs())? == Some(2), "SHS(T′) is a two-step refinement of SHS(S′)");
    let between = Partition::all(6).into_iter().any(|mu| {
        mu != s1.shape() && mu != t1.shape() && s1.shape().opp_leq_unchecked(&mu) && mu.opp_leq_unchecked(&t1.shape())
    });
    expect(!between, "no shape strictly between sh(S′) and sh(T′)");
    expect(cs6.leq(&s1, &t1) == Some(false), "S′ ≰ T′");

    let cs7 = cache.chain_strip(7)?;
    let s = tab("1,2,6/3,5/4,7");
    let t = tab("1,2,6/3,7/4/5");
    expect(cs7.leq(&s, &t) == Some(true), "S ≤ T in SYT_7");
    let r = restrict(&s, 1, 4)?;
    expect(r == restrict(&t, 1, 4)?, "S and T share the inner tableau R");
    let r_tilde = r.dual_knuth_move(2)?;
    let (st, tt) = (s.inner_translate(&r_tilde)?, t.inner_translate(&r_tilde)?);
    expect(st == tab("1,3,6/2,5/4,7") && tt == tab("1,3,6/2,7/4/5"), "translated tableaux as displayed");
    let (a, b) = (restrict(&st, 2, 7)?, restrict(&tt, 2, 7)?);
    expect(a.shape() == b.shape() && a != b, "restrictions to [2,7] share a shape but differ");
    expect(!crate::orders::chain_leq(&st, &tt)?, "chain condition fails after translation");
    expect(cs7.leq(&st, &tt) == Some(false), "S̃ ≰ T̃");

    Ok(Outcome::new(
        problems.is_empty(),
        if problems.is_empty() {
            format!("R = {r}, R̃ = {r_tilde}; both comparabilities are lost")
        } else {
            format!("violated: {}", problems.join("; "))
        },
        vec![s1.to_string(), t1.to_string(), st.to_string(), tt.to_string()],
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_ids_are_unique() {
        let ids = claim_ids();
        let set: BTreeSet<_> = ids.iter().collect();
        assert_eq!(set.len(), ids.len());
    }

    #[test]
    fn unknown_claim_is_rejected() {
        let err = run_claims(Some(&["no-such-claim".to_string()])).unwrap_err();
        assert!(err.to_string().contains("four-pairs-n7"));
    }

    #[test]
    fn counts_claim_passes() {
        let r = run_claims(Some(&["counts".to_string()])).unwrap();
        assert_eq!(r.len(), 1);
        assert!(r[0].passed(), "{}", r[0].detail);
        assert!(r[0].detail.contains("1,2,4,10,26,76,232,764"));
    }

    #[test]
    fn reports_render() {
        let r = run_claims(Some(&["counts".to_string()])).unwrap();
        assert!(report_text(&r).starts_with("counts  pass"));
        let back: Vec<ClaimResult> = serde_json::from_str(&report_json(&r)).unwrap();
        assert_eq!(back, r);
    }
}
