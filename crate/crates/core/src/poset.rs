//! Finite posets stored as dense reachability bit matrices.

use std::collections::{BTreeSet, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

/// Square bit matrix with one `u64`-packed row per element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitMatrix {
    n: usize,
    stride: usize,
    words: Vec<u64>,
}

impl BitMatrix {
    pub fn new(n: usize) -> Self {
        let stride = n.div_ceil(64);
        BitMatrix {
            n,
            stride,
            words: vec![0; n * stride],
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn get(&self, a: usize, b: usize) -> bool {
        self.words[a * self.stride + b / 64] >> (b % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, a: usize, b: usize) {
        self.words[a * self.stride + b / 64] |= 1 << (b % 64);
    }

    pub fn row(&self, a: usize) -> &[u64] {
        &self.words[a * self.stride..(a + 1) * self.stride]
    }

    /// `row[dst] |= row[src]`.
    pub fn or_row_into(&mut self, src: usize, dst: usize) {
        if src == dst {
            return;
        }
        let s = self.stride;
        let (lo, hi) = (src.min(dst), src.max(dst));
        let (head, tail) = self.words.split_at_mut(hi * s);
        let (low_row, high_row) = (&mut head[lo * s..(lo + 1) * s], &mut tail[..s]);
        let (from, to) = if src < dst {
            (&*low_row, high_row)
        } else {
            (&*high_row, low_row)
        };
        for (t, f) in to.iter_mut().zip(from) {
            *t |= f;
        }
    }

    /// Column indices set in row `a`, ascending.
    pub fn ones(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(a).iter().enumerate().flat_map(|(w, &bits)| {
            let mut bits = bits;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let t = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(w * 64 + t)
            })
        })
    }
}

/// An ordered pair of element indices.
pub type Pair = (usize, usize);

/// A finite partial order over labelled elements; `reach[a][b]` means `a ≤ b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePoset {
    elements: Vec<String>,
    reach: BitMatrix,
}

/// How a map between posets is expected to behave.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MapMode {
    /// `a ≤ b ⇒ f(a) ≤ f(b)`.
    Preserving,
    /// `f` bijective and `a ≤ b ⇔ f(a) ≤ f(b)`.
    Automorphism,
    /// `f` bijective and `a ≤ b ⇔ f(b) ≤ f(a)`.
    AntiAutomorphism,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MapVerdict {
    Holds,
    /// `witness` is a pair of source elements violating the condition, or
    /// `None` when the map fails to be a bijection for size reasons.
    Fails {
        witness: Option<(usize, usize)>,
        reason: String,
    },
}

impl MapVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, MapVerdict::Holds)
    }
}

/// Builds the reflexive-transitive closure of `edges` over `labels`.
///
/// Self-loops are ignored. A cycle through distinct elements is reported
/// with one witness cycle.
pub fn poset_from_edges(labels: Vec<String>, edges: &[(usize, usize)]) -> Result<FinitePoset> {
    let n = labels.len();
    let mut succ: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(a, b) in edges {
        if a >= n || b >= n {
            return Err(invalid(format!("edge ({a}, {b}) out of range for {n} elements")));
        }
        if a != b {
            succ[a].push(b);
        }
    }
    for s in &mut succ {
        s.sort_unstable();
        s.dedup();
    }

    // Kahn's algorithm; leftover vertices lie on or behind a cycle.
    let mut indeg = vec![0usize; n];
    for s in &succ {
        for &b in s {
            indeg[b] += 1;
        }
    }
    let mut queue: VecDeque<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for &w in &succ[v] {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                queue.push_back(w);
            }
        }
    }
    if order.len() < n {
        return Err(Error::NotAPartialOrder {
            cycle: find_cycle(&succ, &indeg),
        });
    }

    let mut reach = BitMatrix::new(n);
    for &v in order.iter().rev() {
        reach.set(v, v);
        for &w in &succ[v] {
            reach.or_row_into(w, v);
        }
    }
    Ok(FinitePoset {
        elements: labels,
        reach,
    })
}

// Walks successors inside the unsorted remainder until a vertex repeats.
fn find_cycle(succ: &[Vec<usize>], indeg: &[usize]) -> Vec<usize> {
    let start = (0..succ.len()).find(|&v| indeg[v] > 0).expect("cycle exists");
    let mut seen_at = vec![usize::MAX; succ.len()];
    let mut path = Vec::new();
    let mut v = start;
    loop {
        if seen_at[v] != usize::MAX {
            return path[seen_at[v]..].to_vec();
        }
        seen_at[v] = path.len();
        path.push(v);
        v = *succ[v]
            .iter()
            .find(|&&w| indeg[w] > 0)
            .expect("remainder vertex keeps a remainder successor");
    }
}

impl FinitePoset {
    /// The poset with no strict relations.
    pub fn discrete(labels: Vec<String>) -> Self {
        poset_from_edges(labels, &[]).expect("antichain")
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.elements.iter().position(|e| e == label)
    }

    pub fn reach(&self) -> &BitMatrix {
        &self.reach
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.reach.get(a, b)
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.reach.get(a, b)
    }

    /// Elements strictly above `a`.
    pub fn strictly_above(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        self.reach.ones(a).filter(move |&b| b != a)
    }

    /// All pairs `(a, b)` with `a ≤ b`, including reflexive ones.
    pub fn comparabilities(&self) -> BTreeSet<(usize, usize)> {
        (0..self.len())
            .flat_map(|a| self.reach.ones(a).map(move |b| (a, b)))
            .collect()
    }

    /// All pairs `(a, b)` with `a < b`, sorted.
    pub fn strict_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|a| self.strictly_above(a).map(move |b| (a, b)))
            .collect()
    }

    /// Cover relations of the Hasse diagram, sorted lexicographically.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            let mut implied = vec![0u64; n.div_ceil(64)];
            for c in self.strictly_above(a) {
                for (acc, (&w, bit)) in implied.iter_mut().zip(self.reach.row(c).iter().zip(0..)) {
                    // c itself is not implied by c
                    let own = if bit == c / 64 { 1u64 << (c % 64) } else { 0 };
                    *acc |= w & !own;
                }
            }
            out.extend(
                self.strictly_above(a)
                    .filter(|&b| implied[b / 64] >> (b % 64) & 1 == 0)
                    .map(|b| (a, b)),
            );
        }
        out
    }

    /// `{ x : a ≤ x ≤ b }`, ascending.
    pub fn interval(&self, a: usize, b: usize) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| self.leq(a, x) && self.leq(x, b))
            .collect()
    }

    /// Strict comparabilities present only in `self`, and only in `other`.
    pub fn diff(&self, other: &FinitePoset) -> Result<(Vec<Pair>, Vec<Pair>)> {
        if self.elements != other.elements {
            return Err(invalid("posets are defined over different element lists"));
        }
        let mut only_self = Vec::new();
        let mut only_other = Vec::new();
        for a in 0..self.len() {
            for b in 0..self.len() {
                if a == b {
                    continue;
                }
                match (self.leq(a, b), other.leq(a, b)) {
                    (true, false) => only_self.push((a, b)),
                    (false, true) => only_other.push((a, b)),
                    _ => {}
                }
            }
        }
        Ok((only_self, only_other))
    }

    /// Re-checks reflexivity, antisymmetry and transitivity on the full
    /// matrix, naming the first violation found.
    ///
    /// Within the up-set of `a`, only elements not already inside the up-set
    /// of an earlier tested element are tested; by induction on up-set size
    /// the skipped ones satisfy both conditions too.
    pub fn check_axioms(&self) -> Result<()> {
        let n = self.len();
        let words = n.div_ceil(64);
        let mut seen = vec![0u64; words];
        for a in 0..n {
            if !self.leq(a, a) {
                return Err(Error::Inconsistent(format!("element {a} is not reflexive")));
            }
            let row_a = self.reach.row(a);
            seen.fill(0);
            seen[a / 64] |= 1 << (a % 64);
            for w in 0..words {
                loop {
                    let fresh = row_a[w] & !seen[w];
                    if fresh == 0 {
                        break;
                    }
                    let b = w * 64 + fresh.trailing_zeros() as usize;
                    if self.leq(b, a) {
                        return Err(Error::NotAPartialOrder { cycle: vec![a, b] });
                    }
                    let row_b = self.reach.row(b);
                    if row_b.iter().zip(row_a).any(|(rb, ra)| rb & !ra != 0) {
                        return Err(Error::Inconsistent(format!(
                            "transitivity fails above {a} through {b}"
                        )));
                    }
                    for (s, rb) in seen.iter_mut().zip(row_b) {
                        *s |= rb;
                    }
                }
            }
        }
        Ok(())
    }

    /// Checks `f: self → target` against `mode`.
    pub fn check_map(&self, target: &FinitePoset, f: &[usize], mode: MapMode) -> Result<MapVerdict> {
        if f.len() != self.len() {
            return Err(invalid(format!(
                "map covers {} of {} elements",
                f.len(),
                self.len()
            )));
        }
        if let Some(a) = f.iter().position(|&x| x >= target.len()) {
            return Err(invalid(format!("image of element {a} is out of range")));
        }
        if mode != MapMode::Preserving {
            if self.len() != target.len() {
                return Ok(MapVerdict::Fails {
                    witness: None,
                    reason: "source and target sizes differ".into(),
                });
            }
            let mut preimage = vec![usize::MAX; target.len()];
            for (a, &x) in f.iter().enumerate() {
                if preimage[x] != usize::MAX {
                    return Ok(MapVerdict::Fails {
                        witness: Some((preimage[x], a)),
                        reason: "map is not injective".into(),
                    });
                }
                preimage[x] = a;
            }
        }
        for a in 0..self.len() {
            for b in 0..self.len() {
                let src = self.leq(a, b);
                let img = match mode {
                    MapMode::AntiAutomorphism => target.leq(f[b], f[a]),
                    _ => target.leq(f[a], f[b]),
                };
                let bad = match mode {
                    MapMode::Preserving => src && !img,
                    _ => src != img,
                };
                if bad {
                    return Ok(MapVerdict::Fails {
                        witness: Some((a, b)),
                        reason: format!(
                            "{} ≤ {} is {src} but the image relation is {img}",
                            self.elements[a], self.elements[b]
                        ),
                    });
                }
            }
        }
        Ok(MapVerdict::Holds)
    }

    /// Serializable description with covers and, when `full`, every strict
    /// comparability.
    pub fn to_file(&self, n: usize, order: &str, full: bool) -> PosetFile {
        PosetFile {
            n,
            order: order.to_string(),
            elements: self.elements.clone(),
            covers: self.covers().into_iter().map(|(a, b)| [a, b]).collect(),
            relations: full.then(|| self.strict_pairs().into_iter().map(|(a, b)| [a, b]).collect()),
        }
    }

    /// Hasse diagram in Graphviz DOT, lower elements drawn below.
    pub fn to_dot(&self, name: &str) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "digraph \"{}\" {{", name.replace('"', "'"));
        let _ = writeln!(s, "  rankdir=BT;");
        let _ = writeln!(s, "  node [shape=box, fontname=\"monospace\"];");
        for (i, e) in self.elements.iter().enumerate() {
            let _ = writeln!(s, "  n{i} [label=\"{}\"];", e.replace('"', "'"));
        }
        for (a, b) in self.covers() {
            let _ = writeln!(s, "  n{a} -> n{b};");
        }
        s.push_str("}\n");
        s
    }
}

/// On-disk poset: `{ "n", "order", "elements", "covers" }`, with an optional
/// `relations` array listing all strict comparabilities.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetFile {
    pub n: usize,
    pub order: String,
    pub elements: Vec<String>,
    pub covers: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub relations: Option<Vec<[usize; 2]>>,
}

impl PosetFile {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| invalid(format!("malformed poset file: {e}")))
    }

    /// Closes the listed covers (and relations, when present).
    pub fn to_poset(&self) -> Result<FinitePoset> {
        let edges: Vec<(usize, usize)> = self
            .covers
            .iter()
            .chain(self.relations.iter().flatten())
            .map(|&[a, b]| (a, b))
            .collect();
        poset_from_edges(self.elements.clone(), &edges)
    }
}
