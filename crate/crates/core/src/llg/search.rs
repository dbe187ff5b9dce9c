//! Bounded chart search over judgements derivable from a lexicon.
//!
//! Items are `(sequent, body)` pairs up to exchange. Formulas are kept in a
//! sorted order and, among equal formulas, the permutation giving the least
//! body is chosen, so two items that differ only by exchanges collapse. Items
//! are expanded cheapest first by `(axiom uses, proof size)`, which makes the
//! first witness found for a word a smallest one.
//!
//! The lexicon is first stripped of top-level pars. A stripped lexicon with
//! no connectives at all is searched with cuts only; otherwise cuts, pars and
//! tensors are used, restricted to formulas that can occur in a derivation of
//! the start literal (subformulas of the lexicon, closed under negation),
//! with literal identities as extra leaves.
//!
//! Before the search, the same rules are run on sorted sequents alone. That
//! gives each sequent shape a lower bound on the axiom uses still needed to
//! reach the start literal, and items that cannot finish inside the budget
//! are never built.

use std::cell::Cell;
use std::cmp::Reverse;
use std::collections::{BTreeMap, BTreeSet, BinaryHeap, HashMap, HashSet};
use std::sync::Arc;

use super::shapes::{ShapeBounds, ShapeRules};
use super::{strip_pars, unstrip_proof, Llg};
use crate::mll::{self, Formula, MllProof, Sequent};
use crate::multiword::{Boundary, Multiword, Polarity, Symbol, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenerationBudget {
    pub max_axiom_uses: usize,
    /// Items whose letters exceed this are dropped. Letters never disappear,
    /// so this loses no shorter words.
    pub max_word_len: Option<usize>,
    pub max_proof_size: Option<usize>,
    /// Longest intermediate sequent. Defaults to the longest stripped axiom
    /// (plus one when connectives are present).
    pub max_sequent_len: Option<usize>,
    /// Hard cap on explored items.
    pub max_items: usize,
}

impl Default for GenerationBudget {
    fn default() -> GenerationBudget {
        GenerationBudget {
            max_axiom_uses: 6,
            max_word_len: None,
            max_proof_size: None,
            max_sequent_len: None,
            max_items: 500_000,
        }
    }
}

impl GenerationBudget {
    pub fn axioms(n: usize) -> GenerationBudget {
        GenerationBudget { max_axiom_uses: n, ..Default::default() }
    }
}

#[derive(Clone, Debug)]
pub struct Generated {
    pub word: Word,
    /// A proof over the original lexicon.
    pub witness: Arc<MllProof>,
    pub axiom_uses: usize,
    pub size: usize,
}

#[derive(Clone, Debug)]
pub struct GenerationResult {
    /// Sorted by length, then lexicographically.
    pub words: Vec<Generated>,
    /// No derivation was cut off by the budget.
    pub complete: bool,
    pub explored: usize,
}

#[derive(Clone, Debug)]
pub struct MemberResult {
    pub witness: Option<Generated>,
    /// Meaningful when `witness` is `None`: the negative answer is exact.
    pub complete: bool,
    pub explored: usize,
}

/// All words derivable within the budget, each with a smallest witness.
pub fn generate(llg: &Llg, budget: &GenerationBudget) -> GenerationResult {
    let mut chart = Chart::new(llg, budget, None);
    let words = chart.run(false);
    GenerationResult { words, complete: chart.complete(), explored: chart.items.len() }
}

/// Searches for one derivation of `word`.
///
/// The axiom budget is raised one step at a time: tight budgets prune far
/// more, and the first witness found is still one with fewest axiom uses.
/// A level that finishes without dropping anything ends the search early.
/// `max_items` bounds the items of all levels together.
pub fn member(llg: &Llg, word: &Word, budget: &GenerationBudget) -> MemberResult {
    let mut explored = 0;
    let mut complete = false;
    for k in 1..=budget.max_axiom_uses {
        let level = GenerationBudget { max_axiom_uses: k, max_items: budget.max_items - explored, ..budget.clone() };
        let mut chart = Chart::new(llg, &level, Some(word.clone()));
        let mut found = chart.run(true);
        explored += chart.items.len();
        complete = chart.complete();
        if let Some(w) = found.pop() {
            return MemberResult { witness: Some(w), complete, explored };
        }
        if complete || explored >= budget.max_items {
            break;
        }
    }
    MemberResult { witness: None, complete, explored }
}

#[derive(Clone)]
struct Item {
    seq: Sequent,
    body: Multiword,
    proof: Arc<MllProof>,
    axioms: usize,
    size: usize,
}

type Key = (Sequent, Multiword);

struct Target {
    word: Word,
    counts: HashMap<Symbol, usize>,
}

struct Chart<'a> {
    llg: &'a Llg,
    budget: &'a GenerationBudget,
    target: Option<Target>,
    general: bool,
    seq_cap: usize,
    sizes: HashMap<Formula, usize>,
    /// Formulas allowed to appear, and which tensors/pars may be formed.
    useful: HashSet<Formula>,
    cuttable: HashSet<Formula>,
    tensor_right: HashMap<Formula, Vec<Formula>>,
    tensor_left: HashMap<Formula, Vec<Formula>>,
    items: Vec<Item>,
    done: HashMap<Key, usize>,
    /// Finalized items containing a formula, bucketed by axiom uses.
    /// Grouped by sequent so that shape bounds are checked once per group.
    by_formula: HashMap<Formula, HashMap<Sequent, Vec<Vec<usize>>>>,
    pending: Vec<Option<Item>>,
    best_pending: HashMap<Key, (usize, usize)>,
    heap: BinaryHeap<Reverse<(usize, usize, usize)>>,
    /// Set when anything is dropped for budget reasons.
    cut_off: Cell<bool>,
    bounds: ShapeBounds,
}

/// Max product of factorials of equal-formula groups tried when minimising.
const MAX_GROUP_PERMUTATIONS: usize = 720;

impl<'a> Chart<'a> {
    fn new(llg: &'a Llg, budget: &'a GenerationBudget, target: Option<Word>) -> Chart<'a> {
        let stripped = strip_pars(&llg.signature);
        let general = !stripped.is_logic_free();
        let longest = stripped.axioms.iter().map(|a| a.sequent.len()).max().unwrap_or(1);
        let seq_cap = budget.max_sequent_len.unwrap_or(if general { longest + 1 } else { longest });
        // Normal form: every remaining cut has a whole lexicon formula on one
        // side, and the other side is that formula's dual, built by rules.
        // So only subformulas of duals of lexicon formulas are ever built,
        // and only lexicon formulas or their duals are cut.
        let mut useful = HashSet::new();
        let mut cuttable = HashSet::new();
        let mut subs = Vec::new();
        for a in &stripped.axioms {
            for f in &a.sequent {
                cuttable.insert(f.clone());
                cuttable.insert(f.negate());
                f.negate().subformulas(&mut subs);
            }
        }
        useful.extend(subs);
        let mut tensor_right: HashMap<Formula, Vec<Formula>> = HashMap::new();
        let mut tensor_left: HashMap<Formula, Vec<Formula>> = HashMap::new();
        let mut sorted_useful: Vec<Formula> = useful.iter().cloned().collect();
        sorted_useful.sort();
        for f in &sorted_useful {
            if let Formula::Tensor(a, b) = f {
                tensor_right.entry((**a).clone()).or_default().push((**b).clone());
                tensor_left.entry((**b).clone()).or_default().push((**a).clone());
            }
        }
        let mut sizes = HashMap::new();
        for f in &sorted_useful {
            if let Ok(b) = mll::interpret_formula(f, &llg.signature.literals) {
                sizes.insert(f.clone(), b.len());
            }
        }
        let target = target.map(|w| {
            let mut counts = HashMap::new();
            for s in w.symbols() {
                *counts.entry(s.clone()).or_insert(0) += 1;
            }
            Target { word: w, counts }
        });
        let mut identities = Vec::new();
        if general {
            for f in &sorted_useful {
                if let Formula::Pos(_) = f {
                    identities.push(vec![f.negate(), f.clone()]);
                }
            }
        }
        let axiom_shapes: Vec<Sequent> = stripped.axioms.iter().map(|a| a.sequent.clone()).collect();
        let bounds = ShapeBounds::new(&ShapeRules {
            axioms: &axiom_shapes,
            identities: &identities,
            cuttable: &cuttable,
            useful: &useful,
            seq_cap,
            max_axioms: budget.max_axiom_uses,
            goal: vec![Formula::Pos(llg.start.clone())],
        });
        let mut chart = Chart {
            llg,
            budget,
            target,
            general,
            seq_cap,
            sizes,
            useful,
            cuttable,
            tensor_right,
            tensor_left,
            items: Vec::new(),
            done: HashMap::new(),
            by_formula: HashMap::new(),
            pending: Vec::new(),
            best_pending: HashMap::new(),
            heap: BinaryHeap::new(),
            cut_off: Cell::new(false),
            bounds,
        };
        for a in &stripped.axioms {
            let item = Item {
                seq: a.sequent.clone(),
                body: a.cowordism.body().clone(),
                proof: MllProof::ax(&a.name),
                axioms: 1,
                size: 1,
            };
            chart.offer(item);
        }
        if general {
            let mut atoms = BTreeSet::new();
            for f in &sorted_useful {
                if let Formula::Pos(n) = f {
                    atoms.insert(n.clone());
                }
            }
            for n in atoms {
                let a = Formula::Pos(n);
                if let Ok(j) = mll::rule_id(&a, &llg.signature.literals) {
                    let item = Item {
                        seq: j.sequent,
                        body: j.cowordism.into_body(),
                        proof: MllProof::id(a),
                        axioms: 0,
                        size: 1,
                    };
                    chart.offer(item);
                }
            }
        }
        chart
    }

    fn size_of(&self, f: &Formula) -> usize {
        match self.sizes.get(f) {
            Some(&n) => n,
            None => mll::interpret_formula(f, &self.llg.signature.literals).map(|b| b.len()).unwrap_or(0),
        }
    }

    /// Returns goal words in discovery order; stops at the first when `first`.
    fn run(&mut self, first: bool) -> Vec<Generated> {
        let start = vec![Formula::Pos(self.llg.start.clone())];
        let mut seen = BTreeMap::new();
        while let Some(Reverse((_, _, slot))) = self.heap.pop() {
            let Some(item) = self.pending[slot].take() else { continue };
            let key = (item.seq.clone(), item.body.clone());
            if self.done.contains_key(&key) {
                continue;
            }
            if self.items.len() >= self.budget.max_items {
                self.cut_off.set(true);
                break;
            }
            let id = self.items.len();
            self.done.insert(key, id);
            let mut formulas: Vec<&Formula> = item.seq.iter().collect();
            formulas.dedup();
            for f in formulas {
                let buckets = self.by_formula.entry(f.clone()).or_default().entry(item.seq.clone()).or_default();
                if buckets.len() <= item.axioms {
                    buckets.resize(item.axioms + 1, Vec::new());
                }
                buckets[item.axioms].push(id);
            }
            self.items.push(item);
            let item = &self.items[id];
            if item.seq == start {
                let word = item.body.edges()[0].label.clone();
                let hit = match &self.target {
                    Some(t) => t.word == word,
                    None => true,
                };
                if hit && !seen.contains_key(&word) {
                    let witness = unstrip_proof(&item.proof, &self.llg.signature);
                    let g = Generated { word: word.clone(), size: witness.size(), axiom_uses: item.axioms, witness };
                    seen.insert(word, g);
                    if first {
                        break;
                    }
                }
            }
            self.expand(id);
        }
        let mut out: Vec<Generated> = seen.into_values().collect();
        out.sort_by(|a, b| a.word.len().cmp(&b.word.len()).then_with(|| a.word.cmp(&b.word)));
        out
    }

    fn expand(&mut self, id: usize) {
        let n = self.items[id].seq.clone();
        let mut out = Vec::new();
        let is_id = self.items[id].axioms == 0 && self.items[id].size == 1;
        for (i, x) in n.iter().enumerate() {
            if is_id || !self.cuttable.contains(x) {
                continue;
            }
            let dual = x.negate();
            for (f, j) in self.partners(id, &dual, |p, j| {
                let mut s = rest(&n, i);
                s.extend(rest(p, j));
                s
            }) {
                if self.items[f].axioms == 0 && self.items[f].size == 1 {
                    continue;
                }
                out.push(self.cut(id, i, f, j));
            }
        }
        if self.general {
            for (i, a) in n.iter().enumerate() {
                for b in self.tensor_right.get(a).cloned().unwrap_or_default() {
                    let t = Formula::tensor(a.clone(), b.clone());
                    for (f, j) in self.partners(id, &b, |p, j| {
                        let mut s = rest(&n, i);
                        s.extend(rest(p, j));
                        s.push(t.clone());
                        s
                    }) {
                        out.push(self.tensor(id, i, f, j));
                    }
                }
                for c in self.tensor_left.get(a).cloned().unwrap_or_default() {
                    let t = Formula::tensor(c.clone(), a.clone());
                    for (f, j) in self.partners(id, &c, |p, j| {
                        let mut s = rest(p, j);
                        s.extend(rest(&n, i));
                        s.push(t.clone());
                        s
                    }) {
                        out.push(self.tensor(f, j, id, i));
                    }
                }
            }
            for i in 0..n.len() {
                for j in 0..n.len() {
                    if i != j && self.useful.contains(&Formula::par(n[i].clone(), n[j].clone())) {
                        out.push(self.par(id, i, j));
                    }
                }
            }
        }
        for item in out.into_iter().flatten() {
            self.offer(item);
        }
    }

    /// Finalized items holding `f` at some position `j`, such that the
    /// conclusion, whose sequent is `shape(partner, j)`, can still reach the
    /// start literal within the budget.
    fn partners(&self, id: usize, f: &Formula, shape: impl Fn(&[Formula], usize) -> Sequent) -> Vec<(usize, usize)> {
        let Some(groups) = self.by_formula.get(f) else { return Vec::new() };
        let used = self.items[id].axioms;
        let room = self.budget.max_axiom_uses.saturating_sub(used);
        let mut out = Vec::new();
        for (seq, buckets) in groups {
            if buckets.iter().skip(room + 1).any(|b| !b.is_empty()) {
                self.cut_off.set(true);
            }
            for (j, y) in seq.iter().enumerate() {
                if y != f {
                    continue;
                }
                let s = shape(seq, j);
                if s.len() > self.seq_cap {
                    self.note_pruned_len();
                    continue;
                }
                let Some(rem) = self.bounds.remaining(&s) else {
                    if self.bounds.truncated {
                        self.cut_off.set(true);
                    }
                    continue;
                };
                let Some(limit) = room.checked_sub(rem) else {
                    self.cut_off.set(true);
                    continue;
                };
                if buckets.iter().skip(limit + 1).any(|b| !b.is_empty()) {
                    self.cut_off.set(true);
                }
                out.extend(buckets.iter().take(limit + 1).flatten().map(|&p| (p, j)));
            }
        }
        out
    }

    /// Cheap checks done before building a binary rule's conclusion.
    fn binary_fits(&self, l: &Item, r: &Item, len: usize) -> bool {
        if !self.affordable(l.axioms + r.axioms, l.size + r.size + 1) {
            return false;
        }
        if len > self.seq_cap {
            self.note_pruned_len();
            return false;
        }
        let letters = l.body.label_length() + r.body.label_length();
        let limit = match (&self.target, self.budget.max_word_len) {
            (Some(t), _) => Some(t.word.len()),
            (None, m) => m,
        };
        limit.is_none_or(|m| letters <= m)
    }

    /// Cut of `l` on formula `i` against `r` on formula `j`.
    fn cut(&self, l: usize, i: usize, r: usize, j: usize) -> Option<Item> {
        let (li, ri) = (&self.items[l], &self.items[r]);
        if !self.binary_fits(li, ri, li.seq.len() + ri.seq.len() - 2) {
            return None;
        }
        let mut shape = rest(&li.seq, i);
        shape.extend(rest(&ri.seq, j));
        if !self.viable(&shape, li.axioms + ri.axioms) {
            return None;
        }
        let (lseq, lbody) = self.permute(&li.seq, &li.body, &mll::move_to_end(li.seq.len(), i));
        let (rseq, rbody) = self.permute(&ri.seq, &ri.body, &mll::move_to_front(ri.seq.len(), j));
        let x = lseq.last()?;
        let xs = self.size_of(x);
        let dsize = rbody.boundary().len() - xs;
        // rev Δ ⊗ [X⊥] ⊗ [X] ⊗ rev Γ, glued on the nested pairs
        let joined = rbody.tensor(&lbody);
        let pairs: Vec<(usize, usize)> = (1..=xs).map(|t| (dsize + t, dsize + 2 * xs + 1 - t)).collect();
        let body = joined.glue(&pairs).ok()?;
        let mut seq = lseq[..lseq.len() - 1].to_vec();
        seq.extend_from_slice(&rseq[1..]);
        let proof = MllProof::cut(
            mll::reorder(li.proof.clone(), &mll::move_to_end(li.seq.len(), i)),
            mll::reorder(ri.proof.clone(), &mll::move_to_front(ri.seq.len(), j)),
        );
        Some(Item { seq, body, proof, axioms: li.axioms + ri.axioms, size: li.size + ri.size + 1 })
    }

    /// Tensor of `l` on formula `i` (as `A`) with `r` on formula `j` (as `B`).
    fn tensor(&self, l: usize, i: usize, r: usize, j: usize) -> Option<Item> {
        let (li, ri) = (&self.items[l], &self.items[r]);
        if !self.binary_fits(li, ri, li.seq.len() + ri.seq.len() - 1) {
            return None;
        }
        let mut shape = rest(&li.seq, i);
        shape.extend(rest(&ri.seq, j));
        shape.push(Formula::tensor(li.seq[i].clone(), ri.seq[j].clone()));
        if !self.viable(&shape, li.axioms + ri.axioms) {
            return None;
        }
        let (lseq, lbody) = self.permute(&li.seq, &li.body, &mll::move_to_end(li.seq.len(), i));
        let (rseq, rbody) = self.permute(&ri.seq, &ri.body, &mll::move_to_front(ri.seq.len(), j));
        let a = lseq.last()?.clone();
        let b = rseq[0].clone();
        let (asz, bsz) = (self.size_of(&a), self.size_of(&b));
        let gsz = lbody.boundary().len() - asz;
        let dsz = rbody.boundary().len() - bsz;
        // lbody = [A]⊗rev Γ, rbody = rev Δ⊗[B]; target rev Δ⊗[A]⊗[B]⊗rev Γ
        let mut perm = Vec::with_capacity(asz + gsz + dsz + bsz);
        perm.extend((1..=asz).map(|t| dsz + t));
        perm.extend((1..=gsz).map(|t| dsz + asz + bsz + t));
        perm.extend(1..=dsz);
        perm.extend((1..=bsz).map(|t| dsz + asz + t));
        let joined = lbody.tensor(&rbody);
        let mut pol = vec![joined.boundary().polarity(1); perm.len()];
        for (old, &new) in perm.iter().enumerate() {
            pol[new - 1] = joined.boundary().polarity(old + 1);
        }
        let body = joined.relabel(Boundary::from_polarities(pol), &perm);
        let mut seq = lseq[..lseq.len() - 1].to_vec();
        seq.push(Formula::tensor(a, b));
        seq.extend_from_slice(&rseq[1..]);
        let proof = MllProof::tensor(
            mll::reorder(li.proof.clone(), &mll::move_to_end(li.seq.len(), i)),
            mll::reorder(ri.proof.clone(), &mll::move_to_front(ri.seq.len(), j)),
        );
        Some(Item { seq, body, proof, axioms: li.axioms + ri.axioms, size: li.size + ri.size + 1 })
    }

    /// `℘` of formulas `i` and `j` of one item.
    fn par(&self, id: usize, i: usize, j: usize) -> Option<Item> {
        let it = &self.items[id];
        if !self.affordable(it.axioms, it.size + 1) {
            return None;
        }
        let mut shape: Sequent = it.seq.iter().enumerate().filter(|&(k, _)| k != i && k != j).map(|(_, f)| f.clone()).collect();
        shape.push(Formula::par(it.seq[i].clone(), it.seq[j].clone()));
        if !self.viable(&shape, it.axioms) {
            return None;
        }
        let n = it.seq.len();
        let mut order: Vec<usize> = (0..n).filter(|&k| k != i && k != j).collect();
        order.push(i);
        order.push(j);
        let (mut seq, body) = self.permute(&it.seq, &it.body, &order);
        let b = seq.pop()?;
        let a = seq.pop()?;
        seq.push(Formula::par(a, b));
        let proof = MllProof::par(mll::reorder(it.proof.clone(), &order), n - 1);
        Some(Item { seq, body, proof, axioms: it.axioms, size: it.size + 1 })
    }

    /// The start literal is still reachable within the budget.
    fn viable(&self, seq: &[Formula], axioms: usize) -> bool {
        match self.bounds.remaining(seq) {
            Some(r) if axioms + r <= self.budget.max_axiom_uses => true,
            Some(_) => {
                self.cut_off.set(true);
                false
            }
            None => {
                if self.bounds.truncated {
                    self.cut_off.set(true);
                }
                false
            }
        }
    }

    fn affordable(&self, axioms: usize, size: usize) -> bool {
        let ok = axioms <= self.budget.max_axiom_uses
            && self.budget.max_proof_size.is_none_or(|m| size <= m);
        if !ok {
            self.cut_off.set(true);
        }
        ok
    }

    fn note_pruned_len(&self) {
        // With cuts only, every derivation of the start literal can be
        // rearranged to stay within the longest axiom.
        if self.general {
            self.cut_off.set(true);
        }
    }

    fn complete(&self) -> bool {
        !self.cut_off.get()
    }

    /// `order[p]` is the old index of the formula placed at position `p`.
    fn permute(&self, seq: &[Formula], body: &Multiword, order: &[usize]) -> (Sequent, Multiword) {
        if order.iter().enumerate().all(|(p, &o)| p == o) {
            return (seq.to_vec(), body.clone());
        }
        let sizes: Vec<usize> = seq.iter().map(|f| self.size_of(f)).collect();
        let n = seq.len();
        // body blocks run from the last formula to the first
        let mut off_old = vec![0; n];
        let mut acc = 0;
        for i in (0..n).rev() {
            off_old[i] = acc;
            acc += sizes[i];
        }
        let mut perm = vec![0; acc];
        // every entry is overwritten below
        let mut pol = vec![Polarity::Left; acc];
        let mut off_new = 0;
        for p in (0..n).rev() {
            let o = order[p];
            for t in 1..=sizes[o] {
                perm[off_old[o] + t - 1] = off_new + t;
                pol[off_new + t - 1] = body.boundary().polarity(off_old[o] + t);
            }
            off_new += sizes[o];
        }
        let new_seq = order.iter().map(|&o| seq[o].clone()).collect();
        (new_seq, body.relabel(Boundary::from_polarities(pol), &perm))
    }

    /// Puts an item in canonical order and queues it unless pruned.
    fn offer(&mut self, item: Item) {
        if !item.body.is_regular() {
            return;
        }
        if item.seq.len() > self.seq_cap {
            self.note_pruned_len();
            return;
        }
        if let Some(m) = self.budget.max_word_len {
            if item.body.label_length() > m {
                return;
            }
        }
        if let Some(t) = &self.target {
            if !fits(&item.body, t) {
                return;
            }
        }
        if !self.viable(&item.seq, item.axioms) {
            return;
        }
        let item = self.canonical(item);
        let key = (item.seq.clone(), item.body.clone());
        if self.done.contains_key(&key) {
            return;
        }
        let cost = (item.axioms, item.size);
        match self.best_pending.get(&key) {
            Some(&c) if c <= cost => return,
            _ => {}
        }
        self.best_pending.insert(key, cost);
        let slot = self.pending.len();
        self.pending.push(Some(item));
        self.heap.push(Reverse((cost.0, cost.1, slot)));
    }

    fn canonical(&self, item: Item) -> Item {
        let n = item.seq.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| item.seq[a].cmp(&item.seq[b]));
        let mut groups: Vec<(usize, usize)> = Vec::new();
        let mut s = 0;
        for p in 1..=n {
            if p == n || item.seq[order[p]] != item.seq[order[s]] {
                if p - s > 1 {
                    groups.push((s, p));
                }
                s = p;
            }
        }
        let total: usize = groups.iter().map(|&(a, b)| (1..=b - a).product::<usize>()).product();
        let mut best_order = order.clone();
        if !groups.is_empty() && total <= MAX_GROUP_PERMUTATIONS {
            let mut best = self.permute(&item.seq, &item.body, &order).1;
            let mut cur = order.clone();
            permute_groups(&groups, 0, &mut cur, &mut |o: &[usize]| {
                let b = self.permute(&item.seq, &item.body, o).1;
                if b < best {
                    best = b;
                    best_order = o.to_vec();
                }
            });
        }
        let (seq, body) = self.permute(&item.seq, &item.body, &best_order);
        let proof = mll::reorder(item.proof, &best_order);
        Item { seq, body, proof, axioms: item.axioms, size: item.size }
    }
}

fn permute_groups(groups: &[(usize, usize)], g: usize, cur: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
    if g == groups.len() {
        visit(cur);
        return;
    }
    let (a, b) = groups[g];
    heap_permutations(cur, a, b - a, &mut |c: &mut Vec<usize>| permute_groups(groups, g + 1, c, visit));
}

/// Heap's algorithm on the slice `cur[a..a+k]`.
fn heap_permutations(cur: &mut Vec<usize>, a: usize, k: usize, visit: &mut dyn FnMut(&mut Vec<usize>)) {
    if k <= 1 {
        visit(cur);
        return;
    }
    for i in 0..k {
        heap_permutations(cur, a, k - 1, visit);
        if k.is_multiple_of(2) {
            cur.swap(a + i, a + k - 1);
        } else {
            cur.swap(a, a + k - 1);
        }
    }
}

fn rest(seq: &[Formula], i: usize) -> Vec<Formula> {
    let mut v = seq.to_vec();
    v.remove(i);
    v
}

/// Every edge label is a factor of the target and letters are not overused.
fn fits(body: &Multiword, t: &Target) -> bool {
    let mut used: HashMap<&Symbol, usize> = HashMap::new();
    for e in body.edges() {
        if !e.label.is_factor_of(&t.word) {
            return false;
        }
        for s in e.label.symbols() {
            let c = used.entry(s).or_insert(0);
            *c += 1;
            if *c > t.counts.get(s).copied().unwrap_or(0) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::Cowordism;
    use crate::llg::CowordismSignature;
    use crate::mll::Interpretation;
    use crate::multiword::Edge;

    fn e(from: usize, w: &str, to: usize) -> Edge {
        Edge::new(from, Word::parse(w), to)
    }

    fn toy() -> Llg {
        let lr = Boundary::standard();
        let literals: Interpretation = [("NP".to_string(), lr.clone()), ("S".to_string(), lr)].into_iter().collect();
        let np = Formula::pos("NP");
        let s = Formula::pos("S");
        let vp_arg = Formula::tensor(np.clone(), s.negate());
        let mut sig = CowordismSignature { literals, alphabet: vec![], axioms: vec![] };
        let entries: Vec<(&str, Sequent, Vec<Edge>)> = vec![
            ("JOHN", vec![np.clone()], vec![e(1, "John", 2)]),
            ("MARY", vec![np.clone()], vec![e(1, "Mary", 2)]),
            ("LEAVES", vec![np.negate(), s.clone()], vec![e(1, "", 4), e(3, "leaves", 2)]),
            ("LOVES", vec![np.negate(), np.negate(), s.clone()], vec![e(1, "", 4), e(3, "loves", 6), e(5, "", 2)]),
            ("MADLY", vec![vp_arg.clone(), np.negate(), s.clone()], vec![e(1, "", 8), e(7, "madly", 2), e(5, "", 4), e(3, "", 6)]),
            ("WHO", vec![vp_arg, np.negate(), np.clone()], vec![e(1, "", 4), e(3, "who", 8), e(5, "", 6), e(7, "", 2)]),
        ];
        for (n, seq, edges) in entries {
            let b = mll::interpret_sequent(&seq, &sig.literals).unwrap();
            sig.add_axiom(n, seq, Cowordism::from_edges(Boundary::unit(), b, edges, vec![]).unwrap());
        }
        Llg { signature: sig, start: "S".into() }
    }

    fn words(r: &GenerationResult) -> Vec<String> {
        r.words.iter().map(|g| g.word.to_string()).collect()
    }

    #[test]
    fn toy_sentence_is_generated_with_a_replayable_witness() {
        let g = toy();
        assert!(g.validate().is_empty());
        let r = generate(&g, &GenerationBudget::axioms(6));
        let ws = words(&r);
        assert!(ws.contains(&"Mary leaves".to_string()), "{ws:?}");
        assert!(ws.contains(&"John loves Mary madly".to_string()), "{ws:?}");
        assert_eq!(ws.iter().filter(|w| *w == "Mary who John loves madly leaves").count(), 1, "{ws:?}");
        for w in &r.words {
            let j = g.derive(&w.witness).unwrap();
            assert_eq!(g.word_of(&j), Some(w.word.clone()));
            assert!(w.axiom_uses <= 6);
        }
    }

    #[test]
    fn member_finds_and_rejects() {
        let g = toy();
        let yes = member(&g, &Word::parse("Mary leaves"), &GenerationBudget::axioms(4));
        let w = yes.witness.expect("derivable");
        assert_eq!(g.word_of(&g.derive(&w.witness).unwrap()), Some(Word::parse("Mary leaves")));
        let no = member(&g, &Word::parse("loves Mary"), &GenerationBudget::axioms(4));
        assert!(no.witness.is_none());
    }

    #[test]
    fn logic_free_search_is_complete() {
        let lr = Boundary::standard();
        let literals: Interpretation = [("A".to_string(), lr.clone()), ("S".to_string(), lr)].into_iter().collect();
        let mut sig = CowordismSignature { literals, alphabet: vec![], axioms: vec![] };
        let a = Formula::pos("A");
        let s = Formula::pos("S");
        let b = mll::interpret_sequent(&[a.negate(), s.clone()], &sig.literals).unwrap();
        sig.add_axiom("wrap", vec![a.negate(), s.clone()], Cowordism::from_edges(Boundary::unit(), b, vec![e(1, "x", 4), e(3, "y", 2)], vec![]).unwrap());
        let b = mll::interpret_sequent(std::slice::from_ref(&a), &sig.literals).unwrap();
        sig.add_axiom("base", vec![a.clone()], Cowordism::from_edges(Boundary::unit(), b, vec![e(1, "z", 2)], vec![]).unwrap());
        let b = mll::interpret_sequent(&[a.negate(), a.clone()], &sig.literals).unwrap();
        sig.add_axiom("step", vec![a.negate(), a.clone()], Cowordism::from_edges(Boundary::unit(), b, vec![e(1, "a", 4), e(3, "b", 2)], vec![]).unwrap());
        let g = Llg { signature: sig, start: "S".into() };
        let r = generate(&g, &GenerationBudget::axioms(4));
        assert_eq!(words(&r), vec!["x z y", "x a z b y", "x a a z b b y"]);
        assert!(!r.complete);
        let r = generate(&g, &GenerationBudget { max_word_len: Some(5), ..GenerationBudget::axioms(10) });
        assert_eq!(words(&r), vec!["x z y", "x a z b y"]);
    }
}
