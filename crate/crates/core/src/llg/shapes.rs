//! Search over sequent shapes, ignoring bodies.
//!
//! Every item of the chart has a shape (its sorted sequent) reachable here,
//! and the shape rules allow strictly more than the item rules, so the
//! distances computed here are lower bounds. `to_goal` is the fewest extra
//! axiom uses after which a shape can become the start literal; the chart
//! drops items that cannot finish inside the budget.

use std::collections::{HashMap, HashSet};

use crate::mll::{Formula, Sequent};

/// Shape spaces larger than this are not analysed; every bound is then 0.
const MAX_SHAPES: usize = 4000;

pub(super) struct ShapeBounds {
    to_goal: Option<HashMap<Sequent, usize>>,
    /// Some shape combination was skipped for exceeding the axiom budget,
    /// so an unreachable goal may only be unreachable within the budget.
    pub(super) truncated: bool,
}

pub(super) struct ShapeRules<'a> {
    pub axioms: &'a [Sequent],
    pub identities: &'a [Sequent],
    pub cuttable: &'a HashSet<Formula>,
    pub useful: &'a HashSet<Formula>,
    pub seq_cap: usize,
    pub max_axioms: usize,
    pub goal: Sequent,
}

fn sorted(mut s: Sequent) -> Sequent {
    s.sort();
    s
}

fn without(s: &[Formula], i: usize) -> Vec<Formula> {
    let mut v = s.to_vec();
    v.remove(i);
    v
}

impl ShapeRules<'_> {
    /// Every shape obtained by one binary rule from `a` and `b`.
    fn combine(&self, a: &[Formula], b: &[Formula], out: &mut Vec<Sequent>) {
        for (i, x) in a.iter().enumerate() {
            let dual = x.negate();
            if self.cuttable.contains(x) {
                for (j, y) in b.iter().enumerate() {
                    if *y == dual && a.len() + b.len() - 2 <= self.seq_cap {
                        let mut s = without(a, i);
                        s.extend(without(b, j));
                        out.push(sorted(s));
                    }
                }
            }
            for (j, y) in b.iter().enumerate() {
                if a.len() + b.len() - 1 > self.seq_cap {
                    break;
                }
                for t in [Formula::tensor(x.clone(), y.clone()), Formula::tensor(y.clone(), x.clone())] {
                    if self.useful.contains(&t) {
                        let mut s = without(a, i);
                        s.extend(without(b, j));
                        s.push(t);
                        out.push(sorted(s));
                    }
                }
            }
        }
    }

    fn pars(&self, a: &[Formula], out: &mut Vec<Sequent>) {
        for i in 0..a.len() {
            for j in 0..a.len() {
                let p = Formula::par(a[i].clone(), a[j].clone());
                if i != j && self.useful.contains(&p) {
                    let mut s: Vec<Formula> = a.iter().enumerate().filter(|&(k, _)| k != i && k != j).map(|(_, f)| f.clone()).collect();
                    s.push(p);
                    out.push(sorted(s));
                }
            }
        }
    }

    /// Least axiom uses of some derivation of each reachable shape.
    fn reachable(&self, truncated: &mut bool) -> Option<HashMap<Sequent, usize>> {
        let mut cost: HashMap<Sequent, usize> = HashMap::new();
        for s in self.identities {
            cost.insert(sorted(s.clone()), 0);
        }
        for s in self.axioms {
            let s = sorted(s.clone());
            if s.len() <= self.seq_cap {
                cost.entry(s).or_insert(1);
            }
        }
        loop {
            let shapes: Vec<(Sequent, usize)> = cost.iter().map(|(s, &c)| (s.clone(), c)).collect();
            let mut changed = false;
            let mut out = Vec::new();
            for (a, ca) in &shapes {
                out.clear();
                self.pars(a, &mut out);
                for s in out.drain(..) {
                    changed |= relax(&mut cost, s, *ca);
                }
                for (b, cb) in &shapes {
                    if ca + cb > self.max_axioms {
                        *truncated = true;
                        continue;
                    }
                    self.combine(a, b, &mut out);
                    for s in out.drain(..) {
                        changed |= relax(&mut cost, s, ca + cb);
                    }
                }
            }
            if cost.len() > MAX_SHAPES {
                return None;
            }
            if !changed {
                return Some(cost);
            }
        }
    }
}

fn relax(cost: &mut HashMap<Sequent, usize>, s: Sequent, c: usize) -> bool {
    match cost.get(&s) {
        Some(&old) if old <= c => false,
        _ => {
            cost.insert(s, c);
            true
        }
    }
}

impl ShapeBounds {
    pub(super) fn new(rules: &ShapeRules<'_>) -> ShapeBounds {
        let mut truncated = false;
        let Some(built) = rules.reachable(&mut truncated) else { return ShapeBounds { to_goal: None, truncated } };
        let shapes: Vec<(&Sequent, usize)> = built.iter().map(|(s, &c)| (s, c)).collect();
        // successors of every shape with the cost of reaching them
        let mut edges: HashMap<&Sequent, Vec<(Sequent, usize)>> = HashMap::new();
        let mut out = Vec::new();
        for &(a, _) in &shapes {
            let e = edges.entry(a).or_default();
            rules.pars(a, &mut out);
            e.extend(out.drain(..).map(|s| (s, 0)));
            for &(b, cb) in &shapes {
                rules.combine(a, b, &mut out);
                rules.combine(b, a, &mut out);
                e.extend(out.drain(..).map(|s| (s, cb)));
            }
        }
        let mut to_goal: HashMap<Sequent, usize> = HashMap::new();
        to_goal.insert(sorted(rules.goal.clone()), 0);
        loop {
            let mut changed = false;
            for (a, succ) in &edges {
                for (s, c) in succ {
                    if let Some(&d) = to_goal.get(s) {
                        changed |= relax(&mut to_goal, (*a).clone(), c + d);
                    }
                }
            }
            if !changed {
                break;
            }
        }
        ShapeBounds { to_goal: Some(to_goal), truncated }
    }

    /// `None` when the sequent cannot become the goal, within the budget
    /// if `truncated`.
    pub(super) fn remaining(&self, seq: &[Formula]) -> Option<usize> {
        match &self.to_goal {
            None => Some(0),
            Some(m) => m.get(&sorted(seq.to_vec())).copied(),
        }
    }
}
