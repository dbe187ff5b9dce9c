//! Boundaries, multiwords and contraction.
//!
//! Positions are 1-based everywhere. A boundary is an ordered list of
//! endpoints, each polarized left or right. A multiword on a boundary is a
//! perfect matching of its endpoints by labeled edges running from a left
//! endpoint to a right endpoint, together with a multiset of cyclic words.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A single alphabet token. Tokens are arbitrary non-empty strings, so
/// `John` is one letter.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(Arc<str>);

impl Symbol {
    pub fn new(s: &str) -> Symbol {
        Symbol(Arc::from(s))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &*self.0)
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for Symbol {
    fn from(s: &str) -> Symbol {
        Symbol::new(s)
    }
}

/// A finite sequence of symbols. The empty word is ε.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(pub Vec<Symbol>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    /// Splits on whitespace: `Word::parse("John loves")` has two letters.
    pub fn parse(text: &str) -> Word {
        Word(text.split_whitespace().map(Symbol::new).collect())
    }

    pub fn from_symbols<I, S>(items: I) -> Word
    where
        I: IntoIterator<Item = S>,
        S: Into<Symbol>,
    {
        Word(items.into_iter().map(Into::into).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// True if `self` occurs as a contiguous factor of `host`.
    pub fn is_factor_of(&self, host: &Word) -> bool {
        if self.is_empty() {
            return true;
        }
        host.0.windows(self.len()).any(|w| w == self.0.as_slice())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{}\"", self)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(s.as_str())?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Polarity {
    Left,
    Right,
}

impl Polarity {
    pub fn flip(self) -> Polarity {
        match self {
            Polarity::Left => Polarity::Right,
            Polarity::Right => Polarity::Left,
        }
    }
}

/// An ordered finite set of polarized endpoints.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Boundary {
    pol: Vec<Polarity>,
}

impl Boundary {
    /// The unit object **1**.
    pub fn unit() -> Boundary {
        Boundary { pol: Vec::new() }
    }

    /// The standard type: one left endpoint followed by one right endpoint.
    pub fn standard() -> Boundary {
        Boundary { pol: vec![Polarity::Left, Polarity::Right] }
    }

    pub fn from_polarities(pol: Vec<Polarity>) -> Boundary {
        Boundary { pol }
    }

    /// Builds a boundary from its cardinality and its set of left positions.
    pub fn new(cardinality: usize, left: &[usize]) -> Result<Boundary> {
        let mut pol = vec![Polarity::Right; cardinality];
        for &p in left {
            if p == 0 || p > cardinality {
                return Err(Error::Boundary(format!(
                    "left position {p} outside 1..{cardinality}"
                )));
            }
            pol[p - 1] = Polarity::Left;
        }
        Ok(Boundary { pol })
    }

    /// Parses a polarity string such as `lrlr`. `1` and the empty string
    /// denote the unit.
    pub fn parse(text: &str) -> Result<Boundary> {
        if text == "1" {
            return Ok(Boundary::unit());
        }
        let mut pol = Vec::with_capacity(text.len());
        for (i, c) in text.chars().enumerate() {
            match c {
                'l' => pol.push(Polarity::Left),
                'r' => pol.push(Polarity::Right),
                other => {
                    return Err(Error::Boundary(format!(
                        "bad polarity '{other}' at column {}",
                        i + 1
                    )))
                }
            }
        }
        Ok(Boundary { pol })
    }

    pub fn len(&self) -> usize {
        self.pol.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pol.is_empty()
    }

    pub fn polarities(&self) -> &[Polarity] {
        &self.pol
    }

    /// Polarity at a 1-based position.
    pub fn polarity(&self, pos: usize) -> Polarity {
        self.pol[pos - 1]
    }

    pub fn is_left(&self, pos: usize) -> bool {
        self.pol[pos - 1] == Polarity::Left
    }

    pub fn left_set(&self) -> Vec<usize> {
        (1..=self.len()).filter(|&p| self.is_left(p)).collect()
    }

    pub fn right_set(&self) -> Vec<usize> {
        (1..=self.len()).filter(|&p| !self.is_left(p)).collect()
    }

    pub fn is_balanced(&self) -> bool {
        2 * self.left_set().len() == self.len()
    }

    pub fn tensor(&self, other: &Boundary) -> Boundary {
        let mut pol = self.pol.clone();
        pol.extend_from_slice(&other.pol);
        Boundary { pol }
    }

    pub fn tensor_all<'a, I: IntoIterator<Item = &'a Boundary>>(items: I) -> Boundary {
        let mut pol = Vec::new();
        for b in items {
            pol.extend_from_slice(&b.pol);
        }
        Boundary { pol }
    }

    /// `(X⊥)_l = |X|+1−X_r`: reversed order, flipped polarity.
    pub fn dual(&self) -> Boundary {
        Boundary { pol: self.pol.iter().rev().map(|p| p.flip()).collect() }
    }

    /// Sub-boundary `offset + sub` of `self`.
    pub fn is_subboundary(&self, offset: usize, sub: &Boundary) -> bool {
        offset + sub.len() <= self.len() && self.pol[offset..offset + sub.len()] == sub.pol[..]
    }

    /// The `len` positions starting at 1-based position `from`.
    pub fn slice(&self, from: usize, len: usize) -> Boundary {
        Boundary { pol: self.pol[from - 1..from - 1 + len].to_vec() }
    }
}

impl fmt::Display for Boundary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pol.is_empty() {
            return f.write_str("1");
        }
        for p in &self.pol {
            f.write_str(match p {
                Polarity::Left => "l",
                Polarity::Right => "r",
            })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Boundary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Boundary({self})")
    }
}

/// An edge `(from, label, to)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Edge {
    pub from: usize,
    pub label: Word,
    pub to: usize,
}

impl Edge {
    pub fn new(from: usize, label: Word, to: usize) -> Edge {
        Edge { from, label, to }
    }

    pub fn eps(from: usize, to: usize) -> Edge {
        Edge { from, label: Word::empty(), to }
    }
}

/// A word up to rotation, stored as its lexicographically least rotation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CyclicWord(Word);

impl CyclicWord {
    pub fn new(w: Word) -> CyclicWord {
        let n = w.len();
        if n <= 1 {
            return CyclicWord(w);
        }
        let s = &w.0;
        let best = (0..n)
            .min_by(|&a, &b| {
                let ra = s[a..].iter().chain(s[..a].iter());
                let rb = s[b..].iter().chain(s[..b].iter());
                ra.cmp(rb)
            })
            .unwrap_or(0);
        let mut v = Vec::with_capacity(n);
        v.extend_from_slice(&s[best..]);
        v.extend_from_slice(&s[..best]);
        CyclicWord(Word(v))
    }

    pub fn word(&self) -> &Word {
        &self.0
    }
}

/// Regular part plus cyclic part on a boundary.
///
/// Edges are kept sorted by their left endpoint and cyclic words sorted, so
/// structural equality is multiword equality.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Multiword {
    boundary: Boundary,
    edges: Vec<Edge>,
    cyclic: Vec<CyclicWord>,
}

impl Multiword {
    /// Validating constructor.
    pub fn new(boundary: Boundary, mut edges: Vec<Edge>, mut cyclic: Vec<CyclicWord>) -> Result<Multiword> {
        let n = boundary.len();
        let mut seen = vec![false; n + 1];
        for e in &edges {
            for (p, want) in [(e.from, Polarity::Left), (e.to, Polarity::Right)] {
                if p == 0 || p > n {
                    return Err(Error::Multiword(format!("position {p} outside 1..{n}")));
                }
                if boundary.polarity(p) != want {
                    return Err(Error::Multiword(format!(
                        "edge ({},{},{}) does not run from a left to a right endpoint",
                        e.from, e.label, e.to
                    )));
                }
                if seen[p] {
                    return Err(Error::Multiword(format!("position {p} is covered twice")));
                }
                seen[p] = true;
            }
        }
        if let Some(p) = (1..=n).find(|&p| !seen[p]) {
            return Err(Error::Multiword(format!("position {p} is not covered")));
        }
        edges.sort();
        cyclic.sort();
        Ok(Multiword { boundary, edges, cyclic })
    }

    /// Constructor for callers that have already established the invariants.
    pub(crate) fn from_parts(boundary: Boundary, mut edges: Vec<Edge>, mut cyclic: Vec<CyclicWord>) -> Multiword {
        edges.sort();
        cyclic.sort();
        let m = Multiword { boundary, edges, cyclic };
        debug_assert!(m.check().is_ok(), "{:?}", m.check());
        m
    }

    /// The empty multiword on **1**.
    pub fn unit() -> Multiword {
        Multiword { boundary: Boundary::unit(), edges: Vec::new(), cyclic: Vec::new() }
    }

    /// Re-checks the perfect-matching invariant.
    pub fn check(&self) -> Result<()> {
        Multiword::new(self.boundary.clone(), self.edges.clone(), self.cyclic.clone()).map(|_| ())
    }

    pub fn boundary(&self) -> &Boundary {
        &self.boundary
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn cyclic(&self) -> &[CyclicWord] {
        &self.cyclic
    }

    pub fn is_regular(&self) -> bool {
        self.cyclic.is_empty()
    }

    /// Total number of letters on edges and loops.
    pub fn label_length(&self) -> usize {
        self.edges.iter().map(|e| e.label.len()).sum::<usize>()
            + self.cyclic.iter().map(|c| c.word().len()).sum::<usize>()
    }

    /// The edge leaving the left endpoint `pos`, if any.
    pub fn edge_from(&self, pos: usize) -> Option<&Edge> {
        self.edges
            .binary_search_by(|e| e.from.cmp(&pos))
            .ok()
            .map(|i| &self.edges[i])
    }

    pub fn edge_into(&self, pos: usize) -> Option<&Edge> {
        self.edges.iter().find(|e| e.to == pos)
    }

    /// `(M⊗N)`: edges of `other` shifted by `|M|`, cyclic parts summed.
    pub fn tensor(&self, other: &Multiword) -> Multiword {
        let k = self.boundary.len();
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|e| Edge::new(e.from + k, e.label.clone(), e.to + k)));
        let mut cyclic = self.cyclic.clone();
        cyclic.extend(other.cyclic.iter().cloned());
        Multiword::from_parts(self.boundary.tensor(&other.boundary), edges, cyclic)
    }

    /// Elementary contraction `⟨M⟩_{n,n+1}`.
    pub fn elementary_contraction(&self, n: usize) -> Result<Multiword> {
        let size = self.boundary.len();
        if n == 0 || n + 1 > size {
            return Err(Error::Contraction(format!("position {n} out of range for |X|={size}")));
        }
        if self.boundary.polarity(n) == self.boundary.polarity(n + 1) {
            return Err(Error::Contraction(format!(
                "positions {n} and {} have the same polarity",
                n + 1
            )));
        }
        let (x, y) = if self.boundary.is_left(n) { (n + 1, n) } else { (n, n + 1) };
        // φ⁻¹ on surviving positions
        let back = |p: usize| if p < n { p } else { p - 2 };
        let mut edges = Vec::with_capacity(self.edges.len());
        let mut cyclic = self.cyclic.clone();
        let mut into_x: Option<&Edge> = None;
        let mut from_y: Option<&Edge> = None;
        for e in &self.edges {
            if e.to == x {
                into_x = Some(e);
            }
            if e.from == y {
                from_y = Some(e);
            }
        }
        let (ex, ey) = match (into_x, from_y) {
            (Some(a), Some(b)) => (a, b),
            _ => return Err(Error::Contraction("multiword is not a perfect matching".into())),
        };
        if ex == ey {
            cyclic.push(CyclicWord::new(ex.label.clone()));
        } else {
            edges.push(Edge::new(back(ex.from), ex.label.concat(&ey.label), back(ey.to)));
        }
        for e in &self.edges {
            if e.to == x || e.from == y {
                continue;
            }
            edges.push(Edge::new(back(e.from), e.label.clone(), back(e.to)));
        }
        let mut pol = self.boundary.pol.clone();
        pol.drain(n - 1..n + 1);
        Ok(Multiword::from_parts(Boundary { pol }, edges, cyclic))
    }

    /// `⟨M⟩_{i+Y⊥⊗Y}`: contracts at `i+n`, then `i+n−1`, …, then `i+1`.
    pub fn iterated_contraction(&self, offset: usize, y: &Boundary) -> Result<Multiword> {
        let region = y.dual().tensor(y);
        if !self.boundary.is_subboundary(offset, &region) {
            return Err(Error::Contraction(format!(
                "{offset}+({}) is not a sub-boundary of {}",
                region, self.boundary
            )));
        }
        let mut m = self.clone();
        for k in (1..=y.len()).rev() {
            m = m.elementary_contraction(offset + k)?;
        }
        Ok(m)
    }

    /// Erases all letters.
    pub fn pattern(&self) -> Multiword {
        let edges = self.edges.iter().map(|e| Edge::eps(e.from, e.to)).collect();
        let cyclic = self.cyclic.iter().map(|_| CyclicWord::new(Word::empty())).collect();
        Multiword::from_parts(self.boundary.clone(), edges, cyclic)
    }

    /// Re-indexes positions: old position `p` moves to `perm[p-1]` on the new
    /// boundary. `perm` must be a bijection preserving polarity.
    pub fn relabel(&self, boundary: Boundary, perm: &[usize]) -> Multiword {
        debug_assert_eq!(perm.len(), self.boundary.len());
        let edges = self
            .edges
            .iter()
            .map(|e| Edge::new(perm[e.from - 1], e.label.clone(), perm[e.to - 1]))
            .collect();
        Multiword::from_parts(boundary, edges, self.cyclic.clone())
    }

    /// Glues pairs of opposite-polarity positions in one pass by following
    /// paths. The path arriving at the right endpoint of a pair continues
    /// from its left endpoint. Surviving positions keep their relative order.
    pub fn glue(&self, pairs: &[(usize, usize)]) -> Result<Multiword> {
        let n = self.boundary.len();
        // jump[r] = l for glued right endpoint r
        let mut jump = vec![0usize; n + 1];
        let mut glued = vec![false; n + 1];
        for &(a, b) in pairs {
            if a == 0 || b == 0 || a > n || b > n || a == b || glued[a] || glued[b] {
                return Err(Error::Contraction(format!("bad glue pair ({a},{b})")));
            }
            let (r, l) = match (self.boundary.polarity(a), self.boundary.polarity(b)) {
                (Polarity::Right, Polarity::Left) => (a, b),
                (Polarity::Left, Polarity::Right) => (b, a),
                _ => {
                    return Err(Error::Contraction(format!(
                        "glue pair ({a},{b}) has the same polarity"
                    )))
                }
            };
            jump[r] = l;
            glued[a] = true;
            glued[b] = true;
        }
        let mut from_edge = vec![usize::MAX; n + 1];
        for (i, e) in self.edges.iter().enumerate() {
            from_edge[e.from] = i;
        }
        let mut new_pos = vec![0usize; n + 1];
        let mut pol = Vec::new();
        for p in 1..=n {
            if !glued[p] {
                pol.push(self.boundary.polarity(p));
                new_pos[p] = pol.len();
            }
        }
        let mut used = vec![false; self.edges.len()];
        let mut edges = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            if glued[e.from] || used[i] {
                continue;
            }
            let mut label = Vec::new();
            let mut cur = i;
            loop {
                used[cur] = true;
                let c = &self.edges[cur];
                label.extend_from_slice(&c.label.0);
                if glued[c.to] {
                    cur = from_edge[jump[c.to]];
                } else {
                    edges.push(Edge::new(new_pos[e.from], Word(label), new_pos[c.to]));
                    break;
                }
            }
        }
        let mut cyclic = self.cyclic.clone();
        for i in 0..self.edges.len() {
            if used[i] {
                continue;
            }
            let mut label = Vec::new();
            let mut cur = i;
            while !used[cur] {
                used[cur] = true;
                let c = &self.edges[cur];
                label.extend_from_slice(&c.label.0);
                cur = from_edge[jump[c.to]];
            }
            cyclic.push(CyclicWord::new(Word(label)));
        }
        Ok(Multiword::from_parts(Boundary { pol }, edges, cyclic))
    }
}

impl fmt::Display for Multiword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {{", self.boundary)?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, " ({},\"{}\",{})", e.from, e.label, e.to)?;
        }
        for c in &self.cyclic {
            write!(f, " [{}]", c.word())?;
        }
        f.write_str(" }")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::from_symbols(s.chars().map(|c| c.to_string()).collect::<Vec<_>>().iter().map(|s| s.as_str()))
    }

    fn lr(n: usize) -> Boundary {
        Boundary::parse(&"lr".repeat(n)).unwrap()
    }

    #[test]
    fn tensor_boundary_formula() {
        let x = lr(1).tensor(&lr(1));
        assert_eq!(x.len(), 4);
        assert_eq!(x.left_set(), vec![1, 3]);
        assert_eq!(Boundary::unit().tensor(&Boundary::unit()), Boundary::unit());
    }

    #[test]
    fn dual_reverses_and_flips() {
        assert_eq!(Boundary::standard().dual(), Boundary::standard());
        let x = Boundary::parse("llr").unwrap();
        let y = Boundary::parse("rl").unwrap();
        assert_eq!(x.dual(), Boundary::parse("lrr").unwrap());
        assert_eq!(x.tensor(&y).dual(), y.dual().tensor(&x.dual()));
        assert_eq!(x.dual().dual(), x);
    }

    #[test]
    fn subboundary_examples() {
        let host = lr(2);
        assert!(host.is_subboundary(2, &lr(1)));
        assert!(!host.is_subboundary(1, &lr(1)));
        assert!(!lr(1).is_subboundary(2, &lr(1)));
    }

    #[test]
    fn bad_polarity_reports_column() {
        let err = Boundary::parse("lx").unwrap_err().to_string();
        assert!(err.contains("column 2"), "{err}");
    }

    #[test]
    fn tensor_shifts_and_sums() {
        let m = Multiword::new(lr(1), vec![Edge::new(1, w("ab"), 2)], vec![]).unwrap();
        let n = Multiword::new(lr(1), vec![Edge::new(1, w("c"), 2)], vec![]).unwrap();
        let t = m.tensor(&n);
        assert_eq!(t.edges(), &[Edge::new(1, w("ab"), 2), Edge::new(3, w("c"), 4)]);
        assert_eq!(m.tensor(&Multiword::unit()), m);
        let c = Multiword::new(Boundary::unit(), vec![], vec![CyclicWord::new(w("w"))]).unwrap();
        assert_eq!(c.tensor(&c).cyclic().len(), 2);
    }

    #[test]
    fn contraction_glue_case() {
        let m = Multiword::new(lr(2), vec![Edge::new(1, w("ab"), 2), Edge::new(3, w("cd"), 4)], vec![]).unwrap();
        let c = m.elementary_contraction(2).unwrap();
        assert_eq!(c.boundary().left_set(), vec![1]);
        assert_eq!(c.edges(), &[Edge::new(1, w("abcd"), 2)]);
    }

    #[test]
    fn contraction_loop_case() {
        let b = Boundary::new(2, &[2]).unwrap();
        let m = Multiword::new(b, vec![Edge::new(2, w("w"), 1)], vec![]).unwrap();
        let c = m.elementary_contraction(1).unwrap();
        assert!(c.boundary().is_empty());
        assert_eq!(c.cyclic(), &[CyclicWord::new(w("w"))]);
    }

    #[test]
    fn contraction_rejects_same_polarity() {
        let b = Boundary::parse("llrr").unwrap();
        let m = Multiword::new(b, vec![Edge::eps(1, 3), Edge::eps(2, 4)], vec![]).unwrap();
        assert!(m.elementary_contraction(1).is_err());
        assert!(m.elementary_contraction(4).is_err());
    }

    #[test]
    fn iterated_contraction_unit_and_single() {
        let m = Multiword::new(lr(1), vec![Edge::new(1, w("a"), 2)], vec![]).unwrap();
        assert_eq!(m.iterated_contraction(0, &Boundary::unit()).unwrap(), m);
        // Y = single left point: Y⊥⊗Y = rl
        let b = Boundary::parse("lrlr").unwrap();
        let m = Multiword::new(b, vec![Edge::new(1, w("a"), 2), Edge::new(3, w("b"), 4)], vec![]).unwrap();
        let y = Boundary::parse("l").unwrap();
        assert_eq!(m.iterated_contraction(1, &y).unwrap(), m.elementary_contraction(2).unwrap());
    }

    #[test]
    fn pattern_erases() {
        let m = Multiword::new(lr(1), vec![Edge::new(1, w("abc"), 2)], vec![CyclicWord::new(w("xy"))]).unwrap();
        let p = m.pattern();
        assert_eq!(p.edges(), &[Edge::eps(1, 2)]);
        assert_eq!(p.cyclic(), &[CyclicWord::new(Word::empty())]);
        assert_eq!(p.pattern(), p);
    }

    #[test]
    fn cyclic_canonical_rotation() {
        assert_eq!(CyclicWord::new(w("ab")), CyclicWord::new(w("ba")));
        assert_eq!(CyclicWord::new(w("cab")).word(), &w("abc"));
        assert_ne!(CyclicWord::new(w("aab")), CyclicWord::new(w("abb")));
    }

    #[test]
    fn constructor_rejects_non_matchings() {
        assert!(Multiword::new(lr(1), vec![], vec![]).is_err());
        assert!(Multiword::new(lr(1), vec![Edge::eps(2, 1)], vec![]).is_err());
        assert!(Multiword::new(lr(2), vec![Edge::eps(1, 2), Edge::eps(1, 4)], vec![]).is_err());
    }

    #[test]
    fn glue_agrees_with_elementary_contraction() {
        let m = Multiword::new(lr(2), vec![Edge::new(1, w("ab"), 2), Edge::new(3, w("cd"), 4)], vec![]).unwrap();
        assert_eq!(m.glue(&[(2, 3)]).unwrap(), m.elementary_contraction(2).unwrap());
        let b = Boundary::new(2, &[2]).unwrap();
        let m = Multiword::new(b, vec![Edge::new(2, w("w"), 1)], vec![]).unwrap();
        assert_eq!(m.glue(&[(1, 2)]).unwrap(), m.elementary_contraction(1).unwrap());
    }

    #[test]
    fn factor_check() {
        assert!(w("bc").is_factor_of(&w("abcd")));
        assert!(!w("bd").is_factor_of(&w("abcd")));
        assert!(Word::empty().is_factor_of(&Word::empty()));
    }
}
