//! The compact closed category of cowordisms.
//!
//! A cowordism `σ: X→Y` is a multiword on `Y⊗X⊥`. Everything here is a pure
//! function over immutable values. `X℘Y` is the boundary `Y⊗X` and `X⊸Y` is
//! `Y⊗X⊥`; the type layer above remembers which connective built a boundary.

use std::fmt;

use crate::error::{Error, Result};
use crate::multiword::{Boundary, CyclicWord, Edge, Multiword};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Cowordism {
    source: Boundary,
    target: Boundary,
    body: Multiword,
}

impl Cowordism {
    pub fn new(source: Boundary, target: Boundary, body: Multiword) -> Result<Cowordism> {
        let expect = target.tensor(&source.dual());
        if body.boundary() != &expect {
            return Err(Error::Mismatch(format!(
                "body boundary {} is not {} ⊗ ({})⊥ = {}",
                body.boundary(),
                target,
                source,
                expect
            )));
        }
        Ok(Cowordism { source, target, body })
    }

    pub fn from_edges(source: Boundary, target: Boundary, edges: Vec<Edge>, cyclic: Vec<CyclicWord>) -> Result<Cowordism> {
        let body = Multiword::new(target.tensor(&source.dual()), edges, cyclic)?;
        Ok(Cowordism { source, target, body })
    }

    /// A cowordism `1 → target` with the given body.
    pub fn point(body: Multiword) -> Cowordism {
        Cowordism { source: Boundary::unit(), target: body.boundary().clone(), body }
    }

    pub fn source(&self) -> &Boundary {
        &self.source
    }

    pub fn target(&self) -> &Boundary {
        &self.target
    }

    pub fn body(&self) -> &Multiword {
        &self.body
    }

    pub fn into_body(self) -> Multiword {
        self.body
    }

    pub fn is_regular(&self) -> bool {
        self.body.is_regular()
    }

    /// Re-reads the same body at another type with the same body boundary.
    pub fn retype(&self, source: Boundary, target: Boundary) -> Result<Cowordism> {
        Cowordism::new(source, target, self.body.clone())
    }

    pub fn pattern(&self) -> Cowordism {
        Cowordism { source: self.source.clone(), target: self.target.clone(), body: self.body.pattern() }
    }
}

impl fmt::Display for Cowordism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {} : {}", self.source, self.target, self.body)
    }
}

/// `X℘Y = Y⊗X`.
pub fn par(x: &Boundary, y: &Boundary) -> Boundary {
    y.tensor(x)
}

/// `X⊸Y = Y⊗X⊥`.
pub fn lolli(x: &Boundary, y: &Boundary) -> Boundary {
    y.tensor(&x.dual())
}

pub fn identity(x: &Boundary) -> Cowordism {
    let n = x.len();
    let edges = (1..=n)
        .map(|i| {
            let j = 2 * n - i + 1;
            if x.is_left(i) {
                Edge::eps(i, j)
            } else {
                Edge::eps(j, i)
            }
        })
        .collect();
    let body = Multiword::from_parts(x.tensor(&x.dual()), edges, vec![]);
    Cowordism { source: x.clone(), target: x.clone(), body }
}

/// `τ∘σ = ⟨τ⊗σ⟩_{|Z|+Y⊥⊗Y}` for `σ: X→Y`, `τ: Y→Z`.
pub fn compose(sigma: &Cowordism, tau: &Cowordism) -> Result<Cowordism> {
    if sigma.target != tau.source {
        return Err(Error::Mismatch(format!(
            "cannot compose: target {} differs from source {}",
            sigma.target, tau.source
        )));
    }
    let glued = tau.body.tensor(&sigma.body);
    let body = glued.iterated_contraction(tau.target.len(), &sigma.target)?;
    Ok(Cowordism { source: sigma.source.clone(), target: tau.target.clone(), body })
}

/// Composes a chain left to right: `compose_all([f, g, h]) = h∘g∘f`.
pub fn compose_all(chain: &[Cowordism]) -> Result<Cowordism> {
    let mut it = chain.iter();
    let first = it.next().ok_or_else(|| Error::Mismatch("empty composition chain".into()))?;
    let mut acc = first.clone();
    for c in it {
        acc = compose(&acc, c)?;
    }
    Ok(acc)
}

/// `σ⊗τ: X⊗Z → Y⊗T` for `σ: X→Y`, `τ: Z→T`.
pub fn tensor(sigma: &Cowordism, tau: &Cowordism) -> Cowordism {
    let (ny, nt, nz) = (sigma.target.len(), tau.target.len(), tau.source.len());
    let phi = |i: usize| if i <= ny { i } else { i + nt + nz };
    let psi = |i: usize| i + ny;
    let mut edges: Vec<Edge> = sigma
        .body
        .edges()
        .iter()
        .map(|e| Edge::new(phi(e.from), e.label.clone(), phi(e.to)))
        .collect();
    edges.extend(tau.body.edges().iter().map(|e| Edge::new(psi(e.from), e.label.clone(), psi(e.to))));
    let mut cyclic = sigma.body.cyclic().to_vec();
    cyclic.extend(tau.body.cyclic().iter().cloned());
    let source = sigma.source.tensor(&tau.source);
    let target = sigma.target.tensor(&tau.target);
    let body = Multiword::from_parts(target.tensor(&source.dual()), edges, cyclic);
    Cowordism { source, target, body }
}

pub fn tensor_all(items: &[Cowordism]) -> Cowordism {
    items.iter().fold(identity(&Boundary::unit()), |acc, c| tensor(&acc, c))
}

/// `s_{X,Y}: X⊗Y → Y⊗X`, written out edge by edge.
pub fn symmetry(x: &Boundary, y: &Boundary) -> Cowordism {
    let (nx, ny) = (x.len(), y.len());
    let mut edges = Vec::with_capacity(nx + ny);
    for i in 1..=nx {
        let (a, b) = (ny + i, 2 * nx + 2 * ny - i + 1);
        edges.push(if x.is_left(i) { Edge::eps(a, b) } else { Edge::eps(b, a) });
    }
    for i in 1..=ny {
        let (a, b) = (i, nx + 2 * ny - i + 1);
        edges.push(if y.is_left(i) { Edge::eps(a, b) } else { Edge::eps(b, a) });
    }
    let source = x.tensor(y);
    let target = y.tensor(x);
    let body = Multiword::from_parts(target.tensor(&source.dual()), edges, vec![]);
    Cowordism { source, target, body }
}

/// Permutation cowordism `X₁⊗…⊗X_m → X_{o₁}⊗…⊗X_{o_m}` (0-based `order`).
pub fn block_permutation(blocks: &[Boundary], order: &[usize]) -> Result<Cowordism> {
    let mut seen = vec![false; blocks.len()];
    if order.len() != blocks.len() || order.iter().any(|&o| o >= blocks.len() || std::mem::replace(&mut seen[o], true)) {
        return Err(Error::Mismatch(format!("{order:?} is not a permutation of {} blocks", blocks.len())));
    }
    let source = Boundary::tensor_all(blocks.iter());
    let target = Boundary::tensor_all(order.iter().map(|&o| &blocks[o]));
    let mut in_off = vec![0; blocks.len()];
    for k in 1..blocks.len() {
        in_off[k] = in_off[k - 1] + blocks[k - 1].len();
    }
    let (nx, ny) = (source.len(), target.len());
    let mut edges = Vec::with_capacity(nx);
    let mut out = 0;
    for &o in order {
        let b = &blocks[o];
        for q in 1..=b.len() {
            let y = out + q;
            let x = ny + nx + 1 - (in_off[o] + q);
            edges.push(if b.is_left(q) { Edge::eps(y, x) } else { Edge::eps(x, y) });
        }
        out += b.len();
    }
    let body = Multiword::from_parts(target.tensor(&source.dual()), edges, vec![]);
    Ok(Cowordism { source, target, body })
}

/// `σ⊥: Y⊥ → X⊥`, re-indexing by the cyclic permutation of the body.
pub fn dual(sigma: &Cowordism) -> Cowordism {
    let (nx, ny) = (sigma.source.len(), sigma.target.len());
    let phi = |i: usize| if i <= ny { i + nx } else { i - ny };
    let edges = sigma
        .body
        .edges()
        .iter()
        .map(|e| Edge::new(phi(e.from), e.label.clone(), phi(e.to)))
        .collect();
    let source = sigma.target.dual();
    let target = sigma.source.dual();
    let body = Multiword::from_parts(target.tensor(&source.dual()), edges, sigma.body.cyclic().to_vec());
    Cowordism { source, target, body }
}

fn split_suffix(whole: &Boundary, suffix: &Boundary, what: &str) -> Result<Boundary> {
    if suffix.len() > whole.len() || !whole.is_subboundary(whole.len() - suffix.len(), suffix) {
        return Err(Error::Mismatch(format!("{what}: {whole} does not end with {suffix}")));
    }
    Ok(whole.slice(1, whole.len() - suffix.len()))
}

fn split_prefix(whole: &Boundary, prefix: &Boundary, what: &str) -> Result<Boundary> {
    if !whole.is_subboundary(0, prefix) {
        return Err(Error::Mismatch(format!("{what}: {whole} does not start with {prefix}")));
    }
    Ok(whole.slice(prefix.len() + 1, whole.len() - prefix.len()))
}

/// `Hom(X⊗Y, Z) → Hom(X, Y⊸Z)`. The body does not change.
pub fn curry(sigma: &Cowordism, y: &Boundary) -> Result<Cowordism> {
    let x = split_suffix(&sigma.source, y, "curry")?;
    sigma.retype(x, lolli(y, &sigma.target))
}

/// `Hom(X, Y⊸Z) → Hom(X⊗Y, Z)`.
pub fn uncurry(sigma: &Cowordism, y: &Boundary) -> Result<Cowordism> {
    let z = split_suffix(&sigma.target, &y.dual(), "uncurry")?;
    sigma.retype(sigma.source.tensor(y), z)
}

/// `⌈σ⌉: 1 → X⊸Y`.
pub fn name(sigma: &Cowordism) -> Cowordism {
    Cowordism { source: Boundary::unit(), target: sigma.body.boundary().clone(), body: sigma.body.clone() }
}

/// `⌊σ⌋ = (⌈σ⊥⌉)⊥ : Y⊥⊗X → 1` for `σ: X→Y`.
pub fn coname(sigma: &Cowordism) -> Cowordism {
    dual(&name(&dual(sigma)))
}

/// `X⊥⊗X → 1`, the coname of the identity.
pub fn pairing(x: &Boundary) -> Cowordism {
    coname(&identity(x))
}

/// `1 → X⊥℘X`, the name of the identity.
pub fn copairing(x: &Boundary) -> Cowordism {
    name(&identity(x))
}

/// `ev: (X⊸Y)⊗X → Y`.
pub fn evaluation(x: &Boundary, y: &Boundary) -> Cowordism {
    uncurry(&identity(&lolli(x, y)), x).expect("evaluation is well typed")
}

/// `δ: (X℘Y)⊗Z → X℘(Y⊗Z)`.
pub fn linear_distributivity(x: &Boundary, y: &Boundary, z: &Boundary) -> Cowordism {
    block_permutation(&[y.clone(), x.clone(), z.clone()], &[0, 2, 1]).expect("fixed permutation")
}

/// `δ: (X℘Y)⊗(Z℘T) → X℘(Y⊗Z)℘T`.
pub fn internal_tensor(x: &Boundary, y: &Boundary, z: &Boundary, t: &Boundary) -> Cowordism {
    block_permutation(&[y.clone(), x.clone(), t.clone(), z.clone()], &[2, 0, 3, 1]).expect("fixed permutation")
}

/// `ε: X⊗(Y℘Z)⊗T → (X⊗Y)℘(Z⊗T)`, the dual of the internal tensor on duals.
pub fn internal_cotensor(x: &Boundary, y: &Boundary, z: &Boundary, t: &Boundary) -> Cowordism {
    dual(&internal_tensor(&x.dual(), &y.dual(), &z.dual(), &t.dual()))
}

/// `τ∘_Y σ = τ∘(σ⊗id_T)` for `σ: X→Y`, `τ: Y⊗T→Z`.
pub fn partial_compose(sigma: &Cowordism, tau: &Cowordism, t: &Boundary) -> Result<Cowordism> {
    compose(&tensor(sigma, &identity(t)), tau)
}

/// The cut `⟨σ,τ⟩_Y` for `σ: 1→X℘Y` and `τ: 1→Y⊥℘Z`, giving `1→X℘Z`.
pub fn partial_pairing(sigma: &Cowordism, tau: &Cowordism, y: &Boundary) -> Result<Cowordism> {
    if !sigma.source.is_empty() || !tau.source.is_empty() {
        return Err(Error::Mismatch("partial pairing needs two points 1→…".into()));
    }
    let x = split_prefix(&sigma.target, y, "partial pairing (left)")?;
    let z = split_suffix(&tau.target, &y.dual(), "partial pairing (right)")?;
    let delta = internal_tensor(&x, y, &y.dual(), &z);
    let close = tensor_all(&[identity(&z), pairing(&y.dual()), identity(&x)]);
    compose_all(&[tensor(sigma, tau), delta, close])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multiword::Word;

    fn lr() -> Boundary {
        Boundary::standard()
    }

    fn word_point(w: &str) -> Cowordism {
        Cowordism::from_edges(Boundary::unit(), lr(), vec![Edge::new(1, Word::parse(w), 2)], vec![]).unwrap()
    }

    #[test]
    fn identity_of_standard_type() {
        let id = identity(&lr());
        assert_eq!(id.body().edges(), &[Edge::eps(1, 4), Edge::eps(3, 2)]);
        assert_eq!(identity(&Boundary::unit()).body(), &Multiword::unit());
    }

    #[test]
    fn producer_then_consumer_makes_a_loop() {
        let producer = word_point("w");
        let consumer = Cowordism::from_edges(lr(), Boundary::unit(), vec![Edge::new(1, Word::parse("v"), 2)], vec![]).unwrap();
        let c = compose(&producer, &consumer).unwrap();
        assert!(c.body().boundary().is_empty());
        assert_eq!(c.body().cyclic(), &[CyclicWord::new(Word::parse("v w"))]);
        assert_eq!(CyclicWord::new(Word::parse("v w")), CyclicWord::new(Word::parse("w v")));
    }

    #[test]
    fn identity_tensor_identity() {
        let t = tensor(&identity(&lr()), &identity(&lr()));
        assert_eq!(t, identity(&lr().tensor(&lr())));
        assert_eq!(
            t.body().edges(),
            &[Edge::eps(1, 8), Edge::eps(3, 6), Edge::eps(5, 4), Edge::eps(7, 2)]
        );
    }

    #[test]
    fn symmetry_with_unit_is_identity() {
        let y = Boundary::parse("lrrl").unwrap();
        assert_eq!(symmetry(&Boundary::unit(), &y), identity(&y));
        assert_eq!(symmetry(&y, &Boundary::unit()), identity(&y));
    }

    #[test]
    fn symmetry_is_a_block_permutation() {
        let x = Boundary::parse("lrl").unwrap();
        let y = Boundary::parse("rr").unwrap();
        assert_eq!(symmetry(&x, &y), block_permutation(&[x.clone(), y.clone()], &[1, 0]).unwrap());
        assert_eq!(identity(&x), block_permutation(std::slice::from_ref(&x), &[0]).unwrap());
    }

    #[test]
    fn dual_of_identity() {
        let d = dual(&identity(&lr()));
        assert_eq!(d, identity(&lr().dual()));
        assert_eq!(d.body().edges(), &[Edge::eps(1, 4), Edge::eps(3, 2)]);
    }

    #[test]
    fn name_of_identity_is_copairing() {
        let n = name(&identity(&lr()));
        assert_eq!(n, copairing(&lr()));
        assert_eq!(n.body().edges(), &[Edge::eps(1, 4), Edge::eps(3, 2)]);
        assert!(n.source().is_empty());
        assert_eq!(copairing(&Boundary::unit()).body(), &Multiword::unit());
    }

    #[test]
    fn coname_defining_equation_and_type() {
        let x = Boundary::parse("lrl").unwrap();
        let y = Boundary::parse("l").unwrap();
        let mut rng = crate::random::seeded(3);
        let s = crate::random::random_cowordism(&mut rng, &x, &y, &crate::random::RandomConfig::default()).unwrap();
        let c = coname(&s);
        assert_eq!(c.source(), &y.dual().tensor(&x));
        assert!(c.target().is_empty());
        assert_eq!(c.body(), dual(&s).body());
    }

    #[test]
    fn curry_is_a_retyping() {
        let x = Boundary::parse("lr").unwrap();
        let y = Boundary::parse("rl").unwrap();
        let z = Boundary::parse("rlrl").unwrap();
        let mut rng = crate::random::seeded(5);
        let s = crate::random::random_cowordism(&mut rng, &x.tensor(&y), &z, &Default::default()).unwrap();
        let c = curry(&s, &y).unwrap();
        assert_eq!(c.body(), s.body());
        assert_eq!(c.target(), &lolli(&y, &z));
        assert_eq!(uncurry(&c, &y).unwrap(), s);
        assert_eq!(curry(&s, &Boundary::unit()).unwrap(), s);
    }

    #[test]
    fn evaluation_over_unit_is_identity() {
        let y = Boundary::parse("lrr").unwrap();
        let y = y.tensor(&Boundary::parse("l").unwrap());
        assert_eq!(evaluation(&Boundary::unit(), &y), identity(&y));
        let ev = evaluation(&lr(), &lr());
        assert_eq!(ev.body().edges().len(), 4);
        assert!(ev.body().edges().iter().all(|e| e.label.is_empty()));
    }

    #[test]
    fn structural_maps_on_units() {
        let u = Boundary::unit();
        assert_eq!(linear_distributivity(&u, &u, &u), identity(&u));
        assert_eq!(internal_tensor(&u, &u, &u, &u), identity(&u));
        assert_eq!(internal_cotensor(&u, &u, &u, &u), identity(&u));
    }

    #[test]
    fn internal_tensor_from_symmetries() {
        let x = Boundary::parse("l").unwrap();
        let y = Boundary::parse("rl").unwrap();
        let z = Boundary::parse("lr").unwrap();
        let t = Boundary::parse("r").unwrap();
        // [Y,X,T,Z] -> [Y,T,X,Z] -> [T,Y,X,Z] -> [T,Y,Z,X]
        let a = tensor_all(&[identity(&y), symmetry(&x, &t), identity(&z)]);
        let b = tensor_all(&[symmetry(&y, &t), identity(&x), identity(&z)]);
        let c = tensor_all(&[identity(&t), identity(&y), symmetry(&x, &z)]);
        let via_symmetries = compose_all(&[a, b, c]).unwrap();
        assert_eq!(internal_tensor(&x, &y, &z, &t), via_symmetries);
        let d = linear_distributivity(&x, &y, &z);
        assert_eq!(d, tensor(&identity(&y), &symmetry(&x, &z)));
    }

    #[test]
    fn internal_cotensor_is_direct_permutation() {
        let x = Boundary::parse("l").unwrap();
        let y = Boundary::parse("rl").unwrap();
        let z = Boundary::parse("lr").unwrap();
        let t = Boundary::parse("rrl").unwrap();
        // X⊗(Y℘Z)⊗T = X⊗Z⊗Y⊗T → (X⊗Y)℘(Z⊗T) = Z⊗T⊗X⊗Y
        let direct = block_permutation(&[x.clone(), z.clone(), y.clone(), t.clone()], &[1, 3, 0, 2]).unwrap();
        assert_eq!(internal_cotensor(&x, &y, &z, &t), direct);
    }

    #[test]
    fn cut_of_two_copairings() {
        let x = lr();
        let c = copairing(&x);
        // ⊢X⊥,X cut ⊢X⊥,X over X gives ⊢X⊥,X again
        let r = partial_pairing(&c, &c, &x).unwrap();
        assert_eq!(r, c);
    }

    #[test]
    fn cut_of_word_points_makes_a_loop() {
        // σ: 1→S (X = 1, Y = S), τ: 1 → S⊥ (Z = 1)
        let s = word_point("a b");
        let t = Cowordism::from_edges(Boundary::unit(), lr().dual(), vec![Edge::new(1, Word::parse("c"), 2)], vec![]).unwrap();
        let r = partial_pairing(&s, &t, &lr()).unwrap();
        assert!(r.target().is_empty());
        assert_eq!(r.body().cyclic(), &[CyclicWord::new(Word::parse("a b c"))]);
    }

    #[test]
    fn cut_over_unit_is_retyped_tensor() {
        let s = word_point("a");
        let t = word_point("b");
        let r = partial_pairing(&s, &t, &Boundary::unit()).unwrap();
        assert_eq!(r.body(), tensor(&t, &s).body());
    }

    #[test]
    fn partial_compose_degenerates() {
        let mut rng = crate::random::seeded(9);
        let cfg = crate::random::RandomConfig::default();
        let x = Boundary::parse("lr").unwrap();
        let y = Boundary::parse("rl").unwrap();
        let z = Boundary::parse("lrrl").unwrap();
        let s = crate::random::random_cowordism(&mut rng, &x, &y, &cfg).unwrap();
        let t = crate::random::random_cowordism(&mut rng, &y, &z, &cfg).unwrap();
        assert_eq!(partial_compose(&s, &t, &Boundary::unit()).unwrap(), compose(&s, &t).unwrap());
        assert_eq!(partial_compose(&identity(&y), &t, &Boundary::unit()).unwrap(), t);
    }

    #[test]
    fn compose_rejects_mismatch() {
        assert!(compose(&identity(&lr()), &identity(&Boundary::parse("rl").unwrap())).is_err());
    }
}
