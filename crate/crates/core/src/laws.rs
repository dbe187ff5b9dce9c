//! The equations of a compact closed category, checked on concrete
//! cowordisms. Each check returns a description of the first violation.

use rand::Rng;

use crate::category::{self as cat, Cowordism};
use crate::error::Result;
use crate::multiword::Boundary;
use crate::random::{random_any, random_from, seeded, RandomConfig};

pub type LawResult = std::result::Result<(), String>;

fn same(law: &str, lhs: Result<Cowordism>, rhs: Result<Cowordism>) -> LawResult {
    match (lhs, rhs) {
        (Ok(a), Ok(b)) if a == b => Ok(()),
        (Ok(a), Ok(b)) => Err(format!("{law}: {a} differs from {b}")),
        (Err(e), _) | (_, Err(e)) => Err(format!("{law}: {e}")),
    }
}

/// `h∘(g∘f) = (h∘g)∘f` for a composable chain `f, g, h`.
pub fn associativity(f: &Cowordism, g: &Cowordism, h: &Cowordism) -> LawResult {
    same(
        "associativity",
        cat::compose(f, g).and_then(|gf| cat::compose(&gf, h)),
        cat::compose(g, h).and_then(|hg| cat::compose(f, &hg)),
    )
}

pub fn identities(f: &Cowordism) -> LawResult {
    same("left identity", cat::compose(f, &cat::identity(f.target())), Ok(f.clone()))?;
    same("right identity", cat::compose(&cat::identity(f.source()), f), Ok(f.clone()))
}

/// The tensor is strictly associative with the empty boundary as unit.
pub fn monoidal(f: &Cowordism, g: &Cowordism, h: &Cowordism) -> LawResult {
    let unit = cat::identity(&Boundary::unit());
    same("tensor unit", Ok(cat::tensor(f, &unit)), Ok(f.clone()))?;
    same("tensor unit", Ok(cat::tensor(&unit, f)), Ok(f.clone()))?;
    same(
        "tensor associativity",
        Ok(cat::tensor(&cat::tensor(f, g), h)),
        Ok(cat::tensor(f, &cat::tensor(g, h))),
    )?;
    same(
        "tensor of identities",
        Ok(cat::tensor(&cat::identity(f.source()), &cat::identity(g.source()))),
        Ok(cat::identity(&f.source().tensor(g.source()))),
    )
}

/// `(g⊗g')∘(f⊗f') = (g∘f)⊗(g'∘f')`.
pub fn interchange(f: &Cowordism, g: &Cowordism, f2: &Cowordism, g2: &Cowordism) -> LawResult {
    same(
        "interchange",
        cat::compose(&cat::tensor(f, f2), &cat::tensor(g, g2)),
        cat::compose(f, g).and_then(|a| cat::compose(f2, g2).map(|b| cat::tensor(&a, &b))),
    )
}

/// Naturality and self-inverseness of the symmetry.
pub fn symmetry(f: &Cowordism, g: &Cowordism) -> LawResult {
    let (x, y) = (f.source(), g.source());
    same(
        "symmetry naturality",
        cat::compose(&cat::tensor(f, g), &cat::symmetry(f.target(), g.target())),
        cat::compose(&cat::symmetry(x, y), &cat::tensor(g, f)),
    )?;
    same(
        "symmetry involution",
        cat::compose(&cat::symmetry(x, y), &cat::symmetry(y, x)),
        Ok(cat::identity(&x.tensor(y))),
    )
}

/// `(−)⊥` is an involutive contravariant functor.
pub fn duality(f: &Cowordism, g: &Cowordism) -> LawResult {
    same("dual involution", Ok(cat::dual(&cat::dual(f))), Ok(f.clone()))?;
    same(
        "dual reverses composition",
        cat::compose(f, g).map(|gf| cat::dual(&gf)),
        cat::compose(&cat::dual(g), &cat::dual(f)),
    )?;
    same("dual of identity", Ok(cat::dual(&cat::identity(f.source()))), Ok(cat::identity(&f.source().dual())))
}

/// Currying is inverse to uncurrying and `ev∘(Λf⊗id) = f`, for
/// `f: X⊗Y → Z` where `Y` is the last `ylen` points of the source.
pub fn closure(f: &Cowordism, ylen: usize) -> LawResult {
    let s = f.source();
    let y = s.slice(s.len() - ylen + 1, ylen);
    let curried = cat::curry(f, &y).map_err(|e| format!("curry: {e}"))?;
    same("uncurry after curry", cat::uncurry(&curried, &y), Ok(f.clone()))?;
    same(
        "evaluation",
        cat::compose(&cat::tensor(&curried, &cat::identity(&y)), &cat::evaluation(&y, f.target())),
        Ok(f.clone()),
    )?;
    same(
        "name",
        cat::compose(&cat::tensor(&cat::name(f), &cat::identity(s)), &cat::evaluation(s, f.target())),
        Ok(f.clone()),
    )
}

/// The coname is the pairing precomposed with the cowordism, and the
/// snake equation holds for the pairing and copairing.
pub fn compact(f: &Cowordism) -> LawResult {
    let (x, y) = (f.source(), f.target());
    same(
        "coname",
        cat::compose(&cat::tensor(&cat::identity(&y.dual()), f), &cat::pairing(y)),
        Ok(cat::coname(f)),
    )?;
    // X → (X⊥℘X)⊗X = X⊗X⊥⊗X → X
    same(
        "snake",
        cat::compose(&cat::tensor(&cat::copairing(x), &cat::identity(x)), &cat::tensor(&cat::identity(x), &cat::pairing(x))),
        Ok(cat::identity(x)),
    )
}

#[derive(Clone, Debug, Default)]
pub struct LawReport {
    pub instances: usize,
    pub checks: usize,
    pub failures: Vec<String>,
}

/// Runs every law on `instances` random cowordisms from `seed`.
pub fn run_suite(seed: u64, instances: usize, max_len: usize, cfg: &RandomConfig) -> LawReport {
    let mut rng = seeded(seed);
    let mut report = LawReport { instances, ..Default::default() };
    for _ in 0..instances {
        let f = random_any(&mut rng, max_len, cfg);
        let g = random_from(&mut rng, f.target(), max_len, cfg);
        let h = random_from(&mut rng, g.target(), max_len, cfg);
        let f2 = random_any(&mut rng, max_len, cfg);
        let g2 = random_from(&mut rng, f2.target(), max_len, cfg);
        let ylen = rng.gen_range(0..=f.source().len());
        let results = [
            associativity(&f, &g, &h),
            identities(&f),
            monoidal(&f, &g, &f2),
            interchange(&f, &g, &f2, &g2),
            symmetry(&f, &f2),
            duality(&f, &g),
            closure(&f, ylen),
            compact(&f),
        ];
        for r in results {
            report.checks += 1;
            if let Err(e) = r {
                report.failures.push(e);
            }
        }
    }
    report
}
