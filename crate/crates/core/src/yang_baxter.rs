//! Braid-equation operators induced by cocommutative Hopf braces.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::brace::{left_action, right_action, HopfBraceData};
use crate::error::{Error, Result};
use crate::hopf::{tensor_square_comul, Verified};
use crate::kit::{chain, Legs};
use crate::report::{AxiomReport, Failure, WITNESS_LIMIT};
use crate::tensor::{audit_maps, LinMap};

/// Largest tensor power handled by [`gamma_mu`].
pub const MAX_ARITY: usize = 4;

fn require_cocommutative(b: &HopfBraceData) -> Result<()> {
    if b.is_cocommutative() {
        Ok(())
    } else {
        Err(Error::NotCocommutative)
    }
}

/// `σ(a⊗b) = b₁ ⊗ S(b₂)ab₃`.
pub fn braiding_sigma(b: &HopfBraceData) -> Result<LinMap> {
    require_cocommutative(b)?;
    let l = Legs::new(b.field(), b.dim());
    chain(&[
        &l.t(&[&l.id(), &l.iterated_mul(&b.dot.mul, 3)?])?,
        &l.t(&[&l.id(), &b.dot.antipode, &l.ids(2)])?,
        &l.perm(&[1, 2, 0, 3])?,
        &l.t(&[&l.id(), &l.iterated_comul(&b.comul, 3)?])?,
    ])
}

/// `c(x⊗y) = (x₁⇀y₁) ⊗ (x₂↼y₂)`.
pub fn c_map(b: &HopfBraceData) -> Result<LinMap> {
    require_cocommutative(b)?;
    let l = Legs::new(b.field(), b.dim());
    let (left, right) = (left_action(b)?, right_action(b)?);
    chain(&[&l.t(&[&left, &right])?, &l.perm(&[0, 2, 1, 3])?, &l.t(&[&b.comul, &b.comul])?])
}

/// A braid operator with its exact inverse and the audit that certified it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidOperator {
    pub c: LinMap,
    pub inverse: LinMap,
    pub report: AxiomReport,
}

impl BraidOperator {
    pub fn verified(&self) -> bool {
        self.report.passed()
    }
}

/// Builds `c`, inverts it by elimination and audits the braid equation and
/// the coalgebra-map property for the tensor-square coalgebra.
pub fn yb_operator_c(b: &Verified<HopfBraceData>) -> Result<BraidOperator> {
    let c = c_map(b)?;
    let inverse = c.inverse().ok_or(Error::NotInvertible)?;
    let mut report = check_braid(&c);
    let n = b.dim();
    let d2 = tensor_square_comul(&b.comul, n)?;
    audit_maps(&mut report, "c is comultiplicative", d2.compose(&c), c.tensor(&c).and_then(|cc| cc.compose(&d2)));
    let ee = b.counit.tensor(&b.counit)?;
    audit_maps(&mut report, "c is counital", ee.compose(&c), Ok(ee.clone()));
    Ok(BraidOperator { c, inverse, report })
}

/// `(f⊗id)(id⊗f)(f⊗id) = (id⊗f)(f⊗id)(id⊗f)` on the third tensor power.
pub fn check_braid(f: &LinMap) -> AxiomReport {
    let mut r = AxiomReport::new();
    let dims = f.domain_dims();
    if dims.len() != 2 || f.codomain_dims() != dims || dims[0] != dims[1] {
        r.fail_simple("braid equation", format!("expected an endomorphism of a tensor square, got {:?}", dims));
        return r;
    }
    let l = Legs::new(f.field(), dims[0]);
    let (a, b) = match (l.t(&[f, &l.id()]), l.t(&[&l.id(), f])) {
        (Ok(a), Ok(b)) => (a, b),
        _ => unreachable!("shapes checked above"),
    };
    audit_maps(&mut r, "braid equation", chain(&[&a, &b, &a]), chain(&[&b, &a, &b]));
    r
}

/// `f` acting on legs `i, i+1` (zero-based) of `n`.
fn on_pair(l: &Legs, f: &LinMap, i: usize, n: usize) -> Result<LinMap> {
    l.at(f, i, 2, n)
}

/// `μ_n(a¹⊗…⊗aⁿ) = a¹₁ ⊗ (a¹₂⇀a²) ⊗ … ⊗ (a¹ₙ⇀aⁿ)`.
fn mu(b: &HopfBraceData, h: &LinMap, n: usize) -> Result<LinMap> {
    let l = Legs::new(b.field(), b.dim());
    let mut images = vec![0];
    for j in 1..n {
        images.push(j);
        images.push(n + j - 1);
    }
    let mut acts: Vec<&LinMap> = vec![];
    let id = l.id();
    acts.push(&id);
    for _ in 1..n {
        acts.push(h);
    }
    chain(&[&l.t(&acts)?, &l.perm(&images)?, &l.t(&[&l.iterated_comul(&b.comul, n)?, &l.ids(n - 1)])?])
}

/// `(γ_n, μ_n)` with `γ₂ = μ₂` and `γ_n = μ_n(id ⊗ γ_{n-1})`.
pub fn gamma_mu(b: &HopfBraceData, n: usize) -> Result<(LinMap, LinMap)> {
    require_cocommutative(b)?;
    if !(2..=MAX_ARITY).contains(&n) {
        return Err(Error::ArityTooLarge(n));
    }
    let h = left_action(b)?;
    let l = Legs::new(b.field(), b.dim());
    let mut gamma = mu(b, &h, 2)?;
    let mut mu_n = gamma.clone();
    for k in 3..=n {
        mu_n = mu(b, &h, k)?;
        gamma = mu_n.compose(&l.t(&[&l.id(), &gamma])?)?;
    }
    Ok((gamma, mu_n))
}

/// `γ₂⁻¹(x⊗y) = x₁ ⊗ (T(x₂)⇀y)`.
pub fn gamma2_inverse_formula(b: &HopfBraceData) -> Result<LinMap> {
    let l = Legs::new(b.field(), b.dim());
    let h = left_action(b)?;
    chain(&[&l.t(&[&l.id(), &h])?, &l.t(&[&l.id(), &b.circ.antipode, &l.id()])?, &l.t(&[&b.comul, &l.id()])?])
}

/// `γ_n c_{i,i+1} = σ_{i,i+1} γ_n` for every `i`, plus invertibility of
/// `γ_n`, `μ_n`; at `n = 2` the inverse formula for `γ₂`, at `n = 3` the
/// commutation `μ₃σ₂₃ = σ₂₃μ₃`.
pub fn check_intertwine(b: &HopfBraceData, n: usize) -> Result<AxiomReport> {
    if !(2..=3).contains(&n) {
        return Err(Error::ArityTooLarge(n));
    }
    let (gamma, mu_n) = gamma_mu(b, n)?;
    let c = c_map(b)?;
    let sigma = braiding_sigma(b)?;
    let l = Legs::new(b.field(), b.dim());
    let mut r = AxiomReport::new();
    for i in 0..n - 1 {
        let name = format!("gamma{n} intertwines c at legs {},{}", i + 1, i + 2);
        audit_maps(
            &mut r,
            &name,
            on_pair(&l, &c, i, n).and_then(|x| gamma.compose(&x)),
            on_pair(&l, &sigma, i, n).and_then(|x| x.compose(&gamma)),
        );
    }
    for (name, m) in [(format!("gamma{n} invertible"), &gamma), (format!("mu{n} invertible"), &mu_n)] {
        r.record(&name);
        if !m.is_invertible() {
            r.fail_simple(&name, String::from("elimination found no pivot"));
        }
    }
    if n == 2 {
        let inv = gamma2_inverse_formula(b);
        let id = l.ids(2);
        audit_maps(&mut r, "gamma2 inverse formula (left)", inv.clone().and_then(|g| g.compose(&gamma)), Ok(id.clone()));
        audit_maps(&mut r, "gamma2 inverse formula (right)", inv.and_then(|g| gamma.compose(&g)), Ok(id));
    } else {
        let s23 = on_pair(&l, &sigma, 1, 3)?;
        audit_maps(&mut r, "mu3 commutes with sigma at legs 2,3", mu_n.compose(&s23), s23.compose(&mu_n));
    }
    Ok(r)
}

/// Whether `c² = id` and whether `·` is commutative, with witnesses for
/// whichever fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct C2Report {
    pub c2_id: bool,
    pub commutative: bool,
    pub witnesses: Vec<Failure>,
}

pub fn check_c2(b: &HopfBraceData) -> Result<C2Report> {
    let c = c_map(b)?;
    let n = b.dim();
    let l = Legs::new(b.field(), n);
    let cc = c.compose(&c)?;
    let id = l.ids(2);
    let mut witnesses = cc.differences(&id, "c squared is identity", WITNESS_LIMIT);
    let c2_id = witnesses.is_empty();
    let flipped = b.dot.mul.compose(&l.perm(&[1, 0])?)?;
    let comm = b.dot.mul.differences(&flipped, "dot is commutative", WITNESS_LIMIT);
    let commutative = comm.is_empty();
    witnesses.extend(comm);
    Ok(C2Report { c2_id, commutative, witnesses })
}

/// A map `r: X × X -> X × X` on `X = {0, …, n-1}`, `r[i·n + j] = r(i, j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetSolution {
    pub n: usize,
    pub r: Vec<(usize, usize)>,
}

impl SetSolution {
    pub fn apply(&self, i: usize, j: usize) -> (usize, usize) {
        self.r[i * self.n + j]
    }

    pub fn is_bijective(&self) -> bool {
        let mut seen = vec![false; self.n * self.n];
        self.r.iter().all(|&(a, b)| !core::mem::replace(&mut seen[a * self.n + b], true))
    }

    /// Set-level braid equation on every triple, plus bijectivity.
    pub fn check(&self) -> AxiomReport {
        let mut rep = AxiomReport::new();
        rep.record("bijective");
        if !self.is_bijective() {
            rep.fail_simple("bijective", String::from("two pairs share an image"));
        }
        let name = "set braid equation";
        rep.record(name);
        let n = self.n;
        let r12 = |(a, b, c): (usize, usize, usize)| {
            let (x, y) = self.apply(a, b);
            (x, y, c)
        };
        let r23 = |(a, b, c): (usize, usize, usize)| {
            let (x, y) = self.apply(b, c);
            (a, x, y)
        };
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let t = (a, b, c);
                    let lhs = r12(r23(r12(t)));
                    let rhs = r23(r12(r23(t)));
                    if lhs != rhs {
                        rep.fail(Failure {
                            axiom: String::from(name),
                            input: vec![a, b, c],
                            output: vec![],
                            lhs: format!("{lhs:?}"),
                            rhs: format!("{rhs:?}"),
                        });
                    }
                }
            }
        }
        rep
    }
}

/// Indices of a group-like basis: `Δ(eᵢ) = eᵢ⊗eᵢ`, `ε(eᵢ) = 1` for all `i`.
pub fn is_group_like_basis(b: &HopfBraceData) -> bool {
    let n = b.dim();
    let one = b.field().one();
    (0..n).all(|i| {
        let col = b.comul.column(i);
        let single = col.is_some_and(|c| c.len() == 1 && c.get(&(i * n + i)) == Some(&one));
        single && b.counit.get(&[], &[i]) == one
    })
}

/// `c` restricted to the group-like basis.
pub fn set_solution(b: &HopfBraceData) -> Result<SetSolution> {
    if !is_group_like_basis(b) {
        return Err(Error::NotGroupAlgebraBrace);
    }
    let c = c_map(b)?;
    let n = b.dim();
    let one = b.field().one();
    let mut r = Vec::with_capacity(n * n);
    for k in 0..n * n {
        let col = c.column(k).ok_or(Error::NotGroupAlgebraBrace)?;
        match col.iter().next() {
            Some((&out, x)) if col.len() == 1 && *x == one => r.push((out / n, out % n)),
            _ => return Err(Error::NotGroupAlgebraBrace),
        }
    }
    Ok(SetSolution { n, r })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::HopfAlgebraData;
    use crate::scalars::FieldSpec;
    use crate::skew::{cyclic_group, flagship_skew_brace, group_algebra_brace, set_solution_direct, symmetric_group3, SkewBrace};

    fn trivial(g: &crate::skew::FiniteGroup) -> Verified<HopfBraceData> {
        group_algebra_brace(&SkewBrace::trivial(g), FieldSpec::Rationals).unwrap().verify().unwrap()
    }

    #[test]
    fn commutative_trivial_brace_gives_flip() {
        let b = trivial(&cyclic_group(2));
        let op = yb_operator_c(&b).unwrap();
        let flip = LinMap::permute(FieldSpec::Rationals, 2, 2, &[1, 0]).unwrap();
        assert_eq!(op.c, flip);
        assert!(op.verified());
        let b6 = trivial(&cyclic_group(6));
        assert_eq!(braiding_sigma(&b6).unwrap(), LinMap::permute(FieldSpec::Rationals, 6, 2, &[1, 0]).unwrap());
    }

    #[test]
    fn trivial_s3_brace_is_conjugation() {
        let g = symmetric_group3();
        let b = trivial(&g);
        let s = set_solution(&b).unwrap();
        for x in 0..6 {
            for y in 0..6 {
                assert_eq!(s.apply(x, y), (y, g.mul(g.mul(g.inv(y), x), y)));
            }
        }
        assert_eq!(c_map(&b).unwrap(), braiding_sigma(&b).unwrap());
        assert!(check_braid(&braiding_sigma(&b).unwrap()).passed());
    }

    #[test]
    fn flagship_operator_and_intertwiners() {
        let b = group_algebra_brace(&flagship_skew_brace(), FieldSpec::Rationals).unwrap().verify().unwrap();
        let op = yb_operator_c(&b).unwrap();
        assert!(op.verified(), "{}", op.report.summary());
        assert_eq!(op.c.compose(&op.inverse).unwrap(), LinMap::identity(FieldSpec::Rationals, &[6, 6]));
        for n in [2, 3] {
            let r = check_intertwine(&b, n).unwrap();
            assert!(r.passed(), "{}", r.summary());
        }
        let c2 = check_c2(&b).unwrap();
        assert!(c2.c2_id && c2.commutative);
        let s = set_solution(&b).unwrap();
        assert!(s.check().passed());
        assert_eq!(s, set_solution_direct(&flagship_skew_brace()));
    }

    #[test]
    fn s3_fails_c2_with_witnesses() {
        let c2 = check_c2(&trivial(&symmetric_group3())).unwrap();
        assert!(!c2.c2_id && !c2.commutative);
        assert!(c2.witnesses.iter().any(|w| w.axiom == "c squared is identity"));
        assert!(c2.witnesses.iter().any(|w| w.axiom == "dot is commutative"));
    }

    #[test]
    fn trivial_brace_gammas_are_identity() {
        let b = trivial(&symmetric_group3());
        for n in 2..=3 {
            let (g, _) = gamma_mu(&b, n).unwrap();
            assert_eq!(g, LinMap::identity(FieldSpec::Rationals, &vec![6; n]));
        }
        assert_eq!(gamma_mu(&b, 5), Err(Error::ArityTooLarge(5)));
        assert_eq!(check_intertwine(&b, 4).unwrap_err(), Error::ArityTooLarge(4));
    }

    #[test]
    fn gamma4_on_small_brace() {
        let b = trivial(&cyclic_group(2));
        assert!(gamma_mu(&b, 4).unwrap().0.is_invertible());
    }

    #[test]
    fn random_map_fails_braid() {
        let f = FieldSpec::Rationals;
        let mut m = LinMap::identity(f, &[2, 2]);
        m.add(&[0, 1], &[0, 0], f.one()).unwrap();
        m.add(&[1, 1], &[1, 0], f.from_i64(3)).unwrap();
        assert!(m.is_invertible());
        assert!(!check_braid(&m).passed());
    }

    #[test]
    fn non_cocommutative_input_is_rejected() {
        let g = symmetric_group3();
        let h = HopfAlgebraData::group_algebra(FieldSpec::Rationals, g.table(), 0, g.inverses(), (0..6).map(|i| format!("g{i}")).collect()).unwrap();
        let d = crate::hopf::dualize(&h);
        let b = HopfBraceData::trivial(&d);
        assert_eq!(braiding_sigma(&b), Err(Error::NotCocommutative));
        assert_eq!(set_solution(&b), Err(Error::NotGroupAlgebraBrace));
    }
}
