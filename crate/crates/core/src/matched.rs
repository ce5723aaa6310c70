//! Matched pairs of cocommutative Hopf algebras and bicrossed products.

use alloc::string::String;

use crate::brace::{left_action, product_coalgebra, right_action, HopfBraceData, HopfStructure};
use crate::error::{Error, Result};
use crate::hopf::{check_hopf, check_shape, cocommutative_comul, HopfAlgebraData, Verified};
use crate::kit::{chain, shuffle, tensor};
use crate::report::AxiomReport;
use crate::tensor::{audit_maps, LinMap};

/// Actions `⇀: A ⊗ A -> A` and `↼: A ⊗ A -> A` over the Hopf algebra `A∘`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchedPairData {
    pub circ_hopf: HopfAlgebraData,
    pub left: LinMap,
    pub right: LinMap,
}

/// Module-coalgebra laws of `⇀: K ⊗ H -> H` and `x↼a: K ⊗ H -> K`, the
/// unit conditions, and the two compatibilities
/// `x⇀(ab) = (x₁⇀a₁)((x₂↼a₂)⇀b)`, `(xy)↼a = (x↼(y₁⇀a₁))(y₂↼a₂)`.
pub fn check_matched_actions(h: &HopfAlgebraData, k: &HopfAlgebraData, left: &LinMap, right: &LinMap) -> AxiomReport {
    let mut r = AxiomReport::new();
    let f = h.field();
    let (nh, nk) = (h.dim(), k.dim());
    let shapes = check_shape("left action", left, f, &[nk, nh], &[nh]).and(check_shape("right action", right, f, &[nk, nh], &[nk]));
    if let Err(e) = shapes {
        r.fail_simple("action shape", alloc::format!("{e}"));
        return r;
    }
    let (ih, ik) = (h.id(), k.id());
    let mid = || shuffle(f, &[nk, nk, nh, nh], &[0, 2, 1, 3]);

    audit_maps(&mut r, "left unit", tensor(f, &[&k.unit, &ih]).and_then(|x| left.compose(&x)), Ok(ih.clone()));
    audit_maps(
        &mut r,
        "left associativity",
        tensor(f, &[&k.mul, &ih]).and_then(|x| left.compose(&x)),
        tensor(f, &[&ik, left]).and_then(|x| left.compose(&x)),
    );
    audit_maps(
        &mut r,
        "left comultiplicative",
        h.comul.compose(left),
        (|| chain(&[&left.tensor(left)?, &mid()?, &k.comul.tensor(&h.comul)?]))(),
    );
    audit_maps(&mut r, "left counital", h.counit.compose(left), k.counit.tensor(&h.counit));
    audit_maps(&mut r, "left fixes unit", tensor(f, &[&ik, &h.unit]).and_then(|x| left.compose(&x)), h.unit.compose(&k.counit));

    audit_maps(&mut r, "right unit", tensor(f, &[&ik, &h.unit]).and_then(|x| right.compose(&x)), Ok(ik.clone()));
    audit_maps(
        &mut r,
        "right associativity",
        tensor(f, &[&ik, &h.mul]).and_then(|x| right.compose(&x)),
        tensor(f, &[right, &ih]).and_then(|x| right.compose(&x)),
    );
    audit_maps(
        &mut r,
        "right comultiplicative",
        k.comul.compose(right),
        (|| chain(&[&right.tensor(right)?, &mid()?, &k.comul.tensor(&h.comul)?]))(),
    );
    audit_maps(&mut r, "right counital", k.counit.compose(right), k.counit.tensor(&h.counit));
    audit_maps(&mut r, "right fixes unit", tensor(f, &[&k.unit, &ih]).and_then(|x| right.compose(&x)), k.unit.compose(&h.counit));

    audit_maps(
        &mut r,
        "matched left compatibility",
        tensor(f, &[&ik, &h.mul]).and_then(|x| left.compose(&x)),
        (|| {
            chain(&[
                &h.mul,
                &tensor(f, &[&ih, left])?,
                &tensor(f, &[left, right, &ih])?,
                &shuffle(f, &[nk, nk, nh, nh, nh], &[0, 2, 1, 3, 4])?,
                &tensor(f, &[&k.comul, &h.comul, &ih])?,
            ])
        })(),
    );
    audit_maps(
        &mut r,
        "matched right compatibility",
        tensor(f, &[&k.mul, &ih]).and_then(|x| right.compose(&x)),
        (|| {
            chain(&[
                &k.mul,
                &tensor(f, &[right, &ik])?,
                &tensor(f, &[&ik, left, right])?,
                &shuffle(f, &[nk, nk, nk, nh, nh], &[0, 1, 3, 2, 4])?,
                &tensor(f, &[&ik, &k.comul, &h.comul])?,
            ])
        })(),
    );
    r
}

/// Hopf audit of `A∘`, cocommutativity, [`check_matched_actions`] with
/// `H = K = A∘`, and the factorization `a∘b = (a₁⇀b₁)∘(a₂↼b₂)`.
pub fn check_matched(mp: &MatchedPairData) -> AxiomReport {
    let mut r = AxiomReport::new();
    let a = &mp.circ_hopf;
    r.merge_prefixed("circ", check_hopf(a));
    r.record("cocommutative");
    if !cocommutative_comul(&a.comul, a.dim()) {
        r.fail_simple("cocommutative", String::from("flip∘Δ differs from Δ"));
    }
    let actions = check_matched_actions(a, a, &mp.left, &mp.right);
    let shapes_ok = !actions.failed_axioms().contains(&"action shape");
    r.merge(actions);
    if shapes_ok {
        let f = a.field();
        let n = a.dim();
        audit_maps(
            &mut r,
            "factorization",
            Ok(a.mul.clone()),
            (|| chain(&[&a.mul, &tensor(f, &[&mp.left, &mp.right])?, &LinMap::permute(f, n, 4, &[0, 2, 1, 3])?, &a.comul.tensor(&a.comul)?]))(),
        );
    }
    r
}

/// `(A∘, A∘)` with `h⇀k = S(h₁)(h₂∘k)` and `h↼k = T(h₁⇀k₁)∘h₂∘k₂`.
pub fn matched_from_brace(b: &Verified<HopfBraceData>) -> Result<MatchedPairData> {
    let right = right_action(b)?;
    Ok(MatchedPairData { circ_hopf: b.circ_hopf(), left: left_action(b)?, right })
}

/// `ab = a₁∘(T(a₂)⇀b)`, `S(a) = a₁⇀T(a₂)`.
pub fn derived_dot(mp: &MatchedPairData) -> Result<HopfStructure> {
    let a = &mp.circ_hopf;
    let f = a.field();
    let id = a.id();
    let mul = chain(&[&a.mul, &tensor(f, &[&id, &mp.left])?, &tensor(f, &[&id, &a.antipode, &id])?, &a.comul.tensor(&id)?])?;
    let antipode = chain(&[&mp.left, &id.tensor(&a.antipode)?, &a.comul])?;
    Ok(HopfStructure { mul, unit: a.unit.clone(), antipode })
}

/// Rebuilds the brace; also audits `a₁S(a₂) = ε(a)1` for the derived `S`.
pub fn brace_from_matched(mp: &MatchedPairData) -> Result<HopfBraceData> {
    let mut r = check_matched(mp);
    if !r.passed() {
        return Err(Error::MatchedInvalid(r));
    }
    let dot = derived_dot(mp)?;
    let a = &mp.circ_hopf;
    audit_maps(
        &mut r,
        "derived antipode",
        (|| chain(&[&dot.mul, &a.id().tensor(&dot.antipode)?, &a.comul]))(),
        a.unit.compose(&a.counit),
    );
    if !r.passed() {
        return Err(Error::MatchedInvalid(r));
    }
    Ok(HopfBraceData {
        space: a.space.clone(),
        comul: a.comul.clone(),
        counit: a.counit.clone(),
        dot,
        circ: HopfStructure { mul: a.mul.clone(), unit: a.unit.clone(), antipode: a.antipode.clone() },
    })
}

/// Tensor coalgebra `H ⊗ K` with `(a⊗x)(b⊗y) = a(x₁⇀b₁) ⊗ (x₂↼b₂)y`.
pub fn bicrossed_product(h: &HopfAlgebraData, k: &HopfAlgebraData, left: &LinMap, right: &LinMap) -> Result<HopfAlgebraData> {
    let mut r = AxiomReport::new();
    r.merge_prefixed("H", check_hopf(h));
    r.merge_prefixed("K", check_hopf(k));
    r.merge(check_matched_actions(h, k, left, right));
    if !r.passed() {
        return Err(Error::MatchedInvalid(r));
    }
    let f = h.field();
    let (nh, nk) = (h.dim(), k.dim());
    let n = nh * nk;
    let (ih, ik) = (h.id(), k.id());
    let mul = chain(&[
        &h.mul.tensor(&k.mul)?,
        &tensor(f, &[&ih, left, right, &ik])?,
        &shuffle(f, &[nh, nk, nk, nh, nh, nk], &[0, 1, 3, 2, 4, 5])?,
        &tensor(f, &[&ih, &k.comul, &h.comul, &ik])?,
    ])?
    .reshape(&[n, n], &[n])?;
    // S(a⊗x) = (S(x₂)⇀S(a₂)) ⊗ (S(x₁)↼S(a₁))
    let antipode = chain(&[
        &left.tensor(right)?,
        &tensor(f, &[&k.antipode, &h.antipode, &k.antipode, &h.antipode])?,
        &shuffle(f, &[nh, nh, nk, nk], &[3, 1, 2, 0])?,
        &h.comul.tensor(&k.comul)?,
    ])?
    .reshape(&[n], &[n])?;
    let pc = product_coalgebra(h, k)?;
    HopfAlgebraData::new(pc.space, mul, pc.unit, pc.comul, pc.counit, antipode)
}
