//! Hopf braces: one coalgebra carrying two compatible Hopf structures.

use alloc::format;
use alloc::string::String;

use crate::error::{Error, Result};
use crate::hopf::{check_hopf, check_shape, cocommutative_comul, commutative_mul, HopfAlgebraData, Space, Verified};
use crate::kit::{chain, shuffle, tensor, Legs};
use crate::report::AxiomReport;
use crate::tensor::{audit_maps, LinMap};

/// Multiplication, unit and antipode over a coalgebra fixed elsewhere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopfStructure {
    pub mul: LinMap,
    pub unit: LinMap,
    pub antipode: LinMap,
}

/// `(A, ·, ∘)` sharing `(Δ, ε)`; `dot.antipode` is `S`, `circ.antipode` is `T`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopfBraceData {
    pub space: Space,
    pub comul: LinMap,
    pub counit: LinMap,
    pub dot: HopfStructure,
    pub circ: HopfStructure,
}

impl HopfBraceData {
    /// Pairs two Hopf algebras that share a space and a coalgebra.
    pub fn from_hopf(dot: &HopfAlgebraData, circ: &HopfAlgebraData) -> Result<Self> {
        if dot.space != circ.space || dot.comul != circ.comul || dot.counit != circ.counit {
            return Err(Error::InvalidShape(String::from("the two structures do not share a coalgebra")));
        }
        Ok(HopfBraceData {
            space: dot.space.clone(),
            comul: dot.comul.clone(),
            counit: dot.counit.clone(),
            dot: HopfStructure { mul: dot.mul.clone(), unit: dot.unit.clone(), antipode: dot.antipode.clone() },
            circ: HopfStructure { mul: circ.mul.clone(), unit: circ.unit.clone(), antipode: circ.antipode.clone() },
        })
    }

    /// The brace with `∘ = ·`.
    pub fn trivial(h: &HopfAlgebraData) -> Self {
        HopfBraceData::from_hopf(h, h).expect("same coalgebra")
    }

    fn assemble(&self, s: &HopfStructure) -> HopfAlgebraData {
        HopfAlgebraData {
            space: self.space.clone(),
            mul: s.mul.clone(),
            unit: s.unit.clone(),
            comul: self.comul.clone(),
            counit: self.counit.clone(),
            antipode: s.antipode.clone(),
        }
    }

    pub fn dot_hopf(&self) -> HopfAlgebraData {
        self.assemble(&self.dot)
    }

    pub fn circ_hopf(&self) -> HopfAlgebraData {
        self.assemble(&self.circ)
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn field(&self) -> crate::scalars::FieldSpec {
        self.space.field
    }

    pub fn is_cocommutative(&self) -> bool {
        cocommutative_comul(&self.comul, self.dim())
    }

    /// `·` is commutative.
    pub fn is_commutative(&self) -> bool {
        commutative_mul(&self.dot.mul, self.dim())
    }

    fn legs(&self) -> Legs {
        Legs::new(self.field(), self.dim())
    }

    /// Both Hopf audits followed by [`check_brace`].
    pub fn audit(&self) -> AxiomReport {
        let mut r = AxiomReport::new();
        r.merge_prefixed("dot", check_hopf(&self.dot_hopf()));
        r.merge_prefixed("circ", check_hopf(&self.circ_hopf()));
        r.merge(check_brace(self));
        r
    }

    pub fn verify(self) -> Result<Verified<Self>> {
        let r = self.audit();
        if r.passed() {
            Ok(Verified::assume(self))
        } else {
            Err(Error::AuditFailed(r))
        }
    }
}

/// `1∘ = 1` and `a∘(bc) = (a₁∘b)S(a₂)(a₃∘c)`.
pub fn check_brace(b: &HopfBraceData) -> AxiomReport {
    let mut r = AxiomReport::new();
    audit_maps(&mut r, "units agree", Ok(b.circ.unit.clone()), Ok(b.dot.unit.clone()));
    let l = b.legs();
    let lhs = l.t(&[&l.id(), &b.dot.mul]).and_then(|x| b.circ.mul.compose(&x));
    let rhs = (|| {
        chain(&[
            &l.iterated_mul(&b.dot.mul, 3)?,
            &l.t(&[&b.circ.mul, &b.dot.antipode, &b.circ.mul])?,
            &l.perm(&[0, 3, 1, 2, 4])?,
            &l.t(&[&l.iterated_comul(&b.comul, 3)?, &l.ids(2)])?,
        ])
    })();
    audit_maps(&mut r, "brace compatibility", lhs, rhs);
    r
}

fn harpoon(b: &HopfBraceData) -> Result<LinMap> {
    let l = b.legs();
    chain(&[&b.dot.mul, &l.t(&[&b.dot.antipode, &b.circ.mul])?, &l.t(&[&b.comul, &l.id()])?])
}

/// `a ⇀ b = S(a₁)(a₂∘b)`.
pub fn left_action(b: &HopfBraceData) -> Result<LinMap> {
    harpoon(b)
}

/// `a ↼ b = T(a₁⇀b₁)∘a₂∘b₂`; defined for cocommutative braces only.
pub fn right_action(b: &HopfBraceData) -> Result<LinMap> {
    if !b.is_cocommutative() {
        return Err(Error::NotCocommutative);
    }
    let l = b.legs();
    let h = harpoon(b)?;
    chain(&[
        &l.iterated_mul(&b.circ.mul, 3)?,
        &l.t(&[&b.circ.antipode, &l.ids(2)])?,
        &l.t(&[&h, &l.ids(2)])?,
        &l.perm(&[0, 2, 1, 3])?,
        &l.t(&[&b.comul, &b.comul])?,
    ])
}

/// `⇀` makes `A` a left `A∘`-module-algebra.
///
/// Besides the four module-algebra laws this audits `T(a₁)⇀(a₂⇀b) = ε(a)b`,
/// which ties the action to `T`.
pub fn check_module_algebra(b: &HopfBraceData) -> AxiomReport {
    let mut r = AxiomReport::new();
    let l = b.legs();
    let h = match harpoon(b) {
        Ok(h) => h,
        Err(e) => {
            r.fail_simple("action", format!("{e}"));
            return r;
        }
    };
    let id = l.id();
    let unit = &b.dot.unit;
    audit_maps(&mut r, "unit acts trivially", l.t(&[&b.circ.unit, &id]).and_then(|x| h.compose(&x)), Ok(id.clone()));
    audit_maps(
        &mut r,
        "action associativity",
        l.t(&[&b.circ.mul, &id]).and_then(|x| h.compose(&x)),
        l.t(&[&id, &h]).and_then(|x| h.compose(&x)),
    );
    audit_maps(&mut r, "action fixes unit", l.t(&[&id, unit]).and_then(|x| h.compose(&x)), unit.compose(&b.counit));
    audit_maps(
        &mut r,
        "action is multiplicative",
        l.t(&[&id, &b.dot.mul]).and_then(|x| h.compose(&x)),
        (|| chain(&[&b.dot.mul, &l.t(&[&h, &h])?, &l.perm(&[0, 2, 1, 3])?, &l.t(&[&b.comul, &l.ids(2)])?]))(),
    );
    audit_maps(
        &mut r,
        "antipode inverts action",
        (|| chain(&[&h, &l.t(&[&b.circ.antipode, &h])?, &l.t(&[&b.comul, &id])?]))(),
        l.t(&[&b.counit, &id]),
    );
    r
}

/// `S(a₁∘b)a₂ = S(a₁)(a₂∘S(b))` and `ε(b)a = a∘(b₁S(b₂)) = (a₁∘b₁)S(a₂)(a₃∘S(b₂))`.
pub fn check_truco(b: &HopfBraceData) -> AxiomReport {
    let mut r = AxiomReport::new();
    let l = b.legs();
    let id = l.id();
    let (s, dot, circ) = (&b.dot.antipode, &b.dot.mul, &b.circ.mul);
    audit_maps(
        &mut r,
        "antipode twist",
        (|| chain(&[dot, &l.t(&[s, &id])?, &l.t(&[circ, &id])?, &l.perm(&[0, 2, 1])?, &l.t(&[&b.comul, &id])?]))(),
        (|| chain(&[dot, &l.t(&[s, circ])?, &l.t(&[&l.ids(2), s])?, &l.t(&[&b.comul, &id])?]))(),
    );
    let eps_a = l.t(&[&id, &b.counit]);
    audit_maps(
        &mut r,
        "counit through circ",
        eps_a.clone(),
        (|| chain(&[circ, &l.t(&[&id, &chain(&[dot, &l.t(&[&id, s])?, &b.comul])?])?]))(),
    );
    audit_maps(
        &mut r,
        "expanded counit through circ",
        eps_a,
        (|| {
            chain(&[
                &l.iterated_mul(dot, 3)?,
                &l.t(&[circ, s, circ])?,
                &l.perm(&[0, 3, 1, 2, 4])?,
                &l.t(&[&l.ids(4), s])?,
                &l.t(&[&l.iterated_comul(&b.comul, 3)?, &b.comul])?,
            ])
        })(),
    );
    r
}

/// `a∘b = a₁(a₂⇀b)` and `ab = a₁∘(T(a₂)⇀b)`.
pub fn check_remark_identities(b: &HopfBraceData) -> AxiomReport {
    let mut r = AxiomReport::new();
    let l = b.legs();
    let id = l.id();
    let h = harpoon(b);
    audit_maps(
        &mut r,
        "circ through action",
        Ok(b.circ.mul.clone()),
        h.clone().and_then(|h| chain(&[&b.dot.mul, &l.t(&[&id, &h])?, &l.t(&[&b.comul, &id])?])),
    );
    audit_maps(
        &mut r,
        "dot through action",
        Ok(b.dot.mul.clone()),
        h.and_then(|h| {
            chain(&[
                &b.circ.mul,
                &l.t(&[&id, &h])?,
                &l.t(&[&id, &b.circ.antipode, &id])?,
                &l.t(&[&b.comul, &id])?,
            ])
        }),
    );
    r
}

/// `S(a⇀b) = a⇀S(b)`; requires cocommutativity.
pub fn check_action_antipode(b: &HopfBraceData) -> Result<AxiomReport> {
    if !b.is_cocommutative() {
        return Err(Error::NotCocommutative);
    }
    let mut r = AxiomReport::new();
    let l = b.legs();
    let h = harpoon(b)?;
    let s = &b.dot.antipode;
    audit_maps(&mut r, "antipode commutes with action", s.compose(&h), l.t(&[&l.id(), s]).and_then(|x| h.compose(&x)));
    Ok(r)
}

/// `f` is a Hopf algebra map `h1 -> h2`.
pub fn check_hopf_morphism(f: &LinMap, h1: &HopfAlgebraData, h2: &HopfAlgebraData) -> AxiomReport {
    let mut r = AxiomReport::new();
    let (n1, n2) = (h1.dim(), h2.dim());
    if let Err(e) = check_shape("morphism", f, h1.field(), &[n1], &[n2]) {
        r.fail_simple("shape", format!("{e}"));
        return r;
    }
    let ff = f.tensor(f);
    audit_maps(&mut r, "preserves multiplication", f.compose(&h1.mul), ff.clone().and_then(|x| h2.mul.compose(&x)));
    audit_maps(&mut r, "preserves unit", f.compose(&h1.unit), Ok(h2.unit.clone()));
    audit_maps(&mut r, "preserves comultiplication", h2.comul.compose(f), ff.and_then(|x| x.compose(&h1.comul)));
    audit_maps(&mut r, "preserves counit", h2.counit.compose(f), Ok(h1.counit.clone()));
    audit_maps(&mut r, "preserves antipode", h2.antipode.compose(f), f.compose(&h1.antipode));
    r
}

/// `f` is a Hopf map for both structures.
pub fn check_brace_morphism(f: &LinMap, a: &HopfBraceData, b: &HopfBraceData) -> AxiomReport {
    let mut r = AxiomReport::new();
    r.merge_prefixed("dot", check_hopf_morphism(f, &a.dot_hopf(), &b.dot_hopf()));
    r.merge_prefixed("circ", check_hopf_morphism(f, &a.circ_hopf(), &b.circ_hopf()));
    r
}

/// A bijective 1-cocycle `π: H -> A` into an `H`-module-algebra `A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneCocycle {
    pub source: HopfAlgebraData,
    pub target: HopfAlgebraData,
    /// `H ⊗ A -> A`.
    pub action: LinMap,
    pub pi: LinMap,
}

/// `K ⊗ H -> H` is a module-algebra action; with `coalgebra` also a
/// module-coalgebra one.
pub(crate) fn audit_module_action(
    r: &mut AxiomReport,
    k: &HopfAlgebraData,
    h: &HopfAlgebraData,
    act: &LinMap,
    coalgebra: bool,
) {
    let f = h.field();
    let (nk, nh) = (k.dim(), h.dim());
    if let Err(e) = check_shape("action", act, f, &[nk, nh], &[nh]) {
        r.fail_simple("action shape", format!("{e}"));
        return;
    }
    let (idk, idh) = (k.id(), h.id());
    audit_maps(r, "unit acts trivially", tensor(f, &[&k.unit, &idh]).and_then(|x| act.compose(&x)), Ok(idh.clone()));
    audit_maps(
        r,
        "action associativity",
        tensor(f, &[&k.mul, &idh]).and_then(|x| act.compose(&x)),
        tensor(f, &[&idk, act]).and_then(|x| act.compose(&x)),
    );
    audit_maps(r, "action fixes unit", tensor(f, &[&idk, &h.unit]).and_then(|x| act.compose(&x)), h.unit.compose(&k.counit));
    audit_maps(
        r,
        "action is multiplicative",
        tensor(f, &[&idk, &h.mul]).and_then(|x| act.compose(&x)),
        (|| {
            chain(&[
                &h.mul,
                &tensor(f, &[act, act])?,
                &shuffle(f, &[nk, nk, nh, nh], &[0, 2, 1, 3])?,
                &tensor(f, &[&k.comul, &idh, &idh])?,
            ])
        })(),
    );
    if coalgebra {
        audit_maps(
            r,
            "action is comultiplicative",
            h.comul.compose(act),
            (|| chain(&[&tensor(f, &[act, act])?, &shuffle(f, &[nk, nk, nh, nh], &[0, 2, 1, 3])?, &tensor(f, &[&k.comul, &h.comul])?]))(),
        );
        audit_maps(r, "action is counital", h.counit.compose(act), tensor(f, &[&k.counit, &h.counit]));
    }
}

/// `H` is a left `K`-module bialgebra via `act: K ⊗ H -> H`.
pub fn check_module_bialgebra(h: &HopfAlgebraData, k: &HopfAlgebraData, act: &LinMap) -> AxiomReport {
    let mut r = AxiomReport::new();
    audit_module_action(&mut r, k, h, act, true);
    r
}

/// Hopf audits of both ends, module-algebra laws, the coalgebra isomorphism
/// and `π(hk) = π(h₁)(h₂⇀π(k))`.
pub fn check_cocycle(c: &OneCocycle) -> AxiomReport {
    let mut r = AxiomReport::new();
    let (hs, ha) = (&c.source, &c.target);
    r.merge_prefixed("source", check_hopf(hs));
    r.merge_prefixed("target", check_hopf(ha));
    audit_module_action(&mut r, hs, ha, &c.action, false);
    let f = ha.field();
    let (nh, na) = (hs.dim(), ha.dim());
    if let Err(e) = check_shape("pi", &c.pi, f, &[nh], &[na]) {
        r.fail_simple("pi shape", format!("{e}"));
        return r;
    }
    let pi = &c.pi;
    r.record("pi invertible");
    let pinv = pi.inverse();
    if pinv.is_none() {
        r.fail_simple("pi invertible", String::from("elimination found no pivot"));
    }
    let pp = pi.tensor(pi);
    audit_maps(&mut r, "pi preserves comultiplication", ha.comul.compose(pi), pp.clone().and_then(|x| x.compose(&hs.comul)));
    audit_maps(&mut r, "pi preserves counit", ha.counit.compose(pi), Ok(hs.counit.clone()));
    if let Some(q) = &pinv {
        audit_maps(
            &mut r,
            "inverse preserves comultiplication",
            hs.comul.compose(q),
            q.tensor(q).and_then(|x| x.compose(&ha.comul)),
        );
    }
    audit_maps(&mut r, "pi preserves unit", pi.compose(&hs.unit), Ok(ha.unit.clone()));
    audit_maps(
        &mut r,
        "cocycle condition",
        pi.compose(&hs.mul),
        (|| {
            chain(&[
                &ha.mul,
                &tensor(f, &[pi, &c.action])?,
                &tensor(f, &[&hs.id(), &hs.id(), pi])?,
                &tensor(f, &[&hs.comul, &hs.id()])?,
            ])
        })(),
    );
    r
}

/// `(A, ·, ∘) ↦ (id: A∘ -> A)` with the action `⇀`.
pub fn cocycle_from_brace(b: &Verified<HopfBraceData>) -> OneCocycle {
    OneCocycle {
        source: b.circ_hopf(),
        target: b.dot_hopf(),
        action: harpoon(b).expect("verified shapes"),
        pi: LinMap::identity(b.field(), &[b.dim()]),
    }
}

/// `a∘b = π(π⁻¹(a)π⁻¹(b))`, `T = πSπ⁻¹` on the target algebra.
pub fn brace_from_cocycle(c: &OneCocycle) -> Result<HopfBraceData> {
    let r = check_cocycle(c);
    if !r.passed() {
        return Err(Error::CocycleInvalid(r));
    }
    let pi = &c.pi;
    let q = pi.inverse().ok_or(Error::NotInvertible)?;
    let hs = &c.source;
    let circ = HopfStructure {
        mul: chain(&[pi, &hs.mul, &q.tensor(&q)?])?,
        unit: pi.compose(&hs.unit)?,
        antipode: chain(&[pi, &hs.antipode, &q])?,
    };
    let t = &c.target;
    Ok(HopfBraceData {
        space: t.space.clone(),
        comul: t.comul.clone(),
        counit: t.counit.clone(),
        dot: HopfStructure { mul: t.mul.clone(), unit: t.unit.clone(), antipode: t.antipode.clone() },
        circ,
    })
}

/// Tensor coalgebra and componentwise unit/counit on `H ⊗ K`, as maps on the
/// product space.
pub(crate) struct ProductCoalgebra {
    pub space: Space,
    pub comul: LinMap,
    pub counit: LinMap,
    pub unit: LinMap,
}

pub(crate) fn product_coalgebra(h: &HopfAlgebraData, k: &HopfAlgebraData) -> Result<ProductCoalgebra> {
    let f = h.field();
    let (nh, nk) = (h.dim(), k.dim());
    let n = nh * nk;
    let comul = shuffle(f, &[nh, nh, nk, nk], &[0, 2, 1, 3])?.compose(&h.comul.tensor(&k.comul)?)?.reshape(&[n], &[n, n])?;
    Ok(ProductCoalgebra {
        space: h.space.product(&k.space)?,
        comul,
        counit: h.counit.tensor(&k.counit)?.reshape(&[n], &[])?,
        unit: h.unit.tensor(&k.unit)?.reshape(&[], &[n])?,
    })
}

/// `h(k₁▸h′) # k₂k′` for an action `▸: K ⊗ H -> H`.
fn smash_mul(h: &HopfAlgebraData, k: &HopfAlgebraData, act: &LinMap) -> Result<LinMap> {
    let f = h.field();
    let (nh, nk) = (h.dim(), k.dim());
    let (ih, ik) = (h.id(), k.id());
    let n = nh * nk;
    chain(&[
        &h.mul.tensor(&k.mul)?,
        &tensor(f, &[&ih, act, &ik, &ik])?,
        &shuffle(f, &[nh, nk, nk, nh, nk], &[0, 1, 3, 2, 4])?,
        &tensor(f, &[&ih, &k.comul, &ih, &ik])?,
    ])?
    .reshape(&[n, n], &[n])
}

/// `(S(k₂)▸S(h)) # S(k₁)`.
fn smash_antipode(h: &HopfAlgebraData, k: &HopfAlgebraData, act: &LinMap) -> Result<LinMap> {
    let f = h.field();
    let (nh, nk) = (h.dim(), k.dim());
    let n = nh * nk;
    chain(&[
        &act.tensor(&k.id())?,
        &tensor(f, &[&k.antipode, &h.antipode, &k.antipode])?,
        &shuffle(f, &[nh, nk, nk], &[2, 0, 1])?,
        &h.id().tensor(&k.comul)?,
    ])?
    .reshape(&[n], &[n])
}

fn tensor_product_mul(h: &HopfAlgebraData, k: &HopfAlgebraData) -> Result<LinMap> {
    let (nh, nk) = (h.dim(), k.dim());
    let n = nh * nk;
    h.mul
        .tensor(&k.mul)?
        .compose(&shuffle(h.field(), &[nh, nk, nh, nk], &[0, 2, 1, 3])?)?
        .reshape(&[n, n], &[n])
}

fn require_cocommutative(h: &HopfAlgebraData) -> Result<()> {
    if cocommutative_comul(&h.comul, h.dim()) {
        Ok(())
    } else {
        Err(Error::NotCocommutative)
    }
}

/// `H#K` with `(h#k)(h′#k′) = hh′#kk′` and `(h#k)∘(h′#k′) = h(k₁⇀h′)#k₂k′`.
pub fn smash_product_brace(h: &Verified<HopfAlgebraData>, k: &Verified<HopfAlgebraData>, act: &LinMap) -> Result<HopfBraceData> {
    require_cocommutative(h)?;
    require_cocommutative(k)?;
    let r = check_module_bialgebra(h, k, act);
    if !r.passed() {
        return Err(Error::NotModuleBialgebra(r));
    }
    let pc = product_coalgebra(h, k)?;
    let n = pc.space.dim();
    Ok(HopfBraceData {
        space: pc.space,
        comul: pc.comul,
        counit: pc.counit,
        dot: HopfStructure {
            mul: tensor_product_mul(h, k)?,
            unit: pc.unit.clone(),
            antipode: h.antipode.tensor(&k.antipode)?.reshape(&[n], &[n])?,
        },
        circ: HopfStructure { mul: smash_mul(h, k, act)?, unit: pc.unit, antipode: smash_antipode(h, k, act)? },
    })
}

fn violated(hypothesis: &str, report: AxiomReport) -> Error {
    Error::HypothesisViolated { hypothesis: String::from(hypothesis), report }
}

/// Both products of smash type: `·` through `cdot` and `∘` through `harpoon`,
/// for commutative `K`.
///
/// The commutation hypothesis `k⇀(k′·h) = k′·(k⇀h)` is audited as written.
pub fn smash_product_brace2(
    h: &Verified<HopfAlgebraData>,
    k: &Verified<HopfAlgebraData>,
    cdot: &LinMap,
    harpoon_act: &LinMap,
) -> Result<HopfBraceData> {
    require_cocommutative(h)?;
    require_cocommutative(k)?;
    if !commutative_mul(&k.mul, k.dim()) {
        let mut r = AxiomReport::new();
        r.fail_simple("K commutative", String::from("multiplication of K differs from its opposite"));
        return Err(violated("K commutative", r));
    }
    let r = check_module_bialgebra(h, k, cdot);
    if !r.passed() {
        return Err(violated("cdot module bialgebra", r));
    }
    let r = check_module_bialgebra(h, k, harpoon_act);
    if !r.passed() {
        return Err(violated("harpoon module bialgebra", r));
    }
    let r = check_actions_commute(h, k, cdot, harpoon_act);
    if !r.passed() {
        return Err(violated("actions commute", r));
    }
    let pc = product_coalgebra(h, k)?;
    Ok(HopfBraceData {
        space: pc.space,
        comul: pc.comul,
        counit: pc.counit,
        dot: HopfStructure { mul: smash_mul(h, k, cdot)?, unit: pc.unit.clone(), antipode: smash_antipode(h, k, cdot)? },
        circ: HopfStructure { mul: smash_mul(h, k, harpoon_act)?, unit: pc.unit, antipode: smash_antipode(h, k, harpoon_act)? },
    })
}

/// `k⇀(k′·h) = k′·(k⇀h)` on `K ⊗ K ⊗ H`.
pub fn check_actions_commute(h: &HopfAlgebraData, k: &HopfAlgebraData, cdot: &LinMap, harpoon_act: &LinMap) -> AxiomReport {
    let mut r = AxiomReport::new();
    let f = h.field();
    let (nh, nk) = (h.dim(), k.dim());
    audit_maps(
        &mut r,
        "actions commute",
        k.id().tensor(cdot).and_then(|x| harpoon_act.compose(&x)),
        (|| chain(&[cdot, &k.id().tensor(harpoon_act)?, &shuffle(f, &[nk, nk, nh], &[1, 0, 2])?]))(),
    );
    r
}

/// Comultiplication, counit and antipode over an algebra fixed elsewhere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoStructure {
    pub comul: LinMap,
    pub counit: LinMap,
    pub antipode: LinMap,
}

/// One algebra `(A, m, 1)` with coalgebras `(Δ·, ε·, S)` and `(Δ∘, ε∘, T)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopfCoBraceData {
    pub space: Space,
    pub mul: LinMap,
    pub unit: LinMap,
    pub dot: CoStructure,
    pub circ: CoStructure,
}

impl HopfCoBraceData {
    fn assemble(&self, s: &CoStructure) -> HopfAlgebraData {
        HopfAlgebraData {
            space: self.space.clone(),
            mul: self.mul.clone(),
            unit: self.unit.clone(),
            comul: s.comul.clone(),
            counit: s.counit.clone(),
            antipode: s.antipode.clone(),
        }
    }

    pub fn dot_hopf(&self) -> HopfAlgebraData {
        self.assemble(&self.dot)
    }

    pub fn circ_hopf(&self) -> HopfAlgebraData {
        self.assemble(&self.circ)
    }

    pub fn audit(&self) -> AxiomReport {
        let mut r = AxiomReport::new();
        r.merge_prefixed("dot", check_hopf(&self.dot_hopf()));
        r.merge_prefixed("circ", check_hopf(&self.circ_hopf()));
        r.merge(check_cobrace(self));
        r
    }
}

/// `ε· = ε∘` and `(id⊗Δ·)Δ∘ = (m⁽²⁾⊗id⊗id)(routing)(Δ∘⊗S⊗Δ∘)Δ·⁽²⁾`.
pub fn check_cobrace(cb: &HopfCoBraceData) -> AxiomReport {
    let mut r = AxiomReport::new();
    audit_maps(&mut r, "counits agree", Ok(cb.circ.counit.clone()), Ok(cb.dot.counit.clone()));
    let l = Legs::new(cb.space.field, cb.space.dim());
    let lhs = l.t(&[&l.id(), &cb.dot.comul]).and_then(|x| x.compose(&cb.circ.comul));
    let rhs = (|| {
        chain(&[
            &l.t(&[&l.iterated_mul(&cb.mul, 3)?, &l.ids(2)])?,
            &l.perm(&[0, 2, 3, 1, 4])?,
            &l.t(&[&cb.circ.comul, &cb.dot.antipode, &cb.circ.comul])?,
            &l.iterated_comul(&cb.dot.comul, 3)?,
        ])
    })();
    audit_maps(&mut r, "co-brace compatibility", lhs, rhs);
    r
}

/// Transposes every structure map into the dual basis.
pub fn dual_cobrace(b: &HopfBraceData) -> HopfCoBraceData {
    let co = |s: &HopfStructure| CoStructure { comul: s.mul.transpose(), counit: s.unit.transpose(), antipode: s.antipode.transpose() };
    HopfCoBraceData {
        space: b.space.clone(),
        mul: b.comul.transpose(),
        unit: b.counit.transpose(),
        dot: co(&b.dot),
        circ: co(&b.circ),
    }
}

pub fn dual_brace(cb: &HopfCoBraceData) -> HopfBraceData {
    let st = |s: &CoStructure| HopfStructure { mul: s.comul.transpose(), unit: s.counit.transpose(), antipode: s.antipode.transpose() };
    HopfBraceData {
        space: cb.space.clone(),
        comul: cb.mul.transpose(),
        counit: cb.unit.transpose(),
        dot: st(&cb.dot),
        circ: st(&cb.circ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::dualize;
    use crate::scalars::FieldSpec;
    use crate::skew::{cyclic_group, flagship_skew_brace, group_algebra_brace, symmetric_group3, FiniteGroup, SkewBrace};
    use alloc::vec;
    use alloc::vec::Vec;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn group_hopf(g: &FiniteGroup) -> HopfAlgebraData {
        HopfAlgebraData::group_algebra(Q, g.table(), g.identity(), g.inverses(), (0..g.order()).map(|i| format!("g{i}")).collect()).unwrap()
    }

    fn trivial(g: &FiniteGroup) -> HopfBraceData {
        HopfBraceData::trivial(&group_hopf(g))
    }

    fn flagship() -> HopfBraceData {
        group_algebra_brace(&flagship_skew_brace(), Q).unwrap()
    }

    /// `K ⊗ H -> H` from a set-level action.
    fn group_action(nk: usize, nh: usize, f: impl Fn(usize, usize) -> usize) -> LinMap {
        let mut m = LinMap::zero(Q, &[nk, nh], &[nh]);
        for k in 0..nk {
            for h in 0..nh {
                m.add(&[f(k, h)], &[k, h], Q.one()).unwrap();
            }
        }
        m
    }

    fn full_audit(b: &HopfBraceData) -> AxiomReport {
        let mut r = b.audit();
        r.merge(check_module_algebra(b));
        r.merge(check_truco(b));
        r.merge(check_remark_identities(b));
        if b.is_cocommutative() {
            r.merge(check_action_antipode(b).unwrap());
        }
        r
    }

    #[test]
    fn corpus_passes_every_identity() {
        for b in [trivial(&symmetric_group3()), trivial(&cyclic_group(2)), flagship()] {
            let r = full_audit(&b);
            assert!(r.passed(), "{}", r.summary());
        }
    }

    #[test]
    fn opposite_circ_is_still_a_brace() {
        // a∘(bc) = bca = (ba)a⁻¹(ca)
        let h = group_hopf(&symmetric_group3());
        let mut op = h.clone();
        op.mul = h.mul.compose(&h.flip()).unwrap();
        let b = HopfBraceData::from_hopf(&h, &op).unwrap();
        assert!(b.audit().passed());
    }

    #[test]
    fn relabelled_circ_breaks_compatibility() {
        let g = symmetric_group3();
        let circ = g.relabel(&[0, 3, 2, 1, 4, 5]);
        assert!(!crate::skew::check_skew_brace(&SkewBrace::new(g.clone(), circ.clone()).unwrap()).passed());
        let b = HopfBraceData::from_hopf(&group_hopf(&g), &group_hopf(&circ)).unwrap();
        let r = b.audit();
        assert_eq!(r.failed_axioms(), vec!["brace compatibility"]);
        assert_eq!(r.failures[0].input.len(), 3);
        assert!(!dual_cobrace(&b).audit().passed());
    }

    #[test]
    fn trivial_actions() {
        let g = symmetric_group3();
        let b = trivial(&g);
        let eps = b.counit.tensor(&LinMap::identity(Q, &[6])).unwrap();
        assert_eq!(left_action(&b).unwrap(), eps);
        let right = right_action(&b).unwrap();
        for x in 0..6 {
            for y in 0..6 {
                let conj = g.mul(g.mul(g.inv(y), x), y);
                assert_eq!(right.get(&[conj], &[x, y]), Q.one());
            }
        }
        let c2 = trivial(&cyclic_group(2));
        assert_eq!(right_action(&c2).unwrap(), LinMap::identity(Q, &[2]).tensor(&c2.counit).unwrap());
    }

    #[test]
    fn left_action_on_group_likes() {
        let sb = flagship_skew_brace();
        let h = left_action(&flagship()).unwrap();
        for x in 0..6 {
            for y in 0..6 {
                assert_eq!(h.column(x * 6 + y).unwrap().len(), 1);
                assert_eq!(h.get(&[sb.lambda(x, y)], &[x, y]), Q.one());
            }
        }
    }

    #[test]
    fn non_cocommutative_is_rejected() {
        let b = HopfBraceData::trivial(&dualize(&group_hopf(&symmetric_group3())));
        assert!(b.audit().passed());
        assert_eq!(right_action(&b), Err(Error::NotCocommutative));
        assert_eq!(check_action_antipode(&b), Err(Error::NotCocommutative));
    }

    #[test]
    fn fault_in_t_breaks_action() {
        let mut b = flagship();
        b.circ.antipode = b.circ.antipode.scale(&Q.from_i64(2));
        let r = check_module_algebra(&b);
        assert!(r.failed_axioms().contains(&"antipode inverts action"));
    }

    #[test]
    fn fault_in_s_breaks_truco() {
        let mut b = flagship();
        b.dot.antipode = LinMap::identity(Q, &[6]);
        assert!(!check_truco(&b).passed());
    }

    #[test]
    fn cocycle_round_trip() {
        for b in [trivial(&symmetric_group3()), flagship()] {
            let v = b.clone().verify().unwrap();
            let c = cocycle_from_brace(&v);
            assert!(check_cocycle(&c).passed());
            assert_eq!(c.pi.compose(&c.source.unit).unwrap(), c.target.unit);
            assert_eq!(brace_from_cocycle(&c).unwrap(), b);
        }
    }

    #[test]
    fn broken_cocycle_is_rejected() {
        let v = flagship().verify().unwrap();
        let mut c = cocycle_from_brace(&v);
        c.pi = c.pi.scale(&Q.from_i64(2));
        match brace_from_cocycle(&c) {
            Err(Error::CocycleInvalid(r)) => assert!(r.failed_axioms().contains(&"cocycle condition")),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn non_trivial_cocycle_transports_structure() {
        // π swaps the two non-identity elements of C3; the action is ε.
        let h = group_hopf(&cyclic_group(3));
        let mut pi = LinMap::zero(Q, &[3], &[3]);
        for (i, j) in [(0, 0), (1, 2), (2, 1)] {
            pi.add(&[j], &[i], Q.one()).unwrap();
        }
        let c = OneCocycle { source: h.clone(), target: h.clone(), action: h.counit.tensor(&h.id()).unwrap(), pi };
        let b = brace_from_cocycle(&c).unwrap();
        assert!(b.audit().passed());
        assert_eq!(b.circ.mul, h.mul);
    }

    #[test]
    fn smash_product_is_the_semidirect_lift() {
        let (h, k) = (group_hopf(&cyclic_group(3)), group_hopf(&cyclic_group(2)));
        let inv = |k: usize, x: usize| if k == 0 { x } else { (3 - x) % 3 };
        let act = group_action(2, 3, inv);
        let (hv, kv) = (h.clone().verify().unwrap(), k.clone().verify().unwrap());
        let b = smash_product_brace(&hv, &kv, &act).unwrap();
        assert!(b.audit().passed());
        assert_eq!(b.space.labels[3], "g1|g1");
        let lift = flagship();
        assert_eq!((&b.dot.mul, &b.circ.mul, &b.circ.antipode), (&lift.dot.mul, &lift.circ.mul, &lift.circ.antipode));
        let same = smash_product_brace2(&hv, &kv, &group_action(2, 3, |_, x| x), &act).unwrap();
        assert_eq!(same, b);
        let both = smash_product_brace2(&hv, &kv, &act, &act).unwrap();
        assert!(full_audit(&both).passed());
    }

    #[test]
    fn smash_with_trivial_action_is_trivial() {
        let (h, k) = (group_hopf(&cyclic_group(3)).verify().unwrap(), group_hopf(&cyclic_group(2)).verify().unwrap());
        let b = smash_product_brace(&h, &k, &group_action(2, 3, |_, x| x)).unwrap();
        assert_eq!(b.dot, b.circ);
    }

    #[test]
    fn smash_rejects_bad_inputs() {
        let h = group_hopf(&cyclic_group(3)).verify().unwrap();
        let k = dualize(&group_hopf(&symmetric_group3())).verify().unwrap();
        let act = h.counit.tensor(&h.id()).unwrap();
        let act6 = k.counit.tensor(&h.id()).unwrap();
        assert_eq!(smash_product_brace(&h, &k, &act6), Err(Error::NotCocommutative));
        let c2 = group_hopf(&cyclic_group(2)).verify().unwrap();
        let shift = group_action(2, 3, |k, x| (x + k) % 3);
        assert!(matches!(smash_product_brace(&h, &c2, &shift), Err(Error::NotModuleBialgebra(_))));
        let _ = act;
    }

    #[test]
    fn non_commuting_actions_violate_the_hypothesis() {
        // Klein four-group: elements 0, 1=(0,1), 2=(1,0), 3=(1,1).
        let v4 = cyclic_group(2).direct_product(&cyclic_group(2));
        let h = group_hopf(&v4).verify().unwrap();
        let swap12 = [0, 2, 1, 3];
        let swap23 = [0, 1, 3, 2];
        let by = |bit: usize, p: [usize; 4]| move |k: usize, x: usize| if (k >> bit) & 1 == 1 { p[x] } else { x };
        let cdot = group_action(4, 4, by(1, swap12));
        let harp = group_action(4, 4, by(0, swap23));
        match smash_product_brace2(&h, &h, &cdot, &harp) {
            Err(Error::HypothesisViolated { hypothesis, report }) => {
                assert_eq!(hypothesis, "actions commute");
                assert!(!report.failures.is_empty());
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn duality() {
        for b in [trivial(&symmetric_group3()), flagship()] {
            let cb = dual_cobrace(&b);
            assert!(cb.audit().passed());
            assert_eq!(dual_brace(&cb), b);
        }
        let t = dual_cobrace(&trivial(&cyclic_group(3)));
        assert_eq!(t.dot, t.circ);
    }

    #[test]
    fn morphisms() {
        let b = flagship();
        let id = LinMap::identity(Q, &[6]);
        assert!(check_brace_morphism(&id, &b, &b).passed());
        let mut swap = LinMap::zero(Q, &[6], &[6]);
        let p: Vec<usize> = vec![0, 2, 1, 3, 4, 5];
        for (i, &j) in p.iter().enumerate() {
            swap.add(&[j], &[i], Q.one()).unwrap();
        }
        assert!(!check_brace_morphism(&swap, &b, &b).passed());
        let _ = SkewBrace::trivial(&cyclic_group(1));
    }
}
