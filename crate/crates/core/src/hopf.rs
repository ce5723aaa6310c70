//! Finite-dimensional Hopf algebras given by structure constants.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::ops::Deref;

use crate::error::{Error, Result};
use crate::report::AxiomReport;
use crate::scalars::FieldSpec;
use crate::tensor::{audit_maps, LinMap};

/// A basis-labelled vector space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Space {
    pub field: FieldSpec,
    pub labels: Vec<String>,
}

impl Space {
    pub fn new(field: FieldSpec, labels: Vec<String>) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::InvalidShape(String::from("space of dimension zero")));
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::InvalidShape(format!("duplicate basis label {l:?}")));
            }
        }
        Ok(Space { field, labels })
    }

    /// Basis `e0, e1, ...`.
    pub fn numbered(field: FieldSpec, dim: usize) -> Result<Self> {
        Space::new(field, (0..dim).map(|i| format!("e{i}")).collect())
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    /// `self ⊗ other`, labels `"a|b"` in row-major order.
    pub fn product(&self, other: &Space) -> Result<Space> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        let mut labels = Vec::with_capacity(self.dim() * other.dim());
        for a in &self.labels {
            for b in &other.labels {
                labels.push(format!("{a}|{b}"));
            }
        }
        Space::new(self.field, labels)
    }
}

/// Marks a record that has passed its full audit.
#[derive(Debug, Clone, PartialEq)]
pub struct Verified<T>(T);

impl<T> Verified<T> {
    pub(crate) fn assume(t: T) -> Self {
        Verified(t)
    }

    pub fn into_inner(self) -> T {
        self.0
    }
}

impl<T> Deref for Verified<T> {
    type Target = T;
    fn deref(&self) -> &T {
        &self.0
    }
}

/// `(A, m, 1, Δ, ε, S)` on a single space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopfAlgebraData {
    pub space: Space,
    pub mul: LinMap,
    pub unit: LinMap,
    pub comul: LinMap,
    pub counit: LinMap,
    pub antipode: LinMap,
}

pub(crate) fn check_shape(name: &str, m: &LinMap, field: FieldSpec, dom: &[usize], cod: &[usize]) -> Result<()> {
    if m.field() != field {
        return Err(Error::FieldMismatch);
    }
    if m.domain_dims() != dom || m.codomain_dims() != cod {
        return Err(Error::InvalidShape(format!(
            "{name} has shape {:?}->{:?}, expected {:?}->{:?}",
            m.domain_dims(),
            m.codomain_dims(),
            dom,
            cod
        )));
    }
    Ok(())
}

impl HopfAlgebraData {
    pub fn new(
        space: Space,
        mul: LinMap,
        unit: LinMap,
        comul: LinMap,
        counit: LinMap,
        antipode: LinMap,
    ) -> Result<Self> {
        let h = HopfAlgebraData { space, mul, unit, comul, counit, antipode };
        h.validate_shapes()?;
        Ok(h)
    }

    pub fn validate_shapes(&self) -> Result<()> {
        let (f, n) = (self.space.field, self.space.dim());
        check_shape("mul", &self.mul, f, &[n, n], &[n])?;
        check_shape("unit", &self.unit, f, &[], &[n])?;
        check_shape("comul", &self.comul, f, &[n], &[n, n])?;
        check_shape("counit", &self.counit, f, &[n], &[])?;
        check_shape("antipode", &self.antipode, f, &[n], &[n])
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn field(&self) -> FieldSpec {
        self.space.field
    }

    pub fn id(&self) -> LinMap {
        LinMap::identity(self.field(), &[self.dim()])
    }

    pub fn flip(&self) -> LinMap {
        LinMap::permute(self.field(), self.dim(), 2, &[1, 0]).expect("flip")
    }

    /// Runs [`check_hopf`] and wraps the record on success.
    pub fn verify(self) -> Result<Verified<Self>> {
        let r = check_hopf(&self);
        if r.passed() {
            Ok(Verified(self))
        } else {
            Err(Error::AuditFailed(r))
        }
    }

    /// Group algebra of a multiplication table `table[a][b] = ab`.
    pub fn group_algebra(field: FieldSpec, table: &[Vec<usize>], identity: usize, inverse: &[usize], labels: Vec<String>) -> Result<Self> {
        let n = table.len();
        let space = Space::new(field, labels)?;
        if space.dim() != n {
            return Err(Error::InvalidShape(String::from("label count differs from group order")));
        }
        let one = field.one();
        let mut mul = LinMap::zero(field, &[n, n], &[n]);
        let mut comul = LinMap::zero(field, &[n], &[n, n]);
        let mut counit = LinMap::zero(field, &[n], &[]);
        let mut antipode = LinMap::zero(field, &[n], &[n]);
        for a in 0..n {
            for b in 0..n {
                mul.add(&[table[a][b]], &[a, b], one.clone())?;
            }
            comul.add(&[a, a], &[a], one.clone())?;
            counit.add(&[], &[a], one.clone())?;
            antipode.add(&[inverse[a]], &[a], one.clone())?;
        }
        let mut unit = LinMap::zero(field, &[], &[n]);
        unit.add(&[identity], &[], one)?;
        HopfAlgebraData::new(space, mul, unit, comul, counit, antipode)
    }
}

pub fn check_algebra(h: &HopfAlgebraData) -> AxiomReport {
    let mut r = AxiomReport::new();
    let id = h.id();
    let (m, u) = (&h.mul, &h.unit);
    audit_maps(
        &mut r,
        "associativity",
        m.tensor(&id).and_then(|x| m.compose(&x)),
        id.tensor(m).and_then(|x| m.compose(&x)),
    );
    audit_maps(&mut r, "left unit", u.tensor(&id).and_then(|x| m.compose(&x)), Ok(id.clone()));
    audit_maps(&mut r, "right unit", id.tensor(u).and_then(|x| m.compose(&x)), Ok(id.clone()));
    r
}

pub fn check_coalgebra(h: &HopfAlgebraData) -> AxiomReport {
    let mut r = AxiomReport::new();
    let id = h.id();
    let (d, e) = (&h.comul, &h.counit);
    audit_maps(
        &mut r,
        "coassociativity",
        d.tensor(&id).and_then(|x| x.compose(d)),
        id.tensor(d).and_then(|x| x.compose(d)),
    );
    audit_maps(&mut r, "left counit", e.tensor(&id).and_then(|x| x.compose(d)), Ok(id.clone()));
    audit_maps(&mut r, "right counit", id.tensor(e).and_then(|x| x.compose(d)), Ok(id.clone()));
    r
}

/// Comultiplication of the tensor-square coalgebra `A ⊗ A`.
pub(crate) fn tensor_square_comul(comul: &LinMap, n: usize) -> Result<LinMap> {
    let mid = LinMap::permute(comul.field(), n, 4, &[0, 2, 1, 3])?;
    mid.compose(&comul.tensor(comul)?)
}

pub fn check_bialgebra(h: &HopfAlgebraData) -> AxiomReport {
    let mut r = AxiomReport::new();
    let n = h.dim();
    let f = h.field();
    let (m, u, d, e) = (&h.mul, &h.unit, &h.comul, &h.counit);
    audit_maps(
        &mut r,
        "comultiplication is multiplicative",
        d.compose(m),
        tensor_square_comul(d, n).and_then(|x| m.tensor(m)?.compose(&x)),
    );
    audit_maps(&mut r, "counit is multiplicative", e.compose(m), e.tensor(e));
    audit_maps(&mut r, "comultiplication of unit", d.compose(u), u.tensor(u));
    audit_maps(&mut r, "counit of unit", e.compose(u), Ok(LinMap::identity(f, &[])));
    r
}

pub fn check_antipode(h: &HopfAlgebraData) -> AxiomReport {
    let mut r = AxiomReport::new();
    let id = h.id();
    let (m, d, s) = (&h.mul, &h.comul, &h.antipode);
    let ue = h.unit.compose(&h.counit);
    audit_maps(
        &mut r,
        "left antipode",
        s.tensor(&id).and_then(|x| m.compose(&x.compose(d)?)),
        ue.clone(),
    );
    audit_maps(
        &mut r,
        "right antipode",
        id.tensor(s).and_then(|x| m.compose(&x.compose(d)?)),
        ue,
    );
    r
}

pub fn check_hopf(h: &HopfAlgebraData) -> AxiomReport {
    let mut r = AxiomReport::new();
    if let Err(e) = h.validate_shapes() {
        r.fail_simple("shape", format!("{e}"));
        return r;
    }
    r.merge(check_algebra(h));
    r.merge(check_coalgebra(h));
    r.merge(check_bialgebra(h));
    r.merge(check_antipode(h));
    r
}

pub fn is_cocommutative(h: &HopfAlgebraData) -> bool {
    cocommutative_comul(&h.comul, h.dim())
}

pub(crate) fn cocommutative_comul(comul: &LinMap, n: usize) -> bool {
    let flip = LinMap::permute(comul.field(), n, 2, &[1, 0]).expect("flip");
    flip.compose(comul).map(|x| x == *comul).unwrap_or(false)
}

pub fn is_commutative(h: &HopfAlgebraData) -> bool {
    commutative_mul(&h.mul, h.dim())
}

pub(crate) fn commutative_mul(mul: &LinMap, n: usize) -> bool {
    let flip = LinMap::permute(mul.field(), n, 2, &[1, 0]).expect("flip");
    mul.compose(&flip).map(|x| x == *mul).unwrap_or(false)
}

/// The dual Hopf algebra on the dual basis of the stored basis.
pub fn dualize(h: &HopfAlgebraData) -> HopfAlgebraData {
    HopfAlgebraData {
        space: h.space.clone(),
        mul: h.comul.transpose(),
        unit: h.counit.transpose(),
        comul: h.mul.transpose(),
        counit: h.unit.transpose(),
        antipode: h.antipode.transpose(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn cyclic(n: usize) -> HopfAlgebraData {
        let table: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let inv: Vec<usize> = (0..n).map(|a| (n - a) % n).collect();
        HopfAlgebraData::group_algebra(FieldSpec::Rationals, &table, 0, &inv, (0..n).map(|i| format!("g{i}")).collect()).unwrap()
    }

    // S3 as permutations of {0,1,2}, composed right-to-left.
    fn s3_table() -> (Vec<Vec<usize>>, Vec<usize>) {
        let perms: [[usize; 3]; 6] = [[0, 1, 2], [1, 2, 0], [2, 0, 1], [1, 0, 2], [0, 2, 1], [2, 1, 0]];
        let idx = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        let table = (0..6)
            .map(|a| (0..6).map(|b| idx([0, 1, 2].map(|x| perms[a][perms[b][x]]))).collect())
            .collect::<Vec<Vec<usize>>>();
        let inv = (0..6).map(|a| (0..6).find(|&b| table[a][b] == 0).unwrap()).collect();
        (table, inv)
    }

    fn s3() -> HopfAlgebraData {
        let (t, inv) = s3_table();
        HopfAlgebraData::group_algebra(FieldSpec::Rationals, &t, 0, &inv, (0..6).map(|i| format!("s{i}")).collect()).unwrap()
    }

    #[test]
    fn group_algebras_pass() {
        assert!(check_hopf(&cyclic(2)).passed());
        assert!(check_hopf(&cyclic(3)).passed());
        assert!(check_hopf(&s3()).passed());
        let (t, _) = s3_table();
        // Cayley table associativity checked directly.
        for a in 0..6 {
            for b in 0..6 {
                for c in 0..6 {
                    assert_eq!(t[t[a][b]][c], t[a][t[b][c]]);
                }
            }
        }
        let gf3 = HopfAlgebraData::group_algebra(FieldSpec::Prime(3), &[vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]], 0, &[0, 2, 1], vec!["a".into(), "b".into(), "c".into()]).unwrap();
        assert!(check_bialgebra(&gf3).passed());
        assert!(check_hopf(&gf3).passed());
    }

    #[test]
    fn corrupted_multiplication_is_caught() {
        let mut h = cyclic(2);
        h.mul.add(&[0], &[1, 0], FieldSpec::Rationals.one()).unwrap();
        let r = check_algebra(&h);
        assert!(!r.passed());
        assert!(!r.failures[0].input.is_empty());
    }

    #[test]
    fn broken_counit_is_caught() {
        let mut h = cyclic(2);
        h.counit = h.counit.scale(&FieldSpec::Rationals.from_i64(2));
        assert!(!check_coalgebra(&h).passed());
    }

    #[test]
    fn doubled_comultiplication_fails_bialgebra() {
        let mut h = cyclic(3);
        h.comul = h.comul.scale(&FieldSpec::Rationals.from_i64(2));
        let r = check_bialgebra(&h);
        assert!(r.failed_axioms().contains(&"comultiplication is multiplicative"));
        assert!(r.failed_axioms().contains(&"comultiplication of unit"));
        assert!(!check_coalgebra(&h).passed());
    }

    #[test]
    fn identity_is_not_an_antipode_of_s3() {
        let mut h = s3();
        assert!(check_antipode(&h).passed());
        h.antipode = h.id();
        assert!(!check_antipode(&h).passed());
        assert!(check_antipode(&{
            let mut c2 = cyclic(2);
            c2.antipode = c2.id();
            c2
        })
        .passed());
    }

    #[test]
    fn commutativity_flags() {
        assert!(is_commutative(&cyclic(6)));
        assert!(!is_commutative(&s3()));
        assert!(is_cocommutative(&s3()));
        assert!(is_cocommutative(&cyclic(2)));
        let d = dualize(&s3());
        assert!(is_commutative(&d));
        assert!(!is_cocommutative(&d));
        assert!(check_hopf(&d).passed());
        assert!(check_coalgebra(&d).passed());
        assert_eq!(dualize(&d), s3());
    }

    #[test]
    fn dual_of_c2_transposes_tables() {
        let d = dualize(&cyclic(2));
        // δ_a δ_b = [a = b] δ_a and Δ(δ_g) = Σ_{ab=g} δ_a ⊗ δ_b.
        assert_eq!(d.mul.get(&[1], &[1, 1]), FieldSpec::Rationals.one());
        assert!(d.mul.get(&[0], &[0, 1]).is_zero());
        assert_eq!(d.comul.get(&[1, 0], &[1]), FieldSpec::Rationals.one());
        assert_eq!(d.unit.get(&[0], &[]), FieldSpec::Rationals.one());
        assert_eq!(d.unit.get(&[1], &[]), FieldSpec::Rationals.one());
        assert!(check_hopf(&d).passed());
    }

    #[test]
    fn antipode_is_antihomomorphism_and_involution() {
        for h in [cyclic(3), s3()] {
            let s = &h.antipode;
            let lhs = s.compose(&h.mul).unwrap();
            let rhs = h.mul.compose(&h.flip()).unwrap().compose(&s.tensor(s).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
            assert_eq!(s.compose(s).unwrap(), h.id());
        }
    }

    #[test]
    fn c3_antipode_is_an_involution_with_inverse() {
        let h = cyclic(3);
        let inv = h.antipode.inverse().unwrap();
        assert_eq!(inv, h.antipode);
    }

    #[test]
    fn compose_basic_identities() {
        let h = cyclic(2);
        let id2 = LinMap::identity(h.field(), &[2, 2]);
        assert_eq!(id2.compose(&h.comul).unwrap(), h.comul);
        let e_id = h.counit.tensor(&h.id()).unwrap();
        assert_eq!(e_id.compose(&h.comul).unwrap(), h.id());
        assert_eq!(h.flip().compose(&h.comul).unwrap(), h.comul);
        // ε⊗ε after Δ⊗Δ, then against ε∘m.
        let lhs = h.counit.tensor(&h.counit).unwrap();
        assert_eq!(lhs, h.counit.compose(&h.mul).unwrap());
    }

    #[test]
    fn shape_validation() {
        let h = cyclic(2);
        let bad = HopfAlgebraData::new(h.space.clone(), h.comul.clone(), h.unit.clone(), h.comul.clone(), h.counit.clone(), h.antipode.clone());
        assert!(matches!(bad, Err(Error::InvalidShape(_))));
        assert!(Space::new(FieldSpec::Rationals, vec!["a".into(), "a".into()]).is_err());
        assert!(h.clone().verify().is_ok());
    }
}
