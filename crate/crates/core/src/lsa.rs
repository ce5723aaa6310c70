//! Left-symmetric algebras, Lie 1-cocycles and their extension to
//! degree-truncated enveloping algebras.
//!
//! Enveloping algebras live in a [`PbwArena`]: the ordered (PBW) monomials of
//! degree at most a cap, with a multiplication table built once by
//! straightening. Elements are [`SparseVec`]s keyed by monomial index.
//! Monomials are sorted by degree, then by exponent vector with larger
//! exponents on earlier generators first, so index 0 is the unit and indices
//! `1..=d` are the generators in order.
//!
//! Brackets of a left-symmetric algebra are taken as `[a, b] = ab - ba`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::report::{AxiomReport, Failure};
use crate::scalars::{binomial, FieldSpec, Scalar};
use crate::tensor::{add_entry, sparse_add_scaled, LinMap, SparseVec};

/// Degree cap used when none is given.
pub const DEFAULT_CAP: usize = 8;

fn unit_vec(field: FieldSpec, k: usize) -> SparseVec {
    BTreeMap::from([(k, field.one())])
}

fn scaled(v: &SparseVec, c: &Scalar) -> SparseVec {
    let mut out = SparseVec::new();
    sparse_add_scaled(&mut out, v, c);
    out
}

fn difference(a: &SparseVec, b: &SparseVec) -> SparseVec {
    let mut out = a.clone();
    for (k, x) in b {
        add_entry(&mut out, *k, &-x);
    }
    out
}

/// Applies a matrix given by its columns.
fn apply_columns(cols: &[SparseVec], v: &SparseVec) -> SparseVec {
    let mut out = SparseVec::new();
    for (j, c) in v {
        if let Some(col) = cols.get(*j) {
            sparse_add_scaled(&mut out, col, c);
        }
    }
    out
}

/// Records `lhs == rhs`, keeping the first differing coordinate as witness.
fn compare(report: &mut AxiomReport, axiom: &str, input: Vec<usize>, lhs: &SparseVec, rhs: &SparseVec) {
    report.record(axiom);
    let diff = difference(lhs, rhs);
    if let Some((&k, _)) = diff.iter().next() {
        let zero = || String::from("0");
        report.fail(Failure {
            axiom: String::from(axiom),
            input,
            output: vec![k],
            lhs: lhs.get(&k).map(|c| format!("{c}")).unwrap_or_else(zero),
            rhs: rhs.get(&k).map(|c| format!("{c}")).unwrap_or_else(zero),
        });
    }
}

fn check_entries(field: FieldSpec, dim: usize, entries: &[(usize, usize, usize, Scalar)]) -> Result<Vec<SparseVec>> {
    let mut table = vec![SparseVec::new(); dim * dim];
    for (i, j, k, c) in entries {
        for idx in [*i, *j, *k] {
            if idx >= dim {
                return Err(Error::IndexOutOfRange { index: idx, bound: dim });
            }
        }
        if c.field() != field {
            return Err(Error::FieldMismatch);
        }
        add_entry(&mut table[i * dim + j], *k, c);
    }
    Ok(table)
}

fn table_entries(dim: usize, table: &[SparseVec]) -> Vec<(usize, usize, usize, Scalar)> {
    let mut out = Vec::new();
    for i in 0..dim {
        for j in 0..dim {
            for (k, c) in &table[i * dim + j] {
                out.push((i, j, *k, c.clone()));
            }
        }
    }
    out
}

fn bilinear(table: &[SparseVec], dim: usize, a: &SparseVec, b: &SparseVec) -> SparseVec {
    let mut out = SparseVec::new();
    for (i, x) in a {
        for (j, y) in b {
            sparse_add_scaled(&mut out, &table[i * dim + j], &(x * y));
        }
    }
    out
}

/// A bilinear product given by structure constants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeftSymmetricAlgebra {
    dim: usize,
    field: FieldSpec,
    prod: Vec<SparseVec>,
}

impl LeftSymmetricAlgebra {
    /// Builds the product from `(i, j, k, c)`: `c e_k` is added to `e_i e_j`.
    /// Left symmetry is audited separately by [`check_lsa`].
    pub fn new(field: FieldSpec, dim: usize, entries: &[(usize, usize, usize, Scalar)]) -> Result<Self> {
        Ok(Self { dim, field, prod: check_entries(field, dim, entries)? })
    }

    pub fn zero(field: FieldSpec, dim: usize) -> Self {
        Self { dim, field, prod: vec![SparseVec::new(); dim * dim] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &SparseVec {
        &self.prod[i * self.dim + j]
    }

    pub fn mul(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        bilinear(&self.prod, self.dim, a, b)
    }

    pub fn entries(&self) -> Vec<(usize, usize, usize, Scalar)> {
        table_entries(self.dim, &self.prod)
    }

    /// Left multiplication by `e_i`, as matrix columns.
    pub fn left_multiplication(&self, i: usize) -> Vec<SparseVec> {
        (0..self.dim).map(|j| self.basis_product(i, j).clone()).collect()
    }
}

/// Audits `x(yz) - (xy)z = y(xz) - (yx)z` on every basis triple.
pub fn check_lsa(v: &LeftSymmetricAlgebra) -> AxiomReport {
    let mut report = AxiomReport::new();
    report.record("left symmetry");
    let e = |i| unit_vec(v.field, i);
    for i in 0..v.dim {
        for j in 0..v.dim {
            for k in 0..v.dim {
                let (x, y, z) = (e(i), e(j), e(k));
                let assoc = |a: &SparseVec, b: &SparseVec| {
                    difference(&v.mul(a, &v.mul(b, &z)), &v.mul(&v.mul(a, b), &z))
                };
                compare(&mut report, "left symmetry", vec![i, j, k], &assoc(&x, &y), &assoc(&y, &x));
            }
        }
    }
    report
}

/// A bracket given by structure constants, not assumed antisymmetric.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebraData {
    dim: usize,
    field: FieldSpec,
    bracket: Vec<SparseVec>,
}

impl LieAlgebraData {
    /// `(i, j, k, c)` adds `c e_k` to `[e_i, e_j]`; only the listed pairs are set.
    pub fn new(field: FieldSpec, dim: usize, entries: &[(usize, usize, usize, Scalar)]) -> Result<Self> {
        Ok(Self { dim, field, bracket: check_entries(field, dim, entries)? })
    }

    pub fn abelian(field: FieldSpec, dim: usize) -> Self {
        Self { dim, field, bracket: vec![SparseVec::new(); dim * dim] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> &SparseVec {
        &self.bracket[i * self.dim + j]
    }

    pub fn bracket(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        bilinear(&self.bracket, self.dim, a, b)
    }

    pub fn is_abelian(&self) -> bool {
        self.bracket.iter().all(|v| v.is_empty())
    }

    pub fn entries(&self) -> Vec<(usize, usize, usize, Scalar)> {
        table_entries(self.dim, &self.bracket)
    }
}

/// Antisymmetry and the Jacobi identity on basis elements.
pub fn check_lie(g: &LieAlgebraData) -> AxiomReport {
    let mut report = AxiomReport::new();
    report.record("antisymmetry");
    report.record("Jacobi identity");
    let e = |i| unit_vec(g.field, i);
    for i in 0..g.dim {
        for j in 0..g.dim {
            let neg = scaled(g.basis_bracket(j, i), &-g.field.one());
            compare(&mut report, "antisymmetry", vec![i, j], g.basis_bracket(i, j), &neg);
            for k in 0..g.dim {
                let (x, y, z) = (e(i), e(j), e(k));
                let mut sum = g.bracket(&x, &g.bracket(&y, &z));
                sparse_add_scaled(&mut sum, &g.bracket(&y, &g.bracket(&z, &x)), &g.field.one());
                sparse_add_scaled(&mut sum, &g.bracket(&z, &g.bracket(&x, &y)), &g.field.one());
                compare(&mut report, "Jacobi identity", vec![i, j, k], &sum, &SparseVec::new());
            }
        }
    }
    report
}

/// The commutator algebra `[a, b] = ab - ba`.
pub fn lie_from_lsa(v: &LeftSymmetricAlgebra) -> LieAlgebraData {
    let d = v.dim;
    let mut bracket = vec![SparseVec::new(); d * d];
    for i in 0..d {
        for j in 0..d {
            bracket[i * d + j] = difference(v.basis_product(i, j), v.basis_product(j, i));
        }
    }
    LieAlgebraData { dim: d, field: v.field, bracket }
}

/// A linear map `pi: g -> h` with a Lie map `rho: g -> Der h`.
///
/// `rho[i]` is the matrix (columns over the basis of `h`) of `rho(e_i)` and
/// `pi[i]` is the image of `e_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieCocycle {
    pub source: LieAlgebraData,
    pub target: LieAlgebraData,
    pub rho: Vec<Vec<SparseVec>>,
    pub pi: Vec<SparseVec>,
}

impl LieCocycle {
    fn check_shape(&self) -> Result<()> {
        let (g, h) = (self.source.dim, self.target.dim);
        if self.source.field != self.target.field {
            return Err(Error::FieldMismatch);
        }
        let bad = self.rho.len() != g
            || self.rho.iter().any(|m| m.len() != h)
            || self.pi.len() != g
            || g != h;
        if bad {
            return Err(Error::InvalidShape(format!(
                "cocycle between dimensions {g} and {h} with {} action matrices and {} images",
                self.rho.len(),
                self.pi.len()
            )));
        }
        Ok(())
    }

    pub fn rho_apply(&self, i: usize, a: &SparseVec) -> SparseVec {
        apply_columns(&self.rho[i], a)
    }

    fn rho_of(&self, x: &SparseVec, a: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, c) in x {
            sparse_add_scaled(&mut out, &self.rho_apply(*i, a), c);
        }
        out
    }

    pub fn pi_apply(&self, x: &SparseVec) -> SparseVec {
        apply_columns(&self.pi, x)
    }
}

/// The identity cocycle of a left-symmetric algebra: `g(V) -> V` with `V`
/// abelian and `rho` the left multiplication.
pub fn lsa_cocycle(v: &LeftSymmetricAlgebra) -> LieCocycle {
    LieCocycle {
        source: lie_from_lsa(v),
        target: LieAlgebraData::abelian(v.field, v.dim),
        rho: (0..v.dim).map(|i| v.left_multiplication(i)).collect(),
        pi: (0..v.dim).map(|i| unit_vec(v.field, i)).collect(),
    }
}

fn audit_derivations(c: &LieCocycle) -> AxiomReport {
    let mut report = AxiomReport::new();
    report.record("rho is derivation-valued");
    let h = &c.target;
    let e = |i| unit_vec(h.field, i);
    for i in 0..c.source.dim {
        for a in 0..h.dim {
            for b in 0..h.dim {
                let lhs = c.rho_apply(i, h.basis_bracket(a, b));
                let mut rhs = h.bracket(&c.rho_apply(i, &e(a)), &e(b));
                sparse_add_scaled(&mut rhs, &h.bracket(&e(a), &c.rho_apply(i, &e(b))), &h.field.one());
                compare(&mut report, "rho is derivation-valued", vec![i, a, b], &lhs, &rhs);
            }
        }
    }
    report
}

/// Audits `pi([x,y]) = [pi x, pi y] + rho(x) pi(y) - rho(y) pi(x)` on basis
/// pairs, plus bijectivity, the Lie axioms of both sides and that `rho` is a
/// Lie map. Fails with [`Error::NotDerivation`] when `rho` leaves `Der h`.
pub fn check_lie_cocycle(c: &LieCocycle) -> Result<AxiomReport> {
    c.check_shape()?;
    let derivations = audit_derivations(c);
    if !derivations.passed() {
        return Err(Error::NotDerivation(derivations));
    }
    let mut report = AxiomReport::new();
    report.merge(derivations);
    report.merge_prefixed("source", check_lie(&c.source));
    report.merge_prefixed("target", check_lie(&c.target));

    let (g, h) = (&c.source, &c.target);
    let field = g.field;
    let e = |i| unit_vec(field, i);
    report.record("rho is a Lie map");
    for i in 0..g.dim {
        for j in 0..g.dim {
            for a in 0..h.dim {
                let lhs = c.rho_of(g.basis_bracket(i, j), &e(a));
                let rhs = difference(
                    &c.rho_apply(i, &c.rho_apply(j, &e(a))),
                    &c.rho_apply(j, &c.rho_apply(i, &e(a))),
                );
                compare(&mut report, "rho is a Lie map", vec![i, j, a], &lhs, &rhs);
            }
        }
    }

    report.record("pi bijective");
    let cols = c.pi.iter().cloned().enumerate().filter(|(_, v)| !v.is_empty());
    let matrix = LinMap::from_columns(field, &[g.dim], &[h.dim], cols);
    if !matrix.is_invertible() {
        report.fail_simple("pi bijective", String::from("pi has a kernel"));
    }

    report.record("cocycle condition");
    for i in 0..g.dim {
        for j in 0..g.dim {
            let lhs = c.pi_apply(g.basis_bracket(i, j));
            let (pi_i, pi_j) = (&c.pi[i], &c.pi[j]);
            let mut rhs = h.bracket(pi_i, pi_j);
            sparse_add_scaled(&mut rhs, &c.rho_apply(i, pi_j), &field.one());
            sparse_add_scaled(&mut rhs, &c.rho_apply(j, pi_i), &-field.one());
            compare(&mut report, "cocycle condition", vec![i, j], &lhs, &rhs);
        }
    }
    Ok(report)
}

/// Monomials with `d` variables and degree at most `cap`, in arena order.
fn enumerate_monomials(d: usize, cap: usize) -> Vec<Vec<u32>> {
    fn fill(d: usize, left: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() + 1 == d {
            prefix.push(left);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=left).rev() {
            prefix.push(e);
            fill(d, left - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    for deg in 0..=cap as u32 {
        if d == 0 {
            if deg == 0 {
                out.push(Vec::new());
            }
            continue;
        }
        fill(d, deg, &mut Vec::new(), &mut out);
    }
    out
}

/// A degree-truncated enveloping algebra with its PBW basis.
#[derive(Debug, Clone)]
pub struct PbwArena {
    lie: LieAlgebraData,
    names: Vec<String>,
    cap: usize,
    basis: Vec<Vec<u32>>,
    index: BTreeMap<Vec<u32>, usize>,
    /// `upto[k]` = number of monomials of degree at most `k`.
    upto: Vec<usize>,
    /// `products[a][b]` for `deg a + deg b <= cap`.
    products: Vec<Vec<SparseVec>>,
}

struct Straightener<'a> {
    lie: &'a LieAlgebraData,
    basis: &'a [Vec<u32>],
    index: &'a BTreeMap<Vec<u32>, usize>,
    memo: BTreeMap<(usize, usize), SparseVec>,
}

impl Straightener<'_> {
    /// `m * v_i`: an out-of-order tail `v_k v_i` becomes `v_i v_k + [v_k, v_i]`.
    fn times_generator(&mut self, m: usize, i: usize) -> SparseVec {
        if let Some(v) = self.memo.get(&(m, i)) {
            return v.clone();
        }
        let basis = self.basis;
        let exps = &basis[m];
        let field = self.lie.field;
        let result = match exps.iter().rposition(|&e| e > 0) {
            Some(k) if k > i => {
                let mut prefix = exps.clone();
                prefix[k] -= 1;
                let p = self.index[&prefix];
                let swapped = self.times_generator(p, i);
                let mut acc = SparseVec::new();
                for (t, c) in &swapped {
                    let tv = self.times_generator(*t, k);
                    sparse_add_scaled(&mut acc, &tv, c);
                }
                for (l, c) in &self.lie.basis_bracket(k, i).clone() {
                    let tv = self.times_generator(p, *l);
                    sparse_add_scaled(&mut acc, &tv, c);
                }
                acc
            }
            _ => {
                let mut next = exps.clone();
                next[i] += 1;
                unit_vec(field, self.index[&next])
            }
        };
        self.memo.insert((m, i), result.clone());
        result
    }
}

impl PbwArena {
    /// Generators are named `v0, v1, ...`.
    pub fn new(lie: LieAlgebraData, cap: usize) -> Self {
        let names = (0..lie.dim).map(|i| format!("v{i}")).collect();
        Self::build(lie, names, cap)
    }

    pub fn with_names(lie: LieAlgebraData, names: &[&str], cap: usize) -> Result<Self> {
        if names.len() != lie.dim {
            return Err(Error::InvalidShape(format!(
                "{} names for {} generators",
                names.len(),
                lie.dim
            )));
        }
        Ok(Self::build(lie, names.iter().map(|s| String::from(*s)).collect(), cap))
    }

    fn build(lie: LieAlgebraData, names: Vec<String>, cap: usize) -> Self {
        let d = lie.dim;
        let basis = enumerate_monomials(d, cap);
        let index: BTreeMap<Vec<u32>, usize> =
            basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let mut upto = vec![0; cap + 1];
        for m in &basis {
            let deg = m.iter().sum::<u32>() as usize;
            for slot in upto.iter_mut().skip(deg) {
                *slot += 1;
            }
        }
        let field = lie.field;
        let mut st = Straightener { lie: &lie, basis: &basis, index: &index, memo: BTreeMap::new() };
        let mut products: Vec<Vec<SparseVec>> = Vec::with_capacity(basis.len());
        for (a, ma) in basis.iter().enumerate() {
            let room = cap - ma.iter().sum::<u32>() as usize;
            let mut row: Vec<SparseVec> = Vec::with_capacity(upto[room]);
            for (b, mb) in basis.iter().enumerate().take(upto[room]) {
                let value = match mb.iter().rposition(|&e| e > 0) {
                    None => unit_vec(field, a),
                    Some(k) => {
                        let mut prefix = mb.clone();
                        prefix[k] -= 1;
                        let mut acc = SparseVec::new();
                        for (t, c) in &row[index[&prefix]] {
                            sparse_add_scaled(&mut acc, &st.times_generator(*t, k), c);
                        }
                        acc
                    }
                };
                debug_assert_eq!(b, row.len());
                row.push(value);
            }
            products.push(row);
        }
        drop(st);
        Self { lie, names, cap, basis, index, upto, products }
    }

    pub fn lie(&self) -> &LieAlgebraData {
        &self.lie
    }

    pub fn field(&self) -> FieldSpec {
        self.lie.field
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn generators(&self) -> usize {
        self.lie.dim
    }

    /// Number of basis monomials.
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn exponents(&self, m: usize) -> &[u32] {
        &self.basis[m]
    }

    pub fn index_of(&self, exps: &[u32]) -> Option<usize> {
        self.index.get(exps).copied()
    }

    /// Like [`index_of`](Self::index_of) but reports the degree on failure.
    pub fn monomial(&self, exps: &[u32]) -> Result<usize> {
        if exps.len() != self.lie.dim {
            return Err(Error::InvalidShape(format!(
                "exponent vector of length {} for {} generators",
                exps.len(),
                self.lie.dim
            )));
        }
        self.index_of(exps).ok_or(Error::CapExceeded {
            degree: exps.iter().sum::<u32>() as usize,
            cap: self.cap,
        })
    }

    pub fn degree(&self, m: usize) -> usize {
        self.basis[m].iter().sum::<u32>() as usize
    }

    /// Highest degree present; zero for the zero element.
    pub fn element_degree(&self, v: &SparseVec) -> usize {
        v.keys().map(|m| self.degree(*m)).max().unwrap_or(0)
    }

    /// Number of monomials of degree at most `k` (a prefix of the basis).
    pub fn count_up_to(&self, k: usize) -> usize {
        self.upto[k.min(self.cap)]
    }

    pub fn one(&self) -> SparseVec {
        unit_vec(self.field(), 0)
    }

    /// Monomial index of the `i`-th generator.
    pub fn generator_index(&self, i: usize) -> usize {
        1 + i
    }

    pub fn generator(&self, i: usize) -> SparseVec {
        unit_vec(self.field(), self.generator_index(i))
    }

    /// `v_i^k`; panics past the cap.
    pub fn generator_power(&self, i: usize, k: usize) -> SparseVec {
        let mut exps = vec![0u32; self.generators()];
        exps[i] = k as u32;
        unit_vec(self.field(), self.index[&exps])
    }

    /// Embeds a Lie algebra vector in degree one.
    pub fn embed(&self, x: &SparseVec) -> SparseVec {
        x.iter().map(|(i, c)| (self.generator_index(*i), c.clone())).collect()
    }

    /// Degree-one part as a Lie algebra vector.
    pub fn linear_part(&self, v: &SparseVec) -> SparseVec {
        v.iter()
            .filter(|(m, _)| self.degree(**m) == 1)
            .map(|(m, c)| (*m - 1, c.clone()))
            .collect()
    }

    pub fn label(&self, m: usize) -> String {
        let mut out = String::new();
        for (name, e) in self.names.iter().zip(&self.basis[m]) {
            match e {
                0 => {}
                1 => out.push_str(name),
                _ => out.push_str(&format!("{name}^{e}")),
            }
        }
        if out.is_empty() {
            out.push('1');
        }
        out
    }

    pub fn format_element(&self, v: &SparseVec) -> String {
        if v.is_empty() {
            return String::from("0");
        }
        let mut keys: Vec<&usize> = v.keys().collect();
        keys.sort_by_key(|m| core::cmp::Reverse(**m));
        let parts: Vec<String> = keys
            .into_iter()
            .map(|m| {
                let c = &v[m];
                if *m == 0 {
                    format!("{c}")
                } else if c.is_one() {
                    self.label(*m)
                } else {
                    format!("{c}*{}", self.label(*m))
                }
            })
            .collect();
        parts.join(" + ")
    }

    pub fn mul_monomials(&self, a: usize, b: usize) -> Option<&SparseVec> {
        self.products.get(a).and_then(|row| row.get(b))
    }

    /// Product of elements; callers guarantee the degrees fit.
    fn mul_unchecked(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, x) in a {
            for (j, y) in b {
                let p = &self.products[*i][*j];
                sparse_add_scaled(&mut out, p, &(x * y));
            }
        }
        out
    }

    pub fn counit(&self, v: &SparseVec) -> Scalar {
        v.get(&0).cloned().unwrap_or_else(|| self.field().zero())
    }

    /// `(k, a - k, coefficient)` over all splittings of the exponent vector.
    pub fn comul_terms(&self, m: usize) -> Vec<(usize, usize, Scalar)> {
        let exps = &self.basis[m];
        let field = self.field();
        let mut out = Vec::new();
        let mut left = vec![0u32; exps.len()];
        fn walk(
            arena: &PbwArena,
            exps: &[u32],
            pos: usize,
            left: &mut Vec<u32>,
            coeff: BigInt,
            field: FieldSpec,
            out: &mut Vec<(usize, usize, Scalar)>,
        ) {
            if pos == exps.len() {
                let right: Vec<u32> = exps.iter().zip(left.iter()).map(|(a, k)| a - k).collect();
                let c = field.from_bigint(&coeff);
                if !c.is_zero() {
                    out.push((arena.index[left.as_slice()], arena.index[&right], c));
                }
                return;
            }
            for k in 0..=exps[pos] {
                left[pos] = k;
                let c = &coeff * binomial(exps[pos] as i64, k as i64);
                walk(arena, exps, pos + 1, left, c, field, out);
            }
            left[pos] = 0;
        }
        walk(self, exps, 0, &mut left, BigInt::one(), field, &mut out);
        out
    }

    /// `Δ⁽²⁾` of a monomial as `(m1, m2, m3, coefficient)`.
    pub fn comul3_terms(&self, m: usize) -> Vec<(usize, usize, usize, Scalar)> {
        let mut out = Vec::new();
        for (a, rest, c) in self.comul_terms(m) {
            for (b, d, c2) in self.comul_terms(rest) {
                out.push((a, b, d, &c * &c2));
            }
        }
        out
    }

    /// Coproduct of an element, keyed by `i * dim + j`.
    pub fn comul(&self, v: &SparseVec) -> SparseVec {
        let n = self.dim();
        let mut out = SparseVec::new();
        for (m, c) in v {
            for (a, b, x) in self.comul_terms(*m) {
                add_entry(&mut out, a * n + b, &(c * &x));
            }
        }
        out
    }

    /// `S(v_{i1} ... v_{in}) = (-1)^n v_{in} ... v_{i1}`.
    pub fn antipode_monomial(&self, m: usize) -> SparseVec {
        let exps = self.basis[m].clone();
        let mut acc = self.one();
        for (i, e) in exps.iter().enumerate().rev() {
            for _ in 0..*e {
                acc = self.mul_unchecked(&acc, &self.generator(i));
            }
        }
        if self.degree(m) % 2 == 1 {
            acc = scaled(&acc, &-self.field().one());
        }
        acc
    }

    pub fn antipode(&self, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (m, c) in v {
            sparse_add_scaled(&mut out, &self.antipode_monomial(*m), c);
        }
        out
    }

    /// The ordered product `w_{i1} ... w_{in}` for a monomial, with each
    /// generator replaced by `images[i]`.
    fn substitute(&self, exps: &[u32], images: &[SparseVec]) -> SparseVec {
        let mut acc = self.one();
        for (i, e) in exps.iter().enumerate() {
            for _ in 0..*e {
                acc = self.mul_unchecked(&acc, &images[i]);
            }
        }
        acc
    }
}

/// Multiplies two arena elements by straightening.
pub fn pbw_mul(arena: &PbwArena, a: &SparseVec, b: &SparseVec) -> Result<SparseVec> {
    let degree = arena.element_degree(a) + arena.element_degree(b);
    if (!a.is_empty() && !b.is_empty()) && degree > arena.cap {
        return Err(Error::CapExceeded { degree, cap: arena.cap });
    }
    Ok(arena.mul_unchecked(a, b))
}

/// Coproduct of a basis monomial, keyed by `i * dim + j`.
pub fn pbw_comul(arena: &PbwArena, m: usize) -> SparseVec {
    arena.comul(&unit_vec(arena.field(), m))
}

/// Audits the arena as a truncated bialgebra: associativity and
/// multiplicativity of the coproduct on every in-cap pair or triple.
pub fn audit_arena(arena: &PbwArena) -> AxiomReport {
    let mut report = AxiomReport::new();
    report.record("associativity");
    report.record("comultiplication is multiplicative");
    let n = arena.dim();
    let cap = arena.cap;
    for a in 0..n {
        let da = arena.degree(a);
        for b in 0..arena.count_up_to(cap - da) {
            let ab = &arena.products[a][b];
            let lhs = arena.comul(ab);
            let (da_terms, db_terms) = (arena.comul_terms(a), arena.comul_terms(b));
            let mut rhs = SparseVec::new();
            for (a1, a2, x) in &da_terms {
                for (b1, b2, y) in &db_terms {
                    let left = &arena.products[*a1][*b1];
                    let right = &arena.products[*a2][*b2];
                    let c = x * y;
                    for (l, p) in left {
                        for (r, q) in right {
                            add_entry(&mut rhs, l * n + r, &(&(&c * p) * q));
                        }
                    }
                }
            }
            compare(&mut report, "comultiplication is multiplicative", vec![a, b], &lhs, &rhs);
            let dab = da + arena.degree(b);
            for c in 0..arena.count_up_to(cap - dab) {
                let left = arena.mul_unchecked(ab, &unit_vec(arena.field(), c));
                let bc = &arena.products[b][c];
                let right = arena.mul_unchecked(&unit_vec(arena.field(), a), bc);
                compare(&mut report, "associativity", vec![a, b, c], &left, &right);
            }
        }
    }
    report
}

/// The action of a source arena on a target arena extending `rho` by
/// derivations. `gens[i][m]` is `v_i ⇀ m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArenaAction {
    gens: Vec<Vec<SparseVec>>,
}

impl ArenaAction {
    pub fn act_generator(&self, i: usize, y: &SparseVec) -> SparseVec {
        apply_columns(&self.gens[i], y)
    }

    /// Monomials act generator by generator, the rightmost first.
    pub fn act_monomial(&self, source: &PbwArena, m: usize, y: &SparseVec) -> SparseVec {
        let mut acc = y.clone();
        for (i, e) in source.exponents(m).iter().enumerate().rev() {
            for _ in 0..*e {
                acc = self.act_generator(i, &acc);
            }
        }
        acc
    }

    pub fn act(&self, source: &PbwArena, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (m, c) in x {
            sparse_add_scaled(&mut out, &self.act_monomial(source, *m, y), c);
        }
        out
    }
}

/// Extends `rho: g -> Der h` to `U(g)` acting on `U(h)` by
/// `v ⇀ (w y) = (rho(v) w) y + w (v ⇀ y)`.
pub fn extend_action(source: &PbwArena, target: &PbwArena, cocycle: &LieCocycle) -> Result<ArenaAction> {
    cocycle.check_shape()?;
    if source.lie != cocycle.source || target.lie != cocycle.target {
        return Err(Error::InvalidShape(String::from("arenas do not match the cocycle")));
    }
    let derivations = audit_derivations(cocycle);
    if !derivations.passed() {
        return Err(Error::NotDerivation(derivations));
    }
    let field = target.field();
    let mut gens = Vec::with_capacity(source.generators());
    for i in 0..source.generators() {
        let images: Vec<SparseVec> = (0..target.generators())
            .map(|j| target.embed(&cocycle.rho_apply(i, &unit_vec(field, j))))
            .collect();
        let mut col: Vec<SparseVec> = Vec::with_capacity(target.dim());
        col.push(SparseVec::new());
        for m in 1..target.dim() {
            let exps = target.exponents(m);
            let j = exps.iter().position(|&e| e > 0).expect("non-unit monomial");
            let mut tail = exps.to_vec();
            tail[j] -= 1;
            let t = target.index[&tail];
            let mut value = target.mul_unchecked(&images[j], &unit_vec(field, t));
            let rest = target.mul_unchecked(&target.generator(j), &col[t]);
            sparse_add_scaled(&mut value, &rest, &field.one());
            col.push(value);
        }
        gens.push(col);
    }
    Ok(ArenaAction { gens })
}

/// Module-algebra and module-coalgebra laws on source/target monomial
/// tuples whose total degree is at most the cap.
pub fn audit_action(source: &PbwArena, target: &PbwArena, action: &ArenaAction) -> AxiomReport {
    let mut report = AxiomReport::new();
    for axiom in [
        "unit acts trivially",
        "action associativity",
        "action fixes unit",
        "action is multiplicative",
        "action is comultiplicative",
        "action is counital",
    ] {
        report.record(axiom);
    }
    let field = target.field();
    let cap = source.cap.min(target.cap);
    let tn = target.dim();
    for y in 0..target.dim() {
        let yv = unit_vec(field, y);
        let one_acts = action.act_monomial(source, 0, &yv);
        compare(&mut report, "unit acts trivially", vec![y], &one_acts, &yv);
    }
    for x in 0..source.count_up_to(cap) {
        let dx = source.degree(x);
        let xv = unit_vec(field, x);
        let eps = scaled(&target.one(), &source.counit(&xv));
        let fixes = action.act_monomial(source, x, &target.one());
        compare(&mut report, "action fixes unit", vec![x], &fixes, &eps);
        let split = source.comul_terms(x);
        for y in 0..target.count_up_to(cap - dx) {
            let dy = target.degree(y);
            let yv = unit_vec(field, y);
            let acted = action.act_monomial(source, x, &yv);
            for x2 in 0..source.count_up_to(cap - dx - dy) {
                let prod = &source.products[x][x2];
                let lhs = action.act(source, prod, &yv);
                let rhs = action.act_monomial(source, x, &action.act_monomial(source, x2, &yv));
                compare(&mut report, "action associativity", vec![x, x2, y], &lhs, &rhs);
            }
            for z in 0..target.count_up_to(cap - dx - dy) {
                let lhs = action.act_monomial(source, x, &target.products[y][z]);
                let mut rhs = SparseVec::new();
                let zv = unit_vec(field, z);
                for (x1, x2, c) in &split {
                    let left = action.act_monomial(source, *x1, &yv);
                    let right = action.act_monomial(source, *x2, &zv);
                    sparse_add_scaled(&mut rhs, &target.mul_unchecked(&left, &right), c);
                }
                compare(&mut report, "action is multiplicative", vec![x, y, z], &lhs, &rhs);
            }
            let lhs = target.comul(&acted);
            let mut rhs = SparseVec::new();
            for (x1, x2, c) in &split {
                for (y1, y2, d) in target.comul_terms(y) {
                    let left = action.act_monomial(source, *x1, &unit_vec(field, y1));
                    let right = action.act_monomial(source, *x2, &unit_vec(field, y2));
                    let cd = c * &d;
                    for (l, p) in &left {
                        for (r, q) in &right {
                            add_entry(&mut rhs, l * tn + r, &(&(&cd * p) * q));
                        }
                    }
                }
            }
            compare(&mut report, "action is comultiplicative", vec![x, y], &lhs, &rhs);
            let counit_lhs = unit_vec(field, 0);
            let counit_lhs = scaled(&counit_lhs, &target.counit(&acted));
            let counit_rhs = scaled(&target.one(), &(&source.counit(&xv) * &target.counit(&yv)));
            compare(&mut report, "action is counital", vec![x, y], &counit_lhs, &counit_rhs);
        }
    }
    report
}

/// A Lie 1-cocycle extended to the truncated enveloping algebras.
#[derive(Debug, Clone)]
pub struct CocycleMap {
    lie: LieCocycle,
    source: PbwArena,
    target: PbwArena,
    action: ArenaAction,
    values: Vec<SparseVec>,
    inverse: LinMap,
}

/// Extends a Lie 1-cocycle by `pi(v_i t) = w_i pi(t) + v_i ⇀ pi(t)` for PBW
/// monomials `v_i t` with `v_i` the first generator present.
pub fn extend_cocycle(pi0: &LieCocycle, source: PbwArena, target: PbwArena) -> Result<CocycleMap> {
    if target.cap < source.cap {
        return Err(Error::CapExceeded { degree: source.cap, cap: target.cap });
    }
    if target.cap > source.cap {
        return Err(Error::InvalidShape(String::from("source and target caps differ")));
    }
    let report = check_lie_cocycle(pi0)?;
    if !report.passed() {
        return Err(Error::CocycleInvalid(report));
    }
    let action = extend_action(&source, &target, pi0)?;
    let field = source.field();
    let images: Vec<SparseVec> = pi0.pi.iter().map(|w| target.embed(w)).collect();
    let mut values: Vec<SparseVec> = Vec::with_capacity(source.dim());
    values.push(target.one());
    for m in 1..source.dim() {
        let exps = source.exponents(m);
        let i = exps.iter().position(|&e| e > 0).expect("non-unit monomial");
        let mut tail = exps.to_vec();
        tail[i] -= 1;
        let prev = &values[source.index[&tail]];
        let mut value = target.mul_unchecked(&images[i], prev);
        sparse_add_scaled(&mut value, &action.act_generator(i, prev), &field.one());
        values.push(value);
    }
    let n = source.dim();
    let cols = values.iter().cloned().enumerate().filter(|(_, v)| !v.is_empty());
    let matrix = LinMap::from_columns(field, &[n], &[target.dim()], cols);
    let inverse = matrix.inverse().ok_or(Error::NotInvertible)?;
    Ok(CocycleMap { lie: pi0.clone(), source, target, action, values, inverse })
}

impl CocycleMap {
    pub fn source(&self) -> &PbwArena {
        &self.source
    }

    pub fn target(&self) -> &PbwArena {
        &self.target
    }

    pub fn action(&self) -> &ArenaAction {
        &self.action
    }

    pub fn lie_cocycle(&self) -> &LieCocycle {
        &self.lie
    }

    /// `pi` of a source monomial.
    pub fn value(&self, m: usize) -> &SparseVec {
        &self.values[m]
    }

    pub fn apply(&self, x: &SparseVec) -> SparseVec {
        apply_columns(&self.values, x)
    }

    pub fn apply_inverse(&self, y: &SparseVec) -> SparseVec {
        self.inverse.apply(y)
    }

    pub fn matrix(&self) -> LinMap {
        let cols = self.values.iter().cloned().enumerate().filter(|(_, v)| !v.is_empty());
        LinMap::from_columns(self.source.field(), &[self.source.dim()], &[self.target.dim()], cols)
    }
}

/// Audits the extension: unit, triangularity, the enveloping cocycle
/// condition `pi(xy) = pi(x1)(x2 ⇀ pi(y))` on in-cap pairs, the coalgebra
/// map property and the extended action laws.
pub fn audit_cocycle_map(cm: &CocycleMap) -> AxiomReport {
    let (src, tgt) = (&cm.source, &cm.target);
    let field = src.field();
    let mut report = AxiomReport::new();
    compare(&mut report, "unit preserved", vec![0], &cm.values[0], &tgt.one());

    report.record("triangularity");
    let images: Vec<SparseVec> = cm.lie.pi.iter().map(|w| tgt.embed(w)).collect();
    for m in 1..src.dim() {
        let lead = tgt.substitute(src.exponents(m), &images);
        let rest = difference(&cm.values[m], &lead);
        let n = src.degree(m);
        if tgt.element_degree(&rest) >= n && !rest.is_empty() {
            report.fail(Failure {
                axiom: String::from("triangularity"),
                input: vec![m],
                output: vec![tgt.element_degree(&rest)],
                lhs: tgt.format_element(&cm.values[m]),
                rhs: tgt.format_element(&lead),
            });
        }
    }

    report.record("cocycle condition");
    let cap = src.cap;
    for x in 0..src.dim() {
        let dx = src.degree(x);
        let split = src.comul_terms(x);
        for y in 0..src.count_up_to(cap - dx) {
            let lhs = cm.apply(&src.products[x][y]);
            let mut rhs = SparseVec::new();
            for (x1, x2, c) in &split {
                let acted = cm.action.act_monomial(src, *x2, &cm.values[y]);
                sparse_add_scaled(&mut rhs, &tgt.mul_unchecked(&cm.values[*x1], &acted), c);
            }
            compare(&mut report, "cocycle condition", vec![x, y], &lhs, &rhs);
        }
    }

    report.record("comultiplication preserved");
    report.record("counit preserved");
    let tn = tgt.dim();
    for m in 0..src.dim() {
        let lhs = tgt.comul(&cm.values[m]);
        let mut rhs = SparseVec::new();
        for (a, b, c) in src.comul_terms(m) {
            for (l, p) in &cm.values[a] {
                for (r, q) in &cm.values[b] {
                    add_entry(&mut rhs, l * tn + r, &(&(&c * p) * q));
                }
            }
        }
        compare(&mut report, "comultiplication preserved", vec![m], &lhs, &rhs);
        let e_lhs = scaled(&tgt.one(), &tgt.counit(&cm.values[m]));
        let e_rhs = scaled(&tgt.one(), &src.counit(&unit_vec(field, m)));
        compare(&mut report, "counit preserved", vec![m], &e_lhs, &e_rhs);
    }
    report.merge_prefixed("extended action", audit_action(src, tgt, &cm.action));
    report
}

/// Reads the Lie 1-cocycle back off the degree-one parts of the extension.
pub fn restrict_to_primitives(cm: &CocycleMap) -> LieCocycle {
    let (src, tgt) = (&cm.source, &cm.target);
    let rho = (0..src.generators())
        .map(|i| {
            (0..tgt.generators())
                .map(|j| tgt.linear_part(&cm.action.act_generator(i, &tgt.generator(j))))
                .collect()
        })
        .collect();
    let pi = (0..src.generators())
        .map(|i| tgt.linear_part(&cm.values[src.generator_index(i)]))
        .collect();
    LieCocycle { source: src.lie.clone(), target: tgt.lie.clone(), rho, pi }
}

/// Outcome of the transported brace audit on a truncation.
#[derive(Debug, Clone)]
pub struct TruncatedBraceReport {
    pub report: AxiomReport,
    /// Triples with total degree at most the cap.
    pub checked: usize,
    /// Triples of basis monomials left out because some term leaves the cap.
    pub skipped: u128,
}

/// Transports the source product to the target, `a ∘ b = pi(pi⁻¹a · pi⁻¹b)`,
/// and audits `a ∘ (bc) = (a1 ∘ b) S(a2) (a3 ∘ c)` together with the unit and
/// associativity of `∘` on every triple of total degree at most the cap.
pub fn brace_on_truncation(cm: &CocycleMap) -> TruncatedBraceReport {
    let (src, tgt) = (&cm.source, &cm.target);
    let field = tgt.field();
    let cap = src.cap;
    let n = tgt.count_up_to(cap);
    let preimages: Vec<SparseVec> = (0..n).map(|m| cm.apply_inverse(&unit_vec(field, m))).collect();
    // circ[a][b] for deg a + deg b <= cap.
    let circ: Vec<Vec<SparseVec>> = (0..n)
        .map(|a| {
            let room = cap - tgt.degree(a);
            (0..tgt.count_up_to(room))
                .map(|b| cm.apply(&src.mul_unchecked(&preimages[a], &preimages[b])))
                .collect()
        })
        .collect();
    let circ_elem = |a: usize, v: &SparseVec| {
        let mut out = SparseVec::new();
        for (b, c) in v {
            sparse_add_scaled(&mut out, &circ[a][*b], c);
        }
        out
    };
    let circ_elems = |u: &SparseVec, v: &SparseVec| {
        let mut out = SparseVec::new();
        for (a, c) in u {
            sparse_add_scaled(&mut out, &circ_elem(*a, v), c);
        }
        out
    };

    let mut report = AxiomReport::new();
    report.record("units agree");
    report.record("circ associativity");
    report.record("brace compatibility");
    for b in 0..n {
        let bv = unit_vec(field, b);
        compare(&mut report, "units agree", vec![b], &circ[0][b], &bv);
        compare(&mut report, "units agree", vec![b], &circ[b][0], &bv);
    }
    let mut checked = 0usize;
    for a in 0..n {
        let da = tgt.degree(a);
        let split3 = tgt.comul3_terms(a);
        for b in 0..tgt.count_up_to(cap - da) {
            let db = tgt.degree(b);
            for c in 0..tgt.count_up_to(cap - da - db) {
                checked += 1;
                let cv = unit_vec(field, c);
                let left_assoc = circ_elems(&circ[a][b], &cv);
                let right_assoc = circ_elem(a, &circ[b][c]);
                compare(&mut report, "circ associativity", vec![a, b, c], &left_assoc, &right_assoc);

                let lhs = circ_elem(a, &tgt.products[b][c]);
                let mut rhs = SparseVec::new();
                for (a1, a2, a3, k) in &split3 {
                    let left = tgt.mul_unchecked(&circ[*a1][b], &tgt.antipode_monomial(*a2));
                    let whole = tgt.mul_unchecked(&left, &circ[*a3][c]);
                    sparse_add_scaled(&mut rhs, &whole, k);
                }
                compare(&mut report, "brace compatibility", vec![a, b, c], &lhs, &rhs);
            }
        }
    }
    let total = (tgt.dim() as u128).pow(3);
    TruncatedBraceReport { report, checked, skipped: total - checked as u128 }
}

/// Triangular table of the integers `tau_n(j)`, `0 <= j <= n <= max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TauTable {
    rows: Vec<Vec<BigUint>>,
}

impl TauTable {
    pub fn max(&self) -> usize {
        self.rows.len() - 1
    }

    /// Zero outside `1 <= j <= n`, except `tau_0(0) = 1`.
    pub fn get(&self, n: usize, j: usize) -> BigUint {
        self.rows.get(n).and_then(|r| r.get(j)).cloned().unwrap_or_else(BigUint::zero)
    }

    /// `tau_n(1), ..., tau_n(n)`.
    pub fn row(&self, n: usize) -> &[BigUint] {
        &self.rows[n][1..]
    }
}

/// `tau_n(1) = tau_n(n) = 1` and `tau_{n+1}(j) = tau_n(j-1) + j tau_n(j)`.
pub fn tau(n_max: usize) -> TauTable {
    let mut rows = vec![vec![BigUint::one()]];
    for n in 1..=n_max {
        let mut row = vec![BigUint::zero(); n + 1];
        row[1] = BigUint::one();
        row[n] = BigUint::one();
        let prev = &rows[n - 1];
        for (j, slot) in row.iter_mut().enumerate().take(n).skip(2) {
            *slot = &prev[j - 1] + BigUint::from(j) * &prev[j];
        }
        rows.push(row);
    }
    TauTable { rows }
}

fn field_scalar(field: FieldSpec, n: &BigUint) -> Scalar {
    field.from_bigint(&BigInt::from(n.clone()))
}

fn field_binomial(field: FieldSpec, n: i64, k: i64) -> Scalar {
    field.from_bigint(&binomial(n, k))
}

/// The two-dimensional algebra `y·x = x`, `y·y = alpha y` on the basis `(x, y)`.
pub fn two_dim_lsa(alpha: &Scalar) -> LeftSymmetricAlgebra {
    let field = alpha.field();
    LeftSymmetricAlgebra::new(field, 2, &[(1, 0, 0, field.one()), (1, 1, 1, alpha.clone())])
        .expect("indices in range")
}

/// `pi(x^m y^n) = sum_j tau_n(j) alpha^(n-j) x^m y^j` in a target arena with
/// generators `(x, y)`.
pub fn closed_form_2dim(target: &PbwArena, m: usize, n: usize, alpha: &Scalar) -> Result<SparseVec> {
    if target.generators() != 2 {
        return Err(Error::InvalidShape(String::from("expected generators (x, y)")));
    }
    if m + n > target.cap() {
        return Err(Error::CapExceeded { degree: m + n, cap: target.cap() });
    }
    let field = target.field();
    let table = tau(n);
    let mut out = SparseVec::new();
    for j in 0..=n {
        let t = table.get(n, j);
        if t.is_zero() {
            continue;
        }
        let c = &field_scalar(field, &t) * &alpha.pow((n - j) as u32);
        add_entry(&mut out, target.monomial(&[m as u32, j as u32])?, &c);
    }
    Ok(out)
}

/// Which multiplication table to use for the three-dimensional
/// characteristic-3 algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sl2Table {
    /// `y·z = alpha z`, as originally tabulated.
    Literal,
    /// `y·z = alpha y`.
    Corrected,
}

fn require_char3(field: FieldSpec) -> Result<()> {
    if field.characteristic() != 3 {
        return Err(Error::CharacteristicMismatch);
    }
    Ok(())
}

/// The three-dimensional algebra on `(x, y, z)` over GF(3) whose commutator
/// algebra is `sl2` for suitable `alpha`.
pub fn sl2_char3_lsa(alpha: &Scalar, table: Sl2Table) -> Result<LeftSymmetricAlgebra> {
    let field = alpha.field();
    require_char3(field)?;
    let beta = &field.one() - &alpha.inv()?;
    let one = field.one();
    let (x, y, z) = (0, 1, 2);
    let yz = match table {
        Sl2Table::Literal => (y, z, z, alpha.clone()),
        Sl2Table::Corrected => (y, z, y, alpha.clone()),
    };
    LeftSymmetricAlgebra::new(
        field,
        3,
        &[
            (y, x, z, beta.clone()),
            (z, x, x, alpha + &one),
            (x, y, z, -&beta),
            (z, y, y, alpha - &one),
            (x, z, x, alpha.clone()),
            yz,
            (z, z, z, alpha.clone()),
        ],
    )
}

/// The constants in `[x,y] = c1 z`, `[z,x] = c2 x`, `[z,y] = c3 y`, and
/// whether `e = x`, `f = y`, `h = (2/c2) z` satisfy the classical relations
/// `[e,f] = h`, `[h,e] = 2e`, `[h,f] = -2f` with no other terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sl2Relations {
    pub xy: Scalar,
    pub zx: Scalar,
    pub zy: Scalar,
    pub exact: bool,
    pub is_sl2: bool,
}

pub fn sl2_relations(g: &LieAlgebraData) -> Sl2Relations {
    let f = g.field;
    let coeff = |i, j, k| g.basis_bracket(i, j).get(&k).cloned().unwrap_or_else(|| f.zero());
    let (xy, zx, zy) = (coeff(0, 1, 2), coeff(2, 0, 0), coeff(2, 1, 1));
    let exact = g.basis_bracket(0, 1).len() <= 1
        && g.basis_bracket(2, 0).len() <= 1
        && g.basis_bracket(2, 1).len() <= 1;
    let two = f.from_i64(2);
    let is_sl2 = exact
        && !zx.is_zero()
        && zy == -&zx
        && zx.inv().map(|inv| &two * &inv == xy).unwrap_or(false);
    Sl2Relations { xy, zx, zy, exact, is_sl2 }
}

fn sl2_target_monomial(target: &PbwArena, z: i64, y: i64, x: i64) -> Result<Option<usize>> {
    if z < 0 || y < 0 || x < 0 {
        return Ok(None);
    }
    target.monomial(&[x as u32, y as u32, z as u32]).map(Some)
}

fn check_sl2_target(target: &PbwArena, alpha: &Scalar, degree: usize) -> Result<()> {
    require_char3(target.field())?;
    if target.generators() != 3 || alpha.field() != target.field() {
        return Err(Error::InvalidShape(String::from("expected generators (x, y, z) over GF(3)")));
    }
    if degree > target.cap() {
        return Err(Error::CapExceeded { degree, cap: target.cap() });
    }
    Ok(())
}

/// `pi(h^n) = sum_{j=1}^n tau_n(j) alpha^(n-j) z^j`, with `pi(1) = 1`.
pub fn sl2_pi_h_power(target: &PbwArena, n: usize, alpha: &Scalar) -> Result<SparseVec> {
    check_sl2_target(target, alpha, n)?;
    let field = target.field();
    let table = tau(n);
    let mut out = SparseVec::new();
    for j in 0..=n {
        let c = &field_scalar(field, &table.get(n, j)) * &alpha.pow((n - j) as u32);
        if let Some(m) = sl2_target_monomial(target, j as i64, 0, 0)? {
            add_entry(&mut out, m, &c);
        }
    }
    Ok(out)
}

/// The tabulated `f^j ⇀ x^a`:
/// `sum_t alpha^t (1-alpha⁻¹)^(j-t) C(a,t) C(a-t, j-2t) z^(j-2t) y^t x^(a-j+t)`.
pub fn sl2_f_action_on_x(target: &PbwArena, j: usize, a: usize, alpha: &Scalar) -> Result<SparseVec> {
    check_sl2_target(target, alpha, a)?;
    let field = target.field();
    let beta = &field.one() - &alpha.inv()?;
    let (j, a) = (j as i64, a as i64);
    let mut out = SparseVec::new();
    for t in 0..=j / 2 {
        let c = &(&alpha.pow(t as u32) * &beta.pow((j - t) as u32))
            * &(&field_binomial(field, a, t) * &field_binomial(field, a - t, j - 2 * t));
        if c.is_zero() {
            continue;
        }
        if let Some(m) = sl2_target_monomial(target, j - 2 * t, t, a - j + t)? {
            add_entry(&mut out, m, &c);
        }
    }
    Ok(out)
}

/// The tabulated double sum for `pi(f^b e^a)`.
pub fn sl2_pi_fe(target: &PbwArena, b: usize, a: usize, alpha: &Scalar) -> Result<SparseVec> {
    check_sl2_target(target, alpha, a + b)?;
    let field = target.field();
    let beta = &field.one() - &alpha.inv()?;
    let (a, b) = (a as i64, b as i64);
    let mut out = SparseVec::new();
    for j in 0..=b {
        for t in 0..=j / 2 {
            let c = &(&alpha.pow(t as u32) * &beta.pow((j - t) as u32))
                * &(&field_binomial(field, b, j)
                    * &(&field_binomial(field, a, t) * &field_binomial(field, a - t, j - 2 * t)));
            if c.is_zero() {
                continue;
            }
            if let Some(m) = sl2_target_monomial(target, j - 2 * t, b - j + t, a - j + t)? {
                add_entry(&mut out, m, &c);
            }
        }
    }
    Ok(out)
}

/// The tabulated quadruple sum for `pi(h^c f^b e^a)`. The inner sum over
/// `s` starts at 0 when `k = 0` so that `pi(h^0) = 1`.
pub fn closed_form_sl2(target: &PbwArena, a: usize, b: usize, c: usize, alpha: &Scalar) -> Result<SparseVec> {
    check_sl2_target(target, alpha, a + b + c)?;
    let field = target.field();
    let beta = &field.one() - &alpha.inv()?;
    let table = tau(c);
    let (a, b, c) = (a as i64, b as i64, c as i64);
    let mut out = SparseVec::new();
    for k in 0..=c {
        for j in 0..=b {
            let eigen = &(&field.from_i64(b - a + j) * alpha) + &field.from_i64(b - a);
            for s in 0..=k {
                let tau_ks = field_scalar(field, &table.get(k as usize, s as usize));
                if tau_ks.is_zero() {
                    continue;
                }
                for t in 0..=j / 2 {
                    let binoms = &(&field_binomial(field, c, k) * &field_binomial(field, b, j))
                        * &(&field_binomial(field, a, t) * &field_binomial(field, a - t, j - 2 * t));
                    let powers = &(&alpha.pow((k - s + t) as u32) * &beta.pow((j - t) as u32))
                        * &eigen.pow((c - k) as u32);
                    let coeff = &(&binoms * &tau_ks) * &powers;
                    if coeff.is_zero() {
                        continue;
                    }
                    if let Some(m) = sl2_target_monomial(target, j - 2 * t + s, b - j + t, a - j + t)? {
                        add_entry(&mut out, m, &coeff);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Builds arenas with the usual names and extends the identity cocycle of `v`.
pub fn extend_lsa(v: &LeftSymmetricAlgebra, names: &[&str], cap: usize) -> Result<CocycleMap> {
    let pi0 = lsa_cocycle(v);
    let source = PbwArena::with_names(pi0.source.clone(), names, cap)?;
    let target = PbwArena::with_names(pi0.target.clone(), names, cap)?;
    extend_cocycle(&pi0, source, target)
}

/// One closed-form value compared with the recursive engine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleComparison {
    pub formula: String,
    pub input: String,
    pub engine: String,
    pub closed_form: String,
    pub agrees: bool,
}

/// Every comparison for one run, plus the tables audit when relevant.
#[derive(Debug, Clone)]
pub struct OracleReport {
    pub alpha: Scalar,
    pub cap: usize,
    pub table_audits: Vec<(String, AxiomReport)>,
    pub interpretation: Option<String>,
    pub comparisons: Vec<OracleComparison>,
}

impl OracleReport {
    pub fn agreements(&self) -> usize {
        self.comparisons.iter().filter(|c| c.agrees).count()
    }

    pub fn discrepancies(&self) -> Vec<&OracleComparison> {
        self.comparisons.iter().filter(|c| !c.agrees).collect()
    }

    /// Disagreement count per formula name, in first-seen order.
    pub fn per_formula(&self) -> Vec<(String, usize, usize)> {
        let mut out: Vec<(String, usize, usize)> = Vec::new();
        for c in &self.comparisons {
            let slot = match out.iter().position(|(f, _, _)| *f == c.formula) {
                Some(i) => i,
                None => {
                    out.push((c.formula.clone(), 0, 0));
                    out.len() - 1
                }
            };
            out[slot].1 += 1;
            if !c.agrees {
                out[slot].2 += 1;
            }
        }
        out
    }
}

fn push_comparison(
    out: &mut Vec<OracleComparison>,
    arena: &PbwArena,
    formula: &str,
    input: String,
    engine: &SparseVec,
    closed: &SparseVec,
) {
    out.push(OracleComparison {
        formula: String::from(formula),
        input,
        engine: arena.format_element(engine),
        closed_form: arena.format_element(closed),
        agrees: engine == closed,
    });
}

/// Compares the two-dimensional closed form with the engine for `m + n <= cap`.
pub fn two_dim_oracle(alpha: &Scalar, cap: usize) -> Result<OracleReport> {
    let v = two_dim_lsa(alpha);
    let cm = extend_lsa(&v, &["x", "y"], cap)?;
    let (src, tgt) = (cm.source(), cm.target());
    let mut comparisons = Vec::new();
    for total in 0..=cap {
        for m in 0..=total {
            let n = total - m;
            let mono = src.monomial(&[m as u32, n as u32])?;
            let closed = closed_form_2dim(tgt, m, n, alpha)?;
            let input = format!("x^{m} y^{n}");
            push_comparison(&mut comparisons, tgt, "pi(x^m y^n)", input, cm.value(mono), &closed);
        }
    }
    Ok(OracleReport {
        alpha: alpha.clone(),
        cap,
        table_audits: vec![(String::from("two-dimensional"), check_lsa(&v))],
        interpretation: Some(String::from("two-dimensional")),
        comparisons,
    })
}

/// Audits both characteristic-3 tables, extends the first one that is
/// left-symmetric, and compares every tabulated formula with the engine for
/// total degree at most `cap`.
pub fn sl2_oracle(alpha: &Scalar, cap: usize) -> Result<OracleReport> {
    require_char3(alpha.field())?;
    let literal = sl2_char3_lsa(alpha, Sl2Table::Literal)?;
    let corrected = sl2_char3_lsa(alpha, Sl2Table::Corrected)?;
    let audits = vec![
        (String::from("literal"), check_lsa(&literal)),
        (String::from("corrected"), check_lsa(&corrected)),
    ];
    let chosen = audits.iter().position(|(_, r)| r.passed());
    let mut report = OracleReport {
        alpha: alpha.clone(),
        cap,
        table_audits: audits,
        interpretation: chosen.map(|i| if i == 0 { String::from("literal") } else { String::from("corrected") }),
        comparisons: Vec::new(),
    };
    let v = match chosen {
        Some(0) => literal,
        Some(_) => corrected,
        None => return Ok(report),
    };
    let cm = extend_lsa(&v, &["x", "y", "z"], cap)?;
    let (src, tgt) = (cm.source(), cm.target());
    let field = src.field();
    let mono = |e: u32, f: u32, h: u32| src.monomial(&[e, f, h]);
    let out = &mut report.comparisons;
    for n in 0..=cap {
        let nu = n as u32;
        let ex = unit_vec(field, sl2_target_monomial(tgt, 0, 0, n as i64)?.expect("in cap"));
        let ey = unit_vec(field, sl2_target_monomial(tgt, 0, n as i64, 0)?.expect("in cap"));
        push_comparison(out, tgt, "pi(e^n)", format!("n={n}"), cm.value(mono(nu, 0, 0)?), &ex);
        push_comparison(out, tgt, "pi(f^n)", format!("n={n}"), cm.value(mono(0, nu, 0)?), &ey);
        let hz = sl2_pi_h_power(tgt, n, alpha)?;
        push_comparison(out, tgt, "pi(h^n)", format!("n={n}"), cm.value(mono(0, 0, nu)?), &hz);
    }
    for a in 0..=cap {
        let xa = unit_vec(field, sl2_target_monomial(tgt, 0, 0, a as i64)?.expect("in cap"));
        for j in 0..=cap - a {
            let engine = cm.action().act_monomial(src, mono(0, j as u32, 0)?, &xa);
            let closed = sl2_f_action_on_x(tgt, j, a, alpha)?;
            push_comparison(out, tgt, "f^j acting on x^a", format!("j={j} a={a}"), &engine, &closed);
        }
    }
    for total in 0..=cap {
        for c in 0..=total {
            for b in 0..=total - c {
                let a = total - c - b;
                let fe = src.mul_unchecked(&src.generator_power(1, b), &src.generator_power(0, a));
                if c == 0 {
                    let closed = sl2_pi_fe(tgt, b, a, alpha)?;
                    push_comparison(out, tgt, "pi(f^b e^a)", format!("b={b} a={a}"), &cm.apply(&fe), &closed);
                }
                let hfe = src.mul_unchecked(&src.generator_power(2, c), &fe);
                let closed = closed_form_sl2(tgt, a, b, c, alpha)?;
                let input = format!("c={c} b={b} a={a}");
                push_comparison(out, tgt, "pi(h^c f^b e^a)", input, &cm.apply(&hfe), &closed);
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn q(n: i64) -> Scalar {
        FieldSpec::Rationals.from_i64(n)
    }

    fn gf3(n: i64) -> Scalar {
        FieldSpec::prime(3).unwrap().from_i64(n)
    }

    fn arena_2dim(alpha: &Scalar, cap: usize) -> PbwArena {
        PbwArena::with_names(lie_from_lsa(&two_dim_lsa(alpha)), &["x", "y"], cap).unwrap()
    }

    fn el(arena: &PbwArena, terms: &[(&[u32], i64)]) -> SparseVec {
        let mut out = SparseVec::new();
        for (exps, c) in terms {
            add_entry(&mut out, arena.index_of(exps).unwrap(), &arena.field().from_i64(*c));
        }
        out
    }

    #[test]
    fn char3_tables_audit() {
        let audit = |a, t| check_lsa(&sl2_char3_lsa(&gf3(a), t).unwrap()).passed();
        assert!(audit(1, Sl2Table::Corrected));
        assert!(!audit(1, Sl2Table::Literal));
        // At alpha = 2 the (x, y, x) triple forces 1 - 1/alpha = 0.
        assert!(!audit(2, Sl2Table::Corrected));
        assert!(!audit(2, Sl2Table::Literal));
        let rel = sl2_relations(&lie_from_lsa(&sl2_char3_lsa(&gf3(1), Sl2Table::Corrected).unwrap()));
        assert!(rel.xy.is_zero() && !rel.is_sl2);
    }

    #[test]
    fn two_dim_is_left_symmetric() {
        assert!(check_lsa(&two_dim_lsa(&q(2))).passed());
        assert!(check_lsa(&LeftSymmetricAlgebra::zero(FieldSpec::Rationals, 3)).passed());
    }

    #[test]
    fn two_dim_bracket_is_minus_x() {
        let g = lie_from_lsa(&two_dim_lsa(&q(2)));
        assert!(check_lie(&g).passed());
        assert_eq!(g.basis_bracket(0, 1), &BTreeMap::from([(0, q(-1))]));
        assert_eq!(g.basis_bracket(1, 0), &BTreeMap::from([(0, q(1))]));
        assert!(lie_from_lsa(&LeftSymmetricAlgebra::zero(FieldSpec::Rationals, 2)).is_abelian());
    }

    #[test]
    fn lsa_cocycle_passes() {
        for v in [two_dim_lsa(&q(2)), LeftSymmetricAlgebra::zero(FieldSpec::Rationals, 2)] {
            let r = check_lie_cocycle(&lsa_cocycle(&v)).unwrap();
            assert!(r.passed(), "{}", r.summary());
        }
    }

    #[test]
    fn non_derivation_is_rejected() {
        // rho(e0) = id is not a derivation of the non-abelian target.
        let g = LieAlgebraData::abelian(FieldSpec::Rationals, 2);
        let h = lie_from_lsa(&two_dim_lsa(&q(1)));
        let id: Vec<SparseVec> = (0..2).map(|j| unit_vec(FieldSpec::Rationals, j)).collect();
        let c = LieCocycle {
            source: g,
            target: h,
            rho: vec![id.clone(), vec![SparseVec::new(), SparseVec::new()]],
            pi: id,
        };
        assert!(matches!(check_lie_cocycle(&c), Err(Error::NotDerivation(_))));
    }

    #[test]
    fn straightening_examples() {
        let a = arena_2dim(&q(1), 4);
        let (x, y) = (a.generator(0), a.generator(1));
        assert_eq!(pbw_mul(&a, &y, &x).unwrap(), el(&a, &[(&[1, 1], 1), (&[1, 0], 1)]));
        assert_eq!(pbw_mul(&a, &x, &y).unwrap(), el(&a, &[(&[1, 1], 1)]));

        let ab = PbwArena::new(LieAlgebraData::abelian(FieldSpec::Rationals, 2), 4);
        let m = el(&ab, &[(&[0, 2], 1)]);
        let n = el(&ab, &[(&[1, 1], 1)]);
        assert_eq!(pbw_mul(&ab, &m, &n).unwrap(), el(&ab, &[(&[1, 3], 1)]));

        let big = el(&a, &[(&[0, 3], 1)]);
        assert!(matches!(pbw_mul(&a, &big, &big), Err(Error::CapExceeded { degree: 6, cap: 4 })));
    }

    #[test]
    fn sl2_straightening_f_times_e() {
        let v = sl2_char3_lsa(&gf3(2), Sl2Table::Corrected).unwrap();
        let g = lie_from_lsa(&v);
        let rel = sl2_relations(&g);
        assert!(rel.is_sl2, "{rel:?}");
        // With e = x, f = y, h = [e, f]: f e = e f - h.
        let a = PbwArena::new(g.clone(), 3);
        let h = a.embed(g.basis_bracket(0, 1));
        let mut expected = el(&a, &[(&[1, 1, 0], 1)]);
        sparse_add_scaled(&mut expected, &h, &-gf3(1));
        assert_eq!(pbw_mul(&a, &a.generator(1), &a.generator(0)).unwrap(), expected);
    }

    #[test]
    fn coproduct_examples() {
        let a = arena_2dim(&q(1), 4);
        let n = a.dim();
        let key = |l: &[u32], r: &[u32]| a.index_of(l).unwrap() * n + a.index_of(r).unwrap();
        let dy2 = pbw_comul(&a, a.index_of(&[0, 2]).unwrap());
        let expected: SparseVec =
            [(key(&[0, 2], &[0, 0]), q(1)), (key(&[0, 1], &[0, 1]), q(2)), (key(&[0, 0], &[0, 2]), q(1))]
                .into_iter()
                .collect();
        assert_eq!(dy2, expected);
        let dxy = pbw_comul(&a, a.index_of(&[1, 1]).unwrap());
        assert_eq!(dxy.len(), 4);
        assert_eq!(dxy[&key(&[1, 0], &[0, 1])], q(1));
        assert_eq!(dxy[&key(&[0, 1], &[1, 0])], q(1));
        assert_eq!(a.counit(&a.generator(0)), q(0));
        assert_eq!(a.counit(&a.one()), q(1));
    }

    #[test]
    fn arenas_are_truncated_bialgebras() {
        let r = audit_arena(&arena_2dim(&q(2), 5));
        assert!(r.passed(), "{}", r.summary());
        let g = lie_from_lsa(&sl2_char3_lsa(&gf3(2), Sl2Table::Corrected).unwrap());
        let r = audit_arena(&PbwArena::new(g, 4));
        assert!(r.passed(), "{}", r.summary());
    }

    #[test]
    fn antipode_is_convolution_inverse() {
        let g = lie_from_lsa(&sl2_char3_lsa(&gf3(2), Sl2Table::Corrected).unwrap());
        let a = PbwArena::new(g, 4);
        for m in 0..a.dim() {
            let mut acc = SparseVec::new();
            for (l, r, c) in a.comul_terms(m) {
                let s = a.antipode_monomial(l);
                sparse_add_scaled(&mut acc, &a.mul_unchecked(&s, &unit_vec(a.field(), r)), &c);
            }
            let eps = scaled(&a.one(), &a.counit(&unit_vec(a.field(), m)));
            assert_eq!(acc, eps, "monomial {}", a.label(m));
        }
    }

    #[test]
    fn extended_action_examples() {
        let cm = extend_lsa(&two_dim_lsa(&q(1)), &["x", "y"], 4).unwrap();
        let (src, tgt) = (cm.source(), cm.target());
        let x2 = el(tgt, &[(&[2, 0], 1)]);
        let y_acts = cm.action().act_generator(1, &x2);
        assert_eq!(y_acts, el(tgt, &[(&[2, 0], 2)]));
        for m in 0..tgt.dim() {
            let v = unit_vec(tgt.field(), m);
            assert!(cm.action().act_generator(0, &v).is_empty());
        }
        let r = audit_action(src, tgt, cm.action());
        assert!(r.passed(), "{}", r.summary());
    }

    #[test]
    fn f_cubed_kills_x() {
        {
            let v = sl2_char3_lsa(&gf3(1), Sl2Table::Corrected).unwrap();
            let cm = extend_lsa(&v, &["x", "y", "z"], 4).unwrap();
            let f3 = cm.source().index_of(&[0, 3, 0]).unwrap();
            let x = cm.target().generator(0);
            assert!(cm.action().act_monomial(cm.source(), f3, &x).is_empty());
        }
    }

    #[test]
    fn extension_examples() {
        let cm = extend_lsa(&two_dim_lsa(&q(3)), &["x", "y"], 4).unwrap();
        let (src, tgt) = (cm.source(), cm.target());
        let y2 = cm.value(src.index_of(&[0, 2]).unwrap());
        assert_eq!(y2, &el(tgt, &[(&[0, 2], 1), (&[0, 1], 3)]));

        let v = sl2_char3_lsa(&gf3(1), Sl2Table::Corrected).unwrap();
        let cm = extend_lsa(&v, &["x", "y", "z"], 4).unwrap();
        let h2 = cm.value(cm.source().index_of(&[0, 0, 2]).unwrap());
        assert_eq!(h2, &el(cm.target(), &[(&[0, 0, 2], 1), (&[0, 0, 1], 1)]));

        let ab = LeftSymmetricAlgebra::zero(FieldSpec::Rationals, 2);
        let cm = extend_lsa(&ab, &["x", "y"], 4).unwrap();
        for m in 0..cm.source().dim() {
            assert_eq!(cm.value(m), &unit_vec(FieldSpec::Rationals, m));
        }
    }

    #[test]
    fn extension_audits_pass() {
        let cm = extend_lsa(&two_dim_lsa(&q(2)), &["x", "y"], 5).unwrap();
        let r = audit_cocycle_map(&cm);
        assert!(r.passed(), "{}", r.summary());
    }

    #[test]
    fn restriction_recovers_the_lie_cocycle() {
        let v = sl2_char3_lsa(&gf3(1), Sl2Table::Corrected).unwrap();
        let cm = extend_lsa(&v, &["x", "y", "z"], 3).unwrap();
        let back = restrict_to_primitives(&cm);
        assert_eq!(&back, cm.lie_cocycle());
        assert!(check_lie_cocycle(&back).unwrap().passed());
        for i in 0..3 {
            assert_eq!(back.pi[i], unit_vec(v.field(), i));
        }
    }

    #[test]
    fn tau_small_rows() {
        let t = tau(5);
        let row = |n: usize| t.row(n).iter().map(|x| x.to_u64().unwrap()).collect::<Vec<u64>>();
        assert_eq!(row(3), [1, 3, 1]);
        assert_eq!(row(4), [1, 7, 6, 1]);
        assert_eq!(t.get(0, 0), BigUint::one());
        assert_eq!(t.get(3, 0), BigUint::zero());
    }

    #[test]
    fn two_dim_closed_form_examples() {
        let a = arena_2dim(&q(2), 4);
        let abel = PbwArena::with_names(LieAlgebraData::abelian(FieldSpec::Rationals, 2), &["x", "y"], 4).unwrap();
        assert_eq!(closed_form_2dim(&abel, 0, 1, &q(2)).unwrap(), el(&abel, &[(&[0, 1], 1)]));
        assert_eq!(closed_form_2dim(&abel, 0, 2, &q(2)).unwrap(), el(&abel, &[(&[0, 2], 1), (&[0, 1], 2)]));
        assert_eq!(
            closed_form_2dim(&abel, 1, 3, &q(1)).unwrap(),
            el(&abel, &[(&[1, 1], 1), (&[1, 2], 3), (&[1, 3], 1)])
        );
        assert!(matches!(closed_form_2dim(&a, 3, 2, &q(1)), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn sl2_closed_form_examples() {
        let abel = |cap| {
            PbwArena::with_names(LieAlgebraData::abelian(FieldSpec::prime(3).unwrap(), 3), &["x", "y", "z"], cap)
                .unwrap()
        };
        let t = abel(4);
        let fx = sl2_f_action_on_x(&t, 1, 1, &gf3(2)).unwrap();
        assert_eq!(fx, el(&t, &[(&[0, 0, 1], 2)]));
        let h2 = sl2_pi_h_power(&t, 2, &gf3(1)).unwrap();
        assert_eq!(h2, el(&t, &[(&[0, 0, 2], 1), (&[0, 0, 1], 1)]));
        let q_arena = PbwArena::new(LieAlgebraData::abelian(FieldSpec::Rationals, 3), 2);
        assert_eq!(closed_form_sl2(&q_arena, 1, 0, 0, &q(1)), Err(Error::CharacteristicMismatch));
        assert!(matches!(closed_form_sl2(&t, 2, 2, 2, &gf3(1)), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn two_dim_oracle_agrees() {
        let r = two_dim_oracle(&q(2), 5).unwrap();
        assert!(r.discrepancies().is_empty());
    }

    #[test]
    fn truncated_brace_small() {
        let cm = extend_lsa(&two_dim_lsa(&q(2)), &["x", "y"], 4).unwrap();
        let t = brace_on_truncation(&cm);
        assert!(t.report.passed(), "{}", t.report.summary());
        assert!(t.checked > 0 && t.skipped > 0);
    }
}
