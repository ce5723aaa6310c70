//! Sparse linear maps between tensor products of basis-labelled spaces.
//!
//! A [`LinMap`] has a list of domain legs and a list of codomain legs, each
//! leg carrying its own dimension. Multi-indices are flattened row-major (the
//! first leg is the most significant digit), so a leg pair `(H, K)` and a
//! single leg of dimension `dim H * dim K` share flat indices. An empty leg
//! list is the ground field.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::report::{AxiomReport, Failure};
use crate::scalars::{FieldSpec, Scalar};

/// Sparse vector keyed by flat basis index; never stores zeros.
pub type SparseVec = BTreeMap<usize, Scalar>;

pub fn sparse_add_scaled(acc: &mut SparseVec, v: &SparseVec, c: &Scalar) {
    for (k, x) in v {
        add_entry(acc, *k, &(x * c));
    }
}

pub fn add_entry(acc: &mut SparseVec, k: usize, x: &Scalar) {
    if x.is_zero() {
        return;
    }
    match acc.get_mut(&k) {
        Some(slot) => {
            *slot += x;
            if slot.is_zero() {
                acc.remove(&k);
            }
        }
        None => {
            acc.insert(k, x.clone());
        }
    }
}

pub fn flat_index(dims: &[usize], idx: &[usize]) -> usize {
    idx.iter().zip(dims).fold(0, |acc, (i, d)| acc * d + i)
}

pub fn multi_index(dims: &[usize], mut flat: usize) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for (slot, d) in out.iter_mut().zip(dims).rev() {
        *slot = flat % d;
        flat /= d;
    }
    out
}

pub fn total_dim(dims: &[usize]) -> usize {
    dims.iter().product()
}

/// A permutation of tensor legs: output leg `i` carries input leg `self[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LegPermutation(Vec<usize>);

impl LegPermutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || seen[i] {
                return Err(Error::InvalidPermutation);
            }
            seen[i] = true;
        }
        Ok(LegPermutation(images))
    }

    pub fn identity(n: usize) -> Self {
        LegPermutation((0..n).collect())
    }

    /// Exchanges legs `i` and `j`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Result<Self> {
        if i >= n || j >= n {
            return Err(Error::InvalidPermutation);
        }
        let mut v: Vec<usize> = (0..n).collect();
        v.swap(i, j);
        Ok(LegPermutation(v))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// The permutation whose leg map is `permute(self) ∘ permute(first)`.
    pub fn after(&self, first: &LegPermutation) -> Result<LegPermutation> {
        if self.len() != first.len() {
            return Err(Error::InvalidPermutation);
        }
        Ok(LegPermutation(self.0.iter().map(|&i| first.0[i]).collect()))
    }

    pub fn inverse(&self) -> LegPermutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &p) in self.0.iter().enumerate() {
            inv[p] = i;
        }
        LegPermutation(inv)
    }
}

/// Exact sparse linear map `⊗ dom -> ⊗ cod`, stored by columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinMap {
    field: FieldSpec,
    dom: Vec<usize>,
    cod: Vec<usize>,
    cols: BTreeMap<usize, SparseVec>,
}

impl LinMap {
    pub fn zero(field: FieldSpec, dom: &[usize], cod: &[usize]) -> Self {
        LinMap { field, dom: dom.to_vec(), cod: cod.to_vec(), cols: BTreeMap::new() }
    }

    pub fn identity(field: FieldSpec, dims: &[usize]) -> Self {
        let mut m = LinMap::zero(field, dims, dims);
        let one = field.one();
        for j in 0..total_dim(dims) {
            m.cols.insert(j, BTreeMap::from([(j, one.clone())]));
        }
        m
    }

    /// Scalar `c` as a map from the ground field to itself.
    pub fn scalar(field: FieldSpec, c: Scalar) -> Self {
        let mut m = LinMap::zero(field, &[], &[]);
        m.add_flat(0, 0, c);
        m
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn domain_dims(&self) -> &[usize] {
        &self.dom
    }

    pub fn codomain_dims(&self) -> &[usize] {
        &self.cod
    }

    pub fn domain_arity(&self) -> usize {
        self.dom.len()
    }

    pub fn codomain_arity(&self) -> usize {
        self.cod.len()
    }

    pub fn nnz(&self) -> usize {
        self.cols.values().map(|c| c.len()).sum()
    }

    /// Adds `c` to the coefficient of output `out` in the image of input `inp`.
    pub fn add(&mut self, out: &[usize], inp: &[usize], c: Scalar) -> Result<()> {
        if out.len() != self.cod.len() || inp.len() != self.dom.len() {
            return Err(Error::ArityMismatch {
                expected: format!("{}->{}", self.dom.len(), self.cod.len()),
                found: format!("{}->{}", inp.len(), out.len()),
            });
        }
        for (i, d) in out.iter().zip(&self.cod).chain(inp.iter().zip(&self.dom)) {
            if i >= d {
                return Err(Error::IndexOutOfRange { index: *i, bound: *d });
            }
        }
        if c.field() != self.field {
            return Err(Error::FieldMismatch);
        }
        let (o, i) = (flat_index(&self.cod, out), flat_index(&self.dom, inp));
        self.add_flat(o, i, c);
        Ok(())
    }

    pub(crate) fn add_flat(&mut self, out: usize, inp: usize, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let col = self.cols.entry(inp).or_default();
        add_entry(col, out, &c);
        if col.is_empty() {
            self.cols.remove(&inp);
        }
    }

    /// Builds a map from a full column table on flat indices.
    pub fn from_columns(
        field: FieldSpec,
        dom: &[usize],
        cod: &[usize],
        cols: impl IntoIterator<Item = (usize, SparseVec)>,
    ) -> Self {
        let mut m = LinMap::zero(field, dom, cod);
        for (j, col) in cols {
            let col: SparseVec = col.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            if !col.is_empty() {
                m.cols.insert(j, col);
            }
        }
        m
    }

    pub fn get(&self, out: &[usize], inp: &[usize]) -> Scalar {
        self.get_flat(flat_index(&self.cod, out), flat_index(&self.dom, inp))
    }

    pub fn get_flat(&self, out: usize, inp: usize) -> Scalar {
        self.cols
            .get(&inp)
            .and_then(|c| c.get(&out))
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn column(&self, inp: usize) -> Option<&SparseVec> {
        self.cols.get(&inp)
    }

    pub fn columns(&self) -> impl Iterator<Item = (usize, &SparseVec)> {
        self.cols.iter().map(|(j, c)| (*j, c))
    }

    /// All nonzero entries as `(output multi-index, input multi-index, coefficient)`.
    pub fn entries(&self) -> impl Iterator<Item = (Vec<usize>, Vec<usize>, &Scalar)> + '_ {
        self.cols.iter().flat_map(move |(j, col)| {
            let inp = multi_index(&self.dom, *j);
            col.iter()
                .map(move |(i, c)| (multi_index(&self.cod, *i), inp.clone(), c))
        })
    }

    /// Applies the map to a vector of flat input indices.
    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (j, x) in v {
            if let Some(col) = self.cols.get(j) {
                sparse_add_scaled(&mut out, col, x);
            }
        }
        out
    }

    /// The composite `self ∘ g`.
    pub fn compose(&self, g: &LinMap) -> Result<LinMap> {
        if self.field != g.field {
            return Err(Error::FieldMismatch);
        }
        if self.dom != g.cod {
            return Err(Error::ArityMismatch {
                expected: format!("{:?}", self.dom),
                found: format!("{:?}", g.cod),
            });
        }
        let mut cols = BTreeMap::new();
        for (j, gcol) in &g.cols {
            let col = self.apply(gcol);
            if !col.is_empty() {
                cols.insert(*j, col);
            }
        }
        Ok(LinMap { field: self.field, dom: g.dom.clone(), cod: self.cod.clone(), cols })
    }

    /// Kronecker product: `self` acts on the leading legs, `g` on the trailing ones.
    pub fn tensor(&self, g: &LinMap) -> Result<LinMap> {
        if self.field != g.field {
            return Err(Error::FieldMismatch);
        }
        let gd = total_dim(&g.dom);
        let gc = total_dim(&g.cod);
        let mut cols = BTreeMap::new();
        for (j1, c1) in &self.cols {
            for (j2, c2) in &g.cols {
                let mut col = SparseVec::new();
                for (i1, a) in c1 {
                    for (i2, b) in c2 {
                        col.insert(i1 * gc + i2, a * b);
                    }
                }
                cols.insert(j1 * gd + j2, col);
            }
        }
        let mut dom = self.dom.clone();
        dom.extend_from_slice(&g.dom);
        let mut cod = self.cod.clone();
        cod.extend_from_slice(&g.cod);
        Ok(LinMap { field: self.field, dom, cod, cols })
    }

    /// Tensor product of a sequence of maps.
    pub fn tensor_all(field: FieldSpec, maps: &[&LinMap]) -> Result<LinMap> {
        let mut acc = LinMap::identity(field, &[]);
        for m in maps {
            acc = acc.tensor(m)?;
        }
        Ok(acc)
    }

    /// The leg permutation map on legs of the given dimensions.
    pub fn permutation(field: FieldSpec, dims: &[usize], perm: &LegPermutation) -> Result<LinMap> {
        if perm.len() != dims.len() {
            return Err(Error::InvalidPermutation);
        }
        let cod: Vec<usize> = perm.images().iter().map(|&p| dims[p]).collect();
        let mut m = LinMap::zero(field, dims, &cod);
        let one = field.one();
        for j in 0..total_dim(dims) {
            let inp = multi_index(dims, j);
            let out: Vec<usize> = perm.images().iter().map(|&p| inp[p]).collect();
            m.cols.insert(j, BTreeMap::from([(flat_index(&cod, &out), one.clone())]));
        }
        Ok(m)
    }

    /// Leg permutation map on `n` copies of a space of dimension `dim`.
    pub fn permute(field: FieldSpec, dim: usize, n: usize, images: &[usize]) -> Result<LinMap> {
        let perm = LegPermutation::new(images.to_vec())?;
        if perm.len() != n {
            return Err(Error::InvalidPermutation);
        }
        LinMap::permutation(field, &vec![dim; n], &perm)
    }

    /// Reinterprets the leg structure without touching flat indices.
    pub fn reshape(&self, dom: &[usize], cod: &[usize]) -> Result<LinMap> {
        if total_dim(dom) != total_dim(&self.dom) || total_dim(cod) != total_dim(&self.cod) {
            return Err(Error::InvalidShape(format!(
                "cannot reshape {:?}->{:?} into {:?}->{:?}",
                self.dom, self.cod, dom, cod
            )));
        }
        Ok(LinMap { field: self.field, dom: dom.to_vec(), cod: cod.to_vec(), cols: self.cols.clone() })
    }

    pub fn transpose(&self) -> LinMap {
        let mut cols: BTreeMap<usize, SparseVec> = BTreeMap::new();
        for (j, col) in &self.cols {
            for (i, c) in col {
                cols.entry(*i).or_default().insert(*j, c.clone());
            }
        }
        LinMap { field: self.field, dom: self.cod.clone(), cod: self.dom.clone(), cols }
    }

    pub fn scale(&self, c: &Scalar) -> LinMap {
        let cols = self
            .cols
            .iter()
            .map(|(j, col)| (*j, col.iter().map(|(i, x)| (*i, x * c)).collect::<SparseVec>()));
        LinMap::from_columns(self.field, &self.dom, &self.cod, cols)
    }

    pub fn plus(&self, g: &LinMap) -> Result<LinMap> {
        self.same_shape(g)?;
        let mut out = self.clone();
        for (j, col) in &g.cols {
            for (i, c) in col {
                out.add_flat(*i, *j, c.clone());
            }
        }
        Ok(out)
    }

    pub fn minus(&self, g: &LinMap) -> Result<LinMap> {
        self.plus(&g.scale(&-self.field.one()))
    }

    fn same_shape(&self, g: &LinMap) -> Result<()> {
        if self.field != g.field {
            return Err(Error::FieldMismatch);
        }
        if self.dom != g.dom || self.cod != g.cod {
            return Err(Error::ArityMismatch {
                expected: format!("{:?}->{:?}", self.dom, self.cod),
                found: format!("{:?}->{:?}", g.dom, g.cod),
            });
        }
        Ok(())
    }

    /// Exact equality of all coefficients.
    pub fn equals(&self, g: &LinMap) -> Result<bool> {
        self.same_shape(g)?;
        Ok(self.cols == g.cols)
    }

    /// Coefficients where `self` and `g` disagree, as report failures.
    pub fn differences(&self, g: &LinMap, axiom: &str, limit: usize) -> Vec<Failure> {
        let mut out = Vec::new();
        let keys: alloc::collections::BTreeSet<usize> =
            self.cols.keys().chain(g.cols.keys()).copied().collect();
        'outer: for j in keys {
            let empty = SparseVec::new();
            let a = self.cols.get(&j).unwrap_or(&empty);
            let b = g.cols.get(&j).unwrap_or(&empty);
            if a == b {
                continue;
            }
            let rows: alloc::collections::BTreeSet<usize> = a.keys().chain(b.keys()).copied().collect();
            for i in rows {
                let (x, y) = (self.get_flat(i, j), g.get_flat(i, j));
                if x != y {
                    out.push(Failure {
                        axiom: String::from(axiom),
                        input: multi_index(&self.dom, j),
                        output: multi_index(&self.cod, i),
                        lhs: x.encode(),
                        rhs: y.encode(),
                    });
                    if out.len() >= limit {
                        break 'outer;
                    }
                }
            }
        }
        out
    }

    /// True when no stored coefficient is zero and every index is in range.
    pub fn is_normalized(&self) -> bool {
        let (nd, nc) = (total_dim(&self.dom), total_dim(&self.cod));
        self.cols.iter().all(|(j, col)| {
            *j < nd
                && !col.is_empty()
                && col.iter().all(|(i, c)| *i < nc && !c.is_zero() && c.field() == self.field)
        })
    }

    /// Exact inverse by sparse Gauss–Jordan elimination, if it exists.
    pub fn inverse(&self) -> Option<LinMap> {
        let n = total_dim(&self.dom);
        if n != total_dim(&self.cod) {
            return None;
        }
        // Rows of the square matrix: row i holds (column j -> coefficient).
        let mut rows: Vec<SparseVec> = vec![SparseVec::new(); n];
        for (j, col) in &self.cols {
            for (i, c) in col {
                rows[*i].insert(*j, c.clone());
            }
        }
        // Augmented identity on the right.
        let mut aug: Vec<SparseVec> = (0..n).map(|i| BTreeMap::from([(i, self.field.one())])).collect();
        let mut pivot_row_of_col: Vec<Option<usize>> = vec![None; n];
        let mut used = vec![false; n];
        for c in 0..n {
            let pick = (0..n)
                .filter(|&r| !used[r] && rows[r].contains_key(&c))
                .min_by_key(|&r| rows[r].len() + aug[r].len())?;
            used[pick] = true;
            pivot_row_of_col[c] = Some(pick);
            let inv = rows[pick][&c].inv().ok()?;
            for x in rows[pick].values_mut() {
                *x *= &inv;
            }
            for x in aug[pick].values_mut() {
                *x *= &inv;
            }
            let (prow, paug) = (rows[pick].clone(), aug[pick].clone());
            for r in 0..n {
                if r == pick {
                    continue;
                }
                if let Some(f) = rows[r].get(&c).cloned() {
                    let neg = -&f;
                    sparse_add_scaled(&mut rows[r], &prow, &neg);
                    sparse_add_scaled(&mut aug[r], &paug, &neg);
                }
            }
        }
        // Row `pivot_row_of_col[c]` now reads e_c = Σ aug * original rows, so the
        // inverse maps output basis k to input coordinate c.
        let mut inv = LinMap::zero(self.field, &self.cod, &self.dom);
        for (c, r) in pivot_row_of_col.iter().enumerate() {
            let r = r.expect("pivot for every column");
            for (k, x) in &aug[r] {
                inv.add_flat(c, *k, x.clone());
            }
        }
        Some(inv)
    }

    pub fn is_invertible(&self) -> bool {
        self.inverse().is_some()
    }
}

/// Records `lhs == rhs` under `axiom`, keeping witnesses of any difference.
/// A shape error on either side counts as a failure.
pub fn audit_maps(report: &mut AxiomReport, axiom: &str, lhs: Result<LinMap>, rhs: Result<LinMap>) {
    report.record(axiom);
    match (lhs, rhs) {
        (Ok(l), Ok(r)) => match l.equals(&r) {
            Ok(true) => {}
            Ok(false) => {
                for f in l.differences(&r, axiom, crate::report::WITNESS_LIMIT) {
                    report.fail(f);
                }
            }
            Err(e) => report.fail_simple(axiom, format!("{e}")),
        },
        (Err(e), _) | (_, Err(e)) => report.fail_simple(axiom, format!("{e}")),
    }
}
