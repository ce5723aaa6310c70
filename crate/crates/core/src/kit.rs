//! Small combinators for writing Sweedler-notation identities as map chains.

use crate::error::Result;
use crate::scalars::FieldSpec;
use crate::tensor::{LegPermutation, LinMap};

/// Composes right to left: `chain(&[f, g, h]) = f ∘ g ∘ h`.
pub(crate) fn chain(maps: &[&LinMap]) -> Result<LinMap> {
    let (last, rest) = maps.split_last().expect("non-empty chain");
    let mut acc = (*last).clone();
    for m in rest.iter().rev() {
        acc = m.compose(&acc)?;
    }
    Ok(acc)
}

pub(crate) fn tensor(field: FieldSpec, maps: &[&LinMap]) -> Result<LinMap> {
    LinMap::tensor_all(field, maps)
}

/// Leg permutation on legs of mixed dimension.
pub(crate) fn shuffle(field: FieldSpec, dims: &[usize], images: &[usize]) -> Result<LinMap> {
    LinMap::permutation(field, dims, &LegPermutation::new(images.to_vec())?)
}

/// Plumbing for maps on tensor powers of one space.
#[derive(Clone, Copy)]
pub(crate) struct Legs {
    pub field: FieldSpec,
    pub n: usize,
}

impl Legs {
    pub fn new(field: FieldSpec, n: usize) -> Self {
        Legs { field, n }
    }

    pub fn id(&self) -> LinMap {
        LinMap::identity(self.field, &[self.n])
    }

    pub fn ids(&self, k: usize) -> LinMap {
        LinMap::identity(self.field, &alloc::vec![self.n; k])
    }

    pub fn perm(&self, images: &[usize]) -> Result<LinMap> {
        LinMap::permute(self.field, self.n, images.len(), images)
    }

    pub fn t(&self, maps: &[&LinMap]) -> Result<LinMap> {
        tensor(self.field, maps)
    }

    /// Places `f` (acting on `width` legs) at leg offset `at` inside `total` legs.
    pub fn at(&self, f: &LinMap, at: usize, width: usize, total: usize) -> Result<LinMap> {
        let left = self.ids(at);
        let right = self.ids(total - at - width);
        self.t(&[&left, f, &right])
    }

    /// Iterated comultiplication into `k` legs: `Δ^(k-1)`.
    pub fn iterated_comul(&self, comul: &LinMap, k: usize) -> Result<LinMap> {
        let mut acc = self.ids(1);
        for legs in 1..k {
            let step = self.t(&[comul, &self.ids(legs - 1)])?;
            acc = step.compose(&acc)?;
        }
        Ok(acc)
    }

    /// Iterated product of `k` legs, bracketed to the left.
    pub fn iterated_mul(&self, mul: &LinMap, k: usize) -> Result<LinMap> {
        if k == 0 {
            return Err(crate::error::Error::ArityTooLarge(0));
        }
        let mut acc = self.ids(1);
        for legs in 1..k {
            let step = self.t(&[mul, &self.ids(legs - 1)])?;
            acc = acc.compose(&step)?;
        }
        Ok(acc)
    }
}
