//! Evolution algebras, their elements and subspaces.
//!
//! An evolution algebra of dimension `n` has a natural basis `e₁,…,eₙ` with
//! `eᵢeⱼ = 0` for `i ≠ j`; row `i` of the structure matrix holds the
//! coordinates of `eᵢ²`. Indices are 0-based in the API and 1-based in labels.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::scalar::{FieldDescriptor, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvolutionAlgebra {
    field: FieldDescriptor,
    matrix: Matrix,
    labels: Vec<String>,
}

/// An element, as coordinates in the natural basis.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct AlgElement {
    coords: Vec<Scalar>,
}

impl AlgElement {
    pub fn new(coords: Vec<Scalar>) -> Self {
        AlgElement { coords }
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        linalg::is_zero_vector(&self.coords)
    }

    /// Indices of the nonzero coordinates.
    pub fn support(&self) -> Vec<usize> {
        self.coords
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, _)| i)
            .collect()
    }
}

/// A linear subspace of `Kⁿ`, stored as its reduced row echelon basis.
///
/// Two subspaces are equal exactly when their echelon bases coincide.
#[derive(Clone, Debug)]
pub struct Subspace {
    n: usize,
    field: FieldDescriptor,
    rows: Matrix,
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.rows == other.rows
    }
}

impl Eq for Subspace {}

impl PartialOrd for Subspace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subspace {
    /// By ambient dimension, then dimension, then echelon rows.
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then(self.rows.len().cmp(&other.rows.len()))
            .then_with(|| self.rows.cmp(&other.rows))
    }
}

impl Subspace {
    /// Span of `vectors`; each must have length `n`.
    pub fn span(field: &FieldDescriptor, n: usize, vectors: &[Vec<Scalar>]) -> Result<Subspace> {
        let mut f = field.clone();
        for v in vectors {
            if v.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: v.len() });
            }
            for x in v {
                f = f.common(&x.field())?;
            }
        }
        let (rows, _) = linalg::rref(vectors, n);
        Ok(Subspace { n, field: f, rows })
    }

    pub fn zero(field: &FieldDescriptor, n: usize) -> Subspace {
        Subspace { n, field: field.clone(), rows: Vec::new() }
    }

    pub fn whole(field: &FieldDescriptor, n: usize) -> Subspace {
        Subspace { n, field: field.clone(), rows: linalg::identity(field, n) }
    }

    /// Span of the standard basis vectors at `indices`.
    pub fn coordinate(field: &FieldDescriptor, n: usize, indices: &[usize]) -> Result<Subspace> {
        let vs: Vec<_> = indices
            .iter()
            .map(|&i| {
                if i < n {
                    Ok(linalg::unit_vector(field, n, i))
                } else {
                    Err(Error::BadIndices(format!("index {} out of range", i + 1)))
                }
            })
            .collect::<Result<_>>()?;
        Subspace::span(field, n, &vs)
    }

    /// Wraps rows that are already in reduced row echelon form.
    pub(crate) fn from_rref(field: &FieldDescriptor, n: usize, rows: Matrix) -> Subspace {
        debug_assert_eq!(linalg::rref(&rows, n).0, rows);
        Subspace { n, field: field.clone(), rows }
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn field(&self) -> &FieldDescriptor {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    fn check(&self, other: &Subspace) -> Result<FieldDescriptor> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: other.n });
        }
        self.field.common(&other.field)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        let f = self.check(other)?;
        let mut stacked = self.rows.clone();
        stacked.extend(other.rows.iter().cloned());
        Subspace::span(&f, self.n, &stacked)
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        let f = self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(&f, self.n));
        }
        let mut stacked = self.rows.clone();
        stacked.extend(other.rows.iter().cloned());
        // a·A + b·B = 0  ⟹  a·A ∈ A ∩ B
        let rel = linalg::left_nullspace(&f, &stacked, self.n);
        let k = self.rows.len();
        let vs: Vec<_> = rel
            .iter()
            .map(|y| linalg::vec_mat(&f, &y[..k], &self.rows, self.n))
            .collect();
        Subspace::span(&f, self.n, &vs)
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        self.check(other)?;
        Ok(other.rows.iter().all(|v| self.contains_vector(v)))
    }

    pub fn contains_vector(&self, v: &[Scalar]) -> bool {
        if v.len() != self.n {
            return false;
        }
        // Reduce against the echelon basis; v lies in the span iff nothing remains.
        let mut r = v.to_vec();
        for row in &self.rows {
            let p = row.iter().position(|x| !x.is_zero()).expect("echelon rows are nonzero");
            if r[p].is_zero() {
                continue;
            }
            let f = r[p].clone();
            for (x, y) in r.iter_mut().zip(row) {
                *x = &*x - &(&f * y);
            }
        }
        linalg::is_zero_vector(&r)
    }

    /// Pivot column of each echelon row.
    pub fn pivots(&self) -> Vec<usize> {
        self.rows
            .iter()
            .map(|r| r.iter().position(|x| !x.is_zero()).expect("echelon rows are nonzero"))
            .collect()
    }

    /// Reduces a rational subspace modulo `p`.
    pub fn reduce_mod(&self, p: u32) -> Result<Subspace> {
        let f = FieldDescriptor::prime(p as u64)?;
        let rows: Matrix = self
            .rows
            .iter()
            .map(|r| r.iter().map(|x| x.reduce_mod(p)).collect::<Result<_>>())
            .collect::<Result<_>>()?;
        Subspace::span(&f, self.n, &rows)
    }
}

/// An index set `Λ` whose basis vectors span an ideal.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct BasicIdeal {
    indices: Vec<usize>,
}

impl BasicIdeal {
    /// Sorted 0-based indices.
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }
}

impl fmt::Display for BasicIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.indices.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        f.write_str("}")
    }
}

fn default_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("e{}", i)).collect()
}

fn bar_label(label: &str) -> String {
    let mut chars = label.chars();
    match chars.next() {
        Some(c) => {
            let mut s = String::new();
            s.push(c);
            s.push('\u{0304}');
            s.extend(chars);
            s
        }
        None => String::new(),
    }
}

impl EvolutionAlgebra {
    /// Builds an algebra from its structure matrix. Entries must lie in `field`.
    pub fn new(field: FieldDescriptor, matrix: Matrix) -> Result<Self> {
        let n = matrix.len();
        let mut rows = Vec::with_capacity(n);
        for row in matrix {
            if row.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: row.len() });
            }
            rows.push(row.iter().map(|x| x.promote(&field)).collect::<Result<Vec<_>>>()?);
        }
        Ok(EvolutionAlgebra { field, matrix: rows, labels: default_labels(n) })
    }

    pub fn zero_algebra(field: FieldDescriptor, n: usize) -> Self {
        let matrix = linalg::zeros(&field, n, n);
        EvolutionAlgebra { field, matrix, labels: default_labels(n) }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: labels.len() });
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    pub fn field(&self) -> &FieldDescriptor {
        &self.field
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn entry(&self, i: usize, j: usize) -> &Scalar {
        &self.matrix[i][j]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// The same algebra with entries viewed in a larger field.
    pub fn promote(&self, field: &FieldDescriptor) -> Result<Self> {
        let e = EvolutionAlgebra::new(field.clone(), self.matrix.clone())?;
        Ok(EvolutionAlgebra { labels: self.labels.clone(), ..e })
    }

    /// Reduces a rational algebra modulo `p`; fails if a denominator vanishes.
    pub fn reduce_mod(&self, p: u32) -> Result<Self> {
        let field = FieldDescriptor::prime(p as u64)?;
        let matrix = self
            .matrix
            .iter()
            .map(|r| r.iter().map(|x| x.reduce_mod(p)).collect::<Result<_>>())
            .collect::<Result<_>>()?;
        Ok(EvolutionAlgebra { field, matrix, labels: self.labels.clone() })
    }

    /// Block-diagonal direct sum; labels are renumbered.
    pub fn direct_sum(&self, other: &EvolutionAlgebra) -> Result<Self> {
        let field = self.field.common(&other.field)?;
        let (n, m) = (self.dim(), other.dim());
        let mut matrix = linalg::zeros(&field, n + m, n + m);
        for i in 0..n {
            matrix[i][..n].clone_from_slice(&self.matrix[i]);
        }
        for i in 0..m {
            matrix[n + i][n..].clone_from_slice(&other.matrix[i]);
        }
        EvolutionAlgebra::new(field, matrix)
    }

    /// Reorders the basis: new basis vector `i` is old `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        let n = self.dim();
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || core::mem::replace(&mut seen[p], true)) {
            return Err(Error::BadIndices("not a permutation".into()));
        }
        let matrix = perm
            .iter()
            .map(|&pi| perm.iter().map(|&pj| self.matrix[pi][pj].clone()).collect())
            .collect();
        let labels = perm.iter().map(|&p| self.labels[p].clone()).collect();
        Ok(EvolutionAlgebra { field: self.field.clone(), matrix, labels })
    }

    pub fn element(&self, coords: Vec<Scalar>) -> Result<AlgElement> {
        if coords.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: coords.len() });
        }
        Ok(AlgElement { coords })
    }

    pub fn basis_element(&self, i: usize) -> AlgElement {
        AlgElement { coords: linalg::unit_vector(&self.field, self.dim(), i) }
    }

    /// `u·v = Σᵢ uᵢvᵢ eᵢ²`.
    pub fn product(&self, u: &AlgElement, v: &AlgElement) -> Result<AlgElement> {
        for w in [u, v] {
            if w.coords.len() != self.dim() {
                return Err(Error::DimensionMismatch { expected: self.dim(), found: w.coords.len() });
            }
        }
        Ok(AlgElement { coords: self.product_vec(&u.coords, &v.coords) })
    }

    pub fn square(&self, u: &AlgElement) -> Result<AlgElement> {
        self.product(u, u)
    }

    pub(crate) fn product_vec(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let weights: Vec<Scalar> = u.iter().zip(v).map(|(a, b)| a * b).collect();
        linalg::vec_mat(&self.field, &weights, &self.matrix, self.dim())
    }

    pub fn span(&self, vectors: &[Vec<Scalar>]) -> Result<Subspace> {
        Subspace::span(&self.field, self.dim(), vectors)
    }

    pub fn span_elements(&self, elements: &[AlgElement]) -> Result<Subspace> {
        let vs: Vec<_> = elements.iter().map(|e| e.coords.clone()).collect();
        self.span(&vs)
    }

    pub fn zero_subspace(&self) -> Subspace {
        Subspace::zero(&self.field, self.dim())
    }

    pub fn whole(&self) -> Subspace {
        Subspace::whole(&self.field, self.dim())
    }

    /// Indices of the basis vectors with zero square.
    pub fn zero_rows(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| linalg::is_zero_vector(&self.matrix[i])).collect()
    }

    /// Span of the basis vectors with zero square.
    pub fn annihilator(&self) -> Subspace {
        Subspace::coordinate(&self.field, self.dim(), &self.zero_rows()).expect("indices in range")
    }

    fn check_subspace(&self, s: &Subspace) -> Result<()> {
        if s.n != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: s.n });
        }
        Ok(())
    }

    /// Closure under the product, checked on pairs of echelon basis rows.
    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        if s.n != self.dim() {
            return false;
        }
        let rows = &s.rows;
        for i in 0..rows.len() {
            for j in i..rows.len() {
                if !s.contains_vector(&self.product_vec(&rows[i], &rows[j])) {
                    return false;
                }
            }
        }
        true
    }

    /// Least subalgebra containing every space in `spaces`.
    pub fn generated_subalgebra(&self, spaces: &[&Subspace]) -> Result<Subspace> {
        let mut s = self.zero_subspace();
        for sp in spaces {
            self.check_subspace(sp)?;
            s = s.sum(sp)?;
        }
        loop {
            let rows = s.rows.clone();
            let mut extra = Vec::new();
            for i in 0..rows.len() {
                for j in i..rows.len() {
                    let p = self.product_vec(&rows[i], &rows[j]);
                    if !s.contains_vector(&p) {
                        extra.push(p);
                    }
                }
            }
            if extra.is_empty() {
                return Ok(s);
            }
            extra.extend(rows);
            s = Subspace::span(&s.field, self.dim(), &extra)?;
        }
    }

    /// `S·E ⊆ S`: since `b·eⱼ = bⱼ eⱼ²`, every `eⱼ²` with `j` in the support
    /// of some basis row of `S` must lie in `S`.
    pub fn is_ideal(&self, s: &Subspace) -> bool {
        if s.n != self.dim() {
            return false;
        }
        (0..self.dim())
            .filter(|&j| s.rows.iter().any(|r| !r[j].is_zero()))
            .all(|j| s.contains_vector(&self.matrix[j]))
    }

    /// `Λ` when `s = span{eᵢ : i ∈ Λ}` is an ideal.
    pub fn as_basic_ideal(&self, s: &Subspace) -> Option<BasicIdeal> {
        if s.n != self.dim() {
            return None;
        }
        let mut indices = Vec::new();
        for r in &s.rows {
            let sup: Vec<_> = (0..self.dim()).filter(|&j| !r[j].is_zero()).collect();
            if sup.len() != 1 {
                return None;
            }
            indices.push(sup[0]);
        }
        if !self.is_ideal(s) {
            return None;
        }
        Some(BasicIdeal { indices })
    }

    /// Verifies that `span{eᵢ : i ∈ indices}` is an ideal.
    pub fn basic_ideal(&self, indices: &[usize]) -> Result<BasicIdeal> {
        let s = Subspace::coordinate(&self.field, self.dim(), indices)?;
        self.as_basic_ideal(&s).ok_or(Error::NotABasicIdeal)
    }

    /// Quotient by a basic ideal: delete the rows and columns in `Λ`.
    pub fn quotient(&self, ideal: &BasicIdeal) -> Result<Self> {
        let s = Subspace::coordinate(&self.field, self.dim(), &ideal.indices)
            .map_err(|_| Error::NotABasicIdeal)?;
        if self.as_basic_ideal(&s).as_ref() != Some(ideal) {
            return Err(Error::NotABasicIdeal);
        }
        let keep: Vec<usize> = (0..self.dim()).filter(|i| !ideal.indices.contains(i)).collect();
        let matrix = keep
            .iter()
            .map(|&i| keep.iter().map(|&j| self.matrix[i][j].clone()).collect())
            .collect();
        let labels = keep.iter().map(|&i| bar_label(&self.labels[i])).collect();
        Ok(EvolutionAlgebra { field: self.field.clone(), matrix, labels })
    }

    /// Re-expresses the algebra in the basis given by the rows of `p`, which
    /// must be natural (pairwise products zero) and invertible.
    pub fn change_natural_basis(&self, p: &[Vec<Scalar>]) -> Result<Self> {
        let n = self.dim();
        if p.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: p.len() });
        }
        let mut field = self.field.clone();
        for row in p {
            if row.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: row.len() });
            }
            for x in row {
                field = field.common(&x.field())?;
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if !linalg::is_zero_vector(&self.product_vec(&p[i], &p[j])) {
                    return Err(Error::NotNatural(i + 1, j + 1));
                }
            }
        }
        let p_inv = linalg::inverse(&field, p)?;
        let squares: Matrix = p.iter().map(|f| self.product_vec(f, f)).collect();
        let matrix = linalg::mat_mul(&field, &squares, &p_inv, n);
        EvolutionAlgebra::new(field, matrix)
    }

    /// Whether `⟨U,V⟩ = U + V` for every `V` in `others`; on failure the
    /// first violating `V` is returned.
    pub fn is_quasi_ideal<'a, I>(&self, u: &Subspace, others: I) -> Result<(bool, Option<Subspace>)>
    where
        I: IntoIterator<Item = &'a Subspace>,
    {
        for v in others {
            let joined = self.generated_subalgebra(&[u, v])?;
            if joined != u.sum(v)? {
                return Ok((false, Some(v.clone())));
            }
        }
        Ok((true, None))
    }

    /// Renders `u` with the algebra's labels, e.g. `e1+2e3`.
    pub fn format_element(&self, coords: &[Scalar]) -> String {
        let mut out = String::new();
        for (x, label) in coords.iter().zip(&self.labels) {
            if x.is_zero() {
                continue;
            }
            let coef = if x.is_one() {
                String::new()
            } else if (-x).is_one() {
                "-".to_string()
            } else {
                x.to_string()
            };
            if !out.is_empty() && !coef.starts_with('-') {
                out.push('+');
            }
            out.push_str(&coef);
            out.push_str(label);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// Renders a subspace as `span{…}` over its echelon basis; `0` for the zero space.
    pub fn format_subspace(&self, s: &Subspace) -> String {
        if s.is_zero() {
            return "0".to_string();
        }
        let parts: Vec<_> = s.rows.iter().map(|r| self.format_element(r)).collect();
        format!("span{{{}}}", parts.join(", "))
    }
}
