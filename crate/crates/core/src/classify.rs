//! Structural classification and modularity decisions.
//!
//! Decisions about modularity are made as if the ground field were
//! quadratically closed of characteristic not two: whenever a witness needs a
//! square root, it is adjoined. Over a prime field the same procedures run
//! literally and may fall back to weaker witnesses when a root is missing.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::{AlgElement, EvolutionAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::scalar::{adjoin_sqrt, FieldDescriptor, Scalar};

pub fn is_regular(e: &EvolutionAlgebra) -> bool {
    linalg::rank(e.matrix(), e.dim()) == e.dim()
}

/// Layer decomposition of a nilpotent algebra.
///
/// `layers[0]` holds the indices with zero square; `layers[j]` the indices
/// whose squares lie in the span of the earlier layers but not of the layers
/// before `j − 1`. `order` lists the basis from the last layer to the first,
/// ascending within each layer, so the reordered structure matrix is strictly
/// upper triangular with its first `k` rows nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangularForm {
    pub order: Vec<usize>,
    pub layers: Vec<Vec<usize>>,
    pub k: usize,
}

impl TriangularForm {
    /// The structure matrix in the basis `order`.
    pub fn matrix(&self, e: &EvolutionAlgebra) -> Matrix {
        e.permuted(&self.order).expect("order is a permutation").matrix().clone()
    }

    /// Indices of the basis vectors with nonzero square.
    pub fn nonzero_rows(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.layers[1..].iter().flatten().copied().collect();
        v.sort_unstable();
        v
    }
}

/// Strips annihilator layers; `None` when the algebra is not nilpotent.
pub fn nilpotent_triangularize(e: &EvolutionAlgebra) -> Option<TriangularForm> {
    let n = e.dim();
    let support = |i: usize| (0..n).filter(move |&j| !e.entry(i, j).is_zero());
    let mut covered = vec![false; n];
    let mut layers: Vec<Vec<usize>> = Vec::new();
    let mut count = 0;
    while count < n {
        let layer: Vec<usize> = (0..n)
            .filter(|&i| !covered[i] && support(i).all(|j| covered[j]))
            .collect();
        if layer.is_empty() {
            return None;
        }
        for &i in &layer {
            covered[i] = true;
        }
        count += layer.len();
        layers.push(layer);
    }
    if layers.is_empty() {
        layers.push(Vec::new());
    }
    let order = layers.iter().rev().flatten().copied().collect();
    let k = n - layers[0].len();
    Some(TriangularForm { order, layers, k })
}

/// `Σ √cᵢ eᵢ`, adjoining square roots as needed.
fn sqrt_combination(e: &EvolutionAlgebra, c: &[Scalar]) -> Result<AlgElement> {
    let mut ctx = e.field().clone();
    let mut coords = Vec::with_capacity(c.len());
    for x in c {
        if x.is_zero() {
            coords.push(x.clone());
        } else {
            let (next, r) = adjoin_sqrt(&ctx, x)?;
            ctx = next;
            coords.push(r);
        }
    }
    let coords = coords.iter().map(|x| x.promote(&ctx)).collect::<Result<Vec<_>>>()?;
    e.element(coords)
}

fn expand(n: usize, field: &FieldDescriptor, idx: &[usize], vals: &[Scalar]) -> Vec<Scalar> {
    let mut v = vec![field.zero(); n];
    for (&i, x) in idx.iter().zip(vals) {
        v[i] = x.clone();
    }
    v
}

/// Checks that the structure matrix has rank `k`. Otherwise a relation
/// `Σ αᵢ eᵢ² = 0` yields the absolute nilpotent `Σ √αᵢ eᵢ`.
pub fn rank_condition(e: &EvolutionAlgebra, t: &TriangularForm) -> Result<(bool, Option<AlgElement>)> {
    let n = e.dim();
    if linalg::rank(e.matrix(), n) == t.k {
        return Ok((true, None));
    }
    let rows_idx = t.nonzero_rows();
    let rows: Matrix = rows_idx.iter().map(|&i| e.matrix()[i].clone()).collect();
    let rel = linalg::left_nullspace(e.field(), &rows, n);
    let alpha = linalg::normalize_leading(&rel[0]);
    let c = expand(n, e.field(), &rows_idx, &alpha);
    Ok((false, Some(sqrt_combination(e, &c)?)))
}

/// Looks for `u` with `|supp u| ≥ 2`, support off the annihilator and
/// `u² ∈ ann(E)`. Writing `cᵢ = uᵢ²`, such `u` exists over a quadratically
/// closed field iff the relations among the non-annihilator rows, restricted
/// to non-annihilator columns, contain a vector of support at least two.
/// Relations among the full rows are preferred, giving `u² = 0`.
pub fn prop33_check(e: &EvolutionAlgebra, t: &TriangularForm) -> Result<(bool, Option<AlgElement>)> {
    let n = e.dim();
    let field = e.field();
    let rows_idx = t.nonzero_rows();
    if rows_idx.len() < 2 {
        return Ok((true, None));
    }
    let full: Matrix = rows_idx.iter().map(|&i| e.matrix()[i].clone()).collect();
    let cols: Vec<usize> = rows_idx.clone();
    let restricted: Matrix = full
        .iter()
        .map(|r| cols.iter().map(|&j| r[j].clone()).collect())
        .collect();
    let support = |v: &[Scalar]| v.iter().filter(|x| !x.is_zero()).count();
    let pick = |basis: Matrix| -> Option<Vec<Scalar>> {
        let (echelon, _) = linalg::rref(&basis, rows_idx.len());
        if let Some(v) = echelon.iter().find(|v| support(v) >= 2) {
            return Some(v.clone());
        }
        if echelon.len() >= 2 {
            return Some(echelon[0].iter().zip(&echelon[1]).map(|(a, b)| a + b).collect());
        }
        None
    };
    let chosen = pick(linalg::left_nullspace(field, &full, n))
        .or_else(|| pick(linalg::left_nullspace(field, &restricted, cols.len())));
    match chosen {
        None => Ok((true, None)),
        Some(c) => {
            let c = expand(n, field, &rows_idx, &c);
            Ok((false, Some(sqrt_combination(e, &c)?)))
        }
    }
}

/// Change of basis exhibiting `E ≅ Ẽ ⊕ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompletenessWitness {
    /// `beta[i][c]` is the coefficient of the `(k + c)`-th basis vector (in
    /// triangular order) added to the `i`-th.
    pub beta: Matrix,
    /// Rows are the new basis vectors in the original coordinates.
    pub basis: Matrix,
    /// `(dim Ẽ, dim of the zero part)`.
    pub blocks: (usize, usize),
    /// Structure matrix in the new basis.
    pub matrix: Matrix,
}

/// Solves for the `β` coefficients and verifies the block form.
pub fn complete_decomposition(e: &EvolutionAlgebra, t: &TriangularForm) -> Result<CompletenessWitness> {
    let n = e.dim();
    let field = e.field().clone();
    let k = t.k;
    if t.layers.iter().skip(1).any(|l| l.len() != 1) {
        return Err(Error::PreconditionFailed("a non-annihilator layer is not a singleton".into()));
    }
    let a = t.matrix(e);
    let mut beta = linalg::zeros(&field, k, n - k);
    let mut basis_perm: Matrix = Vec::with_capacity(n);
    if k == 0 {
        basis_perm = linalg::identity(&field, n);
    } else {
        // Σ_{j=2..k} a_ij β_jc = a_ic for i = 1..k−1 and each column c > k.
        if k >= 2 {
            let coeff: Matrix = (0..k - 1).map(|i| a[i][1..k].to_vec()).collect();
            for c in k..n {
                let rhs: Vec<Scalar> = (0..k - 1).map(|i| a[i][c].clone()).collect();
                let sol = linalg::solve(&field, &coeff, &rhs, k - 1).ok_or_else(|| {
                    Error::InternalInconsistency("coefficient system is unsolvable".into())
                })?;
                for (j, x) in sol.into_iter().enumerate() {
                    beta[j + 1][c - k] = x;
                }
            }
        }
        for i in 0..k {
            let mut v = linalg::unit_vector(&field, n, i);
            for c in k..n {
                v[c] = beta[i][c - k].clone();
            }
            basis_perm.push(v);
        }
        let w = e.permuted(&t.order)?.product_vec(&basis_perm[k - 1], &basis_perm[k - 1]);
        let mut span = vec![w.clone()];
        basis_perm.push(w);
        for c in k..n {
            if basis_perm.len() == n {
                break;
            }
            let u = linalg::unit_vector(&field, n, c);
            let mut trial = span.clone();
            trial.push(u.clone());
            if linalg::rank(&trial, n) == trial.len() {
                span = trial;
                basis_perm.push(u);
            }
        }
    }
    let blocks = if k == 0 { (0, n) } else { (k + 1, n - k - 1) };
    let mut basis = linalg::zeros(&field, n, n);
    for (r, row) in basis_perm.iter().enumerate() {
        for (q, x) in row.iter().enumerate() {
            basis[r][t.order[q]] = x.clone();
        }
    }
    let transformed = e.change_natural_basis(&basis)?;
    let m = transformed.matrix().clone();
    let d = blocks.0;
    for (i, row) in m.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            let ok = if i + 1 < d && j == i + 1 { !x.is_zero() } else if i < d && j > i && j < d { true } else { x.is_zero() };
            if !ok {
                return Err(Error::InternalInconsistency(format!(
                    "entry ({}, {}) breaks the block form",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    Ok(CompletenessWitness { beta, basis, blocks, matrix: m })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Decision {
    Modular,
    NotModular,
    OutOfScope,
}

impl fmt::Display for Decision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Decision::Modular => "modular",
            Decision::NotModular => "not modular",
            Decision::OutOfScope => "out of scope",
        })
    }
}

/// One step of the argument behind a verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Reason {
    NotNilpotent,
    Nilpotent { k: usize, layers: usize },
    SingletonLayers,
    FatLayer { layer: usize, size: usize },
    RankDeficient { rank: usize, k: usize },
    AbsoluteNilpotent,
    SquareInAnnihilator,
    NotRegularSupersolvable,
    DimensionAtMostTwo,
    TripleMatches,
    TripleDiffers,
    LeadingSubalgebraNotModular,
    QuotientNotModular,
    MissingRoot,
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Reason::NotNilpotent => f.write_str("annihilator stripping stalls: not nilpotent"),
            Reason::Nilpotent { k, layers } => {
                write!(f, "nilpotent: {} nonzero rows in {} layers", k, layers)
            }
            Reason::SingletonLayers => f.write_str(
                "every non-annihilator layer is a single index: maximal nilpotency index plus a zero part, hence complete and modular",
            ),
            Reason::FatLayer { layer, size } => write!(
                f,
                "layer {} has {} indices: no maximal-nilpotency-index decomposition, so not modular",
                layer, size
            ),
            Reason::RankDeficient { rank, k } => write!(
                f,
                "rank {} < {}: a relation among the nonzero squares gives an absolute nilpotent outside the annihilator",
                rank, k
            ),
            Reason::AbsoluteNilpotent => f.write_str("absolute nilpotent element with support of size at least two"),
            Reason::SquareInAnnihilator => f.write_str(
                "element with support of size at least two off the annihilator whose square lies in the annihilator",
            ),
            Reason::NotRegularSupersolvable => f.write_str("not a supersolvable regular algebra"),
            Reason::DimensionAtMostTwo => f.write_str("dimension at most two: every such algebra is modular"),
            Reason::TripleMatches => f.write_str("canonical triple is (0, 1/4, 1/4): modular"),
            Reason::TripleDiffers => f.write_str("canonical triple differs from (0, 1/4, 1/4): not modular"),
            Reason::LeadingSubalgebraNotModular => {
                f.write_str("dimension above three: span{e1,e2,e3} is a non-modular subalgebra")
            }
            Reason::QuotientNotModular => {
                f.write_str("dimension above three: the quotient by span{e1} has a non-modular subalgebra")
            }
            Reason::MissingRoot => f.write_str("a required square root is missing from the prime field"),
        }
    }
}

/// Supporting data for a verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// An element violating the modularity criteria.
    Obstruction(AlgElement),
    Completeness(CompletenessWitness),
    FatLayer { layer: usize, indices: Vec<usize> },
    /// The canonical triple of a three-dimensional (sub)quotient and the
    /// three necessary clauses evaluated on it.
    Triple { source: TripleSource, triple: SupersolvableTriple, clauses: (bool, bool, bool) },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TripleSource {
    Whole,
    LeadingSubalgebra,
    QuotientByFirst,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularityVerdict {
    pub decision: Decision,
    pub reasons: Vec<Reason>,
    pub witness: Option<Witness>,
}

impl ModularityVerdict {
    fn out_of_scope(reason: Reason) -> Self {
        ModularityVerdict { decision: Decision::OutOfScope, reasons: vec![reason], witness: None }
    }
}

/// Nilpotent case: modular iff every non-annihilator layer is a singleton.
pub fn decide_modular_nilpotent(e: &EvolutionAlgebra) -> Result<ModularityVerdict> {
    let Some(t) = nilpotent_triangularize(e) else {
        return Ok(ModularityVerdict::out_of_scope(Reason::NotNilpotent));
    };
    let mut reasons = vec![Reason::Nilpotent { k: t.k, layers: t.layers.len() }];
    let fat = t.layers.iter().enumerate().skip(1).find(|(_, l)| l.len() > 1);
    let Some((layer, indices)) = fat else {
        reasons.push(Reason::SingletonLayers);
        let w = complete_decomposition(e, &t)?;
        return Ok(ModularityVerdict {
            decision: Decision::Modular,
            reasons,
            witness: Some(Witness::Completeness(w)),
        });
    };
    let fallback = Witness::FatLayer { layer, indices: indices.clone() };
    let missing_root = |err: &Error| matches!(err, Error::UnsupportedExtension(_));
    let rank = linalg::rank(e.matrix(), e.dim());
    let mut witness = None;
    match rank_condition(e, &t) {
        Ok((false, Some(u))) => {
            reasons.push(Reason::RankDeficient { rank, k: t.k });
            witness = Some(Witness::Obstruction(u));
        }
        Ok(_) => {}
        Err(err) if missing_root(&err) => reasons.push(Reason::MissingRoot),
        Err(err) => return Err(err),
    }
    if witness.is_none() {
        match prop33_check(e, &t) {
            Ok((false, Some(u))) => {
                let zero = e.square(&u)?.is_zero();
                reasons.push(if zero { Reason::AbsoluteNilpotent } else { Reason::SquareInAnnihilator });
                witness = Some(Witness::Obstruction(u));
            }
            Ok(_) => {}
            Err(err) if missing_root(&err) => reasons.push(Reason::MissingRoot),
            Err(err) => return Err(err),
        }
    }
    reasons.push(Reason::FatLayer { layer, size: indices.len() });
    Ok(ModularityVerdict {
        decision: Decision::NotModular,
        reasons,
        witness: Some(witness.unwrap_or(fallback)),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CompleteFormTag {
    /// `{e₁² = e₁}`.
    IdempotentLine,
    /// `Ẽ ⊕ 0`, with `Ẽ` of maximal nilpotency index.
    NilpotentMaxPlusZero,
    /// `{e₁² = e₁} ⊕ 0`.
    IdempotentPlusZero,
    /// `{e₁² = e₁} ⊕ Ẽ ⊕ 0`.
    IdempotentPlusNilpotentPlusZero,
}

impl fmt::Display for CompleteFormTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CompleteFormTag::IdempotentLine => "idempotent line",
            CompleteFormTag::NilpotentMaxPlusZero => "maximal-index nilpotent ⊕ zero",
            CompleteFormTag::IdempotentPlusZero => "idempotent ⊕ zero",
            CompleteFormTag::IdempotentPlusNilpotentPlusZero => "idempotent ⊕ maximal-index nilpotent ⊕ zero",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompleteForm {
    pub tag: CompleteFormTag,
    /// The isolated index `i` with `eᵢ² = aᵢᵢeᵢ`, and `aᵢᵢ`; `eᵢ/aᵢᵢ` is idempotent.
    pub idempotent: Option<(usize, Scalar)>,
}

/// Recognizes the complete algebras: at most one isolated line `eᵢ² = aᵢᵢeᵢ`
/// split off a nilpotent part that is modular.
pub fn match_complete_canonical_form(e: &EvolutionAlgebra) -> Result<Option<CompleteForm>> {
    let n = e.dim();
    let isolated: Vec<usize> = (0..n)
        .filter(|&i| {
            !e.entry(i, i).is_zero()
                && (0..n).all(|j| j == i || (e.entry(i, j).is_zero() && e.entry(j, i).is_zero()))
        })
        .collect();
    if isolated.len() > 1 {
        return Ok(None);
    }
    let idempotent = isolated.first().map(|&i| (i, e.entry(i, i).clone()));
    let rest: Vec<usize> = (0..n).filter(|i| !isolated.contains(i)).collect();
    if rest.is_empty() {
        return Ok(if idempotent.is_some() && n == 1 {
            Some(CompleteForm { tag: CompleteFormTag::IdempotentLine, idempotent })
        } else {
            None
        });
    }
    let m: Matrix = rest
        .iter()
        .map(|&i| rest.iter().map(|&j| e.entry(i, j).clone()).collect())
        .collect();
    let r = EvolutionAlgebra::new(e.field().clone(), m)?;
    let zero = r.zero_rows().len() == r.dim();
    if decide_modular_nilpotent(&r)?.decision != Decision::Modular {
        return Ok(None);
    }
    let tag = match (idempotent.is_some(), zero) {
        (false, _) => CompleteFormTag::NilpotentMaxPlusZero,
        (true, true) => CompleteFormTag::IdempotentPlusZero,
        (true, false) => CompleteFormTag::IdempotentPlusNilpotentPlusZero,
    };
    Ok(Some(CompleteForm { tag, idempotent }))
}

/// A lower unitriangular presentation of a regular algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupersolvableForm {
    /// New basis vector `q` is a multiple of old `order[q]`.
    pub order: Vec<usize>,
    /// `scaling[q] = 1 / a_{order[q], order[q]}`.
    pub scaling: Vec<Scalar>,
    /// Rows are the new basis vectors in the original coordinates.
    pub basis: Matrix,
    pub matrix: Matrix,
}

impl SupersolvableForm {
    /// `(λ, μ, ρ)` read off a three-dimensional canonical matrix.
    pub fn triple(&self) -> Option<SupersolvableTriple> {
        (self.matrix.len() == 3).then(|| SupersolvableTriple::from_matrix(&self.matrix, 0))
    }
}

/// Greedy triangular ordering followed by diagonal scaling. `Ok(None)` when
/// no ordering makes the matrix lower triangular.
pub fn supersolvable_canonicalize(e: &EvolutionAlgebra) -> Result<Option<SupersolvableForm>> {
    if !is_regular(e) {
        return Err(Error::NotRegular);
    }
    let n = e.dim();
    let mut chosen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let next = (0..n).find(|&i| {
            !chosen[i] && (0..n).all(|j| j == i || chosen[j] || e.entry(i, j).is_zero())
        });
        let Some(i) = next else {
            return Ok(None);
        };
        chosen[i] = true;
        order.push(i);
    }
    let field = e.field();
    let scaling: Vec<Scalar> = order.iter().map(|&i| e.entry(i, i).inv()).collect::<Result<_>>()?;
    let mut basis = linalg::zeros(field, n, n);
    for (q, &i) in order.iter().enumerate() {
        basis[q][i] = scaling[q].clone();
    }
    // fᵢ² = Σⱼ aᵢⱼ aⱼⱼ / aᵢᵢ² fⱼ
    let matrix = (0..n)
        .map(|p| {
            let i = order[p];
            (0..n)
                .map(|q| {
                    let j = order[q];
                    e.entry(i, j) * e.entry(j, j) * &scaling[p] * &scaling[p]
                })
                .collect()
        })
        .collect();
    Ok(Some(SupersolvableForm { order, scaling, basis, matrix }))
}

/// Parameters of the canonical matrix with rows `(1,0,0)`, `(λ,1,0)`, `(μ,ρ,1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupersolvableTriple {
    pub lambda: Scalar,
    pub mu: Scalar,
    pub rho: Scalar,
}

impl SupersolvableTriple {
    /// Reads the triple from the 3×3 block starting at `offset`.
    pub fn from_matrix(m: &[Vec<Scalar>], offset: usize) -> Self {
        let o = offset;
        SupersolvableTriple {
            lambda: m[o + 1][o].clone(),
            mu: m[o + 2][o].clone(),
            rho: m[o + 2][o + 1].clone(),
        }
    }

    fn is_modular_triple(&self, field: &FieldDescriptor) -> Result<bool> {
        let quarter = field.from_rational(&num_rational::BigRational::new(1.into(), 4.into()))?;
        Ok(self.lambda.is_zero() && self.mu == quarter && self.rho == quarter)
    }
}

impl fmt::Display for SupersolvableTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.lambda, self.mu, self.rho)
    }
}

/// `(ρ ≠ 0, ρ²λ − ρμ + μ² = 0, λ = 0)`.
pub fn prop45_conditions(t: &SupersolvableTriple) -> (bool, bool, bool) {
    let (l, m, r) = (&t.lambda, &t.mu, &t.rho);
    let poly = r * r * l - r * m + m * m;
    (!r.is_zero(), poly.is_zero(), l.is_zero())
}

/// Supersolvable regular case: modular iff `n ≤ 2` or the canonical triple
/// is `(0, 1/4, 1/4)` in dimension three; never modular above three.
pub fn decide_modular_supersolvable_regular(e: &EvolutionAlgebra) -> Result<ModularityVerdict> {
    if !is_regular(e) {
        return Ok(ModularityVerdict::out_of_scope(Reason::NotRegularSupersolvable));
    }
    let Some(form) = supersolvable_canonicalize(e)? else {
        return Ok(ModularityVerdict::out_of_scope(Reason::NotRegularSupersolvable));
    };
    let n = e.dim();
    let field = e.field();
    if n <= 2 {
        return Ok(ModularityVerdict {
            decision: Decision::Modular,
            reasons: vec![Reason::DimensionAtMostTwo],
            witness: None,
        });
    }
    let triple_witness = |source, triple: SupersolvableTriple| {
        let clauses = prop45_conditions(&triple);
        Witness::Triple { source, triple, clauses }
    };
    let lead = SupersolvableTriple::from_matrix(&form.matrix, 0);
    if n == 3 {
        let ok = lead.is_modular_triple(field)?;
        return Ok(ModularityVerdict {
            decision: if ok { Decision::Modular } else { Decision::NotModular },
            reasons: vec![if ok { Reason::TripleMatches } else { Reason::TripleDiffers }],
            witness: Some(triple_witness(TripleSource::Whole, lead)),
        });
    }
    let (reason, witness) = if !lead.is_modular_triple(field)? {
        (Reason::LeadingSubalgebraNotModular, triple_witness(TripleSource::LeadingSubalgebra, lead))
    } else {
        // a₂₁ = 0 and a₃₁ = a₃₂ = 1/4 put 1/4 in position (2,1) of the quotient.
        let quo = SupersolvableTriple::from_matrix(&form.matrix, 1);
        (Reason::QuotientNotModular, triple_witness(TripleSource::QuotientByFirst, quo))
    };
    Ok(ModularityVerdict { decision: Decision::NotModular, reasons: vec![reason], witness: Some(witness) })
}

/// Dispatches to the nilpotent or supersolvable-regular decision.
pub fn decide_modular(e: &EvolutionAlgebra) -> Result<ModularityVerdict> {
    if nilpotent_triangularize(e).is_some() {
        return decide_modular_nilpotent(e);
    }
    if is_regular(e) {
        return decide_modular_supersolvable_regular(e);
    }
    Ok(ModularityVerdict::out_of_scope(Reason::NotRegularSupersolvable))
}

/// Summary used by reports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub regular: bool,
    pub determinant: Scalar,
    pub nilpotent: Option<TriangularForm>,
    pub supersolvable: Option<SupersolvableForm>,
    pub verdict: ModularityVerdict,
    pub complete_form: Option<CompleteForm>,
}

pub fn classify(e: &EvolutionAlgebra) -> Result<Classification> {
    let regular = is_regular(e);
    let supersolvable = if regular { supersolvable_canonicalize(e)? } else { None };
    Ok(Classification {
        regular,
        determinant: linalg::determinant(e.field(), e.matrix()),
        nilpotent: nilpotent_triangularize(e),
        supersolvable,
        verdict: decide_modular(e)?,
        complete_form: match_complete_canonical_form(e)?,
    })
}

/// Formats a triangular form's layers as `Λ2={1}, Λ1={2}, Λ0={3}`.
pub fn format_layers(t: &TriangularForm) -> String {
    let mut parts = Vec::new();
    for (j, layer) in t.layers.iter().enumerate().rev() {
        let idx: Vec<String> = layer.iter().map(|i| format!("{}", i + 1)).collect();
        parts.push(format!("L{}={{{}}}", j, idx.join(",")));
    }
    parts.join(", ")
}
