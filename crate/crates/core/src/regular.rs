//! Exact subalgebra solvers.
//!
//! One-dimensional subalgebras of a regular algebra are spanned by
//! idempotents `x`, which satisfy `x² = (Mᵀ)⁻¹x` componentwise. For a lower
//! unitriangular `M` the system is triangular and is solved coordinate by
//! coordinate from the last one, each step a monic quadratic.
//!
//! Two-dimensional subalgebras of a three-dimensional algebra are found as
//! hyperplanes `ker f`: such a plane is a subalgebra iff the diagonal form
//! `Σ uᵢvᵢ f(eᵢ²)` vanishes on it.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{AlgElement, EvolutionAlgebra, Subspace};
use crate::classify::{is_regular, supersolvable_canonicalize};
use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::poly::Poly;
use crate::scalar::{ExtensionPolicy, FieldDescriptor, Scalar};

/// `(Mᵀ)⁻¹`: the system reads `xᵢ² = Σⱼ Rᵢⱼ xⱼ`.
pub fn onedim_system(e: &EvolutionAlgebra) -> Result<Matrix> {
    let n = e.dim();
    let t = linalg::transpose(e.field(), e.matrix(), n);
    linalg::inverse(e.field(), &t).map_err(|_| Error::NotRegular)
}

/// A one-dimensional subalgebra.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct OneDimSolution {
    /// Spanning vector with first nonzero coordinate 1.
    pub generator: AlgElement,
    /// The idempotent on the line, if any (always present for regular algebras).
    pub idempotent: Option<AlgElement>,
}

fn is_lower_unitriangular(e: &EvolutionAlgebra) -> bool {
    let n = e.dim();
    (0..n).all(|i| e.entry(i, i).is_one() && (i + 1..n).all(|j| e.entry(i, j).is_zero()))
}

/// All idempotent lines of a lower unitriangular algebra.
pub fn onedim_solve_triangular(e: &EvolutionAlgebra) -> Result<(FieldDescriptor, Vec<OneDimSolution>)> {
    onedim_solve_triangular_with(e, ExtensionPolicy::AdjoinRoots)
}

pub fn onedim_solve_triangular_with(
    e: &EvolutionAlgebra,
    policy: ExtensionPolicy,
) -> Result<(FieldDescriptor, Vec<OneDimSolution>)> {
    if !is_lower_unitriangular(e) {
        return Err(Error::NotTriangular);
    }
    let n = e.dim();
    let r = onedim_system(e)?;
    let mut ctx = e.field().clone();
    let mut found: Vec<Vec<Scalar>> = Vec::new();
    let mut partial = vec![e.field().zero(); n];
    solve_branch(&r, n, &mut partial, &mut ctx, policy, &mut found)?;
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for x in found {
        if linalg::is_zero_vector(&x) {
            continue;
        }
        let x: Vec<Scalar> = x.iter().map(|v| v.promote(&ctx)).collect::<Result<_>>()?;
        let g = linalg::normalize_leading(&x);
        if seen.insert(g.clone()) {
            out.push(OneDimSolution { generator: AlgElement::new(g), idempotent: Some(AlgElement::new(x)) });
        }
    }
    if n < 64 && out.len() as u64 > (1u64 << n) - 1 {
        return Err(Error::InternalInconsistency(format!("{} lines exceed the branch bound", out.len())));
    }
    Ok((ctx, out))
}

/// Fixes coordinate `i − 1` given the coordinates after it: `x² − x − c = 0`.
fn solve_branch(
    r: &Matrix,
    i: usize,
    partial: &mut Vec<Scalar>,
    ctx: &mut FieldDescriptor,
    policy: ExtensionPolicy,
    found: &mut Vec<Vec<Scalar>>,
) -> Result<()> {
    if i == 0 {
        found.push(partial.clone());
        return Ok(());
    }
    let k = i - 1;
    let mut c = ctx.zero();
    for j in k + 1..partial.len() {
        c = c + &r[k][j] * &partial[j];
    }
    let quad = Poly(vec![-c, ctx.from_int(-1), ctx.one()]);
    let (next, roots) = quad.roots(ctx, policy)?;
    *ctx = next;
    for root in roots {
        partial[k] = root;
        solve_branch(r, k, partial, ctx, policy, found)?;
    }
    partial[k] = ctx.zero();
    Ok(())
}

/// Idempotent lines of a supersolvable regular algebra in its own basis.
pub fn onedim_solve(e: &EvolutionAlgebra, policy: ExtensionPolicy) -> Result<(FieldDescriptor, Vec<OneDimSolution>)> {
    let form = supersolvable_canonicalize(e)?
        .ok_or_else(|| Error::OutOfScope("no triangular presentation; use a finite field".into()))?;
    let canon = EvolutionAlgebra::new(e.field().clone(), form.matrix.clone())?;
    let (ctx, sols) = onedim_solve_triangular_with(&canon, policy)?;
    let n = e.dim();
    let mut out: Vec<OneDimSolution> = sols
        .into_iter()
        .map(|s| {
            let x = linalg::vec_mat(&ctx, s.idempotent.as_ref().expect("regular").coords(), &form.basis, n);
            OneDimSolution {
                generator: AlgElement::new(linalg::normalize_leading(&x)),
                idempotent: Some(AlgElement::new(x)),
            }
        })
        .collect();
    out.sort();
    Ok((ctx, out))
}

/// Whether `span{eᵢ, v}` with `v ∈ span{e_p, e_q}` can be a subalgebra of a
/// three-dimensional regular algebra (closure semantics). Indices are 0-based.
pub fn cor7_criterion(e: &EvolutionAlgebra, i: usize, p: usize, q: usize) -> Result<bool> {
    if e.dim() != 3 {
        return Err(Error::DimensionMismatch { expected: 3, found: e.dim() });
    }
    if i >= 3 || p >= 3 || q >= 3 || i == p || i == q || p == q {
        return Err(Error::BadIndices(format!("({}, {}, {})", i + 1, p + 1, q + 1)));
    }
    let a = |x: usize, y: usize| e.entry(x, y);
    let (aip, aiq) = (a(i, p), a(i, q));
    let lhs = aip * aip * aiq * a(p, p) + aiq * aiq * aiq * a(q, p);
    let rhs = aip * aip * aip * a(p, q) + aip * aiq * aiq * a(q, q);
    Ok(lhs == rhs)
}

/// A one-parameter family of subalgebra planes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PlaneFamily {
    /// `span{fixed, base + α·direction}` for every `α` not in `excluded`.
    Pencil { fixed: Vec<Scalar>, base: Vec<Scalar>, direction: Vec<Scalar>, excluded: Vec<Scalar> },
    /// Every plane (zero products).
    AllPlanes,
}

impl PlaneFamily {
    /// The member at parameter `alpha`, or `None` if excluded.
    pub fn member(&self, field: &FieldDescriptor, alpha: &Scalar) -> Option<Subspace> {
        match self {
            PlaneFamily::Pencil { fixed, base, direction, excluded } => {
                if excluded.contains(alpha) {
                    return None;
                }
                let v: Vec<Scalar> = base.iter().zip(direction).map(|(b, d)| b + &(alpha * d)).collect();
                Subspace::span(field, fixed.len(), &[fixed.clone(), v]).ok()
            }
            PlaneFamily::AllPlanes => None,
        }
    }

    pub fn contains(&self, s: &Subspace) -> bool {
        match self {
            PlaneFamily::AllPlanes => s.dim() == 2,
            PlaneFamily::Pencil { fixed, base, direction, excluded } => {
                if s.dim() != 2 || !s.contains_vector(fixed) {
                    return false;
                }
                match pencil_parameter(s, base, direction) {
                    Some(Some(alpha)) => !excluded.contains(&alpha),
                    _ => false,
                }
            }
        }
    }

    /// `span{e1+αe2, e3}, α ∉ {0}` style description.
    pub fn describe(&self, e: &EvolutionAlgebra) -> String {
        match self {
            PlaneFamily::AllPlanes => "every plane".into(),
            PlaneFamily::Pencil { fixed, base, direction, excluded } => {
                let b = e.format_element(base);
                let d = e.format_element(direction);
                let d = if d.starts_with('-') { format!("-α{}", &d[1..]) } else { format!("+α{}", d) };
                let mut s = format!("span{{{}{}, {}}}", b, d, e.format_element(fixed));
                if !excluded.is_empty() {
                    let ex: Vec<String> = excluded.iter().map(|x| format!("{}", x)).collect();
                    s.push_str(&format!(", α ∉ {{{}}}", ex.join(", ")));
                }
                s
            }
        }
    }
}

/// For a plane through `fixed`, the `α` with `plane = span{fixed, base + α·direction}`;
/// `Some(None)` for the limit member `span{fixed, direction}`.
fn pencil_parameter(s: &Subspace, base: &[Scalar], direction: &[Scalar]) -> Option<Option<Scalar>> {
    let f = s.field().clone();
    let plane_pair = Subspace::span(&f, base.len(), &[base.to_vec(), direction.to_vec()]).ok()?;
    let meet = s.intersect(&plane_pair).ok()?;
    if meet.dim() != 1 {
        return None;
    }
    let v = &meet.rows()[0];
    // v = x·base + y·direction with base, direction unit vectors
    let bi = base.iter().position(|c| !c.is_zero())?;
    let di = direction.iter().position(|c| !c.is_zero())?;
    let (x, y) = (&v[bi] / &base[bi], &v[di] / &direction[di]);
    if x.is_zero() {
        Some(None)
    } else {
        Some(Some(&y / &x))
    }
}

/// Planes of a three-dimensional algebra: finitely many, plus families.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PlaneEnumeration {
    pub planes: Vec<Subspace>,
    pub families: Vec<PlaneFamily>,
}

enum Branch {
    Roots(Vec<Scalar>),
    All,
}

/// Solutions of `lin(x) = 0 ∧ cub(x) = 0`, or every `x` if both vanish identically.
fn linear_and_cubic(
    lin: Poly,
    cub: Poly,
    ctx: &mut FieldDescriptor,
    policy: ExtensionPolicy,
) -> Result<Branch> {
    if lin.is_zero() {
        if cub.is_zero() {
            return Ok(Branch::All);
        }
        let (next, roots) = cub.roots(ctx, policy)?;
        *ctx = next;
        return Ok(Branch::Roots(roots));
    }
    let (_, roots) = lin.roots(ctx, policy)?;
    Ok(Branch::Roots(roots.into_iter().filter(|r| cub.eval(r).is_zero()).collect()))
}

struct Pencil {
    fixed: Vec<Scalar>,
    base: Vec<Scalar>,
    direction: Vec<Scalar>,
    excluded: Option<Scalar>,
    limit_member: bool,
}

/// Planes `ker(f0 + τ f1)`: all planes through `ker f0 ∩ ker f1` except `ker f1`.
fn pencil_from_covectors(field: &FieldDescriptor, f0: &[Scalar], f1: &[Scalar]) -> Pencil {
    let l = linalg::nullspace(field, &[f0.to_vec(), f1.to_vec()], 3);
    let fixed = Subspace::span(field, 3, &l).expect("dimensions agree").rows()[0].clone();
    let pivot = fixed.iter().position(|x| !x.is_zero()).expect("nonzero");
    let others: Vec<usize> = (0..3).filter(|&c| c != pivot).collect();
    let base = linalg::unit_vector(field, 3, others[0]);
    let direction = linalg::unit_vector(field, 3, others[1]);
    let f1c0 = linalg::dot(field, f1, &base);
    let f1c1 = linalg::dot(field, f1, &direction);
    if f1c1.is_zero() {
        Pencil { fixed, base, direction, excluded: None, limit_member: false }
    } else {
        Pencil { fixed, base, direction, excluded: Some(-(&f1c0 / &f1c1)), limit_member: true }
    }
}

fn plane_of(field: &FieldDescriptor, f: &[Scalar]) -> Subspace {
    let k = linalg::nullspace(field, &[f.to_vec()], 3);
    Subspace::span(field, 3, &k).expect("dimensions agree")
}

/// Every two-dimensional subalgebra of a three-dimensional algebra.
pub fn planes_enumerate_dim3(e: &EvolutionAlgebra) -> Result<(FieldDescriptor, PlaneEnumeration)> {
    planes_enumerate_dim3_with(e, ExtensionPolicy::AdjoinRoots)
}

pub fn planes_enumerate_dim3_with(
    e: &EvolutionAlgebra,
    policy: ExtensionPolicy,
) -> Result<(FieldDescriptor, PlaneEnumeration)> {
    if e.dim() != 3 {
        return Err(Error::DimensionMismatch { expected: 3, found: e.dim() });
    }
    let base_field = e.field().clone();
    let a = |i: usize, j: usize| e.entry(i, j).clone();
    let z = || base_field.zero();
    let o = || base_field.one();
    let mut ctx = base_field.clone();
    let mut finite: Vec<Vec<Scalar>> = Vec::new();
    let mut pencils: Vec<(Vec<Scalar>, Vec<Scalar>)> = Vec::new();
    let mut all_planes = false;

    // f = (0, 0, 1): span{e1, e2}
    if a(0, 2).is_zero() && a(1, 2).is_zero() {
        finite.push(vec![z(), z(), o()]);
    }

    // f = (0, 1, t), f = (1, 0, t), f = (1, s, 0): a linear and a cubic condition each.
    let cases = [
        ([a(0, 1), a(0, 2)], [a(2, 1), a(2, 2), a(1, 1), a(1, 2)], [z(), o(), z()], [z(), z(), o()]),
        ([a(1, 0), a(1, 2)], [a(2, 0), a(2, 2), a(0, 0), a(0, 2)], [o(), z(), z()], [z(), z(), o()]),
        ([a(2, 0), a(2, 1)], [a(1, 0), a(1, 1), a(0, 0), a(0, 1)], [o(), z(), z()], [z(), o(), z()]),
    ];
    for (lin, cub, f0, f1) in cases {
        match linear_and_cubic(Poly(lin.to_vec()), Poly(cub.to_vec()), &mut ctx, policy)? {
            Branch::All => pencils.push((f0.to_vec(), f1.to_vec())),
            Branch::Roots(rs) => {
                for r in rs {
                    finite.push(f0.iter().zip(&f1).map(|(x, y)| x + &(&r * y)).collect());
                }
            }
        }
    }

    // f = (1, s, t) with f(eᵢ²) = 0 for every i: M·fᵀ = 0.
    let kernel = linalg::nullspace(&base_field, e.matrix(), 3);
    if let Some(pi) = kernel.iter().position(|v| !v[0].is_zero()) {
        let p = linalg::normalize_leading(&kernel[pi]);
        let dirs: Vec<Vec<Scalar>> = kernel
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != pi)
            .map(|(_, v)| v.iter().zip(&p).map(|(x, y)| x - &(&v[0] * y)).collect())
            .collect();
        match dirs.len() {
            0 => finite.push(p),
            1 => pencils.push((p, dirs[0].clone())),
            _ => all_planes = true,
        }
    }

    if all_planes {
        return Ok((ctx, PlaneEnumeration { planes: Vec::new(), families: vec![PlaneFamily::AllPlanes] }));
    }

    let mut planes: BTreeSet<Subspace> = finite.iter().map(|f| plane_of(&ctx, f)).collect();
    // Merge pencils through the same line.
    let mut merged: Vec<Pencil> = Vec::new();
    for (f0, f1) in &pencils {
        let p = pencil_from_covectors(&ctx, f0, f1);
        if let Some(m) = merged.iter_mut().find(|m| m.fixed == p.fixed) {
            if m.excluded != p.excluded {
                m.excluded = None;
            }
            m.limit_member |= p.limit_member;
        } else {
            merged.push(p);
        }
    }
    let mut families = Vec::new();
    for p in &merged {
        if p.limit_member {
            planes.insert(Subspace::span(&ctx, 3, &[p.fixed.clone(), p.direction.clone()])?);
        }
    }
    for p in merged {
        let mut excluded: BTreeSet<Scalar> = p.excluded.into_iter().collect();
        for s in &planes {
            if s.contains_vector(&p.fixed) {
                if let Some(Some(alpha)) = pencil_parameter(s, &p.base, &p.direction) {
                    excluded.insert(alpha);
                }
            }
        }
        families.push(PlaneFamily::Pencil {
            fixed: p.fixed,
            base: p.base,
            direction: p.direction,
            excluded: excluded.into_iter().collect(),
        });
    }
    let planes: Vec<Subspace> = planes.into_iter().collect();
    for s in &planes {
        if !e.is_subalgebra(s) {
            return Err(Error::InternalInconsistency(format!("plane {} is not closed", e.format_subspace(s))));
        }
    }
    Ok((ctx, PlaneEnumeration { planes, families }))
}

/// Scans every line of `F_pⁿ` for `w² ∈ span{w}`.
pub fn onedim_bruteforce_ff(e: &EvolutionAlgebra) -> Result<Vec<OneDimSolution>> {
    let FieldDescriptor::PrimeField(p) = *e.field() else {
        return Err(Error::InvalidField("brute force needs a prime field".into()));
    };
    let n = e.dim();
    let total = (p as u64).checked_pow(n as u32).unwrap_or(u64::MAX);
    if n > 5 || total > 1_000_000 {
        return Err(Error::TooLarge(format!("{}^{} vectors", p, n)));
    }
    let mut out = Vec::new();
    for lead in 0..n {
        let free = n - lead - 1;
        for code in 0..(p as u64).pow(free as u32) {
            let mut w = vec![Scalar::fp(0, p); n];
            w[lead] = Scalar::fp(1, p);
            let mut c = code;
            for x in w.iter_mut().skip(lead + 1) {
                *x = Scalar::fp((c % p as u64) as i64, p);
                c /= p as u64;
            }
            let sq = e.product_vec(&w, &w);
            let t = &sq[lead];
            let scaled: Vec<Scalar> = w.iter().map(|x| t * x).collect();
            if scaled != sq {
                continue;
            }
            let idempotent = (!t.is_zero()).then(|| {
                let inv = t.inv().expect("nonzero");
                AlgElement::new(w.iter().map(|x| x * &inv).collect())
            });
            out.push(OneDimSolution { generator: AlgElement::new(w), idempotent });
        }
    }
    out.sort();
    Ok(out)
}

/// Lines of a regular algebra, solved exactly when a triangular presentation exists.
pub fn regular_lines(e: &EvolutionAlgebra, policy: ExtensionPolicy) -> Result<(FieldDescriptor, Vec<OneDimSolution>)> {
    if !is_regular(e) {
        return Err(Error::NotRegular);
    }
    onedim_solve(e, policy)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::ratio(n, d)
    }

    fn reg(l: Scalar, m: Scalar, r: Scalar) -> EvolutionAlgebra {
        let (z, o) = (|| q(0, 1), || q(1, 1));
        EvolutionAlgebra::new(FieldDescriptor::Rationals, vec![vec![o(), z(), z()], vec![l, o(), z()], vec![m, r, o()]])
            .unwrap()
    }

    fn ints(rows: &[&[i64]]) -> EvolutionAlgebra {
        let m = rows.iter().map(|r| r.iter().map(|&x| Scalar::int(x)).collect()).collect();
        EvolutionAlgebra::new(FieldDescriptor::Rationals, m).unwrap()
    }

    fn vecs(rows: &[&[(i64, i64)]]) -> Vec<Vec<Scalar>> {
        rows.iter().map(|r| r.iter().map(|&(n, d)| q(n, d)).collect()).collect()
    }

    #[test]
    fn system_matches_parameterization() {
        let (l, m, r) = (q(2, 1), q(3, 1), q(5, 1));
        let sys = onedim_system(&reg(l.clone(), m.clone(), r.clone())).unwrap();
        // x² = x − λy + (λρ − μ)z, y² = y − ρz, z² = z
        let expected = vec![
            vec![q(1, 1), -&l, &l * &r - &m],
            vec![q(0, 1), q(1, 1), -&r],
            vec![q(0, 1), q(0, 1), q(1, 1)],
        ];
        assert_eq!(sys, expected);
        assert_eq!(onedim_system(&ints(&[&[1, 0], &[0, 1]])).unwrap(), linalg::identity(&FieldDescriptor::Rationals, 2));
        assert_eq!(onedim_system(&ints(&[&[0, 1], &[0, 0]])), Err(Error::NotRegular));
    }

    #[test]
    fn quarter_regular_lines() {
        let e = reg(q(0, 1), q(1, 4), q(1, 4));
        let (ctx, sols) = onedim_solve_triangular(&e).unwrap();
        assert_eq!(ctx, FieldDescriptor::Rationals);
        let mut gens: Vec<_> = sols.iter().map(|s| s.generator.coords().to_vec()).collect();
        gens.sort();
        let mut expected = vecs(&[
            &[(1, 1), (0, 1), (0, 1)],
            &[(0, 1), (1, 1), (0, 1)],
            &[(1, 1), (1, 1), (0, 1)],
            &[(1, 1), (1, 1), (2, 1)],
        ]);
        expected.sort();
        assert_eq!(gens, expected);
        for s in &sols {
            let x = s.idempotent.as_ref().unwrap();
            assert_eq!(&e.square(x).unwrap(), x);
        }
    }

    #[test]
    fn diagonal_lines() {
        let e = ints(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let (_, sols) = onedim_solve_triangular(&e).unwrap();
        assert_eq!(sols.len(), 7);
    }

    #[test]
    fn lines_needing_extension() {
        let e = reg(q(0, 1), q(0, 1), q(1, 1));
        let (ctx, sols) = onedim_solve_triangular(&e).unwrap();
        assert_eq!(ctx.depth(), 1);
        for s in &sols {
            let x = s.idempotent.as_ref().unwrap();
            assert_eq!(&e.square(x).unwrap(), x);
        }
        assert!(sols.iter().any(|s| s.idempotent.as_ref().unwrap().coords()[1].as_rational().is_none()));
        let (_, base) = onedim_solve_triangular_with(&e, ExtensionPolicy::BaseFieldOnly).unwrap();
        assert!(base.len() < sols.len());
        assert!(onedim_solve_triangular(&ints(&[&[1, 1], &[0, 1]])).is_err());
    }

    #[test]
    fn plane_criterion() {
        let e = reg(q(0, 1), q(1, 4), q(1, 4));
        assert!(cor7_criterion(&e, 2, 0, 1).unwrap());
        assert!(cor7_criterion(&reg(q(1, 1), q(0, 1), q(0, 1)), 2, 0, 1).unwrap());
        assert!(matches!(cor7_criterion(&e, 0, 0, 1), Err(Error::BadIndices(_))));
    }

    #[test]
    fn quarter_regular_planes() {
        let e = reg(q(0, 1), q(1, 4), q(1, 4));
        let (_, pe) = planes_enumerate_dim3(&e).unwrap();
        assert!(pe.families.is_empty());
        let expected: BTreeSet<Subspace> = [
            vecs(&[&[(1, 1), (0, 1), (0, 1)], &[(0, 1), (1, 1), (0, 1)]]),
            vecs(&[&[(1, 1), (0, 1), (0, 1)], &[(0, 1), (1, 1), (2, 1)]]),
            vecs(&[&[(0, 1), (1, 1), (0, 1)], &[(1, 1), (0, 1), (2, 1)]]),
            vecs(&[&[(0, 1), (0, 1), (1, 1)], &[(1, 1), (1, 1), (0, 1)]]),
        ]
        .iter()
        .map(|v| e.span(v).unwrap())
        .collect();
        assert_eq!(pe.planes.into_iter().collect::<BTreeSet<_>>(), expected);
    }

    #[test]
    fn shared_square_planes() {
        let e = ints(&[&[0, 0, 1], &[0, 0, 1], &[0, 0, 0]]);
        let (_, pe) = planes_enumerate_dim3(&e).unwrap();
        assert_eq!(pe.planes.len(), 2);
        assert_eq!(pe.families.len(), 1);
        let fam = &pe.families[0];
        assert_eq!(fam.describe(&e), "span{e1+αe2, e3}, α ∉ {0}");
        let member = fam.member(e.field(), &q(3, 1)).unwrap();
        assert!(e.is_subalgebra(&member));
        assert!(fam.contains(&member));
        assert!(!fam.contains(&pe.planes[0]) && !fam.contains(&pe.planes[1]));
    }

    #[test]
    fn diagonal_planes() {
        let e = ints(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let (_, pe) = planes_enumerate_dim3(&e).unwrap();
        assert!(pe.families.is_empty());
        // pairs of orthogonal idempotents with 0/1 coordinates
        assert_eq!(pe.planes.len(), 6);
    }

    #[test]
    fn zero_algebra_planes() {
        let e = EvolutionAlgebra::zero_algebra(FieldDescriptor::Rationals, 3);
        let (_, pe) = planes_enumerate_dim3(&e).unwrap();
        assert_eq!(pe.families, vec![PlaneFamily::AllPlanes]);
    }

    #[test]
    fn brute_force() {
        let f3 = FieldDescriptor::PrimeField(3);
        let diag = EvolutionAlgebra::new(f3.clone(), linalg::identity(&f3, 3)).unwrap();
        assert_eq!(onedim_bruteforce_ff(&diag).unwrap().len(), 7);
        let zero = EvolutionAlgebra::zero_algebra(f3, 2);
        assert_eq!(onedim_bruteforce_ff(&zero).unwrap().len(), 4);
        let f5 = FieldDescriptor::PrimeField(5);
        let m = vec![
            vec![Scalar::fp(1, 5), Scalar::fp(0, 5), Scalar::fp(0, 5)],
            vec![Scalar::fp(0, 5), Scalar::fp(1, 5), Scalar::fp(0, 5)],
            vec![Scalar::fp(4, 5), Scalar::fp(4, 5), Scalar::fp(1, 5)],
        ];
        let e = EvolutionAlgebra::new(f5, m).unwrap();
        let gens: Vec<Vec<Scalar>> = onedim_bruteforce_ff(&e).unwrap().into_iter().map(|s| s.generator.into_coords()).collect();
        let want = [[1, 1, 2], [1, 0, 0], [0, 1, 0], [1, 1, 0]];
        for w in want {
            assert!(gens.contains(&w.iter().map(|&x| Scalar::fp(x, 5)).collect()));
        }
        let big = EvolutionAlgebra::zero_algebra(FieldDescriptor::PrimeField(7), 6);
        assert!(matches!(onedim_bruteforce_ff(&big), Err(Error::TooLarge(_))));
    }
}
