//! Subalgebra lattices: enumeration, lattice tables, modular law, pentagons.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{EvolutionAlgebra, Subspace};
use crate::classify::{is_regular, nilpotent_triangularize};
use crate::error::{Error, Result};
use crate::linalg;
use crate::regular::{onedim_solve, planes_enumerate_dim3_with, PlaneFamily};
use crate::scalar::{adjoin_sqrt, is_square, ExtensionPolicy, FieldDescriptor, Scalar};

/// Largest number of subspaces the exhaustive enumerator will visit.
pub const MAX_SUBSPACES: u128 = 100_000;

/// How the node set of a lattice was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// Every subspace of `F_pⁿ` was tested.
    FiniteFieldExhaustive,
    /// Exact solvers in dimension three.
    ExactDim3,
    /// Nodes supplied by the caller.
    Supplied,
}

/// A finite lattice of subalgebras with eagerly built order, meet and join tables.
#[derive(Clone, Debug)]
pub struct SubalgebraLattice {
    algebra: EvolutionAlgebra,
    nodes: Vec<Subspace>,
    leq: Vec<Vec<bool>>,
    meet: Vec<Vec<usize>>,
    join: Vec<Vec<usize>>,
    provenance: Provenance,
}

impl SubalgebraLattice {
    /// Builds the tables over `nodes`, which must contain every meet and join.
    /// Nodes are sorted by dimension and then by echelon form.
    pub fn from_nodes(algebra: &EvolutionAlgebra, nodes: Vec<Subspace>, provenance: Provenance) -> Result<Self> {
        let mut nodes = nodes;
        nodes.push(algebra.zero_subspace());
        nodes.push(algebra.whole());
        nodes.sort();
        nodes.dedup();
        for s in &nodes {
            if !algebra.is_subalgebra(s) {
                return Err(Error::InternalInconsistency(format!(
                    "{} is not a subalgebra",
                    algebra.format_subspace(s)
                )));
            }
        }
        let index: BTreeMap<&Subspace, usize> = nodes.iter().enumerate().map(|(i, s)| (s, i)).collect();
        let lookup = |s: &Subspace, what: &str| {
            index.get(s).copied().ok_or_else(|| {
                Error::InternalInconsistency(format!("{} {} is missing from the lattice", what, algebra.format_subspace(s)))
            })
        };
        let k = nodes.len();
        let mut leq = vec![vec![false; k]; k];
        for i in 0..k {
            for j in i..k {
                leq[i][j] = nodes[i].dim() <= nodes[j].dim() && nodes[j].contains(&nodes[i])?;
                leq[j][i] = i == j || (nodes[j].dim() <= nodes[i].dim() && nodes[i].contains(&nodes[j])?);
            }
        }
        let mut meet = vec![vec![0; k]; k];
        let mut join = vec![vec![0; k]; k];
        for i in 0..k {
            for j in i..k {
                let (m, jn) = if leq[i][j] {
                    (i, j)
                } else if leq[j][i] {
                    (j, i)
                } else {
                    let m = lookup(&nodes[i].intersect(&nodes[j])?, "meet")?;
                    let jn = lookup(&algebra.generated_subalgebra(&[&nodes[i], &nodes[j]])?, "join")?;
                    (m, jn)
                };
                meet[i][j] = m;
                meet[j][i] = m;
                join[i][j] = jn;
                join[j][i] = jn;
            }
        }
        Ok(SubalgebraLattice { algebra: algebra.clone(), nodes, leq, meet, join, provenance })
    }

    pub fn algebra(&self) -> &EvolutionAlgebra {
        &self.algebra
    }

    pub fn nodes(&self) -> &[Subspace] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a][b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a][b]
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn index_of(&self, s: &Subspace) -> Option<usize> {
        self.nodes.binary_search(s).ok()
    }

    /// Number of nodes of each dimension `0..=n`.
    pub fn rank_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.algebra.dim() + 1];
        for s in &self.nodes {
            sizes[s.dim()] += 1;
        }
        sizes
    }

    /// Covering pairs `(lower, upper)`: `lower < upper` with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let k = self.len();
        let mut out = Vec::new();
        for a in 0..k {
            for b in 0..k {
                if a == b || !self.leq[a][b] {
                    continue;
                }
                let between = (0..k).any(|c| c != a && c != b && self.leq[a][c] && self.leq[c][b]);
                if !between {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Renders node `i` with the algebra's labels.
    pub fn label(&self, i: usize) -> String {
        self.algebra.format_subspace(&self.nodes[i])
    }
}

/// `Σ_r [n choose r]_p`, or `None` on overflow.
pub fn subspace_count(n: usize, p: u32) -> Option<u128> {
    let p = p as u128;
    let mut total: u128 = 0;
    for r in 0..=n {
        // [n r]_p = Π_{i<r} (pⁿ⁻ⁱ − 1)/(pⁱ⁺¹ − 1)
        let mut num: u128 = 1;
        let mut den: u128 = 1;
        for i in 0..r {
            num = num.checked_mul(p.checked_pow((n - i) as u32)? - 1)?;
            den = den.checked_mul(p.checked_pow((i + 1) as u32)? - 1)?;
        }
        total = total.checked_add(num / den)?;
    }
    Some(total)
}

/// Every subalgebra of an algebra over `F_p`, found by testing each subspace
/// once through its reduced row echelon form.
pub fn enumerate_subalgebras_ff(e: &EvolutionAlgebra) -> Result<SubalgebraLattice> {
    let FieldDescriptor::PrimeField(p) = *e.field() else {
        return Err(Error::InvalidField(format!("exhaustive enumeration needs a prime field, got {}", e.field())));
    };
    let n = e.dim();
    match subspace_count(n, p) {
        Some(c) if c <= MAX_SUBSPACES => {}
        Some(c) => return Err(Error::TooLarge(format!("{} subspaces of F_{}^{}", c, p, n))),
        None => return Err(Error::TooLarge(format!("more than 2^128 subspaces of F_{}^{}", p, n))),
    }
    let mut nodes = Vec::new();
    for r in 1..n {
        for pivots in combinations(n, r) {
            // free slots: row k, column c > pivot k with c not a pivot
            let slots: Vec<(usize, usize)> = pivots
                .iter()
                .enumerate()
                .flat_map(|(k, &pc)| (pc + 1..n).filter(|c| !pivots.contains(c)).map(move |c| (k, c)))
                .collect();
            let count = (p as u64).pow(slots.len() as u32);
            for code in 0..count {
                let mut rows = vec![vec![Scalar::fp(0, p); n]; r];
                for (k, &pc) in pivots.iter().enumerate() {
                    rows[k][pc] = Scalar::fp(1, p);
                }
                let mut c = code;
                for &(k, col) in &slots {
                    rows[k][col] = Scalar::fp((c % p as u64) as i64, p);
                    c /= p as u64;
                }
                let s = Subspace::from_rref(e.field(), n, rows);
                if e.is_subalgebra(&s) {
                    nodes.push(s);
                }
            }
        }
    }
    SubalgebraLattice::from_nodes(e, nodes, Provenance::FiniteFieldExhaustive)
}

/// Increasing `r`-subsets of `0..n`.
fn combinations(n: usize, r: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, r, &mut Vec::new(), &mut out);
    out
}

/// A one-parameter (or larger) family of one-dimensional subalgebras.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LineFamily {
    /// Every line (zero products).
    AllLines,
    /// Every line inside a plane of absolute nilpotents.
    InPlane(Subspace),
    /// Lines `span{u}` with `Σ cᵢuᵢ² = 0`.
    Conic(Vec<Scalar>),
}

impl LineFamily {
    pub fn contains(&self, s: &Subspace) -> bool {
        if s.dim() != 1 {
            return false;
        }
        match self {
            LineFamily::AllLines => true,
            LineFamily::InPlane(p) => p.contains(s).unwrap_or(false),
            LineFamily::Conic(c) => {
                let u = &s.rows()[0];
                c.iter().zip(u).fold(c[0].zero_like(), |acc, (ci, ui)| acc + ci * &ui.square()).is_zero()
            }
        }
    }

    pub fn describe(&self, e: &EvolutionAlgebra) -> String {
        match self {
            LineFamily::AllLines => "every line".into(),
            LineFamily::InPlane(p) => format!("every line in {}", e.format_subspace(p)),
            LineFamily::Conic(c) => {
                let terms: Vec<String> = c
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(i, x)| format!("{}·u{}²", x, i + 1))
                    .collect();
                format!("span{{u}} with {} = 0", terms.join(" + "))
            }
        }
    }
}

/// A subalgebra lattice with infinitely many nodes, described by finite
/// node lists plus families.
#[derive(Clone, Debug)]
pub struct InfiniteLattice {
    pub algebra: EvolutionAlgebra,
    pub lines: Vec<Subspace>,
    pub line_families: Vec<LineFamily>,
    pub planes: Vec<Subspace>,
    pub plane_families: Vec<PlaneFamily>,
}

/// Result of an exact enumeration.
#[derive(Clone, Debug)]
pub enum LatticeOutcome {
    Finite(SubalgebraLattice),
    Infinite(InfiniteLattice),
}

/// Exact subalgebra lattice of a three-dimensional algebra, adjoining
/// square roots as needed.
pub fn enumerate_subalgebras_exact_dim3(e: &EvolutionAlgebra) -> Result<LatticeOutcome> {
    enumerate_subalgebras_exact_dim3_with(e, ExtensionPolicy::AdjoinRoots)
}

pub fn enumerate_subalgebras_exact_dim3_with(e: &EvolutionAlgebra, policy: ExtensionPolicy) -> Result<LatticeOutcome> {
    if e.dim() != 3 {
        return Err(Error::DimensionMismatch { expected: 3, found: e.dim() });
    }
    if e.field().is_prime_field() {
        return Err(Error::InvalidField("exact enumeration works over the rationals; use the finite-field enumerator".into()));
    }
    let (line_ctx, lines, line_families) = if is_regular(e) {
        let (ctx, sols) = onedim_solve(e, policy)?;
        let lines = sols.into_iter().map(|s| vec![s.generator.into_coords()]).collect::<Vec<_>>();
        (ctx, lines, Vec::new())
    } else if nilpotent_triangularize(e).is_some() {
        nilpotent_lines(e, policy)?
    } else {
        return Err(Error::OutOfScope("exact enumeration covers regular supersolvable and nilpotent algebras".into()));
    };
    let (plane_ctx, planes) = planes_enumerate_dim3_with(e, policy)?;
    let ctx = line_ctx
        .common(&plane_ctx)
        .map_err(|_| Error::UnsupportedExtension(format!("lines need {} but planes need {}", line_ctx, plane_ctx)))?;
    let ext = e.promote(&ctx)?;
    let lines: Vec<Subspace> = lines.iter().map(|v| Subspace::span(&ctx, 3, v)).collect::<Result<_>>()?;
    let plane_nodes: Vec<Subspace> =
        planes.planes.iter().map(|s| Subspace::span(&ctx, 3, s.rows())).collect::<Result<_>>()?;
    if line_families.is_empty() && planes.families.is_empty() {
        let mut nodes = lines;
        nodes.extend(plane_nodes);
        return Ok(LatticeOutcome::Finite(SubalgebraLattice::from_nodes(&ext, nodes, Provenance::ExactDim3)?));
    }
    let mut lines = lines;
    lines.sort();
    lines.dedup();
    lines.retain(|l| !line_families.iter().any(|f| f.contains(l)));
    Ok(LatticeOutcome::Infinite(InfiniteLattice {
        algebra: ext,
        lines,
        line_families,
        planes: plane_nodes,
        plane_families: planes.families,
    }))
}

type NilpotentLines = (FieldDescriptor, Vec<Vec<Vec<Scalar>>>, Vec<LineFamily>);

/// Lines of a nilpotent algebra are spanned by absolute nilpotents: `u² = 0`
/// iff the vector of squares `(uᵢ²)` lies in the left kernel of the matrix.
fn nilpotent_lines(e: &EvolutionAlgebra, policy: ExtensionPolicy) -> Result<NilpotentLines> {
    let f = e.field().clone();
    let kernel = linalg::left_nullspace(&f, e.matrix(), 3);
    match kernel.len() {
        3 => Ok((f, Vec::new(), vec![LineFamily::AllLines])),
        1 => {
            let k = &kernel[0];
            let i0 = k.iter().position(|x| !x.is_zero()).expect("kernel vector is nonzero");
            let mut ctx = f.clone();
            let mut roots: Vec<Option<Scalar>> = vec![None; 3];
            for i in 0..3 {
                if i == i0 || k[i].is_zero() {
                    continue;
                }
                let ratio = &k[i] / &k[i0];
                let r = match policy {
                    ExtensionPolicy::BaseFieldOnly => match is_square(&ratio) {
                        Some(r) => r,
                        None => return Ok((f, Vec::new(), Vec::new())),
                    },
                    ExtensionPolicy::AdjoinRoots => {
                        let (next, r) = adjoin_sqrt(&ctx, &ratio)?;
                        ctx = next;
                        r
                    }
                };
                roots[i] = Some(r);
            }
            let signed: Vec<usize> = (0..3).filter(|&i| roots[i].is_some()).collect();
            let mut lines = Vec::new();
            for mask in 0..(1u32 << signed.len()) {
                let mut u = vec![ctx.zero(); 3];
                u[i0] = ctx.one();
                for (b, &i) in signed.iter().enumerate() {
                    let r = roots[i].as_ref().expect("root").promote(&ctx)?;
                    u[i] = if mask >> b & 1 == 1 { -r } else { r };
                }
                lines.push(vec![u]);
            }
            Ok((ctx, lines, Vec::new()))
        }
        2 => {
            // rank one: u² = (Σ uᵢ² mᵢ)·row, with m spanning the column space
            let col = linalg::transpose(&f, e.matrix(), 3);
            let m = linalg::rref(&col, 3).0.remove(0);
            let support: Vec<usize> = (0..3).filter(|&i| !m[i].is_zero()).collect();
            match support.len() {
                1 => {
                    let others: Vec<usize> = (0..3).filter(|&i| i != support[0]).collect();
                    Ok((f.clone(), Vec::new(), vec![LineFamily::InPlane(Subspace::coordinate(&f, 3, &others)?)]))
                }
                2 => {
                    let (j, l) = (support[0], support[1]);
                    let o = 3 - j - l;
                    // m_j u_j² + m_l u_l² = 0: u_j = ±r u_l with r² = −m_l/m_j
                    let rho = -(&m[l] / &m[j]);
                    let (ctx, r) = match (is_square(&rho), policy) {
                        (Some(r), _) => (f.clone(), r),
                        (None, ExtensionPolicy::AdjoinRoots) => adjoin_sqrt(&f, &rho)?,
                        (None, ExtensionPolicy::BaseFieldOnly) => {
                            return Ok((f.clone(), vec![vec![linalg::unit_vector(&f, 3, o)]], Vec::new()));
                        }
                    };
                    let fams = [r.clone(), -r]
                        .into_iter()
                        .map(|r| {
                            let mut v = vec![ctx.zero(); 3];
                            v[j] = r;
                            v[l] = ctx.one();
                            Subspace::span(&ctx, 3, &[linalg::unit_vector(&ctx, 3, o), v]).map(LineFamily::InPlane)
                        })
                        .collect::<Result<Vec<_>>>()?;
                    Ok((ctx, Vec::new(), fams))
                }
                _ => match policy {
                    ExtensionPolicy::AdjoinRoots => Ok((f, Vec::new(), vec![LineFamily::Conic(m)])),
                    ExtensionPolicy::BaseFieldOnly => {
                        Err(Error::OutOfScope("rational points of a ternary conic".into()))
                    }
                },
            }
        }
        _ => Err(Error::InternalInconsistency("nilpotent algebra with invertible matrix".into())),
    }
}

/// Checks `x ∨ (y ∧ z) = (x ∨ y) ∧ z` for all `x ≤ z`; returns the first
/// violating `(x, y, z)`.
pub fn check_modular_law(l: &SubalgebraLattice) -> (bool, Option<(usize, usize, usize)>) {
    let k = l.len();
    for x in 0..k {
        for z in 0..k {
            if x == z || !l.leq(x, z) {
                continue;
            }
            for y in 0..k {
                if l.join(x, l.meet(y, z)) != l.meet(l.join(x, y), z) {
                    return (false, Some((x, y, z)));
                }
            }
        }
    }
    (true, None)
}

/// Five nodes forming an `N₅` sublattice: `bottom < x < z < top`,
/// `bottom < y < top`, `x ∨ y = z ∨ y = top`, `x ∧ y = z ∧ y = bottom`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PentagonWitness {
    pub bottom: usize,
    pub x: usize,
    pub z: usize,
    pub y: usize,
    pub top: usize,
}

impl PentagonWitness {
    /// Re-checks every defining relation against the lattice tables.
    pub fn verify(&self, l: &SubalgebraLattice) -> bool {
        let PentagonWitness { bottom, x, z, y, top } = *self;
        let distinct = [bottom, x, z, y, top];
        let all_distinct = (0..5).all(|i| (i + 1..5).all(|j| distinct[i] != distinct[j]));
        all_distinct
            && l.leq(x, z)
            && l.join(x, y) == top
            && l.join(z, y) == top
            && l.meet(x, y) == bottom
            && l.meet(z, y) == bottom
    }
}

/// An `N₅` sublattice, if the lattice is not modular.
///
/// A modular-law violation `(x, y, z)` refines to the pentagon
/// `y∧z < x∨(y∧z) < (x∨y)∧z < x∨y` with `y` on the other side; if that
/// degenerates, every candidate is tried.
pub fn find_pentagon(l: &SubalgebraLattice) -> Option<PentagonWitness> {
    if let (false, Some((x, y, z))) = check_modular_law(l) {
        let w = PentagonWitness {
            bottom: l.meet(y, z),
            x: l.join(x, l.meet(y, z)),
            z: l.meet(l.join(x, y), z),
            y,
            top: l.join(x, y),
        };
        if w.verify(l) {
            return Some(w);
        }
    }
    let k = l.len();
    for x in 0..k {
        for z in 0..k {
            if x == z || !l.leq(x, z) {
                continue;
            }
            for y in 0..k {
                let w = PentagonWitness { bottom: l.meet(z, y), x, z, y, top: l.join(x, y) };
                if w.verify(l) {
                    return Some(w);
                }
            }
        }
    }
    None
}

/// Whether a node is a quasi-ideal, with the first node it fails against.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuasiIdealStatus {
    pub node: usize,
    pub quasi_ideal: bool,
    pub witness: Option<usize>,
}

/// Quasi-ideal test for every node. `⟨U,V⟩ ⊇ U + V` always holds, so
/// equality is a dimension count: `dim(U ∨ V) = dim U + dim V − dim(U ∧ V)`.
pub fn quasi_ideal_profile(l: &SubalgebraLattice) -> Vec<QuasiIdealStatus> {
    let dim = |i: usize| l.nodes[i].dim();
    (0..l.len())
        .map(|u| {
            let witness = (0..l.len()).find(|&v| dim(l.join(u, v)) + dim(l.meet(u, v)) != dim(u) + dim(v));
            QuasiIdealStatus { node: u, quasi_ideal: witness.is_none(), witness }
        })
        .collect()
}

/// A chain of nodes with dimensions `0, 1, …, n`, if one exists.
pub fn complete_flag_exists(l: &SubalgebraLattice) -> Option<Vec<usize>> {
    fn go(l: &SubalgebraLattice, chain: &mut Vec<usize>, dead: &mut [bool]) -> bool {
        let cur = *chain.last().expect("chain starts at bottom");
        if cur == l.top() {
            return true;
        }
        let d = l.nodes[cur].dim();
        for next in 0..l.len() {
            if dead[next] || l.nodes[next].dim() != d + 1 || !l.leq(cur, next) {
                continue;
            }
            chain.push(next);
            if go(l, chain, dead) {
                return true;
            }
            chain.pop();
            dead[next] = true;
        }
        false
    }
    let mut chain = vec![l.bottom()];
    let mut dead = vec![false; l.len()];
    go(l, &mut chain, &mut dead).then_some(chain)
}

/// For lattices with a complete flag, modularity and "every subalgebra is a
/// quasi-ideal" must agree; returns whether they do.
pub fn prop21_consistency(l: &SubalgebraLattice) -> Result<bool> {
    if complete_flag_exists(l).is_none() {
        return Err(Error::PreconditionFailed("the lattice has no complete flag".into()));
    }
    let modular = check_modular_law(l).0;
    let all_quasi = quasi_ideal_profile(l).iter().all(|s| s.quasi_ideal);
    Ok(modular == all_quasi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;

    fn fp_alg(p: u32, rows: &[&[i64]]) -> EvolutionAlgebra {
        let m = rows.iter().map(|r| r.iter().map(|&x| Scalar::fp(x, p)).collect()).collect();
        EvolutionAlgebra::new(FieldDescriptor::PrimeField(p), m).unwrap()
    }

    fn q_alg(rows: &[&[(i64, i64)]]) -> EvolutionAlgebra {
        let m = rows.iter().map(|r| r.iter().map(|&(n, d)| Scalar::ratio(n, d)).collect()).collect();
        EvolutionAlgebra::new(FieldDescriptor::Rationals, m).unwrap()
    }

    fn quarter_regular() -> EvolutionAlgebra {
        q_alg(&[&[(1, 1), (0, 1), (0, 1)], &[(0, 1), (1, 1), (0, 1)], &[(1, 4), (1, 4), (1, 1)]])
    }

    #[test]
    fn gaussian_binomials() {
        assert_eq!(subspace_count(2, 3), Some(6));
        assert_eq!(subspace_count(3, 3), Some(28));
        assert_eq!(subspace_count(4, 3), Some(212));
        assert_eq!(subspace_count(0, 5), Some(1));
    }

    #[test]
    fn zero_algebra_is_subspace_lattice() {
        let e = EvolutionAlgebra::zero_algebra(FieldDescriptor::PrimeField(3), 2);
        let l = enumerate_subalgebras_ff(&e).unwrap();
        assert_eq!(l.len(), 6);
        assert_eq!(l.rank_sizes(), vec![1, 4, 1]);
        assert!(check_modular_law(&l).0);
        assert!(find_pentagon(&l).is_none());
        assert_eq!(l.covers().len(), 8);
    }

    #[test]
    fn diagonal_over_f3() {
        let e = fp_alg(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let l = enumerate_subalgebras_ff(&e).unwrap();
        assert_eq!(l.rank_sizes(), vec![1, 7, 6, 1]);
        let (ok, violation) = check_modular_law(&l);
        assert!(!ok && violation.is_some());
        let w = find_pentagon(&l).unwrap();
        assert!(w.verify(&l));
        let profile = quasi_ideal_profile(&l);
        let line = l.index_of(&e.span(&[vec![Scalar::fp(1, 3), Scalar::fp(1, 3), Scalar::fp(0, 3)]]).unwrap()).unwrap();
        assert!(!profile[line].quasi_ideal);
        assert!(profile[l.top()].quasi_ideal && profile[l.bottom()].quasi_ideal);
        assert_eq!(prop21_consistency(&l), Ok(true));
    }

    #[test]
    fn quarter_regular_exact() {
        let LatticeOutcome::Finite(l) = enumerate_subalgebras_exact_dim3(&quarter_regular()).unwrap() else {
            panic!("expected a finite lattice");
        };
        assert_eq!(l.rank_sizes(), vec![1, 4, 4, 1]);
        assert!(check_modular_law(&l).0);
        assert!(quasi_ideal_profile(&l).iter().all(|s| s.quasi_ideal));
        let flag = complete_flag_exists(&l).unwrap();
        assert_eq!(flag.len(), 4);
        assert_eq!(prop21_consistency(&l), Ok(true));
    }

    #[test]
    fn quarter_regular_matches_mod_p() {
        let LatticeOutcome::Finite(l) = enumerate_subalgebras_exact_dim3(&quarter_regular()).unwrap() else {
            panic!("expected a finite lattice");
        };
        for p in [5, 7] {
            let ff = enumerate_subalgebras_ff(&quarter_regular().reduce_mod(p).unwrap()).unwrap();
            let reduced: BTreeSet<Subspace> = l.nodes().iter().map(|s| s.reduce_mod(p).unwrap()).collect();
            let direct: BTreeSet<Subspace> = ff.nodes().iter().cloned().collect();
            assert_eq!(reduced, direct, "p = {}", p);
        }
    }

    #[test]
    fn shared_square_is_infinite() {
        let e = q_alg(&[&[(0, 1), (0, 1), (1, 1)], &[(0, 1), (0, 1), (1, 1)], &[(0, 1), (0, 1), (0, 1)]]);
        let LatticeOutcome::Infinite(inf) = enumerate_subalgebras_exact_dim3_with(&e, ExtensionPolicy::BaseFieldOnly).unwrap()
        else {
            panic!("expected an infinite lattice");
        };
        assert_eq!(inf.lines.len(), 1);
        assert!(inf.line_families.is_empty());
        assert_eq!(inf.planes.len(), 2);
        assert_eq!(inf.plane_families.len(), 1);
        let LatticeOutcome::Infinite(closed) = enumerate_subalgebras_exact_dim3(&e).unwrap() else {
            panic!("expected an infinite lattice");
        };
        assert_eq!(closed.line_families.len(), 2);
        assert_eq!(closed.algebra.field().depth(), 1);
    }

    #[test]
    fn nilpotent_chain_exact() {
        // e1² = e2, e2² = e3, e3² = 0: a single absolute-nilpotent line
        let e = q_alg(&[&[(0, 1), (1, 1), (0, 1)], &[(0, 1), (0, 1), (1, 1)], &[(0, 1), (0, 1), (0, 1)]]);
        let LatticeOutcome::Finite(l) = enumerate_subalgebras_exact_dim3(&e).unwrap() else {
            panic!("expected a finite lattice");
        };
        assert_eq!(l.rank_sizes(), vec![1, 1, 1, 1]);
        assert!(check_modular_law(&l).0);
    }

    #[test]
    fn diagonal_exact() {
        let e = q_alg(&[&[(1, 1), (0, 1), (0, 1)], &[(0, 1), (1, 1), (0, 1)], &[(0, 1), (0, 1), (1, 1)]]);
        let LatticeOutcome::Finite(l) = enumerate_subalgebras_exact_dim3(&e).unwrap() else {
            panic!("expected a finite lattice");
        };
        assert_eq!(l.rank_sizes(), vec![1, 7, 6, 1]);
        assert!(find_pentagon(&l).is_some());
    }

    #[test]
    fn no_flag() {
        // e1² = e2, e2² = e1 + 2e2 over F_3: no w with w² ∥ w
        let e = fp_alg(3, &[&[0, 1], &[1, 2]]);
        let l = enumerate_subalgebras_ff(&e).unwrap();
        assert_eq!(l.rank_sizes(), vec![1, 0, 1]);
        assert!(complete_flag_exists(&l).is_none());
        assert!(matches!(prop21_consistency(&l), Err(Error::PreconditionFailed(_))));
    }

    #[test]
    fn too_large() {
        let e = EvolutionAlgebra::zero_algebra(FieldDescriptor::PrimeField(7), 6);
        assert!(matches!(enumerate_subalgebras_ff(&e), Err(Error::TooLarge(_))));
    }
}
