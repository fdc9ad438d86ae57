//! Human-readable reports for each command.

use std::fmt::Write as _;

use evolat_core::classify::{
    classify, format_layers, prop45_conditions, supersolvable_canonicalize, CompletenessWitness, Decision,
    ModularityVerdict, TripleSource, Witness,
};
use evolat_core::lattice::{
    check_modular_law, complete_flag_exists, enumerate_subalgebras_exact_dim3_with, enumerate_subalgebras_ff,
    find_pentagon, quasi_ideal_profile, InfiniteLattice, LatticeOutcome, SubalgebraLattice,
};
use evolat_core::regular::{onedim_bruteforce_ff, onedim_solve, OneDimSolution};
use evolat_core::scalar::ExtensionPolicy;
use evolat_core::{AlgElement, Error, EvolutionAlgebra, FieldDescriptor, Scalar};

use crate::error::CliError;
use crate::file::to_canonical;

pub const CLOSURE_SEMANTICS: &str = "decisions under quadratically-closed semantics";

/// Label for results that hold in the given field and no larger one.
pub fn literal_semantics(field: &FieldDescriptor) -> String {
    match field {
        FieldDescriptor::PrimeField(p) => format!("literal finite field F_{}", p),
        other => format!("literal field {}", other),
    }
}

fn header(out: &mut String, e: &EvolutionAlgebra) {
    let _ = writeln!(out, "algebra over {}, dimension {}", e.field(), e.dim());
    for i in 0..e.dim() {
        let _ = writeln!(out, "  {}² = {}", e.labels()[i], e.format_element(&e.matrix()[i]));
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn field_of(coords: &[Scalar], base: &FieldDescriptor) -> FieldDescriptor {
    coords.iter().fold(base.clone(), |f, x| f.common(&x.field()).unwrap_or(f))
}

/// Renders an element together with its square, computed in the element's field.
fn element_with_square(e: &EvolutionAlgebra, u: &AlgElement) -> String {
    let f = field_of(u.coords(), e.field());
    let sq = e.promote(&f).and_then(|ext| ext.square(u));
    match sq {
        Ok(s) => format!("u = {}, u² = {}", e.format_element(u.coords()), e.format_element(s.coords())),
        Err(_) => format!("u = {}", e.format_element(u.coords())),
    }
}

fn completeness(e: &EvolutionAlgebra, w: &CompletenessWitness) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "    blocks: nilpotent part of dimension {} ⊕ zero part of dimension {}", w.blocks.0, w.blocks.1);
    for (i, b) in w.basis.iter().enumerate() {
        let _ = writeln!(out, "    f{} = {}", i + 1, e.format_element(b));
    }
    for (i, row) in w.beta.iter().enumerate() {
        let r: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        let _ = writeln!(out, "    β{} = [{}]", i + 1, r.join(", "));
    }
    out
}

pub fn format_verdict(e: &EvolutionAlgebra, v: &ModularityVerdict) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "modularity: {}", v.decision);
    for r in &v.reasons {
        let _ = writeln!(out, "  - {}", r);
    }
    match &v.witness {
        None => {}
        Some(Witness::Obstruction(u)) => {
            let _ = writeln!(out, "  obstruction: {}", element_with_square(e, u));
        }
        Some(Witness::Completeness(w)) => {
            let _ = writeln!(out, "  decomposition:");
            out.push_str(&completeness(e, w));
        }
        Some(Witness::FatLayer { layer, indices }) => {
            let idx: Vec<String> = indices.iter().map(|i| e.labels()[*i].clone()).collect();
            let _ = writeln!(out, "  layer L{} = {{{}}}", layer, idx.join(", "));
        }
        Some(Witness::Triple { source, triple, clauses }) => {
            let src = match source {
                TripleSource::Whole => "the algebra",
                TripleSource::LeadingSubalgebra => "span{e1, e2, e3} in canonical order",
                TripleSource::QuotientByFirst => "the quotient by the first canonical basis vector",
            };
            let _ = writeln!(out, "  canonical triple (λ, μ, ρ) of {} = {}", src, triple);
            let _ = writeln!(
                out,
                "  necessary clauses: ρ ≠ 0: {}, ρ²λ − ρμ + μ² = 0: {}, λ = 0: {}",
                yes(clauses.0),
                yes(clauses.1),
                yes(clauses.2)
            );
        }
    }
    out
}

pub fn classify_report(e: &EvolutionAlgebra) -> Result<String, CliError> {
    let c = classify(e)?;
    let mut out = String::new();
    header(&mut out, e);
    let _ = writeln!(out, "semantics: {}", semantics_for_decisions(e));
    let _ = writeln!(out, "regular: {} (det = {})", yes(c.regular), c.determinant);
    match &c.nilpotent {
        Some(t) => {
            let _ = writeln!(out, "nilpotent: yes, layers {}", format_layers(t));
        }
        None => {
            let _ = writeln!(out, "nilpotent: no");
        }
    }
    match &c.supersolvable {
        Some(s) => {
            let order: Vec<String> = s.order.iter().map(|&i| e.labels()[i].clone()).collect();
            let _ = write!(out, "supersolvable: yes, order {}", order.join(", "));
            if let Some(t) = s.triple() {
                let (a, b, d) = prop45_conditions(&t);
                let _ = write!(out, ", canonical triple (λ, μ, ρ) = {} [clauses {} {} {}]", t, yes(a), yes(b), yes(d));
            }
            out.push('\n');
        }
        None if c.regular => {
            let _ = writeln!(out, "supersolvable: no");
        }
        None => {}
    }
    out.push_str(&format_verdict(e, &c.verdict));
    if c.verdict.decision == Decision::Modular && c.regular {
        if let Ok(LatticeOutcome::Finite(l)) = exact_if_dim3(e) {
            if let Some(flag) = complete_flag_exists(&l) {
                let _ = writeln!(out, "  complete flag: {}", format_chain(&l, &flag));
            }
        }
    }
    match &c.complete_form {
        Some(f) => {
            let _ = writeln!(out, "complete: yes, {}", f.tag);
        }
        None => {
            let _ = writeln!(out, "complete: no canonical complete form");
        }
    }
    Ok(out)
}

fn exact_if_dim3(e: &EvolutionAlgebra) -> Result<LatticeOutcome, Error> {
    if e.dim() == 3 && !e.field().is_prime_field() {
        enumerate_subalgebras_exact_dim3_with(e, ExtensionPolicy::BaseFieldOnly)
    } else {
        Err(Error::OutOfScope("no exact lattice".into()))
    }
}

fn semantics_for_decisions(e: &EvolutionAlgebra) -> String {
    match e.field() {
        FieldDescriptor::PrimeField(_) => literal_semantics(e.field()),
        _ => CLOSURE_SEMANTICS.to_string(),
    }
}

pub fn format_chain(l: &SubalgebraLattice, chain: &[usize]) -> String {
    chain.iter().map(|&i| l.label(i)).collect::<Vec<_>>().join(" ⊂ ")
}

/// Options of the `lattice` command.
#[derive(Clone, Copy, Debug, Default)]
pub struct LatticeOptions {
    /// Adjoin square roots instead of staying in the base field.
    pub closure: bool,
}

/// The result of the `lattice` command before rendering.
pub enum LatticeResult {
    Finite { lattice: SubalgebraLattice, semantics: String, verdict: Option<ModularityVerdict> },
    Infinite { lattice: InfiniteLattice, semantics: String, verdict: Option<ModularityVerdict> },
}

pub fn compute_lattice(e: &EvolutionAlgebra, opts: LatticeOptions) -> Result<LatticeResult, CliError> {
    if e.field().is_prime_field() {
        let lattice = enumerate_subalgebras_ff(e)?;
        return Ok(LatticeResult::Finite { lattice, semantics: literal_semantics(e.field()), verdict: None });
    }
    if e.dim() != 3 {
        return Err(Error::OutOfScope(format!(
            "exact lattices are computed in dimension 3 only (got {}); try --field-override Fp:P",
            e.dim()
        ))
        .into());
    }
    let (policy, semantics) = if opts.closure {
        (ExtensionPolicy::AdjoinRoots, CLOSURE_SEMANTICS.to_string())
    } else {
        (ExtensionPolicy::BaseFieldOnly, literal_semantics(e.field()))
    };
    let verdict = evolat_core::classify::decide_modular(e).ok();
    Ok(match enumerate_subalgebras_exact_dim3_with(e, policy)? {
        LatticeOutcome::Finite(lattice) => LatticeResult::Finite { lattice, semantics, verdict },
        LatticeOutcome::Infinite(lattice) => LatticeResult::Infinite { lattice, semantics, verdict },
    })
}

pub fn lattice_summary(l: &SubalgebraLattice) -> String {
    let mut out = String::new();
    let sizes: Vec<String> = l.rank_sizes().iter().map(|s| s.to_string()).collect();
    let _ = writeln!(out, "nodes: {} (by dimension: {})", l.len(), sizes.join(", "));
    for d in 1..l.algebra().dim() {
        let labels: Vec<String> = (0..l.len()).filter(|&i| l.nodes()[i].dim() == d).map(|i| l.label(i)).collect();
        let _ = writeln!(out, "dimension {}: {}", d, if labels.is_empty() { "none".into() } else { labels.join(", ") });
    }
    match check_modular_law(l) {
        (true, _) => {
            let _ = writeln!(out, "modular law: holds");
        }
        (false, Some((x, y, z))) => {
            let _ = writeln!(out, "modular law: fails for x = {}, y = {}, z = {}", l.label(x), l.label(y), l.label(z));
        }
        (false, None) => unreachable!("a failure carries its triple"),
    }
    match find_pentagon(l) {
        None => {
            let _ = writeln!(out, "pentagon: none");
        }
        Some(w) => {
            let _ = writeln!(
                out,
                "pentagon: bottom {}, x {}, z {}, y {}, top {}",
                l.label(w.bottom),
                l.label(w.x),
                l.label(w.z),
                l.label(w.y),
                l.label(w.top)
            );
        }
    }
    let failures: Vec<String> = quasi_ideal_profile(l)
        .iter()
        .filter(|s| !s.quasi_ideal)
        .map(|s| format!("{} (against {})", l.label(s.node), l.label(s.witness.expect("failure has a witness"))))
        .collect();
    if failures.is_empty() {
        let _ = writeln!(out, "quasi-ideals: every node");
    } else {
        let _ = writeln!(out, "not quasi-ideals: {}", failures.join(", "));
    }
    match complete_flag_exists(l) {
        Some(flag) => {
            let _ = writeln!(out, "complete flag: {}", format_chain(l, &flag));
        }
        None => {
            let _ = writeln!(out, "complete flag: none");
        }
    }
    out
}

/// Node lists and families of an infinite lattice.
pub fn infinite_table(inf: &InfiniteLattice) -> String {
    let e = &inf.algebra;
    let mut out = String::from("lattice: infinite\n");
    let list = |xs: Vec<String>| if xs.is_empty() { "none".to_string() } else { xs.join(", ") };
    let _ = writeln!(out, "lines: {}", list(inf.lines.iter().map(|s| e.format_subspace(s)).collect()));
    for f in &inf.line_families {
        let _ = writeln!(out, "line family: {}", f.describe(e));
    }
    let _ = writeln!(out, "planes: {}", list(inf.planes.iter().map(|s| e.format_subspace(s)).collect()));
    for f in &inf.plane_families {
        let _ = writeln!(out, "plane family: {}", f.describe(e));
    }
    out
}

pub fn lattice_report(e: &EvolutionAlgebra, result: &LatticeResult) -> String {
    let mut out = String::new();
    header(&mut out, e);
    let (semantics, verdict) = match result {
        LatticeResult::Finite { semantics, verdict, .. } | LatticeResult::Infinite { semantics, verdict, .. } => {
            (semantics, verdict)
        }
    };
    let _ = writeln!(out, "lattice semantics: {}", semantics);
    match result {
        LatticeResult::Finite { lattice, .. } => out.push_str(&lattice_summary(lattice)),
        LatticeResult::Infinite { lattice, .. } => out.push_str(&infinite_table(lattice)),
    }
    if let Some(v) = verdict {
        let _ = writeln!(out, "verdict semantics: {}", CLOSURE_SEMANTICS);
        out.push_str(&format_verdict(e, v));
    }
    out
}

fn format_solution(e: &EvolutionAlgebra, s: &OneDimSolution) -> String {
    let mut line = format!("span{{{}}}", e.format_element(s.generator.coords()));
    match &s.idempotent {
        Some(x) => {
            let _ = write!(line, ", idempotent {}", e.format_element(x.coords()));
        }
        None => line.push_str(", absolute nilpotent"),
    }
    line
}

pub fn onedim_report(e: &EvolutionAlgebra) -> Result<String, CliError> {
    let mut out = String::new();
    header(&mut out, e);
    let (semantics, field, sols) = if e.field().is_prime_field() {
        (literal_semantics(e.field()), e.field().clone(), onedim_bruteforce_ff(e)?)
    } else {
        let (ctx, sols) = onedim_solve(e, ExtensionPolicy::AdjoinRoots).map_err(|err| match err {
            Error::NotRegular => Error::OutOfScope("exact line solving needs a regular algebra".into()),
            other => other,
        })?;
        (CLOSURE_SEMANTICS.to_string(), ctx, sols)
    };
    let _ = writeln!(out, "semantics: {}", semantics);
    let _ = writeln!(out, "field of the solutions: {}", field);
    let _ = writeln!(out, "one-dimensional subalgebras: {}", sols.len());
    for s in &sols {
        let _ = writeln!(out, "  {}", format_solution(e, s));
    }
    Ok(out)
}

pub fn quotient_report(e: &EvolutionAlgebra, ideal: &[usize]) -> Result<String, CliError> {
    let n = e.dim();
    if let Some(&bad) = ideal.iter().find(|&&i| i == 0 || i > n) {
        return Err(CliError::Usage(format!("ideal index {} is outside 1..={}", bad, n)));
    }
    let zero_based: Vec<usize> = ideal.iter().map(|i| i - 1).collect();
    let b = e.basic_ideal(&zero_based)?;
    let q = e.quotient(&b)?;
    if q.dim() == 0 {
        return Err(CliError::Usage("the quotient by the whole algebra is zero".into()));
    }
    to_canonical(&q)
}

pub fn canon_report(e: &EvolutionAlgebra) -> Result<String, CliError> {
    let mut out = String::new();
    header(&mut out, e);
    let c = classify(e)?;
    if c.regular {
        match supersolvable_canonicalize(e)? {
            Some(form) => {
                let canon = EvolutionAlgebra::new(e.field().clone(), form.matrix.clone())?;
                let _ = writeln!(out, "lower unitriangular presentation:");
                for (q, b) in form.basis.iter().enumerate() {
                    let _ = writeln!(out, "  f{} = {}", q + 1, e.format_element(b));
                }
                for i in 0..canon.dim() {
                    let _ = writeln!(out, "  f{}² = {}", i + 1, fmt_f(&canon, &canon.matrix()[i]));
                }
                if let Some(t) = form.triple() {
                    let _ = writeln!(out, "canonical triple (λ, μ, ρ) = {}", t);
                }
            }
            None => {
                let _ = writeln!(out, "regular but not supersolvable: no triangular presentation");
            }
        }
    } else if let Some(t) = &c.nilpotent {
        let _ = writeln!(out, "strictly triangular order by layers: {}", format_layers(t));
        let order: Vec<String> = t.order.iter().map(|&i| e.labels()[i].clone()).collect();
        let _ = writeln!(out, "  order: {}", order.join(", "));
    } else {
        let _ = writeln!(out, "neither regular nor nilpotent: no canonical form");
    }
    match &c.complete_form {
        Some(f) => {
            let _ = writeln!(out, "complete canonical form: {}", f.tag);
        }
        None => {
            let _ = writeln!(out, "complete canonical form: none");
        }
    }
    Ok(out)
}

fn fmt_f(e: &EvolutionAlgebra, coords: &[Scalar]) -> String {
    let labels: Vec<String> = (1..=e.dim()).map(|i| format!("f{}", i)).collect();
    e.clone().with_labels(labels).map(|f| f.format_element(coords)).unwrap_or_default()
}
