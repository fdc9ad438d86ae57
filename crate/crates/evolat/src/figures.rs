//! The two reference lattices, regenerated and compared with vendored goldens.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use evolat_core::lattice::{enumerate_subalgebras_exact_dim3_with, LatticeOutcome};
use evolat_core::scalar::ExtensionPolicy;
use evolat_core::{EvolutionAlgebra, FieldDescriptor, Scalar};

use crate::error::CliError;
use crate::export::{infinite_dot, to_dot};
use crate::report::{infinite_table, lattice_summary};

/// `e1² = e1`, `e2² = e2`, `e3² = ¼e1 + ¼e2 + e3`.
pub fn figure2_algebra() -> EvolutionAlgebra {
    let q = Scalar::ratio;
    let m = vec![
        vec![q(1, 1), q(0, 1), q(0, 1)],
        vec![q(0, 1), q(1, 1), q(0, 1)],
        vec![q(1, 4), q(1, 4), q(1, 1)],
    ];
    EvolutionAlgebra::new(FieldDescriptor::Rationals, m).expect("valid matrix")
}

/// `e1² = e2² = e3`, `e3² = 0`.
pub fn figure1_algebra() -> EvolutionAlgebra {
    let z = || Scalar::int(0);
    let o = || Scalar::int(1);
    let m = vec![vec![z(), z(), o()], vec![z(), z(), o()], vec![z(), z(), z()]];
    EvolutionAlgebra::new(FieldDescriptor::Rationals, m).expect("valid matrix")
}

/// A regenerated figure: its summary line stem and the files to compare.
pub struct Figure {
    pub summary: String,
    pub files: Vec<(String, String)>,
}

fn header(title: &str, e: &EvolutionAlgebra) -> String {
    let mut out = format!("{}\n", title);
    for i in 0..e.dim() {
        let _ = writeln!(out, "  {}² = {}", e.labels()[i], e.format_element(&e.matrix()[i]));
    }
    out
}

pub fn figure2() -> Result<Figure, CliError> {
    let e = figure2_algebra();
    let LatticeOutcome::Finite(l) = enumerate_subalgebras_exact_dim3_with(&e, ExtensionPolicy::AdjoinRoots)? else {
        return Err(CliError::Core(evolat_core::Error::InternalInconsistency("figure 2 lattice is infinite".into())));
    };
    let sizes = l.rank_sizes();
    let mut table = header("Figure 2: subalgebras of the regular algebra with canonical triple (0, 1/4, 1/4)", &e);
    table.push_str(&lattice_summary(&l));
    Ok(Figure {
        summary: format!("Figure 2: {} lines, {} planes", sizes[1], sizes[2]),
        files: vec![("figure2.txt".into(), table), ("figure2.dot".into(), to_dot(&l))],
    })
}

/// The real algebra: no square root of −1 is adjoined.
pub fn figure1() -> Result<Figure, CliError> {
    let e = figure1_algebra();
    let LatticeOutcome::Infinite(inf) = enumerate_subalgebras_exact_dim3_with(&e, ExtensionPolicy::BaseFieldOnly)? else {
        return Err(CliError::Core(evolat_core::Error::InternalInconsistency("figure 1 lattice is finite".into())));
    };
    let mut table = header("Figure 1: subalgebras of the nilpotent algebra over the rationals", &e);
    table.push_str(&infinite_table(&inf));
    let plural = |n: usize, word: &str| format!("{} {}{}", n, word, if n == 1 { "" } else { "s" });
    let fams = inf.line_families.len() + inf.plane_families.len();
    Ok(Figure {
        summary: format!(
            "Figure 1: {}{} + {}",
            if fams == 1 { "family + ".to_string() } else { format!("{} families + ", fams) },
            plural(inf.lines.len(), "line"),
            plural(inf.planes.len(), "plane")
        ),
        files: vec![("figure1.txt".into(), table), ("figure1.dot".into(), infinite_dot(&inf))],
    })
}

pub fn default_golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("goldens")
}

fn first_difference(expected: &str, actual: &str) -> String {
    let (mut e, mut a) = (expected.lines(), actual.lines());
    let mut n = 1;
    loop {
        match (e.next(), a.next()) {
            (None, None) => return "trailing whitespace differs".into(),
            (x, y) if x == y => n += 1,
            (x, y) => {
                return format!("line {}:\n  expected: {}\n  actual:   {}", n, x.unwrap_or("<end>"), y.unwrap_or("<end>"))
            }
        }
    }
}

/// Regenerates both figures and compares every file with `dir`; returns the
/// report lines. The first mismatch is an error.
pub fn reproduce_figures(dir: &Path) -> Result<Vec<String>, CliError> {
    let mut lines = Vec::new();
    for fig in [figure2()?, figure1()?] {
        for (name, actual) in &fig.files {
            let path = dir.join(name);
            let expected = fs::read_to_string(&path).map_err(|source| CliError::Io { path: path.clone(), source })?;
            if &expected != actual {
                return Err(CliError::GoldenMismatch { file: name.clone(), diff: first_difference(&expected, actual) });
            }
        }
        lines.push(format!("{} — MATCH", fig.summary));
    }
    Ok(lines)
}

/// Writes freshly generated goldens into `dir`.
pub fn bless(dir: &Path) -> Result<Vec<String>, CliError> {
    fs::create_dir_all(dir).map_err(|source| CliError::Io { path: dir.to_path_buf(), source })?;
    let mut lines = Vec::new();
    for fig in [figure2()?, figure1()?] {
        for (name, text) in &fig.files {
            let path = dir.join(name);
            fs::write(&path, text).map_err(|source| CliError::Io { path, source })?;
        }
        lines.push(format!("{} (written)", fig.summary));
    }
    Ok(lines)
}
