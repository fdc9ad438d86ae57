mod common;

use std::collections::BTreeSet;

use common::*;
use evolat_core::lattice::enumerate_subalgebras_ff;
use evolat_core::regular::{
    cor7_criterion, onedim_bruteforce_ff, onedim_solve, onedim_solve_triangular, planes_enumerate_dim3,
};
use evolat_core::scalar::ExtensionPolicy;
use evolat_core::{AlgElement, EvolutionAlgebra, FieldDescriptor, Scalar, Subspace};
use proptest::prelude::*;

fn lower_unitriangular(p: u32, below: &[i64]) -> EvolutionAlgebra {
    let rows = vec![vec![1, 0, 0], vec![below[0], 1, 0], vec![below[1], below[2], 1]];
    fp(p, &rows)
}

fn check_idempotents(e: &EvolutionAlgebra, ctx: &FieldDescriptor, sols: &[evolat_core::regular::OneDimSolution]) {
    let ext = e.promote(ctx).unwrap();
    for s in sols {
        let x = s.idempotent.as_ref().expect("regular algebras have idempotent lines");
        assert_eq!(&ext.square(x).unwrap(), x);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_idempotents_square_to_themselves(l in -3i64..=3, m in -3i64..=3, r in -3i64..=3, d in 1i64..=4) {
        let e = regular3(Scalar::ratio(l, d), Scalar::ratio(m, d), Scalar::ratio(r, d));
        let (ctx, sols) = onedim_solve_triangular(&e).unwrap();
        check_idempotents(&e, &ctx, &sols);
        prop_assert!(sols.len() <= 7);
        let (ctx, sols) = onedim_solve(&e, ExtensionPolicy::AdjoinRoots).unwrap();
        check_idempotents(&e, &ctx, &sols);
    }

    #[test]
    fn triangular_solver_matches_brute_force(p in prop::sample::select(vec![3u32, 5, 7]), below in prop::collection::vec(0i64..7, 3)) {
        let e = lower_unitriangular(p, &below);
        let (_, exact) = onedim_solve_triangular(&e).unwrap();
        let brute = onedim_bruteforce_ff(&e).unwrap();
        let a: BTreeSet<_> = exact.into_iter().map(|s| s.generator).collect();
        let b: BTreeSet<_> = brute.into_iter().map(|s| s.generator).collect();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn planes_agree_with_exhaustive_search(p in prop::sample::select(vec![3u32, 5]), m in int_matrix(3, 0, 4)) {
        let e = fp(p, &m);
        let (_, pe) = planes_enumerate_dim3(&e).unwrap();
        let l = enumerate_subalgebras_ff(&e).unwrap();
        let exhaustive: BTreeSet<Subspace> = l.nodes().iter().filter(|s| s.dim() == 2).cloned().collect();
        let mut found: BTreeSet<Subspace> = pe.planes.iter().cloned().collect();
        for fam in &pe.families {
            for s in &exhaustive {
                if fam.contains(s) {
                    found.insert(s.clone());
                }
            }
            // every member of a family is a subalgebra
            for a in 0..p as i64 {
                if let Some(s) = fam.member(e.field(), &Scalar::fp(a, p)) {
                    prop_assert!(e.is_subalgebra(&s));
                }
            }
        }
        prop_assert_eq!(found, exhaustive);
    }

    #[test]
    fn plane_criterion_holds_when_a_plane_exists(below in prop::collection::vec(-3i64..=3, 3), d in 1i64..=4) {
        let e = regular3(Scalar::ratio(below[0], d), Scalar::ratio(below[1], d), Scalar::ratio(below[2], d));
        let (_, pe) = planes_enumerate_dim3(&e).unwrap();
        for s in &pe.planes {
            for i in 0..3 {
                let (p, q) = match i { 0 => (1, 2), 1 => (0, 2), _ => (0, 1) };
                let unit = evolat_core::linalg::unit_vector(e.field(), 3, i);
                if s.contains_vector(&unit) {
                    prop_assert!(cor7_criterion(&e, i, p, q).unwrap(), "plane {} through e{}", e.format_subspace(s), i + 1);
                }
            }
        }
    }
}

#[test]
fn brute_force_lines_are_lines() {
    for e in finite_corpus() {
        if e.dim() > 3 {
            continue;
        }
        for s in onedim_bruteforce_ff(&e).unwrap() {
            let g = &s.generator;
            let sq = e.square(g).unwrap();
            let line = e.span_elements(&[g.clone()]).unwrap();
            assert!(line.contains_vector(sq.coords()));
            if let Some(x) = &s.idempotent {
                assert_eq!(&e.square(x).unwrap(), x);
            }
        }
    }
}

#[test]
fn regular_lines_bounded() {
    let e = regular3(q(0, 1), q(0, 1), q(0, 1));
    let (_, sols) = onedim_solve_triangular(&e).unwrap();
    assert_eq!(sols.len(), 7);
    let mut gens: Vec<AlgElement> = sols.into_iter().map(|s| s.generator).collect();
    gens.dedup();
    assert_eq!(gens.len(), 7);
}
