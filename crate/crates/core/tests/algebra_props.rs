mod common;

use common::*;
use evolat_core::linalg;
use evolat_core::{AlgElement, EvolutionAlgebra, Scalar};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_is_commutative_and_bilinear(m in int_matrix(3, -3, 3), u in vector(3), v in vector(3), w in vector(3), a in -4i64..4) {
        let e = rational(&m);
        let el = |x: &[i64]| AlgElement::new(to_scalars(x));
        let (u, v, w) = (el(&u), el(&v), el(&w));
        prop_assert_eq!(e.product(&u, &v).unwrap(), e.product(&v, &u).unwrap());
        let a = Scalar::int(a);
        let au_w: Vec<Scalar> = u.coords().iter().zip(w.coords()).map(|(x, y)| &a * x + y).collect();
        let lhs = e.product(&AlgElement::new(au_w), &v).unwrap();
        let uv = e.product(&u, &v).unwrap();
        let wv = e.product(&w, &v).unwrap();
        let rhs: Vec<Scalar> = uv.coords().iter().zip(wv.coords()).map(|(x, y)| &a * x + y).collect();
        prop_assert_eq!(lhs.coords(), &rhs[..]);
    }

    #[test]
    fn annihilator_is_a_basic_ideal(m in int_matrix(4, -1, 1)) {
        let e = rational(&m);
        let ann = e.annihilator();
        prop_assert!(e.is_ideal(&ann));
        let b = e.as_basic_ideal(&ann).expect("coordinate ideal");
        prop_assert_eq!(b.indices(), &e.zero_rows()[..]);
    }

    #[test]
    fn generated_subalgebra_is_a_closure(m in int_matrix(3, -2, 2), u in vector(3), v in vector(3), w in vector(3)) {
        let e = rational(&m);
        let a = span(&e, &[u.clone()]);
        let b = span(&e, &[u, v]);
        let c = span(&e, &[w]);
        let ga = e.generated_subalgebra(&[&a]).unwrap();
        let gb = e.generated_subalgebra(&[&b]).unwrap();
        prop_assert!(e.is_subalgebra(&ga));
        prop_assert_eq!(&e.generated_subalgebra(&[&ga]).unwrap(), &ga);
        prop_assert!(gb.contains(&ga).unwrap());
        let gbc = e.generated_subalgebra(&[&b, &c]).unwrap();
        prop_assert!(gbc.contains(&b.sum(&c).unwrap()).unwrap());
    }

    #[test]
    fn quotient_deletes_rows_and_columns(m in nilpotent_matrix(4)) {
        let e = rational(&m);
        let ann = e.annihilator();
        let ideal = e.as_basic_ideal(&ann).unwrap();
        prop_assume!(ideal.indices().len() < e.dim());
        let quo = e.quotient(&ideal).unwrap();
        let keep: Vec<usize> = (0..e.dim()).filter(|i| !ideal.indices().contains(i)).collect();
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                prop_assert_eq!(quo.entry(a, b), e.entry(i, j));
            }
        }
    }

    #[test]
    fn quasi_ideal_is_sum_equals_join(m in int_matrix(3, -1, 1), u in vector(3), v in vector(3)) {
        let e = rational(&m);
        let uu = e.generated_subalgebra(&[&span(&e, &[u])]).unwrap();
        let vv = e.generated_subalgebra(&[&span(&e, &[v])]).unwrap();
        let join = e.generated_subalgebra(&[&uu, &vv]).unwrap();
        let sum = uu.sum(&vv).unwrap();
        prop_assert!(join.contains(&sum).unwrap());
        let (ok, witness) = e.is_quasi_ideal(&uu, [&vv]).unwrap();
        prop_assert_eq!(ok, join == sum);
        prop_assert_eq!(witness.is_some(), !ok);
    }

    #[test]
    fn change_of_basis_round_trips(m in int_matrix(3, -3, 3), perm in Just(vec![0usize, 1, 2]).prop_shuffle(), s in prop::collection::vec(prop::sample::select(vec![-3i64, -2, -1, 1, 2, 3]), 3)) {
        let e = rational(&m);
        let p: Vec<Vec<Scalar>> = (0..3)
            .map(|i| (0..3).map(|j| if j == perm[i] { Scalar::int(s[i]) } else { Scalar::int(0) }).collect())
            .collect();
        let f = e.change_natural_basis(&p).unwrap();
        let p_inv = linalg::inverse(e.field(), &p).unwrap();
        let back = f.change_natural_basis(&p_inv).unwrap();
        prop_assert_eq!(back.matrix(), e.matrix());
    }
}

#[test]
fn non_natural_bases_are_rejected() {
    let e = rational(&[vec![1, 0], vec![0, 1]]);
    let p = vec![to_scalars(&[1, 1]), to_scalars(&[0, 1])];
    assert_eq!(e.change_natural_basis(&p), Err(evolat_core::Error::NotNatural(1, 2)));
}

#[test]
fn zero_algebra_has_every_subspace() {
    let e = EvolutionAlgebra::zero_algebra(evolat_core::FieldDescriptor::Rationals, 3);
    let s = span(&e, &[vec![1, 2, 3]]);
    assert!(e.is_subalgebra(&s));
    assert!(e.is_ideal(&s));
    assert_eq!(e.annihilator(), e.whole());
}
