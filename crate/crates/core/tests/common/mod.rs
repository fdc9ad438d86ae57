#![allow(dead_code)]

use evolat_core::{EvolutionAlgebra, FieldDescriptor, Scalar, Subspace};
use proptest::prelude::*;

pub fn q(n: i64, d: i64) -> Scalar {
    Scalar::ratio(n, d)
}

pub fn rational(rows: &[Vec<i64>]) -> EvolutionAlgebra {
    let m = rows.iter().map(|r| r.iter().map(|&x| Scalar::int(x)).collect()).collect();
    EvolutionAlgebra::new(FieldDescriptor::Rationals, m).unwrap()
}

pub fn fp(p: u32, rows: &[Vec<i64>]) -> EvolutionAlgebra {
    let m = rows.iter().map(|r| r.iter().map(|&x| Scalar::fp(x, p)).collect()).collect();
    EvolutionAlgebra::new(FieldDescriptor::PrimeField(p), m).unwrap()
}

/// Lower unitriangular `(1,0,0), (λ,1,0), (μ,ρ,1)`.
pub fn regular3(l: Scalar, m: Scalar, r: Scalar) -> EvolutionAlgebra {
    let (z, o) = (|| q(0, 1), || q(1, 1));
    EvolutionAlgebra::new(FieldDescriptor::Rationals, vec![vec![o(), z(), z()], vec![l, o(), z()], vec![m, r, o()]]).unwrap()
}

pub fn quarter_regular() -> EvolutionAlgebra {
    regular3(q(0, 1), q(1, 4), q(1, 4))
}

pub fn shared_square() -> EvolutionAlgebra {
    rational(&[vec![0, 0, 1], vec![0, 0, 1], vec![0, 0, 0]])
}

/// `e_i² = e_{i+1}` for `i < k`, zero squares elsewhere, in dimension `n`.
pub fn chain_plus_zero(k: usize, n: usize) -> EvolutionAlgebra {
    let rows: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i + 1 < k && j == i + 1)).collect()).collect();
    rational(&rows)
}

/// Square integer matrices with entries in `lo..=hi`.
pub fn int_matrix(n: usize, lo: i64, hi: i64) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(lo..=hi, n), n)
}

/// Strictly upper triangular integer matrices, presented under a random permutation.
pub fn nilpotent_matrix(n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (int_matrix(n, -2, 2), Just((0..n).collect::<Vec<usize>>()).prop_shuffle()).prop_map(move |(m, perm)| {
        let tri: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| if j > i { m[i][j] } else { 0 }).collect()).collect();
        // relabel basis vector i as perm[i]
        let mut out = vec![vec![0; n]; n];
        for i in 0..n {
            for j in 0..n {
                out[perm[i]][perm[j]] = tri[i][j];
            }
        }
        out
    })
}

pub fn vector(n: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-3i64..=3, n)
}

pub fn to_scalars(v: &[i64]) -> Vec<Scalar> {
    v.iter().map(|&x| Scalar::int(x)).collect()
}

pub fn span(e: &EvolutionAlgebra, vs: &[Vec<i64>]) -> Subspace {
    let rows: Vec<Vec<Scalar>> = vs.iter().map(|v| v.iter().map(|&x| Scalar::int(x).promote(e.field()).unwrap()).collect()).collect();
    e.span(&rows).unwrap()
}

/// A seeded corpus of small algebras over `F_3` and `F_5`.
pub fn finite_corpus() -> Vec<EvolutionAlgebra> {
    use rand::{rngs::StdRng, Rng, SeedableRng};
    let mut out = Vec::new();
    for p in [3u32, 5] {
        let id3 = vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]];
        out.push(fp(p, &id3));
        out.push(fp(p, &[vec![0, 1, 0], vec![0, 0, 1], vec![0, 0, 0]]));
        out.push(fp(p, &[vec![0, 0, 1], vec![0, 0, 1], vec![0, 0, 0]]));
        out.push(fp(p, &[vec![0, 1], vec![0, 0]]));
        out.push(fp(p, &[vec![1, 0], vec![1, 1]]));
        out.push(fp(p, &[vec![0, 1], vec![1, 2]]));
        out.push(fp(p, &[vec![1, 0, 0], vec![0, 0, 1], vec![0, 0, 0]]));
        for n in 1..=3 {
            out.push(EvolutionAlgebra::zero_algebra(FieldDescriptor::PrimeField(p), n));
        }
    }
    out.push(EvolutionAlgebra::zero_algebra(FieldDescriptor::PrimeField(3), 4));
    out.push(quarter_regular().reduce_mod(5).unwrap());
    out.push(quarter_regular().reduce_mod(7).unwrap());
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for i in 0..16 {
        let p = if i % 2 == 0 { 3 } else { 5 };
        let n = 2 + i % 2;
        let rows: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(0..p as i64)).collect()).collect();
        out.push(fp(p, &rows));
    }
    for i in 0..6 {
        let p = if i % 2 == 0 { 3 } else { 5 };
        let mut rows = vec![vec![0i64; 3]; 3];
        for (r, row) in rows.iter_mut().enumerate() {
            row[r] = 1;
            for x in row.iter_mut().take(r) {
                *x = rng.gen_range(0..p as i64);
            }
        }
        out.push(fp(p, &rows));
    }
    out
}
