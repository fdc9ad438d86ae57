#![allow(dead_code)]

use evolat_core::{EvolutionAlgebra, FieldDescriptor, Scalar};

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
    let (z, o) = (|| Scalar::int(0), || Scalar::int(1));
    EvolutionAlgebra::new(FieldDescriptor::Rationals, vec![vec![o(), z(), z()], vec![l, o(), z()], vec![m, r, o()]]).unwrap()
}

/// `e_i² = e_{i+1}` for `i < k`, zero squares elsewhere, in dimension `n`.
pub fn chain_plus_zero(k: usize, n: usize) -> EvolutionAlgebra {
    let rows: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i + 1 < k && j == i + 1)).collect()).collect();
    rational(&rows)
}

/// A seeded corpus of small algebras over `F_3` and `F_5`: `n ≤ 3`, plus the
/// four-dimensional zero algebra.
pub fn finite_corpus() -> Vec<EvolutionAlgebra> {
    use rand::{rngs::StdRng, Rng, SeedableRng};
    let mut out = Vec::new();
    for p in [3u32, 5] {
        out.push(fp(p, &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]));
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
    let quarter = evolat::figures::figure2_algebra();
    out.push(quarter.reduce_mod(5).unwrap());
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
