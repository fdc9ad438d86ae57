//! Univariate polynomials of degree at most three and their roots.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::scalar::{is_square, solve_monic_quadratic, ExtensionPolicy, FieldDescriptor, Scalar};

/// Largest absolute integer coefficient accepted by the rational root test.
const MAX_ROOT_TEST: u64 = 1_000_000_000_000;

/// Coefficients from the constant term upward.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Poly(pub Vec<Scalar>);

impl Poly {
    pub fn degree(&self) -> Option<usize> {
        self.0.iter().rposition(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.degree().is_none()
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = x.zero_like();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    fn describe(&self) -> String {
        let terms: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{}", c),
                1 => format!("{}*x", c),
                _ => format!("{}*x^{}", c, i),
            })
            .collect();
        terms.join(" + ")
    }

    /// Distinct roots of a nonzero polynomial of degree at most three.
    pub fn roots(&self, ctx: &FieldDescriptor, policy: ExtensionPolicy) -> Result<(FieldDescriptor, Vec<Scalar>)> {
        let Some(deg) = self.degree() else {
            return Err(Error::InternalInconsistency("roots of the zero polynomial".into()));
        };
        let lead = self.0[deg].clone();
        let monic: Vec<Scalar> = self.0[..=deg].iter().map(|c| c / &lead).collect();
        match deg {
            0 => Ok((ctx.clone(), Vec::new())),
            1 => Ok((ctx.clone(), alloc::vec![-&monic[0]])),
            2 => quadratic_roots(ctx, &monic[1], &monic[0], policy),
            3 => {
                let Some(r) = base_root(&monic)? else {
                    if ctx.is_prime_field() || policy == ExtensionPolicy::BaseFieldOnly {
                        return Ok((ctx.clone(), Vec::new()));
                    }
                    return Err(Error::UnsupportedExtension(format!(
                        "irreducible cubic {}",
                        self.describe()
                    )));
                };
                // x³ + a x² + b x + c = (x − r)(x² + (a + r) x + (b + r(a + r)))
                let b1 = &monic[2] + &r;
                let c1 = &monic[1] + &(&r * &b1);
                let (ctx, mut rs) = quadratic_roots(ctx, &b1, &c1, policy)?;
                if !rs.contains(&r) {
                    rs.insert(0, r);
                }
                Ok((ctx, rs))
            }
            _ => Err(Error::UnsupportedExtension(format!("degree {} polynomial", deg))),
        }
    }
}

fn quadratic_roots(
    ctx: &FieldDescriptor,
    b: &Scalar,
    c: &Scalar,
    policy: ExtensionPolicy,
) -> Result<(FieldDescriptor, Vec<Scalar>)> {
    if policy == ExtensionPolicy::BaseFieldOnly {
        let disc = b * b - b.field().from_int(4) * c;
        if !disc.is_zero() && is_square(&disc).is_none() {
            return Ok((ctx.clone(), Vec::new()));
        }
    }
    let (ctx, roots) = solve_monic_quadratic(ctx, b, c)?;
    Ok((ctx, roots.into_iter().map(|r| r.value).collect()))
}

/// A root of the monic cubic `monic` lying in its coefficient field, found by
/// scanning `F_p` or by the rational root test. Over the rationals a cubic
/// without a rational root has no root in any tower of quadratic extensions.
fn base_root(monic: &[Scalar]) -> Result<Option<Scalar>> {
    let field = monic[3].field();
    let poly = Poly(monic.to_vec());
    if let FieldDescriptor::PrimeField(p) = field {
        return Ok((0..p as i64).map(|v| Scalar::fp(v, p)).find(|x| poly.eval(x).is_zero()));
    }
    let rats: Option<Vec<BigRational>> = monic.iter().map(Scalar::as_rational).collect();
    let Some(rats) = rats else {
        return Err(Error::UnsupportedExtension(format!(
            "cubic with irrational coefficients {}",
            poly.describe()
        )));
    };
    let lcm = rats.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let ints: Vec<BigInt> = rats.iter().map(|q| (q * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    if ints[0].is_zero() {
        return Ok(Some(Scalar::int(0)));
    }
    let bound = |x: &BigInt| x.abs().to_u64().filter(|v| *v <= MAX_ROOT_TEST);
    let (Some(c0), Some(c3)) = (bound(&ints[0]), bound(&ints[3])) else {
        return Err(Error::UnsupportedExtension(format!("cubic coefficients too large: {}", poly.describe())));
    };
    for den in divisors(c3) {
        for num in divisors(c0) {
            for sign in [1i64, -1] {
                let x = Scalar::rational(BigRational::new(BigInt::from(sign) * BigInt::from(num), BigInt::from(den)));
                if poly.eval(&x).is_zero() {
                    return Ok(Some(x));
                }
            }
        }
    }
    Ok(None)
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}
