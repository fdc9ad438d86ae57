//! Exact scalars.
//!
//! Three kinds of fields are supported:
//!
//! * the rationals, with arbitrary-precision numerators and denominators;
//! * towers of quadratic extensions `Q(√δ₁)(√δ₂)…`, where every `δₛ` is a
//!   verified non-square of the previous level;
//! * prime fields `F_p` for odd primes `p`.
//!
//! A tower element of depth `t` is stored as a pair `(a, b)` of depth `t − 1`
//! elements standing for `a + b·√δₜ`, so a depth-`t` element carries `2ᵗ`
//! rational coefficients. Rationals are the depth-0 case. Elements from two
//! towers combine when one tower is a prefix of the other; the shallower
//! operand is promoted.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest accepted prime modulus. Square roots in `F_p` are found by
/// exhaustive search, so `p` stays small.
pub const MAX_PRIME: u32 = 65_521;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Elem {
    Base(BigRational),
    Ext(Box<(Elem, Elem)>),
}

impl Elem {
    fn depth(&self) -> usize {
        match self {
            Elem::Base(_) => 0,
            Elem::Ext(pair) => 1 + pair.0.depth(),
        }
    }

    fn rational(q: BigRational, depth: usize) -> Elem {
        Elem::Base(q).lift(depth)
    }

    fn zero(depth: usize) -> Elem {
        Elem::rational(BigRational::zero(), depth)
    }

    fn one(depth: usize) -> Elem {
        Elem::rational(BigRational::one(), depth)
    }

    fn lift(self, depth: usize) -> Elem {
        let mut e = self;
        let mut d = e.depth();
        while d < depth {
            e = Elem::Ext(Box::new((e, Elem::zero(d))));
            d += 1;
        }
        e
    }

    fn is_zero(&self) -> bool {
        match self {
            Elem::Base(q) => q.is_zero(),
            Elem::Ext(pair) => pair.0.is_zero() && pair.1.is_zero(),
        }
    }

    /// Strips top levels whose irrational part vanishes.
    fn trim(&self) -> &Elem {
        let mut e = self;
        while let Elem::Ext(pair) = e {
            if pair.1.is_zero() {
                e = &pair.0;
            } else {
                break;
            }
        }
        e
    }

    fn add(&self, other: &Elem) -> Elem {
        match (self, other) {
            (Elem::Base(a), Elem::Base(b)) => Elem::Base(a + b),
            (Elem::Ext(x), Elem::Ext(y)) => Elem::Ext(Box::new((x.0.add(&y.0), x.1.add(&y.1)))),
            _ => unreachable!("tower depth mismatch"),
        }
    }

    fn neg(&self) -> Elem {
        match self {
            Elem::Base(a) => Elem::Base(-a),
            Elem::Ext(x) => Elem::Ext(Box::new((x.0.neg(), x.1.neg()))),
        }
    }

    fn sub(&self, other: &Elem) -> Elem {
        self.add(&other.neg())
    }

    fn scale(&self, q: &BigRational) -> Elem {
        match self {
            Elem::Base(a) => Elem::Base(a * q),
            Elem::Ext(x) => Elem::Ext(Box::new((x.0.scale(q), x.1.scale(q)))),
        }
    }

    fn mul(&self, other: &Elem, deltas: &[Elem]) -> Elem {
        match (self, other) {
            (Elem::Base(a), Elem::Base(b)) => Elem::Base(a * b),
            (Elem::Ext(x), Elem::Ext(y)) => {
                let delta = &deltas[x.0.depth()];
                let bd = x.1.mul(&y.1, deltas).mul(delta, deltas);
                let re = x.0.mul(&y.0, deltas).add(&bd);
                let im = x.0.mul(&y.1, deltas).add(&x.1.mul(&y.0, deltas));
                Elem::Ext(Box::new((re, im)))
            }
            _ => unreachable!("tower depth mismatch"),
        }
    }

    fn inv(&self, deltas: &[Elem]) -> Option<Elem> {
        match self {
            Elem::Base(a) => {
                if a.is_zero() {
                    None
                } else {
                    Some(Elem::Base(a.recip()))
                }
            }
            Elem::Ext(x) => {
                // (a + b√δ)⁻¹ = (a − b√δ) / (a² − b²δ)
                let delta = &deltas[x.0.depth()];
                let norm = x.0
                    .mul(&x.0, deltas)
                    .sub(&x.1.mul(&x.1, deltas).mul(delta, deltas));
                let n_inv = norm.inv(deltas)?;
                Some(Elem::Ext(Box::new((
                    x.0.mul(&n_inv, deltas),
                    x.1.neg().mul(&n_inv, deltas),
                ))))
            }
        }
    }

    fn is_rational_value(&self, q: &BigRational) -> bool {
        match self.trim() {
            Elem::Base(a) => a == q,
            Elem::Ext(_) => false,
        }
    }

    /// Square root inside the same tower level, if one exists.
    fn sqrt(&self, deltas: &[Elem]) -> Option<Elem> {
        match self {
            Elem::Base(q) => rational_sqrt(q).map(Elem::Base),
            Elem::Ext(x) => {
                let (a, b) = (&x.0, &x.1);
                let d = a.depth();
                let delta = &deltas[d];
                if b.is_zero() {
                    if let Some(r) = a.sqrt(deltas) {
                        return Some(Elem::Ext(Box::new((r, Elem::zero(d)))));
                    }
                    // a = δ·r² gives (r√δ)² = a
                    let q = a.mul(&delta.inv(deltas)?, deltas);
                    let r = q.sqrt(deltas)?;
                    return Some(Elem::Ext(Box::new((Elem::zero(d), r))));
                }
                let norm = a.mul(a, deltas).sub(&b.mul(b, deltas).mul(delta, deltas));
                let r = norm.sqrt(deltas)?;
                let half = BigRational::new(BigInt::one(), BigInt::from(2));
                for cand in [a.add(&r).scale(&half), a.sub(&r).scale(&half)] {
                    if cand.is_zero() {
                        continue;
                    }
                    if let Some(u) = cand.sqrt(deltas) {
                        let two_u_inv = u.scale(&BigRational::from_integer(BigInt::from(2))).inv(deltas)?;
                        let v = b.mul(&two_u_inv, deltas);
                        return Some(Elem::Ext(Box::new((u, v))));
                    }
                }
                None
            }
        }
    }

    fn fmt_with(&self, deltas: &[Elem], f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.trim() {
            Elem::Base(q) => write!(f, "{}", q),
            Elem::Ext(x) => {
                let delta = &deltas[x.0.depth()];
                f.write_str("(")?;
                let has_re = !x.0.is_zero();
                if has_re {
                    x.0.fmt_with(deltas, f)?;
                    f.write_str(" + ")?;
                }
                if x.1.is_rational_value(&BigRational::one()) {
                } else if x.1.is_rational_value(&-BigRational::one()) {
                    f.write_str("-")?;
                } else {
                    x.1.fmt_with(deltas, f)?;
                    f.write_str("*")?;
                }
                f.write_str("sqrt(")?;
                delta.fmt_with(deltas, f)?;
                f.write_str("))")
            }
        }
    }
}

fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let (n, d) = (q.numer(), q.denom());
    let (rn, rd) = (n.sqrt(), d.sqrt());
    if &(&rn * &rn) == n && &(&rd * &rd) == d {
        Some(BigRational::new(rn, rd))
    } else {
        None
    }
}

/// A tower of quadratic extensions of the rationals.
///
/// `discriminant(s)` lives at depth `s`, i.e. in the tower of the first `s`
/// adjunctions, and is a verified non-square there.
#[derive(Clone, Debug)]
pub struct Tower {
    deltas: Arc<Vec<Elem>>,
}

impl PartialEq for Tower {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.deltas, &other.deltas) || self.deltas == other.deltas
    }
}

impl Eq for Tower {}

impl Tower {
    fn empty() -> Tower {
        Tower { deltas: Arc::new(Vec::new()) }
    }

    /// Number of adjoined square roots.
    pub fn depth(&self) -> usize {
        self.deltas.len()
    }

    /// The adjoined discriminants as scalars, innermost first.
    pub fn discriminants(&self) -> Vec<Scalar> {
        (0..self.depth())
            .map(|s| Scalar::alg(self.prefix(s), self.deltas[s].clone()))
            .collect()
    }

    fn prefix(&self, depth: usize) -> Tower {
        if depth == self.depth() {
            return self.clone();
        }
        Tower { deltas: Arc::new(self.deltas[..depth].to_vec()) }
    }

    fn is_prefix_of(&self, other: &Tower) -> bool {
        self.depth() <= other.depth()
            && (Arc::ptr_eq(&self.deltas, &other.deltas)
                || self.deltas[..] == other.deltas[..self.depth()])
    }

    fn extended(&self, delta: Elem) -> Tower {
        let mut deltas = (*self.deltas).clone();
        deltas.push(delta);
        Tower { deltas: Arc::new(deltas) }
    }

    fn common(&self, other: &Tower) -> Result<Tower> {
        if other.is_prefix_of(self) {
            Ok(self.clone())
        } else if self.is_prefix_of(other) {
            Ok(other.clone())
        } else {
            Err(Error::IncompatibleFields(
                "quadratic towers where neither prefixes the other".into(),
            ))
        }
    }
}

/// Describes the field a scalar lives in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldDescriptor {
    Rationals,
    /// A non-empty tower of quadratic extensions of the rationals.
    QuadraticTower(Tower),
    /// `F_p` for an odd prime `p`.
    PrimeField(u32),
}

impl FieldDescriptor {
    /// `F_p`, rejecting even numbers, composites and moduli above [`MAX_PRIME`].
    pub fn prime(p: u64) -> Result<Self> {
        if p == 2 {
            return Err(Error::InvalidField("characteristic 2 is not supported".into()));
        }
        if p < 3 || p % 2 == 0 || !is_prime(p) {
            return Err(Error::InvalidField(format!("{} is not an odd prime", p)));
        }
        if p > MAX_PRIME as u64 {
            return Err(Error::InvalidField(format!("prime {} exceeds {}", p, MAX_PRIME)));
        }
        Ok(FieldDescriptor::PrimeField(p as u32))
    }

    fn from_tower(tower: Tower) -> Self {
        if tower.depth() == 0 {
            FieldDescriptor::Rationals
        } else {
            FieldDescriptor::QuadraticTower(tower)
        }
    }

    fn tower(&self) -> Option<Tower> {
        match self {
            FieldDescriptor::Rationals => Some(Tower::empty()),
            FieldDescriptor::QuadraticTower(t) => Some(t.clone()),
            FieldDescriptor::PrimeField(_) => None,
        }
    }

    /// 0 for the rationals and towers, `p` for `F_p`.
    pub fn characteristic(&self) -> u32 {
        match self {
            FieldDescriptor::PrimeField(p) => *p,
            _ => 0,
        }
    }

    pub fn is_prime_field(&self) -> bool {
        matches!(self, FieldDescriptor::PrimeField(_))
    }

    /// Number of adjoined square roots (0 unless a tower).
    pub fn depth(&self) -> usize {
        match self {
            FieldDescriptor::QuadraticTower(t) => t.depth(),
            _ => 0,
        }
    }

    pub fn from_int(&self, v: i64) -> Scalar {
        match self {
            FieldDescriptor::PrimeField(p) => Scalar::fp(v, *p),
            _ => Scalar::int(v),
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_int(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_int(1)
    }

    /// Maps a rational into this field. In `F_p` the denominator must be a unit.
    pub fn from_rational(&self, q: &BigRational) -> Result<Scalar> {
        match self {
            FieldDescriptor::PrimeField(p) => Scalar::rational(q.clone()).reduce_mod(*p),
            _ => Ok(Scalar::rational(q.clone())),
        }
    }

    /// True when `x` is an element of this field (tower elements of a prefix
    /// tower count as elements).
    pub fn contains(&self, x: &Scalar) -> bool {
        x.promote(self).is_ok()
    }

    /// The smaller field containing both, when one extends the other.
    pub fn common(&self, other: &FieldDescriptor) -> Result<FieldDescriptor> {
        match (self, other) {
            (FieldDescriptor::PrimeField(p), FieldDescriptor::PrimeField(q)) if p == q => {
                Ok(self.clone())
            }
            (FieldDescriptor::PrimeField(_), _) | (_, FieldDescriptor::PrimeField(_)) => Err(
                Error::IncompatibleFields(format!("{} and {}", self, other)),
            ),
            _ => {
                let t = self.tower().unwrap().common(&other.tower().unwrap())?;
                Ok(FieldDescriptor::from_tower(t))
            }
        }
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Rationals => f.write_str("Q"),
            FieldDescriptor::PrimeField(p) => write!(f, "F_{}", p),
            FieldDescriptor::QuadraticTower(t) => {
                f.write_str("Q(")?;
                for (i, d) in t.discriminants().iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "sqrt({})", d)?;
                }
                f.write_str(")")
            }
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[derive(Clone, Debug)]
enum Repr {
    Alg { tower: Tower, elem: Elem },
    Fp { p: u32, v: u32 },
}

/// An exact field element.
///
/// Equality and ordering are by value: a tower element equals its promotion
/// into a deeper tower. The arithmetic operators panic on incompatible fields
/// or division by zero; [`field_arith`] and the `checked_*` methods report
/// these as errors instead.
#[derive(Clone, Debug)]
pub struct Scalar(Repr);

enum Aligned {
    Alg(Tower, Elem, Elem),
    Fp(u32, u32, u32),
}

impl Scalar {
    fn alg(tower: Tower, elem: Elem) -> Scalar {
        debug_assert_eq!(tower.depth(), elem.depth());
        Scalar(Repr::Alg { tower, elem })
    }

    pub fn rational(q: BigRational) -> Scalar {
        Scalar::alg(Tower::empty(), Elem::Base(q))
    }

    pub fn int(v: i64) -> Scalar {
        Scalar::rational(BigRational::from_integer(BigInt::from(v)))
    }

    /// `n / d` as a rational. Panics when `d == 0`.
    pub fn ratio(n: i64, d: i64) -> Scalar {
        Scalar::rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    /// The residue of `v` in `F_p`.
    pub fn fp(v: i64, p: u32) -> Scalar {
        let r = v.rem_euclid(p as i64) as u32;
        Scalar(Repr::Fp { p, v: r })
    }

    pub fn field(&self) -> FieldDescriptor {
        match &self.0 {
            Repr::Alg { tower, .. } => FieldDescriptor::from_tower(tower.clone()),
            Repr::Fp { p, .. } => FieldDescriptor::PrimeField(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Alg { elem, .. } => elem.is_zero(),
            Repr::Fp { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.0 {
            Repr::Alg { elem, .. } => elem.is_rational_value(&BigRational::one()),
            Repr::Fp { v, .. } => *v == 1,
        }
    }

    pub fn zero_like(&self) -> Scalar {
        self.field().zero()
    }

    pub fn one_like(&self) -> Scalar {
        self.field().one()
    }

    /// The value as a rational, when it lies in the rationals.
    pub fn as_rational(&self) -> Option<BigRational> {
        match &self.0 {
            Repr::Alg { elem, .. } => match elem.trim() {
                Elem::Base(q) => Some(q.clone()),
                Elem::Ext(_) => None,
            },
            Repr::Fp { .. } => None,
        }
    }

    /// The residue in `[0, p)` of a prime-field element.
    pub fn residue(&self) -> Option<u32> {
        match &self.0 {
            Repr::Fp { v, .. } => Some(*v),
            Repr::Alg { .. } => None,
        }
    }

    /// Reduces a rational modulo `p`; the denominator must be coprime to `p`.
    pub fn reduce_mod(&self, p: u32) -> Result<Scalar> {
        if let Repr::Fp { p: q, .. } = &self.0 {
            if *q == p {
                return Ok(self.clone());
            }
        }
        let q = self.as_rational().ok_or_else(|| {
            Error::IncompatibleFields(format!("{} is not a rational, cannot reduce mod {}", self, p))
        })?;
        let pm = BigInt::from(p);
        let n = residue_of(q.numer(), &pm);
        let d = residue_of(q.denom(), &pm);
        if d == 0 {
            return Err(Error::DivisionByZero);
        }
        let num = Scalar(Repr::Fp { p, v: n });
        let den = Scalar(Repr::Fp { p, v: d });
        num.checked_div(&den)
    }

    fn align(&self, other: &Scalar) -> Result<Aligned> {
        match (&self.0, &other.0) {
            (Repr::Fp { p, v }, Repr::Fp { p: q, v: w }) => {
                if p != q {
                    return Err(Error::IncompatibleFields(format!("F_{} and F_{}", p, q)));
                }
                Ok(Aligned::Fp(*p, *v, *w))
            }
            (Repr::Alg { tower: ta, elem: ea }, Repr::Alg { tower: tb, elem: eb }) => {
                let t = ta.common(tb)?;
                let d = t.depth();
                Ok(Aligned::Alg(t, ea.clone().lift(d), eb.clone().lift(d)))
            }
            _ => Err(Error::IncompatibleFields(format!(
                "{} and {}",
                self.field(),
                other.field()
            ))),
        }
    }

    /// Promotes into `field`, which must extend this scalar's field.
    pub fn promote(&self, field: &FieldDescriptor) -> Result<Scalar> {
        match (&self.0, field) {
            (Repr::Fp { p, .. }, FieldDescriptor::PrimeField(q)) if p == q => Ok(self.clone()),
            (Repr::Alg { tower, elem }, f) if !f.is_prime_field() => {
                let t = f.tower().unwrap();
                let d = elem.trim().depth();
                if !tower.prefix(d).is_prefix_of(&t) {
                    return Err(Error::IncompatibleFields(format!(
                        "{} does not lie in {}",
                        self, field
                    )));
                }
                Ok(Scalar::alg(t.clone(), elem.trim().clone().lift(t.depth())))
            }
            _ => Err(Error::IncompatibleFields(format!("{} and {}", self.field(), field))),
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar> {
        Ok(match self.align(other)? {
            Aligned::Fp(p, a, b) => Scalar(Repr::Fp { p, v: ((a as u64 + b as u64) % p as u64) as u32 }),
            Aligned::Alg(t, a, b) => Scalar::alg(t, a.add(&b)),
        })
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar> {
        Ok(match self.align(other)? {
            Aligned::Fp(p, a, b) => {
                Scalar(Repr::Fp { p, v: ((a as u64 + p as u64 - b as u64) % p as u64) as u32 })
            }
            Aligned::Alg(t, a, b) => Scalar::alg(t, a.sub(&b)),
        })
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar> {
        Ok(match self.align(other)? {
            Aligned::Fp(p, a, b) => Scalar(Repr::Fp { p, v: ((a as u64 * b as u64) % p as u64) as u32 }),
            Aligned::Alg(t, a, b) => {
                let e = a.mul(&b, &t.deltas);
                Scalar::alg(t, e)
            }
        })
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar> {
        self.checked_mul(&other.inv()?)
    }

    pub fn inv(&self) -> Result<Scalar> {
        match &self.0 {
            Repr::Fp { p, v } => {
                if *v == 0 {
                    return Err(Error::DivisionByZero);
                }
                Ok(Scalar(Repr::Fp { p: *p, v: pow_mod(*v, *p - 2, *p) }))
            }
            Repr::Alg { tower, elem } => {
                let e = elem.inv(&tower.deltas).ok_or(Error::DivisionByZero)?;
                Ok(Scalar::alg(tower.clone(), e))
            }
        }
    }

    pub fn square(&self) -> Scalar {
        self * self
    }
}

fn residue_of(n: &BigInt, p: &BigInt) -> u32 {
    let r = ((n % p) + p) % p;
    r.to_u32().expect("residue fits in u32")
}

fn pow_mod(base: u32, mut exp: u32, p: u32) -> u32 {
    let (mut acc, mut b, m) = (1u64, base as u64 % p as u64, p as u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u32
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Scalar {}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    /// A structural total order: prime-field elements by `(p, residue)`;
    /// tower elements by trimmed depth, then the relevant discriminants,
    /// then coefficients. Not compatible with any field ordering.
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Fp { p, v }, Repr::Fp { p: q, v: w }) => (p, v).cmp(&(q, w)),
            (Repr::Alg { .. }, Repr::Fp { .. }) => Ordering::Less,
            (Repr::Fp { .. }, Repr::Alg { .. }) => Ordering::Greater,
            (Repr::Alg { tower: ta, elem: ea }, Repr::Alg { tower: tb, elem: eb }) => {
                let (xa, xb) = (ea.trim(), eb.trim());
                let (da, db) = (xa.depth(), xb.depth());
                da.cmp(&db)
                    .then_with(|| ta.deltas[..da].cmp(&tb.deltas[..db]))
                    .then_with(|| xa.cmp(xb))
            }
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Fp { v, .. } => write!(f, "{}", v),
            Repr::Alg { tower, elem } => elem.fmt_with(&tower.deltas, f),
        }
    }
}

impl From<i64> for Scalar {
    fn from(v: i64) -> Self {
        Scalar::int(v)
    }
}

impl From<BigRational> for Scalar {
    fn from(q: BigRational) -> Self {
        Scalar::rational(q)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl<'a> $tr<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                match self.$checked(rhs) {
                    Ok(v) => v,
                    Err(e) => panic!("scalar {}: {}", stringify!($method), e),
                }
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);
forward_binop!(Div, div, checked_div);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match &self.0 {
            Repr::Fp { p, v } => Scalar(Repr::Fp { p: *p, v: (*p - *v) % *p }),
            Repr::Alg { tower, elem } => Scalar::alg(tower.clone(), elem.neg()),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

/// Operation selector for [`field_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    Eq,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ArithValue {
    Scalar(Scalar),
    Bool(bool),
}

/// Fallible arithmetic front door. `Neg` ignores `y`; `Eq` compares values
/// after promotion into a common field.
pub fn field_arith(x: &Scalar, y: &Scalar, op: ArithOp) -> Result<ArithValue> {
    Ok(match op {
        ArithOp::Add => ArithValue::Scalar(x.checked_add(y)?),
        ArithOp::Sub => ArithValue::Scalar(x.checked_sub(y)?),
        ArithOp::Mul => ArithValue::Scalar(x.checked_mul(y)?),
        ArithOp::Div => ArithValue::Scalar(x.checked_div(y)?),
        ArithOp::Neg => ArithValue::Scalar(-x),
        ArithOp::Eq => ArithValue::Bool(x.checked_sub(y)?.is_zero()),
    })
}

/// A square root of `x` in its own field, if one exists.
///
/// Tower elements are denested level by level; prime-field elements are
/// searched exhaustively.
pub fn is_square(x: &Scalar) -> Option<Scalar> {
    match &x.0 {
        Repr::Fp { p, v } => (0..*p)
            .find(|r| (*r as u64 * *r as u64) % *p as u64 == *v as u64)
            .map(|r| Scalar(Repr::Fp { p: *p, v: r })),
        Repr::Alg { tower, elem } => {
            let w = elem.sqrt(&tower.deltas)?;
            Some(Scalar::alg(tower.clone(), w))
        }
    }
}

/// Returns a field containing `√x` together with that root.
///
/// When `x` is already a square the field is unchanged; otherwise the tower
/// grows by one level with discriminant `x`. Prime fields cannot be extended.
pub fn adjoin_sqrt(ctx: &FieldDescriptor, x: &Scalar) -> Result<(FieldDescriptor, Scalar)> {
    if x.is_zero() {
        return Err(Error::CannotAdjoin);
    }
    let field = ctx.common(&x.field())?;
    let x = x.promote(&field)?;
    if let Some(w) = is_square(&x) {
        return Ok((field, w));
    }
    match (&x.0, &field) {
        (Repr::Alg { tower, elem }, _) => {
            let d = tower.depth();
            let ext = tower.extended(elem.clone());
            let root = Elem::Ext(Box::new((Elem::zero(d), Elem::one(d))));
            Ok((FieldDescriptor::QuadraticTower(ext.clone()), Scalar::alg(ext, root)))
        }
        (Repr::Fp { .. }, _) => Err(Error::UnsupportedExtension(format!(
            "{} has no square root in {}",
            x, field
        ))),
    }
}

/// How solvers treat roots that lie outside the current field.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ExtensionPolicy {
    /// Adjoin square roots as needed, approximating a quadratically closed field.
    #[default]
    AdjoinRoots,
    /// Keep only roots already in the field.
    BaseFieldOnly,
}

/// A root of a polynomial together with its multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    pub value: Scalar,
    pub multiplicity: u32,
}

/// All roots of `x² + b·x + c`, extending the tower when the discriminant is
/// not a square. Over `F_p` only roots inside `F_p` are returned.
pub fn solve_monic_quadratic(
    ctx: &FieldDescriptor,
    b: &Scalar,
    c: &Scalar,
) -> Result<(FieldDescriptor, Vec<Root>)> {
    let ctx = ctx.common(&b.field())?.common(&c.field())?;
    let two = ctx.from_int(2);
    let disc = b.checked_mul(b)?.checked_sub(&ctx.from_int(4).checked_mul(c)?)?;
    let minus_b = -b;
    if disc.is_zero() {
        let r = minus_b.checked_div(&two)?;
        return Ok((ctx, vec![Root { value: r, multiplicity: 2 }]));
    }
    let (ctx, s) = match adjoin_sqrt(&ctx, &disc) {
        Ok(v) => v,
        Err(Error::UnsupportedExtension(_)) if ctx.is_prime_field() => return Ok((ctx, Vec::new())),
        Err(e) => return Err(e),
    };
    let r1 = minus_b.checked_add(&s)?.checked_div(&two)?;
    let r2 = minus_b.checked_sub(&s)?.checked_div(&two)?;
    Ok((
        ctx,
        vec![Root { value: r1, multiplicity: 1 }, Root { value: r2, multiplicity: 1 }],
    ))
}

/// Parses `-3`, `7/4`, `+2` style rational literals.
pub fn parse_rational(text: &str) -> Option<BigRational> {
    let t = text.trim();
    let (sign, body) = match t.as_bytes().first()? {
        b'-' => (-1, &t[1..]),
        b'+' => (1, &t[1..]),
        _ => (1, t),
    };
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    let digits = |s: &str| !s.is_empty() && s.bytes().all(|c| c.is_ascii_digit());
    if !digits(num) || den.is_some_and(|d| !digits(d)) {
        return None;
    }
    let n = BigInt::parse_bytes(num.as_bytes(), 10)?;
    let d = match den {
        Some(d) => BigInt::parse_bytes(d.as_bytes(), 10)?,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return None;
    }
    let n = if sign < 0 { -n } else { n };
    Some(BigRational::new(n, d))
}

/// Formats a rational in the literal syntax accepted by [`parse_rational`].
pub fn rational_literal(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}
