//! Exact scalars over Q, Q(i) and prime fields F_p (p odd).
//!
//! Every element carries its [`FieldDescriptor`], so mixing fields is caught at
//! runtime. The `std::ops` impls panic on mixed fields; use [`arith`] for the
//! fallible form.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldKind {
    Rationals,
    GaussianRationals,
    PrimeField,
}

/// Which field a scalar lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldDescriptor {
    kind: FieldKind,
    modulus: u64,
}

impl FieldDescriptor {
    pub fn rationals() -> Self {
        FieldDescriptor {
            kind: FieldKind::Rationals,
            modulus: 0,
        }
    }

    pub fn gaussian() -> Self {
        FieldDescriptor {
            kind: FieldKind::GaussianRationals,
            modulus: 0,
        }
    }

    /// F_p. Rejects p = 2, composites and moduli too large for u128 products.
    pub fn prime(p: u64) -> Result<Self> {
        if p == 2 {
            return Err(Error::Domain("characteristic 2 is not supported".into()));
        }
        if p >= 1 << 62 || !is_prime(p) {
            return Err(Error::Domain(format!("{p} is not an odd prime below 2^62")));
        }
        Ok(FieldDescriptor {
            kind: FieldKind::PrimeField,
            modulus: p,
        })
    }

    pub fn kind(&self) -> FieldKind {
        self.kind
    }

    pub fn modulus(&self) -> Option<u64> {
        (self.kind == FieldKind::PrimeField).then_some(self.modulus)
    }

    /// Whether the field contains a square root of -1.
    pub fn has_i(&self) -> bool {
        match self.kind {
            FieldKind::Rationals => false,
            FieldKind::GaussianRationals => true,
            FieldKind::PrimeField => self.modulus % 4 == 1,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.kind == FieldKind::PrimeField
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::zero(*self)
    }

    pub fn one(&self) -> FieldElement {
        FieldElement::one(*self)
    }

    pub fn int(&self, n: i64) -> FieldElement {
        FieldElement::from_i64(*self, n)
    }

    /// The distinguished square root of -1: `i` in Q(i), the smaller root mod p.
    pub fn i(&self) -> Result<FieldElement> {
        match self.kind {
            FieldKind::GaussianRationals => Ok(FieldElement {
                desc: *self,
                value: Value::Gauss(BigRational::zero(), BigRational::one()),
            }),
            FieldKind::PrimeField if self.has_i() => Ok(self
                .int(-1)
                .sqrt_if_square()
                .expect("-1 is a square when p = 1 mod 4")),
            _ => Err(Error::FieldLacksI),
        }
    }

    /// All elements, for finite fields.
    pub fn elements(&self) -> Option<impl Iterator<Item = FieldElement> + '_> {
        let p = self.modulus()?;
        Some((0..p).map(move |r| FieldElement::from_residue(*self, r)))
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FieldKind::Rationals => write!(f, "Q"),
            FieldKind::GaussianRationals => write!(f, "Qi"),
            FieldKind::PrimeField => write!(f, "GF {}", self.modulus),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Value {
    Rat(BigRational),
    Gauss(BigRational, BigRational),
    Mod(u64),
}

/// An exact scalar. Equality is equality of canonical representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldElement {
    desc: FieldDescriptor,
    value: Value,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Fallible binary arithmetic.
pub fn arith(a: &FieldElement, op: ArithOp, b: &FieldElement) -> Result<FieldElement> {
    match op {
        ArithOp::Add => a.checked_add(b),
        ArithOp::Sub => a.checked_sub(b),
        ArithOp::Mul => a.checked_mul(b),
        ArithOp::Div => a.checked_div(b),
    }
}

/// Total order used for canonical representatives.
pub fn total_order(a: &FieldElement, b: &FieldElement) -> Result<Ordering> {
    if a.desc != b.desc {
        return Err(Error::MixedFields);
    }
    Ok(a.cmp(b))
}

pub fn parse_element(text: &str, desc: FieldDescriptor) -> Result<FieldElement> {
    FieldElement::parse(text, desc)
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % q == 0 {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    // deterministic witness set for 64-bit inputs
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn tonelli_shanks(a: u64, p: u64) -> Option<u64> {
    if a == 0 {
        return Some(0);
    }
    if pow_mod(a, (p - 1) / 2, p) != 1 {
        return None;
    }
    if p % 4 == 3 {
        return Some(pow_mod(a, (p + 1) / 4, p));
    }
    let mut q = p - 1;
    let mut s = 0u32;
    while q % 2 == 0 {
        q /= 2;
        s += 1;
    }
    let z = (2..p)
        .find(|&z| pow_mod(z, (p - 1) / 2, p) == p - 1)
        .expect("a non-residue exists");
    let mut m = s;
    let mut c = pow_mod(z, q, p);
    let mut t = pow_mod(a, q, p);
    let mut r = pow_mod(a, (q + 1) / 2, p);
    while t != 1 {
        let mut i = 0;
        let mut tt = t;
        while tt != 1 {
            tt = mul_mod(tt, tt, p);
            i += 1;
        }
        let b = pow_mod(c, 1 << (m - i - 1), p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    Some(r)
}

fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    (&n * &n == *q.numer() && &d * &d == *q.denom()).then(|| BigRational::new(n, d))
}

fn int_nth_root(x: &BigInt, n: u32) -> Option<BigInt> {
    if x.is_negative() && n % 2 == 0 {
        return None;
    }
    let r = x.nth_root(n);
    (num_traits::pow(r.clone(), n as usize) == *x).then_some(r)
}

fn rational_nth_root(q: &BigRational, n: u32) -> Option<BigRational> {
    let a = int_nth_root(q.numer(), n)?;
    let b = int_nth_root(q.denom(), n)?;
    Some(BigRational::new(a, b))
}

impl FieldElement {
    pub fn zero(desc: FieldDescriptor) -> Self {
        Self::from_i64(desc, 0)
    }

    pub fn one(desc: FieldDescriptor) -> Self {
        Self::from_i64(desc, 1)
    }

    pub fn from_i64(desc: FieldDescriptor, n: i64) -> Self {
        let value = match desc.kind {
            FieldKind::Rationals => Value::Rat(BigRational::from_integer(n.into())),
            FieldKind::GaussianRationals => {
                Value::Gauss(BigRational::from_integer(n.into()), BigRational::zero())
            }
            FieldKind::PrimeField => Value::Mod((n as i128).rem_euclid(desc.modulus as i128) as u64),
        };
        FieldElement { desc, value }
    }

    /// Residue r mod p. Panics if `desc` is not a prime field.
    pub fn from_residue(desc: FieldDescriptor, r: u64) -> Self {
        assert_eq!(desc.kind, FieldKind::PrimeField);
        FieldElement {
            desc,
            value: Value::Mod(r % desc.modulus),
        }
    }

    /// Embeds a rational. Fails in F_p when the denominator vanishes mod p.
    pub fn from_rational(desc: FieldDescriptor, q: &BigRational) -> Result<Self> {
        match desc.kind {
            FieldKind::Rationals => Ok(FieldElement {
                desc,
                value: Value::Rat(q.clone()),
            }),
            FieldKind::GaussianRationals => Ok(FieldElement {
                desc,
                value: Value::Gauss(q.clone(), BigRational::zero()),
            }),
            FieldKind::PrimeField => {
                let p = BigInt::from(desc.modulus);
                let n = q.numer().mod_floor(&p).to_u64().unwrap();
                let d = q.denom().mod_floor(&p).to_u64().unwrap();
                Self::from_residue(desc, n).checked_div(&Self::from_residue(desc, d))
            }
        }
    }

    fn gauss(desc: FieldDescriptor, re: BigRational, im: BigRational) -> Self {
        FieldElement {
            desc,
            value: Value::Gauss(re, im),
        }
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        self.desc
    }

    pub fn is_zero(&self) -> bool {
        match &self.value {
            Value::Rat(q) => q.is_zero(),
            Value::Gauss(a, b) => a.is_zero() && b.is_zero(),
            Value::Mod(r) => *r == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one(self.desc)
    }

    /// The residue, for prime-field elements.
    pub fn residue(&self) -> Option<u64> {
        match self.value {
            Value::Mod(r) => Some(r),
            _ => None,
        }
    }

    /// Real and imaginary parts over Q or Q(i).
    pub fn parts(&self) -> Option<(BigRational, BigRational)> {
        match &self.value {
            Value::Rat(q) => Some((q.clone(), BigRational::zero())),
            Value::Gauss(a, b) => Some((a.clone(), b.clone())),
            Value::Mod(_) => None,
        }
    }

    pub fn checked_add(&self, o: &Self) -> Result<Self> {
        let value = match (&self.value, &o.value) {
            _ if self.desc != o.desc => return Err(Error::MixedFields),
            (Value::Rat(a), Value::Rat(b)) => Value::Rat(a + b),
            (Value::Gauss(a, b), Value::Gauss(c, d)) => Value::Gauss(a + c, b + d),
            (Value::Mod(a), Value::Mod(b)) => {
                Value::Mod(((*a as u128 + *b as u128) % self.desc.modulus as u128) as u64)
            }
            _ => unreachable!("descriptor fixes the representation"),
        };
        Ok(FieldElement {
            desc: self.desc,
            value,
        })
    }

    pub fn checked_sub(&self, o: &Self) -> Result<Self> {
        if self.desc != o.desc {
            return Err(Error::MixedFields);
        }
        self.checked_add(&o.neg())
    }

    pub fn checked_mul(&self, o: &Self) -> Result<Self> {
        let value = match (&self.value, &o.value) {
            _ if self.desc != o.desc => return Err(Error::MixedFields),
            (Value::Rat(a), Value::Rat(b)) => Value::Rat(a * b),
            (Value::Gauss(a, b), Value::Gauss(c, d)) => Value::Gauss(a * c - b * d, a * d + b * c),
            (Value::Mod(a), Value::Mod(b)) => Value::Mod(mul_mod(*a, *b, self.desc.modulus)),
            _ => unreachable!("descriptor fixes the representation"),
        };
        Ok(FieldElement {
            desc: self.desc,
            value,
        })
    }

    pub fn checked_div(&self, o: &Self) -> Result<Self> {
        if self.desc != o.desc {
            return Err(Error::MixedFields);
        }
        self.checked_mul(&o.inv()?)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let value = match &self.value {
            Value::Rat(a) => Value::Rat(a.recip()),
            Value::Gauss(a, b) => {
                let n = a * a + b * b;
                Value::Gauss(a / &n, -(b / &n))
            }
            Value::Mod(a) => Value::Mod(pow_mod(*a, self.desc.modulus - 2, self.desc.modulus)),
        };
        Ok(FieldElement {
            desc: self.desc,
            value,
        })
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut r = Self::one(self.desc);
        while e > 0 {
            if e & 1 == 1 {
                r = &r * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        r
    }

    /// Integer power; negative exponents need a nonzero base.
    pub fn powi(&self, e: i64) -> Result<Self> {
        if e >= 0 {
            Ok(self.pow(e as u64))
        } else {
            Ok(self.inv()?.pow(e.unsigned_abs()))
        }
    }

    /// A square root if one exists in the field. Over Q and Q(i) this is the
    /// principal root (the larger of the two under the total order, so 3/2 and
    /// i); over F_p it is the smaller residue.
    pub fn sqrt_if_square(&self) -> Option<Self> {
        let root = match &self.value {
            Value::Rat(q) => Self {
                desc: self.desc,
                value: Value::Rat(rational_sqrt(q)?),
            },
            Value::Gauss(x, y) => {
                // r = u + vi with u^2 - v^2 = x and u^2 + v^2 = |a|
                let n = rational_sqrt(&(x * x + y * y))?;
                let two = BigRational::from_integer(2.into());
                let u = rational_sqrt(&((x + &n) / &two))?;
                let v = if u.is_zero() {
                    rational_sqrt(&((&n - x) / &two))?
                } else {
                    y / (&two * &u)
                };
                Self::gauss(self.desc, u, v)
            }
            Value::Mod(a) => {
                Self::from_residue(self.desc, tonelli_shanks(*a, self.desc.modulus)?)
            }
        };
        debug_assert_eq!(&(&root * &root), self);
        let other = -&root;
        Some(if self.desc.is_finite() {
            std::cmp::min(root, other)
        } else {
            std::cmp::max(root, other)
        })
    }

    pub fn is_square(&self) -> bool {
        self.sqrt_if_square().is_some()
    }

    /// Some n-th root, or `Ok(None)` when none exists. Fails only for large
    /// primes where gcd(n, p-1) > 1 and n > 2, which this module does not
    /// handle.
    pub fn nth_root(&self, n: u32) -> Result<Option<Self>> {
        assert!(n >= 1);
        if n == 1 || self.is_zero() {
            return Ok(Some(self.clone()));
        }
        if n == 2 {
            return Ok(self.sqrt_if_square());
        }
        if n % 2 == 0 {
            return match self.sqrt_if_square() {
                // every square root of self must be tried; -r too
                Some(r) => {
                    for cand in [r.clone(), -&r] {
                        if let Some(x) = cand.nth_root(n / 2)? {
                            return Ok(Some(x));
                        }
                    }
                    Ok(None)
                }
                None => Ok(None),
            };
        }
        match &self.value {
            Value::Rat(q) => Ok(rational_nth_root(q, n).map(|r| Self {
                desc: self.desc,
                value: Value::Rat(r),
            })),
            Value::Gauss(x, y) => Ok(self.gaussian_nth_root(x, y, n)),
            Value::Mod(a) => {
                let p = self.desc.modulus;
                let g = (n as u64).gcd(&(p - 1));
                if g == 1 {
                    let e = mod_inverse(n as u64, p - 1);
                    return Ok(Some(Self::from_residue(self.desc, pow_mod(*a, e, p))));
                }
                if pow_mod(*a, (p - 1) / g, p) != 1 {
                    return Ok(None);
                }
                if p <= 1 << 22 {
                    let r = (1..p).find(|&r| pow_mod(r, n as u64, p) == *a);
                    return Ok(r.map(|r| Self::from_residue(self.desc, r)));
                }
                Err(Error::SqrtUnavailable(format!(
                    "{n}-th roots mod large p with gcd(n, p-1) > 1"
                )))
            }
        }
    }

    fn gaussian_nth_root(&self, x: &BigRational, y: &BigRational, n: u32) -> Option<Self> {
        // scale by m^n so the target is a Gaussian integer c, then search z with
        // z^n = c among Gaussian integers of norm N(c)^(1/n)
        let m = x.denom().lcm(y.denom());
        let mn = BigRational::from_integer(num_traits::pow(m.clone(), n as usize));
        let (cx, cy) = ((x * &mn).to_integer(), (y * &mn).to_integer());
        let norm = &cx * &cx + &cy * &cy;
        let zn = int_nth_root(&norm, n)?;
        let bound = zn.sqrt();
        let target = Self::gauss(
            self.desc,
            BigRational::from_integer(cx),
            BigRational::from_integer(cy),
        );
        let mut a = -bound.clone();
        let mut best: Option<Self> = None;
        while a <= bound {
            let rest = &zn - &a * &a;
            if !rest.is_negative() {
                let b = rest.sqrt();
                if &b * &b == rest {
                    for bb in [b.clone(), -b.clone()] {
                        let z = Self::gauss(
                            self.desc,
                            BigRational::from_integer(a.clone()),
                            BigRational::from_integer(bb),
                        );
                        if z.pow(n as u64) == target {
                            let root = &z / &Self::gauss(
                                self.desc,
                                BigRational::from_integer(m.clone()),
                                BigRational::zero(),
                            );
                            best = Some(match best {
                                Some(cur) if cur <= root => cur,
                                _ => root,
                            });
                        }
                    }
                }
            }
            a += 1;
        }
        best
    }

    pub fn parse(text: &str, desc: FieldDescriptor) -> Result<Self> {
        let t = text.trim();
        if t.is_empty() {
            return Err(Error::syntax("empty literal"));
        }
        if desc.kind == FieldKind::PrimeField {
            if t.contains('i') {
                return Err(Error::syntax(format!(
                    "`{t}`: GF(p) entries are residue literals; write i as a residue"
                )));
            }
            let n = parse_int(t)?;
            let p = BigInt::from(desc.modulus);
            return Ok(Self::from_residue(desc, n.mod_floor(&p).to_u64().unwrap()));
        }
        let (re, im) = match t.strip_suffix('i') {
            None => (parse_rat(t)?, None),
            Some(head) => {
                let head = head.strip_suffix('*').unwrap_or(head);
                let split = head
                    .char_indices()
                    .filter(|&(k, c)| {
                        k > 0 && (c == '+' || c == '-') && !head[..k].ends_with('/')
                    })
                    .map(|(k, _)| k)
                    .last();
                let (re_txt, im_txt) = match split {
                    Some(k) => (&head[..k], &head[k..]),
                    None => ("", head),
                };
                let re = if re_txt.is_empty() {
                    BigRational::zero()
                } else {
                    parse_rat(re_txt)?
                };
                let im = match im_txt {
                    "" | "+" => BigRational::one(),
                    "-" => -BigRational::one(),
                    s => parse_rat(s)?,
                };
                (re, Some(im))
            }
        };
        match (desc.kind, im) {
            (FieldKind::Rationals, Some(_)) => Err(Error::Domain(format!(
                "`{t}` uses i, which is not in Q"
            ))),
            (FieldKind::Rationals, None) => Ok(FieldElement {
                desc,
                value: Value::Rat(re),
            }),
            (_, im) => Ok(Self::gauss(desc, re, im.unwrap_or_else(BigRational::zero))),
        }
    }
}

fn mod_inverse(a: u64, m: u64) -> u64 {
    let e = BigInt::from(a).extended_gcd(&BigInt::from(m));
    e.x.mod_floor(&BigInt::from(m)).to_u64().unwrap()
}

fn parse_int(s: &str) -> Result<BigInt> {
    let digits = s.strip_prefix(['+', '-']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::syntax(format!("`{s}` is not an integer literal")));
    }
    s.trim_start_matches('+')
        .parse::<BigInt>()
        .map_err(|e| Error::syntax(format!("`{s}`: {e}")))
}

fn parse_rat(s: &str) -> Result<BigRational> {
    match s.split_once('/') {
        None => Ok(BigRational::from_integer(parse_int(s)?)),
        Some((n, d)) => {
            let n = parse_int(n)?;
            let d = parse_int(d)?;
            if d.is_zero() {
                return Err(Error::Domain(format!("`{s}` has a zero denominator")));
            }
            Ok(BigRational::new(n, d))
        }
    }
}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Within one field this is the canonical total order; across fields it
/// orders by descriptor first.
impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.desc.cmp(&other.desc).then_with(|| match (&self.value, &other.value) {
            (Value::Rat(a), Value::Rat(b)) => a.cmp(b),
            (Value::Gauss(a, b), Value::Gauss(c, d)) => a.cmp(c).then_with(|| b.cmp(d)),
            (Value::Mod(a), Value::Mod(b)) => a.cmp(b),
            _ => unreachable!("descriptor fixes the representation"),
        })
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.value {
            Value::Rat(q) => write!(f, "{q}"),
            Value::Mod(r) => write!(f, "{r}"),
            Value::Gauss(a, b) => {
                if b.is_zero() {
                    return write!(f, "{a}");
                }
                if !a.is_zero() {
                    write!(f, "{a}")?;
                    if b.is_positive() {
                        write!(f, "+")?;
                    }
                }
                if b.is_one() {
                    write!(f, "i")
                } else if *b == -BigRational::one() {
                    write!(f, "-i")
                } else {
                    write!(f, "{b}*i")
                }
            }
        }
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        let value = match &self.value {
            Value::Rat(a) => Value::Rat(-a),
            Value::Gauss(a, b) => Value::Gauss(-a, -b),
            Value::Mod(a) => Value::Mod((self.desc.modulus - a) % self.desc.modulus),
        };
        FieldElement {
            desc: self.desc,
            value,
        }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

macro_rules! forward_op {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl $tr<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            /// Panics on mixed fields (and on division by zero for `/`).
            fn $m(self, o: &FieldElement) -> FieldElement {
                self.$checked(o).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $m(self, o: FieldElement) -> FieldElement {
                (&self).$m(&o)
            }
        }
        impl $tr<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $m(self, o: &FieldElement) -> FieldElement {
                (&self).$m(o)
            }
        }
        impl $tr<FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $m(self, o: FieldElement) -> FieldElement {
                self.$m(&o)
            }
        }
    };
}

forward_op!(Add, add, checked_add);
forward_op!(Sub, sub, checked_sub);
forward_op!(Mul, mul, checked_mul);
forward_op!(Div, div, checked_div);
