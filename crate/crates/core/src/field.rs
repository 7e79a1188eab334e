//! Exact coefficient fields: the rationals, prime fields and simple
//! extensions `Q[x]/(f)`.
//!
//! A [`FieldSpec`] is the (cheaply clonable) field context; a [`Scalar`] is
//! an element carrying just enough of its field to do arithmetic on its own.
//! Mixing scalars of different fields is a programming error and panics,
//! except that rationals embed into number fields.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::poly::Poly;

/// How irreducibility of a number-field modulus was established.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "camelCase")]
pub enum Irreducibility {
    /// No rational root and degree at most 3.
    Certified,
    /// No rational root, degree at least 4: assumed irreducible.
    Heuristic,
    /// Has a rational root: `Q[x]/(f)` is a product of fields (étale).
    Reducible,
}

/// Data of `Q[x]/(f)` for a monic squarefree integer polynomial `f`.
#[derive(Debug)]
pub struct NumberField {
    modulus: Vec<BigInt>,
    modulus_q: Vec<BigRational>,
    irreducibility: Irreducibility,
}

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        self.modulus == other.modulus
    }
}
impl Eq for NumberField {}
impl Hash for NumberField {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.modulus.hash(state);
    }
}

impl NumberField {
    /// Builds `Q[x]/(f)`; `coeffs` are ascending integer coefficients of a
    /// monic polynomial of degree at least 2.
    pub fn new(coeffs: Vec<BigInt>) -> Result<Self> {
        let mut coeffs = coeffs;
        while coeffs.len() > 1 && coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        if coeffs.len() < 3 {
            return Err(Error::MalformedDescriptor(
                "number field modulus must have degree >= 2".into(),
            ));
        }
        if !coeffs.last().unwrap().is_one() {
            return Err(Error::MalformedDescriptor(
                "number field modulus must be monic".into(),
            ));
        }
        let modulus_q: Vec<BigRational> = coeffs
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let q = FieldSpec::Rationals;
        let f = Poly::new(modulus_q.iter().cloned().map(Scalar::Rational).collect());
        let g = f.gcd(&f.derivative(&q), &q);
        let shown = format_int_poly(&coeffs);
        if g.degree() != Some(0) {
            return Err(Error::NotSquarefree(shown));
        }
        let has_root = !integer_roots(&coeffs).is_empty();
        let degree = coeffs.len() - 1;
        let irreducibility = if has_root {
            Irreducibility::Reducible
        } else if degree <= 3 {
            Irreducibility::Certified
        } else {
            Irreducibility::Heuristic
        };
        Ok(NumberField {
            modulus: coeffs,
            modulus_q,
            irreducibility,
        })
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[BigInt] {
        &self.modulus
    }

    pub fn irreducibility(&self) -> Irreducibility {
        self.irreducibility
    }

    pub fn is_field(&self) -> bool {
        self.irreducibility != Irreducibility::Reducible
    }

    fn reduce(&self, mut r: Vec<BigRational>) -> Vec<BigRational> {
        let d = self.degree();
        while r.len() > d {
            let c = r.pop().unwrap();
            if c.is_zero() {
                continue;
            }
            let base = r.len() - d;
            for i in 0..d {
                r[base + i] -= &c * &self.modulus_q[i];
            }
        }
        r.resize(d, BigRational::zero());
        r
    }
}

/// Integer roots of a monic integer polynomial (rational root test).
pub(crate) fn integer_roots(coeffs: &[BigInt]) -> Vec<BigInt> {
    let mut roots = Vec::new();
    let eval = |x: &BigInt| {
        let mut acc = BigInt::zero();
        for c in coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    };
    // strip factors of x
    let lowest = coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0);
    if lowest > 0 {
        roots.push(BigInt::zero());
    }
    let a0 = coeffs[lowest].abs();
    for d in divisors(&a0) {
        for cand in [d.clone(), -d] {
            if eval(&cand).is_zero() && !roots.contains(&cand) {
                roots.push(cand);
            }
        }
    }
    roots
}

/// Positive divisors by trial division; gives up (returns what it has)
/// beyond 10^12.
pub(crate) fn divisors(n: &BigInt) -> Vec<BigInt> {
    let Some(n) = n.to_u64() else {
        return Vec::new();
    };
    if n == 0 || n > 1_000_000_000_000 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(BigInt::from(d));
            if d * d != n {
                out.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    out.sort();
    out
}

fn format_int_poly(coeffs: &[BigInt]) -> String {
    let mut parts = Vec::new();
    for (i, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mono = match i {
            0 => String::new(),
            1 => "x".to_string(),
            _ => format!("x^{i}"),
        };
        let abs = c.abs();
        let body = if i > 0 && abs.is_one() {
            mono
        } else if i == 0 {
            abs.to_string()
        } else {
            format!("{abs}*{mono}")
        };
        if parts.is_empty() {
            parts.push(if c.is_negative() { format!("-{body}") } else { body });
        } else {
            parts.push(format!("{} {}", if c.is_negative() { "-" } else { "+" }, body));
        }
    }
    parts.join(" ")
}

/// An exact coefficient field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
    NumberField(Arc<NumberField>),
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(FieldSpec::Prime(p))
        } else {
            Err(Error::NonPrimeModulus(p))
        }
    }

    pub fn number_field(coeffs: &[i64]) -> Result<Self> {
        let nf = NumberField::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())?;
        Ok(FieldSpec::NumberField(Arc::new(nf)))
    }

    /// 0 for characteristic zero.
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Prime(p) => *p,
            _ => 0,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, FieldSpec::Prime(_))
    }

    /// False only for reducible (étale) number-field moduli.
    pub fn is_field(&self) -> bool {
        match self {
            FieldSpec::NumberField(nf) => nf.is_field(),
            _ => true,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::zero()),
            FieldSpec::Prime(p) => Scalar::Residue(0, *p),
            FieldSpec::NumberField(nf) => {
                Scalar::Algebraic(vec![BigRational::zero(); nf.degree()], nf.clone())
            }
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        self.from_rational(&BigRational::from_integer(BigInt::from(n)))
            .expect("integers embed in every field")
    }

    /// Image of a rational number; fails in `F_p` when `p` divides the
    /// denominator.
    pub fn from_rational(&self, q: &BigRational) -> Result<Scalar> {
        match self {
            FieldSpec::Rationals => Ok(Scalar::Rational(q.clone())),
            FieldSpec::Prime(p) => {
                let pb = BigInt::from(*p);
                let num = q.numer().mod_floor(&pb).to_u64().unwrap();
                let den = q.denom().mod_floor(&pb).to_u64().unwrap();
                if den == 0 {
                    return Err(Error::Parse(format!("{q} is not defined modulo {p}")));
                }
                Ok(Scalar::Residue(mulmod(num, inv_mod(den, *p), *p), *p))
            }
            FieldSpec::NumberField(nf) => {
                let mut c = vec![BigRational::zero(); nf.degree()];
                c[0] = q.clone();
                Ok(Scalar::Algebraic(c, nf.clone()))
            }
        }
    }

    /// The generator `x` of a number field.
    pub fn generator(&self) -> Option<Scalar> {
        match self {
            FieldSpec::NumberField(nf) => {
                let mut c = vec![BigRational::zero(); nf.degree()];
                c[1] = BigRational::one();
                Some(Scalar::Algebraic(c, nf.clone()))
            }
            _ => None,
        }
    }

    /// Brings a scalar of a subfield (rationals into a number field) into
    /// this field.
    pub fn embed(&self, s: &Scalar) -> Scalar {
        match (self, s) {
            (FieldSpec::NumberField(_), Scalar::Rational(q)) => self.from_rational(q).unwrap(),
            _ => s.clone(),
        }
    }

    /// Parses an integer or `p/q` literal.
    pub fn parse_scalar(&self, text: &str) -> Result<Scalar> {
        let q = parse_rational(text)?;
        self.from_rational(&q)
    }

    /// All elements, for a prime field.
    pub fn elements(&self) -> Option<Vec<Scalar>> {
        match self {
            FieldSpec::Prime(p) => Some((0..*p).map(|v| Scalar::Residue(v, *p)).collect()),
            _ => None,
        }
    }

    /// A random element; small integers in characteristic 0.
    pub fn random<R: Rng>(&self, rng: &mut R, spread: i64) -> Scalar {
        match self {
            FieldSpec::Prime(p) => Scalar::Residue(rng.gen_range(0..*p), *p),
            FieldSpec::Rationals => self.from_i64(rng.gen_range(-spread..=spread)),
            FieldSpec::NumberField(nf) => {
                let c = (0..nf.degree())
                    .map(|_| BigRational::from_integer(BigInt::from(rng.gen_range(-spread..=spread))))
                    .collect();
                Scalar::Algebraic(c, nf.clone())
            }
        }
    }

    /// Canonical descriptor string, the inverse of [`FromStr`].
    pub fn descriptor(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "F_{p}"),
            FieldSpec::NumberField(nf) => {
                write!(f, "Q[x]/({})", format_int_poly(&nf.modulus).replace(' ', ""))
            }
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// `Q` | `F_<p>` | `Q[x]/(<monic integer polynomial in x>)`,
    /// whitespace-insensitive.
    fn from_str(text: &str) -> Result<Self> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::MalformedDescriptor(text.to_string());
        if s == "Q" {
            return Ok(FieldSpec::Rationals);
        }
        if let Some(rest) = s.strip_prefix("F_") {
            let p: u64 = rest.parse().map_err(|_| bad())?;
            return FieldSpec::prime(p);
        }
        if let Some(rest) = s.strip_prefix("Q[x]/(") {
            let body = rest.strip_suffix(')').ok_or_else(bad)?;
            let coeffs = parse_int_poly(body).ok_or_else(bad)?;
            let nf = NumberField::new(coeffs)?;
            return Ok(FieldSpec::NumberField(Arc::new(nf)));
        }
        Err(bad())
    }
}

/// Parses e.g. `x^3-2*x+1`, `2x^2 + 3`, `-x^2+x`; no whitespace expected.
fn parse_int_poly(s: &str) -> Option<Vec<BigInt>> {
    if s.is_empty() {
        return None;
    }
    let mut coeffs: Vec<BigInt> = Vec::new();
    let bytes = s.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let mut sign = BigInt::one();
        if bytes[i] == b'+' || bytes[i] == b'-' {
            if bytes[i] == b'-' {
                sign = -sign;
            }
            i += 1;
        } else if i > 0 {
            return None;
        }
        let start = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        let coef = if i > start {
            s[start..i].parse::<BigInt>().ok()?
        } else {
            BigInt::one()
        };
        let mut exp = 0usize;
        let had_digits = i > start;
        if i < bytes.len() && bytes[i] == b'*' {
            if !had_digits {
                return None;
            }
            i += 1;
            if i >= bytes.len() || bytes[i] != b'x' {
                return None;
            }
        }
        if i < bytes.len() && bytes[i] == b'x' {
            i += 1;
            exp = 1;
            if i < bytes.len() && bytes[i] == b'^' {
                i += 1;
                let st = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                exp = s[st..i].parse().ok()?;
            }
        } else if !had_digits {
            return None;
        }
        if coeffs.len() <= exp {
            coeffs.resize(exp + 1, BigInt::zero());
        }
        coeffs[exp] += sign * coef;
    }
    Some(coeffs)
}

pub(crate) fn parse_rational(text: &str) -> Result<BigRational> {
    let t = text.trim();
    let bad = || Error::Parse(format!("not a rational literal: {text:?}"));
    if let Some((n, d)) = t.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        Ok(BigRational::new(n, d))
    } else {
        let n: BigInt = t.parse().map_err(|_| bad())?;
        Ok(BigRational::from_integer(n))
    }
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = mulmod(result, base, p);
        }
        base = mulmod(base, base, p);
        e >>= 1;
    }
    result
}

/// An element of a [`FieldSpec`], kept in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    /// Residue in `[0, p)` together with `p`.
    Residue(u64, u64),
    /// Coefficients of a polynomial of degree `< deg f`, padded to `deg f`.
    Algebraic(Vec<BigRational>, Arc<NumberField>),
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Residue(v, _) => *v == 0,
            Scalar::Algebraic(c, _) => c.iter().all(|x| x.is_zero()),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Residue(v, _) => *v == 1,
            Scalar::Algebraic(c, _) => c[0].is_one() && c[1..].iter().all(|x| x.is_zero()),
        }
    }

    /// Multiplicative inverse; `None` for zero (and for zero divisors of an
    /// étale number-field modulus).
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        match self {
            Scalar::Rational(q) => Some(Scalar::Rational(q.recip())),
            Scalar::Residue(v, p) => Some(Scalar::Residue(inv_mod(*v, *p), *p)),
            Scalar::Algebraic(c, nf) => {
                let q = FieldSpec::Rationals;
                let a = Poly::new(c.iter().cloned().map(Scalar::Rational).collect());
                let f = Poly::new(nf.modulus_q.iter().cloned().map(Scalar::Rational).collect());
                let (g, s, _) = a.ext_gcd(&f, &q);
                if g.degree() != Some(0) {
                    return None;
                }
                let g0 = g.coeff(0, &q).inv()?;
                let s = s.scale(&g0, &q);
                let mut out = vec![BigRational::zero(); nf.degree()];
                for (i, coef) in s.coeffs().iter().enumerate() {
                    if let Scalar::Rational(r) = coef {
                        out[i] = r.clone();
                    }
                }
                Some(Scalar::Algebraic(out, nf.clone()))
            }
        }
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = match self {
            Scalar::Rational(_) => Scalar::Rational(BigRational::one()),
            Scalar::Residue(_, p) => Scalar::Residue(1 % p, *p),
            Scalar::Algebraic(c, nf) => {
                let mut v = vec![BigRational::zero(); c.len()];
                v[0] = BigRational::one();
                Scalar::Algebraic(v, nf.clone())
            }
        };
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// The rational value, if this scalar lies in `Q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self {
            Scalar::Rational(q) => Some(q.clone()),
            Scalar::Algebraic(c, _) if c[1..].iter().all(|x| x.is_zero()) => Some(c[0].clone()),
            _ => None,
        }
    }

    /// Leading order of magnitude, for reporting coefficient growth.
    pub fn bit_size(&self) -> u64 {
        match self {
            Scalar::Rational(q) => q.numer().bits() + q.denom().bits(),
            Scalar::Residue(..) => 1,
            Scalar::Algebraic(c, _) => c.iter().map(|q| q.numer().bits() + q.denom().bits()).sum(),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => write!(f, "{q}"),
            Scalar::Residue(v, _) => write!(f, "{v}"),
            Scalar::Algebraic(c, _) => {
                let mut parts = Vec::new();
                for (i, q) in c.iter().enumerate() {
                    if q.is_zero() {
                        continue;
                    }
                    parts.push(match i {
                        0 => format!("{q}"),
                        1 => format!("({q})*x"),
                        _ => format!("({q})*x^{i}"),
                    });
                }
                if parts.is_empty() {
                    write!(f, "0")
                } else {
                    write!(f, "{}", parts.join(" + "))
                }
            }
        }
    }
}

fn mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("scalar field mismatch: {a:?} vs {b:?}")
}

fn lift_pair<'a>(a: &'a Scalar, b: &'a Scalar) -> (std::borrow::Cow<'a, Scalar>, std::borrow::Cow<'a, Scalar>) {
    use std::borrow::Cow;
    match (a, b) {
        (Scalar::Rational(q), Scalar::Algebraic(_, nf)) => {
            let s = FieldSpec::NumberField(nf.clone()).from_rational(q).unwrap();
            (Cow::Owned(s), Cow::Borrowed(b))
        }
        (Scalar::Algebraic(_, nf), Scalar::Rational(q)) => {
            let s = FieldSpec::NumberField(nf.clone()).from_rational(q).unwrap();
            (Cow::Borrowed(a), Cow::Owned(s))
        }
        _ => (Cow::Borrowed(a), Cow::Borrowed(b)),
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        let (a, b) = lift_pair(self, rhs);
        match (a.as_ref(), b.as_ref()) {
            (Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x + y),
            (Scalar::Residue(x, p), Scalar::Residue(y, q)) if p == q => {
                Scalar::Residue(((*x as u128 + *y as u128) % *p as u128) as u64, *p)
            }
            (Scalar::Algebraic(x, f), Scalar::Algebraic(y, g)) if f == g => {
                Scalar::Algebraic(x.iter().zip(y).map(|(u, v)| u + v).collect(), f.clone())
            }
            (x, y) => mismatch(x, y),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        let (a, b) = lift_pair(self, rhs);
        match (a.as_ref(), b.as_ref()) {
            (Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x * y),
            (Scalar::Residue(x, p), Scalar::Residue(y, q)) if p == q => {
                Scalar::Residue(mulmod(*x, *y, *p), *p)
            }
            (Scalar::Algebraic(x, f), Scalar::Algebraic(y, g)) if f == g => {
                let mut prod = vec![BigRational::zero(); x.len() + y.len() - 1];
                for (i, u) in x.iter().enumerate() {
                    if u.is_zero() {
                        continue;
                    }
                    for (j, v) in y.iter().enumerate() {
                        if !v.is_zero() {
                            prod[i + j] += u * v;
                        }
                    }
                }
                Scalar::Algebraic(f.reduce(prod), f.clone())
            }
            (x, y) => mismatch(x, y),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(-q),
            Scalar::Residue(v, p) => Scalar::Residue(if *v == 0 { 0 } else { p - v }, *p),
            Scalar::Algebraic(c, f) => Scalar::Algebraic(c.iter().map(|x| -x).collect(), f.clone()),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &'a Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                self.$m(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}
impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}
impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn descriptor_examples() {
        assert_eq!("Q".parse::<FieldSpec>().unwrap(), FieldSpec::Rationals);
        let k: FieldSpec = "Q[x]/(x^2-2)".parse().unwrap();
        match &k {
            FieldSpec::NumberField(nf) => {
                assert_eq!(nf.degree(), 2);
                assert_eq!(nf.irreducibility(), Irreducibility::Certified);
            }
            _ => panic!("expected a number field"),
        }
        assert_eq!("F_4".parse::<FieldSpec>(), Err(Error::NonPrimeModulus(4)));
    }

    #[test]
    fn descriptor_whitespace_and_roundtrip() {
        let k: FieldSpec = " Q [x] / ( x^3 - 2*x + 1 ) ".parse().unwrap();
        let again: FieldSpec = k.descriptor().parse().unwrap();
        assert_eq!(k, again);
        assert_eq!(" F_ 7".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(7));
    }

    #[test]
    fn descriptor_errors() {
        assert!(matches!(
            "Q[x]/(x^2-2*x+1)".parse::<FieldSpec>(),
            Err(Error::NotSquarefree(_))
        ));
        assert!(matches!("R".parse::<FieldSpec>(), Err(Error::MalformedDescriptor(_))));
        assert!(matches!(
            "Q[x]/(2x^2-1)".parse::<FieldSpec>(),
            Err(Error::MalformedDescriptor(_))
        ));
        assert!(matches!("F_1".parse::<FieldSpec>(), Err(Error::NonPrimeModulus(1))));
    }

    #[test]
    fn etale_modulus_flagged() {
        let k: FieldSpec = "Q[x]/(x^2-1)".parse().unwrap();
        assert!(!k.is_field());
        let x = k.generator().unwrap();
        // x - 1 is a zero divisor
        assert!((&x - &k.one()).inv().is_none());
        let h: FieldSpec = "Q[x]/(x^4+1)".parse().unwrap();
        match h {
            FieldSpec::NumberField(nf) => assert_eq!(nf.irreducibility(), Irreducibility::Heuristic),
            _ => unreachable!(),
        }
    }

    #[test]
    fn sqrt2_arithmetic() {
        let k: FieldSpec = "Q[x]/(x^2-2)".parse().unwrap();
        let x = k.generator().unwrap();
        assert_eq!(&x * &x, k.from_i64(2));
        let y = &x + &k.one();
        let yi = y.inv().unwrap();
        assert!((&y * &yi).is_one());
    }

    #[test]
    fn prime_field_fractions() {
        let f = FieldSpec::Prime(5);
        let half = f.parse_scalar("1/2").unwrap();
        assert_eq!(&half * &f.from_i64(2), f.one());
        assert!(f.parse_scalar("1/5").is_err());
        assert_eq!(f.from_i64(-1), Scalar::Residue(4, 5));
    }
}
