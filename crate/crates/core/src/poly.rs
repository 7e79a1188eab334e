//! Dense univariate polynomials over a [`FieldSpec`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::field::{divisors, FieldSpec, Scalar};

/// Coefficients in ascending degree; empty for the zero polynomial, and
/// never with a zero leading coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: Scalar) -> Self {
        Poly::new(vec![c])
    }

    /// `x - a`
    pub fn linear_root(a: &Scalar, field: &FieldSpec) -> Self {
        Poly::new(vec![-a, field.one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize, field: &FieldSpec) -> Scalar {
        self.coeffs.get(i).cloned().unwrap_or_else(|| field.zero())
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &Poly, field: &FieldSpec) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i, field) + other.coeff(i, field)).collect())
    }

    pub fn sub(&self, other: &Poly, field: &FieldSpec) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i, field) - other.coeff(i, field)).collect())
    }

    pub fn mul(&self, other: &Poly, field: &FieldSpec) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Poly::new(out)
    }

    pub fn scale(&self, c: &Scalar, _field: &FieldSpec) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self, field: &FieldSpec) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(l) => self.scale(&l.inv().expect("leading coefficient invertible"), field),
        }
    }

    pub fn derivative(&self, field: &FieldSpec) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * &field.from_i64(i as i64))
                .collect(),
        )
    }

    /// Euclidean division; panics on division by zero.
    pub fn divrem(&self, divisor: &Poly, field: &FieldSpec) -> (Poly, Poly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = divisor.leading().unwrap().inv().expect("invertible leading coefficient");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![field.zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let c = &rem[k] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                let t = &c * d;
                rem[k - dd + i] -= &t;
            }
            quot[k - dd] = c;
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    /// Monic gcd (zero if both are zero).
    pub fn gcd(&self, other: &Poly, field: &FieldSpec) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.divrem(&b, field);
            a = b;
            b = r;
        }
        a.monic(field)
    }

    /// `(g, s, t)` with `s*self + t*other = g`, `g` monic.
    pub fn ext_gcd(&self, other: &Poly, field: &FieldSpec) -> (Poly, Poly, Poly) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::constant(field.one()), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), Poly::constant(field.one()));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1, field);
            let s2 = s0.sub(&q.mul(&s1, field), field);
            let t2 = t0.sub(&q.mul(&t1, field), field);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        match r0.leading().cloned() {
            None => (r0, s0, t0),
            Some(l) => {
                let li = l.inv().unwrap();
                (r0.scale(&li, field), s0.scale(&li, field), t0.scale(&li, field))
            }
        }
    }

    pub fn pow(&self, e: usize, field: &FieldSpec) -> Poly {
        let mut acc = Poly::constant(field.one());
        for _ in 0..e {
            acc = acc.mul(self, field);
        }
        acc
    }

    pub fn eval(&self, x: &Scalar, field: &FieldSpec) -> Scalar {
        let mut acc = field.zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// Roots lying in `field`, without multiplicity, in a deterministic
    /// order. Complete over `Q` and small prime fields; over a number field
    /// only rational roots of rational polynomials are found.
    pub fn roots(&self, field: &FieldSpec) -> Vec<Scalar> {
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        match field {
            FieldSpec::Prime(p) if *p <= 1_000_000 => field
                .elements()
                .unwrap()
                .into_iter()
                .filter(|x| self.eval(x, field).is_zero())
                .collect(),
            FieldSpec::Prime(_) => Vec::new(),
            FieldSpec::Rationals | FieldSpec::NumberField(_) => {
                let mut rat = Vec::with_capacity(self.coeffs.len());
                for c in &self.coeffs {
                    match c.as_rational() {
                        Some(q) => rat.push(q),
                        None => return Vec::new(),
                    }
                }
                rational_roots(&rat)
                    .into_iter()
                    .map(|q| field.from_rational(&q).unwrap())
                    .collect()
            }
        }
    }
}

/// Rational roots by the rational root theorem.
fn rational_roots(coeffs: &[BigRational]) -> Vec<BigRational> {
    let lcm = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = coeffs.iter().map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let mut roots = Vec::new();
    let low = ints.iter().position(|c| !c.is_zero()).unwrap_or(0);
    if low > 0 {
        roots.push(BigRational::zero());
    }
    let ints = &ints[low..];
    if ints.len() < 2 {
        return roots;
    }
    let eval = |x: &BigRational| {
        let mut acc = BigRational::zero();
        for c in ints.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    };
    let nums = divisors(&ints[0].abs());
    let dens = divisors(&ints[ints.len() - 1].abs());
    let mut cands: Vec<BigRational> = Vec::new();
    for n in &nums {
        for d in &dens {
            for sign in [1, -1] {
                let c = BigRational::new(n * BigInt::from(sign), d.clone());
                if !cands.contains(&c) {
                    cands.push(c);
                }
            }
        }
    }
    cands.sort();
    for c in cands {
        if eval(&c).is_zero() && !roots.contains(&c) {
            roots.push(c);
        }
    }
    roots
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qpoly(c: &[i64]) -> Poly {
        let q = FieldSpec::Rationals;
        Poly::new(c.iter().map(|&v| q.from_i64(v)).collect())
    }

    #[test]
    fn division_and_gcd() {
        let q = FieldSpec::Rationals;
        // (x^2 - 1) = (x - 1)(x + 1)
        let f = qpoly(&[-1, 0, 1]);
        let g = qpoly(&[-1, 1]);
        let (quo, rem) = f.divrem(&g, &q);
        assert!(rem.is_zero());
        assert_eq!(quo, qpoly(&[1, 1]));
        assert_eq!(f.gcd(&qpoly(&[1, 2, 1]), &q), qpoly(&[1, 1]));
    }

    #[test]
    fn bezout_identity() {
        let q = FieldSpec::Rationals;
        let a = qpoly(&[2, 0, 3, 1]);
        let b = qpoly(&[-2, 0, 1]);
        let (g, s, t) = a.ext_gcd(&b, &q);
        assert_eq!(s.mul(&a, &q).add(&t.mul(&b, &q), &q), g);
    }

    #[test]
    fn rational_roots_found() {
        let q = FieldSpec::Rationals;
        // (2x - 1)(x + 3) x = 2x^3 + 5x^2 - 3x
        let f = qpoly(&[0, -3, 5, 2]);
        let mut r = f.roots(&q);
        r.sort_by_key(|s| s.as_rational().unwrap());
        let expect: Vec<Scalar> = ["-3", "0", "1/2"].iter().map(|s| q.parse_scalar(s).unwrap()).collect();
        assert_eq!(r, expect);
        assert!(qpoly(&[-2, 0, 1]).roots(&q).is_empty());
    }

    #[test]
    fn prime_field_roots() {
        let f = FieldSpec::Prime(7);
        let p = Poly::new(vec![f.from_i64(-2), f.zero(), f.one()]);
        // 3^2 = 9 = 2, 4^2 = 16 = 2 mod 7
        assert_eq!(p.roots(&f), vec![f.from_i64(3), f.from_i64(4)]);
    }
}
