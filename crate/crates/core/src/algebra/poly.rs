//! Dense univariate polynomials over a [`Field`].
//!
//! Coefficients are stored low degree first in one flat word buffer; the zero
//! polynomial is the empty buffer and reports degree None.

use super::field::{Field, FieldElement};
use super::tower;
use super::AlgebraError;
use std::fmt;

#[derive(Clone)]
pub struct Polynomial {
    field: Field,
    /// Flattened coefficients, `field.ext_degree()` words each, no trailing
    /// zero coefficients.
    w: Vec<u64>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        debug_assert!(self.field == other.field);
        self.w == other.w
    }
}
impl Eq for Polynomial {}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly(deg={:?})", self.degree())
    }
}

impl Polynomial {
    fn stride(&self) -> usize {
        self.field.inner().top_words()
    }

    pub fn zero(field: &Field) -> Polynomial {
        Polynomial {
            field: field.clone(),
            w: Vec::new(),
        }
    }

    pub fn one(field: &Field) -> Polynomial {
        Polynomial::constant(&field.one())
    }

    pub fn x(field: &Field) -> Polynomial {
        Polynomial::from_coeffs(field, &[field.zero(), field.one()])
    }

    pub fn constant(c: &FieldElement) -> Polynomial {
        Polynomial::from_coeffs(c.field(), std::slice::from_ref(c))
    }

    /// x - r
    pub fn linear_monic(r: &FieldElement) -> Polynomial {
        Polynomial::from_coeffs(r.field(), &[-r, r.field().one()])
    }

    pub fn from_coeffs(field: &Field, coeffs: &[FieldElement]) -> Polynomial {
        let stride = field.inner().top_words();
        let mut w = Vec::with_capacity(coeffs.len() * stride);
        for c in coeffs {
            assert!(c.field() == field, "coefficient from a different field");
            w.extend_from_slice(c.words());
        }
        tower::pnormalize(&mut w, stride);
        Polynomial {
            field: field.clone(),
            w,
        }
    }

    /// Convenience constructor from canonical integers.
    pub fn from_u64_coeffs(field: &Field, coeffs: &[u64]) -> Polynomial {
        let elems: Vec<FieldElement> = coeffs.iter().map(|&c| field.from_u64(c)).collect();
        Polynomial::from_coeffs(field, &elems)
    }

    pub(crate) fn from_words(field: &Field, mut w: Vec<u64>) -> Polynomial {
        tower::pnormalize(&mut w, field.inner().top_words());
        Polynomial {
            field: field.clone(),
            w,
        }
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.w
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.w.is_empty()
    }

    /// Degree; None is the zero polynomial's -infinity sentinel.
    pub fn degree(&self) -> Option<usize> {
        if self.w.is_empty() {
            None
        } else {
            Some(self.w.len() / self.stride() - 1)
        }
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        let s = self.stride();
        if (i + 1) * s > self.w.len() {
            self.field.zero()
        } else {
            FieldElement::from_words(&self.field, self.w[i * s..(i + 1) * s].to_vec())
        }
    }

    pub fn coeffs(&self) -> Vec<FieldElement> {
        (0..self.w.len() / self.stride()).map(|i| self.coeff(i)).collect()
    }

    pub fn leading_coeff(&self) -> FieldElement {
        match self.degree() {
            Some(d) => self.coeff(d),
            None => self.field.zero(),
        }
    }

    pub fn is_monic(&self) -> bool {
        !self.is_zero() && self.leading_coeff().is_one()
    }

    pub fn monic(&self) -> Polynomial {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        let inv = self.leading_coeff().inverse().expect("nonzero leading coeff");
        self.scale(&inv)
    }

    pub fn scale(&self, c: &FieldElement) -> Polynomial {
        let inner = self.field.inner();
        Polynomial::from_words(
            &self.field,
            tower::pscale(inner, inner.top(), &self.w, c.words()),
        )
    }

    pub fn derivative(&self) -> Polynomial {
        let s = self.stride();
        let n = self.w.len() / s;
        if n <= 1 {
            return Polynomial::zero(&self.field);
        }
        let mut coeffs = Vec::with_capacity(n - 1);
        for i in 1..n {
            coeffs.push(self.coeff(i).scale_u64(i as u64));
        }
        Polynomial::from_coeffs(&self.field, &coeffs)
    }

    pub fn eval(&self, x: &FieldElement) -> FieldElement {
        assert!(x.field() == &self.field, "evaluation point in wrong field");
        let mut acc = self.field.zero();
        let s = self.stride();
        for i in (0..self.w.len() / s).rev() {
            acc = &(&acc * x) + &self.coeff(i);
        }
        acc
    }

    /// Evaluate with coefficients lifted into the extension field of `x`.
    pub fn eval_in_extension(&self, x: &FieldElement) -> Result<FieldElement, AlgebraError> {
        let target = x.field();
        if !target.is_extension_of(&self.field) {
            return Err(AlgebraError::FieldMismatch);
        }
        let mut acc = target.zero();
        let s = self.stride();
        for i in (0..self.w.len() / s).rev() {
            acc = &(&acc * x) + &self.coeff(i).lift_to(target)?;
        }
        Ok(acc)
    }

    /// Map coefficients into an extension field.
    pub fn lift_to(&self, target: &Field) -> Result<Polynomial, AlgebraError> {
        let coeffs: Result<Vec<_>, _> = self.coeffs().iter().map(|c| c.lift_to(target)).collect();
        Ok(Polynomial::from_coeffs(target, &coeffs?))
    }

    /// Project coefficients into a subfield; error if any fails to descend.
    pub fn descend_to(&self, target: &Field) -> Result<Polynomial, AlgebraError> {
        let coeffs: Result<Vec<_>, _> =
            self.coeffs().iter().map(|c| c.descend_to(target)).collect();
        Ok(Polynomial::from_coeffs(target, &coeffs?))
    }

    /// Classical long division: (quotient, remainder). Panics on zero divisor.
    pub fn divrem(&self, divisor: &Polynomial) -> (Polynomial, Polynomial) {
        let inner = self.field.inner();
        let (q, r) = tower::pdivrem(inner, inner.top(), &self.w, &divisor.w);
        (
            Polynomial::from_words(&self.field, q),
            Polynomial::from_words(&self.field, r),
        )
    }

    pub fn rem(&self, divisor: &Polynomial) -> Polynomial {
        self.divrem(divisor).1
    }

    /// Exact division; returns None if the remainder is nonzero.
    pub fn div_exact(&self, divisor: &Polynomial) -> Option<Polynomial> {
        let (q, r) = self.divrem(divisor);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic_or_zero()
    }

    fn monic_or_zero(&self) -> Polynomial {
        if self.is_zero() {
            self.clone()
        } else {
            self.monic()
        }
    }

    /// Extended gcd: (g, s, t) with s*self + t*other = g, g monic.
    pub fn xgcd(&self, other: &Polynomial) -> Result<(Polynomial, Polynomial, Polynomial), AlgebraError> {
        if self.is_zero() && other.is_zero() {
            return Err(AlgebraError::BothZero);
        }
        let inner = self.field.inner();
        let (g, s, t) = tower::pxgcd(inner, inner.top(), &self.w, &other.w);
        Ok((
            Polynomial::from_words(&self.field, g),
            Polynomial::from_words(&self.field, s),
            Polynomial::from_words(&self.field, t),
        ))
    }

    /// Inverse of self modulo h. On failure carries the nontrivial gcd, which
    /// callers use to split reducible moduli.
    pub fn inv_mod(&self, h: &Polynomial) -> Result<Polynomial, AlgebraError> {
        assert!(h.degree().map_or(false, |d| d >= 1), "modulus of degree >= 1");
        let red = self.rem(h);
        if red.is_zero() {
            return Err(AlgebraError::NotInvertible(h.monic()));
        }
        let (g, s, _) = red.xgcd(h)?;
        if g.degree() != Some(0) {
            return Err(AlgebraError::NotInvertible(g));
        }
        // g is monic constant 1 after normalization.
        Ok(s.rem(h))
    }

    /// self * other mod h.
    pub fn mul_mod(&self, other: &Polynomial, h: &Polynomial) -> Polynomial {
        (self * other).rem(h)
    }

    pub fn shift(&self, k: usize) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let s = self.stride();
        let mut w = vec![0; k * s];
        w.extend_from_slice(&self.w);
        Polynomial::from_words(&self.field, w)
    }

    /// Coefficients reversed: x^n * f(1/x) for n = deg f.
    fn reverse(&self, n: usize) -> Polynomial {
        let s = self.stride();
        let len = self.w.len() / s;
        debug_assert!(len <= n + 1);
        let mut w = vec![0; (n + 1) * s];
        for i in 0..len {
            w[(n - i) * s..(n - i + 1) * s].copy_from_slice(&self.w[i * s..(i + 1) * s]);
        }
        Polynomial::from_words(&self.field, w)
    }

    fn truncate(&self, k: usize) -> Polynomial {
        let s = self.stride();
        if self.w.len() <= k * s {
            return self.clone();
        }
        Polynomial::from_words(&self.field, self.w[..k * s].to_vec())
    }
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut w = self.w.clone();
        tower::padd_into(self.field.fp(), &mut w, &rhs.w);
        Polynomial::from_words(&self.field, w)
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut w = self.w.clone();
        tower::psub_into(self.field.fp(), &mut w, &rhs.w);
        Polynomial::from_words(&self.field, w)
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let inner = self.field.inner();
        Polynomial::from_words(&self.field, tower::pmul(inner, inner.top(), &self.w, &rhs.w))
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let mut w = self.w.clone();
        tower::neg_assign(self.field.fp(), &mut w);
        Polynomial::from_words(&self.field, w)
    }
}

/// Reduction context for a fixed monic modulus. Large moduli precompute a
/// power series reciprocal so each reduction costs two multiplications
/// instead of a quadratic long division.
pub struct Modulus {
    h: Polynomial,
    n: usize,
    /// rev(h)^{-1} mod x^{n-1}, present above the size threshold.
    recip: Option<Polynomial>,
}

const RECIP_THRESHOLD: usize = 24;

impl Modulus {
    pub fn new(h: &Polynomial) -> Modulus {
        let h = h.monic();
        let n = h.degree().expect("modulus must be nonzero");
        assert!(n >= 1);
        let recip = if n >= RECIP_THRESHOLD {
            Some(Self::series_inverse(&h.reverse(n), n.max(2) - 1))
        } else {
            None
        };
        Modulus { h, n, recip }
    }

    pub fn modulus(&self) -> &Polynomial {
        &self.h
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    /// Newton iteration for f^{-1} mod x^k, f(0) = 1.
    fn series_inverse(f: &Polynomial, k: usize) -> Polynomial {
        let field = f.field().clone();
        debug_assert!(f.coeff(0).is_one());
        let mut inv = Polynomial::one(&field);
        let mut prec = 1;
        while prec < k {
            prec = (2 * prec).min(k);
            // inv = inv * (2 - f * inv) mod x^prec
            let fi = (&f.truncate(prec) * &inv).truncate(prec);
            let two = &Polynomial::from_u64_coeffs(&field, &[2]) - &fi;
            inv = (&inv * &two).truncate(prec);
        }
        inv
    }

    pub fn reduce(&self, a: &Polynomial) -> Polynomial {
        let da = match a.degree() {
            Some(d) => d,
            None => return a.clone(),
        };
        if da < self.n {
            return a.clone();
        }
        match &self.recip {
            None => a.rem(&self.h),
            Some(recip) => {
                // Quotient via the reversed-reciprocal trick, valid while
                // deg a <= 2n - 2, which holds for products of reduced inputs.
                debug_assert!(da <= 2 * self.n - 2);
                let k = da - self.n + 1;
                let ra = a.reverse(da);
                let q = (&ra.truncate(k) * &recip.truncate(k)).truncate(k).reverse(k - 1);
                let r = a - &(&q * &self.h);
                debug_assert!(r.degree().map_or(true, |d| d < self.n));
                r.truncate(self.n)
            }
        }
    }

    pub fn mul(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        self.reduce(&(a * b))
    }

    pub fn square(&self, a: &Polynomial) -> Polynomial {
        self.mul(a, a)
    }

    pub fn pow(&self, base: &Polynomial, exp: &num_bigint::BigUint) -> Polynomial {
        let field = base.field();
        let mut acc = Polynomial::one(field);
        if exp.bits() == 0 {
            return acc;
        }
        let b = self.reduce(base);
        for i in (0..exp.bits()).rev() {
            acc = self.square(&acc);
            if exp.bit(i) {
                acc = self.mul(&acc, &b);
            }
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn f7() -> Field {
        Field::prime(7).unwrap()
    }

    #[test]
    fn degree_and_canonical_form() {
        let f = f7();
        let p = Polynomial::from_u64_coeffs(&f, &[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert!(Polynomial::zero(&f).degree().is_none());
        let a = Polynomial::from_u64_coeffs(&f, &[3, 1]);
        let b = Polynomial::from_u64_coeffs(&f, &[4, 6]);
        assert_eq!(
            (&a * &b).degree().unwrap(),
            a.degree().unwrap() + b.degree().unwrap()
        );
    }

    #[test]
    fn xgcd_examples() {
        let f = f7();
        // gcd(x^2 - 1, x - 1) = x - 1
        let a = Polynomial::from_u64_coeffs(&f, &[6, 0, 1]);
        let b = Polynomial::from_u64_coeffs(&f, &[6, 1]);
        let (g, s, t) = a.xgcd(&b).unwrap();
        assert_eq!(g, b.monic());
        assert_eq!(&(&s * &a) + &(&t * &b), g);
        // xgcd(f, 0) is a monic multiple of f
        let (g2, _, _) = a.xgcd(&Polynomial::zero(&f)).unwrap();
        assert_eq!(g2, a.monic());
        assert!(Polynomial::zero(&f).xgcd(&Polynomial::zero(&f)).is_err());
    }

    #[test]
    fn xgcd_bezout_random() {
        let field = Field::prime(65539).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..1000 {
            let da = rng.gen_range(0..8);
            let db = rng.gen_range(0..8);
            let a = random_poly(&field, da, &mut rng);
            let b = random_poly(&field, db, &mut rng);
            if a.is_zero() && b.is_zero() {
                continue;
            }
            let (g, s, t) = a.xgcd(&b).unwrap();
            assert_eq!(&(&s * &a) + &(&t * &b), g);
            if !a.is_zero() {
                assert!(a.rem(&g).is_zero());
            }
            if !b.is_zero() {
                assert!(b.rem(&g).is_zero());
            }
        }
    }

    fn random_poly<R: Rng>(field: &Field, deg: usize, rng: &mut R) -> Polynomial {
        let coeffs: Vec<_> = (0..=deg).map(|_| field.random(rng)).collect();
        Polynomial::from_coeffs(field, &coeffs)
    }

    #[test]
    fn inv_mod_examples() {
        let f = f7();
        // F7[x]/(x^2+1): inv(x) = 6x since x * 6x = 6x^2 = -6 = 1
        let h = Polynomial::from_u64_coeffs(&f, &[1, 0, 1]);
        let x = Polynomial::x(&f);
        let ix = x.inv_mod(&h).unwrap();
        assert_eq!(ix, Polynomial::from_u64_coeffs(&f, &[0, 6]));
        assert_eq!(x.mul_mod(&ix, &h), Polynomial::one(&f));
        assert_eq!(Polynomial::one(&f).inv_mod(&h).unwrap(), Polynomial::one(&f));
        // shared factor: inv(x-1) mod (x^2 - 1) fails with gcd x - 1
        let h2 = Polynomial::from_u64_coeffs(&f, &[6, 0, 1]);
        let a = Polynomial::from_u64_coeffs(&f, &[6, 1]);
        match a.inv_mod(&h2) {
            Err(AlgebraError::NotInvertible(g)) => assert_eq!(g, a.monic()),
            other => panic!("expected NotInvertible, got {:?}", other.map(|_| ())),
        }
    }

    #[test]
    fn mul_mod_against_long_division_oracle() {
        let field = Field::prime(1009).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(4);
        // (x)(x) mod x^2+1 = -1
        let h = Polynomial::from_u64_coeffs(&field, &[1, 0, 1]);
        let x = Polynomial::x(&field);
        assert_eq!(x.mul_mod(&x, &h), Polynomial::from_u64_coeffs(&field, &[1008]));
        for _ in 0..200 {
            let a = random_poly(&field, rng.gen_range(0..12), &mut rng);
            let b = random_poly(&field, rng.gen_range(0..12), &mut rng);
            let h = {
                let mut m = random_poly(&field, rng.gen_range(1..8), &mut rng);
                while m.degree().map_or(true, |d| d < 1) {
                    m = random_poly(&field, 3, &mut rng);
                }
                m
            };
            // schoolbook product followed by long division is the oracle
            let oracle = (&a * &b).divrem(&h).1;
            assert_eq!(a.mul_mod(&b, &h), oracle);
            assert_eq!(a.mul_mod(&Polynomial::one(&field), &h), a.rem(&h));
        }
    }

    #[test]
    fn fast_reduction_matches_long_division() {
        let field = Field::prime(65539).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for deg in [24usize, 50, 121] {
            let mut h = random_poly(&field, deg, &mut rng).monic();
            while h.degree() != Some(deg) {
                h = random_poly(&field, deg, &mut rng).monic();
            }
            let m = Modulus::new(&h);
            for _ in 0..20 {
                let a = random_poly(&field, 2 * deg - 2, &mut rng);
                assert_eq!(m.reduce(&a), a.rem(&h));
            }
        }
    }

    #[test]
    fn modulus_pow() {
        let field = f7();
        let h = Polynomial::from_u64_coeffs(&field, &[1, 0, 1]);
        let m = Modulus::new(&h);
        let x = Polynomial::x(&field);
        // x^4 = 1 mod x^2+1
        assert_eq!(
            m.pow(&x, &num_bigint::BigUint::from(4u32)),
            Polynomial::one(&field)
        );
    }
}
