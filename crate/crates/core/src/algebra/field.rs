//! Field descriptors and elements for towers over a word-sized prime.
//!
//! A [`Field`] describes Fp, Fp^2, or any further extension built as a chain
//! of quotients by monic irreducible polynomials. The quadratic extension of
//! Fp is always constructed with a deterministic modulus (x^2 + 1 when
//! p = 3 mod 4, otherwise x^2 - n for the smallest quadratic non-residue n),
//! so serialized data is portable across runs.

use super::fp::{is_prime_u64, FpCtx};
use super::poly::Polynomial;
use super::tower::{self, FieldInner};
use super::AlgebraError;
use num_bigint::BigUint;
use num_traits::One;
use std::fmt;
use std::sync::Arc;

#[derive(Clone)]
pub struct Field {
    inner: Arc<FieldInner>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner == other.inner
    }
}
impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Field(p={}, ext_degree={})", self.p(), self.ext_degree())
    }
}

impl Field {
    /// The prime field Fp for an odd prime p > 3.
    pub fn prime(p: u64) -> Result<Field, AlgebraError> {
        if p <= 3 || !is_prime_u64(p) {
            return Err(AlgebraError::BadCharacteristic(p));
        }
        Ok(Field {
            inner: Arc::new(FieldInner::base(p)),
        })
    }

    pub(crate) fn from_inner(inner: FieldInner) -> Field {
        Field {
            inner: Arc::new(inner),
        }
    }

    pub(crate) fn inner(&self) -> &FieldInner {
        &self.inner
    }

    pub fn p(&self) -> u64 {
        self.inner.fp.p
    }

    pub(crate) fn fp(&self) -> &FpCtx {
        &self.inner.fp
    }

    /// Extension degree over Fp.
    pub fn ext_degree(&self) -> usize {
        self.inner.ext_degree()
    }

    /// Number of tower levels above Fp (0 for Fp itself, 1 for Fp^2, ...).
    pub fn tower_height(&self) -> usize {
        self.inner.top()
    }

    /// Field order p^ext_degree.
    pub fn order(&self) -> BigUint {
        BigUint::from(self.p()).pow(self.ext_degree() as u32)
    }

    pub fn is_prime_field(&self) -> bool {
        self.inner.top() == 0
    }

    /// The canonical quadratic extension Fp^2 of a prime field.
    pub fn quadratic_extension(&self) -> Result<Field, AlgebraError> {
        if !self.is_prime_field() {
            return Err(AlgebraError::BadModulus);
        }
        let fp = &self.inner.fp;
        let p = fp.p;
        let m0 = if p % 4 == 3 {
            1 // x^2 + 1
        } else {
            // x^2 - n, n the smallest quadratic non-residue.
            let mut n = 2;
            while fp.pow(fp.encode(n), (p - 1) / 2) == fp.one() {
                n += 1;
            }
            p - n
        };
        let modulus = vec![fp.encode(m0), 0, fp.one()];
        Ok(Field::from_inner(self.inner.extended(modulus, 2)))
    }

    /// Extend by a monic polynomial of degree >= 2 with coefficients in this
    /// field. The caller is responsible for irreducibility.
    pub fn extend(&self, modulus: &Polynomial) -> Result<Field, AlgebraError> {
        if modulus.field() != self {
            return Err(AlgebraError::FieldMismatch);
        }
        let d = match modulus.degree() {
            Some(d) if d >= 2 => d,
            _ => return Err(AlgebraError::BadModulus),
        };
        if !modulus.is_monic() {
            return Err(AlgebraError::BadModulus);
        }
        Ok(Field::from_inner(
            self.inner.extended(modulus.words().to_vec(), d),
        ))
    }

    /// True if `other`'s tower is a prefix of this one (same p).
    pub fn is_extension_of(&self, other: &Field) -> bool {
        self.p() == other.p()
            && self.inner.levels.len() >= other.inner.levels.len()
            && self.inner.levels[..other.inner.levels.len()] == other.inner.levels[..]
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            field: self.clone(),
            w: vec![0; self.inner.top_words()],
        }
    }

    pub fn one(&self) -> FieldElement {
        FieldElement {
            field: self.clone(),
            w: tower::one(&self.inner, self.inner.top()),
        }
    }

    /// The image of the integer n in this field.
    pub fn from_u64(&self, n: u64) -> FieldElement {
        let mut e = self.zero();
        e.w[0] = self.inner.fp.encode(n % self.p());
        e
    }

    pub fn from_i64(&self, n: i64) -> FieldElement {
        let v = self.from_u64(n.unsigned_abs());
        if n < 0 {
            -&v
        } else {
            v
        }
    }

    /// Element from canonical coordinates over Fp, low tower index first.
    /// Shorter vectors are zero-padded.
    pub fn from_coords(&self, coords: &[u64]) -> Result<FieldElement, AlgebraError> {
        if coords.len() > self.inner.top_words() {
            return Err(AlgebraError::NotInSubfield);
        }
        let mut e = self.zero();
        for (i, &c) in coords.iter().enumerate() {
            if c >= self.p() {
                return Err(AlgebraError::BadCoordinate(c));
            }
            e.w[i] = self.inner.fp.encode(c);
        }
        Ok(e)
    }

    /// The generator of the top tower level (the class of the variable), e.g.
    /// i in Fp^2 or t in Fp^2[t]/(f).
    pub fn tower_generator(&self) -> FieldElement {
        let mut e = self.zero();
        let top = self.inner.top();
        assert!(top > 0, "prime field has no tower generator");
        let sub = self.inner.words[top - 1];
        e.w[sub] = self.inner.fp.one();
        e
    }

    pub fn random<R: rand::Rng>(&self, rng: &mut R) -> FieldElement {
        let p = self.p();
        let mut e = self.zero();
        for w in e.w.iter_mut() {
            *w = self.inner.fp.encode(rng.gen_range(0..p));
        }
        e
    }
}

/// An element of a [`Field`], stored as flattened internal words.
#[derive(Clone)]
pub struct FieldElement {
    field: Field,
    w: Vec<u64>,
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        debug_assert!(self.field == other.field, "comparing across fields");
        self.w == other.w
    }
}
impl Eq for FieldElement {}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.canonical_coords())
    }
}

impl FieldElement {
    pub(crate) fn from_words(field: &Field, w: Vec<u64>) -> FieldElement {
        debug_assert_eq!(w.len(), field.inner().top_words());
        FieldElement {
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
        tower::is_zero(&self.w)
    }

    pub fn is_one(&self) -> bool {
        self == &self.field.one()
    }

    /// Canonical coordinates over Fp, low tower index first.
    pub fn canonical_coords(&self) -> Vec<u64> {
        self.w.iter().map(|&x| self.field.inner().fp.decode(x)).collect()
    }

    /// Deterministic total order on canonical coordinate vectors.
    pub fn canonical_cmp(&self, other: &FieldElement) -> std::cmp::Ordering {
        self.canonical_coords().cmp(&other.canonical_coords())
    }

    pub fn square(&self) -> FieldElement {
        let inner = self.field.inner();
        FieldElement::from_words(&self.field, tower::square(inner, inner.top(), &self.w))
    }

    pub fn inverse(&self) -> Result<FieldElement, AlgebraError> {
        let inner = self.field.inner();
        tower::inv(inner, inner.top(), &self.w)
            .map(|w| FieldElement::from_words(&self.field, w))
            .ok_or(AlgebraError::ZeroInverse)
    }

    pub fn pow(&self, exp: &BigUint) -> FieldElement {
        let inner = self.field.inner();
        FieldElement::from_words(&self.field, tower::pow_big(inner, inner.top(), &self.w, exp))
    }

    pub fn pow_u64(&self, exp: u64) -> FieldElement {
        self.pow(&BigUint::from(exp))
    }

    /// True if this element is a square (0 counts as a square).
    pub fn is_square(&self) -> bool {
        if self.is_zero() {
            return true;
        }
        let e = (self.field.order() - BigUint::one()) >> 1;
        self.pow(&e).is_one()
    }

    /// Tonelli-Shanks square root; the lexicographically smaller root by
    /// canonical coordinates, or None for non-squares.
    pub fn sqrt(&self) -> Option<FieldElement> {
        if self.is_zero() {
            return Some(self.clone());
        }
        if !self.is_square() {
            return None;
        }
        let field = &self.field;
        let q = field.order();
        let one = BigUint::one();
        // q - 1 = 2^s * m, m odd
        let mut m = q - &one;
        let mut s = 0u64;
        while !m.bit(0) {
            m >>= 1;
            s += 1;
        }
        // Deterministic search for a non-square, trying small integers first
        // and then small tower combinations.
        let z = (2u64..)
            .map(|k| {
                let mut e = field.zero();
                let p = field.p();
                let mut v = k;
                let mut i = 0;
                while v > 0 && i < e.w.len() {
                    e.w[i] = field.inner().fp.encode(v % p);
                    v /= p.max(2);
                    i += 1;
                }
                e
            })
            .find(|e| !e.is_zero() && !e.is_square())
            .expect("non-square exists in any finite field of odd order");

        let mut c = z.pow(&m);
        let mut t = self.pow(&m);
        let mut r = self.pow(&((&m + &one) >> 1));
        let mut level = s;
        while !t.is_one() {
            let mut i = 0u64;
            let mut t2 = t.clone();
            while !t2.is_one() {
                t2 = t2.square();
                i += 1;
            }
            let mut b = c.clone();
            for _ in 0..level - i - 1 {
                b = b.square();
            }
            r = &r * &b;
            c = b.square();
            t = &t * &c;
            level = i;
        }
        debug_assert!(r.square() == *self);
        let neg = -&r;
        if neg.canonical_cmp(&r) == std::cmp::Ordering::Less {
            Some(neg)
        } else {
            Some(r)
        }
    }

    /// Embed into an extension field whose tower has this field's as prefix.
    pub fn lift_to(&self, target: &Field) -> Result<FieldElement, AlgebraError> {
        if !target.is_extension_of(&self.field) {
            return Err(AlgebraError::FieldMismatch);
        }
        let mut w = vec![0; target.inner().top_words()];
        w[..self.w.len()].copy_from_slice(&self.w);
        Ok(FieldElement::from_words(target, w))
    }

    /// Project to a subfield; error if coordinates outside it are nonzero.
    pub fn descend_to(&self, target: &Field) -> Result<FieldElement, AlgebraError> {
        if !self.field.is_extension_of(target) {
            return Err(AlgebraError::FieldMismatch);
        }
        let n = target.inner().top_words();
        if !tower::is_zero(&self.w[n..]) {
            return Err(AlgebraError::NotInSubfield);
        }
        Ok(FieldElement::from_words(target, self.w[..n].to_vec()))
    }

    /// Frobenius x -> x^p.
    pub fn frobenius(&self) -> FieldElement {
        self.pow(&BigUint::from(self.field.p()))
    }

    /// Product with a small integer.
    pub fn scale_u64(&self, n: u64) -> FieldElement {
        self * &self.field.from_u64(n % self.field.p())
    }

    fn assert_same_field(&self, other: &FieldElement) {
        assert!(
            self.field == other.field,
            "field element arithmetic across distinct fields"
        );
    }
}

impl std::ops::Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        self.assert_same_field(rhs);
        let mut w = self.w.clone();
        tower::add_assign(self.field.fp(), &mut w, &rhs.w);
        FieldElement::from_words(&self.field, w)
    }
}

impl std::ops::Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        self.assert_same_field(rhs);
        let mut w = self.w.clone();
        tower::sub_assign(self.field.fp(), &mut w, &rhs.w);
        FieldElement::from_words(&self.field, w)
    }
}

impl std::ops::Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        self.assert_same_field(rhs);
        let inner = self.field.inner();
        FieldElement::from_words(&self.field, tower::mul(inner, inner.top(), &self.w, &rhs.w))
    }
}

impl std::ops::Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        let mut w = self.w.clone();
        tower::neg_assign(self.field.fp(), &mut w);
        FieldElement::from_words(&self.field, w)
    }
}
