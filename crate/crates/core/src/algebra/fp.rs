//! Word-sized prime field arithmetic.
//!
//! Residues mod p are stored in single machine words. For p < 2^63 all
//! arithmetic runs in Montgomery form with 128-bit intermediate products;
//! larger primes (up to 64 bits) fall back to plain residues reduced with
//! 128-bit division, which is slower but only used for correctness tests.

/// Deterministic Miller-Rabin, valid for all u64 inputs.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &q in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    // These witnesses are sufficient for every n < 3.3 * 10^24.
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod_u64(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul_mod_u64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[inline]
pub fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod_u64(acc, base, m);
        }
        base = mul_mod_u64(base, base, m);
        exp >>= 1;
    }
    acc
}

/// -p^{-1} mod 2^64 by Newton iteration.
const fn neg_inv_u64(p: u64) -> u64 {
    let mut x: u64 = 1;
    let mut i = 0;
    while i < 6 {
        x = x.wrapping_mul(2u64.wrapping_sub(p.wrapping_mul(x)));
        i += 1;
    }
    x.wrapping_neg()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    /// Montgomery form with R = 2^64, requires p < 2^63.
    Mont { p_inv: u64, r: u64, r2: u64 },
    /// Plain residues, 128-bit division per product.
    Plain,
}

/// Arithmetic context for F_p. Element representation is opaque: use
/// [`FpCtx::encode`] / [`FpCtx::decode`] at the boundary.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FpCtx {
    pub p: u64,
    kind: Kind,
}

impl FpCtx {
    pub fn new(p: u64) -> Self {
        debug_assert!(p > 2 && p % 2 == 1);
        let kind = if p < (1 << 63) {
            let r = ((1u128 << 64) % p as u128) as u64;
            let r2 = ((r as u128 * r as u128) % p as u128) as u64;
            Kind::Mont {
                p_inv: neg_inv_u64(p),
                r,
                r2,
            }
        } else {
            Kind::Plain
        };
        FpCtx { p, kind }
    }

    #[inline]
    fn redc(&self, t: u128) -> u64 {
        match self.kind {
            Kind::Mont { p_inv, .. } => {
                let m = (t as u64).wrapping_mul(p_inv);
                let t = ((t + m as u128 * self.p as u128) >> 64) as u64;
                if t >= self.p {
                    t - self.p
                } else {
                    t
                }
            }
            Kind::Plain => unreachable!(),
        }
    }

    /// Canonical residue -> internal representation.
    #[inline]
    pub fn encode(&self, a: u64) -> u64 {
        debug_assert!(a < self.p);
        match self.kind {
            Kind::Mont { r2, .. } => self.redc(a as u128 * r2 as u128),
            Kind::Plain => a,
        }
    }

    /// Internal representation -> canonical residue in [0, p).
    #[inline]
    pub fn decode(&self, a: u64) -> u64 {
        match self.kind {
            Kind::Mont { .. } => self.redc(a as u128),
            Kind::Plain => a,
        }
    }

    #[inline]
    pub fn zero(&self) -> u64 {
        0
    }

    #[inline]
    pub fn one(&self) -> u64 {
        match self.kind {
            Kind::Mont { r, .. } => r,
            Kind::Plain => 1,
        }
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let (s, carry) = a.overflowing_add(b);
        if carry || s >= self.p {
            s.wrapping_sub(self.p)
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        let (d, borrow) = a.overflowing_sub(b);
        if borrow {
            d.wrapping_add(self.p)
        } else {
            d
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        match self.kind {
            Kind::Mont { .. } => self.redc(a as u128 * b as u128),
            Kind::Plain => mul_mod_u64(a, b, self.p),
        }
    }

    pub fn pow(&self, base: u64, mut exp: u64) -> u64 {
        let mut acc = self.one();
        let mut b = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            exp >>= 1;
        }
        acc
    }

    /// Inverse by Fermat. Returns None for zero.
    pub fn inv(&self, a: u64) -> Option<u64> {
        if a == 0 {
            return None;
        }
        Some(self.pow(a, self.p - 2))
    }
}
