//! Flat-slice arithmetic engine for extension towers.
//!
//! An element of tower level k is a contiguous `&[u64]` of internal (usually
//! Montgomery) base-field words; a polynomial with level-k coefficients is a
//! concatenation of such slices, lowest degree first. All functions here work
//! on these raw slices so that higher layers never allocate per coefficient.

use super::fp::FpCtx;
use num_bigint::BigUint;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Level {
    /// Degree of the defining modulus over the level below.
    pub degree: usize,
    /// Words per coefficient of the modulus, i.e. words of the level below.
    pub sub_words: usize,
    /// Monic modulus, `(degree + 1) * sub_words` words, leading coeff included.
    pub modulus: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct FieldInner {
    pub fp: FpCtx,
    pub levels: Vec<Level>,
    /// words[k] = number of base words of a level-k element; words[0] = 1.
    pub words: Vec<usize>,
}

impl FieldInner {
    pub fn base(p: u64) -> Self {
        FieldInner {
            fp: FpCtx::new(p),
            levels: Vec::new(),
            words: vec![1],
        }
    }

    pub fn top(&self) -> usize {
        self.levels.len()
    }

    pub fn top_words(&self) -> usize {
        self.words[self.top()]
    }

    /// Total extension degree over Fp (= words per top-level element).
    pub fn ext_degree(&self) -> usize {
        self.top_words()
    }

    pub fn extended(&self, modulus: Vec<u64>, degree: usize) -> Self {
        let sub_words = self.top_words();
        debug_assert_eq!(modulus.len(), (degree + 1) * sub_words);
        let mut levels = self.levels.clone();
        levels.push(Level {
            degree,
            sub_words,
            modulus,
        });
        let mut words = self.words.clone();
        words.push(sub_words * degree);
        FieldInner {
            fp: self.fp,
            levels,
            words,
        }
    }
}

#[inline]
pub(crate) fn is_zero(a: &[u64]) -> bool {
    a.iter().all(|&w| w == 0)
}

#[inline]
pub(crate) fn add_assign(fp: &FpCtx, a: &mut [u64], b: &[u64]) {
    for (x, &y) in a.iter_mut().zip(b) {
        *x = fp.add(*x, y);
    }
}

#[inline]
pub(crate) fn sub_assign(fp: &FpCtx, a: &mut [u64], b: &[u64]) {
    for (x, &y) in a.iter_mut().zip(b) {
        *x = fp.sub(*x, y);
    }
}

#[inline]
pub(crate) fn neg_assign(fp: &FpCtx, a: &mut [u64]) {
    for x in a.iter_mut() {
        *x = fp.neg(*x);
    }
}

pub(crate) fn one(inner: &FieldInner, level: usize) -> Vec<u64> {
    let mut v = vec![0; inner.words[level]];
    v[0] = inner.fp.one();
    v
}

/// Reduced product of two level-`level` elements.
pub(crate) fn mul(inner: &FieldInner, level: usize, a: &[u64], b: &[u64]) -> Vec<u64> {
    if level == 0 {
        return vec![inner.fp.mul(a[0], b[0])];
    }
    let lv = &inner.levels[level - 1];
    let w = lv.sub_words;
    let d = lv.degree;
    if d == 2 && is_zero(&lv.modulus[w..2 * w]) {
        // x^2 + m0 fast path (covers the deterministic Fp^2 modulus).
        let fp = &inner.fp;
        let (a0, a1) = a.split_at(w);
        let (b0, b1) = b.split_at(w);
        let t0 = mul(inner, level - 1, a0, b0);
        let t1 = mul(inner, level - 1, a1, b1);
        let mut sa = a0.to_vec();
        add_assign(fp, &mut sa, a1);
        let mut sb = b0.to_vec();
        add_assign(fp, &mut sb, b1);
        let mut t2 = mul(inner, level - 1, &sa, &sb);
        sub_assign(fp, &mut t2, &t0);
        sub_assign(fp, &mut t2, &t1);
        let m0 = &lv.modulus[0..w];
        let fold = mul(inner, level - 1, m0, &t1);
        let mut out = vec![0; 2 * w];
        out[0..w].copy_from_slice(&t0);
        sub_assign(fp, &mut out[0..w], &fold);
        out[w..2 * w].copy_from_slice(&t2);
        return out;
    }
    // Generic: schoolbook product of the coefficient vectors, then fold by
    // the monic modulus.
    let mut prod = pmul_schoolbook(inner, level - 1, a, b);
    reduce_by_modulus(inner, level - 1, &mut prod, &lv.modulus, d);
    prod.resize(d * w, 0);
    prod
}

/// In-place fold of a coefficient vector by a monic modulus of degree `d`
/// (coefficients at level `level`). After the call the first d coefficients
/// hold the remainder.
fn reduce_by_modulus(inner: &FieldInner, level: usize, c: &mut Vec<u64>, modulus: &[u64], d: usize) {
    let w = inner.words[level];
    let n = c.len() / w;
    if n <= d {
        return;
    }
    for i in (d..n).rev() {
        let coef = c[i * w..(i + 1) * w].to_vec();
        if is_zero(&coef) {
            continue;
        }
        for j in 0..d {
            let mj = &modulus[j * w..(j + 1) * w];
            if is_zero(mj) {
                continue;
            }
            let t = mul(inner, level, &coef, mj);
            sub_assign(&inner.fp, &mut c[(i - d + j) * w..(i - d + j + 1) * w], &t);
        }
        c[i * w..(i + 1) * w].fill(0);
    }
    c.truncate(d * w);
}

pub(crate) fn inv(inner: &FieldInner, level: usize, a: &[u64]) -> Option<Vec<u64>> {
    if is_zero(a) {
        return None;
    }
    if level == 0 {
        return inner.fp.inv(a[0]).map(|x| vec![x]);
    }
    let lv = &inner.levels[level - 1];
    // Extended Euclid of a against the level modulus, one level down.
    let (g, s, _) = pxgcd(inner, level - 1, a, &lv.modulus);
    let w = lv.sub_words;
    // The modulus is irreducible, so the gcd must be the constant 1.
    if pdeg(&g, w) != Some(0) {
        return None;
    }
    let ginv = inv(inner, level - 1, &g[0..w])?;
    let mut out = pscale(inner, level - 1, &s, &ginv);
    out.resize(lv.degree * w, 0);
    Some(out)
}

pub(crate) fn square(inner: &FieldInner, level: usize, a: &[u64]) -> Vec<u64> {
    mul(inner, level, a, a)
}

pub(crate) fn pow_big(inner: &FieldInner, level: usize, a: &[u64], exp: &BigUint) -> Vec<u64> {
    let mut acc = one(inner, level);
    if exp.bits() == 0 {
        return acc;
    }
    for i in (0..exp.bits()).rev() {
        acc = square(inner, level, &acc);
        if exp.bit(i) {
            acc = mul(inner, level, &acc, a);
        }
    }
    acc
}

// ---------------------------------------------------------------------------
// Dense polynomial layer: coefficient vectors over a given level.
// ---------------------------------------------------------------------------

/// Degree of a coefficient vector (None for zero). `w` = words per coeff.
pub(crate) fn pdeg(v: &[u64], w: usize) -> Option<usize> {
    let n = v.len() / w;
    (0..n).rev().find(|&i| !is_zero(&v[i * w..(i + 1) * w]))
}

pub(crate) fn pnormalize(v: &mut Vec<u64>, w: usize) {
    match pdeg(v, w) {
        Some(d) => v.truncate((d + 1) * w),
        None => v.clear(),
    }
}

fn pmul_schoolbook(inner: &FieldInner, level: usize, a: &[u64], b: &[u64]) -> Vec<u64> {
    let w = inner.words[level];
    let na = a.len() / w;
    let nb = b.len() / w;
    if na == 0 || nb == 0 {
        return Vec::new();
    }
    let mut out = vec![0; (na + nb - 1) * w];
    for i in 0..na {
        let ai = &a[i * w..(i + 1) * w];
        if is_zero(ai) {
            continue;
        }
        for j in 0..nb {
            let bj = &b[j * w..(j + 1) * w];
            if is_zero(bj) {
                continue;
            }
            let t = mul(inner, level, ai, bj);
            add_assign(&inner.fp, &mut out[(i + j) * w..(i + j + 1) * w], &t);
        }
    }
    out
}

const KARATSUBA_THRESHOLD: usize = 32;

/// Full polynomial product: schoolbook below degree 32, Karatsuba above.
pub(crate) fn pmul(inner: &FieldInner, level: usize, a: &[u64], b: &[u64]) -> Vec<u64> {
    let w = inner.words[level];
    let na = a.len() / w;
    let nb = b.len() / w;
    if na == 0 || nb == 0 {
        return Vec::new();
    }
    if na.min(nb) < KARATSUBA_THRESHOLD {
        return pmul_schoolbook(inner, level, a, b);
    }
    let m = na.max(nb).div_ceil(2);
    let split = |v: &[u64], n: usize| -> (Vec<u64>, Vec<u64>) {
        if n <= m {
            (v.to_vec(), Vec::new())
        } else {
            (v[..m * w].to_vec(), v[m * w..].to_vec())
        }
    };
    let (a0, a1) = split(a, na);
    let (b0, b1) = split(b, nb);
    let z0 = pmul(inner, level, &a0, &b0);
    let z2 = if a1.is_empty() || b1.is_empty() {
        Vec::new()
    } else {
        pmul(inner, level, &a1, &b1)
    };
    let mut sa = a0;
    padd_into(&inner.fp, &mut sa, &a1);
    let mut sb = b0;
    padd_into(&inner.fp, &mut sb, &b1);
    let mut z1 = pmul(inner, level, &sa, &sb);
    psub_into(&inner.fp, &mut z1, &z0);
    psub_into(&inner.fp, &mut z1, &z2);

    let mut out = vec![0; (na + nb - 1) * w];
    padd_at(&inner.fp, &mut out, &z0, 0);
    padd_at(&inner.fp, &mut out, &z1, m * w);
    padd_at(&inner.fp, &mut out, &z2, 2 * m * w);
    out
}

fn padd_at(fp: &FpCtx, out: &mut [u64], v: &[u64], offset: usize) {
    if v.is_empty() {
        return;
    }
    let end = (offset + v.len()).min(out.len());
    add_assign(fp, &mut out[offset..end], &v[..end - offset]);
    debug_assert!(v[end - offset..].iter().all(|&x| x == 0));
}

/// a += b, growing a as needed.
pub(crate) fn padd_into(fp: &FpCtx, a: &mut Vec<u64>, b: &[u64]) {
    if a.len() < b.len() {
        a.resize(b.len(), 0);
    }
    add_assign(fp, &mut a[..b.len()], b);
}

/// a -= b, growing a as needed.
pub(crate) fn psub_into(fp: &FpCtx, a: &mut Vec<u64>, b: &[u64]) {
    if a.len() < b.len() {
        a.resize(b.len(), 0);
    }
    sub_assign(fp, &mut a[..b.len()], b);
}

/// Multiply every coefficient by a level-`level` scalar.
pub(crate) fn pscale(inner: &FieldInner, level: usize, v: &[u64], s: &[u64]) -> Vec<u64> {
    let w = inner.words[level];
    let mut out = vec![0; v.len()];
    for i in 0..v.len() / w {
        let c = &v[i * w..(i + 1) * w];
        if !is_zero(c) {
            out[i * w..(i + 1) * w].copy_from_slice(&mul(inner, level, c, s));
        }
    }
    out
}

/// Classical long division: (quotient, remainder). Panics if b is zero.
pub(crate) fn pdivrem(inner: &FieldInner, level: usize, a: &[u64], b: &[u64]) -> (Vec<u64>, Vec<u64>) {
    let w = inner.words[level];
    let db = pdeg(b, w).expect("division by zero polynomial");
    let lead = &b[db * w..(db + 1) * w];
    let lead_inv = inv(inner, level, lead).expect("leading coefficient not invertible");
    let mut r = a.to_vec();
    pnormalize(&mut r, w);
    let da = match pdeg(&r, w) {
        Some(d) => d,
        None => return (Vec::new(), Vec::new()),
    };
    if da < db {
        return (Vec::new(), r);
    }
    let mut q = vec![0; (da - db + 1) * w];
    for i in (db..=da).rev() {
        let top = r[i * w..(i + 1) * w].to_vec();
        if is_zero(&top) {
            continue;
        }
        let qc = mul(inner, level, &top, &lead_inv);
        for j in 0..db {
            let bj = &b[j * w..(j + 1) * w];
            if is_zero(bj) {
                continue;
            }
            let t = mul(inner, level, &qc, bj);
            sub_assign(&inner.fp, &mut r[(i - db + j) * w..(i - db + j + 1) * w], &t);
        }
        r[i * w..(i + 1) * w].fill(0);
        q[(i - db) * w..(i - db + 1) * w].copy_from_slice(&qc);
    }
    pnormalize(&mut r, w);
    pnormalize(&mut q, w);
    (q, r)
}

/// Extended Euclid. Returns (g, s, t) with s*a + t*b = g, g monic (or zero).
pub(crate) fn pxgcd(
    inner: &FieldInner,
    level: usize,
    a: &[u64],
    b: &[u64],
) -> (Vec<u64>, Vec<u64>, Vec<u64>) {
    let w = inner.words[level];
    let mut r0 = a.to_vec();
    let mut r1 = b.to_vec();
    pnormalize(&mut r0, w);
    pnormalize(&mut r1, w);
    let mut s0 = vec![inner.fp.one()];
    s0.resize(w, 0);
    let mut s1: Vec<u64> = Vec::new();
    let mut t0: Vec<u64> = Vec::new();
    let mut t1 = vec![inner.fp.one()];
    t1.resize(w, 0);
    while !r1.is_empty() {
        let (q, r) = pdivrem(inner, level, &r0, &r1);
        let qs = pmul(inner, level, &q, &s1);
        let mut ns = s0.clone();
        psub_into(&inner.fp, &mut ns, &qs);
        pnormalize(&mut ns, w);
        let qt = pmul(inner, level, &q, &t1);
        let mut nt = t0.clone();
        psub_into(&inner.fp, &mut nt, &qt);
        pnormalize(&mut nt, w);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = ns;
        t0 = t1;
        t1 = nt;
    }
    if r0.is_empty() {
        return (r0, s0, t0);
    }
    // Normalize the gcd to be monic.
    let d = pdeg(&r0, w).unwrap();
    let lead = r0[d * w..(d + 1) * w].to_vec();
    if pdeg(&lead, w) == Some(0) && lead[0] == inner.fp.one() {
        return (r0, s0, t0);
    }
    let linv = inv(inner, level, &lead).expect("nonzero leading coefficient");
    (
        pscale(inner, level, &r0, &linv),
        pscale(inner, level, &s0, &linv),
        pscale(inner, level, &t0, &linv),
    )
}
