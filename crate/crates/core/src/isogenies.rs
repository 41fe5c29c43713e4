//! Separable isogenies in standard form (u/v, c y s/t), built with Vélu's
//! formulas from kernel data, kernel polynomials for odd primes extracted by
//! factoring division polynomials, and validated chains of steps.

use crate::algebra::{factor, AlgebraError, FieldElement, Polynomial};
use crate::curves::{transport_curve, Curve, CurveError, DivPolyTable, Point};
use num_bigint::BigUint;
use num_traits::One;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, thiserror::Error)]
pub enum IsogenyError {
    #[error("kernel polynomial does not define an isogeny (map identity fails)")]
    InvalidKernel,
    #[error("kernel polynomial coefficients do not descend to the base field")]
    CoefficientLeak,
    #[error("domain/codomain mismatch between steps {0} and {1}")]
    BrokenChain(usize, usize),
    #[error("chain is not an endomorphism: last codomain differs from the first domain")]
    NotEndomorphism,
    #[error("ell must be an odd prime different from the characteristic, got {0}")]
    BadPrime(u64),
    #[error("operation requires j-invariant outside {{0, 1728}}")]
    BadJInvariant,
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// A separable isogeny in standard form: (x, y) -> (u(x)/v(x), c y s(x)/t(x))
/// with v the monic kernel-determined denominator and s/t = (u/v)'.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsogenyStep {
    domain: Curve,
    codomain: Curve,
    u: Polynomial,
    v: Polynomial,
    s: Polynomial,
    t: Polynomial,
    c: FieldElement,
    degree: u64,
    kernel: Polynomial,
}

impl IsogenyStep {
    pub fn domain(&self) -> &Curve {
        &self.domain
    }
    pub fn codomain(&self) -> &Curve {
        &self.codomain
    }
    pub fn u(&self) -> &Polynomial {
        &self.u
    }
    pub fn v(&self) -> &Polynomial {
        &self.v
    }
    pub fn s(&self) -> &Polynomial {
        &self.s
    }
    pub fn t(&self) -> &Polynomial {
        &self.t
    }
    pub fn c(&self) -> &FieldElement {
        &self.c
    }
    pub fn degree(&self) -> u64 {
        self.degree
    }
    pub fn kernel_polynomial(&self) -> &Polynomial {
        &self.kernel
    }

    /// Rebuild a step from serialized parts, recovering the kernel polynomial
    /// from v and validating the standard-form invariants.
    pub fn from_parts(
        domain: Curve,
        codomain: Curve,
        u: Polynomial,
        v: Polynomial,
        s: Polynomial,
        t: Polynomial,
        c: FieldElement,
    ) -> Result<IsogenyStep, IsogenyError> {
        let du = u.degree().ok_or(IsogenyError::InvalidKernel)?;
        let dv = v.degree().ok_or(IsogenyError::InvalidKernel)?;
        if du != dv + 1 || !v.is_monic() || c.is_zero() {
            return Err(IsogenyError::InvalidKernel);
        }
        let kernel = if du % 2 == 0 {
            // even-degree steps here are degree 2 with v = h
            v.clone()
        } else {
            monic_sqrt(&v).ok_or(IsogenyError::InvalidKernel)?
        };
        let step = IsogenyStep {
            domain,
            codomain,
            u,
            v,
            s,
            t,
            c,
            degree: du as u64,
            kernel,
        };
        step.validate()?;
        Ok(step)
    }

    /// Standard-form invariants: the derivative identity for s/t and the
    /// curve-equation transport identity.
    pub fn validate(&self) -> Result<(), IsogenyError> {
        // s/t = (u/v)' as an exact rational identity (cross-multiplied)
        let num = &(&self.u.derivative() * &self.v) - &(&self.u * &self.v.derivative());
        let lhs = &self.s * &(&self.v * &self.v);
        let rhs = &self.t * &num;
        if lhs != rhs {
            return Err(IsogenyError::InvalidKernel);
        }
        // v = h^2 / gcd(f, h)
        let f = self.domain.f_poly();
        let g = f.gcd(&self.kernel);
        let h2 = &self.kernel * &self.kernel;
        match h2.div_exact(&g) {
            Some(expect) if expect == self.v => {}
            _ => return Err(IsogenyError::InvalidKernel),
        }
        self.check_map_identity()
    }

    /// f_{E'} (u/v) = f_E (c s / t)^2 after clearing denominators.
    fn check_map_identity(&self) -> Result<(), IsogenyError> {
        let f_dom = self.domain.f_poly();
        let a2 = self.codomain.a();
        let b2 = self.codomain.b();
        let v2 = &self.v * &self.v;
        let v3 = &v2 * &self.v;
        let u3 = &(&self.u * &self.u) * &self.u;
        let rhs = &(&u3 + &(&self.u * &v2).scale(a2)) + &v3.scale(b2);
        let cs = self.s.scale(&self.c.square());
        let lhs = &(&(&f_dom * &cs) * &self.s) * &v3;
        if lhs == &rhs * &(&self.t * &self.t) {
            Ok(())
        } else {
            Err(IsogenyError::InvalidKernel)
        }
    }

    /// Evaluate at an affine-or-infinity point over any extension.
    pub fn evaluate(&self, p: &Point) -> Result<Point, IsogenyError> {
        let (x, y) = match p {
            Point::Infinity => return Ok(Point::Infinity),
            Point::Affine(x, y) => (x, y),
        };
        let field = x.field();
        let vx = self.v.eval_in_extension(x)?;
        if vx.is_zero() {
            return Ok(Point::Infinity);
        }
        let ux = self.u.eval_in_extension(x)?;
        let sx = self.s.eval_in_extension(x)?;
        let tx = self.t.eval_in_extension(x)?;
        let c = self.c.lift_to(field)?;
        let x_img = &ux * &vx.inverse()?;
        let y_img = &(&(&c * y) * &sx) * &tx.inverse()?;
        Ok(Point::Affine(x_img, y_img))
    }

    /// The standard-form constant recovered from leading coefficients:
    /// c_x^{-1} c_y with c_x from u and c_y from the y-numerator c*s,
    /// after normalizing the denominators monic.
    pub fn normalization_constant(&self) -> FieldElement {
        let cx = &self.u.leading_coeff()
            * &self.v.leading_coeff().inverse().expect("v nonzero");
        let cy = &(&self.c * &self.s.leading_coeff())
            * &self.t.leading_coeff().inverse().expect("t nonzero");
        &cx.inverse().expect("deg u = deg v + 1 forces nonzero lead") * &cy
    }

    /// Post-compose with the isomorphism (x, y) -> (w^-2 x, w^-3 y). The
    /// kernel is unchanged; u and s scale by w^-2 and c by w^-1.
    pub fn post_compose_isomorphism(&self, w: &FieldElement) -> Result<IsogenyStep, IsogenyError> {
        let wi = w.inverse()?;
        let w2 = wi.square();
        let codomain = transport_curve(&self.codomain, w)?;
        Ok(IsogenyStep {
            domain: self.domain.clone(),
            codomain,
            u: self.u.scale(&w2),
            v: self.v.clone(),
            s: self.s.scale(&w2),
            t: self.t.clone(),
            c: &self.c * &wi,
            degree: self.degree,
            kernel: self.kernel.clone(),
        })
    }
}

/// Monic square root of a monic even-degree polynomial, by matching
/// coefficients from the top; None if v is not a perfect square.
fn monic_sqrt(v: &Polynomial) -> Option<Polynomial> {
    let dv = v.degree()?;
    if dv % 2 != 0 || !v.is_monic() {
        return None;
    }
    let field = v.field().clone();
    let k = dv / 2;
    let mut h = vec![field.zero(); k + 1];
    h[k] = field.one();
    let two_inv = field.from_u64(2).inverse().ok()?;
    // coefficient of x^{2k - j} in h^2 determines h[k - j]
    for j in 1..=k {
        let mut acc = v.coeff(2 * k - j);
        for i in 1..j {
            acc = &acc - &(&h[k - i] * &h[k - (j - i)]);
        }
        h[k - j] = &acc * &two_inv;
    }
    let hp = Polynomial::from_coeffs(&field, &h);
    if &(&hp * &hp) == v {
        Some(hp)
    } else {
        None
    }
}

/// Vélu's construction of the normalized (c = 1) isogeny with kernel cut out
/// by the monic polynomial h. Odd-degree kernels use the u/v relation driven
/// by v'/v; degree 2 uses the order-2 tangent term.
pub fn velu_from_kernel(curve: &Curve, h: &Polynomial) -> Result<IsogenyStep, IsogenyError> {
    if !h.is_monic() {
        return Err(IsogenyError::InvalidKernel);
    }
    let field = curve.field().clone();
    let a = curve.a();
    let b = curve.b();
    let f = curve.f_poly();
    let k = h.degree().ok_or(IsogenyError::InvalidKernel)?;

    let two_torsion_kernel = k == 1 && f.eval(&(-&h.coeff(0))).is_zero();
    let (u, v, s, t, a2, b2, degree) = if two_torsion_kernel {
        let x0 = -&h.coeff(0);
        let tq = &x0.square().scale_u64(3) + a;
        // u/v = x + t_Q/(x - x0)
        let u = &(&Polynomial::x(&field) * h) + &Polynomial::constant(&tq);
        let v = h.clone();
        // (u/v)' = ((x-x0)^2 - t_Q) / (x-x0)^2
        let t = h * h;
        let s = &t - &Polynomial::constant(&tq);
        let a2 = a - &tq.scale_u64(5);
        let b2 = b - &(&x0 * &tq).scale_u64(7);
        (u, v, s, t, a2, b2, 2u64)
    } else {
        let ell = 2 * k as u64 + 1;
        // power sums of the roots of h via Newton's identities
        let e1 = -&h.coeff(k - 1);
        let e2 = if k >= 2 { h.coeff(k - 2) } else { field.zero() };
        let e3 = if k >= 3 { -&h.coeff(k - 3) } else { field.zero() };
        let p1 = e1.clone();
        let p2 = &(&e1 * &p1) - &e2.scale_u64(2);
        let p3 = &(&(&e1 * &p2) - &(&e2 * &p1)) + &e3.scale_u64(3);

        let v = h * h;
        let hp = h.derivative();
        let hpp = hp.derivative();
        // u = (ell x - sigma) h^2 - 2(3x^2 + A) h h' - 4 f (h h'' - h'^2),
        // sigma = 2 e1 the sum over all nonzero kernel points.
        let sigma = e1.scale_u64(2);
        let lin = Polynomial::from_coeffs(&field, &[-&sigma, field.from_u64(ell)]);
        let quad = Polynomial::from_coeffs(&field, &[a.clone(), field.zero(), field.from_u64(3)]);
        let term1 = &lin * &v;
        let term2 = (&quad * &(h * &hp)).scale(&field.from_u64(2));
        let term3 = (&f * &(&(h * &hpp) - &(&hp * &hp))).scale(&field.from_u64(4));
        let u = &(&term1 - &term2) - &term3;
        // s/t = (u/v)' = (u'h - 2uh') / h^3
        let s = &(&u.derivative() * h) - &(&u * &hp).scale(&field.from_u64(2));
        let t = &v * h;
        // A' = A - 5 * sum t_Q, B' = B - 7 * sum (u_Q + x_Q t_Q) over the
        // half-set of kernel representatives (t_Q doubled for order > 2).
        let sum_t = (&p2.scale_u64(3) + &a.scale_u64(k as u64)).scale_u64(2);
        let sum_w = &(&p3.scale_u64(10) + &(a * &p1).scale_u64(6)) + &b.scale_u64(4 * k as u64);
        let a2 = a - &sum_t.scale_u64(5);
        let b2 = b - &sum_w.scale_u64(7);
        (u, v, s, t, a2, b2, ell)
    };

    let codomain = Curve::new(&field, a2, b2).map_err(|_| IsogenyError::InvalidKernel)?;
    let step = IsogenyStep {
        domain: curve.clone(),
        codomain,
        u,
        v,
        s,
        t,
        c: field.one(),
        degree,
        kernel: h.clone(),
    };
    step.check_map_identity()?;
    Ok(step)
}

/// Order of p in (Z/ell)^x modulo +-1: the common degree of the irreducible
/// factors of psi_ell over Fp^2 for a supersingular curve.
fn frobenius_orbit_size(p: u64, ell: u64) -> usize {
    let p = p % ell;
    let mut cur = p;
    let mut j = 1;
    while cur != 1 && cur != ell - 1 {
        cur = (cur as u128 * p as u128 % ell as u128) as u64;
        j += 1;
    }
    j
}

/// Kernel polynomials of cyclic order-ell subgroups of a supersingular curve
/// over Fp^2, obtained by factoring psi_ell: take a minimal-degree
/// irreducible factor, lift a kernel point over the corresponding extension,
/// and form h = prod (x - x([i]P)). Returns `count` distinct polynomials
/// (the second one is extracted from psi_ell / h).
pub fn kernel_polynomials(
    curve: &Curve,
    ell: u64,
    count: usize,
    seed: u64,
) -> Result<Vec<Polynomial>, IsogenyError> {
    let mut table = DivPolyTable::new(curve);
    kernel_polynomials_with(&mut table, ell, count, seed)
}

pub fn kernel_polynomials_with(
    table: &mut DivPolyTable,
    ell: u64,
    count: usize,
    seed: u64,
) -> Result<Vec<Polynomial>, IsogenyError> {
    let curve = table.curve().clone();
    let field = curve.field().clone();
    let p = field.p();
    if ell < 3 || ell % 2 == 0 || ell == p || !crate::algebra::fp::is_prime_u64(ell) {
        return Err(IsogenyError::BadPrime(ell));
    }
    let j = curve.j_invariant();
    if j.is_zero() || j == field.from_u64(1728 % p) {
        return Err(IsogenyError::BadJInvariant);
    }
    assert!(count == 1 || count == 2, "count must be 1 or 2");

    let psi = table.odd(ell).monic();
    let hint = frobenius_orbit_size(p, ell);
    let mut working = psi;
    let mut out = Vec::new();
    for index in 0..count {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (ell << 8) ^ ((index as u64) << 20));
        let fmin = factor::min_degree_irreducible_factor(&working, &mut rng, Some(hint));
        let h = kernel_from_factor(&curve, &fmin, ell)?;
        working = working
            .div_exact(&h)
            .expect("kernel polynomial divides psi_ell");
        out.push(h);
    }
    Ok(out)
}

/// Build the kernel polynomial of the subgroup generated by a point whose
/// x-coordinate is a root of the irreducible factor `fmin`.
fn kernel_from_factor(
    curve: &Curve,
    fmin: &Polynomial,
    ell: u64,
) -> Result<Polynomial, IsogenyError> {
    let field = curve.field().clone();
    let (k_field, x0) = if fmin.degree() == Some(1) {
        (field.clone(), -&fmin.coeff(0))
    } else {
        let k = field.extend(fmin)?;
        let x = k.tower_generator();
        (k, x)
    };
    let rhs = curve.f_at(&x0)?;
    let gen = match rhs.sqrt() {
        Some(y) => Point::Affine(x0, y),
        None => {
            let m = Polynomial::from_coeffs(&k_field, &[-&rhs, k_field.zero(), k_field.one()]);
            let ext = k_field.extend(&m)?;
            Point::Affine(x0.lift_to(&ext)?, ext.tower_generator())
        }
    };
    let k = (ell as usize - 1) / 2;
    let mut multiples = Vec::with_capacity(k);
    let mut cur = gen.clone();
    for _ in 0..k {
        match &cur {
            Point::Affine(x, _) => multiples.push(x.clone()),
            Point::Infinity => return Err(IsogenyError::InvalidKernel),
        }
        cur = curve.add(&cur, &gen)?;
    }
    let coord_field = multiples[0].field().clone();
    let mut h = Polynomial::one(&coord_field);
    for x in &multiples {
        h = &h * &Polynomial::linear_monic(x);
    }
    h.descend_to(&field)
        .map_err(|_| IsogenyError::CoefficientLeak)
}

/// An ordered composition of isogeny steps based at `curve`; the empty chain
/// is the identity endomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    curve: Curve,
    steps: Vec<IsogenyStep>,
}

impl Chain {
    pub fn identity(curve: &Curve) -> Chain {
        Chain {
            curve: curve.clone(),
            steps: Vec::new(),
        }
    }

    pub fn new(curve: &Curve, steps: Vec<IsogenyStep>) -> Chain {
        Chain {
            curve: curve.clone(),
            steps,
        }
    }

    pub fn curve(&self) -> &Curve {
        &self.curve
    }

    pub fn steps(&self) -> &[IsogenyStep] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Total degree: the product of the step degrees.
    pub fn degree(&self) -> BigUint {
        let mut d = BigUint::one();
        for s in &self.steps {
            d *= BigUint::from(s.degree());
        }
        d
    }

    /// Domain/codomain chaining (exact coefficient equality) and closure.
    pub fn validate(&self) -> Result<(), IsogenyError> {
        let mut cur = &self.curve;
        for (i, s) in self.steps.iter().enumerate() {
            if s.domain() != cur {
                return Err(IsogenyError::BrokenChain(i.saturating_sub(1), i));
            }
            cur = s.codomain();
        }
        if cur != &self.curve {
            return Err(IsogenyError::NotEndomorphism);
        }
        Ok(())
    }

    /// Chain validation plus the per-step standard-form identities.
    pub fn validate_deep(&self) -> Result<(), IsogenyError> {
        self.validate()?;
        for s in &self.steps {
            s.validate()?;
        }
        Ok(())
    }

    /// Pointwise evaluation through every step.
    pub fn evaluate(&self, p: &Point) -> Result<Point, IsogenyError> {
        let mut cur = p.clone();
        for s in &self.steps {
            cur = s.evaluate(&cur)?;
        }
        Ok(cur)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Field;
    use crate::curves::is_supersingular;

    fn f431_2() -> Field {
        Field::prime(431).unwrap().quadratic_extension().unwrap()
    }

    /// A supersingular curve with j not in {0, 1728}: one 2-isogeny step away
    /// from y^2 = x^3 + x.
    fn test_curve() -> Curve {
        let f = f431_2();
        let e0 = Curve::new(&f, f.from_u64(1), f.zero()).unwrap();
        let roots = factor::roots(&e0.f_poly(), 0);
        for r in roots {
            let step = velu_from_kernel(&e0, &Polynomial::linear_monic(&r)).unwrap();
            let j = step.codomain().j_invariant();
            if !j.is_zero() && j != f.from_u64(1728 % 431) {
                return step.codomain().clone();
            }
        }
        panic!("no suitable neighbor");
    }

    #[test]
    fn velu_two_torsion_example() {
        // E: y^2 = x^3 + x over F7, h = x: u/v = x + 1/x
        let f = Field::prime(7).unwrap();
        let e = Curve::new(&f, f.from_u64(1), f.zero()).unwrap();
        let h = Polynomial::x(&f);
        let step = velu_from_kernel(&e, &h).unwrap();
        assert_eq!(step.degree(), 2);
        assert_eq!(step.u(), &Polynomial::from_u64_coeffs(&f, &[1, 0, 1]));
        assert_eq!(step.v(), &Polynomial::x(&f));
        assert!(step.c().is_one());
        // codomain y^2 = x^3 - 4x
        assert_eq!(step.codomain().a(), &f.from_i64(-4));
        assert!(step.codomain().b().is_zero());
        step.validate().unwrap();
    }

    #[test]
    fn velu_odd_degree_shape() {
        let e = test_curve();
        assert!(is_supersingular(&e, 1).unwrap());
        let hs = kernel_polynomials(&e, 3, 2, 0).unwrap();
        assert_eq!(hs.len(), 2);
        let psi3 = crate::curves::division_polynomial(&e, 3);
        for h in &hs {
            assert_eq!(h.degree(), Some(1));
            assert!(psi3.rem(h).is_zero(), "kernel divides psi_3");
            let step = velu_from_kernel(&e, h).unwrap();
            assert_eq!(step.degree(), 3);
            assert_eq!(step.u().degree(), Some(3));
            assert_eq!(step.v().degree(), Some(2));
            assert_eq!(step.v(), &(h * h));
            step.validate().unwrap();
        }
        // distinct kernels generate E[3]
        assert_eq!(hs[0].gcd(&hs[1]).degree(), Some(0));
    }

    #[test]
    fn kernel_polynomials_shape_ell5() {
        let e = test_curve();
        let hs = kernel_polynomials(&e, 5, 2, 3).unwrap();
        for h in &hs {
            assert_eq!(h.degree(), Some(2));
            let psi5 = crate::curves::division_polynomial(&e, 5);
            assert!(psi5.rem(h).is_zero());
            let step = velu_from_kernel(&e, h).unwrap();
            step.validate().unwrap();
            // kernel points map to infinity
            let mut rng = ChaCha8Rng::seed_from_u64(17);
            let kp = crate::curves::lift_root_to_point(&e, h, &mut rng);
            assert!(e.is_on_curve(&kp));
            assert!(e.scalar_mul_u64(5, &kp).unwrap().is_infinity());
            assert!(step.evaluate(&kp).unwrap().is_infinity());
        }
    }

    #[test]
    fn step_is_homomorphism_on_random_points() {
        let e = test_curve();
        let h = &kernel_polynomials(&e, 3, 1, 1).unwrap()[0];
        let step = velu_from_kernel(&e, h).unwrap();
        let f = e.field().clone();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let p = e.random_point(&f, &mut rng).unwrap();
            let q = e.random_point(&f, &mut rng).unwrap();
            let img_p = step.evaluate(&p).unwrap();
            let img_q = step.evaluate(&q).unwrap();
            assert!(step.codomain().is_on_curve(&img_p));
            let sum = e.add(&p, &q).unwrap();
            let img_sum = step.evaluate(&sum).unwrap();
            let expect = step.codomain().add(&img_p, &img_q).unwrap();
            assert_eq!(img_sum, expect);
        }
    }

    #[test]
    fn normalization_constant_tracks_isomorphism() {
        let e = test_curve();
        let h = &kernel_polynomials(&e, 3, 1, 2).unwrap()[0];
        let step = velu_from_kernel(&e, h).unwrap();
        assert!(step.normalization_constant().is_one());
        // leading coefficient of u equals the constant squared
        let f = e.field().clone();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..10 {
            let w = f.random(&mut rng);
            if w.is_zero() {
                continue;
            }
            let folded = step.post_compose_isomorphism(&w).unwrap();
            folded.validate().unwrap();
            let c = folded.normalization_constant();
            assert_eq!(c, w.inverse().unwrap());
            assert_eq!(folded.u().leading_coeff(), c.square());
        }
    }

    #[test]
    fn chain_validation() {
        let e = test_curve();
        assert!(Chain::identity(&e).validate().is_ok());
        assert_eq!(Chain::identity(&e).degree(), BigUint::one());
        // one step is not an endomorphism
        let h = &kernel_polynomials(&e, 3, 1, 4).unwrap()[0];
        let step = velu_from_kernel(&e, h).unwrap();
        let chain = Chain::new(&e, vec![step.clone()]);
        assert!(matches!(
            chain.validate(),
            Err(IsogenyError::NotEndomorphism)
        ));
        // swapped steps break the chain
        let h2 = &kernel_polynomials(step.codomain(), 3, 1, 5).unwrap()[0];
        let step2 = velu_from_kernel(step.codomain(), h2).unwrap();
        let bad = Chain::new(&e, vec![step2, step]);
        assert!(matches!(bad.validate(), Err(IsogenyError::BrokenChain(_, _))));
    }

    #[test]
    fn monic_sqrt_roundtrip() {
        let f = f431_2();
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for deg in [1usize, 2, 5] {
            let mut coeffs: Vec<FieldElement> = (0..deg).map(|_| f.random(&mut rng)).collect();
            coeffs.push(f.one());
            let h = Polynomial::from_coeffs(&f, &coeffs);
            let v = &h * &h;
            assert_eq!(monic_sqrt(&v).unwrap(), h);
        }
        assert!(monic_sqrt(&Polynomial::from_u64_coeffs(&f, &[1, 1, 0, 1])).is_none());
    }
}
