//! Polynomial factorization over finite fields: squarefree decomposition,
//! distinct-degree splitting, and probabilistic equal-degree splitting.
//! Randomized routines take an explicit seed and are deterministic given it.

use super::field::{Field, FieldElement};
use super::poly::{Modulus, Polynomial};
use num_bigint::BigUint;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Full factorization into monic irreducibles with multiplicities. The
/// product of factor^multiplicity equals the input up to its leading unit.
/// Output is sorted by (degree, canonical coefficients) so it is independent
/// of the random splitting order.
pub fn factor(f: &Polynomial, seed: u64) -> Vec<(Polynomial, usize)> {
    assert!(f.degree().map_or(false, |d| d >= 1), "factor needs degree >= 1");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<(Polynomial, usize)> = Vec::new();
    for (g, mult) in squarefree_decomposition(&f.monic()) {
        for (d, h) in distinct_degree_split(&g) {
            for irr in equal_degree_split(&h, d, &mut rng) {
                out.push((irr, mult));
            }
        }
    }
    out.sort_by(|a, b| poly_key(&a.0).cmp(&poly_key(&b.0)));
    out
}

/// Roots of f in its coefficient field, sorted canonically.
pub fn roots(f: &Polynomial, seed: u64) -> Vec<FieldElement> {
    let field = f.field().clone();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for (g, _) in squarefree_decomposition(&f.monic()) {
        let m = Modulus::new(&g);
        let xq = m.pow(&Polynomial::x(&field), &field.order());
        let lin = g.gcd(&(&xq - &Polynomial::x(&field)));
        if lin.degree() == Some(0) {
            continue;
        }
        for factor in equal_degree_split(&lin, 1, &mut rng) {
            out.push(-&factor.coeff(0));
        }
    }
    out.sort_by(|a, b| a.canonical_cmp(b));
    out.dedup();
    out
}

/// Rabin's irreducibility test.
pub fn is_irreducible(f: &Polynomial) -> bool {
    let n = match f.degree() {
        Some(n) if n >= 1 => n,
        _ => return false,
    };
    if n == 1 {
        return true;
    }
    let field = f.field().clone();
    let q = field.order();
    let m = Modulus::new(f);
    let x = Polynomial::x(&field);
    // x^{q^n} = x mod f
    let mut xq = x.clone();
    let mut powers = vec![x.clone()]; // powers[i] = x^{q^i} mod f
    for _ in 0..n {
        xq = frobenius_power(&m, &xq, &q);
        powers.push(xq.clone());
    }
    if powers[n] != m.reduce(&x) {
        return false;
    }
    for r in prime_divisors(n) {
        let g = f.gcd(&(&powers[n / r] - &x));
        if g.degree() != Some(0) {
            return false;
        }
    }
    true
}

fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// g -> g^q mod m by square-and-multiply.
fn frobenius_power(m: &Modulus, g: &Polynomial, q: &BigUint) -> Polynomial {
    m.pow(g, q)
}

fn poly_key(p: &Polynomial) -> (usize, Vec<u64>) {
    let mut flat = Vec::new();
    for c in p.coeffs() {
        flat.extend(c.canonical_coords());
    }
    (p.degree().map_or(0, |d| d + 1), flat)
}

/// Squarefree decomposition in characteristic p, including the f' = 0 case
/// where f is a p-th power in disguise.
fn squarefree_decomposition(f: &Polynomial) -> Vec<(Polynomial, usize)> {
    let mut out = Vec::new();
    sfd_inner(f, 1, &mut out);
    // merge repeated squarefree parts (possible after p-th root recursion)
    out.sort_by(|a, b| poly_key(&a.0).cmp(&poly_key(&b.0)).then(a.1.cmp(&b.1)));
    out
}

fn sfd_inner(f: &Polynomial, outer_mult: usize, out: &mut Vec<(Polynomial, usize)>) {
    if f.degree().map_or(true, |d| d == 0) {
        return;
    }
    let deriv = f.derivative();
    if deriv.is_zero() {
        let g = pth_root_poly(f);
        sfd_inner(&g, outer_mult * f.field().p() as usize, out);
        return;
    }
    let mut w = f.gcd(&deriv);
    let mut u = f.div_exact(&w).expect("gcd divides");
    let mut i = 1usize;
    while u.degree() != Some(0) {
        let y = u.gcd(&w);
        let piece = u.div_exact(&y).expect("gcd divides");
        if piece.degree().map_or(false, |d| d >= 1) {
            out.push((piece.monic(), i * outer_mult));
        }
        u = y;
        w = w.div_exact(&u).expect("gcd divides");
        i += 1;
    }
    if w.degree().map_or(false, |d| d >= 1) {
        // w collects the factors whose multiplicity is divisible by p
        let g = pth_root_poly(&w);
        sfd_inner(&g, outer_mult * f.field().p() as usize, out);
    }
}

/// For f = g(x^p), recover g. Coefficient-wise p-th root is a^(q/p).
fn pth_root_poly(f: &Polynomial) -> Polynomial {
    let field = f.field().clone();
    let p = field.p() as usize;
    let q_over_p = field.order() / BigUint::from(field.p());
    let d = f.degree().unwrap();
    debug_assert_eq!(d % p, 0);
    let coeffs: Vec<FieldElement> = (0..=d / p).map(|i| f.coeff(i * p).pow(&q_over_p)).collect();
    Polynomial::from_coeffs(&field, &coeffs)
}

/// Distinct-degree split of a squarefree monic polynomial: pairs (d, product
/// of all irreducible factors of degree d), ascending in d.
fn distinct_degree_split(f: &Polynomial) -> Vec<(usize, Polynomial)> {
    let field = f.field().clone();
    let q = field.order();
    let x = Polynomial::x(&field);
    let mut h = f.clone();
    let mut out = Vec::new();
    let mut d = 0usize;
    let mut xqd = x.clone();
    while h.degree().map_or(false, |deg| deg >= 1) {
        d += 1;
        if h.degree().unwrap() < 2 * d {
            out.push((h.degree().unwrap(), h.clone()));
            break;
        }
        let m = Modulus::new(&h);
        xqd = frobenius_power(&m, &m.reduce(&xqd), &q);
        let g = h.gcd(&(&xqd - &x));
        if g.degree().map_or(false, |deg| deg >= 1) {
            out.push((d, g.clone()));
            h = h.div_exact(&g).expect("gcd divides");
        }
    }
    out
}

/// Cantor-Zassenhaus equal-degree splitting: f squarefree monic, all factors
/// of degree d. Returns the list of irreducible factors.
fn equal_degree_split(f: &Polynomial, d: usize, rng: &mut ChaCha8Rng) -> Vec<Polynomial> {
    let deg = f.degree().unwrap();
    if deg == d {
        return vec![f.clone()];
    }
    let (a, b) = edf_split_once(f, d, rng);
    let mut out = equal_degree_split(&a, d, rng);
    out.extend(equal_degree_split(&b, d, rng));
    out
}

/// One random split of f into two nontrivial coprime parts.
fn edf_split_once(f: &Polynomial, d: usize, rng: &mut ChaCha8Rng) -> (Polynomial, Polynomial) {
    let field = f.field().clone();
    let deg = f.degree().unwrap();
    let exp = (field.order().pow(d as u32) - BigUint::one()) >> 1;
    let m = Modulus::new(f);
    loop {
        let r = random_poly_below(&field, deg, rng);
        if r.degree().map_or(true, |dd| dd < 1) {
            continue;
        }
        let pow = m.pow(&r, &exp);
        let g = f.gcd(&(&pow - &Polynomial::one(&field)));
        if let Some(dg) = g.degree() {
            if dg >= 1 && dg < deg {
                let other = f.div_exact(&g).expect("gcd divides");
                return (g, other);
            }
        }
    }
}

fn random_poly_below(field: &Field, deg_bound: usize, rng: &mut ChaCha8Rng) -> Polynomial {
    let n = rng.gen_range(1..deg_bound.max(2));
    let coeffs: Vec<FieldElement> = (0..=n).map(|_| field.random(rng)).collect();
    Polynomial::from_coeffs(field, &coeffs)
}

/// Extract a single irreducible factor of minimal degree. When all factors
/// are known to share one degree (the supersingular division-polynomial
/// case), `degree_hint` skips the distinct-degree scan. Falls back to the
/// scan if the hinted extraction does not verify.
pub(crate) fn min_degree_irreducible_factor(
    f: &Polynomial,
    rng: &mut ChaCha8Rng,
    degree_hint: Option<usize>,
) -> Polynomial {
    let f = f.monic();
    if let Some(k) = degree_hint {
        if f.degree() == Some(k) {
            return f;
        }
        if f.degree().map_or(false, |d| d % k == 0) {
            if let Some(g) = extract_factor_of_degree(&f, k, rng) {
                return g;
            }
        }
    }
    // Distinct-degree scan to the first nonempty degree, then split there.
    let field = f.field().clone();
    let q = field.order();
    let x = Polynomial::x(&field);
    let m = Modulus::new(&f);
    let mut xqd = x.clone();
    let deg = f.degree().unwrap();
    for d in 1..=deg {
        if 2 * d > deg {
            break;
        }
        xqd = frobenius_power(&m, &xqd, &q);
        let g = f.gcd(&(&xqd - &x));
        if g.degree().map_or(false, |dd| dd >= 1) {
            return extract_factor_of_degree(&g, d, rng)
                .expect("distinct-degree component splits");
        }
    }
    f // irreducible
}

/// Repeatedly split, following the smallest piece, until one factor of the
/// exact degree appears; verifies irreducibility before returning.
fn extract_factor_of_degree(
    f: &Polynomial,
    d: usize,
    rng: &mut ChaCha8Rng,
) -> Option<Polynomial> {
    let mut cur = f.clone();
    for _ in 0..200 {
        let deg = cur.degree().unwrap();
        if deg == d {
            return if is_irreducible(&cur) { Some(cur) } else { None };
        }
        if deg < d || deg % d != 0 {
            return None;
        }
        let (a, b) = edf_split_once(&cur, d, rng);
        cur = if a.degree() <= b.degree() { a } else { b };
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f7() -> Field {
        Field::prime(7).unwrap()
    }

    #[test]
    fn factor_quadratics() {
        let f = f7();
        // x^2 - 1 = (x-1)(x+1)
        let p = Polynomial::from_u64_coeffs(&f, &[6, 0, 1]);
        let fs = factor(&p, 0);
        assert_eq!(fs.len(), 2);
        let expect1 = Polynomial::from_u64_coeffs(&f, &[6, 1]); // x - 1
        let expect2 = Polynomial::from_u64_coeffs(&f, &[1, 1]); // x + 1
        assert!(fs.iter().any(|(g, m)| *m == 1 && g == &expect1));
        assert!(fs.iter().any(|(g, m)| *m == 1 && g == &expect2));
        // x^2 + 1 is irreducible mod 7 (-1 is a non-residue)
        let q = Polynomial::from_u64_coeffs(&f, &[1, 0, 1]);
        let fq = factor(&q, 0);
        assert_eq!(fq.len(), 1);
        assert_eq!(fq[0].1, 1);
        assert_eq!(fq[0].0, q);
        assert!(is_irreducible(&q));
        assert!(!is_irreducible(&p));
    }

    #[test]
    fn factor_reconstructs_input() {
        use rand::Rng;
        let field = Field::prime(431).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for trial in 0..30 {
            let deg = rng.gen_range(1..10);
            let coeffs: Vec<FieldElement> = (0..=deg).map(|_| field.random(&mut rng)).collect();
            let p = Polynomial::from_coeffs(&field, &coeffs);
            if p.degree().map_or(true, |d| d < 1) {
                continue;
            }
            let fs = factor(&p, trial);
            let mut prod = Polynomial::constant(&p.leading_coeff());
            for (g, m) in &fs {
                assert!(is_irreducible(g), "factor must be irreducible");
                assert!(g.is_monic());
                for _ in 0..*m {
                    prod = &prod * g;
                }
            }
            assert_eq!(prod, p);
        }
    }

    #[test]
    fn factor_with_multiplicities() {
        let f = f7();
        // (x-1)^2 (x+2)^3
        let a = Polynomial::from_u64_coeffs(&f, &[6, 1]);
        let b = Polynomial::from_u64_coeffs(&f, &[2, 1]);
        let p = &(&a * &a) * &(&(&b * &b) * &b);
        let fs = factor(&p, 0);
        assert_eq!(fs.len(), 2);
        assert!(fs.iter().any(|(g, m)| g == &a && *m == 2));
        assert!(fs.iter().any(|(g, m)| g == &b && *m == 3));
    }

    #[test]
    fn pth_power_factorization() {
        let f = f7();
        // (x+3)^7 = x^7 + 3^7 = x^7 + 3 mod 7 has zero derivative
        let p = Polynomial::from_u64_coeffs(&f, &[3, 1]);
        let mut pow = Polynomial::one(&f);
        for _ in 0..7 {
            pow = &pow * &p;
        }
        assert!(pow.derivative().is_zero());
        let fs = factor(&pow, 0);
        assert_eq!(fs.len(), 1);
        assert_eq!(fs[0], (p, 7));
    }

    #[test]
    fn roots_of_cubic() {
        let f = f7();
        // x^3 - x = x(x-1)(x+1)
        let p = Polynomial::from_u64_coeffs(&f, &[0, 6, 0, 1]);
        let rs = roots(&p, 0);
        let got: Vec<u64> = rs.iter().map(|r| r.canonical_coords()[0]).collect();
        assert_eq!(got, vec![0, 1, 6]);
    }

    #[test]
    fn roots_in_quadratic_extension() {
        let f2 = f7().quadratic_extension().unwrap();
        // x^2 + 1 splits over F_49 with roots +-i
        let p = Polynomial::from_u64_coeffs(&f2, &[1, 0, 1]);
        let rs = roots(&p, 0);
        assert_eq!(rs.len(), 2);
        for r in &rs {
            assert!((&(r * r) + &f2.one()).is_zero());
        }
    }

    #[test]
    fn min_degree_extraction() {
        let field = Field::prime(431).unwrap().quadratic_extension().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        // product of two linears and an irreducible quadratic
        let a = Polynomial::linear_monic(&field.from_u64(5));
        let b = Polynomial::linear_monic(&field.tower_generator());
        let mut c = Polynomial::from_u64_coeffs(&field, &[1, 0, 1]);
        while !is_irreducible(&c) {
            let r = field.random(&mut rng);
            c = &(&Polynomial::x(&field) * &Polynomial::x(&field))
                + &Polynomial::constant(&r);
        }
        let p = &(&a * &b) * &c;
        let g = min_degree_irreducible_factor(&p, &mut rng, None);
        assert_eq!(g.degree(), Some(1));
        assert!(p.rem(&g).is_zero());
        let g2 = min_degree_irreducible_factor(&c, &mut rng, Some(2));
        assert_eq!(g2, c.monic());
    }
}
