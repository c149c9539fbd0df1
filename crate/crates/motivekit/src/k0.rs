//! The Grothendieck ring of the cyclic tensor subcategory generated by a
//! class of period n, presented as ℤ[t]/⟨g⟩ with
//! g(t) = (1−t)·∏ᵢ(1+t+⋯+t^{pᵢ^{rᵢ}−1}) for n = ∏ᵢ pᵢ^{rᵢ}.
//!
//! Because g has leading coefficient −1, division with remainder works over
//! ℤ and the reduced remainder is a genuine normal form, so equality in the
//! quotient ring is decidable by structural comparison.

use crate::arith;
use crate::poly::IntPolynomial;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// ℤ[t]/⟨g⟩ for the period-derived generator g.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct K0Ring {
    period: u64,
    factorization: Vec<(u64, u32)>,
    generator: IntPolynomial,
}

/// Build the quotient ring for a class of the given period. Period 1 yields
/// g = 1 − t.
pub fn generator(per: u64) -> Result<K0Ring> {
    if per == 0 {
        return Err(Error::Precondition("period must be positive".into()));
    }
    let factorization = arith::factorize(per);
    let mut g = IntPolynomial::new(vec![1, -1]);
    for &(p, r) in &factorization {
        let ones = IntPolynomial::new(vec![1; p.pow(r) as usize]);
        g = &g * &ones;
    }
    debug_assert_eq!(g.leading_coeff(), -1);
    debug_assert_eq!(g.eval(1), 0);
    Ok(K0Ring { period: per, factorization, generator: g })
}

impl K0Ring {
    pub fn period(&self) -> u64 {
        self.period
    }

    pub fn factorization(&self) -> &[(u64, u32)] {
        &self.factorization
    }

    pub fn generator_poly(&self) -> &IntPolynomial {
        &self.generator
    }

    /// Normal form of `p` in the quotient: the remainder mod g, of degree
    /// strictly below deg g.
    pub fn reduce(&self, p: &IntPolynomial) -> IntPolynomial {
        p.div_rem_unit(&self.generator)
            .expect("generator has unit leading coefficient")
            .1
    }

    /// The class of ⊕ⱼ U(A^{⊗sⱼ}) for an exponent multiset {sⱼ}.
    pub fn class_of_exponents(&self, exponents: &[u64]) -> IntPolynomial {
        let mut sum = IntPolynomial::zero();
        for &s in exponents {
            sum = &sum + &IntPolynomial::monomial(1, s as usize);
        }
        self.reduce(&sum)
    }

    /// ℤ-rank of the quotient: deg g = Σᵢ(pᵢ^{rᵢ}−1) + 1.
    pub fn rank(&self) -> u64 {
        self.generator.degree().expect("generator is nonzero") as u64
    }
}

// --- ℚ[t] helpers for the kernel identity -------------------------------
//
// ℤ[t] is not Euclidean, so the lcm of the kernel generators is computed
// over ℚ[t] with exact big-rational coefficients and only then cleared to a
// primitive integer polynomial.

type QPoly = Vec<BigRational>;

fn qpoly_trim(p: &mut QPoly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn qpoly_is_zero(p: &QPoly) -> bool {
    p.is_empty()
}

fn qpoly_mul(a: &QPoly, b: &QPoly) -> QPoly {
    if qpoly_is_zero(a) || qpoly_is_zero(b) {
        return vec![];
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn qpoly_rem(a: &QPoly, b: &QPoly) -> QPoly {
    let mut rem = a.clone();
    qpoly_trim(&mut rem);
    let db = b.len() - 1;
    let lead = b.last().expect("nonzero divisor");
    while rem.len() > db {
        let q = rem.last().unwrap() / lead;
        let k = rem.len() - 1 - db;
        for (i, c) in b.iter().enumerate() {
            let v = &q * c;
            rem[k + i] -= v;
        }
        qpoly_trim(&mut rem);
        if rem.len() <= db {
            break;
        }
    }
    rem
}

fn qpoly_div_exact(a: &QPoly, b: &QPoly) -> QPoly {
    let mut rem = a.clone();
    qpoly_trim(&mut rem);
    let db = b.len() - 1;
    let lead = b.last().expect("nonzero divisor");
    let mut quot = vec![BigRational::zero(); rem.len().saturating_sub(db)];
    while rem.len() > db {
        let q = rem.last().unwrap() / lead;
        let k = rem.len() - 1 - db;
        quot[k] = q.clone();
        for (i, c) in b.iter().enumerate() {
            let v = &q * c;
            rem[k + i] -= v;
        }
        qpoly_trim(&mut rem);
    }
    debug_assert!(qpoly_is_zero(&rem), "exact division left a remainder");
    quot
}

fn qpoly_monic(mut p: QPoly) -> QPoly {
    qpoly_trim(&mut p);
    if let Some(lead) = p.last().cloned() {
        for c in &mut p {
            *c /= lead.clone();
        }
    }
    p
}

fn qpoly_gcd(a: &QPoly, b: &QPoly) -> QPoly {
    let (mut x, mut y) = (a.clone(), b.clone());
    qpoly_trim(&mut x);
    qpoly_trim(&mut y);
    while !qpoly_is_zero(&y) {
        let r = qpoly_rem(&x, &y);
        x = y;
        y = r;
    }
    qpoly_monic(x)
}

fn qpoly_to_primitive_int(p: &QPoly) -> IntPolynomial {
    if qpoly_is_zero(p) {
        return IntPolynomial::zero();
    }
    let mut denom_lcm = BigInt::one();
    for c in p {
        denom_lcm = num_integer::lcm(denom_lcm, c.denom().clone());
    }
    let ints: Vec<BigInt> = p.iter().map(|c| c.numer() * (&denom_lcm / c.denom())).collect();
    let mut content = BigInt::zero();
    for c in &ints {
        content = num_integer::gcd(content, c.abs());
    }
    let sign = if ints.last().unwrap().is_negative() { -1 } else { 1 };
    let coeffs = ints
        .iter()
        .map(|c| {
            let v = c / &content * sign;
            i64::try_from(v).expect("coefficient fits in i64")
        })
        .collect();
    IntPolynomial::new(coeffs)
}

/// Verify the kernel identity behind the quotient presentation: the monic
/// lcm over ℚ[t] of {1 − t^{pᵢ^{rᵢ}}}, cleared to a primitive integer
/// polynomial, must equal ±g(t).
pub fn kernel_identity_check(per: u64) -> Result<bool> {
    if per < 2 {
        return Err(Error::Precondition("kernel identity needs period ≥ 2".into()));
    }
    let ring = generator(per)?;
    let mut lcm: QPoly = vec![BigRational::one()];
    for &(p, r) in ring.factorization() {
        let mut f = vec![BigInt::from(0); p.pow(r) as usize + 1];
        f[0] = BigInt::from(1);
        f[p.pow(r) as usize] = BigInt::from(-1);
        let f: QPoly = f.into_iter().map(BigRational::from_integer).collect();
        let g = qpoly_gcd(&lcm, &f);
        lcm = qpoly_monic(qpoly_div_exact(&qpoly_mul(&lcm, &f), &g));
    }
    let primitive = qpoly_to_primitive_int(&lcm);
    let g = ring.generator_poly();
    Ok(primitive == *g || primitive == -g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators() {
        assert_eq!(generator(2).unwrap().generator_poly(), &IntPolynomial::new(vec![1, 0, -1]));
        assert_eq!(generator(1).unwrap().generator_poly(), &IntPolynomial::new(vec![1, -1]));
        let g6 = generator(6).unwrap();
        assert_eq!(g6.generator_poly().degree(), Some(4));
        // (1−t)(1+t)(1+t+t²) = 1 + t − t³ − t⁴
        assert_eq!(g6.generator_poly(), &IntPolynomial::new(vec![1, 1, 0, -1, -1]));
        assert_eq!(g6.generator_poly().leading_coeff(), -1);
        assert_eq!(g6.generator_poly().eval(1), 0);
        assert!(generator(0).is_err());
    }

    #[test]
    fn reduction() {
        let r2 = generator(2).unwrap();
        assert_eq!(r2.reduce(&IntPolynomial::monomial(1, 3)), IntPolynomial::monomial(1, 1));
        let r6 = generator(6).unwrap();
        assert_eq!(
            r6.reduce(&IntPolynomial::new(vec![0, 0, 0, 1, 1])),
            IntPolynomial::new(vec![1, 1])
        );
        assert_eq!(r6.reduce(r6.generator_poly()), IntPolynomial::zero());
    }

    #[test]
    fn classes() {
        let r6 = generator(6).unwrap();
        assert_eq!(r6.class_of_exponents(&[0, 1]), IntPolynomial::new(vec![1, 1]));
        assert_eq!(r6.class_of_exponents(&[3, 4]), IntPolynomial::new(vec![1, 1]));
        assert_eq!(r6.class_of_exponents(&[]), IntPolynomial::zero());
    }

    #[test]
    fn ranks() {
        assert_eq!(generator(6).unwrap().rank(), 4);
        assert_eq!(generator(8).unwrap().rank(), 8);
        assert_eq!(generator(30).unwrap().rank(), 8);
        assert_eq!(generator(1).unwrap().rank(), 1);
    }

    #[test]
    fn kernel_identity() {
        for per in [2u64, 4, 6, 12, 30, 60] {
            assert!(kernel_identity_check(per).unwrap(), "per = {per}");
        }
        assert!(kernel_identity_check(1).is_err());
    }

    #[test]
    fn quotient_ring_laws() {
        let r = generator(12).unwrap();
        let a = IntPolynomial::new(vec![3, 0, 1, 2]);
        let b = IntPolynomial::new(vec![0, 5, 0, 0, 0, 0, 0, 1, 4]);
        assert_eq!(r.reduce(&(&a * &b)), r.reduce(&(&r.reduce(&a) * &r.reduce(&b))));
        assert_eq!(r.reduce(&(&a + &b)), &r.reduce(&a) + &r.reduce(&b));
    }

    #[test]
    fn t_to_the_period_is_one() {
        for per in [1u64, 2, 6, 12, 30, 60] {
            let r = generator(per).unwrap();
            assert_eq!(
                r.reduce(&IntPolynomial::monomial(1, per as usize)),
                IntPolynomial::one(),
                "per = {per}"
            );
        }
    }
}
