//! Gaussian binomial/multinomial polynomials, exact evaluation at roots of
//! unity via cyclotomic reduction, cyclic-sieving verification, and the
//! motivic decompositions of Severi–Brauer and twisted flag varieties.
//!
//! The twisted flag variety Flag(d₁,…,d_m; A) has motive
//! `(deg A choose d₁ ⋯ d_m)_{U(A)}`: the Gaussian multinomial evaluated at
//! the motive of A, i.e. the multiset with `coeff_e` copies of the class
//! `e·[A]`. The twisted Grassmannian Gr(d; A) is exposed as
//! Flag(d, deg−d; A), which reproduces the Severi–Brauer decomposition at
//! d = 1.

use crate::arith;
use crate::brauer::{self, BrauerClass, CyclicEquality};
use crate::motives::{self, CsaMotive, IsoDecision};
use crate::poly::IntPolynomial;
use crate::{Error, Result};

/// Rotation orders handled by the brute-force fixed-point enumeration.
const CSP_ENUMERATION_LIMIT: u32 = 20;

/// Shape of a flag decomposition: `n = deg(A)` with dimension steps `dims`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaussianSpec {
    n: u64,
    dims: Vec<u64>,
}

impl GaussianSpec {
    pub fn new(n: u64, dims: Vec<u64>) -> Result<Self> {
        if n == 0 || dims.is_empty() || dims.iter().any(|&d| d == 0) {
            return Err(Error::Precondition(
                "dimension steps must be positive and nonempty".into(),
            ));
        }
        if dims.iter().sum::<u64>() != n {
            return Err(Error::Precondition(format!(
                "dimension steps {dims:?} do not sum to {n}"
            )));
        }
        Ok(GaussianSpec { n, dims })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn dims(&self) -> &[u64] {
        &self.dims
    }
}

/// The Gaussian polynomial (n, m)_t by the Pascal recursion
/// (n,m) = (n−1,m−1) + t^m·(n−1,m), staying in ℤ[t] throughout.
pub fn gaussian_binomial(n: u64, m: u64) -> Result<IntPolynomial> {
    if m > n {
        return Err(Error::Precondition(format!("(n,m) = ({n},{m}) needs m ≤ n")));
    }
    // row-by-row DP over n' with entries for 0 ≤ m' ≤ min(n', m)
    let mut row = vec![IntPolynomial::one()];
    for np in 1..=n {
        let take = (np.min(m) + 1) as usize;
        let mut next = Vec::with_capacity(take);
        for mp in 0..take as u64 {
            let v = if mp == 0 || mp == np {
                IntPolynomial::one()
            } else {
                &row[(mp - 1) as usize] + &row[mp as usize].shift(mp as usize)
            };
            next.push(v);
        }
        row = next;
    }
    Ok(row[m as usize].clone())
}

/// The Gaussian multinomial ∏ₖ (d₁+⋯+d_k, d_k)_t.
pub fn gaussian_multinomial(spec: &GaussianSpec) -> Result<IntPolynomial> {
    let mut acc = IntPolynomial::one();
    let mut partial = 0u64;
    for &d in &spec.dims {
        partial += d;
        acc = &acc * &gaussian_binomial(partial, d)?;
    }
    Ok(acc)
}

/// The d-th cyclotomic polynomial Φ_d = (t^d − 1)/∏_{e|d, e<d} Φ_e.
pub fn cyclotomic(d: u64) -> Result<IntPolynomial> {
    if d == 0 {
        return Err(Error::Precondition("cyclotomic index must be positive".into()));
    }
    let mut num = IntPolynomial::monomial(1, d as usize);
    num = &num - &IntPolynomial::one();
    for e in 1..d {
        if d % e == 0 {
            let phi = cyclotomic(e)?;
            let (q, r) = num.div_rem_unit(&phi)?;
            debug_assert!(r.is_zero());
            num = q;
        }
    }
    Ok(num)
}

/// Exact value p(ω) for ω any primitive d-th root of unity, computed by
/// reduction modulo Φ_d. Errors when the remainder is non-constant, i.e.
/// when p(ω) is not a rational integer.
pub fn eval_at_root_of_unity(p: &IntPolynomial, d: u64) -> Result<i64> {
    let phi = cyclotomic(d)?;
    let (_, r) = p.div_rem_unit(&phi)?;
    match r.degree() {
        None => Ok(0),
        Some(0) => Ok(r.coeff(0)),
        Some(_) => Err(Error::Precondition(format!(
            "p mod Φ_{d} is non-constant; p(ω) is not an integer"
        ))),
    }
}

/// Brute-force cyclic sieving check for the rotation action on m-subsets of
/// an n-set against the Gaussian binomial: for every rotation amount k, the
/// number of fixed subsets must equal (n,m)_t evaluated at a primitive root
/// of unity of order n/gcd(n,k).
pub fn csp_check(n: u64, m: u64) -> Result<bool> {
    if m > n {
        return Err(Error::Precondition(format!("csp check needs m ≤ n, got ({n},{m})")));
    }
    if n > CSP_ENUMERATION_LIMIT as u64 {
        return Err(Error::CapExceeded(format!(
            "subset enumeration is limited to n ≤ {CSP_ENUMERATION_LIMIT}"
        )));
    }
    let p = gaussian_binomial(n, m)?;
    let n = n as u32;
    let m = m as u32;
    let mask: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let rotate = |x: u32, k: u32| -> u32 {
        if k == 0 {
            x
        } else {
            ((x << k) | (x >> (n - k))) & mask
        }
    };
    for k in 0..n {
        let mut fixed = 0i64;
        for x in 0..=mask {
            if x.count_ones() == m && rotate(x, k) == x {
                fixed += 1;
            }
        }
        let order = n as u64 / arith::gcd(n as u64, k as u64);
        if eval_at_root_of_unity(&p, order)? != fixed {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The sieving congruence: whether p(t^i) ≡ p(t) modulo (t^l − 1) for
/// gcd(i, l) = 1.
pub fn congruence_check(p: &IntPolynomial, i: u64, l: u64) -> Result<bool> {
    if l == 0 || i == 0 {
        return Err(Error::Precondition("congruence check needs positive i and l".into()));
    }
    if arith::gcd(i, l) != 1 {
        return Err(Error::Precondition(format!("gcd({i},{l}) ≠ 1")));
    }
    let diff = &p.substitute_power(i as usize) - p;
    let mut modulus = IntPolynomial::monomial(1, l as usize);
    modulus = &modulus - &IntPolynomial::one();
    diff.divisible_by(&modulus)
}

/// Motive of the twisted flag variety Flag(d₁,…,d_m; A): the multiset with
/// `coeff_e` copies of `e·a` for the Gaussian multinomial of the spec.
pub fn flag_motive(a: &BrauerClass, spec: &GaussianSpec) -> Result<CsaMotive> {
    motives::motive_from_polynomial(a, &gaussian_multinomial(spec)?)
}

/// Motive of the Severi–Brauer variety: {0, a, 2a, …, (deg−1)·a}. Agrees
/// with `flag_motive(a, (deg; 1, deg−1))` for deg ≥ 2.
pub fn sb_motive(a: &BrauerClass, deg: u64) -> Result<CsaMotive> {
    if deg == 0 {
        return Err(Error::Precondition("degree must be positive".into()));
    }
    let classes = (0..deg).map(|k| a.scalar_mul(k as i64)).collect();
    CsaMotive::new(a.model(), classes)
}

/// Outcome of the twisted-flag equivalence test: both the motive criterion
/// and the generated-subgroup criterion, which the theory forces to agree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlagEquivalence {
    pub equivalent: bool,
    pub motive_decision: IsoDecision,
    pub cyclic: CyclicEquality,
}

impl FlagEquivalence {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "equivalent": self.equivalent,
            "motive_isomorphic": self.motive_decision.isomorphic,
            "same_subgroup": self.cyclic.equal,
            "witness_exponent": self.cyclic.witness,
        })
    }
}

/// Decide whether Flag(spec; A) and Flag(spec; B) have isomorphic motives,
/// cross-checked against the subgroup criterion ⟨a⟩ = ⟨b⟩. Requires the
/// periods to divide the degree `spec.n` (always true for actual central
/// simple algebras). A disagreement between the two criteria is an internal
/// bug and is reported as an error rather than a value.
pub fn flag_equivalent(
    a: &BrauerClass,
    b: &BrauerClass,
    spec: &GaussianSpec,
) -> Result<FlagEquivalence> {
    for (name, c) in [("a", a), ("b", b)] {
        if spec.n % c.period() != 0 {
            return Err(Error::Precondition(format!(
                "period {} of class {name} does not divide the degree {}",
                c.period(),
                spec.n
            )));
        }
    }
    let motive_decision = motives::is_isomorphic(&flag_motive(a, spec)?, &flag_motive(b, spec)?)?;
    let cyclic = brauer::cyclic_equal(a, b)?;
    if motive_decision.isomorphic != cyclic.equal {
        return Err(Error::CriteriaDisagree(format!(
            "flag motive isomorphism says {} but subgroup equality says {} for a={a}, b={b}, spec ({}; {:?})",
            motive_decision.isomorphic, cyclic.equal, spec.n, spec.dims
        )));
    }
    Ok(FlagEquivalence { equivalent: cyclic.equal, motive_decision, cyclic })
}
