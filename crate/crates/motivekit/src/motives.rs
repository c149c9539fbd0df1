//! Direct sums of central-simple-algebra motives, as multisets of Brauer
//! classes.
//!
//! A motive `U(A₁) ⊕ ⋯ ⊕ U(Aₙ)` is recorded by the multiset of classes
//! `[Aᵢ]`; structural equality of motives is multiset equality and is *not*
//! the same as isomorphism. Isomorphism is decided per prime: two sums are
//! isomorphic iff they have the same length and, at every relevant prime p,
//! equal multisets of p-primary parts. The module also carries the
//! endomorphism ℤ-order Λ (hom-groups are `ind(Aᵢᵒᵖ ⊗ Aⱼ)·ℤ`, composition is
//! integer matrix multiplication), an independent brute-force oracle that
//! searches for constrained unimodular matrices, summand enumeration, the
//! graded ring Σ attached to a subgroup of classes, and the two motivic
//! relation families.

use crate::arith;
use crate::brauer::{self, BrauerClass, BrauerModel};
use crate::poly::IntPolynomial;
use crate::{Error, Result};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// Default cap on the number of prime-wise recombinations enumerated by
/// [`summand_classes`].
pub const DEFAULT_SUMMAND_CAP: u64 = 1_000_000;

/// Default cap on search nodes visited by [`brute_force_iso`].
pub const DEFAULT_BRUTE_NODE_CAP: u64 = 50_000_000;

/// A finite multiset of Brauer classes over one model, canonically sorted.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CsaMotive {
    model: Arc<BrauerModel>,
    classes: Vec<BrauerClass>,
}

impl CsaMotive {
    pub fn new(model: &Arc<BrauerModel>, mut classes: Vec<BrauerClass>) -> Result<Self> {
        for c in &classes {
            if c.model() != model {
                return Err(Error::ModelMismatch("motive summand from a different model".into()));
            }
        }
        classes.sort();
        Ok(CsaMotive { model: model.clone(), classes })
    }

    /// Cyclic-model convenience: one summand per exponent.
    pub fn from_exponents(model: &Arc<BrauerModel>, exps: &[i64]) -> Result<Self> {
        let classes = exps
            .iter()
            .map(|&e| model.class_from_exponents(&[e]))
            .collect::<Result<Vec<_>>>()?;
        Self::new(model, classes)
    }

    pub fn model(&self) -> &Arc<BrauerModel> {
        &self.model
    }

    pub fn classes(&self) -> &[BrauerClass] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Multiset union, i.e. the direct sum of motives.
    pub fn direct_sum(&self, other: &CsaMotive) -> Result<CsaMotive> {
        self.check_same_model(other)?;
        let mut classes = self.classes.clone();
        classes.extend(other.classes.iter().cloned());
        CsaMotive::new(&self.model, classes)
    }

    /// Monoidal product: all pairwise sums of classes, multiplicities
    /// multiplying.
    pub fn tensor(&self, other: &CsaMotive) -> Result<CsaMotive> {
        self.check_same_model(other)?;
        let mut classes = Vec::with_capacity(self.len() * other.len());
        for a in &self.classes {
            for b in &other.classes {
                classes.push(a.add(b)?);
            }
        }
        CsaMotive::new(&self.model, classes)
    }

    fn check_same_model(&self, other: &CsaMotive) -> Result<()> {
        if self.model == other.model {
            Ok(())
        } else {
            Err(Error::ModelMismatch("motives over different Brauer models".into()))
        }
    }

    pub fn to_json(&self) -> Value {
        json!({ "classes": self.classes.iter().map(BrauerClass::to_json).collect::<Vec<_>>() })
    }

    /// Accepts `{"classes":[...]}` or a bare array; entries use any class
    /// form valid for the model (order-insensitive).
    pub fn from_json_in(model: &Arc<BrauerModel>, v: &Value) -> Result<Self> {
        let arr = match v {
            Value::Object(o) => o
                .get("classes")
                .and_then(Value::as_array)
                .ok_or_else(|| Error::Malformed("motive JSON needs a \"classes\" array".into()))?,
            Value::Array(a) => a,
            _ => return Err(Error::Malformed("motive JSON must be an object or array".into())),
        };
        let classes = arr
            .iter()
            .map(|c| BrauerClass::from_json_in(model, c))
            .collect::<Result<Vec<_>>>()?;
        Self::new(model, classes)
    }
}

impl fmt::Display for CsaMotive {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{{{}}}",
            self.classes.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ")
        )
    }
}

impl fmt::Debug for CsaMotive {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CsaMotive{self}")
    }
}

/// `Hom(U(a), U(b)) = homMultiplier(a,b)·ℤ`, the index of the difference
/// class (Aᵒᵖ ⊗ B corresponds to b − a).
pub fn hom_multiplier(a: &BrauerClass, b: &BrauerClass) -> Result<u64> {
    Ok(b.sub(a)?.index())
}

/// The ℤ-order Λ(A₁,…,Aₙ): the matrix ring with (i,j) entry μᵢⱼ·ℤ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaOrder {
    classes: Vec<BrauerClass>,
    mu: Vec<Vec<u64>>,
}

impl LambdaOrder {
    pub fn new(classes: &[BrauerClass]) -> Result<Self> {
        let first = classes
            .first()
            .ok_or_else(|| Error::Precondition("Λ requires at least one class".into()))?;
        let n = classes.len();
        let mut mu = vec![vec![0u64; n]; n];
        for i in 0..n {
            for j in 0..n {
                mu[i][j] = hom_multiplier(&classes[i], &classes[j])?;
            }
        }
        for i in 0..n {
            if mu[i][i] != 1 {
                return Err(Error::InvalidModel(format!("μ[{i}][{i}] = {} ≠ 1", mu[i][i])));
            }
            for j in 0..n {
                if mu[i][j] != mu[j][i] {
                    return Err(Error::InvalidModel(format!("μ is not symmetric at ({i},{j})")));
                }
                for k in 0..n {
                    if (mu[i][j] * mu[j][k]) % mu[i][k] != 0 {
                        return Err(Error::InvalidModel(format!(
                            "μ[{i}][{k}] does not divide μ[{i}][{j}]·μ[{j}][{k}]"
                        )));
                    }
                }
            }
        }
        let _ = first;
        Ok(LambdaOrder { classes: classes.to_vec(), mu })
    }

    pub fn classes(&self) -> &[BrauerClass] {
        &self.classes
    }

    pub fn mu(&self) -> &[Vec<u64>] {
        &self.mu
    }
}

/// An integer matrix representing a morphism between two motives, with every
/// entry constrained to the corresponding hom-group multiplier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorphismMatrix {
    domain: CsaMotive,
    codomain: CsaMotive,
    entries: Vec<Vec<i64>>,
}

impl MorphismMatrix {
    /// Validates shape (|codomain| × |domain|) and entrywise divisibility.
    pub fn new(domain: CsaMotive, codomain: CsaMotive, entries: Vec<Vec<i64>>) -> Result<Self> {
        domain.check_same_model(&codomain)?;
        if entries.len() != codomain.len() || entries.iter().any(|r| r.len() != domain.len()) {
            return Err(Error::Malformed(format!(
                "expected a {}×{} matrix",
                codomain.len(),
                domain.len()
            )));
        }
        for (i, row) in entries.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                let m = hom_multiplier(&domain.classes[j], &codomain.classes[i])? as i64;
                if v % m != 0 {
                    return Err(Error::Precondition(format!(
                        "entry ({i},{j}) = {v} is not divisible by the hom multiplier {m}"
                    )));
                }
            }
        }
        Ok(MorphismMatrix { domain, codomain, entries })
    }

    pub fn identity(m: &CsaMotive) -> Self {
        let n = m.len();
        let entries = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        MorphismMatrix { domain: m.clone(), codomain: m.clone(), entries }
    }

    pub fn domain(&self) -> &CsaMotive {
        &self.domain
    }

    pub fn codomain(&self) -> &CsaMotive {
        &self.codomain
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }
}

/// `compose(f, g) = f ∘ g` for `g: A → B`, `f: B → C`; plain integer matrix
/// product. The divisibility invariant holds automatically because
/// μᵢₖ | μᵢⱼ·μⱼₖ.
pub fn compose(f: &MorphismMatrix, g: &MorphismMatrix) -> Result<MorphismMatrix> {
    if f.domain != g.codomain {
        return Err(Error::Precondition("compose: codomain(g) ≠ domain(f)".into()));
    }
    let (rows, mid, cols) = (f.codomain.len(), f.domain.len(), g.domain.len());
    let mut entries = vec![vec![0i64; cols]; rows];
    for i in 0..rows {
        for j in 0..cols {
            entries[i][j] = (0..mid)
                .map(|k| f.entries[i][k].checked_mul(g.entries[k][j]).expect("overflow"))
                .sum();
        }
    }
    MorphismMatrix::new(g.domain.clone(), f.codomain.clone(), entries)
}

/// Outcome of the per-prime isomorphism decision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoDecision {
    pub isomorphic: bool,
    /// For each relevant prime p, the lexicographically smallest permutation
    /// σ_p with `pPart(N_i, p) = pPart(M_{σ_p(i)}, p)` for all i.
    pub witness: BTreeMap<u64, Vec<usize>>,
}

impl IsoDecision {
    fn no() -> Self {
        IsoDecision { isomorphic: false, witness: BTreeMap::new() }
    }

    pub fn to_json(&self) -> Value {
        let witness: serde_json::Map<String, Value> = self
            .witness
            .iter()
            .map(|(p, perm)| (p.to_string(), json!(perm)))
            .collect();
        json!({ "isomorphic": self.isomorphic, "witness": witness })
    }
}

/// Primes dividing the period of any class in the given motives.
pub fn relevant_primes(motives: &[&CsaMotive]) -> Vec<u64> {
    let mut primes: Vec<u64> = motives
        .iter()
        .flat_map(|m| m.classes.iter())
        .flat_map(|c| c.support_primes())
        .collect();
    primes.sort_unstable();
    primes.dedup();
    primes
}

fn match_multisets(from: &[BrauerClass], to: &[BrauerClass]) -> Option<Vec<usize>> {
    // Greedy smallest-unused-index matching; lexicographically minimal when a
    // matching exists because equal values are interchangeable.
    let mut used = vec![false; from.len()];
    let mut perm = Vec::with_capacity(to.len());
    for t in to {
        let j = (0..from.len()).find(|&j| !used[j] && &from[j] == t)?;
        used[j] = true;
        perm.push(j);
    }
    Some(perm)
}

fn p_parts(m: &CsaMotive, p: u64) -> Result<Vec<BrauerClass>> {
    m.classes.iter().map(|c| c.p_primary_part(p)).collect()
}

/// Decide `M ≃ N`: equal lengths and, at every relevant prime, equal
/// multisets of p-primary parts, witnessed by one permutation per prime.
pub fn is_isomorphic(m: &CsaMotive, n: &CsaMotive) -> Result<IsoDecision> {
    m.check_same_model(n)?;
    if m.len() != n.len() {
        return Ok(IsoDecision::no());
    }
    let mut witness = BTreeMap::new();
    for p in relevant_primes(&[m, n]) {
        let mp = p_parts(m, p)?;
        let np = p_parts(n, p)?;
        match match_multisets(&mp, &np) {
            Some(perm) => {
                witness.insert(p, perm);
            }
            None => return Ok(IsoDecision::no()),
        }
    }
    Ok(IsoDecision { isomorphic: true, witness })
}

/// Localized decision: lengths agree and the p-part multisets agree at the
/// single prime p.
pub fn p_local_iso(m: &CsaMotive, n: &CsaMotive, p: u64) -> Result<bool> {
    m.check_same_model(n)?;
    if !arith::is_prime(p) {
        return Err(Error::Precondition(format!("{p} is not prime")));
    }
    if m.len() != n.len() {
        return Ok(false);
    }
    Ok(match_multisets(&p_parts(m, p)?, &p_parts(n, p)?).is_some())
}

/// Result of the brute-force matrix search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BruteForce {
    /// A constrained unimodular matrix with constrained inverse was found.
    Isomorphic(MorphismMatrix),
    /// Exhausted the entry box without finding a witness. Not a proof of
    /// non-isomorphism on its own.
    NoWitnessWithinBound,
}

fn det(m: &[Vec<i64>]) -> i64 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        n => {
            let mut acc = 0i64;
            for j in 0..n {
                if m[0][j] == 0 {
                    continue;
                }
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, &v)| v)
                            .collect()
                    })
                    .collect();
                let term = m[0][j].checked_mul(det(&minor)).expect("overflow");
                acc = if j % 2 == 0 { acc + term } else { acc - term };
            }
            acc
        }
    }
}

fn adjugate(m: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = m.len();
    let mut adj = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            let minor: Vec<Vec<i64>> = (0..n)
                .filter(|&r| r != i)
                .map(|r| (0..n).filter(|&c| c != j).map(|c| m[r][c]).collect())
                .collect();
            let cof = det(&minor);
            adj[j][i] = if (i + j) % 2 == 0 { cof } else { -cof };
        }
    }
    adj
}

/// gcd over all permutations π of ∏ᵢ μ[i][π(i)]. Every matrix whose entries
/// satisfy the divisibility pattern has determinant divisible by this number,
/// so a value > 1 rules out unimodular witnesses at any bound.
fn permutation_product_gcd(mu: &[Vec<u64>]) -> u128 {
    fn go(mu: &[Vec<u64>], row: usize, used: &mut [bool], prod: u128, acc: &mut u128) {
        if *acc == 1 {
            return;
        }
        if row == mu.len() {
            *acc = num_integer::gcd(*acc, prod);
            return;
        }
        for j in 0..mu.len() {
            if !used[j] {
                used[j] = true;
                go(mu, row + 1, used, prod * mu[row][j] as u128, acc);
                used[j] = false;
            }
        }
    }
    let mut acc = 0u128;
    let mut used = vec![false; mu.len()];
    go(mu, 0, &mut used, 1, &mut acc);
    acc
}

/// gcd of the absolute values of all k×k minors of the k given rows.
fn minor_gcd(rows: &[Vec<i64>]) -> u64 {
    let k = rows.len();
    let n = rows[0].len();
    let mut cols: Vec<usize> = (0..k).collect();
    let mut acc = 0u64;
    loop {
        let sub: Vec<Vec<i64>> = rows
            .iter()
            .map(|r| cols.iter().map(|&c| r[c]).collect())
            .collect();
        acc = arith::gcd(acc, det(&sub).unsigned_abs());
        if acc == 1 {
            return 1;
        }
        // next k-combination of columns
        let mut i = k;
        loop {
            if i == 0 {
                return acc;
            }
            i -= 1;
            if cols[i] < n - (k - i) {
                cols[i] += 1;
                for t in i + 1..k {
                    cols[t] = cols[t - 1] + 1;
                }
                break;
            }
        }
    }
}

struct BruteSearch {
    n: usize,
    mu: Vec<Vec<u64>>,
    mu_inv: Vec<Vec<u64>>,
    bound: i64,
    nodes: u64,
    cap: u64,
    rows: Vec<Vec<i64>>,
}

impl BruteSearch {
    fn run(&mut self) -> Result<Option<Vec<Vec<i64>>>> {
        self.search_row(0)
    }

    fn search_row(&mut self, r: usize) -> Result<Option<Vec<Vec<i64>>>> {
        if r == self.n {
            return Ok(self.check_leaf());
        }
        self.rows.push(vec![0; self.n]);
        let out = self.search_entry(r, 0);
        self.rows.pop();
        out
    }

    fn search_entry(&mut self, r: usize, c: usize) -> Result<Option<Vec<Vec<i64>>>> {
        if c == self.n {
            // Laplace along the fixed rows: any shared factor of their
            // k×k minors divides the determinant of every completion.
            if minor_gcd(&self.rows) != 1 {
                return Ok(None);
            }
            return self.search_row(r + 1);
        }
        let step = self.mu[r][c] as i64;
        let mut v = 0i64;
        loop {
            self.nodes += 1;
            if self.nodes > self.cap {
                return Err(Error::CapExceeded(format!(
                    "brute-force search visited more than {} nodes",
                    self.cap
                )));
            }
            self.rows[r][c] = v;
            if let Some(found) = self.search_entry(r, c + 1)? {
                return Ok(Some(found));
            }
            // 0, step, -step, 2·step, ...
            v = if v > 0 { -v } else { step - v };
            if v > self.bound {
                self.rows[r][c] = 0;
                return Ok(None);
            }
        }
    }

    fn check_leaf(&self) -> Option<Vec<Vec<i64>>> {
        let d = det(&self.rows);
        if d != 1 && d != -1 {
            return None;
        }
        let adj = adjugate(&self.rows);
        for j in 0..self.n {
            for i in 0..self.n {
                if (d * adj[j][i]) % self.mu_inv[j][i] as i64 != 0 {
                    return None;
                }
            }
        }
        Some(self.rows.clone())
    }
}

/// Search for an explicit isomorphism witness: an integer matrix `F` with
/// `F[i][j] ∈ homMultiplier(M_j, N_i)·ℤ`, all `|F[i][j]| ≤ bound`,
/// `det F = ±1`, and inverse `G = ±adj(F)` satisfying the transposed
/// divisibility `G[j][i] ∈ homMultiplier(N_i, M_j)·ℤ`.
///
/// A *yes* comes with the witness; a *no* only says no witness exists within
/// the bound (though the determinant obstruction below proves many of them
/// outright). The search is deterministic.
pub fn brute_force_iso(m: &CsaMotive, n: &CsaMotive, bound: u64) -> Result<BruteForce> {
    brute_force_iso_capped(m, n, bound, DEFAULT_BRUTE_NODE_CAP)
}

pub fn brute_force_iso_capped(
    m: &CsaMotive,
    n: &CsaMotive,
    bound: u64,
    node_cap: u64,
) -> Result<BruteForce> {
    m.check_same_model(n)?;
    if bound == 0 {
        return Err(Error::Precondition("bound must be positive".into()));
    }
    if m.len() != n.len() {
        return Ok(BruteForce::NoWitnessWithinBound);
    }
    let k = m.len();
    if k == 0 {
        return Ok(BruteForce::Isomorphic(MorphismMatrix::identity(m)));
    }
    let mut mu = vec![vec![0u64; k]; k];
    let mut mu_inv = vec![vec![0u64; k]; k];
    for i in 0..k {
        for j in 0..k {
            mu[i][j] = hom_multiplier(&m.classes[j], &n.classes[i])?;
            mu_inv[j][i] = hom_multiplier(&n.classes[i], &m.classes[j])?;
        }
    }
    if permutation_product_gcd(&mu) > 1 {
        return Ok(BruteForce::NoWitnessWithinBound);
    }

    // Most constrained rows first; remember how to undo the permutation.
    let count = |i: usize| -> u128 {
        mu[i].iter().map(|&s| 2 * (bound / s) as u128 + 1).product()
    };
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&i| count(i));
    let perm_mu: Vec<Vec<u64>> = order.iter().map(|&i| mu[i].clone()).collect();
    let perm_mu_inv: Vec<Vec<u64>> =
        (0..k).map(|j| order.iter().map(|&i| mu_inv[j][i]).collect()).collect();

    let mut search = BruteSearch {
        n: k,
        mu: perm_mu,
        mu_inv: perm_mu_inv,
        bound: bound as i64,
        nodes: 0,
        cap: node_cap,
        rows: Vec::with_capacity(k),
    };
    match search.run()? {
        Some(rows) => {
            let mut entries = vec![vec![0i64; k]; k];
            for (pos, &orig) in order.iter().enumerate() {
                entries[orig] = rows[pos].clone();
            }
            Ok(BruteForce::Isomorphic(MorphismMatrix::new(m.clone(), n.clone(), entries)?))
        }
        None => Ok(BruteForce::NoWitnessWithinBound),
    }
}

/// The Brauer classes of all indecomposable direct summands of `M`: one
/// p-primary part from some summand for each relevant prime, recombined.
pub fn summand_classes(m: &CsaMotive) -> Result<Vec<BrauerClass>> {
    summand_classes_capped(m, DEFAULT_SUMMAND_CAP)
}

pub fn summand_classes_capped(m: &CsaMotive, cap: u64) -> Result<Vec<BrauerClass>> {
    if m.is_empty() {
        return Err(Error::Precondition("summand enumeration needs a nonempty motive".into()));
    }
    let primes = relevant_primes(&[m]);
    let n = m.len() as u64;
    let mut total: u64 = 1;
    for _ in &primes {
        total = total
            .checked_mul(n)
            .filter(|&t| t <= cap)
            .ok_or_else(|| Error::CapExceeded(format!("more than {cap} prime-wise recombinations")))?;
    }
    let parts: Vec<Vec<BrauerClass>> =
        primes.iter().map(|&p| p_parts(m, p)).collect::<Result<_>>()?;
    let mut out: Vec<BrauerClass> = Vec::new();
    let mut choice = vec![0usize; primes.len()];
    loop {
        let mut b = m.model.zero_class();
        for (pi, &ci) in choice.iter().enumerate() {
            b = b.add(&parts[pi][ci])?;
        }
        out.push(b);
        let mut i = choice.len();
        loop {
            if i == 0 {
                out.sort();
                out.dedup();
                return Ok(out);
            }
            i -= 1;
            choice[i] += 1;
            if choice[i] < m.len() {
                break;
            }
            choice[i] = 0;
        }
    }
}

/// The sum ⊕ₖ U(A^⊗k)^⊕coeff_k encoded by a polynomial with non-negative
/// coefficients.
pub fn motive_from_polynomial(a: &BrauerClass, p: &IntPolynomial) -> Result<CsaMotive> {
    let mut classes = Vec::new();
    for (k, &c) in p.coeffs().iter().enumerate() {
        if c < 0 {
            return Err(Error::Precondition(format!("negative coefficient {c} at degree {k}")));
        }
        for _ in 0..c {
            classes.push(a.scalar_mul(k as i64));
        }
    }
    CsaMotive::new(a.model(), classes)
}

/// The polynomial p_A(t) = ∏ᵢ (1 + t + ⋯ + t^{pᵢ^{rᵢ}−1}) built from the
/// factorization of the period.
pub fn period_polynomial(a: &BrauerClass) -> IntPolynomial {
    arith::factorize(a.period())
        .into_iter()
        .map(|(p, r)| IntPolynomial::new(vec![1; p.pow(r) as usize]))
        .fold(IntPolynomial::one(), |acc, f| &acc * &f)
}

/// First motivic relation: `E(A; p_A(t)) ≃ E(A; t·p_A(t))`.
pub fn verify_relation1(a: &BrauerClass) -> Result<IsoDecision> {
    let pa = period_polynomial(a);
    let left = motive_from_polynomial(a, &pa)?;
    let right = motive_from_polynomial(a, &pa.shift(1))?;
    is_isomorphic(&left, &right)
}

/// Second motivic relation: for coprime indices,
/// `E(C) ⊕ E(A⊗B⊗C) ≃ E(A⊗C) ⊕ E(B⊗C)`.
pub fn verify_relation2(a: &BrauerClass, b: &BrauerClass, c: &BrauerClass) -> Result<IsoDecision> {
    if arith::gcd(a.index(), b.index()) != 1 {
        return Err(Error::Precondition(format!(
            "indices {} and {} are not coprime",
            a.index(),
            b.index()
        )));
    }
    let model = a.model();
    let left = CsaMotive::new(model, vec![c.clone(), a.add(b)?.add(c)?])?;
    let right = CsaMotive::new(model, vec![a.add(c)?, b.add(c)?])?;
    is_isomorphic(&left, &right)
}

/// The graded subring Σ = ⊕ μ_h·ℤ[h] over a finite subgroup of classes,
/// with μ_h = ind(h).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaRing {
    classes: Vec<BrauerClass>,
    multipliers: Vec<u64>,
}

impl SigmaRing {
    pub fn classes(&self) -> &[BrauerClass] {
        &self.classes
    }

    pub fn multipliers(&self) -> &[u64] {
        &self.multipliers
    }

    pub fn multiplier_of(&self, class: &BrauerClass) -> Option<u64> {
        self.classes
            .binary_search(class)
            .ok()
            .map(|i| self.multipliers[i])
    }
}

/// Build Σ over the subgroup generated by the given classes and check the
/// subring axiom μ_{g+h} | μ_g·μ_h.
pub fn sigma_ring(
    model: &Arc<BrauerModel>,
    generators: &[BrauerClass],
    cap: usize,
) -> Result<SigmaRing> {
    let classes = brauer::subgroup_generated(model, generators, cap)?;
    let multipliers: Vec<u64> = classes.iter().map(BrauerClass::index).collect();
    let ring = SigmaRing { classes, multipliers };
    for g in &ring.classes {
        for h in &ring.classes {
            let sum = g.add(h)?;
            let ms = ring.multiplier_of(&sum).expect("subgroup is closed");
            if (g.index() * h.index()) % ms != 0 {
                return Err(Error::InvalidModel(format!(
                    "subring axiom fails: μ({sum}) = {ms} does not divide μ({g})·μ({h})"
                )));
            }
        }
    }
    Ok(ring)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z6() -> Arc<BrauerModel> {
        BrauerModel::formal(vec![6]).unwrap()
    }

    fn motive(model: &Arc<BrauerModel>, exps: &[i64]) -> CsaMotive {
        CsaMotive::from_exponents(model, exps).unwrap()
    }

    #[test]
    fn hom_multipliers() {
        let m = z6();
        let a = m.class_from_exponents(&[1]).unwrap();
        assert_eq!(hom_multiplier(&a, &a).unwrap(), 1);
        assert_eq!(
            hom_multiplier(&a, &m.class_from_exponents(&[5]).unwrap()).unwrap(),
            3
        );
        let z2 = BrauerModel::formal(vec![2]).unwrap();
        assert_eq!(
            hom_multiplier(&z2.zero_class(), &z2.class_from_exponents(&[1]).unwrap()).unwrap(),
            2
        );
    }

    #[test]
    fn lambda_orders() {
        let z2 = BrauerModel::formal(vec![2]).unwrap();
        let l = LambdaOrder::new(&[z2.zero_class(), z2.class_from_exponents(&[1]).unwrap()]).unwrap();
        assert_eq!(l.mu(), &[vec![1, 2], vec![2, 1]]);

        let single = LambdaOrder::new(&[z6().class_from_exponents(&[4]).unwrap()]).unwrap();
        assert_eq!(single.mu(), &[vec![1]]);

        let z4 = BrauerModel::formal(vec![4]).unwrap();
        let classes: Vec<_> = [0, 1, 2]
            .iter()
            .map(|&e| z4.class_from_exponents(&[e]).unwrap())
            .collect();
        let l = LambdaOrder::new(&classes).unwrap();
        assert_eq!(l.mu(), &[vec![1, 4, 2], vec![4, 1, 4], vec![2, 4, 1]]);

        assert!(LambdaOrder::new(&[]).is_err());
    }

    #[test]
    fn composition() {
        let m = z6();
        let a = motive(&m, &[0, 1]);
        let id = MorphismMatrix::identity(&a);
        let g = MorphismMatrix::new(a.clone(), a.clone(), vec![vec![1, 6], vec![6, 1]]).unwrap();
        assert_eq!(compose(&id, &g).unwrap(), g);
        assert_eq!(compose(&g, &id).unwrap(), g);

        let z2 = BrauerModel::formal(vec![2]).unwrap();
        let x = motive(&z2, &[0]);
        let y = motive(&z2, &[1]);
        let f = MorphismMatrix::new(y.clone(), x.clone(), vec![vec![2]]).unwrap();
        let g = MorphismMatrix::new(x.clone(), y.clone(), vec![vec![2]]).unwrap();
        assert_eq!(compose(&f, &g).unwrap().entries(), &[vec![4]]);
    }

    #[test]
    fn morphism_divisibility_enforced() {
        let z2 = BrauerModel::formal(vec![2]).unwrap();
        let x = motive(&z2, &[0]);
        let y = motive(&z2, &[1]);
        assert!(MorphismMatrix::new(x.clone(), y.clone(), vec![vec![1]]).is_err());
        assert!(MorphismMatrix::new(x, y, vec![vec![2]]).is_ok());
    }

    #[test]
    fn iso_example_simple() {
        let m = z6();
        let d = is_isomorphic(&motive(&m, &[0, 1]), &motive(&m, &[3, 4])).unwrap();
        assert!(d.isomorphic);
        // witness at p: p-parts of N match those of M under σ_p
        for (&p, perm) in &d.witness {
            let mp = p_parts(&motive(&m, &[0, 1]), p).unwrap();
            let np = p_parts(&motive(&m, &[3, 4]), p).unwrap();
            for (i, &j) in perm.iter().enumerate() {
                assert_eq!(np[i], mp[j]);
            }
        }
        assert!(!is_isomorphic(&motive(&m, &[0, 1]), &motive(&m, &[0, 2])).unwrap().isomorphic);
        assert!(!is_isomorphic(&motive(&m, &[1]), &motive(&m, &[5])).unwrap().isomorphic);
        let refl = is_isomorphic(&motive(&m, &[2, 3]), &motive(&m, &[2, 3])).unwrap();
        assert!(refl.isomorphic);
        for perm in refl.witness.values() {
            assert_eq!(perm, &vec![0, 1]);
        }
    }

    #[test]
    fn brute_force_matches_spec_examples() {
        let m = z6();
        let zero = motive(&m, &[0]);
        match brute_force_iso(&zero, &zero, 1).unwrap() {
            BruteForce::Isomorphic(w) => assert_eq!(w.entries(), &[vec![1]]),
            _ => panic!("expected witness"),
        }
        assert_eq!(
            brute_force_iso(&motive(&m, &[1]), &motive(&m, &[5]), 100).unwrap(),
            BruteForce::NoWitnessWithinBound
        );
        match brute_force_iso(&motive(&m, &[0, 1]), &motive(&m, &[3, 4]), 12).unwrap() {
            BruteForce::Isomorphic(w) => {
                let d = det(w.entries());
                assert!(d == 1 || d == -1);
            }
            _ => panic!("expected witness at bound 12"),
        }
    }

    #[test]
    fn summands() {
        let m = z6();
        let s = summand_classes(&motive(&m, &[1, 2])).unwrap();
        let expect: Vec<_> = [1i64, 2, 4, 5]
            .iter()
            .map(|&e| m.class_from_exponents(&[e]).unwrap())
            .collect();
        assert_eq!(s, expect);

        let a = m.class_from_exponents(&[5]).unwrap();
        assert_eq!(summand_classes(&CsaMotive::new(&m, vec![a.clone()]).unwrap()).unwrap(), vec![a]);
        assert_eq!(summand_classes(&motive(&m, &[0, 0])).unwrap(), vec![m.zero_class()]);
        assert!(summand_classes(&CsaMotive::new(&m, vec![]).unwrap()).is_err());
    }

    #[test]
    fn tensor_products() {
        let m = z6();
        let a = motive(&m, &[0, 1]);
        assert_eq!(a.tensor(&motive(&m, &[0])).unwrap(), a);
        assert_eq!(
            motive(&m, &[1]).tensor(&motive(&m, &[5])).unwrap(),
            motive(&m, &[0])
        );
        assert_eq!(a.tensor(&a).unwrap(), motive(&m, &[0, 1, 1, 2]));
    }

    #[test]
    fn polynomial_motives() {
        let m = z6();
        let a = m.class_from_exponents(&[1]).unwrap();
        assert_eq!(
            motive_from_polynomial(&a, &IntPolynomial::one()).unwrap(),
            motive(&m, &[0])
        );
        let pa = period_polynomial(&a);
        assert_eq!(pa, IntPolynomial::new(vec![1, 2, 2, 1]));
        assert_eq!(
            motive_from_polynomial(&a, &pa).unwrap(),
            motive(&m, &[0, 1, 1, 2, 2, 3])
        );
        assert_eq!(
            motive_from_polynomial(&a, &pa.shift(1)).unwrap(),
            motive(&m, &[1, 2, 2, 3, 3, 4])
        );
        assert!(motive_from_polynomial(&a, &IntPolynomial::new(vec![-1])).is_err());
    }

    #[test]
    fn relation1() {
        for per in [1u64, 6, 30] {
            let m = BrauerModel::formal(vec![per]).unwrap();
            let a = m.class_from_exponents(&[1]).unwrap();
            assert!(verify_relation1(&a).unwrap().isomorphic, "per = {per}");
        }
    }

    #[test]
    fn relation2() {
        let m = z6();
        let cls = |e: i64| m.class_from_exponents(&[e]).unwrap();
        assert!(verify_relation2(&cls(3), &cls(2), &cls(1)).unwrap().isomorphic);
        assert!(verify_relation2(&cls(0), &cls(4), &cls(5)).unwrap().isomorphic);
        assert!(verify_relation2(&cls(3), &cls(2), &cls(0)).unwrap().isomorphic);
        // ind(3) = 2 and ind(1) = 6 share the prime 2
        assert!(verify_relation2(&cls(3), &cls(1), &cls(0)).is_err());
    }

    #[test]
    fn sigma_rings() {
        let m = z6();
        let empty = sigma_ring(&m, &[], 1000).unwrap();
        assert_eq!(empty.classes().len(), 1);
        assert_eq!(empty.multipliers(), &[1]);

        let z2 = BrauerModel::formal(vec![2]).unwrap();
        let s = sigma_ring(&z2, &[z2.class_from_exponents(&[1]).unwrap()], 1000).unwrap();
        assert_eq!(s.multipliers(), &[1, 2]);

        let s = sigma_ring(&m, &[m.class_from_exponents(&[1]).unwrap()], 1000).unwrap();
        assert_eq!(s.multipliers(), &[1, 6, 3, 2, 3, 6]);
    }

    #[test]
    fn p_local() {
        let m = z6();
        assert!(p_local_iso(&motive(&m, &[1]), &motive(&m, &[3]), 2).unwrap());
        assert!(!p_local_iso(&motive(&m, &[1]), &motive(&m, &[3]), 3).unwrap());
        assert!(p_local_iso(&motive(&m, &[1, 4]), &motive(&m, &[1, 4]), 5).unwrap());
        assert!(p_local_iso(&motive(&m, &[1, 4]), &motive(&m, &[1, 4]), 2).unwrap());
        assert!(p_local_iso(&motive(&m, &[1]), &motive(&m, &[1]), 7).unwrap());
    }

    #[test]
    fn motive_json() {
        let m = z6();
        let a = motive(&m, &[3, 0, 1]);
        let v = a.to_json();
        let back = CsaMotive::from_json_in(&m, &v).unwrap();
        assert_eq!(back, a);
        let shorthand: Value = serde_json::from_str("[3,0,1]").unwrap();
        assert_eq!(CsaMotive::from_json_in(&m, &shorthand).unwrap(), a);
    }
}
