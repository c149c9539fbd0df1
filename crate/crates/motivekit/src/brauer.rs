//! Exact presentations of Brauer groups.
//!
//! Two models are provided, both carrying the full class arithmetic (group
//! law, period, index, p-primary decomposition, generated subgroups):
//!
//! * **Hasse** — classes are finite-support maps from a fixed place set to
//!   ℚ/ℤ, optionally subject to the reciprocity law that invariants sum to
//!   zero. The index of a class equals its period.
//! * **Formal** — an explicit finite abelian group ⊕ᵢ ℤ/mᵢ given by its
//!   invariant factors, with an optional per-class index table. The table is
//!   validated against the two divisibility axioms an index function must
//!   satisfy: `index` and `period` share prime radicals, and
//!   `index(a+b) | index(a)·index(b)`.
//!
//! Classes are immutable value objects held in canonical form, so structural
//! equality decides class equality and every operation is a pure function.

use crate::arith;
use crate::{Error, Result};
use num_rational::Rational64;
use num_traits::Zero;
use serde_json::{json, Value};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

pub type Rat = Rational64;

/// Default cap on the size of a generated subgroup closure.
pub const DEFAULT_SUBGROUP_CAP: usize = 1_000_000;

/// Largest formal group order for which a custom index table is validated
/// pairwise at construction.
const INDEX_TABLE_VALIDATION_CAP: u64 = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum ModelData {
    Hasse {
        places: Vec<String>,
        reciprocity: bool,
    },
    Formal {
        factors: Vec<u64>,
        index_table: Option<BTreeMap<Vec<u64>, u64>>,
    },
}

/// An exactly-presented Brauer group. Shared behind `Arc` by its classes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BrauerModel {
    data: ModelData,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
enum ClassData {
    /// Nonzero invariants only, each reduced to [0, 1).
    Hasse(BTreeMap<String, Rat>),
    /// Exponent vector reduced componentwise mod the invariant factors.
    Formal(Vec<u64>),
}

/// An element of a [`BrauerModel`], always in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BrauerClass {
    model: Arc<BrauerModel>,
    data: ClassData,
}

fn reduce_mod_one(r: Rat) -> Rat {
    let f = r.floor();
    r - f
}

impl BrauerModel {
    /// Hasse model over the given places. Place names are stored sorted.
    pub fn hasse(places: Vec<String>, reciprocity: bool) -> Result<Arc<Self>> {
        let mut sorted = places;
        sorted.sort();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidModel("duplicate place name".into()));
        }
        Ok(Arc::new(BrauerModel {
            data: ModelData::Hasse { places: sorted, reciprocity },
        }))
    }

    /// Formal model ⊕ᵢ ℤ/mᵢ with the default index (= period).
    pub fn formal(factors: Vec<u64>) -> Result<Arc<Self>> {
        Self::formal_with_table(factors, None)
    }

    /// Formal model with a custom index table, validated eagerly.
    pub fn formal_with_table(
        factors: Vec<u64>,
        index_table: Option<BTreeMap<Vec<u64>, u64>>,
    ) -> Result<Arc<Self>> {
        if factors.is_empty() || factors.iter().any(|&m| m == 0) {
            return Err(Error::InvalidModel(
                "invariant factors must be a nonempty list of positive integers".into(),
            ));
        }
        let model = Arc::new(BrauerModel {
            data: ModelData::Formal { factors: factors.clone(), index_table: None },
        });
        let Some(raw) = index_table else { return Ok(model) };

        // Canonicalize table keys before validating.
        let mut table = BTreeMap::new();
        for (exps, idx) in raw {
            if idx == 0 {
                return Err(Error::InvalidModel("index table values must be positive".into()));
            }
            let class = model.class_from_exponents(&exps.iter().map(|&e| e as i64).collect::<Vec<_>>())?;
            let ClassData::Formal(key) = class.data else { unreachable!() };
            table.insert(key, idx);
        }
        let model = Arc::new(BrauerModel {
            data: ModelData::Formal { factors: factors.clone(), index_table: Some(table) },
        });

        let order: u64 = factors.iter().product();
        if order > INDEX_TABLE_VALIDATION_CAP {
            return Err(Error::CapExceeded(format!(
                "cannot validate an index table over a group of order {order} (cap {INDEX_TABLE_VALIDATION_CAP})"
            )));
        }
        let classes = model.all_classes();
        for a in &classes {
            let (ia, pa) = (a.index(), a.period());
            if arith::radical(ia) != arith::radical(pa) {
                return Err(Error::InvalidModel(format!(
                    "index {ia} and period {pa} have different prime radicals at class {a}"
                )));
            }
            if a.is_zero() && ia != 1 {
                return Err(Error::InvalidModel("index of the zero class must be 1".into()));
            }
            if a.neg().index() != ia {
                return Err(Error::InvalidModel(format!(
                    "index must be invariant under negation; fails at class {a}"
                )));
            }
        }
        for a in &classes {
            for b in &classes {
                let sum = a.add(b)?;
                if a.index() * b.index() % sum.index() != 0 {
                    return Err(Error::InvalidModel(format!(
                        "index({sum}) = {} does not divide index({a})·index({b}) = {}",
                        sum.index(),
                        a.index() * b.index()
                    )));
                }
            }
        }
        Ok(model)
    }

    pub fn is_hasse(&self) -> bool {
        matches!(self.data, ModelData::Hasse { .. })
    }

    /// Place names of a Hasse model (sorted), or `None` for formal models.
    pub fn places(&self) -> Option<&[String]> {
        match &self.data {
            ModelData::Hasse { places, .. } => Some(places),
            ModelData::Formal { .. } => None,
        }
    }

    /// Invariant factors of a formal model.
    pub fn factors(&self) -> Option<&[u64]> {
        match &self.data {
            ModelData::Formal { factors, .. } => Some(factors),
            ModelData::Hasse { .. } => None,
        }
    }

    /// Group order of a formal model; Hasse models are infinite torsion groups.
    pub fn order(&self) -> Option<u64> {
        self.factors().map(|f| f.iter().product())
    }

    pub fn zero_class(self: &Arc<Self>) -> BrauerClass {
        let data = match &self.data {
            ModelData::Hasse { .. } => ClassData::Hasse(BTreeMap::new()),
            ModelData::Formal { factors, .. } => ClassData::Formal(vec![0; factors.len()]),
        };
        BrauerClass { model: self.clone(), data }
    }

    /// Build a formal class from an exponent vector (reduced mod the factors).
    pub fn class_from_exponents(self: &Arc<Self>, exps: &[i64]) -> Result<BrauerClass> {
        let ModelData::Formal { factors, .. } = &self.data else {
            return Err(Error::Malformed("exponent vectors only apply to formal models".into()));
        };
        if exps.len() != factors.len() {
            return Err(Error::Malformed(format!(
                "expected {} exponents, got {}",
                factors.len(),
                exps.len()
            )));
        }
        let reduced = exps
            .iter()
            .zip(factors)
            .map(|(&e, &m)| e.rem_euclid(m as i64) as u64)
            .collect();
        Ok(BrauerClass { model: self.clone(), data: ClassData::Formal(reduced) })
    }

    /// Build a Hasse class from local invariants, enforcing reciprocity when set.
    pub fn class_from_invariants(self: &Arc<Self>, invs: &BTreeMap<String, Rat>) -> Result<BrauerClass> {
        let ModelData::Hasse { places, reciprocity } = &self.data else {
            return Err(Error::Malformed("invariant maps only apply to Hasse models".into()));
        };
        let mut canon = BTreeMap::new();
        for (place, &inv) in invs {
            if !places.contains(place) {
                return Err(Error::Malformed(format!("unknown place {place:?}")));
            }
            let r = reduce_mod_one(inv);
            if !r.is_zero() {
                canon.insert(place.clone(), r);
            }
        }
        if *reciprocity {
            let sum: Rat = canon.values().sum();
            if !reduce_mod_one(sum).is_zero() {
                return Err(Error::Precondition(
                    "invariants violate reciprocity (sum ≢ 0 mod 1)".into(),
                ));
            }
        }
        Ok(BrauerClass { model: self.clone(), data: ClassData::Hasse(canon) })
    }

    /// Every class of a formal model, in canonical order.
    pub fn all_classes(self: &Arc<Self>) -> Vec<BrauerClass> {
        let Some(factors) = self.factors() else { return vec![] };
        let mut out = Vec::new();
        let mut exps = vec![0u64; factors.len()];
        loop {
            out.push(BrauerClass { model: self.clone(), data: ClassData::Formal(exps.clone()) });
            let mut i = factors.len();
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                exps[i] += 1;
                if exps[i] < factors[i] {
                    break;
                }
                exps[i] = 0;
            }
        }
    }

    pub fn to_json(&self) -> Value {
        match &self.data {
            ModelData::Hasse { places, reciprocity } => json!({
                "model": "hasse",
                "places": places,
                "reciprocity": reciprocity,
            }),
            ModelData::Formal { factors, index_table } => {
                let mut v = json!({ "model": "formal", "factors": factors });
                if let Some(table) = index_table {
                    v["index_table"] = Value::Array(
                        table
                            .iter()
                            .map(|(e, i)| json!({ "exponents": e, "index": i }))
                            .collect(),
                    );
                }
                v
            }
        }
    }

    pub fn from_json(v: &Value) -> Result<Arc<Self>> {
        let kind = v
            .get("model")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Malformed("model JSON needs a \"model\" field".into()))?;
        match kind {
            "formal" => {
                let factors = parse_u64_array(v.get("factors"), "factors")?;
                let table = match v.get("index_table") {
                    None | Some(Value::Null) => None,
                    Some(Value::Array(entries)) => {
                        let mut t = BTreeMap::new();
                        for e in entries {
                            let exps = parse_u64_array(e.get("exponents"), "exponents")?;
                            let idx = e
                                .get("index")
                                .and_then(Value::as_u64)
                                .ok_or_else(|| Error::Malformed("index table entry needs \"index\"".into()))?;
                            t.insert(exps, idx);
                        }
                        Some(t)
                    }
                    Some(_) => return Err(Error::Malformed("index_table must be an array".into())),
                };
                Self::formal_with_table(factors, table)
            }
            "hasse" => {
                let reciprocity = v.get("reciprocity").and_then(Value::as_bool).unwrap_or(false);
                let places = match v.get("places") {
                    Some(p) => p
                        .as_array()
                        .ok_or_else(|| Error::Malformed("places must be an array".into()))?
                        .iter()
                        .map(|s| {
                            s.as_str()
                                .map(String::from)
                                .ok_or_else(|| Error::Malformed("place names must be strings".into()))
                        })
                        .collect::<Result<Vec<_>>>()?,
                    // A standalone Hasse class implies its place set.
                    None => match v.get("invariants").and_then(Value::as_object) {
                        Some(m) => m.keys().cloned().collect(),
                        None => return Err(Error::Malformed("hasse model needs \"places\"".into())),
                    },
                };
                Self::hasse(places, reciprocity)
            }
            other => Err(Error::Malformed(format!("unknown model kind {other:?}"))),
        }
    }
}

fn parse_u64_array(v: Option<&Value>, what: &str) -> Result<Vec<u64>> {
    v.and_then(Value::as_array)
        .ok_or_else(|| Error::Malformed(format!("{what} must be an array of integers")))?
        .iter()
        .map(|x| {
            x.as_u64()
                .ok_or_else(|| Error::Malformed(format!("{what} must contain non-negative integers")))
        })
        .collect()
}

pub(crate) fn parse_rational(s: &str) -> Result<Rat> {
    let parse_int = |t: &str| {
        t.trim()
            .parse::<i64>()
            .map_err(|_| Error::Malformed(format!("bad rational {s:?}")))
    };
    match s.split_once('/') {
        Some((n, d)) => {
            let (n, d) = (parse_int(n)?, parse_int(d)?);
            if d == 0 {
                return Err(Error::Malformed(format!("zero denominator in {s:?}")));
            }
            Ok(Rat::new(n, d))
        }
        None => Ok(Rat::from_integer(parse_int(s)?)),
    }
}

pub(crate) fn rational_string(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

impl BrauerClass {
    pub fn model(&self) -> &Arc<BrauerModel> {
        &self.model
    }

    fn check_same_model(&self, other: &BrauerClass) -> Result<()> {
        if self.model == other.model {
            Ok(())
        } else {
            Err(Error::ModelMismatch("classes belong to different Brauer models".into()))
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.data {
            ClassData::Hasse(m) => m.is_empty(),
            ClassData::Formal(e) => e.iter().all(|&x| x == 0),
        }
    }

    /// Group law of the Brauer group (tensor product of algebra classes).
    pub fn add(&self, other: &BrauerClass) -> Result<BrauerClass> {
        self.check_same_model(other)?;
        let data = match (&self.data, &other.data) {
            (ClassData::Hasse(a), ClassData::Hasse(b)) => {
                let mut out = a.clone();
                for (place, inv) in b {
                    let r = reduce_mod_one(out.get(place).copied().unwrap_or_else(Rat::zero) + inv);
                    if r.is_zero() {
                        out.remove(place);
                    } else {
                        out.insert(place.clone(), r);
                    }
                }
                ClassData::Hasse(out)
            }
            (ClassData::Formal(a), ClassData::Formal(b)) => {
                let factors = self.model.factors().expect("formal model");
                ClassData::Formal(
                    a.iter()
                        .zip(b)
                        .zip(factors)
                        .map(|((&x, &y), &m)| (x + y) % m)
                        .collect(),
                )
            }
            _ => unreachable!("same model implies same kind"),
        };
        Ok(BrauerClass { model: self.model.clone(), data })
    }

    /// Inverse class (the class of the opposite algebra).
    pub fn neg(&self) -> BrauerClass {
        let data = match &self.data {
            ClassData::Hasse(m) => ClassData::Hasse(
                m.iter().map(|(p, r)| (p.clone(), reduce_mod_one(-r))).collect(),
            ),
            ClassData::Formal(e) => {
                let factors = self.model.factors().expect("formal model");
                ClassData::Formal(e.iter().zip(factors).map(|(&x, &m)| (m - x) % m).collect())
            }
        };
        BrauerClass { model: self.model.clone(), data }
    }

    pub fn sub(&self, other: &BrauerClass) -> Result<BrauerClass> {
        self.add(&other.neg())
    }

    /// `k·a` in the group.
    pub fn scalar_mul(&self, k: i64) -> BrauerClass {
        let data = match &self.data {
            ClassData::Hasse(m) => {
                let mut out = BTreeMap::new();
                for (p, r) in m {
                    let v = reduce_mod_one(r * Rat::from_integer(k));
                    if !v.is_zero() {
                        out.insert(p.clone(), v);
                    }
                }
                ClassData::Hasse(out)
            }
            ClassData::Formal(e) => {
                let factors = self.model.factors().expect("formal model");
                ClassData::Formal(
                    e.iter()
                        .zip(factors)
                        .map(|(&x, &m)| ((x as i128 * k as i128).rem_euclid(m as i128)) as u64)
                        .collect(),
                )
            }
        };
        BrauerClass { model: self.model.clone(), data }
    }

    /// The order of the class in the group; 1 exactly for the zero class.
    pub fn period(&self) -> u64 {
        match &self.data {
            ClassData::Hasse(m) => m
                .values()
                .fold(1u64, |acc, r| arith::lcm(acc, r.denom().unsigned_abs())),
            ClassData::Formal(e) => {
                let factors = self.model.factors().expect("formal model");
                e.iter()
                    .zip(factors)
                    .fold(1u64, |acc, (&x, &m)| arith::lcm(acc, m / arith::gcd(x, m)))
            }
        }
    }

    /// Schur index of the class. Hasse models use index = period; formal
    /// models consult the custom table when one is installed.
    pub fn index(&self) -> u64 {
        if let ModelData::Formal { index_table: Some(table), .. } = &self.model.data {
            if let ClassData::Formal(e) = &self.data {
                if let Some(&idx) = table.get(e) {
                    return idx;
                }
            }
        }
        self.period()
    }

    /// The unique class of p-power order in the decomposition a = Σ_p a_p.
    ///
    /// Computed as `c·a` with the CRT idempotent `c ≡ 1 mod p^r`, `c ≡ 0 mod m`
    /// for `period(a) = p^r·m`, `p ∤ m`. Returns zero when p does not divide
    /// the period.
    pub fn p_primary_part(&self, p: u64) -> Result<BrauerClass> {
        if !arith::is_prime(p) {
            return Err(Error::Precondition(format!("{p} is not prime")));
        }
        let n = self.period();
        let r = arith::factorize(n)
            .into_iter()
            .find(|&(q, _)| q == p)
            .map(|(_, r)| r)
            .unwrap_or(0);
        if r == 0 {
            return Ok(self.model.zero_class());
        }
        let q = p.pow(r);
        let c = arith::crt_idempotent(q, n / q);
        Ok(self.scalar_mul(c as i64))
    }

    /// Primes dividing the period, i.e. the primes at which the class is visible.
    pub fn support_primes(&self) -> Vec<u64> {
        arith::factorize(self.period()).into_iter().map(|(p, _)| p).collect()
    }

    pub fn to_json(&self) -> Value {
        match (&self.model.data, &self.data) {
            (ModelData::Formal { factors, .. }, ClassData::Formal(e)) => json!({
                "model": "formal",
                "factors": factors,
                "exponents": e,
            }),
            (ModelData::Hasse { reciprocity, .. }, ClassData::Hasse(m)) => {
                let invs: serde_json::Map<String, Value> = m
                    .iter()
                    .map(|(p, r)| (p.clone(), Value::String(rational_string(r))))
                    .collect();
                json!({
                    "model": "hasse",
                    "reciprocity": reciprocity,
                    "invariants": invs,
                })
            }
            _ => unreachable!(),
        }
    }

    /// Parse the self-describing class JSON of the external interface,
    /// constructing the implied model.
    pub fn from_json(v: &Value) -> Result<BrauerClass> {
        let model = BrauerModel::from_json(v)?;
        Self::from_json_in(&model, v)
    }

    /// Parse a class against a known model. Accepts the full object form as
    /// well as the cyclic shorthands: a bare integer (single-factor formal
    /// models) or a bare exponent array.
    pub fn from_json_in(model: &Arc<BrauerModel>, v: &Value) -> Result<BrauerClass> {
        match v {
            Value::Number(_) => {
                let e = v
                    .as_i64()
                    .ok_or_else(|| Error::Malformed("class exponent must be an integer".into()))?;
                let factors = model
                    .factors()
                    .ok_or_else(|| Error::Malformed("integer shorthand needs a formal model".into()))?;
                if factors.len() != 1 {
                    return Err(Error::Malformed(
                        "integer shorthand only applies to single-factor models".into(),
                    ));
                }
                model.class_from_exponents(&[e])
            }
            Value::Array(items) => {
                let exps = items
                    .iter()
                    .map(|x| {
                        x.as_i64()
                            .ok_or_else(|| Error::Malformed("exponents must be integers".into()))
                    })
                    .collect::<Result<Vec<_>>>()?;
                model.class_from_exponents(&exps)
            }
            Value::Object(obj) => {
                if let Some(kind) = obj.get("model").and_then(Value::as_str) {
                    let declared = BrauerModel::from_json(v)?;
                    let compatible = match kind {
                        "formal" => declared.factors() == model.factors(),
                        _ => declared == *model,
                    };
                    if !compatible {
                        return Err(Error::ModelMismatch(
                            "class JSON declares a different model".into(),
                        ));
                    }
                }
                if let Some(e) = obj.get("exponents") {
                    return Self::from_json_in(model, e);
                }
                if let Some(invs) = obj.get("invariants") {
                    let m = invs
                        .as_object()
                        .ok_or_else(|| Error::Malformed("invariants must be an object".into()))?;
                    let mut map = BTreeMap::new();
                    for (place, val) in m {
                        let s = val
                            .as_str()
                            .ok_or_else(|| Error::Malformed("invariants must be \"p/q\" strings".into()))?;
                        map.insert(place.clone(), parse_rational(s)?);
                    }
                    return model.class_from_invariants(&map);
                }
                Err(Error::Malformed("class JSON needs \"exponents\" or \"invariants\"".into()))
            }
            _ => Err(Error::Malformed("unrecognized class JSON".into())),
        }
    }
}

impl PartialOrd for BrauerClass {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical total order used for multiset normalization; only meaningful
/// between classes of one model.
impl Ord for BrauerClass {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.data.cmp(&other.data)
    }
}

impl fmt::Display for BrauerClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.data {
            ClassData::Formal(e) => {
                if e.len() == 1 {
                    write!(f, "{}", e[0])
                } else {
                    write!(f, "({})", e.iter().map(u64::to_string).collect::<Vec<_>>().join(","))
                }
            }
            ClassData::Hasse(m) => {
                let body = m
                    .iter()
                    .map(|(p, r)| format!("{p}:{}", rational_string(r)))
                    .collect::<Vec<_>>()
                    .join(", ");
                write!(f, "{{{body}}}")
            }
        }
    }
}

/// Decision returned by [`cyclic_equal`]: whether two classes generate the
/// same cyclic subgroup, with a unit witness `i` such that `b = i·a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicEquality {
    pub equal: bool,
    pub witness: Option<u64>,
}

/// Whether ⟨a⟩ = ⟨b⟩, together with an exponent witness coprime to the period.
pub fn cyclic_equal(a: &BrauerClass, b: &BrauerClass) -> Result<CyclicEquality> {
    a.check_same_model(b)?;
    let per = a.period();
    if per != b.period() {
        return Ok(CyclicEquality { equal: false, witness: None });
    }
    for i in 1..=per {
        if arith::gcd(i, per) == 1 && &a.scalar_mul(i as i64) == b {
            return Ok(CyclicEquality { equal: true, witness: Some(i) });
        }
    }
    Ok(CyclicEquality { equal: false, witness: None })
}

/// Closure of the given classes under the group law, in canonical order.
/// The empty generating set yields the trivial subgroup.
pub fn subgroup_generated(
    model: &Arc<BrauerModel>,
    classes: &[BrauerClass],
    cap: usize,
) -> Result<Vec<BrauerClass>> {
    for c in classes {
        if c.model() != model {
            return Err(Error::ModelMismatch("generator from a different model".into()));
        }
    }
    let mut seen: BTreeSet<BrauerClass> = BTreeSet::new();
    let mut frontier = vec![model.zero_class()];
    seen.insert(model.zero_class());
    while let Some(x) = frontier.pop() {
        for g in classes {
            let next = x.add(g)?;
            if seen.insert(next.clone()) {
                if seen.len() > cap {
                    return Err(Error::CapExceeded(format!(
                        "subgroup closure exceeds cap of {cap} elements"
                    )));
                }
                frontier.push(next);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z6() -> Arc<BrauerModel> {
        BrauerModel::formal(vec![6]).unwrap()
    }

    fn cls(model: &Arc<BrauerModel>, e: i64) -> BrauerClass {
        model.class_from_exponents(&[e]).unwrap()
    }

    #[test]
    fn add_formal() {
        let m = z6();
        assert_eq!(cls(&m, 1).add(&cls(&m, 5)).unwrap(), cls(&m, 0));
        assert_eq!(cls(&m, 1).add(&cls(&m, 2)).unwrap(), cls(&m, 3));
    }

    #[test]
    fn add_hasse_two_torsion() {
        let m = BrauerModel::hasse(vec!["v1".into(), "v2".into()], true).unwrap();
        let mut invs = BTreeMap::new();
        invs.insert("v1".to_string(), Rat::new(1, 2));
        invs.insert("v2".to_string(), Rat::new(1, 2));
        let a = m.class_from_invariants(&invs).unwrap();
        assert!(a.add(&a).unwrap().is_zero());
        assert_eq!(a.period(), 2);
        assert_eq!(a.index(), 2);
    }

    #[test]
    fn reciprocity_enforced() {
        let m = BrauerModel::hasse(vec!["v1".into(), "v2".into()], true).unwrap();
        let mut invs = BTreeMap::new();
        invs.insert("v1".to_string(), Rat::new(1, 2));
        assert!(matches!(m.class_from_invariants(&invs), Err(Error::Precondition(_))));
    }

    #[test]
    fn periods() {
        let m = z6();
        assert_eq!(cls(&m, 1).period(), 6);
        assert_eq!(cls(&m, 2).period(), 3);
        assert_eq!(cls(&m, 0).period(), 1);

        let h = BrauerModel::hasse(vec!["v1".into(), "v2".into(), "v3".into()], true).unwrap();
        let mut invs = BTreeMap::new();
        invs.insert("v1".to_string(), Rat::new(1, 2));
        invs.insert("v2".to_string(), Rat::new(1, 3));
        invs.insert("v3".to_string(), Rat::new(1, 6));
        let a = h.class_from_invariants(&invs).unwrap();
        assert_eq!(a.period(), 6);
    }

    #[test]
    fn index_defaults_to_period() {
        let m = z6();
        assert_eq!(cls(&m, 2).index(), 3);
        assert_eq!(cls(&m, 0).index(), 1);
    }

    #[test]
    fn index_table_override() {
        // ℤ/2 with index 4 at the nonzero class: per = 2, ind = 4 share radical 2.
        let mut table = BTreeMap::new();
        table.insert(vec![1u64], 4u64);
        let m = BrauerModel::formal_with_table(vec![2], Some(table)).unwrap();
        assert_eq!(m.class_from_exponents(&[1]).unwrap().index(), 4);
        assert_eq!(m.class_from_exponents(&[1]).unwrap().period(), 2);
    }

    #[test]
    fn index_table_rejects_bad_radical() {
        let mut table = BTreeMap::new();
        table.insert(vec![1u64], 3u64); // per 2, ind 3: different radicals
        assert!(matches!(
            BrauerModel::formal_with_table(vec![2], Some(table)),
            Err(Error::InvalidModel(_))
        ));
    }

    #[test]
    fn index_table_rejects_subadditivity_violation() {
        // ℤ/4: ind(1)=ind(3)=2 but ind(2)=... choose ind(2)=4? 4 ∤ 2·2 = 4 ok; use 8.
        let mut table = BTreeMap::new();
        table.insert(vec![1u64], 2u64);
        table.insert(vec![3u64], 2u64);
        table.insert(vec![2u64], 8u64);
        assert!(matches!(
            BrauerModel::formal_with_table(vec![4], Some(table)),
            Err(Error::InvalidModel(_))
        ));
    }

    #[test]
    fn p_primary_parts() {
        let m = z6();
        assert_eq!(cls(&m, 1).p_primary_part(2).unwrap(), cls(&m, 3));
        assert_eq!(cls(&m, 1).p_primary_part(3).unwrap(), cls(&m, 4));
        assert!(cls(&m, 1).p_primary_part(7).unwrap().is_zero());
        assert!(matches!(cls(&m, 1).p_primary_part(4), Err(Error::Precondition(_))));
    }

    #[test]
    fn subgroups() {
        let m = z6();
        let sub = subgroup_generated(&m, &[], DEFAULT_SUBGROUP_CAP).unwrap();
        assert_eq!(sub, vec![cls(&m, 0)]);

        let sub = subgroup_generated(&m, &[cls(&m, 2)], DEFAULT_SUBGROUP_CAP).unwrap();
        assert_eq!(sub, vec![cls(&m, 0), cls(&m, 2), cls(&m, 4)]);

        let k = BrauerModel::formal(vec![2, 2]).unwrap();
        let gens = vec![
            k.class_from_exponents(&[1, 0]).unwrap(),
            k.class_from_exponents(&[0, 1]).unwrap(),
        ];
        assert_eq!(subgroup_generated(&k, &gens, DEFAULT_SUBGROUP_CAP).unwrap().len(), 4);
    }

    #[test]
    fn subgroup_cap() {
        let m = z6();
        assert!(matches!(
            subgroup_generated(&m, &[cls(&m, 1)], 3),
            Err(Error::CapExceeded(_))
        ));
    }

    #[test]
    fn cyclic_equality() {
        let m = z6();
        let r = cyclic_equal(&cls(&m, 1), &cls(&m, 5)).unwrap();
        assert!(r.equal);
        assert_eq!(r.witness, Some(5));

        let r = cyclic_equal(&cls(&m, 1), &cls(&m, 2)).unwrap();
        assert!(!r.equal);

        let r = cyclic_equal(&cls(&m, 4), &cls(&m, 4)).unwrap();
        assert!(r.equal);
        assert_eq!(r.witness, Some(1));

        let r = cyclic_equal(&cls(&m, 0), &cls(&m, 0)).unwrap();
        assert!(r.equal);
        assert_eq!(r.witness, Some(1));
    }

    #[test]
    fn json_round_trip() {
        let m = z6();
        let a = cls(&m, 4);
        let v = a.to_json();
        assert_eq!(v.to_string(), r#"{"exponents":[4],"factors":[6],"model":"formal"}"#);
        assert_eq!(BrauerClass::from_json(&v).unwrap(), a);

        let h = BrauerModel::hasse(vec!["v1".into(), "v2".into()], true).unwrap();
        let mut invs = BTreeMap::new();
        invs.insert("v1".to_string(), Rat::new(1, 2));
        invs.insert("v2".to_string(), Rat::new(1, 2));
        let b = h.class_from_invariants(&invs).unwrap();
        let v = b.to_json();
        let back = BrauerClass::from_json(&v).unwrap();
        assert_eq!(back.period(), 2);
        assert_eq!(back.to_json(), v);
    }

    #[test]
    fn model_mismatch_detected() {
        let m = z6();
        let k = BrauerModel::formal(vec![4]).unwrap();
        let err = cls(&m, 1).add(&k.class_from_exponents(&[1]).unwrap());
        assert!(matches!(err, Err(Error::ModelMismatch(_))));
    }
}
