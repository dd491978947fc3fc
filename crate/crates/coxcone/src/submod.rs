//! The submodular cone of a root system: deduplicated facet inequalities,
//! the local (wall-crossing) and global (ray-pair) membership oracles, facet
//! counting, and the classical encodings for types A, B/C, and D.

use std::collections::{BTreeMap, HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::coxfan::CoxeterFan;
use crate::field::Scalar;
use crate::linalg::{self, Vector};
use crate::rootsys::{AmbientDirection, Family, RootSystem, RootSystemSpec};
use crate::weyl::WeylGroup;
use crate::Error;

/// A total map from the fan's rays to scalars, indexed by ray id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportFunction {
    pub values: Vec<Scalar>,
}

impl SupportFunction {
    pub fn new(values: Vec<Scalar>) -> Self {
        SupportFunction { values }
    }

    pub fn zero(fan: &CoxeterFan) -> Self {
        SupportFunction {
            values: vec![Scalar::zero(); fan.ray_count()],
        }
    }

    /// The linear support function `r ↦ ⟨r, v⟩`.
    pub fn linear(rs: &RootSystem, fan: &CoxeterFan, v: &[Scalar]) -> Self {
        SupportFunction {
            values: fan.rays.iter().map(|r| rs.inner(&r.coords, v)).collect(),
        }
    }

    pub fn value(&self, ray: u32) -> &Scalar {
        &self.values[ray as usize]
    }

    /// Pointwise `a·self + b·other`; the Minkowski sum of the realized
    /// polytopes when both scalars are nonnegative and both functions are
    /// submodular.
    pub fn combine(&self, other: &SupportFunction, a: &Scalar, b: &Scalar) -> Result<Self, Error> {
        if a.is_negative() || b.is_negative() {
            return Err(Error::NegativeCoefficient);
        }
        if self.values.len() != other.values.len() {
            return Err(Error::MismatchedRaySets(
                self.values.len(),
                other.values.len(),
            ));
        }
        Ok(SupportFunction {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(x, y)| &(a * x) + &(b * y))
                .collect(),
        })
    }

    pub fn scale(&self, a: &Scalar) -> Self {
        SupportFunction {
            values: self.values.iter().map(|x| a * x).collect(),
        }
    }
}

/// One deduplicated facet of the submodular cone: the wall-crossing
/// inequality of the pair `(w, sᵢ)` keyed by the left coset `w·W_{[d]−N(i)}`.
/// The functional is in left-minus-right form, so membership reads
/// `functional(h) ≥ 0`.
pub struct FacetInequality {
    pub gen: usize,
    /// Canonical (minimum-length) representative of `w·W_{[d]−N(i)}`.
    pub coset_key: u32,
    pub functional: Vec<(u32, Scalar)>,
}

/// One facet inequality per pair `(i, left coset of W_{[d]−N(i)})`, in
/// canonical order (generator index, then coset key discovery order).
pub fn facet_inequalities(
    rs: &RootSystem,
    weyl: &WeylGroup,
    fan: &CoxeterFan,
) -> Vec<FacetInequality> {
    let d = rs.rank;
    let mut out = Vec::new();
    for i in 0..d {
        let neighbors = rs.neighbors(i);
        let complement: Vec<usize> = (0..d).filter(|j| !neighbors.contains(j)).collect();
        let mut seen: HashSet<u32> = HashSet::new();
        for w in 0..weyl.order() as u32 {
            let rep = weyl.coset_canonical(w, &complement);
            if !seen.insert(rep) {
                continue;
            }
            out.push(FacetInequality {
                gen: i,
                coset_key: rep,
                functional: wall_functional(rs, weyl, fan, rep, i),
            });
        }
    }
    out
}

/// The wall-crossing functional of the pair `(w, sᵢ)`.
pub fn wall_functional(
    rs: &RootSystem,
    weyl: &WeylGroup,
    fan: &CoxeterFan,
    w: u32,
    i: usize,
) -> Vec<(u32, Scalar)> {
    let ws = weyl.right_mul(w, i);
    let mut functional = vec![
        (fan.chamber_rays[w as usize][i], Scalar::one()),
        (fan.chamber_rays[ws as usize][i], Scalar::one()),
    ];
    for j in rs.neighbors(i) {
        functional.push((fan.chamber_rays[w as usize][j], rs.cartan.at(j, i).clone()));
    }
    functional
}

/// Closed-form facet counts for the classical families. For type A the
/// parameter `d` is the ground-set size (the rank-(d−1) system A_{d−1});
/// for BC and D it is the rank.
pub fn facet_count_formula(family: Family, d: u128) -> Result<u128, Error> {
    match family {
        Family::A => {
            if d < 2 {
                return Err(Error::InvalidInput(format!("type A needs d ≥ 2, got {d}")));
            }
            // d(d−1)2^{d−3}, which is 1 at d = 2.
            Ok(if d == 2 { 1 } else { d * (d - 1) * (1 << (d - 3)) })
        }
        Family::B | Family::C => {
            if d < 2 {
                return Err(Error::InvalidInput(format!("type BC needs d ≥ 2, got {d}")));
            }
            Ok(2 * d * (d - 1) * 3u128.pow(d as u32 - 2) + d * (1 << (d - 1)))
        }
        Family::D => {
            if d < 3 {
                return Err(Error::InvalidInput(format!("type D needs d ≥ 3, got {d}")));
            }
            Ok(2 * d * (d - 1) * 3u128.pow(d as u32 - 2) - d * (d - 1) * (1 << (d - 2)))
        }
        other => Err(Error::InvalidInput(format!(
            "no closed-form facet count for family {other}"
        ))),
    }
}

pub enum LocalCheck<'a> {
    Member,
    Violated(&'a FacetInequality),
}

impl LocalCheck<'_> {
    pub fn is_member(&self) -> bool {
        matches!(self, LocalCheck::Member)
    }
}

/// Local membership: every deduplicated facet functional must be ≥ 0.
/// Returns the first violated facet in canonical order as certificate.
pub fn is_submodular_local<'a>(
    facets: &'a [FacetInequality],
    h: &SupportFunction,
) -> LocalCheck<'a> {
    for facet in facets {
        if CoxeterFan::apply_functional(&facet.functional, &h.values).is_negative() {
            return LocalCheck::Violated(facet);
        }
    }
    LocalCheck::Member
}

#[derive(Debug, PartialEq, Eq)]
pub enum GlobalCheck {
    Member,
    ViolatedPair(u32, u32),
}

impl GlobalCheck {
    pub fn is_member(&self) -> bool {
        matches!(self, GlobalCheck::Member)
    }
}

/// The global oracle with its ray-pair decompositions precomputed: for each
/// unordered pair `(r, r′)`, the coefficients expressing `r + r′` over the
/// rays of its minimal cone. Checking one `h` is then pure arithmetic.
pub struct GlobalOracle {
    pairs: Vec<(u32, u32, Vec<(u32, Scalar)>)>,
}

impl GlobalOracle {
    pub fn new(rs: &RootSystem, weyl: &WeylGroup, fan: &CoxeterFan) -> Self {
        let n = fan.ray_count() as u32;
        let mut pairs = Vec::with_capacity((n as usize * (n as usize + 1)) / 2);
        for r in 0..n {
            for r_other in r..n {
                let x = linalg::vec_add(
                    &fan.rays[r as usize].coords,
                    &fan.rays[r_other as usize].coords,
                );
                let (w, c) = fan.dominant_rep(rs, weyl, &x);
                let decomposition: Vec<(u32, Scalar)> = c
                    .iter()
                    .enumerate()
                    .filter(|(_, ci)| !ci.is_zero())
                    .map(|(i, ci)| (fan.chamber_rays[w as usize][i], ci.clone()))
                    .collect();
                pairs.push((r, r_other, decomposition));
            }
        }
        GlobalOracle { pairs }
    }

    /// Check `h(r) + h(r′) ≥ h(r + r′)` over all unordered ray pairs.
    pub fn check(&self, h: &SupportFunction) -> GlobalCheck {
        for (r, r_other, decomposition) in &self.pairs {
            let mut lhs = h.value(*r) + h.value(*r_other);
            for (ray, coeff) in decomposition {
                lhs = &lhs - &(coeff * h.value(*ray));
            }
            if lhs.is_negative() {
                return GlobalCheck::ViolatedPair(*r, *r_other);
            }
        }
        GlobalCheck::Member
    }
}

/// One-shot global membership check.
pub fn is_submodular_global(
    rs: &RootSystem,
    weyl: &WeylGroup,
    fan: &CoxeterFan,
    h: &SupportFunction,
) -> GlobalCheck {
    GlobalOracle::new(rs, weyl, fan).check(h)
}

/// True iff every value of `h` is an integer. Only meaningful (and only
/// allowed) for crystallographic systems.
pub fn is_discrete(rs: &RootSystem, h: &SupportFunction) -> Result<bool, Error> {
    if !rs.crystallographic {
        return Err(Error::NonCrystallographic);
    }
    Ok(h.values.iter().all(Scalar::is_integer))
}

// --- JSON interchange ---

#[derive(Serialize, Deserialize)]
pub struct RayValue {
    pub ray: Vec<Scalar>,
    pub h: Scalar,
}

/// On-disk form of a support function: the root system it lives on plus one
/// `{ray, h}` entry per ray, rays serialized as coordinate vectors in the
/// simple-root basis.
#[derive(Serialize, Deserialize)]
pub struct SupportFunctionFile {
    pub rootsystem: RootSystemSpec,
    pub values: Vec<RayValue>,
}

impl SupportFunctionFile {
    pub fn from_function(
        spec: RootSystemSpec,
        fan: &CoxeterFan,
        h: &SupportFunction,
    ) -> Self {
        SupportFunctionFile {
            rootsystem: spec,
            values: fan
                .rays
                .iter()
                .zip(&h.values)
                .map(|(ray, value)| RayValue {
                    ray: ray.coords.clone(),
                    h: value.clone(),
                })
                .collect(),
        }
    }

    /// Resolve the file against a fan, requiring exactly one value per ray.
    pub fn into_function(self, fan: &CoxeterFan) -> Result<SupportFunction, Error> {
        let mut values: Vec<Option<Scalar>> = vec![None; fan.ray_count()];
        let mut unknown = Vec::new();
        for entry in self.values {
            match fan.ray_id(&entry.ray) {
                Some(id) => {
                    if values[id as usize].replace(entry.h).is_some() {
                        return Err(Error::InvalidInput(format!(
                            "duplicate value for ray {}",
                            ray_key(&entry.ray)
                        )));
                    }
                }
                None => unknown.push(ray_key(&entry.ray)),
            }
        }
        if !unknown.is_empty() {
            return Err(Error::UnknownRays(unknown));
        }
        let missing: Vec<String> = fan
            .rays
            .iter()
            .zip(&values)
            .filter(|(_, v)| v.is_none())
            .map(|(ray, _)| ray_key(&ray.coords))
            .collect();
        if !missing.is_empty() {
            return Err(Error::MissingRays(missing));
        }
        Ok(SupportFunction {
            values: values.into_iter().map(Option::unwrap).collect(),
        })
    }
}

pub fn ray_key(coords: &[Scalar]) -> String {
    let parts: Vec<String> = coords.iter().map(Scalar::to_string).collect();
    format!("[{}]", parts.join(","))
}

// --- type A: set functions on subsets of [d] ---

/// Dictionary between proper nonempty subsets of `[d]` (as bitmasks) and the
/// rays of the A_{d−1} fan, via the ambient coset vectors ē_S.
pub struct TypeADictionary {
    pub d: usize,
    mask_to_ray: HashMap<u32, u32>,
    ray_to_mask: Vec<u32>,
}

impl TypeADictionary {
    pub fn new(rs: &RootSystem, fan: &CoxeterFan) -> Result<Self, Error> {
        if rs.spec.family != Family::A {
            return Err(Error::InvalidInput(
                "type-A dictionary needs a type-A system".into(),
            ));
        }
        let d = rs.rank + 1;
        let mut mask_to_ray = HashMap::new();
        let mut ray_to_mask = vec![0u32; fan.ray_count()];
        for mask in 1..((1u32 << d) - 1) {
            let ambient: Vector = (0..d)
                .map(|i| {
                    if mask & (1 << i) != 0 {
                        Scalar::one()
                    } else {
                        Scalar::zero()
                    }
                })
                .collect();
            let coords = rs.ambient_convert(&ambient, AmbientDirection::ToRootCoords)?;
            let ray = fan
                .ray_id(&coords)
                .expect("every proper nonempty subset is a ray of the type-A fan");
            mask_to_ray.insert(mask, ray);
            ray_to_mask[ray as usize] = mask;
        }
        Ok(TypeADictionary {
            d,
            mask_to_ray,
            ray_to_mask,
        })
    }

    pub fn ray_of(&self, mask: u32) -> Option<u32> {
        self.mask_to_ray.get(&mask).copied()
    }

    pub fn mask_of(&self, ray: u32) -> u32 {
        self.ray_to_mask[ray as usize]
    }

    pub fn full_mask(&self) -> u32 {
        (1u32 << self.d) - 1
    }
}

/// Encode a normalized set function (`f(∅) = f([d]) = 0`, entries on all
/// proper nonempty subsets) as a support function.
pub fn encode_type_a(
    dict: &TypeADictionary,
    f: &BTreeMap<u32, Scalar>,
) -> Result<SupportFunction, Error> {
    let full = dict.full_mask();
    for boundary in [0u32, full] {
        if let Some(v) = f.get(&boundary) {
            if !v.is_zero() {
                return Err(Error::NotNormalized(format!(
                    "f must vanish on mask {boundary:#b}"
                )));
            }
        }
    }
    let mut values = vec![None; dict.ray_to_mask.len()];
    for mask in 1..full {
        let value = f
            .get(&mask)
            .ok_or_else(|| Error::IncompleteDomain(format!("subset mask {mask:#b}")))?;
        values[dict.ray_of(mask).unwrap() as usize] = Some(value.clone());
    }
    Ok(SupportFunction {
        values: values.into_iter().map(Option::unwrap).collect(),
    })
}

/// Read a support function back as a set function on proper nonempty subsets.
pub fn decode_type_a(dict: &TypeADictionary, h: &SupportFunction) -> BTreeMap<u32, Scalar> {
    h.values
        .iter()
        .enumerate()
        .map(|(ray, value)| (dict.mask_of(ray as u32), value.clone()))
        .collect()
}

// --- signed sets for types B/C/D ---

/// An admissible signed subset of `[±d]`: disjoint positive/negative index
/// masks, not both empty.
pub type SignedSet = (u32, u32);

pub fn signed_size(s: SignedSet) -> u32 {
    s.0.count_ones() + s.1.count_ones()
}

/// All admissible signed subsets of `[±d]` with sizes in the given range,
/// ascending by (positive mask, negative mask).
pub fn admissible_sets(d: usize, min_size: u32, max_size: u32) -> Vec<SignedSet> {
    let full = (1u32 << d) - 1;
    let mut out = Vec::new();
    for pos in 0..=full {
        for neg in 0..=full {
            if pos & neg != 0 {
                continue;
            }
            let size = signed_size((pos, neg));
            if size >= min_size.max(1) && size <= max_size {
                out.push((pos, neg));
            }
        }
    }
    out.sort_unstable();
    out
}

/// The ambient vector `e_S = e_A − e_B` of a signed set, optionally halved.
pub fn signed_ambient(d: usize, s: SignedSet, halved: bool) -> Vector {
    let scale = if halved {
        Scalar::ratio(1, 2)
    } else {
        Scalar::one()
    };
    (0..d)
        .map(|i| {
            if s.0 & (1 << i) != 0 {
                scale.clone()
            } else if s.1 & (1 << i) != 0 {
                -&scale
            } else {
                Scalar::zero()
            }
        })
        .collect()
}

pub fn signed_set_label(s: SignedSet) -> String {
    let mut parts = Vec::new();
    for i in 0..32 {
        if s.0 & (1 << i) != 0 {
            parts.push(format!("{}", i + 1));
        }
        if s.1 & (1 << i) != 0 {
            parts.push(format!("-{}", i + 1));
        }
    }
    format!("{{{}}}", parts.join(","))
}

/// Dictionary between admissible signed subsets of `[±d]` and the rays of
/// the C_d fan (`e_S` for every admissible `S`).
pub struct TypeBCDictionary {
    pub d: usize,
    set_to_ray: HashMap<SignedSet, u32>,
    ray_to_set: Vec<SignedSet>,
}

impl TypeBCDictionary {
    pub fn new(rs: &RootSystem, fan: &CoxeterFan) -> Result<Self, Error> {
        if rs.spec.family != Family::C {
            return Err(Error::InvalidInput(
                "type-BC dictionary needs a type-C system".into(),
            ));
        }
        let d = rs.rank;
        let mut set_to_ray = HashMap::new();
        let mut ray_to_set = vec![(0u32, 0u32); fan.ray_count()];
        for s in admissible_sets(d, 1, d as u32) {
            let coords =
                rs.ambient_convert(&signed_ambient(d, s, false), AmbientDirection::ToRootCoords)?;
            let ray = fan
                .ray_id(&coords)
                .expect("every admissible signed set is a ray of the type-C fan");
            set_to_ray.insert(s, ray);
            ray_to_set[ray as usize] = s;
        }
        Ok(TypeBCDictionary {
            d,
            set_to_ray,
            ray_to_set,
        })
    }

    pub fn ray_of(&self, s: SignedSet) -> Option<u32> {
        self.set_to_ray.get(&s).copied()
    }

    pub fn set_of(&self, ray: u32) -> SignedSet {
        self.ray_to_set[ray as usize]
    }
}

/// Encode a function on all admissible signed subsets (3^d − 1 of them) as a
/// C_d support function.
pub fn encode_type_bc(
    dict: &TypeBCDictionary,
    f: &BTreeMap<SignedSet, Scalar>,
) -> Result<SupportFunction, Error> {
    let mut values = vec![None; dict.ray_to_set.len()];
    for s in admissible_sets(dict.d, 1, dict.d as u32) {
        let value = f
            .get(&s)
            .ok_or_else(|| Error::IncompleteDomain(signed_set_label(s)))?;
        values[dict.ray_of(s).unwrap() as usize] = Some(value.clone());
    }
    Ok(SupportFunction {
        values: values.into_iter().map(Option::unwrap).collect(),
    })
}

/// Dictionary between the D_d ray classes and admissible signed sets:
/// `e_S` for `|S| ≤ d−2` and `½e_S` for `|S| = d`.
pub struct TypeDDictionary {
    pub d: usize,
    small_to_ray: HashMap<SignedSet, u32>,
    full_to_ray: HashMap<SignedSet, u32>,
}

impl TypeDDictionary {
    pub fn ray_of_small(&self, s: SignedSet) -> Option<u32> {
        self.small_to_ray.get(&s).copied()
    }

    pub fn ray_of_full(&self, s: SignedSet) -> Option<u32> {
        self.full_to_ray.get(&s).copied()
    }

    pub fn new(rs: &RootSystem, fan: &CoxeterFan) -> Result<Self, Error> {
        if rs.spec.family != Family::D {
            return Err(Error::InvalidInput(
                "type-D dictionary needs a type-D system".into(),
            ));
        }
        let d = rs.rank;
        let mut small_to_ray = HashMap::new();
        let mut full_to_ray = HashMap::new();
        for s in admissible_sets(d, 1, d as u32 - 2) {
            let coords =
                rs.ambient_convert(&signed_ambient(d, s, false), AmbientDirection::ToRootCoords)?;
            let ray = fan.ray_id(&coords).expect("small signed set is a D ray");
            small_to_ray.insert(s, ray);
        }
        for s in admissible_sets(d, d as u32, d as u32) {
            let coords =
                rs.ambient_convert(&signed_ambient(d, s, true), AmbientDirection::ToRootCoords)?;
            let ray = fan.ray_id(&coords).expect("halved full signed set is a D ray");
            full_to_ray.insert(s, ray);
        }
        Ok(TypeDDictionary {
            d,
            small_to_ray,
            full_to_ray,
        })
    }
}

/// Encode a disubmodular pair: `f` on admissible sets of size ≤ d−2, `g` on
/// admissible sets of size d.
pub fn encode_type_d(
    dict: &TypeDDictionary,
    fan: &CoxeterFan,
    f: &BTreeMap<SignedSet, Scalar>,
    g: &BTreeMap<SignedSet, Scalar>,
) -> Result<SupportFunction, Error> {
    let d = dict.d;
    let mut values = vec![None; fan.ray_count()];
    for s in admissible_sets(d, 1, d as u32 - 2) {
        let value = f
            .get(&s)
            .ok_or_else(|| Error::IncompleteDomain(signed_set_label(s)))?;
        values[dict.small_to_ray[&s] as usize] = Some(value.clone());
    }
    for s in admissible_sets(d, d as u32, d as u32) {
        let value = g
            .get(&s)
            .ok_or_else(|| Error::IncompleteDomain(signed_set_label(s)))?;
        values[dict.full_to_ray[&s] as usize] = Some(value.clone());
    }
    Ok(SupportFunction {
        values: values.into_iter().map(Option::unwrap).collect(),
    })
}

/// Extend a disubmodular pair to a function on all admissible signed sets:
/// `f` on sizes ≤ d−2, `g(Sa) + g(Sā)` on sizes d−1, and `2g` on size d.
/// The pair is disubmodular iff the result is bisubmodular.
pub fn disubmodular_bridge(
    d: usize,
    f: &BTreeMap<SignedSet, Scalar>,
    g: &BTreeMap<SignedSet, Scalar>,
) -> Result<BTreeMap<SignedSet, Scalar>, Error> {
    let mut h = BTreeMap::new();
    for s in admissible_sets(d, 1, d as u32) {
        let size = signed_size(s);
        let value = if size <= d as u32 - 2 {
            f.get(&s)
                .ok_or_else(|| Error::IncompleteDomain(signed_set_label(s)))?
                .clone()
        } else if size == d as u32 - 1 {
            let support = s.0 | s.1;
            let free = (0..d).find(|i| support & (1 << i) == 0).expect("one free index");
            let with_pos = (s.0 | 1 << free, s.1);
            let with_neg = (s.0, s.1 | 1 << free);
            let ga = g
                .get(&with_pos)
                .ok_or_else(|| Error::IncompleteDomain(signed_set_label(with_pos)))?;
            let gb = g
                .get(&with_neg)
                .ok_or_else(|| Error::IncompleteDomain(signed_set_label(with_neg)))?;
            ga + gb
        } else {
            let value = g
                .get(&s)
                .ok_or_else(|| Error::IncompleteDomain(signed_set_label(s)))?;
            &Scalar::from_int(2) * value
        };
        h.insert(s, value);
    }
    Ok(h)
}

/// A violated classical bisubmodular inequality, reported as the signed
/// sets whose values enter it.
#[derive(Debug)]
pub struct BisubmodularViolation {
    pub sets: Vec<SignedSet>,
}

/// The classical (displayed) local bisubmodular system, checked directly on
/// signed sets with `f(∅) = 0`:
///
/// * `f(Sa) + f(Sb) ≥ f(S) + f(Sab)` for admissible `S` with `|S| ≤ d−2`
///   and an admissible pair `{a, b}` disjoint from `±S`;
/// * `f(Sa) + f(Sā) ≥ 2 f(S)` for `|S| = d−1` and the free index `a`.
///
/// This is an independent oracle: it never touches the fan machinery.
pub fn check_bisubmodular_classical(
    d: usize,
    f: &BTreeMap<SignedSet, Scalar>,
) -> Result<Option<BisubmodularViolation>, Error> {
    let get = |s: SignedSet| -> Result<Scalar, Error> {
        if s == (0, 0) {
            return Ok(Scalar::zero());
        }
        f.get(&s)
            .cloned()
            .ok_or_else(|| Error::IncompleteDomain(signed_set_label(s)))
    };
    // Signed elements are encoded as (index, sign).
    let add = |s: SignedSet, e: (usize, bool)| -> SignedSet {
        if e.1 {
            (s.0 | 1 << e.0, s.1)
        } else {
            (s.0, s.1 | 1 << e.0)
        }
    };
    let mut smalls = admissible_sets(d, 1, d as u32 - 2);
    smalls.insert(0, (0, 0));
    for s in smalls {
        let support = s.0 | s.1;
        let free: Vec<usize> = (0..d).filter(|i| support & (1 << i) == 0).collect();
        for (ai, &a_idx) in free.iter().enumerate() {
            for &b_idx in &free[ai + 1..] {
                for a_sign in [true, false] {
                    for b_sign in [true, false] {
                        let a = (a_idx, a_sign);
                        let b = (b_idx, b_sign);
                        let lhs = &get(add(s, a))? + &get(add(s, b))?;
                        let rhs = &get(s)? + &get(add(add(s, a), b))?;
                        if (&lhs - &rhs).is_negative() {
                            return Ok(Some(BisubmodularViolation {
                                sets: vec![add(s, a), add(s, b), s, add(add(s, a), b)],
                            }));
                        }
                    }
                }
            }
        }
    }
    for s in admissible_sets(d, d as u32 - 1, d as u32 - 1) {
        let support = s.0 | s.1;
        let free = (0..d).find(|i| support & (1 << i) == 0).expect("one free index");
        let with_pos = add(s, (free, true));
        let with_neg = add(s, (free, false));
        let lhs = &get(with_pos)? + &get(with_neg)?;
        let rhs = &Scalar::from_int(2) * &get(s)?;
        if (&lhs - &rhs).is_negative() {
            return Ok(Some(BisubmodularViolation {
                sets: vec![with_pos, with_neg, s],
            }));
        }
    }
    Ok(None)
}

/// The classical local submodular system on subsets of `[d]` with
/// `f(∅) = f([d]) = 0`: `f(Sa) + f(Sb) ≥ f(S) + f(Sab)`. Independent of the
/// fan machinery.
pub fn check_submodular_classical(
    d: usize,
    f: &BTreeMap<u32, Scalar>,
) -> Result<Option<(u32, u32, u32, u32)>, Error> {
    let full = (1u32 << d) - 1;
    let get = |mask: u32| -> Result<Scalar, Error> {
        if mask == 0 || mask == full {
            return Ok(Scalar::zero());
        }
        f.get(&mask)
            .cloned()
            .ok_or_else(|| Error::IncompleteDomain(format!("subset mask {mask:#b}")))
    };
    for s in 0..=full {
        for a in 0..d {
            if s & (1 << a) != 0 {
                continue;
            }
            for b in (a + 1)..d {
                if s & (1 << b) != 0 {
                    continue;
                }
                let sa = s | 1 << a;
                let sb = s | 1 << b;
                let sab = sa | 1 << b;
                let lhs = &get(sa)? + &get(sb)?;
                let rhs = &get(s)? + &get(sab)?;
                if (&lhs - &rhs).is_negative() {
                    return Ok(Some((sa, sb, s, sab)));
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::DEFAULT_CAP;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn setup(family: Family, rank: usize) -> (RootSystem, WeylGroup, CoxeterFan) {
        let rs = RootSystem::build(RootSystemSpec::new(family, rank)).unwrap();
        let weyl = WeylGroup::enumerate(&rs, DEFAULT_CAP).unwrap();
        let fan = CoxeterFan::build(&rs, &weyl);
        (rs, weyl, fan)
    }

    #[test]
    fn facet_counts_small() {
        let (rs, weyl, fan) = setup(Family::A, 2);
        assert_eq!(facet_inequalities(&rs, &weyl, &fan).len(), 6);
        let (rs, weyl, fan) = setup(Family::C, 3);
        let facets = facet_inequalities(&rs, &weyl, &fan);
        assert_eq!(facets.len(), 48);
        // Per-generator symmetry classes: 12 + 24 + 12.
        let mut per_gen = [0usize; 3];
        for f in &facets {
            per_gen[f.gen] += 1;
        }
        assert_eq!(per_gen, [12, 24, 12]);
        let (rs, weyl, fan) = setup(Family::D, 4);
        assert_eq!(facet_inequalities(&rs, &weyl, &fan).len(), 168);
    }

    #[test]
    fn formula_examples() {
        assert_eq!(facet_count_formula(Family::A, 5).unwrap(), 80);
        assert_eq!(facet_count_formula(Family::B, 2).unwrap(), 8);
        assert_eq!(facet_count_formula(Family::C, 2).unwrap(), 8);
        // D3 ≅ A3 share their count.
        assert_eq!(
            facet_count_formula(Family::D, 3).unwrap(),
            facet_count_formula(Family::A, 4).unwrap()
        );
        assert!(facet_count_formula(Family::H3, 3).is_err());
    }

    #[test]
    fn walls_in_same_coset_share_the_functional() {
        let (rs, weyl, fan) = setup(Family::C, 3);
        for i in 0..rs.rank {
            let neighbors = rs.neighbors(i);
            let complement: Vec<usize> =
                (0..rs.rank).filter(|j| !neighbors.contains(j)).collect();
            for w in 0..weyl.order() as u32 {
                let rep = weyl.coset_canonical(w, &complement);
                let own: BTreeMap<u32, Scalar> =
                    wall_functional(&rs, &weyl, &fan, w, i).into_iter().collect();
                let canonical: BTreeMap<u32, Scalar> = wall_functional(&rs, &weyl, &fan, rep, i)
                    .into_iter()
                    .collect();
                assert_eq!(own, canonical);
            }
        }
    }

    #[test]
    fn zero_function_is_member() {
        let (rs, weyl, fan) = setup(Family::B, 3);
        let facets = facet_inequalities(&rs, &weyl, &fan);
        assert!(is_submodular_local(&facets, &SupportFunction::zero(&fan)).is_member());
    }

    #[test]
    fn type_a_constant_one_is_member() {
        let (rs, weyl, fan) = setup(Family::A, 3);
        let dict = TypeADictionary::new(&rs, &fan).unwrap();
        let mut f = BTreeMap::new();
        for mask in 1..dict.full_mask() {
            f.insert(mask, Scalar::one());
        }
        let h = encode_type_a(&dict, &f).unwrap();
        let facets = facet_inequalities(&rs, &weyl, &fan);
        assert!(is_submodular_local(&facets, &h).is_member());
        assert_eq!(decode_type_a(&dict, &h), f);
    }

    #[test]
    fn type_a_examples() {
        // Rank function of U_{1,3}, normalized: f(S) = min(|S|,1) − |S|/3.
        let (rs, weyl, fan) = setup(Family::A, 2);
        let dict = TypeADictionary::new(&rs, &fan).unwrap();
        let mut f = BTreeMap::new();
        for mask in 1u32..dict.full_mask() {
            let size = mask.count_ones() as i64;
            let value =
                &Scalar::from_int(size.min(1)) - &Scalar::ratio(size, 3);
            f.insert(mask, value);
        }
        let h = encode_type_a(&dict, &f).unwrap();
        let facets = facet_inequalities(&rs, &weyl, &fan);
        assert!(is_submodular_local(&facets, &h).is_member());

        // d = 4: f(S) = min(|S|, 4 − |S|) is submodular.
        let (rs, weyl, fan) = setup(Family::A, 3);
        let dict = TypeADictionary::new(&rs, &fan).unwrap();
        let mut f = BTreeMap::new();
        for mask in 1u32..dict.full_mask() {
            let size = mask.count_ones() as i64;
            f.insert(mask, Scalar::from_int(size.min(4 - size)));
        }
        let h = encode_type_a(&dict, &f).unwrap();
        let facets = facet_inequalities(&rs, &weyl, &fan);
        assert!(is_submodular_local(&facets, &h).is_member());
        assert!(check_submodular_classical(4, &f).unwrap().is_none());
    }

    #[test]
    fn type_a_rejects_unnormalized() {
        let (rs, _, fan) = setup(Family::A, 2);
        let dict = TypeADictionary::new(&rs, &fan).unwrap();
        let mut f = BTreeMap::new();
        for mask in 1..dict.full_mask() {
            f.insert(mask, Scalar::one());
        }
        f.insert(dict.full_mask(), Scalar::one());
        assert!(matches!(
            encode_type_a(&dict, &f),
            Err(Error::NotNormalized(_))
        ));
    }

    #[test]
    fn type_bc_examples() {
        let (rs, weyl, fan) = setup(Family::C, 2);
        let dict = TypeBCDictionary::new(&rs, &fan).unwrap();
        let facets = facet_inequalities(&rs, &weyl, &fan);

        // f ≡ 1 realizes the diamond; member.
        let mut ones = BTreeMap::new();
        for s in admissible_sets(2, 1, 2) {
            ones.insert(s, Scalar::one());
        }
        let h = encode_type_bc(&dict, &ones).unwrap();
        assert!(is_submodular_local(&facets, &h).is_member());
        assert!(check_bisubmodular_classical(2, &ones).unwrap().is_none());

        // Spec'd violation: f(singletons) = 1, f({1,2}) = 3, others 1.
        let mut f = BTreeMap::new();
        for s in admissible_sets(2, 1, 2) {
            f.insert(s, Scalar::one());
        }
        f.insert((0b11, 0), Scalar::from_int(3));
        let h = encode_type_bc(&dict, &f).unwrap();
        assert!(!is_submodular_local(&facets, &h).is_member());
        assert!(check_bisubmodular_classical(2, &f).unwrap().is_some());

        // f(S) = |S| is bisubmodular; f(S) = −|S| is not.
        for d in [2usize, 3] {
            let (rs, weyl, fan) = setup(Family::C, d);
            let dict = TypeBCDictionary::new(&rs, &fan).unwrap();
            let facets = facet_inequalities(&rs, &weyl, &fan);
            let size_fn = |sign: i64| {
                admissible_sets(d, 1, d as u32)
                    .into_iter()
                    .map(|s| (s, Scalar::from_int(sign * signed_size(s) as i64)))
                    .collect::<BTreeMap<_, _>>()
            };
            let pos = encode_type_bc(&dict, &size_fn(1)).unwrap();
            assert!(is_submodular_local(&facets, &pos).is_member());
            let neg = encode_type_bc(&dict, &size_fn(-1)).unwrap();
            assert!(!is_submodular_local(&facets, &neg).is_member());
            assert!(check_bisubmodular_classical(d, &size_fn(-1))
                .unwrap()
                .is_some());
        }
    }

    #[test]
    fn type_d_examples() {
        let (rs, weyl, fan) = setup(Family::D, 3);
        let dict = TypeDDictionary::new(&rs, &fan).unwrap();
        let facets = facet_inequalities(&rs, &weyl, &fan);

        // f ≡ 0, g ≡ 0 is trivially disubmodular.
        let zeros_f: BTreeMap<SignedSet, Scalar> = admissible_sets(3, 1, 1)
            .into_iter()
            .map(|s| (s, Scalar::zero()))
            .collect();
        let zeros_g: BTreeMap<SignedSet, Scalar> = admissible_sets(3, 3, 3)
            .into_iter()
            .map(|s| (s, Scalar::zero()))
            .collect();
        let h = encode_type_d(&dict, &fan, &zeros_f, &zeros_g).unwrap();
        assert!(is_submodular_local(&facets, &h).is_member());

        // The octahedron: f ≡ 1 on singletons, g ≡ 1/2 on full sets. Its
        // bridge is the constant-one bisubmodular function.
        let f: BTreeMap<SignedSet, Scalar> = admissible_sets(3, 1, 1)
            .into_iter()
            .map(|s| (s, Scalar::one()))
            .collect();
        let g: BTreeMap<SignedSet, Scalar> = admissible_sets(3, 3, 3)
            .into_iter()
            .map(|s| (s, Scalar::ratio(1, 2)))
            .collect();
        let h = encode_type_d(&dict, &fan, &f, &g).unwrap();
        assert!(is_submodular_local(&facets, &h).is_member());
        let bridge = disubmodular_bridge(3, &f, &g).unwrap();
        assert!(bridge.values().all(|v| *v == Scalar::one()));
        assert!(check_bisubmodular_classical(3, &bridge).unwrap().is_none());

        // A non-member: the cube values f(S) = |S|, g(S) = |S|/2 restrict a
        // C3 member whose normal fan the D3 arrangement does not coarsen.
        let f: BTreeMap<SignedSet, Scalar> = admissible_sets(3, 1, 1)
            .into_iter()
            .map(|s| (s, Scalar::from_int(signed_size(s) as i64)))
            .collect();
        let g: BTreeMap<SignedSet, Scalar> = admissible_sets(3, 3, 3)
            .into_iter()
            .map(|s| (s, Scalar::ratio(signed_size(s) as i64, 2)))
            .collect();
        let h = encode_type_d(&dict, &fan, &f, &g).unwrap();
        assert!(!is_submodular_local(&facets, &h).is_member());
    }

    #[test]
    fn global_oracle_examples() {
        let (rs, weyl, fan) = setup(Family::A, 2);
        // Linear functions are members with equality everywhere.
        let v = vec![Scalar::from_int(3), Scalar::from_int(-2)];
        let linear = SupportFunction::linear(&rs, &fan, &v);
        assert!(is_submodular_global(&rs, &weyl, &fan, &linear).is_member());

        // h(λ₀) = h(s₀λ₀) = 0, h(λ₁) = 1, else 0: violated by the pair
        // (λ₀, s₀λ₀) since λ₀ + s₀λ₀ = λ₁.
        let mut h = SupportFunction::zero(&fan);
        let l1 = fan.ray_id(&rs.fund_weights[1]).unwrap();
        h.values[l1 as usize] = Scalar::one();
        let l0 = fan.ray_id(&rs.fund_weights[0]).unwrap();
        let s0l0 = fan
            .ray_id(&weyl.act(weyl.right_mul(0, 0), &rs.fund_weights[0]))
            .unwrap();
        match is_submodular_global(&rs, &weyl, &fan, &h) {
            GlobalCheck::ViolatedPair(a, b) => {
                let pair = if a <= b { (a, b) } else { (b, a) };
                let expected = if l0 <= s0l0 { (l0, s0l0) } else { (s0l0, l0) };
                assert_eq!(pair, expected);
            }
            GlobalCheck::Member => panic!("expected a violation"),
        }
    }

    #[test]
    fn local_and_global_agree_on_random_functions() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for (family, rank) in [(Family::A, 2), (Family::C, 2)] {
            let (rs, weyl, fan) = setup(family, rank);
            let facets = facet_inequalities(&rs, &weyl, &fan);
            let oracle = GlobalOracle::new(&rs, &weyl, &fan);
            for _ in 0..100 {
                let h = SupportFunction::new(
                    (0..fan.ray_count())
                        .map(|_| Scalar::from_int(rng.gen_range(-20..=20)))
                        .collect(),
                );
                assert_eq!(
                    is_submodular_local(&facets, &h).is_member(),
                    oracle.check(&h).is_member()
                );
            }
        }
    }

    #[test]
    fn is_discrete_examples() {
        let (rs, weyl, fan) = setup(Family::A, 2);
        let _ = weyl;
        // Inverse-Cartan row of A2: values 2/3 and 1/3 are not integers.
        let row: Vec<Scalar> = fan
            .rays
            .iter()
            .map(|r| rs.inverse_cartan.at(0, r.owner).clone())
            .collect();
        let h = SupportFunction::new(row);
        assert!(!is_discrete(&rs, &h).unwrap());
        assert!(is_discrete(&rs, &h.scale(&Scalar::from_int(3))).unwrap());
        let ones = SupportFunction::new(vec![Scalar::one(); fan.ray_count()]);
        assert!(is_discrete(&rs, &ones).unwrap());

        let (h3, w3, fan3) = setup(Family::H3, 3);
        let _ = w3;
        assert!(matches!(
            is_discrete(&h3, &SupportFunction::zero(&fan3)),
            Err(Error::NonCrystallographic)
        ));
    }

    #[test]
    fn support_function_file_round_trip() {
        let (rs, weyl, fan) = setup(Family::C, 2);
        let _ = weyl;
        let h = SupportFunction::new(
            (0..fan.ray_count() as i64).map(Scalar::from_int).collect(),
        );
        let file = SupportFunctionFile::from_function(rs.spec, &fan, &h);
        let json = serde_json::to_string(&file).unwrap();
        let parsed: SupportFunctionFile = serde_json::from_str(&json).unwrap();
        let restored = parsed.into_function(&fan).unwrap();
        assert_eq!(restored.values, h.values);
    }

    #[test]
    fn support_function_file_reports_missing_and_unknown_rays() {
        let (rs, weyl, fan) = setup(Family::A, 2);
        let _ = weyl;
        let h = SupportFunction::zero(&fan);
        let mut file = SupportFunctionFile::from_function(rs.spec, &fan, &h);
        file.values.pop();
        let err = file.into_function(&fan).unwrap_err();
        assert!(matches!(err, Error::MissingRays(ref v) if v.len() == 1));

        let mut file = SupportFunctionFile::from_function(rs.spec, &fan, &h);
        file.values.push(RayValue {
            ray: vec![Scalar::from_int(9), Scalar::from_int(9)],
            h: Scalar::zero(),
        });
        assert!(matches!(
            file.into_function(&fan),
            Err(Error::UnknownRays(_))
        ));
    }

    #[test]
    fn minkowski_combination() {
        let (rs, weyl, fan) = setup(Family::A, 2);
        let _ = (&rs, &weyl);
        let h = SupportFunction::new(
            (0..fan.ray_count() as i64).map(Scalar::from_int).collect(),
        );
        let zero = SupportFunction::zero(&fan);
        let sum = h.combine(&zero, &Scalar::one(), &Scalar::one()).unwrap();
        assert_eq!(sum.values, h.values);
        assert!(h
            .combine(&zero, &Scalar::from_int(-1), &Scalar::one())
            .is_err());
    }
}
