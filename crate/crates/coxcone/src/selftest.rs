//! The acceptance self-test: one function per criterion, shared between the
//! `selftest` CLI verb and the integration suite. Every check is exact; the
//! random trials use fixed seeds so runs are reproducible.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::rc::Rc;
use std::time::Instant;

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::coxfan::CoxeterFan;
use crate::defcone::{
    self, nef_dimension_at, predict_indecomposable_weight, support_weight_polytope,
    symmetric_membership, SymmetricCheck,
};

use crate::field::Scalar;
use crate::linalg::{self, Vector};
use crate::rootsys::{Family, RootSystem, RootSystemSpec};
use crate::submod::{
    admissible_sets, check_bisubmodular_classical, disubmodular_bridge, encode_type_bc,
    encode_type_d, facet_count_formula, facet_inequalities, is_submodular_local, FacetInequality,
    GlobalOracle, SignedSet, SupportFunction, TypeADictionary, TypeBCDictionary, TypeDDictionary,
};
use crate::weyl::{WeylGroup, DEFAULT_CAP};

pub struct CriterionReport {
    pub number: String,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

impl CriterionReport {
    pub fn line(&self) -> String {
        format!(
            "[{:>3}] {:<34} {} ({:.2}s) {}",
            self.number,
            self.name,
            if self.passed { "PASS" } else { "FAIL" },
            self.seconds,
            self.detail
        )
    }
}

/// A fully materialized system: root data, group, fan, facets.
pub struct Built {
    pub rs: RootSystem,
    pub weyl: WeylGroup,
    pub fan: CoxeterFan,
    pub facets: Vec<FacetInequality>,
}

pub fn build_full(spec: RootSystemSpec) -> Result<Built, crate::Error> {
    let rs = RootSystem::build(spec)?;
    let weyl = WeylGroup::enumerate(&rs, DEFAULT_CAP)?;
    let fan = CoxeterFan::build(&rs, &weyl);
    let facets = facet_inequalities(&rs, &weyl, &fan);
    Ok(Built {
        rs,
        weyl,
        fan,
        facets,
    })
}

/// Builds are cached across criteria; several of them revisit the same
/// systems.
#[derive(Default)]
pub struct Session {
    cache: HashMap<RootSystemSpec, Rc<Built>>,
}

impl Session {
    pub fn new() -> Self {
        Session::default()
    }

    pub fn built(&mut self, spec: RootSystemSpec) -> Rc<Built> {
        self.cache
            .entry(spec)
            .or_insert_with(|| Rc::new(build_full(spec).expect("valid internal spec")))
            .clone()
    }
}

fn run(
    number: &str,
    name: &'static str,
    body: impl FnOnce() -> Result<String, String>,
) -> CriterionReport {
    let start = Instant::now();
    let (passed, detail) = match body() {
        Ok(detail) => (true, detail),
        Err(detail) => (false, detail),
    };
    CriterionReport {
        number: number.to_string(),
        name,
        passed,
        detail,
        seconds: start.elapsed().as_secs_f64(),
    }
}

fn spec(family: Family, rank: usize) -> RootSystemSpec {
    RootSystemSpec::new(family, rank)
}

/// Support function of the coweight polytope P(λ_k^∨).
fn coweight_support(b: &Built, k: usize) -> SupportFunction {
    support_weight_polytope(&b.rs, &b.fan, &b.rs.fund_coweights[k]).expect("coweights are dominant")
}

/// `h + t·h₀` with the smallest nonnegative scalar `t` (plus one) that makes
/// every facet inequality strictly hold; `h₀` must be strictly submodular.
fn memberize(facets: &[FacetInequality], h: &SupportFunction, h0: &SupportFunction) -> SupportFunction {
    let mut t = Scalar::zero();
    for facet in facets {
        let value = CoxeterFan::apply_functional(&facet.functional, &h.values);
        if value.is_negative() {
            let base = CoxeterFan::apply_functional(&facet.functional, &h0.values);
            let needed = &(-&value) / &base;
            if needed > t {
                t = needed;
            }
        }
    }
    t = &t + &Scalar::one();
    h.combine(h0, &Scalar::one(), &t).expect("same fan")
}

/// Integer-preserving variant: assumes every facet value of `h₀` is a
/// positive integer (true for the 2ρ^∨ coweight polytope of a
/// crystallographic system), so `t = max(0, 1 − min I(h))` keeps `h + t·h₀`
/// integral.
fn memberize_integer(
    facets: &[FacetInequality],
    h: &SupportFunction,
    h0: &SupportFunction,
) -> SupportFunction {
    let mut t = Scalar::zero();
    for facet in facets {
        let value = CoxeterFan::apply_functional(&facet.functional, &h.values);
        debug_assert!(
            CoxeterFan::apply_functional(&facet.functional, &h0.values) >= Scalar::one()
        );
        let needed = &Scalar::one() - &value;
        if needed > t {
            t = needed;
        }
    }
    h.combine(h0, &Scalar::one(), &t).expect("same fan")
}

// --- criterion 1 ---

pub fn criterion_1_facet_counts(session: &mut Session) -> CriterionReport {
    run("1", "facet counts match closed forms", || {
        // Expected values derived independently from the parabolic-order
        // sums Σᵢ |W|/|W_{[d]−N(i)}| before comparing either side.
        let type_a: [(usize, u128); 4] = [(3, 6), (4, 24), (5, 80), (6, 240)];
        let type_bc: [(usize, u128); 4] = [(2, 8), (3, 48), (4, 248), (5, 1160)];
        let type_d: [(usize, u128); 3] = [(3, 24), (4, 168), (5, 920)];
        let mut lines = Vec::new();
        for (d, expected) in type_a {
            let formula = facet_count_formula(Family::A, d as u128).map_err(|e| e.to_string())?;
            let built = session.built(spec(Family::A, d - 1));
            let enumerated = built.facets.len() as u128;
            if formula != expected || enumerated != expected {
                return Err(format!(
                    "A ground-set {d}: formula {formula}, enumerated {enumerated}, expected {expected}"
                ));
            }
            lines.push(format!("A:{enumerated}"));
        }
        for (d, expected) in type_bc {
            let formula = facet_count_formula(Family::C, d as u128).map_err(|e| e.to_string())?;
            let built = session.built(spec(Family::C, d));
            let enumerated = built.facets.len() as u128;
            if formula != expected || enumerated != expected {
                return Err(format!(
                    "BC{d}: formula {formula}, enumerated {enumerated}, expected {expected}"
                ));
            }
            lines.push(format!("BC:{enumerated}"));
        }
        // B and C share a fan; spot-check the B side once.
        let b3 = session.built(spec(Family::B, 3));
        if b3.facets.len() != 48 {
            return Err(format!("B3 enumerated {} ≠ 48", b3.facets.len()));
        }
        for (d, expected) in type_d {
            let formula = facet_count_formula(Family::D, d as u128).map_err(|e| e.to_string())?;
            let built = session.built(spec(Family::D, d));
            let enumerated = built.facets.len() as u128;
            if formula != expected || enumerated != expected {
                return Err(format!(
                    "D{d}: formula {formula}, enumerated {enumerated}, expected {expected}"
                ));
            }
            lines.push(format!("D:{enumerated}"));
        }
        Ok(lines.join(" "))
    })
}

// --- criterion 2 ---

pub fn criterion_2_inverse_cartan(session: &mut Session, include_h4: bool) -> CriterionReport {
    run("2", "inverse-Cartan orbit maxima", || {
        let mut specs = vec![
            spec(Family::A, 1),
            spec(Family::A, 2),
            spec(Family::A, 3),
            spec(Family::A, 4),
            spec(Family::B, 2),
            spec(Family::B, 3),
            spec(Family::B, 4),
            spec(Family::C, 2),
            spec(Family::C, 3),
            spec(Family::C, 4),
            spec(Family::D, 3),
            spec(Family::D, 4),
            spec(Family::F4, 4),
            spec(Family::G2, 2),
            spec(Family::H3, 3),
            RootSystemSpec::i2(3),
            RootSystemSpec::i2(4),
            RootSystemSpec::i2(5),
            RootSystemSpec::i2(6),
        ];
        if include_h4 {
            specs.push(spec(Family::H4, 4));
        }
        let mut checked = 0usize;
        for s in specs {
            let built = session.built(s);
            let rs = &built.rs;
            for k in 0..rs.rank {
                let orbit = built.weyl.orbit(rs, &rs.fund_coweights[k]);
                for i in 0..rs.rank {
                    let max = orbit
                        .iter()
                        .map(|y| rs.inner(&rs.fund_weights[i], y))
                        .max()
                        .expect("nonempty orbit");
                    if max != *rs.inverse_cartan.at(k, i) {
                        return Err(format!(
                            "{s}: max ⟨λ_{i}, orbit(λ_{k}^∨)⟩ = {max} ≠ A⁻¹[{k}][{i}]"
                        ));
                    }
                    checked += 1;
                }
            }
        }
        Ok(format!("{checked} (k,i) pairs exact"))
    })
}

// --- criterion 3 ---

pub fn criterion_3_oracle_equivalence(session: &mut Session) -> CriterionReport {
    run("3", "local and global oracles agree", || {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let systems = [
            spec(Family::A, 3),
            spec(Family::B, 3),
            spec(Family::C, 3),
            spec(Family::D, 4),
            spec(Family::H3, 3),
        ];
        let mut detail = Vec::new();
        for s in systems {
            let built = session.built(s);
            let oracle = GlobalOracle::new(&built.rs, &built.weyl, &built.fan);
            let h0 = support_weight_polytope(&built.rs, &built.fan, &built.rs.two_rho_check())
                .expect("strictly dominant");
            let mut members = 0usize;
            let mut violations = 0usize;
            for trial in 0..1000 {
                let mut h = SupportFunction::new(
                    (0..built.fan.ray_count())
                        .map(|_| Scalar::from_int(rng.gen_range(-20..=20)))
                        .collect(),
                );
                // Project a third of the samples into the cone so both
                // verdicts are exercised.
                if trial % 3 == 0 {
                    h = memberize(&built.facets, &h, &h0);
                }
                let local = is_submodular_local(&built.facets, &h).is_member();
                let global = oracle.check(&h).is_member();
                if local != global {
                    return Err(format!(
                        "{s}: trial {trial} disagrees (local {local}, global {global})"
                    ));
                }
                if local {
                    members += 1;
                } else {
                    violations += 1;
                }
            }
            if members < 50 || violations < 50 {
                return Err(format!(
                    "{s}: sample mix too thin ({members} members / {violations} violations)"
                ));
            }
            detail.push(format!("{s}:{members}m/{violations}v"));
        }
        Ok(detail.join(" "))
    })
}

// --- criterion 4 ---

pub fn criterion_4_type_a_classical(session: &mut Session) -> CriterionReport {
    run("4", "type-A facets are the 3-term system", || {
        for d in [4usize, 5] {
            let built = session.built(spec(Family::A, d - 1));
            let dict = TypeADictionary::new(&built.rs, &built.fan).map_err(|e| e.to_string())?;
            let full = dict.full_mask();
            let mut facet_side: BTreeSet<Vec<(u32, Scalar)>> = BTreeSet::new();
            for facet in &built.facets {
                let mut decoded: BTreeMap<u32, Scalar> = BTreeMap::new();
                for (ray, coeff) in &facet.functional {
                    let entry = decoded.entry(dict.mask_of(*ray)).or_insert_with(Scalar::zero);
                    *entry = &*entry + coeff;
                }
                facet_side.insert(decoded.into_iter().collect());
            }
            let mut classical_side: BTreeSet<Vec<(u32, Scalar)>> = BTreeSet::new();
            for a in 0..d {
                for b in (a + 1)..d {
                    let pair = (1u32 << a) | (1u32 << b);
                    let free = full & !pair;
                    let mut s = free;
                    loop {
                        let mut functional: BTreeMap<u32, Scalar> = BTreeMap::new();
                        functional.insert(s | 1 << a, Scalar::one());
                        functional.insert(s | 1 << b, Scalar::one());
                        if s != 0 {
                            functional.insert(s, Scalar::from_int(-1));
                        }
                        if s | pair != full {
                            functional.insert(s | pair, Scalar::from_int(-1));
                        }
                        classical_side.insert(functional.into_iter().collect());
                        if s == 0 {
                            break;
                        }
                        s = (s - 1) & free;
                    }
                }
            }
            if facet_side != classical_side {
                return Err(format!(
                    "d = {d}: facet functionals ({}) ≠ classical system ({})",
                    facet_side.len(),
                    classical_side.len()
                ));
            }
        }
        Ok("d = 4, 5: exact set equality".to_string())
    })
}

// --- criterion 5 ---

pub fn criterion_5_bisubmodular(session: &mut Session) -> CriterionReport {
    run("5", "bisubmodular and disubmodular bridges", || {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut detail = Vec::new();
        // C2/C3: oracle verdict equals the displayed bisubmodular system.
        for d in [2usize, 3] {
            let built = session.built(spec(Family::C, d));
            let dict = TypeBCDictionary::new(&built.rs, &built.fan).map_err(|e| e.to_string())?;
            let h0 = support_weight_polytope(&built.rs, &built.fan, &built.rs.two_rho_check())
                .expect("strictly dominant");
            let sets = admissible_sets(d, 1, d as u32);
            let mut members = 0usize;
            for trial in 0..500 {
                let mut f: BTreeMap<SignedSet, Scalar> = sets
                    .iter()
                    .map(|&s| (s, Scalar::from_int(rng.gen_range(-20..=20))))
                    .collect();
                let mut h = encode_type_bc(&dict, &f).map_err(|e| e.to_string())?;
                if trial % 3 == 0 {
                    h = memberize(&built.facets, &h, &h0);
                    f = sets
                        .iter()
                        .map(|&s| (s, h.value(dict.ray_of(s).unwrap()).clone()))
                        .collect();
                }
                let via_cone = is_submodular_local(&built.facets, &h).is_member();
                let via_classical = check_bisubmodular_classical(d, &f)
                    .map_err(|e| e.to_string())?
                    .is_none();
                if via_cone != via_classical {
                    return Err(format!(
                        "C{d} trial {trial}: cone {via_cone} vs classical {via_classical}"
                    ));
                }
                if via_cone {
                    members += 1;
                }
            }
            detail.push(format!("C{d}:{members}m"));
        }
        // D3/D4: disubmodular verdict equals bisubmodularity of the bridge.
        for d in [3usize, 4] {
            let built = session.built(spec(Family::D, d));
            let dict = TypeDDictionary::new(&built.rs, &built.fan).map_err(|e| e.to_string())?;
            let h0 = support_weight_polytope(&built.rs, &built.fan, &built.rs.two_rho_check())
                .expect("strictly dominant");
            let small = admissible_sets(d, 1, d as u32 - 2);
            let full = admissible_sets(d, d as u32, d as u32);
            let f0: BTreeMap<SignedSet, Scalar> = small
                .iter()
                .map(|&s| (s, h0.value(dict.ray_of_small(s).unwrap()).clone()))
                .collect();
            let g0: BTreeMap<SignedSet, Scalar> = full
                .iter()
                .map(|&s| (s, h0.value(dict.ray_of_full(s).unwrap()).clone()))
                .collect();
            let mut members = 0usize;
            for trial in 0..500 {
                let mut f: BTreeMap<SignedSet, Scalar> = small
                    .iter()
                    .map(|&s| (s, Scalar::from_int(rng.gen_range(-20..=20))))
                    .collect();
                let mut g: BTreeMap<SignedSet, Scalar> = full
                    .iter()
                    .map(|&s| (s, Scalar::from_int(rng.gen_range(-20..=20))))
                    .collect();
                if trial % 3 == 0 {
                    // Shift by t·(f₀, g₀); the bridge is linear, so this
                    // shifts the bridge by t·bridge(f₀, g₀) as well.
                    let h = encode_type_d(&dict, &built.fan, &f, &g).map_err(|e| e.to_string())?;
                    let shifted = memberize(&built.facets, &h, &h0);
                    let t = {
                        // Recover t from any ray: shifted = h + t·h₀.
                        let ray0 = dict.ray_of_small(small[0]).unwrap();
                        &(shifted.value(ray0) - h.value(ray0)) / h0.value(ray0)
                    };
                    for (s, value) in f.iter_mut() {
                        *value = &*value + &(&t * &f0[s]);
                    }
                    for (s, value) in g.iter_mut() {
                        *value = &*value + &(&t * &g0[s]);
                    }
                }
                let h = encode_type_d(&dict, &built.fan, &f, &g).map_err(|e| e.to_string())?;
                let disubmodular = is_submodular_local(&built.facets, &h).is_member();
                let bridge = disubmodular_bridge(d, &f, &g).map_err(|e| e.to_string())?;
                let bridged = check_bisubmodular_classical(d, &bridge)
                    .map_err(|e| e.to_string())?
                    .is_none();
                if disubmodular != bridged {
                    return Err(format!(
                        "D{d} trial {trial}: disubmodular {disubmodular} vs bridge {bridged}"
                    ));
                }
                if disubmodular {
                    members += 1;
                }
            }
            detail.push(format!("D{d}:{members}m"));
        }
        Ok(detail.join(" "))
    })
}

// --- criterion 6 ---

pub fn criterion_6_indecomposability(session: &mut Session) -> CriterionReport {
    run("6", "weight-polytope indecomposability", || {
        let systems = [
            spec(Family::A, 3),
            spec(Family::B, 3),
            spec(Family::C, 3),
            spec(Family::D, 4),
            spec(Family::F4, 4),
            spec(Family::G2, 2),
        ];
        let mut detail = Vec::new();
        for s in systems {
            let built = session.built(s);
            let mut bits = String::new();
            for k in 0..built.rs.rank {
                let predicted =
                    predict_indecomposable_weight(&built.rs, k).map_err(|e| e.to_string())?;
                let h = coweight_support(&built, k);
                let nef = nef_dimension_at(&built.rs, &built.fan, &built.facets, &h)
                    .map_err(|e| e.to_string())?;
                let actual = nef == 1;
                if predicted != actual {
                    return Err(format!(
                        "{s} λ_{}: predicted {predicted}, nef dimension {nef}",
                        k + 1
                    ));
                }
                bits.push(if actual { '1' } else { '0' });
            }
            detail.push(format!("{s}:{bits}"));
        }
        Ok(detail.join(" "))
    })
}

// --- criterion 7 ---

pub fn criterion_7_h3(session: &mut Session) -> CriterionReport {
    run("7", "H3 fundamental polytopes", || {
        let built = session.built(spec(Family::H3, 3));
        let mut nefs = Vec::new();
        for k in 0..3 {
            let h = coweight_support(&built, k);
            nefs.push(
                nef_dimension_at(&built.rs, &built.fan, &built.facets, &h)
                    .map_err(|e| e.to_string())?,
            );
        }
        if nefs[0] != 1 || nefs[1] != 1 || nefs[2] <= 1 {
            return Err(format!("H3 nef dimensions {nefs:?}"));
        }
        Ok(format!(
            "icosahedron {} icosidodecahedron {} dodecahedron {}",
            nefs[0], nefs[1], nefs[2]
        ))
    })
}

/// The gated heavy computation: P_{H4}(λ₃^∨) is indecomposable.
pub fn criterion_7_h4(session: &mut Session) -> CriterionReport {
    run("7b", "H4 third fundamental polytope", || {
        let built = session.built(spec(Family::H4, 4));
        let h = coweight_support(&built, 2);
        let nef = nef_dimension_at(&built.rs, &built.fan, &built.facets, &h)
            .map_err(|e| e.to_string())?;
        if nef != 1 {
            return Err(format!("H4 λ₃ nef dimension {nef} ≠ 1"));
        }
        Ok("nef dimension 1 (indecomposable)".to_string())
    })
}

// --- criterion 8 ---

pub fn criterion_8_active_walls(session: &mut Session) -> CriterionReport {
    run("8", "active walls split by generator", || {
        let systems = [
            spec(Family::A, 1),
            spec(Family::A, 2),
            spec(Family::A, 3),
            spec(Family::B, 2),
            spec(Family::B, 3),
            spec(Family::C, 2),
            spec(Family::C, 3),
            spec(Family::D, 3),
            spec(Family::G2, 2),
            spec(Family::H3, 3),
            RootSystemSpec::i2(5),
        ];
        let mut walls_checked = 0usize;
        for s in systems {
            let built = session.built(s);
            for k in 0..built.rs.rank {
                let h = coweight_support(&built, k);
                for wall in &built.fan.walls {
                    let value = CoxeterFan::apply_functional(&wall.relation, &h.values);
                    // The crossing value is exactly 1 on the generator-k
                    // class and 0 elsewhere, so the non-vanishing wall set
                    // is exactly the generator-k class.
                    let expected = if wall.gen == k {
                        Scalar::one()
                    } else {
                        Scalar::zero()
                    };
                    if value != expected {
                        return Err(format!(
                            "{s} λ_{}: wall (rep {}, gen {}) evaluates to {value}",
                            k + 1,
                            wall.coset_rep,
                            wall.gen + 1
                        ));
                    }
                    walls_checked += 1;
                }
            }
        }
        Ok(format!("{walls_checked} wall evaluations exact"))
    })
}

// --- criterion 9 ---

pub fn criterion_9_realization_counts(session: &mut Session) -> CriterionReport {
    run("9", "vertex counts of weight polytopes", || {
        let systems = [
            spec(Family::A, 2),
            spec(Family::A, 3),
            spec(Family::B, 3),
            spec(Family::C, 3),
            spec(Family::G2, 2),
            spec(Family::H3, 3),
        ];
        let mut detail = Vec::new();
        for s in systems {
            let built = session.built(s);
            let rank = built.rs.rank;
            // The permutohedron has one vertex per chamber.
            let perm = support_weight_polytope(&built.rs, &built.fan, &built.rs.rho())
                .expect("rho is dominant");
            let realized =
                defcone::vertices(&built.rs, &built.weyl, &built.fan, &built.facets, &perm)
                    .map_err(|e| e.to_string())?;
            if realized.vertices.len() != built.weyl.order() {
                return Err(format!(
                    "{s}: permutohedron has {} vertices ≠ |W| = {}",
                    realized.vertices.len(),
                    built.weyl.order()
                ));
            }
            // Three parabolic stabilizer choices per system.
            let stabs: [Vec<usize>; 3] = if rank == 2 {
                [vec![0], vec![1], vec![0, 1]]
            } else {
                [vec![0], vec![rank - 1], vec![0, 1]]
            };
            for stab in &stabs {
                let x = defcone::lambda_for_stabilizer(&built.rs, stab);
                let h = support_weight_polytope(&built.rs, &built.fan, &x)
                    .expect("lambda_I is dominant");
                let realized =
                    defcone::vertices(&built.rs, &built.weyl, &built.fan, &built.facets, &h)
                        .map_err(|e| e.to_string())?;
                let expected = built.weyl.order() / built.weyl.parabolic(stab).len();
                if realized.vertices.len() != expected {
                    return Err(format!(
                        "{s} stab {stab:?}: {} vertices ≠ |W|/|W_I| = {expected}",
                        realized.vertices.len()
                    ));
                }
            }
            detail.push(format!("{s}:{}+3", built.weyl.order()));
        }
        Ok(detail.join(" "))
    })
}

// --- criterion 10 ---

pub fn criterion_10_lattice(session: &mut Session) -> CriterionReport {
    run("10", "integer members realize lattice points", || {
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        let systems = [spec(Family::A, 3), spec(Family::B, 3), spec(Family::C, 3)];
        for s in systems {
            let built = session.built(s);
            let h0 = support_weight_polytope(&built.rs, &built.fan, &built.rs.two_rho_check())
                .expect("strictly dominant");
            debug_assert!(crate::submod::is_discrete(&built.rs, &h0).unwrap());
            for trial in 0..200 {
                let raw = SupportFunction::new(
                    (0..built.fan.ray_count())
                        .map(|_| Scalar::from_int(rng.gen_range(-9..=9)))
                        .collect(),
                );
                let h = memberize_integer(&built.facets, &raw, &h0);
                if !crate::submod::is_discrete(&built.rs, &h).map_err(|e| e.to_string())? {
                    return Err(format!("{s} trial {trial}: projection left ℤ"));
                }
                let lattice =
                    defcone::lattice_check(&built.rs, &built.weyl, &built.fan, &built.facets, &h)
                        .map_err(|e| e.to_string())?;
                if !lattice {
                    return Err(format!("{s} trial {trial}: non-lattice vertex"));
                }
            }
        }
        // Negative control: the A2 inverse-Cartan row has weight vertices.
        let a2 = session.built(spec(Family::A, 2));
        let row = coweight_support(&a2, 0);
        let lattice = defcone::lattice_check(&a2.rs, &a2.weyl, &a2.fan, &a2.facets, &row)
            .map_err(|e| e.to_string())?;
        if lattice {
            return Err("A2 inverse-Cartan row claimed lattice".to_string());
        }
        Ok("3 × 200 trials lattice; negative control rejected".to_string())
    })
}

// --- criterion 11 ---

pub fn criterion_11_symmetric_cone(session: &mut Session) -> CriterionReport {
    run("11", "symmetric cone is inverse-Cartan simplicial", || {
        let _ = &session;
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut specs = vec![
            spec(Family::E6, 6),
            spec(Family::F4, 4),
            spec(Family::G2, 2),
            spec(Family::H3, 3),
            spec(Family::H4, 4),
            RootSystemSpec::i2(3),
            RootSystemSpec::i2(4),
            RootSystemSpec::i2(5),
            RootSystemSpec::i2(6),
        ];
        for r in 1..=5 {
            specs.push(spec(Family::A, r));
        }
        for r in 2..=5 {
            specs.push(spec(Family::B, r));
            specs.push(spec(Family::C, r));
        }
        for r in 3..=5 {
            specs.push(spec(Family::D, r));
        }
        for s in specs {
            // Cartan data only; no enumeration needed.
            let rs = RootSystem::build(s).map_err(|e| e.to_string())?;
            let d = rs.rank;
            for k in 0..d {
                let row: Vector = (0..d).map(|i| rs.inverse_cartan.at(k, i).clone()).collect();
                let image = rs.cartan.transpose().mul_vec(&row);
                if image != linalg::unit_vector(d, k) {
                    return Err(format!("{s}: Aᵀ·row_{k}(A⁻¹) ≠ e_{k}"));
                }
            }
            for _ in 0..20 {
                let coeffs: Vec<Scalar> = (0..d)
                    .map(|_| Scalar::from_int(rng.gen_range(0..=10)))
                    .collect();
                let v = combo_of_rows(&rs, &coeffs);
                match symmetric_membership(&rs, &v) {
                    SymmetricCheck::Member(recovered) => {
                        if recovered != coeffs {
                            return Err(format!("{s}: coefficients not recovered"));
                        }
                    }
                    SymmetricCheck::Outside(_) => {
                        return Err(format!("{s}: nonnegative combination rejected"))
                    }
                }
                // Perturb one coefficient to −ε: must be rejected there.
                let j = rng.gen_range(0..d);
                let mut perturbed = coeffs.clone();
                perturbed[j] = Scalar::ratio(-1, 7);
                let v = combo_of_rows(&rs, &perturbed);
                match symmetric_membership(&rs, &v) {
                    SymmetricCheck::Outside(index) if index == j => {}
                    SymmetricCheck::Outside(index) => {
                        // Another coefficient may flip only if it was zero;
                        // coefficients here are exact, so index must match.
                        return Err(format!("{s}: rejection index {index} ≠ {j}"));
                    }
                    SymmetricCheck::Member(_) => {
                        return Err(format!("{s}: perturbed point accepted"))
                    }
                }
            }
        }
        Ok("all supported Cartan data simplicial; combos verified".to_string())
    })
}

fn combo_of_rows(rs: &RootSystem, coeffs: &[Scalar]) -> Vector {
    let d = rs.rank;
    let mut v = linalg::zero_vector(d);
    for (k, c) in coeffs.iter().enumerate() {
        for i in 0..d {
            v[i] = &v[i] + &(c * rs.inverse_cartan.at(k, i));
        }
    }
    v
}

/// Run the full suite. `include_h4` additionally runs the H4 λ₃
/// indecomposability computation (the heaviest check by far).
pub fn run_all(include_h4: bool) -> Vec<CriterionReport> {
    let mut session = Session::new();
    let mut reports = vec![
        criterion_1_facet_counts(&mut session),
        criterion_2_inverse_cartan(&mut session, include_h4),
        criterion_3_oracle_equivalence(&mut session),
        criterion_4_type_a_classical(&mut session),
        criterion_5_bisubmodular(&mut session),
        criterion_6_indecomposability(&mut session),
        criterion_7_h3(&mut session),
        criterion_8_active_walls(&mut session),
        criterion_9_realization_counts(&mut session),
        criterion_10_lattice(&mut session),
        criterion_11_symmetric_cone(&mut session),
    ];
    if include_h4 {
        reports.insert(7, criterion_7_h4(&mut session));
    }
    reports
}
