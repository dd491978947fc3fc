//! Deformation-cone analytics: support functions of weight polytopes and
//! zonotopes, vertex realization, the symmetric (weight-polytope) cone,
//! indecomposability via active walls, face-orbit combinatorics, and the
//! Coxeter-matroid edge test.

use std::collections::{HashMap, HashSet};

use crate::coxfan::CoxeterFan;
use crate::field::Scalar;
use crate::linalg::{self, RankAccumulator, Vector};
use crate::lp;
use crate::rootsys::RootSystem;
use crate::submod::{is_submodular_local, FacetInequality, SupportFunction};
use crate::weyl::WeylGroup;
use crate::Error;

/// Deduplicated vertices of a realized polytope plus the chamber → vertex
/// assignment.
pub struct VertexSet {
    pub vertices: Vec<Vector>,
    /// `chamber_map[w]` indexes the vertex attached to chamber `w`.
    pub chamber_map: Vec<u32>,
}

/// Support function of the weight polytope of a dominant point:
/// `h(wλᵢ) = ⟨λᵢ, x⟩` for every `w`. For `x = λ_k^∨` this is exactly the
/// k-th row of the inverse Cartan matrix.
pub fn support_weight_polytope(
    rs: &RootSystem,
    fan: &CoxeterFan,
    x_dominant: &[Scalar],
) -> Result<SupportFunction, Error> {
    let pairings = rs.coroot_pairings(x_dominant);
    if let Some(index) = pairings.iter().position(Scalar::is_negative) {
        return Err(Error::NotDominant { index });
    }
    let per_owner: Vec<Scalar> = rs
        .fund_weights
        .iter()
        .map(|weight| rs.inner(weight, x_dominant))
        .collect();
    Ok(SupportFunction::new(
        fan.rays
            .iter()
            .map(|ray| per_owner[ray.owner].clone())
            .collect(),
    ))
}

/// Support function of a zonotope over a subset of the positive roots.
/// Centered: `h(r) = ½ Σ |⟨r,α⟩|` (the sum of `[−α/2, α/2]`); uncentered:
/// `h(r) = Σ max(⟨r,α⟩, 0)` (the sum of `[0, α]`).
pub fn support_zonotope(
    rs: &RootSystem,
    fan: &CoxeterFan,
    psi: &[Vector],
    centered: bool,
) -> Result<SupportFunction, Error> {
    for root in psi {
        if !rs.is_positive_root(root) {
            return Err(Error::NotPositiveRoot(crate::submod::ray_key(root)));
        }
    }
    let half = Scalar::ratio(1, 2);
    let values = fan
        .rays
        .iter()
        .map(|ray| {
            psi.iter().fold(Scalar::zero(), |acc, root| {
                let pairing = rs.inner(&ray.coords, root);
                if centered {
                    &acc + &(&half * &pairing.abs())
                } else if pairing.is_positive() {
                    &acc + &pairing
                } else {
                    acc
                }
            })
        })
        .collect();
    Ok(SupportFunction::new(values))
}

/// Realize the polytope of a submodular `h`: one candidate vertex per
/// chamber (the dual-basis solve of `⟨wλᵢ, v⟩ = h(wλᵢ)`), deduplicated.
/// Every candidate is validated against all ray inequalities; a failure
/// there indicates an oracle bug, not bad input.
pub fn vertices(
    rs: &RootSystem,
    weyl: &WeylGroup,
    fan: &CoxeterFan,
    facets: &[FacetInequality],
    h: &SupportFunction,
) -> Result<VertexSet, Error> {
    if !is_submodular_local(facets, h).is_member() {
        return Err(Error::NotSubmodular);
    }
    let d = rs.rank;
    let coroot_scale: Vec<Scalar> = (0..d)
        .map(|i| &Scalar::from_int(2) / rs.gram.at(i, i))
        .collect();
    let mut vertex_index: HashMap<Vec<Scalar>, u32> = HashMap::new();
    let mut vertices: Vec<Vector> = Vec::new();
    let mut chamber_map = Vec::with_capacity(weyl.order());
    for w in 0..weyl.order() {
        let matrix = &weyl.elements[w].matrix;
        let mut v = linalg::zero_vector(d);
        for i in 0..d {
            // w·αᵢ^∨ is the i-th matrix column rescaled by 2/⟨αᵢ,αᵢ⟩.
            let coeff = &h.values[fan.chamber_rays[w][i] as usize] * &coroot_scale[i];
            if coeff.is_zero() {
                continue;
            }
            for row in 0..d {
                v[row] = &v[row] + &(&coeff * matrix.at(row, i));
            }
        }
        let idx = match vertex_index.get(&v) {
            Some(&idx) => idx,
            None => {
                let idx = vertices.len() as u32;
                vertex_index.insert(v.clone(), idx);
                vertices.push(v);
                idx
            }
        };
        chamber_map.push(idx);
    }
    // Cross-validate: every vertex satisfies every ray inequality.
    for ray in &fan.rays {
        let functional = rs.gram.mul_vec(&ray.coords);
        let bound = h.value(fan.ray_id(&ray.coords).expect("own ray"));
        for v in &vertices {
            let value = linalg::dot(&functional, v);
            assert!(
                !(&value - bound).is_positive(),
                "vertex candidate violates a ray inequality; membership oracle bug"
            );
        }
    }
    Ok(VertexSet {
        vertices,
        chamber_map,
    })
}

pub enum SymmetricCheck {
    /// Coefficients expressing the input over the inverse-Cartan rows.
    Member(Vector),
    /// Index of the first negative coefficient.
    Outside(usize),
}

/// Membership in the symmetric cone: interpret `v = (h(λ₁),…,h(λ_d))`,
/// solve `c = Aᵀ·v`, and accept iff every coefficient is nonnegative.
pub fn symmetric_membership(rs: &RootSystem, v: &[Scalar]) -> SymmetricCheck {
    let c = rs.cartan.transpose().mul_vec(v);
    match c.iter().position(Scalar::is_negative) {
        Some(index) => SymmetricCheck::Outside(index),
        None => SymmetricCheck::Member(c),
    }
}

/// Dimension of the face of the deformation cone containing `h`, modulo
/// global linear functions: collect every wall whose crossing functional
/// vanishes at `h`, and compute `dim {x : I_τ(x) = 0 ∀ active τ} − d` by
/// exact streaming elimination.
///
/// The full wall list is scanned; textually identical rows are merged
/// before elimination (duplicates cannot change the rank). When `h` is not
/// globally linear the solution space contains both the linear functions
/// and `h` itself, capping the rank at `|ℛ| − d − 1`; reaching the cap
/// certifies nef-dimension 1 and stops early.
pub fn nef_dimension_at(
    rs: &RootSystem,
    fan: &CoxeterFan,
    facets: &[FacetInequality],
    h: &SupportFunction,
) -> Result<usize, Error> {
    if !is_submodular_local(facets, h).is_member() {
        return Err(Error::NotSubmodular);
    }
    let d = rs.rank;
    let width = fan.ray_count();
    let mut active_rows: Vec<Vec<(u32, Scalar)>> = Vec::new();
    let mut seen: HashSet<Vec<(u32, Scalar)>> = HashSet::new();
    let mut inactive = 0usize;
    for wall in &fan.walls {
        if !CoxeterFan::apply_functional(&wall.relation, &h.values).is_zero() {
            inactive += 1;
            continue;
        }
        let mut canonical = wall.relation.clone();
        canonical.sort_by_key(|(ray, _)| *ray);
        if seen.insert(canonical.clone()) {
            active_rows.push(canonical);
        }
    }
    if inactive == 0 {
        // h is linear across every wall, hence globally linear: the
        // constraint set is all walls and only translations remain.
        return Ok(0);
    }
    let rank_cap = width - d - 1;
    let mut acc = RankAccumulator::new(width);
    for row in &active_rows {
        acc.push_sparse(row);
        if acc.rank() == rank_cap {
            return Ok(1);
        }
    }
    debug_assert!(acc.rank() <= rank_cap);
    Ok(width - acc.rank() - d)
}

pub fn is_indecomposable(
    rs: &RootSystem,
    fan: &CoxeterFan,
    facets: &[FacetInequality],
    h: &SupportFunction,
) -> Result<bool, Error> {
    Ok(nef_dimension_at(rs, fan, facets, h)? == 1)
}

/// Classification of indecomposable fundamental weight polytopes for
/// crystallographic systems: node `i` qualifies iff every Dynkin edge at
/// `i` is unlabeled. Refuses non-crystallographic input, where the
/// classification can fail.
pub fn predict_indecomposable_weight(rs: &RootSystem, i: usize) -> Result<bool, Error> {
    if !rs.crystallographic {
        return Err(Error::NonCrystallographic);
    }
    Ok(only_triangular_2faces(rs, i))
}

/// True iff all Dynkin edges incident to `i` carry label 3, i.e. the weight
/// polytope of λᵢ has only triangular 2-faces.
pub fn only_triangular_2faces(rs: &RootSystem, i: usize) -> bool {
    rs.neighbors(i).iter().all(|&j| rs.edge_label(i, j) == 3)
}

/// Face orbits of the weight polytope of a point with stabilizer generators
/// `stab`: all `J ⊆ [d]` such that no connected component of the induced
/// Dynkin subgraph on `J` lies inside `stab`. Each orbit represents
/// `|J|`-dimensional faces.
pub fn face_orbits(rs: &RootSystem, stab: &[usize]) -> Vec<(Vec<usize>, usize)> {
    let d = rs.rank;
    let stab_mask: u32 = stab.iter().fold(0, |m, &i| m | 1 << i);
    let mut out = Vec::new();
    'masks: for mask in 0u32..(1 << d) {
        for component in components_of(rs, mask) {
            if component & !stab_mask == 0 {
                continue 'masks;
            }
        }
        let set: Vec<usize> = (0..d).filter(|&i| mask & (1 << i) != 0).collect();
        let dim = set.len();
        out.push((set, dim));
    }
    out
}

/// Connected components (as bitmasks) of the Dynkin subgraph induced on a
/// vertex bitmask.
fn components_of(rs: &RootSystem, mask: u32) -> Vec<u32> {
    let mut remaining = mask;
    let mut out = Vec::new();
    while remaining != 0 {
        let start = remaining.trailing_zeros() as usize;
        let mut component = 1u32 << start;
        let mut frontier = vec![start];
        while let Some(node) = frontier.pop() {
            for j in rs.neighbors(node) {
                let bit = 1u32 << j;
                if mask & bit != 0 && component & bit == 0 {
                    component |= bit;
                    frontier.push(j);
                }
            }
        }
        remaining &= !component;
        out.push(component);
    }
    out
}

#[derive(Debug, PartialEq, Eq)]
pub enum MatroidCheck {
    Matroid,
    /// Indices into the supplied representative list whose segment is an
    /// edge not parallel to any root.
    ViolatingEdge(usize, usize),
}

/// λ_I := Σ_{i ∉ I} λᵢ, the weight stabilized exactly by `W_I`.
pub fn lambda_for_stabilizer(rs: &RootSystem, stab: &[usize]) -> Vector {
    (0..rs.rank)
        .filter(|i| !stab.contains(i))
        .fold(linalg::zero_vector(rs.rank), |acc, i| {
            linalg::vec_add(&acc, &rs.fund_weights[i])
        })
}

/// The Gelfand–Serganova style test: the vertex set `{w·λ_I : w ∈ M}` is a
/// Coxeter matroid iff every edge of its convex hull is parallel to a root.
/// Edges are detected by exact LP feasibility (a functional maximized on
/// exactly that pair); each representative must be the canonical element of
/// its coset.
pub fn coxeter_matroid_check(
    rs: &RootSystem,
    weyl: &WeylGroup,
    stab: &[usize],
    reps: &[u32],
) -> Result<MatroidCheck, Error> {
    if reps.is_empty() {
        return Err(Error::InvalidInput("empty representative list".into()));
    }
    let mut distinct = HashSet::new();
    for &m in reps {
        if weyl.coset_canonical(m, stab) != m {
            return Err(Error::NotCanonical);
        }
        if !distinct.insert(m) {
            return Err(Error::InvalidInput(format!(
                "duplicate coset representative at index {m}"
            )));
        }
    }
    let lambda = lambda_for_stabilizer(rs, stab);
    let points: Vec<Vector> = reps.iter().map(|&m| weyl.act(m, &lambda)).collect();
    for p_idx in 0..points.len() {
        for q_idx in (p_idx + 1)..points.len() {
            let direction = linalg::vec_sub(&points[p_idx], &points[q_idx]);
            let eq = vec![direction.clone()];
            let strict: Vec<Vector> = points
                .iter()
                .enumerate()
                .filter(|(r_idx, _)| *r_idx != p_idx && *r_idx != q_idx)
                .map(|(_, r)| linalg::vec_sub(&points[p_idx], r))
                .collect();
            let is_edge = lp::strict_feasible(&eq, &strict, rs.rank);
            if is_edge && !parallel_to_root(rs, &direction) {
                return Ok(MatroidCheck::ViolatingEdge(p_idx, q_idx));
            }
        }
    }
    Ok(MatroidCheck::Matroid)
}

fn parallel_to_root(rs: &RootSystem, direction: &[Scalar]) -> bool {
    rs.pos_roots.iter().any(|root| {
        let lead = root
            .iter()
            .position(|c| !c.is_zero())
            .expect("roots are nonzero");
        if direction[lead].is_zero() {
            return false;
        }
        let scale = &direction[lead] / &root[lead];
        root.iter()
            .zip(direction)
            .all(|(rc, dc)| &(&scale * rc) == dc)
    })
}

/// Vertices `{z·λ_I : u ≤ z ≤ v in Bruhat order}`, deduplicated and sorted.
/// `v` must be the canonical representative of its coset and `u ≤ v`.
pub fn bruhat_interval_polytope(
    rs: &RootSystem,
    weyl: &WeylGroup,
    u: u32,
    v: u32,
    stab: &[usize],
) -> Result<Vec<Vector>, Error> {
    if weyl.coset_canonical(v, stab) != v {
        return Err(Error::NotCanonical);
    }
    if !weyl.bruhat_leq(u, v) {
        return Err(Error::BruhatIncomparable);
    }
    let lambda = lambda_for_stabilizer(rs, stab);
    let mut points: Vec<Vector> = (0..weyl.order() as u32)
        .filter(|&z| weyl.bruhat_leq(u, z) && weyl.bruhat_leq(z, v))
        .map(|z| weyl.act(z, &lambda))
        .collect();
    points.sort();
    points.dedup();
    Ok(points)
}

/// True iff every vertex of the realized polytope has integer coordinates
/// in the simple-coroot basis. Crystallographic systems only.
pub fn lattice_check(
    rs: &RootSystem,
    weyl: &WeylGroup,
    fan: &CoxeterFan,
    facets: &[FacetInequality],
    h: &SupportFunction,
) -> Result<bool, Error> {
    if !rs.crystallographic {
        return Err(Error::NonCrystallographic);
    }
    let realized = vertices(rs, weyl, fan, facets, h)?;
    let half = Scalar::ratio(1, 2);
    Ok(realized.vertices.iter().all(|v| {
        v.iter().enumerate().all(|(j, coord)| {
            // Coordinate over αⱼ^∨ is the α-coordinate times ⟨αⱼ,αⱼ⟩/2.
            (&(coord * rs.gram.at(j, j)) * &half).is_integer()
        })
    }))
}
