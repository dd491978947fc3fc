//! The Coxeter fan as a combinatorial object: rays (fundamental weight
//! conjugates), chambers, walls with their crossing relations, point
//! location into the fundamental domain, and piecewise-linear evaluation.

use std::collections::HashMap;

use crate::field::Scalar;
use crate::linalg::Vector;
use crate::rootsys::RootSystem;
use crate::weyl::{WeylGroup, IDENTITY};

/// A ray of the fan: the conjugate `w·λᵢ` of a fundamental weight. The
/// owner index `i` is unique per coordinate vector; `witness` is the first
/// group element (in breadth-first order) mapping `λ_owner` onto it.
pub struct Ray {
    pub owner: usize,
    pub coords: Vector,
    pub witness: u32,
}

/// A codimension-one cone of the fan, separating the chambers `w` and
/// `w·sᵢ`. The crossing relation is stored in left-minus-right form:
/// coefficients +1 on `wλᵢ` and `wsᵢλᵢ`, and `+A_ji` on `wλⱼ` for each
/// Dynkin neighbor `j` of `i`, so that convexity of `h` across the wall
/// reads `Σ coeff·h(ray) ≥ 0`.
pub struct Wall {
    /// Canonical representative of the coset `wW_{{i}}` — the shorter of
    /// `{w, wsᵢ}`.
    pub coset_rep: u32,
    pub gen: usize,
    pub relation: Vec<(u32, Scalar)>,
}

/// Rays, walls, and chamber incidences of the Coxeter fan, materialized
/// once. Immutable afterwards; all queries are read-only.
pub struct CoxeterFan {
    pub rays: Vec<Ray>,
    ray_index: HashMap<Vec<Scalar>, u32>,
    /// `chamber_rays[w][i]` is the ray `w·λᵢ`; row `w` lists the rays of
    /// the chamber `w·D`.
    pub chamber_rays: Vec<Vec<u32>>,
    pub walls: Vec<Wall>,
    /// For each ray, the ascending list of chambers whose cone contains it.
    ray_chambers: Vec<Vec<u32>>,
}

impl CoxeterFan {
    pub fn build(rs: &RootSystem, weyl: &WeylGroup) -> CoxeterFan {
        let d = rs.rank;
        let order = weyl.order();
        let mut rays: Vec<Ray> = Vec::new();
        let mut ray_index: HashMap<Vec<Scalar>, u32> = HashMap::new();
        let mut chamber_rays: Vec<Vec<u32>> = Vec::with_capacity(order);

        for w in 0..order as u32 {
            let mut row = Vec::with_capacity(d);
            for (i, weight) in rs.fund_weights.iter().enumerate() {
                let coords = weyl.act(w, weight);
                let id = match ray_index.get(&coords) {
                    Some(&id) => {
                        debug_assert_eq!(rays[id as usize].owner, i, "ray owner is unique");
                        id
                    }
                    None => {
                        let id = rays.len() as u32;
                        ray_index.insert(coords.clone(), id);
                        rays.push(Ray {
                            owner: i,
                            coords,
                            witness: w,
                        });
                        id
                    }
                };
                row.push(id);
            }
            chamber_rays.push(row);
        }

        let mut ray_chambers = vec![Vec::new(); rays.len()];
        for (w, row) in chamber_rays.iter().enumerate() {
            for &r in row {
                ray_chambers[r as usize].push(w as u32);
            }
        }

        // One wall per unordered pair {w, wsᵢ}; emitted from the shorter side.
        let mut walls = Vec::with_capacity(order * d / 2);
        for w in 0..order as u32 {
            for i in 0..d {
                let ws = weyl.right_mul(w, i);
                if weyl.length(ws) < weyl.length(w) {
                    continue;
                }
                let mut relation = vec![
                    (chamber_rays[w as usize][i], Scalar::one()),
                    (chamber_rays[ws as usize][i], Scalar::one()),
                ];
                for j in rs.neighbors(i) {
                    debug_assert_eq!(
                        chamber_rays[w as usize][j],
                        chamber_rays[ws as usize][j],
                        "adjacent chambers share the wall rays"
                    );
                    relation.push((chamber_rays[w as usize][j], rs.cartan.at(j, i).clone()));
                }
                walls.push(Wall {
                    coset_rep: w,
                    gen: i,
                    relation,
                });
            }
        }

        CoxeterFan {
            rays,
            ray_index,
            chamber_rays,
            walls,
            ray_chambers,
        }
    }

    pub fn ray_count(&self) -> usize {
        self.rays.len()
    }

    pub fn ray_id(&self, coords: &[Scalar]) -> Option<u32> {
        self.ray_index.get(coords).copied()
    }

    /// Evaluate a wall (or facet) functional against per-ray values.
    pub fn apply_functional(relation: &[(u32, Scalar)], values: &[Scalar]) -> Scalar {
        relation.iter().fold(Scalar::zero(), |acc, (ray, coeff)| {
            &acc + &(coeff * &values[*ray as usize])
        })
    }

    /// Locate `x` in the fan: returns `(w, c)` with `x = w·(Σᵢ cᵢ λᵢ)` and
    /// every `cᵢ ≥ 0`. Directions on cone boundaries get `cᵢ = 0`, so the
    /// factorization is well defined even though `w` is not unique there.
    pub fn dominant_rep(&self, rs: &RootSystem, weyl: &WeylGroup, x: &[Scalar]) -> (u32, Vector) {
        self.dominant_rep_with(rs, weyl, x, &mut |negatives| negatives[0])
    }

    /// Same as [`Self::dominant_rep`] but with an injectable choice of which
    /// negative pairing to reflect next; any choice yields a valid
    /// factorization.
    pub fn dominant_rep_with(
        &self,
        rs: &RootSystem,
        weyl: &WeylGroup,
        x: &[Scalar],
        choose: &mut dyn FnMut(&[usize]) -> usize,
    ) -> (u32, Vector) {
        let mut cur = x.to_vec();
        let mut w = IDENTITY;
        loop {
            let pairings = rs.coroot_pairings(&cur);
            let negatives: Vec<usize> = (0..rs.rank)
                .filter(|&i| pairings[i].is_negative())
                .collect();
            if negatives.is_empty() {
                return (w, pairings);
            }
            let i = choose(&negatives);
            // sᵢ(x) only changes coordinate i: xᵢ ← xᵢ − ⟨x, αᵢ^∨⟩.
            cur[i] = &cur[i] - &pairings[i];
            w = weyl.right_mul(w, i);
        }
    }

    /// Evaluate the piecewise-linear extension of per-ray values at `x`.
    pub fn eval_pl(
        &self,
        rs: &RootSystem,
        weyl: &WeylGroup,
        values: &[Scalar],
        x: &[Scalar],
    ) -> Scalar {
        let (w, c) = self.dominant_rep(rs, weyl, x);
        self.eval_at_factorization(w, &c, values)
    }

    pub fn eval_at_factorization(&self, w: u32, c: &[Scalar], values: &[Scalar]) -> Scalar {
        c.iter()
            .enumerate()
            .filter(|(_, ci)| !ci.is_zero())
            .fold(Scalar::zero(), |acc, (i, ci)| {
                &acc + &(ci * &values[self.chamber_rays[w as usize][i] as usize])
            })
    }

    /// True when some chamber cone contains both rays.
    pub fn span_face(&self, r: u32, r_other: u32) -> bool {
        let a = &self.ray_chambers[r as usize];
        let b = &self.ray_chambers[r_other as usize];
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Equal => return true,
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
            }
        }
        false
    }
}
