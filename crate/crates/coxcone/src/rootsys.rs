//! Construction of finite root systems: Cartan and Gram matrices, Dynkin
//! graphs, weights, coweights, coroots, and positive roots.
//!
//! All vectors live in simple-root coordinates; the inner product is the
//! Gram matrix. This keeps every supported system inside ℚ or ℚ(√5) and
//! avoids special-casing the type-A ambient quotient.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::field::Scalar;
use crate::linalg::{self, Matrix, Vector};
use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E6,
    F4,
    G2,
    H3,
    H4,
    I2,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E6 => "E6",
            Family::F4 => "F4",
            Family::G2 => "G2",
            Family::H3 => "H3",
            Family::H4 => "H4",
            Family::I2 => "I2",
        };
        f.write_str(name)
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E6" => Ok(Family::E6),
            "F4" => Ok(Family::F4),
            "G2" => Ok(Family::G2),
            "H3" => Ok(Family::H3),
            "H4" => Ok(Family::H4),
            "I2" => Ok(Family::I2),
            "E7" | "E8" => Err(Error::InvalidSpec(format!(
                "{s} is not supported: its Weyl group is too large for full \
                 enumeration at desk scale, and its Cartan data is not exposed"
            ))),
            _ => Err(Error::InvalidSpec(format!("unknown family {s:?}"))),
        }
    }
}

/// A family/rank pair, plus the dihedral order for I2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RootSystemSpec {
    pub family: Family,
    pub rank: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dihedral_m: Option<usize>,
}

impl RootSystemSpec {
    pub fn new(family: Family, rank: usize) -> Self {
        RootSystemSpec {
            family,
            rank,
            dihedral_m: None,
        }
    }

    pub fn i2(m: usize) -> Self {
        RootSystemSpec {
            family: Family::I2,
            rank: 2,
            dihedral_m: Some(m),
        }
    }

    fn validate(&self) -> Result<(), Error> {
        let ok = match self.family {
            Family::A => self.rank >= 1,
            Family::B | Family::C => self.rank >= 2,
            Family::D => self.rank >= 3,
            Family::E6 => self.rank == 6,
            Family::F4 => self.rank == 4,
            Family::G2 => self.rank == 2,
            Family::H3 => self.rank == 3,
            Family::H4 => self.rank == 4,
            Family::I2 => self.rank == 2,
        };
        if !ok {
            return Err(Error::InvalidSpec(format!(
                "rank {} is invalid for family {}",
                self.rank, self.family
            )));
        }
        match (self.family, self.dihedral_m) {
            (Family::I2, Some(m)) if (3..=6).contains(&m) => Ok(()),
            (Family::I2, Some(m)) => Err(Error::InvalidSpec(format!(
                "I2({m}) is not supported; m must be one of 3, 4, 5, 6"
            ))),
            (Family::I2, None) => Err(Error::InvalidSpec(
                "I2 requires a dihedral order m".to_string(),
            )),
            (_, Some(_)) => Err(Error::InvalidSpec(
                "dihedral order m is only valid for I2".to_string(),
            )),
            (_, None) => Ok(()),
        }
    }
}

impl fmt::Display for RootSystemSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::I2 => write!(f, "I2({})", self.dihedral_m.unwrap_or(0)),
            Family::A | Family::B | Family::C | Family::D => {
                write!(f, "{}{}", self.family, self.rank)
            }
            _ => write!(f, "{}", self.family),
        }
    }
}

/// A built root system. Immutable after [`RootSystem::build`].
pub struct RootSystem {
    pub spec: RootSystemSpec,
    pub rank: usize,
    /// Cartan matrix, `A[i][j] = 2⟨αᵢ,αⱼ⟩/⟨αᵢ,αᵢ⟩`.
    pub cartan: Matrix,
    pub inverse_cartan: Matrix,
    /// Gram matrix of the simple roots.
    pub gram: Matrix,
    /// Dynkin edges `(i, j, m)` with `i < j` and label `m ≥ 3`.
    pub dynkin_edges: Vec<(usize, usize, usize)>,
    /// Positive roots in simple-root coordinates.
    pub pos_roots: Vec<Vector>,
    /// Fundamental weights λᵢ (columns of the inverse Cartan matrix).
    pub fund_weights: Vec<Vector>,
    /// Fundamental coweights λᵢ^∨ = (2/⟨αᵢ,αᵢ⟩)·λᵢ, dual to the simple roots.
    pub fund_coweights: Vec<Vector>,
    /// Simple coroots αᵢ^∨ = (2/⟨αᵢ,αᵢ⟩)·αᵢ.
    pub simple_coroots: Vec<Vector>,
    /// Columns are the simple roots in an orthonormal ambient basis
    /// (classical families only).
    pub ambient: Option<Matrix>,
    pub crystallographic: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AmbientDirection {
    ToAmbient,
    ToRootCoords,
}

impl RootSystem {
    pub fn build(spec: RootSystemSpec) -> Result<RootSystem, Error> {
        spec.validate()?;
        let d = spec.rank;
        let gram = gram_matrix(&spec);

        let mut cartan = Matrix::zero(d, d);
        for i in 0..d {
            let diag_inv = gram.at(i, i).inverse().expect("positive root norm");
            let two = Scalar::from_int(2);
            for j in 0..d {
                *cartan.at_mut(i, j) = &(&two * gram.at(i, j)) * &diag_inv;
            }
        }
        let inverse_cartan = cartan.inverse();
        let crystallographic = cartan.entries().iter().all(Scalar::is_integer);
        let dynkin_edges = dynkin_from_cartan(&cartan)?;

        let fund_weights: Vec<Vector> = (0..d).map(|j| inverse_cartan.column(j)).collect();
        // Dual basis to the simple roots: λⱼ^∨ = (2/⟨αⱼ,αⱼ⟩)·λⱼ, mirroring
        // the root/coroot rescaling.
        let fund_coweights: Vec<Vector> = (0..d)
            .map(|j| {
                let factor = &Scalar::from_int(2) / gram.at(j, j);
                linalg::vec_scale(&factor, &fund_weights[j])
            })
            .collect();
        let simple_coroots: Vec<Vector> = (0..d)
            .map(|j| {
                let mut v = linalg::zero_vector(d);
                v[j] = &Scalar::from_int(2) / gram.at(j, j);
                v
            })
            .collect();

        let mut rs = RootSystem {
            spec,
            rank: d,
            cartan,
            inverse_cartan,
            gram,
            dynkin_edges,
            pos_roots: Vec::new(),
            fund_weights,
            fund_coweights,
            simple_coroots,
            ambient: ambient_matrix(&spec),
            crystallographic,
        };
        rs.pos_roots = rs.positive_root_closure();
        Ok(rs)
    }

    /// Gram inner product of two vectors in simple-root coordinates.
    pub fn inner(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        linalg::dot(&self.gram.mul_vec(y), x)
    }

    /// All coroot pairings at once: `⟨x, αᵢ^∨⟩ = (A·x)ᵢ`.
    pub fn coroot_pairings(&self, x: &[Scalar]) -> Vector {
        self.cartan.mul_vec(x)
    }

    /// Matrix of the simple reflection sᵢ acting on simple-root coordinates:
    /// `sᵢ(αⱼ) = αⱼ − A_ij·αᵢ`.
    pub fn simple_reflection(&self, i: usize) -> Matrix {
        let mut m = Matrix::identity(self.rank);
        for j in 0..self.rank {
            *m.at_mut(i, j) = &*m.at(i, j) - self.cartan.at(i, j);
        }
        m
    }

    /// Apply sᵢ to a coordinate vector in place (only coordinate i changes).
    pub fn reflect_in_place(&self, i: usize, x: &mut [Scalar]) {
        let pairing = linalg::dot(self.cartan.row(i), x);
        x[i] = &x[i] - &pairing;
    }

    /// Dynkin neighbors of node `i`.
    pub fn neighbors(&self, i: usize) -> Vec<usize> {
        self.dynkin_edges
            .iter()
            .filter_map(|&(a, b, _)| {
                if a == i {
                    Some(b)
                } else if b == i {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    /// Label of the Dynkin edge {i, j}, or 2 when there is no edge.
    pub fn edge_label(&self, i: usize, j: usize) -> usize {
        self.dynkin_edges
            .iter()
            .find(|&&(a, b, _)| (a, b) == (i.min(j), i.max(j)))
            .map_or(2, |&(_, _, m)| m)
    }

    /// ρ = λ₁ + ⋯ + λ_d, the sum of the fundamental weights.
    pub fn rho(&self) -> Vector {
        self.fund_weights
            .iter()
            .fold(linalg::zero_vector(self.rank), |acc, w| {
                linalg::vec_add(&acc, w)
            })
    }

    /// 2ρ^∨ = 2(λ₁^∨ + ⋯ + λ_d^∨), a strictly dominant coroot-lattice point.
    pub fn two_rho_check(&self) -> Vector {
        let two = Scalar::from_int(2);
        self.fund_coweights
            .iter()
            .fold(linalg::zero_vector(self.rank), |acc, w| {
                linalg::vec_add(&acc, &linalg::vec_scale(&two, w))
            })
    }

    pub fn is_positive_root(&self, v: &[Scalar]) -> bool {
        self.pos_roots.iter().any(|r| r.as_slice() == v)
    }

    /// Closure of the simple roots under all simple reflections, intersected
    /// with the nonnegative cone.
    fn positive_root_closure(&self) -> Vec<Vector> {
        let d = self.rank;
        let mut found: Vec<Vector> = Vec::new();
        let mut queue: Vec<Vector> = (0..d).map(|i| linalg::unit_vector(d, i)).collect();
        while let Some(v) = queue.pop() {
            if found.contains(&v) {
                continue;
            }
            found.push(v.clone());
            for i in 0..d {
                let mut image = v.clone();
                self.reflect_in_place(i, &mut image);
                if image.iter().all(|c| !c.is_negative()) && !found.contains(&image) {
                    queue.push(image);
                }
            }
        }
        // Canonical order: lexicographic on coordinates.
        found.sort();
        found
    }

    /// Exact base change between simple-root coordinates and the orthonormal
    /// ambient basis of the classical constructions. For type A the ambient
    /// space is ℝ^{d+1} modulo the all-ones line; ambient outputs are
    /// sum-zero representatives and arbitrary representatives are accepted
    /// on input.
    pub fn ambient_convert(
        &self,
        v: &[Scalar],
        direction: AmbientDirection,
    ) -> Result<Vector, Error> {
        let m = self.ambient.as_ref().ok_or(Error::NonClassical)?;
        match direction {
            AmbientDirection::ToAmbient => Ok(m.mul_vec(v)),
            AmbientDirection::ToRootCoords => {
                if v.len() != m.rows {
                    return Err(Error::InvalidInput(format!(
                        "ambient vector has {} coordinates, expected {}",
                        v.len(),
                        m.rows
                    )));
                }
                let x = if self.spec.family == Family::A {
                    let n = Scalar::from_int(m.rows as i64);
                    let mean = &crate::field::total(v.iter()) / &n;
                    v.iter().map(|c| c - &mean).collect::<Vector>()
                } else {
                    v.to_vec()
                };
                // c = G⁻¹ · (⟨αᵢ, x⟩)ᵢ since MᵀM = G.
                let pairings = m.transpose().mul_vec(&x);
                Ok(self.gram.inverse().mul_vec(&pairings))
            }
        }
    }
}

fn gram_matrix(spec: &RootSystemSpec) -> Matrix {
    let d = spec.rank;
    let s = Scalar::from_int;
    let phi = Scalar::golden();
    let mut g = Matrix::zero(d, d);
    let set = |g: &mut Matrix, i: usize, j: usize, v: Scalar| {
        *g.at_mut(i, j) = v.clone();
        if i != j {
            *g.at_mut(j, i) = v;
        }
    };
    let chain = |g: &mut Matrix, upto: usize| {
        for i in 0..upto {
            *g.at_mut(i, i + 1) = s(-1);
            *g.at_mut(i + 1, i) = s(-1);
        }
    };
    match spec.family {
        Family::A => {
            for i in 0..d {
                set(&mut g, i, i, s(2));
            }
            chain(&mut g, d - 1);
        }
        Family::B => {
            for i in 0..d {
                set(&mut g, i, i, if i == d - 1 { s(1) } else { s(2) });
            }
            chain(&mut g, d - 1);
        }
        Family::C => {
            for i in 0..d {
                set(&mut g, i, i, if i == d - 1 { s(4) } else { s(2) });
            }
            chain(&mut g, d - 1);
            set(&mut g, d - 2, d - 1, s(-2));
        }
        Family::D => {
            for i in 0..d {
                set(&mut g, i, i, s(2));
            }
            chain(&mut g, d - 2);
            set(&mut g, d - 3, d - 1, s(-1));
        }
        Family::E6 => {
            for i in 0..6 {
                set(&mut g, i, i, s(2));
            }
            // Bourbaki numbering: chain 1−3−4−5−6 with 2 attached to 4.
            for (i, j) in [(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)] {
                set(&mut g, i, j, s(-1));
            }
        }
        Family::F4 => {
            set(&mut g, 0, 0, s(2));
            set(&mut g, 1, 1, s(2));
            set(&mut g, 2, 2, s(1));
            set(&mut g, 3, 3, s(1));
            set(&mut g, 0, 1, s(-1));
            set(&mut g, 1, 2, s(-1));
            set(&mut g, 2, 3, Scalar::ratio(-1, 2));
        }
        Family::G2 => {
            set(&mut g, 0, 0, Scalar::ratio(2, 3));
            set(&mut g, 1, 1, s(2));
            set(&mut g, 0, 1, s(-1));
        }
        Family::H3 | Family::H4 => {
            for i in 0..d {
                set(&mut g, i, i, s(2));
            }
            chain(&mut g, d - 2);
            set(&mut g, d - 2, d - 1, -&phi);
        }
        Family::I2 => match spec.dihedral_m.expect("validated") {
            3 => {
                set(&mut g, 0, 0, s(2));
                set(&mut g, 1, 1, s(2));
                set(&mut g, 0, 1, s(-1));
            }
            4 => {
                set(&mut g, 0, 0, s(2));
                set(&mut g, 1, 1, s(1));
                set(&mut g, 0, 1, s(-1));
            }
            5 => {
                set(&mut g, 0, 0, s(2));
                set(&mut g, 1, 1, s(2));
                set(&mut g, 0, 1, -&phi);
            }
            6 => {
                set(&mut g, 0, 0, Scalar::ratio(2, 3));
                set(&mut g, 1, 1, s(2));
                set(&mut g, 0, 1, s(-1));
            }
            _ => unreachable!("validated"),
        },
    }
    g
}

/// Recover the Dynkin edge labels from `A_ij·A_ji = 4cos²(π/m)`.
fn dynkin_from_cartan(cartan: &Matrix) -> Result<Vec<(usize, usize, usize)>, Error> {
    let d = cartan.rows;
    let mut edges = Vec::new();
    let phi = Scalar::golden();
    let phi_sq = &phi * &phi;
    for i in 0..d {
        for j in (i + 1)..d {
            let product = cartan.at(i, j) * cartan.at(j, i);
            let m = if product.is_zero() {
                continue;
            } else if product == Scalar::one() {
                3
            } else if product == Scalar::from_int(2) {
                4
            } else if product == phi_sq {
                5
            } else if product == Scalar::from_int(3) {
                6
            } else {
                return Err(Error::InvalidSpec(format!(
                    "Cartan product {product} at ({i},{j}) matches no supported bond"
                )));
            };
            edges.push((i, j, m));
        }
    }
    Ok(edges)
}

/// Simple roots in the orthonormal ambient basis (columns), classical only.
fn ambient_matrix(spec: &RootSystemSpec) -> Option<Matrix> {
    let d = spec.rank;
    let one = Scalar::one;
    let set_chain = |m: &mut Matrix, count: usize| {
        // αᵢ = eᵢ − eᵢ₊₁ as column i.
        for i in 0..count {
            *m.at_mut(i, i) = one();
            *m.at_mut(i + 1, i) = Scalar::from_int(-1);
        }
    };
    match spec.family {
        Family::A => {
            let mut m = Matrix::zero(d + 1, d);
            set_chain(&mut m, d);
            Some(m)
        }
        Family::B => {
            let mut m = Matrix::zero(d, d);
            set_chain(&mut m, d - 1);
            *m.at_mut(d - 1, d - 1) = one();
            Some(m)
        }
        Family::C => {
            let mut m = Matrix::zero(d, d);
            set_chain(&mut m, d - 1);
            *m.at_mut(d - 1, d - 1) = Scalar::from_int(2);
            Some(m)
        }
        Family::D => {
            let mut m = Matrix::zero(d, d);
            set_chain(&mut m, d - 1);
            *m.at_mut(d - 2, d - 1) = one();
            *m.at_mut(d - 1, d - 1) = one();
            Some(m)
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    fn build(family: Family, rank: usize) -> RootSystem {
        RootSystem::build(RootSystemSpec::new(family, rank)).unwrap()
    }

    #[test]
    fn a2_cartan() {
        let rs = build(Family::A, 2);
        assert_eq!(rs.cartan.row(0), &[s(2), s(-1)]);
        assert_eq!(rs.cartan.row(1), &[s(-1), s(2)]);
        assert_eq!(rs.dynkin_edges, vec![(0, 1, 3)]);
    }

    #[test]
    fn c2_cartan_row_convention() {
        let rs = build(Family::C, 2);
        assert_eq!(rs.cartan.row(0), &[s(2), s(-2)]);
        assert_eq!(rs.cartan.row(1), &[s(-1), s(2)]);
    }

    #[test]
    fn h3_cartan_and_labels() {
        let rs = build(Family::H3, 3);
        let phi = Scalar::golden();
        assert_eq!(rs.cartan.row(0), &[s(2), s(-1), s(0)]);
        assert_eq!(rs.cartan.row(1), &[s(-1), s(2), -&phi]);
        assert_eq!(rs.cartan.row(2), &[s(0), -&phi, s(2)]);
        assert_eq!(rs.dynkin_edges, vec![(0, 1, 3), (1, 2, 5)]);
        assert!(!rs.crystallographic);
    }

    #[test]
    fn positive_root_counts() {
        assert_eq!(build(Family::A, 2).pos_roots.len(), 3);
        assert_eq!(build(Family::C, 3).pos_roots.len(), 9);
        assert_eq!(build(Family::B, 3).pos_roots.len(), 9);
        assert_eq!(build(Family::D, 4).pos_roots.len(), 12);
        assert_eq!(build(Family::H3, 3).pos_roots.len(), 15);
        assert_eq!(build(Family::G2, 2).pos_roots.len(), 6);
        assert_eq!(build(Family::F4, 4).pos_roots.len(), 24);
        assert_eq!(build(Family::E6, 6).pos_roots.len(), 36);
        let h2 = RootSystem::build(RootSystemSpec::i2(5)).unwrap();
        assert_eq!(h2.pos_roots.len(), 5);
    }

    #[test]
    fn a2_positive_roots_are_reflection_closure() {
        let rs = build(Family::A, 2);
        let expected: Vec<Vector> = vec![
            vec![s(0), s(1)],
            vec![s(1), s(0)],
            vec![s(1), s(1)],
        ];
        assert_eq!(rs.pos_roots, expected);
    }

    #[test]
    fn weights_dual_to_coroots() {
        for rs in [
            build(Family::A, 3),
            build(Family::C, 3),
            build(Family::F4, 4),
            build(Family::H3, 3),
        ] {
            for i in 0..rs.rank {
                for j in 0..rs.rank {
                    let pairing = rs.inner(&rs.fund_weights[i], &rs.simple_coroots[j]);
                    let expected = if i == j { Scalar::one() } else { Scalar::zero() };
                    assert_eq!(pairing, expected, "⟨λ_{i}, α_{j}^∨⟩");
                }
            }
        }
    }

    #[test]
    fn cartan_recomputed_from_gram() {
        for rs in [build(Family::B, 4), build(Family::G2, 2), build(Family::H4, 4)] {
            for i in 0..rs.rank {
                for j in 0..rs.rank {
                    let recomputed = &(&Scalar::from_int(2) * rs.gram.at(i, j))
                        / rs.gram.at(i, i);
                    assert_eq!(recomputed, *rs.cartan.at(i, j));
                }
            }
        }
    }

    #[test]
    fn inverse_cartan_identity() {
        for rs in [
            build(Family::A, 4),
            build(Family::D, 4),
            build(Family::E6, 6),
            build(Family::H4, 4),
        ] {
            assert_eq!(rs.cartan.mul(&rs.inverse_cartan), Matrix::identity(rs.rank));
        }
    }

    #[test]
    fn coweight_weight_pairing_is_inverse_cartan() {
        // ⟨λᵢ^∨, λⱼ⟩ = A⁻¹_ij
        for rs in [build(Family::C, 3), build(Family::G2, 2), build(Family::H3, 3)] {
            for i in 0..rs.rank {
                for j in 0..rs.rank {
                    assert_eq!(
                        rs.inner(&rs.fund_coweights[i], &rs.fund_weights[j]),
                        *rs.inverse_cartan.at(i, j)
                    );
                }
            }
        }
    }

    #[test]
    fn ambient_examples() {
        let c3 = build(Family::C, 3);
        let lambda2 = c3
            .ambient_convert(&c3.fund_weights[1], AmbientDirection::ToAmbient)
            .unwrap();
        assert_eq!(lambda2, vec![s(1), s(1), s(0)]);

        let b3 = build(Family::B, 3);
        let lambda3 = b3
            .ambient_convert(&b3.fund_weights[2], AmbientDirection::ToAmbient)
            .unwrap();
        let half = Scalar::ratio(1, 2);
        assert_eq!(lambda3, vec![half.clone(), half.clone(), half]);

        // A2: λ₁ is the coset of e₁; its sum-zero representative is
        // e₁ − (1/3)·𝟙.
        let a2 = build(Family::A, 2);
        let lambda1 = a2
            .ambient_convert(&a2.fund_weights[0], AmbientDirection::ToAmbient)
            .unwrap();
        assert_eq!(
            lambda1,
            vec![Scalar::ratio(2, 3), Scalar::ratio(-1, 3), Scalar::ratio(-1, 3)]
        );
        // Round trip through an arbitrary coset representative.
        let back = a2
            .ambient_convert(&[s(1), s(0), s(0)], AmbientDirection::ToRootCoords)
            .unwrap();
        assert_eq!(back, a2.fund_weights[0]);
    }

    #[test]
    fn ambient_round_trip_bcd() {
        for rs in [build(Family::B, 3), build(Family::C, 4), build(Family::D, 4)] {
            for v in &rs.pos_roots {
                let amb = rs.ambient_convert(v, AmbientDirection::ToAmbient).unwrap();
                let back = rs
                    .ambient_convert(&amb, AmbientDirection::ToRootCoords)
                    .unwrap();
                assert_eq!(&back, v);
            }
        }
    }

    #[test]
    fn non_classical_has_no_ambient() {
        let h3 = build(Family::H3, 3);
        assert!(matches!(
            h3.ambient_convert(&h3.fund_weights[0], AmbientDirection::ToAmbient),
            Err(Error::NonClassical)
        ));
    }

    #[test]
    fn spec_validation() {
        assert!(RootSystem::build(RootSystemSpec::new(Family::D, 2)).is_err());
        assert!(RootSystem::build(RootSystemSpec::new(Family::E6, 5)).is_err());
        assert!(RootSystem::build(RootSystemSpec::i2(7)).is_err());
        assert!("E8".parse::<Family>().is_err());
        let err = "E7".parse::<Family>().unwrap_err();
        assert!(err.to_string().contains("desk scale"));
    }

    #[test]
    fn i2_variants_match_rank_two_data() {
        let a2 = build(Family::A, 2);
        let i23 = RootSystem::build(RootSystemSpec::i2(3)).unwrap();
        assert_eq!(a2.cartan, i23.cartan);
        let g2 = build(Family::G2, 2);
        let i26 = RootSystem::build(RootSystemSpec::i2(6)).unwrap();
        assert_eq!(g2.cartan, i26.cartan);
        let i25 = RootSystem::build(RootSystemSpec::i2(5)).unwrap();
        assert_eq!(i25.dynkin_edges, vec![(0, 1, 5)]);
        assert!(!i25.crystallographic);
        assert!(RootSystem::build(RootSystemSpec::i2(4)).unwrap().crystallographic);
    }
}
