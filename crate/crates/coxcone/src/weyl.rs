//! Weyl group enumeration and combinatorics: exact matrices, lengths,
//! parabolic subgroups, canonical coset representatives, Bruhat and weak
//! orders, and orbits.

use std::collections::HashMap;

use crate::field::Scalar;
use crate::linalg::{Matrix, Vector};
use crate::rootsys::RootSystem;
use crate::Error;

pub const DEFAULT_CAP: usize = 200_000;

/// One group element. The matrix acts on simple-root coordinates; its
/// row-major entries are the canonical hash/equality key. The stored word is
/// one reduced word (breadth-first search depth equals length).
pub struct WeylElement {
    pub matrix: Matrix,
    pub word: Vec<u8>,
    pub length: usize,
}

/// The whole group, closed under right multiplication by the simple
/// reflections. Immutable after [`WeylGroup::enumerate`].
pub struct WeylGroup {
    pub rank: usize,
    pub elements: Vec<WeylElement>,
    pub generators: Vec<Matrix>,
    index: HashMap<Vec<Scalar>, u32>,
    /// `cayley[w][i]` is the index of `w·sᵢ`.
    cayley: Vec<Vec<u32>>,
}

pub const IDENTITY: u32 = 0;

impl WeylGroup {
    /// Breadth-first closure from the identity under right multiplication by
    /// the simple reflections. Fails cleanly when the group would exceed
    /// `cap` elements.
    pub fn enumerate(rs: &RootSystem, cap: usize) -> Result<WeylGroup, Error> {
        let d = rs.rank;
        let generators: Vec<Matrix> = (0..d).map(|i| rs.simple_reflection(i)).collect();
        let identity = Matrix::identity(d);
        let mut index = HashMap::new();
        index.insert(identity.entries().to_vec(), IDENTITY);
        let mut elements = vec![WeylElement {
            matrix: identity,
            word: Vec::new(),
            length: 0,
        }];
        let mut cayley: Vec<Vec<u32>> = vec![vec![0; d]];
        let mut head = 0usize;
        while head < elements.len() {
            for i in 0..d {
                let product = elements[head].matrix.mul(&generators[i]);
                let key = product.entries().to_vec();
                if let Some(&existing) = index.get(&key) {
                    cayley[head][i] = existing;
                    continue;
                }
                if elements.len() >= cap {
                    return Err(Error::CapExceeded {
                        cap,
                        found: elements.len() + 1,
                    });
                }
                let idx = elements.len() as u32;
                index.insert(key, idx);
                let mut word = elements[head].word.clone();
                word.push(i as u8);
                let length = elements[head].length + 1;
                elements.push(WeylElement {
                    matrix: product,
                    word,
                    length,
                });
                cayley.push(vec![0; d]);
                cayley[head][i] = idx;
            }
            head += 1;
        }
        Ok(WeylGroup {
            rank: d,
            elements,
            generators,
            index,
            cayley,
        })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn element(&self, w: u32) -> &WeylElement {
        &self.elements[w as usize]
    }

    pub fn length(&self, w: u32) -> usize {
        self.elements[w as usize].length
    }

    /// Index of `w·sᵢ`.
    pub fn right_mul(&self, w: u32, i: usize) -> u32 {
        self.cayley[w as usize][i]
    }

    /// Index of the product `a·b`, following `b`'s reduced word.
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.elements[b as usize]
            .word
            .iter()
            .fold(a, |acc, &i| self.right_mul(acc, i as usize))
    }

    /// Index of `w⁻¹` (the reversed word, since generators are involutions).
    pub fn inverse(&self, w: u32) -> u32 {
        self.elements[w as usize]
            .word
            .iter()
            .rev()
            .fold(IDENTITY, |acc, &i| self.right_mul(acc, i as usize))
    }

    /// Look up an element by its matrix. Returns `None` for matrices outside
    /// the group.
    pub fn find(&self, matrix: &Matrix) -> Option<u32> {
        self.index.get(matrix.entries()).copied()
    }

    /// The unique element of maximal length.
    pub fn longest(&self) -> u32 {
        (0..self.order() as u32)
            .max_by_key(|&w| self.length(w))
            .expect("nonempty group")
    }

    /// The parabolic subgroup generated by `{sᵢ : i ∈ gens}`, in
    /// breadth-first order starting at the identity.
    pub fn parabolic(&self, gens: &[usize]) -> Vec<u32> {
        let mut seen = vec![false; self.order()];
        seen[IDENTITY as usize] = true;
        let mut out = vec![IDENTITY];
        let mut head = 0;
        while head < out.len() {
            for &i in gens {
                let next = self.right_mul(out[head], i);
                if !seen[next as usize] {
                    seen[next as usize] = true;
                    out.push(next);
                }
            }
            head += 1;
        }
        out
    }

    /// The minimum-length element of the left coset `w·W_I`; it is unique
    /// and serves as the coset's dedup key.
    pub fn coset_canonical(&self, w: u32, gens: &[usize]) -> u32 {
        let mut cur = w;
        loop {
            match gens
                .iter()
                .map(|&i| self.right_mul(cur, i))
                .find(|&next| self.length(next) < self.length(cur))
            {
                Some(next) => cur = next,
                None => return cur,
            }
        }
    }

    /// Bruhat order, decided by peeling right descents off `v` (the greedy
    /// right-to-left subword match against a reduced word of `v`).
    pub fn bruhat_leq(&self, u: u32, v: u32) -> bool {
        let mut u = u;
        let mut v = v;
        loop {
            if u == IDENTITY {
                return true;
            }
            if self.length(u) > self.length(v) {
                return false;
            }
            let i = (0..self.rank)
                .find(|&i| self.length(self.right_mul(v, i)) < self.length(v))
                .expect("non-identity element has a right descent");
            let vs = self.right_mul(v, i);
            let us = self.right_mul(u, i);
            if self.length(us) < self.length(u) {
                u = us;
            }
            v = vs;
        }
    }

    /// Right weak order: `u ≤ v` iff `v` extends `u` by length-increasing
    /// right multiplications, i.e. ℓ(u) + ℓ(u⁻¹v) = ℓ(v).
    pub fn weak_leq(&self, u: u32, v: u32) -> bool {
        let quotient = self.mul(self.inverse(u), v);
        self.length(u) + self.length(quotient) == self.length(v)
    }

    /// Deduplicated orbit `{w·x}` in breadth-first order from `x`.
    pub fn orbit(&self, rs: &RootSystem, x: &[Scalar]) -> Vec<Vector> {
        let mut seen: HashMap<Vec<Scalar>, ()> = HashMap::new();
        let mut out: Vec<Vector> = Vec::new();
        let mut queue = vec![x.to_vec()];
        seen.insert(x.to_vec(), ());
        while let Some(v) = queue.pop() {
            out.push(v.clone());
            for i in 0..self.rank {
                let mut image = v.clone();
                rs.reflect_in_place(i, &mut image);
                if !seen.contains_key(&image) {
                    seen.insert(image.clone(), ());
                    queue.push(image);
                }
            }
        }
        out.sort();
        out
    }

    /// Apply `w` to a coordinate vector.
    pub fn act(&self, w: u32, x: &[Scalar]) -> Vector {
        self.elements[w as usize].matrix.mul_vec(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{Family, RootSystemSpec};

    fn group(family: Family, rank: usize) -> (RootSystem, WeylGroup) {
        let rs = RootSystem::build(RootSystemSpec::new(family, rank)).unwrap();
        let w = WeylGroup::enumerate(&rs, DEFAULT_CAP).unwrap();
        (rs, w)
    }

    /// Index of the element with the given word, following the Cayley table.
    fn by_word(w: &WeylGroup, word: &[usize]) -> u32 {
        word.iter().fold(IDENTITY, |acc, &i| w.right_mul(acc, i))
    }

    #[test]
    fn classical_orders() {
        assert_eq!(group(Family::A, 2).1.order(), 6);
        assert_eq!(group(Family::A, 3).1.order(), 24);
        assert_eq!(group(Family::B, 3).1.order(), 48);
        assert_eq!(group(Family::C, 3).1.order(), 48);
        assert_eq!(group(Family::D, 4).1.order(), 192);
        assert_eq!(group(Family::G2, 2).1.order(), 12);
        assert_eq!(group(Family::H3, 3).1.order(), 120);
        let h2 = RootSystem::build(RootSystemSpec::i2(5)).unwrap();
        assert_eq!(WeylGroup::enumerate(&h2, DEFAULT_CAP).unwrap().order(), 10);
    }

    #[test]
    fn cap_is_enforced() {
        let rs = RootSystem::build(RootSystemSpec::new(Family::A, 3)).unwrap();
        match WeylGroup::enumerate(&rs, 10) {
            Err(Error::CapExceeded { cap: 10, found }) => assert!(found > 10),
            other => panic!("expected cap error, got {:?}", other.map(|g| g.order())),
        }
    }

    #[test]
    fn gram_form_is_preserved() {
        let (rs, w) = group(Family::B, 3);
        for e in &w.elements {
            let mtgm = e.matrix.transpose().mul(&rs.gram).mul(&e.matrix);
            assert_eq!(mtgm, rs.gram);
        }
    }

    #[test]
    fn length_equals_inversions() {
        // ℓ(w) equals the number of positive roots sent to negatives.
        let (rs, w) = group(Family::A, 3);
        for e in &w.elements {
            let inversions = rs
                .pos_roots
                .iter()
                .filter(|r| {
                    let image = e.matrix.mul_vec(r);
                    image.iter().any(|c| c.is_negative())
                })
                .count();
            assert_eq!(e.length, inversions);
        }
    }

    #[test]
    fn longest_element() {
        for (family, rank) in [(Family::A, 3), (Family::C, 3), (Family::H3, 3)] {
            let (rs, w) = group(family, rank);
            let w0 = w.longest();
            assert_eq!(w.length(w0), rs.pos_roots.len());
            let count = w
                .elements
                .iter()
                .filter(|e| e.length == rs.pos_roots.len())
                .count();
            assert_eq!(count, 1);
        }
    }

    #[test]
    fn generator_steps_change_length_by_one() {
        let (_, w) = group(Family::B, 3);
        for idx in 0..w.order() as u32 {
            for i in 0..w.rank {
                let next = w.right_mul(idx, i);
                let diff = w.length(next) as i64 - w.length(idx) as i64;
                assert_eq!(diff.abs(), 1);
            }
        }
    }

    #[test]
    fn parabolic_orders() {
        let (_, c3) = group(Family::C, 3);
        assert_eq!(c3.parabolic(&[0, 2]).len(), 4);
        assert_eq!(c3.parabolic(&[]).len(), 1);
        let (_, a3) = group(Family::A, 3);
        assert_eq!(a3.parabolic(&[0, 1]).len(), 6);
    }

    #[test]
    fn coset_canonical_examples() {
        let (_, a2) = group(Family::A, 2);
        // w inside W_I has canonical representative e.
        let s1 = by_word(&a2, &[1]);
        assert_eq!(a2.coset_canonical(s1, &[1]), IDENTITY);
        // s₀s₁·W_{{1}}: the shorter of {s₀s₁, s₀} is s₀.
        let s0s1 = by_word(&a2, &[0, 1]);
        assert_eq!(a2.coset_canonical(s0s1, &[1]), by_word(&a2, &[0]));

        let (_, c3) = group(Family::C, 3);
        let gens = [0usize, 2];
        let mut reps: Vec<u32> = (0..c3.order() as u32)
            .map(|w| c3.coset_canonical(w, &gens))
            .collect();
        reps.sort_unstable();
        reps.dedup();
        assert_eq!(reps.len(), 12); // 48 / 4
    }

    #[test]
    fn bruhat_and_weak_examples() {
        let (_, a2) = group(Family::A, 2);
        let s0 = by_word(&a2, &[0]);
        let s1 = by_word(&a2, &[1]);
        let s1s0 = by_word(&a2, &[1, 0]);
        for v in 0..a2.order() as u32 {
            assert!(a2.bruhat_leq(IDENTITY, v));
        }
        assert!(a2.bruhat_leq(s0, s1s0));
        assert!(!a2.weak_leq(s0, s1));
        assert!(a2.weak_leq(s1, s1s0));
        // s₀ is not a prefix of s₁s₀ in the right weak order.
        assert!(!a2.weak_leq(s0, s1s0));
    }

    #[test]
    fn bruhat_agrees_with_weak_on_covers() {
        let (_, w) = group(Family::A, 3);
        for u in 0..w.order() as u32 {
            for i in 0..w.rank {
                let v = w.right_mul(u, i);
                if w.length(v) == w.length(u) + 1 {
                    assert!(w.bruhat_leq(u, v));
                    assert!(w.weak_leq(u, v));
                    assert!(!w.bruhat_leq(v, u));
                    assert!(!w.weak_leq(v, u));
                }
            }
        }
    }

    #[test]
    fn orbits() {
        let (rs, w) = group(Family::A, 2);
        assert_eq!(w.orbit(&rs, &rs.fund_weights[0]).len(), 3);
        let (rs3, w3) = group(Family::C, 3);
        assert_eq!(w3.orbit(&rs3, &rs3.fund_weights[2]).len(), 8);
        let zero = crate::linalg::zero_vector(3);
        assert_eq!(w3.orbit(&rs3, &zero), vec![zero.clone()]);
    }

    #[test]
    fn orbit_stabilizer_products() {
        let (rs, w) = group(Family::B, 3);
        // λ_I with I the stabilized generator set: orbit × |W_I| = |W|.
        for stab_gens in [vec![0usize], vec![1, 2], vec![0, 2]] {
            let free: Vec<usize> = (0..3).filter(|i| !stab_gens.contains(i)).collect();
            let x = free.iter().fold(crate::linalg::zero_vector(3), |acc, &i| {
                crate::linalg::vec_add(&acc, &rs.fund_weights[i])
            });
            let orbit = w.orbit(&rs, &x);
            let stab = w.parabolic(&stab_gens);
            assert_eq!(orbit.len() * stab.len(), w.order());
        }
    }

    #[test]
    fn group_products_and_inverses() {
        let (_, w) = group(Family::C, 3);
        for a in (0..w.order() as u32).step_by(7) {
            let inv = w.inverse(a);
            assert_eq!(w.mul(a, inv), IDENTITY);
            assert_eq!(w.mul(inv, a), IDENTITY);
            let m = w.element(a).matrix.mul(&w.element(inv).matrix);
            assert_eq!(m, Matrix::identity(3));
        }
    }
}
