//! Exact linear-programming feasibility over [`Scalar`].
//!
//! Solves one question: does `u` exist with `E·u = 0` and `N·u ≥ 𝟙`?
//! Equalities are eliminated through an exact nullspace basis, then a
//! phase-one primal simplex with Bland's rule decides strict feasibility.
//! Instances here are tiny (a few dozen constraints), so the dense tableau
//! is fine.

use crate::field::Scalar;
use crate::linalg::{self, Matrix, RankAccumulator, Vector};

/// Exact basis of `{v : row·v = 0 for every row}`.
pub fn nullspace_basis(rows: &[Vector], width: usize) -> Vec<Vector> {
    let mut acc = RankAccumulator::new(width);
    for row in rows {
        acc.push_dense(row.clone());
    }
    let echelon = acc.into_pivot_rows();
    let pivot_cols: Vec<usize> = echelon.iter().map(|(c, _)| *c).collect();
    let mut basis = Vec::new();
    for free in 0..width {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = linalg::zero_vector(width);
        v[free] = Scalar::one();
        // Back-substitute against the echelon rows, bottom pivot first.
        for (pc, row) in echelon.iter().rev() {
            let residual = linalg::dot(row, &v);
            if !residual.is_zero() {
                v[*pc] = &v[*pc] - &residual;
            }
        }
        basis.push(v);
    }
    basis
}

/// Is there `u` with `eq·u = 0` for every row of `eq` and `strict·u ≥ 1`
/// for every row of `strict`? (Scaling makes `≥ 𝟙` equivalent to `> 0`.)
pub fn strict_feasible(eq: &[Vector], strict: &[Vector], dim: usize) -> bool {
    let basis = nullspace_basis(eq, dim);
    if strict.is_empty() {
        return true;
    }
    if basis.is_empty() {
        return false;
    }
    let reduced: Vec<Vector> = strict
        .iter()
        .map(|row| basis.iter().map(|b| linalg::dot(row, b)).collect())
        .collect();
    feasible_geq_one(&reduced, basis.len())
}

/// Phase-one simplex for `M·y ≥ 𝟙` with free `y`: write `y = y⁺ − y⁻`,
/// add slacks `s ≥ 0` and artificials `a ≥ 0` with `M·y − s + a = 𝟙`, and
/// minimize `Σ a` under Bland's rule.
fn feasible_geq_one(m_rows: &[Vector], k: usize) -> bool {
    let m = m_rows.len();
    let cols = 2 * k + 2 * m; // y⁺, y⁻, slacks, artificials
    let mut tableau = Matrix::zero(m, cols + 1);
    for (r, row) in m_rows.iter().enumerate() {
        for c in 0..k {
            *tableau.at_mut(r, c) = row[c].clone();
            *tableau.at_mut(r, k + c) = -&row[c];
        }
        *tableau.at_mut(r, 2 * k + r) = Scalar::from_int(-1); // slack
        *tableau.at_mut(r, 2 * k + m + r) = Scalar::one(); // artificial
        *tableau.at_mut(r, cols) = Scalar::one(); // right-hand side
    }
    let mut basis: Vec<usize> = (0..m).map(|r| 2 * k + m + r).collect();

    // Reduced-cost row (z_j − c_j) for minimizing Σ artificials, starting
    // from the all-artificial basis: the column sums, minus cost 1 on each
    // artificial column.
    let mut objective = linalg::zero_vector(cols + 1);
    for r in 0..m {
        for c in 0..=cols {
            objective[c] = &objective[c] + tableau.at(r, c);
        }
    }
    for a in 0..m {
        let col = 2 * k + m + a;
        objective[col] = &objective[col] - &Scalar::one();
    }

    loop {
        // Bland: lowest-index column with positive reduced cost enters.
        let entering = match (0..cols).find(|&c| objective[c].is_positive()) {
            Some(c) => c,
            None => break,
        };
        // Ratio test; ties broken by the lowest leaving basis variable.
        let mut pivot_row: Option<usize> = None;
        let mut best: Option<Scalar> = None;
        for r in 0..m {
            let coeff = tableau.at(r, entering);
            if !coeff.is_positive() {
                continue;
            }
            let ratio = tableau.at(r, cols) / coeff;
            let better = match &best {
                None => true,
                Some(b) => match ratio.cmp(b) {
                    std::cmp::Ordering::Less => true,
                    std::cmp::Ordering::Equal => {
                        basis[r] < basis[pivot_row.expect("tie implies a row")]
                    }
                    std::cmp::Ordering::Greater => false,
                },
            };
            if better {
                best = Some(ratio);
                pivot_row = Some(r);
            }
        }
        let pr = match pivot_row {
            Some(r) => r,
            // The phase-one objective is bounded below by 0, so an
            // unbounded column cannot occur; bail out as infeasible.
            None => return false,
        };
        let pinv = tableau.at(pr, entering).inverse().expect("positive pivot");
        for c in 0..=cols {
            *tableau.at_mut(pr, c) = &*tableau.at(pr, c) * &pinv;
        }
        for r in 0..m {
            if r == pr {
                continue;
            }
            let factor = tableau.at(r, entering).clone();
            if factor.is_zero() {
                continue;
            }
            for c in 0..=cols {
                let delta = tableau.at(pr, c) * &factor;
                *tableau.at_mut(r, c) = &*tableau.at(r, c) - &delta;
            }
        }
        let factor = objective[entering].clone();
        if !factor.is_zero() {
            for c in 0..=cols {
                let delta = tableau.at(pr, c) * &factor;
                objective[c] = &objective[c] - &delta;
            }
        }
        basis[pr] = entering;
    }

    // Feasible iff the artificial total was driven to zero.
    objective[cols].is_zero()
}
