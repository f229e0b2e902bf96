//! Finitely generated abelian groups presented as `Z^n / <relations>`.
//!
//! The presentation is normalized once via Smith normal form; elements are
//! ambient integer vectors compared through their normal coordinates. This
//! is the workhorse behind coinvariant lattices, `pi_1(G)_I`, its
//! sigma-coinvariants and fixed subgroups.

use crate::matrix::{
    self, identity, kernel_basis, mat_vec, smith_normal_form, IntMat,
};
use alloc::vec;
use alloc::vec::Vec;

#[derive(Debug, Clone)]
pub struct FgAbGroup {
    /// Ambient rank `n` of the presentation `Z^n / <rels>`.
    pub ambient: usize,
    /// Relation vectors (generators of the subgroup being divided out).
    pub rels: Vec<Vec<i64>>,
    /// Unimodular change of basis: normal coordinates are `u * x`.
    pub u: IntMat,
    pub u_inv: IntMat,
    /// Modulus per normal coordinate: `d >= 1` for torsion coordinates
    /// (d = 1 means the coordinate dies), 0 for free coordinates.
    pub moduli: Vec<i64>,
}

impl FgAbGroup {
    pub fn from_relations(ambient: usize, rels: &[Vec<i64>]) -> Self {
        let m = rels.len();
        let a: IntMat = (0..ambient)
            .map(|i| (0..m).map(|j| rels[j][i]).collect())
            .collect();
        let s = if m == 0 {
            None
        } else {
            Some(smith_normal_form(&a))
        };
        let (u, diag) = match s {
            None => (identity(ambient), Vec::new()),
            Some(s) => (s.u, s.diag),
        };
        let mut moduli = vec![0i64; ambient];
        for (i, &d) in diag.iter().enumerate() {
            moduli[i] = d;
        }
        let u_inv = invert_unimodular(&u);
        FgAbGroup {
            ambient,
            rels: rels.to_vec(),
            u,
            u_inv,
            moduli,
        }
    }

    /// Normal coordinates of an ambient vector.
    pub fn normal_form(&self, x: &[i64]) -> Vec<i64> {
        let mut y = mat_vec(&self.u, x);
        for (yi, &d) in y.iter_mut().zip(&self.moduli) {
            if d > 0 {
                *yi = yi.rem_euclid(d);
            }
        }
        y
    }

    pub fn is_zero(&self, x: &[i64]) -> bool {
        self.normal_form(x).iter().all(|&c| c == 0)
    }

    pub fn eq(&self, x: &[i64], y: &[i64]) -> bool {
        self.normal_form(x) == self.normal_form(y)
    }

    /// Invariant factors `>= 2`, in divisibility order.
    pub fn invariant_factors(&self) -> Vec<i64> {
        self.moduli.iter().copied().filter(|&d| d >= 2).collect()
    }

    pub fn free_rank(&self) -> usize {
        self.moduli.iter().filter(|&&d| d == 0).count()
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank() == 0 && self.invariant_factors().is_empty()
    }

    /// Order of the group when finite.
    pub fn order(&self) -> Option<u128> {
        if self.free_rank() > 0 {
            return None;
        }
        Some(
            self.invariant_factors()
                .iter()
                .map(|&d| d as u128)
                .product(),
        )
    }

    /// Solve `(sigma - 1) x = target` in the group; `sigma` is an ambient
    /// endomorphism preserving the relation lattice. Returns an ambient
    /// witness vector if solvable.
    pub fn solve_twisted(&self, sigma: &IntMat, target: &[i64]) -> Option<Vec<i64>> {
        let n = self.ambient;
        let m = self.rels.len();
        // columns: (sigma - 1) e_j for j < n, then the relations
        let mut cols: Vec<Vec<i64>> = Vec::with_capacity(n + m);
        for j in 0..n {
            let e: Vec<i64> = (0..n).map(|i| i64::from(i == j)).collect();
            let mut c = mat_vec(sigma, &e);
            for (ci, ei) in c.iter_mut().zip(&e) {
                *ci -= ei;
            }
            cols.push(c);
        }
        cols.extend(self.rels.iter().cloned());
        let a: IntMat = (0..n)
            .map(|i| (0..n + m).map(|j| cols[j][i]).collect())
            .collect();
        let z = matrix::solve_integer(&a, target)?;
        Some(z[..n].to_vec())
    }

    /// Shape `(free rank, invariant factors)` of the subgroup
    /// `{ g : (sigma - 1) g = 0 }`.
    pub fn fixed_subgroup_shape(&self, sigma: &IntMat) -> (usize, Vec<i64>) {
        let n = self.ambient;
        let m = self.rels.len();
        // lattice L of ambient x with (sigma-1) x in <rels>:
        // kernel of [sigma-1 | -rels] projected to the x block.
        let mut cols: Vec<Vec<i64>> = Vec::with_capacity(n + m);
        for j in 0..n {
            let e: Vec<i64> = (0..n).map(|i| i64::from(i == j)).collect();
            let mut c = mat_vec(sigma, &e);
            for (ci, ei) in c.iter_mut().zip(&e) {
                *ci -= ei;
            }
            cols.push(c);
        }
        for r in &self.rels {
            cols.push(r.iter().map(|&x| -x).collect());
        }
        let a: IntMat = (0..n)
            .map(|i| (0..n + m).map(|j| cols[j][i]).collect())
            .collect();
        let gens: Vec<Vec<i64>> = kernel_basis(&a)
            .into_iter()
            .map(|z| z[..n].to_vec())
            .collect();
        // fixed subgroup = L / <rels>: present on Z^k, k = #gens, with
        // relations { c : sum c_i gens_i in <rels> }.
        let k = gens.len();
        let mut cols2: Vec<Vec<i64>> = gens.clone();
        cols2.extend(self.rels.iter().cloned());
        let a2: IntMat = (0..n)
            .map(|i| (0..k + m).map(|j| cols2[j][i]).collect())
            .collect();
        let rels2: Vec<Vec<i64>> = kernel_basis(&a2)
            .into_iter()
            .map(|z| z[..k].to_vec())
            .collect();
        let g = FgAbGroup::from_relations(k, &rels2);
        (g.free_rank(), g.invariant_factors())
    }
}

/// Exact inverse of a unimodular integer matrix.
pub fn invert_unimodular(u: &IntMat) -> IntMat {
    let n = u.len();
    let mut cols = Vec::with_capacity(n);
    for j in 0..n {
        let e: Vec<i64> = (0..n).map(|i| i64::from(i == j)).collect();
        let c = matrix::solve_integer(u, &e).expect("matrix not unimodular");
        cols.push(c);
    }
    (0..n).map(|i| (0..n).map(|j| cols[j][i]).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::mat_mul;

    #[test]
    fn quotient_z2_by_swap_difference() {
        // Z^4 / <x - swap(x)> where swap exchanges the two Z^2 blocks:
        // relations (a,b,c,d) - (c,d,a,b); quotient is Z^2.
        let rels = vec![vec![1, 0, -1, 0], vec![0, 1, 0, -1]];
        let g = FgAbGroup::from_relations(4, &rels);
        assert_eq!(g.free_rank(), 2);
        assert!(g.invariant_factors().is_empty());
        assert!(g.eq(&[1, 2, 3, 4], &[4, 6, 0, 0]));
        assert!(!g.eq(&[1, 2, 3, 4], &[4, 5, 0, 0]));
    }

    #[test]
    fn torsion_unitary_like() {
        // Z^3 / <(1,0,1), (0,2,0)> = Z + Z/2
        let g = FgAbGroup::from_relations(3, &[vec![1, 0, 1], vec![0, 2, 0]]);
        assert_eq!(g.free_rank(), 1);
        assert_eq!(g.invariant_factors(), vec![2]);
        assert!(g.eq(&[0, 1, 0], &[1, 1, 1]));
        assert!(!g.eq(&[0, 1, 0], &[0, 0, 0]));
    }

    #[test]
    fn u_inverse() {
        let g = FgAbGroup::from_relations(3, &[vec![2, 4, 6], vec![0, 3, 3]]);
        assert!(matrix::mat_eq_identity(&mat_mul(&g.u, &g.u_inv)));
    }

    #[test]
    fn twisted_solve_and_fixed_subgroup() {
        // group Z^2 (no relations), sigma = swap: (sigma-1)x = (y-x, x-y).
        let g = FgAbGroup::from_relations(2, &[]);
        let swap = vec![vec![0, 1], vec![1, 0]];
        let w = g.solve_twisted(&swap, &[3, -3]).unwrap();
        assert_eq!(w[1] - w[0], 3);
        assert!(g.solve_twisted(&swap, &[1, 0]).is_none());
        let (fr, tors) = g.fixed_subgroup_shape(&swap);
        assert_eq!((fr, tors), (1, vec![]));
        // identity sigma: everything is fixed
        let (fr2, tors2) = g.fixed_subgroup_shape(&identity(2));
        assert_eq!((fr2, tors2), (2, vec![]));
    }
}
