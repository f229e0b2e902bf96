use super::datum::RootDatumWithFrobenius;
use super::relative::{CoinvariantLattice, CoweightClass};
use crate::abelian::FgAbGroup;
use crate::error::Error;
use crate::matrix::{mat_vec, IntMat};
use alloc::vec::Vec;

/// `pi_1(G)_I = X_*(T)_I / <projected coroots>` with the descended Frobenius,
/// its fixed subgroup and its Galois coinvariants. The Kottwitz map is the
/// projection; all groups live on the same ambient presentation.
#[derive(Debug, Clone)]
pub struct Pi1Group {
    /// `Z^rank / (inertia moves + coroots)`.
    pub group: FgAbGroup,
    /// `Z^rank / (inertia moves + coroots + (sigma - 1))`.
    pub gamma: FgAbGroup,
    /// Frobenius as an ambient matrix (kept for solving `(sigma-1)x = t`).
    pub sigma: IntMat,
    /// Shape `(free rank, invariant factors)` of the sigma-fixed subgroup
    /// of `pi_1(G)_I`.
    pub fixed_shape: (usize, Vec<i64>),
}

impl Pi1Group {
    pub fn new(
        datum: &RootDatumWithFrobenius,
        coinv: &CoinvariantLattice,
    ) -> Result<Self, Error> {
        let mut rels = coinv.group.rels.clone();
        for cv in &datum.coroots {
            rels.push(cv.clone());
        }
        let group = FgAbGroup::from_relations(datum.rank, &rels);
        let mut gamma_rels = rels.clone();
        let n = datum.rank;
        for j in 0..n {
            let e: Vec<i64> = (0..n).map(|i| i64::from(i == j)).collect();
            let mut c = mat_vec(&datum.frobenius, &e);
            for (ci, ei) in c.iter_mut().zip(&e) {
                *ci -= ei;
            }
            if c.iter().any(|&x| x != 0) {
                gamma_rels.push(c);
            }
        }
        let gamma = FgAbGroup::from_relations(datum.rank, &gamma_rels);
        let fixed_shape = group.fixed_subgroup_shape(&datum.frobenius);
        Ok(Pi1Group {
            group,
            gamma,
            sigma: datum.frobenius.clone(),
            fixed_shape,
        })
    }

    /// Kottwitz image of a coweight class in `pi_1(G)_I` (normal form).
    pub fn kottwitz(&self, coinv: &CoinvariantLattice, x: &CoweightClass) -> Vec<i64> {
        self.group.normal_form(&coinv.ambient_rep(x))
    }

    /// Image in the Galois coinvariants `pi_1(G)_Gamma` (normal form).
    pub fn kottwitz_gamma(&self, coinv: &CoinvariantLattice, x: &CoweightClass) -> Vec<i64> {
        self.gamma.normal_form(&coinv.ambient_rep(x))
    }

    /// Solve `(sigma - 1) x = target` in `pi_1(G)_I`, `target` given as an
    /// ambient vector. Returns an ambient witness.
    pub fn solve_sigma_minus_one(&self, target: &[i64]) -> Option<Vec<i64>> {
        self.group.solve_twisted(&self.sigma, target)
    }
}

#[cfg(test)]
mod tests {
    use crate::rootdata::{GroupData, Preset};
    use crate::rootdata::presets::build_sl;

    #[test]
    fn pi1_gl_n_is_z() {
        for n in 2..=4 {
            let g = GroupData::from_preset(&Preset::gl(n)).unwrap();
            assert_eq!(g.pi1.group.free_rank(), 1);
            assert!(g.pi1.group.invariant_factors().is_empty());
            // kappa is the coordinate sum: check additivity on examples
            let a = g.coinv.project(&vec![1; n]);
            let b = g.coinv.project(&{
                let mut v = vec![0; n];
                v[0] = 1;
                v
            });
            let ka = g.pi1.kottwitz(&g.coinv, &a);
            let kb = g.pi1.kottwitz(&g.coinv, &b);
            let sum = g.coinv.add(&a, &b);
            let ks = g.pi1.kottwitz(&g.coinv, &sum);
            let manual: Vec<i64> = ka.iter().zip(&kb).map(|(x, y)| x + y).collect();
            assert_eq!(g.pi1.group.normal_form(&{
                // lift normal coords back through u_inv to compare in the group
                crate::matrix::mat_vec(&g.pi1.group.u_inv, &manual)
            }), ks);
            // sigma trivial: fixed subgroup is all of Z
            assert_eq!(g.pi1.fixed_shape, (1, vec![]));
        }
    }

    #[test]
    fn pi1_sl_and_pgl() {
        let sl2 = GroupData::new(build_sl(2).unwrap()).unwrap();
        assert!(sl2.pi1.group.is_trivial());
        let gl2 = GroupData::from_preset(&Preset::gl(2)).unwrap();
        let (pgl2, _) = gl2.adjoint_quotient().unwrap();
        assert_eq!(pgl2.pi1.group.free_rank(), 0);
        assert_eq!(pgl2.pi1.group.invariant_factors(), vec![2]);
    }

    #[test]
    fn kappa_kills_coroots() {
        for p in [Preset::gl(3), Preset::res_gl(2, 1, 2), Preset::unitary(3, true)] {
            let g = GroupData::from_preset(&p).unwrap();
            for cv in &g.datum.coroots {
                let c = g.coinv.project(cv);
                assert!(g.pi1.kottwitz(&g.coinv, &c).iter().all(|&x| x == 0));
            }
        }
    }

    #[test]
    fn ramified_unitary_pi1_torsion() {
        let g = GroupData::from_preset(&Preset::unitary(3, true)).unwrap();
        assert_eq!(g.pi1.group.free_rank(), 0);
        assert_eq!(g.pi1.group.invariant_factors(), vec![2]);
    }
}
