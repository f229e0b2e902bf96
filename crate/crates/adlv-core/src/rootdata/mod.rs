//! Based root data with inertia and Frobenius actions, and everything
//! derived from them at the lattice level: coinvariants, the echelonnage
//! (relative) root system with its Weyl group, dominance orders, `rho`
//! pairings, `pi_1` and the Kottwitz map.

mod datum;
mod pi1;
pub mod presets;
mod relative;

pub use datum::{close_group, RootDatumWithFrobenius};
pub use pi1::Pi1Group;
pub use presets::Preset;
pub use relative::{
    CoinvariantLattice, CoweightClass, RelRoot, RelativeRootSystem, WeylWord,
};

use crate::error::Error;
use alloc::vec::Vec;

/// A root datum together with all derived lattice structures, built once.
#[derive(Debug, Clone)]
pub struct GroupData {
    pub datum: RootDatumWithFrobenius,
    pub coinv: CoinvariantLattice,
    pub rel: RelativeRootSystem,
    pub pi1: Pi1Group,
}

impl GroupData {
    pub fn new(datum: RootDatumWithFrobenius) -> Result<Self, Error> {
        datum.validate()?;
        let coinv = CoinvariantLattice::new(&datum)?;
        let rel = RelativeRootSystem::new(&datum, &coinv)?;
        let pi1 = Pi1Group::new(&datum, &coinv)?;
        Ok(GroupData {
            datum,
            coinv,
            rel,
            pi1,
        })
    }

    pub fn from_preset(preset: &Preset) -> Result<Self, Error> {
        GroupData::new(preset.build()?)
    }

    /// Adjoint quotient with the coweight transfer map: the new datum plus
    /// the matrix sending a cocharacter to its adjoint coordinates
    /// `(⟨alpha_i, x⟩)_i` over the absolute simple roots.
    pub fn adjoint_quotient(&self) -> Result<(GroupData, Vec<Vec<i64>>), Error> {
        let (datum, transfer) = self.datum.adjoint_quotient();
        Ok((GroupData::new(datum)?, transfer))
    }

    /// `⟨rho, x⟩` through the inertia-averaged lift; torsion dies.
    pub fn pair_rho(&self, x: &CoweightClass) -> crate::Rat {
        self.coinv
            .pair_lifted(&self.rel.rho_abs, &crate::rational::to_rat_vec(&x.free))
    }

    pub fn pair_rho_rat(&self, free: &[crate::Rat]) -> crate::Rat {
        self.coinv.pair_lifted(&self.rel.rho_abs, free)
    }

    /// Kottwitz image in `pi_1(G)_I`.
    pub fn kottwitz(&self, x: &CoweightClass) -> Vec<i64> {
        self.pi1.kottwitz(&self.coinv, x)
    }

    /// Kottwitz image in the Galois coinvariants `pi_1(G)_Gamma`.
    pub fn kottwitz_gamma(&self, x: &CoweightClass) -> Vec<i64> {
        self.pi1.kottwitz_gamma(&self.coinv, x)
    }
}
