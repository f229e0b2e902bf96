use crate::abelian::invert_unimodular;
use crate::error::Error;
use crate::matrix::{identity, mat_eq_identity, mat_mul, mat_vec, transpose, IntMat};
use crate::rational::{dot_ii, rat, Rat};
use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

/// A based absolute root datum on `Z^rank` together with a finite inertia
/// action and a Frobenius automorphism, both preserving the base.
///
/// Roots are covectors (pairing against cocharacters by the dot product),
/// coroots are vectors. The full root system is generated from the simple
/// roots at construction time.
#[derive(Debug, Clone)]
pub struct RootDatumWithFrobenius {
    pub rank: usize,
    pub simple_roots: Vec<Vec<i64>>,
    pub simple_coroots: Vec<Vec<i64>>,
    /// All roots, with `coroots[i]` matching `roots[i]`.
    pub roots: Vec<Vec<i64>>,
    pub coroots: Vec<Vec<i64>>,
    /// `positive[i]` iff `roots[i]` is a nonnegative combination of simples.
    pub positive: Vec<bool>,
    /// Generators of the inertia action on cocharacters.
    pub inertia_gens: Vec<IntMat>,
    /// The Frobenius action on cocharacters.
    pub frobenius: IntMat,
    pub label: String,
}

impl RootDatumWithFrobenius {
    pub fn new(
        rank: usize,
        simple_roots: Vec<Vec<i64>>,
        simple_coroots: Vec<Vec<i64>>,
        inertia_gens: Vec<IntMat>,
        frobenius: IntMat,
        label: String,
    ) -> Result<Self, Error> {
        if rank == 0 && !simple_roots.is_empty() {
            return Err(Error::BadDatum("rank 0 with roots".into()));
        }
        let (roots, coroots, positive) = generate_roots(rank, &simple_roots, &simple_coroots)?;
        let d = RootDatumWithFrobenius {
            rank,
            simple_roots,
            simple_coroots,
            roots,
            coroots,
            positive,
            inertia_gens,
            frobenius,
            label,
        };
        d.validate()?;
        Ok(d)
    }

    /// A torus: no roots at all.
    pub fn torus(rank: usize, inertia_gens: Vec<IntMat>, frobenius: IntMat) -> Result<Self, Error> {
        RootDatumWithFrobenius::new(
            rank,
            Vec::new(),
            Vec::new(),
            inertia_gens,
            frobenius,
            String::from("torus"),
        )
    }

    pub fn validate(&self) -> Result<(), Error> {
        let n = self.rank;
        if self.simple_roots.len() != self.simple_coroots.len() {
            return Err(Error::BadDatum("simple roots/coroots length mismatch".into()));
        }
        for (a, av) in self.simple_roots.iter().zip(&self.simple_coroots) {
            if a.len() != n || av.len() != n {
                return Err(Error::BadDatum("vector length != rank".into()));
            }
        }
        // Cartan matrix conditions on simple pairs.
        for (i, a) in self.simple_roots.iter().enumerate() {
            for (j, bv) in self.simple_coroots.iter().enumerate() {
                let c = dot_ii(a, bv);
                if i == j && c != 2 {
                    return Err(Error::BadDatum(format!("<a_{i}, a_{i}^> = {c} != 2")));
                }
                if i != j && c > 0 {
                    return Err(Error::BadDatum(format!(
                        "<a_{i}, a_{j}^> = {c} > 0 off-diagonal"
                    )));
                }
            }
        }
        // every inertia/frobenius automorphism permutes simple roots and coroots
        let mut autos: Vec<&IntMat> = self.inertia_gens.iter().collect();
        autos.push(&self.frobenius);
        for g in autos {
            if g.len() != n || (n > 0 && g[0].len() != n) {
                return Err(Error::BadDatum("automorphism has wrong size".into()));
            }
            self.permutation_on_simples(g)?;
        }
        // frobenius normalizes the inertia group
        let sigma = &self.frobenius;
        let sigma_inv = invert_unimodular(sigma);
        for g in &self.inertia_gens {
            let conj = mat_mul(&mat_mul(sigma, g), &sigma_inv);
            if !self.inertia_group().iter().any(|h| *h == conj) {
                return Err(Error::BadDatum(
                    "frobenius does not normalize the inertia action".into(),
                ));
            }
        }
        Ok(())
    }

    /// The permutation `pi` with `g(simple_coroot_j) = simple_coroot_{pi(j)}`
    /// (and compatibly on simple roots); error if `g` is not base-preserving.
    pub fn permutation_on_simples(&self, g: &IntMat) -> Result<Vec<usize>, Error> {
        let g_inv_t = transpose(&invert_unimodular(g));
        let mut perm = Vec::with_capacity(self.simple_roots.len());
        for (j, av) in self.simple_coroots.iter().enumerate() {
            let gv = mat_vec(g, av);
            let ga = mat_vec(&g_inv_t, &self.simple_roots[j]);
            let pos = self
                .simple_coroots
                .iter()
                .position(|w| *w == gv)
                .ok_or_else(|| Error::BadDatum(format!("image of coroot {j} not simple")))?;
            if self.simple_roots[pos] != ga {
                return Err(Error::BadDatum(format!(
                    "root/coroot images of simple {j} disagree"
                )));
            }
            perm.push(pos);
        }
        Ok(perm)
    }

    /// The full inertia group (closure of the generators, with identity).
    pub fn inertia_group(&self) -> Vec<IntMat> {
        close_group(self.rank, &self.inertia_gens, 10_000)
    }

    /// Order of the Frobenius as a lattice automorphism.
    pub fn frobenius_order(&self) -> usize {
        let mut p = self.frobenius.clone();
        for k in 1..=10_000 {
            if mat_eq_identity(&p) {
                return k;
            }
            p = mat_mul(&p, &self.frobenius);
        }
        panic!("frobenius order exceeds bound");
    }

    /// Half-sum of the absolute positive roots, as a rational covector.
    pub fn rho(&self) -> Vec<Rat> {
        let mut r = vec![rat(0); self.rank];
        for (i, root) in self.roots.iter().enumerate() {
            if self.positive[i] {
                for (c, &x) in r.iter_mut().zip(root) {
                    *c = *c + rat(x) / rat(2);
                }
            }
        }
        r
    }

    /// Half-sum of the positive roots lying in the span of the given
    /// absolute root indices (used for Levi `rho_M`).
    pub fn rho_of_subset(&self, root_indices: &BTreeSet<usize>) -> Vec<Rat> {
        let mut r = vec![rat(0); self.rank];
        for &i in root_indices {
            if self.positive[i] {
                for (c, &x) in r.iter_mut().zip(&self.roots[i]) {
                    *c = *c + rat(x) / rat(2);
                }
            }
        }
        r
    }

    /// Adjoint quotient: cocharacter lattice becomes the coweight lattice of
    /// the absolute root system, coordinates `(⟨alpha_i, x⟩)_i` over the
    /// simple roots. Returns the new datum and the coweight transfer matrix.
    pub fn adjoint_quotient(&self) -> (RootDatumWithFrobenius, Vec<Vec<i64>>) {
        let s = self.simple_roots.len();
        // transfer: x in Z^rank -> (<alpha_i, x>)_i
        let transfer: IntMat = self.simple_roots.clone();
        // simple roots become coordinate functionals, coroots become the
        // columns of the Cartan matrix.
        let new_roots: Vec<Vec<i64>> = (0..s)
            .map(|i| (0..s).map(|j| i64::from(i == j)).collect())
            .collect();
        let new_coroots: Vec<Vec<i64>> = (0..s)
            .map(|j| {
                (0..s)
                    .map(|i| dot_ii(&self.simple_roots[i], &self.simple_coroots[j]))
                    .collect()
            })
            .collect();
        let perm_mat = |g: &IntMat| -> IntMat {
            let perm = self
                .permutation_on_simples(g)
                .expect("validated datum has base-preserving automorphisms");
            // coords(g x)_i = coords(x)_{pi^{-1}(i)} where g a_j = a_{pi(j)}
            let mut m = vec![vec![0i64; s]; s];
            for (j, &pj) in perm.iter().enumerate() {
                m[pj][j] = 1;
            }
            m
        };
        let inertia_gens: Vec<IntMat> = self.inertia_gens.iter().map(perm_mat).collect();
        let frobenius = if s == 0 {
            identity(0)
        } else {
            perm_mat(&self.frobenius)
        };
        let datum = RootDatumWithFrobenius::new(
            s,
            new_roots,
            new_coroots,
            inertia_gens,
            frobenius,
            format!("{}_ad", self.label),
        )
        .expect("adjoint datum of a valid datum is valid");
        (datum, transfer)
    }
}

/// Closure of a set of lattice automorphisms under multiplication.
pub fn close_group(rank: usize, gens: &[IntMat], limit: usize) -> Vec<IntMat> {
    let mut elems: Vec<IntMat> = vec![identity(rank)];
    let mut frontier: Vec<IntMat> = vec![identity(rank)];
    while let Some(e) = frontier.pop() {
        for g in gens {
            let p = mat_mul(g, &e);
            if !elems.contains(&p) {
                if elems.len() >= limit {
                    panic!("group closure exceeds bound {limit}");
                }
                elems.push(p.clone());
                frontier.push(p);
            }
        }
    }
    elems
}

/// Generate the full (root, coroot) system from the simples by reflection
/// closure, and mark positivity.
fn generate_roots(
    rank: usize,
    simple_roots: &[Vec<i64>],
    simple_coroots: &[Vec<i64>],
) -> Result<(Vec<Vec<i64>>, Vec<Vec<i64>>, Vec<bool>), Error> {
    let mut roots: Vec<Vec<i64>> = Vec::new();
    let mut coroots: Vec<Vec<i64>> = Vec::new();
    let mut frontier: Vec<usize> = Vec::new();
    for (a, av) in simple_roots.iter().zip(simple_coroots) {
        if !roots.contains(a) {
            roots.push(a.clone());
            coroots.push(av.clone());
            frontier.push(roots.len() - 1);
        }
    }
    while let Some(idx) = frontier.pop() {
        let (beta, beta_v) = (roots[idx].clone(), coroots[idx].clone());
        for (a, av) in simple_roots.iter().zip(simple_coroots) {
            // s_i(beta) = beta - <beta, a_i^> a_i ; coroot reflects dually
            let c = dot_ii(&beta, av);
            let new_root: Vec<i64> = beta.iter().zip(a).map(|(&b, &x)| b - c * x).collect();
            let c2 = dot_ii(a, &beta_v);
            let new_coroot: Vec<i64> =
                beta_v.iter().zip(av).map(|(&b, &x)| b - c2 * x).collect();
            if !roots.contains(&new_root) {
                roots.push(new_root);
                coroots.push(new_coroot);
                frontier.push(roots.len() - 1);
                if roots.len() > 100_000 {
                    return Err(Error::BadDatum("root generation does not close".into()));
                }
            }
        }
        // also include the negative
        let neg: Vec<i64> = beta.iter().map(|&x| -x).collect();
        if !roots.contains(&neg) {
            let negv: Vec<i64> = beta_v.iter().map(|&x| -x).collect();
            roots.push(neg);
            coroots.push(negv);
            frontier.push(roots.len() - 1);
        }
    }
    // positivity: beta = sum c_i a_i with all c_i >= 0 (rational solve)
    let rows: Vec<Vec<Rat>> = (0..rank)
        .map(|i| simple_roots.iter().map(|a| rat(a[i])).collect())
        .collect();
    let mut positive = Vec::with_capacity(roots.len());
    for beta in &roots {
        let b: Vec<Rat> = beta.iter().map(|&x| rat(x)).collect();
        let sol = crate::rational::solve(&rows, &b)
            .ok_or_else(|| Error::BadDatum("root outside simple-root span".into()))?;
        positive.push(sol.iter().all(|c| *c >= rat(0)));
    }
    let npos = positive.iter().filter(|&&p| p).count();
    if npos * 2 != roots.len() {
        return Err(Error::BadDatum("positive roots are not half of all roots".into()));
    }
    Ok((roots, coroots, positive))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::Preset;

    #[test]
    fn gl3_roots_and_rho() {
        let d = Preset::split_a(2).build().unwrap();
        assert_eq!(d.rank, 3);
        assert_eq!(d.roots.len(), 6);
        assert_eq!(d.rho(), vec![rat(1), rat(0), rat(-1)]);
    }

    #[test]
    fn b2_and_c2_counts() {
        let b2 = Preset::split("B", 2).unwrap().build().unwrap();
        assert_eq!(b2.roots.len(), 8);
        let c2 = Preset::split("C", 2).unwrap().build().unwrap();
        assert_eq!(c2.roots.len(), 8);
        // long/short data differ between B2 and C2
        assert!(b2.roots.contains(&vec![0, 1]));
        assert!(c2.roots.contains(&vec![0, 2]));
    }

    #[test]
    fn adjoint_of_gl2() {
        let d = Preset::split_a(1).build().unwrap();
        let (ad, transfer) = d.adjoint_quotient();
        assert_eq!(ad.rank, 1);
        assert_eq!(ad.simple_coroots, vec![vec![2]]);
        // mu = (1,0) maps to 1 in the coweight lattice of A_1
        assert_eq!(mat_vec(&transfer, &[1, 0]), vec![1]);
        // idempotence: adjoint of adjoint is isomorphic data
        let (ad2, _) = ad.adjoint_quotient();
        assert_eq!(ad2.simple_roots, ad.simple_roots);
        assert_eq!(ad2.simple_coroots, ad.simple_coroots);
    }
}
