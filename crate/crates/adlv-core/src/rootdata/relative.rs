use super::datum::RootDatumWithFrobenius;
use crate::abelian::{invert_unimodular, FgAbGroup};
use crate::error::Error;
use crate::matrix::{mat_mul, mat_vec, mat_vec_rat, transpose, IntMat};
use crate::rational::{self, dot, dot_iq, rat, Rat};
use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::Zero;

/// Word in the simple reflections of the relative Weyl group, applied
/// left-to-right (index 0 acts first).
pub type WeylWord = Vec<usize>;

/// The Galois coinvariants `X_*(T)_I` presented on the ambient lattice,
/// split into free coordinates and normalized torsion coordinates.
#[derive(Debug, Clone)]
pub struct CoinvariantLattice {
    pub group: FgAbGroup,
    pub rank: usize,
    pub free_rank: usize,
    pub torsion_moduli: Vec<i64>,
    free_idx: Vec<usize>,
    tors_idx: Vec<usize>,
    /// free coordinates of an ambient vector: `proj_free * x`
    pub proj_free: IntMat,
    /// integral section of `proj_free` with zero torsion coordinates
    pub section_free: IntMat,
    section_tors: IntMat,
    /// induced Frobenius on free coordinates
    pub sigma_free: IntMat,
    /// the full inertia group as ambient matrices (contains the identity)
    pub inertia_elems: Vec<IntMat>,
}

/// An element of the coinvariant lattice: free part plus normalized torsion.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CoweightClass {
    pub free: Vec<i64>,
    pub torsion: Vec<i64>,
}

impl CoweightClass {
    pub fn zero_like(&self) -> CoweightClass {
        CoweightClass {
            free: vec![0; self.free.len()],
            torsion: vec![0; self.torsion.len()],
        }
    }
}

impl CoinvariantLattice {
    pub fn new(datum: &RootDatumWithFrobenius) -> Result<Self, Error> {
        let n = datum.rank;
        let inertia_elems = datum.inertia_group();
        let mut rels: Vec<Vec<i64>> = Vec::new();
        for g in &inertia_elems {
            for j in 0..n {
                let e: Vec<i64> = (0..n).map(|i| i64::from(i == j)).collect();
                let gx = mat_vec(g, &e);
                let rel: Vec<i64> = e.iter().zip(&gx).map(|(a, b)| a - b).collect();
                if rel.iter().any(|&x| x != 0) {
                    rels.push(rel);
                }
            }
        }
        let group = FgAbGroup::from_relations(n, &rels);
        let free_idx: Vec<usize> = (0..n).filter(|&i| group.moduli[i] == 0).collect();
        let tors_idx: Vec<usize> = (0..n).filter(|&i| group.moduli[i] >= 2).collect();
        let torsion_moduli: Vec<i64> = tors_idx.iter().map(|&i| group.moduli[i]).collect();
        let free_rank = free_idx.len();
        let proj_free: IntMat = free_idx.iter().map(|&i| group.u[i].clone()).collect();
        let col = |j: usize| -> Vec<i64> { (0..n).map(|i| group.u_inv[i][j]).collect() };
        let section_free: IntMat = {
            let cols: Vec<Vec<i64>> = free_idx.iter().map(|&j| col(j)).collect();
            (0..n)
                .map(|i| (0..free_rank).map(|k| cols[k][i]).collect())
                .collect()
        };
        let section_tors: IntMat = {
            let cols: Vec<Vec<i64>> = tors_idx.iter().map(|&j| col(j)).collect();
            (0..n)
                .map(|i| (0..tors_idx.len()).map(|k| cols[k][i]).collect())
                .collect()
        };
        // induced sigma on free coordinates: free block of u * sigma * u_inv
        let m = mat_mul(&mat_mul(&group.u, &datum.frobenius), &group.u_inv);
        let sigma_free: IntMat = free_idx
            .iter()
            .map(|&i| free_idx.iter().map(|&j| m[i][j]).collect())
            .collect();
        // sanity: free rank equals dimension of the inertia-fixed subspace
        let fixed_dim = {
            let rows: Vec<Vec<Rat>> = inertia_elems
                .iter()
                .flat_map(|g| {
                    (0..n).map(move |i| {
                        (0..n)
                            .map(|j| rat(g[i][j]) - rat(i64::from(i == j)))
                            .collect::<Vec<Rat>>()
                    })
                })
                .collect();
            n - rational::rank(&rows)
        };
        if fixed_dim != free_rank {
            return Err(Error::BadDatum(format!(
                "coinvariant free rank {free_rank} != inertia-fixed dimension {fixed_dim}"
            )));
        }
        Ok(CoinvariantLattice {
            group,
            rank: n,
            free_rank,
            torsion_moduli,
            free_idx,
            tors_idx,
            proj_free,
            section_free,
            section_tors,
            sigma_free,
            inertia_elems,
        })
    }

    pub fn project(&self, x: &[i64]) -> CoweightClass {
        let y = self.group.normal_form(x);
        CoweightClass {
            free: self.free_idx.iter().map(|&i| y[i]).collect(),
            torsion: self.tors_idx.iter().map(|&i| y[i]).collect(),
        }
    }

    pub fn zero(&self) -> CoweightClass {
        CoweightClass {
            free: vec![0; self.free_rank],
            torsion: vec![0; self.tors_idx.len()],
        }
    }

    pub fn from_free(&self, free: Vec<i64>) -> CoweightClass {
        debug_assert_eq!(free.len(), self.free_rank);
        CoweightClass {
            free,
            torsion: vec![0; self.tors_idx.len()],
        }
    }

    /// An ambient integral representative of the class.
    pub fn ambient_rep(&self, c: &CoweightClass) -> Vec<i64> {
        let a = mat_vec(&self.section_free, &c.free);
        let b = mat_vec(&self.section_tors, &c.torsion);
        a.iter().zip(&b).map(|(x, y)| x + y).collect()
    }

    pub fn add(&self, a: &CoweightClass, b: &CoweightClass) -> CoweightClass {
        let free = a.free.iter().zip(&b.free).map(|(x, y)| x + y).collect();
        let torsion = a
            .torsion
            .iter()
            .zip(&b.torsion)
            .zip(&self.torsion_moduli)
            .map(|((x, y), &d)| (x + y).rem_euclid(d))
            .collect();
        CoweightClass { free, torsion }
    }

    pub fn neg(&self, a: &CoweightClass) -> CoweightClass {
        let free = a.free.iter().map(|x| -x).collect();
        let torsion = a
            .torsion
            .iter()
            .zip(&self.torsion_moduli)
            .map(|(x, &d)| (-x).rem_euclid(d))
            .collect();
        CoweightClass { free, torsion }
    }

    pub fn sub(&self, a: &CoweightClass, b: &CoweightClass) -> CoweightClass {
        self.add(a, &self.neg(b))
    }

    /// Inertia-average of an integral lift of the free part: a rational
    /// ambient cocharacter, independent of the chosen lift.
    pub fn galois_average_lift(&self, free: &[Rat]) -> Vec<Rat> {
        let lift = mat_vec_rat(&self.section_free, free);
        let k = self.inertia_elems.len() as i64;
        let mut avg = vec![Rat::zero(); self.rank];
        for g in &self.inertia_elems {
            let gx = mat_vec_rat(g, &lift);
            for (a, b) in avg.iter_mut().zip(&gx) {
                *a = *a + b;
            }
        }
        avg.iter().map(|a| *a / rat(k)).collect()
    }

    /// Pair an ambient rational covector with a (rational) free part through
    /// the averaged lift.
    pub fn pair_lifted(&self, covector_abs: &[Rat], free: &[Rat]) -> Rat {
        dot(covector_abs, &self.galois_average_lift(free))
    }

    /// Order of the induced Frobenius on the free coordinates.
    pub fn sigma_order(&self) -> usize {
        let mut p = self.sigma_free.clone();
        for k in 1..=4096 {
            if crate::matrix::mat_eq_identity(&p) {
                return k;
            }
            p = mat_mul(&p, &self.sigma_free);
        }
        panic!("sigma order exceeds bound");
    }

    /// sigma-average of a free vector, as rationals.
    pub fn sigma_average(&self, free: &[Rat]) -> Vec<Rat> {
        let n = self.sigma_order();
        let mut acc = vec![Rat::zero(); free.len()];
        let mut cur: Vec<Rat> = free.to_vec();
        for _ in 0..n {
            for (a, b) in acc.iter_mut().zip(&cur) {
                *a = *a + b;
            }
            cur = mat_vec_rat(&self.sigma_free, &cur);
        }
        acc.iter().map(|a| *a / rat(n as i64)).collect()
    }

    pub fn sigma_average_class(&self, c: &CoweightClass) -> Vec<Rat> {
        self.sigma_average(&rational::to_rat_vec(&c.free))
    }
}

/// One relative (echelonnage) root: an integral covector on the free
/// coinvariant coordinates, its coroot, and the absolute roots restricting
/// to a positive multiple of it.
#[derive(Debug, Clone)]
pub struct RelRoot {
    pub covector: Vec<i64>,
    /// Free coordinates of the relative coroot; `<covector, coroot> = 2`.
    pub coroot: Vec<i64>,
    pub positive: bool,
    /// Indices of absolute roots in the fiber.
    pub fiber: Vec<usize>,
}

/// A relative Weyl group element: matrix on the free coordinates, one
/// reduced word, and its determinant (= `(-1)^length`).
#[derive(Debug, Clone)]
pub struct WeylElem {
    pub mat: IntMat,
    pub word: WeylWord,
    pub det: i64,
}

#[derive(Debug, Clone)]
pub struct RelativeRootSystem {
    pub free_rank: usize,
    pub roots: Vec<RelRoot>,
    /// Indices (into `roots`) of the positive simple relative roots.
    pub simple: Vec<usize>,
    /// All Weyl elements (index 0 is the identity).
    pub weyl: Vec<WeylElem>,
    /// Absolute `rho` as an ambient rational covector.
    pub rho_abs: Vec<Rat>,
    /// Distinct coinvariant classes of absolute simple coroots, indexed
    /// compatibly with `simple`; these are the increments of the integral
    /// dominance order.
    pub dominance_coroots: Vec<CoweightClass>,
    /// Fundamental weights dual to the relative simple coroots, vanishing
    /// on the central subspace; rational covectors on the free coordinates.
    pub fund_weights: Vec<Vec<Rat>>,
    /// Rational basis of the central subspace (kernel of all relative roots).
    pub central_basis: Vec<Vec<i64>>,
    /// Permutation of the simple indices induced by the Frobenius.
    pub sigma_perm_simples: Vec<usize>,
}

impl RelativeRootSystem {
    pub fn new(
        datum: &RootDatumWithFrobenius,
        coinv: &CoinvariantLattice,
    ) -> Result<Self, Error> {
        let k = coinv.free_rank;
        let nroots = datum.roots.len();
        // inertia orbits on absolute roots (acting by inverse transpose)
        let mut orbit_of = vec![usize::MAX; nroots];
        let mut orbits: Vec<Vec<usize>> = Vec::new();
        let inv_t: Vec<IntMat> = coinv
            .inertia_elems
            .iter()
            .map(|g| transpose(&invert_unimodular(g)))
            .collect();
        for start in 0..nroots {
            if orbit_of[start] != usize::MAX {
                continue;
            }
            let mut orb = BTreeSet::new();
            for g in &inv_t {
                let img = mat_vec(g, &datum.roots[start]);
                let idx = datum
                    .roots
                    .iter()
                    .position(|r| *r == img)
                    .ok_or_else(|| Error::BadDatum("inertia does not permute roots".into()))?;
                orb.insert(idx);
            }
            let orb: Vec<usize> = orb.into_iter().collect();
            for &i in &orb {
                orbit_of[i] = orbits.len();
            }
            orbits.push(orb);
        }
        // orbit-sum functionals on free coordinates
        let functional = |orb: &[usize]| -> Vec<i64> {
            (0..k)
                .map(|j| {
                    let col: Vec<i64> = (0..coinv.rank).map(|i| coinv.section_free[i][j]).collect();
                    orb.iter().map(|&r| rational::dot_ii(&datum.roots[r], &col)).sum()
                })
                .collect()
        };
        // group orbits into proportionality lines keyed by the primitive
        // direction; the echelonnage root of a line is the SHORTEST of the
        // orbit-sum functionals occurring on it (type-BC bookkeeping keeps
        // the longer multiples in the fiber only)
        struct Line {
            key: Vec<i64>,
            /// (orbit index, functional content relative to key, sign)
            members: Vec<(usize, i64, i64)>,
        }
        let mut lines: Vec<Line> = Vec::new();
        for (oi, orb) in orbits.iter().enumerate() {
            let f = functional(orb);
            if f.iter().all(|&x| x == 0) {
                return Err(Error::BadDatum("root restricting to zero".into()));
            }
            let g = f.iter().fold(0i64, |acc, &x| num_integer::gcd(acc, x.abs()));
            let mut prim: Vec<i64> = f.iter().map(|&x| x / g).collect();
            let neg = prim.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0);
            let sign = if neg { -1 } else { 1 };
            if neg {
                prim = prim.iter().map(|&x| -x).collect();
            }
            match lines.iter_mut().find(|l| l.key == prim) {
                Some(l) => l.members.push((oi, g, sign)),
                None => lines.push(Line {
                    key: prim,
                    members: vec![(oi, g, sign)],
                }),
            }
        }
        // build the reduced relative system: one root per line and sign
        let mut roots: Vec<RelRoot> = Vec::new();
        for line in &lines {
            let min_content = line.members.iter().map(|&(_, g, _)| g).min().unwrap();
            let covector: Vec<i64> = line.key.iter().map(|&x| x * min_content).collect();
            let fiber_plus: Vec<usize> = line
                .members
                .iter()
                .filter(|&&(_, _, s)| s > 0)
                .flat_map(|&(oi, _, _)| orbits[oi].iter().copied())
                .collect();
            let fiber_minus: Vec<usize> = line
                .members
                .iter()
                .filter(|&&(_, _, s)| s < 0)
                .flat_map(|&(oi, _, _)| orbits[oi].iter().copied())
                .collect();
            let plus_pos = fiber_plus.iter().all(|&r| datum.positive[r]);
            let minus_pos = fiber_minus.iter().all(|&r| datum.positive[r]);
            if !fiber_plus.is_empty() && !fiber_minus.is_empty() && plus_pos == minus_pos {
                return Err(Error::BadDatum(
                    "incoherent positivity along a relative-root fiber".into(),
                ));
            }
            // coroot: a projected fiber coroot (or orbit sum) pairing to 2
            let mut coroot: Option<Vec<i64>> = None;
            'outer: for &(oi, _, sign) in &line.members {
                let mut candidates: Vec<CoweightClass> = orbits[oi]
                    .iter()
                    .map(|&r| coinv.project(&datum.coroots[r]))
                    .collect();
                let mut sum = coinv.zero();
                for c in &candidates {
                    sum = coinv.add(&sum, c);
                }
                candidates.push(sum);
                for c in candidates {
                    let pair: i64 = rational::dot_ii(&covector, &c.free) * sign;
                    if pair == 2 && c.torsion.iter().all(|&t| t == 0) {
                        let v: Vec<i64> = c.free.iter().map(|&x| x * sign).collect();
                        coroot = Some(v);
                        break 'outer;
                    }
                }
            }
            let coroot = coroot.ok_or_else(|| {
                Error::BadDatum("no relative coroot with pairing 2 found".into())
            })?;
            let neg_cov: Vec<i64> = covector.iter().map(|&x| -x).collect();
            let neg_cor: Vec<i64> = coroot.iter().map(|&x| -x).collect();
            if !fiber_plus.is_empty() {
                roots.push(RelRoot {
                    covector: covector.clone(),
                    coroot: coroot.clone(),
                    positive: plus_pos,
                    fiber: fiber_plus,
                });
            }
            if !fiber_minus.is_empty() {
                roots.push(RelRoot {
                    covector: neg_cov,
                    coroot: neg_cor,
                    positive: minus_pos,
                    fiber: fiber_minus,
                });
            }
        }
        // simple relative roots: positive roots whose fiber meets the simples
        let simple_abs: Vec<usize> = datum
            .simple_roots
            .iter()
            .map(|a| datum.roots.iter().position(|r| r == a).unwrap())
            .collect();
        let mut simple: Vec<usize> = Vec::new();
        for (ri, root) in roots.iter().enumerate() {
            if root.positive && root.fiber.iter().any(|r| simple_abs.contains(r)) {
                simple.push(ri);
            }
        }
        // dominance coroots: distinct classes of absolute simple coroots per
        // relative simple; assert free part proportional to the coroot.
        let mut dominance_coroots = Vec::with_capacity(simple.len());
        for &si in &simple {
            let abs = roots[si]
                .fiber
                .iter()
                .copied()
                .find(|r| simple_abs.contains(r))
                .unwrap();
            let class = coinv.project(&datum.coroots[abs]);
            let cov = &roots[si].covector;
            let cor = &roots[si].coroot;
            // class.free must be a positive rational multiple of cor
            let p = rational::dot_ii(cov, &class.free);
            if p <= 0 {
                return Err(Error::BadDatum("simple coroot class pairs nonpositively".into()));
            }
            for (a, b) in class.free.iter().zip(cor) {
                if a * 2 != b * p {
                    return Err(Error::BadDatum(
                        "projected simple coroot not proportional to relative coroot".into(),
                    ));
                }
            }
            dominance_coroots.push(class);
        }
        let rho_abs = datum.rho();
        // Weyl group
        let weyl = generate_weyl(k, &roots, &simple)?;
        // central basis: integer kernel of the simple covectors
        let cov_rows: IntMat = simple.iter().map(|&si| roots[si].covector.clone()).collect();
        let central_basis = if simple.is_empty() {
            crate::matrix::identity(k)
        } else {
            crate::matrix::kernel_basis(&cov_rows)
        };
        // fundamental weights
        let mut fund_weights = Vec::with_capacity(simple.len());
        for (i, _) in simple.iter().enumerate() {
            // unknown covector w: <w, coroot_j> = delta_ij, <w, z> = 0
            let mut rows: Vec<Vec<Rat>> = Vec::new();
            let mut rhs: Vec<Rat> = Vec::new();
            for (j, &sj) in simple.iter().enumerate() {
                rows.push(rational::to_rat_vec(&roots[sj].coroot));
                rhs.push(rat(i64::from(i == j)));
            }
            for z in &central_basis {
                rows.push(rational::to_rat_vec(z));
                rhs.push(rat(0));
            }
            let w = rational::solve(&rows, &rhs)
                .ok_or_else(|| Error::BadDatum("fundamental weight solve failed".into()))?;
            fund_weights.push(w);
        }
        // sigma permutes the simples
        let sigma_inv_t = transpose(&invert_unimodular(&coinv.sigma_free));
        let mut sigma_perm_simples = Vec::with_capacity(simple.len());
        for &si in &simple {
            let img = mat_vec(&sigma_inv_t, &roots[si].covector);
            let pos = simple
                .iter()
                .position(|&sj| roots[sj].covector == img)
                .ok_or_else(|| Error::BadDatum("sigma does not permute relative simples".into()))?;
            sigma_perm_simples.push(pos);
        }
        let rel = RelativeRootSystem {
            free_rank: k,
            roots,
            simple,
            weyl,
            rho_abs,
            dominance_coroots,
            fund_weights,
            central_basis,
            sigma_perm_simples,
        };
        rel.check_reduced()?;
        Ok(rel)
    }

    fn check_reduced(&self) -> Result<(), Error> {
        for (i, a) in self.roots.iter().enumerate() {
            for (j, b) in self.roots.iter().enumerate() {
                if i != j && a.covector == b.covector {
                    return Err(Error::BadDatum("relative system not reduced".into()));
                }
            }
        }
        Ok(())
    }

    pub fn num_simples(&self) -> usize {
        self.simple.len()
    }

    pub fn simple_covector(&self, i: usize) -> &Vec<i64> {
        &self.roots[self.simple[i]].covector
    }

    pub fn simple_coroot(&self, i: usize) -> &Vec<i64> {
        &self.roots[self.simple[i]].coroot
    }

    /// Apply the simple reflection `s_i` to a free vector.
    pub fn apply_simple(&self, i: usize, v: &[i64]) -> Vec<i64> {
        let c = rational::dot_ii(self.simple_covector(i), v);
        v.iter()
            .zip(self.simple_coroot(i))
            .map(|(&x, &y)| x - c * y)
            .collect()
    }

    pub fn apply_simple_rat(&self, i: usize, v: &[Rat]) -> Vec<Rat> {
        let c = dot_iq(self.simple_covector(i), v);
        v.iter()
            .zip(self.simple_coroot(i))
            .map(|(x, &y)| *x - c * rat(y))
            .collect()
    }

    /// Apply a word left-to-right (first letter acts first).
    pub fn apply_word(&self, word: &[usize], v: &[i64]) -> Vec<i64> {
        let mut x = v.to_vec();
        for &i in word {
            x = self.apply_simple(i, &x);
        }
        x
    }

    pub fn apply_word_rat(&self, word: &[usize], v: &[Rat]) -> Vec<Rat> {
        let mut x = v.to_vec();
        for &i in word {
            x = self.apply_simple_rat(i, &x);
        }
        x
    }

    pub fn is_dominant(&self, v: &[i64]) -> bool {
        self.simple
            .iter()
            .all(|&si| rational::dot_ii(&self.roots[si].covector, v) >= 0)
    }

    pub fn is_dominant_rat(&self, v: &[Rat]) -> bool {
        self.simple
            .iter()
            .all(|&si| dot_iq(&self.roots[si].covector, v) >= rat(0))
    }

    /// `(is_dominant, dominant representative, word)` where applying the word
    /// (left-to-right) to `v` gives the dominant representative; the word is
    /// a reduced word for `w_v^{-1}` with `w_v` the shortest Weyl element
    /// such that `w_v^{-1}(v)` is dominant.
    pub fn dominance_data(&self, v: &[i64]) -> (bool, Vec<i64>, WeylWord) {
        let mut x = v.to_vec();
        let mut word = Vec::new();
        loop {
            let mut moved = false;
            for (i, &si) in self.simple.iter().enumerate() {
                if rational::dot_ii(&self.roots[si].covector, &x) < 0 {
                    x = self.apply_simple(i, &x);
                    word.push(i);
                    moved = true;
                    break;
                }
            }
            if !moved {
                break;
            }
        }
        (word.is_empty(), x, word)
    }

    pub fn dominant_rep(&self, v: &[i64]) -> Vec<i64> {
        self.dominance_data(v).1
    }

    pub fn dominant_rep_rat(&self, v: &[Rat]) -> Vec<Rat> {
        let mut x = v.to_vec();
        loop {
            let mut moved = false;
            for (i, &si) in self.simple.iter().enumerate() {
                if dot_iq(&self.roots[si].covector, &x) < rat(0) {
                    x = self.apply_simple_rat(i, &x);
                    moved = true;
                    break;
                }
            }
            if !moved {
                return x;
            }
        }
    }

    /// The antidominant analogue of [`dominance_data`]: word sorting `v`
    /// into the antidominant chamber.
    pub fn antidominance_data(&self, v: &[i64]) -> (bool, Vec<i64>, WeylWord) {
        let mut x = v.to_vec();
        let mut word = Vec::new();
        loop {
            let mut moved = false;
            for (i, &si) in self.simple.iter().enumerate() {
                if rational::dot_ii(&self.roots[si].covector, &x) > 0 {
                    x = self.apply_simple(i, &x);
                    word.push(i);
                    moved = true;
                    break;
                }
            }
            if !moved {
                break;
            }
        }
        (word.is_empty(), x, word)
    }

    /// W-orbit of a free vector.
    pub fn orbit(&self, v: &[i64]) -> Vec<Vec<i64>> {
        let mut out: BTreeSet<Vec<i64>> = BTreeSet::new();
        for w in &self.weyl {
            out.insert(mat_vec(&w.mat, v));
        }
        out.into_iter().collect()
    }

    /// Pairing of a free vector against all positive relative roots;
    /// useful for minuscule checks.
    pub fn is_minuscule(&self, v: &[i64]) -> bool {
        self.roots
            .iter()
            .filter(|r| r.positive)
            .all(|r| rational::dot_ii(&r.covector, v).abs() <= 1)
    }

    /// The index of the longest element in `weyl`.
    pub fn longest_element(&self) -> usize {
        let mut best = 0;
        let mut best_len = 0;
        for (i, w) in self.weyl.iter().enumerate() {
            if w.word.len() > best_len {
                best_len = w.word.len();
                best = i;
            }
        }
        best
    }
}

fn generate_weyl(
    k: usize,
    roots: &[RelRoot],
    simple: &[usize],
) -> Result<Vec<WeylElem>, Error> {
    let id = crate::matrix::identity(k);
    let mut elems: Vec<WeylElem> = vec![WeylElem {
        mat: id,
        word: vec![],
        det: 1,
    }];
    let refl: Vec<IntMat> = simple
        .iter()
        .map(|&si| {
            let cov = &roots[si].covector;
            let cor = &roots[si].coroot;
            (0..k)
                .map(|r| {
                    (0..k)
                        .map(|c| i64::from(r == c) - cor[r] * cov[c])
                        .collect()
                })
                .collect()
        })
        .collect();
    let mut frontier = vec![0usize];
    while let Some(ei) = frontier.pop() {
        let (mat, word) = (elems[ei].mat.clone(), elems[ei].word.clone());
        for (i, r) in refl.iter().enumerate() {
            // left-to-right word semantics: appending i applies s_i after w
            let m = mat_mul(r, &mat);
            if !elems.iter().any(|e| e.mat == m) {
                if elems.len() > 100_000 {
                    return Err(Error::BadDatum("relative Weyl group does not close".into()));
                }
                let mut w2 = word.clone();
                w2.push(i);
                let det = -elems[ei].det;
                elems.push(WeylElem { mat: m, word: w2, det });
                frontier.push(elems.len() - 1);
            }
        }
    }
    Ok(elems)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{GroupData, Preset};
    use rational::ratio;

    fn gd(p: Preset) -> GroupData {
        GroupData::from_preset(&p).unwrap()
    }

    #[test]
    fn split_gl3_coinvariants_trivial() {
        let g = gd(Preset::gl(3));
        assert_eq!(g.coinv.free_rank, 3);
        assert!(g.coinv.torsion_moduli.is_empty());
        let c = g.coinv.project(&[1, 2, 3]);
        assert_eq!(g.coinv.ambient_rep(&c), vec![1, 2, 3]);
        // relative = absolute for split groups
        assert_eq!(g.rel.roots.len(), 6);
        assert_eq!(g.rel.num_simples(), 2);
        assert_eq!(g.rel.weyl.len(), 6);
    }

    #[test]
    fn ramified_res_gl2_coinvariants() {
        // (a,b,c,d) -> (a+c, b+d), coinvariants = Z^2 torsion-free
        let g = gd(Preset::res_gl(2, 1, 2));
        assert_eq!(g.coinv.free_rank, 2);
        assert!(g.coinv.torsion_moduli.is_empty());
        let c1 = g.coinv.project(&[1, 0, 0, 0]);
        let c2 = g.coinv.project(&[0, 0, 1, 0]);
        assert_eq!(c1, c2);
        // relative system is A_1 with an order-2 fiber
        assert_eq!(g.rel.roots.len(), 2);
        assert_eq!(g.rel.num_simples(), 1);
        let s = &g.rel.roots[g.rel.simple[0]];
        assert_eq!(s.fiber.len(), 2);
        // integral pairing: <phi, coroot> = 2
        assert_eq!(rational::dot_ii(&s.covector, &s.coroot), 2);
    }

    #[test]
    fn ramified_unitary3_torsion() {
        let g = gd(Preset::unitary(3, true));
        assert_eq!(g.coinv.free_rank, 1);
        assert_eq!(g.coinv.torsion_moduli, vec![2]);
        // one relative simple root; BC-type fiber of size 3
        assert_eq!(g.rel.num_simples(), 1);
        let s = &g.rel.roots[g.rel.simple[0]];
        assert_eq!(s.fiber.len(), 3);
        assert_eq!(rational::dot_ii(&s.covector, &s.coroot), 2);
    }

    #[test]
    fn galois_average_lift_section_property() {
        let g = gd(Preset::res_gl(2, 1, 2));
        // (1,0) in Z^2 lifts to ((1/2,0),(1/2,0))
        let lift = g.coinv.galois_average_lift(&[rat(1), rat(0)]);
        assert_eq!(lift, vec![ratio(1, 2), rat(0), ratio(1, 2), rat(0)]);
        // projecting back recovers the free part
        for test in [[1i64, 0], [3, -2], [0, 5]] {
            let lift = g.coinv.galois_average_lift(&rational::to_rat_vec(&test));
            // clear denominators: 2*lift is integral and projects to 2*test
            let doubled: Vec<i64> = lift
                .iter()
                .map(|x| {
                    let y = *x * rat(2);
                    assert!(y.is_integer());
                    y.to_integer()
                })
                .collect();
            let c = g.coinv.project(&doubled);
            assert_eq!(c.free, test.iter().map(|&x| 2 * x).collect::<Vec<_>>());
        }
    }

    #[test]
    fn pair_rho_examples() {
        let gl3 = gd(Preset::gl(3));
        let p = gl3.coinv.pair_lifted(&gl3.rel.rho_abs, &[rat(1), rat(0), rat(0)]);
        assert_eq!(p, rat(1));
        let gl2 = gd(Preset::gl(2));
        assert_eq!(
            gl2.coinv.pair_lifted(&gl2.rel.rho_abs, &[rat(1), rat(1)]),
            rat(0)
        );
        assert_eq!(
            gl2.coinv
                .pair_lifted(&gl2.rel.rho_abs, &[ratio(1, 2), ratio(-1, 2)]),
            ratio(1, 2)
        );
    }

    #[test]
    fn dominance_data_examples() {
        let gl3 = gd(Preset::gl(3));
        let (dom, rep, word) = gl3.rel.dominance_data(&[0, 1, 0]);
        assert!(!dom);
        assert_eq!(rep, vec![1, 0, 0]);
        assert_eq!(word, vec![0]); // single simple swap
        let (dom2, rep2, word2) = gl3.rel.dominance_data(&[2, 1, 0]);
        assert!(dom2);
        assert_eq!(rep2, vec![2, 1, 0]);
        assert!(word2.is_empty());
        let gl2 = gd(Preset::gl(2));
        let (d3, r3, w3) = gl2.rel.dominance_data(&[0, 1]);
        assert!(!d3 && r3 == vec![1, 0] && w3.len() == 1);
    }

    #[test]
    fn weyl_orbit_sizes_divide_group_order() {
        let g = gd(Preset::gl(3));
        for v in [[1i64, 0, 0], [1, 1, 0], [2, 1, 0], [1, 1, 1]] {
            let orbit = g.rel.orbit(&v);
            assert_eq!(g.rel.weyl.len() % orbit.len(), 0);
            // dominant representative is the unique dominant element
            let doms: Vec<_> = orbit.iter().filter(|x| g.rel.is_dominant(x)).collect();
            assert_eq!(doms.len(), 1);
        }
    }

    #[test]
    fn unramified_unitary_relative_is_absolute() {
        let g = gd(Preset::unitary(3, false));
        assert_eq!(g.rel.roots.len(), 6);
        assert_eq!(g.rel.num_simples(), 2);
        // sigma swaps the two simples
        assert_eq!(g.rel.sigma_perm_simples, vec![1, 0]);
    }
}
