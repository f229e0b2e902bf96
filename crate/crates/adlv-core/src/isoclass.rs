//! Sigma-conjugacy classes and their invariants: Newton point, Kottwitz
//! point, best integral approximation `lambda(b)`, defect, the Mazur
//! nonemptiness criterion and the ranked poset `B(G, mu)`.

use crate::error::Error;
use crate::matrix::{mat_eq_identity, mat_mul, mat_vec_rat, IntMat};
use crate::rational::{self, dot_iq, rat, Rat};
use crate::rootdata::{close_group, CoweightClass, GroupData, WeylWord};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::Zero;

/// A representative `b = pi^{lambda_b} w_b` of a sigma-conjugacy class,
/// with `w_b` in the Weyl group of the Levi `M` given by a subset of the
/// relative simple roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardRep {
    pub lambda_b: CoweightClass,
    pub w_b: WeylWord,
    /// Relative simple indices cutting out the intended Levi.
    pub levi: Vec<usize>,
}

/// A sigma-conjugacy class, carried by its two classifying invariants and a
/// standard representative witness.
#[derive(Debug, Clone)]
pub struct SigmaConjClass {
    /// Dominant rational Newton point (free coinvariant coordinates).
    pub newton: Vec<Rat>,
    /// Kottwitz point: normal form in `pi_1(G)_Gamma`.
    pub kottwitz: Vec<i64>,
    pub witness: StandardRep,
    /// `rank_F(G) - rank_F(J_b)`, computed from the witness.
    pub defect: i64,
}

/// Rounding convention for `lambda(b)`.
///
/// `Up` places `<omega, lambda - nu>` in `[0, 1)` for every relative
/// fundamental weight; `DownOpen` places it in `(-1, 0]`. `Up` is the
/// convention that satisfies `<rho, lambda(b) - nu> = defect/2` on all
/// presets; `DownOpen` is kept switchable for comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rounding {
    Up,
    DownOpen,
}

/// The matrix of the twisted operator `w_b . sigma` on the free
/// coinvariant coordinates.
pub fn twisted_operator(g: &GroupData, rep: &StandardRep) -> IntMat {
    let mut m = g.coinv.sigma_free.clone();
    // word acts left-to-right after sigma
    for &i in &rep.w_b {
        let refl = reflection_matrix(g, i);
        m = mat_mul(&refl, &m);
    }
    m
}

pub fn reflection_matrix(g: &GroupData, simple_idx: usize) -> IntMat {
    let k = g.coinv.free_rank;
    let cov = g.rel.simple_covector(simple_idx);
    let cor = g.rel.simple_coroot(simple_idx);
    (0..k)
        .map(|r| {
            (0..k)
                .map(|c| i64::from(r == c) - cor[r] * cov[c])
                .collect()
        })
        .collect()
}

fn operator_order(m: &IntMat) -> usize {
    let mut p = m.clone();
    for k in 1..=100_000 {
        if mat_eq_identity(&p) {
            return k;
        }
        p = mat_mul(&p, m);
    }
    panic!("twisted operator order exceeds bound")
}

/// Newton point: dominant representative of the average drift of the affine
/// operator `x -> lambda_b + w_b(sigma(x))` over one period.
pub fn newton_point(g: &GroupData, rep: &StandardRep) -> Vec<Rat> {
    let m = twisted_operator(g, rep);
    let n = operator_order(&m);
    let lam = rational::to_rat_vec(&rep.lambda_b.free);
    let mut acc = vec![Rat::zero(); lam.len()];
    let mut cur = lam;
    for _ in 0..n {
        for (a, b) in acc.iter_mut().zip(&cur) {
            *a = *a + b;
        }
        cur = mat_vec_rat(&m, &cur);
    }
    let avg: Vec<Rat> = acc.iter().map(|a| *a / rat(n as i64)).collect();
    g.rel.dominant_rep_rat(&avg)
}

pub fn fixed_space_dim(m: &IntMat) -> usize {
    let k = m.len();
    let rows: Vec<Vec<Rat>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| rat(m[i][j]) - rat(i64::from(i == j)))
                .collect()
        })
        .collect();
    k - rational::rank(&rows)
}

/// `defect(b) = rank_F(G) - rank_F(J_b)`: the difference of the fixed-space
/// dimensions of `sigma` and `w_b sigma` on the free coinvariants. Valid on
/// standard representatives.
pub fn defect(g: &GroupData, rep: &StandardRep) -> i64 {
    let sigma_fix = fixed_space_dim(&g.coinv.sigma_free);
    let twisted_fix = fixed_space_dim(&twisted_operator(g, rep));
    sigma_fix as i64 - twisted_fix as i64
}

/// Superbasic test: the twisted fixed space is no bigger than the
/// sigma-fixed part of the center, so no proper Levi can contain the class.
pub fn is_superbasic(g: &GroupData, rep: &StandardRep) -> bool {
    let m = twisted_operator(g, rep);
    fixed_space_dim(&m) == central_sigma_fixed_dim(g)
}

/// Dimension of the sigma-fixed part of the central subspace.
pub fn central_sigma_fixed_dim(g: &GroupData) -> usize {
    let k = g.coinv.free_rank;
    let cb = &g.rel.central_basis;
    if cb.is_empty() {
        return 0;
    }
    let rows: Vec<Vec<Rat>> = (0..k)
        .map(|i| {
            cb.iter()
                .map(|z| {
                    let sz = crate::matrix::mat_vec(&g.coinv.sigma_free, z);
                    rat(sz[i] - z[i])
                })
                .collect()
        })
        .collect();
    cb.len() - rational::rank(&rows)
}

/// `a <= b` in the integral dominance order: `b - a` is a nonnegative
/// integral combination of the projected simple coroot classes, torsion
/// included.
pub fn leq_integral(g: &GroupData, a: &CoweightClass, b: &CoweightClass) -> bool {
    let s = g.rel.num_simples();
    if s == 0 {
        return a == b;
    }
    let diff_free: Vec<Rat> = b
        .free
        .iter()
        .zip(&a.free)
        .map(|(x, y)| rat(x - y))
        .collect();
    let rows: Vec<Vec<Rat>> = (0..g.coinv.free_rank)
        .map(|i| {
            g.rel
                .dominance_coroots
                .iter()
                .map(|c| rat(c.free[i]))
                .collect()
        })
        .collect();
    let Some(coeffs) = rational::solve(&rows, &diff_free) else {
        return false;
    };
    let mut c_int = Vec::with_capacity(s);
    for c in &coeffs {
        if !c.is_integer() || *c < rat(0) {
            return false;
        }
        c_int.push(c.to_integer());
    }
    // torsion: a + sum c_i drc_i == b
    let mut acc = a.clone();
    for (ci, drc) in c_int.iter().zip(&g.rel.dominance_coroots) {
        for _ in 0..*ci {
            acc = g.coinv.add(&acc, drc);
        }
    }
    acc.torsion == b.torsion
}

/// `a <= b` for rational vectors: `b - a` is a nonnegative rational
/// combination of the relative simple coroots.
pub fn leq_rational(g: &GroupData, a: &[Rat], b: &[Rat]) -> bool {
    let s = g.rel.num_simples();
    let diff: Vec<Rat> = b.iter().zip(a).map(|(x, y)| *x - *y).collect();
    if s == 0 {
        return diff.iter().all(|d| d.is_zero());
    }
    let rows: Vec<Vec<Rat>> = (0..g.coinv.free_rank)
        .map(|i| {
            g.rel
                .simple
                .iter()
                .map(|&si| rat(g.rel.roots[si].coroot[i]))
                .collect()
        })
        .collect();
    match rational::solve(&rows, &diff) {
        Some(c) => {
            // solve() picks one solution; verify it reproduces diff and is
            // nonnegative (coroots are independent so it is unique)
            let mut recon = vec![Rat::zero(); diff.len()];
            for (ci, &si) in c.iter().zip(&g.rel.simple) {
                for (r, &x) in recon.iter_mut().zip(&g.rel.roots[si].coroot) {
                    *r = *r + *ci * rat(x);
                }
            }
            recon == diff && c.iter().all(|x| *x >= rat(0))
        }
        None => false,
    }
}

/// sigma-average of a dominant integral class (its restriction to the
/// maximal `F`-split torus), a dominant rational vector.
pub fn sigma_average_dominant(g: &GroupData, mu: &CoweightClass) -> Vec<Rat> {
    g.coinv.sigma_average_class(mu)
}

/// Mazur inequality: nonemptiness criterion for `X_mu(b)`.
pub fn mazur_nonempty(g: &GroupData, mu: &CoweightClass, cls: &SigmaConjClass) -> bool {
    let mu_avg = sigma_average_dominant(g, mu);
    leq_rational(g, &cls.newton, &mu_avg) && cls.kottwitz == g.kottwitz_gamma(mu)
}

/// All dominant classes `x` with `x <= mu` (integral dominance order).
pub fn dominants_below(g: &GroupData, mu: &CoweightClass) -> Vec<CoweightClass> {
    let s = g.rel.num_simples();
    if s == 0 {
        return vec![mu.clone()];
    }
    let mut bounds = Vec::with_capacity(s);
    for j in 0..s {
        let omega = &g.rel.fund_weights[j];
        let top = dot_iq(&mu.free, omega);
        let step = dot_iq(&g.rel.dominance_coroots[j].free, omega);
        debug_assert!(step > rat(0));
        let b = (top / step).floor().to_integer();
        bounds.push(if b < 0 { 0 } else { b });
    }
    let mut out = Vec::new();
    let mut c = vec![0i64; s];
    loop {
        let mut x = mu.clone();
        for (j, &cj) in c.iter().enumerate() {
            for _ in 0..cj {
                x = g.coinv.sub(&x, &g.rel.dominance_coroots[j]);
            }
        }
        if g.rel.is_dominant(&x.free) {
            out.push(x);
        }
        // odometer
        let mut j = 0;
        loop {
            if j == s {
                return out;
            }
            c[j] += 1;
            if c[j] <= bounds[j] {
                break;
            }
            c[j] = 0;
            j += 1;
        }
    }
}

/// `lambda(b)`: the integral dominant class best approximating the Newton
/// point in fundamental-weight coordinates, kappa-corrected on the center.
/// The lexicographically least witness of the (unique) Gamma-class is
/// returned; errors if no kappa-compatible integral solution exists.
pub fn lambda_b(
    g: &GroupData,
    cls: &SigmaConjClass,
    rounding: Rounding,
) -> Result<CoweightClass, Error> {
    let k = g.coinv.free_rank;
    let nu = &cls.newton;
    let lo: Vec<i64> = nu.iter().map(|x| rational::floor(*x) - 2).collect();
    let hi: Vec<i64> = nu.iter().map(|x| rational::ceil(*x) + 2).collect();
    let tors_moduli = &g.coinv.torsion_moduli;
    let mut found: Vec<CoweightClass> = Vec::new();
    let mut free = lo.clone();
    loop {
        if g.rel.is_dominant(&free) {
            let ok_fund = g.rel.fund_weights.iter().all(|omega| {
                let d = dot_iq(&free, omega) - rational::dot(omega, nu);
                match rounding {
                    Rounding::Up => d >= rat(0) && d < rat(1),
                    Rounding::DownOpen => d > rat(-1) && d <= rat(0),
                }
            });
            if ok_fund {
                let mut tors = vec![0i64; tors_moduli.len()];
                loop {
                    let cand = CoweightClass {
                        free: free.clone(),
                        torsion: tors.clone(),
                    };
                    if g.kottwitz_gamma(&cand) == cls.kottwitz {
                        found.push(cand);
                    }
                    let mut j = 0;
                    loop {
                        if j == tors_moduli.len() {
                            break;
                        }
                        tors[j] += 1;
                        if tors[j] < tors_moduli[j] {
                            break;
                        }
                        tors[j] = 0;
                        j += 1;
                    }
                    if tors.iter().all(|&t| t == 0) {
                        break;
                    }
                }
            }
        }
        // odometer over the free box
        if k == 0 {
            break;
        }
        let mut j = 0;
        loop {
            if j == k {
                found.sort();
                return found.into_iter().next().ok_or_else(|| {
                    Error::BadInput(format!(
                        "no kappa-compatible lambda(b) for nu = {:?}",
                        cls.newton
                    ))
                });
            }
            free[j] += 1;
            if free[j] <= hi[j] {
                break;
            }
            free[j] = lo[j];
            j += 1;
        }
    }
    found.sort();
    found.into_iter().next().ok_or_else(|| {
        Error::BadInput(format!("no kappa-compatible lambda(b) for nu = {:?}", cls.newton))
    })
}

/// The poset `B(G, mu)`.
#[derive(Debug, Clone)]
pub struct BGmuPoset {
    pub mu: CoweightClass,
    pub classes: Vec<SigmaConjClass>,
    /// `leq[i][j]` iff class i <= class j.
    pub leq: Vec<Vec<bool>>,
    /// Index of the maximal class `[pi^mu]`.
    pub max_idx: usize,
    /// Index of the basic (minimal) class.
    pub min_idx: usize,
    /// Longest-chain length to the maximal class, per class.
    pub codim: Vec<i64>,
}

/// Brute-force enumeration of `B(G, mu)` over candidates
/// `b = pi^lambda w` with `lambda_dom <= mu` and `w` in the relative Weyl
/// group, filtered by the Mazur inequality and deduplicated by `(nu, kappa)`.
pub fn enumerate_bg_mu(g: &GroupData, mu: &CoweightClass) -> Result<BGmuPoset, Error> {
    if !g.rel.is_dominant(&mu.free) {
        return Err(Error::BadInput("mu must be dominant".into()));
    }
    if g.coinv.free_rank > 8 {
        return Err(Error::BadInput("free rank too large for brute force".into()));
    }
    let kappa_mu = g.kottwitz_gamma(mu);
    let mu_avg = sigma_average_dominant(g, mu);
    let doms = dominants_below(g, mu);
    struct Cand {
        nu: Vec<Rat>,
        lambda: CoweightClass,
        word: WeylWord,
    }
    let mut cands: Vec<Cand> = Vec::new();
    for d in &doms {
        for lam_free in g.rel.orbit(&d.free) {
            let lam = CoweightClass {
                free: lam_free,
                torsion: d.torsion.clone(),
            };
            if g.kottwitz_gamma(&lam) != kappa_mu {
                continue;
            }
            for w in &g.rel.weyl {
                let rep = StandardRep {
                    lambda_b: lam.clone(),
                    w_b: w.word.clone(),
                    levi: (0..g.rel.num_simples()).collect(),
                };
                let nu = newton_point(g, &rep);
                if leq_rational(g, &nu, &mu_avg) {
                    cands.push(Cand {
                        nu,
                        lambda: lam.clone(),
                        word: w.word.clone(),
                    });
                }
            }
        }
    }
    let mut newtons: Vec<Vec<Rat>> = Vec::new();
    for c in &cands {
        if !newtons.contains(&c.nu) {
            newtons.push(c.nu.clone());
        }
    }
    newtons.sort();
    let mut classes = Vec::with_capacity(newtons.len());
    for nu in &newtons {
        // centralizer Levi of nu
        let m_levi: Vec<usize> = (0..g.rel.num_simples())
            .filter(|&i| dot_iq(g.rel.simple_covector(i), nu).is_zero())
            .collect();
        let wm = levi_weyl_mats(g, &m_levi);
        // standard witness: w in W_M maximizing the twisted fixed space
        let mut best: Option<(usize, StandardRep)> = None;
        for c in cands.iter().filter(|c| &c.nu == nu) {
            let wmat = word_matrix(g, &c.word);
            if !wm.contains(&wmat) {
                continue;
            }
            let rep = StandardRep {
                lambda_b: c.lambda.clone(),
                w_b: c.word.clone(),
                levi: m_levi.clone(),
            };
            let fix = fixed_space_dim(&twisted_operator(g, &rep));
            if best.as_ref().is_none_or(|(bf, _)| fix > *bf) {
                best = Some((fix, rep));
            }
        }
        let (_, witness) = best.ok_or_else(|| {
            Error::OracleMismatch(format!(
                "no standard witness with w in W_M found for nu = {nu:?}"
            ))
        })?;
        let dft = defect(g, &witness);
        classes.push(SigmaConjClass {
            newton: nu.clone(),
            kottwitz: kappa_mu.clone(),
            witness,
            defect: dft,
        });
    }
    let n = classes.len();
    if n == 0 {
        return Err(Error::OracleMismatch("B(G, mu) came out empty".into()));
    }
    let mut leq = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            leq[i][j] = leq_rational(g, &classes[i].newton, &classes[j].newton);
        }
    }
    let max_idx = (0..n)
        .find(|&j| (0..n).all(|i| leq[i][j]))
        .ok_or_else(|| Error::OracleMismatch("no maximal element in B(G, mu)".into()))?;
    let min_idx = (0..n)
        .find(|&i| (0..n).all(|j| leq[i][j]))
        .ok_or_else(|| Error::OracleMismatch("no minimal element in B(G, mu)".into()))?;
    if classes[max_idx].newton != mu_avg {
        return Err(Error::OracleMismatch(
            "maximal element of B(G, mu) is not [pi^mu]".into(),
        ));
    }
    let mut codim = vec![0i64; n];
    for (i, c) in codim.iter_mut().enumerate() {
        *c = chain_length_by(&leq, i, max_idx).unwrap_or(0);
    }
    Ok(BGmuPoset {
        mu: mu.clone(),
        classes,
        leq,
        max_idx,
        min_idx,
        codim,
    })
}

/// All Weyl matrices of the standard Levi generated by the given simple
/// indices.
pub fn levi_weyl_mats(g: &GroupData, levi: &[usize]) -> Vec<IntMat> {
    let k = g.coinv.free_rank;
    let gens: Vec<IntMat> = levi.iter().map(|&i| reflection_matrix(g, i)).collect();
    close_group(k, &gens, 100_000)
}

pub fn word_matrix(g: &GroupData, word: &WeylWord) -> IntMat {
    let mut m = crate::matrix::identity(g.coinv.free_rank);
    for &i in word {
        m = mat_mul(&reflection_matrix(g, i), &m);
    }
    m
}

/// Longest chain length from `a` up to `b`, or None if `a <= b` fails.
pub fn chain_length_by(leq: &[Vec<bool>], a: usize, b: usize) -> Option<i64> {
    if !leq[a][b] {
        return None;
    }
    if a == b {
        return Some(0);
    }
    let n = leq.len();
    let mut memo = vec![None::<i64>; n];
    fn go(leq: &[Vec<bool>], memo: &mut Vec<Option<i64>>, x: usize, b: usize) -> i64 {
        if x == b {
            return 0;
        }
        if let Some(v) = memo[x] {
            return v;
        }
        let n = leq.len();
        let mut best = i64::MIN;
        for y in 0..n {
            if y != x && leq[x][y] && leq[y][b] && !leq[y][x] {
                let v = go(leq, memo, y, b);
                if v != i64::MIN {
                    best = best.max(1 + v);
                }
            }
        }
        memo[x] = Some(best);
        best
    }
    let v = go(leq, &mut memo, a, b);
    Some(if v == i64::MIN { 0 } else { v })
}

/// Longest chain length between two classes of a poset.
pub fn chain_length(poset: &BGmuPoset, a: usize, b: usize) -> Result<i64, Error> {
    chain_length_by(&poset.leq, a, b)
        .ok_or_else(|| Error::BadInput("incomparable classes".into()))
}

/// Meet/join saturation report: pairs of classes whose sets of common
/// lower/upper bounds fail to have a unique extreme element.
pub fn poset_lattice_gaps(poset: &BGmuPoset) -> Vec<(usize, usize)> {
    let n = poset.classes.len();
    let mut gaps = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let lower: Vec<usize> = (0..n)
                .filter(|&x| poset.leq[x][i] && poset.leq[x][j])
                .collect();
            let upper: Vec<usize> = (0..n)
                .filter(|&x| poset.leq[i][x] && poset.leq[j][x])
                .collect();
            let meet_ok = lower
                .iter()
                .any(|&m| lower.iter().all(|&x| poset.leq[x][m]));
            let join_ok = upper
                .iter()
                .any(|&m| upper.iter().all(|&x| poset.leq[m][x]));
            if !meet_ok || !join_ok {
                gaps.push((i, j));
            }
        }
    }
    gaps
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;
    use crate::rootdata::Preset;

    fn gd(p: Preset) -> GroupData {
        GroupData::from_preset(&p).unwrap()
    }

    fn cls_of(poset: &BGmuPoset, nu: &[Rat]) -> usize {
        poset
            .classes
            .iter()
            .position(|c| c.newton == nu)
            .expect("class with given newton point")
    }

    #[test]
    fn newton_examples() {
        let gl2 = gd(Preset::gl(2));
        let rep = StandardRep {
            lambda_b: gl2.coinv.from_free(vec![1, 0]),
            w_b: vec![0],
            levi: vec![0],
        };
        assert_eq!(newton_point(&gl2, &rep), vec![ratio(1, 2), ratio(1, 2)]);
        assert_eq!(defect(&gl2, &rep), 1);
        assert!(is_superbasic(&gl2, &rep));

        // dominant translation with trivial finite part is its own Newton point
        let rep2 = StandardRep {
            lambda_b: gl2.coinv.from_free(vec![2, 0]),
            w_b: vec![],
            levi: vec![],
        };
        assert_eq!(newton_point(&gl2, &rep2), vec![rat(2), rat(0)]);
        assert_eq!(defect(&gl2, &rep2), 0);

        let gl3 = gd(Preset::gl(3));
        let rep3 = StandardRep {
            lambda_b: gl3.coinv.from_free(vec![1, 0, 0]),
            w_b: vec![0, 1], // a 3-cycle
            levi: vec![0, 1],
        };
        assert_eq!(
            newton_point(&gl3, &rep3),
            vec![ratio(1, 3), ratio(1, 3), ratio(1, 3)]
        );
        assert_eq!(defect(&gl3, &rep3), 2);
        assert!(is_superbasic(&gl3, &rep3));
    }

    #[test]
    fn leq_examples() {
        let gl2 = gd(Preset::gl(2));
        let a = gl2.coinv.from_free(vec![1, 1]);
        let b = gl2.coinv.from_free(vec![2, 0]);
        assert!(leq_integral(&gl2, &a, &b));
        assert!(leq_integral(&gl2, &a, &a));
        assert!(!leq_integral(&gl2, &b, &a));
        assert!(leq_rational(
            &gl2,
            &[ratio(1, 2), ratio(1, 2)],
            &[rat(1), rat(0)]
        ));
        assert!(!leq_rational(
            &gl2,
            &[rat(2), rat(-1)],
            &[rat(1), rat(0)]
        ));
    }

    #[test]
    fn lambda_b_examples() {
        let gl2 = gd(Preset::gl(2));
        let poset = enumerate_bg_mu(&gl2, &gl2.coinv.from_free(vec![1, 0])).unwrap();
        let basic = &poset.classes[poset.min_idx];
        assert_eq!(basic.newton, vec![ratio(1, 2), ratio(1, 2)]);
        let lam = lambda_b(&gl2, basic, Rounding::Up).unwrap();
        assert_eq!(lam.free, vec![1, 0]);

        // integral newton point: lambda = nu
        let top = &poset.classes[poset.max_idx];
        let lam_top = lambda_b(&gl2, top, Rounding::Up).unwrap();
        assert_eq!(lam_top.free, vec![1, 0]);

        let gl3 = gd(Preset::gl(3));
        let poset3 = enumerate_bg_mu(&gl3, &gl3.coinv.from_free(vec![1, 1, 0])).unwrap();
        let basic3 = &poset3.classes[poset3.min_idx];
        assert_eq!(basic3.newton, vec![ratio(2, 3), ratio(2, 3), ratio(2, 3)]);
        let lam3 = lambda_b(&gl3, basic3, Rounding::Up).unwrap();
        assert_eq!(lam3.free, vec![1, 1, 0]);
    }

    #[test]
    fn bg_mu_gl2_examples() {
        let gl2 = gd(Preset::gl(2));
        let poset = enumerate_bg_mu(&gl2, &gl2.coinv.from_free(vec![1, 0])).unwrap();
        assert_eq!(poset.classes.len(), 2);
        let basic = cls_of(&poset, &[ratio(1, 2), ratio(1, 2)]);
        let top = cls_of(&poset, &[rat(1), rat(0)]);
        assert_eq!(chain_length(&poset, basic, top).unwrap(), 1);
        assert_eq!(chain_length(&poset, basic, basic).unwrap(), 0);

        let poset2 = enumerate_bg_mu(&gl2, &gl2.coinv.from_free(vec![2, 0])).unwrap();
        // (3/2, 1/2) is not realized by integral candidates
        assert_eq!(poset2.classes.len(), 2);
        let nus: Vec<_> = poset2.classes.iter().map(|c| c.newton.clone()).collect();
        assert!(nus.contains(&vec![rat(1), rat(1)]));
        assert!(nus.contains(&vec![rat(2), rat(0)]));
    }

    #[test]
    fn bg_mu_gl3_examples() {
        let gl3 = gd(Preset::gl(3));
        let poset = enumerate_bg_mu(&gl3, &gl3.coinv.from_free(vec![1, 1, 0])).unwrap();
        assert_eq!(poset.classes.len(), 3);
        let basic = cls_of(&poset, &[ratio(2, 3), ratio(2, 3), ratio(2, 3)]);
        let mid = cls_of(&poset, &[rat(1), ratio(1, 2), ratio(1, 2)]);
        let top = cls_of(&poset, &[rat(1), rat(1), rat(0)]);
        assert_eq!(chain_length(&poset, basic, top).unwrap(), 2);
        assert_eq!(chain_length(&poset, basic, mid).unwrap(), 1);
        assert_eq!(poset.min_idx, basic);
        assert_eq!(poset.max_idx, top);
        assert!(poset_lattice_gaps(&poset).is_empty());
    }

    #[test]
    fn mazur_examples() {
        let gl2 = gd(Preset::gl(2));
        let mu = gl2.coinv.from_free(vec![1, 0]);
        let poset = enumerate_bg_mu(&gl2, &mu).unwrap();
        let basic = &poset.classes[poset.min_idx];
        assert!(mazur_nonempty(&gl2, &mu, basic));
        // equality case [pi^mu]
        let top = &poset.classes[poset.max_idx];
        assert!(mazur_nonempty(&gl2, &mu, top));
        // a class with nu = (2,-1) fails dominance comparison
        let rep = StandardRep {
            lambda_b: gl2.coinv.from_free(vec![2, -1]),
            w_b: vec![],
            levi: vec![],
        };
        let cls = SigmaConjClass {
            newton: newton_point(&gl2, &rep),
            kottwitz: gl2.kottwitz_gamma(&gl2.coinv.from_free(vec![2, -1])),
            defect: defect(&gl2, &rep),
            witness: rep,
        };
        assert!(!mazur_nonempty(&gl2, &mu, &cls));
    }

    #[test]
    fn rho_lambda_nu_defect_identity() {
        // <rho, lambda(b) - nu> = defect/2 across enumerated classes (Up).
        for (p, mu_free) in [
            (Preset::gl(2), vec![2i64, 0]),
            (Preset::gl(3), vec![1, 1, 0]),
            (Preset::res_gl(2, 1, 2), vec![2, 0]),
        ] {
            let g = gd(p);
            let mu = g.coinv.from_free(mu_free);
            let poset = enumerate_bg_mu(&g, &mu).unwrap();
            for cls in &poset.classes {
                let lam = lambda_b(&g, cls, Rounding::Up).unwrap();
                let lhs = g.pair_rho(&lam) - g.pair_rho_rat(&cls.newton);
                assert_eq!(lhs * rat(2), rat(cls.defect), "identity failed");
            }
        }
        // the (-1,0] convention breaks the identity on the GL_2 superbasic class
        let gl2 = gd(Preset::gl(2));
        let poset = enumerate_bg_mu(&gl2, &gl2.coinv.from_free(vec![1, 0])).unwrap();
        let basic = &poset.classes[poset.min_idx];
        match lambda_b(&gl2, basic, Rounding::DownOpen) {
            Err(_) => {}
            Ok(lam) => {
                let lhs = gl2.pair_rho(&lam) - gl2.pair_rho_rat(&basic.newton);
                assert_ne!(lhs * rat(2), rat(basic.defect));
            }
        }
    }

    #[test]
    fn newton_invariant_under_omega_equivalent_reps() {
        // different candidate reps of the same class share (nu, kappa)
        let gl2 = gd(Preset::gl(2));
        let r1 = StandardRep {
            lambda_b: gl2.coinv.from_free(vec![1, 0]),
            w_b: vec![0],
            levi: vec![0],
        };
        let r2 = StandardRep {
            lambda_b: gl2.coinv.from_free(vec![0, 1]),
            w_b: vec![0],
            levi: vec![0],
        };
        assert_eq!(newton_point(&gl2, &r1), newton_point(&gl2, &r2));
    }
}
