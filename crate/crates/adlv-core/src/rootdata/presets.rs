use super::datum::RootDatumWithFrobenius;
use crate::error::Error;
use crate::matrix::{identity, IntMat};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

/// The built-in group families.
///
/// `SplitA(r)` is `GL_{r+1}` (cocharacter lattice `Z^{r+1}`), the other
/// split types use the standard rank-`r` realizations. `ResGl` is
/// `Res_{E/F} GL_n` with `f` the inertia degree and `e` the ramification
/// index of `E/F`; `Unitary` the quasi-split unitary group attached to a
/// quadratic extension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Preset {
    SplitA(usize),
    SplitB(usize),
    SplitC(usize),
    SplitD(usize),
    ResGl { n: usize, f: usize, e: usize },
    Unitary { n: usize, ramified: bool },
}

impl Preset {
    pub fn split_a(r: usize) -> Preset {
        Preset::SplitA(r)
    }

    /// `GL_n` shorthand.
    pub fn gl(n: usize) -> Preset {
        assert!(n >= 1);
        Preset::SplitA(n - 1)
    }

    pub fn split(typ: &str, r: usize) -> Result<Preset, Error> {
        match typ {
            "A" | "a" => Ok(Preset::SplitA(r)),
            "B" | "b" => Ok(Preset::SplitB(r)),
            "C" | "c" => Ok(Preset::SplitC(r)),
            "D" | "d" => Ok(Preset::SplitD(r)),
            _ => Err(Error::BadPreset(format!("unknown split type {typ}"))),
        }
    }

    pub fn res_gl(n: usize, f: usize, e: usize) -> Preset {
        Preset::ResGl { n, f, e }
    }

    pub fn unitary(n: usize, ramified: bool) -> Preset {
        Preset::Unitary { n, ramified }
    }

    pub fn label(&self) -> String {
        match self {
            Preset::SplitA(r) => format!("gl({})", r + 1),
            Preset::SplitB(r) => format!("so({})", 2 * r + 1),
            Preset::SplitC(r) => format!("sp({})", 2 * r),
            Preset::SplitD(r) => format!("so({})", 2 * r),
            Preset::ResGl { n, f, e } => format!("res_gl({n},f={f},e={e})"),
            Preset::Unitary { n, ramified } => {
                format!("u({n},{})", if *ramified { "ramified" } else { "unramified" })
            }
        }
    }

    pub fn build(&self) -> Result<RootDatumWithFrobenius, Error> {
        match *self {
            Preset::SplitA(r) => build_gl(r + 1),
            Preset::SplitB(r) => build_bcd('B', r),
            Preset::SplitC(r) => build_bcd('C', r),
            Preset::SplitD(r) => build_bcd('D', r),
            Preset::ResGl { n, f, e } => build_res_gl(n, f, e),
            Preset::Unitary { n, ramified } => build_unitary(n, ramified),
        }
    }
}

fn e_minus_e(rank: usize, i: usize, j: usize) -> Vec<i64> {
    let mut v = vec![0i64; rank];
    v[i] = 1;
    v[j] = -1;
    v
}

fn build_gl(n: usize) -> Result<RootDatumWithFrobenius, Error> {
    if n == 0 {
        return Err(Error::BadPreset("gl(0)".into()));
    }
    if n == 1 {
        return RootDatumWithFrobenius::torus(1, vec![], identity(1));
    }
    let simples: Vec<Vec<i64>> = (0..n - 1).map(|i| e_minus_e(n, i, i + 1)).collect();
    RootDatumWithFrobenius::new(
        n,
        simples.clone(),
        simples,
        vec![],
        identity(n),
        format!("gl({n})"),
    )
}

fn build_bcd(typ: char, r: usize) -> Result<RootDatumWithFrobenius, Error> {
    if r < 2 {
        return Err(Error::BadPreset(format!("type {typ} needs rank >= 2")));
    }
    let mut roots: Vec<Vec<i64>> = (0..r - 1).map(|i| e_minus_e(r, i, i + 1)).collect();
    let mut coroots = roots.clone();
    let mut last_root = vec![0i64; r];
    let mut last_coroot = vec![0i64; r];
    match typ {
        'B' => {
            last_root[r - 1] = 1;
            last_coroot[r - 1] = 2;
        }
        'C' => {
            last_root[r - 1] = 2;
            last_coroot[r - 1] = 1;
        }
        'D' => {
            last_root[r - 2] = 1;
            last_root[r - 1] = 1;
            last_coroot = last_root.clone();
        }
        _ => unreachable!(),
    }
    roots.push(last_root);
    coroots.push(last_coroot);
    RootDatumWithFrobenius::new(
        r,
        roots,
        coroots,
        vec![],
        identity(r),
        format!("split {typ}{r}"),
    )
}

/// Block permutation matrix on `Z^{blocks * n}` sending block `b` to block
/// `perm(b)` (identity within each block).
fn block_perm(n: usize, blocks: usize, perm: impl Fn(usize) -> usize) -> IntMat {
    let rank = blocks * n;
    let mut m = vec![vec![0i64; rank]; rank];
    for b in 0..blocks {
        let t = perm(b);
        for k in 0..n {
            m[t * n + k][b * n + k] = 1;
        }
    }
    m
}

fn build_res_gl(n: usize, f: usize, e: usize) -> Result<RootDatumWithFrobenius, Error> {
    if n == 0 || f == 0 || e == 0 {
        return Err(Error::BadPreset("res_gl needs positive parameters".into()));
    }
    // blocks indexed (i, j), i < f unramified, j < e ramified; block index i*e + j.
    let blocks = f * e;
    let rank = blocks * n;
    let mut simples = Vec::new();
    for b in 0..blocks {
        for k in 0..n - 1 {
            simples.push(e_minus_e(rank, b * n + k, b * n + k + 1));
        }
    }
    // inertia: cyclic shift of the ramified index j, same for every i
    let inertia: Vec<IntMat> = if e > 1 {
        vec![block_perm(n, blocks, |b| {
            let (i, j) = (b / e, b % e);
            i * e + (j + 1) % e
        })]
    } else {
        vec![]
    };
    // frobenius: cyclic shift of the unramified index i
    let frobenius = if f > 1 {
        block_perm(n, blocks, |b| {
            let (i, j) = (b / e, b % e);
            ((i + 1) % f) * e + j
        })
    } else {
        identity(rank)
    };
    RootDatumWithFrobenius::new(
        rank,
        simples.clone(),
        simples,
        inertia,
        frobenius,
        format!("res_gl({n},f={f},e={e})"),
    )
}

fn build_unitary(n: usize, ramified: bool) -> Result<RootDatumWithFrobenius, Error> {
    if n < 2 {
        return Err(Error::BadPreset("unitary needs n >= 2".into()));
    }
    let simples: Vec<Vec<i64>> = (0..n - 1).map(|i| e_minus_e(n, i, i + 1)).collect();
    // the outer twist x -> (-x_n, ..., -x_1)
    let mut theta = vec![vec![0i64; n]; n];
    for i in 0..n {
        theta[i][n - 1 - i] = -1;
    }
    let (inertia, frobenius) = if ramified {
        (vec![theta], identity(n))
    } else {
        (vec![], theta)
    };
    RootDatumWithFrobenius::new(
        n,
        simples.clone(),
        simples,
        inertia,
        frobenius,
        format!("u({n},{})", if ramified { "ram" } else { "unram" }),
    )
}

/// The datum of the simply connected cover of type `A_{n-1}` (`SL_n`):
/// cocharacter lattice = coroot lattice in the basis of simple coroots.
pub fn build_sl(n: usize) -> Result<RootDatumWithFrobenius, Error> {
    if n < 2 {
        return Err(Error::BadPreset("sl needs n >= 2".into()));
    }
    let r = n - 1;
    // simple coroots = standard basis; simple roots = Cartan matrix rows
    let coroots: Vec<Vec<i64>> = (0..r)
        .map(|i| (0..r).map(|j| i64::from(i == j)).collect())
        .collect();
    let roots: Vec<Vec<i64>> = (0..r)
        .map(|i| {
            (0..r)
                .map(|j| {
                    if i == j {
                        2
                    } else if i.abs_diff(j) == 1 {
                        -1
                    } else {
                        0
                    }
                })
                .collect()
        })
        .collect();
    RootDatumWithFrobenius::new(r, roots, coroots, vec![], identity(r), format!("sl({n})"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preset_shapes() {
        let d = Preset::res_gl(2, 1, 2).build().unwrap();
        assert_eq!(d.rank, 4);
        assert_eq!(d.inertia_gens.len(), 1);
        let u = Preset::unitary(3, false).build().unwrap();
        assert_eq!(u.rank, 3);
        // sigma = (x1,x2,x3) -> (-x3,-x2,-x1)
        assert_eq!(
            crate::matrix::mat_vec(&u.frobenius, &[1, 2, 3]),
            vec![-3, -2, -1]
        );
        assert!(Preset::split("E", 6).is_err());
    }

    #[test]
    fn sl_datum() {
        let d = build_sl(2).unwrap();
        assert_eq!(d.rank, 1);
        assert_eq!(d.roots.len(), 2);
    }
}
