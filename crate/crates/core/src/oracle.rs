//! Brute-force discriminants of small generic forms, independent of the
//! symmetric machinery. Used to check the engine.
//!
//! Every oracle is calibrated so that `x_1^r + … + x_n^r` maps to 1, by
//! running the same construction on that form.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::polycore::{det_polymatrix, det_rational, Monomial, MultiPoly, PolyError, Rational};
use crate::resultants::{macaulay, sylvester, HomoSystem, ResultantError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("form is not homogeneous of degree at least 2 in the first {n} variables")]
    NotAForm { n: usize },
    #[error("Fermat calibration vanished")]
    Calibration,
    #[error(transparent)]
    Resultant(#[from] ResultantError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

impl OracleError {
    pub fn name(&self) -> &'static str {
        match self {
            OracleError::NotAForm { .. } => "NotAForm",
            OracleError::Calibration => "Calibration",
            OracleError::Resultant(e) => e.name(),
            OracleError::Poly(e) => e.name(),
        }
    }
}

/// Degree of `s` as a form in its first `n` variables (the rest are
/// parameters).
fn form_degree(s: &MultiPoly, n: usize) -> Result<u32, OracleError> {
    let d = s
        .terms()
        .next()
        .map(|(m, _)| m.exponents()[..n].iter().sum::<u32>())
        .ok_or(OracleError::NotAForm { n })?;
    if d < 2 || !s.is_homogeneous_in(0..n, d) {
        return Err(OracleError::NotAForm { n });
    }
    Ok(d)
}

/// `x_1^r + … + x_n^r`.
fn fermat_poly(n: usize, r: u32) -> MultiPoly {
    (0..n).fold(MultiPoly::zero(n), |acc, i| &acc + &MultiPoly::var(i, n).pow(r))
}

/// Sylvester resultant of `∂S/∂x_1`, `∂S/∂x_2` for a binary form in the
/// first two variables. Trailing variables are parameters; the result is a
/// polynomial in them.
pub fn sylvester_disc_2var(s: &MultiPoly) -> Result<MultiPoly, OracleError> {
    let r = form_degree(s, 2)?;
    let raw = |p: &MultiPoly| sylvester(&p.derivative(0), &p.derivative(1));
    let scale = raw(&fermat_poly(2, r))?
        .constant_value()
        .filter(|c| !c.is_zero())
        .ok_or(OracleError::Calibration)?;
    Ok(raw(s)?.scale(&scale.recip()))
}

/// The printed 4×4 Sylvester matrix for
/// `S_111 x_1³ + 3S_112 x_1²x_2 + 3S_122 x_1x_2² + S_222 x_2³`.
pub fn binary_cubic_matrix_det(s111: &Rational, s112: &Rational, s122: &Rational, s222: &Rational) -> Rational {
    let z = Rational::zero();
    let two = Rational::from_integer(2.into());
    let m = vec![
        vec![s111.clone(), &two * s112, s122.clone(), z.clone()],
        vec![z.clone(), s111.clone(), &two * s112, s122.clone()],
        vec![s112.clone(), &two * s122, s222.clone(), z.clone()],
        vec![z.clone(), s112.clone(), &two * s122, s222.clone()],
    ];
    det_rational(&m).expect("square")
}

/// Index triples `(i ≤ j ≤ k)` in the printed order with their monomial
/// multiplicities.
const CUBIC_INDEX: [([usize; 3], i64); 10] = [
    ([0, 0, 0], 1),
    ([0, 0, 1], 3),
    ([0, 0, 2], 3),
    ([0, 1, 1], 3),
    ([0, 1, 2], 6),
    ([0, 2, 2], 3),
    ([1, 1, 1], 1),
    ([1, 1, 2], 3),
    ([1, 2, 2], 3),
    ([2, 2, 2], 1),
];

fn cubic_monomial(idx: [usize; 3]) -> Monomial {
    let mut e = vec![0u32; 3];
    for i in idx {
        e[i] += 1;
    }
    Monomial::new(e)
}

/// A ternary cubic `Σ mult · S_ijk x_i x_j x_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenericCubic3 {
    /// `S_111, S_112, S_113, S_122, S_123, S_133, S_222, S_223, S_233, S_333`.
    pub s: [Rational; 10],
}

impl GenericCubic3 {
    pub fn new(s: [Rational; 10]) -> Self {
        GenericCubic3 { s }
    }

    /// Reads the coefficients off a ternary cubic.
    pub fn from_poly(p: &MultiPoly) -> Result<Self, OracleError> {
        if p.nvars() != 3 || form_degree(p, 3)? != 3 {
            return Err(OracleError::NotAForm { n: 3 });
        }
        Ok(GenericCubic3 {
            s: Self::coefficients_of(p),
        })
    }

    fn coefficients_of(p: &MultiPoly) -> [Rational; 10] {
        CUBIC_INDEX.map(|(idx, mult)| p.coefficient(&cubic_monomial(idx)) / Rational::from_integer(mult.into()))
    }

    pub fn to_poly(&self) -> MultiPoly {
        MultiPoly::from_terms(
            3,
            CUBIC_INDEX
                .iter()
                .zip(&self.s)
                .map(|((idx, mult), c)| (cubic_monomial(*idx).exponents().to_vec(), c * Rational::from_integer((*mult).into()))),
        )
    }

    /// `det(∂²S/∂x_i∂x_j)`.
    pub fn hessian(&self) -> MultiPoly {
        let p = self.to_poly();
        let m: Vec<Vec<MultiPoly>> = (0..3)
            .map(|i| (0..3).map(|j| p.derivative(i).derivative(j)).collect())
            .collect();
        det_polymatrix(&m).expect("3x3")
    }

    /// `H_ijk` in the same order as `s`.
    pub fn hessian_coefficients(&self) -> [Rational; 10] {
        Self::coefficients_of(&self.hessian())
    }

    /// The 6×6 matrix: three rows of `S` and three of `H`, each row the
    /// coefficients `(·)_{a11}, (·)_{a12}, (·)_{a13}, (·)_{a22}, (·)_{a23},
    /// (·)_{a33}` for `a = 1, 2, 3`.
    pub fn sylvester_matrix(&self) -> Vec<Vec<Rational>> {
        let h = self.hessian_coefficients();
        let lookup = |c: &[Rational; 10], mut idx: [usize; 3]| {
            idx.sort_unstable();
            let pos = CUBIC_INDEX.iter().position(|(i, _)| *i == idx).expect("triple");
            c[pos].clone()
        };
        let pairs = [[0, 0], [0, 1], [0, 2], [1, 1], [1, 2], [2, 2]];
        let mut rows = Vec::with_capacity(6);
        for c in [&self.s, &h] {
            for a in 0..3 {
                rows.push(pairs.iter().map(|[j, k]| lookup(c, [a, *j, *k])).collect());
            }
        }
        rows
    }

    fn raw_det(&self) -> Rational {
        det_rational(&self.sylvester_matrix()).expect("square")
    }
}

fn hessian_calibration() -> &'static Rational {
    static CAL: OnceLock<Rational> = OnceLock::new();
    CAL.get_or_init(|| {
        let one = Rational::one;
        let z = Rational::zero;
        GenericCubic3::new([one(), z(), z(), z(), z(), z(), one(), z(), z(), one()]).raw_det()
    })
}

/// Discriminant of a ternary cubic through the 6×6 determinant.
pub fn hessian_disc_3var(c: &GenericCubic3) -> Rational {
    c.raw_det() / hessian_calibration()
}

fn macaulay_calibration(n: usize, r: u32, budget: usize) -> Result<Rational, OracleError> {
    static CACHE: OnceLock<Mutex<HashMap<(usize, u32), Rational>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = cache.lock().expect("cache lock").get(&(n, r)) {
        return Ok(v.clone());
    }
    let v = gradient_resultant(&fermat_poly(n, r), n, r, budget)?
        .constant_value()
        .filter(|c| !c.is_zero())
        .ok_or(OracleError::Calibration)?;
    cache.lock().expect("cache lock").insert((n, r), v.clone());
    Ok(v)
}

fn gradient_resultant(s: &MultiPoly, n: usize, r: u32, budget: usize) -> Result<MultiPoly, OracleError> {
    let grads: Vec<MultiPoly> = (0..n).map(|i| s.derivative(i)).collect();
    let sys = HomoSystem::new(grads, vec![r - 1; n])?;
    Ok(macaulay(&sys, budget)?)
}

/// `x_i ↦ x_i + c·x_{i+1}` followed by `x_{i+1} ↦ x_{i+1} + d·x_i`: both
/// unimodular, so the discriminant is unchanged.
fn shear(s: &MultiPoly, n: usize, c: i64, d: i64) -> Result<MultiPoly, OracleError> {
    let k = s.nvars();
    let step = |offset: isize, c: i64| -> Vec<MultiPoly> {
        (0..k)
            .map(|i| {
                let j = i as isize + offset;
                if i < n && j >= 0 && (j as usize) < n && c != 0 {
                    &MultiPoly::var(i, k) + &MultiPoly::var(j as usize, k).scale(&Rational::from_integer(c.into()))
                } else {
                    MultiPoly::var(i, k)
                }
            })
            .collect()
    };
    Ok(s.compose(&step(1, c))?.compose(&step(-1, d))?)
}

/// Macaulay resultant of the gradient of a form in its first `n`
/// variables. If the Macaulay minor is singular for every ordering the
/// form is sheared by a unimodular change of variables and retried; forms
/// whose whole orbit is degenerate go through [`perturbed_resultant`].
pub fn gradient_macaulay_disc(s: &MultiPoly, n: usize, budget: usize) -> Result<MultiPoly, OracleError> {
    let r = form_degree(s, n)?;
    let cal = macaulay_calibration(n, r, budget)?;
    for (c, d) in [(0, 0), (1, 0), (-2, 0), (1, 2), (3, -1)] {
        let t = if c == 0 { s.clone() } else { shear(s, n, c, d)? };
        match gradient_resultant(&t, n, r, budget) {
            Ok(v) => return Ok(v.scale(&cal.recip())),
            Err(OracleError::Resultant(ResultantError::NeedsPerturbation)) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(perturbed_resultant(s, n, r, budget)?.scale(&cal.recip()))
}

/// `R(0)` for `R(t) = Res(∇(S + t·F))`, `F` the Fermat form. `R` has
/// degree at most `n(r-1)^{n-1}` in `t`, so it is sampled at that many
/// plus one small nonzero `t` and interpolated at zero. Samples where the
/// minor is still singular are skipped.
fn perturbed_resultant(s: &MultiPoly, n: usize, r: u32, budget: usize) -> Result<MultiPoly, OracleError> {
    let k = s.nvars();
    let bump = (0..n).fold(MultiPoly::zero(k), |acc, i| &acc + &MultiPoly::var(i, k).pow(r));
    let needed = n * (r as usize - 1).pow(n as u32 - 1) + 1;
    let mut samples: Vec<(Rational, MultiPoly)> = Vec::with_capacity(needed);
    let nodes = (1..=4 * needed as i64).flat_map(|j| [j, -j]);
    for t in nodes {
        if samples.len() == needed {
            break;
        }
        let tt = Rational::from_integer(t.into());
        match gradient_resultant(&(s + &bump.scale(&tt)), n, r, budget) {
            Ok(v) => samples.push((tt, v)),
            Err(OracleError::Resultant(ResultantError::NeedsPerturbation)) => {}
            Err(e) => return Err(e),
        }
    }
    if samples.len() < needed {
        return Err(ResultantError::NeedsPerturbation.into());
    }
    // Lagrange at 0: Σ_j R(t_j) Π_{i≠j} t_i / (t_i - t_j)
    let mut out = MultiPoly::zero(k - n);
    for (j, (tj, rj)) in samples.iter().enumerate() {
        let mut w = Rational::one();
        for (i, (ti, _)) in samples.iter().enumerate() {
            if i != j {
                w *= ti / (ti - tj);
            }
        }
        out = &out + &rj.scale(&w);
    }
    Ok(out)
}

/// `count` points of dimension `dim` with entries `a/b`, `|a| <= bound`,
/// `1 <= b <= bound`. Deterministic in `seed`.
pub fn random_points(seed: u64, count: usize, dim: usize, bound: i64) -> Vec<Vec<Rational>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            (0..dim)
                .map(|_| {
                    let a: i64 = rng.gen_range(-bound..=bound);
                    let b: i64 = rng.gen_range(1..=bound);
                    Rational::new(a.into(), b.into())
                })
                .collect()
        })
        .collect()
}
