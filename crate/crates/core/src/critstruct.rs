//! Critical-point types and the divided-difference tower.
//!
//! A critical point of a symmetric form of degree `r` has at most `r-1`
//! distinct coordinates, since every `x_i` solves the same univariate
//! equation `Σ_k W_k t^{r-1-k} = 0`. A type `M = (M_1, …, M_{r-1})` records
//! how many coordinates take each value. Specialising the gradient to a
//! type gives `v` polynomials `P^(i)` in `y_1, …, y_v`; repeated divided
//! differences strip the spurious solutions `y_i = y_j`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::polycore::{det_polymatrix, MultiPoly, PolyError, Rational};
use crate::symforms::FormCoeffs;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CritError {
    #[error("composition has no nonzero part")]
    AllZeroComposition,
    #[error("composition has {got} parts, degree {r} needs {expected}")]
    WrongLength { got: usize, expected: usize, r: u32 },
    #[error("tower input has {got} polynomials; at most {max} allowed")]
    TooManyLevels { got: usize, max: usize },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

impl CritError {
    pub fn name(&self) -> &'static str {
        match self {
            CritError::AllZeroComposition => "AllZeroComposition",
            CritError::WrongLength { .. } => "WrongLength",
            CritError::TooManyLevels { .. } => "TooManyLevels",
            CritError::Poly(e) => e.name(),
        }
    }
}

/// Ordered tuple of block sizes, possibly with zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Self {
        Composition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn zero_count(&self) -> usize {
        self.0.iter().filter(|&&m| m == 0).count()
    }

    /// Nonzero parts in their original order.
    pub fn nonzero_parts(&self) -> Vec<u32> {
        self.0.iter().copied().filter(|&m| m > 0).collect()
    }

    pub fn class(&self) -> CompositionClass {
        let mut nz = self.nonzero_parts();
        nz.sort_unstable_by(|a, b| b.cmp(a));
        CompositionClass {
            nonzero_parts: nz,
            zeros: self.zero_count(),
        }
    }
}

/// Compositions up to reordering: the sorted nonzero parts and the number
/// of zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CompositionClass {
    pub nonzero_parts: Vec<u32>,
    pub zeros: usize,
}

impl CompositionClass {
    /// Number of distinct values, `v`.
    pub fn distinct(&self) -> usize {
        self.nonzero_parts.len()
    }

    /// Representative composition: nonzero parts (descending) then zeros.
    pub fn representative(&self) -> Composition {
        let mut p = self.nonzero_parts.clone();
        p.extend(std::iter::repeat_n(0, self.zeros));
        Composition(p)
    }
}

impl fmt::Display for CompositionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.nonzero_parts.iter().map(u32::to_string).collect();
        write!(f, "({}", parts.join(","))?;
        for _ in 0..self.zeros {
            f.write_str(",0")?;
        }
        f.write_str(")")
    }
}

/// All ordered compositions of `n` into exactly `parts` non-negative
/// parts, lexicographically.
pub fn enumerate_compositions(n: u32, parts: usize) -> Vec<Composition> {
    fn rec(rest: u32, slots: usize, prefix: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if slots == 1 {
            prefix.push(rest);
            out.push(Composition(prefix.clone()));
            prefix.pop();
            return;
        }
        for a in 0..=rest {
            prefix.push(a);
            rec(rest - a, slots - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if parts > 0 {
        rec(n, parts, &mut Vec::new(), &mut out);
    }
    out
}

/// The gradient values on a critical point of type `m`: one polynomial
/// `P^(i)` per nonzero block, in `y_1, …, y_v` followed by the
/// coefficient parameters.
///
/// Power sums specialise as `p_k ↦ Σ_i M_i y_i^k`, so the work does not
/// grow with `n`.
pub fn specialize(coeffs: &FormCoeffs, m: &Composition) -> Result<Vec<MultiPoly>, CritError> {
    let r = coeffs.r();
    let expected = r as usize - 1;
    if m.parts().len() != expected {
        return Err(CritError::WrongLength {
            got: m.parts().len(),
            expected,
            r,
        });
    }
    let nz = m.nonzero_parts();
    let v = nz.len();
    if v == 0 {
        return Err(CritError::AllZeroComposition);
    }
    let k = coeffs.nparams();
    let total = v + k;
    let ys: Vec<MultiPoly> = (0..v).map(|i| MultiPoly::var(i, total)).collect();
    let mut images: Vec<MultiPoly> = (1..=r)
        .map(|j| {
            nz.iter().zip(&ys).fold(MultiPoly::zero(total), |acc, (&mi, y)| {
                &acc + &y.pow(j).scale(&Rational::from_integer(BigInt::from(mi)))
            })
        })
        .collect();
    images.extend((0..k).map(|j| MultiPoly::var(v + j, total)));

    let derivs: Vec<MultiPoly> = coeffs
        .power_sum_derivatives()
        .iter()
        .map(|d| d.compose(&images))
        .collect::<Result<_, _>>()?;
    let firsts = ys
        .iter()
        .map(|y| {
            derivs
                .iter()
                .enumerate()
                .fold(MultiPoly::zero(total), |acc, (k0, d)| {
                    let kk = k0 as u32 + 1;
                    let term = (d * &y.pow(kk - 1)).scale(&Rational::from_integer(BigInt::from(kk)));
                    &acc + &term
                })
        })
        .collect();
    Ok(firsts)
}

/// `P^(S)` for every nonempty subset `S` of `{0, …, v-1}`, keyed by the
/// sorted index list. The `y` variables are the first `v` variables of
/// the ring; any further variables are coefficient parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DividedTower {
    v: usize,
    levels: BTreeMap<Vec<usize>, MultiPoly>,
}

impl DividedTower {
    pub fn v(&self) -> usize {
        self.v
    }

    pub fn get(&self, subset: &[usize]) -> Option<&MultiPoly> {
        self.levels.get(subset)
    }

    /// Entries of level `k` in lexicographic subset order.
    pub fn level(&self, k: usize) -> impl Iterator<Item = (&Vec<usize>, &MultiPoly)> {
        self.levels.iter().filter(move |(s, _)| s.len() == k)
    }
}

fn subsets_of_size(v: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, v: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..v {
            cur.push(i);
            rec(i + 1, v, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, v, k, &mut Vec::new(), &mut out);
    out
}

/// Builds every level by the recurrence
/// `P^(i_1…i_k) = (P^(i_1…i_{k-1}) − P^(i_2…i_k)) / (y_{i_1} − y_{i_k})`,
/// each division checked exact.
pub fn build_tower(firsts: &[MultiPoly], max_levels: usize) -> Result<DividedTower, CritError> {
    let v = firsts.len();
    if v > max_levels {
        return Err(CritError::TooManyLevels {
            got: v,
            max: max_levels,
        });
    }
    let mut levels = BTreeMap::new();
    for (i, p) in firsts.iter().enumerate() {
        levels.insert(vec![i], p.clone());
    }
    if v == 0 {
        return Ok(DividedTower { v, levels });
    }
    let total = firsts[0].nvars();
    for k in 2..=v {
        for s in subsets_of_size(v, k) {
            let head = &levels[&s[..k - 1].to_vec()];
            let tail = &levels[&s[1..].to_vec()];
            let num = head.try_sub(tail)?;
            let den = &MultiPoly::var(s[0], total) - &MultiPoly::var(s[k - 1], total);
            let q = num.exact_divide(&den)?;
            levels.insert(s, q);
        }
    }
    Ok(DividedTower { v, levels })
}

/// The same entries computed independently as a ratio of determinants:
/// the Vandermonde matrix of the `y_i` in `S` with its last column
/// replaced by the `P^(i)`, divided by the Vandermonde determinant.
pub fn tower_entry_by_determinant(firsts: &[MultiPoly], subset: &[usize]) -> Result<MultiPoly, CritError> {
    let total = firsts[0].nvars();
    let k = subset.len();
    let rows: Vec<Vec<MultiPoly>> = subset
        .iter()
        .map(|&i| {
            let y = MultiPoly::var(i, total);
            let mut row: Vec<MultiPoly> = (0..k as u32 - 1).map(|e| y.pow(e)).collect();
            row.push(firsts[i].clone());
            row
        })
        .collect();
    let num = det_polymatrix(&rows)?;
    let mut vdm = MultiPoly::one(total);
    for a in 0..k {
        for b in a + 1..k {
            vdm = &vdm * &(&MultiPoly::var(subset[b], total) - &MultiPoly::var(subset[a], total));
        }
    }
    Ok(num.exact_divide(&vdm)?)
}

/// `Σ_{|S|=k} P^(S)` for `k = 1, …, v`; the `k`-th sum has degree `r-k`
/// in the `y` variables.
pub fn level_sums(tower: &DividedTower) -> Vec<MultiPoly> {
    (1..=tower.v)
        .map(|k| {
            tower
                .level(k)
                .map(|(_, p)| p.clone())
                .reduce(|a, b| &a + &b)
                .expect("every level is nonempty")
        })
        .collect()
}

/// Multiplicity `#_M!/(r-1)! · n!/(M_1!⋯M_{r-1}!)` of an ordered
/// composition, as an exact rational.
pub fn composition_multiplicity(m: &Composition) -> Rational {
    let fact = |k: u64| -> BigInt { (1..=k).fold(BigInt::one(), |a, i| a * BigInt::from(i)) };
    let r1 = m.parts().len() as u64;
    let n = m.total() as u64;
    let mut den = fact(r1);
    for &p in m.parts() {
        den *= fact(p as u64);
    }
    Rational::new(fact(m.zero_count() as u64) * fact(n), den)
}

/// Groups all compositions of `n` into `r-1` parts by class and sums
/// their multiplicities. Classes come out in canonical order.
pub fn grouped_multiplicities(n: u32, r: u32) -> BTreeMap<CompositionClass, Rational> {
    let mut out: BTreeMap<CompositionClass, Rational> = BTreeMap::new();
    for m in enumerate_compositions(n, r as usize - 1) {
        if m.nonzero_parts().is_empty() {
            continue;
        }
        let e = composition_multiplicity(&m);
        let slot = out.entry(m.class()).or_insert_with(Rational::zero);
        *slot += e;
    }
    out
}
