//! Resultants of small square homogeneous systems.
//!
//! All routines return the resultant under the usual normalisation
//! `Res(y_1^{d_1}, …, y_v^{d_v}) = 1`, so results from different routes
//! (Sylvester, linear elimination, Macaulay) agree exactly, sign included.
//!
//! Polynomials live in a ring whose first `v` variables are the
//! homogeneous unknowns; any trailing variables are coefficient
//! parameters and survive into the result.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::polycore::{det_polymatrix, Monomial, MultiPoly, PolyError, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ResultantError {
    #[error("system is not square: {polys} polynomials in {vars} variables")]
    NotSquare { polys: usize, vars: usize },
    #[error("polynomial {index} is not homogeneous of degree {degree}")]
    NotHomogeneous { index: usize, degree: u32 },
    #[error("degree must be positive")]
    ZeroDegree,
    #[error("the linear form is identically zero")]
    ZeroLinearForm,
    #[error("Macaulay matrix of size {size} exceeds the budget {budget}")]
    BudgetExceeded { size: usize, budget: usize },
    #[error("every variable ordering gives a singular extraneous minor")]
    NeedsPerturbation,
    #[error("system of {v} forms with no linear member needs the Macaulay fallback")]
    NeedsMacaulay { v: usize },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

impl ResultantError {
    pub fn name(&self) -> &'static str {
        match self {
            ResultantError::NotSquare { .. } => "NotSquare",
            ResultantError::NotHomogeneous { .. } => "NotHomogeneous",
            ResultantError::ZeroDegree => "ZeroDegree",
            ResultantError::ZeroLinearForm => "ZeroLinearForm",
            ResultantError::BudgetExceeded { .. } => "BudgetExceeded",
            ResultantError::NeedsPerturbation => "NeedsPerturbation",
            ResultantError::NeedsMacaulay { .. } => "NeedsMacaulay",
            ResultantError::Poly(e) => e.name(),
        }
    }
}

/// `Π d_i · Σ 1/d_i`, the degree of the resultant in the coefficients.
///
/// Panics on overflow.
pub fn resultant_degree(degrees: &[u32]) -> u64 {
    let prod = degrees
        .iter()
        .try_fold(1u64, |acc, &d| acc.checked_mul(d as u64))
        .expect("degree product overflows u64");
    degrees.iter().map(|&d| prod / d as u64).sum()
}

/// A square homogeneous system: `polys[i]` is homogeneous of degree
/// `degrees[i]` in the first `v` variables of its ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomoSystem {
    polys: Vec<MultiPoly>,
    degrees: Vec<u32>,
}

impl HomoSystem {
    pub fn new(polys: Vec<MultiPoly>, degrees: Vec<u32>) -> Result<Self, ResultantError> {
        let v = polys.len();
        if degrees.len() != v {
            return Err(ResultantError::NotSquare {
                polys: v,
                vars: degrees.len(),
            });
        }
        if let Some(first) = polys.first() {
            for p in &polys {
                if p.nvars() != first.nvars() {
                    return Err(PolyError::VariableCountMismatch {
                        left: first.nvars(),
                        right: p.nvars(),
                    }
                    .into());
                }
            }
            if first.nvars() < v {
                return Err(ResultantError::NotSquare {
                    polys: v,
                    vars: first.nvars(),
                });
            }
        }
        for (i, (p, &d)) in polys.iter().zip(&degrees).enumerate() {
            if d == 0 {
                return Err(ResultantError::ZeroDegree);
            }
            if !p.is_homogeneous_in(0..v, d) {
                return Err(ResultantError::NotHomogeneous {
                    index: i,
                    degree: d,
                });
            }
        }
        Ok(HomoSystem { polys, degrees })
    }

    pub fn v(&self) -> usize {
        self.polys.len()
    }

    pub fn polys(&self) -> &[MultiPoly] {
        &self.polys
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    /// Number of trailing parameter variables.
    pub fn nparams(&self) -> usize {
        self.polys.first().map_or(0, |p| p.nvars() - self.v())
    }
}

/// Coefficient of `y^exps` as a polynomial in the parameters.
fn coeff_of(groups: &BTreeMap<Vec<u32>, MultiPoly>, exps: &[u32], nparams: usize) -> MultiPoly {
    groups
        .get(exps)
        .cloned()
        .unwrap_or_else(|| MultiPoly::zero(nparams))
}

/// Sylvester resultant of two binary forms in `(y_1, y_2)` with declared
/// degrees. The matrix rows hold the coefficient lists ordered from
/// `y_1^d` down to `y_2^d`; the result lives in the parameter ring.
pub fn sylvester_with_degrees(
    f: &MultiPoly,
    g: &MultiPoly,
    df: u32,
    dg: u32,
) -> Result<MultiPoly, ResultantError> {
    let sys = HomoSystem::new(vec![f.clone(), g.clone()], vec![df, dg])?;
    let k = sys.nparams();
    let fc = f.coefficients_in_leading(2);
    let gc = g.coefficients_in_leading(2);
    let (df, dg) = (df as usize, dg as usize);
    let size = df + dg;
    let zero = MultiPoly::zero(k);
    let mut rows = Vec::with_capacity(size);
    for shift in 0..dg {
        let mut row = vec![zero.clone(); size];
        for i in 0..=df {
            row[shift + i] = coeff_of(&fc, &[(df - i) as u32, i as u32], k);
        }
        rows.push(row);
    }
    for shift in 0..df {
        let mut row = vec![zero.clone(); size];
        for i in 0..=dg {
            row[shift + i] = coeff_of(&gc, &[(dg - i) as u32, i as u32], k);
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Ok(MultiPoly::one(k));
    }
    Ok(det_polymatrix(&rows)?)
}

/// Sylvester resultant with degrees read off the (nonzero) inputs.
pub fn sylvester(f: &MultiPoly, g: &MultiPoly) -> Result<MultiPoly, ResultantError> {
    let deg = |p: &MultiPoly| -> Result<u32, ResultantError> {
        let (m, _) = p.leading_term().ok_or(PolyError::ZeroPolynomial)?;
        Ok(m.exponents()[0] + m.exponents()[1])
    };
    sylvester_with_degrees(f, g, deg(f)?, deg(g)?)
}

/// A resultant split as `scale · primitive`, `primitive` as produced by
/// `MultiPoly::primitive_part`. A zero resultant has scale zero and a zero
/// primitive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduced {
    pub scale: Rational,
    pub primitive: MultiPoly,
}

impl Reduced {
    pub fn from_poly(p: MultiPoly) -> Self {
        match p.primitive_part() {
            Ok((scale, primitive)) => Reduced { scale, primitive },
            Err(_) => Reduced {
                scale: Rational::zero(),
                primitive: p,
            },
        }
    }

    pub fn is_zero(&self) -> bool {
        self.scale.is_zero()
    }

    pub fn value(&self) -> MultiPoly {
        self.primitive.scale(&self.scale)
    }
}

/// Picks the variable to eliminate from a linear form: the coefficient
/// with the largest leading monomial, then the largest leading
/// coefficient in absolute value; ties go to the first index.
fn pick_pivot(coeffs: &[MultiPoly]) -> Option<usize> {
    let mut best: Option<(usize, (&Monomial, Rational))> = None;
    for (j, c) in coeffs.iter().enumerate() {
        let Some((m, lc)) = c.leading_term() else {
            continue;
        };
        let key = (m, lc.abs());
        match &best {
            Some((_, bk)) if *bk >= key => {}
            _ => best = Some((j, key)),
        }
    }
    best.map(|(j, _)| j)
}

/// Resultant of a system whose trailing members may be linear.
///
/// Linear forms at the end are eliminated one at a time by solving for
/// one variable and clearing denominators. For
/// `F_1, …, F_{v-1}, L` with `L = Σ a_i y_i` solved for `y_j`
/// (1-based), and `D = Π d_i`,
///
/// `Res(F, L) = (−1)^{D(v−j)} · Res(F̃) / a_j^{(v−2)D}`
///
/// where `F̃_i = a_j^{d_i} F_i(y_j ↦ −Σ_{i≠j} a_i y_i / a_j)`. Two forms go
/// to Sylvester, one form gives its leading coefficient. A remaining
/// non-linear system of three or more forms is handed to [`macaulay`] when
/// `macaulay_budget` is set and is an error otherwise.
pub fn chain_resultant_with(
    sys: &HomoSystem,
    macaulay_budget: Option<usize>,
) -> Result<Reduced, ResultantError> {
    Ok(Reduced::from_poly(exact_chain(sys, macaulay_budget)?))
}

/// [`chain_resultant_with`] without the Macaulay fallback.
pub fn chain_resultant(sys: &HomoSystem) -> Result<Reduced, ResultantError> {
    chain_resultant_with(sys, None)
}

/// The unreduced resultant, dispatched by shape.
pub fn resultant(sys: &HomoSystem, macaulay_budget: Option<usize>) -> Result<MultiPoly, ResultantError> {
    exact_chain(sys, macaulay_budget)
}

fn exact_chain(sys: &HomoSystem, budget: Option<usize>) -> Result<MultiPoly, ResultantError> {
    let v = sys.v();
    let k = sys.nparams();
    match v {
        0 => Ok(MultiPoly::one(k)),
        1 => {
            let d = sys.degrees[0];
            let groups = sys.polys[0].coefficients_in_leading(1);
            Ok(coeff_of(&groups, &[d], k))
        }
        2 => sylvester_with_degrees(&sys.polys[0], &sys.polys[1], sys.degrees[0], sys.degrees[1]),
        _ if sys.degrees[v - 1] == 1 => eliminate_linear(sys, budget),
        _ => match budget {
            Some(b) => macaulay(sys, b),
            None => Err(ResultantError::NeedsMacaulay { v }),
        },
    }
}

fn eliminate_linear(sys: &HomoSystem, budget: Option<usize>) -> Result<MultiPoly, ResultantError> {
    let v = sys.v();
    let k = sys.nparams();
    let total = v + k;
    let lin = &sys.polys[v - 1];
    let groups = lin.coefficients_in_leading(v);
    let a: Vec<MultiPoly> = (0..v)
        .map(|i| {
            let mut e = vec![0; v];
            e[i] = 1;
            coeff_of(&groups, &e, k)
        })
        .collect();
    let j = pick_pivot(&a).ok_or(ResultantError::ZeroLinearForm)?;

    // parameters embedded after the v-1 surviving unknowns
    let sub_total = v - 1 + k;
    let param_map: Vec<Option<usize>> = (0..k).map(|p| Some(v - 1 + p)).collect();
    let lift = |c: &MultiPoly| c.remap(sub_total, &param_map);
    let aj = lift(&a[j])?;
    let mut images = Vec::with_capacity(total);
    // y_j ↦ −Σ_{i≠j} a_i y_i (times a_j^{-1}, folded into the scaling below)
    let mut sol = MultiPoly::zero(sub_total);
    let mut slot = 0;
    let mut survivor = vec![0; v];
    for (i, (s, ai)) in survivor.iter_mut().zip(a.iter()).enumerate() {
        if i == j {
            continue;
        }
        *s = slot;
        sol = &sol - &(&lift(ai)? * &MultiPoly::var(slot, sub_total));
        slot += 1;
    }
    for (i, &s) in survivor.iter().enumerate() {
        if i == j {
            images.push(sol.clone());
        } else {
            images.push(&MultiPoly::var(s, sub_total) * &aj);
        }
    }
    images.extend((0..k).map(|p| MultiPoly::var(v - 1 + p, sub_total)));

    // Substituting y_i ↦ a_j y_i (i ≠ j) and y_j ↦ −Σ a_i y_i gives
    // a_j^{d} F(y_j ↦ −Σ a_i y_i / a_j) for a form of degree d, which is F̃.
    let reduced: Vec<MultiPoly> = sys.polys[..v - 1]
        .iter()
        .map(|p| p.compose(&images))
        .collect::<Result<_, _>>()?;
    let sub = HomoSystem::new(reduced, sys.degrees[..v - 1].to_vec())?;
    let res = exact_chain(&sub, budget)?;
    if res.is_zero() {
        return Ok(res);
    }
    let dprod: u32 = sys.degrees[..v - 1].iter().product();
    let jj = (j + 1) as u32;
    let mut out = res.exact_divide(&a[j].pow((v as u32 - 2) * dprod))?;
    if (dprod * (v as u32 - jj)) % 2 == 1 {
        out = -out;
    }
    Ok(out)
}

/// Degree-`d` monomials in `v` variables, graded-lex descending.
fn monomials_of_degree(v: usize, d: u32) -> Vec<Vec<u32>> {
    fn rec(v: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if v == 1 {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for a in (0..=d).rev() {
            prefix.push(a);
            rec(v - 1, d - a, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(v, d, &mut Vec::new(), &mut out);
    out
}

/// Size of the Macaulay matrix for the given degrees.
pub fn macaulay_size(degrees: &[u32]) -> usize {
    let v = degrees.len();
    let d = 1 + degrees.iter().map(|&x| x - 1).sum::<u32>();
    // C(d + v - 1, v - 1)
    let mut c = BigInt::one();
    for i in 0..(v - 1) {
        c = c * BigInt::from(d as usize + v - 1 - i) / BigInt::from(i + 1);
    }
    c.to_string().parse().unwrap_or(usize::MAX)
}

/// Macaulay's formula: determinant of the Macaulay matrix divided by the
/// minor on the non-reduced monomials. When that minor vanishes the
/// variables and equations are relabelled together, which leaves the
/// resultant unchanged, and the construction is retried.
pub fn macaulay(sys: &HomoSystem, budget: usize) -> Result<MultiPoly, ResultantError> {
    let v = sys.v();
    if v == 0 {
        return Ok(MultiPoly::one(sys.nparams()));
    }
    let size = macaulay_size(&sys.degrees);
    if size > budget {
        return Err(ResultantError::BudgetExceeded { size, budget });
    }
    for perm in rotations_then_permutations(v) {
        if let Some(res) = macaulay_ordered(sys, &perm)? {
            return Ok(res);
        }
    }
    Err(ResultantError::NeedsPerturbation)
}

fn rotations_then_permutations(v: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (0..v)
        .map(|s| (0..v).map(|i| (i + s) % v).collect())
        .collect();
    let mut all = Vec::new();
    permutations(&mut (0..v).collect::<Vec<_>>(), 0, &mut all);
    for p in all {
        if !out.contains(&p) {
            out.push(p);
        }
    }
    out
}

fn permutations(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == items.len() {
        out.push(items.clone());
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permutations(items, k + 1, out);
        items.swap(k, i);
    }
}

/// One Macaulay attempt with variable `perm[i]` and equation `perm[i]`
/// moved to position `i`. Returns `None` on a singular minor.
fn macaulay_ordered(sys: &HomoSystem, perm: &[usize]) -> Result<Option<MultiPoly>, ResultantError> {
    let v = sys.v();
    let k = sys.nparams();
    let degrees: Vec<u32> = perm.iter().map(|&p| sys.degrees[p]).collect();
    let coeffs: Vec<Vec<(Vec<u32>, MultiPoly)>> = perm
        .iter()
        .map(|&p| {
            sys.polys[p]
                .coefficients_in_leading(v)
                .into_iter()
                .map(|(e, c)| (perm.iter().map(|&q| e[q]).collect(), c))
                .collect()
        })
        .collect();

    let d = 1 + degrees.iter().map(|&x| x - 1).sum::<u32>();
    let monos = monomials_of_degree(v, d);
    let index: BTreeMap<&[u32], usize> = monos.iter().enumerate().map(|(i, m)| (m.as_slice(), i)).collect();
    let zero = MultiPoly::zero(k);
    let mut rows = Vec::with_capacity(monos.len());
    let mut non_reduced = Vec::new();
    for (mi, m) in monos.iter().enumerate() {
        let divisible: Vec<usize> = (0..v).filter(|&i| m[i] >= degrees[i]).collect();
        let i = divisible[0];
        if divisible.len() > 1 {
            non_reduced.push(mi);
        }
        let mut shift = m.clone();
        shift[i] -= degrees[i];
        let mut row = vec![zero.clone(); monos.len()];
        for (e, c) in &coeffs[i] {
            let target: Vec<u32> = e.iter().zip(&shift).map(|(a, b)| a + b).collect();
            row[index[target.as_slice()]] = c.clone();
        }
        rows.push(row);
    }
    let minor_rows: Vec<Vec<MultiPoly>> = non_reduced
        .iter()
        .map(|&i| non_reduced.iter().map(|&j| rows[i][j].clone()).collect())
        .collect();
    let minor = if minor_rows.is_empty() {
        MultiPoly::one(k)
    } else {
        det_polymatrix(&minor_rows)?
    };
    if minor.is_zero() {
        return Ok(None);
    }
    let full = det_polymatrix(&rows)?;
    Ok(Some(full.exact_divide(&minor)?))
}

/// Integer power helper for tests and callers.
pub fn rational_pow(x: &Rational, e: u64) -> Rational {
    crate::polycore::pow_rational(x, e)
}

/// `BigInt` version of the degree formula for large shapes.
pub fn resultant_degree_big(degrees: &[u32]) -> BigInt {
    let prod: BigInt = degrees.iter().map(|&d| BigInt::from(d)).product();
    degrees.iter().map(|&d| &prod / BigInt::from(d)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::{int, parse_poly};

    fn names(list: &[&str]) -> Vec<String> {
        list.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn degrees() {
        assert_eq!(resultant_degree(&[3, 2, 1]), 11);
        assert_eq!(resultant_degree(&[2, 1]), 3);
        for n in 1..6u32 {
            for r in 2..5u32 {
                let ds = vec![r - 1; n as usize];
                assert_eq!(resultant_degree(&ds), n as u64 * (r as u64 - 1).pow(n - 1));
            }
        }
        assert_eq!(resultant_degree_big(&[2; 20]), BigInt::from(20u64 << 19));
    }

    #[test]
    fn quadratic_against_linear() {
        let nm = names(&["y1", "y2", "a", "b", "c", "d", "e"]);
        let f = parse_poly("a*y1^2 + b*y1*y2 + c*y2^2", &nm).unwrap();
        let g = parse_poly("d*y1 + e*y2", &nm).unwrap();
        let res = sylvester(&f, &g).unwrap();
        let pn = names(&["a", "b", "c", "d", "e"]);
        assert_eq!(res, parse_poly("a*e^2 - b*e*d + c*d^2", &pn).unwrap());
    }

    #[test]
    fn disjoint_monomials() {
        let nm = names(&["y1", "y2"]);
        let f = parse_poly("y1^3", &nm).unwrap();
        let g = parse_poly("y2", &nm).unwrap();
        assert_eq!(sylvester(&f, &g).unwrap(), MultiPoly::one(0));
        let sys = HomoSystem::new(vec![f, g], vec![3, 1]).unwrap();
        assert_eq!(macaulay(&sys, 100).unwrap(), MultiPoly::one(0));
    }

    #[test]
    fn linear_system_is_determinant() {
        let nm = names(&["y1", "y2", "y3"]);
        let polys = vec![
            parse_poly("2*y1 + y2 - y3", &nm).unwrap(),
            parse_poly("y1 + 3*y3", &nm).unwrap(),
            parse_poly("4*y2 + 5*y3", &nm).unwrap(),
        ];
        // det [[2,1,-1],[1,0,3],[0,4,5]] = 2(0-12) - 1(5-0) + (-1)(4-0) = -33
        let sys = HomoSystem::new(polys, vec![1, 1, 1]).unwrap();
        assert_eq!(macaulay(&sys, 100).unwrap(), MultiPoly::from_int(-33, 0));
        assert_eq!(resultant(&sys, None).unwrap(), MultiPoly::from_int(-33, 0));
    }

    #[test]
    fn chain_matches_macaulay_on_3_2_1() {
        let nm = names(&["y1", "y2", "y3"]);
        let polys = vec![
            parse_poly("y1^3 - 2*y1*y2*y3 + 3*y2^3 + y3^3 - y1^2*y3", &nm).unwrap(),
            parse_poly("y1^2 + 5*y2*y3 - y3^2 + 2*y1*y2", &nm).unwrap(),
            parse_poly("3*y1 - 2*y2 + 7*y3", &nm).unwrap(),
        ];
        let sys = HomoSystem::new(polys.clone(), vec![3, 2, 1]).unwrap();
        let m = macaulay(&sys, 1000).unwrap();
        assert_eq!(resultant(&sys, None).unwrap(), m);
        // each pivot choice gives the same value
        for lin in ["7*y1 + y2 - y3", "y1 - 9*y2 + 2*y3", "y1 + y2 + 5*y3", "-4*y1 + 4*y2 + y3"] {
            let mut p = polys.clone();
            p[2] = parse_poly(lin, &nm).unwrap();
            let sys = HomoSystem::new(p, vec![3, 2, 1]).unwrap();
            assert_eq!(resultant(&sys, None).unwrap(), macaulay(&sys, 1000).unwrap(), "{lin}");
        }
    }

    #[test]
    fn zero_linear_form() {
        let nm = names(&["y1", "y2", "y3"]);
        let polys = vec![
            parse_poly("y1^2", &nm).unwrap(),
            parse_poly("y2", &nm).unwrap(),
            MultiPoly::zero(3),
        ];
        let sys = HomoSystem::new(polys, vec![2, 1, 1]).unwrap();
        assert_eq!(chain_resultant(&sys), Err(ResultantError::ZeroLinearForm));
    }

    #[test]
    fn validation() {
        let nm = names(&["y1", "y2"]);
        let f = parse_poly("y1^2 + y2", &nm).unwrap();
        assert!(matches!(
            HomoSystem::new(vec![f.clone(), f], vec![2, 2]),
            Err(ResultantError::NotHomogeneous { index: 0, .. })
        ));
        let sys = HomoSystem::new(
            (0..3).map(|i| MultiPoly::var(i, 3).pow(3)).collect(),
            vec![3, 3, 3],
        )
        .unwrap();
        assert!(matches!(macaulay(&sys, 10), Err(ResultantError::BudgetExceeded { .. })));
        assert_eq!(chain_resultant(&sys), Err(ResultantError::NeedsMacaulay { v: 3 }));
        assert_eq!(macaulay(&sys, 1000).unwrap(), MultiPoly::one(0));
    }

    #[test]
    fn reduced_parts() {
        let nm = names(&["y1", "y2"]);
        let f = parse_poly("2*y1^2 - 4*y2^2", &nm).unwrap();
        let g = parse_poly("y1 + y2", &nm).unwrap();
        let sys = HomoSystem::new(vec![f, g], vec![2, 1]).unwrap();
        let red = chain_resultant(&sys).unwrap();
        // 2*1 - 0 + (-4)*1 = -2
        assert_eq!(red.value(), MultiPoly::from_int(-2, 0));
        assert_eq!(red.scale, int(-2));
    }
}
