use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Monomial, PolyError, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Sparse polynomial in a fixed number of variables with rational
/// coefficients. No stored coefficient is ever zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(Rational::one(), nvars)
    }

    pub fn constant(c: Rational, nvars: usize) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(nvars), c);
        }
        p
    }

    pub fn from_int(c: i64, nvars: usize) -> Self {
        Self::constant(Rational::from_integer(BigInt::from(c)), nvars)
    }

    /// The variable with the given index.
    ///
    /// Panics if `index >= nvars`.
    pub fn var(index: usize, nvars: usize) -> Self {
        assert!(index < nvars, "variable {index} out of range for {nvars}");
        let mut p = Self::zero(nvars);
        p.terms.insert(Monomial::var(index, nvars), Rational::one());
        p
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, merging
    /// duplicates and dropping zeros.
    ///
    /// Panics if an exponent vector does not have length `nvars`.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, Rational)>,
    {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector length");
            p.add_term(Monomial::new(e), c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// The value of a constant polynomial (zero included).
    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_zero() {
            Some(Rational::zero())
        } else if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Largest term under graded-lex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.last_key_value()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// True if every term has total degree `d`. The zero polynomial is
    /// homogeneous of every degree.
    pub fn is_homogeneous(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    /// True if every term has degree `d` in the variables `vars`.
    pub fn is_homogeneous_in(&self, vars: std::ops::Range<usize>, d: u32) -> bool {
        self.terms
            .keys()
            .all(|m| m.exponents()[vars.clone()].iter().sum::<u32>() == d)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms
            .keys()
            .map(|m| m.exponents()[var])
            .max()
            .unwrap_or(0)
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn check_vars(&self, other: &MultiPoly) -> Result<(), PolyError> {
        if self.nvars == other.nvars {
            Ok(())
        } else {
            Err(PolyError::VariableCountMismatch {
                left: self.nvars,
                right: other.nvars,
            })
        }
    }

    pub fn arith(&self, other: &MultiPoly, op: ArithOp) -> Result<MultiPoly, PolyError> {
        self.check_vars(other)?;
        Ok(match op {
            ArithOp::Add => self.add_unchecked(other, false),
            ArithOp::Sub => self.add_unchecked(other, true),
            ArithOp::Mul => self.mul_unchecked(other),
        })
    }

    pub fn try_add(&self, other: &MultiPoly) -> Result<MultiPoly, PolyError> {
        self.arith(other, ArithOp::Add)
    }

    pub fn try_sub(&self, other: &MultiPoly) -> Result<MultiPoly, PolyError> {
        self.arith(other, ArithOp::Sub)
    }

    pub fn try_mul(&self, other: &MultiPoly) -> Result<MultiPoly, PolyError> {
        self.arith(other, ArithOp::Mul)
    }

    fn add_unchecked(&self, other: &MultiPoly, negate: bool) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            let c = if negate { -c } else { c.clone() };
            out.add_term(m.clone(), c);
        }
        out
    }

    fn mul_unchecked(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero(self.nvars);
        // iterate the shorter operand in the outer loop
        let (a, b) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.clone(), v * c))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut result = MultiPoly::one(self.nvars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        result
    }

    pub fn derivative(&self, var: usize) -> MultiPoly {
        let mut out = MultiPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exponents()[var];
            if e == 0 {
                continue;
            }
            let mut ex = m.exponents().to_vec();
            ex[var] -= 1;
            out.add_term(Monomial::new(ex), c * Rational::from_integer(BigInt::from(e)));
        }
        out
    }

    /// Exact quotient `num / den`. Fails with `InexactDivision` if `den`
    /// does not divide `num`.
    pub fn exact_divide(&self, den: &MultiPoly) -> Result<MultiPoly, PolyError> {
        self.check_vars(den)?;
        let (lm, lc) = den.leading_term().ok_or(PolyError::DivisionByZero)?;
        if let Some(c) = den.constant_value() {
            return Ok(self.scale(&c.recip()));
        }
        let lc_inv = lc.recip();
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero(self.nvars);
        while let Some((m, c)) = rem.leading_term() {
            let qm = m.checked_div(lm).ok_or(PolyError::InexactDivision)?;
            let qc = c * &lc_inv;
            for (dm, dc) in &den.terms {
                rem.add_term(dm.mul(&qm), -(&qc * dc));
            }
            quot.add_term(qm, qc);
        }
        Ok(quot)
    }

    /// Simultaneous substitution of every variable: variable `i` is
    /// replaced by `images[i]`. All images must share one variable count,
    /// which becomes the variable count of the result.
    pub fn compose(&self, images: &[MultiPoly]) -> Result<MultiPoly, PolyError> {
        if images.len() != self.nvars {
            return Err(PolyError::VariableCountMismatch {
                left: self.nvars,
                right: images.len(),
            });
        }
        let target = match images.first() {
            Some(p) => p.nvars,
            None => 0,
        };
        for img in images {
            if img.nvars != target {
                return Err(PolyError::VariableCountMismatch {
                    left: target,
                    right: img.nvars,
                });
            }
        }
        // powers[i][k] = images[i]^k, filled lazily
        let mut powers: Vec<Vec<MultiPoly>> = images
            .iter()
            .map(|_| vec![MultiPoly::one(target)])
            .collect();
        let mut out = MultiPoly::zero(target);
        for (m, c) in &self.terms {
            let mut term = MultiPoly::constant(c.clone(), target);
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().mul_unchecked(&images[i]);
                    powers[i].push(next);
                }
                term = term.mul_unchecked(&powers[i][e as usize]);
            }
            for (tm, tc) in term.terms {
                out.add_term(tm, tc);
            }
        }
        Ok(out)
    }

    /// Simultaneous substitution of the assigned variables. Variables
    /// without an assignment map to the same-index variable of the target
    /// ring, whose size is the common variable count of the replacements
    /// (or `self.nvars()` when `assignments` is empty).
    pub fn substitute(
        &self,
        assignments: &BTreeMap<usize, MultiPoly>,
    ) -> Result<MultiPoly, PolyError> {
        let target = match assignments.values().next() {
            Some(p) => p.nvars,
            None => return Ok(self.clone()),
        };
        let mut images = Vec::with_capacity(self.nvars);
        for i in 0..self.nvars {
            match assignments.get(&i) {
                Some(p) => images.push(p.clone()),
                None if i < target => images.push(MultiPoly::var(i, target)),
                None if self.degree_in(i) == 0 => images.push(MultiPoly::zero(target)),
                None => {
                    return Err(PolyError::VariableOutOfRange {
                        index: i,
                        nvars: target,
                    })
                }
            }
        }
        self.compose(&images)
    }

    pub fn eval(&self, point: &[Rational]) -> Result<Rational, PolyError> {
        if point.len() != self.nvars {
            return Err(PolyError::PointLengthMismatch {
                expected: self.nvars,
                got: point.len(),
            });
        }
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    t *= num_traits::pow(x.clone(), e as usize);
                }
            }
            total += t;
        }
        Ok(total)
    }

    /// Re-embeds the polynomial into a ring with `nvars` variables:
    /// old variable `i` becomes `mapping[i]`. An old variable mapped to
    /// `None` must not occur.
    pub fn remap(&self, nvars: usize, mapping: &[Option<usize>]) -> Result<MultiPoly, PolyError> {
        if mapping.len() != self.nvars {
            return Err(PolyError::VariableCountMismatch {
                left: self.nvars,
                right: mapping.len(),
            });
        }
        let mut out = MultiPoly::zero(nvars);
        for (m, c) in &self.terms {
            let mut e = vec![0; nvars];
            for (i, &k) in m.exponents().iter().enumerate() {
                if k == 0 {
                    continue;
                }
                match mapping[i] {
                    Some(j) if j < nvars => e[j] += k,
                    Some(j) => return Err(PolyError::VariableOutOfRange { index: j, nvars }),
                    None => return Err(PolyError::VariableOutOfRange { index: i, nvars }),
                }
            }
            out.add_term(Monomial::new(e), c.clone());
        }
        Ok(out)
    }

    /// Groups terms by their exponents in the first `split` variables.
    /// Returned coefficients live in the remaining `nvars - split`
    /// variables.
    pub fn coefficients_in_leading(&self, split: usize) -> BTreeMap<Vec<u32>, MultiPoly> {
        let rest = self.nvars - split;
        let mut out: BTreeMap<Vec<u32>, MultiPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (head, tail) = m.exponents().split_at(split);
            out.entry(head.to_vec())
                .or_insert_with(|| MultiPoly::zero(rest))
                .add_term(Monomial::new(tail.to_vec()), c.clone());
        }
        out
    }

    /// Splits `self = scale * primitive` where `primitive` has coprime
    /// integer coefficients and a positive leading coefficient.
    pub fn primitive_part(&self) -> Result<(Rational, MultiPoly), PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let mut den_lcm = BigInt::one();
        let mut num_gcd = BigInt::zero();
        for c in self.terms.values() {
            den_lcm = den_lcm.lcm(c.denom());
            num_gcd = num_gcd.gcd(c.numer());
        }
        let mut scale = Rational::new(num_gcd, den_lcm);
        let lead_negative = self.leading_term().map(|(_, c)| c.is_negative()).unwrap();
        if lead_negative {
            scale = -scale;
        }
        let inv = scale.recip();
        Ok((scale, self.scale(&inv)))
    }

    /// True if every coefficient is an integer.
    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Gcd of the integer coefficients, or `None` if some coefficient is
    /// not an integer.
    pub fn integer_content(&self) -> Option<BigInt> {
        if !self.has_integer_coefficients() {
            return None;
        }
        Some(
            self.terms
                .values()
                .fold(BigInt::zero(), |g, c| g.gcd(c.numer())),
        )
    }

    pub fn leading_sign(&self) -> Sign {
        match self.leading_term() {
            None => Sign::NoSign,
            Some((_, c)) if c.is_negative() => Sign::Minus,
            Some(_) => Sign::Plus,
        }
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[{}]({})", self.nvars, self)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.nvars).map(|i| format!("x{i}")).collect();
        f.write_str(&super::format_poly(self, &names))
    }
}

// Operator impls panic on variable-count mismatch; use `arith` for the
// fallible version.

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.try_add(rhs).expect("MultiPoly add")
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.try_sub(rhs).expect("MultiPoly sub")
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.try_mul(rhs).expect("MultiPoly mul")
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: MultiPoly) -> MultiPoly {
        &self + &rhs
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: MultiPoly) -> MultiPoly {
        &self - &rhs
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::{int, rat};

    fn x(i: usize, n: usize) -> MultiPoly {
        MultiPoly::var(i, n)
    }

    #[test]
    fn difference_of_squares() {
        let p = &(&x(0, 2) + &x(1, 2)) * &(&x(0, 2) - &x(1, 2));
        let expected = &x(0, 2).pow(2) - &x(1, 2).pow(2);
        assert_eq!(p, expected);
    }

    #[test]
    fn add_zero_is_identity() {
        let p = &x(0, 3).pow(2) + &x(2, 3).scale(&rat(3, 4));
        assert_eq!(&p + &MultiPoly::zero(3), p);
    }

    #[test]
    fn vandermonde_three_has_six_terms() {
        let n = 3;
        let v = &(&(&x(0, n) - &x(1, n)) * &(&x(0, n) - &x(2, n))) * &(&x(1, n) - &x(2, n));
        assert_eq!(v.num_terms(), 6);
        assert!(v.is_homogeneous(3));
        // x1^2 x2 appears with +1, x1 x2^2 with -1
        assert_eq!(v.coefficient(&Monomial::new(vec![2, 1, 0])), int(1));
        assert_eq!(v.coefficient(&Monomial::new(vec![1, 2, 0])), int(-1));
        assert_eq!(v.coefficient(&Monomial::new(vec![0, 2, 1])), int(1));
    }

    #[test]
    fn mismatch_is_an_error() {
        let err = x(0, 2).try_add(&x(0, 3)).unwrap_err();
        assert_eq!(err, PolyError::VariableCountMismatch { left: 2, right: 3 });
    }

    #[test]
    fn exact_division() {
        let num = &x(0, 2).pow(2) - &x(1, 2).pow(2);
        let den = &x(0, 2) - &x(1, 2);
        assert_eq!(num.exact_divide(&den).unwrap(), &x(0, 2) + &x(1, 2));
        assert_eq!(num.exact_divide(&num).unwrap(), MultiPoly::one(2));
        let bad = &x(0, 2).pow(2) + &x(1, 2).pow(2);
        assert_eq!(bad.exact_divide(&den), Err(PolyError::InexactDivision));
        assert_eq!(
            bad.exact_divide(&MultiPoly::zero(2)),
            Err(PolyError::DivisionByZero)
        );
    }

    #[test]
    fn substitution() {
        let p = &x(0, 2).pow(2) + &x(1, 2).pow(2);
        let y = MultiPoly::var(0, 1);
        let map: BTreeMap<_, _> = [(0, y.clone()), (1, y.clone())].into_iter().collect();
        assert_eq!(p.substitute(&map).unwrap(), y.pow(2).scale(&int(2)));
        assert_eq!(p.substitute(&BTreeMap::new()).unwrap(), p);

        let q = &(&x(0, 4) * &x(1, 4)) * &(&x(2, 4) * &x(3, 4));
        let ones: BTreeMap<_, _> = (0..4).map(|i| (i, MultiPoly::one(0))).collect();
        assert_eq!(q.substitute(&ones).unwrap(), MultiPoly::one(0));
    }

    #[test]
    fn evaluation() {
        let p = &x(0, 2).pow(2) + &x(1, 2).pow(2);
        assert_eq!(p.eval(&[int(1), int(1)]).unwrap(), int(2));
        let q = &p + &MultiPoly::from_int(7, 2);
        assert_eq!(q.eval(&[int(0), int(0)]).unwrap(), int(7));
        assert!(matches!(
            p.eval(&[int(1)]),
            Err(PolyError::PointLengthMismatch { .. })
        ));
        let n = 3;
        let v = &(&(&x(0, n) - &x(1, n)) * &(&x(0, n) - &x(2, n))) * &(&x(1, n) - &x(2, n));
        assert_eq!(v.eval(&[int(1), int(1), int(5)]).unwrap(), int(0));
    }

    #[test]
    fn primitive_parts() {
        let p = &x(0, 2).scale(&int(6)) + &x(1, 2).scale(&int(4));
        let (s, q) = p.primitive_part().unwrap();
        assert_eq!(s, int(2));
        assert_eq!(q, &x(0, 2).scale(&int(3)) + &x(1, 2).scale(&int(2)));

        let (s, q) = (-x(0, 2)).primitive_part().unwrap();
        assert_eq!(s, int(-1));
        assert_eq!(q, x(0, 2));

        let r = &x(0, 2).scale(&rat(1, 6)) - &x(1, 2).scale(&rat(3, 4));
        let (s, q) = r.primitive_part().unwrap();
        assert_eq!(q.scale(&s), r);
        assert_eq!(q.integer_content(), Some(BigInt::one()));
        assert_eq!(MultiPoly::zero(1).primitive_part(), Err(PolyError::ZeroPolynomial));
    }

    #[test]
    fn derivative_and_remap() {
        let p = &x(0, 2).pow(3) * &x(1, 2);
        assert_eq!(p.derivative(0), (&x(0, 2).pow(2) * &x(1, 2)).scale(&int(3)));
        let moved = p.remap(3, &[Some(2), Some(0)]).unwrap();
        assert_eq!(moved, &x(2, 3).pow(3) * &x(0, 3));
    }

    #[test]
    fn coefficient_grouping() {
        // (a+b) y1^2 + c y1 y2 with y = vars 0,1 and a,b,c = vars 2,3,4
        let n = 5;
        let p = &(&(&x(2, n) + &x(3, n)) * &x(0, n).pow(2)) + &(&x(4, n) * &(&x(0, n) * &x(1, n)));
        let groups = p.coefficients_in_leading(2);
        assert_eq!(groups.len(), 2);
        assert_eq!(groups[&vec![2, 0]], &x(0, 3) + &x(1, 3));
        assert_eq!(groups[&vec![1, 1]], x(2, 3));
    }
}
