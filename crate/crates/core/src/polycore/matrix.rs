use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{MultiPoly, PolyError, Rational};

fn check_square<T>(m: &[Vec<T>]) -> Result<usize, PolyError> {
    let n = m.len();
    for row in m {
        if row.len() != n {
            return Err(PolyError::NonSquareMatrix {
                rows: n,
                cols: row.len(),
            });
        }
    }
    Ok(n)
}

/// Determinant of a square rational matrix. Each row is scaled to
/// integers and the integer matrix is reduced with fraction-free
/// elimination, so no rational intermediates appear.
pub fn det_rational(m: &[Vec<Rational>]) -> Result<Rational, PolyError> {
    let n = check_square(m)?;
    let mut scale = Rational::one();
    let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for row in m {
        let l = row
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let ints = row
            .iter()
            .map(|x| (x * Rational::from_integer(l.clone())).to_integer())
            .collect();
        scale /= Rational::from_integer(l);
        a.push(ints);
    }
    Ok(scale * Rational::from_integer(bareiss_int(a)))
}

/// Fraction-free Gaussian elimination on an integer matrix.
pub(crate) fn bareiss_int(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        let (top, bottom) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pivot = &pivot_row[k];
        for row in bottom.iter_mut() {
            let lead = std::mem::take(&mut row[k]);
            if lead.is_zero() {
                // row[j] * pivot / prev, still exact
                for x in row[k + 1..].iter_mut().filter(|x| !x.is_zero()) {
                    *x = &*x * pivot / &prev;
                }
                continue;
            }
            for j in k + 1..n {
                let v = &row[j] * pivot - &lead * &pivot_row[j];
                row[j] = v / &prev;
            }
        }
        prev = pivot.clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Determinant of a square matrix of polynomials by Bareiss elimination
/// with exact polynomial division. Matrices whose entries are all
/// constants take the integer path.
///
/// The empty matrix has determinant `1` in zero variables.
pub fn det_polymatrix(m: &[Vec<MultiPoly>]) -> Result<MultiPoly, PolyError> {
    let n = check_square(m)?;
    if n == 0 {
        return Ok(MultiPoly::one(0));
    }
    let nvars = m[0][0].nvars();
    for row in m {
        for p in row {
            if p.nvars() != nvars {
                return Err(PolyError::VariableCountMismatch {
                    left: nvars,
                    right: p.nvars(),
                });
            }
        }
    }
    if m.iter().all(|row| row.iter().all(MultiPoly::is_constant)) {
        let consts: Vec<Vec<Rational>> = m
            .iter()
            .map(|row| row.iter().map(|p| p.constant_value().unwrap()).collect())
            .collect();
        return Ok(MultiPoly::constant(det_rational(&consts)?, nvars));
    }

    let mut a: Vec<Vec<MultiPoly>> = m.to_vec();
    let mut negate = false;
    let mut prev = MultiPoly::one(nvars);
    for k in 0..n - 1 {
        // prefer the sparsest nonzero pivot in column k
        let best = (k..n)
            .filter(|&i| !a[i][k].is_zero())
            .min_by_key(|&i| a[i][k].num_terms());
        match best {
            None => return Ok(MultiPoly::zero(nvars)),
            Some(i) if i != k => {
                a.swap(k, i);
                negate = !negate;
            }
            Some(_) => {}
        }
        let (top, bottom) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pivot = &pivot_row[k];
        for row in bottom.iter_mut() {
            let lead = std::mem::replace(&mut row[k], MultiPoly::zero(nvars));
            for j in k + 1..n {
                let mut v = &row[j] * pivot;
                if !lead.is_zero() && !pivot_row[j].is_zero() {
                    v = &v - &(&lead * &pivot_row[j]);
                }
                row[j] = v.exact_divide(&prev)?;
            }
        }
        prev = pivot.clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if negate { -d } else { d })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::{int, rat};

    fn c(v: i64, nvars: usize) -> MultiPoly {
        MultiPoly::from_int(v, nvars)
    }

    #[test]
    fn one_by_one() {
        let p = &MultiPoly::var(0, 2) + &MultiPoly::var(1, 2).pow(3);
        assert_eq!(det_polymatrix(&[vec![p.clone()]]).unwrap(), p);
    }

    #[test]
    fn two_by_two_vandermonde() {
        let y1 = MultiPoly::var(0, 2);
        let y2 = MultiPoly::var(1, 2);
        let m = vec![vec![c(1, 2), y1.clone()], vec![c(1, 2), y2.clone()]];
        assert_eq!(det_polymatrix(&m).unwrap(), &y2 - &y1);
    }

    #[test]
    fn zero_pivot_needs_swap() {
        let m = vec![
            vec![int(0), int(1), int(2)],
            vec![int(3), int(4), int(5)],
            vec![int(6), int(7), int(9)],
        ];
        // 0*(36-35) - 1*(27-30) + 2*(21-24) = -3
        assert_eq!(det_rational(&m).unwrap(), int(-3));
        let r = vec![vec![rat(1, 2), rat(1, 3)], vec![rat(1, 4), rat(1, 5)]];
        assert_eq!(det_rational(&r).unwrap(), rat(1, 10) - rat(1, 12));
    }

    #[test]
    fn singular_and_nonsquare() {
        let m = vec![vec![int(1), int(2)], vec![int(2), int(4)]];
        assert_eq!(det_rational(&m).unwrap(), int(0));
        let bad = vec![vec![int(1), int(2)]];
        assert!(matches!(
            det_rational(&bad),
            Err(PolyError::NonSquareMatrix { .. })
        ));
    }

    #[test]
    fn vandermonde_three() {
        let n = 3;
        let y: Vec<MultiPoly> = (0..n).map(|i| MultiPoly::var(i, n)).collect();
        let m: Vec<Vec<MultiPoly>> = (0..n)
            .map(|i| vec![c(1, n), y[i].clone(), y[i].pow(2)])
            .collect();
        let expected = &(&(&y[1] - &y[0]) * &(&y[2] - &y[0])) * &(&y[2] - &y[1]);
        assert_eq!(det_polymatrix(&m).unwrap(), expected);
    }
}
