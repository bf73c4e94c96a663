#![allow(dead_code)]

pub mod printed;

use symdisc::polycore::{parse_poly, product_of_powers, MultiPoly, Rational};
use symdisc::symforms::{enumerate_partitions, SymmetricForm};

pub fn names(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

pub fn parse_factors(display: &[(&str, u64)], vars: &[String]) -> Vec<(MultiPoly, u64)> {
    display
        .iter()
        .map(|(text, e)| (parse_poly(text, vars).expect("fixture parses"), *e))
        .collect()
}

pub fn eval_product(factors: &[(MultiPoly, u64)], point: &[Rational]) -> Rational {
    let values: Vec<(Rational, u64)> = factors
        .iter()
        .map(|(p, e)| (p.eval(point).expect("point fits"), *e))
        .collect();
    product_of_powers(values.iter().map(|(v, e)| (v, *e)))
}

/// A form whose coefficients are `point`, in partition order.
pub fn form_at(n: usize, r: u32, point: &[Rational]) -> SymmetricForm {
    SymmetricForm::from_pairs(n, r, enumerate_partitions(r).into_iter().zip(point.iter().cloned()))
        .expect("valid form")
}
