//! Exact arithmetic: the field Q(√2) and sparse multivariate polynomials
//! over it in the variable families `t_j`, `s_j` (odd `j`) and `z_j`.

mod poly;
mod scalar;

use std::collections::BTreeMap;

pub use poly::{Family, Monomial, SparsePoly, Variable};
pub use scalar::Sqrt2Rational;

use crate::error::Result;

pub fn scalar_mul(x: &Sqrt2Rational, y: &Sqrt2Rational) -> Sqrt2Rational {
    x * y
}

pub fn scalar_inv(x: &Sqrt2Rational) -> Result<Sqrt2Rational> {
    x.inv()
}

pub fn poly_add(p: &SparsePoly, q: &SparsePoly) -> SparsePoly {
    p + q
}

pub fn poly_mul(p: &SparsePoly, q: &SparsePoly) -> SparsePoly {
    p * q
}

pub fn poly_substitute(p: &SparsePoly, images: &BTreeMap<Variable, SparsePoly>) -> SparsePoly {
    p.substitute(images)
}

pub fn poly_eval(p: &SparsePoly, point: &BTreeMap<Variable, Sqrt2Rational>) -> Result<Sqrt2Rational> {
    p.eval(point)
}

pub fn weighted_degree(p: &SparsePoly) -> Option<u64> {
    p.weighted_degree()
}
