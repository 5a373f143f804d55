//! Exact integers, rationals and integer q-polynomials.

mod qpoly;

pub use num_bigint::BigInt;
pub use qpoly::QPolynomial;

/// Exact rational, always in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(num: &BigInt, den: &BigInt) -> Rational {
    Rational::new(num.clone(), den.clone())
}

/// `num/den` form; integers keep an explicit `/1`.
pub fn fraction_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}
