//! Sparse exact polynomials in one and two variables.
//!
//! `BiPoly` is the bivariate type the Tutte engine produces: a map from
//! exponent pairs `(i, j)` (for `x^i y^j`) to nonzero `BigInt` coefficients.
//! `UniPoly` holds the univariate specializations (chromatic, flow,
//! reliability, shelling). Evaluation takes exact rationals and returns
//! exact rationals; nothing is ever rounded.
//!
//! The canonical text form sorts terms by exponent pair, `i` descending and
//! `j` ascending, so `T(K4 - e)` prints as
//! `x^3 + 2*x^2 + x + 2*x*y + y + y^2`. The JSON form is the same sequence
//! as `[i, j, coefficient-as-decimal-string]` triples.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Exact rational numbers; always reduced, denominator always positive.
pub type Rational = num_rational::BigRational;

/// Sparse bivariate polynomial with `BigInt` coefficients.
///
/// Invariant: the map never stores a zero coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

/// Which line of the plane to restrict a [`BiPoly`] to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Line {
    /// Fix `x = c`; the result is a polynomial in `y`.
    X(BigInt),
    /// Fix `y = c`; the result is a polynomial in `x`.
    Y(BigInt),
    /// Set `x = y`; the result is a polynomial in the shared variable.
    Diagonal,
}

/// Which variable of a [`BiPoly`] a univariate polynomial should land in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    X,
    Y,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn one() -> Self {
        BiPoly::monomial(0, 0, BigInt::one())
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        BiPoly::monomial(1, 0, BigInt::one())
    }

    /// The polynomial `y`.
    pub fn y() -> Self {
        BiPoly::monomial(0, 1, BigInt::one())
    }

    /// The single term `c * x^i * y^j`.
    pub fn monomial(i: u32, j: u32, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        BiPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, i: u32, j: u32) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Terms in canonical order: `i` descending, then `j` ascending.
    pub fn terms(&self) -> Vec<(u32, u32, BigInt)> {
        let mut out: Vec<_> = self
            .terms
            .iter()
            .map(|(&(i, j), c)| (i, j, c.clone()))
            .collect();
        out.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        out
    }

    pub fn x_degree(&self) -> u32 {
        self.terms.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    pub fn y_degree(&self) -> u32 {
        self.terms.keys().map(|&(_, j)| j).max().unwrap_or(0)
    }

    fn insert_add(&mut self, key: (u32, u32), c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&key, c) in &other.terms {
            out.insert_add(key, c);
        }
        out
    }

    pub fn sub(&self, other: &BiPoly) -> BiPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> BiPoly {
        if c.is_zero() {
            return BiPoly::zero();
        }
        BiPoly {
            terms: self.terms.iter().map(|(&k, v)| (k, v * c)).collect(),
        }
    }

    pub fn mul(&self, other: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &other.terms {
                out.insert_add((i1 + i2, j1 + j2), &(c1 * c2));
            }
        }
        out
    }

    /// Multiply by the monomial `x^i y^j`.
    pub fn mul_monomial(&self, i: u32, j: u32) -> BiPoly {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| ((a + i, b + j), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> BiPoly {
        let mut out = BiPoly::one();
        for _ in 0..exp {
            out = out.mul(self);
        }
        out
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        let xs = powers(x, self.x_degree());
        let ys = powers(y, self.y_degree());
        let mut acc = Rational::zero();
        for (&(i, j), c) in &self.terms {
            acc += &xs[i as usize] * &ys[j as usize] * Rational::from(c.clone());
        }
        acc
    }

    /// Formal partial derivative `d^(p+q) / dx^p dy^q`. The coefficient of
    /// `x^i y^j` picks up the falling factorials `i(i-1)...(i-p+1)` and
    /// `j(j-1)...(j-q+1)`; terms with `i < p` or `j < q` vanish.
    pub fn partial_derivative(&self, p: u32, q: u32) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(i, j), c) in &self.terms {
            if i < p || j < q {
                continue;
            }
            let mut factor = BigInt::one();
            for k in 0..p {
                factor *= BigInt::from(i - k);
            }
            for k in 0..q {
                factor *= BigInt::from(j - k);
            }
            out.insert_add((i - p, j - q), &(c * factor));
        }
        out
    }

    /// Restrict to a line: `x = c`, `y = c`, or the diagonal `x = y`.
    pub fn substitute_line(&self, line: &Line) -> UniPoly {
        let mut coeffs: BTreeMap<usize, BigInt> = BTreeMap::new();
        match line {
            Line::X(c) => {
                let cs = int_powers(c, self.x_degree());
                for (&(i, j), v) in &self.terms {
                    *coeffs.entry(j as usize).or_insert_with(BigInt::zero) +=
                        v * &cs[i as usize];
                }
            }
            Line::Y(c) => {
                let cs = int_powers(c, self.y_degree());
                for (&(i, j), v) in &self.terms {
                    *coeffs.entry(i as usize).or_insert_with(BigInt::zero) +=
                        v * &cs[j as usize];
                }
            }
            Line::Diagonal => {
                for (&(i, j), v) in &self.terms {
                    *coeffs.entry((i + j) as usize).or_insert_with(BigInt::zero) += v;
                }
            }
        }
        let degree = coeffs.keys().max().copied().unwrap_or(0);
        let mut out = vec![BigInt::zero(); degree + 1];
        for (k, v) in coeffs {
            out[k] = v;
        }
        UniPoly::from_coeffs(out)
    }

    /// Swap the roles of `x` and `y`.
    pub fn swap_vars(&self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(&(i, j), c)| ((j, i), c.clone())).collect(),
        }
    }

    /// Lift a univariate polynomial into the chosen variable.
    pub fn from_unipoly(p: &UniPoly, var: Var) -> BiPoly {
        let mut terms = BTreeMap::new();
        for (k, c) in p.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let key = match var {
                    Var::X => (k as u32, 0),
                    Var::Y => (0, k as u32),
                };
                terms.insert(key, c.clone());
            }
        }
        BiPoly { terms }
    }

    /// JSON form: array of `[i, j, coefficient-as-decimal-string]` in
    /// canonical term order.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms()
                .into_iter()
                .map(|(i, j, c)| {
                    serde_json::json!([i, j, c.to_string()])
                })
                .collect(),
        )
    }

    /// Render with custom variable names (the default `Display` uses `x`, `y`).
    pub fn display_with<'a>(&'a self, x: &'a str, y: &'a str) -> impl fmt::Display + 'a {
        BiPolyDisplay { poly: self, x, y }
    }
}

struct BiPolyDisplay<'a> {
    poly: &'a BiPoly,
    x: &'a str,
    y: &'a str,
}

impl fmt::Display for BiPolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.poly.terms();
        write_terms(
            f,
            terms
                .iter()
                .map(|(i, j, c)| (vec![(self.x, *i), (self.y, *j)], c)),
        )
    }
}

/// Shared renderer for term sequences. Writes `0` for the zero polynomial;
/// otherwise joins monomials with ` + ` / ` - `, omits unit coefficients
/// except on the constant term, and drops `^1`.
fn write_terms<'a, I>(f: &mut fmt::Formatter<'_>, terms: I) -> fmt::Result
where
    I: Iterator<Item = (Vec<(&'a str, u32)>, &'a BigInt)>,
{
    let mut wrote_any = false;
    for (vars, coeff) in terms {
        let negative = coeff.is_negative();
        let magnitude = coeff.abs();
        if wrote_any {
            write!(f, " {} ", if negative { "-" } else { "+" })?;
        } else if negative {
            write!(f, "-")?;
        }
        wrote_any = true;

        let mut parts: Vec<String> = Vec::new();
        let all_const = vars.iter().all(|&(_, e)| e == 0);
        if !magnitude.is_one() || all_const {
            parts.push(magnitude.to_string());
        }
        for (name, e) in vars {
            match e {
                0 => {}
                1 => parts.push(name.to_string()),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        write!(f, "{}", parts.join("*"))?;
    }
    if !wrote_any {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with("x", "y"))
    }
}

/// Dense univariate polynomial with `BigInt` coefficients.
///
/// Invariant: the coefficient vector has no trailing zeros (the zero
/// polynomial is the empty vector).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct UniPoly {
    coeffs: Vec<BigInt>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly::default()
    }

    pub fn one() -> Self {
        UniPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        UniPoly::from_coeffs(vec![c])
    }

    /// The polynomial `x` (whatever the variable is called on display).
    pub fn var() -> Self {
        UniPoly::from_coeffs(vec![BigInt::zero(), BigInt::one()])
    }

    /// The single term `c * x^k`.
    pub fn monomial(k: usize, c: BigInt) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        UniPoly::from_coeffs(coeffs)
    }

    /// Build from `coeffs[k]` = coefficient of `x^k`, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the convention that the zero polynomial has degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coefficient(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Coefficients by ascending exponent (empty for the zero polynomial).
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|k| self.coefficient(k) + other.coefficient(k))
            .collect();
        UniPoly::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> UniPoly {
        if c.is_zero() {
            return UniPoly::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|v| v * c).collect(),
        }
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (a, ca) in self.coeffs.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (b, cb) in other.coeffs.iter().enumerate() {
                coeffs[a + b] += ca * cb;
            }
        }
        UniPoly::from_coeffs(coeffs)
    }

    pub fn pow(&self, exp: u32) -> UniPoly {
        let mut out = UniPoly::one();
        for _ in 0..exp {
            out = out.mul(self);
        }
        out
    }

    pub fn eval(&self, at: &Rational) -> Rational {
        // Horner, exact.
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at + Rational::from(c.clone());
        }
        acc
    }

    /// Composition `self(at)` by Horner's rule.
    pub fn compose(&self, at: &UniPoly) -> UniPoly {
        let mut acc = UniPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(at).add(&UniPoly::constant(c.clone()));
        }
        acc
    }

    /// Composition with a bivariate argument, e.g. `self(x + y)`.
    pub fn compose_bipoly(&self, at: &BiPoly) -> BiPoly {
        let mut acc = BiPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(at).add(&BiPoly::monomial(0, 0, c.clone()));
        }
        acc
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * BigInt::from(k))
            .collect();
        UniPoly::from_coeffs(coeffs)
    }

    /// JSON form: array of `[exponent, coefficient-as-decimal-string]` pairs,
    /// exponent descending, zero coefficients omitted.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.coeffs
                .iter()
                .enumerate()
                .rev()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| serde_json::json!([k, c.to_string()]))
                .collect(),
        )
    }

    /// Render with a custom variable name (the default `Display` uses `x`).
    pub fn display_with<'a>(&'a self, var: &'a str) -> impl fmt::Display + 'a {
        UniPolyDisplay { poly: self, var }
    }
}

struct UniPolyDisplay<'a> {
    poly: &'a UniPoly,
    var: &'a str,
}

impl fmt::Display for UniPolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.poly
                .coeffs
                .iter()
                .enumerate()
                .rev()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (vec![(self.var, k as u32)], c)),
        )
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with("x"))
    }
}

fn powers(base: &Rational, up_to: u32) -> Vec<Rational> {
    let mut out = Vec::with_capacity(up_to as usize + 1);
    out.push(Rational::one());
    for k in 1..=up_to as usize {
        let next = &out[k - 1] * base;
        out.push(next);
    }
    out
}

fn int_powers(base: &BigInt, up_to: u32) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(up_to as usize + 1);
    out.push(BigInt::one());
    for k in 1..=up_to as usize {
        let next = &out[k - 1] * base;
        out.push(next);
    }
    out
}

/// Binomial coefficient, exact.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Factorial, exact.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::str::FromStr;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    /// The running example polynomial: x^3 + 2x^2 + x + 2xy + y + y^2.
    fn sample() -> BiPoly {
        let mut p = BiPoly::zero();
        for &(i, j, c) in &[(3, 0, 1), (2, 0, 2), (1, 0, 1), (1, 1, 2), (0, 1, 1), (0, 2, 1)] {
            p = p.add(&BiPoly::monomial(i, j, big(c)));
        }
        p
    }

    #[test]
    fn canonical_text_ordering() {
        assert_eq!(sample().to_string(), "x^3 + 2*x^2 + x + 2*x*y + y + y^2");
        assert_eq!(BiPoly::zero().to_string(), "0");
        assert_eq!(BiPoly::one().to_string(), "1");
        let p = BiPoly::monomial(2, 0, big(1)).sub(&BiPoly::monomial(0, 0, big(3)));
        assert_eq!(p.to_string(), "x^2 - 3");
        let q = BiPoly::monomial(1, 1, big(-1));
        assert_eq!(q.to_string(), "-x*y");
    }

    #[test]
    fn unipoly_text() {
        let p = UniPoly::from_coeffs(vec![big(0), big(2), big(-3), big(1)]);
        assert_eq!(p.display_with("l").to_string(), "l^3 - 3*l^2 + 2*l");
        assert_eq!(UniPoly::zero().to_string(), "0");
        assert_eq!(UniPoly::constant(big(-4)).to_string(), "-4");
    }

    #[test]
    fn json_is_sorted_like_the_text() {
        let v = sample().to_json();
        assert_eq!(
            v,
            serde_json::json!([
                [3, 0, "1"],
                [2, 0, "2"],
                [1, 0, "1"],
                [1, 1, "2"],
                [0, 1, "1"],
                [0, 2, "1"]
            ])
        );
        let u = UniPoly::from_coeffs(vec![big(2), big(0), big(-1)]);
        assert_eq!(u.to_json(), serde_json::json!([[2, "-1"], [0, "2"]]));
    }

    #[test]
    fn eval_exact_rationals() {
        let p = sample();
        let two = Rational::from(big(2));
        assert_eq!(p.eval(&two, &two), Rational::from(big(32)));
        let x = Rational::from_str("1/2").unwrap();
        let y = Rational::from_str("-3/7").unwrap();
        // 1/8 + 1/2 + 1/2 + 2*(1/2)*(-3/7) + (-3/7) + 9/49
        let expected = Rational::from_str("1/8").unwrap()
            + Rational::from_str("1/2").unwrap()
            + Rational::from_str("1/2").unwrap()
            + Rational::from_str("-3/7").unwrap()
            + Rational::from_str("-3/7").unwrap()
            + Rational::from_str("9/49").unwrap();
        assert_eq!(p.eval(&x, &y), expected);
    }

    #[test]
    fn substitute_lines() {
        let p = sample();
        // y = 1: x^3 + 2x^2 + 3x + 2
        assert_eq!(
            p.substitute_line(&Line::Y(big(1))),
            UniPoly::from_coeffs(vec![big(2), big(3), big(2), big(1)])
        );
        // x = 1: y^2 + 3y + 4
        assert_eq!(
            p.substitute_line(&Line::X(big(1))),
            UniPoly::from_coeffs(vec![big(4), big(3), big(1)])
        );
        // x = y: t^3 + 2t^2 + t + 2t^2 + t + t^2 = t^3 + 5t^2 + 2t
        assert_eq!(
            p.substitute_line(&Line::Diagonal),
            UniPoly::from_coeffs(vec![big(0), big(2), big(5), big(1)])
        );
    }

    #[test]
    fn partial_derivatives_use_falling_factorials() {
        let p = BiPoly::monomial(3, 2, big(1));
        // d/dx: 3 x^2 y^2
        assert_eq!(p.partial_derivative(1, 0), BiPoly::monomial(2, 2, big(3)));
        // d^3/dx^2 dy: 3*2 * 2 x y = 12 x y
        assert_eq!(p.partial_derivative(2, 1), BiPoly::monomial(1, 1, big(12)));
        // Too many derivatives kill the term.
        assert_eq!(p.partial_derivative(4, 0), BiPoly::zero());
    }

    #[test]
    fn compose_and_shift() {
        // p(x) = x^2 + 1 composed at x + 1: x^2 + 2x + 2.
        let p = UniPoly::from_coeffs(vec![big(1), big(0), big(1)]);
        let shift = UniPoly::from_coeffs(vec![big(1), big(1)]);
        assert_eq!(
            p.compose(&shift),
            UniPoly::from_coeffs(vec![big(2), big(2), big(1)])
        );
        // Composed at x + y: (x+y)^2 + 1.
        let xy = BiPoly::x().add(&BiPoly::y());
        let expect = xy.mul(&xy).add(&BiPoly::one());
        assert_eq!(p.compose_bipoly(&xy), expect);
    }

    #[test]
    fn binomial_and_factorial() {
        assert_eq!(binomial(6, 3), big(20));
        assert_eq!(binomial(5, 0), big(1));
        assert_eq!(binomial(3, 5), big(0));
        assert_eq!(factorial(0), big(1));
        assert_eq!(factorial(6), big(720));
    }

    fn arb_bipoly() -> impl Strategy<Value = BiPoly> {
        prop::collection::vec(((0u32..5, 0u32..5), -6i64..=6), 0..8).prop_map(|terms| {
            let mut p = BiPoly::zero();
            for ((i, j), c) in terms {
                p = p.add(&BiPoly::monomial(i, j, big(c)));
            }
            p
        })
    }

    fn arb_point() -> impl Strategy<Value = Rational> {
        (-9i64..=9, 1i64..=9).prop_map(|(n, d)| Rational::new(big(n), big(d)))
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_bipoly(), b in arb_bipoly(), c in arb_bipoly()) {
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.sub(&a), BiPoly::zero());
        }

        #[test]
        fn eval_is_a_ring_homomorphism(
            a in arb_bipoly(),
            b in arb_bipoly(),
            x in arb_point(),
            y in arb_point(),
        ) {
            prop_assert_eq!(a.add(&b).eval(&x, &y), a.eval(&x, &y) + b.eval(&x, &y));
            prop_assert_eq!(a.mul(&b).eval(&x, &y), a.eval(&x, &y) * b.eval(&x, &y));
        }

        #[test]
        fn restriction_agrees_with_evaluation(a in arb_bipoly(), c in -4i64..=4, y in arb_point()) {
            let restricted = a.substitute_line(&Line::X(big(c)));
            let direct = a.eval(&Rational::from(big(c)), &y);
            prop_assert_eq!(restricted.eval(&y), direct);
            let diag = a.substitute_line(&Line::Diagonal);
            prop_assert_eq!(diag.eval(&y), a.eval(&y.clone(), &y));
        }

        #[test]
        fn no_zero_terms_survive(a in arb_bipoly(), b in arb_bipoly()) {
            let sum = a.add(&b);
            prop_assert!(sum.terms().iter().all(|(_, _, c)| !c.is_zero()));
        }
    }
}
