//! Sparse multivariate polynomials over an exact integer ring, Laurent
//! polynomials in the grading variable `v`, complete symmetric
//! polynomials and Demazure operators.
//!
//! The monomial order is lexicographic with `x_n > x_{n-1} > ... > x_1`:
//! two monomials are compared by the exponent of `x_n` first, then of
//! `x_{n-1}`, and so on. Every leading-term computation in the crate goes
//! through [`Monomial`]'s `Ord` impl.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Exponent vector of a monomial in `x_1..x_n`. Slot `i - 1` holds the
/// exponent of `x_i`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    /// The variable `x_i` (1-based).
    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i - 1] = 1;
        Monomial(e)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.0[i - 1]
    }

    /// Sum of exponents. The polynomial degree is twice this.
    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn degree(&self) -> i32 {
        2 * self.total() as i32
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, if exact.
    pub fn div_into(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect()))
    }

    /// Action of the simple transposition `s_i` on variables.
    pub fn swap(&self, i: usize) -> Monomial {
        let mut e = self.0.clone();
        e.swap(i - 1, i);
        Monomial(e)
    }

    /// Product `x_from * x_{from+1} * ... * x_to` (1-based, inclusive; empty if `to < from`).
    pub fn chain(n: usize, from: usize, to: usize) -> Monomial {
        let mut e = vec![0; n];
        for slot in e.iter_mut().take(to).skip(from.saturating_sub(1)) {
            *slot = 1;
        }
        Monomial(e)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.0.len(), other.0.len());
        for (a, b) in self.0.iter().rev().zip(other.0.iter().rev()) {
            match a.cmp(b) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

/// Sparse polynomial in `x_1..x_n` with no zero coefficients stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polynomial<C> {
    n: usize,
    terms: BTreeMap<Monomial, C>,
}

impl<C: Scalar> Polynomial<C> {
    pub fn zero(n: usize) -> Self {
        Polynomial { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, C::one())
    }

    pub fn constant(n: usize, c: C) -> Self {
        Self::term(Monomial::one(n), c)
    }

    pub fn term(m: Monomial, c: C) -> Self {
        let n = m.n();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { n, terms }
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, C::one())
    }

    pub fn var(n: usize, i: usize) -> Self {
        Self::monomial(Monomial::var(n, i))
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, C)>>(n: usize, it: I) -> Self {
        let mut p = Self::zero(n);
        for (m, c) in it {
            assert_eq!(m.n(), n, "monomial variable count");
            p.add_term(m, c);
        }
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &C)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().clone() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_n(other)?;
        let mut r = self.clone();
        for (m, c) in &other.terms {
            r.add_term(m.clone(), c.clone());
        }
        Ok(r)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_n(other)?;
        let mut r = Self::zero(self.n);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                r.add_term(m1.mul(m2), c1.clone() * c2.clone());
            }
        }
        Ok(r)
    }

    fn check_n(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::VariableCount(self.n, other.n));
        }
        Ok(())
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        Polynomial { n: self.n, terms: self.terms.iter().map(|(m, a)| (m.clone(), a.clone() * c.clone())).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Polynomial { n: self.n, terms: self.terms.iter().map(|(a, c)| (a.mul(m), c.clone())).collect() }
    }

    /// Action of `s_i`, swapping `x_i` and `x_{i+1}`.
    pub fn swap(&self, i: usize) -> Self {
        Self::from_terms(self.n, self.terms.iter().map(|(m, c)| (m.swap(i), c.clone())))
    }

    pub fn is_invariant(&self, i: usize) -> bool {
        self.swap(i) == *self
    }

    /// Degree with `deg x_i = 2`, if homogeneous and nonzero.
    pub fn homogeneous_degree(&self) -> Option<i32> {
        let mut it = self.terms.keys().map(|m| m.degree());
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    /// Demazure operator `(f - s_i f) / (x_i - x_{i+1})`.
    ///
    /// The quotient is formed term by term: for `x_i^a x_{i+1}^b` with
    /// `a > b` it is `(x_i x_{i+1})^b` times the complete symmetric
    /// polynomial of degree `a - b - 1` in `x_i, x_{i+1}`.
    pub fn demazure(&self, i: usize) -> Self {
        assert!(i >= 1 && i < self.n, "demazure index out of range");
        let mut r = Self::zero(self.n);
        for (m, c) in &self.terms {
            let a = m.0[i - 1];
            let b = m.0[i];
            if a == b {
                continue;
            }
            let (hi, lo, sign) = if a > b { (a, b, C::one()) } else { (b, a, -C::one()) };
            for t in 0..(hi - lo) {
                let mut e = m.0.clone();
                e[i - 1] = lo + (hi - lo - 1 - t);
                e[i] = lo + t;
                r.add_term(Monomial(e), c.clone() * sign.clone());
            }
        }
        r
    }

    /// `P_i(f) = f - x_i * d_i(f)`.
    pub fn p_operator(&self, i: usize) -> Self {
        let d = self.demazure(i).mul_monomial(&Monomial::var(self.n, i));
        self - &d
    }

    pub fn parse(s: &str, n: usize) -> Result<Self> {
        parse_polynomial(s, n)
    }
}

/// Complete symmetric polynomial `h_j` in the given (1-based) variables.
pub fn complete_symmetric<C: Scalar>(n: usize, j: u32, vars: &[usize]) -> Polynomial<C> {
    let mut p = Polynomial::zero(n);
    if j == 0 {
        return Polynomial::one(n);
    }
    if vars.is_empty() {
        return p;
    }
    let mut e = vec![0u32; n];
    fill_complete(&mut p, &mut e, vars, j);
    p
}

fn fill_complete<C: Scalar>(p: &mut Polynomial<C>, e: &mut Vec<u32>, vars: &[usize], left: u32) {
    if vars.len() == 1 {
        e[vars[0] - 1] += left;
        p.add_term(Monomial(e.clone()), C::one());
        e[vars[0] - 1] -= left;
        return;
    }
    for a in 0..=left {
        e[vars[0] - 1] += a;
        fill_complete(p, e, &vars[1..], left - a);
        e[vars[0] - 1] -= a;
    }
}

/// `h_j(x_1, ..., x_i)`.
pub fn h_initial<C: Scalar>(n: usize, j: u32, i: usize) -> Polynomial<C> {
    let vars: Vec<usize> = (1..=i).collect();
    complete_symmetric(n, j, &vars)
}

impl<C: Scalar> Add for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn add(self, rhs: Self) -> Polynomial<C> {
        self.try_add(rhs).expect("polynomial add")
    }
}

impl<C: Scalar> Sub for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn sub(self, rhs: Self) -> Polynomial<C> {
        self.try_add(&-rhs).expect("polynomial sub")
    }
}

impl<C: Scalar> Mul for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn mul(self, rhs: Self) -> Polynomial<C> {
        self.try_mul(rhs).expect("polynomial mul")
    }
}

impl<C: Scalar> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        Polynomial { n: self.n, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }
}

impl<C: Scalar> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            match (idx, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{}", a)?;
            } else if a.is_one() {
                write!(f, "{}", m)?;
            } else {
                write!(f, "{}*{}", a, m)?;
            }
        }
        Ok(())
    }
}

fn parse_polynomial<C: Scalar>(s: &str, n: usize) -> Result<Polynomial<C>> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut p = Polynomial::zero(n);
    let bytes = compact.as_bytes();
    let mut pos = 0;
    while pos < bytes.len() {
        let mut sign = C::one();
        if bytes[pos] == b'+' || bytes[pos] == b'-' {
            if bytes[pos] == b'-' {
                sign = -C::one();
            }
            pos += 1;
        } else if pos > 0 {
            return Err(Error::Parse(format!("expected sign at offset {pos} in {s:?}")));
        }
        let start = pos;
        while pos < bytes.len() && bytes[pos] != b'+' && bytes[pos] != b'-' {
            pos += 1;
        }
        let (m, c) = parse_term::<C>(&compact[start..pos], n)?;
        p.add_term(m, c * sign);
    }
    Ok(p)
}

fn parse_term<C: Scalar>(t: &str, n: usize) -> Result<(Monomial, C)> {
    if t.is_empty() {
        return Err(Error::Parse("empty term".into()));
    }
    let mut coeff = C::one();
    let mut e = vec![0u32; n];
    for factor in t.split('*') {
        if factor.is_empty() {
            return Err(Error::Parse(format!("empty factor in {t:?}")));
        }
        if let Some(rest) = factor.strip_prefix('x') {
            let (idx, pow) = match rest.split_once('^') {
                Some((a, b)) => (a, b.parse::<u32>().map_err(|_| Error::Parse(format!("bad exponent {b:?}")))?),
                None => (rest, 1),
            };
            let i: usize = idx.parse().map_err(|_| Error::Parse(format!("bad variable {factor:?}")))?;
            if i == 0 || i > n {
                return Err(Error::Parse(format!("variable x{i} outside x1..x{n}")));
            }
            e[i - 1] += pow;
        } else {
            let c = C::from_str_radix(factor, 10).map_err(|_| Error::Parse(format!("bad coefficient {factor:?}")))?;
            coeff = coeff * c;
        }
    }
    Ok((Monomial(e), coeff))
}

/// Laurent polynomial in `v` with exact coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Laurent<C> {
    coeffs: BTreeMap<i32, C>,
}

impl<C: Scalar> Default for Laurent<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Scalar> Laurent<C> {
    pub fn zero() -> Self {
        Laurent { coeffs: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::mono(0, C::one())
    }

    /// `c * v^e`.
    pub fn mono(e: i32, c: C) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(e, c);
        }
        Laurent { coeffs }
    }

    pub fn v_pow(e: i32) -> Self {
        Self::mono(e, C::one())
    }

    pub fn from_pairs<I: IntoIterator<Item = (i32, C)>>(it: I) -> Self {
        let mut l = Self::zero();
        for (e, c) in it {
            l.add_term(e, c);
        }
        l
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, e: i32) -> C {
        self.coeffs.get(&e).cloned().unwrap_or_else(C::zero)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, &C)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn add_term(&mut self, e: i32, c: C) {
        if c.is_zero() {
            return;
        }
        let s = self.coeff(e) + c;
        if s.is_zero() {
            self.coeffs.remove(&e);
        } else {
            self.coeffs.insert(e, s);
        }
    }

    pub fn bar(&self) -> Self {
        Laurent { coeffs: self.coeffs.iter().map(|(e, c)| (-e, c.clone())).collect() }
    }

    /// Multiply by `v^s`.
    pub fn shift(&self, s: i32) -> Self {
        Laurent { coeffs: self.coeffs.iter().map(|(e, c)| (e + s, c.clone())).collect() }
    }

    /// Substitute `v -> v^2`.
    pub fn at_v_squared(&self) -> Self {
        Laurent { coeffs: self.coeffs.iter().map(|(e, c)| (2 * e, c.clone())).collect() }
    }

    pub fn eval_one(&self) -> C {
        self.coeffs.values().fold(C::zero(), |a, c| a + c.clone())
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Laurent { coeffs: self.coeffs.iter().map(|(e, a)| (*e, a.clone() * c.clone())).collect() }
    }

    /// True if `v^s * f(v^-1) == f(v)`.
    pub fn is_palindromic(&self, s: i32) -> bool {
        self.bar().shift(s) == *self
    }

    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn parse(s: &str) -> Result<Self> {
        parse_laurent(s)
    }
}

impl<C: Scalar> Add for &Laurent<C> {
    type Output = Laurent<C>;
    fn add(self, rhs: Self) -> Laurent<C> {
        let mut r = self.clone();
        for (e, c) in &rhs.coeffs {
            r.add_term(*e, c.clone());
        }
        r
    }
}

impl<C: Scalar> Sub for &Laurent<C> {
    type Output = Laurent<C>;
    fn sub(self, rhs: Self) -> Laurent<C> {
        let mut r = self.clone();
        for (e, c) in &rhs.coeffs {
            r.add_term(*e, -c.clone());
        }
        r
    }
}

impl<C: Scalar> Mul for &Laurent<C> {
    type Output = Laurent<C>;
    fn mul(self, rhs: Self) -> Laurent<C> {
        let mut r = Laurent::zero();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &rhs.coeffs {
                r.add_term(e1 + e2, c1.clone() * c2.clone());
            }
        }
        r
    }
}

impl<C: Scalar> Neg for &Laurent<C> {
    type Output = Laurent<C>;
    fn neg(self) -> Laurent<C> {
        Laurent { coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c.clone())).collect() }
    }
}

impl<C: Scalar> fmt::Display for Laurent<C> {
    /// Ascending powers, e.g. `v^-2+2+v^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.coeffs.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if neg {
                write!(f, "-")?;
            } else if idx > 0 {
                write!(f, "+")?;
            }
            match (*e, a.is_one()) {
                (0, _) => write!(f, "{}", a)?,
                (1, true) => write!(f, "v")?,
                (1, false) => write!(f, "{}*v", a)?,
                (_, true) => write!(f, "v^{}", e)?,
                (_, false) => write!(f, "{}*v^{}", a, e)?,
            }
        }
        Ok(())
    }
}

fn parse_laurent<C: Scalar>(s: &str) -> Result<Laurent<C>> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Parse("empty Laurent polynomial".into()));
    }
    if compact == "0" {
        return Ok(Laurent::zero());
    }
    let bytes = compact.as_bytes();
    let mut r = Laurent::zero();
    let mut pos = 0;
    while pos < bytes.len() {
        let mut sign = C::one();
        if bytes[pos] == b'+' || bytes[pos] == b'-' {
            if bytes[pos] == b'-' {
                sign = -C::one();
            }
            pos += 1;
        } else if pos > 0 {
            return Err(Error::Parse(format!("expected sign in {s:?}")));
        }
        let start = pos;
        // a '-' right after '^' belongs to the exponent
        while pos < bytes.len() && !((bytes[pos] == b'+' || bytes[pos] == b'-') && bytes[pos - 1] != b'^') {
            pos += 1;
        }
        let term = &compact[start..pos];
        let (c, e) = parse_laurent_term::<C>(term)?;
        r.add_term(e, c * sign);
    }
    Ok(r)
}

fn parse_laurent_term<C: Scalar>(t: &str) -> Result<(C, i32)> {
    let bad = || Error::Parse(format!("bad Laurent term {t:?}"));
    let (coef, var) = match t.find('v') {
        None => return Ok((C::from_str_radix(t, 10).map_err(|_| bad())?, 0)),
        Some(i) => (&t[..i], &t[i..]),
    };
    let c = match coef.strip_suffix('*').unwrap_or(coef) {
        "" => C::one(),
        x => C::from_str_radix(x, 10).map_err(|_| bad())?,
    };
    let e = match var {
        "v" => 1,
        _ => var.strip_prefix("v^").ok_or_else(bad)?.parse::<i32>().map_err(|_| bad())?,
    };
    Ok((c, e))
}
