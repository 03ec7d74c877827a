//! Exact coefficient field for the symmetry catalog.
//!
//! Elements are rational functions over the rationals in one distinguished
//! indeterminate `z` (the square root of the deformation parameter, `q = z^2`)
//! and finitely many named free-coefficient indeterminates:
//!
//! - [`ZetaPoly`]: Laurent polynomial in `z` with ordinary (non-negative)
//!   powers of the named indeterminates and arbitrary-precision rational
//!   coefficients.
//! - [`QScalar`]: quotient of two [`ZetaPoly`] values with decidable equality
//!   by cross-multiplication.
//! - [`WeightConstant`]: the multiplicative subgroup `±(positive rational)·z^k`
//!   in which all catalog weight constants live.
//! - [`parse_scalar`]: expression parser for the textual scalar syntax used
//!   by documents and reports (`"(1 - z^4)/(z^2)"`, `"-1/2*a0^2*q"`, ...).
//!
//! Since `q` is not a root of unity, treating `z` as transcendental makes every
//! equality the catalog needs decidable. No floating point is used anywhere.

use num::{BigInt, BigRational, Integer, One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

/// Errors from scalar arithmetic and parsing.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ScalarError {
    /// Division or inversion with a zero divisor.
    #[error("division by zero scalar")]
    DivisionByZero,
    /// `z` and `q` are reserved for the deformation parameter.
    #[error("variable name `{0}` is reserved")]
    ReservedName(String),
    /// Variable names are identifiers: `[A-Za-z_][A-Za-z0-9_]*`.
    #[error("invalid variable name `{0}`")]
    InvalidName(String),
    /// Syntax error in a scalar expression.
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    /// A scalar that was required to be of weight-constant form
    /// `±(rational)·z^k` is not.
    #[error("scalar `{0}` is not of weight-constant form ±(rational)·z^k")]
    NotAWeightConstant(String),
}

/// Interned name of a free-coefficient indeterminate.
///
/// Ordered by the name string, so all term orderings and printed output are
/// independent of creation order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct VarName(Arc<str>);

impl VarName {
    /// Validates and creates a variable name. `z` and `q` are reserved.
    pub fn new(name: &str) -> Result<Self, ScalarError> {
        if name == "z" || name == "q" {
            return Err(ScalarError::ReservedName(name.to_string()));
        }
        let mut chars = name.chars();
        let head_ok = chars
            .next()
            .is_some_and(|c| c.is_ascii_alphabetic() || c == '_');
        if !head_ok || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
            return Err(ScalarError::InvalidName(name.to_string()));
        }
        Ok(VarName(Arc::from(name)))
    }

    /// The name as a string slice.
    pub fn name(&self) -> &str {
        &self.0
    }
}

/// Multi-exponent of one term: a (possibly negative) power of `z` and
/// non-negative powers of named indeterminates, sorted by name.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Default)]
pub struct Monomial {
    zeta: i64,
    vars: Vec<(VarName, u32)>,
}

impl Monomial {
    fn one() -> Self {
        Monomial::default()
    }

    fn zeta(k: i64) -> Self {
        Monomial { zeta: k, vars: Vec::new() }
    }

    fn var(name: VarName) -> Self {
        Monomial { zeta: 0, vars: vec![(name, 1)] }
    }

    /// Power of `z` in this term.
    pub fn zeta_exponent(&self) -> i64 {
        self.zeta
    }

    /// Named-indeterminate factors `(name, power)`, power > 0, sorted by name.
    pub fn vars(&self) -> &[(VarName, u32)] {
        &self.vars
    }

    /// True when the term is a pure power of `z` (no named indeterminates).
    pub fn is_var_free(&self) -> bool {
        self.vars.is_empty()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let mut vars = Vec::with_capacity(self.vars.len() + other.vars.len());
        let (mut a, mut b) = (self.vars.iter().peekable(), other.vars.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((na, pa)), Some((nb, pb))) => match na.cmp(nb) {
                    std::cmp::Ordering::Less => {
                        vars.push((na.clone(), *pa));
                        a.next();
                    }
                    std::cmp::Ordering::Greater => {
                        vars.push((nb.clone(), *pb));
                        b.next();
                    }
                    std::cmp::Ordering::Equal => {
                        vars.push((na.clone(), pa + pb));
                        a.next();
                        b.next();
                    }
                },
                (Some(_), None) => {
                    vars.extend(a.by_ref().cloned());
                    break;
                }
                (None, Some(_)) => {
                    vars.extend(b.by_ref().cloned());
                    break;
                }
                (None, None) => break,
            }
        }
        Monomial { zeta: self.zeta + other.zeta, vars }
    }
}

/// Laurent polynomial in `z` with polynomial powers of named indeterminates.
///
/// Terms are kept in a sorted map from [`Monomial`] to a nonzero rational
/// coefficient, so structural equality is term-map equality.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ZetaPoly {
    terms: BTreeMap<Monomial, BigRational>,
}

impl ZetaPoly {
    /// The zero polynomial (empty term map).
    pub fn zero() -> Self {
        ZetaPoly::default()
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        ZetaPoly::constant(BigRational::one())
    }

    /// A constant polynomial.
    pub fn constant(c: BigRational) -> Self {
        let mut p = ZetaPoly::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    /// The constant polynomial for an integer.
    pub fn from_int(n: i64) -> Self {
        ZetaPoly::constant(BigRational::from_integer(BigInt::from(n)))
    }

    /// The monomial `z^k`.
    pub fn zeta_pow(k: i64) -> Self {
        let mut p = ZetaPoly::zero();
        p.add_term(Monomial::zeta(k), BigRational::one());
        p
    }

    /// The monomial `q^k = z^{2k}`.
    pub fn q_pow(k: i64) -> Self {
        ZetaPoly::zeta_pow(2 * k)
    }

    /// A named free-coefficient indeterminate.
    pub fn var(name: &str) -> Result<Self, ScalarError> {
        let v = VarName::new(name)?;
        let mut p = ZetaPoly::zero();
        p.add_term(Monomial::var(v), BigRational::one());
        Ok(p)
    }

    /// True iff this is the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True iff this is the constant polynomial 1.
    pub fn is_one(&self) -> bool {
        self.single_term()
            .is_some_and(|(m, c)| *m == Monomial::one() && c.is_one())
    }

    /// Iterator over `(monomial, coefficient)` pairs in term order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    /// The unique term of a monomial polynomial, if there is exactly one.
    pub fn single_term(&self) -> Option<(&Monomial, &BigRational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn neg_inplace(&mut self) {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
    }

    fn scale(&self, c: &BigRational) -> ZetaPoly {
        if c.is_zero() {
            return ZetaPoly::zero();
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, k)| (m.clone(), k * c))
            .collect();
        ZetaPoly { terms }
    }

    fn mul_zeta(&self, shift: i64) -> ZetaPoly {
        if shift == 0 {
            return self.clone();
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut m = m.clone();
                m.zeta += shift;
                (m, c.clone())
            })
            .collect();
        ZetaPoly { terms }
    }

    fn min_zeta_exp(&self) -> i64 {
        self.terms
            .keys()
            .map(|m| m.zeta)
            .min()
            .unwrap_or(0)
    }

    /// Per-variable minimum power over all terms (empty for the zero poly).
    fn var_content(&self) -> BTreeMap<VarName, u32> {
        let mut iter = self.terms.keys();
        let Some(first) = iter.next() else {
            return BTreeMap::new();
        };
        let mut content: BTreeMap<VarName, u32> =
            first.vars.iter().cloned().collect();
        for m in iter {
            if content.is_empty() {
                break;
            }
            let present: BTreeMap<&VarName, u32> =
                m.vars.iter().map(|(v, p)| (v, *p)).collect();
            content.retain(|v, p| match present.get(v) {
                Some(q) => {
                    *p = (*p).min(*q);
                    true
                }
                None => false,
            });
        }
        content
    }

    fn div_var_mono(&self, content: &BTreeMap<VarName, u32>) -> ZetaPoly {
        if content.is_empty() {
            return self.clone();
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let vars = m
                    .vars
                    .iter()
                    .filter_map(|(v, p)| {
                        let q = p - content.get(v).copied().unwrap_or(0);
                        (q > 0).then(|| (v.clone(), q))
                    })
                    .collect();
                (Monomial { zeta: m.zeta, vars }, c.clone())
            })
            .collect();
        ZetaPoly { terms }
    }

    /// Positive rational `gcd(numerators)/lcm(denominators)` of the
    /// coefficients; dividing by it leaves coprime integer coefficients.
    fn rational_content(&self) -> BigRational {
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        if num_gcd.is_zero() {
            BigRational::one()
        } else {
            BigRational::new(num_gcd, den_lcm)
        }
    }

    fn leading_coeff_is_negative(&self) -> bool {
        self.terms
            .values()
            .next()
            .is_some_and(|c| c.is_negative())
    }
}

impl std::ops::Add for &ZetaPoly {
    type Output = ZetaPoly;
    fn add(self, rhs: &ZetaPoly) -> ZetaPoly {
        let mut out = self.clone();
        for (m, c) in rhs.terms.iter() {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl std::ops::Sub for &ZetaPoly {
    type Output = ZetaPoly;
    fn sub(self, rhs: &ZetaPoly) -> ZetaPoly {
        let mut out = self.clone();
        for (m, c) in rhs.terms.iter() {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl std::ops::Neg for &ZetaPoly {
    type Output = ZetaPoly;
    fn neg(self) -> ZetaPoly {
        let mut out = self.clone();
        out.neg_inplace();
        out
    }
}

impl std::ops::Mul for &ZetaPoly {
    type Output = ZetaPoly;
    fn mul(self, rhs: &ZetaPoly) -> ZetaPoly {
        let mut out = ZetaPoly::zero();
        for (m1, c1) in self.terms.iter() {
            for (m2, c2) in rhs.terms.iter() {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for ZetaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = c.abs();
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || (m.zeta == 0 && m.vars.is_empty()) {
                factors.push(abs.to_string());
            }
            match m.zeta {
                0 => {}
                1 => factors.push("z".to_string()),
                k => factors.push(format!("z^{k}")),
            }
            for (v, p) in &m.vars {
                if *p == 1 {
                    factors.push(v.name().to_string());
                } else {
                    factors.push(format!("{}^{}", v.name(), p));
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

/// Element of the exact field of rational functions in `z` and the named
/// free coefficients.
///
/// Stored as a numerator/denominator pair of [`ZetaPoly`] values. Equality is
/// mathematical (cross-multiplication), never by multivariate gcd; after the
/// lightweight normalization applied on every construction, representatives
/// with monomial denominators are unique, and in particular a [`QScalar`] is
/// zero exactly when its numerator is the zero polynomial.
#[derive(Clone, Debug)]
pub struct QScalar {
    num: ZetaPoly,
    den: ZetaPoly,
}

impl QScalar {
    fn normalized(num: ZetaPoly, den: ZetaPoly) -> QScalar {
        debug_assert!(!den.is_zero(), "denominator must be nonzero");
        if num.is_zero() {
            return QScalar { num: ZetaPoly::zero(), den: ZetaPoly::one() };
        }
        let shift = den.min_zeta_exp();
        let (mut num, mut den) = if shift != 0 {
            (num.mul_zeta(-shift), den.mul_zeta(-shift))
        } else {
            (num, den)
        };
        let mut content = den.var_content();
        let num_content = num.var_content();
        content.retain(|v, p| match num_content.get(v) {
            Some(q) => {
                *p = (*p).min(*q);
                *p > 0
            }
            None => false,
        });
        if !content.is_empty() {
            num = num.div_var_mono(&content);
            den = den.div_var_mono(&content);
        }
        let mut c = den.rational_content();
        if den.leading_coeff_is_negative() {
            c = -c;
        }
        if !c.is_one() {
            let inv = c.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        QScalar { num, den }
    }

    /// Builds a fraction from explicit numerator and denominator.
    pub fn from_parts(num: ZetaPoly, den: ZetaPoly) -> Result<QScalar, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(QScalar::normalized(num, den))
    }

    /// The zero scalar.
    pub fn zero() -> QScalar {
        QScalar { num: ZetaPoly::zero(), den: ZetaPoly::one() }
    }

    /// The scalar 1.
    pub fn one() -> QScalar {
        QScalar { num: ZetaPoly::one(), den: ZetaPoly::one() }
    }

    /// An integer scalar.
    pub fn from_int(n: i64) -> QScalar {
        QScalar { num: ZetaPoly::from_int(n), den: ZetaPoly::one() }
    }

    /// An exact rational scalar.
    pub fn from_rational(c: BigRational) -> QScalar {
        QScalar::normalized(ZetaPoly::constant(c), ZetaPoly::one())
    }

    /// The monomial `z^k`.
    pub fn zeta_pow(k: i64) -> QScalar {
        QScalar { num: ZetaPoly::zeta_pow(k), den: ZetaPoly::one() }
    }

    /// The monomial `q^k = z^{2k}`.
    pub fn q_pow(k: i64) -> QScalar {
        QScalar::zeta_pow(2 * k)
    }

    /// A named free-coefficient indeterminate as a scalar.
    pub fn var(name: &str) -> Result<QScalar, ScalarError> {
        Ok(QScalar { num: ZetaPoly::var(name)?, den: ZetaPoly::one() })
    }

    /// Numerator polynomial.
    pub fn num(&self) -> &ZetaPoly {
        &self.num
    }

    /// Denominator polynomial (never zero).
    pub fn den(&self) -> &ZetaPoly {
        &self.den
    }

    /// True iff the scalar is zero (structurally: zero numerator).
    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// True iff the scalar equals 1.
    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    /// Exact division; errors on a zero divisor.
    pub fn div(&self, rhs: &QScalar) -> Result<QScalar, ScalarError> {
        if rhs.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(QScalar::normalized(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inverse(&self) -> Result<QScalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(QScalar::normalized(self.den.clone(), self.num.clone()))
    }

    /// Integer power; a negative exponent inverts first (errors on zero base).
    pub fn pow(&self, n: i64) -> Result<QScalar, ScalarError> {
        let base = if n < 0 { self.inverse()? } else { self.clone() };
        let mut out = QScalar::one();
        for _ in 0..n.unsigned_abs() {
            out = &out * &base;
        }
        Ok(out)
    }

    /// Structural equality of the stored representations (term maps of both
    /// numerator and denominator). Mathematical equality is `==`.
    pub fn eq_structural(&self, rhs: &QScalar) -> bool {
        self.num == rhs.num && self.den == rhs.den
    }
}

impl Default for QScalar {
    fn default() -> Self {
        QScalar::zero()
    }
}

/// Mathematical equality by cross-multiplication:
/// `n1/d1 = n2/d2` iff `n1·d2 − n2·d1 = 0` as a polynomial.
impl PartialEq for QScalar {
    fn eq(&self, rhs: &QScalar) -> bool {
        if self.eq_structural(rhs) {
            return true;
        }
        &self.num * &rhs.den == &rhs.num * &self.den
    }
}

impl Eq for QScalar {}

/// Decides equality of two scalars by cross-multiplication.
pub fn scalar_eq(a: &QScalar, b: &QScalar) -> bool {
    a == b
}

impl std::ops::Add for &QScalar {
    type Output = QScalar;
    fn add(self, rhs: &QScalar) -> QScalar {
        if self.den == rhs.den {
            return QScalar::normalized(&self.num + &rhs.num, self.den.clone());
        }
        QScalar::normalized(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl std::ops::Sub for &QScalar {
    type Output = QScalar;
    fn sub(self, rhs: &QScalar) -> QScalar {
        if self.den == rhs.den {
            return QScalar::normalized(&self.num - &rhs.num, self.den.clone());
        }
        QScalar::normalized(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl std::ops::Mul for &QScalar {
    type Output = QScalar;
    fn mul(self, rhs: &QScalar) -> QScalar {
        if self.is_zero() || rhs.is_zero() {
            return QScalar::zero();
        }
        QScalar::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl std::ops::Neg for &QScalar {
    type Output = QScalar;
    fn neg(self) -> QScalar {
        QScalar { num: -&self.num, den: self.den.clone() }
    }
}

impl fmt::Display for QScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl std::str::FromStr for QScalar {
    type Err = ScalarError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_scalar(s)
    }
}

/// Scalar of the form `sign · rational_part · z^k` with `rational_part > 0`.
///
/// All weight constants in the catalog are of this form; the class is closed
/// under product, inverse, and integer powers, which is what makes weight
/// relations like `α^r β^s = 1` exactly decidable.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightConstant {
    negative: bool,
    rational: BigRational,
    zeta_exp: i64,
}

impl WeightConstant {
    /// Builds `rational · z^k` from a nonzero rational (the sign is split off
    /// into the sign component automatically).
    pub fn new(rational: BigRational, zeta_exp: i64) -> Result<Self, ScalarError> {
        if rational.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(WeightConstant {
            negative: rational.is_negative(),
            rational: rational.abs(),
            zeta_exp,
        })
    }

    /// The constant 1.
    pub fn one() -> Self {
        WeightConstant { negative: false, rational: BigRational::one(), zeta_exp: 0 }
    }

    /// The constant −1.
    pub fn minus_one() -> Self {
        WeightConstant { negative: true, rational: BigRational::one(), zeta_exp: 0 }
    }

    /// The constant `z^k`.
    pub fn zeta_pow(k: i64) -> Self {
        WeightConstant { negative: false, rational: BigRational::one(), zeta_exp: k }
    }

    /// The constant `q^k = z^{2k}`.
    pub fn q_pow(k: i64) -> Self {
        WeightConstant::zeta_pow(2 * k)
    }

    /// The constant `(−1)^e`.
    pub fn sign_pow(e: i64) -> Self {
        if e.rem_euclid(2) == 1 {
            WeightConstant::minus_one()
        } else {
            WeightConstant::one()
        }
    }

    /// Sign component: `+1` or `−1`.
    pub fn sign(&self) -> i8 {
        if self.negative {
            -1
        } else {
            1
        }
    }

    /// Positive rational component.
    pub fn rational_part(&self) -> &BigRational {
        &self.rational
    }

    /// Exponent of `z`.
    pub fn zeta_exponent(&self) -> i64 {
        self.zeta_exp
    }

    /// True iff the constant is 1.
    pub fn is_one(&self) -> bool {
        !self.negative && self.rational.is_one() && self.zeta_exp == 0
    }

    /// Componentwise product.
    pub fn mul(&self, rhs: &WeightConstant) -> WeightConstant {
        WeightConstant {
            negative: self.negative != rhs.negative,
            rational: &self.rational * &rhs.rational,
            zeta_exp: self.zeta_exp + rhs.zeta_exp,
        }
    }

    /// Multiplicative inverse (always defined: the class excludes zero).
    pub fn inv(&self) -> WeightConstant {
        WeightConstant {
            negative: self.negative,
            rational: self.rational.recip(),
            zeta_exp: -self.zeta_exp,
        }
    }

    /// Componentwise integer power: `sign^n`, `rational^n`, `n·zeta_exp`.
    pub fn pow(&self, n: i64) -> WeightConstant {
        let n32 = i32::try_from(n).expect("weight-constant exponent fits in i32");
        WeightConstant {
            negative: self.negative && n.rem_euclid(2) == 1,
            rational: num::pow::Pow::pow(&self.rational, n32),
            zeta_exp: self.zeta_exp * n,
        }
    }

    /// Embeds the constant into the scalar field.
    pub fn to_scalar(&self) -> QScalar {
        let mut c = self.rational.clone();
        if self.negative {
            c = -c;
        }
        QScalar::normalized(
            ZetaPoly::constant(c).mul_zeta(self.zeta_exp),
            ZetaPoly::one(),
        )
    }

    /// Extracts a weight constant from a scalar of the form
    /// `±(rational)·z^k`; errors on anything else.
    pub fn try_from_scalar(s: &QScalar) -> Result<WeightConstant, ScalarError> {
        let not_wc = || ScalarError::NotAWeightConstant(s.to_string());
        if !s.den.is_one() {
            return Err(not_wc());
        }
        let (m, c) = s.num.single_term().ok_or_else(not_wc)?;
        if !m.is_var_free() {
            return Err(not_wc());
        }
        WeightConstant::new(c.clone(), m.zeta_exponent())
    }
}

/// Componentwise integer power of a weight constant.
pub fn weight_pow(w: &WeightConstant, n: i64) -> WeightConstant {
    w.pow(n)
}

impl fmt::Display for WeightConstant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_scalar())
    }
}

/// Parses the textual scalar syntax.
///
/// Grammar (whitespace-insensitive):
///
/// ```text
/// expr   := ['-'] term (('+' | '-') term)*
/// term   := factor (('*' | '/') factor)*
/// factor := atom ['^' ['-'] integer]
/// atom   := integer | 'z' | 'q' | identifier | '(' expr ')'
/// ```
///
/// `z` is the square root of `q`; any other identifier is a free-coefficient
/// indeterminate. All arithmetic is exact; `/` is exact field division.
pub fn parse_scalar(input: &str) -> Result<QScalar, ScalarError> {
    let mut p = Parser { bytes: input.as_bytes(), pos: 0 };
    let value = p.expr()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(value)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> ScalarError {
        ScalarError::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.bytes.get(self.pos).is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek()?;
        self.pos += 1;
        Some(b)
    }

    fn expr(&mut self) -> Result<QScalar, ScalarError> {
        let mut acc = if self.peek() == Some(b'-') {
            self.bump();
            -&self.term()?
        } else {
            self.term()?
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<QScalar, ScalarError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.bump();
                    acc = &acc * &self.factor()?;
                }
                Some(b'/') => {
                    self.bump();
                    acc = acc.div(&self.factor()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<QScalar, ScalarError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.bump();
            let negative = if self.peek() == Some(b'-') {
                self.bump();
                true
            } else {
                false
            };
            let digits = self.digits()?;
            let exp: i64 = digits
                .parse()
                .map_err(|_| self.err("exponent out of range"))?;
            let exp = if negative { -exp } else { exp };
            return base.pow(exp).map_err(|_| self.err("zero base with negative exponent"));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<QScalar, ScalarError> {
        match self.peek() {
            Some(b'(') => {
                self.bump();
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.bump();
                Ok(inner)
            }
            Some(b) if b.is_ascii_digit() => {
                let digits = self.digits()?;
                let n: BigInt = digits
                    .parse()
                    .expect("digit string parses as an integer");
                Ok(QScalar::from_rational(BigRational::from_integer(n)))
            }
            Some(b) if b.is_ascii_alphabetic() || b == b'_' => {
                let name = self.ident();
                match name.as_str() {
                    "z" => Ok(QScalar::zeta_pow(1)),
                    "q" => Ok(QScalar::q_pow(1)),
                    _ => QScalar::var(&name),
                }
            }
            _ => Err(self.err("expected a number, identifier, or `(`")),
        }
    }

    fn digits(&mut self) -> Result<String, ScalarError> {
        self.skip_ws();
        let start = self.pos;
        while self.bytes.get(self.pos).is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected digits"));
        }
        Ok(String::from_utf8_lossy(&self.bytes[start..self.pos]).into_owned())
    }

    fn ident(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_alphanumeric() || *b == b'_')
        {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.bytes[start..self.pos]).into_owned()
    }
}
