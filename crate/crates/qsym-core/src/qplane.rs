//! The noncommutative Laurent ring C_q[x^{±1}, y^{±1}] and its symmetries.
//!
//! - [`LaurentPoly`]: finite sums Σ c_{ij} x^i y^j in the normal form with all
//!   x-powers written left of y-powers; multiplication uses `yx = qxy`.
//! - [`Sl2z`] / [`IntMat2`]: unimodular and general integer 2×2 matrices.
//! - [`AutomorphismSpec`]: the torus automorphism φ_{σ,μ,ν} with
//!   `x ↦ μ x^k y^m`, `y ↦ ν x^l y^n` for σ = (k m; l n) in SL(2,Z).
//! - [`WeightPair`] and the weight machinery: monomial weights `α^i β^j` and
//!   the action of integer matrices on weight pairs.

use crate::scalar::{QScalar, ScalarError, WeightConstant};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

/// Errors from ring and automorphism construction.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum QPlaneError {
    /// Inversion of something that is not a single-term polynomial.
    #[error("only single-term polynomials are invertible; got {0} terms")]
    NonMonomial(usize),
    /// The zero polynomial has no weight.
    #[error("the zero polynomial has no weight")]
    ZeroPolynomial,
    /// A matrix that must lie in SL(2,Z) has determinant != 1.
    #[error("matrix has determinant {0}, expected 1")]
    NotUnimodular(i64),
    /// Automorphism scale factors must be nonzero.
    #[error("automorphism scale factor {0} must be nonzero")]
    ZeroScale(&'static str),
    /// Underlying scalar failure.
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// Laurent polynomial Σ c_{ij} x^i y^j in x-before-y normal form.
///
/// Coefficients are exact scalars; zero coefficients are never stored, and two
/// values are equal when their term supports coincide and corresponding
/// coefficients are equal in the scalar field.
#[derive(Clone, Debug, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<(i64, i64), QScalar>,
}

impl LaurentPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    /// The unit polynomial 1.
    pub fn one() -> Self {
        LaurentPoly::monomial(QScalar::one(), 0, 0)
    }

    /// The single term `c·x^i·y^j`.
    pub fn monomial(c: QScalar, i: i64, j: i64) -> Self {
        let mut p = LaurentPoly::zero();
        p.add_term(c, i, j);
        p
    }

    /// The generator `x`.
    pub fn x() -> Self {
        LaurentPoly::monomial(QScalar::one(), 1, 0)
    }

    /// The generator `y`.
    pub fn y() -> Self {
        LaurentPoly::monomial(QScalar::one(), 0, 1)
    }

    /// True iff the polynomial is zero.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored (nonzero) terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Iterator over `((i, j), coefficient)` pairs in lexicographic key order.
    pub fn terms(&self) -> impl Iterator<Item = (&(i64, i64), &QScalar)> {
        self.terms.iter()
    }

    /// Coefficient of `x^i y^j` (zero when absent).
    pub fn coeff(&self, i: i64, j: i64) -> QScalar {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(QScalar::zero)
    }

    /// The unique term of a single-term polynomial.
    pub fn single_term(&self) -> Option<(&QScalar, i64, i64)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(&(i, j), c)| (c, i, j))
        } else {
            None
        }
    }

    /// Adds `c·x^i·y^j` in place, dropping the term if it cancels to zero.
    pub fn add_term(&mut self, c: QScalar, i: i64, j: i64) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((i, j)) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = &*e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Multiplies every coefficient by `c`.
    pub fn scalar_mul(&self, c: &QScalar) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        let mut out = LaurentPoly::zero();
        for (&(i, j), k) in self.terms.iter() {
            out.add_term(c * k, i, j);
        }
        out
    }

    /// Left multiplication by a single term: `(c·x^i·y^j) · self`.
    pub fn mul_term_left(&self, c: &QScalar, i: i64, j: i64) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        if c.is_zero() {
            return out;
        }
        for (&(i2, j2), c2) in self.terms.iter() {
            let scale = &QScalar::q_pow(j * i2) * c;
            out.add_term(&scale * c2, i + i2, j + j2);
        }
        out
    }

    /// Right multiplication by a single term: `self · (c·x^i·y^j)`.
    pub fn mul_term_right(&self, c: &QScalar, i: i64, j: i64) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        if c.is_zero() {
            return out;
        }
        for (&(i1, j1), c1) in self.terms.iter() {
            let scale = &QScalar::q_pow(j1 * i) * c;
            out.add_term(c1 * &scale, i1 + i, j1 + j);
        }
        out
    }

    /// Inverse of a single-term polynomial:
    /// `(c x^i y^j)^{-1} = c^{-1} q^{ij} x^{-i} y^{-j}`.
    pub fn mono_inverse(&self) -> Result<LaurentPoly, QPlaneError> {
        let (c, i, j) = self
            .single_term()
            .ok_or(QPlaneError::NonMonomial(self.terms.len()))?;
        let inv = c.inverse().expect("stored coefficients are nonzero");
        let coeff = &inv * &QScalar::q_pow(i * j);
        Ok(LaurentPoly::monomial(coeff, -i, -j))
    }

    /// Integer power of a single-term polynomial, in closed form:
    /// `(c x^i y^j)^p = c^p q^{ij·p(p-1)/2} x^{ip} y^{jp}` for `p ≥ 0`,
    /// and the inverse of the positive power for `p < 0`.
    pub fn mono_pow(&self, p: i64) -> Result<LaurentPoly, QPlaneError> {
        let (c, i, j) = self
            .single_term()
            .ok_or(QPlaneError::NonMonomial(self.terms.len()))?;
        if p == 0 {
            return Ok(LaurentPoly::one());
        }
        let m = p.abs();
        let cp = c.pow(m).expect("stored coefficients are nonzero");
        let twist = QScalar::q_pow(i * j * (m * (m - 1) / 2));
        let positive = LaurentPoly::monomial(&cp * &twist, i * m, j * m);
        if p > 0 {
            Ok(positive)
        } else {
            positive.mono_inverse()
        }
    }
}

/// Equality is termwise: same support, scalar-equal coefficients.
impl PartialEq for LaurentPoly {
    fn eq(&self, rhs: &LaurentPoly) -> bool {
        self.terms.len() == rhs.terms.len()
            && self
                .terms
                .iter()
                .all(|(k, c)| rhs.terms.get(k).is_some_and(|d| c == d))
    }
}

impl Eq for LaurentPoly {}

impl std::ops::Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&(i, j), c) in rhs.terms.iter() {
            out.add_term(c.clone(), i, j);
        }
        out
    }
}

impl std::ops::Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&(i, j), c) in rhs.terms.iter() {
            out.add_term(-c, i, j);
        }
        out
    }
}

impl std::ops::Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&(i, j), c) in self.terms.iter() {
            out.add_term(-c, i, j);
        }
        out
    }
}

/// Product in the quantum torus: bilinear extension of
/// `(x^{i1} y^{j1})(x^{i2} y^{j2}) = q^{j1·i2} x^{i1+i2} y^{j1+j2}`.
impl std::ops::Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&(i1, j1), c1) in self.terms.iter() {
            for (&(i2, j2), c2) in rhs.terms.iter() {
                let c = &(c1 * c2) * &QScalar::q_pow(j1 * i2);
                out.add_term(c, i1 + i2, j1 + j2);
            }
        }
        out
    }
}

/// Product of two Laurent polynomials (operation form of `&a * &b`).
pub fn poly_mul(p: &LaurentPoly, r: &LaurentPoly) -> LaurentPoly {
    p * r
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(i, j), c) in self.terms.iter() {
            let mut piece = String::new();
            let minus_one = (-c).is_one();
            let coeff = if c.is_one() || minus_one {
                if minus_one {
                    piece.push('-');
                }
                (i, j) == (0, 0)
            } else {
                let text = c.to_string();
                let needs_parens =
                    c.den().is_one() && c.num().terms().count() > 1;
                if needs_parens {
                    piece.push('(');
                    piece.push_str(&text);
                    piece.push(')');
                } else {
                    piece.push_str(&text);
                }
                true
            };
            let mut factors: Vec<String> = Vec::new();
            if coeff && piece != "-" && !piece.is_empty() {
                factors.push(std::mem::take(&mut piece));
            }
            if (i, j) == (0, 0) && factors.is_empty() && piece != "-" {
                factors.push("1".to_string());
            }
            match i {
                0 => {}
                1 => factors.push("x".to_string()),
                _ => factors.push(format!("x^{i}")),
            }
            match j {
                0 => {}
                1 => factors.push("y".to_string()),
                _ => factors.push(format!("y^{j}")),
            }
            if (i, j) == (0, 0) && factors.is_empty() {
                factors.push("1".to_string());
            }
            let body = format!("{}{}", piece, factors.join("*"));
            if first {
                write!(f, "{body}")?;
                first = false;
            } else if let Some(rest) = body.strip_prefix('-') {
                write!(f, " - {rest}")?;
            } else {
                write!(f, " + {body}")?;
            }
        }
        Ok(())
    }
}

/// Element σ = (k m; l n) of SL(2,Z): `kn − ml = 1`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct Sl2z {
    k: i64,
    m: i64,
    l: i64,
    n: i64,
}

impl Sl2z {
    /// Validates the determinant and builds the matrix (row-major k, m, l, n).
    pub fn new(k: i64, m: i64, l: i64, n: i64) -> Result<Self, QPlaneError> {
        let det = k * n - m * l;
        if det != 1 {
            return Err(QPlaneError::NotUnimodular(det));
        }
        Ok(Sl2z { k, m, l, n })
    }

    /// The identity matrix.
    pub fn identity() -> Self {
        Sl2z { k: 1, m: 0, l: 0, n: 1 }
    }

    /// The matrix −I.
    pub fn minus_identity() -> Self {
        Sl2z { k: -1, m: 0, l: 0, n: -1 }
    }

    /// Entries in row-major order `(k, m, l, n)`.
    pub fn entries(&self) -> (i64, i64, i64, i64) {
        (self.k, self.m, self.l, self.n)
    }

    /// Matrix inverse `(n −m; −l k)`.
    pub fn inverse(&self) -> Sl2z {
        Sl2z { k: self.n, m: -self.m, l: -self.l, n: self.k }
    }

    /// Matrix product `self · rhs`.
    pub fn mul(&self, rhs: &Sl2z) -> Sl2z {
        Sl2z {
            k: self.k * rhs.k + self.m * rhs.l,
            m: self.k * rhs.m + self.m * rhs.n,
            l: self.l * rhs.k + self.n * rhs.l,
            n: self.l * rhs.m + self.n * rhs.n,
        }
    }

    /// The same matrix as an unconstrained integer matrix.
    pub fn as_mat(&self) -> IntMat2 {
        IntMat2::new(self.k, self.m, self.l, self.n)
    }
}

impl fmt::Display for Sl2z {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {}; {} {})", self.k, self.m, self.l, self.n)
    }
}

/// General integer 2×2 matrix (a b; c d), no determinant constraint.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct IntMat2 {
    a: i64,
    b: i64,
    c: i64,
    d: i64,
}

impl IntMat2 {
    /// Row-major constructor.
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Self {
        IntMat2 { a, b, c, d }
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> (i64, i64, i64, i64) {
        (self.a, self.b, self.c, self.d)
    }

    /// Determinant `ad − bc`.
    pub fn det(&self) -> i64 {
        self.a * self.d - self.b * self.c
    }

    /// Matrix product `self · rhs`.
    pub fn mul(&self, rhs: &IntMat2) -> IntMat2 {
        IntMat2 {
            a: self.a * rhs.a + self.b * rhs.c,
            b: self.a * rhs.b + self.b * rhs.d,
            c: self.c * rhs.a + self.d * rhs.c,
            d: self.c * rhs.b + self.d * rhs.d,
        }
    }
}

/// Pair (α, β) of weight constants, both nonzero by construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightPair {
    /// Weight of `x` under `k`.
    pub alpha: WeightConstant,
    /// Weight of `y` under `k`.
    pub beta: WeightConstant,
}

impl WeightPair {
    /// Builds the pair.
    pub fn new(alpha: WeightConstant, beta: WeightConstant) -> Self {
        WeightPair { alpha, beta }
    }

    /// The weight `α^i β^j` of the monomial `x^i y^j`.
    pub fn monomial_weight(&self, i: i64, j: i64) -> WeightConstant {
        self.alpha.pow(i).mul(&self.beta.pow(j))
    }
}

impl fmt::Display for WeightPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.alpha, self.beta)
    }
}

/// The torus automorphism φ_{σ,μ,ν}: `x ↦ μ x^k y^m`, `y ↦ ν x^l y^n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AutomorphismSpec {
    sigma: Sl2z,
    mu: QScalar,
    nu: QScalar,
}

impl AutomorphismSpec {
    /// Validates that μ, ν are nonzero and builds the spec.
    pub fn new(sigma: Sl2z, mu: QScalar, nu: QScalar) -> Result<Self, QPlaneError> {
        if mu.is_zero() {
            return Err(QPlaneError::ZeroScale("mu"));
        }
        if nu.is_zero() {
            return Err(QPlaneError::ZeroScale("nu"));
        }
        Ok(AutomorphismSpec { sigma, mu, nu })
    }

    /// The identity automorphism.
    pub fn identity() -> Self {
        AutomorphismSpec {
            sigma: Sl2z::identity(),
            mu: QScalar::one(),
            nu: QScalar::one(),
        }
    }

    /// The underlying SL(2,Z) matrix.
    pub fn sigma(&self) -> &Sl2z {
        &self.sigma
    }

    /// Scale factor on the x-image.
    pub fn mu(&self) -> &QScalar {
        &self.mu
    }

    /// Scale factor on the y-image.
    pub fn nu(&self) -> &QScalar {
        &self.nu
    }

    /// The image `φ(x) = μ x^k y^m` as a polynomial.
    pub fn image_of_x(&self) -> LaurentPoly {
        LaurentPoly::monomial(self.mu.clone(), self.sigma.k, self.sigma.m)
    }

    /// The image `φ(y) = ν x^l y^n` as a polynomial.
    pub fn image_of_y(&self) -> LaurentPoly {
        LaurentPoly::monomial(self.nu.clone(), self.sigma.l, self.sigma.n)
    }
}

/// Applies the automorphism as an algebra homomorphism.
///
/// Monomial images are computed in closed form through [`LaurentPoly::mono_pow`]
/// (negative powers via [`LaurentPoly::mono_inverse`]), then multiplied in the
/// normal-form ring.
pub fn apply_automorphism(phi: &AutomorphismSpec, p: &LaurentPoly) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for (&(i, j), c) in p.terms() {
        let xi = phi
            .image_of_x()
            .mono_pow(i)
            .expect("automorphism images are single terms");
        let yj = phi
            .image_of_y()
            .mono_pow(j)
            .expect("automorphism images are single terms");
        out = &out + &(&xi * &yj).scalar_mul(c);
    }
    out
}

fn single_term_image(phi: &AutomorphismSpec, i: i64, j: i64) -> (QScalar, i64, i64) {
    let image = apply_automorphism(phi, &LaurentPoly::monomial(QScalar::one(), i, j));
    let (c, a, b) = image
        .single_term()
        .expect("automorphism image of a monomial is a monomial");
    (c.clone(), a, b)
}

/// Composition with `apply(compose(f, g), p) = apply(f, apply(g, p))`.
pub fn automorphism_compose(
    f: &AutomorphismSpec,
    g: &AutomorphismSpec,
) -> AutomorphismSpec {
    let (gk, gm, gl, gn) = g.sigma.entries();
    let (mu, k, m) = {
        let (c, a, b) = single_term_image(f, gk, gm);
        (&c * g.mu(), a, b)
    };
    let (nu, l, n) = {
        let (c, a, b) = single_term_image(f, gl, gn);
        (&c * g.nu(), a, b)
    };
    let sigma = Sl2z::new(k, m, l, n)
        .expect("composition of unimodular matrices is unimodular");
    AutomorphismSpec::new(sigma, mu, nu)
        .expect("composition of nonzero scales is nonzero")
}

/// Inverse spec with `compose(invert(phi), phi) = identity`.
pub fn automorphism_invert(phi: &AutomorphismSpec) -> AutomorphismSpec {
    let sigma_inv = phi.sigma.inverse();
    let (ik, im, il, inn) = sigma_inv.entries();
    let (cx, ax, bx) = single_term_image(phi, ik, im);
    debug_assert_eq!((ax, bx), (1, 0), "x-row of the inverse must map back to x");
    let (cy, ay, by) = single_term_image(phi, il, inn);
    debug_assert_eq!((ay, by), (0, 1), "y-row of the inverse must map back to y");
    AutomorphismSpec::new(
        sigma_inv,
        cx.inverse().expect("automorphism coefficients are nonzero"),
        cy.inverse().expect("automorphism coefficients are nonzero"),
    )
    .expect("inverse scales are nonzero")
}

/// Weight of a polynomial under the pair `w`: `Some(α^i β^j)` when every term
/// shares that value, `None` when the polynomial is inhomogeneous, and an
/// error on the zero polynomial.
pub fn weight_of(
    p: &LaurentPoly,
    w: &WeightPair,
) -> Result<Option<WeightConstant>, QPlaneError> {
    let mut terms = p.terms();
    let Some((&(i, j), _)) = terms.next() else {
        return Err(QPlaneError::ZeroPolynomial);
    };
    let candidate = w.monomial_weight(i, j);
    for (&(i, j), _) in terms {
        if w.monomial_weight(i, j) != candidate {
            return Ok(None);
        }
    }
    Ok(Some(candidate))
}

/// Action of a general integer matrix (a b; c d) on a weight pair:
/// `(α, β) ↦ (α^a β^b, α^c β^d)`.
pub fn int_matrix_weight_action(mat: &IntMat2, w: &WeightPair) -> WeightPair {
    let (a, b, c, d) = mat.entries();
    WeightPair::new(
        w.alpha.pow(a).mul(&w.beta.pow(b)),
        w.alpha.pow(c).mul(&w.beta.pow(d)),
    )
}

/// Action of an SL(2,Z) element on a weight pair.
pub fn sl2z_weight_action(sigma: &Sl2z, w: &WeightPair) -> WeightPair {
    int_matrix_weight_action(&sigma.as_mat(), w)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(c: i64, i: i64, j: i64) -> LaurentPoly {
        LaurentPoly::monomial(QScalar::from_int(c), i, j)
    }

    #[test]
    fn commutation_rule() {
        // y·x = q·xy
        let yx = &LaurentPoly::y() * &LaurentPoly::x();
        assert_eq!(yx, LaurentPoly::monomial(QScalar::q_pow(1), 1, 1));
        // 1·p = p
        let p = &mono(3, 2, -1) + &mono(1, 0, 4);
        assert_eq!(&LaurentPoly::one() * &p, p);
        // (x^2 y^3)(x^{-1} y) = q^{-3} x y^4
        let lhs = &mono(1, 2, 3) * &mono(1, -1, 1);
        assert_eq!(lhs, LaurentPoly::monomial(QScalar::q_pow(-3), 1, 4));
    }

    #[test]
    fn monomial_inverses() {
        // x^{-1}
        assert_eq!(
            LaurentPoly::x().mono_inverse().unwrap(),
            mono(1, -1, 0)
        );
        // (xy)^{-1} = q·x^{-1}y^{-1}
        assert_eq!(
            mono(1, 1, 1).mono_inverse().unwrap(),
            LaurentPoly::monomial(QScalar::q_pow(1), -1, -1)
        );
        // (2x^2)^{-1} = (1/2)x^{-2}
        let half = QScalar::from_int(2).inverse().unwrap();
        assert_eq!(
            mono(2, 2, 0).mono_inverse().unwrap(),
            LaurentPoly::monomial(half, -2, 0)
        );
        // non-monomials are rejected
        let p = &mono(1, 1, 0) + &mono(1, 0, 1);
        assert_eq!(p.mono_inverse(), Err(QPlaneError::NonMonomial(2)));
    }

    #[test]
    fn mono_pow_matches_repeated_multiplication() {
        let m = LaurentPoly::monomial(QScalar::from_int(2), 1, 2);
        let mut acc = LaurentPoly::one();
        for p in 0..=5 {
            assert_eq!(m.mono_pow(p).unwrap(), acc, "power {p}");
            acc = &acc * &m;
        }
        for p in 1..=5 {
            let direct = m.mono_pow(-p).unwrap();
            let via_inverse = m.mono_pow(p).unwrap().mono_inverse().unwrap();
            assert_eq!(direct, via_inverse, "power -{p}");
        }
    }

    #[test]
    fn automorphism_examples() {
        let xy = mono(1, 1, 1);
        // identity
        assert_eq!(
            apply_automorphism(&AutomorphismSpec::identity(), &xy),
            xy
        );
        // σ = (0 1; −1 0), μ = ν = 1 sends xy to y·x^{-1} = q^{-1} x^{-1} y
        let rot = AutomorphismSpec::new(
            Sl2z::new(0, 1, -1, 0).unwrap(),
            QScalar::one(),
            QScalar::one(),
        )
        .unwrap();
        assert_eq!(
            apply_automorphism(&rot, &xy),
            LaurentPoly::monomial(QScalar::q_pow(-1), -1, 1)
        );
        // scaling: σ = I, μ = 2, ν = 3 on xy
        let scale = AutomorphismSpec::new(
            Sl2z::identity(),
            QScalar::from_int(2),
            QScalar::from_int(3),
        )
        .unwrap();
        assert_eq!(apply_automorphism(&scale, &xy), mono(6, 1, 1));
    }

    #[test]
    fn compose_and_invert_are_inverse_operations() {
        let phi = AutomorphismSpec::new(
            Sl2z::new(2, 1, 1, 1).unwrap(),
            QScalar::var("mu").unwrap(),
            QScalar::q_pow(-1),
        )
        .unwrap();
        let inv = automorphism_invert(&phi);
        let id = automorphism_compose(&inv, &phi);
        for p in [LaurentPoly::x(), LaurentPoly::y(), mono(3, -2, 1)] {
            assert_eq!(apply_automorphism(&id, &p), p);
            assert_eq!(
                apply_automorphism(&inv, &apply_automorphism(&phi, &p)),
                p
            );
        }
    }

    #[test]
    fn torsor_rule() {
        // σ (μ,ν) σ^{-1} = (μ^k ν^m, μ^l ν^n) as automorphism specs
        let sigma = Sl2z::new(1, 2, 0, 1).unwrap();
        let phi_sigma = AutomorphismSpec::new(sigma, QScalar::one(), QScalar::one()).unwrap();
        let mu = QScalar::var("mu").unwrap();
        let nu = QScalar::var("nu").unwrap();
        let scale =
            AutomorphismSpec::new(Sl2z::identity(), mu.clone(), nu.clone()).unwrap();
        let conj = automorphism_compose(
            &automorphism_invert(&phi_sigma),
            &automorphism_compose(&scale, &phi_sigma),
        );
        assert_eq!(*conj.sigma(), Sl2z::identity());
        let (k, m, l, n) = sigma.entries();
        let expect_mu = &mu.pow(k).unwrap() * &nu.pow(m).unwrap();
        let expect_nu = &mu.pow(l).unwrap() * &nu.pow(n).unwrap();
        assert_eq!(*conj.mu(), expect_mu);
        assert_eq!(*conj.nu(), expect_nu);
    }

    #[test]
    fn weights() {
        let w = WeightPair::new(
            WeightConstant::q_pow(-2),
            WeightConstant::q_pow(2),
        );
        // weight of x is α
        assert_eq!(
            weight_of(&LaurentPoly::x(), &w).unwrap(),
            Some(w.alpha.clone())
        );
        // x^{m+r} y^{n+s} and x^m y^n share weight when α^r β^s = 1
        let p = &mono(1, 3, 1) + &mono(5, 2, 0);
        assert_eq!(
            weight_of(&p, &w).unwrap(),
            Some(w.monomial_weight(2, 0))
        );
        // x + y has two distinct weights here
        let p = &LaurentPoly::x() + &LaurentPoly::y();
        assert_eq!(weight_of(&p, &w).unwrap(), None);
        // the zero polynomial has no weight
        assert_eq!(
            weight_of(&LaurentPoly::zero(), &w),
            Err(QPlaneError::ZeroPolynomial)
        );
    }

    #[test]
    fn weight_pair_matrix_action() {
        let w = WeightPair::new(
            WeightConstant::minus_one().mul(&WeightConstant::q_pow(-1)),
            WeightConstant::minus_one(),
        );
        // identity fixes the pair
        assert_eq!(sl2z_weight_action(&Sl2z::identity(), &w), w);
        // (1 1; 0 1) on (−q^{-1}, −1) gives (q^{-1}, −1)
        let t = Sl2z::new(1, 1, 0, 1).unwrap();
        let moved = sl2z_weight_action(&t, &w);
        assert_eq!(
            moved,
            WeightPair::new(WeightConstant::q_pow(-1), WeightConstant::minus_one())
        );
        // (0 1; −1 0) sends (μ, ν) to (ν, μ^{-1})
        let rot = Sl2z::new(0, 1, -1, 0).unwrap();
        let moved = sl2z_weight_action(&rot, &w);
        assert_eq!(
            moved,
            WeightPair::new(w.beta.clone(), w.alpha.inv())
        );
    }
}
