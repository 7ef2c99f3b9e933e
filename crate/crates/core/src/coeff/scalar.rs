use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::gcd::{laurent_gcd, normalize_sign, poly_gcd, strip_monomial};
use super::laurent::IntLaurent;
use crate::error::{Error, Result};

/// Exact element of the fraction field of `Z[v^±1, s^±1]`.
///
/// Canonical form: `num / den` with no common non-unit factor, `den` a
/// polynomial with no monomial factor and positive lexicographically-leading
/// coefficient. Equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Scalar {
    num: IntLaurent,
    den: IntLaurent,
}

impl Scalar {
    /// Builds `num / den` in canonical form.
    pub fn new(num: IntLaurent, den: IntLaurent) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: IntLaurent, den: IntLaurent) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (mv, ms) = den.min_exp();
        let (mut num, mut den) = if mv != 0 || ms != 0 {
            (num.shift(-mv, -ms), den.shift(-mv, -ms))
        } else {
            (num, den)
        };
        if den.is_monomial() {
            // den is now an integer
            let c = den.as_constant().unwrap();
            let g = num_integer::Integer::gcd(&num.content(), &c);
            let mut num = num.div_int(&g).unwrap();
            let mut c = c / g;
            if c < BigInt::zero() {
                num = -num;
                c = -c;
            }
            return Scalar {
                num,
                den: IntLaurent::constant(c),
            };
        }
        let g = poly_gcd(&strip_monomial(&num), &den);
        if !g.is_one() {
            num = num.div_exact(&g).expect("gcd divides numerator");
            den = den.div_exact(&g).expect("gcd divides denominator");
        }
        Self::fix_sign(num, den)
    }

    fn fix_sign(num: IntLaurent, den: IntLaurent) -> Self {
        match den.leading() {
            Some((_, c)) if *c < BigInt::zero() => Scalar {
                num: -num,
                den: -den,
            },
            _ => Scalar { num, den },
        }
    }

    pub fn zero() -> Self {
        Scalar {
            num: IntLaurent::zero(),
            den: IntLaurent::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_laurent(IntLaurent::constant(c))
    }

    pub fn from_bigint(c: BigInt) -> Self {
        Self::from_laurent(IntLaurent::constant(c))
    }

    pub fn from_laurent(p: IntLaurent) -> Self {
        Scalar {
            num: p,
            den: IntLaurent::one(),
        }
    }

    /// `c · v^ev · s^es`.
    pub fn monomial(ev: i32, es: i32, c: i64) -> Self {
        Self::from_laurent(IntLaurent::monomial(ev, es, c))
    }

    pub fn v() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn s() -> Self {
        Self::monomial(0, 1, 1)
    }

    pub fn v_pow(e: i32) -> Self {
        Self::monomial(e, 0, 1)
    }

    pub fn s_pow(e: i32) -> Self {
        Self::monomial(0, e, 1)
    }

    /// `z = s - s^-1`.
    pub fn z() -> Self {
        Self::from_laurent(z_laurent())
    }

    /// `δ = (v^-1 - v) / z`, the value of a null-homotopic loop.
    pub fn delta() -> Self {
        let num = &IntLaurent::monomial(-1, 0, 1) - &IntLaurent::v();
        Self::canonical(num, z_laurent())
    }

    /// `s^k - s^-k`.
    pub fn s_diff(k: i32) -> Self {
        Self::from_laurent(&IntLaurent::monomial(0, k, 1) - &IntLaurent::monomial(0, -k, 1))
    }

    /// Quantum integer `[n] = s^(n-1) + s^(n-3) + ... + s^(1-n)`.
    pub fn quantum_int(n: i64) -> Result<Self> {
        if n <= 0 {
            return Err(Error::InvalidArgument(format!(
                "quantum integer needs n >= 1, got {n}"
            )));
        }
        let n = n as i32;
        Ok(Self::from_laurent(IntLaurent::from_terms(
            (0..n).map(|i| ((0, n - 1 - 2 * i), BigInt::one())),
        )))
    }

    pub fn numer(&self) -> &IntLaurent {
        &self.num
    }

    pub fn denom(&self) -> &IntLaurent {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is 1.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn pow(&self, e: i32) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Scalar::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Substitutes `v -> v^-1`, `s -> s^-1`.
    pub fn mirror(&self) -> Self {
        Self::canonical(self.num.mirror(), self.den.mirror())
    }

    /// Substitutes `s -> -s^-1`.
    pub fn column_substitute(&self) -> Self {
        Self::canonical(
            self.num.substitute_s(-1, true),
            self.den.substitute_s(-1, true),
        )
    }

    /// Exact value at `v = v0`, `s = s0`.
    pub fn eval_rational(&self, v0: &BigRational, s0: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(v0, s0).ok_or(Error::Pole)?;
        if d.is_zero() {
            return Err(Error::Pole);
        }
        let n = self.num.eval(v0, s0).ok_or(Error::Pole)?;
        Ok(n / d)
    }

    fn add_impl(&self, other: &Scalar) -> Scalar {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let (a, b, c, d) = (&self.num, &self.den, &other.num, &other.den);
        if b.is_one() && d.is_one() {
            return Scalar::from_laurent(a + c);
        }
        if b == d {
            return Self::canonical(a + c, b.clone());
        }
        if b.is_one() {
            return Scalar {
                num: &(a * d) + c,
                den: d.clone(),
            };
        }
        if d.is_one() {
            return Scalar {
                num: &(c * b) + a,
                den: b.clone(),
            };
        }
        let g = poly_gcd(b, d);
        if g.is_one() {
            return Self::fix_sign(&(a * d) + &(c * b), b * d);
        }
        let b1 = b.div_exact(&g).unwrap();
        let d1 = d.div_exact(&g).unwrap();
        let t = &(a * &d1) + &(c * &b1);
        if t.is_zero() {
            return Scalar::zero();
        }
        let g2 = poly_gcd(&strip_monomial(&t), &g);
        let (t, g) = if g2.is_one() {
            (t, g)
        } else {
            (t.div_exact(&g2).unwrap(), g.div_exact(&g2).unwrap())
        };
        Self::fix_sign(t, &b1 * &d1 * g)
    }

    fn mul_impl(&self, other: &Scalar) -> Scalar {
        if self.is_zero() || other.is_zero() {
            return Scalar::zero();
        }
        let (a, b, c, d) = (&self.num, &self.den, &other.num, &other.den);
        if b.is_one() && d.is_one() {
            return Scalar::from_laurent(a * c);
        }
        let (a, d) = cancel(a, d);
        let (c, b) = cancel(c, b);
        Self::fix_sign(&a * &c, &b * &d)
    }
}

/// Removes the common factor of a numerator and a canonical denominator.
fn cancel(num: &IntLaurent, den: &IntLaurent) -> (IntLaurent, IntLaurent) {
    if den.is_one() {
        return (num.clone(), den.clone());
    }
    let g = if den.is_monomial() {
        IntLaurent::constant(num_integer::Integer::gcd(&num.content(), &den.content()))
    } else {
        laurent_gcd(num, den)
    };
    if g.is_one() {
        (num.clone(), den.clone())
    } else {
        (
            num.div_exact(&g).unwrap(),
            normalize_sign(den.div_exact(&g).unwrap()),
        )
    }
}

pub(crate) fn z_laurent() -> IntLaurent {
    &IntLaurent::s() - &IntLaurent::monomial(0, -1, 1)
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.add_impl(rhs)
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.add_impl(&-rhs)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.mul_impl(rhs)
    }
}

/// Panics on division by zero; use [`Scalar::checked_div`] to handle it.
impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self.checked_div(rhs).expect("division by zero scalar")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            num: -self.num,
            den: self.den,
        }
    }
}

macro_rules! owned_binop {
    ($tr:ident, $f:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $f(self, rhs: Scalar) -> Scalar {
                (&self).$f(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = self.add_impl(rhs);
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::one()
    }
}

impl From<i64> for Scalar {
    fn from(c: i64) -> Self {
        Scalar::from_int(c)
    }
}

impl From<IntLaurent> for Scalar {
    fn from(p: IntLaurent) -> Self {
        Scalar::from_laurent(p)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else if self.num.num_terms() == 1 {
            write!(f, "{}/({})", self.num, self.den)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `[e_v, e_s, "coeff"]` triple used in the JSON form.
type TermJson = (i32, i32, String);

#[derive(Serialize, Deserialize)]
struct ScalarJson {
    num: Vec<TermJson>,
    den: Vec<TermJson>,
}

fn terms_json(p: &IntLaurent) -> Vec<TermJson> {
    p.terms()
        .iter()
        .map(|((ev, es), c)| (*ev, *es, c.to_string()))
        .collect()
}

fn terms_from_json(terms: &[TermJson]) -> std::result::Result<IntLaurent, String> {
    let mut out = Vec::with_capacity(terms.len());
    for (ev, es, c) in terms {
        let c: BigInt = c
            .parse()
            .map_err(|_| format!("bad integer coefficient `{c}`"))?;
        out.push(((*ev, *es), c));
    }
    Ok(IntLaurent::from_terms(out))
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        ScalarJson {
            num: terms_json(&self.num),
            den: terms_json(&self.den),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = ScalarJson::deserialize(deserializer)?;
        let num = terms_from_json(&raw.num).map_err(D::Error::custom)?;
        let den = terms_from_json(&raw.den).map_err(D::Error::custom)?;
        Scalar::new(num, den).map_err(D::Error::custom)
    }
}
