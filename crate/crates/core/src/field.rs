//! Exact scalars over the rationals and over finite fields GF(p^d).
//!
//! Finite fields are represented as `GF(p)[t]/(modulus)` with a monic
//! irreducible modulus; irreducibility is checked at construction by trial
//! division, which is feasible for the degrees this crate targets (d <= 8).
//! Rationals are arbitrary-precision, always stored fully reduced.

use std::fmt;
use std::sync::Arc;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::Error;

/// Upper bound on p^ceil(d/2) for the trial-division irreducibility check.
const IRREDUCIBILITY_TRIAL_CAP: u128 = 1 << 21;

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut f = 3u64;
    while f.checked_mul(f).map(|s| s <= p).unwrap_or(false) {
        if p % f == 0 {
            return false;
        }
        f += 2;
    }
    true
}

// ---------------------------------------------------------------------------
// polynomials over GF(p), coefficients low-to-high, no trailing zeros
// ---------------------------------------------------------------------------

fn pm_trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn pm_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    pm_trim(out)
}

fn pm_add(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out = vec![0u64; n];
    for i in 0..n {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        out[i] = (x + y) % p;
    }
    pm_trim(out)
}

fn pm_neg(a: &[u64], p: u64) -> Vec<u64> {
    pm_trim(a.iter().map(|&x| (p - x) % p).collect())
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // Fermat; p is prime and a != 0 mod p.
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

/// Remainder of `a` modulo `b` (b nonzero) over GF(p).
fn pm_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let b = pm_trim(b.to_vec());
    assert!(!b.is_empty(), "division by zero polynomial");
    let mut r = pm_trim(a.to_vec());
    let db = b.len() - 1;
    let lead_inv = mod_inv(b[db], p);
    while r.len() > db {
        let dr = r.len() - 1;
        let c = r[dr] * lead_inv % p;
        for i in 0..=db {
            let idx = dr - db + i;
            let sub = c * b[i] % p;
            r[idx] = (r[idx] + p - sub) % p;
        }
        r = pm_trim(r);
        if r.is_empty() {
            break;
        }
    }
    r
}

/// Extended gcd: returns (g, s) with s*a = g mod b, g monic gcd(a, b).
fn pm_ext_gcd(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let mut r0 = pm_trim(b.to_vec());
    let mut r1 = pm_trim(a.to_vec());
    let mut s0: Vec<u64> = Vec::new();
    let mut s1: Vec<u64> = vec![1];
    while !r1.is_empty() {
        // quotient of r0 by r1
        let mut q = vec![0u64; r0.len().saturating_sub(r1.len()) + 1];
        let mut rem = r0.clone();
        let db = r1.len() - 1;
        let lead_inv = mod_inv(r1[db], p);
        while rem.len() > db {
            let dr = rem.len() - 1;
            let c = rem[dr] * lead_inv % p;
            q[dr - db] = c;
            for i in 0..=db {
                let idx = dr - db + i;
                let sub = c * r1[i] % p;
                rem[idx] = (rem[idx] + p - sub) % p;
            }
            rem = pm_trim(rem);
            if rem.is_empty() {
                break;
            }
        }
        let s2 = pm_add(&s0, &pm_neg(&pm_mul(&q, &s1, p), p), p);
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = s2;
    }
    // normalize gcd monic
    if let Some(&lead) = r0.last() {
        if lead != 1 {
            let inv = mod_inv(lead, p);
            r0 = pm_trim(r0.iter().map(|&x| x * inv % p).collect());
            s0 = pm_trim(s0.iter().map(|&x| x * inv % p).collect());
        }
    }
    (r0, s0)
}

// ---------------------------------------------------------------------------
// finite fields
// ---------------------------------------------------------------------------

/// A finite field GF(p^d) presented as `GF(p)[t]/(modulus)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteField {
    p: u64,
    d: usize,
    /// Monic, length d+1, coefficients low-to-high.
    modulus: Vec<u64>,
}

impl FiniteField {
    /// Construct GF(p^d). A supplied modulus must be monic of degree d and
    /// irreducible over GF(p); without one, the lexicographically lowest
    /// irreducible monic polynomial of degree d is found by search.
    pub fn new(p: u64, d: usize, modulus: Option<Vec<u64>>) -> Result<Arc<Self>, Error> {
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        if d == 0 {
            return Err(Error::InvalidField("extension degree must be >= 1".into()));
        }
        let modulus = match modulus {
            Some(m) => {
                let m = pm_trim(m);
                if m.len() != d + 1 {
                    return Err(Error::InvalidField(format!(
                        "modulus must have degree {d}, got degree {}",
                        m.len().max(1) - 1
                    )));
                }
                if m.iter().any(|&c| c >= p) {
                    return Err(Error::InvalidField(
                        "modulus coefficients must lie in 0..p".into(),
                    ));
                }
                if m[d] != 1 {
                    return Err(Error::InvalidField("modulus must be monic".into()));
                }
                if !Self::is_irreducible(&m, p)? {
                    return Err(Error::InvalidField(format!(
                        "modulus is reducible over GF({p})"
                    )));
                }
                m
            }
            None => Self::default_modulus(p, d)?,
        };
        Ok(Arc::new(FiniteField { p, d, modulus }))
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// p^d as u128, or None if it overflows.
    pub fn order(&self) -> Option<u128> {
        let mut n: u128 = 1;
        for _ in 0..self.d {
            n = n.checked_mul(self.p as u128)?;
            if n > u128::MAX / 2 {
                return None;
            }
        }
        Some(n)
    }

    /// Lexicographically lowest irreducible monic polynomial of degree d,
    /// ordering candidates by the base-p encoding of their low coefficients.
    pub fn default_modulus(p: u64, d: usize) -> Result<Vec<u64>, Error> {
        if d == 1 {
            return Ok(vec![0, 1]); // t itself: GF(p)[t]/(t) = GF(p)
        }
        let total = (p as u128).checked_pow(d as u32).ok_or_else(|| {
            Error::InvalidField("field too large for modulus search".into())
        })?;
        for k in 0..total {
            let mut poly = vec![0u64; d + 1];
            let mut rest = k;
            for c in poly.iter_mut().take(d) {
                *c = (rest % p as u128) as u64;
                rest /= p as u128;
            }
            poly[d] = 1;
            if Self::is_irreducible(&poly, p)? {
                return Ok(poly);
            }
        }
        Err(Error::InvalidField(format!(
            "no irreducible polynomial of degree {d} over GF({p}) found"
        )))
    }

    /// Trial factorization: irreducible iff no monic polynomial of degree
    /// 1..=d/2 divides it.
    fn is_irreducible(poly: &[u64], p: u64) -> Result<bool, Error> {
        let d = poly.len() - 1;
        if d == 0 {
            return Ok(false);
        }
        if d == 1 {
            return Ok(true);
        }
        let half = d / 2;
        let mut budget: u128 = 0;
        for e in 1..=half {
            budget += (p as u128).pow(e as u32);
        }
        if budget > IRREDUCIBILITY_TRIAL_CAP {
            return Err(Error::CapExceeded(format!(
                "irreducibility trial division needs {budget} candidates"
            )));
        }
        for e in 1..=half {
            let count = (p as u128).pow(e as u32);
            for k in 0..count {
                let mut div = vec![0u64; e + 1];
                let mut rest = k;
                for c in div.iter_mut().take(e) {
                    *c = (rest % p as u128) as u64;
                    rest /= p as u128;
                }
                div[e] = 1;
                if pm_rem(poly, &div, p).is_empty() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// The k-th field element under the canonical enumeration (base-p digits
    /// of k are the coefficients, constant coefficient first).
    pub fn element_from_index(self: &Arc<Self>, k: u128) -> Scalar {
        let mut coeffs = vec![0u64; self.d];
        let mut rest = k;
        for c in coeffs.iter_mut() {
            *c = (rest % self.p as u128) as u64;
            rest /= self.p as u128;
        }
        make_finite(self, coeffs)
    }
}

// ---------------------------------------------------------------------------
// field specification and scalars
// ---------------------------------------------------------------------------

/// The coefficient field every matrix and table in a document lives over.
#[derive(Debug, Clone)]
pub enum FieldSpec {
    Rational,
    Finite(Arc<FiniteField>),
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (FieldSpec::Rational, FieldSpec::Rational) => true,
            (FieldSpec::Finite(a), FieldSpec::Finite(b)) => a == b,
            _ => false,
        }
    }
}

impl Eq for FieldSpec {}

impl FieldSpec {
    pub fn rational() -> Self {
        FieldSpec::Rational
    }

    pub fn finite(p: u64, d: usize) -> Result<Self, Error> {
        Ok(FieldSpec::Finite(FiniteField::new(p, d, None)?))
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Rational => Scalar::Rational(BigRational::zero()),
            FieldSpec::Finite(f) => make_finite(f, Vec::new()),
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_integer(1)
    }

    pub fn from_integer(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            FieldSpec::Finite(f) => {
                let p = f.p as i64;
                let r = ((n % p) + p) % p;
                make_finite(f, vec![r as u64])
            }
        }
    }

    /// Number of elements, None for the rationals or on overflow.
    pub fn size(&self) -> Option<u128> {
        match self {
            FieldSpec::Rational => None,
            FieldSpec::Finite(f) => f.order(),
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, FieldSpec::Finite(_))
    }

    /// All field elements in canonical enumeration order (finite fields only).
    pub fn elements(&self) -> Result<Vec<Scalar>, Error> {
        match self {
            FieldSpec::Rational => Err(Error::Unsupported(
                "cannot enumerate the rationals".into(),
            )),
            FieldSpec::Finite(f) => {
                let q = f.order().ok_or_else(|| {
                    Error::CapExceeded("field too large to enumerate".into())
                })?;
                Ok((0..q).map(|k| f.element_from_index(k)).collect())
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, w: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(w, "rational"),
            FieldSpec::Finite(f) => {
                if f.d == 1 {
                    write!(w, "finite p={}", f.p)
                } else {
                    write!(
                        w,
                        "finite p={} d={} modulus={}",
                        f.p,
                        f.d,
                        fmt_poly(&f.modulus)
                    )
                }
            }
        }
    }
}

fn fmt_poly(coeffs: &[u64]) -> String {
    let mut terms = Vec::new();
    for (e, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let t = match (e, c) {
            (0, c) => format!("{c}"),
            (1, 1) => "t".to_string(),
            (1, c) => format!("{c}*t"),
            (e, 1) => format!("t^{e}"),
            (e, c) => format!("{c}*t^{e}"),
        };
        terms.push(t);
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join("+")
    }
}

/// Residue coefficients of a finite-field element: prime fields store the
/// single residue inline, proper extensions a vector of length d.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Residue {
    Prime(u64),
    Poly(Vec<u64>),
}

impl Residue {
    fn to_vec(&self, d: usize) -> Vec<u64> {
        match self {
            Residue::Prime(v) => vec![*v],
            Residue::Poly(c) => {
                let mut c = c.clone();
                c.resize(d, 0);
                c
            }
        }
    }
}

/// An exact field element: a reduced fraction or a residue polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Scalar {
    Rational(BigRational),
    Finite {
        field: Arc<FiniteField>,
        coeffs: Residue,
    },
}

fn make_finite(field: &Arc<FiniteField>, mut coeffs: Vec<u64>) -> Scalar {
    coeffs.resize(field.d, 0);
    let coeffs = if field.d == 1 {
        Residue::Prime(coeffs[0])
    } else {
        Residue::Poly(coeffs)
    };
    Scalar::Finite {
        field: Arc::clone(field),
        coeffs,
    }
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rational,
            Scalar::Finite { field, .. } => FieldSpec::Finite(Arc::clone(field)),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Finite { coeffs: Residue::Prime(v), .. } => *v == 0,
            Scalar::Finite { coeffs: Residue::Poly(c), .. } => c.iter().all(|&x| x == 0),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Finite { coeffs: Residue::Prime(v), .. } => *v == 1,
            Scalar::Finite { coeffs: Residue::Poly(c), .. } => {
                c.first() == Some(&1) && c[1..].iter().all(|&x| x == 0)
            }
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (
                Scalar::Finite { field, coeffs: Residue::Prime(a) },
                Scalar::Finite { field: f2, coeffs: Residue::Prime(b) },
            ) => {
                debug_assert_eq!(field, f2, "mixed finite fields");
                Scalar::Finite {
                    field: Arc::clone(field),
                    coeffs: Residue::Prime((a + b) % field.p),
                }
            }
            (
                Scalar::Finite { field, coeffs: Residue::Poly(a) },
                Scalar::Finite { field: f2, coeffs: Residue::Poly(b) },
            ) => {
                debug_assert_eq!(field, f2, "mixed finite fields");
                let p = field.p;
                Scalar::Finite {
                    field: Arc::clone(field),
                    coeffs: Residue::Poly(a.iter().zip(b).map(|(&x, &y)| (x + y) % p).collect()),
                }
            }
            _ => panic!("mixed fields in scalar addition"),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Finite { field, coeffs: Residue::Prime(a) } => Scalar::Finite {
                field: Arc::clone(field),
                coeffs: Residue::Prime((field.p - a) % field.p),
            },
            Scalar::Finite { field, coeffs: Residue::Poly(c) } => {
                let p = field.p;
                Scalar::Finite {
                    field: Arc::clone(field),
                    coeffs: Residue::Poly(c.iter().map(|&a| (p - a) % p).collect()),
                }
            }
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (
                Scalar::Finite { field, coeffs: Residue::Prime(a) },
                Scalar::Finite { field: f2, coeffs: Residue::Prime(b) },
            ) => {
                debug_assert_eq!(field, f2, "mixed finite fields");
                Scalar::Finite {
                    field: Arc::clone(field),
                    coeffs: Residue::Prime(a * b % field.p),
                }
            }
            (
                Scalar::Finite { field, coeffs: Residue::Poly(a) },
                Scalar::Finite { field: f2, coeffs: Residue::Poly(b) },
            ) => {
                debug_assert_eq!(field, f2, "mixed finite fields");
                let p = field.p;
                let prod = pm_mul(a, b, p);
                let red = pm_rem(&prod, &field.modulus, p);
                make_finite(field, red)
            }
            _ => panic!("mixed fields in scalar multiplication"),
        }
    }

    /// Multiplicative inverse, None for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        match self {
            Scalar::Rational(a) => Some(Scalar::Rational(a.recip())),
            Scalar::Finite { field, coeffs: Residue::Prime(a) } => Some(Scalar::Finite {
                field: Arc::clone(field),
                coeffs: Residue::Prime(mod_inv(*a, field.p)),
            }),
            Scalar::Finite { field, coeffs: Residue::Poly(c) } => {
                let p = field.p;
                let (g, s) = pm_ext_gcd(c, &field.modulus, p);
                debug_assert_eq!(g, vec![1], "modulus not irreducible?");
                let red = pm_rem(&s, &field.modulus, p);
                Some(make_finite(field, red))
            }
        }
    }

    pub fn div(&self, other: &Scalar) -> Option<Scalar> {
        other.inv().map(|i| self.mul(&i))
    }

    pub fn pow(&self, mut e: u128) -> Scalar {
        let mut result = self.field().one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        result
    }

    /// Total order used for deterministic report and search ordering:
    /// rationals by value, finite-field elements by base-p encoding.
    pub fn canonical_cmp(&self, other: &Scalar) -> std::cmp::Ordering {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => a.cmp(b),
            (
                Scalar::Finite { coeffs: Residue::Prime(a), .. },
                Scalar::Finite { coeffs: Residue::Prime(b), .. },
            ) => a.cmp(b),
            (
                Scalar::Finite { coeffs: Residue::Poly(a), .. },
                Scalar::Finite { coeffs: Residue::Poly(b), .. },
            ) => a.iter().rev().cmp(b.iter().rev()),
            _ => panic!("mixed fields in comparison"),
        }
    }

    /// Parse per the shared scalar syntax: `a/b` or `a` over the rationals,
    /// polynomials in `t` (e.g. `t+1`, `2*t^2+1`) over finite fields.
    pub fn parse(field: &FieldSpec, text: &str) -> Result<Scalar, Error> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::InvalidScalar("empty scalar".into()));
        }
        match field {
            FieldSpec::Rational => {
                let (num_str, den_str) = match text.split_once('/') {
                    Some((n, d)) => (n.trim(), d.trim()),
                    None => (text, "1"),
                };
                let num: BigInt = num_str
                    .parse()
                    .map_err(|_| Error::InvalidScalar(format!("bad rational `{text}`")))?;
                let den: BigInt = den_str
                    .parse()
                    .map_err(|_| Error::InvalidScalar(format!("bad rational `{text}`")))?;
                if den.is_zero() {
                    return Err(Error::InvalidScalar(format!("zero denominator in `{text}`")));
                }
                Ok(Scalar::Rational(BigRational::new(num, den)))
            }
            FieldSpec::Finite(f) => {
                let p = f.p as i128;
                let mut coeffs = vec![0i128; f.d.max(1)];
                // split into signed monomials
                let mut terms: Vec<(i128, String)> = Vec::new();
                let mut current = String::new();
                let mut sign = 1i128;
                let mut started = false;
                for ch in text.chars() {
                    match ch {
                        '+' | '-' if started && !current.trim().is_empty() => {
                            terms.push((sign, current.trim().to_string()));
                            current = String::new();
                            sign = if ch == '-' { -1 } else { 1 };
                        }
                        '-' if !started || current.trim().is_empty() => {
                            sign = -sign;
                            started = true;
                        }
                        '+' if current.trim().is_empty() => {
                            started = true;
                        }
                        c if c.is_whitespace() => {}
                        c => {
                            current.push(c);
                            started = true;
                        }
                    }
                }
                if !current.trim().is_empty() {
                    terms.push((sign, current.trim().to_string()));
                }
                if terms.is_empty() {
                    return Err(Error::InvalidScalar(format!("bad element `{text}`")));
                }
                for (sgn, term) in terms {
                    let (coef_str, exp) = if let Some(idx) = term.find('t') {
                        let coef_part = term[..idx].trim().trim_end_matches('*').trim();
                        let after = term[idx + 1..].trim();
                        let exp = if after.is_empty() {
                            1usize
                        } else if let Some(e) = after.strip_prefix('^') {
                            e.trim().parse().map_err(|_| {
                                Error::InvalidScalar(format!("bad exponent in `{term}`"))
                            })?
                        } else {
                            return Err(Error::InvalidScalar(format!("bad term `{term}`")));
                        };
                        (coef_part.to_string(), exp)
                    } else {
                        (term.clone(), 0usize)
                    };
                    let coef: i128 = if coef_str.is_empty() {
                        1
                    } else {
                        coef_str.parse().map_err(|_| {
                            Error::InvalidScalar(format!("bad coefficient `{coef_str}`"))
                        })?
                    };
                    if exp >= f.d {
                        return Err(Error::InvalidScalar(format!(
                            "exponent {exp} exceeds field degree {} in `{text}`",
                            f.d
                        )));
                    }
                    coeffs[exp] += sgn * coef;
                }
                let out: Vec<u64> = coeffs
                    .iter()
                    .take(f.d)
                    .map(|&c| (((c % p) + p) % p) as u64)
                    .collect();
                Ok(make_finite(f, out))
            }
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, w: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(w, "{}", r.numer())
                } else if r.denom().is_negative() {
                    write!(w, "{}/{}", -r.numer(), -r.denom())
                } else {
                    write!(w, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Finite { field, coeffs } => {
                write!(w, "{}", fmt_poly(&coeffs.to_vec(field.d)))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_scalar(field: &FieldSpec, rng: &mut ChaCha8Rng) -> Scalar {
        match field {
            FieldSpec::Rational => {
                let n = rng.gen_range(-20i64..=20);
                let d = rng.gen_range(1i64..=10);
                Scalar::Rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
            }
            FieldSpec::Finite(f) => {
                let q = f.order().unwrap();
                let k = rng.gen_range(0..q);
                f.element_from_index(k)
            }
        }
    }

    fn sample_fields() -> Vec<FieldSpec> {
        vec![
            FieldSpec::rational(),
            FieldSpec::finite(2, 1).unwrap(),
            FieldSpec::finite(3, 1).unwrap(),
            FieldSpec::finite(2, 2).unwrap(),
            FieldSpec::finite(3, 2).unwrap(),
            FieldSpec::finite(5, 3).unwrap(),
        ]
    }

    #[test]
    fn field_axioms_on_random_triples() {
        for field in sample_fields() {
            let mut rng = ChaCha8Rng::seed_from_u64(42);
            for _ in 0..1000 {
                let a = random_scalar(&field, &mut rng);
                let b = random_scalar(&field, &mut rng);
                let c = random_scalar(&field, &mut rng);
                assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
                assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
                assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
                assert_eq!(a.add(&b), b.add(&a));
                assert_eq!(a.mul(&b), b.mul(&a));
                if !a.is_zero() {
                    let ai = a.inv().unwrap();
                    assert!(a.mul(&ai).is_one());
                }
                assert!(a.sub(&a).is_zero());
            }
        }
    }

    #[test]
    fn frobenius_fixes_the_field() {
        for (p, d) in [(2u64, 2usize), (3, 2), (2, 3), (5, 2)] {
            let field = FieldSpec::finite(p, d).unwrap();
            let q = field.size().unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(7);
            for _ in 0..100 {
                let a = random_scalar(&field, &mut rng);
                assert_eq!(a.pow(q), a, "x^q != x in GF({p}^{d})");
            }
        }
    }

    #[test]
    fn default_moduli_are_irreducible_and_minimal() {
        // GF(4): t^2+t+1 is the only irreducible quadratic over GF(2).
        let f = FiniteField::new(2, 2, None).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]);
        // GF(9): t^2+1 is irreducible over GF(3) and lexicographically first.
        let f = FiniteField::new(3, 2, None).unwrap();
        assert_eq!(f.modulus(), &[1, 0, 1]);
    }

    #[test]
    fn rejects_bad_fields() {
        assert!(FiniteField::new(4, 1, None).is_err());
        assert!(FiniteField::new(2, 2, Some(vec![0, 0, 1])).is_err()); // t^2 reducible
        assert!(FiniteField::new(2, 0, None).is_err());
    }

    #[test]
    fn scalar_text_round_trip() {
        let q = FieldSpec::rational();
        for text in ["0", "5", "-3", "1/2", "-7/3"] {
            let s = Scalar::parse(&q, text).unwrap();
            assert_eq!(format!("{s}"), text);
        }
        let f4 = FieldSpec::finite(2, 2).unwrap();
        for text in ["0", "1", "t", "t+1"] {
            let s = Scalar::parse(&f4, text).unwrap();
            assert_eq!(format!("{s}"), text);
        }
        let f9 = FieldSpec::finite(3, 2).unwrap();
        let s = Scalar::parse(&f9, "2*t+1").unwrap();
        assert_eq!(format!("{s}"), "2*t+1");
        // unreduced input is normalized
        let s = Scalar::parse(&f9, "4*t+3").unwrap();
        assert_eq!(format!("{s}"), "t");
    }

    #[test]
    fn finite_inverse_matches_fermat() {
        let f9 = FieldSpec::finite(3, 2).unwrap();
        let q = f9.size().unwrap();
        for e in f9.elements().unwrap() {
            if e.is_zero() {
                assert!(e.inv().is_none());
            } else {
                assert_eq!(e.inv().unwrap(), e.pow(q - 2));
            }
        }
    }
}
