//! Exact arithmetic in GF(p) and GF(p^k) for small q.
//!
//! Elements are dense indices in `[0, q)`: the index encodes the coefficient
//! vector of the residue polynomial in base `p`, constant term least
//! significant. Index 0 is the additive identity and index 1 the
//! multiplicative identity, so a `Felt` doubles as an array offset. All
//! arithmetic is table-driven; a [`Field`] is built once and shared behind an
//! [`Arc`].

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// Largest supported field order. The operation tables are `q * q` entries,
/// so this bounds memory at a few megabytes per field.
pub const MAX_Q: usize = 1024;

/// Shared handle to a field; every aggregate type stores one of these.
pub type FieldRef = Arc<Field>;

/// An element of a fixed finite field, as its canonical index in `[0, q)`.
///
/// The field itself is carried by the surrounding context (a [`Field`]
/// reference or an aggregate that owns one); mixing elements of two different
/// fields is caught at the aggregate level.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Felt(pub u16);

impl Felt {
    pub const ZERO: Felt = Felt(0);
    pub const ONE: Felt = Felt(1);

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for Felt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Felt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NonPrimeP(u64),
    #[error("modulus polynomial is reducible over GF({p})")]
    ReducibleModulus { p: u64 },
    #[error("modulus must be monic of degree {expected}")]
    DegreeMismatch { expected: u32 },
    #[error("inverse of zero")]
    ZeroInverse,
    #[error("element is not a square")]
    NotASquare,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("field order {0} exceeds the supported bound {MAX_Q}")]
    UnsupportedOrder(u64),
    #[error("cannot parse field description {0:?}: expected \"p\" or \"p^k\" with p prime")]
    BadFieldString(String),
    #[error("element index {idx} out of range for field of order {q}")]
    ElementOutOfRange { idx: u64, q: usize },
}

/// A finite field GF(p^k) with precomputed operation tables.
///
/// Two `Field` values compare equal when they have the same characteristic,
/// extension degree, and modulus polynomial, so independently constructed
/// handles to "the same" field interoperate.
pub struct Field {
    p: u16,
    k: u32,
    q: usize,
    /// Reduction polynomial, low-to-high coefficients, length k+1, monic.
    /// Empty for prime fields (reduction is plain `mod p`).
    modulus: Vec<u16>,
    add_t: Vec<u16>,
    mul_t: Vec<u16>,
    neg_t: Vec<u16>,
    inv_t: Vec<u16>,
    /// Smallest square root of each element, `u16::MAX` when none exists.
    sqrt_t: Vec<u16>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.k == other.k && self.modulus == other.modulus
    }
}
impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.describe())
    }
}

impl Field {
    /// Builds GF(p^k) with the canonical modulus: the lexicographically
    /// smallest monic irreducible polynomial of degree k, coefficients
    /// compared from the highest degree down.
    pub fn gf(p: u64, k: u32) -> Result<FieldRef, FieldError> {
        Self::make(p, k, None)
    }

    /// Builds GF(p^k) with an explicit modulus, coefficients given
    /// high-to-low (the CLI `--poly c_k,...,c_0` convention).
    pub fn with_modulus(p: u64, k: u32, coeffs_high_to_low: &[u64]) -> Result<FieldRef, FieldError> {
        Self::make(p, k, Some(coeffs_high_to_low))
    }

    /// Parses a field description like `"2"`, `"5"`, `"2^2"`. A bare prime
    /// power such as `"9"` is also accepted and factored.
    pub fn parse(desc: &str) -> Result<FieldRef, FieldError> {
        let (p, k) = parse_order(desc)?;
        Self::gf(p, k)
    }

    /// Parses a field description together with an optional modulus override.
    pub fn parse_with_poly(desc: &str, poly: Option<&[u64]>) -> Result<FieldRef, FieldError> {
        let (p, k) = parse_order(desc)?;
        match poly {
            Some(cs) => Self::with_modulus(p, k, cs),
            None => Self::gf(p, k),
        }
    }

    fn make(p: u64, k: u32, coeffs_high_to_low: Option<&[u64]>) -> Result<FieldRef, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NonPrimeP(p));
        }
        if k == 0 {
            return Err(FieldError::DegreeMismatch { expected: 0 });
        }
        let q = (p as u128).checked_pow(k).filter(|&q| q <= MAX_Q as u128);
        let q = match q {
            Some(q) => q as usize,
            None => return Err(FieldError::UnsupportedOrder(p.pow(k.min(8)))),
        };
        let p16 = p as u16;

        let modulus: Vec<u16> = match coeffs_high_to_low {
            Some(cs) => {
                if cs.len() != k as usize + 1 || cs[0] % p != 1 {
                    return Err(FieldError::DegreeMismatch { expected: k });
                }
                let low: Vec<u16> = cs.iter().rev().map(|&c| (c % p) as u16).collect();
                if k > 1 && !poly_is_irreducible(p16, &low) {
                    return Err(FieldError::ReducibleModulus { p });
                }
                if k == 1 {
                    Vec::new()
                } else {
                    low
                }
            }
            None if k == 1 => Vec::new(),
            None => smallest_irreducible(p16, k),
        };

        Ok(Arc::new(Self::build(p16, k, q, modulus)))
    }

    fn build(p: u16, k: u32, q: usize, modulus: Vec<u16>) -> Field {
        let pu = p as usize;
        let mut add_t = vec![0u16; q * q];
        let mut mul_t = vec![0u16; q * q];
        let mut neg_t = vec![0u16; q];
        let mut inv_t = vec![0u16; q];
        let mut sqrt_t = vec![u16::MAX; q];

        let digits = |mut x: usize| -> Vec<u32> {
            (0..k).map(|_| {
                let d = (x % pu) as u32;
                x /= pu;
                d
            }).collect()
        };
        let undigits = |ds: &[u32]| -> usize {
            ds.iter().rev().fold(0usize, |acc, &c| acc * pu + c as usize)
        };

        let all_digits: Vec<Vec<u32>> = (0..q).map(digits).collect();
        let modu: Vec<u32> = modulus.iter().map(|&c| c as u32).collect();
        let pw = p as u32;

        for a in 0..q {
            let da = &all_digits[a];
            for b in 0..q {
                let db = &all_digits[b];
                // addition: digit-wise mod p
                let sum: Vec<u32> = da.iter().zip(db).map(|(&x, &y)| (x + y) % pw).collect();
                add_t[a * q + b] = undigits(&sum) as u16;
                // multiplication: polynomial product reduced by the modulus
                let mut prod = vec![0u32; 2 * k as usize - 1];
                for (i, &x) in da.iter().enumerate() {
                    if x == 0 {
                        continue;
                    }
                    for (j, &y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % pw;
                    }
                }
                if k > 1 {
                    for idx in (k as usize..prod.len()).rev() {
                        let c = prod[idx];
                        if c == 0 {
                            continue;
                        }
                        prod[idx] = 0;
                        for j in 0..k as usize {
                            let t = (c * modu[j]) % pw;
                            prod[idx - k as usize + j] =
                                (prod[idx - k as usize + j] + pw - t) % pw;
                        }
                    }
                }
                let m = undigits(&prod[..k as usize]) as u16;
                mul_t[a * q + b] = m;
                if m == 1 {
                    inv_t[a] = b as u16;
                }
            }
            let neg: Vec<u32> = da.iter().map(|&x| (pw - x) % pw).collect();
            neg_t[a] = undigits(&neg) as u16;
        }
        for b in (0..q).rev() {
            let s = mul_t[b * q + b] as usize;
            sqrt_t[s] = b as u16; // descending loop leaves the smallest root
        }

        Field { p, k, q, modulus, add_t, mul_t, neg_t, inv_t, sqrt_t }
    }

    pub fn p(&self) -> u64 {
        self.p as u64
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn characteristic_is_two(&self) -> bool {
        self.p == 2
    }

    /// Reduction polynomial, low-to-high coefficients; `None` for prime fields.
    pub fn modulus(&self) -> Option<&[u16]> {
        if self.modulus.is_empty() {
            None
        } else {
            Some(&self.modulus)
        }
    }

    /// The `"p"` / `"p^k"` description used in configs and reports.
    pub fn describe(&self) -> String {
        if self.k == 1 {
            format!("{}", self.p)
        } else {
            format!("{}^{}", self.p, self.k)
        }
    }

    #[inline]
    pub fn zero(&self) -> Felt {
        Felt(0)
    }

    #[inline]
    pub fn one(&self) -> Felt {
        Felt(1)
    }

    /// Element with the given index; panics out of range.
    #[inline]
    pub fn elt(&self, idx: usize) -> Felt {
        assert!(idx < self.q, "element index {idx} out of range for GF({})", self.describe());
        Felt(idx as u16)
    }

    /// Checked variant of [`Field::elt`] for externally supplied indices.
    pub fn checked_elt(&self, idx: u64) -> Result<Felt, FieldError> {
        if (idx as usize) < self.q && idx <= u16::MAX as u64 {
            Ok(Felt(idx as u16))
        } else {
            Err(FieldError::ElementOutOfRange { idx, q: self.q })
        }
    }

    /// Canonical image of an integer in the prime subfield.
    pub fn int(&self, n: i64) -> Felt {
        let p = self.p as i64;
        Felt(n.rem_euclid(p) as u16)
    }

    #[inline]
    pub fn add(&self, a: Felt, b: Felt) -> Felt {
        Felt(self.add_t[a.index() * self.q + b.index()])
    }

    #[inline]
    pub fn sub(&self, a: Felt, b: Felt) -> Felt {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn neg(&self, a: Felt) -> Felt {
        Felt(self.neg_t[a.index()])
    }

    #[inline]
    pub fn mul(&self, a: Felt, b: Felt) -> Felt {
        Felt(self.mul_t[a.index() * self.q + b.index()])
    }

    pub fn inv(&self, a: Felt) -> Result<Felt, FieldError> {
        if a.is_zero() {
            Err(FieldError::ZeroInverse)
        } else {
            Ok(Felt(self.inv_t[a.index()]))
        }
    }

    /// `a / b`; errors on division by zero.
    pub fn div(&self, a: Felt, b: Felt) -> Result<Felt, FieldError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Felt, mut e: u64) -> Felt {
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// True iff some b satisfies b^2 = a (0 counts as a square).
    pub fn is_square(&self, a: Felt) -> bool {
        self.sqrt_t[a.index()] != u16::MAX
    }

    /// The smallest square root of `a` by element index.
    pub fn sqrt(&self, a: Felt) -> Result<Felt, FieldError> {
        match self.sqrt_t[a.index()] {
            u16::MAX => Err(FieldError::NotASquare),
            r => Ok(Felt(r)),
        }
    }

    /// Root existence for T^2 + a1*T + a0, decided by exhaustive evaluation.
    pub fn quadratic_has_root(&self, a1: Felt, a0: Felt) -> bool {
        self.elements().any(|t| {
            let v = self.add(self.add(self.mul(t, t), self.mul(a1, t)), a0);
            v.is_zero()
        })
    }

    /// All q elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = Felt> + '_ {
        (0..self.q).map(|i| Felt(i as u16))
    }

    /// Renders an element as a polynomial in `t` (plain integer for prime
    /// fields), e.g. index 3 of GF(4) prints as `t+1`.
    pub fn elt_string(&self, a: Felt) -> String {
        if self.k == 1 {
            return format!("{}", a.0);
        }
        let mut x = a.index();
        let mut terms = Vec::new();
        for d in 0..self.k as usize {
            let c = x % self.p as usize;
            x /= self.p as usize;
            if c == 0 {
                continue;
            }
            let var = match d {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{d}"),
            };
            let term = match (c, d) {
                (_, 0) => format!("{c}"),
                (1, _) => var,
                _ => format!("{c}{var}"),
            };
            terms.push(term);
        }
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.reverse();
            terms.join("+")
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Factors `n` as a prime power, if it is one.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut m = n;
            let mut k = 0;
            while m % p == 0 {
                m /= p;
                k += 1;
            }
            return if m == 1 { Some((p, k)) } else { None };
        }
        p += 1;
    }
    Some((n, 1))
}

/// All prime powers in `[2, max]`, ascending.
pub fn prime_powers_up_to(max: u64) -> Vec<(u64, u32)> {
    (2..=max).filter_map(prime_power).collect()
}

fn parse_order(desc: &str) -> Result<(u64, u32), FieldError> {
    let bad = || FieldError::BadFieldString(desc.to_string());
    if let Some((ps, ks)) = desc.split_once('^') {
        let p: u64 = ps.trim().parse().map_err(|_| bad())?;
        let k: u32 = ks.trim().parse().map_err(|_| bad())?;
        if !is_prime(p) || k == 0 {
            return Err(bad());
        }
        Ok((p, k))
    } else {
        let n: u64 = desc.trim().parse().map_err(|_| bad())?;
        prime_power(n).ok_or_else(bad)
    }
}

// --- polynomial utilities over GF(p), plain integer coefficients ----------

/// Remainder of `a` divided by monic `b` (both low-to-high) over GF(p).
fn poly_rem(p: u16, a: &[u16], b: &[u16]) -> Vec<u16> {
    let pw = p as u32;
    let db = b.len() - 1;
    let mut r: Vec<u32> = a.iter().map(|&c| c as u32).collect();
    while r.len() > db {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - db;
        if lead != 0 {
            for (j, &bc) in b.iter().enumerate() {
                let t = (lead * bc as u32) % pw;
                r[shift + j] = (r[shift + j] + pw - t) % pw;
            }
        }
        r.pop();
    }
    while r.len() > 1 && *r.last().unwrap() == 0 {
        r.pop();
    }
    r.iter().map(|&c| c as u16).collect()
}

/// Irreducibility of a monic polynomial (low-to-high) by trial division with
/// every monic polynomial of degree up to deg/2. Fields here are tiny, so the
/// search space is, too.
fn poly_is_irreducible(p: u16, poly: &[u16]) -> bool {
    let deg = poly.len() - 1;
    if deg == 0 {
        return false;
    }
    if deg == 1 {
        return true;
    }
    let pu = p as usize;
    for d in 1..=deg / 2 {
        let count = pu.pow(d as u32);
        for m in 0..count {
            let mut g: Vec<u16> = Vec::with_capacity(d + 1);
            let mut x = m;
            for _ in 0..d {
                g.push((x % pu) as u16);
                x /= pu;
            }
            g.push(1); // monic
            let r = poly_rem(p, poly, &g);
            if r.len() == 1 && r[0] == 0 {
                return false;
            }
        }
    }
    true
}

/// Lexicographically smallest (high coefficients first) monic irreducible
/// polynomial of degree k over GF(p), low-to-high coefficients.
fn smallest_irreducible(p: u16, k: u32) -> Vec<u16> {
    let pu = p as usize;
    let count = pu.pow(k);
    for m in 0..count {
        let mut poly: Vec<u16> = Vec::with_capacity(k as usize + 1);
        let mut x = m;
        for _ in 0..k {
            poly.push((x % pu) as u16);
            x /= pu;
        }
        poly.push(1);
        if poly_is_irreducible(p, &poly) {
            return poly;
        }
    }
    unreachable!("an irreducible polynomial of every degree exists over GF(p)")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gf(p: u64, k: u32) -> FieldRef {
        Field::gf(p, k).unwrap()
    }

    #[test]
    fn make_rejects_non_prime() {
        assert_eq!(Field::gf(4, 1).unwrap_err(), FieldError::NonPrimeP(4));
        assert_eq!(Field::gf(1, 1).unwrap_err(), FieldError::NonPrimeP(1));
    }

    #[test]
    fn gf4_selects_canonical_modulus() {
        // The only monic irreducible quadratic over GF(2) is T^2+T+1.
        let f = gf(2, 2);
        assert_eq!(f.modulus(), Some(&[1u16, 1, 1][..]));
        assert_eq!(f.q(), 4);
    }

    #[test]
    fn gf8_and_gf9_moduli() {
        assert_eq!(gf(2, 3).modulus(), Some(&[1u16, 1, 0, 1][..])); // T^3+T+1
        assert_eq!(gf(3, 2).modulus(), Some(&[1u16, 0, 1][..])); // T^2+1
    }

    #[test]
    fn reducible_modulus_rejected() {
        // T^2+1 = (T+1)^2 over GF(2).
        let err = Field::with_modulus(2, 2, &[1, 0, 1]).unwrap_err();
        assert_eq!(err, FieldError::ReducibleModulus { p: 2 });
        // Non-monic or wrong-degree inputs.
        assert!(matches!(
            Field::with_modulus(2, 2, &[1, 1]).unwrap_err(),
            FieldError::DegreeMismatch { .. }
        ));
    }

    #[test]
    fn prime_field_arithmetic() {
        let f3 = gf(3, 1);
        assert_eq!(f3.add(Felt(2), Felt(2)), Felt(1));
        let f5 = gf(5, 1);
        assert_eq!(f5.inv(Felt(2)).unwrap(), Felt(3));
        assert_eq!(f5.inv(Felt(0)).unwrap_err(), FieldError::ZeroInverse);
    }

    #[test]
    fn gf4_multiplication_reduces() {
        // t * t = t + 1 under T^2+T+1; indices: t = 2, t+1 = 3.
        let f = gf(2, 2);
        assert_eq!(f.mul(Felt(2), Felt(2)), Felt(3));
        assert_eq!(f.mul(Felt(2), Felt(3)), Felt(1)); // t(t+1) = t^2+t = 1
    }

    #[test]
    fn square_tables() {
        let f3 = gf(3, 1);
        assert!(!f3.is_square(Felt(2))); // squares in GF(3) are {0, 1}
        assert!(f3.sqrt(Felt(2)).is_err());
        let f5 = gf(5, 1);
        assert!(f5.is_square(Felt(4)));
        assert_eq!(f5.sqrt(Felt(4)).unwrap(), Felt(2)); // 2 < 3, smallest root

        // char 2: squaring is the Frobenius automorphism, hence onto.
        let f4 = gf(2, 2);
        for a in f4.elements() {
            assert!(f4.is_square(a));
            let r = f4.sqrt(a).unwrap();
            assert_eq!(f4.mul(r, r), a);
        }
        // (t+1)^2 = t in GF(4)
        assert_eq!(f4.sqrt(Felt(2)).unwrap(), Felt(3));
    }

    #[test]
    fn quadratic_root_search() {
        let f2 = gf(2, 1);
        // T^2 - T - 1 = T^2 + T + 1 over GF(2): rootless.
        assert!(!f2.quadratic_has_root(f2.int(-1), f2.int(-1)));
        let f4 = gf(2, 2);
        assert!(f4.quadratic_has_root(f4.one(), f4.one())); // roots t, t+1
        for f in [gf(2, 1), gf(3, 1), gf(5, 1), gf(2, 2)] {
            assert!(f.quadratic_has_root(f.int(-1), f.zero())); // T(T-1)
        }
    }

    #[test]
    fn element_enumeration() {
        assert_eq!(gf(2, 1).elements().count(), 2);
        assert_eq!(gf(3, 1).elements().collect::<Vec<_>>(), vec![Felt(0), Felt(1), Felt(2)]);
        assert_eq!(gf(2, 2).elements().count(), 4);
    }

    #[test]
    fn square_counts_match_field_parity() {
        for (p, k) in [(2, 1), (3, 1), (5, 1), (7, 1), (2, 2), (3, 2), (2, 3)] {
            let f = gf(p, k);
            let squares = f.elements().filter(|&a| f.is_square(a)).count();
            if p == 2 {
                assert_eq!(squares, f.q());
            } else {
                assert_eq!(squares, (f.q() + 1) / 2);
            }
        }
    }

    #[test]
    fn rootless_quadratic_counts() {
        // T^2 - T - a is rootless for exactly ceil((q-1)/2) values of a when
        // q is odd, and q/2 values when q is even.
        for (p, k) in [(2, 1), (3, 1), (5, 1), (7, 1), (2, 2), (3, 2), (2, 3)] {
            let f = gf(p, k);
            let rootless = f
                .elements()
                .filter(|&a| !f.quadratic_has_root(f.int(-1), f.neg(a)))
                .count();
            let expected = if f.q() % 2 == 0 { f.q() / 2 } else { (f.q() - 1) / 2 };
            assert_eq!(rootless, expected, "q = {}", f.q());
        }
    }

    #[test]
    fn parse_field_strings() {
        assert_eq!(Field::parse("2").unwrap().q(), 2);
        assert_eq!(Field::parse("2^2").unwrap().q(), 4);
        assert_eq!(Field::parse("9").unwrap().q(), 9);
        assert!(Field::parse("6").is_err());
        assert!(Field::parse("x").is_err());
    }

    #[test]
    fn exhaustive_field_axioms_small_fields() {
        for (p, k) in [(2, 1), (3, 1), (5, 1), (7, 1), (2, 2), (3, 2), (2, 3)] {
            let f = gf(p, k);
            let els: Vec<Felt> = f.elements().collect();
            for &a in &els {
                assert_eq!(f.add(a, f.neg(a)), Felt(0));
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), Felt(1));
                }
                assert_eq!(f.mul(a, f.one()), a);
                for &b in &els {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for &c in &els {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(
                            f.mul(a, f.add(b, c)),
                            f.add(f.mul(a, b), f.mul(a, c))
                        );
                    }
                }
            }
        }
    }

    proptest! {
        #[test]
        fn axioms_hold_in_larger_fields(a in 0usize..121, b in 0usize..121, c in 0usize..121) {
            let f = gf(11, 2); // q = 121
            let (a, b, c) = (f.elt(a), f.elt(b), f.elt(c));
            prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
            prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
            if !a.is_zero() {
                prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), Felt(1));
            }
            prop_assert_eq!(f.pow(a, 121), a); // Frobenius fixed field
        }
    }
}
