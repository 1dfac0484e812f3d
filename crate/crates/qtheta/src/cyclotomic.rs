//! Exact arithmetic in the cyclotomic field Q(zeta_12).
//!
//! Every coefficient constant that shows up in the theta identities lives in
//! this one field: with zeta = e^{i pi/6},
//!
//! - i       = zeta^3,
//! - omega   = e^{2 pi i/3} = zeta^4,
//! - sqrt(3) = zeta + zeta^{-1} = 2*zeta - zeta^3 ... (reduced form below),
//! - gamma   = (1 + sqrt(-3))/2 = zeta^2.
//!
//! Elements are stored in the power basis {1, zeta, zeta^2, zeta^3} with
//! exact rational coordinates; reduction uses the minimal polynomial
//! Phi_12(x) = x^4 - x^2 + 1, i.e. zeta^4 = zeta^2 - 1.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::Zero;

use crate::error::Error;

/// Exact rational scalar used throughout the crate.
pub type Rat = num::BigRational;

/// Rational `n/d` from machine integers.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Rational from an integer.
pub fn rati(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// An element of Q(zeta_12) in the reduced power basis {1, zeta, zeta^2, zeta^3}.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyc12 {
    c: [Rat; 4],
}

/// zeta^k for k = 0..11 expressed in the reduced basis.
/// Row k holds the integer coordinates of zeta^k.
const UNIT_TABLE: [[i64; 4]; 12] = [
    [1, 0, 0, 0],
    [0, 1, 0, 0],
    [0, 0, 1, 0],
    [0, 0, 0, 1],
    [-1, 0, 1, 0],
    [0, -1, 0, 1],
    [-1, 0, 0, 0],
    [0, -1, 0, 0],
    [0, 0, -1, 0],
    [0, 0, 0, -1],
    [1, 0, -1, 0],
    [0, 1, 0, -1],
];

impl Cyc12 {
    pub fn new(c: [Rat; 4]) -> Self {
        Cyc12 { c }
    }

    pub fn zero() -> Self {
        Cyc12::new(std::array::from_fn(|_| Rat::zero()))
    }

    pub fn one() -> Self {
        Cyc12::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Cyc12::from_rat(rati(n))
    }

    pub fn from_rat(r: Rat) -> Self {
        let mut c = std::array::from_fn(|_| Rat::zero());
        c[0] = r;
        Cyc12 { c }
    }

    /// The 12th root of unity zeta^k (k taken mod 12).
    pub fn unit(k: i64) -> Self {
        let k = k.rem_euclid(12) as usize;
        let row = &UNIT_TABLE[k];
        Cyc12::new(std::array::from_fn(|i| rati(row[i])))
    }

    /// i = zeta^3.
    pub fn i() -> Self {
        Cyc12::unit(3)
    }

    /// omega = e^{2 pi i / 3} = zeta^4.
    pub fn omega() -> Self {
        Cyc12::unit(4)
    }

    /// sqrt(3) = zeta + zeta^{-1}, the positive square root.
    pub fn sqrt3() -> Self {
        Cyc12::unit(1) + Cyc12::unit(11)
    }

    pub fn coeffs(&self) -> &[Rat; 4] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    /// Some(r) when the element is the rational number r.
    pub fn as_rat(&self) -> Option<&Rat> {
        if self.c[1].is_zero() && self.c[2].is_zero() && self.c[3].is_zero() {
            Some(&self.c[0])
        } else {
            None
        }
    }

    pub fn scale(&self, r: &Rat) -> Self {
        Cyc12::new(std::array::from_fn(|i| &self.c[i] * r))
    }

    /// Image under the Galois map zeta -> zeta^k (k coprime to 12).
    fn galois(&self, k: i64) -> Self {
        let mut out = Cyc12::zero();
        for (j, cj) in self.c.iter().enumerate() {
            if cj.is_zero() {
                continue;
            }
            out += Cyc12::unit(k * j as i64).scale(cj);
        }
        out
    }

    /// Multiplicative inverse. Errors on zero.
    ///
    /// Uses the product of the three nontrivial Galois conjugates: the field
    /// norm a * s5(a) * s7(a) * s11(a) is rational, so the inverse is the
    /// conjugate product divided by the norm.
    pub fn inv(&self) -> Result<Cyc12, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let t = &(&self.galois(5) * &self.galois(7)) * &self.galois(11);
        let norm = self * &t;
        let n = norm
            .as_rat()
            .expect("norm of a cyclotomic element is rational");
        Ok(t.scale(&n.recip()))
    }

    /// Small non-negative power; mostly a convenience for tests.
    pub fn pow(&self, mut k: u32) -> Cyc12 {
        let mut base = self.clone();
        let mut acc = Cyc12::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Numeric embedding with zeta = e^{i pi/6}.
    pub fn embed(&self) -> num::complex::Complex64 {
        use num::complex::Complex64;
        let mut out = Complex64::new(0.0, 0.0);
        for (j, cj) in self.c.iter().enumerate() {
            if cj.is_zero() {
                continue;
            }
            let angle = std::f64::consts::PI * (j as f64) / 6.0;
            out += Complex64::from_polar(1.0, angle) * rat_to_f64(cj);
        }
        out
    }

    /// Parse the canonical rendering produced by `Display`.
    pub fn from_canonical_str(s: &str) -> Result<Cyc12, String> {
        let parts: Vec<&str> = s.split(" + ").collect();
        if parts.len() != 4 {
            return Err(format!(
                "expected 4 basis components separated by \" + \", got {}",
                parts.len()
            ));
        }
        let mut c = std::array::from_fn(|_| Rat::zero());
        for (k, part) in parts.iter().enumerate() {
            let num = match k {
                0 => *part,
                1 => part
                    .strip_suffix("*z")
                    .ok_or_else(|| format!("component {k} missing \"*z\" suffix: {part:?}"))?,
                _ => part
                    .strip_suffix(&format!("*z^{k}"))
                    .ok_or_else(|| format!("component {k} missing \"*z^{k}\" suffix: {part:?}"))?,
            };
            c[k] = parse_rat(num)?;
        }
        Ok(Cyc12::new(c))
    }
}

fn parse_rat(s: &str) -> Result<Rat, String> {
    let (np, dp) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = np
        .parse()
        .map_err(|_| format!("bad rational numerator: {s:?}"))?;
    let d: BigInt = dp
        .parse()
        .map_err(|_| format!("bad rational denominator: {s:?}"))?;
    if d.is_zero() {
        return Err(format!("zero denominator in rational: {s:?}"));
    }
    Ok(Rat::new(n, d))
}

/// Lossy conversion used only at the numeric boundary.
pub fn rat_to_f64(r: &Rat) -> f64 {
    use num::ToPrimitive;
    r.to_f64().unwrap_or_else(|| {
        let n = r.numer().to_f64().unwrap_or(f64::NAN);
        let d = r.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

impl Add for &Cyc12 {
    type Output = Cyc12;
    fn add(self, rhs: &Cyc12) -> Cyc12 {
        Cyc12::new(std::array::from_fn(|i| &self.c[i] + &rhs.c[i]))
    }
}

impl Add for Cyc12 {
    type Output = Cyc12;
    fn add(self, rhs: Cyc12) -> Cyc12 {
        &self + &rhs
    }
}

impl AddAssign<Cyc12> for Cyc12 {
    fn add_assign(&mut self, rhs: Cyc12) {
        for i in 0..4 {
            self.c[i] += &rhs.c[i];
        }
    }
}

impl Sub for &Cyc12 {
    type Output = Cyc12;
    fn sub(self, rhs: &Cyc12) -> Cyc12 {
        Cyc12::new(std::array::from_fn(|i| &self.c[i] - &rhs.c[i]))
    }
}

impl Sub for Cyc12 {
    type Output = Cyc12;
    fn sub(self, rhs: Cyc12) -> Cyc12 {
        &self - &rhs
    }
}

impl Neg for &Cyc12 {
    type Output = Cyc12;
    fn neg(self) -> Cyc12 {
        Cyc12::new(std::array::from_fn(|i| -&self.c[i]))
    }
}

impl Neg for Cyc12 {
    type Output = Cyc12;
    fn neg(self) -> Cyc12 {
        -&self
    }
}

impl Mul for &Cyc12 {
    type Output = Cyc12;
    fn mul(self, rhs: &Cyc12) -> Cyc12 {
        // Schoolbook product in degree <= 6, then reduce with
        // zeta^4 = zeta^2 - 1, zeta^5 = zeta^3 - zeta, zeta^6 = -1.
        let mut raw: [Rat; 7] = std::array::from_fn(|_| Rat::zero());
        for i in 0..4 {
            if self.c[i].is_zero() {
                continue;
            }
            for j in 0..4 {
                if rhs.c[j].is_zero() {
                    continue;
                }
                raw[i + j] += &self.c[i] * &rhs.c[j];
            }
        }
        let c0 = &raw[0] - &raw[4] - &raw[6];
        let c1 = &raw[1] - &raw[5];
        let c2 = &raw[2] + &raw[4];
        let c3 = &raw[3] + &raw[5];
        Cyc12::new([c0, c1, c2, c3])
    }
}

impl Mul for Cyc12 {
    type Output = Cyc12;
    fn mul(self, rhs: Cyc12) -> Cyc12 {
        &self * &rhs
    }
}

impl fmt::Display for Cyc12 {
    /// Canonical rendering: always all four components, e.g.
    /// `-1 + 0*z + 1/2*z^2 + 0*z^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} + {}*z + {}*z^2 + {}*z^3",
            self.c[0], self.c[1], self.c[2], self.c[3]
        )
    }
}

impl fmt::Debug for Cyc12 {
    // Debug = Display keeps mismatch reports readable.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: num::complex::Complex64, b: num::complex::Complex64, tol: f64) -> bool {
        (a - b).norm() <= tol
    }

    #[test]
    fn unit_relations() {
        // zeta^k pairwise distinct, zeta^12 = 1.
        for k in 0..12 {
            for l in 0..k {
                assert_ne!(Cyc12::unit(k), Cyc12::unit(l), "zeta^{k} == zeta^{l}");
            }
        }
        let mut p = Cyc12::one();
        for _ in 0..12 {
            p = &p * &Cyc12::unit(1);
        }
        assert_eq!(p, Cyc12::one());
    }

    #[test]
    fn add_examples() {
        // omega + omega^2 = -1
        assert_eq!(
            Cyc12::unit(4) + Cyc12::unit(8),
            Cyc12::from_int(-1)
        );
        // x + 0 = x
        let x = Cyc12::new([rat(1, 2), rati(3), rati(0), rat(-7, 5)]);
        assert_eq!(&x + &Cyc12::zero(), x);
        // (zeta + zeta^11) + (zeta + zeta^11) = 2*sqrt(3); by hand
        // zeta^11 = zeta - zeta^3 so sqrt(3) = 2*zeta - zeta^3.
        let two_sqrt3 = Cyc12::sqrt3() + Cyc12::sqrt3();
        assert_eq!(
            two_sqrt3,
            Cyc12::new([rati(0), rati(4), rati(0), rati(-2)])
        );
    }

    #[test]
    fn mul_examples() {
        // i^2 = -1
        assert_eq!(&Cyc12::unit(3) * &Cyc12::unit(3), Cyc12::from_int(-1));
        // omega^3 = 1
        assert_eq!(Cyc12::omega().pow(3), Cyc12::one());
        // sqrt(3)^2 = 3
        assert_eq!(&Cyc12::sqrt3() * &Cyc12::sqrt3(), Cyc12::from_int(3));
    }

    #[test]
    fn inv_examples() {
        // 1/i = -i = zeta^9
        assert_eq!(Cyc12::unit(3).inv().unwrap(), Cyc12::unit(9));
        // 1/2
        assert_eq!(
            Cyc12::from_int(2).inv().unwrap(),
            Cyc12::from_rat(rat(1, 2))
        );
        // 1/omega = omega^2
        assert_eq!(Cyc12::unit(4).inv().unwrap(), Cyc12::unit(8));
        assert!(matches!(
            Cyc12::zero().inv(),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn embed_examples() {
        use num::complex::Complex64;
        assert!(close(
            Cyc12::unit(3).embed(),
            Complex64::new(0.0, 1.0),
            1e-15
        ));
        assert!(close(
            Cyc12::unit(4).embed(),
            Complex64::new(-0.5, 0.8660254037844386),
            1e-14
        ));
        assert!(close(
            Cyc12::sqrt3().embed(),
            Complex64::new(1.7320508075688772, 0.0),
            1e-14
        ));
    }

    #[test]
    fn embed_is_multiplicative() {
        let a = Cyc12::new([rat(1, 3), rati(-2), rat(5, 7), rati(1)]);
        let b = Cyc12::new([rati(2), rat(-1, 2), rati(0), rat(3, 4)]);
        let lhs = (&a * &b).embed();
        let rhs = a.embed() * b.embed();
        assert!(close(lhs, rhs, 1e-12));
    }

    #[test]
    fn canonical_roundtrip() {
        let a = Cyc12::new([rat(-1, 2), rati(0), rati(7), rat(22, 3)]);
        let s = a.to_string();
        assert_eq!(s, "-1/2 + 0*z + 7*z^2 + 22/3*z^3");
        assert_eq!(Cyc12::from_canonical_str(&s).unwrap(), a);
    }
}
