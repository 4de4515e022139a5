//! The Frattini quotient Gal(Q(i, √2, √N)/Q) ≅ (Z/8)ˣ × {±1}, classes of
//! Frobenius elements, and the images of inertia and decomposition at N.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::{is_prime, jacobi};
use crate::error::{Error, Result};

/// An element of (Z/2)³ recorded by its action on (√−1, √2, √N); a set bit
/// means the square root is negated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FrattiniClass {
    pub eps_i: bool,
    pub eps_2: bool,
    pub eps_n: bool,
}

impl FrattiniClass {
    pub const IDENTITY: FrattiniClass = FrattiniClass::from_bits(0);

    pub const fn from_bits(b: u8) -> Self {
        FrattiniClass {
            eps_i: b & 4 != 0,
            eps_2: b & 2 != 0,
            eps_n: b & 1 != 0,
        }
    }

    /// Bits `(eps_i, eps_2, eps_N)` packed high to low.
    pub fn bits(self) -> u8 {
        (self.eps_i as u8) << 2 | (self.eps_2 as u8) << 1 | self.eps_n as u8
    }

    /// The class g_i^ε with `i` a unit mod 8 and `plus` meaning ε = +.
    pub fn from_label(i: u8, plus: bool) -> Result<Self> {
        let (eps_i, eps_2) = match i % 8 {
            1 => (false, false),
            3 => (true, true),
            5 => (false, true),
            7 => (true, false),
            _ => return Err(Error::Parse(format!("{i} is not a unit mod 8"))),
        };
        Ok(FrattiniClass {
            eps_i,
            eps_2,
            eps_n: !plus,
        })
    }

    /// `(i mod 8, ε = +)`.
    pub fn label(self) -> (u8, bool) {
        let i = match (self.eps_i, self.eps_2) {
            (false, false) => 1,
            (true, true) => 3,
            (false, true) => 5,
            (true, false) => 7,
        };
        (i, !self.eps_n)
    }

    /// The group law; the quotient is elementary abelian.
    pub fn mul(self, other: Self) -> Self {
        Self::from_bits(self.bits() ^ other.bits())
    }

    /// All eight classes in bit order.
    pub fn all() -> [FrattiniClass; 8] {
        std::array::from_fn(|b| Self::from_bits(b as u8))
    }
}

impl fmt::Display for FrattiniClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (i, plus) = self.label();
        write!(f, "g{}{}", i, if plus { '+' } else { '-' })
    }
}

impl FromStr for FrattiniClass {
    type Err = Error;

    /// Accepts `g7-`, `7-`, `g1+`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('g');
        let bad = || Error::Parse(format!("bad class label {s:?}"));
        let sign = t.chars().last().ok_or_else(bad)?;
        let plus = match sign {
            '+' => true,
            '-' => false,
            _ => return Err(bad()),
        };
        let i: u8 = t[..t.len() - 1].parse().map_err(|_| bad())?;
        Self::from_label(i, plus)
    }
}

/// Class of Frob_q for a prime `q` not dividing 2N.
pub fn frattini_class(q: u64, n: u32) -> Result<FrattiniClass> {
    if q == 2 || !is_prime(q) || q.is_multiple_of(n as u64) {
        return Err(Error::InvalidPrime(q));
    }
    Ok(FrattiniClass {
        eps_i: q % 4 == 3,
        eps_2: q % 8 == 3 || q % 8 == 5,
        eps_n: jacobi(n as i64, q) != 1,
    })
}

/// Images of inertia and decomposition at N, and the class of complex
/// conjugation, determined by N mod 8.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosetData {
    pub n_mod_8: u8,
    pub ibar: Vec<FrattiniClass>,
    pub dbar: Vec<FrattiniClass>,
    pub c_class: FrattiniClass,
}

impl CosetData {
    pub fn in_ibar(&self, g: FrattiniClass) -> bool {
        self.ibar.contains(&g)
    }

    pub fn in_dbar(&self, g: FrattiniClass) -> bool {
        self.dbar.contains(&g)
    }
}

pub fn coset_data(n_mod_8: u8) -> Result<CosetData> {
    if n_mod_8.is_multiple_of(2) || n_mod_8 >= 8 {
        return Err(Error::InvalidLevel(n_mod_8 as u32));
    }
    let ibar = vec![
        FrattiniClass::from_label(1, true)?,
        FrattiniClass::from_label(1, false)?,
    ];
    let frob = FrattiniClass::from_label(n_mod_8, true)?;
    let mut dbar = ibar.clone();
    for &i in &ibar {
        let d = i.mul(frob);
        if !dbar.contains(&d) {
            dbar.push(d);
        }
    }
    dbar.sort();
    Ok(CosetData {
        n_mod_8,
        ibar,
        dbar,
        c_class: FrattiniClass::from_label(7, true)?,
    })
}

/// The `count` smallest primes prime to 2N whose Frobenius lies in `cls`.
pub fn sample_primes(cls: FrattiniClass, n: u32, count: usize) -> Vec<u64> {
    (3u64..)
        .filter(|&q| is_prime(q) && q % n as u64 != 0)
        .filter(|&q| frattini_class(q, n).is_ok_and(|c| c == cls))
        .take(count)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_round_trip() {
        for c in FrattiniClass::all() {
            let (i, plus) = c.label();
            assert_eq!(FrattiniClass::from_label(i, plus).unwrap(), c);
            assert_eq!(c.to_string().parse::<FrattiniClass>().unwrap(), c);
        }
        assert!(FrattiniClass::from_label(4, true).is_err());
    }

    #[test]
    fn small_examples() {
        assert_eq!(frattini_class(73, 3).unwrap().to_string(), "g1+");
        assert_eq!(frattini_class(7, 3).unwrap().bits(), 0b101);
        assert_eq!(frattini_class(13, 5).unwrap().to_string(), "g5-");
        assert!(frattini_class(3, 3).is_err());
        assert!(frattini_class(9, 5).is_err());
    }

    #[test]
    fn cosets() {
        let d3 = coset_data(3).unwrap();
        assert_eq!(d3.dbar.len(), 4);
        assert!(!d3.in_dbar(d3.c_class));
        let d1 = coset_data(1).unwrap();
        assert_eq!(d1.dbar, {
            let mut v = d1.ibar.clone();
            v.sort();
            v
        });
        assert!(coset_data(7).unwrap().in_dbar(d1.c_class));
    }

    #[test]
    fn first_samples() {
        let g = |s: &str| s.parse::<FrattiniClass>().unwrap();
        assert_eq!(sample_primes(g("7-"), 3, 1), vec![7]);
        assert_eq!(sample_primes(g("5-"), 3, 1), vec![5]);
        assert_eq!(sample_primes(g("1+"), 5, 2), vec![41, 89]);
    }
}
