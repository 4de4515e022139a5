//! Hecke and auxiliary operators acting on q-expansions.
//!
//! In characteristic 2 with ℓ odd the factor ℓ^(k-1) is 1, so every operator
//! here is weight-independent and acts on the whole graded algebra at once.
//! Precision only ever shrinks, by the formulas on each function.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{Error, Result};
use crate::fps2::QExpansion;
use crate::genforms::check_level;
use crate::words;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OpKind {
    Tell,
    Tn,
    UN,
    U2,
    V2,
    Theta,
    Identity,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OpSpec {
    pub kind: OpKind,
    pub param: u64,
    pub level: u32,
}

impl OpSpec {
    pub fn t(ell: u64, level: u32) -> Result<Self> {
        check_level(level)?;
        if ell == 2 || !arith::is_prime(ell) || (level as u64).is_multiple_of(ell) {
            return Err(Error::InvalidPrime(ell));
        }
        Ok(OpSpec {
            kind: OpKind::Tell,
            param: ell,
            level,
        })
    }

    pub fn tn(n: u64, level: u32) -> Result<Self> {
        check_level(level)?;
        if n == 0 || arith::gcd(n, 2 * level as u64) != 1 {
            return Err(Error::InvalidIndex { n, level });
        }
        Ok(OpSpec {
            kind: OpKind::Tn,
            param: n,
            level,
        })
    }

    pub fn u(level: u32) -> Result<Self> {
        check_level(level)?;
        if level == 1 {
            return Err(Error::InvalidLevel(level));
        }
        Ok(OpSpec {
            kind: OpKind::UN,
            param: level as u64,
            level,
        })
    }

    pub fn simple(kind: OpKind, level: u32) -> Self {
        let param = match kind {
            OpKind::U2 | OpKind::V2 => 2,
            _ => 1,
        };
        OpSpec { kind, param, level }
    }

    /// Input precision needed for `out` output coefficients.
    pub fn input_prec(&self, out: usize) -> usize {
        match self.kind {
            OpKind::Tell | OpKind::Tn | OpKind::UN | OpKind::U2 => {
                self.param as usize * (out.max(1) - 1) + 1
            }
            OpKind::V2 => out.div_ceil(2),
            OpKind::Theta | OpKind::Identity => out,
        }
    }

    pub fn apply(&self, f: &QExpansion) -> Result<QExpansion> {
        match self.kind {
            OpKind::Tell => apply_tell(self.param, f),
            OpKind::Tn => apply_tn(self.param, self.level, f),
            OpKind::UN | OpKind::U2 => apply_u(self.param as usize, f),
            OpKind::V2 => Ok(f.substitute_qpow(2)),
            OpKind::Theta => Ok(theta(f)),
            OpKind::Identity => Ok(f.clone()),
        }
    }
}

impl fmt::Display for OpSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            OpKind::Tell | OpKind::Tn => write!(f, "T{}", self.param),
            OpKind::UN | OpKind::U2 => write!(f, "U{}", self.param),
            OpKind::V2 => write!(f, "V2"),
            OpKind::Theta => write!(f, "theta"),
            OpKind::Identity => write!(f, "id"),
        }
    }
}

impl FromStr for OpSpec {
    type Err = Error;

    /// Parses `T7`, `U3`, `U2`, `V2`, `theta`, `id` at level 1; use
    /// [`parse_op`] to supply a level.
    fn from_str(s: &str) -> Result<Self> {
        parse_op(s, 1)
    }
}

pub fn parse_op(s: &str, level: u32) -> Result<OpSpec> {
    let bad = || Error::Parse(format!("unknown operator {s:?}"));
    let s = s.trim();
    match s {
        "theta" => return Ok(OpSpec::simple(OpKind::Theta, level)),
        "id" => return Ok(OpSpec::simple(OpKind::Identity, level)),
        "U2" => return Ok(OpSpec::simple(OpKind::U2, level)),
        "V2" => return Ok(OpSpec::simple(OpKind::V2, level)),
        _ => {}
    }
    let (head, num) = s.split_at(1.min(s.len()));
    let n: u64 = num.parse().map_err(|_| bad())?;
    match head {
        "T" if arith::is_prime(n) => OpSpec::t(n, level),
        "T" => OpSpec::tn(n, level),
        "U" if n == level as u64 => OpSpec::u(level),
        _ => Err(bad()),
    }
}

/// a_m(T_ℓ f) = a_{mℓ}(f) + a_{m/ℓ}(f); output precision ⌊(P-1)/ℓ⌋ + 1.
pub fn apply_tell(ell: u64, f: &QExpansion) -> Result<QExpansion> {
    if ell < 3 || !arith::is_prime(ell) {
        return Err(Error::InvalidPrime(ell));
    }
    let ell = ell as usize;
    if f.prec() < ell {
        return Err(Error::InsufficientPrecision {
            needed: ell,
            have: f.prec(),
        });
    }
    let prec = (f.prec() - 1) / ell + 1;
    let mut w = vec![0u64; words::nwords(prec)];
    for m in 0..prec {
        let mut b = f.bit(m * ell);
        if m % ell == 0 {
            b ^= f.bit(m / ell);
        }
        if b {
            words::set(&mut w, m, true);
        }
    }
    Ok(QExpansion::from_words(w, prec))
}

/// a_i(U_m f) = a_{im}(f); output precision ⌊(P-1)/m⌋ + 1.
pub fn apply_u(m: usize, f: &QExpansion) -> Result<QExpansion> {
    assert!(m >= 1, "U index must be positive");
    if f.prec() < m {
        return Err(Error::InsufficientPrecision {
            needed: m,
            have: f.prec(),
        });
    }
    let prec = (f.prec() - 1) / m + 1;
    let mut w = vec![0u64; words::nwords(prec)];
    for i in 0..prec {
        if f.bit(i * m) {
            words::set(&mut w, i, true);
        }
    }
    Ok(QExpansion::from_words(w, prec))
}

/// T_n for n coprime to 2·level, via multiplicativity and
/// T_{ℓ^r} = T_ℓ T_{ℓ^(r-1)} + T_{ℓ^(r-2)}.
pub fn apply_tn(n: u64, level: u32, f: &QExpansion) -> Result<QExpansion> {
    if n == 0 || arith::gcd(n, 2 * level as u64) != 1 {
        return Err(Error::InvalidIndex { n, level });
    }
    let mut g = f.clone();
    for (ell, r) in arith::factor(n) {
        let mut prev = g.clone();
        let mut cur = apply_tell(ell, &g)?;
        for _ in 1..r {
            let next = apply_tell(ell, &cur)?;
            let p = next.prec();
            let next = next.add(&prev.truncate(p.min(prev.prec())));
            prev = cur;
            cur = next;
        }
        g = cur;
    }
    Ok(g)
}

/// θ mod 2: keep odd-index coefficients.
pub fn theta(f: &QExpansion) -> QExpansion {
    let mask = vec![0xAAAA_AAAA_AAAA_AAAAu64; f.words().len()];
    let w: Vec<u64> = f.words().iter().zip(&mask).map(|(a, b)| a & b).collect();
    QExpansion::from_words(w, f.prec())
}

/// V₂: q -> q².
pub fn v2(f: &QExpansion) -> QExpansion {
    f.substitute_qpow(2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genforms::{delta_mod2, f_generator};

    #[test]
    fn t5_kills_delta() {
        let d = delta_mod2(2000);
        assert!(apply_tell(5, &d).unwrap().is_zero());
    }

    #[test]
    fn t11_on_delta_cubed() {
        let d = delta_mod2(2200);
        let out = apply_tell(11, &d.pow(3)).unwrap();
        assert_eq!(out, delta_mod2(out.prec()));
    }

    #[test]
    fn precision_rules() {
        let f = f_generator(3, 100).unwrap();
        assert_eq!(apply_tell(7, &f).unwrap().prec(), 15);
        assert_eq!(apply_u(3, &f).unwrap().prec(), 34);
        assert!(apply_tell(7, &QExpansion::zero(6)).is_err());
        assert_eq!(theta(&f).prec(), 100);
    }

    #[test]
    fn constant_form_convention() {
        let one = QExpansion::one(100);
        assert!(apply_tell(7, &one).unwrap().is_zero());
        assert_eq!(apply_u(3, &one).unwrap(), QExpansion::one(34));
    }

    #[test]
    fn u3_inverts_fricke() {
        let d = delta_mod2(100);
        let back = apply_u(3, &d.substitute_qpow(3)).unwrap();
        assert_eq!(back, d);
    }

    #[test]
    fn tn_prime_power_recursion() {
        let f = f_generator(5, 900).unwrap();
        let t9 = apply_tn(9, 5, &f).unwrap();
        let t3 = apply_tell(3, &f).unwrap();
        let tt = apply_tell(3, &t3).unwrap();
        let expected = tt.add(&f.truncate(tt.prec()));
        assert_eq!(t9, expected);
        assert!(apply_tn(15, 5, &f).is_err());
        assert!(apply_tn(15, 1, &f).is_ok());
    }

    #[test]
    fn parse_ops() {
        assert_eq!(parse_op("T7", 3).unwrap(), OpSpec::t(7, 3).unwrap());
        assert_eq!(parse_op("U3", 3).unwrap().kind, OpKind::UN);
        assert!(parse_op("U3", 5).is_err());
        assert!(parse_op("T3", 3).is_err());
        assert_eq!(parse_op("T9", 5).unwrap().kind, OpKind::Tn);
        assert_eq!("theta".parse::<OpSpec>().unwrap().kind, OpKind::Theta);
    }
}
