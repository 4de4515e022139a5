//! Generators of the mod-2 form algebras at levels 1, 3 and 5.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fps2::QExpansion;
use crate::words;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GenName {
    Delta,
    F3,
    F5,
}

/// A named generator in the context of a level.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GeneratorId {
    level: u32,
    name: GenName,
}

impl GeneratorId {
    pub fn new(level: u32, name: GenName) -> Result<Self> {
        check_level(level)?;
        match (name, level) {
            (GenName::Delta, _) | (GenName::F3, 3) | (GenName::F5, 5) => {
                Ok(GeneratorId { level, name })
            }
            _ => Err(Error::InvalidLevel(level)),
        }
    }

    /// The polynomial generator of the level: Δ̄ at level 1, f_N otherwise.
    pub fn for_level(level: u32) -> Result<Self> {
        let name = match check_level(level)? {
            1 => GenName::Delta,
            3 => GenName::F3,
            _ => GenName::F5,
        };
        Ok(GeneratorId { level, name })
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn name(&self) -> GenName {
        self.name
    }

    pub fn expansion(&self, prec: usize) -> QExpansion {
        match self.name {
            GenName::Delta => delta_mod2(prec),
            GenName::F3 => f_generator_unchecked(3, prec),
            GenName::F5 => f_generator_unchecked(5, prec),
        }
    }
}

impl fmt::Display for GenName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GenName::Delta => "delta",
            GenName::F3 => "f3",
            GenName::F5 => "f5",
        })
    }
}

impl FromStr for GenName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "delta" => Ok(GenName::Delta),
            "f3" => Ok(GenName::F3),
            "f5" => Ok(GenName::F5),
            _ => Err(Error::Parse(format!("unknown generator {s:?}"))),
        }
    }
}

pub fn check_level(level: u32) -> Result<u32> {
    match level {
        1 | 3 | 5 => Ok(level),
        _ => Err(Error::InvalidLevel(level)),
    }
}

/// Δ̄ = Σ_{n odd} q^(n²).
pub fn delta_mod2(prec: usize) -> QExpansion {
    let mut exps = Vec::new();
    let mut n = 1usize;
    while n * n < prec {
        exps.push(n * n);
        n += 2;
    }
    QExpansion::from_exponents(&exps, prec)
}

/// Parity of σ₃(n) for 0 <= n < len. σ₃(n) ≡ σ₁(n) ≡ number of odd divisors mod 2.
pub fn sigma3_parity(len: usize) -> Vec<u64> {
    let mut w = vec![0u64; words::nwords(len).max(1)];
    for d in 1..len {
        if d % 2 == 1 {
            let mut m = d;
            while m < len {
                words::flip(&mut w, m);
                m += d;
            }
        }
    }
    w
}

/// f_N with a_n = σ₃(n) - [N | n] σ₃(n/N) mod 2, for N in {3, 5}.
pub fn f_generator(n: u32, prec: usize) -> Result<QExpansion> {
    match n {
        3 | 5 => Ok(f_generator_unchecked(n, prec)),
        _ => Err(Error::InvalidLevel(n)),
    }
}

fn f_generator_unchecked(n: u32, prec: usize) -> QExpansion {
    let sig = sigma3_parity(prec);
    let mut w = sig.clone();
    let n = n as usize;
    let mut m = n;
    while m < prec {
        if words::get(&sig, m / n) {
            words::flip(&mut w, m);
        }
        m += n;
    }
    words::set(&mut w, 0, false);
    QExpansion::from_words(w, prec)
}

/// Mod-2 Fricke image of a level-1 form at level N: q -> q^N.
pub fn fricke_image(g: &QExpansion, n: u32) -> QExpansion {
    g.substitute_qpow(n as usize)
}
