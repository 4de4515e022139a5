//! Tangent spaces of pseudodeformation rings of the trivial mod-2
//! representation, as solution spaces of linear conditions on set maps
//! b: (Z/2)³ → F₂.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::f2la::BitMatrix;
use crate::galois::{coset_data, CosetData, FrattiniClass};

/// Linear equations over the eight unknowns b(g); equation bit `g.bits()`
/// is set when b(g) occurs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConstraintSystem {
    equations: Vec<u8>,
}

impl ConstraintSystem {
    /// The conditions b(1) = b(c) = 0 shared by every system.
    pub fn base(c: FrattiniClass) -> Self {
        let mut s = ConstraintSystem::default();
        s.vanish(FrattiniClass::IDENTITY);
        s.vanish(c);
        s
    }

    pub fn equations(&self) -> &[u8] {
        &self.equations
    }

    /// Add `Σ b(g) = 0` over `terms`, counted with multiplicity.
    pub fn push(&mut self, terms: &[FrattiniClass]) {
        let eq = terms.iter().fold(0u8, |acc, g| acc ^ (1 << g.bits()));
        self.equations.push(eq);
    }

    pub fn vanish(&mut self, g: FrattiniClass) {
        self.push(&[g]);
    }

    fn matrix(&self) -> BitMatrix {
        let rows: Vec<Vec<u64>> = self.equations.iter().map(|&e| vec![e as u64]).collect();
        BitMatrix::from_rows(&rows, 8)
    }

    pub fn nullity(&self) -> usize {
        8 - self.matrix().rank()
    }

    /// Basis of the solution space, as bitmasks over the classes.
    pub fn solution_basis(&self) -> Vec<u8> {
        self.matrix()
            .kernel()
            .into_iter()
            .map(|v| v[0] as u8)
            .collect()
    }

    pub fn satisfied_by(&self, b: u8) -> bool {
        self.equations
            .iter()
            .all(|&e| (e & b).count_ones().is_multiple_of(2))
    }

    /// Number of maps b out of all 256 that satisfy every equation.
    pub fn count_solutions(&self) -> usize {
        (0..=255u8).filter(|&b| self.satisfied_by(b)).count()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TangentSystem {
    Unrestricted,
    LevelN,
    PrimeQuotient,
    Reduced,
}

impl TangentSystem {
    pub const ALL: [TangentSystem; 4] = [
        TangentSystem::Unrestricted,
        TangentSystem::LevelN,
        TangentSystem::PrimeQuotient,
        TangentSystem::Reduced,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TangentSystem::Unrestricted => "unrestricted",
            TangentSystem::LevelN => "level-n",
            TangentSystem::PrimeQuotient => "prime-quotient",
            TangentSystem::Reduced => "reduced",
        }
    }
}

impl fmt::Display for TangentSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TangentSystem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown tangent system {s:?}")))
    }
}

/// b(di) = b(d) for d in D̄, i in Ī.
fn level_shape(s: &mut ConstraintSystem, cd: &CosetData) {
    for &d in &cd.dbar {
        for &i in &cd.ibar {
            s.push(&[d.mul(i), d]);
        }
    }
}

/// b(g) + b(gi) + b(dg) + b(dgi) = 0 for all g, d in D̄, i in Ī.
fn four_term(s: &mut ConstraintSystem, cd: &CosetData) {
    for g in FrattiniClass::all() {
        for &d in &cd.dbar {
            for &i in &cd.ibar {
                s.push(&[g, g.mul(i), d.mul(g), d.mul(g).mul(i)]);
            }
        }
    }
}

pub fn constraint_system(kind: TangentSystem, n_mod_8: u8) -> Result<ConstraintSystem> {
    let cd = coset_data(n_mod_8)?;
    let mut s = ConstraintSystem::base(cd.c_class);
    match kind {
        TangentSystem::Unrestricted => {}
        TangentSystem::LevelN => level_shape(&mut s, &cd),
        TangentSystem::PrimeQuotient => {
            for &d in &cd.dbar {
                s.vanish(d);
            }
            four_term(&mut s, &cd);
        }
        TangentSystem::Reduced => {
            for &i in &cd.ibar {
                s.vanish(i);
            }
            level_shape(&mut s, &cd);
            four_term(&mut s, &cd);
        }
    }
    Ok(s)
}

pub fn tan_dim_unrestricted() -> usize {
    constraint_system(TangentSystem::Unrestricted, 1)
        .expect("1 is a unit mod 8")
        .nullity()
}

pub fn tan_dim_level_n(n_mod_8: u8) -> Result<usize> {
    Ok(constraint_system(TangentSystem::LevelN, n_mod_8)?.nullity())
}

/// Nullity of the prime-quotient conditions; an upper bound for the tangent
/// dimension of every domain quotient.
pub fn tan_dim_prime_quotient_bound(n_mod_8: u8) -> Result<usize> {
    Ok(constraint_system(TangentSystem::PrimeQuotient, n_mod_8)?.nullity())
}

/// Nullity of the reduced-quotient conditions; an upper bound for the
/// tangent dimension of the reduced ring.
pub fn tan_dim_reduced_bound(n_mod_8: u8) -> Result<usize> {
    Ok(constraint_system(TangentSystem::Reduced, n_mod_8)?.nullity())
}

/// Classes on which some solution of the system is nonzero.
pub fn witness_support(kind: TangentSystem, n_mod_8: u8) -> Result<Vec<FrattiniClass>> {
    let basis = constraint_system(kind, n_mod_8)?.solution_basis();
    let mask = basis.iter().fold(0u8, |a, &b| a | b);
    Ok(FrattiniClass::all()
        .into_iter()
        .filter(|g| mask >> g.bits() & 1 == 1)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions() {
        assert_eq!(tan_dim_unrestricted(), 6);
        let table: Vec<_> = [1u8, 3, 5, 7]
            .iter()
            .map(|&r| {
                (
                    tan_dim_level_n(r).unwrap(),
                    tan_dim_prime_quotient_bound(r).unwrap(),
                    tan_dim_reduced_bound(r).unwrap(),
                )
            })
            .collect();
        assert_eq!(table, vec![(5, 5, 5), (4, 2, 3), (4, 2, 3), (4, 3, 3)]);
    }

    #[test]
    fn dropping_conjugation_frees_one() {
        let mut s = ConstraintSystem::default();
        s.vanish(FrattiniClass::IDENTITY);
        assert_eq!(s.nullity(), 7);
        assert_eq!(s.count_solutions(), 128);
    }
}
