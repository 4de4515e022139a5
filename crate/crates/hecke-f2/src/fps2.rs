//! Truncated power series over GF(2), bit-packed.
//!
//! `prec` is exclusive: coefficients of `q^0 .. q^(prec-1)` are known, and
//! storage past `prec` is always zero.

use std::fmt;

use crate::error::{Error, Result};
use crate::words;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QExpansion {
    words: Vec<u64>,
    prec: usize,
}

impl QExpansion {
    pub fn zero(prec: usize) -> Self {
        assert!(prec >= 1, "precision must be positive");
        QExpansion {
            words: vec![0; words::nwords(prec)],
            prec,
        }
    }

    pub fn one(prec: usize) -> Self {
        Self::monomial(0, prec)
    }

    /// `q^e` to precision `prec` (zero if `e >= prec`).
    pub fn monomial(e: usize, prec: usize) -> Self {
        let mut s = Self::zero(prec);
        if e < prec {
            words::set(&mut s.words, e, true);
        }
        s
    }

    /// Sum of `q^e` over the given exponents; exponents past `prec` are dropped.
    pub fn from_exponents(exps: &[usize], prec: usize) -> Self {
        let mut s = Self::zero(prec);
        for &e in exps {
            if e < prec {
                words::flip(&mut s.words, e);
            }
        }
        s
    }

    /// Build from packed words; bits past `prec` are cleared.
    pub fn from_words(mut w: Vec<u64>, prec: usize) -> Self {
        assert!(prec >= 1, "precision must be positive");
        w.resize(words::nwords(prec), 0);
        words::mask_tail(&mut w, prec);
        QExpansion { words: w, prec }
    }

    pub fn prec(&self) -> usize {
        self.prec
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn coeff(&self, i: usize) -> Result<bool> {
        if i >= self.prec {
            return Err(Error::IndexBeyondPrecision {
                index: i,
                prec: self.prec,
            });
        }
        Ok(words::get(&self.words, i))
    }

    /// Coefficient without the precision check; zero past `prec`.
    #[inline]
    pub fn bit(&self, i: usize) -> bool {
        words::get(&self.words, i)
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        words::ones(&self.words)
    }

    pub fn is_zero(&self) -> bool {
        words::is_zero(&self.words)
    }

    /// Exponent of the lowest nonzero term.
    pub fn valuation(&self) -> Option<usize> {
        words::lowest(&self.words)
    }

    pub fn truncate(&self, prec: usize) -> Self {
        assert!(prec <= self.prec, "cannot raise precision by truncation");
        Self::from_words(self.words[..words::nwords(prec)].to_vec(), prec)
    }

    pub fn add(&self, other: &Self) -> Self {
        let prec = self.prec.min(other.prec);
        let mut w = self.words[..words::nwords(prec)].to_vec();
        words::xor_into(&mut w, &other.words);
        Self::from_words(w, prec)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let prec = self.prec.min(other.prec);
        let (sparse, dense) = if self.weight() <= other.weight() {
            (self, other)
        } else {
            (other, self)
        };
        let w = words::clmul_trunc(&sparse.words, &dense.words, prec);
        Self::from_words(w, prec)
    }

    pub fn square(&self) -> Self {
        self.substitute_qpow(2).truncate(self.prec)
    }

    pub fn pow(&self, n: u64) -> Self {
        let mut acc = Self::one(self.prec);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.square();
            }
        }
        acc
    }

    /// `q -> q^m`; the result knows `m * prec` coefficients.
    pub fn substitute_qpow(&self, m: usize) -> Self {
        assert!(m >= 1, "substitution exponent must be positive");
        let prec = m * self.prec;
        let mut w = vec![0u64; words::nwords(prec)];
        for i in self.support() {
            words::set(&mut w, i * m, true);
        }
        Self::from_words(w, prec)
    }

    fn weight(&self) -> u32 {
        self.words.iter().map(|x| x.count_ones()).sum()
    }

    /// Serialize as an F2QSER record.
    pub fn to_f2qser(&self, name: &str, level: u32) -> String {
        let mut hex = String::with_capacity(self.prec / 4 + 1);
        let digits = self.prec.div_ceil(4);
        for k in 0..digits {
            let mut nib = 0u32;
            for b in 0..4 {
                if self.bit(4 * k + b) {
                    nib |= 1 << b;
                }
            }
            hex.push(char::from_digit(nib, 16).unwrap());
        }
        format!(
            "F2QSER 1\nname={name} level={level} prec={}\n{hex}\n",
            self.prec
        )
    }
}

/// Header fields of an F2QSER record.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct F2QserHeader {
    pub name: String,
    pub level: u32,
}

pub fn parse_f2qser(text: &str) -> Result<(F2QserHeader, QExpansion)> {
    let bad = |m: &str| Error::Parse(m.to_string());
    let mut lines = text.lines();
    if lines.next().map(str::trim) != Some("F2QSER 1") {
        return Err(bad("missing F2QSER 1 header"));
    }
    let meta = lines.next().ok_or_else(|| bad("missing metadata line"))?;
    let (mut name, mut level, mut prec) = (None, None, None);
    for field in meta.split_whitespace() {
        let (k, v) = field
            .split_once('=')
            .ok_or_else(|| bad("metadata field without '='"))?;
        match k {
            "name" => name = Some(v.to_string()),
            "level" => level = Some(v.parse::<u32>().map_err(|_| bad("bad level"))?),
            "prec" => prec = Some(v.parse::<usize>().map_err(|_| bad("bad prec"))?),
            _ => return Err(bad("unknown metadata field")),
        }
    }
    let (name, level, prec) = match (name, level, prec) {
        (Some(n), Some(l), Some(p)) if p >= 1 => (n, l, p),
        _ => return Err(bad("incomplete metadata")),
    };
    let hex = lines.next().unwrap_or("").trim();
    if hex.len() != prec.div_ceil(4) {
        return Err(bad("hex length does not match precision"));
    }
    let mut s = QExpansion::zero(prec);
    for (k, ch) in hex.chars().enumerate() {
        if ch.is_ascii_uppercase() {
            return Err(bad("hex must be lowercase"));
        }
        let nib = ch.to_digit(16).ok_or_else(|| bad("invalid hex digit"))?;
        for b in 0..4 {
            if nib >> b & 1 == 1 {
                let i = 4 * k + b;
                if i >= prec {
                    return Err(bad("nonzero padding bit"));
                }
                words::set(&mut s.words, i, true);
            }
        }
    }
    Ok((F2QserHeader { name, level }, s))
}

pub fn add(a: &QExpansion, b: &QExpansion) -> QExpansion {
    a.add(b)
}

pub fn mul(a: &QExpansion, b: &QExpansion) -> QExpansion {
    a.mul(b)
}

pub fn pow(a: &QExpansion, n: u64) -> QExpansion {
    a.pow(n)
}

pub fn substitute_qpow(a: &QExpansion, m: usize) -> QExpansion {
    a.substitute_qpow(m)
}

pub fn coeff(a: &QExpansion, i: usize) -> Result<bool> {
    a.coeff(i)
}

/// Compare the first `p` coefficients; errors if either side knows fewer.
pub fn eq_to_prec(a: &QExpansion, b: &QExpansion, p: usize) -> Result<bool> {
    let have = a.prec.min(b.prec);
    if have < p {
        return Err(Error::InsufficientPrecision { needed: p, have });
    }
    Ok(a.truncate(p) == b.truncate(p))
}

impl fmt::Display for QExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for e in self.support() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match e {
                0 => write!(f, "1")?,
                1 => write!(f, "q")?,
                _ => write!(f, "q^{e}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.prec)
    }
}

impl fmt::Debug for QExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(exps: &[usize], p: usize) -> QExpansion {
        QExpansion::from_exponents(exps, p)
    }

    #[test]
    fn char_two_addition() {
        assert_eq!(s(&[1, 2], 10).add(&s(&[1, 3], 10)), s(&[2, 3], 10));
        let f = s(&[1, 5, 7], 9);
        assert!(f.add(&f).is_zero());
    }

    #[test]
    fn frobenius_square() {
        assert_eq!(s(&[1, 2], 10).mul(&s(&[1, 2], 10)), s(&[2, 4], 10));
        let d = s(&[1, 9, 25, 49], 50);
        assert_eq!(d.pow(2), s(&[2, 18], 50));
        assert_eq!(d.pow(0), QExpansion::one(50));
    }

    #[test]
    fn substitution_scales_precision() {
        let d = s(&[1, 9], 25);
        let t = d.substitute_qpow(3);
        assert_eq!(t.prec(), 75);
        assert_eq!(t.support().collect::<Vec<_>>(), vec![3, 27]);
    }

    #[test]
    fn coeff_checks_precision() {
        let d = s(&[1, 9, 25], 30);
        assert_eq!(d.coeff(25), Ok(true));
        assert!(matches!(
            d.coeff(30),
            Err(Error::IndexBeyondPrecision {
                index: 30,
                prec: 30
            })
        ));
        assert_eq!(QExpansion::zero(10).coeff(5), Ok(false));
    }

    #[test]
    fn eq_to_prec_refuses_short_inputs() {
        let a = s(&[1], 10);
        let b = s(&[1, 12], 20);
        assert_eq!(eq_to_prec(&a, &b, 10), Ok(true));
        assert!(eq_to_prec(&a, &b, 11).is_err());
    }

    #[test]
    fn f2qser_round_trip() {
        let d = s(&[1, 9, 25], 30);
        let text = d.to_f2qser("delta", 1);
        assert_eq!(text, "F2QSER 1\nname=delta level=1 prec=30\n20200020\n");
        let (h, back) = parse_f2qser(&text).unwrap();
        assert_eq!(h.name, "delta");
        assert_eq!(h.level, 1);
        assert_eq!(back, d);
    }

    #[test]
    fn f2qser_rejects_padding_bits() {
        assert!(parse_f2qser("F2QSER 1\nname=x level=1 prec=2\n4\n").is_err());
        assert!(parse_f2qser("F2QSER 1\nname=x level=1 prec=2\n2\n").is_ok());
    }

    #[test]
    fn display() {
        assert_eq!(s(&[0, 1, 9], 12).to_string(), "1 + q + q^9 + O(q^12)");
        assert_eq!(QExpansion::zero(3).to_string(), "0 + O(q^3)");
    }
}
