//! Companion-polynomial recurrences for operators on powers of a generator.
//!
//! For a generator `f` and an operator `op`, the sequence `s_n = op(f^n)`
//! satisfies `s_n = a_1(f) s_(n-1) + ... + a_d(f) s_(n-d)` for `n >= d`, with
//! `deg a_j <= j`. The recurrence turns operators into exact matrices on
//! `F_2[f]` of degree below any bound, with no precision loss.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::f2la::BitMatrix;
use crate::fps2::QExpansion;
use crate::genforms::GeneratorId;
use crate::heckeq::{OpKind, OpSpec};
use crate::words;

/// Extra q-expansion coefficients kept beyond a degree bound when converting.
pub const GUARD: usize = 16;

/// A polynomial over GF(2) in one variable, trimmed of leading zero words.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct F2Poly {
    words: Vec<u64>,
}

impl F2Poly {
    pub fn zero() -> Self {
        F2Poly { words: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    pub fn monomial(e: usize) -> Self {
        let mut w = vec![0u64; e / 64 + 1];
        words::set(&mut w, e, true);
        F2Poly { words: w }
    }

    pub fn from_exponents(exps: &[usize]) -> Self {
        let mut p = Self::zero();
        for &e in exps {
            p = p.add(&Self::monomial(e));
        }
        p
    }

    pub fn from_words(w: Vec<u64>) -> Self {
        let mut p = F2Poly { words: w };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn degree(&self) -> Option<usize> {
        words::highest(&self.words)
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn coeff(&self, e: usize) -> bool {
        words::get(&self.words, e)
    }

    pub fn exponents(&self) -> Vec<usize> {
        words::ones(&self.words).collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut w = self.words.clone();
        if w.len() < other.words.len() {
            w.resize(other.words.len(), 0);
        }
        words::xor_into(&mut w, &other.words);
        Self::from_words(w)
    }

    pub fn mul(&self, other: &Self) -> Self {
        match (self.degree(), other.degree()) {
            (Some(a), Some(b)) => {
                Self::from_words(words::clmul_trunc(&self.words, &other.words, a + b + 1))
            }
            _ => Self::zero(),
        }
    }

    fn fmt_ascending(&self, var: char) -> String {
        let terms: Vec<String> = self
            .exponents()
            .into_iter()
            .map(|e| match e {
                0 => "1".to_string(),
                1 => var.to_string(),
                _ => format!("{var}^{e}"),
            })
            .collect();
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        }
    }
}

impl fmt::Display for F2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_ascending('y'))
    }
}

impl fmt::Debug for F2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A form written as a polynomial in the level generator: bit `n` is the
/// coefficient of `f^n`, and every bit at or past `bound` is zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyCoord {
    coeffs: Vec<u64>,
    bound: usize,
}

impl PolyCoord {
    pub fn zero(bound: usize) -> Self {
        PolyCoord {
            coeffs: vec![0; words::nwords(bound).max(1)],
            bound,
        }
    }

    pub fn basis(n: usize, bound: usize) -> Self {
        let mut c = Self::zero(bound);
        assert!(n < bound, "basis index past bound");
        words::set(&mut c.coeffs, n, true);
        c
    }

    /// Bits past `bound` are dropped.
    pub fn from_words(mut w: Vec<u64>, bound: usize) -> Self {
        w.resize(words::nwords(bound).max(1), 0);
        words::mask_tail(&mut w, bound);
        PolyCoord { coeffs: w, bound }
    }

    pub fn from_poly(p: &F2Poly, bound: usize) -> Result<Self> {
        if p.degree().is_some_and(|d| d >= bound) {
            return Err(Error::InsufficientScale(format!(
                "polynomial of degree {:?} exceeds bound {bound}",
                p.degree()
            )));
        }
        Ok(Self::from_words(p.words().to_vec(), bound))
    }

    pub fn to_poly(&self) -> F2Poly {
        F2Poly::from_words(self.coeffs.clone())
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn words(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> bool {
        words::get(&self.coeffs, n)
    }

    pub fn degree(&self) -> Option<usize> {
        words::highest(&self.coeffs)
    }

    pub fn is_zero(&self) -> bool {
        words::is_zero(&self.coeffs)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.bound, other.bound, "degree bounds differ");
        let mut w = self.coeffs.clone();
        words::xor_into(&mut w, &other.coeffs);
        PolyCoord {
            coeffs: w,
            bound: self.bound,
        }
    }

    /// Product truncated to the common bound.
    pub fn mul_trunc(&self, other: &Self) -> Self {
        let bound = self.bound.min(other.bound);
        Self::from_words(
            words::clmul_trunc(&self.coeffs, &other.coeffs, bound),
            bound,
        )
    }

    pub fn with_bound(&self, bound: usize) -> Self {
        Self::from_words(self.coeffs.clone(), bound)
    }

    pub fn to_qexpansion(&self, gen: &QExpansion) -> QExpansion {
        let mut acc = QExpansion::zero(gen.prec());
        let mut p = QExpansion::one(gen.prec());
        let top = self.degree().map_or(0, |d| d + 1);
        for n in 0..top {
            if self.coeff(n) {
                acc = acc.add(&p);
            }
            p = p.mul(gen);
        }
        acc
    }
}

impl fmt::Display for PolyCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly().fmt_ascending('f'))
    }
}

impl fmt::Debug for PolyCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} (deg < {})", self.bound)
    }
}

/// Powers `gen^0 .. gen^(count-1)` at a fixed precision, for conversions.
#[derive(Clone)]
pub struct GenPowers {
    powers: Vec<QExpansion>,
}

impl GenPowers {
    pub fn new(gen: &QExpansion, count: usize) -> Result<Self> {
        if gen.prec() < 2 || !gen.bit(1) || gen.bit(0) {
            return Err(Error::Parse("generator must be q + O(q^2)".into()));
        }
        let mut powers = Vec::with_capacity(count);
        let mut p = QExpansion::one(gen.prec());
        for _ in 0..count {
            powers.push(p.clone());
            p = p.mul(gen);
        }
        Ok(GenPowers { powers })
    }

    pub fn prec(&self) -> usize {
        self.powers.first().map_or(0, |p| p.prec())
    }

    pub fn count(&self) -> usize {
        self.powers.len()
    }

    pub fn power(&self, n: usize) -> &QExpansion {
        &self.powers[n]
    }

    /// Triangular elimination against generator powers of degree < `bound`.
    /// Fails with `NotInAlgebra` if bits in `[bound, f.prec)` survive.
    pub fn from_qexpansion(&self, f: &QExpansion, bound: usize) -> Result<PolyCoord> {
        if f.prec() <= bound {
            return Err(Error::InsufficientPrecision {
                needed: bound + 1,
                have: f.prec(),
            });
        }
        if self.count() < bound || self.prec() < f.prec() {
            return Err(Error::InsufficientPrecision {
                needed: f.prec(),
                have: self.prec(),
            });
        }
        let prec = f.prec();
        let mut r = f.words().to_vec();
        let mut c = PolyCoord::zero(bound);
        for n in 0..bound {
            if words::get(&r, n) {
                words::xor_into(&mut r, self.powers[n].words());
                words::set(&mut c.coeffs, n, true);
            }
        }
        words::mask_tail(&mut r, prec);
        if let Some(lowest) = words::lowest(&r) {
            return Err(Error::NotInAlgebra { lowest });
        }
        Ok(c)
    }

    pub fn to_qexpansion(&self, c: &PolyCoord) -> QExpansion {
        let mut acc = QExpansion::zero(self.prec());
        for n in words::ones(c.words()) {
            acc = acc.add(&self.powers[n]);
        }
        acc
    }
}

/// Convert `f` to coordinates in powers of `gen` below `bound`.
pub fn from_qexpansion(f: &QExpansion, gen: &QExpansion, bound: usize) -> Result<PolyCoord> {
    if gen.prec() < f.prec() {
        return Err(Error::InsufficientPrecision {
            needed: f.prec(),
            have: gen.prec(),
        });
    }
    GenPowers::new(&gen.truncate(f.prec()), bound)?.from_qexpansion(f, bound)
}

/// `X^d + a_1 X^(d-1) + ... + a_d` with `a_j` in `F_2[y]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CompanionPoly {
    coeffs: Vec<F2Poly>,
}

impl CompanionPoly {
    /// `coeffs[j-1]` is `a_j`.
    pub fn new(coeffs: Vec<F2Poly>) -> Self {
        CompanionPoly { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, j: usize) -> &F2Poly {
        &self.coeffs[j - 1]
    }

    pub fn coeffs(&self) -> &[F2Poly] {
        &self.coeffs
    }

    /// deg a_j <= j for all j, and deg a_d = d.
    pub fn satisfies_degree_bounds(&self) -> bool {
        let d = self.order();
        self.coeffs
            .iter()
            .enumerate()
            .all(|(k, a)| a.degree().is_none_or(|e| e <= k + 1))
            && self.coeffs.last().and_then(F2Poly::degree) == Some(d)
    }

    /// Next term of the sequence given the previous `order` terms, newest last.
    pub fn step(&self, prev: &[F2Poly]) -> F2Poly {
        let d = self.order();
        assert!(prev.len() >= d);
        let n = prev.len();
        let mut acc = F2Poly::zero();
        for j in 1..=d {
            let a = &self.coeffs[j - 1];
            if !a.is_zero() {
                acc = acc.add(&a.mul(&prev[n - j]));
            }
        }
        acc
    }
}

impl fmt::Display for CompanionPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.order();
        let xpow = |k: usize| match k {
            0 => String::new(),
            1 => "X".to_string(),
            _ => format!("X^{k}"),
        };
        let mut terms = vec![xpow(d)];
        for (k, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let x = xpow(d - k - 1);
            let c = a.to_string();
            let c = if a.exponents().len() > 1 && !x.is_empty() {
                format!("({c})")
            } else if c == "1" && !x.is_empty() {
                String::new()
            } else {
                c
            };
            terms.push(format!("{c}{x}"));
        }
        if d == 0 {
            terms = vec!["1".to_string()];
        }
        f.write_str(&terms.join(" + "))
    }
}

impl fmt::Debug for CompanionPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for CompanionPoly {
    type Err = Error;

    /// Parses sums of terms `c X^k`, where `c` is `1`, `y^e`, or a
    /// parenthesized sum of such, and `X^k` may be a parenthesized sum of
    /// X-powers; repeated X-powers add up.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |m: &str| Error::Parse(format!("{m} in {s:?}"));
        let mut terms: Vec<(usize, F2Poly)> = Vec::new();
        for raw in split_top_level(s) {
            let t: String = raw.chars().filter(|c| !c.is_whitespace()).collect();
            let (coef, rest) = if let Some(inner) = t.strip_prefix('(') {
                let close = inner
                    .find(')')
                    .ok_or_else(|| bad("unbalanced parenthesis"))?;
                (
                    parse_ypoly(&inner[..close])?,
                    inner[close + 1..].to_string(),
                )
            } else if let Some(xpos) = t.find('X') {
                let head = &t[..xpos];
                let c = if head.is_empty() {
                    F2Poly::one()
                } else {
                    parse_ypoly(head)?
                };
                (c, t[xpos..].to_string())
            } else {
                (parse_ypoly(&t)?, String::new())
            };
            let xpow = |r: &str| -> Result<usize> {
                match r {
                    "" => Ok(0),
                    "X" => Ok(1),
                    r => r
                        .strip_prefix("X^")
                        .and_then(|e| e.parse().ok())
                        .ok_or_else(|| bad("bad X power")),
                }
            };
            if let Some(group) = rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
                for part in group.split('+') {
                    terms.push((xpow(part)?, coef.clone()));
                }
            } else {
                terms.push((xpow(&rest)?, coef));
            }
        }
        let d = terms
            .iter()
            .filter(|(_, c)| *c == F2Poly::one())
            .map(|(k, _)| *k)
            .max()
            .ok_or_else(|| bad("no monic leading term"))?;
        let mut coeffs = vec![F2Poly::zero(); d];
        let mut lead = 0;
        for (k, c) in terms {
            if k == d {
                lead ^= 1;
                if c != F2Poly::one() {
                    return Err(bad("leading coefficient must be 1"));
                }
            } else if k > d {
                return Err(bad("term above leading degree"));
            } else {
                coeffs[d - k - 1] = coeffs[d - k - 1].add(&c);
            }
        }
        if lead != 1 {
            return Err(bad("leading term must appear once"));
        }
        Ok(CompanionPoly::new(coeffs))
    }
}

fn split_top_level(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0;
    let mut cur = String::new();
    for ch in s.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '+' if depth == 0 => {
                out.push(std::mem::take(&mut cur));
                continue;
            }
            _ => {}
        }
        cur.push(ch);
    }
    out.push(cur);
    out
}

fn parse_ypoly(s: &str) -> Result<F2Poly> {
    let mut p = F2Poly::zero();
    for t in s.split('+') {
        let t = t.trim();
        let e = match t {
            "1" => 0,
            "y" => 1,
            _ => t
                .strip_prefix("y^")
                .and_then(|e| e.parse().ok())
                .ok_or_else(|| Error::Parse(format!("bad y-monomial {t:?}")))?,
        };
        p = p.add(&F2Poly::monomial(e));
    }
    Ok(p)
}

/// `op(gen^n)` for `0 <= n <= n_max` as exact polynomials in the generator,
/// computed from q-expansions with enough precision to certify degree <= n_max.
pub fn op_sequence(op: &OpSpec, gen: &GeneratorId, n_max: usize) -> Result<Vec<F2Poly>> {
    let bound = n_max + 1;
    let out_prec = bound + GUARD;
    let in_prec = op.input_prec(out_prec);
    let g_in = gen.expansion(in_prec);
    let conv = GenPowers::new(&gen.expansion(out_prec), bound)?;
    let mut p = QExpansion::one(in_prec);
    let mut seq = Vec::with_capacity(bound);
    for _ in 0..bound {
        let img = op.apply(&p)?.truncate(out_prec);
        seq.push(conv.from_qexpansion(&img, bound)?.to_poly());
        p = p.mul(&g_in);
    }
    Ok(seq)
}

fn default_order_bound(op: &OpSpec) -> usize {
    match op.kind {
        OpKind::Tell => op.param as usize + 1,
        OpKind::UN => op.param as usize,
        _ => 16,
    }
}

/// Smallest-order recurrence with `deg a_j <= j` fitting `op(gen^n)`.
pub fn derive_companion(
    op: &OpSpec,
    gen: &GeneratorId,
    order_bound: usize,
) -> Result<CompanionPoly> {
    let seq = op_sequence(op, gen, 5 * order_bound + 4)?;
    derive_from_sequence(&seq, order_bound)
}

/// As [`derive_companion`] with the natural bound (ℓ + 1 for T_ℓ, N for U_N).
pub fn derive_companion_default(op: &OpSpec, gen: &GeneratorId) -> Result<CompanionPoly> {
    derive_companion(op, gen, default_order_bound(op))
}

/// Fit on `n` in `[d, 3d + 4]`, then check `(3d + 4, 5d + 4]`.
pub fn derive_from_sequence(seq: &[F2Poly], order_bound: usize) -> Result<CompanionPoly> {
    for d in 1..=order_bound {
        let fit_end = 3 * d + 4;
        let check_end = 5 * d + 4;
        if seq.len() <= check_end {
            break;
        }
        let Some(c) = solve_order(seq, d, fit_end) else {
            continue;
        };
        if (fit_end + 1..=check_end).all(|n| c.step(&seq[..n]) == seq[n]) {
            return Ok(c);
        }
    }
    Err(Error::NoRecurrenceFound { order_bound })
}

fn solve_order(seq: &[F2Poly], d: usize, fit_end: usize) -> Option<CompanionPoly> {
    let mut offsets = Vec::with_capacity(d);
    let mut nvars = 0;
    for j in 1..=d {
        offsets.push(nvars);
        nvars += j + 1;
    }
    let mut rows: Vec<Vec<u64>> = Vec::new();
    let mut rhs: Vec<bool> = Vec::new();
    for n in d..=fit_end {
        for e in 0..=n {
            let mut row = vec![0u64; words::nwords(nvars)];
            for j in 1..=d {
                let s = &seq[n - j];
                for t in 0..=j.min(e) {
                    if s.coeff(e - t) {
                        words::set(&mut row, offsets[j - 1] + t, true);
                    }
                }
            }
            rows.push(row);
            rhs.push(seq[n].coeff(e));
        }
    }
    let m = BitMatrix::from_rows(&rows, nvars);
    let mut b = vec![0u64; words::nwords(rows.len())];
    for (i, &v) in rhs.iter().enumerate() {
        words::set(&mut b, i, v);
    }
    let x = m.solve(&b)?;
    if !m.kernel().is_empty() {
        return None;
    }
    let coeffs = (1..=d)
        .map(|j| {
            let exps: Vec<usize> = (0..=j)
                .filter(|&t| words::get(&x, offsets[j - 1] + t))
                .collect();
            F2Poly::from_exponents(&exps)
        })
        .collect();
    Some(CompanionPoly::new(coeffs))
}

/// Outcome of checking a recurrence against the q-expansion oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecurrenceReport {
    pub n_max: usize,
    pub first_failure: Option<usize>,
}

impl RecurrenceReport {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }
}

/// Check `s_n = Σ a_j(f) s_(n-j)` for `order <= n <= n_max`.
pub fn verify_recurrence(
    c: &CompanionPoly,
    op: &OpSpec,
    gen: &GeneratorId,
    n_max: usize,
) -> Result<RecurrenceReport> {
    let seq = op_sequence(op, gen, n_max)?;
    let first_failure = (c.order()..=n_max).find(|&n| c.step(&seq[..n]) != seq[n]);
    Ok(RecurrenceReport {
        n_max,
        first_failure,
    })
}

/// Matrix of `op` on `{f^0, ..., f^(bound-1)}`: column `n` is `op(f^n)`.
/// Seeds come from q-expansions, the rest from the recurrence; every column
/// is checked to have degree <= n, so the matrix is exact.
pub fn hecke_matrix(
    op: &OpSpec,
    gen: &GeneratorId,
    c: &CompanionPoly,
    bound: usize,
) -> Result<BitMatrix> {
    let d = c.order();
    let mut seq = op_sequence(op, gen, d.saturating_sub(1).max(1))?;
    seq.truncate(d.max(1).min(bound.max(1)));
    while seq.len() < bound {
        let next = c.step(&seq);
        seq.push(next);
    }
    seq.truncate(bound);
    columns_to_matrix(&seq, bound)
}

/// Matrix of `op` computed entirely from q-expansions at bootstrap precision.
pub fn hecke_matrix_direct(op: &OpSpec, gen: &GeneratorId, bound: usize) -> Result<BitMatrix> {
    let seq = op_sequence(op, gen, bound.max(1) - 1)?;
    columns_to_matrix(&seq[..bound], bound)
}

fn columns_to_matrix(seq: &[F2Poly], bound: usize) -> Result<BitMatrix> {
    let mut cols = Vec::with_capacity(bound);
    for (n, s) in seq.iter().enumerate() {
        if let Some(deg) = s.degree() {
            if deg > n {
                return Err(Error::InsufficientScale(format!(
                    "column {n} has degree {deg}, expected at most {n}"
                )));
            }
        }
        cols.push(PolyCoord::from_poly(s, bound)?.words().to_vec());
    }
    Ok(BitMatrix::from_cols(&cols, bound))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genforms::{delta_mod2, f_generator, GenName};

    #[test]
    fn generator_converts_to_e1() {
        let g = f_generator(3, 60).unwrap();
        let c = from_qexpansion(&g, &g, 40).unwrap();
        assert_eq!(c, PolyCoord::basis(1, 40));
    }

    #[test]
    fn q_plus_q2_not_in_delta_algebra() {
        let d = delta_mod2(30);
        let f = QExpansion::from_exponents(&[1, 2], 30);
        assert!(matches!(
            from_qexpansion(&f, &d, 10),
            Err(Error::NotInAlgebra { .. })
        ));
    }

    #[test]
    fn conversion_needs_precision() {
        let d = delta_mod2(10);
        assert!(matches!(
            from_qexpansion(&d, &d, 10),
            Err(Error::InsufficientPrecision { .. })
        ));
    }

    #[test]
    fn poly_round_trip() {
        let g = f_generator(5, 200).unwrap();
        let c = PolyCoord::from_words(vec![0b1011_0110], 40);
        let back = from_qexpansion(&c.to_qexpansion(&g), &g, 40).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn companion_text_round_trip() {
        let text = "X^8 + (y + y^2)X^4 + (y + y^2)X^3 + (y + y^2 + y^3 + y^4)X^2 + (y + y^2 + y^3 + y^4)X + y^8";
        let c: CompanionPoly = text.parse().unwrap();
        assert_eq!(c.order(), 8);
        assert_eq!(c.to_string(), text);
        assert!(c.satisfies_degree_bounds());
        let grouped: CompanionPoly = "X^8 + (y^2+y)(X^4+X^3) + (y^4+y^3+y^2+y)(X^2+X) + y^8"
            .parse()
            .unwrap();
        assert_eq!(grouped, c);
    }

    #[test]
    fn u3_companion_small() {
        let gen = GeneratorId::new(3, GenName::F3).unwrap();
        let op = OpSpec::u(3).unwrap();
        let c = derive_companion(&op, &gen, 3).unwrap();
        assert_eq!(c.to_string(), "X^3 + yX^2 + (y + y^2)X + y + y^3");
    }

    #[test]
    fn matrix_first_columns() {
        let gen = GeneratorId::new(3, GenName::F3).unwrap();
        let t7 = OpSpec::t(7, 3).unwrap();
        let c = derive_companion_default(&t7, &gen).unwrap();
        let m = hecke_matrix(&t7, &gen, &c, 30).unwrap();
        assert!(words::is_zero(&m.col(0)));
        assert_eq!(m, hecke_matrix_direct(&t7, &gen, 30).unwrap());
        let u3 = OpSpec::u(3).unwrap();
        let cu = derive_companion_default(&u3, &gen).unwrap();
        let mu = hecke_matrix(&u3, &gen, &cu, 30).unwrap();
        assert_eq!(mu.col(0), PolyCoord::basis(0, 30).words().to_vec());
    }
}
