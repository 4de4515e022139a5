//! Finite-scale structure of the Hecke algebras: the pairing ⟨T, f⟩ = a₁(Tf),
//! dual bases to monomials, two-variable series relations, nilpotence and
//! Hilbert–Samuel data, and the Frobenius-at-N operator.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::f2la::BitMatrix;
use crate::heckeq::OpSpec;
use crate::recur::PolyCoord;
use crate::spaces::{combine, FormSpace, HeckeContext};
use crate::words;

/// A formal GF(2) combination of products of named operators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OperatorExpr {
    Identity,
    Op(OpSpec),
    Sum(Vec<OperatorExpr>),
    Product(Vec<OperatorExpr>),
}

impl OperatorExpr {
    pub fn t(ell: u64, level: u32) -> Result<Self> {
        Ok(OperatorExpr::Op(OpSpec::t(ell, level)?))
    }

    pub fn u(level: u32) -> Result<Self> {
        Ok(OperatorExpr::Op(OpSpec::u(level)?))
    }

    /// U_N' = U_N + 1.
    pub fn u_prime(level: u32) -> Result<Self> {
        Ok(OperatorExpr::Sum(vec![
            Self::u(level)?,
            OperatorExpr::Identity,
        ]))
    }

    pub fn zero() -> Self {
        OperatorExpr::Sum(Vec::new())
    }

    pub fn plus(self, other: OperatorExpr) -> Self {
        OperatorExpr::Sum(vec![self, other])
    }

    pub fn times(self, other: OperatorExpr) -> Self {
        OperatorExpr::Product(vec![self, other])
    }

    /// `Π gens[i]^exps[i]`.
    pub fn monomial(gens: &[OperatorExpr], exps: &[usize]) -> Self {
        let mut factors = Vec::new();
        for (g, &e) in gens.iter().zip(exps) {
            factors.extend(std::iter::repeat_n(g.clone(), e));
        }
        match factors.len() {
            0 => OperatorExpr::Identity,
            1 => factors.pop().unwrap(),
            _ => OperatorExpr::Product(factors),
        }
    }

    /// `s(x, y)` as an operator expression.
    pub fn series(s: &BiSeries, x: &OperatorExpr, y: &OperatorExpr) -> Self {
        let gens = [x.clone(), y.clone()];
        OperatorExpr::Sum(
            s.monomials()
                .into_iter()
                .map(|(a, b)| Self::monomial(&gens, &[a, b]))
                .collect(),
        )
    }

    pub fn evaluate(&self, ctx: &HeckeContext) -> Result<BitMatrix> {
        let n = ctx.bound();
        match self {
            OperatorExpr::Identity => Ok(BitMatrix::identity(n)),
            OperatorExpr::Op(op) => Ok(ctx.matrix(op)?.clone()),
            OperatorExpr::Sum(terms) => {
                let mut acc = BitMatrix::zeros(n, n);
                for t in terms {
                    acc = acc.add(&t.evaluate(ctx)?);
                }
                Ok(acc)
            }
            OperatorExpr::Product(factors) => {
                let mut acc = BitMatrix::identity(n);
                for f in factors {
                    acc = acc.mul(&f.evaluate(ctx)?);
                }
                Ok(acc)
            }
        }
    }

    pub fn apply(&self, ctx: &HeckeContext, v: &PolyCoord) -> Result<PolyCoord> {
        Ok(PolyCoord::from_words(
            self.evaluate(ctx)?.mul_vec(v.words()),
            ctx.bound(),
        ))
    }
}

impl fmt::Display for OperatorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OperatorExpr::Identity => write!(f, "1"),
            OperatorExpr::Op(op) => write!(f, "{op}"),
            OperatorExpr::Sum(ts) if ts.is_empty() => write!(f, "0"),
            OperatorExpr::Sum(ts) => {
                let parts: Vec<String> = ts.iter().map(|t| t.to_string()).collect();
                write!(f, "({})", parts.join(" + "))
            }
            OperatorExpr::Product(ts) => {
                let parts: Vec<String> = ts.iter().map(|t| t.to_string()).collect();
                write!(f, "{}", parts.join("*"))
            }
        }
    }
}

/// Index of `x^a y^b` in graded order: by total degree, then decreasing `a`.
pub fn monomial_index(a: usize, b: usize) -> usize {
    let t = a + b;
    t * (t + 1) / 2 + b
}

/// Monomials of total degree < d in graded order.
pub fn monomials_below(d: usize) -> Vec<(usize, usize)> {
    (0..d)
        .flat_map(|t| (0..=t).map(move |b| (t - b, b)))
        .collect()
}

/// A two-variable power series over GF(2) truncated at a total degree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BiSeries {
    bits: Vec<u64>,
    degree_bound: usize,
    vars: (char, char),
}

impl BiSeries {
    pub fn zero(degree_bound: usize, vars: (char, char)) -> Self {
        let n = monomial_index(0, degree_bound);
        BiSeries {
            bits: vec![0; words::nwords(n).max(1)],
            degree_bound,
            vars,
        }
    }

    pub fn from_monomials(
        terms: &[(usize, usize)],
        degree_bound: usize,
        vars: (char, char),
    ) -> Self {
        let mut s = Self::zero(degree_bound, vars);
        for &(a, b) in terms {
            if a + b < degree_bound {
                words::flip(&mut s.bits, monomial_index(a, b));
            }
        }
        s
    }

    pub fn degree_bound(&self) -> usize {
        self.degree_bound
    }

    pub fn vars(&self) -> (char, char) {
        self.vars
    }

    pub fn coeff(&self, a: usize, b: usize) -> bool {
        a + b < self.degree_bound && words::get(&self.bits, monomial_index(a, b))
    }

    pub fn set(&mut self, a: usize, b: usize, v: bool) {
        assert!(a + b < self.degree_bound, "monomial past degree bound");
        words::set(&mut self.bits, monomial_index(a, b), v);
    }

    /// Nonzero monomials in graded order.
    pub fn monomials(&self) -> Vec<(usize, usize)> {
        monomials_below(self.degree_bound)
            .into_iter()
            .filter(|&(a, b)| self.coeff(a, b))
            .collect()
    }

    /// Drop every term of total degree >= `d`.
    pub fn truncate(&self, d: usize) -> Self {
        let d = d.min(self.degree_bound);
        Self::from_monomials(&self.monomials(), d, self.vars)
    }

    /// Keep only the terms satisfying `keep`.
    pub fn filter(&self, keep: impl Fn(usize, usize) -> bool) -> Self {
        let ms: Vec<_> = self
            .monomials()
            .into_iter()
            .filter(|&(a, b)| keep(a, b))
            .collect();
        Self::from_monomials(&ms, self.degree_bound, self.vars)
    }

    /// `[{"monomial": [a, b], "coeff": 1}, ...]`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.monomials()
                .into_iter()
                .map(|(a, b)| {
                    let mut m = serde_json::Map::new();
                    m.insert("monomial".into(), serde_json::json!([a, b]));
                    m.insert("coeff".into(), serde_json::json!(1));
                    serde_json::Value::Object(m)
                })
                .collect(),
        )
    }

    /// Parse a term list such as `xy + x^3y + z^2`; terms at or past
    /// `degree_bound` are rejected.
    pub fn parse(text: &str, degree_bound: usize, vars: (char, char)) -> Result<Self> {
        let terms = parse_terms(text, vars)?;
        if let Some(&(a, b)) = terms.iter().find(|(a, b)| a + b >= degree_bound) {
            return Err(Error::Parse(format!(
                "term of degree {} past degree bound {degree_bound}",
                a + b
            )));
        }
        Ok(Self::from_monomials(&terms, degree_bound, vars))
    }
}

fn parse_terms(text: &str, vars: (char, char)) -> Result<Vec<(usize, usize)>> {
    let bad = |m: String| Error::Parse(m);
    let mut terms = Vec::new();
    for raw in text.split('+') {
        let t: String = raw.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(bad(format!("empty term in {text:?}")));
        }
        let (mut a, mut b) = (0usize, 0usize);
        if t != "1" {
            let chars: Vec<char> = t.chars().collect();
            let mut i = 0;
            while i < chars.len() {
                let v = chars[i];
                i += 1;
                let mut e = 1;
                if i < chars.len() && chars[i] == '^' {
                    let start = i + 1;
                    let mut end = start;
                    while end < chars.len() && chars[end].is_ascii_digit() {
                        end += 1;
                    }
                    e = chars[start..end]
                        .iter()
                        .collect::<String>()
                        .parse()
                        .map_err(|_| bad(format!("bad exponent in {t:?}")))?;
                    i = end;
                }
                if v == vars.0 {
                    a += e;
                } else if v == vars.1 {
                    b += e;
                } else {
                    return Err(bad(format!("unknown variable {v:?} in {t:?}")));
                }
            }
        }
        terms.push((a, b));
    }
    Ok(terms)
}

impl fmt::Display for BiSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let var = |c: char, e: usize| match e {
            0 => String::new(),
            1 => c.to_string(),
            _ => format!("{c}^{e}"),
        };
        let terms: Vec<String> = self
            .monomials()
            .into_iter()
            .map(|(a, b)| {
                if a + b == 0 {
                    "1".to_string()
                } else {
                    format!("{}{}", var(self.vars.0, a), var(self.vars.1, b))
                }
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

impl fmt::Debug for BiSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} (deg < {})", self.degree_bound)
    }
}

impl FromStr for BiSeries {
    type Err = Error;

    /// Parses an `x, y` term list with the degree bound set just above the
    /// largest term.
    fn from_str(s: &str) -> Result<Self> {
        let terms = parse_terms(s, ('x', 'y'))?;
        let top = terms.iter().map(|(a, b)| a + b).max().unwrap_or(0);
        Ok(Self::from_monomials(&terms, top + 1, ('x', 'y')))
    }
}

/// a₁(T f): the coefficient of f¹ in generator coordinates.
pub fn pairing_matrix(t: &BitMatrix, f: &PolyCoord) -> bool {
    words::parity_and(t.row(1), f.words())
}

pub fn pairing(ctx: &HeckeContext, t: &OperatorExpr, f: &PolyCoord) -> Result<bool> {
    if ctx.watermark() < 2 {
        return Err(Error::InsufficientScale(
            "bound must exceed 1 to read a₁".into(),
        ));
    }
    Ok(pairing_matrix(
        &t.evaluate(ctx)?,
        &f.with_bound(ctx.bound()),
    ))
}

/// Row vectors `e_1^T X^a Y^b` for all monomials of total degree < d.
fn pairing_rows(
    x: &BitMatrix,
    y: &BitMatrix,
    d: usize,
    n: usize,
) -> BTreeMap<(usize, usize), Vec<u64>> {
    let mut rows: BTreeMap<(usize, usize), Vec<u64>> = BTreeMap::new();
    let mut e1 = vec![0u64; words::nwords(n).max(1)];
    words::set(&mut e1, 1, true);
    for (a, b) in monomials_below(d) {
        let r = if a + b == 0 {
            e1.clone()
        } else if b > 0 {
            y.vec_mul(&rows[&(a, b - 1)])
        } else {
            x.vec_mul(&rows[&(a - 1, b)])
        };
        rows.insert((a, b), r);
    }
    rows
}

/// All `X^a Y^b` with `a + b = d`.
fn degree_monomials(x: &BitMatrix, y: &BitMatrix, d: usize) -> Vec<BitMatrix> {
    let n = x.rows();
    let mut xp = vec![BitMatrix::identity(n)];
    let mut yp = vec![BitMatrix::identity(n)];
    for k in 1..=d {
        xp.push(xp[k - 1].mul(x));
        yp.push(yp[k - 1].mul(y));
    }
    (0..=d).map(|b| xp[d - b].mul(&yp[b])).collect()
}

/// Subspace of `space` killed by every monomial of degree `d` in X, Y.
pub fn torsion_subspace(space: &FormSpace, x: &BitMatrix, y: &BitMatrix, d: usize) -> FormSpace {
    let mons = degree_monomials(x, y, d);
    let stacked = mons
        .iter()
        .skip(1)
        .fold(mons[0].clone(), |acc, m| acc.vstack(m));
    space.kernel_of(&stacked)
}

/// Forms dual to the monomials of degree < d under the pairing.
#[derive(Clone, Debug)]
pub struct DualBasis {
    pub degree: usize,
    pub monomials: Vec<(usize, usize)>,
    pub forms: Vec<PolyCoord>,
    pub torsion: FormSpace,
}

impl DualBasis {
    pub fn form(&self, a: usize, b: usize) -> &PolyCoord {
        &self.forms[monomial_index(a, b)]
    }
}

/// Dual basis inside the degree-`d` torsion of `space` (the forms killed by
/// all degree-`d` monomials), where the pairing with monomials of degree < d
/// must be perfect.
pub fn dual_basis_matrices(
    x: &BitMatrix,
    y: &BitMatrix,
    space: &FormSpace,
    d: usize,
) -> Result<DualBasis> {
    let n = space.bound();
    let torsion = torsion_subspace(space, x, y, d);
    let monomials = monomials_below(d);
    let rows = pairing_rows(x, y, d, n);
    let basis = torsion.basis();
    let mut gram = BitMatrix::zeros(monomials.len(), basis.len());
    for (i, m) in monomials.iter().enumerate() {
        for (j, v) in basis.iter().enumerate() {
            if words::parity_and(&rows[m], v.words()) {
                gram.set(i, j, true);
            }
        }
    }
    let rank = gram.rank();
    if rank < monomials.len() || basis.len() != monomials.len() {
        return Err(Error::SingularPairing {
            rank,
            needed: monomials.len().max(basis.len()),
        });
    }
    let mut forms = Vec::with_capacity(monomials.len());
    for i in 0..monomials.len() {
        let mut e = vec![0u64; words::nwords(monomials.len()).max(1)];
        words::set(&mut e, i, true);
        let c = gram.solve(&e).ok_or(Error::SingularPairing {
            rank,
            needed: monomials.len(),
        })?;
        forms.push(combine(&basis, &c, n));
    }
    Ok(DualBasis {
        degree: d,
        monomials,
        forms,
        torsion,
    })
}

pub fn dual_basis(
    ctx: &HeckeContext,
    x: &OperatorExpr,
    y: &OperatorExpr,
    space: &FormSpace,
    d: usize,
) -> Result<DualBasis> {
    dual_basis_matrices(&x.evaluate(ctx)?, &y.evaluate(ctx)?, space, d)
}

/// The series `s` of degree < d with `T = s(X, Y)` on the degree-d torsion.
pub fn express_matrices(
    t: &BitMatrix,
    x: &BitMatrix,
    y: &BitMatrix,
    space: &FormSpace,
    d: usize,
    vars: (char, char),
) -> Result<(BiSeries, DualBasis)> {
    let db = dual_basis_matrices(x, y, space, d)?;
    let mut s = BiSeries::zero(d, vars);
    for (&(a, b), m) in db.monomials.iter().zip(&db.forms) {
        if pairing_matrix(t, m) {
            s.set(a, b, true);
        }
    }
    let resid = series_matrix(&s, x, y).add(t);
    for v in db.torsion.basis() {
        if !words::is_zero(&resid.mul_vec(v.words())) {
            return Err(Error::NoSolution(format!(
                "residual of the degree-{d} expression does not vanish on the torsion"
            )));
        }
    }
    Ok((s, db))
}

pub fn express_in_generators(
    ctx: &HeckeContext,
    t: &OperatorExpr,
    x: &OperatorExpr,
    y: &OperatorExpr,
    space: &FormSpace,
    d: usize,
) -> Result<BiSeries> {
    let vars = ('x', 'y');
    let (s, _) = express_matrices(
        &t.evaluate(ctx)?,
        &x.evaluate(ctx)?,
        &y.evaluate(ctx)?,
        space,
        d,
        vars,
    )?;
    Ok(s)
}

/// Matrix of `s(X, Y)`.
pub fn series_matrix(s: &BiSeries, x: &BitMatrix, y: &BitMatrix) -> BitMatrix {
    let n = x.rows();
    let d = s.degree_bound();
    let mut xp = vec![BitMatrix::identity(n)];
    let mut yp = vec![BitMatrix::identity(n)];
    let ms = s.monomials();
    let amax = ms.iter().map(|m| m.0).max().unwrap_or(0);
    let bmax = ms.iter().map(|m| m.1).max().unwrap_or(0);
    for k in 1..=amax.min(d) {
        xp.push(xp[k - 1].mul(x));
    }
    for k in 1..=bmax.min(d) {
        yp.push(yp[k - 1].mul(y));
    }
    let mut acc = BitMatrix::zeros(n, n);
    for (a, b) in ms {
        acc = acc.add(&xp[a].mul(&yp[b]));
    }
    acc
}

/// Least j such that every length-j product of `gens` kills `f`.
pub fn nilpotence_index_matrices(f: &PolyCoord, gens: &[BitMatrix]) -> Result<usize> {
    let n = f.bound();
    let mut layer = vec![f.clone()];
    let mut j = 0;
    while layer.iter().any(|v| !v.is_zero()) {
        if j > n {
            return Err(Error::InsufficientScale(
                "products did not annihilate the form".into(),
            ));
        }
        let mut next = Vec::new();
        for g in gens {
            for v in &layer {
                next.push(PolyCoord::from_words(g.mul_vec(v.words()), n));
            }
        }
        layer = FormSpace::span(0, n, &next).basis();
        j += 1;
    }
    Ok(j)
}

pub fn nilpotence_index(ctx: &HeckeContext, f: &PolyCoord, gens: &[OperatorExpr]) -> Result<usize> {
    let mats: Vec<BitMatrix> = gens
        .iter()
        .map(|g| g.evaluate(ctx))
        .collect::<Result<_>>()?;
    nilpotence_index_matrices(&f.with_bound(ctx.bound()), &mats)
}

/// Exponent vectors of all monomials in `k` variables of total degree < d,
/// by degree.
pub fn multi_monomials(k: usize, d: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = vec![vec![0; k]];
    let mut frontier = out.clone();
    for _ in 1..d {
        let mut next = Vec::new();
        for m in &frontier {
            let last = m.iter().rposition(|&e| e > 0).unwrap_or(0);
            for i in last..k {
                let mut e = m.clone();
                e[i] += 1;
                next.push(e);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Matrices of monomials given by [`multi_monomials`], built incrementally.
pub fn monomial_matrices(gens: &[BitMatrix], d: usize) -> Vec<(Vec<usize>, BitMatrix)> {
    let n = gens.first().map_or(0, |g| g.rows());
    let mons = multi_monomials(gens.len(), d);
    let mut built: BTreeMap<Vec<usize>, BitMatrix> = BTreeMap::new();
    let mut out = Vec::with_capacity(mons.len());
    for e in mons {
        let m = match e.iter().rposition(|&x| x > 0) {
            None => BitMatrix::identity(n),
            Some(i) => {
                let mut prev = e.clone();
                prev[i] -= 1;
                built[&prev].mul(&gens[i])
            }
        };
        built.insert(e.clone(), m.clone());
        out.push((e, m));
    }
    out
}

/// h(k) = rank of the pairing between monomials of degree < k in `gens`
/// and `space`, for k = 1..=k_max.
pub fn hilbert_samuel_matrices(space: &FormSpace, gens: &[BitMatrix], k_max: usize) -> Vec<usize> {
    let n = space.bound();
    let basis = space.basis();
    let mons = multi_monomials(gens.len(), k_max);
    let mut rows: BTreeMap<Vec<usize>, Vec<u64>> = BTreeMap::new();
    let mut e1 = vec![0u64; words::nwords(n).max(1)];
    words::set(&mut e1, 1, true);
    let mut out = Vec::with_capacity(k_max);
    let mut acc: Vec<Vec<u64>> = Vec::new();
    let mut deg = 0;
    for e in mons {
        let total: usize = e.iter().sum();
        if total > deg {
            out.push(BitMatrix::from_rows(&acc, basis.len()).rank());
            deg = total;
        }
        let r = match e.iter().rposition(|&x| x > 0) {
            None => e1.clone(),
            Some(i) => {
                let mut prev = e.clone();
                prev[i] -= 1;
                gens[i].vec_mul(&rows[&prev])
            }
        };
        let mut g = vec![0u64; words::nwords(basis.len()).max(1)];
        for (j, v) in basis.iter().enumerate() {
            if words::parity_and(&r, v.words()) {
                words::set(&mut g, j, true);
            }
        }
        acc.push(g);
        rows.insert(e, r);
    }
    out.push(BitMatrix::from_rows(&acc, basis.len()).rank());
    out.truncate(k_max);
    out
}

pub fn hilbert_samuel(
    ctx: &HeckeContext,
    space: &FormSpace,
    gens: &[OperatorExpr],
    k_max: usize,
) -> Result<Vec<usize>> {
    let mats: Vec<BitMatrix> = gens
        .iter()
        .map(|g| g.evaluate(ctx))
        .collect::<Result<_>>()?;
    Ok(hilbert_samuel_matrices(space, &mats, k_max))
}

/// An operator X with U_N² + X U_N + 1 = 0, written in monomials of the
/// T-generators.
#[derive(Clone, Debug)]
pub struct FrobeniusSolution {
    pub gens: Vec<OperatorExpr>,
    pub terms: Vec<Vec<usize>>,
    pub matrix: BitMatrix,
    pub max_degree: usize,
}

impl FrobeniusSolution {
    pub fn expr(&self) -> OperatorExpr {
        OperatorExpr::Sum(
            self.terms
                .iter()
                .map(|e| OperatorExpr::monomial(&self.gens, e))
                .collect(),
        )
    }

    /// Least total degree among the terms.
    pub fn min_degree(&self) -> Option<usize> {
        self.terms.iter().map(|e| e.iter().sum()).min()
    }
}

/// Solve for X = U_N + U_N⁻¹ as a combination of monomials of degree at most
/// `max_degree` in `gens`, on every form of the context. The result is checked
/// against X U_N = U_N² + 1 and X = X U_N' + (U_N')².
pub fn solve_frobenius(
    ctx: &HeckeContext,
    gens: &[OperatorExpr],
    max_degree: usize,
) -> Result<FrobeniusSolution> {
    let n = ctx.bound();
    let id = BitMatrix::identity(n);
    let u = ctx.u()?;
    let uinv = u
        .inverse()
        .ok_or_else(|| Error::NoSolution("U_N is not invertible at this bound".into()))?;
    let target = u.add(&uinv);
    let mats: Vec<BitMatrix> = gens
        .iter()
        .map(|g| g.evaluate(ctx))
        .collect::<Result<_>>()?;
    let mons = monomial_matrices(&mats, max_degree + 1);
    let flat = |m: &BitMatrix| -> Vec<u64> {
        let mut v = vec![0u64; words::nwords(n * n).max(1)];
        for i in 0..n {
            for j in words::ones(m.row(i)) {
                words::set(&mut v, i * n + j, true);
            }
        }
        v
    };
    let cols: Vec<Vec<u64>> = mons.iter().map(|(_, m)| flat(m)).collect();
    let system = BitMatrix::from_cols(&cols, n * n);
    let x = system.solve(&flat(&target)).ok_or_else(|| {
        Error::NoSolution(format!(
            "no combination of monomials of degree <= {max_degree}"
        ))
    })?;
    let chosen: Vec<usize> = words::ones(&x).filter(|&i| i < mons.len()).collect();
    let mut matrix = BitMatrix::zeros(n, n);
    for &i in &chosen {
        matrix = matrix.add(&mons[i].1);
    }
    if matrix.mul(u) != u.mul(u).add(&id) {
        return Err(Error::NoSolution("X U_N != U_N^2 + 1".into()));
    }
    let up = u.add(&id);
    if matrix != matrix.mul(&up).add(&up.mul(&up)) {
        return Err(Error::NoSolution("X != X U_N' + U_N'^2".into()));
    }
    Ok(FrobeniusSolution {
        gens: gens.to_vec(),
        terms: chosen.into_iter().map(|i| mons[i].0.clone()).collect(),
        matrix,
        max_degree,
    })
}

/// [`solve_frobenius`] at degree 6, then 8.
pub fn solve_frobenius_auto(
    ctx: &HeckeContext,
    gens: &[OperatorExpr],
) -> Result<FrobeniusSolution> {
    solve_frobenius(ctx, gens, 6).or_else(|_| solve_frobenius(ctx, gens, 8))
}

/// The T-generators used for the Frobenius solve: T_ℓ for ℓ in {3,5,7,11,13}
/// prime to the level.
pub fn frobenius_generators(level: u32) -> Result<Vec<OperatorExpr>> {
    crate::spaces::default_primes(level)
        .into_iter()
        .map(|l| OperatorExpr::t(l, level))
        .collect()
}

/// The four extracted series: T = s(X, Y) on a space of forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SeriesName {
    /// T₇ = f(T₁₁, T₁₃) on K(1).
    F,
    /// T₁₁ = g(T₁₃, T₇) on K(3)^vnew.
    G,
    /// T₇ = f′(T₁₃, T₁₁) on K(1).
    FPrime,
    /// T₁₃ = g′(T₁₁, T₇) on K(5)^vnew.
    GPrime,
}

impl SeriesName {
    pub const ALL: [SeriesName; 4] = [
        SeriesName::F,
        SeriesName::G,
        SeriesName::FPrime,
        SeriesName::GPrime,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SeriesName::F => "f",
            SeriesName::G => "g",
            SeriesName::FPrime => "f-prime",
            SeriesName::GPrime => "g-prime",
        }
    }

    /// Level whose forms carry the relation.
    pub fn level(self) -> u32 {
        match self {
            SeriesName::F | SeriesName::FPrime => 1,
            SeriesName::G => 3,
            SeriesName::GPrime => 5,
        }
    }

    /// The level N this series belongs to.
    pub fn family(self) -> u32 {
        match self {
            SeriesName::F | SeriesName::G => 3,
            SeriesName::FPrime | SeriesName::GPrime => 5,
        }
    }

    /// `(T, X, Y)` as primes.
    pub fn operators(self) -> (u64, u64, u64) {
        match self {
            SeriesName::F => (7, 11, 13),
            SeriesName::G => (11, 13, 7),
            SeriesName::FPrime => (7, 13, 11),
            SeriesName::GPrime => (13, 11, 7),
        }
    }

    pub fn vars(self) -> (char, char) {
        match self {
            SeriesName::F | SeriesName::FPrime => ('x', 'y'),
            SeriesName::G | SeriesName::GPrime => ('y', 'z'),
        }
    }

    /// The series for `family` N in the old (`f`) or very new (`g`) role.
    pub fn for_level(family: u32, old: bool) -> Result<Self> {
        match (family, old) {
            (3, true) => Ok(SeriesName::F),
            (3, false) => Ok(SeriesName::G),
            (5, true) => Ok(SeriesName::FPrime),
            (5, false) => Ok(SeriesName::GPrime),
            _ => Err(Error::InvalidLevel(family)),
        }
    }

    /// The space of forms the relation is read on.
    pub fn space(self, ctx: &HeckeContext) -> Result<FormSpace> {
        match self {
            SeriesName::F | SeriesName::FPrime => Ok(crate::spaces::k_space(ctx)),
            SeriesName::G | SeriesName::GPrime => crate::spaces::vnew_space(ctx),
        }
    }
}

impl fmt::Display for SeriesName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SeriesName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|n| n.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown series {s:?}")))
    }
}

#[derive(Clone, Debug)]
pub struct Extraction {
    pub name: SeriesName,
    pub series: BiSeries,
    /// Form-degree bound of the context that made the pairing perfect.
    pub bound: usize,
    pub dual: DualBasis,
}

/// Extract a series to total degree < `degree`, doubling the form-degree
/// bound from `start` until the pairing on the degree-`degree` torsion is
/// perfect or the bound would pass `cap`.
pub fn extract_series(
    name: SeriesName,
    degree: usize,
    start: usize,
    cap: usize,
) -> Result<Extraction> {
    let (t, x, y) = name.operators();
    let mut bound = start.max(2);
    let mut last = None;
    while bound <= cap {
        let ctx = HeckeContext::new(name.level(), bound)?;
        let space = name.space(&ctx)?;
        match express_matrices(ctx.t(t)?, ctx.t(x)?, ctx.t(y)?, &space, degree, name.vars()) {
            Ok((series, dual)) => {
                return Ok(Extraction {
                    name,
                    series,
                    bound,
                    dual,
                })
            }
            Err(e @ Error::SingularPairing { .. }) => last = Some(e),
            Err(e) => return Err(e),
        }
        bound *= 2;
    }
    Err(Error::InsufficientScale(format!(
        "series {name} to degree {degree} needs a bound above {cap}{}",
        last.map(|e| format!(" ({e})")).unwrap_or_default()
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_order() {
        assert_eq!(
            monomials_below(3),
            vec![(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]
        );
        for (i, (a, b)) in monomials_below(6).into_iter().enumerate() {
            assert_eq!(monomial_index(a, b), i);
        }
    }

    #[test]
    fn biseries_text_round_trip() {
        let s = BiSeries::parse("xy + x^3y + xy^5", 11, ('x', 'y')).unwrap();
        assert_eq!(s.to_string(), "xy + x^3y + xy^5");
        let g = BiSeries::parse("yz + z^2 + yz^3", 8, ('y', 'z')).unwrap();
        assert_eq!(g.to_string(), "yz + z^2 + yz^3");
        assert!(BiSeries::parse("x^11", 11, ('x', 'y')).is_err());
        let j = s.to_json();
        assert_eq!(j[1]["monomial"], serde_json::json!([3, 1]));
        assert_eq!(j[1]["coeff"], serde_json::json!(1));
        let parsed: BiSeries = "x^2y + 1".parse().unwrap();
        assert_eq!(parsed.degree_bound(), 4);
    }

    #[test]
    fn multi_monomial_counts() {
        assert_eq!(multi_monomials(2, 4).len(), 10);
        assert_eq!(multi_monomials(4, 7).len(), 210);
        assert_eq!(multi_monomials(3, 1), vec![vec![0, 0, 0]]);
    }
}
