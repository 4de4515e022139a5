//! Distinguished subspaces of M(N): K(N) = ker U₂, old, new and very new forms.
//!
//! Everything lives in generator coordinates below a degree bound `D`.
//! Every operator handled here maps `F_2[f]` of degree < D into itself, so
//! all matrices and subspaces are exact; q-expansions appear only when
//! seeding matrices and when splitting forms by exponent class mod 8.

use std::collections::HashMap;
use std::fmt::Write as _;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::f2la::{BitMatrix, Echelon};
use crate::fps2::QExpansion;
use crate::genforms::{delta_mod2, fricke_image, GeneratorId};
use crate::heckeq::{OpKind, OpSpec};
use crate::recur::{self, CompanionPoly, F2Poly, GenPowers, PolyCoord, GUARD};
use crate::words;

/// Operator matrices on `F_2[f]` of degree < `bound` at one level.
pub struct HeckeContext {
    level: u32,
    gen: GeneratorId,
    bound: usize,
    matrices: HashMap<OpSpec, BitMatrix>,
    companions: HashMap<OpSpec, CompanionPoly>,
    powers: GenPowers,
}

/// Odd primes whose T_ℓ the context builds by default.
pub fn default_primes(level: u32) -> Vec<u64> {
    [3u64, 5, 7, 11, 13]
        .into_iter()
        .filter(|&l| !(level as u64).is_multiple_of(l))
        .collect()
}

impl HeckeContext {
    pub fn new(level: u32, bound: usize) -> Result<Self> {
        let mut ops: Vec<OpSpec> = default_primes(level)
            .into_iter()
            .map(|l| OpSpec::t(l, level))
            .collect::<Result<_>>()?;
        if level > 1 {
            ops.push(OpSpec::u(level)?);
        }
        Self::with_ops(level, bound, &ops)
    }

    pub fn with_ops(level: u32, bound: usize, ops: &[OpSpec]) -> Result<Self> {
        let gen = GeneratorId::for_level(level)?;
        let built: Vec<(OpSpec, CompanionPoly, BitMatrix)> = ops
            .par_iter()
            .map(|op| {
                let c = recur::derive_companion_default(op, &gen)?;
                let m = recur::hecke_matrix(op, &gen, &c, bound)?;
                Ok((*op, c, m))
            })
            .collect::<Result<_>>()?;
        let mut matrices = HashMap::new();
        let mut companions = HashMap::new();
        for (op, c, m) in built {
            matrices.insert(op, m);
            companions.insert(op, c);
        }
        let u2 = OpSpec::simple(OpKind::U2, level);
        matrices.insert(u2, recur::hecke_matrix_direct(&u2, &gen, bound)?);
        let powers = GenPowers::new(&gen.expansion(bound + GUARD), bound)?;
        Ok(HeckeContext {
            level,
            gen,
            bound,
            matrices,
            companions,
            powers,
        })
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn generator(&self) -> GeneratorId {
        self.gen
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    /// Largest degree on which results are exact; equal to the bound because
    /// every operator here preserves `deg <= n`.
    pub fn watermark(&self) -> usize {
        self.bound
    }

    pub fn matrix(&self, op: &OpSpec) -> Result<&BitMatrix> {
        if op.kind == OpKind::Identity {
            return Err(Error::InsufficientScale(
                "identity has no stored matrix".into(),
            ));
        }
        self.matrices.get(op).ok_or_else(|| {
            Error::InsufficientScale(format!("operator {op} not built at level {}", self.level))
        })
    }

    pub fn t(&self, ell: u64) -> Result<&BitMatrix> {
        self.matrix(&OpSpec::t(ell, self.level)?)
    }

    pub fn u(&self) -> Result<&BitMatrix> {
        self.matrix(&OpSpec::u(self.level)?)
    }

    pub fn u2(&self) -> &BitMatrix {
        &self.matrices[&OpSpec::simple(OpKind::U2, self.level)]
    }

    pub fn companion(&self, op: &OpSpec) -> Option<&CompanionPoly> {
        self.companions.get(op)
    }

    pub fn apply(&self, op: &OpSpec, v: &PolyCoord) -> Result<PolyCoord> {
        Ok(PolyCoord::from_words(
            self.matrix(op)?.mul_vec(v.words()),
            self.bound,
        ))
    }

    pub fn to_qexpansion(&self, v: &PolyCoord) -> QExpansion {
        self.powers.to_qexpansion(v)
    }

    /// Convert a q-expansion known to at least `bound + 1` coefficients.
    pub fn from_qexpansion(&self, f: &QExpansion) -> Result<PolyCoord> {
        let p = f.prec().min(self.powers.prec());
        self.powers.from_qexpansion(&f.truncate(p), self.bound)
    }

    /// A polynomial in the generator, checked against the bound.
    pub fn coord(&self, p: &F2Poly) -> Result<PolyCoord> {
        PolyCoord::from_poly(p, self.bound)
    }

    /// Δ̄ as a polynomial in the generator.
    pub fn delta_poly(&self) -> Result<F2Poly> {
        small_poly(&delta_mod2(64 + GUARD), &self.gen)
    }

    /// Δ̄(q^N) as a polynomial in the generator.
    pub fn fricke_delta_poly(&self) -> Result<F2Poly> {
        let n = self.level as usize;
        small_poly(
            &fricke_image(&delta_mod2(64 / n + GUARD), self.level),
            &self.gen,
        )
    }
}

fn small_poly(f: &QExpansion, gen: &GeneratorId) -> Result<F2Poly> {
    let p = f.prec();
    let conv = GenPowers::new(&gen.expansion(p), p - GUARD)?;
    Ok(conv.from_qexpansion(f, p - GUARD)?.to_poly())
}

/// Integer power of a polynomial.
pub fn poly_pow(p: &F2Poly, n: usize) -> F2Poly {
    (0..n).fold(F2Poly::one(), |acc, _| acc.mul(p))
}

/// Which coordinates a space's rows use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rep {
    Poly,
    QExp,
}

/// A span of forms: independent basis rows plus an echelon form for membership.
#[derive(Clone, Debug)]
pub struct FormSpace {
    rows: BitMatrix,
    echelon: Echelon,
    rep: Rep,
    level: u32,
    bound: usize,
    labels: Option<Vec<u8>>,
}

impl FormSpace {
    pub fn span(level: u32, bound: usize, vectors: &[PolyCoord]) -> Self {
        let rows: Vec<&[u64]> = vectors.iter().map(|v| v.words()).collect();
        let echelon = BitMatrix::from_rows(&rows, bound).echelon();
        FormSpace {
            rows: echelon.basis.clone(),
            echelon,
            rep: Rep::Poly,
            level,
            bound,
            labels: None,
        }
    }

    /// Span of q-expansion rows at precision `prec`.
    pub fn span_qexp(level: u32, prec: usize, forms: &[QExpansion]) -> Self {
        let rows: Vec<&[u64]> = forms.iter().map(|f| f.words()).collect();
        let echelon = BitMatrix::from_rows(&rows, prec).echelon();
        FormSpace {
            rows: echelon.basis.clone(),
            echelon,
            rep: Rep::QExp,
            level,
            bound: prec,
            labels: None,
        }
    }

    /// Span of forms that each lie in one exponent class mod 8; the basis
    /// rows are chosen class by class and carry their class as a label.
    pub fn span_labeled(level: u32, bound: usize, vectors: &[(u8, PolyCoord)]) -> Self {
        let mut rows = Vec::new();
        let mut labels = Vec::new();
        for class in [1u8, 3, 5, 7] {
            let part: Vec<PolyCoord> = vectors
                .iter()
                .filter(|(c, _)| *c == class)
                .map(|(_, v)| v.clone())
                .collect();
            let sp = Self::span(level, bound, &part);
            labels.extend(std::iter::repeat_n(class, sp.dim()));
            rows.extend(sp.basis());
        }
        let words: Vec<&[u64]> = rows.iter().map(|v| v.words()).collect();
        let rows = BitMatrix::from_rows(&words, bound);
        let echelon = rows.echelon();
        assert_eq!(
            echelon.rank(),
            rows.rows(),
            "graded pieces must be independent"
        );
        FormSpace {
            rows,
            echelon,
            rep: Rep::Poly,
            level,
            bound,
            labels: Some(labels),
        }
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn rep(&self) -> Rep {
        self.rep
    }

    pub fn dim(&self) -> usize {
        self.echelon.rank()
    }

    pub fn echelon(&self) -> &Echelon {
        &self.echelon
    }

    pub fn labels(&self) -> Option<&[u8]> {
        self.labels.as_deref()
    }

    pub fn basis(&self) -> Vec<PolyCoord> {
        (0..self.dim())
            .map(|i| PolyCoord::from_words(self.rows.row(i).to_vec(), self.bound))
            .collect()
    }

    pub fn contains(&self, v: &PolyCoord) -> bool {
        self.echelon.contains(v.words())
    }

    pub fn contains_space(&self, other: &FormSpace) -> bool {
        other.basis().iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &FormSpace) -> FormSpace {
        let mut vs = self.basis();
        vs.extend(other.basis());
        Self::span(self.level, self.bound, &vs)
    }

    pub fn intersection_dim(&self, other: &FormSpace) -> usize {
        self.dim() + other.dim() - self.sum(other).dim()
    }

    /// Kernel of `m` restricted to this space.
    pub fn kernel_of(&self, m: &BitMatrix) -> FormSpace {
        let basis = self.basis();
        let images: Vec<Vec<u64>> = basis.iter().map(|v| m.mul_vec(v.words())).collect();
        let combos = BitMatrix::from_cols(&images, m.rows()).kernel();
        let vs: Vec<PolyCoord> = combos
            .iter()
            .map(|c| combine(&basis, c, self.bound))
            .collect();
        Self::span(self.level, self.bound, &vs)
    }

    /// Image of this space under `m`.
    pub fn image_under(&self, m: &BitMatrix) -> FormSpace {
        let vs: Vec<PolyCoord> = self
            .basis()
            .iter()
            .map(|v| PolyCoord::from_words(m.mul_vec(v.words()), self.bound))
            .collect();
        Self::span(self.level, self.bound, &vs)
    }

    /// One row per basis vector, one column per coordinate.
    pub fn to_csv(&self) -> String {
        let mut s = String::new();
        let cols = self.bound;
        let header: Vec<String> = (0..cols)
            .map(|n| match self.rep {
                Rep::Poly => format!("f{n}"),
                Rep::QExp => format!("q{n}"),
            })
            .collect();
        let _ = writeln!(s, "row,class,{}", header.join(","));
        for (i, v) in self.basis().iter().enumerate() {
            let class = self
                .labels
                .as_ref()
                .map_or(String::new(), |l| l[i].to_string());
            let bits: Vec<&str> = (0..cols)
                .map(|n| if v.coeff(n) { "1" } else { "0" })
                .collect();
            let _ = writeln!(s, "{i},{class},{}", bits.join(","));
        }
        s
    }
}

/// `Σ c_i basis_i`.
pub fn combine(basis: &[PolyCoord], c: &[u64], bound: usize) -> PolyCoord {
    let mut acc = PolyCoord::zero(bound);
    for i in words::ones(c) {
        if i < basis.len() {
            acc = acc.add(&basis[i]);
        }
    }
    acc
}

/// The whole of `F_2[f]` of degree < bound.
pub fn full_space(ctx: &HeckeContext) -> FormSpace {
    let vs: Vec<PolyCoord> = (0..ctx.bound)
        .map(|n| PolyCoord::basis(n, ctx.bound))
        .collect();
    FormSpace::span(ctx.level, ctx.bound, &vs)
}

/// K(N) = ker U₂, below the degree bound.
pub fn k_space(ctx: &HeckeContext) -> FormSpace {
    full_space(ctx).kernel_of(ctx.u2())
}

/// θ(f^n) in generator coordinates, for the `n` with `deg θ(f^n) < bound`.
pub fn theta_images(ctx: &HeckeContext) -> Result<Vec<PolyCoord>> {
    let th = ctx.from_qexpansion(&crate::heckeq::theta(&ctx.gen.expansion(ctx.bound + GUARD)))?;
    let th = th.to_poly();
    let shift = th.degree().unwrap_or(0);
    let mut out = Vec::new();
    let mut n = 1;
    while n - 1 + shift < ctx.bound {
        out.push(ctx.coord(&th.mul(&F2Poly::monomial(n - 1)))?);
        n += 2;
    }
    Ok(out)
}

/// Keep the coefficients of `q^n` with `n ≡ i (mod 8)`.
pub fn grading_component(f: &QExpansion, i: u8) -> QExpansion {
    let mut w = vec![0u64; f.words().len()];
    let mut n = (i % 8) as usize;
    while n < f.prec() {
        if f.bit(n) {
            words::set(&mut w, n, true);
        }
        n += 8;
    }
    QExpansion::from_words(w, f.prec())
}

/// Degree bound that holds the class components of forms of degree < `bound`.
/// Components can have up to twice (N = 3) or three times (N = 5) the degree.
pub fn graded_bound(level: u32, bound: usize) -> usize {
    level.max(1) as usize * bound + 8
}

/// The four class components (1, 3, 5, 7) of a form in K(N), in generator
/// coordinates at the context's bound.
pub fn graded_parts(ctx: &HeckeContext, v: &PolyCoord) -> Result<[PolyCoord; 4]> {
    let q = ctx.to_qexpansion(&v.with_bound(ctx.bound));
    let conv = |f: &QExpansion| {
        ctx.from_qexpansion(f).map_err(|e| match e {
            Error::NotInAlgebra { lowest } => Error::InsufficientScale(format!(
                "class component leaves degree bound {} (residual at q^{lowest})",
                ctx.bound
            )),
            e => e,
        })
    };
    Ok([
        conv(&grading_component(&q, 1))?,
        conv(&grading_component(&q, 3))?,
        conv(&grading_component(&q, 5))?,
        conv(&grading_component(&q, 7))?,
    ])
}

/// The forms of K(N) below the bound that lie in a single class mod 8,
/// with a basis labeled by class.
pub fn graded_k_space(ctx: &HeckeContext) -> Result<FormSpace> {
    let k = k_space(ctx);
    let basis = k.basis();
    let prec = graded_bound(ctx.level, ctx.bound) + GUARD;
    let conv = GenPowers::new(&ctx.gen.expansion(prec), ctx.bound)?;
    let qs: Vec<QExpansion> = basis.iter().map(|v| conv.to_qexpansion(v)).collect();
    let mut pieces = Vec::new();
    for class in [1u8, 3, 5, 7] {
        // Coefficients outside the class must vanish; forms of degree below
        // the graded bound are determined by this many coefficients.
        let cols: Vec<Vec<u64>> = qs
            .iter()
            .map(|q| {
                let mut w = q.words().to_vec();
                let keep = grading_component(q, class);
                words::xor_into(&mut w, keep.words());
                w
            })
            .collect();
        let combos = BitMatrix::from_cols(&cols, prec).kernel();
        for c in combos {
            pieces.push((class, combine(&basis, &c, ctx.bound)));
        }
    }
    Ok(FormSpace::span_labeled(ctx.level, ctx.bound, &pieces))
}

/// Span of 1, Δ̄^a and Δ̄(q^N)^a for 1 <= a <= max_power with degree < bound.
pub fn old_space(ctx: &HeckeContext, max_power: Option<usize>) -> Result<FormSpace> {
    let mut vs = vec![PolyCoord::basis(0, ctx.bound)];
    let mut gens = vec![ctx.delta_poly()?];
    if ctx.level > 1 {
        gens.push(ctx.fricke_delta_poly()?);
    }
    for g in gens {
        let mut p = F2Poly::one();
        let mut a = 0;
        loop {
            a += 1;
            p = p.mul(&g);
            if max_power.is_some_and(|m| a > m) || p.degree().is_some_and(|d| d >= ctx.bound) {
                break;
            }
            vs.push(ctx.coord(&p)?);
        }
    }
    Ok(FormSpace::span(ctx.level, ctx.bound, &vs))
}

fn u_prime(ctx: &HeckeContext) -> Result<BitMatrix> {
    Ok(ctx.u()?.add(&BitMatrix::identity(ctx.bound)))
}

/// K(N)^vnew = ker (U_N + 1) on K(N).
pub fn vnew_space(ctx: &HeckeContext) -> Result<FormSpace> {
    Ok(k_space(ctx).kernel_of(&u_prime(ctx)?))
}

/// K(N)^new = ker (U_N + 1)² on K(N).
pub fn new_space(ctx: &HeckeContext) -> Result<FormSpace> {
    let up = u_prime(ctx)?;
    Ok(k_space(ctx).kernel_of(&up.mul(&up)))
}

/// A `g` in K(N) with `(U_N + 1) g = f`, for `f` very new and N ≢ 1 mod 8,
/// built as `f_1 + f_i` from class components. The context bound must hold
/// the components; see [`graded_bound`].
pub fn un_preimage(ctx: &HeckeContext, f: &PolyCoord) -> Result<PolyCoord> {
    let n = ctx.level as u8;
    if n == 1 || n % 8 == 1 {
        return Err(Error::InvalidLevel(ctx.level));
    }
    let f = f.with_bound(ctx.bound);
    let parts = graded_parts(ctx, &f)?;
    let class_index = |i: u8| ((i % 8) / 2) as usize;
    let u = OpSpec::u(ctx.level)?;
    for (k, i) in [1u8, 3, 5, 7].into_iter().enumerate() {
        let img = ctx.apply(&u, &parts[k])?;
        if img != parts[class_index(i * n)] {
            return Err(Error::ClassDecompositionFailed(format!(
                "U_{n} applied to the class-{i} part is not the class-{} part",
                (i * n) % 8
            )));
        }
    }
    let i = [3u8, 5, 7].into_iter().find(|&i| i != n % 8).unwrap();
    let g = parts[0].add(&parts[class_index(i)]);
    let back = PolyCoord::from_words(u_prime(ctx)?.mul_vec(g.words()), ctx.bound);
    if back != f {
        return Err(Error::ClassDecompositionFailed(
            "U_N' of the constructed preimage differs from the input".into(),
        ));
    }
    Ok(g)
}
