//! Check suites over every reproduced table and relation, and the report
//! they produce.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::f2la::BitMatrix;
use crate::fps2::{self, QExpansion};
use crate::galois::{frattini_class, FrattiniClass};
use crate::genforms::{delta_mod2, f_generator, fricke_image, GeneratorId};
use crate::heckeq::{self, OpSpec};
use crate::recur::{self, CompanionPoly, F2Poly, PolyCoord};
use crate::spaces::{
    self, graded_bound, graded_parts, k_space, new_space, old_space, poly_pow, un_preimage,
    vnew_space, HeckeContext,
};
use crate::structure::{
    self, extract_series, hilbert_samuel_matrices, series_matrix, BiSeries, Extraction, SeriesName,
};
use crate::tangent::{constraint_system, TangentSystem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    SkippedInsufficientScale,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::SkippedInsufficientScale => "skipped-insufficient-scale",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub paper_anchor: String,
    pub status: Status,
    pub detail: String,
    pub runtime_ms: u64,
}

/// Scale knobs shared by every suite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Scale {
    /// Restrict level-specific checks to this level.
    pub level: Option<u32>,
    /// q-precision of expansions, and the cap on form-degree bounds.
    pub prec: usize,
    /// Total-degree bound for series extraction.
    pub degree: usize,
    /// Largest power fⁿ used by recurrence and relation checks.
    pub nmax: usize,
}

impl Default for Scale {
    fn default() -> Self {
        Scale {
            level: None,
            prec: 1000,
            degree: 12,
            nmax: 40,
        }
    }
}

impl Scale {
    fn wants(&self, level: Option<u32>) -> bool {
        match (self.level, level) {
            (Some(a), Some(b)) => a == b,
            _ => true,
        }
    }

    /// Levels 3 and 5 unless restricted.
    fn levels(&self) -> Vec<u32> {
        [3, 5]
            .into_iter()
            .filter(|&n| self.wants(Some(n)))
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    All,
    Tables,
    Recurrences,
    Series,
    Tangent,
    Relations,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::All,
        Suite::Tables,
        Suite::Recurrences,
        Suite::Series,
        Suite::Tangent,
        Suite::Relations,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Tables => "tables",
            Suite::Recurrences => "recurrences",
            Suite::Series => "series",
            Suite::Tangent => "tangent",
            Suite::Relations => "relations",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub scale: Scale,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("suite {}\n", self.suite);
        for c in &self.checks {
            out.push_str(&format!("{:<5} {}  {}\n", short(c.status), c.id, c.detail));
        }
        out.push_str(&format!(
            "{} passed, {} failed, {} skipped\n",
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::SkippedInsufficientScale)
        ));
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("id,paper_anchor,status,detail,runtime_ms\n");
        for c in &self.checks {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                csv_field(&c.id),
                csv_field(&c.paper_anchor),
                c.status,
                csv_field(&c.detail),
                c.runtime_ms
            ));
        }
        out
    }
}

fn short(s: Status) -> &'static str {
    match s {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
        Status::SkippedInsufficientScale => "SKIP",
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

type Body = Box<dyn Fn(&Scale) -> Result<(bool, String)> + Send + Sync>;

struct Job {
    id: String,
    anchor: &'static str,
    body: Body,
}

fn job(
    id: impl Into<String>,
    anchor: &'static str,
    body: impl Fn(&Scale) -> Result<(bool, String)> + Send + Sync + 'static,
) -> Job {
    Job {
        id: id.into(),
        anchor,
        body: Box::new(body),
    }
}

/// Run a suite at the given scale; checks are independent and run in
/// parallel, and the report lists them sorted by id.
pub fn run(suite: Suite, scale: &Scale) -> Report {
    let jobs = jobs(suite, scale);
    let mut checks: Vec<Check> = jobs
        .par_iter()
        .map(|j| {
            let t0 = Instant::now();
            let (status, detail) = match (j.body)(scale) {
                Ok((true, d)) => (Status::Pass, d),
                Ok((false, d)) => (Status::Fail, d),
                Err(Error::InsufficientScale(d)) => (Status::SkippedInsufficientScale, d),
                Err(e) => (Status::Fail, format!("error: {e}")),
            };
            Check {
                id: j.id.clone(),
                paper_anchor: j.anchor.to_string(),
                status,
                detail,
                runtime_ms: t0.elapsed().as_millis() as u64,
            }
        })
        .collect();
    checks.sort_by(|a, b| a.id.cmp(&b.id));
    Report {
        suite: suite.name().to_string(),
        scale: scale.clone(),
        checks,
    }
}

fn jobs(suite: Suite, scale: &Scale) -> Vec<Job> {
    match suite {
        Suite::All => [
            Suite::Tables,
            Suite::Recurrences,
            Suite::Series,
            Suite::Tangent,
            Suite::Relations,
        ]
        .into_iter()
        .flat_map(|s| jobs(s, scale))
        .collect(),
        Suite::Tables => table_jobs(scale),
        Suite::Recurrences => recurrence_jobs(scale),
        Suite::Series => series_jobs(scale),
        Suite::Tangent => tangent_jobs(),
        Suite::Relations => relation_jobs(scale),
    }
}

// Reference data.

pub const DELTA_REFERENCE: &str = "q + q^9 + q^25 + q^49 + O(q^50)";
pub const F3_REFERENCE: &str =
    "q + q^2 + q^3 + q^4 + q^6 + q^8 + q^9 + q^12 + q^16 + q^18 + O(q^20)";
pub const F5_REFERENCE: &str = "q + q^2 + q^4 + q^5 + q^8 + q^9 + q^10 + q^16 + q^18 + O(q^20)";

/// Companions of T_ℓ(fⁿ) and U_N(fⁿ) for reference, with `y` the generator.
pub const REFERENCE_COMPANIONS: [(u32, &str, &str); 6] = [
    (3, "U3", "X^3 + yX^2 + (y^2 + y)X + y^3 + y"),
    (
        3,
        "T7",
        "X^8 + (y^2 + y)(X^4 + X^3) + (y^4 + y^3 + y^2 + y)(X^2 + X) + y^8",
    ),
    (
        3,
        "T13",
        "X^14 + y^2X^12 + y^4X^10 + y^6X^8 + (y^8 + y^4 + y^2)X^6 + (y^10 + y^6 + y^2)X^4 \
         + (y^12 + y^6 + y^4 + y^2 + y)X^2 + (y^2 + y)X + y^14",
    ),
    (
        5,
        "U5",
        "X^5 + yX^4 + (y^2 + y)X^3 + (y^3 + y)X^2 + (y^4 + y^3 + y^2 + y)X + y^5 + y",
    ),
    (
        5,
        "T7",
        "X^8 + (y^2 + y)X^6 + (y^2 + y)X^5 + (y^6 + y^5 + y^2 + y)(X^2 + X) + y^8",
    ),
    (
        5,
        "T11",
        "X^12 + y^2X^8 + (y^4 + y^2)X^6 + y^6X^4 + (y^8 + y^6 + y^2 + y)X^2 + (y^2 + y)X + y^12",
    ),
];

/// Reference terms of f, complete below total degree 12.
pub const F_REFERENCE: &str =
    "xy + x^3y + xy^5 + x^7y + x^5y^3 + x^3y^5 + x^9y + x^5y^5 + x^3y^7 + xy^9";
/// Reference terms of g, complete on y-degree < 4 and total degree < 8.
pub const G_REFERENCE: &str = "yz + z^2 + yz^3 + y^2z^2 + y^3z + y^3z^3 + y^2z^4";

/// Whether the reference series determines the coefficient of this monomial.
pub fn reference_region(name: SeriesName, a: usize, b: usize) -> bool {
    match name {
        SeriesName::F => a + b < 12,
        SeriesName::G => a < 4 && a + b < 8,
        SeriesName::FPrime | SeriesName::GPrime => false,
    }
}

/// Degree to extract a series at for a requested degree: g is only
/// determined below total degree 8.
pub fn series_degree(name: SeriesName, requested: usize) -> usize {
    match name {
        SeriesName::F | SeriesName::FPrime => requested,
        SeriesName::G | SeriesName::GPrime => requested.min(8),
    }
}

pub fn reference_series(name: SeriesName) -> Option<BiSeries> {
    let (text, bound) = match name {
        SeriesName::F => (F_REFERENCE, 12),
        SeriesName::G => (G_REFERENCE, 8),
        _ => return None,
    };
    Some(BiSeries::parse(text, bound, name.vars()).expect("reference series parses"))
}

/// Grading parity: f-type monomials have both exponents odd, g-type have
/// even total degree.
pub fn parity_ok(name: SeriesName, s: &BiSeries) -> bool {
    s.monomials().into_iter().all(|(a, b)| match name {
        SeriesName::F | SeriesName::FPrime => a % 2 == 1 && b % 2 == 1,
        SeriesName::G | SeriesName::GPrime => (a + b) % 2 == 0,
    })
}

// Tables suite.

fn table_jobs(scale: &Scale) -> Vec<Job> {
    let mut v = vec![job("generators.delta", "mod-2 Delta expansion", |_| {
        let d = delta_mod2(50);
        Ok((d.to_string() == DELTA_REFERENCE, d.to_string()))
    })];
    for (n, reference) in [(3u32, F3_REFERENCE), (5, F5_REFERENCE)] {
        if scale.wants(Some(n)) {
            v.push(job(
                format!("generators.f{n}"),
                "polynomial-algebra generator expansions",
                move |_| {
                    let f = f_generator(n, 20)?;
                    Ok((f.to_string() == reference, f.to_string()))
                },
            ));
        }
    }
    if scale.wants(Some(3)) {
        v.push(job(
            "witness.3.table",
            "level-3 cotangent witness table",
            |s| witness_table_3(s.prec),
        ));
    }
    if scale.wants(Some(5)) {
        v.push(job("witness.5.rank", "level-5 cotangent witnesses", |s| {
            witness_rank_5(s.prec, s.nmax)
        }));
    }
    for n in scale.levels() {
        v.push(job(
            format!("galois.{n}.rows"),
            "Frattini class tables",
            move |_| galois_rows(n),
        ));
        v.push(job(
            format!("galois.{n}.modulus"),
            "Frattini classes depend on q modulo 8N",
            move |_| galois_modulus(n, 1000),
        ));
    }
    v
}

/// Rows of the reference class tables: (N, sample primes, action bits, label).
pub const CLASS_TABLE: [(u32, &[u64], u8, &str); 16] = [
    (3, &[73], 0b000, "g1+"),
    (3, &[17], 0b001, "g1-"),
    (3, &[11], 0b110, "g3+"),
    (3, &[19], 0b111, "g3-"),
    (3, &[23], 0b100, "g7+"),
    (3, &[7], 0b101, "g7-"),
    (3, &[13], 0b010, "g5+"),
    (3, &[5], 0b011, "g5-"),
    (5, &[41, 89], 0b000, "g1+"),
    (5, &[17, 73], 0b001, "g1-"),
    (5, &[61, 29], 0b010, "g5+"),
    (5, &[13, 37], 0b011, "g5-"),
    (5, &[31, 79], 0b100, "g7+"),
    (5, &[7, 23], 0b101, "g7-"),
    (5, &[11, 19], 0b110, "g3+"),
    (5, &[3, 67], 0b111, "g3-"),
];

fn galois_rows(n: u32) -> Result<(bool, String)> {
    let mut bad = Vec::new();
    let mut rows = 0;
    for &(level, qs, bits, label) in CLASS_TABLE.iter().filter(|r| r.0 == n) {
        rows += 1;
        for &q in qs {
            let c = frattini_class(q, level)?;
            if c.bits() != bits || c.to_string() != label {
                bad.push(format!("q={q}: got {c} ({:03b}), want {label}", c.bits()));
            }
        }
    }
    let detail = if bad.is_empty() {
        format!("{rows} rows match")
    } else {
        bad.join("; ")
    };
    Ok((bad.is_empty(), detail))
}

/// Frobenius classes are constant on residues mod 8N among primes below `limit`.
fn galois_modulus(n: u32, limit: u64) -> Result<(bool, String)> {
    let m = 8 * n as u64;
    let mut seen: std::collections::BTreeMap<u64, FrattiniClass> = Default::default();
    let mut clash = None;
    for q in (3..limit).filter(|&q| crate::arith::is_prime(q) && q % n as u64 != 0) {
        let c = frattini_class(q, n)?;
        let prev = *seen.entry(q % m).or_insert(c);
        if prev != c && clash.is_none() {
            clash = Some(format!("q={q} differs within residue {}", q % m));
        }
    }
    let classes: std::collections::BTreeSet<_> = seen.values().collect();
    Ok((
        clash.is_none() && classes.len() == 8,
        clash.unwrap_or_else(|| {
            format!("{} residues mod {m}, {} classes", seen.len(), classes.len())
        }),
    ))
}

/// Name a form as 0, Δ, Δ', Δ + Δ' at level N, else by its exponents.
fn name_form(f: &QExpansion, n: u32) -> String {
    let p = f.prec();
    let d = delta_mod2(p);
    let dp = fricke_image(&delta_mod2(p / n as usize + 1), n).truncate(p);
    let cands = [
        ("0", QExpansion::zero(p)),
        ("D", d.clone()),
        ("D'", dp.clone()),
        ("D + D'", d.add(&dp)),
    ];
    for (name, c) in cands {
        if &c == f {
            return name.to_string();
        }
    }
    f.to_string()
}

/// Witness forms at level N: Δ̄, Δ̄³, Δ̄⁵, Δ̄(q^N), Δ̄²Δ̄(q^N) at precision `prec`.
pub fn witness_forms(n: u32, prec: usize) -> Vec<(&'static str, QExpansion)> {
    let d = delta_mod2(prec);
    let dp = fricke_image(&delta_mod2(prec / n as usize + 1), n).truncate(prec);
    vec![
        ("D", d.clone()),
        ("D^3", d.pow(3)),
        ("D^5", d.pow(5)),
        ("D'", dp.clone()),
        ("D^2D'", d.square().mul(&dp)),
    ]
}

fn witness_table_3(prec: usize) -> Result<(bool, String)> {
    let expected = [
        ["0", "0", "0", "0"],
        ["0", "0", "D", "0"],
        ["D", "0", "0", "D"],
        ["0", "0", "0", "0"],
        ["D", "D'", "0", "0"],
    ];
    let ops = [5u64, 7, 11, 13];
    let mut ok = true;
    let mut rows = Vec::new();
    for ((name, f), want) in witness_forms(3, prec).into_iter().zip(expected) {
        let mut cells = Vec::new();
        for (&l, w) in ops.iter().zip(want) {
            let got = name_form(&heckeq::apply_tell(l, &f)?, 3);
            ok &= got == w;
            cells.push(got);
        }
        rows.push(format!("{name}: {}", cells.join(", ")));
    }
    Ok((ok, rows.join(" | ")))
}

fn witness_rank_5(prec: usize, nmax: usize) -> Result<(bool, String)> {
    let ops = [3u64, 7, 11, 13];
    let forms: Vec<(&str, QExpansion)> = witness_forms(5, prec)
        .into_iter()
        .filter(|(n, _)| matches!(*n, "D^3" | "D^5" | "D^2D'"))
        .collect();
    let mut rows = Vec::new();
    let mut cert = Vec::new();
    let mut cells = Vec::new();
    for &l in &ops {
        let mut row = Vec::new();
        for (_, f) in &forms {
            let img = heckeq::apply_tell(l, f)?;
            cells.push(name_form(&img, 5));
            row.extend(img.words().iter().copied());
        }
        rows.push(row);
    }
    let width = rows[0].len() * 64;
    let rank = BitMatrix::from_rows(&rows, width).rank();
    for (k, (name, _)) in forms.iter().enumerate() {
        let col: Vec<&str> = (0..ops.len())
            .map(|i| cells[i * forms.len() + k].as_str())
            .collect();
        cert.push(format!("{name}: {}", col.join(", ")));
    }
    // The witnesses must be killed by every product of two generators.
    let bound = nmax + 1;
    let ctx = HeckeContext::new(5, bound)?;
    let mats: Vec<&BitMatrix> = ops.iter().map(|&l| ctx.t(l)).collect::<Result<_>>()?;
    let mut m2 = true;
    for (_, f) in &forms {
        let v = ctx.from_qexpansion(&f.truncate(bound + recur::GUARD))?;
        for a in &mats {
            for b in &mats {
                m2 &= fps2_zero(&a.mul(b).mul_vec(v.words()));
            }
        }
    }
    Ok((
        rank == 4 && m2,
        format!("rank {rank}, killed by m^2: {m2}; {}", cert.join(" | ")),
    ))
}

fn fps2_zero(w: &[u64]) -> bool {
    w.iter().all(|x| *x == 0)
}

// Recurrence suite.

fn recurrence_jobs(scale: &Scale) -> Vec<Job> {
    let mut v = Vec::new();
    for (level, op, text) in REFERENCE_COMPANIONS {
        if !scale.wants(Some(level)) {
            continue;
        }
        v.push(job(
            format!("companion.{level}.{op}"),
            "companion polynomial table",
            move |s| {
                let spec = heckeq::parse_op(op, level)?;
                let gen = GeneratorId::for_level(level)?;
                let reference: CompanionPoly = text.parse()?;
                let derived = recur::derive_companion_default(&spec, &gen)?;
                let rep = recur::verify_recurrence(&derived, &spec, &gen, s.nmax)?;
                let ok = derived == reference && rep.passed() && derived.satisfies_degree_bounds();
                Ok((
                    ok,
                    format!("{derived}; recurrence to n={}: {}", s.nmax, rep.passed()),
                ))
            },
        ));
    }
    if scale.wants(Some(3)) {
        v.push(job(
            "companion.3.T7.mutated",
            "companion polynomial table",
            |s| {
                let spec = OpSpec::t(7, 3)?;
                let gen = GeneratorId::for_level(3)?;
                let good: CompanionPoly = REFERENCE_COMPANIONS[1].2.parse()?;
                let mut coeffs = good.coeffs().to_vec();
                coeffs[3] = coeffs[3].add(&F2Poly::monomial(1));
                let bad = CompanionPoly::new(coeffs);
                let rep = recur::verify_recurrence(&bad, &spec, &gen, s.nmax)?;
                Ok((
                    !rep.passed(),
                    format!("mutated a_4 rejected at n={:?}", rep.first_failure),
                ))
            },
        ));
    }
    let derived: [(u32, &[u64]); 3] = [(1, &[3, 5, 7, 11, 13]), (3, &[5, 11]), (5, &[3, 13])];
    for (level, ells) in derived {
        if !scale.wants(Some(level)) {
            continue;
        }
        for &ell in ells {
            v.push(job(
                format!("companion.{level}.T{ell}.derived"),
                "companion polynomials (no reference)",
                move |s| {
                    let spec = OpSpec::t(ell, level)?;
                    let gen = GeneratorId::for_level(level)?;
                    let c = recur::derive_companion_default(&spec, &gen)?;
                    let rep = recur::verify_recurrence(&c, &spec, &gen, s.nmax)?;
                    Ok((rep.passed() && c.satisfies_degree_bounds(), c.to_string()))
                },
            ));
        }
    }
    v
}

// Series suite.

fn series_jobs(scale: &Scale) -> Vec<Job> {
    let mut v = Vec::new();
    for name in SeriesName::ALL {
        if !scale.wants(Some(name.family())) {
            continue;
        }
        v.push(job(
            format!("series.{name}"),
            "power series of the reduced Hecke algebra",
            move |s| series_check(name, s),
        ));
    }
    let pairings: [(u32, SeriesName); 2] = [(1, SeriesName::F), (3, SeriesName::G)];
    for (level, name) in pairings {
        if !scale.wants(Some(level)) {
            continue;
        }
        v.push(job(
            format!("pairing.{level}.nonsingular"),
            "regular two-dimensional quotients",
            move |s| {
                let e = extract_series(name, 7, 2 * (s.nmax + 1), s.prec)?;
                Ok((
                    true,
                    format!("pairing through degree 6 perfect at bound {}", e.bound),
                ))
            },
        ));
    }
    if scale.wants(Some(1)) {
        v.push(job(
            "hilbert-samuel.1",
            "level-1 Hecke algebra is a power series ring in two variables",
            |s| {
                let ctx = HeckeContext::new(1, 4 * (s.nmax + 1))?;
                let gens = [ctx.t(11)?.clone(), ctx.t(13)?.clone()];
                let h = hilbert_samuel_matrices(&k_space(&ctx), &gens, 5);
                let want: Vec<usize> = (1..=5).map(|k| k * (k + 1) / 2).collect();
                Ok((h == want, format!("h = {h:?}")))
            },
        ));
    }
    for n in scale.levels() {
        v.push(job(
            format!("hilbert-samuel.{n}.new"),
            "Krull dimension of the very new Hecke algebra",
            move |s| hilbert_samuel_new(n, s),
        ));
    }
    v
}

fn series_check(name: SeriesName, s: &Scale) -> Result<(bool, String)> {
    let degree = series_degree(name, s.degree);
    let e = extract_series(name, degree, 4 * (s.nmax + 1), s.prec)?;
    let mut ok = parity_ok(name, &e.series) && dual_sound(&e)?;
    let mut detail = format!("bound {}: {}", e.bound, e.series);
    if let Some(reference) = reference_series(name) {
        let mut diffs = Vec::new();
        for (a, b) in structure::monomials_below(degree) {
            if reference_region(name, a, b) && e.series.coeff(a, b) != reference.coeff(a, b) {
                diffs.push(format!("({a},{b})"));
            }
        }
        ok &= diffs.is_empty();
        if !diffs.is_empty() {
            detail.push_str(&format!("; differs from reference at {}", diffs.join(" ")));
        }
    }
    Ok((ok, detail))
}

/// Re-derive ⟨XᵃYᵇ, m_{c,e}⟩ = δ with explicit operator products.
fn dual_sound(e: &Extraction) -> Result<bool> {
    let (_, x, y) = e.name.operators();
    let ctx = HeckeContext::new(e.name.level(), e.bound)?;
    let (xm, ym) = (ctx.t(x)?, ctx.t(y)?);
    let d = e.dual.degree;
    let mut xp = vec![BitMatrix::identity(e.bound)];
    let mut yp = vec![BitMatrix::identity(e.bound)];
    for k in 1..d {
        xp.push(xp[k - 1].mul(xm));
        yp.push(yp[k - 1].mul(ym));
    }
    for &(a, b) in &e.dual.monomials {
        let op = xp[a].mul(&yp[b]);
        for (&(c, f), m) in e.dual.monomials.iter().zip(&e.dual.forms) {
            let val = PolyCoord::from_words(op.mul_vec(m.words()), e.bound).coeff(1);
            if val != ((a, b) == (c, f)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The Hilbert–Samuel data of K(N)^new for the generators U_N′, T₇ and
/// T_q with q in the class of c·Frob_N; the bound doubles until h(1..=7)
/// stops changing.
fn hilbert_samuel_new(n: u32, s: &Scale) -> Result<(bool, String)> {
    let q = new_generator(n)?;
    let h_at = |bound: usize| -> Result<Vec<usize>> {
        let ctx = HeckeContext::new(n, bound)?;
        let up = ctx.u()?.add(&BitMatrix::identity(bound));
        let gens = [up, ctx.t(7)?.clone(), ctx.t(q)?.clone()];
        Ok(hilbert_samuel_matrices(&new_space(&ctx)?, &gens, 7))
    };
    let mut bound = 4 * (s.nmax + 1);
    let mut h = h_at(bound)?;
    loop {
        if 2 * bound > s.prec {
            return Err(Error::InsufficientScale(format!(
                "h(1..=7) still changing at bound {bound}: {h:?}"
            )));
        }
        let next = h_at(2 * bound)?;
        if next == h {
            break;
        }
        h = next;
        bound *= 2;
    }
    let inc: Vec<usize> = h.windows(2).map(|w| w[1] - w[0]).collect();
    // inc[k - 1] = h(k + 1) - h(k)
    let ok = (2..=5).all(|k| inc[k - 1] <= inc[k]) && (3..=6).all(|k| inc[k - 1] >= 2);
    Ok((ok, format!("bound {bound}: h = {h:?}, increments {inc:?}")))
}

/// T_q with Frob_q in the class of c·Frob_N: T₁₃ for N = 3, T₁₁ for N = 5.
pub fn new_generator(n: u32) -> Result<u64> {
    match n {
        3 => Ok(13),
        5 => Ok(11),
        _ => Err(Error::InvalidLevel(n)),
    }
}

// Tangent suite.

/// Expected constraint-system nullities per residue 1, 3, 5, 7.
pub const TANGENT_TABLE: [(TangentSystem, [usize; 4]); 4] = [
    (TangentSystem::Unrestricted, [6, 6, 6, 6]),
    (TangentSystem::LevelN, [5, 4, 4, 4]),
    (TangentSystem::PrimeQuotient, [5, 2, 2, 3]),
    (TangentSystem::Reduced, [5, 3, 3, 3]),
];

fn tangent_jobs() -> Vec<Job> {
    let mut v = Vec::new();
    for (kind, dims) in TANGENT_TABLE {
        for (r, want) in [1u8, 3, 5, 7].into_iter().zip(dims) {
            let anchor = match kind {
                TangentSystem::Unrestricted => "tangent dimension of the unrestricted ring",
                TangentSystem::LevelN => "tangent dimension with level-N shape",
                TangentSystem::PrimeQuotient => "tangent bound for domain quotients",
                TangentSystem::Reduced => "tangent bound for the reduced ring",
            };
            v.push(job(format!("tangent.{kind}.{r}"), anchor, move |_| {
                let sys = constraint_system(kind, r)?;
                let rank_null = sys.nullity();
                let count = sys.count_solutions();
                let ok = rank_null == want && count == 1 << want;
                Ok((ok, format!("nullity {rank_null}, {count} of 256 maps")))
            }));
        }
    }
    v
}

// Relations suite.

fn relation_jobs(scale: &Scale) -> Vec<Job> {
    let mut v = vec![job("identities.theta", "theta as a projector", |s| {
        theta_identity(s.nmax)
    })];
    for n in scale.levels() {
        let base = format!("relations.{n}");
        for which in ['a', 'b', 'c', 'd'] {
            v.push(job(
                format!("{base}.{which}"),
                relation_anchor(which),
                move |s| relation(n, s, which),
            ));
        }
        v.push(job(
            format!("{base}.negative"),
            "sensitivity of the old relation",
            move |s| negative_control(n, s),
        ));
        v.push(job(format!("frobenius.{n}"), "Frobenius at N", move |s| {
            frobenius_check(n, s)
        }));
        v.push(job(
            format!("identities.{n}.old-image"),
            "(U_N')^2 lands in old forms",
            move |s| old_image(n, s),
        ));
        v.push(job(
            format!("identities.{n}.grading"),
            "Hecke operators shift the mod-8 grading",
            move |s| grading(n, s),
        ));
        v.push(job(
            format!("identities.{n}.un-preimage"),
            "very new forms lie in the image of U_N'",
            move |s| preimages(n, s),
        ));
    }
    v
}

fn theta_identity(nmax: usize) -> Result<(bool, String)> {
    let mut rng = StdRng::seed_from_u64(0x7e7a);
    let mut ok = true;
    let prec = 4 * (nmax + 1) + recur::GUARD;
    for level in [1u32, 3, 5] {
        let gen = GeneratorId::for_level(level)?.expansion(prec);
        let powers = recur::GenPowers::new(&gen, nmax + 1)?;
        for _ in 0..100 {
            let w: Vec<u64> = (0..crate::recur::PolyCoord::zero(nmax + 1).words().len())
                .map(|_| rng.gen())
                .collect();
            let f = powers.to_qexpansion(&PolyCoord::from_words(w, nmax + 1));
            let rhs = f.add(&heckeq::v2(&heckeq::apply_u(2, &f)?).truncate(f.prec()));
            ok &= fps2::eq_to_prec(&heckeq::theta(&f), &rhs, f.prec())?;
        }
    }
    Ok((ok, "300 random forms at levels 1, 3, 5".into()))
}

/// f and g for level N at the scale's degree.
fn level_series(n: u32, s: &Scale) -> Result<(Extraction, Extraction)> {
    let f = SeriesName::for_level(n, true)?;
    let g = SeriesName::for_level(n, false)?;
    let start = 4 * (s.nmax + 1);
    Ok((
        extract_series(f, series_degree(f, s.degree), start, s.prec)?,
        extract_series(g, series_degree(g, s.degree), start, s.prec)?,
    ))
}

/// `(Z_old, X_vnew)` at a context: Z_old = T_z + f(T_x, T_y) and
/// X_vnew = T_x + g(T_y, T_z).
fn relation_operators(
    ctx: &HeckeContext,
    f: &BiSeries,
    g: &BiSeries,
) -> Result<(BitMatrix, BitMatrix)> {
    let (_, x, y) = SeriesName::for_level(ctx.level(), true)?.operators();
    let (tx, ty, tz) = (ctx.t(x)?, ctx.t(y)?, ctx.t(7)?);
    let z_old = tz.add(&series_matrix(f, tx, ty));
    let x_vnew = tx.add(&series_matrix(g, ty, tz));
    Ok((z_old, x_vnew))
}

fn relation(n: u32, s: &Scale, which: char) -> Result<(bool, String)> {
    let bound = s.nmax + 1;
    let ctx = HeckeContext::new(n, bound)?;
    let id = BitMatrix::identity(bound);
    let u = ctx.u()?;
    let up = u.add(&id);
    let column_check = |m: &BitMatrix, what: &str| -> (bool, String) {
        match first_nonzero_col(m) {
            None => (true, format!("{what} on degree < {bound}")),
            Some(k) => (false, format!("{what} fails on f^{k}")),
        }
    };
    match which {
        'd' => {
            let sol = structure::solve_frobenius_auto(&ctx, &structure::frobenius_generators(n)?)?;
            let defect = sol.matrix.mul(u).add(&u.mul(u)).add(&id);
            Ok(column_check(&defect, "F_N U_N = U_N^2 + 1"))
        }
        _ => {
            let (f, g) = level_series(n, s)?;
            let (z_old, x_vnew) = relation_operators(&ctx, &f.series, &g.series)?;
            match which {
                'a' => {
                    let p = x_vnew.mul(&z_old);
                    Ok(column_check(&p.mul(&p), "P^2 = 0"))
                }
                'b' => {
                    let old = old_space(&ctx, None)?;
                    let vnew = vnew_space(&ctx)?;
                    let ko = old.kernel_of(&z_old).dim();
                    let kv = vnew.kernel_of(&x_vnew).dim();
                    let mut detail = format!(
                        "Z_old kills {ko}/{} old, X_vnew kills {kv}/{} very new",
                        old.dim(),
                        vnew.dim()
                    );
                    let survivor = |space: &spaces::FormSpace, m: &BitMatrix| {
                        space
                            .basis()
                            .into_iter()
                            .find(|v| !fps2_zero(&m.mul_vec(v.words())))
                    };
                    if let Some(v) = survivor(&old, &z_old) {
                        detail.push_str(&format!("; witness {}", ctx.to_qexpansion(&v)));
                    }
                    if let Some(v) = survivor(&vnew, &x_vnew) {
                        detail.push_str(&format!("; witness {}", ctx.to_qexpansion(&v)));
                    }
                    Ok((ko == old.dim() && kv == vnew.dim(), detail))
                }
                _ => Ok(column_check(&z_old.mul(&up).mul(&up), "Z_old (U_N')^2 = 0")),
            }
        }
    }
}

fn first_nonzero_col(m: &BitMatrix) -> Option<usize> {
    (0..m.cols()).find(|&j| !fps2_zero(&m.col(j)))
}

/// Checks (a) to (d) at level N on forms of degree < `bound`.
pub fn relation_suite(n: u32, bound: usize) -> Result<Report> {
    if n != 3 && n != 5 {
        return Err(Error::InvalidLevel(n));
    }
    let scale = Scale {
        level: Some(n),
        nmax: bound.max(1) - 1,
        ..Scale::default()
    };
    let mut checks = Vec::new();
    for which in ['a', 'b', 'c', 'd'] {
        let t0 = Instant::now();
        let (status, detail) = match relation(n, &scale, which) {
            Ok((true, d)) => (Status::Pass, d),
            Ok((false, d)) => (Status::Fail, d),
            Err(Error::InsufficientScale(d)) => (Status::SkippedInsufficientScale, d),
            Err(e) => return Err(e),
        };
        checks.push(Check {
            id: format!("relations.{n}.{which}"),
            paper_anchor: relation_anchor(which).to_string(),
            status,
            detail,
            runtime_ms: t0.elapsed().as_millis() as u64,
        });
    }
    Ok(Report {
        suite: "relations".into(),
        scale,
        checks,
    })
}

fn relation_anchor(which: char) -> &'static str {
    match which {
        'a' => "square-zero nilradical",
        'b' => "minimal primes of the reduced algebra",
        'c' => "partially full relation zu^2",
        _ => "quadratic relation for U_N",
    }
}

/// Dropping the degree-10 terms of f must break Z_old on some old form;
/// the bound doubles until a witness appears.
fn negative_control(n: u32, s: &Scale) -> Result<(bool, String)> {
    let (f, _) = level_series(n, s)?;
    if f.series.degree_bound() <= 10 {
        return Err(Error::InsufficientScale(
            "series degree must exceed 10".into(),
        ));
    }
    let cut = f.series.filter(|a, b| a + b != 10);
    let (_, x, y) = f.name.operators();
    let mut bound = 2 * (s.nmax + 1);
    while bound <= s.prec {
        let ctx = HeckeContext::new(n, bound)?;
        let z = ctx.t(7)?.add(&series_matrix(&cut, ctx.t(x)?, ctx.t(y)?));
        let d = ctx.delta_poly()?;
        let dp = ctx.fricke_delta_poly()?;
        for (label, base) in [("D", &d), ("D'", &dp)] {
            for a in 1.. {
                let p = poly_pow(base, a);
                if p.degree().is_some_and(|k| k >= bound) {
                    break;
                }
                let v = ctx.coord(&p)?;
                if !fps2_zero(&z.mul_vec(v.words())) {
                    return Ok((
                        true,
                        format!("truncated f fails on {label}^{a} at bound {bound}"),
                    ));
                }
            }
        }
        bound *= 2;
    }
    Err(Error::InsufficientScale(format!(
        "no old witness below bound {}",
        s.prec
    )))
}

fn frobenius_check(n: u32, s: &Scale) -> Result<(bool, String)> {
    let bound = s.nmax + 1;
    let ctx = HeckeContext::new(n, bound)?;
    let sol = structure::solve_frobenius_auto(&ctx, &structure::frobenius_generators(n)?)?;
    let vnew = vnew_space(&ctx)?;
    let kills_vnew = vnew.kernel_of(&sol.matrix).dim() == vnew.dim();
    // On old forms X acts as T_N does at level 1.
    let prec = bound + recur::GUARD;
    let big = n as usize * prec + 1;
    let delta = delta_mod2(big);
    let mut old_ok = true;
    let mut tested = 0;
    for a in 1.. {
        let p = poly_pow(&ctx.delta_poly()?, a);
        if p.degree().is_some_and(|k| k >= bound) {
            break;
        }
        let da = delta.pow(a as u64);
        let want = heckeq::apply_tell(n as u64, &da)?.truncate(prec);
        let got = ctx.to_qexpansion(&PolyCoord::from_words(
            sol.matrix.mul_vec(ctx.coord(&p)?.words()),
            bound,
        ));
        old_ok &= fps2::eq_to_prec(&got, &want, prec)?;
        let pp = poly_pow(&ctx.fricke_delta_poly()?, a);
        if pp.degree().is_some_and(|k| k < bound) {
            let want = fricke_image(&want, n).truncate(prec);
            let got = ctx.to_qexpansion(&PolyCoord::from_words(
                sol.matrix.mul_vec(ctx.coord(&pp)?.words()),
                bound,
            ));
            old_ok &= fps2::eq_to_prec(&got, &want, prec)?;
        }
        tested += 1;
    }
    Ok((
        kills_vnew && old_ok,
        format!(
            "X = {}; kills very new: {kills_vnew}; acts as T_{n} on {tested} old powers: {old_ok}",
            sol.expr()
        ),
    ))
}

fn old_image(n: u32, s: &Scale) -> Result<(bool, String)> {
    let bound = s.nmax + 1;
    let ctx = HeckeContext::new(n, bound)?;
    let up = ctx.u()?.add(&BitMatrix::identity(bound));
    let s2 = up.mul(&up);
    // Old forms of degree < bound may need powers whose leading terms cancel.
    let wide = HeckeContext::with_ops(n, 2 * bound, &[])?;
    let old = old_space(&wide, None)?;
    let mut bad = Vec::new();
    for k in 0..bound {
        let img = PolyCoord::from_words(s2.mul_vec(PolyCoord::basis(k, bound).words()), bound);
        if !old.contains(&img.with_bound(2 * bound)) {
            bad.push(k);
        }
    }
    Ok((
        bad.is_empty(),
        if bad.is_empty() {
            format!("(U_N')^2 f^n old for n < {bound}")
        } else {
            format!("not old for n in {bad:?}")
        },
    ))
}

fn grading(n: u32, s: &Scale) -> Result<(bool, String)> {
    let bound = s.nmax + 1;
    let ctx = HeckeContext::new(n, bound)?;
    let big = HeckeContext::new(n, graded_bound(n, bound))?;
    let ops: Vec<(u64, OpSpec)> = [3u64, 5, 7, 11, 13]
        .into_iter()
        .map(|m| {
            let op = if m == n as u64 {
                OpSpec::u(n)
            } else {
                OpSpec::t(m, n)
            };
            op.map(|o| (m, o))
        })
        .collect::<Result<_>>()?;
    let mut checked = 0;
    for v in k_space(&ctx).basis() {
        let parts = graded_parts(&big, &v)?;
        for (part, i) in parts.iter().zip([1u64, 3, 5, 7]) {
            if !fps2_zero(&big.u2().mul_vec(part.words())) {
                return Ok((false, format!("class-{i} part leaves the kernel of U_2")));
            }
            for (m, op) in &ops {
                let img = big.to_qexpansion(&big.apply(op, part)?);
                let class = (m * i % 8) as u8;
                if img != spaces::grading_component(&img, class) {
                    return Ok((
                        false,
                        format!("op {op} moves class {i} outside class {class}"),
                    ));
                }
                checked += 1;
            }
        }
    }
    Ok((
        true,
        format!("{checked} component images land in class m*i"),
    ))
}

fn preimages(n: u32, s: &Scale) -> Result<(bool, String)> {
    let bound = s.nmax + 1;
    let ctx = HeckeContext::new(n, bound)?;
    let big = HeckeContext::new(n, graded_bound(n, bound))?;
    let vnew = vnew_space(&ctx)?;
    let k = k_space(&big);
    let up = big.u()?.add(&BitMatrix::identity(big.bound()));
    for f in vnew.basis() {
        let g = un_preimage(&big, &f)?;
        let back = PolyCoord::from_words(up.mul_vec(g.words()), big.bound());
        if back != f.with_bound(big.bound()) || !k.contains(&g) {
            return Ok((false, "round trip failed".into()));
        }
    }
    Ok((true, format!("{} very new basis forms", vnew.dim())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tangent_suite_passes() {
        let r = run(Suite::Tangent, &Scale::default());
        assert_eq!(r.checks.len(), 16);
        assert!(r.passed());
        let ids: Vec<_> = r.checks.iter().map(|c| c.id.clone()).collect();
        let mut sorted = ids.clone();
        sorted.sort();
        assert_eq!(ids, sorted);
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn csv_quotes_commas() {
        assert_eq!(csv_field("a,b"), "\"a,b\"");
        assert_eq!(csv_field("ab"), "ab");
    }
}
