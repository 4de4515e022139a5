//! Acceptance criteria. Each criterion prints one PASS/FAIL line; the process
//! exits nonzero if any fails.
//!
//! Oracles here work on plain `Vec<bool>` coefficient lists with schoolbook
//! arithmetic, so they share no code with the library beyond parsing.

use std::process::ExitCode;

use hecke_f2::galois::{frattini_class, FrattiniClass};
use hecke_f2::structure::{express_in_generators, BiSeries, OperatorExpr, SeriesName};
use hecke_f2::tangent::{constraint_system, TangentSystem};
use hecke_f2::verify::{run, Scale, Status, Suite};
use hecke_f2::{genforms, heckeq, CompanionPoly, GeneratorId, OpSpec, QExpansion};

type Q = Vec<bool>;

fn from_exps(exps: &[usize], prec: usize) -> Q {
    let mut q = vec![false; prec];
    for &e in exps {
        if e < prec {
            q[e] = true;
        }
    }
    q
}

fn support(q: &Q) -> Vec<usize> {
    (0..q.len()).filter(|&i| q[i]).collect()
}

fn mul(a: &Q, b: &Q) -> Q {
    let p = a.len().min(b.len());
    let mut out = vec![false; p];
    let sb = support(b);
    for i in support(a) {
        for &j in &sb {
            if i + j >= p {
                break;
            }
            out[i + j] ^= true;
        }
    }
    out
}

fn add(a: &Q, b: &Q) -> Q {
    a.iter().zip(b).map(|(x, y)| x ^ y).collect()
}

fn qpow_sub(a: &Q, m: usize) -> Q {
    let mut out = vec![false; a.len()];
    for i in support(a) {
        if i * m < a.len() {
            out[i * m] = true;
        }
    }
    out
}

/// a_m(T_ℓ f) = a_{mℓ} + a_{m/ℓ}.
fn t_ell(ell: usize, f: &Q) -> Q {
    let p = (f.len() - 1) / ell + 1;
    (0..p)
        .map(|m| f[m * ell] ^ (m % ell == 0 && f[m / ell]))
        .collect()
}

fn u_m(m: usize, f: &Q) -> Q {
    let p = (f.len() - 1) / m + 1;
    (0..p).map(|i| f[i * m]).collect()
}

fn delta(prec: usize) -> Q {
    let exps: Vec<usize> = (0..)
        .map(|k| (2 * k + 1) * (2 * k + 1))
        .take_while(|&e| e < prec)
        .collect();
    from_exps(&exps, prec)
}

fn sigma3_odd(n: u64) -> bool {
    (1..=n)
        .filter(|d| n.is_multiple_of(*d))
        .map(|d| d * d * d)
        .sum::<u64>()
        % 2
        == 1
}

/// f_N from σ₃ with plain integer divisor sums.
fn f_gen(n: u64, prec: usize) -> Q {
    (0..prec as u64)
        .map(|m| m > 0 && (sigma3_odd(m) ^ (m % n == 0 && sigma3_odd(m / n))))
        .collect()
}

fn to_lib(q: &Q) -> QExpansion {
    QExpansion::from_exponents(&support(q), q.len())
}

fn truncated(q: &Q, p: usize) -> Q {
    q[..p.min(q.len())].to_vec()
}

fn rank(mut rows: Vec<Q>) -> usize {
    let width = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut r = 0;
    for c in 0..width {
        let Some(pivot) = (r..rows.len()).find(|&i| rows[i].get(c) == Some(&true)) else {
            continue;
        };
        rows.swap(r, pivot);
        let pr = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row.get(c) == Some(&true) {
                for (x, y) in row.iter_mut().zip(&pr) {
                    *x ^= y;
                }
            }
        }
        r += 1;
    }
    r
}

fn suite_ok(suite: Suite, prefix: &[&str]) -> (bool, String) {
    let report = run(suite, &Scale::default());
    let picked: Vec<_> = report
        .checks
        .iter()
        .filter(|c| prefix.iter().any(|p| c.id.starts_with(p)))
        .collect();
    let bad: Vec<String> = picked
        .iter()
        .filter(|c| c.status != Status::Pass)
        .map(|c| format!("{} {}: {}", c.id, c.status, c.detail))
        .collect();
    (
        !picked.is_empty() && bad.is_empty(),
        if bad.is_empty() {
            format!("{} harness checks pass", picked.len())
        } else {
            bad.join("; ")
        },
    )
}

fn c1_generators() -> (bool, String) {
    let reference_f3 = [1, 2, 3, 4, 6, 8, 9, 12, 16, 18];
    let reference_f5 = [1, 2, 4, 5, 8, 9, 10, 16, 18];
    let reference_delta = [1, 9, 25, 49];
    let mut ok = support(&f_gen(3, 20)) == reference_f3
        && support(&f_gen(5, 20)) == reference_f5
        && support(&delta(50)) == reference_delta;
    for (n, reference) in [(3u32, &reference_f3[..]), (5, &reference_f5[..])] {
        let lib = genforms::f_generator(n, 20).unwrap();
        ok &= lib.support().collect::<Vec<_>>() == reference;
        // Agreement well past the reference range.
        ok &= support(&f_gen(n as u64, 600))
            == genforms::f_generator(n, 600)
                .unwrap()
                .support()
                .collect::<Vec<_>>();
    }
    ok &= genforms::delta_mod2(50).support().collect::<Vec<_>>() == reference_delta;
    let (h, d) = suite_ok(Suite::Tables, &["generators."]);
    (ok && h, d)
}

fn witness_forms(n: usize, prec: usize) -> Vec<Q> {
    let d = delta(prec);
    let dn = qpow_sub(&d, n);
    vec![
        d.clone(),
        mul(&mul(&d, &d), &d),
        mul(&mul(&mul(&d, &d), &mul(&d, &d)), &d),
        dn.clone(),
        mul(&mul(&d, &d), &dn),
    ]
}

fn c2_witnesses() -> (bool, String) {
    let prec = 1500;
    let forms = witness_forms(3, prec);
    let d = delta(prec);
    let dn = qpow_sub(&d, 3);
    let zero = |p: usize| vec![false; p];
    // Table entries: 0, Δ̄ or Δ̄(q³).
    let table: [[u8; 4]; 5] = [
        [0, 0, 0, 0],
        [0, 0, 1, 0],
        [1, 0, 0, 1],
        [0, 0, 0, 0],
        [1, 2, 0, 0],
    ];
    let mut ok = true;
    for (f, row) in forms.iter().zip(table) {
        for (&ell, want) in [5usize, 7, 11, 13].iter().zip(row) {
            let got = t_ell(ell, f);
            let p = got.len();
            let expect = match want {
                0 => zero(p),
                1 => truncated(&d, p),
                _ => truncated(&dn, p),
            };
            ok &= got == expect;
            let lib = heckeq::apply_tell(ell as u64, &to_lib(f)).unwrap();
            ok &= lib == to_lib(&got);
        }
    }
    // Level 5: three witnesses, four operators, rank 4.
    let forms5 = witness_forms(5, prec);
    let picked = [&forms5[1], &forms5[2], &forms5[4]];
    let rows: Vec<Q> = [3usize, 7, 11, 13]
        .iter()
        .map(|&ell| picked.iter().flat_map(|f| t_ell(ell, f)).collect())
        .collect();
    let r = rank(rows);
    ok &= r == 4;
    let (h, hd) = suite_ok(Suite::Tables, &["witness."]);
    (ok && h, format!("level-5 certificate rank {r}; {hd}"))
}

const COMPANIONS: [(u32, &str, usize, &str); 6] = [
    (3, "U3", 3, "X^3 + yX^2 + (y^2 + y)X + y^3 + y"),
    (3, "T7", 7, "X^8 + (y^2 + y)(X^4 + X^3) + (y^4 + y^3 + y^2 + y)(X^2 + X) + y^8"),
    (
        3,
        "T13",
        13,
        "X^14 + y^2X^12 + y^4X^10 + y^6X^8 + (y^8 + y^4 + y^2)X^6 + (y^10 + y^6 + y^2)X^4 + (y^12 + y^6 + y^4 + y^2 + y)X^2 + (y^2 + y)X + y^14",
    ),
    (5, "U5", 5, "X^5 + yX^4 + (y^2 + y)X^3 + (y^3 + y)X^2 + (y^4 + y^3 + y^2 + y)X + y^5 + y"),
    (5, "T7", 7, "X^8 + (y^2 + y)X^6 + (y^2 + y)X^5 + (y^6 + y^5 + y^2 + y)(X^2 + X) + y^8"),
    (
        5,
        "T11",
        11,
        "X^12 + y^2X^8 + (y^4 + y^2)X^6 + y^6X^4 + (y^8 + y^6 + y^2 + y)X^2 + (y^2 + y)X + y^12",
    ),
];

/// s_n = Σ a_j(f) s_{n-j} checked on q-expansions to precision 64, which
/// determines polynomials in f of degree < 64.
fn recurrence_holds(level: u32, op: &str, ell: usize, c: &CompanionPoly, n_max: usize) -> bool {
    let p = 64;
    let f = f_gen(level as u64, p * ell);
    let apply = |g: &Q| {
        if op.starts_with('U') {
            u_m(ell, g)
        } else {
            t_ell(ell, g)
        }
    };
    let fp = truncated(&f, p);
    let mut pow = from_exps(&[0], p * ell);
    let mut seq = Vec::new();
    for _ in 0..=n_max {
        seq.push(truncated(&apply(&pow), p));
        pow = mul(&pow, &f);
    }
    let eval = |a: &hecke_f2::F2Poly| {
        let mut acc = vec![false; p];
        for e in a.exponents() {
            let mut m = from_exps(&[0], p);
            for _ in 0..e {
                m = mul(&m, &fp);
            }
            acc = add(&acc, &m);
        }
        acc
    };
    let coeffs: Vec<Q> = c.coeffs().iter().map(eval).collect();
    (c.order()..=n_max).all(|n| {
        let mut rhs = vec![false; p];
        for (j, a) in coeffs.iter().enumerate() {
            rhs = add(&rhs, &mul(a, &seq[n - j - 1]));
        }
        rhs == seq[n]
    })
}

fn c3_companions() -> (bool, String) {
    let mut ok = true;
    let mut notes = Vec::new();
    for (level, op, ell, text) in COMPANIONS {
        let reference: CompanionPoly = text.parse().unwrap();
        let spec: OpSpec = heckeq::parse_op(op, level).unwrap();
        let gen = GeneratorId::for_level(level).unwrap();
        let derived = hecke_f2::recur::derive_companion_default(&spec, &gen).unwrap();
        let rec = recurrence_holds(level, op, ell, &reference, 40);
        ok &= derived == reference && rec;
        if derived != reference || !rec {
            notes.push(format!("{level}/{op}"));
        }
    }
    // Mutated a_4 of the level-3 T7 companion.
    let good: CompanionPoly = COMPANIONS[1].3.parse().unwrap();
    let mut coeffs = good.coeffs().to_vec();
    coeffs[3] = coeffs[3].add(&hecke_f2::F2Poly::monomial(1));
    let bad = CompanionPoly::new(coeffs);
    let rejected = !recurrence_holds(3, "T7", 7, &bad, 40);
    ok &= rejected;
    let (h, hd) = suite_ok(Suite::Recurrences, &["companion."]);
    (
        ok && h,
        format!("mismatched {notes:?}, mutation rejected: {rejected}; {hd}"),
    )
}

fn c4_series() -> (bool, String) {
    let f_terms = [
        (1, 1),
        (3, 1),
        (1, 5),
        (7, 1),
        (5, 3),
        (3, 5),
        (9, 1),
        (5, 5),
        (3, 7),
        (1, 9),
    ];
    let g_terms = [(1, 1), (0, 2), (1, 3), (2, 2), (3, 1), (3, 3), (2, 4)];
    let mut ok = true;
    let mut notes = Vec::new();
    let cases: [(SeriesName, usize, &[(usize, usize)]); 2] =
        [(SeriesName::F, 12, &f_terms), (SeriesName::G, 8, &g_terms)];
    for (name, degree, reference) in cases {
        let (s, _) = series_at(name, degree);
        for a in 0..degree {
            for b in 0..degree - a {
                let in_region = match name {
                    SeriesName::F => a + b < 12,
                    _ => a < 4,
                };
                if in_region && s.coeff(a, b) != reference.contains(&(a, b)) {
                    ok = false;
                    notes.push(format!("{name} ({a},{b})"));
                }
            }
        }
        ok &= s.monomials().iter().all(|&(a, b)| match name {
            SeriesName::F => a % 2 == 1 && b % 2 == 1,
            _ => (a + b) % 2 == 0,
        });
    }
    ok &= !series_at(SeriesName::F, 12).0.coeff(5, 1);
    let (h, hd) = suite_ok(Suite::Series, &["series."]);
    (ok && h, format!("differences {notes:?}; {hd}"))
}

fn series_at(name: SeriesName, degree: usize) -> (BiSeries, usize) {
    let (t, x, y) = name.operators();
    let level = name.level();
    let mut bound = 160;
    loop {
        let ctx = hecke_f2::spaces::HeckeContext::new(level, bound).unwrap();
        let space = name.space(&ctx).unwrap();
        let op = |l| OperatorExpr::t(l, level).unwrap();
        match express_in_generators(&ctx, &op(t), &op(x), &op(y), &space, degree) {
            Ok(s) => return (s, bound),
            Err(_) if bound < 1000 => bound *= 2,
            Err(e) => panic!("{name}: {e}"),
        }
    }
}

/// Classes as (i mod 8, sign) with componentwise multiplication.
fn tangent_oracle(kind: usize, r: u64) -> usize {
    let classes: Vec<(u64, bool)> = [1u64, 3, 5, 7]
        .iter()
        .flat_map(|&i| [(i, true), (i, false)])
        .collect();
    let idx = |g: (u64, bool)| classes.iter().position(|&c| c == g).unwrap();
    let m = |a: (u64, bool), b: (u64, bool)| (a.0 * b.0 % 8, a.1 == b.1);
    let ibar = [(1, true), (1, false)];
    let mut dbar: Vec<(u64, bool)> = ibar.to_vec();
    for i in ibar {
        let d = m(i, (r, true));
        if !dbar.contains(&d) {
            dbar.push(d);
        }
    }
    let c = (7, true);
    let mut eqs: Vec<Vec<usize>> = vec![vec![idx((1, true))], vec![idx(c)]];
    let shape = |eqs: &mut Vec<Vec<usize>>| {
        for &d in &dbar {
            for &i in &ibar {
                eqs.push(vec![idx(m(d, i)), idx(d)]);
            }
        }
    };
    let four = |eqs: &mut Vec<Vec<usize>>| {
        for &g in &classes {
            for &d in &dbar {
                for &i in &ibar {
                    eqs.push(vec![idx(g), idx(m(g, i)), idx(m(d, g)), idx(m(m(d, g), i))]);
                }
            }
        }
    };
    match kind {
        1 => shape(&mut eqs),
        2 => {
            for &d in &dbar {
                eqs.push(vec![idx(d)]);
            }
            four(&mut eqs);
        }
        3 => {
            for &i in &ibar {
                eqs.push(vec![idx(i)]);
            }
            shape(&mut eqs);
            four(&mut eqs);
        }
        _ => {}
    }
    let count = (0..256u32)
        .filter(|b| {
            eqs.iter()
                .all(|e| e.iter().filter(|&&k| b >> k & 1 == 1).count() % 2 == 0)
        })
        .count();
    count.trailing_zeros() as usize
}

fn c5_tangent() -> (bool, String) {
    let table = [[6, 6, 6, 6], [5, 4, 4, 4], [5, 2, 2, 3], [5, 3, 3, 3]];
    let mut ok = true;
    for (k, (kind, row)) in TangentSystem::ALL.iter().zip(table).enumerate() {
        for (r, want) in [1u8, 3, 5, 7].into_iter().zip(row) {
            let lib = constraint_system(*kind, r).unwrap().nullity();
            ok &= lib == want && tangent_oracle(k, r as u64) == want;
        }
    }
    let (h, hd) = suite_ok(Suite::Tangent, &["tangent."]);
    (ok && h, hd)
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn modpow(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

/// (q mod 8, N a square mod q) by Euler's criterion.
fn class_oracle(q: u64, n: u64) -> String {
    let plus = modpow(n, (q - 1) / 2, q) == 1;
    format!("g{}{}", q % 8, if plus { '+' } else { '-' })
}

fn c6_galois() -> (bool, String) {
    let rows: [(u32, &[u64], &str); 16] = [
        (3, &[73], "g1+"),
        (3, &[17], "g1-"),
        (3, &[11], "g3+"),
        (3, &[19], "g3-"),
        (3, &[23], "g7+"),
        (3, &[7], "g7-"),
        (3, &[13], "g5+"),
        (3, &[5], "g5-"),
        (5, &[41, 89], "g1+"),
        (5, &[17, 73], "g1-"),
        (5, &[61, 29], "g5+"),
        (5, &[13, 37], "g5-"),
        (5, &[31, 79], "g7+"),
        (5, &[7, 23], "g7-"),
        (5, &[11, 19], "g3+"),
        (5, &[3, 67], "g3-"),
    ];
    let mut ok = true;
    for (n, qs, label) in rows {
        for &q in qs {
            ok &= frattini_class(q, n).unwrap().to_string() == label;
            ok &= class_oracle(q, n as u64) == label;
        }
    }
    let mut checked = 0;
    for n in [3u64, 5] {
        let mut by_residue = std::collections::HashMap::new();
        for q in (3..1000).filter(|&q| is_prime(q) && q % n != 0) {
            let c: FrattiniClass = frattini_class(q, n as u32).unwrap();
            ok &= c.to_string() == class_oracle(q, n);
            ok &= *by_residue.entry(q % (8 * n)).or_insert(c) == c;
            checked += 1;
        }
    }
    let (h, hd) = suite_ok(Suite::Tables, &["galois."]);
    (ok && h, format!("{checked} primes; {hd}"))
}

fn c7_identities() -> (bool, String) {
    // θ keeps odd coefficients; V₂U₂ keeps even ones.
    let mut ok = true;
    let mut state = 0x2545_f491_4f6c_dd1du64;
    for _ in 0..100 {
        let f: Q = (0..300)
            .map(|_| {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                state & 1 == 1
            })
            .collect();
        let odd: Q = f
            .iter()
            .enumerate()
            .map(|(i, &b)| b && i % 2 == 1)
            .collect();
        let u2 = u_m(2, &f);
        let even: Q = (0..f.len()).map(|i| i % 2 == 0 && u2[i / 2]).collect();
        ok &= add(&f, &even) == odd;
        let lf = to_lib(&f);
        ok &= heckeq::theta(&lf) == to_lib(&odd);
        let lib_even = heckeq::v2(&heckeq::apply_u(2, &lf).unwrap());
        ok &= lf.add(&lib_even.truncate(lf.prec())) == to_lib(&odd);
    }
    let (h, hd) = suite_ok(
        Suite::Relations,
        &["identities.", "relations.", "frobenius."],
    );
    (ok && h, hd)
}

fn c8_structure() -> (bool, String) {
    let (h, hd) = suite_ok(Suite::Series, &["pairing.", "hilbert-samuel."]);
    // Hilbert–Samuel of K(3)^new at the stable bound, rechecked here.
    let ctx = hecke_f2::spaces::HeckeContext::new(3, 328).unwrap();
    let id = hecke_f2::BitMatrix::identity(328);
    let gens = [
        ctx.u().unwrap().add(&id),
        ctx.t(7).unwrap().clone(),
        ctx.t(13).unwrap().clone(),
    ];
    let space = hecke_f2::spaces::new_space(&ctx).unwrap();
    let hs = hecke_f2::structure::hilbert_samuel_matrices(&space, &gens, 7);
    let inc: Vec<usize> = hs.windows(2).map(|w| w[1] - w[0]).collect();
    let ok = hs.windows(2).all(|w| w[0] <= w[1])
        && (3..=6).all(|k| inc[k - 1] >= 2)
        && (2..=5).all(|k| inc[k - 1] <= inc[k]);
    (ok && h, format!("h = {hs:?}; {hd}"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> (bool, String)); 8] = [
        ("1 generator expansions", c1_generators),
        ("2 witness tables", c2_witnesses),
        ("3 companion polynomials", c3_companions),
        ("4 series extraction", c4_series),
        ("5 tangent tables", c5_tangent),
        ("6 Galois classes", c6_galois),
        ("7 operator identities", c7_identities),
        ("8 structure signatures", c8_structure),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let t0 = std::time::Instant::now();
        let (ok, detail) = check();
        println!(
            "{} criterion {name}: {detail} ({:.1}s)",
            if ok { "PASS" } else { "FAIL" },
            t0.elapsed().as_secs_f64()
        );
        failed += !ok as usize;
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
