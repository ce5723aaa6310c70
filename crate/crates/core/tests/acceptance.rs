//! Exit criteria. Runs every criterion, prints one line each, and exits
//! non-zero if any fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use hopfbrace_core::brace::*;
use hopfbrace_core::lsa::*;
use hopfbrace_core::matched::*;
use hopfbrace_core::scalars::binomial;
use hopfbrace_core::skew::*;
use hopfbrace_core::yang_baxter::*;
use hopfbrace_core::{AxiomReport, FieldSpec, HopfAlgebraData, LinMap};
use num_bigint::{BigInt, BigUint};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn gf(p: u64) -> FieldSpec {
    FieldSpec::prime(p).unwrap()
}

fn fields() -> [FieldSpec; 2] {
    [FieldSpec::Rationals, gf(3)]
}

/// Trivial braces on C2, C3, C6, S3 and the semidirect brace on C3 ⋊ C2.
fn corpus() -> Vec<(String, HopfBraceData)> {
    let mut out = Vec::new();
    for field in fields() {
        let skews = [
            ("C2", SkewBrace::trivial(&cyclic_group(2))),
            ("C3", SkewBrace::trivial(&cyclic_group(3))),
            ("C6", SkewBrace::trivial(&cyclic_group(6))),
            ("S3", SkewBrace::trivial(&symmetric_group3())),
            ("C3:C2", flagship_skew_brace()),
        ];
        for (name, sb) in skews {
            out.push((format!("{name}/{field}"), group_algebra_brace(&sb, field).unwrap()));
        }
    }
    out
}

fn first_failure(name: &str, r: &AxiomReport) -> String {
    format!("{name}: {}", r.summary())
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    let corpus = corpus();
    for (name, b) in &corpus {
        let mut r = b.audit();
        r.merge(check_truco(b));
        r.merge(check_remark_identities(b));
        r.merge(check_module_algebra(b));
        match check_action_antipode(b) {
            Ok(x) => r.merge(x),
            Err(e) => r.fail_simple("action antipode", format!("{e}")),
        }
        if !r.passed() {
            failures.push(first_failure(name, &r));
        }
    }
    let elapsed = start.elapsed();
    let pass = failures.is_empty() && elapsed < Duration::from_secs(10);
    outcome(pass, format!("{} braces, {} failing, {:.2?} (limit 10s) {}", corpus.len(), failures.len(), elapsed, failures.join("; ")))
}

fn criterion_2() -> Outcome {
    let mut failures = Vec::new();
    let mut slowest = Duration::ZERO;
    for (name, b) in corpus() {
        let start = Instant::now();
        let v = match b.clone().verify() {
            Ok(v) => v,
            Err(e) => {
                failures.push(format!("{name}: {e}"));
                continue;
            }
        };
        let mut r = AxiomReport::new();
        match yb_operator_c(&v) {
            Ok(op) => r.merge(op.report),
            Err(e) => r.fail_simple("c invertible", format!("{e}")),
        }
        for n in [2, 3] {
            match check_intertwine(&b, n) {
                Ok(x) => r.merge_prefixed(&format!("n={n}"), x),
                Err(e) => r.fail_simple("intertwine", format!("{e}")),
            }
        }
        let elapsed = start.elapsed();
        if b.dim() == 6 {
            slowest = slowest.max(elapsed);
        }
        if !r.passed() {
            failures.push(first_failure(&name, &r));
        }
    }
    let pass = failures.is_empty() && slowest < Duration::from_secs(10);
    outcome(pass, format!("slowest order-6 check {slowest:.2?} (limit 10s); {} failing {}", failures.len(), failures.join("; ")))
}

fn group_hopf(g: &FiniteGroup, field: FieldSpec) -> HopfAlgebraData {
    let labels = (0..g.order()).map(|i| format!("g{i}")).collect();
    HopfAlgebraData::group_algebra(field, g.table(), g.identity(), g.inverses(), labels).unwrap()
}

fn klein() -> FiniteGroup {
    cyclic_group(2).direct_product(&cyclic_group(2))
}

/// A smash product `H # C_m` with a random `C_m -> Aut(H)`.
fn random_smash(rng: &mut StdRng) -> (String, HopfBraceData) {
    let hs = [("C2", cyclic_group(2)), ("C3", cyclic_group(3)), ("C4", cyclic_group(4)), ("V4", klein()), ("S3", symmetric_group3())];
    let (hname, h) = &hs[rng.gen_range(0..hs.len())];
    let m = [2usize, 3, 4][rng.gen_range(0..3)];
    let field = [FieldSpec::Rationals, gf(3), gf(5)][rng.gen_range(0..3)];
    let compose = |p: &[usize], q: &[usize]| -> Vec<usize> { q.iter().map(|&i| p[i]).collect() };
    let admissible: Vec<Vec<usize>> = h
        .automorphisms()
        .into_iter()
        .filter(|phi| {
            let id: Vec<usize> = (0..h.order()).collect();
            let pow = (0..m).fold(id.clone(), |acc, _| compose(phi, &acc));
            pow == id
        })
        .collect();
    let phi = admissible[rng.gen_range(0..admissible.len())].clone();
    let k = cyclic_group(m);
    let mut act = LinMap::zero(field, &[m, h.order()], &[h.order()]);
    let id: Vec<usize> = (0..h.order()).collect();
    let mut power = id;
    for i in 0..m {
        for x in 0..h.order() {
            act.add(&[power[x]], &[i, x], field.one()).unwrap();
        }
        power = compose(&phi, &power);
    }
    let hv = group_hopf(h, field).verify().unwrap();
    let kv = group_hopf(&k, field).verify().unwrap();
    let b = smash_product_brace(&hv, &kv, &act).unwrap();
    (format!("{hname}#C{m} phi={phi:?} over {field}"), b)
}

fn criterion_3() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eedc2);
    let mut cases = corpus();
    for _ in 0..24 {
        cases.push(random_smash(&mut rng));
    }
    let mut failures = Vec::new();
    let (mut trues, mut falses) = (0, 0);
    for (name, b) in &cases {
        match check_c2(b) {
            Ok(r) => {
                let agree = r.c2_id == r.commutative;
                let witnessed = r.c2_id || !r.witnesses.is_empty();
                if r.c2_id {
                    trues += 1;
                } else {
                    falses += 1;
                }
                if !agree || !witnessed {
                    failures.push(format!("{name}: c2_id={} commutative={}", r.c2_id, r.commutative));
                }
            }
            Err(e) => failures.push(format!("{name}: {e}")),
        }
    }
    let pass = failures.is_empty();
    outcome(pass, format!("{} braces ({} corpus + 24 smash), {trues} with c^2 = id, {falses} without; {} disagreements {}", cases.len(), cases.len() - 24, failures.len(), failures.join("; ")))
}

fn record(b: &HopfBraceData) -> String {
    let maps = [&b.comul, &b.counit, &b.dot.mul, &b.dot.unit, &b.dot.antipode, &b.circ.mul, &b.circ.unit, &b.circ.antipode];
    let mut out = String::new();
    for m in maps {
        for (o, i, c) in m.entries() {
            out.push_str(&format!("{o:?}{i:?}{};", c.encode()));
        }
        out.push('|');
    }
    out
}

fn criterion_4() -> Outcome {
    let mut failures = Vec::new();
    let two = |f: FieldSpec| f.from_i64(2);
    for (name, b) in corpus() {
        let v = b.clone().verify().unwrap();
        let c = cocycle_from_brace(&v);
        match brace_from_cocycle(&c) {
            Ok(back) if record(&back) == record(&b) && back == b => {}
            Ok(_) => failures.push(format!("{name}: cocycle round trip differs")),
            Err(e) => failures.push(format!("{name}: {e}")),
        }
        match matched_from_brace(&v).and_then(|mp| brace_from_matched(&mp)) {
            Ok(back) if record(&back) == record(&b) && back == b => {}
            Ok(_) => failures.push(format!("{name}: matched round trip differs")),
            Err(e) => failures.push(format!("{name}: {e}")),
        }
        let mut bad = c.clone();
        bad.pi = bad.pi.scale(&two(b.field()));
        match brace_from_cocycle(&bad) {
            Err(hopfbrace_core::Error::CocycleInvalid(r)) if !r.failures.is_empty() => {}
            _ => failures.push(format!("{name}: scaled cocycle accepted")),
        }
        let mut mp = matched_from_brace(&v).unwrap();
        mp.left = mp.left.scale(&two(b.field()));
        match brace_from_matched(&mp) {
            Err(hopfbrace_core::Error::MatchedInvalid(r)) if !r.failures.is_empty() => {}
            _ => failures.push(format!("{name}: scaled left action accepted")),
        }
    }
    outcome(failures.is_empty(), format!("10 braces x 2 routes, faults rejected; {} failing {}", failures.len(), failures.join("; ")))
}

fn criterion_5() -> Outcome {
    let mut failures = Vec::new();
    for (name, b) in corpus() {
        let cb = dual_cobrace(&b);
        let r = check_cobrace(&cb);
        if !r.passed() {
            failures.push(first_failure(&name, &r));
        }
        if dual_brace(&cb) != b {
            failures.push(format!("{name}: double dual differs"));
        }
    }
    outcome(failures.is_empty(), format!("{} failing {}", failures.len(), failures.join("; ")))
}

fn stirling2(n: u32, k: u32) -> BigInt {
    let mut acc = BigInt::from(0);
    for i in 0..=k {
        let term = binomial(k as i64, i as i64) * BigInt::from(k - i).pow(n);
        if i % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc / (1..=k).map(BigInt::from).product::<BigInt>()
}

fn criterion_6() -> Outcome {
    let t = tau(20);
    let mut bad = Vec::new();
    for n in 1..=20usize {
        let two = (BigUint::from(1u32) << (n - 1)) - BigUint::from(1u32);
        if t.get(n, 1) != BigUint::from(1u32) || t.get(n, n) != BigUint::from(1u32) || t.get(n, 2) != two {
            bad.push(format!("n={n} endpoints or second column"));
        }
        if n <= 15 {
            for j in 1..=n {
                if BigInt::from(t.get(n, j)) != stirling2(n as u32, j as u32) {
                    bad.push(format!("n={n} j={j} differs from S(n,j)"));
                }
            }
        }
    }
    outcome(bad.is_empty(), format!("n <= 20 endpoints, n <= 15 against S(n,j); {} mismatches {}", bad.len(), bad.join("; ")))
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let q = FieldSpec::Rationals;
    let alphas = [q.from_i64(0), q.from_i64(1), q.from_i64(2), q.fraction(&1.into(), &2.into()).unwrap()];
    let mut compared = 0;
    let mut bad = Vec::new();
    for alpha in &alphas {
        match two_dim_oracle(alpha, 8) {
            Ok(r) => {
                compared += r.comparisons.len();
                for d in r.discrepancies() {
                    bad.push(format!("alpha={alpha} {}: {} vs {}", d.input, d.engine, d.closed_form));
                }
            }
            Err(e) => bad.push(format!("alpha={alpha}: {e}")),
        }
    }
    let elapsed = start.elapsed();
    let pass = bad.is_empty() && compared == 4 * 45 && elapsed < Duration::from_secs(5);
    outcome(pass, format!("{compared} monomials, {} discrepancies, {elapsed:.2?} (limit 5s) {}", bad.len(), bad.join("; ")))
}

fn criterion_8() -> Outcome {
    let f = gf(3);
    let mut pass = true;
    let mut parts = Vec::new();
    for a in [1, 2] {
        let alpha = f.from_i64(a);
        match sl2_oracle(&alpha, 6) {
            Ok(r) => {
                let audits: Vec<String> = r
                    .table_audits
                    .iter()
                    .map(|(n, rep)| format!("{n} table {}", if rep.passed() { "left-symmetric".into() } else { format!("not left-symmetric ({} witnesses)", rep.failures.len()) }))
                    .collect();
                let mut line = format!("alpha={a}: {}", audits.join(", "));
                match &r.interpretation {
                    None => {
                        pass = false;
                        line.push_str("; no interpretation to extend");
                    }
                    Some(i) => {
                        let counts: Vec<String> = r.per_formula().iter().map(|(n, total, bad)| format!("{n} {}/{total}", total - bad)).collect();
                        line.push_str(&format!("; using {i}: agreeing {}", counts.join(", ")));
                        if let Some(d) = r.discrepancies().first() {
                            pass = false;
                            line.push_str(&format!("; first discrepancy {} at {}: engine {} vs closed form {}", d.formula, d.input, d.engine, d.closed_form));
                        }
                    }
                }
                parts.push(line);
            }
            Err(e) => {
                pass = false;
                parts.push(format!("alpha={a}: {e}"));
            }
        }
    }
    outcome(pass, parts.join(" | "))
}

fn criterion_9() -> Outcome {
    let q = FieldSpec::Rationals;
    let f3 = gf(3);
    let half = q.fraction(&1.into(), &2.into()).unwrap();
    let mut instances: Vec<(String, Result<CocycleMap, String>)> = Vec::new();
    let build = |v: &LeftSymmetricAlgebra, names: &[&str]| extend_lsa(v, names, 6).map_err(|e| format!("{e}"));
    instances.push(("abelian dim 2".into(), build(&LeftSymmetricAlgebra::zero(q, 2), &["x", "y"])));
    instances.push(("abelian dim 3".into(), build(&LeftSymmetricAlgebra::zero(q, 3), &["x", "y", "z"])));
    for alpha in [q.from_i64(0), q.from_i64(1), q.from_i64(2), half] {
        instances.push((format!("two-dim alpha={alpha}"), build(&two_dim_lsa(&alpha), &["x", "y"])));
    }
    for a in [1, 2] {
        let alpha = f3.from_i64(a);
        let tables = [Sl2Table::Corrected, Sl2Table::Literal]
            .into_iter()
            .map(|t| sl2_char3_lsa(&alpha, t).unwrap())
            .find(|v| check_lsa(v).passed());
        let built = match tables {
            Some(v) => build(&v, &["x", "y", "z"]),
            None => Err(String::from("no left-symmetric table")),
        };
        instances.push((format!("sl2 alpha={a}"), built));
    }
    let mut bad = Vec::new();
    let mut triples = 0usize;
    for (name, cm) in &instances {
        match cm {
            Err(e) => bad.push(format!("{name}: {e}")),
            Ok(cm) => {
                let r = audit_cocycle_map(cm);
                if !r.passed() {
                    bad.push(first_failure(name, &r));
                }
                let t = brace_on_truncation(cm);
                triples += t.checked;
                if !t.report.passed() {
                    bad.push(first_failure(name, &t.report));
                }
            }
        }
    }
    outcome(bad.is_empty(), format!("{} instances at cap 6, {triples} in-cap triples; {} failing {}", instances.len(), bad.len(), bad.join("; ")))
}

fn criterion_10() -> Outcome {
    let start = Instant::now();
    let mut bad = Vec::new();
    let mut counts = Vec::new();
    for n in [2usize, 3, 4, 6] {
        let fast = match enumerate_skew_braces(n) {
            Ok(v) => v,
            Err(e) => {
                bad.push(format!("n={n}: {e}"));
                continue;
            }
        };
        let slow: BTreeSet<_> = enumerate_skew_braces_slow(n).unwrap().into_iter().collect();
        let fast_forms: BTreeSet<_> = fast.iter().map(canonical_form).collect();
        if fast_forms != slow || fast_forms.len() != fast.len() {
            bad.push(format!("n={n}: fast {} vs slow {}", fast.len(), slow.len()));
        }
        if n <= 3 && fast.len() != 1 {
            bad.push(format!("n={n}: expected exactly one brace, found {}", fast.len()));
        }
        for sb in &fast {
            let ladder = (|| -> Result<bool, String> {
                if !check_skew_brace(sb).passed() {
                    return Ok(false);
                }
                let b = group_algebra_brace(sb, FieldSpec::Rationals).map_err(|e| format!("{e}"))?;
                let v = b.verify().map_err(|e| format!("{e}"))?;
                let op = yb_operator_c(&v).map_err(|e| format!("{e}"))?;
                Ok(op.report.passed())
            })();
            if ladder != Ok(true) {
                bad.push(format!("n={n}: ladder failed {ladder:?}"));
            }
        }
        counts.push(format!("n={n}: {}", fast.len()));
    }
    let elapsed = start.elapsed();
    let pass = bad.is_empty() && elapsed < Duration::from_secs(60);
    outcome(pass, format!("{}; {elapsed:.2?} (limit 60s) {}", counts.join(", "), bad.join("; ")))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("corpus construction", criterion_1),
        ("Yang-Baxter operators", criterion_2),
        ("c^2 = id iff commutative", criterion_3),
        ("round trips", criterion_4),
        ("duality", criterion_5),
        ("tau table", criterion_6),
        ("two-dimensional closed form", criterion_7),
        ("sl2 characteristic-3 closed forms", criterion_8),
        ("in-cap cocycle condition and brace", criterion_9),
        ("enumeration consistency", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        if !o.pass {
            failed += 1;
        }
        println!("criterion {:>2} {:<36} {} {}", i + 1, name, if o.pass { "PASS" } else { "FAIL" }, o.detail);
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

