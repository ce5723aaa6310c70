//! One function per subcommand. Each returns a [`RunReport`] whose verdict
//! sets the exit code; a [`SchemaError`] means the input was unusable.

use std::fs;
use std::io::Read as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use hopfbrace_core::brace::*;
use hopfbrace_core::hopf::{check_hopf, dualize, is_cocommutative, is_commutative};
use hopfbrace_core::lsa::*;
use hopfbrace_core::matched::*;
use hopfbrace_core::skew::*;
use hopfbrace_core::yang_baxter::*;
use hopfbrace_core::{AxiomReport, Error, Failure, FieldSpec, HopfAlgebraData, LinMap};
use serde_json::json;

use crate::parallel;
use crate::report::{digest, RunReport};
use crate::schema::*;

/// Options shared by every command.
#[derive(Debug, Clone, Default)]
pub struct Globals {
    pub field: Option<FieldSpec>,
    pub out: Option<PathBuf>,
}

pub struct Input {
    pub text: String,
    pub digest: String,
}

/// Reads a file, or standard input for `-`.
pub fn read_input(path: &Path) -> SchemaResult<Input> {
    let mut bytes = Vec::new();
    let res = if path == Path::new("-") {
        std::io::stdin().read_to_end(&mut bytes).map(|_| ())
    } else {
        fs::read(path).map(|b| bytes = b)
    };
    res.map_err(|e| SchemaError(format!("cannot read {}: {e}", path.display())))?;
    let digest = digest(&bytes);
    let text = String::from_utf8(bytes).map_err(|_| SchemaError(format!("{} is not UTF-8", path.display())))?;
    Ok(Input { text, digest })
}

fn write_file(path: &Path, contents: &str) -> SchemaResult<()> {
    fs::write(path, contents).map_err(|e| SchemaError(format!("cannot write {}: {e}", path.display())))
}

/// Writes `artifact` to `--out`, or embeds it in the report.
fn emit_artifact(g: &Globals, report: &mut RunReport, key: &str, artifact: serde_json::Value) -> SchemaResult<()> {
    match &g.out {
        Some(p) => {
            write_file(p, &to_json(&artifact))?;
            report.detail("written", p.display().to_string());
        }
        None => report.detail(key, artifact),
    }
    Ok(())
}

fn timed(start: Instant, mut r: RunReport) -> RunReport {
    r.wall_time_ms = start.elapsed().as_millis() as u64;
    r
}

/// Turns an error that carries an audit into a failing audit line.
fn audit_error(report: &mut RunReport, name: &str, e: &Error) {
    match e {
        Error::AuditFailed(r)
        | Error::CocycleInvalid(r)
        | Error::MatchedInvalid(r)
        | Error::NotDerivation(r)
        | Error::NotModuleBialgebra(r)
        | Error::SkewBraceInvalid(r)
        | Error::HypothesisViolated { report: r, .. } => report.audit(name, r),
        other => report.check(name, false, other.to_string()),
    }
}

fn structure_details(report: &mut RunReport, field: FieldSpec, dim: usize, cocommutative: bool, commutative: bool) {
    report.detail("field", field.to_string());
    report.detail("dim", dim);
    report.detail("cocommutative", cocommutative);
    report.detail("commutative", commutative);
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Kind {
    Hopf,
    Brace,
    Cobrace,
    Matched,
    Skew,
    Lsa,
}

pub fn load_brace(text: &str, g: &Globals) -> SchemaResult<HopfBraceData> {
    from_json::<BraceJson>(text)?.decode(g.field)
}

/// Every brace audit; the action-antipode law is skipped off the
/// cocommutative case.
fn brace_audits(report: &mut RunReport, b: &HopfBraceData) {
    report.audit("hopf brace", &b.audit());
    report.audit("truco identities", &check_truco(b));
    report.audit("remark identities", &check_remark_identities(b));
    report.audit("module algebra", &check_module_algebra(b));
    match check_action_antipode(b) {
        Ok(r) => report.audit("action antipode", &r),
        Err(e) => report.detail("action antipode", format!("skipped: {e}")),
    }
}

fn lsa_audits(report: &mut RunReport, v: &LeftSymmetricAlgebra) {
    report.audit("left symmetry", &check_lsa(v));
    let lie = lie_from_lsa(v);
    report.audit("commutator Lie algebra", &check_lie(&lie));
    match check_lie_cocycle(&lsa_cocycle(v)) {
        Ok(r) => report.audit("lie 1-cocycle", &r),
        Err(e) => audit_error(report, "lie 1-cocycle", &e),
    }
    report.detail("field", v.field().to_string());
    report.detail("dim", v.dim());
    report.detail("lie_abelian", lie.is_abelian());
}

fn skew_audits(report: &mut RunReport, t: SkewTables) -> Option<SkewBrace> {
    report.check("dot is a group", t.dot.is_ok(), t.dot.as_ref().err().cloned().unwrap_or_default());
    report.check("circ is a group", t.circ.is_ok(), t.circ.as_ref().err().cloned().unwrap_or_default());
    let (Ok(dot), Ok(circ)) = (t.dot, t.circ) else { return None };
    let ident = dot.identity() == t.identity;
    report.check("declared identity", ident, format!("declared {}, table identity {}", t.identity, dot.identity()));
    let sb = SkewBrace { dot, circ };
    report.audit("skew brace", &check_skew_brace(&sb));
    report.detail("order", sb.order());
    report.detail("dot_abelian", sb.dot.is_abelian());
    Some(sb)
}

pub fn cmd_check(kind: Kind, path: &Path, g: &Globals) -> SchemaResult<RunReport> {
    let start = Instant::now();
    let input = read_input(path)?;
    let mut report = RunReport::new(format!("check {}", kind_name(kind)), Some(input.digest.clone()));
    match kind {
        Kind::Hopf => {
            let h = from_json::<HopfJson>(&input.text)?.decode(g.field)?;
            report.audit("hopf algebra", &check_hopf(&h));
            structure_details(&mut report, h.field(), h.dim(), is_cocommutative(&h), is_commutative(&h));
        }
        Kind::Brace => {
            let b = load_brace(&input.text, g)?;
            brace_audits(&mut report, &b);
            structure_details(&mut report, b.field(), b.dim(), b.is_cocommutative(), b.is_commutative());
        }
        Kind::Cobrace => {
            let cb = from_json::<CoBraceJson>(&input.text)?.decode(g.field)?;
            report.audit("hopf co-brace", &cb.audit());
            report.detail("field", cb.space.field.to_string());
            report.detail("dim", cb.space.dim());
        }
        Kind::Matched => {
            let mp = from_json::<MatchedJson>(&input.text)?.decode(g.field)?;
            report.audit("matched pair", &check_matched(&mp));
            report.detail("field", mp.circ_hopf.field().to_string());
            report.detail("dim", mp.circ_hopf.dim());
        }
        Kind::Skew => {
            let t = from_json::<SkewJson>(&input.text)?.decode()?;
            skew_audits(&mut report, t);
        }
        Kind::Lsa => {
            let v = from_json::<LsaJson>(&input.text)?.decode(g.field)?;
            lsa_audits(&mut report, &v);
        }
    }
    emit_report_file(g, &report)?;
    Ok(timed(start, report))
}

fn kind_name(k: Kind) -> &'static str {
    match k {
        Kind::Hopf => "hopf",
        Kind::Brace => "brace",
        Kind::Cobrace => "cobrace",
        Kind::Matched => "matched",
        Kind::Skew => "skew",
        Kind::Lsa => "lsa",
    }
}

/// For commands without an artifact, `--out` receives the JSON report.
fn emit_report_file(g: &Globals, report: &RunReport) -> SchemaResult<()> {
    match &g.out {
        Some(p) => write_file(p, &report.to_json()),
        None => Ok(()),
    }
}

pub fn cmd_yb(path: &Path, arity: usize, export_set: Option<&Path>, g: &Globals) -> SchemaResult<RunReport> {
    let start = Instant::now();
    if !(2..=3).contains(&arity) {
        return Err(SchemaError(format!("--braid-arity must be 2 or 3, got {arity}")));
    }
    let input = read_input(path)?;
    let mut report = RunReport::new("yb", Some(input.digest.clone()));
    let b = load_brace(&input.text, g)?;
    if !b.is_cocommutative() {
        report.check("cocommutative", false, Error::NotCocommutative.to_string());
        report.detail("error", "NotCocommutative");
        return Ok(timed(start, report));
    }
    let v = match b.clone().verify() {
        Ok(v) => v,
        Err(e) => {
            audit_error(&mut report, "hopf brace", &e);
            return Ok(timed(start, report));
        }
    };
    let op = match yb_operator_c(&v) {
        Ok(op) => op,
        Err(e) => {
            audit_error(&mut report, "yang-baxter operator", &e);
            return Ok(timed(start, report));
        }
    };
    report.audit("yang-baxter operator", &op.report);
    let braid_ok = !op.report.failed_axioms().contains(&"braid equation");
    let mut intertwine = serde_json::Map::new();
    for n in 2..=arity {
        let r = check_intertwine(&b, n).map_err(SchemaError::from)?;
        intertwine.insert(format!("n{n}"), json!(r.passed()));
        report.audit(&format!("intertwine n={n}"), &r);
    }
    let c2 = check_c2(&b).map_err(SchemaError::from)?;
    report.check("c^2 = id iff commutative", c2.c2_id == c2.commutative, format!("c2_id = {}, commutative = {}", c2.c2_id, c2.commutative));
    let witnesses: Vec<_> = c2.witnesses.iter().map(crate::report::FailureJson::from).collect();
    report.detail("braid_ok", braid_ok);
    report.detail("c2_id", c2.c2_id);
    report.detail("commutative", c2.commutative);
    report.detail("intertwine", intertwine);
    report.detail("witnesses", witnesses);
    if let Some(p) = export_set {
        match set_solution(&b) {
            Ok(s) => {
                report.audit("set solution", &s.check());
                write_file(p, &to_json(&SetSolutionJson::from(&s)))?;
                report.detail("set_solution", p.display().to_string());
            }
            Err(e) => audit_error(&mut report, "set solution", &e),
        }
    }
    emit_report_file(g, &report)?;
    Ok(timed(start, report))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Route {
    Cocycle,
    Matched,
}

/// Entry-by-entry differences between two records of the same shape.
fn diff_maps(r: &mut AxiomReport, name: &str, a: &LinMap, b: &LinMap) {
    let axiom = format!("records identical: {name}");
    if a.domain_dims() != b.domain_dims() || a.codomain_dims() != b.codomain_dims() {
        r.fail_simple(&axiom, format!("shape {:?}->{:?} vs {:?}->{:?}", a.domain_dims(), a.codomain_dims(), b.domain_dims(), b.codomain_dims()));
        return;
    }
    for f in a.differences(b, &axiom, hopfbrace_core::report::WITNESS_LIMIT) {
        r.fail(f);
    }
}

fn brace_maps(b: &HopfBraceData) -> [(&'static str, &LinMap); 8] {
    [
        ("comul", &b.comul),
        ("counit", &b.counit),
        ("dot.mul", &b.dot.mul),
        ("dot.unit", &b.dot.unit),
        ("dot.antipode", &b.dot.antipode),
        ("circ.mul", &b.circ.mul),
        ("circ.unit", &b.circ.unit),
        ("circ.antipode", &b.circ.antipode),
    ]
}

fn compare_braces(report: &mut RunReport, before: &HopfBraceData, after: &HopfBraceData) {
    let mut r = AxiomReport::new();
    r.record("records identical");
    for ((name, a), (_, b)) in brace_maps(before).into_iter().zip(brace_maps(after)) {
        diff_maps(&mut r, name, a, b);
    }
    if before.space != after.space {
        r.fail_simple("records identical: basis", String::from("basis labels differ"));
    }
    let same_bytes = to_json(&BraceJson::encode(before)) == to_json(&BraceJson::encode(after));
    if r.passed() && !same_bytes {
        r.fail_simple("records identical", String::from("serialized records differ"));
    }
    report.audit("round trip", &r);
}

pub fn cmd_roundtrip(route: Route, path: &Path, g: &Globals) -> SchemaResult<RunReport> {
    let start = Instant::now();
    let input = read_input(path)?;
    let name = match route {
        Route::Cocycle => "roundtrip cocycle",
        Route::Matched => "roundtrip matched",
    };
    let mut report = RunReport::new(name, Some(input.digest.clone()));
    // A matched route also accepts a matched-pair record.
    if route == Route::Matched {
        if let Ok(m) = from_json::<MatchedJson>(&input.text) {
            let mp = m.decode(g.field)?;
            report.detail("input_kind", "matched");
            match brace_from_matched(&mp).and_then(|b| {
                let v = b.verify()?;
                matched_from_brace(&v)
            }) {
                Ok(back) => {
                    let mut r = AxiomReport::new();
                    r.record("records identical");
                    diff_maps(&mut r, "circ.mul", &mp.circ_hopf.mul, &back.circ_hopf.mul);
                    diff_maps(&mut r, "left", &mp.left, &back.left);
                    diff_maps(&mut r, "right", &mp.right, &back.right);
                    report.audit("round trip", &r);
                }
                Err(e) => audit_error(&mut report, "matched pair", &e),
            }
            emit_report_file(g, &report)?;
            return Ok(timed(start, report));
        }
    }
    let b = load_brace(&input.text, g)?;
    report.detail("input_kind", "brace");
    let v = match b.clone().verify() {
        Ok(v) => v,
        Err(e) => {
            audit_error(&mut report, "hopf brace", &e);
            emit_report_file(g, &report)?;
            return Ok(timed(start, report));
        }
    };
    let back = match route {
        Route::Cocycle => {
            let c = cocycle_from_brace(&v);
            report.audit("bijective 1-cocycle", &check_cocycle(&c));
            brace_from_cocycle(&c)
        }
        Route::Matched => matched_from_brace(&v).and_then(|mp| {
            report.audit("matched pair", &check_matched(&mp));
            brace_from_matched(&mp)
        }),
    };
    match back {
        Ok(back) => compare_braces(&mut report, &b, &back),
        Err(e) => audit_error(&mut report, "reconstruction", &e),
    }
    emit_report_file(g, &report)?;
    Ok(timed(start, report))
}

/// `Cn`, `S3`, `Dm` (the `m`-gon), `Q8`, `V4`, and products such as `C2xC3`.
pub fn parse_group(spec: &str) -> SchemaResult<FiniteGroup> {
    let parts: Vec<&str> = spec.split('x').collect();
    let mut acc: Option<FiniteGroup> = None;
    for p in parts {
        let g = match p.trim() {
            "S3" => symmetric_group3(),
            "Q8" => quaternion_group(),
            "V4" => cyclic_group(2).direct_product(&cyclic_group(2)),
            t => {
                let size = |s: &str| s.parse::<usize>().ok().filter(|&k| (1..=64).contains(&k));
                match (t.strip_prefix('C').and_then(size), t.strip_prefix('D').and_then(size)) {
                    (Some(k), _) => cyclic_group(k),
                    (_, Some(m)) if m >= 2 => dihedral_group(m),
                    _ => return Err(SchemaError(format!("unknown group {t:?}; expected Cn, Dm, S3, Q8, V4 or a product"))),
                }
            }
        };
        acc = Some(match acc {
            None => g,
            Some(a) => a.direct_product(&g),
        });
    }
    acc.ok_or_else(|| SchemaError(String::from("empty group name")))
}

#[derive(Debug, Clone, PartialEq, Eq, clap::Subcommand)]
pub enum SkewCommand {
    /// All skew braces of one order, up to isomorphism.
    Enumerate {
        #[arg(long)]
        order: usize,
        /// Also run the brute-force path and compare (orders up to 6).
        #[arg(long)]
        cross_check: bool,
    },
    /// Group-algebra Hopf brace of a skew brace.
    Lift {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Semidirect skew brace `N ⋊ Q`.
    Semidirect {
        #[arg(long)]
        normal: String,
        #[arg(long)]
        quotient: String,
        /// JSON list with one permutation of `N` per element of `Q`.
        #[arg(long)]
        action: String,
    },
}

pub fn cmd_skew(sub: &SkewCommand, g: &Globals) -> SchemaResult<RunReport> {
    let start = Instant::now();
    match sub {
        SkewCommand::Enumerate { order, cross_check } => {
            let mut report = RunReport::new("skew enumerate", None);
            let workers = parallel::worker_count()?;
            let e = parallel::enumerate(*order, workers)?;
            let catalog = group_catalog(*order)?;
            let mut ok = AxiomReport::new();
            ok.record("enumerated tables are skew braces");
            for sb in &e.braces {
                for f in check_skew_brace(sb).failures {
                    ok.fail(f);
                }
            }
            report.audit("enumerated tables are skew braces", &ok);
            if *cross_check {
                let slow = enumerate_skew_braces_slow(*order)?;
                let fast: Vec<_> = e.braces.iter().map(canonical_form).collect();
                let (mut a, mut b) = (fast.clone(), slow.clone());
                a.sort();
                b.sort();
                report.check("fast and brute-force paths agree", a == b, format!("fast {} vs brute force {}", fast.len(), slow.len()));
            }
            let per_dot: serde_json::Map<_, _> = e.per_dot.iter().map(|(d, k)| (catalog[*d].0.clone(), json!(k))).collect();
            report.detail("order", order);
            report.detail("count", e.braces.len());
            report.detail("per_additive_group", per_dot);
            if let Some(dir) = &g.out {
                fs::create_dir_all(dir).map_err(|err| SchemaError(format!("cannot create {}: {err}", dir.display())))?;
                let mut files = Vec::new();
                for (i, sb) in e.braces.iter().enumerate() {
                    let name = format!("skew_{order}_{i:03}.json");
                    write_file(&dir.join(&name), &to_json(&SkewJson::encode(sb)))?;
                    files.push(name);
                }
                report.detail("files", files);
            }
            Ok(timed(start, report))
        }
        SkewCommand::Lift { input } => {
            let inp = read_input(input)?;
            let mut report = RunReport::new("skew lift", Some(inp.digest.clone()));
            let t = from_json::<SkewJson>(&inp.text)?.decode()?;
            let Some(sb) = skew_audits(&mut report, t) else { return Ok(timed(start, report)) };
            if !report.passed {
                return Ok(timed(start, report));
            }
            let field = g.field.unwrap_or(FieldSpec::Rationals);
            let b = group_algebra_brace(&sb, field)?;
            report.audit("hopf brace", &b.audit());
            report.detail("field", field.to_string());
            emit_artifact(g, &mut report, "brace", serde_json::to_value(BraceJson::encode(&b)).expect("json"))?;
            Ok(timed(start, report))
        }
        SkewCommand::Semidirect { normal, quotient, action } => {
            let mut report = RunReport::new("skew semidirect", None);
            let (n, q) = (parse_group(normal)?, parse_group(quotient)?);
            let action: Vec<Vec<usize>> = from_json(action)?;
            match semidirect_skew_brace(&n, &q, &action) {
                Ok(sb) => {
                    report.audit("skew brace", &check_skew_brace(&sb));
                    report.detail("order", sb.order());
                    emit_artifact(g, &mut report, "skew", serde_json::to_value(SkewJson::encode(&sb)).expect("json"))?;
                }
                Err(e) => audit_error(&mut report, "semidirect action", &e),
            }
            Ok(timed(start, report))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Example {
    TwoDim,
    Sl2Char3,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Table {
    Literal,
    Corrected,
}

#[derive(Debug, Clone, PartialEq, Eq, clap::Subcommand)]
pub enum LsaCommand {
    /// Left symmetry, the commutator Lie algebra and the identity 1-cocycle.
    Verify { path: PathBuf },
    /// Extends the 1-cocycle to the truncated enveloping algebra.
    Extend {
        /// LSA file; omit to use `--example`.
        path: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        #[arg(long, value_enum)]
        example: Option<Example>,
        #[arg(long)]
        alpha: Option<String>,
        /// Table variant for the characteristic-3 example.
        #[arg(long, value_enum)]
        table: Option<Table>,
    },
    /// Engine against the closed forms of a built-in example.
    Oracle {
        #[arg(value_enum)]
        example: Example,
        #[arg(long)]
        alpha: String,
        #[arg(long, default_value_t = 6)]
        cap: usize,
    },
}

fn parse_alpha(text: &str, field: FieldSpec) -> SchemaResult<hopfbrace_core::Scalar> {
    field.parse(text).map_err(|e| SchemaError(format!("--alpha: {e}")))
}

fn example_field(example: Example, g: &Globals) -> FieldSpec {
    match example {
        Example::TwoDim => g.field.unwrap_or(FieldSpec::Rationals),
        Example::Sl2Char3 => g.field.unwrap_or(FieldSpec::Prime(3)),
    }
}

fn example_lsa(example: Example, alpha: &str, table: Option<Table>, g: &Globals) -> SchemaResult<(LeftSymmetricAlgebra, Vec<String>)> {
    let alpha = parse_alpha(alpha, example_field(example, g))?;
    match example {
        Example::TwoDim => Ok((two_dim_lsa(&alpha), vec!["x".into(), "y".into()])),
        Example::Sl2Char3 => {
            let names = vec!["x".into(), "y".into(), "z".into()];
            let build = |t| sl2_char3_lsa(&alpha, t).map_err(SchemaError::from);
            let v = match table {
                Some(Table::Literal) => build(Sl2Table::Literal)?,
                Some(Table::Corrected) => build(Sl2Table::Corrected)?,
                None => {
                    let literal = build(Sl2Table::Literal)?;
                    let corrected = build(Sl2Table::Corrected)?;
                    if !check_lsa(&literal).passed() && check_lsa(&corrected).passed() {
                        corrected
                    } else {
                        literal
                    }
                }
            };
            Ok((v, names))
        }
    }
}

pub fn cmd_lsa(sub: &LsaCommand, g: &Globals) -> SchemaResult<RunReport> {
    let start = Instant::now();
    match sub {
        LsaCommand::Verify { path } => {
            let input = read_input(path)?;
            let mut report = RunReport::new("lsa verify", Some(input.digest.clone()));
            let v = from_json::<LsaJson>(&input.text)?.decode(g.field)?;
            lsa_audits(&mut report, &v);
            emit_report_file(g, &report)?;
            Ok(timed(start, report))
        }
        LsaCommand::Extend { path, cap, example, alpha, table } => {
            let (mut report, v, names) = match (path, example) {
                (Some(p), None) => {
                    let input = read_input(p)?;
                    let j = from_json::<LsaJson>(&input.text)?;
                    let v = j.decode(g.field)?;
                    (RunReport::new("lsa extend", Some(input.digest.clone())), v, j.names())
                }
                (None, Some(ex)) => {
                    let alpha = alpha.as_deref().ok_or_else(|| SchemaError(String::from("--example needs --alpha")))?;
                    let (v, names) = example_lsa(*ex, alpha, *table, g)?;
                    let mut r = RunReport::new("lsa extend", None);
                    r.detail("alpha", alpha);
                    (r, v, names)
                }
                _ => return Err(SchemaError(String::from("give exactly one of a file or --example"))),
            };
            report.detail("cap", cap);
            report.audit("left symmetry", &check_lsa(&v));
            let name_refs: Vec<&str> = names.iter().map(String::as_str).collect();
            match extend_lsa(&v, &name_refs, *cap) {
                Ok(cm) => {
                    report.audit("extended cocycle", &audit_cocycle_map(&cm));
                    let t = brace_on_truncation(&cm);
                    report.audit("truncated brace", &t.report);
                    report.detail("arena_dim", cm.source().dim());
                    report.detail("brace_triples_checked", t.checked);
                    report.detail("brace_triples_beyond_cap", t.skipped.to_string());
                    let values: Vec<_> = (0..cm.source().dim())
                        .map(|m| json!({"monomial": cm.source().label(m), "image": cm.target().format_element(cm.value(m))}))
                        .collect();
                    emit_artifact(g, &mut report, "values", json!(values))?;
                }
                Err(e) => audit_error(&mut report, "extended cocycle", &e),
            }
            Ok(timed(start, report))
        }
        LsaCommand::Oracle { example, alpha, cap } => {
            let field = example_field(*example, g);
            let a = parse_alpha(alpha, field)?;
            let name = match example {
                Example::TwoDim => "lsa oracle two-dim",
                Example::Sl2Char3 => "lsa oracle sl2-char3",
            };
            let mut report = RunReport::new(name, None);
            let r = match example {
                Example::TwoDim => two_dim_oracle(&a, *cap),
                Example::Sl2Char3 => sl2_oracle(&a, *cap),
            };
            let r = match r {
                Ok(r) => r,
                Err(e) => {
                    audit_error(&mut report, "oracle", &e);
                    return Ok(timed(start, report));
                }
            };
            report.detail("alpha", r.alpha.encode());
            report.detail("cap", r.cap);
            let tables: Vec<_> = r
                .table_audits
                .iter()
                .map(|(t, rep)| json!({"table": t, "left_symmetric": rep.passed(), "witnesses": rep.failures.iter().map(crate::report::FailureJson::from).collect::<Vec<_>>()}))
                .collect();
            report.detail("table_audits", tables);
            report.detail("interpretation", &r.interpretation);
            report.check("left-symmetric interpretation", r.interpretation.is_some(), "no table variant passes left symmetry");
            let per: Vec<_> = r.per_formula().into_iter().map(|(f, total, bad)| json!({"formula": f, "compared": total, "agree": total - bad})).collect();
            report.detail("per_formula", per);
            let mut agree = AxiomReport::new();
            agree.record("closed forms agree with the engine");
            for d in r.discrepancies() {
                agree.failures.push(Failure {
                    axiom: format!("{} at {}", d.formula, d.input),
                    input: vec![],
                    output: vec![],
                    lhs: d.engine.clone(),
                    rhs: d.closed_form.clone(),
                });
            }
            report.audit("closed forms", &agree);
            report.detail("agreements", r.agreements());
            emit_report_file(g, &report)?;
            Ok(timed(start, report))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum DualKind {
    Hopf,
    Brace,
    Cobrace,
}

pub fn cmd_dualize(kind: DualKind, path: &Path, g: &Globals) -> SchemaResult<RunReport> {
    let start = Instant::now();
    let input = read_input(path)?;
    let mut report = RunReport::new("dualize", Some(input.digest.clone()));
    let artifact = match kind {
        DualKind::Hopf => {
            let h: HopfAlgebraData = from_json::<HopfJson>(&input.text)?.decode(g.field)?;
            let d = dualize(&h);
            report.audit("dual hopf algebra", &check_hopf(&d));
            serde_json::to_value(HopfJson::encode(&d))
        }
        DualKind::Brace => {
            let b = load_brace(&input.text, g)?;
            let cb = dual_cobrace(&b);
            report.audit("dual co-brace", &cb.audit());
            serde_json::to_value(CoBraceJson::encode(&cb))
        }
        DualKind::Cobrace => {
            let cb = from_json::<CoBraceJson>(&input.text)?.decode(g.field)?;
            let b = dual_brace(&cb);
            report.audit("dual brace", &b.audit());
            serde_json::to_value(BraceJson::encode(&b))
        }
    }
    .expect("json");
    emit_artifact(g, &mut report, "dual", artifact)?;
    Ok(timed(start, report))
}
