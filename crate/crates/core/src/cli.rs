//! Command-line front end.
//!
//! Exit codes: 0 when the command succeeds and the checked property holds,
//! 1 when a checked property fails, 2 on usage or input errors.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::axioms::check_order;
use crate::error::{Error, Result};
use crate::extension::{linearize_with, pivot_extend_by_label, PivotPolicy};
use crate::io::{emit_matrix, read_relation, write_relation, Format};
use crate::oracle::{random_zadeh_order, GeneratorSpec};
use crate::preserve::{
    certifying_family, clamp_extend_by_label, verify_intersection, Certificate, ExtensionFamily,
};
use crate::relation::{extends, FuzzyRelation, Pair};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PROPERTY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

pub const MANIFEST_FILE: &str = "manifest.json";

#[derive(Debug, Parser)]
#[command(
    name = "fuzzy-linext",
    version,
    about = "Linear extensions of Zadeh fuzzy orders"
)]
pub struct Cli {
    /// Print a machine-readable JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Output matrix format; defaults to the input format.
    #[arg(long, global = true, value_enum)]
    pub format: Option<FormatArg>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum FormatArg {
    Csv,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum PolicyArg {
    Low,
    High,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the Zadeh order axioms and linearity.
    Check { file: PathBuf },
    /// Extend an order to a linear one by repeated pivoting.
    Linearize {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Include every raised entry of every pivot in the report.
        #[arg(long)]
        trace: bool,
        #[arg(long, value_enum, default_value = "low")]
        policy: PolicyArg,
    },
    /// Apply a single pivot placing `a` below `b`.
    Pivot {
        file: PathBuf,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Build a linear extension that keeps r(a, b) unchanged.
    Clamp {
        file: PathBuf,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Build the certifying family of linear extensions.
    Family {
        file: PathBuf,
        /// Directory that receives one matrix per member and a manifest.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check that a family's pointwise infimum equals the relation.
    Verify {
        file: PathBuf,
        #[arg(long)]
        family: PathBuf,
    },
    /// Generate a random Zadeh fuzzy order.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        density: f64,
        #[arg(long)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct TraceSummary {
    pub k: usize,
    pub m: usize,
    pub pivots: Vec<[String; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub steps: Option<Value>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct FamilySummary {
    pub members: usize,
    pub certificates: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub directory: Option<String>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Timing {
    pub elapsed_us: u128,
}

/// Everything a command reports. The text form is rendered from this, so the
/// JSON form carries every field the text shows.
#[derive(Clone, Debug, Default, Serialize)]
pub struct RunReport {
    pub command: Vec<String>,
    pub verdicts: BTreeMap<String, bool>,
    pub witnesses: BTreeMap<String, Value>,
    pub trace: Option<TraceSummary>,
    pub family: Option<FamilySummary>,
    pub timing: Timing,
    /// Result matrix when it is not written to a file.
    pub relation: Option<Value>,
    #[serde(skip)]
    pub matrix_text: Option<String>,
    #[serde(skip)]
    pub notes: Vec<String>,
}

#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub report: RunReport,
}

fn pair_labels(r: &FuzzyRelation, p: Pair) -> [String; 2] {
    [r.label(p.first).to_owned(), r.label(p.second).to_owned()]
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn relation_json(r: &FuzzyRelation) -> Value {
    json!({ "elements": r.labels(), "matrix": r.to_rows() })
}

struct Ctx<'a> {
    cli: &'a Cli,
    report: RunReport,
}

impl Ctx<'_> {
    fn output_format(&self, input: Format) -> Format {
        self.cli.format.map(Format::from).unwrap_or(input)
    }

    /// Writes `r` to `output`, or keeps it for stdout.
    fn emit(&mut self, r: &FuzzyRelation, output: Option<&Path>, input: Format) -> Result<()> {
        match output {
            Some(path) => {
                let format = self.cli.format.map(Format::from).unwrap_or_else(|| {
                    if path.extension().is_some() {
                        Format::from_path(path)
                    } else {
                        input
                    }
                });
                write_relation(path, r, format)?;
                self.report.notes.push(format!("wrote {}", path.display()));
            }
            None => {
                self.report.relation = Some(relation_json(r));
                self.report.matrix_text = Some(emit_matrix(r, self.output_format(input)));
            }
        }
        Ok(())
    }
}

/// Runs a parsed command line.
pub fn execute(cli: &Cli, argv: Vec<String>) -> Result<Outcome> {
    let start = Instant::now();
    let mut ctx = Ctx {
        cli,
        report: RunReport {
            command: argv,
            ..RunReport::default()
        },
    };
    let code = match &cli.command {
        Command::Check { file } => cmd_check(&mut ctx, file)?,
        Command::Linearize {
            file,
            output,
            trace,
            policy,
        } => cmd_linearize(&mut ctx, file, output.as_deref(), *trace, *policy)?,
        Command::Pivot { file, a, b, output } => {
            cmd_pivot(&mut ctx, file, a, b, output.as_deref())?
        }
        Command::Clamp { file, a, b, output } => {
            cmd_clamp(&mut ctx, file, a, b, output.as_deref())?
        }
        Command::Family { file, output } => cmd_family(&mut ctx, file, output.as_deref())?,
        Command::Verify { file, family } => cmd_verify(&mut ctx, file, family)?,
        Command::Gen {
            n,
            density,
            seed,
            output,
        } => {
            let r = random_zadeh_order(&GeneratorSpec::new(*n, *density, *seed))?;
            ctx.emit(&r, output.as_deref(), Format::Csv)?;
            EXIT_OK
        }
    };
    ctx.report.timing.elapsed_us = start.elapsed().as_micros();
    Ok(Outcome {
        code,
        report: ctx.report,
    })
}

fn cmd_check(ctx: &mut Ctx, file: &Path) -> Result<i32> {
    let (r, _) = read_relation(file)?;
    let report = check_order(&r);
    let incomparable = r.incomparable_pairs();
    let linear = incomparable.is_empty();
    let rep = &mut ctx.report;
    rep.verdicts.insert("order".into(), report.is_order());
    rep.verdicts.insert("reflexive".into(), report.reflexive());
    rep.verdicts
        .insert("antisymmetric".into(), report.antisymmetric());
    rep.verdicts
        .insert("transitive".into(), report.transitive());
    rep.verdicts.insert("linear".into(), linear);

    let refl: Vec<Value> = report
        .reflexivity
        .iter()
        .map(|w| json!({ "element": r.label(w.element), "value": w.value }))
        .collect();
    let anti: Vec<Value> = report
        .antisymmetry
        .iter()
        .map(|w| json!({ "pair": pair_labels(&r, w.pair), "forward": w.forward, "backward": w.backward }))
        .collect();
    let trans: Vec<Value> = report
        .transitivity
        .iter()
        .map(|w| {
            json!({
                "triple": [r.label(w.x), r.label(w.y), r.label(w.z)],
                "direct": w.direct,
                "through": w.through,
            })
        })
        .collect();
    let inc: Vec<[String; 2]> = incomparable.iter().map(|&p| pair_labels(&r, p)).collect();

    rep.notes.push(format!(
        "Zadeh fuzzy order: {}; linear: {}; incomparable pairs: {}",
        yes_no(report.is_order()),
        yes_no(linear),
        incomparable.len()
    ));
    for w in &report.reflexivity {
        rep.notes.push(format!(
            "reflexivity fails: r({0}, {0}) = {1}",
            r.label(w.element),
            w.value
        ));
    }
    for w in &report.antisymmetry {
        let (x, y) = r.pair_labels(w.pair);
        rep.notes.push(format!(
            "antisymmetry fails: r({x}, {y}) = {} and r({y}, {x}) = {}",
            w.forward, w.backward
        ));
    }
    for w in &report.transitivity {
        rep.notes.push(format!(
            "transitivity fails: r({x}, {z}) = {} < min(r({x}, {y}), r({y}, {z})) = {}",
            w.direct,
            w.through,
            x = r.label(w.x),
            y = r.label(w.y),
            z = r.label(w.z),
        ));
    }

    rep.witnesses.insert("reflexivity".into(), json!(refl));
    rep.witnesses.insert("antisymmetry".into(), json!(anti));
    rep.witnesses.insert("transitivity".into(), json!(trans));
    rep.witnesses
        .insert("incomparable_pairs".into(), json!(inc));
    Ok(if report.is_order() {
        EXIT_OK
    } else {
        EXIT_PROPERTY_FAILED
    })
}

fn cmd_linearize(
    ctx: &mut Ctx,
    file: &Path,
    output: Option<&Path>,
    with_steps: bool,
    policy: PolicyArg,
) -> Result<i32> {
    let (r, format) = read_relation(file)?;
    let policy = match policy {
        PolicyArg::Low => PivotPolicy::LowFirst,
        PolicyArg::High => PivotPolicy::HighFirst,
    };
    let res = linearize_with(&r, &policy)?;
    let pivots: Vec<[String; 2]> = res.pivots().map(|p| pair_labels(&r, p)).collect();
    let steps = with_steps.then(|| {
        json!(res
            .trace
            .iter()
            .map(|s| json!({
                "step": s.step_index,
                "a": r.label(s.a),
                "b": r.label(s.b),
                "raised": s.entries_raised.iter().map(|e| json!({
                    "pair": pair_labels(&r, e.pair),
                    "old": e.old,
                    "new": e.new,
                })).collect::<Vec<_>>(),
            }))
            .collect::<Vec<_>>())
    });

    ctx.report
        .verdicts
        .insert("extends_input".into(), extends(&r, &res.relation)?);
    ctx.report
        .verdicts
        .insert("linear".into(), crate::axioms::is_linear(&res.relation));
    ctx.report.notes.push(format!(
        "pivots applied: k = {} (m = {}, bound m/2 = {})",
        res.k,
        res.m,
        res.m / 2
    ));
    for s in &res.trace {
        ctx.report.notes.push(format!(
            "step {}: {} below {} ({} entries raised)",
            s.step_index,
            r.label(s.a),
            r.label(s.b),
            s.entries_raised.len()
        ));
        if with_steps {
            for e in &s.entries_raised {
                let (x, y) = r.pair_labels(e.pair);
                ctx.report
                    .notes
                    .push(format!("  r({x}, {y}): {} -> {}", e.old, e.new));
            }
        }
    }
    ctx.report.trace = Some(TraceSummary {
        k: res.k,
        m: res.m,
        pivots,
        steps,
    });
    ctx.emit(&res.relation, output, format)?;
    Ok(EXIT_OK)
}

fn cmd_pivot(ctx: &mut Ctx, file: &Path, a: &str, b: &str, output: Option<&Path>) -> Result<i32> {
    let (r, format) = read_relation(file)?;
    let out = pivot_extend_by_label(&r, a, b)?;
    ctx.report
        .verdicts
        .insert("extends_input".into(), extends(&r, &out)?);
    ctx.report
        .verdicts
        .insert("linear".into(), crate::axioms::is_linear(&out));
    ctx.report.notes.push(format!("pivot: {a} below {b}"));
    ctx.emit(&out, output, format)?;
    Ok(EXIT_OK)
}

fn cmd_clamp(ctx: &mut Ctx, file: &Path, a: &str, b: &str, output: Option<&Path>) -> Result<i32> {
    let (r, format) = read_relation(file)?;
    let res = clamp_extend_by_label(&r, a, b)?;
    ctx.report
        .verdicts
        .insert("extends_input".into(), extends(&r, &res.relation)?);
    ctx.report.verdicts.insert(
        "preserved".into(),
        res.relation
            .get(res.preserved_pair.first, res.preserved_pair.second)
            == res.beta,
    );
    ctx.report
        .witnesses
        .insert("beta".into(), json!({ "pair": [a, b], "value": res.beta }));
    ctx.report
        .notes
        .push(format!("beta = r({a}, {b}) = {}", res.beta));
    ctx.emit(&res.relation, output, format)?;
    Ok(EXIT_OK)
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum TagDoc {
    Orients { a: String, b: String },
    Preserves { a: String, b: String },
}

#[derive(Debug, Serialize, Deserialize)]
struct MemberDoc {
    file: String,
    tags: Vec<TagDoc>,
}

#[derive(Debug, Serialize, Deserialize)]
struct ManifestDoc {
    elements: Vec<String>,
    members: Vec<MemberDoc>,
}

fn tag_doc(r: &FuzzyRelation, tag: Certificate) -> TagDoc {
    match tag {
        Certificate::Orients { a, b } => TagDoc::Orients {
            a: r.label(a).to_owned(),
            b: r.label(b).to_owned(),
        },
        Certificate::Preserves { a, b } => TagDoc::Preserves {
            a: r.label(a).to_owned(),
            b: r.label(b).to_owned(),
        },
    }
}

fn tag_from_doc(r: &FuzzyRelation, doc: &TagDoc) -> Result<Certificate> {
    Ok(match doc {
        TagDoc::Orients { a, b } => Certificate::Orients {
            a: r.index_of(a)?,
            b: r.index_of(b)?,
        },
        TagDoc::Preserves { a, b } => Certificate::Preserves {
            a: r.index_of(a)?,
            b: r.index_of(b)?,
        },
    })
}

/// Writes one matrix per member plus `manifest.json` into `dir`.
pub fn write_family(
    dir: &Path,
    r: &FuzzyRelation,
    family: &ExtensionFamily,
    format: Format,
) -> Result<()> {
    fs::create_dir_all(dir)?;
    let mut members = Vec::with_capacity(family.len());
    for (i, m) in family.members().iter().enumerate() {
        let name = format!("member_{i:03}.{}", format.extension());
        write_relation(&dir.join(&name), &m.relation, format)?;
        members.push(MemberDoc {
            file: name,
            tags: m.tags.iter().map(|&t| tag_doc(r, t)).collect(),
        });
    }
    let manifest = ManifestDoc {
        elements: r.labels().to_vec(),
        members,
    };
    let text = serde_json::to_string_pretty(&manifest).expect("manifest serializes");
    fs::write(dir.join(MANIFEST_FILE), text + "\n")?;
    Ok(())
}

/// Reads a family directory. Uses `manifest.json` when present, otherwise
/// every `.csv`/`.json` file in name order with no tags.
pub fn read_family(dir: &Path, r: &FuzzyRelation) -> Result<ExtensionFamily> {
    let mut family = ExtensionFamily::new();
    let manifest_path = dir.join(MANIFEST_FILE);
    if manifest_path.is_file() {
        let text = fs::read_to_string(&manifest_path)?;
        let manifest: ManifestDoc = serde_json::from_str(&text)
            .map_err(|e| Error::Format(format!("{}: {e}", manifest_path.display())))?;
        for m in &manifest.members {
            let (rel, _) = read_relation(&dir.join(&m.file))?;
            let tags = m
                .tags
                .iter()
                .map(|t| tag_from_doc(r, t))
                .collect::<Result<Vec<_>>>()?;
            family.insert(rel, tags);
        }
    } else {
        let mut paths: Vec<PathBuf> = fs::read_dir(dir)
            .map_err(|e| Error::Io(format!("{}: {e}", dir.display())))?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| matches!(p.extension().and_then(|e| e.to_str()), Some("csv" | "json")))
            .collect();
        paths.sort();
        for p in paths {
            let (rel, _) = read_relation(&p)?;
            family.insert(rel, []);
        }
    }
    Ok(family)
}

fn cmd_family(ctx: &mut Ctx, file: &Path, output: Option<&Path>) -> Result<i32> {
    let (r, format) = read_relation(file)?;
    let family = certifying_family(&r)?;
    let holds = verify_intersection(&r, &family)?.holds();
    ctx.report.verdicts.insert("reconstructs".into(), holds);
    if let Some(dir) = output {
        write_family(dir, &r, &family, ctx.output_format(format))?;
    }
    ctx.report.notes.push(format!(
        "certifying family: {} distinct members, {} certificates; infimum reconstructs input: {}",
        family.len(),
        family.certificate_count(),
        yes_no(holds)
    ));
    ctx.report.family = Some(FamilySummary {
        members: family.len(),
        certificates: family.certificate_count(),
        directory: output.map(|d| d.display().to_string()),
    });
    Ok(if holds { EXIT_OK } else { EXIT_PROPERTY_FAILED })
}

fn cmd_verify(ctx: &mut Ctx, file: &Path, dir: &Path) -> Result<i32> {
    let (r, _) = read_relation(file)?;
    let family = read_family(dir, &r)?;
    let report = verify_intersection(&r, &family)?;
    let holds = report.holds();
    ctx.report
        .verdicts
        .insert("intersection_equals_input".into(), holds);
    let mismatches: Vec<Value> = report
        .mismatches
        .iter()
        .map(|m| json!({ "pair": pair_labels(&r, m.pair), "infimum": m.infimum, "expected": m.expected }))
        .collect();
    ctx.report
        .witnesses
        .insert("mismatches".into(), json!(mismatches));
    ctx.report.family = Some(FamilySummary {
        members: family.len(),
        certificates: family.certificate_count(),
        directory: Some(dir.display().to_string()),
    });
    ctx.report.notes.push(format!(
        "infimum of {} members equals input: {}",
        family.len(),
        yes_no(holds)
    ));
    for m in &report.mismatches {
        let (x, y) = r.pair_labels(m.pair);
        ctx.report.notes.push(format!(
            "mismatch at ({x}, {y}): infimum {} != {}",
            m.infimum, m.expected
        ));
    }
    Ok(if holds { EXIT_OK } else { EXIT_PROPERTY_FAILED })
}

fn render_text(report: &RunReport) -> String {
    let mut out = String::new();
    for note in &report.notes {
        out.push_str(note);
        out.push('\n');
    }
    if let Some(text) = &report.matrix_text {
        out.push_str(text);
    }
    out
}

/// Parses `argv` (including the program name), runs it, and writes the report
/// to `stdout` and diagnostics to `stderr`. Returns the exit code.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{err}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(stderr, "{err}");
                    EXIT_USAGE
                }
            };
        }
    };
    let echo = argv
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect();
    match execute(&cli, echo) {
        Ok(outcome) => {
            let text = if cli.json {
                serde_json::to_string_pretty(&outcome.report).expect("report serializes") + "\n"
            } else {
                render_text(&outcome.report)
            };
            let _ = stdout.write_all(text.as_bytes());
            outcome.code
        }
        Err(err) => {
            let _ = writeln!(stderr, "error: {err}");
            EXIT_USAGE
        }
    }
}
