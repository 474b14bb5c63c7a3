use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::Number;

use super::problem::{int_from_json, int_to_json, matrix_to_json, BaseSpec, ProblemFile, SCHEMA_VERSION};
use crate::homology::{BettiReport, Validation};
use crate::search::{SearchConfig, SearchHit, SearchOutcome};
use crate::{QVector, Rational};

/// Exact rational as `[numerator, denominator]`, denominator positive.
pub type JsonRational = [Number; 2];

pub fn rational_to_json(x: &Rational) -> JsonRational {
    [int_to_json(x.numer()), int_to_json(x.denom())]
}

pub fn rational_from_json(x: &JsonRational) -> Result<Rational, String> {
    let den = int_from_json(&x[1])?;
    if den <= BigInt::from(0) {
        return Err(format!("denominator {den} is not positive"));
    }
    Ok(Rational::new(int_from_json(&x[0])?, den))
}

pub fn vector_to_json(v: &[Rational]) -> Vec<JsonRational> {
    v.iter().map(rational_to_json).collect()
}

pub fn vector_from_json(v: &[JsonRational]) -> Result<QVector, String> {
    v.iter().map(rational_from_json).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Command {
    Homology,
    Search,
    Oracle,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DimsJson {
    #[serde(rename = "W")]
    pub w: usize,
    #[serde(rename = "Fix")]
    pub fix: usize,
    #[serde(rename = "K")]
    pub k: usize,
    pub rank_beta: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorJson {
    pub label: String,
    pub degree: usize,
    pub coords: Vec<JsonRational>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ValidationJson {
    pub name: String,
    pub verdict: String,
    pub detail: String,
}

impl ValidationJson {
    fn from_validation(v: &Validation) -> Self {
        ValidationJson {
            name: v.name.clone(),
            verdict: v.verdict.as_str().to_string(),
            detail: v.detail.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HomologyReportFile {
    pub schema_version: u32,
    pub command: Command,
    pub problem: ProblemFile,
    pub betti: [usize; 5],
    pub euler_characteristic: i64,
    pub dims: DimsJson,
    pub generators: Vec<GeneratorJson>,
    pub validations: Vec<ValidationJson>,
    pub all_pass: bool,
}

impl HomologyReportFile {
    pub fn new(problem: ProblemFile, r: &BettiReport) -> Self {
        HomologyReportFile {
            schema_version: SCHEMA_VERSION,
            command: Command::Homology,
            problem,
            betti: r.betti,
            euler_characteristic: r.euler_characteristic(),
            dims: DimsJson {
                w: r.dims.w,
                fix: r.dims.fix,
                k: r.dims.k,
                rank_beta: r.dims.rank_beta,
            },
            generators: r
                .generators
                .iter()
                .map(|g| GeneratorJson {
                    label: g.label.as_str().to_string(),
                    degree: g.degree(),
                    coords: vector_to_json(&g.coords),
                })
                .collect(),
            validations: r.validations.iter().map(ValidationJson::from_validation).collect(),
            all_pass: r.all_pass(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AnnotationsJson {
    pub product_is_identity: bool,
    pub fiber_genus_two_note: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HitJson {
    pub word: String,
    /// `(generator, exponent)` pairs, generators numbered from 1.
    pub letters: Vec<(usize, i8)>,
    pub product: Vec<Vec<Number>>,
    pub fixed_dim: usize,
    pub fixed_space: Vec<Vec<JsonRational>>,
    pub cycle: Vec<Vec<JsonRational>>,
    pub annotations: AnnotationsJson,
}

impl HitJson {
    fn from_hit(hit: &SearchHit) -> Self {
        HitJson {
            word: hit.word.to_string(),
            letters: hit
                .word
                .letters()
                .iter()
                .map(|l| (l.index + 1, if l.inverse { -1 } else { 1 }))
                .collect(),
            product: matrix_to_json(hit.product.matrix()),
            fixed_dim: hit.fixed_space.dim(),
            fixed_space: hit.fixed_space.basis().iter().map(|v| vector_to_json(v)).collect(),
            cycle: hit.cycle.iter().map(|v| vector_to_json(v)).collect(),
            annotations: AnnotationsJson {
                product_is_identity: hit.annotations.product_is_identity,
                fiber_genus_two_note: hit.annotations.fiber_genus_two_note,
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SearchReportFile {
    pub schema_version: u32,
    pub command: Command,
    pub problem: ProblemFile,
    pub max_len: usize,
    pub max_states: usize,
    pub products_enumerated: usize,
    pub hits: Vec<HitJson>,
}

impl SearchReportFile {
    pub fn new(problem: ProblemFile, cfg: &SearchConfig, out: &SearchOutcome) -> Self {
        SearchReportFile {
            schema_version: SCHEMA_VERSION,
            command: Command::Search,
            problem,
            max_len: cfg.max_len,
            max_states: cfg.max_states,
            products_enumerated: out.products_enumerated,
            hits: out.hits.iter().map(HitJson::from_hit).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OracleReportFile {
    pub schema_version: u32,
    pub command: Command,
    pub fiber_genus: usize,
    pub base: BaseSpec,
    pub engine_betti: [usize; 5],
    pub kunneth_betti: [usize; 5],
    pub agree: bool,
    pub validations: Vec<ValidationJson>,
    pub all_pass: bool,
}

impl OracleReportFile {
    pub fn new(r: &BettiReport, kunneth: [usize; 5]) -> Self {
        OracleReportFile {
            schema_version: SCHEMA_VERSION,
            command: Command::Oracle,
            fiber_genus: r.fiber_genus,
            base: BaseSpec {
                kind: r.base,
                genus: r.base_genus,
            },
            engine_betti: r.betti,
            kunneth_betti: kunneth,
            agree: r.betti == kunneth,
            validations: r.validations.iter().map(ValidationJson::from_validation).collect(),
            all_pass: r.all_pass(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReportFile {
    Homology(HomologyReportFile),
    Search(SearchReportFile),
    Oracle(OracleReportFile),
}

#[derive(Deserialize)]
struct Peek {
    command: Command,
}

impl ReportFile {
    /// Whether the command's verdict is success (exit code 0).
    pub fn success(&self) -> bool {
        match self {
            ReportFile::Homology(r) => r.all_pass,
            ReportFile::Search(_) => true,
            ReportFile::Oracle(r) => r.agree && r.all_pass,
        }
    }

    pub fn to_json(&self) -> String {
        let mut out = match self {
            ReportFile::Homology(r) => serde_json::to_string_pretty(r),
            ReportFile::Search(r) => serde_json::to_string_pretty(r),
            ReportFile::Oracle(r) => serde_json::to_string_pretty(r),
        }
        .expect("report serializes");
        out.push('\n');
        out
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        let peek: Peek = serde_json::from_str(text)?;
        Ok(match peek.command {
            Command::Homology => ReportFile::Homology(serde_json::from_str(text)?),
            Command::Search => ReportFile::Search(serde_json::from_str(text)?),
            Command::Oracle => ReportFile::Oracle(serde_json::from_str(text)?),
        })
    }

    pub fn to_table(&self, color: bool) -> String {
        let style = Style { color };
        match self {
            ReportFile::Homology(r) => homology_table(r, style),
            ReportFile::Search(r) => search_table(r, style),
            ReportFile::Oracle(r) => oracle_table(r, style),
        }
    }
}

#[derive(Clone, Copy)]
struct Style {
    color: bool,
}

impl Style {
    fn paint(self, code: &str, text: &str) -> String {
        if self.color {
            format!("\x1b[{code}m{text}\x1b[0m")
        } else {
            text.to_string()
        }
    }

    fn verdict(self, v: &str) -> String {
        let padded = format!("{v:<14}");
        match v {
            "pass" => self.paint("32", &padded),
            "fail" => self.paint("31;1", &padded),
            _ => self.paint("2", &padded),
        }
    }

    fn bold(self, text: &str) -> String {
        self.paint("1", text)
    }
}

fn fmt_rational(x: &JsonRational) -> String {
    if x[1].to_string() == "1" {
        x[0].to_string()
    } else {
        format!("{}/{}", x[0], x[1])
    }
}

fn fmt_vector(v: &[JsonRational]) -> String {
    let parts: Vec<String> = v.iter().map(fmt_rational).collect();
    format!("({})", parts.join(", "))
}

fn fmt_betti(b: &[usize; 5]) -> String {
    b.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn header(out: &mut String, style: Style, title: &str, base: &BaseSpec, fiber_genus: usize) {
    let _ = writeln!(
        out,
        "{}  fiber genus {fiber_genus}, {} base of genus {}",
        style.bold(title),
        base.kind,
        base.genus
    );
}

fn validations_table(out: &mut String, style: Style, vs: &[ValidationJson]) {
    let _ = writeln!(out, "{}", style.bold("validations"));
    for v in vs {
        let _ = writeln!(out, "  {} {:<22} {}", style.verdict(&v.verdict), v.name, v.detail);
    }
}

fn homology_table(r: &HomologyReportFile, style: Style) -> String {
    let mut out = String::new();
    header(&mut out, style, "homology", &r.problem.base, r.problem.fiber_genus);
    let _ = writeln!(out, "betti        {}", fmt_betti(&r.betti));
    let _ = writeln!(out, "euler char   {}", r.euler_characteristic);
    let rank = r.dims.rank_beta.map_or("-".to_string(), |x| x.to_string());
    let _ = writeln!(
        out,
        "dims         W={} Fix={} K={} rank_beta={rank}",
        r.dims.w, r.dims.fix, r.dims.k
    );
    let _ = writeln!(out, "{}", style.bold("generators"));
    for g in &r.generators {
        let _ = writeln!(out, "  H{}  {:<18} {}", g.degree, g.label, fmt_vector(&g.coords));
    }
    validations_table(&mut out, style, &r.validations);
    out
}

fn search_table(r: &SearchReportFile, style: Style) -> String {
    let mut out = String::new();
    header(&mut out, style, "search", &r.problem.base, r.problem.fiber_genus);
    let _ = writeln!(
        out,
        "max_len {}  distinct products {}  hits {}",
        r.max_len,
        r.products_enumerated,
        r.hits.len()
    );
    for hit in &r.hits {
        let mut flags = Vec::new();
        if hit.annotations.product_is_identity {
            flags.push("identity product");
        }
        if hit.annotations.fiber_genus_two_note {
            flags.push("genus-2 fiber");
        }
        let flags = if flags.is_empty() {
            String::new()
        } else {
            format!("  [{}]", flags.join(", "))
        };
        let _ = writeln!(out, "{}  fixed dim {}{flags}", style.bold(&hit.word), hit.fixed_dim);
        for v in &hit.fixed_space {
            let _ = writeln!(out, "    fixed  {}", fmt_vector(v));
        }
        let cycle: Vec<String> = hit.cycle.iter().map(|v| fmt_vector(v)).collect();
        let _ = writeln!(out, "    cycle  {}", cycle.join(" -> "));
    }
    out
}

fn oracle_table(r: &OracleReportFile, style: Style) -> String {
    let mut out = String::new();
    header(&mut out, style, "oracle", &r.base, r.fiber_genus);
    let _ = writeln!(out, "engine   {}", fmt_betti(&r.engine_betti));
    let _ = writeln!(out, "kunneth  {}", fmt_betti(&r.kunneth_betti));
    let verdict = if r.agree { "pass" } else { "fail" };
    let _ = writeln!(out, "agree    {}", style.verdict(verdict).trim_end());
    validations_table(&mut out, style, &r.validations);
    out
}

