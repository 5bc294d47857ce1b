//! Command-line front end for `maxsemi`: reads a semigroup description as
//! JSON, runs an analysis and writes a JSON document or DOT text.
//!
//! Indices in input and output are 1-based; group elements are written in
//! cycle notation and transformations as image rows.

use std::collections::BTreeMap;
use std::io::Read;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use maxsemi::graphs::{condensed_to_dot, graph_to_dot};
use maxsemi::maximal::{build_jclass_graphs, max_subsemigroups_with, SearchOptions, Witness};
use maxsemi::oracle::verify_maximal;
use maxsemi::perm_group::{generate_group, parse_cycles, Permutation};
use maxsemi::rees_matrix::{max_r1_r2, max_r3_r4, max_r5, max_r6, RzmsType, RzmsWitness};
use maxsemi::{Bounds, FiniteSemigroup, GreensStructure, MaxType, ReesZeroMatrixSemigroup, Transformation};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Capacity(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 1,
            CliError::Capacity(_) => 2,
        }
    }
}

impl From<maxsemi::Error> for CliError {
    fn from(e: maxsemi::Error) -> Self {
        match e {
            maxsemi::Error::Input(_) => CliError::Input(e.to_string()),
            maxsemi::Error::Capacity { .. } => CliError::Capacity(e.to_string()),
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "maxsemi", version, about = "Maximal subsemigroups of finite semigroups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Green's structure summary: class counts, J-order, regularity.
    Analyze(CommonArgs),
    /// All maximal subsemigroups.
    Maximal(MaximalArgs),
    /// One of the graphs used by the search, in DOT format.
    Dot(DotArgs),
}

#[derive(Debug, clap::Args)]
pub struct CommonArgs {
    /// Input JSON file; standard input when omitted or `-`.
    pub input: Option<PathBuf>,
    /// Include wall-clock timings in the output.
    #[arg(long)]
    pub timings: bool,
    #[arg(long)]
    pub bound_elements: Option<usize>,
    #[arg(long)]
    pub bound_table: Option<usize>,
    #[arg(long)]
    pub bound_subgroup_lattice: Option<usize>,
    #[arg(long)]
    pub bound_independent_set: Option<usize>,
}

impl CommonArgs {
    fn bounds(&self) -> Bounds {
        let d = Bounds::default();
        Bounds {
            semigroup_elements: self.bound_elements.unwrap_or(d.semigroup_elements),
            table_elements: self.bound_table.unwrap_or(d.table_elements),
            subgroup_lattice_order: self.bound_subgroup_lattice.unwrap_or(d.subgroup_lattice_order),
            independent_set_vertices: self.bound_independent_set.unwrap_or(d.independent_set_vertices),
            oracle_elements: d.oracle_elements,
        }
    }
}

#[derive(Debug, clap::Args)]
pub struct MaximalArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Comma-separated types to report, e.g. `S3,S4` or `R5,R6`.
    #[arg(long, value_delimiter = ',')]
    pub types: Option<Vec<String>>,
    /// Check every result by one-element extension.
    #[arg(long)]
    pub verify: bool,
    /// For Rees 0-matrix input, search the input as a general semigroup
    /// rather than by structure-matrix types.
    #[arg(long)]
    pub as_semigroup: bool,
    /// Seed for randomized transversals in the subgroup search.
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphKind {
    Gh,
    GammaL,
    GammaR,
    Delta,
    Theta,
}

#[derive(Debug, clap::Args)]
pub struct DotArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    #[arg(long, value_enum)]
    pub graph: GraphKind,
    /// 1-based J-class id, as reported by `analyze`.
    #[arg(long)]
    pub jclass: Option<usize>,
}

/// A transformation as an array of 1-based images or a string such as
/// `"1 3 4 1 5 5 5"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ImageRow {
    Images(Vec<usize>),
    Text(String),
}

/// A semigroup description.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum InputSpec {
    Transformations {
        generators: Vec<ImageRow>,
    },
    CayleyTable {
        /// 1-based entries; `table[x][y]` is `x·y`.
        table: Vec<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        generators: Option<Vec<usize>>,
    },
    Rzms {
        /// `|I|`.
        rows: usize,
        /// `|Λ|`.
        cols: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        degree: Option<usize>,
        /// Group generators in cycle notation.
        group: Vec<String>,
        /// `matrix[λ][i]` in cycle notation, `"0"` for zero.
        matrix: Vec<Vec<String>>,
    },
}

/// A parsed input.
pub struct Loaded {
    pub semigroup: FiniteSemigroup,
    pub rzms: Option<ReesZeroMatrixSemigroup>,
}

fn parse_perm(text: &str, degree: usize, what: &str) -> Result<Permutation, CliError> {
    let cycles = parse_cycles(text)
        .map_err(|e| CliError::Input(format!("{what}: \"{text}\" at column {}: {}", e.column, e.message)))?;
    Permutation::from_cycles(degree, &cycles).map_err(|e| CliError::Input(format!("{what}: {e}")))
}

fn max_point(text: &str, what: &str) -> Result<usize, CliError> {
    let cycles = parse_cycles(text)
        .map_err(|e| CliError::Input(format!("{what}: \"{text}\" at column {}: {}", e.column, e.message)))?;
    Ok(cycles.iter().flatten().map(|p| p + 1).max().unwrap_or(0))
}

impl InputSpec {
    pub fn parse(text: &str) -> Result<InputSpec, CliError> {
        serde_json::from_str(text).map_err(|e| {
            CliError::Input(format!(
                "JSON error at line {}, column {}: {e}",
                e.line(),
                e.column()
            ))
        })
    }

    pub fn rzms(&self) -> Result<Option<ReesZeroMatrixSemigroup>, CliError> {
        let InputSpec::Rzms { rows, cols, degree, group, matrix } = self else {
            return Ok(None);
        };
        if matrix.len() != *cols {
            return Err(CliError::Input(format!(
                "matrix has {} rows, expected one per Λ index ({cols})",
                matrix.len()
            )));
        }
        let mut inferred = 1;
        for (k, g) in group.iter().enumerate() {
            inferred = inferred.max(max_point(g, &format!("group generator {}", k + 1))?);
        }
        for (l, row) in matrix.iter().enumerate() {
            if row.len() != *rows {
                return Err(CliError::Input(format!(
                    "matrix row {} has {} entries, expected one per I index ({rows})",
                    l + 1,
                    row.len()
                )));
            }
            for (i, e) in row.iter().enumerate() {
                if e.trim() != "0" {
                    inferred = inferred.max(max_point(e, &format!("matrix[{}][{}]", l + 1, i + 1))?);
                }
            }
        }
        let degree = degree.unwrap_or(inferred);
        let gens = group
            .iter()
            .enumerate()
            .map(|(k, g)| parse_perm(g, degree, &format!("group generator {}", k + 1)))
            .collect::<Result<Vec<_>, _>>()?;
        let g = generate_group(degree, &gens)?;
        let mut entries = Vec::with_capacity(*cols);
        for (l, row) in matrix.iter().enumerate() {
            let parsed = row
                .iter()
                .enumerate()
                .map(|(i, e)| {
                    if e.trim() == "0" {
                        Ok(None)
                    } else {
                        parse_perm(e, degree, &format!("matrix[{}][{}]", l + 1, i + 1)).map(Some)
                    }
                })
                .collect::<Result<Vec<_>, _>>()?;
            entries.push(parsed);
        }
        Ok(Some(ReesZeroMatrixSemigroup::from_permutations(g, &entries)?))
    }

    pub fn load(&self, bounds: &Bounds) -> Result<Loaded, CliError> {
        match self {
            InputSpec::Transformations { generators } => {
                let gens = generators
                    .iter()
                    .enumerate()
                    .map(|(k, row)| {
                        let t = match row {
                            ImageRow::Text(s) => Transformation::parse(s),
                            ImageRow::Images(v) => {
                                if v.contains(&0) {
                                    Err(maxsemi::Error::Input("images are numbered from 1".into()))
                                } else {
                                    Transformation::new(v.iter().map(|x| x - 1).collect())
                                }
                            }
                        };
                        t.map_err(|e| CliError::Input(format!("generator {}: {e}", k + 1)))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                let e = FiniteSemigroup::from_transformations(&gens, bounds)?;
                Ok(Loaded {
                    semigroup: e.semigroup,
                    rzms: None,
                })
            }
            InputSpec::CayleyTable { table, generators } => {
                let zero = |v: usize, what: &str| {
                    v.checked_sub(1)
                        .ok_or_else(|| CliError::Input(format!("{what}: entries are numbered from 1")))
                };
                let t = table
                    .iter()
                    .map(|row| row.iter().map(|&v| zero(v, "table")).collect::<Result<Vec<_>, _>>())
                    .collect::<Result<Vec<_>, _>>()?;
                let gens = generators
                    .as_ref()
                    .map(|g| g.iter().map(|&v| zero(v, "generators")).collect::<Result<Vec<_>, _>>())
                    .transpose()?;
                let e = FiniteSemigroup::from_table(&t, gens.as_deref(), bounds)?;
                Ok(Loaded {
                    semigroup: e.semigroup,
                    rzms: None,
                })
            }
            InputSpec::Rzms { .. } => {
                let r = self.rzms()?.expect("rzms input");
                let all: Vec<usize> = (0..r.size()).collect();
                let semigroup = r.to_semigroup_with(&r.generators_of(&all), bounds)?;
                Ok(Loaded {
                    semigroup,
                    rzms: Some(r),
                })
            }
        }
    }
}

/// Summary of one `J`-class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JClassSummary {
    pub id: usize,
    pub size: usize,
    pub l_classes: usize,
    pub r_classes: usize,
    pub h_class_size: usize,
    pub regular: bool,
    pub maximal: bool,
    pub idempotents: usize,
    /// 1-based ids of the classes directly reachable below.
    pub below: Vec<usize>,
    /// Label of the smallest element.
    pub representative: String,
}

/// One maximal subsemigroup.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultEntry {
    #[serde(rename = "type")]
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub j_class: Option<usize>,
    pub size: usize,
    pub removed: usize,
    pub generators: Vec<String>,
    pub witness: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultDocument {
    pub schema: u32,
    pub command: String,
    pub input: InputSpec,
    pub size: usize,
    pub idempotents: usize,
    pub j_classes: Vec<JClassSummary>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub maximal: Option<Vec<ResultEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counts: Option<BTreeMap<String, usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verified: Option<bool>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub diagnostics: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<BTreeMap<String, f64>>,
}

impl ResultDocument {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<ResultDocument, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Input(format!("result document: {e}")))
    }
}

fn j_summaries(s: &FiniteSemigroup, gs: &GreensStructure) -> Vec<JClassSummary> {
    (0..gs.j_count())
        .map(|j| {
            let members = &gs.j_classes[j];
            JClassSummary {
                id: j + 1,
                size: members.len(),
                l_classes: gs.l_classes_in(j).len(),
                r_classes: gs.r_classes_in(j).len(),
                h_class_size: gs.h_classes[gs.h_class[members[0]]].len(),
                regular: gs.regular[j],
                maximal: gs.is_maximal(j),
                idempotents: members.iter().filter(|&&x| gs.idempotent[x]).count(),
                below: gs.j_order.successors(j).iter().map(|c| c + 1).collect(),
                representative: s.label(members[0]).to_string(),
            }
        })
        .collect()
}

fn cycles_json(p: &Permutation) -> Value {
    Value::String(p.to_cycle_string())
}

fn rzms_witness_json(w: &RzmsWitness) -> Value {
    let one_based = |v: &[usize]| v.iter().map(|x| x + 1).collect::<Vec<_>>();
    match w {
        RzmsWitness::Zero => json!({ "form": "zero" }),
        RzmsWitness::NonZero => json!({ "form": "non_zero" }),
        RzmsWitness::RemovedCol(l) => json!({ "removed_lambda": l + 1 }),
        RzmsWitness::RemovedRow(i) => json!({ "removed_i": i + 1 }),
        RzmsWitness::IndependentSet { rows, cols } => json!({
            "kept_i": one_based(rows),
            "kept_lambda": one_based(cols),
        }),
        RzmsWitness::Subgroup { class, order, cosets } => json!({
            "subgroup_class": class + 1,
            "subgroup_order": order,
            "cosets": cosets.iter().map(cycles_json).collect::<Vec<_>>(),
        }),
    }
}

fn class_labels(prefix: &str, classes: &[usize], within: &[usize]) -> Vec<String> {
    classes
        .iter()
        .map(|c| {
            let pos = within.binary_search(c).expect("class of J");
            format!("{prefix}{}", pos + 1)
        })
        .collect()
}

fn witness_json(w: &Witness, gs: &GreensStructure, j: usize) -> Value {
    let ls = gs.l_classes_in(j);
    let rs = gs.r_classes_in(j);
    match w {
        Witness::None => json!({}),
        Witness::Rzms(r) => json!({ "principal_factor": rzms_witness_json(r) }),
        Witness::Rectangle { a, b } => json!({
            "a": class_labels("L", a, &ls),
            "b": class_labels("R", b, &rs),
        }),
        Witness::LClasses { a } => json!({ "a": class_labels("L", a, &ls) }),
        Witness::RClasses { b } => json!({ "b": class_labels("R", b, &rs) }),
    }
}

fn read_input(path: &Option<PathBuf>, stdin: &mut dyn Read) -> Result<String, CliError> {
    match path {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p)
            .map_err(|e| CliError::Input(format!("cannot read {}: {e}", p.display()))),
        _ => {
            let mut s = String::new();
            stdin
                .read_to_string(&mut s)
                .map_err(|e| CliError::Input(format!("cannot read standard input: {e}")))?;
            Ok(s)
        }
    }
}

struct Timer {
    enabled: bool,
    start: Instant,
    marks: BTreeMap<String, f64>,
}

impl Timer {
    fn new(enabled: bool) -> Self {
        Timer {
            enabled,
            start: Instant::now(),
            marks: BTreeMap::new(),
        }
    }

    fn mark(&mut self, name: &str) {
        let now = Instant::now();
        self.marks
            .insert(name.to_string(), (now - self.start).as_secs_f64() * 1000.0);
        self.start = now;
    }

    fn finish(self) -> Option<BTreeMap<String, f64>> {
        self.enabled.then_some(self.marks)
    }
}

fn base_document(command: &str, spec: InputSpec, s: &FiniteSemigroup, gs: &GreensStructure) -> ResultDocument {
    ResultDocument {
        schema: SCHEMA_VERSION,
        command: command.to_string(),
        input: spec,
        size: s.size(),
        idempotents: gs.idempotent.iter().filter(|&&b| b).count(),
        j_classes: j_summaries(s, gs),
        maximal: None,
        counts: None,
        verified: None,
        diagnostics: Vec::new(),
        timings_ms: None,
    }
}

fn cmd_analyze(args: &CommonArgs, text: &str) -> Result<String, CliError> {
    let mut timer = Timer::new(args.timings);
    let spec = InputSpec::parse(text)?;
    let loaded = spec.load(&args.bounds())?;
    timer.mark("enumerate");
    let gs = GreensStructure::new(&loaded.semigroup);
    timer.mark("greens");
    let mut doc = base_document("analyze", spec, &loaded.semigroup, &gs);
    doc.timings_ms = timer.finish();
    Ok(doc.to_json())
}

fn parse_types<T: Copy>(names: &Option<Vec<String>>, lookup: impl Fn(&str) -> Option<T>) -> Result<Option<Vec<T>>, CliError> {
    names
        .as_ref()
        .map(|ns| {
            ns.iter()
                .map(|n| lookup(n.trim()).ok_or_else(|| CliError::Input(format!("unknown type '{n}'"))))
                .collect()
        })
        .transpose()
}

fn rzms_type(name: &str) -> Option<RzmsType> {
    [RzmsType::R1, RzmsType::R2, RzmsType::R3, RzmsType::R4, RzmsType::R5, RzmsType::R6]
        .into_iter()
        .find(|t| t.name().eq_ignore_ascii_case(name))
}

fn cmd_maximal(args: &MaximalArgs, text: &str) -> Result<String, CliError> {
    let bounds = args.common.bounds();
    let mut timer = Timer::new(args.common.timings);
    let spec = InputSpec::parse(text)?;
    let loaded = spec.load(&bounds)?;
    timer.mark("enumerate");
    let s = &loaded.semigroup;
    let gs = GreensStructure::new(s);
    timer.mark("greens");
    let mut doc = base_document("maximal", spec, s, &gs);
    let mut entries = Vec::new();
    let mut verified = true;
    match (&loaded.rzms, args.as_semigroup) {
        (Some(r), false) => {
            let wanted = parse_types(&args.types, rzms_type)?;
            let wants = |t: RzmsType| wanted.as_ref().is_none_or(|w| w.contains(&t));
            let mut found = Vec::new();
            if wants(RzmsType::R1) || wants(RzmsType::R2) {
                found.extend(max_r1_r2(r));
            }
            if wants(RzmsType::R3) || wants(RzmsType::R4) {
                found.extend(max_r3_r4(r));
            }
            if wants(RzmsType::R5) {
                found.extend(max_r5(r, &bounds)?);
            }
            if wants(RzmsType::R6) {
                found.extend(max_r6(r, None, &bounds, args.seed)?);
            }
            found.retain(|m| wants(m.kind));
            found.sort_by(|a, b| a.kind.cmp(&b.kind).then_with(|| a.elements.cmp(&b.elements)));
            found.dedup_by(|a, b| a.elements == b.elements);
            timer.mark("search");
            let by_code = if args.verify { Some(r.to_semigroup(&bounds)?) } else { None };
            for m in &found {
                if let Some(full) = &by_code {
                    if let Err(e) = verify_maximal(full, &m.elements) {
                        verified = false;
                        doc.diagnostics.push(format!("{} result failed verification: {e}", m.kind.name()));
                    }
                }
                entries.push(ResultEntry {
                    kind: m.kind.name().to_string(),
                    j_class: None,
                    size: m.size(),
                    removed: r.size() - m.size(),
                    generators: m.generators.iter().map(|&c| r.label(c)).collect(),
                    witness: rzms_witness_json(&m.witness),
                });
            }
        }
        _ => {
            let opts = SearchOptions {
                bounds,
                types: parse_types(&args.types, MaxType::from_name)?,
                seed: args.seed,
            };
            let report = max_subsemigroups_with(s, &gs, &opts)?;
            timer.mark("search");
            doc.diagnostics.extend(report.diagnostics);
            for m in &report.results {
                if args.verify {
                    if let Err(e) = verify_maximal(s, &m.elements(s.size())) {
                        verified = false;
                        doc.diagnostics.push(format!("{} result failed verification: {e}", m.kind));
                    }
                }
                entries.push(ResultEntry {
                    kind: m.kind.name().to_string(),
                    j_class: Some(m.j_class + 1),
                    size: m.size,
                    removed: m.removed.len(),
                    generators: m.generators.iter().map(|&x| s.label(x).to_string()).collect(),
                    witness: witness_json(&m.witness, &gs, m.j_class),
                });
            }
        }
    }
    if args.verify {
        timer.mark("verify");
        doc.verified = Some(verified);
    }
    let mut counts = BTreeMap::new();
    for e in &entries {
        *counts.entry(e.kind.clone()).or_insert(0) += 1;
    }
    doc.counts = Some(counts);
    doc.maximal = Some(entries);
    doc.timings_ms = timer.finish();
    Ok(doc.to_json())
}

fn jclass_arg(jclass: Option<usize>, gs: &GreensStructure) -> Result<usize, CliError> {
    let id = jclass.ok_or_else(|| CliError::Input("this graph needs --jclass".into()))?;
    if id == 0 || id > gs.j_count() {
        return Err(CliError::Input(format!(
            "--jclass {id} is out of range; there are {} J-classes",
            gs.j_count()
        )));
    }
    Ok(id - 1)
}

fn cmd_dot(args: &DotArgs, text: &str) -> Result<String, CliError> {
    let bounds = args.common.bounds();
    let spec = InputSpec::parse(text)?;
    if args.graph == GraphKind::Gh && args.jclass.is_none() {
        let r = spec
            .rzms()?
            .ok_or_else(|| CliError::Input("--graph gh needs Rees 0-matrix input or --jclass".into()))?;
        return Ok(graph_to_dot("GrahamHoughton", &r.graham_houghton(), &r.graham_houghton_labels(), &[]));
    }
    let loaded = spec.load(&bounds)?;
    let s = &loaded.semigroup;
    let gs = GreensStructure::new(s);
    let j = jclass_arg(args.jclass, &gs)?;
    if args.graph == GraphKind::Gh {
        let pfi = gs.principal_factor_iso(s, j)?;
        let r = &pfi.rzms;
        return Ok(graph_to_dot("GrahamHoughton", &r.graham_houghton(), &r.graham_houghton_labels(), &[]));
    }
    let g = build_jclass_graphs(s, &gs, j)?;
    let highlighted: Vec<bool> = g.bipartite_colours().iter().map(|&c| c == 1).collect();
    Ok(match args.graph {
        GraphKind::GammaL => condensed_to_dot("Gamma_L", &g.gamma_l, &g.gamma_l_labels()),
        GraphKind::GammaR => condensed_to_dot("Gamma_R", &g.gamma_r, &g.gamma_r_labels()),
        GraphKind::Delta => graph_to_dot("Delta", &g.delta, &g.bipartite_labels(), &highlighted),
        GraphKind::Theta => graph_to_dot("Theta", &g.theta, &g.bipartite_labels(), &highlighted),
        GraphKind::Gh => unreachable!("handled above"),
    })
}

/// Runs a parsed command, reading standard input from `stdin` when no file
/// is given. Returns the text for standard output.
pub fn run(cli: &Cli, stdin: &mut dyn Read) -> Result<String, CliError> {
    match &cli.command {
        Command::Analyze(a) => cmd_analyze(a, &read_input(&a.input, stdin)?),
        Command::Maximal(a) => cmd_maximal(a, &read_input(&a.common.input, stdin)?),
        Command::Dot(a) => cmd_dot(a, &read_input(&a.common.input, stdin)?),
    }
}

/// Parses `args` (including the program name) and runs them.
pub fn run_args<I, T>(args: I, stdin: &mut dyn Read) -> Result<String, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(args).map_err(|e| CliError::Input(e.to_string()))?;
    run(&cli, stdin)
}
