//! Command-line front end: `build-sa`, `build-tree`, `lcp`, `verify`,
//! `bench`.
//!
//! Positions and pairs are 1-based externally unless `--zero-based` is
//! given, in which case both input and output convert. Text files are raw
//! bytes (sigma = 256). Exit codes: 0 ok, 1 invalid input, 2 I/O error,
//! 3 internal invariant violation (including oracle divergence).

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::batched_lcp::batch_lcp;
use crate::bench;
use crate::error::{Error, Result};
use crate::fingerprint::FingerprintContext;
use crate::generate;
use crate::oracle;
use crate::sst_build::{build_tree, validate_tree, Edge, NodeId, SparseSuffixTree};
use crate::suffix_sort::{sort_suffixes_with_stats, SparseSuffixArray};
use crate::text::Text;

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Csv,
    Json,
    Dot,
}

/// Validated configuration shared by the commands.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub text_path: PathBuf,
    pub alpha: usize,
    pub seed: u64,
    pub reps: usize,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub zero_based: bool,
    pub verify: bool,
}

impl RunConfig {
    fn validate(&self) -> Result<()> {
        if self.alpha < 2 {
            return Err(Error::InvalidParameter(format!("alpha {} < 2", self.alpha)));
        }
        if self.reps == 0 || self.reps > 16 {
            return Err(Error::InvalidParameter(format!(
                "reps {} outside [1,16]",
                self.reps
            )));
        }
        Ok(())
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "sparse-suffix",
    version,
    about = "Sparse suffix array and tree construction in O(b)-word working memory"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build the sparse suffix array for chosen positions
    BuildSa(BuildArgs),
    /// Build the sparse suffix tree for chosen positions
    BuildTree(BuildArgs),
    /// Answer a batch of LCP queries from a pairs file
    Lcp(LcpArgs),
    /// Cross-check the fingerprint path against the brute-force oracle
    Verify(VerifyArgs),
    /// Run an (n, b, alpha) grid; emits one CSV row per cell
    Bench(BenchArgs),
}

#[derive(Args, Debug, Clone)]
struct CommonArgs {
    /// Text file, read as raw bytes
    #[arg(long)]
    text: PathBuf,
    /// Branching factor of the per-round search; memory grows with alpha,
    /// rounds shrink
    #[arg(long, default_value_t = 2)]
    alpha: usize,
    /// Seed for prime selection and pivot choice
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Independent fingerprint moduli (all must agree for equality)
    #[arg(long, default_value_t = 2)]
    reps: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output to this file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// Positions and pairs are 0-based on input and output
    #[arg(long)]
    zero_based: bool,
}

impl CommonArgs {
    fn config(&self, verify: bool) -> RunConfig {
        RunConfig {
            text_path: self.text.clone(),
            alpha: self.alpha,
            seed: self.seed,
            reps: self.reps,
            format: self.format,
            out: self.out.clone(),
            zero_based: self.zero_based,
            verify,
        }
    }
}

#[derive(Args, Debug)]
struct BuildArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Positions: an inline list ("1,3,5"), a file of decimal integers
    /// separated by newlines or commas, or "random:COUNT"
    #[arg(long)]
    positions: String,
    /// Cross-check the result against the brute-force oracle
    #[arg(long)]
    verify: bool,
}

#[derive(Args, Debug)]
struct LcpArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Pairs file: one "i j" per line, decimal
    #[arg(long)]
    pairs: PathBuf,
    /// Cross-check the results against the brute-force oracle
    #[arg(long)]
    verify: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Positions to verify sorting and tree construction on
    #[arg(long)]
    positions: Option<String>,
    /// Pairs file to verify batched LCP queries on
    #[arg(long)]
    pairs: Option<PathBuf>,
    /// Force a collision-prone fingerprint context (p = 3, one repetition)
    /// to exercise the divergence report
    #[arg(long, hide = true)]
    debug_tiny_prime: bool,
}

#[derive(Args, Debug)]
struct BenchArgs {
    /// Text lengths
    #[arg(long, value_delimiter = ',', required = true)]
    grid_n: Vec<usize>,
    /// Position-set sizes
    #[arg(long, value_delimiter = ',', required = true)]
    grid_b: Vec<usize>,
    /// Alpha values
    #[arg(long, value_delimiter = ',', default_value = "2")]
    grid_alpha: Vec<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 2)]
    reps: usize,
    /// Write the CSV here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Runs the CLI against real stdout/stderr. Returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let mut out = io::stdout();
    let mut err = io::stderr();
    run_with_io(args, &mut out, &mut err)
}

/// Same as [`run`] but with caller-supplied streams (used by tests).
pub fn run_with_io<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    1
                }
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<()> {
    match command {
        Command::BuildSa(args) => {
            let config = args.common.config(args.verify);
            cmd_build_sa(&config, &args.positions, out)
        }
        Command::BuildTree(args) => {
            let config = args.common.config(args.verify);
            cmd_build_tree(&config, &args.positions, out)
        }
        Command::Lcp(args) => {
            let config = args.common.config(args.verify);
            cmd_lcp(&config, &args.pairs, out)
        }
        Command::Verify(args) => {
            let config = args.common.config(true);
            cmd_verify(
                &config,
                args.positions.as_deref(),
                args.pairs.as_deref(),
                args.debug_tiny_prime,
                out,
            )
        }
        Command::Bench(args) => cmd_bench(&args, out),
    }
}

fn read_text(config: &RunConfig) -> Result<Text> {
    Ok(Text::new(fs::read(&config.text_path)?))
}

fn emit(config: &RunConfig, out: &mut dyn Write, payload: &[u8]) -> Result<()> {
    match &config.out {
        Some(path) => fs::write(path, payload)?,
        None => out.write_all(payload)?,
    }
    Ok(())
}

/// Converts an external (possibly 0-based) value to an internal 1-based
/// position, bounds-checked against `n`. `place` names the offending line
/// in error messages; empty for inline input.
fn normalize_position(raw: u64, n: usize, zero_based: bool, place: &str) -> Result<usize> {
    let pos = if zero_based {
        raw as u128 + 1
    } else {
        raw as u128
    };
    if pos == 0 || pos > n as u128 {
        let range = if zero_based {
            format!("[0,{}]", n.saturating_sub(1))
        } else {
            format!("[1,{n}]")
        };
        return Err(Error::Parse(format!(
            "{place}position {raw} out of range {range}"
        )));
    }
    Ok(pos as usize)
}

fn looks_inline(spec: &str) -> bool {
    spec.is_empty()
        || spec
            .chars()
            .all(|c| c.is_ascii_digit() || c == ',' || c.is_whitespace())
}

/// Resolves a positions spec (inline list, file, or "random:COUNT") into
/// validated, distinct, 1-based positions.
fn resolve_positions(spec: &str, text: &Text, config: &RunConfig) -> Result<Vec<usize>> {
    let n = text.len();
    if let Some(rest) = spec.strip_prefix("random:") {
        let count: usize = rest
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad random position count '{rest}'")))?;
        if count > n {
            return Err(Error::InvalidParameter(format!(
                "cannot draw {count} distinct positions from a text of length {n}"
            )));
        }
        return Ok(generate::distinct_positions(
            n,
            count,
            generate::derive_seed(config.seed, 0x706f73),
        ));
    }

    // (raw value, source line; line 0 means inline)
    let mut entries: Vec<(u64, usize)> = Vec::new();
    if looks_inline(spec) {
        for token in spec.split(|c: char| c == ',' || c.is_whitespace()) {
            if token.is_empty() {
                continue;
            }
            let v = token
                .parse()
                .map_err(|_| Error::Parse(format!("bad position '{token}'")))?;
            entries.push((v, 0));
        }
    } else {
        let body = fs::read_to_string(spec)?;
        for (lineno, line) in body.lines().enumerate() {
            for token in line.split(|c: char| c == ',' || c.is_whitespace()) {
                if token.is_empty() {
                    continue;
                }
                let v = token.parse().map_err(|_| {
                    Error::Parse(format!(
                        "positions line {}: bad position '{token}'",
                        lineno + 1
                    ))
                })?;
                entries.push((v, lineno + 1));
            }
        }
    }

    let mut seen = std::collections::HashSet::with_capacity(entries.len());
    let mut positions = Vec::with_capacity(entries.len());
    for (raw, line) in entries {
        let place = if line == 0 {
            String::new()
        } else {
            format!("positions line {line}: ")
        };
        let pos = normalize_position(raw, n, config.zero_based, &place)?;
        if !seen.insert(pos) {
            return Err(Error::Parse(format!("{place}duplicate position {raw}")));
        }
        positions.push(pos);
    }
    Ok(positions)
}

/// Reads a pairs file: one "i j" per line (whitespace or comma separated).
fn read_pairs(
    path: &std::path::Path,
    text: &Text,
    config: &RunConfig,
) -> Result<Vec<(usize, usize)>> {
    let body = fs::read_to_string(path)?;
    let mut pairs = Vec::new();
    for (lineno, line) in body.lines().enumerate() {
        let place = format!("pairs line {}: ", lineno + 1);
        let tokens: Vec<&str> = line
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .collect();
        if tokens.is_empty() {
            continue;
        }
        if tokens.len() != 2 {
            return Err(Error::Parse(format!(
                "{place}expected two integers, got '{}'",
                line.trim()
            )));
        }
        let mut vals = [0usize; 2];
        for (k, token) in tokens.iter().enumerate() {
            let raw: u64 = token
                .parse()
                .map_err(|_| Error::Parse(format!("{place}bad integer '{token}'")))?;
            vals[k] = normalize_position(raw, text.len(), config.zero_based, &place)?;
        }
        pairs.push((vals[0], vals[1]));
    }
    Ok(pairs)
}

fn make_context(config: &RunConfig, n: usize) -> Result<FingerprintContext> {
    FingerprintContext::new(256, n, config.seed, config.reps)
}

fn pos_out(p: usize, zero_based: bool) -> usize {
    if zero_based {
        p - 1
    } else {
        p
    }
}

fn build_ssa(config: &RunConfig, text: &Text, positions: &[usize]) -> Result<SparseSuffixArray> {
    let ctx = make_context(config, text.len())?;
    let (ssa, _) = sort_suffixes_with_stats(
        text,
        positions,
        &ctx,
        config.alpha,
        generate::derive_seed(config.seed, 0x706976),
    )?;
    Ok(ssa)
}

fn cmd_build_sa(config: &RunConfig, positions_spec: &str, out: &mut dyn Write) -> Result<()> {
    config.validate()?;
    let text = read_text(config)?;
    let positions = resolve_positions(positions_spec, &text, config)?;
    if positions.is_empty() {
        return emit(config, out, b"");
    }
    let ssa = build_ssa(config, &text, &positions)?;
    if config.verify {
        let reference = oracle::naive_sort(&text, &positions)?;
        if reference != ssa {
            return Err(Error::Internal("suffix array diverges from oracle".into()));
        }
    }
    let zb = config.zero_based;
    let payload = match config.format {
        Format::Text => {
            let mut s = String::new();
            for (t, &pos) in ssa.sa.iter().enumerate() {
                if t == 0 {
                    s.push_str(&format!("{} -\n", pos_out(pos, zb)));
                } else {
                    s.push_str(&format!("{} {}\n", pos_out(pos, zb), ssa.adj_lcp[t - 1]));
                }
            }
            s
        }
        Format::Csv => {
            let mut s = String::from("rank,pos,lcp_prev\n");
            for (t, &pos) in ssa.sa.iter().enumerate() {
                if t == 0 {
                    s.push_str(&format!("{t},{},\n", pos_out(pos, zb)));
                } else {
                    s.push_str(&format!(
                        "{t},{},{}\n",
                        pos_out(pos, zb),
                        ssa.adj_lcp[t - 1]
                    ));
                }
            }
            s
        }
        Format::Json => {
            let sa: Vec<usize> = ssa.sa.iter().map(|&p| pos_out(p, zb)).collect();
            let v = json!({"n": ssa.n, "sa": sa, "adj_lcp": ssa.adj_lcp});
            format!("{}\n", serde_json::to_string_pretty(&v).unwrap())
        }
        Format::Dot => {
            return Err(Error::Parse(
                "dot output is only available for build-tree".into(),
            ))
        }
    };
    emit(config, out, payload.as_bytes())
}

fn cmd_build_tree(config: &RunConfig, positions_spec: &str, out: &mut dyn Write) -> Result<()> {
    config.validate()?;
    let text = read_text(config)?;
    let positions = resolve_positions(positions_spec, &text, config)?;
    if positions.is_empty() {
        return emit(config, out, b"");
    }
    let ssa = build_ssa(config, &text, &positions)?;
    let tree = build_tree(&text, &ssa)?;
    if config.verify {
        let faults = validate_tree(&tree, &text, &ssa);
        if !faults.is_empty() {
            return Err(Error::Internal(format!(
                "tree validation failed: {}",
                faults.join("; ")
            )));
        }
        let reference = oracle::naive_tree(&text, &positions)?;
        if reference.canonical_string(&text) != tree.canonical_string(&text) {
            return Err(Error::Internal("tree diverges from oracle".into()));
        }
    }
    let payload = match config.format {
        Format::Json => render_tree_json(&tree, config.zero_based),
        Format::Dot => render_tree_dot(&tree, &text, config.zero_based),
        Format::Text => render_tree_text(&tree, &text, config.zero_based),
        Format::Csv => {
            return Err(Error::Parse(
                "csv output is not available for build-tree; use json or dot".into(),
            ))
        }
    };
    emit(config, out, payload.as_bytes())
}

fn cmd_lcp(config: &RunConfig, pairs_path: &std::path::Path, out: &mut dyn Write) -> Result<()> {
    config.validate()?;
    let text = read_text(config)?;
    let pairs = read_pairs(pairs_path, &text, config)?;
    if pairs.is_empty() {
        return emit(config, out, b"");
    }
    let ctx = make_context(config, text.len())?;
    let result = batch_lcp(&text, &pairs, &ctx, config.alpha)?;
    if config.verify {
        let reference = oracle::naive_batch_lcp(&text, &pairs)?;
        if reference != result.lcps {
            return Err(Error::Internal("LCP results diverge from oracle".into()));
        }
    }
    let zb = config.zero_based;
    let payload = match config.format {
        Format::Text => result
            .lcps
            .iter()
            .map(|l| format!("{l}\n"))
            .collect::<String>(),
        Format::Csv => {
            let mut s = String::from("i,j,lcp\n");
            for (&(i, j), &l) in pairs.iter().zip(&result.lcps) {
                s.push_str(&format!("{},{},{}\n", pos_out(i, zb), pos_out(j, zb), l));
            }
            s
        }
        Format::Json => {
            let v = json!({"lcps": result.lcps});
            format!("{}\n", serde_json::to_string_pretty(&v).unwrap())
        }
        Format::Dot => {
            return Err(Error::Parse(
                "dot output is only available for build-tree".into(),
            ))
        }
    };
    emit(config, out, payload.as_bytes())
}

fn cmd_verify(
    config: &RunConfig,
    positions_spec: Option<&str>,
    pairs_path: Option<&std::path::Path>,
    tiny_prime: bool,
    out: &mut dyn Write,
) -> Result<()> {
    config.validate()?;
    if positions_spec.is_none() && pairs_path.is_none() {
        return Err(Error::InvalidParameter(
            "verify needs --positions and/or --pairs".into(),
        ));
    }
    let text = read_text(config)?;
    let n = text.len();
    let ctx = if tiny_prime {
        FingerprintContext::with_fixed_primes(&[3], 256, n)?
    } else {
        make_context(config, n)?
    };
    let mut report = String::new();

    if let Some(path) = pairs_path {
        let pairs = read_pairs(path, &text, config)?;
        let reference = oracle::naive_batch_lcp(&text, &pairs)?;
        let got = batch_lcp(&text, &pairs, &ctx, config.alpha)?;
        if let Some(k) = (0..pairs.len()).find(|&k| got.lcps[k] != reference[k]) {
            let (i, j) = pairs[k];
            report.push_str(&format!(
                "divergence at pair {k} ({}, {}): lcp {} vs oracle {}\n",
                pos_out(i, config.zero_based),
                pos_out(j, config.zero_based),
                got.lcps[k],
                reference[k]
            ));
            emit(config, out, report.as_bytes())?;
            return Err(Error::Internal("LCP results diverge from oracle".into()));
        }
        report.push_str(&format!("ok: {} pairs match the oracle\n", pairs.len()));
    }

    if let Some(spec) = positions_spec {
        let positions = resolve_positions(spec, &text, config)?;
        let reference = oracle::naive_sort(&text, &positions)?;
        let (ssa, _) = sort_suffixes_with_stats(
            &text,
            &positions,
            &ctx,
            config.alpha,
            generate::derive_seed(config.seed, 0x706976),
        )?;
        if let Some(t) = (0..ssa.sa.len()).find(|&t| {
            ssa.sa[t] != reference.sa[t]
                || (t > 0 && ssa.adj_lcp[t - 1] != reference.adj_lcp[t - 1])
        }) {
            report.push_str(&format!(
                "divergence at rank {t}: position {} vs oracle {}\n",
                pos_out(ssa.sa[t], config.zero_based),
                pos_out(reference.sa[t], config.zero_based),
            ));
            emit(config, out, report.as_bytes())?;
            return Err(Error::Internal("suffix array diverges from oracle".into()));
        }
        report.push_str(&format!(
            "ok: suffix array of {} positions matches the oracle\n",
            positions.len()
        ));

        let tree = build_tree(&text, &ssa)?;
        let faults = validate_tree(&tree, &text, &ssa);
        if !faults.is_empty() {
            report.push_str(&format!("divergence: {}\n", faults.join("; ")));
            emit(config, out, report.as_bytes())?;
            return Err(Error::Internal("tree validation failed".into()));
        }
        let ref_tree = oracle::naive_tree(&text, &positions)?;
        if ref_tree.canonical_string(&text) != tree.canonical_string(&text) {
            report.push_str("divergence: tree shape differs from oracle\n");
            emit(config, out, report.as_bytes())?;
            return Err(Error::Internal("tree diverges from oracle".into()));
        }
        report.push_str(&format!(
            "ok: suffix tree with {} leaves matches the oracle\n",
            tree.leaf_count
        ));
    }

    emit(config, out, report.as_bytes())
}

fn cmd_bench(args: &BenchArgs, out: &mut dyn Write) -> Result<()> {
    if args.grid_alpha.iter().any(|&a| a < 2) {
        return Err(Error::InvalidParameter("alpha < 2 in grid".into()));
    }
    let mut csv = String::from(bench::CSV_HEADER);
    csv.push('\n');
    for &n in &args.grid_n {
        for &b in &args.grid_b {
            for &alpha in &args.grid_alpha {
                let row = bench::run_cell(n, b, alpha, args.seed, args.reps)?;
                csv.push_str(&row.csv_line());
                csv.push('\n');
            }
        }
    }
    match &args.out {
        Some(path) => fs::write(path, csv.as_bytes())?,
        None => out.write_all(csv.as_bytes())?,
    }
    Ok(())
}

/// Printable rendering of an edge label; non-printable bytes appear as
/// \xHH and the terminator as `$`.
pub fn edge_label(text: &Text, edge: &Edge) -> String {
    let mut s = String::new();
    if edge.text_len() > 0 {
        for p in edge.start..=edge.end {
            let b = text.byte(p);
            if (0x20..0x7f).contains(&b) && b != b'"' && b != b'\\' {
                s.push(b as char);
            } else {
                s.push_str(&format!("\\x{b:02x}"));
            }
        }
    }
    if edge.terminator {
        s.push('$');
    }
    s
}

/// Nested-object JSON rendering of the tree.
pub fn render_tree_json(tree: &SparseSuffixTree, zero_based: bool) -> String {
    fn node_json(tree: &SparseSuffixTree, id: NodeId, zb: bool) -> serde_json::Value {
        let node = tree.node(id);
        let children: Vec<serde_json::Value> = node
            .children
            .iter()
            .map(|e| {
                let mut edge = serde_json::Map::new();
                if e.text_len() > 0 {
                    edge.insert("start".into(), json!(pos_out(e.start, zb)));
                    edge.insert("end".into(), json!(pos_out(e.end, zb)));
                }
                edge.insert("terminator".into(), json!(e.terminator));
                edge.insert("child".into(), node_json(tree, e.child, zb));
                serde_json::Value::Object(edge)
            })
            .collect();
        let mut obj = serde_json::Map::new();
        obj.insert("length".into(), json!(node.length));
        if let Some(pos) = node.leaf_pos {
            obj.insert("leaf_pos".into(), json!(pos_out(pos, zb)));
        }
        obj.insert("children".into(), json!(children));
        serde_json::Value::Object(obj)
    }
    let v = json!({
        "n": tree.n,
        "b": tree.leaf_count,
        "root": node_json(tree, tree.root, zero_based),
    });
    format!("{}\n", serde_json::to_string_pretty(&v).unwrap())
}

/// GraphViz rendering: internal nodes are circles labeled with their path
/// length, leaves are boxes labeled with their position.
pub fn render_tree_dot(tree: &SparseSuffixTree, text: &Text, zero_based: bool) -> String {
    let mut s = String::from("digraph sparse_suffix_tree {\n  node [fontname=\"monospace\"];\n");
    for (id, node) in tree.nodes.iter().enumerate() {
        match node.leaf_pos {
            Some(pos) => s.push_str(&format!(
                "  n{id} [label=\"{}\" shape=box];\n",
                pos_out(pos, zero_based)
            )),
            None => s.push_str(&format!("  n{id} [label=\"len {}\"];\n", node.length)),
        }
    }
    // edges in DFS order for readability
    fn edges(tree: &SparseSuffixTree, text: &Text, id: NodeId, s: &mut String) {
        for e in &tree.node(id).children {
            s.push_str(&format!(
                "  n{id} -> n{} [label=\"{}\"];\n",
                e.child,
                edge_label(text, e)
            ));
            edges(tree, text, e.child, s);
        }
    }
    edges(tree, text, tree.root, &mut s);
    s.push_str("}\n");
    s
}

/// Indented plain-text rendering.
pub fn render_tree_text(tree: &SparseSuffixTree, text: &Text, zero_based: bool) -> String {
    fn walk(
        tree: &SparseSuffixTree,
        text: &Text,
        id: NodeId,
        indent: usize,
        zb: bool,
        s: &mut String,
    ) {
        let node = tree.node(id);
        for e in &node.children {
            let child = tree.node(e.child);
            s.push_str(&"  ".repeat(indent));
            match child.leaf_pos {
                Some(pos) => s.push_str(&format!(
                    "\"{}\" -> leaf {}\n",
                    edge_label(text, e),
                    pos_out(pos, zb)
                )),
                None => s.push_str(&format!(
                    "\"{}\" -> len {}\n",
                    edge_label(text, e),
                    child.length
                )),
            }
            walk(tree, text, e.child, indent + 1, zb, s);
        }
    }
    let mut s = format!("len 0 ({} leaves)\n", tree.leaf_count);
    walk(tree, text, tree.root, 1, zero_based, &mut s);
    s
}
