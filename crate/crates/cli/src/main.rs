use std::fmt::Write as _;
use std::io::Write as _;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use shifted_homology::chain::{build_complex_with, DEFAULT_CELL_CAP};
use shifted_homology::shapes::{bruhat_covers, cells_by_dimension, PartitionRecord};
use shifted_homology::weyl::{fill_diagram_roots, DiagramBox};
use shifted_homology::{
    coefficient, enumerate_removals, kappa_closed_form, partition_to_permutation, row_reading_word,
    verify_spec, ChainComplex, DType, DoublePartition, Error, Family, GrassmannianSpec,
    HalfShiftedDiagram, HomologyGroup, Orientation,
};

#[derive(Parser)]
#[command(
    name = "shifted-homology",
    version,
    about = "Integral homology of real isotropic and orthogonal Grassmannians"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Homology groups, one per degree.
    Homology(Common),
    /// Boundary matrices, or the boundary of one cell when a partition is given.
    Boundary {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        cell: CellArgs,
    },
    /// Half-shifted diagram of one cell with its permutation, word and roots.
    Diagram {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        cell: CellArgs,
    },
    /// Checks every closed-form coefficient against the root-system oracles.
    Verify(Common),
    /// Lists the cells by dimension.
    Enumerate(Common),
}

#[derive(Args)]
struct Common {
    #[arg(long, value_parser = parse_family)]
    family: Family,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long, value_enum, default_value_t = Output::Text)]
    output: Output,
    /// Shorthand for `--output json`.
    #[arg(long)]
    json: bool,
    #[arg(long, default_value_t = DEFAULT_CELL_CAP)]
    cell_cap: usize,
    /// Seed for randomized word checks.
    #[arg(long)]
    seed: Option<u64>,
    /// Reject n below the family minimum instead of warning.
    #[arg(long)]
    strict: bool,
}

#[derive(Args)]
struct CellArgs {
    /// Top partition, e.g. `5,5,4`.
    #[arg(long, value_delimiter = ',')]
    alpha: Vec<usize>,
    /// Bottom strict partition, e.g. `8,7,4,1`.
    #[arg(long, value_delimiter = ',')]
    lambda: Vec<usize>,
    /// Type of a D cell: 0, 1 or 2.
    #[arg(long, value_parser = clap::value_parser!(u8).range(0..=2))]
    dtype: Option<u8>,
}

impl CellArgs {
    fn given(&self) -> bool {
        !self.alpha.is_empty() || !self.lambda.is_empty() || self.dtype.is_some()
    }

    fn partition(&self, spec: &GrassmannianSpec) -> Result<DoublePartition, Failure> {
        let dtype = self
            .dtype
            .map(|t| DType::try_from(t).expect("range checked by clap"));
        Ok(spec.partition(&self.alpha, &self.lambda, dtype)?)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
    Csv,
}

fn parse_family(s: &str) -> Result<Family, String> {
    Family::parse(s).ok_or_else(|| format!("unknown family `{s}`, expected B, C or D"))
}

enum Failure {
    Mismatch(String),
    Usage(String),
    Cap(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CellCapExceeded { .. } => Failure::Cap(e.to_string()),
            Error::InvalidSpec(_) | Error::InvalidPartition(_) => Failure::Usage(e.to_string()),
            _ => Failure::Mismatch(e.to_string()),
        }
    }
}

impl Common {
    fn output(&self) -> Output {
        if self.json {
            Output::Json
        } else {
            self.output
        }
    }

    fn spec(&self) -> Result<GrassmannianSpec, Failure> {
        let spec = GrassmannianSpec::new(self.family, self.n, self.k)?;
        let min = match self.family {
            Family::B => 3,
            Family::C => 2,
            Family::D => 4,
        };
        if self.n < min {
            let msg = format!(
                "type {} is defined for n >= {min}, got n = {}",
                self.family, self.n
            );
            if self.strict {
                return Err(Failure::Usage(msg));
            }
            eprintln!("warning: {msg}; continuing");
        }
        Ok(spec)
    }

    fn complex(&self, spec: &GrassmannianSpec) -> Result<ChainComplex, Failure> {
        Ok(build_complex_with(
            spec,
            self.cell_cap,
            &Orientation::RowReading,
        )?)
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("plain data serializes")
}

fn cmd_homology(c: &Common) -> Result<String, Failure> {
    let spec = c.spec()?;
    let h = c.complex(&spec)?.homology()?;
    Ok(match c.output() {
        Output::Json => {
            #[derive(Serialize)]
            struct Report<'a> {
                #[serde(rename = "H")]
                h: &'a [HomologyGroup],
            }
            serde_json::to_string(&Report { h: &h }).expect("plain data serializes")
        }
        Output::Csv => {
            let mut s = String::from("degree,betti,torsion\n");
            for g in &h {
                writeln!(s, "{},{},{}", g.degree, g.betti, g.torsion_string()).unwrap();
            }
            s
        }
        Output::Text => {
            let mut s = format!("{spec}\n");
            writeln!(
                s,
                "{:>6}  {:>5}  {:<12}  group",
                "degree", "betti", "torsion"
            )
            .unwrap();
            for g in &h {
                let t = g.torsion_string();
                writeln!(
                    s,
                    "{:>6}  {:>5}  {:<12}  {g}",
                    g.degree,
                    g.betti,
                    if t.is_empty() { "-" } else { &t }
                )
                .unwrap();
            }
            s
        }
    })
}

fn cmd_boundary(c: &Common, cell: &CellArgs) -> Result<String, Failure> {
    let spec = c.spec()?;
    if cell.given() {
        return cell_boundary(c, &spec, &cell.partition(&spec)?);
    }
    let complex = c.complex(&spec)?;
    Ok(match c.output() {
        Output::Json => complex.to_json(),
        Output::Csv => {
            let mut s = String::from("degree,row,col,value\n");
            for (d, m) in complex.boundaries.iter().enumerate().skip(1) {
                for (r, col, v) in m.entries() {
                    writeln!(s, "{d},{r},{col},{v}").unwrap();
                }
            }
            s
        }
        Output::Text => {
            let mut s = String::new();
            for (d, m) in complex.boundaries.iter().enumerate().skip(1) {
                writeln!(
                    s,
                    "d_{d}: C_{d} ({}) -> C_{} ({}), {} nonzero",
                    m.cols(),
                    d - 1,
                    m.rows(),
                    m.nnz()
                )
                .unwrap();
                for col in 0..m.cols() {
                    let terms: Vec<String> = m
                        .column(col)
                        .iter()
                        .map(|(r, v)| format!("{v:+} {}", complex.cells[d - 1][*r]))
                        .collect();
                    if !terms.is_empty() {
                        writeln!(s, "  d {} = {}", complex.cells[d][col], terms.join(" ")).unwrap();
                    }
                }
            }
            s
        }
    })
}

#[derive(Serialize)]
struct Incidence {
    target: PartitionRecord,
    removal: Option<String>,
    kappa: Option<i64>,
    chi: Option<i64>,
    orientation: i64,
    beta: Option<String>,
    c: i64,
}

fn cell_boundary(
    c: &Common,
    spec: &GrassmannianSpec,
    p: &DoublePartition,
) -> Result<String, Failure> {
    let removals = enumerate_removals(spec, p)?;
    let mut rows = Vec::new();
    for (_, target) in bruhat_covers(spec, p)? {
        let rep = coefficient(spec, p, &target)?;
        let removal = removals
            .iter()
            .find(|(_, q)| *q == target)
            .map(|(r, _)| r.to_string());
        rows.push((
            target.to_string(),
            Incidence {
                target: target.to_record(spec),
                removal,
                kappa: rep.kappa,
                chi: rep.chi,
                orientation: rep.orientation,
                beta: rep.beta.map(|b| b.to_string()),
                c: rep.c,
            },
        ));
    }
    rows.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(match c.output() {
        Output::Json => to_json(&rows.iter().map(|(_, i)| i).collect::<Vec<_>>()),
        Output::Csv => {
            let mut s = String::from("target,removal,kappa,chi,orientation,beta,c\n");
            for (t, i) in &rows {
                let opt = |v: Option<i64>| v.map_or(String::new(), |x| x.to_string());
                writeln!(
                    s,
                    "\"{t}\",{},{},{},{},{},{}",
                    i.removal.clone().unwrap_or_default(),
                    opt(i.kappa),
                    opt(i.chi),
                    i.orientation,
                    i.beta.clone().unwrap_or_default(),
                    i.c
                )
                .unwrap();
            }
            s
        }
        Output::Text => {
            let mut s = format!("boundary of {p} in {spec}\n");
            for (t, i) in &rows {
                let opt = |v: Option<i64>| v.map_or("-".to_string(), |x| x.to_string());
                writeln!(
                    s,
                    "  {t:<24} {:<22} kappa {:>3}  chi {:>3}  sign {:+}  beta {:<10} c = {:+}",
                    i.removal
                        .clone()
                        .unwrap_or_else(|| "(not a removal)".into()),
                    opt(i.kappa),
                    opt(i.chi),
                    i.orientation,
                    i.beta.clone().unwrap_or_default(),
                    i.c
                )
                .unwrap();
            }
            s
        }
    })
}

fn box_label(b: &DiagramBox) -> String {
    match b {
        DiagramBox::Top { row, col } => format!("top({row},{col})"),
        DiagramBox::Bottom { row, col } => format!("bottom({row},{col})"),
    }
}

fn cmd_diagram(c: &Common, cell: &CellArgs) -> Result<String, Failure> {
    let spec = c.spec()?;
    let p = cell.partition(&spec)?;
    let diagram = HalfShiftedDiagram::new(&spec, &p)?;
    let w = partition_to_permutation(&spec, &p)?;
    let word = row_reading_word(&spec, &p)?;
    let roots = fill_diagram_roots(&spec, &p)?;
    let removals = enumerate_removals(&spec, &p)?;
    let mut kappas = Vec::new();
    for (rem, target) in &removals {
        kappas.push((
            rem.to_string(),
            target.to_string(),
            kappa_closed_form(&spec, &p, rem)?,
        ));
    }
    Ok(match c.output() {
        Output::Json => {
            #[derive(Serialize)]
            struct Report {
                cell: PartitionRecord,
                dimension: usize,
                permutation: Vec<i32>,
                word: Vec<usize>,
                u: Vec<usize>,
                v: Vec<usize>,
                roots: Vec<(String, String)>,
                removals: Vec<(String, String, i64)>,
            }
            to_json(&Report {
                cell: p.to_record(&spec),
                dimension: p.size(),
                permutation: w.values().to_vec(),
                word: word.letters().to_vec(),
                u: diagram.u.clone(),
                v: diagram.v.clone(),
                roots: roots
                    .iter()
                    .map(|(b, r)| (box_label(b), r.to_string()))
                    .collect(),
                removals: kappas,
            })
        }
        Output::Text | Output::Csv => {
            let mut s = format!("{p} in {spec}, dimension {}\n", p.size());
            if let Some(t) = p.dtype {
                writeln!(s, "type {}", t.as_u8()).unwrap();
            }
            s.push_str(&diagram.render());
            writeln!(s, "permutation {w}").unwrap();
            writeln!(
                s,
                "word {}",
                if word.is_empty() {
                    "(empty)".to_string()
                } else {
                    word.to_string()
                }
            )
            .unwrap();
            if !roots.is_empty() {
                s.push_str("roots:\n");
                for (b, r) in &roots {
                    writeln!(s, "  {:<14} {r}", box_label(b)).unwrap();
                }
            }
            if !kappas.is_empty() {
                s.push_str("removals:\n");
                for (rem, target, kappa) in &kappas {
                    writeln!(s, "  {rem:<22} -> {target:<24} kappa {kappa}").unwrap();
                }
            }
            s
        }
    })
}

fn cmd_verify(c: &Common) -> Result<String, Failure> {
    let spec = c.spec()?;
    let start = Instant::now();
    let report = verify_spec(&spec)?;
    let mut words_checked = None;
    if let Some(seed) = c.seed {
        let base = c.complex(&spec)?.homology()?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let words = shifted_homology::enumerate_cells(&spec)
            .iter()
            .map(|p| partition_to_permutation(&spec, p).map(|w| w.random_reduced_word(&mut rng)))
            .collect::<Result<Vec<_>, _>>()?;
        let other =
            build_complex_with(&spec, c.cell_cap, &Orientation::Words(words))?.homology()?;
        if other != base {
            return Err(Failure::Mismatch(format!(
                "homology with random words (seed {seed}) differs"
            )));
        }
        words_checked = Some(seed);
    }
    let secs = start.elapsed().as_secs_f64();
    let out = match c.output() {
        Output::Json => to_json(&report),
        Output::Csv => format!(
            "cells,removal_pairs,extra_covers,flipped_orientations,mismatches\n{},{},{},{},{}\n",
            report.cells,
            report.removal_pairs,
            report.extra_covers,
            report.flipped_orientations,
            report.mismatches.len()
        ),
        Output::Text => {
            let mut s = format!(
                "pairs: {}, mismatches: {}\n",
                report.pairs(),
                report.mismatches.len()
            );
            writeln!(
                s,
                "{spec}: {} cells, {} box removals, {} other covers, {} with orientation -1",
                report.cells,
                report.removal_pairs,
                report.extra_covers,
                report.flipped_orientations
            )
            .unwrap();
            if let Some(seed) = words_checked {
                writeln!(s, "homology unchanged under random words (seed {seed})").unwrap();
            }
            writeln!(s, "time: {secs:.3}s").unwrap();
            s
        }
    };
    if report.is_clean() {
        Ok(out)
    } else {
        let mut dump = out;
        for m in &report.mismatches {
            writeln!(
                dump,
                "mismatch {} -> {}: removal {:?}, kappa closed {:?} phi {:?} sigma {:?}, beta {:?}: {}",
                m.source, m.target, m.removal, m.kappa_closed, m.kappa_phi, m.kappa_sigma, m.beta, m.reason
            )
            .unwrap();
        }
        Err(Failure::Mismatch(dump))
    }
}

fn cmd_enumerate(c: &Common) -> Result<String, Failure> {
    let spec = c.spec()?;
    let count = spec.cell_count();
    if count > c.cell_cap as u128 {
        return Err(Error::CellCapExceeded {
            count: usize::try_from(count).unwrap_or(usize::MAX),
            cap: c.cell_cap,
        }
        .into());
    }
    let layers = cells_by_dimension(&spec);
    Ok(match c.output() {
        Output::Json => {
            let records: Vec<PartitionRecord> = layers
                .iter()
                .flatten()
                .map(|p| p.to_record(&spec))
                .collect();
            to_json(&records)
        }
        Output::Csv => {
            let mut s = String::from("dimension,cell,permutation\n");
            for p in layers.iter().flatten() {
                writeln!(
                    s,
                    "{},\"{p}\",\"{}\"",
                    p.size(),
                    partition_to_permutation(&spec, p)?
                )
                .unwrap();
            }
            s
        }
        Output::Text => {
            let mut s = format!("{spec}: {count} cells\n");
            for (d, layer) in layers.iter().enumerate() {
                writeln!(s, "dim {d}: {} cells", layer.len()).unwrap();
                for p in layer {
                    writeln!(
                        s,
                        "  {:<28} {}",
                        p.to_string(),
                        partition_to_permutation(&spec, p)?
                    )
                    .unwrap();
                }
            }
            s
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Homology(c) => cmd_homology(c),
        Command::Boundary { common, cell } => cmd_boundary(common, cell),
        Command::Diagram { common, cell } => cmd_diagram(common, cell),
        Command::Verify(c) => cmd_verify(c),
        Command::Enumerate(c) => cmd_enumerate(c),
    };
    match result {
        Ok(mut out) => {
            if !out.ends_with('\n') {
                out.push('\n');
            }
            // A closed pipe (e.g. `| head`) is not an error worth reporting.
            let _ = std::io::stdout().write_all(out.as_bytes());
            ExitCode::SUCCESS
        }
        Err(Failure::Mismatch(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Cap(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
