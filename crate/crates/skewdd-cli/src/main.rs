//! `skewdd` — exact computations and theorem-verification scans for the skew
//! divided difference calculus on finite Weyl groups.
//!
//! Exit codes: 0 = pass, 1 = a verification found a violation, 2 = usage
//! error. JSON output is byte-identical for identical inputs and seed.

use std::io::{self, Write};

use clap::{Parser, Subcommand};
use serde::Serialize;

use skewdd::braided::BraidedVector;
use skewdd::chaincomb::{r_circ_map, r_map, unique_subsequences};
use skewdd::rootsys::{build_root_system, RootSystem};
use skewdd::skewcalc::{nichols_equal, skew, Route};
use skewdd::verify::{run_suite, Suite, VerifyReport};
use skewdd::weylgroup::{
    canonical_reduced_word, from_word, length, multiply, GroupElement,
};

#[derive(Parser)]
#[command(name = "skewdd", version, about = "Skew divided differences on Weyl groups, exactly")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the positive roots and the Cartan matrix of a type.
    Roots {
        /// Cartan type, e.g. A3, B2, E8.
        #[arg(long = "type")]
        cartan_type: String,
        #[arg(long)]
        json: bool,
    },
    /// Compute the skew element x_{w/v} of the Nichols algebra.
    Skew {
        #[arg(long = "type")]
        cartan_type: String,
        /// Reduced word of w as comma-separated 1-based indices; empty = identity.
        #[arg(long, default_value = "")]
        w: String,
        /// Word of v; empty = identity.
        #[arg(long, default_value = "")]
        v: String,
        /// coproduct | positive | positive_circ | sbar | recursive | all
        #[arg(long, default_value = "coproduct")]
        route: String,
        /// Cross-check all routes for equality in the Nichols quotient.
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        json: bool,
    },
    /// Run a verification suite and report pass / violation / vacuous.
    Verify {
        /// positivity | one-property | monomial2 | leibniz | shuffle |
        /// interval2 | classify-roots | chains
        suite: String,
        #[arg(long = "type")]
        cartan_type: String,
        /// Sample or pair count override for sampled suites.
        #[arg(long)]
        bound: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Worker threads for the scan (default: all cores).
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Staged-deletion sequences and reduced-word images for v inside a
    /// reduced word of w.
    Chains {
        #[arg(long = "type")]
        cartan_type: String,
        /// Reduced word of w (comma-separated 1-based indices).
        #[arg(long)]
        w: String,
        /// Word of v; empty = identity.
        #[arg(long, default_value = "")]
        v: String,
        #[arg(long)]
        json: bool,
    },
}

enum CliError {
    Usage(String),
    Io(io::Error),
}

impl From<String> for CliError {
    fn from(m: String) -> Self {
        CliError::Usage(m)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

fn main() {
    let cli = Cli::parse();
    let mut stdout = io::stdout().lock();
    let code = match run(cli, &mut stdout) {
        Ok(code) => code,
        // A closed read end (`skewdd ... | head`) is not an error.
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => 0,
        Err(CliError::Io(e)) => {
            eprintln!("error: {e}");
            2
        }
        Err(CliError::Usage(message)) => {
            eprintln!("error: {message}");
            2
        }
    };
    if let Err(e) = stdout.flush() {
        if e.kind() != io::ErrorKind::BrokenPipe && code == 0 {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
    }
    std::process::exit(code);
}

fn run(cli: Cli, out: &mut impl Write) -> Result<i32, CliError> {
    match cli.command {
        Command::Roots { cartan_type, json } => cmd_roots(out, &cartan_type, json),
        Command::Skew {
            cartan_type,
            w,
            v,
            route,
            verify,
            json,
        } => cmd_skew(out, &cartan_type, &w, &v, &route, verify, json),
        Command::Verify {
            suite,
            cartan_type,
            bound,
            seed,
            jobs,
            json,
        } => cmd_verify(out, &cartan_type, &suite, bound, seed, jobs, json),
        Command::Chains {
            cartan_type,
            w,
            v,
            json,
        } => cmd_chains(out, &cartan_type, &w, &v, json),
    }
}

fn parse_word(s: &str, rank: usize) -> Result<Vec<usize>, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            let i: usize = tok
                .trim()
                .parse()
                .map_err(|_| format!("`{tok}` is not a simple-root index"))?;
            if i == 0 || i > rank {
                return Err(format!("index {i} is out of range 1..={rank}"));
            }
            Ok(i - 1)
        })
        .collect()
}

fn one_based(word: &[usize]) -> Vec<usize> {
    word.iter().map(|&i| i + 1).collect()
}

#[derive(Serialize)]
struct RootOut {
    index: usize,
    coeffs: Vec<i64>,
    height: i64,
}

#[derive(Serialize)]
struct RootsOut {
    #[serde(rename = "type")]
    cartan_type: String,
    rank: usize,
    simply_laced: bool,
    cartan_matrix: Vec<Vec<i64>>,
    count: usize,
    positive_roots: Vec<RootOut>,
}

fn cmd_roots(out: &mut impl Write, cartan_type: &str, json: bool) -> Result<i32, CliError> {
    let rs = build_root_system(cartan_type).map_err(|e| e.to_string())?;
    let listing = RootsOut {
        cartan_type: rs.cartan_type.to_string(),
        rank: rs.rank(),
        simply_laced: rs.cartan_type.is_simply_laced(),
        cartan_matrix: rs.cartan_matrix.clone(),
        count: rs.positive_roots.len(),
        positive_roots: rs
            .positive_roots
            .iter()
            .enumerate()
            .map(|(index, r)| RootOut {
                index,
                coeffs: r.coeffs.clone(),
                height: r.height(),
            })
            .collect(),
    };
    if json {
        writeln!(out, "{}", serde_json::to_string(&listing).map_err(|e| e.to_string())?)?;
    } else {
        writeln!(out, "type {}: {} positive roots", listing.cartan_type, listing.count)?;
        for r in &listing.positive_roots {
            writeln!(out, "  {:>3}: ({})  height {}", r.index, join_i64(&r.coeffs), r.height)?;
        }
        writeln!(out, "Cartan matrix:")?;
        for row in &listing.cartan_matrix {
            writeln!(out, "  [{}]", join_i64(row))?;
        }
    }
    Ok(0)
}

fn join_i64(v: &[i64]) -> String {
    v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
}

#[derive(Serialize)]
struct TermOut {
    coeff: String,
    word: Vec<Vec<i64>>,
}

#[derive(Serialize)]
struct SkewOut {
    #[serde(rename = "type")]
    cartan_type: String,
    w: Vec<usize>,
    v: Vec<usize>,
    comparable: bool,
    degree: i64,
    w_degree: Vec<usize>,
    route: String,
    terms: Vec<TermOut>,
    routes_checked: Vec<String>,
    equal_in_nichols: Option<bool>,
}

fn terms_out(rs: &RootSystem, x: &BraidedVector) -> Vec<TermOut> {
    x.terms
        .iter()
        .map(|(word, coeff)| TermOut {
            coeff: coeff.to_string(),
            word: word
                .iter()
                .map(|&idx| rs.root_at(idx as usize).coeffs.clone())
                .collect(),
        })
        .collect()
}

fn cmd_skew(
    out: &mut impl Write,
    cartan_type: &str,
    w_csv: &str,
    v_csv: &str,
    route: &str,
    verify: bool,
    json: bool,
) -> Result<i32, CliError> {
    let rs = build_root_system(cartan_type).map_err(|e| e.to_string())?;
    let w = from_word(&rs, &parse_word(w_csv, rs.rank())?);
    let v = from_word(&rs, &parse_word(v_csv, rs.rank())?);
    let comparable = skewdd::weylgroup::bruhat_leq(&rs, &v, &w);
    let cross_check = verify || route == "all";
    let main_route = if route == "all" {
        Route::Coproduct
    } else {
        Route::parse(route).map_err(|e| e.to_string())?
    };
    let x = skew(&rs, &w, &v, main_route).map_err(|e| e.to_string())?;
    let mut routes_checked = vec![main_route.name().to_string()];
    let mut equal = None;
    if cross_check {
        routes_checked = Route::ALL.iter().map(|r| r.name().to_string()).collect();
        let mut all_equal = true;
        let mut prev = skew(&rs, &w, &v, Route::ALL[0]).map_err(|e| e.to_string())?;
        for &r in &Route::ALL[1..] {
            let next = skew(&rs, &w, &v, r).map_err(|e| e.to_string())?;
            if !nichols_equal(&rs, &prev, &next) {
                all_equal = false;
            }
            prev = next;
        }
        equal = Some(all_equal);
    }
    let element = SkewOut {
        cartan_type: rs.cartan_type.to_string(),
        w: one_based(&canonical_reduced_word(&rs, &w)),
        v: one_based(&canonical_reduced_word(&rs, &v)),
        comparable,
        degree: length(&rs, &w) as i64 - length(&rs, &v) as i64,
        w_degree: one_based(&canonical_reduced_word(&rs, &multiply(&w, &v.inverse()))),
        route: main_route.name().to_string(),
        terms: terms_out(&rs, &x),
        routes_checked,
        equal_in_nichols: equal,
    };
    if json {
        writeln!(out, "{}", serde_json::to_string(&element).map_err(|e| e.to_string())?)?;
    } else {
        writeln!(
            out,
            "skew element over {}: w={:?} v={:?} (degree {}, group degree {:?})",
            element.cartan_type, element.w, element.v, element.degree, element.w_degree
        )?;
        if element.terms.is_empty() {
            writeln!(out, "  0")?;
        }
        for t in &element.terms {
            let factors: Vec<String> = t.word.iter().map(|c| format!("x({})", join_i64(c))).collect();
            if factors.is_empty() {
                writeln!(out, "  {} · 1", t.coeff)?;
            } else {
                writeln!(out, "  {} · {}", t.coeff, factors.join(" "))?;
            }
        }
        if let Some(eq) = element.equal_in_nichols {
            writeln!(
                out,
                "routes {}: {}",
                element.routes_checked.join(", "),
                if eq { "all equal in the Nichols quotient" } else { "MISMATCH" }
            )?;
        }
    }
    Ok(if equal == Some(false) { 1 } else { 0 })
}

fn cmd_verify(
    out: &mut impl Write,
    cartan_type: &str,
    suite: &str,
    bound: Option<u64>,
    seed: u64,
    jobs: Option<usize>,
    json: bool,
) -> Result<i32, CliError> {
    let rs = build_root_system(cartan_type).map_err(|e| e.to_string())?;
    let suite = Suite::parse(suite).map_err(|e| e.to_string())?;
    let report = match jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| e.to_string())?
            .install(|| run_suite(&rs, suite, bound, seed)),
        None => run_suite(&rs, suite, bound, seed),
    }
    .map_err(|e| e.to_string())?;
    if json {
        writeln!(out, "{}", serde_json::to_string(&report).map_err(|e| e.to_string())?)?;
    } else {
        print_report(out, &report)?;
    }
    Ok(if report.status == "violation" { 1 } else { 0 })
}

fn print_report(out: &mut impl Write, report: &VerifyReport) -> io::Result<()> {
    writeln!(
        out,
        "suite {} on {}: {} (cases {}, hypothesis hits {}, violations {}, expected counterexamples {})",
        report.suite,
        report.cartan_type,
        report.status,
        report.cases_checked,
        report.hypothesis_hits,
        report.violations.len(),
        report.expected_counterexamples.len(),
    )?;
    for scan in &report.scans {
        writeln!(
            out,
            "  scan {}: cases {}, hits {}, violations {}",
            scan.theorem,
            scan.cases_checked,
            scan.hypothesis_hits,
            scan.violations.len()
        )?;
    }
    for line in &report.details {
        writeln!(out, "  note: {line}")?;
    }
    for line in &report.expected_counterexamples {
        writeln!(out, "  expected: {line}")?;
    }
    for line in &report.violations {
        writeln!(out, "  VIOLATION: {line}")?;
    }
    writeln!(out, "  wall: {} ms", report.wall.as_millis())
}

#[derive(Serialize)]
struct ChainsOut {
    #[serde(rename = "type")]
    cartan_type: String,
    w_word: Vec<usize>,
    v_word: Vec<usize>,
    j_seq: Vec<usize>,
    k_seq: Vec<usize>,
    r_image: Vec<usize>,
    r_circ_image: Vec<usize>,
}

fn cmd_chains(
    out: &mut impl Write,
    cartan_type: &str,
    w_csv: &str,
    v_csv: &str,
    json: bool,
) -> Result<i32, CliError> {
    let rs = build_root_system(cartan_type).map_err(|e| e.to_string())?;
    let word = parse_word(w_csv, rs.rank())?;
    let v_word = parse_word(v_csv, rs.rank())?;
    if length(&rs, &from_word(&rs, &word)) != word.len() {
        return Err(format!("--w {:?} is not a reduced word", one_based(&word)).into());
    }
    let v: GroupElement = from_word(&rs, &v_word);
    let (j, k) = unique_subsequences(&rs, &word, &v).map_err(|e| e.to_string())?;
    let r_image = r_map(&rs, &word, &v).map_err(|e| e.to_string())?;
    let r_circ_image = r_circ_map(&rs, &word, &v).map_err(|e| e.to_string())?;
    let deletions = ChainsOut {
        cartan_type: rs.cartan_type.to_string(),
        w_word: one_based(&word),
        v_word: one_based(&v_word),
        r_image: one_based(&r_image),
        r_circ_image: one_based(&r_circ_image),
        j_seq: j,
        k_seq: k,
    };
    if json {
        writeln!(out, "{}", serde_json::to_string(&deletions).map_err(|e| e.to_string())?)?;
    } else {
        writeln!(
            out,
            "staged deletions over {}: w word {:?}, v word {:?}",
            deletions.cartan_type, deletions.w_word, deletions.v_word
        )?;
        writeln!(
            out,
            "  j = {:?} (delete, smallest first)  ->  r image {:?}",
            deletions.j_seq, deletions.r_image
        )?;
        writeln!(
            out,
            "  k = {:?} (delete, largest first)   ->  r° image {:?}",
            deletions.k_seq, deletions.r_circ_image
        )?;
    }
    Ok(0)
}
