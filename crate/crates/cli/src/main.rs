//! `forkalg`: build, query and verify the graded fork diagram algebras.

mod suites;

use std::fs;
use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use forkalg::algebra::{BasisElement, Element};
use forkalg::diagrams::orientations;
use forkalg::functors::FunctorPair;
use forkalg::hecke::{factorial, wk_z, KlTable};
use forkalg::repr::decomposition_matrix;
use forkalg::weights::block;
use forkalg::{Error, Int, IntDiagramAlgebra, LaurentV, Result};
use serde_json::{json, Value};

use suites::Suite;

#[derive(Parser, Debug)]
#[command(name = "forkalg", version, about = "Exact computations with the graded fork diagram algebras A_{n,k}")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value = "text")]
    format: Format,
    /// Worker threads (defaults to the number of cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Write the output to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Tsv,
}

/// `n` and `k`, given positionally or as `--n`/`--k`.
#[derive(Args, Debug)]
struct Size {
    #[arg(value_name = "N")]
    n_pos: Option<usize>,
    #[arg(value_name = "K")]
    k_pos: Option<usize>,
    #[arg(long = "n", conflicts_with = "n_pos")]
    n: Option<usize>,
    #[arg(long = "k", conflicts_with = "k_pos")]
    k: Option<usize>,
}

impl Size {
    fn n(&self) -> Result<usize> {
        self.n.or(self.n_pos).ok_or_else(|| Error::Parse("missing n".into()))
    }

    fn k(&self) -> Result<usize> {
        self.k.or(self.k_pos).ok_or_else(|| Error::Parse("missing k".into()))
    }

    fn nk(&self) -> Result<(usize, usize)> {
        let (n, k) = (self.n()?, self.k()?);
        if k > n {
            return Err(Error::Parse(format!("k = {k} exceeds n = {n}")));
        }
        Ok((n, k))
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the weights of a block with their encodings and the dimension of A_{n,k}.
    Enumerate(Size),
    /// Multiply two basis elements, e.g. "(lower=^v^ eta=^v^ sigma=1 upper=v^^)".
    Mult { n: usize, k: usize, x: String, y: String },
    /// Run verification suites; exits with status 1 on any failure.
    Verify {
        #[arg(value_enum, value_name = "SUITE")]
        suite_pos: Option<Suite>,
        #[arg(long = "suite", value_enum, conflicts_with = "suite_pos")]
        suite: Option<Suite>,
        #[command(flatten)]
        size: Size,
    },
    /// Write the basis and structure constants of A_{n,k} as JSON.
    Export(Size),
    /// Kazhdan-Lusztig basis elements C_{w_k z} for the weights of a block.
    Kl(Size),
    /// Graded Cartan matrix grdim e_lambda A e_mu.
    Cartan(Size),
    /// Graded decomposition numbers d_{lambda,mu}.
    Decomposition(Size),
    /// Graded dimensions of the center of e A_{n,k} e, of End(F_k) and of C[x]/I_k.
    Center(Size),
}

struct Output {
    text: String,
    failed: bool,
}

fn ok(text: String) -> Result<Output> {
    Ok(Output { text, failed: false })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let result = run(&cli).and_then(|out| {
        match &cli.out {
            Some(path) => fs::write(path, &out.text)?,
            None => io::stdout().write_all(out.text.as_bytes())?,
        }
        Ok(out.failed)
    });
    match result {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Parse(_) | Error::Invalid(_) | Error::Cap { .. } | Error::VariableCount { .. } => {
                    ExitCode::from(2)
                }
                _ => ExitCode::from(1),
            }
        }
    }
}

fn run(cli: &Cli) -> Result<Output> {
    let f = cli.format;
    match &cli.command {
        Command::Enumerate(s) => enumerate(s.nk()?, f),
        Command::Mult { n, k, x, y } => mult(*n, *k, x, y, f),
        Command::Verify { suite_pos, suite, size } => {
            let suite = suite.or(*suite_pos).ok_or_else(|| Error::Parse("missing suite".into()))?;
            let n = size.n()?;
            let ks: Vec<usize> = match size.k.or(size.k_pos) {
                Some(k) if k > n => return Err(Error::Parse(format!("k = {k} exceeds n = {n}"))),
                Some(k) => vec![k],
                None => (0..=n).collect(),
            };
            verify(suite, n, &ks, f)
        }
        Command::Export(s) => {
            let (n, k) = s.nk()?;
            let alg = IntDiagramAlgebra::build(n, k)?;
            alg.compute_all_products();
            let mut text = alg.export()?.to_json()?;
            text.push('\n');
            ok(text)
        }
        Command::Kl(s) => kl(s.nk()?, f),
        Command::Cartan(s) => {
            let (n, k) = s.nk()?;
            let alg = IntDiagramAlgebra::build(n, k)?;
            matrix(&alg, &alg.graded_cartan(), f)
        }
        Command::Decomposition(s) => {
            let (n, k) = s.nk()?;
            let alg = IntDiagramAlgebra::build(n, k)?;
            matrix(&alg, &decomposition_matrix(&alg), f)
        }
        Command::Center(s) => center(s.nk()?, f),
    }
}

fn table(header: &[&str], rows: &[Vec<String>], f: Format) -> String {
    let sep = if f == Format::Tsv { "\t" } else { "  " };
    let mut out = String::new();
    if f == Format::Text {
        let widths: Vec<usize> = (0..header.len())
            .map(|c| rows.iter().map(|r| r[c].len()).chain([header[c].len()]).max().unwrap_or(0))
            .collect();
        let line = |cells: Vec<&str>| {
            let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
            padded.join(sep).trim_end().to_string() + "\n"
        };
        out += &line(header.to_vec());
        for r in rows {
            out += &line(r.iter().map(String::as_str).collect());
        }
    } else {
        out += &(header.join(sep) + "\n");
        for r in rows {
            out += &(r.join(sep) + "\n");
        }
    }
    out
}

fn json_text(v: Value) -> Result<Output> {
    ok(serde_json::to_string_pretty(&v)? + "\n")
}

fn list(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

fn enumerate((n, k): (usize, usize), f: Format) -> Result<Output> {
    let weights = block(n, k)?;
    let mut dim: u64 = 0;
    for a in &weights {
        for b in &weights {
            dim += orientations(a, b).len() as u64;
        }
    }
    dim *= factorial(k);
    let rows: Vec<Vec<String>> = weights
        .iter()
        .map(|w| {
            vec![
                w.to_string(),
                list(&w.vee_pos()),
                list(&w.wedge_dist()),
                list(&w.vee_dist()),
                w.b_seq().to_string(),
                w.defect().to_string(),
                w.length().to_string(),
            ]
        })
        .collect();
    if f == Format::Json {
        let ws: Vec<Value> = weights
            .iter()
            .map(|w| {
                json!({
                    "weight": w.to_string(),
                    "down_positions": w.vee_pos(),
                    "up_distances": w.wedge_dist(),
                    "down_distances": w.vee_dist(),
                    "b": w.b_seq().0,
                    "defect": w.defect(),
                    "length": w.length(),
                })
            })
            .collect();
        return json_text(json!({ "n": n, "k": k, "weights": ws, "dimension": dim }));
    }
    let mut text = table(&["weight", "downs", "z_up", "z_down", "b", "defect", "length"], &rows, f);
    text += &format!("{} weights, dim A_({n},{k}) = {dim}\n", weights.len());
    ok(text)
}

fn mult(n: usize, k: usize, x: &str, y: &str, f: Format) -> Result<Output> {
    let alg = IntDiagramAlgebra::build(n, k)?;
    let find = |s: &str| -> Result<usize> {
        let b = BasisElement::parse(s)?;
        alg.index_of(&b).ok_or_else(|| Error::Parse(format!("{s} is not a basis element of A_({n},{k})")))
    };
    let (i, j) = (find(x)?, find(y)?);
    let note =
        (alg.upper_of(i) != alg.lower_of(j)).then(|| "upper weight of x differs from lower weight of y".to_string());
    let p = alg.mul(&Element::basis(i), &Element::basis(j));
    if f == Format::Json {
        let terms: Vec<Value> =
            p.terms().map(|(t, c)| json!({ "basis": alg.element(t).to_string(), "coeff": c.to_string() })).collect();
        return json_text(
            json!({ "x": alg.element(i).to_string(), "y": alg.element(j).to_string(), "product": terms, "note": note }),
        );
    }
    let mut text = if f == Format::Tsv {
        p.terms().map(|(t, c)| format!("{c}\t{}\n", alg.element(t))).collect()
    } else {
        alg.render(&p) + "\n"
    };
    if let (Some(note), Format::Text) = (note, f) {
        text += &format!("note: {note}\n");
    }
    ok(text)
}

fn verify(suite: Suite, n: usize, ks: &[usize], f: Format) -> Result<Output> {
    let checks = suites::run(suite, n, ks)?;
    let failed = checks.iter().any(|c| !c.passed);
    let text = match f {
        Format::Json => {
            let v: Vec<Value> = checks
                .iter()
                .map(|c| json!({ "suite": c.suite, "check": c.name, "passed": c.passed, "detail": c.detail }))
                .collect();
            serde_json::to_string_pretty(&json!({ "passed": !failed, "checks": v }))? + "\n"
        }
        _ => {
            let rows: Vec<Vec<String>> = checks
                .iter()
                .map(|c| {
                    let status = if c.passed { "PASS" } else { "FAIL" };
                    vec![status.into(), c.suite.into(), c.name.clone(), c.detail.clone()]
                })
                .collect();
            table(&["status", "suite", "check", "detail"], &rows, f)
        }
    };
    Ok(Output { text, failed })
}

fn kl((n, k): (usize, usize), f: Format) -> Result<Output> {
    let cap = forkalg::size_cap();
    if n > cap {
        return Err(Error::Cap { n, cap });
    }
    let table_kl = KlTable::<Int>::new(n);
    let rows: Vec<Vec<String>> = block(n, k)?
        .iter()
        .map(|z| {
            let w = wk_z(z);
            vec![z.to_string(), w.to_string(), table_kl.canonical(&w).to_string()]
        })
        .collect();
    if f == Format::Json {
        let v: Vec<Value> = rows.iter().map(|r| json!({ "weight": r[0], "w": r[1], "canonical": r[2] })).collect();
        return json_text(json!({ "n": n, "k": k, "elements": v }));
    }
    ok(table(&["weight", "w_k z", "C_w"], &rows, f))
}

fn matrix(alg: &IntDiagramAlgebra, m: &[Vec<LaurentV>], f: Format) -> Result<Output> {
    let names: Vec<String> = alg.weights().iter().map(ToString::to_string).collect();
    if f == Format::Json {
        let rows: Vec<Vec<String>> = m.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect();
        return json_text(json!({ "n": alg.n(), "k": alg.k(), "weights": names, "matrix": rows }));
    }
    let mut header = vec![""];
    header.extend(names.iter().map(String::as_str));
    let rows: Vec<Vec<String>> = m
        .iter()
        .zip(&names)
        .map(|(r, name)| std::iter::once(name.clone()).chain(r.iter().map(ToString::to_string)).collect())
        .collect();
    ok(table(&header, &rows, f))
}

fn center((n, k): (usize, usize), f: Format) -> Result<Output> {
    if k >= n {
        return Err(Error::Parse(format!("center needs k < n, got n={n} k={k}")));
    }
    let fp = FunctorPair::<Int>::build(n, k)?;
    let r = forkalg::functors::center_vs_presentation(&fp.small, &fp.big, &fp.psi);
    let failed = !r.passed();
    let text = if f == Format::Json {
        serde_json::to_string_pretty(&json!({
            "n": n,
            "k": k,
            "center": r.center.to_string(),
            "end_f": r.end_f.to_string(),
            "presentation": r.presentation.to_string(),
            "stabilization_degree": r.stabilization_degree,
            "equal": !failed,
        }))? + "\n"
    } else {
        let rows = vec![
            vec!["center".into(), r.center.to_string()],
            vec!["End(F)".into(), r.end_f.to_string()],
            vec!["C[x]/I_k".into(), r.presentation.to_string()],
            vec!["vanishes from degree".into(), r.stabilization_degree.to_string()],
            vec!["equal".into(), (!failed).to_string()],
        ];
        table(&["quantity", "value"], &rows, f)
    };
    Ok(Output { text, failed })
}
