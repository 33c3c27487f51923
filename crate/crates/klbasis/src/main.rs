//! Batch command-line front end: deterministic JSON/CSV/plain emission for
//! every library capability, with stable exit codes (0 success, 2 invalid
//! input, 3 size cap, 4 internal validation failure, 1 i/o).

use clap::{Args, Parser, Subcommand, ValueEnum};
use klbasis::cells;
use klbasis::coxeter::{build_group, CoxeterMatrix, Element, GroupContext, DEFAULT_CAP};
use klbasis::fourier;
use klbasis::hecke::{self, KLTable};
use klbasis::poly::LaurentPolynomial;
use klbasis::sl2;
use klbasis::{Error, Result};
use serde_json::{json, Value};
use std::path::PathBuf;

#[derive(Parser)]
#[command(name = "klbasis", version, about = "Exact Kazhdan-Lusztig combinatorics for finite Coxeter groups", max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Write output to a file instead of standard output
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Args)]
struct GroupArgs {
    /// Named preset: A1..A4, B2..B4, D4, I2(m), H3, H4
    #[arg(long)]
    preset: Option<String>,

    /// Explicit Coxeter matrix as JSON {"rank":n,"m":[[...]]}
    #[arg(long)]
    matrix: Option<String>,

    /// Enumeration cap on the number of elements
    #[arg(long)]
    cap: Option<usize>,
}

impl GroupArgs {
    fn build(&self) -> Result<GroupContext> {
        let matrix = match (&self.preset, &self.matrix) {
            (Some(p), None) => CoxeterMatrix::preset(p)?,
            (None, Some(j)) => CoxeterMatrix::from_json(j)?,
            _ => {
                return Err(Error::InvalidInput(
                    "provide exactly one of --preset and --matrix".into(),
                ))
            }
        };
        build_group(matrix, self.cap.unwrap_or(DEFAULT_CAP))
    }
}

#[derive(Subcommand)]
enum Command {
    /// List the group elements in canonical order
    Enumerate {
        #[command(flatten)]
        group: GroupArgs,
        /// Print only the group order
        #[arg(long)]
        count: bool,
        /// Print the Poincaré polynomial instead of the element list
        #[arg(long)]
        poincare: bool,
    },
    /// Kazhdan-Lusztig polynomials P_{y,w}
    Kl {
        #[command(flatten)]
        group: GroupArgs,
        /// Upper element w as comma-separated generator indices ("" = e)
        #[arg(long)]
        w: String,
        /// Lower element y; omit to list the whole column below w
        #[arg(long)]
        y: Option<String>,
    },
    /// Canonical basis element c*_w in the T-basis
    Cstar {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        w: String,
    },
    /// Check the KL inversion formula over the whole group
    Inversion {
        #[command(flatten)]
        group: GroupArgs,
    },
    /// Bitrace of (w, w'): trace of h -> T_w h T_{w'}^flip on the T-basis
    Bitrace {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        w: String,
        #[arg(long)]
        wp: String,
    },
    /// Left / two-sided cells, a-function, distinguished involutions
    Cells {
        #[command(flatten)]
        group: GroupArgs,
        /// Also emit the gamma structure constants
        #[arg(long)]
        gamma: bool,
    },
    /// The a-function on the group
    Afun {
        #[command(flatten)]
        group: GroupArgs,
        /// Also emit W_* and W_!
        #[arg(long)]
        sets: bool,
    },
    /// The asymptotic ring J: distinguished involutions and gamma constants
    Jring {
        #[command(flatten)]
        group: GroupArgs,
    },
    /// Check that the two Hecke actions on each two-sided cell commute
    Commute {
        #[command(flatten)]
        group: GroupArgs,
    },
    /// Nonabelian Fourier transform matrix on M(G)
    Fourier {
        /// Group spec: "preset:S4" or "perm:(1 2),(1 2 3 4)"
        #[arg(long)]
        group: String,
    },
    /// Mirror-recursion characters for SL2 in characteristic p
    Sl2 {
        #[arg(long)]
        p: u64,
        /// Stage index k of the basis E^k
        #[arg(long, conflicts_with = "infinity")]
        stage: Option<u32>,
        /// Use the stable basis E^infinity instead of a fixed stage
        #[arg(long)]
        infinity: bool,
        #[arg(long)]
        max_weight: u64,
        /// Print only the whitespace-separated dimension row
        #[arg(long)]
        dims: bool,
    },
}

fn main() -> std::process::ExitCode {
    let cli = Cli::parse();
    let output = match run(&cli.command, cli.format) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return std::process::ExitCode::from(e.exit_code() as u8);
        }
    };
    let result = match &cli.out {
        Some(path) => std::fs::write(path, output.as_bytes()).map_err(Error::from),
        None => {
            print!("{output}");
            Ok(())
        }
    };
    if let Err(e) = result {
        eprintln!("error: {e}");
        return std::process::ExitCode::from(e.exit_code() as u8);
    }
    std::process::ExitCode::SUCCESS
}

fn to_line(v: Value) -> String {
    let mut s = serde_json::to_string(&v).expect("JSON serialization cannot fail");
    s.push('\n');
    s
}

/// Ascending q-coefficients of a polynomial stored with exponent = q-power.
fn q_vec(p: &LaurentPolynomial) -> Vec<i64> {
    assert!(p.valuation().map_or(true, |v| v >= 0));
    match p.degree() {
        None => vec![0],
        Some(d) => (0..=d).map(|e| p.coeff(e) as i64).collect(),
    }
}

fn join<T: ToString>(items: &[T], sep: &str) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}

fn run(cmd: &Command, format: Format) -> Result<String> {
    match cmd {
        Command::Enumerate { group, count, poincare } => {
            let g = group.build()?;
            if *count {
                return Ok(format!("{}\n", g.order()));
            }
            if *poincare {
                let p = g.poincare_polynomial();
                let qc: Vec<i64> =
                    p.q_coeffs().expect("Poincaré polynomial lives in q").iter().map(|&c| c as i64).collect();
                return Ok(match format {
                    Format::Json => to_line(json!({ "poincare": qc })),
                    Format::Csv => format!("{}\n", join(&qc, ",")),
                    Format::Plain => format!("{}\n", p.q_string().expect("even polynomial")),
                });
            }
            match format {
                Format::Json => {
                    let words: Vec<String> = g.elements().map(|e| g.word_string(e)).collect();
                    Ok(to_line(json!({ "order": g.order(), "elements": words })))
                }
                Format::Csv => {
                    let mut s = String::from("id,word,length\n");
                    for e in g.elements() {
                        s.push_str(&format!("{},\"{}\",{}\n", e.index(), g.word_string(e), g.length(e)));
                    }
                    Ok(s)
                }
                Format::Plain => {
                    let mut s = String::new();
                    for e in g.elements() {
                        s.push_str(&format!("{}\t{}\t{}\n", e.index(), g.word_string(e), g.length(e)));
                    }
                    Ok(s)
                }
            }
        }
        Command::Kl { group, w, y } => {
            let g = group.build()?;
            let w = g.parse_word(w)?;
            let mut table = KLTable::new(&g);
            if let Some(y) = y {
                let y = g.parse_word(y)?;
                let p = table.kl_polynomial(y, w);
                let qc = q_vec(&p);
                return Ok(match format {
                    Format::Json => to_line(json!({ "P": qc })),
                    Format::Csv => format!("{}\n", join(&qc, ",")),
                    Format::Plain => {
                        format!("{}\n", p.inflate(2).q_string().expect("even polynomial"))
                    }
                });
            }
            let interval = g.bruhat_interval_below(w);
            match format {
                Format::Json => {
                    let rows: Vec<Value> = interval
                        .iter()
                        .map(|&y| json!({ "y": g.word_string(y), "P": q_vec(&table.kl_polynomial(y, w)) }))
                        .collect();
                    Ok(to_line(json!({ "w": g.word_string(w), "rows": rows })))
                }
                Format::Csv => {
                    let mut s = String::from("y,P\n");
                    for &y in &interval {
                        let qc = q_vec(&table.kl_polynomial(y, w));
                        s.push_str(&format!("\"{}\",\"{}\"\n", g.word_string(y), join(&qc, " ")));
                    }
                    Ok(s)
                }
                Format::Plain => {
                    let mut s = String::new();
                    for &y in &interval {
                        let p = table.kl_polynomial(y, w);
                        s.push_str(&format!(
                            "{}\t{}\n",
                            g.word_string(y),
                            p.inflate(2).q_string().expect("even polynomial")
                        ));
                    }
                    Ok(s)
                }
            }
        }
        Command::Cstar { group, w } => {
            let g = group.build()?;
            let w = g.parse_word(w)?;
            let mut table = KLTable::new(&g);
            let c = hecke::c_star(&mut table, w);
            match format {
                Format::Json => {
                    let terms: Vec<Value> = c
                        .terms()
                        .map(|(x, p)| json!({ "x": g.word_string(x), "coeff": p.to_json() }))
                        .collect();
                    Ok(to_line(json!({ "w": g.word_string(w), "terms": terms })))
                }
                Format::Csv => {
                    let mut s = String::from("x,coeff\n");
                    for (x, p) in c.terms() {
                        s.push_str(&format!("\"{}\",\"{}\"\n", g.word_string(x), p.canonical_string()));
                    }
                    Ok(s)
                }
                Format::Plain => {
                    let mut s = String::new();
                    for (x, p) in c.terms() {
                        s.push_str(&format!("{}\t{}\n", g.word_string(x), p.canonical_string()));
                    }
                    Ok(s)
                }
            }
        }
        Command::Inversion { group } => {
            let g = group.build()?;
            let mut table = KLTable::new(&g);
            if let Err((x, w)) = hecke::verify_inversion(&mut table) {
                return Err(Error::IdentityViolation(format!(
                    "inversion formula fails at x = \"{}\", w = \"{}\"",
                    g.word_string(x),
                    g.word_string(w)
                )));
            }
            Ok(match format {
                Format::Json => to_line(json!({ "ok": true, "order": g.order() })),
                Format::Csv | Format::Plain => "ok\n".into(),
            })
        }
        Command::Bitrace { group, w, wp } => {
            let g = group.build()?;
            let we = g.parse_word(w)?;
            let wpe = g.parse_word(wp)?;
            let tr = hecke::bitrace(&g, we, wpe);
            let qc: Vec<i64> = tr
                .q_coeffs()
                .expect("bitrace lives in q")
                .iter()
                .map(|&c| c as i64)
                .collect();
            Ok(match format {
                Format::Json => to_line(json!({
                    "w": g.word_string(we), "wp": g.word_string(wpe), "bitrace": qc
                })),
                Format::Csv => format!("{}\n", join(&qc, ",")),
                Format::Plain => format!("{}\n", tr.q_string().expect("even polynomial")),
            })
        }
        Command::Cells { group, gamma } => {
            let g = group.build()?;
            let mut table = KLTable::new(&g);
            let data = cells::cell_partition(&mut table);
            let a = cells::a_function(&mut table);
            let d = cells::distinguished_involutions(&mut table, &a, &data)?;
            let mut d_ids: Vec<u64> = d.iter().map(|z| z.index() as u64).collect();
            d_ids.sort_unstable();
            let cell_ids = |cs: &[Vec<Element>]| -> Vec<Vec<u64>> {
                cs.iter().map(|c| c.iter().map(|e| e.index() as u64).collect()).collect()
            };
            match format {
                Format::Json => {
                    let mut body = json!({
                        "cells": {
                            "left": cell_ids(&data.left_cells),
                            "twoSided": cell_ids(&data.two_sided_cells),
                        },
                        "a": a,
                        "D": d_ids,
                    });
                    if *gamma {
                        let gam = cells::j_structure_constants(&mut table, &a);
                        body["gamma"] = Value::Array(gamma_json(&g, &gam));
                    }
                    Ok(to_line(body))
                }
                Format::Csv => {
                    let mut s = String::from("kind,cell,id,word,a\n");
                    for (kind, cs) in
                        [("left", &data.left_cells), ("twoSided", &data.two_sided_cells)]
                    {
                        for (ci, members) in cs.iter().enumerate() {
                            for e in members {
                                s.push_str(&format!(
                                    "{kind},{ci},{},\"{}\",{}\n",
                                    e.index(),
                                    g.word_string(*e),
                                    a[e.index()]
                                ));
                            }
                        }
                    }
                    Ok(s)
                }
                Format::Plain => {
                    let mut s = String::new();
                    for (kind, cs) in
                        [("left", &data.left_cells), ("twoSided", &data.two_sided_cells)]
                    {
                        for (ci, members) in cs.iter().enumerate() {
                            let words: Vec<String> =
                                members.iter().map(|&e| g.word_string(e)).collect();
                            s.push_str(&format!("{kind} {ci}: {}\n", words.join(" | ")));
                        }
                    }
                    let a_strs: Vec<String> = a.iter().map(|x| x.to_string()).collect();
                    s.push_str(&format!("a: {}\n", a_strs.join(" ")));
                    let d_strs: Vec<String> = d_ids.iter().map(|x| x.to_string()).collect();
                    s.push_str(&format!("D: {}\n", d_strs.join(" ")));
                    Ok(s)
                }
            }
        }
        Command::Afun { group, sets } => {
            let g = group.build()?;
            let mut table = KLTable::new(&g);
            let a = cells::a_function(&mut table);
            match format {
                Format::Json => {
                    let mut body = json!({ "a": a });
                    if *sets {
                        let ws: Vec<u64> =
                            cells::w_star(&g, &a).iter().map(|e| e.index() as u64).collect();
                        let wb: Vec<u64> =
                            cells::w_bang(&g).iter().map(|e| e.index() as u64).collect();
                        body["wStar"] = json!(ws);
                        body["wBang"] = json!(wb);
                    }
                    Ok(to_line(body))
                }
                Format::Csv => Ok(format!("{}\n", join(&a, ","))),
                Format::Plain => Ok(format!("{}\n", join(&a, " "))),
            }
        }
        Command::Jring { group } => {
            let g = group.build()?;
            let mut table = KLTable::new(&g);
            let data = cells::cell_partition(&mut table);
            let a = cells::a_function(&mut table);
            let d = cells::distinguished_involutions(&mut table, &a, &data)?;
            let mut d_ids: Vec<u64> = d.iter().map(|z| z.index() as u64).collect();
            d_ids.sort_unstable();
            let gam = cells::j_structure_constants(&mut table, &a);
            let entries = gamma_json(&g, &gam);
            match format {
                Format::Json => Ok(to_line(json!({ "D": d_ids, "gamma": entries }))),
                Format::Csv => {
                    let mut s = String::from("x,y,z,v\n");
                    for e in &entries {
                        s.push_str(&format!("{},{},{},{}\n", e["x"], e["y"], e["z"], e["v"]));
                    }
                    Ok(s)
                }
                Format::Plain => {
                    let mut s = String::new();
                    for e in &entries {
                        s.push_str(&format!("{} {} {} {}\n", e["x"], e["y"], e["z"], e["v"]));
                    }
                    Ok(s)
                }
            }
        }
        Command::Commute { group } => {
            let g = group.build()?;
            let mut table = KLTable::new(&g);
            let data = cells::cell_partition(&mut table);
            for (ci, cell) in data.two_sided_cells.iter().enumerate() {
                if !cells::bimodule_commutation_check(&mut table, cell) {
                    return Err(Error::PropertyViolation(format!(
                        "left and right actions fail to commute on two-sided cell {ci}"
                    )));
                }
            }
            Ok(match format {
                Format::Json => to_line(json!({
                    "ok": true, "twoSidedCells": data.two_sided_cells.len()
                })),
                Format::Csv | Format::Plain => "ok\n".into(),
            })
        }
        Command::Fourier { group } => {
            let g = fourier::group_from_spec(group)?;
            let m = fourier::m_set(&g)?;
            let fm = fourier::fourier_matrix(&g)?;
            let labels: Vec<String> =
                fm.pairs.iter().map(|p| fourier::pair_label(&g, &m, p)).collect();
            let rows: Vec<Vec<String>> = fm
                .entries
                .iter()
                .map(|row| row.iter().map(|&e| fmt_complex(e)).collect())
                .collect();
            Ok(match format {
                Format::Json => to_line(json!({ "pairs": labels, "matrix": rows })),
                Format::Csv => {
                    let mut s = format!("{}\n", labels.join(","));
                    for row in &rows {
                        s.push_str(&format!("{}\n", row.join(",")));
                    }
                    s
                }
                Format::Plain => {
                    let mut s = format!("{}\n", labels.join(" "));
                    for row in &rows {
                        s.push_str(&format!("{}\n", row.join(" ")));
                    }
                    s
                }
            })
        }
        Command::Sl2 { p, stage, infinity, max_weight, dims } => {
            if !sl2::is_prime(*p) {
                eprintln!("warning: p = {p} is composite; the recursion is formal only");
            }
            let combos: Vec<sl2::CharCombo> = if *infinity {
                (0..=*max_weight).map(|l| sl2::e_infinity(*p, l)).collect::<Result<_>>()?
            } else {
                let k = stage.ok_or_else(|| {
                    Error::InvalidInput("provide --stage or --infinity".into())
                })?;
                (0..=*max_weight).map(|l| sl2::e_stage(*p, k, l)).collect()
            };
            if *dims {
                let row: Vec<i64> = combos.iter().map(|c| c.dimension()).collect();
                return Ok(format!("{}\n", join(&row, " ")));
            }
            match format {
                Format::Json => {
                    let rows: Vec<Value> = combos
                        .iter()
                        .enumerate()
                        .map(|(l, c)| {
                            let coeffs: serde_json::Map<String, Value> = c
                                .coeffs()
                                .iter()
                                .map(|(&w, &c)| (w.to_string(), json!(c)))
                                .collect();
                            json!({ "lambda": l as u64, "coeffs": coeffs, "dim": c.dimension() })
                        })
                        .collect();
                    let k_val: Value = if *infinity {
                        json!("infinity")
                    } else {
                        json!(stage.expect("checked above"))
                    };
                    Ok(to_line(json!({ "p": p, "k": k_val, "rows": rows })))
                }
                Format::Csv => {
                    let mut s = String::from("lambda,dim\n");
                    for (l, c) in combos.iter().enumerate() {
                        s.push_str(&format!("{l},{}\n", c.dimension()));
                    }
                    Ok(s)
                }
                Format::Plain => {
                    let mut s = String::new();
                    for (l, c) in combos.iter().enumerate() {
                        s.push_str(&format!("{l}\t{}\n", c.dimension()));
                    }
                    Ok(s)
                }
            }
        }
    }
}

/// The true structure constants gamma_{x,y,z}: the stored table holds the
/// coefficient of t_z in t_x t_y, which is gamma at z^{-1}.
fn gamma_json(g: &GroupContext, gam: &std::collections::BTreeMap<(u32, u32, u32), i128>) -> Vec<Value> {
    let mut entries: Vec<(u32, u32, u32, i64)> = gam
        .iter()
        .map(|(&(x, y, z), &v)| {
            let z_true = g.inverse(g.element(z as usize)).index() as u32;
            (x, y, z_true, v as i64)
        })
        .collect();
    entries.sort_unstable();
    entries
        .into_iter()
        .map(|(x, y, z, v)| json!({ "x": x, "y": y, "z": z, "v": v }))
        .collect()
}

/// 12-decimal rendering with a 1e-10 snap to zero, imaginary part suffixed
/// as `±...i` when present.
fn fmt_complex(c: num_complex::Complex64) -> String {
    let snap = |x: f64| if x.abs() < 1e-10 { 0.0 } else { x };
    let re = snap(c.re);
    let im = snap(c.im);
    if im == 0.0 {
        format!("{re:.12}")
    } else if im < 0.0 {
        format!("{re:.12}-{:.12}i", -im)
    } else {
        format!("{re:.12}+{im:.12}i")
    }
}
