use std::fmt::Write;

use coadjoint_core::combinatorics::{format_chain, parse_chain};
use coadjoint_core::oracle::{cross_check, cross_check_flag, CrossCheckReport};
use coadjoint_core::orbits::{check_supplied, sweep_refinement_pairs, OrbitDescriptor};
use coadjoint_core::{
    poincare_cpn, verify_flag_corollary, verify_split, verify_tower, verify_u4_example,
    Composition, Error, GradedDims, TowerOptions,
};
use serde_json::{json, Value};

use crate::args::{Cli, Command, Format, OracleArgs, PoincareArgs, SplitArgs, TowerArgs};
use crate::{exit, json, text};

/// Largest `--max-n` accepted by verify-paper.
pub const MAX_SWEEP_N: usize = 12;

/// What a command produced: the result stream, an optional diagnostic for
/// standard error, and the exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub diagnostic: Option<String>,
    pub exit_code: i32,
}

struct Rendered {
    inputs: Value,
    result: Value,
    text: String,
    exit_code: i32,
}

struct UsageError(String);

impl From<Error> for UsageError {
    fn from(e: Error) -> Self {
        UsageError(e.to_string())
    }
}

type CmdResult = Result<Rendered, UsageError>;

pub fn run(cli: &Cli) -> Outcome {
    let (name, rendered) = match &cli.command {
        Command::Poincare(a) => ("poincare", poincare(cli, a)),
        Command::Split(a) => ("split", split(cli, a)),
        Command::Tower(a) => ("tower", tower(cli, a)),
        Command::VerifyPaper => ("verify-paper", verify_paper(cli)),
        Command::Oracle(a) => ("oracle", oracle(cli, a)),
    };
    match rendered {
        Ok(r) => {
            let stdout = match cli.format {
                Format::Json => {
                    let env = json::envelope(name, r.inputs, r.result);
                    let mut s = serde_json::to_string_pretty(&env).expect("serializable");
                    s.push('\n');
                    s
                }
                Format::Text => r.text,
            };
            Outcome {
                stdout,
                diagnostic: None,
                exit_code: r.exit_code,
            }
        }
        Err(UsageError(msg)) => Outcome {
            stdout: String::new(),
            diagnostic: Some(msg),
            exit_code: exit::USAGE,
        },
    }
}

fn verdict_code(ok: bool) -> i32 {
    if ok {
        exit::OK
    } else {
        exit::VERIFICATION_FAILED
    }
}

fn parse_composition(s: &str, what: &str) -> Result<Composition, UsageError> {
    s.parse()
        .map_err(|e: Error| UsageError(format!("malformed {what} {s:?}: {e}")))
}

/// Sorted descending unless `--keep-order`.
fn canonical(cli: &Cli, p: Composition) -> Composition {
    if cli.keep_order {
        p
    } else {
        p.sorted_descending()
    }
}

fn parse_series(s: &str, what: &str) -> Result<GradedDims, UsageError> {
    s.split(',')
        .map(|t| t.trim().parse())
        .collect::<Result<Vec<_>, _>>()
        .map(GradedDims::new)
        .map_err(|_| UsageError(format!("malformed {what} series {s:?}: expected e.g. 1,0,2,0,1")))
}

fn orbit_result(orbit: &OrbitDescriptor, series: &GradedDims) -> Value {
    json!({
        "orbit": orbit.label(),
        "stabilizer": orbit.stabilizer().to_string(),
        "ambient_n": orbit.ambient_n(),
        "complex_dim": orbit.complex_dim(),
        "series": json::series(series),
    })
}

fn poincare(cli: &Cli, a: &PoincareArgs) -> CmdResult {
    let (inputs, stabilizer) = if let Some(s) = &a.composition {
        let p = canonical(cli, parse_composition(s, "composition")?);
        (json!({ "composition": p.to_string() }), p)
    } else if let Some(j) = a.cpn {
        if j < 0 {
            return Err(UsageError(format!("--cpn must be nonnegative, got {j}")));
        }
        let j = j as usize;
        let p = if j == 0 {
            Composition::ones(1)?
        } else {
            Composition::new(vec![1, j])?
        };
        (json!({ "cpn": j }), p)
    } else if let Some(s) = &a.grassmannian {
        let nums: Vec<i64> = s
            .split(',')
            .map(|t| t.trim().parse())
            .collect::<Result<_, _>>()
            .map_err(|_| UsageError(format!("malformed --grassmannian {s:?}, expected k,n")))?;
        let [k, n] = nums[..] else {
            return Err(UsageError(format!("--grassmannian takes k,n, got {s:?}")));
        };
        if n < 1 || k < 0 || k > n {
            return Err(UsageError(format!("--grassmannian needs 0 <= k <= n and n >= 1, got {k},{n}")));
        }
        let (k, n) = (k as usize, n as usize);
        let p = if k == 0 || k == n {
            Composition::full(n)?
        } else {
            canonical(cli, Composition::new(vec![k, n - k])?)
        };
        (json!({ "grassmannian": format!("{k},{n}") }), p)
    } else {
        return Err(UsageError("poincare needs --composition, --cpn or --grassmannian".into()));
    };

    let orbit = OrbitDescriptor::new(stabilizer);
    let series = match a.cpn {
        Some(j) => poincare_cpn(j as usize),
        None => orbit.poincare(),
    };
    let mut out = String::new();
    writeln!(
        out,
        "{}  (U({}) / stabilizer ({}), complex dimension {})",
        orbit.label(),
        orbit.ambient_n(),
        orbit.stabilizer(),
        orbit.complex_dim()
    )
    .unwrap();
    out.push_str(&text::table(&[("dim", &series)]));
    Ok(Rendered {
        inputs,
        result: orbit_result(&orbit, &series),
        text: out,
        exit_code: exit::OK,
    })
}

fn split(cli: &Cli, a: &SplitArgs) -> CmdResult {
    if let (Some(fine), Some(coarse)) = (&a.fine, &a.coarse) {
        let fine = parse_composition(fine, "--fine")?;
        let coarse = parse_composition(coarse, "--coarse")?;
        if coarse.is_full_group() && fine != coarse && !cli.allow_full_group {
            return Err(UsageError(format!(
                "coarse ({coarse}) is the whole group U({}); pass --allow-full-group to split over a point",
                coarse.n()
            )));
        }
        let cert = verify_split(&fine, &coarse)?;
        let code = verdict_code(cert.verdict);
        return Ok(Rendered {
            inputs: json!({ "fine": fine.to_string(), "coarse": coarse.to_string() }),
            result: json::certificate(&cert),
            text: text::certificate(&format!("split ({fine}) over ({coarse})"), &cert),
            exit_code: code,
        });
    }
    if let (Some(total), Some(base)) = (&a.total, &a.base) {
        let total_s = parse_series(total, "--total")?;
        let base_s = parse_series(base, "--base")?;
        let fibers = a
            .fiber
            .iter()
            .map(|f| parse_series(f, "--fiber"))
            .collect::<Result<Vec<_>, _>>()?;
        let cert = check_supplied(total_s, base_s, fibers);
        let code = verdict_code(cert.verdict);
        return Ok(Rendered {
            inputs: json!({ "total": total, "base": base, "fiber": a.fiber }),
            result: json::certificate(&cert),
            text: text::certificate("supplied series", &cert),
            exit_code: code,
        });
    }
    Err(UsageError(
        "split needs --fine and --coarse, or --total and --base".into(),
    ))
}

fn tower(cli: &Cli, a: &TowerArgs) -> CmdResult {
    let chain = parse_chain(&a.chain)
        .map_err(|e| UsageError(format!("malformed --chain {:?}: {e}", a.chain)))?;
    let t = verify_tower(
        &chain,
        TowerOptions {
            allow_full_group: cli.allow_full_group,
        },
    )?;
    let mut out = String::new();
    for (i, (pair, cert)) in chain.windows(2).zip(&t.step_certificates).enumerate() {
        out.push_str(&text::certificate(
            &format!("step {}: ({}) over ({})", i + 1, pair[0], pair[1]),
            cert,
        ));
    }
    out.push_str(&text::certificate(
        &format!("tower {}", format_chain(&chain)),
        &t.product_certificate,
    ));
    writeln!(out, "all verdicts true: {}", t.all_true()).unwrap();
    Ok(Rendered {
        inputs: json!({ "chain": format_chain(&chain), "allow_full_group": cli.allow_full_group }),
        result: json::tower(&t),
        text: out,
        exit_code: verdict_code(t.all_true()),
    })
}

fn verify_paper(cli: &Cli) -> CmdResult {
    let max_n = cli.max_n;
    if !(1..=MAX_SWEEP_N).contains(&max_n) {
        return Err(UsageError(format!(
            "--max-n must be between 1 and {MAX_SWEEP_N}, got {max_n}"
        )));
    }
    let mut out = String::new();
    let mut all_true = true;

    let u4 = verify_u4_example();
    let titles = [
        "U(4): F_4 over G_{2,2} with fiber CP^1 x CP^1",
        "U(4): G_{2,2} x CP^1 x CP^1 = CP^1 x CP^2 x CP^3",
        "U(4): Betti table of G_{2,2}",
    ];
    for (title, cert) in titles.iter().zip(&u4) {
        out.push_str(&text::certificate(title, cert));
        all_true &= cert.verdict;
    }

    let mut flags = Vec::new();
    for n in 2..=max_n {
        let cert = verify_flag_corollary(n)?;
        all_true &= cert.verdict;
        flags.push(json!({ "n": n, "verdict": cert.verdict, "total_dim": json::series(&cert.lhs)["total_dim"] }));
        writeln!(
            out,
            "flag splitting F_{n} = CP^1 x ... x CP^{}: {}",
            n - 1,
            cert.verdict
        )
        .unwrap();
    }

    let mut sweep_rows = Vec::new();
    let mut failures = Vec::new();
    let (mut pairs, mut proper) = (0usize, 0usize);
    for n in 1..=max_n {
        let r = sweep_refinement_pairs(n)?;
        pairs += r.pairs;
        proper += r.proper_pairs;
        writeln!(
            out,
            "sweep n = {n}: {} compositions, {} refining pairs ({} proper), {} failures",
            r.compositions,
            r.pairs,
            r.proper_pairs,
            r.failures.len()
        )
        .unwrap();
        sweep_rows.push(json!({
            "n": n,
            "compositions": r.compositions,
            "pairs": r.pairs,
            "proper_pairs": r.proper_pairs,
            "failures": r.failures.len(),
        }));
        failures.extend(
            r.failures
                .iter()
                .map(|(f, c)| json!({ "fine": f.to_string(), "coarse": c.to_string() })),
        );
    }
    all_true &= failures.is_empty();

    let certificates = u4.len() + flags.len() + pairs;
    writeln!(
        out,
        "{certificates} certificates: {} U(4), {} flag, {pairs} sweep ({proper} proper)",
        u4.len(),
        flags.len()
    )
    .unwrap();
    writeln!(
        out,
        "{}",
        if all_true {
            "all certificates true"
        } else {
            "SOME CERTIFICATES FALSE"
        }
    )
    .unwrap();

    Ok(Rendered {
        inputs: json!({ "max_n": max_n }),
        result: json!({
            "u4_certificates": u4.iter().map(json::certificate).collect::<Vec<_>>(),
            "flag_corollary": flags,
            "sweep": {
                "per_n": sweep_rows,
                "pairs": pairs,
                "proper_pairs": proper,
                "failures": failures,
            },
            "certificate_count": certificates,
            "all_true": all_true,
        }),
        text: out,
        exit_code: verdict_code(all_true),
    })
}

fn oracle_text(r: &CrossCheckReport) -> String {
    let mut out = String::new();
    writeln!(out, "{}: {} objects enumerated", r.subject, r.enumeration_size).unwrap();
    let mut cols = vec![("closed-form", &r.closed_form), ("coset-oracle", &r.coset_oracle)];
    if let Some(b) = &r.box_oracle {
        cols.push(("box-oracle", b));
    }
    out.push_str(&text::table(&cols));
    if r.agree() {
        writeln!(out, "agreement: all routes equal").unwrap();
    } else {
        writeln!(out, "MISMATCH at degrees {:?}", r.mismatched_degrees).unwrap();
    }
    out
}

fn oracle(cli: &Cli, a: &OracleArgs) -> CmdResult {
    let (inputs, report) = if let Some(s) = &a.composition {
        let p = canonical(cli, parse_composition(s, "composition")?);
        (json!({ "composition": p.to_string() }), cross_check(&p)?)
    } else if let Some(n) = a.flag_n {
        if n < 1 {
            return Err(UsageError(format!("--flag-n must be at least 1, got {n}")));
        }
        (json!({ "flag_n": n }), cross_check_flag(n as usize)?)
    } else {
        return Err(UsageError("oracle needs --composition or --flag-n".into()));
    };
    Ok(Rendered {
        inputs,
        result: json::cross_check(&report),
        text: oracle_text(&report),
        exit_code: verdict_code(report.agree()),
    })
}
