//! The five subcommands: `word`, `table`, `verify`, `weyl`, `typea`.

use std::fmt::Write as _;

use loopwords::leclerc::WordTables;
use loopwords::order::ExponentRule;
use loopwords::verify::Report;
use loopwords::weyl::{self, CoweightVector};
use loopwords::{typea, verify, LoopWord, OrderPolicy, Root, RootSystem};

use crate::args::{
    build_policy, build_system, emit, parse_engine, parse_format, parse_int_list, parse_range,
    parse_root, CliError, CliResult, Flags, Format,
};

fn policy_json_fields(policy: &OrderPolicy) -> String {
    let order = policy
        .listing()
        .iter()
        .map(|i| i.to_string())
        .collect::<Vec<_>>()
        .join(",");
    match policy.rule() {
        ExponentRule::Weighted { weights } => format!(
            "\"order\":[{order}],\"weights\":[{}]",
            weights
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(",")
        ),
        ExponentRule::Generalized { pos, neg } => {
            let list = |rs: &Vec<loopwords::Ratio>| {
                rs.iter()
                    .map(|r| format!("\"{r}\""))
                    .collect::<Vec<_>>()
                    .join(",")
            };
            format!(
                "\"order\":[{order}],\"slopes\":{{\"pos\":[{}],\"neg\":[{}]}}",
                list(pos),
                list(neg)
            )
        }
    }
}

fn int_list(vals: &[i64]) -> String {
    vals.iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn word_json(sys: &RootSystem, policy: &OrderPolicy, alpha: &Root, d: i64, w: &LoopWord) -> String {
    format!(
        "{{\"type\":\"{}\",\"rank\":{},{},\"alpha\":[{}],\"d\":{},\"word\":{}}}",
        sys.type_label(),
        sys.rank(),
        policy_json_fields(policy),
        int_list(alpha.coeffs()),
        d,
        w.to_json()
    )
}

fn root_tuple(alpha: &Root) -> String {
    format!("({})", int_list(alpha.coeffs()))
}

pub fn cmd_word(flags: &Flags) -> CliResult<()> {
    flags.expect_only(&[
        "type",
        "rank",
        "order",
        "weights",
        "pos-slopes",
        "neg-slopes",
        "root",
        "d",
        "engine",
        "s",
        "format",
        "out",
    ])?;
    let sys = build_system(flags)?;
    let policy = build_policy(flags, sys.rank())?;
    let alpha = parse_root(flags, &sys)?;
    let d = flags.int_or("d", 0)?;
    let engine = parse_engine(flags)?;
    let tables = WordTables::new(&sys, &policy);
    let word = tables.compute(&alpha, d, engine)?;
    let body = match parse_format(flags)? {
        Format::Text => format!("{word}\n"),
        Format::Json => format!("{}\n", word_json(&sys, &policy, &alpha, d, &word)),
        Format::Tsv => format!(
            "{}\t{}\t{}\t{}\t{}\n",
            sys.type_label(),
            sys.rank(),
            int_list(alpha.coeffs()),
            d,
            word
        ),
    };
    emit(flags, &body)
}

pub fn cmd_table(flags: &Flags) -> CliResult<()> {
    flags.expect_only(&[
        "type",
        "rank",
        "order",
        "weights",
        "pos-slopes",
        "neg-slopes",
        "root",
        "d-range",
        "engine",
        "s",
        "format",
        "out",
    ])?;
    let sys = build_system(flags)?;
    let policy = build_policy(flags, sys.rank())?;
    let engine = parse_engine(flags)?;
    let tables = WordTables::new(&sys, &policy);

    let roots: Vec<Root> = match flags.get("root") {
        None | Some("all") => sys.positive_roots().to_vec(),
        Some(_) => vec![parse_root(flags, &sys)?],
    };
    let range = flags.get("d-range").map(parse_range).transpose()?;

    let mut rows: Vec<(Root, i64, LoopWord)> = Vec::new();
    for alpha in &roots {
        let (lo, hi) = match range {
            Some(r) => r,
            // Default window: the fundamental domain [0, f(α)).
            None => {
                let f = policy.weighted_height(alpha).map_err(|_| {
                    CliError::usage("--d-range is required for generalized policies")
                })?;
                (0, f - 1)
            }
        };
        for d in lo..=hi {
            let word = tables.compute(alpha, d, engine)?;
            rows.push((alpha.clone(), d, word));
        }
    }

    let body = match parse_format(flags)? {
        Format::Text => {
            let mut out = String::new();
            for (alpha, d, word) in &rows {
                writeln!(out, "alpha={} d={d} {word}", root_tuple(alpha)).unwrap();
            }
            out
        }
        Format::Tsv => {
            let mut out = String::new();
            for (alpha, d, word) in &rows {
                writeln!(out, "{}\t{d}\t{word}", int_list(alpha.coeffs())).unwrap();
            }
            out
        }
        Format::Json => {
            let rows_json: Vec<String> = rows
                .iter()
                .map(|(alpha, d, word)| {
                    format!(
                        "{{\"alpha\":[{}],\"d\":{d},\"word\":{}}}",
                        int_list(alpha.coeffs()),
                        word.to_json()
                    )
                })
                .collect();
            format!(
                "{{\"type\":\"{}\",\"rank\":{},{},\"rows\":[{}]}}\n",
                sys.type_label(),
                sys.rank(),
                policy_json_fields(&policy),
                rows_json.join(",")
            )
        }
    };
    emit(flags, &body)
}

fn render_report(name: &str, report: &Report) -> String {
    let mut out = String::new();
    for check in &report.checks {
        if check.pass {
            writeln!(out, "ok   {}", check.label).unwrap();
        } else {
            writeln!(out, "FAIL {} — {}", check.label, check.detail).unwrap();
        }
    }
    writeln!(
        out,
        "suite {name}: {} passed, {} failed",
        report.passed(),
        report.failed()
    )
    .unwrap();
    out
}

pub fn cmd_verify(flags: &Flags) -> CliResult<()> {
    flags.expect_only(&[
        "suite",
        "type",
        "rank",
        "order",
        "weights",
        "pos-slopes",
        "neg-slopes",
        "d-range",
        "s",
        "count",
        "seed",
        "n",
        "depth",
        "format",
        "out",
    ])?;
    let suite = flags.require("suite")?.to_string();
    let range = flags.get("d-range").map(parse_range).transpose()?;
    let s = flags.int_or("s", 3)?;
    let seed = flags.int_or("seed", 0x5eed)? as u64;
    let count = flags.int_or("count", 200)?;

    let report = match suite.as_str() {
        "typea" => {
            let n = flags
                .int("n")?
                .ok_or_else(|| CliError::usage("--n is required for the typea suite"))?
                as usize;
            let weights = parse_int_list(flags.require("weights")?, "weight")?;
            verify::typea_suite(n, &weights)?
        }
        _ => {
            let sys = build_system(flags)?;
            let policy = build_policy(flags, sys.rank())?;
            let tables = WordTables::new(&sys, &policy);
            match suite.as_str() {
                "tightness" => {
                    let mut r = verify::tightness_suite(&tables, range)?;
                    r.merge(verify::first_letter_suite(&tables, range)?);
                    r
                }
                "monotonicity" => {
                    let mut r = verify::monotonicity_suite(&tables, range)?;
                    r.merge(verify::finite_restriction_suite(&tables)?);
                    r
                }
                "periodicity" => verify::periodicity_suite(&tables, range)?,
                "convexity" => {
                    let mut r = verify::convexity_suite(&tables, range)?;
                    // The minimality scan's exponent window needs weights.
                    if policy.is_weighted() {
                        r.merge(verify::minimality_suite(&tables, range)?);
                    }
                    r.merge(verify::summand_suite(&tables, count as usize, seed)?);
                    r
                }
                "oracle" => verify::oracle_suite(&tables, s, range)?,
                "weyl" => verify::weyl_suite(&tables, count, 20, seed)?,
                "generalized" => {
                    let depth = flags.int_or("depth", 3)?;
                    let r = range.unwrap_or((-4, 6));
                    verify::generalized_suite(&tables, s, r, depth)?
                }
                other => {
                    return Err(CliError::usage(format!(
                        "unknown suite `{other}` (expected tightness|convexity|periodicity|monotonicity|oracle|weyl|typea|generalized)"
                    )))
                }
            }
        }
    };

    emit(flags, &render_report(&suite, &report))?;
    if report.pass() {
        Ok(())
    } else {
        Err(CliError::Failure(format!(
            "suite {suite}: {} of {} checks failed",
            report.failed(),
            report.checks.len()
        )))
    }
}

fn affine_text(roots: &[weyl::AffineRealRoot]) -> String {
    roots
        .iter()
        .map(|r| format!("(({}),{})", int_list(&r.finite), r.level))
        .collect::<Vec<_>>()
        .join(" ")
}

fn affine_json(roots: &[weyl::AffineRealRoot]) -> String {
    let items: Vec<String> = roots
        .iter()
        .map(|r| format!("[[{}],{}]", int_list(&r.finite), r.level))
        .collect();
    format!("[{}]", items.join(","))
}

pub fn cmd_weyl(flags: &Flags) -> CliResult<()> {
    flags.expect_only(&[
        "emit",
        "type",
        "rank",
        "order",
        "weights",
        "pos-slopes",
        "neg-slopes",
        "mu",
        "i",
        "d",
        "count",
        "k-min",
        "s",
        "from",
        "format",
        "out",
    ])?;
    let sys = build_system(flags)?;
    let emit_what = flags.require("emit")?.to_string();
    let format = parse_format(flags)?;

    let body = match emit_what.as_str() {
        "terminal-set" => {
            let mu = CoweightVector::new(parse_int_list(flags.require("mu")?, "coweight")?);
            let set = weyl::translation_terminal_set(&sys, &mu)?;
            match format {
                Format::Json => format!("{}\n", affine_json(&set)),
                _ => format!("{{{}}}\n", affine_text(&set)),
            }
        }
        "p-constants" => {
            let policy = build_policy(flags, sys.rank())?;
            let i = flags
                .int("i")?
                .ok_or_else(|| CliError::usage("--i is required"))? as usize;
            let d = flags.int_or("d", 0)?;
            let p = weyl::p_constants(&sys, &policy, i, d)?;
            match format {
                Format::Json => format!("{{\"p\":[{}]}}\n", int_list(&p.p)),
                _ => format!("p = {}\n", int_list(&p.p)),
            }
        }
        "beta" => {
            let policy = build_policy(flags, sys.rank())?;
            let tables = WordTables::new(&sys, &policy);
            let k_min = flags.int_or("k-min", 0)?;
            let count = flags.int_or("count", 20)?;
            let k_max = k_min + count - 1;
            let entries = if policy.is_weighted() {
                weyl::beta_sequence(&tables, k_min, k_max)?
            } else {
                let s = flags.int_or("s", 3)?;
                weyl::beta_sequence_block(&tables, s, k_min, k_max)?
            };
            match format {
                Format::Json => format!("{}\n", affine_json(&entries)),
                Format::Tsv => {
                    let mut out = String::new();
                    for (k, r) in (k_min..).zip(&entries) {
                        writeln!(out, "{k}\t{}\t{}", int_list(&r.finite), r.level).unwrap();
                    }
                    out
                }
                Format::Text => {
                    let mut out = String::new();
                    for (k, r) in (k_min..).zip(&entries) {
                        writeln!(out, "{k}: (({}),{})", int_list(&r.finite), r.level).unwrap();
                    }
                    out
                }
            }
        }
        "reduced-word" => {
            let policy = build_policy(flags, sys.rank())?;
            let tables = WordTables::new(&sys, &policy);
            let ordered = match flags.get("from").unwrap_or("block") {
                "block" => {
                    let mut l = 0i64;
                    for alpha in sys.positive_roots() {
                        l += policy.weighted_height(alpha).map_err(|_| {
                            CliError::usage("--from block requires a weighted policy")
                        })?;
                    }
                    weyl::beta_sequence(&tables, 0, l - 1)?
                }
                "segment" => {
                    let i = flags
                        .int("i")?
                        .ok_or_else(|| CliError::usage("--i is required for --from segment"))?
                        as usize;
                    let d = flags.int_or("d", 0)?;
                    weyl::terminal_segment(&tables, i, d)?
                        .into_iter()
                        .map(|(alpha, p)| weyl::AffineRealRoot::from_root(&alpha, p))
                        .collect()
                }
                other => return Err(CliError::usage(format!("unknown --from `{other}`"))),
            };
            let word = weyl::extract_reduced_word(&sys, &ordered)?;
            let joined = word
                .iter()
                .map(|j| j.to_string())
                .collect::<Vec<_>>()
                .join(" ");
            match format {
                Format::Json => format!(
                    "[{}]\n",
                    word.iter()
                        .map(|j| j.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                ),
                _ => format!("{joined}\n"),
            }
        }
        other => {
            return Err(CliError::usage(format!(
                "unknown --emit `{other}` (expected beta|reduced-word|terminal-set|p-constants)"
            )))
        }
    };
    emit(flags, &body)
}

pub fn cmd_typea(flags: &Flags) -> CliResult<()> {
    flags.expect_only(&["emit", "n", "weights", "m", "d", "extend", "format", "out"])?;
    let n = flags
        .int("n")?
        .ok_or_else(|| CliError::usage("--n is required"))? as usize;
    let weights = parse_int_list(flags.require("weights")?, "weight")?;
    let mults = match flags.get("m") {
        Some(raw) => parse_int_list(raw, "multiplicity")?,
        None => vec![1; n],
    };
    let format = parse_format(flags)?;

    let body = match flags.require("emit")? {
        "table" => {
            let table = typea::build_table(n, &weights, &mults)?;
            match format {
                Format::Json => format!(
                    "[{}]\n",
                    table
                        .flat()
                        .iter()
                        .map(|x| x.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                ),
                _ => {
                    let flat = table
                        .flat()
                        .iter()
                        .map(|x| x.to_string())
                        .collect::<Vec<_>>()
                        .join(" ");
                    format!("{flat}\n{}\n", table.render())
                }
            }
        }
        "word" => {
            let d = flags.int_or("d", 1)?;
            // Out-of-window d only with explicit periodic extension.
            let word = match flags.get("extend") {
                Some("true") => typea::closed_form_word_extended(n, &weights, d)?,
                Some(other) if other != "false" => {
                    return Err(CliError::usage(format!(
                        "--extend takes true|false, got `{other}`"
                    )))
                }
                _ => typea::closed_form_word(n, &weights, d)?,
            };
            match format {
                Format::Json => format!("{}\n", word.to_json()),
                _ => format!("{word}\n"),
            }
        }
        "multiset" => {
            let d = flags.int_or("d", 1)?;
            let ms = typea::bcd_multiset(&weights, &mults, d)?;
            match format {
                Format::Json => {
                    let items: Vec<String> = ms
                        .entries()
                        .iter()
                        .map(|(l, m)| format!("[{},{},{m}]", l.index, l.exponent))
                        .collect();
                    format!("[{}]\n", items.join(","))
                }
                _ => format!("{ms}\n"),
            }
        }
        other => {
            return Err(CliError::usage(format!(
                "unknown --emit `{other}` (expected table|word|multiset)"
            )))
        }
    };
    emit(flags, &body)
}
