//! Flag parsing and construction of the root system / order policy a command
//! runs against.

use std::collections::BTreeMap;

use loopwords::{OrderPolicy, Ratio, Root, RootSystem, TypeLabel};

/// Usage problems exit with code 2, computation failures with code 1.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Failure(String),
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> CliError {
        CliError::Usage(msg.into())
    }
}

impl From<loopwords::Error> for CliError {
    fn from(e: loopwords::Error) -> CliError {
        match e {
            loopwords::Error::Config(m) => CliError::Usage(m),
            other => CliError::Failure(other.to_string()),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// Raw `--flag value` pairs in the order given.
pub struct Flags {
    values: BTreeMap<String, String>,
}

impl Flags {
    pub fn parse(args: &[String]) -> CliResult<Flags> {
        let mut values = BTreeMap::new();
        let mut it = args.iter();
        while let Some(arg) = it.next() {
            let Some(name) = arg.strip_prefix("--") else {
                return Err(CliError::usage(format!("unexpected argument `{arg}`")));
            };
            let value = it
                .next()
                .ok_or_else(|| CliError::usage(format!("flag --{name} needs a value")))?;
            if values.insert(name.to_string(), value.clone()).is_some() {
                return Err(CliError::usage(format!("flag --{name} given twice")));
            }
        }
        Ok(Flags { values })
    }

    pub fn get(&self, name: &str) -> Option<&str> {
        self.values.get(name).map(|s| s.as_str())
    }

    pub fn require(&self, name: &str) -> CliResult<&str> {
        self.get(name)
            .ok_or_else(|| CliError::usage(format!("missing required flag --{name}")))
    }

    pub fn int(&self, name: &str) -> CliResult<Option<i64>> {
        match self.get(name) {
            None => Ok(None),
            Some(raw) => raw
                .parse::<i64>()
                .map(Some)
                .map_err(|_| CliError::usage(format!("--{name} expects an integer, got `{raw}`"))),
        }
    }

    pub fn int_or(&self, name: &str, default: i64) -> CliResult<i64> {
        Ok(self.int(name)?.unwrap_or(default))
    }

    /// Rejects flags this command does not know.
    pub fn expect_only(&self, allowed: &[&str]) -> CliResult<()> {
        for key in self.values.keys() {
            if !allowed.contains(&key.as_str()) {
                return Err(CliError::usage(format!("unknown flag --{key}")));
            }
        }
        Ok(())
    }
}

pub fn parse_int_list(raw: &str, what: &str) -> CliResult<Vec<i64>> {
    raw.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| CliError::usage(format!("bad {what} entry `{t}`")))
        })
        .collect()
}

/// An order listing: either comma-separated (`5,1,3,2,4`) or, for ranks up to
/// 9, the compact digit string from the reference tables (`51324`), both
/// meaning `5 < 1 < 3 < 2 < 4`.
pub fn parse_order(raw: &str, rank: usize) -> CliResult<Vec<usize>> {
    let parts: Vec<usize> = if raw.contains(',') {
        raw.split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| CliError::usage(format!("bad order entry `{t}`")))
            })
            .collect::<CliResult<_>>()?
    } else if raw.chars().all(|c| c.is_ascii_digit()) && rank <= 9 {
        raw.chars()
            .map(|c| c.to_digit(10).unwrap() as usize)
            .collect()
    } else {
        return Err(CliError::usage(format!("cannot parse order `{raw}`")));
    };
    Ok(parts)
}

pub fn parse_ratio_list(raw: &str, what: &str) -> CliResult<Vec<Ratio>> {
    raw.split(',')
        .map(|t| Ratio::parse(t.trim()).map_err(|e| CliError::usage(format!("{what}: {e}"))))
        .collect()
}

/// `LO..HI` (inclusive).
pub fn parse_range(raw: &str) -> CliResult<(i64, i64)> {
    let (lo, hi) = raw
        .split_once("..")
        .ok_or_else(|| CliError::usage(format!("expected LO..HI, got `{raw}`")))?;
    let lo = lo
        .trim()
        .parse::<i64>()
        .map_err(|_| CliError::usage(format!("bad range start `{lo}`")))?;
    let hi = hi
        .trim()
        .parse::<i64>()
        .map_err(|_| CliError::usage(format!("bad range end `{hi}`")))?;
    if lo > hi {
        return Err(CliError::usage(format!("empty range `{raw}`")));
    }
    Ok((lo, hi))
}

/// Builds the root system from `--type` and (where needed) `--rank`.
pub fn build_system(flags: &Flags) -> CliResult<RootSystem> {
    let label = TypeLabel::parse(flags.require("type")?)?;
    let rank = match label.fixed_rank() {
        Some(r) => {
            if let Some(given) = flags.int("rank")? {
                if given as usize != r {
                    return Err(CliError::usage(format!(
                        "type {label} has rank {r}, not {given}"
                    )));
                }
            }
            r
        }
        None => flags
            .int("rank")?
            .ok_or_else(|| CliError::usage("--rank is required for types A/B/C/D"))?
            as usize,
    };
    Ok(RootSystem::build(label, rank)?)
}

/// Builds the order policy: `--order` (default identity) plus either
/// `--weights` (default all ones) or `--pos-slopes`/`--neg-slopes`.
pub fn build_policy(flags: &Flags, rank: usize) -> CliResult<OrderPolicy> {
    let listing = match flags.get("order") {
        Some(raw) => parse_order(raw, rank)?,
        None => (1..=rank).collect(),
    };
    let generalized = flags.get("pos-slopes").is_some() || flags.get("neg-slopes").is_some();
    if generalized {
        if flags.get("weights").is_some() {
            return Err(CliError::usage(
                "--weights and --pos-slopes/--neg-slopes are mutually exclusive",
            ));
        }
        let pos = parse_ratio_list(flags.require("pos-slopes")?, "--pos-slopes")?;
        let neg = parse_ratio_list(flags.require("neg-slopes")?, "--neg-slopes")?;
        Ok(OrderPolicy::generalized(rank, listing, pos, neg)?)
    } else {
        let weights = match flags.get("weights") {
            Some(raw) => parse_int_list(raw, "weight")?,
            None => vec![1; rank],
        };
        Ok(OrderPolicy::weighted(rank, listing, weights)?)
    }
}

/// `--root theta | simple:K | k1,k2,...` (default `theta`).
pub fn parse_root(flags: &Flags, sys: &RootSystem) -> CliResult<Root> {
    let raw = flags.get("root").unwrap_or("theta");
    let root = if raw == "theta" {
        sys.theta().clone()
    } else if let Some(k) = raw.strip_prefix("simple:") {
        let k: usize = k
            .parse()
            .map_err(|_| CliError::usage(format!("bad simple root `{raw}`")))?;
        if k < 1 || k > sys.rank() {
            return Err(CliError::usage(format!(
                "simple root index {k} out of range"
            )));
        }
        sys.simple_root(k)
    } else {
        let coeffs = parse_int_list(raw, "root coefficient")?;
        if coeffs.len() != sys.rank() {
            return Err(CliError::usage(format!(
                "root has {} coefficients, expected {}",
                coeffs.len(),
                sys.rank()
            )));
        }
        Root::new(coeffs)
    };
    if !sys.is_positive_root(root.coeffs()) {
        return Err(CliError::Failure(format!("{root} is not a positive root")));
    }
    Ok(root)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Tsv,
}

pub fn parse_format(flags: &Flags) -> CliResult<Format> {
    match flags.get("format").unwrap_or("text") {
        "text" => Ok(Format::Text),
        "json" => Ok(Format::Json),
        "tsv" => Ok(Format::Tsv),
        other => Err(CliError::usage(format!("unknown format `{other}`"))),
    }
}

pub fn parse_engine(flags: &Flags) -> CliResult<loopwords::Engine> {
    let s = flags.int_or("s", 3)?;
    match flags.get("engine").unwrap_or("fast") {
        "fast" => Ok(loopwords::Engine::Fast),
        "naive" => Ok(loopwords::Engine::Naive),
        "oracle" => Ok(loopwords::Engine::Oracle { window: s }),
        other => Err(CliError::usage(format!("unknown engine `{other}`"))),
    }
}

/// Writes to `--out` or stdout.
pub fn emit(flags: &Flags, body: &str) -> CliResult<()> {
    match flags.get("out") {
        Some(path) => std::fs::write(path, body)
            .map_err(|e| CliError::Failure(format!("cannot write {path}: {e}"))),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}
