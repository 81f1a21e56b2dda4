//! `loopwords` — standard Lyndon loop words from the command line.

mod args;
mod commands;

use args::{CliError, Flags};

const USAGE: &str = "\
loopwords — standard Lyndon loop words for the simple Lie types

USAGE:
    loopwords <COMMAND> [--flag value]...

COMMANDS:
    word     Compute one standard Lyndon loop word l(alpha, d)
    table    Compute words for a set of roots over a d-window
    verify   Run a cross-check suite; nonzero exit on any failure
    weyl     Affine Weyl utilities (beta sequence, reduced words, ...)
    typea    Divisible-weight closed forms (first-letter table, ...)

COMMON FLAGS:
    --type A|B|C|D|E6|E7|E8|F4|G2    Lie type (required)
    --rank N                         rank, required for A/B/C/D
    --order 5,1,3,2,4 | 51324        nodes listed in increasing order
    --weights c1,c2,...              weighted policy (default: all 1)
    --pos-slopes a1,a2,... --neg-slopes b1,b2,...
                                     generalized policy (rationals like 1/2)
    --root theta|simple:K|k1,k2,...  root selector (default theta)
    --d N | --d-range LO..HI         vertical degree(s)
    --engine fast|naive|oracle       word engine (default fast)
    --s N                            alphabet window for oracle engine
    --format text|json|tsv           output format (default text)
    --out PATH                       write output to a file

EXAMPLES:
    loopwords word --type A --rank 4 --order 1,2,3,4 --weights 1,1,1,1 --root theta --d 1
    loopwords table --type G2 --order 2,1 --weights 2,3 --root theta --d-range 11..13
    loopwords verify --suite oracle --type A --rank 2 --weights 1,1 --s 2 --d-range -2..4
    loopwords weyl --emit p-constants --type A --rank 2 --weights 2,3 --i 1 --d 4
    loopwords typea --n 4 --weights 1,2,6,12 --emit table

EXIT CODES:
    0  success
    1  computation or invariant failure
    2  usage error
";

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let Some(command) = argv.first() else {
        eprint!("{USAGE}");
        return 2;
    };
    if command == "--help" || command == "-h" || command == "help" {
        print!("{USAGE}");
        return 0;
    }
    let result = Flags::parse(&argv[1..]).and_then(|flags| match command.as_str() {
        "word" => commands::cmd_word(&flags),
        "table" => commands::cmd_table(&flags),
        "verify" => commands::cmd_verify(&flags),
        "weyl" => commands::cmd_weyl(&flags),
        "typea" => commands::cmd_typea(&flags),
        other => Err(CliError::usage(format!("unknown command `{other}`"))),
    });
    match result {
        Ok(()) => 0,
        Err(CliError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            eprintln!("run `loopwords --help` for usage");
            2
        }
        Err(CliError::Failure(msg)) => {
            eprintln!("error: {msg}");
            1
        }
    }
}
