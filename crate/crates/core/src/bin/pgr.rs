//! `pgr`: command-line front end for polyadic group rings.

use std::io::{self, IsTerminal, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use pgr_core::dsl::{self, Outcome, Overrides, RunOptions, Session};

#[derive(Parser, Debug)]
#[command(
    name = "pgr",
    version,
    about = "Exact arithmetic in polyadic group rings",
    after_help = "Verbs: eval, mul, add, aug, quer, identities [group|ring|groupring], table [keys..], \
                  verify [target|all], arity, repl.\n\
                  Operands of mul and add are separated by ';'.\n\
                  Exit codes: 0 ok, 1 parse error, 2 arity/domain/config error, 3 verification failure."
)]
struct Cli {
    /// JSON configuration file.
    #[arg(long, env = "PGR_CONFIG")]
    config: Option<PathBuf>,
    /// Ring family: jroot or integers.
    #[arg(long)]
    ring: Option<String>,
    /// Root order q of j (j^q = -1).
    #[arg(long)]
    q: Option<u32>,
    /// Reduce ring coefficients modulo this number.
    #[arg(long = "mod")]
    modulus: Option<u64>,
    /// Group family: adiag or derived.
    #[arg(long)]
    group: Option<String>,
    /// Cyclic order for adiag groups.
    #[arg(long)]
    k: Option<u32>,
    /// Base of a derived group, e.g. cyclic:3.
    #[arg(long)]
    base: Option<String>,
    /// Arity of a derived group.
    #[arg(long)]
    arity: Option<usize>,
    #[arg(long = "ell-m")]
    ell_m: Option<u64>,
    #[arg(long = "ell-n")]
    ell_n: Option<u64>,
    #[arg(long = "ell-g")]
    ell_g: Option<u64>,
    /// Seed for sampled verification.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Machine-readable output.
    #[arg(long)]
    json: bool,
    /// The verb.
    verb: String,
    /// Operands of the verb.
    #[arg(trailing_var_arg = true, allow_hyphen_values = true)]
    args: Vec<String>,
}

fn emit(o: &Outcome) -> ExitCode {
    if !o.text.is_empty() {
        if o.code == dsl::EXIT_OK || o.code == dsl::EXIT_VERIFY {
            println!("{}", o.text);
        } else {
            eprintln!("{}", o.text);
        }
    }
    ExitCode::from(o.code as u8)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let overrides = Overrides {
        ring: cli.ring,
        q: cli.q,
        modulus: cli.modulus,
        group: cli.group,
        k: cli.k,
        base: cli.base,
        arity: cli.arity,
        ell_m: cli.ell_m,
        ell_n: cli.ell_n,
        ell_g: cli.ell_g,
    };
    let opts = RunOptions { seed: cli.seed, json: cli.json };
    let (spec, ctx) = match dsl::load_config(cli.config.as_deref(), &overrides) {
        Ok(x) => x,
        Err(e) => return emit(&Outcome::error(&e, opts.json)),
    };
    if cli.verb == "repl" {
        let mut session = match Session::new(spec, opts) {
            Ok(s) => s,
            Err(e) => return emit(&Outcome::error(&e, opts.json)),
        };
        let stdin = io::stdin();
        let prompt = stdin.is_terminal();
        let stdout = io::stdout();
        if let Err(e) = session.run(stdin.lock(), stdout.lock(), prompt) {
            eprintln!("error: {e}");
            return ExitCode::from(dsl::EXIT_DOMAIN as u8);
        }
        let _ = io::stdout().flush();
        return ExitCode::SUCCESS;
    }
    let line = std::iter::once(cli.verb).chain(cli.args).collect::<Vec<_>>().join(" ");
    let outcome = match dsl::parse_command(&line) {
        Ok(cmd) => dsl::run_command(&ctx, &cmd, &opts),
        Err(e) => Outcome::error(&e, opts.json),
    };
    emit(&outcome)
}
