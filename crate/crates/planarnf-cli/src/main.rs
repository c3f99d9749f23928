//! Command-line front end: parse a planar system, run the reduction
//! pipeline, and print a text or JSON report.

use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use planarnf::homology::FreePolicy;
use planarnf::parse::parse_system;
use planarnf::pipeline::{run_pipeline, PipelineError, RunConfig, Scheme};

const USAGE: &str = "\
usage: planarnf [options] [input-file]

Reads a two-line system (`dx = <poly>`, `dy = <poly>`) from the file or
from standard input and prints the reduction report.

options:
  --order N          truncation grade (default 9)
  --scheme S         nf | prf-a | prf-b | lrf (default prf-a)
  --json             emit the JSON report instead of text
  --log              include the transformation log
  --analyticity      include the analyticity intervals of the composed
                     coordinate change (pure-X chains)
  --free P           zero | min-norm: free-component policy (default zero)
  --batch DIR        process every regular file in DIR
  --help             this text

exit codes: 0 success, 2 parse error, 3 unsupported linear part,
4 internal error.
";

struct Options {
    cfg: RunConfig,
    json: bool,
    input: Option<PathBuf>,
    batch: Option<PathBuf>,
}

fn parse_args() -> Result<Options, String> {
    let mut cfg = RunConfig::default();
    let mut json = false;
    let mut input = None;
    let mut batch = None;
    let mut args = std::env::args().skip(1);
    while let Some(arg) = args.next() {
        match arg.as_str() {
            "--help" | "-h" => {
                print!("{USAGE}");
                std::process::exit(0);
            }
            "--order" => {
                let v = args.next().ok_or("--order needs a value")?;
                cfg.order = v.parse().map_err(|_| format!("bad order `{v}`"))?;
                if cfg.order < 1 {
                    return Err("order must be at least 1".to_string());
                }
            }
            "--scheme" => {
                let v = args.next().ok_or("--scheme needs a value")?;
                cfg.scheme = Scheme::parse(&v).ok_or_else(|| format!("unknown scheme `{v}`"))?;
            }
            "--json" => json = true,
            "--log" => cfg.emit_log = true,
            "--analyticity" => cfg.emit_analyticity = true,
            "--free" => {
                let v = args.next().ok_or("--free needs a value")?;
                cfg.free_policy = match v.as_str() {
                    "zero" => FreePolicy::ZeroFree,
                    "min-norm" => FreePolicy::MinNorm,
                    _ => return Err(format!("unknown free-component policy `{v}`")),
                };
            }
            "--batch" => {
                let v = args.next().ok_or("--batch needs a directory")?;
                batch = Some(PathBuf::from(v));
            }
            other if other.starts_with('-') => {
                return Err(format!("unknown option `{other}`"));
            }
            other => {
                if input.is_some() {
                    return Err("more than one input file given".to_string());
                }
                input = Some(PathBuf::from(other));
            }
        }
    }
    Ok(Options {
        cfg,
        json,
        input,
        batch,
    })
}

fn run_one(text: &str, opts: &Options) -> u8 {
    let jet = match parse_system(text, opts.cfg.order) {
        Ok(jet) => jet,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    match run_pipeline(&jet, &opts.cfg) {
        Ok(outcome) => {
            if opts.json {
                println!("{}", outcome.report.to_json());
            } else {
                print!("{}", outcome.report.render_text());
            }
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                PipelineError::Unsupported(_) | PipelineError::Classify(_) => 3,
                _ => 4,
            }
        }
    }
}

fn read_input(path: Option<&Path>) -> Result<String, String> {
    match path {
        Some(p) => std::fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display())),
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| format!("stdin: {e}"))?;
            Ok(buf)
        }
    }
}

fn main() -> ExitCode {
    let opts = match parse_args() {
        Ok(o) => o,
        Err(msg) => {
            eprintln!("error: {msg}");
            eprint!("{USAGE}");
            return ExitCode::from(2);
        }
    };
    if let Some(dir) = &opts.batch {
        let mut entries: Vec<PathBuf> = match std::fs::read_dir(dir) {
            Ok(rd) => rd
                .filter_map(|e| e.ok().map(|e| e.path()))
                .filter(|p| p.is_file())
                .collect(),
            Err(e) => {
                eprintln!("error: {}: {e}", dir.display());
                return ExitCode::from(2);
            }
        };
        entries.sort();
        let mut worst = 0u8;
        for path in entries {
            println!("== {}", path.display());
            let code = match read_input(Some(&path)) {
                Ok(text) => run_one(&text, &opts),
                Err(msg) => {
                    eprintln!("error: {msg}");
                    2
                }
            };
            worst = worst.max(code);
        }
        return ExitCode::from(worst);
    }
    match read_input(opts.input.as_deref()) {
        Ok(text) => ExitCode::from(run_one(&text, &opts)),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
