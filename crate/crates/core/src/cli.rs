//! The `htg` command-line front end.
//!
//! Elements are read from a file argument or, when it is absent or `-`, from
//! standard input, and written to standard output in the canonical element
//! format. Exit status: 0 on success, 1 when a table is invalid or a checked
//! property fails, 2 on usage and parse errors. Every failure ends with a
//! single `error: <Kind>: ...` line on standard error.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use crate::embeddings::{
    embed_any, higman_embed, in_mixed_subgroup, iota, pfix_check, CodeEncoding, EmbedRoute,
};
use crate::error::Error;
use crate::format::{self, ElementFile};
use crate::successor::succ_all;
use crate::tables::{GroupElement, Table};
use crate::verify::{Harness, Suite};
use crate::words::{Alphabet, PrefixCode, Word};

#[derive(Debug, Parser)]
#[command(name = "htg", version, about = "Arithmetic and embeddings in the Higman-Thompson groups G_{k,1}")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check that a file holds a valid table.
    Validate { file: Option<String> },
    /// Print the canonical form of an element.
    Normalize { file: Option<String> },
    /// Print F∘G (G is applied first).
    Compose { f: String, g: String },
    /// Print the inverse of an element.
    Invert { file: Option<String> },
    /// Apply an element to a word ('-' is the empty word).
    Apply { file: String, word: String },
    /// Embed an element into G_{j,1}.
    Embed {
        file: Option<String>,
        #[arg(long = "to")]
        to: usize,
        #[arg(long, value_enum, default_value_t = Via::Auto)]
        via: Via,
        /// Encoding words for the Higman route, letter a_0 first.
        #[arg(long)]
        code: Option<String>,
    },
    /// Test a property of an element; exit 0 if it holds, 1 if not.
    Check {
        #[command(subcommand)]
        kind: CheckKind,
    },
    /// Print the *a_i-successor map of a maximal binary prefix code.
    Succ {
        #[arg(long)]
        code: String,
        #[arg(long)]
        letter: u8,
        /// Alphabet the letter must belong to.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Print a reproducible random element.
    Random {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        leaves: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run the seeded verification suites.
    Verify {
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Restrict to the named suites (repeatable).
        #[arg(long = "suite")]
        suites: Vec<String>,
    },
}

#[derive(Debug, Subcommand)]
enum CheckKind {
    /// Membership in G_{k,1}(0,1|2|...|k-1).
    SubgroupMixed { file: Option<String> },
    /// Whether the element partially fixes prefix·A*.
    Pfix {
        #[arg(long)]
        prefix: String,
        file: Option<String>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Via {
    Iota,
    Higman,
    Auto,
}

/// Why a command stopped.
enum Failure {
    /// Exit status 1.
    Property(String),
    /// Exit status 2.
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidTable(_) => Failure::Property(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(format!("IoError: {e}"))
    }
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
    stderr: &'a mut dyn Write,
}

impl Io<'_> {
    fn read_input(&mut self, file: Option<&str>) -> Result<String, Failure> {
        match file {
            None | Some("-") => {
                let mut text = String::new();
                self.stdin.read_to_string(&mut text)?;
                Ok(text)
            }
            Some(path) => fs::read_to_string(path).map_err(|e| Failure::Usage(format!("IoError: {path}: {e}"))),
        }
    }

    fn read_file(&mut self, file: Option<&str>) -> Result<ElementFile, Failure> {
        let text = self.read_input(file)?;
        Ok(format::parse(&text)?)
    }

    fn read_element(&mut self, file: Option<&str>) -> Result<GroupElement, Failure> {
        Ok(self.read_file(file)?.into_element()?)
    }

    fn print_element(&mut self, g: &GroupElement) -> Result<(), Failure> {
        self.stdout.write_all(format::serialize(g).as_bytes())?;
        Ok(())
    }
}

/// Entry point for the binary.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdin = io::stdin();
    let stdout = io::stdout();
    let stderr = io::stderr();
    run(args, &mut stdin.lock(), &mut stdout.lock(), &mut stderr.lock())
}

/// Runs one command against the given streams and returns the exit status.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{e}");
                return 0;
            }
            let _ = write!(stderr, "{}", e.render());
            let _ = writeln!(stderr, "error: Usage: {}", first_line(&e.to_string()));
            return 2;
        }
    };
    let mut io = Io { stdin, stdout, stderr };
    let result = dispatch(cli.command, &mut io);
    let _ = io.stdout.flush();
    match result {
        Ok(()) => 0,
        Err(Failure::Property(msg)) => {
            let _ = writeln!(io.stderr, "error: {msg}");
            1
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(io.stderr, "error: {msg}");
            2
        }
    }
}

fn first_line(s: &str) -> &str {
    s.lines().next().unwrap_or("").trim_start_matches("error: ")
}

fn alphabet(n: usize) -> Result<Alphabet, Failure> {
    Ok(Alphabet::new(n)?)
}

fn dispatch(command: Command, io: &mut Io<'_>) -> Result<(), Failure> {
    match command {
        Command::Validate { file } => {
            let parsed = io.read_file(file.as_deref())?;
            let defects = Table::check(parsed.k, &parsed.pairs);
            if defects.is_empty() {
                writeln!(io.stdout, "valid: {} pairs over {} letters", parsed.pairs.len(), parsed.k)?;
                Ok(())
            } else {
                for d in &defects {
                    writeln!(io.stderr, "invalid: {d}")?;
                }
                Err(Error::InvalidTable(defects).into())
            }
        }
        Command::Normalize { file } => {
            let g = io.read_element(file.as_deref())?;
            io.print_element(&g)
        }
        Command::Compose { f, g } => {
            let f = io.read_element(Some(&f))?;
            let g = io.read_element(Some(&g))?;
            io.print_element(&f.compose(&g)?)
        }
        Command::Invert { file } => {
            let g = io.read_element(file.as_deref())?;
            io.print_element(&g.inverse())
        }
        Command::Apply { file, word } => {
            let g = io.read_element(Some(&file))?;
            let x: Word = word.parse()?;
            g.alphabet().check_word(&x)?;
            match g.apply(&x) {
                Some(y) => writeln!(io.stdout, "{y}")?,
                None => writeln!(io.stdout, "undefined")?,
            }
            Ok(())
        }
        Command::Embed { file, to, via, code } => {
            let to = alphabet(to)?;
            let g = io.read_element(file.as_deref())?;
            let image = match via {
                Via::Iota => iota(&g, to)?,
                Via::Higman => {
                    let enc = match code {
                        Some(list) => CodeEncoding::new(g.alphabet(), to, format::parse_word_list(&list)?)?,
                        None => CodeEncoding::canonical(g.alphabet(), to).map_err(|e| match e {
                            Error::ImpossibleCodeSize { .. } => {
                                Failure::Usage(format!("{e} (try --via auto)"))
                            }
                            other => other.into(),
                        })?,
                    };
                    higman_embed(&g, &enc)?
                }
                Via::Auto => {
                    if code.is_some() {
                        return Err(Failure::Usage("Usage: --code needs --via higman".into()));
                    }
                    let route = EmbedRoute::choose(g.alphabet(), to);
                    writeln!(io.stderr, "route: {}", route.describe())?;
                    embed_any(&g, to)?
                }
            };
            io.print_element(&image)
        }
        Command::Check { kind } => {
            let (holds, what) = match kind {
                CheckKind::SubgroupMixed { file } => {
                    let g = io.read_element(file.as_deref())?;
                    (in_mixed_subgroup(&g), "element is not in the mixed subgroup".to_string())
                }
                CheckKind::Pfix { prefix, file } => {
                    let g = io.read_element(file.as_deref())?;
                    let w: Word = prefix.parse()?;
                    g.alphabet().check_word(&w)?;
                    (pfix_check(&g, &w), format!("element does not partially fix {w}·A*"))
                }
            };
            writeln!(io.stdout, "{holds}")?;
            if holds {
                Ok(())
            } else {
                Err(Failure::Property(format!("CheckFailed: {what}")))
            }
        }
        Command::Succ { code, letter, k } => {
            if let Some(k) = k {
                let k = alphabet(k)?;
                if letter >= k.size() {
                    return Err(Error::InvalidLetter { letter, k: k.size() }.into());
                }
            }
            let code = PrefixCode::new(Alphabet::BINARY, format::parse_word_list(&code)?)?;
            for (p, s) in succ_all(&code, letter)? {
                writeln!(io.stdout, "{p} -> {s}")?;
            }
            Ok(())
        }
        Command::Random { k, leaves, seed } => {
            let g = GroupElement::random(alphabet(k)?, leaves, seed)?;
            io.print_element(&g)
        }
        Command::Verify { trials, seed, suites } => {
            let selected = if suites.is_empty() {
                Suite::ALL.to_vec()
            } else {
                suites
                    .iter()
                    .map(|name| {
                        Suite::from_name(name).ok_or_else(|| Failure::Usage(format!("Usage: unknown suite {name:?}")))
                    })
                    .collect::<Result<Vec<_>, _>>()?
            };
            let start = Instant::now();
            let report = Harness::new(seed).run(&selected, trials);
            writeln!(io.stdout, "{report}")?;
            writeln!(io.stderr, "wall time: {:.3}s", start.elapsed().as_secs_f64())?;
            if report.passed() {
                Ok(())
            } else {
                let failed: Vec<&str> =
                    report.suites.iter().filter(|s| !s.passed()).map(|s| s.suite.name()).collect();
                Err(Failure::Property(format!("VerifyFailed: {}", failed.join(","))))
            }
        }
    }
}
