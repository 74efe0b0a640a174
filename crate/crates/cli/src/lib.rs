//! The `legrack` command line.
//!
//! Inputs are file paths, `-` for stdin, or `corpus:<name>` for a bundled
//! entry (`corpus:K3` is a code, `corpus:K3.pres` a presentation).

use std::io::{Read, Write};

use clap::{Parser, Subcommand, ValueEnum};

use legrack::audit::{corollary_gate, theorem1_gate};
use legrack::coloring::{
    closed_form_permutation, coloring_profile, count_colorings_with, ColoringOptions, DEFAULT_EMIT_CAP,
};
use legrack::corpus;
use legrack::frontcode::{apply_move, move_instances, stabilize, Direction, MoveKind, MoveSpec, Stabilization};
use legrack::glrack::{
    enumerate_glracks, enumerate_glracks_up_to, is_isomorphic, mk_permutation_family, mk_trivial, FiniteGlRack,
};
use legrack::presentation::{extract_full, extract_reduced, summarize_code, Presentation, PresentationSummary};
use legrack::FrontCode;

#[derive(Parser, Debug)]
#[command(name = "legrack", version, about = "Legendrian front codes and GL-rack coloring invariants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Dir {
    Fwd,
    Bwd,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a front code and list every violation.
    Validate { code: String },
    /// Print tb, rot, writhe and cusp counts of a front code.
    Invariants { code: String },
    /// Extract the full or reduced presentation of a front code.
    Present {
        code: String,
        #[arg(long, conflicts_with = "reduced")]
        full: bool,
        #[arg(long)]
        reduced: bool,
        /// Print relations as equations, generators 1-based.
        #[arg(long)]
        pretty: bool,
        /// Generator letter used by --pretty.
        #[arg(long, default_value_t = 'x')]
        letter: char,
    },
    /// Summarize a presentation (or a front code).
    Summary { pres: String },
    /// Count colorings of a presentation by a GL-rack.
    Color {
        pres: String,
        /// A rack file, `perm:<k>:<a>:<b>` or `trivial:<n>`.
        #[arg(long)]
        rack: String,
        #[arg(long)]
        emit_colorings: bool,
        #[arg(long, default_value_t = DEFAULT_EMIT_CAP)]
        cap: usize,
    },
    /// Coloring counts against every GL-rack class up to an order.
    Profile {
        pres: String,
        #[arg(long)]
        max_order: usize,
    },
    /// List the GL-rack classes of one order.
    Enumerate {
        #[arg(long)]
        order: usize,
    },
    /// Decide whether two GL-racks are isomorphic.
    Iso { a: String, b: String },
    /// Compare two knots through their presentation summaries.
    Gate {
        a: String,
        b: String,
        #[arg(long)]
        slice_genus: Option<u64>,
    },
    /// Add a zigzag: `+` inserts two Down cusps, `-` two Up cusps.
    Stabilize {
        code: String,
        #[arg(allow_hyphen_values = true)]
        kind: String,
        #[arg(long)]
        site: usize,
    },
    /// Apply a Legendrian Reidemeister move.
    Move {
        code: String,
        #[arg(long = "move")]
        kind: u8,
        #[arg(long, value_enum)]
        dir: Dir,
        #[arg(long)]
        site: String,
    },
    /// List every move instance that applies to a code.
    Moves { code: String },
    /// Permutation rack count from the summary alone.
    OracleColor {
        input: String,
        #[arg(long)]
        k: u64,
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
        #[arg(long, allow_hyphen_values = true)]
        b: i64,
    },
}

struct Ctx<'a> {
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
}

type Res = Result<(), String>;

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

impl Ctx<'_> {
    fn read(&mut self, src: &str) -> Result<String, String> {
        if src == "-" {
            let mut s = String::new();
            self.stdin.read_to_string(&mut s).map_err(|e| format!("stdin: {e}"))?;
            return Ok(s);
        }
        if let Some(name) = src.strip_prefix("corpus:") {
            return corpus::raw(name).map(str::to_string).ok_or_else(|| format!("no corpus entry `{name}`"));
        }
        std::fs::read_to_string(src).map_err(|e| format!("{src}: {e}"))
    }

    fn code(&mut self, src: &str) -> Result<FrontCode, String> {
        FrontCode::parse(&self.read(src)?).map_err(|e| format!("{src}: {e}"))
    }

    /// A presentation file, or a code turned into its reduced presentation
    /// (full when it has no crossings).
    fn presentation(&mut self, src: &str) -> Result<Presentation, String> {
        let text = self.read(src)?;
        if first_keyword(&text) == Some("knot") {
            let c = FrontCode::parse(&text).map_err(|e| format!("{src}: {e}"))?;
            return if c.crossing_count() > 0 {
                extract_reduced(&c).map(Into::into).map_err(err)
            } else {
                extract_full(&c).map(Into::into).map_err(err)
            };
        }
        Presentation::parse(&text).map_err(|e| format!("{src}: {e}"))
    }

    fn summary(&mut self, src: &str) -> Result<PresentationSummary, String> {
        let text = self.read(src)?;
        match first_keyword(&text) {
            Some("omega") => PresentationSummary::parse(&text).map_err(|e| format!("{src}: {e}")),
            Some("knot") => {
                let c = FrontCode::parse(&text).map_err(|e| format!("{src}: {e}"))?;
                summarize_code(&c).map_err(err)
            }
            _ => self.presentation(src)?.summary().map_err(err),
        }
    }

    fn rack(&mut self, src: &str) -> Result<FiniteGlRack, String> {
        if let Some(rest) = src.strip_prefix("perm:") {
            let parts: Vec<&str> = rest.split(':').collect();
            let bad = || format!("bad rack shorthand `{src}`, expected perm:<k>:<a>:<b>");
            if parts.len() != 3 {
                return Err(bad());
            }
            let k: usize = parts[0].parse().map_err(|_| bad())?;
            let a: i64 = parts[1].parse().map_err(|_| bad())?;
            let b: i64 = parts[2].parse().map_err(|_| bad())?;
            return mk_permutation_family(k, a, b).map_err(err);
        }
        if let Some(rest) = src.strip_prefix("trivial:") {
            let n: usize = rest.parse().map_err(|_| format!("bad rack shorthand `{src}`, expected trivial:<n>"))?;
            if n == 0 {
                return Err("trivial rack needs n >= 1".into());
            }
            return Ok(mk_trivial(n));
        }
        FiniteGlRack::parse(&self.read(src)?).map_err(|e| format!("{src}: {e}"))
    }

    fn print(&mut self, s: &str) -> Res {
        self.out.write_all(s.as_bytes()).map_err(err)
    }

    fn line(&mut self, s: impl std::fmt::Display) -> Res {
        writeln!(self.out, "{s}").map_err(err)
    }
}

fn first_keyword(text: &str) -> Option<&str> {
    text.lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .and_then(|l| l.split_whitespace().next())
}

fn dispatch(cmd: Command, cx: &mut Ctx) -> Res {
    match cmd {
        Command::Validate { code } => {
            let c = cx.code(&code)?;
            let v = c.validate();
            if !v.is_empty() {
                let msgs: Vec<String> = v.iter().map(|v| v.to_string()).collect();
                return Err(format!("invalid: {}", msgs.join("; ")));
            }
            cx.line("valid")
        }
        Command::Invariants { code } => {
            let ci = cx.code(&code)?.classical_invariants().map_err(err)?;
            cx.print(&format!(
                "tb {}\nrot {}\nwrithe {}\nup {}\ndown {}\n",
                ci.tb, ci.rot, ci.writhe, ci.up_cusps, ci.down_cusps
            ))
        }
        Command::Present { code, full, reduced: _, pretty, letter } => {
            let c = cx.code(&code)?;
            if full {
                let fp = extract_full(&c).map_err(err)?;
                if pretty {
                    return Err("--pretty applies to the reduced presentation".into());
                }
                return cx.print(&fp.to_text());
            }
            let rp = extract_reduced(&c).map_err(err)?;
            if pretty {
                for l in rp.pretty(letter) {
                    cx.line(l)?;
                }
                Ok(())
            } else {
                cx.print(&rp.to_text())
            }
        }
        Command::Summary { pres } => {
            let s = cx.summary(&pres)?;
            cx.print(&s.to_text())
        }
        Command::Color { pres, rack, emit_colorings, cap } => {
            let p = cx.presentation(&pres)?;
            let x = cx.rack(&rack)?;
            let r = count_colorings_with(&p, &x, ColoringOptions { emit: emit_colorings, cap }).map_err(err)?;
            cx.line(r.count)?;
            for a in r.colorings.unwrap_or_default() {
                let s: Vec<String> = a.iter().map(|v| v.to_string()).collect();
                cx.line(s.join(" "))?;
            }
            Ok(())
        }
        Command::Profile { pres, max_order } => {
            let p = cx.presentation(&pres)?;
            let racks = enumerate_glracks_up_to(max_order).map_err(err)?;
            let counts = coloring_profile(&p, &racks).map_err(err)?;
            let mut index = 0;
            let mut order = 0;
            for (x, c) in racks.iter().zip(counts) {
                if x.order() != order {
                    order = x.order();
                    index = 0;
                }
                cx.line(format!("{order} {index} {c}"))?;
                index += 1;
            }
            Ok(())
        }
        Command::Enumerate { order } => {
            let xs = enumerate_glracks(order).map_err(err)?;
            let total = xs.len();
            for (i, x) in xs.iter().enumerate() {
                cx.line(format!("# class {} of {total}", i + 1))?;
                cx.print(&x.to_text())?;
            }
            Ok(())
        }
        Command::Iso { a, b } => {
            let (x, y) = (cx.rack(&a)?, cx.rack(&b)?);
            match is_isomorphic(&x, &y) {
                Some(f) => {
                    let s: Vec<String> = f.iter().map(|v| v.to_string()).collect();
                    cx.print(&format!("isomorphic\nmap {}\n", s.join(" ")))
                }
                None => cx.line("not isomorphic"),
            }
        }
        Command::Gate { a, b, slice_genus } => {
            let (s1, s2) = (cx.summary(&a)?, cx.summary(&b)?);
            let text = match slice_genus {
                None => theorem1_gate(&s1, &s2).map_err(err)?.to_text(),
                Some(g) => corollary_gate(&s1, &s2, g).map_err(err)?.to_text(),
            };
            cx.print(&text)
        }
        Command::Stabilize { code, kind, site } => {
            let kind = match kind.as_str() {
                "+" => Stabilization::Plus,
                "-" => Stabilization::Minus,
                k => return Err(format!("stabilization must be `+` or `-`, found `{k}`")),
            };
            let c = cx.code(&code)?;
            let s = stabilize(&c, kind, site).map_err(err)?;
            cx.print(&s.to_text())
        }
        Command::Move { code, kind, dir, site } => {
            let kind = match kind {
                1 => MoveKind::Lr1,
                2 => MoveKind::Lr2,
                3 => MoveKind::Lr3,
                k => return Err(format!("--move must be 1, 2 or 3, found {k}")),
            };
            let dir = match dir {
                Dir::Fwd => Direction::Forward,
                Dir::Bwd => Direction::Backward,
            };
            let spec = MoveSpec::parse(kind, dir, &site).map_err(err)?;
            let c = cx.code(&code)?;
            let m = apply_move(&c, &spec).map_err(err)?;
            cx.print(&m.to_text())
        }
        Command::Moves { code } => {
            let c = cx.code(&code)?;
            c.ensure_valid().map_err(err)?;
            for m in move_instances(&c) {
                cx.line(m)?;
            }
            Ok(())
        }
        Command::OracleColor { input, k, a, b } => {
            let s = cx.summary(&input)?;
            let n = closed_form_permutation(&s, k, a, b).map_err(err)?;
            cx.line(n)
        }
    }
}

/// Runs one command line (including the program name). Returns the exit
/// status: 0 on success, 1 on domain errors, 2 on usage errors.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, errw: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(errw, "{}", e.render());
                    2
                }
            };
        }
    };
    let mut cx = Ctx { stdin, out };
    match dispatch(cli.command, &mut cx) {
        Ok(()) => 0,
        Err(msg) => {
            let one_line = msg.replace('\n', " ");
            let _ = writeln!(errw, "error: {one_line}");
            1
        }
    }
}

/// Runs with in-memory stdin and returns `(status, stdout, stderr)`.
pub fn run_capture<I, T>(args: I, stdin: &str) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let (mut out, mut e) = (Vec::new(), Vec::new());
    let mut input = stdin.as_bytes();
    let code = run(args, &mut input, &mut out, &mut e);
    (code, String::from_utf8_lossy(&out).into_owned(), String::from_utf8_lossy(&e).into_owned())
}
