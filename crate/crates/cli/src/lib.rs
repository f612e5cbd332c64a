//! Command-line front end for `weylcalc-core`.
//!
//! [`run`] takes the argument list and the three standard streams so it can
//! be driven from tests; the binary is a thin wrapper around it.

use std::ffi::OsString;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use weylcalc_core::{
    closed_elements, closure, decompose_into_roots, dominance_leq, ext_vanishing, hom_dim,
    pair_simple_qchar, parse_lweight, parse_multisegment, socle, subcategory_membership,
    weyl_dominant_weights, weyl_qchar, ClosureSet, Error, ExtVerdict, LWeight, Multisegment, QChar,
    RootVector, Segment, Sign,
};

#[derive(Parser, Debug)]
#[command(
    name = "weylcalc",
    version,
    about = "Multisegment calculus for Weyl modules"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
struct Common {
    /// The rank n of sl(n+1).
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    rank: u32,
    /// Emit a single JSON document instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum SignArg {
    Plus,
    Minus,
}

impl From<SignArg> for Sign {
    fn from(s: SignArg) -> Sign {
        match s {
            SignArg::Plus => Sign::Plus,
            SignArg::Minus => Sign::Minus,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Side {
    Right,
    Left,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// All members of the closure, sorted.
    Closure {
        #[command(flatten)]
        common: Common,
        ms: String,
    },
    /// One representative per orbit of closed closure members.
    Closed {
        #[command(flatten)]
        common: Common,
        ms: String,
    },
    /// Socle summands of the Weyl module: weight and representative.
    Socle {
        #[command(flatten)]
        common: Common,
        ms: String,
    },
    /// Dimension of Hom(W(src), W(dst)), 0 or 1.
    Hom {
        #[command(flatten)]
        common: Common,
        src: String,
        dst: String,
    },
    /// Dominant l-weights of the Weyl module.
    DominantWeights {
        #[command(flatten)]
        common: Common,
        ms: String,
    },
    /// q-character of the Weyl module (or of the simple module of a
    /// connected pair with --simple).
    Qchar {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        simple: bool,
        ms: String,
    },
    /// Whether an l-weight is dominant.
    Dominant {
        #[command(flatten)]
        common: Common,
        weight: String,
    },
    /// Exponents of an l-weight in the l-root basis.
    AlphaDecompose {
        #[command(flatten)]
        common: Common,
        weight: String,
    },
    /// Whether w1 <= w2 in the dominance order.
    Leq {
        #[command(flatten)]
        common: Common,
        w1: String,
        w2: String,
    },
    /// Right or left dual, partwise.
    Dual {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum)]
        side: Side,
        ms: String,
    },
    /// iota at position --at (1-based) and the next.
    Iota {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum)]
        sign: SignArg,
        #[arg(long)]
        at: usize,
        ms: String,
    },
    /// The normal form s+ or s-.
    Normalform {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum)]
        sign: SignArg,
        ms: String,
    },
    /// Disjointness certificate for Ext between two Weyl modules.
    ExtCheck {
        #[command(flatten)]
        common: Common,
        ms1: String,
        ms2: String,
    },
    /// Whether a dominant l-weight lies in the subcategory built on a tuple.
    Subcat {
        #[command(flatten)]
        common: Common,
        base: String,
        weight: String,
    },
}

enum Failure {
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Internal(_) => Failure::Internal(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

struct Inputs<'a> {
    stdin: &'a mut dyn Read,
    used: bool,
}

impl Inputs<'_> {
    /// The argument itself, or all of stdin when it is `-`.
    fn text(&mut self, arg: &str) -> Result<String, Failure> {
        if arg != "-" {
            return Ok(arg.to_string());
        }
        if self.used {
            return Err(Failure::Usage("stdin can be read only once".into()));
        }
        self.used = true;
        let mut buf = String::new();
        self.stdin
            .read_to_string(&mut buf)
            .map_err(|e| Failure::Usage(format!("reading stdin: {e}")))?;
        Ok(buf.trim().to_string())
    }

    fn ms(&mut self, arg: &str, rank: u32) -> Result<Multisegment, Failure> {
        let ms = parse_multisegment(&self.text(arg)?)?;
        ms.check(rank)?;
        Ok(ms)
    }

    fn weight(&mut self, arg: &str, rank: u32) -> Result<LWeight, Failure> {
        Ok(parse_lweight(&self.text(arg)?, rank)?)
    }
}

pub fn segment_json(s: Segment) -> Value {
    json!([s.left(), s.right()])
}

pub fn multisegment_json(ms: &Multisegment) -> Value {
    Value::Array(ms.parts().iter().map(|&s| segment_json(s)).collect())
}

pub fn lweight_json(w: &LWeight) -> Value {
    Value::Array(
        w.iter()
            .map(|(s, e)| json!({"segment": segment_json(s), "exp": e}))
            .collect(),
    )
}

pub fn root_vector_json(g: &RootVector) -> Value {
    Value::Array(
        g.iter()
            .map(|(s, c)| json!({"root": segment_json(s), "coeff": c}))
            .collect(),
    )
}

pub fn qchar_json(q: &QChar) -> Value {
    Value::Array(
        q.iter()
            .map(|(w, m)| json!({"weight": lweight_json(w), "mult": m}))
            .collect(),
    )
}

pub fn closure_json(c: &ClosureSet) -> Value {
    let list = |v: &[Multisegment]| Value::Array(v.iter().map(multisegment_json).collect());
    json!({
        "rank": c.rank,
        "seed": multisegment_json(&c.seed),
        "members": list(&c.members),
        "closed": list(&c.closed_members),
        "orbit_reps": list(&c.orbit_representatives),
    })
}

fn lines<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string() + "\n").collect()
}

fn ms_list(items: &[Multisegment]) -> (String, Value) {
    (
        lines(items),
        Value::Array(items.iter().map(multisegment_json).collect()),
    )
}

fn flag(b: bool) -> (String, Value) {
    (format!("{b}\n"), Value::Bool(b))
}

fn execute(command: Command, inputs: &mut Inputs<'_>) -> Result<(bool, String, Value), Failure> {
    use Command::*;
    let (common, (text, value)) = match command {
        Closure { common, ms } => {
            let c = closure(&inputs.ms(&ms, common.rank)?, common.rank)?;
            (common, (lines(&c.members), closure_json(&c)))
        }
        Closed { common, ms } => {
            let reps = closed_elements(&inputs.ms(&ms, common.rank)?, common.rank)?;
            (common, ms_list(&reps))
        }
        Socle { common, ms } => {
            let soc = socle(&inputs.ms(&ms, common.rank)?, common.rank)?;
            let text = lines(
                soc.iter()
                    .map(|s| format!("{}\t{}", s.weight, s.representative)),
            );
            let value = soc
                .iter()
                .map(|s| {
                    json!({
                        "weight": lweight_json(&s.weight),
                        "representative": multisegment_json(&s.representative),
                    })
                })
                .collect();
            (common, (text, Value::Array(value)))
        }
        Hom { common, src, dst } => {
            let (a, b) = (inputs.ms(&src, common.rank)?, inputs.ms(&dst, common.rank)?);
            let d = hom_dim(&a, &b, common.rank)?;
            (common, (format!("{d}\n"), json!(d)))
        }
        DominantWeights { common, ms } => {
            let ws = weyl_dominant_weights(&inputs.ms(&ms, common.rank)?, common.rank)?;
            let value = Value::Array(ws.iter().map(lweight_json).collect());
            (common, (lines(&ws), value))
        }
        Qchar { common, simple, ms } => {
            let ms = inputs.ms(&ms, common.rank)?;
            let q = if simple {
                pair_simple_qchar(&ms, common.rank)?
            } else {
                weyl_qchar(&ms, common.rank)?
            };
            (common, (q.to_string(), qchar_json(&q)))
        }
        Dominant { common, weight } => {
            let w = inputs.weight(&weight, common.rank)?;
            (common, flag(w.is_dominant()))
        }
        AlphaDecompose { common, weight } => {
            let g = decompose_into_roots(&inputs.weight(&weight, common.rank)?, common.rank)?;
            (common, (format!("{g}\n"), root_vector_json(&g)))
        }
        Leq { common, w1, w2 } => {
            let a = inputs.weight(&w1, common.rank)?;
            let b = inputs.weight(&w2, common.rank)?;
            (common, flag(dominance_leq(&a, &b, common.rank)))
        }
        Dual { common, side, ms } => {
            let ms = inputs.ms(&ms, common.rank)?;
            let d = match side {
                Side::Right => ms.dual_right(common.rank),
                Side::Left => ms.dual_left(common.rank),
            };
            (common, (format!("{d}\n"), multisegment_json(&d)))
        }
        Iota {
            common,
            sign,
            at,
            ms,
        } => {
            let t = inputs
                .ms(&ms, common.rank)?
                .iota_at(at, sign.into(), common.rank)?;
            (common, (format!("{t}\n"), multisegment_json(&t)))
        }
        Normalform { common, sign, ms } => {
            let t = inputs
                .ms(&ms, common.rank)?
                .normal_form(sign.into(), common.rank);
            (common, (format!("{t}\n"), multisegment_json(&t)))
        }
        ExtCheck { common, ms1, ms2 } => {
            let (a, b) = (inputs.ms(&ms1, common.rank)?, inputs.ms(&ms2, common.rank)?);
            let out = match ext_vanishing(&a, &b, common.rank)? {
                ExtVerdict::Vanishes => ("vanishes\n".to_string(), json!({"vanishes": true})),
                ExtVerdict::Inconclusive { shared } => (
                    format!("inconclusive\t{shared}\n"),
                    json!({"vanishes": false, "shared": lweight_json(&shared)}),
                ),
            };
            (common, out)
        }
        Subcat {
            common,
            base,
            weight,
        } => {
            let base = inputs.ms(&base, common.rank)?;
            let w = inputs.weight(&weight, common.rank)?;
            (
                common,
                flag(subcategory_membership(&base, &w, common.rank)?),
            )
        }
    };
    Ok((common.json, text, value))
}

/// Runs one invocation. `args` includes the program name. Returns the exit
/// code: 0 on success, 2 on usage, parse or precondition errors, 1 on an
/// internal invariant failure.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let out: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(out, "{}", e.render());
            return code;
        }
    };
    let mut inputs = Inputs { stdin, used: false };
    match execute(cli.command, &mut inputs) {
        Ok((as_json, text, value)) => {
            let body = if as_json { format!("{value}\n") } else { text };
            let _ = stdout.write_all(body.as_bytes());
            let _ = stdout.flush();
            0
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            2
        }
        Err(Failure::Internal(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            1
        }
    }
}
