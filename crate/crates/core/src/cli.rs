//! Command-line front end. Output is JSON except for character tables (CSV).

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::chars::{theorem_main_report, CharacterTable};
use crate::coinv::{descent_monomial, hilbert_series, straighten, Monomial};
use crate::exactnum::format_rational;
use crate::group::{enumerate, ColoredPerm, GroupParams, Which};
use crate::partition::{r_partitions, Partition, RPartition};
use crate::tabx::{all_orbits, enumerate_osyt_n, enumerate_syt, RTableau};
use crate::verify::{self, CarlitzVariant, VerificationReport, DEFAULT_CAP, DEFAULT_TCAP};
use crate::Error;

#[derive(Parser, Debug)]
#[command(name = "grpn", version, about = "Colored permutation groups G(r,p,n): statistics, coinvariants, tableaux, characters")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct GroupArgs {
    #[arg(long)]
    pub r: u32,
    #[arg(long, default_value_t = 1)]
    pub p: u32,
    #[arg(long)]
    pub n: u32,
}

impl GroupArgs {
    fn params(&self) -> Result<GroupParams, Error> {
        Ok(GroupParams::new(self.r, self.p, self.n)?)
    }
}

#[derive(ValueEnum, Debug, Clone, Copy)]
pub enum Subset {
    G,
    H,
    Gamma,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Identity {
    Carlitz,
    CarlitzG,
    Pri,
    Stanley,
    Ser,
    Main,
    Stembridge,
    FmajProduct,
    ShiftLemmas,
    Regular,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List the elements of G, H or Γ in window notation.
    Enumerate {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, value_enum, default_value = "gamma")]
        which: Subset,
    },
    /// Descent statistics of one element.
    Stats {
        #[command(flatten)]
        group: GroupArgs,
        /// Window notation, e.g. "6 2^5 4^4 3^1 1^6 5^3".
        #[arg(long)]
        element: String,
    },
    /// The descent basis of the coinvariant algebra.
    Basis {
        #[command(flatten)]
        group: GroupArgs,
    },
    /// Straighten a monomial into the descent basis.
    Straighten {
        #[command(flatten)]
        group: GroupArgs,
        /// Comma-separated exponents a1,...,an.
        #[arg(long, value_delimiter = ',')]
        exponents: Vec<u32>,
    },
    /// Standard Young r-tableaux with their statistics.
    Tableaux {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        n: u32,
        /// Restrict to one shape, as JSON, e.g. [[1],[1]].
        #[arg(long)]
        shape: Option<String>,
    },
    /// Orbits of r-partitions under d-fold shifts.
    Orbits {
        #[command(flatten)]
        group: GroupArgs,
    },
    /// n-orbital standard tableaux, grouped by orbit.
    Osyt {
        #[command(flatten)]
        group: GroupArgs,
    },
    /// Character table of G(r,n) as CSV.
    Chartable {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        n: u32,
    },
    /// Hilbert series Σ q^fmaj of the coinvariant algebra.
    Hilbert {
        #[command(flatten)]
        group: GroupArgs,
    },
    /// Run one verifier; exit status 1 if it fails.
    Verify {
        #[arg(value_enum)]
        identity: Identity,
        #[command(flatten)]
        group: GroupArgs,
        /// Degree or part-size cap (entry bound for stanley).
        #[arg(long)]
        cap: Option<u32>,
        /// t-degree cap for the Carlitz identities.
        #[arg(long)]
        tcap: Option<u32>,
        /// Use the numerator exactly as printed (expected to fail).
        #[arg(long)]
        strict_paper: bool,
    },
}

/// Parses `args` (program name first) and runs the command. Returns the exit
/// status: 0 on success, 1 on a failed verification, 2 on a usage error.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match execute(&cli.command) {
        Ok((text, pass)) => {
            let _ = writeln!(out, "{text}");
            if pass {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("values serialize")
}

fn element_json(g: &ColoredPerm, params: &GroupParams) -> Value {
    json!({
        "element": g.to_string(),
        "sigma": g.sigma(),
        "colors": g.colors(),
        "in_h": g.in_h(params),
        "in_gamma": g.in_gamma(params),
        "stats": g.stats(),
        "cycle_type": g.cycle_type(),
    })
}

fn tableau_json(t: &RTableau) -> Value {
    let s = t.stats();
    json!({
        "shape": t.shape(),
        "rows": t.rows(),
        "des": s.des,
        "colors": s.colors,
        "f": s.f_vector,
        "fmaj": s.fmaj,
    })
}

fn parse_shape(text: &str, r: u32) -> Result<RPartition, String> {
    let parts: Vec<Vec<u32>> = serde_json::from_str(text).map_err(|e| format!("bad shape {text:?}: {e}"))?;
    if parts.len() != r as usize {
        return Err(format!("shape has {} components, expected {r}", parts.len()));
    }
    Ok(RPartition::new(parts.into_iter().map(Partition::new).collect()))
}

/// Runs one command, returning its output and whether it passed.
fn execute(cmd: &Command) -> Result<(String, bool), Box<dyn std::error::Error>> {
    let ok = |v: Value| Ok((pretty(&v), true));
    match cmd {
        Command::Enumerate { group, which } => {
            let params = group.params()?;
            let which = match which {
                Subset::G => Which::G,
                Subset::H => Which::H,
                Subset::Gamma => Which::Gamma,
            };
            let list: Vec<String> = enumerate(&params, which)?.iter().map(|g| g.to_string()).collect();
            ok(json!(list))
        }
        Command::Stats { group, element } => {
            let params = group.params()?;
            let g = ColoredPerm::parse_window(element, &params)?;
            ok(element_json(&g, &params))
        }
        Command::Basis { group } => {
            let params = group.params()?;
            let rows: Vec<Value> = enumerate(&params, Which::Gamma)?
                .iter()
                .map(|g| {
                    let m = descent_monomial(g);
                    json!({"element": g.to_string(), "monomial": m.to_string(), "exponents": m.exponents(), "fmaj": m.degree()})
                })
                .collect();
            ok(json!(rows))
        }
        Command::Straighten { group, exponents } => {
            let params = group.params()?;
            let s = straighten(&Monomial(exponents.clone()), &params)?;
            ok(s.to_json())
        }
        Command::Tableaux { r, n, shape } => {
            if *r == 0 {
                return Err("r must be positive".into());
            }
            let shapes = match shape {
                Some(text) => {
                    let s = parse_shape(text, *r)?;
                    if s.size() != *n {
                        return Err(format!("shape has {} cells, expected {n}", s.size()).into());
                    }
                    vec![s]
                }
                None => r_partitions(*r as usize, *n),
            };
            let mut rows = Vec::new();
            for s in &shapes {
                rows.extend(enumerate_syt(s)?.iter().map(tableau_json));
            }
            ok(json!(rows))
        }
        Command::Orbits { group } => ok(json!(all_orbits(&group.params()?))),
        Command::Osyt { group } => {
            let params = group.params()?;
            let mut rows = Vec::new();
            for orb in all_orbits(&params) {
                let ts: Vec<Value> = enumerate_osyt_n(&orb, &params)?.iter().map(tableau_json).collect();
                rows.push(json!({"orbit": orb.members, "u": orb.u, "tableaux": ts}));
            }
            ok(json!(rows))
        }
        Command::Chartable { r, n } => {
            GroupParams::wreath(*r, *n)?;
            let table = CharacterTable::compute(*r, *n)?;
            Ok((table.to_csv().trim_end().to_string(), true))
        }
        Command::Hilbert { group } => {
            let params = group.params()?;
            let h = hilbert_series(&params)?;
            let top = h.degree().unwrap_or(0);
            let coeffs: Vec<String> = (0..=top).map(|k| format_rational(&h.coeff(&[k]))).collect();
            ok(json!({"series": h.to_string(), "coefficients": coeffs}))
        }
        Command::Verify {
            identity,
            group,
            cap,
            tcap,
            strict_paper,
        } => run_verify(*identity, group, *cap, *tcap, *strict_paper),
    }
}

fn run_verify(
    identity: Identity,
    group: &GroupArgs,
    cap: Option<u32>,
    tcap: Option<u32>,
    strict_paper: bool,
) -> Result<(String, bool), Box<dyn std::error::Error>> {
    let params = group.params()?;
    let cap_or = |default: u32| cap.unwrap_or(default);
    let report: VerificationReport = match identity {
        Identity::Carlitz => verify::verify_carlitz(&params, tcap.unwrap_or(DEFAULT_TCAP), CarlitzVariant::H)?,
        Identity::CarlitzG => verify::verify_carlitz(&params, tcap.unwrap_or(DEFAULT_TCAP), CarlitzVariant::G)?,
        Identity::Pri => verify::verify_pri(&params, cap_or(DEFAULT_CAP), strict_paper)?,
        Identity::Stanley => verify::verify_stanley_all(params.r as usize, params.n, cap_or(2 * params.r + 1))?,
        Identity::Ser => verify::verify_lemma_ser_all(&params, cap_or(DEFAULT_CAP))?,
        Identity::Main => {
            let main = theorem_main_report(&params)?;
            let report = verify::verify_main(&params)?;
            let mut v = serde_json::to_value(&report)?;
            v["all_equal"] = json!(main.all_equal);
            v["rows"] = serde_json::to_value(&main.rows)?;
            return Ok((pretty(&v), report.pass));
        }
        Identity::Stembridge => verify::verify_stembridge(&params)?,
        Identity::FmajProduct => verify::verify_fmaj_product(&params)?,
        Identity::ShiftLemmas => verify::verify_shift_lemmas(params.r, params.n, params.n)?,
        Identity::Regular => verify::verify_regular_and_decom(&params)?,
    };
    let pass = report.pass;
    Ok((pretty(&serde_json::to_value(&report)?), pass))
}
