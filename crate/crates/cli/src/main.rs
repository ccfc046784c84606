//! `griffiths`: evaluate Racah, Tratnik and Griffiths polynomials exactly and
//! run the verification sweeps from the command line.

mod output;
mod params;

use clap::{Args, Parser, Subcommand, ValueEnum};
use griffiths_core::bivariate::{degree_pairs, grid_points, BivariateParams, DegreePair, GridPoint};
use griffiths_core::domains::{verify_restricted, Branch, Specialization};
use griffiths_core::exactnum::{ExactRational, Field};
use griffiths_core::griffiths::{
    appendix_sweep, griffiths_g, griffiths_table, verify_griffiths_with, AppendixCase, GriffithsForm, GriffithsRelation,
};
use griffiths_core::limits::{
    dual_hahn_ht, hahn_h, krawtchouk_k, limit_check, limit_orthogonality, normalized_griffiths, univariate_krawtchouk_limit, HybridKind,
    KrawtchoukSpeeds, LimitSpec,
};
use griffiths_core::racah_uni::{racah_p, uni_param_map, verify_uni, UniParams, UniRelation};
use griffiths_core::report::{param_map, VerificationReport};
use griffiths_core::tratnik::{tratnik_t, tratnik_table, verify_tratnik_with, TratnikRelation};
use griffiths_core::wigner::{griffiths_ninej_check, ninej, sixj, HalfInteger, SixjMethod, SquareRootRational};
use output::Format;
use serde_json::json;
use std::collections::BTreeMap;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "griffiths", version, about = "Exact evaluation and verification of Racah, Tratnik and Griffiths polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a family at one point, or on the whole grid with --table
    Eval(EvalArgs),
    /// Run the verification sweep of one relation, or of every relation of a family
    Verify(VerifyArgs),
    /// Wigner 6j and 9j symbols and their relation to Griffiths polynomials
    Wigner {
        #[command(subcommand)]
        command: WignerCommand,
    },
    /// Compare a limit family with the exact limit of the Griffiths polynomials
    Limits(LimitsArgs),
    /// Restricted domains when one parameter is a negative integer
    Domains(DomainsArgs),
}

type UniEval = dyn Fn(i64, i64) -> griffiths_core::Result<ExactRational>;

fn non_negative(s: &str) -> Result<i64, String> {
    let v: i64 = s.parse().map_err(|_| format!("{s:?} is not an integer"))?;
    if v < 0 {
        return Err(format!("N must be non-negative, got {v}"));
    }
    Ok(v)
}

#[derive(Args)]
struct ParamArgs {
    /// Comma-separated exact parameters: c1,c2,c3,c4 or c0,...,c4 (c1,c2,c3 for racah, c1,c2 for hahn)
    #[arg(long = "c", allow_hyphen_values = true)]
    c: Option<String>,
    /// Grid size N
    #[arg(long = "N", allow_hyphen_values = true, value_parser = non_negative)]
    n: i64,
    /// Seed for sampling generic parameters when --c is absent
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

impl ParamArgs {
    fn list(&self) -> Result<Option<Vec<ExactRational>>, String> {
        self.c.as_deref().map(params::parse_list).transpose()
    }

    fn bivariate(&self) -> Result<BivariateParams<ExactRational>, String> {
        match self.list()? {
            Some(l) => params::bivariate(&l, self.n),
            None => Ok(params::sample_bivariate(self.seed, self.n)),
        }
    }

    fn univariate(&self) -> Result<UniParams<ExactRational>, String> {
        match self.list()? {
            Some(l) => params::univariate(&l, self.n),
            None => Ok(params::sample_univariate(self.seed, self.n)),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Racah,
    Hahn,
    DualHahn,
    Krawtchouk,
    Tratnik,
    Griffiths,
    GriffithsNormalized,
}

#[derive(Args)]
struct EvalArgs {
    #[arg(value_enum)]
    family: Family,
    #[command(flatten)]
    params: ParamArgs,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    i: i64,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    j: i64,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    x: i64,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    y: i64,
    /// Degree of a univariate family
    #[arg(long = "n", default_value_t = 0, allow_hyphen_values = true)]
    degree: i64,
    /// Krawtchouk parameter
    #[arg(long, allow_hyphen_values = true)]
    p: Option<String>,
    /// Griffiths form: triple-sum, conv-right or conv-left
    #[arg(long, default_value = "triple-sum")]
    form: String,
    /// Emit the full table over the grid
    #[arg(long)]
    table: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Relation id such as tratnik-orthogonality or griffiths-rec1; a family
    /// name (racah, tratnik, griffiths, griffiths-appendix) runs all of its relations
    relation: String,
    #[command(flatten)]
    params: ParamArgs,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SixjChoice {
    Hypergeometric,
    RacahSum,
    Both,
}

#[derive(Subcommand)]
enum WignerCommand {
    /// {j123 j1 j23; j2 j3 j12}
    Sixj {
        /// j123,j1,j23,j2,j3,j12
        #[arg(long = "j", allow_hyphen_values = true)]
        j: String,
        #[arg(long, value_enum, default_value = "both")]
        method: SixjChoice,
    },
    /// 9j symbol with entries given row by row
    Ninej {
        /// j1,j2,j12,j3,j4,j34,j13,j24,j0
        #[arg(long = "j", allow_hyphen_values = true)]
        j: String,
    },
    /// Rank-one test of Griffiths polynomials against 9j symbols
    Check {
        #[command(flatten)]
        params: ParamArgs,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LimitKind {
    #[value(name = "dHdHR")]
    DualHahnDualHahnRacah,
    #[value(name = "RHH")]
    RacahHahnHahn,
    #[value(name = "dHRH")]
    DualHahnRacahHahn,
    #[value(name = "krawtchouk")]
    Krawtchouk,
}

#[derive(Args)]
struct LimitsArgs {
    #[arg(long, value_enum)]
    kind: LimitKind,
    /// Speeds sigma0,...,sigma4 for the Krawtchouk limit
    #[arg(long, allow_hyphen_values = true, default_value = "-4,1,1,1,1")]
    sigma: String,
    /// Offsets d0,...,d4 for the Krawtchouk limit; default (-2N-3,0,0,0,0)
    #[arg(long, allow_hyphen_values = true)]
    offsets: Option<String>,
    #[command(flatten)]
    params: ParamArgs,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BranchChoice {
    Upper,
    Lower,
    Both,
}

#[derive(Args)]
struct DomainsArgs {
    /// Index of the specialized parameter
    #[arg(long, value_parser = clap::value_parser!(u8).range(0..=4))]
    param: u8,
    /// The parameter is set to -k
    #[arg(long)]
    k: i64,
    #[arg(long, value_enum, default_value = "both")]
    branch: BranchChoice,
    #[command(flatten)]
    params: ParamArgs,
}

enum Outcome {
    Reports(Vec<VerificationReport>, Format),
    Text(String, bool),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Outcome::Reports(rs, format)) => {
            print!("{}", output::reports(&rs, format));
            if rs.iter().all(|r| r.is_exact()) {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Ok(Outcome::Text(text, ok)) => {
            print!("{text}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

fn run(cmd: Command) -> Result<Outcome, String> {
    match cmd {
        Command::Eval(a) => eval(a),
        Command::Verify(a) => Ok(Outcome::Reports(verify(&a.relation, &a.params)?, a.params.format)),
        Command::Wigner { command } => wigner(command),
        Command::Limits(a) => limits(a),
        Command::Domains(a) => domains(a),
    }
}

fn show<F: Field>(v: griffiths_core::Result<F>) -> Result<String, String> {
    v.map(|x| x.to_string()).map_err(|e| e.to_string())
}

fn two(list: Option<Vec<ExactRational>>) -> Result<(ExactRational, ExactRational), String> {
    match list.as_deref() {
        Some([a, b]) => Ok((a.clone(), b.clone())),
        _ => Err("expected --c c1,c2".into()),
    }
}

fn eval(a: EvalArgs) -> Result<Outcome, String> {
    let pa = &a.params;
    let n = pa.n;
    let fam = a.family.to_possible_value().expect("named").get_name().to_string();
    let uni_rows = |f: &dyn Fn(i64, i64) -> griffiths_core::Result<ExactRational>| -> Result<Vec<(i64, i64, String)>, String> {
        let mut rows = Vec::new();
        for deg in 0..=n {
            for x in 0..=n {
                rows.push((deg, x, show(f(deg, x))?));
            }
        }
        Ok(rows)
    };
    let text = match a.family {
        Family::Racah | Family::Hahn | Family::DualHahn | Family::Krawtchouk => {
            let (f, params): (Box<UniEval>, BTreeMap<String, String>) = match a.family {
                Family::Racah => {
                    let up = pa.univariate()?;
                    let m = uni_param_map(&up);
                    (Box::new(move |d, x| racah_p(d, &ExactRational::from_int(x), &up)), m)
                }
                Family::Hahn | Family::DualHahn => {
                    let (c1, c2) = two(pa.list()?)?;
                    let m = param_map([("c1", c1.to_string()), ("c2", c2.to_string()), ("N", n.to_string())]);
                    if a.family == Family::Hahn {
                        (Box::new(move |d, x| hahn_h(d, x, &c1, &c2, n)), m)
                    } else {
                        (Box::new(move |d, x| dual_hahn_ht(d, x, &c1, &c2, n)), m)
                    }
                }
                _ => {
                    let p = griffiths_core::exactnum::parse_rational(a.p.as_deref().ok_or("krawtchouk needs --p")?)
                        .map_err(|e| e.to_string())?;
                    let m = param_map([("p", p.to_string()), ("N", n.to_string())]);
                    (Box::new(move |d, x| krawtchouk_k(d, x, &p, n)), m)
                }
            };
            if a.table {
                output::univariate_table(&fam, &params, &uni_rows(&*f)?, pa.format)
            } else {
                output::value(&fam, &params, &[("n", a.degree), ("x", a.x)], &show(f(a.degree, a.x))?, pa.format)
            }
        }
        Family::Tratnik | Family::Griffiths | Family::GriffithsNormalized => {
            let p = pa.bivariate()?;
            let form = GriffithsForm::parse(&a.form).ok_or_else(|| format!("unknown form {:?}", a.form))?;
            let mut params = p.param_map();
            if a.family == Family::Griffiths {
                params.insert("form".into(), form.name().into());
            }
            let point = |d: DegreePair, g: GridPoint| match a.family {
                Family::Tratnik => tratnik_t(d, g, &p),
                Family::Griffiths => griffiths_g(d, g, &p, form),
                _ => normalized_griffiths(d, g, &p),
            };
            if a.table {
                let table = match a.family {
                    Family::Tratnik => Some(tratnik_table(&p).map_err(|e| e.to_string())?),
                    Family::Griffiths => Some(griffiths_table(&p, form).map_err(|e| e.to_string())?),
                    _ => None,
                };
                let mut rows = Vec::new();
                for d in degree_pairs(n) {
                    for g in grid_points(n) {
                        let v = match &table {
                            Some(t) => t.get(d.i, d.j, g.x, g.y).to_string(),
                            None => show(point(d, g))?,
                        };
                        rows.push((d.i, d.j, g.x, g.y, v));
                    }
                }
                output::bivariate_table(&fam, &params, &rows, pa.format)
            } else {
                let v = show(point(DegreePair::new(a.i, a.j), GridPoint::new(a.x, a.y)))?;
                output::value(&fam, &params, &[("i", a.i), ("j", a.j), ("x", a.x), ("y", a.y)], &v, pa.format)
            }
        }
    };
    Ok(Outcome::Text(text, true))
}

fn verify(relation: &str, pa: &ParamArgs) -> Result<Vec<VerificationReport>, String> {
    let unknown = || format!("unknown relation {relation:?}");
    let (family, rest) = match relation.split_once('-') {
        Some((f, r)) => (f, Some(r)),
        None => (relation, None),
    };
    match family {
        "racah" => {
            let p = pa.univariate()?;
            let rels = match rest {
                None => UniRelation::ALL.to_vec(),
                Some(r) => vec![UniRelation::parse(r).ok_or_else(unknown)?],
            };
            Ok(rels.into_iter().map(|r| verify_uni(r, &p)).collect())
        }
        "tratnik" => {
            let p = pa.bivariate()?;
            let rels = match rest {
                None => TratnikRelation::ALL.to_vec(),
                Some(r) => vec![TratnikRelation::parse(r).ok_or_else(unknown)?],
            };
            let t = tratnik_table(&p).map_err(|e| e.to_string())?;
            Ok(rels.into_iter().map(|r| verify_tratnik_with(r, &p, &t)).collect())
        }
        "griffiths" => {
            let p = pa.bivariate()?;
            if let Some(r) = rest.and_then(|r| r.strip_prefix("appendix")) {
                let cases = match r.strip_prefix('-') {
                    None if r.is_empty() => AppendixCase::ALL.to_vec(),
                    Some(c) => vec![AppendixCase::parse(c).ok_or_else(unknown)?],
                    None => return Err(unknown()),
                };
                return Ok(cases.into_iter().map(|c| appendix_sweep(c, &p)).collect());
            }
            let rels = match rest {
                None => GriffithsRelation::ALL.to_vec(),
                Some(r) => vec![GriffithsRelation::parse(r).ok_or_else(unknown)?],
            };
            let t = griffiths_table(&p, GriffithsForm::TripleSum).map_err(|e| e.to_string())?;
            Ok(rels.into_iter().map(|r| verify_griffiths_with(r, &p, &t)).collect())
        }
        _ => Err(unknown()),
    }
}

fn half_integers(s: &str, count: usize) -> Result<Vec<HalfInteger>, String> {
    let v: Vec<HalfInteger> = s.split(',').map(|t| HalfInteger::parse(t).map_err(|e| e.to_string())).collect::<Result<_, _>>()?;
    if v.len() != count {
        return Err(format!("expected {count} entries, got {}", v.len()));
    }
    Ok(v)
}

fn symbol_json(v: &SquareRootRational) -> serde_json::Value {
    json!({
        "value": v.to_string(),
        "rational_part": v.rational_part().to_string(),
        "radicand": v.radicand().to_string(),
        "square": v.square().to_string(),
    })
}

fn wigner(cmd: WignerCommand) -> Result<Outcome, String> {
    match cmd {
        WignerCommand::Sixj { j, method } => {
            let e = half_integers(&j, 6)?;
            let eval = |m| sixj(e[0], e[1], e[2], e[3], e[4], e[5], m);
            let entries: Vec<String> = e.iter().map(|h| h.to_string()).collect();
            let (doc, ok) = match method {
                SixjChoice::Both => {
                    let a = eval(SixjMethod::Hypergeometric).map_err(|e| e.to_string())?;
                    let b = eval(SixjMethod::RacahSum).map_err(|e| e.to_string())?;
                    let agree = a == b;
                    (
                        json!({ "symbol": "6j", "entries": entries, "hypergeometric": symbol_json(&a), "racah_sum": symbol_json(&b), "agree": agree }),
                        agree,
                    )
                }
                m => {
                    let m = if m == SixjChoice::Hypergeometric { SixjMethod::Hypergeometric } else { SixjMethod::RacahSum };
                    let v = eval(m).map_err(|e| e.to_string())?;
                    (json!({ "symbol": "6j", "entries": entries, "result": symbol_json(&v) }), true)
                }
            };
            Ok(Outcome::Text(serde_json::to_string_pretty(&doc).expect("serializes") + "\n", ok))
        }
        WignerCommand::Ninej { j } => {
            let e = half_integers(&j, 9)?;
            let m = [[e[0], e[1], e[2]], [e[3], e[4], e[5]], [e[6], e[7], e[8]]];
            let v = ninej(&m).map_err(|e| e.to_string())?;
            let entries: Vec<String> = e.iter().map(|h| h.to_string()).collect();
            let doc = json!({ "symbol": "9j", "entries": entries, "result": symbol_json(&v) });
            Ok(Outcome::Text(serde_json::to_string_pretty(&doc).expect("serializes") + "\n", true))
        }
        WignerCommand::Check { params } => {
            let p = params.bivariate()?;
            let r = griffiths_ninej_check(&p).map_err(|e| e.to_string())?;
            Ok(Outcome::Reports(vec![r], params.format))
        }
    }
}

fn limits(a: LimitsArgs) -> Result<Outcome, String> {
    let pa = &a.params;
    let n = pa.n;
    let spec = match a.kind {
        LimitKind::DualHahnDualHahnRacah => LimitSpec::Hybrid(HybridKind::DualHahnDualHahnRacah),
        LimitKind::RacahHahnHahn => LimitSpec::Hybrid(HybridKind::RacahHahnHahn),
        LimitKind::DualHahnRacahHahn => LimitSpec::Hybrid(HybridKind::DualHahnRacahHahn),
        LimitKind::Krawtchouk => {
            let five = |s: &str| -> Result<[ExactRational; 5], String> {
                params::parse_list(s)?.try_into().map_err(|v: Vec<_>| format!("expected 5 values, got {}", v.len()))
            };
            let sigma = five(&a.sigma)?;
            let sp = match &a.offsets {
                Some(o) => KrawtchoukSpeeds::with_offsets(sigma, five(o)?, n),
                None => KrawtchoukSpeeds::new(sigma, n),
            };
            LimitSpec::Krawtchouk(sp.map_err(|e| e.to_string())?)
        }
    };
    let p = pa.bivariate()?;
    let mut rs = vec![limit_check(&spec, &p), limit_orthogonality(&spec, &p)];
    if let LimitSpec::Krawtchouk(sp) = &spec {
        rs.push(univariate_krawtchouk_limit(sp, n));
    }
    Ok(Outcome::Reports(rs, pa.format))
}

fn domains(a: DomainsArgs) -> Result<Outcome, String> {
    let pa = &a.params;
    let s = Specialization::new(a.param as usize, a.k, pa.n).map_err(|e| e.to_string())?;
    let base = pa.bivariate()?;
    let branches = match a.branch {
        BranchChoice::Upper => vec![Branch::Upper],
        BranchChoice::Lower => vec![Branch::Lower],
        BranchChoice::Both => vec![Branch::Upper, Branch::Lower],
    };
    let rs = branches.into_iter().map(|b| verify_restricted(s, b, &base)).collect();
    Ok(Outcome::Reports(rs, pa.format))
}
