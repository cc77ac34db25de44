use std::io::Write;

use serde_json::{json, Value};

use super::{required, ComputeArgs, CliError, EXIT_POLE};
use crate::bernoulli;
use crate::closed_forms::{self, Family, SpecialOutcome, SpecialValuePoint};
use crate::lambert::{self, UpperHalfPoint};
use crate::numth;
use crate::rational::{parse_rational, render, ExactRational, RationalJson};
use crate::series::{self, ComplexValue, TruncationParams};
use crate::words;
use crate::Parity;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Quantity {
    Factorize,
    Mobius,
    Totient,
    Divisors,
    LyndonCount,
    NecklaceCount,
    LyndonPoly,
    NecklacePoly,
    Bernoulli,
    BernoulliPoly,
    Apostol,
    ApostolPoly,
    Eulerian,
    PolylogNeg,
    ZetaNeg,
    Special,
    SpecialEulerian,
    Polylog,
    Zeta,
    Zeta1,
    Zeta2,
    MuPhiOdd,
    H,
    Cusp,
}

/// A rendered line plus its JSON form.
struct Output {
    text: String,
    json: Value,
}

fn exact(r: &ExactRational) -> Output {
    Output { text: render(r), json: json!(RationalJson::from(r)) }
}

fn numeric(v: ComplexValue, t: TruncationParams) -> Output {
    Output {
        text: format!("{v} ± {:.3e} ({} terms)", t.tail_bound, t.terms),
        json: json!({ "value": v, "truncation": t }),
    }
}

fn rational_flag(v: &Option<String>, flag: &str) -> Result<ExactRational, CliError> {
    Ok(parse_rational(required(v.as_deref(), flag)?)?)
}

fn real_flag(v: &Option<String>, flag: &str) -> Result<f64, CliError> {
    let text = required(v.as_deref(), flag)?;
    match text.trim().parse::<f64>() {
        Ok(x) if x.is_finite() => Ok(x),
        _ => Ok(crate::rational::to_f64(&parse_rational(text)?)),
    }
}

fn complex_flag(v: &Option<String>, flag: &str) -> Result<ComplexValue, CliError> {
    Ok(ComplexValue::parse(required(v.as_deref(), flag)?)?)
}

fn usize_flag(v: Option<u64>, flag: &str) -> Result<usize, CliError> {
    let v = required(v, flag)?;
    usize::try_from(v).map_err(|_| CliError::Usage(format!("--{flag} {v} is too large")))
}

fn special_row(family: Family, p: &SpecialValuePoint) -> Result<(Output, bool), CliError> {
    let r = closed_forms::special_value(family, p)?;
    let pole = r.continuation_value.is_pole() || r.paper_value.is_pole();
    let text = format!(
        "continuation: {}\nprinted: {}\nagrees: {}",
        r.continuation_value, r.paper_value, r.agrees
    );
    Ok((Output { text, json: serde_json::to_value(&r)? }, pole))
}

fn outcome_cell(o: &SpecialOutcome) -> String {
    o.to_string()
}

fn csv_table(args: &ComputeArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let mut w = csv::Writer::from_writer(out);
    match args.quantity {
        Quantity::LyndonCount | Quantity::NecklaceCount => {
            let k = required(args.k, "k")?;
            w.write_record(["n", "count"])?;
            for n in 1..=required(args.n, "n")? {
                let c = if args.quantity == Quantity::LyndonCount {
                    words::lyndon_count(k, n)?
                } else {
                    words::necklace_count(k, n)?
                };
                w.write_record([n.to_string(), c.to_string()])?;
            }
        }
        Quantity::Bernoulli | Quantity::ZetaNeg => {
            w.write_record(["m", "value"])?;
            for m in 0..=usize_flag(args.m, "m")? {
                let v = if args.quantity == Quantity::Bernoulli {
                    bernoulli::bernoulli_number(m)
                } else {
                    bernoulli::zeta_neg(m)
                };
                w.write_record([m.to_string(), render(&v)])?;
            }
        }
        Quantity::Apostol => {
            w.write_record(["m", "rational_function"])?;
            for m in 0..=usize_flag(args.m, "m")? {
                w.write_record([m.to_string(), bernoulli::apostol_bernoulli_rf(m).to_string()])?;
            }
        }
        Quantity::Special => {
            let family = required(args.family, "family")?;
            let k = required(args.k, "k")?;
            let x = rational_flag(&args.x, "x")?;
            w.write_record(["family", "m", "k", "x", "parity", "continuation", "printed", "agrees"])?;
            let max_m = u32::try_from(required(args.m, "m")?).map_err(|_| CliError::Usage("--m is too large".into()))?;
            for m in 0..=max_m {
                for parity in Parity::ALL {
                    let r = closed_forms::special_value(family, &SpecialValuePoint::new(m, k, x.clone(), parity)?)?;
                    w.write_record([
                        family.as_str().to_string(),
                        m.to_string(),
                        k.to_string(),
                        render(&x),
                        parity.to_string(),
                        outcome_cell(&r.continuation_value),
                        outcome_cell(&r.paper_value),
                        r.agrees.to_string(),
                    ])?;
                }
            }
        }
        other => {
            return Err(CliError::Usage(format!(
                "--csv is available for lyndon-count, necklace-count, bernoulli, zeta-neg, apostol and special, not {other:?}"
            )))
        }
    }
    w.flush()?;
    Ok(0)
}

pub(super) fn run(args: &ComputeArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    if args.csv {
        return csv_table(args, out);
    }
    let mut code = 0;
    let output = match args.quantity {
        Quantity::Factorize => {
            let f = numth::factorize(required(args.n, "n")?)?;
            let text = f.entries().iter().map(|(p, e)| if *e == 1 { p.to_string() } else { format!("{p}^{e}") });
            let text: Vec<_> = text.collect();
            Output { text: if text.is_empty() { "1".into() } else { text.join(" * ") }, json: json!(f.entries()) }
        }
        Quantity::Mobius => {
            let v = numth::mobius(required(args.n, "n")?)?;
            Output { text: v.to_string(), json: json!(v) }
        }
        Quantity::Totient => {
            let v = numth::totient(required(args.n, "n")?)?;
            Output { text: v.to_string(), json: json!(v) }
        }
        Quantity::Divisors => {
            let v = numth::divisors(required(args.n, "n")?)?;
            let text: Vec<_> = v.iter().map(u64::to_string).collect();
            Output { text: text.join(" "), json: json!(v) }
        }
        Quantity::LyndonCount | Quantity::NecklaceCount => {
            let (k, n) = (required(args.k, "k")?, required(args.n, "n")?);
            let v = if args.quantity == Quantity::LyndonCount {
                words::lyndon_count(k, n)?
            } else {
                words::necklace_count(k, n)?
            };
            Output { text: v.to_string(), json: json!(v.to_string()) }
        }
        Quantity::LyndonPoly | Quantity::NecklacePoly => {
            let (k, n) = (required(args.k, "k")?, required(args.n, "n")?);
            let poly = if args.quantity == Quantity::LyndonPoly {
                words::lyndon_poly(k, n)?
            } else {
                words::necklace_poly(k, n)?
            };
            match &args.x {
                Some(_) => exact(&poly.eval(&rational_flag(&args.x, "x")?)),
                None => {
                    let coeffs: Vec<_> =
                        poly.terms().map(|(d, c)| json!({ "degree": d, "coefficient": RationalJson::from(c) })).collect();
                    Output { text: poly.to_string(), json: json!(coeffs) }
                }
            }
        }
        Quantity::Bernoulli => exact(&bernoulli::bernoulli_number(usize_flag(args.m, "m")?)),
        Quantity::BernoulliPoly => {
            exact(&bernoulli::bernoulli_poly(usize_flag(args.m, "m")?, &rational_flag(&args.x, "x")?))
        }
        Quantity::Apostol => {
            let m = usize_flag(args.m, "m")?;
            match &args.lambda {
                Some(_) => exact(&bernoulli::apostol_bernoulli_number_at(m, &rational_flag(&args.lambda, "lambda")?)?),
                None => {
                    let rf = bernoulli::apostol_bernoulli_rf(m);
                    let num: Vec<_> = rf.numerator().iter().map(|c| c.to_string()).collect();
                    Output {
                        text: rf.to_string(),
                        json: json!({ "numerator": num, "pole_order": rf.pole_order(), "text": rf.to_string() }),
                    }
                }
            }
        }
        Quantity::ApostolPoly => exact(&bernoulli::apostol_bernoulli_poly_at(
            usize_flag(args.m, "m")?,
            &rational_flag(&args.x, "x")?,
            &rational_flag(&args.lambda, "lambda")?,
        )?),
        Quantity::Eulerian => {
            let v = bernoulli::eulerian(usize_flag(args.m, "m")?, required(args.j, "j")?);
            Output { text: v.to_string(), json: json!(v.to_string()) }
        }
        Quantity::PolylogNeg => {
            exact(&bernoulli::polylog_neg(usize_flag(args.m, "m")?, &rational_flag(&args.lambda, "lambda")?)?)
        }
        Quantity::ZetaNeg => exact(&bernoulli::zeta_neg(usize_flag(args.m, "m")?)),
        Quantity::Special => {
            let m = u32::try_from(required(args.m, "m")?).map_err(|_| CliError::Usage("--m is too large".into()))?;
            let p = SpecialValuePoint::new(m, required(args.k, "k")?, rational_flag(&args.x, "x")?, args.parity)?;
            let (o, pole) = special_row(required(args.family, "family")?, &p)?;
            if pole {
                code = EXIT_POLE;
            }
            o
        }
        Quantity::SpecialEulerian => {
            let m = u32::try_from(required(args.m, "m")?).map_err(|_| CliError::Usage("--m is too large".into()))?;
            exact(&closed_forms::zeta1_special_eulerian(m, required(args.k, "k")?, &rational_flag(&args.x, "x")?)?)
        }
        Quantity::Polylog => {
            let terms = args.terms.unwrap_or(series::DEFAULT_GEOMETRIC_TERMS);
            let (v, t) = series::polylog_num(complex_flag(&args.s, "s")?, complex_flag(&args.w, "w")?, terms)?;
            numeric(v, t)
        }
        Quantity::Zeta => {
            let terms = args.terms.unwrap_or(series::DEFAULT_ARITHMETIC_TERMS);
            let (v, t) = series::riemann_zeta_num(complex_flag(&args.s, "s")?, terms)?;
            numeric(v, t)
        }
        Quantity::Zeta1 | Quantity::Zeta2 => {
            let terms = args.terms.unwrap_or(series::DEFAULT_GEOMETRIC_TERMS);
            let (k, x, s) = (required(args.k, "k")?, real_flag(&args.x, "x")?, complex_flag(&args.s, "s")?);
            let (v, t) = if args.quantity == Quantity::Zeta1 {
                series::zeta1_num(k, x, s, terms, args.parity)?
            } else {
                series::zeta2_num(k, x, s, terms, args.parity)?
            };
            numeric(v, t)
        }
        Quantity::MuPhiOdd => {
            let terms = args.terms.unwrap_or(series::DEFAULT_ARITHMETIC_TERMS);
            let (v, t) = series::mu_phi_odd_num(required(args.which, "which")?, complex_flag(&args.s, "s")?, terms)?;
            numeric(v, t)
        }
        Quantity::H => {
            let terms = args.terms.unwrap_or(lambert::DEFAULT_TERMS);
            let (v, t) = lambert::h_num(required(args.n, "n")?, real_flag(&args.x, "x")?, terms)?;
            numeric(v, t)
        }
        Quantity::Cusp => {
            let terms = args.terms.unwrap_or(lambert::DEFAULT_TERMS);
            let p = UpperHalfPoint::new(complex_flag(&args.z, "z")?)?;
            let (v, t) = lambert::cusp_sum(required(args.d, "d")?, &p, terms)?;
            numeric(v, t)
        }
    };
    if args.json {
        writeln!(out, "{}", serde_json::to_string_pretty(&output.json)?)?;
    } else {
        writeln!(out, "{}", output.text)?;
    }
    Ok(code)
}
