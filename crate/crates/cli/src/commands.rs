//! Subcommand handlers. Each returns the process exit code on success.

use std::io::Write;

use lace_poly::{rational_to_string, Poly, Rational};
use lace_roots::{default_width, is_real_rooted, Certificate};
use lace_simplicial::{barycentric_subdivision, colored_subdivision, edgewise_subdivision, Construction};
use lace_subdiv::{
    bary_d, colored_d, edgewise_u, sample_h, strong_interlacing_of, Certifier, ColoredPTable, FTriangle, Variant,
};
use lace_zono::{certify_zonotope, count_interior_points, count_lattice_points, ehrhart_polynomial, hstar, hstar_r};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{CliError, CliResult, EXIT_NEGATIVE};
use crate::input;
use crate::{
    CertifyCommand, CertifyZonotopeArgs, Cli, Command, ComplexAction, ComplexArgs, ConstructionArg, MainThmArgs,
    OpArgs, OpKind, SkeletonArgs, StrongLaceArgs, TableArgs, TableKind, VariantArg, ZonotopeAction, ZonotopeArgs,
};

/// Entry bound for randomly drawn coefficient vectors.
const RANDOM_BOUND: u32 = 9;

/// Everything that determines a run's output.
#[derive(Serialize, Debug, Default)]
pub struct RunConfig {
    pub command: String,
    pub inputs: Vec<String>,
    pub n: Option<usize>,
    pub r: Option<usize>,
    pub variant: Option<String>,
    pub width: String,
    pub seed: Option<u64>,
    pub output: Option<String>,
}

impl RunConfig {
    fn new(cli: &Cli, command: &str) -> Self {
        RunConfig {
            command: command.into(),
            width: rational_to_string(&default_width()),
            output: cli.out.clone(),
            ..Default::default()
        }
    }
}

#[derive(Serialize)]
struct Single<'a, T: Serialize> {
    config: &'a RunConfig,
    certificate: &'a T,
}

#[derive(Serialize)]
struct Item {
    input: Poly,
    certificate: Certificate,
}

#[derive(Serialize)]
struct Batch<'a> {
    config: &'a RunConfig,
    certificates: &'a [Item],
}

#[derive(Serialize)]
struct TableOut<'a, T: Serialize> {
    config: &'a RunConfig,
    table: &'a T,
}

fn to_json<T: Serialize>(value: &T) -> CliResult<String> {
    serde_json::to_string_pretty(value).map_err(|e| CliError::precondition(e.to_string()))
}

fn emit(cli: &Cli, text: &str) -> CliResult<()> {
    match &cli.out {
        Some(path) => std::fs::write(path, format!("{text}\n"))
            .map_err(|e| CliError::precondition(format!("{path}: {e}"))),
        None => match writeln!(std::io::stdout().lock(), "{text}") {
            Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
            _ => Ok(()),
        },
    }
}

fn verdict_code(positive: bool) -> u8 {
    if positive {
        0
    } else {
        EXIT_NEGATIVE
    }
}

fn variant(v: VariantArg) -> Variant {
    match v {
        VariantArg::A => Variant::A,
        VariantArg::B => Variant::B,
    }
}

/// One seed per item, drawn up front so results do not depend on scheduling.
fn item_rngs(seed: u64, count: usize) -> Vec<ChaCha8Rng> {
    let mut master = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| ChaCha8Rng::seed_from_u64(master.gen())).collect()
}

pub fn run(cli: &Cli) -> CliResult<u8> {
    match &cli.command {
        Command::Op(a) => op(cli, a),
        Command::Certify(CertifyCommand::MainThm(a)) => main_thm(cli, a),
        Command::Certify(CertifyCommand::StrongLace(a)) => strong_lace(cli, a),
        Command::Certify(CertifyCommand::Skeleton(a)) => skeleton(cli, a),
        Command::Certify(CertifyCommand::Zonotope(a)) => certify_zono(cli, a),
        Command::Complex(a) => complex(cli, a),
        Command::Zonotope(a) => zonotope(cli, a),
        Command::Table(a) => table(cli, a),
    }
}

fn op(cli: &Cli, a: &OpArgs) -> CliResult<u8> {
    let h = input::poly(&a.h)?;
    let f_spec = a.f.as_deref().unwrap_or("barycentric");
    let out = match a.kind {
        OpKind::D => bary_d(a.n, &h)?,
        OpKind::U => edgewise_u(a.n, input::require_r(a.r, "U")?, &h)?,
        OpKind::Dr => colored_d(a.n, input::require_r(a.r, "Dr")?, &h)?,
        OpKind::Ef => input::ftriangle(f_spec, a.r, a.n)?.apply_ef(&h)?,
        OpKind::Df => {
            let f = crate::FInput { f: f_spec.into(), r: a.r };
            input::table(&f, a.n)?.apply_df(a.n, &h)?
        }
    };
    let mut text = out.to_string();
    if a.certify {
        let mut config = RunConfig::new(cli, "op");
        config.inputs.extend(input::poly_label(&a.h));
        if matches!(a.kind, OpKind::Ef | OpKind::Df) {
            config.inputs.push(format!("F={f_spec}"));
        }
        config.n = Some(a.n);
        config.r = a.r;
        let cert = is_real_rooted(&out);
        text.push('\n');
        text.push_str(&to_json(&Single { config: &config, certificate: &cert })?);
    }
    emit(cli, &text)?;
    Ok(0)
}

fn f_config(cli: &Cli, command: &str, f: &crate::FInput, n: usize) -> RunConfig {
    let mut config = RunConfig::new(cli, command);
    config.inputs.push(format!("F={}", f.f));
    config.n = Some(n);
    config.r = f.r;
    config
}

fn main_thm(cli: &Cli, a: &MainThmArgs) -> CliResult<u8> {
    let v = variant(a.variant);
    let mut config = f_config(cli, "certify main-thm", &a.f, a.n);
    config.variant = Some(v.to_string());
    config.seed = a.seed;
    let certifier = Certifier::new(input::table(&a.f, a.n)?);
    match a.random {
        None => {
            config.inputs.extend(input::poly_label(&a.h));
            let h = input::poly(&a.h)?;
            let cert = certifier.main_theorem(a.n, &h, v)?;
            emit(cli, &to_json(&Single { config: &config, certificate: &cert })?)?;
            Ok(verdict_code(cert.holds()))
        }
        Some(count) => {
            if v == Variant::B && a.n == 0 {
                return Err(CliError::precondition("variant b needs n >= 1"));
            }
            config.inputs.push(format!("random={count}{}", if a.ratio { ",ratio" } else { "" }));
            let seed = a.seed.ok_or_else(|| CliError::parse("--random needs --seed"))?;
            let items = item_rngs(seed, count)
                .into_par_iter()
                .map(|mut rng| {
                    let h = sample_h(&mut rng, a.n, v, a.ratio, RANDOM_BOUND);
                    let certificate = certifier.main_theorem(a.n, &h, v)?;
                    Ok(Item { input: h, certificate })
                })
                .collect::<CliResult<Vec<_>>>()?;
            emit(cli, &to_json(&Batch { config: &config, certificates: &items })?)?;
            Ok(verdict_code(items.iter().all(|i| i.certificate.holds())))
        }
    }
}

fn strong_lace(cli: &Cli, a: &StrongLaceArgs) -> CliResult<u8> {
    let mut config = f_config(cli, "certify strong-lace", &a.f, a.n);
    if a.include_top {
        config.inputs.push("include-top".into());
    }
    let cert = strong_interlacing_of(&input::table(&a.f, a.n)?, a.n, a.include_top)?;
    emit(cli, &to_json(&Single { config: &config, certificate: &cert })?)?;
    Ok(verdict_code(cert.holds()))
}

fn random_gamma(rng: &mut ChaCha8Rng, n: usize) -> Vec<Rational> {
    let mut g: Vec<Rational> =
        (0..n + 2).map(|_| Rational::from_integer(rng.gen_range(0..=RANDOM_BOUND).into())).collect();
    g[0] = Rational::from_integer(1.into());
    g
}

fn skeleton(cli: &Cli, a: &SkeletonArgs) -> CliResult<u8> {
    let mut config = f_config(cli, "certify skeleton", &a.f, a.n);
    config.seed = a.seed;
    let certifier = Certifier::new(input::table(&a.f, a.n + 1)?);
    match a.random {
        None => {
            let s = a.gamma.as_deref().ok_or_else(|| CliError::parse("one of --gamma or --random is required"))?;
            config.inputs.push(format!("gamma={s}"));
            let gamma = input::vector(s, a.n + 2, "Γ h-vector")?;
            let cert = certifier.skeleton(&gamma, a.n)?;
            emit(cli, &to_json(&Single { config: &config, certificate: &cert })?)?;
            Ok(verdict_code(cert.holds()))
        }
        Some(count) => {
            config.inputs.push(format!("random={count}"));
            let seed = a.seed.ok_or_else(|| CliError::parse("--random needs --seed"))?;
            let items = item_rngs(seed, count)
                .into_par_iter()
                .map(|mut rng| {
                    let gamma = random_gamma(&mut rng, a.n);
                    let certificate = certifier.skeleton(&gamma, a.n)?;
                    Ok(Item { input: Poly::new(gamma), certificate })
                })
                .collect::<CliResult<Vec<_>>>()?;
            emit(cli, &to_json(&Batch { config: &config, certificates: &items })?)?;
            Ok(verdict_code(items.iter().all(|i| i.certificate.holds())))
        }
    }
}

fn certify_zono(cli: &Cli, a: &CertifyZonotopeArgs) -> CliResult<u8> {
    let z = input::zonotope(&a.file)?;
    let mut config = RunConfig::new(cli, "certify zonotope");
    config.inputs.push(a.file.clone());
    config.n = Some(z.dim());
    config.r = Some(a.r);
    let cert = certify_zonotope(&z, a.r)?;
    emit(cli, &to_json(&Single { config: &config, certificate: &cert })?)?;
    Ok(verdict_code(cert.holds()))
}

fn join<T: ToString>(xs: impl IntoIterator<Item = T>) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn complex(cli: &Cli, a: &ComplexArgs) -> CliResult<u8> {
    if a.action == ComplexAction::ExtractFtriangle {
        let d = a.d.ok_or_else(|| CliError::parse("extract-ftriangle needs --d"))?;
        let construction = match a.kind.ok_or_else(|| CliError::parse("extract-ftriangle needs --kind"))? {
            ConstructionArg::Trivial => Construction::Identity,
            ConstructionArg::Sd => Construction::Barycentric,
            ConstructionArg::Esd => Construction::Edgewise(input::require_r(a.r, "esd")?),
            ConstructionArg::Colored => Construction::Colored(input::require_r(a.r, "colored")?),
        };
        if matches!(construction, Construction::Edgewise(0) | Construction::Colored(0)) {
            return Err(CliError::precondition("r must be at least 1"));
        }
        emit(cli, FTriangle::from_construction(construction, d)?.to_string().trim_end())?;
        return Ok(0);
    }
    let delta = input::complex(a.input.as_deref())?;
    let positive_r = || -> CliResult<usize> {
        match input::require_r(a.r, "this action")? {
            0 => Err(CliError::precondition("r must be at least 1")),
            r => Ok(r),
        }
    };
    let text = match a.action {
        ComplexAction::Fvec => join(delta.f_vector()),
        ComplexAction::Hvec => join(delta.h_polynomial().coeffs()),
        ComplexAction::Sd => barycentric_subdivision(&delta).complex.to_string(),
        ComplexAction::Esd => edgewise_subdivision(&delta, positive_r()?).complex.to_string(),
        ComplexAction::Colored => colored_subdivision(&delta, positive_r()?).complex.to_string(),
        ComplexAction::Skeleton => {
            delta.skeleton(a.k.ok_or_else(|| CliError::parse("skeleton needs --k"))?).to_string()
        }
        ComplexAction::ExtractFtriangle => unreachable!(),
    };
    emit(cli, text.trim_end())?;
    Ok(0)
}

fn zonotope(cli: &Cli, a: &ZonotopeArgs) -> CliResult<u8> {
    let z = input::zonotope(&a.file)?;
    let text = match a.action {
        ZonotopeAction::Ehrhart => ehrhart_polynomial(&z).to_string(),
        ZonotopeAction::Count => count_lattice_points(&z, a.m)?.to_string(),
        ZonotopeAction::Interior => count_interior_points(&z, a.m)?.to_string(),
        ZonotopeAction::Hstar => hstar(&z)?.to_string(),
        ZonotopeAction::HstarR => hstar_r(&z, a.r)?.to_string(),
    };
    emit(cli, &text)?;
    Ok(0)
}

fn table(cli: &Cli, a: &TableArgs) -> CliResult<u8> {
    let mut config = f_config(cli, "table", &a.f, a.n);
    let text = match a.kind {
        TableKind::PRows => to_json(&TableOut { config: &config, table: &input::table(&a.f, a.n)? })?,
        TableKind::Colored => {
            config.inputs = vec!["F=colored".into()];
            let t = ColoredPTable::build(a.n, input::require_r(a.f.r, "colored table")?)?;
            to_json(&TableOut { config: &config, table: &t })?
        }
    };
    emit(cli, &text)?;
    Ok(0)
}
