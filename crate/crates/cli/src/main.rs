//! `nfkit`: command line front end for the normal-form toolkit.
//!
//! Exit status is 0 on success, 2 for invalid input and 3 for well-formed
//! input outside the decidable scope.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use nfkit_core::centralizer::{
    centralizer_exact, centralizer_truncated, normalizer_reduce, normalizer_truncated,
};
use nfkit_core::invariants::{
    check_free_module, check_onediv, invariant_generators_with_cap, reduce_vectorfield,
    triviality_certificate,
};
use nfkit_core::jacobi::{
    divergence_integral_check, reduced_multiplier_obstruction, solve_multiplier,
};
use nfkit_core::json::{
    self, CentralizerJson, CheckJson, Dim3Json, ErrorJson, FieldJson, InvariantsJson, LadderJson,
    NormalizerJson, PdnfBasisJson, ReducedJson, ResonanceJson, SeriesJson, SpectrumJson,
    WitnessJson,
};
use nfkit_core::normal_form::{pdnf_basis, pdnf_remainder};
use nfkit_core::resonance::resonance_set;
use nfkit_core::spectrum::DEFAULT_HILBERT_CAP;
use nfkit_core::spectrum::{
    classify_dim3, has_positive_relation, is_finite_linear_centralizer, uw_decomposition,
};
use nfkit_core::{EigenSpectrum, Error, PolyVectorField};

const DEFAULT_SEARCH_BOUND: u32 = 20;

#[derive(Parser)]
#[command(
    name = "nfkit",
    version,
    about = "Exact computations for Poincare-Dulac normal forms"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the nonlinear resonances of the linear part.
    Resonances(Opts),
    /// Unit resonant monomials spanning the normal-form space.
    PdnfBasis(Opts),
    /// Centralizer of a normal form, exact or truncated (--truncate).
    Centralizer(Opts),
    /// Truncated normalizer pairs (g, lambda) with [g, f] = lambda f.
    Normalizer(Opts),
    /// Generators of the invariant algebra and module checks.
    Invariants(Opts),
    /// Reduce a normal form by the invariants of its semisimple part.
    Reduce(Opts),
    /// Inverse Jacobi multipliers by lowest order.
    Jacobi(Opts),
    /// Classify a coprime triple of positive degrees.
    Classify3 {
        d1: u64,
        d2: u64,
        d3: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Resonance finiteness, U/W split and, with --field, normal-form checks.
    Check(Opts),
}

#[derive(Args)]
struct Opts {
    /// Spectrum JSON file.
    #[arg(long)]
    spectrum: PathBuf,
    /// Vector field JSON file.
    #[arg(long)]
    field: Option<PathBuf>,
    /// Degree cap for resonance listings and Hilbert bases.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    max_degree: Option<u32>,
    /// Truncation degree D.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    truncate: Option<u32>,
    /// Lowest multiplier order searched.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    r_min: Option<u32>,
    /// Highest multiplier order searched.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    r_max: Option<u32>,
    /// Degree bound for witness searches and degree ladders.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    search_bound: Option<u32>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

enum Failure {
    Core(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

type Run = std::result::Result<String, Failure>;

fn read(path: &Path) -> std::result::Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn load_spectrum(path: &Path) -> std::result::Result<EigenSpectrum, Failure> {
    Ok(json::from_str::<SpectrumJson>(&read(path)?)?.to_spectrum()?)
}

fn load_field(o: &Opts) -> std::result::Result<PolyVectorField, Failure> {
    let path = o
        .field
        .as_deref()
        .ok_or_else(|| Failure::Core(Error::InvalidArgument("--field is required".into())))?;
    Ok(json::from_str::<FieldJson>(&read(path)?)?.to_field()?)
}

fn required(v: Option<u32>, flag: &str) -> std::result::Result<u32, Failure> {
    v.ok_or_else(|| Failure::Core(Error::InvalidArgument(format!("--{flag} is required"))))
}

fn render<T: serde::Serialize>(
    format: Format,
    report: &T,
    text: impl FnOnce(&T) -> String,
) -> String {
    match format {
        Format::Json => json::to_string(report),
        Format::Text => text(report),
    }
}

fn monomial(m: &[u32]) -> String {
    let parts: Vec<String> = m
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| {
            if e == 1 {
                format!("x{}", i + 1)
            } else {
                format!("x{}^{e}", i + 1)
            }
        })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

fn series_text(s: &SeriesJson) -> String {
    if s.terms.is_empty() {
        return "0".into();
    }
    let body: Vec<String> = s
        .terms
        .iter()
        .map(|t| format!("({})*{}", t.c, monomial(&t.m)))
        .collect();
    body.join(" + ")
}

fn field_text(f: &FieldJson) -> String {
    if f.terms.is_empty() {
        return "0".into();
    }
    let body: Vec<String> = f
        .terms
        .iter()
        .map(|t| format!("({})*{} e{}", t.c, monomial(&t.m), t.j))
        .collect();
    body.join(" + ")
}

fn resonances(o: &Opts) -> Run {
    let s = load_spectrum(&o.spectrum)?;
    let report = ResonanceJson::from_set(&resonance_set(&s, o.max_degree)?);
    Ok(render(o.format, &report, |r| {
        let mut out = String::new();
        match r.degree_bound {
            Some(b) => writeln!(
                out,
                "finite resonance set, degree bound {b}, {} resonances",
                r.r
            ),
            None => writeln!(
                out,
                "infinite resonance set, {} resonances up to degree {}",
                r.r,
                r.cap.unwrap_or(0)
            ),
        }
        .unwrap();
        for (j, ms) in &r.per_component.0 {
            let list: Vec<String> = ms.iter().map(|m| monomial(m)).collect();
            writeln!(out, "R{j}: {}", list.join(", ")).unwrap();
        }
        out
    }))
}

fn pdnf(o: &Opts) -> Run {
    let s = load_spectrum(&o.spectrum)?;
    let top = match o.max_degree {
        Some(d) => d,
        None => resonance_set(&s, None)?
            .degree_bound
            .ok_or(Error::InfiniteResonanceWithoutCap)?,
    };
    let report = PdnfBasisJson::new(top, &pdnf_basis(&s, Some(top))?);
    Ok(render(o.format, &report, |r| {
        let mut out = format!("{} basis elements up to degree {}\n", r.count, r.max_degree);
        for b in &r.basis {
            writeln!(out, "{} e{}", monomial(&b.m), b.j).unwrap();
        }
        out
    }))
}

fn centralizer(o: &Opts) -> Run {
    let s = load_spectrum(&o.spectrum)?;
    let f = load_field(o)?;
    let res = match o.truncate {
        Some(d) => centralizer_truncated(&s, &f, d)?,
        None => centralizer_exact(&s, &f)?,
    };
    let report = CentralizerJson::from_result(&res);
    Ok(render(o.format, &report, |r| {
        let kind = match r.truncation {
            Some(d) => format!("truncated at degree {d}"),
            None => "exact".into(),
        };
        let mut out = format!(
            "dimension {} ({kind}); linear commutant {}, resonances {}\n",
            r.dimension, r.bounds.d, r.bounds.r
        );
        for (k, b) in r.basis.iter().enumerate() {
            writeln!(out, "g{}: {}", k + 1, field_text(b)).unwrap();
        }
        out
    }))
}

fn normalizer(o: &Opts) -> Run {
    let s = load_spectrum(&o.spectrum)?;
    let f = load_field(o)?;
    let d = required(o.truncate, "truncate")?;
    let res = normalizer_truncated(&s, &f, d)?;
    let semisimple_nonzero = s.semisimple_matrix().is_some_and(|a| !a.is_zero());
    let reductions = if semisimple_nonzero {
        Some(
            res.basis
                .iter()
                .map(|p| normalizer_reduce(&s, &f, &p.g, &p.lambda, d))
                .collect::<nfkit_core::Result<Vec<_>>>()?,
        )
    } else {
        None
    };
    let report = NormalizerJson::from_result(&res, reductions.as_deref());
    Ok(render(o.format, &report, |r| {
        let mut out = format!(
            "dimension {} modulo degree > {}\n",
            r.dimension, r.truncation
        );
        for (k, p) in r.basis.iter().enumerate() {
            writeln!(out, "g{}: {}", k + 1, field_text(&p.g)).unwrap();
            writeln!(out, "lambda{}: {}", k + 1, series_text(&p.lambda)).unwrap();
            if let Some(red) = r.reductions.as_ref().map(|v| &v[k]) {
                writeln!(out, "  beta: {}", series_text(&red.beta)).unwrap();
                writeln!(out, "  alpha: {}", series_text(&red.alpha)).unwrap();
            }
        }
        out
    }))
}

fn optional_check(
    r: nfkit_core::Result<nfkit_core::invariants::ModuleCheck>,
) -> nfkit_core::Result<Option<nfkit_core::invariants::ModuleCheck>> {
    match r {
        Ok(c) => Ok(Some(c)),
        Err(Error::ZeroEigenvalue(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

fn invariants(o: &Opts) -> Run {
    let s = load_spectrum(&o.spectrum)?;
    let inv = invariant_generators_with_cap(&s, o.max_degree.unwrap_or(DEFAULT_HILBERT_CAP))?;
    let bound = o.search_bound.unwrap_or(DEFAULT_SEARCH_BOUND);
    let free = optional_check(check_free_module(&s, bound))?;
    let onediv = check_onediv(&s, bound)?;
    let report = InvariantsJson::new(&inv, free.as_ref(), Some(&onediv));
    Ok(render(o.format, &report, |r| {
        let gens: Vec<String> = r.generators.iter().map(|g| monomial(g)).collect();
        let mut out = format!(
            "{} generators{}: {}\n",
            gens.len(),
            if r.independent { "" } else { " (dependent)" },
            gens.join(", ")
        );
        for (name, c) in [("free module", &r.free_module), ("onediv", &r.onediv)] {
            if let Some(c) = c {
                write!(out, "{name}: {:?}", c.verdict).unwrap();
                if let Some(w) = &c.witness {
                    write!(out, " (witness {} for component {})", monomial(&w.m), w.j).unwrap();
                }
                out.push('\n');
            }
        }
        out
    }))
}

fn reduce(o: &Opts) -> Run {
    let s = load_spectrum(&o.spectrum)?;
    let f = load_field(o)?;
    let inv = invariant_generators_with_cap(&s, o.max_degree.unwrap_or(DEFAULT_HILBERT_CAP))?;
    let red = reduce_vectorfield(&s, &inv, &f)?;
    let cert = triviality_certificate(&red, o.search_bound.unwrap_or(DEFAULT_SEARCH_BOUND))?;
    let obstruction = reduced_multiplier_obstruction(&red);
    let report = ReducedJson::new(&inv, &red, Some(&cert), Some(&obstruction));
    Ok(render(o.format, &report, |r| {
        let gens: Vec<String> = r.generators.iter().map(|g| monomial(g)).collect();
        let mut out = format!("generators: {}\n", gens.join(", "));
        writeln!(
            out,
            "reduced field: {}",
            field_text(&r.field).replace('x', "y")
        )
        .unwrap();
        for row in &r.nu {
            writeln!(out, "nu: [{}]", row.join(", ")).unwrap();
        }
        if let Some(c) = &r.certificate {
            writeln!(out, "trivial centralizer certified: {}", c.certified).unwrap();
            for reason in &c.reasons {
                writeln!(out, "  {reason}").unwrap();
            }
        }
        if let Some(ob) = &r.obstruction {
            writeln!(out, "multiplier obstruction: {}", ob.status).unwrap();
        }
        out
    }))
}

fn jacobi(o: &Opts) -> Run {
    let s = load_spectrum(&o.spectrum)?;
    let f = load_field(o)?;
    let r_min = required(o.r_min, "r-min")?;
    let r_max = required(o.r_max, "r-max")?;
    let d = required(o.truncate, "truncate")?;
    let report = LadderJson::from_ladder(&solve_multiplier(&s, &f, r_min, r_max, d)?);
    Ok(render(o.format, &report, |l| {
        let mut out = format!("multipliers modulo degree > {}\n", l.truncation);
        for e in &l.entries {
            match (&e.multiplier, e.failed_degree) {
                (Some(m), _) => writeln!(out, "r = {}: solved, phi = {}", e.r, series_text(m)),
                (None, Some(k)) => writeln!(out, "r = {}: inconsistent at degree {k}", e.r),
                (None, None) => writeln!(out, "r = {}: {}", e.r, e.status),
            }
            .unwrap();
        }
        writeln!(out, "{}", l.support_note).unwrap();
        out
    }))
}

fn classify3(d1: u64, d2: u64, d3: u64, format: Format) -> Run {
    let report = Dim3Json::from(classify_dim3(d1, d2, d3)?);
    Ok(render(format, &report, |c| match (c.holds, c.l1, c.l2) {
        (true, Some(l1), Some(l2)) => format!("holds with l1 = {l1}, l2 = {l2}\n"),
        _ => "fails\n".into(),
    }))
}

fn check(o: &Opts) -> Run {
    let s = load_spectrum(&o.spectrum)?;
    let (u, w) = uw_decomposition(&s)?;
    let mut report = CheckJson {
        finite_resonance: is_finite_linear_centralizer(&s)?,
        positive_relation: has_positive_relation(&s)?,
        u: u.iter().map(|i| i + 1).collect(),
        w: w.iter().map(|i| i + 1).collect(),
        pdnf: None,
        offending_term: None,
        divergence_invariant: None,
    };
    if o.field.is_some() {
        let f = load_field(o)?;
        match pdnf_remainder(&s, &f) {
            Ok(_) => {
                report.pdnf = Some(true);
                report.divergence_invariant = Some(divergence_integral_check(&s, &f)?);
            }
            Err(Error::NotPdnf { j, m }) => {
                report.pdnf = Some(false);
                report.offending_term = Some(WitnessJson { j, m });
            }
            Err(e) => return Err(e.into()),
        }
    }
    Ok(render(o.format, &report, |c| {
        let list = |v: &[usize]| {
            v.iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        };
        let mut out = format!(
            "finite resonance: {}\npositive relation: {}\nU = {{{}}}, W = {{{}}}\n",
            c.finite_resonance,
            c.positive_relation,
            list(&c.u),
            list(&c.w)
        );
        if let Some(p) = c.pdnf {
            writeln!(out, "normal form: {p}").unwrap();
        }
        if let Some(t) = &c.offending_term {
            writeln!(out, "non-resonant term: {} e{}", monomial(&t.m), t.j).unwrap();
        }
        if let Some(d) = c.divergence_invariant {
            writeln!(out, "divergence is a first integral of A_s: {d}").unwrap();
        }
        out
    }))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (format, result) = match &cli.command {
        Command::Resonances(o) => (o.format, resonances(o)),
        Command::PdnfBasis(o) => (o.format, pdnf(o)),
        Command::Centralizer(o) => (o.format, centralizer(o)),
        Command::Normalizer(o) => (o.format, normalizer(o)),
        Command::Invariants(o) => (o.format, invariants(o)),
        Command::Reduce(o) => (o.format, reduce(o)),
        Command::Jacobi(o) => (o.format, jacobi(o)),
        Command::Classify3 { d1, d2, d3, format } => (*format, classify3(*d1, *d2, *d3, *format)),
        Command::Check(o) => (o.format, check(o)),
    };
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(fail) => {
            let (report, scope) = match &fail {
                Failure::Core(e) => (ErrorJson::from_error(e), e.is_scope()),
                Failure::Io(msg) => (
                    ErrorJson {
                        error: "io".into(),
                        message: msg.clone(),
                    },
                    false,
                ),
            };
            match format {
                Format::Json => print!("{}", json::to_string(&report)),
                Format::Text => eprintln!("error [{}]: {}", report.error, report.message),
            }
            ExitCode::from(if scope { 3 } else { 2 })
        }
    }
}
