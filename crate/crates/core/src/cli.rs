//! Command dispatch for the `hgx` binary: parse a structure-constant file,
//! run verification or computation, and emit a deterministic report.
//!
//! Exit codes: 0 all checks pass, 1 mathematical failure (with witness),
//! 2 usage or parse error, 3 search cap exceeded.

use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};

use crate::builtins;
use crate::cleft::{
    crossed_product, extract_sigma, find_algebra_integral, find_total_integral, omega, phi_iso,
    IntegralSearch, OmegaAction,
};
use crate::cohomology::{
    first_cohomology, one_coboundaries, one_cocycles, two_cocycle_trivial, CoboundaryList,
    EnumerationRoute, Triviality,
};
use crate::field::Scalar;
use crate::galois::{galois_check, ComoduleAlgebraData, GaloisOutcome};
use crate::hgx::{emit_document, parse_hgx, HgxDocument, HgxObject};
use crate::hopf::format_in_basis;
use crate::picard::{pic_galois_object, twist_action_line, twist_module};
use crate::report::{Report, ReportFormat, Section};
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MATH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Structured,
}

impl From<FormatArg> for ReportFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Text => ReportFormat::Text,
            FormatArg::Structured => ReportFormat::Structured,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "hgx",
    about = "exact Hopf-Galois computations on structure-constant files",
    disable_version_flag = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Report format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: FormatArg,
    /// Write the report (or emitted document) here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Search and enumeration cap.
    #[arg(long, global = true, default_value_t = 1 << 20)]
    cap: u64,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run axiom reports on the objects of a file.
    Verify {
        file: PathBuf,
        /// Restrict to one named object.
        #[arg(long)]
        object: Option<String>,
        /// Restrict to one named Hopf algebra.
        #[arg(long)]
        hopf: Option<String>,
    },
    /// Decide the Galois property and certify the translation map.
    Galois {
        file: PathBuf,
        #[arg(long)]
        object: String,
    },
    /// Find a total integral, extract the cocycle, rebuild the crossed
    /// product and verify the isomorphism.
    Cleft {
        file: PathBuf,
        #[arg(long)]
        object: String,
    },
    /// Sweedler cohomology of the extension in the requested degree.
    Cohomology {
        file: PathBuf,
        #[arg(long)]
        object: String,
        #[arg(long)]
        degree: u8,
    },
    /// The Picard group of a Galois object with its twisted modules.
    Picard {
        file: PathBuf,
        #[arg(long)]
        object: String,
    },
    /// Emit a built-in example as an HGX document.
    Builtin {
        #[command(subcommand)]
        which: BuiltinCommand,
    },
}

#[derive(Debug, Subcommand)]
enum BuiltinCommand {
    /// `H = k[x]/(x^q - x)` and `S = k[y]/(y^q - y - a)` over GF(p^d).
    ArtinSchreier {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        a: String,
    },
    /// The trigonometric algebra acting on the quartic radical field.
    Trig,
    /// B0 (x) S over GF(p^d) with B0 the split pair or 2x2 matrices.
    TensorExt {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        a: String,
        #[arg(long, default_value = "square")]
        b0: String,
    },
}

/// Run the CLI on the given argv; returns the exit code and what should be
/// printed to standard output.
pub fn run_command<I, S>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            // clap renders its own help/usage text
            return (EXIT_USAGE, e.to_string());
        }
    };
    let format: ReportFormat = cli.format.into();
    let cap = cli.cap;
    let (code, text) = match dispatch(cli.command, format, cap) {
        Ok((code, text)) => (code, text),
        Err(e) => {
            let code = match &e {
                Error::CapExceeded(_) => EXIT_CAP,
                Error::MathFailure(_) | Error::AxiomFailure(_) => EXIT_MATH,
                _ => EXIT_USAGE,
            };
            (code, format!("error: {e}\n"))
        }
    };
    if let Some(path) = cli.out {
        match std::fs::write(&path, &text) {
            Ok(()) => (code, String::new()),
            Err(e) => (EXIT_USAGE, format!("error: cannot write {}: {e}\n", path.display())),
        }
    } else {
        (code, text)
    }
}

fn dispatch(command: Command, format: ReportFormat, cap: u64) -> Result<(i32, String), Error> {
    match command {
        Command::Verify { file, object, hopf } => {
            let doc = load(&file)?;
            let report = verify_report(&doc, object.as_deref(), hopf.as_deref())?;
            let code = if report.all_passed() { EXIT_OK } else { EXIT_MATH };
            Ok((code, report.render(format)))
        }
        Command::Galois { file, object } => {
            let doc = load(&file)?;
            let a = comodule_object(&doc, &object)?;
            let (code, report) = galois_report(&object, &a)?;
            Ok((code, report.render(format)))
        }
        Command::Cleft { file, object } => {
            let doc = load(&file)?;
            let a = comodule_object(&doc, &object)?;
            let (code, report) = cleft_report(&object, &a, cap)?;
            Ok((code, report.render(format)))
        }
        Command::Cohomology {
            file,
            object,
            degree,
        } => {
            let doc = load(&file)?;
            let a = comodule_object(&doc, &object)?;
            let (code, report) = cohomology_report(&object, &a, degree, cap)?;
            Ok((code, report.render(format)))
        }
        Command::Picard { file, object } => {
            let doc = load(&file)?;
            let a = comodule_object(&doc, &object)?;
            let (code, report) = picard_report(&object, &a, cap)?;
            Ok((code, report.render(format)))
        }
        Command::Builtin { which } => {
            let doc = build_builtin(which)?;
            Ok((EXIT_OK, emit_document(&doc)))
        }
    }
}

fn load(path: &PathBuf) -> Result<HgxDocument, Error> {
    let text = std::fs::read_to_string(path)?;
    parse_hgx(&text).map_err(|diags| {
        let mut msg = String::from("parse failed\n");
        for d in diags.iter().take(20) {
            msg.push_str(&format!("  {d}\n"));
        }
        Error::InvalidScalar(msg) // rendered as a usage-level failure
    })
}

fn comodule_object(doc: &HgxDocument, name: &str) -> Result<Arc<ComoduleAlgebraData>, Error> {
    match doc.get(name) {
        Some(HgxObject::ComoduleAlgebra { data, .. }) => Ok(Arc::clone(data)),
        Some(o) => Err(Error::Unsupported(format!(
            "object `{name}` is a {}, expected a comodule-algebra",
            o.kind()
        ))),
        None => Err(Error::Unsupported(format!("no object named `{name}`"))),
    }
}

fn axioms_into_section(section: &mut Section, report: &crate::hopf::AxiomReport) {
    for c in &report.checks {
        section.check(&c.name, c.passed, c.witness.clone().unwrap_or_default());
    }
}

fn verify_report(
    doc: &HgxDocument,
    only_object: Option<&str>,
    only_hopf: Option<&str>,
) -> Result<Report, Error> {
    let mut report = Report::default();
    for (name, obj) in &doc.objects {
        if let Some(o) = only_object {
            if name != o {
                continue;
            }
        }
        if let Some(h) = only_hopf {
            if !(matches!(obj, HgxObject::Hopf(_)) && name == h) {
                continue;
            }
        }
        let mut section = Section::new(format!("{} {}", obj.kind(), name));
        match obj {
            HgxObject::Hopf(h) => axioms_into_section(&mut section, &h.check_hopf_axioms()),
            HgxObject::Algebra(a) => axioms_into_section(&mut section, &a.axiom_report()),
            HgxObject::ComoduleAlgebra { data, .. } => {
                axioms_into_section(&mut section, &data.axiom_report())
            }
            HgxObject::Action {
                hopf_name,
                matrices,
                ..
            } => {
                let hopf = match doc.get(hopf_name) {
                    Some(HgxObject::Hopf(h)) => Arc::clone(h),
                    _ => unreachable!("validated at parse"),
                };
                // the algebra the action lives on
                let algebra = action_algebra(doc, obj)?;
                match crate::galois::dualize_action(&hopf, matrices, algebra) {
                    Ok(_) => section.check("action.module_algebra", true, ""),
                    Err(e) => section.check("action.module_algebra", false, format!("{e}")),
                }
            }
            HgxObject::Module {
                over_name,
                matrices,
                dim,
                ..
            } => {
                let over = algebra_by_name(doc, over_name)?;
                section.check(
                    "module.left_axioms",
                    verify_left_module(&over, matrices, *dim),
                    "",
                );
            }
            HgxObject::Character { hopf_name, values } => {
                let hopf = match doc.get(hopf_name) {
                    Some(HgxObject::Hopf(h)) => Arc::clone(h),
                    _ => unreachable!(),
                };
                let ok = {
                    let phi = |v: &[Scalar]| -> Scalar {
                        let mut s = hopf.field().zero();
                        for (i, c) in v.iter().enumerate() {
                            if !c.is_zero() {
                                s = s.add(&c.mul(&values[i]));
                            }
                        }
                        s
                    };
                    phi(&hopf.algebra.unit).is_one()
                        && (0..hopf.dim()).all(|i| {
                            (0..hopf.dim()).all(|j| {
                                phi(&hopf.algebra.basis_product(i, j))
                                    == values[i].mul(&values[j])
                            })
                        })
                };
                section.check("character.algebra_map", ok, "");
            }
            HgxObject::Cocycle {
                hopf_name,
                base_name,
                omega: om,
                sigma,
            } => {
                let hopf = match doc.get(hopf_name) {
                    Some(HgxObject::Hopf(h)) => Arc::clone(h),
                    _ => unreachable!(),
                };
                let base = algebra_by_name(doc, base_name)?;
                let cocycle = crate::cleft::TwoCocycle {
                    hopf,
                    base: (*base).clone(),
                    omega: OmegaAction {
                        matrices: om.clone(),
                    },
                    table: sigma.clone(),
                    provenance: Some(format!("document object {name}")),
                };
                match crossed_product(&cocycle) {
                    Ok(_) => section.check("cocycle.crossed_product_associative", true, ""),
                    Err(e) => {
                        section.check("cocycle.crossed_product_associative", false, format!("{e}"))
                    }
                }
            }
        }
        report.push(section);
    }
    if report.sections.is_empty() {
        let mut s = Section::new("verify");
        s.line("objects", "none matched");
        report.push(s);
    }
    Ok(report)
}

fn action_algebra(doc: &HgxDocument, obj: &HgxObject) -> Result<Arc<crate::hopf::AlgebraData>, Error> {
    if let HgxObject::Action { algebra_name, .. } = obj {
        algebra_by_name(doc, algebra_name)
    } else {
        unreachable!()
    }
}

fn algebra_by_name(doc: &HgxDocument, name: &str) -> Result<Arc<crate::hopf::AlgebraData>, Error> {
    match doc.get(name) {
        Some(HgxObject::Algebra(a)) => Ok(Arc::clone(a)),
        Some(HgxObject::ComoduleAlgebra { data, .. }) => Ok(Arc::clone(&data.algebra)),
        _ => Err(Error::Unsupported(format!("no algebra named `{name}`"))),
    }
}

fn verify_left_module(
    over: &crate::hopf::AlgebraData,
    matrices: &[crate::linalg::Matrix],
    dim: usize,
) -> bool {
    use crate::linalg::Matrix;
    let field = &over.field;
    let combo = |v: &[Scalar]| -> Matrix {
        let mut out = Matrix::zero(field.clone(), dim, dim);
        for (k, c) in v.iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&matrices[k].scale(c));
            }
        }
        out
    };
    if combo(&over.unit) != Matrix::identity(field.clone(), dim) {
        return false;
    }
    (0..over.dim).all(|i| {
        (0..over.dim).all(|j| {
            combo(&over.basis_product(i, j)) == matrices[i].matmul(&matrices[j])
        })
    })
}

fn galois_report(name: &str, a: &Arc<ComoduleAlgebraData>) -> Result<(i32, Report), Error> {
    let mut report = Report::default();
    let mut axioms = Section::new(format!("comodule-algebra axioms for {name}"));
    let ar = a.axiom_report();
    axioms_into_section(&mut axioms, &ar);
    report.push(axioms);
    if !ar.all_passed() {
        return Ok((EXIT_MATH, report));
    }
    match galois_check(a)? {
        GaloisOutcome::Failed(fail) => {
            let mut s = Section::new(format!("galois check for {name}"));
            s.check("galois.canonical_map", false, format!("{fail}"));
            if let crate::galois::GaloisFailure::CanNotBijective {
                witness: Some(w), ..
            } = &fail
            {
                s.line(
                    "witness",
                    crate::galois::format_tensor(w, &a.algebra.labels),
                );
            }
            report.push(s);
            Ok((EXIT_MATH, report))
        }
        GaloisOutcome::Certified(cert) => {
            let mut s = Section::new(format!("galois certificate for {name}"));
            s.line("coinvariant dimension", format!("{}", cert.coinv.dim()));
            s.line(
                "free rank over the coinvariants",
                format!("{}", cert.tensor_sq.free_basis.len()),
            );
            s.line(
                "second canonical map bijective",
                format!("{}", cert.can_prime.inverse().is_some()),
            );
            for h in 0..a.hopf.dim() {
                s.line(
                    format!("gamma {}", a.hopf.labels()[h]),
                    cert.format_gamma(h),
                );
            }
            report.push(s);
            let mut ids = Section::new("translation identities");
            axioms_into_section(&mut ids, &cert.translation_identities_report());
            report.push(ids);
            let mut mu_section = Section::new("module structure on the center");
            match cert.mu_action() {
                Ok(mu) => {
                    mu_section.check("center.action_axioms", true, "");
                    mu_section.line(
                        "center dimension",
                        format!("{}", mu.center.algebra.dim),
                    );
                    mu_section.line(
                        "action trivial",
                        format!("{}", mu.is_trivial(&a.hopf)),
                    );
                }
                Err(e) => mu_section.check("center.action_axioms", false, format!("{e}")),
            }
            report.push(mu_section);
            let code = if report.all_passed() { EXIT_OK } else { EXIT_MATH };
            Ok((code, report))
        }
    }
}

fn cleft_report(
    name: &str,
    a: &Arc<ComoduleAlgebraData>,
    cap: u64,
) -> Result<(i32, Report), Error> {
    let mut report = Report::default();
    let coinv = crate::galois::coinvariants(a)?;
    let mut s = Section::new(format!("cleft structure for {name}"));
    let t = match find_total_integral(a, cap)? {
        IntegralSearch::Found(t) => t,
        IntegralSearch::NoneDefinitive => {
            s.check(
                "cleft.total_integral",
                false,
                "no convolution-invertible colinear map exists (search exhausted)",
            );
            report.push(s);
            return Ok((EXIT_MATH, report));
        }
        IntegralSearch::CapExceeded => {
            return Err(Error::CapExceeded("total integral search".into()));
        }
    };
    s.check("cleft.total_integral", true, "");
    for h in 0..a.hopf.dim() {
        s.line(
            format!("t {}", a.hopf.labels()[h]),
            format_in_basis(&t.map.apply_basis(h), &a.algebra.labels),
        );
    }
    s.line("algebra map", format!("{}", t.algebra_map));
    report.push(s);
    let om = omega(a, &coinv, &t)?;
    let sigma = extract_sigma(a, &coinv, &t)?;
    let mut cs = Section::new("measuring action and cocycle");
    cs.line(
        "action trivial",
        format!("{}", om.is_trivial(&a.hopf, &coinv.algebra)),
    );
    for h in 0..a.hopf.dim() {
        for k in 0..a.hopf.dim() {
            cs.line(
                format!("sigma {} , {}", a.hopf.labels()[h], a.hopf.labels()[k]),
                format_in_basis(&sigma.table[h][k], &coinv.algebra.labels),
            );
        }
    }
    report.push(cs);
    let mut xs = Section::new("crossed product");
    match crossed_product(&sigma) {
        Ok(crossed) => {
            xs.check("cocycle.crossed_product_associative", true, "");
            match phi_iso(a, &coinv, &t, &crossed) {
                Ok(_) => xs.check("cleft.comodule_algebra_isomorphism", true, ""),
                Err(e) => xs.check("cleft.comodule_algebra_isomorphism", false, format!("{e}")),
            }
        }
        Err(e) => xs.check("cocycle.crossed_product_associative", false, format!("{e}")),
    }
    report.push(xs);
    let code = if report.all_passed() { EXIT_OK } else { EXIT_MATH };
    Ok((code, report))
}

fn cohomology_report(
    name: &str,
    a: &Arc<ComoduleAlgebraData>,
    degree: u8,
    cap: u64,
) -> Result<(i32, Report), Error> {
    if degree != 1 && degree != 2 {
        return Err(Error::Unsupported("only degrees 1 and 2 are computed".into()));
    }
    let mut report = Report::default();
    let cert = galois_check(a)?.certified()?;
    let mu = cert.mu_action()?;
    if degree == 1 {
        let z = Arc::new(mu.center.algebra.clone());
        let omega_action = OmegaAction {
            matrices: mu.matrices.clone(),
        };
        let backed = matches!(find_algebra_integral(a, cap)?, IntegralSearch::Found(_));
        let h1 = first_cohomology(&a.hopf, &z, &omega_action, cap, backed)?;
        let mut s = Section::new(format!("degree-1 cohomology for {name}"));
        s.line("cocycles", format!("{}", h1.cocycle_count));
        s.line("coboundaries", format!("{}", h1.coboundary_count));
        s.line("order", format!("{}", h1.order));
        s.line("base point backed", format!("{}", h1.base_point_backed));
        for (i, rep) in h1.representatives.iter().enumerate() {
            let vals: Vec<String> = (0..a.hopf.dim())
                .map(|h| {
                    format!(
                        "{} -> {}",
                        a.hopf.labels()[h],
                        format_in_basis(&rep.map.apply_basis(h), &z.labels)
                    )
                })
                .collect();
            s.line(format!("representative {i}"), vals.join("; "));
        }
        // enumeration routes, for the report's provenance line
        let z1 = one_cocycles(&a.hopf, &z, &omega_action, cap)?;
        s.line(
            "cocycle enumeration",
            match z1.route {
                EnumerationRoute::Exhaustive => "exhaustive".to_string(),
                EnumerationRoute::AlgebraMapReduction => {
                    "reduced to algebra maps (trivial action)".to_string()
                }
            },
        );
        if let CoboundaryList::Described(d) = one_coboundaries(&a.hopf, &z, &omega_action, cap)? {
            s.line("coboundary description", d);
        }
        report.push(s);
        Ok((EXIT_OK, report))
    } else {
        let coinv = &cert.coinv;
        let t = match find_total_integral(a, cap)? {
            IntegralSearch::Found(t) => t,
            IntegralSearch::NoneDefinitive => {
                let mut s = Section::new(format!("degree-2 cohomology for {name}"));
                s.check("cleft.total_integral", false, "extension is not cleft");
                report.push(s);
                return Ok((EXIT_MATH, report));
            }
            IntegralSearch::CapExceeded => {
                return Err(Error::CapExceeded("total integral search".into()))
            }
        };
        let sigma = extract_sigma(a, coinv, &t)?;
        let class = two_cocycle_trivial(&sigma, cap)?;
        let mut s = Section::new(format!("degree-2 cohomology for {name}"));
        for h in 0..a.hopf.dim() {
            for k in 0..a.hopf.dim() {
                s.line(
                    format!("sigma {} , {}", a.hopf.labels()[h], a.hopf.labels()[k]),
                    format_in_basis(&sigma.table[h][k], &coinv.algebra.labels),
                );
            }
        }
        let (code, status) = match &class.status {
            Triviality::Trivial { .. } => (EXIT_OK, "trivial (algebra-map witness found)"),
            Triviality::Nontrivial => (EXIT_OK, "nontrivial (candidate space exhausted)"),
            Triviality::Unknown => (EXIT_CAP, "unknown (search cap exceeded)"),
        };
        s.line("class", status);
        report.push(s);
        Ok((code, report))
    }
}

fn picard_report(
    name: &str,
    a: &Arc<ComoduleAlgebraData>,
    cap: u64,
) -> Result<(i32, Report), Error> {
    let mut report = Report::default();
    let cert = galois_check(a)?.certified()?;
    let pic = pic_galois_object(a, &cert, cap)?;
    let mut s = Section::new(format!("picard group of {name}"));
    s.line("order", format!("{}", pic.order()));
    for (i, chi) in pic.characters.iter().enumerate() {
        let vals: Vec<String> = (0..a.hopf.dim())
            .map(|h| format!("{} -> {}", a.hopf.labels()[h], chi[h]))
            .collect();
        s.line(format!("character {i}"), vals.join("; "));
    }
    for (i, row) in pic.table.iter().enumerate() {
        let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        s.line(format!("table row {i}"), cells.join(" "));
    }
    s.line("identity", format!("{}", pic.identity));
    let invs: Vec<String> = pic.inverses.iter().map(|x| x.to_string()).collect();
    s.line("inverses", invs.join(" "));
    report.push(s);
    let mut ms = Section::new("twisted modules");
    let generators: Vec<usize> = match &a.algebra.generators {
        Some(gens) => gens
            .iter()
            .filter_map(|g| (0..a.algebra.dim).find(|&i| *g == a.algebra.basis_vector(i)))
            .collect(),
        None => (0..a.algebra.dim).collect(),
    };
    for (i, chi) in pic.characters.iter().enumerate() {
        match twist_module(a, &cert, chi, cap) {
            Ok(_) => ms.check(format!("module {i} invertible"), true, ""),
            Err(e) => ms.check(format!("module {i} invertible"), false, format!("{e}")),
        }
        for &g in &generators {
            ms.line(
                format!("module {i} right action"),
                twist_action_line(a, chi, g),
            );
        }
    }
    report.push(ms);
    let code = if report.all_passed() { EXIT_OK } else { EXIT_MATH };
    Ok((code, report))
}

fn build_builtin(which: BuiltinCommand) -> Result<HgxDocument, Error> {
    match which {
        BuiltinCommand::ArtinSchreier { p, d, a } => {
            let field = crate::field::FieldSpec::finite(p, d)?;
            let a_param = Scalar::parse(&field, &a)?;
            let data = builtins::builtin_artin_schreier(p, d, &a_param)?;
            Ok(HgxDocument {
                field,
                objects: vec![
                    ("H".into(), HgxObject::Hopf(data.hopf)),
                    (
                        "S".into(),
                        HgxObject::ComoduleAlgebra {
                            hopf_name: "H".into(),
                            data: data.comodule,
                        },
                    ),
                ],
            })
        }
        BuiltinCommand::Trig => {
            let trig = builtins::builtin_trig()?;
            Ok(HgxDocument {
                field: trig.hopf.field().clone(),
                objects: vec![
                    ("Htrig".into(), HgxObject::Hopf(Arc::clone(&trig.hopf))),
                    ("HtrigDual".into(), HgxObject::Hopf(Arc::clone(&trig.dual))),
                    (
                        "A".into(),
                        HgxObject::ComoduleAlgebra {
                            hopf_name: "HtrigDual".into(),
                            data: Arc::clone(&trig.comodule),
                        },
                    ),
                    (
                        "act".into(),
                        HgxObject::Action {
                            hopf_name: "Htrig".into(),
                            algebra_name: "A".into(),
                            matrices: trig.action.clone(),
                        },
                    ),
                ],
            })
        }
        BuiltinCommand::TensorExt { p, d, a, b0 } => {
            let field = crate::field::FieldSpec::finite(p, d)?;
            let a_param = Scalar::parse(&field, &a)?;
            let b0_alg = match b0.as_str() {
                "square" => builtins::square_algebra(field.clone())?,
                "matrix2" => builtins::matrix2_algebra(field.clone())?,
                other => {
                    return Err(Error::Unsupported(format!(
                        "unknown coefficient algebra `{other}` (use square or matrix2)"
                    )))
                }
            };
            let data = builtins::builtin_tensor_extension(&b0_alg, p, d, &a_param)?;
            Ok(HgxDocument {
                field,
                objects: vec![
                    ("H".into(), HgxObject::Hopf(data.hopf)),
                    ("B0".into(), HgxObject::Algebra(Arc::new(b0_alg))),
                    (
                        "A".into(),
                        HgxObject::ComoduleAlgebra {
                            hopf_name: "H".into(),
                            data: data.comodule,
                        },
                    ),
                ],
            })
        }
    }
}
