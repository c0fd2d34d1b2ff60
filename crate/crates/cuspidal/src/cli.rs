//! Command-line surface: curve-descriptor ingestion, human and machine
//! reports, graded-root rendering, and the search driver.
//!
//! Exit codes: `0` computed (and every gate passed), `1` a conjecture gate
//! failed, `2` invalid input.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::branchdata::{
    branch_from_newton_pairs, multiplicity_data, semigroup_from_generators, semigroup_of,
    BranchType, Semigroup,
};
use crate::curvecheck::{
    dimensions_report, kappa_stab_hints, superisolated_invariants, CurveSpec, KappaBar,
};
use crate::error::{Error, Result};
use crate::gradedroots::{
    root_from_tau, roots_isomorphic, tau_for_brieskorn, tau_for_surgery, GradedRoot, TauFunction,
};
use crate::localinv::{alexander_poly, semicontinuity_check, spectrum, LocalInvariants};
use crate::search::enumerate_one_pair_parallel;
use crate::semidist::distribution_report;
use crate::swtorsion::sw_both_ways;

pub const EXIT_OK: i32 = 0;
pub const EXIT_GATE_FAILED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

/// Wire format for one cusp: exactly one of `newton_pairs` or
/// `semigroup_generators`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CuspDescriptor {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub newton_pairs: Option<Vec<(u64, u64)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub semigroup_generators: Option<Vec<u64>>,
}

/// Wire format for a curve.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveDescriptor {
    pub degree: u64,
    pub cusps: Vec<CuspDescriptor>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stab_dim: Option<u8>,
    /// `"-inf"`, `"0"`, `"1"`, `"2"` or `"unknown"`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kappa_bar: Option<String>,
    /// `[d, a]` for a generic member of the pencil `y^d + lambda z^a x^{d-a}`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pencil: Option<(u64, u64)>,
}

/// A cusp resolved from the wire format. Spectrum- and resolution-dependent
/// commands need the branch; semigroup-level commands accept either.
pub enum ResolvedCusp {
    Branch(BranchType),
    Generators(Semigroup),
}

impl ResolvedCusp {
    fn semigroup(&self) -> Result<Semigroup> {
        match self {
            ResolvedCusp::Branch(b) => semigroup_of(b),
            ResolvedCusp::Generators(sg) => Ok(sg.clone()),
        }
    }

    fn branch(&self) -> Result<&BranchType> {
        match self {
            ResolvedCusp::Branch(b) => Ok(b),
            ResolvedCusp::Generators(_) => Err(Error::InvalidInput(
                "this command needs `newton_pairs`; a generator-only cusp has no \
                 resolution or spectrum data"
                    .into(),
            )),
        }
    }
}

pub struct ResolvedCurve {
    pub degree: u64,
    pub cusps: Vec<ResolvedCusp>,
    pub stab_dim: Option<u8>,
    pub kappa_bar: Option<KappaBar>,
    pub pencil: Option<(u64, u64)>,
}

impl ResolvedCurve {
    /// Curve spec for the commands that need full branch data.
    fn to_spec(&self) -> Result<CurveSpec> {
        let mut cusps = Vec::new();
        for c in &self.cusps {
            cusps.push(c.branch()?.clone());
        }
        let mut spec = CurveSpec::new(self.degree, cusps)?;
        spec.stab_dim = self.stab_dim;
        spec.kappa_bar = self.kappa_bar;
        spec.pencil = self.pencil;
        Ok(spec)
    }

    fn single_cusp(&self) -> Result<&ResolvedCusp> {
        if self.cusps.len() != 1 {
            return Err(Error::InvalidInput(format!(
                "this command is defined for unicuspidal curves, got {} cusps",
                self.cusps.len()
            )));
        }
        Ok(&self.cusps[0])
    }
}

pub fn parse_descriptor(text: &str) -> Result<ResolvedCurve> {
    let desc: CurveDescriptor = serde_json::from_str(text)
        .map_err(|e| Error::InvalidInput(format!("descriptor: {e}")))?;
    if desc.cusps.is_empty() {
        return Err(Error::InvalidInput("descriptor: `cusps` is empty".into()));
    }
    let mut cusps = Vec::new();
    for (i, c) in desc.cusps.iter().enumerate() {
        let resolved = match (&c.newton_pairs, &c.semigroup_generators) {
            (Some(pairs), None) => ResolvedCusp::Branch(branch_from_newton_pairs(pairs)?),
            (None, Some(gens)) => ResolvedCusp::Generators(semigroup_from_generators(gens)?),
            _ => {
                return Err(Error::InvalidInput(format!(
                    "cusps[{i}]: exactly one of `newton_pairs` / `semigroup_generators` required"
                )))
            }
        };
        cusps.push(resolved);
    }
    let kappa_bar = match desc.kappa_bar.as_deref() {
        None | Some("unknown") => None,
        Some("-inf") => Some(KappaBar::MinusInf),
        Some("0") => Some(KappaBar::Zero),
        Some("1") => Some(KappaBar::One),
        Some("2") => Some(KappaBar::Two),
        Some(other) => {
            return Err(Error::InvalidInput(format!(
                "kappa_bar: `{other}` is not one of -inf, 0, 1, 2, unknown"
            )))
        }
    };
    Ok(ResolvedCurve {
        degree: desc.degree,
        cusps,
        stab_dim: desc.stab_dim,
        kappa_bar,
        pencil: desc.pencil,
    })
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Format {
    Human,
    Machine,
}

struct Flags {
    format: Format,
    d_max: Option<u64>,
    workers: usize,
    assume_stab0: bool,
    dot: bool,
    surgery: Vec<String>,
    brieskorn: Option<u64>,
    positional: Vec<String>,
}

fn parse_flags(args: &[String]) -> Result<Flags> {
    let mut flags = Flags {
        format: Format::Human,
        d_max: None,
        workers: 1,
        assume_stab0: false,
        dot: false,
        surgery: Vec::new(),
        brieskorn: None,
        positional: Vec::new(),
    };
    let mut it = args.iter().peekable();
    while let Some(arg) = it.next() {
        let (name, inline) = match arg.split_once('=') {
            Some((n, v)) => (n, Some(v.to_string())),
            None => (arg.as_str(), None),
        };
        let value = |it: &mut std::iter::Peekable<std::slice::Iter<String>>| -> Result<String> {
            if let Some(v) = &inline {
                return Ok(v.clone());
            }
            it.next()
                .cloned()
                .ok_or_else(|| Error::InvalidInput(format!("flag {name} needs a value")))
        };
        match name {
            "--format" => {
                flags.format = match value(&mut it)?.as_str() {
                    "human" => Format::Human,
                    "machine" => Format::Machine,
                    other => {
                        return Err(Error::InvalidInput(format!(
                            "--format: `{other}` is not `human` or `machine`"
                        )))
                    }
                }
            }
            "--d-max" => {
                flags.d_max = Some(value(&mut it)?.parse().map_err(|_| {
                    Error::InvalidInput("--d-max: expected an integer".into())
                })?)
            }
            "--workers" => {
                flags.workers = value(&mut it)?.parse().map_err(|_| {
                    Error::InvalidInput("--workers: expected an integer".into())
                })?
            }
            "--assume-stab0" => flags.assume_stab0 = true,
            "--dot" => flags.dot = true,
            "--surgery" => flags.surgery.push(value(&mut it)?),
            "--brieskorn" => {
                flags.brieskorn = Some(value(&mut it)?.parse().map_err(|_| {
                    Error::InvalidInput("--brieskorn: expected an integer".into())
                })?)
            }
            _ if name.starts_with("--") => {
                return Err(Error::InvalidInput(format!("unknown flag {name}")))
            }
            _ => flags.positional.push(arg.clone()),
        }
    }
    Ok(flags)
}

/// `d:p,q[;p,q...]` - a surgery manifold `S^3_{-d}(K)` with `K` the iterated
/// torus knot of the listed Newton pairs.
fn parse_surgery_spec(spec: &str) -> Result<(u64, BranchType)> {
    let (d, rest) = spec.split_once(':').ok_or_else(|| {
        Error::InvalidInput(format!("surgery spec `{spec}`: expected d:p,q[;p,q...]"))
    })?;
    let d: u64 = d
        .parse()
        .map_err(|_| Error::InvalidInput(format!("surgery spec `{spec}`: bad degree")))?;
    let mut pairs = Vec::new();
    for part in rest.split(';') {
        let (p, q) = part.split_once(',').ok_or_else(|| {
            Error::InvalidInput(format!("surgery spec `{spec}`: `{part}` is not p,q"))
        })?;
        let p = p.trim().parse().map_err(|_| {
            Error::InvalidInput(format!("surgery spec `{spec}`: bad integer in `{part}`"))
        })?;
        let q = q.trim().parse().map_err(|_| {
            Error::InvalidInput(format!("surgery spec `{spec}`: bad integer in `{part}`"))
        })?;
        pairs.push((p, q));
    }
    Ok((d, branch_from_newton_pairs(&pairs)?))
}

const USAGE: &str = "usage: cuspidal <command> [flags] [descriptor]

commands:
  branch-invariants <descriptor>   semigroup, multiplicity sequence, tau^es,
                                   Mbar and characteristic polynomial per cusp
  curve-check <descriptor>         genus, expected/virtual dimension, the
                                   Orevkov and non-negativity gates
  dp-check <descriptor>            semigroup distribution property (gate)
  sw <descriptor>                  Seiberg-Witten invariant by both routes
  spectrum-check <descriptor>      spectrum semicontinuity per cusp (gate)
  graded-root <source>             tau and the graded root, ASCII (+ --dot)
  compare-roots <sources>          grading-preserving isomorphism (gate)
  search                           one-Puiseux-pair enumeration to --d-max
  pipeline <descriptor>            all filters on a unicuspidal candidate (gate)

sources for graded-root / compare-roots:
  --surgery d:p,q[;p,q...]         S^3_{-d}(K), K from Newton pairs
  --brieskorn d                    Sigma(d, d, d+1)
  (graded-root also accepts a descriptor for its unique cusp)

flags:
  --format=human|machine           report format (default human)
  --d-max=N --workers=K            search bounds
  --assume-stab0                   permit defaulting an unresolved stabilizer
  --dot                            also emit the root as DOT graph text

descriptor example:
  '{\"degree\":17,\"cusps\":[{\"newton_pairs\":[[2,7],[4,17]]}]}'

exit codes: 0 computed / gate passed, 1 gate failed, 2 invalid input";

/// Entry point for the thin binary: returns the process exit code.
pub fn run(args: &[String]) -> i32 {
    match run_inner(args) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_INVALID
        }
    }
}

fn run_inner(args: &[String]) -> Result<i32> {
    let Some(command) = args.first() else {
        println!("{USAGE}");
        return Ok(EXIT_INVALID);
    };
    if command == "--help" || command == "-h" || command == "help" {
        println!("{USAGE}");
        return Ok(EXIT_OK);
    }
    let flags = parse_flags(&args[1..])?;
    match command.as_str() {
        "branch-invariants" => cmd_branch_invariants(&flags),
        "curve-check" => cmd_curve_check(&flags),
        "dp-check" => cmd_dp_check(&flags),
        "sw" => cmd_sw(&flags),
        "spectrum-check" => cmd_spectrum_check(&flags),
        "graded-root" => cmd_graded_root(&flags),
        "compare-roots" => cmd_compare_roots(&flags),
        "search" => cmd_search(&flags),
        "pipeline" => cmd_pipeline(&flags),
        other => Err(Error::InvalidInput(format!(
            "unknown command `{other}`; run with --help"
        ))),
    }
}

fn descriptor_arg(flags: &Flags) -> Result<&str> {
    match flags.positional.as_slice() {
        [one] => Ok(one),
        [] => Err(Error::InvalidInput("missing descriptor argument".into())),
        _ => Err(Error::InvalidInput("more than one descriptor argument".into())),
    }
}

fn pairs_json(pairs: &[(u64, u64)]) -> serde_json::Value {
    serde_json::json!(pairs.iter().map(|&(p, q)| vec![p, q]).collect::<Vec<_>>())
}

fn cmd_branch_invariants(flags: &Flags) -> Result<i32> {
    let curve = parse_descriptor(descriptor_arg(flags)?)?;
    let mut records = Vec::new();
    for (i, cusp) in curve.cusps.iter().enumerate() {
        let b = cusp.branch()?;
        let sg = semigroup_of(b)?;
        let md = multiplicity_data(b)?;
        let inv = LocalInvariants {
            tau_es: crate::localinv::tau_es(&md),
            mbar: crate::localinv::mbar(&md),
            delta: sg.delta(),
            mu: sg.mu(),
        };
        let alex = alexander_poly(&sg)?;
        if flags.format == Format::Human {
            println!("cusp {i}: newton pairs {:?}", b.newton_pairs());
            println!("  splice decorations a_k : {:?}", b.splice_decorations());
            println!("  semigroup generators   : {:?}", sg.generators());
            println!(
                "  delta = {}, mu = {}, conductor = {}",
                sg.delta(),
                sg.mu(),
                sg.conductor()
            );
            println!("  gaps                   : {:?}", sg.gap_set());
            println!(
                "  multiplicity sequence  : {}",
                md.runs()
                    .iter()
                    .map(|&(m, c)| format!("{m}x{c}"))
                    .collect::<Vec<_>>()
                    .join(", ")
            );
            println!(
                "  omega = {}, rho = {}, free points L = {}",
                md.omega(),
                md.rho(),
                md.free_points()
            );
            println!("  tau^es = {}, Mbar = {}", inv.tau_es, inv.mbar);
            println!("  Delta(t) = {}", alex.delta_poly);
        } else {
            records.push(serde_json::json!({
                "cusp": i,
                "newton_pairs": pairs_json(b.newton_pairs()),
                "splice_decorations": b.splice_decorations(),
                "generators": sg.generators(),
                "delta": sg.delta(),
                "mu": sg.mu(),
                "conductor": sg.conductor(),
                "gaps": sg.gap_set(),
                "multiplicity_sequence": md.runs(),
                "omega": md.omega(),
                "rho": md.rho(),
                "free_points": md.free_points(),
                "tau_es": inv.tau_es,
                "mbar": inv.mbar,
                "alexander_coeffs": alex.delta_poly.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            }));
        }
    }
    if flags.format == Format::Machine {
        let record = serde_json::json!({
            "report": "branch-invariants",
            "degree": curve.degree,
            "cusps": records,
        });
        println!("{record}");
    }
    Ok(EXIT_OK)
}

fn cmd_curve_check(flags: &Flags) -> Result<i32> {
    let curve = parse_descriptor(descriptor_arg(flags)?)?;
    let spec = curve.to_spec()?;
    let rep = dimensions_report(&spec, flags.assume_stab0)?;
    let hints = kappa_stab_hints(&spec);
    let si = superisolated_invariants(spec.degree)?;
    if flags.format == Format::Human {
        println!("curve of degree {} with {} cusp(s)", rep.degree, rep.nu);
        println!("  genus condition        : {}", yesno(rep.genus_ok));
        println!(
            "  stabilizer dim         : {} ({}{})",
            rep.stab.dim,
            if rep.stab.assumed { "ASSUMED; " } else { "" },
            rep.stab.source
        );
        println!("  sum tau^es = {}, sum Mbar = {}, sum L = {}", rep.sum_tau_es, rep.sum_mbar, rep.sum_free_points);
        println!("  expected dim           : {}", rep.expdim);
        println!("  virtual dim            : {}", rep.virtdim);
        println!("  Cbar^2                 : {}", rep.cbar_sq);
        println!("  chi(Theta<D>)          : {}", rep.chi_theta);
        println!("  identities consistent  : {}", yesno(rep.identities_ok));
        println!("  Orevkov (sum Mbar <= 3d-9): {}", yesno(rep.orevkov_ok));
        println!("  virtdim >= 0           : {}", yesno(rep.virtdim_ok));
        println!(
            "  superisolated: p_g = {}, K^2+# = {}, sigma(F) = {}",
            si.p_g, si.k2_plus_sharp, si.sigma_f
        );
        for n in &hints.notes {
            println!("  note: {n}");
        }
        if let Some(n) = &rep.coolidge_nagata_note {
            println!("  note: {n}");
        }
    } else {
        let record = serde_json::json!({
            "report": "curve-check",
            "degree": rep.degree,
            "nu": rep.nu,
            "genus_ok": rep.genus_ok,
            "stab_dim": rep.stab.dim,
            "stab_assumed": rep.stab.assumed,
            "stab_source": rep.stab.source,
            "sum_tau_es": rep.sum_tau_es,
            "sum_mbar": rep.sum_mbar,
            "sum_free_points": rep.sum_free_points,
            "expdim": rep.expdim,
            "virtdim": rep.virtdim,
            "cbar_sq": rep.cbar_sq,
            "chi_theta": rep.chi_theta,
            "identities_ok": rep.identities_ok,
            "orevkov_ok": rep.orevkov_ok,
            "virtdim_ok": rep.virtdim_ok,
            "p_g": si.p_g,
            "k2_plus_sharp": si.k2_plus_sharp,
            "sigma_f": si.sigma_f,
            "notes": hints.notes,
        });
        println!("{record}");
    }
    Ok(if rep.virtdim_ok { EXIT_OK } else { EXIT_GATE_FAILED })
}

fn cmd_dp_check(flags: &Flags) -> Result<i32> {
    let curve = parse_descriptor(descriptor_arg(flags)?)?;
    let cusp = curve.single_cusp()?;
    let sg = cusp.semigroup()?;
    let sw = sw_both_ways(&sg, curve.degree)?;
    let rep = distribution_report(&sg, curve.degree, &sw)?;
    if flags.format == Format::Human {
        println!(
            "distribution property of {:?} at degree {}",
            sg.generators(),
            curve.degree
        );
        if !rep.genus_ok {
            println!("  warning: genus condition fails; this is a probe, not a curve");
        }
        println!("  l   interval         members  expected");
        for row in rep.interval_table.iter().take(16) {
            let interval = if row.l == 0 {
                "{0}".to_string()
            } else {
                format!("({},{}]", (row.l - 1) * curve.degree, row.l * curve.degree)
            };
            println!(
                "  {:<3} {:<16} {:<8} {}",
                row.l, interval, row.count, row.expected
            );
        }
        if rep.interval_table.len() > 16 {
            println!("  ... ({} rows total)", rep.interval_table.len());
        }
        println!("  D(t) = {}", rep.d_poly);
        println!("  N(t) = {}", rep.n_poly);
        match (&rep.r_poly, rep.chain_ok, rep.sw_identity_ok) {
            (Some(r), Some(chain), Some(sw_identity)) => {
                println!("  R(t) = {r}");
                println!("  identity chain R = D(t^d)/(1-t^d) = N(t^d): {}", yesno(chain));
                println!("  R(1) = sw - (K^2+#)/8 - p_g: {}", yesno(sw_identity));
            }
            _ => println!("  R(t) and the identity chain: n/a without the genus condition"),
        }
        println!("  DP holds: {}", yesno(rep.dp_holds));
    } else {
        let record = serde_json::json!({
            "report": "dp-check",
            "degree": curve.degree,
            "generators": sg.generators(),
            "genus_ok": rep.genus_ok,
            "d_poly": rep.d_poly.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "n_poly": rep.n_poly.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "r_poly": rep.r_poly.as_ref().map(|r| r.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>()),
            "chain_ok": rep.chain_ok,
            "sw_identity_ok": rep.sw_identity_ok,
            "dp_holds": rep.dp_holds,
        });
        println!("{record}");
    }
    Ok(if rep.dp_holds { EXIT_OK } else { EXIT_GATE_FAILED })
}

fn cmd_sw(flags: &Flags) -> Result<i32> {
    let curve = parse_descriptor(descriptor_arg(flags)?)?;
    let cusp = curve.single_cusp()?;
    let sg = cusp.semigroup()?;
    let rep = sw_both_ways(&sg, curve.degree)?;
    if flags.format == Format::Human {
        println!(
            "Seiberg-Witten invariant of S^3_{{-{}}}(K), K from {:?}",
            curve.degree,
            sg.generators()
        );
        println!("  torsion T            = {}", rep.torsion);
        println!("  Casson-Walker lambda = {}", rep.casson_walker);
        println!("  sw (surgery route)   = {}", rep.sw_surgery);
        println!("  sw (root route)      = {}", rep.sw_root);
        println!("  |H_1| = {}, routes agree: {}", rep.h1_order, yesno(rep.agree));
    } else {
        let record = serde_json::json!({
            "report": "sw",
            "degree": curve.degree,
            "generators": sg.generators(),
            "torsion": rep.torsion.to_string(),
            "casson_walker": rep.casson_walker.to_string(),
            "sw_surgery": rep.sw_surgery.to_string(),
            "sw_root": rep.sw_root.to_string(),
            "h1_order": rep.h1_order,
            "agree": rep.agree,
        });
        println!("{record}");
    }
    Ok(EXIT_OK)
}

fn cmd_spectrum_check(flags: &Flags) -> Result<i32> {
    let curve = parse_descriptor(descriptor_arg(flags)?)?;
    let mut all_pass = true;
    let mut records = Vec::new();
    for (i, cusp) in curve.cusps.iter().enumerate() {
        let b = cusp.branch()?;
        let rep = semicontinuity_check(b, curve.degree)?;
        all_pass &= rep.pass;
        if flags.format == Format::Human {
            let sp = spectrum(b);
            println!(
                "cusp {i}: spectrum has {} values; semicontinuity at d = {}",
                sp.len(),
                curve.degree
            );
            println!("  l   #(alpha < l/d)  bound  pass");
            for row in &rep.rows {
                println!(
                    "  {:<3} {:<15} {:<6} {}",
                    row.l,
                    row.count,
                    row.bound,
                    yesno(row.pass)
                );
            }
            println!("  overall: {}", yesno(rep.pass));
        } else {
            records.push(serde_json::json!({
                "cusp": i,
                "pass": rep.pass,
                "failing_l": rep.failing_ls(),
                "rows": rep.rows.iter().map(|r| serde_json::json!({
                    "l": r.l, "count": r.count, "bound": r.bound, "pass": r.pass,
                })).collect::<Vec<_>>(),
            }));
        }
    }
    if flags.format == Format::Machine {
        println!(
            "{}",
            serde_json::json!({
                "report": "spectrum-check",
                "degree": curve.degree,
                "pass": all_pass,
                "cusps": records,
            })
        );
    }
    Ok(if all_pass { EXIT_OK } else { EXIT_GATE_FAILED })
}

/// Sources a graded root from the flags: a surgery spec, a Brieskorn degree,
/// or a unicuspidal descriptor (surgery at its own degree).
fn roots_from_flags(flags: &Flags) -> Result<Vec<(String, TauFunction)>> {
    let mut out = Vec::new();
    for spec in &flags.surgery {
        let (d, branch) = parse_surgery_spec(spec)?;
        let sg = semigroup_of(&branch)?;
        out.push((
            format!("S^3_{{-{d}}}(K), K = {:?}", branch.newton_pairs()),
            tau_for_surgery(&sg, d)?,
        ));
    }
    if let Some(d) = flags.brieskorn {
        out.push((format!("Sigma({d},{d},{})", d + 1), tau_for_brieskorn(d)?));
    }
    for text in &flags.positional {
        let curve = parse_descriptor(text)?;
        let cusp = curve.single_cusp()?;
        let sg = cusp.semigroup()?;
        out.push((
            format!("S^3_{{-{}}}(K) from descriptor", curve.degree),
            tau_for_surgery(&sg, curve.degree)?,
        ));
    }
    Ok(out)
}

fn cmd_graded_root(flags: &Flags) -> Result<i32> {
    let sources = roots_from_flags(flags)?;
    if sources.is_empty() {
        return Err(Error::InvalidInput(
            "graded-root needs --surgery, --brieskorn or a descriptor".into(),
        ));
    }
    for (name, tau) in &sources {
        let root = root_from_tau(tau);
        if flags.format == Format::Human {
            println!("{name}");
            println!("  tau = {:?}", tau.values);
            print!("{}", render_ascii(&root));
            if flags.dot {
                print!("{}", render_dot(&root));
            }
        } else {
            let record = serde_json::json!({
                "report": "graded-root",
                "manifold": name,
                "tau": tau.values,
                "level_counts": root.level_counts(),
                "stem_top": root.stem_top(),
            });
            println!("{record}");
            if flags.dot {
                println!("{}", serde_json::json!({"dot": render_dot(&root)}));
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_compare_roots(flags: &Flags) -> Result<i32> {
    let sources = roots_from_flags(flags)?;
    if sources.len() != 2 {
        return Err(Error::InvalidInput(format!(
            "compare-roots needs exactly two sources, got {}",
            sources.len()
        )));
    }
    let ra = root_from_tau(&sources[0].1);
    let rb = root_from_tau(&sources[1].1);
    let iso = roots_isomorphic(&ra, &rb);
    if flags.format == Format::Human {
        println!("A: {}", sources[0].0);
        println!("   tau = {:?}", sources[0].1.values);
        println!("B: {}", sources[1].0);
        println!("   tau = {:?}", sources[1].1.values);
        println!("graded roots isomorphic: {}", yesno(iso));
    } else {
        let record = serde_json::json!({
            "report": "compare-roots",
            "a": sources[0].0,
            "b": sources[1].0,
            "isomorphic": iso,
        });
        println!("{record}");
    }
    Ok(if iso { EXIT_OK } else { EXIT_GATE_FAILED })
}

fn cmd_search(flags: &Flags) -> Result<i32> {
    let d_max = flags
        .d_max
        .ok_or_else(|| Error::InvalidInput("search needs --d-max".into()))?;
    let verdicts = enumerate_one_pair_parallel(d_max, flags.workers)?;
    let mut unlisted_dp = Vec::new();
    if flags.format == Format::Human {
        println!("one-Puiseux-pair candidates with (a-1)(b-1) = (d-1)(d-2), 3 <= d <= {d_max}");
        println!("  d    (a,b)        genus  dp     semicont  virtdim  conjA  tag");
        for v in &verdicts {
            let (a, b) = v.newton_pairs[0];
            println!(
                "  {:<4} ({},{}){}  {:<6} {:<6} {:<9} {:<8} {:<6} {}",
                v.degree,
                a,
                b,
                " ".repeat(8usize.saturating_sub(format!("({a},{b})").len())),
                yesno(v.filters.genus),
                yesno(v.filters.dp),
                yesno(v.filters.semicontinuity),
                yesno(v.filters.virtdim_nonneg),
                yesno(v.filters.conj_a),
                v.tag
            );
            if v.filters.dp && v.tag == crate::search::Classification::Unlisted {
                unlisted_dp.push((v.degree, a, b));
            }
        }
        let passing: Vec<String> = verdicts
            .iter()
            .filter(|v| v.filters.dp)
            .map(|v| format!("({},{},{})", v.degree, v.newton_pairs[0].0, v.newton_pairs[0].1))
            .collect();
        println!("DP-passing: {}", passing.join(" "));
        if verdicts.iter().any(|v| v.stab_assumed) {
            println!("(virtdim column: stabilizer assumed 0 where no declaration or hint applied)");
        }
        if unlisted_dp.is_empty() {
            println!("no DP-passing triple outside the known families");
        } else {
            println!("*** ATTENTION: DP-passing triples outside the known families: {unlisted_dp:?}");
        }
    } else {
        for v in &verdicts {
            if v.filters.dp && v.tag == crate::search::Classification::Unlisted {
                unlisted_dp.push((v.degree, v.newton_pairs[0].0, v.newton_pairs[0].1));
            }
        }
        let record = serde_json::json!({
            "report": "search",
            "d_max": d_max,
            "verdicts": verdicts.iter().map(|v| serde_json::json!({
                "degree": v.degree,
                "newton_pairs": pairs_json(&v.newton_pairs),
                "genus": v.filters.genus,
                "dp": v.filters.dp,
                "semicontinuity": v.filters.semicontinuity,
                "semicontinuity_failures": v.filters.semicontinuity_failures,
                "virtdim_nonneg": v.filters.virtdim_nonneg,
                "conj_a": v.filters.conj_a,
                "tag": v.tag.to_string(),
                "stab_assumed": v.stab_assumed,
            })).collect::<Vec<_>>(),
            "unlisted_dp_passing": unlisted_dp,
        });
        println!("{record}");
    }
    Ok(EXIT_OK)
}

fn cmd_pipeline(flags: &Flags) -> Result<i32> {
    let curve = parse_descriptor(descriptor_arg(flags)?)?;
    let spec = curve.to_spec()?;
    let v = crate::search::candidate_pipeline(&spec)?;
    if flags.format == Format::Human {
        println!(
            "candidate: degree {} with Newton pairs {:?}",
            v.degree, v.newton_pairs
        );
        println!("  genus condition    : {}", yesno(v.filters.genus));
        println!("  distribution (DP)  : {}", yesno(v.filters.dp));
        if v.filters.semicontinuity {
            println!("  semicontinuity     : yes");
        } else {
            println!(
                "  semicontinuity     : no (fails at l = {:?})",
                v.filters.semicontinuity_failures
            );
        }
        println!(
            "  virtdim >= 0       : {}{}",
            yesno(v.filters.virtdim_nonneg),
            if v.stab_assumed { " (stabilizer assumed 0)" } else { "" }
        );
        println!("  coefficient gate   : {}", yesno(v.filters.conj_a));
        println!("  classification     : case {}", v.tag);
        println!("  verdict            : {}", if v.filters.all_pass() {
            "passes every necessary condition"
        } else {
            "refuted"
        });
    } else {
        let record = serde_json::json!({
            "report": "pipeline",
            "degree": v.degree,
            "newton_pairs": pairs_json(&v.newton_pairs),
            "genus": v.filters.genus,
            "dp": v.filters.dp,
            "semicontinuity": v.filters.semicontinuity,
            "semicontinuity_failures": v.filters.semicontinuity_failures,
            "virtdim_nonneg": v.filters.virtdim_nonneg,
            "conj_a": v.filters.conj_a,
            "tag": v.tag.to_string(),
            "stab_assumed": v.stab_assumed,
        });
        println!("{record}");
    }
    Ok(if v.filters.all_pass() { EXIT_OK } else { EXIT_GATE_FAILED })
}

fn yesno(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Level-aligned ASCII rendering: one text row per level from the stem down,
/// scaffold rows between, leaves spread left to right.
pub fn render_ascii(root: &GradedRoot) -> String {
    let min = root.min_chi();
    let top = root.stem_top();
    // x position per vertex: leaves at multiples of 4 in canonical child
    // order, inner vertices centered over their children
    let mut x: BTreeMap<usize, i64> = BTreeMap::new();
    let root_idx = root.vertices_at(top)[0];
    let mut next_leaf = 0i64;
    assign_x(root, root_idx, &mut x, &mut next_leaf);
    let width = (next_leaf.max(1) * 4) as usize + 2;

    let mut out = String::new();
    for n in (min..=top).rev() {
        let mut vrow = vec![b' '; width];
        for &v in root.vertices_at(n) {
            vrow[x[&v] as usize] = b'o';
        }
        let mut line = format!("{n:>5} | ");
        line.push_str(std::str::from_utf8(&vrow).unwrap().trim_end());
        out.push_str(line.trim_end());
        out.push('\n');
        if n > min {
            let mut erow = vec![b' '; width];
            for &child in root.vertices_at(n - 1) {
                let Some(parent) = root.vertices()[child].parent else { continue };
                let xc = x[&child];
                let xp = x[&parent];
                if xc == xp {
                    erow[xc as usize] = b'|';
                } else if xc < xp {
                    erow[(xp - 1) as usize] = b'/';
                    for c in (xc + 1)..(xp - 1) {
                        erow[c as usize] = b'_';
                    }
                } else {
                    erow[(xp + 1) as usize] = b'\\';
                    for c in (xp + 2)..xc {
                        erow[c as usize] = b'_';
                    }
                }
            }
            let line = format!("      | {}", std::str::from_utf8(&erow).unwrap());
            out.push_str(line.trim_end());
            out.push('\n');
        }
    }
    out.push_str("      (single chain continues upward)\n");
    out
}

fn assign_x(root: &GradedRoot, v: usize, x: &mut BTreeMap<usize, i64>, next_leaf: &mut i64) -> i64 {
    let mut children = root.children(v);
    children.sort_unstable();
    if children.is_empty() {
        let pos = *next_leaf * 4;
        *next_leaf += 1;
        x.insert(v, pos);
        return pos;
    }
    let positions: Vec<i64> = children
        .iter()
        .map(|&c| assign_x(root, c, x, next_leaf))
        .collect();
    let pos = (positions.iter().sum::<i64>()) / positions.len() as i64;
    x.insert(v, pos);
    pos
}

/// Graph-description text: one node per vertex with its level as attribute,
/// one edge line per parent link.
pub fn render_dot(root: &GradedRoot) -> String {
    let mut out = String::from("graph graded_root {\n  rankdir=BT;\n");
    for (i, v) in root.vertices().iter().enumerate() {
        out.push_str(&format!("  v{i} [label=\"{}\", chi={}];\n", v.chi, v.chi));
    }
    for (i, v) in root.vertices().iter().enumerate() {
        if let Some(p) = v.parent {
            out.push_str(&format!("  v{i} -- v{p};\n"));
        }
    }
    out.push_str(&format!(
        "  // single infinite chain continues above chi = {}\n}}\n",
        root.stem_top()
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> i32 {
        let owned: Vec<String> = args.iter().map(|s| s.to_string()).collect();
        run(&owned)
    }

    #[test]
    fn dp_check_exit_codes() {
        assert_eq!(
            run_args(&[
                "dp-check",
                r#"{"degree":17,"cusps":[{"newton_pairs":[[2,7],[4,17]]}]}"#
            ]),
            EXIT_OK
        );
        assert_eq!(
            run_args(&[
                "dp-check",
                r#"{"degree":5,"cusps":[{"newton_pairs":[[3,7]]}]}"#
            ]),
            EXIT_GATE_FAILED
        );
    }

    #[test]
    fn pipeline_exit_code_degree17() {
        assert_eq!(
            run_args(&[
                "pipeline",
                r#"{"degree":17,"cusps":[{"newton_pairs":[[2,7],[4,17]]}]}"#
            ]),
            EXIT_GATE_FAILED
        );
    }

    #[test]
    fn compare_roots_examples() {
        assert_eq!(
            run_args(&["compare-roots", "--surgery", "5:2,13", "--brieskorn", "5"]),
            EXIT_OK
        );
        assert_eq!(
            run_args(&["compare-roots", "--surgery", "5:3,7", "--brieskorn", "5"]),
            EXIT_GATE_FAILED
        );
    }

    #[test]
    fn malformed_descriptor_is_invalid_input() {
        assert_eq!(run_args(&["dp-check", r#"{"degree":17}"#]), EXIT_INVALID);
        assert_eq!(
            run_args(&[
                "dp-check",
                r#"{"degree":17,"cusps":[{"newton_pairs":[[2,7]],"semigroup_generators":[4]}]}"#
            ]),
            EXIT_INVALID
        );
        assert_eq!(run_args(&["frobnicate"]), EXIT_INVALID);
    }

    #[test]
    fn generator_only_cusp_rejected_for_spectrum() {
        assert_eq!(
            run_args(&[
                "spectrum-check",
                r#"{"degree":17,"cusps":[{"semigroup_generators":[8,28,73]}]}"#
            ]),
            EXIT_INVALID
        );
        // but accepted where only the semigroup is needed
        assert_eq!(
            run_args(&[
                "dp-check",
                r#"{"degree":17,"cusps":[{"semigroup_generators":[8,28,73]}]}"#
            ]),
            EXIT_OK
        );
    }

    #[test]
    fn ascii_rendering_shape() {
        let tau = TauFunction::new(vec![0, 1, -5, -2, -5, 1, 0]).unwrap();
        let root = root_from_tau(&tau);
        let art = render_ascii(&root);
        // seven levels plus six scaffold rows plus the stem note
        assert_eq!(art.lines().count(), 14);
        let level0 = art.lines().find(|l| l.starts_with("    0 |")).unwrap();
        assert_eq!(level0.matches('o').count(), 3);
        let level_minus5 = art.lines().find(|l| l.starts_with("   -5 |")).unwrap();
        assert_eq!(level_minus5.matches('o').count(), 2);
    }

    #[test]
    fn dot_rendering_lists_all_vertices() {
        let tau = TauFunction::new(vec![0, 1, -5, -2, -5, 1, 0]).unwrap();
        let root = root_from_tau(&tau);
        let dot = render_dot(&root);
        let nodes = dot.lines().filter(|l| l.contains("[label=")).count();
        assert_eq!(nodes, root.vertices().len());
        let edges = dot.lines().filter(|l| l.contains(" -- ")).count();
        assert_eq!(edges, root.vertices().len() - 1);
    }
}
