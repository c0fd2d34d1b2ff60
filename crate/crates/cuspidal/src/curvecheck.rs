//! Global invariants of a rational cuspidal curve of degree `d`: the
//! expected/virtual dimension bookkeeping with its equivalent expressions,
//! the Orevkov inequality, the coefficient profile gate, the
//! superisolated smoothing invariants, and the stabilizer / log-Kodaira
//! hint rules.

use crate::branchdata::{multiplicity_data, semigroup_of, BranchType};
use crate::error::{Error, Result};
use crate::localinv::{mbar, tau_es};
use crate::numerics::{Int, IntPoly};

/// Logarithmic Kodaira dimension of the complement.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KappaBar {
    MinusInf,
    Zero,
    One,
    Two,
}

impl std::fmt::Display for KappaBar {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            KappaBar::MinusInf => write!(f, "-inf"),
            KappaBar::Zero => write!(f, "0"),
            KappaBar::One => write!(f, "1"),
            KappaBar::Two => write!(f, "2"),
        }
    }
}

/// A degree together with the topological types of its cusps and optional
/// stabilizer / Kodaira-dimension hints. The global object every conjecture
/// gate consumes.
#[derive(Clone, Debug)]
pub struct CurveSpec {
    pub degree: u64,
    pub cusps: Vec<BranchType>,
    /// Declared stabilizer dimension in `0..=6`, if known.
    pub stab_dim: Option<u8>,
    pub kappa_bar: Option<KappaBar>,
    /// Declared pencil type `(d, a)` when the curve is a generic member of
    /// `y^d + lambda z^a x^{d-a}`.
    pub pencil: Option<(u64, u64)>,
}

impl CurveSpec {
    pub fn new(degree: u64, cusps: Vec<BranchType>) -> Result<CurveSpec> {
        if degree < 3 {
            return Err(Error::InvalidInput(format!("degree {degree} < 3")));
        }
        if cusps.is_empty() {
            return Err(Error::InvalidInput("at least one cusp required".into()));
        }
        Ok(CurveSpec { degree, cusps, stab_dim: None, kappa_bar: None, pencil: None })
    }

    pub fn with_stab_dim(mut self, stab: u8) -> Self {
        self.stab_dim = Some(stab);
        self
    }

    pub fn with_pencil(mut self, d: u64, a: u64) -> Self {
        self.pencil = Some((d, a));
        self
    }

    pub fn with_kappa_bar(mut self, k: KappaBar) -> Self {
        self.kappa_bar = Some(k);
        self
    }

    /// Number of cusps.
    pub fn nu(&self) -> usize {
        self.cusps.len()
    }
}

/// Genus condition for a rational cuspidal curve:
/// `(d-1)(d-2) = sum over cusps of 2 delta`. The left invariant is computed
/// both from semigroup gap counts and from the multiplicity sequences and
/// the two are required to agree.
pub fn genus_check(c: &CurveSpec) -> Result<bool> {
    let mut from_semigroups = 0u64;
    let mut from_multiplicities = 0u64;
    for b in &c.cusps {
        from_semigroups += 2 * semigroup_of(b)?.delta();
        from_multiplicities += multiplicity_data(b)?.sum_m_m_minus_1();
    }
    if from_semigroups != from_multiplicities {
        return Err(Error::Inconsistency(format!(
            "2 delta from gaps is {from_semigroups} but sum m(m-1) is {from_multiplicities}"
        )));
    }
    Ok(from_semigroups == (c.degree - 1) * (c.degree - 2))
}

/// How the stabilizer dimension entering a report was obtained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabResolution {
    pub dim: u8,
    /// True when the value is the default 0 rather than declared or derived.
    pub assumed: bool,
    pub source: String,
}

/// Global dimension report. All virtual-dimension expressions are computed
/// independently; `identities_ok` records whether they agree (they do
/// exactly when the genus condition holds).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlobalReport {
    pub degree: u64,
    pub nu: usize,
    pub expdim: i64,
    pub virtdim: i64,
    pub cbar_sq: i64,
    pub chi_theta: i64,
    pub sum_tau_es: u64,
    pub sum_mbar: u64,
    pub sum_free_points: u64,
    pub stab: StabResolution,
    pub genus_ok: bool,
    pub orevkov_ok: bool,
    pub virtdim_ok: bool,
    pub identities_ok: bool,
    /// Set when `chi_theta = 0` and the log-Kodaira dimension is known to be
    /// 2: the curve is then transformable to a line by a Cremona
    /// transformation.
    pub coolidge_nagata_note: Option<String>,
}

/// Resolve the stabilizer dimension: a declared value wins, then the hint
/// rules; `allow_default` falls back to 0 with the `assumed` flag set.
pub fn resolve_stab(c: &CurveSpec, allow_default: bool) -> Result<StabResolution> {
    if let Some(dim) = c.stab_dim {
        if dim > 6 {
            return Err(Error::InvalidInput(format!("stab_dim {dim} > 6")));
        }
        return Ok(StabResolution { dim, assumed: false, source: "declared".into() });
    }
    let hints = kappa_stab_hints(c);
    if let Some(dim) = hints.stab_dim {
        return Ok(StabResolution {
            dim,
            assumed: false,
            source: hints.notes.join("; "),
        });
    }
    if allow_default {
        Ok(StabResolution {
            dim: 0,
            assumed: true,
            source: "assumed 0 (no hint resolves the stabilizer)".into(),
        })
    } else {
        Err(Error::StabUnknown(
            "no declared stabilizer dimension and no hint rule applies".into(),
        ))
    }
}

/// Compute the dimension report.
///
/// The four expressions for the virtual dimension are evaluated separately:
/// from the expected dimension, from `3d - 9 - sum Mbar`, from
/// `Cbar^2 - 7 + sum L`, and from `-chi + stab`; `identities_ok` asserts
/// their agreement. `orevkov_ok` is the inequality `sum Mbar <= 3d - 9`
/// (no stabilizer term), `virtdim_ok` is `virtdim >= 0`.
pub fn dimensions_report(c: &CurveSpec, allow_default_stab: bool) -> Result<GlobalReport> {
    let stab = resolve_stab(c, allow_default_stab)?;
    let genus_ok = genus_check(c)?;
    let d = c.degree as i64;
    let s = stab.dim as i64;

    let mut sum_tau = 0u64;
    let mut sum_mbar = 0u64;
    let mut sum_ell = 0u64;
    let mut sum_m_sq = 0i64;
    for b in &c.cusps {
        let md = multiplicity_data(b)?;
        sum_tau += tau_es(&md);
        sum_mbar += mbar(&md);
        sum_ell += md.free_points();
        for &(m, cnt) in md.runs() {
            sum_m_sq += (m * m * cnt) as i64;
        }
    }

    let expdim = d * (d + 3) / 2 - sum_tau as i64;
    let virt_expected = expdim - (8 - s);
    let virt_mbar = 3 * d - 9 - sum_mbar as i64 + s;
    let cbar_sq = d * d - sum_m_sq;
    let virt_cbar = cbar_sq - 7 + sum_ell as i64 + s;
    let chi_theta = -3 * (d - 3) + sum_mbar as i64;
    let virt_chi = -chi_theta + s;

    let identities_ok =
        virt_expected == virt_mbar && virt_mbar == virt_cbar && virt_cbar == virt_chi;
    let orevkov_ok = sum_mbar as i64 <= 3 * d - 9;
    let virtdim = virt_expected;
    let virtdim_ok = virtdim >= 0;

    let kappa = c.kappa_bar.or(match kappa_stab_hints(c).kappa {
        KappaEstimate::Known(k) => Some(k),
        _ => None,
    });
    let coolidge_nagata_note = if chi_theta == 0 && kappa == Some(KappaBar::Two) {
        Some(
            "chi(Theta<D>) = 0 with log-Kodaira dimension 2: the curve is transformable \
             to a line by a Cremona transformation"
                .into(),
        )
    } else {
        None
    };

    Ok(GlobalReport {
        degree: c.degree,
        nu: c.nu(),
        expdim,
        virtdim,
        cbar_sq,
        chi_theta,
        sum_tau_es: sum_tau,
        sum_mbar,
        sum_free_points: sum_ell,
        stab,
        genus_ok,
        orevkov_ok,
        virtdim_ok,
        identities_ok,
        coolidge_nagata_note,
    })
}

/// Per-degree coefficient gate: `n_l = c_l - (l+1)(l+2)/2` for
/// `l = 0..d-3`, built from the product of the characteristic polynomials
/// of all cusps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjAReport {
    pub c: Vec<i64>,
    pub n: Vec<i64>,
    /// True when every `n_l <= 0`.
    pub pass: bool,
}

/// Coefficient profile gate (all `n_l <= 0`). Requires the genus condition; `c_l` is read off the
/// quotient polynomial of the product characteristic polynomial, and for a
/// single cusp the member-counting form is asserted to agree. The symmetry
/// `n_l = n_{d-3-l}` and `n_0 = 0` are asserted.
pub fn conjecture_a_check(c: &CurveSpec) -> Result<ConjAReport> {
    if !genus_check(c)? {
        return Err(Error::GenusError(format!(
            "sum of Milnor numbers differs from (d-1)(d-2) = {}",
            (c.degree - 1) * (c.degree - 2)
        )));
    }
    let d = c.degree;
    let mut product = IntPoly::one();
    let mut delta_total = 0u64;
    let mut single_sg = None;
    for b in &c.cusps {
        let sg = semigroup_of(b)?;
        delta_total += sg.delta();
        let a = crate::localinv::alexander_poly(&sg)?;
        product = &product * &a.delta_poly;
        single_sg = Some(sg);
    }
    let t_minus_one = IntPoly::from_i64(&[-1, 1]);
    let numerator = &(&product - &IntPoly::one())
        - &(&t_minus_one * &IntPoly::constant(Int::from(delta_total)));
    let q = numerator
        .exact_div(&(&t_minus_one * &t_minus_one))
        .map_err(|e| Error::Inconsistency(format!("product quotient polynomial: {e}")))?;

    let mut cs = Vec::new();
    let mut ns = Vec::new();
    for l in 0..=(d - 3) {
        let idx = ((d - 3 - l) * d) as usize;
        let cl_int = q.coeff(idx);
        let cl: i64 = i64::try_from(&cl_int)
            .map_err(|_| Error::Inconsistency(format!("c_{l} out of 64-bit range")))?;
        let nl = cl - ((l + 1) * (l + 2) / 2) as i64;
        cs.push(cl);
        ns.push(nl);
    }
    if c.nu() == 1 {
        let sg = single_sg.expect("one cusp");
        for (l, &cl) in cs.iter().enumerate() {
            let counted = sg.count_upto(l as u64 * d) as i64;
            if counted != cl {
                return Err(Error::Inconsistency(format!(
                    "c_{l}: counting form {counted} vs product form {cl}"
                )));
            }
        }
    }
    let m = ns.len();
    for l in 0..m {
        if ns[l] != ns[m - 1 - l] {
            return Err(Error::Inconsistency(format!(
                "symmetry n_{l} = n_{} fails: {} vs {}",
                m - 1 - l,
                ns[l],
                ns[m - 1 - l]
            )));
        }
    }
    if ns[0] != 0 {
        return Err(Error::Inconsistency(format!("n_0 = {} != 0", ns[0])));
    }
    let pass = ns.iter().all(|&n| n <= 0);
    Ok(ConjAReport { c: cs, n: ns, pass })
}

/// Smoothing invariants of the superisolated singularity attached to a
/// degree-`d` curve; they depend only on `d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuperisolatedInvariants {
    /// Geometric genus `p_g = d(d-1)(d-2)/6`.
    pub p_g: i64,
    /// `K_Z^2 + # = 1 - d(d-2)^2`.
    pub k2_plus_sharp: i64,
    /// Milnor fiber signature, fixed by `8 p_g + sigma + (K^2 + #) = 0`.
    pub sigma_f: i64,
}

pub fn superisolated_invariants(d: u64) -> Result<SuperisolatedInvariants> {
    if d < 3 {
        return Err(Error::InvalidInput(format!("degree {d} < 3")));
    }
    let d = d as i64;
    let p_g = d * (d - 1) * (d - 2) / 6;
    let k2_plus_sharp = 1 - d * (d - 2) * (d - 2);
    let sigma_f = -8 * p_g - k2_plus_sharp;
    debug_assert_eq!(8 * p_g + sigma_f + k2_plus_sharp, 0);
    Ok(SuperisolatedInvariants { p_g, k2_plus_sharp, sigma_f })
}

/// Outcome of the hint rules for `kappa_bar`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KappaEstimate {
    Known(KappaBar),
    /// Exactly two cusps: 1 or 2, nothing sharper without more input.
    OneOrTwo,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabHints {
    pub kappa: KappaEstimate,
    pub stab_dim: Option<u8>,
    pub notes: Vec<String>,
}

/// Hint rules for the log-Kodaira dimension and the stabilizer:
///
/// - three or more cusps force `kappa_bar = 2`, and log-general curves have
///   zero-dimensional stabilizer;
/// - exactly two cusps force `kappa_bar` into `{1, 2}` (`0` never occurs);
/// - a declared pencil type `(d, a)` with `gcd(d, a) = 1` gives a
///   one-dimensional stabilizer, of AMS type when `a = d - 1` and of
///   Lin-Zaidenberg type otherwise;
/// - a declared `kappa_bar = 2` also gives stabilizer 0.
///
/// Nothing is ever guessed: with no applicable rule both fields stay unknown.
pub fn kappa_stab_hints(c: &CurveSpec) -> StabHints {
    let mut notes = Vec::new();
    let mut kappa = KappaEstimate::Unknown;
    let mut stab = None;

    if c.nu() >= 3 {
        kappa = KappaEstimate::Known(KappaBar::Two);
        stab = Some(0);
        notes.push(format!(
            "{} cusps: log-Kodaira dimension 2, hence stabilizer dimension 0",
            c.nu()
        ));
    } else if c.nu() == 2 {
        kappa = KappaEstimate::OneOrTwo;
        notes.push("two cusps: log-Kodaira dimension is 1 or 2".into());
    }

    if let Some(k) = c.kappa_bar {
        if k == KappaBar::Zero {
            notes.push("declared kappa_bar = 0: this value cannot occur for a rational cuspidal curve".into());
        }
        kappa = KappaEstimate::Known(k);
        if k == KappaBar::Two && stab.is_none() {
            stab = Some(0);
            notes.push("declared kappa_bar = 2: stabilizer dimension 0".into());
        }
    }

    if let Some((pd, a)) = c.pencil {
        if pd == c.degree && a >= 1 && a < pd && num_integer::gcd(pd, a) == 1 {
            stab = Some(1);
            // swapping the x and z coordinates maps a to d - a, so the
            // boundary exponents describe the same unicuspidal family
            let kind = if a == 1 || a == pd - 1 {
                kappa = KappaEstimate::Known(KappaBar::MinusInf);
                "Abhyankar-Moh-Suzuki type (kappa_bar = -inf)"
            } else {
                kappa = KappaEstimate::Known(KappaBar::One);
                "Lin-Zaidenberg type (kappa_bar = 1)"
            };
            notes.push(format!(
                "generic member of the pencil y^{pd} + lambda z^{a} x^{}: stabilizer dimension 1, {kind}",
                pd - a
            ));
        } else {
            notes.push(format!(
                "declared pencil ({pd}, {a}) is not admissible for degree {} and was ignored",
                c.degree
            ));
        }
    }

    StabHints { kappa, stab_dim: stab, notes }
}
