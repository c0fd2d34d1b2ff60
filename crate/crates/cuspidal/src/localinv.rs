//! Per-cusp invariants: the characteristic (Alexander) polynomial with its
//! gap and quotient polynomials, the coefficient profile `c_l`, the
//! deformation codimensions `tau^es` and `Mbar`, the singularity spectrum,
//! and the semicontinuity test against degree-`d` curves.

use num_traits::One;
use num_traits::Zero;

use crate::branchdata::{BranchType, MultiplicityData, Semigroup};
use crate::error::{Error, Result};
use crate::numerics::{rat_int, Int, IntPoly, Rat};

/// Characteristic polynomial data of one branch.
///
/// `delta_poly` is the characteristic polynomial `Delta(t)` of the local
/// knot, `gap_poly` is `P(t) = sum over gaps of t^k`, and `q_poly` is the
/// quotient `Q` in the expansion `Delta = 1 + (t-1) delta + (t-1)^2 Q(t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlexanderData {
    pub delta_poly: IntPoly,
    pub gap_poly: IntPoly,
    pub q_poly: IntPoly,
}

/// Build `Delta`, `P`, `Q` from the semigroup.
///
/// `Delta = (1-t) * (sum of t^k over members k < conductor) + t^conductor`,
/// the finite closed form of `(1-t) * L(t)` for the Poincare series `L`.
pub fn alexander_poly(sg: &Semigroup) -> Result<AlexanderData> {
    let c = sg.conductor() as usize;
    let mut lcoeffs = vec![Int::zero(); c.max(1)];
    for (k, coeff) in lcoeffs.iter_mut().enumerate().take(c) {
        if sg.contains(k as u64) {
            *coeff = Int::one();
        }
    }
    let l_trunc = IntPoly::from_coeffs(lcoeffs);
    let one_minus_t = IntPoly::from_i64(&[1, -1]);
    let delta_poly = &(&one_minus_t * &l_trunc) + &IntPoly::monomial(Int::one(), c);

    let mut pcoeffs = vec![Int::zero(); c.max(1)];
    for &g in sg.gap_set() {
        pcoeffs[g as usize] = Int::one();
    }
    let gap_poly = IntPoly::from_coeffs(pcoeffs);

    let t_minus_one = IntPoly::from_i64(&[-1, 1]);
    let numerator = &gap_poly - &IntPoly::constant(Int::from(sg.delta()));
    let q_poly = numerator
        .exact_div(&t_minus_one)
        .map_err(|e| Error::Inconsistency(format!("(P - delta)/(t - 1) not exact: {e}")))?;

    // Structural checks: degree 2 delta, Delta(1) = 1, and the quotient
    // expansion reconstructs Delta.
    if sg.delta() > 0 && delta_poly.degree() != Some(2 * sg.delta() as usize) {
        return Err(Error::Inconsistency("deg Delta != 2 delta".into()));
    }
    if !delta_poly.eval_one().is_one() {
        return Err(Error::Inconsistency("Delta(1) != 1".into()));
    }
    let sq = &t_minus_one * &t_minus_one;
    let recon = &(&IntPoly::one() + &(&t_minus_one * &IntPoly::constant(Int::from(sg.delta()))))
        + &(&sq * &q_poly);
    if recon != delta_poly {
        return Err(Error::Inconsistency(
            "1 + (t-1) delta + (t-1)^2 Q does not reconstruct Delta".into(),
        ));
    }
    Ok(AlexanderData { delta_poly, gap_poly, q_poly })
}

/// Coefficient profile `c_0..c_{d-3}` of one branch for a given degree `d`.
///
/// Computed by counting semigroup members: `c_l = #{k in G : k <= l d}`.
/// When the genus condition `2 delta = (d-1)(d-2)` holds, the quotient-
/// coefficient definition (`c_l` = coefficient of `t^{(d-3-l)d}` in `Q`)
/// is evaluated as well and the two are asserted equal; the two definitions
/// agree only under that condition.
pub fn c_profile(sg: &Semigroup, d: u64) -> Result<Vec<u64>> {
    if d < 3 {
        return Err(Error::InvalidInput(format!("degree {d} < 3")));
    }
    let counting: Vec<u64> = (0..=d - 3).map(|l| sg.count_upto(l * d)).collect();
    if sg.mu() == (d - 1) * (d - 2) {
        let q = alexander_poly(sg)?.q_poly;
        for l in 0..=(d - 3) {
            let idx = ((d - 3 - l) * d) as usize;
            if q.coeff(idx) != Int::from(counting[l as usize]) {
                return Err(Error::Inconsistency(format!(
                    "c_{l}: counting form {} vs Q-coefficient {}",
                    counting[l as usize],
                    q.coeff(idx)
                )));
            }
        }
    }
    Ok(counting)
}

/// Codimension of the equisingular stratum in the semiuniversal deformation:
/// `tau^es = sum m_i (m_i + 1) / 2 - L`. Both printed forms of the formula
/// are evaluated and must agree.
pub fn tau_es(md: &MultiplicityData) -> u64 {
    let ell = md.free_points();
    let form_a: u64 = md
        .runs()
        .iter()
        .map(|&(m, c)| (m - 1) * (m + 2) / 2 * c)
        .sum::<u64>()
        + md.omega()
        - 1;
    let form_b: u64 = md
        .runs()
        .iter()
        .map(|&(m, c)| m * (m + 1) / 2 * c)
        .sum::<u64>()
        - ell;
    assert_eq!(form_a, form_b, "the two printed forms of tau^es disagree");
    form_b
}

/// Parametric codimension `Mbar = sum m_i - L = tau^es - delta`.
pub fn mbar(md: &MultiplicityData) -> u64 {
    let form_a: u64 = md
        .runs()
        .iter()
        .map(|&(m, c)| (m - 1) * c)
        .sum::<u64>()
        + md.omega()
        - 1;
    let form_b = md.sum() - md.free_points();
    assert_eq!(form_a, form_b, "the two printed forms of Mbar disagree");
    form_b
}

/// Bundle of the numerical deformation invariants of one cusp.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalInvariants {
    pub tau_es: u64,
    pub mbar: u64,
    pub delta: u64,
    pub mu: u64,
}

/// Compute `tau^es`, `Mbar`, `delta`, `mu` for a branch, cross-checking
/// `Mbar = tau^es - delta` with `delta` derived independently from the
/// Newton pairs.
pub fn local_invariants(b: &BranchType) -> Result<LocalInvariants> {
    let md = crate::branchdata::multiplicity_data(b)?;
    let t = tau_es(&md);
    let m = mbar(&md);
    let delta = b.delta();
    if t != m + delta {
        return Err(Error::Inconsistency(format!(
            "tau^es = {t} but Mbar + delta = {}",
            m + delta
        )));
    }
    Ok(LocalInvariants { tau_es: t, mbar: m, delta, mu: 2 * delta })
}

/// Singularity spectrum restricted to `(0, 1)`: a sorted multiset of
/// `delta` exact rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spectrum {
    values: Vec<Rat>,
}

/// Spectrum of a branch from its Newton pairs.
///
/// For each pair index `k` the summand is the multiset
/// `(i/a_k + j/p_k + t) / (p_{k+1} ... p_g)` over `0 < i < a_k`,
/// `0 < j < p_k`, `i/a_k + j/p_k < 1`, `0 <= t < p_{k+1} ... p_g`.
pub fn spectrum(b: &BranchType) -> Spectrum {
    let e = b.cable_factors();
    let mut values = Vec::with_capacity(b.delta() as usize);
    for (k, (&(p, _), &a)) in b
        .newton_pairs()
        .iter()
        .zip(b.splice_decorations().iter())
        .enumerate()
    {
        let tail = e[k + 1];
        let tail_rat = rat_int(tail as i64);
        for i in 1..a {
            for j in 1..p {
                // i/a + j/p < 1  <=>  i*p + j*a < a*p
                if i * p + j * a >= a * p {
                    continue;
                }
                let base = Rat::new(Int::from(i * p + j * a), Int::from(a * p));
                for t in 0..tail {
                    values.push((&base + rat_int(t as i64)) / &tail_rat);
                }
            }
        }
    }
    values.sort();
    Spectrum { values }
}

impl Spectrum {
    pub fn values(&self) -> &[Rat] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Number of spectral values strictly below `bound` (exact comparison).
    pub fn count_below(&self, bound: &Rat) -> u64 {
        self.values.partition_point(|v| v < bound) as u64
    }
}

/// One row of the semicontinuity table: spectral count against the bound
/// `(l-2)(l-1)/2` for the interval ending at `l/d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemicontRow {
    pub l: u64,
    pub count: u64,
    pub bound: u64,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemicontinuityReport {
    pub rows: Vec<SemicontRow>,
    pub pass: bool,
}

impl SemicontinuityReport {
    pub fn failing_ls(&self) -> Vec<u64> {
        self.rows.iter().filter(|r| !r.pass).map(|r| r.l).collect()
    }
}

/// Semicontinuity of the spectrum against `x^d + y^d`:
/// `#{alpha in Sp : alpha < l/d} <= (l-2)(l-1)/2` for `l = 2..d-1`.
/// Spectral values exactly equal to `l/d` do not count (strict inequality).
pub fn semicontinuity_check(b: &BranchType, d: u64) -> Result<SemicontinuityReport> {
    if d < 3 {
        return Err(Error::InvalidInput(format!("degree {d} < 3")));
    }
    let sp = spectrum(b);
    let mut rows = Vec::new();
    let mut pass = true;
    for l in 2..d {
        let bound = (l - 2) * (l - 1) / 2;
        let cutoff = Rat::new(Int::from(l), Int::from(d));
        let count = sp.count_below(&cutoff);
        let ok = count <= bound;
        pass &= ok;
        rows.push(SemicontRow { l, count, bound, pass: ok });
    }
    Ok(SemicontinuityReport { rows, pass })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::branchdata::{branch_from_newton_pairs, multiplicity_data, semigroup_of};
    use crate::numerics::rat;
    use proptest::prelude::*;

    fn branch(pairs: &[(u64, u64)]) -> BranchType {
        branch_from_newton_pairs(pairs).unwrap()
    }

    fn sg(pairs: &[(u64, u64)]) -> Semigroup {
        semigroup_of(&branch(pairs)).unwrap()
    }

    #[test]
    fn alexander_ordinary_cusp() {
        let a = alexander_poly(&sg(&[(2, 3)])).unwrap();
        assert_eq!(a.delta_poly, IntPoly::from_i64(&[1, -1, 1]));
        assert_eq!(a.gap_poly, IntPoly::from_i64(&[0, 1]));
        assert_eq!(a.q_poly, IntPoly::one());
    }

    /// Oracle: for a single pair (a, b) the characteristic polynomial is
    /// (t^{ab} - 1)(t - 1) / ((t^a - 1)(t^b - 1)), computed here by exact
    /// polynomial division, independently of the semigroup route.
    fn torus_knot_delta(a: u64, b: u64) -> IntPoly {
        let tp = |k: u64| &IntPoly::monomial(Int::one(), k as usize) - &IntPoly::one();
        let num = &tp(a * b) * &tp(1);
        num.exact_div(&tp(a)).unwrap().exact_div(&tp(b)).unwrap()
    }

    #[test]
    fn alexander_single_pair_product_formula() {
        for &(a, b) in &[(2, 3), (2, 7), (3, 7), (4, 5), (2, 13), (3, 22), (6, 43)] {
            let from_sg = alexander_poly(&sg(&[(a, b)])).unwrap().delta_poly;
            assert_eq!(from_sg, torus_knot_delta(a, b), "pair ({a},{b})");
        }
    }

    #[test]
    fn alexander_3_7_degree() {
        let a = alexander_poly(&sg(&[(3, 7)])).unwrap();
        assert_eq!(a.delta_poly.degree(), Some(12));
        assert!(a.delta_poly.eval_one().is_one());
    }

    #[test]
    fn c_profile_examples() {
        // members of <2,13> up to 0, 5, 10: {0}, {0,2,4}, {0,...,10 even}
        assert_eq!(c_profile(&sg(&[(2, 13)]), 5).unwrap(), vec![1, 3, 6]);
        // members of <3,7>: {0,3} <= 5, {0,3,6,7,9,10} <= 10
        assert_eq!(c_profile(&sg(&[(3, 7)]), 5).unwrap(), vec![1, 2, 6]);
        assert_eq!(c_profile(&sg(&[(2, 3)]), 3).unwrap(), vec![1]);
    }

    #[test]
    fn tau_es_examples() {
        let md = multiplicity_data(&branch(&[(2, 3)])).unwrap();
        assert_eq!(tau_es(&md), 2);
        let md17 = multiplicity_data(&branch(&[(2, 7), (4, 17)])).unwrap();
        assert_eq!(tau_es(&md17), 172 - md17.free_points());
    }

    #[test]
    fn mbar_examples() {
        let md = multiplicity_data(&branch(&[(2, 3)])).unwrap();
        assert_eq!(mbar(&md), 1);
        let md17 = multiplicity_data(&branch(&[(2, 7), (4, 17)])).unwrap();
        assert_eq!(mbar(&md17), 52 - md17.free_points());
        let md45 = multiplicity_data(&branch(&[(4, 5)])).unwrap();
        assert_eq!(mbar(&md45), 8 - md45.free_points());
    }

    #[test]
    fn spectrum_ordinary_cusp() {
        let sp = spectrum(&branch(&[(2, 3)]));
        assert_eq!(sp.values(), &[rat(5, 6)]);
    }

    #[test]
    fn spectrum_degree17_count() {
        let sp = spectrum(&branch(&[(2, 7), (4, 17)]));
        assert_eq!(sp.len() as u64, 120);
        assert_eq!(sp.count_below(&rat(12, 17)), 56);
    }

    #[test]
    fn semicontinuity_degree17_fails_at_12() {
        let rep = semicontinuity_check(&branch(&[(2, 7), (4, 17)]), 17).unwrap();
        assert!(!rep.pass);
        assert_eq!(rep.failing_ls(), vec![12]);
        let row = rep.rows.iter().find(|r| r.l == 12).unwrap();
        assert_eq!(row.count, 56);
        assert_eq!(row.bound, 55);
    }

    #[test]
    fn semicontinuity_small_passes() {
        assert!(semicontinuity_check(&branch(&[(2, 3)]), 3).unwrap().pass);
        assert!(semicontinuity_check(&branch(&[(4, 5)]), 5).unwrap().pass);
    }

    fn small_branch() -> impl Strategy<Value = BranchType> {
        proptest::collection::vec((2u64..=5, 1u64..=23), 1..=3).prop_filter_map(
            "admissible pairs",
            |mut pairs| {
                if pairs[0].1 <= pairs[0].0 {
                    pairs[0].1 += pairs[0].0 + 1;
                }
                branch_from_newton_pairs(&pairs).ok().filter(|b| b.milnor() <= 3000)
            },
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn alexander_invariants(b in small_branch()) {
            let sg = semigroup_of(&b).unwrap();
            let a = alexander_poly(&sg).unwrap();
            prop_assert_eq!(a.delta_poly.degree(), Some(2 * sg.delta() as usize));
            prop_assert!(a.delta_poly.eval_one().is_one());
        }

        #[test]
        fn spectrum_cardinality_and_range(b in small_branch()) {
            let sp = spectrum(&b);
            prop_assert_eq!(sp.len() as u64, b.delta());
            let zero = rat(0, 1);
            let one = rat(1, 1);
            prop_assert!(sp.values().iter().all(|v| *v > zero && *v < one));
        }

        #[test]
        fn tau_minus_delta_is_mbar(b in small_branch()) {
            let inv = local_invariants(&b).unwrap();
            prop_assert_eq!(inv.tau_es - inv.delta, inv.mbar);
        }
    }
}
