//! Topological type of one cusp: Newton pairs with derived splice
//! decorations, the value semigroup, and the multiplicity sequence of the
//! minimal embedded resolution with its inner/outer blow-up counts.

use num_integer::Integer;

use crate::error::{Error, Result};

/// Hard cap on the semigroup conductor, to keep membership sieves from
/// exhausting memory on absurd inputs. Everything in range for degree-scale
/// computations sits far below it.
const MAX_CONDUCTOR: u64 = 100_000_000;

/// Embedded topological type of a locally irreducible plane curve
/// singularity, encoded by its Newton pairs `(p_k, q_k)`.
///
/// The splice decorations `a_k` are derived on construction:
/// `a_1 = q_1`, `a_{k+1} = q_{k+1} + p_{k+1} p_k a_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BranchType {
    newton_pairs: Vec<(u64, u64)>,
    splice: Vec<u64>,
}

/// Validate Newton pairs and derive the splice decorations.
///
/// Admissibility: `gcd(p_k, q_k) = 1` and `p_k >= 2` for every `k`,
/// `q_k >= 1`, and `q_1 > p_1`. A single Puiseux pair `(a, b)` enters as the
/// one Newton pair `(p_1, q_1) = (a, b)`.
pub fn branch_from_newton_pairs(pairs: &[(u64, u64)]) -> Result<BranchType> {
    if pairs.is_empty() {
        return Err(Error::InvalidBranch("at least one Newton pair required".into()));
    }
    for (k, &(p, q)) in pairs.iter().enumerate() {
        if p < 2 {
            return Err(Error::InvalidBranch(format!("p_{} = {p} < 2", k + 1)));
        }
        if q < 1 {
            return Err(Error::InvalidBranch(format!("q_{} = 0", k + 1)));
        }
        if p.gcd(&q) != 1 {
            return Err(Error::InvalidBranch(format!(
                "gcd(p_{k1}, q_{k1}) = gcd({p}, {q}) > 1",
                k1 = k + 1
            )));
        }
    }
    if pairs[0].1 <= pairs[0].0 {
        return Err(Error::InvalidBranch(format!(
            "q_1 = {} must exceed p_1 = {}",
            pairs[0].1, pairs[0].0
        )));
    }
    let mut splice = Vec::with_capacity(pairs.len());
    let mut prev_a = 0u64;
    for (k, &(p, q)) in pairs.iter().enumerate() {
        let a = if k == 0 {
            q
        } else {
            let prev_p = pairs[k - 1].0;
            q + p * prev_p * prev_a
        };
        splice.push(a);
        prev_a = a;
    }
    Ok(BranchType { newton_pairs: pairs.to_vec(), splice })
}

impl BranchType {
    pub fn newton_pairs(&self) -> &[(u64, u64)] {
        &self.newton_pairs
    }

    /// Splice decorations `a_1, ..., a_g`.
    pub fn splice_decorations(&self) -> &[u64] {
        &self.splice
    }

    /// Number of Newton pairs.
    pub fn genus(&self) -> usize {
        self.newton_pairs.len()
    }

    /// `e_k = p_{k+1} * ... * p_g` for `k = 0..=g` (`e_0` is the
    /// multiplicity, `e_g = 1`).
    pub(crate) fn cable_factors(&self) -> Vec<u64> {
        let g = self.genus();
        let mut e = vec![1u64; g + 1];
        for k in (0..g).rev() {
            e[k] = e[k + 1] * self.newton_pairs[k].0;
        }
        e
    }

    /// Delta invariant: number of semigroup gaps.
    pub fn delta(&self) -> u64 {
        let e = self.cable_factors();
        self.newton_pairs
            .iter()
            .zip(self.splice.iter())
            .enumerate()
            .map(|(k, (&(p, _), &a))| (p - 1) * (a - 1) / 2 * e[k + 1])
            .sum()
    }

    /// Milnor number `mu = 2 delta`.
    pub fn milnor(&self) -> u64 {
        2 * self.delta()
    }
}

/// Value semigroup of a branch: membership up to the conductor plus the
/// derived numerical invariants.
///
/// Stored as an explicit bitset over `0..conductor`; membership above the
/// conductor is answered as `true` without storage.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Semigroup {
    generators: Vec<u64>,
    delta: u64,
    conductor: u64,
    gap_set: Vec<u64>,
    members: Vec<bool>,
    /// prefix[i] = #(members <= i) for i < conductor
    prefix: Vec<u64>,
}

/// Semigroup of a branch from its splice data.
///
/// Generators are `p_1 ... p_g` and `a_k * p_{k+1} ... p_g`; the membership
/// table is sieved and cross-checked against the gap count `delta`, the
/// symmetry `k in G <=> mu-1-k not in G`, and `conductor = 2 delta`.
pub fn semigroup_of(b: &BranchType) -> Result<Semigroup> {
    let e = b.cable_factors();
    let mut generators = vec![e[0]];
    for (k, &a) in b.splice_decorations().iter().enumerate() {
        generators.push(a * e[k + 1]);
    }
    let conductor = b.milnor();
    let sg = build_semigroup(generators, conductor)?;
    if sg.delta != b.delta() {
        return Err(Error::Inconsistency(format!(
            "gap count {} disagrees with delta {} from Newton pairs",
            sg.delta,
            b.delta()
        )));
    }
    Ok(sg)
}

/// Numerical semigroup from an explicit generator set.
///
/// The generators must be coprime as a set and must produce a *symmetric*
/// semigroup (`conductor = 2 delta`), the class realized by plane branches.
pub fn semigroup_from_generators(gens: &[u64]) -> Result<Semigroup> {
    if gens.is_empty() {
        return Err(Error::InvalidSemigroup("no generators".into()));
    }
    if gens.contains(&0) {
        return Err(Error::InvalidSemigroup("zero generator".into()));
    }
    let mut g = 0u64;
    for &x in gens {
        g = g.gcd(&x);
    }
    if g != 1 {
        return Err(Error::InvalidSemigroup(format!(
            "generators share common factor {g}"
        )));
    }
    let mut gens: Vec<u64> = gens.to_vec();
    gens.sort_unstable();
    gens.dedup();
    if gens[0] == 1 {
        // the full semigroup N: conductor 0, delta 0
        return build_semigroup(gens, 0);
    }
    // Sieve far enough to see the conductor: the Frobenius number of a
    // coprime pair a < b is bounded by (a-1)(b-1) - 1.
    let bound = (gens[0] - 1) * (gens[gens.len() - 1] - 1);
    if bound > MAX_CONDUCTOR {
        return Err(Error::InvalidSemigroup(format!(
            "conductor bound {bound} too large"
        )));
    }
    let pad = gens[0] as usize;
    let n = bound as usize + pad + 1;
    let mut member = vec![false; n];
    member[0] = true;
    for i in 1..n {
        member[i] = gens.iter().any(|&g| (g as usize) <= i && member[i - g as usize]);
    }
    let conductor = match member.iter().rposition(|&m| !m) {
        Some(last_gap) => last_gap as u64 + 1,
        None => 0,
    };
    if conductor > bound {
        return Err(Error::Inconsistency(
            "sieve pad contained a gap beyond the Frobenius bound".into(),
        ));
    }
    build_semigroup(gens, conductor)
}

fn build_semigroup(generators: Vec<u64>, conductor: u64) -> Result<Semigroup> {
    if conductor > MAX_CONDUCTOR {
        return Err(Error::InvalidSemigroup(format!(
            "conductor {conductor} exceeds supported size"
        )));
    }
    let c = conductor as usize;
    let min_gen = generators.iter().copied().min().unwrap_or(1) as usize;
    let n = c + min_gen.max(1) + 1;
    let mut member = vec![false; n];
    member[0] = true;
    for i in 1..n {
        member[i] = generators
            .iter()
            .any(|&g| (g as usize) <= i && member[i - g as usize]);
    }
    // Everything at and beyond the conductor must be a member.
    if member[c..].iter().any(|&m| !m) {
        return Err(Error::InvalidSemigroup(format!(
            "{conductor} is not the conductor of the generated semigroup"
        )));
    }
    if c > 0 && member[c - 1] {
        return Err(Error::InvalidSemigroup(format!(
            "{} is not a gap, so the conductor is below {conductor}",
            c - 1
        )));
    }
    let gap_set: Vec<u64> = (0..c).filter(|&k| !member[k]).map(|k| k as u64).collect();
    let delta = gap_set.len() as u64;
    if conductor != 2 * delta {
        return Err(Error::InvalidSemigroup(format!(
            "not symmetric: conductor {conductor} != 2 delta = {}",
            2 * delta
        )));
    }
    for k in 0..c {
        if member[k] == member[c - 1 - k] {
            return Err(Error::InvalidSemigroup(format!(
                "symmetry fails at k = {k}"
            )));
        }
    }
    let mut prefix = vec![0u64; c];
    let mut acc = 0u64;
    for k in 0..c {
        if member[k] {
            acc += 1;
        }
        prefix[k] = acc;
    }
    let members = member[..c].to_vec();
    Ok(Semigroup { generators, delta, conductor, gap_set, members, prefix })
}

impl Semigroup {
    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    /// Number of gaps.
    pub fn delta(&self) -> u64 {
        self.delta
    }

    /// Milnor number `mu = 2 delta`.
    pub fn mu(&self) -> u64 {
        2 * self.delta
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn gap_set(&self) -> &[u64] {
        &self.gap_set
    }

    pub fn contains(&self, k: u64) -> bool {
        if k >= self.conductor {
            true
        } else {
            self.members[k as usize]
        }
    }

    /// `#(G  intersect [0, x])`.
    pub fn count_upto(&self, x: u64) -> u64 {
        if self.conductor == 0 {
            return x + 1;
        }
        if x >= self.conductor - 1 {
            // all of [conductor, x] plus the delta members below the conductor
            (x + 1) - self.delta
        } else {
            self.prefix[x as usize]
        }
    }

    /// `#(G intersect (lo, hi])`.
    pub fn count_in(&self, lo: u64, hi: u64) -> u64 {
        if hi <= lo {
            return 0;
        }
        let below = if lo == u64::MAX { 0 } else { self.count_upto(lo) };
        self.count_upto(hi) - below
    }

    /// Members up to and including `x`, for display.
    pub fn members_upto(&self, x: u64) -> Vec<u64> {
        (0..=x).filter(|&k| self.contains(k)).collect()
    }
}

/// Multiplicity sequence of the minimal embedded resolution, in run-length
/// form, with the inner (satellite) and outer (sprouting) blow-up counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityData {
    runs: Vec<(u64, u64)>,
    omega: u64,
    rho: u64,
}

/// Multiplicities emitted by the Euclidean algorithm on `(x, y)`: `y = h*x + r`
/// contributes `h` copies of `x`, then recurse on `(r, x)` until `r = 0`.
fn euclid_multiplicities(x: u64, y: u64, out: &mut Vec<u64>) {
    debug_assert!(x > 0);
    let h = y / x;
    let r = y % x;
    for _ in 0..h {
        out.push(x);
    }
    if r > 0 {
        euclid_multiplicities(r, x, out);
    }
}

/// Multiplicity sequence plus blow-up classification.
///
/// The sequence is the concatenation over the Newton pairs of
/// `e_k * euclid(p_k, q_k)` (the Enriques expansion of the characteristic
/// exponents; 1's are not omitted). A center is classified as satellite when
/// it is proximate to two earlier centers; proximity is reconstructed from
/// the proximity equalities `m_j = sum of multiplicities proximate to j`.
pub fn multiplicity_data(b: &BranchType) -> Result<MultiplicityData> {
    let e = b.cable_factors();
    let mut seq: Vec<u64> = Vec::new();
    for (k, &(p, q)) in b.newton_pairs().iter().enumerate() {
        let mut stage = Vec::new();
        euclid_multiplicities(p, q, &mut stage);
        seq.extend(stage.into_iter().map(|m| m * e[k + 1]));
    }
    let k = seq.len();
    if k == 0 || seq[k - 1] != 1 {
        return Err(Error::Inconsistency(
            "multiplicity sequence does not end in 1".into(),
        ));
    }
    if seq.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Inconsistency(
            "multiplicity sequence is not non-increasing".into(),
        ));
    }

    // Proximity reconstruction: the centers proximate to p_j are the
    // consecutive centers p_{j+1}, p_{j+2}, ... whose multiplicities sum to
    // m_j exactly. A center is satellite when some j < i-1 reaches it.
    let mut satellite = vec![false; k];
    for j in 0..k - 1 {
        let mut acc = 0u64;
        let mut i = j + 1;
        while i < k && acc + seq[i] <= seq[j] {
            acc += seq[i];
            if i > j + 1 {
                satellite[i] = true;
            }
            i += 1;
        }
        if acc != seq[j] {
            return Err(Error::Inconsistency(format!(
                "proximity equality fails at center {}: {} of {}",
                j + 1,
                acc,
                seq[j]
            )));
        }
    }
    let omega = satellite.iter().filter(|&&s| s).count() as u64;
    let rho = (k as u64 - 1) - omega;

    let two_delta: u64 = seq.iter().map(|&m| m * (m - 1)).sum();
    if two_delta != b.milnor() {
        return Err(Error::Inconsistency(format!(
            "sum m(m-1) = {two_delta} disagrees with mu = {}",
            b.milnor()
        )));
    }

    let mut runs: Vec<(u64, u64)> = Vec::new();
    for m in seq {
        match runs.last_mut() {
            Some((v, c)) if *v == m => *c += 1,
            _ => runs.push((m, 1)),
        }
    }
    Ok(MultiplicityData { runs, omega, rho })
}

impl MultiplicityData {
    /// Run-length pairs `(multiplicity, count)`.
    pub fn runs(&self) -> &[(u64, u64)] {
        &self.runs
    }

    /// The flat multiplicity sequence `[m_1, ..., m_k]`.
    pub fn sequence(&self) -> Vec<u64> {
        let mut out = Vec::new();
        for &(m, c) in &self.runs {
            for _ in 0..c {
                out.push(m);
            }
        }
        out
    }

    /// Total number of blow-up centers.
    pub fn len(&self) -> u64 {
        self.runs.iter().map(|&(_, c)| c).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    /// Inner (satellite) blow-up count.
    pub fn omega(&self) -> u64 {
        self.omega
    }

    /// Outer (sprouting) blow-up count.
    pub fn rho(&self) -> u64 {
        self.rho
    }

    /// Free infinitely near points `L = 2 + rho = k - omega + 1` (the first
    /// center is counted by two).
    pub fn free_points(&self) -> u64 {
        2 + self.rho
    }

    pub fn sum(&self) -> u64 {
        self.runs.iter().map(|&(m, c)| m * c).sum()
    }

    pub fn sum_m_m_minus_1(&self) -> u64 {
        self.runs.iter().map(|&(m, c)| m * (m - 1) * c).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn branch(pairs: &[(u64, u64)]) -> BranchType {
        branch_from_newton_pairs(pairs).unwrap()
    }

    #[test]
    fn splice_decorations_two_pairs() {
        // (p_1, a_1) = (2, 7), (p_2, a_2) = (4, 73); q_2 = 73 - 4*2*7 = 17
        let b = branch(&[(2, 7), (4, 17)]);
        assert_eq!(b.splice_decorations(), &[7, 73]);
    }

    #[test]
    fn splice_single_pair() {
        assert_eq!(branch(&[(2, 3)]).splice_decorations(), &[3]);
        assert_eq!(branch(&[(3, 22)]).splice_decorations(), &[22]);
    }

    #[test]
    fn rejects_bad_pairs() {
        assert!(branch_from_newton_pairs(&[(2, 4)]).is_err());
        assert!(branch_from_newton_pairs(&[(1, 3)]).is_err());
        assert!(branch_from_newton_pairs(&[(3, 2)]).is_err());
        assert!(branch_from_newton_pairs(&[]).is_err());
        assert!(branch_from_newton_pairs(&[(2, 3), (2, 0)]).is_err());
    }

    #[test]
    fn semigroup_of_degree17_cusp() {
        let b = branch(&[(2, 7), (4, 17)]);
        let sg = semigroup_of(&b).unwrap();
        assert_eq!(sg.generators(), &[8, 28, 73]);
        assert_eq!(sg.mu(), 240);
        assert_eq!(sg.conductor(), 240);
    }

    #[test]
    fn semigroup_of_ordinary_cusp() {
        let sg = semigroup_of(&branch(&[(2, 3)])).unwrap();
        assert_eq!(sg.generators(), &[2, 3]);
        assert_eq!(sg.gap_set(), &[1]);
        assert_eq!(sg.delta(), 1);
        assert_eq!(sg.conductor(), 2);
    }

    #[test]
    fn semigroup_3_7_gaps() {
        // enumerate sums of 3 and 7 up to 12 by hand
        let sg = semigroup_of(&branch(&[(3, 7)])).unwrap();
        assert_eq!(sg.gap_set(), &[1, 2, 4, 5, 8, 11]);
        assert_eq!(sg.delta(), 6);
        assert_eq!(sg.conductor(), 12);
    }

    #[test]
    fn semigroup_from_generators_matches() {
        let sg = semigroup_from_generators(&[8, 28, 73]).unwrap();
        assert_eq!(sg.mu(), 240);
        let direct = semigroup_of(&branch(&[(2, 7), (4, 17)])).unwrap();
        assert_eq!(sg, direct);
    }

    #[test]
    fn generators_must_be_symmetric() {
        // <3, 5, 7> has gaps {1, 2, 4}: delta 3 but conductor 5, not 6
        assert!(matches!(
            semigroup_from_generators(&[3, 5, 7]),
            Err(Error::InvalidSemigroup(_))
        ));
    }

    #[test]
    fn multiplicities_degree17_cusp() {
        let md = multiplicity_data(&branch(&[(2, 7), (4, 17)])).unwrap();
        assert_eq!(md.runs(), &[(8, 3), (4, 6), (1, 4)]);
    }

    #[test]
    fn multiplicities_ordinary_cusp() {
        // three blow-ups resolve the cusp; the third center is satellite
        let md = multiplicity_data(&branch(&[(2, 3)])).unwrap();
        assert_eq!(md.sequence(), vec![2, 1, 1]);
        assert_eq!(md.omega(), 1);
        assert_eq!(md.rho(), 1);
        assert_eq!(md.free_points(), 3);
    }

    #[test]
    fn multiplicities_4_5() {
        let b = branch(&[(4, 5)]);
        let md = multiplicity_data(&b).unwrap();
        assert_eq!(md.sequence(), vec![4, 1, 1, 1, 1]);
        assert_eq!(md.sum_m_m_minus_1(), 12);
        assert_eq!(b.delta(), 6);
    }

    #[test]
    fn count_upto_crosses_conductor() {
        let sg = semigroup_of(&branch(&[(2, 13)])).unwrap();
        // members: even numbers to 12, everything from 12 on
        assert_eq!(sg.count_upto(0), 1);
        assert_eq!(sg.count_upto(5), 3);
        assert_eq!(sg.count_upto(10), 6);
        assert_eq!(sg.count_upto(15), 10);
        assert_eq!(sg.count_in(5, 10), 3);
    }

    /// Strategy for admissible Newton-pair lists with small entries.
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
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn semigroup_symmetry_and_conductor(b in small_branch()) {
            let sg = semigroup_of(&b).unwrap();
            prop_assert_eq!(sg.conductor(), 2 * sg.delta());
            let mu = sg.mu();
            for k in 0..mu {
                prop_assert_ne!(sg.contains(k), sg.contains(mu - 1 - k));
            }
        }

        #[test]
        fn multiplicity_invariants(b in small_branch()) {
            let sg = semigroup_of(&b).unwrap();
            let md = multiplicity_data(&b).unwrap();
            // sum m(m-1) = 2 delta, with delta from the gap count
            prop_assert_eq!(md.sum_m_m_minus_1(), 2 * sg.delta());
            // the first multiplicity is the smallest nonzero member
            let m1 = md.sequence()[0];
            prop_assert!(sg.contains(m1));
            prop_assert!((1..m1).all(|k| !sg.contains(k)));
            // run-length bookkeeping
            prop_assert_eq!(md.len() - 1, md.omega() + md.rho());
            prop_assert_eq!(md.free_points(), 2 + md.rho());
        }

        #[test]
        fn single_pair_delta_formula(a in 2u64..=9, off in 1u64..=15) {
            let b0 = a + off;
            prop_assume!(a.gcd(&b0) == 1);
            let b = branch(&[(a, b0)]);
            prop_assert_eq!(b.delta(), (a - 1) * (b0 - 1) / 2);
            let sg = semigroup_of(&b).unwrap();
            prop_assert_eq!(sg.delta(), (a - 1) * (b0 - 1) / 2);
        }
    }
}
