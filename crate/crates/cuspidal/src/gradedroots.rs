//! Graded roots: the merge tree of sublevel sets of a finite integer
//! sequence `tau`, stored in finite normal form (everything up to the level
//! where the root becomes a single infinite chain, plus a stem marker).
//!
//! Provides the `tau`-constructions for the surgery manifold `S^3_{-d}(K)`
//! and the Seifert manifold `Sigma(d, d, d+1)`, grading-preserving
//! isomorphism, the graded ranks of the associated `Z[U]`-module, and the
//! Seiberg-Witten sum read off `tau`.

use std::collections::BTreeMap;

use crate::branchdata::Semigroup;
use crate::error::{Error, Result};
use crate::localinv::c_profile;
use crate::numerics::{rat, rat_int, Rat};

/// A finite integer sequence producing a graded root: vertices at level `n`
/// are the connected components of `{i : tau(i) <= n}` in the path graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TauFunction {
    pub values: Vec<i64>,
}

impl TauFunction {
    pub fn new(values: Vec<i64>) -> Result<TauFunction> {
        if values.is_empty() {
            return Err(Error::InvalidInput("tau must be nonempty".into()));
        }
        Ok(TauFunction { values })
    }
}

/// The 3-manifolds whose canonical graded root admits a `tau`-representation
/// here: `S^3_{-d}(K)` for the local knot of a cusp with semigroup `sg`, and
/// the Brieskorn sphere `Sigma(d, d, d+1)`.
#[derive(Clone, Debug)]
pub enum Manifold<'a> {
    Surgery { sg: &'a Semigroup, d: u64 },
    Brieskorn { d: u64 },
}

/// `tau` on `{0, ..., 2d-4}`:
/// `tau(2l) = l(l-1)d/2 - l(delta - 1)` and
/// `tau(2l+1) = tau(2l+2) + c_{d-3-l}`, with `c_l` the coefficient profile
/// of the manifold (member counts for the surgery, `(l+1)(l+2)/2` for the
/// Brieskorn sphere, which shares `2 delta = (d-1)(d-2)`).
pub fn tau_for(m: &Manifold<'_>) -> Result<TauFunction> {
    let (d, delta, c): (u64, i64, Vec<i64>) = match m {
        Manifold::Surgery { sg, d } => {
            if *d < 3 {
                return Err(Error::InvalidInput(format!("degree {d} < 3")));
            }
            let c = c_profile(sg, *d)?.iter().map(|&x| x as i64).collect();
            (*d, sg.delta() as i64, c)
        }
        Manifold::Brieskorn { d } => {
            if *d < 3 {
                return Err(Error::InvalidInput(format!("degree {d} < 3")));
            }
            let c = (0..=(d - 3)).map(|l| ((l + 1) * (l + 2) / 2) as i64).collect();
            (*d, ((d - 1) * (d - 2) / 2) as i64, c)
        }
    };
    let di = d as i64;
    let even = |l: i64| l * (l - 1) / 2 * di - l * (delta - 1);
    let mut values = vec![0i64; (2 * d - 3) as usize];
    for l in 0..=(di - 2) {
        values[(2 * l) as usize] = even(l);
    }
    for l in 0..=(di - 3) {
        values[(2 * l + 1) as usize] = even(l + 1) + c[(di - 3 - l) as usize];
    }
    TauFunction::new(values)
}

pub fn tau_for_surgery(sg: &Semigroup, d: u64) -> Result<TauFunction> {
    tau_for(&Manifold::Surgery { sg, d })
}

pub fn tau_for_brieskorn(d: u64) -> Result<TauFunction> {
    tau_for(&Manifold::Brieskorn { d })
}

/// One row of the level-indexed adjacency view: the vertices at a level
/// with their parent indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelRow {
    pub chi: i64,
    pub vertices: Vec<(usize, Option<usize>)>,
}

/// One vertex of a graded root in finite normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub chi: i64,
    /// Index of the unique vertex one level up containing this one;
    /// `None` exactly for the vertex at `stem_top`.
    pub parent: Option<usize>,
}

/// A graded root stored up to its last merge level.
///
/// Vertices exist for every level from the minimum of `chi` up to
/// `stem_top`; above `stem_top` the root is a single infinite chain,
/// recorded by the marker instead of materialized.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedRoot {
    vertices: Vec<Vertex>,
    stem_top: i64,
    levels: BTreeMap<i64, Vec<usize>>,
}

/// Merge tree of sublevel sets of `tau` on the path `0..r`.
///
/// Equivalently the construction with `n_{ij} = max(tau(k) : i <= k <= j)`:
/// vertices at level `n` are the maximal runs of `{i : tau(i) <= n}`, and a
/// run at level `n` is joined to the unique run at level `n + 1` containing
/// it.
pub fn root_from_tau(tau: &TauFunction) -> GradedRoot {
    let vals = &tau.values;
    let min = *vals.iter().min().expect("nonempty");
    let max = *vals.iter().max().expect("nonempty");
    let mut vertices: Vec<Vertex> = Vec::new();
    let mut levels: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    // runs_prev[j] = (start, end, vertex index) of the j-th run at the
    // previous level
    let mut runs_prev: Vec<(usize, usize, usize)> = Vec::new();
    for n in min..=max {
        let mut runs: Vec<(usize, usize, usize)> = Vec::new();
        let mut i = 0usize;
        while i < vals.len() {
            if vals[i] <= n {
                let start = i;
                while i < vals.len() && vals[i] <= n {
                    i += 1;
                }
                let idx = vertices.len();
                vertices.push(Vertex { chi: n, parent: None });
                levels.entry(n).or_default().push(idx);
                runs.push((start, i - 1, idx));
            } else {
                i += 1;
            }
        }
        for &(ps, pe, pidx) in &runs_prev {
            let parent = runs
                .iter()
                .find(|&&(s, e, _)| s <= ps && pe <= e)
                .map(|&(_, _, idx)| idx)
                .expect("every run extends to a run one level up");
            vertices[pidx].parent = Some(parent);
        }
        runs_prev = runs;
    }
    GradedRoot { vertices, stem_top: max, levels }
}

impl GradedRoot {
    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// Level above which the root is a single infinite chain.
    pub fn stem_top(&self) -> i64 {
        self.stem_top
    }

    pub fn min_chi(&self) -> i64 {
        *self.levels.keys().next().expect("nonempty root")
    }

    /// Vertex indices at a given level (empty above `stem_top` or below the
    /// minimum).
    pub fn vertices_at(&self, chi: i64) -> &[usize] {
        self.levels.get(&chi).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Number of vertices at each stored level, from the minimum up to
    /// `stem_top`.
    pub fn level_counts(&self) -> Vec<(i64, usize)> {
        self.levels.iter().map(|(&n, v)| (n, v.len())).collect()
    }

    /// Level-indexed adjacency view for rendering: rows from `stem_top`
    /// down, each row the vertices at that level with their parent indices.
    pub fn level_view(&self) -> Vec<LevelRow> {
        self.levels
            .iter()
            .rev()
            .map(|(&n, idxs)| LevelRow {
                chi: n,
                vertices: idxs.iter().map(|&i| (i, self.vertices[i].parent)).collect(),
            })
            .collect()
    }

    /// Children of a vertex (one level down).
    pub fn children(&self, v: usize) -> Vec<usize> {
        self.vertices
            .iter()
            .enumerate()
            .filter(|(_, w)| w.parent == Some(v))
            .map(|(i, _)| i)
            .collect()
    }

    /// Structural validity per the definition of a graded root: edges span
    /// one level, a vertex has at most one upward edge (merge vertices sit
    /// above their children), levels are finite, and there is a single
    /// vertex per level from `stem_top` up.
    pub fn validate(&self) -> Result<()> {
        for (i, v) in self.vertices.iter().enumerate() {
            match v.parent {
                Some(p) => {
                    let pv = &self.vertices[p];
                    if pv.chi != v.chi + 1 {
                        return Err(Error::Inconsistency(format!(
                            "edge {i}->{p} spans levels {} -> {}",
                            v.chi, pv.chi
                        )));
                    }
                }
                None => {
                    if v.chi != self.stem_top {
                        return Err(Error::Inconsistency(format!(
                            "parentless vertex {i} below the stem marker"
                        )));
                    }
                }
            }
        }
        let top = self.vertices_at(self.stem_top);
        if top.len() != 1 {
            return Err(Error::Inconsistency(format!(
                "{} vertices at the stem level",
                top.len()
            )));
        }
        Ok(())
    }

    fn canonical_from(&self, v: usize) -> String {
        let mut parts: Vec<String> = self
            .children(v)
            .into_iter()
            .map(|c| self.canonical_from(c))
            .collect();
        parts.sort();
        format!("({})", parts.join(""))
    }

    /// Canonical encoding starting from the unique vertex at `level`
    /// (which must be at or above every merge, i.e. `level >= stem_top`).
    fn canonical_encoding(&self, level: i64) -> String {
        assert!(level >= self.stem_top);
        let root = self.vertices_at(self.stem_top)[0];
        let mut enc = self.canonical_from(root);
        // extend the stem upward so both sides of a comparison start at the
        // same absolute level
        for _ in self.stem_top..level {
            enc = format!("({enc})");
        }
        enc
    }
}

/// Grading-preserving isomorphism of graded roots, decided by comparing
/// canonical forms rooted at a common stem level.
pub fn roots_isomorphic(a: &GradedRoot, b: &GradedRoot) -> bool {
    let level = a.stem_top.max(b.stem_top);
    a.canonical_encoding(level) == b.canonical_encoding(level)
}

/// Graded ranks of the degree-`h` parts of the `Z[U]`-module of a root,
/// before the grading shift.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HFRanks {
    /// rank of the degree-h part, for even h in the requested range
    pub ranks: BTreeMap<i64, u64>,
}

/// Rank of the degree-`h` homogeneous part: the number of connected
/// components of the full subgraph on `{v : chi(v) <= h/2}`, which for a
/// graded root equals the number of vertices at level `h/2` (clamped to the
/// stem). Zero for odd `h`; the odd degrees are omitted from the map.
pub fn hplus_ranks(root: &GradedRoot, h_min: i64, h_max: i64) -> Result<HFRanks> {
    if h_min % 2 != 0 || h_max % 2 != 0 {
        return Err(Error::InvalidInput("rank range must be even-aligned".into()));
    }
    if h_min > h_max {
        return Err(Error::InvalidInput("empty rank range".into()));
    }
    let mut ranks = BTreeMap::new();
    let mut h = h_min;
    while h <= h_max {
        let n = h / 2;
        let r = if n < root.min_chi() {
            0
        } else if n >= root.stem_top {
            1
        } else {
            root.vertices_at(n).len() as u64
        };
        ranks.insert(h, r);
        h += 2;
    }
    Ok(HFRanks { ranks })
}

/// Rank function shifted into the Heegaard-Floer grading: each pre-shift
/// degree `h` is placed at `h - (K^2 + #)/4`.
#[derive(Clone, Debug, PartialEq)]
pub struct ShiftedRanks {
    pub shift: Rat,
    pub ranks: BTreeMap<Rat, u64>,
}

pub fn shifted_ranks(
    root: &GradedRoot,
    h_min: i64,
    h_max: i64,
    k2_plus_sharp: i64,
) -> Result<ShiftedRanks> {
    let pre = hplus_ranks(root, h_min, h_max)?;
    let shift = -rat(k2_plus_sharp, 4);
    let ranks = pre
        .ranks
        .into_iter()
        .map(|(h, r)| (rat_int(h) + &shift, r))
        .collect();
    Ok(ShiftedRanks { shift, ranks })
}

/// Seiberg-Witten invariant read off `tau`:
/// `sw - (K^2 + #)/8 = sum over l of (tau(2l+1) - tau(2l+2))`.
pub fn sw_from_root(tau: &TauFunction, k2_plus_sharp: i64) -> Rat {
    let mut sum = 0i64;
    let mut l = 0usize;
    while 2 * l + 2 < tau.values.len() {
        sum += tau.values[2 * l + 1] - tau.values[2 * l + 2];
        l += 1;
    }
    rat(k2_plus_sharp, 8) + rat_int(sum)
}
