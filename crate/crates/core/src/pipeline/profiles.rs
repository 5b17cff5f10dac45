use std::collections::{BTreeMap, BTreeSet};

use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::Serialize;

use crate::codes::{automorphism_group, fixed_subcode, LinearCode};
use crate::perm::{centralizer, involution_class_reps_where, is_free_klein_pair, PermGroup, Permutation};

use super::candidates::cyclic;
use super::{CandidateLibrary, GlueSurvivor, InvolutionFrame, PipelineError};

/// Fixed-subcode intersection dimensions for one elementary abelian
/// subgroup `<a, b, c>` of order 8 acting freely.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntersectionProfile {
    /// `dim C(a) cap C(b) cap C(c)`.
    pub triple_dim: usize,
    /// Dimensions for the pairs `(a,b)`, `(a,c)`, `(b,c)`.
    pub pair_dims: [usize; 3],
    /// True when the code is `C(a) + C(b)`, i.e. `a`, `b` can play the
    /// roles of the two glued involutions.
    pub glue_roles: bool,
    /// How many ordered triples produced these numbers.
    pub multiplicity: u128,
    /// The first such triple.
    #[serde(serialize_with = "serialize_triple")]
    pub triple: [Permutation; 3],
}

fn serialize_triple<S: serde::Serializer>(t: &[Permutation; 3], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(t.iter().map(|p| p.to_string()))
}

/// Groups up to this order are walked element by element when collecting
/// involution classes.
pub const PROFILE_ENUMERATION_BOUND: u64 = 1 << 25;

/// Class representatives of the fixed-point-free involutions of `g`
/// satisfying the class-invariant predicate `keep`.
fn fpf_class_reps(g: &PermGroup, keep: impl Fn(&Permutation) -> bool) -> Result<Vec<Permutation>, PipelineError> {
    Ok(involution_class_reps_where(g, PROFILE_ENUMERATION_BOUND, |x| {
        x.is_fixed_point_free() && keep(x)
    })?)
}

/// Profiles of every ordered triple `(a, b, c)` of generators of a freely
/// acting elementary abelian subgroup of order 8 in `Aut(D)`, merged by
/// value.
pub fn intersection_profiles(
    survivor: &GlueSurvivor,
    frame: &InvolutionFrame,
) -> Result<Vec<IntersectionProfile>, PipelineError> {
    debug_assert_eq!(survivor.code.len(), frame.n);
    profiles_of(&survivor.code)
}

/// As [`intersection_profiles`] for any code.
///
/// The numbers only depend on the `Aut(D)`-conjugacy class of the triple,
/// so `a` runs over classes of `Aut(D)`, `b` over classes of `C(a)` and `c`
/// over classes of `C(a, b)`. A triple with centralizer `Z` stands for
/// `|Aut(D)| / |Z|` ordered triples.
pub fn profiles_of(code: &LinearCode) -> Result<Vec<IntersectionProfile>, PipelineError> {
    let aut = automorphism_group(code)?;
    let order = aut.order();
    let mut merged: BTreeMap<(usize, [usize; 3], bool), IntersectionProfile> = BTreeMap::new();
    for a in fpf_class_reps(&aut, |_| true)? {
        let ca = centralizer(&aut, &cyclic(&a))?;
        let fa = fixed_subcode(code, &a)?;
        for b in fpf_class_reps(&ca, |x| is_free_klein_pair(&a, x))? {
            let cab = centralizer(&ca, &cyclic(&b))?;
            let fb = fixed_subcode(code, &b)?;
            let fab = fa.intersection(&fb);
            let glue_roles = fa.sum(&fb) == *code;
            let ab = a.compose(&b);
            let free = |x: &Permutation| {
                is_free_klein_pair(&a, x) && is_free_klein_pair(&b, x) && x.compose(&ab).is_fixed_point_free()
            };
            for c in fpf_class_reps(&cab, free)? {
                let cabc = centralizer(&cab, &cyclic(&c))?;
                let count = (&order / cabc.order()).to_u128().unwrap_or(u128::MAX);
                let fc = fixed_subcode(code, &c)?;
                let triple_dim = fab.intersection(&fc).dim();
                let pair_dims = [fab.dim(), fa.intersection(&fc).dim(), fb.intersection(&fc).dim()];
                merged
                    .entry((triple_dim, pair_dims, glue_roles))
                    .and_modify(|p| p.multiplicity = p.multiplicity.saturating_add(count))
                    .or_insert_with(|| IntersectionProfile {
                        triple_dim,
                        pair_dims,
                        glue_roles,
                        multiplicity: count,
                        triple: [a.clone(), b.clone(), c.clone()],
                    });
            }
        }
    }
    Ok(merged.into_values().collect())
}

/// Admissible `(triple_dim, pair_dim, pair_dim)` rows, pair dimensions in
/// ascending order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CasesTable {
    pub rows: BTreeSet<(usize, usize, usize)>,
}

impl CasesTable {
    pub fn contains(&self, t: usize, p: usize, q: usize) -> bool {
        self.rows.contains(&(t, p.min(q), p.max(q)))
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

/// Rows realized by the library codes, with `(x, y)` running over the free
/// Klein pairs of `Aut(Y)` up to conjugacy. If `Y` is the projected fixed code
/// of one frame involution, the other two act on it as a free Klein pair
/// `(x, y)`, and the three intersection dimensions of the full code are
/// `dim Y(x) cap Y(y)`, `dim Y(x)` and `dim Y(y)`.
pub fn cases_table(lib: &CandidateLibrary, frame: &InvolutionFrame) -> Result<CasesTable, PipelineError> {
    let _ = frame;
    let per_code: Vec<BTreeSet<(usize, usize, usize)>> = lib
        .codes
        .par_iter()
        .map(|cand| -> Result<_, PipelineError> {
            let mut rows = BTreeSet::new();
            for x in fpf_class_reps(&cand.aut, |_| true)? {
                let cx = centralizer(&cand.aut, &cyclic(&x))?;
                let fx = fixed_subcode(&cand.code, &x)?;
                for y in fpf_class_reps(&cx, |y| is_free_klein_pair(&x, y))? {
                    let fy = fixed_subcode(&cand.code, &y)?;
                    let t = fx.intersection(&fy).dim();
                    let (p, q) = (fx.dim(), fy.dim());
                    rows.insert((t, p.min(q), p.max(q)));
                }
            }
            Ok(rows)
        })
        .collect::<Result<_, _>>()?;
    Ok(CasesTable {
        rows: per_code.into_iter().flatten().collect(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Contradiction,
    Consistent,
    Undetermined,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Contradiction => "CONTRADICTION",
            Verdict::Consistent => "CONSISTENT",
            Verdict::Undetermined => "UNDETERMINED",
        })
    }
}

/// Decides whether a code with all three pair sums among the survivors can
/// exist. For a glue-role profile with triple dimension `t` and pair
/// dimension `p_ab`, the other two pair dimensions must be survivor pair
/// dimensions, and the three rows `(t, p_ab, p_ac)`, `(t, p_ab, p_bc)`,
/// `(t, p_ac, p_bc)` must all be admissible.
pub fn verdict(survivors: &[GlueSurvivor], profiles: &[Vec<IntersectionProfile>], table: &CasesTable) -> Verdict {
    let pair_dims: BTreeSet<usize> = survivors.iter().map(|s| s.pair_dim).collect();
    let glue: Vec<&IntersectionProfile> = profiles.iter().flatten().filter(|p| p.glue_roles).collect();
    if survivors.is_empty() || glue.is_empty() {
        return Verdict::Undetermined;
    }
    for p in glue {
        let (t, pab) = (p.triple_dim, p.pair_dims[0]);
        for &pac in &pair_dims {
            for &pbc in &pair_dims {
                if table.contains(t, pab, pac) && table.contains(t, pab, pbc) && table.contains(t, pac, pbc) {
                    return Verdict::Consistent;
                }
            }
        }
    }
    Verdict::Contradiction
}
