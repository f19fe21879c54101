//! Exhaustive enumeration of valid labeling schemes of a given degree, up
//! to isomorphism and color bijection.
//!
//! The search fixes a canonical locked pair first (edge vector, then face
//! vector, pruning on the two-class bound), then assembles one coherent
//! neighborhood per edge color, and keeps the schemes whose border automaton
//! passes face equivalence. Families are deduplicated by canonical key, so
//! re-running in any order yields the identical set.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::automaton::{admits_type_vector, analyze, PrimitiveTypeVector, TypeVector};
use crate::color::{EdgeColor, FaceColor};
use crate::neighborhood::{enumerate_neighborhoods, EdgeNeighborhood};
use crate::pair::{canonical_pair, PairUniverse, VectorPair};
use crate::scheme::LabelingScheme;
use crate::{Error, Result};

/// Connectivity class of the graphs of a scheme, decided by the number of
/// infinite faces around a vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Connectivity {
    ThreeConnected,
    TwoSeparable,
    OneSeparable,
}

impl Connectivity {
    pub fn of(scheme: &LabelingScheme) -> Connectivity {
        match scheme.infinite_face_count() {
            0 => Connectivity::ThreeConnected,
            1 => Connectivity::TwoSeparable,
            _ => Connectivity::OneSeparable,
        }
    }
}

impl fmt::Display for Connectivity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Connectivity::ThreeConnected => write!(f, "3-connected"),
            Connectivity::TwoSeparable => write!(f, "2-connected-2-separable"),
            Connectivity::OneSeparable => write!(f, "1-separable"),
        }
    }
}

/// One enumerated family: a canonical scheme together with the invariants
/// every member graph shares.
#[derive(Clone, Debug)]
pub struct SchemeFamily {
    pub key: String,
    pub scheme: LabelingScheme,
    pub degree: usize,
    pub ptv: PrimitiveTypeVector,
    pub aperiodic: bool,
    pub connectivity: Connectivity,
}

impl SchemeFamily {
    pub fn admits(&self, tv: &TypeVector) -> Option<(TypeVector, BTreeMap<FaceColor, u32>)> {
        admits_type_vector(&self.ptv, tv)
    }
}

/// Restricted-growth sequences of length `d`: first occurrences of the
/// values appear in increasing order.
fn edge_vectors(d: usize) -> Vec<Vec<EdgeColor>> {
    let mut out = Vec::new();
    let mut cur = vec![0u8; d];
    fn rec(cur: &mut Vec<u8>, i: usize, maxv: u8, out: &mut Vec<Vec<EdgeColor>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..=maxv.min(i as u8) {
            cur[i] = v;
            rec(cur, i + 1, maxv.max(v + 1), out);
        }
    }
    rec(&mut cur, 0, 0, &mut out);
    out
}

/// Face vectors over a minimal finite alphabet plus the infinite color.
fn face_vectors(d: usize) -> Vec<Vec<FaceColor>> {
    let mut out = Vec::new();
    let mut cur = vec![FaceColor::Infinite; d];
    fn rec(cur: &mut Vec<FaceColor>, i: usize, maxv: u8, out: &mut Vec<Vec<FaceColor>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..=maxv {
            cur[i] = FaceColor::Finite(v);
            rec(cur, i + 1, maxv.max(v + 1), out);
        }
        cur[i] = FaceColor::Infinite;
        rec(cur, i + 1, maxv, out);
    }
    rec(&mut cur, 0, 0, &mut out);
    out
}

/// `true` when no rotation/reflection image relabels strictly below `xi`.
fn is_necklace_minimal(xi: &[EdgeColor]) -> bool {
    let d = xi.len();
    let relabel = |v: &[EdgeColor]| {
        let mut map: BTreeMap<EdgeColor, EdgeColor> = BTreeMap::new();
        v.iter()
            .map(|&c| {
                let next = map.len() as u8;
                *map.entry(c).or_insert(next)
            })
            .collect::<Vec<_>>()
    };
    for s in 0..d {
        let rot: Vec<EdgeColor> = (0..d).map(|i| xi[(i + s) % d]).collect();
        if relabel(&rot) < xi.to_vec() {
            return false;
        }
        let refl: Vec<EdgeColor> = (0..d).map(|i| rot[(d - i) % d]).collect();
        if relabel(&refl) < xi.to_vec() {
            return false;
        }
    }
    true
}

/// All canonical locked pairs of degree `d` whose every edge color has at
/// most two equivalence classes.
pub fn enumerate_pairs(d: usize) -> Vec<VectorPair> {
    let xis: Vec<Vec<EdgeColor>> = edge_vectors(d)
        .into_iter()
        .filter(|xi| is_necklace_minimal(xi))
        .collect();
    let phis = face_vectors(d);
    let mut pairs: Vec<VectorPair> = xis
        .par_iter()
        .flat_map_iter(|xi| {
            phis.iter()
                .filter_map(|phi| {
                    let pair = VectorPair::new(xi.clone(), phi.clone()).ok()?;
                    if canonical_pair(&pair) != pair {
                        return None;
                    }
                    let universe = PairUniverse::new(pair.clone());
                    for &c in &pair.colors().edge_colors {
                        let (eq, _) = universe.eq_count(c).ok()?;
                        if eq > 2 {
                            return None;
                        }
                    }
                    Some(pair)
                })
                .collect::<Vec<_>>()
        })
        .collect();
    pairs.sort();
    pairs
}

/// All valid scheme families of degree `d`, sorted by canonical key.
///
/// Degree 2 is the closed-form remark case: the cyclic graphs form a single
/// family (even cycles carry a second labeling of the same graphs).
pub fn enumerate_schemes(d: usize) -> Result<Vec<SchemeFamily>> {
    if !(2..=8).contains(&d) {
        return Err(Error::user("degree must lie between 2 and 8"));
    }
    if d == 2 {
        let pair = VectorPair::from_text("a1,a1/f1,f1")?;
        let nb = EdgeNeighborhood::new(pair.clone(), pair.clone())?;
        let scheme = LabelingScheme::new(pair, BTreeMap::from([(0, nb)]));
        return Ok(vec![family_of(scheme)?]);
    }

    let pairs = enumerate_pairs(d);
    let mut families: Vec<(String, SchemeFamily)> = pairs
        .par_iter()
        .map(families_over_pair)
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .map(|f| (f.key.clone(), f))
        .collect();
    families.sort_by(|a, b| a.0.cmp(&b.0));
    families.dedup_by(|a, b| a.0 == b.0);
    Ok(families.into_iter().map(|(_, f)| f).collect())
}

fn families_over_pair(pair: &VectorPair) -> Result<Vec<SchemeFamily>> {
    let universe = PairUniverse::new(pair.clone());
    let colors = pair.colors().edge_colors;
    let mut candidates: Vec<Vec<EdgeNeighborhood>> = Vec::new();
    for &c in &colors {
        let nbs = enumerate_neighborhoods(&universe, c)?;
        if nbs.is_empty() {
            return Ok(Vec::new());
        }
        candidates.push(nbs);
    }

    let mut out: BTreeMap<String, SchemeFamily> = BTreeMap::new();
    let mut index = vec![0usize; colors.len()];
    loop {
        let nbs: BTreeMap<EdgeColor, EdgeNeighborhood> = colors
            .iter()
            .enumerate()
            .map(|(slot, &c)| (c, candidates[slot][index[slot]].clone()))
            .collect();
        let scheme = LabelingScheme::new(pair.clone(), nbs);
        let analysis = crate::automaton::analyze_with(&scheme, &universe)?;
        if analysis.is_valid() {
            let key = scheme.canonical_key();
            if !out.contains_key(&key) {
                out.insert(key.clone(), family_from_key(&key)?);
            }
        }
        // advance the mixed-radix index
        let mut i = 0;
        loop {
            if i == index.len() {
                return Ok(out.into_values().collect());
            }
            index[i] += 1;
            if index[i] < candidates[i].len() {
                break;
            }
            index[i] = 0;
            i += 1;
        }
    }
}

/// Rebuilds the deterministic representative from a canonical key.
fn family_from_key(key: &str) -> Result<SchemeFamily> {
    let scheme = LabelingScheme::from_text(key)?;
    let family = family_of(scheme)?;
    if family.key != key {
        return Err(Error::internal("canonical key is not idempotent"));
    }
    Ok(family)
}

/// Analyzes one valid scheme into its family record.
pub fn family_of(scheme: LabelingScheme) -> Result<SchemeFamily> {
    let analysis = analyze(&scheme)?;
    let ptv = analysis
        .ptv
        .clone()
        .ok_or_else(|| Error::user("scheme fails face equivalence"))?;
    Ok(SchemeFamily {
        key: scheme.canonical_key(),
        degree: scheme.degree(),
        ptv,
        aperiodic: analysis.aperiodic,
        connectivity: Connectivity::of(&scheme),
        scheme,
    })
}

/// Periodic / aperiodic family counts.
pub fn family_counts(families: &[SchemeFamily]) -> (usize, usize) {
    let aperiodic = families.iter().filter(|f| f.aperiodic).count();
    (families.len() - aperiodic, aperiodic)
}

/// The three admissible degree-3 type-vector shapes, instantiated with all
/// entries between 3 and `bound`.
pub fn degree3_shape_tvs(bound: u32) -> BTreeSet<TypeVector> {
    let mut out = BTreeSet::new();
    let mut add = |a: u32, b: u32, c: u32| {
        if a >= 3 && b >= 3 && c >= 3 && a <= bound && b <= bound && c <= bound {
            out.insert(canonical_tv(&TypeVector::finite(&[a, b, c])));
        }
    };
    for n in 1..=bound {
        add(n, n, n);
        for m in 1..=bound {
            add(n, 2 * m, 2 * m);
            for p in 1..=bound {
                add(2 * n, 2 * m, 2 * p);
            }
        }
    }
    out
}

/// All finite type vectors with entries up to `bound` admitted by some
/// family, canonicalized up to rotation and reflection.
pub fn admissible_finite_tvs(
    families: &[SchemeFamily],
    d: usize,
    bound: u32,
) -> BTreeSet<TypeVector> {
    let mut out = BTreeSet::new();
    let mut entries = vec![3u32; d];
    loop {
        let tv = TypeVector::finite(&entries);
        if families.iter().any(|f| f.admits(&tv).is_some()) {
            out.insert(canonical_tv(&tv));
        }
        let mut i = 0;
        loop {
            if i == d {
                return out;
            }
            entries[i] += 1;
            if entries[i] <= bound {
                break;
            }
            entries[i] = 3;
            i += 1;
        }
    }
}

/// Least rotation/reflection image of a type vector.
pub fn canonical_tv(tv: &TypeVector) -> TypeVector {
    let mut best = tv.clone();
    for s in 0..tv.len() {
        for cand in [tv.rotated(s), tv.reflected().rotated(s)] {
            if cand.entries < best.entries {
                best = cand;
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_vector_generation_is_restricted_growth() {
        let xs = edge_vectors(3);
        assert_eq!(xs.len(), 5); // Bell(3)
        assert!(xs.contains(&vec![0, 0, 0]));
        assert!(xs.contains(&vec![0, 1, 2]));
        assert!(xs.iter().all(|x| x[0] == 0));
    }

    #[test]
    fn degree_two_is_the_cyclic_family() {
        let fams = enumerate_schemes(2).unwrap();
        assert_eq!(fams.len(), 1);
        assert_eq!(fams[0].ptv.to_string(), "[n,n]");
        assert!(!fams[0].aperiodic);
    }

    #[test]
    fn degree_three_pairs_are_canonical() {
        let pairs = enumerate_pairs(3);
        assert!(!pairs.is_empty());
        for p in &pairs {
            assert_eq!(canonical_pair(p), *p);
        }
    }

    #[test]
    fn shape_tvs_contain_the_expected_members() {
        let shapes = degree3_shape_tvs(12);
        assert!(shapes.contains(&canonical_tv(&TypeVector::finite(&[5, 5, 5]))));
        assert!(shapes.contains(&canonical_tv(&TypeVector::finite(&[3, 4, 4]))));
        assert!(shapes.contains(&canonical_tv(&TypeVector::finite(&[4, 6, 8]))));
        assert!(!shapes.contains(&canonical_tv(&TypeVector::finite(&[3, 3, 5]))));
    }
}
