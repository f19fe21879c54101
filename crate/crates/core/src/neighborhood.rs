//! Edge neighborhoods: the two locked vector pairs at the extremities of an
//! edge of one color.
//!
//! Both extremities are stored anchored: position 0 of each vector is the
//! central edge, and both stars are read in the same rotation sense of the
//! plane. The locking across the edge then reads
//! `first.faces[0] == second.faces[d-1]` and
//! `first.faces[d-1] == second.faces[0]`.
//!
//! Isomorphic presentations of one neighborhood are generated by inversion
//! (swap the extremities), symmetry (reflect both extremities, keeping the
//! central edge), and twists or rearrangements of a single extremity that
//! keep the central edge at its place. [`EdgeNeighborhood::instances`]
//! closes a neighborhood under these operations; canonical forms and the
//! automaton's `inv` relation are read off that closure.

use std::collections::{BTreeSet, VecDeque};

use crate::color::{EdgeColor, FaceColor};
use crate::pair::{canonical_pair, PairUniverse, VectorPair};
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct EdgeNeighborhood {
    first: VectorPair,
    second: VectorPair,
}

impl EdgeNeighborhood {
    pub fn new(first: VectorPair, second: VectorPair) -> Result<Self> {
        let nb = EdgeNeighborhood { first, second };
        if !nb.is_locked() {
            return Err(Error::user(
                "extremities do not lock across the central edge",
            ));
        }
        Ok(nb)
    }

    pub fn first(&self) -> &VectorPair {
        &self.first
    }

    pub fn second(&self) -> &VectorPair {
        &self.second
    }

    pub fn degree(&self) -> usize {
        self.first.degree()
    }

    pub fn color(&self) -> EdgeColor {
        self.first.edges()[0]
    }

    /// Pair of face classes separated by the central edge.
    pub fn separator(&self) -> (FaceColor, FaceColor) {
        (self.first.faces()[0], self.second.faces()[0])
    }

    fn is_locked(&self) -> bool {
        let d = self.first.degree();
        self.second.degree() == d
            && self.first.edges()[0] == self.second.edges()[0]
            && self.first.faces()[0] == self.second.faces()[d - 1]
            && self.first.faces()[d - 1] == self.second.faces()[0]
    }

    /// Exchanges the extremities.
    pub fn inverted(&self) -> EdgeNeighborhood {
        EdgeNeighborhood {
            first: self.second.clone(),
            second: self.first.clone(),
        }
    }

    /// Reflects both extremities, preserving the central edge.
    pub fn reflected(&self) -> EdgeNeighborhood {
        EdgeNeighborhood {
            first: self.first.reflected().0,
            second: self.second.reflected().0,
        }
    }

    /// Twists one block of one extremity. The twist must keep the central
    /// edge at its position and the neighborhood locked.
    pub fn twisted(&self, extremity: usize, block: usize) -> Result<EdgeNeighborhood> {
        let side = match extremity {
            0 => &self.first,
            1 => &self.second,
            _ => return Err(Error::user("extremity must be 0 or 1")),
        };
        let (img, m) = side.twisted(block)?;
        if m.perm[0] != 0 || m.sign[0] != 1 {
            return Err(Error::user("twist moves the central edge"));
        }
        let nb = if extremity == 0 {
            EdgeNeighborhood {
                first: img,
                second: self.second.clone(),
            }
        } else {
            EdgeNeighborhood {
                first: self.first.clone(),
                second: img,
            }
        };
        if !nb.is_locked() {
            return Err(Error::user(
                "twist would exchange the faces flanking the central edge",
            ));
        }
        Ok(nb)
    }

    /// Both extremities isomorphic to `pair`, compared by canonical form.
    pub fn coherent(&self, pair: &VectorPair) -> bool {
        let c = canonical_pair(pair);
        canonical_pair(&self.first) == c && canonical_pair(&self.second) == c
    }

    /// Every presentation of this neighborhood around one edge of the
    /// embedded graph: closed under inversion, symmetry, and per-extremity
    /// rearrangements and twists. This is the instance set behind the
    /// border automaton's `inv` relation and behind gluing.
    pub fn instances(&self) -> BTreeSet<EdgeNeighborhood> {
        self.close_under(true)
    }

    /// Presentations identified when schemes are counted: as above but
    /// without single-extremity twists. A twist re-embeds the whole branch
    /// hanging beyond the twisted block, so schemes differing by one are
    /// listed as distinct labelings of the same graphs.
    pub fn counting_instances(&self) -> BTreeSet<EdgeNeighborhood> {
        self.close_under(false)
    }

    fn close_under(&self, twists: bool) -> BTreeSet<EdgeNeighborhood> {
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(self.clone());
        queue.push_back(self.clone());
        while let Some(nb) = queue.pop_front() {
            let push = |cand: EdgeNeighborhood, seen: &mut BTreeSet<EdgeNeighborhood>, queue: &mut VecDeque<EdgeNeighborhood>| {
                if cand.is_locked() && seen.insert(cand.clone()) {
                    queue.push_back(cand);
                }
            };
            push(nb.inverted(), &mut seen, &mut queue);
            push(nb.reflected(), &mut seen, &mut queue);
            for (x, y) in extremity_variants(&nb.first, twists)
                .into_iter()
                .map(|x| (x, nb.second.clone()))
                .chain(
                    extremity_variants(&nb.second, twists)
                        .into_iter()
                        .map(|y| (nb.first.clone(), y)),
                )
            {
                push(EdgeNeighborhood { first: x, second: y }, &mut seen, &mut queue);
            }
        }
        seen
    }

    /// Least presentation in the counting closure.
    pub fn canonical(&self) -> EdgeNeighborhood {
        self.counting_instances().into_iter().next().unwrap()
    }

    pub fn recolored(&self, edge_map: &[EdgeColor], face_map: &[u8]) -> EdgeNeighborhood {
        EdgeNeighborhood {
            first: self.first.recolored(edge_map, face_map),
            second: self.second.recolored(edge_map, face_map),
        }
    }

    pub fn to_text(&self) -> String {
        format!("{}|{}", self.first.to_text(), self.second.to_text())
    }

    pub fn from_text(s: &str) -> Result<EdgeNeighborhood> {
        let (a, b) = s
            .split_once('|')
            .ok_or_else(|| Error::user(format!("malformed neighborhood `{s}`")))?;
        EdgeNeighborhood::new(VectorPair::from_text(a)?, VectorPair::from_text(b)?)
    }
}

/// Single-extremity presentations reachable by one block operation that
/// keeps the central edge in place with its rotation sense. A twist whose
/// block holds the central edge at its middle fixes the position but
/// reverses the sense there; it only extends to the neighborhood jointly
/// with the symmetry operation, so it is excluded even when `twists` is on.
fn extremity_variants(side: &VectorPair, twists: bool) -> Vec<VectorPair> {
    let mut out = Vec::new();
    let blocks = side.blocks();
    if twists {
        for b in 0..blocks.len() {
            if let Ok((img, m)) = side.twisted(b) {
                if m.perm[0] == 0 && m.sign[0] == 1 {
                    out.push(img);
                }
            }
        }
    }
    if blocks.len() >= 2 {
        for i in 0..blocks.len() - 1 {
            let mut sigma: Vec<usize> = (0..blocks.len()).collect();
            sigma.swap(i, i + 1);
            let (img, m) = side.rearranged(&sigma).unwrap();
            // re-anchor the central edge at position 0
            out.push(img.rotated(m.perm[0] as usize).0);
        }
    }
    out
}

/// Spec-level wrappers.
pub fn neighborhood_invert(nb: &EdgeNeighborhood) -> EdgeNeighborhood {
    nb.inverted()
}

pub fn neighborhood_reflect(nb: &EdgeNeighborhood) -> EdgeNeighborhood {
    nb.reflected()
}

pub fn neighborhood_twist(
    nb: &EdgeNeighborhood,
    extremity: usize,
    block: usize,
) -> Result<EdgeNeighborhood> {
    nb.twisted(extremity, block)
}

/// `true` when both extremities of `nb` are isomorphic to `pair`.
pub fn coherent(nb: &EdgeNeighborhood, pair: &VectorPair) -> bool {
    nb.coherent(pair)
}

/// All valid, coherent neighborhoods of one color over a pair, one
/// canonical representative per isomorphism class. When the color has two
/// equivalence classes, each class must sit at one extremity.
pub fn enumerate_neighborhoods(
    universe: &PairUniverse,
    color: EdgeColor,
) -> Result<Vec<EdgeNeighborhood>> {
    let (eq, _) = universe.eq_count(color)?;
    let anchored = universe.anchored_at(color);
    let mut canon: BTreeSet<EdgeNeighborhood> = BTreeSet::new();
    for x in &anchored {
        for y in &anchored {
            let nb = EdgeNeighborhood {
                first: x.clone(),
                second: y.clone(),
            };
            if !nb.is_locked() {
                continue;
            }
            if eq == 2 {
                let cx = universe.position_class_of_anchored(x).unwrap();
                let cy = universe.position_class_of_anchored(y).unwrap();
                if cx == cy {
                    continue;
                }
            }
            canon.insert(nb.canonical());
        }
    }
    Ok(canon.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair_of(text: &str) -> VectorPair {
        VectorPair::from_text(text).unwrap()
    }

    /// The worked degree-5 r-neighborhood (colors r,b,g = a1,a2,a3 and
    /// faces inf,f1,f2 standing for the infinite color, γ and α).
    fn sample_r_neighborhood() -> EdgeNeighborhood {
        EdgeNeighborhood::new(
            pair_of("a1,a3,a2,a1,a1/inf,f2,f1,inf,f1"),
            pair_of("a1,a2,a3,a1,a1/f1,f2,inf,f1,inf"),
        )
        .unwrap()
    }

    fn sample_pair() -> VectorPair {
        pair_of("a1,a1,a2,a3,a1/inf,f1,f2,inf,f1")
    }

    #[test]
    fn sample_neighborhood_is_locked_and_coherent() {
        let nb = sample_r_neighborhood();
        assert_eq!(nb.color(), 0);
        assert_eq!(nb.separator(), (FaceColor::Infinite, FaceColor::Finite(0)));
        assert!(nb.coherent(&sample_pair()));
    }

    #[test]
    fn invert_is_involution_and_orbit_preserving() {
        let nb = sample_r_neighborhood();
        assert_eq!(nb.inverted().inverted(), nb);
        assert_eq!(nb.inverted().canonical(), nb.canonical());
        assert_eq!(nb.reflected().canonical(), nb.canonical());
    }

    #[test]
    fn mirror_extremities_fixed_by_invert_then_reflect() {
        let nb = sample_r_neighborhood();
        let back = nb.inverted().reflected();
        assert_eq!(back.canonical(), nb.canonical());
        // the two extremities really are mirror images up to rotation
        let refl = nb.first().reflected().0;
        let rotations: Vec<VectorPair> =
            (0..5).map(|s| refl.rotated(s).0).collect();
        assert!(rotations.contains(nb.second()));
    }

    #[test]
    fn twist_moving_central_edge_is_rejected() {
        let nb = sample_r_neighborhood();
        // block {3,4} of the first extremity holds the central edge off-center
        let blocks = nb.first().blocks();
        let moving = (0..blocks.len())
            .find(|&b| blocks[b].contains(&0) && blocks[b].len() % 2 == 0)
            .unwrap();
        assert!(nb.twisted(0, moving).is_err());
    }

    #[test]
    fn incoherent_mutation_detected() {
        let nb = sample_r_neighborhood();
        // swap two face colors at one extremity: no longer isomorphic to the pair
        let mut faces = nb.first().faces().to_vec();
        faces.swap(1, 2);
        let mutated = VectorPair::new(nb.first().edges().to_vec(), faces).unwrap();
        assert!(!EdgeNeighborhood { first: mutated, second: nb.second().clone() }
            .coherent(&sample_pair()));
    }

    #[test]
    fn same_and_reflected_far_stars_are_distinct_without_infinite_faces() {
        // degree-5 pair without infinite faces: a color whose neighborhood
        // either preserves or reverses the rotation sense gives two
        // non-isomorphic neighborhoods
        let p = pair_of("a1,a2,a2,a3,a1/f1,f2,f1,f1,f3");
        let (x, _) = p.rotated(3);
        let same = EdgeNeighborhood::new(x.clone(), x.clone()).unwrap();
        let refl = EdgeNeighborhood::new(x.clone(), x.reflected().0).unwrap();
        assert_ne!(same.canonical(), refl.canonical());
    }

    #[test]
    fn enumerated_neighborhoods_contain_the_sample() {
        let u = PairUniverse::new(sample_pair());
        let nbs = enumerate_neighborhoods(&u, 0).unwrap();
        let canon = sample_r_neighborhood().canonical();
        assert!(nbs.contains(&canon));
        for nb in &nbs {
            assert!(nb.coherent(&sample_pair()));
        }
    }

    #[test]
    fn eq_two_forces_classes_on_both_extremities() {
        let u = PairUniverse::new(sample_pair());
        // r has classes {0,4} and {1}: every enumerated r-neighborhood must
        // join configurations from distinct position classes
        for nb in enumerate_neighborhoods(&u, 0).unwrap() {
            let cx = u.position_class_of_anchored(nb.first()).unwrap();
            let cy = u.position_class_of_anchored(nb.second()).unwrap();
            assert_ne!(cx, cy);
        }
    }

    #[test]
    fn neighborhood_text_round_trip() {
        let nb = sample_r_neighborhood();
        assert_eq!(EdgeNeighborhood::from_text(&nb.to_text()).unwrap(), nb);
    }
}
