//! Locked edge/face vectors around a vertex and their isomorphisms.
//!
//! A [`VectorPair`] stores the cyclic sequence of edge colors and face colors
//! around a vertex, locked so that edge `i` separates face `i` and face
//! `i-1` (all indices cyclic, 0-based here). Equivalently face `i` lies in
//! the corner between edges `i` and `i+1`.
//!
//! The isomorphisms of a pair are generated by rotations, the reflection,
//! block rearrangements and block twists, where blocks are the maximal runs
//! of edges not separated by an infinite face. Twists and rearrangements
//! exist only in the presence of infinite faces. [`PairUniverse`] computes
//! the full closure of a pair under these generators while tracking, for
//! every image, how positions move and whether the local rotation sense is
//! reversed; from that it derives canonical forms, position equivalence
//! classes and configuration classes.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use crate::color::{edge_color_name, parse_edge_color, parse_face_color, ColorSet, EdgeColor, FaceColor};
use crate::{Error, Result};

/// A locked pair of edge and face color vectors of some degree `d >= 2`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VectorPair {
    edges: Vec<EdgeColor>,
    faces: Vec<FaceColor>,
}

impl fmt::Debug for VectorPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

/// How a transformation moves positions: `perm[j]` is the image position of
/// source position `j`, and `sign[j]` is `-1` when the local rotation sense
/// at `j` is reversed by the transformation.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PosMap {
    pub perm: Vec<u8>,
    pub sign: Vec<i8>,
}

impl PosMap {
    pub fn identity(d: usize) -> Self {
        PosMap {
            perm: (0..d as u8).collect(),
            sign: vec![1; d],
        }
    }

    /// The composite "self, then `next`".
    pub fn then(&self, next: &PosMap) -> PosMap {
        let d = self.perm.len();
        let mut perm = vec![0u8; d];
        let mut sign = vec![1i8; d];
        for j in 0..d {
            let mid = self.perm[j] as usize;
            perm[j] = next.perm[mid];
            sign[j] = self.sign[j] * next.sign[mid];
        }
        PosMap { perm, sign }
    }

    /// Source position that lands on image position `i`.
    pub fn preimage(&self, i: usize) -> usize {
        self.perm.iter().position(|&p| p as usize == i).unwrap()
    }

    pub fn is_identity(&self) -> bool {
        self.sign.iter().all(|&s| s == 1)
            && self.perm.iter().enumerate().all(|(j, &p)| p as usize == j)
    }
}

impl VectorPair {
    pub fn new(edges: Vec<EdgeColor>, faces: Vec<FaceColor>) -> Result<Self> {
        if edges.len() != faces.len() {
            return Err(Error::user("edge and face vectors must have equal length"));
        }
        if edges.len() < 2 {
            return Err(Error::user("degree must be at least 2"));
        }
        Ok(VectorPair { edges, faces })
    }

    pub fn degree(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[EdgeColor] {
        &self.edges
    }

    pub fn faces(&self) -> &[FaceColor] {
        &self.faces
    }

    pub fn edge(&self, i: usize) -> EdgeColor {
        self.edges[i % self.degree()]
    }

    pub fn face(&self, i: usize) -> FaceColor {
        self.faces[i % self.degree()]
    }

    /// Face on the other side of edge `i` (the one it separates from face `i`).
    pub fn face_before(&self, i: usize) -> FaceColor {
        let d = self.degree();
        self.faces[(i + d - 1) % d]
    }

    pub fn colors(&self) -> ColorSet {
        let mut ec: Vec<EdgeColor> = self.edges.clone();
        ec.sort_unstable();
        ec.dedup();
        let mut fc: Vec<FaceColor> = self.faces.clone();
        fc.sort();
        fc.dedup();
        ColorSet {
            edge_colors: ec,
            face_colors: fc,
        }
    }

    pub fn infinite_face_count(&self) -> usize {
        self.faces.iter().filter(|f| f.is_infinite()).count()
    }

    /// Maximal runs of edge positions not separated by an infinite face,
    /// in cyclic order. Without infinite faces there is a single block
    /// holding every position.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let d = self.degree();
        let inf_positions: Vec<usize> = (0..d).filter(|&i| self.faces[i].is_infinite()).collect();
        if inf_positions.is_empty() {
            return vec![(0..d).collect()];
        }
        // A block starts right after each infinite face.
        let mut blocks = Vec::new();
        for &end in &inf_positions {
            let start = (end + 1) % d;
            let mut block = vec![start];
            let mut cur = start;
            while !self.faces[cur].is_infinite() {
                cur = (cur + 1) % d;
                block.push(cur);
            }
            blocks.push(block);
        }
        blocks.sort_by_key(|b| b[0]);
        blocks
    }

    /// Cyclic shift: edge `s` of the input becomes edge `0` of the output.
    pub fn rotated(&self, s: usize) -> (VectorPair, PosMap) {
        let d = self.degree();
        let s = s % d;
        let edges = (0..d).map(|i| self.edges[(i + s) % d]).collect();
        let faces = (0..d).map(|i| self.faces[(i + s) % d]).collect();
        let perm = (0..d).map(|j| ((j + d - s) % d) as u8).collect();
        (VectorPair { edges, faces }, PosMap { perm, sign: vec![1; d] })
    }

    /// Reversal of the rotation sense, fixing position 0.
    ///
    /// After reversing, edge 0 must still separate its two original faces,
    /// which forces the face re-indexing `faces'[i] = faces[d-1-i]`.
    pub fn reflected(&self) -> (VectorPair, PosMap) {
        let d = self.degree();
        let edges = (0..d).map(|i| self.edges[(d - i) % d]).collect();
        let faces = (0..d).map(|i| self.faces[(d - 1 - i) % d]).collect();
        let perm = (0..d).map(|j| ((d - j) % d) as u8).collect();
        (VectorPair { edges, faces }, PosMap { perm, sign: vec![-1; d] })
    }

    /// Reverses one block in place; the faces inside the block reverse with
    /// it and the delimiting infinite faces stay put.
    pub fn twisted(&self, block_index: usize) -> Result<(VectorPair, PosMap)> {
        if self.infinite_face_count() == 0 {
            return Err(Error::user(
                "twist requires an infinite face; reflect the whole pair instead",
            ));
        }
        let blocks = self.blocks();
        let block = blocks
            .get(block_index)
            .ok_or_else(|| Error::user(format!("block index {block_index} out of range")))?;
        let d = self.degree();
        let k = block.len();
        let mut edges = self.edges.clone();
        let mut faces = self.faces.clone();
        let mut perm: Vec<u8> = (0..d as u8).collect();
        let mut sign = vec![1i8; d];
        for t in 0..k {
            edges[block[t]] = self.edges[block[k - 1 - t]];
            perm[block[k - 1 - t]] = block[t] as u8;
            sign[block[t]] = -1;
        }
        for t in 0..k.saturating_sub(1) {
            faces[block[t]] = self.faces[block[k - 2 - t]];
        }
        Ok((VectorPair { edges, faces }, PosMap { perm, sign }))
    }

    /// Reorders the blocks by `sigma` (new slot `i` holds old block
    /// `sigma[i]`), laying them out from position 0.
    pub fn rearranged(&self, sigma: &[usize]) -> Result<(VectorPair, PosMap)> {
        let blocks = self.blocks();
        let t = blocks.len();
        if t < 2 {
            if sigma.iter().enumerate().all(|(i, &s)| i == s) {
                return Ok((self.clone(), PosMap::identity(self.degree())));
            }
            return Err(Error::user("no blocks to rearrange"));
        }
        if sigma.len() != t {
            return Err(Error::user("block permutation has wrong length"));
        }
        let mut seen = vec![false; t];
        for &s in sigma {
            if s >= t || seen[s] {
                return Err(Error::user("invalid block permutation"));
            }
            seen[s] = true;
        }
        let d = self.degree();
        let mut edges = Vec::with_capacity(d);
        let mut faces = Vec::with_capacity(d);
        let mut perm = vec![0u8; d];
        for &src_block in sigma {
            let block = &blocks[src_block];
            let k = block.len();
            for (t, &p) in block.iter().enumerate() {
                perm[p] = (edges.len() + t) as u8;
            }
            edges.extend(block.iter().map(|&p| self.edges[p]));
            // interior faces, then the trailing infinite delimiter
            faces.extend(block.iter().take(k - 1).map(|&p| self.faces[p]));
            faces.push(FaceColor::Infinite);
        }
        Ok((VectorPair { edges, faces }, PosMap { perm, sign: vec![1; d] }))
    }

    /// Relabels colors so that first occurrences appear in increasing order
    /// (the infinite face color is fixed). Returns the relabeled pair.
    pub fn relabeled_minimally(&self) -> VectorPair {
        let mut edge_map: HashMap<EdgeColor, EdgeColor> = HashMap::new();
        let mut face_map: HashMap<u8, u8> = HashMap::new();
        let edges = self
            .edges
            .iter()
            .map(|&c| {
                let next = edge_map.len() as u8;
                *edge_map.entry(c).or_insert(next)
            })
            .collect();
        let faces = self
            .faces
            .iter()
            .map(|&c| match c {
                FaceColor::Infinite => FaceColor::Infinite,
                FaceColor::Finite(k) => {
                    let next = face_map.len() as u8;
                    FaceColor::Finite(*face_map.entry(k).or_insert(next))
                }
            })
            .collect();
        VectorPair { edges, faces }
    }

    /// Applies explicit color bijections.
    pub fn recolored(&self, edge_map: &[EdgeColor], face_map: &[u8]) -> VectorPair {
        VectorPair {
            edges: self.edges.iter().map(|&c| edge_map[c as usize]).collect(),
            faces: self
                .faces
                .iter()
                .map(|&c| match c {
                    FaceColor::Infinite => FaceColor::Infinite,
                    FaceColor::Finite(k) => FaceColor::Finite(face_map[k as usize]),
                })
                .collect(),
        }
    }

    /// Text form `a1,a2,.../f1,inf,...`.
    pub fn to_text(&self) -> String {
        let xi: Vec<String> = self.edges.iter().map(|&c| edge_color_name(c)).collect();
        let phi: Vec<String> = self.faces.iter().map(|c| c.to_string()).collect();
        format!("{}/{}", xi.join(","), phi.join(","))
    }

    pub fn from_text(s: &str) -> Result<VectorPair> {
        let (xi, phi) = s
            .split_once('/')
            .ok_or_else(|| Error::user(format!("malformed pair `{s}`")))?;
        let edges = xi
            .split(',')
            .map(|t| parse_edge_color(t.trim()).ok_or_else(|| Error::user(format!("bad edge color `{t}`"))))
            .collect::<Result<Vec<_>>>()?;
        let faces = phi
            .split(',')
            .map(|t| parse_face_color(t.trim()).ok_or_else(|| Error::user(format!("bad face color `{t}`"))))
            .collect::<Result<Vec<_>>>()?;
        VectorPair::new(edges, faces)
    }
}

/// Spec-level convenience wrappers returning just the transformed pair.
pub fn rotate(pair: &VectorPair, s: usize) -> VectorPair {
    pair.rotated(s).0
}

pub fn reflect(pair: &VectorPair) -> VectorPair {
    pair.reflected().0
}

pub fn twist(pair: &VectorPair, block_index: usize) -> Result<VectorPair> {
    Ok(pair.twisted(block_index)?.0)
}

pub fn rearrange(pair: &VectorPair, sigma: &[usize]) -> Result<VectorPair> {
    Ok(pair.rearranged(sigma)?.0)
}

/// Union-find over a fixed element range.
#[derive(Clone)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Full closure of a pair under its isomorphism generators, with position
/// tracking. Everything downstream (canonical forms, equivalence classes,
/// configurations, neighborhoods) reads off this structure.
pub struct PairUniverse {
    pub base: VectorPair,
    /// All distinct images of the base pair.
    pub images: BTreeSet<VectorPair>,
    /// One witness map per image (base -> image).
    pub anchor: HashMap<VectorPair, PosMap>,
    /// All maps fixing the base pair.
    pub automorphisms: Vec<PosMap>,
    /// Equivalence class id per position (positions in the same class are
    /// related by an automorphism).
    pub position_class: Vec<usize>,
    /// Configuration class per (position, direction); index `2*pos + dir`
    /// with dir 0 = positive, 1 = negative.
    pub config_class: Vec<usize>,
    pub config_count: usize,
}

fn generator_images(pair: &VectorPair) -> Vec<(VectorPair, PosMap)> {
    let mut out = Vec::new();
    out.push(pair.rotated(1));
    out.push(pair.reflected());
    if pair.infinite_face_count() > 0 {
        let blocks = pair.blocks();
        for b in 0..blocks.len() {
            out.push(pair.twisted(b).unwrap());
        }
        if blocks.len() >= 2 {
            for i in 0..blocks.len() - 1 {
                let mut sigma: Vec<usize> = (0..blocks.len()).collect();
                sigma.swap(i, i + 1);
                out.push(pair.rearranged(&sigma).unwrap());
            }
        }
    }
    out
}

/// All distinct images of `pair` under its isomorphisms (no map tracking).
pub fn pair_images(pair: &VectorPair) -> BTreeSet<VectorPair> {
    let mut seen: BTreeSet<VectorPair> = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(pair.clone());
    queue.push_back(pair.clone());
    while let Some(p) = queue.pop_front() {
        for (img, _) in generator_images(&p) {
            if seen.insert(img.clone()) {
                queue.push_back(img);
            }
        }
    }
    seen
}

impl PairUniverse {
    pub fn new(base: VectorPair) -> Self {
        let d = base.degree();
        let mut seen: HashMap<(VectorPair, Vec<u8>, Vec<i8>), ()> = HashMap::new();
        let mut queue: VecDeque<(VectorPair, PosMap)> = VecDeque::new();
        let id = PosMap::identity(d);
        seen.insert((base.clone(), id.perm.clone(), id.sign.clone()), ());
        queue.push_back((base.clone(), id));

        let mut images = BTreeSet::new();
        let mut anchor: HashMap<VectorPair, PosMap> = HashMap::new();
        let mut automorphisms = Vec::new();

        while let Some((p, m)) = queue.pop_front() {
            if images.insert(p.clone()) {
                anchor.insert(p.clone(), m.clone());
            }
            if p == base {
                automorphisms.push(m.clone());
            }
            for (img, gm) in generator_images(&p) {
                let composed = m.then(&gm);
                let key = (img.clone(), composed.perm.clone(), composed.sign.clone());
                if !seen.contains_key(&key) {
                    seen.insert(key, ());
                    queue.push_back((img, composed));
                }
            }
        }

        let mut pos_uf = UnionFind::new(d);
        let mut cfg_uf = UnionFind::new(2 * d);
        for auto in &automorphisms {
            for j in 0..d {
                let pj = auto.perm[j] as usize;
                pos_uf.union(j, pj);
                for dir in 0..2 {
                    let image_dir = if auto.sign[j] < 0 { dir ^ 1 } else { dir };
                    cfg_uf.union(2 * j + dir, 2 * pj + image_dir);
                }
            }
        }
        let position_class = normalize_classes((0..d).map(|j| pos_uf.find(j)).collect());
        let config_class = normalize_classes((0..2 * d).map(|x| cfg_uf.find(x)).collect());
        let config_count = config_class.iter().max().map_or(0, |m| m + 1);

        PairUniverse {
            base,
            images,
            anchor,
            automorphisms,
            position_class,
            config_class,
            config_count,
        }
    }

    pub fn degree(&self) -> usize {
        self.base.degree()
    }

    /// Configuration class of (position, direction), direction `true` = positive.
    pub fn config_of(&self, pos: usize, positive: bool) -> usize {
        self.config_class[2 * pos + usize::from(!positive)]
    }

    /// Configuration class of the central edge of an anchored image: the
    /// image must read the base pair at some position, in some sense; the
    /// class of that (position, sense) pair.
    pub fn config_of_anchored(&self, anchored: &VectorPair) -> Option<usize> {
        let m = self.anchor.get(anchored)?;
        let src = m.preimage(0);
        Some(self.config_of(src, m.sign[src] > 0))
    }

    /// Position class of the central edge of an anchored image.
    pub fn position_class_of_anchored(&self, anchored: &VectorPair) -> Option<usize> {
        let m = self.anchor.get(anchored)?;
        Some(self.position_class[m.preimage(0)])
    }

    /// All images whose central (position 0) edge carries `color`.
    pub fn anchored_at(&self, color: EdgeColor) -> Vec<VectorPair> {
        self.images
            .iter()
            .filter(|p| p.edges()[0] == color)
            .cloned()
            .collect()
    }

    /// Number of equivalence classes among the positions carrying `color`.
    pub fn eq_count(&self, color: EdgeColor) -> Result<(usize, Vec<BTreeSet<usize>>)> {
        let positions: Vec<usize> = (0..self.degree())
            .filter(|&i| self.base.edges()[i] == color)
            .collect();
        if positions.is_empty() {
            return Err(Error::user(format!(
                "edge color {} does not occur in the pair",
                edge_color_name(color)
            )));
        }
        let mut classes: HashMap<usize, BTreeSet<usize>> = HashMap::new();
        for &p in &positions {
            classes.entry(self.position_class[p]).or_default().insert(p);
        }
        let mut sets: Vec<BTreeSet<usize>> = classes.into_values().collect();
        sets.sort_by(|a, b| a.iter().next().cmp(&b.iter().next()));
        Ok((sets.len(), sets))
    }
}

fn normalize_classes(raw: Vec<usize>) -> Vec<usize> {
    let mut remap: HashMap<usize, usize> = HashMap::new();
    raw.into_iter()
        .map(|r| {
            let next = remap.len();
            *remap.entry(r).or_insert(next)
        })
        .collect()
}

/// Deterministic least representative of the isomorphism class of `pair`,
/// folding in minimal color relabeling. Two pairs are isomorphic up to
/// color bijection iff their canonical forms are equal.
pub fn canonical_pair(pair: &VectorPair) -> VectorPair {
    pair_images(pair)
        .iter()
        .map(|img| img.relabeled_minimally())
        .min()
        .unwrap()
}

/// Spec-level operation: equivalence classes of the positions of `color`.
pub fn eq_count(pair: &VectorPair, color: EdgeColor) -> Result<(usize, Vec<BTreeSet<usize>>)> {
    PairUniverse::new(pair.clone()).eq_count(color)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn pair_of(text: &str) -> VectorPair {
        VectorPair::from_text(text).unwrap()
    }

    /// The worked degree-5 pair with two infinite faces:
    /// edges r,r,b,g,r -> a1,a1,a2,a3,a1; faces β,γ,α,β,γ with β infinite.
    pub(crate) fn sample_pair() -> VectorPair {
        pair_of("a1,a1,a2,a3,a1/inf,f1,f2,inf,f1")
    }

    #[test]
    fn locking_is_preserved_by_generators() {
        let p = sample_pair();
        for (img, m) in [p.rotated(2), p.reflected(), p.twisted(0).unwrap()] {
            let d = p.degree();
            for j in 0..d {
                // image edge at perm[j] must carry the same color as source edge j
                assert_eq!(img.edges()[m.perm[j] as usize], p.edges()[j]);
                // and separate the same two face colors (as a set)
                let src = {
                    let mut s = [p.face(j), p.face_before(j)];
                    s.sort();
                    s
                };
                let i = m.perm[j] as usize;
                let mut dst = [img.face(i), img.face_before(i)];
                dst.sort();
                assert_eq!(src, dst);
            }
        }
    }

    #[test]
    fn rotation_inverse_composes_to_identity() {
        let p = sample_pair();
        for s in 0..p.degree() {
            assert_eq!(rotate(&rotate(&p, s), p.degree() - s), p);
        }
    }

    #[test]
    fn reflect_is_an_involution() {
        let p = sample_pair();
        assert_eq!(reflect(&reflect(&p)), p);
        let q = pair_of("a1,a1,a1/f1,f1,f1");
        // fully symmetric pair: reflection is the pair itself
        assert_eq!(reflect(&q), q);
    }

    #[test]
    fn blocks_of_sample_pair() {
        // infinite faces after edges 0 and 3 split {1,2,3} and {4,0}
        let p = sample_pair();
        assert_eq!(p.blocks(), vec![vec![1, 2, 3], vec![4, 0]]);
    }

    #[test]
    fn twist_is_involution_and_respects_palindromes() {
        let p = sample_pair();
        let (t, _) = p.twisted(1).unwrap();
        // block {4,0} carries r,r: twisting it fixes the vectors
        assert_eq!(t, p);
        let (t0, _) = p.twisted(0).unwrap();
        assert_ne!(t0, p);
        assert_eq!(t0.twisted(0).unwrap().0, p);
    }

    #[test]
    fn twist_needs_infinite_faces() {
        let q = pair_of("a1,a2,a1,a2/f1,f1,f1,f1");
        assert!(twist(&q, 0).is_err());
    }

    #[test]
    fn rearrange_two_blocks_equals_a_rotation() {
        // with two blocks, swapping them is the same as some rotation
        let p = sample_pair();
        let (r, _) = p.rearranged(&[1, 0]).unwrap();
        let rotations: Vec<VectorPair> = (0..p.degree()).map(|s| rotate(&p, s)).collect();
        assert!(rotations.contains(&r));
    }

    #[test]
    fn rearrange_single_block_rejects_nonidentity() {
        let q = pair_of("a1,a1,a1/f1,f1,f1");
        assert!(rearrange(&q, &[0]).is_ok());
        assert!(q.rearranged(&[1, 0]).is_err());
    }

    #[test]
    fn three_cycle_rearrangement_has_order_three() {
        let p = pair_of("a1,a2,a3/inf,inf,inf");
        let sigma = [1, 2, 0];
        let mut q = p.clone();
        for _ in 0..3 {
            q = rearrange(&q, &sigma).unwrap();
        }
        assert_eq!(q, p);
    }

    #[test]
    fn canonical_form_is_orbit_constant_and_idempotent() {
        let p = sample_pair();
        let c = canonical_pair(&p);
        assert_eq!(canonical_pair(&c), c);
        for s in 0..p.degree() {
            assert_eq!(canonical_pair(&rotate(&p, s)), c);
        }
        assert_eq!(canonical_pair(&reflect(&p)), c);
        for img in pair_images(&p) {
            assert_eq!(canonical_pair(&img), c);
        }
    }

    #[test]
    fn eq_classes_of_sample_pair() {
        // the twist of block {4,0} exchanges the two r-edges around the
        // infinite faces, so r splits into classes {0,4} and {1}
        let p = sample_pair();
        let (n, classes) = eq_count(&p, 0).unwrap();
        assert_eq!(n, 2);
        assert_eq!(classes[0], BTreeSet::from([0, 4]));
        assert_eq!(classes[1], BTreeSet::from([1]));
        // g occurs once
        let (n, classes) = eq_count(&p, 2).unwrap();
        assert_eq!(n, 1);
        assert_eq!(classes[0], BTreeSet::from([3]));
        assert!(eq_count(&p, 7).is_err());
    }

    #[test]
    fn configurations_of_sample_pair() {
        // 1-=5+ and 1+=5- merge (0-based: positions 0 and 4), all others stay
        let u = PairUniverse::new(sample_pair());
        assert_eq!(u.config_count, 8);
        assert_eq!(u.config_of(0, true), u.config_of(4, false));
        assert_eq!(u.config_of(0, false), u.config_of(4, true));
        assert_ne!(u.config_of(1, true), u.config_of(1, false));
    }

    #[test]
    fn fully_symmetric_star_has_one_configuration() {
        let u = PairUniverse::new(pair_of("a1,a1,a1/f1,f1,f1"));
        assert_eq!(u.config_count, 1);
    }

    #[test]
    fn trivial_pair_has_two_d_configurations() {
        // no automorphisms: every (position, direction) is its own class
        let u = PairUniverse::new(pair_of("a1,a2,a2,a3,a1/f1,f2,f1,f1,f3"));
        assert_eq!(u.config_count, 10);
    }

    #[test]
    fn pair_text_round_trip() {
        let p = sample_pair();
        assert_eq!(VectorPair::from_text(&p.to_text()).unwrap(), p);
    }
}
