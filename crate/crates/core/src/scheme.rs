//! Labeling schemes: a locked vector pair plus one edge neighborhood per
//! edge color. A valid scheme is the finite certificate of a
//! vertex-transitive TLF-planar graph.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::color::{edge_color_name, EdgeColor, FaceColor};
use crate::neighborhood::EdgeNeighborhood;
use crate::pair::{pair_images, PairUniverse, VectorPair};
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LabelingScheme {
    pair: VectorPair,
    neighborhoods: BTreeMap<EdgeColor, EdgeNeighborhood>,
}

/// A failed structural condition, reported as data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// Condition (ii): more than two equivalence classes for a color.
    EqCountExceeded { color: EdgeColor, count: usize },
    /// Condition (iii): no neighborhood for a color occurring in the pair.
    MissingNeighborhood { color: EdgeColor },
    /// Condition (iii): a neighborhood keyed by a different central color.
    WrongColor { color: EdgeColor },
    /// Condition (iii): extremities not isomorphic to the pair.
    Incoherent { color: EdgeColor },
    /// Condition (iii): locking across the central edge broken.
    Unlocked { color: EdgeColor },
    /// Condition (iii): with two equivalence classes, both extremities lie
    /// in the same class.
    ClassesNotOnExtremities { color: EdgeColor },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EqCountExceeded { color, count } => {
                write!(f, "{} has {} equivalence classes (max 2)", edge_color_name(*color), count)
            }
            Violation::MissingNeighborhood { color } => {
                write!(f, "no neighborhood for {}", edge_color_name(*color))
            }
            Violation::WrongColor { color } => {
                write!(f, "neighborhood keyed {} has another central color", edge_color_name(*color))
            }
            Violation::Incoherent { color } => {
                write!(f, "neighborhood {} not coherent with the pair", edge_color_name(*color))
            }
            Violation::Unlocked { color } => {
                write!(f, "neighborhood {} is not locked", edge_color_name(*color))
            }
            Violation::ClassesNotOnExtremities { color } => {
                write!(f, "both extremities of {} lie in one equivalence class", edge_color_name(*color))
            }
        }
    }
}

impl LabelingScheme {
    pub fn new(
        pair: VectorPair,
        neighborhoods: BTreeMap<EdgeColor, EdgeNeighborhood>,
    ) -> LabelingScheme {
        LabelingScheme {
            pair,
            neighborhoods,
        }
    }

    pub fn pair(&self) -> &VectorPair {
        &self.pair
    }

    pub fn degree(&self) -> usize {
        self.pair.degree()
    }

    pub fn neighborhoods(&self) -> &BTreeMap<EdgeColor, EdgeNeighborhood> {
        &self.neighborhoods
    }

    pub fn neighborhood(&self, color: EdgeColor) -> Result<&EdgeNeighborhood> {
        self.neighborhoods
            .get(&color)
            .ok_or_else(|| Error::user(format!("no neighborhood for {}", edge_color_name(color))))
    }

    /// Number of infinite faces around a vertex.
    pub fn infinite_face_count(&self) -> usize {
        self.pair.infinite_face_count()
    }

    /// Structural conditions (i)-(iii); violations are data, not failures.
    /// Automaton-level face equivalence is checked separately.
    pub fn validate(&self, universe: &PairUniverse) -> Vec<Violation> {
        let mut out = Vec::new();
        let colors = self.pair.colors().edge_colors;
        for &c in &colors {
            let (eq, _) = universe.eq_count(c).expect("color occurs in the pair");
            if eq > 2 {
                out.push(Violation::EqCountExceeded { color: c, count: eq });
            }
            let Some(nb) = self.neighborhoods.get(&c) else {
                out.push(Violation::MissingNeighborhood { color: c });
                continue;
            };
            if nb.color() != c {
                out.push(Violation::WrongColor { color: c });
                continue;
            }
            if nb.first().degree() != self.degree()
                || nb.first().edges()[0] != nb.second().edges()[0]
                || nb.first().faces()[0] != nb.second().faces()[self.degree() - 1]
                || nb.first().faces()[self.degree() - 1] != nb.second().faces()[0]
            {
                out.push(Violation::Unlocked { color: c });
                continue;
            }
            let cx = universe.position_class_of_anchored(nb.first());
            let cy = universe.position_class_of_anchored(nb.second());
            match (cx, cy) {
                (Some(cx), Some(cy)) => {
                    if eq == 2 && cx == cy {
                        out.push(Violation::ClassesNotOnExtremities { color: c });
                    }
                }
                _ => out.push(Violation::Incoherent { color: c }),
            }
        }
        out
    }

    /// Canonical serialization, constant on isomorphism classes and color
    /// bijections: the least key over all images of the pair, each relabeled
    /// by first occurrence, with per-color canonical neighborhoods. The key
    /// is itself a parseable scheme text, so the canonical representative
    /// can be rebuilt from it.
    pub fn canonical_key(&self) -> String {
        let mut best: Option<String> = None;
        for img in pair_images(&self.pair) {
            let (edge_map, face_map) = relabel_maps(&img);
            let pair_txt = img.recolored(&edge_map, &face_map).to_text();
            let mut parts: Vec<(EdgeColor, String)> = self
                .neighborhoods
                .values()
                .map(|nb| {
                    let re = nb.recolored(&edge_map, &face_map);
                    (re.color(), re.canonical().to_text())
                })
                .collect();
            parts.sort();
            let key = format!(
                "pair={};{}",
                pair_txt,
                parts
                    .into_iter()
                    .map(|(c, t)| format!("nb:{}={}", edge_color_name(c), t))
                    .collect::<Vec<_>>()
                    .join(";")
            );
            if best.as_ref().is_none_or(|b| key < *b) {
                best = Some(key);
            }
        }
        best.unwrap()
    }

    pub fn recolored(&self, edge_map: &[EdgeColor], face_map: &[u8]) -> LabelingScheme {
        let neighborhoods = self
            .neighborhoods
            .values()
            .map(|nb| {
                let re = nb.recolored(edge_map, face_map);
                (re.color(), re)
            })
            .collect();
        LabelingScheme {
            pair: self.pair.recolored(edge_map, face_map),
            neighborhoods,
        }
    }

    pub fn to_text(&self) -> String {
        let nbs: Vec<String> = self
            .neighborhoods
            .iter()
            .map(|(c, nb)| format!("nb:{}={}", edge_color_name(*c), nb.to_text()))
            .collect();
        format!("pair={};{}", self.pair.to_text(), nbs.join(";"))
    }

    pub fn from_text(s: &str) -> Result<LabelingScheme> {
        let mut pair = None;
        let mut nbs = BTreeMap::new();
        for field in s.split(';') {
            let field = field.trim();
            if field.is_empty() {
                continue;
            }
            if let Some(p) = field.strip_prefix("pair=") {
                pair = Some(VectorPair::from_text(p)?);
            } else if let Some(rest) = field.strip_prefix("nb:") {
                let (_, nb_txt) = rest
                    .split_once('=')
                    .ok_or_else(|| Error::user(format!("malformed field `{field}`")))?;
                let nb = EdgeNeighborhood::from_text(nb_txt)?;
                nbs.insert(nb.color(), nb);
            } else {
                return Err(Error::user(format!("unknown field `{field}`")));
            }
        }
        let pair = pair.ok_or_else(|| Error::user("scheme text lacks a pair"))?;
        Ok(LabelingScheme::new(pair, nbs))
    }
}

/// First-occurrence color maps of a pair (old color -> new color).
fn relabel_maps(pair: &VectorPair) -> (Vec<EdgeColor>, Vec<u8>) {
    let mut edge_map: HashMap<EdgeColor, EdgeColor> = HashMap::new();
    for &c in pair.edges() {
        let next = edge_map.len() as u8;
        edge_map.entry(c).or_insert(next);
    }
    let mut face_map: HashMap<u8, u8> = HashMap::new();
    for &c in pair.faces() {
        if let FaceColor::Finite(k) = c {
            let next = face_map.len() as u8;
            face_map.entry(k).or_insert(next);
        }
    }
    let mut ev = vec![0u8; 256];
    for (&old, &new) in &edge_map {
        ev[old as usize] = new;
    }
    let mut fv = vec![0u8; 256];
    for (&old, &new) in &face_map {
        fv[old as usize] = new;
    }
    (ev, fv)
}

/// Spec-level operation.
pub fn validate_scheme(scheme: &LabelingScheme) -> Vec<Violation> {
    let universe = PairUniverse::new(scheme.pair().clone());
    scheme.validate(&universe)
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    /// The worked degree-5 scheme with two infinite faces (aperiodic
    /// borders): pair a1,a1,a2,a3,a1 / inf,f1,f2,inf,f1.
    pub fn separable_scheme() -> LabelingScheme {
        LabelingScheme::from_text(
            "pair=a1,a1,a2,a3,a1/inf,f1,f2,inf,f1;\
             nb:a1=a1,a3,a2,a1,a1/inf,f2,f1,inf,f1|a1,a2,a3,a1,a1/f1,f2,inf,f1,inf;\
             nb:a2=a2,a3,a1,a1,a1/f2,inf,f1,inf,f1|a2,a1,a1,a1,a3/f1,inf,f1,inf,f2;\
             nb:a3=a3,a1,a1,a1,a2/inf,f1,inf,f1,f2|a3,a2,a1,a1,a1/f2,f1,inf,f1,inf",
        )
        .unwrap()
    }

    /// The worked 3-connected degree-5 scheme: pair a1,a2,a2,a3,a1 /
    /// f1,f2,f1,f1,f3 with a trivial stabilizer.
    pub fn three_connected_scheme() -> LabelingScheme {
        let pair = VectorPair::from_text("a1,a2,a2,a3,a1/f1,f2,f1,f1,f3").unwrap();
        let r0 = pair.clone();
        let r1 = pair.rotated(1).0;
        let r2 = pair.rotated(2).0;
        let r3 = pair.rotated(3).0;
        let r4 = pair.rotated(4).0;
        let mut nbs = BTreeMap::new();
        nbs.insert(0, EdgeNeighborhood::new(r0, r4).unwrap());
        nbs.insert(1, EdgeNeighborhood::new(r1, r2).unwrap());
        nbs.insert(2, EdgeNeighborhood::new(r3.clone(), r3).unwrap());
        LabelingScheme::new(pair, nbs)
    }
}
