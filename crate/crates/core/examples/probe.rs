use std::collections::{BTreeMap, BTreeSet};
use tlf_planar::color::edge_color_name;
use tlf_planar::neighborhood::*;
use tlf_planar::pair::*;
use tlf_planar::scheme::LabelingScheme;

fn raw_candidates(u: &PairUniverse, c: u8) -> Vec<EdgeNeighborhood> {
    let (eq, _) = u.eq_count(c).unwrap();
    let anchored = u.anchored_at(c);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for x in &anchored {
        for y in &anchored {
            let Ok(nb) = EdgeNeighborhood::new(x.clone(), y.clone()) else { continue };
            if eq == 2 && u.position_class_of_anchored(x) == u.position_class_of_anchored(y) { continue; }
            let mut vs = vec![nb.clone(), nb.inverted(), nb.reflected(), nb.inverted().reflected()];
            vs.sort();
            if seen.insert(vs[0].clone()) { out.push(vs[0].clone()); }
        }
    }
    out
}

fn weak_key(s: &LabelingScheme) -> String {
    let mut best: Option<String> = None;
    for img in pair_images(s.pair()) {
        let (em, fm) = {
            let mut e: BTreeMap<u8, u8> = BTreeMap::new();
            for &c in img.edges() { let n = e.len() as u8; e.entry(c).or_insert(n); }
            let mut f: BTreeMap<u8, u8> = BTreeMap::new();
            for &c in img.faces() {
                if let tlf_planar::color::FaceColor::Finite(k) = c { let n = f.len() as u8; f.entry(k).or_insert(n); }
            }
            let mut ev = vec![0u8; 256]; for (&o, &n) in &e { ev[o as usize] = n; }
            let mut fv = vec![0u8; 256]; for (&o, &n) in &f { fv[o as usize] = n; }
            (ev, fv)
        };
        let mut parts: Vec<(u8, String)> = s.neighborhoods().values().map(|nb| {
            let re = nb.recolored(&em, &fm);
            let mut vs = vec![re.clone(), re.inverted(), re.reflected(), re.inverted().reflected()];
            vs.sort();
            (re.color(), vs[0].to_text())
        }).collect();
        parts.sort();
        let key = format!("{};{}", img.recolored(&em, &fm).to_text(),
            parts.into_iter().map(|(c, t)| format!("{}={}", edge_color_name(c), t)).collect::<Vec<_>>().join(";"));
        if best.as_ref().is_none_or(|b| key < *b) { best = Some(key); }
    }
    best.unwrap()
}

fn main() {
    let d: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let mut strong = BTreeSet::new();
    let mut weak = BTreeSet::new();
    for pair in tlf_planar::enumerate::enumerate_pairs(d) {
        let u = PairUniverse::new(pair.clone());
        let colors = pair.colors().edge_colors;
        let cands: Vec<Vec<EdgeNeighborhood>> = colors.iter().map(|&c| raw_candidates(&u, c)).collect();
        if cands.iter().any(|v| v.is_empty()) { continue; }
        let mut pair_strong = BTreeSet::new();
        let mut pair_weak = BTreeSet::new();
        let mut idx = vec![0usize; colors.len()];
        'outer: loop {
            let nbs: BTreeMap<u8, EdgeNeighborhood> = colors.iter().enumerate()
                .map(|(s, &c)| (c, cands[s][idx[s]].clone())).collect();
            let scheme = LabelingScheme::new(pair.clone(), nbs);
            if let Ok(a) = tlf_planar::automaton::analyze_with(&scheme, &u) {
                if a.is_valid() {
                    pair_strong.insert(scheme.canonical_key());
                    pair_weak.insert(weak_key(&scheme));
                }
            }
            let mut i = 0;
            loop {
                if i == idx.len() { break 'outer; }
                idx[i] += 1;
                if idx[i] < cands[i].len() { break; }
                idx[i] = 0; i += 1;
            }
        }
        if pair_strong.len() != pair_weak.len() {
            println!("pair {}: strong {} weak {}", pair.to_text(), pair_strong.len(), pair_weak.len());
        }
        strong.extend(pair_strong);
        weak.extend(pair_weak);
    }
    println!("d={d}: strong {} weak {}", strong.len(), weak.len());
}
