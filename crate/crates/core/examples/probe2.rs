use std::collections::BTreeMap;
use tlf_planar::automaton::InvalidReason;
use tlf_planar::neighborhood::*;
use tlf_planar::pair::*;
use tlf_planar::scheme::LabelingScheme;
fn main() {
    let d: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    let (mut valid, mut indet, mut facediff) = (0usize, 0usize, 0usize);
    let mut indet_examples = Vec::new();
    for pair in tlf_planar::enumerate::enumerate_pairs(d) {
        let u = PairUniverse::new(pair.clone());
        let colors = pair.colors().edge_colors;
        let cands: Vec<Vec<EdgeNeighborhood>> = colors.iter()
            .map(|&c| enumerate_neighborhoods(&u, c).unwrap()).collect();
        if cands.iter().any(|v| v.is_empty()) { continue; }
        let mut idx = vec![0usize; colors.len()];
        'outer: loop {
            let nbs: BTreeMap<u8, EdgeNeighborhood> = colors.iter().enumerate()
                .map(|(s, &c)| (c, cands[s][idx[s]].clone())).collect();
            let scheme = LabelingScheme::new(pair.clone(), nbs);
            let a = tlf_planar::automaton::analyze_with(&scheme, &u).unwrap();
            match &a.invalid {
                None => valid += 1,
                Some(InvalidReason::IndeterminateFace { .. }) => {
                    indet += 1;
                    if indet_examples.len() < 6 && pair.infinite_face_count() > 0 {
                        indet_examples.push(scheme.to_text());
                    }
                }
                Some(InvalidReason::FaceClassesDiffer { .. }) => facediff += 1,
            }
            let mut i = 0;
            loop {
                if i == idx.len() { break 'outer; }
                idx[i] += 1;
                if idx[i] < cands[i].len() { break; }
                idx[i] = 0; i += 1;
            }
        }
    }
    println!("d={d}: valid {valid} indeterminate {indet} facediff {facediff}");
    for e in indet_examples { println!("INDET {}", e); }
}
