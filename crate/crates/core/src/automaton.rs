//! The border automaton of a labeling scheme.
//!
//! States are configurations: equivalence classes of (edge position,
//! rotation direction) under the pair's automorphisms. The `next` relation
//! steps to the adjacent edge of the star in the configured direction; the
//! `inv` relation crosses the edge through its neighborhood. Reading
//! `next . inv` repeatedly walks the border of a face, so the orbits of
//! that action are the face borders: finite faces must trace deterministic
//! cycles whose size divides the face size, while infinite faces trace
//! one-sided or branching walks and may be forced aperiodic.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use crate::color::{edge_color_name, EdgeColor, FaceColor};
use crate::pair::{PairUniverse, UnionFind};
use crate::scheme::LabelingScheme;
use crate::{Error, Result};

/// Border automaton over the configuration classes of a scheme.
pub struct BorderAutomaton {
    pub degree: usize,
    pub state_count: usize,
    /// State of (position, direction); index `2*pos` for the positive
    /// direction, `2*pos + 1` for the negative one.
    state_of: Vec<usize>,
    pub next: Vec<BTreeSet<usize>>,
    pub inv: Vec<BTreeSet<usize>>,
    /// Face color read between a state and its next.
    pub face_of: Vec<FaceColor>,
    /// Edge color underlying a state.
    pub edge_of: Vec<EdgeColor>,
    /// Representatives per state.
    pub reps: Vec<Vec<(usize, bool)>>,
}

impl BorderAutomaton {
    pub fn state(&self, pos: usize, positive: bool) -> usize {
        self.state_of[2 * pos + usize::from(!positive)]
    }

    /// Walk successors `inv(next(s))` with the color of the crossed edge.
    pub fn walk_successors(&self, s: usize) -> BTreeSet<(usize, EdgeColor)> {
        let mut out = BTreeSet::new();
        for &n in &self.next[s] {
            for &t in &self.inv[n] {
                out.insert((t, self.edge_of[n]));
            }
        }
        out
    }

    /// State holding the same positions with the direction reversed.
    pub fn mirror(&self, s: usize) -> usize {
        let &(pos, positive) = &self.reps[s][0];
        self.state(pos, !positive)
    }

    /// Connectivity over the union of `next` and `inv`, read undirected,
    /// after identifying every state with its mirror (the automaton and its
    /// direction-reversed reading describe the same borders).
    pub fn is_connected(&self) -> bool {
        if self.state_count == 0 {
            return true;
        }
        let mut adj = vec![BTreeSet::new(); self.state_count];
        for s in 0..self.state_count {
            for &t in self.next[s].iter().chain(self.inv[s].iter()) {
                adj[s].insert(t);
                adj[t].insert(s);
            }
            let m = self.mirror(s);
            adj[s].insert(m);
            adj[m].insert(s);
        }
        let mut seen = vec![false; self.state_count];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(s) = queue.pop_front() {
            for &t in &adj[s] {
                if !seen[t] {
                    seen[t] = true;
                    count += 1;
                    queue.push_back(t);
                }
            }
        }
        count == self.state_count
    }

    pub fn is_next_deterministic(&self) -> bool {
        self.next.iter().all(|s| s.len() <= 1)
    }

    fn build(scheme: &LabelingScheme, universe: &PairUniverse) -> Result<BorderAutomaton> {
        let d = scheme.degree();
        let state_of = universe.config_class.clone();
        let state_count = universe.config_count;

        let mut reps: Vec<Vec<(usize, bool)>> = vec![Vec::new(); state_count];
        for pos in 0..d {
            for (dir_idx, positive) in [(0usize, true), (1usize, false)] {
                reps[state_of[2 * pos + dir_idx]].push((pos, positive));
            }
        }

        let faces = scheme.pair().faces();
        let edges = scheme.pair().edges();
        let mut face_of = vec![None; state_count];
        let mut edge_of = vec![None; state_count];
        for (s, rs) in reps.iter().enumerate() {
            for &(pos, positive) in rs {
                let f = if positive {
                    faces[pos]
                } else {
                    faces[(pos + d - 1) % d]
                };
                let e = edges[pos];
                if *face_of[s].get_or_insert(f) != f || *edge_of[s].get_or_insert(e) != e {
                    return Err(Error::internal(
                        "configuration class mixes face or edge colors",
                    ));
                }
            }
        }

        let mut next = vec![BTreeSet::new(); state_count];
        for pos in 0..d {
            next[state_of[2 * pos]].insert(state_of[2 * ((pos + 1) % d)]);
            next[state_of[2 * pos + 1]].insert(state_of[2 * ((pos + d - 1) % d) + 1]);
        }

        let mut inv = vec![BTreeSet::new(); state_count];
        for nb in scheme.neighborhoods().values() {
            for inst in nb.instances() {
                let a = universe
                    .config_of_anchored(inst.first())
                    .ok_or_else(|| Error::internal("neighborhood extremity outside the pair orbit"))?;
                let b = universe
                    .config_of_anchored(inst.second())
                    .ok_or_else(|| Error::internal("neighborhood extremity outside the pair orbit"))?;
                inv[a].insert(b);
                inv[b].insert(a);
            }
        }

        Ok(BorderAutomaton {
            degree: d,
            state_count,
            state_of,
            next,
            inv,
            face_of: face_of.into_iter().map(Option::unwrap).collect(),
            edge_of: edge_of.into_iter().map(Option::unwrap).collect(),
            reps,
        })
    }
}

/// Border word of one face orbit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BorderWord {
    /// Finite face: the word repeated around the closed border.
    Repeat(Vec<EdgeColor>),
    /// Infinite face with a periodic bi-infinite border.
    BiPeriodic(Vec<EdgeColor>),
    /// Infinite face forced aperiodic: `head^w middle tail^w`.
    Omega {
        head: Vec<EdgeColor>,
        middle: Vec<EdgeColor>,
        tail: Vec<EdgeColor>,
    },
    /// Infinite face with branching choices, none forced aperiodic.
    Branching,
}

impl fmt::Display for BorderWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |w: &[EdgeColor]| {
            w.iter()
                .map(|&c| edge_color_name(c))
                .collect::<Vec<_>>()
                .join(" ")
        };
        match self {
            BorderWord::Repeat(w) => write!(f, "({})^n", join(w)),
            BorderWord::BiPeriodic(w) => write!(f, "({})^w", join(w)),
            BorderWord::Omega { head, middle, tail } => {
                write!(f, "({})^w {} ({})^w", join(head), join(middle), join(tail))
            }
            BorderWord::Branching => write!(f, "(branching)"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrbitKind {
    /// Deterministic cycle of the given size.
    Cycle(usize),
    /// Orbit of an infinite face.
    Infinite { aperiodic: bool },
}

/// One face orbit of the automaton: the states visited, the face color it
/// borders, and the border word.
#[derive(Clone, Debug)]
pub struct Orbit {
    pub states: Vec<usize>,
    pub face: FaceColor,
    pub kind: OrbitKind,
    pub word: BorderWord,
}

impl Orbit {
    pub fn size(&self) -> Option<usize> {
        match self.kind {
            OrbitKind::Cycle(k) => Some(k),
            OrbitKind::Infinite { .. } => None,
        }
    }
}

/// Why a scheme fails automaton-level validity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InvalidReason {
    /// A finite face's orbit is not a deterministic cycle.
    IndeterminateFace { position: usize },
    /// Two same-colored faces have inequivalent orbits, witnessed by the
    /// two face positions.
    FaceClassesDiffer { first: usize, second: usize },
}

impl fmt::Display for InvalidReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvalidReason::IndeterminateFace { position } => {
                write!(f, "face at position {position} has no determinate closed border")
            }
            InvalidReason::FaceClassesDiffer { first, second } => {
                write!(f, "same-colored faces at positions {first} and {second} are not equivalent")
            }
        }
    }
}

/// Entry of a primitive type vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PtvEntry {
    Infinite,
    Finite { period: usize, letter: FaceColor },
}

/// Face sizes as multiples of orbit periods, with one formal letter per
/// finite face color.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimitiveTypeVector {
    pub entries: Vec<PtvEntry>,
}

const LETTERS: [char; 8] = ['n', 'm', 'p', 'q', 'r', 's', 't', 'u'];

impl fmt::Display for PrimitiveTypeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut letter_of: BTreeMap<FaceColor, char> = BTreeMap::new();
        let mut parts = Vec::new();
        for e in &self.entries {
            match e {
                PtvEntry::Infinite => parts.push("inf".to_string()),
                PtvEntry::Finite { period, letter } => {
                    let next = LETTERS[letter_of.len() % LETTERS.len()];
                    let ch = *letter_of.entry(*letter).or_insert(next);
                    if *period == 1 {
                        parts.push(ch.to_string());
                    } else {
                        parts.push(format!("{period}{ch}"));
                    }
                }
            }
        }
        write!(f, "[{}]", parts.join(","))
    }
}

/// A concrete type vector: the face sizes around a vertex.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TypeVector {
    pub entries: Vec<Option<u32>>,
}

impl TypeVector {
    pub fn finite(sizes: &[u32]) -> TypeVector {
        TypeVector {
            entries: sizes.iter().map(|&k| Some(k)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn rotated(&self, s: usize) -> TypeVector {
        let d = self.entries.len();
        TypeVector {
            entries: (0..d).map(|i| self.entries[(i + s) % d]).collect(),
        }
    }

    pub fn reflected(&self) -> TypeVector {
        let d = self.entries.len();
        TypeVector {
            entries: (0..d).map(|i| self.entries[d - 1 - i]).collect(),
        }
    }

    pub fn parse(s: &str) -> Result<TypeVector> {
        let entries = s
            .split(',')
            .map(|t| {
                let t = t.trim();
                if t == "inf" {
                    Ok(None)
                } else {
                    t.parse::<u32>()
                        .map(Some)
                        .map_err(|_| Error::user(format!("bad type vector entry `{t}`")))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        if entries.len() < 2 {
            return Err(Error::user("type vector needs at least two entries"));
        }
        Ok(TypeVector { entries })
    }
}

impl fmt::Display for TypeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|e| match e {
                None => "inf".to_string(),
                Some(k) => k.to_string(),
            })
            .collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Result of matching a type vector against a primitive type vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TvCheck {
    /// The unique valuation of each formal letter.
    Valid(BTreeMap<FaceColor, u32>),
    /// First conflicting position.
    Invalid(usize),
}

/// Positional check: every finite entry at least 3, periods divide the
/// sizes, and one consistent value per letter.
pub fn validate_type_vector(ptv: &PrimitiveTypeVector, tv: &TypeVector) -> TvCheck {
    if ptv.entries.len() != tv.entries.len() {
        return TvCheck::Invalid(0);
    }
    let mut valuation: BTreeMap<FaceColor, u32> = BTreeMap::new();
    for (i, (pe, te)) in ptv.entries.iter().zip(tv.entries.iter()).enumerate() {
        match (pe, te) {
            (PtvEntry::Infinite, None) => {}
            (PtvEntry::Finite { period, letter }, Some(l)) => {
                if *l < 3 || *l % (*period as u32) != 0 {
                    return TvCheck::Invalid(i);
                }
                let a = *l / (*period as u32);
                match valuation.get(letter) {
                    Some(&prev) if prev != a => return TvCheck::Invalid(i),
                    _ => {
                        valuation.insert(*letter, a);
                    }
                }
            }
            _ => return TvCheck::Invalid(i),
        }
    }
    TvCheck::Valid(valuation)
}

/// Tries every rotation and reflection of `tv` against `ptv`; returns the
/// aligned type vector and valuation of the first match.
pub fn admits_type_vector(
    ptv: &PrimitiveTypeVector,
    tv: &TypeVector,
) -> Option<(TypeVector, BTreeMap<FaceColor, u32>)> {
    let candidates = (0..tv.len())
        .map(|s| tv.rotated(s))
        .chain((0..tv.len()).map(|s| tv.reflected().rotated(s)));
    for cand in candidates {
        if let TvCheck::Valid(v) = validate_type_vector(ptv, &cand) {
            return Some((cand, v));
        }
    }
    None
}

/// Everything the automaton tells us about one scheme.
pub struct SchemeAnalysis {
    pub automaton: BorderAutomaton,
    /// Face orbits: components of the walk relation holding at least one
    /// positive-direction state.
    pub orbits: Vec<Orbit>,
    pub invalid: Option<InvalidReason>,
    /// Present iff the scheme is valid.
    pub ptv: Option<PrimitiveTypeVector>,
    /// Some face border is forced aperiodic.
    pub aperiodic: bool,
    /// Orbit index per position (for positions in forward orbits).
    pub orbit_of_position: Vec<usize>,
}

impl SchemeAnalysis {
    pub fn is_valid(&self) -> bool {
        self.invalid.is_none()
    }
}

/// Builds the border automaton of a structurally valid scheme, extracts its
/// orbits and decides validity and the primitive type vector.
pub fn analyze(scheme: &LabelingScheme) -> Result<SchemeAnalysis> {
    let universe = PairUniverse::new(scheme.pair().clone());
    analyze_with(scheme, &universe)
}

/// Like [`analyze`], reusing a precomputed universe of the scheme's pair.
pub fn analyze_with(scheme: &LabelingScheme, universe: &PairUniverse) -> Result<SchemeAnalysis> {
    let violations = scheme.validate(universe);
    if !violations.is_empty() {
        return Err(Error::user(format!(
            "scheme is structurally invalid: {}",
            violations
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join("; ")
        )));
    }
    let automaton = BorderAutomaton::build(scheme, universe)?;
    let d = scheme.degree();
    let n = automaton.state_count;

    // weak components of the walk relation
    let mut uf = UnionFind::new(n);
    let succs: Vec<BTreeSet<(usize, EdgeColor)>> =
        (0..n).map(|s| automaton.walk_successors(s)).collect();
    for (s, sset) in succs.iter().enumerate() {
        for &(t, _) in sset {
            uf.union(s, t);
        }
    }
    let mut comp_states: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for s in 0..n {
        comp_states.entry(uf.find(s)).or_default().push(s);
    }

    let mut invalid: Option<InvalidReason> = None;
    let mut orbits: Vec<Orbit> = Vec::new();
    let mut orbit_of_state: BTreeMap<usize, usize> = BTreeMap::new();

    for states in comp_states.values() {
        let has_forward = states
            .iter()
            .any(|&s| automaton.reps[s].iter().any(|&(_, pos)| pos));
        if !has_forward {
            // mirror image of a forward orbit: the same faces walked the
            // other way round
            continue;
        }
        let face = automaton.face_of[states[0]];
        if states.iter().any(|&s| automaton.face_of[s] != face) {
            return Err(Error::internal("walk component mixes face colors"));
        }
        let orbit = if face.is_infinite() {
            infinite_orbit(&automaton, states, &succs)
        } else {
            match finite_orbit(&automaton, states, &succs) {
                Some(orbit) => orbit,
                None => {
                    if invalid.is_none() {
                        let position = automaton.reps[states[0]]
                            .iter()
                            .find(|&&(_, pos)| pos)
                            .map(|&(p, _)| p)
                            .unwrap_or(0);
                        invalid = Some(InvalidReason::IndeterminateFace { position });
                    }
                    Orbit {
                        states: states.clone(),
                        face,
                        kind: OrbitKind::Infinite { aperiodic: false },
                        word: BorderWord::Branching,
                    }
                }
            }
        };
        for &s in states {
            orbit_of_state.insert(s, orbits.len());
        }
        orbits.push(orbit);
    }

    // face equivalence: same-colored finite faces must share an orbit or
    // read the same border in opposite directions
    let faces = scheme.pair().faces();
    if invalid.is_none() {
        'outer: for i in 0..d {
            if faces[i].is_infinite() {
                continue;
            }
            for j in i + 1..d {
                if faces[j] != faces[i] {
                    continue;
                }
                let oi = orbit_of_state[&automaton.state(i, true)];
                let oj = orbit_of_state[&automaton.state(j, true)];
                if oi == oj {
                    continue;
                }
                let (wi, wj) = (&orbits[oi].word, &orbits[oj].word);
                if !words_equivalent(wi, wj) {
                    invalid = Some(InvalidReason::FaceClassesDiffer { first: i, second: j });
                    break 'outer;
                }
            }
        }
    }

    let orbit_of_position: Vec<usize> = (0..d)
        .map(|i| orbit_of_state[&automaton.state(i, true)])
        .collect();

    let aperiodic = orbits
        .iter()
        .any(|o| matches!(o.kind, OrbitKind::Infinite { aperiodic: true }));

    let ptv = if invalid.is_none() {
        let entries = (0..d)
            .map(|i| {
                if faces[i].is_infinite() {
                    PtvEntry::Infinite
                } else {
                    let orbit = &orbits[orbit_of_position[i]];
                    PtvEntry::Finite {
                        period: orbit.size().expect("finite face orbit is cyclic"),
                        letter: faces[i],
                    }
                }
            })
            .collect();
        Some(PrimitiveTypeVector { entries })
    } else {
        None
    };

    Ok(SchemeAnalysis {
        automaton,
        orbits,
        invalid,
        ptv,
        aperiodic,
        orbit_of_position,
    })
}

/// A finite face closes after `k` border steps regardless of the gluing
/// choices made along the way, so its walk relation must satisfy
/// `walk^k = identity` on the whole component for some period `k`. Twist
/// choices may branch the walk, but every branch must come back.
fn finite_orbit(
    automaton: &BorderAutomaton,
    states: &[usize],
    succs: &[BTreeSet<(usize, EdgeColor)>],
) -> Option<Orbit> {
    let limit = 4 * automaton.degree;
    let singleton = |s: usize| BTreeSet::from([s]);
    let mut reach: BTreeMap<usize, BTreeSet<usize>> =
        states.iter().map(|&s| (s, singleton(s))).collect();
    for k in 1..=limit {
        let mut next_reach = BTreeMap::new();
        for &s in states {
            let mut set = BTreeSet::new();
            for &u in &reach[&s] {
                for &(t, _) in &succs[u] {
                    set.insert(t);
                }
            }
            if set.is_empty() {
                return None;
            }
            next_reach.insert(s, set);
        }
        reach = next_reach;
        if states.iter().all(|&s| reach[&s] == singleton(s)) {
            let word = least_cycle_word(states[0], k, succs);
            return Some(Orbit {
                states: states.to_vec(),
                face: automaton.face_of[states[0]],
                kind: OrbitKind::Cycle(k),
                word: BorderWord::Repeat(min_rotation(&word)),
            });
        }
    }
    None
}

/// With `walk^k = identity`, every length-`k` path from `start` returns to
/// it; take the letterwise-least one as the face border.
fn least_cycle_word(
    start: usize,
    k: usize,
    succs: &[BTreeSet<(usize, EdgeColor)>],
) -> Vec<EdgeColor> {
    let mut word = Vec::with_capacity(k);
    let mut cur = start;
    for _ in 0..k {
        let &(t, letter) = succs[cur]
            .iter()
            .min_by_key(|&&(t, l)| (l, t))
            .expect("walk component has successors");
        word.push(letter);
        cur = t;
    }
    word
}

fn infinite_orbit(
    automaton: &BorderAutomaton,
    states: &[usize],
    succs: &[BTreeSet<(usize, EdgeColor)>],
) -> Orbit {
    // a state is forced aperiodic when no walk cycle passes through it
    let on_cycle: BTreeMap<usize, bool> = states
        .iter()
        .map(|&s| (s, cycle_through(s, states, succs)))
        .collect();
    let aperiodic = on_cycle.values().any(|&b| !b);
    let word = if !aperiodic {
        BorderWord::BiPeriodic(min_rotation(&cycle_word_at(states[0], states, succs)))
    } else {
        omega_descriptor(states, succs, &on_cycle).unwrap_or(BorderWord::Branching)
    };
    Orbit {
        states: states.to_vec(),
        face: automaton.face_of[states[0]],
        kind: OrbitKind::Infinite { aperiodic },
        word,
    }
}

fn cycle_through(s: usize, states: &[usize], succs: &[BTreeSet<(usize, EdgeColor)>]) -> bool {
    // BFS from the successors of s back to s
    let member: BTreeSet<usize> = states.iter().copied().collect();
    let mut queue: VecDeque<usize> = succs[s]
        .iter()
        .map(|&(t, _)| t)
        .filter(|t| member.contains(t))
        .collect();
    let mut seen: BTreeSet<usize> = queue.iter().copied().collect();
    while let Some(u) = queue.pop_front() {
        if u == s {
            return true;
        }
        for &(t, _) in &succs[u] {
            if member.contains(&t) && seen.insert(t) {
                queue.push_back(t);
            }
        }
    }
    false
}

/// Some cycle word through `start` (which must lie on a cycle).
fn cycle_word_at(
    start: usize,
    states: &[usize],
    succs: &[BTreeSet<(usize, EdgeColor)>],
) -> Vec<EdgeColor> {
    let member: BTreeSet<usize> = states.iter().copied().collect();
    // BFS with parent tracking from start back to start
    let mut parent: BTreeMap<usize, (usize, EdgeColor)> = BTreeMap::new();
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        for &(t, letter) in &succs[u] {
            if !member.contains(&t) {
                continue;
            }
            if t == start {
                let mut word = vec![letter];
                let mut cur = u;
                while cur != start {
                    let (p, l) = parent[&cur];
                    word.push(l);
                    cur = p;
                }
                word.reverse();
                return word;
            }
            if !parent.contains_key(&t) {
                parent.insert(t, (u, letter));
                queue.push_back(t);
            }
        }
    }
    unreachable!("state is on a cycle");
}

/// Best-effort `head^w middle tail^w` descriptor for a forced-aperiodic
/// orbit: walk from a cycle-free state backwards and forwards to the
/// nearest cyclic states.
fn omega_descriptor(
    states: &[usize],
    succs: &[BTreeSet<(usize, EdgeColor)>],
    on_cycle: &BTreeMap<usize, bool>,
) -> Option<BorderWord> {
    let member: BTreeSet<usize> = states.iter().copied().collect();
    let &free = states.iter().find(|s| !on_cycle[s])?;
    // backward: predecessors within the component
    let preds = |s: usize| {
        states
            .iter()
            .flat_map(|&u| succs[u].iter().filter(move |&&(t, _)| t == s).map(move |&(_, l)| (u, l)))
            .collect::<Vec<_>>()
    };
    let mut middle_rev = Vec::new();
    let mut cur = free;
    let head_state = loop {
        let ps = preds(cur);
        let &(p, l) = ps.first()?;
        middle_rev.push(l);
        if on_cycle[&p] {
            break p;
        }
        cur = p;
        if middle_rev.len() > member.len() {
            return None;
        }
    };
    let mut middle: Vec<EdgeColor> = middle_rev.into_iter().rev().collect();
    let mut cur = free;
    let tail_state = loop {
        let &(t, l) = succs[cur].iter().find(|(t, _)| member.contains(t))?;
        middle.push(l);
        if on_cycle[&t] {
            break t;
        }
        cur = t;
        if middle.len() > 2 * member.len() {
            return None;
        }
    };
    let head = cycle_word_at(head_state, states, succs);
    let tail = cycle_word_at(tail_state, states, succs);
    // absorb trailing letters of the middle into the tail period
    let mut tail_rot = tail.clone();
    while let Some(&last) = middle.last() {
        if tail_rot.last() == Some(&last) {
            middle.pop();
            tail_rot.rotate_right(1);
        } else {
            break;
        }
    }
    Some(BorderWord::Omega {
        head: min_rotation(&head),
        middle,
        tail: min_rotation(&tail),
    })
}

fn min_rotation(word: &[EdgeColor]) -> Vec<EdgeColor> {
    let n = word.len();
    (0..n)
        .map(|s| {
            let mut w = Vec::with_capacity(n);
            w.extend_from_slice(&word[s..]);
            w.extend_from_slice(&word[..s]);
            w
        })
        .min()
        .unwrap_or_default()
}

fn words_equivalent(a: &BorderWord, b: &BorderWord) -> bool {
    let cyclic = |w: &BorderWord| match w {
        BorderWord::Repeat(w) | BorderWord::BiPeriodic(w) => Some(w.clone()),
        _ => None,
    };
    match (cyclic(a), cyclic(b)) {
        (Some(wa), Some(wb)) => {
            if wa.len() != wb.len() {
                return false;
            }
            let rev: Vec<EdgeColor> = wb.iter().rev().copied().collect();
            min_rotation(&wa) == min_rotation(&wb) || min_rotation(&wa) == min_rotation(&rev)
        }
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scheme::fixtures::{separable_scheme, three_connected_scheme};

    #[test]
    fn three_connected_scheme_matches_worked_automaton() {
        let s = three_connected_scheme();
        let a = analyze(&s).unwrap();
        // one configuration per edge and direction
        assert_eq!(a.automaton.state_count, 10);
        assert!(a.automaton.is_next_deterministic());
        assert!(a.automaton.is_connected());
        assert!(a.is_valid());
        assert!(!a.aperiodic);

        // orbit sizes 3, 1, 1 with borders (bgr), b, r
        let mut sizes: Vec<usize> = a.orbits.iter().map(|o| o.size().unwrap()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 1, 3]);
        let words: BTreeSet<String> = a.orbits.iter().map(|o| o.word.to_string()).collect();
        assert_eq!(
            words,
            BTreeSet::from([
                "(a1)^n".to_string(),
                "(a2)^n".to_string(),
                "(a1 a2 a3)^n".to_string()
            ])
        );

        // primitive type vector [3n, m, 3n, 3n, p]
        assert_eq!(a.ptv.unwrap().to_string(), "[3n,m,3n,3n,p]");
    }

    #[test]
    fn separable_scheme_matches_worked_automaton() {
        let s = separable_scheme();
        let a = analyze(&s).unwrap();
        assert_eq!(a.automaton.state_count, 8);
        assert!(a.automaton.is_connected());
        assert!(a.is_valid());
        assert!(a.aperiodic);

        // the merged state of (0,+) and (4,-) has two walk continuations
        let merged = a.automaton.state(0, true);
        assert_eq!(a.automaton.state(4, false), merged);
        assert!(!a.automaton.is_next_deterministic());
        assert_eq!(a.automaton.next[merged].len(), 2);

        // orbits: finite 3-cycle (a1 a1 a2), finite 2-cycle (a2 a3),
        // infinite aperiodic a1^w a3 a1^w
        let mut cyc: Vec<(usize, String)> = a
            .orbits
            .iter()
            .filter_map(|o| o.size().map(|k| (k, o.word.to_string())))
            .collect();
        cyc.sort();
        assert_eq!(
            cyc,
            vec![
                (2, "(a2 a3)^n".to_string()),
                (3, "(a1 a1 a2)^n".to_string())
            ]
        );
        let omega: Vec<&Orbit> = a
            .orbits
            .iter()
            .filter(|o| matches!(o.kind, OrbitKind::Infinite { .. }))
            .collect();
        assert_eq!(omega.len(), 1);
        assert!(matches!(omega[0].kind, OrbitKind::Infinite { aperiodic: true }));
        assert_eq!(omega[0].word.to_string(), "(a1)^w a3 (a1)^w");

        // primitive type vector [inf, 3n, 2m, inf, 3n]
        assert_eq!(a.ptv.unwrap().to_string(), "[inf,3n,2m,inf,3n]");
    }

    #[test]
    fn inv_is_involutive_on_worked_schemes() {
        for s in [three_connected_scheme(), separable_scheme()] {
            let a = analyze(&s).unwrap();
            for u in 0..a.automaton.state_count {
                for &v in &a.automaton.inv[u] {
                    assert!(a.automaton.inv[v].contains(&u));
                }
            }
        }
    }

    #[test]
    fn type_vector_validation() {
        let a = analyze(&three_connected_scheme()).unwrap();
        let ptv = a.ptv.unwrap();
        // [3n, m, 3n, 3n, p] valued at [3,4,3,3,5]
        match validate_type_vector(&ptv, &TypeVector::finite(&[3, 4, 3, 3, 5])) {
            TvCheck::Valid(v) => {
                assert_eq!(v.values().copied().collect::<Vec<u32>>(), vec![1, 4, 5]);
            }
            TvCheck::Invalid(_) => panic!("expected valid"),
        }
        // 3 does not divide 4
        assert_eq!(
            validate_type_vector(&ptv, &TypeVector::finite(&[4, 4, 3, 3, 5])),
            TvCheck::Invalid(0)
        );
        // entries below 3 are rejected
        assert_eq!(
            validate_type_vector(&ptv, &TypeVector::finite(&[3, 2, 3, 3, 5])),
            TvCheck::Invalid(1)
        );

        let sep = analyze(&separable_scheme()).unwrap();
        let ptv = sep.ptv.unwrap();
        match validate_type_vector(
            &ptv,
            &TypeVector {
                entries: vec![None, Some(3), Some(4), None, Some(3)],
            },
        ) {
            TvCheck::Valid(v) => {
                assert_eq!(v.values().copied().collect::<Vec<u32>>(), vec![1, 2]);
            }
            TvCheck::Invalid(_) => panic!("expected valid"),
        }
    }

    #[test]
    fn admits_handles_rotation_and_reflection() {
        let a = analyze(&three_connected_scheme()).unwrap();
        let ptv = a.ptv.unwrap();
        // the paper lists this graph's type vector rotated: [5,3,4,3,3]
        let tv = TypeVector::finite(&[5, 3, 4, 3, 3]);
        assert!(admits_type_vector(&ptv, &tv).is_some());
        assert!(admits_type_vector(&ptv, &TypeVector::finite(&[4, 4, 4, 4, 4])).is_none());
    }

    #[test]
    fn recolored_faces_can_break_equivalence() {
        // merge the two finite face colors of the 3-connected scheme: the
        // r* and b* orbits differ, so the scheme becomes invalid
        let s = three_connected_scheme();
        let merged = s.recolored(&[0, 1, 2, 3, 4, 5, 6, 7], &[0, 1, 0, 3, 4, 5, 6, 7]);
        let a = analyze(&merged).unwrap();
        assert!(matches!(
            a.invalid,
            Some(InvalidReason::FaceClassesDiffer { .. })
        ));
    }
}
