//! Van Kampen diagrams as combinatorial planar maps: labeled directed edges,
//! face boundary walks, one distinguished outer walk, and a basepoint.
//!
//! Planarity and simple connectivity are certified combinatorially: every
//! edge occurs exactly twice across the face walks plus the outer walk, the
//! underlying graph is connected, and V - E + (F + 1) = 2. A structurally
//! valid diagram whose face labels all lie in the symmetric closure of a
//! presentation proves its boundary label trivial in that presentation; see
//! [`certify_trivial`].
//!
//! JSON schema:
//!
//! ```json
//! {"vertices": [0, 1],
//!  "edges": [{"id": 0, "src": 0, "dst": 1, "label": "a"}],
//!  "faces": [[{"e": 0, "dir": "f"}, ...]],
//!  "outer": [...],
//!  "basepoint": {"vertex": 0, "position": 0}}
//! ```

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::presentations::Presentation;
use crate::words::{Generator, Word};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("grid words must be nonempty")]
    EmptyGridWord,
    #[error("grid words may not use the vertical-edge letter c")]
    ReservedGridLetter,
    #[error("diagram is structurally invalid: {0}")]
    Invalid(Violation),
    #[error("bad diagram json: {0}")]
    BadJson(String),
}

/// Traversal direction of an edge inside a walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Dir {
    #[serde(rename = "f")]
    Forward,
    #[serde(rename = "b")]
    Backward,
}

impl Dir {
    fn flip(self) -> Dir {
        match self {
            Dir::Forward => Dir::Backward,
            Dir::Backward => Dir::Forward,
        }
    }
}

/// A directed labeled edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramEdge {
    pub id: u32,
    pub src: u32,
    pub dst: u32,
    pub label: Generator,
}

/// A closed walk as a list of `(edge id, direction)` steps.
pub type Walk = Vec<(u32, Dir)>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WalkRef {
    Face(usize),
    Outer,
}

impl fmt::Display for WalkRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WalkRef::Face(i) => write!(f, "face {i}"),
            WalkRef::Outer => write!(f, "outer walk"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    DuplicateVertexId(u32),
    DuplicateEdgeId(u32),
    EdgeEndpointMissing(u32),
    UnknownEdgeInWalk { walk: WalkRef, entry: usize },
    EdgeMultiplicity { edge: u32, count: usize },
    WalkNotClosed { walk: WalkRef, entry: usize },
    Disconnected,
    EulerFormula { characteristic: i64 },
    BasepointVertexMissing,
    BasepointPositionOutOfRange,
    BasepointMismatch,
    LabelNotGenerator { edge: u32 },
    FaceLabelNotRelator { face: usize },
    EmptyFaceWalk { face: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DuplicateVertexId(v) => write!(f, "duplicate vertex id {v}"),
            Violation::DuplicateEdgeId(e) => write!(f, "duplicate edge id {e}"),
            Violation::EdgeEndpointMissing(e) => {
                write!(f, "edge {e} touches a vertex that is not listed")
            }
            Violation::UnknownEdgeInWalk { walk, entry } => {
                write!(f, "{walk} entry {entry} cites an unknown edge")
            }
            Violation::EdgeMultiplicity { edge, count } => {
                write!(f, "edge {edge} occurs {count} times across walks, expected 2")
            }
            Violation::WalkNotClosed { walk, entry } => {
                write!(f, "{walk} breaks at entry {entry}")
            }
            Violation::Disconnected => write!(f, "underlying graph is disconnected"),
            Violation::EulerFormula { characteristic } => {
                write!(f, "V - E + F = {characteristic}, expected 2")
            }
            Violation::BasepointVertexMissing => write!(f, "basepoint vertex is not listed"),
            Violation::BasepointPositionOutOfRange => {
                write!(f, "basepoint position exceeds the outer walk")
            }
            Violation::BasepointMismatch => {
                write!(f, "basepoint vertex does not start the cited outer position")
            }
            Violation::LabelNotGenerator { edge } => {
                write!(f, "edge {edge} label is not a presentation generator")
            }
            Violation::FaceLabelNotRelator { face } => {
                write!(f, "face {face} label is not in the symmetric closure")
            }
            Violation::EmptyFaceWalk { face } => write!(f, "face {face} has an empty walk"),
        }
    }
}

/// Outcome of validation; valid means no violations.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// A van Kampen diagram candidate. Construction performs no checking;
/// validity is a question answered by [`VanKampenDiagram::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VanKampenDiagram {
    pub vertices: Vec<u32>,
    pub edges: Vec<DiagramEdge>,
    pub faces: Vec<Walk>,
    pub outer: Walk,
    /// `(vertex, position in outer walk)`: reading starts here.
    pub basepoint: (u32, usize),
}

impl VanKampenDiagram {
    fn edge_map(&self) -> BTreeMap<u32, &DiagramEdge> {
        self.edges.iter().map(|e| (e.id, e)).collect()
    }

    fn walk_entries(&self) -> impl Iterator<Item = (WalkRef, &Walk)> {
        self.faces
            .iter()
            .enumerate()
            .map(|(i, w)| (WalkRef::Face(i), w))
            .chain(std::iter::once((WalkRef::Outer, &self.outer)))
    }

    /// Structural checks only: ids, multiplicity two, closed walks,
    /// connectivity, the Euler formula, and the basepoint.
    pub fn validate_structure(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        let mut vertex_set: BTreeSet<u32> = BTreeSet::new();
        for &v in &self.vertices {
            if !vertex_set.insert(v) {
                report.violations.push(Violation::DuplicateVertexId(v));
            }
        }
        let mut edge_ids: BTreeSet<u32> = BTreeSet::new();
        for e in &self.edges {
            if !edge_ids.insert(e.id) {
                report.violations.push(Violation::DuplicateEdgeId(e.id));
            }
            if !vertex_set.contains(&e.src) || !vertex_set.contains(&e.dst) {
                report.violations.push(Violation::EdgeEndpointMissing(e.id));
            }
        }
        let edges = self.edge_map();

        // every edge id exactly twice across all walks
        let mut counts: BTreeMap<u32, usize> = self.edges.iter().map(|e| (e.id, 0)).collect();
        for (walk_ref, walk) in self.walk_entries() {
            for (entry, (id, _)) in walk.iter().enumerate() {
                match counts.get_mut(id) {
                    Some(c) => *c += 1,
                    None => report.violations.push(Violation::UnknownEdgeInWalk {
                        walk: walk_ref,
                        entry,
                    }),
                }
            }
        }
        for (&edge, &count) in &counts {
            if count != 2 {
                report
                    .violations
                    .push(Violation::EdgeMultiplicity { edge, count });
            }
        }

        // closed walks
        let endpoints = |id: u32, dir: Dir| -> Option<(u32, u32)> {
            edges.get(&id).map(|e| match dir {
                Dir::Forward => (e.src, e.dst),
                Dir::Backward => (e.dst, e.src),
            })
        };
        for (walk_ref, walk) in self.walk_entries() {
            let n = walk.len();
            for entry in 0..n {
                let (id, dir) = walk[entry];
                let (next_id, next_dir) = walk[(entry + 1) % n];
                let (Some((_, end)), Some((next_start, _))) =
                    (endpoints(id, dir), endpoints(next_id, next_dir))
                else {
                    continue;
                };
                if end != next_start {
                    report.violations.push(Violation::WalkNotClosed {
                        walk: walk_ref,
                        entry,
                    });
                }
            }
        }
        for (i, face) in self.faces.iter().enumerate() {
            if face.is_empty() {
                report.violations.push(Violation::EmptyFaceWalk { face: i });
            }
        }

        // connectivity of the underlying graph
        if !vertex_set.is_empty() {
            let mut adjacent: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
            for e in &self.edges {
                adjacent.entry(e.src).or_default().push(e.dst);
                adjacent.entry(e.dst).or_default().push(e.src);
            }
            let start = *vertex_set.iter().next().unwrap();
            let mut seen: BTreeSet<u32> = BTreeSet::new();
            let mut stack = vec![start];
            seen.insert(start);
            while let Some(v) = stack.pop() {
                for &n in adjacent.get(&v).into_iter().flatten() {
                    if seen.insert(n) {
                        stack.push(n);
                    }
                }
            }
            if seen.len() != vertex_set.len() {
                report.violations.push(Violation::Disconnected);
            }
        }

        // Euler formula with the outer face counted
        let characteristic = vertex_set.len() as i64 - self.edges.len() as i64
            + self.faces.len() as i64
            + 1;
        if characteristic != 2 {
            report
                .violations
                .push(Violation::EulerFormula { characteristic });
        }

        // basepoint
        let (bp_vertex, bp_pos) = self.basepoint;
        if !vertex_set.contains(&bp_vertex) {
            report.violations.push(Violation::BasepointVertexMissing);
        }
        if self.outer.is_empty() {
            if bp_pos != 0 {
                report
                    .violations
                    .push(Violation::BasepointPositionOutOfRange);
            }
        } else if bp_pos >= self.outer.len() {
            report
                .violations
                .push(Violation::BasepointPositionOutOfRange);
        } else {
            let (id, dir) = self.outer[bp_pos];
            if let Some((start, _)) = endpoints(id, dir) {
                if start != bp_vertex {
                    report.violations.push(Violation::BasepointMismatch);
                }
            }
        }
        report
    }

    /// Full validation against a presentation: all structural checks plus
    /// membership of every face label in the symmetric closure.
    pub fn validate(&self, p: &Presentation) -> ValidationReport {
        let mut report = self.validate_structure();
        let generators: BTreeSet<&Generator> = p.generators().iter().collect();
        for e in &self.edges {
            if !generators.contains(&e.label) {
                report
                    .violations
                    .push(Violation::LabelNotGenerator { edge: e.id });
            }
        }
        let closure = p.symmetric_closure();
        for (i, face) in self.faces.iter().enumerate() {
            match self.read_walk(face) {
                Some(label) if closure.contains(&label) => {}
                _ => report
                    .violations
                    .push(Violation::FaceLabelNotRelator { face: i }),
            }
        }
        report
    }

    fn read_walk(&self, walk: &Walk) -> Option<Word> {
        let edges = self.edge_map();
        let mut letters: Vec<(Generator, i8)> = Vec::with_capacity(walk.len());
        for (id, dir) in walk {
            let e = edges.get(id)?;
            let sign = match dir {
                Dir::Forward => 1,
                Dir::Backward => -1,
            };
            letters.push((e.label.clone(), sign));
        }
        Some(Word::from_letters(letters.iter()))
    }

    /// The raw word read along the outer walk starting at the basepoint
    /// position. Reduce it afterwards if a reduced label is wanted.
    pub fn boundary_label(&self) -> Result<Word, DiagramError> {
        let report = self.validate_structure();
        if let Some(v) = report.violations.into_iter().next() {
            return Err(DiagramError::Invalid(v));
        }
        if self.outer.is_empty() {
            return Ok(Word::identity());
        }
        let (_, pos) = self.basepoint;
        let mut rotated: Walk = Vec::with_capacity(self.outer.len());
        rotated.extend_from_slice(&self.outer[pos..]);
        rotated.extend_from_slice(&self.outer[..pos]);
        Ok(self
            .read_walk(&rotated)
            .expect("structure validated above"))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(JsonDiagram::from(self)).expect("diagram serializes")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self, DiagramError> {
        let mirror: JsonDiagram = serde_json::from_value(value.clone())
            .map_err(|e| DiagramError::BadJson(e.to_string()))?;
        mirror.try_into()
    }
}

/// Whether the diagram is a proof that `w` is trivial in `p`: it validates
/// and its boundary label equals `w` up to cyclic permutation and inversion.
/// A `false` answer proves nothing.
pub fn certify_trivial(d: &VanKampenDiagram, p: &Presentation, w: &Word) -> bool {
    if !d.validate(p).is_valid() {
        return false;
    }
    let Ok(label) = d.boundary_label() else {
        return false;
    };
    let label_letters = label.letters();
    let target = w.letters();
    if label_letters.len() != target.len() {
        return false;
    }
    if target.is_empty() {
        return true;
    }
    for candidate in [label_letters.clone(), label.inverse().letters()] {
        let mut doubled = candidate.clone();
        doubled.extend_from_slice(&candidate);
        if doubled
            .windows(target.len())
            .any(|window| window == target.as_slice())
        {
            return true;
        }
    }
    false
}

/// The grid of commutator squares over `u` with `k` rows: (h+1)(k+1)
/// vertices for h the letter length of `u`, horizontal edges labeled by the
/// letters of `u`, vertical edges labeled `c`, and h*k square faces. Its
/// boundary label is `u c^k u^-1 c^-k`.
pub fn grid_diagram(u: &Word, k: usize) -> Result<VanKampenDiagram, DiagramError> {
    let letters = u.letters();
    let h = letters.len();
    if h == 0 || k == 0 {
        return Err(DiagramError::EmptyGridWord);
    }
    let c = Generator::new("c").unwrap();
    if letters.iter().any(|(g, _)| *g == c) {
        return Err(DiagramError::ReservedGridLetter);
    }

    let vertex = |i: usize, j: usize| (j * (h + 1) + i) as u32;
    let vertices: Vec<u32> = (0..(h + 1) * (k + 1)).map(|v| v as u32).collect();

    // horizontal edge (i, j): between (i, j) and (i+1, j), oriented so that
    // traversing left to right reads the letter of u positively
    let horizontal = |i: usize, j: usize| (j * h + i) as u32;
    // vertical edge (i, j): from (i, j) up to (i, j+1)
    let vertical = |i: usize, j: usize| (h * (k + 1) + j * (h + 1) + i) as u32;

    let mut edges = Vec::with_capacity(h * (k + 1) + (h + 1) * k);
    for j in 0..=k {
        for i in 0..h {
            let (g, sign) = &letters[i];
            let (src, dst) = if *sign >= 0 {
                (vertex(i, j), vertex(i + 1, j))
            } else {
                (vertex(i + 1, j), vertex(i, j))
            };
            edges.push(DiagramEdge {
                id: horizontal(i, j),
                src,
                dst,
                label: g.clone(),
            });
        }
    }
    for j in 0..k {
        for i in 0..=h {
            edges.push(DiagramEdge {
                id: vertical(i, j),
                src: vertex(i, j),
                dst: vertex(i, j + 1),
                label: c.clone(),
            });
        }
    }

    // traversing a horizontal edge left to right is Forward exactly when the
    // letter is positive
    let rightward = |i: usize| {
        if letters[i].1 >= 0 {
            Dir::Forward
        } else {
            Dir::Backward
        }
    };

    let mut faces = Vec::with_capacity(h * k);
    for j in 0..k {
        for i in 0..h {
            faces.push(vec![
                (horizontal(i, j), rightward(i)),
                (vertical(i + 1, j), Dir::Forward),
                (horizontal(i, j + 1), rightward(i).flip()),
                (vertical(i, j), Dir::Backward),
            ]);
        }
    }

    let mut outer: Walk = Vec::with_capacity(2 * h + 2 * k);
    for i in 0..h {
        outer.push((horizontal(i, 0), rightward(i)));
    }
    for j in 0..k {
        outer.push((vertical(h, j), Dir::Forward));
    }
    for i in (0..h).rev() {
        outer.push((horizontal(i, k), rightward(i).flip()));
    }
    for j in (0..k).rev() {
        outer.push((vertical(0, j), Dir::Backward));
    }

    Ok(VanKampenDiagram {
        vertices,
        edges,
        faces,
        outer,
        basepoint: (vertex(0, 0), 0),
    })
}

/// The presentation `<letters..., c | g c g^-1 c^-1 for each letter>` whose
/// relators are exactly the commutator squares of grid diagrams.
pub fn commutator_presentation(letters: &[Generator]) -> Presentation {
    let c = Generator::new("c").unwrap();
    let mut generators = letters.to_vec();
    generators.push(c.clone());
    let relations = letters
        .iter()
        .map(|g| {
            Word::from_syllables(vec![
                (g.clone(), 1.into()),
                (c.clone(), 1.into()),
                (g.clone(), (-1).into()),
                (c.clone(), (-1).into()),
            ])
        })
        .collect();
    Presentation::new(generators, relations).expect("commutator presentation is valid")
}

#[derive(Serialize, Deserialize)]
struct JsonEdge {
    id: u32,
    src: u32,
    dst: u32,
    label: String,
}

#[derive(Serialize, Deserialize)]
struct JsonEntry {
    e: u32,
    dir: Dir,
}

#[derive(Serialize, Deserialize)]
struct JsonBasepoint {
    vertex: u32,
    position: usize,
}

#[derive(Serialize, Deserialize)]
struct JsonDiagram {
    vertices: Vec<u32>,
    edges: Vec<JsonEdge>,
    faces: Vec<Vec<JsonEntry>>,
    outer: Vec<JsonEntry>,
    basepoint: JsonBasepoint,
}

impl From<&VanKampenDiagram> for JsonDiagram {
    fn from(d: &VanKampenDiagram) -> Self {
        let walk = |w: &Walk| -> Vec<JsonEntry> {
            w.iter().map(|(e, dir)| JsonEntry { e: *e, dir: *dir }).collect()
        };
        JsonDiagram {
            vertices: d.vertices.clone(),
            edges: d
                .edges
                .iter()
                .map(|e| JsonEdge {
                    id: e.id,
                    src: e.src,
                    dst: e.dst,
                    label: e.label.name().to_string(),
                })
                .collect(),
            faces: d.faces.iter().map(walk).collect(),
            outer: walk(&d.outer),
            basepoint: JsonBasepoint {
                vertex: d.basepoint.0,
                position: d.basepoint.1,
            },
        }
    }
}

impl TryFrom<JsonDiagram> for VanKampenDiagram {
    type Error = DiagramError;

    fn try_from(j: JsonDiagram) -> Result<Self, DiagramError> {
        let walk = |w: Vec<JsonEntry>| -> Walk {
            w.into_iter().map(|e| (e.e, e.dir)).collect()
        };
        let mut edges = Vec::with_capacity(j.edges.len());
        for e in j.edges {
            let label = Generator::new(&e.label)
                .map_err(|err| DiagramError::BadJson(err.to_string()))?;
            edges.push(DiagramEdge {
                id: e.id,
                src: e.src,
                dst: e.dst,
                label,
            });
        }
        Ok(VanKampenDiagram {
            vertices: j.vertices,
            edges,
            faces: j.faces.into_iter().map(walk).collect(),
            outer: walk(j.outer),
            basepoint: (j.basepoint.vertex, j.basepoint.position),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(name: &str) -> Generator {
        Generator::new(name).unwrap()
    }

    fn w(text: &str) -> Word {
        text.parse().unwrap()
    }

    fn p_comm() -> Presentation {
        commutator_presentation(&[g("a"), g("b")])
    }

    #[test]
    fn grid_over_single_letter() {
        let d = grid_diagram(&w("a"), 2).unwrap();
        assert_eq!(d.vertices.len(), 6);
        assert_eq!(d.edges.len(), 7);
        assert_eq!(d.faces.len(), 2);
        assert!(d.validate(&p_comm()).is_valid());
    }

    #[test]
    fn grid_over_aba() {
        let d = grid_diagram(&w("a b a"), 2).unwrap();
        assert_eq!(d.vertices.len(), 12);
        assert_eq!(d.edges.len(), 17);
        assert_eq!(d.faces.len(), 6);
        assert!(d.validate(&p_comm()).is_valid());
    }

    #[test]
    fn grid_boundary_label() {
        let d = grid_diagram(&w("a"), 1).unwrap();
        assert_eq!(d.boundary_label().unwrap(), w("a c a^-1 c^-1"));
        let d2 = grid_diagram(&w("a b a"), 2).unwrap();
        assert_eq!(
            d2.boundary_label().unwrap().reduce(),
            w("a b a c^2 a^-1 b^-1 a^-1 c^-2")
        );
    }

    #[test]
    fn grid_with_inverse_letters() {
        let d = grid_diagram(&w("a b^-1"), 2).unwrap();
        assert!(d.validate(&p_comm()).is_valid());
        assert_eq!(
            d.boundary_label().unwrap().reduce(),
            w("a b^-1 c^2 b a^-1 c^-2")
        );
    }

    #[test]
    fn grid_rejects_degenerate_input() {
        assert_eq!(
            grid_diagram(&Word::identity(), 2),
            Err(DiagramError::EmptyGridWord)
        );
        assert_eq!(grid_diagram(&w("a"), 0), Err(DiagramError::EmptyGridWord));
        assert_eq!(
            grid_diagram(&w("a c"), 1),
            Err(DiagramError::ReservedGridLetter)
        );
    }

    #[test]
    fn mutated_label_breaks_validation() {
        let mut d = grid_diagram(&w("a"), 2).unwrap();
        d.edges[0].label = g("b");
        let report = d.validate(&p_comm());
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::FaceLabelNotRelator { .. })));
    }

    #[test]
    fn dropped_edge_occurrence_breaks_multiplicity() {
        let mut d = grid_diagram(&w("a"), 1).unwrap();
        let removed = d.outer.pop().unwrap();
        let report = d.validate_structure();
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::EdgeMultiplicity { edge, .. } if *edge == removed.0)));
    }

    #[test]
    fn single_vertex_diagram_reads_empty_word() {
        let d = VanKampenDiagram {
            vertices: vec![0],
            edges: vec![],
            faces: vec![],
            outer: vec![],
            basepoint: (0, 0),
        };
        assert!(d.validate_structure().is_valid());
        assert_eq!(d.boundary_label().unwrap(), Word::identity());
    }

    #[test]
    fn disconnected_diagram_is_flagged() {
        let mut d = grid_diagram(&w("a"), 1).unwrap();
        d.vertices.push(99);
        let report = d.validate_structure();
        assert!(report.violations.contains(&Violation::Disconnected));
        // the stray vertex also breaks the Euler count
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::EulerFormula { .. })));
    }

    #[test]
    fn certify_trivial_on_grid() {
        let d = grid_diagram(&w("a"), 1).unwrap();
        let p = p_comm();
        assert!(certify_trivial(&d, &p, &w("a c a^-1 c^-1")));
        // rotations and the inverse still certify
        assert!(certify_trivial(&d, &p, &w("c a^-1 c^-1 a")));
        assert!(certify_trivial(&d, &p, &w("c a c^-1 a^-1")));
        // a different word does not
        assert!(!certify_trivial(&d, &p, &w("a c a^-1 c")));
        // nor does an invalid diagram
        let mut broken = grid_diagram(&w("a"), 1).unwrap();
        broken.edges[0].label = g("b");
        assert!(!certify_trivial(&broken, &p, &w("a c a^-1 c^-1")));
    }

    #[test]
    fn basepoint_controls_reading_position() {
        let mut d = grid_diagram(&w("a b"), 1).unwrap();
        // outer walk: a b c b^-1 a^-1 c^-1; move the basepoint one step
        let edges = d.edge_map();
        let (id, dir) = d.outer[1];
        let e = edges[&id];
        let start = match dir {
            Dir::Forward => e.src,
            Dir::Backward => e.dst,
        };
        d.basepoint = (start, 1);
        assert_eq!(d.boundary_label().unwrap(), w("b c b^-1 a^-1 c^-1 a"));
    }

    #[test]
    fn json_round_trip() {
        let d = grid_diagram(&w("a b^-1 a"), 2).unwrap();
        let value = d.to_json();
        assert_eq!(VanKampenDiagram::from_json(&value).unwrap(), d);
        assert_eq!(value["edges"][0]["label"], "a");
        assert!(value["faces"][0][0]["dir"] == "f" || value["faces"][0][0]["dir"] == "b");
    }
}
