//! A string C-group rebuilt as a polyhedron: flags are group elements,
//! vertices/edges/faces are cosets of ⟨ρ1,ρ2⟩, ⟨ρ0,ρ2⟩, ⟨ρ0,ρ1⟩.
//!
//! Flag x has i-adjacent flag x·ρ_i. An automorphism g acts on flags from the
//! right by x ↦ g⁻¹x, so the base flag is the identity and ρ_i maps it to
//! its i-adjacent flag.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{Element, RegularRepresentation};
use crate::sggi;
use crate::word::{Generator, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapStructure {
    pub vertices: Vec<Vec<Element>>,
    pub edges: Vec<Vec<Element>>,
    pub faces: Vec<Vec<Element>>,
    flag_vertex: Vec<u32>,
    flag_edge: Vec<u32>,
    flag_face: Vec<u32>,
    adjacency: [Vec<u32>; 3],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MapInvariants {
    pub euler_characteristic: i64,
    pub orientable: bool,
    pub edge_multiplicity: u64,
    pub has_multiple_edges: bool,
    pub vertex_count: u64,
    pub edge_count: u64,
    pub face_count: u64,
}

type Incidence = BTreeSet<(u32, u32)>;

/// The first polyhedron axiom violated by a map.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    /// Flags and incident (vertex, edge, face) triples are not in bijection.
    Flags,
    /// Some edge is not on exactly two vertices and two faces.
    EdgeEnds,
    /// The vertex-edge graph is disconnected.
    Connected,
    /// Some vertex-figure is not a connected 2-regular incidence cycle.
    VertexFigure,
}

/// Orbits of the identity-labelled flags under the given generators,
/// numbered by smallest member.
fn orbits(rep: &RegularRepresentation, gens: [Generator; 2]) -> (Vec<Vec<Element>>, Vec<u32>) {
    let n = rep.order();
    let mut label = vec![u32::MAX; n];
    let mut classes = Vec::new();
    for start in 0..n {
        if label[start] != u32::MAX {
            continue;
        }
        let id = classes.len() as u32;
        let mut members = vec![start];
        label[start] = id;
        let mut head = 0;
        while head < members.len() {
            let x = members[head];
            head += 1;
            for g in gens {
                let y = rep.act(x, g);
                if label[y] == u32::MAX {
                    label[y] = id;
                    members.push(y);
                }
            }
        }
        members.sort_unstable();
        classes.push(members);
    }
    (classes, label)
}

/// Vertices, edges and faces as cosets, with flag adjacency by the
/// generator action.
pub fn build_map(rep: &RegularRepresentation) -> MapStructure {
    use Generator::*;
    let (vertices, flag_vertex) = orbits(rep, [R1, R2]);
    let (edges, flag_edge) = orbits(rep, [R0, R2]);
    let (faces, flag_face) = orbits(rep, [R0, R1]);
    MapStructure {
        vertices,
        edges,
        faces,
        flag_vertex,
        flag_edge,
        flag_face,
        adjacency: Generator::ALL.map(|g| rep.generator_image(g).to_vec()),
    }
}

impl MapStructure {
    pub fn flag_count(&self) -> usize {
        self.flag_vertex.len()
    }

    pub fn vertex_of(&self, flag: Element) -> usize {
        self.flag_vertex[flag] as usize
    }

    pub fn edge_of(&self, flag: Element) -> usize {
        self.flag_edge[flag] as usize
    }

    pub fn face_of(&self, flag: Element) -> usize {
        self.flag_face[flag] as usize
    }

    pub fn adjacent(&self, flag: Element, rank: usize) -> Element {
        self.adjacency[rank][flag] as Element
    }

    fn incidences(&self) -> (Incidence, Incidence, Incidence) {
        let mut ve = BTreeSet::new();
        let mut ef = BTreeSet::new();
        let mut vf = BTreeSet::new();
        for x in 0..self.flag_count() {
            ve.insert((self.flag_vertex[x], self.flag_edge[x]));
            ef.insert((self.flag_edge[x], self.flag_face[x]));
            vf.insert((self.flag_vertex[x], self.flag_face[x]));
        }
        (ve, ef, vf)
    }

    /// Vertex–edge incidences (nonempty coset intersections).
    pub fn vertex_edge_incidence(&self) -> BTreeSet<(u32, u32)> {
        self.incidences().0
    }

    pub fn edge_face_incidence(&self) -> BTreeSet<(u32, u32)> {
        self.incidences().1
    }

    pub fn vertex_face_incidence(&self) -> BTreeSet<(u32, u32)> {
        self.incidences().2
    }

    /// The two (or more, in a defective map) vertex ids of each edge.
    pub fn edge_vertices(&self) -> Vec<BTreeSet<u32>> {
        let mut out = vec![BTreeSet::new(); self.edges.len()];
        for x in 0..self.flag_count() {
            out[self.flag_edge[x] as usize].insert(self.flag_vertex[x]);
        }
        out
    }

    /// Number of edges joining the most-connected vertex pair.
    pub fn edge_multiplicity(&self) -> u64 {
        let mut counts: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
        for ends in self.edge_vertices() {
            *counts.entry(ends.into_iter().collect()).or_default() += 1;
        }
        counts.values().copied().max().unwrap_or(0)
    }

    /// The first failing axiom, if any.
    pub fn check_axioms(&self) -> Option<Axiom> {
        let (ve, ef, vf) = self.incidences();

        let mut edge_v = vec![0usize; self.edges.len()];
        let mut edge_f = vec![0usize; self.edges.len()];
        for &(_, e) in &ve {
            edge_v[e as usize] += 1;
        }
        for &(e, _) in &ef {
            edge_f[e as usize] += 1;
        }
        if edge_v.iter().chain(&edge_f).any(|&c| c != 2) {
            return Some(Axiom::EdgeEnds);
        }

        let triples: HashSet<(u32, u32, u32)> = (0..self.flag_count())
            .map(|x| (self.flag_vertex[x], self.flag_edge[x], self.flag_face[x]))
            .collect();
        if triples.len() != self.flag_count() {
            return Some(Axiom::Flags);
        }
        let mut edge_faces: Vec<Vec<u32>> = vec![Vec::new(); self.edges.len()];
        for &(e, f) in &ef {
            edge_faces[e as usize].push(f);
        }
        let incident_triples = ve
            .iter()
            .map(|&(v, e)| {
                edge_faces[e as usize]
                    .iter()
                    .filter(|&&f| vf.contains(&(v, f)))
                    .count()
            })
            .sum::<usize>();
        if incident_triples != self.flag_count() {
            return Some(Axiom::Flags);
        }

        if !self.vertex_edge_graph_connected() {
            return Some(Axiom::Connected);
        }

        for v in 0..self.vertices.len() as u32 {
            if !self.vertex_figure_is_cycle(v, &ve, &ef, &vf) {
                return Some(Axiom::VertexFigure);
            }
        }
        None
    }

    fn vertex_edge_graph_connected(&self) -> bool {
        let ends = self.edge_vertices();
        let mut adj: Vec<Vec<u32>> = vec![Vec::new(); self.vertices.len()];
        for e in &ends {
            let e: Vec<u32> = e.iter().copied().collect();
            for &a in &e {
                for &b in &e {
                    if a != b {
                        adj[a as usize].push(b);
                    }
                }
            }
        }
        let mut seen = vec![false; self.vertices.len()];
        let mut stack = vec![0u32];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v as usize] {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    stack.push(w);
                }
            }
        }
        seen.iter().all(|&s| s)
    }

    fn vertex_figure_is_cycle(
        &self,
        v: u32,
        ve: &BTreeSet<(u32, u32)>,
        ef: &BTreeSet<(u32, u32)>,
        vf: &BTreeSet<(u32, u32)>,
    ) -> bool {
        let edges: Vec<u32> = ve.iter().filter(|&&(w, _)| w == v).map(|&(_, e)| e).collect();
        let faces: Vec<u32> = vf.iter().filter(|&&(w, _)| w == v).map(|&(_, f)| f).collect();
        // Bipartite incidence graph of the section: nodes are edges then faces.
        let ne = edges.len();
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); ne + faces.len()];
        for (a, &e) in edges.iter().enumerate() {
            for (b, &f) in faces.iter().enumerate() {
                if ef.contains(&(e, f)) {
                    adj[a].push(ne + b);
                    adj[ne + b].push(a);
                }
            }
        }
        if adj.is_empty() || adj.iter().any(|nbrs| nbrs.len() != 2) {
            return false;
        }
        let mut seen = vec![false; adj.len()];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen.iter().all(|&s| s)
    }
}

/// Polyhedron axioms (1)–(4).
pub fn validate_polyhedron(map: &MapStructure) -> bool {
    map.check_axioms().is_none()
}

pub fn detect_multiple_edges(map: &MapStructure) -> bool {
    map.edge_multiplicity() >= 2
}

pub fn map_invariants(map: &MapStructure, rep: &RegularRepresentation) -> MapInvariants {
    let (v, e, f) = (map.vertices.len(), map.edges.len(), map.faces.len());
    let multiplicity = map.edge_multiplicity();
    MapInvariants {
        euler_characteristic: v as i64 - e as i64 + f as i64,
        orientable: sggi::orientability(rep),
        edge_multiplicity: multiplicity,
        has_multiple_edges: multiplicity >= 2,
        vertex_count: v as u64,
        edge_count: e as u64,
        face_count: f as u64,
    }
}

/// Cyclic vertex sequence of the face containing `flag`, walking by
/// alternating 0- and 1-adjacencies.
pub fn face_walk_from(map: &MapStructure, flag: Element) -> Vec<usize> {
    let mut out = Vec::new();
    let mut cur = flag;
    loop {
        out.push(map.vertex_of(cur));
        cur = map.adjacent(map.adjacent(cur, 0), 1);
        if cur == flag {
            return out;
        }
    }
}

/// Cyclic vertex sequence of `face`, starting from its smallest flag.
pub fn face_walk(map: &MapStructure, face: usize) -> Vec<usize> {
    face_walk_from(map, map.faces[face][0])
}

/// Vertex labels in Z_p with the base vertex labelled 1 and iσ1 = i + 1.
#[derive(Debug, Clone)]
pub struct VertexLabeling {
    pub p: u64,
    /// label[vertex id]
    pub label: Vec<u64>,
    /// vertex id of each label
    pub vertex: Vec<usize>,
}

impl VertexLabeling {
    pub fn new(rep: &RegularRepresentation, map: &MapStructure) -> Result<VertexLabeling> {
        let s1 = rep.sigma1();
        let p = rep.element_order(s1);
        if map.vertices.len() as u64 != p {
            return Err(Error::LabelError(format!(
                "{} vertices but σ1 has order {p}",
                map.vertices.len()
            )));
        }
        // Label 1 + t is the vertex of flag σ1^{-t}·1 = σ1^{-t}.
        let s1_inv = rep.inverse(s1);
        let mut label = vec![u64::MAX; map.vertices.len()];
        let mut vertex = vec![usize::MAX; p as usize];
        let mut flag = 0;
        for t in 0..p {
            let v = map.vertex_of(flag);
            let l = (1 + t) % p;
            if label[v] != u64::MAX {
                return Err(Error::LabelError("σ1 is not a p-cycle on the vertices".into()));
            }
            label[v] = l;
            vertex[l as usize] = v;
            flag = rep.mul(flag, s1_inv);
        }
        Ok(VertexLabeling { p, label, vertex })
    }

    /// Action of a group element on vertex labels: vertex of x ↦ vertex of g⁻¹x.
    pub fn permutation_of(
        &self,
        rep: &RegularRepresentation,
        map: &MapStructure,
        g: Element,
    ) -> Vec<u64> {
        let left = rep.left_mul_perm(rep.inverse(g));
        (0..self.p)
            .map(|l| {
                let v = self.vertex[l as usize];
                let flag = map.vertices[v][0];
                self.label[map.vertex_of(left[flag] as usize)]
            })
            .collect()
    }
}

/// True iff σ2 permutes vertex labels by i ↦ k(2−i)/2 (i even) and
/// i ↦ 1 + k(1−i)/2 (i odd), modulo p.
pub fn check_vertex_action(rep: &RegularRepresentation, k: u64) -> Result<bool> {
    let map = build_map(rep);
    let labels = VertexLabeling::new(rep, &map)?;
    let p = labels.p as i64;
    if p % 2 != 0 || !k.is_multiple_of(2) {
        return Ok(false);
    }
    let half_k = (k / 2) as i64;
    let action = labels.permutation_of(rep, &map, rep.sigma2());
    Ok((0..p).all(|i| {
        let expected = if i % 2 == 0 {
            half_k * (2 - i)
        } else {
            1 + half_k * (1 - i)
        };
        action[i as usize] as i64 == expected.rem_euclid(p)
    }))
}

/// Word of the rotation σ2 for callers that need it as a relator piece.
pub fn sigma2_word() -> Word {
    Word::sigma2()
}
