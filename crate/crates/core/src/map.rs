//! Decorated combinatorial maps on compact surfaces with boundary.
//!
//! A dessin is stored on the quotient surface directly: inner edges carry two
//! darts (one per end), real edges a single dart.  Rotations at real vertices
//! are linear and list the two boundary edges at the extreme positions, so the
//! dart of a real edge shows up in both endpoint lists.  Region boundary
//! walks are stored explicitly as sequences of tail darts; together with the
//! rotations they pin down the surface, including the non-orientable cases,
//! without a global orientation convention.  The orientation of a real edge
//! is the direction of its unique walk traversal.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use alloc::{format, vec};

/// One edge end (inner edges) or one boundary edge seen from the interior
/// (real edges).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Dart(pub u32);

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VertexId(pub u32);

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct EdgeId(pub u32);

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct RegionId(pub u32);

/// The three edge kinds of a trichotomic graph.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum EdgeKind {
    Solid,
    Bold,
    Dotted,
}

impl EdgeKind {
    pub const ALL: [EdgeKind; 3] = [EdgeKind::Solid, EdgeKind::Bold, EdgeKind::Dotted];

    pub fn name(self) -> &'static str {
        match self {
            EdgeKind::Solid => "solid",
            EdgeKind::Bold => "bold",
            EdgeKind::Dotted => "dotted",
        }
    }

    fn code(self) -> u8 {
        match self {
            EdgeKind::Solid => 0,
            EdgeKind::Bold => 1,
            EdgeKind::Dotted => 2,
        }
    }
}

/// Vertex kinds; black/white/cross are the essential ones.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum VertexKind {
    Black,
    White,
    Cross,
    Monochrome(EdgeKind),
}

impl VertexKind {
    pub fn is_essential(self) -> bool {
        !matches!(self, VertexKind::Monochrome(_))
    }

    pub fn code(self) -> u8 {
        match self {
            VertexKind::Black => 0,
            VertexKind::White => 1,
            VertexKind::Cross => 2,
            VertexKind::Monochrome(k) => 3 + k.code(),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Vertex {
    pub kind: VertexKind,
    pub real: bool,
    /// Incident darts: cyclic for inner vertices; for real vertices a linear
    /// sequence along the interior side with the two boundary edges at the
    /// extreme positions.
    pub darts: Vec<Dart>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Edge {
    pub kind: EdgeKind,
    pub real: bool,
    /// `(tail dart, head dart)`; the head dart is absent for real edges.  An
    /// inner edge is oriented from the tail end to the head end.
    pub darts: (Dart, Option<Dart>),
}

impl Edge {
    pub fn tail_dart(&self) -> Dart {
        self.darts.0
    }
    pub fn head_dart(&self) -> Option<Dart> {
        self.darts.1
    }
    pub fn dart_list(&self) -> Vec<Dart> {
        match self.darts.1 {
            Some(h) => vec![self.darts.0, h],
            None => vec![self.darts.0],
        }
    }
}

/// A boundary walk of a region: the tail darts of the edges traversed, in
/// order.  Every edge is traversed along its orientation.
pub type Walk = Vec<Dart>;

/// A region of the cut surface.  Condition (3) forces every region to be
/// orientable; the flag is kept so that validation can report violations in
/// malformed inputs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Region {
    pub genus: u32,
    pub orientable: bool,
    pub walks: Vec<Walk>,
}

impl Region {
    pub fn euler(&self) -> i64 {
        if self.orientable {
            2 - 2 * self.genus as i64 - self.walks.len() as i64
        } else {
            2 - self.genus as i64 - self.walks.len() as i64
        }
    }
}

/// A valency-2 monochrome remnant retained by a partial reduction, recorded
/// as a position on an edge (`index` counts marks from the tail end).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Mark {
    pub edge: EdgeId,
    pub index: u32,
}

/// A trichotomic graph / dessin candidate.  All operations treat values as
/// immutable; surgeries build fresh values.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Dessin {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
    pub regions: Vec<Region>,
    pub marks: Vec<Mark>,
    pub dart_count: u32,
}

/// Structural failure: the id tables do not describe a map at all.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StructError(pub String);

impl core::fmt::Display for StructError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "structural error: {}", self.0)
    }
}

/// A boundary circle: vertices and edges in cyclic order, `edges[i]` joining
/// `verts[i]` to `verts[i+1]`.  Normalized to start at the least vertex in
/// the lexicographically smaller of the two directions.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct BoundaryCircle {
    pub verts: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

impl Dessin {
    pub fn vertex(&self, v: VertexId) -> &Vertex {
        &self.vertices[v.0 as usize]
    }
    pub fn edge(&self, e: EdgeId) -> &Edge {
        &self.edges[e.0 as usize]
    }
    pub fn region(&self, r: RegionId) -> &Region {
        &self.regions[r.0 as usize]
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = VertexId> {
        (0..self.vertices.len() as u32).map(VertexId)
    }
    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> {
        (0..self.edges.len() as u32).map(EdgeId)
    }
    pub fn region_ids(&self) -> impl Iterator<Item = RegionId> {
        (0..self.regions.len() as u32).map(RegionId)
    }

    /// Index tables derived from the id lists; kept outside the struct so the
    /// struct stays plain data.
    pub fn try_index(&self) -> Result<Index, StructError> {
        Index::build(self)
    }

    /// Index tables for a known-well-formed dessin.
    pub fn index(&self) -> Index {
        Index::build(self).expect("well-formed dessin")
    }

    pub fn euler_characteristic(&self) -> i64 {
        let v = self.vertices.len() as i64;
        let e = self.edges.len() as i64;
        let f: i64 = self.regions.iter().map(|r| r.euler()).sum();
        v - e + f
    }

    /// Surface orientability via chessboard coloring: the regions, each taken
    /// with its canonical orientation, admit a consistent sign assignment iff
    /// the region adjacency graph across inner edges is properly 2-colorable.
    pub fn orientable(&self) -> bool {
        let ix = match self.try_index() {
            Ok(ix) => ix,
            Err(_) => return false,
        };
        self.orientable_with(&ix)
    }

    pub fn orientable_with(&self, ix: &Index) -> bool {
        let nr = self.regions.len();
        let mut color: Vec<i8> = vec![0; nr];
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); nr];
        for e in self.edge_ids() {
            if self.edge(e).real {
                continue;
            }
            let sides = &ix.edge_sides[e.0 as usize];
            let (a, b) = (sides[0].0 .0 as usize, sides[1].0 .0 as usize);
            if a == b {
                return false;
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        for start in 0..nr {
            if color[start] != 0 {
                continue;
            }
            color[start] = 1;
            let mut stack = vec![start];
            while let Some(r) = stack.pop() {
                for &s in &adj[r].clone() {
                    if color[s] == 0 {
                        color[s] = -color[r];
                        stack.push(s);
                    } else if color[s] == color[r] {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn boundary_component_count(&self) -> usize {
        match self.boundary_circles() {
            Ok(c) => c.len(),
            Err(_) => 0,
        }
    }

    /// Boundary circles, direction-free (normalized).
    pub fn boundary_circles(&self) -> Result<Vec<BoundaryCircle>, StructError> {
        let ix = self.try_index()?;
        Ok(self.boundary_circles_with(&ix))
    }

    pub fn boundary_circles_with(&self, ix: &Index) -> Vec<BoundaryCircle> {
        // Each real vertex has two boundary edges (its extreme darts); follow
        // the links.
        let mut circles = Vec::new();
        let mut seen: BTreeSet<EdgeId> = BTreeSet::new();
        for e0 in self.edge_ids() {
            if !self.edge(e0).real || seen.contains(&e0) {
                continue;
            }
            let mut verts = Vec::new();
            let mut edges = Vec::new();
            // traverse: enter vertex v via edge e, leave via its other
            // boundary edge
            let (mut v, start_v) = {
                let owners = &ix.real_owners[&self.edge(e0).darts.0];
                (owners[0].0, owners[0].0)
            };
            let mut e = e0;
            loop {
                seen.insert(e);
                verts.push(v);
                edges.push(e);
                // move to the other endpoint of e
                let owners = &ix.real_owners[&self.edge(e).darts.0];
                let w = if owners.len() == 2 && owners[0].0 == v {
                    owners[1].0
                } else {
                    owners[0].0
                };
                // leave w via its other boundary edge
                let wl = self.vertex(w);
                let first = ix.dart_edge[wl.darts[0].0 as usize];
                let last = ix.dart_edge[wl.darts[wl.darts.len() - 1].0 as usize];
                let next = if first == e { last } else { first };
                v = w;
                e = next;
                if e == e0 && v == start_v {
                    break;
                }
                if edges.len() > self.edges.len() {
                    break;
                }
            }
            circles.push(normalize_circle(verts, edges));
        }
        circles.sort();
        circles
    }

    /// Connected components of the underlying graph (vertex id sets).
    pub fn components(&self) -> Vec<BTreeSet<VertexId>> {
        let ix = match self.try_index() {
            Ok(ix) => ix,
            Err(_) => return Vec::new(),
        };
        let mut seen: BTreeSet<VertexId> = BTreeSet::new();
        let mut out = Vec::new();
        for v0 in self.vertex_ids() {
            if seen.contains(&v0) {
                continue;
            }
            let mut comp = BTreeSet::new();
            let mut stack = vec![v0];
            while let Some(v) = stack.pop() {
                if !comp.insert(v) {
                    continue;
                }
                seen.insert(v);
                for &d in &self.vertex(v).darts {
                    let e = ix.dart_edge[d.0 as usize];
                    for w in ix.edge_endpoints(self, e) {
                        if !comp.contains(&w) {
                            stack.push(w);
                        }
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// The orientable double: every inner element doubles, real ones stay.
    /// Serves as the consistency cross-check behind the double-cover lemma.
    pub fn double_cover(&self) -> Result<Dessin, StructError> {
        double::build(self)
    }
}

fn normalize_circle(verts: Vec<VertexId>, edges: Vec<EdgeId>) -> BoundaryCircle {
    let n = verts.len();
    let mut best: Option<(Vec<VertexId>, Vec<EdgeId>)> = None;
    for dir in 0..2 {
        let (vs, es): (Vec<VertexId>, Vec<EdgeId>) = if dir == 0 {
            (verts.clone(), edges.clone())
        } else {
            // reversed: verts reversed, edges reversed and shifted so that
            // edges[i] still joins verts[i], verts[i+1]
            let mut vs: Vec<VertexId> = verts.clone();
            vs.reverse();
            vs.rotate_right(1);
            let mut es = edges.clone();
            es.reverse();
            (vs, es)
        };
        for k in 0..n {
            let mut v2 = vs.clone();
            let mut e2 = es.clone();
            v2.rotate_left(k);
            e2.rotate_left(k);
            let cand = (v2, e2);
            if best.as_ref().map_or(true, |b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    let (verts, edges) = best.unwrap_or((verts, edges));
    BoundaryCircle { verts, edges }
}

/// Derived lookup tables; building them performs the structural checks.
#[derive(Clone, Debug)]
pub struct Index {
    /// Edge owning each dart.
    pub dart_edge: Vec<EdgeId>,
    /// Owning vertex of each inner dart.
    pub inner_dart_vertex: Vec<Option<VertexId>>,
    /// Position of each inner dart in its vertex list.
    pub inner_dart_pos: Vec<u32>,
    /// For real-edge darts, the one or two vertices listing the dart at an
    /// extreme position, as `(vertex, at_first_position)`.
    pub real_owners: BTreeMap<Dart, Vec<(VertexId, bool)>>,
    /// For each edge, its walk traversals `(region, walk index, position)`.
    pub edge_sides: Vec<Vec<(RegionId, u32, u32)>>,
    /// Derived orientation of real edges: `(tail vertex, head vertex)`.
    pub real_dir: BTreeMap<EdgeId, (VertexId, VertexId)>,
    /// For each region walk, the resolved step vertices: `step_vertex[r][w][i]`
    /// is where the walk turns between `walk[i]` and `walk[i+1]` (cyclic).
    pub step_vertex: Vec<Vec<Vec<VertexId>>>,
}

impl Index {
    fn build(d: &Dessin) -> Result<Index, StructError> {
        let n = d.dart_count as usize;
        let missing = EdgeId(u32::MAX);
        let mut dart_edge = vec![missing; n];
        for e in d.edge_ids() {
            let edge = d.edge(e);
            if edge.real != edge.darts.1.is_none() {
                return Err(StructError(format!(
                    "edge {} dart count does not match its real flag",
                    e.0
                )));
            }
            for dd in edge.dart_list() {
                let i = dd.0 as usize;
                if i >= n {
                    return Err(StructError(format!("edge {} references dart {}", e.0, dd.0)));
                }
                if dart_edge[i] != missing {
                    return Err(StructError(format!("dart {} owned by two edges", dd.0)));
                }
                dart_edge[i] = e;
            }
        }
        for (i, e) in dart_edge.iter().enumerate() {
            if *e == missing {
                return Err(StructError(format!("dart {} belongs to no edge", i)));
            }
        }

        let mut inner_dart_vertex: Vec<Option<VertexId>> = vec![None; n];
        let mut inner_dart_pos = vec![0u32; n];
        let mut real_owners: BTreeMap<Dart, Vec<(VertexId, bool)>> = BTreeMap::new();
        for v in d.vertex_ids() {
            let vert = d.vertex(v);
            if vert.darts.is_empty() {
                return Err(StructError(format!("vertex {} has no darts", v.0)));
            }
            let len = vert.darts.len();
            for (pos, &dd) in vert.darts.iter().enumerate() {
                let i = dd.0 as usize;
                if i >= n {
                    return Err(StructError(format!(
                        "vertex {} references dart {}",
                        v.0, dd.0
                    )));
                }
                let e = dart_edge[i];
                if d.edge(e).real {
                    if !vert.real {
                        return Err(StructError(format!(
                            "inner vertex {} lists real edge dart {}",
                            v.0, dd.0
                        )));
                    }
                    if pos != 0 && pos != len - 1 {
                        return Err(StructError(format!(
                            "real edge dart {} in the middle of vertex {}",
                            dd.0, v.0
                        )));
                    }
                    real_owners.entry(dd).or_default().push((v, pos == 0));
                } else {
                    if inner_dart_vertex[i].is_some() {
                        return Err(StructError(format!("dart {} listed twice", dd.0)));
                    }
                    inner_dart_vertex[i] = Some(v);
                    inner_dart_pos[i] = pos as u32;
                }
            }
            if vert.real {
                if len < 2 {
                    return Err(StructError(format!(
                        "real vertex {} has fewer than two darts",
                        v.0
                    )));
                }
                for (pos, &dd) in vert.darts.iter().enumerate() {
                    let e = dart_edge[dd.0 as usize];
                    let is_extreme = pos == 0 || pos == len - 1;
                    if is_extreme != d.edge(e).real {
                        return Err(StructError(format!(
                            "vertex {}: boundary/inner darts misplaced at position {}",
                            v.0, pos
                        )));
                    }
                }
            }
        }
        for i in 0..n {
            let e = dart_edge[i];
            if d.edge(e).real {
                let owners = real_owners.get(&Dart(i as u32)).map(|o| o.len()).unwrap_or(0);
                if owners != 2 {
                    return Err(StructError(format!(
                        "real dart {} listed by {} vertices, expected 2",
                        i, owners
                    )));
                }
            } else if inner_dart_vertex[i].is_none() {
                return Err(StructError(format!("dart {} attached to no vertex", i)));
            }
        }

        // Walk traversals per edge.
        let mut edge_sides: Vec<Vec<(RegionId, u32, u32)>> = vec![Vec::new(); d.edges.len()];
        for r in d.region_ids() {
            let reg = d.region(r);
            if reg.walks.is_empty() {
                return Err(StructError(format!("region {} has no walks", r.0)));
            }
            for (wi, walk) in reg.walks.iter().enumerate() {
                if walk.is_empty() {
                    return Err(StructError(format!("region {} has an empty walk", r.0)));
                }
                for (pos, &dd) in walk.iter().enumerate() {
                    let i = dd.0 as usize;
                    if i >= n {
                        return Err(StructError(format!(
                            "region {} walk references dart {}",
                            r.0, dd.0
                        )));
                    }
                    let e = dart_edge[i];
                    if d.edge(e).darts.0 != dd {
                        return Err(StructError(format!(
                            "walk entry {} is not a tail dart",
                            dd.0
                        )));
                    }
                    edge_sides[e.0 as usize].push((r, wi as u32, pos as u32));
                }
            }
        }
        for e in d.edge_ids() {
            let want = if d.edge(e).real { 1 } else { 2 };
            if edge_sides[e.0 as usize].len() != want {
                return Err(StructError(format!(
                    "edge {} traversed {} times, expected {}",
                    e.0,
                    edge_sides[e.0 as usize].len(),
                    want
                )));
            }
        }

        let mut ix = Index {
            dart_edge,
            inner_dart_vertex,
            inner_dart_pos,
            real_owners,
            edge_sides,
            real_dir: BTreeMap::new(),
            step_vertex: Vec::new(),
        };
        ix.resolve_steps(d)?;
        Ok(ix)
    }

    /// Resolve every walk step to a vertex, enforcing the corner discipline:
    /// each interior corner is used exactly once (twice, collapsed, at
    /// valency-2 inner vertices).  Also derives real edge orientations.
    fn resolve_steps(&mut self, d: &Dessin) -> Result<(), StructError> {
        // corner capacity: (vertex, position) -> capacity, where position is
        // the index of the corner (pair darts[i], darts[i+1]); inner vertices
        // have cyclic corners.
        let mut capacity: BTreeMap<(VertexId, u32), u32> = BTreeMap::new();
        for v in d.vertex_ids() {
            let vert = d.vertex(v);
            let len = vert.darts.len();
            if vert.real {
                for i in 0..len - 1 {
                    capacity.insert((v, i as u32), 1);
                }
            } else if len == 2 {
                // the two corners of a valency-2 inner vertex are symmetric;
                // collapse them into one slot of capacity 2
                capacity.insert((v, 0), 2);
            } else {
                for i in 0..len {
                    capacity.insert((v, i as u32), 1);
                }
            }
        }

        // candidate corners of a step (arrival dart a, departure dart b) at
        // vertex v
        let corner_slots = |v: VertexId, a: Dart, b: Dart| -> Vec<(VertexId, u32)> {
            let vert = d.vertex(v);
            let len = vert.darts.len();
            let mut out = Vec::new();
            if vert.real {
                for i in 0..len - 1 {
                    let (x, y) = (vert.darts[i], vert.darts[i + 1]);
                    if (x == a && y == b) || (x == b && y == a) {
                        out.push((v, i as u32));
                    }
                }
            } else if len == 2 {
                let (x, y) = (vert.darts[0], vert.darts[1]);
                if (x == a && y == b) || (x == b && y == a) {
                    out.push((v, 0));
                }
            } else {
                for i in 0..len {
                    let (x, y) = (vert.darts[i], vert.darts[(i + 1) % len]);
                    if (x == a && y == b) || (x == b && y == a) {
                        out.push((v, i as u32));
                    }
                }
            }
            out
        };

        // candidate vertices where a step from edge `e` into dart `b` can
        // happen; for inner e this is the head vertex, for real e either
        // endpoint
        let mut steps: Vec<(RegionId, u32, u32, Vec<(VertexId, (VertexId, u32))>)> = Vec::new();
        let mut step_vertex: Vec<Vec<Vec<VertexId>>> =
            d.regions.iter().map(|r| r.walks.iter().map(|w| vec![VertexId(u32::MAX); w.len()]).collect()).collect();

        for r in d.region_ids() {
            for (wi, walk) in d.region(r).walks.iter().enumerate() {
                let m = walk.len();
                for i in 0..m {
                    let dd = walk[i];
                    let e = self.dart_edge[dd.0 as usize];
                    let edge = d.edge(e);
                    let next = walk[(i + 1) % m];
                    // arrival dart at the step vertex
                    let mut cands: Vec<(VertexId, (VertexId, u32))> = Vec::new();
                    match edge.darts.1 {
                        Some(h) => {
                            let v = self.inner_dart_vertex[h.0 as usize].unwrap();
                            for slot in corner_slots(v, h, next) {
                                cands.push((v, slot));
                            }
                        }
                        None => {
                            for &(v, _) in &self.real_owners[&edge.darts.0] {
                                for slot in corner_slots(v, edge.darts.0, next) {
                                    cands.push((v, slot));
                                }
                            }
                        }
                    }
                    if cands.is_empty() {
                        return Err(StructError(format!(
                            "walk step {}->{} matches no corner",
                            dd.0, next.0
                        )));
                    }
                    cands.sort();
                    cands.dedup();
                    steps.push((r, wi as u32, i as u32, cands));
                }
            }
        }

        // assign unambiguous steps first, then the rest greedily
        let mut remaining: BTreeMap<(VertexId, u32), u32> = capacity;
        let mut pending: Vec<usize> = Vec::new();
        for (si, (_, _, _, cands)) in steps.iter().enumerate() {
            if cands.len() == 1 {
                let (v, slot) = cands[0];
                let c = remaining.get_mut(&slot).ok_or_else(|| {
                    StructError("walk step uses an unknown corner".into())
                })?;
                if *c == 0 {
                    return Err(StructError(format!(
                        "corner {:?} used more often than available",
                        slot
                    )));
                }
                *c -= 1;
                let (r, wi, i, _) = steps[si];
                step_vertex[r.0 as usize][wi as usize][i as usize] = v;
            } else {
                pending.push(si);
            }
        }
        for si in pending {
            let (r, wi, i, ref cands) = steps[si];
            let mut placed = false;
            for &(v, slot) in cands {
                if let Some(c) = remaining.get_mut(&slot) {
                    if *c > 0 {
                        *c -= 1;
                        step_vertex[r.0 as usize][wi as usize][i as usize] = v;
                        placed = true;
                        break;
                    }
                }
            }
            if !placed {
                return Err(StructError("walk steps overuse corners".into()));
            }
        }
        if remaining.values().any(|&c| c != 0) {
            return Err(StructError("some corners are not covered by walks".into()));
        }

        // real edge orientations from the walk direction
        for e in d.edge_ids() {
            let edge = d.edge(e);
            if !edge.real {
                continue;
            }
            let (r, wi, pos) = self.edge_sides[e.0 as usize][0];
            let head = step_vertex[r.0 as usize][wi as usize][pos as usize];
            let owners = &self.real_owners[&edge.darts.0];
            let tail = if owners.len() == 2 && owners[0].0 == head && owners[1].0 != head {
                owners[1].0
            } else if owners.len() == 2 && owners[1].0 == head {
                owners[0].0
            } else {
                owners[0].0
            };
            self.real_dir.insert(e, (tail, head));
        }

        self.step_vertex = step_vertex;
        Ok(())
    }

    /// Tail vertex of an edge.
    pub fn tail_vertex(&self, d: &Dessin, e: EdgeId) -> VertexId {
        let edge = d.edge(e);
        if edge.real {
            self.real_dir[&e].0
        } else {
            self.inner_dart_vertex[edge.darts.0 .0 as usize].unwrap()
        }
    }

    /// Head vertex of an edge.
    pub fn head_vertex(&self, d: &Dessin, e: EdgeId) -> VertexId {
        let edge = d.edge(e);
        if edge.real {
            self.real_dir[&e].1
        } else {
            self.inner_dart_vertex[edge.darts.1.unwrap().0 as usize].unwrap()
        }
    }

    pub fn edge_endpoints(&self, d: &Dessin, e: EdgeId) -> Vec<VertexId> {
        if d.edge(e).real {
            let (t, h) = self.real_dir[&e];
            vec![t, h]
        } else {
            vec![self.tail_vertex(d, e), self.head_vertex(d, e)]
        }
    }

    /// Whether dart `dd` (an element of `v`'s list) points into `v`.
    pub fn incoming_at(&self, d: &Dessin, v: VertexId, dd: Dart) -> bool {
        let e = self.dart_edge[dd.0 as usize];
        let edge = d.edge(e);
        if edge.real {
            self.real_dir[&e].1 == v
        } else {
            edge.darts.1 == Some(dd)
        }
    }

    /// Vertex at which dart `dd` sits.  For real darts this is ambiguous (two
    /// owners); callers that care use `real_owners` directly.
    pub fn some_vertex_of(&self, dd: Dart) -> VertexId {
        match self.inner_dart_vertex[dd.0 as usize] {
            Some(v) => v,
            None => self.real_owners[&dd][0].0,
        }
    }
}

pub mod assembly;

mod double;
