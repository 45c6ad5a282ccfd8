//! Copy-on-write surgery support: allocate darts and elements, splice walks,
//! drop elements, then compact the id space.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use alloc::{format, vec};

use crate::map::{Dart, Dessin, Edge, EdgeId, EdgeKind, Mark, Region, RegionId, Vertex, VertexId, VertexKind};

pub struct Editor {
    pub vertices: Vec<Option<Vertex>>,
    pub edges: Vec<Option<Edge>>,
    pub regions: Vec<Option<Region>>,
    pub marks: Vec<Mark>,
    next_dart: u32,
}

impl Editor {
    pub fn from(d: &Dessin) -> Editor {
        Editor {
            vertices: d.vertices.iter().cloned().map(Some).collect(),
            edges: d.edges.iter().cloned().map(Some).collect(),
            regions: d.regions.iter().cloned().map(Some).collect(),
            marks: d.marks.clone(),
            next_dart: d.dart_count,
        }
    }

    pub fn new_dart(&mut self) -> Dart {
        let d = Dart(self.next_dart);
        self.next_dart += 1;
        d
    }

    pub fn add_vertex(&mut self, kind: VertexKind, real: bool, darts: Vec<Dart>) -> VertexId {
        self.vertices.push(Some(Vertex { kind, real, darts }));
        VertexId(self.vertices.len() as u32 - 1)
    }

    pub fn add_inner_edge(&mut self, kind: EdgeKind) -> (EdgeId, Dart, Dart) {
        let t = self.new_dart();
        let h = self.new_dart();
        self.edges.push(Some(Edge { kind, real: false, darts: (t, Some(h)) }));
        (EdgeId(self.edges.len() as u32 - 1), t, h)
    }

    pub fn add_real_edge(&mut self, kind: EdgeKind) -> (EdgeId, Dart) {
        let d = self.new_dart();
        self.edges.push(Some(Edge { kind, real: true, darts: (d, None) }));
        (EdgeId(self.edges.len() as u32 - 1), d)
    }

    pub fn add_region(&mut self, region: Region) -> RegionId {
        self.regions.push(Some(region));
        RegionId(self.regions.len() as u32 - 1)
    }

    pub fn vertex_mut(&mut self, v: VertexId) -> &mut Vertex {
        self.vertices[v.0 as usize].as_mut().expect("live vertex")
    }

    pub fn edge_mut(&mut self, e: EdgeId) -> &mut Edge {
        self.edges[e.0 as usize].as_mut().expect("live edge")
    }

    pub fn region_mut(&mut self, r: RegionId) -> &mut Region {
        self.regions[r.0 as usize].as_mut().expect("live region")
    }

    pub fn drop_vertex(&mut self, v: VertexId) {
        self.vertices[v.0 as usize] = None;
    }

    pub fn drop_edge(&mut self, e: EdgeId) {
        self.edges[e.0 as usize] = None;
        self.marks.retain(|m| m.edge != e);
    }

    pub fn drop_region(&mut self, r: RegionId) {
        self.regions[r.0 as usize] = None;
    }

    /// Replace a dart occurrence inside a vertex list.
    pub fn replace_in_vertex(&mut self, v: VertexId, old: Dart, new: Dart) {
        let vert = self.vertex_mut(v);
        for d in vert.darts.iter_mut() {
            if *d == old {
                *d = new;
                return;
            }
        }
        panic!("dart not found in vertex");
    }

    /// Replace the occurrence of `old` at walk position `(r, w, pos)` by a
    /// dart sequence.
    pub fn splice_walk(&mut self, r: RegionId, w: usize, pos: usize, replacement: &[Dart]) {
        let region = self.region_mut(r);
        let walk = &mut region.walks[w];
        walk.splice(pos..pos + 1, replacement.iter().copied());
    }

    /// All walk positions currently holding dart `d` (tail darts only).
    pub fn walk_positions(&self, d: Dart) -> Vec<(RegionId, usize, usize)> {
        let mut out = Vec::new();
        for (ri, reg) in self.regions.iter().enumerate() {
            if let Some(reg) = reg {
                for (wi, walk) in reg.walks.iter().enumerate() {
                    for (pos, &dd) in walk.iter().enumerate() {
                        if dd == d {
                            out.push((RegionId(ri as u32), wi, pos));
                        }
                    }
                }
            }
        }
        out
    }

    /// Compact ids and produce the dessin.
    pub fn finish(self) -> Result<Dessin, String> {
        self.finish_with_map().map(|(d, _)| d)
    }

    /// Compact ids, also returning the editor-space to final edge id map.
    pub fn finish_with_map(self) -> Result<(Dessin, BTreeMap<u32, u32>), String> {
        let mut dart_map: BTreeMap<Dart, Dart> = BTreeMap::new();
        let mut edge_map: BTreeMap<u32, u32> = BTreeMap::new();
        let mut edges = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            if let Some(e) = e {
                let t = Dart(dart_map.len() as u32);
                dart_map.insert(e.darts.0, t);
                let h = e.darts.1.map(|h| {
                    let nh = Dart(dart_map.len() as u32);
                    dart_map.insert(h, nh);
                    nh
                });
                edge_map.insert(i as u32, edges.len() as u32);
                edges.push(Edge { kind: e.kind, real: e.real, darts: (t, h) });
            }
        }
        let mut vertices = Vec::new();
        for v in self.vertices.iter().flatten() {
            let mut darts = Vec::with_capacity(v.darts.len());
            for d in &v.darts {
                let nd = dart_map
                    .get(d)
                    .ok_or_else(|| format!("vertex references dropped dart {}", d.0))?;
                darts.push(*nd);
            }
            vertices.push(Vertex { kind: v.kind, real: v.real, darts });
        }
        let mut regions = Vec::new();
        for r in self.regions.iter().flatten() {
            let mut walks = Vec::with_capacity(r.walks.len());
            for w in &r.walks {
                let mut walk = Vec::with_capacity(w.len());
                for d in w {
                    let nd = dart_map
                        .get(d)
                        .ok_or_else(|| format!("walk references dropped dart {}", d.0))?;
                    walk.push(*nd);
                }
                walks.push(walk);
            }
            regions.push(Region { genus: r.genus, orientable: r.orientable, walks });
        }
        let marks = self
            .marks
            .iter()
            .filter_map(|m| {
                edge_map
                    .get(&m.edge.0)
                    .map(|&e| Mark { edge: EdgeId(e), index: m.index })
            })
            .collect();
        let d = Dessin {
            vertices,
            edges,
            regions,
            marks,
            dart_count: dart_map.len() as u32,
        };
        d.try_index().map_err(|e| e.0)?;
        Ok((d, edge_map))
    }

    /// Split the current state into connected components without finishing.
    pub fn live_edge_ids(&self) -> Vec<EdgeId> {
        self.edges
            .iter()
            .enumerate()
            .filter_map(|(i, e)| e.as_ref().map(|_| EdgeId(i as u32)))
            .collect()
    }
}

// keep the imports tidy for future passes
#[allow(unused_imports)]
use core::marker::PhantomData;
#[allow(unused)]
fn _unused(_: BTreeSet<u32>) {}
