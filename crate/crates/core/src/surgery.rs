//! Cuts, gluings, junctions, reduction/inflation, and the scrap calculus.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use alloc::{format, vec};

use crate::map::{Dart, Dessin, Edge, EdgeId, EdgeKind, Mark, Region, Vertex, VertexId, VertexKind};

mod editor;
pub use editor::Editor;

mod cuts;
mod gluing;
mod inflation;
mod scraps;

pub use cuts::{find_cuts, find_cuts_with_moves, perform_cut, CutDescriptor, CutKind};
pub use gluing::{glue, junction, junction_sites, BoundaryArc, GluePairing, SurgeryError};
pub use inflation::{
    inflate_edge, is_reduced, is_totally_reduced, monochrome_components, reduce, reduce_all,
    InflationSite, Reduction,
};
pub use scraps::{break_decompose, check_6k, patch_dotted_breaks, Scrap, ScrapError};

/// Disjoint union of dessins, fresh id spaces.
pub fn disjoint_union(parts: &[Dessin]) -> Dessin {
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    let mut regions = Vec::new();
    let mut marks = Vec::new();
    let mut dart_count = 0u32;
    for p in parts {
        let dv = dart_count;
        let ev = edges.len() as u32;
        for v in &p.vertices {
            vertices.push(Vertex {
                kind: v.kind,
                real: v.real,
                darts: v.darts.iter().map(|d| Dart(d.0 + dv)).collect(),
            });
        }
        for e in &p.edges {
            edges.push(Edge {
                kind: e.kind,
                real: e.real,
                darts: (Dart(e.darts.0 .0 + dv), e.darts.1.map(|h| Dart(h.0 + dv))),
            });
        }
        for r in &p.regions {
            regions.push(Region {
                genus: r.genus,
                orientable: r.orientable,
                walks: r
                    .walks
                    .iter()
                    .map(|w| w.iter().map(|d| Dart(d.0 + dv)).collect())
                    .collect(),
            });
        }
        for m in &p.marks {
            marks.push(Mark { edge: EdgeId(m.edge.0 + ev), index: m.index });
        }
        dart_count += p.dart_count;
    }
    Dessin { vertices, edges, regions, marks, dart_count }
}
