//! The orientable double of a dessin.  Every region lifts twice (once per
//! orientation), an inner edge lift joins the lifts of its two sides with
//! opposite signs, and real edges get a single inner lift joining the two
//! lifts of their one side.  Vertices are recovered as corner orbits of the
//! resulting polygon gluing.  The double of a valid trichotomic graph is
//! again one; this is the consistency check behind the double-cover
//! correspondence.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use alloc::{format, vec};

use super::{Dart, Dessin, Edge, Region, StructError, Vertex, VertexId};

pub(super) fn build(d: &Dessin) -> Result<Dessin, StructError> {
    let ix = d.try_index()?;

    // Flattened base walks: walk id -> (region, walk index).
    let mut base_walks: Vec<(u32, u32)> = Vec::new();
    for r in d.region_ids() {
        for wi in 0..d.region(r).walks.len() {
            base_walks.push((r.0, wi as u32));
        }
    }
    let nw = base_walks.len();

    // Edge lifts.
    let mut edges: Vec<Edge> = Vec::new();
    let mut lift_of: BTreeMap<(u32, u8), usize> = BTreeMap::new();
    let mut next_dart = 0u32;
    for e in d.edge_ids() {
        let base = d.edge(e);
        let lifts = if base.real { 1 } else { 2 };
        for l in 0..lifts {
            let t = Dart(next_dart);
            let h = Dart(next_dart + 1);
            next_dart += 2;
            lift_of.insert((e.0, l), edges.len());
            edges.push(Edge { kind: base.kind, real: false, darts: (t, Some(h)) });
        }
    }

    // Side index of a base traversal within edge_sides.
    let side_index = |r: u32, wi: u32, pos: u32| -> (u32, u8) {
        let dd = d.regions[r as usize].walks[wi as usize][pos as usize];
        let e = ix.dart_edge[dd.0 as usize];
        let sides = &ix.edge_sides[e.0 as usize];
        let j = sides
            .iter()
            .position(|&(rr, ww, pp)| rr.0 == r && ww == wi && pp == pos)
            .unwrap_or(0) as u8;
        (e.0, j)
    };

    // Lifted walks, ids 0..2*nw: id = s*nw + base walk id; entries are edge
    // lift indices.  A lift of sign s traverses side j of edge e via edge
    // lift (s + j) mod 2.
    let mut lifted: Vec<Vec<usize>> = Vec::with_capacity(nw * 2);
    for s in 0..2u8 {
        for &(r, wi) in base_walks.iter() {
            let walk = &d.regions[r as usize].walks[wi as usize];
            let mut lw = Vec::with_capacity(walk.len());
            for pos in 0..walk.len() as u32 {
                let (e, j) = side_index(r, wi, pos);
                let l = if d.edges[e as usize].real { 0 } else { (s + j) % 2 };
                lw.push(lift_of[&(e, l)]);
            }
            lifted.push(lw);
        }
    }

    // The two occurrences of each edge lift.
    let mut occ: Vec<Vec<(usize, usize)>> = vec![Vec::new(); edges.len()];
    for (w, lw) in lifted.iter().enumerate() {
        for (p, &le) in lw.iter().enumerate() {
            occ[le].push((w, p));
        }
    }
    for (le, o) in occ.iter().enumerate() {
        if o.len() != 2 {
            return Err(StructError(format!(
                "edge lift {} occurs {} times in the double",
                le,
                o.len()
            )));
        }
    }
    let other_occ = |le: usize, at: (usize, usize)| -> (usize, usize) {
        let o = &occ[le];
        if o[0] == at {
            o[1]
        } else {
            o[0]
        }
    };

    // Corner (w, p) sits between entries p and p+1 of lifted walk w; its base
    // vertex is the base step vertex of the underlying walk.
    let base_step_vertex = |w: usize, p: usize| -> VertexId {
        let (r, wi) = base_walks[w % nw];
        ix.step_vertex[r as usize][wi as usize][p]
    };
    let wlen = |w: usize| lifted[w].len();

    // Walk corner orbits.  Around a vertex, corners alternate with darts;
    // crossing the departure dart of a corner lands on the corner preceding
    // the other occurrence of that entry, crossing the arrival dart lands on
    // the corner at the other occurrence itself.
    let mut corner_vertex: BTreeMap<(usize, usize), u32> = BTreeMap::new();
    let mut vertices: Vec<Vertex> = Vec::new();
    for w0 in 0..lifted.len() {
        for p0 in 0..wlen(w0) {
            if corner_vertex.contains_key(&(w0, p0)) {
                continue;
            }
            let base_v = base_step_vertex(w0, p0);
            let kind = d.vertex(base_v).kind;
            let vid = vertices.len() as u32;
            let mut rotation: Vec<Dart> = Vec::new();
            let (mut w, mut p) = (w0, p0);
            let mut via_departure = true;
            loop {
                if corner_vertex.insert((w, p), vid).is_some() {
                    return Err(StructError("corner orbit revisits a corner".into()));
                }
                if base_step_vertex(w, p) != base_v {
                    return Err(StructError(
                        "corner orbit mixes base vertices in the double".into(),
                    ));
                }
                if via_departure {
                    let q = (p + 1) % wlen(w);
                    let le = lifted[w][q];
                    rotation.push(edges[le].darts.0);
                    let (w2, p2) = other_occ(le, (w, q));
                    w = w2;
                    p = (p2 + wlen(w2) - 1) % wlen(w2);
                } else {
                    let le = lifted[w][p];
                    rotation.push(edges[le].darts.1.unwrap());
                    let (w2, p2) = other_occ(le, (w, p));
                    w = w2;
                    p = p2;
                }
                via_departure = !via_departure;
                if (w, p) == (w0, p0) {
                    break;
                }
                if rotation.len() > 2 * next_dart as usize + 2 {
                    return Err(StructError("corner orbit does not close".into()));
                }
            }
            vertices.push(Vertex { kind, real: false, darts: rotation });
        }
    }

    // Regions: lift (r, s) collects the lifted versions of r's walks.
    let mut regions = Vec::new();
    for s in 0..2usize {
        for r in d.region_ids() {
            let base = d.region(r);
            let mut walks = Vec::new();
            for (wid, &(rr, _)) in base_walks.iter().enumerate() {
                if rr != r.0 {
                    continue;
                }
                let lw = &lifted[s * nw + wid];
                walks.push(lw.iter().map(|&le| edges[le].darts.0).collect());
            }
            regions.push(Region { genus: base.genus, orientable: base.orientable, walks });
        }
    }

    let out = Dessin {
        vertices,
        edges,
        regions,
        marks: Vec::new(),
        dart_count: next_dart,
    };
    out.try_index()
        .map_err(|e| StructError(format!("double cover is not well-formed: {}", e.0)))?;
    Ok(out)
}
