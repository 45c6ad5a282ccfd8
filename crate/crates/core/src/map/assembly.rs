//! Build a dessin from its polygon assembly: edges, region walks and step
//! vertices.  Vertex rotations are reconstructed as corner chains, which is
//! the same gluing computation the canonical decoder performs.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use alloc::{format, vec};

use super::{Dart, Dessin, Edge, EdgeKind, Region, Vertex, VertexKind};

/// Edges as (kind, real); walks as edge-index sequences; step vertex `i` of a
/// walk sits between entries `i` and `i+1` (cyclic); regions group walks.
pub struct AssemblySpec {
    pub vertices: Vec<(VertexKind, bool)>,
    pub edges: Vec<(EdgeKind, bool)>,
    pub walks: Vec<(Vec<usize>, Vec<usize>)>,
    /// (genus, walk indices); when empty, each walk becomes its own genus-0
    /// region.
    pub regions: Vec<(u32, Vec<usize>)>,
}

pub fn assemble(spec: &AssemblySpec) -> Result<Dessin, String> {
    let ne = spec.edges.len();
    let mut edges: Vec<Edge> = Vec::with_capacity(ne);
    let mut next_dart = 0u32;
    for &(kind, real) in &spec.edges {
        let t = Dart(next_dart);
        next_dart += 1;
        let h = if real {
            None
        } else {
            let h = Dart(next_dart);
            next_dart += 1;
            Some(h)
        };
        edges.push(Edge { kind, real, darts: (t, h) });
    }

    // occurrences
    let mut occ: Vec<Vec<(usize, usize)>> = vec![Vec::new(); ne];
    for (wi, (walk, steps)) in spec.walks.iter().enumerate() {
        if walk.len() != steps.len() {
            return Err(format!("walk {} has mismatched step vertices", wi));
        }
        for (p, &e) in walk.iter().enumerate() {
            if e >= ne {
                return Err(format!("walk {} names edge {}", wi, e));
            }
            occ[e].push((wi, p));
        }
    }
    for (e, o) in occ.iter().enumerate() {
        let want = if spec.edges[e].1 { 1 } else { 2 };
        if o.len() != want {
            return Err(format!(
                "edge {} traversed {} times, expected {}",
                e,
                o.len(),
                want
            ));
        }
    }

    let wlen = |w: usize| spec.walks[w].0.len();
    let entry = |w: usize, p: usize| spec.walks[w].0[p];
    let stepv = |w: usize, p: usize| spec.walks[w].1[p];
    let other_occ = |e: usize, at: (usize, usize)| -> (usize, usize) {
        let o = &occ[e];
        if o[0] == at {
            o[1]
        } else {
            o[0]
        }
    };

    // corner chains -> rotations
    let mut corner_done: BTreeMap<(usize, usize), ()> = BTreeMap::new();
    let mut rotations: BTreeMap<usize, Vec<Dart>> = BTreeMap::new();
    for w0 in 0..spec.walks.len() {
        for p0 in 0..wlen(w0) {
            if corner_done.contains_key(&(w0, p0)) {
                continue;
            }
            let vlab = stepv(w0, p0);
            let mut chain = vec![(w0, p0)];
            let mut rot: Vec<Dart> = Vec::new();
            let mut cyclic = false;
            let (mut w, mut p) = (w0, p0);
            let mut via_departure = true;
            loop {
                if via_departure {
                    let q = (p + 1) % wlen(w);
                    let le = entry(w, q);
                    rot.push(edges[le].darts.0);
                    if edges[le].real {
                        break;
                    }
                    let (w2, p2) = other_occ(le, (w, q));
                    w = w2;
                    p = (p2 + wlen(w2) - 1) % wlen(w2);
                } else {
                    let le = entry(w, p);
                    match edges[le].darts.1 {
                        Some(h) => rot.push(h),
                        None => {
                            rot.push(edges[le].darts.0);
                            break;
                        }
                    }
                    let (w2, p2) = other_occ(le, (w, p));
                    w = w2;
                    p = p2;
                }
                via_departure = !via_departure;
                if (w, p) == (w0, p0) {
                    cyclic = true;
                    break;
                }
                chain.push((w, p));
                if chain.len() > 2 * next_dart as usize + 2 {
                    return Err("corner chain does not close".into());
                }
            }
            if !cyclic {
                let mut rot_back: Vec<Dart> = Vec::new();
                let (mut w, mut p) = (w0, p0);
                let mut via_departure = false;
                loop {
                    if via_departure {
                        let q = (p + 1) % wlen(w);
                        let le = entry(w, q);
                        rot_back.push(edges[le].darts.0);
                        if edges[le].real {
                            break;
                        }
                        let (w2, p2) = other_occ(le, (w, q));
                        w = w2;
                        p = (p2 + wlen(w2) - 1) % wlen(w2);
                    } else {
                        let le = entry(w, p);
                        match edges[le].darts.1 {
                            Some(h) => rot_back.push(h),
                            None => {
                                rot_back.push(edges[le].darts.0);
                                break;
                            }
                        }
                        let (w2, p2) = other_occ(le, (w, p));
                        w = w2;
                        p = p2;
                    }
                    via_departure = !via_departure;
                    chain.push((w, p));
                    if chain.len() > 2 * next_dart as usize + 2 {
                        return Err("corner chain does not close".into());
                    }
                }
                rot_back.reverse();
                rot_back.extend(rot);
                rot = rot_back;
            }
            for &(cw, cp) in &chain {
                corner_done.insert((cw, cp), ());
                if stepv(cw, cp) != vlab {
                    return Err(format!(
                        "corner chain mixes vertices {} and {}",
                        vlab,
                        stepv(cw, cp)
                    ));
                }
            }
            if rotations.insert(vlab, rot).is_some() {
                return Err(format!("vertex {} split into several corner chains", vlab));
            }
        }
    }

    let mut vertices = Vec::with_capacity(spec.vertices.len());
    for (vi, &(kind, real)) in spec.vertices.iter().enumerate() {
        let rot = rotations
            .remove(&vi)
            .ok_or_else(|| format!("vertex {} unused", vi))?;
        vertices.push(Vertex { kind, real, darts: rot });
    }

    let regions: Vec<Region> = if spec.regions.is_empty() {
        spec.walks
            .iter()
            .map(|(walk, _)| Region {
                genus: 0,
                orientable: true,
                walks: vec![walk.iter().map(|&e| edges[e].darts.0).collect()],
            })
            .collect()
    } else {
        spec.regions
            .iter()
            .map(|(genus, ws)| Region {
                genus: *genus,
                orientable: true,
                walks: ws
                    .iter()
                    .map(|&w| spec.walks[w].0.iter().map(|&e| edges[e].darts.0).collect())
                    .collect(),
            })
            .collect()
    };

    let d = Dessin {
        vertices,
        edges,
        regions,
        marks: Vec::new(),
        dart_count: next_dart,
    };
    d.try_index().map_err(|e| e.0)?;
    Ok(d)
}
