//! Reduction (contracting monochrome real components) and inflation (its
//! inverse, inserting dotted monochrome circles on inner edges).

use alloc::string::String;
use alloc::vec::Vec;
use alloc::{format, vec};

use super::Editor;
use crate::map::{Dessin, EdgeId, EdgeKind, Mark, VertexId, VertexKind};

/// Where an inflation circle was removed from / may be inserted.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct InflationSite {
    pub edge: EdgeId,
}

/// Result of a reduction: the reduced dessin plus the recorded sites.
#[derive(Clone, Debug)]
pub struct Reduction {
    pub dessin: Dessin,
    pub removed: Vec<InflationSite>,
}

/// Insert one monochrome circle (two trivalent monochrome vertices, two real
/// arcs) in the middle of an inner edge.
pub fn inflate_edge(d: &Dessin, e: EdgeId) -> Result<Dessin, String> {
    let edge = d.edge(e);
    if edge.real {
        return Err(format!("edge {} is real; inflation needs an inner edge", e.0));
    }
    let kind = edge.kind;
    let ix = d.try_index().map_err(|x| x.0)?;
    let u = ix.tail_vertex(d, e);
    let v = ix.head_vertex(d, e);
    let (t, h) = (edge.darts.0, edge.darts.1.unwrap());

    let mut ed = Editor::from(d);
    let sides = ed.walk_positions(t);
    if sides.len() != 2 {
        return Err("inner edge must bound two walk positions".into());
    }

    let (e1, t1, h1) = ed.add_inner_edge(kind);
    let (e2, t2, h2) = ed.add_inner_edge(kind);
    let (a1, a1d) = ed.add_real_edge(kind);
    let (a2, a2d) = ed.add_real_edge(kind);
    let _ = (e1, e2, a1, a2);
    // m1 receives the tail half, m2 sends the head half; both arcs run m1->m2
    let m1 = ed.add_vertex(VertexKind::Monochrome(kind), true, vec![a1d, h1, a2d]);
    let m2 = ed.add_vertex(VertexKind::Monochrome(kind), true, vec![a1d, t2, a2d]);
    let _ = (m1, m2);

    ed.replace_in_vertex(u, t, t1);
    ed.replace_in_vertex(v, h, h2);

    // the two sides of e take the two different arcs
    let (r1, w1, p1) = sides[0];
    ed.splice_walk(r1, w1, p1, &[t1, a1d, t2]);
    // positions may have shifted within the same walk; recompute
    let sides2 = ed.walk_positions(t);
    let (r2, w2, p2) = sides2[0];
    ed.splice_walk(r2, w2, p2, &[t1, a2d, t2]);

    ed.drop_edge(e);
    ed.finish()
}

/// Contract selected monochrome real components (each must be a two-vertex
/// circle, i.e. the dessin restricted to it is bridge free).  Optionally
/// retains the contraction position as a marked point.
pub fn reduce(
    d: &Dessin,
    components: &[Vec<VertexId>],
    keep_marks: bool,
) -> Result<Reduction, String> {
    let ix = d.try_index().map_err(|x| x.0)?;
    let mut ed = Editor::from(d);
    let mut removed = Vec::new();

    for comp in components {
        // validate: a monochrome circle with exactly two vertices
        if comp.len() != 2 {
            return Err(format!(
                "monochrome component with {} vertices; reduce needs two (run bridge-free normalization first)",
                comp.len()
            ));
        }
        let (va, vb) = (comp[0], comp[1]);
        let kind = match (d.vertex(va).kind, d.vertex(vb).kind) {
            (VertexKind::Monochrome(a), VertexKind::Monochrome(b)) if a == b => a,
            _ => return Err("selected component is not monochrome".into()),
        };
        if !d.vertex(va).real || !d.vertex(vb).real {
            return Err("selected component is not real".into());
        }
        // find the two arc edges and the two inner edges
        let arcs: Vec<EdgeId> = d
            .edge_ids()
            .filter(|&e| {
                d.edge(e).real && {
                    let (t, h) = (ix.tail_vertex(d, e), ix.head_vertex(d, e));
                    (t == va || t == vb) && (h == va || h == vb)
                }
            })
            .collect();
        if arcs.len() != 2 {
            return Err("selected component is not a circle of two arcs".into());
        }
        for &a in &arcs {
            if d.edge(a).kind != kind {
                return Err("component mixes edge kinds".into());
            }
        }
        // inner edges at the two monochromes
        let inner_at = |v: VertexId| -> Option<EdgeId> {
            d.vertex(v)
                .darts
                .iter()
                .map(|&dd| ix.dart_edge[dd.0 as usize])
                .find(|&e| !d.edge(e).real)
        };
        let ea = inner_at(va).ok_or("monochrome vertex lacks an inner edge")?;
        let eb = inner_at(vb).ok_or("monochrome vertex lacks an inner edge")?;
        if ea == eb {
            return Err("degenerate circle: both inner slots on one edge".into());
        }
        // orientations: one inner edge arrives (head at the circle), the
        // other leaves
        let (incoming, outgoing) = if ix.head_vertex(d, ea) == va || ix.head_vertex(d, ea) == vb {
            (ea, eb)
        } else {
            (eb, ea)
        };
        if !(ix.tail_vertex(d, outgoing) == va || ix.tail_vertex(d, outgoing) == vb) {
            return Err("circle inner edges are incoherently oriented".into());
        }

        let u = ix.tail_vertex(d, incoming);
        let w = ix.head_vertex(d, outgoing);
        let (it, ih) = (d.edge(incoming).darts.0, d.edge(incoming).darts.1.unwrap());
        let (ot, oh) = (d.edge(outgoing).darts.0, d.edge(outgoing).darts.1.unwrap());
        let _ = (ih, ot);

        // splice: new inner edge u -> w replacing incoming + circle + outgoing
        let (enew, tn, hn) = ed.add_inner_edge(kind);
        ed.replace_in_vertex(u, it, tn);
        ed.replace_in_vertex(w, oh, hn);

        // walks: each side of the circle reads [incoming.tail, arc, outgoing.tail]
        // (in some order with possible other content between when walks are
        // longer); replace the three-entry run by the new tail dart.
        let a1d = d.edge(arcs[0]).darts.0;
        let a2d = d.edge(arcs[1]).darts.0;
        for arc_dart in [a1d, a2d] {
            let pos = ed.walk_positions(arc_dart);
            if pos.len() != 1 {
                return Err("arc traversed unexpectedly".into());
            }
            let (r, wi, p) = pos[0];
            // the run is [it, arc, ot] cyclically; locate `it` before and
            // `ot` after
            let walk = ed.region_mut(r).walks[wi].clone();
            let m = walk.len();
            let prev = (p + m - 1) % m;
            let next = (p + 1) % m;
            if walk[prev] != it || walk[next] != ot {
                return Err("circle walk structure unexpected".into());
            }
            // replace the three entries by tn
            let mut neww: Vec<crate::map::Dart> = Vec::with_capacity(m - 2);
            let mut i = next;
            // start after `ot`, copy until reaching `prev`
            loop {
                i = (i + 1) % m;
                if i == prev {
                    break;
                }
                neww.push(walk[i]);
            }
            neww.push(tn);
            ed.region_mut(r).walks[wi] = neww;
        }

        ed.drop_edge(incoming);
        ed.drop_edge(outgoing);
        ed.drop_edge(arcs[0]);
        ed.drop_edge(arcs[1]);
        ed.drop_vertex(va);
        ed.drop_vertex(vb);
        if keep_marks {
            ed.marks.push(Mark { edge: enew, index: 0 });
        }
        removed.push(enew);
    }

    let (dessin, edge_map) = ed.finish_with_map()?;
    let removed = removed
        .iter()
        .filter_map(|e| edge_map.get(&e.0).map(|&x| InflationSite { edge: EdgeId(x) }))
        .collect();
    Ok(Reduction { dessin, removed })
}

/// Contract all monochrome real components.
pub fn reduce_all(d: &Dessin, keep_marks: bool) -> Result<Reduction, String> {
    let comps = monochrome_components(d);
    reduce(d, &comps, keep_marks)
}

/// The monochrome real components, as vertex lists.
pub fn monochrome_components(d: &Dessin) -> Vec<Vec<VertexId>> {
    let circles = match d.boundary_circles() {
        Ok(c) => c,
        Err(_) => return Vec::new(),
    };
    circles
        .iter()
        .filter(|c| {
            c.verts
                .iter()
                .all(|&v| matches!(d.vertex(v).kind, VertexKind::Monochrome(_)))
        })
        .map(|c| c.verts.clone())
        .collect()
}

/// A dessin is reduced if it has no monochrome real components.
pub fn is_reduced(d: &Dessin) -> bool {
    monochrome_components(d).is_empty()
}

/// Totally reduced: no even real components without cross vertices.
pub fn is_totally_reduced(d: &Dessin) -> bool {
    let circles = match d.boundary_circles() {
        Ok(c) => c,
        Err(_) => return false,
    };
    for c in &circles {
        let whites = c
            .verts
            .iter()
            .filter(|&&v| d.vertex(v).kind == VertexKind::White)
            .count();
        let crosses = c
            .verts
            .iter()
            .any(|&v| d.vertex(v).kind == VertexKind::Cross);
        if whites % 2 == 0 && !crosses {
            return false;
        }
    }
    true
}

#[allow(unused_imports)]
use crate::map::EdgeKind as _EK;
#[allow(unused)]
fn _k(_: EdgeKind) {}
