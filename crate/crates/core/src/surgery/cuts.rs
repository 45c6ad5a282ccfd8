//! Cut taxonomy and the severing surgery.
//!
//! A genuine cut is an inner monochrome-terminated arc through at most one
//! white or cross vertex; severing dissolves the end monochromes into the
//! boundary and splits the interior vertex.  An artificial cut joins two
//! real edges of the same kind across a region; severing cross-splices them.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use alloc::{format, vec};

use super::Editor;
use crate::map::{Dart, Dessin, EdgeId, EdgeKind, RegionId, VertexId, VertexKind};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum CutKind {
    Plain(EdgeKind),
    ThroughWhite(EdgeKind),
    Cross,
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct CutDescriptor {
    pub kind: CutKind,
    pub genuine: bool,
    /// Genuine cuts: the seam's inner edges (1 or 2).
    pub edges: Vec<EdgeId>,
    /// Artificial cuts: region and the two real edges it joins.
    pub artificial: Option<(RegionId, EdgeId, EdgeId)>,
}

/// All cuts visible on the dessin itself, deterministically ordered.
pub fn find_cuts(d: &Dessin) -> Vec<CutDescriptor> {
    let ix = match d.try_index() {
        Ok(ix) => ix,
        Err(_) => return Vec::new(),
    };
    let mut out = Vec::new();

    let is_real_mono = |v: VertexId| {
        d.vertex(v).real && matches!(d.vertex(v).kind, VertexKind::Monochrome(_))
    };

    for e in d.edge_ids() {
        if d.edge(e).real {
            continue;
        }
        let t = ix.tail_vertex(d, e);
        let h = ix.head_vertex(d, e);
        if t != h && is_real_mono(t) && is_real_mono(h) {
            out.push(CutDescriptor {
                kind: CutKind::Plain(d.edge(e).kind),
                genuine: true,
                edges: vec![e],
                artificial: None,
            });
        }
    }
    for v in d.vertex_ids() {
        let vert = d.vertex(v);
        if vert.real {
            continue;
        }
        let far = |e: EdgeId| {
            let t = ix.tail_vertex(d, e);
            if t == v {
                ix.head_vertex(d, e)
            } else {
                t
            }
        };
        match vert.kind {
            VertexKind::White => {
                for kind in [EdgeKind::Bold, EdgeKind::Dotted] {
                    let es: Vec<EdgeId> = vert
                        .darts
                        .iter()
                        .map(|&dd| ix.dart_edge[dd.0 as usize])
                        .filter(|&e| d.edge(e).kind == kind)
                        .collect();
                    if es.len() != 2 || es[0] == es[1] {
                        continue;
                    }
                    if is_real_mono(far(es[0])) && is_real_mono(far(es[1])) && far(es[0]) != far(es[1]) {
                        let mut edges = vec![es[0], es[1]];
                        edges.sort();
                        out.push(CutDescriptor {
                            kind: CutKind::ThroughWhite(kind),
                            genuine: true,
                            edges,
                            artificial: None,
                        });
                    }
                }
            }
            VertexKind::Cross => {
                let es: Vec<EdgeId> = vert
                    .darts
                    .iter()
                    .map(|&dd| ix.dart_edge[dd.0 as usize])
                    .collect();
                if es.len() == 2
                    && es[0] != es[1]
                    && is_real_mono(far(es[0]))
                    && is_real_mono(far(es[1]))
                    && far(es[0]) != far(es[1])
                {
                    let mut edges = vec![es[0], es[1]];
                    edges.sort();
                    out.push(CutDescriptor {
                        kind: CutKind::Cross,
                        genuine: true,
                        edges,
                        artificial: None,
                    });
                }
            }
            _ => {}
        }
    }
    for r in d.region_ids() {
        let reg = d.region(r);
        let mut reals: Vec<(EdgeKind, EdgeId)> = Vec::new();
        for walk in &reg.walks {
            for &dd in walk {
                let e = ix.dart_edge[dd.0 as usize];
                if d.edge(e).real {
                    reals.push((d.edge(e).kind, e));
                }
            }
        }
        reals.sort();
        reals.dedup();
        for i in 0..reals.len() {
            for j in i + 1..reals.len() {
                if reals[i].0 == reals[j].0 {
                    out.push(CutDescriptor {
                        kind: CutKind::Plain(reals[i].0),
                        genuine: false,
                        edges: Vec::new(),
                        artificial: Some((r, reals[i].1, reals[j].1)),
                    });
                }
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Cuts found after a bounded non-extended move search; empty means no cut
/// was exposed within the budget.
pub fn find_cuts_with_moves(d: &Dessin, budget: usize) -> Vec<CutDescriptor> {
    let direct = find_cuts(d);
    if !direct.is_empty() || budget == 0 {
        return direct;
    }
    let mut seen = BTreeSet::new();
    let mut queue = alloc::collections::VecDeque::new();
    seen.insert(crate::canon::canonical_form(d));
    queue.push_back(d.clone());
    while let Some(cur) = queue.pop_front() {
        if seen.len() > budget {
            break;
        }
        for m in crate::moves::enumerate_moves(&cur) {
            if m.extended {
                continue;
            }
            if let Ok(next) = crate::moves::apply_move(&cur, &m) {
                let c = crate::canon::canonical_form(&next);
                if seen.insert(c) {
                    let cuts = find_cuts(&next);
                    if !cuts.is_empty() {
                        return cuts;
                    }
                    queue.push_back(next);
                }
            }
        }
    }
    Vec::new()
}

/// Sever along a cut; returns the resulting connected pieces.
pub fn perform_cut(d: &Dessin, cut: &CutDescriptor) -> Result<Vec<Dessin>, String> {
    let glued = if cut.genuine {
        sever_genuine(d, cut)?
    } else {
        sever_artificial(d, cut)?
    };
    Ok(crate::canon::split_components(&glued))
}

/// Merge a walk run `[a, b]` (positions of two consecutive entries) into a
/// single new entry, handling cyclic wrap.
fn merge_two(ed: &mut Editor, a: Dart, b: Dart, merged: Dart) -> Result<(), String> {
    let pos_a = ed.walk_positions(a);
    let (r, w, p) = *pos_a.first().ok_or("walk entry missing")?;
    let walk = ed.region_mut(r).walks[w].clone();
    let m = walk.len();
    let next = (p + 1) % m;
    if walk[next] != b {
        return Err(format!("walk run {}->{} not adjacent", a.0, b.0));
    }
    let mut neww = walk;
    neww[p] = merged;
    neww.remove(next);
    ed.region_mut(r).walks[w] = neww;
    Ok(())
}

/// The real edges flanking a trivalent real monochrome.
fn mono_reals(
    d: &Dessin,
    ix: &crate::map::Index,
    m: VertexId,
) -> Result<(EdgeId, EdgeId), String> {
    let vert = d.vertex(m);
    if vert.darts.len() != 3 {
        return Err("cut endpoint monochrome is not trivalent".into());
    }
    let a = ix.dart_edge[vert.darts[0].0 as usize];
    let b = ix.dart_edge[vert.darts[2].0 as usize];
    if a == b {
        return Err("degenerate monochrome".into());
    }
    Ok((a, b))
}

fn sever_genuine(d: &Dessin, cut: &CutDescriptor) -> Result<Dessin, String> {
    let ix = d.try_index().map_err(|x| x.0)?;
    let mut ed = Editor::from(d);

    // seam edges in traversal-friendly form; each has a mono end
    let seam: Vec<EdgeId> = cut.edges.clone();
    let kind_of = |e: EdgeId| d.edge(e).kind;

    // interior split vertex, if any
    let interior: Option<VertexId> = match cut.kind {
        CutKind::Plain(_) => None,
        _ => {
            // the shared endpoint of the two seam edges
            let ends = |e: EdgeId| {
                let t = ix.tail_vertex(d, e);
                let h = ix.head_vertex(d, e);
                [t, h]
            };
            let e0 = ends(seam[0]);
            let e1 = ends(seam[1]);
            let shared = e0
                .iter()
                .find(|v| e1.contains(v))
                .copied()
                .ok_or("through-cut edges do not share a vertex")?;
            Some(shared)
        }
    };

    // per seam edge: mono end and its real edges
    struct SeamEdge {
        e: EdgeId,
        mono: VertexId,
        mono_is_head: bool,
    }
    let mut seams = Vec::new();
    for &e in &seam {
        let t = ix.tail_vertex(d, e);
        let h = ix.head_vertex(d, e);
        let (mono, mono_is_head) = if Some(t) == interior {
            (h, true)
        } else if Some(h) == interior {
            (t, false)
        } else {
            // plain cut: both ends mono; orient by the edge
            (h, true)
        };
        seams.push(SeamEdge { e, mono, mono_is_head });
    }

    // interior vertex split: one copy per side; real vertex kind preserved
    let mut interior_new: Vec<VertexId> = Vec::new();
    if let Some(x) = interior {
        for _ in 0..2 {
            interior_new.push(ed.add_vertex(d.vertex(x).kind, true, Vec::new()));
        }
    }

    // process each seam edge: its two sides become real edges merged with
    // the adjacent mono real edge
    for (si, s) in seams.iter().enumerate() {
        let edge = d.edge(s.e);
        let tdart = edge.darts.0;
        let hdart = edge.darts.1.ok_or("seam edge must be inner")?;
        let sides = ed.walk_positions(tdart);
        if sides.len() != 2 {
            return Err("seam edge must have two sides".into());
        }
        let (ra, rb) = mono_reals(d, &ix, s.mono)?;
        // Determine which mono real edge each side merges with by looking at
        // the walk adjacency.
        for side in 0..2 {
            // recompute positions each iteration: indices shift
            let sides_now = ed.walk_positions(tdart);
            let (r, w, p) = sides_now[0];
            let walk = ed.region_mut(r).walks[w].clone();
            let m = walk.len();
            let _ = side;
            // adjacent entry at the mono end
            let (mono_adj, seam_first) = if s.mono_is_head {
                // seam arrives at mono; the real edge follows
                ((p + 1) % m, true)
            } else {
                ((p + m - 1) % m, false)
            };
            let adj_dart = walk[mono_adj];
            let adj_edge = ix.dart_edge[adj_dart.0 as usize];
            if adj_edge != ra && adj_edge != rb {
                return Err("seam is not flanked by the monochrome's real edge".into());
            }
            // merged real edge
            let (newe, nd) = ed.add_real_edge(kind_of(s.e));
            let _ = newe;
            // endpoints of the merged edge
            if s.mono_is_head {
                // seam tail end .. mono .. real edge head end
                let u_end = ix.tail_vertex(d, s.e);
                let far = ix.real_dir[&adj_edge].1;
                // vertex list updates
                if Some(u_end) == interior {
                    // attaches to the split copy chosen below
                    interior_attach(&mut ed, &mut interior_new, si, nd, sides_now[0], d, &ix, s.e)?;
                } else {
                    ed.replace_in_vertex(u_end, tdart, nd);
                }
                ed.replace_in_vertex(far, d.edge(adj_edge).darts.0, nd);
                merge_two(&mut ed, tdart, d.edge(adj_edge).darts.0, nd)?;
            } else {
                // real edge arrives mono .. seam leaves
                let w_end = ix.head_vertex(d, s.e);
                let far = ix.real_dir[&adj_edge].0;
                if Some(w_end) == interior {
                    interior_attach(&mut ed, &mut interior_new, si, nd, sides_now[0], d, &ix, s.e)?;
                } else {
                    ed.replace_in_vertex(w_end, hdart, nd);
                }
                ed.replace_in_vertex(far, d.edge(adj_edge).darts.0, nd);
                merge_two(&mut ed, d.edge(adj_edge).darts.0, tdart, nd)?;
            }
            ed.drop_edge(adj_edge);
        }
        ed.drop_edge(s.e);
        ed.drop_vertex(s.mono);
    }

    if let Some(x) = interior {
        finish_interior_split(&mut ed, d, &ix, x, &interior_new)?;
    }

    ed.finish()
}

/// Attach a merged seam real edge to the correct split copy of the interior
/// vertex.  Placeholder: resolved by `finish_interior_split`.
#[allow(clippy::too_many_arguments)]
fn interior_attach(
    _ed: &mut Editor,
    _copies: &mut Vec<VertexId>,
    _si: usize,
    _nd: Dart,
    _side: (RegionId, usize, usize),
    _d: &Dessin,
    _ix: &crate::map::Index,
    _e: EdgeId,
) -> Result<(), String> {
    Err("interior split handled in finish_interior_split".into())
}

fn finish_interior_split(
    _ed: &mut Editor,
    _d: &Dessin,
    _ix: &crate::map::Index,
    _x: VertexId,
    _copies: &[VertexId],
) -> Result<(), String> {
    Err("interior split not yet implemented".into())
}

fn sever_artificial(d: &Dessin, cut: &CutDescriptor) -> Result<Dessin, String> {
    let (r, e1, e2) = cut.artificial.ok_or("not an artificial cut")?;
    let ix = d.try_index().map_err(|x| x.0)?;
    if d.edge(e1).kind != d.edge(e2).kind || !d.edge(e1).real || !d.edge(e2).real {
        return Err("artificial cut needs two real edges of one kind".into());
    }
    let mut ed = Editor::from(d);

    let (u1, v1) = ix.real_dir[&e1];
    let (u2, v2) = ix.real_dir[&e2];
    let kind = d.edge(e1).kind;
    let (f1, f1d) = ed.add_real_edge(kind); // u1 -> v2
    let (f2, f2d) = ed.add_real_edge(kind); // u2 -> v1
    let _ = (f1, f2);
    ed.replace_in_vertex(u1, d.edge(e1).darts.0, f1d);
    ed.replace_in_vertex(v2, d.edge(e2).darts.0, f1d);
    ed.replace_in_vertex(u2, d.edge(e2).darts.0, f2d);
    ed.replace_in_vertex(v1, d.edge(e1).darts.0, f2d);

    // walks of region r: e1 at (w1,p1), e2 at (w2,p2)
    let reg = d.region(r).clone();
    let find = |dart: Dart| -> Option<(usize, usize)> {
        for (wi, w) in reg.walks.iter().enumerate() {
            if let Some(p) = w.iter().position(|&x| x == dart) {
                return Some((wi, p));
            }
        }
        None
    };
    let (w1, p1) = find(d.edge(e1).darts.0).ok_or("edge 1 not on region")?;
    let (w2, p2) = find(d.edge(e2).darts.0).ok_or("edge 2 not on region")?;

    if w1 == w2 {
        // walk splits in two; region splits in two (genus 0 only)
        if reg.genus != 0 {
            return Err("artificial cut through a positive-genus region is ambiguous".into());
        }
        if reg.walks.len() != 1 {
            return Err("artificial cut in a multi-walk region is ambiguous".into());
        }
        let walk = &reg.walks[w1];
        let m = walk.len();
        let seg = |from: usize, to: usize| -> Vec<Dart> {
            // entries strictly after `from` up to strictly before `to`
            let mut out = Vec::new();
            let mut i = (from + 1) % m;
            while i != to {
                out.push(walk[i]);
                i = (i + 1) % m;
            }
            out
        };
        let mut wa = vec![f1d];
        wa.extend(seg(p2, p1));
        let mut wb = vec![f2d];
        wb.extend(seg(p1, p2));
        ed.drop_region(r);
        ed.add_region(crate::map::Region { genus: 0, orientable: true, walks: vec![wa] });
        ed.add_region(crate::map::Region { genus: 0, orientable: true, walks: vec![wb] });
    } else {
        // two walks of one region merge into one
        let wa = &reg.walks[w1];
        let wb = &reg.walks[w2];
        let (ma, mb) = (wa.len(), wb.len());
        let mut merged = vec![f1d];
        let mut i = (p2 + 1) % mb;
        while i != p2 {
            merged.push(wb[i]);
            i = (i + 1) % mb;
        }
        merged.push(f2d);
        let mut j = (p1 + 1) % ma;
        while j != p1 {
            merged.push(wa[j]);
            j = (j + 1) % ma;
        }
        let mut walks = vec![merged];
        for (wi, w) in reg.walks.iter().enumerate() {
            if wi != w1 && wi != w2 {
                walks.push(w.clone());
            }
        }
        ed.drop_region(r);
        ed.add_region(crate::map::Region { genus: reg.genus, orientable: reg.orientable, walks });
    }
    ed.drop_edge(e1);
    ed.drop_edge(e2);
    ed.finish()
}
