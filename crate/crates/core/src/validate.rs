//! Axiom and admissibility checks producing a per-check report.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use alloc::{format, vec};

use crate::map::{Dessin, EdgeId, EdgeKind, Index, StructError, VertexId, VertexKind};

/// One reported violation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Violation {
    pub check: Check,
    pub detail: String,
}

/// The individual checks: trichotomic axioms (1)-(8), dessin conditions
/// (1)-(3), the full-valency condition (*), and admissibility.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Check {
    /// boundary covered by real edges and vertices, two boundary edges per
    /// real vertex
    Axiom1,
    /// essential valency >= 2, monochrome valency >= 3
    Axiom2,
    /// edge orientations orient each region boundary coherently; regions
    /// orientable; orientations alternate at vertices
    Axiom3,
    /// monochrome vertices meet only edges of their own kind
    Axiom4,
    /// cross: incoming dotted, outgoing solid
    Axiom5,
    /// black: incoming solid, outgoing bold
    Axiom6,
    /// white: incoming bold, outgoing dotted
    Axiom7,
    /// every triangle is a disk
    Axiom8,
    /// full valencies 2 / 4 / 6 for cross / white / black
    DessinValency,
    /// real monochrome vertices are trivalent
    DessinMonoValency,
    /// no inner monochrome vertices
    DessinNoInnerMono,
    /// condition (*): full valency 2 / 0 mod 4 / 0 mod 6
    Star,
    /// no oriented monochrome cycles
    Admissible,
}

impl Check {
    pub const ALL: [Check; 13] = [
        Check::Axiom1,
        Check::Axiom2,
        Check::Axiom3,
        Check::Axiom4,
        Check::Axiom5,
        Check::Axiom6,
        Check::Axiom7,
        Check::Axiom8,
        Check::DessinValency,
        Check::DessinMonoValency,
        Check::DessinNoInnerMono,
        Check::Star,
        Check::Admissible,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Axiom1 => "axiom-1-boundary",
            Check::Axiom2 => "axiom-2-valency",
            Check::Axiom3 => "axiom-3-orientation",
            Check::Axiom4 => "axiom-4-monochrome",
            Check::Axiom5 => "axiom-5-cross",
            Check::Axiom6 => "axiom-6-black",
            Check::Axiom7 => "axiom-7-white",
            Check::Axiom8 => "axiom-8-triangles",
            Check::DessinValency => "dessin-1-full-valency",
            Check::DessinMonoValency => "dessin-2-mono-valency",
            Check::DessinNoInnerMono => "dessin-3-no-inner-mono",
            Check::Star => "condition-star",
            Check::Admissible => "admissible",
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ValidationReport {
    pub structural: Option<StructError>,
    pub violations: Vec<Violation>,
    /// An offending oriented monochrome cycle, when admissibility fails.
    pub monochrome_cycle: Option<Vec<VertexId>>,
}

impl ValidationReport {
    pub fn passed(&self, check: Check) -> bool {
        self.structural.is_none() && self.violations.iter().all(|v| v.check != check)
    }

    /// Valid trichotomic graph: axioms (1)-(8) plus admissibility.
    pub fn is_trichotomic(&self) -> bool {
        self.structural.is_none()
            && self.violations.iter().all(|v| {
                !matches!(
                    v.check,
                    Check::Axiom1
                        | Check::Axiom2
                        | Check::Axiom3
                        | Check::Axiom4
                        | Check::Axiom5
                        | Check::Axiom6
                        | Check::Axiom7
                        | Check::Axiom8
                        | Check::Admissible
                )
            })
    }

    /// Valid dessin: everything holds.
    pub fn is_valid_dessin(&self) -> bool {
        self.structural.is_none() && self.violations.is_empty()
    }
}

/// Full validation; never panics on malformed input.
pub fn validate(d: &Dessin) -> ValidationReport {
    let ix = match d.try_index() {
        Ok(ix) => ix,
        Err(e) => {
            return ValidationReport {
                structural: Some(e),
                violations: Vec::new(),
                monochrome_cycle: None,
            }
        }
    };
    let mut out = Vec::new();

    check_boundary(d, &ix, &mut out);
    check_valency(d, &mut out);
    check_orientation(d, &ix, &mut out);
    check_kinds(d, &ix, &mut out);
    check_triangles(d, &ix, &mut out);
    check_dessin_conditions(d, &ix, &mut out);
    let cycle = check_admissible(d, &ix, &mut out);

    ValidationReport {
        structural: None,
        violations: out,
        monochrome_cycle: cycle,
    }
}

/// Full valency: valency for inner vertices, 2*valency - 2 for real ones.
pub fn full_valency(d: &Dessin, v: VertexId) -> u32 {
    let vert = d.vertex(v);
    let k = vert.darts.len() as u32;
    if vert.real {
        2 * k - 2
    } else {
        k
    }
}

fn check_boundary(d: &Dessin, ix: &Index, out: &mut Vec<Violation>) {
    // every real vertex carries exactly two real-edge darts at the extremes
    for v in d.vertex_ids() {
        let vert = d.vertex(v);
        if !vert.real {
            continue;
        }
        let first = ix.dart_edge[vert.darts[0].0 as usize];
        let last = ix.dart_edge[vert.darts[vert.darts.len() - 1].0 as usize];
        if !d.edge(first).real || !d.edge(last).real || first == last {
            out.push(Violation {
                check: Check::Axiom1,
                detail: format!("vertex {} lacks two distinct boundary edges", v.0),
            });
        }
    }
    // boundary circles close up
    let circles = d.boundary_circles_with(ix);
    let mut covered: BTreeSet<EdgeId> = BTreeSet::new();
    for c in &circles {
        covered.extend(c.edges.iter().copied());
    }
    for e in d.edge_ids() {
        if d.edge(e).real && !covered.contains(&e) {
            out.push(Violation {
                check: Check::Axiom1,
                detail: format!("real edge {} lies on no boundary circle", e.0),
            });
        }
    }
}

fn check_valency(d: &Dessin, out: &mut Vec<Violation>) {
    for v in d.vertex_ids() {
        let vert = d.vertex(v);
        let val = vert.darts.len();
        let min = if vert.kind.is_essential() { 2 } else { 3 };
        if val < min {
            out.push(Violation {
                check: Check::Axiom2,
                detail: format!("vertex {} has valency {}, needs >= {}", v.0, val, min),
            });
        }
    }
}

fn check_orientation(d: &Dessin, ix: &Index, out: &mut Vec<Violation>) {
    // in/out alternation along every rotation
    for v in d.vertex_ids() {
        let vert = d.vertex(v);
        let n = vert.darts.len();
        let dirs: Vec<bool> = vert
            .darts
            .iter()
            .map(|&dd| ix.incoming_at(d, v, dd))
            .collect();
        let pairs = if vert.real { n - 1 } else { n };
        for i in 0..pairs {
            if dirs[i] == dirs[(i + 1) % n] {
                out.push(Violation {
                    check: Check::Axiom3,
                    detail: format!("orientations do not alternate at vertex {}", v.0),
                });
                break;
            }
        }
    }
    // regions orientable (their walks already run along edge orientations by
    // construction of the index)
    for r in d.region_ids() {
        if !d.region(r).orientable {
            out.push(Violation {
                check: Check::Axiom3,
                detail: format!("region {} marked non-orientable", r.0),
            });
        }
    }
}

fn check_kinds(d: &Dessin, ix: &Index, out: &mut Vec<Violation>) {
    for v in d.vertex_ids() {
        let vert = d.vertex(v);
        for &dd in &vert.darts {
            let e = ix.dart_edge[dd.0 as usize];
            let kind = d.edge(e).kind;
            let incoming = ix.incoming_at(d, v, dd);
            match vert.kind {
                VertexKind::Monochrome(k) => {
                    if kind != k {
                        out.push(Violation {
                            check: Check::Axiom4,
                            detail: format!(
                                "monochrome vertex {} meets a {} edge",
                                v.0,
                                kind.name()
                            ),
                        });
                    }
                }
                VertexKind::Cross => {
                    let ok = (incoming && kind == EdgeKind::Dotted)
                        || (!incoming && kind == EdgeKind::Solid);
                    if !ok {
                        out.push(Violation {
                            check: Check::Axiom5,
                            detail: format!(
                                "cross vertex {} has {} {} edge",
                                v.0,
                                if incoming { "incoming" } else { "outgoing" },
                                kind.name()
                            ),
                        });
                    }
                }
                VertexKind::Black => {
                    let ok = (incoming && kind == EdgeKind::Solid)
                        || (!incoming && kind == EdgeKind::Bold);
                    if !ok {
                        out.push(Violation {
                            check: Check::Axiom6,
                            detail: format!(
                                "black vertex {} has {} {} edge",
                                v.0,
                                if incoming { "incoming" } else { "outgoing" },
                                kind.name()
                            ),
                        });
                    }
                }
                VertexKind::White => {
                    let ok = (incoming && kind == EdgeKind::Bold)
                        || (!incoming && kind == EdgeKind::Dotted);
                    if !ok {
                        out.push(Violation {
                            check: Check::Axiom7,
                            detail: format!(
                                "white vertex {} has {} {} edge",
                                v.0,
                                if incoming { "incoming" } else { "outgoing" },
                                kind.name()
                            ),
                        });
                    }
                }
            }
        }
    }
}

fn check_triangles(d: &Dessin, ix: &Index, out: &mut Vec<Violation>) {
    for r in d.region_ids() {
        let reg = d.region(r);
        let mut essential = 0usize;
        for (wi, walk) in reg.walks.iter().enumerate() {
            for pos in 0..walk.len() {
                let v = ix.step_vertex[r.0 as usize][wi][pos];
                if d.vertex(v).kind.is_essential() {
                    essential += 1;
                }
            }
        }
        if essential == 3 {
            let disk = reg.genus == 0 && reg.orientable && reg.walks.len() == 1;
            if !disk {
                out.push(Violation {
                    check: Check::Axiom8,
                    detail: format!("triangle region {} is not a disk", r.0),
                });
            }
        }
    }
}

fn check_dessin_conditions(d: &Dessin, ix: &Index, out: &mut Vec<Violation>) {
    let _ = ix;
    for v in d.vertex_ids() {
        let vert = d.vertex(v);
        let fv = full_valency(d, v);
        match vert.kind {
            VertexKind::Cross => {
                if fv != 2 {
                    out.push(Violation {
                        check: Check::DessinValency,
                        detail: format!("cross vertex {} has full valency {}", v.0, fv),
                    });
                }
                if fv != 2 {
                    out.push(Violation {
                        check: Check::Star,
                        detail: format!("cross vertex {} has full valency {}", v.0, fv),
                    });
                }
            }
            VertexKind::White => {
                if fv != 4 {
                    out.push(Violation {
                        check: Check::DessinValency,
                        detail: format!("white vertex {} has full valency {}", v.0, fv),
                    });
                }
                if fv % 4 != 0 {
                    out.push(Violation {
                        check: Check::Star,
                        detail: format!("white vertex {} has full valency {}", v.0, fv),
                    });
                }
            }
            VertexKind::Black => {
                if fv != 6 {
                    out.push(Violation {
                        check: Check::DessinValency,
                        detail: format!("black vertex {} has full valency {}", v.0, fv),
                    });
                }
                if fv % 6 != 0 {
                    out.push(Violation {
                        check: Check::Star,
                        detail: format!("black vertex {} has full valency {}", v.0, fv),
                    });
                }
            }
            VertexKind::Monochrome(_) => {
                if vert.real {
                    if vert.darts.len() != 3 {
                        out.push(Violation {
                            check: Check::DessinMonoValency,
                            detail: format!(
                                "real monochrome vertex {} has valency {}",
                                v.0,
                                vert.darts.len()
                            ),
                        });
                    }
                } else {
                    out.push(Violation {
                        check: Check::DessinNoInnerMono,
                        detail: format!("inner monochrome vertex {}", v.0),
                    });
                }
            }
        }
    }
}

/// Monochrome order: arcs between monochrome vertices along same-kind edges.
/// Admissible iff the digraph is acyclic.
fn check_admissible(
    d: &Dessin,
    ix: &Index,
    out: &mut Vec<Violation>,
) -> Option<Vec<VertexId>> {
    let mut arcs: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
    let mut nodes: BTreeSet<VertexId> = BTreeSet::new();
    for v in d.vertex_ids() {
        if let VertexKind::Monochrome(_) = d.vertex(v).kind {
            nodes.insert(v);
        }
    }
    for e in d.edge_ids() {
        let t = ix.tail_vertex(d, e);
        let h = ix.head_vertex(d, e);
        if nodes.contains(&t) && nodes.contains(&h) {
            arcs.entry(t).or_default().push(h);
        }
    }
    // DFS cycle detection with path recovery
    let mut state: BTreeMap<VertexId, u8> = BTreeMap::new(); // 1 = open, 2 = done
    for &start in &nodes {
        if state.get(&start).copied().unwrap_or(0) != 0 {
            continue;
        }
        let mut path: Vec<VertexId> = Vec::new();
        let mut stack: Vec<(VertexId, usize)> = vec![(start, 0)];
        state.insert(start, 1);
        path.push(start);
        while let Some(&mut (v, ref mut i)) = stack.last_mut() {
            let next = arcs.get(&v).and_then(|a| a.get(*i).copied());
            match next {
                Some(w) => {
                    *i += 1;
                    match state.get(&w).copied().unwrap_or(0) {
                        0 => {
                            state.insert(w, 1);
                            stack.push((w, 0));
                            path.push(w);
                        }
                        1 => {
                            // cycle found
                            let k = path.iter().position(|&x| x == w).unwrap_or(0);
                            let cycle: Vec<VertexId> = path[k..].to_vec();
                            out.push(Violation {
                                check: Check::Admissible,
                                detail: format!(
                                    "oriented monochrome cycle through vertex {}",
                                    w.0
                                ),
                            });
                            return Some(cycle);
                        }
                        _ => {}
                    }
                }
                None => {
                    state.insert(v, 2);
                    stack.pop();
                    path.pop();
                }
            }
        }
    }
    None
}
