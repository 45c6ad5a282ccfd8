//! The star-like hyperbolic cubic and its inflations.

use alloc::vec;
use alloc::vec::Vec;

use crate::map::assembly::{assemble, AssemblySpec};
use crate::map::{Dessin, EdgeKind, VertexKind};

/// The hyperbolic cubic on a disk: one odd real component carrying three
/// whites and three dotted monochrome vertices, an inner black of full
/// valency six, and three inner crosses.
pub fn star0() -> Dessin {
    let mut vertices = Vec::new();
    // 0..3 whites, 3..6 monos, 6 black, 7..10 crosses
    for _ in 0..3 {
        vertices.push((VertexKind::White, true));
    }
    for _ in 0..3 {
        vertices.push((VertexKind::Monochrome(EdgeKind::Dotted), true));
    }
    vertices.push((VertexKind::Black, false));
    for _ in 0..3 {
        vertices.push((VertexKind::Cross, false));
    }
    let w = |i: usize| i;
    let m = |i: usize| 3 + i;
    let black = 6usize;
    let x = |i: usize| 7 + i;

    // edges: 0..3 fwd real dotted (w_i -> m_i), 3..6 bwd real dotted
    // (w_{i+1} -> m_i), 6..9 inner dotted (m_i -> x_i), 9..12 inner solid
    // (x_i -> black), 12..15 inner bold (black -> w_i)
    let mut edges = Vec::new();
    for _ in 0..6 {
        edges.push((EdgeKind::Dotted, true));
    }
    for _ in 0..3 {
        edges.push((EdgeKind::Dotted, false));
    }
    for _ in 0..3 {
        edges.push((EdgeKind::Solid, false));
    }
    for _ in 0..3 {
        edges.push((EdgeKind::Bold, false));
    }
    let fwd = |i: usize| i;
    let bwd = |i: usize| 3 + i;
    let dot = |i: usize| 6 + i;
    let sol = |i: usize| 9 + i;
    let bold = |i: usize| 12 + i;

    let mut walks = Vec::new();
    for i in 0..3 {
        walks.push((
            vec![bold(i), fwd(i), dot(i), sol(i)],
            vec![w(i), m(i), x(i), black],
        ));
        walks.push((
            vec![bold((i + 1) % 3), bwd(i), dot(i), sol(i)],
            vec![w((i + 1) % 3), m(i), x(i), black],
        ));
    }

    assemble(&AssemblySpec { vertices, edges, walks, regions: Vec::new() })
        .expect("star0 is well-formed")
}

/// `STAR(g)`: the star cubic with `g` dotted monochrome circles inflated
/// onto inner dotted edges.
pub fn star(g: u32) -> Dessin {
    let mut d = star0();
    for _ in 0..g {
        let target = d
            .edge_ids()
            .find(|&e| !d.edge(e).real && d.edge(e).kind == EdgeKind::Dotted)
            .expect("star has inner dotted edges");
        d = crate::surgery::inflate_edge(&d, target).expect("inflation of a star");
    }
    d
}
