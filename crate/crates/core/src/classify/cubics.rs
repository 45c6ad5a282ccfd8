//! The peripheral reduced cubics, assembled from the region catalog.
//!
//! Each region of an indecomposable reduced peripheral dessin is one of ten
//! triangles or three hexagons; a peripheral cubic is a chain (or, with a
//! hexagon, a small tree) of such cells attached along their inner ends.
//! The eleven adjacency schemes below produce all of them.  Two of the
//! schemes (the two mixed chains through 3-1/5-1/5-2/3-2) describe the same
//! dessin up to homeomorphism, so the schemes represent ten distinct dessins
//! in seven equivalence classes.

use alloc::string::String;
use alloc::vec::Vec;
use alloc::{format, vec};

use crate::map::assembly::{assemble, AssemblySpec};
use crate::map::{Dessin, EdgeKind, VertexKind};

/// The seven equivalence classes of cubics: type I has an oval, the
/// subscript counts zigzags.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum CubicClass {
    I0,
    I1,
    I2,
    II0,
    II1,
    II2,
    II3,
}

impl CubicClass {
    pub const ALL: [CubicClass; 7] = [
        CubicClass::I0,
        CubicClass::I1,
        CubicClass::I2,
        CubicClass::II0,
        CubicClass::II1,
        CubicClass::II2,
        CubicClass::II3,
    ];

    pub fn has_oval(self) -> bool {
        matches!(self, CubicClass::I0 | CubicClass::I1 | CubicClass::I2)
    }

    pub fn zigzags(self) -> u32 {
        match self {
            CubicClass::I0 | CubicClass::II0 => 0,
            CubicClass::I1 | CubicClass::II1 => 1,
            CubicClass::I2 | CubicClass::II2 => 2,
            CubicClass::II3 => 3,
        }
    }

    pub fn from_counts(has_oval: bool, zigzags: u32) -> Option<CubicClass> {
        Some(match (has_oval, zigzags) {
            (true, 0) => CubicClass::I0,
            (true, 1) => CubicClass::I1,
            (true, 2) => CubicClass::I2,
            (false, 0) => CubicClass::II0,
            (false, 1) => CubicClass::II1,
            (false, 2) => CubicClass::II2,
            (false, 3) => CubicClass::II3,
            _ => return None,
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            CubicClass::I0 => "I0",
            CubicClass::I1 => "I1",
            CubicClass::I2 => "I2",
            CubicClass::II0 => "II0",
            CubicClass::II1 => "II1",
            CubicClass::II2 => "II2",
            CubicClass::II3 => "II3",
        }
    }

    /// Discrepancy of the class: type I cubics are M, type II are (M-1).
    pub fn discrepancy(self) -> i64 {
        if self.has_oval() {
            0
        } else {
            1
        }
    }
}

/// One adjacency scheme: its printed word and class label, plus the
/// assembled dessin.
#[derive(Clone, Debug)]
pub struct Scheme {
    pub label: CubicClass,
    pub word: &'static str,
    pub dessin: Dessin,
}

struct SB {
    vertices: Vec<(VertexKind, bool)>,
    edges: Vec<(EdgeKind, bool)>,
    walks: Vec<(Vec<usize>, Vec<usize>)>,
}

impl SB {
    fn new() -> SB {
        SB { vertices: Vec::new(), edges: Vec::new(), walks: Vec::new() }
    }
    fn v(&mut self, kind: VertexKind, real: bool) -> usize {
        self.vertices.push((kind, real));
        self.vertices.len() - 1
    }
    fn black(&mut self) -> usize {
        self.v(VertexKind::Black, true)
    }
    fn white(&mut self) -> usize {
        self.v(VertexKind::White, true)
    }
    fn cross(&mut self) -> usize {
        self.v(VertexKind::Cross, true)
    }
    fn icross(&mut self) -> usize {
        self.v(VertexKind::Cross, false)
    }
    fn mono(&mut self, k: EdgeKind) -> usize {
        self.v(VertexKind::Monochrome(k), true)
    }
    fn e(&mut self, kind: EdgeKind, real: bool) -> usize {
        self.edges.push((kind, real));
        self.edges.len() - 1
    }
    fn walk(&mut self, edges: Vec<usize>, steps: Vec<usize>) {
        self.walks.push((edges, steps));
    }
    fn build(self) -> Result<Dessin, String> {
        assemble(&AssemblySpec {
            vertices: self.vertices,
            edges: self.edges,
            walks: self.walks,
            regions: Vec::new(),
        })
    }
}

/// Shared ends between cells.
struct BoldBW {
    e: usize,
    b: usize,
    w: usize,
}
struct BoldBM {
    e: usize,
    b: usize,
    m: usize,
}
struct BoldMW {
    e: usize,
    m: usize,
    w: usize,
}
struct SolidMB {
    e: usize,
    m: usize,
    b: usize,
}
struct DottedWM {
    e: usize,
    w: usize,
    m: usize,
}
struct PairMXB {
    ed: usize,
    es: usize,
    m: usize,
    x: usize,
    b: usize,
}
struct PairWXB {
    ed: usize,
    es: usize,
    w: usize,
    x: usize,
    b: usize,
}
struct PairWXM {
    ed: usize,
    es: usize,
    w: usize,
    x: usize,
    m: usize,
}

fn end_bold_bw(sb: &mut SB) -> BoldBW {
    let b = sb.black();
    let w = sb.white();
    let e = sb.e(EdgeKind::Bold, false);
    BoldBW { e, b, w }
}
fn end_bold_bm(sb: &mut SB) -> BoldBM {
    let b = sb.black();
    let m = sb.mono(EdgeKind::Bold);
    let e = sb.e(EdgeKind::Bold, false);
    BoldBM { e, b, m }
}
fn end_bold_mw(sb: &mut SB) -> BoldMW {
    let m = sb.mono(EdgeKind::Bold);
    let w = sb.white();
    let e = sb.e(EdgeKind::Bold, false);
    BoldMW { e, m, w }
}
fn end_solid_mb(sb: &mut SB) -> SolidMB {
    let m = sb.mono(EdgeKind::Solid);
    let b = sb.black();
    let e = sb.e(EdgeKind::Solid, false);
    SolidMB { e, m, b }
}
fn end_dotted_wm(sb: &mut SB) -> DottedWM {
    let w = sb.white();
    let m = sb.mono(EdgeKind::Dotted);
    let e = sb.e(EdgeKind::Dotted, false);
    DottedWM { e, w, m }
}
fn end_pair_mxb(sb: &mut SB) -> PairMXB {
    let m = sb.mono(EdgeKind::Dotted);
    let x = sb.icross();
    let b = sb.black();
    let ed = sb.e(EdgeKind::Dotted, false);
    let es = sb.e(EdgeKind::Solid, false);
    PairMXB { ed, es, m, x, b }
}
fn end_pair_wxb(sb: &mut SB) -> PairWXB {
    let w = sb.white();
    let x = sb.icross();
    let b = sb.black();
    let ed = sb.e(EdgeKind::Dotted, false);
    let es = sb.e(EdgeKind::Solid, false);
    PairWXB { ed, es, w, x, b }
}
fn end_pair_wxm(sb: &mut SB) -> PairWXM {
    let w = sb.white();
    let x = sb.icross();
    let m = sb.mono(EdgeKind::Solid);
    let ed = sb.e(EdgeKind::Dotted, false);
    let es = sb.e(EdgeKind::Solid, false);
    PairWXM { ed, es, w, x, m }
}

// Cell constructors: each adds its internal elements and one region walk.

/// Type 1 triangle: the cap; one bold end.
fn cell_1(sb: &mut SB, end: &BoldBW) {
    let x = sb.cross();
    let rd = sb.e(EdgeKind::Dotted, true);
    let rs = sb.e(EdgeKind::Solid, true);
    sb.walk(vec![end.e, rd, rs], vec![end.w, x, end.b]);
}

/// Type 3-1 triangle: bold end + pair end, sharing the black.
fn cell_3_1(sb: &mut SB, bold: &BoldBW, pair: &PairMXB) {
    assert_eq!(bold.b, pair.b, "3-1 cell shares its black vertex");
    let rd = sb.e(EdgeKind::Dotted, true);
    sb.walk(
        vec![bold.e, rd, pair.ed, pair.es],
        vec![bold.w, pair.m, pair.x, pair.b],
    );
}

/// Type 3-2 triangle: bold end + solid end, sharing the black.
fn cell_3_2(sb: &mut SB, bold: &BoldBW, solid: &SolidMB) {
    assert_eq!(bold.b, solid.b, "3-2 cell shares its black vertex");
    let x = sb.cross();
    let rd = sb.e(EdgeKind::Dotted, true);
    let rs = sb.e(EdgeKind::Solid, true);
    sb.walk(
        vec![bold.e, rd, rs, solid.e],
        vec![bold.w, x, solid.m, solid.b],
    );
}

/// Type 5-1 triangle: bold end (mono-white) + pair end.
fn cell_5_1(sb: &mut SB, bold: &BoldMW, pair: &PairMXB) {
    let rb = sb.e(EdgeKind::Bold, true);
    let rd = sb.e(EdgeKind::Dotted, true);
    sb.walk(
        vec![rb, bold.e, rd, pair.ed, pair.es],
        vec![bold.m, bold.w, pair.m, pair.x, pair.b],
    );
}

/// Type 5-2 triangle: bold end (mono-white) + solid end.
fn cell_5_2(sb: &mut SB, bold: &BoldMW, solid: &SolidMB) {
    let x = sb.cross();
    let rb = sb.e(EdgeKind::Bold, true);
    let rd = sb.e(EdgeKind::Dotted, true);
    let rs = sb.e(EdgeKind::Solid, true);
    sb.walk(
        vec![rb, bold.e, rd, rs, solid.e],
        vec![bold.m, bold.w, x, solid.m, solid.b],
    );
}

/// Type 6 triangle: dotted end + solid end.
fn cell_6(sb: &mut SB, dotted: &DottedWM, solid: &SolidMB) {
    let x = sb.cross();
    let rb = sb.e(EdgeKind::Bold, true);
    let rd = sb.e(EdgeKind::Dotted, true);
    let rs = sb.e(EdgeKind::Solid, true);
    sb.walk(
        vec![rb, dotted.e, rd, rs, solid.e],
        vec![dotted.w, dotted.m, x, solid.m, solid.b],
    );
}

/// Type 2-2 triangle: bold end (black-mono) + dotted end, sharing nothing.
fn cell_2_2(sb: &mut SB, bold: &BoldBM, dotted: &DottedWM) {
    let x = sb.cross();
    let rb = sb.e(EdgeKind::Bold, true);
    let rd = sb.e(EdgeKind::Dotted, true);
    let rs = sb.e(EdgeKind::Solid, true);
    sb.walk(
        vec![bold.e, rb, dotted.e, rd, rs],
        vec![bold.m, dotted.w, dotted.m, x, bold.b],
    );
}

/// Type 2-1 triangle: bold end (black-mono) + pair end (white-cross-mono).
fn cell_2_1(sb: &mut SB, bold: &BoldBM, pair: &PairWXM) {
    let rb = sb.e(EdgeKind::Bold, true);
    let rs = sb.e(EdgeKind::Solid, true);
    sb.walk(
        vec![bold.e, rb, pair.ed, pair.es, rs],
        vec![bold.m, pair.w, pair.x, pair.m, bold.b],
    );
}

/// Type 4-1 triangle: bold end (black-mono) + pair end (white-cross-black),
/// sharing the black.
fn cell_4_1(sb: &mut SB, bold: &BoldBM, pair: &PairWXB) {
    assert_eq!(bold.b, pair.b, "4-1 cell shares its black vertex");
    let rb = sb.e(EdgeKind::Bold, true);
    sb.walk(
        vec![bold.e, rb, pair.ed, pair.es],
        vec![bold.m, pair.w, pair.x, pair.b],
    );
}

/// Type 7 triangle: one pair end (white-cross-black).
fn cell_7(sb: &mut SB, pair: &PairWXB) {
    let rb = sb.e(EdgeKind::Bold, true);
    sb.walk(vec![rb, pair.ed, pair.es], vec![pair.w, pair.x, pair.b]);
}

/// Hexagon A-1: bold end + explicit pair (mono-cross-black) + hidden pair
/// (white-cross-black); the two pair blacks differ, the hidden pair shares
/// the bold end's black.
fn cell_a1(sb: &mut SB, bold: &BoldBW, pair_explicit: &PairMXB, pair_hidden: &PairWXB) {
    assert_eq!(bold.b, pair_hidden.b, "A-1 shares its beta black");
    let rd = sb.e(EdgeKind::Dotted, true);
    let rb = sb.e(EdgeKind::Bold, true);
    sb.walk(
        vec![
            bold.e,
            rd,
            pair_explicit.ed,
            pair_explicit.es,
            rb,
            pair_hidden.ed,
            pair_hidden.es,
        ],
        vec![
            bold.w,
            pair_explicit.m,
            pair_explicit.x,
            pair_explicit.b,
            pair_hidden.w,
            pair_hidden.x,
            pair_hidden.b,
        ],
    );
}

/// Hexagon A-2: bold end + explicit solid end + hidden pair.
fn cell_a2(sb: &mut SB, bold: &BoldBW, solid: &SolidMB, pair_hidden: &PairWXB) {
    assert_eq!(bold.b, pair_hidden.b, "A-2 shares its beta black");
    let x = sb.cross();
    let rd = sb.e(EdgeKind::Dotted, true);
    let rs = sb.e(EdgeKind::Solid, true);
    let rb = sb.e(EdgeKind::Bold, true);
    sb.walk(
        vec![bold.e, rd, rs, solid.e, rb, pair_hidden.ed, pair_hidden.es],
        vec![
            bold.w,
            x,
            solid.m,
            solid.b,
            pair_hidden.w,
            pair_hidden.x,
            pair_hidden.b,
        ],
    );
}

/// Hexagon B: bold end + explicit bold end (black-mono) + hidden pair; the
/// explicit bold's black is the hexagon's second black.
fn cell_b(sb: &mut SB, bold: &BoldBW, bold2: &BoldBM, pair_hidden: &PairWXB) {
    assert_eq!(bold.b, pair_hidden.b, "B shares its beta black");
    let x = sb.cross();
    let rd = sb.e(EdgeKind::Dotted, true);
    let rs = sb.e(EdgeKind::Solid, true);
    let rb = sb.e(EdgeKind::Bold, true);
    sb.walk(
        vec![bold.e, rd, rs, bold2.e, rb, pair_hidden.ed, pair_hidden.es],
        vec![
            bold.w,
            x,
            bold2.b,
            bold2.m,
            pair_hidden.w,
            pair_hidden.x,
            pair_hidden.b,
        ],
    );
}

fn scheme_ii1_a() -> Result<Dessin, String> {
    // (1> - <3_1] - [5_1> - <5_1] - [3_1> - <1)
    let mut sb = SB::new();
    let bw1 = end_bold_bw(&mut sb);
    cell_1(&mut sb, &bw1);
    let p1 = {
        let m = sb.mono(EdgeKind::Dotted);
        let x = sb.icross();
        let ed = sb.e(EdgeKind::Dotted, false);
        let es = sb.e(EdgeKind::Solid, false);
        PairMXB { ed, es, m, x, b: bw1.b }
    };
    cell_3_1(&mut sb, &bw1, &p1);
    let mw = end_bold_mw(&mut sb);
    cell_5_1(&mut sb, &mw, &p1);
    let p2 = {
        let m = sb.mono(EdgeKind::Dotted);
        let x = sb.icross();
        let b = sb.black();
        let ed = sb.e(EdgeKind::Dotted, false);
        let es = sb.e(EdgeKind::Solid, false);
        PairMXB { ed, es, m, x, b }
    };
    // the second 5-1 shares the mono-white bold end
    cell_5_1(&mut sb, &mw, &p2);
    let bw2 = BoldBW { e: sb.e(EdgeKind::Bold, false), b: p2.b, w: sb.white() };
    cell_3_1(&mut sb, &bw2, &p2);
    cell_1(&mut sb, &bw2);
    sb.build()
}

fn scheme_i1_a() -> Result<Dessin, String> {
    // (1> - <3_1] - [5_1> - <5_2] ... printed <5_2| - |3_2> : solid junction
    let mut sb = SB::new();
    let bw1 = end_bold_bw(&mut sb);
    cell_1(&mut sb, &bw1);
    let p1 = {
        let m = sb.mono(EdgeKind::Dotted);
        let x = sb.icross();
        let ed = sb.e(EdgeKind::Dotted, false);
        let es = sb.e(EdgeKind::Solid, false);
        PairMXB { ed, es, m, x, b: bw1.b }
    };
    cell_3_1(&mut sb, &bw1, &p1);
    let mw = end_bold_mw(&mut sb);
    cell_5_1(&mut sb, &mw, &p1);
    let smb = end_solid_mb(&mut sb);
    cell_5_2(&mut sb, &mw, &smb);
    let bw2 = BoldBW { e: sb.e(EdgeKind::Bold, false), b: smb.b, w: sb.white() };
    cell_3_2(&mut sb, &bw2, &smb);
    cell_1(&mut sb, &bw2);
    sb.build()
}

fn scheme_ii3() -> Result<Dessin, String> {
    // (1> - <3_2| - |5_2> - <5_2| - |3_2> - <1)
    let mut sb = SB::new();
    let bw1 = end_bold_bw(&mut sb);
    cell_1(&mut sb, &bw1);
    let s1 = SolidMB { e: sb.e(EdgeKind::Solid, false), m: sb.mono(EdgeKind::Solid), b: bw1.b };
    cell_3_2(&mut sb, &bw1, &s1);
    let mw = end_bold_mw(&mut sb);
    cell_5_2(&mut sb, &mw, &s1);
    let s2 = end_solid_mb(&mut sb);
    cell_5_2(&mut sb, &mw, &s2);
    let bw2 = BoldBW { e: sb.e(EdgeKind::Bold, false), b: s2.b, w: sb.white() };
    cell_3_2(&mut sb, &bw2, &s2);
    cell_1(&mut sb, &bw2);
    sb.build()
}

fn scheme_i2() -> Result<Dessin, String> {
    // (1> - <3_2| - |6> - <6| - |3_2> - <1)
    let mut sb = SB::new();
    let bw1 = end_bold_bw(&mut sb);
    cell_1(&mut sb, &bw1);
    let s1 = SolidMB { e: sb.e(EdgeKind::Solid, false), m: sb.mono(EdgeKind::Solid), b: bw1.b };
    cell_3_2(&mut sb, &bw1, &s1);
    let dl = end_dotted_wm(&mut sb);
    cell_6(&mut sb, &dl, &s1);
    let s2 = end_solid_mb(&mut sb);
    cell_6(&mut sb, &dl, &s2);
    let bw2 = BoldBW { e: sb.e(EdgeKind::Bold, false), b: s2.b, w: sb.white() };
    cell_3_2(&mut sb, &bw2, &s2);
    cell_1(&mut sb, &bw2);
    sb.build()
}

fn scheme_i1_c() -> Result<Dessin, String> {
    // (1> - <3_2| - |6> - <2_2| - |4_1] - [7)
    let mut sb = SB::new();
    let bw1 = end_bold_bw(&mut sb);
    cell_1(&mut sb, &bw1);
    let s1 = SolidMB { e: sb.e(EdgeKind::Solid, false), m: sb.mono(EdgeKind::Solid), b: bw1.b };
    cell_3_2(&mut sb, &bw1, &s1);
    let dl = end_dotted_wm(&mut sb);
    cell_6(&mut sb, &dl, &s1);
    let bm = end_bold_bm(&mut sb);
    cell_2_2(&mut sb, &bm, &dl);
    let pw = PairWXB {
        ed: sb.e(EdgeKind::Dotted, false),
        es: sb.e(EdgeKind::Solid, false),
        w: sb.white(),
        x: sb.icross(),
        b: bm.b,
    };
    cell_4_1(&mut sb, &bm, &pw);
    cell_7(&mut sb, &pw);
    sb.build()
}

fn scheme_ii0() -> Result<Dessin, String> {
    // (7] - [4_1> - <2_1] - [2_1> - <4_1] - [7)
    let mut sb = SB::new();
    let bm1 = end_bold_bm(&mut sb);
    let pw1 = PairWXB {
        ed: sb.e(EdgeKind::Dotted, false),
        es: sb.e(EdgeKind::Solid, false),
        w: sb.white(),
        x: sb.icross(),
        b: bm1.b,
    };
    cell_7(&mut sb, &pw1);
    cell_4_1(&mut sb, &bm1, &pw1);
    let pm = end_pair_wxm(&mut sb);
    cell_2_1(&mut sb, &bm1, &pm);
    let bm2 = end_bold_bm(&mut sb);
    cell_2_1(&mut sb, &bm2, &pm);
    let pw2 = PairWXB {
        ed: sb.e(EdgeKind::Dotted, false),
        es: sb.e(EdgeKind::Solid, false),
        w: sb.white(),
        x: sb.icross(),
        b: bm2.b,
    };
    cell_4_1(&mut sb, &bm2, &pw2);
    cell_7(&mut sb, &pw2);
    sb.build()
}

fn scheme_i0_a() -> Result<Dessin, String> {
    // (7] - [4_1> - <2_2| - |2_2> - <4_1] - [7)
    let mut sb = SB::new();
    let bm1 = end_bold_bm(&mut sb);
    let pw1 = PairWXB {
        ed: sb.e(EdgeKind::Dotted, false),
        es: sb.e(EdgeKind::Solid, false),
        w: sb.white(),
        x: sb.icross(),
        b: bm1.b,
    };
    cell_7(&mut sb, &pw1);
    cell_4_1(&mut sb, &bm1, &pw1);
    let dl = end_dotted_wm(&mut sb);
    cell_2_2(&mut sb, &bm1, &dl);
    let bm2 = end_bold_bm(&mut sb);
    cell_2_2(&mut sb, &bm2, &dl);
    let pw2 = PairWXB {
        ed: sb.e(EdgeKind::Dotted, false),
        es: sb.e(EdgeKind::Solid, false),
        w: sb.white(),
        x: sb.icross(),
        b: bm2.b,
    };
    cell_4_1(&mut sb, &bm2, &pw2);
    cell_7(&mut sb, &pw2);
    sb.build()
}

fn scheme_i0_b() -> Result<Dessin, String> {
    // {A_1] - [3_1> - <1), hexagon also carries a type 1 and a type 7
    let mut sb = SB::new();
    let bw1 = end_bold_bw(&mut sb); // to the hexagon's own type-1
    let pe = end_pair_mxb(&mut sb); // explicit pair to 3-1; black is fresh (gamma side)
    let ph = PairWXB {
        ed: sb.e(EdgeKind::Dotted, false),
        es: sb.e(EdgeKind::Solid, false),
        w: sb.white(),
        x: sb.icross(),
        b: bw1.b,
    };
    cell_a1(&mut sb, &bw1, &pe, &ph);
    cell_1(&mut sb, &bw1);
    cell_7(&mut sb, &ph);
    // chain: 3-1 shares the pair (and hence the A-1 gamma black), then type 1
    let bw2 = BoldBW { e: sb.e(EdgeKind::Bold, false), b: pe.b, w: sb.white() };
    cell_3_1(&mut sb, &bw2, &pe);
    cell_1(&mut sb, &bw2);
    sb.build()
}

fn scheme_ii2() -> Result<Dessin, String> {
    // {A_2| - |3_2> - <1), hexagon also carries a type 1 and a type 7
    let mut sb = SB::new();
    let bw1 = end_bold_bw(&mut sb);
    let se = end_solid_mb(&mut sb);
    let ph = PairWXB {
        ed: sb.e(EdgeKind::Dotted, false),
        es: sb.e(EdgeKind::Solid, false),
        w: sb.white(),
        x: sb.icross(),
        b: bw1.b,
    };
    cell_a2(&mut sb, &bw1, &se, &ph);
    cell_1(&mut sb, &bw1);
    cell_7(&mut sb, &ph);
    let bw2 = BoldBW { e: sb.e(EdgeKind::Bold, false), b: se.b, w: sb.white() };
    cell_3_2(&mut sb, &bw2, &se);
    cell_1(&mut sb, &bw2);
    sb.build()
}

fn scheme_ii1_b() -> Result<Dessin, String> {
    // {B> - <4_1] - [7), hexagon also carries a type 1 and a type 7
    let mut sb = SB::new();
    let bw1 = end_bold_bw(&mut sb);
    let be = end_bold_bm(&mut sb); // explicit bold end: its black is the alpha black
    let ph = PairWXB {
        ed: sb.e(EdgeKind::Dotted, false),
        es: sb.e(EdgeKind::Solid, false),
        w: sb.white(),
        x: sb.icross(),
        b: bw1.b,
    };
    cell_b(&mut sb, &bw1, &be, &ph);
    cell_1(&mut sb, &bw1);
    cell_7(&mut sb, &ph);
    let pw2 = PairWXB {
        ed: sb.e(EdgeKind::Dotted, false),
        es: sb.e(EdgeKind::Solid, false),
        w: sb.white(),
        x: sb.icross(),
        b: be.b,
    };
    cell_4_1(&mut sb, &be, &pw2);
    cell_7(&mut sb, &pw2);
    sb.build()
}

/// The mirror presentation of the first mixed chain; the paper lists it as a
/// separate scheme.
fn scheme_i1_b() -> Result<Dessin, String> {
    // (1> - <3_2| - |5_2> - <5_1] - [3_1> - <1)
    let mut sb = SB::new();
    let bw1 = end_bold_bw(&mut sb);
    cell_1(&mut sb, &bw1);
    let s1 = SolidMB { e: sb.e(EdgeKind::Solid, false), m: sb.mono(EdgeKind::Solid), b: bw1.b };
    cell_3_2(&mut sb, &bw1, &s1);
    let mw = end_bold_mw(&mut sb);
    cell_5_2(&mut sb, &mw, &s1);
    let p2 = {
        let m = sb.mono(EdgeKind::Dotted);
        let x = sb.icross();
        let b = sb.black();
        let ed = sb.e(EdgeKind::Dotted, false);
        let es = sb.e(EdgeKind::Solid, false);
        PairMXB { ed, es, m, x, b }
    };
    cell_5_1(&mut sb, &mw, &p2);
    let bw2 = BoldBW { e: sb.e(EdgeKind::Bold, false), b: p2.b, w: sb.white() };
    cell_3_1(&mut sb, &bw2, &p2);
    cell_1(&mut sb, &bw2);
    sb.build()
}

/// The eleven adjacency schemes with their class labels, in the order they
/// are listed.
pub fn cubic_schemes() -> Vec<Scheme> {
    let specs: [(CubicClass, &'static str, fn() -> Result<Dessin, String>); 11] = [
        (CubicClass::II1, "(1>-<3_1]-[5_1>-<5_1]-[3_1>-<1)", scheme_ii1_a),
        (CubicClass::I1, "(1>-<3_1]-[5_1>-<5_2|-|3_2>-<1)", scheme_i1_a),
        (CubicClass::I1, "(1>-<3_2|-|5_2>-<5_1]-[3_1>-<1)", scheme_i1_b),
        (CubicClass::II3, "(1>-<3_2|-|5_2>-<5_2|-|3_2>-<1)", scheme_ii3),
        (CubicClass::I2, "(1>-<3_2|-|6>-<6|-|3_2>-<1)", scheme_i2),
        (CubicClass::I1, "(1>-<3_2|-|6>-<2_2|-|4_1]-[7)", scheme_i1_c),
        (CubicClass::II0, "(7]-[4_1>-<2_1]-[2_1>-<4_1]-[7)", scheme_ii0),
        (CubicClass::I0, "(7]-[4_1>-<2_2|-|2_2>-<4_1]-[7)", scheme_i0_a),
        (CubicClass::I0, "{A_1]-[3_1>-<1)", scheme_i0_b),
        (CubicClass::II2, "{A_2|-|3_2>-<1)", scheme_ii2),
        (CubicClass::II1, "{B>-<4_1]-[7)", scheme_ii1_b),
    ];
    specs
        .iter()
        .map(|(label, word, f)| Scheme {
            label: *label,
            word,
            dessin: f().unwrap_or_else(|e| panic!("scheme {} failed: {}", word, e)),
        })
        .collect()
}

#[allow(unused)]
fn _fmt(_: String) -> String {
    format!("")
}
