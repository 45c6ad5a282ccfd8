//! Numeric and structural invariants: weighted counts, component profiles,
//! the oval census and discrepancy, chains, and the modular-group-valued
//! monodromy.

use alloc::string::String;
use alloc::vec::Vec;
use alloc::{format, vec};

use crate::map::{Dessin, EdgeId, EdgeKind, VertexId, VertexKind};
pub use crate::validate::full_valency;

/// Weighted vertex count: inner vertices count twice, real ones once.
pub fn weighted_count(d: &Dessin, kind: VertexKind) -> u32 {
    let mut n = 0;
    for v in d.vertex_ids() {
        let vert = d.vertex(v);
        if vert.kind == kind {
            n += if vert.real { 1 } else { 2 };
        }
    }
    n
}

/// Degree 3k of a dessin: the weighted white count.
pub fn degree(d: &Dessin) -> u32 {
    weighted_count(d, VertexKind::White)
}

/// Classification of one real component.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum ComponentClass {
    NonHyperbolic { even: bool },
    Hyperbolic { even: bool },
    Monochrome(EdgeKind),
}

/// A maximal dotted or complementary segment of a real component, by the
/// vertices it spans.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Segment {
    pub dotted: bool,
    /// White count parity matters throughout; the count itself is kept.
    pub whites: u32,
    /// Vertices along the segment, endpoints included (crosses for dotted
    /// segments on non-hyperbolic components).
    pub verts: Vec<VertexId>,
    /// The edges of the segment.
    pub edges: Vec<EdgeId>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ComponentProfile {
    pub class: ComponentClass,
    pub white_count: u32,
    /// Maximal even dotted segments.
    pub ovals: Vec<Segment>,
    /// Maximal odd dotted segments.
    pub zigzags: Vec<Segment>,
    /// Cyclic parity sequence of maximal dotted and complementary segments:
    /// `(dotted?, parity)`.
    pub parities: Vec<(bool, bool)>,
    /// Chain partition of the oval indices; `complete` when one chain holds
    /// every oval of the component.
    pub chains: Vec<Vec<usize>>,
    pub complete_chain: bool,
    /// The component's boundary circle (vertices in cyclic order).
    pub verts: Vec<VertexId>,
}

/// Profiles of all real components, in boundary-circle order.
pub fn component_profiles(d: &Dessin) -> Result<Vec<ComponentProfile>, String> {
    let ix = d.try_index().map_err(|e| e.0)?;
    let circles = d.boundary_circles_with(&ix);
    let mut out = Vec::new();
    for c in circles {
        let n = c.verts.len();
        let whites = c
            .verts
            .iter()
            .filter(|&&v| d.vertex(v).kind == VertexKind::White)
            .count() as u32;
        let all_dotted = c.edges.iter().all(|&e| d.edge(e).kind == EdgeKind::Dotted);
        let mono = c
            .verts
            .iter()
            .all(|&v| matches!(d.vertex(v).kind, VertexKind::Monochrome(_)));
        let class = if mono {
            ComponentClass::Monochrome(d.edge(c.edges[0]).kind)
        } else if all_dotted {
            ComponentClass::Hyperbolic { even: whites % 2 == 0 }
        } else {
            ComponentClass::NonHyperbolic { even: whites % 2 == 0 }
        };

        let mut ovals = Vec::new();
        let mut zigzags = Vec::new();
        let mut parities = Vec::new();
        if let ComponentClass::NonHyperbolic { .. } = class {
            // maximal dotted segments are bounded by cross vertices; walk the
            // circle segment by segment
            let is_dotted = |i: usize| d.edge(c.edges[i]).kind == EdgeKind::Dotted;
            // find a cross to start at; non-hyperbolic components with dotted
            // edges have them
            let start = (0..n)
                .find(|&i| d.vertex(c.verts[i]).kind == VertexKind::Cross)
                .unwrap_or(0);
            let mut i = start;
            let mut first = true;
            let mut segments: Vec<Segment> = Vec::new();
            while first || i != start {
                first = false;
                // segment starting at vertex i: edges i, i+1, ... while the
                // dotted flag stays constant
                let dotted = is_dotted(i);
                let mut verts = vec![c.verts[i]];
                let mut edges = Vec::new();
                let mut whites_in = 0u32;
                let mut j = i;
                loop {
                    edges.push(c.edges[j]);
                    j = (j + 1) % n;
                    verts.push(c.verts[j]);
                    if d.vertex(c.verts[j]).kind == VertexKind::White {
                        whites_in += 1;
                    }
                    if j == start || is_dotted(j) != dotted {
                        break;
                    }
                    if edges.len() > n {
                        return Err("segment scan diverged".into());
                    }
                }
                segments.push(Segment { dotted, whites: whites_in, verts, edges });
                i = j;
            }
            // whites at segment boundary vertices belong to neither count
            // issue: segment boundaries are crosses (dotted/solid change) on
            // valid dessins, so whites never sit at boundaries.
            for s in &segments {
                parities.push((s.dotted, s.whites % 2 == 1));
                if s.dotted {
                    if s.whites % 2 == 0 {
                        ovals.push(s.clone());
                    } else {
                        zigzags.push(s.clone());
                    }
                }
            }
            // chains: consecutive ovals in one chain iff separated by an even
            // number of whites
            let oval_positions: Vec<usize> = segments
                .iter()
                .enumerate()
                .filter(|(_, s)| s.dotted && s.whites % 2 == 0)
                .map(|(i, _)| i)
                .collect();
            let k = oval_positions.len();
            let mut chains: Vec<Vec<usize>> = Vec::new();
            let mut complete = false;
            if k > 0 {
                // whites between consecutive ovals (cyclically): sum of the
                // whites of all segments strictly between them
                let mut breaks = Vec::new();
                for a in 0..k {
                    let from = oval_positions[a];
                    let to = oval_positions[(a + 1) % k];
                    let mut w = 0;
                    let mut s = (from + 1) % segments.len();
                    while s != to {
                        w += segments[s].whites;
                        s = (s + 1) % segments.len();
                    }
                    if w % 2 == 1 {
                        breaks.push(a); // break between oval a and a+1
                    }
                }
                if breaks.is_empty() {
                    chains.push((0..k).collect());
                    complete = true;
                } else {
                    let mut b0 = breaks[0];
                    for bi in 0..breaks.len() {
                        let next = breaks[(bi + 1) % breaks.len()];
                        let mut chain = Vec::new();
                        let mut a = (b0 + 1) % k;
                        loop {
                            chain.push(a);
                            if a == next {
                                break;
                            }
                            a = (a + 1) % k;
                        }
                        chains.push(chain);
                        b0 = next;
                        if bi + 1 == breaks.len() {
                            break;
                        }
                    }
                }
            }
            out.push(ComponentProfile {
                class,
                white_count: whites,
                ovals,
                zigzags,
                parities,
                chains,
                complete_chain: complete,
                verts: c.verts.clone(),
            });
            continue;
        }
        out.push(ComponentProfile {
            class,
            white_count: whites,
            ovals,
            zigzags,
            parities,
            chains: Vec::new(),
            complete_chain: false,
            verts: c.verts.clone(),
        });
    }
    Ok(out)
}

/// The oval census of the whole dessin.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct OvalCensus {
    pub l_even: i64,
    pub l_odd: i64,
    pub l_nh: i64,
    pub n_oval: i64,
    pub n_zigzag: i64,
    pub n_inner: i64,
    pub delta: i64,
    pub k: i64,
    pub d: i64,
    pub euler: i64,
    pub hyperbolic: bool,
}

impl OvalCensus {
    /// The oval-count identity, non-hyperbolic form: must always vanish.
    pub fn oval_count_defect(&self) -> i64 {
        2 * self.l_nh + self.l_odd + self.n_zigzag + self.n_inner + 3 * self.delta - self.d - 4
    }

    /// The hyperbolic variant of the identity.
    pub fn hyperbolic_defect(&self) -> i64 {
        self.l_odd + 3 * self.k + 3 * self.delta - self.d - 4
    }
}

pub fn oval_census(d: &Dessin) -> Result<OvalCensus, String> {
    let profiles = component_profiles(d)?;
    census_from_profiles(d, &profiles)
}

pub fn census_from_profiles(
    d: &Dessin,
    profiles: &[ComponentProfile],
) -> Result<OvalCensus, String> {
    let mut l_even = 0i64;
    let mut l_odd = 0i64;
    let mut l_nh = 0i64;
    let mut n_oval = 0i64;
    let mut n_zigzag = 0i64;
    let mut curve_components = 0i64;
    let mut hyperbolic = true;
    for p in profiles {
        match p.class {
            ComponentClass::NonHyperbolic { .. } => {
                l_nh += 1;
                hyperbolic = false;
                n_oval += p.ovals.len() as i64;
                n_zigzag += p.zigzags.len() as i64;
                curve_components += 1 + p.ovals.len() as i64;
            }
            ComponentClass::Hyperbolic { even } => {
                if even {
                    l_even += 1;
                    curve_components += 3;
                } else {
                    l_odd += 1;
                    curve_components += 2;
                }
            }
            ComponentClass::Monochrome(kind) => {
                // dotted monochrome circles are even hyperbolic; others have
                // a single long component over them
                if kind == EdgeKind::Dotted {
                    l_even += 1;
                    curve_components += 3;
                } else {
                    l_nh += 1;
                    hyperbolic = false;
                    curve_components += 1;
                }
            }
        }
    }
    let n_inner = d
        .vertex_ids()
        .filter(|&v| d.vertex(v).kind == VertexKind::Cross && !d.vertex(v).real)
        .count() as i64;
    let deg = degree(d) as i64;
    if deg % 3 != 0 {
        return Err(format!("degree {} not divisible by 3", deg));
    }
    let k = deg / 3;
    let euler = d.euler_characteristic();
    let l = l_even + l_odd + l_nh;
    let delta = 2 - l - euler;
    // independent topological count: g(C) = 3k - 3*chi + 1, and the real
    // part's components from the profiles
    let genus = 3 * k - 3 * euler + 1;
    let disc = genus + 1 - curve_components;
    Ok(OvalCensus {
        l_even,
        l_odd,
        l_nh,
        n_oval,
        n_zigzag,
        n_inner,
        delta,
        k,
        d: disc,
        euler,
        hyperbolic,
    })
}

/// Discrepancy d; 0 names an M-dessin, 1 an (M-1)-dessin.
pub fn discrepancy(d: &Dessin) -> Result<i64, String> {
    Ok(oval_census(d)?.d)
}

/// d = delta mod 2 must hold on hyperbolic dessins.
pub fn hyperbolic_parity_check(d: &Dessin) -> Result<bool, String> {
    let c = oval_census(d)?;
    if !c.hyperbolic {
        return Err("dessin is not hyperbolic".into());
    }
    Ok((c.d - c.delta).rem_euclid(2) == 0)
}

/// An element of the factorized braid group on the three fiber points: a
/// modular-group matrix together with its permutation image.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Monodromy {
    /// Integer matrix, determinant one, normalized up to global sign.
    pub matrix: [[i64; 2]; 2],
    /// Image in the symmetric group on {0,1,2}.
    pub perm: [u8; 3],
}

impl Monodromy {
    pub const IDENTITY: Monodromy = Monodromy { matrix: [[1, 0], [0, 1]], perm: [0, 1, 2] };

    fn normalized(m: [[i64; 2]; 2]) -> [[i64; 2]; 2] {
        // flip the global sign so the first nonzero of (a,b,c,d) is positive
        let flat = [m[0][0], m[0][1], m[1][0], m[1][1]];
        for x in flat {
            if x != 0 {
                if x < 0 {
                    return [[-m[0][0], -m[0][1]], [-m[1][0], -m[1][1]]];
                }
                break;
            }
        }
        m
    }

    pub fn new(m: [[i64; 2]; 2]) -> Monodromy {
        let matrix = Self::normalized(m);
        Monodromy { matrix, perm: perm_of(matrix) }
    }

    pub fn compose(&self, rhs: &Monodromy) -> Monodromy {
        let a = self.matrix;
        let b = rhs.matrix;
        Monodromy::new([
            [
                a[0][0] * b[0][0] + a[0][1] * b[1][0],
                a[0][0] * b[0][1] + a[0][1] * b[1][1],
            ],
            [
                a[1][0] * b[0][0] + a[1][1] * b[1][0],
                a[1][0] * b[0][1] + a[1][1] * b[1][1],
            ],
        ])
    }

    pub fn inverse(&self) -> Monodromy {
        let m = self.matrix;
        Monodromy::new([[m[1][1], -m[0][1]], [-m[1][0], m[0][0]]])
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == [[1, 0], [0, 1]]
    }

    pub fn trace(&self) -> i64 {
        self.matrix[0][0] + self.matrix[1][1]
    }

    /// Parabolic: trace +-2 but not the identity.
    pub fn is_parabolic(&self) -> bool {
        self.trace().abs() == 2 && !self.is_identity()
    }

    /// Order two in the modular group: trace zero.
    pub fn is_involution(&self) -> bool {
        self.trace() == 0
    }

    pub fn perm_is_even(&self) -> bool {
        perm_parity(self.perm)
    }
}

/// Permutation of the three nonzero vectors of F_2^2: (1,0), (0,1), (1,1).
fn perm_of(m: [[i64; 2]; 2]) -> [u8; 3] {
    let vecs = [(1u8, 0u8), (0, 1), (1, 1)];
    let idx = |v: (u8, u8)| match v {
        (1, 0) => 0u8,
        (0, 1) => 1,
        (1, 1) => 2,
        _ => 255,
    };
    let mut out = [0u8; 3];
    for (i, (x, y)) in vecs.iter().enumerate() {
        let nx = ((m[0][0] * *x as i64 + m[0][1] * *y as i64).rem_euclid(2)) as u8;
        let ny = ((m[1][0] * *x as i64 + m[1][1] * *y as i64).rem_euclid(2)) as u8;
        out[i] = idx((nx, ny));
    }
    out
}

fn perm_parity(p: [u8; 3]) -> bool {
    // true = even
    let mut inv = 0;
    for i in 0..3 {
        for j in i + 1..3 {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    inv % 2 == 0
}

/// Crossing matrices, fixed once: a positive transversal crossing of a solid,
/// bold, or dotted edge.  Validated by the monodromy rules rather than taken
/// from a reference.
pub fn crossing(kind: EdgeKind) -> Monodromy {
    match kind {
        EdgeKind::Solid => Monodromy::new([[1, 1], [0, 1]]),
        EdgeKind::Bold => Monodromy::new([[1, 0], [1, 1]]),
        EdgeKind::Dotted => Monodromy::new([[1, 2], [0, 1]]),
    }
}

/// One signed edge crossing of a loop.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Crossing {
    pub edge: EdgeId,
    pub positive: bool,
}

/// Monodromy along a loop given as a cyclic word of signed edge crossings.
/// The loop must avoid all vertices; crossing a real edge is impossible, and
/// the word is rejected if it names one.
pub fn monodromy(d: &Dessin, word: &[Crossing]) -> Result<Monodromy, String> {
    let mut m = Monodromy::IDENTITY;
    for c in word {
        if c.edge.0 as usize >= d.edges.len() {
            return Err(format!("unknown edge {}", c.edge.0));
        }
        let e = d.edge(c.edge);
        if e.real {
            return Err(format!("loop crosses the boundary at edge {}", c.edge.0));
        }
        let x = crossing(e.kind);
        let x = if c.positive { x } else { x.inverse() };
        m = m.compose(&x);
    }
    Ok(m)
}

/// Monodromy along a loop running inside the closure of the dotted part:
/// a cyclic vertex path through dotted edges.  Evaluated by pushing the loop
/// off the graph, which crosses the inner bold edge of every white passed
/// and the inner dotted edge of every monochrome passed.
pub fn monodromy_along_dotted(d: &Dessin, path_verts: &[VertexId]) -> Result<Monodromy, String> {
    let ix = d.try_index().map_err(|e| e.0)?;
    let mut m = Monodromy::IDENTITY;
    for &v in path_verts {
        let vert = d.vertex(v);
        match vert.kind {
            VertexKind::White => {
                for &dd in &vert.darts {
                    let e = ix.dart_edge[dd.0 as usize];
                    if d.edge(e).kind == EdgeKind::Bold && !d.edge(e).real {
                        let x = crossing(EdgeKind::Bold);
                        // the pushed loop crosses the bold edge once; its
                        // sign depends on the side, which flips the result
                        // only within its conjugacy class
                        m = m.compose(&x);
                    }
                }
            }
            VertexKind::Monochrome(EdgeKind::Dotted) => {
                for &dd in &vert.darts {
                    let e = ix.dart_edge[dd.0 as usize];
                    if !d.edge(e).real {
                        // crossing sign: positive when the inner edge points
                        // at the loop
                        let x = crossing(EdgeKind::Dotted);
                        let positive = ix.head_vertex(d, e) == v;
                        m = m.compose(&if positive { x } else { x.inverse() });
                    }
                }
            }
            VertexKind::Cross => {
                return Err("dotted loop passes a cross vertex".into());
            }
            _ => {}
        }
    }
    Ok(m)
}

/// Weighted-count identities for a valid dessin of degree 3k.
pub fn weighted_counts_ok(d: &Dessin) -> bool {
    let k3 = degree(d);
    if k3 == 0 || k3 % 3 != 0 {
        return false;
    }
    let k = k3 / 3;
    weighted_count(d, VertexKind::Black) == 2 * k && weighted_count(d, VertexKind::Cross) == 6 * k
}
