//! Gluing surgeries (stub).

use alloc::string::String;
use alloc::vec::Vec;

use crate::map::{Dessin, EdgeId, VertexId};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BoundaryArc {
    EdgePoint(EdgeId),
    AroundVertex(VertexId),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GluePairing {
    Genuine { flip: bool },
    Artificial,
}

pub type SurgeryError = String;

pub fn glue(
    _d: &Dessin,
    _a: BoundaryArc,
    _b: BoundaryArc,
    _pairing: GluePairing,
) -> Result<Dessin, SurgeryError> {
    Err("glue not yet implemented".into())
}

pub fn junction_sites(_d: &Dessin) -> Vec<(VertexId, VertexId, bool)> {
    Vec::new()
}

pub fn junction(
    _d: &Dessin,
    _w1: VertexId,
    _w2: VertexId,
    _flip: bool,
) -> Result<Dessin, SurgeryError> {
    Err("junction not yet implemented".into())
}
