//! The elementary-move rewriting system.

use alloc::string::String;
use alloc::vec::Vec;

use crate::map::{Dart, Dessin};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum MoveKind {
    MonoModification,
    CreateBridge,
    DestroyBridge,
    WhiteIn,
    WhiteOut,
    BlackIn,
    BlackOut,
    StraightenZigzag,
    CreateZigzag,
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct MoveDescriptor {
    pub kind: MoveKind,
    pub site: Vec<Dart>,
    pub extended: bool,
}

pub fn enumerate_moves(_d: &Dessin) -> Vec<MoveDescriptor> {
    Vec::new()
}

pub fn apply_move(_d: &Dessin, _m: &MoveDescriptor) -> Result<Dessin, String> {
    Err("moves not yet implemented".into())
}
