//! Scrap calculus (stub).

use alloc::string::String;
use alloc::vec::Vec;

use crate::map::Dessin;

pub type ScrapError = String;

#[derive(Clone, Debug)]
pub struct Scrap {
    pub fragment: Dessin,
    pub beta: u32,
}

pub fn break_decompose(_d: &Dessin) -> Result<Vec<Scrap>, ScrapError> {
    Err("scraps not yet implemented".into())
}

pub fn check_6k(_d: &Dessin) -> Result<i64, ScrapError> {
    Err("not yet implemented".into())
}

pub fn patch_dotted_breaks(_s: &Scrap) -> Result<Dessin, ScrapError> {
    Err("not yet implemented".into())
}
