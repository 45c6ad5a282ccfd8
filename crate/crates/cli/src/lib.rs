//! IO, file formats and reporting for the dessin engine.
