//! Exhaustive enumeration of dessins by degree and surface.
