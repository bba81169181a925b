//! Spectral sequence replay engine (placeholder).
