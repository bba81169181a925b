//! Chart assembly (placeholder while the oracle is validated).
