//! SVG chart rendering (placeholder).
