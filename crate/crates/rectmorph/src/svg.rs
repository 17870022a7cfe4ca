//! SVG rendering (placeholder during bring-up).
