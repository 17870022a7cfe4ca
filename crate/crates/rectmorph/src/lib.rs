//! Rectangular duals of properly-triangulated planar (PTP) graphs, the
//! distributive lattice of their regular edge labelings (RELs), and relaxed
//! piecewise-linear morphs between duals.
//!
//! The crate is organized around a pipeline: build and validate a plane
//! graph ([`plane_graph`]), label it ([`rel`]), draw it ([`rect_dual`]),
//! navigate the lattice of labelings ([`lattice`]), and synthesize verified
//! morphs between drawings ([`morph`], [`parallel`]). Generators for test
//! families live in [`gen`]; JSON formats and SVG rendering in [`io`] and
//! [`svg`].

pub mod gen;
pub mod geom;
pub mod io;
pub mod lattice;
pub mod morph;
pub mod parallel;
pub mod plane_graph;
pub mod rect_dual;
pub mod rel;
pub mod svg;
