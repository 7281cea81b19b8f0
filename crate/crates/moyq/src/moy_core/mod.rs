//! Sliced (Morse-position) MOY graphs and labeled link diagrams.
//!
//! A diagram is a bottom-to-top stack of slices, each slice a left-to-right
//! row of elementary pieces: identities, cups, caps, merge/split vertices
//! and (for link diagrams) crossings. Everything downstream — validation,
//! edge structure, rotational numbers, vertex statistics, the state-sum
//! evaluators — works on this form.

mod braid;
mod diagram;
mod text;

pub use braid::{expand_braid, open_braid_tangle};
pub use diagram::{EdgeLabeling, Piece, PieceKind, SlicedDiagram, Wire};
pub use text::{parse_diagram, render_diagram};
