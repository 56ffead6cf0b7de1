//! Structure theory of radical-square-zero algebras `Λ = kQ/J²`, computed two ways.
//!
//! The crate has two engines that answer the same homological questions and
//! are cross-checked against each other:
//!
//! * [`ext`] — an integer-only engine on the Gabriel quiver: syzygies of
//!   semisimple modules are tracked as multiplicity vectors, and
//!   `dim Ext¹(S(j), P(i))` is evaluated by a closed form read off the
//!   adjacency matrix. This engine is exact, field-free, and fast enough to
//!   sweep every small quiver.
//! * [`rep`] — an exact linear-algebra engine over a prime field `F_p`:
//!   explicit quiver representations, projective covers, minimal resolutions,
//!   Ext via `Hom(−, N)` of a resolution, duality, transpose and the
//!   Auslander–Reiten translates `τ`, `τ⁻¹`.
//!
//! [`quiver`] holds the quiver type, its structural predicates, and the
//! `Δ(n, t)` cycle family used by the self-injectivity classification.
//! [`harness`] enumerates connected quivers, runs every check on each one,
//! diffs the two engines, and emits JSON-lines reports. A check that fails
//! does not panic: it produces a [`error::Violation`] carrying the
//! counterexample, which callers are expected to surface loudly.

pub mod error;
pub mod ext;
pub mod harness;
pub mod linalg;
pub mod quiver;
pub mod rep;

pub use error::{ParseError, UsageError, Violation};
pub use quiver::{DeltaShape, Quiver};
