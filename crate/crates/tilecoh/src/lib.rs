//! tilecoh: exact-arithmetic topology of polygonal substitution tilings.
//!
//! The crate takes a substitution tiling system (polygonal prototiles plus
//! an inflate-and-subdivide rule with exact algebraic coordinates), builds
//! the cell complexes whose inverse limits model the tiling spaces, computes
//! their cohomology as direct limits with the cyclic-group module structure,
//! and derives the Perron order invariant that distinguishes tiling spaces
//! up to homeomorphism.
//!
//! Start with the runnable examples, one per capability:
//!
//! ```bash
//! cargo run --example validate_and_split    # axioms, edge refinement
//! cargo run --example supertiles_svg        # patch generation + SVG render
//! cargo run --example orientation_and_coronas
//! cargo run --example build_complexes       # boundary/substitution matrices
//! cargo run --example cohomology_tables     # ranks per representation, limits
//! cargo run --example perron_and_mu         # eigendata, mu-map, positive cone
//! cargo run --example compare_spaces        # the homeomorphism invariant
//! ```
//!
//! A thin CLI (`tilecoh`) wraps the same pipelines; see the README.

pub mod algebra;
pub mod cohomology;
pub mod complex;
pub mod fixtures;
pub mod format;
pub mod geom;
pub mod tiling;

pub use algebra::{AlgebraicNumber, FieldElement, NumberField};
pub use tiling::TilingSystem;
