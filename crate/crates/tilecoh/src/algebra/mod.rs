//! Exact integer, polynomial, group-ring, and algebraic-number linear
//! algebra backing the tiling computations.

pub mod algnum;
pub mod factor;
pub mod field;
pub mod groupring;
pub mod matgen;
pub mod perron;
pub mod poly;
pub mod primitive;
pub mod q;
pub mod snf;

pub use algnum::{field_equal, roots_in_field, unit_min_poly, unit_order, AlgebraicNumber, UnitOrder};
pub use field::{FieldElement, NumberField};
pub use groupring::{CellInfo, GrElem, RingMat};
pub use perron::{perron_data, perron_data_with_lambda, NormalizationCase, PerronData};
pub use poly::{QPoly, ZPoly};
pub use primitive::{is_primitive, primitivity};
pub use snf::{smith_normal_form, solve_integer, Snf, ZMat};
