//! Built-in systems, shipped as `.tsys.json` documents and parsed on load.

use crate::format::{parse_system, FormatError, ParsedSystem};
use crate::tiling::TilingSystem;

pub const FIXTURE_NAMES: &[&str] = &[
    "chair",
    "penrose_triangles",
    "pinwheel",
    "pinwheel_2_3",
    "penrose_combinatorial",
];

pub fn fixture_text(name: &str) -> Option<&'static str> {
    match name {
        "chair" => Some(include_str!("../fixtures/chair.tsys.json")),
        "penrose_triangles" => Some(include_str!("../fixtures/penrose_triangles.tsys.json")),
        "pinwheel" => Some(include_str!("../fixtures/pinwheel.tsys.json")),
        "pinwheel_2_3" => Some(include_str!("../fixtures/pinwheel_2_3.tsys.json")),
        "penrose_combinatorial" => {
            Some(include_str!("../fixtures/penrose_combinatorial.tsys.json"))
        }
        _ => None,
    }
}

pub fn load(name: &str) -> Result<ParsedSystem, FormatError> {
    let text = fixture_text(name)
        .ok_or_else(|| FormatError::Schema(format!("unknown fixture {:?}", name)))?;
    parse_system(text)
}

fn geometric(name: &str) -> TilingSystem {
    match load(name).expect("fixture must parse") {
        ParsedSystem::Geometric(sys) => sys,
        ParsedSystem::Combinatorial(_) => panic!("{} is not geometric", name),
    }
}

pub fn chair() -> TilingSystem {
    geometric("chair")
}

pub fn penrose_triangles() -> TilingSystem {
    geometric("penrose_triangles")
}

pub fn pinwheel() -> TilingSystem {
    geometric("pinwheel")
}

pub fn pinwheel_2_3() -> TilingSystem {
    geometric("pinwheel_2_3")
}

pub fn penrose_combinatorial() -> crate::format::ComplexSpec {
    match load("penrose_combinatorial").expect("fixture must parse") {
        ParsedSystem::Combinatorial(c) => c,
        ParsedSystem::Geometric(_) => unreachable!(),
    }
}
