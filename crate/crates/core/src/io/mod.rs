//! Points files, the seeded generator, and JSON/SVG output.
//!
//! A points file holds one JSON object per line, `{"x":"p/q","y":"p/q"}`,
//! with coordinates as exact rational strings. Everything written here
//! uses 1-based point indices, matching line order in such a file.

mod points;
mod svg;
mod trace;

pub use points::{
    emit_points, gen_points, parse_points, parse_points_raw, GenError, Located, ParseError, GEN_ATTEMPTS,
};
pub use svg::emit_svg;
pub use trace::{emit_trace, to_json, StopOut, TraceDocument};
