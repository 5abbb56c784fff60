//! Scenario files, N sweeps, bound verification and the CSV/SVG writers.

pub mod commands;
pub mod config;
pub mod emit;
pub mod sweep;

pub use config::{dyadic, load_scenario, ArrayKind, SweepConfig, UserLayout, VerticalStack};
pub use emit::{csv_string, emit_csv, emit_svg, svg_string, CSV_HEADER};
pub use sweep::{
    first_below, is_non_increasing, pairwise_envelope, sweep_n, verify_bounds, BoundCheck, BoundReport, SweepRow,
};
