//! Command-line front end: run `.fold` scripts, named demos, and cubic
//! solving, with SVG and JSON trace output.

pub mod commands;
pub mod demo;
pub mod format;
pub mod render;
pub mod trace;
