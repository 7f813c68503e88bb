use clap::ValueEnum;
use dispheres::{rational, Point};
use serde_json::Value;

pub const SCHEMA: &str = "dispheres/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// Pretty JSON on stdout, newline-terminated.
pub fn emit(body: &Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(body).expect("values always serialize")
    );
}

/// Space-separated `p/q` coordinates, safe inside a CSV field.
pub fn points_csv(p: &Point) -> String {
    p.coords()
        .iter()
        .map(rational::format)
        .collect::<Vec<_>>()
        .join(" ")
}
