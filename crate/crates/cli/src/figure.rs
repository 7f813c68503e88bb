//! Static plot data: the planned path drawn on the unit cube.

use dispheres::{rational, Dipath, Point};
use serde_json::{json, Value};

/// The 12 edges of the unit cube as pairs of corners.
fn cube_edges() -> Vec<[[u8; 3]; 2]> {
    let mut edges = Vec::new();
    for corner in 0u8..8 {
        let bits = [corner >> 2 & 1, corner >> 1 & 1, corner & 1];
        for axis in 0..3 {
            if bits[axis] == 0 {
                let mut other = bits;
                other[axis] = 1;
                edges.push([bits, other]);
            }
        }
    }
    edges
}

fn float_coords(p: &Point) -> Vec<f64> {
    p.coords().iter().map(rational::to_f64).collect()
}

/// Polyline of the path plus the cube wireframe, with the `0 − 1` pattern
/// of every waypoint.
pub fn plot_data(path: &Dipath) -> Value {
    json!({
        "cube_edges": cube_edges(),
        "polyline": path.waypoints().iter().map(float_coords).collect::<Vec<_>>(),
        "patterns": path.waypoints().iter().map(|w| w.pattern().to_string()).collect::<Vec<_>>(),
        "on_boundary": path.stays_on_boundary(),
    })
}

pub fn write_csv(path: &Dipath) {
    println!("series,index,x,y,z");
    for (i, [a, b]) in cube_edges().into_iter().enumerate() {
        for (j, end) in [a, b].iter().enumerate() {
            println!("edge{i},{j},{},{},{}", end[0], end[1], end[2]);
        }
    }
    for (i, w) in path.waypoints().iter().enumerate() {
        let c = float_coords(w);
        println!("path,{i},{},{},{}", c[0], c[1], c[2]);
    }
}
