use crate::error::{Error, Result};

use super::{GridGraph, DEFAULT_PATH_CAP};

impl GridGraph {
    /// Exhaustive check, on the 2-sphere grid, that paths from `(t,0,x)` and
    /// from `(0,t,x)` to `(1,1,x)` are trapped in opposite halves of the
    /// square slice at height `x`.
    ///
    /// Every path from `(t,0,x)` must stay in `([0,1]×{0} ∪ {1}×[0,1]) × {x}`
    /// and pass the corner `(1,0,x)`; every path from `(0,t,x)` must stay in
    /// `({0}×[0,1] ∪ [0,1]×{1}) × {x}` and pass `(0,1,x)`. Both families must
    /// be non-empty, and the two corners, which is where the routes end up as
    /// `t` shrinks to 0, must differ. Indices are numerators over `m`.
    pub fn verify_halfsquare_confinement(&self, t_index: u32, x_index: u32) -> Result<bool> {
        let m = self.resolution();
        if self.dimension() != 2 {
            return Err(Error::InvalidParameter {
                reason: format!(
                    "half-square confinement is stated for n = 2, grid has n = {}",
                    self.dimension()
                ),
            });
        }
        for (name, value) in [("t_index", t_index), ("x_index", x_index)] {
            if value == 0 || value >= m {
                return Err(Error::InvalidParameter {
                    reason: format!("{name} = {value} must lie strictly between 0 and {m}"),
                });
            }
        }
        let x = x_index;
        let target = [m, m, x];
        let solid_corner = [m, 0, x];
        let dotted_corner = [0, m, x];

        let solid = self.enumerate_dipaths(&[t_index, 0, x], &target, DEFAULT_PATH_CAP)?;
        let dotted = self.enumerate_dipaths(&[0, t_index, x], &target, DEFAULT_PATH_CAP)?;
        if solid.is_empty() || dotted.is_empty() {
            return Ok(false);
        }

        let confined =
            |paths: &[super::LatticeDipath], inside: &dyn Fn(&[u32]) -> bool, corner: &[u32; 3]| {
                paths.iter().all(|p| {
                    p.vertices().iter().all(|&v| inside(self.vertex(v)))
                        && p.vertices().iter().any(|&v| self.vertex(v) == corner)
                })
            };
        let solid_ok = confined(
            &solid,
            &|v| v[2] == x && (v[1] == 0 || v[0] == m),
            &solid_corner,
        );
        let dotted_ok = confined(
            &dotted,
            &|v| v[2] == x && (v[0] == 0 || v[1] == m),
            &dotted_corner,
        );
        Ok(solid_ok && dotted_ok && solid_corner != dotted_corner)
    }
}
