//! Topological types of compact surfaces.
//!
//! A surface is fixed by orientability, genus and the number of boundary
//! components. Punctures and boundary components are not distinguished here.

use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SurfaceError {
    #[error("no {kind} surface with euler characteristic {chi} and {boundary} boundary components")]
    InvalidSurface { kind: &'static str, chi: i64, boundary: u32 },
    #[error("non-orientable surfaces need genus at least 1")]
    ZeroNonOrientableGenus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Surface {
    pub orientable: bool,
    pub genus: u32,
    pub boundary: u32,
}

impl Surface {
    pub fn orientable(genus: u32, boundary: u32) -> Self {
        Surface { orientable: true, genus, boundary }
    }

    /// Non-orientable surface `F_g^n`; `g` counts crosscaps.
    pub fn non_orientable(genus: u32, boundary: u32) -> Result<Self, SurfaceError> {
        if genus == 0 {
            return Err(SurfaceError::ZeroNonOrientableGenus);
        }
        Ok(Surface { orientable: false, genus, boundary })
    }

    pub fn euler(&self) -> i64 {
        euler(self)
    }

    /// Disk, annulus or Moebius band.
    pub fn is_trivial_piece(&self) -> bool {
        self.euler() >= 0 && self.boundary >= 1
    }
}

impl fmt::Display for Surface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = if self.orientable { "S" } else { "F" };
        write!(f, "{}_{}^{}", k, self.genus, self.boundary)
    }
}

pub fn euler(s: &Surface) -> i64 {
    let g = s.genus as i64;
    let n = s.boundary as i64;
    if s.orientable {
        2 - 2 * g - n
    } else {
        2 - g - n
    }
}

/// Recover the genus from the euler characteristic.
pub fn classify_from_chi(orientable: bool, chi: i64, boundary: u32) -> Result<Surface, SurfaceError> {
    let rest = 2 - chi - boundary as i64;
    let kind = if orientable { "orientable" } else { "non-orientable" };
    let err = SurfaceError::InvalidSurface { kind, chi, boundary };
    if orientable {
        if rest < 0 || rest % 2 != 0 {
            return Err(err);
        }
        Ok(Surface::orientable((rest / 2) as u32, boundary))
    } else {
        if rest < 1 {
            return Err(err);
        }
        Ok(Surface { orientable: false, genus: rest as u32, boundary })
    }
}

/// The low-complexity non-orientable surfaces handled by explicit presentations.
pub fn is_sporadic(genus: u32, boundary: u32) -> bool {
    matches!((genus, boundary), (1, 0..=4) | (2, 0..=3) | (3, 0..=2))
}
