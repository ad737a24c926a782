//! Closed-form count of vertex orbits.

use super::ComplexError;
use crate::surface::Surface;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Census {
    pub nonsep_orientable_complement: u64,
    pub nonsep_nonorientable_complement: u64,
    pub separating: u64,
    pub total: u64,
}

fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Orientation classes of `s` labelled boundaries on an orientable piece.
fn orientation_classes(s: u64) -> u64 {
    if s == 0 {
        1
    } else {
        1 << (s - 1)
    }
}

/// Separating curves whose complement has an orientable piece of genus `k`
/// carrying `s` labelled boundaries.
fn orientable_piece_count(g: u64, n: u64) -> u64 {
    let mut total = 0;
    let mut k = 0;
    while 2 * k < g {
        for s in 0..=n {
            let w = 2 * k + s;
            if w >= 2 && w + 2 <= g + n {
                total += binom(n, s) * orientation_classes(s);
            }
        }
        k += 1;
    }
    total
}

/// Separating curves with two non-orientable pieces of genera `l <= g - l`;
/// the piece of genus `l` carries the boundaries in `I`.
fn nonorientable_pieces_count(g: u64, n: u64) -> u64 {
    let mut total = 0;
    for l in 1..=g / 2 {
        let mut c = 0;
        for i in 0..=n {
            if l + i >= 2 && (g - l) + (n - i) >= 2 {
                c += binom(n, i);
            }
        }
        if 2 * l == g {
            // (l, I) and (l, I') describe the same curve
            c = if n == 0 { c.min(1) } else { c / 2 };
        }
        total += c;
    }
    total
}

pub fn vertex_orbit_census(g: u32, n: u32) -> Result<Census, ComplexError> {
    let s = Surface::non_orientable(g, n)?;
    if s.euler() >= 0 {
        return Err(ComplexError::NotApplicable(format!("{s} has non-negative euler characteristic")));
    }
    let (g, n) = (g as u64, n as u64);
    let nonsep_orientable_complement = if n == 0 { 1 } else { 1 << (n - 1) };
    let nonsep_nonorientable_complement = match g {
        1 => 0,
        2 => 1,
        _ => 2,
    };
    let separating = orientable_piece_count(g, n) + nonorientable_pieces_count(g, n);
    Ok(Census {
        nonsep_orientable_complement,
        nonsep_nonorientable_complement,
        separating,
        total: nonsep_orientable_complement + nonsep_nonorientable_complement + separating,
    })
}
