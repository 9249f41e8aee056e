//! Resource guards.
//!
//! Every exhaustive computation checks its size against a fixed limit before
//! starting. The `CSF_LAB_MAX_N` environment variable replaces the limit of
//! every guard; this is explicitly unsafe and may run for a very long time.

use crate::error::{Error, Result};

pub const ENV_OVERRIDE: &str = "CSF_LAB_MAX_N";

/// Stable-partition census and CSF.
pub const CENSUS_MAX_N: usize = 12;
/// Proper-coloring oracle (n^n colorings).
pub const COLORING_ORACLE_MAX_N: usize = 6;
/// Monomial-basis product (N-variable expansion).
pub const PRODUCT_MAX_DEGREE: usize = 12;
/// Enumeration of all graphs.
pub const ENUM_ALL_MAX_N: usize = 9;
/// Enumeration of forests and trees.
pub const ENUM_FOREST_MAX_N: usize = 12;
/// U-polynomial of a forest, by edge count.
pub const UPOLY_FOREST_MAX_EDGES: usize = 24;
/// General U-polynomial, by edge count.
pub const UPOLY_GENERAL_MAX_EDGES: usize = 20;
/// Lambda-matrix rows.
pub const LAMBDA_MATRIX_MAX_N: usize = 9;
/// Partition enumeration.
pub const PARTITION_MAX_N: usize = 40;
/// Entries in a forest-basis expansion memo.
pub const EXPANSION_MEMO_MAX: usize = 2_000_000;

fn override_limit() -> Option<usize> {
    std::env::var(ENV_OVERRIDE).ok()?.trim().parse().ok()
}

/// Fails with [`Error::Resource`] when `actual` exceeds `limit` (or the
/// environment override, when set).
pub fn guard(what: &'static str, actual: usize, limit: usize) -> Result<()> {
    let limit = override_limit().unwrap_or(limit);
    if actual > limit {
        Err(Error::Resource { what, actual, limit })
    } else {
        Ok(())
    }
}
