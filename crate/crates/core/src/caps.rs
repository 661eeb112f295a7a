//! Size limits for the exhaustive procedures.

use serde::{Deserialize, Serialize};

/// Largest ring (or module) carrier that construction will build.
pub const DEFAULT_SIZE_CAP: usize = 4096;
/// Largest ring for which one-sided ideals (and submodules) are enumerated.
pub const DEFAULT_IDEAL_CAP: usize = 64;
/// Largest number of candidate generator images tried while enumerating homs.
pub const DEFAULT_HOM_CAP: usize = 1 << 20;
/// Ring size up to which the semisimplicity oracle is consulted.
pub const ORACLE_RING_CAP: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    pub size: usize,
    pub ideals: usize,
    pub hom: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            size: DEFAULT_SIZE_CAP,
            ideals: DEFAULT_IDEAL_CAP,
            hom: DEFAULT_HOM_CAP,
        }
    }
}
