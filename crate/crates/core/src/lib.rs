//! Text compression through substring equation systems.
//!
//! A text `w` (terminated by a unique `0x00` sentinel) is represented by
//! at most `chi(w) - 1` substring equalities plus one character pin per
//! distinct byte, where `chi(w)` counts the super-maximal right extensions
//! of `w`. Decompression solves the system for its unique satisfying string.
//!
//! All text positions are 1-based.

pub mod bms;
pub mod chi;
pub mod error;
pub mod oracle;
pub mod ses;
pub mod suffix;
pub mod text;

pub use chi::{compress, decompress, position_equivalence_classes, Compressed};
pub use error::{Error, Result};
pub use ses::{
    attractor_from_ses, reconstruct, solve, Equation, Partition, Pin, Ses, Solution, Verdict,
};
pub use suffix::{build_index, chi, compute_sre, SreRecord, SuffixIndex};
pub use text::{Text, SENTINEL};
