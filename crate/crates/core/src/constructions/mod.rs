//! Extremal lower-bound constructions and the size recursions they attain.

mod nonstrict;
mod result;
mod sequences;
mod sizes;
mod strict;

pub use nonstrict::build_nonstrict;
pub use result::{ConstructedPoints, ConstructionKind, ConstructionProfile, ConstructionResult, Stage, Trace};
pub use sequences::{build_sequence_extremal, es_real_sequence, repeated_es_sequence, SequenceProfile};
pub use sizes::{full_mask, lambda_of, m_of, mask_of, CoordMask, SizeTable};
pub use strict::build_strict;
