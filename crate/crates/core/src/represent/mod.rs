//! Construction pipelines: chain-form to NDR, NDR to TDR, TDR to RDR, and
//! the uniform representation via coefficient lifting.

mod lift;
mod ndr;
mod rdr;
mod split;
mod tdr;
mod udr;

pub use lift::{lift_coefficients, Binding, CarrierRule, LiftingRecord};
pub use ndr::{ndr, zero_pencil};
pub use rdr::{rdr, rdr_with_transform, RdrOutcome};
pub use split::SplitPencil;
pub use tdr::{tdr, tdr_with_transforms, TdrOutcome};
pub use udr::{udr, udr_with, UdrMatrix, UdrOptions, UdrOutcome};
