//! The code-set construction: parameters, the base function `g`, and the set
//! `A = {A^t}` whose member `σ` of code `t` adds `(q/p)`-scaled digit offsets
//! of `σ` and `t` to `g`.

mod build;
mod json;
mod params;
mod preset;
mod types;

pub use build::{base_function, build_code_set, member_function};
pub use params::{ConstructionParams, RawParams};
pub use preset::{Preset, PresetArgs};
pub use types::{Claim, Code, CodeSet, Origin, PhaseSequence};
