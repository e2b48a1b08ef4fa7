pub mod cyclic;
pub mod error;
pub mod homology;
pub mod lie;
pub mod presets;
pub mod ring;
pub mod ringfile;
pub mod report;
pub mod sl;
pub mod steinberg;
pub mod verify;

pub use error::{CoreError, Result};
