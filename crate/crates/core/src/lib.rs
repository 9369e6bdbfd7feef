pub mod arctic;
pub mod efp;
pub mod error;
pub mod genfun;
pub mod mc;
pub mod multipoly;
pub mod params;
pub mod poly;
pub mod rational;
pub mod series;
pub mod sixvertex;

pub use error::{Error, Result};
pub use params::{Case, ModelParams};
