pub mod error;
pub mod foundation;
pub mod freehom;
pub mod grouplike;
pub mod homlie;
pub mod hopf;
pub mod trees;
pub mod ueg;
pub mod verify;

pub use error::{Error, ParseError, Result};
