//! Group-like series, formal group-like sequences, the Hom-group they form,
//! and the exponential map.

pub mod completion;
pub mod exp;
pub mod sequence;

pub use completion::{complete_order2, Completion};
pub use exp::{exp_injectivity_check, exp_sequence, exp_sequence_u, exp_u, naturality_square};
pub use sequence::{
    homgroup_inverse, homgroup_product, inverse_index, is_grouplike_order_p, validate_sequence,
    Clause, GroupLike, GroupLikeSequence, SequenceVerdict,
};
