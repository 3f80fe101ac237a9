//! Twist construction: the combinatorial plan, closed-form building
//! blocks, factor containers, and the twist constructors themselves.

pub mod build;
pub mod elements;
pub mod factor;
pub mod plan;

pub use build::{
    corrupted_full_chain, full_chain, generic_chain, generic_link, jordanian,
    jordanian_canonical, parabolic_twist, quasi_jordanian, quasi_jordanian_product,
    rotation_twist, sl4_special, Corruption, Sl4Variant,
};
pub use factor::{Factor, Part, TwistElement};
pub use plan::{make_plan, ParamSet, RootPlan};
