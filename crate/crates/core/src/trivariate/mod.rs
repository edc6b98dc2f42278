//! The quotient ring `Q[t1^{±1/2}, t2^{±1/2}, t3^{±1/2}] / (t1 t2 t3 = 1)`
//! and the order-12 theta-graph symmetry acting on it.

mod group;
mod theta_poly;

pub use group::{GroupElement, KeyMap};
pub use theta_poly::{Direction, Key, Slot, ThetaPoly};
