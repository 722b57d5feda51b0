//! Numerical building blocks shared by the diversity and detector code.

pub mod optimize;
pub mod quadrature;
pub mod roots;
pub mod special;
