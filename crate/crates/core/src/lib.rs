pub mod algebra;
pub mod error;
pub mod expr;
pub mod oracle;
pub mod scalar;
pub mod vector;
