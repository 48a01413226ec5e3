pub mod arith;
pub mod cyclotomic;
pub mod field;
pub mod mpoly;
pub mod upoly;
pub mod lattice;
pub mod linalg;
pub mod polynomial;
pub mod newton;
pub mod finite_field;
pub mod zeta;
pub mod motivic;
pub mod oracle;
