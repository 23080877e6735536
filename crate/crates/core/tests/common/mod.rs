//! Test-only oracles shared by the integration tests. Each is written
//! against the public API from first principles, not against the library's
//! internal tables.
#![allow(dead_code)]

pub mod fixtures;
pub mod hom_oracle;
pub mod oracles;
