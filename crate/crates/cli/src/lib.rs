//! IO companion to `addsep-core`: JSON document schemas, the named fixture
//! corpus, brute-force reference oracles, seeded instance generators, and
//! the self-test suites behind `addsep selftest`.

#![forbid(unsafe_code)]

pub mod fixtures;
pub mod oracle;
pub mod sampling;
pub mod schema;
pub mod selftest;
