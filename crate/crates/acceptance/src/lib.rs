// SPDX-License-Identifier: Apache-2.0

//! Holder crate for the `acceptance` test target.
//!
//! It lives in its own package so that `cargo test --workspace` runs the
//! library's unit and integration tests first, whatever the outcome here.
