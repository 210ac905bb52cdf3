//! Benchmarks for `ak-core` live in `benches/`; this crate has no API.
