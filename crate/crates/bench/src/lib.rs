//! Benchmarks for wright-core live in `benches/`.
