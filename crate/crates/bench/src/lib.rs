//! Criterion benchmarks for the square7 toolkit; see `benches/`.
