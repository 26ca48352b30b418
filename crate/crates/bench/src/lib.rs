//! Criterion benchmarks for the orbit classifier live in `benches/`.
