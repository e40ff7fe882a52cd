//! Criterion benchmarks for the beta-moments engine live in `benches/`.
