//! Criterion benchmarks for the verification kernels; see `benches/`.
