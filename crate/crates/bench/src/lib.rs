//! Benchmarks for the exact kernels live under `benches/`.
