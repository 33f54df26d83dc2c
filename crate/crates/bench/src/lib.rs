//! Criterion benchmarks for the enumeration, bijection and series kernels live in `benches/`.
