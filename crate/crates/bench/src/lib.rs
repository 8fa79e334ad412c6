//! Criterion benchmarks for the revlogic toolkit live under `benches/`.
