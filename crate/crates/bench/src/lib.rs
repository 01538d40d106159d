//! Criterion benchmarks for the term engine and the verifier; see `benches/`.
