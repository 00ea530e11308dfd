//! Criterion benchmarks for `seifert-core`; see `benches/`.
