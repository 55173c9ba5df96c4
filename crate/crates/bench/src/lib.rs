//! Benchmarks live in `benches/`; see `cargo bench -p hecke-bench`.
