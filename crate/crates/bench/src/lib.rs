//! Workloads shared by the criterion benches.

use localh_core::CartanType;

/// Classical types swept by the cluster benchmark, smallest first.
pub fn cluster_sweep() -> Vec<CartanType> {
    let mut out = Vec::new();
    for n in [8, 12, 16] {
        out.extend([CartanType::A(n), CartanType::B(n), CartanType::D(n)]);
    }
    out
}
