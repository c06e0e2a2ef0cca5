//! Benchmark inputs shared by the criterion targets.

use cartan_core::{presets, Algebra};

/// Preset instances spanning both characteristics and a range of dimensions.
pub fn instances() -> Vec<(&'static str, Algebra)> {
    [
        "dihedral:3@GF(3)",
        "dihedral:6@GF(3)",
        "dihedral:3@GF(5)",
        "matrix:3@Q",
        "quaternion:Q",
        "upper:4@GF(2)",
        "truncated:8@GF(3)",
    ]
    .into_iter()
    .map(|name| (name, presets::from_preset(name).expect("valid preset")))
    .collect()
}

/// Instances small enough for unit-group enumeration.
pub fn finite_instances() -> Vec<(&'static str, Algebra)> {
    [
        "dual-numbers:GF(3)",
        "matrix:2@GF(3)",
        "upper:2@GF(3)",
        "cyclic:6@GF(3)",
    ]
    .into_iter()
    .map(|name| (name, presets::from_preset(name).expect("valid preset")))
    .collect()
}
