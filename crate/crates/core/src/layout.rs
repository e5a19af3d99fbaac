//! Component layout of the ten-component spin-1 field.
//!
//! Cartesian slots are `(Φ0, Φ1, Φ2, Φ3, Φ01, Φ02, Φ03, Φ23, Φ31, Φ12)`.
//! Cyclic slots are `f1..f10`; slot `k` carries the angular index
//! `κ + SIGMA_OFFSET[k]`.

pub const DIM: usize = 10;

/// Minkowski metric `diag(1, -1, -1, -1)`.
pub const ETA: [f64; 4] = [1.0, -1.0, -1.0, -1.0];

/// Index pairs `(a, b)` labelling the bivector slots 4..=9.
pub const BIVECTOR_PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (2, 3), (3, 1), (1, 2)];

pub const CARTESIAN_LABELS: [&str; DIM] = [
    "Phi0", "Phi1", "Phi2", "Phi3", "Phi01", "Phi02", "Phi03", "Phi23", "Phi31", "Phi12",
];

pub const CYCLIC_LABELS: [&str; DIM] = ["f1", "f2", "f3", "f4", "f5", "f6", "f7", "f8", "f9", "f10"];

/// Shift of the angular index carried by each cyclic slot, in units of one.
pub const SIGMA_OFFSET: [i32; DIM] = [0, -1, 0, 1, -1, 0, 1, -1, 0, 1];

/// Eigenvalue of `i j^{12}` on each cyclic slot.
pub const HELICITY: [i32; DIM] = [0, 1, 0, -1, 1, 0, -1, 1, 0, -1];

/// Bivector slot holding the pair `(a, b)` and the sign relating
/// `Φ_ab` to the stored component.
pub fn bivector_slot(a: usize, b: usize) -> Option<(usize, f64)> {
    BIVECTOR_PAIRS.iter().enumerate().find_map(|(k, &(p, q))| {
        if (p, q) == (a, b) {
            Some((4 + k, 1.0))
        } else if (q, p) == (a, b) {
            Some((4 + k, -1.0))
        } else {
            None
        }
    })
}
