//! Built-in matrices: the order-19 sixth-root witness and Fourier matrices.

use crate::bmatrix::ExponentMatrix;

/// Exponents of the `BH(19, 6)` witness, entry `j` standing for `e^{2πi·j/6}`.
/// Blocks are `X = [0..6, 0..6]`, `Y = [0..6, 6..12]`, `T = [0..6, 12..19]`,
/// `D = [12..19, 12..19]`.
pub const W19: [[u32; 19]; 19] = [
    [3, 0, 1, 1, 0, 0, 5, 4, 3, 5, 3, 2, 1, 1, 3, 5, 4, 3, 0],
    [0, 0, 1, 3, 3, 1, 4, 2, 4, 5, 1, 5, 1, 4, 3, 3, 1, 5, 0],
    [0, 0, 1, 4, 2, 4, 2, 4, 3, 2, 4, 1, 3, 3, 1, 4, 5, 1, 0],
    [1, 2, 4, 2, 1, 2, 4, 4, 2, 4, 5, 0, 3, 5, 1, 1, 3, 4, 0],
    [2, 5, 4, 3, 2, 0, 4, 2, 0, 1, 4, 2, 4, 1, 5, 3, 1, 3, 0],
    [0, 3, 5, 4, 5, 0, 4, 5, 3, 1, 3, 4, 5, 3, 4, 1, 3, 1, 0],
    [5, 4, 3, 5, 3, 2, 3, 0, 1, 1, 0, 0, 1, 1, 3, 5, 4, 3, 0],
    [4, 2, 4, 5, 1, 5, 0, 0, 1, 3, 3, 1, 1, 4, 3, 3, 1, 5, 0],
    [2, 4, 3, 2, 4, 1, 0, 0, 1, 4, 2, 4, 3, 3, 1, 4, 5, 1, 0],
    [4, 4, 2, 4, 5, 0, 1, 2, 4, 2, 1, 2, 3, 5, 1, 1, 3, 4, 0],
    [4, 2, 0, 1, 4, 2, 2, 5, 4, 3, 2, 0, 4, 1, 5, 3, 1, 3, 0],
    [4, 5, 3, 1, 3, 4, 0, 3, 5, 4, 5, 0, 5, 3, 4, 1, 3, 1, 0],
    [5, 5, 3, 3, 2, 1, 5, 5, 3, 3, 2, 1, 0, 0, 0, 0, 1, 1, 3],
    [5, 2, 3, 1, 5, 3, 5, 2, 3, 1, 5, 3, 0, 0, 1, 3, 0, 1, 0],
    [3, 3, 5, 5, 1, 2, 3, 3, 5, 5, 1, 2, 1, 3, 0, 0, 0, 1, 0],
    [1, 3, 2, 5, 3, 5, 1, 3, 2, 5, 3, 5, 0, 1, 0, 1, 0, 4, 1],
    [2, 5, 1, 3, 5, 3, 2, 5, 1, 3, 5, 3, 1, 0, 4, 1, 1, 0, 0],
    [3, 1, 5, 2, 3, 5, 3, 1, 5, 2, 3, 5, 1, 0, 1, 0, 4, 0, 1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 1, 1, 0, 1, 0, 0],
];

pub fn w19() -> ExponentMatrix {
    ExponentMatrix::from_rows(6, &W19).expect("fixture is well formed")
}

/// Fourier matrix `F_n` with entries `i·k mod n`, a `BH(n, n)`.
pub fn fourier(n: usize) -> ExponentMatrix {
    ExponentMatrix::from_fn(n as u32, n, n, |i, k| ((i * k) % n) as u32)
}

/// Resolves a built-in fixture name such as `w19` or `fourier5`.
pub fn builtin(name: &str) -> Option<ExponentMatrix> {
    match name {
        "w19" => Some(w19()),
        _ => name
            .strip_prefix("fourier")
            .and_then(|n| n.parse::<usize>().ok())
            .filter(|&n| n >= 1)
            .map(fourier),
    }
}
