//! Published reference values used by the acceptance checks.

/// Binary Nyldon words of length at most 7, shortest first.
pub const NYLDON_BINARY_7: [&str; 41] = [
    "0", "1", "10", "100", "101", "1000", "1001", "1011", "10000", "10001", "10010", "10011",
    "10110", "10111", "100000", "100001", "100010", "100011", "100110", "100111", "101100",
    "101110", "101111", "1000000", "1000001", "1000010", "1000011", "1000100", "1000110",
    "1000111", "1001010", "1001100", "1001110", "1001111", "1011000", "1011001", "1011010",
    "1011100", "1011101", "1011110", "1011111",
];

/// Per-length counts of [`NYLDON_BINARY_7`].
pub const NYLDON_BINARY_7_COUNTS: [usize; 7] = [2, 1, 2, 3, 6, 9, 18];

/// A step of the Lazard run: `i`, `Y_i ∩ {0,1}^{≤5}`, `u_i`.
pub type LazardRow = (usize, &'static [&'static str], &'static str);

/// The binary Lazard run for length bound 5.
pub const LAZARD_BINARY_5: [LazardRow; 14] = [
    (1, &["0", "1"], "0"),
    (2, &["1", "10", "100", "1000", "10000"], "1"),
    (3, &["10", "101", "1011", "10111", "100", "1001", "10011", "1000", "10001", "10000"], "10"),
    (4, &["101", "10110", "1011", "10111", "100", "10010", "1001", "10011", "1000", "10001", "10000"], "100"),
    (5, &["101", "10110", "1011", "10111", "10010", "1001", "10011", "1000", "10001", "10000"], "1000"),
    (6, &["101", "10110", "1011", "10111", "10010", "1001", "10011", "10001", "10000"], "10000"),
    (7, &["101", "10110", "1011", "10111", "10010", "1001", "10011", "10001"], "10001"),
    (8, &["101", "10110", "1011", "10111", "10010", "1001", "10011"], "1001"),
    (9, &["101", "10110", "1011", "10111", "10010", "10011"], "10010"),
    (10, &["101", "10110", "1011", "10111", "10011"], "10011"),
    (11, &["101", "10110", "1011", "10111"], "101"),
    (12, &["10110", "1011", "10111"], "1011"),
    (13, &["10110", "10111"], "10110"),
    (14, &["10111"], "10111"),
];

/// Circular and linear contraction passes for `10001011010101`.
pub const CIRCULAR_TRACE: [&[&str]; 6] = [
    &["1", "0", "0", "0", "1", "0", "1", "1", "0", "1", "0", "1", "0", "1"],
    &["1000", "10", "1", "10", "10", "10", "1"],
    &["1000", "101", "10", "10", "101"],
    &["1000", "1011010", "101"],
    &["1011010", "1011000"],
    &["10110101011000"],
];

pub const LINEAR_TRACE: [&[&str]; 6] = [
    &["1", "0", "0", "0", "1", "0", "1", "1", "0", "1", "0", "1", "0", "1"],
    &["1000", "10", "1", "10", "10", "10", "1"],
    &["1000", "101", "10", "10", "101"],
    &["1000", "1011010", "101"],
    &["1011010", "101"],
    &["1011010101"],
];

/// The 23-letter word whose fifth power has `K = 4`, and its conjugate.
pub const POWER_EXAMPLE: (&str, &str) = ("01111011011111011110111", "10111101101111101111011");
