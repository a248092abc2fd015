//! Frozen expected values for the check registry: printed sequence,
//! Hankel-transform and continued-fraction-parameter prefixes that the
//! computations must reproduce exactly.

/// First Catalan numbers.
pub(crate) const CATALAN: [i64; 6] = [1, 1, 2, 5, 14, 42];

/// Rueppel sequence head.
pub(crate) const RUEPPEL: [i64; 11] = [1, 1, 0, 1, 0, 0, 0, 1, 0, 0, 0];

/// Hankel transform of the Rueppel sequence.
pub(crate) const HANKEL_RUEPPEL: [i64; 11] = [1, -1, -1, 1, 1, -1, -1, 1, 1, -1, -1];

/// Expansion of 1 - x c(x).
pub(crate) const ONE_MINUS_XC: [i64; 10] = [1, -1, -1, -2, -5, -14, -42, -132, -429, -1430];

/// Hankel transform of 1 - x c(x): (-1)^n (n+1).
pub(crate) const HANKEL_ONE_MINUS_XC: [i64; 10] = [1, -2, 3, -4, 5, -6, 7, -8, 9, -10];

/// Expansion of 1 - x r(x).
pub(crate) const ONE_MINUS_XR: [i64; 11] = [1, -1, -1, 0, -1, 0, 0, 0, -1, 0, 0];

/// Hankel transform of 1 - x r(x).
pub(crate) const HANKEL_ONE_MINUS_XR: [i64; 11] = [1, -2, 3, 2, -3, 4, 3, 2, -3, 4, -5];

/// Stieltjes parameters of r(x).
pub(crate) const S_RUEPPEL: [i64; 11] = [1, -1, -1, 1, -1, 1, -1, 1, 1, -1, 1];

/// Jacobi alpha parameters of r(x); every beta is -1.
pub(crate) const J_RUEPPEL_ALPHA: [i64; 11] = [1, -2, 0, 0, 2, 0, -2, 0, 2, -2, 0];

/// Stieltjes parameters of 1 - x c(x).
pub(crate) const S_ONE_MINUS_XC: [(i64, i64); 8] = [
    (-1, 1),
    (2, 1),
    (1, 2),
    (3, 2),
    (2, 3),
    (4, 3),
    (3, 4),
    (5, 4),
];

/// Jacobi parameters of 1 - x c(x).
pub(crate) const J_ONE_MINUS_XC_ALPHA: [(i64, i64); 6] =
    [(-1, 1), (5, 2), (13, 6), (25, 12), (41, 20), (61, 30)];
pub(crate) const J_ONE_MINUS_XC_BETA: [(i64, i64); 6] =
    [(-2, 1), (3, 4), (8, 9), (15, 16), (24, 25), (35, 36)];

/// Stieltjes parameters of 1 - x r(x).
pub(crate) const S_ONE_MINUS_XR: [(i64, i64); 10] = [
    (-1, 1),
    (2, 1),
    (-1, 2),
    (-3, 2),
    (2, 3),
    (-2, 3),
    (3, 2),
    (-3, 2),
    (2, 3),
    (4, 3),
];

/// Jacobi parameters of 1 - x r(x).
pub(crate) const J_ONE_MINUS_XR_ALPHA: [(i64, i64); 6] =
    [(-1, 1), (3, 2), (-5, 6), (5, 6), (-5, 6), (7, 12)];
pub(crate) const J_ONE_MINUS_XR_BETA: [(i64, i64); 6] =
    [(-2, 1), (3, 4), (-4, 9), (-9, 4), (8, 9), (-9, 16)];

/// Expansion of 1 - x + x^2 c(x^2).
pub(crate) const CAT_EVEN_SHIFT: [i64; 14] = [1, -1, 1, 0, 1, 0, 2, 0, 5, 0, 14, 0, 42, 0];

/// Hankel transform of 1 - x + x^2 c(x^2): generating function
/// (1-2x)/(1-x)^2, i.e. 1 - n.
pub(crate) const HANKEL_CAT_EVEN_SHIFT: [i64; 11] = [1, 0, -1, -2, -3, -4, -5, -6, -7, -8, -9];

/// Expansion of 1 - x + x^2 r(x^2).
pub(crate) const RUEP_EVEN_SHIFT: [i64; 18] =
    [1, -1, 1, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0];

/// Hankel transform of 1 - x + x^2 r(x^2) (a signed A037834).
pub(crate) const HANKEL_RUEP_EVEN_SHIFT: [i64; 21] = [
    1, 0, -1, 0, 1, 2, -1, 0, 1, 2, 3, -2, 1, 2, -1, 0, 1, 2, 3, -2, -3,
];

/// Expansion of 1 + x - x^2 r(x^2).
pub(crate) const RUEP_PLUS_X: [i64; 18] = [1, 1, -1, 0, -1, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, -1, 0];

/// Hankel transform of 1 + x - x^2 r(x^2) (equals that of 1 - x r(x)).
pub(crate) const HANKEL_RUEP_PLUS_X: [i64; 16] =
    [1, -2, 3, 2, -3, 4, 3, 2, -3, 4, -5, -4, -3, 4, 3, 2];

/// Expansion of 1 + x - x^2 c(x^2).
pub(crate) const CAT_PLUS_X: [i64; 12] = [1, 1, -1, 0, -1, 0, -2, 0, -5, 0, -14, 0];

/// Hankel transform of 1 + x - x^2 c(x^2).
pub(crate) const HANKEL_CAT_PLUS_X: [i64; 6] = [1, -2, 3, -4, 5, -6];

/// Expansion of 1/(1 + x c(x)).
pub(crate) const RECIP_ONE_PLUS_XC: [i64; 11] = [1, -1, 0, -1, -2, -6, -18, -57, -186, -622, -2120];

/// Expansion of 1/(1 + x r(x)).
pub(crate) const RECIP_ONE_PLUS_XR: [i64; 16] =
    [1, -1, 0, 1, -2, 2, 0, -3, 4, -2, -2, 6, -6, 0, 8, -11];

/// Hankel transform of 1/(1 + x r(x)).
pub(crate) const HANKEL_RECIP_ONE_PLUS_XR: [i64; 21] = [
    1, -1, 1, 1, -1, 1, 1, 1, -1, 1, -1, -1, -1, 1, 1, 1, -1, 1, -1, -1, 1,
];

/// The signed run-parity witness ((-1)^binomial(n,2) - h_n)/2.
pub(crate) const SIGNED_RUN_PARITY: [i64; 16] = [0, 1, -1, -1, 1, 0, -1, -1, 1, 0, 0, 0, 1, 0, -1, -1];

/// Expansion of 1 - x/c(x^2).
pub(crate) const CAT_RECIP_EVEN: [i64; 11] = [1, -1, 0, 1, 0, 1, 0, 2, 0, 5, 0];

/// Hankel transform of 1 - x/c(x^2).
pub(crate) const HANKEL_CAT_RECIP_EVEN: [i64; 20] = [
    1, -1, -1, 4, 1, -9, -1, 16, 1, -25, -1, 36, 1, -49, -1, 64, 1, -81, -1, 100,
];

/// Expansion of 1 - x/r(x^2).
pub(crate) const RUEP_RECIP_EVEN: [i64; 17] =
    [1, -1, 0, 1, 0, -1, 0, 2, 0, -3, 0, 4, 0, -6, 0, 10, 0];

/// Period of the Hankel transform of 1 - x/r(x^2).
pub(crate) const PERIOD_C3: [i64; 4] = [1, -1, -1, 0];

/// Hankel transform of 1 - x(1 - x/c(x^2)).
pub(crate) const HANKEL_C3B: [i64; 11] = [1, -2, -1, -1, 7, 11, 38, 51, 115, 144, 269];

/// Period-8 block of both mod-2 Hankel conjectures, the expansion of
/// (1 + x^2 + x^3 + x^4 + x^5 + x^7)/(1 - x^8).
pub(crate) const PERIOD_MOD2: [i64; 8] = [1, 0, 1, 1, 1, 1, 0, 1];

/// Hankel transform of 1 - x + x^2/r(x^2).
pub(crate) const HANKEL_C4: [i64; 22] = [
    1, -2, -1, 1, 1, 1, -2, 1, 1, 2, 1, -1, 1, 1, -2, 1, 1, 2, 1, -1, -1, -1,
];

/// Expansion of x + 1/c(x^2).
pub(crate) const CAT_X_PLUS_RECIP: [i64; 14] = [1, 1, -1, 0, -1, 0, -2, 0, -5, 0, -14, 0, -42, 0];

/// Expansion of x + 1/r(x^2).
pub(crate) const RUEP_X_PLUS_RECIP: [i64; 14] = [1, 1, -1, 0, 1, 0, -2, 0, 3, 0, -4, 0, 6, 0];

/// Hankel transform of x + 1/r(x^2) (a signed A005811(n+1)).
pub(crate) const HANKEL_C5: [i64; 13] = [1, -2, -1, 2, -3, -2, -1, 2, -3, 4, 3, 2, -3];

/// Expansion of 1 - x + x^2/(1 - x^2 r(x^2)).
pub(crate) const RUEP_C6_SEQ: [i64; 18] = [1, -1, 1, 0, 1, 0, 2, 0, 3, 0, 6, 0, 10, 0, 18, 0, 31, 0];

/// Hankel transform of 1 - x + x^2/(1 - x^2 r(x^2)).
pub(crate) const HANKEL_C6: [i64; 11] = [1, 0, -1, -2, 1, 2, 3, -2, 1, 2, 3];

/// Interpolated Hankel components of 1 + s x + x^2 c(x^2): value is
/// A + s^2 B termwise.
pub(crate) const C7_CAT_A: [i64; 11] = [1, 1, 0, 0, -1, -1, -2, -2, -3, -3, -4];
pub(crate) const C7_CAT_B: [i64; 11] = [0, -1, -1, -2, -2, -3, -3, -4, -4, -5, -5];

/// Interpolated Hankel components of 1 + s x + x^2/(1 - x^2 r(x^2)).
pub(crate) const C7_RUEP_A: [i64; 11] = [1, 1, 0, 0, -1, -1, 0, 0, -1, -1, 0];
pub(crate) const C7_RUEP_B: [i64; 11] = [0, -1, -1, -2, 2, 3, 3, -2, 2, 3, 3];

/// Hankel transform at s = 0: 1 + x^2/(1 - x^2 r(x^2)).
pub(crate) const HANKEL_C7_S0: [i64; 24] = [
    1, 1, 0, 0, -1, -1, 0, 0, -1, -1, 0, 0, 1, -1, 0, 0, -1, -1, 0, 0, 1, 1, 0, 0,
];

/// Expansion of 1 + x/(1 - x^2 r(x^2)).
pub(crate) const CJAUX_SEQ: [i64; 17] = [1, 1, 0, 1, 0, 2, 0, 3, 0, 6, 0, 10, 0, 18, 0, 31, 0];

/// Jacobi alpha parameters of 1 + x/(1 - x^2 r(x^2)); betas are all -1.
pub(crate) const CJAUX_J_ALPHA: [i64; 11] = [1, -2, 2, 0, 0, -2, 0, 2, 0, -2, 2];

/// Expansion of (1 + (x - x^2) c(x^2))/(1 - x^2 c(x^2)).
pub(crate) const C8_CAT_SEQ: [i64; 11] = [1, 1, 0, 2, 0, 5, 0, 14, 0, 42, 0];

/// Hankel transform of the Catalan-side C8 sequence.
pub(crate) const HANKEL_C8_CAT: [i64; 13] = [1, -1, -4, 1, 9, -1, -16, 1, 25, -1, -36, 1, 49];

/// Expansion of (1 + (x - x^2) r(x^2))/(1 - x^2 r(x^2)).
pub(crate) const C8_RUEP_SEQ: [i64; 21] = [
    1, 1, 0, 2, 0, 3, 0, 6, 0, 10, 0, 18, 0, 31, 0, 56, 0, 98, 0, 174, 0,
];

/// Hankel transform of the Rueppel-side C8 sequence.
pub(crate) const HANKEL_C8_RUEP: [i64; 21] = [
    1, -1, -4, 1, 9, -1, -4, 1, 9, -1, -16, 1, 9, -1, -4, 1, 9, -1, -16, 1, 25,
];

/// Square roots |h_{2n}|^(1/2) of the C8 Hankel transform.
pub(crate) const C8_SQRT: [i64; 17] = [1, 2, 3, 2, 3, 4, 3, 2, 3, 4, 5, 4, 3, 4, 3, 2, 3];

/// Hankel transform of the two-parameter Rueppel series, as
/// (coefficient, b-degree, c-degree) monomials.
pub(crate) const HANKEL_RBC: [(i64, u32, u32); 10] = [
    (1, 0, 0),
    (-1, 0, 2),
    (-1, 2, 0),
    (1, 4, 0),
    (1, 4, 0),
    (-1, 4, 2),
    (-1, 6, 0),
    (1, 8, 0),
    (1, 8, 0),
    (-1, 8, 2),
];

/// Row sums of (r(x^2), -x r(x^2)): the INVERT(-1) transform of the
/// shifted Rueppel sequence.
pub(crate) const ROW_SUMS: [i64; 11] = [1, -1, 2, -3, 4, -6, 10, -15, 22, -34, 52];

/// Shared Hankel transform of the row sums and of r_{n+1}.
pub(crate) const HANKEL_ROW_SUMS: [i64; 14] = [1, 1, -1, -1, -1, 1, -1, -1, -1, -1, 1, -1, -1, 1];

/// Polynomial tail of r_{b,b}: 1, -b, b^2+1, -b(b^2+2), b^2(b^2+3),
/// -b(b^4+4b^2+1), b^6+5b^4+3b^2+1 as term lists.
pub(crate) const TAIL_BB: [&[(i64, u32, u32)]; 7] = [
    &[(1, 0, 0)],
    &[(-1, 1, 0)],
    &[(1, 2, 0), (1, 0, 0)],
    &[(-1, 3, 0), (-2, 1, 0)],
    &[(1, 4, 0), (3, 2, 0)],
    &[(-1, 5, 0), (-4, 3, 0), (-1, 1, 0)],
    &[(1, 6, 0), (5, 4, 0), (3, 2, 0), (1, 0, 0)],
];

/// Polynomial tail of r_{b,1}: 1, -1, b+1, -2b-1, 3b+1, -b^2-4b-1,
/// 3b^2+6b+1, -6b^2-8b-1, b^3+10b^2+10b+1.
pub(crate) const TAIL_B1: [&[(i64, u32, u32)]; 9] = [
    &[(1, 0, 0)],
    &[(-1, 0, 0)],
    &[(1, 1, 0), (1, 0, 0)],
    &[(-2, 1, 0), (-1, 0, 0)],
    &[(3, 1, 0), (1, 0, 0)],
    &[(-1, 2, 0), (-4, 1, 0), (-1, 0, 0)],
    &[(3, 2, 0), (6, 1, 0), (1, 0, 0)],
    &[(-6, 2, 0), (-8, 1, 0), (-1, 0, 0)],
    &[(1, 3, 0), (10, 2, 0), (10, 1, 0), (1, 0, 0)],
];

/// A088567 head, as printed.
pub(crate) const A088567_HEAD: [i64; 15] = [1, 1, 1, 2, 2, 3, 4, 5, 6, 7, 9, 10, 13, 14, 18];

/// Complement of the Rueppel sequence, 1 - r_n.
pub(crate) const ONE_MINUS_R: [i64; 11] = [0, 0, 1, 0, 1, 1, 1, 0, 1, 1, 1];

/// The doubly shifted complement 1 - r_{n+2}.
pub(crate) const ONE_MINUS_R_SHIFT2: [i64; 21] =
    [1, 0, 1, 1, 1, 0, 1, 1, 1, 1, 1, 1, 1, 0, 1, 1, 1, 1, 1, 1, 1];

/// Zero locations 4*2^n - 3 of the shifted complement.
pub(crate) const ZERO_LOCATIONS: [i64; 11] = [1, 5, 13, 29, 61, 125, 253, 509, 1021, 2045, 4093];

/// Binary run counts.
pub(crate) const A005811_HEAD: [i64; 13] = [0, 1, 2, 1, 2, 3, 2, 1, 2, 3, 4, 3, 2];

/// Restart-chunk values (partial sums of the marked sequence).
pub(crate) const A062050_HEAD: [i64; 17] = [1, 1, 2, 1, 2, 3, 4, 1, 2, 3, 4, 5, 6, 7, 8, 1, 2];

/// Josephus survivors (partial sums of the doubled sequence).
pub(crate) const A006257_HEAD: [i64; 17] = [1, 1, 3, 1, 3, 5, 7, 1, 3, 5, 7, 9, 11, 13, 15, 1, 3];

/// The marked complement with 1, 0 prepended.
pub(crate) const JOSEPHUS_MARKED: [i64; 23] = [
    1, 0, 1, -1, 1, 1, 1, -3, 1, 1, 1, 1, 1, 1, 1, -7, 1, 1, 1, 1, 1, 1, 1,
];

/// The marked sequence multiplied termwise by 1, 2, 2, 2, ...
pub(crate) const JOSEPHUS_DOUBLED: [i64; 21] = [
    1, 0, 2, -2, 2, 2, 2, -6, 2, 2, 2, 2, 2, 2, 2, -14, 2, 2, 2, 2, 2,
];

/// The coefficient array of the r_{b,b} tail (rows of b-coefficients).
pub(crate) const P2_MATRIX: [&[i64]; 9] = [
    &[1],
    &[0, -1],
    &[1, 0, 1],
    &[0, -2, 0, -1],
    &[0, 0, 3, 0, 1],
    &[0, -1, 0, -4, 0, -1],
    &[1, 0, 3, 0, 5, 0, 1],
    &[0, -2, 0, -6, 0, -6, 0, -1],
    &[0, 0, 4, 0, 10, 0, 7, 0, 1],
];

/// The coefficient array of the r_{b,1} tail.
pub(crate) const P3_MATRIX: [&[i64]; 9] = [
    &[1],
    &[-1],
    &[1, 1],
    &[-1, -2],
    &[1, 3],
    &[-1, -4, -1],
    &[1, 6, 3],
    &[-1, -8, -6],
    &[1, 10, 10, 1],
];
