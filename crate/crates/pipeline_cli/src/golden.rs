//! Transcribed reference values.
//!
//! Weights are written as sums of `kLi`, with `Li` the i-th fundamental weight in
//! the node order of `rootdata`. A row with several weights shares its values.

/// `(weights, lowest L(0)-weight, (Λ|λ), n_Λ(λ))`.
pub type DirectionalRow = (&'static str, &'static str, &'static str, &'static str);

/// `(weights, lowest L(0)-weight)`.
pub type WeightRow = (&'static str, &'static str);

/// `G2` at level 1, direction Λ1 on the short simple root.
pub const G2_1: &[DirectionalRow] = &[("0", "0", "0", "0"), ("L1", "2/5", "2/3", "-2/3")];

/// `A2` at level 3, direction Λ1.
pub const A2_3: &[DirectionalRow] = &[
    ("0", "0", "0", "0"),
    ("L1", "2/9", "2/3", "-1/3"),
    ("L2", "2/9", "1/3", "-2/3"),
    ("2L1", "5/9", "4/3", "-2/3"),
    ("2L2", "5/9", "2/3", "-4/3"),
    ("L1+L2", "1/2", "1", "-1"),
    ("3L1", "1", "2", "-1"),
    ("3L2", "1", "1", "-2"),
    ("2L1+L2", "8/9", "5/3", "-4/3"),
    ("L1+2L2", "8/9", "4/3", "-5/3"),
];

pub const A1_1: &[WeightRow] = &[("0", "0"), ("L1", "1/4")];

/// `A5` at level 3, direction (2/3)Λ3.
pub const A5_3: &[DirectionalRow] = &[
    ("0", "0", "0", "0"),
    ("L1, L5", "35/108", "1/3", "-1/3"),
    ("L2, L4", "14/27", "2/3", "-2/3"),
    ("L3", "7/12", "1", "-1"),
    ("2L1, 2L5", "20/27", "2/3", "-2/3"),
    ("2L2, 2L4", "32/27", "4/3", "-4/3"),
    ("2L3", "4/3", "2", "-2"),
    ("L1+L2, L4+L5", "11/12", "1", "-1"),
    ("L1+L3, L3+L5", "26/27", "4/3", "-4/3"),
    ("L1+L4, L2+L5", "95/108", "1", "-1"),
    ("L1+L5", "2/3", "2/3", "-2/3"),
    ("L2+L3, L3+L4", "131/108", "5/3", "-5/3"),
    ("L2+L4", "10/9", "4/3", "-4/3"),
    ("3L1, 3L5", "5/4", "1", "-1"),
    ("3L2, 3L4", "2", "2", "-2"),
    ("3L3", "9/4", "3", "-3"),
    ("2L1+L2, L4+2L5", "38/27", "4/3", "-4/3"),
    ("2L1+L3, L3+2L5", "155/108", "5/3", "-5/3"),
    ("2L1+L4, L2+2L5", "4/3", "4/3", "-4/3"),
    ("2L1+L5, L1+2L5", "119/108", "1", "-1"),
    ("L1+2L2, 2L4+L5", "179/108", "5/3", "-5/3"),
    ("L1+2L3, 2L3+L5", "191/108", "7/3", "-7/3"),
    ("L1+2L4, 2L2+L5", "19/12", "5/3", "-5/3"),
    ("2L2+L3, L3+2L4", "215/108", "7/3", "-7/3"),
    ("2L2+L4, L2+2L4", "50/27", "2", "-2"),
    ("2L3+L4, L2+2L3", "56/27", "8/3", "-8/3"),
    ("L1+L2+L3, L3+L4+L5", "5/3", "2", "-2"),
    ("L1+L2+L4, L2+L4+L5", "167/108", "5/3", "-5/3"),
    ("L1+L2+L5, L1+L4+L5", "35/27", "4/3", "-4/3"),
    ("L1+L3+L4, L2+L3+L5", "44/27", "2", "-2"),
    ("L1+L3+L5", "49/36", "5/3", "-5/3"),
    ("L2+L3+L4", "23/12", "7/3", "-7/3"),
];

/// `D4` at level 3; L2 is the central node.
pub const D4_3: &[WeightRow] = &[
    ("0", "0"),
    ("L1, L3, L4", "7/18"),
    ("L2", "2/3"),
    ("2L1, 2L3, 2L4", "8/9"),
    ("L1+L2, L2+L3, L2+L4", "7/6"),
    ("L1+L3, L1+L4, L3+L4", "5/6"),
    ("3L1, 3L3, 3L4", "3/2"),
    ("L1+L3+L4", "4/3"),
    ("2L1+L3, 2L1+L4, L1+2L3, 2L3+L4, L1+2L4, L3+2L4", "25/18"),
];

/// Leading coefficients of `f^n(Sτ)` as `(n, exponent, coefficient)`.
pub const S_EXPANSIONS: &[(i64, &str, &str)] = &[
    (1, "1/3", "729"),
    (1, "2/3", "8748"),
    (-1, "-1/3", "1/729"),
    (-1, "0", "-12/729"),
    (-2, "-2/3", "1/531441"),
    (-2, "-1/3", "-24/531441"),
    (-2, "0", "252/531441"),
    (-3, "-1", "1/387420489"),
    (-3, "-2/3", "-36/387420489"),
    (-3, "-1/3", "594/387420489"),
    (-3, "0", "-5844/387420489"),
];

/// Leading Laurent coefficient of the fixed-point character in `f`.
pub const C_MINUS_3: &str = "129140163";

/// Coefficients of `dim V_1 + dim Ṽ_1` in `(dim V^g_1, d_{1/3}, d_{2/3}, 1)`.
pub const DIMENSION_FORMULA: [&str; 4] = ["4", "-36", "-12", "24"];

/// Displayed `q^1` coefficient of `f = η(τ)^12/η(3τ)^12`, written as binom(12, 2).
pub const F_Q1_DISPLAYED: &str = "66";

/// Displayed fourth candidate of dimension 168.
pub const C5_DISPLAYED: &str = "A5,1 C5,2 E6,2";

/// Displayed candidates of dimension 168.
pub const CANDIDATES_168: &[&str] = &["A5,1^4 D4,1", "D4,1^6", "A5,1 E7,3", C5_DISPLAYED];

pub const CANDIDATES_312: &[&str] = &["A11,1 D7,1 E6,1", "E6,1^4"];

pub struct LatticeFacts {
    pub det: &'static str,
    pub glue_index: usize,
    pub roots: usize,
    pub glue_group: u64,
}

pub const E6_4: LatticeFacts = LatticeFacts { det: "1", glue_index: 9, roots: 288, glue_group: 48 };
pub const D4_6: LatticeFacts = LatticeFacts { det: "1", glue_index: 64, roots: 144, glue_group: 2160 };
pub const A2_CUBED_IN_E6: usize = 40;
pub const PROJECTION_NORM: &str = "4/9";
pub const RHO_SIGMA6: &str = "1";

/// `(isometry, fixed dimension, fixed type)`.
pub const FIXED_ALGEBRAS: &[(&str, usize, &str)] = &[
    ("sigma6", 102, "E6,3 A2,1^3"),
    ("sigma2", 48, "A2,3^6"),
    ("sigma4", 54, "A2,3^2 U(1) D4,3 A1,1^3"),
];
