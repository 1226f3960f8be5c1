//! Known low-order expansions used by the `closedform` verification suite.

/// `(family, quantity, expression in tb/tw, highest degree given)`.
pub const EXPANSIONS: &[(&str, &str, &str, u32)] = &[
    (
        "quad",
        "d",
        "tb + (3*tb^2 + 4*tb*tw) + (10*tb^3 + 33*tb^2*tw + 16*tb*tw^2) + (35*tb^4 + 202*tb^3*tw + 243*tb^2*tw^2 + 64*tb*tw^3)",
        4,
    ),
    (
        "quad",
        "y",
        "tb*tw + (7*tb^2*tw + 7*tb*tw^2) + (38*tb^3*tw + 91*tb^2*tw^2 + 38*tb*tw^3)",
        4,
    ),
    (
        "quad",
        "B_1",
        "tb + tb*(tb + tw) + tb*(2*tb^2 + 5*tb*tw + 2*tw^2) + tb*(5*tb^3 + 22*tb^2*tw + 22*tb*tw^2 + 5*tw^3)",
        4,
    ),
    (
        "quad",
        "B_2",
        "tb + tb*(tb + 2*tw) + tb*(2*tb^2 + 9*tb*tw + 6*tw^2) + tb*(5*tb^3 + 37*tb^2*tw + 57*tb*tw^2 + 20*tw^3)",
        4,
    ),
    (
        "quad",
        "B_3",
        "tb + tb*(tb + 2*tw) + tb*(2*tb^2 + 10*tb*tw + 6*tw^2) + tb*(5*tb^3 + 44*tb^2*tw + 65*tb*tw^2 + 20*tw^3)",
        4,
    ),
    (
        "quad",
        "G_1",
        "tb*tw*(tb + tw) + tb*tw*(2*tb^2 + 5*tb*tw + 2*tw^2) + tb*tw*(5*tb^3 + 22*tb^2*tw + 22*tb*tw^2 + 5*tw^3)",
        5,
    ),
    (
        "quad",
        "G_2",
        "tb^2*tw + 4*tb^2*tw*(tb + tw) + 5*tb^2*tw*(3*tb^2 + 7*tb*tw + 3*tw^2)",
        5,
    ),
    ("quad", "G_3", "tb^2*tw^2 + tb^2*tw^2*(7*tb + 8*tw)", 5),
    (
        "hex",
        "d1",
        "-tb + 3/2*tb*(tb + tw) - 1/8*tb*(29*tb^2 + 106*tw*tb + 45*tw^2) + 3/2*tb*(5*tb^3 + 30*tw*tb^2 + 32*tw^2*tb + 7*tw^3)",
        4,
    ),
    (
        "hex",
        "d2",
        "tb + 3/2*tb*(tb + tw) + 1/8*tb*(29*tb^2 + 106*tw*tb + 45*tw^2) + 3/2*tb*(5*tb^3 + 30*tw*tb^2 + 32*tw^2*tb + 7*tw^3)",
        4,
    ),
    (
        "hex",
        "y1",
        "tb*tw - 3*tb*tw*(tb + tw) + 1/2*tb*tw*(23*tb^2 + 62*tw*tb + 23*tw^2)",
        4,
    ),
    (
        "hex",
        "y2",
        "tb*tw + 3*tb*tw*(tb + tw) + 1/2*tb*tw*(23*tb^2 + 62*tw*tb + 23*tw^2)",
        4,
    ),
    (
        "hex",
        "B_1",
        "tb + tb*(tb^2 + 3*tb*tw + tw^2) + tb*(3*tb^4 + 24*tb^3*tw + 46*tb^2*tw^2 + 24*tb*tw^3 + 3*tw^4)",
        5,
    ),
    (
        "hex",
        "B_2",
        "tb + tb*(tb^2 + 5*tb*tw + 3*tw^2) + tb*(3*tb^4 + 36*tb^3*tw + 99*tb^2*tw^2 + 77*tb*tw^3 + 15*tw^4)",
        5,
    ),
    (
        "hex",
        "B_3",
        "tb + tb*(tb^2 + 6*tb*tw + 3*tw^2) + tb*(3*tb^4 + 48*tb^3*tw + 132*tb^2*tw^2 + 91*tb*tw^3 + 15*tw^4)",
        5,
    ),
    (
        "hex",
        "G_1",
        "(tb^3*tw + 3*tb^2*tw^2 + tb*tw^3) + (3*tb^5*tw + 24*tb^4*tw^2 + 46*tb^3*tw^3 + 24*tb^2*tw^4 + 3*tb*tw^5)",
        6,
    ),
    (
        "hex",
        "G_2",
        "(2*tb^3*tw + 2*tb^2*tw^2) + (12*tb^5*tw + 53*tb^4*tw^2 + 53*tb^3*tw^3 + 12*tb^2*tw^4)",
        6,
    ),
    (
        "hex",
        "G_3",
        "tb^2*tw^2 + (12*tb^4*tw^2 + 33*tb^3*tw^3 + 14*tb^2*tw^4)",
        6,
    ),
];
