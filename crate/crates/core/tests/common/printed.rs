//! Displays transcribed factor by factor as `(factor, exponent)`.

/// `D_{20|3}` in `(C3, C21, C111)`.
pub const CUBIC_TWENTY: &[(&str, u64)] = &[
    ("C3", 8912896),
    ("400*C111*C3^2 + 20*C21*C3^2 + C3^3", 1),
    ("324*C111*C3^2 + (1520/27)*C21^3 + (76/3)*C21^2*C3 + 20*C21*C3^2 + C3^3", 20),
    ("256*C111*C3^2 + (320/3)*C21^3 + 48*C21^2*C3 + 20*C21*C3^2 + C3^3", 190),
    ("196*C111*C3^2 + (1360/9)*C21^3 + 68*C21^2*C3 + 20*C21*C3^2 + C3^3", 1140),
    ("144*C111*C3^2 + (5120/27)*C21^3 + (256/3)*C21^2*C3 + 20*C21*C3^2 + C3^3", 4845),
    ("100*C111*C3^2 + (2000/9)*C21^3 + 100*C21^2*C3 + 20*C21*C3^2 + C3^3", 15504),
    ("64*C111*C3^2 + (2240/9)*C21^3 + 112*C21^2*C3 + 20*C21*C3^2 + C3^3", 38760),
    ("36*C111*C3^2 + (7280/27)*C21^3 + (364/3)*C21^2*C3 + 20*C21*C3^2 + C3^3", 77520),
    ("16*C111*C3^2 + (2560/9)*C21^3 + 128*C21^2*C3 + 20*C21*C3^2 + C3^3", 125970),
    ("4*C111*C3^2 + (880/3)*C21^3 + 132*C21^2*C3 + 20*C21*C3^2 + C3^3", 167960),
    ("(8000/27)*C21^3 + (400/3)*C21^2*C3 + 20*C21*C3^2 + C3^3", 92378),
];

/// `D_{2|4}` in `(C4, C31, C22, C211, C1111)`, as printed.
pub const QUARTIC_TWO: &[(&str, u64)] = &[
    ("1/2^6", 1),
    ("C4", 2),
    ("8*C1111 + 4*C211 + 2*C31 + 2*C22 + C4", 1),
    ("2*C22 + C4", 1),
    ("- 16*C1111*C22 - 8*C1111*C4 + 4*C211^2 + 12*C211*C31 + 8*C211*C4 + 9*C31^2 + 8*C31*C22 + 16*C31*C4 + 8*C22*C4 + 8*C4^2", 2),
];

/// `D_{4|4}` in `(C4, C31, C22, C211, C1111)`, as printed.
pub const QUARTIC_FOUR: &[(&str, u64)] = &[
    ("1/2^106", 1),
    ("C4", 20),
    ("64*C1111 + 16*C211 + 4*C31 + 4*C22 + C4", 1),
    ("4*C22 + C4", 3),
    ("2*C22 + C4", 6),
    ("64*C1111*C22 + 16*C1111*C4 - 16*C211^2 - 24*C211*C31 - 8*C211*C4 - 9*C31^2 - 8*C31*C22 - 8*C31*C4 - 4*C22*C4 - 2*C4^2", 6),
    ("256*C1111*C22*C4^3 + 128*C1111*C4^4 - 64*C211^2*C4^3 + 144*C211*C31^2*C4^2 + 192*C211*C31*C4^3 + 128*C211*C4^4 + 324*C31^4*C22 + 81*C31^4*C4 + 1296*C31^3*C22*C4 + 432*C31^3*C4^2 + 2016*C31^2*C22*C4^2 + 720*C31^2*C4^3 + 1408*C31*C22*C4^3 + 512*C31*C4^4 + 384*C22*C4^4 + 128*C4^5", 12),
    ("27648*C1111^2*C22^3 + 48384*C1111^2*C22^2*C4 + 28224*C1111^2*C22*C4^2 + 5488*C1111^2*C4^3 - 13824*C1111*C211^2*C22^2 - 16128*C1111*C211^2*C22*C4 - 4704*C1111*C211^2*C4^2 + 5184*C1111*C211*C31^2*C22 + 3024*C1111*C211*C31^2*C4 - 20736*C1111*C211*C31*C22^2 - 13824*C1111*C211*C31*C22*C4 - 1008*C1111*C211*C31*C4^2 - 2304*C1111*C211*C22^2*C4 + 2496*C1111*C211*C22*C4^2 + 2240*C1111*C211*C4^3 - 324*C1111*C31^4 + 3888*C1111*C31^3*C22 + 972*C1111*C31^3*C4 - 5184*C1111*C31^2*C22^2 + 2160*C1111*C31^2*C22*C4 + 1080*C1111*C31^2*C4^2 - 6912*C1111*C31*C22^3 - 8640*C1111*C31*C22^2*C4 + 1728*C1111*C31*C22*C4^2 + 1280*C1111*C31*C4^3 - 2304*C1111*C22^3*C4 - 1536*C1111*C22^2*C4^2 + 992*C1111*C22*C4^3 + 320*C1111*C4^4 + 1728*C211^4*C22 + 1008*C211^4*C4 - 144*C211^3*C31^2 + 5184*C211^3*C31*C22 + 2736*C211^3*C31*C4 + 576*C211^3*C22*C4 + 192*C211^3*C4^2 - 324*C211^2*C31^3 + 6912*C211^2*C31^2*C22 + 3348*C211^2*C31^2*C4 + 1728*C211^2*C31*C22^2 + 5472*C211^2*C31*C22*C4 + 2208*C211^2*C31*C4^2 + 576*C211^2*C22^2*C4 + 1824*C211^2*C22*C4^2 + 832*C211^2*C4^3 - 324*C211*C31^4 + 3888*C211*C31^3*C22 + 1404*C211*C31^3*C4 + 3456*C211*C31^2*C22^2 + 6912*C211*C31^2*C22*C4 + 2016*C211*C31^2*C4^2 + 2880*C211*C31*C22^2*C4 + 4368*C211*C31*C22*C4^2 + 1184*C211*C31*C4^3 + 960*C211*C22^2*C4^2 + 1088*C211*C22*C4^3 + 224*C211*C4^4 - 81*C31^5 + 648*C31^4*C22 + 162*C31^4*C4 + 1296*C31^3*C22^2 + 1836*C31^3*C22*C4 + 432*C31^3*C4^2 + 576*C31^2*C22^3 + 2160*C31^2*C22^2*C4 + 1800*C31^2*C22*C4^2 + 364*C31^2*C4^3 + 576*C31*C22^3*C4 + 1344*C31*C22^2*C4^2 + 800*C31*C22*C4^3 + 128*C31*C4^4 + 192*C22^3*C4^2 + 304*C22^2*C4^3 + 128*C22*C4^4 + 16*C4^5", 4),
];
