//! Small presentations with known answers, shared by tests, benchmarks and
//! the command line tool.

/// `k<a,b,c,d>/(abc, cdab)`.
pub const ABC_CDAB: &str = include_str!("../data/abc_cdab.json");
/// `k<a,b,c,d>/(abc, cdab, bcda)`.
pub const ABC_CDAB_BCDA: &str = include_str!("../data/abc_cdab_bcda.json");
/// Ten generators whose graph has two circuits through the vertex `pq`.
pub const PQ_CIRCUITS: &str = include_str!("../data/pq_circuits.json");
/// `k<x,y>/(x²y, xy², y³, x⁴)`.
pub const CUBIC_XY: &str = include_str!("../data/cubic_xy.json");
/// Polynomial relations whose leading words give [`CUBIC_XY`].
pub const CUBIC_XY_POLYNOMIALS: &str = include_str!("../data/cubic_xy_polynomials.json");
/// Leading words of the Gröbner basis of `(xy − z², zx − y², yz − x²)`.
pub const SKLYANIN_LEADING: &str = include_str!("../data/sklyanin_leading.json");
/// The reduced Gröbner basis itself (deg-lex, z > y > x).
pub const SKLYANIN_GB: &str = include_str!("../data/sklyanin_gb.json");
/// `k<x>/(x²)`.
pub const DUAL_NUMBERS: &str = include_str!("../data/dual_numbers.json");
/// `k<x,y>/(xy)`.
pub const XY: &str = include_str!("../data/xy.json");

/// Every monomial fixture, by short name.
pub const ALL: &[(&str, &str)] = &[
    ("abc_cdab", ABC_CDAB),
    ("abc_cdab_bcda", ABC_CDAB_BCDA),
    ("pq_circuits", PQ_CIRCUITS),
    ("cubic_xy", CUBIC_XY),
    ("sklyanin_leading", SKLYANIN_LEADING),
    ("dual_numbers", DUAL_NUMBERS),
    ("xy", XY),
];
