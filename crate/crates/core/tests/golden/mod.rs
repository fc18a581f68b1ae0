//! Reference counts: totals by order (Table 1) and coefficients by valency
//! (Table 2). Columns are indexed in the order d, u, o, sd, su, t.
#![allow(dead_code)]

/// Rows `(n, [C_d, C_u, C_o, C_sd, C_su, C_t])`.
pub const TABLE1: &[(u64, [u64; 6])] = &[
    (2, [2, 2, 1, 0, 0, 0]),
    (3, [3, 2, 2, 1, 0, 1]),
    (4, [6, 4, 2, 0, 0, 0]),
    (5, [6, 3, 3, 2, 1, 1]),
    (6, [20, 8, 5, 0, 0, 0]),
    (7, [14, 4, 6, 2, 0, 2]),
    (8, [46, 12, 7, 0, 0, 0]),
    (9, [51, 8, 16, 3, 0, 3]),
    (10, [140, 20, 21, 0, 0, 0]),
    (11, [108, 8, 26, 4, 0, 4]),
    (12, [624, 48, 64, 0, 0, 0]),
    (13, [352, 14, 63, 8, 2, 6]),
    (14, [1400, 48, 125, 0, 0, 0]),
    (15, [2172, 44, 276, 20, 0, 16]),
    (17, [4116, 36, 411, 20, 4, 16]),
    (18, [22040, 192, 1105, 0, 0, 0]),
    (19, [14602, 60, 1098, 30, 0, 30]),
    (20, [68016, 336, 2472, 0, 0, 0]),
    (21, [88376, 200, 4938, 88, 0, 88]),
    (22, [209936, 416, 5909, 0, 0, 0]),
    (23, [190746, 188, 8054, 94, 0, 94]),
    (25, [839094, 423, 26577, 214, 7, 205]),
    (26, [2797000, 1400, 44301, 0, 0, 0]),
    (28, [11276704, 3104, 132964, 0, 0, 0]),
    (29, [9587580, 1182, 170823, 596, 10, 586]),
    (30, [67195520, 8768, 597885, 0, 0, 0]),
    (31, [35792568, 2192, 478318, 1096, 0, 1096]),
    (33, [214863120, 6768, 2152366, 3280, 0, 3280]),
    (34, [536879180, 16460, 2690421, 0, 0, 0]),
    (35, [715901096, 11144, 5381028, 5560, 0, 5472]),
    (37, [1908881900, 14602, 10761723, 7316, 30, 7286]),
    (38, [7635527480, 58288, 21523445, 0, 0, 0]),
    (39, [11454711464, 44424, 48427776, 21944, 0, 21856]),
    (41, [27487816992, 52488, 87169619, 26272, 56, 26216]),
    (42, [183264019200, 355200, 290566525, 0, 0, 0]),
    (43, [104715443852, 99880, 249056138, 49940, 0, 49940]),
    (44, [440020029120, 432576, 523020664, 0, 0, 0]),
    (46, [1599290021720, 762608, 1426411805, 0, 0, 0]),
    (47, [1529755490574, 364724, 2046590846, 182362, 0, 182362]),
    (49, [6701785562464, 798952, 6724513104, 399472, 0, 399472]),
    (50, [28147499352824, 3356408, 14121476937, 0, 0, 0]),
];

/// `c_u(n, r)` for even `r`, as `(n, [(r, count)])`.
pub const TABLE2_U: &[(u64, &[(usize, u64)])] = &[
    (7, &[(0, 1), (2, 1), (4, 1), (6, 1)]),
    (
        13,
        &[(0, 1), (2, 1), (4, 3), (6, 4), (8, 3), (10, 1), (12, 1)],
    ),
    (
        14,
        &[(0, 1), (2, 2), (4, 5), (6, 8), (8, 5), (10, 2), (12, 1)],
    ),
    (
        19,
        &[
            (0, 1),
            (2, 1),
            (4, 4),
            (6, 10),
            (8, 14),
            (10, 14),
            (12, 10),
            (14, 4),
            (16, 1),
            (18, 1),
        ],
    ),
    (
        37,
        &[
            (0, 1),
            (2, 1),
            (4, 9),
            (6, 46),
            (8, 172),
            (10, 476),
            (12, 1038),
            (14, 1768),
            (16, 2438),
            (18, 2704),
            (20, 2438),
            (22, 1768),
            (24, 1038),
            (26, 476),
            (28, 172),
            (30, 46),
            (32, 9),
            (34, 1),
            (36, 1),
        ],
    ),
    (
        38,
        &[
            (0, 1),
            (2, 2),
            (4, 17),
            (6, 92),
            (8, 340),
            (10, 952),
            (12, 2066),
            (14, 3536),
            (16, 4862),
            (18, 5408),
            (20, 4862),
            (22, 3536),
            (24, 2066),
            (26, 952),
            (28, 340),
            (30, 92),
            (32, 17),
            (34, 2),
            (36, 1),
        ],
    ),
    (
        61,
        &[
            (0, 1),
            (2, 1),
            (4, 15),
            (6, 136),
            (8, 917),
            (10, 4751),
            (12, 19811),
            (14, 67860),
            (16, 195143),
            (18, 476913),
            (20, 1001603),
            (22, 1820910),
            (24, 2883289),
            (26, 3991995),
            (28, 4847637),
            (30, 5170604),
            (32, 4847637),
            (34, 3991995),
            (36, 2883289),
            (38, 1820910),
            (40, 1001603),
        ],
    ),
    (
        62,
        &[
            (0, 1),
            (2, 2),
            (4, 29),
            (6, 272),
            (8, 1827),
            (10, 9502),
            (12, 39591),
            (14, 135720),
            (16, 390195),
            (18, 953826),
            (20, 2003005),
            (22, 3641820),
            (24, 5766243),
            (26, 7983990),
            (28, 9694845),
            (30, 10341208),
            (32, 9694845),
            (34, 7983990),
            (36, 5766243),
            (38, 3641820),
            (40, 2003005),
        ],
    ),
    (
        73,
        &[
            (0, 1),
            (2, 1),
            (4, 18),
            (6, 199),
            (8, 1641),
            (10, 10472),
            (12, 54132),
            (14, 231880),
            (16, 840652),
            (18, 2615104),
            (20, 7060984),
            (22, 16689036),
            (24, 34769374),
            (26, 64188600),
            (28, 105453584),
            (30, 154664004),
            (32, 202997670),
            (34, 238819350),
            (36, 252088496),
            (38, 238819350),
            (40, 202997670),
        ],
    ),
    (
        74,
        &[
            (0, 1),
            (2, 2),
            (4, 36),
            (6, 398),
            (8, 3281),
            (10, 20944),
            (12, 108264),
            (14, 463760),
            (16, 1681300),
            (18, 5230208),
            (20, 14121968),
            (22, 33378072),
            (24, 69538738),
            (26, 128377200),
            (28, 210907168),
            (30, 309328008),
            (32, 405995326),
            (34, 477638700),
            (36, 504176992),
            (38, 477638700),
            (40, 405995326),
        ],
    ),
];

/// `c_d(n, r)`, as `(n, [(r, count)])`.
pub const TABLE2_D: &[(u64, &[(usize, u64)])] = &[
    (7, &[(0, 1), (1, 1), (2, 3), (3, 4), (4, 3), (5, 1), (6, 1)]),
    (
        13,
        &[
            (0, 1),
            (1, 1),
            (2, 6),
            (3, 19),
            (4, 43),
            (5, 66),
            (6, 80),
            (7, 66),
            (8, 43),
            (9, 19),
            (10, 6),
            (11, 1),
            (12, 1),
        ],
    ),
    (
        14,
        &[
            (0, 1),
            (1, 3),
            (2, 14),
            (3, 50),
            (4, 123),
            (5, 217),
            (6, 292),
            (7, 292),
            (8, 217),
            (9, 123),
            (10, 50),
            (11, 14),
            (12, 3),
            (13, 1),
        ],
    ),
    (
        19,
        &[
            (0, 1),
            (1, 1),
            (2, 9),
            (3, 46),
            (4, 172),
            (5, 476),
            (6, 1038),
            (7, 1768),
            (8, 2438),
            (9, 2704),
            (10, 2438),
            (11, 1768),
            (12, 1038),
            (13, 476),
            (14, 172),
            (15, 46),
            (16, 9),
            (17, 1),
            (18, 1),
        ],
    ),
    (
        31,
        &[
            (0, 1),
            (1, 1),
            (2, 15),
            (3, 136),
            (4, 917),
            (5, 4751),
            (6, 19811),
            (7, 67860),
            (8, 195143),
            (9, 476913),
            (10, 1001603),
            (11, 1820910),
            (12, 2883289),
            (13, 3991995),
            (14, 4847637),
            (15, 5170604),
            (16, 4847637),
            (17, 3991995),
            (18, 2883289),
            (19, 1820910),
            (20, 1001603),
        ],
    ),
    (
        37,
        &[
            (0, 1),
            (1, 1),
            (2, 18),
            (3, 199),
            (4, 1641),
            (5, 10472),
            (6, 54132),
            (7, 231880),
            (8, 840652),
            (9, 2615104),
            (10, 7060984),
            (11, 16689036),
            (12, 34769374),
            (13, 64188600),
            (14, 105453584),
            (15, 154664004),
            (16, 202997670),
            (17, 238819350),
            (18, 252088496),
            (19, 238819350),
            (20, 202997670),
        ],
    ),
    (
        38,
        &[
            (0, 1),
            (1, 3),
            (2, 38),
            (3, 434),
            (4, 3679),
            (5, 24225),
            (6, 129208),
            (7, 572024),
            (8, 2145060),
            (9, 6911508),
            (10, 19352176),
            (11, 47500040),
            (12, 102916810),
            (13, 197915938),
            (14, 339284368),
            (15, 520235176),
            (16, 715323334),
            (17, 883634026),
            (18, 981815692),
            (19, 981815692),
            (20, 883634026),
        ],
    ),
];

/// `c_o(n, r)`, as `(n, [(r, count)])`.
pub const TABLE2_O: &[(u64, &[(usize, u64)])] = &[
    (
        13,
        &[(0, 1), (1, 1), (2, 5), (3, 14), (4, 20), (5, 16), (6, 6)],
    ),
    (
        14,
        &[(0, 1), (1, 2), (2, 10), (3, 28), (4, 40), (5, 32), (6, 12)],
    ),
    (
        37,
        &[
            (0, 1),
            (1, 1),
            (2, 17),
            (3, 182),
            (4, 1360),
            (5, 7616),
            (6, 33006),
            (7, 113152),
            (8, 311168),
            (9, 691494),
            (10, 1244672),
            (11, 1810432),
            (12, 2112184),
            (13, 1949696),
            (14, 1392640),
            (15, 742752),
            (16, 278528),
            (17, 65536),
            (18, 7286),
        ],
    ),
    (
        38,
        &[
            (0, 1),
            (1, 2),
            (2, 34),
            (3, 364),
            (4, 2720),
            (5, 15232),
            (6, 66012),
            (7, 226304),
            (8, 622336),
            (9, 1382988),
            (10, 2489344),
            (11, 3620864),
            (12, 4224368),
            (13, 3899392),
            (14, 2785280),
            (15, 1485504),
            (16, 557056),
            (17, 131072),
            (18, 14572),
        ],
    ),
];

pub fn table1_row(n: u64) -> Option<[u64; 6]> {
    TABLE1.iter().find(|(m, _)| *m == n).map(|(_, row)| *row)
}

/// Column index of a class tag in a Table 1 row.
pub fn column(tag: &str) -> usize {
    ["d", "u", "o", "sd", "su", "t"]
        .iter()
        .position(|t| *t == tag)
        .unwrap_or_else(|| panic!("unknown class {tag}"))
}
