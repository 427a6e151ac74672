/// Binary enumeration, m = 3, 1-based rows.
pub const TABLE_2: &[[u8; 3]] = &[[0, 0, 0], [0, 0, 1], [0, 1, 0], [0, 1, 1], [1, 0, 0], [1, 0, 1], [1, 1, 0], [1, 1, 1]];

/// Multi-state enumeration, caps (2, 2, 2), 1-based rows.
pub const TABLE_3: &[[u32; 3]] = &[
    [0, 0, 0],
    [0, 0, 1],
    [0, 0, 2],
    [0, 1, 0],
    [0, 1, 1],
    [0, 1, 2],
    [0, 2, 0],
    [0, 2, 1],
    [0, 2, 2],
    [1, 0, 0],
    [1, 0, 1],
    [1, 0, 2],
    [1, 1, 0],
    [1, 1, 1],
    [1, 1, 2],
    [1, 2, 0],
    [1, 2, 1],
    [1, 2, 2],
    [2, 0, 0],
    [2, 0, 1],
    [2, 0, 2],
    [2, 1, 0],
    [2, 1, 1],
    [2, 1, 2],
    [2, 2, 0],
    [2, 2, 1],
    [2, 2, 2],
];

/// Perfect line of test1 at b = 5, d = 3.
pub const TABLE_5: &[[u32; 2]] = &[[5, 5], [5, 4], [5, 3], [5, 2], [5, 1], [5, 0], [4, 4], [4, 3], [4, 2], [4, 1], [4, 0], [3, 3], [3, 2], [3, 1], [3, 0]];

/// Rework line of test1 at b = 5.
pub const TABLE_6: &[[u32; 3]] = &[
    [5, 5, 5],
    [5, 5, 4],
    [5, 5, 3],
    [5, 5, 2],
    [5, 5, 1],
    [5, 5, 0],
    [5, 4, 4],
    [5, 4, 3],
    [5, 4, 2],
    [5, 4, 1],
    [5, 4, 0],
    [5, 3, 3],
    [5, 3, 2],
    [5, 3, 1],
    [5, 3, 0],
    [5, 2, 2],
    [5, 2, 1],
    [5, 2, 0],
    [5, 1, 1],
    [5, 1, 0],
    [5, 0, 0],
    [4, 4, 4],
    [4, 4, 3],
    [4, 4, 2],
    [4, 4, 1],
    [4, 4, 0],
    [4, 3, 3],
    [4, 3, 2],
    [4, 3, 1],
    [4, 3, 0],
    [4, 2, 2],
    [4, 2, 1],
    [4, 2, 0],
    [4, 1, 1],
    [4, 1, 0],
    [4, 0, 0],
    [3, 3, 3],
    [3, 3, 2],
    [3, 3, 1],
    [3, 3, 0],
    [3, 2, 2],
    [3, 2, 1],
    [3, 2, 0],
    [3, 1, 1],
    [3, 1, 0],
    [3, 0, 0],
    [2, 2, 2],
    [2, 2, 1],
    [2, 2, 0],
    [2, 1, 1],
    [2, 1, 0],
    [2, 0, 0],
    [1, 1, 1],
    [1, 1, 0],
    [1, 0, 0],
    [0, 0, 0],
];

/// test1 at b = 5, d = 3: (i, Z, X, Pr).
pub const TABLE_7: &[(u64, [usize; 2], [u32; 5], f64)] = &[
    (55, [0, 55], [5, 5, 0, 0, 0], 0.00828039319235627200),
    (110, [1, 54], [5, 4, 1, 0, 0], 0.00028751379294180514),
    (111, [1, 55], [5, 4, 0, 0, 0], 0.00044724358503033483),
    (163, [2, 51], [5, 3, 2, 0, 0], 0.00000399324907460150),
    (166, [2, 54], [5, 3, 1, 0, 0], 0.00000621171949272477),
    (167, [2, 55], [5, 3, 0, 0, 0], 0.00002129731899183067),
    (391, [6, 55], [4, 4, 0, 0, 0], 0.00002710563823667484),
    (444, [7, 52], [4, 3, 1, 1, 1], 0.00019312771114752183),
    (445, [7, 53], [4, 3, 1, 1, 0], 0.00000715287900611796),
    (446, [7, 54], [4, 3, 1, 0, 0], 0.00000075293476321669),
    (447, [7, 55], [4, 3, 0, 0, 0], 0.00000258149001271632),
    (497, [8, 49], [4, 2, 2, 1, 1], 0.00000402349594742319),
    (500, [8, 52], [4, 2, 1, 1, 1], 0.00000312938508700485),
    (671, [11, 55], [3, 3, 0, 0, 0], 0.00000004345937559720),
    (724, [12, 52], [3, 2, 1, 1, 1], 0.00000018965946725842),
    (774, [13, 46], [3, 1, 2, 2, 2], 0.00000033783099377012),
];
pub const TABLE_7_SUM: f64 = 0.00928509734192486950;
