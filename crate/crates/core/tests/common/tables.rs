// Appendix rows: (b, d, m, S, s, R). T is omitted.

pub type Row = (u32, u32, &'static [u64], u64, u64, f64);

pub const A1: &[Row] = &[
    (1, 1, &[2, 4], 8, 1, 1.0692e-05),
    (2, 1, &[5, 10], 50, 5, 2.95585e-05),
    (2, 2, &[3, 10], 30, 1, 2.54042e-05),
    (3, 1, &[9, 20], 180, 15, 6.19411e-05),
    (3, 2, &[7, 20], 140, 5, 6.05212e-05),
    (3, 3, &[4, 20], 80, 1, 4.34595e-05),
    (4, 1, &[14, 35], 490, 36, 0.000629956),
    (4, 2, &[12, 35], 420, 16, 0.000629356),
    (4, 3, &[9, 35], 315, 5, 0.000618127),
    (4, 4, &[5, 35], 175, 1, 0.000542113),
    (5, 1, &[20, 56], 1120, 74, 0.00928899),
    (5, 2, &[18, 56], 1008, 39, 0.009288843),
    (5, 3, &[15, 56], 840, 16, 0.009285097),
    (5, 4, &[11, 56], 616, 5, 0.009235384),
    (5, 5, &[6, 56], 336, 1, 0.008280393),
    (6, 1, &[20, 62], 1240, 108, 0.00087589),
    (6, 2, &[18, 62], 1116, 59, 0.000875874),
    (6, 3, &[15, 62], 930, 24, 0.000875377),
    (6, 4, &[11, 62], 682, 7, 0.000858893),
    (6, 5, &[6, 62], 372, 1, 0.000496823),
    (7, 1, &[20, 69], 1380, 128, 3.78339e-05),
    (7, 2, &[18, 69], 1242, 70, 3.78313e-05),
    (7, 3, &[15, 69], 1035, 27, 3.76247e-05),
    (7, 4, &[11, 69], 759, 7, 2.99841e-05),
    (7, 5, &[6, 69], 414, 1, 1.73888e-05),
];

pub const A2: &[Row] = &[
    (1, 1, &[2, 4], 8, 1, 9.70299e-03),
    (2, 1, &[5, 10], 50, 5, 9.80482e-03),
    (2, 2, &[3, 10], 30, 1, 9.41480e-03),
    (3, 1, &[9, 20], 180, 15, 9.71735e-03),
    (3, 2, &[7, 20], 140, 5, 9.70563e-03),
    (3, 3, &[4, 20], 80, 1, 9.13517e-03),
    (4, 1, &[14, 35], 490, 36, 9.62867e-03),
    (4, 2, &[12, 35], 420, 16, 9.62835e-03),
    (4, 3, &[9, 35], 315, 5, 9.60548e-03),
    (4, 4, &[5, 35], 175, 1, 8.86385e-03),
    (5, 1, &[20, 56], 1120, 74, 9.54242e-03),
    (5, 2, &[18, 56], 1008, 39, 9.54241e-03),
    (5, 3, &[15, 56], 840, 16, 9.54165e-03),
    (5, 4, &[11, 56], 616, 5, 9.50448e-03),
    (5, 5, &[6, 56], 336, 1, 8.60059e-03),
    (6, 1, &[27, 84], 2268, 138, 9.45858e-03),
    (6, 2, &[25, 84], 2100, 82, 9.45858e-03),
    (6, 3, &[22, 84], 1848, 40, 9.45856e-03),
    (6, 4, &[18, 84], 1512, 16, 9.45707e-03),
    (6, 5, &[13, 84], 1092, 5, 9.40270e-03),
    (6, 6, &[7, 84], 588, 1, 8.34514e-03),
    (7, 1, &[35, 120], 4200, 238, 9.37705e-03),
    (7, 2, &[33, 120], 3960, 154, 9.37705e-03),
    (7, 3, &[30, 120], 3600, 85, 9.37705e-03),
    (7, 4, &[26, 120], 3120, 40, 9.37700e-03),
    (7, 5, &[21, 120], 2520, 16, 9.37447e-03),
    (7, 6, &[15, 120], 1800, 5, 9.30024e-03),
    (7, 7, &[8, 120], 960, 1, 8.09728e-03),
    (8, 1, &[44, 165], 7260, 388, 9.29773e-03),
    (8, 2, &[42, 165], 6930, 268, 9.29773e-03),
    (8, 3, &[39, 165], 6435, 162, 9.29773e-03),
    (8, 4, &[35, 165], 5775, 86, 9.29773e-03),
    (8, 5, &[30, 165], 4950, 40, 9.29763e-03),
    (8, 6, &[24, 165], 3960, 16, 9.29368e-03),
    (8, 7, &[17, 165], 2805, 5, 9.19717e-03),
    (8, 8, &[9, 165], 1485, 1, 7.85678e-03),
    (9, 1, &[54, 220], 11880, 603, 9.22052e-03),
    (9, 2, &[52, 220], 11440, 438, 9.22052e-03),
    (9, 3, &[49, 220], 10780, 284, 9.22052e-03),
    (9, 4, &[45, 220], 9900, 165, 9.22052e-03),
    (9, 5, &[40, 220], 8800, 86, 9.22052e-03),
    (9, 6, &[34, 220], 7480, 40, 9.22034e-03),
    (9, 7, &[27, 220], 5940, 16, 9.21458e-03),
    (9, 8, &[19, 220], 4180, 5, 9.09358e-03),
    (9, 9, &[10, 220], 2200, 1, 7.62343e-03),
];

pub const A3: &[Row] = &[
    (1, 1, &[4, 5], 20, 1, 9.50990e-05),
    (2, 1, &[14, 15], 210, 8, 9.79889e-05),
    (2, 2, &[10, 15], 150, 1, 9.04382e-05),
    (3, 1, &[34, 35], 1190, 36, 9.72801e-05),
    (3, 2, &[30, 35], 1050, 8, 9.68302e-05),
    (3, 3, &[20, 35], 700, 1, 8.60059e-05),
    (4, 1, &[69, 70], 4830, 123, 9.64683e-05),
    (4, 2, &[65, 70], 4550, 39, 9.64446e-05),
    (4, 3, &[55, 70], 3850, 8, 9.55836e-05),
    (4, 4, &[35, 70], 2450, 1, 8.17907e-05),
    (5, 1, &[125, 126], 15750, 346, 9.56899e-05),
    (5, 2, &[121, 126], 15246, 136, 9.56887e-05),
    (5, 3, &[111, 126], 13986, 39, 9.56319e-05),
    (5, 4, &[91, 126], 11466, 8, 9.42589e-05),
    (5, 5, &[56, 126], 7056, 1, 7.77822e-05),
    (6, 1, &[209, 210], 43890, 855, 9.49479e-05),
    (6, 2, &[205, 210], 43050, 393, 9.49479e-05),
    (6, 3, &[195, 210], 40950, 140, 9.49445e-05),
    (6, 4, &[175, 210], 36750, 39, 9.48357e-05),
    (6, 5, &[140, 210], 29400, 8, 9.28651e-05),
    (6, 6, &[84, 210], 17640, 1, 7.39701e-05),
    (7, 1, &[329, 330], 108570, 1905, 9.42403e-05),
    (7, 2, &[325, 330], 107250, 981, 9.42403e-05),
    (7, 3, &[315, 330], 103950, 410, 9.42401e-05),
    (7, 4, &[295, 330], 97350, 140, 9.42326e-05),
    (7, 5, &[260, 330], 85800, 39, 9.40503e-05),
    (7, 6, &[204, 330], 67320, 8, 9.14106e-05),
    (7, 7, &[120, 330], 39600, 1, 7.03448e-05),
    (8, 1, &[494, 495], 244530, 3926, 9.35649e-05),
    (8, 2, &[490, 495], 242550, 2210, 9.35649e-05),
    (8, 3, &[480, 495], 237600, 1041, 9.35649e-05),
    (8, 4, &[460, 495], 227700, 415, 9.35644e-05),
    (8, 5, &[425, 495], 210375, 140, 9.35500e-05),
    (8, 6, &[369, 495], 182655, 39, 9.32710e-05),
    (8, 7, &[285, 495], 141075, 8, 8.99033e-05),
    (8, 8, &[165, 495], 81675, 1, 6.68972e-05),
    (9, 1, &[714, 715], 510510, 7578, 9.29198e-05),
    (9, 2, &[710, 715], 507650, 4575, 9.29198e-05),
    (9, 3, &[700, 715], 500500, 2368, 9.29198e-05),
    (9, 4, &[680, 715], 486200, 1062, 9.29198e-05),
    (9, 5, &[645, 715], 461175, 415, 9.29188e-05),
    (9, 6, &[589, 715], 421135, 140, 9.28940e-05),
    (9, 7, &[505, 715], 361075, 39, 9.24935e-05),
    (9, 8, &[385, 715], 275275, 8, 8.83506e-05),
    (9, 9, &[220, 715], 157300, 1, 6.36186e-05),
];

pub const A4: &[Row] = &[
    (1, 1, &[6, 7], 42, 1, 9.32065e-07),
    (2, 1, &[27, 28], 756, 10, 9.78019e-07),
    (2, 2, &[21, 28], 588, 1, 8.68746e-07),
    (3, 1, &[83, 84], 6972, 59, 9.72155e-07),
    (3, 2, &[77, 84], 6468, 10, 9.62508e-07),
    (3, 3, &[56, 84], 4704, 1, 8.09728e-07),
    (4, 1, &[209, 210], 43890, 259, 9.63336e-07),
    (4, 2, &[203, 210], 42630, 62, 9.62579e-07),
    (4, 3, &[182, 210], 38220, 10, 9.44593e-07),
    (4, 4, &[126, 210], 26460, 1, 7.54720e-07),
    (5, 1, &[461, 462], 212982, 930, 9.54436e-07),
    (5, 2, &[455, 462], 210210, 278, 9.54380e-07),
    (5, 3, &[434, 462], 200508, 62, 9.52614e-07),
    (5, 4, &[378, 462], 174636, 10, 9.24674e-07),
    (5, 5, &[252, 462], 116424, 1, 7.03448e-07),
    (6, 1, &[923, 924], 852852, 2888, 9.45621e-07),
    (6, 2, &[917, 924], 847308, 1020, 9.45617e-07),
    (6, 3, &[896, 924], 827904, 282, 9.45461e-07),
    (6, 4, &[840, 924], 776160, 62, 9.42170e-07),
    (6, 5, &[714, 924], 659736, 10, 9.03104e-07),
    (6, 6, &[462, 924], 426888, 1, 6.55660e-07),
    (7, 1, &[1715, 1716], 2942940, 8005, 9.36901e-07),
    (7, 2, &[1709, 1716], 2932644, 3209, 9.36901e-07),
    (7, 3, &[1688, 1716], 2896608, 1045, 9.36888e-07),
    (7, 4, &[1632, 1716], 2800512, 282, 9.36549e-07),
    (7, 5, &[1506, 1716], 2584296, 62, 9.31179e-07),
    (7, 6, &[1254, 1716], 2151864, 10, 8.80201e-07),
    (7, 7, &[792, 1716], 1359072, 1, 6.11118e-07),
    (8, 1, &[3002, 3003], 9015006, 20273, 9.28273e-07),
    (8, 2, &[2996, 3003], 8996988, 8997, 9.28273e-07),
    (8, 3, &[2975, 3003], 8933925, 3325, 9.28272e-07),
    (8, 4, &[2919, 3003], 8765757, 1050, 9.28240e-07),
    (8, 5, &[2793, 3003], 8387379, 282, 9.27608e-07),
    (8, 6, &[2541, 3003], 7630623, 62, 9.19600e-07),
    (8, 7, &[2079, 3003], 6243237, 10, 8.56243e-07),
    (8, 8, &[1287, 3003], 3864861, 1, 5.69602e-07),
    (9, 1, &[5004, 5005], 25045020, 47638, 9.19737e-07),
    (9, 2, &[4998, 5005], 25014990, 22964, 9.19737e-07),
    (9, 3, &[4977, 5005], 24909885, 9404, 9.19737e-07),
    (9, 4, &[4921, 5005], 24629605, 3356, 9.19734e-07),
    (9, 5, &[4795, 5005], 23998975, 1050, 9.19667e-07),
    (9, 6, &[4543, 5005], 22737715, 282, 9.18606e-07),
    (9, 7, &[4081, 5005], 20425405, 62, 9.07409e-07),
    (9, 8, &[3289, 5005], 16461445, 10, 8.31481e-07),
    (9, 9, &[2002, 5005], 10020010, 1, 5.30906e-07),
];

pub const A5: &[Row] = &[
    (1, 1, &[6, 7, 4], 168, 1, 9.32065e-07),
    (2, 1, &[27, 28, 10], 7560, 17, 9.79463e-07),
    (2, 2, &[21, 28, 10], 5880, 1, 8.68746e-07),
    (3, 1, &[83, 84, 20], 139440, 127, 9.76136e-07),
    (3, 2, &[77, 84, 20], 129360, 19, 9.66306e-07),
    (3, 3, &[56, 84, 20], 94080, 1, 8.09728e-07),
    (4, 1, &[209, 210, 35], 1536150, 687, 9.70879e-07),
    (4, 2, &[203, 210, 35], 1492050, 172, 9.70105e-07),
    (4, 3, &[182, 210, 35], 1337700, 19, 9.51539e-07),
    (4, 4, &[126, 210, 35], 926100, 1, 7.54720e-07),
    (5, 1, &[461, 462, 56], 11926992, 2930, 9.66481e-07),
    (5, 2, &[455, 462, 56], 11771760, 967, 9.66424e-07),
    (5, 3, &[434, 462, 56], 11228448, 186, 9.64596e-07),
    (5, 4, &[378, 462, 56], 9779616, 19, 9.35373e-07),
    (5, 5, &[252, 462, 56], 6519744, 1, 7.03448e-07),
    (6, 1, &[923, 924, 84], 71639568, 10681, 9.63018e-07),
    (6, 2, &[917, 924, 84], 71173872, 4286, 9.63014e-07),
    (6, 3, &[896, 924, 84], 69543936, 1158, 9.62852e-07),
    (6, 4, &[840, 924, 84], 65197440, 189, 9.59399e-07),
    (6, 5, &[714, 924, 84], 55417824, 19, 9.18003e-07),
    (6, 6, &[462, 924, 84], 35858592, 1, 6.55660e-07),
    (7, 1, &[1715, 1716, 120], 353152800, 34258, 9.60415e-07),
    (7, 2, &[1709, 1716, 120], 351917280, 15789, 9.60415e-07),
    (7, 3, &[1688, 1716, 120], 347592960, 5324, 9.60401e-07),
    (7, 4, &[1632, 1716, 120], 336061440, 1229, 9.60045e-07),
    (7, 5, &[1506, 1716, 120], 310115520, 189, 9.54337e-07),
    (7, 6, &[1254, 1716, 120], 258223680, 19, 8.99607e-07),
    (7, 7, &[792, 1716, 120], 163088640, 1, 6.11118e-07),
    (8, 1, &[3002, 3003, 165], 1487475990, 99576, 9.58596e-07),
    (8, 2, &[2996, 3003, 165], 1484503020, 51109, 9.58596e-07),
    (8, 3, &[2975, 3003, 165], 1474097625, 20241, 9.58595e-07),
    (8, 4, &[2919, 3003, 165], 1446349905, 6003, 9.58561e-07),
    (8, 5, &[2793, 3003, 165], 1383917535, 1249, 9.57888e-07),
    (8, 6, &[2541, 3003, 165], 1259052795, 189, 9.49262e-07),
    (8, 7, &[2079, 3003, 165], 1030134105, 19, 8.80350e-07),
    (8, 8, &[1287, 3003, 165], 637702065, 1, 5.69602e-07),
    (9, 1, &[5004, 5005, 220], 5509904400, 266268, 9.57489e-07),
    (9, 2, &[4998, 5005, 220], 5503297800, 148680, 9.57489e-07),
    (9, 3, &[4977, 5005, 220], 5480174700, 66473, 9.57489e-07),
    (9, 4, &[4921, 5005, 220], 5418513100, 23526, 9.57486e-07),
    (9, 5, &[4795, 5005, 220], 5279774500, 6283, 9.57415e-07),
    (9, 6, &[4543, 5005, 220], 5002297300, 1253, 9.56271e-07),
    (9, 7, &[4081, 5005, 220], 4493589100, 189, 9.44048e-07),
    (9, 8, &[3289, 5005, 220], 3621517900, 19, 8.60379e-07),
    (9, 9, &[2002, 5005, 220], 2204402200, 1, 5.30906e-07),
];

/// (b, d, S5/S4, R5/R4)
pub const A6: &[(u32, u32, f64, f64)] = &[
    (1, 1, 4.0, 1.0000000000),
    (2, 1, 10.0, 1.00110748410),
    (2, 2, 10.0, 1.0000000000),
    (3, 1, 20.0, 1.00300764606),
    (3, 2, 20.0, 1.00289772893),
    (3, 3, 20.0, 1.0000000000),
    (4, 1, 35.0, 1.00568292988),
    (4, 2, 35.0, 1.00567485376),
    (4, 3, 35.0, 1.00535612843),
    (4, 4, 35.0, 1.0000000000),
    (5, 1, 56.0, 1.00908208696),
    (5, 2, 56.0, 1.00908160389),
    (5, 3, 56.0, 1.00905422068),
    (5, 4, 56.0, 1.00839226109),
    (5, 5, 56.0, 1.0000000000),
    (6, 1, 84.0, 1.01314628299),
    (6, 2, 84.0, 1.01314626085),
    (6, 3, 84.0, 1.01314435655),
    (6, 4, 84.0, 1.01307895283),
    (6, 5, 84.0, 1.01193147947),
    (6, 6, 84.0, 1.0000000000),
    (7, 1, 120.0, 1.01782001175),
    (7, 2, 120.0, 1.01782001131),
    (7, 3, 120.0, 1.01781990907),
    (7, 4, 120.0, 1.01781473200),
    (7, 5, 120.0, 1.01768702021),
    (7, 6, 120.0, 1.01591161160),
    (7, 7, 120.0, 1.0000000000),
    (8, 1, 165.0, 1.02305169045),
    (8, 2, 165.0, 1.02305169050),
    (8, 3, 165.0, 1.02305168762),
    (8, 4, 165.0, 1.02305137445),
    (8, 5, 165.0, 1.02304008533),
    (8, 6, 165.0, 1.02282148692),
    (8, 7, 165.0, 1.02028045694),
    (8, 8, 165.0, 1.0000000000),
    (9, 1, 220.0, 1.02879348546),
    (9, 2, 220.0, 1.02879348547),
    (9, 3, 220.0, 1.02879348569),
    (9, 4, 220.0, 1.02879347558),
    (9, 5, 220.0, 1.02879272538),
    (9, 6, 220.0, 1.02877149087),
    (9, 7, 220.0, 1.02843057376),
    (9, 8, 220.0, 1.02499386225),
    (9, 9, 220.0, 1.0000000000),
];
