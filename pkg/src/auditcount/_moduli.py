"""One irreducible polynomial over GF(2) per degree w in [1, 256].

Lowest-degree-middle-term trinomial x^w + x^k + 1 when one exists, otherwise the
first pentanomial x^w + x^a + x^b + x^c + 1 in (a, b, c) order. Generated once and
re-verified by the test suite; certificates record the modulus they were made with.
"""

MODULI = {
    1: 0x3,  # x + 1
    2: 0x7,  # x^2 + x + 1
    3: 0xb,  # x^3 + x + 1
    4: 0x13,  # x^4 + x + 1
    5: 0x25,  # x^5 + x^2 + 1
    6: 0x43,  # x^6 + x + 1
    7: 0x83,  # x^7 + x + 1
    8: 0x11b,  # x^8 + x^4 + x^3 + x + 1
    9: 0x203,  # x^9 + x + 1
    10: 0x409,  # x^10 + x^3 + 1
    11: 0x805,  # x^11 + x^2 + 1
    12: 0x1009,  # x^12 + x^3 + 1
    13: 0x201b,  # x^13 + x^4 + x^3 + x + 1
    14: 0x4021,  # x^14 + x^5 + 1
    15: 0x8003,  # x^15 + x + 1
    16: 0x1002b,  # x^16 + x^5 + x^3 + x + 1
    17: 0x20009,  # x^17 + x^3 + 1
    18: 0x40009,  # x^18 + x^3 + 1
    19: 0x80027,  # x^19 + x^5 + x^2 + x + 1
    20: 0x100009,  # x^20 + x^3 + 1
    21: 0x200005,  # x^21 + x^2 + 1
    22: 0x400003,  # x^22 + x + 1
    23: 0x800021,  # x^23 + x^5 + 1
    24: 0x100001b,  # x^24 + x^4 + x^3 + x + 1
    25: 0x2000009,  # x^25 + x^3 + 1
    26: 0x400001b,  # x^26 + x^4 + x^3 + x + 1
    27: 0x8000027,  # x^27 + x^5 + x^2 + x + 1
    28: 0x10000003,  # x^28 + x + 1
    29: 0x20000005,  # x^29 + x^2 + 1
    30: 0x40000003,  # x^30 + x + 1
    31: 0x80000009,  # x^31 + x^3 + 1
    32: 0x10000008d,  # x^32 + x^7 + x^3 + x^2 + 1
    33: 0x200000401,  # x^33 + x^10 + 1
    34: 0x400000081,  # x^34 + x^7 + 1
    35: 0x800000005,  # x^35 + x^2 + 1
    36: 0x1000000201,  # x^36 + x^9 + 1
    37: 0x2000000053,  # x^37 + x^6 + x^4 + x + 1
    38: 0x4000000063,  # x^38 + x^6 + x^5 + x + 1
    39: 0x8000000011,  # x^39 + x^4 + 1
    40: 0x10000000039,  # x^40 + x^5 + x^4 + x^3 + 1
    41: 0x20000000009,  # x^41 + x^3 + 1
    42: 0x40000000081,  # x^42 + x^7 + 1
    43: 0x80000000059,  # x^43 + x^6 + x^4 + x^3 + 1
    44: 0x100000000021,  # x^44 + x^5 + 1
    45: 0x20000000001b,  # x^45 + x^4 + x^3 + x + 1
    46: 0x400000000003,  # x^46 + x + 1
    47: 0x800000000021,  # x^47 + x^5 + 1
    48: 0x100000000002d,  # x^48 + x^5 + x^3 + x^2 + 1
    49: 0x2000000000201,  # x^49 + x^9 + 1
    50: 0x400000000001d,  # x^50 + x^4 + x^3 + x^2 + 1
    51: 0x800000000004b,  # x^51 + x^6 + x^3 + x + 1
    52: 0x10000000000009,  # x^52 + x^3 + 1
    53: 0x20000000000047,  # x^53 + x^6 + x^2 + x + 1
    54: 0x40000000000201,  # x^54 + x^9 + 1
    55: 0x80000000000081,  # x^55 + x^7 + 1
    56: 0x100000000000095,  # x^56 + x^7 + x^4 + x^2 + 1
    57: 0x200000000000011,  # x^57 + x^4 + 1
    58: 0x400000000080001,  # x^58 + x^19 + 1
    59: 0x800000000000095,  # x^59 + x^7 + x^4 + x^2 + 1
    60: 0x1000000000000003,  # x^60 + x + 1
    61: 0x2000000000000027,  # x^61 + x^5 + x^2 + x + 1
    62: 0x4000000020000001,  # x^62 + x^29 + 1
    63: 0x8000000000000003,  # x^63 + x + 1
    64: 0x1000000000000001b,  # x^64 + x^4 + x^3 + x + 1
    65: 0x20000000000040001,  # x^65 + x^18 + 1
    66: 0x40000000000000009,  # x^66 + x^3 + 1
    67: 0x80000000000000027,  # x^67 + x^5 + x^2 + x + 1
    68: 0x100000000000000201,  # x^68 + x^9 + 1
    69: 0x200000000000000065,  # x^69 + x^6 + x^5 + x^2 + 1
    70: 0x40000000000000002b,  # x^70 + x^5 + x^3 + x + 1
    71: 0x800000000000000041,  # x^71 + x^6 + 1
    72: 0x1000000000000000609,  # x^72 + x^10 + x^9 + x^3 + 1
    73: 0x2000000000002000001,  # x^73 + x^25 + 1
    74: 0x4000000000800000001,  # x^74 + x^35 + 1
    75: 0x800000000000000004b,  # x^75 + x^6 + x^3 + x + 1
    76: 0x10000000000000200001,  # x^76 + x^21 + 1
    77: 0x20000000000000000065,  # x^77 + x^6 + x^5 + x^2 + 1
    78: 0x40000000000000000069,  # x^78 + x^6 + x^5 + x^3 + 1
    79: 0x80000000000000000201,  # x^79 + x^9 + 1
    80: 0x100000000000000000215,  # x^80 + x^9 + x^4 + x^2 + 1
    81: 0x200000000000000000011,  # x^81 + x^4 + 1
    82: 0x40000000000000000010b,  # x^82 + x^8 + x^3 + x + 1
    83: 0x800000000000000000095,  # x^83 + x^7 + x^4 + x^2 + 1
    84: 0x1000000000000000000021,  # x^84 + x^5 + 1
    85: 0x2000000000000000000107,  # x^85 + x^8 + x^2 + x + 1
    86: 0x4000000000000000200001,  # x^86 + x^21 + 1
    87: 0x8000000000000000002001,  # x^87 + x^13 + 1
    88: 0x100000000000000000000c5,  # x^88 + x^7 + x^6 + x^2 + 1
    89: 0x20000000000004000000001,  # x^89 + x^38 + 1
    90: 0x40000000000000008000001,  # x^90 + x^27 + 1
    91: 0x80000000000000000000123,  # x^91 + x^8 + x^5 + x + 1
    92: 0x100000000000000000200001,  # x^92 + x^21 + 1
    93: 0x200000000000000000000005,  # x^93 + x^2 + 1
    94: 0x400000000000000000200001,  # x^94 + x^21 + 1
    95: 0x800000000000000000000801,  # x^95 + x^11 + 1
    96: 0x1000000000000000000000641,  # x^96 + x^10 + x^9 + x^6 + 1
    97: 0x2000000000000000000000041,  # x^97 + x^6 + 1
    98: 0x4000000000000000000000801,  # x^98 + x^11 + 1
    99: 0x800000000000000000000004b,  # x^99 + x^6 + x^3 + x + 1
    100: 0x10000000000000000000008001,  # x^100 + x^15 + 1
    101: 0x200000000000000000000000c3,  # x^101 + x^7 + x^6 + x + 1
    102: 0x40000000000000000020000001,  # x^102 + x^29 + 1
    103: 0x80000000000000000000000201,  # x^103 + x^9 + 1
    104: 0x10000000000000000000000001b,  # x^104 + x^4 + x^3 + x + 1
    105: 0x200000000000000000000000011,  # x^105 + x^4 + 1
    106: 0x400000000000000000000008001,  # x^106 + x^15 + 1
    107: 0x800000000000000000000000291,  # x^107 + x^9 + x^7 + x^4 + 1
    108: 0x1000000000000000000000020001,  # x^108 + x^17 + 1
    109: 0x2000000000000000000000000035,  # x^109 + x^5 + x^4 + x^2 + 1
    110: 0x4000000000000000000200000001,  # x^110 + x^33 + 1
    111: 0x8000000000000000000000000401,  # x^111 + x^10 + 1
    112: 0x10000000000000000000000000039,  # x^112 + x^5 + x^4 + x^3 + 1
    113: 0x20000000000000000000000000201,  # x^113 + x^9 + 1
    114: 0x4000000000000000000000000002d,  # x^114 + x^5 + x^3 + x^2 + 1
    115: 0x800000000000000000000000001a1,  # x^115 + x^8 + x^7 + x^5 + 1
    116: 0x100000000000000000000000000017,  # x^116 + x^4 + x^2 + x + 1
    117: 0x200000000000000000000000000027,  # x^117 + x^5 + x^2 + x + 1
    118: 0x400000000000000000000200000001,  # x^118 + x^33 + 1
    119: 0x800000000000000000000000000101,  # x^119 + x^8 + 1
    120: 0x100000000000000000000000000001b,  # x^120 + x^4 + x^3 + x + 1
    121: 0x2000000000000000000000000040001,  # x^121 + x^18 + 1
    122: 0x4000000000000000000000000000047,  # x^122 + x^6 + x^2 + x + 1
    123: 0x8000000000000000000000000000005,  # x^123 + x^2 + 1
    124: 0x10000000000000000000000000080001,  # x^124 + x^19 + 1
    125: 0x200000000000000000000000000000e1,  # x^125 + x^7 + x^6 + x^5 + 1
    126: 0x40000000000000000000000000200001,  # x^126 + x^21 + 1
    127: 0x80000000000000000000000000000003,  # x^127 + x + 1
    128: 0x100000000000000000000000000000087,  # x^128 + x^7 + x^2 + x + 1
    129: 0x200000000000000000000000000000021,  # x^129 + x^5 + 1
    130: 0x400000000000000000000000000000009,  # x^130 + x^3 + 1
    131: 0x80000000000000000000000000000010d,  # x^131 + x^8 + x^3 + x^2 + 1
    132: 0x1000000000000000000000000000020001,  # x^132 + x^17 + 1
    133: 0x2000000000000000000000000000000305,  # x^133 + x^9 + x^8 + x^2 + 1
    134: 0x4000000000000000000200000000000001,  # x^134 + x^57 + 1
    135: 0x8000000000000000000000000000000801,  # x^135 + x^11 + 1
    136: 0x1000000000000000000000000000000002d,  # x^136 + x^5 + x^3 + x^2 + 1
    137: 0x20000000000000000000000000000200001,  # x^137 + x^21 + 1
    138: 0x40000000000000000000000000000000183,  # x^138 + x^8 + x^7 + x + 1
    139: 0x80000000000000000000000000000000129,  # x^139 + x^8 + x^5 + x^3 + 1
    140: 0x100000000000000000000000000000008001,  # x^140 + x^15 + 1
    141: 0x200000000000000000000000000000000413,  # x^141 + x^10 + x^4 + x + 1
    142: 0x400000000000000000000000000000200001,  # x^142 + x^21 + 1
    143: 0x80000000000000000000000000000000002d,  # x^143 + x^5 + x^3 + x^2 + 1
    144: 0x1000000000000000000000000000000000095,  # x^144 + x^7 + x^4 + x^2 + 1
    145: 0x2000000000000000000000010000000000001,  # x^145 + x^52 + 1
    146: 0x4000000000000000000800000000000000001,  # x^146 + x^71 + 1
    147: 0x8000000000000000000000000000000004001,  # x^147 + x^14 + 1
    148: 0x10000000000000000000000000000008000001,  # x^148 + x^27 + 1
    149: 0x20000000000000000000000000000000000681,  # x^149 + x^10 + x^9 + x^7 + 1
    150: 0x40000000000000000000000020000000000001,  # x^150 + x^53 + 1
    151: 0x80000000000000000000000000000000000009,  # x^151 + x^3 + 1
    152: 0x10000000000000000000000000000000000004d,  # x^152 + x^6 + x^3 + x^2 + 1
    153: 0x200000000000000000000000000000000000003,  # x^153 + x + 1
    154: 0x400000000000000000000000000000000008001,  # x^154 + x^15 + 1
    155: 0x800000000000000000000004000000000000001,  # x^155 + x^62 + 1
    156: 0x1000000000000000000000000000000000000201,  # x^156 + x^9 + 1
    157: 0x2000000000000000000000000000000000000065,  # x^157 + x^6 + x^5 + x^2 + 1
    158: 0x4000000000000000000000000000000000000161,  # x^158 + x^8 + x^6 + x^5 + 1
    159: 0x8000000000000000000000000000000080000001,  # x^159 + x^31 + 1
    160: 0x1000000000000000000000000000000000000002d,  # x^160 + x^5 + x^3 + x^2 + 1
    161: 0x20000000000000000000000000000000000040001,  # x^161 + x^18 + 1
    162: 0x40000000000000000000000000000000008000001,  # x^162 + x^27 + 1
    163: 0x800000000000000000000000000000000000000c9,  # x^163 + x^7 + x^6 + x^3 + 1
    164: 0x100000000000000000000000000000000000000581,  # x^164 + x^10 + x^8 + x^7 + 1
    165: 0x200000000000000000000000000000000000000309,  # x^165 + x^9 + x^8 + x^3 + 1
    166: 0x400000000000000000000000000000002000000001,  # x^166 + x^37 + 1
    167: 0x800000000000000000000000000000000000000041,  # x^167 + x^6 + 1
    168: 0x100000000000000000000000000000000000000800d,  # x^168 + x^15 + x^3 + x^2 + 1
    169: 0x2000000000000000000000000000000000400000001,  # x^169 + x^34 + 1
    170: 0x4000000000000000000000000000000000000000801,  # x^170 + x^11 + 1
    171: 0x8000000000000000000000000000000000000000065,  # x^171 + x^6 + x^5 + x^2 + 1
    172: 0x10000000000000000000000000000000000000000003,  # x^172 + x + 1
    173: 0x20000000000000000000000000000000000000000125,  # x^173 + x^8 + x^5 + x^2 + 1
    174: 0x40000000000000000000000000000000000000002001,  # x^174 + x^13 + 1
    175: 0x80000000000000000000000000000000000000000041,  # x^175 + x^6 + 1
    176: 0x10000000000000000000000000000000000000000080d,  # x^176 + x^11 + x^3 + x^2 + 1
    177: 0x200000000000000000000000000000000000000000101,  # x^177 + x^8 + 1
    178: 0x400000000000000000000000000000000000080000001,  # x^178 + x^31 + 1
    179: 0x800000000000000000000000000000000000000000017,  # x^179 + x^4 + x^2 + x + 1
    180: 0x1000000000000000000000000000000000000000000009,  # x^180 + x^3 + 1
    181: 0x20000000000000000000000000000000000000000000c3,  # x^181 + x^7 + x^6 + x + 1
    182: 0x4000000000000000000000000200000000000000000001,  # x^182 + x^81 + 1
    183: 0x8000000000000000000000000000000100000000000001,  # x^183 + x^56 + 1
    184: 0x10000000000000000000000000000000000000000000381,  # x^184 + x^9 + x^8 + x^7 + 1
    185: 0x20000000000000000000000000000000000000001000001,  # x^185 + x^24 + 1
    186: 0x40000000000000000000000000000000000000000000801,  # x^186 + x^11 + 1
    187: 0x800000000000000000000000000000000000000000000e1,  # x^187 + x^7 + x^6 + x^5 + 1
    188: 0x100000000000000000000000000000000000000000000065,  # x^188 + x^6 + x^5 + x^2 + 1
    189: 0x200000000000000000000000000000000000000000000065,  # x^189 + x^6 + x^5 + x^2 + 1
    190: 0x4000000000000000000000000000000000000000000001c1,  # x^190 + x^8 + x^7 + x^6 + 1
    191: 0x800000000000000000000000000000000000000000000201,  # x^191 + x^9 + 1
    192: 0x1000000000000000000000000000000000000000000000087,  # x^192 + x^7 + x^2 + x + 1
    193: 0x2000000000000000000000000000000000000000000008001,  # x^193 + x^15 + 1
    194: 0x4000000000000000000000000008000000000000000000001,  # x^194 + x^87 + 1
    195: 0x800000000000000000000000000000000000000000000010d,  # x^195 + x^8 + x^3 + x^2 + 1
    196: 0x10000000000000000000000000000000000000000000000009,  # x^196 + x^3 + 1
    197: 0x20000000000000000000000000000000000000000000000215,  # x^197 + x^9 + x^4 + x^2 + 1
    198: 0x40000000000000000000000000000000000000000000000201,  # x^198 + x^9 + 1
    199: 0x80000000000000000000000000000000000000000400000001,  # x^199 + x^34 + 1
    200: 0x10000000000000000000000000000000000000000000000002d,  # x^200 + x^5 + x^3 + x^2 + 1
    201: 0x200000000000000000000000000000000000000000000004001,  # x^201 + x^14 + 1
    202: 0x400000000000000000000000000000000000080000000000001,  # x^202 + x^55 + 1
    203: 0x800000000000000000000000000000000000000000000000183,  # x^203 + x^8 + x^7 + x + 1
    204: 0x1000000000000000000000000000000000000000000008000001,  # x^204 + x^27 + 1
    205: 0x2000000000000000000000000000000000000000000000000225,  # x^205 + x^9 + x^5 + x^2 + 1
    206: 0x4000000000000000000000000000000000000000000000000621,  # x^206 + x^10 + x^9 + x^5 + 1
    207: 0x8000000000000000000000000000000000000000080000000001,  # x^207 + x^43 + 1
    208: 0x1000000000000000000000000000000000000000000000000020b,  # x^208 + x^9 + x^3 + x + 1
    209: 0x20000000000000000000000000000000000000000000000000041,  # x^209 + x^6 + 1
    210: 0x40000000000000000000000000000000000000000000000000081,  # x^210 + x^7 + 1
    211: 0x80000000000000000000000000000000000000000000000000d01,  # x^211 + x^11 + x^10 + x^8 + 1
    212: 0x100000000000000000000000000200000000000000000000000001,  # x^212 + x^105 + 1
    213: 0x200000000000000000000000000000000000000000000000000065,  # x^213 + x^6 + x^5 + x^2 + 1
    214: 0x400000000000000000000000000000000002000000000000000001,  # x^214 + x^73 + 1
    215: 0x800000000000000000000000000000000000000000000000800001,  # x^215 + x^23 + 1
    216: 0x100000000000000000000000000000000000000000000000000008b,  # x^216 + x^7 + x^3 + x + 1
    217: 0x2000000000000000000000000000000000000000000200000000001,  # x^217 + x^45 + 1
    218: 0x4000000000000000000000000000000000000000000000000000801,  # x^218 + x^11 + 1
    219: 0x8000000000000000000000000000000000000000000000000000113,  # x^219 + x^8 + x^4 + x + 1
    220: 0x10000000000000000000000000000000000000000000000000000081,  # x^220 + x^7 + 1
    221: 0x20000000000000000000000000000000000000000000000000000145,  # x^221 + x^8 + x^6 + x^2 + 1
    222: 0x40000000000000000000000000000000000000000000000000000035,  # x^222 + x^5 + x^4 + x^2 + 1
    223: 0x80000000000000000000000000000000000000000000000200000001,  # x^223 + x^33 + 1
    224: 0x100000000000000000000000000000000000000000000000000000309,  # x^224 + x^9 + x^8 + x^3 + 1
    225: 0x200000000000000000000000000000000000000000000000100000001,  # x^225 + x^32 + 1
    226: 0x400000000000000000000000000000000000000000000000000000489,  # x^226 + x^10 + x^7 + x^3 + 1
    227: 0x800000000000000000000000000000000000000000000000000000611,  # x^227 + x^10 + x^9 + x^4 + 1
    228: 0x1000000000000000000000000000020000000000000000000000000001,  # x^228 + x^113 + 1
    229: 0x2000000000000000000000000000000000000000000000000000000413,  # x^229 + x^10 + x^4 + x + 1
    230: 0x40000000000000000000000000000000000000000000000000000001c1,  # x^230 + x^8 + x^7 + x^6 + 1
    231: 0x8000000000000000000000000000000000000000000000000004000001,  # x^231 + x^26 + 1
    232: 0x10000000000000000000000000000000000000000000000000000000215,  # x^232 + x^9 + x^4 + x^2 + 1
    233: 0x20000000000000000000000000000000000000004000000000000000001,  # x^233 + x^74 + 1
    234: 0x40000000000000000000000000000000000000000000000000080000001,  # x^234 + x^31 + 1
    235: 0x80000000000000000000000000000000000000000000000000000000243,  # x^235 + x^9 + x^6 + x + 1
    236: 0x100000000000000000000000000000000000000000000000000000000021,  # x^236 + x^5 + 1
    237: 0x200000000000000000000000000000000000000000000000000000000093,  # x^237 + x^7 + x^4 + x + 1
    238: 0x400000000000000000000000000000000000000002000000000000000001,  # x^238 + x^73 + 1
    239: 0x800000000000000000000000000000000000000000000000001000000001,  # x^239 + x^36 + 1
    240: 0x1000000000000000000000000000000000000000000000000000000000129,  # x^240 + x^8 + x^5 + x^3 + 1
    241: 0x2000000000000000000000000000000000000000000400000000000000001,  # x^241 + x^70 + 1
    242: 0x4000000000000000000000000000000000000800000000000000000000001,  # x^242 + x^95 + 1
    243: 0x8000000000000000000000000000000000000000000000000000000000123,  # x^243 + x^8 + x^5 + x + 1
    244: 0x10000000000000000000000000000000008000000000000000000000000001,  # x^244 + x^111 + 1
    245: 0x20000000000000000000000000000000000000000000000000000000000053,  # x^245 + x^6 + x^4 + x + 1
    246: 0x40000000000000000000000000000000000000000000000000000000000807,  # x^246 + x^11 + x^2 + x + 1
    247: 0x80000000000000000000000000000000000000000400000000000000000001,  # x^247 + x^82 + 1
    248: 0x10000000000000000000000000000000000000000000000000000000000c401,  # x^248 + x^15 + x^14 + x^10 + 1
    249: 0x200000000000000000000000000000000000000000000000000000800000001,  # x^249 + x^35 + 1
    250: 0x400000000000000000000000000000000000080000000000000000000000001,  # x^250 + x^103 + 1
    251: 0x800000000000000000000000000000000000000000000000000000000000095,  # x^251 + x^7 + x^4 + x^2 + 1
    252: 0x1000000000000000000000000000000000000000000000000000000000008001,  # x^252 + x^15 + 1
    253: 0x2000000000000000000000000000000000000000000000000000400000000001,  # x^253 + x^46 + 1
    254: 0x4000000000000000000000000000000000000000000000000000000000000087,  # x^254 + x^7 + x^2 + x + 1
    255: 0x8000000000000000000000000000000000000000000000000010000000000001,  # x^255 + x^52 + 1
    256: 0x10000000000000000000000000000000000000000000000000000000000000425,  # x^256 + x^10 + x^5 + x^2 + 1
}
