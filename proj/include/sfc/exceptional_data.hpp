#pragma once

namespace sfc::exc {

// Special-class tables for the exceptional types.  One record per line:
//   type|class|member(b,flag),...|A|Abar
// flag 1 = member of the family, 0 = listed but outside the family
// (bracketed in the source tables).  Member labels are the usual dimension
// labels; the two G2 subregular members carry descriptive labels since the
// source gives none.
inline const char* kExceptionalTable = R"(E8|E_8|1(0,1)|1|1
E8|E_8(a_1)|8(1,1)|1|1
E8|E_8(a_2)|35(2,1)|1|1
E8|E_7A_1|112(3,1),28(8,1)|S2|S2
E8|D_8|210(4,1),160(7,1)|S2|S2
E8|E_7(a_1)A_1|560(5,1),50(8,0)|S2|1
E8|E_7(a_1)|567(6,1)|1|1
E8|D_8(a_1)|700(6,1),300(8,1)|S2|S2
E8|E_7(a_2)A_1|1400(7,1),1008(9,1),56(19,1)|S3|S3
E8|A_8|1400(8,1),1575(10,1),350(14,1)|S3|S3
E8|D_7(a_1)|3240(9,1),1050(10,0)|S2|1
E8|D_8(a_3)|2240(10,1),175(12,0),840(13,1)|S3|S2
E8|D_6A_1|2268(10,1),1296(13,1)|S2|S2
E8|E_6(a_1)A_1|4096(11,1),4096(12,1)|S2|S2
E8|E_6|525(12,1)|1|1
E8|D_7(a_2)|4200(12,1),3360(13,1)|S2|S2
E8|E_6(a_1)|2800(13,1),2100(16,1)|S2|S2
E8|D_5A_2|4536(13,1),840(14,0)|S2|1
E8|D_6(a_1)A_1|6075(14,1),700(16,0)|S2|1
E8|A_6A_1|2835(14,1)|1|1
E8|A_6|4200(15,1)|1|1
E8|D_6(a_1)|5600(15,1),2400(17,1)|S2|S2
E8|2A_4|4480(16,1),4536(18,1),5670(18,1),1400(20,1),1680(22,1),70(32,1)|S5|S5
E8|D_5|2100(20,1)|1|1
E8|(A_5A_1)''|5600(21,1),2400(23,1)|S2|S2
E8|D_4A_2|4200(15,1),168(24,0)|S2|1
E8|A_4A_2A_1|2835(22,1)|1|1
E8|A_4A_2|4536(23,1)|1|1
E8|D_5(a_1)|2800(25,1),2100(28,1)|S2|S2
E8|A_42A_1|4200(24,1),3360(25,1)|S2|S2
E8|D_4|525(36,1)|1|1
E8|A_4A_1|4096(26,1),4096(27,1)|S2|S2
E8|A_4|2268(30,1),1296(33,1)|S2|S2
E8|D_4(a_1)A_2|2240(28,1),840(31,1)|S2|S2
E8|A_3A_2|3240(31,1),972(32,0)|S2|1
E8|D_4(a_1)A_1|1400(32,1),1575(34,1),350(38,1)|S3|S3
E8|D_4(a_1)|1400(37,1),1008(39,1),56(49,1)|S3|S3
E8|2A_2|700(42,1),300(44,1)|S2|S2
E8|A_3|567(46,1)|1|1
E8|A_22A_1|560(47,1)|1|1
E8|A_2A_1|210(52,1),160(55,1)|S2|S2
E8|A_2|112(63,1),28(68,1)|S2|S2
E8|2A_1|35(74,1)|1|1
E8|A_1|8(91,1)|1|1
E8|1|1(120,1)|1|1
E7|E_7|1(0,1)|1|1
E7|E_7(a_1)|7(1,1)|1|1
E7|E_7(a_2)|27(2,1)|1|1
E7|D_6A_1|56(3,1),21(6,1)|S2|S2
E7|E_6|21(3,1)|1|1
E7|E_6(a_1)|120(4,1),105(5,1)|S2|S2
E7|D_6(a_1)A_1|189(5,1),15(7,0)|S2|1
E7|D_6(a_1)|210(6,1)|1|1
E7|A_6|105(6,1)|1|1
E7|D_5A_1|168(6,1)|1|1
E7|D_5|189(7,1)|1|1
E7|D_6(a_2)A_1|315(7,1),280(9,1),35(13,1)|S3|S3
E7|(A_5A_1)'|405(8,1),189(10,1)|S2|S2
E7|D_5(a_1)A_1|378(9,1)|1|1
E7|A_4A_2|210(10,1)|1|1
E7|D_5(a_1)|420(10,1),336(11,1)|S2|S2
E7|A_5''|105(12,1)|1|1
E7|A_4A_1|512(11,1),512(12,1)|S2|S2
E7|D_4|105(15,1)|1|1
E7|A_4|420(13,1),336(14,1)|S2|S2
E7|A_3A_2A_1|210(13,1)|1|1
E7|A_3A_2|378(14,1),84(15,0)|S2|1
E7|D_4(a_1)A_1|405(15,1),189(17,1)|S2|S2
E7|D_4(a_1)|315(16,1),280(18,1),35(22,1)|S3|S3
E7|(A_3A_1)''|189(20,1)|1|1
E7|2A_2|168(21,1)|1|1
E7|A_23A_1|105(21,1)|1|1
E7|A_3|210(21,1)|1|1
E7|A_22A_1|189(22,1)|1|1
E7|A_2A_1|120(25,1),105(26,1)|S2|S2
E7|3A_1''|21(36,1)|1|1
E7|A_2|56(30,1),21(33,1)|S2|S2
E7|2A_1|27(37,1)|1|1
E7|A_1|7(46,1)|1|1
E7|1|1(63,1)|1|1
E6|E_6|1(0,1)|1|1
E6|E_6(a_1)|6(1,1)|1|1
E6|D_5|20(2,1)|1|1
E6|A_5A_1|30(3,1),15(5,1)|S2|S2
E6|D_5(a_1)|64(4,1)|1|1
E6|A_4A_1|60(5,1)|1|1
E6|A_4|81(6,1)|1|1
E6|D_4|24(6,1)|1|1
E6|D_4(a_1)|80(7,1),90(8,1),20(10,1)|S3|S3
E6|2A_2|24(12,1)|1|1
E6|A_3|81(10,1)|1|1
E6|A_22A_1|60(11,1)|1|1
E6|A_2A_1|64(13,1)|1|1
E6|A_2|30(15,1),15(17,1)|S2|S2
E6|2A_1|20(20,1)|1|1
E6|A_1|6(25,1)|1|1
E6|1|1(36,1)|1|1
F4|F_4|1(1,1)|1|1
F4|F_4(a_1)|4(2,1),2(3,1)|S2|S2
F4|F_4(a_2)|9(1,1)|1|1
F4|B_3|8(1,1)|1|1
F4|C_3|8(3,1)|1|1
F4|F_4(a_3)|12(1,1),9(3,1),6(2,1),1(3,1)|S4|S4
F4|~A_2|8(2,1)|1|1
F4|A_2|8(4,1),1(2,0)|S2|1
F4|A_1~A_1|9(4,1)|1|1
F4|~A_1|4(5,1),2(2,1)|S2|S2
F4|1|1(4,1)|1|1
G2|G_2|1(0,1)|1|1
G2|G_2(a_1)|refl(1,1),eps_long(3,1)|S3|S3
G2|1|sgn(6,1)|1|1
)";

}  // namespace sfc::exc
