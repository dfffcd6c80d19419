#include <catch2/catch_amalgamated.hpp>

#include "sfc/exceptional.hpp"
#include "sfc/fourier.hpp"

using namespace sfc;
using namespace sfc::exc;

TEST_CASE("table counts per type") {
  CHECK(records_of("E8").size() == 45);
  CHECK(records_of("E7").size() == 35);
  CHECK(records_of("E6").size() == 17);
  CHECK(records_of("F4").size() == 11);
  CHECK(records_of("G2").size() == 3);
  CHECK_THROWS_AS(records_of("B17"), error);
}

TEST_CASE("spot records match the source tables") {
  SECTION("E8 2A_4") {
    auto r = lookup("E8", "2A_4");
    CHECK(r.a_tag == "S5");
    CHECK(r.abar_tag == "S5");
    REQUIRE(r.members.size() == 6);
    for (auto& m : r.members) CHECK(m.in_family);
    CHECK(r.members.front().label == "4480");
    CHECK(r.members.front().b == 16);
    CHECK(r.members.back().label == "70");
    CHECK(r.members.back().b == 32);
  }
  SECTION("E8 D_8(a_3)") {
    auto r = lookup("E8", "D_8(a_3)");
    CHECK(r.a_tag == "S3");
    CHECK(r.abar_tag == "S2");
    REQUIRE(r.members.size() == 3);
    CHECK(r.members[0].label == "2240");
    CHECK(r.members[1].label == "175");
    CHECK(!r.members[1].in_family);
    CHECK(r.members[2].label == "840");
    CHECK(r.members[2].in_family);
  }
  SECTION("E7 A_3A_2") {
    auto r = lookup("E7", "A_3A_2");
    CHECK(r.abar_tag == "1");
    REQUIRE(r.members.size() == 2);
    CHECK(r.members[0].label == "378");
    CHECK(r.members[0].b == 14);
    CHECK(!r.members[1].in_family);
    CHECK(r.members[1].b == 15);
  }
  SECTION("F4 A_2") {
    auto r = lookup("F4", "A_2");
    CHECK(r.a_tag == "S2");
    CHECK(r.abar_tag == "1");
    CHECK(r.members[0].label == "8");
    CHECK(!r.members[1].in_family);
  }
  SECTION("F4 F_4(a_3)") {
    auto r = lookup("F4", "F_4(a_3)");
    CHECK(r.a_tag == "S4");
    CHECK(r.abar_tag == "S4");
    CHECK(r.members.size() == 4);
  }
  SECTION("G2 G_2(a_1)") {
    auto r = lookup("G2", "G_2(a_1)");
    CHECK(r.a_tag == "S3");
    CHECK(r.abar_tag == "S3");
    REQUIRE(r.members.size() == 2);
    CHECK(r.members[0].label == "refl");
    CHECK(r.members[1].label == "eps_long");
  }
  CHECK_THROWS_AS(lookup("E8", "Z_9"), error);
}

TEST_CASE("round trip: serialize then parse is the identity") {
  for (auto& r : all_records()) {
    auto back = parse_record(r.serialize());
    CHECK(back.serialize() == r.serialize());
    CHECK(back.group_type == r.group_type);
    CHECK(back.class_name == r.class_name);
    CHECK(back.members.size() == r.members.size());
  }
}

TEST_CASE("consistency checks pass for every type") {
  for (auto type : {"E8", "E7", "E6", "F4", "G2"}) {
    auto rep = consistency(type);
    for (auto& it : rep.items) {
      CAPTURE(type, it.class_name);
      CHECK(it.first_member_unbracketed);
      CHECK(it.first_b_minimal);
      CHECK(it.abar_divides_a);
      CHECK(it.family_fits_quotient);
      CHECK(it.brackets_iff_proper_quotient);
      CHECK(it.abar_is_symmetric);
    }
    CHECK(rep.ok());
  }
  CHECK(consistency("E8").scanned == 45);
  CHECK(consistency("F4").scanned == 11);
}

TEST_CASE("attach_irreps follows the ordering convention") {
  SECTION("E8 E_7(a_2)A_1: 1, r, eps for S3") {
    auto at = attach_irreps(lookup("E8", "E_7(a_2)A_1"));
    REQUIRE(at.size() == 3);
    CHECK(at[0].member.label == "1400");
    CHECK(at[0].irrep == "1");
    CHECK(at[1].member.label == "1008");
    CHECK(at[1].irrep == "r");
    CHECK(at[2].member.label == "56");
    CHECK(at[2].irrep == "eps");
  }
  SECTION("F4 F_4(a_3): 1, lambda1, lambda2, sigma for S4") {
    auto at = attach_irreps(lookup("F4", "F_4(a_3)"));
    REQUIRE(at.size() == 4);
    CHECK(at[0].member.label == "12");
    CHECK(at[1].member.label == "9");
    CHECK(at[1].irrep == "lambda1");
    CHECK(at[2].member.label == "6");
    CHECK(at[2].irrep == "lambda2");
    CHECK(at[3].member.label == "1");
    CHECK(at[3].irrep == "sigma");
  }
  SECTION("E8 2A_4: the full S5 prefix") {
    auto at = attach_irreps(lookup("E8", "2A_4"));
    REQUIRE(at.size() == 6);
    CHECK(at[1].irrep == "nu");
    CHECK(at[2].irrep == "lambda1");
    CHECK(at[3].irrep == "nuprime");
    CHECK(at[5].irrep == "lambda3");
  }
  SECTION("G2 G_2(a_1): the two-element order for S3") {
    auto at = attach_irreps(lookup("G2", "G_2(a_1)"));
    REQUIRE(at.size() == 2);
    CHECK(at[0].irrep == "1");
    CHECK(at[1].irrep == "r");
  }
  SECTION("trivial quotient pairs the single member with 1") {
    auto at = attach_irreps(lookup("E7", "A_3A_2"));
    REQUIRE(at.size() == 1);
    CHECK(at[0].irrep == "1");
  }
}

TEST_CASE("quotient tags are consistent with the pairing catalog") {
  // |M(Abar)| as computed by the group machinery
  std::map<std::string, size_t> want{
      {"1", 1}, {"S2", 4}, {"S3", 8}, {"S4", 21}, {"S5", 39}};
  std::map<std::string, std::string> to_catalog{
      {"1", "trivial"}, {"S2", "S2"}, {"S3", "S3"}, {"S4", "S4"}, {"S5", "S5"}};
  std::set<std::string> tags;
  for (auto& r : all_records()) tags.insert(r.abar_tag);
  for (auto& tag : tags) {
    auto m = grp::m_set(grp::group_table(to_catalog.at(tag)));
    CHECK(m.pairs.size() == want.at(tag));
    // family members fit inside the (1, .) slice of M(Abar)
    CHECK((size_t)irr_count(tag) <= m.pairs.size());
  }
}
