#include <catch2/catch_amalgamated.hpp>

#include "sfc/families.hpp"
#include "sfc/fourier.hpp"

using namespace sfc;
using namespace sfc::grp;

TEST_CASE("m_set sizes") {
  CHECK(m_set(group_table("trivial")).pairs.size() == 1);
  CHECK(m_set(group_table("S2")).pairs.size() == 4);
  CHECK(m_set(group_table("S3")).pairs.size() == 8);
  CHECK(m_set(group_table("S4")).pairs.size() == 21);
  CHECK(m_set(group_table("S5")).pairs.size() == 39);
  CHECK(m_set(group_table("Z2^2")).pairs.size() == 16);
}

TEST_CASE("pairing against the identity row") {
  // {(1,1),(y,t)} = dim t / |Z(y)|
  for (auto name : {"S3", "S4", "D8"}) {
    auto& g = group_table(name);
    auto m = m_set(g);
    MPair id{0, 0};
    REQUIRE(g.class_rep[0] == 0);
    REQUIRE(m.cents[0].model->irrep_names[0] == "1");
    for (auto& q : m.pairs) {
      Cyc want = Rat(1, (long long)m.cents[q.class_index].sub.elements.size()) *
                 m.cents[q.class_index].dim(q.irrep_index);
      CHECK(fourier_pairing(m, id, q) == want);
    }
  }
}

TEST_CASE("trivial group matrix is (1)") {
  auto m = m_set(group_table("trivial"));
  auto s = fourier_matrix(m);
  REQUIRE(s.size() == 1);
  CHECK(s[0][0] == Cyc(1));
}

TEST_CASE("abelian specialization agrees with the coordinate formula") {
  // on (Z/2)^k the general pairing must reduce to |G|^-1 (-1)^(chi(g')+chi'(g))
  for (int k = 1; k <= 3; ++k) {
    auto& g = group_table("Z2^" + std::to_string(k));
    auto m = m_set(g);
    REQUIRE((int)m.pairs.size() == 1 << (2 * k));
    // element bit-coordinates: decompose indices over the generators
    auto coords_of = [&](int e) {
      // elements of the iterated product are mixed-radix over C2 factors
      uint32_t c = 0;
      for (int i = k - 1; i >= 0; --i) {
        c |= (uint32_t)(e % 2) << i;
        e /= 2;
      }
      return c;
    };
    for (auto& p : m.pairs)
      for (auto& q : m.pairs) {
        // class index == element index for abelian groups built here
        uint32_t gp = coords_of(g.class_rep[p.class_index]);
        uint32_t gq = coords_of(g.class_rep[q.class_index]);
        // irrep index in a tensor table is also mixed-radix over the factors
        uint32_t cp = coords_of(p.irrep_index);
        uint32_t cq = coords_of(q.irrep_index);
        MPairAbelian a{gp, cp}, b{gq, cq};
        Rat want = m_pair_abelian(k, a, b);
        Cyc got = fourier_pairing(m, p, q);
        REQUIRE(got.is_rational());
        CHECK(got.rational_part() == want);
      }
  }
}

TEST_CASE("S2 matrix is the 4x4 involution") {
  auto m = m_set(group_table("S2"));
  auto s = fourier_matrix(m);
  REQUIRE(s.size() == 4);
  // rows indexed (1,1),(1,eps),(g,1),(g,eps)
  Rat h(1, 2);
  std::vector<std::vector<Rat>> want{
      {h, h, h, h}, {h, h, -h, -h}, {h, -h, h, -h}, {h, -h, -h, h}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      REQUIRE(s[i][j].is_rational());
      CHECK(s[i][j].rational_part() == want[i][j]);
    }
  auto fc = fourier_matrix_checks(s);
  CHECK(fc.square_is_identity);
  CHECK(fc.real_symmetric);
}

TEST_CASE("matrix properties for the catalog of interest") {
  for (auto name : {"trivial", "S2", "S3", "S4", "S5", "Z2^1", "Z2^2", "Z2^3", "D8"}) {
    INFO(name);
    auto m = m_set(group_table(name));
    auto s = fourier_matrix(m);
    auto fc = fourier_matrix_checks(s);
    CHECK(fc.unitary);
    CHECK(fc.hermitian);
    CHECK(fc.square_is_permutation);
    CHECK(fc.real_symmetric);
    CHECK(fc.square_is_identity);
  }
  // groups with irrational character values stay unitary and hermitian
  for (auto name : {"C3", "C4", "C5", "C6", "S2xS3"}) {
    INFO(name);
    auto m = m_set(group_table(name));
    auto s = fourier_matrix(m);
    auto fc = fourier_matrix_checks(s);
    CHECK(fc.unitary);
    CHECK(fc.hermitian);
    CHECK(fc.square_is_permutation);
  }
}

TEST_CASE("representative independence") {
  for (auto name : {"S3", "S4", "D8", "S2xS3"}) {
    auto& g = group_table(name);
    auto m = m_set(g);
    for (auto& p : m.pairs)
      for (auto& q : m.pairs) {
        Cyc base = fourier_pairing(m, p, q);
        // alternate representatives: every member of both classes
        for (int x : g.classes[p.class_index]) {
          Cyc alt = fourier_pairing_at(m, p, q, x, g.class_rep[q.class_index]);
          CHECK(alt == base);
        }
        for (int y : g.classes[q.class_index]) {
          Cyc alt = fourier_pairing_at(m, p, q, g.class_rep[p.class_index], y);
          CHECK(alt == base);
        }
      }
  }
}

TEST_CASE("S3 matrix is 8x8 real symmetric with square one") {
  auto m = m_set(group_table("S3"));
  auto s = fourier_matrix(m);
  REQUIRE(s.size() == 8);
  auto fc = fourier_matrix_checks(s);
  CHECK(fc.real_symmetric);
  CHECK(fc.square_is_identity);
}
