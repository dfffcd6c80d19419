#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "sfc/groups.hpp"

using namespace sfc;
using namespace sfc::grp;

TEST_CASE("catalog construction and class data") {
  auto& s3 = group_table("S3");
  CHECK(s3.n == 6);
  REQUIRE(s3.classes.size() == 3);
  std::multiset<size_t> sizes;
  for (auto& c : s3.classes) sizes.insert(c.size());
  CHECK(sizes == std::multiset<size_t>{1, 2, 3});
  // centralizer orders |G|/|class|: 6, 2, 3
  for (int c = 0; c < 3; ++c) {
    auto z = centralizer(s3, s3.class_rep[c]);
    CHECK(z.elements.size() * s3.classes[c].size() == 6);
  }

  auto& s4 = group_table("S4");
  CHECK(s4.n == 24);
  CHECK(s4.classes.size() == 5);

  auto& s5 = group_table("S5");
  CHECK(s5.n == 120);
  CHECK(s5.classes.size() == 7);

  auto& v4 = group_table("Z2^2");
  CHECK(v4.n == 4);
  CHECK(v4.classes.size() == 4);  // abelian: singletons
  CHECK(v4.abelian);

  auto& d8 = group_table("D8");
  CHECK(d8.n == 8);
  CHECK(d8.classes.size() == 5);
  CHECK(!d8.abelian);

  CHECK_THROWS_AS(group_table("A5"), error);
}

TEST_CASE("class equation sums to the group order") {
  for (auto& [name, g] : catalog()) {
    size_t total = 0;
    for (auto& c : g->classes) total += c.size();
    CHECK(total == (size_t)g->n);
    // centralizer order x class size = |G|
    for (int c = 0; c < (int)g->classes.size(); ++c) {
      auto z = centralizer(*g, g->class_rep[c]);
      CHECK(z.elements.size() * g->classes[c].size() == (size_t)g->n);
    }
  }
}

TEST_CASE("exact orthogonality of every catalog table") {
  for (auto& [name, g] : catalog()) {
    INFO(name);
    CHECK(g->irrep_count() == (int)g->classes.size());
    auto rep = check_orthogonality(*g);
    CHECK(rep.rows_ok);
    CHECK(rep.cols_ok);
  }
}

TEST_CASE("centralizer recognition inside S4 and S5") {
  auto& s5 = group_table("S5");
  std::multiset<std::string> models;
  for (int c = 0; c < (int)s5.classes.size(); ++c)
    models.insert(centralizer_char(s5, s5.class_rep[c]).model_name);
  // e, transposition, double transposition, 3-cycle, 3+2, 4-cycle, 5-cycle
  CHECK(models == std::multiset<std::string>{"S5", "S2xS3", "D8", "C6", "C6", "C4", "C5"});

  auto& s4 = group_table("S4");
  std::multiset<std::string> m4;
  for (int c = 0; c < (int)s4.classes.size(); ++c)
    m4.insert(centralizer_char(s4, s4.class_rep[c]).model_name);
  CHECK(m4 == std::multiset<std::string>{"S4", "Z2^2", "D8", "C3", "C4"});
}

TEST_CASE("centralizer characters restrict correctly") {
  // inside S5, the centralizer of a 4-cycle is cyclic of order 4; its
  // character values at the 4-cycle must be the fourth roots of unity
  auto& s5 = group_table("S5");
  for (int c = 0; c < (int)s5.classes.size(); ++c) {
    int rep = s5.class_rep[c];
    if (s5.order_of[rep] != 4) continue;
    auto cc = centralizer_char(s5, rep);
    REQUIRE(cc.model_name == "C4");
    std::multiset<std::string> vals;
    for (int r = 0; r < cc.irrep_count(); ++r) vals.insert(cc.eval(r, rep).str());
    std::multiset<std::string> want{Cyc::root(4, 0).str(), Cyc::root(4, 1).str(),
                                    Cyc::root(4, 2).str(), Cyc::root(4, 3).str()};
    CHECK(vals == want);
  }
}

TEST_CASE("find_iso sanity: D8 recognized inside S4") {
  auto& s4 = group_table("S4");
  // centralizer of a double transposition is dihedral of order 8
  for (int c = 0; c < (int)s4.classes.size(); ++c) {
    int rep = s4.class_rep[c];
    if (s4.order_of[rep] == 2 && s4.classes[c].size() == 3) {
      auto cc = centralizer_char(s4, rep);
      CHECK(cc.model_name == "D8");
      // the mapping is a homomorphism
      auto& sub = cc.sub;
      for (size_t i = 0; i < sub.elements.size(); ++i)
        for (size_t j = 0; j < sub.elements.size(); ++j) {
          int prod = sub.mul[i][j];
          int mapped = cc.model->mul[cc.to_model[i]][cc.to_model[j]];
          CHECK(cc.to_model[prod] == mapped);
        }
    }
  }
}
