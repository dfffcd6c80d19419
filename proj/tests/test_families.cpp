#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "sfc/families.hpp"

using namespace sfc;

namespace {

struct Bundle {
  Sequence seq;
  IntervalStructure is;
  TSets ts;
  FrakSets fs;
  ComponentGroup cg;
  FamilySet fam;
  CanonicalIdent ci;
};

Bundle bundle_for(const std::vector<int>& parts, GroupKind kind) {
  auto jt = jordan_type(parts, kind);
  auto cs = class_sequence(jt, default_N(jt));
  REQUIRE(cs.special());
  Bundle b{*cs.seq,
           interval_structure(*cs.seq),
           {},
           enumerate_frak(*cs.seq),
           {},
           {},
           {}};
  b.ts = enumerate_T(b.seq, b.is);
  b.cg = component_group(b.seq, b.is);
  b.fam = family_set(b.seq, b.fs);
  b.ci = canonical_identification(b.fam);
  return b;
}

std::vector<std::vector<int>> valid_partitions(long long total, GroupKind k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rem, int maxp) -> void {
    if (rem == 0) {
      auto lam = cur;
      std::map<int, int> mult;
      for (int p : lam) mult[p]++;
      for (auto& [e, m] : mult) {
        if (k == GroupKind::Symplectic && e % 2 == 1 && m % 2 == 1) return;
        if (k == GroupKind::Orthogonal && e % 2 == 0 && m % 2 == 1) return;
      }
      out.push_back(lam);
      return;
    }
    for (int p = std::min(rem, maxp); p >= 1; --p) {
      cur.push_back(p);
      self(self, rem - p, p);
      cur.pop_back();
    }
  };
  rec(rec, (int)total, (int)total);
  return out;
}

}  // namespace

TEST_CASE("family set, Sp4 (2,2) worked example") {
  auto b = bundle_for({2, 2}, GroupKind::Symplectic);
  CHECK(b.fam.xf.size() == 4);
  REQUIRE(b.fam.members.size() == 3);
  // addresses: the empty class plus the classes of {0,1} and {1,2}
  auto& g = *b.fs.jvals;
  std::set<uint32_t> addr;
  for (auto& m : b.fam.members) addr.insert(m.address);
  std::set<uint32_t> want{0u, f2::canonical_class(g, g.mask_of({0, 1})),
                          f2::canonical_class(g, g.mask_of({1, 2}))};
  CHECK(addr == want);
  CHECK(b.fam.lagrangian.ok());
  CHECK(b.fam.dual_invertible);
  // zero member carries the pair of the sequence itself
  CHECK(b.fam.members[b.fam.zero_member_index].pair ==
        make_pair_sorted({0, 2}, {1}, false));
}

TEST_CASE("canonical identification, Sp4 (2,2)") {
  auto b = bundle_for({2, 2}, GroupKind::Symplectic);
  REQUIRE(b.ci.ok);
  CHECK(b.ci.bijective);
  CHECK(b.ci.entries.size() == 4);  // |M(Z/2)| = 4
  auto& g = *b.fs.jvals;
  uint32_t c01 = f2::canonical_class(g, g.mask_of({0, 1}));
  uint32_t c12 = f2::canonical_class(g, g.mask_of({1, 2}));
  for (auto& e : b.ci.entries) {
    if (e.x == 0) {
      CHECK(e.g_coords == 0);
      CHECK(e.chi_coords == 0);
    } else if (e.x == c12) {
      CHECK(e.g_coords == 0);   // (1, eps)
      CHECK(e.chi_coords != 0);
    } else if (e.x == c01) {
      CHECK(e.g_coords != 0);   // (g, 1)
      CHECK(e.chi_coords == 0);
    }
  }
}

TEST_CASE("m_set_abelian") {
  CHECK(m_set_abelian(0).size() == 1);
  CHECK(m_set_abelian(1).size() == 4);
  CHECK(m_pair_abelian(0, {0, 0}, {0, 0}) == Rat(1));
  // {(g,1),(1,eps)} = -1/2
  CHECK(m_pair_abelian(1, {1, 0}, {0, 1}) == Rat(-1, 2));
  CHECK(m_pair_abelian(1, {0, 0}, {0, 0}) == Rat(1, 2));
}

TEST_CASE("pairing coincidence and trivial slice, worked example") {
  auto b = bundle_for({2, 2}, GroupKind::Symplectic);
  auto pc = verify_pairing_coincidence(b.fam, b.ci);
  INFO(pc.witness);
  CHECK(pc.ok);
  CHECK(pc.pairs_checked == 16);
  // the displayed value: {[{0,1}],[{1,2}]} = -1/2
  auto& g = *b.fs.jvals;
  uint32_t c01 = f2::canonical_class(g, g.mask_of({0, 1}));
  uint32_t c12 = f2::canonical_class(g, g.mask_of({1, 2}));
  const CanonicalIdent::Entry *e01 = nullptr, *e12 = nullptr;
  for (auto& e : b.ci.entries) {
    if (e.x == c01) e01 = &e;
    if (e.x == c12) e12 = &e;
  }
  REQUIRE(e01);
  REQUIRE(e12);
  int ex = eval_character(b.fam, e01->chi_coords, e12->g_coords) ^
           eval_character(b.fam, e12->chi_coords, e01->g_coords);
  Rat val(1, 2);
  if (ex) val = -val;
  CHECK(val == Rat(-1, 2));

  auto ec = verify_trivial_slice(b.fam, b.ci, b.is, b.ts, b.cg, b.seq, b.fs);
  INFO(ec.witness);
  CHECK(ec.ok);
  CHECK(ec.t1_members == 2);
}

TEST_CASE("M = 0 family is a single point mapped to (1, trivial)") {
  auto b = bundle_for({6}, GroupKind::Symplectic);
  CHECK(b.fam.xf.size() == 1);
  CHECK(b.fam.members.size() == 1);
  auto pc = verify_pairing_coincidence(b.fam, b.ci);
  CHECK(pc.ok);
  auto ec = verify_trivial_slice(b.fam, b.ci, b.is, b.ts, b.cg, b.seq, b.fs);
  CHECK(ec.ok);
  CHECK(ec.trivial_g_members == 1);
}

TEST_CASE("family machinery on every special class at desk scale") {
  for (auto kind : {GroupKind::Symplectic, GroupKind::Orthogonal}) {
    long long hi = kind == GroupKind::Symplectic ? 12 : 13;
    for (long long total = kind == GroupKind::Symplectic ? 2 : 3; total <= hi;
         total += kind == GroupKind::Symplectic ? 2 : 1) {
      for (auto& lam : valid_partitions(total, kind)) {
        auto jt = jordan_type(lam, kind);
        auto cs = class_sequence(jt, default_N(jt));
        if (!cs.special()) continue;
        CAPTURE(lam, kind_name(kind));
        Bundle b{*cs.seq,         interval_structure(*cs.seq), {},
                 enumerate_frak(*cs.seq), {}, {}, {}};
        b.ts = enumerate_T(b.seq, b.is);
        b.cg = component_group(b.seq, b.is);
        b.fam = family_set(b.seq, b.fs);
        b.ci = canonical_identification(b.fam);

        CHECK(b.fam.lagrangian.ok());
        CHECK(b.fam.dual_invertible);
        long long half = 1ll << (b.seq.flavor == Flavor::C ? b.seq.M() : b.seq.mu() / 2);
        CHECK((long long)b.fam.xf.size() == half * half);
        REQUIRE(b.ci.ok);
        CHECK(b.ci.bijective);
        auto pc = verify_pairing_coincidence(b.fam, b.ci);
        INFO(pc.witness);
        CHECK(pc.ok);
        auto ec = verify_trivial_slice(b.fam, b.ci, b.is, b.ts, b.cg, b.seq, b.fs);
        INFO(ec.witness);
        CHECK(ec.ok);
        CHECK(ec.t1_members == half);
        // the orthogonal ambient is a proper subspace exactly when the
        // singleton-value set has even size
        CHECK(b.fam.xf_proper_subspace == (b.fs.jvals->size() % 2 == 0));
      }
    }
  }
}

TEST_CASE("family machinery on random sequences") {
  std::mt19937 rng(4711);
  int done = 0;
  while (done < 120) {
    int N = (int)(rng() % 9);
    Flavor fl = (rng() & 1) ? Flavor::C : Flavor::BD;
    if (fl == Flavor::C && N % 2) continue;
    std::vector<int> a(N + 1);
    bool ok = true;
    for (int i = 0; i <= N && ok; ++i) {
      int lo = i == 0 ? 0 : a[i - 1];
      if (i >= 2) lo = std::max(lo, a[i - 2] + 1);
      a[i] = lo + (int)(rng() % 2);
      if (a[i] > 8) ok = false;
    }
    if (!ok) continue;
    Sequence seq;
    try {
      seq = validate_sequence(a, fl);
    } catch (const error&) {
      continue;
    }
    ++done;
    CAPTURE(a, flavor_name(fl));
    auto fs = enumerate_frak(seq);
    auto fam = family_set(seq, fs);
    CHECK(fam.lagrangian.ok());
    auto ci = canonical_identification(fam);
    REQUIRE(ci.ok);
    CHECK(ci.bijective);
    auto pc = verify_pairing_coincidence(fam, ci);
    INFO(pc.witness);
    CHECK(pc.ok);
  }
}
