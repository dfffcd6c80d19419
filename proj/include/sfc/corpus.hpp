#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "sfc/sequence.hpp"
#include "sfc/springer.hpp"

namespace sfc {

inline void partitions_into(int n, std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rem, int maxp) -> void {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rem, maxp); p >= 1; --p) {
      cur.push_back(p);
      self(self, rem - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
}

// All valid Jordan types of the given total for the given kind.
inline std::vector<JordanType> class_corpus(long long total, GroupKind kind) {
  std::vector<std::vector<int>> all;
  partitions_into((int)total, all);
  std::vector<JordanType> out;
  for (auto& lam : all) {
    try {
      out.push_back(jordan_type(lam, kind));
    } catch (const error&) {
    }
  }
  return out;
}

// Special classes of Sp_{2n} for n <= rank, or of SO_m for m <= 2*rank+1,
// each paired with its sequence at the default padding.
struct SpecialClass {
  JordanType jt;
  Sequence seq;
};

inline std::vector<SpecialClass> special_corpus(GroupKind kind, int rank) {
  std::vector<SpecialClass> out;
  long long lo = kind == GroupKind::Symplectic ? 2 : 3;
  long long hi = kind == GroupKind::Symplectic ? 2ll * rank : 2ll * rank + 1;
  long long step = kind == GroupKind::Symplectic ? 2 : 1;
  for (long long total = lo; total <= hi; total += step) {
    for (auto& jt : class_corpus(total, kind)) {
      auto cs = class_sequence(jt, default_N(jt));
      if (cs.special()) out.push_back({jt, *cs.seq});
    }
  }
  return out;
}

// Seeded random valid sequences: deterministic across platforms because
// mt19937 is pinned by the standard.
inline std::vector<Sequence> random_corpus(Flavor fl, int count, unsigned seed, int maxN,
                                           int cap) {
  std::mt19937 rng(seed);
  std::vector<Sequence> out;
  while ((int)out.size() < count) {
    int N = (int)(rng() % (maxN + 1));
    if (fl == Flavor::C && N % 2) continue;
    std::vector<int> a(N + 1);
    bool ok = true;
    for (int i = 0; i <= N && ok; ++i) {
      int lo = i == 0 ? 0 : a[i - 1];
      if (i >= 2) lo = std::max(lo, a[i - 2] + 1);
      if (lo > cap) { ok = false; break; }
      a[i] = std::min(cap, lo + (int)(rng() % 3));
      if (i >= 2 && a[i] <= a[i - 2]) ok = false;
    }
    if (!ok) continue;
    try {
      out.push_back(validate_sequence(a, fl));
    } catch (const error&) {
    }
  }
  return out;
}

}  // namespace sfc
