#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "sfc/rational.hpp"

namespace sfc {

// Two flavors of interlacing sequences drive the whole engine.
//   C : length N+1 with N even, used for symplectic groups; the shifted
//       companion adds ceil(i/2) to entry i.
//   BD: any N, nonempty singleton set required, used for orthogonal groups;
//       the shifted companion adds floor(i/2).
enum class Flavor { C, BD };

inline std::string flavor_name(Flavor f) { return f == Flavor::C ? "C" : "BD"; }

struct Sequence {
  Flavor flavor = Flavor::C;
  std::vector<int> a;        // weakly increasing, both parity chains strict
  std::vector<int> singles;  // positions whose value occurs exactly once

  int N() const { return (int)a.size() - 1; }
  // C flavor: singles.size() == 2M+1.
  int M() const { return ((int)singles.size() - 1) / 2; }
  // BD flavor: singles.size() == mu+1.
  int mu() const { return (int)singles.size() - 1; }
  int swap_count() const {
    return flavor == Flavor::C ? M() : ((int)admissible_swaps().size());
  }

  // Gap parameter: i_{s+1} = i_s + 2*m_s + 1.
  int gap(int s) const { return (singles[s + 1] - singles[s] - 1) / 2; }

  // Staircase shift: hat (C) or ring (BD).
  std::vector<int> shifted() const {
    std::vector<int> h(a.size());
    for (size_t i = 0; i < a.size(); ++i)
      h[i] = a[i] + (flavor == Flavor::C ? (int)((i + 1) / 2) : (int)(i / 2));
    return h;
  }

  // Values occurring exactly once, increasing.
  std::vector<int> singleton_values() const {
    std::vector<int> v;
    for (int i : singles) v.push_back(a[i]);
    return v;
  }

  // Indices s for which the pair (i_s, i_{s+1}) may be swapped:
  // odd s for flavor C, even s for flavor BD.
  std::vector<int> admissible_swaps() const {
    std::vector<int> out;
    int top = (int)singles.size() - 2;
    for (int s = (flavor == Flavor::C ? 1 : 0); s <= top; s += 2) out.push_back(s);
    return out;
  }

  // a^X: transpose adjacent pairs along [i_s, i_{s+1}] for each s in X.
  // The result is a member of the chain set E, not in general weakly
  // increasing, so it is returned as a raw entry vector.
  std::vector<int> swapped(const std::vector<int>& X) const {
    auto adm = admissible_swaps();
    std::vector<int> b = a;
    for (int s : X) {
      if (std::find(adm.begin(), adm.end(), s) == adm.end())
        throw error("swap: inadmissible index " + std::to_string(s));
      int lo = singles[s], hi = singles[s + 1];
      for (int i = lo; i < hi; i += 2) std::swap(b[i], b[i + 1]);
    }
    return b;
  }
};

inline Sequence validate_sequence(const std::vector<int>& entries, Flavor flavor) {
  if (entries.empty()) throw error("sequence: empty");
  int N = (int)entries.size() - 1;
  if (flavor == Flavor::C && N % 2 != 0)
    throw error("sequence: flavor C requires even N");
  for (int v : entries)
    if (v < 0) throw error("sequence: negative entry");
  for (int i = 0; i + 1 <= N; ++i)
    if (entries[i] > entries[i + 1])
      throw error("sequence: not weakly increasing at position " + std::to_string(i));
  for (int i = 0; i + 2 <= N; ++i)
    if (entries[i] >= entries[i + 2])
      throw error("sequence: parity chain not strict at position " + std::to_string(i));
  std::map<int, int> mult;
  for (int v : entries) mult[v]++;
  Sequence s;
  s.flavor = flavor;
  s.a = entries;
  for (int i = 0; i <= N; ++i)
    if (mult[entries[i]] == 1) s.singles.push_back(i);
  if (flavor == Flavor::BD && s.singles.empty())
    throw error("sequence: flavor BD requires a nonempty singleton set");
  // structural facts: multiplicities <= 2, singleton positions alternate in
  // parity starting even, counts match the flavor
  for (auto& [v, m] : mult)
    if (m > 2) throw error("sequence: internal multiplicity > 2");
  for (size_t k = 0; k < s.singles.size(); ++k)
    if (s.singles[k] % 2 != (int)k % 2)
      throw error("sequence: singleton positions out of parity");
  if (flavor == Flavor::C && s.singles.size() % 2 == 0)
    throw error("sequence: flavor C needs an odd number of singletons");
  return s;
}

inline std::vector<int> sorted_multiset(const std::vector<int>& v) {
  std::vector<int> out = v;
  std::sort(out.begin(), out.end());
  return out;
}

// Shift a raw chain-set member the same way Sequence::shifted does.
inline std::vector<int> shifted_raw(const std::vector<int>& b, Flavor flavor) {
  std::vector<int> h(b.size());
  for (size_t i = 0; i < b.size(); ++i)
    h[i] = b[i] + (flavor == Flavor::C ? (int)((i + 1) / 2) : (int)(i / 2));
  return h;
}

// The chain set E: all arrangements of the multiset of a with both parity
// chains strictly increasing.  Doubled values are forced to sit once on
// each chain; singleton values choose a chain.  Each chain is then sorted,
// which pins the arrangement.
inline std::vector<std::vector<int>> enumerate_chain_set(
    const Sequence& a, long long guard = 1000000, bool override_guard = false) {
  int N = a.N();
  int even_slots = N / 2 + 1;
  std::map<int, int> mult;
  for (int v : a.a) mult[v]++;
  std::vector<int> singles_vals, doubles_vals;
  for (auto& [v, m] : mult)
    (m == 1 ? singles_vals : doubles_vals).push_back(v);
  int k = even_slots - (int)doubles_vals.size();  // singles on the even chain
  if (k < 0 || k > (int)singles_vals.size())
    throw error("enumerate_chain_set: impossible split");
  // binomial guard
  long long count = 1;
  int n = (int)singles_vals.size();
  for (int i = 0; i < k; ++i) {
    count = count * (n - i) / (i + 1);
    if (count > guard && !override_guard)
      throw error("enumerate_chain_set: candidate bound exceeded (use override)");
  }
  std::vector<std::vector<int>> out;
  std::vector<int> pick(k);
  // enumerate k-subsets of singles_vals in lexicographic order
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  auto emit = [&]() {
    std::vector<int> ev = doubles_vals, od = doubles_vals;
    std::vector<bool> on_even(n, false);
    for (int i : idx) on_even[i] = true;
    for (int i = 0; i < n; ++i)
      (on_even[i] ? ev : od).push_back(singles_vals[i]);
    std::sort(ev.begin(), ev.end());
    std::sort(od.begin(), od.end());
    if ((int)ev.size() != even_slots) return;
    std::vector<int> b(N + 1);
    for (int i = 0; i <= N; ++i)
      b[i] = (i % 2 == 0) ? ev[i / 2] : od[i / 2];
    out.push_back(std::move(b));
  };
  if (k == 0) {
    emit();
  } else {
    while (true) {
      emit();
      int i = k - 1;
      while (i >= 0 && idx[i] == n - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Brute-force matching set: members of E whose shifted multiset agrees with
// the shifted multiset of a.  By the swap lemmas this equals the swap family
// {a^X}.
inline std::vector<std::vector<int>> enumerate_matching(
    const Sequence& a, long long guard = 1000000, bool override_guard = false) {
  auto target = sorted_multiset(a.shifted());
  std::vector<std::vector<int>> out;
  for (auto& b : enumerate_chain_set(a, guard, override_guard))
    if (sorted_multiset(shifted_raw(b, a.flavor)) == target) out.push_back(b);
  return out;
}

// The swap family itself, sorted, for comparison against enumerate_matching.
inline std::vector<std::vector<int>> swap_family(const Sequence& a) {
  auto adm = a.admissible_swaps();
  int k = (int)adm.size();
  if (k > 20) throw error("swap_family: too many swap indices");
  std::vector<std::vector<int>> out;
  for (uint32_t m = 0; m < (1u << k); ++m) {
    std::vector<int> X;
    for (int i = 0; i < k; ++i)
      if (m & (1u << i)) X.push_back(adm[i]);
    out.push_back(a.swapped(X));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace sfc
