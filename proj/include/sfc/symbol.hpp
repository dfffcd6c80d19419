#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "sfc/f2.hpp"
#include "sfc/sequence.hpp"

namespace sfc {

// A pair of integer sets.  Ordered pairs are used for the shifted symbols of
// flavor C; everything else is unordered and kept in canonical orientation
// (lexicographically smaller member first, sizes breaking ties first).
struct SymbolPair {
  std::vector<int> A, B;  // each strictly increasing
  bool ordered = true;

  void canonicalize() {
    if (ordered) return;
    if (B < A) std::swap(A, B);
  }
  friend bool operator==(const SymbolPair& x, const SymbolPair& y) {
    return x.A == y.A && x.B == y.B;
  }
  friend bool operator<(const SymbolPair& x, const SymbolPair& y) {
    if (x.A != y.A) return x.A < y.A;
    return x.B < y.B;
  }
};

inline SymbolPair make_pair_sorted(std::vector<int> A, std::vector<int> B, bool ordered) {
  std::sort(A.begin(), A.end());
  std::sort(B.begin(), B.end());
  SymbolPair p{std::move(A), std::move(B), ordered};
  p.canonicalize();
  return p;
}

inline bool has_consecutive(const std::vector<int>& v) {
  for (size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i + 1] == v[i] + 1) return true;
  return false;
}

inline bool has_duplicate(const std::vector<int>& v) {
  for (size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i + 1] == v[i]) return true;
  return false;
}

// Staircase subtraction.  Flavor C removes 0,1,2,... from A and 1,2,... from
// B; flavor BD removes 0,1,2,... from both rows.  A malformed input that
// produces a repeat (or a negative) is rejected.
inline SymbolPair minus_transform(const SymbolPair& p, Flavor flavor) {
  std::vector<int> A, B;
  for (size_t i = 0; i < p.A.size(); ++i) A.push_back(p.A[i] - (int)i);
  int boff = flavor == Flavor::C ? 1 : 0;
  for (size_t i = 0; i < p.B.size(); ++i) B.push_back(p.B[i] - (int)i - boff);
  for (int v : A)
    if (v < 0) throw error("minus: negative entry");
  for (int v : B)
    if (v < 0) throw error("minus: negative entry");
  if (has_duplicate(A) || has_duplicate(B))
    throw error("minus: repeated entry (malformed symbol)");
  return make_pair_sorted(A, B, /*ordered=*/false);
}

// ---------------------------------------------------------------------------
// Plain-sequence side: unordered pairs with union multiset [a].

struct FrakSets {
  f2::Ground jvals;                 // singleton values as a ground set
  SymbolPair empty_pair;            // sides of a itself (canonical unordered)
  std::vector<int> side_of_single;  // per singleton index s: 0 if a_{i_s} sits
                                    // at an even position, 1 otherwise
  std::vector<int> doubled_values;
  // all pairs indexed by canonical class masks over jvals, increasing mask
  std::vector<std::pair<uint32_t, SymbolPair>> all;
  std::vector<std::pair<uint32_t, SymbolPair>> prime;
  // swap-side subset ("T1": classes of unions of swap pairs) and its
  // complementary Lagrangian subset ("T0")
  std::vector<std::pair<uint32_t, SymbolPair>> t1, t0;
  f2::Subspace L0, L1;  // Lagrangian pair in Pbar_ev(jvals); L1 = swap side
                        // for flavor C, L0 = swap side for flavor BD
  f2::Subspace swap_side, dual_side;
  f2::Space xf_space;   // Pbar_ev(jvals)
};

// Pair attached to a subset of the singleton values (given as a mask over
// the jvals ground set): swap the side of every singleton in the subset.
inline SymbolPair frak_pair(const Sequence& seq, const FrakSets& fs, uint32_t mask) {
  std::vector<int> A = fs.doubled_values, B = fs.doubled_values;
  auto vals = seq.singleton_values();
  for (size_t s = 0; s < vals.size(); ++s) {
    int side = fs.side_of_single[s] ^ ((mask >> s) & 1u);
    (side == 0 ? A : B).push_back(vals[s]);
  }
  return make_pair_sorted(std::move(A), std::move(B), /*ordered=*/false);
}

inline FrakSets enumerate_frak(const Sequence& seq) {
  FrakSets fs;
  auto vals = seq.singleton_values();
  fs.jvals = f2::make_ground(vals);
  for (int pos : seq.singles) fs.side_of_single.push_back(pos % 2);
  for (size_t i = 0; i + 1 < seq.a.size(); ++i)
    if (seq.a[i] == seq.a[i + 1]) fs.doubled_values.push_back(seq.a[i]);
  fs.empty_pair = frak_pair(seq, fs, 0);

  int nsing = (int)vals.size();
  for (uint32_t rep = 0; rep < (1u << nsing); ++rep) {
    if (rep & 1u) continue;  // canonical class reps have the min value absent
    fs.all.emplace_back(rep, frak_pair(seq, fs, rep));
  }
  size_t a_side = fs.empty_pair.A.size(), b_side = fs.empty_pair.B.size();
  for (auto& [rep, p] : fs.all) {
    std::multiset<size_t> want{a_side, b_side}, got{p.A.size(), p.B.size()};
    if (want == got) fs.prime.emplace_back(rep, p);
  }

  // Lagrangian pair: L0 spanned by the singleton-value pairs at even s,
  // L1 by the pairs at odd s.  The swap family lives on even s for flavor BD
  // and on odd s for flavor C.
  fs.xf_space = f2::Space{fs.jvals, f2::Ambient::Pbar_ev};
  std::vector<uint32_t> gens0, gens1;
  for (int s = 0; s + 1 < nsing; ++s) {
    uint32_t pair_mask = (1u << s) | (1u << (s + 1));
    (s % 2 == 0 ? gens0 : gens1).push_back(pair_mask);
  }
  fs.L0 = f2::span(fs.xf_space, gens0);
  fs.L1 = f2::span(fs.xf_space, gens1);
  fs.swap_side = (seq.flavor == Flavor::C) ? fs.L1 : fs.L0;
  fs.dual_side = (seq.flavor == Flavor::C) ? fs.L0 : fs.L1;

  for (auto& [rep, p] : fs.all) {
    if (fs.swap_side.contains(rep)) fs.t1.emplace_back(rep, p);
    if (fs.dual_side.contains(rep)) fs.t0.emplace_back(rep, p);
  }
  return fs;
}

// Address of a pair inside P-bar(jvals); nullopt if the pair does not belong
// to the family of seq.
inline std::optional<uint32_t> frak_address(const FrakSets& fs, const SymbolPair& p) {
  for (auto& [rep, q] : fs.all)
    if (q == p) return rep;
  return std::nullopt;
}

// Union of the swap pairs over X (X given as indices into admissible_swaps).
inline uint32_t frak_swap_mask(const Sequence&, const std::vector<int>& s_list) {
  uint32_t m = 0;
  for (int s : s_list) m ^= (1u << s) | (1u << (s + 1));
  return m;
}

// ---------------------------------------------------------------------------
// Shifted-sequence side: interval structure and consecutive-free symbols.

struct IntervalStructure {
  Flavor flavor;
  std::vector<int> shifted;                // hat/ring sequence
  std::vector<int> A_empty, B_empty;       // even-/odd-position shifted values
  std::vector<int> doubled;                // values on both sides
  std::vector<int> J;                      // values occurring exactly once
  std::vector<std::vector<int>> runs;      // maximal consecutive runs of J
  std::vector<std::vector<int>> intervals; // runs kept by the flavor rule
  std::vector<int> H;                      // J-values belonging to no interval
  std::vector<int> admissible_s;           // odd (C) or even (BD) swap indices
  std::vector<std::vector<int>> windows;   // values of I_s per admissible s
  std::vector<std::vector<int>> blocks;    // interval indices inside each window
  std::vector<std::vector<int>> sub_sizes; // run sizes of each window
  std::vector<int> unassigned;             // interval indices in no block
  bool windows_whole = true;               // every window = union of intervals
  bool sub_parity_ok = true;               // odd / even,... ,even / odd sizes
};

inline IntervalStructure interval_structure(const Sequence& seq) {
  IntervalStructure is;
  is.flavor = seq.flavor;
  is.shifted = seq.shifted();
  std::map<int, int> mult;
  for (int v : is.shifted) mult[v]++;
  for (size_t i = 0; i < is.shifted.size(); ++i) {
    int v = is.shifted[i];
    if (i % 2 == 0) {
      is.A_empty.push_back(v);
    } else {
      is.B_empty.push_back(v);
    }
  }
  std::sort(is.A_empty.begin(), is.A_empty.end());
  std::sort(is.B_empty.begin(), is.B_empty.end());
  for (auto& [v, m] : mult) {
    if (m == 1) is.J.push_back(v);
    if (m == 2) is.doubled.push_back(v);
    if (m > 2) throw error("interval_structure: shifted multiplicity > 2");
  }
  // maximal consecutive runs of J
  for (size_t i = 0; i < is.J.size();) {
    size_t j = i;
    while (j + 1 < is.J.size() && is.J[j + 1] == is.J[j] + 1) ++j;
    is.runs.push_back(std::vector<int>(is.J.begin() + i, is.J.begin() + j + 1));
    i = j + 1;
  }
  // flavor C drops a run starting at 0; flavor BD keeps every run
  for (auto& r : is.runs) {
    if (seq.flavor == Flavor::C && r.front() == 0) {
      for (int v : r) is.H.push_back(v);
    } else {
      is.intervals.push_back(r);
    }
  }
  is.admissible_s = seq.admissible_swaps();
  std::vector<bool> assigned(is.intervals.size(), false);
  for (int s : is.admissible_s) {
    int lo = seq.singles[s], hi = seq.singles[s + 1];
    std::vector<int> win;
    for (int i = lo; i <= hi; ++i) win.push_back(is.shifted[i]);
    std::sort(win.begin(), win.end());
    is.windows.push_back(win);
    // decompose the window into its own consecutive runs
    std::vector<int> sizes;
    for (size_t i = 0; i < win.size();) {
      size_t j = i;
      while (j + 1 < win.size() && win[j + 1] == win[j] + 1) ++j;
      sizes.push_back((int)(j - i + 1));
      i = j + 1;
    }
    is.sub_sizes.push_back(sizes);
    if (sizes.size() >= 2) {
      for (size_t h = 0; h < sizes.size(); ++h) {
        bool edge = h == 0 || h + 1 == sizes.size();
        if (edge ? sizes[h] % 2 == 0 : sizes[h] % 2 == 1) is.sub_parity_ok = false;
      }
    }
    // intervals contained in the window
    std::vector<int> blk;
    std::set<int> win_set(win.begin(), win.end());
    for (size_t k = 0; k < is.intervals.size(); ++k) {
      bool inside = true;
      for (int v : is.intervals[k])
        if (!win_set.count(v)) { inside = false; break; }
      if (inside) {
        blk.push_back((int)k);
        assigned[k] = true;
        for (int v : is.intervals[k]) win_set.erase(v);
      }
    }
    if (!win_set.empty()) is.windows_whole = false;  // window not a union of intervals
    is.blocks.push_back(blk);
  }
  for (size_t k = 0; k < is.intervals.size(); ++k)
    if (!assigned[k]) is.unassigned.push_back((int)k);
  return is;
}

// A_alpha / B_alpha for a subset alpha of the intervals (mask over interval
// indices): intervals in alpha contribute their B-side values to A and vice
// versa; H and the doubled values stay put.
inline SymbolPair symbol_from_alpha(const IntervalStructure& is, uint32_t alpha) {
  if (alpha >> is.intervals.size()) throw error("symbol_from_alpha: alpha outside the interval set");
  std::set<int> Aset(is.A_empty.begin(), is.A_empty.end());
  std::set<int> Bset(is.B_empty.begin(), is.B_empty.end());
  std::vector<int> A(is.doubled), B(is.doubled);
  for (int v : is.H) {
    if (Aset.count(v)) A.push_back(v);
    else B.push_back(v);
  }
  for (size_t k = 0; k < is.intervals.size(); ++k) {
    bool flip = (alpha >> k) & 1u;
    for (int v : is.intervals[k]) {
      bool onA = Aset.count(v) > 0;
      ((onA ^ flip) ? A : B).push_back(v);
    }
  }
  return make_pair_sorted(std::move(A), std::move(B), is.flavor == Flavor::C);
}

struct TSets {
  SymbolPair empty_pair;
  std::vector<SymbolPair> T, prime, t1;
  // alpha address per member of T (flavor C: subsets of intervals; flavor
  // BD: canonical classes in P-bar(intervals))
  std::map<SymbolPair, uint32_t> alpha_of;
  bool alpha_bijective = true;
};

// Exhaustive placement of the shifted multiset into consecutive-free pairs.
// Flavor C: ordered pairs, B must avoid 0.  Flavor BD: unordered pairs, both
// rows may contain 0.
inline std::vector<SymbolPair> enumerate_symbol_pairs(const std::vector<int>& shifted,
                                                      Flavor flavor) {
  std::map<int, int> mult;
  for (int v : shifted) mult[v]++;
  std::vector<std::pair<int, int>> items(mult.begin(), mult.end());
  std::vector<SymbolPair> out;
  std::vector<int> A, B;
  auto rec = [&](auto&& self, size_t k) -> void {
    if (k == items.size()) {
      out.push_back(make_pair_sorted(A, B, flavor == Flavor::C));
      return;
    }
    auto [v, m] = items[k];
    auto fitsA = [&]() { return A.empty() || A.back() < v - 1; };
    auto fitsB = [&]() {
      return (B.empty() ? (flavor == Flavor::BD || v >= 1) : B.back() < v - 1);
    };
    if (m == 2) {
      if (fitsA() && fitsB()) {
        A.push_back(v);
        B.push_back(v);
        self(self, k + 1);
        A.pop_back();
        B.pop_back();
      }
      return;
    }
    if (fitsA()) {
      A.push_back(v);
      self(self, k + 1);
      A.pop_back();
    }
    if (fitsB()) {
      B.push_back(v);
      self(self, k + 1);
      B.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline TSets enumerate_T(const Sequence& seq, const IntervalStructure& is) {
  TSets ts;
  ts.empty_pair = symbol_from_alpha(is, 0);
  ts.T = enumerate_symbol_pairs(is.shifted, seq.flavor);

  // size filter
  std::multiset<size_t> want{ts.empty_pair.A.size(), ts.empty_pair.B.size()};
  for (auto& p : ts.T) {
    std::multiset<size_t> got{p.A.size(), p.B.size()};
    bool ok = seq.flavor == Flavor::C
                  ? (p.A.size() == ts.empty_pair.A.size() &&
                     p.B.size() == ts.empty_pair.B.size())
                  : want == got;
    if (ok) ts.prime.push_back(p);
  }
  // minus-multiset filter: rows reduced by the staircase must reassemble [a]
  auto target = sorted_multiset(seq.a);
  for (auto& p : ts.prime) {
    SymbolPair m;
    try {
      m = minus_transform(p, seq.flavor);
    } catch (const error&) {
      continue;
    }
    std::vector<int> uni = m.A;
    uni.insert(uni.end(), m.B.begin(), m.B.end());
    if (sorted_multiset(uni) == target) ts.t1.push_back(p);
  }

  // alpha addresses: the map alpha -> pair is a bijection from P(intervals)
  // (flavor C) resp. P-bar(intervals) (flavor BD) onto T
  int f = (int)is.intervals.size();
  if (f <= 20) {
    std::map<SymbolPair, uint32_t> seen;
    uint32_t top = f == 0 ? 1u : (1u << f);
    for (uint32_t alpha = 0; alpha < top; ++alpha) {
      if (seq.flavor == Flavor::BD && f > 0 && (alpha & 1u)) continue;
      auto p = symbol_from_alpha(is, alpha);
      if (seen.count(p)) ts.alpha_bijective = false;
      else seen[p] = alpha;
    }
    ts.alpha_of = seen;
    if (seen.size() != ts.T.size()) ts.alpha_bijective = false;
    for (auto& p : ts.T)
      if (!seen.count(p)) ts.alpha_bijective = false;
  }
  return ts;
}

// Verification bundle for the swap-family statements on one sequence:
//  - |T1| equals 2^(number of admissible swaps collapsed per flavor)
//  - T1 is exactly { pair of alpha_X : X subset of admissible swaps }
//  - the minus transform is a bijection T1 -> frak T1
//  - minus(pair(alpha_X)) equals the plain pair of the swapped sides
struct T1Report {
  bool size_ok = false;
  bool equals_swap_family = false;
  bool minus_bijective = false;
  bool alpha_compat = false;
  long long t1_size = 0, expected = 0;
  std::string witness;
  bool ok() const {
    return size_ok && equals_swap_family && minus_bijective && alpha_compat;
  }
};

inline T1Report t1_check(const Sequence& seq, const IntervalStructure& is,
                         const TSets& ts, const FrakSets& fs) {
  T1Report r;
  r.t1_size = (long long)ts.t1.size();
  r.expected = 1ll << (seq.flavor == Flavor::C ? seq.M() : seq.mu() / 2);
  r.size_ok = r.t1_size == r.expected;

  // alpha_X = union of the blocks over s in X
  auto adm = is.admissible_s;
  std::set<SymbolPair> from_swaps;
  bool compat = true;
  for (uint32_t m = 0; m < (1u << adm.size()); ++m) {
    uint32_t alpha = 0;
    std::vector<int> s_list;
    for (size_t i = 0; i < adm.size(); ++i)
      if (m & (1u << i)) {
        s_list.push_back(adm[i]);
        for (int k : is.blocks[i]) alpha |= 1u << k;
      }
    auto p = symbol_from_alpha(is, alpha);
    from_swaps.insert(p);
    SymbolPair mp;
    try {
      mp = minus_transform(p, seq.flavor);
    } catch (const error&) {
      compat = false;
      r.witness = "minus failed on a swap-family member";
      continue;
    }
    auto expect = frak_pair(seq, fs, frak_swap_mask(seq, s_list));
    if (!(mp == expect)) {
      compat = false;
      if (r.witness.empty()) {
        r.witness = "alpha/frak mismatch at X = {";
        for (size_t i = 0; i < s_list.size(); ++i)
          r.witness += (i ? "," : "") + std::to_string(s_list[i]);
        r.witness += "}";
      }
    }
  }
  r.alpha_compat = compat;
  std::set<SymbolPair> t1set(ts.t1.begin(), ts.t1.end());
  r.equals_swap_family = t1set == from_swaps;

  // minus: T1 -> frak t1, bijective
  std::set<SymbolPair> images;
  std::set<SymbolPair> frak_t1;
  for (auto& [rep, p] : fs.t1) frak_t1.insert(p);
  bool inj = true;
  for (auto& p : ts.t1) {
    SymbolPair mp;
    try {
      mp = minus_transform(p, seq.flavor);
    } catch (const error&) {
      inj = false;
      break;
    }
    if (!images.insert(mp).second) inj = false;
  }
  r.minus_bijective = inj && images == frak_t1;
  return r;
}

}  // namespace sfc
