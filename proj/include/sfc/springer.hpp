#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sfc/f2.hpp"
#include "sfc/sequence.hpp"
#include "sfc/symbol.hpp"

namespace sfc {

enum class GroupKind { Symplectic, Orthogonal, GeneralLinear };

inline std::string kind_name(GroupKind k) {
  switch (k) {
    case GroupKind::Symplectic: return "sp";
    case GroupKind::Orthogonal: return "so";
    case GroupKind::GeneralLinear: return "gl";
  }
  return "?";
}

inline Flavor flavor_of(GroupKind k) {
  return k == GroupKind::Symplectic ? Flavor::C : Flavor::BD;
}

struct JordanType {
  GroupKind kind = GroupKind::Symplectic;
  std::vector<int> parts;       // weakly decreasing, positive
  std::map<int, int> mult;      // i_e
  long long total = 0;          // 2n (symplectic) or n (orthogonal/GL)

  // Delta: even part sizes present (symplectic), odd sizes (orthogonal).
  std::vector<int> delta() const {
    std::vector<int> d;
    for (auto& [e, m] : mult) {
      bool keep = kind == GroupKind::Symplectic ? e % 2 == 0 : e % 2 == 1;
      if (keep && m >= 1) d.push_back(e);
    }
    return d;
  }
  int odd_part_count() const {
    int c = 0;
    for (auto& [e, m] : mult)
      if (e % 2 == 1) c += m;
    return c;
  }
};

inline JordanType jordan_type(std::vector<int> parts, GroupKind kind) {
  JordanType jt;
  jt.kind = kind;
  for (int p : parts) {
    if (p <= 0) throw error("jordan_type: parts must be positive");
    jt.total += p;
    jt.mult[p]++;
  }
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  jt.parts = parts;
  if (kind == GroupKind::Symplectic) {
    if (jt.total % 2 != 0)
      throw error("jordan_type: symplectic type needs even total");
    for (auto& [e, m] : jt.mult)
      if (e % 2 == 1 && m % 2 == 1)
        throw error("jordan_type: odd part " + std::to_string(e) +
                    " has odd multiplicity");
  } else if (kind == GroupKind::Orthogonal) {
    for (auto& [e, m] : jt.mult)
      if (e % 2 == 0 && m % 2 == 1)
        throw error("jordan_type: even part " + std::to_string(e) +
                    " has odd multiplicity");
  }
  return jt;
}

// Smallest admissible padding parameter.  Symplectic sequences have odd
// length, orthogonal ones have length of the opposite parity to n: the
// shifted-row counting forces N = n+1 mod 2, not N = n mod 2.
inline int default_N(const JordanType& jt) {
  int parts = (int)jt.parts.size();
  if (jt.kind == GroupKind::Symplectic) {
    int N = parts - 1;
    if (N % 2 != 0) ++N;
    return std::max(N, 0);
  }
  int want = (int)((jt.total + 1) % 2);
  int N = parts - 1;
  if (N < 0) N = 0;
  if (N % 2 != want) ++N;
  return N;
}

struct ClassSequence {
  enum class Status { Special, NotSpecial, TrivialGL, TrivialDeltaEmpty };
  Status status = Status::NotSpecial;
  std::string reason;          // witness when not special
  std::optional<Sequence> seq;
  int N = -1;
  bool special() const { return status == Status::Special; }
  bool trivial() const {
    return status == Status::TrivialGL || status == Status::TrivialDeltaEmpty;
  }
};

// Partition -> sequence.  Pad the parts ascending to N+1 entries, shift by
// 0,1,...,N; the shifted values split by parity into the two rows of the
// attached symbol, which are the even-/odd-position values of the sequence.
// The class is special exactly when the sorted union can be interleaved with
// every row value on the matching side.
inline ClassSequence class_sequence(const JordanType& jt, int N) {
  ClassSequence out;
  out.N = N;
  if (jt.kind == GroupKind::GeneralLinear) {
    out.status = ClassSequence::Status::TrivialGL;
    return out;
  }
  if (jt.kind == GroupKind::Orthogonal && jt.delta().empty()) {
    out.status = ClassSequence::Status::TrivialDeltaEmpty;
    return out;
  }
  if ((int)jt.parts.size() > N + 1) throw error("class_sequence: N too small");
  if (jt.kind == GroupKind::Symplectic && N % 2 != 0)
    throw error("class_sequence: symplectic N must be even");
  if (jt.kind == GroupKind::Orthogonal && (N - (int)(jt.total + 1)) % 2 != 0)
    throw error("class_sequence: orthogonal N must have parity of n+1");

  std::vector<int> lam(jt.parts.rbegin(), jt.parts.rend());  // ascending
  lam.insert(lam.begin(), N + 1 - (int)lam.size(), 0);
  // shifted parts are distinct; split by parity
  std::map<int, int> side_of;  // value -> bitmask of sides present (1=A,2=B)
  for (int j = 0; j <= N; ++j) {
    int z = lam[j] + j;
    bool z_odd = z % 2 != 0;
    // flavor C: even z on side A; flavor BD: odd z on side A
    bool to_A = (jt.kind == GroupKind::Symplectic) ? !z_odd : z_odd;
    int value = z_odd ? (z - 1) / 2 : z / 2;
    int bit = to_A ? 1 : 2;
    if (side_of[value] & bit) throw error("class_sequence: duplicate row entry");
    side_of[value] |= bit;
  }
  // interleave ascending; A-side values take even slots, B-side odd slots
  std::vector<int> a;
  int slot = 0;
  bool ok = true;
  std::string why;
  for (auto& [v, sides] : side_of) {
    if (sides == 3) {
      a.push_back(v);
      a.push_back(v);
      slot += 2;
    } else {
      bool needs_even = sides == 1;
      if ((slot % 2 == 0) != needs_even) {
        ok = false;
        why = "value " + std::to_string(v) + " lands at slot " +
              std::to_string(slot) + " on the wrong side";
        break;
      }
      a.push_back(v);
      slot += 1;
    }
  }
  if (!ok || (int)a.size() != N + 1) {
    out.status = ClassSequence::Status::NotSpecial;
    out.reason = ok ? "row sizes do not fit the slots" : why;
    return out;
  }
  try {
    out.seq = validate_sequence(a, flavor_of(jt.kind));
  } catch (const error& e) {
    out.status = ClassSequence::Status::NotSpecial;
    out.reason = e.what();
    return out;
  }
  out.status = ClassSequence::Status::Special;
  return out;
}

// Sequence -> partition (inverse of the construction above); strips zero
// parts and returns the parts weakly decreasing.
inline std::vector<int> sequence_partition(const Sequence& seq) {
  std::vector<int> z;
  for (int i = 0; i <= seq.N(); ++i) {
    int zi = seq.flavor == Flavor::C ? 2 * seq.a[i] + (i % 2)
                                     : 2 * seq.a[i] + 1 - (i % 2);
    z.push_back(zi);
  }
  std::sort(z.begin(), z.end());
  std::vector<int> lam;
  for (size_t j = 0; j < z.size(); ++j) {
    int p = z[j] - (int)j;
    if (p < 0) throw error("sequence_partition: negative part");
    if (p > 0) lam.push_back(p);
  }
  std::sort(lam.begin(), lam.end(), std::greater<int>());
  return lam;
}

// Exhaustive fallback: all valid sequences of length N+1 whose inverse
// partition equals the given one.  Entries are bounded by max part + N.
inline std::vector<Sequence> search_sequences(const JordanType& jt, int N) {
  Flavor fl = flavor_of(jt.kind);
  std::vector<int> target = jt.parts;
  int cap = (jt.parts.empty() ? 0 : jt.parts.front()) + N;
  std::vector<Sequence> found;
  std::vector<int> a;
  auto rec = [&](auto&& self, int i) -> void {
    if (i == N + 1) {
      try {
        Sequence s = validate_sequence(a, fl);
        if (sequence_partition(s) == target) found.push_back(s);
      } catch (const error&) {
      }
      return;
    }
    int lo = i == 0 ? 0 : a[i - 1];
    for (int v = lo; v <= cap; ++v) {
      if (i >= 2 && v <= a[i - 2]) continue;
      a.push_back(v);
      self(self, i + 1);
      a.pop_back();
    }
  };
  rec(rec, 0);
  return found;
}

// Order-preserving match between the intervals and Delta: interval h must
// have exactly i_{e_h} elements.
struct DeltaMatch {
  bool ok = false;
  std::vector<std::pair<int, int>> pairs;  // (interval index, part size e)
  std::string diagnostic;
};

inline DeltaMatch interval_delta_match(const IntervalStructure& is, const JordanType& jt) {
  DeltaMatch dm;
  auto delta = jt.delta();
  if (delta.size() != is.intervals.size()) {
    dm.diagnostic = "interval count " + std::to_string(is.intervals.size()) +
                    " != |Delta| " + std::to_string(delta.size());
    return dm;
  }
  for (size_t h = 0; h < delta.size(); ++h) {
    int e = delta[h];
    int want = jt.mult.at(e);
    if ((int)is.intervals[h].size() != want) {
      dm.diagnostic = "interval " + std::to_string(h) + " has size " +
                      std::to_string(is.intervals[h].size()) + ", expected i_" +
                      std::to_string(e) + " = " + std::to_string(want);
      return dm;
    }
    dm.pairs.emplace_back((int)h, e);
  }
  dm.ok = true;
  return dm;
}

// Component group A(u), the linear map onto the dual of the swap-side
// subspace of interval subsets, its kernel, and the quotient.
struct ComponentGroup {
  GroupKind kind = GroupKind::Symplectic;
  int f = 0;                       // number of intervals
  f2::Ground iground;              // interval indices as a ground set
  f2::Space model;                 // P (symplectic) or P_ev (orthogonal)
  f2::Subspace swap_span;          // span of the interval blocks: P(I)_1 or
                                   // its quotient image for orthogonal
  std::vector<uint32_t> model_basis;
  std::vector<uint32_t> pi_rows;   // functional coordinates per model basis vector
  f2::Subspace kernel;             // K(u), inside the model space
  int abar_dim = 0;
  bool surjective = false;

  long long a_order() const { return 1ll << model.dim(); }
  long long abar_order() const { return 1ll << abar_dim; }
  long long kernel_order() const { return 1ll << kernel.rank; }

  // pi(X) as coordinates over swap_span.basis.
  uint32_t pi(uint32_t X) const {
    uint32_t row = 0;
    for (size_t j = 0; j < swap_span.basis.size(); ++j)
      if (f2::parity(X & swap_span.basis[j])) row |= 1u << j;
    return row;
  }
};

inline ComponentGroup component_group(const Sequence& seq, const IntervalStructure& is) {
  ComponentGroup cg;
  cg.kind = seq.flavor == Flavor::C ? GroupKind::Symplectic : GroupKind::Orthogonal;
  cg.f = (int)is.intervals.size();
  std::vector<int> labels(cg.f);
  for (int i = 0; i < cg.f; ++i) labels[i] = i;
  cg.iground = f2::make_ground(labels);
  bool orth = cg.kind == GroupKind::Orthogonal;
  cg.model = f2::Space{cg.iground, orth ? f2::Ambient::P_ev : f2::Ambient::P};

  // block masks
  std::vector<uint32_t> block_masks;
  for (auto& blk : is.blocks) {
    uint32_t m = 0;
    for (int k : blk) m |= 1u << k;
    block_masks.push_back(m);
  }
  f2::Space swap_space{cg.iground, orth ? f2::Ambient::Pbar : f2::Ambient::P};
  cg.swap_span = f2::span(swap_space, block_masks);
  cg.abar_dim = cg.swap_span.rank;

  // model basis
  if (!orth) {
    for (int i = 0; i < cg.f; ++i) cg.model_basis.push_back(1u << i);
  } else {
    for (int i = 1; i < cg.f; ++i) cg.model_basis.push_back(1u | (1u << i));
  }
  for (uint32_t b : cg.model_basis) cg.pi_rows.push_back(cg.pi(b));

  // kernel: nullspace of the pi matrix over the model basis
  int nb = (int)cg.model_basis.size();
  std::vector<uint32_t> rows = cg.pi_rows;  // row i = image of basis i
  // gaussian elimination tracking combinations
  std::vector<uint32_t> combo(nb);
  for (int i = 0; i < nb; ++i) combo[i] = 1u << i;
  int rank = 0;
  for (int col = 0; col < cg.abar_dim; ++col) {
    int sel = -1;
    for (int i = rank; i < nb; ++i)
      if (rows[i] & (1u << col)) { sel = i; break; }
    if (sel < 0) continue;
    std::swap(rows[rank], rows[sel]);
    std::swap(combo[rank], combo[sel]);
    for (int i = 0; i < nb; ++i)
      if (i != rank && (rows[i] & (1u << col))) {
        rows[i] ^= rows[rank];
        combo[i] ^= combo[rank];
      }
    ++rank;
  }
  cg.surjective = rank == cg.abar_dim;
  std::vector<uint32_t> kgens;
  for (int i = rank; i < nb; ++i) {
    uint32_t m = 0;
    for (int j = 0; j < nb; ++j)
      if (combo[i] & (1u << j)) m ^= cg.model_basis[j];
    kgens.push_back(m);
  }
  cg.kernel = f2::span(cg.model, kgens);
  return cg;
}

// The character of A(u) attached to a symbol pair in T': the interval subset
// alpha acting by intersection parity.  For orthogonal groups only the class
// of alpha matters on the even-subset model.
struct SpringerCharacter {
  uint32_t alpha = 0;        // subset of intervals (canonical class rep if BD)
  bool factors_through_abar = false;
  uint32_t abar_coords = 0;  // coordinates over swap_span.basis when it factors
};

inline SpringerCharacter springer_module(const SymbolPair& p, const IntervalStructure& is,
                                         const TSets& ts, const ComponentGroup& cg) {
  auto it = ts.alpha_of.find(p);
  if (it == ts.alpha_of.end()) throw error("springer_module: pair not in T");
  bool in_prime = std::find(ts.prime.begin(), ts.prime.end(), p) != ts.prime.end();
  if (!in_prime) throw error("springer_module: pair not in T'");
  SpringerCharacter sc;
  sc.alpha = it->second;
  if (is.flavor == Flavor::BD && cg.f > 0)
    sc.alpha = f2::canonical_class(*cg.iground, sc.alpha);
  auto c = cg.swap_span.coords(sc.alpha);
  sc.factors_through_abar = c.has_value();
  if (c) sc.abar_coords = *c;
  return sc;
}

struct IrrStarEntry {
  SymbolPair pair;
  uint32_t abar_character = 0;  // coordinates over swap_span.basis
};

inline std::vector<IrrStarEntry> irr_star(const IntervalStructure& is, const TSets& ts,
                                          const ComponentGroup& cg) {
  std::vector<IrrStarEntry> out;
  for (auto& p : ts.t1) {
    auto sc = springer_module(p, is, ts, cg);
    if (!sc.factors_through_abar)
      throw error("irr_star: swap-family member does not factor through the quotient");
    out.push_back({p, sc.abar_coords});
  }
  return out;
}

}  // namespace sfc
