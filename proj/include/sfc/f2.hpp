#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sfc/rational.hpp"

namespace sfc::f2 {

// Subsets of a finite labelled ground set as F2 vectors.  Labels are the
// integers the rest of the engine cares about (singleton values of a
// sequence, interval indices, part sizes); all bit positions go through the
// label table.  Masks are uint32_t, so ground sets are capped at 32 labels,
// far above desk scale.
//
// Quotients by the line {0, X} are represented by canonical class
// representatives: the member of {L, X\L} that does not contain min(X).
// Those masks are exactly the masks with bit 0 clear, and they are closed
// under symmetric difference, so quotient arithmetic is plain XOR on
// canonical representatives.

struct GroundSet {
  std::vector<int> elements;  // strictly increasing

  explicit GroundSet(std::vector<int> elems) : elements(std::move(elems)) {
    for (size_t i = 0; i + 1 < elements.size(); ++i)
      if (elements[i] >= elements[i + 1])
        throw error("GroundSet: labels must be strictly increasing");
    if (elements.size() > 32) throw error("GroundSet: too large");
  }
  int size() const { return (int)elements.size(); }
  uint32_t full() const {
    return size() == 32 ? 0xffffffffu : ((1u << size()) - 1u);
  }
  int index_of(int label) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), label);
    if (it == elements.end() || *it != label)
      throw error("GroundSet: unknown label " + std::to_string(label));
    return (int)(it - elements.begin());
  }
  uint32_t mask_of(const std::vector<int>& labels) const {
    uint32_t m = 0;
    for (int v : labels) m |= 1u << index_of(v);
    return m;
  }
  std::vector<int> labels_of(uint32_t m) const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
      if (m & (1u << i)) out.push_back(elements[i]);
    return out;
  }
  friend bool operator==(const GroundSet& a, const GroundSet& b) {
    return a.elements == b.elements;
  }
};

using Ground = std::shared_ptr<const GroundSet>;

inline Ground make_ground(std::vector<int> elems) {
  return std::make_shared<const GroundSet>(std::move(elems));
}

inline void check_same_ground(const Ground& a, const Ground& b) {
  if (a.get() != b.get() && !(*a == *b)) throw error("ground-set mismatch");
}

inline int parity(uint32_t m) { return std::popcount(m) & 1; }

struct Vector {
  Ground ground;
  uint32_t mask = 0;
};

// |u ∩ v| mod 2.
inline int pairing(const Vector& u, const Vector& v) {
  check_same_ground(u.ground, v.ground);
  return parity(u.mask & v.mask);
}

inline uint32_t canonical_class(const GroundSet& g, uint32_t m) {
  if (g.size() == 0) throw error("P-bar of an empty ground set");
  return (m & 1u) ? (m ^ g.full()) : m;
}

struct ClassVec {
  Ground ground;
  uint32_t rep = 0;  // canonical: min(X) not a member

  ClassVec() = default;
  ClassVec(Ground g, uint32_t m) : ground(std::move(g)) {
    rep = canonical_class(*ground, m);
  }
};

inline bool operator==(const ClassVec& a, const ClassVec& b) {
  check_same_ground(a.ground, b.ground);
  return a.rep == b.rep;
}

// Lift of a class to an even-cardinality subset.  When |X| is odd every
// class has exactly one even member; when |X| is even both members share a
// parity and an odd class has no even lift.
inline uint32_t even_lift(const GroundSet& g, uint32_t class_rep) {
  if (parity(class_rep) == 0) return class_rep;
  uint32_t other = class_rep ^ g.full();
  if (parity(other) == 0) return other;
  throw error("class has no even lift");
}

// Induced symplectic form on P-bar_ev: evaluate on even lifts; independent
// of the lift because the full set pairs evenly with every even subset.
inline int quotient_pairing(const ClassVec& x, const ClassVec& y) {
  check_same_ground(x.ground, y.ground);
  uint32_t lx = even_lift(*x.ground, x.rep);
  uint32_t ly = even_lift(*y.ground, y.rep);
  return parity(lx & ly);
}

enum class Ambient { P, P_ev, Pbar, Pbar_ev };

inline std::string ambient_name(Ambient a) {
  switch (a) {
    case Ambient::P: return "P";
    case Ambient::P_ev: return "P_ev";
    case Ambient::Pbar: return "Pbar";
    case Ambient::Pbar_ev: return "Pbar_ev";
  }
  return "?";
}

inline bool is_quotient(Ambient a) {
  return a == Ambient::Pbar || a == Ambient::Pbar_ev;
}

struct Space {
  Ground ground;
  Ambient kind = Ambient::P;

  int dim() const {
    int n = ground->size();
    switch (kind) {
      case Ambient::P: return n;
      case Ambient::P_ev: return n == 0 ? 0 : n - 1;
      case Ambient::Pbar: return n - 1;
      case Ambient::Pbar_ev: return (n % 2 == 1) ? n - 1 : n - 2;
    }
    return 0;
  }
  // m: plain mask for P / P_ev, canonical class rep for quotients.
  bool contains(uint32_t m) const {
    switch (kind) {
      case Ambient::P: return true;
      case Ambient::P_ev: return parity(m) == 0;
      case Ambient::Pbar: return (m & 1u) == 0;
      case Ambient::Pbar_ev:
        if (m & 1u) return false;
        return ground->size() % 2 == 1 || parity(m) == 0;
    }
    return false;
  }
  std::vector<uint32_t> enumerate() const {
    std::vector<uint32_t> out;
    uint32_t full = ground->full();
    uint32_t m = 0;
    while (true) {
      if (contains(m)) out.push_back(m);
      if (m == full) break;
      ++m;
    }
    return out;
  }
};

// Row reduction with the highest set bit as pivot; the result is fully
// reduced and sorted by descending pivot, hence canonical.
inline std::vector<uint32_t> row_reduce(std::vector<uint32_t> rows) {
  std::vector<uint32_t> basis;
  for (uint32_t r : rows) {
    for (uint32_t b : basis)
      if (r != 0 && std::bit_width(r) == std::bit_width(b)) r ^= b;
    if (r == 0) continue;
    for (auto& b : basis)
      if (b & (1u << (std::bit_width(r) - 1))) b ^= r;
    basis.push_back(r);
    std::sort(basis.begin(), basis.end(), std::greater<uint32_t>());
  }
  return basis;
}

// Reduce m against a canonical basis (descending pivots); returns residual.
inline uint32_t reduce_against(uint32_t m, const std::vector<uint32_t>& basis) {
  for (uint32_t b : basis)
    if (m != 0 && std::bit_width(m) == std::bit_width(b)) m ^= b;
  return m;
}

struct Subspace {
  Space space;
  std::vector<uint32_t> gens;   // canonicalized for quotients
  std::vector<uint32_t> basis;  // row-reduced canonical basis
  int rank = 0;

  bool contains(uint32_t m) const {
    if (is_quotient(space.kind)) m = canonical_class(*space.ground, m);
    return reduce_against(m, basis) == 0;
  }
  // Coordinates of m over basis; nullopt if outside the span.
  std::optional<uint32_t> coords(uint32_t m) const {
    if (is_quotient(space.kind)) m = canonical_class(*space.ground, m);
    uint32_t c = 0;
    for (size_t i = 0; i < basis.size(); ++i)
      if (m != 0 && std::bit_width(m) == std::bit_width(basis[i])) {
        m ^= basis[i];
        c |= 1u << i;
      }
    if (m != 0) return std::nullopt;
    return c;
  }
  uint32_t from_coords(uint32_t c) const {
    uint32_t m = 0;
    for (size_t i = 0; i < basis.size(); ++i)
      if (c & (1u << i)) m ^= basis[i];
    return m;
  }
};

inline Subspace span(const Space& space, const std::vector<uint32_t>& generators) {
  Subspace s;
  s.space = space;
  for (uint32_t g : generators) {
    uint32_t m = g;
    if (is_quotient(space.kind)) m = canonical_class(*space.ground, m);
    if (!space.contains(m))
      throw error("span: generator outside ambient " + ambient_name(space.kind));
    s.gens.push_back(m);
  }
  s.basis = row_reduce(s.gens);
  s.rank = (int)s.basis.size();
  return s;
}

// Pairing in the ambient of a subspace: quotient ambients use the induced
// form, plain ambients the intersection count.
inline int space_pairing(const Space& space, uint32_t a, uint32_t b) {
  if (is_quotient(space.kind)) {
    ClassVec x{space.ground, a}, y{space.ground, b};
    return quotient_pairing(x, y);
  }
  return parity(a & b);
}

struct LagrangianReport {
  bool isotropic0 = false, isotropic1 = false;
  bool half_dims = false;
  bool trivial_intersection = false;
  bool dual_iso = false;
  int dim0 = 0, dim1 = 0, ambient_dim = 0;
  bool ok() const {
    return isotropic0 && isotropic1 && half_dims && trivial_intersection && dual_iso;
  }
};

struct DualIdent {
  // matrix[i]: bitmask row of pairings (basis0[i], basis1[j])
  std::vector<uint32_t> matrix;
  bool invertible = false;
};

inline DualIdent dual_identification_raw(const Space& ambient,
                                         const std::vector<uint32_t>& basis0,
                                         const std::vector<uint32_t>& basis1) {
  DualIdent d;
  for (uint32_t x : basis0) {
    uint32_t row = 0;
    for (size_t j = 0; j < basis1.size(); ++j)
      if (space_pairing(ambient, x, basis1[j])) row |= 1u << j;
    d.matrix.push_back(row);
  }
  d.invertible = basis0.size() == basis1.size() &&
                 row_reduce(d.matrix).size() == d.matrix.size();
  return d;
}

inline LagrangianReport is_lagrangian_pair(const Subspace& L0, const Subspace& L1,
                                           const Space& ambient) {
  if (ambient.dim() % 2 != 0)
    throw error("is_lagrangian_pair: ambient dimension is odd");
  LagrangianReport r;
  r.ambient_dim = ambient.dim();
  r.dim0 = L0.rank;
  r.dim1 = L1.rank;
  auto isotropic = [&](const Subspace& L) {
    for (size_t i = 0; i < L.basis.size(); ++i)
      for (size_t j = i; j < L.basis.size(); ++j)
        if (space_pairing(ambient, L.basis[i], L.basis[j])) return false;
    return true;
  };
  r.isotropic0 = isotropic(L0);
  r.isotropic1 = isotropic(L1);
  r.half_dims = (2 * L0.rank == ambient.dim()) && (2 * L1.rank == ambient.dim());
  std::vector<uint32_t> all = L0.basis;
  all.insert(all.end(), L1.basis.begin(), L1.basis.end());
  r.trivial_intersection = (int)row_reduce(all).size() == L0.rank + L1.rank;
  r.dual_iso = dual_identification_raw(ambient, L0.basis, L1.basis).invertible;
  return r;
}

inline DualIdent dual_identification(const Subspace& L0, const Subspace& L1,
                                     const Space& ambient) {
  auto rep = is_lagrangian_pair(L0, L1, ambient);
  if (!rep.ok()) throw error("dual_identification: not an opposed Lagrangian pair");
  return dual_identification_raw(ambient, L0.basis, L1.basis);
}

// Solve M c = t over F2 (square invertible M given as bitmask rows, row i
// dotted with c giving bit i of the product).
inline uint32_t solve_square(const std::vector<uint32_t>& rows_in, uint32_t target) {
  int n = (int)rows_in.size();
  // eliminate on the transpose: combinations of transpose rows satisfy
  // M^T . rhs = e_pivot, so assembling them solves (M^T)^T c = M c = t
  std::vector<uint32_t> rows(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rows_in[i] & (1u << j)) rows[j] |= 1u << i;
  std::vector<uint32_t> rhs(n);
  for (int i = 0; i < n; ++i) rhs[i] = 1u << i;
  std::vector<int> pivot_col(n, -1);
  int row = 0;
  for (int col = 0; col < n && row < n; ++col) {
    int sel = -1;
    for (int i = row; i < n; ++i)
      if (rows[i] & (1u << col)) { sel = i; break; }
    if (sel < 0) continue;
    std::swap(rows[row], rows[sel]);
    std::swap(rhs[row], rhs[sel]);
    for (int i = 0; i < n; ++i)
      if (i != row && (rows[i] & (1u << col))) {
        rows[i] ^= rows[row];
        rhs[i] ^= rhs[row];
      }
    pivot_col[row] = col;
    ++row;
  }
  if (row < n) throw error("solve_square: singular matrix");
  uint32_t c = 0;
  for (int i = 0; i < n; ++i)
    if (target & (1u << pivot_col[i])) c ^= rhs[i];
  return c;
}

}  // namespace sfc::f2
