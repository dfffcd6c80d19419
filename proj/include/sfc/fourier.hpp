#pragma once

#include <map>
#include <string>
#include <vector>

#include "sfc/cyclotomic.hpp"
#include "sfc/groups.hpp"

namespace sfc::grp {

// M(Gamma): pairs (conjugacy class, irreducible character of the
// centralizer of its representative), in deterministic order: classes by
// increasing representative, irreps by the centralizer's table order.
struct MPair {
  int class_index = 0;
  int irrep_index = 0;
};

struct MSet {
  const Group* group = nullptr;
  std::vector<CentralizerChar> cents;  // one per class
  std::vector<MPair> pairs;
};

inline MSet m_set(const Group& g) {
  MSet m;
  m.group = &g;
  for (int c = 0; c < (int)g.classes.size(); ++c)
    m.cents.push_back(centralizer_char(g, g.class_rep[c]));
  for (int c = 0; c < (int)g.classes.size(); ++c)
    for (int r = 0; r < m.cents[c].irrep_count(); ++r) m.pairs.push_back({c, r});
  return m;
}

// Nonabelian Fourier transform pairing:
//   {(x,s),(y,t)} = |Z(x)|^-1 |Z(y)|^-1 *
//                   sum over g with x(gyg^-1) = (gyg^-1)x of
//                   s(gyg^-1) * conj(t(g^-1 x g)).
// Representatives may be replaced by conjugates h x h^-1 provided the
// characters are transported alongside; fourier_pairing_at does exactly that
// so representative independence can be tested.
inline Cyc fourier_pairing_at(const MSet& m, const MPair& p, const MPair& q, int x,
                              int y) {
  const Group& g = *m.group;
  const CentralizerChar& sx = m.cents[p.class_index];
  const CentralizerChar& sy = m.cents[q.class_index];
  int x0 = g.class_rep[p.class_index];
  int y0 = g.class_rep[q.class_index];
  // transporters: x = hx x0 hx^-1, y = hy y0 hy^-1
  auto transporter = [&](int from, int to) {
    for (int h = 0; h < g.n; ++h)
      if (g.mul[g.mul[h][from]][g.inv[h]] == to) return h;
    throw error("fourier_pairing: elements not conjugate");
  };
  int hx = transporter(x0, x);
  int hy = transporter(y0, y);
  Cyc sum;
  for (int e = 0; e < g.n; ++e) {
    int cyc = g.mul[g.mul[e][y]][g.inv[e]];  // g y g^-1
    if (g.mul[x][cyc] != g.mul[cyc][x]) continue;
    // evaluate s at hx^-1 (g y g^-1) hx in Z(x0), t at hy^-1 (g^-1 x g) hy
    int a = g.mul[g.mul[g.inv[hx]][cyc]][hx];
    int xc = g.mul[g.mul[g.inv[e]][x]][e];
    int b = g.mul[g.mul[g.inv[hy]][xc]][hy];
    sum += sx.eval(p.irrep_index, a) * sy.eval(q.irrep_index, b).conj();
  }
  long long zx = (long long)sx.sub.elements.size();
  long long zy = (long long)sy.sub.elements.size();
  return Rat(1, zx * zy) * sum;
}

inline Cyc fourier_pairing(const MSet& m, const MPair& p, const MPair& q) {
  const Group& g = *m.group;
  return fourier_pairing_at(m, p, q, g.class_rep[p.class_index],
                            g.class_rep[q.class_index]);
}

inline std::vector<std::vector<Cyc>> fourier_matrix(const MSet& m) {
  int sz = (int)m.pairs.size();
  std::vector<std::vector<Cyc>> s(sz, std::vector<Cyc>(sz));
  for (int i = 0; i < sz; ++i)
    for (int j = 0; j < sz; ++j) s[i][j] = fourier_pairing(m, m.pairs[i], m.pairs[j]);
  return s;
}

struct FourierChecks {
  bool unitary = false;
  bool hermitian = false;
  bool square_is_permutation = false;
  bool real_symmetric = false;
  bool square_is_identity = false;
  long long m_size = 0;
};

inline FourierChecks fourier_matrix_checks(const std::vector<std::vector<Cyc>>& s) {
  FourierChecks fc;
  int n = (int)s.size();
  fc.m_size = n;
  fc.unitary = true;
  fc.hermitian = true;
  fc.real_symmetric = true;
  for (int i = 0; i < n && fc.hermitian; ++i)
    for (int j = 0; j < n; ++j) {
      if (s[i][j] != s[j][i].conj()) { fc.hermitian = false; break; }
    }
  for (int i = 0; i < n && fc.real_symmetric; ++i)
    for (int j = 0; j < n; ++j) {
      // real means fixed by complex conjugation, not rational
      if (s[i][j] != s[i][j].conj() || s[i][j] != s[j][i]) {
        fc.real_symmetric = false;
        break;
      }
    }
  std::vector<std::vector<Cyc>> sq(n, std::vector<Cyc>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Cyc su, sc;
      for (int k = 0; k < n; ++k) {
        su += s[i][k] * s[j][k].conj();  // S conj(S)^T
        sc += s[i][k] * s[k][j];         // S^2
      }
      if (su != (i == j ? Cyc(1) : Cyc(0))) fc.unitary = false;
      sq[i][j] = sc;
    }
  fc.square_is_permutation = true;
  fc.square_is_identity = true;
  for (int i = 0; i < n; ++i) {
    int ones = 0;
    for (int j = 0; j < n; ++j) {
      const Cyc& v = sq[i][j];
      if (v == Cyc(1)) {
        ++ones;
        if (i != j) fc.square_is_identity = false;
      } else if (!(v == Cyc(0))) {
        fc.square_is_permutation = false;
        fc.square_is_identity = false;
      }
    }
    if (ones != 1) fc.square_is_permutation = false;
  }
  return fc;
}

}  // namespace sfc::grp
