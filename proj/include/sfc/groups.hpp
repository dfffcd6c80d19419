#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sfc/cyclotomic.hpp"
#include "sfc/rational.hpp"

namespace sfc::grp {

// Finite groups, desk scale: the catalog needed by the exceptional tables
// and the pairing checks.  Elements are indices into a multiplication table;
// groups built from permutations keep the permutations around so classes can
// be keyed by cycle type.

struct Group {
  std::string name;
  int n = 0;
  std::vector<std::vector<int>> mul;
  std::vector<int> inv;
  std::vector<int> order_of;
  std::vector<std::vector<int>> perms;  // optional, aligned with elements
  std::vector<int> gens;                // generator element indices
  std::vector<std::pair<int, int>> bfs_parent;  // (parent, gen position), identity: (-1,-1)

  std::vector<std::vector<int>> classes;  // each sorted; classes sorted by min
  std::vector<int> class_of;
  std::vector<int> class_rep;

  std::vector<std::string> irrep_names;
  std::vector<std::vector<Cyc>> chi;  // rows: irreps, cols: classes

  bool abelian = false;

  int irrep_count() const { return (int)chi.size(); }
  // identity element is index 0 and its class is the first one
  int irrep_dim(int r) const { return (int)chi[r][class_of[0]].rational_part().num(); }
};

inline std::vector<int> compose(const std::vector<int>& p, const std::vector<int>& q) {
  std::vector<int> r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

inline void finish_group(Group& g) {
  int n = g.n;
  g.inv.assign(n, -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (g.mul[x][y] == 0) g.inv[x] = y;
  g.order_of.assign(n, 0);
  for (int x = 0; x < n; ++x) {
    int e = x, k = 1;
    while (e != 0) {
      e = g.mul[e][x];
      ++k;
    }
    g.order_of[x] = k;
  }
  g.abelian = true;
  for (int x = 0; x < n && g.abelian; ++x)
    for (int y = 0; y < n; ++y)
      if (g.mul[x][y] != g.mul[y][x]) { g.abelian = false; break; }
  // conjugacy classes
  g.class_of.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    if (g.class_of[x] >= 0) continue;
    std::set<int> orb;
    for (int h = 0; h < n; ++h) orb.insert(g.mul[g.mul[h][x]][g.inv[h]]);
    int c = (int)g.classes.size();
    g.classes.emplace_back(orb.begin(), orb.end());
    for (int e : orb) g.class_of[e] = c;
  }
  std::sort(g.classes.begin(), g.classes.end());
  g.class_of.assign(n, -1);
  g.class_rep.clear();
  for (int c = 0; c < (int)g.classes.size(); ++c) {
    g.class_rep.push_back(g.classes[c].front());
    for (int e : g.classes[c]) g.class_of[e] = c;
  }
}

inline Group make_perm_group(const std::string& name,
                             std::vector<std::vector<int>> gen_perms, int degree) {
  Group g;
  g.name = name;
  std::vector<int> id(degree);
  for (int i = 0; i < degree; ++i) id[i] = i;
  std::map<std::vector<int>, int> index;
  g.perms.push_back(id);
  index[id] = 0;
  g.bfs_parent.push_back({-1, -1});
  for (size_t head = 0; head < g.perms.size(); ++head) {
    for (size_t k = 0; k < gen_perms.size(); ++k) {
      auto next = compose(g.perms[head], gen_perms[k]);  // head * gen
      if (!index.count(next)) {
        index[next] = (int)g.perms.size();
        g.perms.push_back(next);
        g.bfs_parent.push_back({(int)head, (int)k});
      }
    }
  }
  g.n = (int)g.perms.size();
  g.mul.assign(g.n, std::vector<int>(g.n));
  for (int x = 0; x < g.n; ++x)
    for (int y = 0; y < g.n; ++y)
      g.mul[x][y] = index.at(compose(g.perms[x], g.perms[y]));
  for (auto& gp : gen_perms) g.gens.push_back(index.at(gp));
  finish_group(g);
  return g;
}

inline Group make_product(const std::string& name, const Group& A, const Group& B) {
  Group g;
  g.name = name;
  g.n = A.n * B.n;
  auto idx = [&](int a, int b) { return a * B.n + b; };
  g.mul.assign(g.n, std::vector<int>(g.n));
  for (int a = 0; a < A.n; ++a)
    for (int b = 0; b < B.n; ++b)
      for (int c = 0; c < A.n; ++c)
        for (int d = 0; d < B.n; ++d)
          g.mul[idx(a, b)][idx(c, d)] = idx(A.mul[a][c], B.mul[b][d]);
  for (int a : A.gens) g.gens.push_back(idx(a, 0));
  for (int b : B.gens) g.gens.push_back(idx(0, b));
  // product has no permutation model or BFS words; provide words lazily in
  // iso search via generic closure instead
  finish_group(g);
  // tensor character table
  for (int ra = 0; ra < A.irrep_count(); ++ra)
    for (int rb = 0; rb < B.irrep_count(); ++rb) {
      std::vector<Cyc> row;
      for (int c = 0; c < (int)g.classes.size(); ++c) {
        int rep = g.class_rep[c];
        int a = rep / B.n, b = rep % B.n;
        row.push_back(A.chi[ra][A.class_of[a]] * B.chi[rb][B.class_of[b]]);
      }
      g.chi.push_back(std::move(row));
      g.irrep_names.push_back(A.irrep_names[ra] + "*" + B.irrep_names[rb]);
    }
  return g;
}

// ---------------------------------------------------------------------------
// character tables

inline std::vector<int> cycle_type(const std::vector<int>& p) {
  std::vector<bool> seen(p.size(), false);
  std::vector<int> t;
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = p[j];
      ++len;
    }
    t.push_back(len);
  }
  std::sort(t.rbegin(), t.rend());
  return t;
}

// Assign rows keyed by cycle type of the class representatives.
inline void assign_symmetric_table(
    Group& g, const std::vector<std::pair<std::string, std::map<std::vector<int>, long long>>>& rows) {
  for (auto& [name, values] : rows) {
    std::vector<Cyc> row;
    for (int c = 0; c < (int)g.classes.size(); ++c) {
      auto t = cycle_type(g.perms[g.class_rep[c]]);
      row.push_back(Cyc(values.at(t)));
    }
    g.chi.push_back(std::move(row));
    g.irrep_names.push_back(name);
  }
}

inline Group make_trivial() {
  Group g;
  g.name = "trivial";
  g.n = 1;
  g.mul = {{0}};
  finish_group(g);
  g.chi = {{Cyc(1)}};
  g.irrep_names = {"1"};
  return g;
}

inline Group make_cyclic(int n, const std::string& name) {
  std::vector<int> rot(n);
  for (int i = 0; i < n; ++i) rot[i] = (i + 1) % n;
  Group g = make_perm_group(name, {rot}, n);
  // element k is the k-th power of the generator; classes are singletons in
  // element order
  for (int j = 0; j < n; ++j) {
    std::vector<Cyc> row;
    for (int c = 0; c < (int)g.classes.size(); ++c) {
      int k = g.class_rep[c];
      row.push_back(Cyc::root(n, (long long)j * k));
    }
    g.chi.push_back(std::move(row));
    g.irrep_names.push_back(j == 0 ? "1" : "chi" + std::to_string(j));
  }
  return g;
}

inline Group make_symmetric(int n) {
  std::vector<int> t(n), c(n);
  for (int i = 0; i < n; ++i) t[i] = c[i] = i;
  std::swap(t[0], t[1]);
  for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
  Group g = n == 2 ? make_perm_group("S2", {t}, n)
                   : make_perm_group("S" + std::to_string(n), {t, c}, n);
  using CT = std::map<std::vector<int>, long long>;
  if (n == 2) {
    assign_symmetric_table(g, {{"1", CT{{{1, 1}, 1}, {{2}, 1}}},
                               {"eps", CT{{{1, 1}, 1}, {{2}, -1}}}});
  } else if (n == 3) {
    assign_symmetric_table(
        g, {{"1", CT{{{1, 1, 1}, 1}, {{2, 1}, 1}, {{3}, 1}}},
            {"r", CT{{{1, 1, 1}, 2}, {{2, 1}, 0}, {{3}, -1}}},
            {"eps", CT{{{1, 1, 1}, 1}, {{2, 1}, -1}, {{3}, 1}}}});
  } else if (n == 4) {
    CT e1{{{1, 1, 1, 1}, 1}, {{2, 1, 1}, 1}, {{2, 2}, 1}, {{3, 1}, 1}, {{4}, 1}};
    CT l1{{{1, 1, 1, 1}, 3}, {{2, 1, 1}, 1}, {{2, 2}, -1}, {{3, 1}, 0}, {{4}, -1}};
    CT l2{{{1, 1, 1, 1}, 3}, {{2, 1, 1}, -1}, {{2, 2}, -1}, {{3, 1}, 0}, {{4}, 1}};
    CT sg{{{1, 1, 1, 1}, 2}, {{2, 1, 1}, 0}, {{2, 2}, 2}, {{3, 1}, -1}, {{4}, 0}};
    CT ep{{{1, 1, 1, 1}, 1}, {{2, 1, 1}, -1}, {{2, 2}, 1}, {{3, 1}, 1}, {{4}, -1}};
    assign_symmetric_table(
        g, {{"1", e1}, {"lambda1", l1}, {"lambda2", l2}, {"sigma", sg}, {"eps", ep}});
  } else if (n == 5) {
    auto row = [](long long a, long long b, long long c2, long long d, long long e,
                  long long f, long long h) {
      return CT{{{1, 1, 1, 1, 1}, a}, {{2, 1, 1, 1}, b}, {{2, 2, 1}, c2},
                {{3, 1, 1}, d},       {{3, 2}, e},       {{4, 1}, f},
                {{5}, h}};
    };
    assign_symmetric_table(g, {{"1", row(1, 1, 1, 1, 1, 1, 1)},
                               {"nu", row(5, 1, 1, -1, 1, -1, 0)},
                               {"lambda1", row(4, 2, 0, 1, -1, 0, -1)},
                               {"nuprime", row(5, -1, 1, -1, -1, 1, 0)},
                               {"lambda2", row(6, 0, -2, 0, 0, 0, 1)},
                               {"lambda3", row(4, -2, 0, 1, 1, 0, -1)},
                               {"eps", row(1, -1, 1, 1, -1, -1, 1)}});
  } else {
    throw error("make_symmetric: unsupported degree");
  }
  return g;
}

inline Group make_dihedral8() {
  // symmetries of the square 0-1-2-3: rotation and a diagonal reflection
  std::vector<int> r{1, 2, 3, 0};
  std::vector<int> s{0, 3, 2, 1};
  Group g = make_perm_group("D8", {r, s}, 4);
  // keyed by (element order, class size, fixed points)
  auto key_of = [&](int c) {
    auto& p = g.perms[g.class_rep[c]];
    int fix = 0;
    for (size_t i = 0; i < p.size(); ++i)
      if (p[i] == (int)i) ++fix;
    return std::tuple<int, int, int>(g.order_of[g.class_rep[c]],
                                     (int)g.classes[c].size(), fix);
  };
  using Key = std::tuple<int, int, int>;
  std::vector<std::pair<std::string, std::map<Key, long long>>> rows = {
      {"1",
       {{{1, 1, 4}, 1}, {{2, 1, 0}, 1}, {{4, 2, 0}, 1}, {{2, 2, 2}, 1}, {{2, 2, 0}, 1}}},
      {"sgn_s",
       {{{1, 1, 4}, 1}, {{2, 1, 0}, 1}, {{4, 2, 0}, 1}, {{2, 2, 2}, -1}, {{2, 2, 0}, -1}}},
      {"sgn_r",
       {{{1, 1, 4}, 1}, {{2, 1, 0}, 1}, {{4, 2, 0}, -1}, {{2, 2, 2}, 1}, {{2, 2, 0}, -1}}},
      {"sgn_rs",
       {{{1, 1, 4}, 1}, {{2, 1, 0}, 1}, {{4, 2, 0}, -1}, {{2, 2, 2}, -1}, {{2, 2, 0}, 1}}},
      {"rho",
       {{{1, 1, 4}, 2}, {{2, 1, 0}, -2}, {{4, 2, 0}, 0}, {{2, 2, 2}, 0}, {{2, 2, 0}, 0}}},
  };
  for (auto& [name, values] : rows) {
    std::vector<Cyc> row;
    for (int c = 0; c < (int)g.classes.size(); ++c) row.push_back(Cyc(values.at(key_of(c))));
    g.chi.push_back(std::move(row));
    g.irrep_names.push_back(name);
  }
  return g;
}

// The catalog, built once.
inline const std::map<std::string, std::shared_ptr<const Group>>& catalog() {
  static const auto table = [] {
    std::map<std::string, std::shared_ptr<const Group>> m;
    auto put = [&](Group g) {
      std::string key = g.name;
      m[key] = std::make_shared<const Group>(std::move(g));
    };
    put(make_trivial());
    put(make_symmetric(2));
    put(make_symmetric(3));
    put(make_symmetric(4));
    put(make_symmetric(5));
    for (int k = 2; k <= 6; ++k) put(make_cyclic(k, "C" + std::to_string(k)));
    put(make_dihedral8());
    {
      Group z = make_cyclic(2, "C2");
      Group cur = z;
      cur.name = "Z2^1";
      put(cur);
      Group z2 = make_product("Z2^2", z, z);
      put(z2);
      Group z3 = make_product("Z2^3", z2, z);
      put(z3);
      put(make_product("Z2^4", z3, z));
      Group s2 = make_symmetric(2);
      put(make_product("S2xS2", s2, s2));
      put(make_product("S2xS3", s2, make_symmetric(3)));
    }
    return m;
  }();
  return table;
}

inline const Group& group_table(const std::string& name) {
  auto it = catalog().find(name);
  if (it == catalog().end()) throw error("group_table: unsupported group " + name);
  return *it->second;
}

// ---------------------------------------------------------------------------
// centralizers and their identification with catalog members

struct Subgroup {
  const Group* ambient = nullptr;
  std::vector<int> elements;        // ambient indices, sorted
  std::vector<int> pos_of;          // ambient index -> position or -1
  std::vector<std::vector<int>> mul;  // positions
  std::vector<int> order_of;

  int pos(int ambient_elt) const {
    int p = pos_of[ambient_elt];
    if (p < 0) throw error("Subgroup: element outside subgroup");
    return p;
  }
};

inline Subgroup centralizer(const Group& g, int x) {
  Subgroup s;
  s.ambient = &g;
  for (int h = 0; h < g.n; ++h)
    if (g.mul[h][x] == g.mul[x][h]) s.elements.push_back(h);
  s.pos_of.assign(g.n, -1);
  for (size_t i = 0; i < s.elements.size(); ++i) s.pos_of[s.elements[i]] = (int)i;
  int m = (int)s.elements.size();
  s.mul.assign(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      s.mul[i][j] = s.pos_of[g.mul[s.elements[i]][s.elements[j]]];
  s.order_of.assign(m, 0);
  for (int i = 0; i < m; ++i) {
    int e = i, k = 1;
    while (e != 0) {
      e = s.mul[e][i];
      ++k;
    }
    s.order_of[i] = k;
  }
  return s;
}

// Isomorphism K -> H by mapping generators and closing multiplicatively.
inline std::optional<std::vector<int>> find_iso(const Group& K, const Subgroup& H) {
  int n = K.n;
  if ((int)H.elements.size() != n) return std::nullopt;
  // candidate images per generator, filtered by element order
  std::vector<std::vector<int>> cands;
  for (int gidx : K.gens) {
    std::vector<int> c;
    for (int h = 0; h < n; ++h)
      if (H.order_of[h] == K.order_of[gidx]) c.push_back(h);
    if (c.empty()) return std::nullopt;
    cands.push_back(c);
  }
  if (K.gens.empty()) return std::vector<int>{0};
  std::vector<int> pick(K.gens.size(), 0);
  std::vector<int> map(n, -1);
  auto attempt = [&]() -> bool {
    std::fill(map.begin(), map.end(), -1);
    map[0] = 0;
    // close over products until stable
    std::vector<int> known{0};
    for (size_t k = 0; k < K.gens.size(); ++k) {
      if (map[K.gens[k]] >= 0) {
        if (map[K.gens[k]] != pick[k]) return false;
        continue;
      }
      map[K.gens[k]] = pick[k];
      known.push_back(K.gens[k]);
    }
    bool grew = true;
    while (grew) {
      grew = false;
      for (size_t i = 0; i < known.size(); ++i)
        for (size_t j = 0; j < known.size(); ++j) {
          int prod = K.mul[known[i]][known[j]];
          int img = H.mul[map[known[i]]][map[known[j]]];
          if (map[prod] < 0) {
            map[prod] = img;
            known.push_back(prod);
            grew = true;
          } else if (map[prod] != img) {
            return false;
          }
        }
    }
    if ((int)known.size() != n) return false;
    std::vector<bool> hit(n, false);
    for (int v : map) {
      if (v < 0 || hit[v]) return false;
      hit[v] = true;
    }
    return true;
  };
  // odometer over candidate tuples
  std::vector<size_t> at(K.gens.size(), 0);
  while (true) {
    for (size_t k = 0; k < at.size(); ++k) pick[k] = cands[k][at[k]];
    if (attempt()) return map;
    size_t k = 0;
    while (k < at.size()) {
      if (++at[k] < cands[k].size()) break;
      at[k] = 0;
      ++k;
    }
    if (k == at.size()) return std::nullopt;
  }
}

struct CentralizerChar {
  Subgroup sub;
  const Group* model = nullptr;   // catalog group
  std::vector<int> to_model;      // subgroup position -> model element
  std::string model_name;

  int irrep_count() const { return model->irrep_count(); }
  // evaluate irrep r at an ambient element (must lie in the subgroup)
  Cyc eval(int r, int ambient_elt) const {
    int p = sub.pos(ambient_elt);
    return model->chi[r][model->class_of[to_model[p]]];
  }
  Cyc dim(int r) const { return model->chi[r][model->class_of[0]]; }
};

inline CentralizerChar centralizer_char(const Group& g, int x) {
  CentralizerChar cc;
  cc.sub = centralizer(g, x);
  int m = (int)cc.sub.elements.size();
  if (m == g.n) {
    // the whole group: must itself be a catalog member
    cc.model = &g;
    cc.model_name = g.name;
    cc.to_model.resize(m);
    for (int i = 0; i < m; ++i) cc.to_model[i] = cc.sub.elements[i];
    return cc;
  }
  // candidates of the right order, deterministic preference order
  static const std::vector<std::string> preference = {
      "trivial", "S2", "S3", "S4", "S5", "C2", "C3", "C4", "C5", "C6",
      "Z2^2",    "Z2^3", "Z2^4", "D8", "S2xS2", "S2xS3"};
  for (const auto& name : preference) {
    const Group& K = group_table(name);
    if (K.n != m) continue;
    auto iso = find_iso(K, cc.sub);
    if (!iso) continue;
    cc.model = &K;
    cc.model_name = name;
    // iso maps K -> subgroup positions; invert
    cc.to_model.assign(m, -1);
    for (int k = 0; k < K.n; ++k) cc.to_model[(*iso)[k]] = k;
    return cc;
  }
  throw error("centralizer_char: centralizer of order " + std::to_string(m) +
              " not recognized in the catalog");
}

// exact row and column orthogonality for a catalog table
struct OrthoReport {
  bool rows_ok = true, cols_ok = true;
  bool ok() const { return rows_ok && cols_ok; }
};

inline OrthoReport check_orthogonality(const Group& g) {
  OrthoReport r;
  int k = (int)g.classes.size();
  for (int a = 0; a < g.irrep_count(); ++a)
    for (int b = 0; b < g.irrep_count(); ++b) {
      Cyc sum;
      for (int c = 0; c < k; ++c) {
        Cyc term = g.chi[a][c] * g.chi[b][c].conj();
        sum += Rat((long long)g.classes[c].size()) * term;
      }
      Cyc want = a == b ? Cyc(g.n) : Cyc(0);
      if (sum != want) r.rows_ok = false;
    }
  for (int c = 0; c < k; ++c)
    for (int d = 0; d < k; ++d) {
      Cyc sum;
      for (int a = 0; a < g.irrep_count(); ++a) sum += g.chi[a][c] * g.chi[a][d].conj();
      Cyc want = c == d ? Cyc(Rat(g.n, (long long)g.classes[c].size())) : Cyc(0);
      if (sum != want) r.cols_ok = false;
    }
  return r;
}

}  // namespace sfc::grp
