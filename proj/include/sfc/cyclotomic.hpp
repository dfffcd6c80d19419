#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "sfc/rational.hpp"

namespace sfc {

// Exact arithmetic in the cyclotomic field Q(zeta_60), i.e. Q[x]/Phi_60(x).
// Conductor 60 covers every root of unity the group catalog can produce
// (element orders 1..6 in the centralizers that occur).  Elements are kept
// in canonical reduced form on the power basis 1, x, ..., x^(deg-1), so
// equality is plain coefficient comparison.
class Cyc {
 public:
  static constexpr int kConductor = 60;

  Cyc() { c_.assign(deg(), Rat(0)); }
  Cyc(const Rat& r) {
    c_.assign(deg(), Rat(0));
    c_[0] = r;
  }
  Cyc(long long n) : Cyc(Rat(n)) {}

  // zeta_n^k for n | 60.
  static Cyc root(int n, long long k) {
    if (n <= 0 || kConductor % n != 0) throw error("Cyc: conductor must divide 60");
    long long e = ((k % n) + n) % n * (kConductor / n);
    Cyc out;
    const auto& p = power(e % kConductor);
    for (int i = 0; i < deg(); ++i) out.c_[i] = Rat(p[i]);
    return out;
  }

  static int deg() { return (int)phi().size() - 1; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (!x.is_zero()) return false;
    return true;
  }
  bool is_rational() const {
    for (int i = 1; i < deg(); ++i)
      if (!c_[i].is_zero()) return false;
    return true;
  }
  Rat rational_part() const {
    if (!is_rational()) throw error("Cyc: not rational");
    return c_[0];
  }
  const std::vector<Rat>& coeffs() const { return c_; }

  friend Cyc operator+(const Cyc& a, const Cyc& b) {
    Cyc r;
    for (int i = 0; i < deg(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
  }
  friend Cyc operator-(const Cyc& a, const Cyc& b) {
    Cyc r;
    for (int i = 0; i < deg(); ++i) r.c_[i] = a.c_[i] - b.c_[i];
    return r;
  }
  Cyc operator-() const {
    Cyc r;
    for (int i = 0; i < deg(); ++i) r.c_[i] = -c_[i];
    return r;
  }
  friend Cyc operator*(const Cyc& a, const Cyc& b) {
    std::vector<Rat> conv(2 * deg() - 1, Rat(0));
    for (int i = 0; i < deg(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (int j = 0; j < deg(); ++j) {
        if (b.c_[j].is_zero()) continue;
        conv[i + j] += a.c_[i] * b.c_[j];
      }
    }
    Cyc r;
    for (int e = 0; e < (int)conv.size(); ++e) {
      if (conv[e].is_zero()) continue;
      if (e < deg()) {
        r.c_[e] += conv[e];
      } else {
        const auto& p = power(e);
        for (int i = 0; i < deg(); ++i) r.c_[i] += conv[e] * Rat(p[i]);
      }
    }
    return r;
  }
  friend Cyc operator*(const Rat& s, const Cyc& a) {
    Cyc r;
    for (int i = 0; i < deg(); ++i) r.c_[i] = s * a.c_[i];
    return r;
  }
  Cyc& operator+=(const Cyc& o) { return *this = *this + o; }
  Cyc& operator-=(const Cyc& o) { return *this = *this - o; }
  Cyc& operator*=(const Cyc& o) { return *this = *this * o; }

  friend bool operator==(const Cyc& a, const Cyc& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

  // Complex conjugation, zeta -> zeta^-1.
  Cyc conj() const {
    Cyc r;
    for (int i = 0; i < deg(); ++i) {
      if (c_[i].is_zero()) continue;
      const auto& p = power((kConductor - i) % kConductor);
      for (int j = 0; j < deg(); ++j) r.c_[j] += c_[i] * Rat(p[j]);
    }
    return r;
  }

  std::string str() const {
    if (is_rational()) return c_[0].str();
    std::string s;
    bool first = true;
    for (int i = 0; i < deg(); ++i) {
      if (c_[i].is_zero()) continue;
      if (!first) s += " + ";
      first = false;
      s += c_[i].str();
      if (i > 0) s += "*z60^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
  }

 private:
  // Phi_60 computed once by dividing x^60-1 by the cyclotomic polynomials of
  // the proper divisors.
  static const std::vector<long long>& phi() {
    static const std::vector<long long> p = compute_phi(kConductor);
    return p;
  }
  // x^e mod Phi_60, integer coefficients, e in [0, 2*deg-2].
  static const std::vector<long long>& power(int e) {
    static const std::vector<std::vector<long long>> tab = power_table();
    return tab[e];
  }

  static std::vector<long long> compute_phi(int n) {
    // x^n - 1 = prod_{d | n} Phi_d.
    std::vector<std::vector<long long>> phis(n + 1);
    for (int d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      std::vector<long long> num(d + 1, 0);
      num[0] = -1;
      num[d] = 1;
      for (int e = 1; e < d; ++e) {
        if (d % e != 0 || phis[e].empty()) continue;
        num = poly_div_exact(num, phis[e]);
      }
      phis[d] = num;
    }
    return phis[n];
  }
  static std::vector<long long> poly_div_exact(std::vector<long long> num,
                                               const std::vector<long long>& den) {
    int dn = (int)num.size() - 1, dd = (int)den.size() - 1;
    std::vector<long long> q(dn - dd + 1, 0);
    for (int i = dn; i >= dd; --i) {
      long long c = num[i] / den[dd];
      q[i - dd] = c;
      if (c == 0) continue;
      for (int j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    for (long long v : num)
      if (v != 0) throw error("Cyc: inexact cyclotomic division");
    return q;
  }
  static std::vector<std::vector<long long>> power_table() {
    const auto& p = phi();
    int d = (int)p.size() - 1;
    int count = 2 * d;  // enough for products and conjugation (< 60 handled via reduction chain)
    count = kConductor > count ? kConductor : count;
    std::vector<std::vector<long long>> tab(count);
    tab[0].assign(d, 0);
    tab[0][0] = 1;
    for (int e = 1; e < count; ++e) {
      std::vector<long long> v(d + 1, 0);
      for (int i = 0; i < d; ++i) v[i + 1] = tab[e - 1][i];
      // reduce degree-d term via x^d = -(p[0] + ... + p[d-1] x^{d-1})
      long long top = v[d];
      std::vector<long long> r(d, 0);
      for (int i = 0; i < d; ++i) r[i] = v[i] - top * p[i];
      tab[e] = r;
    }
    return tab;
  }

  std::vector<Rat> c_;
};

}  // namespace sfc
