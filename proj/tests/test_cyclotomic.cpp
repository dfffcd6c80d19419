#include <catch2/catch_amalgamated.hpp>

#include "sfc/cyclotomic.hpp"

using namespace sfc;

TEST_CASE("rationals") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
  CHECK(Rat(1, 2) * Rat(2, 3) == Rat(1, 3));
  CHECK(Rat(1, -2) == Rat(-1, 2));
  CHECK((-Rat(3)).num() == -3);
  CHECK_THROWS_AS(Rat(1, 0), error);
  CHECK_THROWS_AS(Rat(1) / Rat(0), error);
  CHECK(Rat(7, 3).str() == "7/3");
  CHECK(Rat(-4, 2).str() == "-2");
  CHECK(Rat(1, 3) < Rat(1, 2));
}

TEST_CASE("cyclotomic field basics") {
  CHECK(Cyc::deg() == 16);  // phi(60)
  CHECK(Cyc(1) + Cyc(-1) == Cyc(0));
  CHECK((Cyc(Rat(1, 2)) * Cyc(2)).rational_part() == Rat(1));

  // primitive root powers multiply additively in the exponent
  for (int a = 0; a < 60; a += 7)
    for (int b = 0; b < 60; b += 11)
      CHECK(Cyc::root(60, a) * Cyc::root(60, b) == Cyc::root(60, a + b));

  // zeta_n has multiplicative order n
  for (int n : {1, 2, 3, 4, 5, 6, 10, 12, 15, 20, 30, 60}) {
    Cyc z = Cyc::root(n, 1);
    Cyc p(1);
    for (int k = 1; k < n; ++k) {
      p = p * z;
      CHECK(p != Cyc(1));
    }
    CHECK(p * z == Cyc(1));
  }
  CHECK_THROWS_AS(Cyc::root(7, 1), error);
}

TEST_CASE("vanishing sums of roots of unity") {
  for (int n : {2, 3, 4, 5, 6}) {
    Cyc s;
    for (int k = 0; k < n; ++k) s += Cyc::root(n, k);
    CHECK(s == Cyc(0));
  }
}

TEST_CASE("conjugation") {
  for (int n : {3, 4, 5, 6, 60}) {
    Cyc z = Cyc::root(n, 1);
    CHECK(z.conj() == Cyc::root(n, n - 1));
    CHECK((z * z.conj()) == Cyc(1));
    CHECK((z + z.conj()).conj() == z + z.conj());  // real part fixed
  }
  CHECK(Cyc(Rat(5, 7)).conj() == Cyc(Rat(5, 7)));
}

TEST_CASE("golden ratio identity for zeta_5") {
  // (z + z^4) satisfies x^2 + x - 1 = 0
  Cyc x = Cyc::root(5, 1) + Cyc::root(5, 4);
  CHECK(x * x + x - Cyc(1) == Cyc(0));
  CHECK(!x.is_rational());
}

TEST_CASE("i and zeta_6") {
  Cyc i = Cyc::root(4, 1);
  CHECK(i * i == Cyc(-1));
  Cyc w = Cyc::root(6, 1);
  CHECK(w * w - w + Cyc(1) == Cyc(0));
  CHECK(Cyc::root(2, 1) == Cyc(-1));
}
