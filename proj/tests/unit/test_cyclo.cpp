#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>

#include "fusionkit/cyclo.hpp"

using fusionkit::ArithmeticError;
using fusionkit::CycNum;
using fusionkit::Rational;

namespace
{

// Multiply integer polynomials and reduce modulo x^2 + x + 1 by hand.
std::vector<long> mul_mod_phi3(std::vector<long> a, std::vector<long> b)
{
  std::vector<long> prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      prod[i + j] += a[i] * b[j];
  // x^2 = -x - 1
  for (std::size_t k = prod.size() - 1; k >= 2; --k) {
    long c = prod[k];
    prod[k] = 0;
    prod[k - 1] -= c;
    prod[k - 2] -= c;
  }
  prod.resize(2);
  return prod;
}

CycNum random_element(int m, std::mt19937 &rng)
{
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  CycNum a = CycNum::zero(m);
  for (int k = 0; k < m; ++k)
    a += CycNum::root(m, k) * CycNum::rational(m, Rational(num(rng), den(rng)));
  return a;
}

bool close(std::complex<double> a, std::complex<double> b, double tol = 1e-10)
{
  return std::abs(a - b) < tol;
}

}  // namespace

TEST_CASE("roots of unity reduce")
{
  CHECK(CycNum::root(3, 3).is_one());
  CycNum s = CycNum::root(8, 1) + CycNum::root(8, 7);
  CHECK(s * s == CycNum::rational(8, 2));
  CycNum t = CycNum::zero(5);
  for (int k = 0; k < 5; ++k)
    t += CycNum::root(5, k);
  CHECK(t.is_zero());
}

TEST_CASE("field operations on small examples")
{
  CHECK((CycNum::root(3, 1) * CycNum::root(3, 2)).is_one());
  CHECK(CycNum::root(5, 1).inv() == CycNum::root(5, 4));

  auto one = CycNum::one(3);
  CycNum lhs = (one + CycNum::root(3, 1)) * (one + CycNum::root(3, 2));
  auto oracle = mul_mod_phi3({1, 1}, {1, 0, 1});
  CHECK(lhs == CycNum::from_coeffs(3, {Rational(oracle[0]), Rational(oracle[1])}));
  CHECK(lhs.is_one());
}

TEST_CASE("complex conjugation")
{
  CHECK(CycNum::root(8, 1).conj() == CycNum::root(8, 7));
  CHECK(CycNum::rational(8, 2).conj() == CycNum::rational(8, 2));

  CycNum a = CycNum::one(5) + CycNum::root(5, 1);
  CycNum n = a * a.conj();
  CHECK(n.is_rational() == false);  // (1+z)(1+z^4) = 2 + z + z^4 is real but irrational
  CHECK(n == (CycNum::one(5) + CycNum::root(5, 1)) * (CycNum::one(5) + CycNum::root(5, 4)));
  double const c = 2.0 * std::cos(2.0 * std::acos(-1.0) / 5.0);
  CHECK(close(n.to_complex(), {2.0 + c, 0.0}, 1e-12));
}

TEST_CASE("errors")
{
  CHECK_THROWS_AS(CycNum::root(3, 1) + CycNum::root(5, 1), ArithmeticError);
  CHECK_THROWS_AS(CycNum::zero(7).inv(), ArithmeticError);
  CHECK_THROWS_AS(CycNum::zero(0), ArithmeticError);
}

TEST_CASE("zeta_m has order exactly m")
{
  for (int m : {1, 2, 3, 4, 5, 7, 8, 9, 12, 16, 25, 27, 49}) {
    CycNum z = CycNum::root(m, 1);
    CycNum x = z;
    int k = 1;
    while (!x.is_one()) {
      x *= z;
      ++k;
    }
    CHECK(k == m);
    CHECK(z.root_exponent() == 1 % m);
  }
}

TEST_CASE("field axioms on random inputs")
{
  std::mt19937 rng(7);
  for (int m : {3, 5, 7, 8, 9, 12}) {
    for (int trial = 0; trial < 20; ++trial) {
      CycNum a = random_element(m, rng);
      CycNum b = random_element(m, rng);
      CycNum c = random_element(m, rng);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      if (!a.is_zero())
        CHECK((a * a.inv()).is_one());
      for (auto const &q : a.coeffs()) {
        CHECK(sgn(q.get_den()) > 0);
        CHECK(gcd(q.get_num(), q.get_den()) == 1);
      }
      CHECK(static_cast<int>(a.coeffs().size()) == fusionkit::CycContext::get(m).degree);

      // floating-point embedding agrees
      CHECK(close((a * b + c).to_complex(), a.to_complex() * b.to_complex() + c.to_complex()));
      if (!b.is_zero())
        CHECK(close((a / b).to_complex(), a.to_complex() / b.to_complex(), 1e-8));
      CHECK(close(a.conj().to_complex(), std::conj(a.to_complex())));
    }
  }
}

TEST_CASE("cyclotomic degrees")
{
  std::vector<std::pair<int, int>> phi{{1, 1}, {2, 1}, {3, 2}, {4, 2}, {5, 4}, {7, 6},
                                       {8, 4}, {9, 6}, {12, 4}, {16, 8}, {25, 20}, {49, 42}};
  for (auto [m, d] : phi)
    CHECK(fusionkit::CycContext::get(m).degree == d);
}
