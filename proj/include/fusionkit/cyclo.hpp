#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace fusionkit
{

using Rational = mpq_class;

class ArithmeticError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Reduction data for Q(zeta_m): the cyclotomic polynomial and the image of
/// every power zeta^k (0 <= k < m) in the basis 1, zeta, ..., zeta^(phi(m)-1).
struct CycContext
{
  int conductor;
  int degree;                                  // phi(m)
  std::vector<long> phi_poly;                  // monic, low degree first
  std::vector<std::vector<long>> power_basis;  // zeta^k, k in [0, 2*phi)
  std::vector<int> units;                      // (Z/m)^x, sorted

  static CycContext const &get(int m);
};

/**
 * An element of the cyclotomic field Q(zeta_m), stored as its unique
 * representative of degree < phi(m).
 *
 * The zero element keeps an empty coefficient vector internally; `coeffs()`
 * always returns the full length-phi(m) vector.
 */
class CycNum
{
public:
  CycNum() = default;

  static CycNum zero(int m);
  static CycNum one(int m);
  static CycNum root(int m, long k);
  static CycNum rational(int m, Rational const &q);
  static CycNum from_coeffs(int m, std::vector<Rational> coeffs);

  int conductor() const { return m_; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const;
  bool is_rational() const;
  std::vector<Rational> coeffs() const;
  Rational const &coeff(int i) const;

  CycNum operator+(CycNum const &rhs) const;
  CycNum operator-(CycNum const &rhs) const;
  CycNum operator-() const;
  CycNum operator*(CycNum const &rhs) const;
  CycNum operator/(CycNum const &rhs) const { return *this * rhs.inv(); }
  CycNum &operator+=(CycNum const &rhs) { return *this = *this + rhs; }
  CycNum &operator*=(CycNum const &rhs) { return *this = *this * rhs; }

  bool operator==(CycNum const &rhs) const;
  bool operator!=(CycNum const &rhs) const { return !(*this == rhs); }

  CycNum inv() const;
  CycNum pow(long e) const;

  // Galois automorphism zeta -> zeta^k, gcd(k, m) = 1.
  CycNum galois(int k) const;
  // Complex conjugation zeta -> zeta^(m-1).
  CycNum conj() const { return galois(m_ - 1); }

  // If this is zeta^k for some k in [0, m), returns k; otherwise -1.
  int root_exponent() const;

  std::size_t hash() const;
  std::complex<double> to_complex() const;
  std::string to_string() const;

private:
  CycNum(int m, std::vector<Rational> c) : m_(m), c_(std::move(c)) { normalize(); }

  void normalize();
  void check_conductor(CycNum const &rhs) const;

  int m_ = 1;
  std::vector<Rational> c_;
};

std::size_t hash_rational(Rational const &q);

inline std::ostream &operator<<(std::ostream &os, CycNum const &a)
{
  return os << a.to_string();
}

}  // namespace fusionkit
