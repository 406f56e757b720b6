#include "fusionkit/cyclo.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace fusionkit
{

namespace
{

// Exact division of integer polynomials (low degree first); divisor monic.
std::vector<long> poly_divide(std::vector<long> num, std::vector<long> const &den)
{
  int const dn = static_cast<int>(den.size()) - 1;
  int const nn = static_cast<int>(num.size()) - 1;
  std::vector<long> q(nn - dn + 1, 0);
  for (int i = nn; i >= dn; --i) {
    long const c = num[i];
    q[i - dn] = c;
    if (c == 0)
      continue;
    for (int j = 0; j <= dn; ++j)
      num[i - dn + j] -= c * den[j];
  }
  for (int i = 0; i < dn; ++i) {
    if (num[i] != 0)
      throw ArithmeticError("cyclotomic polynomial division left a remainder");
  }
  return q;
}

std::unique_ptr<CycContext> build_context(int m)
{
  auto ctx = std::make_unique<CycContext>();
  ctx->conductor = m;

  // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d
  std::vector<long> poly(m + 1, 0);
  poly[0] = -1;
  poly[m] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d == 0)
      poly = poly_divide(poly, CycContext::get(d).phi_poly);
  }
  ctx->phi_poly = poly;
  ctx->degree = static_cast<int>(poly.size()) - 1;

  int const phi = ctx->degree;
  int const npow = std::max(m, 2 * phi);
  ctx->power_basis.assign(npow, std::vector<long>(phi, 0));
  std::vector<long> cur(phi, 0);
  cur[0] = 1;
  for (int k = 0; k < npow; ++k) {
    ctx->power_basis[k] = cur;
    // multiply by x and reduce x^phi
    long const top = cur[phi - 1];
    for (int i = phi - 1; i > 0; --i)
      cur[i] = cur[i - 1];
    cur[0] = 0;
    for (int i = 0; i < phi; ++i)
      cur[i] -= top * ctx->phi_poly[i];
  }

  for (int k = 1; k <= m; ++k) {
    if (std::gcd(k % m, m) == 1)
      ctx->units.push_back(k % m);
  }
  std::sort(ctx->units.begin(), ctx->units.end());
  return ctx;
}

}  // namespace

CycContext const &CycContext::get(int m)
{
  if (m < 1)
    throw ArithmeticError("conductor must be positive");

  static std::mutex mtx;
  static std::map<int, std::unique_ptr<CycContext>> cache;

  {
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(m);
    if (it != cache.end())
      return *it->second;
  }
  // Building recursively needs the smaller contexts, so build unlocked.
  auto ctx = build_context(m);
  std::lock_guard<std::mutex> lock(mtx);
  auto [it, inserted] = cache.emplace(m, std::move(ctx));
  return *it->second;
}

std::size_t hash_rational(Rational const &q)
{
  auto limb_hash = [](mpz_srcptr z) {
    std::size_t h = static_cast<std::size_t>(mpz_size(z)) * 0x9e3779b97f4a7c15ULL;
    h ^= static_cast<std::size_t>(mpz_sgn(z) + 1);
    if (mpz_size(z) > 0)
      h ^= std::hash<mp_limb_t>{}(mpz_getlimbn(z, 0)) + 0x7f4a7c15 + (h << 6) + (h >> 2);
    return h;
  };
  std::size_t h = limb_hash(q.get_num_mpz_t());
  h ^= limb_hash(q.get_den_mpz_t()) * 31 + (h << 6) + (h >> 2);
  return h;
}

CycNum CycNum::zero(int m)
{
  CycContext::get(m);
  CycNum r;
  r.m_ = m;
  return r;
}

CycNum CycNum::one(int m) { return root(m, 0); }

CycNum CycNum::root(int m, long k)
{
  auto const &ctx = CycContext::get(m);
  long e = k % m;
  if (e < 0)
    e += m;
  auto const &pb = ctx.power_basis[e];
  std::vector<Rational> c(ctx.degree);
  for (int i = 0; i < ctx.degree; ++i)
    c[i] = pb[i];
  return CycNum(m, std::move(c));
}

CycNum CycNum::rational(int m, Rational const &q)
{
  auto const &ctx = CycContext::get(m);
  std::vector<Rational> c(ctx.degree);
  c[0] = q;
  c[0].canonicalize();
  return CycNum(m, std::move(c));
}

CycNum CycNum::from_coeffs(int m, std::vector<Rational> coeffs)
{
  auto const &ctx = CycContext::get(m);
  if (static_cast<int>(coeffs.size()) != ctx.degree)
    throw ArithmeticError("coefficient vector length must equal phi(m)");
  for (auto &q : coeffs)
    q.canonicalize();
  return CycNum(m, std::move(coeffs));
}

void CycNum::normalize()
{
  for (auto const &q : c_) {
    if (sgn(q) != 0)
      return;
  }
  c_.clear();
}

void CycNum::check_conductor(CycNum const &rhs) const
{
  if (m_ != rhs.m_)
    throw ArithmeticError("conductor mismatch: " + std::to_string(m_) + " vs " +
                          std::to_string(rhs.m_));
}

bool CycNum::is_one() const
{
  if (c_.empty() || c_[0] != 1)
    return false;
  for (std::size_t i = 1; i < c_.size(); ++i) {
    if (sgn(c_[i]) != 0)
      return false;
  }
  return true;
}

bool CycNum::is_rational() const
{
  for (std::size_t i = 1; i < c_.size(); ++i) {
    if (sgn(c_[i]) != 0)
      return false;
  }
  return true;
}

std::vector<Rational> CycNum::coeffs() const
{
  if (!c_.empty())
    return c_;
  return std::vector<Rational>(CycContext::get(m_).degree);
}

Rational const &CycNum::coeff(int i) const
{
  static Rational const zero_q(0);
  return c_.empty() ? zero_q : c_.at(i);
}

CycNum CycNum::operator+(CycNum const &rhs) const
{
  check_conductor(rhs);
  if (c_.empty())
    return rhs;
  if (rhs.c_.empty())
    return *this;
  std::vector<Rational> c(c_.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = c_[i] + rhs.c_[i];
  return CycNum(m_, std::move(c));
}

CycNum CycNum::operator-(CycNum const &rhs) const { return *this + (-rhs); }

CycNum CycNum::operator-() const
{
  CycNum r = *this;
  for (auto &q : r.c_)
    q = -q;
  return r;
}

CycNum CycNum::operator*(CycNum const &rhs) const
{
  check_conductor(rhs);
  if (c_.empty() || rhs.c_.empty())
    return zero(m_);

  auto const &ctx = CycContext::get(m_);
  int const phi = ctx.degree;
  std::vector<Rational> prod(2 * phi - 1);
  for (int i = 0; i < phi; ++i) {
    if (sgn(c_[i]) == 0)
      continue;
    for (int j = 0; j < phi; ++j) {
      if (sgn(rhs.c_[j]) != 0)
        prod[i + j] += c_[i] * rhs.c_[j];
    }
  }
  std::vector<Rational> c(prod.begin(), prod.begin() + phi);
  for (int k = phi; k < 2 * phi - 1; ++k) {
    if (sgn(prod[k]) == 0)
      continue;
    auto const &pb = ctx.power_basis[k];
    for (int i = 0; i < phi; ++i) {
      if (pb[i] != 0)
        c[i] += prod[k] * pb[i];
    }
  }
  return CycNum(m_, std::move(c));
}

bool CycNum::operator==(CycNum const &rhs) const
{
  return m_ == rhs.m_ && c_ == rhs.c_;
}

CycNum CycNum::galois(int k) const
{
  auto const &ctx = CycContext::get(m_);
  if (std::gcd(((k % m_) + m_) % m_, m_) != 1 && m_ > 1)
    throw ArithmeticError("galois exponent must be a unit mod the conductor");
  if (c_.empty())
    return *this;
  int const phi = ctx.degree;
  std::vector<Rational> c(phi);
  for (int i = 0; i < phi; ++i) {
    if (sgn(c_[i]) == 0)
      continue;
    long e = (static_cast<long>(i) * k) % m_;
    if (e < 0)
      e += m_;
    auto const &pb = ctx.power_basis[e];
    for (int j = 0; j < phi; ++j) {
      if (pb[j] != 0)
        c[j] += c_[i] * pb[j];
    }
  }
  return CycNum(m_, std::move(c));
}

CycNum CycNum::inv() const
{
  if (c_.empty())
    throw ArithmeticError("inversion of zero");

  // a^-1 = (prod_{sigma != 1} sigma(a)) / N(a)
  auto const &ctx = CycContext::get(m_);
  CycNum others = one(m_);
  for (int k : ctx.units) {
    if (k != 1 % m_)
      others = others * galois(k);
  }
  CycNum const norm = *this * others;
  if (!norm.is_rational() || norm.is_zero())
    throw ArithmeticError("field norm is not a nonzero rational");
  Rational const n = norm.coeff(0);
  CycNum r = others;
  for (auto &q : r.c_)
    q /= n;
  return r;
}

CycNum CycNum::pow(long e) const
{
  if (e < 0)
    return inv().pow(-e);
  CycNum result = one(m_);
  CycNum base = *this;
  while (e > 0) {
    if (e & 1)
      result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

int CycNum::root_exponent() const
{
  if (c_.empty())
    return -1;
  auto const &ctx = CycContext::get(m_);
  for (int k = 0; k < m_; ++k) {
    auto const &pb = ctx.power_basis[k];
    bool match = true;
    for (int i = 0; i < ctx.degree && match; ++i)
      match = (c_[i] == pb[i]);
    if (match)
      return k;
  }
  return -1;
}

std::size_t CycNum::hash() const
{
  std::size_t h = std::hash<int>{}(m_);
  for (auto const &q : c_)
    h ^= hash_rational(q) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::complex<double> CycNum::to_complex() const
{
  std::complex<double> z = 0.0;
  double const two_pi = 2.0 * std::acos(-1.0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    double const th = two_pi * static_cast<double>(i) / m_;
    z += c_[i].get_d() * std::complex<double>(std::cos(th), std::sin(th));
  }
  return z;
}

std::string CycNum::to_string() const
{
  std::ostringstream os;
  if (c_.empty()) {
    os << "0";
  } else {
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (sgn(c_[i]) == 0)
        continue;
      Rational q = c_[i];
      if (!first)
        os << (sgn(q) < 0 ? " - " : " + ");
      else if (sgn(q) < 0)
        os << "-";
      q = abs(q);
      if (i == 0 || q != 1)
        os << q;
      if (i > 0) {
        if (q != 1)
          os << "*";
        os << "z";
        if (i > 1)
          os << "^" << i;
      }
      first = false;
    }
  }
  os << " [z=zeta_" << m_ << "]";
  return os.str();
}

}  // namespace fusionkit
