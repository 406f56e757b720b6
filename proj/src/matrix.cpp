#include "fusionkit/matrix.hpp"

#include <sstream>

namespace fusionkit
{

CycMatrix::CycMatrix(int dim, int conductor)
  : n_(dim), m_(conductor), a_(static_cast<std::size_t>(dim) * dim, CycNum::zero(conductor))
{}

CycMatrix CycMatrix::identity(int dim, int conductor)
{
  CycMatrix r(dim, conductor);
  for (int i = 0; i < dim; ++i)
    r(i, i) = CycNum::one(conductor);
  return r;
}

CycMatrix CycMatrix::scalar(int dim, CycNum const &s)
{
  CycMatrix r(dim, s.conductor());
  for (int i = 0; i < dim; ++i)
    r(i, i) = s;
  return r;
}

CycMatrix CycMatrix::diagonal(std::vector<CycNum> const &diag)
{
  if (diag.empty())
    throw ArithmeticError("empty diagonal");
  CycMatrix r(static_cast<int>(diag.size()), diag[0].conductor());
  for (int i = 0; i < r.n_; ++i)
    r(i, i) = diag[i];
  return r;
}

CycMatrix CycMatrix::permutation(std::vector<int> const &perm, int conductor)
{
  CycMatrix r(static_cast<int>(perm.size()), conductor);
  for (int i = 0; i < r.n_; ++i)
    r(i, perm[i]) = CycNum::one(conductor);
  return r;
}

CycMatrix CycMatrix::operator*(CycMatrix const &rhs) const
{
  if (n_ != rhs.n_ || m_ != rhs.m_)
    throw ArithmeticError("matrix shape or conductor mismatch");
  CycMatrix r(n_, m_);
  // Most matrices here are monomial; skip zero terms.
  for (int i = 0; i < n_; ++i) {
    for (int k = 0; k < n_; ++k) {
      CycNum const &x = (*this)(i, k);
      if (x.is_zero())
        continue;
      for (int j = 0; j < n_; ++j) {
        CycNum const &y = rhs(k, j);
        if (y.is_zero())
          continue;
        CycNum &out = r(i, j);
        if (out.is_zero())
          out = x * y;
        else
          out += x * y;
      }
    }
  }
  return r;
}

CycMatrix CycMatrix::operator*(CycNum const &s) const
{
  CycMatrix r = *this;
  for (auto &x : r.a_) {
    if (!x.is_zero())
      x = x * s;
  }
  return r;
}

CycMatrix CycMatrix::operator+(CycMatrix const &rhs) const
{
  if (n_ != rhs.n_ || m_ != rhs.m_)
    throw ArithmeticError("matrix shape or conductor mismatch");
  CycMatrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i)
    r.a_[i] += rhs.a_[i];
  return r;
}

bool CycMatrix::operator==(CycMatrix const &rhs) const
{
  return n_ == rhs.n_ && m_ == rhs.m_ && a_ == rhs.a_;
}

CycMatrix CycMatrix::pow(long e) const
{
  if (e < 0)
    return inverse().pow(-e);
  CycMatrix result = identity(n_, m_);
  CycMatrix base = *this;
  while (e > 0) {
    if (e & 1)
      result = result * base;
    e >>= 1;
    if (e > 0)
      base = base * base;
  }
  return result;
}

CycMatrix CycMatrix::inverse() const
{
  // Gauss-Jordan over the field.
  CycMatrix a = *this;
  CycMatrix inv = identity(n_, m_);
  for (int col = 0; col < n_; ++col) {
    int piv = -1;
    for (int r = col; r < n_; ++r) {
      if (!a(r, col).is_zero()) {
        piv = r;
        break;
      }
    }
    if (piv < 0)
      throw ArithmeticError("matrix is singular");
    if (piv != col) {
      for (int j = 0; j < n_; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    }
    CycNum const s = a(col, col).inv();
    for (int j = 0; j < n_; ++j) {
      if (!a(col, j).is_zero())
        a(col, j) = a(col, j) * s;
      if (!inv(col, j).is_zero())
        inv(col, j) = inv(col, j) * s;
    }
    for (int r = 0; r < n_; ++r) {
      if (r == col || a(r, col).is_zero())
        continue;
      CycNum const f = a(r, col);
      for (int j = 0; j < n_; ++j) {
        if (!a(col, j).is_zero())
          a(r, j) = a(r, j) - f * a(col, j);
        if (!inv(col, j).is_zero())
          inv(r, j) = inv(r, j) - f * inv(col, j);
      }
    }
  }
  return inv;
}

CycMatrix CycMatrix::conj_transpose() const
{
  CycMatrix r(n_, m_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j)
      r(j, i) = (*this)(i, j).conj();
  }
  return r;
}

CycNum CycMatrix::det() const
{
  CycMatrix a = *this;
  CycNum d = CycNum::one(m_);
  for (int col = 0; col < n_; ++col) {
    int piv = -1;
    for (int r = col; r < n_; ++r) {
      if (!a(r, col).is_zero()) {
        piv = r;
        break;
      }
    }
    if (piv < 0)
      return CycNum::zero(m_);
    if (piv != col) {
      for (int j = 0; j < n_; ++j)
        std::swap(a(piv, j), a(col, j));
      d = -d;
    }
    CycNum const p = a(col, col);
    d = d * p;
    CycNum const pinv = p.inv();
    for (int r = col + 1; r < n_; ++r) {
      if (a(r, col).is_zero())
        continue;
      CycNum const f = a(r, col) * pinv;
      for (int j = col; j < n_; ++j) {
        if (!a(col, j).is_zero())
          a(r, j) = a(r, j) - f * a(col, j);
      }
    }
  }
  return d;
}

CycNum CycMatrix::trace() const
{
  CycNum t = CycNum::zero(m_);
  for (int i = 0; i < n_; ++i)
    t += (*this)(i, i);
  return t;
}

bool CycMatrix::is_identity() const
{
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      CycNum const &x = (*this)(i, j);
      if (i == j ? !x.is_one() : !x.is_zero())
        return false;
    }
  }
  return true;
}

bool CycMatrix::is_diagonal() const
{
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (i != j && !(*this)(i, j).is_zero())
        return false;
    }
  }
  return true;
}

bool CycMatrix::is_scalar() const
{
  if (!is_diagonal())
    return false;
  for (int i = 1; i < n_; ++i) {
    if ((*this)(i, i) != (*this)(0, 0))
      return false;
  }
  return true;
}

bool CycMatrix::is_unitary() const
{
  return (*this * conj_transpose()).is_identity();
}

bool CycMatrix::is_monomial() const
{
  std::vector<int> col_count(n_, 0);
  for (int i = 0; i < n_; ++i) {
    int row_count = 0;
    for (int j = 0; j < n_; ++j) {
      if (!(*this)(i, j).is_zero()) {
        ++row_count;
        ++col_count[j];
      }
    }
    if (row_count != 1)
      return false;
  }
  for (int c : col_count) {
    if (c != 1)
      return false;
  }
  return true;
}

std::optional<long> CycMatrix::order(long cap) const
{
  CycMatrix x = *this;
  for (long k = 1; k <= cap; ++k) {
    if (x.is_identity())
      return k;
    x = x * *this;
  }
  return std::nullopt;
}

std::size_t CycMatrix::hash() const
{
  std::size_t h = static_cast<std::size_t>(n_) * 1000003u + static_cast<std::size_t>(m_);
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (a_[i].is_zero())
      continue;
    h ^= (a_[i].hash() + i * 0x9e3779b97f4a7c15ULL) + (h << 6) + (h >> 2);
  }
  return h;
}

std::string CycMatrix::to_string() const
{
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < n_; ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < n_; ++j) {
      std::string s = (*this)(i, j).to_string();
      s = s.substr(0, s.find(" [z="));
      os << (j ? ", " : "") << s;
    }
  }
  os << "] (m=" << m_ << ")";
  return os.str();
}

}  // namespace fusionkit
