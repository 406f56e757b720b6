#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fusionkit/cyclo.hpp"

namespace fusionkit
{

/// Square matrix over Q(zeta_m); all entries share the conductor m.
class CycMatrix
{
public:
  CycMatrix() = default;
  CycMatrix(int dim, int conductor);

  static CycMatrix identity(int dim, int conductor);
  static CycMatrix scalar(int dim, CycNum const &s);
  static CycMatrix diagonal(std::vector<CycNum> const &diag);
  // Permutation matrix with entry (i, perm[i]) = 1 (0-based).
  static CycMatrix permutation(std::vector<int> const &perm, int conductor);

  int dim() const { return n_; }
  int conductor() const { return m_; }

  CycNum const &operator()(int i, int j) const { return a_[i * n_ + j]; }
  CycNum &operator()(int i, int j) { return a_[i * n_ + j]; }

  CycMatrix operator*(CycMatrix const &rhs) const;
  CycMatrix operator*(CycNum const &s) const;
  CycMatrix operator+(CycMatrix const &rhs) const;
  bool operator==(CycMatrix const &rhs) const;
  bool operator!=(CycMatrix const &rhs) const { return !(*this == rhs); }

  CycMatrix pow(long e) const;
  CycMatrix inverse() const;
  CycMatrix conj_transpose() const;
  CycNum det() const;
  CycNum trace() const;

  bool is_identity() const;
  bool is_diagonal() const;
  bool is_scalar() const;
  bool is_unitary() const;
  // Exactly one nonzero entry in every row and column.
  bool is_monomial() const;

  // Smallest k >= 1 with M^k = I, or nullopt if none up to cap.
  std::optional<long> order(long cap = 100000) const;

  std::size_t hash() const;
  std::string to_string() const;

private:
  int n_ = 0;
  int m_ = 1;
  std::vector<CycNum> a_;
};

struct CycMatrixHash
{
  std::size_t operator()(CycMatrix const &m) const { return m.hash(); }
};

}  // namespace fusionkit
