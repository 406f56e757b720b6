#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "fusionkit/group.hpp"
#include "fusionkit/matrix.hpp"

namespace fusionkit
{

inline constexpr std::size_t kDefaultClosureCap = 2'000'000;

/// The named matrices of the case studies.
enum class StdMatrix
{
  A,      // diag(1, z, ..., z^(p-1))
  B,      // cyclic shift, B_{i,i+1} = 1
  D,      // diag(z^(-(i-1)^2))
  Sigma,  // signed permutation matrix of i -> k(i-1)+1
  Tau,    // permutation (2,p)(3,p-1)
  F,      // p = 2 only: diag(e^{pi i/4}, e^{-pi i/4})
  H,      // p = 2 only: rotation by pi/4
  ZetaI,  // z * I
};

struct StdOptions
{
  int k = 1;              // multiplier for Sigma
  int conductor = 0;      // 0 picks the default conductor for p
  bool det_one = false;   // p = 2: return iA, iB instead of A, B
};

// Conductor used for p at torus truncation level n.
int default_conductor(int p, int level = 1);

/// Builds one of the named matrices; throws std::invalid_argument for
/// unsupported (p, which) combinations.
CycMatrix std_matrix(int p, StdMatrix which, StdOptions const &opt = {});

// z_p^k at conductor m (p | m).
CycNum prime_root(int p, int m, long k);

/// A finite group of invertible matrices with a canonical hash index.
class MatrixGroup
{
public:
  MatrixGroup() = default;

  std::size_t order() const { return elements_.size(); }
  CycMatrix const &element(Elem i) const { return elements_[i]; }
  std::vector<CycMatrix> const &elements() const { return elements_; }
  std::vector<Elem> const &generators() const { return gens_; }
  std::optional<Elem> find(CycMatrix const &m) const;
  Elem index_of(CycMatrix const &m) const;  // throws if absent

  FiniteGroup const &group() const { return group_; }
  int dim() const { return elements_.empty() ? 0 : elements_[0].dim(); }
  int conductor() const { return elements_.empty() ? 1 : elements_[0].conductor(); }

  friend MatrixGroup closure(std::vector<CycMatrix> const &gens, std::size_t cap,
                             std::string name);

private:
  std::vector<CycMatrix> elements_;
  std::unordered_map<CycMatrix, Elem, CycMatrixHash> index_;
  std::vector<Elem> gens_;
  FiniteGroup group_;
};

/**
 * Breadth-first closure of the generators under right multiplication.
 *
 * Elements are numbered in generation order, so the numbering depends only on
 * the generator list. Throws CapExceeded past `cap` elements.
 */
MatrixGroup closure(std::vector<CycMatrix> const &gens, std::size_t cap = kDefaultClosureCap,
                    std::string name = {});

struct MatrixReport
{
  CycNum det;
  bool unitary = false;
  bool scalar = false;
  bool diagonal = false;
  bool monomial = false;
  long order = 0;
};

// Throws CapExceeded if the order exceeds order_cap.
MatrixReport mat_report(CycMatrix const &m, long order_cap = 100000);

struct MatrixGroupReport
{
  std::size_t order = 0;
  std::size_t center_order = 0;
  std::size_t derived_order = 0;
  bool all_unitary = false;
  bool all_det_root_of_unity = false;
  bool all_det_one = false;
};

MatrixGroupReport group_report(MatrixGroup const &g);

/**
 * If m lies in the p-toral normalizer S_n for some n (a diagonal matrix of
 * p-power roots of unity times a power of B, with determinant 1), returns
 * the least such n; otherwise nullopt.
 */
std::optional<int> torus_normalizer_level(CycMatrix const &m, int p);

// Same test for every element; returns the largest level needed.
std::optional<int> torus_normalizer_level(MatrixGroup const &g, int p);

// JSON text: {dim, conductor, elements, generators}.
std::string matrix_group_json(MatrixGroup const &g);

}  // namespace fusionkit
