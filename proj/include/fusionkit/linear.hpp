#pragma once

#include <array>
#include <string>
#include <unordered_map>
#include <vector>

#include "fusionkit/group.hpp"

namespace fusionkit
{

/// 2x2 matrix over F_p, entries in [0, p): {a, b; c, d}.
struct Mat2
{
  int a = 1, b = 0, c = 0, d = 1;

  bool operator==(Mat2 const &o) const = default;
};

Mat2 mat2_mul(Mat2 const &x, Mat2 const &y, int p);
int mat2_det(Mat2 const &x, int p);
std::string mat2_string(Mat2 const &x);

enum class LinearKind
{
  SL2,   // determinant one
  GL2,   // all invertible
  USL2,  // upper triangular with determinant one
  UGL2,  // upper triangular invertible
};

std::string linear_kind_name(LinearKind kind, int p);

/// A 2x2 matrix group over F_p with an explicit multiplication table.
class LinearGroup
{
public:
  LinearGroup(int p, LinearKind kind);

  int prime() const { return p_; }
  LinearKind kind() const { return kind_; }
  FiniteGroup const &group() const { return group_; }
  Mat2 const &matrix(Elem x) const { return mats_[x]; }
  bool contains(Mat2 const &m) const;
  Elem index_of(Mat2 const &m) const;

private:
  int p_;
  LinearKind kind_;
  std::vector<Mat2> mats_;
  std::unordered_map<int, Elem> index_;
  FiniteGroup group_;
};

// Symmetric group on n points as a table; permutations compose left to right.
FiniteGroup symmetric_group(int n);
FiniteGroup cyclic_group(std::size_t n);

// Materializes any group as a TableModel (same element indices).
FiniteGroup to_table(FiniteGroup const &g, std::string name = {});

// Smallest primitive root mod p.
int primitive_root(int p);
// Inverse of a mod p (p prime, a != 0 mod p).
int inverse_mod(int a, int p);

}  // namespace fusionkit
