#include "fusionkit/linear.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace fusionkit
{

namespace
{

int mod(long x, int p)
{
  long r = x % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

int encode(Mat2 const &m, int p) { return m.a + p * (m.b + p * (m.c + p * m.d)); }

}  // namespace

Mat2 mat2_mul(Mat2 const &x, Mat2 const &y, int p)
{
  return {mod(static_cast<long>(x.a) * y.a + static_cast<long>(x.b) * y.c, p),
          mod(static_cast<long>(x.a) * y.b + static_cast<long>(x.b) * y.d, p),
          mod(static_cast<long>(x.c) * y.a + static_cast<long>(x.d) * y.c, p),
          mod(static_cast<long>(x.c) * y.b + static_cast<long>(x.d) * y.d, p)};
}

int mat2_det(Mat2 const &x, int p)
{
  return mod(static_cast<long>(x.a) * x.d - static_cast<long>(x.b) * x.c, p);
}

std::string mat2_string(Mat2 const &x)
{
  return "[[" + std::to_string(x.a) + "," + std::to_string(x.b) + "],[" + std::to_string(x.c) +
         "," + std::to_string(x.d) + "]]";
}

std::string linear_kind_name(LinearKind kind, int p)
{
  std::string const f = "(F" + std::to_string(p) + ")";
  switch (kind) {
  case LinearKind::SL2:
    return "SL2" + f;
  case LinearKind::GL2:
    return "GL2" + f;
  case LinearKind::USL2:
    return "U(SL2" + f + ")";
  case LinearKind::UGL2:
    return "U(GL2" + f + ")";
  }
  return "?";
}

LinearGroup::LinearGroup(int p, LinearKind kind) : p_(p), kind_(kind)
{
  if (p < 2)
    throw std::invalid_argument("p must be prime");
  // identity first, then the rest in lexicographic order of (a, b, c, d)
  mats_.push_back(Mat2{});
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c)
        for (int d = 0; d < p; ++d) {
          Mat2 m{a, b, c, d};
          if (m == Mat2{})
            continue;
          int const det = mat2_det(m, p);
          if (det == 0)
            continue;
          bool const upper = c == 0;
          bool const special = det == 1;
          bool keep = false;
          switch (kind) {
          case LinearKind::SL2:
            keep = special;
            break;
          case LinearKind::GL2:
            keep = true;
            break;
          case LinearKind::USL2:
            keep = special && upper;
            break;
          case LinearKind::UGL2:
            keep = upper;
            break;
          }
          if (keep)
            mats_.push_back(m);
        }
  for (Elem i = 0; i < mats_.size(); ++i)
    index_[encode(mats_[i], p)] = i;

  std::size_t const n = mats_.size();
  std::vector<Elem> table(n * n);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(mat2_string(mats_[i]));
    for (std::size_t j = 0; j < n; ++j)
      table[i * n + j] = index_.at(encode(mat2_mul(mats_[i], mats_[j], p), p));
  }
  group_ = FiniteGroup(std::make_shared<TableModel>(n, std::move(table), std::move(labels)),
                       linear_kind_name(kind, p));
}

bool LinearGroup::contains(Mat2 const &m) const { return index_.count(encode(m, p_)) > 0; }

Elem LinearGroup::index_of(Mat2 const &m) const
{
  auto it = index_.find(encode(m, p_));
  if (it == index_.end())
    throw GroupError("matrix " + mat2_string(m) + " is not in " + linear_kind_name(kind_, p_));
  return it->second;
}

FiniteGroup symmetric_group(int n)
{
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> all;
  do
    all.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, Elem> idx;
  for (Elem i = 0; i < all.size(); ++i)
    idx[all[i]] = i;
  std::size_t const N = all.size();
  std::vector<Elem> table(N * N);
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < N; ++a) {
    std::string s = "(";
    for (int x = 0; x < n; ++x)
      s += (x ? " " : "") + std::to_string(all[a][x] + 1);
    labels.push_back(s + ")");
    for (std::size_t b = 0; b < N; ++b) {
      std::vector<int> c(n);
      for (int x = 0; x < n; ++x)
        c[x] = all[b][all[a][x]];
      table[a * N + b] = idx.at(c);
    }
  }
  auto g = FiniteGroup::from_table(N, std::move(table), std::move(labels), false);
  g.set_name("S" + std::to_string(n));
  return g;
}

FiniteGroup cyclic_group(std::size_t n)
{
  std::vector<Elem> table(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      table[a * n + b] = static_cast<Elem>((a + b) % n);
  auto g = FiniteGroup::from_table(n, std::move(table), {}, false);
  g.set_name("C" + std::to_string(n));
  return g;
}

FiniteGroup to_table(FiniteGroup const &g, std::string name)
{
  std::size_t const n = g.order();
  std::vector<Elem> table(n * n);
  std::vector<std::string> labels;
  labels.reserve(n);
  for (Elem a = 0; a < n; ++a) {
    labels.push_back(g.label(a));
    for (Elem b = 0; b < n; ++b)
      table[a * n + b] = g.mult(a, b);
  }
  return FiniteGroup(std::make_shared<TableModel>(n, std::move(table), std::move(labels)),
                     name.empty() ? g.name() : std::move(name));
}

int inverse_mod(int a, int p)
{
  a = mod(a, p);
  for (int x = 1; x < p; ++x) {
    if (mod(static_cast<long>(a) * x, p) == 1)
      return x;
  }
  throw std::invalid_argument("no inverse mod p");
}

int primitive_root(int p)
{
  if (p == 2)
    return 1;
  for (int g = 2; g < p; ++g) {
    int x = 1, ord = 0;
    do {
      x = mod(static_cast<long>(x) * g, p);
      ++ord;
    } while (x != 1);
    if (ord == p - 1)
      return g;
  }
  throw std::invalid_argument("no primitive root");
}

}  // namespace fusionkit
