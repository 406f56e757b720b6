#include "fusionkit/matgroup.hpp"

#include <numeric>
#include <stdexcept>

#include "json.hpp"

#include "fusionkit/algorithms.hpp"

namespace fusionkit
{

namespace
{

bool is_prime(int p)
{
  if (p < 2)
    return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0)
      return false;
  }
  return true;
}

// Sign of a permutation given as images.
int perm_sign(std::vector<int> const &perm)
{
  std::vector<char> seen(perm.size(), 0);
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i])
      continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = 1;
      ++len;
    }
    if (len % 2 == 0)
      sign = -sign;
  }
  return sign;
}

}  // namespace

int default_conductor(int p, int level)
{
  if (level < 1)
    throw std::invalid_argument("truncation level must be >= 1");
  int m = 1;
  for (int i = 0; i < level; ++i)
    m *= p;
  return p == 2 ? std::max(8, m) : m;
}

CycNum prime_root(int p, int m, long k)
{
  if (m % p != 0)
    throw std::invalid_argument("conductor must be divisible by p");
  return CycNum::root(m, k * (m / p));
}

CycMatrix std_matrix(int p, StdMatrix which, StdOptions const &opt)
{
  if (!is_prime(p))
    throw std::invalid_argument("p must be prime");
  int const m = opt.conductor ? opt.conductor : default_conductor(p);
  if (m % p != 0 || (p == 2 && m % 8 != 0))
    throw std::invalid_argument("conductor " + std::to_string(m) + " is not valid for p = " +
                                std::to_string(p));
  bool const odd = p != 2;

  auto z = [&](long k) { return prime_root(p, m, k); };
  auto scale_i = [&](CycMatrix const &x) { return x * CycNum::root(m, m / 4); };

  switch (which) {
  case StdMatrix::A: {
    std::vector<CycNum> d;
    for (int i = 0; i < p; ++i)
      d.push_back(z(i));
    auto a = CycMatrix::diagonal(d);
    return (!odd && opt.det_one) ? scale_i(a) : a;
  }
  case StdMatrix::B: {
    std::vector<int> perm(p);
    for (int i = 0; i < p; ++i)
      perm[i] = (i + 1) % p;
    auto b = CycMatrix::permutation(perm, m);
    return (!odd && opt.det_one) ? scale_i(b) : b;
  }
  case StdMatrix::ZetaI:
    return CycMatrix::scalar(p, z(1));
  case StdMatrix::D: {
    if (!odd)
      throw std::invalid_argument("D is defined for odd p only");
    std::vector<CycNum> d;
    for (long i = 0; i < p; ++i)
      d.push_back(z(-i * i));
    return CycMatrix::diagonal(d);
  }
  case StdMatrix::Sigma: {
    if (!odd)
      throw std::invalid_argument("sigma_k is defined for odd p only");
    if (opt.k < 1 || opt.k > p - 1)
      throw std::invalid_argument("sigma_k needs 1 <= k <= p-1");
    std::vector<int> perm(p);
    for (int i = 0; i < p; ++i)
      perm[i] = static_cast<int>((static_cast<long>(opt.k) * i) % p);
    auto s = CycMatrix::permutation(perm, m);
    return perm_sign(perm) < 0 ? s * CycNum::rational(m, -1) : s;
  }
  case StdMatrix::Tau: {
    if (!odd)
      throw std::invalid_argument("tau is defined for odd p only");
    std::vector<int> perm(p);
    for (int i = 0; i < p; ++i)
      perm[i] = (p - i) % p;
    return CycMatrix::permutation(perm, m);
  }
  case StdMatrix::F: {
    if (odd)
      throw std::invalid_argument("F is defined for p = 2 only");
    return CycMatrix::diagonal({CycNum::root(m, m / 8), CycNum::root(m, -(m / 8))});
  }
  case StdMatrix::H: {
    if (odd)
      throw std::invalid_argument("H is defined for p = 2 only");
    // 1/sqrt(2) = (z8 + z8^-1) / 2
    CycNum const r = (CycNum::root(m, m / 8) + CycNum::root(m, -(m / 8))) *
                     CycNum::rational(m, Rational(1, 2));
    CycMatrix h(2, m);
    h(0, 0) = r;
    h(0, 1) = -r;
    h(1, 0) = r;
    h(1, 1) = r;
    return h;
  }
  }
  throw std::invalid_argument("unknown matrix");
}

std::optional<Elem> MatrixGroup::find(CycMatrix const &m) const
{
  auto it = index_.find(m);
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

Elem MatrixGroup::index_of(CycMatrix const &m) const
{
  auto e = find(m);
  if (!e)
    throw GroupError("matrix is not an element of the group");
  return *e;
}

MatrixGroup closure(std::vector<CycMatrix> const &gens, std::size_t cap, std::string name)
{
  if (gens.empty())
    throw GroupError("closure needs at least one generator");
  int const n = gens[0].dim();
  int const m = gens[0].conductor();
  for (auto const &g : gens) {
    if (g.dim() != n || g.conductor() != m)
      throw GroupError("generators differ in dimension or conductor");
    if (g.det().is_zero())
      throw GroupError("generator is singular");
  }

  MatrixGroup G;
  std::size_t const k = gens.size();
  std::vector<Elem> right;
  auto intern = [&](CycMatrix &&x) -> Elem {
    auto [it, inserted] = G.index_.try_emplace(x, static_cast<Elem>(G.elements_.size()));
    if (inserted) {
      if (G.elements_.size() >= cap)
        throw CapExceeded("matrix group closure exceeded cap " + std::to_string(cap));
      G.elements_.push_back(std::move(x));
    }
    return it->second;
  };

  intern(CycMatrix::identity(n, m));
  for (std::size_t head = 0; head < G.elements_.size(); ++head) {
    for (std::size_t i = 0; i < k; ++i) {
      CycMatrix y = G.elements_[head] * gens[i];
      right.push_back(intern(std::move(y)));
    }
  }

  for (auto const &g : gens)
    G.gens_.push_back(G.index_.at(g));

  auto model = std::make_shared<CayleyModel>(G.elements_.size(), G.gens_, std::move(right));
  G.group_ = FiniteGroup(std::move(model), std::move(name));
  return G;
}

MatrixReport mat_report(CycMatrix const &m, long order_cap)
{
  MatrixReport r;
  r.det = m.det();
  r.unitary = m.is_unitary();
  r.scalar = m.is_scalar();
  r.diagonal = m.is_diagonal();
  r.monomial = m.is_monomial();
  auto o = m.order(order_cap);
  if (!o)
    throw CapExceeded("matrix order exceeds " + std::to_string(order_cap));
  r.order = *o;
  return r;
}

MatrixGroupReport group_report(MatrixGroup const &g)
{
  MatrixGroupReport r;
  r.order = g.order();
  auto whole = Subgroup::whole(g.group());
  r.center_order = center(whole).order();
  r.derived_order = derived_subgroup(whole).order();
  r.all_unitary = true;
  r.all_det_root_of_unity = true;
  r.all_det_one = true;
  for (auto const &x : g.elements()) {
    r.all_unitary = r.all_unitary && x.is_unitary();
    CycNum d = x.det();
    r.all_det_root_of_unity = r.all_det_root_of_unity && d.root_exponent() >= 0;
    r.all_det_one = r.all_det_one && d.is_one();
  }
  return r;
}

std::optional<int> torus_normalizer_level(CycMatrix const &x, int p)
{
  int const n = x.dim();
  int const m = x.conductor();
  if (n != p || !x.is_monomial())
    return std::nullopt;
  // the permutation part must be a power of the cyclic shift
  int shift = -1;
  for (int j = 0; j < n; ++j) {
    if (!x(0, j).is_zero())
      shift = j;
  }
  int level = 0;
  for (int i = 0; i < n; ++i) {
    CycNum const &e = x(i, (i + shift) % n);
    if (e.is_zero())
      return std::nullopt;
    int const k = e.root_exponent();
    if (k < 0)
      return std::nullopt;
    int ord = m / std::gcd(k, m);
    int lv = 0;
    while (ord % p == 0) {
      ord /= p;
      ++lv;
    }
    if (ord != 1)
      return std::nullopt;
    level = std::max(level, lv);
  }
  if (!x.det().is_one())
    return std::nullopt;
  return std::max(level, 1);
}

std::optional<int> torus_normalizer_level(MatrixGroup const &g, int p)
{
  int level = 1;
  for (auto const &x : g.elements()) {
    auto l = torus_normalizer_level(x, p);
    if (!l)
      return std::nullopt;
    level = std::max(level, *l);
  }
  return level;
}

std::string matrix_group_json(MatrixGroup const &g)
{
  using nlohmann::json;
  json elems = json::array();
  for (auto const &x : g.elements()) {
    json rows = json::array();
    for (int i = 0; i < x.dim(); ++i) {
      json row = json::array();
      for (int j = 0; j < x.dim(); ++j) {
        json coeffs = json::array();
        for (auto const &q : x(i, j).coeffs())
          coeffs.push_back(q.get_str());
        row.push_back(std::move(coeffs));
      }
      rows.push_back(std::move(row));
    }
    elems.push_back(std::move(rows));
  }
  json out{{"schema_version", 1},
           {"dim", g.dim()},
           {"conductor", g.conductor()},
           {"order", g.order()},
           {"generators", g.generators()},
           {"elements", std::move(elems)}};
  return out.dump();
}

}  // namespace fusionkit
