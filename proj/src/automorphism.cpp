#include "fusionkit/automorphism.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <set>

#include "fusionkit/algorithms.hpp"

namespace fusionkit
{

AutomorphismGroup::AutomorphismGroup(FiniteGroup base, std::vector<Elem> gens,
                                     AutOptions const &opt)
  : base_(std::move(base)), gens_(std::move(gens))
{
  std::size_t const n = base_.order();
  if (gens_.empty() && n > 1)
    throw GroupError("automorphism group needs generators of the base group");

  double bits = 0;
  for (std::size_t i = 0; i < gens_.size(); ++i)
    bits += std::log2(static_cast<double>(n));
  if (bits > 63)
    throw GroupError("too many generators to index automorphisms");

  // breadth-first words in the generators
  parent_.assign(n, 0);
  pgen_.assign(n, 0);
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  order_.push_back(0);
  for (std::size_t head = 0; head < order_.size(); ++head) {
    Elem x = order_[head];
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      Elem y = base_.mult(x, gens_[i]);
      if (!seen[y]) {
        seen[y] = 1;
        parent_[y] = x;
        pgen_[y] = static_cast<std::uint16_t>(i);
        order_.push_back(y);
      }
    }
  }
  if (order_.size() != n)
    throw GroupError("given elements do not generate the base group");

  auto found = enumerate(opt);
  enumerated_ = found.size();

  std::set<std::uint64_t> found_keys;
  for (auto const &t : found)
    found_keys.insert(key(t));

  // closure of the seeds alone
  std::vector<std::vector<Elem>> seeds;
  for (auto const &s : opt.seeds) {
    auto f = extend_homomorphism(base_, gens_, s, base_);
    if (!f || !f->is_injective())
      throw GroupError("seed is not an automorphism");
    seeds.push_back(s);
  }
  if (!seeds.empty()) {
    build_closure(seeds, opt.cap);
    seed_closure_ = tuples_.size();
  }
  for (auto const &t : tuples_) {
    if (!found_keys.count(key(t)))
      throw GroupError("composition closure left the enumerated automorphisms");
  }
  dual_agrees_ = !seeds.empty() && seed_closure_ == enumerated_;

  // add missing automorphisms as generators until the closure is complete
  if (tuples_.empty())
    build_closure(seeds, opt.cap);
  while (tuples_.size() < found.size()) {
    for (auto const &t : found) {
      if (!index_.count(key(t))) {
        seeds.push_back(t);
        break;
      }
    }
    build_closure(seeds, opt.cap);
  }
}

std::uint64_t AutomorphismGroup::key(std::vector<Elem> const &t) const
{
  std::uint64_t k = 0;
  for (auto it = t.rbegin(); it != t.rend(); ++it)
    k = k * base_.order() + *it;
  return k;
}

Elem AutomorphismGroup::apply_tuple(std::vector<Elem> const &t, Elem x) const
{
  thread_local std::vector<std::uint16_t> path;
  path.clear();
  for (Elem y = x; y != 0; y = parent_[y])
    path.push_back(pgen_[y]);
  Elem r = 0;
  for (auto it = path.rbegin(); it != path.rend(); ++it)
    r = base_.mult(r, t[*it]);
  return r;
}

Elem AutomorphismGroup::apply(Elem f, Elem x) const { return apply_tuple(tuples_[f], x); }

std::vector<Elem> AutomorphismGroup::full_map(Elem f) const
{
  std::vector<Elem> img(base_.order(), 0);
  auto const &t = tuples_[f];
  for (std::size_t h = 1; h < order_.size(); ++h) {
    Elem y = order_[h];
    img[y] = base_.mult(img[parent_[y]], t[pgen_[y]]);
  }
  return img;
}

std::optional<Elem> AutomorphismGroup::find(std::vector<Elem> const &images) const
{
  if (images.size() != gens_.size())
    return std::nullopt;
  auto it = index_.find(key(images));
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

Elem AutomorphismGroup::inner(Elem g) const
{
  std::vector<Elem> t;
  for (Elem s : gens_)
    t.push_back(base_.conj(g, s));
  auto f = find(t);
  if (!f)
    throw GroupError("inner automorphism missing from the automorphism group");
  return *f;
}

Subgroup AutomorphismGroup::inner_subgroup() const
{
  std::vector<Elem> m;
  for (Elem g = 0; g < base_.order(); ++g)
    m.push_back(inner(g));
  return Subgroup(group_, std::move(m));
}

std::vector<std::vector<Elem>> AutomorphismGroup::enumerate(AutOptions const &opt)
{
  std::vector<std::vector<Elem>> out;
  std::size_t const n = base_.order();
  std::size_t const k = gens_.size();
  if (k == 0) {
    out.push_back({});
    return out;
  }

  std::vector<std::size_t> ord(n);
  for (Elem x = 0; x < n; ++x)
    ord[x] = base_.elem_order(x);

  auto accept = [&](std::vector<Elem> const &t) {
    auto f = extend_homomorphism(base_, gens_, t, base_);
    return f && f->is_injective();
  };

  if (opt.method == AutMethod::PairScan) {
    if (k != 2)
      throw GroupError("pair scan needs exactly two generators");
    std::size_t const oa = ord[gens_[0]], ob = ord[gens_[1]];
    for (Elem a = 0; a < n; ++a) {
      if (ord[a] != oa)
        continue;
      for (Elem b = 0; b < n; ++b) {
        if (ord[b] != ob || base_.commutator(a, b) == 0)
          continue;
        ++candidates_;
        std::vector<Elem> t{a, b};
        if (!opt.verify_pairs || accept(t))
          out.push_back(std::move(t));
      }
    }
    return out;
  }

  // backtracking over images with matching orders, pruned by word orders
  auto words = [&](Elem x, Elem y) {
    return std::array<std::size_t, 3>{ord[base_.mult(x, y)], ord[base_.mult(x, base_.inv(y))],
                                      ord[base_.commutator(x, y)]};
  };
  std::vector<std::vector<Elem>> cand(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (Elem x = 0; x < n; ++x) {
      if (ord[x] == ord[gens_[i]])
        cand[i].push_back(x);
    }
  }
  std::vector<Elem> t(k);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == k) {
      ++candidates_;
      if (accept(t))
        out.push_back(t);
      return;
    }
    for (Elem y : cand[i]) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j)
        ok = words(gens_[j], gens_[i]) == words(t[j], y);
      if (!ok)
        continue;
      t[i] = y;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

void AutomorphismGroup::build_closure(std::vector<std::vector<Elem>> const &seeds,
                                      std::size_t cap)
{
  tuples_.clear();
  index_.clear();
  std::vector<Elem> right;
  auto intern = [&](std::vector<Elem> t) -> Elem {
    auto [it, inserted] = index_.try_emplace(key(t), static_cast<Elem>(tuples_.size()));
    if (inserted) {
      if (tuples_.size() >= cap)
        throw CapExceeded("automorphism closure exceeded cap " + std::to_string(cap));
      tuples_.push_back(std::move(t));
    }
    return it->second;
  };

  intern(gens_);
  std::vector<Elem> y(gens_.size());
  for (std::size_t head = 0; head < tuples_.size(); ++head) {
    for (auto const &s : seeds) {
      // (x o s)(g_j) = x(s(g_j))
      for (std::size_t j = 0; j < gens_.size(); ++j)
        y[j] = apply_tuple(tuples_[head], s[j]);
      right.push_back(intern(y));
    }
  }
  std::vector<Elem> sg;
  for (auto const &s : seeds)
    sg.push_back(index_.at(key(s)));
  group_ = FiniteGroup(std::make_shared<CayleyModel>(tuples_.size(), sg, std::move(right)),
                       base_.name().empty() ? "Aut" : "Aut(" + base_.name() + ")");
}

PlaneCoords::PlaneCoords(FiniteGroup const &g, Elem a, Elem b, int p)
  : p_(p), coord_(g.order(), {-1, -1})
{
  auto z = center(g);
  if (z.order() * p * p != g.order())
    throw GroupError("plane coordinates need |G| = p^2 |Z(G)|");
  Elem ai = 0;
  for (int i = 0; i < p; ++i) {
    Elem y = ai;
    for (int j = 0; j < p; ++j) {
      for (Elem c : z.members())
        coord_[g.mult(y, c)] = {i, j};
      y = g.mult(y, b);
    }
    ai = g.mult(ai, a);
  }
  for (auto const &c : coord_) {
    if (c.first < 0)
      throw GroupError("a and b do not span G/Z(G)");
  }
}

Mat2 induced_matrix(AutomorphismGroup const &aut, PlaneCoords const &coords, Elem f)
{
  auto const &t = aut.images(f);
  auto [a0, b0] = coords(t[0]);
  auto [a1, b1] = coords(t[1]);
  return Mat2{a0, a1, b0, b1};
}

}  // namespace fusionkit
