#include "fusionkit/extension.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "fusionkit/algorithms.hpp"

namespace fusionkit
{

namespace
{

std::vector<Elem> small_generating_set(FiniteGroup const &g)
{
  if (g.order() <= 50'000) {
    std::vector<Elem> all(g.order());
    std::iota(all.begin(), all.end(), 0);
    return greedy_generators(g, all);
  }
  return g.generators();
}

// Orders of a few short words in x, y; used to prune generator images.
std::array<std::size_t, 4> word_orders(FiniteGroup const &g, Elem x, Elem y)
{
  return {g.elem_order(g.mult(x, y)), g.elem_order(g.mult(x, g.inv(y))),
          g.elem_order(g.commutator(x, y)), g.elem_order(g.mult(g.mult(x, x), y))};
}

class IsoSearch
{
public:
  IsoSearch(FiniteGroup const &a, FiniteGroup const &b) : a_(a), b_(b) {}

  std::optional<GroupMap> run()
  {
    gens_ = small_generating_set(a_);
    if (gens_.empty())
      return GroupMap(a_, b_, std::vector<Elem>(a_.order(), 0));

    std::vector<std::size_t> b_order(b_.order());
    for (Elem y = 0; y < b_.order(); ++y)
      b_order[y] = b_.elem_order(y);

    cand_.resize(gens_.size());
    std::size_t const o0 = a_.elem_order(gens_[0]);
    for (auto const &cls : conjugacy_classes(Subgroup::whole(b_))) {
      if (b_order[cls[0]] == o0)
        cand_[0].push_back(cls[0]);
    }
    for (std::size_t i = 1; i < gens_.size(); ++i) {
      std::size_t const oi = a_.elem_order(gens_[i]);
      for (Elem y = 0; y < b_.order(); ++y) {
        if (b_order[y] == oi)
          cand_[i].push_back(y);
      }
    }
    img_.assign(gens_.size(), 0);
    if (search(0))
      return result_;
    return std::nullopt;
  }

private:
  bool search(std::size_t i)
  {
    if (i == gens_.size()) {
      auto f = extend_homomorphism(a_, gens_, img_, b_);
      if (f && f->is_injective()) {
        result_ = std::move(*f);
        return true;
      }
      return false;
    }
    for (Elem y : cand_[i]) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j)
        ok = word_orders(a_, gens_[j], gens_[i]) == word_orders(b_, img_[j], y);
      if (!ok)
        continue;
      img_[i] = y;
      if (search(i + 1))
        return true;
    }
    return false;
  }

  FiniteGroup const &a_;
  FiniteGroup const &b_;
  std::vector<Elem> gens_;
  std::vector<std::vector<Elem>> cand_;
  std::vector<Elem> img_;
  std::optional<GroupMap> result_;
};

}  // namespace

Quotient quotient(FiniteGroup const &g, Subgroup const &n)
{
  if (!is_normal(Subgroup::whole(g), n))
    throw GroupError("quotient by a subgroup that is not normal");
  constexpr Elem unset = ~Elem{0};
  Quotient q;
  q.coset_of.assign(g.order(), unset);
  for (Elem x = 0; x < g.order(); ++x) {
    if (q.coset_of[x] != unset)
      continue;
    Elem const id = static_cast<Elem>(q.reps.size());
    q.reps.push_back(x);
    for (Elem y : n.members())
      q.coset_of[g.mult(x, y)] = id;
  }

  auto gens = g.generators();
  std::vector<Elem> qgens;
  for (Elem s : gens)
    qgens.push_back(q.coset_of[s]);
  std::vector<Elem> right;
  right.reserve(q.reps.size() * gens.size());
  for (Elem r : q.reps) {
    for (Elem s : gens)
      right.push_back(q.coset_of[g.mult(r, s)]);
  }
  q.group = FiniteGroup(std::make_shared<CayleyModel>(q.reps.size(), qgens, std::move(right)),
                        g.name().empty() ? "" : g.name() + "/N");
  return q;
}

std::optional<GroupMap> find_isomorphism(FiniteGroup const &a, FiniteGroup const &b)
{
  if (a.order() != b.order())
    return std::nullopt;
  if (order_statistics(Subgroup::whole(a)) != order_statistics(Subgroup::whole(b)))
    return std::nullopt;
  return IsoSearch(a, b).run();
}

ComplementResult find_complement(FiniteGroup const &g, Subgroup const &n, Quotient const &q,
                                 std::vector<Elem> const &forced)
{
  ComplementResult res;
  FiniteGroup const &Q = q.group;

  // quotient generators: forced images first, then greedy by element order
  std::vector<Elem> qgens;
  std::vector<std::size_t> target;
  std::vector<char> covered(Q.order(), 0);
  covered[0] = 1;
  std::size_t have = 1;
  auto push_gen = [&](Elem qx) {
    qgens.push_back(qx);
    auto h = generate(Q, qgens);
    for (Elem y : h.members())
      covered[y] = 1;
    have = h.order();
    target.push_back(have);
  };
  for (Elem f : forced)
    push_gen(q.coset_of[f]);
  if (have < Q.order()) {
    std::vector<std::pair<std::size_t, Elem>> byorder;
    for (Elem y = 1; y < Q.order(); ++y)
      byorder.emplace_back(Q.elem_order(y), y);
    std::sort(byorder.begin(), byorder.end(), [](auto const &x, auto const &y) {
      return x.first != y.first ? x.first > y.first : x.second < y.second;
    });
    for (auto const &[ord, y] : byorder) {
      if (have == Q.order())
        break;
      if (!covered[y])
        push_gen(y);
    }
  }
  res.quotient_gens = qgens;

  std::size_t const k = qgens.size();
  std::vector<std::vector<Elem>> cand(k);
  for (std::size_t i = forced.size(); i < k; ++i) {
    std::size_t const oq = Q.elem_order(qgens[i]);
    for (Elem y : n.members()) {
      Elem x = g.mult(q.reps[qgens[i]], y);
      if (g.elem_order(x) == oq)
        cand[i].push_back(x);
    }
    std::sort(cand[i].begin(), cand[i].end());
  }

  std::vector<Elem> lifts;
  auto fits = [&](std::size_t i) {
    ++res.candidates;
    try {
      return generate(g, lifts, target[i]).order() == target[i];
    } catch (CapExceeded const &) {
      return false;
    }
  };

  for (std::size_t i = 0; i < forced.size(); ++i) {
    lifts.push_back(forced[i]);
    if (!fits(i))
      return res;
  }

  std::function<bool(std::size_t)> search = [&](std::size_t i) -> bool {
    if (i == k)
      return true;
    for (Elem x : cand[i]) {
      lifts.push_back(x);
      if (fits(i) && search(i + 1))
        return true;
      lifts.pop_back();
    }
    return false;
  };

  if (search(forced.size())) {
    res.lifts = lifts;
    res.complement = lifts.empty() ? Subgroup::trivial(g) : generate(g, lifts);
  }
  return res;
}

SesReport sesverify(FiniteGroup const &g, Subgroup const &n, FiniteGroup const &q_expect,
                    std::vector<Elem> const &forced)
{
  SesReport r;
  r.group_order = g.order();
  r.kernel_order = n.order();
  r.quotient_order = q_expect.order();
  r.is_normal = is_normal(Subgroup::whole(g), n);
  r.order_matches = g.order() == n.order() * q_expect.order();
  if (!r.is_normal)
    return r;
  Quotient q = quotient(g, n);
  if (r.order_matches) {
    r.iso = find_isomorphism(q_expect, q.group);
    r.quotient_iso = r.iso.has_value();
  }
  r.complement = find_complement(g, n, q, forced);
  r.split = r.complement.complement.has_value();
  return r;
}

FiniteGroup semidirect_product(FiniteGroup const &n, FiniteGroup const &k,
                               std::function<Elem(Elem, Elem)> const &act, std::string name)
{
  std::size_t const nn = n.order();
  std::vector<Elem> action(nn * k.order());
  for (Elem kk = 0; kk < k.order(); ++kk)
    for (Elem x = 0; x < nn; ++x)
      action[kk * nn + x] = act(kk, x);

  for (Elem x = 0; x < nn; ++x) {
    if (action[x] != x)
      throw GroupError("identity of K must act trivially");
  }
  // each k acts by an automorphism, and k -> act(k, .) is a homomorphism
  auto ngens = n.generators();
  for (Elem kk = 0; kk < k.order(); ++kk) {
    for (Elem x = 0; x < nn; ++x) {
      for (Elem s : ngens) {
        if (action[kk * nn + n.mult(x, s)] != n.mult(action[kk * nn + x], action[kk * nn + s]))
          throw GroupError("semidirect action is not by automorphisms");
      }
    }
  }
  for (Elem k1 : k.generators()) {
    for (Elem k2 = 0; k2 < k.order(); ++k2) {
      for (Elem s : ngens) {
        if (action[k.mult(k1, k2) * nn + s] != action[k1 * nn + action[k2 * nn + s]])
          throw GroupError("semidirect action is not a homomorphism");
      }
    }
  }
  return FiniteGroup(std::make_shared<SemidirectModel>(n, k, std::move(action)), std::move(name));
}

}  // namespace fusionkit
