#include "fusionkit/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>

namespace fusionkit
{

std::string GroupModel::label(Elem a) const { return "g" + std::to_string(a); }

FiniteGroup::FiniteGroup(std::shared_ptr<GroupModel const> model, std::string name)
  : m_(std::move(model)), name_(std::move(name))
{}

FiniteGroup FiniteGroup::from_table(std::size_t n, std::vector<Elem> table,
                                    std::vector<std::string> labels, bool validate)
{
  if (n == 0)
    throw GroupError("group table must be non-empty");
  if (table.size() != n * n)
    throw GroupError("multiplication table has " + std::to_string(table.size()) +
                     " entries, expected " + std::to_string(n * n));
  for (Elem x : table) {
    if (x >= n)
      throw GroupError("multiplication table entry out of range");
  }

  // locate the identity
  std::optional<Elem> e;
  for (Elem a = 0; a < n && !e; ++a) {
    bool ok = true;
    for (Elem b = 0; b < n && ok; ++b)
      ok = table[a * n + b] == b && table[b * n + a] == b;
    if (ok)
      e = a;
  }
  if (!e)
    throw GroupError("multiplication table has no identity");

  if (*e != 0) {
    // swap labels 0 and e
    std::vector<Elem> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[0], perm[*e]);
    std::vector<Elem> t(n * n);
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b)
        t[perm[a] * n + perm[b]] = perm[table[a * n + b]];
    }
    table = std::move(t);
    if (!labels.empty())
      std::swap(labels[0], labels[*e]);
  }

  if (validate) {
    // Latin square rows/columns give inverses and cancellation.
    std::vector<char> seen(n);
    for (Elem a = 0; a < n; ++a) {
      std::fill(seen.begin(), seen.end(), 0);
      for (Elem b = 0; b < n; ++b) {
        if (seen[table[a * n + b]]++)
          throw GroupError("multiplication table row is not a permutation");
      }
      std::fill(seen.begin(), seen.end(), 0);
      for (Elem b = 0; b < n; ++b) {
        if (seen[table[b * n + a]]++)
          throw GroupError("multiplication table column is not a permutation");
      }
    }
    auto assoc = [&](Elem a, Elem b, Elem c) {
      return table[table[a * n + b] * n + c] == table[a * n + table[b * n + c]];
    };
    if (n <= 200) {
      for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
          for (Elem c = 0; c < n; ++c)
            if (!assoc(a, b, c))
              throw GroupError("multiplication table is not associative");
    } else {
      std::mt19937_64 rng(12345);
      std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(n - 1));
      for (int t = 0; t < 200000; ++t) {
        if (!assoc(pick(rng), pick(rng), pick(rng)))
          throw GroupError("multiplication table is not associative");
      }
    }
  }

  return FiniteGroup(std::make_shared<TableModel>(n, std::move(table), std::move(labels)));
}

Elem FiniteGroup::pow(Elem a, long k) const
{
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  Elem result = 0;
  Elem base = a;
  while (k > 0) {
    if (k & 1)
      result = mult(result, base);
    k >>= 1;
    if (k > 0)
      base = mult(base, base);
  }
  return result;
}

std::size_t FiniteGroup::elem_order(Elem a) const
{
  std::size_t k = 1;
  Elem x = a;
  while (x != 0) {
    x = mult(x, a);
    ++k;
    if (k > order())
      throw GroupError("element order exceeds group order; broken model");
  }
  return k;
}

std::vector<Elem> FiniteGroup::generators() const
{
  auto g = m_->generators();
  if (!g.empty() || order() == 1)
    return g;
  std::vector<Elem> all(order());
  std::iota(all.begin(), all.end(), 0);
  return greedy_generators(*this, all);
}

TableModel::TableModel(std::size_t n, std::vector<Elem> table, std::vector<std::string> labels)
  : n_(n), t_(std::move(table)), inv_(n), labels_(std::move(labels))
{
  for (Elem a = 0; a < n_; ++a) {
    for (Elem b = 0; b < n_; ++b) {
      if (t_[a * n_ + b] == 0) {
        inv_[a] = b;
        break;
      }
    }
  }
}

std::string TableModel::label(Elem a) const
{
  if (a < labels_.size())
    return labels_[a];
  return GroupModel::label(a);
}

CayleyModel::CayleyModel(std::size_t n, std::vector<Elem> gens, std::vector<Elem> right,
                         std::vector<std::string> labels)
  : n_(n), k_(gens.size()), gens_(std::move(gens)), right_(std::move(right)),
    parent_(n, 0), pgen_(n, 0), depth_(n, 0), inv_(n, 0), labels_(std::move(labels))
{
  if (right_.size() != n_ * k_)
    throw GroupError("Cayley table has the wrong size");

  std::vector<char> seen(n_, 0);
  std::vector<Elem> bfs;
  bfs.reserve(n_);
  bfs.push_back(0);
  seen[0] = 1;
  for (std::size_t head = 0; head < bfs.size(); ++head) {
    Elem x = bfs[head];
    for (std::size_t i = 0; i < k_; ++i) {
      Elem y = right_[x * k_ + i];
      if (!seen[y]) {
        seen[y] = 1;
        parent_[y] = x;
        pgen_[y] = static_cast<std::uint16_t>(i);
        depth_[y] = depth_[x] + 1;
        bfs.push_back(y);
      }
    }
  }
  if (bfs.size() != n_)
    throw GroupError("Cayley generators do not generate the group");

  // inverse of each generator: g^(o-1)
  std::vector<Elem> gen_inv(k_);
  for (std::size_t i = 0; i < k_; ++i) {
    Elem prev = 0;
    Elem x = gens_[i];
    while (x != 0) {
      prev = x;
      x = right_[x * k_ + i];
    }
    gen_inv[i] = prev;
  }
  // inv(parent * g) = g^-1 * inv(parent), in BFS order
  inv_[0] = 0;
  for (std::size_t h = 1; h < bfs.size(); ++h) {
    Elem y = bfs[h];
    inv_[y] = mult(gen_inv[pgen_[y]], inv_[parent_[y]]);
  }
}

Elem CayleyModel::mult(Elem a, Elem b) const
{
  thread_local std::vector<std::uint16_t> path;
  path.clear();
  for (Elem y = b; y != 0; y = parent_[y])
    path.push_back(pgen_[y]);
  Elem x = a;
  for (auto it = path.rbegin(); it != path.rend(); ++it)
    x = right_[x * k_ + *it];
  return x;
}

std::string CayleyModel::label(Elem a) const
{
  if (a < labels_.size())
    return labels_[a];
  return GroupModel::label(a);
}

SemidirectModel::SemidirectModel(FiniteGroup normal, FiniteGroup complement,
                                 std::vector<Elem> action)
  : normal_(std::move(normal)), complement_(std::move(complement)), nn_(normal_.order()),
    action_(std::move(action))
{
  if (action_.size() != nn_ * complement_.order())
    throw GroupError("semidirect action table has the wrong size");
}

Elem SemidirectModel::mult(Elem a, Elem b) const
{
  Elem n1 = a % nn_, k1 = a / nn_;
  Elem n2 = b % nn_, k2 = b / nn_;
  Elem n = normal_.mult(n1, action_[k1 * nn_ + n2]);
  Elem k = complement_.mult(k1, k2);
  return pack(n, k);
}

Elem SemidirectModel::inv(Elem a) const
{
  Elem n = a % nn_, k = a / nn_;
  Elem ki = complement_.inv(k);
  return pack(action_[ki * nn_ + normal_.inv(n)], ki);
}

std::string SemidirectModel::label(Elem a) const
{
  return "(" + normal_.label(normal_part(a)) + ", " + complement_.label(complement_part(a)) + ")";
}

SubgroupModel::SubgroupModel(Subgroup const &h)
  : parent_(h.parent()), members_(h.members()), local_(h.parent().order(), -1)
{
  for (std::size_t i = 0; i < members_.size(); ++i)
    local_[members_[i]] = static_cast<std::int32_t>(i);
}

Elem SubgroupModel::to_local(Elem parent) const
{
  auto l = local_[parent];
  if (l < 0)
    throw GroupError("element is not in the subgroup");
  return static_cast<Elem>(l);
}

Elem SubgroupModel::mult(Elem a, Elem b) const
{
  return to_local(parent_.mult(members_[a], members_[b]));
}

Elem SubgroupModel::inv(Elem a) const { return to_local(parent_.inv(members_[a])); }

std::string SubgroupModel::label(Elem a) const { return parent_.label(members_[a]); }

Subgroup::Subgroup(FiniteGroup parent, std::vector<Elem> members)
  : parent_(std::move(parent)), members_(std::move(members))
{
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  mask_ = std::make_shared<std::vector<bool>>(parent_.order(), false);
  for (Elem x : members_) {
    if (x >= parent_.order())
      throw GroupError("subgroup member out of range");
    (*mask_)[x] = true;
  }
}

Subgroup Subgroup::whole(FiniteGroup const &g)
{
  std::vector<Elem> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(g, std::move(all));
}

Subgroup Subgroup::trivial(FiniteGroup const &g) { return Subgroup(g, {0}); }

bool Subgroup::contains(Subgroup const &other) const
{
  for (Elem x : other.members_) {
    if (!contains(x))
      return false;
  }
  return true;
}

std::vector<Elem> const &Subgroup::gens() const
{
  if (!gens_)
    gens_ = std::make_shared<std::vector<Elem>>(greedy_generators(parent_, members_));
  return *gens_;
}

bool Subgroup::is_closed() const
{
  if (members_.empty() || members_[0] != 0)
    return false;
  for (Elem a : members_) {
    for (Elem g : gens()) {
      if (!contains(parent_.mult(a, g)))
        return false;
    }
  }
  // generated subgroup of the generators must be everything
  return generate(parent_, gens()).order() == order();
}

FiniteGroup Subgroup::as_group(std::string name) const
{
  return FiniteGroup(std::make_shared<SubgroupModel>(*this), std::move(name));
}

GroupMap::GroupMap(FiniteGroup source, FiniteGroup target, std::vector<Elem> images)
  : source_(std::move(source)), target_(std::move(target)), images_(std::move(images))
{
  if (images_.size() != source_.order())
    throw GroupError("group map needs one image per source element");
}

bool GroupMap::is_homomorphism(std::size_t pair_budget) const
{
  std::size_t const n = source_.order();
  auto ok = [&](Elem a, Elem b) {
    return images_[source_.mult(a, b)] == target_.mult(images_[a], images_[b]);
  };
  if (n * n <= pair_budget) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        if (!ok(a, b))
          return false;
    return true;
  }
  std::mt19937_64 rng(20240229);
  std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(n - 1));
  for (std::size_t t = 0; t < pair_budget; ++t) {
    if (!ok(pick(rng), pick(rng)))
      return false;
  }
  return true;
}

bool GroupMap::is_injective() const
{
  std::vector<char> seen(target_.order(), 0);
  for (Elem y : images_) {
    if (seen[y]++)
      return false;
  }
  return true;
}

Subgroup GroupMap::image() const { return Subgroup(target_, images_); }

Subgroup GroupMap::kernel() const
{
  std::vector<Elem> k;
  for (Elem x = 0; x < images_.size(); ++x) {
    if (images_[x] == 0)
      k.push_back(x);
  }
  return Subgroup(source_, std::move(k));
}

std::optional<GroupMap> extend_homomorphism(FiniteGroup const &source,
                                            std::vector<Elem> const &gens,
                                            std::vector<Elem> const &images,
                                            FiniteGroup const &target)
{
  if (gens.size() != images.size())
    throw GroupError("generator and image lists differ in length");
  std::size_t const n = source.order();
  constexpr Elem unset = ~Elem{0};
  std::vector<Elem> f(n, unset);
  f[0] = 0;
  std::vector<Elem> queue{0};
  queue.reserve(n);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Elem x = queue[head];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      Elem y = source.mult(x, gens[i]);
      Elem fy = target.mult(f[x], images[i]);
      if (f[y] == unset) {
        f[y] = fy;
        queue.push_back(y);
      } else if (f[y] != fy) {
        return std::nullopt;
      }
    }
  }
  if (queue.size() != n)
    return std::nullopt;
  return GroupMap(source, target, std::move(f));
}

Subgroup generate(FiniteGroup const &g, std::vector<Elem> const &gens, std::size_t cap)
{
  std::vector<char> seen(g.order(), 0);
  std::vector<Elem> members{0};
  seen[0] = 1;
  for (std::size_t head = 0; head < members.size(); ++head) {
    Elem x = members[head];
    for (Elem s : gens) {
      Elem y = g.mult(x, s);
      if (!seen[y]) {
        seen[y] = 1;
        members.push_back(y);
        if (cap > 0 && members.size() > cap)
          throw CapExceeded("subgroup closure exceeded cap " + std::to_string(cap));
      }
    }
  }
  Subgroup h(g, std::move(members));
  std::vector<Elem> nontrivial;
  for (Elem s : gens) {
    if (s != 0)
      nontrivial.push_back(s);
  }
  h.set_gens(std::move(nontrivial));
  return h;
}

std::vector<Elem> greedy_generators(FiniteGroup const &g, std::vector<Elem> const &members)
{
  std::vector<std::pair<std::size_t, Elem>> cand;
  cand.reserve(members.size());
  for (Elem x : members) {
    if (x != 0)
      cand.emplace_back(g.elem_order(x), x);
  }
  std::sort(cand.begin(), cand.end(), [](auto const &a, auto const &b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  });

  std::vector<Elem> gens;
  std::vector<char> in(g.order(), 0);
  in[0] = 1;
  std::size_t have = 1;
  for (auto const &[ord, x] : cand) {
    if (have == members.size())
      break;
    if (in[x])
      continue;
    gens.push_back(x);
    Subgroup h = generate(g, gens);
    for (Elem y : h.members())
      in[y] = 1;
    have = h.order();
  }
  return gens;
}

}  // namespace fusionkit
