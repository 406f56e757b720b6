#include "fusionkit/algorithms.hpp"

#include <algorithm>
#include <numeric>

namespace fusionkit
{

Subgroup conjugate(Elem g, Subgroup const &h)
{
  auto const &G = h.parent();
  std::vector<Elem> m;
  m.reserve(h.order());
  Elem const gi = G.inv(g);
  for (Elem x : h.members())
    m.push_back(G.mult(G.mult(g, x), gi));
  return Subgroup(G, std::move(m));
}

Subgroup normalizer(Subgroup const &within, Subgroup const &h)
{
  auto const &G = within.parent();
  auto const &gens = h.gens();
  std::vector<Elem> n;
  for (Elem g : within.members()) {
    Elem const gi = G.inv(g);
    bool ok = true;
    for (Elem x : gens) {
      if (!h.contains(G.mult(G.mult(g, x), gi))) {
        ok = false;
        break;
      }
    }
    if (ok)
      n.push_back(g);
  }
  return Subgroup(G, std::move(n));
}

Subgroup normalizer(FiniteGroup const &g, Subgroup const &h)
{
  return normalizer(Subgroup::whole(g), h);
}

Subgroup centralizer(Subgroup const &within, Subgroup const &h)
{
  auto const &G = within.parent();
  auto const &gens = h.gens();
  std::vector<Elem> c;
  for (Elem g : within.members()) {
    bool ok = true;
    for (Elem x : gens) {
      if (G.mult(g, x) != G.mult(x, g)) {
        ok = false;
        break;
      }
    }
    if (ok)
      c.push_back(g);
  }
  return Subgroup(G, std::move(c));
}

Subgroup centralizer(FiniteGroup const &g, Subgroup const &h)
{
  return centralizer(Subgroup::whole(g), h);
}

Subgroup center(Subgroup const &h) { return centralizer(h, h); }

Subgroup center(FiniteGroup const &g) { return center(Subgroup::whole(g)); }

bool is_normal(Subgroup const &within, Subgroup const &h)
{
  auto const &G = within.parent();
  for (Elem g : within.gens()) {
    Elem const gi = G.inv(g);
    for (Elem x : h.gens()) {
      if (!h.contains(G.mult(G.mult(g, x), gi)))
        return false;
    }
  }
  return true;
}

std::optional<Elem> are_conjugate(Subgroup const &within, Subgroup const &h1, Subgroup const &h2)
{
  if (h1.order() != h2.order())
    return std::nullopt;
  auto const &G = within.parent();
  auto const &gens = h1.gens();
  for (Elem g : within.members()) {
    Elem const gi = G.inv(g);
    bool ok = true;
    for (Elem x : gens) {
      if (!h2.contains(G.mult(G.mult(g, x), gi))) {
        ok = false;
        break;
      }
    }
    if (ok)
      return g;
  }
  return std::nullopt;
}

std::optional<Elem> are_conjugate(FiniteGroup const &g, Subgroup const &h1, Subgroup const &h2)
{
  return are_conjugate(Subgroup::whole(g), h1, h2);
}

Subgroup normal_closure(Subgroup const &within, std::vector<Elem> const &elems)
{
  auto const &G = within.parent();
  auto const &wg = within.gens();
  std::vector<char> in(G.order(), 0);
  std::vector<Elem> members{0};
  in[0] = 1;
  // BFS over products with conjugates: closing under right multiplication by
  // every conjugate of every seed, and under conjugation by generators.
  std::vector<Elem> seeds;
  std::vector<char> seed_in(G.order(), 0);
  auto add_seed = [&](Elem s) {
    if (!seed_in[s]) {
      seed_in[s] = 1;
      seeds.push_back(s);
    }
  };
  for (Elem e : elems)
    add_seed(e);
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    for (Elem g : wg)
      add_seed(G.conj(g, seeds[i]));
  }
  for (std::size_t head = 0; head < members.size(); ++head) {
    Elem x = members[head];
    for (Elem s : seeds) {
      Elem y = G.mult(x, s);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
      }
    }
  }
  Subgroup n(G, std::move(members));
  return n;
}

Subgroup derived_subgroup(Subgroup const &h)
{
  auto const &G = h.parent();
  auto const &gens = h.gens();
  std::vector<Elem> comms;
  for (Elem a : gens) {
    for (Elem b : gens) {
      Elem c = G.commutator(a, b);
      if (c != 0)
        comms.push_back(c);
    }
  }
  return normal_closure(h, comms);
}

std::vector<std::vector<Elem>> conjugacy_classes(Subgroup const &within)
{
  auto const &G = within.parent();
  std::vector<char> done(G.order(), 0);
  std::vector<std::vector<Elem>> classes;
  auto const &gens = within.gens();
  for (Elem x : within.members()) {
    if (done[x])
      continue;
    std::vector<Elem> cls{x};
    done[x] = 1;
    for (std::size_t head = 0; head < cls.size(); ++head) {
      for (Elem g : gens) {
        Elem y = G.conj(g, cls[head]);
        if (!done[y]) {
          done[y] = 1;
          cls.push_back(y);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  std::size_t total = 0;
  for (auto const &c : classes) {
    total += c.size();
    if (within.order() % c.size() != 0)
      throw GroupError("conjugacy class size does not divide the group order");
  }
  if (total != within.order())
    throw GroupError("class equation fails");
  return classes;
}

std::size_t exponent(Subgroup const &h)
{
  std::size_t e = 1;
  for (Elem x : h.members())
    e = std::lcm(e, h.parent().elem_order(x));
  return e;
}

bool is_abelian(Subgroup const &h)
{
  auto const &G = h.parent();
  auto const &gens = h.gens();
  for (Elem a : gens) {
    for (Elem b : gens) {
      if (G.mult(a, b) != G.mult(b, a))
        return false;
    }
  }
  return true;
}

bool is_power_of(std::size_t n, std::size_t p)
{
  if (n == 0 || p < 2)
    return false;
  while (n % p == 0)
    n /= p;
  return n == 1;
}

bool is_p_group(Subgroup const &h, std::size_t p) { return is_power_of(h.order(), p); }

std::map<std::size_t, std::size_t> order_statistics(Subgroup const &h)
{
  std::map<std::size_t, std::size_t> stats;
  for (Elem x : h.members())
    ++stats[h.parent().elem_order(x)];
  return stats;
}

std::vector<Elem> product_set(Subgroup const &a, Subgroup const &b)
{
  auto const &G = a.parent();
  std::vector<char> in(G.order(), 0);
  std::vector<Elem> out;
  for (Elem x : a.members()) {
    for (Elem y : b.members()) {
      Elem z = G.mult(x, y);
      if (!in[z]) {
        in[z] = 1;
        out.push_back(z);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fusionkit
