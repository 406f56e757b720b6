#include "doctest.h"

#include <algorithm>
#include <set>

#include "fusionkit/algorithms.hpp"
#include "fusionkit/extension.hpp"
#include "fusionkit/fusion.hpp"
#include "fusionkit/linear.hpp"

using namespace fusionkit;

namespace
{

// All subgroups of g generated by at most two elements (every subgroup of the small
// groups used here).
std::vector<Subgroup> two_generated(FiniteGroup const &g)
{
  std::set<std::vector<Elem>> seen;
  std::vector<Subgroup> out;
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = a; b < g.order(); ++b) {
      auto h = generate(g, {a, b});
      if (seen.insert(h.members()).second)
        out.push_back(h);
    }
  return out;
}

bool inside_after(FiniteGroup const &g, Elem x, Subgroup const &h, Subgroup const &k)
{
  for (Elem y : h.members())
    if (!k.contains(g.conj(x, y)))
      return false;
  return true;
}

bool brute_centric(FiniteGroup const &g, Subgroup const &s, Subgroup const &p)
{
  for (Elem x = 0; x < g.order(); ++x) {
    if (!inside_after(g, x, p, s))
      continue;
    auto q = conjugate(x, p);
    for (Elem c : s.members()) {
      bool commutes = true;
      for (Elem y : q.members())
        commutes = commutes && g.mult(c, y) == g.mult(y, c);
      if (commutes && !q.contains(c))
        return false;
    }
  }
  return true;
}

bool brute_radical(FiniteGroup const &g, Subgroup const &p, int prime)
{
  auto n = normalizer(g, p);
  auto c = centralizer(g, p);
  auto ng = n.as_group();
  auto const &m = dynamic_cast<SubgroupModel const &>(ng.model());
  std::vector<Elem> pc;
  for (Elem x : product_set(p, c))
    pc.push_back(m.to_local(x));
  auto q = quotient(ng, Subgroup(ng, pc)).group;
  auto whole = Subgroup::whole(q);
  for (auto const &h : two_generated(q)) {
    if (h.order() > 1 && is_p_group(h, prime) && is_normal(whole, h))
      return false;
  }
  return true;
}

// Chain classes by pairwise conjugacy, with no canonical forms.
std::size_t brute_chain_classes(FusionData const &fd)
{
  auto const &g = fd.G;
  std::vector<Subgroup> cr;
  for (auto const &h : two_generated(g))
    if (fd.S.contains(h) && h.order() > 1 && brute_centric(g, fd.S, h) &&
        brute_radical(g, h, fd.p))
      cr.push_back(h);
  std::vector<std::vector<Subgroup>> chains;
  std::function<void(std::vector<Subgroup> &)> grow = [&](std::vector<Subgroup> &c) {
    chains.push_back(c);
    for (auto const &h : cr)
      if (h.order() > c.back().order() && h.contains(c.back())) {
        c.push_back(h);
        grow(c);
        c.pop_back();
      }
  };
  for (auto const &h : cr) {
    std::vector<Subgroup> c{h};
    grow(c);
  }
  std::vector<std::size_t> cls(chains.size());
  std::size_t count = 0;
  for (std::size_t i = 0; i < chains.size(); ++i) {
    cls[i] = count;
    for (std::size_t j = 0; j < i; ++j) {
      if (chains[j].size() != chains[i].size())
        continue;
      bool match = false;
      for (Elem x = 0; x < g.order() && !match; ++x) {
        bool all = true;
        for (std::size_t t = 0; t < chains[i].size() && all; ++t)
          all = conjugate(x, chains[j][t]) == chains[i][t];
        match = all;
      }
      if (match) {
        cls[i] = cls[j];
        break;
      }
    }
    if (cls[i] == count)
      ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("Sylow subgroups")
{
  auto s4 = symmetric_group(4);
  CHECK(sylow_subgroup(s4, 2).order() == 8);
  CHECK(sylow_subgroup(s4, 3).order() == 3);
  CHECK(sylow_subgroup(s4, 5).order() == 1);
  auto gl = LinearGroup(3, LinearKind::GL2).group();
  CHECK(sylow_subgroup(gl, 2).order() == 16);
  CHECK(sylow_subgroup(gl, 3).order() == 3);
}

TEST_CASE("subgroups of a p-group")
{
  auto s4 = symmetric_group(4);
  auto fd = FusionData::make(s4, 2);
  auto subs = subgroups_of_p_group(fd.S, 2);
  std::size_t brute = 0;
  for (auto const &h : two_generated(s4))
    brute += fd.S.contains(h);
  CHECK(subs.size() == brute);
  CHECK(subs.size() == 10);  // D8
}

TEST_CASE("centric and radical subgroups against brute force")
{
  for (auto [g, p] : {std::pair{symmetric_group(4), 2}, std::pair{symmetric_group(4), 3},
                      std::pair{LinearGroup(3, LinearKind::GL2).group(), 2},
                      std::pair{LinearGroup(3, LinearKind::SL2).group(), 2}}) {
    auto fd = FusionData::make(g, p);
    for (auto const &h : subgroups_of_p_group(fd.S, p)) {
      CHECK(is_f_centric(fd, h) == brute_centric(g, fd.S, h));
      if (h.order() > 1)
        CHECK(is_f_radical(fd, h) == brute_radical(g, h, p));
    }
  }
}

TEST_CASE("hom_f counts conjugation maps")
{
  auto fd = FusionData::make(symmetric_group(4), 2);
  for (auto const &h : subgroups_of_p_group(fd.S, 2)) {
    auto maps = hom_f(fd, h, h);
    CHECK(maps.size() == normalizer(fd.G, h).order() / centralizer(fd.G, h).order());
    for (auto const &m : maps) {
      CHECK(m.is_homomorphism());
      CHECK(m.is_injective());
    }
  }
}

TEST_CASE("S4 at p = 2")
{
  auto fd = FusionData::make(symmetric_group(4), 2);
  auto cr = centric_radical_classes(fd);
  REQUIRE(cr.size() == 2);
  CHECK(cr[0].order() == 4);
  CHECK(is_normal(Subgroup::whole(fd.G), cr[0]));
  CHECK(cr[1] == fd.S);

  auto poset = sd_poset(fd);
  REQUIRE(poset.nodes.size() == 3);
  CHECK(poset.nodes.size() == brute_chain_classes(fd));
  CHECK(has_ei_property(poset));
  CHECK(poset.nodes[0].names == std::vector<std::string>{"C2^2"});
  CHECK(poset.nodes[1].names == std::vector<std::string>{"D8"});
  CHECK(poset.nodes[2].names == std::vector<std::string>{"C2^2", "D8"});
  CHECK(poset.nodes[0].aut.autL_order == 24u);
  CHECK(poset.nodes[0].aut.tag == "S4");
  CHECK(poset.nodes[1].aut.autL_order == 8u);
  CHECK(poset.nodes[2].aut.autL_order == 8u);
  CHECK(poset.has_arrow(2, 0));
  CHECK(poset.has_arrow(2, 1));
  CHECK(poset.arrows.size() == 2);
  for (auto const &a : poset.arrows)
    CHECK(a.restriction_iso == (a.dst == 1));
  for (auto const &n : poset.nodes) {
    CHECK(n.aut.ses_identity);
    CHECK(n.aut.restriction_injective);
  }

  auto d = collapse(poset, "S4");
  REQUIRE(d.nodes.size() == 1);
  CHECK(d.nodes[0].chain == std::vector<std::string>{"C2^2"});
  CHECK(d.nodes[0].autL_order == 24u);
  CHECK(d.edges.empty());
  CHECK(d.to_json().find("\"schema_version\": 1") != std::string::npos);
  CHECK(d.to_dot().find("digraph") == 0);

  auto full = poset_diagram(poset, "S4");
  CHECK(full.nodes.size() == 3);
  CHECK(full.edges.size() == 2);
}

TEST_CASE("chain classes agree with pairwise conjugacy")
{
  for (auto [g, p] : {std::pair{LinearGroup(3, LinearKind::GL2).group(), 2},
                      std::pair{LinearGroup(3, LinearKind::SL2).group(), 2},
                      std::pair{symmetric_group(4), 3}}) {
    auto fd = FusionData::make(g, p);
    auto poset = sd_poset(fd);
    CHECK(poset.nodes.size() == brute_chain_classes(fd));
    CHECK(has_ei_property(poset));
    for (auto const &n : poset.nodes)
      CHECK(n.aut.ses_identity);
  }
}

TEST_CASE("canonical chains are conjugation invariant")
{
  auto fd = FusionData::make(LinearGroup(3, LinearKind::GL2).group(), 2);
  auto subs = subgroups_of_p_group(fd.S, 2);
  auto const &g = fd.G;
  for (auto const &h : subs) {
    if (h.order() != 4)
      continue;
    Chain c{{h, fd.S}};
    auto key = chain_key(fd, c);
    for (Elem x = 0; x < g.order(); x += 5) {
      if (!inside_after(g, x, fd.S, fd.S))
        continue;
      Chain moved{{conjugate(x, h), conjugate(x, fd.S)}};
      CHECK(chain_key(fd, moved) == key);
    }
    auto canon = canonical_chain(fd, c);
    CHECK(chain_key(fd, canon) == key);
  }
}

TEST_CASE("degenerate fusion systems")
{
  // abelian S with G = S: only S itself
  auto c4 = cyclic_group(4);
  auto fd = FusionData::make(c4, 2);
  auto poset = sd_poset(fd);
  REQUIRE(poset.nodes.size() == 1);
  CHECK(poset.nodes[0].aut.autL_order == 4u);
  CHECK(collapse(poset).nodes.size() == 1);

  // trivial S
  auto fd3 = FusionData::make(cyclic_group(3), 2);
  CHECK(fd3.S.order() == 1);
  CHECK(sd_poset(fd3).nodes.empty());

  // non-centric member is rejected
  auto s4 = FusionData::make(symmetric_group(4), 2);
  auto subs = subgroups_of_p_group(s4.S, 2);
  CHECK_THROWS_AS(chain_aut(s4, Chain{{subs[0]}}), GroupError);
}
