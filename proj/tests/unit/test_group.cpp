#include "doctest.h"

#include <algorithm>
#include <map>
#include <numeric>

#include "fusionkit/algorithms.hpp"
#include "fusionkit/group.hpp"

using namespace fusionkit;

namespace
{

using Perm = std::vector<int>;

// Permutation group by brute force: all of S_n, composed left to right
// ((x)(ab) = ((x)a)b), matching right actions.
FiniteGroup symmetric_table(int n)
{
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> all;
  do
    all.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::map<Perm, Elem> idx;
  for (Elem i = 0; i < all.size(); ++i)
    idx[all[i]] = i;
  std::vector<Elem> t(all.size() * all.size());
  for (std::size_t a = 0; a < all.size(); ++a) {
    for (std::size_t b = 0; b < all.size(); ++b) {
      Perm c(n);
      for (int x = 0; x < n; ++x)
        c[x] = all[b][all[a][x]];
      t[a * all.size() + b] = idx[c];
    }
  }
  return FiniteGroup::from_table(all.size(), std::move(t));
}

FiniteGroup cyclic_table(std::size_t n)
{
  std::vector<Elem> t(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      t[a * n + b] = static_cast<Elem>((a + b) % n);
  return FiniteGroup::from_table(n, std::move(t));
}

// Same group as a Cayley model over two generators.
FiniteGroup as_cayley(FiniteGroup const &g, std::vector<Elem> const &gens)
{
  std::vector<Elem> right;
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem s : gens)
      right.push_back(g.mult(x, s));
  return FiniteGroup(std::make_shared<CayleyModel>(g.order(), gens, std::move(right)));
}

std::vector<Subgroup> all_subgroups_bruteforce(FiniteGroup const &g)
{
  std::vector<Subgroup> out;
  std::vector<std::vector<Elem>> seen;
  for (Elem a = 0; a < g.order(); ++a) {
    for (Elem b = a; b < g.order(); ++b) {
      auto h = generate(g, {a, b});
      if (std::find(seen.begin(), seen.end(), h.members()) == seen.end()) {
        seen.push_back(h.members());
        out.push_back(h);
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("table validation")
{
  CHECK_THROWS_AS(FiniteGroup::from_table(2, {0, 1, 1, 1}), GroupError);
  CHECK_THROWS_AS(FiniteGroup::from_table(2, {0, 1, 1}), GroupError);
  // identity at index 1 is moved to 0
  auto g = FiniteGroup::from_table(2, {1, 0, 0, 1}, {"a", "e"});
  CHECK(g.label(0) == "e");
  CHECK(g.mult(1, 1) == 0);
  // Latin square that is not associative (a loop of order 5)
  std::vector<Elem> loop{0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
  CHECK_THROWS_AS(FiniteGroup::from_table(5, loop), GroupError);
}

TEST_CASE("basic element arithmetic")
{
  auto s4 = symmetric_table(4);
  CHECK(s4.order() == 24);
  for (Elem x = 0; x < s4.order(); ++x) {
    CHECK(s4.mult(x, s4.inv(x)) == 0);
    CHECK(s4.pow(x, static_cast<long>(s4.elem_order(x))) == 0);
    CHECK(s4.pow(x, -1) == s4.inv(x));
  }
  CHECK(generate(s4, s4.generators()).order() == 24);
}

TEST_CASE("Cayley model agrees with the table")
{
  auto s4 = symmetric_table(4);
  auto gens = s4.generators();
  auto c = as_cayley(s4, gens);
  for (Elem a = 0; a < 24; ++a) {
    CHECK(c.inv(a) == s4.inv(a));
    for (Elem b = 0; b < 24; ++b)
      CHECK(c.mult(a, b) == s4.mult(a, b));
  }
}

TEST_CASE("normalizer and centralizer examples")
{
  auto s4 = symmetric_table(4);
  auto whole = Subgroup::whole(s4);
  CHECK(normalizer(s4, whole) == whole);
  CHECK(centralizer(s4, Subgroup::trivial(s4)) == whole);
  CHECK(center(s4).order() == 1);
  CHECK(derived_subgroup(whole).order() == 12);

  auto c6 = cyclic_table(6);
  CHECK(center(c6).order() == 6);
  CHECK(is_abelian(Subgroup::whole(c6)));
  CHECK(exponent(Subgroup::whole(c6)) == 6);
}

TEST_CASE("normalizer properties on all subgroups of S4")
{
  auto s4 = symmetric_table(4);
  auto subs = all_subgroups_bruteforce(s4);
  CHECK(subs.size() == 30);
  for (auto const &h : subs) {
    CHECK(h.is_closed());
    auto n = normalizer(s4, h);
    auto c = centralizer(s4, h);
    auto hc = product_set(h, c);
    CHECK(n.order() % hc.size() == 0);
    CHECK(n.contains(h));
    CHECK(is_normal(n, h));

    // brute force normalizer
    std::size_t count = 0;
    for (Elem g = 0; g < 24; ++g)
      count += conjugate(g, h) == h;
    CHECK(count == n.order());
  }
}

TEST_CASE("conjugacy of subgroups")
{
  auto s4 = symmetric_table(4);
  auto subs = all_subgroups_bruteforce(s4);
  std::vector<Subgroup> sylow2;
  for (auto const &h : subs)
    if (h.order() == 8)
      sylow2.push_back(h);
  REQUIRE(sylow2.size() == 3);
  auto g = are_conjugate(s4, sylow2[0], sylow2[1]);
  REQUIRE(g);
  CHECK(conjugate(*g, sylow2[0]) == sylow2[1]);
  // first witness in index order
  for (Elem x = 0; x < *g; ++x)
    CHECK(conjugate(x, sylow2[0]) != sylow2[1]);
  CHECK(are_conjugate(s4, sylow2[0], sylow2[0]) == Elem{0});
  CHECK(!are_conjugate(s4, sylow2[0], Subgroup::trivial(s4)));
}

TEST_CASE("class equation")
{
  auto s4 = symmetric_table(4);
  auto cls = conjugacy_classes(Subgroup::whole(s4));
  std::vector<std::size_t> sizes;
  for (auto const &c : cls)
    sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{1, 3, 6, 6, 8});
}

TEST_CASE("homomorphisms")
{
  auto c6 = cyclic_table(6);
  auto c3 = cyclic_table(3);
  // 1 -> 1 defines the reduction mod 3
  auto f = extend_homomorphism(c6, {1}, {1}, c3);
  REQUIRE(f);
  CHECK(f->is_homomorphism());
  CHECK(f->kernel().order() == 2);
  CHECK(f->image().order() == 3);
  CHECK(!f->is_injective());
  // 1 -> 1 from C3 to C6 is not a homomorphism
  CHECK(!extend_homomorphism(c3, {1}, {1}, c6));
  // 1 -> 2 is
  auto g = extend_homomorphism(c3, {1}, {2}, c6);
  REQUIRE(g);
  CHECK(g->is_injective());
}

TEST_CASE("subgroup as a group")
{
  auto s4 = symmetric_table(4);
  auto a4 = derived_subgroup(Subgroup::whole(s4));
  auto g = a4.as_group("A4");
  CHECK(g.order() == 12);
  CHECK(center(g).order() == 1);
  CHECK(derived_subgroup(Subgroup::whole(g)).order() == 4);
}

TEST_CASE("generation cap")
{
  auto s4 = symmetric_table(4);
  CHECK_THROWS_AS(generate(s4, s4.generators(), 10), CapExceeded);
}

TEST_CASE("semidirect product C3 x| C2 is S3")
{
  auto c3 = cyclic_table(3);
  auto c2 = cyclic_table(2);
  std::vector<Elem> action{0, 1, 2, 0, 2, 1};
  FiniteGroup s3(std::make_shared<SemidirectModel>(c3, c2, action));
  CHECK(s3.order() == 6);
  CHECK(center(s3).order() == 1);
  for (Elem a = 0; a < 6; ++a) {
    CHECK(s3.mult(a, s3.inv(a)) == 0);
    for (Elem b = 0; b < 6; ++b)
      for (Elem c = 0; c < 6; ++c)
        CHECK(s3.mult(s3.mult(a, b), c) == s3.mult(a, s3.mult(b, c)));
  }
}
