#include "doctest.h"

#include <algorithm>

#include "fusionkit/algorithms.hpp"
#include "fusionkit/extension.hpp"
#include "fusionkit/linear.hpp"
#include "fusionkit/matgroup.hpp"
#include "fusionkit/recognize.hpp"

using namespace fusionkit;

namespace
{

Subgroup klein_four(FiniteGroup const &s4)
{
  // the double transpositions form the only conjugacy class of size 3
  for (auto const &c : conjugacy_classes(Subgroup::whole(s4))) {
    if (c.size() == 3)
      return Subgroup(s4, {0, c[0], c[1], c[2]});
  }
  return Subgroup::trivial(s4);
}

std::size_t count_matrices(int p, bool det_one, bool upper)
{
  std::size_t n = 0;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c)
        for (int d = 0; d < p; ++d) {
          int det = ((a * d - b * c) % p + p) % p;
          if (det == 0 || (det_one && det != 1) || (upper && c != 0))
            continue;
          ++n;
        }
  return n;
}

}  // namespace

TEST_CASE("linear reference groups")
{
  for (int p : {2, 3, 5, 7}) {
    CHECK(LinearGroup(p, LinearKind::SL2).group().order() == count_matrices(p, true, false));
    CHECK(LinearGroup(p, LinearKind::GL2).group().order() == count_matrices(p, false, false));
    CHECK(LinearGroup(p, LinearKind::USL2).group().order() == count_matrices(p, true, true));
    CHECK(LinearGroup(p, LinearKind::UGL2).group().order() == count_matrices(p, false, true));
  }
  LinearGroup sl3(3, LinearKind::SL2);
  CHECK(center(sl3.group()).order() == 2);
  CHECK(sl3.matrix(0) == Mat2{});
  CHECK(primitive_root(3) == 2);
  CHECK(primitive_root(5) == 2);
  CHECK(primitive_root(7) == 3);
  CHECK(inverse_mod(2, 5) == 3);
}

TEST_CASE("quotients and isomorphisms")
{
  auto s4 = symmetric_group(4);
  auto v4 = klein_four(s4);
  REQUIRE(v4.order() == 4);
  REQUIRE(is_normal(Subgroup::whole(s4), v4));
  auto q = quotient(s4, v4);
  CHECK(q.group.order() == 6);
  CHECK(find_isomorphism(symmetric_group(3), q.group));
  CHECK(!find_isomorphism(cyclic_group(6), q.group));
  CHECK(find_isomorphism(LinearGroup(2, LinearKind::GL2).group(), symmetric_group(3)));
  CHECK_THROWS_AS(quotient(s4, Subgroup(s4, {0, 1})), GroupError);

  auto sl3 = LinearGroup(3, LinearKind::SL2).group();
  auto iso = find_isomorphism(sl3, to_table(sl3));
  REQUIRE(iso);
  CHECK(iso->is_homomorphism());
  CHECK(iso->is_injective());
}

TEST_CASE("splitting")
{
  auto s4 = symmetric_group(4);
  auto rep = sesverify(s4, klein_four(s4), symmetric_group(3));
  CHECK(rep.is_normal);
  CHECK(rep.quotient_iso);
  CHECK(rep.split);
  REQUIRE(rep.complement.complement);
  CHECK(rep.complement.complement->order() == 6);

  // C4 over C2 does not split
  auto c4 = cyclic_group(4);
  auto r2 = sesverify(c4, Subgroup(c4, {0, 2}), cyclic_group(2));
  CHECK(r2.quotient_iso);
  CHECK(!r2.split);

  // Q8 over its center does not split
  auto q8 = closure({std_matrix(2, StdMatrix::A, {.det_one = true}),
                     std_matrix(2, StdMatrix::B, {.det_one = true})});
  auto r3 = sesverify(q8.group(), center(q8.group()), LinearGroup(2, LinearKind::USL2).group());
  CHECK(!r3.order_matches);
  CHECK(!r3.split);

  // forced lift outside every complement
  auto c6 = cyclic_group(6);
  auto r4 = sesverify(c6, Subgroup(c6, {0, 2, 4}), cyclic_group(2), {3});
  CHECK(r4.split);
  auto r5 = sesverify(c6, Subgroup(c6, {0, 2, 4}), cyclic_group(2), {1});
  CHECK(!r5.split);
}

TEST_CASE("exhaustive complement search agrees with brute force")
{
  // every normal subgroup N of S4 and of SL2(F3): compare with a scan of all subgroups
  for (auto g : {symmetric_group(4), LinearGroup(3, LinearKind::SL2).group()}) {
    std::vector<std::vector<Elem>> subs;
    for (Elem a = 0; a < g.order(); ++a)
      for (Elem b = a; b < g.order(); ++b) {
        auto h = generate(g, {a, b});
        if (std::find(subs.begin(), subs.end(), h.members()) == subs.end())
          subs.push_back(h.members());
      }
    auto whole = Subgroup::whole(g);
    for (auto const &nm : subs) {
      Subgroup n(g, nm);
      if (!is_normal(whole, n))
        continue;
      bool brute = false;
      for (auto const &km : subs) {
        Subgroup k(g, km);
        if (k.order() * n.order() != g.order())
          continue;
        bool trivial_meet = true;
        for (Elem x : km)
          if (x != 0 && n.contains(x))
            trivial_meet = false;
        brute = brute || trivial_meet;
      }
      auto q = quotient(g, n);
      CHECK(find_complement(g, n, q).complement.has_value() == brute);
    }
  }
}

TEST_CASE("semidirect product")
{
  auto c3 = cyclic_group(3);
  auto c2 = cyclic_group(2);
  auto s3 = semidirect_product(c3, c2, [](Elem k, Elem n) { return k ? (3 - n) % 3 : n; });
  CHECK(recognize(s3) == "S3");
  CHECK_THROWS_AS(semidirect_product(c3, c2, [](Elem k, Elem n) { return k ? (n + 1) % 3 : n; }),
                  GroupError);
}

TEST_CASE("recognition")
{
  CHECK(recognize(cyclic_group(1)) == "1");
  CHECK(recognize(cyclic_group(2)) == "C2");
  CHECK(recognize(symmetric_group(4)) == "S4");
  CHECK(recognize(LinearGroup(3, LinearKind::SL2).group()) == "SL2(F3)");
  CHECK(recognize(LinearGroup(3, LinearKind::GL2).group()) == "GL2(F3)");
  CHECK(recognize(LinearGroup(5, LinearKind::USL2).group()) == "U(SL2(F5))");
  CHECK(recognize(LinearGroup(5, LinearKind::SL2).group()) == "SL2(F5)");

  auto f = std_matrix(2, StdMatrix::F);
  auto h = std_matrix(2, StdMatrix::H);
  auto ia = std_matrix(2, StdMatrix::A, {.det_one = true});
  auto ib = std_matrix(2, StdMatrix::B, {.det_one = true});
  CHECK(recognize(closure({ia, ib}).group()) == "Q8");
  CHECK(recognize(closure({ia, ib, f}).group()) == "Q16");
  CHECK(recognize(closure({ia, ib, f, h}).group()) == "O48");

  auto a5 = std_matrix(5, StdMatrix::A), b5 = std_matrix(5, StdMatrix::B);
  CHECK(recognize(closure({a5, b5}).group()) == "Extraspecial(p^3,exp p)");
  CHECK(recognize(klein_four(symmetric_group(4)).as_group()) == "C2^2");
}
