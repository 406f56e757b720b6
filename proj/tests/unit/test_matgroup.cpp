#include "doctest.h"

#include <algorithm>
#include <set>

#include "fusionkit/algorithms.hpp"
#include "fusionkit/matgroup.hpp"

using namespace fusionkit;

namespace
{

std::vector<std::size_t> sorted_hashes(MatrixGroup const &g)
{
  std::vector<std::size_t> h;
  for (auto const &x : g.elements())
    h.push_back(x.hash());
  std::sort(h.begin(), h.end());
  return h;
}

}  // namespace

TEST_CASE("named matrices")
{
  auto a = std_matrix(3, StdMatrix::A);
  CHECK(a == CycMatrix::diagonal({CycNum::one(3), CycNum::root(3, 1), CycNum::root(3, 2)}));

  auto f = std_matrix(2, StdMatrix::F);
  auto ia = std_matrix(2, StdMatrix::A, {.det_one = true});
  CHECK(f.pow(4) == CycMatrix::scalar(2, CycNum::rational(8, -1)));
  CHECK(f.pow(2) == ia);

  auto tau = std_matrix(5, StdMatrix::Tau);
  // (2,5)(3,4) in 1-based labels
  std::vector<int> perm{0, 4, 3, 2, 1};
  CHECK(tau == CycMatrix::permutation(perm, 5));

  CHECK_THROWS_AS(std_matrix(3, StdMatrix::F), std::invalid_argument);
  CHECK_THROWS_AS(std_matrix(2, StdMatrix::D), std::invalid_argument);
  CHECK_THROWS_AS(std_matrix(5, StdMatrix::Sigma, {.k = 5}), std::invalid_argument);
  CHECK_THROWS_AS(std_matrix(4, StdMatrix::A), std::invalid_argument);
}

TEST_CASE("matrix predicates")
{
  CHECK(std_matrix(5, StdMatrix::A).det().is_one());
  CHECK(std_matrix(2, StdMatrix::H).is_unitary());
  auto r = mat_report(std_matrix(7, StdMatrix::B));
  CHECK(r.order == 7);
  CHECK(r.monomial);
  CHECK(!r.diagonal);
  auto two = CycMatrix::scalar(3, CycNum::rational(3, 2));
  CHECK_THROWS_AS(mat_report(two, 50), CapExceeded);
}

TEST_CASE("extraspecial closures")
{
  auto g3 = closure({std_matrix(3, StdMatrix::A), std_matrix(3, StdMatrix::B),
                     std_matrix(3, StdMatrix::ZetaI)},
                    50);
  CHECK(g3.order() == 27);
  auto rep = group_report(g3);
  CHECK(rep.center_order == 3);
  CHECK(rep.derived_order == 3);
  CHECK(rep.all_unitary);
  CHECK(rep.all_det_one);
  auto z = center(g3.group());
  for (Elem x : z.members())
    CHECK(g3.element(x).is_scalar());

  auto q8 = closure({std_matrix(2, StdMatrix::A, {.det_one = true}),
                     std_matrix(2, StdMatrix::B, {.det_one = true})},
                    20);
  CHECK(q8.order() == 8);
  auto stats = order_statistics(Subgroup::whole(q8.group()));
  CHECK(stats == std::map<std::size_t, std::size_t>{{1, 1}, {2, 1}, {4, 6}});

  CHECK(closure({CycMatrix::identity(4, 5)}, 10).order() == 1);
  CHECK_THROWS_AS(closure({std_matrix(5, StdMatrix::A), std_matrix(5, StdMatrix::B)}, 50),
                  CapExceeded);
}

TEST_CASE("closure is independent of generator order")
{
  auto a = std_matrix(5, StdMatrix::A), b = std_matrix(5, StdMatrix::B);
  auto g1 = closure({a, b});
  auto g2 = closure({b, a, b * a});
  CHECK(g1.order() == 125);
  CHECK(sorted_hashes(g1) == sorted_hashes(g2));
  for (auto const &x : g2.elements())
    CHECK(g1.find(x));
}

TEST_CASE("group model matches matrix products")
{
  auto g = closure({std_matrix(3, StdMatrix::A), std_matrix(3, StdMatrix::B),
                    std_matrix(3, StdMatrix::D), std_matrix(3, StdMatrix::Sigma, {.k = 2})});
  auto const &G = g.group();
  for (Elem x = 0; x < g.order(); x += 7) {
    CHECK(g.element(G.inv(x)) == g.element(x).inverse());
    for (Elem y = 0; y < g.order(); y += 5)
      CHECK(g.element(G.mult(x, y)) == g.element(x) * g.element(y));
  }
  // conjugation by any element permutes the element set
  for (Elem c : g.generators()) {
    std::set<Elem> image;
    for (Elem x = 0; x < g.order(); ++x)
      image.insert(G.conj(c, x));
    CHECK(image.size() == g.order());
  }
}

TEST_CASE("torus normalizer membership")
{
  auto a = std_matrix(3, StdMatrix::A);
  CHECK(torus_normalizer_level(a, 3) == 1);
  CHECK(torus_normalizer_level(std_matrix(3, StdMatrix::Tau), 3) == std::nullopt);
  auto q8 = closure({std_matrix(2, StdMatrix::A, {.det_one = true}),
                     std_matrix(2, StdMatrix::B, {.det_one = true})});
  CHECK(torus_normalizer_level(q8, 2) == 2);
  CHECK(torus_normalizer_level(std_matrix(2, StdMatrix::F), 2) == 3);
  CHECK(torus_normalizer_level(std_matrix(2, StdMatrix::H), 2) == std::nullopt);
}

TEST_CASE("json dump")
{
  auto q8 = closure({std_matrix(2, StdMatrix::A, {.det_one = true}),
                     std_matrix(2, StdMatrix::B, {.det_one = true})});
  auto s = matrix_group_json(q8);
  CHECK(s.find("\"order\":8") != std::string::npos);
  CHECK(s.find("\"conductor\":8") != std::string::npos);
}
