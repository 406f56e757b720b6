#include "doctest.h"

#include "fusionkit/algorithms.hpp"
#include "fusionkit/automorphism.hpp"
#include "fusionkit/extension.hpp"
#include "fusionkit/linear.hpp"
#include "fusionkit/matgroup.hpp"

using namespace fusionkit;

namespace
{

struct Heis
{
  MatrixGroup mg;
  FiniteGroup g;
  Elem a, b;
};

Heis heisenberg(int p)
{
  bool const two = p == 2;
  auto A = std_matrix(p, StdMatrix::A, {.det_one = two});
  auto B = std_matrix(p, StdMatrix::B, {.det_one = two});
  Heis h{closure({A, B}), {}, 0, 0};
  h.g = to_table(h.mg.group());
  h.a = h.mg.index_of(A);
  h.b = h.mg.index_of(B);
  return h;
}

std::vector<std::vector<Elem>> seeds(Heis const &h, int xi)
{
  auto const &g = h.g;
  Elem a = h.a, b = h.b;
  return {
    {a, g.conj(a, b)},               // inner by a
    {g.conj(b, a), b},               // inner by b
    {g.mult(a, b), b},               // transvection
    {b, g.inv(a)},                   // rotation
    {g.pow(a, xi), b},               // scaling
  };
}

std::size_t aut_formula(std::size_t p) { return p * p * p * (p - 1) * (p * p - 1); }

}  // namespace

TEST_CASE("Aut of the extraspecial group by pair scan")
{
  for (int p : {3, 5}) {
    auto h = heisenberg(p);
    AutOptions opt;
    opt.method = AutMethod::PairScan;
    opt.seeds = seeds(h, primitive_root(p));
    AutomorphismGroup aut(h.g, {h.a, h.b}, opt);
    CHECK(aut.enumerated() == aut_formula(p));
    CHECK(aut.order() == aut_formula(p));
    CHECK(aut.candidates() == aut.enumerated());
    CHECK(aut.dual_route_agrees());
    CHECK(aut.inner_subgroup().order() == static_cast<std::size_t>(p * p));
  }
}

TEST_CASE("Aut(Q8) by backtracking")
{
  auto h = heisenberg(2);
  AutOptions opt;
  opt.seeds = seeds(h, 1);
  AutomorphismGroup aut(h.g, {h.a, h.b}, opt);
  CHECK(aut.order() == 24);
  CHECK(aut.dual_route_agrees());
  CHECK(find_isomorphism(symmetric_group(4), aut.group()));
}

TEST_CASE("Aut of a cyclic group")
{
  for (std::size_t p : {2, 3, 5, 7}) {
    AutomorphismGroup aut(cyclic_group(p), {1});
    CHECK(aut.order() == p - 1);
    CHECK(!aut.dual_route_agrees());
  }
}

TEST_CASE("induced action on the Frattini quotient")
{
  int const p = 3;
  auto h = heisenberg(p);
  AutOptions opt;
  opt.method = AutMethod::PairScan;
  opt.seeds = seeds(h, 2);
  AutomorphismGroup aut(h.g, {h.a, h.b}, opt);
  PlaneCoords coords(h.g, h.a, h.b, p);
  LinearGroup gl(p, LinearKind::GL2);

  std::vector<Elem> img(aut.order());
  for (Elem f = 0; f < aut.order(); ++f)
    img[f] = gl.index_of(induced_matrix(aut, coords, f));
  GroupMap m(aut.group(), gl.group(), img);
  CHECK(m.is_homomorphism());
  CHECK(m.image().order() == gl.group().order());
  CHECK(m.kernel() == aut.inner_subgroup());

  // full images agree with single-element application
  for (Elem f = 0; f < aut.order(); f += 17) {
    auto fm = aut.full_map(f);
    for (Elem x = 0; x < h.g.order(); ++x)
      CHECK(fm[x] == aut.apply(f, x));
  }
}

TEST_CASE("bad seeds are rejected")
{
  auto h = heisenberg(3);
  AutOptions opt;
  opt.seeds = {{h.a, h.a}};
  CHECK_THROWS_AS(AutomorphismGroup(h.g, {h.a, h.b}, opt), GroupError);
}
