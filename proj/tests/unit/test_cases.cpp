#include "doctest.h"

#include <map>
#include <set>

#include "json.hpp"

#include "fusionkit/algorithms.hpp"
#include "fusionkit/cases.hpp"

using namespace fusionkit;

namespace
{

// Order statistics as a sorted map order -> count, computed by repeated multiplication.
std::map<std::size_t, std::size_t> order_counts(FiniteGroup const &g)
{
  std::map<std::size_t, std::size_t> out;
  for (Elem x = 0; x < g.order(); ++x) {
    std::size_t k = 1;
    for (Elem y = x; y != g.identity(); y = g.mult(y, x))
      ++k;
    ++out[k];
  }
  return out;
}

// Pairs (x, y) of Gamma independent modulo the center: for an extraspecial group of
// exponent p each such pair is the image of (a, b) under exactly one automorphism.
std::size_t independent_pairs(GammaModel const &gm)
{
  auto const &g = gm.table;
  std::size_t n = 0;
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y = 0; y < g.order(); ++y)
      n += g.mult(g.mult(x, y), g.mult(g.inv(x), g.inv(y))) != g.identity();
  return n;
}

long sign_of_reversal(int p)
{
  // parity of i -> -i mod p by counting inversions
  long inv = 0;
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j)
      inv += ((p - i) % p) > ((p - j) % p);
  return inv % 2 ? -1 : 1;
}

}  // namespace

TEST_CASE("case configuration")
{
  CHECK(parse_case("SUp") == CaseKind::SUp);
  CHECK(parse_case("az") == CaseKind::AZ);
  CHECK_FALSE(parse_case("so").has_value());
  for (auto k : {CaseKind::Up, CaseKind::SUp, CaseKind::AZ})
    CHECK(parse_case(case_name(k)) == k);

  CHECK_THROWS_AS((CaseConfig{CaseKind::SUp, 11, 1, std::nullopt}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((CaseConfig{CaseKind::AZ, 2, 1, std::nullopt}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((CaseConfig{CaseKind::AZ, 5, 1, 34}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((CaseConfig{CaseKind::Up, 5, 1, 29}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((CaseConfig{CaseKind::Up, 5, 0, std::nullopt}.validate()), std::invalid_argument);
  CHECK_NOTHROW((CaseConfig{CaseKind::AZ, 5, 1, 31}.validate()));

  auto all = all_cases(1);
  CHECK(all.size() == 12);
  for (auto const &c : all)
    CHECK_NOTHROW(c.validate());
  CHECK(az_prime(12) == 3);
  CHECK(az_prime(29) == 5);
  CHECK(az_prime(31) == 5);
  CHECK(az_prime(34) == 7);
  CHECK(az_prime(4) == 0);
}

TEST_CASE("gamma model against a direct enumeration of z^c A^i B^j")
{
  for (int p : {2, 3, 5}) {
    GammaModel gm(p);
    std::set<std::string> words;
    for (int c = 0; c < (p == 2 ? 2 : p); ++c)
      for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j)
          words.insert((gm.Z.pow(c) * gm.A.pow(i) * gm.B.pow(j)).to_string());
    CHECK(words.size() == gm.group.order());
    CHECK(gm.group.order() == static_cast<std::size_t>(p * p * p));
  }
}

TEST_CASE("tau determinant matches the parity of i -> -i")
{
  for (int p : {3, 5, 7}) {
    auto const tau = std_matrix(p, StdMatrix::Tau);
    long const s = sign_of_reversal(p);
    CHECK(tau.det().is_one() == (s == 1));
    auto r = verify_tau({CaseKind::SUp, p, 1, std::nullopt});
    CHECK(r.all_pass());
    CHECK(r.find("tau.su-representative")->status == CheckStatus::Pass);
  }
}

TEST_CASE("Aut(Gamma) order matches the count of independent generating pairs")
{
  for (int p : {3, 5}) {
    auto d = gamma_aut(p);
    CHECK(d->aut->order() == independent_pairs(*d->gamma));
    REQUIRE(d->complement.has_value());
    CHECK(d->complement->contains(d->c_d));
    CHECK(d->complement->contains(d->c_sigma));
    CHECK(gamma_aut(p).get() == d.get());
  }
  CHECK_THROWS(gamma_aut(2));
}

TEST_CASE("chain normalizer order from distinct conjugation actions")
{
  for (int p : {3, 5}) {
    CaseConfig cfg{CaseKind::SUp, p, 1, std::nullopt};
    auto nz = build_normalizers(cfg);
    CHECK(nz.report.all_pass());
    GammaModel gm(p);
    std::set<std::vector<Elem>> actions;
    std::size_t scalars = 0;
    for (auto const &m : nz.n_chain.elements()) {
      auto img = gm.conjugation(m);
      REQUIRE(img.has_value());
      actions.insert(*img);
      scalars += m.is_scalar();
    }
    std::size_t const P = p;
    // Inn(Gamma) times the upper unitriangular-by-diagonal part of SL2
    CHECK(actions.size() == P * P * P * (P - 1));
    CHECK(scalars == P);
    CHECK(nz.n_chain.order() == actions.size() * scalars);
    CHECK(nz.n_full.order() == (P + 1) * nz.n_chain.order());
  }
}

TEST_CASE("quaternion normalizers by element order statistics")
{
  auto nz = build_normalizers({CaseKind::SUp, 2, 1, std::nullopt});
  CHECK(nz.report.all_pass());
  std::map<std::size_t, std::size_t> q16{{1, 1}, {2, 1}, {4, 10}, {8, 4}};
  std::map<std::size_t, std::size_t> o48{{1, 1}, {2, 1}, {3, 8}, {4, 18}, {6, 8}, {8, 12}};
  CHECK(order_counts(nz.n_chain.group()) == q16);
  CHECK(order_counts(nz.n_full) == o48);
}

TEST_CASE("exotic semidirect orders")
{
  auto r = verify_az({CaseKind::AZ, 3, 1, 12});
  CHECK(r.all_pass());
  auto d = gamma_aut(3);
  auto const ku = d->preimage(LinearKind::UGL2, *d->complement);
  auto g = gamma_semidirect(*d, ku, "U");
  CHECK(g.order() == 324);
  auto quad = order_counts(g);
  std::size_t total = 0;
  for (auto [o, c] : quad) {
    CHECK(324 % o == 0);
    total += c;
  }
  CHECK(total == 324);
}

TEST_CASE("decomposition shapes")
{
  for (auto const &cfg : all_cases(1)) {
    auto dec = emit_decomposition(cfg);
    bool const w = cfg.kind == CaseKind::AZ || cfg.p >= 5;
    CHECK(dec.poset.nodes.size() == (w ? 5u : 3u));
    CHECK(has_ei_property(dec.poset));
    CHECK(dec.diagram.nodes.size() == 3);
    CHECK(dec.diagram.edges.size() == 2);
    std::size_t isos = 0;
    for (auto const &a : dec.poset.arrows)
      isos += a.restriction_iso;
    CHECK(isos == (w ? 1u : 0u));
    if (cfg.kind == CaseKind::AZ) {
      bool symbolic = false;
      for (auto const &n : dec.poset.nodes)
        symbolic = symbolic || !n.aut.autL_order.has_value();
      CHECK(symbolic);
    }
    if (cfg.kind == CaseKind::Up)
      CHECK(dec.poset.nodes[0].aut.annotation.find("S^1") != std::string::npos);
    auto j = nlohmann::json::parse(dec.diagram.to_json());
    CHECK(j["nodes"].size() == 3);
  }
}

TEST_CASE("full case reports at p = 3")
{
  for (auto kind : {CaseKind::Up, CaseKind::SUp, CaseKind::AZ}) {
    CaseConfig cfg{kind, 3, 1, std::nullopt};
    auto r = verify_case(cfg);
    CHECK(r.all_pass());
    CHECK(r.count(CheckStatus::Skipped) == 0);
    auto j = nlohmann::json::parse(r.to_json());
    CHECK(j["summary"]["pass"].get<std::size_t>() == r.checks.size());
    CHECK(j["checks"].size() == r.checks.size());
  }
}

TEST_CASE("statuses do not change between levels 1 and 2 for p = 2, 3")
{
  for (auto kind : {CaseKind::Up, CaseKind::SUp, CaseKind::AZ})
    for (int p : {2, 3}) {
      if (kind == CaseKind::AZ && p == 2)
        continue;
      auto r1 = verify_case({kind, p, 1, std::nullopt});
      auto r2 = verify_case({kind, p, 2, std::nullopt});
      REQUIRE(r1.checks.size() == r2.checks.size());
      for (std::size_t i = 0; i < r1.checks.size(); ++i) {
        CHECK(r1.checks[i].claim_id == r2.checks[i].claim_id);
        CHECK(r1.checks[i].status == r2.checks[i].status);
      }
    }
}

TEST_CASE("emitted artifacts are byte-identical across runs")
{
  for (auto const &cfg : all_cases(1)) {
    auto a = emit_decomposition(cfg);
    auto b = emit_decomposition(cfg);
    CHECK(a.diagram.to_json() == b.diagram.to_json());
    CHECK(a.diagram.to_dot() == b.diagram.to_dot());
  }
  CaseConfig cfg{CaseKind::SUp, 3, 1, std::nullopt};
  CHECK(verify_case(cfg).to_json() == verify_case(cfg).to_json());
}
