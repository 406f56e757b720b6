#include "doctest.h"

#include "fusionkit/fusion.hpp"
#include "fusionkit/linear.hpp"
#include "fusionkit/table_io.hpp"

using namespace fusionkit;

TEST_CASE("group tables round trip")
{
  for (auto const &name : {"s3", "s4", "gl2-3", "gamma-3", "n-chain-2"}) {
    auto t = builtin_group(name);
    auto back = parse_group_table(group_table_json(t.group, t.prime));
    CHECK(back.prime == t.prime);
    REQUIRE(back.group.order() == t.group.order());
    for (Elem a = 0; a < t.group.order(); ++a)
      for (Elem b = 0; b < t.group.order(); ++b)
        CHECK(back.group.mult(a, b) == t.group.mult(a, b));
    CHECK(back.group.name() == t.group.name());
  }
  CHECK(builtin_group("gamma-5").group.order() == 125);
  CHECK(builtin_group("n-full-3").group.order() == 648);
}

TEST_CASE("malformed group tables")
{
  CHECK_THROWS_AS(parse_group_table("{"), std::invalid_argument);
  CHECK_THROWS_AS(parse_group_table(R"({"order": 2, "mult": [0,1,1], "prime": 2})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_group_table(R"({"order": 2, "mult": [0,1,1,2], "prime": 2})"), std::invalid_argument);
  // not associative / no inverses
  CHECK_THROWS_AS(parse_group_table(R"({"order": 2, "mult": [0,1,1,1], "prime": 2})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_group_table(R"({"order": 2, "mult": [0,1,1,0]})"), std::invalid_argument);
  CHECK_THROWS_AS(builtin_group("gamma-11"), std::invalid_argument);
  auto ok = parse_group_table(R"({"order": 2, "mult": [0,1,1,0], "labels": ["e","t"], "prime": 2})");
  CHECK(ok.group.label(1) == "t");
}
