#pragma once

#include <string>
#include <vector>

#include "fusionkit/group.hpp"

namespace fusionkit
{

/// A group given by its multiplication table together with a designated prime.
struct GroupTable
{
  FiniteGroup group;
  int prime = 0;
};

// Reads {order, mult, labels, prime}; throws std::invalid_argument on malformed input
// or a table that is not a group.
GroupTable parse_group_table(std::string const &text);
GroupTable read_group_table(std::string const &path);

std::string group_table_json(FiniteGroup const &g, int prime);

// Names accepted by builtin_group.
std::vector<std::string> builtin_group_names();
// "s4", "gl2-3", "gamma-5", "n-chain-3", ...; throws std::invalid_argument otherwise.
GroupTable builtin_group(std::string const &name);

}  // namespace fusionkit
