#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "fusionkit/group.hpp"

namespace fusionkit
{

// All functions below work inside a common parent group. `within` restricts
// the scan to a subgroup; the FiniteGroup overloads scan the whole group.

Subgroup conjugate(Elem g, Subgroup const &h);

Subgroup normalizer(Subgroup const &within, Subgroup const &h);
Subgroup normalizer(FiniteGroup const &g, Subgroup const &h);

Subgroup centralizer(Subgroup const &within, Subgroup const &h);
Subgroup centralizer(FiniteGroup const &g, Subgroup const &h);

Subgroup center(Subgroup const &h);
Subgroup center(FiniteGroup const &g);

bool is_normal(Subgroup const &within, Subgroup const &h);

// First g in index order with g h1 g^-1 = h2.
std::optional<Elem> are_conjugate(Subgroup const &within, Subgroup const &h1, Subgroup const &h2);
std::optional<Elem> are_conjugate(FiniteGroup const &g, Subgroup const &h1, Subgroup const &h2);

// Smallest subgroup of `within` containing `elems` and normal in `within`.
Subgroup normal_closure(Subgroup const &within, std::vector<Elem> const &elems);

Subgroup derived_subgroup(Subgroup const &h);

// Conjugacy classes of `within`, each sorted; classes ordered by least member.
// Throws GroupError if the class equation fails.
std::vector<std::vector<Elem>> conjugacy_classes(Subgroup const &within);

std::size_t exponent(Subgroup const &h);
bool is_abelian(Subgroup const &h);

// True when n is a power of p (including p^0 = 1).
bool is_power_of(std::size_t n, std::size_t p);
bool is_p_group(Subgroup const &h, std::size_t p);

// Map element order -> count.
std::map<std::size_t, std::size_t> order_statistics(Subgroup const &h);

// Set of products {xy : x in a, y in b}, as a sorted list.
std::vector<Elem> product_set(Subgroup const &a, Subgroup const &b);

}  // namespace fusionkit
