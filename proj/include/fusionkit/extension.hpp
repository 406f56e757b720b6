#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fusionkit/group.hpp"

namespace fusionkit
{

/// G/N for a normal subgroup N, as a Cayley model over the images of the
/// generators of G.
struct Quotient
{
  FiniteGroup group;
  std::vector<Elem> coset_of;  // element of G -> element of G/N
  std::vector<Elem> reps;      // element of G/N -> least element of its coset
};

// Throws GroupError if N is not normal in G.
Quotient quotient(FiniteGroup const &g, Subgroup const &n);

/**
 * Searches for an isomorphism a -> b by backtracking over images of the
 * generators of a. The first image ranges over conjugacy-class
 * representatives only; partial assignments are pruned by the orders of
 * short words in the generators. Returns nullopt iff a and b are not
 * isomorphic.
 */
std::optional<GroupMap> find_isomorphism(FiniteGroup const &a, FiniteGroup const &b);

struct ComplementResult
{
  std::optional<Subgroup> complement;
  std::vector<Elem> quotient_gens;  // generators of G/N the lifts map to
  std::vector<Elem> lifts;          // chosen lifts (a generating set of the complement)
  std::size_t candidates = 0;       // partial assignments examined
};

/**
 * Exhaustive search for a complement of N in G.
 *
 * Lifts of a generating set of G/N are tried in index order; a partial
 * choice survives only if the subgroup it generates has the same order as
 * its image in G/N. Elements of `forced` must lie in the complement and are
 * used as the first lifts. A null result is a proof that no complement
 * (containing `forced`) exists.
 */
ComplementResult find_complement(FiniteGroup const &g, Subgroup const &n, Quotient const &q,
                                 std::vector<Elem> const &forced = {});

struct SesReport
{
  bool is_normal = false;
  bool order_matches = false;
  bool quotient_iso = false;
  bool split = false;
  std::size_t group_order = 0;
  std::size_t kernel_order = 0;
  std::size_t quotient_order = 0;
  std::optional<GroupMap> iso;  // Q_expect -> G/N
  ComplementResult complement;
};

/// Checks 1 -> N -> G -> Q_expect -> 1 and searches for a splitting.
SesReport sesverify(FiniteGroup const &g, Subgroup const &n, FiniteGroup const &q_expect,
                    std::vector<Elem> const &forced = {});

/// N x| K where act(k, n) is the image of n under k.
FiniteGroup semidirect_product(FiniteGroup const &n, FiniteGroup const &k,
                               std::function<Elem(Elem, Elem)> const &act, std::string name = {});

}  // namespace fusionkit
