#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "fusionkit/group.hpp"
#include "fusionkit/linear.hpp"

namespace fusionkit
{

enum class AutMethod
{
  PairScan,   // extraspecial of exponent p on two generators
  Backtrack,  // images by element order, checked by extension
};

struct AutOptions
{
  AutMethod method = AutMethod::Backtrack;
  // Verify every pair-scan candidate by extending it to a bijective homomorphism.
  bool verify_pairs = true;
  // Image tuples whose composition closure is compared with the enumeration.
  std::vector<std::vector<Elem>> seeds;
  std::size_t cap = 5'000'000;
};

/**
 * Aut(G) for a small group G given with a generating list.
 *
 * An automorphism is stored as the tuple of images of the generators. The
 * group structure is composition, (f*g)(x) = f(g(x)), realized as a Cayley
 * model over a generating set of automorphisms.
 */
class AutomorphismGroup
{
public:
  AutomorphismGroup(FiniteGroup base, std::vector<Elem> gens, AutOptions const &opt = {});

  FiniteGroup const &base() const { return base_; }
  std::vector<Elem> const &base_gens() const { return gens_; }
  FiniteGroup const &group() const { return group_; }
  std::size_t order() const { return tuples_.size(); }

  std::vector<Elem> const &images(Elem f) const { return tuples_[f]; }
  Elem apply(Elem f, Elem x) const;
  std::vector<Elem> full_map(Elem f) const;
  std::optional<Elem> find(std::vector<Elem> const &images) const;

  // The automorphism x -> g x g^-1.
  Elem inner(Elem g) const;
  Subgroup inner_subgroup() const;

  // Number of automorphisms found by the enumeration itself.
  std::size_t enumerated() const { return enumerated_; }
  // Candidate tuples examined by the enumeration.
  std::size_t candidates() const { return candidates_; }
  // Size of the composition closure of the seeds alone.
  std::size_t seed_closure() const { return seed_closure_; }
  // Seeds generate exactly the enumerated set.
  bool dual_route_agrees() const { return dual_agrees_; }

private:
  std::uint64_t key(std::vector<Elem> const &t) const;
  Elem apply_tuple(std::vector<Elem> const &t, Elem x) const;
  std::vector<std::vector<Elem>> enumerate(AutOptions const &opt);
  void build_closure(std::vector<std::vector<Elem>> const &seeds, std::size_t cap);

  FiniteGroup base_;
  std::vector<Elem> gens_;
  std::vector<Elem> parent_;
  std::vector<std::uint16_t> pgen_;
  std::vector<Elem> order_;  // BFS order of base elements

  std::vector<std::vector<Elem>> tuples_;
  std::unordered_map<std::uint64_t, Elem> index_;
  FiniteGroup group_;

  std::size_t enumerated_ = 0;
  std::size_t candidates_ = 0;
  std::size_t seed_closure_ = 0;
  bool dual_agrees_ = false;
};

/**
 * Coordinates on G/Z(G) ~ F_p^2 for an extraspecial group with chosen
 * generators a, b: coord(x) = (i, j) when x lies in a^i b^j Z(G).
 */
class PlaneCoords
{
public:
  PlaneCoords(FiniteGroup const &g, Elem a, Elem b, int p);

  std::pair<int, int> operator()(Elem x) const { return coord_[x]; }
  int prime() const { return p_; }

private:
  int p_;
  std::vector<std::pair<int, int>> coord_;
};

// Matrix of the map induced by f on G/Z in the basis (a, b); column j is
// the image of basis vector j.
Mat2 induced_matrix(AutomorphismGroup const &aut, PlaneCoords const &coords, Elem f);

}  // namespace fusionkit
