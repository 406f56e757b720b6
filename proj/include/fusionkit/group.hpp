#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fusionkit
{

/// Index of a group element. Index 0 is always the identity.
using Elem = std::uint32_t;

class GroupError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Raised when a closure or enumeration exceeds its configured cap.
class CapExceeded : public GroupError
{
public:
  using GroupError::GroupError;
};

/// Multiplication oracle behind a FiniteGroup.
class GroupModel
{
public:
  virtual ~GroupModel() = default;

  virtual std::size_t order() const = 0;
  virtual Elem mult(Elem a, Elem b) const = 0;
  virtual Elem inv(Elem a) const = 0;

  // Generators known to the model, if any.
  virtual std::vector<Elem> generators() const { return {}; }
  virtual std::string label(Elem a) const;
};

/**
 * Finite group over an element index [0, order) with identity 0.
 *
 * Cheap to copy; copies share the underlying model.
 */
class FiniteGroup
{
public:
  FiniteGroup() = default;
  explicit FiniteGroup(std::shared_ptr<GroupModel const> model, std::string name = {});

  // Builds a group from a flat row-major multiplication table. The identity
  // is moved to index 0 if needed; `validate` checks the group axioms.
  static FiniteGroup from_table(std::size_t n, std::vector<Elem> table,
                                std::vector<std::string> labels = {},
                                bool validate = true);

  std::size_t order() const { return m_->order(); }
  Elem identity() const { return 0; }
  Elem mult(Elem a, Elem b) const { return m_->mult(a, b); }
  Elem inv(Elem a) const { return m_->inv(a); }

  Elem pow(Elem a, long k) const;
  std::size_t elem_order(Elem a) const;
  // g x g^-1
  Elem conj(Elem g, Elem x) const { return mult(mult(g, x), inv(g)); }
  // a b a^-1 b^-1
  Elem commutator(Elem a, Elem b) const { return mult(mult(a, b), mult(inv(a), inv(b))); }

  std::vector<Elem> generators() const;
  std::string label(Elem a) const { return m_->label(a); }
  std::string const &name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  bool same_as(FiniteGroup const &other) const { return m_ == other.m_; }
  GroupModel const &model() const { return *m_; }
  std::shared_ptr<GroupModel const> const &model_ptr() const { return m_; }

private:
  std::shared_ptr<GroupModel const> m_;
  std::string name_;
};

/// Explicit multiplication table.
class TableModel : public GroupModel
{
public:
  TableModel(std::size_t n, std::vector<Elem> table, std::vector<std::string> labels = {});

  std::size_t order() const override { return n_; }
  Elem mult(Elem a, Elem b) const override { return t_[static_cast<std::size_t>(a) * n_ + b]; }
  Elem inv(Elem a) const override { return inv_[a]; }
  std::string label(Elem a) const override;

  std::vector<Elem> const &table() const { return t_; }

private:
  std::size_t n_;
  std::vector<Elem> t_;
  std::vector<Elem> inv_;
  std::vector<std::string> labels_;
};

/**
 * Group given by its right Cayley table over a generating list.
 *
 * Products x*y are evaluated by walking a breadth-first word for y from x,
 * so memory is O(|G| * #generators) rather than O(|G|^2).
 */
class CayleyModel : public GroupModel
{
public:
  // right[x * k + i] = x * gens[i]; gens are element indices.
  CayleyModel(std::size_t n, std::vector<Elem> gens, std::vector<Elem> right,
              std::vector<std::string> labels = {});

  std::size_t order() const override { return n_; }
  Elem mult(Elem a, Elem b) const override;
  Elem inv(Elem a) const override { return inv_[a]; }
  std::vector<Elem> generators() const override { return gens_; }
  std::string label(Elem a) const override;

  Elem right_gen(Elem x, std::size_t i) const { return right_[x * k_ + i]; }
  std::size_t word_length(Elem x) const { return depth_[x]; }

private:
  std::size_t n_;
  std::size_t k_;
  std::vector<Elem> gens_;
  std::vector<Elem> right_;
  std::vector<Elem> parent_;
  std::vector<std::uint16_t> pgen_;
  std::vector<std::uint32_t> depth_;
  std::vector<Elem> inv_;
  std::vector<std::string> labels_;
};

/// N x| K with K acting on N through an explicit action table.
class SemidirectModel : public GroupModel
{
public:
  // action[k * |N| + n] = image of n under k; index of (n, k) is k*|N| + n.
  SemidirectModel(FiniteGroup normal, FiniteGroup complement, std::vector<Elem> action);

  std::size_t order() const override { return nn_ * complement_.order(); }
  Elem mult(Elem a, Elem b) const override;
  Elem inv(Elem a) const override;
  std::string label(Elem a) const override;

  Elem pack(Elem n, Elem k) const { return static_cast<Elem>(k * nn_ + n); }
  Elem normal_part(Elem a) const { return static_cast<Elem>(a % nn_); }
  Elem complement_part(Elem a) const { return static_cast<Elem>(a / nn_); }

private:
  FiniteGroup normal_;
  FiniteGroup complement_;
  std::size_t nn_;
  std::vector<Elem> action_;
};

class Subgroup;

/// A subgroup viewed as a group in its own right (local indices).
class SubgroupModel : public GroupModel
{
public:
  explicit SubgroupModel(Subgroup const &h);

  std::size_t order() const override { return members_.size(); }
  Elem mult(Elem a, Elem b) const override;
  Elem inv(Elem a) const override;
  std::string label(Elem a) const override;

  Elem to_parent(Elem local) const { return members_[local]; }
  Elem to_local(Elem parent) const;

private:
  FiniteGroup parent_;
  std::vector<Elem> members_;
  std::vector<std::int32_t> local_;
};

/// Subgroup of a FiniteGroup, stored as a sorted member list.
class Subgroup
{
public:
  Subgroup() = default;
  Subgroup(FiniteGroup parent, std::vector<Elem> members);

  static Subgroup whole(FiniteGroup const &g);
  static Subgroup trivial(FiniteGroup const &g);

  FiniteGroup const &parent() const { return parent_; }
  std::vector<Elem> const &members() const { return members_; }
  std::size_t order() const { return members_.size(); }
  bool contains(Elem x) const { return (*mask_)[x]; }
  bool contains(Subgroup const &other) const;

  // A small generating set (computed on first use).
  std::vector<Elem> const &gens() const;
  void set_gens(std::vector<Elem> gens) { gens_ = std::make_shared<std::vector<Elem>>(std::move(gens)); }

  // Closed under products and contains the identity.
  bool is_closed() const;

  FiniteGroup as_group(std::string name = {}) const;

  bool operator==(Subgroup const &other) const { return members_ == other.members_; }
  bool operator!=(Subgroup const &other) const { return !(*this == other); }
  bool operator<(Subgroup const &other) const { return members_ < other.members_; }

private:
  FiniteGroup parent_;
  std::vector<Elem> members_;
  std::shared_ptr<std::vector<bool>> mask_;
  mutable std::shared_ptr<std::vector<Elem>> gens_;
};

/// Map between finite groups given by the images of all source elements.
class GroupMap
{
public:
  GroupMap() = default;
  GroupMap(FiniteGroup source, FiniteGroup target, std::vector<Elem> images);

  FiniteGroup const &source() const { return source_; }
  FiniteGroup const &target() const { return target_; }
  std::vector<Elem> const &images() const { return images_; }
  Elem operator()(Elem x) const { return images_[x]; }

  // Exhaustive on all pairs when |source|^2 <= pair_budget, otherwise on a
  // fixed pseudo-random sample of that many pairs.
  bool is_homomorphism(std::size_t pair_budget = 4'000'000) const;
  bool is_injective() const;
  Subgroup image() const;
  Subgroup kernel() const;

private:
  FiniteGroup source_;
  FiniteGroup target_;
  std::vector<Elem> images_;
};

/**
 * Extends gens[i] -> images[i] to a homomorphism source -> target.
 *
 * Walks the Cayley graph of `gens` from the identity; returns nullopt if the
 * assignment is inconsistent (not a homomorphism) or `gens` do not generate.
 */
std::optional<GroupMap> extend_homomorphism(FiniteGroup const &source,
                                            std::vector<Elem> const &gens,
                                            std::vector<Elem> const &images,
                                            FiniteGroup const &target);

/// Breadth-first closure of `gens` inside g; throws CapExceeded past `cap`.
Subgroup generate(FiniteGroup const &g, std::vector<Elem> const &gens, std::size_t cap = 0);

/// Small generating set for the subgroup with the given members; picks
/// elements of largest order first, ties by index.
std::vector<Elem> greedy_generators(FiniteGroup const &g, std::vector<Elem> const &members);

}  // namespace fusionkit
