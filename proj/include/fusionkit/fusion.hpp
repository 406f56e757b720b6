#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fusionkit/group.hpp"

namespace fusionkit
{

/// A finite group with a chosen Sylow p-subgroup; the fusion system is the
/// one realized by conjugation in G.
struct FusionData
{
  FiniteGroup G;
  Subgroup S;
  int p = 0;

  // Chooses a Sylow p-subgroup by repeated extension inside normalizers.
  static FusionData make(FiniteGroup g, int p);
};

Subgroup sylow_subgroup(FiniteGroup const &g, int p);

/// Strictly increasing P_0 < ... < P_k of subgroups of S.
struct Chain
{
  std::vector<Subgroup> members;

  Subgroup const &top() const { return members.back(); }
  Subgroup const &bottom() const { return members.front(); }
  std::size_t length() const { return members.size(); }
};

// Distinct maps P -> Q induced by conjugation in G (as maps between the
// subgroups viewed as groups, local indices).
std::vector<GroupMap> hom_f(FusionData const &fd, Subgroup const &p, Subgroup const &q);

bool is_f_centric(FusionData const &fd, Subgroup const &p);
bool is_f_radical(FusionData const &fd, Subgroup const &p);

// Every subgroup of S, ordered by (order, members).
std::vector<Subgroup> subgroups_of_p_group(Subgroup const &s, int p);

// Key of the chain under conjugation: least (P_k, ..., P_0) member tuple
// over all g with g P_k g^-1 inside S.
std::vector<std::vector<Elem>> chain_key(FusionData const &fd, Chain const &c);
Chain canonical_chain(FusionData const &fd, Chain const &c);

struct ChainAutReport
{
  std::optional<std::uint64_t> autF_order;
  std::optional<std::uint64_t> autL_order;
  std::optional<std::uint64_t> normalizer_order;  // |intersection of N_G(P_i)|
  std::optional<std::uint64_t> center_order;      // |Z(P_k)|
  std::string tag;                                // structure of Aut_L
  std::string autF_tag;
  bool restriction_injective = false;
  bool ses_identity = false;  // autL = |Z(P_k)| * autF
  std::string annotation;
};

// Throws GroupError if a chain member is not F-centric.
ChainAutReport chain_aut(FusionData const &fd, Chain const &c);

struct PosetNode
{
  std::vector<std::string> names;  // one per chain member, bottom first
  std::optional<Chain> chain;      // absent for encoded data
  std::size_t conjugates = 0;      // chains in S found in this class
  ChainAutReport aut;

  std::size_t length() const { return names.size(); }
};

struct PosetArrow
{
  std::size_t src = 0;  // longer chain
  std::size_t dst = 0;  // class of a proper subchain
  // Restriction Aut(src) -> Aut(dst) verified to be an isomorphism.
  bool restriction_iso = false;
};

struct SdPoset
{
  std::vector<PosetNode> nodes;
  std::vector<PosetArrow> arrows;

  bool has_arrow(std::size_t src, std::size_t dst) const;
};

/**
 * The poset of G-conjugacy classes of proper chains of F-centric F-radical
 * subgroups of S, with arrows to the classes of proper subchains. Node
 * reports are filled in and arrow isomorphism flags are verified.
 */
SdPoset sd_poset(FusionData const &fd);

// Centric-radical subgroups of S up to G-conjugacy, canonical representatives.
std::vector<Subgroup> centric_radical_classes(FusionData const &fd);

// Arrows strictly decrease chain length.
bool has_ei_property(SdPoset const &poset);

struct DiagramNode
{
  std::size_t id = 0;
  std::vector<std::string> chain;
  std::optional<std::uint64_t> autF_order;
  std::optional<std::uint64_t> autL_order;
  std::optional<std::uint64_t> normalizer_order;
  std::string tag;
  std::string annotation;
  std::vector<std::size_t> merged_from;  // poset node indices
};

struct DecompositionDiagram
{
  std::string title;
  std::vector<DiagramNode> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  std::string to_json() const;
  std::string to_dot() const;
  std::string to_text() const;
};

// Diagram of the poset as is.
DecompositionDiagram poset_diagram(SdPoset const &poset, std::string title = {});

/**
 * Contracts every arrow whose restriction map is an isomorphism into its
 * target, then drops contracted nodes whose successors have an initial or
 * terminal element (their removal leaves a homotopy final subdiagram).
 */
DecompositionDiagram collapse(SdPoset const &poset, std::string title = {});

// Chain reports, arrows and both diagrams as one JSON document.
std::string fusion_report_json(FusionData const &fd, SdPoset const &poset, std::string const &title);

}  // namespace fusionkit
