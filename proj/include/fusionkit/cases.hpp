#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fusionkit/automorphism.hpp"
#include "fusionkit/fusion.hpp"
#include "fusionkit/linear.hpp"
#include "fusionkit/matgroup.hpp"

namespace fusionkit
{

enum class CaseKind
{
  Up,
  SUp,
  AZ,
};

std::string case_name(CaseKind kind);  // "up", "sup", "az"
std::optional<CaseKind> parse_case(std::string const &name);

struct CaseConfig
{
  CaseKind kind = CaseKind::SUp;
  int p = 3;
  int level = 1;
  std::optional<int> az_index;
  std::size_t cap = kDefaultClosureCap;

  // Throws std::invalid_argument on an unsupported combination.
  void validate() const;
  std::string describe() const;
};

// The prime attached to a Shephard-Todd index of an exotic case, or 0.
int az_prime(int index);
// The index for p when unique (3 -> 12, 7 -> 34); 0 otherwise.
int default_az_index(int p);

enum class CheckStatus
{
  Pass,
  Fail,
  Skipped,
};

std::string status_name(CheckStatus s);

struct Check
{
  std::string claim_id;
  std::string anchor;  // the statement being checked
  CheckStatus status = CheckStatus::Fail;
  std::string witness;
};

struct VerificationReport
{
  std::string title;
  std::vector<Check> checks;

  void add(std::string id, std::string anchor, bool ok, std::string witness = {});
  void skip(std::string id, std::string anchor, std::string reason);
  void append(VerificationReport const &other);

  std::size_t count(CheckStatus s) const;
  bool all_pass() const { return count(CheckStatus::Fail) == 0; }
  Check const *find(std::string const &id) const;

  std::string to_json() const;
  std::string to_text() const;
};

/// The extraspecial group generated by A and B (iA, iB for p = 2).
struct GammaModel
{
  int p = 0;
  int level = 1;
  CycMatrix A, B, Z;  // Z = zeta I
  MatrixGroup group;
  FiniteGroup table;  // same indices as group, table model
  Elem a = 0, b = 0, z = 0;

  GammaModel(int p, int level = 1);

  // Conjugation by m restricted to the group, or nullopt if m does not normalize it.
  std::optional<std::vector<Elem>> conjugation(CycMatrix const &m) const;
  // Action of m on the quotient by the center in the basis (A, B).
  std::optional<Mat2> induced(CycMatrix const &m) const;
};

/**
 * Aut(Gamma) for odd p with its map to GL2(F_p), and a complement K of the
 * inner automorphisms containing the automorphisms induced by D and
 * sigma_xi.
 */
struct GammaAutData
{
  int p = 0;
  int xi = 0;
  std::shared_ptr<GammaModel const> gamma;
  std::unique_ptr<AutomorphismGroup> aut;
  std::unique_ptr<LinearGroup> gl;
  std::vector<Elem> to_gl;  // automorphism -> element of GL2
  Elem c_d = 0, c_sigma = 0, phi = 0;
  std::optional<Subgroup> complement;
  std::size_t complement_candidates = 0;
  double seconds = 0;

  Subgroup preimage(LinearKind kind, Subgroup const &within) const;
};

// Built once per prime and cached for the process.
std::shared_ptr<GammaAutData const> gamma_aut(int p);

// Gamma x| K' for a subgroup K' of Aut(Gamma), acting naturally.
FiniteGroup gamma_semidirect(GammaAutData const &d, Subgroup const &k, std::string name);

struct Normalizers
{
  MatrixGroup n_chain;
  FiniteGroup n_full;
  VerificationReport report;
};

VerificationReport verify_gamma(CaseConfig const &cfg);
VerificationReport verify_tau(CaseConfig const &cfg);
VerificationReport verify_rho(CaseConfig const &cfg);
Normalizers build_normalizers(CaseConfig const &cfg);
VerificationReport verify_az(CaseConfig const &cfg);

struct Decomposition
{
  SdPoset poset;                   // encoded chain classes
  DecompositionDiagram full;       // before collapsing
  DecompositionDiagram diagram;    // after collapsing
};

/// Encoded chain data for the case, and the collapsed diagram.
Decomposition emit_decomposition(CaseConfig const &cfg);

// Shape and order checks of the emitted diagram against computed groups.
VerificationReport verify_decomposition(CaseConfig const &cfg);

// Every suite applicable to the case.
VerificationReport verify_case(CaseConfig const &cfg);

// The supported (case, prime, index) matrix at the given level.
std::vector<CaseConfig> all_cases(int level = 1);

}  // namespace fusionkit
