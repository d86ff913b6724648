#pragma once

#include "lefschetz/cohomology.hpp"
#include "lefschetz/model.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lefschetz {

/// The mandatory caveat for models whose Lie-algebra cohomology is not known
/// to compute the cohomology of a compact quotient.
inline constexpr const char *lower_bound_caveat = "Lie-algebra cohomology; lower bound for manifold groups";

struct ReportProperties {
  bool nilpotent = false;
  bool solvable = false;
  bool unimodular = false;
  bool abelian = false;
  std::vector<std::string> flags;

  friend bool operator==(const ReportProperties &, const ReportProperties &) = default;
};

/// Dimensions per degree 0..dim of each cohomology theory.
struct CohomologyTables {
  std::vector<std::size_t> de_rham;
  std::vector<std::size_t> d_lambda;
  std::vector<std::size_t> d_plus_d_lambda;
  std::vector<std::size_t> dd_lambda;
  std::vector<std::size_t> ph_d_plus_d_lambda;
  std::vector<std::size_t> ph_d;

  friend bool operator==(const CohomologyTables &, const CohomologyTables &) = default;
};

struct DeRhamEntry {
  int degree = 0;
  std::size_t dim = 0;
  std::vector<std::string> representatives;

  friend bool operator==(const DeRhamEntry &, const DeRhamEntry &) = default;
};

struct HrsEntry {
  int r = 0;
  int s = 0;
  std::size_t dim = 0;
  std::vector<std::string> representatives;

  friend bool operator==(const HrsEntry &, const HrsEntry &) = default;
};

struct SummandEntry {
  int r = 0;
  int s = 0;
  std::size_t dim = 0;

  friend bool operator==(const SummandEntry &, const SummandEntry &) = default;
};

struct VerdictEntry {
  int degree = 0;
  std::vector<SummandEntry> summands;
  std::size_t sum_dim = 0;
  std::size_t betti = 0;
  bool full = false;
  bool direct = false;

  friend bool operator==(const VerdictEntry &, const VerdictEntry &) = default;
};

/// L^k : H^{n−k} → H^{n+k} in the representative bases; entries as "p/q".
struct LefschetzMapEntry {
  int k = 0;
  int source_degree = 0;
  int target_degree = 0;
  std::size_t rank = 0;
  bool bijective = false;
  std::vector<std::vector<std::string>> matrix;

  friend bool operator==(const LefschetzMapEntry &, const LefschetzMapEntry &) = default;
};

struct HlcEntry {
  std::vector<bool> per_k;
  bool holds = false;

  friend bool operator==(const HlcEntry &, const HlcEntry &) = default;
};

/// Lefschetz components r → B^{(k−2r)} of one form, with A = Σ_r (1/r!) L^r B.
struct DecompositionEntry {
  std::string form;
  std::map<int, std::string> components;
  bool formula_agrees = false;

  friend bool operator==(const DecompositionEntry &, const DecompositionEntry &) = default;
};

/// Analysis of a named extra form from the model file.
struct FormEntry {
  std::string name;
  std::string form;
  int degree = 0;
  bool closed = false;
  bool primitive = false;
  std::vector<std::string> class_coordinates; // empty unless closed
  std::vector<SummandEntry> hrs_membership;    // groups H^(r,s) with 2r+s = degree containing the class
  DecompositionEntry decomposition;

  friend bool operator==(const FormEntry &, const FormEntry &) = default;
};

struct CheckEntry {
  std::string name;
  bool holds = false;

  friend bool operator==(const CheckEntry &, const CheckEntry &) = default;
};

struct Report {
  ModelFile model;
  std::string structure; // canonical rendering of the parsed structure equations
  std::string omega;     // canonical rendering of ω
  ReportProperties properties;
  std::vector<std::size_t> betti;
  CohomologyTables cohomology;
  std::vector<DeRhamEntry> de_rham;
  std::vector<HrsEntry> hrs;
  std::vector<VerdictEntry> decomposition;
  HlcEntry hlc;
  std::vector<LefschetzMapEntry> lefschetz_maps;
  bool dd_lemma = false;
  std::vector<bool> dd_lemma_per_degree;
  std::vector<DecompositionEntry> middle_degree_decompositions;
  std::vector<FormEntry> forms;
  std::vector<CheckEntry> checks;
  std::vector<std::string> caveats;

  bool all_checks_hold() const;
  friend bool operator==(const Report &, const Report &) = default;
};

/// Validates the model and computes everything. Throws InputError,
/// ValidationError, or InternalInconsistency when a theorem check fails.
Report run_compute(const ModelFile &model);

/// A path to a model file or the name of a corpus model.
ModelFile resolve_model(const std::string &path_or_name);

/// Keeps only the per-degree sections (de Rham, H^(r,s), verdicts) for degree k.
Report restrict_to_degree(const Report &report, int k);

/// Pretty-printed JSON with a fixed key order and a trailing newline.
std::string to_json(const Report &report);
/// Throws InputError on malformed JSON or schema violations.
Report report_from_json(const std::string &text);

std::string render_text(const Report &report);

} // namespace lefschetz
