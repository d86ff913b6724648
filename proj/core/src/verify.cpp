#include "lefschetz/verify.hpp"

#include "lefschetz/checks.hpp"
#include "lefschetz/errors.hpp"
#include "lefschetz/model.hpp"
#include "lefschetz/random.hpp"

#include <iomanip>
#include <sstream>

namespace lefschetz {

namespace {

class Tally {
public:
  explicit Tally(VerifySummary &summary) : summary_(summary) {}

  void record(const std::string &property, const std::string &label, const std::vector<TheoremCheck> &checks) {
    for (const auto &c : checks) record(property, label + ": " + c.name, c.holds);
  }

  void record(const std::string &property, const std::string &what, bool holds) {
    auto &count = summary_.properties[property];
    ++count.total;
    if (holds)
      ++count.passed;
    else
      summary_.failures.push_back(what);
  }

private:
  VerifySummary &summary_;
};

void verify_structure(Tally &tally, const std::string &label, const LieAlgebra &g, const Form &omega,
                      std::mt19937_64 &rng, int forms_per_degree) {
  const SymplecticStructure s = SymplecticStructure::validate(g, omega);
  const SymplecticCohomology c(s);
  const LieProperties p = check_properties(g);

  tally.record("operator identities", label, identity_suite(s));
  tally.record("Lefschetz reassembly", label, reassembly_suite(s, rng, forms_per_degree));

  const DecompositionVerdict &h2 = c.decomposition(2);
  tally.record("H^2 full and direct", label + ": H^2 full and direct", h2.full && h2.direct);
  tally.record("theorem suite", label, theorem_suite(c, p));
  tally.record("equivalence suite", label, equivalence_suite(c));
  if (p.unimodular) tally.record("Poincare duality", label, duality_suite(c, p));
  if (p.nilpotent && !p.abelian) tally.record("non-abelian nilpotent fails HLC", label, nilpotent_suite(c, p));

  bool flipped_rejected = false;
  try {
    (void)SymplecticStructure::validate(g, omega, PoissonSign::flipped);
  } catch (const Error &e) {
    flipped_rejected = std::string(e.what()).find("Λω") != std::string::npos;
  }
  tally.record("flipped Poisson sign rejected", label + ": flipped Poisson sign rejected", flipped_rejected);
}

void verify_safely(Tally &tally, const std::string &label, const LieAlgebra &g, const Form &omega,
                   std::mt19937_64 &rng, int forms_per_degree) {
  try {
    verify_structure(tally, label, g, omega, rng, forms_per_degree);
  } catch (const Error &e) {
    tally.record("structures analysed", label + ": " + e.what(), false);
    return;
  }
  tally.record("structures analysed", label, true);
}

} // namespace

std::string VerifySummary::str() const {
  std::ostringstream out;
  std::size_t width = 0;
  for (const auto &[name, _] : properties) width = std::max(width, name.size());
  out << structures << " structures\n";
  for (const auto &[name, count] : properties)
    out << (count.ok() ? "ok   " : "FAIL ") << std::left << std::setw(static_cast<int>(width)) << name << "  "
        << count.passed << "/" << count.total << "\n";
  for (const auto &f : failures) out << "failed: " << f << "\n";
  return out.str();
}

VerifySummary run_verify(const VerifyOptions &options) {
  VerifySummary summary;
  Tally tally(summary);
  std::mt19937_64 form_rng(options.seed);

  for (const auto &m : corpus()) {
    const LieAlgebra g = LieAlgebra::build(parse_structure_equations(m.structure, m.dim));
    verify_safely(tally, m.name, g, parse_form(m.omega, m.dim, 2), form_rng, options.forms_per_degree);
    ++summary.structures;
  }

  SampleGenerator gen(options.seed);
  for (int dim : options.dims) {
    for (int i = 0; i < options.samples_per_dim; ++i) {
      const SymplecticSample sample = gen.sample(dim);
      const std::string label = "dim " + std::to_string(dim) + " sample " + std::to_string(i) + " (" + sample.family + ")";
      const LieAlgebra g = LieAlgebra::build(sample.structure);
      verify_safely(tally, label, g, sample.omega, form_rng, options.forms_per_degree);
      ++summary.structures;
    }
  }

  // d(d e^6) = d(e^45) = e^125 − e^134 ≠ 0.
  bool jacobi_rejected = false;
  try {
    (void)LieAlgebra::build(parse_structure_equations("0,0,0,12,13,45"));
  } catch (const JacobiViolation &) {
    jacobi_rejected = true;
  }
  tally.record("Jacobi violation rejected", "corrupted structure constants accepted", jacobi_rejected);
  return summary;
}

} // namespace lefschetz
