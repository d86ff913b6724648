#include "lefschetz/checks.hpp"

#include "lefschetz/errors.hpp"

#include <string>

namespace lefschetz {

namespace {

std::string str(int k) { return std::to_string(k); }

Form random_form(int dim, int k, std::mt19937_64 &rng) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  QVector v(binomial(dim, k));
  for (auto &c : v) c = Rational(coeff(rng));
  return Form::from_coordinates(dim, k, v);
}

} // namespace

std::vector<TheoremCheck> theorem_suite(const SymplecticCohomology &c, const LieProperties &p) {
  std::vector<TheoremCheck> out;
  if (c.dim() >= 2) {
    const DecompositionVerdict &v = c.decomposition(2);
    out.push_back({"H^2 = H^(1,0) + H^(0,2) full", v.full});
    out.push_back({"H^2 = H^(1,0) + H^(0,2) direct", v.direct});
  }
  for (auto &t : c.pure_intersection_check()) out.push_back(std::move(t));
  for (auto &t : c.lr_equals_hr_check()) out.push_back(std::move(t));
  for (auto &t : c.duality_implication_check()) out.push_back(std::move(t));
  if (p.unimodular)
    for (int r = 1; r <= c.n() / 2; ++r)
      out.push_back({"dim H^(" + str(r) + ",0) = 1", c.hrs(r, 0).dim() == 1});
  return out;
}

std::vector<TheoremCheck> equivalence_suite(const SymplecticCohomology &c) {
  std::vector<TheoremCheck> out;
  const HlcVerdict hlc = c.hlc();
  out.push_back({"HLC <=> dd^Lambda-lemma", hlc.holds == c.dd_lemma()});

  const auto b = c.betti();
  const auto dl = c.dlambda_dims();
  const auto dpd = c.d_plus_dlambda_dims();
  const auto ddl = c.ddlambda_dims();
  const auto top = static_cast<std::size_t>(c.dim());
  // The dd^Lambda / d+d^Lambda duality comes from the cup pairing, which needs a unimodular algebra.
  const bool paired = c.pairing_well_defined();
  for (std::size_t k = 0; k <= top; ++k) {
    out.push_back({"dim H^" + std::to_string(k) + "_dLambda = b_" + std::to_string(top - k), dl[k] == b[top - k]});
    if (paired)
      out.push_back({"dim H^" + std::to_string(k) + "_ddLambda = dim H^" + std::to_string(top - k) + "_(d+dLambda)",
                     ddl[k] == dpd[top - k]});
  }
  for (int s = 0; s <= c.dim(); ++s)
    out.push_back({"PH^" + str(s) + "_(d+dLambda) formulas agree", c.ph_plus(s).agree()});
  out.push_back({"L^k: H^(n-k)_(d+dLambda) -> H^(n+k)_(d+dLambda) iso", c.d_plus_dlambda_hard_lefschetz()});
  out.push_back({"H_(d+dLambda) = sum_r L^r PH_(d+dLambda)", c.d_plus_dlambda_primitive_decomposition()});

  if (hlc.holds) {
    for (int k = 0; k <= c.dim(); ++k) {
      const DecompositionVerdict &v = c.decomposition(k);
      out.push_back({"HLC => degree " + str(k) + " full and direct", v.full && v.direct});
    }
    for (int s = 0; s <= c.n(); ++s)
      out.push_back({"HLC => dim PH^" + str(s) + "_d = dim H^(0," + str(s) + ")", c.ph_d(s) == c.hrs(0, s).dim()});
  }
  return out;
}

std::vector<TheoremCheck> duality_suite(const SymplecticCohomology &c, const LieProperties &p) {
  std::vector<TheoremCheck> out;
  if (!p.unimodular) return out;
  out.push_back({"cup pairing well defined", c.pairing_well_defined()});
  const auto b = c.betti();
  for (int k = 0; k <= c.dim(); ++k) {
    const auto ku = static_cast<std::size_t>(k);
    const auto cu = static_cast<std::size_t>(c.dim() - k);
    out.push_back({"b_" + str(k) + " = b_" + str(c.dim() - k), b[ku] == b[cu]});
    const QMatrix m = c.pairing_matrix(k);
    out.push_back({"cup pairing H^" + str(k) + " x H^" + str(c.dim() - k) + " non-degenerate",
                   m.rows() == m.cols() && rank(m) == m.rows()});
  }
  return out;
}

std::vector<TheoremCheck> nilpotent_suite(const SymplecticCohomology &c, const LieProperties &p) {
  if (!p.nilpotent || p.abelian) return {};
  return {{"non-abelian nilpotent => HLC fails", !c.hlc().holds}};
}

std::vector<TheoremCheck> reassembly_suite(const SymplecticStructure &s, std::mt19937_64 &rng, int per_degree) {
  std::vector<TheoremCheck> out;
  for (int k = 0; k <= s.dim(); ++k) {
    bool agrees = true;
    bool primitive = true;
    bool reassembles = true;
    for (int t = 0; t < per_degree; ++t) {
      const Form a = random_form(s.dim(), k, rng);
      const LefschetzComponents formula = lefschetz_decompose(s, a);
      const LefschetzComponents solved = lefschetz_decompose_by_solve(s, a);
      agrees = agrees && formula.formula_agrees && formula.components == solved.components;
      for (const auto &[r, b] : formula.components)
        primitive = primitive && (b.is_zero() || s.Lambda().apply(b).is_zero());
      reassembles = reassembles && lefschetz_reassemble(s, formula) == a;
    }
    out.push_back({"degree " + str(k) + " Lefschetz formula = linear solve", agrees});
    out.push_back({"degree " + str(k) + " Lefschetz components primitive", primitive});
    out.push_back({"degree " + str(k) + " Lefschetz reassembly", reassembles});
  }
  return out;
}

std::vector<TheoremCheck> identity_suite(const SymplecticStructure &s) {
  std::vector<TheoremCheck> out;
  for (const auto &i : operator_identities(s)) out.push_back({i.name, i.holds});
  return out;
}

std::vector<TheoremCheck> all_theorem_checks(const SymplecticCohomology &c, const LieProperties &p) {
  std::vector<TheoremCheck> out = identity_suite(c.structure());
  for (auto *suite : {&theorem_suite, &duality_suite, &nilpotent_suite})
    for (auto &t : suite(c, p)) out.push_back(std::move(t));
  for (auto &t : equivalence_suite(c)) out.push_back(std::move(t));
  return out;
}

} // namespace lefschetz
