#include "lefschetz/checks.hpp"
#include "lefschetz/cohomology.hpp"
#include "lefschetz/errors.hpp"
#include "lefschetz/model.hpp"
#include "lefschetz/random.hpp"
#include "lefschetz/report.hpp"

#include <cstdlib>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

using namespace lefschetz;

namespace {

constexpr std::uint64_t kSeed = 20240601;
constexpr int kSamples4 = 24;
constexpr int kSamples6 = 18;
constexpr int kSamples8 = 8;

struct Tested {
  std::string name;
  std::unique_ptr<SymplecticCohomology> cohomology;
  LieProperties properties;
};

/// Collects failed conditions for one criterion.
class Criterion {
public:
  Criterion(int number, std::string title) : number_(number), title_(std::move(title)) {}

  void expect(bool condition, const std::string &what) {
    ++checks_;
    if (!condition) failures_.push_back(what);
  }
  void note(const std::string &text) { notes_.push_back(text); }

  bool report() const {
    std::cout << "criterion " << number_ << ": " << (failures_.empty() ? "PASS" : "FAIL") << "  " << title_ << " ("
              << checks_ - failures_.size() << "/" << checks_ << " checks)\n";
    for (const auto &n : notes_) std::cout << "    " << n << "\n";
    for (const auto &f : failures_) std::cout << "    failed: " << f << "\n";
    return failures_.empty();
  }

private:
  int number_;
  std::string title_;
  std::size_t checks_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

Form parse(const std::string &text) { return parse_form(text, 6); }

SymplecticCohomology corpus_cohomology(const std::string &name) {
  const auto m = find_corpus_model(name);
  if (!m) throw InputError("missing corpus model " + name);
  LieAlgebra g = LieAlgebra::build(parse_structure_equations(m->structure));
  const int dim = g.dim();
  return SymplecticCohomology(SymplecticStructure::validate(std::move(g), parse_form(m->omega, dim, 2)));
}

Subspace class_span(const SymplecticCohomology &c, int k, const std::vector<std::string> &forms) {
  std::vector<QVector> classes;
  for (const auto &f : forms) classes.push_back(c.de_rham(k).class_of(parse(f)));
  return Subspace::span(classes, c.de_rham(k).dim());
}

std::string join(const std::vector<std::size_t> &v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  return out.str();
}

bool criterion_example1() {
  Criterion c(1, "nilmanifold (0^3,12,14-23,15+34) with omega = e16+e35+e24");
  const auto h = corpus_cohomology("example1");
  const auto b = h.betti();
  c.expect(b[1] == 3 && b[2] == 4 && b[3] == 4, "b1,b2,b3 = 3,4,4 (got " + join(b) + ")");
  c.expect(class_span(h, 1, {"1", "2", "3"}).dim() == 3,
           "H^1 spanned by e1,e2,e3");
  c.expect(h.hrs(1, 0).dim() == 1, "dim H^(1,0) = 1");
  c.expect(h.hrs(0, 2).dim() == 3, "dim H^(0,2) = 3");
  c.expect(h.decomposition(2).full && h.decomposition(2).direct, "degree 2 full and direct");
  c.expect(!h.decomposition(3).full && !h.decomposition(3).direct, "degree 3 neither full nor direct");
  const QVector e136 = h.de_rham(3).class_of(parse("136"));
  c.expect(h.hrs(1, 1).classes.contains(e136) && h.hrs(0, 3).classes.contains(e136),
           "[e136] lies in H^(1,1) and in H^(0,3)");

  struct Printed {
    const char *form, *primitive, *l_part;
  };
  const Printed printed[] = {
      {"126-145-2*235", "-1/2*126-1/2*235-145", "-3/2*2"},
      {"136", "1/2*136-1/2*234", "-1/2*3"},
      {"146+1/2*236+1/2*345", "1/4*146-1/4*345+1/2*236", "-3/4*4"},
      {"245", "1/2*156+1/2*245", "1/2*5"},
  };
  for (const auto &p : printed) {
    const auto d = lefschetz_decompose(h.structure(), parse(p.form));
    const bool match = d.formula_agrees && d.components.size() == 2 && d.component(0) == parse(p.primitive) &&
                       d.component(1) == parse(p.l_part);
    c.expect(match, std::string("decomposition of ") + p.form);
    c.note(parse(p.form).str() + " = (" + d.component(0).str() + ") + L(" + d.component(1).str() + ")");
  }
  return c.report();
}

bool criterion_example2() {
  Criterion c(2, "solvable (-13,23,0,-56,46,0) with omega = e12+e36+e45");
  const auto h = corpus_cohomology("example2");
  c.expect(h.betti() == std::vector<std::size_t>{1, 2, 3, 4, 3, 2, 1}, "b = 1,2,3,4,3,2,1 (got " + join(h.betti()) + ")");
  const std::map<std::pair<int, int>, std::size_t> dims = {{{0, 0}, 1}, {{0, 1}, 2}, {{1, 0}, 1}, {{0, 2}, 2},
                                                           {{1, 1}, 2}, {{0, 3}, 2}, {{2, 0}, 1}, {{1, 2}, 2},
                                                           {{2, 1}, 2}, {{3, 0}, 1}};
  for (int k = 0; k <= 6; ++k) {
    const auto &v = h.decomposition(k);
    c.expect(v.full && v.direct, "degree " + std::to_string(k) + " full and direct");
  }
  for (const auto &[rs, dim] : dims)
    c.expect(h.hrs(rs.first, rs.second).dim() == dim,
             "dim H^(" + std::to_string(rs.first) + "," + std::to_string(rs.second) + ") = " + std::to_string(dim));
  c.expect(h.hlc().holds, "HLC holds");
  c.expect(h.dd_lemma(), "dd^Lambda-lemma holds");
  return c.report();
}

bool criterion_example3() {
  Criterion c(3, "completely solvable (-23,0,0,-46,56,0) with omega = e12+e36+e45");
  const auto h = corpus_cohomology("example3");
  const auto b = h.betti();
  c.expect(b[1] == 3 && b[2] == 5 && b[3] == 6, "b1,b2,b3 = 3,5,6 (got " + join(b) + ")");
  c.expect(h.hrs(1, 0).dim() == 1 && h.hrs(0, 2).dim() == 4, "H^2 = H^(1,0) dim 1 + H^(0,2) dim 4");
  c.expect(h.decomposition(2).full && h.decomposition(2).direct, "degree 2 full and direct");
  c.expect(h.decomposition(3).sum_dim < b[3], "degree 3 sum strictly smaller than H^3");
  c.expect(!h.decomposition(3).sum.contains(h.de_rham(3).class_of(parse("136"))), "[e136] outside H^(0,3) + H^(1,1)");
  c.note("degree 3 sum has dim " + std::to_string(h.decomposition(3).sum_dim) + " of " + std::to_string(b[3]));
  return c.report();
}

bool criterion_example4() {
  Criterion c(4, "half-flat example (0,12-45,-13+46,0,15-24,-16+34) with Re psi");
  const auto model = find_corpus_model("example4");
  const Report r = run_compute(*model);
  const auto h = corpus_cohomology("example4");
  c.expect(h.structure().algebra().differential(h.structure().omega()).is_zero(), "omega closed");
  c.expect(!h.structure().volume().is_zero(), "omega^3 != 0");
  const Form psi = parse(model->extra_forms.at("re_psi"));
  c.expect(h.structure().algebra().differential(psi).is_zero(), "Re psi closed");
  c.expect(op_Lambda(h.structure(), psi).is_zero(), "Re psi primitive");
  c.expect(h.hrs(0, 3).classes.contains(h.de_rham(3).class_of(psi)), "[Re psi] in H^(0,3)");
  c.expect(r.forms.size() == 1 && r.forms.front().closed && r.forms.front().primitive, "report analyses Re psi");
  c.expect(r.lefschetz_maps.size() == static_cast<std::size_t>(h.n() + 1), "report lists L^k for k = 0..n");
  for (const auto &m : r.lefschetz_maps) {
    const QMatrix lk = h.lefschetz_map(m.k);
    c.expect(rank(lk) == m.rank, "rank of L^" + std::to_string(m.k));
    c.note("L^" + std::to_string(m.k) + ": H^" + std::to_string(m.source_degree) + " -> H^" +
           std::to_string(m.target_degree) + " rank " + std::to_string(m.rank) +
           (m.bijective ? " (bijective)" : " (not bijective)"));
  }
  return c.report();
}

std::vector<Tested> tested_structures() {
  std::vector<Tested> out;
  for (const auto &m : corpus()) {
    auto c = std::make_unique<SymplecticCohomology>(corpus_cohomology(m.name));
    const auto props = check_properties(c->structure().algebra());
    out.push_back({m.name, std::move(c), props});
  }
  SampleGenerator gen(kSeed);
  for (const auto &[dim, count] : {std::pair{4, kSamples4}, std::pair{6, kSamples6}, std::pair{8, kSamples8}})
    for (int i = 0; i < count; ++i) {
      const auto sample = gen.sample(dim);
      auto c = std::make_unique<SymplecticCohomology>(
          SymplecticStructure::validate(LieAlgebra::build(sample.structure), sample.omega));
      const auto props = check_properties(c->structure().algebra());
      out.push_back({"dim " + std::to_string(dim) + " " + sample.family + " " + sample.structure.str(), std::move(c),
                     props});
    }
  return out;
}

void expect_all(Criterion &c, const std::string &name, const std::vector<TheoremCheck> &checks) {
  for (const auto &t : checks) c.expect(t.holds, name + ": " + t.name);
}

bool criterion_theorems(const std::vector<Tested> &tested) {
  Criterion c(5, "H^2 decomposition, H^(k,0) meets H^(0,2k) trivially, H^(r,s) = L^r H^(0,s)");
  for (const auto &t : tested) {
    c.expect(t.cohomology->decomposition(2).full && t.cohomology->decomposition(2).direct, t.name + ": H^2 full and direct");
    expect_all(c, t.name, t.cohomology->pure_intersection_check());
    expect_all(c, t.name, t.cohomology->lr_equals_hr_check());
    expect_all(c, t.name, theorem_suite(*t.cohomology, t.properties));
  }
  c.note(std::to_string(tested.size()) + " structures: " + std::to_string(corpus().size()) + " corpus, " +
         std::to_string(kSamples4) + " in dim 4, " + std::to_string(kSamples6) + " in dim 6, " +
         std::to_string(kSamples8) + " in dim 8 (seed " + std::to_string(kSeed) + ")");
  return c.report();
}

bool criterion_identities(const std::vector<Tested> &tested) {
  Criterion c(6, "operator identities and Lefschetz reassembly");
  std::mt19937_64 rng(kSeed);
  for (const auto &t : tested) {
    expect_all(c, t.name, identity_suite(t.cohomology->structure()));
    expect_all(c, t.name, reassembly_suite(t.cohomology->structure(), rng, 2));
  }
  c.note("with Lambda(omega) = n the star identities read Lambda = *L* and [d,Lambda] = (-1)^k *d*");
  return c.report();
}

bool criterion_equivalences(const std::vector<Tested> &tested) {
  Criterion c(7, "HLC <=> dd^Lambda-lemma and the d^Lambda, dd^Lambda, d+d^Lambda dualities");
  std::size_t hlc = 0;
  for (const auto &t : tested) {
    expect_all(c, t.name, equivalence_suite(*t.cohomology));
    if (t.cohomology->hlc().holds) ++hlc;
  }
  c.note(std::to_string(hlc) + " of " + std::to_string(tested.size()) + " structures satisfy HLC");
  return c.report();
}

bool criterion_nilpotent(const std::vector<Tested> &tested) {
  Criterion c(8, "non-abelian nilpotent algebras fail HLC; abelian ones satisfy it");
  std::size_t nilpotent = 0, abelian = 0;
  for (const auto &t : tested) {
    if (!t.properties.nilpotent) continue;
    const bool holds = t.cohomology->hlc().holds;
    if (t.properties.abelian) {
      ++abelian;
      c.expect(holds, t.name + ": abelian algebra satisfies HLC");
    } else {
      ++nilpotent;
      c.expect(!holds, t.name + ": non-abelian nilpotent algebra fails HLC");
      expect_all(c, t.name, nilpotent_suite(*t.cohomology, t.properties));
    }
  }
  c.expect(nilpotent > 0 && abelian > 0, "both kinds tested");
  c.note(std::to_string(nilpotent) + " non-abelian nilpotent, " + std::to_string(abelian) + " abelian");
  return c.report();
}

} // namespace

int main() {
  try {
    bool ok = true;
    ok &= criterion_example1();
    ok &= criterion_example2();
    ok &= criterion_example3();
    ok &= criterion_example4();
    const auto tested = tested_structures();
    ok &= criterion_theorems(tested);
    ok &= criterion_identities(tested);
    ok &= criterion_equivalences(tested);
    ok &= criterion_nilpotent(tested);
    std::cout << (ok ? "all criteria PASS" : "some criteria FAIL") << "\n";
    return ok ? EXIT_SUCCESS : static_cast<int>(ErrorClass::internal);
  } catch (const Error &e) {
    std::cout << "error: " << e.what() << "\n";
    return static_cast<int>(e.error_class());
  }
}
