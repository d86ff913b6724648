#include "lefschetz/errors.hpp"
#include "lefschetz/model.hpp"
#include "lefschetz/report.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>

namespace lefschetz {
namespace {

bool has_caveat(const Report &r, const std::string &text) {
  return std::find(r.caveats.begin(), r.caveats.end(), text) != r.caveats.end();
}

TEST(ModelFile, ParsesAllKeys) {
  const auto m = parse_model_file("# comment\n"
                                  "name = demo\n"
                                  "dim = 6\n"
                                  "structure = 0,0,0,12,14-23,15+34   # trailing\n"
                                  "omega = 16+35+24\n"
                                  "flag = assert-lattice\n"
                                  "form.alpha = 136\n");
  EXPECT_EQ(m.name, "demo");
  EXPECT_EQ(m.dim, 6);
  EXPECT_EQ(m.structure, "0,0,0,12,14-23,15+34");
  EXPECT_TRUE(m.has_flag(flag_lattice));
  EXPECT_FALSE(m.has_flag(flag_completely_solvable));
  EXPECT_EQ(m.extra_forms.at("alpha"), "136");
  EXPECT_EQ(parse_model_file(m.str()), m);
}

TEST(ModelFile, SyntaxErrorsCarryOffsets) {
  try {
    parse_model_file("name = x\nstructure 0,0\n");
    FAIL() << "expected a syntax error";
  } catch (const SyntaxError &e) {
    EXPECT_EQ(e.position(), 9u);
  }
  EXPECT_THROW(parse_model_file("structure = 0,0\nstructure = 0,0\n"), SyntaxError);
  EXPECT_THROW(parse_model_file("structure = 0,0\ncolour = red\n"), SyntaxError);
  EXPECT_THROW(parse_model_file("structure = 0,0\nflag = assert-kahler\n"), SyntaxError);
  EXPECT_THROW(parse_model_file("structure = 0,0\ndim = six\n"), SyntaxError);
  EXPECT_THROW(parse_model_file("structure = 0,0\nform. = 12\n"), SyntaxError);
  EXPECT_THROW(parse_model_file("structure =\n"), SyntaxError);
  EXPECT_THROW(parse_model_file("omega = 12\n"), InputError);
}

TEST(ModelFile, LoadUsesFileStemAsDefaultName) {
  const auto path = std::filesystem::temp_directory_path() / "lefschetz_model_test_torus4.model";
  {
    std::ofstream out(path);
    out << "structure = 0^4\nomega = 12+34\n";
  }
  const auto m = load_model_file(path.string());
  EXPECT_EQ(m.name, "lefschetz_model_test_torus4");
  EXPECT_EQ(resolve_model(path.string()), m);
  std::filesystem::remove(path);
  EXPECT_THROW(load_model_file(path.string()), InputError);
}

TEST(Corpus, SortedAndResolvable) {
  std::vector<std::string> names;
  for (const auto &m : corpus()) names.push_back(m.name);
  EXPECT_EQ(names, (std::vector<std::string>{"example1", "example2", "example3", "example4", "torus6"}));
  EXPECT_TRUE(find_corpus_model("example3")->has_flag(flag_completely_solvable));
  EXPECT_FALSE(find_corpus_model("example5").has_value());
  EXPECT_EQ(resolve_model("example2").structure, "-13,23,0,-56,46,0");
  EXPECT_THROW(resolve_model("no-such-model"), InputError);
}

TEST(Compute, NilmanifoldReport) {
  const Report r = run_compute(*find_corpus_model("example1"));
  EXPECT_EQ(r.betti, (std::vector<std::size_t>{1, 3, 4, 4, 4, 3, 1}));
  EXPECT_FALSE(r.hlc.holds);
  EXPECT_FALSE(r.dd_lemma);
  EXPECT_TRUE(r.all_checks_hold());
  EXPECT_TRUE(r.caveats.empty());
  EXPECT_EQ(r.omega, "e16+e24+e35");
  ASSERT_EQ(r.decomposition.size(), 7u);
  EXPECT_FALSE(r.decomposition[3].full);
  EXPECT_EQ(r.decomposition[3].sum_dim, 2u);
  for (const auto &h : r.hrs) EXPECT_LE(h.s, 3);
}

TEST(Compute, CaveatsFollowProperties) {
  EXPECT_TRUE(has_caveat(run_compute(*find_corpus_model("example2")), lower_bound_caveat));
  EXPECT_TRUE(has_caveat(run_compute(*find_corpus_model("example4")), lower_bound_caveat));
  EXPECT_FALSE(has_caveat(run_compute(*find_corpus_model("example3")), lower_bound_caveat));

  ModelFile affine;
  affine.name = "affine";
  affine.structure = "0,12,0,34";
  affine.omega = "12+34";
  affine.flags.insert(std::string(flag_lattice));
  const Report r = run_compute(affine);
  EXPECT_FALSE(r.properties.unimodular);
  EXPECT_GE(r.caveats.size(), 3u);
}

TEST(Compute, ExtraFormAnalysis) {
  const Report r = run_compute(*find_corpus_model("example4"));
  ASSERT_EQ(r.forms.size(), 1u);
  const FormEntry &f = r.forms.front();
  EXPECT_EQ(f.name, "re_psi");
  EXPECT_EQ(f.degree, 3);
  EXPECT_TRUE(f.closed);
  EXPECT_TRUE(f.primitive);
  EXPECT_FALSE(f.class_coordinates.empty());
  const bool in_h03 = std::any_of(f.hrs_membership.begin(), f.hrs_membership.end(),
                                  [](const SummandEntry &e) { return e.r == 0 && e.s == 3; });
  EXPECT_TRUE(in_h03);
}

TEST(Compute, ErrorClasses) {
  ModelFile m;
  m.name = "bad";
  m.structure = "0,0,0,12,13,45";
  m.omega = "12+34+56";
  EXPECT_THROW(run_compute(m), JacobiViolation);
  m.structure = "0^4";
  m.omega = "12";
  EXPECT_THROW(run_compute(m), Degenerate);
  m.omega = "";
  EXPECT_THROW(run_compute(m), InputError);
  m.omega = "12+34";
  m.dim = 6;
  EXPECT_THROW(run_compute(m), InputError);
}

TEST(Json, RoundTripIsByteIdentical) {
  for (const auto &m : corpus()) {
    const Report r = run_compute(m);
    const std::string text = to_json(r);
    EXPECT_EQ(text.back(), '\n');
    EXPECT_NE(text.find("\"schema\": \"lefschetz-report/1\""), std::string::npos);
    const Report back = report_from_json(text);
    EXPECT_EQ(back, r) << m.name;
    EXPECT_EQ(to_json(back), text) << m.name;
  }
}

TEST(Json, DeterministicAcrossRuns) {
  const ModelFile m = *find_corpus_model("example3");
  EXPECT_EQ(to_json(run_compute(m)), to_json(run_compute(m)));
}

TEST(Json, RejectsMalformedInput) {
  EXPECT_THROW(report_from_json("{"), InputError);
  EXPECT_THROW(report_from_json("{\"schema\": \"other/1\"}"), InputError);
  EXPECT_THROW(report_from_json("[]"), InputError);
}

TEST(Report, RestrictToDegree) {
  const Report full = run_compute(*find_corpus_model("example1"));
  const Report r = restrict_to_degree(full, 3);
  ASSERT_EQ(r.de_rham.size(), 1u);
  EXPECT_EQ(r.de_rham.front().degree, 3);
  ASSERT_EQ(r.decomposition.size(), 1u);
  for (const auto &h : r.hrs) EXPECT_EQ(2 * h.r + h.s, 3);
  EXPECT_EQ(r.betti, full.betti);
  EXPECT_THROW(restrict_to_degree(full, 7), InputError);
}

TEST(Report, TextRendering) {
  const std::string text = render_text(run_compute(*find_corpus_model("example2")));
  EXPECT_NE(text.find("model example2 (dim 6)"), std::string::npos);
  EXPECT_NE(text.find("HLC holds"), std::string::npos);
  EXPECT_NE(text.find(lower_bound_caveat), std::string::npos);
  EXPECT_NE(text.find("H_dR        1 2 3 4 3 2 1"), std::string::npos);
}

} // namespace
} // namespace lefschetz
