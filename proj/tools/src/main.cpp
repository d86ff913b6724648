#include "lefschetz/errors.hpp"
#include "lefschetz/model.hpp"
#include "lefschetz/report.hpp"
#include "lefschetz/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

namespace {

int write_output(const std::string &text, const std::string &path) {
  if (path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw lefschetz::InputError("cannot write `" + path + "`");
  out << text;
  return 0;
}

int compute(const std::string &model_arg, bool as_json, std::optional<int> degree, const std::string &out_path) {
  lefschetz::Report report = lefschetz::run_compute(lefschetz::resolve_model(model_arg));
  if (degree) report = lefschetz::restrict_to_degree(report, *degree);
  return write_output(as_json ? lefschetz::to_json(report) : lefschetz::render_text(report), out_path);
}

int verify(const lefschetz::VerifyOptions &options) {
  const lefschetz::VerifySummary summary = lefschetz::run_verify(options);
  std::cout << summary.str();
  return summary.all_passed() ? 0 : static_cast<int>(lefschetz::ErrorClass::internal);
}

int list_corpus(const std::string &show) {
  if (!show.empty()) {
    const auto m = lefschetz::find_corpus_model(show);
    if (!m) throw lefschetz::InputError("no corpus model named `" + show + "`");
    std::cout << m->str();
    return 0;
  }
  for (const auto &m : lefschetz::corpus()) std::cout << m.name << "\n";
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Symplectic cohomology of Lie algebras in exact arithmetic"};
  app.require_subcommand(1);

  auto *compute_cmd = app.add_subcommand("compute", "Analyse a model file or a corpus model");
  std::string model_arg;
  bool as_json = false;
  std::optional<int> degree;
  std::string out_path;
  compute_cmd->add_option("model", model_arg, "Model file path or corpus name")->required();
  compute_cmd->add_flag("--json", as_json, "Emit JSON instead of text");
  compute_cmd->add_option("--degree", degree, "Restrict per-degree sections to degree K");
  compute_cmd->add_option("--out", out_path, "Write to a file instead of stdout");

  auto *verify_cmd = app.add_subcommand("verify", "Run the identity and theorem suites on the corpus and random samples");
  lefschetz::VerifyOptions options;
  std::vector<int> dims;
  verify_cmd->add_option("--seed", options.seed, "Random seed")->capture_default_str();
  verify_cmd->add_option("--dim", dims, "Sample dimension (4, 6 or 8); repeatable")
      ->check(CLI::IsMember({4, 6, 8}));
  verify_cmd->add_option("--samples", options.samples_per_dim, "Random samples per dimension")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);

  auto *corpus_cmd = app.add_subcommand("corpus", "Built-in models");
  bool list = false;
  std::string show;
  corpus_cmd->add_flag("--list", list, "List the built-in model names");
  corpus_cmd->add_option("--show", show, "Print one built-in model as a model file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(lefschetz::ErrorClass::input);
  }

  try {
    if (*compute_cmd) return compute(model_arg, as_json, degree, out_path);
    if (*verify_cmd) {
      if (!dims.empty()) options.dims = dims;
      return verify(options);
    }
    return list_corpus(show);
  } catch (const lefschetz::Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(e.error_class());
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(lefschetz::ErrorClass::internal);
  }
}
