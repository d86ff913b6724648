#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace lefschetz {

/// A model file: flat `key = value` lines, `#` starts a comment.
///
///     name = example1
///     dim = 6
///     structure = 0,0,0,12,14-23,15+34
///     omega = 16+35+24
///     flag = assert-completely-solvable
///     form.re_psi = 136+125+234-456
///
/// Recognised flags are `assert-completely-solvable` and `assert-lattice`.
struct ModelFile {
  std::string name;
  int dim = 0;
  std::string structure;
  std::string omega;
  std::set<std::string> flags;
  std::map<std::string, std::string> extra_forms;

  bool has_flag(std::string_view flag) const { return flags.count(std::string(flag)) != 0; }

  /// Canonical text: keys in the order above, one flag per line, forms sorted by name.
  std::string str() const;

  friend bool operator==(const ModelFile &, const ModelFile &) = default;
};

inline constexpr std::string_view flag_completely_solvable = "assert-completely-solvable";
inline constexpr std::string_view flag_lattice = "assert-lattice";

/// Throws SyntaxError (with a byte offset into `text`) or InputError.
ModelFile parse_model_file(std::string_view text);

/// Reads and parses a file; InputError if it cannot be opened.
ModelFile load_model_file(const std::string &path);

/// The built-in models, sorted by name.
const std::vector<ModelFile> &corpus();

std::optional<ModelFile> find_corpus_model(std::string_view name);

} // namespace lefschetz
