#include "lefschetz/model.hpp"

#include "lefschetz/errors.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace lefschetz {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::string_view trim(std::string_view s, std::size_t &offset) {
  while (!s.empty() && is_space(s.front())) {
    s.remove_prefix(1);
    ++offset;
  }
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

bool valid_form_name(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' || c == '-';
  });
}

ModelFile make(const char *name, int dim, const char *structure, const char *omega,
               std::set<std::string> flags = {}, std::map<std::string, std::string> forms = {}) {
  ModelFile m;
  m.name = name;
  m.dim = dim;
  m.structure = structure;
  m.omega = omega;
  m.flags = std::move(flags);
  m.extra_forms = std::move(forms);
  return m;
}

} // namespace

std::string ModelFile::str() const {
  std::ostringstream out;
  out << "name = " << name << '\n';
  out << "dim = " << dim << '\n';
  out << "structure = " << structure << '\n';
  if (!omega.empty()) out << "omega = " << omega << '\n';
  for (const auto &f : flags) out << "flag = " << f << '\n';
  for (const auto &[k, v] : extra_forms) out << "form." << k << " = " << v << '\n';
  return out.str();
}

ModelFile parse_model_file(std::string_view text) {
  ModelFile m;
  std::set<std::string> seen;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::size_t offset = line_start;
    line = trim(line, offset);
    if (!line.empty()) {
      const auto eq = line.find('=');
      if (eq == std::string_view::npos) throw SyntaxError("expected `key = value`", offset);
      std::size_t key_offset = offset;
      const std::string_view key = trim(line.substr(0, eq), key_offset);
      std::size_t value_offset = offset + eq + 1;
      const std::string_view value = trim(line.substr(eq + 1), value_offset);
      if (key.empty()) throw SyntaxError("missing key", key_offset);
      if (value.empty()) throw SyntaxError("missing value for `" + std::string(key) + "`", value_offset);

      if (key != "flag" && !seen.insert(std::string(key)).second)
        throw SyntaxError("duplicate key `" + std::string(key) + "`", key_offset);

      if (key == "name") {
        m.name = value;
      } else if (key == "dim") {
        int d = 0;
        const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), d);
        if (ec != std::errc() || ptr != value.data() + value.size() || d <= 0)
          throw SyntaxError("dim must be a positive integer", value_offset);
        m.dim = d;
      } else if (key == "structure") {
        m.structure = value;
      } else if (key == "omega") {
        m.omega = value;
      } else if (key == "flag") {
        if (value != flag_completely_solvable && value != flag_lattice)
          throw SyntaxError("unknown flag `" + std::string(value) + "`", value_offset);
        m.flags.insert(std::string(value));
      } else if (key.starts_with("form.")) {
        const std::string_view form_name = key.substr(5);
        if (!valid_form_name(form_name)) throw SyntaxError("invalid form name", key_offset + 5);
        m.extra_forms.emplace(form_name, value);
      } else {
        throw SyntaxError("unknown key `" + std::string(key) + "`", key_offset);
      }
    }
    line_start = line_end + 1;
  }
  if (m.structure.empty()) throw InputError("model file has no `structure` line");
  return m;
}

ModelFile load_model_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open model file `" + path + "`");
  std::ostringstream buf;
  buf << in.rdbuf();
  ModelFile m = parse_model_file(buf.str());
  if (m.name.empty()) {
    auto slash = path.find_last_of('/');
    std::string stem = path.substr(slash == std::string::npos ? 0 : slash + 1);
    if (auto dot = stem.rfind('.'); dot != std::string::npos && dot > 0) stem.resize(dot);
    m.name = stem;
  }
  return m;
}

const std::vector<ModelFile> &corpus() {
  static const std::vector<ModelFile> models = [] {
    std::vector<ModelFile> v;
    v.push_back(make("example1", 6, "0,0,0,12,14-23,15+34", "16+35+24"));
    v.push_back(make("example2", 6, "-13,23,0,-56,46,0", "12+36+45"));
    v.push_back(make("example3", 6, "-23,0,0,-46,56,0", "12+36+45", {std::string(flag_completely_solvable)}));
    v.push_back(make("example4", 6, "0,12-45,-13+46,0,15-24,-16+34", "14+35+62", {},
                     {{"re_psi", "136+125+234-456"}}));
    v.push_back(make("torus6", 6, "0^6", "14+25+36"));
    return v;
  }();
  return models;
}

std::optional<ModelFile> find_corpus_model(std::string_view name) {
  for (const auto &m : corpus())
    if (m.name == name) return m;
  return std::nullopt;
}

} // namespace lefschetz
