#include "lefschetz/report.hpp"

#include "lefschetz/checks.hpp"
#include "lefschetz/errors.hpp"

#include <json.hpp>

#include <filesystem>
#include <sstream>

namespace lefschetz {

namespace {

using json = nlohmann::ordered_json;

constexpr const char *schema_id = "lefschetz-report/1";

std::vector<std::string> render_forms(const std::vector<Form> &forms) {
  std::vector<std::string> out;
  out.reserve(forms.size());
  for (const auto &f : forms) out.push_back(f.str());
  return out;
}

std::vector<std::string> render_vector(std::span<const Rational> v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto &c : v) out.push_back(c.str());
  return out;
}

DecompositionEntry decomposition_entry(const SymplecticStructure &s, const Form &a) {
  DecompositionEntry e;
  e.form = a.str();
  const LefschetzComponents c = lefschetz_decompose(s, a);
  e.formula_agrees = c.formula_agrees;
  for (const auto &[r, b] : c.components) e.components[r] = b.str();
  return e;
}

FormEntry form_entry(const SymplecticCohomology &c, const std::string &name, const std::string &text) {
  const SymplecticStructure &s = c.structure();
  const Form a = parse_form(text, s.dim());
  FormEntry e;
  e.name = name;
  e.form = a.str();
  e.degree = a.degree();
  e.closed = s.d().apply(a).is_zero();
  e.primitive = s.Lambda().apply(a).is_zero();
  if (e.closed) {
    const QVector cls = c.de_rham(e.degree).class_of(a);
    e.class_coordinates = render_vector(cls);
    for (int r = 0; 2 * r <= e.degree; ++r) {
      const HrsGroup &g = c.hrs(r, e.degree - 2 * r);
      if (g.classes.ambient_dim() == cls.size() && g.classes.contains(cls))
        e.hrs_membership.push_back({r, e.degree - 2 * r, g.dim()});
    }
  }
  e.decomposition = decomposition_entry(s, a);
  return e;
}

std::vector<std::string> caveats_for(const ModelFile &model, const LieProperties &p) {
  std::vector<std::string> out;
  if (!p.nilpotent && !model.has_flag(flag_completely_solvable)) out.emplace_back(lower_bound_caveat);
  if (!p.unimodular) out.emplace_back("algebra is not unimodular; it has no lattice and no Poincaré duality");
  if (!p.unimodular && model.has_flag(flag_lattice))
    out.emplace_back("assert-lattice is inconsistent with a non-unimodular algebra");
  return out;
}

// JSON ------------------------------------------------------------------------

json summands_json(const std::vector<SummandEntry> &v) {
  json a = json::array();
  for (const auto &e : v) a.push_back({{"r", e.r}, {"s", e.s}, {"dim", e.dim}});
  return a;
}

std::vector<SummandEntry> summands_from(const json &a) {
  std::vector<SummandEntry> out;
  for (const auto &e : a) out.push_back({e.at("r").get<int>(), e.at("s").get<int>(), e.at("dim").get<std::size_t>()});
  return out;
}

json decomposition_json(const DecompositionEntry &d) {
  json comps = json::array();
  for (const auto &[r, b] : d.components) comps.push_back({{"r", r}, {"primitive", b}});
  return {{"form", d.form}, {"formula_agrees", d.formula_agrees}, {"components", comps}};
}

DecompositionEntry decomposition_from(const json &j) {
  DecompositionEntry d;
  d.form = j.at("form").get<std::string>();
  d.formula_agrees = j.at("formula_agrees").get<bool>();
  for (const auto &c : j.at("components")) d.components[c.at("r").get<int>()] = c.at("primitive").get<std::string>();
  return d;
}

json to_json_value(const Report &r) {
  json model = {{"name", r.model.name},
                {"dim", r.model.dim},
                {"structure", r.model.structure},
                {"omega", r.model.omega},
                {"flags", r.model.flags},
                {"forms", r.model.extra_forms}};

  json de_rham = json::array();
  for (const auto &e : r.de_rham)
    de_rham.push_back({{"degree", e.degree}, {"dim", e.dim}, {"representatives", e.representatives}});

  json hrs = json::array();
  for (const auto &e : r.hrs)
    hrs.push_back({{"r", e.r}, {"s", e.s}, {"dim", e.dim}, {"representatives", e.representatives}});

  json verdicts = json::array();
  for (const auto &v : r.decomposition)
    verdicts.push_back({{"degree", v.degree},
                        {"summands", summands_json(v.summands)},
                        {"sum_dim", v.sum_dim},
                        {"betti", v.betti},
                        {"full", v.full},
                        {"direct", v.direct}});

  json maps = json::array();
  for (const auto &m : r.lefschetz_maps)
    maps.push_back({{"k", m.k},
                    {"source_degree", m.source_degree},
                    {"target_degree", m.target_degree},
                    {"rank", m.rank},
                    {"bijective", m.bijective},
                    {"matrix", m.matrix}});

  json middle = json::array();
  for (const auto &d : r.middle_degree_decompositions) middle.push_back(decomposition_json(d));

  json forms = json::array();
  for (const auto &f : r.forms)
    forms.push_back({{"name", f.name},
                     {"form", f.form},
                     {"degree", f.degree},
                     {"closed", f.closed},
                     {"primitive", f.primitive},
                     {"class", f.class_coordinates},
                     {"hrs_membership", summands_json(f.hrs_membership)},
                     {"decomposition", decomposition_json(f.decomposition)}});

  json checks = json::array();
  for (const auto &c : r.checks) checks.push_back({{"name", c.name}, {"holds", c.holds}});

  const auto &p = r.properties;
  const auto &t = r.cohomology;
  return {{"schema", schema_id},
          {"model", model},
          {"structure", r.structure},
          {"omega", r.omega},
          {"properties",
           {{"nilpotent", p.nilpotent},
            {"solvable", p.solvable},
            {"unimodular", p.unimodular},
            {"abelian", p.abelian},
            {"flags", p.flags}}},
          {"betti", r.betti},
          {"cohomology",
           {{"de_rham", t.de_rham},
            {"d_lambda", t.d_lambda},
            {"d_plus_d_lambda", t.d_plus_d_lambda},
            {"dd_lambda", t.dd_lambda},
            {"ph_d_plus_d_lambda", t.ph_d_plus_d_lambda},
            {"ph_d", t.ph_d}}},
          {"de_rham", de_rham},
          {"hrs", hrs},
          {"decomposition", verdicts},
          {"hlc", {{"per_k", r.hlc.per_k}, {"holds", r.hlc.holds}}},
          {"lefschetz_maps", maps},
          {"dd_lemma", r.dd_lemma},
          {"dd_lemma_per_degree", r.dd_lemma_per_degree},
          {"middle_degree_decompositions", middle},
          {"forms", forms},
          {"checks", checks},
          {"caveats", r.caveats}};
}

Report from_json_value(const json &j) {
  if (j.at("schema").get<std::string>() != schema_id)
    throw InputError("unsupported report schema `" + j.at("schema").get<std::string>() + "`");
  Report r;
  const json &m = j.at("model");
  r.model.name = m.at("name").get<std::string>();
  r.model.dim = m.at("dim").get<int>();
  r.model.structure = m.at("structure").get<std::string>();
  r.model.omega = m.at("omega").get<std::string>();
  r.model.flags = m.at("flags").get<std::set<std::string>>();
  r.model.extra_forms = m.at("forms").get<std::map<std::string, std::string>>();
  r.structure = j.at("structure").get<std::string>();
  r.omega = j.at("omega").get<std::string>();

  const json &p = j.at("properties");
  r.properties.nilpotent = p.at("nilpotent").get<bool>();
  r.properties.solvable = p.at("solvable").get<bool>();
  r.properties.unimodular = p.at("unimodular").get<bool>();
  r.properties.abelian = p.at("abelian").get<bool>();
  r.properties.flags = p.at("flags").get<std::vector<std::string>>();

  using dims = std::vector<std::size_t>;
  r.betti = j.at("betti").get<dims>();
  const json &t = j.at("cohomology");
  r.cohomology.de_rham = t.at("de_rham").get<dims>();
  r.cohomology.d_lambda = t.at("d_lambda").get<dims>();
  r.cohomology.d_plus_d_lambda = t.at("d_plus_d_lambda").get<dims>();
  r.cohomology.dd_lambda = t.at("dd_lambda").get<dims>();
  r.cohomology.ph_d_plus_d_lambda = t.at("ph_d_plus_d_lambda").get<dims>();
  r.cohomology.ph_d = t.at("ph_d").get<dims>();

  using strings = std::vector<std::string>;
  for (const auto &e : j.at("de_rham"))
    r.de_rham.push_back(
        {e.at("degree").get<int>(), e.at("dim").get<std::size_t>(), e.at("representatives").get<strings>()});
  for (const auto &e : j.at("hrs"))
    r.hrs.push_back({e.at("r").get<int>(), e.at("s").get<int>(), e.at("dim").get<std::size_t>(),
                     e.at("representatives").get<strings>()});
  for (const auto &e : j.at("decomposition"))
    r.decomposition.push_back({e.at("degree").get<int>(), summands_from(e.at("summands")),
                               e.at("sum_dim").get<std::size_t>(), e.at("betti").get<std::size_t>(),
                               e.at("full").get<bool>(), e.at("direct").get<bool>()});

  r.hlc.per_k = j.at("hlc").at("per_k").get<std::vector<bool>>();
  r.hlc.holds = j.at("hlc").at("holds").get<bool>();
  for (const auto &e : j.at("lefschetz_maps"))
    r.lefschetz_maps.push_back({e.at("k").get<int>(), e.at("source_degree").get<int>(),
                                e.at("target_degree").get<int>(), e.at("rank").get<std::size_t>(),
                                e.at("bijective").get<bool>(), e.at("matrix").get<std::vector<strings>>()});
  r.dd_lemma = j.at("dd_lemma").get<bool>();
  r.dd_lemma_per_degree = j.at("dd_lemma_per_degree").get<std::vector<bool>>();
  for (const auto &e : j.at("middle_degree_decompositions")) r.middle_degree_decompositions.push_back(decomposition_from(e));
  for (const auto &e : j.at("forms")) {
    FormEntry f;
    f.name = e.at("name").get<std::string>();
    f.form = e.at("form").get<std::string>();
    f.degree = e.at("degree").get<int>();
    f.closed = e.at("closed").get<bool>();
    f.primitive = e.at("primitive").get<bool>();
    f.class_coordinates = e.at("class").get<strings>();
    f.hrs_membership = summands_from(e.at("hrs_membership"));
    f.decomposition = decomposition_from(e.at("decomposition"));
    r.forms.push_back(std::move(f));
  }
  for (const auto &e : j.at("checks")) r.checks.push_back({e.at("name").get<std::string>(), e.at("holds").get<bool>()});
  r.caveats = j.at("caveats").get<strings>();
  return r;
}

// Text ------------------------------------------------------------------------

template <class T> std::string join(const std::vector<T> &v, const char *sep = " ") {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? sep : "") << v[i];
  return out.str();
}

const char *yes_no(bool b) { return b ? "yes" : "no"; }

} // namespace

bool Report::all_checks_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckEntry &c) { return c.holds; });
}

Report run_compute(const ModelFile &model) {
  if (model.omega.empty()) throw InputError("model `" + model.name + "` has no omega");
  StructureEquations eq =
      parse_structure_equations(model.structure, model.dim > 0 ? std::optional<int>(model.dim) : std::nullopt);
  const LieAlgebra g = LieAlgebra::build(std::move(eq));
  const Form omega = parse_form(model.omega, g.dim(), 2);
  const SymplecticCohomology c(SymplecticStructure::validate(g, omega));
  const LieProperties props = check_properties(g);
  const SymplecticStructure &s = c.structure();

  Report r;
  r.model = model;
  if (r.model.dim == 0) r.model.dim = g.dim();
  r.structure = g.structure().str();
  r.omega = omega.str();
  r.properties = {props.nilpotent, props.solvable, props.unimodular, props.abelian,
                  std::vector<std::string>(model.flags.begin(), model.flags.end())};

  r.betti = c.betti();
  r.cohomology.de_rham = r.betti;
  r.cohomology.d_lambda = c.dlambda_dims();
  r.cohomology.d_plus_d_lambda = c.d_plus_dlambda_dims();
  r.cohomology.dd_lambda = c.ddlambda_dims();
  for (int k = 0; k <= c.dim(); ++k) {
    r.cohomology.ph_d_plus_d_lambda.push_back(c.ph_plus(k).by_intersection);
    r.cohomology.ph_d.push_back(c.ph_d(k));
  }

  for (int k = 0; k <= c.dim(); ++k) {
    const CohomologySpace &h = c.de_rham(k);
    r.de_rham.push_back({k, h.dim(), render_forms(h.representatives())});
  }
  for (int k = 0; k <= c.dim(); ++k)
    for (int rr = 0; 2 * rr <= k; ++rr) {
      const int ss = k - 2 * rr;
      if (ss > c.n()) continue;
      const HrsGroup &grp = c.hrs(rr, ss);
      r.hrs.push_back({rr, ss, grp.dim(), render_forms(grp.representatives)});
    }
  for (int k = 0; k <= c.dim(); ++k) {
    const DecompositionVerdict &v = c.decomposition(k);
    VerdictEntry e{k, {}, v.sum_dim, v.betti, v.full, v.direct};
    for (const auto &[rs, d] : v.summand_dims)
      if (rs.second <= c.n()) e.summands.push_back({rs.first, rs.second, d});
    r.decomposition.push_back(std::move(e));
  }

  const HlcVerdict hlc = c.hlc();
  r.hlc = {hlc.per_k, hlc.holds};
  for (int k = 0; k <= c.n(); ++k) {
    const QMatrix m = c.lefschetz_map(k);
    LefschetzMapEntry e;
    e.k = k;
    e.source_degree = c.n() - k;
    e.target_degree = c.n() + k;
    e.rank = rank(m);
    e.bijective = m.rows() == m.cols() && e.rank == m.cols();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      std::vector<std::string> row;
      for (std::size_t jj = 0; jj < m.cols(); ++jj) row.push_back(m(i, jj).str());
      e.matrix.push_back(std::move(row));
    }
    r.lefschetz_maps.push_back(std::move(e));
  }
  r.dd_lemma = c.dd_lemma();
  r.dd_lemma_per_degree = c.dd_lemma_per_degree();
  for (const auto &rep : c.de_rham(c.n()).representatives())
    r.middle_degree_decompositions.push_back(decomposition_entry(s, rep));
  for (const auto &[name, text] : model.extra_forms) r.forms.push_back(form_entry(c, name, text));

  for (const auto &t : all_theorem_checks(c, props)) r.checks.push_back({t.name, t.holds});
  r.caveats = caveats_for(model, props);

  if (!r.all_checks_hold()) {
    std::string failed;
    for (const auto &chk : r.checks)
      if (!chk.holds) failed += (failed.empty() ? "" : "; ") + chk.name;
    throw InternalInconsistency("theorem check failed for `" + model.name + "`: " + failed);
  }
  return r;
}

ModelFile resolve_model(const std::string &path_or_name) {
  if (std::filesystem::exists(path_or_name)) return load_model_file(path_or_name);
  if (auto m = find_corpus_model(path_or_name)) return *m;
  throw InputError("`" + path_or_name + "` is neither a model file nor a corpus model");
}

Report restrict_to_degree(const Report &report, int k) {
  if (k < 0 || k > report.model.dim)
    throw InputError("degree " + std::to_string(k) + " outside 0.." + std::to_string(report.model.dim));
  Report r = report;
  std::erase_if(r.de_rham, [k](const DeRhamEntry &e) { return e.degree != k; });
  std::erase_if(r.hrs, [k](const HrsEntry &e) { return 2 * e.r + e.s != k; });
  std::erase_if(r.decomposition, [k](const VerdictEntry &e) { return e.degree != k; });
  std::erase_if(r.forms, [k](const FormEntry &e) { return e.degree != k; });
  return r;
}

std::string to_json(const Report &report) { return to_json_value(report).dump(2) + "\n"; }

Report report_from_json(const std::string &text) {
  try {
    return from_json_value(json::parse(text));
  } catch (const json::exception &e) {
    throw InputError(std::string("malformed report JSON: ") + e.what());
  }
}

std::string render_text(const Report &r) {
  std::ostringstream out;
  out << "model " << r.model.name << " (dim " << r.model.dim << ")\n";
  out << "  structure  " << r.structure << "\n";
  out << "  omega      " << r.omega << "\n";
  const auto &p = r.properties;
  out << "  nilpotent " << yes_no(p.nilpotent) << ", solvable " << yes_no(p.solvable) << ", unimodular "
      << yes_no(p.unimodular) << ", abelian " << yes_no(p.abelian) << "\n";
  if (!p.flags.empty()) out << "  flags      " << join(p.flags, ", ") << "\n";

  const auto &t = r.cohomology;
  out << "\ndimensions by degree\n";
  out << "  H_dR        " << join(t.de_rham) << "\n";
  out << "  H_dLambda   " << join(t.d_lambda) << "\n";
  out << "  H_d+dLambda " << join(t.d_plus_d_lambda) << "\n";
  out << "  H_ddLambda  " << join(t.dd_lambda) << "\n";
  out << "  PH_d+dLambda " << join(t.ph_d_plus_d_lambda) << "\n";
  out << "  PH_d        " << join(t.ph_d) << "\n";

  if (!r.de_rham.empty()) {
    out << "\nde Rham representatives\n";
    for (const auto &e : r.de_rham)
      out << "  H^" << e.degree << " (dim " << e.dim << ")  " << join(e.representatives, ", ") << "\n";
  }
  if (!r.hrs.empty()) {
    out << "\nH^(r,s)\n";
    for (const auto &e : r.hrs) {
      out << "  H^(" << e.r << "," << e.s << ") dim " << e.dim;
      if (!e.representatives.empty()) out << "  " << join(e.representatives, ", ");
      out << "\n";
    }
  }
  if (!r.decomposition.empty()) {
    out << "\ndecomposition of H^k into H^(r,s)\n";
    for (const auto &v : r.decomposition) {
      out << "  k=" << v.degree << "  ";
      for (std::size_t i = 0; i < v.summands.size(); ++i)
        out << (i ? " + " : "") << "(" << v.summands[i].r << "," << v.summands[i].s << "):" << v.summands[i].dim;
      out << "  sum " << v.sum_dim << " of " << v.betti << "  full " << yes_no(v.full) << ", direct "
          << yes_no(v.direct) << "\n";
    }
  }

  out << "\nLefschetz maps L^k: H^(n-k) -> H^(n+k)\n";
  for (const auto &m : r.lefschetz_maps)
    out << "  k=" << m.k << "  H^" << m.source_degree << " -> H^" << m.target_degree << "  rank " << m.rank
        << (m.bijective ? "  bijective" : "  not bijective") << "\n";
  out << "HLC " << (r.hlc.holds ? "holds" : "fails") << "\n";
  out << "dd^Lambda-lemma " << (r.dd_lemma ? "holds" : "fails") << "\n";

  for (const auto &f : r.forms) {
    out << "\nform " << f.name << " = " << f.form << " (degree " << f.degree << ")\n";
    out << "  closed " << yes_no(f.closed) << ", primitive " << yes_no(f.primitive) << "\n";
    if (f.closed) {
      out << "  class [" << join(f.class_coordinates, ", ") << "]";
      if (!f.hrs_membership.empty()) {
        out << " lies in";
        for (const auto &m : f.hrs_membership) out << " H^(" << m.r << "," << m.s << ")";
      }
      out << "\n";
    }
    for (const auto &[rr, b] : f.decomposition.components) out << "  B(r=" << rr << ") = " << b << "\n";
  }

  std::size_t passed = 0;
  for (const auto &c : r.checks) passed += c.holds ? 1 : 0;
  out << "\nchecks " << passed << "/" << r.checks.size() << " hold\n";
  for (const auto &c : r.checks)
    if (!c.holds) out << "  FAILED " << c.name << "\n";
  for (const auto &c : r.caveats) out << "caveat: " << c << "\n";
  return out.str();
}

} // namespace lefschetz
