#include "thin4/json_io.hpp"

#include <limits>
#include <sstream>

namespace thin4 {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw schema_error("expected an object");
  auto it = j.find(key);
  if (it == j.end())
    throw schema_error(std::string("missing field \"") + key + "\"");
  return *it;
}

long long as_int(const json& j, const char* what) {
  if (!j.is_number_integer())
    throw schema_error(std::string(what) + " must be an integer");
  return j.get<long long>();
}

long long int_field(const json& j, const char* key) {
  return as_int(field(j, key), key);
}

const json& array_field(const json& j, const char* key) {
  const json& a = field(j, key);
  if (!a.is_array())
    throw schema_error(std::string("field \"") + key + "\" must be an array");
  return a;
}

std::vector<long long> int_vector(const json& a, const char* what) {
  if (!a.is_array()) throw schema_error(std::string(what) + " must be an array");
  std::vector<long long> out;
  out.reserve(a.size());
  for (const auto& e : a) out.push_back(as_int(e, what));
  return out;
}

}  // namespace

json json_from_mpz(const mpz_class& v) {
  if (v.fits_slong_p()) return json(static_cast<long long>(v.get_si()));
  static const mpz_class lo = to_mpz(std::numeric_limits<long long>::min());
  static const mpz_class hi = to_mpz(std::numeric_limits<long long>::max());
  if (v >= lo && v <= hi) {
    // slong can be narrower than long long on some ABIs; go through text
    return json(std::stoll(v.get_str()));
  }
  return json(v.get_str());
}

mpz_class mpz_from_json(const json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    try {
      return mpz_class(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      throw schema_error("not a decimal integer string: " +
                         j.get<std::string>());
    }
  }
  throw schema_error("expected an integer or a decimal string");
}

json to_json(const WidthMultiset& w) {
  return json{{"entries", w.entries()}};
}

WidthMultiset width_multiset_from_json(const json& j) {
  try {
    return WidthMultiset(int_vector(array_field(j, "entries"), "entries"));
  } catch (const std::invalid_argument& e) {
    throw schema_error(e.what());
  }
}

json to_json(const DecompositionProfile& p) {
  json levels = json::array();
  for (const auto& l : p.levels) {
    json comps = json::array();
    for (const auto& c : l.components) {
      comps.push_back(json{{"hg", c.heegaard_genus},
                           {"tunnel", c.tunnel_number
                                          ? json(*c.tunnel_number)
                                          : json(nullptr)},
                           {"link_size", c.link_size}});
    }
    levels.push_back(json{{"one_handles", l.one_handles},
                          {"three_handles", l.three_handles},
                          {"components", comps}});
  }
  return json{{"label", p.label}, {"levels", levels}};
}

DecompositionProfile profile_from_json(const json& j) {
  DecompositionProfile p;
  const json& label = field(j, "label");
  if (!label.is_string()) throw schema_error("label must be a string");
  p.label = label.get<std::string>();
  for (const auto& jl : array_field(j, "levels")) {
    Level l;
    l.one_handles = int_field(jl, "one_handles");
    l.three_handles = int_field(jl, "three_handles");
    for (const auto& jc : array_field(jl, "components")) {
      LevelComponent c;
      c.heegaard_genus = int_field(jc, "hg");
      c.link_size = int_field(jc, "link_size");
      if (jc.contains("tunnel") && !jc.at("tunnel").is_null())
        c.tunnel_number = as_int(jc.at("tunnel"), "tunnel");
      l.components.push_back(std::move(c));
    }
    p.levels.push_back(std::move(l));
  }
  try {
    validate(p);
  } catch (const std::invalid_argument& e) {
    throw schema_error(e.what());
  }
  return p;
}

json to_json(const KirbyDiagram& d) {
  json twos = json::array();
  for (const auto& h : d.two_handles) {
    twos.push_back(json{{"id", h.id},
                        {"framing", h.framing},
                        {"linking", json(h.linking)},
                        {"run_through", json(h.run_through)}});
  }
  return json{{"zero_handles", d.zero_handles},
              {"one_handles", d.one_handles},
              {"two_handles", twos},
              {"three_handles", d.three_handles},
              {"four_handles", d.four_handles}};
}

KirbyDiagram kirby_from_json(const json& j) {
  KirbyDiagram d;
  d.zero_handles = int_field(j, "zero_handles");
  d.three_handles = int_field(j, "three_handles");
  d.four_handles = int_field(j, "four_handles");
  for (const auto& id : array_field(j, "one_handles")) {
    if (!id.is_string()) throw schema_error("1-handle ids must be strings");
    d.one_handles.push_back(id.get<std::string>());
  }
  for (const auto& jh : array_field(j, "two_handles")) {
    TwoHandle h;
    const json& id = field(jh, "id");
    if (!id.is_string()) throw schema_error("2-handle id must be a string");
    h.id = id.get<std::string>();
    h.framing = int_field(jh, "framing");
    if (jh.contains("linking")) {
      if (!jh.at("linking").is_object())
        throw schema_error("linking must be an object");
      for (const auto& [key, val] : jh.at("linking").items())
        h.linking[key] = as_int(val, "linking value");
    }
    if (jh.contains("run_through")) {
      if (!jh.at("run_through").is_object())
        throw schema_error("run_through must be an object");
      for (const auto& [key, val] : jh.at("run_through").items())
        h.run_through[key] = as_int(val, "run_through value");
    }
    d.two_handles.push_back(std::move(h));
  }
  try {
    validate(d);
  } catch (const std::invalid_argument& e) {
    throw schema_error(e.what());
  }
  return d;
}

json to_json(const IntegerMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c)
      row.push_back(json_from_mpz(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntegerMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw schema_error("matrix must be an array of rows");
  const std::size_t rows = j.size();
  std::size_t cols = 0;
  if (rows > 0) {
    if (!j[0].is_array()) throw schema_error("matrix rows must be arrays");
    cols = j[0].size();
  }
  IntegerMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols)
      throw schema_error("matrix rows must be arrays of equal length");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = mpz_from_json(j[r][c]);
  }
  return m;
}

json to_json(const AbelianGroup& g) {
  json torsion = json::array();
  for (const auto& d : g.torsion_divisors) torsion.push_back(json_from_mpz(d));
  return json{{"free_rank", g.free_rank},
              {"torsion", torsion},
              {"pretty", to_string(g)}};
}

namespace {

CutSystem cut_system_from_json(const json& a, const char* name) {
  CutSystem s;
  if (!a.is_array())
    throw schema_error(std::string(name) + " must be an array of class vectors");
  std::size_t i = 0;
  for (const auto& row : a) {
    Curve c;
    c.cls = int_vector(row, "curve class");
    c.label = std::string(name) + std::to_string(++i);
    s.curves.push_back(std::move(c));
  }
  return s;
}

json cut_system_to_json(const CutSystem& s) {
  json a = json::array();
  for (const auto& c : s.curves) a.push_back(c.cls);
  return a;
}

}  // namespace

json to_json(const TrisectionDiagram& d) {
  json out{{"genus", d.genus},
           {"alpha", cut_system_to_json(d.alpha)},
           {"beta", cut_system_to_json(d.beta)},
           {"gamma", cut_system_to_json(d.gamma)}};
  json geometric = json::object();
  if (d.geom_ab) geometric["ab"] = to_json(*d.geom_ab);
  if (d.geom_bg) geometric["bg"] = to_json(*d.geom_bg);
  if (d.geom_ga) geometric["ga"] = to_json(*d.geom_ga);
  if (!geometric.empty()) out["geometric"] = geometric;
  if (d.declared_k)
    out["declared_k"] = {(*d.declared_k)[0], (*d.declared_k)[1],
                         (*d.declared_k)[2]};
  return out;
}

TrisectionDiagram trisection_from_json(const json& j) {
  TrisectionDiagram d;
  d.genus = int_field(j, "genus");
  if (d.genus < 0) throw schema_error("genus must be nonnegative");
  d.alpha = cut_system_from_json(array_field(j, "alpha"), "alpha");
  d.beta = cut_system_from_json(array_field(j, "beta"), "beta");
  d.gamma = cut_system_from_json(array_field(j, "gamma"), "gamma");
  if (j.contains("geometric")) {
    const json& g = j.at("geometric");
    if (!g.is_object()) throw schema_error("geometric must be an object");
    if (g.contains("ab")) d.geom_ab = matrix_from_json(g.at("ab"));
    if (g.contains("bg")) d.geom_bg = matrix_from_json(g.at("bg"));
    if (g.contains("ga")) d.geom_ga = matrix_from_json(g.at("ga"));
  }
  if (j.contains("declared_k")) {
    auto v = int_vector(j.at("declared_k"), "declared_k");
    if (v.size() != 3) throw schema_error("declared_k must have three entries");
    d.declared_k = {{v[0], v[1], v[2]}};
  }
  return d;
}

namespace {

Matching matching_from_json(const json& a, long long b, const char* name) {
  if (!a.is_array())
    throw schema_error(std::string(name) + " must be an array of pairs");
  std::vector<std::pair<int, int>> pairs;
  for (const auto& row : a) {
    if (!row.is_array() || row.size() != 2)
      throw schema_error(std::string(name) + " arcs must be [i, j] pairs");
    pairs.emplace_back(static_cast<int>(as_int(row[0], "endpoint")),
                       static_cast<int>(as_int(row[1], "endpoint")));
  }
  try {
    return Matching(b, std::move(pairs));
  } catch (const std::invalid_argument& e) {
    throw schema_error(std::string(name) + ": " + e.what());
  }
}

json matching_to_json(const Matching& m) {
  json a = json::array();
  for (const auto& [x, y] : m.pairs()) a.push_back(json::array({x, y}));
  return a;
}

}  // namespace

json to_json(const BridgeTrisection& bt) {
  json out{{"b", bt.b()},
           {"theta_alpha", matching_to_json(bt.theta_alpha)},
           {"theta_beta", matching_to_json(bt.theta_beta)},
           {"theta_gamma", matching_to_json(bt.theta_gamma)},
           {"unlink_assertion", bt.unlink_assertion}};
  if (bt.crossings_json) out["crossings"] = json::parse(*bt.crossings_json);
  return out;
}

BridgeTrisection bridge_from_json(const json& j) {
  const long long b = int_field(j, "b");
  const json& assertion = field(j, "unlink_assertion");
  if (!assertion.is_boolean())
    throw schema_error("unlink_assertion must be a boolean");
  BridgeTrisection bt{
      matching_from_json(array_field(j, "theta_alpha"), b, "theta_alpha"),
      matching_from_json(array_field(j, "theta_beta"), b, "theta_beta"),
      matching_from_json(array_field(j, "theta_gamma"), b, "theta_gamma"),
      assertion.get<bool>(),
      std::nullopt,
  };
  if (j.contains("crossings")) bt.crossings_json = j.at("crossings").dump();
  return bt;
}

json to_json(const BandedDiagram& bd) {
  json out{{"link", json{{"beta", matching_to_json(bd.link_beta)},
                         {"gamma", matching_to_json(bd.link_gamma)}}},
           {"bands", bd.bands}};
  if (bd.crossings_json) out["crossings"] = json::parse(*bd.crossings_json);
  return out;
}

json Report::to_json() const {
  json out{{"status", status}, {"payload", payload}, {"warnings", warnings}};
  if (!error.empty()) out["error"] = error;
  return out;
}

std::string Report::render(const std::string& format) const {
  if (format == "text") {
    std::ostringstream os;
    os << "status: " << status << "\n";
    if (!error.empty()) os << "error: " << error << "\n";
    for (const auto& w : warnings) os << "warning: " << w << "\n";
    for (const auto& [key, value] : payload.items())
      os << key << ": " << value.dump() << "\n";
    return os.str();
  }
  return to_json().dump(2) + "\n";
}

Report width_compute_report(const DecompositionProfile& p) {
  Report r;
  json cs = json::array();
  for (const auto& l : p.levels) cs.push_back(level_complexity(l));
  WidthMultiset w = width_of(p);
  r.payload = json{{"label", p.label},
                   {"level_complexities", cs},
                   {"width", to_json(w)}};
  auto evens = even_entries(w);
  if (!evens.empty()) {
    std::ostringstream os;
    os << "even width entries present (entries of non-empty decompositions "
          "are expected odd):";
    for (long long e : evens) os << ' ' << e;
    r.warnings.push_back(os.str());
  }
  return r;
}

Report trisection_verify_report(const TrisectionDiagram& d) {
  Report r;
  TrisectionReport tr = validate_trisection(d);
  auto opt = [](const std::optional<long long>& v) {
    return v ? json(*v) : json(nullptr);
  };
  r.payload = json{{"genus", tr.genus},
                   {"k", json::array({opt(tr.k12), opt(tr.k23), opt(tr.k31)})},
                   {"euler", opt(tr.euler)},
                   {"width_entry", tr.width_entry},
                   {"diagnostics", tr.diagnostics}};
  r.warnings = tr.warnings;
  if (!tr.ok()) {
    r.status = "invalid";
    r.error = tr.diagnostics.front();
  }
  return r;
}

}  // namespace thin4
