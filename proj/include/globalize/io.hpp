#pragma once

// JSON reading and writing for every input schema (version 1).
//
// Input errors are thrown as Error(kind = Input) whose witness names the JSON
// location, e.g. "/rho/2,g". Writers emit the canonical form that the readers
// accept; nlohmann::json keeps object keys sorted.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "globalize/algebra.hpp"
#include "globalize/bialgebra.hpp"
#include "globalize/error.hpp"
#include "globalize/exact.hpp"
#include "globalize/fintop.hpp"
#include "globalize/monoid.hpp"
#include "globalize/pca.hpp"
#include "globalize/setact.hpp"
#include "globalize/topact.hpp"

namespace globalize::io {

using json = nlohmann::json;

inline constexpr int schema_version = 1;

namespace detail {

[[noreturn]] inline void bad(const std::string& path, const std::string& what) {
  throw Error("SchemaViolation", what + " at " + (path.empty() ? "/" : path));
}

inline const json& member(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) bad(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(path + "/" + key, "missing field");
  return *it;
}

inline std::string str(const json& j, const std::string& path) {
  if (!j.is_string()) bad(path, "expected a string");
  return j.get<std::string>();
}

inline std::size_t count(const json& j, const std::string& path) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) bad(path, "expected a count");
  return j.get<std::size_t>();
}

inline std::vector<std::string> labels(const json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "expected an array of labels");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    auto s = str(j[i], path + "/" + std::to_string(i));
    if (s.empty() || s.find(',') != std::string::npos) bad(path + "/" + std::to_string(i), "labels must be nonempty and comma-free");
    out.push_back(std::move(s));
  }
  return out;
}

inline std::size_t lookup(const std::vector<std::string>& labels, const std::string& s, const std::string& path) {
  auto it = std::find(labels.begin(), labels.end(), s);
  if (it == labels.end()) bad(path, "unknown label '" + s + "'");
  return static_cast<std::size_t>(it - labels.begin());
}

inline std::pair<std::string, std::string> split_key(const std::string& key, const std::string& path) {
  const auto c = key.find(',');
  if (c == std::string::npos || key.find(',', c + 1) != std::string::npos) bad(path, "key must have the form 'a,b'");
  return {key.substr(0, c), key.substr(c + 1)};
}

/// Runs fn, tagging input errors that carry no location with `path`.
template <class Fn>
auto located(const std::string& path, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Input || e.witness().find(" at /") != std::string::npos) throw;
    throw Error(e.code(), e.witness() + " at " + (path.empty() ? "/" : path), e.kind());
  }
}

inline void check_schema(const json& j, const std::string& path) {
  if (!j.is_object()) bad(path, "expected an object");
  if (auto it = j.find("schema"); it != j.end()) {
    if (!it->is_number_integer() || it->get<int>() != schema_version) bad(path + "/schema", "unsupported schema version");
  }
}

}  // namespace detail

inline json read_file(const std::string& filename) {
  std::ifstream in(filename);
  if (!in) throw Error("FileNotFound", filename);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error("MalformedJson", filename + ": " + e.what());
  }
}

/// FNV-1a over the canonical dump, as 16 hex digits.
inline std::string digest(const json& j) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : j.dump()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

// ------------------------------------------------------------------ monoids

/// "cyclic:n" (or "z:n"), "sym:n", "bicyclic:n", "trivial", or products joined
/// by '*'. The colon may be dropped: "sym3", "z2".
inline FiniteMonoid monoid_from_spec(const std::string& spec) {
  if (auto star = spec.find('*'); star != std::string::npos) {
    return product(monoid_from_spec(spec.substr(0, star)), monoid_from_spec(spec.substr(star + 1)));
  }
  if (spec == "trivial") return cyclic(1);
  std::size_t cut = 0;
  while (cut < spec.size() && std::isalpha(static_cast<unsigned char>(spec[cut]))) ++cut;
  const std::string kind = spec.substr(0, cut);
  std::string arg = spec.substr(cut);
  if (!arg.empty() && arg.front() == ':') arg.erase(0, 1);
  if (arg.empty() || arg.size() > 3 || !std::all_of(arg.begin(), arg.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw Error("BadMonoidSpec", spec);
  }
  const std::size_t n = std::stoul(arg);
  if (kind == "cyclic" || kind == "z") return cyclic(n);
  if (kind == "sym") return symmetric(n);
  if (kind == "bicyclic") return bicyclic_truncated(n);
  throw Error("BadMonoidSpec", spec);
}

inline FiniteMonoid parse_monoid(const json& j, const std::string& path = "") {
  if (j.is_string()) {
    try {
      return monoid_from_spec(j.get<std::string>());
    } catch (const Error& e) {
      detail::bad(path, e.what());
    }
  }
  detail::check_schema(j, path);
  auto labels = detail::labels(detail::member(j, "elements", path), path + "/elements");
  const std::size_t n = labels.size();
  const std::size_t id = detail::lookup(labels, detail::str(detail::member(j, "identity", path), path + "/identity"),
                                        path + "/identity");
  const json& t = detail::member(j, "table", path);
  if (!t.is_object()) detail::bad(path + "/table", "expected an object");
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> table(n * n, unset);
  for (const auto& [key, val] : t.items()) {
    const std::string p = path + "/table/" + key;
    auto [a, b] = detail::split_key(key, p);
    table[detail::lookup(labels, a, p) * n + detail::lookup(labels, b, p)] = detail::lookup(labels, detail::str(val, p), p);
  }
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table[i] == unset) detail::bad(path + "/table/" + labels[i / n] + "," + labels[i % n], "missing product");
  return detail::located(path, [&] { return validate_monoid(std::move(labels), std::move(table), id); });
}

inline json to_json(const FiniteMonoid& m) {
  json t = json::object();
  for (std::size_t a = 0; a < m.size(); ++a)
    for (std::size_t b = 0; b < m.size(); ++b) t[m.label(a) + "," + m.label(b)] = m.label(m.mul(a, b));
  return {{"schema", schema_version}, {"elements", m.labels()}, {"identity", m.label(m.identity())}, {"table", t}};
}

// ------------------------------------------------------------- set actions

inline PartialActionDatum parse_set_action(const json& j, const std::string& path = "") {
  detail::check_schema(j, path);
  auto m = parse_monoid(detail::member(j, "monoid", path), path + "/monoid");
  auto x = detail::labels(detail::member(j, "X", path), path + "/X");
  const json& dom = detail::member(j, "domain", path);
  if (!dom.is_array()) detail::bad(path + "/domain", "expected an array of pairs");
  const json& rho = detail::member(j, "rho", path);
  if (!rho.is_object()) detail::bad(path + "/rho", "expected an object");
  std::vector<std::size_t> table(x.size() * m.size(), PartialActionDatum::undefined);
  std::vector<bool> declared(table.size(), false);
  for (std::size_t i = 0; i < dom.size(); ++i) {
    const std::string p = path + "/domain/" + std::to_string(i);
    if (!dom[i].is_array() || dom[i].size() != 2) detail::bad(p, "expected a pair [x, m]");
    const std::size_t xi = detail::lookup(x, detail::str(dom[i][0], p + "/0"), p + "/0");
    const std::size_t mi = detail::lookup(m.labels(), detail::str(dom[i][1], p + "/1"), p + "/1");
    if (declared[xi * m.size() + mi]) detail::bad(p, "duplicate domain pair");
    declared[xi * m.size() + mi] = true;
  }
  for (const auto& [key, val] : rho.items()) {
    const std::string p = path + "/rho/" + key;
    auto [xs, ms] = detail::split_key(key, p);
    const std::size_t idx = detail::lookup(x, xs, p) * m.size() + detail::lookup(m.labels(), ms, p);
    if (!declared[idx]) detail::bad(p, "rho is defined outside the domain");
    table[idx] = detail::lookup(x, detail::str(val, p), p);
  }
  for (std::size_t i = 0; i < table.size(); ++i)
    if (declared[i] && table[i] == PartialActionDatum::undefined) {
      detail::bad(path + "/rho/" + x[i / m.size()] + "," + m.label(i % m.size()), "rho is not total on the domain");
    }
  return detail::located(path, [&] { return PartialActionDatum(std::move(m), std::move(x), std::move(table)); });
}

inline json to_json(const PartialActionDatum& d) {
  json dom = json::array(), rho = json::object();
  for (auto p : d.domain()) {
    const auto& x = d.carrier()[d.pair_x(p)];
    const auto& m = d.monoid().label(d.pair_m(p));
    dom.push_back({x, m});
    rho[x + "," + m] = d.carrier()[d.act(d.pair_x(p), d.pair_m(p))];
  }
  return {{"schema", schema_version}, {"monoid", to_json(d.monoid())}, {"X", d.carrier()}, {"domain", dom}, {"rho", rho}};
}

inline GlobalAction parse_global_action(const json& j, const std::string& path = "") {
  detail::check_schema(j, path);
  auto m = parse_monoid(detail::member(j, "monoid", path), path + "/monoid");
  auto y = detail::labels(detail::member(j, "Y", path), path + "/Y");
  const json& act = detail::member(j, "act", path);
  if (!act.is_object()) detail::bad(path + "/act", "expected an object");
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> table(y.size() * m.size(), unset);
  for (const auto& [key, val] : act.items()) {
    const std::string p = path + "/act/" + key;
    auto [ys, ms] = detail::split_key(key, p);
    table[detail::lookup(y, ys, p) * m.size() + detail::lookup(m.labels(), ms, p)] = detail::lookup(y, detail::str(val, p), p);
  }
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table[i] == unset) detail::bad(path + "/act/" + y[i / m.size()] + "," + m.label(i % m.size()), "action is not total");
  return detail::located(path, [&] { return GlobalAction(std::move(m), std::move(y), std::move(table)); });
}

inline json to_json(const GlobalAction& g) {
  json act = json::object();
  for (std::size_t y = 0; y < g.size(); ++y)
    for (std::size_t m = 0; m < g.monoid().size(); ++m) act[g.carrier()[y] + "," + g.monoid().label(m)] = g.carrier()[g.apply(y, m)];
  return {{"schema", schema_version}, {"monoid", to_json(g.monoid())}, {"Y", g.carrier()}, {"act", act}};
}

// -------------------------------------------------------------- topologies

/// Opens given as label lists over `points`; the "points" block, if present, must list the same labels.
inline FinTopology parse_topology(const json& j, const std::vector<std::string>& points, const std::string& path = "") {
  detail::check_schema(j, path);
  if (auto it = j.find("points"); it != j.end()) {
    auto given = detail::labels(*it, path + "/points");
    auto a = given, b = points;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) detail::bad(path + "/points", "points do not match the carrier");
  }
  check_carrier(points.size());
  const json& opens = detail::member(j, "opens", path);
  if (!opens.is_array()) detail::bad(path + "/opens", "expected an array of open sets");
  std::vector<OpenSet> sets;
  for (std::size_t i = 0; i < opens.size(); ++i) {
    const std::string p = path + "/opens/" + std::to_string(i);
    if (!opens[i].is_array()) detail::bad(p, "expected a list of points");
    OpenSet s = 0;
    for (std::size_t k = 0; k < opens[i].size(); ++k) {
      s |= singleton(detail::lookup(points, detail::str(opens[i][k], p + "/" + std::to_string(k)), p + "/" + std::to_string(k)));
    }
    sets.push_back(s);
  }
  return detail::located(path, [&] { return validate_topology(points.size(), std::move(sets)); });
}

inline json to_json(const FinTopology& t, const std::vector<std::string>& points) {
  json opens = json::array();
  for (auto u : t.opens()) {
    json o = json::array();
    for (std::size_t i = 0; i < points.size(); ++i)
      if (contains(u, i)) o.push_back(points[i]);
    opens.push_back(o);
  }
  return {{"points", points}, {"opens", opens}};
}

/// tD opens are lists of [x, m] pairs from the domain.
inline FinTopology parse_domain_topology(const json& j, const PartialActionDatum& d, const std::string& path) {
  const auto dom = d.domain();
  const json& opens = detail::member(j, "opens", path);
  if (!opens.is_array()) detail::bad(path + "/opens", "expected an array of open sets");
  std::vector<OpenSet> sets;
  for (std::size_t i = 0; i < opens.size(); ++i) {
    const std::string p = path + "/opens/" + std::to_string(i);
    if (!opens[i].is_array()) detail::bad(p, "expected a list of pairs");
    OpenSet s = 0;
    for (std::size_t k = 0; k < opens[i].size(); ++k) {
      const std::string q = p + "/" + std::to_string(k);
      const json& pr = opens[i][k];
      if (!pr.is_array() || pr.size() != 2) detail::bad(q, "expected a pair [x, m]");
      const std::size_t x = detail::lookup(d.carrier(), detail::str(pr[0], q + "/0"), q + "/0");
      const std::size_t m = detail::lookup(d.monoid().labels(), detail::str(pr[1], q + "/1"), q + "/1");
      auto it = std::find(dom.begin(), dom.end(), d.pair(x, m));
      if (it == dom.end()) detail::bad(q, "pair is not in the domain");
      s |= singleton(static_cast<std::size_t>(it - dom.begin()));
    }
    sets.push_back(s);
  }
  return detail::located(path, [&] { return validate_topology(dom.size(), std::move(sets)); });
}

inline json domain_topology_to_json(const FinTopology& t, const PartialActionDatum& d) {
  const auto dom = d.domain();
  json opens = json::array();
  for (auto u : t.opens()) {
    json o = json::array();
    for (std::size_t k = 0; k < dom.size(); ++k)
      if (contains(u, k)) o.push_back({d.carrier()[d.pair_x(dom[k])], d.monoid().label(d.pair_m(dom[k]))});
    opens.push_back(o);
  }
  return {{"opens", opens}};
}

inline TopPartialModule parse_top_action(const json& j, const std::string& path = "") {
  auto base = parse_set_action(j, path);
  auto tX = parse_topology(detail::member(j, "tX", path), base.carrier(), path + "/tX");
  auto tM = parse_topology(detail::member(j, "tM", path), base.monoid().labels(), path + "/tM");
  std::optional<FinTopology> tD;
  if (auto it = j.find("tD"); it != j.end()) tD = parse_domain_topology(*it, base, path + "/tD");
  auto mon = detail::located(path + "/tM", [&] { return make_top_monoid(base.monoid(), std::move(tM)); });
  return detail::located(path, [&] { return make_top_module(std::move(base), std::move(tX), std::move(mon), std::move(tD)); });
}

inline json to_json(const TopPartialModule& m, bool with_tD = true) {
  json j = to_json(m.base);
  j["tX"] = to_json(m.tX, m.base.carrier());
  j["tM"] = to_json(m.M.topology, m.M.monoid.labels());
  if (with_tD) j["tD"] = domain_topology_to_json(m.tD, m.base);
  return j;
}

// ---------------------------------------------------------------- algebras

inline Field parse_field(const json& j, const std::string& path, std::optional<Field> override_field) {
  if (override_field) return *override_field;
  try {
    return Field::parse(detail::str(detail::member(j, "field", path), path + "/field"));
  } catch (const Error& e) {
    if (e.code() == "SchemaViolation") throw;
    detail::bad(path + "/field", e.what());
  }
}

inline Scalar parse_scalar(const json& j, Field f, const std::string& path) {
  try {
    if (j.is_number_integer()) return Scalar(f, j.get<long>());
    return Scalar::parse(f, detail::str(j, path));
  } catch (const Error& e) {
    if (e.code() == "SchemaViolation") throw;
    detail::bad(path, e.what());
  }
}

inline Vec parse_vec(const json& j, Field f, std::size_t n, const std::string& path) {
  if (!j.is_array() || j.size() != n) detail::bad(path, "expected " + std::to_string(n) + " scalars");
  Vec v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(parse_scalar(j[i], f, path + "/" + std::to_string(i)));
  return v;
}

/// A rows × cols matrix given as a list of rows.
inline Matrix parse_matrix(const json& j, Field f, std::size_t rows, std::size_t cols, const std::string& path) {
  if (!j.is_array() || j.size() != rows) detail::bad(path, "expected " + std::to_string(rows) + " rows");
  std::vector<Vec> r;
  for (std::size_t i = 0; i < rows; ++i) r.push_back(parse_vec(j[i], f, cols, path + "/" + std::to_string(i)));
  return Matrix::from_rows(f, cols, r);
}

inline json to_json(const Vec& v) {
  json a = json::array();
  for (const auto& s : v) a.push_back(s.to_string());
  return a;
}

inline json to_json(const Matrix& m) {
  json a = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(to_json(m.row(r)));
  return a;
}

/// "h4" or "group:<monoid>", over Q unless a field is forced.
inline Bialgebra builtin_bialgebra(const std::string& name, Field f) {
  if (name == "h4") return sweedler_h4(f);
  if (name.rfind("group:", 0) == 0) return group_bialgebra(monoid_from_spec(name.substr(6)), f);
  throw Error("UnknownBuiltin", name);
}

/// "k", "matrix:n" or any builtin bialgebra name.
inline FinDimAlgebra builtin_algebra(const std::string& name, Field f) {
  if (name == "k") return ground_algebra(f);
  if (name.rfind("matrix:", 0) == 0) {
    const std::string arg = name.substr(7);
    if (arg.empty() || arg.size() > 2 || !std::all_of(arg.begin(), arg.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw Error("UnknownBuiltin", name);
    }
    return matrix_algebra(std::stoul(arg), f);
  }
  return builtin_bialgebra(name, f).H;
}

inline FinDimAlgebra parse_algebra(const json& j, const std::string& path = "",
                                   std::optional<Field> override_field = std::nullopt) {
  if (j.is_string()) {
    try {
      return builtin_algebra(j.get<std::string>(), override_field.value_or(Field::rationals()));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Input) throw;
      detail::bad(path, e.what());
    }
  }
  detail::check_schema(j, path);
  const Field f = parse_field(j, path, override_field);
  const std::size_t n = detail::count(detail::member(j, "dim", path), path + "/dim");
  std::vector<std::string> basis;
  if (auto it = j.find("basis"); it != j.end()) {
    if (!it->is_array()) detail::bad(path + "/basis", "expected an array of labels");
    for (std::size_t i = 0; i < it->size(); ++i) basis.push_back(detail::str((*it)[i], path + "/basis/" + std::to_string(i)));
  } else {
    for (std::size_t i = 0; i < n; ++i) basis.push_back("e" + std::to_string(i));
  }
  if (basis.size() != n) detail::bad(path + "/basis", "basis length differs from dim");
  std::vector<SparseVec> table(n * n);
  const json& c = detail::member(j, "constants", path);
  if (!c.is_object()) detail::bad(path + "/constants", "expected an object");
  auto index = [&](const std::string& s, const std::string& p) {
    if (s.empty() || s.size() > 6 || !std::all_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
      detail::bad(p, "expected a basis index");
    }
    const std::size_t k = std::stoul(s);
    if (k >= n) detail::bad(p, "basis index out of range");
    return k;
  };
  for (const auto& [key, val] : c.items()) {
    const std::string p = path + "/constants/" + key;
    auto [is, js] = detail::split_key(key, p);
    const std::size_t i = index(is, p), jj = index(js, p);
    if (!val.is_object()) detail::bad(p, "expected an object of coefficients");
    for (const auto& [ks, coeff] : val.items()) table[i * n + jj].push_back({index(ks, p + "/" + ks), parse_scalar(coeff, f, p + "/" + ks)});
  }
  Vec unit = parse_vec(detail::member(j, "unit", path), f, n, path + "/unit");
  return detail::located(path, [&] { return validate_algebra(f, std::move(basis), std::move(table), std::move(unit)); });
}

inline json to_json(const FinDimAlgebra& a) {
  json c = json::object();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const auto& p = a.product(i, j);
      if (p.empty()) continue;
      json entry = json::object();
      for (const auto& [k, s] : p) entry[std::to_string(k)] = s.to_string();
      c[std::to_string(i) + "," + std::to_string(j)] = entry;
    }
  return {{"schema", schema_version}, {"field", a.field().to_string()}, {"dim", a.dim()},
          {"basis", a.labels()}, {"constants", c}, {"unit", to_json(a.unit())}};
}

/// Algebra fields plus "comult" (row i = Δ(e_i)) and "counit" (one row).
inline Bialgebra parse_bialgebra(const json& j, const std::string& path = "",
                                 std::optional<Field> override_field = std::nullopt) {
  if (j.is_string()) {
    try {
      return builtin_bialgebra(j.get<std::string>(), override_field.value_or(Field::rationals()));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Input) throw;
      detail::bad(path, e.what());
    }
  }
  auto h = parse_algebra(j, path, override_field);
  const Field f = h.field();
  const std::size_t n = h.dim();
  Matrix comult = parse_matrix(detail::member(j, "comult", path), f, n, n * n, path + "/comult").transpose();
  const json& cu = detail::member(j, "counit", path);
  Matrix counit = (cu.is_array() && !cu.empty() && cu[0].is_array())
                      ? parse_matrix(cu, f, 1, n, path + "/counit")
                      : Matrix::from_rows(f, n, {parse_vec(cu, f, n, path + "/counit")});
  return detail::located(path, [&] { return validate_bialgebra(std::move(h), std::move(comult), std::move(counit)); });
}

inline json to_json(const Bialgebra& b) {
  json j = to_json(b.H);
  j["comult"] = to_json(b.comult.transpose());
  j["counit"] = to_json(b.counit);
  return j;
}

struct PCAInput {
  FinDimAlgebra A;
  Bialgebra H;
  LinMap coaction;
};

/// {"algebra": ..., "bialgebra": ..., "coaction": rows of the (dim A·dim H) × dim A matrix}.
/// Shapes are checked here; the comodule-algebra axioms are left to verify_algebraic_pca.
inline PCAInput parse_pca_input(const json& j, const std::string& path = "",
                                std::optional<Field> override_field = std::nullopt) {
  detail::check_schema(j, path);
  auto a = parse_algebra(detail::member(j, "algebra", path), path + "/algebra", override_field);
  auto h = parse_bialgebra(detail::member(j, "bialgebra", path), path + "/bialgebra", override_field);
  if (!(a.field() == h.field())) detail::bad(path, "algebra and bialgebra live over different fields");
  Matrix coaction = parse_matrix(detail::member(j, "coaction", path), a.field(), a.dim() * h.dim(), a.dim(), path + "/coaction");
  return {std::move(a), std::move(h), std::move(coaction)};
}

inline AlgebraicPCA parse_pca(const json& j, const std::string& path = "",
                              std::optional<Field> override_field = std::nullopt) {
  auto in = parse_pca_input(j, path, override_field);
  return verify_algebraic_pca(std::move(in.A), std::move(in.H), std::move(in.coaction));
}

inline json pca_to_json(const FinDimAlgebra& a, const Bialgebra& h, const LinMap& coaction) {
  json ja = to_json(a), jh = to_json(h);
  ja.erase("schema");
  jh.erase("schema");
  return {{"schema", schema_version}, {"algebra", ja}, {"bialgebra", jh}, {"coaction", to_json(coaction)}};
}

inline json to_json(const AlgebraicPCA& p) { return pca_to_json(p.A, p.H, p.coaction); }

}  // namespace globalize::io
