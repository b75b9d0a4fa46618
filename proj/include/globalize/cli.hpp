#pragma once

// The `globalize` command line: argument parsing, pipelines, reports.
//
// Exit codes: 0 every verdict passed, 1 some verdict failed, 2 input error
// (malformed JSON, schema violation, cap exceeded), 3 library defect.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "globalize/error.hpp"
#include "globalize/exact.hpp"
#include "globalize/fintop.hpp"
#include "globalize/fixtures.hpp"
#include "globalize/io.hpp"
#include "globalize/pca.hpp"
#include "globalize/report.hpp"
#include "globalize/setact.hpp"
#include "globalize/topact.hpp"

namespace globalize::cli {

using nlohmann::json;

enum ExitCode : int { Ok = 0, Failed = 1, InputError = 2, Defect = 3 };

struct Options {
  std::string format = "json";
  std::string report_path;
  std::optional<std::uint64_t> seed;
  std::string field;
  bool timing = false;

  std::string input;
  std::string fixture_name;
  std::string gl2_target;
  bool explain = false;
  bool envelope = false;
  bool compare = false;
  bool dump_matrices = false;
  std::string bialgebra;
  std::string monoid;

  std::string top_op;
  std::vector<std::string> top_files;
  std::string points;
  std::string map;
  std::size_t enumerate_n = 0;

  std::string fixtures_op;
  std::string fixtures_arg;
};

namespace detail {

/// Reads the positional file, or the catalogued fixture when --fixture is set.
inline json load_input(const Options& o) {
  if (!o.fixture_name.empty() && !o.input.empty()) throw Error("BadArguments", "give either a file or --fixture, not both");
  if (o.fixture_name.empty() && o.input.empty()) throw Error("BadArguments", "missing input file (or --fixture <name>)");
  json in = o.fixture_name.empty() ? io::read_file(o.input) : fixture_or_family(o.fixture_name);
  if (!o.monoid.empty()) {
    if (!in.is_object()) throw Error("SchemaViolation", "expected an object at /");
    in["monoid"] = o.monoid;
  }
  return in;
}

/// A file path, or "fixture:<name>".
inline json load_named(const std::string& ref) {
  if (ref.rfind("fixture:", 0) == 0) return fixture(ref.substr(8));
  return io::read_file(ref);
}

inline std::optional<Field> field_override(const Options& o) {
  if (o.field.empty()) return std::nullopt;
  return Field::parse(o.field);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

inline json labelled_set(OpenSet s, const std::vector<std::string>& labels) {
  json a = json::array();
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (contains(s, i)) a.push_back(labels[i]);
  return a;
}

inline json labelled_opens(const FinTopology& t, const std::vector<std::string>& labels) {
  json a = json::array();
  for (auto u : t.opens()) a.push_back(labelled_set(u, labels));
  return a;
}

inline std::vector<std::string> domain_labels(const PartialActionDatum& d) {
  std::vector<std::string> out;
  for (auto p : d.domain()) out.push_back(d.pair_label(p));
  return out;
}

inline json global_action_json(const GlobalAction& g) {
  json act = json::object();
  for (std::size_t y = 0; y < g.size(); ++y) {
    json row = json::object();
    for (std::size_t m = 0; m < g.monoid().size(); ++m) row[g.monoid().label(m)] = g.carrier()[g.apply(y, m)];
    act[g.carrier()[y]] = row;
  }
  return act;
}

inline json globalization_json(const PartialActionDatum& d, const GlobalizationResult& r) {
  const auto& y = r.global;
  json classes = json::array();
  for (std::size_t c = 0; c < r.classes.size(); ++c) {
    json pairs = json::array();
    for (auto p : r.classes[c]) pairs.push_back(d.pair_label(p));
    classes.push_back({{"label", y.carrier()[c]}, {"pairs", pairs}});
  }
  json eps = json::object();
  for (std::size_t x = 0; x < d.size(); ++x) eps[d.carrier()[x]] = y.carrier()[r.epsilon[x]];
  return {{"Y", y.carrier()}, {"classes", classes}, {"action", global_action_json(y)}, {"epsilon", eps}};
}

// ---------------------------------------------------------------- pipelines

inline void set_action(const Options& o, RunReport& rep) {
  const json in = load_input(o);
  rep.input_digest = io::digest(in);
  const auto d = io::parse_set_action(in);
  const auto v = verify_partial_action(d);
  rep.add("partial_action", v);
  rep.results["sizes"] = {{"X", d.size()}, {"M", d.monoid().size()}, {"D", d.domain().size()}};
  if (!v) return;
  const auto g = globalize_set(d);
  rep.results["sizes"]["Y"] = g.global.size();
  rep.results["globalization"] = globalization_json(d, g);
  rep.add("GL1_pullback", check_GL1_pullback(d, g));
  rep.add("kappa_factorization", check_kappa_factorization(d, g));
  if (!o.gl2_target.empty()) {
    const auto z = io::parse_global_action(load_named(o.gl2_target), "/check-gl2");
    const auto u = check_GL2_universal(d, g, z);
    rep.add("GL2_universal", u.verdict);
    rep.results["gl2"] = {{"Z", z.size()}, {"global_homs", u.global_homs}, {"partial_homs", u.partial_homs}};
  }
}

inline void top_action(const Options& o, RunReport& rep) {
  const json in = load_input(o);
  rep.input_digest = io::digest(in);
  const auto m = io::parse_top_action(in);
  const auto v = verify_top_module(m);
  rep.add("geometric_partial_module", v);
  const auto dl = domain_labels(m.base);
  rep.results["sizes"] = {{"X", m.base.size()}, {"M", m.M.monoid.size()}, {"D", dl.size()}};
  if (!v) return;
  const auto tpa = is_topological_partial_action(m);
  rep.results["topological_partial_action"] = tpa.value;
  const auto r = globalize_top(m);
  rep.results["sizes"]["Y"] = r.set.global.size();
  rep.results["globalization"] = globalization_json(m.base, r.set);
  rep.results["tY"] = labelled_opens(r.tY, r.set.global.carrier());
  if (!r.globalizable) {
    const std::string where = r.witness_in_tD ? "open in tD but not in the initial topology"
                                              : "open in the initial topology but not in tD";
    rep.add("globalizable", false, r.witness_label + " " + where);
    if (o.explain) {
      rep.results["explain"] = {{"witness", r.witness_label},
                                {"witness_in_tD", r.witness_in_tD},
                                {"tD", labelled_opens(m.tD, dl)},
                                {"initial", labelled_opens(r.initial, dl)}};
    }
    return;
  }
  rep.add("globalizable", true);
  const auto e = check_epsilon_open_embedding(m, r);
  rep.results["epsilon_open_embedding"] = e.open_embedding;
  if (tpa.value) {
    rep.add("epsilon_pullback_identity", e.identity_holds, "κ⁻¹(ε(V)) differs from π(ρ⁻¹(V)) for some open V");
  } else {
    rep.results["epsilon_pullback_identity"] = e.identity_holds;
  }
  rep.add("epsilon_open_iff_topological", e.open_embedding == tpa.value,
          "ε open embedding: " + std::string(e.open_embedding ? "yes" : "no") +
              ", topological partial action: " + (tpa.value ? "yes" : "no"));
}

inline json subspace_json(const Subspace& s) {
  json a = json::array();
  for (const auto& b : s.basis()) a.push_back(io::to_json(b));
  return a;
}

inline void pca(const Options& o, RunReport& rep) {
  const auto field = field_override(o);
  if (o.input.empty() && o.fixture_name.empty() && !o.bialgebra.empty()) {
    // bialgebra check only
    rep.input_digest = io::digest(json(o.bialgebra));
    const auto h = io::parse_bialgebra(json(o.bialgebra), "/bialgebra", field);
    rep.add("bialgebra", true);
    rep.results["dimH"] = h.dim();
    rep.results["field"] = h.field().to_string();
    if (o.dump_matrices) rep.results["matrices"] = {{"comult", io::to_json(h.comult)}, {"counit", io::to_json(h.counit)}};
    return;
  }
  json in = load_input(o);
  if (!o.bialgebra.empty()) in["bialgebra"] = o.bialgebra;
  rep.input_digest = io::digest(in);
  auto raw = io::parse_pca_input(in, "", field);
  rep.results["field"] = raw.A.field().to_string();
  rep.results["dimA"] = raw.A.dim();
  rep.results["dimH"] = raw.H.dim();
  std::optional<AlgebraicPCA> p;
  try {
    p = verify_algebraic_pca(std::move(raw.A), std::move(raw.H), std::move(raw.coaction));
    rep.add("partial_comodule_algebra", true);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Internal) throw;
    rep.add("partial_comodule_algebra", false, e.code() + ": " + e.witness());
    return;
  }
  const auto g = globalize_pca(*p);
  rep.add("pushout", g.pushout);
  rep.results["dimIdeal"] = g.geo.ideal.closure.dim();
  rep.results["dimAbulletH"] = g.geo.AbulletH.algebra.dim();
  rep.results["dimY"] = g.Y.dim();
  json mats = json::object();
  if (o.dump_matrices) {
    mats["coaction"] = io::to_json(p->coaction);
    mats["e_prime"] = io::to_json(g.geo.e_prime);
    mats["Y"] = subspace_json(g.Y);
    mats["epsilonA"] = io::to_json(g.epsilonA);
    mats["kappa"] = io::to_json(g.kappa);
    mats["vartheta"] = io::to_json(g.vartheta);
  }
  if (o.envelope || o.compare) {
    const auto env = enveloping_coaction(*p);
    rep.add("envelope_axioms", true);
    rep.results["dimB"] = env.B.dim();
    if (o.dump_matrices) {
      mats["B"] = subspace_json(env.B);
      mats["theta"] = io::to_json(env.theta);
      mats["p"] = io::to_json(env.p);
    }
    if (o.compare) {
      const auto c = compare_envelope_globalization(*p, g, env);
      for (const auto& [name, v] : c.checks) rep.add(name, v);
      rep.results["strict"] = c.strict;
      if (o.dump_matrices) {
        mats["varkappa"] = io::to_json(c.varkappa);
        mats["j"] = io::to_json(c.j);
      }
    }
  }
  if (o.dump_matrices) rep.results["matrices"] = mats;
}

inline FinTopology read_topology(const std::string& ref, std::vector<std::string>& points) {
  const json j = load_named(ref);
  points = io::detail::labels(io::detail::member(j, "points", ""), "/points");
  return io::parse_topology(j, points);
}

/// "a=x,b=y" into indices, targets interned in order of first appearance
/// unless `targets` is already populated.
inline std::vector<std::size_t> parse_map(const std::string& spec, const std::vector<std::string>& src,
                                          std::vector<std::string>& targets, bool intern) {
  std::vector<std::size_t> f(src.size(), static_cast<std::size_t>(-1));
  for (const auto& item : split(spec, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw Error("BadArguments", "--map entries look like a=x, got '" + item + "'");
    const auto a = std::find(src.begin(), src.end(), item.substr(0, eq));
    if (a == src.end()) throw Error("BadArguments", "--map: unknown source point '" + item.substr(0, eq) + "'");
    const std::string t = item.substr(eq + 1);
    auto b = std::find(targets.begin(), targets.end(), t);
    if (b == targets.end()) {
      if (!intern) throw Error("BadArguments", "--map: unknown target point '" + t + "'");
      targets.push_back(t);
      b = targets.end() - 1;
    }
    f[static_cast<std::size_t>(a - src.begin())] = static_cast<std::size_t>(b - targets.begin());
  }
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i] == static_cast<std::size_t>(-1)) throw Error("BadArguments", "--map: no image for '" + src[i] + "'");
  return f;
}

inline void top_util(Options o, RunReport& rep) {
  if (o.top_op == "util") {
    // "top util <op> ..." is the long spelling of "top <op> ..."
    if (o.top_files.empty()) throw Error("BadArguments", "top util needs an operation");
    o.top_op = o.top_files.front();
    o.top_files.erase(o.top_files.begin());
  }
  const auto need = [&](std::size_t k) {
    if (o.top_files.size() != k) throw Error("BadArguments", "top " + o.top_op + " takes " + std::to_string(k) + " file(s)");
  };
  if (o.top_op == "enumerate") {
    rep.input_digest = io::digest(json(o.enumerate_n));
    std::vector<std::string> pts;
    for (std::size_t i = 0; i < o.enumerate_n; ++i) pts.push_back(std::to_string(i));
    const auto all = all_topologies(o.enumerate_n);
    json list = json::array();
    for (const auto& t : all) list.push_back(labelled_opens(t, pts));
    rep.results["count"] = all.size();
    rep.results["topologies"] = list;
    return;
  }
  std::vector<std::string> p1, p2;
  need(o.top_op == "product" || o.top_op == "continuous" || o.top_op == "open-embedding" ? 2 : 1);
  const FinTopology t1 = read_topology(o.top_files[0], p1);
  json digest_in = json::array({load_named(o.top_files[0])});
  if (o.top_files.size() > 1) digest_in.push_back(load_named(o.top_files[1]));
  digest_in.push_back(o.points);
  digest_in.push_back(o.map);
  rep.input_digest = io::digest(digest_in);
  rep.results["points"] = p1;
  if (o.top_op == "validate") {
    rep.add("topology", true);
    rep.results["opens"] = t1.opens().size();
  } else if (o.top_op == "hausdorff") {
    rep.add("hausdorff", is_hausdorff(t1), "two points without disjoint neighbourhoods");
  } else if (o.top_op == "product") {
    const FinTopology t2 = read_topology(o.top_files[1], p2);
    std::vector<std::string> pts;
    for (const auto& a : p1)
      for (const auto& b : p2) pts.push_back("(" + a + ";" + b + ")");
    const auto t = product_topology(t1, t2);
    rep.results["product"] = {{"points", pts}, {"opens", labelled_opens(t, pts)}};
  } else if (o.top_op == "subspace") {
    std::vector<std::size_t> idx;
    std::vector<std::string> pts;
    for (const auto& s : split(o.points, ',')) {
      const auto it = std::find(p1.begin(), p1.end(), s);
      if (it == p1.end()) throw Error("BadArguments", "--points: unknown point '" + s + "'");
      idx.push_back(static_cast<std::size_t>(it - p1.begin()));
      pts.push_back(s);
    }
    const auto t = subspace_topology(t1, idx);
    rep.results["subspace"] = {{"points", pts}, {"opens", labelled_opens(t, pts)}};
  } else if (o.top_op == "quotient") {
    std::vector<std::string> targets;
    const auto q = parse_map(o.map, p1, targets, true);
    const auto t = quotient_topology(t1, q, targets.size());
    rep.results["quotient"] = {{"points", targets}, {"opens", labelled_opens(t, targets)}};
  } else if (o.top_op == "continuous" || o.top_op == "open-embedding") {
    const FinTopology t2 = read_topology(o.top_files[1], p2);
    const auto f = parse_map(o.map, p1, p2, false);
    if (o.top_op == "continuous") {
      const auto w = continuity_witness(f, t1, t2);
      rep.add("continuous", !w, w ? "preimage of " + labelled_set(*w, p2).dump() + " is not open" : "");
    } else {
      rep.add("open_embedding", is_open_embedding(f, t1, t2), "not an injective open continuous map onto an open image");
    }
  } else {
    throw Error("BadArguments", "unknown top operation '" + o.top_op + "'");
  }
}

inline int fixtures_cmd(const Options& o, std::ostream& out) {
  if (o.fixtures_op == "list") {
    for (const auto& f : fixture_catalog()) out << f.name << "\t" << f.kind << "\t" << f.description << "\n";
    return Ok;
  }
  if (o.fixtures_op == "show") {
    out << fixture_or_family(o.fixtures_arg).dump(2) << "\n";
    return Ok;
  }
  if (o.fixtures_op == "write") {
    const std::filesystem::path dir = o.fixtures_arg.empty() ? "." : o.fixtures_arg;
    std::filesystem::create_directories(dir);
    for (const auto& f : fixture_catalog()) {
      std::ofstream file(dir / fixture_filename(f.name));
      file << fixture(f.name).dump(2) << "\n";
      out << (dir / fixture_filename(f.name)).string() << "\n";
    }
    return Ok;
  }
  throw Error("BadArguments", "fixtures takes list, show <name> or write <dir>");
}

inline void emit(const RunReport& rep, const Options& o, std::ostream& out) {
  const auto text = emit_report(rep, o.format == "text" ? ReportFormat::Text : ReportFormat::Json);
  out << text;
  if (!o.report_path.empty()) {
    std::ofstream file(o.report_path, std::ios::binary);
    if (!file) throw Error("CannotWriteReport", o.report_path);
    file << text;
  }
}

inline void emit_error(const Error& e, const Options& o, std::ostream& out, std::ostream& err) {
  err << "error: " << e.what() << "\n";
  if (o.format == "json") {
    const char* kind = e.kind() == ErrorKind::Internal ? "internal" : e.kind() == ErrorKind::Cap ? "cap" : e.kind() == ErrorKind::Math ? "math" : "input";
    out << json{{"schema", 1}, {"error", {{"code", e.code()}, {"witness", e.witness()}, {"kind", kind}}}}.dump(2) << "\n";
  }
}

}  // namespace detail

/// Runs one command; args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Globalization of partial actions and partial comodule algebras", "globalize"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "globalize 1.0");
  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--report", o.report_path, "also write the report to this path");
    sub->add_option("--seed", o.seed, "seed recorded in the report");
    sub->add_flag("--timing", o.timing, "add wall-clock time to the report");
  };
  auto* set = app.add_subcommand("set-action", "verify and globalize a partial monoid action on a finite set");
  set->add_option("file", o.input, "input JSON");
  set->add_option("--fixture", o.fixture_name, "use a catalogued fixture instead of a file");
  set->add_option("--monoid", o.monoid, "builtin monoid replacing the input's: cyclic:n, sym:n, bicyclic:n, trivial");
  set->add_option("--check-gl2", o.gl2_target, "global action Z (file or fixture:<name>) for the universal property");
  common(set);
  auto* top = app.add_subcommand("top-action", "verify and globalize a finite topological partial module");
  top->add_option("file", o.input, "input JSON");
  top->add_option("--fixture", o.fixture_name, "use a catalogued fixture instead of a file");
  top->add_option("--monoid", o.monoid, "builtin monoid replacing the input's");
  top->add_flag("--explain", o.explain, "include tD, the initial topology and the witness");
  common(top);
  auto* pc = app.add_subcommand("pca", "verify and globalize a partial comodule algebra");
  pc->add_option("file", o.input, "input JSON");
  pc->add_option("--fixture", o.fixture_name, "catalogued fixture, or ab2:alpha=<q>");
  pc->add_option("--field", o.field, "Q or Fp:<p>; overrides the input's field");
  pc->add_option("--bialgebra", o.bialgebra, "builtin bialgebra: h4, group:<monoid>");
  pc->add_flag("--envelope", o.envelope, "compute the enveloping coaction");
  pc->add_flag("--compare", o.compare, "compare the envelope with the globalization");
  pc->add_flag("--dump-matrices", o.dump_matrices, "include the structure maps in the report");
  common(pc);
  auto* tu = app.add_subcommand("top", "finite topology utilities");
  tu->add_option("op", o.top_op, "validate, hausdorff, product, subspace, quotient, continuous, open-embedding, enumerate")
      ->required();
  tu->add_option("files", o.top_files, "topology files {points, opens}");
  tu->add_option("--points", o.points, "comma-separated points for subspace");
  tu->add_option("--map", o.map, "a=x,b=y for quotient, continuous, open-embedding");
  tu->add_option("--n", o.enumerate_n, "carrier size for enumerate (at most 4)");
  common(tu);
  auto* fx = app.add_subcommand("fixtures", "list, show or write the fixture catalog");
  fx->add_option("op", o.fixtures_op, "list, show or write")->required();
  fx->add_option("name", o.fixtures_arg, "fixture name (show) or directory (write)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? Ok : InputError;
  }

  RunReport rep;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (fx->parsed()) return detail::fixtures_cmd(o, out);
    if (set->parsed()) {
      rep.pipeline = "set-action";
      detail::set_action(o, rep);
    } else if (top->parsed()) {
      rep.pipeline = "top-action";
      detail::top_action(o, rep);
    } else if (pc->parsed()) {
      rep.pipeline = "pca";
      detail::pca(o, rep);
    } else {
      rep.pipeline = "top";
      detail::top_util(o, rep);
    }
  } catch (const Error& e) {
    detail::emit_error(e, o, out, err);
    if (e.kind() == ErrorKind::Internal) return Defect;
    if (e.kind() == ErrorKind::Math) return Failed;
    return InputError;
  } catch (const std::exception& e) {
    detail::emit_error(Error("InternalError", e.what(), ErrorKind::Internal), o, out, err);
    return Defect;
  }
  if (o.seed) rep.results["seed"] = *o.seed;
  if (o.timing) {
    rep.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  try {
    detail::emit(rep, o, out);
  } catch (const Error& e) {
    detail::emit_error(e, o, out, err);
    return InputError;
  }
  return rep.all_passed() ? Ok : Failed;
}

}  // namespace globalize::cli
