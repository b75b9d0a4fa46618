#pragma once

// Named canonical inputs. The committed files under fixtures/ are
// exactly `fixture(name).dump(2)`; `fixture_filename` maps names to files.

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "globalize/bialgebra.hpp"
#include "globalize/error.hpp"
#include "globalize/exact.hpp"
#include "globalize/io.hpp"
#include "globalize/monoid.hpp"
#include "globalize/pca.hpp"
#include "globalize/setact.hpp"
#include "globalize/topact.hpp"

namespace globalize {

struct FixtureInfo {
  std::string name;
  std::string kind;  // set-action, global-action, top-action, monoid, pca
  std::string description;
};

inline const std::vector<FixtureInfo>& fixture_catalog() {
  static const std::vector<FixtureInfo> catalog = {
      {"z2part", "set-action", "Z/2 = {e,g} on X = {1,2}, X_g = {1}, g fixes 1"},
      {"z2part-broken", "set-action", "z2part with g sending 1 to 2; violates the composition axiom"},
      {"z4-subset", "set-action", "regular Z/4 action restricted to {e,g}"},
      {"sym3-pair", "set-action", "S3 permuting {1,2,3}, restricted to {1,2}"},
      {"z2-regular", "global-action", "Z/2 acting on itself by right multiplication"},
      {"point", "global-action", "Z/2 acting on one point"},
      {"counter", "top-action", "X = {a,b} indiscrete, trivial M, tD discrete: geometric but not globalizable"},
      {"counter-rho-broken", "top-action", "Z/2 swapping a and b over a Sierpinski X; rho is not continuous"},
      {"finite-ggpm", "top-action", "row of a 4-point Z/2-space that is not open: globalizable, not a topological partial action"},
      {"sierpinski-z2", "top-action", "open Sierpinski subspace of two swapped copies, discrete Z/2"},
      {"monoid-nonassoc", "monoid", "three-element table with identity that is not associative"},
      {"ab1:z2", "pca", "t·kG inside kG for G = N = Z/2"},
      {"ab1:sym3/alt3", "pca", "t·kS3 inside kS3 with N = A3"},
      {"ab2:alpha=0", "pca", "k coacted on by f = (1+g)/2 in H4"},
      {"ab2:alpha=1", "pca", "k coacted on by f = (1+g+gx)/2 in H4"},
      {"global:h4", "pca", "H4 coacting on itself by its coproduct"},
      {"global:z2", "pca", "kZ/2 coacting on itself"},
      {"global:sym3", "pca", "kS3 coacting on itself"},
      {"global-trivial:h4", "pca", "k with the trivial H4 coaction 1 -> 1⊗1"},
      {"pca-noncounital", "pca", "ab2:alpha=0 with the coaction doubled"},
  };
  return catalog;
}

inline const FixtureInfo& fixture_info(const std::string& name) {
  for (const auto& f : fixture_catalog())
    if (f.name == name) return f;
  throw Error("UnknownFixture", name);
}

/// "ab1:sym3/alt3" -> "ab1-sym3-alt3.json".
inline std::string fixture_filename(const std::string& name) {
  std::string out = name;
  for (auto& c : out)
    if (c == ':' || c == '/' || c == '=') c = '-';
  return out + ".json";
}

namespace detail {

using nlohmann::json;

inline json opens(std::initializer_list<std::vector<std::string>> sets) {
  json a = json::array();
  for (const auto& s : sets) a.push_back(s);
  return a;
}

inline json pairs(std::initializer_list<std::pair<std::string, std::string>> ps) {
  json a = json::array();
  for (const auto& [x, m] : ps) a.push_back(json::array({x, m}));
  return a;
}

inline json set_fixture(const std::string& name) {
  if (name == "z2part" || name == "z2part-broken") {
    return {{"schema", 1},
            {"monoid", "cyclic:2"},
            {"X", {"1", "2"}},
            {"domain", pairs({{"1", "e"}, {"2", "e"}, {"1", "g"}})},
            {"rho", {{"1,e", "1"}, {"2,e", "2"}, {"1,g", name == "z2part" ? "1" : "2"}}}};
  }
  if (name == "z4-subset") return io::to_json(induce_from_global(regular_action(cyclic(4)), {0, 1}));
  if (name == "sym3-pair") {
    const FiniteMonoid s3 = symmetric(3);
    std::vector<std::size_t> act;
    // right action y·s = s⁻¹(y): the position of y in the one-line label
    for (std::size_t y = 0; y < 3; ++y)
      for (std::size_t m = 0; m < s3.size(); ++m) act.push_back(s3.label(m).find(static_cast<char>('1' + y)));
    return io::to_json(induce_from_global(GlobalAction(s3, {"1", "2", "3"}, act), {0, 1}));
  }
  throw Error("UnknownFixture", name);
}

inline json top_fixture(const std::string& name) {
  if (name == "counter") {
    return {{"schema", 1},
            {"monoid", "trivial"},
            {"X", {"a", "b"}},
            {"domain", pairs({{"a", "e"}, {"b", "e"}})},
            {"rho", {{"a,e", "a"}, {"b,e", "b"}}},
            {"tX", {{"opens", opens({{}, {"a", "b"}})}}},
            {"tM", {{"opens", opens({{}, {"e"}})}}},
            {"tD", {{"opens", json::array({pairs({}), pairs({{"a", "e"}}), pairs({{"b", "e"}}), pairs({{"a", "e"}, {"b", "e"}})})}}}};
  }
  if (name == "counter-rho-broken") {
    return {{"schema", 1},
            {"monoid", "cyclic:2"},
            {"X", {"a", "b"}},
            {"domain", pairs({{"a", "e"}, {"b", "e"}, {"a", "g"}, {"b", "g"}})},
            {"rho", {{"a,e", "a"}, {"b,e", "b"}, {"a,g", "b"}, {"b,g", "a"}}},
            {"tX", {{"opens", opens({{}, {"a"}, {"a", "b"}})}}},
            {"tM", {{"opens", opens({{}, {"e", "g"}})}}}};
  }
  if (name == "finite-ggpm") {
    // points "ij", g flips j; opens are unions of the columns {i0,i1}
    const FiniteMonoid z2 = cyclic(2);
    GlobalAction y(z2, {"00", "01", "10", "11"}, {0, 1, 1, 0, 2, 3, 3, 2});
    const FinTopology ty = generate_topology(4, {0b0011, 0b1100});
    const TopMonoid m = make_top_monoid(z2, indiscrete(2));
    return io::to_json(induce_from_global_top(y, ty, m, {0, 2}), false);
  }
  if (name == "sierpinski-z2") {
    const FiniteMonoid z2 = cyclic(2);
    GlobalAction y(z2, {"a0", "b0", "a1", "b1"}, {0, 2, 1, 3, 2, 0, 3, 1});
    const FinTopology ty = generate_topology(4, {0b0001, 0b0011, 0b0100, 0b1100});
    const TopMonoid m = make_top_monoid(z2, discrete(2));
    return io::to_json(induce_from_global_top(y, ty, m, {0, 1}), false);
  }
  throw Error("UnknownFixture", name);
}

inline json pca_fixture(const std::string& name) {
  const Field q = Field::rationals();
  if (name == "ab1:z2") {
    const FiniteMonoid z2 = cyclic(2);
    return io::to_json(ab1_fixture(z2, make_subgroup(z2, {0, 1}), q).pca);
  }
  if (name == "ab1:sym3/alt3") {
    const FiniteMonoid s3 = symmetric(3);
    return io::to_json(ab1_fixture(s3, make_subgroup(s3, {s3.index_of("123"), s3.index_of("231"), s3.index_of("312")}), q).pca);
  }
  if (name == "ab2:alpha=0") return io::to_json(ab2_fixture(Scalar(q, 0)));
  if (name == "ab2:alpha=1") return io::to_json(ab2_fixture(Scalar(q, 1)));
  if (name == "global:h4") return io::to_json(global_self_fixture(sweedler_h4(q)));
  if (name == "global:z2") return io::to_json(global_self_fixture(group_bialgebra(cyclic(2), q)));
  if (name == "global:sym3") return io::to_json(global_self_fixture(group_bialgebra(symmetric(3), q)));
  if (name == "global-trivial:h4") return io::to_json(global_trivial_fixture(sweedler_h4(q)));
  if (name == "pca-noncounital") {
    const auto p = ab2_fixture(Scalar(q, 0));
    LinMap doubled = p.coaction;
    for (std::size_t r = 0; r < doubled.rows(); ++r)
      for (std::size_t c = 0; c < doubled.cols(); ++c) doubled(r, c) = doubled(r, c) * Scalar(q, 2);
    return io::pca_to_json(p.A, p.H, doubled);
  }
  throw Error("UnknownFixture", name);
}

}  // namespace detail

/// The canonical input object for a catalogued fixture.
inline nlohmann::json fixture(const std::string& name) {
  const auto& info = fixture_info(name);
  if (info.kind == "set-action") return detail::set_fixture(name);
  if (info.kind == "global-action") {
    if (name == "z2-regular") return io::to_json(regular_action(cyclic(2)));
    return io::to_json(trivial_action(cyclic(2), {"*"}));
  }
  if (info.kind == "top-action") return detail::top_fixture(name);
  if (info.kind == "monoid") {
    return {{"schema", 1},
            {"elements", {"e", "a", "b"}},
            {"identity", "e"},
            {"table", {{"e,e", "e"}, {"e,a", "a"}, {"e,b", "b"}, {"a,e", "a"}, {"a,a", "b"}, {"a,b", "e"},
                       {"b,e", "b"}, {"b,a", "a"}, {"b,b", "a"}}}};
  }
  return detail::pca_fixture(name);
}

/// Catalogued fixtures plus the family "ab2:alpha=<scalar>".
inline nlohmann::json fixture_or_family(const std::string& name) {
  const std::string prefix = "ab2:alpha=";
  if (name.rfind(prefix, 0) == 0) {
    for (const auto& f : fixture_catalog())
      if (f.name == name) return fixture(name);
    const Field q = Field::rationals();
    try {
      return io::to_json(ab2_fixture(Scalar::parse(q, name.substr(prefix.size()))));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Input) throw;
      throw Error("UnknownFixture", name + " (" + e.what() + ")");
    }
  }
  return fixture(name);
}

}  // namespace globalize
