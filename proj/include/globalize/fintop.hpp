#pragma once

// Finite topological spaces with open sets stored as 64-bit masks.
//
// A topology is its canonically sorted list of opens. Generated topologies are
// built from the minimal open neighbourhood of each point; every open set is a
// union of these.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "globalize/error.hpp"

namespace globalize {

using OpenSet = std::uint64_t;

inline constexpr std::size_t max_points = 64;

inline OpenSet full_set(std::size_t n) { return n >= 64 ? ~OpenSet{0} : (OpenSet{1} << n) - 1; }
inline OpenSet singleton(std::size_t i) { return OpenSet{1} << i; }
inline bool contains(OpenSet s, std::size_t i) { return (s >> i) & 1U; }

inline std::string set_to_string(OpenSet s) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < 64; ++i) {
    if (!contains(s, i)) continue;
    out += (first ? "" : ",") + std::to_string(i);
    first = false;
  }
  return out + "}";
}

class FinTopology {
 public:
  FinTopology() = default;

  std::size_t size() const noexcept { return n_; }
  const std::vector<OpenSet>& opens() const noexcept { return opens_; }
  OpenSet carrier() const { return full_set(n_); }
  bool is_open(OpenSet s) const { return std::binary_search(opens_.begin(), opens_.end(), s); }
  /// Minimal open neighbourhood of each point.
  const std::vector<OpenSet>& neighborhoods() const noexcept { return nb_; }

  friend bool operator==(const FinTopology& a, const FinTopology& b) { return a.n_ == b.n_ && a.opens_ == b.opens_; }

  /// Builds from a family already known to be a topology; sorts and dedupes.
  static FinTopology trusted(std::size_t n, std::vector<OpenSet> opens) {
    std::sort(opens.begin(), opens.end());
    opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
    FinTopology t;
    t.n_ = n;
    t.opens_ = std::move(opens);
    t.nb_.assign(n, n >= 64 ? ~OpenSet{0} : (OpenSet{1} << n) - 1);
    for (auto u : t.opens_)
      for (OpenSet rest = u; rest; rest &= rest - 1) t.nb_[static_cast<std::size_t>(std::countr_zero(rest))] &= u;
    return t;
  }

 private:
  std::size_t n_ = 0;
  std::vector<OpenSet> opens_;
  std::vector<OpenSet> nb_;
};

inline void check_carrier(std::size_t n) {
  if (n > max_points) throw Error("CapExceeded", "carrier of " + std::to_string(n) + " points", ErrorKind::Cap);
}

/// Checks ∅, the carrier, and closure under pairwise ∪ and ∩.
inline FinTopology validate_topology(std::size_t n, std::vector<OpenSet> opens) {
  check_carrier(n);
  const OpenSet all = full_set(n);
  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
  for (auto u : opens)
    if (u & ~all) throw Error("BadIndex", set_to_string(u) + " is not a subset of the carrier");
  auto has = [&](OpenSet s) { return std::binary_search(opens.begin(), opens.end(), s); };
  if (!has(0)) throw Error("MissingEmptySet", "");
  if (!has(all)) throw Error("MissingCarrier", set_to_string(all));
  for (std::size_t i = 0; i < opens.size(); ++i)
    for (std::size_t j = i + 1; j < opens.size(); ++j) {
      if (!has(opens[i] | opens[j])) {
        throw Error("NotClosedUnderUnion", set_to_string(opens[i]) + " ∪ " + set_to_string(opens[j]));
      }
      if (!has(opens[i] & opens[j])) {
        throw Error("NotClosedUnderIntersection", set_to_string(opens[i]) + " ∩ " + set_to_string(opens[j]));
      }
    }
  return FinTopology::trusted(n, std::move(opens));
}

inline FinTopology discrete(std::size_t n) {
  check_carrier(n);
  if (n > 20) throw Error("CapExceeded", "discrete topology on more than 20 points", ErrorKind::Cap);
  std::vector<OpenSet> opens(std::size_t{1} << n);
  for (std::size_t i = 0; i < opens.size(); ++i) opens[i] = i;
  return FinTopology::trusted(n, std::move(opens));
}

inline FinTopology indiscrete(std::size_t n) {
  check_carrier(n);
  return FinTopology::trusted(n, {0, full_set(n)});
}

/// Minimal open neighbourhood of every point in the topology generated by `generators`.
inline std::vector<OpenSet> generated_neighborhoods(std::size_t n, const std::vector<OpenSet>& generators) {
  std::vector<OpenSet> nb(n, full_set(n));
  for (auto g : generators)
    for (OpenSet rest = g & full_set(n); rest; rest &= rest - 1) nb[static_cast<std::size_t>(std::countr_zero(rest))] &= g;
  return nb;
}

inline const std::vector<OpenSet>& neighborhoods(const FinTopology& t) { return t.neighborhoods(); }

/// All unions of the given neighbourhoods, i.e. the open sets they generate.
inline FinTopology topology_from_neighborhoods(std::size_t n, const std::vector<OpenSet>& nb) {
  if (n <= 8) {
    // small carriers: test every subset, which also yields them in sorted order
    std::vector<OpenSet> opens;
    for (OpenSet s = 0; s <= full_set(n); ++s) {
      bool open = true;
      for (std::size_t p = 0; p < n && open; ++p)
        if (contains(s, p) && (nb[p] & ~s)) open = false;
      if (open) opens.push_back(s);
    }
    return FinTopology::trusted(n, std::move(opens));
  }
  std::vector<OpenSet> opens{0};
  for (std::size_t p = 0; p < n; ++p) {
    const std::size_t k = opens.size();
    for (std::size_t i = 0; i < k; ++i) opens.push_back(opens[i] | nb[p]);
    std::sort(opens.begin(), opens.end());
    opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
  }
  if (n == 0) return FinTopology::trusted(0, {0});
  return FinTopology::trusted(n, std::move(opens));
}

/// Coarsest topology containing every generator.
inline FinTopology generate_topology(std::size_t n, const std::vector<OpenSet>& generators) {
  check_carrier(n);
  return topology_from_neighborhoods(n, generated_neighborhoods(n, generators));
}

inline OpenSet preimage(const std::vector<std::size_t>& f, OpenSet u) {
  OpenSet s = 0;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (contains(u, f[i])) s |= singleton(i);
  return s;
}

inline OpenSet image(const std::vector<std::size_t>& f, OpenSet s) {
  OpenSet u = 0;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (contains(s, i)) u |= singleton(f[i]);
  return u;
}

/// Product topology; the pair (i, j) is point i * |t2| + j.
inline FinTopology product_topology(const FinTopology& t1, const FinTopology& t2) {
  const std::size_t n1 = t1.size(), n2 = t2.size();
  check_carrier(n1 * n2);
  std::vector<OpenSet> boxes;
  for (auto u : t1.opens())
    for (auto v : t2.opens()) {
      OpenSet b = 0;
      for (std::size_t i = 0; i < n1; ++i)
        if (contains(u, i)) b |= v << (i * n2);
      boxes.push_back(b);
    }
  return generate_topology(n1 * n2, boxes);
}

/// Boxes of minimal neighbourhoods, a basis of the product topology (point i*n2 + j is (i, j)).
inline std::vector<OpenSet> product_basis(const FinTopology& t1, const FinTopology& t2) {
  const std::size_t n2 = t2.size();
  check_carrier(t1.size() * n2);
  const auto& nb1 = neighborhoods(t1);
  const auto& nb2 = neighborhoods(t2);
  std::vector<OpenSet> boxes;
  boxes.reserve(nb1.size() * n2);
  for (std::size_t i = 0; i < nb1.size(); ++i)
    for (std::size_t j = 0; j < n2; ++j) {
      OpenSet b = 0;
      for (std::size_t k = 0; k < nb1.size(); ++k)
        if (contains(nb1[i], k)) b |= nb2[j] << (k * n2);
      boxes.push_back(b);
    }
  return boxes;
}

/// Topology induced on `points` (point k of the result is points[k]).
inline FinTopology subspace_topology(const FinTopology& t, const std::vector<std::size_t>& points) {
  std::vector<OpenSet> opens;
  for (auto u : t.opens()) {
    OpenSet s = 0;
    for (std::size_t k = 0; k < points.size(); ++k)
      if (contains(u, points.at(k))) s |= singleton(k);
    opens.push_back(s);
  }
  return FinTopology::trusted(points.size(), std::move(opens));
}

/// Finest topology on [0, m) making the surjection q continuous.
inline FinTopology quotient_topology(const FinTopology& t, const std::vector<std::size_t>& q, std::size_t m) {
  check_carrier(m);
  if (q.size() != t.size()) throw Error("BadMap", "quotient map has wrong domain");
  OpenSet hit = 0;
  for (auto y : q) {
    if (y >= m) throw Error("BadMap", "quotient map leaves its codomain");
    hit |= singleton(y);
  }
  if (hit != full_set(m)) throw Error("NotSurjective", set_to_string(full_set(m) & ~hit) + " not hit");
  std::vector<OpenSet> opens;
  for (auto o : t.opens()) {
    const OpenSet u = image(q, o);
    if (preimage(q, u) == o) opens.push_back(u);
  }
  return FinTopology::trusted(m, std::move(opens));
}

struct MapInto {
  const FinTopology* target;
  std::vector<std::size_t> f;
};

/// Coarsest topology on n points making every map continuous.
inline FinTopology initial_topology(std::size_t n, const std::vector<MapInto>& maps) {
  std::vector<OpenSet> gens;
  for (const auto& m : maps) {
    if (m.f.size() != n) throw Error("BadMap", "map domain does not match the carrier");
    for (auto u : m.target->opens()) gens.push_back(preimage(m.f, u));
  }
  return generate_topology(n, gens);
}

inline bool is_continuous(const std::vector<std::size_t>& f, const FinTopology& src, const FinTopology& dst) {
  if (f.size() != src.size()) throw Error("BadMap", "map domain does not match the source");
  for (auto y : f)
    if (y >= dst.size()) throw Error("BadMap", "map leaves the target carrier");
  return std::all_of(dst.opens().begin(), dst.opens().end(),
                     [&](OpenSet u) { return src.is_open(preimage(f, u)); });
}

/// First open of dst whose preimage is not open, if any.
inline std::optional<OpenSet> continuity_witness(const std::vector<std::size_t>& f, const FinTopology& src,
                                                 const FinTopology& dst) {
  for (auto u : dst.opens())
    if (!src.is_open(preimage(f, u))) return u;
  return std::nullopt;
}

/// Continuity tested on a generating family of the target; the witness is a generator.
inline std::optional<OpenSet> continuity_witness(const std::vector<std::size_t>& f, const FinTopology& src,
                                                 const std::vector<OpenSet>& dst_generators) {
  for (auto u : dst_generators)
    if (!src.is_open(preimage(f, u))) return u;
  return std::nullopt;
}

/// Continuity from minimal neighbourhoods: f is continuous iff every N(s) maps
/// into N(f(s)). The witness is the first target neighbourhood that fails.
inline std::optional<OpenSet> continuity_witness_nb(const std::vector<std::size_t>& f, const std::vector<OpenSet>& src_nb,
                                                    const std::vector<OpenSet>& dst_nb) {
  for (std::size_t s = 0; s < f.size(); ++s) {
    const OpenSet target = dst_nb[f[s]];
    for (OpenSet rest = src_nb[s]; rest; rest &= rest - 1)
      if (!contains(target, f[static_cast<std::size_t>(std::countr_zero(rest))])) return target;
  }
  return std::nullopt;
}

/// Injective, continuous, open image, and src carries the topology pulled back along f.
inline bool is_open_embedding(const std::vector<std::size_t>& f, const FinTopology& src, const FinTopology& dst) {
  if (!is_continuous(f, src, dst)) return false;
  std::vector<std::size_t> sorted = f;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  if (!dst.is_open(image(f, src.carrier()))) return false;
  return initial_topology(src.size(), {{&dst, f}}) == src;
}

/// Separation axiom checked directly; a finite Hausdorff space must be discrete.
inline bool is_hausdorff(const FinTopology& t) {
  bool separated = true;
  for (std::size_t p = 0; p < t.size() && separated; ++p)
    for (std::size_t q = p + 1; q < t.size() && separated; ++q) {
      bool found = false;
      for (auto u : t.opens()) {
        if (!contains(u, p) || contains(u, q)) continue;
        for (auto v : t.opens())
          if (contains(v, q) && (u & v) == 0) found = true;
        if (found) break;
      }
      separated = found;
    }
  const bool is_discrete = t.size() < 64 && t.opens().size() == (std::size_t{1} << t.size());
  if (separated != is_discrete) detail::internal_error("HausdorffNotDiscrete", "finite separation check disagrees");
  return separated;
}

/// Every topology on n <= 4 points, in increasing order of their sorted open lists.
inline std::vector<FinTopology> all_topologies(std::size_t n) {
  if (n > 4) throw Error("CapExceeded", "topology enumeration is capped at 4 points", ErrorKind::Cap);
  const OpenSet all = full_set(n);
  std::vector<OpenSet> proper;
  for (OpenSet s = 1; s < all; ++s) proper.push_back(s);
  std::vector<FinTopology> out;
  const std::uint64_t families = std::uint64_t{1} << proper.size();
  for (std::uint64_t mask = 0; mask < families; ++mask) {
    std::vector<OpenSet> opens{0};
    for (std::size_t i = 0; i < proper.size(); ++i)
      if ((mask >> i) & 1U) opens.push_back(proper[i]);
    if (n > 0) opens.push_back(all);
    bool closed = true;
    auto has = [&](OpenSet s) { return std::find(opens.begin(), opens.end(), s) != opens.end(); };
    for (std::size_t i = 0; i < opens.size() && closed; ++i)
      for (std::size_t j = i + 1; j < opens.size() && closed; ++j)
        closed = has(opens[i] | opens[j]) && has(opens[i] & opens[j]);
    if (closed) out.push_back(FinTopology::trusted(n, std::move(opens)));
  }
  std::sort(out.begin(), out.end(), [](const FinTopology& a, const FinTopology& b) { return a.opens() < b.opens(); });
  return out;
}

}  // namespace globalize
