#include "wpgraph/wp.hpp"

#include <algorithm>

namespace wpgraph {

namespace {

void validate_tuple(const Graph& g, std::span<const VertexSet> tuple) {
  Bits used = 0;
  for (const VertexSet& a : tuple) {
    if (a.bits() & used) throw Error(errc::bad_tuple, "tuple sets overlap");
    if (!is_independent(g, a)) throw Error(errc::bad_tuple, "tuple set carries an edge");
    used |= a.bits();
  }
}

// Backtracking over maximum sets in ascending order; the first completed
// assignment is the lexicographically first one.
bool extension_rec(std::span<const VertexSet> tuple, const OmegaFamily& omega, std::size_t slot,
                   Bits used, std::vector<VertexSet>& acc) {
  if (slot == tuple.size()) return true;
  for (const VertexSet& s : omega.sets) {
    if (!tuple[slot].subset_of(s) || (s.bits() & used)) continue;
    acc[slot] = s;
    if (extension_rec(tuple, omega, slot + 1, used | s.bits(), acc)) return true;
  }
  return false;
}

std::optional<std::vector<VertexSet>> extension_search(std::span<const VertexSet> tuple,
                                                       const OmegaFamily& omega) {
  std::vector<VertexSet> acc(tuple.size());
  if (extension_rec(tuple, omega, 0, 0, acc)) return acc;
  return std::nullopt;
}

// Maximal independent sets are the maximal cliques of the complement;
// classic pivoted enumeration over bit rows. Callback returning false stops.
template <class F>
bool maximal_rec(std::span<const Bits> nonadj, Bits r, Bits p, Bits x, F& f) {
  if (p == 0 && x == 0) return f(VertexSet(r));
  int u = -1, best = -1;
  for (Bits b = p | x; b != 0; b &= b - 1) {
    const int v = std::countr_zero(b);
    const int c = std::popcount(p & nonadj[static_cast<std::size_t>(v)]);
    if (c > best) {
      best = c;
      u = v;
    }
  }
  Bits candidates = p & ~nonadj[static_cast<std::size_t>(u)];
  for (Bits b = candidates; b != 0; b &= b - 1) {
    const int v = std::countr_zero(b);
    const Bits nv = nonadj[static_cast<std::size_t>(v)];
    if (!maximal_rec(nonadj, r | bit(v), p & nv, x & nv, f)) return false;
    p &= ~bit(v);
    x |= bit(v);
  }
  return true;
}

template <class F>
void for_each_maximal_independent_set(const Graph& g, F&& f) {
  const int n = g.order();
  std::vector<Bits> nonadj(static_cast<std::size_t>(n));
  const Bits all = full_mask(n);
  for (int v = 0; v < n; ++v) nonadj[static_cast<std::size_t>(v)] = all & ~g.row(v) & ~bit(v);
  F& ref = f;
  maximal_rec(std::span<const Bits>(nonadj), 0, all, 0, ref);
}

}  // namespace

std::optional<std::vector<VertexSet>> disjoint_extension(const Graph& g,
                                                         std::span<const VertexSet> tuple,
                                                         const OmegaFamily& omega) {
  validate_tuple(g, tuple);
  return extension_search(tuple, omega);
}

WpWitness is_wp(const Graph& g, int p, const WpCaps& caps) {
  if (p < 1) throw Error(errc::bad_argument, "p must be at least 1");
  WpWitness out;
  if (g.order() > caps.definitional_n_cap) {
    out.status = WpStatus::cap_exceeded;
    return out;
  }
  const OmegaFamily omega = maximum_independent_sets(g);
  if (omega.sets.size() > caps.omega_cap) {
    out.status = WpStatus::cap_exceeded;
    return out;
  }
  if (g.order() == 0) {
    // Membership requires order at least p; with no vertices there is no
    // failing tuple to exhibit, the order requirement alone decides.
    out.status = WpStatus::non_member;
    return out;
  }

  const std::vector<VertexSet> inds = independent_sets(g);
  std::vector<char> extendable(inds.size(), 0);
  for (std::size_t i = 0; i < inds.size(); ++i)
    for (const VertexSet& s : omega.sets)
      if (inds[i].subset_of(s)) {
        extendable[i] = 1;
        break;
      }

  std::vector<std::size_t> chosen(static_cast<std::size_t>(p));
  std::vector<VertexSet> tuple(static_cast<std::size_t>(p));
  std::vector<VertexSet> cache;  // last successful extension; validates subset tuples for free

  // Checks the tuple currently in `tuple`; returns false on the first failure.
  auto check_current = [&]() -> bool {
    if (!cache.empty()) {
      bool covered = true;
      for (int i = 0; i < p; ++i)
        if (!tuple[static_cast<std::size_t>(i)].subset_of(cache[static_cast<std::size_t>(i)])) {
          covered = false;
          break;
        }
      if (covered) return true;
    }
    for (int i = 0; i < p; ++i)
      if (!extendable[chosen[static_cast<std::size_t>(i)]]) {
        out.failing_tuple = tuple;
        return false;
      }
    auto ext = extension_search(tuple, omega);
    if (!ext) {
      out.failing_tuple = tuple;
      return false;
    }
    cache = *ext;
    if (out.extension.empty()) out.extension = *ext;  // all-empty tuple comes first
    return true;
  };

  // Ordered tuples of pairwise disjoint independent sets, ascending by
  // concatenated bit patterns (the all-empty tuple first).
  auto scan = [&](auto&& self, int slot, Bits used) -> bool {
    if (slot == p) return check_current();
    for (std::size_t i = 0; i < inds.size(); ++i) {
      if (inds[i].bits() & used) continue;
      chosen[static_cast<std::size_t>(slot)] = i;
      tuple[static_cast<std::size_t>(slot)] = inds[i];
      if (!self(self, slot + 1, used | inds[i].bits())) return false;
    }
    return true;
  };

  if (scan(scan, 0, 0)) {
    out.status = WpStatus::member;
  } else {
    out.status = WpStatus::non_member;
    out.extension.clear();
  }
  return out;
}

bool is_well_covered(const Graph& g) {
  const int alpha = independence_number(g);
  bool ok = true;
  for_each_maximal_independent_set(g, [&](VertexSet s) {
    if (s.size() != alpha) {
      ok = false;
      return false;
    }
    return true;
  });
  return ok;
}

bool is_one_well_covered(const Graph& g) {
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0)
      throw Error(errc::has_isolated_vertex, "vertex " + std::to_string(v + 1) + " is isolated");
  if (!is_well_covered(g)) return false;
  const int alpha = independence_number(g);
  for (int v = 0; v < g.order(); ++v) {
    InducedSubgraph sub = induced_subgraph(g, g.vertices() - VertexSet(bit(v)));
    if (!is_well_covered(sub.graph)) return false;
    if (independence_number(sub.graph) != alpha) return false;
  }
  return true;
}

std::optional<VertexSet> avoidance_check(const Graph& g, VertexSet a, int v,
                                         const OmegaFamily& omega) {
  if (!is_independent(g, a)) throw Error(errc::not_independent, "avoidance base set carries an edge");
  if (a.contains(v)) throw Error(errc::bad_argument, "avoided vertex lies in the base set");
  if (a.size() == omega.alpha) throw Error(errc::a_maximum, "base set is already maximum");
  for (const VertexSet& s : omega.sets)
    if (a.subset_of(s) && !s.contains(v)) return s;
  return std::nullopt;
}

std::optional<VertexSet> avoidance_check(const Graph& g, VertexSet a, int v) {
  return avoidance_check(g, a, v, maximum_independent_sets(g));
}

W2AuditRecord w2_structure_audit(const Graph& g, const WpCaps& caps) {
  W2AuditRecord rec;
  const OmegaFamily omega = maximum_independent_sets(g);
  const int alpha = omega.alpha;

  // (i) no isolated vertices
  rec.no_isolated.checked = true;
  rec.no_isolated.passed = true;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0) {
      rec.no_isolated.passed = false;
      rec.no_isolated.witness = "vertex " + std::to_string(v + 1) + " is isolated";
      break;
    }

  // (ii) localization at any non-maximum independent set stays in W_2 and
  // drops the independence number by exactly |A|
  rec.localization.checked = true;
  rec.localization.passed = true;
  enumerate_independent_sets(g, [&](VertexSet a) {
    if (a.size() >= alpha) return true;
    InducedSubgraph loc = localization(g, a);
    WpWitness w = is_wp(loc.graph, 2, caps);
    if (w.status == WpStatus::cap_exceeded) {
      rec.cap_exceeded = true;
      rec.localization.checked = false;
      return false;
    }
    if (w.status != WpStatus::member) {
      rec.localization.passed = false;
      rec.localization.witness = "localization at A=" + vertex_set_label(a) + " is not W_2";
      return false;
    }
    if (independence_number(loc.graph) != alpha - a.size()) {
      rec.localization.passed = false;
      rec.localization.witness =
          "localization at A=" + vertex_set_label(a) + " does not drop alpha by |A|";
      return false;
    }
    return true;
  });
  if (!rec.localization.checked) rec.localization.passed = false;

  // (iii) membership holds component by component
  rec.componentwise.checked = true;
  rec.componentwise.passed = true;
  for (const InducedSubgraph& comp : connected_components(g)) {
    WpWitness w = is_wp(comp.graph, 2, caps);
    if (w.status == WpStatus::cap_exceeded) {
      rec.cap_exceeded = true;
      rec.componentwise.checked = false;
      rec.componentwise.passed = false;
      break;
    }
    if (w.status != WpStatus::member) {
      rec.componentwise.passed = false;
      rec.componentwise.witness =
          "component containing vertex " + std::to_string(comp.to_original[0] + 1) + " is not W_2";
      break;
    }
  }

  // (iv) for non-maximum independent A and any vertex v outside A, some
  // maximum independent set contains A and avoids v
  rec.avoidance.checked = true;
  rec.avoidance.passed = true;
  enumerate_independent_sets(g, [&](VertexSet a) {
    if (a.size() >= alpha) return true;
    for (int v = 0; v < g.order(); ++v) {
      if (a.contains(v)) continue;
      if (!avoidance_check(g, a, v, omega)) {
        rec.avoidance.passed = false;
        rec.avoidance.witness =
            "no maximum set contains A=" + vertex_set_label(a) + " and avoids vertex " +
            std::to_string(v + 1);
        return false;
      }
    }
    return true;
  });

  // (v) a connected member other than K2 has no leaf
  rec.leafless.checked = true;
  rec.leafless.passed = true;
  for (const InducedSubgraph& comp : connected_components(g)) {
    if (comp.graph.order() == 2) continue;  // K2 component
    for (int v = 0; v < comp.graph.order(); ++v)
      if (comp.graph.degree(v) == 1) {
        rec.leafless.passed = false;
        rec.leafless.witness =
            "vertex " + std::to_string(comp.to_original[static_cast<std::size_t>(v)] + 1) +
            " is a leaf of a non-K2 component";
        break;
      }
    if (!rec.leafless.passed) break;
  }

  return rec;
}

}  // namespace wpgraph
