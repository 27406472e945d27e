#ifndef HGMORPH_LAWS_HPP
#define HGMORPH_LAWS_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <type_traits>
#include <utility>
#include <vector>

#include "hgmorph/composed.hpp"
#include "hgmorph/correspondence.hpp"
#include "hgmorph/filters.hpp"
#include "hgmorph/format.hpp"
#include "hgmorph/hypergraph.hpp"
#include "hgmorph/oracle.hpp"

namespace hgmorph::laws {

/// Outcome of running one law over the full enumerated space of one
/// instance. A report with zero counterexamples has pass_count equal to
/// the space size; otherwise every failing input is listed, minimized by
/// greedy element removal and rendered in subset-document syntax.
struct LawReport {
  std::string law;
  std::string instance;
  std::uint64_t pass_count = 0;
  std::vector<std::string> counterexamples;

  bool ok() const { return counterexamples.empty(); }

  std::vector<std::string> to_lines() const {
    std::vector<std::string> out;
    if (ok()) {
      out.push_back("LAW " + law + " INSTANCE " + instance + " PASS " +
                    std::to_string(pass_count));
    } else {
      for (const std::string& c : counterexamples)
        out.push_back("LAW " + law + " COUNTEREXAMPLE " + c);
    }
    return out;
  }
};

namespace detail {

inline void finalize(LawReport& r) {
  std::sort(r.counterexamples.begin(), r.counterexamples.end());
  r.counterexamples.erase(
      std::unique(r.counterexamples.begin(), r.counterexamples.end()),
      r.counterexamples.end());
}

/// Splits [0, total) into chunks and runs body(lo, hi, partial) on a small
/// pool. Bodies must be pure apart from their partial report; the merge is
/// deterministic because pass counts commute and counterexamples are
/// sorted afterwards.
template <class Body>
void partitioned(std::uint64_t total, LawReport& report, const Body& body) {
  const unsigned hw = std::thread::hardware_concurrency();
  const unsigned threads = hw == 0 ? 1 : std::min(hw, 8u);
  if (threads <= 1 || total < 4096) {
    body(0, total, report);
    finalize(report);
    return;
  }
  const std::uint64_t chunk = (total + threads - 1) / threads;
  std::vector<LawReport> parts(threads);
  {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t lo = t * chunk;
      const std::uint64_t hi = std::min<std::uint64_t>(total, lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back([&body, &parts, t, lo, hi] { body(lo, hi, parts[t]); });
    }
  }
  for (LawReport& p : parts) {
    report.pass_count += p.pass_count;
    report.counterexamples.insert(report.counterexamples.end(),
                                  p.counterexamples.begin(),
                                  p.counterexamples.end());
  }
  finalize(report);
}

template <class SetT>
std::size_t universe_of(const Hypergraph& h) {
  if constexpr (std::is_same_v<SetT, VertexSet>)
    return h.vertex_count();
  else
    return h.edge_count();
}

/// Greedy minimization: repeatedly drop any single element that keeps the
/// predicate failing.
template <class SetT, class Fails>
SetT shrink_set(SetT s, const Fails& fails) {
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    for (std::size_t i : s.members()) {
      SetT t = s;
      t.remove(i);
      if (fails(t)) {
        s = std::move(t);
        shrunk = true;
        break;
      }
    }
  }
  return s;
}

template <class SetA, class SetB, class Fails>
void shrink_pair(SetA& a, SetB& b, const Fails& fails) {
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    for (std::size_t i : a.members()) {
      SetA t = a;
      t.remove(i);
      if (fails(t, b)) {
        a = std::move(t);
        shrunk = true;
        break;
      }
    }
    if (shrunk) continue;
    for (std::size_t i : b.members()) {
      SetB t = b;
      t.remove(i);
      if (fails(a, t)) {
        b = std::move(t);
        shrunk = true;
        break;
      }
    }
  }
}

/// Element removal constrained to keep the pair a subhypergraph: edges go
/// freely, a vertex only once no remaining edge needs it.
template <class Fails>
SubHypergraph shrink_sub(SubHypergraph s, const Fails& fails) {
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    for (std::size_t i : s.edges().members()) {
      EdgeSet e = s.edges();
      e.remove(i);
      SubHypergraph t = SubHypergraph::unchecked(s.vertices(), std::move(e));
      if (fails(t)) {
        s = std::move(t);
        shrunk = true;
        break;
      }
    }
    if (shrunk) continue;
    for (std::size_t x : s.vertices().members()) {
      VertexSet v = s.vertices();
      v.remove(x);
      if (!is_subhypergraph(v, s.edges())) continue;
      SubHypergraph t = SubHypergraph::unchecked(std::move(v), s.edges());
      if (fails(t)) {
        s = std::move(t);
        shrunk = true;
        break;
      }
    }
  }
  return s;
}

inline std::string serialize_input(const VertexSet& s) { return subset_line(s); }
inline std::string serialize_input(const EdgeSet& s) { return subset_line(s); }
inline std::string serialize_input(const SubHypergraph& s) {
  return subset_line(s.vertices()) + "; " + subset_line(s.edges());
}

template <class A, class B>
std::string serialize_pair(const A& a, const B& b) {
  return serialize_input(a) + "; " + serialize_input(b);
}

/// Partitioned walk over every cover-valid pair: the vertex part ranges
/// over the union of the chosen edges plus any subset of the rest.
template <class Body>
void partitioned_subhypergraphs(const Hypergraph& h, LawReport& report,
                                const Body& body) {
  const std::uint64_t edge_total = std::uint64_t{1} << h.edge_count();
  partitioned(edge_total, report,
              [&](std::uint64_t lo, std::uint64_t hi, LawReport& part) {
                for (std::uint64_t emask = lo; emask < hi; ++emask) {
                  EdgeSet eset = EdgeSet::from_mask(h, emask);
                  std::uint64_t base = 0;
                  eset.for_each([&](std::size_t i) {
                    auto [vb, ve] = h.edge_vertices(static_cast<EdgeId>(i));
                    for (const VertexId* q = vb; q != ve; ++q)
                      base |= std::uint64_t{1} << *q;
                  });
                  const std::uint64_t all =
                      (std::uint64_t{1} << h.vertex_count()) - 1;
                  const std::uint64_t free = all & ~base;
                  std::uint64_t sub = free;
                  while (true) {
                    body(SubHypergraph::unchecked(
                             VertexSet::from_mask(h, base | (free ^ sub)), eset),
                         part);
                    if (sub == 0) break;
                    sub = (sub - 1) & free;
                  }
                }
              });
}

}  // namespace detail

// Generic checkers. They take the operators as callables so the harness
// itself can be exercised against deliberately broken implementations.

/// pred over every subset of one side; one pass per holding input.
template <class SetT, class Pred>
LawReport check_each_subset(const Hypergraph& h, std::string law,
                            std::string_view instance, const Pred& pred) {
  oracle::require_enumerable(h);
  LawReport report{std::move(law), std::string(instance)};
  const std::uint64_t total = std::uint64_t{1} << detail::universe_of<SetT>(h);
  detail::partitioned(
      total, report, [&](std::uint64_t lo, std::uint64_t hi, LawReport& part) {
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
          SetT x = SetT::from_mask(h, mask);
          if (pred(x)) {
            ++part.pass_count;
            continue;
          }
          auto fails = [&](const SetT& c) { return !pred(c); };
          part.counterexamples.push_back(
              detail::serialize_input(detail::shrink_set(x, fails)));
        }
      });
  return report;
}

/// pred over every subhypergraph; one pass per holding input.
template <class Pred>
LawReport check_each_subhypergraph(const Hypergraph& h, std::string law,
                                   std::string_view instance, const Pred& pred) {
  oracle::require_enumerable(h);
  LawReport report{std::move(law), std::string(instance)};
  detail::partitioned_subhypergraphs(
      h, report, [&](const SubHypergraph& s, LawReport& part) {
        if (pred(s)) {
          ++part.pass_count;
          return;
        }
        auto fails = [&](const SubHypergraph& c) { return !pred(c); };
        part.counterexamples.push_back(
            detail::serialize_input(detail::shrink_sub(s, fails)));
      });
  return report;
}

/// Adjunction between two sides: dil maps X-subsets to Y-subsets and ero
/// maps back; dil(x) ⊆ y must hold exactly when x ⊆ ero(y). Operator
/// tables are precomputed so the pair loop is pure set comparison.
template <class SetX, class SetY, class Dil, class Ero>
LawReport check_adjunction(const Hypergraph& h, std::string law,
                           std::string_view instance, const Dil& dil,
                           const Ero& ero) {
  oracle::require_enumerable(h);
  LawReport report{std::move(law), std::string(instance)};
  const std::uint64_t nx = std::uint64_t{1} << detail::universe_of<SetX>(h);
  const std::uint64_t ny = std::uint64_t{1} << detail::universe_of<SetY>(h);
  std::vector<SetX> xs;
  std::vector<SetY> dil_tab;
  xs.reserve(nx);
  dil_tab.reserve(nx);
  for (std::uint64_t m = 0; m < nx; ++m) {
    xs.push_back(SetX::from_mask(h, m));
    dil_tab.push_back(dil(xs.back()));
  }
  std::vector<SetY> ys;
  std::vector<SetX> ero_tab;
  ys.reserve(ny);
  ero_tab.reserve(ny);
  for (std::uint64_t m = 0; m < ny; ++m) {
    ys.push_back(SetY::from_mask(h, m));
    ero_tab.push_back(ero(ys.back()));
  }
  detail::partitioned(
      nx, report, [&](std::uint64_t lo, std::uint64_t hi, LawReport& part) {
        for (std::uint64_t xm = lo; xm < hi; ++xm) {
          for (std::uint64_t ym = 0; ym < ny; ++ym) {
            const bool left = dil_tab[xm].is_subset_of(ys[ym]);
            const bool right = xs[xm].is_subset_of(ero_tab[ym]);
            if (left == right) {
              ++part.pass_count;
              continue;
            }
            SetX a = xs[xm];
            SetY b = ys[ym];
            auto fails = [&](const SetX& cx, const SetY& cy) {
              return dil(cx).is_subset_of(cy) != cx.is_subset_of(ero(cy));
            };
            detail::shrink_pair(a, b, fails);
            part.counterexamples.push_back(detail::serialize_pair(a, b));
          }
        }
      });
  return report;
}

/// Adjunction on the subhypergraph lattice, over all valid pairs.
template <class Dil, class Ero>
LawReport check_adjunction_subhypergraphs(const Hypergraph& h, std::string law,
                                          std::string_view instance,
                                          const Dil& dil, const Ero& ero) {
  oracle::require_enumerable(h);
  LawReport report{std::move(law), std::string(instance)};
  std::vector<SubHypergraph> subs;
  oracle::for_each_subhypergraph(h, [&](const SubHypergraph& s) { subs.push_back(s); });
  std::vector<SubHypergraph> dil_tab;
  std::vector<SubHypergraph> ero_tab;
  dil_tab.reserve(subs.size());
  ero_tab.reserve(subs.size());
  for (const SubHypergraph& s : subs) {
    dil_tab.push_back(dil(s));
    ero_tab.push_back(ero(s));
  }
  auto fails = [&](const SubHypergraph& a, const SubHypergraph& b) {
    return dil(a).is_subset_of(b) != a.is_subset_of(ero(b));
  };
  detail::partitioned(
      subs.size(), report,
      [&](std::uint64_t lo, std::uint64_t hi, LawReport& part) {
        for (std::uint64_t i = lo; i < hi; ++i) {
          for (std::size_t j = 0; j < subs.size(); ++j) {
            const bool left = dil_tab[i].is_subset_of(subs[j]);
            const bool right = subs[i].is_subset_of(ero_tab[j]);
            if (left == right) {
              ++part.pass_count;
              continue;
            }
            SubHypergraph a = subs[i];
            SubHypergraph b = subs[j];
            bool shrunk = true;
            while (shrunk) {
              shrunk = false;
              SubHypergraph a2 = detail::shrink_sub(
                  a, [&](const SubHypergraph& c) { return fails(c, b); });
              if (!(a2 == a)) {
                a = a2;
                shrunk = true;
              }
              SubHypergraph b2 = detail::shrink_sub(
                  b, [&](const SubHypergraph& c) { return fails(a, c); });
              if (!(b2 == b)) {
                b = b2;
                shrunk = true;
              }
            }
            part.counterexamples.push_back(detail::serialize_pair(a, b));
          }
        }
      });
  return report;
}

/// a(x) must equal the complement-conjugate of b: a(x) == ¬ b(¬x).
template <class SetT, class OpA, class OpB>
LawReport check_complement_duality(const Hypergraph& h, std::string law,
                                   std::string_view instance, const OpA& a,
                                   const OpB& b) {
  return check_each_subset<SetT>(h, std::move(law), instance, [&](const SetT& x) {
    return a(x) == b(x.complement()).complement();
  });
}

/// Pointwise equality of two implementations over one side's subsets.
template <class SetT, class Lhs, class Rhs>
LawReport check_pointwise_equal(const Hypergraph& h, std::string law,
                                std::string_view instance, const Lhs& lhs,
                                const Rhs& rhs) {
  return check_each_subset<SetT>(h, std::move(law), instance, [&](const SetT& x) {
    return lhs(x) == rhs(x);
  });
}

template <class SetT>
using SetOp = std::function<SetT(const SetT&)>;
using HgOp = std::function<SubHypergraph(const SubHypergraph&)>;

/// Monotonicity via single-element steps: op(x) ⊆ op(x ∪ {a}) for every x
/// and a outside x. Single-element steps imply the property for every
/// inclusion pair, since any inclusion is a chain of such steps. One pass
/// per step on which every op holds.
template <class SetT>
LawReport check_adjacent_monotone(const Hypergraph& h, std::string law,
                                  std::string_view instance,
                                  const std::vector<SetOp<SetT>>& ops) {
  oracle::require_enumerable(h);
  LawReport report{std::move(law), std::string(instance)};
  const std::size_t n = detail::universe_of<SetT>(h);
  const std::uint64_t total = std::uint64_t{1} << n;
  detail::partitioned(
      total, report, [&](std::uint64_t lo, std::uint64_t hi, LawReport& part) {
        std::vector<SetT> at_x;
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
          SetT x = SetT::from_mask(h, mask);
          at_x.clear();
          for (const auto& op : ops) at_x.push_back(op(x));
          for (std::size_t a = 0; a < n; ++a) {
            if ((mask >> a) & 1) continue;
            SetT y = x;
            y.add(a);
            bool ok = true;
            for (std::size_t k = 0; k < ops.size() && ok; ++k)
              ok = at_x[k].is_subset_of(ops[k](y));
            if (ok) {
              ++part.pass_count;
              continue;
            }
            // Any nested failing pair witnesses non-monotonicity, so the
            // minimizer may leave the adjacent form.
            auto fails = [&](const SetT& ca, const SetT& cb) {
              if (!ca.is_subset_of(cb)) return false;
              for (const auto& op : ops)
                if (!op(ca).is_subset_of(op(cb))) return true;
              return false;
            };
            SetT a2 = x;
            SetT b2 = y;
            detail::shrink_pair(a2, b2, fails);
            part.counterexamples.push_back(detail::serialize_pair(a2, b2));
          }
        }
      });
  return report;
}

/// Subhypergraph-lattice version; valid single-element steps add an
/// uncovered vertex or an edge whose vertices are already present.
inline LawReport check_adjacent_monotone_subhypergraphs(
    const Hypergraph& h, std::string law, std::string_view instance,
    const std::vector<HgOp>& ops) {
  oracle::require_enumerable(h);
  LawReport report{std::move(law), std::string(instance)};
  auto fails = [&ops](const SubHypergraph& a, const SubHypergraph& b) {
    if (!a.is_subset_of(b)) return false;
    for (const auto& op : ops)
      if (!op(a).is_subset_of(op(b))) return true;
    return false;
  };
  auto minimize = [&](SubHypergraph a, SubHypergraph b) {
    bool shrunk = true;
    while (shrunk) {
      shrunk = false;
      SubHypergraph a2 = detail::shrink_sub(
          a, [&](const SubHypergraph& c) { return fails(c, b); });
      if (!(a2 == a)) {
        a = a2;
        shrunk = true;
      }
      SubHypergraph b2 = detail::shrink_sub(
          b, [&](const SubHypergraph& c) { return fails(a, c); });
      if (!(b2 == b)) {
        b = b2;
        shrunk = true;
      }
    }
    return detail::serialize_pair(a, b);
  };
  detail::partitioned_subhypergraphs(
      h, report, [&](const SubHypergraph& s, LawReport& part) {
        std::vector<SubHypergraph> at_s;
        at_s.reserve(ops.size());
        for (const auto& op : ops) at_s.push_back(op(s));
        auto step = [&](const SubHypergraph& t) {
          bool ok = true;
          for (std::size_t k = 0; k < ops.size() && ok; ++k)
            ok = at_s[k].is_subset_of(ops[k](t));
          if (ok)
            ++part.pass_count;
          else
            part.counterexamples.push_back(minimize(s, t));
        };
        const Hypergraph& g = s.graph();
        for (std::size_t x = 0; x < g.vertex_count(); ++x) {
          if (s.vertices().contains(x)) continue;
          VertexSet v = s.vertices();
          v.add(x);
          step(SubHypergraph::unchecked(std::move(v), s.edges()));
        }
        for (std::size_t i = 0; i < g.edge_count(); ++i) {
          if (s.edges().contains(i)) continue;
          auto [vb, ve] = g.edge_vertices(static_cast<EdgeId>(i));
          bool covered = true;
          for (const VertexId* q = vb; q != ve && covered; ++q)
            covered = s.vertices().contains(*q);
          if (!covered) continue;
          EdgeSet e = s.edges();
          e.add(i);
          step(SubHypergraph::unchecked(s.vertices(), std::move(e)));
        }
      });
  return report;
}

// The named laws.

inline LawReport law_adjunction_eeps_vdelta(const Hypergraph& h, std::string_view inst) {
  return check_adjunction<EdgeSet, VertexSet>(
      h, "adjunction-eeps-vdelta", inst,
      [](const EdgeSet& x) { return vertex_dilate_from_edges(x); },
      [](const VertexSet& y) { return edge_erode_from_vertices(y); });
}

inline LawReport law_adjunction_veps_edelta(const Hypergraph& h, std::string_view inst) {
  return check_adjunction<VertexSet, EdgeSet>(
      h, "adjunction-veps-edelta", inst,
      [](const VertexSet& x) { return edge_dilate_from_vertices(x); },
      [](const EdgeSet& y) { return vertex_erode_from_edges(y); });
}

inline LawReport law_adjunction_vertex(const Hypergraph& h, std::string_view inst) {
  return check_adjunction<VertexSet, VertexSet>(
      h, "adjunction-vertex", inst,
      [](const VertexSet& x) { return vertex_dilate(x); },
      [](const VertexSet& y) { return vertex_erode(y); });
}

inline LawReport law_adjunction_edge(const Hypergraph& h, std::string_view inst) {
  return check_adjunction<EdgeSet, EdgeSet>(
      h, "adjunction-edge", inst,
      [](const EdgeSet& x) { return edge_dilate(x); },
      [](const EdgeSet& y) { return edge_erode(y); });
}

inline LawReport law_adjunction_hg(const Hypergraph& h, std::string_view inst) {
  return check_adjunction_subhypergraphs(
      h, "adjunction-hg", inst,
      [](const SubHypergraph& x) { return hg_dilate(x); },
      [](const SubHypergraph& y) { return hg_erode(y); });
}

inline LawReport law_duality_eeps_edelta(const Hypergraph& h, std::string_view inst) {
  return check_complement_duality<VertexSet>(
      h, "duality-eeps-edelta", inst,
      [](const VertexSet& x) { return edge_erode_from_vertices(x); },
      [](const VertexSet& x) { return edge_dilate_from_vertices(x); });
}

inline LawReport law_duality_veps_vdelta(const Hypergraph& h, std::string_view inst) {
  return check_complement_duality<EdgeSet>(
      h, "duality-veps-vdelta", inst,
      [](const EdgeSet& x) { return vertex_erode_from_edges(x); },
      [](const EdgeSet& x) { return vertex_dilate_from_edges(x); });
}

inline LawReport law_oracle_vdelta(const Hypergraph& h, std::string_view inst) {
  return check_pointwise_equal<EdgeSet>(
      h, "oracle-vdelta", inst,
      [](const EdgeSet& x) { return vertex_dilate_from_edges(x); },
      [](const EdgeSet& x) { return oracle::delta_v(x); });
}

inline LawReport law_oracle_veps(const Hypergraph& h, std::string_view inst) {
  return check_pointwise_equal<EdgeSet>(
      h, "oracle-veps", inst,
      [](const EdgeSet& x) { return vertex_erode_from_edges(x); },
      [](const EdgeSet& x) { return oracle::eps_v(x); });
}

inline LawReport law_oracle_edelta(const Hypergraph& h, std::string_view inst) {
  return check_pointwise_equal<VertexSet>(
      h, "oracle-edelta", inst,
      [](const VertexSet& x) { return edge_dilate_from_vertices(x); },
      [](const VertexSet& x) { return oracle::delta_e(x); });
}

inline LawReport law_oracle_eeps(const Hypergraph& h, std::string_view inst) {
  return check_pointwise_equal<VertexSet>(
      h, "oracle-eeps", inst,
      [](const VertexSet& x) { return edge_erode_from_vertices(x); },
      [](const VertexSet& x) { return oracle::eps_e(x); });
}

inline LawReport law_formula_vertex_dilate(const Hypergraph& h, std::string_view inst) {
  return check_pointwise_equal<VertexSet>(
      h, "formula-vertex-dilate", inst,
      [](const VertexSet& x) { return vertex_dilate(x); },
      [](const VertexSet& x) { return oracle::closed_vertex_dilate(x); });
}

inline LawReport law_formula_vertex_erode(const Hypergraph& h, std::string_view inst) {
  return check_pointwise_equal<VertexSet>(
      h, "formula-vertex-erode", inst,
      [](const VertexSet& x) { return vertex_erode(x); },
      [](const VertexSet& x) { return oracle::closed_vertex_erode(x); });
}

inline LawReport law_formula_edge_dilate(const Hypergraph& h, std::string_view inst) {
  return check_pointwise_equal<EdgeSet>(
      h, "formula-edge-dilate", inst,
      [](const EdgeSet& x) { return edge_dilate(x); },
      [](const EdgeSet& x) { return oracle::closed_edge_dilate(x); });
}

inline LawReport law_formula_edge_erode(const Hypergraph& h, std::string_view inst) {
  return check_pointwise_equal<EdgeSet>(
      h, "formula-edge-erode", inst,
      [](const EdgeSet& x) { return edge_erode(x); },
      [](const EdgeSet& x) { return oracle::closed_edge_erode(x); });
}

inline LawReport law_formula_half_open_vertex(const Hypergraph& h, std::string_view inst) {
  return check_each_subset<VertexSet>(
      h, "formula-half-open-vertex", inst, [](const VertexSet& x) {
        VertexSet y = vertex_open_half(x);
        return y == oracle::closed_vertex_open_half(x) &&
               y == oracle::membership_vertex_open_half(x);
      });
}

inline LawReport law_formula_half_close_edge(const Hypergraph& h, std::string_view inst) {
  return check_pointwise_equal<EdgeSet>(
      h, "formula-half-close-edge", inst,
      [](const EdgeSet& x) { return edge_close_half(x); },
      [](const EdgeSet& x) { return oracle::closed_edge_close_half(x); });
}

namespace detail {

template <class SetT>
LawReport filter_axioms_sets(
    const Hypergraph& h, std::string law, std::string_view inst,
    const std::array<std::pair<SetT (*)(const SetT&), bool>, 4>& filters) {
  // bool flag: true = anti-extensive (opening), false = extensive (closing)
  LawReport singles =
      check_each_subset<SetT>(h, law, inst, [&](const SetT& x) {
        for (const auto& [op, anti] : filters) {
          SetT y = op(x);
          if (anti ? !y.is_subset_of(x) : !x.is_subset_of(y)) return false;
          if (!(op(y) == y)) return false;
        }
        return true;
      });
  std::vector<SetOp<SetT>> ops;
  for (const auto& [op, anti] : filters) ops.emplace_back(op);
  LawReport pairs = check_adjacent_monotone<SetT>(h, std::move(law), inst, ops);
  singles.pass_count += pairs.pass_count;
  singles.counterexamples.insert(singles.counterexamples.end(),
                                 pairs.counterexamples.begin(),
                                 pairs.counterexamples.end());
  finalize(singles);
  return singles;
}

}  // namespace detail

inline LawReport law_filter_axioms_vertex(const Hypergraph& h, std::string_view inst) {
  return detail::filter_axioms_sets<VertexSet>(
      h, "filter-axioms-vertex", inst,
      {{{&vertex_open_1, true},
        {&vertex_open_half, true},
        {&vertex_close_1, false},
        {&vertex_close_half, false}}});
}

inline LawReport law_filter_axioms_edge(const Hypergraph& h, std::string_view inst) {
  return detail::filter_axioms_sets<EdgeSet>(
      h, "filter-axioms-edge", inst,
      {{{&edge_open_1, true},
        {&edge_open_half, true},
        {&edge_close_1, false},
        {&edge_close_half, false}}});
}

inline LawReport law_filter_axioms_hg(const Hypergraph& h, std::string_view inst) {
  struct F {
    SubHypergraph (*op)(const SubHypergraph&);
    bool anti;
  };
  constexpr std::array<F, 4> fs{{{&hg_open_1, true},
                                 {&hg_open_half, true},
                                 {&hg_close_1, false},
                                 {&hg_close_half, false}}};
  LawReport singles = check_each_subhypergraph(
      h, "filter-axioms-hg", inst, [&fs](const SubHypergraph& x) {
        for (const F& f : fs) {
          SubHypergraph y = f.op(x);
          if (!is_subhypergraph(y.vertices(), y.edges())) return false;
          if (f.anti ? !y.is_subset_of(x) : !x.is_subset_of(y)) return false;
          if (!(f.op(y) == y)) return false;
        }
        return true;
      });
  std::vector<HgOp> ops;
  for (const F& f : fs) ops.emplace_back(f.op);
  LawReport pairs =
      check_adjacent_monotone_subhypergraphs(h, "filter-axioms-hg", inst, ops);
  singles.pass_count += pairs.pass_count;
  singles.counterexamples.insert(singles.counterexamples.end(),
                                 pairs.counterexamples.begin(),
                                 pairs.counterexamples.end());
  detail::finalize(singles);
  return singles;
}

inline LawReport law_closedness_hg(const Hypergraph& h, std::string_view inst) {
  return check_each_subhypergraph(
      h, "closedness-hg", inst, [](const SubHypergraph& x) {
        const std::array<SubHypergraph, 6> outs{hg_dilate(x),     hg_erode(x),
                                                hg_open_1(x),     hg_close_1(x),
                                                hg_open_half(x),  hg_close_half(x)};
        for (const SubHypergraph& y : outs)
          if (!is_subhypergraph(y.vertices(), y.edges())) return false;
        return true;
      });
}

inline LawReport law_ordering_chain_vertex(const Hypergraph& h, std::string_view inst) {
  return check_each_subset<VertexSet>(
      h, "ordering-chain-vertex", inst, [](const VertexSet& x) {
        return vertex_open_1(x).is_subset_of(vertex_open_half(x)) &&
               vertex_open_half(x).is_subset_of(x) &&
               x.is_subset_of(vertex_close_half(x)) &&
               vertex_close_half(x).is_subset_of(vertex_close_1(x));
      });
}

inline LawReport law_ordering_chain_edge(const Hypergraph& h, std::string_view inst) {
  return check_each_subset<EdgeSet>(
      h, "ordering-chain-edge", inst, [](const EdgeSet& x) {
        return edge_open_1(x).is_subset_of(edge_open_half(x)) &&
               edge_open_half(x).is_subset_of(x) &&
               x.is_subset_of(edge_close_half(x)) &&
               edge_close_half(x).is_subset_of(edge_close_1(x));
      });
}

inline LawReport law_ordering_chain_hg(const Hypergraph& h, std::string_view inst) {
  return check_each_subhypergraph(
      h, "ordering-chain-hg", inst, [](const SubHypergraph& x) {
        return hg_open_1(x).is_subset_of(hg_open_half(x)) &&
               hg_open_half(x).is_subset_of(x) &&
               x.is_subset_of(hg_close_half(x)) &&
               hg_close_half(x).is_subset_of(hg_close_1(x));
      });
}

inline constexpr unsigned kGranulometryMaxIndex = 6;

inline LawReport law_granulometry_nesting(const Hypergraph& h, std::string_view inst) {
  return check_each_subhypergraph(
      h, "granulometry-nesting", inst, [](const SubHypergraph& x) {
        SubHypergraph prev_open = x;
        SubHypergraph prev_close = x;
        for (unsigned lam = 1; lam <= kGranulometryMaxIndex; ++lam) {
          SubHypergraph o = granule_open(x, lam);
          if (!is_subhypergraph(o.vertices(), o.edges())) return false;
          if (!o.is_subset_of(prev_open)) return false;
          if (!o.is_subset_of(x)) return false;
          if (!(granule_open(o, lam) == o)) return false;
          SubHypergraph c = granule_close(x, lam);
          if (!is_subhypergraph(c.vertices(), c.edges())) return false;
          if (!prev_close.is_subset_of(c)) return false;
          if (!x.is_subset_of(c)) return false;
          if (!(granule_close(c, lam) == c)) return false;
          prev_open = o;
          prev_close = c;
        }
        return true;
      });
}

inline constexpr unsigned kAsfMaxIndex = 4;

inline LawReport law_asf_properties(const Hypergraph& h, std::string_view inst) {
  LawReport singles = check_each_subhypergraph(
      h, "asf-properties", inst, [](const SubHypergraph& x) {
        if (!(asf(x, 0) == x)) return false;
        for (unsigned lam = 1; lam <= kAsfMaxIndex; ++lam) {
          SubHypergraph y = asf(x, lam);
          if (!is_subhypergraph(y.vertices(), y.edges())) return false;
          if (!(asf(y, lam) == y)) return false;
        }
        return true;
      });
  std::vector<HgOp> ops;
  for (unsigned lam = 1; lam <= kAsfMaxIndex; ++lam)
    ops.push_back([lam](const SubHypergraph& s) { return asf(s, lam); });
  LawReport pairs =
      check_adjacent_monotone_subhypergraphs(h, "asf-properties", inst, ops);
  singles.pass_count += pairs.pass_count;
  singles.counterexamples.insert(singles.counterexamples.end(),
                                 pairs.counterexamples.begin(),
                                 pairs.counterexamples.end());
  detail::finalize(singles);
  return singles;
}

using LawFn = LawReport (*)(const Hypergraph&, std::string_view);

struct LawEntry {
  std::string_view name;
  LawFn fn;
};

inline constexpr LawEntry kLawTable[] = {
    {"adjunction-eeps-vdelta", &law_adjunction_eeps_vdelta},
    {"adjunction-veps-edelta", &law_adjunction_veps_edelta},
    {"adjunction-vertex", &law_adjunction_vertex},
    {"adjunction-edge", &law_adjunction_edge},
    {"adjunction-hg", &law_adjunction_hg},
    {"duality-eeps-edelta", &law_duality_eeps_edelta},
    {"duality-veps-vdelta", &law_duality_veps_vdelta},
    {"oracle-vdelta", &law_oracle_vdelta},
    {"oracle-veps", &law_oracle_veps},
    {"oracle-edelta", &law_oracle_edelta},
    {"oracle-eeps", &law_oracle_eeps},
    {"formula-vertex-dilate", &law_formula_vertex_dilate},
    {"formula-vertex-erode", &law_formula_vertex_erode},
    {"formula-edge-dilate", &law_formula_edge_dilate},
    {"formula-edge-erode", &law_formula_edge_erode},
    {"formula-half-open-vertex", &law_formula_half_open_vertex},
    {"formula-half-close-edge", &law_formula_half_close_edge},
    {"filter-axioms-vertex", &law_filter_axioms_vertex},
    {"filter-axioms-edge", &law_filter_axioms_edge},
    {"filter-axioms-hg", &law_filter_axioms_hg},
    {"closedness-hg", &law_closedness_hg},
    {"ordering-chain-vertex", &law_ordering_chain_vertex},
    {"ordering-chain-edge", &law_ordering_chain_edge},
    {"ordering-chain-hg", &law_ordering_chain_hg},
    {"granulometry-nesting", &law_granulometry_nesting},
    {"asf-properties", &law_asf_properties},
};

inline std::vector<std::string_view> law_names() {
  std::vector<std::string_view> out;
  for (const LawEntry& e : kLawTable) out.push_back(e.name);
  return out;
}

inline LawReport check_law(std::string_view law, const Hypergraph& h,
                           std::string_view instance) {
  for (const LawEntry& e : kLawTable)
    if (e.name == law) return e.fn(h, instance);
  throw std::invalid_argument("unknown law '" + std::string(law) + "'");
}

/// Seed of the reproducible random-instance suite. Sampling uses the raw
/// mt19937 stream (never distribution objects), so the generated graphs
/// are identical across standard libraries.
inline constexpr std::uint32_t kRandomSuiteSeed = 20260817u;

inline Hypergraph random_hypergraph(std::mt19937& rng) {
  auto pick = [&rng](std::uint32_t lo, std::uint32_t hi) {
    return lo + static_cast<std::uint32_t>(rng() % (hi - lo + 1));
  };
  const std::uint32_t n = pick(2, 8);
  const std::uint32_t m = pick(1, 5);
  std::vector<std::vector<VertexId>> edges(m);
  for (auto& members : edges) {
    const std::uint32_t want = std::min(pick(1, 4), n);
    Bitset chosen(n);
    while (chosen.count() < want) chosen.set(rng() % n);
    chosen.for_each([&](std::size_t x) { members.push_back(static_cast<VertexId>(x)); });
  }
  return Hypergraph::from_indices(n, std::move(edges));
}

inline std::vector<Hypergraph> random_suite(std::size_t count = 50) {
  std::mt19937 rng(kRandomSuiteSeed);
  std::vector<Hypergraph> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_hypergraph(rng));
  return out;
}

}  // namespace hgmorph::laws

#endif  // HGMORPH_LAWS_HPP
