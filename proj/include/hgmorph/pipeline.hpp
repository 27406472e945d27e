#ifndef HGMORPH_PIPELINE_HPP
#define HGMORPH_PIPELINE_HPP

#include <cassert>
#include <cctype>
#include <charconv>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hgmorph/composed.hpp"
#include "hgmorph/correspondence.hpp"
#include "hgmorph/filters.hpp"
#include "hgmorph/format.hpp"
#include "hgmorph/hypergraph.hpp"

namespace hgmorph {

/// Error in a pipeline expression or its use; step positions are 1-based.
class PipelineError : public std::runtime_error {
 public:
  PipelineError(std::size_t step, const std::string& message)
      : std::runtime_error("step " + std::to_string(step) + ": " + message),
        step_(step) {}

  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

enum class Domain { VertexSet, EdgeSet, SubHypergraph };

inline std::string_view domain_name(Domain d) {
  switch (d) {
    case Domain::VertexSet: return "vertex-set";
    case Domain::EdgeSet: return "edge-set";
    case Domain::SubHypergraph: return "subhypergraph";
  }
  return "";
}

enum class OpKind {
  VDelta,
  VEps,
  EDelta,
  EEps,
  VertexDilate,
  VertexErode,
  EdgeDilate,
  EdgeErode,
  HgDilate,
  HgErode,
  VOpen,
  VClose,
  EOpen,
  EClose,
  HgOpen,
  HgClose,
  HgGranuleOpen,
  HgGranuleClose,
  HgAsf,
};

struct PipelineStep {
  OpKind kind;
  bool half = false;    // open/close: 1/2 variant instead of 1
  unsigned lambda = 0;  // granule/asf size index
  std::string text;     // canonical "name" or "name:arg" spelling
  Domain input;
  Domain output;
};

struct Pipeline {
  std::vector<PipelineStep> steps;

  Domain input() const { return steps.front().input; }
  Domain output() const { return steps.back().output; }
};

namespace pipeline_detail {

enum class ArgKind { None, OpenClose, Lambda };

struct OpSpec {
  std::string_view name;
  OpKind kind;
  ArgKind arg;
  Domain in;
  Domain out;
};

inline constexpr OpSpec kOpTable[] = {
    {"vdelta", OpKind::VDelta, ArgKind::None, Domain::EdgeSet, Domain::VertexSet},
    {"veps", OpKind::VEps, ArgKind::None, Domain::EdgeSet, Domain::VertexSet},
    {"edelta", OpKind::EDelta, ArgKind::None, Domain::VertexSet, Domain::EdgeSet},
    {"eeps", OpKind::EEps, ArgKind::None, Domain::VertexSet, Domain::EdgeSet},
    {"vertex-dilate", OpKind::VertexDilate, ArgKind::None, Domain::VertexSet, Domain::VertexSet},
    {"vertex-erode", OpKind::VertexErode, ArgKind::None, Domain::VertexSet, Domain::VertexSet},
    {"edge-dilate", OpKind::EdgeDilate, ArgKind::None, Domain::EdgeSet, Domain::EdgeSet},
    {"edge-erode", OpKind::EdgeErode, ArgKind::None, Domain::EdgeSet, Domain::EdgeSet},
    {"hg-dilate", OpKind::HgDilate, ArgKind::None, Domain::SubHypergraph, Domain::SubHypergraph},
    {"hg-erode", OpKind::HgErode, ArgKind::None, Domain::SubHypergraph, Domain::SubHypergraph},
    {"v-open", OpKind::VOpen, ArgKind::OpenClose, Domain::VertexSet, Domain::VertexSet},
    {"v-close", OpKind::VClose, ArgKind::OpenClose, Domain::VertexSet, Domain::VertexSet},
    {"e-open", OpKind::EOpen, ArgKind::OpenClose, Domain::EdgeSet, Domain::EdgeSet},
    {"e-close", OpKind::EClose, ArgKind::OpenClose, Domain::EdgeSet, Domain::EdgeSet},
    {"hg-open", OpKind::HgOpen, ArgKind::OpenClose, Domain::SubHypergraph, Domain::SubHypergraph},
    {"hg-close", OpKind::HgClose, ArgKind::OpenClose, Domain::SubHypergraph, Domain::SubHypergraph},
    {"hg-granule-open", OpKind::HgGranuleOpen, ArgKind::Lambda, Domain::SubHypergraph, Domain::SubHypergraph},
    {"hg-granule-close", OpKind::HgGranuleClose, ArgKind::Lambda, Domain::SubHypergraph, Domain::SubHypergraph},
    {"hg-asf", OpKind::HgAsf, ArgKind::Lambda, Domain::SubHypergraph, Domain::SubHypergraph},
};

inline const OpSpec* find_op(std::string_view name) {
  for (const OpSpec& s : kOpTable)
    if (s.name == name) return &s;
  return nullptr;
}

inline std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace pipeline_detail

/// Grammar: pipeline := step (';' step)*; step := name [':' arg].
/// Adjacent steps must agree on domains; the returned pipeline never fails
/// a domain check at run time.
inline Pipeline parse_pipeline(std::string_view text) {
  using pipeline_detail::ArgKind;
  std::vector<std::string> raw;
  {
    std::string cur;
    for (char c : text) {
      if (c == ';') {
        raw.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    raw.push_back(cur);
  }

  Pipeline p;
  for (std::size_t k = 0; k < raw.size(); ++k) {
    const std::size_t pos = k + 1;
    const std::string s = pipeline_detail::trim(raw[k]);
    if (s.empty())
      throw PipelineError(pos, raw.size() == 1 ? "empty pipeline" : "empty step");

    std::string name = s;
    std::string arg;
    if (const std::size_t colon = s.find(':'); colon != std::string::npos) {
      name = pipeline_detail::trim(s.substr(0, colon));
      arg = pipeline_detail::trim(s.substr(colon + 1));
      if (name.empty() || arg.empty())
        throw PipelineError(pos, "malformed step '" + s + "'");
    }

    const pipeline_detail::OpSpec* spec = pipeline_detail::find_op(name);
    if (!spec) throw PipelineError(pos, "unknown operator '" + name + "'");

    PipelineStep step;
    step.kind = spec->kind;
    step.input = spec->in;
    step.output = spec->out;
    switch (spec->arg) {
      case ArgKind::None:
        if (!arg.empty())
          throw PipelineError(pos, "operator '" + name + "' takes no argument");
        step.text = name;
        break;
      case ArgKind::OpenClose:
        if (arg == "1")
          step.half = false;
        else if (arg == "1/2")
          step.half = true;
        else if (arg.empty())
          throw PipelineError(pos, "operator '" + name + "' needs an argument (1 or 1/2)");
        else
          throw PipelineError(pos, "malformed argument '" + arg + "' (expected 1 or 1/2)");
        step.text = name + ":" + arg;
        break;
      case ArgKind::Lambda: {
        if (arg.empty())
          throw PipelineError(pos, "operator '" + name + "' needs a numeric argument");
        unsigned value = 0;
        const auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), value);
        if (ec != std::errc() || ptr != arg.data() + arg.size())
          throw PipelineError(
              pos, "malformed argument '" + arg + "' (expected a nonnegative integer)");
        step.lambda = value;
        step.text = name + ":" + std::to_string(value);
        break;
      }
    }

    if (!p.steps.empty() && p.steps.back().output != step.input)
      throw PipelineError(pos, "domain mismatch: '" + name + "' consumes " +
                                   std::string(domain_name(step.input)) + ", found " +
                                   std::string(domain_name(p.steps.back().output)));
    p.steps.push_back(std::move(step));
  }
  return p;
}

using Value = std::variant<VertexSet, EdgeSet, SubHypergraph>;

inline Domain domain_of(const Value& v) {
  if (std::holds_alternative<VertexSet>(v)) return Domain::VertexSet;
  if (std::holds_alternative<EdgeSet>(v)) return Domain::EdgeSet;
  return Domain::SubHypergraph;
}

inline const Hypergraph& value_graph(const Value& v) {
  return std::visit([](const auto& x) -> const Hypergraph& { return x.graph(); }, v);
}

inline Value apply_step(const PipelineStep& s, const Value& in) {
  switch (s.kind) {
    case OpKind::VDelta: return vertex_dilate_from_edges(std::get<EdgeSet>(in));
    case OpKind::VEps: return vertex_erode_from_edges(std::get<EdgeSet>(in));
    case OpKind::EDelta: return edge_dilate_from_vertices(std::get<VertexSet>(in));
    case OpKind::EEps: return edge_erode_from_vertices(std::get<VertexSet>(in));
    case OpKind::VertexDilate: return vertex_dilate(std::get<VertexSet>(in));
    case OpKind::VertexErode: return vertex_erode(std::get<VertexSet>(in));
    case OpKind::EdgeDilate: return edge_dilate(std::get<EdgeSet>(in));
    case OpKind::EdgeErode: return edge_erode(std::get<EdgeSet>(in));
    case OpKind::HgDilate: return hg_dilate(std::get<SubHypergraph>(in));
    case OpKind::HgErode: return hg_erode(std::get<SubHypergraph>(in));
    case OpKind::VOpen:
      return s.half ? vertex_open_half(std::get<VertexSet>(in))
                    : vertex_open_1(std::get<VertexSet>(in));
    case OpKind::VClose:
      return s.half ? vertex_close_half(std::get<VertexSet>(in))
                    : vertex_close_1(std::get<VertexSet>(in));
    case OpKind::EOpen:
      return s.half ? edge_open_half(std::get<EdgeSet>(in))
                    : edge_open_1(std::get<EdgeSet>(in));
    case OpKind::EClose:
      return s.half ? edge_close_half(std::get<EdgeSet>(in))
                    : edge_close_1(std::get<EdgeSet>(in));
    case OpKind::HgOpen:
      return s.half ? hg_open_half(std::get<SubHypergraph>(in))
                    : hg_open_1(std::get<SubHypergraph>(in));
    case OpKind::HgClose:
      return s.half ? hg_close_half(std::get<SubHypergraph>(in))
                    : hg_close_1(std::get<SubHypergraph>(in));
    case OpKind::HgGranuleOpen: return granule_open(std::get<SubHypergraph>(in), s.lambda);
    case OpKind::HgGranuleClose: return granule_close(std::get<SubHypergraph>(in), s.lambda);
    case OpKind::HgAsf: return asf(std::get<SubHypergraph>(in), s.lambda);
  }
  throw std::logic_error("unhandled operator kind");
}

struct RunResult {
  Value value;
  std::vector<std::string> trace;  // one line per executed step
};

namespace pipeline_detail {

inline std::string trace_line(std::size_t pos, const PipelineStep& s, const Value& out) {
  std::string line =
      "step " + std::to_string(pos) + " " + s.text + " -> " +
      std::string(domain_name(domain_of(out)));
  if (const auto* v = std::get_if<VertexSet>(&out)) {
    line += " |V|=" + std::to_string(v->count());
  } else if (const auto* e = std::get_if<EdgeSet>(&out)) {
    line += " |E|=" + std::to_string(e->count());
  } else {
    const auto& sub = std::get<SubHypergraph>(out);
    line += " |V|=" + std::to_string(sub.vertices().count()) +
            " |E|=" + std::to_string(sub.edges().count());
  }
  return line;
}

}  // namespace pipeline_detail

inline RunResult run_pipeline(const Hypergraph& h, Value input, const Pipeline& p) {
  if (p.steps.empty()) throw PipelineError(1, "empty pipeline");
  assert(&value_graph(input) == &h);
  (void)h;
  if (domain_of(input) != p.input())
    throw PipelineError(1, "pipeline consumes " + std::string(domain_name(p.input())) +
                               ", input is " +
                               std::string(domain_name(domain_of(input))));
  RunResult r{std::move(input), {}};
  for (std::size_t k = 0; k < p.steps.size(); ++k) {
    r.value = apply_step(p.steps[k], r.value);
    r.trace.push_back(pipeline_detail::trace_line(k + 1, p.steps[k], r.value));
  }
  return r;
}

/// Builds the starting value a pipeline expects from a parsed set document.
inline Value input_from_document(const SetDocument& doc, Domain expected) {
  switch (expected) {
    case Domain::VertexSet:
      if (!doc.vertices || doc.edges)
        throw std::invalid_argument(
            "pipeline consumes vertex-set; input document must be a single vset line");
      return *doc.vertices;
    case Domain::EdgeSet:
      if (!doc.edges || doc.vertices)
        throw std::invalid_argument(
            "pipeline consumes edge-set; input document must be a single eset line");
      return *doc.edges;
    case Domain::SubHypergraph:
      if (!doc.vertices || !doc.edges)
        throw std::invalid_argument(
            "pipeline consumes subhypergraph; input document needs vset and eset lines");
      return SubHypergraph(*doc.vertices, *doc.edges);
  }
  throw std::logic_error("unhandled domain");
}

/// Result rendering: single-line subset documents for the set domains, the
/// two-line document for subhypergraphs.
inline std::string serialize_value(const Value& v) {
  if (const auto* x = std::get_if<VertexSet>(&v)) return subset_line(*x) + "\n";
  if (const auto* x = std::get_if<EdgeSet>(&v)) return subset_line(*x) + "\n";
  return serialize_subhypergraph_document(std::get<SubHypergraph>(v));
}

}  // namespace hgmorph

#endif  // HGMORPH_PIPELINE_HPP
