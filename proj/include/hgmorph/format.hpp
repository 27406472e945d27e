#ifndef HGMORPH_FORMAT_HPP
#define HGMORPH_FORMAT_HPP

#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hgmorph/hypergraph.hpp"

namespace hgmorph {

/// Error raised while reading a text document; line numbers are 1-based and
/// count every physical line, comments included.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

namespace format_detail {

inline std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

/// Calls fn(line_number, tokens) for every non-blank, non-comment line.
template <class Fn>
std::size_t for_each_significant_line(std::string_view text, Fn&& fn) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::vector<std::string> toks = tokens(line);
    if (toks.empty() || toks.front().front() == '#') continue;
    fn(lineno, toks);
  }
  return lineno;
}

}  // namespace format_detail

// Hypergraph documents: line-oriented UTF-8. Full-line `#` comments and
// blank lines are ignored. The first significant line is the header
// `hg v1`, then `vertex <label>` lines, then `edge <id> <label>...` lines.
// Labels and ids are whitespace-free tokens.

inline Hypergraph parse_hypergraph(std::string_view text) {
  bool saw_header = false;
  bool saw_edge = false;
  std::vector<std::string> labels;
  std::unordered_map<std::string, VertexId> vertex_by_label;
  std::vector<std::string> edge_ids;
  std::unordered_map<std::string, EdgeId> edge_by_id;
  std::vector<std::vector<VertexId>> edges;

  std::size_t last_line = format_detail::for_each_significant_line(
      text, [&](std::size_t lineno, const std::vector<std::string>& toks) {
        if (!saw_header) {
          if (toks.size() == 2 && toks[0] == "hg" && toks[1] == "v1") {
            saw_header = true;
            return;
          }
          throw ParseError(lineno, "expected header 'hg v1'");
        }
        if (toks[0] == "vertex") {
          if (saw_edge) throw ParseError(lineno, "vertex line after edge lines");
          if (toks.size() != 2) throw ParseError(lineno, "expected 'vertex <label>'");
          if (!vertex_by_label.emplace(toks[1], static_cast<VertexId>(labels.size())).second)
            throw ParseError(lineno, "duplicate vertex label '" + toks[1] + "'");
          labels.push_back(toks[1]);
        } else if (toks[0] == "edge") {
          if (toks.size() < 2) throw ParseError(lineno, "expected 'edge <id> <label>...'");
          saw_edge = true;
          if (!edge_by_id.emplace(toks[1], static_cast<EdgeId>(edge_ids.size())).second)
            throw ParseError(lineno, "duplicate edge id '" + toks[1] + "'");
          edge_ids.push_back(toks[1]);
          std::vector<VertexId> members;
          for (std::size_t k = 2; k < toks.size(); ++k) {
            auto it = vertex_by_label.find(toks[k]);
            if (it == vertex_by_label.end())
              throw ParseError(lineno, "unknown vertex '" + toks[k] + "'");
            members.push_back(it->second);
          }
          edges.push_back(std::move(members));
        } else {
          throw ParseError(lineno, "unknown directive '" + toks[0] + "'");
        }
      });

  if (!saw_header) throw ParseError(last_line, "missing header 'hg v1'");
  return Hypergraph::from_indices(labels.size(), edges, labels, edge_ids);
}

/// Canonical form: header, vertices in index order, edges in index order
/// with members sorted by vertex index. parse(serialize(h)) == h, and
/// serializing a parsed canonical document reproduces it byte for byte.
inline std::string serialize_hypergraph(const Hypergraph& h) {
  std::string out = "hg v1\n";
  for (std::size_t x = 0; x < h.vertex_count(); ++x) {
    out += "vertex ";
    out += h.vertex_label(x);
    out += '\n';
  }
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    out += "edge ";
    out += h.edge_id(i);
    auto [vb, ve] = h.edge_vertices(static_cast<EdgeId>(i));
    for (const VertexId* q = vb; q != ve; ++q) {
      out += ' ';
      out += h.vertex_label(*q);
    }
    out += '\n';
  }
  return out;
}

// Subset documents: `vset <label>...` and `eset <id>...` lines, one set per
// line, at most one line of each kind. A document carrying both lines
// denotes a subhypergraph candidate.

struct SetDocument {
  std::optional<VertexSet> vertices;
  std::optional<EdgeSet> edges;
};

inline SetDocument parse_set_document(std::string_view text, const Hypergraph& h) {
  SetDocument doc;
  std::size_t last_line = format_detail::for_each_significant_line(
      text, [&](std::size_t lineno, const std::vector<std::string>& toks) {
        if (toks[0] == "vset") {
          if (doc.vertices) throw ParseError(lineno, "duplicate vset line");
          VertexSet s = VertexSet::empty(h);
          for (std::size_t k = 1; k < toks.size(); ++k) {
            std::size_t x = h.find_vertex(toks[k]);
            if (x == h.vertex_count())
              throw ParseError(lineno, "unknown vertex '" + toks[k] + "'");
            s.add(x);
          }
          doc.vertices = std::move(s);
        } else if (toks[0] == "eset") {
          if (doc.edges) throw ParseError(lineno, "duplicate eset line");
          EdgeSet s = EdgeSet::empty(h);
          for (std::size_t k = 1; k < toks.size(); ++k) {
            std::size_t i = h.find_edge(toks[k]);
            if (i == h.edge_count())
              throw ParseError(lineno, "unknown edge '" + toks[k] + "'");
            s.add(i);
          }
          doc.edges = std::move(s);
        } else {
          throw ParseError(lineno, "expected 'vset' or 'eset' line");
        }
      });
  if (!doc.vertices && !doc.edges)
    throw ParseError(last_line, "empty subset document");
  return doc;
}

/// Single-line rendering without the trailing newline, for embedding in
/// reports; labels appear in index order.
inline std::string subset_line(const VertexSet& s) {
  std::string out = "vset";
  s.for_each([&](std::size_t x) {
    out += ' ';
    out += s.graph().vertex_label(x);
  });
  return out;
}

inline std::string subset_line(const EdgeSet& s) {
  std::string out = "eset";
  s.for_each([&](std::size_t i) {
    out += ' ';
    out += s.graph().edge_id(i);
  });
  return out;
}

inline std::string serialize_set_document(const SetDocument& doc) {
  std::string out;
  if (doc.vertices) out += subset_line(*doc.vertices) + "\n";
  if (doc.edges) out += subset_line(*doc.edges) + "\n";
  return out;
}

/// Two-line document carrying both parts; the cover condition is validated
/// by the SubHypergraph constructor.
inline SubHypergraph parse_subhypergraph_document(std::string_view text,
                                                  const Hypergraph& h) {
  SetDocument doc = parse_set_document(text, h);
  if (!doc.vertices || !doc.edges)
    throw ParseError(1, "subhypergraph document needs both 'vset' and 'eset' lines");
  return SubHypergraph(*doc.vertices, *doc.edges);
}

inline std::string serialize_subhypergraph_document(const SubHypergraph& s) {
  return subset_line(s.vertices()) + "\n" + subset_line(s.edges()) + "\n";
}

}  // namespace hgmorph

#endif  // HGMORPH_FORMAT_HPP
