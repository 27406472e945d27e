#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>

#include "hgmorph/hgmorph.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string trimmed(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

hgmorph::Hypergraph load_graph(const std::string& path) {
  hgmorph::Hypergraph h = hgmorph::parse_hypergraph(read_file(path));
  if (h.empty_edge_count() > 0)
    std::cerr << "warning: graph has " << h.empty_edge_count()
              << " empty hyperedge(s)\n";
  return h;
}

int do_run(const std::string& graph_path, const std::string& input_path,
           const std::string& pipeline_text, const std::string& out_path, bool trace) {
  const hgmorph::Hypergraph h = load_graph(graph_path);
  const hgmorph::Pipeline pipeline = hgmorph::parse_pipeline(pipeline_text);
  const hgmorph::SetDocument doc =
      hgmorph::parse_set_document(read_file(input_path), h);
  hgmorph::Value start = hgmorph::input_from_document(doc, pipeline.input());
  const hgmorph::RunResult result = hgmorph::run_pipeline(h, std::move(start), pipeline);
  if (trace)
    for (const std::string& line : result.trace) std::cout << line << "\n";
  write_file(out_path, hgmorph::serialize_value(result.value));
  return 0;
}

int do_check_laws(const std::string& graph_path, const std::string& laws_csv) {
  const hgmorph::Hypergraph h = load_graph(graph_path);
  const std::vector<std::string_view> known = hgmorph::laws::law_names();

  std::vector<std::string> names;
  if (laws_csv.empty()) {
    names.assign(known.begin(), known.end());
  } else {
    std::string cur;
    for (char c : laws_csv + ",") {
      if (c != ',') {
        cur += c;
        continue;
      }
      const std::string name = trimmed(cur);
      cur.clear();
      if (name.empty()) throw std::invalid_argument("empty law name in --laws");
      names.push_back(name);
    }
    for (const std::string& n : names)
      if (std::find(known.begin(), known.end(), n) == known.end())
        throw std::invalid_argument("unknown law '" + n + "'");
  }

  const std::string instance = std::filesystem::path(graph_path).stem().string();
  bool failed = false;
  for (const std::string& n : names) {
    const hgmorph::laws::LawReport report = hgmorph::laws::check_law(n, h, instance);
    for (const std::string& line : report.to_lines()) std::cout << line << "\n";
    failed = failed || !report.ok();
  }
  return failed ? 1 : 0;
}

int do_gen_grid(unsigned width, unsigned height, const std::string& out_path) {
  write_file(out_path, hgmorph::serialize_hypergraph(hgmorph::gen_grid(width, height)));
  return 0;
}

int do_export_dot(const std::string& graph_path, const std::string& highlight_path) {
  const hgmorph::Hypergraph h = load_graph(graph_path);
  std::optional<hgmorph::SubHypergraph> highlight;
  if (!highlight_path.empty())
    highlight = hgmorph::parse_subhypergraph_document(read_file(highlight_path), h);
  std::cout << hgmorph::export_dot(h, highlight);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"morphological operators on hypergraphs"};
  app.require_subcommand(1);

  std::string graph_path;
  std::string input_path;
  std::string pipeline_text;
  std::string out_path;
  std::string laws_csv;
  std::string highlight_path;
  bool trace = false;
  unsigned width = 0;
  unsigned height = 0;

  CLI::App* run = app.add_subcommand("run", "Apply an operator pipeline to an input set");
  run->add_option("--graph", graph_path, "hypergraph file")->required();
  run->add_option("--input", input_path, "input subset document")->required();
  run->add_option("--pipeline", pipeline_text, "pipeline expression, e.g. 'edelta; veps'")
      ->required();
  run->add_option("--out", out_path, "output file for the result document")->required();
  run->add_flag("--trace", trace, "print a per-step trace to stdout");

  CLI::App* check = app.add_subcommand("check-laws", "Run algebraic law checks");
  check->add_option("--graph", graph_path, "hypergraph file")->required();
  check->add_option("--laws", laws_csv, "comma-separated law names (default: all)");

  CLI::App* gen = app.add_subcommand("gen", "Generate hypergraphs");
  gen->require_subcommand(1);
  CLI::App* grid = gen->add_subcommand("grid", "Grid with one cross4 hyperedge per interior cell");
  grid->add_option("--width", width, "grid width")->required();
  grid->add_option("--height", height, "grid height")->required();
  grid->add_option("--out", out_path, "output hypergraph file")->required();

  CLI::App* dot = app.add_subcommand("export-dot", "Render Graphviz DOT to stdout");
  dot->add_option("--graph", graph_path, "hypergraph file")->required();
  dot->add_option("--highlight", highlight_path, "subhypergraph document to color");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (run->parsed())
      return do_run(graph_path, input_path, pipeline_text, out_path, trace);
    if (check->parsed()) return do_check_laws(graph_path, laws_csv);
    if (grid->parsed()) return do_gen_grid(width, height, out_path);
    if (dot->parsed()) return do_export_dot(graph_path, highlight_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
