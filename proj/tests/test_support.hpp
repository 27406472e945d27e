#ifndef HGMORPH_TESTS_TEST_SUPPORT_HPP
#define HGMORPH_TESTS_TEST_SUPPORT_HPP

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <string>
#include <unistd.h>

#include "hgmorph/hgmorph.hpp"

namespace hgmorph::testing {

// The three instances used throughout the suite: a chain of three
// overlapping edges with pendant vertices, a single edge plus an isolated
// vertex, and a triangle of 2-edges (every vertex covered twice).
inline Hypergraph make_h0() {
  return Hypergraph::from_indices(5, {{0, 1}, {1, 2, 3}, {3, 4}});
}

inline Hypergraph make_h1() { return Hypergraph::from_indices(3, {{0, 1}}); }

inline Hypergraph make_h2() {
  return Hypergraph::from_indices(3, {{0, 1}, {1, 2}, {0, 2}});
}

inline VertexSet vs(const Hypergraph& h, std::initializer_list<std::size_t> m) {
  return VertexSet::of(h, m);
}

inline EdgeSet es(const Hypergraph& h, std::initializer_list<std::size_t> m) {
  return EdgeSet::of(h, m);
}

inline SubHypergraph sub(const Hypergraph& h, std::initializer_list<std::size_t> v,
                         std::initializer_list<std::size_t> e) {
  return SubHypergraph(VertexSet::of(h, v), EdgeSet::of(h, e));
}

struct CommandResult {
  int exit_code = -1;
  std::string output;
};

// Runs a shell command and captures stdout. Callers that need stderr
// redirect it within the command string.
inline CommandResult run_command(const std::string& cmd) {
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {};
  CommandResult result;
  std::array<char, 4096> buf;
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0)
    result.output.append(buf.data(), n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

// Per-process scratch directory; ctest may run binaries concurrently.
inline std::filesystem::path scratch_dir() {
  auto dir = std::filesystem::temp_directory_path() /
             ("hgmorph_test_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  return dir;
}

inline std::filesystem::path write_scratch(const std::string& name,
                                           const std::string& content) {
  auto path = scratch_dir() / name;
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path;
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

inline const std::string kH0Text =
    "hg v1\n"
    "vertex 0\n"
    "vertex 1\n"
    "vertex 2\n"
    "vertex 3\n"
    "vertex 4\n"
    "edge e0 0 1\n"
    "edge e1 1 2 3\n"
    "edge e2 3 4\n";

inline const std::string kH1Text =
    "hg v1\n"
    "vertex 0\n"
    "vertex 1\n"
    "vertex 2\n"
    "edge e0 0 1\n";

inline const std::string kH2Text =
    "hg v1\n"
    "vertex 0\n"
    "vertex 1\n"
    "vertex 2\n"
    "edge e0 0 1\n"
    "edge e1 1 2\n"
    "edge e2 0 2\n";

}  // namespace hgmorph::testing

#endif  // HGMORPH_TESTS_TEST_SUPPORT_HPP
