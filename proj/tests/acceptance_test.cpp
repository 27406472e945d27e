// End-to-end acceptance gate. Each test covers one release criterion and
// prints a single [ACCEPTANCE] PASS/FAIL line; ctest output doubles as the
// checklist.

#include <gtest/gtest.h>

#include <chrono>
#include <cstdio>
#include <iterator>
#include <string>
#include <string_view>
#include <vector>

#include "hgmorph/hgmorph.hpp"
#include "test_support.hpp"

namespace hgmorph {
namespace {

using Clock = std::chrono::steady_clock;

void report(int number, const std::string& label, bool ok) {
  std::printf("[ACCEPTANCE] %d %s: %s\n", number, label.c_str(),
              ok ? "PASS" : "FAIL");
  std::fflush(stdout);
  EXPECT_TRUE(ok) << "criterion " << number << " (" << label << ")";
}

struct Instance {
  Hypergraph graph;
  std::string name;
};

std::vector<Instance> full_suite() {
  std::vector<Instance> out;
  out.push_back({testing::make_h0(), "H0"});
  out.push_back({testing::make_h1(), "H1"});
  out.push_back({testing::make_h2(), "H2"});
  auto random = laws::random_suite(50);
  for (std::size_t i = 0; i < random.size(); ++i)
    out.push_back({std::move(random[i]), "random-" + std::to_string(i)});
  return out;
}

bool run_laws(const std::vector<Instance>& instances,
              const std::vector<std::string_view>& law_list) {
  bool ok = true;
  for (const Instance& inst : instances) {
    for (std::string_view law : law_list) {
      laws::LawReport r = laws::check_law(law, inst.graph, inst.name);
      if (!r.ok()) {
        ok = false;
        for (const std::string& line : r.to_lines())
          std::printf("[info] %s\n", line.c_str());
      }
    }
  }
  return ok;
}

TEST(Acceptance, Criterion1AdjunctionSuite) {
  const auto t0 = Clock::now();
  bool ok = run_laws(full_suite(),
                     {"adjunction-eeps-vdelta", "adjunction-veps-edelta",
                      "adjunction-vertex", "adjunction-edge", "adjunction-hg"});
  const double seconds =
      std::chrono::duration<double>(Clock::now() - t0).count();
  std::printf("[info] adjunction suite over 53 instances took %.2f s\n", seconds);
  ok = ok && seconds < 60.0;
  report(1, "adjunction suite, 53 instances, under 60 s", ok);
}

TEST(Acceptance, Criterion2DualitySuite) {
  bool ok = run_laws(full_suite(), {"duality-eeps-edelta", "duality-veps-vdelta"});
  report(2, "complement duality on both operator pairs", ok);
}

TEST(Acceptance, Criterion3OracleEquivalence) {
  bool ok = run_laws(full_suite(),
                     {"oracle-vdelta", "oracle-veps", "oracle-edelta", "oracle-eeps",
                      "formula-vertex-dilate", "formula-vertex-erode",
                      "formula-edge-dilate", "formula-edge-erode",
                      "formula-half-open-vertex", "formula-half-close-edge"});
  report(3, "induced, closed, and composed forms agree everywhere", ok);
}

std::vector<Instance> canonical_suite() {
  std::vector<Instance> out;
  out.push_back({testing::make_h0(), "H0"});
  out.push_back({testing::make_h1(), "H1"});
  out.push_back({testing::make_h2(), "H2"});
  return out;
}

TEST(Acceptance, Criterion4FilterAxioms) {
  bool ok = run_laws(canonical_suite(),
                     {"filter-axioms-vertex", "filter-axioms-edge",
                      "filter-axioms-hg", "closedness-hg"});
  report(4, "all twelve filters satisfy the morphological axioms", ok);
}

TEST(Acceptance, Criterion5OrderingChains) {
  bool ok = run_laws(canonical_suite(),
                     {"ordering-chain-vertex", "ordering-chain-edge",
                      "ordering-chain-hg"});
  report(5, "opening/closing ordering chains on all three lattices", ok);
}

TEST(Acceptance, Criterion6Granulometry) {
  std::vector<Instance> instances;
  instances.push_back({testing::make_h0(), "H0"});
  instances.push_back({testing::make_h2(), "H2"});
  bool ok = run_laws(instances, {"granulometry-nesting"});
  report(6, "granulometry nesting and per-index idempotence, indices 0..6", ok);
}

TEST(Acceptance, Criterion7AlternatingFilters) {
  bool ok = run_laws(canonical_suite(), {"asf-properties"});

  // Absorption between different levels is an open question, so it is
  // observed and reported here, never asserted.
  Hypergraph h = testing::make_h0();
  unsigned held = 0;
  unsigned total = 0;
  for (unsigned l = 1; l <= 4; ++l) {
    for (unsigned m = l; m <= 4; ++m) {
      bool absorbed = true;
      oracle::for_each_subhypergraph(h, [&](const SubHypergraph& s) {
        if (!(asf(asf(s, GranulometryIndex{l}), GranulometryIndex{m}) ==
              asf(s, GranulometryIndex{m})))
          absorbed = false;
      });
      ++total;
      if (absorbed) ++held;
    }
  }
  std::printf("[info] absorption (higher level after lower) held on %u of %u "
              "level pairs on H0; observational only\n",
              held, total);
  report(7, "alternating filters: identity at zero, idempotent, increasing", ok);
}

TEST(Acceptance, Criterion8LinearTimeContract) {
  struct Sample {
    std::size_t side = 0;
    std::size_t incidence = 0;
    double per_call_ns[4] = {0, 0, 0, 0};
  };
  static const char* const kOpNames[4] = {"vdelta", "edelta", "veps", "eeps"};

  std::vector<Sample> samples;
  std::size_t sink = 0;
  for (std::size_t side = 100; side <= 1000; side += 100) {
    Hypergraph g = gen_grid(side, side);
    Sample s;
    s.side = side;
    s.incidence = g.incidence_size();

    EdgeSet eset = EdgeSet::empty(g);
    for (std::size_t i = 0; i < g.edge_count(); i += 2) eset.add(i);
    VertexSet vset = VertexSet::empty(g);
    for (std::size_t x = 0; x < g.vertex_count(); x += 2) vset.add(x);

    auto measure = [&](auto&& op) {
      // Repeat until the clock has something to chew on; two rounds, keep
      // the faster, so one scheduling hiccup cannot fake super-linearity.
      double best = 1e300;
      for (int round = 0; round < 2; ++round) {
        std::size_t reps = 1;
        while (true) {
          const auto t0 = Clock::now();
          for (std::size_t r = 0; r < reps; ++r) sink += op();
          const double ns =
              std::chrono::duration<double, std::nano>(Clock::now() - t0).count();
          if (ns >= 25e6) {
            best = std::min(best, ns / static_cast<double>(reps));
            break;
          }
          reps *= 4;
        }
      }
      return best;
    };

    s.per_call_ns[0] = measure([&] { return vertex_dilate_from_edges(eset).count(); });
    s.per_call_ns[1] = measure([&] { return edge_dilate_from_vertices(vset).count(); });
    s.per_call_ns[2] = measure([&] { return vertex_erode_from_edges(eset).count(); });
    s.per_call_ns[3] = measure([&] { return edge_erode_from_vertices(vset).count(); });
    std::printf("[info] grid %4zux%-4zu incidence %9zu ns/call %10.0f %10.0f %10.0f %10.0f\n",
                side, side, s.incidence, s.per_call_ns[0], s.per_call_ns[1],
                s.per_call_ns[2], s.per_call_ns[3]);
    samples.push_back(s);
  }

  bool ok = sink != 0;
  for (std::size_t k = 1; k < samples.size(); ++k) {
    const double incidence_ratio = static_cast<double>(samples[k].incidence) /
                                   static_cast<double>(samples[k - 1].incidence);
    for (int op = 0; op < 4; ++op) {
      const double time_ratio =
          samples[k].per_call_ns[op] / samples[k - 1].per_call_ns[op];
      if (time_ratio > 3.0 * incidence_ratio) {
        ok = false;
        std::printf("[info] %s grew %.2fx from %zu to %zu against an incidence "
                    "ratio of %.2fx\n",
                    kOpNames[op], time_ratio, samples[k - 1].side, samples[k].side,
                    incidence_ratio);
      }
    }
  }
  report(8, "correspondence operators scale with incidence size", ok);
}

#ifdef HGMORPH_CLI_PATH
TEST(Acceptance, Criterion9CliRegression) {
  bool ok = true;

  // Round-trip: canonical documents reparse and reserialize byte for byte.
  for (const std::string& text :
       {testing::kH0Text, testing::kH1Text, testing::kH2Text})
    ok = ok && serialize_hypergraph(parse_hypergraph(text)) == text;

  const std::string cli = HGMORPH_CLI_PATH;
  const auto dir = testing::scratch_dir();
  const std::string graph = testing::write_scratch("accept_h0.hg", testing::kH0Text).string();

  struct PipelineCase {
    const char* input;
    const char* pipeline;
    const char* expected;
  };
  const PipelineCase cases[] = {
      {"vset 3\n", "edelta; veps", "vset 2 3 4\n"},
      {"vset\n", "vertex-dilate", "vset\n"},
      {"vset 0 1 2 3 4\neset e0 e1 e2\n", "hg-open:1",
       "vset 0 1 2 3 4\neset e0 e1 e2\n"},
  };
  for (std::size_t k = 0; k < std::size(cases); ++k) {
    const std::string in =
        testing::write_scratch("accept_in" + std::to_string(k) + ".doc",
                               cases[k].input)
            .string();
    const std::string out = (dir / ("accept_out" + std::to_string(k) + ".doc")).string();
    const std::string cmd = cli + " run --graph " + graph + " --input " + in +
                            " --pipeline '" + cases[k].pipeline + "' --out " + out +
                            " --trace";
    testing::CommandResult first = testing::run_command(cmd);
    testing::CommandResult second = testing::run_command(cmd);
    const std::string produced = testing::read_file(out);
    if (first.exit_code != 0 || produced != cases[k].expected ||
        first.output != second.output || first.output.empty()) {
      ok = false;
      std::printf("[info] pipeline '%s' exit=%d produced %s",
                  cases[k].pipeline, first.exit_code, produced.c_str());
    }
  }

  // The generator reproduces its golden document, and the law runner
  // accepts it, exercising parse/serialize through the binary as well.
  const std::string grid_out = (dir / "accept_grid.hg").string();
  testing::CommandResult gen = testing::run_command(
      cli + " gen grid --width 3 --height 3 --out " + grid_out);
  ok = ok && gen.exit_code == 0;
  ok = ok && testing::read_file(grid_out) == serialize_hypergraph(gen_grid(3, 3));
  testing::CommandResult laws_run = testing::run_command(
      cli + " check-laws --graph " + graph +
      " --laws adjunction-eeps-vdelta,ordering-chain-hg");
  ok = ok && laws_run.exit_code == 0;
  ok = ok &&
       laws_run.output.find("LAW adjunction-eeps-vdelta INSTANCE accept_h0 PASS 256") !=
           std::string::npos;

  report(9, "CLI round-trips canonical instances and reproduces goldens", ok);
}
#endif

}  // namespace
}  // namespace hgmorph
