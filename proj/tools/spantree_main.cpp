// spantree: build, recognize, count, and sample spanning trees of threshold
// and difference graphs.
//
// Exit codes: 0 success, 1 domain refusal (not-threshold, disconnected,
// enumeration limit), 2 usage or input-format error.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "spantree/bijection.hpp"
#include "spantree/counting.hpp"
#include "spantree/difference.hpp"
#include "spantree/io.hpp"
#include "spantree/rng.hpp"
#include "spantree/threshold.hpp"

namespace {

using namespace spantree;

constexpr int kExitRefusal = 1;
constexpr int kExitUsage = 2;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<std::string> nonempty_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream stream(text);
  for (std::string line; std::getline(stream, line);) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
      line.pop_back();
    }
    std::size_t start = 0;
    while (start < line.size() && (line[start] == ' ' || line[start] == '\t')) ++start;
    if (start < line.size()) lines.push_back(line.substr(start));
  }
  return lines;
}

std::string join_spectrum(const std::vector<std::size_t>& spectrum) {
  std::string out;
  for (std::size_t i = 0; i < spectrum.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(spectrum[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// count

struct CountOptions {
  std::string seq;
  std::string seq_file;
  std::string bipartite_seq;
  std::string edges_file;
  std::string bipartite_edges_file;
  std::string method = "formula";
  bool check_all = false;
  bool record = false;
  std::size_t limit = 1'000'000;
};

struct CountSubject {
  Graph graph;                              // as given
  std::optional<ThresholdGraph> threshold;  // set when the input is threshold
  std::optional<DifferenceGraph> difference;
};

std::optional<BigInt> count_by_enumeration(const Graph& g, std::size_t limit, std::string* error) {
  const SpanningTreeList listing = enumerate_spanning_trees(g, limit);
  if (!listing.complete) {
    *error = "enumeration limit of " + std::to_string(limit) + " trees exceeded";
    return std::nullopt;
  }
  return BigInt(static_cast<unsigned long>(listing.trees.size()));
}

int count_one(const CountSubject& subject, const CountOptions& opt) {
  std::vector<std::pair<std::string, BigInt>> results;

  auto add_formula = [&]() -> bool {
    if (subject.threshold) {
      results.emplace_back("formula", tau_threshold_formula(*subject.threshold));
      return true;
    }
    if (subject.difference) {
      results.emplace_back("formula", tau_difference(*subject.difference));
      return true;
    }
    return false;
  };
  auto add_uz = [&]() -> bool {
    if (subject.threshold) {
      results.emplace_back("uz", tau_threshold_uz(*subject.threshold));
      return true;
    }
    if (subject.difference) {
      results.emplace_back("uz", tau_difference(*subject.difference));
      return true;
    }
    return false;
  };

  if (opt.check_all) {
    add_formula();
    add_uz();
    results.emplace_back("kirchhoff", tau_kirchhoff(subject.graph));
    if (subject.graph.vertex_count() <= 8) {
      std::string error;
      if (auto value = count_by_enumeration(subject.graph, opt.limit, &error)) {
        results.emplace_back("enumerate", *value);
      } else {
        std::cerr << "spantree: " << error << "\n";
        return kExitRefusal;
      }
    }
    for (const auto& [name, value] : results) {
      if (value != results.front().second) {
        std::cerr << "spantree: counting methods disagree (" << results.front().first << "="
                  << results.front().second.get_str() << ", " << name << "=" << value.get_str()
                  << ")\n";
        return kExitRefusal;
      }
    }
  } else if (opt.method == "formula") {
    if (!add_formula()) {
      std::cerr << "spantree: not-threshold (product formulas need a threshold or difference "
                   "graph; use --method kirchhoff)\n";
      return kExitRefusal;
    }
  } else if (opt.method == "uz") {
    if (!add_uz()) {
      std::cerr << "spantree: not-threshold (product formulas need a threshold or difference "
                   "graph; use --method kirchhoff)\n";
      return kExitRefusal;
    }
  } else if (opt.method == "kirchhoff") {
    results.emplace_back("kirchhoff", tau_kirchhoff(subject.graph));
  } else {  // enumerate
    std::string error;
    if (auto value = count_by_enumeration(subject.graph, opt.limit, &error)) {
      results.emplace_back("enumerate", *value);
    } else {
      std::cerr << "spantree: " << error << "\n";
      return kExitRefusal;
    }
  }

  const BigInt& tau = results.front().second;
  if (opt.record) {
    std::cout << "n=" << subject.graph.vertex_count() << "\n";
    std::cout << "edges=" << subject.graph.edge_count() << "\n";
    std::cout << "tau=" << tau.get_str() << "\n";
    if (subject.threshold) {
      std::cout << "merris_spectrum=" << join_spectrum(merris_spectrum(*subject.threshold))
                << "\n";
    }
    std::cout << "method=" << (opt.check_all ? std::string("check-all") : opt.method) << "\n";
  } else {
    std::cout << tau.get_str() << "\n";
  }
  return 0;
}

int run_count(const CountOptions& opt) {
  const int sources = !opt.seq.empty() + !opt.seq_file.empty() + !opt.bipartite_seq.empty() +
                      !opt.edges_file.empty() + !opt.bipartite_edges_file.empty();
  if (sources != 1) {
    std::cerr << "spantree: count needs exactly one of --seq, --seq-file, --bipartite-seq, "
                 "--edges, --bipartite-edges\n";
    return kExitUsage;
  }

  std::vector<CountSubject> subjects;
  if (!opt.seq.empty() || !opt.seq_file.empty()) {
    std::vector<std::string> specs =
        opt.seq.empty() ? nonempty_lines(slurp(opt.seq_file)) : std::vector<std::string>{opt.seq};
    if (specs.empty()) {
      std::cerr << "spantree: no sequences found in " << opt.seq_file << "\n";
      return kExitUsage;
    }
    for (const std::string& spec : specs) {
      ThresholdGraph t = build_threshold(CreationSequence::parse(spec));
      Graph g = t.graph();
      subjects.push_back(CountSubject{std::move(g), std::move(t), std::nullopt});
    }
  } else if (!opt.bipartite_seq.empty()) {
    DifferenceGraph h = build_difference(BipartiteCreationSequence::parse(opt.bipartite_seq));
    Graph g = h.graph();
    subjects.push_back(CountSubject{std::move(g), std::nullopt, std::move(h)});
  } else if (!opt.edges_file.empty()) {
    Graph g = parse_edge_list(slurp(opt.edges_file));
    std::optional<ThresholdGraph> recognized;
    if (auto result = recognize_threshold(g)) recognized = build_threshold(result->sequence);
    subjects.push_back(CountSubject{std::move(g), std::move(recognized), std::nullopt});
  } else {
    BipartiteEdgeList parsed = parse_bipartite_edge_list(slurp(opt.bipartite_edges_file));
    std::vector<VertexId> x(parsed.x_count);
    std::vector<VertexId> y(parsed.y_count);
    for (std::size_t i = 0; i < parsed.x_count; ++i) x[i] = i;
    for (std::size_t i = 0; i < parsed.y_count; ++i) y[i] = parsed.x_count + i;
    std::optional<DifferenceGraph> recognized;
    if (auto result = recognize_difference(parsed.graph, x, y)) {
      recognized = build_difference(result->sequence);
    }
    subjects.push_back(CountSubject{std::move(parsed.graph), std::nullopt, std::move(recognized)});
  }

  for (std::size_t i = 0; i < subjects.size(); ++i) {
    if (opt.record && i > 0) std::cout << "\n";
    if (const int code = count_one(subjects[i], opt); code != 0) return code;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// spectrum

int run_spectrum(const std::string& seq, const std::string& edges_file, bool verify) {
  if (seq.empty() == edges_file.empty()) {
    std::cerr << "spantree: spectrum needs exactly one of --seq, --edges\n";
    return kExitUsage;
  }
  std::optional<ThresholdGraph> t;
  if (!seq.empty()) {
    t = build_threshold(CreationSequence::parse(seq));
  } else {
    const Graph g = parse_edge_list(slurp(edges_file));
    const auto result = recognize_threshold(g);
    if (!result) {
      std::cerr << "spantree: not-threshold\n";
      return kExitRefusal;
    }
    t = build_threshold(result->sequence);
  }
  std::cout << join_spectrum(merris_spectrum(*t)) << "\n";
  if (verify) {
    if (!verify_merris(*t)) {
      std::cerr << "spantree: verification-failed\n";
      return kExitRefusal;
    }
    std::cout << "verified\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// sample

struct SampleOptions {
  std::string seq;
  std::string bipartite_seq;
  std::string edges_file;
  std::string bipartite_edges_file;
  std::uint64_t seed = 0;
  std::size_t count = 1;
  std::string format = "edges";
};

int run_sample(const SampleOptions& opt) {
  const int sources = !opt.seq.empty() + !opt.bipartite_seq.empty() + !opt.edges_file.empty() +
                      !opt.bipartite_edges_file.empty();
  if (sources != 1) {
    std::cerr << "spantree: sample needs exactly one of --seq, --bipartite-seq, --edges, "
                 "--bipartite-edges\n";
    return kExitUsage;
  }

  std::optional<ThresholdGraph> threshold;
  std::optional<DifferenceGraph> difference;
  std::vector<VertexId> to_original;  // creation index -> original id
  std::size_t n = 0;

  if (!opt.seq.empty()) {
    threshold = build_threshold(CreationSequence::parse(opt.seq));
    n = threshold->vertex_count();
  } else if (!opt.bipartite_seq.empty()) {
    difference = build_difference(BipartiteCreationSequence::parse(opt.bipartite_seq));
    n = difference->vertex_count();
  } else if (!opt.edges_file.empty()) {
    const Graph g = parse_edge_list(slurp(opt.edges_file));
    const auto result = recognize_threshold(g);
    if (!result) {
      std::cerr << "spantree: not-threshold\n";
      return kExitRefusal;
    }
    threshold = build_threshold(result->sequence);
    to_original = result->creation_order;
    n = g.vertex_count();
  } else {
    BipartiteEdgeList parsed = parse_bipartite_edge_list(slurp(opt.bipartite_edges_file));
    std::vector<VertexId> x(parsed.x_count);
    std::vector<VertexId> y(parsed.y_count);
    for (std::size_t i = 0; i < parsed.x_count; ++i) x[i] = i;
    for (std::size_t i = 0; i < parsed.y_count; ++i) y[i] = parsed.x_count + i;
    const auto result = recognize_difference(parsed.graph, x, y);
    if (!result) {
      std::cerr << "spantree: not-difference\n";
      return kExitRefusal;
    }
    difference = build_difference(result->sequence);
    to_original = result->creation_order;
    n = parsed.graph.vertex_count();
  }

  const bool connected = threshold ? threshold->is_connected() : difference->is_connected();
  if (n < 2 || !connected) {
    std::cerr << "spantree: sampling needs a connected graph on at least two vertices\n";
    return kExitRefusal;
  }

  Rng rng(opt.seed);
  for (std::size_t i = 0; i < opt.count; ++i) {
    std::vector<Edge> tree =
        threshold ? sample_spanning_tree(*threshold, rng) : sample_spanning_tree(*difference, rng);
    if (!to_original.empty()) {
      for (Edge& e : tree) e = make_edge(to_original[e.first], to_original[e.second]);
      std::sort(tree.begin(), tree.end());
    }
    if (i > 0) std::cout << "\n";
    if (opt.format == "dot") {
      std::cout << format_tree_dot(tree, n);
    } else {
      std::cout << format_edges(tree);
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// recognize

int run_recognize(const std::string& path, bool bipartite) {
  if (bipartite) {
    BipartiteEdgeList parsed = parse_bipartite_edge_list(slurp(path));
    std::vector<VertexId> x(parsed.x_count);
    std::vector<VertexId> y(parsed.y_count);
    for (std::size_t i = 0; i < parsed.x_count; ++i) x[i] = i;
    for (std::size_t i = 0; i < parsed.y_count; ++i) y[i] = parsed.x_count + i;
    const auto result = recognize_difference(parsed.graph, x, y);
    if (!result) {
      std::cout << "not-difference\n";
      return kExitRefusal;
    }
    std::cout << result->sequence.chars() << "\n";
    return 0;
  }
  const Graph g = parse_edge_list(slurp(path));
  const auto result = recognize_threshold(g);
  if (!result) {
    std::cout << "not-threshold\n";
    return kExitRefusal;
  }
  std::cout << result->sequence.chars() << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// gen

int run_gen(std::size_t n, double p, std::uint64_t seed, bool bipartite) {
  Rng rng(seed);
  std::string chars;
  if (bipartite) {
    for (std::size_t i = 0; i < n; ++i) chars += rng.bernoulli(p) ? '1' : '0';
  } else {
    chars = "*";
    for (std::size_t i = 1; i < n; ++i) chars += rng.bernoulli(p) ? '1' : '0';
  }
  std::cout << chars << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// build

int run_build(const std::string& seq, const std::string& bipartite_seq, const std::string& format) {
  if (seq.empty() == bipartite_seq.empty()) {
    std::cerr << "spantree: build needs exactly one of --seq, --bipartite-seq\n";
    return kExitUsage;
  }
  if (!seq.empty()) {
    const ThresholdGraph t = build_threshold(CreationSequence::parse(seq));
    std::cout << (format == "dot" ? format_dot(t.graph()) : format_edge_list(t.graph()));
  } else {
    const DifferenceGraph h = build_difference(BipartiteCreationSequence::parse(bipartite_seq));
    std::cout << (format == "dot" ? format_dot(h.graph()) : format_bipartite_edge_list(h));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact spanning-tree toolkit for threshold and difference graphs"};
  app.require_subcommand(1);

  CountOptions count_opt;
  CLI::App* count = app.add_subcommand("count", "Count spanning trees");
  count->add_option("--seq", count_opt.seq, "Creation sequence, e.g. \"*0101\"");
  count->add_option("--seq-file", count_opt.seq_file, "File with one creation sequence per line");
  count->add_option("--bipartite-seq", count_opt.bipartite_seq, "Bipartite creation sequence");
  count->add_option("--edges", count_opt.edges_file, "Edge-list file");
  count->add_option("--bipartite-edges", count_opt.bipartite_edges_file,
                    "Bipartite edge-list file");
  count->add_option("--method", count_opt.method, "formula|uz|kirchhoff|enumerate")
      ->check(CLI::IsMember({"formula", "uz", "kirchhoff", "enumerate"}));
  count->add_flag("--check-all", count_opt.check_all,
                  "Run every applicable method and require agreement");
  count->add_flag("--record", count_opt.record, "Emit a key=value record instead of a bare count");
  count->add_option("--limit", count_opt.limit, "Tree cap for --method enumerate");

  std::string spectrum_seq;
  std::string spectrum_edges;
  bool spectrum_verify = false;
  CLI::App* spectrum = app.add_subcommand("spectrum", "Laplacian spectrum of a threshold graph");
  spectrum->add_option("--seq", spectrum_seq, "Creation sequence");
  spectrum->add_option("--edges", spectrum_edges, "Edge-list file");
  spectrum->add_flag("--verify", spectrum_verify,
                     "Check the spectrum against the characteristic polynomial");

  SampleOptions sample_opt;
  CLI::App* sample = app.add_subcommand("sample", "Sample spanning trees uniformly");
  sample->add_option("--seq", sample_opt.seq, "Creation sequence");
  sample->add_option("--bipartite-seq", sample_opt.bipartite_seq, "Bipartite creation sequence");
  sample->add_option("--edges", sample_opt.edges_file, "Edge-list file");
  sample->add_option("--bipartite-edges", sample_opt.bipartite_edges_file,
                     "Bipartite edge-list file");
  sample->add_option("--seed", sample_opt.seed, "RNG seed; identical seeds give identical output");
  sample->add_option("--count", sample_opt.count, "Number of trees to draw")
      ->check(CLI::PositiveNumber);
  sample->add_option("--format", sample_opt.format, "edges|dot")
      ->check(CLI::IsMember({"edges", "dot"}));

  std::string recognize_path;
  bool recognize_bipartite = false;
  CLI::App* recognize = app.add_subcommand("recognize", "Recover a creation sequence from a graph");
  recognize->add_option("file", recognize_path, "Edge-list file")->required();
  recognize->add_flag("--bipartite", recognize_bipartite,
                      "Treat the input as a bipartite edge list");

  std::size_t gen_n = 0;
  double gen_p = 0.5;
  std::uint64_t gen_seed = 0;
  bool gen_bipartite = false;
  CLI::App* gen = app.add_subcommand("gen", "Generate a random creation sequence");
  gen->add_option("--n", gen_n, "Number of vertices")->required()->check(CLI::PositiveNumber);
  gen->add_option("--p", gen_p, "Probability that a character is '1'")
      ->check(CLI::Range(0.0, 1.0));
  gen->add_option("--seed", gen_seed, "RNG seed");
  gen->add_flag("--bipartite", gen_bipartite, "Generate a bipartite creation sequence");

  std::string build_seq;
  std::string build_bipartite_seq;
  std::string build_format = "edges";
  CLI::App* build = app.add_subcommand("build", "Materialize a sequence as an edge list or DOT");
  build->add_option("--seq", build_seq, "Creation sequence");
  build->add_option("--bipartite-seq", build_bipartite_seq, "Bipartite creation sequence");
  build->add_option("--format", build_format, "edges|dot")
      ->check(CLI::IsMember({"edges", "dot"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (count->parsed()) return run_count(count_opt);
    if (spectrum->parsed()) return run_spectrum(spectrum_seq, spectrum_edges, spectrum_verify);
    if (sample->parsed()) return run_sample(sample_opt);
    if (recognize->parsed()) return run_recognize(recognize_path, recognize_bipartite);
    if (gen->parsed()) return run_gen(gen_n, gen_p, gen_seed, gen_bipartite);
    if (build->parsed()) return run_build(build_seq, build_bipartite_seq, build_format);
  } catch (const std::invalid_argument& e) {
    std::cerr << "spantree: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "spantree: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "spantree: internal error: " << e.what() << "\n";
    return 70;
  }
  return kExitUsage;
}
