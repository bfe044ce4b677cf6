#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "lrw1/io.hpp"
#include "lrw1/local_ops.hpp"
#include "lrw1/obstruction.hpp"
#include "lrw1/structure.hpp"
#include "lrw1/threads.hpp"
#include "lrw1/widths.hpp"

namespace {

using namespace lrw1;

constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;

// A path, "-" for stdin, or a graph6 string given inline.
Graph read_input(const std::string& arg) {
  std::string text;
  if (arg == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else if (std::ifstream in(arg); in) {
    text.assign(std::istreambuf_iterator<char>(in), {});
  } else {
    text = arg;
  }
  return parse_graph_text(text);
}

std::string join(const std::vector<int>& xs) {
  std::string out;
  for (int x : xs) out += (out.empty() ? "" : " ") + std::to_string(x);
  return out;
}

int cmd_lrw(const std::string& input, int check) {
  const Graph g = read_input(input);
  const auto r = lrw_exact(g);
  std::cout << r.width << '\n' << "order: " << join(r.witness.order) << '\n';
  return check >= 0 && r.width > check ? kExitFalse : 0;
}

int cmd_rw(const std::string& input, int check) {
  const Graph g = read_input(input);
  const auto r = rw_exact(g);
  std::cout << r.width << '\n';
  for (int x = 0; x < r.witness.node_count; ++x)
    if (r.witness.leaf_vertex[x] >= 0) std::cout << "leaf " << x << ": " << r.witness.leaf_vertex[x] << '\n';
  for (auto [a, b] : r.witness.tree_edges) std::cout << "tree-edge " << a << ' ' << b << '\n';
  return check >= 0 && r.width > check ? kExitFalse : 0;
}

int cmd_thread(const std::string& input, bool check) {
  const Graph g = read_input(input);
  const auto cert = recognize_thread_graph(g);
  if (!cert) {
    std::cout << "NOT A THREAD GRAPH\n";
    return check ? kExitFalse : 0;
  }
  std::cout << to_text(*cert);
  return 0;
}

int cmd_dh(const std::string& input, bool check) {
  const Graph g = read_input(input);
  const auto seq = is_distance_hereditary(g);
  if (!seq) {
    std::cout << "not distance-hereditary\n";
    return check ? kExitFalse : 0;
  }
  std::cout << "distance-hereditary\n";
  for (const auto& s : seq->steps)
    std::cout << "remove " << s.vertex << ' ' << to_string(s.reason) << ' ' << s.partner << '\n';
  return 0;
}

int cmd_vm(const std::string& host, const std::string& pattern, bool check) {
  const Graph g = read_input(host);
  const Graph h = read_input(pattern);
  const auto seq = contains_vertex_minor(g, h);
  if (!seq) {
    std::cout << "not a vertex-minor\n";
    return check ? kExitFalse : 0;
  }
  std::cout << "vertex-minor\n";
  for (const auto& s : steps_in_source_labels(g.order(), *seq))
    std::cout << (s.kind == VmStep::Kind::Complement ? "complement " : "delete ") << s.vertex << '\n';
  return 0;
}

int cmd_orbit(const std::string& input) {
  for (const auto& f : orbit(read_input(input))) std::cout << to_graph6(f.graph()) << '\n';
  return 0;
}

int cmd_verify(int max_n, int jobs, const std::string& checkpoint, bool json) {
  VerifyOptions options;
  options.jobs = jobs;
  options.checkpoint_path = checkpoint;
  const auto report = verify_main_theorem(max_n, options);
  std::cout << (json ? format_report_json(report) : format_report_text(report));
  return report.counterexamples.empty() ? 0 : kExitFalse;
}

int cmd_obstructions(int max_n) {
  for (const auto& o : find_obstructions(max_n, lrw_at_most_one)) std::cout << to_graph6(o.representative.graph()) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linear rankwidth at most one: widths, vertex-minors and thread graphs"};
  app.require_subcommand(1);

  std::string input, host, pattern, checkpoint;
  int check_k = -1, max_n = 0, jobs = 1;
  bool check = false, json = false;
  int result = 0;

  auto* lrw = app.add_subcommand("lrw", "linear rankwidth and a lexicographically least optimal order");
  lrw->add_option("input", input, "graph6 string, file, or - for stdin")->required();
  lrw->add_option("--check", check_k, "exit 1 when the width exceeds k");
  lrw->callback([&] { result = cmd_lrw(input, check_k); });

  auto* rw = app.add_subcommand("rw", "rankwidth with an optimal cubic tree (n <= 8)");
  rw->add_option("input", input)->required();
  rw->add_option("--check", check_k, "exit 1 when the width exceeds k");
  rw->callback([&] { result = cmd_rw(input, check_k); });

  auto* thread = app.add_subcommand("thread", "thread decomposition");
  thread->add_option("input", input)->required();
  thread->add_flag("--check", check, "exit 1 when the graph is not a thread graph");
  thread->callback([&] { result = cmd_thread(input, check); });

  auto* dh = app.add_subcommand("dh", "distance-hereditary test with elimination sequence");
  dh->add_option("input", input)->required();
  dh->add_flag("--check", check, "exit 1 when the graph is not distance-hereditary");
  dh->callback([&] { result = cmd_dh(input, check); });

  auto* vm = app.add_subcommand("vm", "vertex-minor test with a witness sequence");
  vm->add_option("--host", host)->required();
  vm->add_option("--pattern", pattern)->required();
  vm->add_flag("--check", check, "exit 1 when the pattern is not a vertex-minor");
  vm->callback([&] { result = cmd_vm(host, pattern, check); });

  auto* orb = app.add_subcommand("orbit", "local-equivalence classes as graph6 lines");
  orb->add_option("input", input)->required();
  orb->callback([&] { result = cmd_orbit(input); });

  auto* verify = app.add_subcommand("verify", "exhaustive check over all graphs up to --max-n vertices");
  verify->add_option("--max-n", max_n)->required()->check(CLI::Range(1, kMaxVerifyOrder));
  verify->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  verify->add_option("--checkpoint", checkpoint, "append-only progress file");
  verify->add_flag("--json", json);
  verify->callback([&] { result = cmd_verify(max_n, jobs, checkpoint, json); });

  auto* obs = app.add_subcommand("obstructions", "lrw <= 1 obstruction orbit representatives");
  obs->add_option("--max-n", max_n)->required()->check(CLI::Range(0, kMaxVerifyOrder));
  obs->callback([&] { result = cmd_obstructions(max_n); });

  auto* dot = app.add_subcommand("dot", "Graphviz output");
  dot->add_option("input", input)->required();
  dot->callback([&] { std::cout << to_dot(read_input(input)); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return result;
}
