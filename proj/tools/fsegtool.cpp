// fsegtool: command-line front end of the fseg library.
//
// Exit codes: 0 ok, 1 verification failure, 2 input error, 3 cap exceeded.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fseg/fseg.hpp>

namespace {

using namespace fseg;

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_input = 2;
constexpr int exit_cap = 3;

std::string dump(const json& j, int indent = -1) { return j.dump(indent, ' ', false); }

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw input_error("cannot write '" + path + "'");
  out << text;
}

int cmd_envelope(const std::string& spec_path, const std::string& dot_path, const std::string& json_path, bool loops) {
  const ProblemSpec spec = load_spec(spec_path);
  const EnvelopeLattice env = build_envelope(spec.segment);
  std::cout << env.size() << (env.size() == 1 ? " element\n" : " elements\n");
  for (std::size_t i = 0; i < env.size(); ++i) {
    std::cout << i << ' ' << to_string(env[i]);
    if (i == env.x() && i == env.y()) std::cout << " (x, y)";
    else if (i == env.x()) std::cout << " (x)";
    else if (i == env.y()) std::cout << " (y)";
    std::cout << '\n';
  }
  if (!dot_path.empty()) write_file(dot_path, envelope_dot(env, loops));
  if (!json_path.empty()) write_file(json_path, dump(to_json(env), 2) + "\n");
  return exit_ok;
}

int cmd_ferrers(const std::string& spec_path) {
  const ProblemSpec spec = load_spec(spec_path);
  const auto v = is_ferrers_segment(spec.segment);
  json out;
  out["ferrers"] = v.ferrers;
  if (v.witness) out["witness"] = {to_string(v.witness->first), to_string(v.witness->second)};
  else out["witness"] = nullptr;
  std::cout << dump(out) << '\n';
  return exit_ok;
}

int cmd_decompose(const std::string& spec_path) {
  const ProblemSpec spec = load_spec(spec_path);
  json out = json::array();
  for (const auto& g : decompose(spec.segment)) out.push_back(to_string(g));
  std::cout << dump(out) << '\n';
  return exit_ok;
}

int cmd_minmax(const std::string& spec_path, std::size_t cap, const std::string& json_path) {
  const ProblemSpec spec = load_spec(spec_path);
  const MinmaxResult r = search_minmax(spec.segment, cap);
  const EnvelopeLattice env = build_envelope(spec.segment);
  std::cout << "states " << r.min_states << "\ntransitions " << r.max_transitions << "\nautomata "
            << r.automata.size() << '\n';
  for (const auto& m : r.automata) {
    std::cout << '{';
    for (std::size_t i = 0; i < m.elements.size(); ++i) std::cout << (i ? ", " : "") << to_string(env[m.elements[i]]);
    std::cout << "}\n";
  }
  if (!json_path.empty()) write_file(json_path, dump(to_json(r, env), 2) + "\n");
  return exit_ok;
}

int cmd_mindfa(const std::string& spec_path) {
  const ProblemSpec spec = load_spec(spec_path);
  std::cout << dump(to_json(minimal_dfa(spec.segment)), 2) << '\n';
  return exit_ok;
}

int cmd_count(const std::vector<std::size_t>& dims, std::size_t cap) {
  std::size_t points = 1;
  for (std::size_t d : dims) points *= d;
  if (points > cap)
    throw cap_exceeded("product has " + std::to_string(points) + " points, cap is " + std::to_string(cap));
  std::cout << count_upsets(dims) << '\n';
  return exit_ok;
}

int cmd_verify(const std::string& spec_path) {
  const ProblemSpec spec = load_spec(spec_path);
  const VerifyReport r = verify_spec(spec);
  std::cout << dump(to_json(r), 2) << '\n';
  return r.ok() ? exit_ok : exit_failed;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Final segments of the free ordered monoid and their injective envelopes"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "fsegtool 1.0");

  std::string spec_path, dot_path, json_path;
  bool loops = false;
  std::size_t cap = default_minmax_cap;
  std::size_t point_cap = 30;
  std::vector<std::size_t> dims;

  auto* envelope = app.add_subcommand("envelope", "List the elements of the injective envelope");
  envelope->add_option("spec", spec_path, "Spec file, or - for stdin")->required();
  envelope->add_option("--dot", dot_path, "Write the Hasse diagram and transition graph as DOT");
  envelope->add_option("--json", json_path, "Write the envelope as JSON");
  envelope->add_flag("--loops", loops, "Keep loop transitions in the DOT graph");

  auto* ferrers = app.add_subcommand("ferrers", "Decide whether the segment is Ferrers");
  ferrers->add_option("spec", spec_path, "Spec file, or - for stdin")->required();

  auto* decomp = app.add_subcommand("decompose", "Split the segment into irreducible concatenation factors");
  decomp->add_option("spec", spec_path, "Spec file, or - for stdin")->required();

  auto* minmax = app.add_subcommand("minmax", "Search the minmax automata of the segment");
  minmax->add_option("spec", spec_path, "Spec file, or - for stdin")->required();
  minmax->add_option("--cap", cap, "Largest envelope to search")->capture_default_str();
  minmax->add_option("--json", json_path, "Write the automata as JSON");

  auto* mindfa = app.add_subcommand("mindfa", "Print the minimal DFA of the segment as JSON");
  mindfa->add_option("spec", spec_path, "Spec file, or - for stdin")->required();

  auto* count = app.add_subcommand("count", "Count the up-sets of a product of chains");
  count->add_option("dims", dims, "Chain lengths")->required()->check(CLI::NonNegativeNumber);
  count->add_option("--cap", point_cap, "Largest product size to enumerate")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run the invariant suite");
  verify->add_option("spec", spec_path, "Spec file, or - for stdin")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_input;
  }

  try {
    if (*envelope) return cmd_envelope(spec_path, dot_path, json_path, loops);
    if (*ferrers) return cmd_ferrers(spec_path);
    if (*decomp) return cmd_decompose(spec_path);
    if (*minmax) return cmd_minmax(spec_path, cap, json_path);
    if (*mindfa) return cmd_mindfa(spec_path);
    if (*count) return cmd_count(dims, point_cap);
    if (*verify) return cmd_verify(spec_path);
  } catch (const cap_exceeded& e) {
    std::cerr << "error: cap exceeded: " << e.what() << '\n';
    return exit_cap;
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_input;
  } catch (const precondition_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_input;
  }
  return exit_input;
}
