// Copyright 2026 The polydyn Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <charconv>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "polydyn/cli.hpp"
#include "polydyn/errors.hpp"

namespace polydyn::cli {

namespace {

struct Options {
  std::string input;
  std::uint32_t cycles = 1;
  std::string mode = "algorithm";
  std::string schedule;
  std::string init;
  std::uint64_t seed = 1;
  std::uint64_t cap = kDefaultEnumerationCap;
  std::string out;
  std::string nodes = "50";
  double indegree = 1.68;
  std::uint32_t count = 1;
  unsigned jobs = 0;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file || !(file << text)) throw Error("cannot write " + o.out);
}

std::uint32_t parse_uint(std::string_view text, const char* what) {
  std::uint32_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(std::string("invalid ") + what + " '" + std::string(text) + "'");
  }
  return v;
}

std::optional<UpdateSchedule> parse_schedule(const std::string& text) {
  if (text.empty()) return std::nullopt;
  std::vector<std::uint32_t> order;
  std::string_view rest = text;
  while (true) {
    const auto comma = rest.find(',');
    const std::uint32_t i = parse_uint(rest.substr(0, comma), "schedule entry");
    if (i == 0) throw Error("schedule entries are 1-based");
    order.push_back(i - 1);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return UpdateSchedule::sequential(std::move(order));
}

PDS deterministic_system(const ModelDocument& doc, const Options& o) {
  TranslatedSystem t = document_to_system(doc);
  if (!std::holds_alternative<PDS>(t.system)) {
    throw UnsupportedError("this command needs a deterministic model, not a " +
                           std::string(to_string(doc.kind)) + " one");
  }
  PDS f = std::get<PDS>(std::move(t.system));
  const auto schedule = o.schedule.empty() ? t.schedule : parse_schedule(o.schedule);
  return schedule ? sequential_to_synchronous(f, *schedule) : f;
}

void print_notes(const std::vector<std::string>& notes, std::ostream& err) {
  for (const auto& n : notes) err << "note: " << n << '\n';
}

int cmd_analyze(const Options& o, std::ostream& out, std::ostream& err) {
  const ModelDocument doc = parse_model(read_file(o.input));
  AnalyzeOptions options;
  if (o.mode == "simulation") options.mode = AnalysisMode::kSimulation;
  options.max_cycle_length = o.cycles;
  options.schedule = parse_schedule(o.schedule);
  options.enumeration_cap = o.cap;
  const AnalysisResult result = analyze(doc, options);
  print_notes(result.report.diagnostics, err);
  emit(o, format_report(result, o.cycles), out);
  return kExitOk;
}

int cmd_wiring(const Options& o, std::ostream& out, std::ostream& err) {
  const PDS f = deterministic_system(parse_model(read_file(o.input)), o);
  const WiringDiagram w = wiring_diagram(f);
  if (!w.fully_verified()) {
    err << "note: some edges are syntactic (dashed); their regulator space exceeds the "
           "evaluation cap\n";
  }
  if (f.field().characteristic() == 2) {
    const CircuitReport circuits = functional_circuits(f);
    emit(o, wiring_dot(w, &circuits), out);
  } else {
    emit(o, wiring_dot(w), out);
  }
  return kExitOk;
}

int cmd_phase(const Options& o, std::ostream& out, std::ostream& err) {
  const ModelDocument doc = parse_model(read_file(o.input));
  if (doc.kind == ModelKind::kProbabilistic) {
    TranslatedSystem t = document_to_system(doc);
    if (t.schedule || !o.schedule.empty()) {
      err << "note: update schedule ignored for probabilistic models\n";
    }
    emit(o, phase_dot(phase_space(std::get<ProbabilisticPDS>(t.system), o.cap), true), out);
  } else {
    emit(o, phase_dot(phase_space(deterministic_system(doc, o), o.cap), false), out);
  }
  return kExitOk;
}

int cmd_trajectory(const Options& o, std::ostream& out, std::ostream&) {
  const ModelDocument doc = parse_model(read_file(o.input));
  const PDS f = deterministic_system(doc, o);
  if (o.init.empty()) throw Error("trajectory needs --init <digits>");
  State x0;
  try {
    x0 = State::from_digits(o.init, doc.states);
  } catch (const std::invalid_argument& e) {
    throw Error("--init: " + std::string(e.what()));
  }
  if (x0.size() != f.size()) {
    throw Error("--init has " + std::to_string(x0.size()) + " coordinates, model has " +
                std::to_string(f.size()));
  }
  const Trajectory t = trajectory(f, x0);
  out << format_trajectory(t, doc.states) << '\n';
  if (!o.out.empty()) emit(o, trajectory_dot(t, doc.states), out);
  return kExitOk;
}

int cmd_random(const Options& o, std::ostream& out, std::ostream& err) {
  RandomNetworkOptions r;
  const auto colon = o.nodes.find(':');
  r.min_nodes = parse_uint(std::string_view(o.nodes).substr(0, colon), "--nodes");
  r.max_nodes = colon == std::string::npos
                    ? r.min_nodes
                    : parse_uint(std::string_view(o.nodes).substr(colon + 1), "--nodes");
  r.mean_indegree = o.indegree;
  r.count = o.count;
  r.seed = o.seed;
  const auto files = random_networks(r);
  if (o.out.empty()) {
    if (files.size() != 1) throw Error("--out <dir> is required when --count > 1");
    out << files.front();
    return kExitOk;
  }
  std::filesystem::create_directories(o.out);
  const int width = std::max(3, static_cast<int>(std::to_string(files.size()).size()));
  for (std::size_t k = 0; k < files.size(); ++k) {
    std::ostringstream name;
    name << "net_" << std::setw(width) << std::setfill('0') << k + 1 << ".txt";
    const auto path = std::filesystem::path(o.out) / name.str();
    std::ofstream file(path, std::ios::binary);
    if (!file || !(file << files[k])) throw Error("cannot write " + path.string());
  }
  err << "wrote " << files.size() << " network(s) to " << o.out << '\n';
  return kExitOk;
}

int cmd_bench(const Options& o, std::ostream& out, std::ostream& err) {
  if (!std::filesystem::is_directory(o.input)) throw Error(o.input + " is not a directory");
  const unsigned jobs = o.jobs != 0 ? o.jobs : std::max(1u, std::thread::hardware_concurrency());
  const auto rows = bench(o.input, jobs);
  emit(o, bench_csv(rows), out);
  double total = 0;
  double worst = 0;
  std::size_t failures = 0;
  for (const BenchRow& r : rows) {
    total += r.seconds;
    worst = std::max(worst, r.seconds);
    if (!r.steady_states) {
      ++failures;
      err << r.model << ": " << r.error << '\n';
    }
  }
  err << rows.size() << " model(s), " << jobs << " worker(s)";
  if (!rows.empty()) {
    err << ", mean " << total / static_cast<double>(rows.size()) << " s, max " << worst << " s";
  }
  err << ", " << failures << " failure(s)\n";
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Analyze discrete models as polynomial dynamical systems over finite fields",
               "polydyn"};
  app.require_subcommand(1);
  Options o;

  auto add_model = [&](CLI::App* sub) {
    sub->add_option("model", o.input, "Model file")->required();
    sub->add_option("--schedule", o.schedule, "Sequential update order, e.g. 3,1,2");
  };
  auto* analyze_cmd = app.add_subcommand("analyze", "Steady states and limit cycles");
  add_model(analyze_cmd);
  analyze_cmd->add_option("--cycles", o.cycles, "Largest limit-cycle length to report")
      ->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--mode", o.mode, "algorithm or simulation")
      ->check(CLI::IsMember({"algorithm", "simulation"}));
  analyze_cmd->add_option("--cap", o.cap, "State enumeration cap")->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--out", o.out, "Write the report here");

  auto* wiring_cmd = app.add_subcommand("wiring", "Wiring diagram and circuits as DOT");
  add_model(wiring_cmd);
  wiring_cmd->add_option("--out", o.out, "DOT output file");

  auto* phase_cmd = app.add_subcommand("phase", "Phase space as DOT");
  add_model(phase_cmd);
  phase_cmd->add_option("--cap", o.cap, "State enumeration cap")->check(CLI::PositiveNumber);
  phase_cmd->add_option("--out", o.out, "DOT output file");

  auto* trajectory_cmd = app.add_subcommand("trajectory", "Orbit of one initial state");
  add_model(trajectory_cmd);
  trajectory_cmd->add_option("--init", o.init, "Initial state as digits, e.g. 100")
      ->required();
  trajectory_cmd->add_option("--out", o.out, "Also write the path as DOT");

  auto* random_cmd = app.add_subcommand("random", "Generate random Boolean networks");
  random_cmd->add_option("--nodes", o.nodes, "Node count n or range min:max");
  random_cmd->add_option("--indegree", o.indegree, "Mean in-degree")
      ->check(CLI::PositiveNumber);
  random_cmd->add_option("--count", o.count, "Number of networks")
      ->check(CLI::PositiveNumber);
  random_cmd->add_option("--seed", o.seed, "Random seed");
  random_cmd->add_option("--out", o.out, "Output directory");

  auto* bench_cmd = app.add_subcommand("bench", "Time steady-state analysis of a directory");
  bench_cmd->add_option("dir", o.input, "Directory of model files")->required();
  bench_cmd->add_option("--jobs", o.jobs, "Worker threads (default: all cores)");
  bench_cmd->add_option("--out", o.out, "CSV output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  try {
    if (analyze_cmd->parsed()) return cmd_analyze(o, out, err);
    if (wiring_cmd->parsed()) return cmd_wiring(o, out, err);
    if (phase_cmd->parsed()) return cmd_phase(o, out, err);
    if (trajectory_cmd->parsed()) return cmd_trajectory(o, out, err);
    if (random_cmd->parsed()) return cmd_random(o, out, err);
    return cmd_bench(o, out, err);
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitResourceError;
  } catch (const std::exception& e) {
    const auto* parse = dynamic_cast<const ParseError*>(&e);
    err << "error: " << (parse != nullptr ? o.input + ": " : "") << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace polydyn::cli
