#include "bnkit/cli/commands.hpp"

#include "bnkit/cli/bench.hpp"
#include "bnkit/cli/generator.hpp"
#include "bnkit/closure.hpp"
#include "bnkit/dynamics.hpp"
#include "bnkit/error.hpp"
#include "bnkit/graph_io.hpp"
#include "bnkit/network.hpp"
#include "bnkit/solver.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>

namespace bnkit::cli {

namespace {

/// Carries an exit code out of a command body.
struct Failure {
  int code;
  std::string message;
};

BooleanNetwork load_model(const std::string &path) {
  try {
    return load_bnet(path);
  } catch (const ParseError &e) {
    throw Failure{exit_parse, path + ": " + e.what()};
  } catch (const ModelError &e) {
    throw Failure{exit_parse, path + ": " + e.what()};
  }
}

void write_file(const std::string &path, const std::string &text) {
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << text))
    throw Failure{exit_usage, "cannot write '" + path + "'"};
}

struct SolutionFormat {
  bool json = false;
  bool table = false;
};

class SolutionPrinter {
public:
  SolutionPrinter(const BooleanNetwork &net, SolutionFormat format, std::ostream &out)
      : net_(net), format_(format), out_(out) {
    if (format_.table) {
      for (std::size_t i = 0; i < net_.size(); ++i) {
        widths_.push_back(net_.name(static_cast<ComponentIndex>(i)).size());
        out_ << (i ? " " : "") << net_.name(static_cast<ComponentIndex>(i));
      }
      out_ << "\n";
    }
  }

  void print(const Cube &c) {
    if (format_.json) {
      out_ << solution_to_json(c, net_) << "\n";
    } else if (format_.table) {
      const std::string pattern = c.to_string();
      for (std::size_t i = 0; i < pattern.size(); ++i)
        out_ << (i ? " " : "") << std::string(widths_[i] - 1, ' ') << pattern[i];
      out_ << "\n";
    } else {
      out_ << c.to_string() << "\n";
    }
    out_.flush();
  }

private:
  const BooleanNetwork &net_;
  SolutionFormat format_;
  std::ostream &out_;
  std::vector<std::size_t> widths_;
};

struct EnumerateArgs {
  std::string model;
  std::string within;
  std::size_t limit = 0;
  std::uint64_t seed = SolverOptions{}.seed;
  SolutionFormat format;
};

void add_enumerate_options(CLI::App &cmd, EnumerateArgs &args) {
  cmd.add_option("model", args.model, "Model in .bnet format")->required();
  cmd.add_option("--within", args.within,
                 "Only solutions contained in this cube (pattern over 0,1,* or a=1,b=0)");
  cmd.add_option("--limit", args.limit, "Stop after this many solutions")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--seed", args.seed, "Branching seed");
  auto *json = cmd.add_flag("--json", args.format.json, "One JSON object per line");
  cmd.add_flag("--table", args.format.table, "Aligned table with a header of component names")
      ->excludes(json);
}

void stream_solutions(SolutionStream &stream, const BooleanNetwork &net, SolutionFormat format,
                      std::ostream &out) {
  SolutionPrinter printer(net, format, out);
  while (auto c = stream.next())
    printer.print(*c);
}

SolutionStream open_stream(const BooleanNetwork &net, Problem kind, const EnumerateArgs &args) {
  Query query;
  query.kind = kind;
  if (!args.within.empty())
    query.within = parse_cube(args.within, net);
  if (args.limit > 0)
    query.limit = args.limit;
  SolverOptions options;
  options.seed = args.seed;
  return SolutionStream(net, query, options);
}

Stg build_graph(const BooleanNetwork &net, const std::string &mode, const std::string &within,
                bool projection) {
  std::optional<Cube> restrict_to;
  if (!within.empty())
    restrict_to = parse_cube(within, net);
  if (projection)
    return build_mp_projection(net, restrict_to);
  return build_stg(net, parse_update_mode(mode), restrict_to);
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Boolean network analysis: fixed points, trap spaces, dynamics"};
  app.name("bnkit");
  app.require_subcommand(1);

  EnumerateArgs fix_args, trap_args, attr_args;
  auto *fixpoints = app.add_subcommand("fixpoints", "Enumerate fixed points");
  add_enumerate_options(*fixpoints, fix_args);

  auto *trapspaces = app.add_subcommand("trapspaces", "Enumerate minimal or maximal trap spaces");
  add_enumerate_options(*trapspaces, trap_args);
  bool want_min = false, want_max = false;
  auto *min_flag = trapspaces->add_flag("--min", want_min, "Minimal trap spaces (default)");
  trapspaces->add_flag("--max", want_max, "Maximal trap spaces")->excludes(min_flag);

  auto *attractors_cmd =
      app.add_subcommand("attractors", "Most permissive attractors (minimal trap spaces)");
  add_enumerate_options(*attractors_cmd, attr_args);
  std::string reachable_from;
  attractors_cmd->add_option("--reachable-from", reachable_from,
                             "Only attractors reachable from this state");

  std::string reach_model, reach_from, reach_to, reach_mode = "mp";
  auto *reach = app.add_subcommand("reach", "Decide whether one state reaches another");
  reach->add_option("model", reach_model, "Model in .bnet format")->required();
  reach->add_option("from", reach_from, "Initial state")->required();
  reach->add_option("to", reach_to, "Target state")->required();
  reach->add_option("--mode", reach_mode, "synchronous, asynchronous, general or mp")
      ->capture_default_str();

  std::string stg_model, stg_mode = "asynchronous", stg_format = "dot", stg_within;
  bool stg_projection = false;
  auto *stg = app.add_subcommand("stg", "State transition graph");
  stg->add_option("model", stg_model, "Model in .bnet format")->required();
  stg->add_option("--mode", stg_mode, "synchronous, asynchronous, general or mp")
      ->capture_default_str();
  stg->add_option("--format", stg_format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}))
      ->capture_default_str();
  stg->add_option("--within", stg_within, "Only states in this cube");
  stg->add_flag("--mp-projection", stg_projection,
                "Binary states with an edge x->y whenever y is most permissive reachable from x");

  std::string infl_model, infl_format = "dot";
  auto *influence = app.add_subcommand("influence", "Signed influence graph");
  influence->add_option("model", infl_model, "Model in .bnet format")->required();
  influence->add_option("--format", infl_format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}))
      ->capture_default_str();

  std::string export_model;
  auto *export_cmd = app.add_subcommand("export", "Print the model in normalized .bnet form");
  export_cmd->add_option("model", export_model, "Model in .bnet format")->required();

  GenSpec gen;
  std::string gen_family = "inhibitor-dominant", gen_out;
  auto *generate = app.add_subcommand("generate", "Write a random scale-free network");
  generate->add_option("--nodes", gen.nodes, "Number of components")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  generate->add_option("--seed", gen.seed, "Random seed")->capture_default_str();
  generate->add_option("--family", gen_family, "inhibitor-dominant or nested-canalizing-unate")
      ->check(CLI::IsMember({"inhibitor-dominant", "nested-canalizing-unate"}))
      ->capture_default_str();
  generate->add_option("--gamma", gen.gamma, "In-degree power-law exponent")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  generate->add_option("--max-in-degree", gen.max_in_degree, "In-degree cap")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  generate->add_option("--activator-ratio", gen.activator_ratio,
                       "Probability that an edge is activating")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  generate->add_option("--out", gen_out, "Output file (default: standard output)");

  std::string bench_suite, bench_problem = "min", bench_out;
  BenchOptions bench_opts;
  auto *bench = app.add_subcommand("bench", "Time to first solution over a directory of models");
  bench->add_option("--suite", bench_suite, "Directory of .bnet files")->required();
  bench->add_option("--problem", bench_problem, "fix, min or max")
      ->check(CLI::IsMember({"fix", "min", "max"}))
      ->capture_default_str();
  bench->add_option("--timeout", bench_opts.timeout_seconds, "Per-model timeout in seconds")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench->add_option("--out", bench_out, "TSV output file (default: standard output)");
  bench->add_option("--jobs", bench_opts.jobs, "Models run in parallel")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (fixpoints->parsed()) {
      const auto net = load_model(fix_args.model);
      auto stream = open_stream(net, Problem::fixed_points, fix_args);
      stream_solutions(stream, net, fix_args.format, out);
    } else if (trapspaces->parsed()) {
      const auto net = load_model(trap_args.model);
      auto stream = open_stream(
          net, want_max ? Problem::maximal_trap_spaces : Problem::minimal_trap_spaces, trap_args);
      stream_solutions(stream, net, trap_args.format, out);
    } else if (attractors_cmd->parsed()) {
      const auto net = load_model(attr_args.model);
      EnumerateArgs scoped = attr_args;
      if (!reachable_from.empty()) {
        const Cube reach_cube = closure(net, parse_state(reachable_from, net));
        if (!scoped.within.empty()) {
          const auto both = intersect(reach_cube, parse_cube(scoped.within, net));
          if (!both)
            return exit_ok;
          scoped.within = both->to_string();
        } else {
          scoped.within = reach_cube.to_string();
        }
      }
      auto stream = open_stream(net, Problem::minimal_trap_spaces, scoped);
      stream_solutions(stream, net, scoped.format, out);
    } else if (reach->parsed()) {
      const auto net = load_model(reach_model);
      const State x = parse_state(reach_from, net), y = parse_state(reach_to, net);
      out << (reachability(net, x, y, parse_update_mode(reach_mode)) ? "true" : "false") << "\n";
    } else if (stg->parsed()) {
      const auto net = load_model(stg_model);
      const Stg graph = build_graph(net, stg_mode, stg_within, stg_projection);
      out << (stg_format == "json" ? stg_to_json(graph) : stg_to_dot(graph));
    } else if (influence->parsed()) {
      const auto net = load_model(infl_model);
      const auto graph = influence_graph(net);
      out << (infl_format == "json" ? influence_to_json(graph, net)
                                    : influence_to_dot(graph, net));
    } else if (export_cmd->parsed()) {
      out << export_bnet(load_model(export_model));
    } else if (generate->parsed()) {
      gen.family = parse_family(gen_family);
      const std::string text = generate_bnet(gen);
      if (gen_out.empty())
        out << text;
      else
        write_file(gen_out, text);
    } else if (bench->parsed()) {
      bench_opts.problem = parse_problem_code(bench_problem);
      const auto records = run_bench(bench_suite, bench_opts);
      const std::string tsv = bench_tsv(records);
      if (bench_out.empty())
        out << tsv << "\n";
      else
        write_file(bench_out, tsv);
      out << cumulative_table(records, bench_opts.problem);
      for (const auto &r : records)
        if (r.status == BenchStatus::error)
          err << r.model << ": " << r.message << "\n";
    }
  } catch (const Failure &f) {
    err << "error: " << f.message << "\n";
    return f.code;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_ok;
}

} // namespace bnkit::cli
