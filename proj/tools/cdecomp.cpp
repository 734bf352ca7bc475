#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "cdecomp/constructions.hpp"
#include "cdecomp/error.hpp"
#include "report.hpp"
#include "verify.hpp"

using namespace cdecomp;
using nlohmann::json;

namespace
{

constexpr std::uint64_t default_seed = 0x5eed;

/// Exit 2 for malformed or out-of-bounds input, 1 for a failed analysis.
struct InputError : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

bool is_input_error(ErrorCode c)
{
  switch (c) {
  case ErrorCode::ParseError:
  case ErrorCode::InvalidSpec:
  case ErrorCode::DegreeMismatch:
  case ErrorCode::InvalidPoint:
  case ErrorCode::InvalidPermutation:
  case ErrorCode::NotProper:
  case ErrorCode::BadIntersection:
    return true;
  default:
    return false;
  }
}

template <typename T>
T parse_file(std::string const &path, T (*parse)(std::istream &))
{
  std::ifstream in(path);
  if (!in)
    throw InputError("cannot open '" + path + "'");
  try {
    return parse(in);
  } catch (Error const &e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

/// A generator file, a report JSON file, or a corpus name (c3d8, diagq,
/// twisted or a named group such as S5 or SD_A5).
tools::AnalysisInput load_input(std::string const &source)
{
  tools::AnalysisInput in;
  in.name = source;
  if (std::filesystem::exists(source)) {
    std::ifstream f(source);
    if (f.peek() == '{') {
      json j;
      try {
        f >> j;
      } catch (json::exception const &e) {
        throw Error(ErrorCode::ParseError, source + ": " + e.what());
      }
      return tools::input_from_report(j);
    }
    in.group = parse_file(source, &parse_generators);
    return in;
  }
  Constructed c;
  if (source == "c3d8" || source == "diagq")
    c = construct("example", {{"name", source}});
  else if (source == "twisted")
    c = construct("twisted", {});
  else
    c = construct("group", {{"name", source}});
  in.name = c.name;
  in.group = c.group;
  in.cells = c.cells;
  if (c.decomposition && !c.cells)
    in.decompositions.push_back(*c.decomposition);
  return in;
}

std::map<std::string, std::string> parse_params(std::vector<std::string> const &args)
{
  std::map<std::string, std::string> params;
  for (auto const &a : args) {
    auto eq = a.find('=');
    if (eq == std::string::npos || eq == 0)
      throw InputError("parameter '" + a + "' is not key=value");
    params[a.substr(0, eq)] = a.substr(eq + 1);
  }
  return params;
}

/// Written in one piece so a reader never sees a partial report.
void emit(std::string const &text)
{
  std::cout << text << std::flush;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Cartesian decompositions of finite permutation groups"};
  app.require_subcommand(1);
  // Global flags are accepted after the subcommand too.
  app.fallthrough();

  std::uint64_t seed = default_seed;
  std::size_t max_degree = 10'000;
  std::size_t max_index = 4;
  bool as_json = false;
  app.add_option("--seed", seed, "Seed for randomized internals")->capture_default_str();
  app.add_option("--max-degree", max_degree, "Largest point degree analysed or emitted")->capture_default_str();
  app.add_option("--max-index", max_index, "Largest decomposition index searched")->capture_default_str();
  app.add_flag("--json", as_json, "Emit JSON (schema 1)");

  auto *analyze_cmd = app.add_subcommand("analyze", "Analyse a group and its decompositions");
  std::string source, decomposition_file;
  bool search = false, no_timings = false;
  analyze_cmd->add_option("group", source, "Generator file, report JSON or corpus name")->required();
  analyze_cmd->add_option("decomposition", decomposition_file, "Decomposition file");
  analyze_cmd->add_flag("--search", search, "Search for invariant decompositions");
  analyze_cmd->add_flag("--no-timings", no_timings, "Omit timings from the report");

  auto *search_cmd = app.add_subcommand("search", "List invariant Cartesian decompositions");
  search_cmd->add_option("group", source, "Generator file or corpus name")->required();

  auto *construct_cmd = app.add_subcommand("construct", "Build a group from the corpus");
  std::string kind;
  std::vector<std::string> params;
  std::string decomposition_out;
  construct_cmd->add_option("kind", kind, "wreath, holomorph, example, twisted or group")->required();
  construct_cmd->add_option("params", params, "key=value parameters, or an example name");
  construct_cmd->add_option("--decomposition-out", decomposition_out, "Write the natural decomposition here");

  auto *verify_cmd = app.add_subcommand("verify-paper", "Run the acceptance criteria");
  std::string scope = "all";
  verify_cmd->add_option("--scope", scope, "Criterion scope or all")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  set_random_seed(seed);
  SearchOptions sopts;
  sopts.max_degree = max_degree;
  sopts.max_index = max_index;

  try {
    if (*analyze_cmd) {
      auto in = load_input(source);
      if (!decomposition_file.empty())
        in.decompositions.push_back(parse_file(decomposition_file, &parse_decomposition));
      if (in.group && !in.cells && in.group->degree() > max_degree)
        throw InputError("degree " + std::to_string(in.group->degree()) + " exceeds --max-degree " +
                         std::to_string(max_degree));
      for (auto const &e : in.decompositions)
        if (in.group && e.degree() != in.group->degree())
          throw Error(ErrorCode::DegreeMismatch, "decomposition degree " + std::to_string(e.degree()) +
                                                     " does not match group degree " +
                                                     std::to_string(in.group->degree()));
      tools::AnalysisOptions opts;
      opts.search = search;
      opts.search_options = sopts;
      opts.timings = !no_timings;
      auto report = tools::analyze(in, opts);
      emit(as_json ? report.dump(2) + "\n" : tools::format_report(report));
      return 0;
    }
    if (*search_cmd) {
      auto in = load_input(source);
      if (!in.group || in.group->degree() > max_degree)
        throw InputError("search needs a point group of degree at most --max-degree " + std::to_string(max_degree));
      auto found = search_invariant_decompositions(*in.group, sopts);
      if (as_json) {
        json j = {{"schema", tools::report_schema}, {"degree", in.group->degree()}, {"decompositions", json::array()}};
        for (auto const &e : found) {
          json parts = json::array();
          for (auto const &p : e.partitions())
            parts.push_back(p.to_string());
          j["decompositions"].push_back({{"index", e.index()}, {"partitions", parts}});
        }
        emit(j.dump(2) + "\n");
      } else {
        std::ostringstream ss;
        ss << found.size() << " invariant decomposition(s)\n";
        for (auto const &e : found)
          ss << "\n" << format_decomposition(e);
        emit(ss.str());
      }
      return 0;
    }
    if (*construct_cmd) {
      std::map<std::string, std::string> p;
      if (kind == "example" && params.size() == 1 && params[0].find('=') == std::string::npos)
        p["name"] = params[0];
      else if (kind == "holomorph" && params.size() == 1 && params[0].find('=') == std::string::npos)
        p["group"] = params[0];
      else
        p = parse_params(params);
      // Every construction failure stems from the parameters.
      Constructed c;
      try {
        c = construct(kind, p);
      } catch (Error const &e) {
        throw InputError(e.what());
      }
      if (c.group.degree() > max_degree)
        throw InputError(c.name + " has degree " + std::to_string(c.group.degree()) + ", above --max-degree " +
                         std::to_string(max_degree));
      if (!decomposition_out.empty()) {
        if (!c.decomposition)
          throw InputError(c.name + " has no natural decomposition");
        std::ofstream out(decomposition_out);
        out << format_decomposition(*c.decomposition);
        if (!out)
          throw InputError("cannot write '" + decomposition_out + "'");
      }
      if (as_json) {
        json j = {{"schema", tools::report_schema}, {"name", c.name}, {"degree", c.group.degree()},
                  {"order", c.group.order()}, {"generators", json::array()}};
        for (auto const &s : c.group.generators())
          j["generators"].push_back(s.to_cycle_string());
        emit(j.dump(2) + "\n");
      } else {
        emit(format_generators(c.group));
      }
      return 0;
    }
    if (*verify_cmd) {
      auto const &scopes = tools::verification_scopes();
      if (std::find(scopes.begin(), scopes.end(), scope) == scopes.end()) {
        std::string valid;
        for (auto const &s : scopes)
          valid += " " + s;
        std::cerr << "error: unknown scope '" << scope << "'; valid scopes:" << valid << "\n";
        return 2;
      }
      auto results = tools::run_verification(scope);
      bool ok = std::all_of(results.begin(), results.end(), [](auto const &r) { return r.pass(); });
      if (as_json) {
        json j = {{"schema", tools::report_schema}, {"scope", scope}, {"passed", ok}, {"criteria", json::array()}};
        for (auto const &r : results)
          j["criteria"].push_back({{"id", r.id}, {"scope", r.scope}, {"title", r.title}, {"ok", r.ok},
                                   {"pass", r.pass()}, {"seconds", r.seconds}, {"limit_seconds", r.limit_seconds},
                                   {"detail", r.detail}});
        emit(j.dump(2) + "\n");
      } else {
        emit(tools::format_results(results));
      }
      return ok ? 0 : 1;
    }
  } catch (InputError const &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (Error const &e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_input_error(e.code()) ? 2 : 1;
  } catch (std::exception const &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
