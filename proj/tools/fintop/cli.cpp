#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fintop/census.hpp"
#include "fintop/classify.hpp"
#include "fintop/counting.hpp"
#include "fintop/error.hpp"
#include "fintop/io.hpp"
#include "fintop/reflectors.hpp"
#include "fintop/separation.hpp"

namespace fintop::cli {

namespace {

using json = nlohmann::ordered_json;

const char* bool_text(bool b) { return b ? "true" : "false"; }

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw InvalidInput("cannot write " + path);
  file << contents;
  if (!file.flush()) throw InvalidInput("cannot write " + path);
}

// A document goes to --out when given, otherwise to stdout; the human
// summary takes whichever stream the document does not.
std::ostream& emit(const std::string& out_path, const std::string& document, std::ostream& out,
                   std::ostream& err) {
  if (out_path.empty()) {
    out << document << '\n';
    return err;
  }
  write_file(out_path, document + "\n");
  return out;
}

json report_json(const PreHausdorffReport& r) {
  json j;
  j["by_definition"] = r.by_definition;
  j["r0_closed"] = r.r0_closed ? json(*r.r0_closed) : json(nullptr);
  j["r0_equals_diagonal_closure"] =
      r.r0_equals_diagonal_closure ? json(*r.r0_equals_diagonal_closure) : json(nullptr);
  j["quotient_hausdorff"] = r.quotient_hausdorff;
  j["consistent"] = r.consistent();
  return j;
}

std::string optional_text(const std::optional<bool>& b) {
  return b ? bool_text(*b) : "skipped (square exceeds " + std::to_string(kMaxPoints) + " points)";
}

struct Check {
  std::string file;
  std::string axiom;
  bool as_json = false;

  int operator()(std::ostream& out, std::ostream&) const {
    std::optional<Axiom> chosen;
    if (!axiom.empty()) {
      chosen = parse_axiom(axiom);
      if (!chosen) throw InvalidInput("unknown axiom '" + axiom + "'");
    }
    const FiniteSpace s = load_space(file);
    if (chosen) {
      const bool value = satisfies(s, *chosen);
      if (as_json) {
        out << json{{"axiom", axiom_name(*chosen)}, {"value", value}}.dump() << '\n';
      } else {
        out << bool_text(value) << '\n';
      }
      return value ? kSuccess : kFalse;
    }

    const SeparationProfile profile = axiom_profile(s);
    const PreHausdorffReport report = pre_hausdorff_report(s);
    if (as_json) {
      json p;
      for (Axiom a : kAllAxioms) p[std::string(axiom_name(a))] = profile.get(a);
      out << json{{"points", s.size()}, {"profile", p}, {"pre_hausdorff", report_json(report)}}
                 .dump()
          << '\n';
      return kSuccess;
    }
    out << "points: " << s.size() << '\n';
    for (Axiom a : kAllAxioms) out << axiom_name(a) << ": " << bool_text(profile.get(a)) << '\n';
    out << "pre-Hausdorff report:\n"
        << "  by_definition: " << bool_text(report.by_definition) << '\n'
        << "  r0_closed: " << optional_text(report.r0_closed) << '\n'
        << "  r0_equals_diagonal_closure: " << optional_text(report.r0_equals_diagonal_closure)
        << '\n'
        << "  quotient_hausdorff: " << bool_text(report.quotient_hausdorff) << '\n'
        << "  consistent: " << bool_text(report.consistent()) << '\n';
    return kSuccess;
  }
};

struct Reflect {
  std::string file;
  std::string axiom;
  std::string out_path;

  int operator()(std::ostream& out, std::ostream& err) const {
    const FiniteSpace s = load_space(file);
    json doc;
    std::size_t after = 0;
    if (axiom == "preh") {
      const FiniteSpace r = reflect_pre_hausdorff(s);
      doc = json::parse(write_space_json(r));
      after = r.size();
    } else {
      const auto parsed = parse_axiom(axiom);
      if (!parsed || (*parsed != Axiom::t0 && *parsed != Axiom::t1 && *parsed != Axiom::t2)) {
        throw InvalidInput("reflect --axiom must be t0, t1, t2 or preh");
      }
      const Separation level = *parsed == Axiom::t0   ? Separation::t0
                               : *parsed == Axiom::t1 ? Separation::t1
                                                      : Separation::t2;
      const Quotient q = reflect(s, level);
      doc = json::parse(write_space_json(q.space));
      doc["projection"] = json(std::vector<std::size_t>(q.projection.table().begin(),
                                                        q.projection.table().end()));
      after = q.space.size();
    }
    std::ostream& human = emit(out_path, doc.dump(), out, err);
    human << "points: " << s.size() << " -> " << after << '\n';
    return kSuccess;
  }
};

struct Count {
  std::string kind;
  long long n = 0;

  int operator()(std::ostream& out, std::ostream&) const {
    const std::size_t limit = kind == "bell" ? kMaxBellIndex : kMaxPartitionIndex;
    if (n < 0 || static_cast<unsigned long long>(n) > limit) {
      throw InvalidInput("count " + kind + " supports 0 <= n <= " + std::to_string(limit));
    }
    const auto m = static_cast<std::size_t>(n);
    out << (kind == "bell" ? bell_number(m) : integer_partition_count(m)).str() << '\n';
    return kSuccess;
  }
};

struct Census {
  long long n = 0;
  std::string out_path;
  std::size_t workers = 0;
  bool allow_large = false;

  int operator()(std::ostream& out, std::ostream& err) const {
    if (n < 0) throw InvalidInput("census -n must be nonnegative");
    const auto m = static_cast<std::size_t>(n);
    CensusOptions options;
    options.workers = workers;
    options.allow_large = allow_large;
    if (m > kDefaultCensusLimit) {
      options.progress = [&err](std::size_t done, std::size_t total) {
        err << "\rcensus: " << done << '/' << total << " chunks" << (done == total ? "\n" : "")
            << std::flush;
      };
    }
    const CensusTable table = census(m, options);
    const std::uint64_t preh = table.count_with(Axiom::t02);
    const bool bell_ok = bell_number(m).to_uint64() == preh;

    std::string csv = census_csv(table);
    if (!csv.empty() && csv.back() == '\n') csv.pop_back();
    std::ostream& human = emit(out_path, csv, out, err);
    human << "total=" << table.total << " preH=" << preh
          << " bell_check=" << (bell_ok ? "ok" : "FAILED") << '\n';
    return bell_ok ? kSuccess : kFalse;
  }
};

struct Homeomorphic {
  std::string first;
  std::string second;

  int operator()(std::ostream& out, std::ostream&) const {
    const FiniteSpace a = load_space(first);
    const FiniteSpace b = load_space(second);
    const HomeomorphismResult r = are_homeomorphic(a, b);
    out << bool_text(r.homeomorphic) << '\n' << "path=" << path_name(r.path) << '\n';
    return r.homeomorphic ? kSuccess : kFalse;
  }
};

struct Example {
  std::string name;
  std::string out_path;

  int operator()(std::ostream& out, std::ostream& err) const {
    const FiniteSpace s = example_space(name);
    std::ostream& human = emit(out_path, write_space_json(s), out, err);
    if (!out_path.empty()) human << "wrote " << name << " (" << s.size() << " points)\n";
    return kSuccess;
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite topological spaces: separation axioms, reflections and counts", "fintop"};
  app.require_subcommand(1);

  std::function<int(std::ostream&, std::ostream&)> action;

  Check check;
  auto* check_cmd = app.add_subcommand("check", "Report separation properties of a space");
  check_cmd->add_option("file", check.file, "Space document (JSON)")->required();
  check_cmd->add_option("--axiom", check.axiom,
                        "Test one axiom: t0 t1 t2 t01 t02 (preh) t12 regular normal zero_dim sober");
  check_cmd->add_flag("--json", check.as_json, "Emit one JSON document");
  check_cmd->callback([&] { action = check; });

  Reflect reflect_args;
  auto* reflect_cmd = app.add_subcommand("reflect", "Reflect a space into T0, T1, T2 or pre-Hausdorff");
  reflect_cmd->add_option("file", reflect_args.file, "Space document (JSON)")->required();
  reflect_cmd->add_option("--axiom", reflect_args.axiom, "t0, t1, t2 or preh")
      ->required()
      ->check(CLI::IsMember({"t0", "t1", "t2", "preh"}));
  reflect_cmd->add_option("--out", reflect_args.out_path, "Write the reflected space here");
  reflect_cmd->callback([&] { action = reflect_args; });

  Count count;
  auto* count_cmd = app.add_subcommand("count", "Bell numbers and integer partition counts");
  count_cmd->add_option("kind", count.kind, "bell or partitions")
      ->required()
      ->check(CLI::IsMember({"bell", "partitions"}));
  count_cmd->add_option("-n", count.n, "Argument")->required();
  count_cmd->callback([&] { action = count; });

  Census census_args;
  auto* census_cmd = app.add_subcommand("census", "Tally all topologies on n points by axiom profile");
  census_cmd->add_option("-n", census_args.n, "Number of points")->required();
  census_cmd->add_option("--out", census_args.out_path, "CSV path (default: stdout)");
  census_cmd->add_option("--workers", census_args.workers, "Worker threads (default: all cores)");
  census_cmd->add_flag("--allow-large", census_args.allow_large, "Permit n = 7");
  census_cmd->callback([&] { action = census_args; });

  Homeomorphic homeo;
  auto* homeo_cmd = app.add_subcommand("homeomorphic", "Decide whether two spaces are homeomorphic");
  homeo_cmd->add_option("first", homeo.first, "Space document (JSON)")->required();
  homeo_cmd->add_option("second", homeo.second, "Space document (JSON)")->required();
  homeo_cmd->callback([&] { action = homeo; });

  Example example;
  auto* example_cmd = app.add_subcommand("example", "Write a named example space");
  example_cmd->add_option("name", example.name,
                          "sierpinski, point, discrete:k, indiscrete:k or partition:0,1|2")
      ->required();
  example_cmd->add_option("--out", example.out_path, "Write the document here");
  example_cmd->callback([&] { action = example; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "fintop: " << e.what() << '\n';
    return kInvalidInput;
  }

  try {
    return action(out, err);
  } catch (const SizeLimit& e) {
    err << "fintop: size limit: " << e.what() << '\n';
    return kSizeLimit;
  } catch (const NotATopology& e) {
    err << "fintop: not a topology: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const Error& e) {
    err << "fintop: " << e.what() << '\n';
    return kInvalidInput;
  }
}

}  // namespace fintop::cli
