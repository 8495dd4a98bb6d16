// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any
// criterion fails.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "fintop/census.hpp"
#include "fintop/classify.hpp"
#include "fintop/counting.hpp"
#include "fintop/enumeration.hpp"
#include "fintop/reflectors.hpp"
#include "fintop/separation.hpp"
#include "support.hpp"

namespace {

using namespace fintop;
using Clock = std::chrono::steady_clock;
namespace fs = std::filesystem;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

template <class F>
double timed(F&& f) {
  const auto start = Clock::now();
  f();
  return seconds_since(start);
}

std::string ms(double s) {
  std::ostringstream out;
  out.precision(3);
  out << std::fixed << s * 1000.0 << " ms";
  return out.str();
}

struct ProcessResult {
  int code = -1;
  std::string out;
};

ProcessResult run_cli_process(const std::string& args) {
  const std::string command = std::string("'") + FINTOP_CLI_PATH + "' " + args + " 2>/dev/null";
  ProcessResult r;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return r;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) r.out.append(buffer, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::vector<FiniteSpace> all_spaces(std::size_t lo, std::size_t hi) {
  std::vector<FiniteSpace> out;
  for (std::size_t n = lo; n <= hi; ++n) {
    for_each_topology(n, [&](const FiniteSpace& s) { out.push_back(s); });
  }
  return out;
}

// A counted sweep: `check` returns false on a counterexample; exceptions are
// counted separately. Both must be zero to pass.
struct Sweep {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::size_t exceptions = 0;
  std::string first_problem;

  template <class F>
  void check(const std::string& label, F&& f) {
    ++cases;
    try {
      if (!f()) {
        if (failures++ == 0 && first_problem.empty()) first_problem = label;
      }
    } catch (const std::exception& e) {
      if (exceptions++ == 0 && first_problem.empty()) first_problem = label + ": " + e.what();
    }
  }

  Verdict verdict(const std::string& what) const {
    std::ostringstream out;
    out << cases << " " << what << ", " << failures << " failures, " << exceptions << " exceptions";
    if (!first_problem.empty()) out << " (first: " << first_problem << ")";
    return {cases > 0 && failures == 0 && exceptions == 0, out.str()};
  }
};

Verdict count_criterion(const std::string& kind, const std::string& expected) {
  const ProcessResult r = run_cli_process("count " + kind + " -n 14");
  const bool value_ok = r.code == 0 && r.out == expected + "\n";

  // Best of five, measured both in process and as a full process launch.
  double in_process = 1e9;
  double launch = 1e9;
  for (int i = 0; i < 5; ++i) {
    std::ostringstream out;
    std::ostringstream err;
    in_process = std::min(in_process, timed([&] { cli::run({"count", kind, "-n", "14"}, out, err); }));
    launch = std::min(launch, timed([&] { run_cli_process("count " + kind + " -n 14"); }));
  }
  const bool fast = in_process < 0.010 && launch < 0.010;
  std::string got = r.out;
  if (!got.empty() && got.back() == '\n') got.pop_back();
  return {value_ok && fast, "got " + got + " (exit " + std::to_string(r.code) + "), command " +
                                ms(in_process) + ", process " + ms(launch) + ", limit 10 ms"};
}

Verdict criterion_3() {
  const std::vector<std::uint64_t> bell{1, 2, 5, 15, 52, 203};
  std::ostringstream detail;
  bool pass = true;
  double small_total = 0;
  double six = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    std::uint64_t preh = 0;
    const double t = timed([&] {
      for_each_topology(n, [&](const FiniteSpace& s) {
        if (satisfies(s, Axiom::t02)) ++preh;
      });
    });
    (n <= 5 ? small_total : six) += t;
    pass = pass && preh == bell[n - 1] && BigCount(preh) == bell_number(n);
    detail << (n > 1 ? "," : "") << preh;
  }
  pass = pass && small_total < 5.0 && six < 60.0;
  detail << " vs B(n)=1,2,5,15,52,203; n<=5 in " << ms(small_total) << " (limit 5 s), n=6 in "
         << ms(six) << " (limit 60 s), single thread";
  return {pass, "t02 counts " + detail.str()};
}

Verdict criterion_4() {
  const std::vector<std::size_t> expected{1, 4, 29, 355};
  bool pass = true;
  std::ostringstream detail;
  double oracle_time = 0;
  for (int n = 1; n <= 4; ++n) {
    std::vector<oracle::Topology> brute;
    oracle_time += timed([&] { brute = oracle::all_topologies(n); });
    std::set<std::vector<oracle::Mask>> theirs;
    for (const oracle::Topology& t : brute) theirs.insert(t.opens);
    std::set<std::vector<oracle::Mask>> ours;
    std::size_t emitted = 0;
    for (const FiniteSpace& s : enumerate_topologies(n)) {
      ours.insert(testing::to_oracle(s).opens);
      ++emitted;
    }
    pass = pass && brute.size() == expected[n - 1] && emitted == expected[n - 1] && ours == theirs;
    detail << (n > 1 ? "," : "") << emitted << "/" << brute.size();
  }
  pass = pass && oracle_time < 30.0;
  return {pass, "enumerated/oracle " + detail.str() + " with identical sets; oracle " +
                    ms(oracle_time) + " (limit 30 s)"};
}

Verdict criterion_5() {
  Sweep sweep;
  for (const FiniteSpace& s : all_spaces(1, 4)) {
    sweep.check(to_string(s), [&] {
      const bool t02 = satisfies(s, Axiom::t02);
      return is_regular(s) == t02 && is_zero_dimensional(s) == t02 &&
             double_negation_is_identity(s) == t02;
    });
  }
  Verdict v = sweep.verdict("spaces (t02, regular, zero_dim, double negation)");
  v.pass = v.pass && sweep.cases == 389;
  return v;
}

Verdict criterion_6() {
  Sweep sweep;
  for (const FiniteSpace& s : all_spaces(1, 4)) {
    sweep.check(to_string(s), [&] {
      const PreHausdorffReport r = pre_hausdorff_report(s);
      return r.r0_closed.has_value() && r.r0_equals_diagonal_closure.has_value() &&
             *r.r0_closed == r.by_definition && *r.r0_equals_diagonal_closure == r.by_definition &&
             r.quotient_hausdorff == r.by_definition;
    });
  }
  return sweep.verdict("spaces with all four report fields populated");
}

Verdict criterion_7() {
  Sweep sweep;
  for (const FiniteSpace& s : all_spaces(1, 4)) {
    sweep.check(to_string(s), [&] {
      return satisfies(s, Axiom::t2) == (satisfies(s, Axiom::t02) && is_sober(s));
    });
  }
  return sweep.verdict("spaces (t2 iff t02 and sober)");
}

Verdict criterion_8() {
  Sweep sweep;
  std::size_t preh = 0;
  for (const FiniteSpace& s : all_spaces(1, 5)) {
    if (!satisfies(s, Axiom::t02)) continue;
    ++preh;
    sweep.check(to_string(s), [&] {
      return is_normal(s) && oracle::is_normal(testing::to_oracle(s));
    });
  }
  Verdict v = sweep.verdict("pre-Hausdorff spaces normal by lattice check and by definition");
  v.pass = v.pass && preh == 1 + 2 + 5 + 15 + 52;
  return v;
}

Verdict criterion_9() {
  Sweep sweep;
  for (const FiniteSpace& s : all_spaces(1, 4)) {
    sweep.check(to_string(s), [&] {
      const std::vector<PointSet> opens = s.opens();
      return is_borel_field(s.size(), opens) == satisfies(s, Axiom::t02);
    });
  }
  return sweep.verdict("spaces (opens a Borel field iff t02)");
}

Verdict criterion_10() {
  const std::vector<std::size_t> p{1, 2, 3, 5, 7, 11, 15};
  bool classes_ok = true;
  std::ostringstream counts;
  for (std::size_t n = 1; n <= 7; ++n) {
    const std::size_t c = count_preh_classes_by_enumeration(n);
    classes_ok = classes_ok && c == p[n - 1] && BigCount(c) == integer_partition_count(n) &&
                 count_preh_classes(n) == BigCount(c);
    counts << (n > 1 ? "," : "") << c;
  }
  std::vector<FiniteSpace> preh;
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const FiniteSpace& s : enumerate_pre_hausdorff(n)) preh.push_back(s);
  }
  Sweep sweep;
  for (const FiniteSpace& a : preh) {
    for (const FiniteSpace& b : preh) {
      sweep.check(to_string(a) + " vs " + to_string(b), [&] {
        const HomeomorphismResult fast = are_homeomorphic(a, b);
        return fast.path == HomeomorphismPath::fast &&
               fast.homeomorphic == find_homeomorphism(a, b).has_value();
      });
    }
  }
  Verdict v = sweep.verdict("pre-Hausdorff pairs, fast path vs general search");
  v.pass = v.pass && classes_ok;
  v.detail = "classes " + counts.str() + " (want 1,2,3,5,7,11,15); " + v.detail;
  return v;
}

Verdict criterion_11() {
  Sweep sweep;
  const auto start = Clock::now();
  const std::vector<FiniteSpace> domains = all_spaces(0, 3);
  for (int level = 0; level <= 2; ++level) {
    const Separation sep = separation_from_index(level);
    std::vector<FiniteSpace> codomains;
    for (std::size_t m = 0; m <= 3; ++m) {
      for_each_topology(m, [&](const FiniteSpace& c) {
        if (is_ti(c, sep)) codomains.push_back(c);
      });
    }
    for (const FiniteSpace& s : domains) {
      const Quotient q = reflect(s, sep);
      for (const FiniteSpace& cod : codomains) {
        oracle::for_each_map(static_cast<int>(s.size()), static_cast<int>(cod.size()),
                             [&](const oracle::Map& m) {
          const PointMap f(cod.size(), std::vector<std::size_t>(m.begin(), m.end()));
          if (!is_continuous(f, s, cod)) return;
          sweep.check("T" + std::to_string(level) + " " + to_string(s) + " -> " + to_string(cod), [&] {
            const PointMap bar = factor_through_quotient(s, f, cod, sep);
            int factorizations = 0;
            bool bar_is_one = false;
            oracle::for_each_map(static_cast<int>(q.space.size()), static_cast<int>(cod.size()),
                                 [&](const oracle::Map& h) {
              for (std::size_t x = 0; x < s.size(); ++x) {
                if (static_cast<std::size_t>(h[q.projection(x)]) != f(x)) return;
              }
              ++factorizations;
              bar_is_one = bar_is_one ||
                           std::equal(h.begin(), h.end(), bar.table().begin(), bar.table().end(),
                                      [](int a, std::size_t b) { return static_cast<std::size_t>(a) == b; });
            });
            return factorizations == 1 && bar_is_one && is_continuous(bar, q.space, cod);
          });
        });
      }
    }
  }
  const double t = seconds_since(start);
  Verdict v = sweep.verdict("continuous maps factored uniquely");
  v.pass = v.pass && t < 120.0;
  v.detail += ", " + ms(t) + " (limit 120 s)";
  return v;
}

Verdict criterion_12() {
  Sweep sweep;
  for (const FiniteSpace& s : all_spaces(1, 3)) {
    for (int level = 0; level <= 2; ++level) {
      sweep.check("T" + std::to_string(level) + " " + to_string(s), [&] {
        const auto brute = oracle::r_relation(testing::to_oracle(s), level, 3);
        const Partition r = r_relation(s, separation_from_index(level));
        for (std::size_t x = 0; x < s.size(); ++x) {
          for (std::size_t y = 0; y < s.size(); ++y) {
            if (r.related(x, y) != brute[x][y]) return false;
          }
        }
        return true;
      });
    }
  }
  return sweep.verdict("(space, level) relations against all maps into T_i spaces");
}

Verdict criterion_13() {
  Sweep sweep;
  for (const FiniteSpace& s : all_spaces(0, 4)) {
    sweep.check(to_string(s), [&] { return compose_reflections_check(s); });
  }
  return sweep.verdict("spaces (two-step Hausdorff reflection matches direct)");
}

Verdict criterion_14() {
  Sweep sweep;
  testing::Gen gen(20240901);
  for (int round = 0; round < 1000; ++round) {
    const std::size_t n = 1 + gen.below(4);
    std::vector<InitialSource> sources;
    std::vector<std::pair<oracle::Map, oracle::Topology>> reference;
    const std::size_t maps = 1 + gen.below(3);
    for (std::size_t k = 0; k < maps; ++k) {
      const FiniteSpace cod = space_from_partition(gen.partition(1 + gen.below(4)));
      const PointMap f = gen.map(n, cod.size());
      sources.push_back({f, cod});
      reference.emplace_back(testing::to_oracle(f), testing::to_oracle(cod));
    }
    sweep.check("instance " + std::to_string(round), [&] {
      const FiniteSpace induced = initial_topology(n, sources);
      const oracle::Topology brute = oracle::initial(static_cast<int>(n), reference);
      return satisfies(induced, Axiom::t02) && oracle::is_tij(brute, 0, 2) &&
             testing::to_oracle(induced) == brute;
    });
  }
  return sweep.verdict("random initial topologies into pre-Hausdorff codomains are pre-Hausdorff");
}

Verdict criterion_15() {
  Sweep sweep;
  for (const FiniteSpace& s : all_spaces(1, 4)) {
    const FiniteSpace coarse = indiscrete_space(s.size());
    if (s == coarse) continue;
    sweep.check(to_string(s), [&] {
      const PointMap id = PointMap::identity(s.size());
      return is_continuous(id, s, coarse) && id.is_bijective() && !is_continuous(id, coarse, s) &&
             !is_homeomorphism(id, s, coarse);
    });
  }
  return sweep.verdict("non-indiscrete spaces: identity onto indiscrete is a continuous bijection, not a homeomorphism");
}

Verdict criterion_16() {
  const fs::path dir = fs::temp_directory_path() / "fintop_acceptance_census";
  fs::remove_all(dir);
  fs::create_directories(dir);
  std::vector<std::string> files;
  bool ran = true;
  for (const char* w : {"1", "2", "8"}) {
    const fs::path out = dir / (std::string("census4_w") + w + ".csv");
    const ProcessResult r = run_cli_process("census -n 4 --workers " + std::string(w) + " --out '" +
                                            out.string() + "'");
    ran = ran && r.code == 0 && r.out == "total=355 preH=15 bell_check=ok\n";
    files.push_back(slurp(out));
  }
  std::vector<std::string> library;
  for (std::size_t w : {1U, 2U, 8U}) {
    CensusOptions o;
    o.workers = w;
    library.push_back(census_csv(census(4, o)));
  }
  fs::remove_all(dir);
  const bool same = !files[0].empty() && files[0] == files[1] && files[0] == files[2] &&
                    library[0] == library[1] && library[0] == library[2] && library[0] == files[0];
  return {ran && same, std::to_string(files[0].size()) + "-byte CSV from 1, 2 and 8 workers, " +
                           (same ? "identical" : "DIFFERENT")};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "Bell number B(14)", [] { return count_criterion("bell", "190899322"); }},
      {2, "partition count p(14)", [] { return count_criterion("partitions", "135"); }},
      {3, "pre-Hausdorff topologies number B(n), n = 1..6", criterion_3},
      {4, "enumeration matches brute-force oracle, n = 1..4", criterion_4},
      {5, "t02 / regular / zero-dimensional / Boolean opens agree, n <= 4", criterion_5},
      {6, "pre-Hausdorff report fields agree, n <= 4", criterion_6},
      {7, "t2 iff (t02 and sober), n <= 4", criterion_7},
      {8, "pre-Hausdorff implies normal, n <= 5", criterion_8},
      {9, "opens form a Borel field iff t02, n <= 4", criterion_9},
      {10, "homeomorphism classes number p(n); fast path agrees, n <= 5", criterion_10},
      {11, "reflector universality, n <= 3, codomains <= 3 points", criterion_11},
      {12, "R_i relation matches all-maps oracle, n <= 3", criterion_12},
      {13, "Hausdorff reflection factors through pre-Hausdorff reflection, n <= 4", criterion_13},
      {14, "initial topologies into pre-Hausdorff spaces, 1000 random instances", criterion_14},
      {15, "continuous bijection that is not a homeomorphism", criterion_15},
      {16, "census(4) CSV byte-identical across 1, 2, 8 workers", criterion_16},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    Verdict v;
    const auto start = Clock::now();
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double t = seconds_since(start);
    if (!v.pass) ++failed;
    std::cout << (v.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << ": " << v.detail
              << " [" << ms(t) << "]" << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
