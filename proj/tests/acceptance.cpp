// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "cyclohecke/cli.hpp"
#include "cyclohecke/suites.hpp"

using namespace cyclohecke;

namespace {

constexpr std::uint64_t kSeed = 20261019;

SuiteResult determinism_suite() {
  SuiteResult res{"determinism"};
  const std::vector<std::vector<std::string>> jobs{
      {"semisimple", "-m", "2", "-n", "3", "--q", "z3^1", "--v", "[1,z3^2]"},
      {"gram", "-m", "2", "-n", "3", "-r", "2", "--gamma", "[0,1]"},
      {"gram", "-m", "1", "-n", "4", "-r", "3", "--lambda", "[2,2]", "--format", "tex"},
      {"simples", "-m", "2", "-n", "3", "-r", "2", "--gamma", "[0,0]"},
      {"kleshchev", "-m", "2", "-r", "3", "--gamma", "[0,1]", "--enumerate", "5"},
      {"kleshchev", "-r", "2", "--lambda", "[3,1]"},
      {"crystal", "-m", "2", "-r", "2", "--gamma", "[0,1]", "-n", "4"},
      {"fock-apply", "-m", "2", "-r", "3", "--gamma", "[0,1]", "--word", "f0 f1 f2 f0 e1"},
      {"llt", "-n", "6", "-r", "2"},
      {"llt", "-n", "6", "-r", "3", "--matrix", "--format", "table"},
      {"decomp-check", "-n", "4", "-r", "2"},
      {"multiseg", "-n", "5", "-r", "3", "--list"},
      {"multiseg", "-n", "8", "-r", "inf", "--window", "4", "--labels", "2", "--format", "tex"},
      {"selftest", "--seed", "7"},
  };
  auto call = [](std::vector<std::string> args, const char* threads) {
    args.insert(args.end(), {"--threads", threads});
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return std::to_string(code) + "\n" + out.str() + err.str();
  };
  for (const auto& job : jobs) {
    std::string name;
    for (const auto& a : job) name += a + " ";
    const std::string first = call(job, "1");
    res.check(first.rfind("0\n", 0) == 0, "exit status 0 for " + name);
    res.check(first == call(job, "1"), "repeat output for " + name);
    res.check(first == call(job, "4"), "output with --threads 4 for " + name);
  }
  return res;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* text;
    std::function<SuiteResult()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "defining relations, m<=3, n<=4, q=z12^a (a=1,4,6)", [] { return relation_suite(3, 4, {1, 4, 6}, kSeed); }},
      {2, "basis size m^n n!, sum of squares, invertible cellular matrix, m<=3, n<=4",
       [] { return basis_suite(3, 4, kSeed); }},
      {3, "trace(xy) = trace(yx), m<=2, n<=3", [] { return trace_suite(2, 3, kSeed); }},
      {4, "semisimplicity criterion vs Gram ranks on the parameter grid",
       [] { return semisimplicity_suite(semisimplicity_grid()); }},
      {5, "rank(Gram) > 0 iff Kleshchev, four configurations, n<=4",
       [] { return simple_heads_suite(kleshchev_grid(), 4); }},
      {6, "LLT unitriangularity, bar invariance, identity for r>n, dimension identity",
       [] { return llt_suite({2, 3}, 6, 4); }},
      {7, "crystal inverses, level-one Kleshchev counts n<=8, both Kleshchev definitions",
       [] { return crystal_suite(kleshchev_grid(), 5, {2, 3, 4}, 8); }},
      {8, "multisegment counts and shift oracle", [] { return multiseg_suite(6, 5, 4); }},
      {9, "CLI output byte-identical across runs and thread counts", determinism_suite},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    SuiteResult r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r.check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line.precision(2);
    line << std::fixed << (r.passed() ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.text << " (" << r.checks
         << " checks, " << secs << " s)";
    if (!r.passed()) line << " first failure: " << r.first_failure << " [" << r.failures << " failures]";
    std::cout << line.str() << std::endl;
    failed += !r.passed();
  }
  return failed == 0 ? 0 : 1;
}
