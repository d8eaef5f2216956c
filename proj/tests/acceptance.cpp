// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include "hamcert/casework.hpp"
#include "hamcert/cli.hpp"
#include "hamcert/concrete_runs.hpp"
#include "hamcert/ham_search.hpp"
#include "hamcert/hand_cases.hpp"
#include "hamcert/number_lemmas.hpp"

#include <omp.h>

#include <chrono>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

using namespace hamcert;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int failures = 0;

void report(const std::string& id, bool ok, const std::string& detail) {
  std::cout << id << (ok ? " PASS " : " FAIL ") << detail << std::endl;
  if (!ok) ++failures;
}

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
  double seconds = 0;
};

CliRun cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const auto t0 = Clock::now();
  CliRun r;
  r.code = run_cli(args, out, err);
  r.seconds = seconds_since(t0);
  r.out = out.str();
  r.err = err.str();
  return r;
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

std::string fmt_seconds(double s) {
  std::ostringstream o;
  o.precision(2);
  o << std::fixed << s << " s";
  return o.str();
}

const int jobs = std::max(1, omp_get_max_threads());

void ac1() {
  const auto r = cli({"lemma", "--name", "0modpandq", "--bound", "30"});
  const bool ok = r.code == 0 && r.out == "(3,2)\n(7,2)\n(5,3)\n(11,3)\n(19,5)\n" && r.seconds < 1.0;
  std::string listed = r.out;
  for (auto& c : listed)
    if (c == '\n') c = ' ';
  report("AC-1", ok, "0modpandq bound 30: " + listed + "in " + fmt_seconds(r.seconds));
}

std::map<PropId, CaseReport> reports;

void ac2() {
  const std::map<PropId, std::set<std::string>> allowed{{PropId::P7_4, {}},
                                                         {PropId::P7_7, {"Lemma7.6"}},
                                                         {PropId::P5_1, {"Lemma5.2"}},
                                                         {PropId::P7_9, {"Prop6.1"}}};
  bool ok = true;
  std::string detail;
  for (const auto& [prop, patterns] : allowed) {
    const auto t0 = Clock::now();
    const CaseReport& r = reports[prop] = run_prop(prop, {jobs});
    const double t = seconds_since(t0);
    bool this_ok = r.passed() && r.count(Outcome::certified) > 0;
    std::string ex;
    for (const auto& [id, n] : r.exception_counts()) {
      this_ok = this_ok && patterns.count(id) == 1;
      ex += " " + id + "=" + std::to_string(n);
    }
    ok = ok && this_ok;
    detail += std::string(to_string(prop)) + ": certified " + std::to_string(r.count(Outcome::certified)) + ", exceptions" +
              (ex.empty() ? " none" : ex) + ", unexplained " + std::to_string(r.count(Outcome::unexplained)) + " (" +
              fmt_seconds(t) + "); ";
  }
  report("AC-2", ok, detail);
}

void ac3() {
  const auto t0 = Clock::now();
  bool ok = true;
  std::size_t checks = 0, closed_forms = 0;
  std::string bad;
  for (auto [p, q] : {std::pair{7, 11}, std::pair{11, 13}, std::pair{13, 17}})
    for (const auto& id : hand_case_ids()) {
      const auto r = verify_hand_case(id, p, q);
      for (const auto& c : r.checks) {
        ++checks;
        closed_forms += !c.expected.empty();
        if (!c.passed) bad += " " + id + "@(" + std::to_string(p) + "," + std::to_string(q) + "): " + c.name;
      }
      ok = ok && r.ok() && !r.checks.empty();
    }
  const bool sweep_empty = congruence_sweep(5, 1000, 4, 4).empty() && congruence_sweep(5, 1000, 2, 4).empty();
  const double t = seconds_since(t0);
  ok = ok && closed_forms > 0 && sweep_empty && t < 10.0;
  report("AC-3", ok,
         std::to_string(checks) + " hand-case checks (" + std::to_string(closed_forms) +
             " against closed forms) at (7,11), (11,13), (13,17); congruence sweep to 1000 " +
             (sweep_empty ? "empty" : "NOT empty") + "; " + fmt_seconds(t) + bad);
}

void ac4() {
  const auto t0 = Clock::now();
  std::vector<const CaseReport*> rs;
  for (const auto& [prop, r] : reports) rs.push_back(&r);
  const BridgeReport b = run_bridge(rs, 200, 1);
  const double t = seconds_since(t0);
  const bool ok = b.passed() && b.samples >= 200 && b.comparisons == 2 * b.samples && t < 60.0;
  report("AC-4", ok,
         std::to_string(b.samples) + " (cell, cycle) samples, " + std::to_string(b.comparisons) +
             " prime-pair comparisons, " + std::to_string(b.mismatches.size()) + " mismatches, " + fmt_seconds(t));
}

void ac5() {
  const auto r = cli({"e2e", "--prop", "7.4", "--pairs", "(7,11),(11,13)", "--sample", "50", "--jobs",
                      std::to_string(jobs)});
  const bool ok = r.code == 0 && contains(r.out, "(7, 11): 50/50 lifts verified, requested 50, cycle length 616") &&
                  contains(r.out, "(11, 13): 50/50 lifts verified, requested 50, cycle length 1144") &&
                  r.seconds < 60.0;
  std::string first = r.out.substr(0, r.out.find('\n'));
  std::string second = r.out.substr(first.size() + 1);
  if (!second.empty() && second.back() == '\n') second.pop_back();
  report("AC-5", ok, first + "; " + second + "; " + fmt_seconds(r.seconds));
}

// Walks on the cube Z2^3 with steps e1, e2, e3 as bit flips.
int brute_force_cube_cycles() {
  int count = 0;
  for (int code = 0; code < 6561; ++code) {
    int c = code, v = 0, seen = 1;
    bool ok = true;
    for (int k = 0; k < 8 && ok; ++k, c /= 3) {
      v ^= 1 << (c % 3);
      if (k < 7) {
        ok = !(seen >> v & 1);
        seen |= 1 << v;
      } else {
        ok = v == 0;
      }
    }
    count += ok;
  }
  return count;
}

void ac6() {
  const auto& e8 = group_by_id(GroupId::E8);
  const std::vector<GeneratorSpec> gens{{e8.at("e1")}, {e8.at("e2")}, {e8.at("e3")}};
  const auto cycles = enumerate_ham_cycles(e8, gens);
  bool valid = true;
  for (const auto& c : cycles) {
    std::vector<Elem> steps;
    for (int s : c.steps) steps.push_back(gens[static_cast<std::size_t>(std::abs(s) - 1)].gbar);
    valid = valid && verify_ham_cycle(e8, std::span<const Elem>(steps));
  }
  const int brute = brute_force_cube_cycles();
  report("AC-6", cycles.size() == 12 && brute == 12 && valid,
         "E8 {e1,e2,e3}: search " + std::to_string(cycles.size()) + " directed based cycles, brute force " +
             std::to_string(brute));
}

void ac7() {
  const auto r = cli({"lemma", "--name", "add3", "--p", "7", "--q", "11", "--jobs", std::to_string(jobs)});
  const bool ok = r.code == 0 && r.out.rfind("true\n", 0) == 0 && contains(r.out, "counterexamples 0\n") &&
                  r.seconds < 60.0;
  std::string cases = r.out.substr(r.out.find("cases"));
  cases = cases.substr(0, cases.find('\n'));
  report("AC-7", ok, "add3 (7,11): " + std::string(ok ? "true" : "false") + ", " + cases + ", " +
                         fmt_seconds(r.seconds));
}

void ac8() {
  const auto t0 = Clock::now();
  const Order56Report o = run_order56(5, 10, jobs, 11);
  const double t = seconds_since(t0);
  bool replays = o.replays.size() == 5;
  for (const auto& r : o.replays) replays = replays && r.ok && r.lifted_length == 616;
  const auto via_cli = cli({"order56", "--sample", "5", "--budget", "10", "--jobs", std::to_string(jobs)});
  const bool ok = o.passed() && o.sets.size() == 5 && o.timeouts() == 0 && replays && via_cli.code == 0;
  int found = 0;
  for (const auto& s : o.sets) found += s.found;
  report("AC-8", ok,
         std::to_string(o.sets.size()) + " of " + std::to_string(o.total_sets) + " irredundant sets, " +
             std::to_string(found) + " paths from 1, " + std::to_string(o.timeouts()) + " timeouts, index 2 " +
             (o.no_index_two ? "absent" : "PRESENT") + ", " + std::to_string(o.replays.size()) +
             " replays lifted to 616 vertices; " + fmt_seconds(t));
}

}  // namespace

int main() {
  ac1();
  ac2();
  ac3();
  ac4();
  ac5();
  ac6();
  ac7();
  ac8();
  return failures == 0 ? 0 : 1;
}
