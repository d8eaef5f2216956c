#include "hamcert/cli.hpp"

#include "hamcert/casework.hpp"
#include "hamcert/certificate.hpp"
#include "hamcert/concrete_runs.hpp"
#include "hamcert/hand_cases.hpp"
#include "hamcert/number_lemmas.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <regex>

namespace hamcert {

std::vector<std::pair<int, int>> parse_pairs(const std::string& text) {
  static const std::regex whole(R"(\s*\(\s*\d+\s*,\s*\d+\s*\)(\s*,\s*\(\s*\d+\s*,\s*\d+\s*\))*\s*)");
  static const std::regex one(R"(\(\s*(\d+)\s*,\s*(\d+)\s*\))");
  if (!std::regex_match(text, whole)) throw std::invalid_argument("bad prime pair list: " + text);
  std::vector<std::pair<int, int>> out;
  for (std::sregex_iterator it(text.begin(), text.end(), one), end; it != end; ++it)
    out.emplace_back(std::stoi((*it)[1]), std::stoi((*it)[2]));
  return out;
}

namespace {

struct Options {
  std::string prop;
  int jobs = 1;
  std::string out_file;
  std::string in_file;
  std::string case_id;
  int p = 0;
  int q = 0;
  std::string pairs = "(7,11),(11,13)";
  std::size_t sample = 50;
  std::string lemma;
  int bound = 30;
  double budget = 10;
  bool full = false;
  std::size_t samples = 200;
  std::uint64_t seed = 1;
};

void print_report(std::ostream& out, const CaseReport& r) {
  out << "prop " << to_string(r.prop) << "\n";
  out << "cells " << r.cells.size() << "\n";
  out << "excluded " << r.count(Outcome::excluded) << "\n";
  out << "scanned " << r.cells_scanned() << "\n";
  out << "certified " << r.count(Outcome::certified) << " (fgl " << r.count(Strategy::fgl) << ", single "
      << r.count(Strategy::single) << ", pair " << r.count(Strategy::pair) << ")\n";
  out << "exceptions " << r.count(Outcome::exception);
  for (const auto& [id, n] : r.exception_counts()) out << " " << id << "=" << n;
  out << "\nunexplained " << r.count(Outcome::unexplained) << "\n";
}

int cmd_catalog(std::ostream& out) {
  auto dump = [&](const GroupTable& g) {
    out << "group " << to_string(g.id()) << " order " << g.order() << "\n";
    for (Elem x = 0; x < g.order(); ++x) {
      out << std::setw(8) << g.label(x) << " |";
      for (Elem y = 0; y < g.order(); ++y) out << " " << g.label(g.mul(x, y));
      out << "\n";
    }
    if (g.order() == 8) {
      for (const auto& chi : characters8(g.id())) {
        out << "  character m=" << chi.conductor << ":";
        for (Elem x = 0; x < g.order(); ++x) out << " " << g.label(x) << "->" << chi(x);
        out << "\n";
      }
      out << "  automorphisms " << automorphisms(g.id()).size() << "\n";
    }
  };
  for (const auto& g : order8_catalog()) dump(g);
  const auto& h = g56();
  out << "group G56 order " << h.order() << ", irredundant generating sets "
      << irredundant_generating_sets(h).size() << "\n";
  return kExitOk;
}

int cmd_search(const Options& o, std::ostream& out, std::ostream& err) {
  const CaseReport r = run_prop(prop_from_string(o.prop), {o.jobs});
  if (!o.out_file.empty()) {
    std::ofstream f(o.out_file, std::ios::binary);
    if (!f) {
      err << "cannot open " << o.out_file << "\n";
      return kExitFailure;
    }
    write_certificates(f, r);
    if (!f.flush()) {
      err << "write failed: " << o.out_file << "\n";
      return kExitFailure;
    }
  }
  print_report(out, r);
  if (!r.passed()) {
    for (std::size_t i = 0; i < r.cells.size(); ++i)
      if (r.results[i].outcome == Outcome::unexplained) err << certificate_line(r.cells[i], r.results[i]) << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_recheck(const Options& o, std::ostream& out, std::ostream& err) {
  std::ifstream f(o.in_file, std::ios::binary);
  if (!f) {
    err << "cannot open " << o.in_file << "\n";
    return kExitFailure;
  }
  std::size_t lines = 0, bad = 0;
  std::string line;
  while (std::getline(f, line)) {
    ++lines;
    RecheckResult r;
    try {
      r = recheck(parse_certificate(line));
    } catch (const std::exception& e) {
      r = {false, e.what()};
    }
    if (!r.ok) {
      ++bad;
      err << "line " << lines << ": " << r.message << "\n";
    }
  }
  out << "rechecked " << lines << " certificates, " << bad << " failed\n";
  return bad == 0 && lines > 0 ? kExitOk : kExitFailure;
}

int cmd_verify_hand(const Options& o, std::ostream& out, std::ostream& err) {
  std::vector<std::string> ids;
  if (o.case_id == "all")
    ids = hand_case_ids();
  else
    ids = {o.case_id};
  std::ofstream f;
  if (!o.out_file.empty()) {
    f.open(o.out_file, std::ios::binary | std::ios::app);
    if (!f) {
      err << "cannot open " << o.out_file << "\n";
      return kExitFailure;
    }
  }
  bool ok = true;
  for (const auto& id : ids) {
    const HandCaseReport r = verify_hand_case(id, o.p, o.q);
    out << "case " << r.case_id << " (p, q) = (" << r.p << ", " << r.q << ")\n";
    nlohmann::ordered_json j{{"hand_case", r.case_id}, {"p", r.p}, {"q", r.q}, {"ok", r.ok()}};
    auto checks = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) {
      out << "  " << (c.passed ? "ok   " : "FAIL ") << c.name << ": " << c.computed;
      if (!c.expected.empty()) out << " (expected " << c.expected << ")";
      out << "\n";
      checks.push_back({{"name", c.name}, {"passed", c.passed}, {"computed", c.computed}, {"expected", c.expected}});
    }
    j["checks"] = checks;
    if (f) f << j.dump() << "\n";
    ok = ok && r.ok();
  }
  out << (ok ? "all checks passed" : "some checks FAILED") << "\n";
  return ok ? kExitOk : kExitFailure;
}

int cmd_e2e(const Options& o, std::ostream& out, std::ostream& err) {
  const auto pairs = parse_pairs(o.pairs);
  const CaseReport r = run_prop(prop_from_string(o.prop), {o.jobs});
  const E2EReport e = run_e2e(r, pairs, o.sample, o.jobs);
  for (const auto& [p, q] : pairs) {
    std::size_t ok = 0, len = 0;
    for (const auto& s : e.samples)
      if (s.p == p && s.q == q && s.ok) {
        ++ok;
        len = s.length;
      }
    out << "(p, q) = (" << p << ", " << q << "): " << ok << "/" << e.count(p, q) << " lifts verified, requested "
        << o.sample << ", cycle length " << len << "\n";
  }
  for (const auto& s : e.samples)
    if (!s.ok)
      err << "lift failed at (" << s.p << ", " << s.q << "): " << s.detail << "\n  "
          << certificate_line(r.cells[s.cell_index], r.results[s.cell_index]) << "\n";
  return e.passed() ? kExitOk : kExitFailure;
}

int cmd_lemma(const Options& o, std::ostream& out) {
  if (o.lemma == "0modpandq") {
    const auto pairs = lemma_0modpandq(o.bound);
    for (const auto& [p, q] : pairs) out << "(" << p << "," << q << ")\n";
    const bool ok = std::all_of(pairs.begin(), pairs.end(), [](auto pq) { return std::min(pq.first, pq.second) <= 5; });
    return ok ? kExitOk : kExitFailure;
  }
  if (o.lemma == "add3") {
    const Add3Report r = lemma_add3(o.p, o.q, o.jobs);
    out << (r.holds ? "true" : "false") << "\ncases " << r.cases << "\ncounterexamples " << r.counterexamples << "\n";
    return r.holds ? kExitOk : kExitFailure;
  }
  // sweep: the congruence pairs that the hand cases rule out.
  bool ok = true;
  for (auto [cp, cq] : {std::pair{4, 4}, std::pair{2, 4}}) {
    const auto hits = congruence_sweep(5, o.bound, cp, cq);
    out << cp << "p = 1 (mod q) and " << cq << "q = 1 (mod p), 5 < p, q < " << o.bound << ": " << hits.size()
        << " pairs\n";
    for (const auto& [p, q] : hits) out << "  (" << p << "," << q << ")\n";
    ok = ok && hits.empty();
  }
  return ok ? kExitOk : kExitFailure;
}

int cmd_order56(const Options& o, std::ostream& out) {
  const Order56Report r = run_order56(o.full ? 0 : o.sample, o.budget, o.jobs);
  out << "irredundant generating sets " << r.total_sets << ", checked " << r.sets.size() << "\n";
  out << "no subgroup of index 2: " << (r.no_index_two ? "yes" : "NO") << "\n";
  int found = 0, none = 0, timeout = 0;
  for (const auto& s : r.sets) {
    found += s.found;
    none += s.none;
    timeout += s.timeout;
  }
  out << "paths from 1: found " << found << ", none " << none << ", timeout " << timeout << "\n";
  std::size_t shown = 0;
  for (const auto& rep : r.replays) {
    if (!rep.ok || shown < 5) {
      out << "replay {";
      for (std::size_t k = 0; k < rep.gens.size(); ++k) out << (k ? ", " : "") << g56().label(rep.gens[k]);
      out << "} h = " << g56().label(rep.h) << ": s1...s55 h = 1 " << (rep.closes_in_h ? "yes" : "NO")
          << ", V(C) = x_p " << (rep.voltage_is_z ? "yes" : "NO") << ", lift " << rep.lifted_length << " vertices"
          << (rep.detail.empty() ? "" : " (" + rep.detail + ")") << "\n";
      ++shown;
    }
  }
  out << (r.passed() ? "order-56 checks passed" : "order-56 checks FAILED") << "\n";
  return r.passed() ? kExitOk : kExitFailure;
}

int cmd_bridge(const Options& o, std::ostream& out, std::ostream& err) {
  std::vector<CaseReport> reps;
  for (PropId p : {PropId::P7_4, PropId::P7_7, PropId::P5_1, PropId::P7_9}) reps.push_back(run_prop(p, {o.jobs}));
  std::vector<const CaseReport*> ptrs;
  for (const auto& r : reps) ptrs.push_back(&r);
  const BridgeReport b = run_bridge(ptrs, o.samples, o.seed);
  out << "samples " << b.samples << ", comparisons " << b.comparisons << ", mismatches " << b.mismatches.size()
      << "\n";
  for (const auto& m : b.mismatches) err << m << "\n";
  return b.passed() ? kExitOk : kExitFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified hamiltonicity searches for Cayley graphs of order 8pq", "hamcert"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> props{"5.1", "7.4", "7.7", "7.9"};

  auto* catalog = app.add_subcommand("catalog", "Print the order-8 tables, characters and automorphism counts");

  auto* search = app.add_subcommand("search", "Run a case driver and write its certificate stream");
  search->add_option("--prop", o.prop, "Driver")->required()->check(CLI::IsMember(props));
  search->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  search->add_option("--out", o.out_file, "Certificate file");

  auto* rechk = app.add_subcommand("recheck", "Re-verify a certificate file line by line");
  rechk->add_option("--in", o.in_file, "Certificate file")->required();

  auto* hand = app.add_subcommand("verify-hand", "Check the explicit cycles of a hand case");
  std::vector<std::string> case_ids = hand_case_ids();
  case_ids.push_back("all");
  hand->add_option("--case", o.case_id, "Case id")->required()->check(CLI::IsMember(case_ids));
  hand->add_option("--p", o.p, "Prime p")->required();
  hand->add_option("--q", o.q, "Prime q")->required();
  hand->add_option("--out", o.out_file, "Append a result line to this file");

  auto* e2e = app.add_subcommand("e2e", "Lift certified cells to explicit groups and verify the cycles");
  e2e->add_option("--prop", o.prop, "Driver")->required()->check(CLI::IsMember(props));
  e2e->add_option("--pairs", o.pairs, "Prime pairs, e.g. \"(7,11),(11,13)\"");
  e2e->add_option("--sample", o.sample, "Cells per prime pair")->check(CLI::PositiveNumber);
  e2e->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* lemma = app.add_subcommand("lemma", "Number-theoretic checks");
  lemma->add_option("--name", o.lemma, "Lemma")->required()->check(CLI::IsMember({"0modpandq", "add3", "sweep"}));
  auto* bound_opt = lemma->add_option("--bound", o.bound, "Search bound");
  auto* p_opt = lemma->add_option("--p", o.p, "Prime p");
  auto* q_opt = lemma->add_option("--q", o.q, "Prime q");
  lemma->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  bound_opt->excludes(p_opt)->excludes(q_opt);

  auto* o56 = app.add_subcommand("order56", "Hamiltonian connectivity sample for the group of order 56");
  o56->add_option("--sample", o.sample, "Number of generating sets")->check(CLI::PositiveNumber);
  o56->add_option("--budget", o.budget, "Seconds per path search")->check(CLI::PositiveNumber);
  o56->add_flag("--full", o.full, "Check every irredundant generating set");
  o56->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* bridge = app.add_subcommand("bridge", "Compare cyclotomic and explicit-group voltages on sampled cycles");
  bridge->add_option("--samples", o.samples, "Number of (cell, cycle) samples")->check(CLI::PositiveNumber);
  bridge->add_option("--seed", o.seed, "Sampling seed");
  bridge->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (lemma->parsed() && o.lemma == "add3" && (o.p == 0 || o.q == 0)) {
      err << "lemma add3 needs --p and --q\n";
      return kExitUsage;
    }
    if (lemma->parsed() && o.lemma == "sweep" && bound_opt->count() == 0) o.bound = 1000;
    if (catalog->parsed()) return cmd_catalog(out);
    if (search->parsed()) return cmd_search(o, out, err);
    if (rechk->parsed()) return cmd_recheck(o, out, err);
    if (hand->parsed()) return cmd_verify_hand(o, out, err);
    if (e2e->parsed()) return cmd_e2e(o, out, err);
    if (lemma->parsed()) return cmd_lemma(o, out);
    if (o56->parsed()) return cmd_order56(o, out);
    if (bridge->parsed()) return cmd_bridge(o, out, err);
  } catch (const ConcreteError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace hamcert
