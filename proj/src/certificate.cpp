#include "hamcert/certificate.hpp"

#include "hamcert/ham_search.hpp"

#include <algorithm>
#include <limits>
#include <ostream>

namespace hamcert {

using nlohmann::ordered_json;

namespace {

ordered_json character_json(const Character& chi) {
  return ordered_json{{"m", chi.conductor}, {"exp", chi.exponents}};
}

int character_index(GroupId id, const ordered_json& j) {
  Character chi{j.at("m").get<int>(), j.at("exp").get<std::vector<int>>()};
  const auto& all = characters8(id);
  auto it = std::find(all.begin(), all.end(), chi);
  if (it == all.end()) throw CertificateError("unknown character");
  return static_cast<int>(it - all.begin());
}

ordered_json norm_json(const BigInt& n) {
  if (n >= std::numeric_limits<long long>::min() && n <= std::numeric_limits<long long>::max())
    return static_cast<long long>(n);
  return n.str();
}

BigInt norm_from_json(const ordered_json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  return BigInt(j.get<std::string>());
}

template <class E>
E enum_from_string(const std::string& text, std::initializer_list<E> values) {
  for (E v : values)
    if (to_string(v) == text) return v;
  throw CertificateError("unknown value: " + text);
}

}  // namespace

ordered_json certificate_json(const CaseCell& cell, const CellResult& result) {
  const auto& g = cell.table();
  ordered_json j;
  j["prop"] = std::string(to_string(cell.prop));
  j["group"] = std::string(to_string(cell.group));
  auto gens = ordered_json::array();
  for (const auto& s : cell.gens) gens.push_back(generator_label(g, s));
  j["gens"] = gens;
  j["chi_p"] = character_json(cell.character_p());
  j["chi_q"] = character_json(cell.character_q());
  j["outcome"] = std::string(to_string(result.outcome));
  if (result.outcome == Outcome::certified) {
    j["strategy"] = std::string(to_string(result.strategy));
    j["cycle"] = result.cycle.steps;
    if (result.strategy == Strategy::pair) j["cycle2"] = result.cycle2.steps;
    ordered_json norms;
    norms["p"] = norm_json(result.norm_p);
    if (result.strategy == Strategy::pair) norms["p2"] = norm_json(result.norm_p2);
    norms["q"] = norm_json(result.norm_q);
    j["norms"] = norms;
  } else if (result.outcome == Outcome::exception) {
    const auto& e = *result.exception;
    auto images = ordered_json::array();
    for (Elem x : e.images) images.push_back(g.label(x));
    j["exception"] = ordered_json{{"pattern", e.pattern_id}, {"automorphism", images}, {"swap_pq", e.swap_pq}};
  } else if (result.outcome == Outcome::excluded) {
    j["reason"] = result.reason;
  }
  return j;
}

std::string certificate_line(const CaseCell& cell, const CellResult& result) {
  return certificate_json(cell, result).dump();
}

Certificate parse_certificate(const std::string& line) {
  try {
    const auto j = ordered_json::parse(line);
    Certificate c;
    c.cell.prop = prop_from_string(j.at("prop").get<std::string>());
    c.cell.group = group_id_from_string(j.at("group").get<std::string>());
    const auto& g = c.cell.table();
    for (const auto& s : j.at("gens")) c.cell.gens.push_back(parse_generator(g, s.get<std::string>()));
    c.cell.chi_p = character_index(c.cell.group, j.at("chi_p"));
    c.cell.chi_q = character_index(c.cell.group, j.at("chi_q"));
    auto& r = c.result;
    r.outcome = enum_from_string(j.at("outcome").get<std::string>(),
                                 {Outcome::certified, Outcome::exception, Outcome::excluded, Outcome::unexplained});
    if (r.outcome == Outcome::certified) {
      r.strategy = enum_from_string(j.at("strategy").get<std::string>(),
                                    {Strategy::fgl, Strategy::single, Strategy::pair});
      r.cycle.steps = j.at("cycle").get<std::vector<int>>();
      const auto& norms = j.at("norms");
      r.norm_p = norm_from_json(norms.at("p"));
      r.norm_q = norm_from_json(norms.at("q"));
      if (r.strategy == Strategy::pair) {
        r.cycle2.steps = j.at("cycle2").get<std::vector<int>>();
        r.norm_p2 = norm_from_json(norms.at("p2"));
      }
    } else if (r.outcome == Outcome::exception) {
      const auto& e = j.at("exception");
      ExceptionMatch m{e.at("pattern").get<std::string>(), {}, e.at("swap_pq").get<bool>()};
      for (const auto& x : e.at("automorphism")) m.images.push_back(g.at(x.get<std::string>()));
      r.exception = std::move(m);
    } else if (r.outcome == Outcome::excluded) {
      r.reason = j.at("reason").get<std::string>();
    }
    return c;
  } catch (const CertificateError&) {
    throw;
  } catch (const std::exception& e) {
    throw CertificateError(std::string("malformed certificate: ") + e.what());
  }
}

void write_certificates(std::ostream& out, const CaseReport& report) {
  for (std::size_t i = 0; i < report.cells.size(); ++i)
    out << certificate_line(report.cells[i], report.results[i]) << '\n';
}

namespace {

RecheckResult fail(std::string msg) { return {false, std::move(msg)}; }

bool valid_steps(const CodedCycle& c, std::size_t ngens) {
  return std::all_of(c.steps.begin(), c.steps.end(), [&](int s) {
    return s != 0 && static_cast<std::size_t>(s < 0 ? -s : s) <= ngens;
  });
}

/// Exponent vector selecting the generators flagged by `pick`.
template <class Pred>
std::vector<int> select(const std::vector<GeneratorSpec>& gens, Pred pick) {
  std::vector<int> e;
  for (const auto& s : gens) e.push_back(pick(s) ? 1 : 0);
  return e;
}

RecheckResult recheck_cycle(const CaseCell& cell, const CodedCycle& c, const BigInt& stored_norm_p) {
  const auto& g = cell.table();
  if (!valid_steps(c, cell.gens.size())) return fail("cycle uses an unknown generator");
  const auto steps = project_steps(g, c, cell.gens);
  if (!verify_ham_cycle(g, std::span<const Elem>(steps))) return fail("cycle is not hamiltonian in the quotient");
  const auto ep = select(cell.gens, [](const GeneratorSpec& s) { return s.inv_p; });
  const BigInt np = norm_resultant(walk_voltage_by_product(g, c, cell.gens, ep, cell.character_p()));
  if (np != stored_norm_p) return fail("p-norm mismatch: recomputed " + np.str());
  if (!smooth5(np)) return fail("p-norm is not 5-smooth");
  return {true, ""};
}

}  // namespace

RecheckResult recheck(const Certificate& cert) {
  const auto& cell = cert.cell;
  const auto& r = cert.result;
  const auto& g = cell.table();
  const auto excluded = exclusion_reason(cell);
  if (r.outcome == Outcome::excluded) {
    if (!excluded) return fail("cell is not excluded");
    if (*excluded != r.reason) return fail("exclusion reason differs: " + *excluded);
    return {true, "excluded"};
  }
  if (excluded) return fail("cell should be excluded: " + *excluded);
  if (r.outcome == Outcome::unexplained) return fail("unexplained cell");
  if (r.outcome == Outcome::exception) {
    const auto& e = *r.exception;
    const auto allowed = allowed_exceptions(cell.prop);
    if (std::find(allowed.begin(), allowed.end(), e.pattern_id) == allowed.end())
      return fail("pattern " + e.pattern_id + " not allowed here");
    if (!witness_matches(cell, exception_pattern(e.pattern_id), e.images, e.swap_pq))
      return fail("automorphism witness does not carry the pattern onto the cell");
    return {true, "exception " + e.pattern_id};
  }

  if (auto c = recheck_cycle(cell, r.cycle, r.norm_p); !c.ok) return c;
  switch (r.strategy) {
    case Strategy::fgl: {
      const auto eq = select(cell.gens, [](const GeneratorSpec& s) { return s.inv_q; });
      const BigInt nq = norm_resultant(walk_voltage_by_product(g, r.cycle, cell.gens, eq, cell.character_q()));
      if (nq != r.norm_q) return fail("q-norm mismatch: recomputed " + nq.str());
      if (!smooth5(nq)) return fail("q-norm is not 5-smooth");
      return {true, "fgl"};
    }
    case Strategy::single:
    case Strategy::pair: {
      const auto e1 = select(cell.gens, [](const GeneratorSpec& s) { return s.inv_q && !s.q_secondary; });
      const auto e2 = select(cell.gens, [](const GeneratorSpec& s) { return s.inv_q && s.q_secondary; });
      const Character& chi = cell.character_q();
      const CycInt a1 = walk_voltage_by_product(g, r.cycle, cell.gens, e1, chi);
      const CycInt a2 = walk_voltage_by_product(g, r.cycle, cell.gens, e2, chi);
      if (r.strategy == Strategy::single) {
        if (!a2.is_zero()) return fail("secondary q-voltage is nonzero");
        const BigInt nq = norm_resultant(a1);
        if (nq != r.norm_q) return fail("q-norm mismatch: recomputed " + nq.str());
        if (!smooth5(nq)) return fail("q-norm is not 5-smooth");
        return {true, "single"};
      }
      if (auto c = recheck_cycle(cell, r.cycle2, r.norm_p2); !c.ok) return c;
      const CycInt b1 = walk_voltage_by_product(g, r.cycle2, cell.gens, e1, chi);
      const CycInt b2 = walk_voltage_by_product(g, r.cycle2, cell.gens, e2, chi);
      const BigInt nd = norm_resultant(a1 * b2 - a2 * b1);
      if (nd != r.norm_q) return fail("determinant norm mismatch: recomputed " + nd.str());
      if (!smooth5(nd)) return fail("determinant norm is not 5-smooth");
      return {true, "pair"};
    }
    case Strategy::none:
      break;
  }
  return fail("certified without a strategy");
}

}  // namespace hamcert
