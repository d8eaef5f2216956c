#pragma once

#include "hamcert/casework.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace hamcert {

class CertificateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Certificate {
  CaseCell cell;
  CellResult result;
};

/// Fields in fixed order: prop, group, gens, chi_p, chi_q, outcome, then
/// whichever of strategy/cycle/cycle2/norms, exception, reason apply.
nlohmann::ordered_json certificate_json(const CaseCell& cell, const CellResult& result);
std::string certificate_line(const CaseCell& cell, const CellResult& result);

/// Throws CertificateError on malformed input.
Certificate parse_certificate(const std::string& line);

/// Writes one line per cell, in cell order.
void write_certificates(std::ostream& out, const CaseReport& report);

struct RecheckResult {
  bool ok = false;
  std::string message;
};

/// Re-verifies a certificate from the line alone, using routes independent
/// of the driver: the projected walk is re-checked as a hamiltonian cycle,
/// voltages are recomputed by step-by-step products, norms by resultants,
/// and exception witnesses by their stored automorphism.
RecheckResult recheck(const Certificate& cert);

}  // namespace hamcert
