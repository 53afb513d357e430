#ifndef RSTHL_VERIFY_SUITE_HPP
#define RSTHL_VERIFY_SUITE_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "rsthl/verify/model.hpp"

namespace rsthl {

enum class Suite { Ambient, Submanifold, Equivalence, All };

std::optional<Suite> parse_suite(std::string_view name);

struct CheckReport {
  std::vector<CheckEntry> entries;

  /// Pass iff no entry failed; skipped entries do not fail a report.
  bool passed() const;
  const CheckEntry* find(std::string_view name) const;
};

/// Runs the requested checks in order. When a gating check fails, the
/// remaining stages are reported as skipped with the reason.
CheckReport run_suite(const ModelFile& model, Suite suite);

/// {"verdict": "pass"|"fail", "entries": [{name, anchor, status, residual_zero, detail}]}
nlohmann::json report_to_json(const CheckReport& report);

/// One line per entry followed by the verdict.
std::string report_to_text(const CheckReport& report);

/// The eight nonzero Levi-Civita components expected on the four-dimensional
/// factor of the example, on the frame X1..X4, E.
Connection<Scalar> example47_reference_connection();

/// Which reading of the four-dimensional example metric reproduces the
/// reference connection: diag(1, 1, -1, -1) or the alternating diag(1, -1, 1, -1).
CheckEntry example47_signature_finding(const LieAlgebra<Scalar>& algebra);

}  // namespace rsthl

#endif  // RSTHL_VERIFY_SUITE_HPP
