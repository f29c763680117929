#pragma once

#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>

#include "json.hpp"

#include "derange/identities.hpp"
#include "derange/involution.hpp"
#include "derange/permutation.hpp"
#include "derange/polynomial.hpp"

namespace derange {

using json = nlohmann::ordered_json;

/// Exact integers render as JSON numbers when they fit in 64 bits and as
/// decimal strings otherwise.
inline json to_json(const Integer& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() && value <= std::numeric_limits<std::int64_t>::max()) {
    return value.convert_to<std::int64_t>();
  }
  return value.str();
}

inline json to_json(const StatReport& r) {
  return json{{"inv", r.inv},         {"sign", r.sign},       {"exc_idx", r.exc_idx},
              {"exc_val", r.exc_val}, {"rlm_idx", r.rlm_idx}, {"rlm_val", r.rlm_val},
              {"fix", r.fix},         {"cycle_type", r.cycle_type}};
}

/// {input, output, case, image_case, touched_position}
inline json to_json(const PsiTrace& t) {
  return json{{"input", t.input.to_string()},
              {"output", t.output.to_string()},
              {"case", t.case_label.to_string()},
              {"image_case", t.image_case.to_string()},
              {"touched_position", t.touched_position ? json(*t.touched_position) : json(nullptr)}};
}

/// {identity, n, equal, lhs_terms, rhs_terms, first_discrepancy, elapsed_ms,
/// lhs, rhs}. `with_timing = false` emits elapsed_ms as null so that the
/// record is reproducible byte for byte.
inline json to_json(const VerificationResult& r, bool with_timing = true) {
  json discrepancy = nullptr;
  if (r.first_discrepancy) {
    discrepancy = json{{"monomial", r.first_discrepancy->monomial.to_string()},
                       {"lhs", to_json(r.first_discrepancy->lhs)},
                       {"rhs", to_json(r.first_discrepancy->rhs)}};
  }
  json elapsed = nullptr;
  if (with_timing) elapsed = std::chrono::duration<double, std::milli>(r.elapsed).count();
  return json{{"identity", r.identity},
              {"n", r.n},
              {"equal", r.equal},
              {"lhs_terms", r.lhs.size()},
              {"rhs_terms", r.rhs.size()},
              {"first_discrepancy", discrepancy},
              {"elapsed_ms", elapsed},
              {"lhs", r.lhs.to_string()},
              {"rhs", r.rhs.to_string()}};
}

}  // namespace derange
