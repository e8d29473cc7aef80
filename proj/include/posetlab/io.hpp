#pragma once

// JSON poset files:
//   {"elements": [...], "covers": [[x, y], ...],
//    "labeling": {"omega": {name: label}} | {"epsilon": [[x, y, +-1], ...]}}
// The labeling is optional and defaults to the natural labeling (all +1).

#include <string>
#include <string_view>

#include "posetlab/polynomial.hpp"
#include "posetlab/poset.hpp"
#include <json.hpp>

namespace posetlab {

/// Throws ParseError (with line and column for syntax errors) or the poset
/// construction errors.
LabeledPoset parse_poset_file(std::string_view text);
LabeledPoset read_poset_file(const std::string& path);

nlohmann::json poset_file_json(const LabeledPoset& lp);
nlohmann::json poset_file_json(const Poset& poset);

/// Compact canonical form: sorted keys, covers and epsilon sorted by name,
/// elements in their given order.
std::string serialize(const LabeledPoset& lp);
std::string serialize(const Poset& poset);

/// Decimal strings, constant term first.
nlohmann::json polynomial_json(const IntPolynomial& f);
nlohmann::json bigint_json(const BigInt& n);

}  // namespace posetlab
