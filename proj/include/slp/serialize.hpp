#pragma once

#include <string>

#include "json.hpp"
#include "slp/factorization.hpp"
#include "slp/grammar.hpp"

namespace slp {

/// {"start":"X7","productions":[{"lhs":"A","rhs":"a"},{"lhs":"X1","rhs":["A","B"]}, ...]}
nlohmann::json grammar_to_json(const Grammar& g);
/// Inverse of grammar_to_json. Malformed documents raise DomainError; the
/// result is not validated.
Grammar grammar_from_json(const nlohmann::json& doc);

/// {"phrases":["a","b","ab", ...]}
nlohmann::json factorization_to_json(const Factorization& f);

} // namespace slp
