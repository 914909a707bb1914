#pragma once

#include <string>

#include "filled/classifier.hpp"
#include "filled/group.hpp"
#include "filled/search.hpp"
#include "filled/witness.hpp"

namespace filled {

// JSON rendering (schema "v1", single line, stable field order) plus the
// human-readable one-liners used by the CLI. Elapsed times are omitted when
// `deterministic` is set so repeated runs are byte-identical.

std::string status_name(Status s);
std::string verdict_name(SearchVerdict v);

/// "{x^2, x^5, x^8, ...}" using element names.
std::string render_set(const FiniteGroup& g, const ElementSet& s, std::size_t max_elems = 0);

std::string certificate_json(const FiniteGroup& g, const Certificate& c);
std::string certificate_text(const FiniteGroup& g, const Certificate& c);

std::string search_outcome_json(const FiniteGroup& g, const SearchOutcome& o,
                                const SearchBudget& budget, bool deterministic);
std::string search_outcome_text(const FiniteGroup& g, const SearchOutcome& o,
                                bool deterministic);

std::string verdict_json(const FiniteGroup& g, const Verdict& v);
std::string verdict_text(const FiniteGroup& g, const Verdict& v);

}  // namespace filled
