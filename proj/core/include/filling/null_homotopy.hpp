#pragma once

#include <optional>

#include "filling/diagram.hpp"

namespace filling {

/// Bounded certification of null-homotopy: returns a witness diagram with
/// boundary w and area within the budget when one exists, and nullopt when
/// the bounded search found none.  A nullopt certifies only the budget, not
/// non-triviality of the word: the word problem is not decided here.
std::optional<VanKampenDiagram> is_null_homotopic_bounded(const Presentation& p, const Word& w,
                                                          int area_budget);

}  // namespace filling
