#pragma once

#include <cstdint>
#include <vector>

#include "filling/diagram.hpp"

namespace filling {

/// All van Kampen diagrams with boundary word w and at most max_area faces,
/// up to combinatorial-map isomorphism fixing the boundary, built by
/// canonical face-by-face gluing (glue a relator face behind the smallest
/// pending dart, or sew two pending darts together) with isomorph
/// rejection.  w must be reduced.  Throws BudgetError with partial-count
/// diagnostics once max_states search states have been expanded.
std::vector<VanKampenDiagram> enumerate_diagrams(const Presentation& p, const Word& w,
                                                 int max_area,
                                                 std::int64_t max_states = 5000000);

/// Membership test for the subgroup of Z^generators spanned by the relator
/// exponent vectors; a cheap necessary condition for null-homotopy used to
/// prune enumeration.
class ExponentLattice {
 public:
  explicit ExponentLattice(const Presentation& p);
  std::vector<long long> exponents(const Word& w) const;
  bool contains(std::vector<long long> v) const;
  bool may_be_null_homotopic(const Word& w) const { return contains(exponents(w)); }

 private:
  std::size_t generators_;
  std::vector<std::vector<long long>> basis_;  // echelon columns
  std::vector<std::size_t> pivot_rows_;
};

}  // namespace filling
