#include "filling/null_homotopy.hpp"

#include "filling/enumerate.hpp"

namespace filling {

std::optional<VanKampenDiagram> is_null_homotopic_bounded(const Presentation& p, const Word& w,
                                                          int area_budget) {
  auto diagrams = enumerate_diagrams(p, w, area_budget);
  if (diagrams.empty()) return std::nullopt;
  return diagrams.front();  // enumeration sorts by area, so this is minimal
}

}  // namespace filling
