#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "filling/diagram.hpp"

namespace filling {

/// Exact filling data for one certified null-homotopic word, relative to
/// the declared area budget: Area and Diam minimize over every diagram
/// with area within budget, FL minimizes the exact per-diagram filling
/// length (fl_is_exact is false when the exact search refused and the
/// scheduler's realized value stands in as an upper bound).
struct WordFillingData {
  Word word;
  int area = 0;
  int diameter = 0;
  std::optional<int> fl;
  bool fl_is_exact = true;
  std::optional<VanKampenDiagram> witness;  // a minimal-area diagram
};

/// The filling functions f0 (Dehn), g0 (isodiametric) and h0 (filling
/// length) tabulated for word lengths up to n_max over all reduced words
/// certified null-homotopic within the area budget.  Rows are flagged
/// budget-limited when some candidate word of that length or shorter
/// passed the abelianized necessary condition but no diagram was found
/// within budget, or when some FL value is only an upper bound.
struct FillingTable {
  int n_max = 0;
  int area_budget = 0;
  std::vector<int> f0, g0, h0;          // indexed by n, 0..n_max
  std::vector<bool> budget_limited;     // per n
  std::vector<WordFillingData> words;   // certified words only
  std::int64_t words_considered = 0;    // reduced words passing the lattice filter
  std::int64_t words_certified = 0;
  std::vector<VanKampenDiagram> diagrams;  // every enumerated diagram, if kept
};

FillingTable filling_functions(const Presentation& p, int n_max, int max_area,
                               bool keep_diagrams = false,
                               std::int64_t fl_node_budget = 4000000);

/// CSV with stable columns: n,f0,g0,h0,budget_flag.
std::string table_to_csv(const FillingTable& t);

}  // namespace filling
