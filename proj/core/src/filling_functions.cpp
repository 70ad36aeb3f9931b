#include "filling/filling_functions.hpp"

#include <algorithm>
#include <functional>

#include "filling/enumerate.hpp"
#include "filling/errors.hpp"
#include "filling/homotopy.hpp"

namespace filling {

FillingTable filling_functions(const Presentation& p, int n_max, int max_area,
                               bool keep_diagrams, std::int64_t fl_node_budget) {
  FillingTable t;
  t.n_max = n_max;
  t.area_budget = max_area;
  t.f0.assign(static_cast<std::size_t>(n_max) + 1, 0);
  t.g0.assign(static_cast<std::size_t>(n_max) + 1, 0);
  t.h0.assign(static_cast<std::size_t>(n_max) + 1, 0);
  t.budget_limited.assign(static_cast<std::size_t>(n_max) + 1, false);

  const ExponentLattice lattice(p);
  const int gens = static_cast<int>(p.alphabet().size());

  std::vector<int> area_max(static_cast<std::size_t>(n_max) + 1, 0);
  std::vector<int> diam_max(static_cast<std::size_t>(n_max) + 1, 0);
  std::vector<int> fl_max(static_cast<std::size_t>(n_max) + 1, 0);
  std::vector<bool> limited(static_cast<std::size_t>(n_max) + 1, false);

  auto consider = [&](const Word& w) {
    if (!lattice.may_be_null_homotopic(w)) return;
    ++t.words_considered;
    auto diagrams = enumerate_diagrams(p, w, max_area);
    std::size_t n = w.size();
    if (diagrams.empty()) {
      limited[n] = true;
      return;
    }
    ++t.words_certified;
    WordFillingData data;
    data.word = w;
    data.area = diagrams.front().area();
    data.witness = diagrams.front();
    data.diameter = INT32_MAX;
    int fl = INT32_MAX;
    for (const auto& d : diagrams) {
      data.diameter = std::min(data.diameter, metrics(d).diameter);
      try {
        fl = std::min(fl, fl_exact(d, fl_node_budget));
      } catch (const BudgetError&) {
        data.fl_is_exact = false;
        if (p.is_triangular())
          fl = std::min(fl, fl_schedule_prop2(d).realized_fl);
      }
    }
    if (fl != INT32_MAX) data.fl = fl;
    area_max[n] = std::max(area_max[n], data.area);
    diam_max[n] = std::max(diam_max[n], data.diameter);
    if (data.fl) fl_max[n] = std::max(fl_max[n], *data.fl);
    if (!data.fl || !data.fl_is_exact) limited[n] = true;
    if (keep_diagrams)
      for (auto& d : diagrams) t.diagrams.push_back(std::move(d));
    t.words.push_back(std::move(data));
  };

  // All reduced words of length up to n_max, lexicographically.
  Word w;
  std::function<void(int)> walk = [&](int remaining) {
    consider(w);
    if (remaining == 0) return;
    for (int g = 0; g < gens; ++g)
      for (int sign : {+1, -1}) {
        Letter l{static_cast<std::int16_t>(g), static_cast<std::int8_t>(sign)};
        if (!w.empty() && w.back() == inverse(l)) continue;
        w.push_back(l);
        walk(remaining - 1);
        w.pop_back();
      }
  };
  walk(n_max);

  // Tabulate running maxima so the functions are monotone in n.
  int fa = 0, fd = 0, ff = 0;
  bool any_limited = false;
  for (int n = 0; n <= n_max; ++n) {
    fa = std::max(fa, area_max[static_cast<std::size_t>(n)]);
    fd = std::max(fd, diam_max[static_cast<std::size_t>(n)]);
    ff = std::max(ff, fl_max[static_cast<std::size_t>(n)]);
    any_limited = any_limited || limited[static_cast<std::size_t>(n)];
    t.f0[static_cast<std::size_t>(n)] = fa;
    t.g0[static_cast<std::size_t>(n)] = fd;
    t.h0[static_cast<std::size_t>(n)] = ff;
    t.budget_limited[static_cast<std::size_t>(n)] = any_limited;
  }
  return t;
}

std::string table_to_csv(const FillingTable& t) {
  std::string out = "n,f0,g0,h0,budget_flag\n";
  for (int n = 0; n <= t.n_max; ++n) {
    out += std::to_string(n) + "," + std::to_string(t.f0[static_cast<std::size_t>(n)]) + "," +
           std::to_string(t.g0[static_cast<std::size_t>(n)]) + "," +
           std::to_string(t.h0[static_cast<std::size_t>(n)]) + "," +
           (t.budget_limited[static_cast<std::size_t>(n)] ? "1" : "0") + "\n";
  }
  return out;
}

}  // namespace filling
