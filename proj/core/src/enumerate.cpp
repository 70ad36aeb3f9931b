#include "filling/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>
#include <string>

#include "filling/errors.hpp"

namespace filling {

ExponentLattice::ExponentLattice(const Presentation& p)
    : generators_(p.alphabet().size()) {
  std::vector<std::vector<long long>> cols;
  for (const Word& r : p.relators()) {
    std::vector<long long> v(generators_, 0);
    for (Letter l : r) v[static_cast<std::size_t>(l.gen)] += l.sign;
    cols.push_back(std::move(v));
  }
  // Integer column echelon form; column operations preserve the lattice.
  std::size_t rank = 0;
  for (std::size_t row = 0; row < generators_ && rank < cols.size(); ++row) {
    while (true) {
      std::size_t best = cols.size();
      for (std::size_t j = rank; j < cols.size(); ++j)
        if (cols[j][row] != 0 &&
            (best == cols.size() || std::llabs(cols[j][row]) < std::llabs(cols[best][row])))
          best = j;
      if (best == cols.size()) break;
      std::swap(cols[rank], cols[best]);
      bool clean = true;
      for (std::size_t j = rank + 1; j < cols.size(); ++j) {
        if (cols[j][row] == 0) continue;
        long long q = cols[j][row] / cols[rank][row];
        for (std::size_t i = 0; i < generators_; ++i) cols[j][i] -= q * cols[rank][i];
        if (cols[j][row] != 0) clean = false;
      }
      if (clean) {
        pivot_rows_.push_back(row);
        basis_.push_back(cols[rank]);
        ++rank;
        break;
      }
    }
  }
}

std::vector<long long> ExponentLattice::exponents(const Word& w) const {
  std::vector<long long> v(generators_, 0);
  for (Letter l : w) v[static_cast<std::size_t>(l.gen)] += l.sign;
  return v;
}

bool ExponentLattice::contains(std::vector<long long> v) const {
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    long long pivot = basis_[k][pivot_rows_[k]];
    long long entry = v[pivot_rows_[k]];
    if (entry % pivot != 0) return false;
    long long q = entry / pivot;
    for (std::size_t i = 0; i < generators_; ++i) v[i] -= q * basis_[k][i];
  }
  for (long long x : v)
    if (x != 0) return false;
  return true;
}

namespace {

// Partial sewing of the disc bounded by the input word.  The outer cycle is
// fixed from the start; holes are the unfilled regions, as closed walks of
// pending darts.  Pending darts either become face darts (glue) or are
// sewn away in matching pairs (fold).
struct BuildState {
  std::vector<Dart> darts;
  std::vector<char> dead;
  std::vector<std::vector<DartId>> faces;
  std::vector<std::vector<DartId>> holes;
  int next_vertex = 0;
  int budget = 0;

  void merge_vertices(VertexId keep, VertexId drop) {
    if (keep == drop) return;
    if (drop < keep) std::swap(keep, drop);
    for (Dart& d : darts)
      if (d.origin == drop) d.origin = keep;
  }
};

struct Enumerator {
  const Presentation& p;
  const ExponentLattice lattice;
  std::vector<DartId> outer;
  std::int64_t states_left;
  std::vector<VanKampenDiagram> found;
  std::set<std::string> seen;

  Enumerator(const Presentation& pres, std::int64_t max_states)
      : p(pres), lattice(pres), states_left(max_states) {}

  // Rotations of relators and their inverses beginning with the letter.
  std::vector<Word> alignments(Letter first) const {
    std::set<Word> out;
    for (const Word& r : p.relators())
      for (const Word& base : {r, inverse(r)})
        for (std::size_t s = 0; s < base.size(); ++s)
          if (base[s] == first) {
            Word u;
            for (std::size_t i = 0; i < base.size(); ++i) u.push_back(base[(s + i) % base.size()]);
            out.insert(std::move(u));
          }
    return {out.begin(), out.end()};
  }

  bool prune(const BuildState& s) const {
    for (const auto& hole : s.holes) {
      std::vector<long long> v(p.alphabet().size(), 0);
      for (DartId d : hole) {
        Letter l = s.darts[static_cast<std::size_t>(d)].label;
        v[static_cast<std::size_t>(l.gen)] += l.sign;
      }
      if (s.budget == 0) {
        for (long long x : v)
          if (x != 0) return true;
      } else if (!lattice.contains(std::move(v))) {
        return true;
      }
    }
    return false;
  }

  VertexId head(const BuildState& s, DartId d) const {
    return s.darts[static_cast<std::size_t>(s.darts[static_cast<std::size_t>(d)].twin)].origin;
  }

  void emit(const BuildState& s) {
    // Compact the alive darts and derive rotations from the face structure:
    // the rotation successor of a dart is the face successor of its twin.
    std::vector<int> new_id(s.darts.size(), -1);
    std::vector<DartId> alive;
    for (std::size_t d = 0; d < s.darts.size(); ++d)
      if (!s.dead[d]) {
        new_id[d] = static_cast<int>(alive.size());
        alive.push_back(static_cast<DartId>(d));
      }
    std::vector<DartId> face_next(s.darts.size(), -1);
    auto thread = [&](const std::vector<DartId>& cycle) {
      for (std::size_t i = 0; i < cycle.size(); ++i)
        face_next[static_cast<std::size_t>(cycle[i])] = cycle[(i + 1) % cycle.size()];
    };
    thread(outer);
    for (const auto& f : s.faces) thread(f);
    for (DartId d : alive)
      if (face_next[static_cast<std::size_t>(d)] < 0)
        throw std::logic_error("enumerate: dart in no face cycle");

    std::vector<int> vertex_map;
    int vcount = 0;
    {
      std::vector<int> tmp(static_cast<std::size_t>(s.next_vertex), -1);
      for (DartId d : alive) {
        int v = s.darts[static_cast<std::size_t>(d)].origin;
        if (tmp[static_cast<std::size_t>(v)] < 0) tmp[static_cast<std::size_t>(v)] = vcount++;
      }
      vertex_map = std::move(tmp);
    }

    RawDiagram raw;
    raw.vertices = vcount;
    raw.base = vertex_map[0] >= 0 ? vertex_map[0] : 0;
    raw.darts.resize(alive.size());
    for (DartId d : alive) {
      const Dart& old = s.darts[static_cast<std::size_t>(d)];
      raw.darts[static_cast<std::size_t>(new_id[static_cast<std::size_t>(d)])] =
          Dart{vertex_map[static_cast<std::size_t>(old.origin)],
               new_id[static_cast<std::size_t>(old.twin)], old.label};
    }
    raw.rotations.assign(static_cast<std::size_t>(vcount), {});
    {
      std::vector<char> placed(alive.size(), 0);
      for (DartId d : alive) {
        std::size_t nd = static_cast<std::size_t>(new_id[static_cast<std::size_t>(d)]);
        if (placed[nd]) continue;
        // Follow the derived rotation cycle at this vertex.
        std::vector<DartId> rot;
        DartId cur = d;
        do {
          std::size_t nc = static_cast<std::size_t>(new_id[static_cast<std::size_t>(cur)]);
          if (placed[nc]) throw std::logic_error("enumerate: inconsistent rotation cycle");
          placed[nc] = 1;
          rot.push_back(static_cast<DartId>(nc));
          cur = face_next[static_cast<std::size_t>(s.darts[static_cast<std::size_t>(cur)].twin)];
        } while (cur != d);
        VertexId v = raw.darts[static_cast<std::size_t>(rot.front())].origin;
        for (DartId rd : rot)
          if (raw.darts[static_cast<std::size_t>(rd)].origin != v)
            throw std::logic_error("enumerate: rotation cycle crosses vertices");
        raw.rotations[static_cast<std::size_t>(v)] = std::move(rot);
      }
    }
    auto remap = [&](const std::vector<DartId>& cycle) {
      std::vector<DartId> out;
      out.reserve(cycle.size());
      for (DartId d : cycle) out.push_back(new_id[static_cast<std::size_t>(d)]);
      return out;
    };
    raw.boundary = remap(outer);
    for (const auto& f : s.faces) raw.faces.push_back(remap(f));

    VanKampenDiagram diagram = VanKampenDiagram::validate(std::move(raw), p);
    std::string canon = diagram.canonical_form();
    if (seen.count(canon)) {
      // Duplicate generation: metrics must agree before rejection.
      for (const auto& prev : found)
        if (prev.canonical_form() == canon) {
          Metrics a = metrics(prev), b = metrics(diagram);
          if (a.area != b.area || a.diameter != b.diameter || a.radius != b.radius ||
              a.max_valence != b.max_valence || a.boundary_length != b.boundary_length)
            throw std::logic_error("enumerate: isomorphic duplicates with different metrics");
        }
      return;
    }
    seen.insert(std::move(canon));
    found.push_back(std::move(diagram));
  }

  void search(const BuildState& s) {
    if (s.holes.empty()) {
      emit(s);
      return;
    }
    if (--states_left < 0)
      throw BudgetError("enumerate_diagrams: state guard exceeded after finding " +
                        std::to_string(found.size()) + " diagrams");
    if (prune(s)) return;

    // Canonical target: the hole holding the globally smallest pending dart.
    std::size_t hole_index = 0;
    DartId target = -1;
    for (std::size_t h = 0; h < s.holes.size(); ++h)
      for (DartId d : s.holes[h])
        if (target < 0 || d < target) {
          target = d;
          hole_index = h;
        }
    std::vector<DartId> hole = s.holes[hole_index];
    std::rotate(hole.begin(), std::find(hole.begin(), hole.end(), target), hole.end());
    const Letter target_label = s.darts[static_cast<std::size_t>(target)].label;

    // Fold the target onto each label-inverse pending dart of its hole.
    for (std::size_t q = 1; q < hole.size(); ++q) {
      DartId partner = hole[q];
      if (s.darts[static_cast<std::size_t>(partner)].label != inverse(target_label)) continue;
      BuildState next = s;
      DartId o1 = next.darts[static_cast<std::size_t>(target)].twin;
      DartId o2 = next.darts[static_cast<std::size_t>(partner)].twin;
      next.darts[static_cast<std::size_t>(o1)].twin = o2;
      next.darts[static_cast<std::size_t>(o2)].twin = o1;
      next.dead[static_cast<std::size_t>(target)] = 1;
      next.dead[static_cast<std::size_t>(partner)] = 1;
      VertexId x = next.darts[static_cast<std::size_t>(target)].origin;
      VertexId y = next.darts[static_cast<std::size_t>(o1)].origin;
      VertexId z = next.darts[static_cast<std::size_t>(partner)].origin;
      VertexId w = next.darts[static_cast<std::size_t>(o2)].origin;
      next.merge_vertices(y, z);
      next.merge_vertices(x, w);
      next.holes.erase(next.holes.begin() + static_cast<std::ptrdiff_t>(hole_index));
      std::vector<DartId> part1(hole.begin() + 1, hole.begin() + static_cast<std::ptrdiff_t>(q));
      std::vector<DartId> part2(hole.begin() + static_cast<std::ptrdiff_t>(q) + 1, hole.end());
      if (!part1.empty()) next.holes.push_back(std::move(part1));
      if (!part2.empty()) next.holes.push_back(std::move(part2));
      search(next);
    }

    // Glue a relator face behind the target dart.
    if (s.budget > 0) {
      for (const Word& u : alignments(target_label)) {
        VertexId x = s.darts[static_cast<std::size_t>(target)].origin;
        VertexId y = head(s, target);
        if (u.size() == 1 && x != y) continue;  // a monogon needs a loop edge
        BuildState next = s;
        --next.budget;
        std::vector<DartId> cycle{target};
        std::vector<DartId> pending;
        VertexId from = y;
        for (std::size_t i = 1; i < u.size(); ++i) {
          VertexId to = i + 1 < u.size() ? next.next_vertex++ : x;
          DartId g = static_cast<DartId>(next.darts.size());
          next.darts.push_back(Dart{from, g + 1, u[i]});
          next.darts.push_back(Dart{to, g, inverse(u[i])});
          next.dead.push_back(0);
          next.dead.push_back(0);
          cycle.push_back(g);
          pending.push_back(g + 1);
          from = to;
        }
        next.faces.push_back(std::move(cycle));
        std::vector<DartId>& h = next.holes[hole_index];
        auto at = std::find(h.begin(), h.end(), target);
        std::size_t pos = static_cast<std::size_t>(at - h.begin());
        h.erase(at);
        h.insert(h.begin() + static_cast<std::ptrdiff_t>(pos), pending.rbegin(), pending.rend());
        if (h.empty()) next.holes.erase(next.holes.begin() + static_cast<std::ptrdiff_t>(hole_index));
        search(next);
      }
    }
  }
};

}  // namespace

std::vector<VanKampenDiagram> enumerate_diagrams(const Presentation& p, const Word& w,
                                                 int max_area, std::int64_t max_states) {
  if (!is_reduced(w))
    throw ValidationError(ValidationError::Kind::Malformed,
                          "enumerate_diagrams: boundary word must be reduced");
  Enumerator e(p, max_states);
  if (w.empty()) {
    RawDiagram raw;
    raw.vertices = 1;
    raw.base = 0;
    raw.rotations = {{}};
    e.found.push_back(VanKampenDiagram::validate(std::move(raw), p));
    return std::move(e.found);
  }

  BuildState init;
  const int n = static_cast<int>(w.size());
  init.next_vertex = n;
  init.budget = max_area;
  for (int i = 0; i < n; ++i) {
    DartId out = static_cast<DartId>(init.darts.size());
    init.darts.push_back(Dart{i, out + 1, w[static_cast<std::size_t>(i)]});
    init.darts.push_back(Dart{(i + 1) % n, out, inverse(w[static_cast<std::size_t>(i)])});
    init.dead.push_back(0);
    init.dead.push_back(0);
    e.outer.push_back(out);
  }
  std::vector<DartId> hole;
  for (int i = n - 1; i >= 0; --i) hole.push_back(2 * i + 1);
  init.holes.push_back(std::move(hole));

  e.search(init);
  std::sort(e.found.begin(), e.found.end(),
            [](const VanKampenDiagram& a, const VanKampenDiagram& b) {
              if (a.area() != b.area()) return a.area() < b.area();
              return a.canonical_form() < b.canonical_form();
            });
  return std::move(e.found);
}

}  // namespace filling
