#include "filling/homotopy.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include <json.hpp>

#include "filling/errors.hpp"

namespace filling {

namespace {
using VE = ValidationError;
}

HomotopyState::HomotopyState(std::shared_ptr<const VanKampenDiagram> diagram)
    : diagram_(std::move(diagram)),
      dart_alive_(diagram_->darts().size(), true),
      face_alive_(diagram_->faces().size(), true),
      vertex_alive_(static_cast<std::size_t>(diagram_->vertex_count()), true),
      boundary_(diagram_->boundary()) {}

Word HomotopyState::boundary_word() const {
  Word w;
  w.reserve(boundary_.size());
  for (DartId d : boundary_) w.push_back(diagram_->label(d));
  return w;
}

bool HomotopyState::terminal() const { return boundary_.empty(); }

int HomotopyState::valence(VertexId v) const {
  int n = 0;
  for (DartId d : diagram_->rotations()[static_cast<std::size_t>(v)])
    if (dart_alive_[static_cast<std::size_t>(d)]) ++n;
  return n;
}

int HomotopyState::alive_face_count() const {
  return static_cast<int>(std::count(face_alive_.begin(), face_alive_.end(), true));
}

std::vector<Move> HomotopyState::legal_moves() const {
  std::vector<Move> moves;
  const VanKampenDiagram& d = *diagram_;
  for (VertexId v = 0; v < d.vertex_count(); ++v) {
    if (!vertex_alive_[static_cast<std::size_t>(v)] || v == d.base()) continue;
    if (valence(v) != 1) continue;
    DartId out = -1;
    for (DartId e : d.rotations()[static_cast<std::size_t>(v)])
      if (dart_alive_[static_cast<std::size_t>(e)]) out = e;
    // The pendant edge must lie on no surviving face.
    FaceId f1 = d.face_of(out), f2 = d.face_of(d.twin(out));
    if ((f1 >= 0 && face_alive_[static_cast<std::size_t>(f1)]) ||
        (f2 >= 0 && face_alive_[static_cast<std::size_t>(f2)]))
      continue;
    moves.push_back({Move::Kind::OneCellCollapse, d.twin(out), v, -1});
  }
  for (DartId b : boundary_) {
    FaceId f = d.face_of(d.twin(b));
    if (f >= 0 && face_alive_[static_cast<std::size_t>(f)])
      moves.push_back({Move::Kind::TwoCellCollapse, b, -1, f});
  }
  return moves;
}

void HomotopyState::check_two_cell(const Move& m, std::size_t& position) const {
  const VanKampenDiagram& d = *diagram_;
  if (m.face < 0 || m.face >= static_cast<FaceId>(face_alive_.size()) ||
      !face_alive_[static_cast<std::size_t>(m.face)])
    throw VE(VE::Kind::IllegalMove, "two-cell collapse: face is not a live 2-cell");
  if (m.dart < 0 || m.dart >= static_cast<DartId>(dart_alive_.size()) ||
      !dart_alive_[static_cast<std::size_t>(m.dart)])
    throw VE(VE::Kind::IllegalMove, "two-cell collapse: edge is not live");
  auto it = std::find(boundary_.begin(), boundary_.end(), m.dart);
  if (it == boundary_.end())
    throw VE(VE::Kind::IllegalMove, "two-cell collapse: edge is not on the boundary");
  if (d.face_of(d.twin(m.dart)) != m.face)
    throw VE(VE::Kind::IllegalMove, "two-cell collapse: edge is not on the face");
  position = static_cast<std::size_t>(it - boundary_.begin());
}

HomotopyState HomotopyState::apply(const Move& m) const {
  const VanKampenDiagram& d = *diagram_;
  HomotopyState next = *this;
  if (m.kind == Move::Kind::OneCellCollapse) {
    if (m.vertex < 0 || m.vertex >= d.vertex_count() ||
        !vertex_alive_[static_cast<std::size_t>(m.vertex)])
      throw VE(VE::Kind::IllegalMove, "one-cell collapse: vertex is not live");
    if (m.vertex == d.base())
      throw VE(VE::Kind::IllegalMove, "one-cell collapse: cannot remove the base point");
    if (valence(m.vertex) != 1)
      throw VE(VE::Kind::IllegalMove, "one-cell collapse: vertex has valence != 1");
    if (m.dart < 0 || !dart_alive_[static_cast<std::size_t>(m.dart)] ||
        d.head(m.dart) != m.vertex)
      throw VE(VE::Kind::IllegalMove, "one-cell collapse: dart does not enter the vertex");
    FaceId f1 = d.face_of(m.dart), f2 = d.face_of(d.twin(m.dart));
    if ((f1 >= 0 && face_alive_[static_cast<std::size_t>(f1)]) ||
        (f2 >= 0 && face_alive_[static_cast<std::size_t>(f2)]))
      throw VE(VE::Kind::IllegalMove, "one-cell collapse: edge still bounds a live face");
    // The two darts sit consecutively on the boundary walk.
    DartId into = m.dart, back = d.twin(m.dart);
    auto it = std::find(next.boundary_.begin(), next.boundary_.end(), into);
    if (it == next.boundary_.end())
      throw VE(VE::Kind::IllegalMove, "one-cell collapse: edge is not on the boundary");
    std::size_t p = static_cast<std::size_t>(it - next.boundary_.begin());
    std::size_t q = (p + 1) % next.boundary_.size();
    if (next.boundary_[q] != back)
      throw VE(VE::Kind::IllegalMove, "one-cell collapse: edge is not a spur");
    if (q > p) {
      next.boundary_.erase(next.boundary_.begin() + static_cast<std::ptrdiff_t>(p),
                           next.boundary_.begin() + static_cast<std::ptrdiff_t>(q) + 1);
    } else {  // pair wraps around
      next.boundary_.pop_back();
      next.boundary_.erase(next.boundary_.begin());
    }
    next.dart_alive_[static_cast<std::size_t>(into)] = false;
    next.dart_alive_[static_cast<std::size_t>(back)] = false;
    next.vertex_alive_[static_cast<std::size_t>(m.vertex)] = false;
    return next;
  }

  std::size_t p = 0;
  check_two_cell(m, p);
  const auto& cycle = d.faces()[static_cast<std::size_t>(m.face)];
  auto at = std::find(cycle.begin(), cycle.end(), d.twin(m.dart));
  std::vector<DartId> replacement;
  for (auto it = at + 1; it != cycle.end(); ++it) replacement.push_back(*it);
  for (auto it = cycle.begin(); it != at; ++it) replacement.push_back(*it);
  next.boundary_.erase(next.boundary_.begin() + static_cast<std::ptrdiff_t>(p));
  next.boundary_.insert(next.boundary_.begin() + static_cast<std::ptrdiff_t>(p),
                        replacement.begin(), replacement.end());
  next.dart_alive_[static_cast<std::size_t>(m.dart)] = false;
  next.dart_alive_[static_cast<std::size_t>(d.twin(m.dart))] = false;
  next.face_alive_[static_cast<std::size_t>(m.face)] = false;
  return next;
}

std::vector<std::uint64_t> HomotopyState::key() const {
  std::vector<std::uint64_t> k((dart_alive_.size() + 63) / 64 + (face_alive_.size() + 63) / 64 + 1, 0);
  std::size_t base = 0;
  k[0] = dart_alive_.size();
  for (std::size_t i = 0; i < dart_alive_.size(); ++i)
    if (dart_alive_[i]) k[1 + i / 64] |= (std::uint64_t{1} << (i % 64));
  base = 1 + (dart_alive_.size() + 63) / 64;
  for (std::size_t i = 0; i < face_alive_.size(); ++i)
    if (face_alive_[i]) k[base + i / 64] |= (std::uint64_t{1} << (i % 64));
  return k;
}

double prop2_bound(int area, int diameter, int boundary_length) {
  return (2.0 * diameter + 1.0) * (std::log2(static_cast<double>(area) + 1.0) + 1.0) +
         4.0 * diameter + 1.0 + boundary_length;
}

namespace {

struct KeyHash {
  std::size_t operator()(const std::vector<std::uint64_t>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (std::uint64_t x : v) {
      h ^= static_cast<std::size_t>(x);
      h *= 1099511628211ull;
    }
    return h;
  }
};

int fl_exact_search(const HomotopyState& s,
                    std::unordered_map<std::vector<std::uint64_t>, int, KeyHash>& memo,
                    std::int64_t& budget) {
  if (s.terminal()) return 0;
  auto k = s.key();
  auto it = memo.find(k);
  if (it != memo.end()) return it->second;
  if (--budget < 0) throw BudgetError("fl_exact: node budget exhausted");
  int best = INT32_MAX;
  for (const Move& m : s.legal_moves()) {
    HomotopyState t = s.apply(m);
    best = std::min(best, std::max(t.boundary_length(), fl_exact_search(t, memo, budget)));
  }
  memo.emplace(std::move(k), best);
  return best;
}

}  // namespace

int fl_exact(const VanKampenDiagram& d, std::int64_t node_budget) {
  HomotopyState s(std::make_shared<VanKampenDiagram>(d));
  std::unordered_map<std::vector<std::uint64_t>, int, KeyHash> memo;
  std::int64_t budget = node_budget;
  return std::max(s.boundary_length(), fl_exact_search(s, memo, budget));
}

std::string trace_to_json(const HomotopyTrace& t) {
  nlohmann::json j;
  j["realized_fl"] = t.realized_fl;
  j["jobs"] = t.job_count;
  j["profile"] = t.profile;
  j["local_profile"] = t.local_profile;
  j["step4_move_indices"] = t.step4_move_indices;
  j["moves"] = nlohmann::json::array();
  for (const TraceMove& m : t.moves) {
    nlohmann::json mj;
    mj["kind"] = m.move.kind == Move::Kind::OneCellCollapse ? "one_cell" : "two_cell";
    mj["dart"] = m.move.dart;
    if (m.move.kind == Move::Kind::OneCellCollapse) mj["vertex"] = m.move.vertex;
    if (m.move.kind == Move::Kind::TwoCellCollapse) mj["face"] = m.move.face;
    mj["step"] = m.step;
    mj["variant"] = m.variant;
    mj["job"] = m.job;
    mj["boundary_length_after"] = m.global_length_after;
    mj["local_length_after"] = m.local_length_after;
    j["moves"].push_back(mj);
  }
  return j.dump(2) + "\n";
}

bool replay_trace(const VanKampenDiagram& d, const HomotopyTrace& t) {
  HomotopyState s(std::make_shared<VanKampenDiagram>(d));
  if (t.profile.empty() || t.profile.front() != s.boundary_length()) return false;
  for (std::size_t i = 0; i < t.moves.size(); ++i) {
    auto legal = s.legal_moves();
    if (std::find(legal.begin(), legal.end(), t.moves[i].move) == legal.end()) return false;
    s = s.apply(t.moves[i].move);
    if (t.profile[i + 1] != s.boundary_length()) return false;
  }
  return s.terminal();
}

}  // namespace filling
