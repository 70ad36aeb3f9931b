#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "filling/diagram.hpp"

namespace filling {

/// An elementary homotopy move.
///
/// OneCellCollapse removes a pendant edge together with its free endpoint:
/// the vertex is not the base point, has valence one, and the edge lies on
/// no surviving face.  TwoCellCollapse removes a face together with one
/// edge shared by the face and the current boundary; on the boundary word
/// it substitutes the rest of the face's word for the removed letter, so
/// the length changes by (face length - 2).
struct Move {
  enum class Kind { OneCellCollapse, TwoCellCollapse };
  Kind kind;
  DartId dart;        // one-cell: dart into the removed vertex; two-cell: the boundary dart
  VertexId vertex = -1;  // one-cell: the removed vertex
  FaceId face = -1;      // two-cell: the collapsed face
  bool operator==(const Move&) const = default;
};

/// The shrinking diagram mid-homotopy.  Pure value: apply() returns a new
/// state.  The boundary always spells a closed walk through the base point
/// until it empties at the trivial diagram.
class HomotopyState {
 public:
  explicit HomotopyState(std::shared_ptr<const VanKampenDiagram> diagram);

  const VanKampenDiagram& diagram() const { return *diagram_; }
  const std::vector<DartId>& boundary() const { return boundary_; }
  int boundary_length() const { return static_cast<int>(boundary_.size()); }
  Word boundary_word() const;
  bool terminal() const;

  bool dart_alive(DartId d) const { return dart_alive_[static_cast<std::size_t>(d)]; }
  bool face_alive(FaceId f) const { return face_alive_[static_cast<std::size_t>(f)]; }
  bool vertex_alive(VertexId v) const { return vertex_alive_[static_cast<std::size_t>(v)]; }
  int valence(VertexId v) const;
  int alive_face_count() const;

  /// Every currently applicable move, one-cell collapses first, in
  /// canonical order.  Empty exactly at the trivial diagram.
  std::vector<Move> legal_moves() const;

  /// Throws ValidationError(IllegalMove) naming the violated precondition.
  HomotopyState apply(const Move& m) const;

  /// Memo key: the alive dart and face sets determine the state.
  std::vector<std::uint64_t> key() const;

 private:
  void check_two_cell(const Move& m, std::size_t& position) const;
  std::shared_ptr<const VanKampenDiagram> diagram_;
  std::vector<bool> dart_alive_, face_alive_, vertex_alive_;
  std::vector<DartId> boundary_;
};

/// One executed move with its audit tags.  step follows the scheduler's
/// priority list: 1 = one-cell collapse, 2 = collapse of a face of length
/// at most two, 3 = collapse across a geodesic-tree edge, 4 = collapse
/// across a non-tree edge chosen by logarithmic shelling.  variant tags the
/// reconstructed move types (i)..(vi).
struct TraceMove {
  Move move;
  int step;
  std::string variant;
  int job;
  int global_length_after;
  int local_length_after;
};

/// A complete elementary homotopy.  profile[0] is the initial boundary
/// length and profile[k+1] the length after move k, ending at 0; the
/// realized filling length is the maximum of the profile.  local_profile
/// tracks the active subdiagram loop (current boundary minus the untouched
/// later zones, closed by a geodesic back to the base), which is what the
/// in-proof bounds constrain.
struct HomotopyTrace {
  std::vector<TraceMove> moves;
  std::vector<int> profile;
  std::vector<int> local_profile;
  std::vector<std::size_t> step4_move_indices;
  int realized_fl = 0;
  int job_count = 0;

  bool operator==(const HomotopyTrace&) const = default;
};

/// (2D+1)(log2(A+1)+1) + 4D + 1 + n with a real-valued logarithm.
double prop2_bound(int area, int diameter, int boundary_length);

/// Deterministic scheduler realizing the filling-length bound on diagrams
/// over triangular presentations: cut the diagram along a geodesic spanning
/// tree into jobs, one per non-tree boundary edge, then push across each
/// job with the step priority 1 > 2 > 3 > 4, choosing step-4 faces by
/// logarithmic (smallest-subtree-first) shelling of the job's dual tree.
/// The realized filling length satisfies
///   FL <= (2D+1)(log2(A+1)+1) + 4D + 1 + n.
/// Throws ValidationError if the presentation is not triangular (the caller
/// should triangularize first).
HomotopyTrace fl_schedule_prop2(const VanKampenDiagram& d);

/// Exact filling length of the fixed diagram: the minimum over all
/// complete move sequences of the maximum boundary length, by memoized
/// exhaustive search.  Refuses (BudgetError) once more than node_budget
/// distinct states have been expanded; no partial answer is reported.
int fl_exact(const VanKampenDiagram& d, std::int64_t node_budget = 4000000);

/// Trace interchange: ordered move list with classifications plus the
/// boundary-length profiles.
std::string trace_to_json(const HomotopyTrace& t);

/// Replay a trace through legal-move application; returns false if any
/// move is illegal or the trace does not end at the trivial diagram.
bool replay_trace(const VanKampenDiagram& d, const HomotopyTrace& t);

}  // namespace filling
