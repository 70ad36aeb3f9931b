#include <algorithm>
#include <functional>
#include <memory>

#include "filling/errors.hpp"
#include "filling/homotopy.hpp"
#include "filling/shelling.hpp"

namespace filling {

namespace {

// Dual decomposition of a diagram along its geodesic spanning tree: one job
// per non-tree boundary edge, holding the faces reachable from that edge
// without crossing a tree edge.  Within a job the faces form a rooted tree
// (the dual across non-tree interior edges); anchor_dart[f] is the dart of
// f whose twin faces the parent (or the outer face, at the root).
struct JobDecomposition {
  std::vector<int> job_of_face;
  std::vector<DartId> anchor_dart;
  std::vector<std::vector<FaceId>> children;
  std::vector<FaceId> roots;                  // per job
  std::vector<std::size_t> anchor_position;   // boundary position of the job's anchor edge
};

JobDecomposition decompose(const VanKampenDiagram& d, const GeodesicTree& tree) {
  JobDecomposition jd;
  jd.job_of_face.assign(d.faces().size(), -1);
  jd.anchor_dart.assign(d.faces().size(), -1);
  jd.children.assign(d.faces().size(), {});
  const auto& bd = d.boundary();
  for (std::size_t p = 0; p < bd.size(); ++p) {
    DartId b = bd[p];
    if (tree.edge_in_tree[static_cast<std::size_t>(b)]) continue;
    FaceId root = d.face_of(d.twin(b));
    if (root < 0)
      throw ValidationError(ValidationError::Kind::Malformed,
                            "non-tree boundary edge without an inner face");
    if (jd.job_of_face[static_cast<std::size_t>(root)] != -1)
      throw ValidationError(ValidationError::Kind::Malformed,
                            "dual decomposition met a face twice");
    int job = static_cast<int>(jd.roots.size());
    jd.roots.push_back(root);
    jd.anchor_position.push_back(p);
    jd.anchor_dart[static_cast<std::size_t>(root)] = d.twin(b);
    // Grow the component across non-tree interior edges.
    std::vector<FaceId> stack{root};
    jd.job_of_face[static_cast<std::size_t>(root)] = job;
    while (!stack.empty()) {
      FaceId f = stack.back();
      stack.pop_back();
      for (DartId g : d.faces()[static_cast<std::size_t>(f)]) {
        if (tree.edge_in_tree[static_cast<std::size_t>(g)]) continue;
        if (g == jd.anchor_dart[static_cast<std::size_t>(f)]) continue;
        FaceId h = d.face_of(d.twin(g));
        if (h < 0 || h == f) continue;
        if (jd.job_of_face[static_cast<std::size_t>(h)] != -1) continue;
        jd.job_of_face[static_cast<std::size_t>(h)] = job;
        jd.anchor_dart[static_cast<std::size_t>(h)] = d.twin(g);
        jd.children[static_cast<std::size_t>(f)].push_back(h);
        stack.push_back(h);
      }
    }
  }
  for (std::size_t f = 0; f < d.faces().size(); ++f)
    if (jd.job_of_face[f] == -1)
      throw ValidationError(ValidationError::Kind::Malformed,
                            "dual decomposition left a face unassigned");
  return jd;
}

}  // namespace

HomotopyTrace fl_schedule_prop2(const VanKampenDiagram& d) {
  if (!d.presentation().is_triangular())
    throw ValidationError(ValidationError::Kind::IllegalMove,
                          "presentation is not triangular: triangularize it first");

  HomotopyState state(std::make_shared<VanKampenDiagram>(d));
  HomotopyTrace trace;
  trace.profile.push_back(state.boundary_length());
  trace.local_profile.push_back(state.boundary_length());
  if (state.terminal()) return trace;

  const GeodesicTree tree = geodesic_spanning_tree(d);
  const JobDecomposition jd = decompose(d, tree);
  const int job_count = static_cast<int>(jd.roots.size());
  trace.job_count = job_count;

  // Zone of each original boundary position: the job of the inner face
  // flanking that edge; filament positions inherit the previous zone.
  const auto& bd = d.boundary();
  std::vector<int> zone(bd.size(), -1);
  for (std::size_t p = 0; p < bd.size(); ++p) {
    FaceId f = d.face_of(d.twin(bd[p]));
    if (f >= 0) zone[p] = jd.job_of_face[static_cast<std::size_t>(f)];
  }
  for (std::size_t p = 0; p < bd.size(); ++p) {
    if (zone[p] != -1) continue;
    for (std::size_t back = 1; back <= bd.size(); ++back) {
      int z = zone[(p + bd.size() - back) % bd.size()];
      if (z != -1) {
        zone[p] = z;
        break;
      }
    }
    if (zone[p] == -1) zone[p] = 0;
  }

  // The subdiagram loop the in-proof bounds constrain: the current boundary
  // with the untouched later zones replaced by a geodesic back to the base.
  auto local_length = [&](int job) {
    int suffix = 0;
    int gamma2 = 0;
    bool found = false;
    for (std::size_t p = 0; p < bd.size(); ++p) {
      if (zone[p] <= job || !state.dart_alive(bd[p])) continue;
      ++suffix;
      if (!found) {
        found = true;
        gamma2 = tree.distance[static_cast<std::size_t>(d.origin(bd[p]))];
      }
    }
    return state.boundary_length() - suffix + gamma2;
  };

  int live_faces = d.area();
  auto record = [&](const Move& m, int step, std::string variant, int job) {
    state = state.apply(m);
    if (m.kind == Move::Kind::TwoCellCollapse) --live_faces;
    trace.profile.push_back(state.boundary_length());
    trace.local_profile.push_back(local_length(job));
    if (step == 4) trace.step4_move_indices.push_back(trace.moves.size());
    trace.moves.push_back({m, step, std::move(variant), job, trace.profile.back(),
                           trace.local_profile.back()});
  };

  // First available one-cell collapse, in canonical order.
  auto try_step1 = [&](int job) {
    for (const Move& m : state.legal_moves())
      if (m.kind == Move::Kind::OneCellCollapse) {
        record(m, 1, "", job);
        return true;
      }
    return false;
  };

  std::function<int(FaceId)> live_subtree = [&](FaceId f) {
    int n = state.face_alive(f) ? 1 : 0;
    for (FaceId c : jd.children[static_cast<std::size_t>(f)]) n += live_subtree(c);
    return n;
  };

  for (int job = 0; job < job_count; ++job) {
    while (true) {
      if (try_step1(job)) continue;

      // Candidate two-cell collapses of this job's faces, split by step.
      Move bigon{Move::Kind::TwoCellCollapse, -1, -1, -1};
      Move tree_move{Move::Kind::TwoCellCollapse, -1, -1, -1};
      int bigon_len = 0;
      bool any_live_face_in_job = false;
      Move fallback{Move::Kind::TwoCellCollapse, -1, -1, -1};
      for (DartId b : state.boundary()) {
        FaceId f = d.face_of(d.twin(b));
        if (f < 0 || !state.face_alive(f) || jd.job_of_face[static_cast<std::size_t>(f)] != job)
          continue;
        int len = static_cast<int>(d.faces()[static_cast<std::size_t>(f)].size());
        if (len <= 2 && bigon.face < 0) {
          bigon = {Move::Kind::TwoCellCollapse, b, -1, f};
          bigon_len = len;
        } else if (len > 2 && tree.edge_in_tree[static_cast<std::size_t>(b)] &&
                   tree_move.face < 0) {
          tree_move = {Move::Kind::TwoCellCollapse, b, -1, f};
        }
        if (fallback.face < 0) fallback = {Move::Kind::TwoCellCollapse, b, -1, f};
      }
      for (std::size_t f = 0; f < d.faces().size(); ++f)
        if (state.face_alive(static_cast<FaceId>(f)) && jd.job_of_face[f] == job)
          any_live_face_in_job = true;

      if (bigon.face >= 0) {
        record(bigon, 2, bigon_len == 1 ? "(i)" : "(ii)", job);
        continue;
      }
      if (tree_move.face >= 0) {
        bool has_live_child = false;
        for (FaceId c : jd.children[static_cast<std::size_t>(tree_move.face)])
          if (live_subtree(c) > 0) has_live_child = true;
        record(tree_move, 3, has_live_child ? "(iv)" : "(iii)", job);
        continue;
      }

      // Step 4: among visible dual roots (anchor edge on the current
      // boundary), shell a smallest live subtree first.
      std::vector<FaceId> visible;
      for (std::size_t f = 0; f < d.faces().size(); ++f) {
        if (!state.face_alive(static_cast<FaceId>(f)) || jd.job_of_face[f] != static_cast<int>(job))
          continue;
        DartId anchor = jd.anchor_dart[f];
        DartId outer_side = d.twin(anchor);
        if (!state.dart_alive(outer_side)) continue;
        FaceId across = d.face_of(outer_side);
        if (across >= 0 && state.face_alive(across)) continue;  // parent still present
        visible.push_back(static_cast<FaceId>(f));
      }
      if (!visible.empty()) {
        std::vector<std::pair<int, long long>> candidates;
        for (FaceId f : visible) candidates.emplace_back(live_subtree(f), jd.anchor_dart[static_cast<std::size_t>(f)]);
        FaceId f = visible[smallest_first_pick(candidates)];
        int live_children = 0;
        for (FaceId c : jd.children[static_cast<std::size_t>(f)])
          if (live_subtree(c) > 0) ++live_children;
        Move m{Move::Kind::TwoCellCollapse, d.twin(jd.anchor_dart[static_cast<std::size_t>(f)]), -1, f};
        record(m, 4, live_children > 0 ? "(v)" : "(vi)", job);
        continue;
      }
      if (any_live_face_in_job && fallback.face >= 0) {
        record(fallback, 4, "fallback", job);
        continue;
      }
      break;
    }
  }

  // Anything left is filament clean-up around the base.
  int last_job = job_count > 0 ? job_count - 1 : 0;
  while (!state.terminal()) {
    if (try_step1(last_job)) continue;
    bool moved = false;
    for (const Move& m : state.legal_moves()) {
      record(m, 4, "fallback", last_job);
      moved = true;
      break;
    }
    if (!moved)
      throw ValidationError(ValidationError::Kind::IllegalMove,
                            "scheduler stalled before reaching the trivial diagram");
  }

  trace.realized_fl = *std::max_element(trace.profile.begin(), trace.profile.end());
  return trace;
}

}  // namespace filling
