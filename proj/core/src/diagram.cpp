#include "filling/diagram.hpp"

#include <algorithm>
#include <deque>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "filling/errors.hpp"

namespace filling {

namespace {

using VE = ValidationError;

// Rotate a dart cycle so it begins at its smallest dart id.
std::vector<DartId> canonical_cycle(std::vector<DartId> cycle) {
  if (cycle.empty()) return cycle;
  auto it = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), it, cycle.end());
  return cycle;
}

bool is_relator_word(const Word& w, const Presentation& p) {
  for (const Word& r : p.relators()) {
    for (const Word& base : {r, inverse(r)}) {
      if (base.size() != w.size()) continue;
      for (std::size_t s = 0; s < base.size(); ++s) {
        bool match = true;
        for (std::size_t i = 0; i < base.size(); ++i)
          if (w[i] != base[(s + i) % base.size()]) {
            match = false;
            break;
          }
        if (match) return true;
      }
    }
  }
  return false;
}

}  // namespace

VanKampenDiagram VanKampenDiagram::validate(RawDiagram raw, Presentation p) {
  const int nd = static_cast<int>(raw.darts.size());
  const int nv = raw.vertices;
  if (nv <= 0) throw VE(VE::Kind::Malformed, "diagram needs at least one vertex");
  if (raw.base < 0 || raw.base >= nv) throw VE(VE::Kind::Malformed, "base vertex out of range");
  if (static_cast<int>(raw.rotations.size()) != nv)
    throw VE(VE::Kind::Malformed, "rotation list count differs from vertex count");

  for (const Dart& d : raw.darts) {
    if (d.origin < 0 || d.origin >= nv) throw VE(VE::Kind::Malformed, "dart origin out of range");
    if (d.twin < 0 || d.twin >= nd) throw VE(VE::Kind::Malformed, "dart twin out of range");
    if (d.label.gen < 0 || static_cast<std::size_t>(d.label.gen) >= p.alphabet().size())
      throw VE(VE::Kind::Malformed, "dart label outside alphabet");
  }
  for (DartId d = 0; d < nd; ++d) {
    DartId t = raw.darts[static_cast<std::size_t>(d)].twin;
    if (t == d || raw.darts[static_cast<std::size_t>(t)].twin != d ||
        raw.darts[static_cast<std::size_t>(t)].label !=
            inverse(raw.darts[static_cast<std::size_t>(d)].label))
      throw VE(VE::Kind::TwinNotInvolutive, "twin is not a label-inverting involution");
  }

  std::vector<int> rotation_pos(static_cast<std::size_t>(nd), -1);
  for (VertexId v = 0; v < nv; ++v) {
    for (std::size_t i = 0; i < raw.rotations[static_cast<std::size_t>(v)].size(); ++i) {
      DartId d = raw.rotations[static_cast<std::size_t>(v)][i];
      if (d < 0 || d >= nd || raw.darts[static_cast<std::size_t>(d)].origin != v ||
          rotation_pos[static_cast<std::size_t>(d)] != -1)
        throw VE(VE::Kind::RotationInvalid, "rotations do not partition darts by origin");
      rotation_pos[static_cast<std::size_t>(d)] = static_cast<int>(i);
    }
  }
  for (DartId d = 0; d < nd; ++d)
    if (rotation_pos[static_cast<std::size_t>(d)] < 0)
      throw VE(VE::Kind::RotationInvalid, "dart missing from its origin's rotation");

  // Derive face orbits of face_next and match them against the declared
  // inner faces plus the boundary cycle.
  auto rotation_next = [&](DartId d) {
    VertexId v = raw.darts[static_cast<std::size_t>(d)].origin;
    const auto& rot = raw.rotations[static_cast<std::size_t>(v)];
    return rot[(static_cast<std::size_t>(rotation_pos[static_cast<std::size_t>(d)]) + 1) % rot.size()];
  };
  std::vector<std::vector<DartId>> orbits;
  {
    std::vector<bool> seen(static_cast<std::size_t>(nd), false);
    for (DartId d = 0; d < nd; ++d) {
      if (seen[static_cast<std::size_t>(d)]) continue;
      std::vector<DartId> orbit;
      DartId cur = d;
      do {
        seen[static_cast<std::size_t>(cur)] = true;
        orbit.push_back(cur);
        cur = rotation_next(raw.darts[static_cast<std::size_t>(cur)].twin);
      } while (cur != d);
      orbits.push_back(canonical_cycle(orbit));
    }
  }
  std::map<std::vector<DartId>, int> orbit_index;
  for (std::size_t i = 0; i < orbits.size(); ++i) orbit_index[orbits[i]] = static_cast<int>(i);

  std::vector<bool> orbit_used(orbits.size(), false);
  auto claim_orbit = [&](const std::vector<DartId>& cycle, const char* what) {
    auto it = orbit_index.find(canonical_cycle(cycle));
    if (it == orbit_index.end() || orbit_used[static_cast<std::size_t>(it->second)])
      throw VE(VE::Kind::FaceMismatch,
               std::string(what) + " is not a face orbit of the rotation system");
    orbit_used[static_cast<std::size_t>(it->second)] = true;
  };
  if (nd == 0) {
    if (!raw.boundary.empty() || !raw.faces.empty())
      throw VE(VE::Kind::FaceMismatch, "faces declared on an edgeless diagram");
  } else {
    if (raw.boundary.empty())
      throw VE(VE::Kind::FaceMismatch, "missing boundary cycle");
    claim_orbit(raw.boundary, "boundary");
    for (const auto& f : raw.faces) claim_orbit(f, "inner face");
    if (raw.faces.size() + 1 != orbits.size())
      throw VE(VE::Kind::FaceMismatch, "declared faces do not cover all face orbits");
  }

  // Euler characteristic V - E + F = 2, counting the outer face.
  const int euler = nv - nd / 2 + static_cast<int>(raw.faces.size()) + 1;
  if (euler != 2)
    throw VE(VE::Kind::EulerCharacteristic,
             "Euler characteristic is " + std::to_string(euler) + ", expected 2");

  // Connectivity of the 1-skeleton.
  {
    std::vector<bool> seen(static_cast<std::size_t>(nv), false);
    std::deque<VertexId> queue{raw.base};
    seen[static_cast<std::size_t>(raw.base)] = true;
    int count = 1;
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      for (DartId d : raw.rotations[static_cast<std::size_t>(v)]) {
        VertexId u = raw.darts[static_cast<std::size_t>(raw.darts[static_cast<std::size_t>(d)].twin)].origin;
        if (!seen[static_cast<std::size_t>(u)]) {
          seen[static_cast<std::size_t>(u)] = true;
          ++count;
          queue.push_back(u);
        }
      }
    }
    if (count != nv) throw VE(VE::Kind::Disconnected, "diagram is not connected");
  }

  // Inner face labels must be relators up to cyclic permutation and
  // inversion.
  for (const auto& f : raw.faces) {
    Word w;
    for (DartId d : f) w.push_back(raw.darts[static_cast<std::size_t>(d)].label);
    if (!is_relator_word(w, p))
      throw VE(VE::Kind::FaceLabelNotRelator,
               "face word '" + render_word(w, p.alphabet()) + "' is not a relator");
  }

  // The base point lies on the boundary cycle; canonicalize the cycle to
  // start at the smallest dart leaving the base.
  if (nd > 0) {
    DartId start = -1;
    for (DartId d : raw.boundary)
      if (raw.darts[static_cast<std::size_t>(d)].origin == raw.base && (start < 0 || d < start))
        start = d;
    if (start < 0) throw VE(VE::Kind::BaseOffBoundary, "base point not on the boundary cycle");
    auto it = std::find(raw.boundary.begin(), raw.boundary.end(), start);
    std::rotate(raw.boundary.begin(), it, raw.boundary.end());
  }
  for (auto& f : raw.faces) f = canonical_cycle(f);
  std::sort(raw.faces.begin(), raw.faces.end());

  VanKampenDiagram out;
  out.raw_ = std::move(raw);
  out.presentation_ = std::move(p);
  out.rotation_pos_ = std::move(rotation_pos);
  out.face_of_.assign(static_cast<std::size_t>(nd), -1);
  for (std::size_t f = 0; f < out.raw_.faces.size(); ++f)
    for (DartId d : out.raw_.faces[f]) out.face_of_[static_cast<std::size_t>(d)] = static_cast<FaceId>(f);
  return out;
}

DartId VanKampenDiagram::rotation_next(DartId d) const {
  VertexId v = raw_.darts[static_cast<std::size_t>(d)].origin;
  const auto& rot = raw_.rotations[static_cast<std::size_t>(v)];
  return rot[(static_cast<std::size_t>(rotation_pos_[static_cast<std::size_t>(d)]) + 1) % rot.size()];
}

Word VanKampenDiagram::boundary_word() const {
  Word w;
  for (DartId d : raw_.boundary) w.push_back(label(d));
  return w;
}

Word VanKampenDiagram::face_word(FaceId f) const {
  Word w;
  for (DartId d : raw_.faces[static_cast<std::size_t>(f)]) w.push_back(label(d));
  return w;
}

namespace {

std::vector<int> bfs_distances(const VanKampenDiagram& d, const std::vector<VertexId>& sources) {
  std::vector<int> dist(static_cast<std::size_t>(d.vertex_count()), -1);
  std::deque<VertexId> queue;
  for (VertexId s : sources)
    if (dist[static_cast<std::size_t>(s)] < 0) {
      dist[static_cast<std::size_t>(s)] = 0;
      queue.push_back(s);
    }
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (DartId e : d.rotations()[static_cast<std::size_t>(v)]) {
      VertexId u = d.head(e);
      if (dist[static_cast<std::size_t>(u)] < 0) {
        dist[static_cast<std::size_t>(u)] = dist[static_cast<std::size_t>(v)] + 1;
        queue.push_back(u);
      }
    }
  }
  return dist;
}

}  // namespace

std::vector<int> VanKampenDiagram::distances_from_base() const {
  return bfs_distances(*this, {raw_.base});
}

std::vector<int> VanKampenDiagram::distances_from_boundary() const {
  std::vector<VertexId> sources;
  for (DartId d : raw_.boundary) sources.push_back(origin(d));
  if (sources.empty()) sources.push_back(raw_.base);
  return bfs_distances(*this, sources);
}

std::string VanKampenDiagram::canonical_form() const {
  if (raw_.darts.empty()) return "trivial";
  // Relabel darts by a breadth-first traversal over (twin, rotation_next)
  // from the boundary start dart; the discovery order depends only on the
  // map structure, never on input ids.
  std::vector<int> new_id(raw_.darts.size(), -1);
  std::vector<DartId> order;
  std::deque<DartId> queue{raw_.boundary.front()};
  new_id[static_cast<std::size_t>(raw_.boundary.front())] = 0;
  order.push_back(raw_.boundary.front());
  while (!queue.empty()) {
    DartId d = queue.front();
    queue.pop_front();
    for (DartId n : {twin(d), rotation_next(d)}) {
      if (new_id[static_cast<std::size_t>(n)] < 0) {
        new_id[static_cast<std::size_t>(n)] = static_cast<int>(order.size());
        order.push_back(n);
        queue.push_back(n);
      }
    }
  }
  std::ostringstream out;
  out << vertex_count() << ';';
  for (DartId d : order)
    out << new_id[static_cast<std::size_t>(twin(d))] << ','
        << new_id[static_cast<std::size_t>(rotation_next(d))] << ','
        << static_cast<int>(label(d).gen) << ',' << static_cast<int>(label(d).sign) << ';';
  return out.str();
}

Metrics metrics(const VanKampenDiagram& d) {
  Metrics m;
  m.area = d.area();
  m.boundary_length = static_cast<int>(d.boundary().size());
  for (int dist : d.distances_from_base()) m.diameter = std::max(m.diameter, dist);
  for (int dist : d.distances_from_boundary()) m.radius = std::max(m.radius, dist);
  for (const auto& rot : d.rotations()) m.max_valence = std::max(m.max_valence, static_cast<int>(rot.size()));
  return m;
}

GeodesicTree geodesic_spanning_tree(const VanKampenDiagram& d) {
  GeodesicTree t;
  t.parent_dart.assign(static_cast<std::size_t>(d.vertex_count()), -1);
  t.distance.assign(static_cast<std::size_t>(d.vertex_count()), -1);
  t.edge_in_tree.assign(d.darts().size(), false);
  t.distance[static_cast<std::size_t>(d.base())] = 0;
  std::deque<VertexId> queue{d.base()};
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    // Explore outgoing darts in rotation order, starting at the smallest
    // dart id so the tree is reproducible.
    const auto& rot = d.rotations()[static_cast<std::size_t>(v)];
    if (rot.empty()) continue;
    std::size_t start = 0;
    for (std::size_t i = 1; i < rot.size(); ++i)
      if (rot[i] < rot[start]) start = i;
    for (std::size_t k = 0; k < rot.size(); ++k) {
      DartId e = rot[(start + k) % rot.size()];
      VertexId u = d.head(e);
      if (t.distance[static_cast<std::size_t>(u)] < 0) {
        t.distance[static_cast<std::size_t>(u)] = t.distance[static_cast<std::size_t>(v)] + 1;
        t.parent_dart[static_cast<std::size_t>(u)] = e;
        t.edge_in_tree[static_cast<std::size_t>(e)] = true;
        t.edge_in_tree[static_cast<std::size_t>(d.twin(e))] = true;
        queue.push_back(u);
      }
    }
  }
  return t;
}

namespace {

nlohmann::json dart_to_json(const VanKampenDiagram& d, DartId id) {
  nlohmann::json j;
  j["id"] = id;
  j["origin"] = d.origin(id);
  j["twin"] = d.twin(id);
  j["label"] = render_word({d.label(id)}, d.presentation().alphabet());
  return j;
}

}  // namespace

std::string diagram_to_json(const VanKampenDiagram& d, const std::string& presentation_file) {
  nlohmann::json j;
  j["presentation_file"] = presentation_file;
  j["vertices"] = d.vertex_count();
  j["base"] = d.base();
  j["darts"] = nlohmann::json::array();
  for (DartId id = 0; id < static_cast<DartId>(d.darts().size()); ++id)
    j["darts"].push_back(dart_to_json(d, id));
  j["rotations"] = d.rotations();
  j["faces"] = d.faces();
  j["boundary"] = d.boundary();
  return j.dump(2) + "\n";
}

VanKampenDiagram diagram_from_json(const std::string& json_text, const Presentation& p) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(ValidationError::Kind::Malformed,
                          std::string("diagram document is not valid JSON: ") + e.what());
  }
  RawDiagram raw;
  try {
    raw.vertices = j.at("vertices").get<int>();
    raw.base = j.at("base").get<int>();
    const auto& darts = j.at("darts");
    raw.darts.resize(darts.size());
    for (const auto& dj : darts) {
      int id = dj.at("id").get<int>();
      if (id < 0 || id >= static_cast<int>(raw.darts.size()))
        throw ValidationError(ValidationError::Kind::Malformed, "dart id out of range");
      Word l = parse_word(dj.at("label").get<std::string>(), p.alphabet());
      if (l.size() != 1)
        throw ValidationError(ValidationError::Kind::Malformed, "dart label must be one letter");
      raw.darts[static_cast<std::size_t>(id)] =
          Dart{dj.at("origin").get<int>(), dj.at("twin").get<int>(), l[0]};
    }
    raw.rotations = j.at("rotations").get<std::vector<std::vector<DartId>>>();
    raw.faces = j.at("faces").get<std::vector<std::vector<DartId>>>();
    raw.boundary = j.at("boundary").get<std::vector<DartId>>();
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(ValidationError::Kind::Malformed,
                          std::string("diagram document missing fields: ") + e.what());
  }
  return VanKampenDiagram::validate(std::move(raw), p);
}

VanKampenDiagram load_diagram_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open diagram file: " + path, 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(buf.str());
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(ValidationError::Kind::Malformed,
                          std::string("diagram document is not valid JSON: ") + e.what());
  }
  std::string pres_file = j.value("presentation_file", "");
  if (pres_file.empty())
    throw ValidationError(ValidationError::Kind::Malformed,
                          "diagram document lacks a presentation_file reference");
  std::filesystem::path pres_path(pres_file);
  if (pres_path.is_relative())
    pres_path = std::filesystem::path(path).parent_path() / pres_path;
  Presentation p = load_presentation_file(pres_path.string());
  return diagram_from_json(buf.str(), p);
}

}  // namespace filling
