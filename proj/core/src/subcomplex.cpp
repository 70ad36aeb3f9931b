#include <algorithm>

#include "filling/diagram.hpp"
#include "filling/errors.hpp"

namespace filling {

int Subcomplex::face_count() const {
  return static_cast<int>(std::count(faces.begin(), faces.end(), true));
}

Subcomplex boundary_subcomplex(const VanKampenDiagram& d) {
  Subcomplex k;
  k.vertices.assign(static_cast<std::size_t>(d.vertex_count()), false);
  k.darts.assign(d.darts().size(), false);
  k.faces.assign(d.faces().size(), false);
  for (DartId b : d.boundary()) {
    k.darts[static_cast<std::size_t>(b)] = true;
    k.darts[static_cast<std::size_t>(d.twin(b))] = true;
    k.vertices[static_cast<std::size_t>(d.origin(b))] = true;
    k.vertices[static_cast<std::size_t>(d.head(b))] = true;
  }
  if (d.boundary().empty()) k.vertices[static_cast<std::size_t>(d.base())] = true;
  return k;
}

Subcomplex star(const VanKampenDiagram& d, const Subcomplex& k) {
  Subcomplex out = k;
  for (std::size_t f = 0; f < d.faces().size(); ++f) {
    bool meets = out.faces[f];
    if (!meets)
      for (DartId dart : d.faces()[f])
        if (k.vertices[static_cast<std::size_t>(d.origin(dart))]) {
          meets = true;
          break;
        }
    if (!meets) continue;
    out.faces[f] = true;
    for (DartId dart : d.faces()[f]) {
      out.darts[static_cast<std::size_t>(dart)] = true;
      out.darts[static_cast<std::size_t>(d.twin(dart))] = true;
      out.vertices[static_cast<std::size_t>(d.origin(dart))] = true;
    }
  }
  return out;
}

Subcomplex star_i(const VanKampenDiagram& d, const Subcomplex& k, int i) {
  Subcomplex out = k;
  for (int step = 0; step < i; ++step) out = star(d, out);
  return out;
}

std::vector<BoundaryCurve> boundary_curves(const VanKampenDiagram& d, int i) {
  const Subcomplex n_i = star_i(d, boundary_subcomplex(d), i);
  // A dart belongs to a curve when the face on its side is in N_i and the
  // face across the edge is an inner face outside N_i; the dart with the
  // N_i face on its side is the curve's orientation.
  std::vector<bool> in_curve(d.darts().size(), false);
  for (DartId dart = 0; dart < static_cast<DartId>(d.darts().size()); ++dart) {
    FaceId mine = d.face_of(dart);
    FaceId other = d.face_of(d.twin(dart));
    if (mine >= 0 && n_i.faces[static_cast<std::size_t>(mine)] && other >= 0 &&
        !n_i.faces[static_cast<std::size_t>(other)])
      in_curve[static_cast<std::size_t>(dart)] = true;
  }

  std::vector<BoundaryCurve> curves;
  std::vector<bool> used(d.darts().size(), false);
  for (DartId start = 0; start < static_cast<DartId>(d.darts().size()); ++start) {
    if (!in_curve[static_cast<std::size_t>(start)] || used[static_cast<std::size_t>(start)])
      continue;
    BoundaryCurve curve;
    DartId cur = start;
    do {
      used[static_cast<std::size_t>(cur)] = true;
      curve.darts.push_back(cur);
      // Continue along the frontier: scan the rotation at the head of cur,
      // starting after its twin, for the next frontier dart.
      DartId scan = d.rotation_next(d.twin(cur));
      while (!in_curve[static_cast<std::size_t>(scan)]) {
        scan = d.rotation_next(scan);
        if (scan == d.twin(cur))
          throw ValidationError(ValidationError::Kind::Malformed,
                                "boundary curve does not close up");
      }
      cur = scan;
    } while (cur != start);
    curves.push_back(std::move(curve));
  }
  return curves;
}

}  // namespace filling
