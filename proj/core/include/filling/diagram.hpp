#pragma once

#include <string>
#include <vector>

#include "filling/presentation.hpp"
#include "filling/word.hpp"

namespace filling {

using VertexId = int;
using DartId = int;
using FaceId = int;

/// Half-edge of a combinatorial map.  The twin is the same edge traversed
/// the other way and carries the inverse label.
struct Dart {
  VertexId origin;
  DartId twin;
  Letter label;
  bool operator==(const Dart&) const = default;
};

/// Unvalidated map data as read from a file or assembled by a builder.
struct RawDiagram {
  int vertices = 0;
  std::vector<Dart> darts;
  std::vector<std::vector<DartId>> rotations;  // per vertex, cyclic order of outgoing darts
  std::vector<std::vector<DartId>> faces;      // inner faces as dart cycles
  std::vector<DartId> boundary;                // the outer face cycle
  VertexId base = 0;
};

/// A validated van Kampen diagram over a presentation: a connected, simply
/// connected planar combinatorial map whose inner faces are labeled by
/// relators (up to cyclic permutation and inversion) and whose boundary
/// cycle passes through the base point.  Face traversal convention:
/// face_next(d) = rotation successor of twin(d) at the twin's origin.
/// Diagrams need not be embedded discs: spurs, filament edges and cut
/// vertices are admitted, and the boundary may traverse an edge twice.
class VanKampenDiagram {
 public:
  /// Checks every invariant; throws ValidationError with a specific kind.
  static VanKampenDiagram validate(RawDiagram raw, Presentation p);

  int vertex_count() const { return raw_.vertices; }
  int edge_count() const { return static_cast<int>(raw_.darts.size()) / 2; }
  int area() const { return static_cast<int>(raw_.faces.size()); }

  const std::vector<Dart>& darts() const { return raw_.darts; }
  const std::vector<std::vector<DartId>>& rotations() const { return raw_.rotations; }
  const std::vector<std::vector<DartId>>& faces() const { return raw_.faces; }
  const std::vector<DartId>& boundary() const { return raw_.boundary; }
  VertexId base() const { return raw_.base; }
  const Presentation& presentation() const { return presentation_; }

  VertexId head(DartId d) const { return raw_.darts[static_cast<std::size_t>(raw_.darts[static_cast<std::size_t>(d)].twin)].origin; }
  DartId twin(DartId d) const { return raw_.darts[static_cast<std::size_t>(d)].twin; }
  Letter label(DartId d) const { return raw_.darts[static_cast<std::size_t>(d)].label; }
  VertexId origin(DartId d) const { return raw_.darts[static_cast<std::size_t>(d)].origin; }
  DartId rotation_next(DartId d) const;
  DartId face_next(DartId d) const { return rotation_next(twin(d)); }

  /// Inner face containing the dart, or -1 for the outer face.
  FaceId face_of(DartId d) const { return face_of_[static_cast<std::size_t>(d)]; }

  Word boundary_word() const;
  Word face_word(FaceId f) const;

  /// Distances from every vertex to the base point in the 1-skeleton.
  std::vector<int> distances_from_base() const;
  /// Distances from every vertex to the boundary vertex set.
  std::vector<int> distances_from_boundary() const;

  /// Canonical serialization under relabeling that fixes the boundary cycle
  /// and base; equal strings iff the diagrams are isomorphic as based,
  /// boundary-labeled maps.
  std::string canonical_form() const;

  bool operator==(const VanKampenDiagram&) const = default;

 private:
  VanKampenDiagram() = default;
  RawDiagram raw_;
  Presentation presentation_;
  std::vector<FaceId> face_of_;
  std::vector<int> rotation_pos_;  // index of each dart within its rotation list
};

struct Metrics {
  int area = 0;
  int diameter = 0;
  int radius = 0;
  int max_valence = 0;
  int boundary_length = 0;
};

/// area = inner face count; diameter = eccentricity of the base point;
/// radius = max distance from a vertex to the boundary vertex set;
/// max_valence = most darts at one vertex.
Metrics metrics(const VanKampenDiagram& d);

/// Breadth-first geodesic spanning tree rooted at the base point, exploring
/// rotations from each vertex's smallest dart, so the result is
/// deterministic.  Tree distance from any vertex equals its true 1-skeleton
/// distance to the base.
struct GeodesicTree {
  std::vector<DartId> parent_dart;  // dart from parent to vertex, -1 at base
  std::vector<int> distance;
  std::vector<bool> edge_in_tree;   // indexed by dart id, same flag for both darts
};
GeodesicTree geodesic_spanning_tree(const VanKampenDiagram& d);

/// A closed subcomplex of a parent diagram: vertex, dart (twin-closed) and
/// inner-face subsets with every face's darts and endpoints present.
struct Subcomplex {
  std::vector<bool> vertices;
  std::vector<bool> darts;
  std::vector<bool> faces;
  int face_count() const;
  bool operator==(const Subcomplex&) const = default;
};

/// The boundary cycle as a subcomplex.
Subcomplex boundary_subcomplex(const VanKampenDiagram& d);

/// k plus every closed 2-cell meeting k.
Subcomplex star(const VanKampenDiagram& d, const Subcomplex& k);

/// i-th iterate of star; star_0 is the identity.
Subcomplex star_i(const VanKampenDiagram& d, const Subcomplex& k, int i);

/// The curves c_i = boundary of star_i(boundary) minus the diagram
/// boundary, decomposed into closed walks; lengths count 1-cells.
struct BoundaryCurve {
  std::vector<DartId> darts;
  int length() const { return static_cast<int>(darts.size()); }
};
std::vector<BoundaryCurve> boundary_curves(const VanKampenDiagram& d, int i);

/// JSON interchange.  The document lists vertices, darts, rotations, face
/// cycles, base vertex, boundary cycle and the presentation file it
/// references; loading validates everything and reports the specific
/// violation on failure.
std::string diagram_to_json(const VanKampenDiagram& d, const std::string& presentation_file);
VanKampenDiagram diagram_from_json(const std::string& json_text,
                                   const Presentation& presentation);
/// Reads the document at path, resolving its presentation file reference
/// relative to the document's directory.
VanKampenDiagram load_diagram_file(const std::string& path);

}  // namespace filling
