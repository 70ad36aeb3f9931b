#pragma once

#include "filling/diagram.hpp"
#include "filling/presentation.hpp"

namespace filling::fixtures {

/// Z^2 as <a,b | abAB>.
inline Presentation zsq() {
  return parse_presentation("gens: a b\nrel: abAB\n");
}

/// Triangularized Z^2: <a,b,t | Tab, tAB>.
inline Presentation zsq_tri() {
  return parse_presentation("gens: a b t\nrel: Tab\nrel: tAB\n");
}

/// The square abAB split by the diagonal t into two triangles.
/// Vertices: 0 (base, bottom-left), 1 (bottom-right), 2 (top-right),
/// 3 (top-left); edges a(0-1), b(1-2), a(3-2), b(0-3), t(0-2).
inline VanKampenDiagram two_triangles() {
  Presentation p = zsq_tri();
  auto L = [&](const char* s) { return p.word(s)[0]; };
  RawDiagram raw;
  raw.vertices = 4;
  raw.base = 0;
  raw.darts = {
      {0, 1, L("a")}, {1, 0, L("A")},  // 0,1: bottom edge
      {1, 3, L("b")}, {2, 2, L("B")},  // 2,3: right edge
      {3, 5, L("a")}, {2, 4, L("A")},  // 4,5: top edge
      {0, 7, L("b")}, {3, 6, L("B")},  // 6,7: left edge
      {0, 9, L("t")}, {2, 8, L("T")},  // 8,9: diagonal
  };
  raw.rotations = {{0, 8, 6}, {2, 1}, {5, 9, 3}, {4, 7}};
  raw.faces = {{1, 8, 3}, {9, 6, 4}};
  raw.boundary = {0, 2, 5, 7};
  return VanKampenDiagram::validate(std::move(raw), p);
}

/// A single triangle with boundary t^-1 a b from the base.
inline VanKampenDiagram single_triangle() {
  Presentation p = zsq_tri();
  auto L = [&](const char* s) { return p.word(s)[0]; };
  RawDiagram raw;
  raw.vertices = 3;
  raw.base = 0;
  raw.darts = {
      {0, 1, L("T")}, {1, 0, L("t")},
      {1, 3, L("a")}, {2, 2, L("A")},
      {2, 5, L("b")}, {0, 4, L("B")},
  };
  raw.rotations = {{0, 5}, {2, 1}, {4, 3}};
  raw.faces = {{1, 5, 3}};
  raw.boundary = {0, 2, 4};
  return VanKampenDiagram::validate(std::move(raw), p);
}

/// The area-zero path diagram for the word a a^-1.
inline VanKampenDiagram path_aA() {
  Presentation p = zsq_tri();
  auto L = [&](const char* s) { return p.word(s)[0]; };
  RawDiagram raw;
  raw.vertices = 2;
  raw.base = 0;
  raw.darts = {{0, 1, L("a")}, {1, 0, L("A")}};
  raw.rotations = {{0}, {1}};
  raw.boundary = {0, 1};
  return VanKampenDiagram::validate(std::move(raw), p);
}

/// Single vertex, no cells.
inline VanKampenDiagram trivial(const Presentation& p) {
  RawDiagram raw;
  raw.vertices = 1;
  raw.base = 0;
  raw.rotations = {{}};
  return VanKampenDiagram::validate(std::move(raw), p);
}

/// Boundary triangle abc around a big 2-cell, with a spoke from a boundary
/// vertex to an interior vertex carrying a loop that bounds a monogon.
/// The monogon does not meet the boundary, so c_1 is one curve of length 1.
inline VanKampenDiagram looped_interior() {
  Presentation p = parse_presentation("gens: a b c s l\nrel: ACBsLS\nrel: l\n");
  auto L = [&](const char* s) { return p.word(s)[0]; };
  RawDiagram raw;
  raw.vertices = 4;  // 0=x (base), 1=y, 2=z, 3=c interior
  raw.base = 0;
  raw.darts = {
      {0, 1, L("a")}, {1, 0, L("A")},  // x-y
      {1, 3, L("b")}, {2, 2, L("B")},  // y-z
      {2, 5, L("c")}, {0, 4, L("C")},  // z-x
      {1, 7, L("s")}, {3, 6, L("S")},  // spoke y-c
      {3, 9, L("l")}, {3, 8, L("L")},  // loop at c
  };
  raw.rotations = {{0, 5}, {2, 6, 1}, {4, 3}, {9, 8, 7}};
  raw.faces = {{1, 5, 3, 6, 9, 7}, {8}};
  raw.boundary = {0, 2, 4};
  return VanKampenDiagram::validate(std::move(raw), p);
}

}  // namespace filling::fixtures
