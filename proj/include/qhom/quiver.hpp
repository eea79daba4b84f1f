#pragma once
// Quivers and paths.  Vertices are 0-based internally (input files are
// 1-based).  Paths compose left to right: in p.q the path p is traversed
// first, so an arrow a: i -> j induces, on any right module, a linear map
// from the vertex-i space to the vertex-j space.
#include <string>
#include <vector>

namespace qhom {

struct Arrow {
  std::string name;
  int src = 0;
  int tgt = 0;
};

struct Quiver {
  int n_vertices = 0;
  std::vector<Arrow> arrows;

  bool connected() const;  // underlying undirected graph
};

struct Path {
  int src = 0;
  int tgt = 0;
  std::vector<int> arrows;  // arrow indices, first-traversed first

  int length() const { return static_cast<int>(arrows.size()); }
  bool trivial() const { return arrows.empty(); }
};

}  // namespace qhom
