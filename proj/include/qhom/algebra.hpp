#pragma once
// Bound quiver algebras kQ/I with I an admissible ideal given by relations.
//
// The basis is computed degreewise: paths of each length modulo the
// degreewise-generated ideal (two-sided closure of the relations), via exact
// kernel computations.  Construction stops at the first length whose quotient
// is empty; if the quotient is still nonzero at the path-length cap the ideal
// is not admissible within the cap and construction fails.  Relations must be
// homogeneous in path length (equal-length parallel terms); this is what
// makes the degreewise quotient well defined.
#include <qhom/matrix.hpp>
#include <qhom/quiver.hpp>

#include <memory>
#include <mutex>
#include <utility>
#include <vector>

namespace qhom {

// Homogeneous linear combination of parallel paths of length >= 2.
struct Relation {
  std::vector<std::pair<Scalar, std::vector<int>>> terms;  // (coeff, arrow seq)
};

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

class Algebra : public std::enable_shared_from_this<Algebra> {
 public:
  static AlgebraPtr build(Quiver q, std::vector<Relation> relations, Field f,
                          int path_length_cap = 32);

  const Quiver& quiver() const { return quiver_; }
  const Field& field() const { return field_; }
  int n_vertices() const { return quiver_.n_vertices; }
  int n_arrows() const { return static_cast<int>(quiver_.arrows.size()); }
  int dimension() const { return static_cast<int>(basis_.size()); }
  const std::vector<Relation>& relations() const { return relations_; }

  // Basis paths, trivial paths first (index v = e_v), then arrows
  // (index n_vertices + a), then longer paths by increasing length.
  const std::vector<Path>& basis() const { return basis_; }
  int trivial_index(int v) const { return v; }
  int arrow_index(int a) const { return quiver_.n_vertices + a; }

  const std::vector<int>& basis_with_source(int v) const { return by_source_[v]; }
  const std::vector<int>& basis_with_target(int v) const { return by_target_[v]; }

  // Coordinates of basis[i] * basis[j] over the basis.
  const std::vector<Scalar>& table(int i, int j) const {
    return table_[static_cast<size_t>(i) * basis_.size() + j];
  }
  // Product of two coordinate vectors.
  std::vector<Scalar> multiply(const std::vector<Scalar>& x,
                               const std::vector<Scalar>& y) const;

  // The opposite algebra: same vertices, every arrow and basis path reversed,
  // multiplication transposed.  Cached; op->opposite() is this algebra again.
  AlgebraPtr opposite() const;

  bool connected() const { return quiver_.connected(); }

  std::string path_to_string(const Path& p) const;  // "e_3" or "a*b"
  std::string relation_to_string(const Relation& r) const;

 private:
  Algebra() = default;
  void finalize();        // index tables + identity/associativity cross-checks
  static std::shared_ptr<Algebra> build_impl(Quiver q, std::vector<Relation> rels,
                                             Field f, int cap);

  Quiver quiver_;
  Field field_;
  std::vector<Relation> relations_;
  std::vector<Path> basis_;
  std::vector<std::vector<Scalar>> table_;  // (i * dim + j) -> coords
  std::vector<std::vector<int>> by_source_, by_target_;

  mutable std::mutex op_mutex_;
  mutable std::shared_ptr<const Algebra> opposite_strong_;  // forward direction
  mutable std::weak_ptr<const Algebra> opposite_weak_;      // back link
};

// Normalize a relation: merge duplicate paths, drop zero terms, check the
// terms are parallel, of equal length >= 2, with valid arrow composition.
Relation normalize_relation(const Quiver& q, const Field& f, Relation r);

}  // namespace qhom
