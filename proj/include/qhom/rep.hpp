#pragma once
// Finite-dimensional right modules over a bound quiver algebra, presented as
// representations: a space per vertex, a matrix per arrow.  For a right
// module, an arrow a: i -> j acts M_i -> M_j, and a path acts by composing
// its arrow matrices left to right (act(pq) = act(q) act(p)).
//
// Morphisms carry their domain and codomain by value; all constructions are
// exact and deterministic.
#include <qhom/algebra.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace qhom {

struct Representation {
  AlgebraPtr alg;
  std::vector<int> dims;           // per vertex
  std::vector<Matrix> arrow_maps;  // arrow a: i->j gets a dims[j] x dims[i] map

  int total_dim() const;
  const Field& field() const { return alg->field(); }
  // shape checks + every relation acts by zero
  void validate() const;
  bool operator==(const Representation&) const = default;
};

struct ModuleMorphism {
  Representation dom, cod;
  std::vector<Matrix> maps;  // per vertex, cod.dims[v] x dom.dims[v]

  void validate() const;  // shapes + commuting squares
  bool is_zero() const;
  bool operator==(const ModuleMorphism&) const = default;
};

// --- structural modules ---------------------------------------------------

Representation zero_rep(AlgebraPtr alg);
bool is_zero(const Representation& m);

Representation simple(AlgebraPtr alg, int v);
// P_v = e_v A: vertex-w component spanned by basis paths v -> w in basis order
Representation projective(AlgebraPtr alg, int v);
Representation injective(AlgebraPtr alg, int v);
Representation regular_module(AlgebraPtr alg);  // direct sum of all P_v

// per-vertex lists of algebra basis indices giving the basis of P_v
std::vector<std::vector<int>> projective_basis_paths(const AlgebraPtr& alg, int v);

Matrix path_action(const Representation& m, const Path& p);

// --- morphism arithmetic ---------------------------------------------------

ModuleMorphism identity_morphism(const Representation& m);
ModuleMorphism zero_morphism(const Representation& dom, const Representation& cod);
ModuleMorphism compose(const ModuleMorphism& f, const ModuleMorphism& g);  // f after g
ModuleMorphism add(const ModuleMorphism& f, const ModuleMorphism& g);
ModuleMorphism scale(const Scalar& c, const ModuleMorphism& f);

// basis of Hom(M, N) as module morphisms, in a deterministic order
std::vector<ModuleMorphism> hom_basis(const Representation& m, const Representation& n);
int hom_dim(const Representation& m, const Representation& n);

// h with q o h = f (nullopt if f does not factor through q)
std::optional<ModuleMorphism> lift(const ModuleMorphism& q, const ModuleMorphism& f);
// h with h o q = f (nullopt if f does not descend along q)
std::optional<ModuleMorphism> colift(const ModuleMorphism& q, const ModuleMorphism& f);
// s with p o s = id (a section of p), r with r o i = id (a retraction of i)
std::optional<ModuleMorphism> section_for(const ModuleMorphism& p);
std::optional<ModuleMorphism> retraction_for(const ModuleMorphism& i);

// --- sub/quotient machinery -------------------------------------------------

// submodule generated by the given per-vertex column spans; returns S -> M
ModuleMorphism sub_inclusion(const Representation& m, const std::vector<Matrix>& spans);
ModuleMorphism kernel_inclusion(const ModuleMorphism& f);
ModuleMorphism image_inclusion(const ModuleMorphism& f);
// M ->> M/S for a given inclusion S -> M with independent columns
ModuleMorphism quotient_projection(const Representation& m, const ModuleMorphism& inc);
ModuleMorphism cokernel_projection(const ModuleMorphism& f);

ModuleMorphism radical_inclusion(const Representation& m);
ModuleMorphism socle_inclusion(const Representation& m);
ModuleMorphism top_projection(const Representation& m);

ModuleMorphism projective_cover(const Representation& m);    // P ->> M
ModuleMorphism injective_envelope(const Representation& m);  // M -> I

// vertices of the summands of the minimal cover of M, ascending, one entry
// per summand (vertex v appears dim (M/rad M)_v times); matches the summand
// order produced by projective_cover
std::vector<int> cover_vertices(const Representation& m);

// basis of Hom(P, N) for P the direct sum of the listed indecomposable
// projectives, one morphism per summand and basis vector of N at its vertex,
// in that order; Hom(e_v A, N) = N_v, so this is closed form, no solving
std::vector<ModuleMorphism> hom_basis_from_projective(const std::vector<int>& verts,
                                                      const Representation& n);

bool is_projective_rep(const Representation& m);
bool is_injective_rep(const Representation& m);

// --- direct sums -------------------------------------------------------------

Representation direct_sum(const std::vector<Representation>& parts);
ModuleMorphism summand_inclusion(const std::vector<Representation>& parts, int k);
ModuleMorphism summand_projection(const std::vector<Representation>& parts, int k);

// --- duality -----------------------------------------------------------------

// D M over the opposite algebra; D D M == M on the nose
Representation dualize(const Representation& m);
ModuleMorphism dualize(const ModuleMorphism& f);  // contravariant

// --- indecomposability -------------------------------------------------------

// True iff End(M) is local with residue field k (trace-form rank test; needs
// characteristic 0 or p > total dim).  The zero module is not indecomposable.
bool is_indecomposable(const Representation& m);

// Split into indecomposable summands (repeats = multiplicity).  Throws
// error("decomposition failed") if a splitting eigenvalue cannot be found
// in the ground field.
std::vector<Representation> decompose(const Representation& m);

// exact isomorphism test: searches Hom(M, N) for an invertible element
bool is_isomorphic(const Representation& m, const Representation& n,
                   std::uint64_t seed = 0);

}  // namespace qhom
