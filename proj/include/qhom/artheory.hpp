#pragma once
// The transpose, tau and its inverse, almost split sequences, and the closure
// enumeration of all indecomposables (with caps, since the algebra may be of
// infinite representation type).
#include <qhom/homology.hpp>

#include <cstdint>

namespace qhom {

// the morphism P_v -> P_w of right modules given by left multiplication with
// an element of e_w A e_v (coordinates over the algebra basis)
ModuleMorphism proj_hom_from_element(const AlgebraPtr& alg, int v, int w,
                                     const std::vector<Scalar>& coords);

// Tr M over the opposite algebra: transpose the element matrix of the
// minimal presentation P_1 -> P_0 ->> M and take the cokernel.  Minimal
// presentations make this functorial enough for tau; Tr of a projective is 0.
Representation transpose_module(const Representation& m);

Representation tau(const Representation& m);          // D Tr, 0 on projectives
Representation tau_inverse(const Representation& m);  // Tr D, 0 on injectives

// 0 -> tau X -> E -> X -> 0 for indecomposable non-projective X: the unique
// class of Ext^1(X, tau X) killed by both radicals, realized as a pushout.
// Throws error("AR class ambiguous") if the annihilator is not a line.
struct ARSequence {
  Representation start, middle, end;
  ModuleMorphism incl;  // tau X -> E
  ModuleMorphism proj;  // E ->> X
};

ARSequence ar_sequence(const Representation& x);

struct EnumCaps {
  int count_cap = 512;  // maximum number of indecomposables
  int size_cap = 64;    // maximum total dimension of a single module
};

struct IndecompList {
  std::vector<Representation> modules;  // pairwise non-isomorphic, stable order
  bool certified = false;     // closure reached a fixpoint within the caps
  bool cap_exceeded = false;  // some cap was hit; the list may be incomplete
};

// Worklist closure from the projectives, injectives and simples under
// tau, tau^{-1} and middle terms of almost split sequences.  A fixpoint is a
// finite set containing all projectives and closed under irreducible maps,
// so reaching one certifies the list is complete.
IndecompList enumerate_indecomposables(const AlgebraPtr& alg, EnumCaps caps = {});

// Enumeration plus memoized per-module invariants, all indexed by position
// in `list.modules`.
struct IndContext {
  AlgebraPtr alg;
  IndecompList list;
  int res_cap = kDefaultResolutionCap;
  std::vector<Capped> pd, id;
  std::vector<std::vector<int>> hom, ext1;
  // index of tau / tau^{-1} of each module: -1 = zero, -2 = not in the list
  std::vector<int> tau_idx, tau_inv_idx;

  const Representation& module(int i) const { return list.modules[i]; }
  int size() const { return static_cast<int>(list.modules.size()); }
  // position of the module isomorphic to m, or -1
  int find_iso(const Representation& m) const;
};

IndContext build_ind_context(const AlgebraPtr& alg, EnumCaps caps = {},
                             int res_cap = kDefaultResolutionCap);

}  // namespace qhom
