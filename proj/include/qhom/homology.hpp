#pragma once
// Minimal projective and injective resolutions and the invariants derived
// from them: projective/injective dimension, Ext spaces with constructive
// degree-1 classes, global dimension (computed two independent ways), and
// dominant dimension.
//
// Injective-side constructions go through the duality: the injective
// resolution of M is the dual of the projective resolution of D M.
#include <qhom/rep.hpp>

#include <string>

namespace qhom {

inline constexpr int kDefaultResolutionCap = 12;

// A homological dimension that may exceed the resolution cap.  finite=false
// means "at least `value`"; resolutions capped at n produce at_least(n + 1).
struct Capped {
  int value = 0;
  bool finite = true;

  static Capped exactly(int v) { return {v, true}; }
  static Capped at_least(int v) { return {v, false}; }
  std::string to_string() const {
    return finite ? std::to_string(value) : ">=" + std::to_string(value);
  }
  bool operator==(const Capped&) const = default;
};

struct Resolution {
  Representation module;
  std::vector<Representation> terms;
  // projective side: maps[0]: terms[0] ->> module, maps[k]: terms[k] -> terms[k-1];
  // injective side: maps[0]: module -> terms[0], maps[k]: terms[k-1] -> terms[k]
  std::vector<ModuleMorphism> maps;
  bool complete = false;

  // the dimension the resolution witnesses (-1 for the zero module)
  Capped length() const;
};

Resolution projective_resolution(const Representation& m,
                                 int cap = kDefaultResolutionCap);
Resolution injective_resolution(const Representation& m,
                                int cap = kDefaultResolutionCap);

Capped proj_dim(const Representation& m, int cap = kDefaultResolutionCap);
Capped inj_dim(const Representation& m, int cap = kDefaultResolutionCap);

// kernel of the projective cover, as an inclusion into the cover's domain
ModuleMorphism syzygy_inclusion(const Representation& m);

// dim Ext^deg(M, N); deg 0 is Hom.  Uses exact syzygies, so no cap is needed.
int ext_dim(const Representation& m, const Representation& n, int deg);

// Ext^1(M, N) presented as Hom(OM, N) modulo restrictions of Hom(P, N),
// where P ->> M is the minimal cover and OM its kernel.  `reps` lifts a
// basis of the quotient; classes of arbitrary cocycles can be read off with
// class_coords.
struct Ext1Space {
  Representation m, n;
  ModuleMorphism cover;      // P ->> M
  ModuleMorphism omega_inc;  // OM -> P
  std::vector<ModuleMorphism> hom_all;  // basis of Hom(OM, N)
  std::vector<ModuleMorphism> reps;     // quotient-basis lifts
  int dim() const { return static_cast<int>(reps.size()); }

  // used by class_coords
  Matrix hom_flat;         // flattened hom_all basis, one column each
  Matrix boundary_rows;    // rref'd row space of the coboundaries
  std::vector<int> boundary_pivots, free_positions;
};

Ext1Space ext1_space(const Representation& m, const Representation& n);

// coefficients of the class of a cocycle OM -> N over the `reps` basis
std::vector<Scalar> class_coords(const Ext1Space& e, const ModuleMorphism& cocycle);

// 0 -> N -> E -> M -> 0 realized as the pushout of 0 -> OM -> P -> M -> 0
// along a cocycle OM -> N
struct Extension {
  Representation middle;
  ModuleMorphism incl;  // N -> E
  ModuleMorphism proj;  // E ->> M
};

Extension extension_module(const Ext1Space& e, const ModuleMorphism& cocycle);

// max projective dimension of the simples; cross-checked against the
// radical route (1 + max pd rad P_v) and throwing internal_check_error on
// disagreement
Capped global_dimension(const AlgebraPtr& alg, int cap = kDefaultResolutionCap);

// number of leading projective terms of the minimal injective resolution of
// the regular module
Capped dominant_dimension(const AlgebraPtr& alg, int cap = kDefaultResolutionCap);

}  // namespace qhom
