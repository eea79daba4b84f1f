#include <qhom/errors.hpp>
#include <qhom/homology.hpp>

#include <algorithm>

namespace qhom {

Capped Resolution::length() const {
  if (!complete) return Capped::at_least(static_cast<int>(terms.size()));
  if (terms.size() == 1 && terms[0].total_dim() == 0) return Capped::exactly(-1);
  return Capped::exactly(static_cast<int>(terms.size()) - 1);
}

Resolution projective_resolution(const Representation& m, int cap) {
  Resolution r;
  r.module = m;
  ModuleMorphism cover = projective_cover(m);
  r.terms.push_back(cover.dom);
  r.maps.push_back(cover);
  ModuleMorphism ker = kernel_inclusion(cover);
  if (is_zero(ker.dom)) {
    r.complete = true;
    return r;
  }
  for (int k = 1; k <= cap; ++k) {
    ModuleMorphism next = projective_cover(ker.dom);
    r.terms.push_back(next.dom);
    r.maps.push_back(compose(ker, next));  // P_k -> P_{k-1}
    ker = kernel_inclusion(next);
    if (is_zero(ker.dom)) {
      r.complete = true;
      return r;
    }
  }
  return r;  // kernel still alive: length >= cap + 1
}

Resolution injective_resolution(const Representation& m, int cap) {
  Resolution dual = projective_resolution(dualize(m), cap);
  Resolution r;
  r.module = m;
  r.complete = dual.complete;
  for (const auto& t : dual.terms) r.terms.push_back(dualize(t));
  for (const auto& f : dual.maps) r.maps.push_back(dualize(f));
  if (r.maps[0].dom != m)
    throw internal_check_error("dualized resolution lost its module");
  return r;
}

Capped proj_dim(const Representation& m, int cap) {
  return projective_resolution(m, cap).length();
}

Capped inj_dim(const Representation& m, int cap) {
  return proj_dim(dualize(m), cap);
}

ModuleMorphism syzygy_inclusion(const Representation& m) {
  return kernel_inclusion(projective_cover(m));
}

int ext_dim(const Representation& m, const Representation& n, int deg) {
  if (deg < 0) throw error("negative Ext degree");
  if (deg == 0) return hom_dim(m, n);
  Representation o = m;
  for (int k = 1; k < deg; ++k) {
    o = syzygy_inclusion(o).dom;
    if (is_zero(o)) return 0;
  }
  if (is_zero(o)) return 0;
  ModuleMorphism cover = projective_cover(o);
  ModuleMorphism w = kernel_inclusion(cover);
  int homp = 0;  // Hom(P, N) summand by summand: Hom(e_v A, N) = N_v
  for (int v : cover_vertices(o)) homp += n.dims[static_cast<size_t>(v)];
  // Ext^1(O, N) from 0 -> W -> P -> O -> 0:
  //   dim Hom(W,N) - dim Hom(P,N) + dim Hom(O,N)
  return hom_dim(w.dom, n) - homp + hom_dim(o, n);
}

namespace {

Matrix flatten_morphism(const ModuleMorphism& f) {
  const Field& field = f.dom.field();
  int total = 0;
  for (const auto& m : f.maps) total += m.rows() * m.cols();
  Matrix out(total, 1, field);
  int at = 0;
  for (const auto& m : f.maps)
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c) out.at(at++, 0) = m.at(r, c);
  return out;
}

}  // namespace

Ext1Space ext1_space(const Representation& m, const Representation& n) {
  const Field& field = m.field();
  Ext1Space e;
  e.m = m;
  e.n = n;
  e.cover = projective_cover(m);
  e.omega_inc = kernel_inclusion(e.cover);
  e.hom_all = hom_basis(e.omega_inc.dom, n);
  int h = static_cast<int>(e.hom_all.size());

  int flat_rows = 0;
  for (size_t v = 0; v < n.dims.size(); ++v)
    flat_rows += n.dims[v] * e.omega_inc.dom.dims[v];
  e.hom_flat = Matrix(flat_rows, h, field);
  for (int j = 0; j < h; ++j) {
    Matrix col = flatten_morphism(e.hom_all[j]);
    for (int r = 0; r < flat_rows; ++r) e.hom_flat.at(r, j) = col.at(r, 0);
  }

  // coboundaries: restrictions of Hom(P, N) along OM -> P, with the
  // projective hom basis written down in closed form and all coordinate
  // systems solved in one pass
  auto homp = hom_basis_from_projective(cover_vertices(m), n);
  Matrix ball(flat_rows, static_cast<int>(homp.size()), field);
  for (size_t j = 0; j < homp.size(); ++j) {
    Matrix flat = flatten_morphism(compose(homp[j], e.omega_inc));
    for (int r = 0; r < flat_rows; ++r) ball.at(r, static_cast<int>(j)) = flat.at(r, 0);
  }
  Matrix bcoords(h, static_cast<int>(homp.size()), field);
  if (!homp.empty()) {
    auto x = solve_linear(e.hom_flat, ball);
    if (!x) throw internal_check_error("coboundary outside the hom space");
    bcoords = std::move(*x);
  }
  Rref rr = rref(bcoords.transpose());
  // keep only the nonzero rows of the echelon form
  std::vector<int> keep(rr.rank);
  for (int i = 0; i < rr.rank; ++i) keep[i] = i;
  e.boundary_rows = rr.reduced.rows_subset(keep);
  e.boundary_pivots = rr.pivot_cols;
  std::vector<char> is_pivot(h, 0);
  for (int p : e.boundary_pivots) is_pivot[p] = 1;
  for (int i = 0; i < h; ++i)
    if (!is_pivot[i]) {
      e.free_positions.push_back(i);
      e.reps.push_back(e.hom_all[i]);
    }
  return e;
}

std::vector<Scalar> class_coords(const Ext1Space& e, const ModuleMorphism& cocycle) {
  const Field& field = e.m.field();
  int h = static_cast<int>(e.hom_all.size());
  std::vector<Scalar> x(h, field.zero());
  if (h > 0) {
    auto sol = solve_linear(e.hom_flat, flatten_morphism(cocycle));
    if (!sol) throw error("cocycle is not a morphism into the hom space");
    for (int r = 0; r < h; ++r) x[r] = sol->at(r, 0);
  }
  // reduce modulo the coboundary row space
  for (int i = 0; i < e.boundary_rows.rows(); ++i) {
    int p = e.boundary_pivots[i];
    if (Field::is_zero(x[p])) continue;
    Scalar c = x[p];
    for (int j = 0; j < h; ++j)
      x[j] = field.sub(x[j], field.mul(c, e.boundary_rows.at(i, j)));
  }
  std::vector<Scalar> out;
  for (int fpos : e.free_positions) out.push_back(x[fpos]);
  return out;
}

Extension extension_module(const Ext1Space& e, const ModuleMorphism& cocycle) {
  const Representation &n = e.n, &p = e.cover.dom, &w = e.omega_inc.dom;
  std::vector<Representation> np{n, p};
  Representation sum = direct_sum(np);
  // graph map W -> N + P, w |-> (-phi(w), inc(w))
  ModuleMorphism graph;
  graph.dom = w;
  graph.cod = sum;
  for (size_t v = 0; v < w.dims.size(); ++v)
    graph.maps.push_back(
        Matrix::vstack(cocycle.maps[v].negated(), e.omega_inc.maps[v]));
  graph.validate();
  ModuleMorphism quo = cokernel_projection(graph);

  Extension ext;
  ext.middle = quo.cod;
  ext.incl = compose(quo, summand_inclusion(np, 0));
  // (0, cover): N + P -> M kills the graph, so it descends to the quotient
  ModuleMorphism onto = compose(e.cover, summand_projection(np, 1));
  auto desc = colift(quo, onto);
  if (!desc) throw internal_check_error("pushout projection did not descend");
  ext.proj = *desc;
  if (ext.middle.total_dim() != n.total_dim() + e.m.total_dim())
    throw internal_check_error("extension middle term has the wrong size");
  return ext;
}

namespace {

Capped capped_max(const std::vector<Capped>& xs) {
  Capped best = Capped::exactly(-1);
  for (const auto& x : xs) {
    if (!x.finite) return x;  // caps are uniform per call site
    if (x.value > best.value) best = x;
  }
  return best;
}

}  // namespace

Capped global_dimension(const AlgebraPtr& alg, int cap) {
  if (cap < 1) throw error("resolution cap must be at least 1");
  // route 1: sup over simples
  std::vector<Capped> per_simple;
  for (int v = 0; v < alg->n_vertices(); ++v)
    per_simple.push_back(proj_dim(simple(alg, v), cap));
  Capped via_simples = capped_max(per_simple);

  // route 2: 0 if every simple is projective, else 1 + sup pd rad P_v
  bool all_proj = true;
  for (int v = 0; v < alg->n_vertices(); ++v)
    if (!is_projective_rep(simple(alg, v))) all_proj = false;
  Capped via_radicals;
  if (all_proj) {
    via_radicals = Capped::exactly(0);
  } else {
    std::vector<Capped> per_rad;
    for (int v = 0; v < alg->n_vertices(); ++v)
      per_rad.push_back(proj_dim(radical_inclusion(projective(alg, v)).dom, cap - 1));
    Capped r = capped_max(per_rad);
    via_radicals = r.finite ? Capped::exactly(r.value + 1)
                            : Capped::at_least(r.value + 1);
  }

  if (via_simples != via_radicals)
    throw internal_check_error("global dimension routes disagree: " +
                               via_simples.to_string() + " vs " +
                               via_radicals.to_string());
  return via_simples;
}

Capped dominant_dimension(const AlgebraPtr& alg, int cap) {
  Resolution r = injective_resolution(regular_module(alg), cap);
  for (size_t k = 0; k < r.terms.size(); ++k)
    if (!is_projective_rep(r.terms[k])) return Capped::exactly(static_cast<int>(k));
  // every computed term is projective; if the resolution also ended, it stays
  // projective forever
  return Capped::at_least(static_cast<int>(r.terms.size()));
}

}  // namespace qhom
