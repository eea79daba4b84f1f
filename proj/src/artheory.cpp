// Tau via the transposed element matrix of a minimal presentation, almost
// split sequences as the socle line of Ext^1(X, tau X), and the worklist
// closure that enumerates the indecomposables.
#include <qhom/artheory.hpp>

#include <utility>

namespace qhom {

namespace {

std::vector<Scalar> unit_coords(const AlgebraPtr& alg, int i) {
  std::vector<Scalar> x(alg->dimension(), alg->field().zero());
  x[static_cast<size_t>(i)] = alg->field().one();
  return x;
}

// the element of e_w A e_v realized by f: P_v -> P_w, read off the image of
// e_v (the first vertex-v basis path of P_v)
std::vector<Scalar> element_of(const ModuleMorphism& f, int v, int w) {
  const AlgebraPtr& alg = f.dom.alg;
  auto wl = projective_basis_paths(alg, w);
  std::vector<Scalar> x(alg->dimension(), alg->field().zero());
  const Matrix& col = f.maps[v];
  for (size_t r = 0; r < wl[v].size(); ++r)
    x[static_cast<size_t>(wl[v][r])] = col.at(static_cast<int>(r), 0);
  return x;
}

Scalar pair_trace(const Field& f, const ModuleMorphism& a, const ModuleMorphism& b) {
  Scalar t = f.zero();
  for (size_t v = 0; v < a.maps.size(); ++v) {
    const Matrix& A = a.maps[v];
    const Matrix& B = b.maps[v];
    for (int r = 0; r < A.rows(); ++r)
      for (int c = 0; c < A.cols(); ++c)
        t = f.add(t, f.mul(A.at(r, c), B.at(c, r)));
  }
  return t;
}

// basis of rad End(M) as the radical of the action trace form tr(fg); exact
// in characteristic 0 or p > dim M, like the locality test
std::vector<ModuleMorphism> radical_endos(const Representation& m,
                                          const std::vector<ModuleMorphism>& ends) {
  const Field& f = m.field();
  if (!f.is_rational() &&
      f.characteristic() <= static_cast<unsigned long>(m.total_dim()))
    throw error("endomorphism radical needs characteristic 0 or p > dim of the module");
  int k = static_cast<int>(ends.size());
  Matrix gram(k, k, f);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      gram.at(i, j) = pair_trace(f, ends[static_cast<size_t>(i)],
                                 ends[static_cast<size_t>(j)]);
  Matrix ker = kernel_basis(gram);
  std::vector<ModuleMorphism> rad;
  for (int c = 0; c < ker.cols(); ++c) {
    ModuleMorphism g = zero_morphism(m, m);
    for (int i = 0; i < k; ++i)
      g = add(g, scale(ker.at(i, c), ends[static_cast<size_t>(i)]));
    rad.push_back(std::move(g));
  }
  return rad;
}

}  // namespace

ModuleMorphism proj_hom_from_element(const AlgebraPtr& alg, int v, int w,
                                     const std::vector<Scalar>& coords) {
  const Field& f = alg->field();
  Representation pv = projective(alg, v);
  Representation pw = projective(alg, w);
  auto lv = projective_basis_paths(alg, v);
  auto lw = projective_basis_paths(alg, w);
  // position of each basis path inside P_w's per-vertex lists
  std::vector<int> pos(static_cast<size_t>(alg->dimension()), -1);
  for (size_t u = 0; u < lw.size(); ++u)
    for (size_t k = 0; k < lw[u].size(); ++k)
      pos[static_cast<size_t>(lw[u][k])] = static_cast<int>(k);
  ModuleMorphism out;
  out.dom = pv;
  out.cod = pw;
  for (int u = 0; u < alg->n_vertices(); ++u) {
    Matrix A(pw.dims[static_cast<size_t>(u)], pv.dims[static_cast<size_t>(u)], f);
    for (size_t c = 0; c < lv[static_cast<size_t>(u)].size(); ++c) {
      std::vector<Scalar> prod =
          alg->multiply(coords, unit_coords(alg, lv[static_cast<size_t>(u)][c]));
      for (int k = 0; k < alg->dimension(); ++k) {
        if (Field::is_zero(prod[static_cast<size_t>(k)])) continue;
        if (pos[static_cast<size_t>(k)] < 0)
          throw internal_check_error("element morphism leaves the target projective");
        A.at(pos[static_cast<size_t>(k)], static_cast<int>(c)) = prod[static_cast<size_t>(k)];
      }
    }
    out.maps.push_back(std::move(A));
  }
  out.validate();
  return out;
}

Representation transpose_module(const Representation& m) {
  const AlgebraPtr& alg = m.alg;
  AlgebraPtr op = alg->opposite();
  if (is_zero(m)) return zero_rep(op);
  ModuleMorphism cover = projective_cover(m);     // P0 ->> M
  ModuleMorphism winc = kernel_inclusion(cover);  // syzygy -> P0
  if (winc.dom.total_dim() == 0) return zero_rep(op);  // M projective
  ModuleMorphism cover1 = projective_cover(winc.dom);
  ModuleMorphism d = compose(winc, cover1);  // P1 -> P0, the minimal presentation
  std::vector<int> v0 = cover_vertices(m);
  std::vector<int> v1 = cover_vertices(winc.dom);

  std::vector<Representation> parts0, parts1, parts0op, parts1op;
  for (int v : v0) parts0.push_back(projective(alg, v));
  for (int v : v1) parts1.push_back(projective(alg, v));
  if (direct_sum(parts0) != cover.dom || direct_sum(parts1) != cover1.dom)
    throw internal_check_error("cover summands do not match their vertex list");
  for (int v : v0) parts0op.push_back(projective(op, v));
  for (int v : v1) parts1op.push_back(projective(op, v));

  // Hom(-, A) swaps the roles of the two sums and reverses every entry of the
  // element matrix; reversed paths keep their basis index in the opposite
  // algebra, so the coordinate vectors carry over unchanged.
  ModuleMorphism g = zero_morphism(direct_sum(parts0op), direct_sum(parts1op));
  for (size_t i = 0; i < v1.size(); ++i) {
    ModuleMorphism di = compose(d, summand_inclusion(parts1, static_cast<int>(i)));
    for (size_t j = 0; j < v0.size(); ++j) {
      ModuleMorphism fji = compose(summand_projection(parts0, static_cast<int>(j)), di);
      std::vector<Scalar> x = element_of(fji, v1[i], v0[j]);
      ModuleMorphism gij = proj_hom_from_element(op, v0[j], v1[i], x);
      g = add(g, compose(summand_inclusion(parts1op, static_cast<int>(i)),
                         compose(gij, summand_projection(parts0op, static_cast<int>(j)))));
    }
  }
  return cokernel_projection(g).cod;
}

Representation tau(const Representation& m) { return dualize(transpose_module(m)); }

Representation tau_inverse(const Representation& m) {
  return transpose_module(dualize(m));
}

namespace {

// x indecomposable, tx = tau x already computed and nonzero
ARSequence ar_sequence_impl(const Representation& x, Representation tx) {
  Ext1Space e = ext1_space(x, tx);
  if (e.dim() == 0) throw internal_check_error("Ext^1(X, tau X) vanished");
  const Field& f = x.field();
  int d = e.dim();

  // matrix of an operation on Ext^1 classes over the `reps` basis
  auto action_matrix = [&](auto&& act) {
    Matrix t(d, d, f);
    for (int c = 0; c < d; ++c) {
      std::vector<Scalar> co = class_coords(e, act(e.reps[static_cast<size_t>(c)]));
      for (int r = 0; r < d; ++r) t.at(r, c) = co[static_cast<size_t>(r)];
    }
    return t;
  };

  Matrix constraints(0, d, f);
  // right action of rad End(X): precompose with the endomorphism induced on
  // the syzygy through the cover
  for (const ModuleMorphism& g : radical_endos(x, hom_basis(x, x))) {
    auto h = lift(e.cover, compose(g, e.cover));
    if (!h) throw internal_check_error("endomorphism does not lift to the cover");
    auto g1 = lift(e.omega_inc, compose(*h, e.omega_inc));
    if (!g1) throw internal_check_error("lift does not preserve the syzygy");
    constraints = Matrix::vstack(
        constraints,
        action_matrix([&](const ModuleMorphism& w) { return compose(w, *g1); }));
  }
  // left action of rad End(tau X): postcompose
  for (const ModuleMorphism& g : radical_endos(tx, hom_basis(tx, tx))) {
    constraints = Matrix::vstack(
        constraints,
        action_matrix([&](const ModuleMorphism& w) { return compose(g, w); }));
  }

  Matrix sol = kernel_basis(constraints);
  if (sol.cols() == 0)
    throw internal_check_error("the socle of Ext^1(X, tau X) vanished");
  if (sol.cols() > 1) throw error("AR class ambiguous");
  ModuleMorphism xi = zero_morphism(e.omega_inc.dom, tx);
  for (int i = 0; i < d; ++i)
    xi = add(xi, scale(sol.at(i, 0), e.reps[static_cast<size_t>(i)]));
  Extension ext = extension_module(e, xi);
  // the class is nonzero in quotient coordinates, so the sequence cannot
  // split; check the pushout is short exact instead of searching a section
  if (!is_zero(kernel_inclusion(ext.incl).dom) ||
      !compose(ext.proj, ext.incl).is_zero() ||
      ext.middle.total_dim() != x.total_dim() + ext.incl.dom.total_dim())
    throw internal_check_error("almost split pushout is not short exact");
  return {std::move(tx), ext.middle, x, ext.incl, ext.proj};
}

}  // namespace

ARSequence ar_sequence(const Representation& x) {
  if (!is_indecomposable(x))
    throw error("almost split sequences need an indecomposable end term");
  Representation tx = tau(x);
  if (is_zero(tx))
    throw error("projective modules admit no almost split sequence");
  return ar_sequence_impl(x, std::move(tx));
}

IndecompList enumerate_indecomposables(const AlgebraPtr& alg, EnumCaps caps) {
  IndecompList out;
  std::vector<Representation> queue;

  auto add_module = [&](const Representation& m) {
    if (out.cap_exceeded || is_zero(m)) return;
    // gate before decomposing: splitting a too-large module is exactly the
    // kind of work the size cap is there to avoid
    if (m.total_dim() > caps.size_cap) {
      out.cap_exceeded = true;
      return;
    }
    for (Representation& part : decompose(m)) {
      bool seen = false;
      for (const Representation& have : out.modules)
        if (is_isomorphic(have, part)) {
          seen = true;
          break;
        }
      if (seen) continue;
      if (static_cast<int>(out.modules.size()) >= caps.count_cap) {
        out.cap_exceeded = true;
        return;
      }
      out.modules.push_back(part);
      queue.push_back(std::move(part));
    }
  };

  // seeds: P, I, S plus the neighbours of the projectives and injectives in
  // the AR quiver (summands of rad P and I/soc), so the closure also walks
  // the irreducible maps touching them
  for (int v = 0; v < alg->n_vertices() && !out.cap_exceeded; ++v) {
    Representation p = projective(alg, v);
    Representation i = injective(alg, v);
    add_module(p);
    add_module(i);
    add_module(simple(alg, v));
    add_module(radical_inclusion(p).dom);
    add_module(quotient_projection(i, socle_inclusion(i)).cod);
  }
  size_t next = 0;
  while (next < queue.size() && !out.cap_exceeded) {
    Representation x = queue[next++];  // copy; the queue may grow
    Representation tx = tau(x);
    add_module(tx);
    if (!out.cap_exceeded) add_module(tau_inverse(x));
    if (out.cap_exceeded) break;
    if (!is_zero(tx)) {
      // the middle term has dimension dim X + dim tau X on the nose, so the
      // size gate can fire without paying for the sequence
      if (x.total_dim() + tx.total_dim() > caps.size_cap) {
        out.cap_exceeded = true;
        break;
      }
      add_module(ar_sequence_impl(x, std::move(tx)).middle);
    }
  }
  // a fixpoint is a finite set containing all projectives and injectives and
  // closed under irreducible maps in both directions, hence (blockwise) all
  // of ind
  out.certified = !out.cap_exceeded;
  return out;
}

int IndContext::find_iso(const Representation& m) const {
  for (int i = 0; i < size(); ++i) {
    if (list.modules[static_cast<size_t>(i)].dims != m.dims) continue;
    if (is_isomorphic(list.modules[static_cast<size_t>(i)], m)) return i;
  }
  return -1;
}

IndContext build_ind_context(const AlgebraPtr& alg, EnumCaps caps, int res_cap) {
  IndContext ctx;
  ctx.alg = alg;
  ctx.res_cap = res_cap;
  ctx.list = enumerate_indecomposables(alg, caps);
  int n = ctx.size();
  ctx.hom.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
  ctx.ext1.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
  for (int i = 0; i < n; ++i) {
    const Representation& m = ctx.module(i);
    ctx.pd.push_back(proj_dim(m, res_cap));
    ctx.id.push_back(inj_dim(m, res_cap));
    for (int j = 0; j < n; ++j)
      ctx.hom[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          hom_dim(m, ctx.module(j));
  }
  for (int i = 0; i < n; ++i) {
    // dim Ext^1(M, N) = dim Hom(OM, N) - dim Hom(P0, N) + dim Hom(M, N)
    ModuleMorphism cover = projective_cover(ctx.module(i));
    ModuleMorphism w = kernel_inclusion(cover);
    std::vector<int> cv = cover_vertices(ctx.module(i));
    for (int j = 0; j < n; ++j) {
      int homp = 0;
      for (int v : cv) homp += ctx.module(j).dims[static_cast<size_t>(v)];
      ctx.ext1[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          hom_dim(w.dom, ctx.module(j)) - homp +
          ctx.hom[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
  }
  auto locate = [&](const Representation& img) {
    if (is_zero(img)) return -1;
    int k = ctx.find_iso(img);
    if (k < 0) {
      if (ctx.list.certified)
        throw internal_check_error("translate left the certified list");
      return -2;
    }
    return k;
  };
  for (int i = 0; i < n; ++i) {
    ctx.tau_idx.push_back(locate(tau(ctx.module(i))));
    ctx.tau_inv_idx.push_back(locate(tau_inverse(ctx.module(i))));
  }
  return ctx;
}

}  // namespace qhom
