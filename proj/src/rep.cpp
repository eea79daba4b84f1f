#include <qhom/errors.hpp>
#include <qhom/rep.hpp>

#include <algorithm>
#include <random>
#include <utility>

namespace qhom {

int Representation::total_dim() const {
  int t = 0;
  for (int d : dims) t += d;
  return t;
}

void Representation::validate() const {
  if (!alg) throw error("representation without an algebra");
  const Quiver& q = alg->quiver();
  if (static_cast<int>(dims.size()) != q.n_vertices ||
      arrow_maps.size() != q.arrows.size())
    throw error("representation shape mismatch");
  for (int d : dims)
    if (d < 0) throw error("negative vertex dimension");
  for (size_t a = 0; a < arrow_maps.size(); ++a)
    if (arrow_maps[a].rows() != dims[q.arrows[a].tgt] ||
        arrow_maps[a].cols() != dims[q.arrows[a].src])
      throw error("arrow map has the wrong shape");
  const Field& f = field();
  for (const auto& rel : alg->relations()) {
    const auto& first = rel.terms.front().second;
    int src = q.arrows[first.front()].src;
    int tgt = q.arrows[first.back()].tgt;
    Matrix sum(dims[tgt], dims[src], f);
    for (const auto& [c, arrows] : rel.terms) {
      Path p{src, tgt, arrows};
      sum = sum + path_action(*this, p).scaled(c);
    }
    if (!sum.is_zero()) throw error("a relation does not act by zero");
  }
}

Matrix path_action(const Representation& m, const Path& p) {
  Matrix acc = Matrix::identity(m.dims[p.src], m.field());
  int at = p.src;
  for (int a : p.arrows) {
    const Arrow& ar = m.alg->quiver().arrows[a];
    if (ar.src != at) throw std::invalid_argument("path is not composable");
    acc = m.arrow_maps[a] * acc;
    at = ar.tgt;
  }
  return acc;
}

Representation zero_rep(AlgebraPtr alg) {
  Representation m;
  m.alg = alg;
  m.dims.assign(alg->n_vertices(), 0);
  for (int a = 0; a < alg->n_arrows(); ++a)
    m.arrow_maps.emplace_back(0, 0, alg->field());
  return m;
}

bool is_zero(const Representation& m) { return m.total_dim() == 0; }

Representation simple(AlgebraPtr alg, int v) {
  Representation m;
  m.alg = alg;
  m.dims.assign(alg->n_vertices(), 0);
  m.dims[v] = 1;
  const Quiver& q = alg->quiver();
  for (const auto& a : q.arrows)
    m.arrow_maps.emplace_back(m.dims[a.tgt], m.dims[a.src], alg->field());
  return m;
}

std::vector<std::vector<int>> projective_basis_paths(const AlgebraPtr& alg, int v) {
  std::vector<std::vector<int>> lists(alg->n_vertices());
  for (int b : alg->basis_with_source(v)) lists[alg->basis()[b].tgt].push_back(b);
  return lists;
}

Representation projective(AlgebraPtr alg, int v) {
  const Field& f = alg->field();
  auto lists = projective_basis_paths(alg, v);
  std::vector<int> pos(alg->dimension(), -1);
  for (const auto& l : lists)
    for (size_t k = 0; k < l.size(); ++k) pos[l[k]] = static_cast<int>(k);

  Representation m;
  m.alg = alg;
  m.dims.resize(alg->n_vertices());
  for (int w = 0; w < alg->n_vertices(); ++w)
    m.dims[w] = static_cast<int>(lists[w].size());
  const Quiver& q = alg->quiver();
  for (int a = 0; a < alg->n_arrows(); ++a) {
    int i = q.arrows[a].src, j = q.arrows[a].tgt;
    Matrix A(m.dims[j], m.dims[i], f);
    for (int c = 0; c < m.dims[i]; ++c) {
      const auto& coords = alg->table(lists[i][c], alg->arrow_index(a));
      for (int k = 0; k < alg->dimension(); ++k) {
        if (Field::is_zero(coords[k])) continue;
        const Path& pk = alg->basis()[k];
        if (pk.src != v || pk.tgt != j)
          throw internal_check_error("projective action left e_v A");
        A.at(pos[k], c) = coords[k];
      }
    }
    m.arrow_maps.push_back(std::move(A));
  }
  m.validate();
  return m;
}

Representation injective(AlgebraPtr alg, int v) {
  return dualize(projective(alg->opposite(), v));
}

Representation regular_module(AlgebraPtr alg) {
  std::vector<Representation> parts;
  for (int v = 0; v < alg->n_vertices(); ++v) parts.push_back(projective(alg, v));
  return direct_sum(parts);
}

// --- morphisms ---------------------------------------------------------------

void ModuleMorphism::validate() const {
  if (dom.alg != cod.alg) throw error("morphism between different algebras");
  if (maps.size() != dom.dims.size()) throw error("morphism shape mismatch");
  for (size_t v = 0; v < maps.size(); ++v)
    if (maps[v].rows() != cod.dims[v] || maps[v].cols() != dom.dims[v])
      throw error("morphism map has the wrong shape");
  const Quiver& q = dom.alg->quiver();
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    int i = q.arrows[a].src, j = q.arrows[a].tgt;
    if (maps[j] * dom.arrow_maps[a] != cod.arrow_maps[a] * maps[i])
      throw error("morphism does not commute with the action");
  }
}

bool ModuleMorphism::is_zero() const {
  for (const auto& m : maps)
    if (!m.is_zero()) return false;
  return true;
}

ModuleMorphism identity_morphism(const Representation& m) {
  ModuleMorphism f;
  f.dom = m;
  f.cod = m;
  for (int d : m.dims) f.maps.push_back(Matrix::identity(d, m.field()));
  return f;
}

ModuleMorphism zero_morphism(const Representation& dom, const Representation& cod) {
  ModuleMorphism f;
  f.dom = dom;
  f.cod = cod;
  for (size_t v = 0; v < dom.dims.size(); ++v)
    f.maps.emplace_back(cod.dims[v], dom.dims[v], dom.field());
  return f;
}

ModuleMorphism compose(const ModuleMorphism& f, const ModuleMorphism& g) {
  if (f.dom != g.cod) throw error("composition shape mismatch");
  ModuleMorphism h;
  h.dom = g.dom;
  h.cod = f.cod;
  for (size_t v = 0; v < f.maps.size(); ++v) h.maps.push_back(f.maps[v] * g.maps[v]);
  return h;
}

ModuleMorphism add(const ModuleMorphism& f, const ModuleMorphism& g) {
  if (f.dom != g.dom || f.cod != g.cod) throw error("sum shape mismatch");
  ModuleMorphism h = f;
  for (size_t v = 0; v < h.maps.size(); ++v) h.maps[v] = h.maps[v] + g.maps[v];
  return h;
}

ModuleMorphism scale(const Scalar& c, const ModuleMorphism& f) {
  ModuleMorphism h = f;
  for (auto& m : h.maps) m = m.scaled(f.dom.field().reduce(c));
  return h;
}

namespace {

// Linear system whose kernel is Hom(dom, cod): unknowns are the entries of
// all per-vertex maps h_v (row-major, vertices in order), equations are the
// commuting squares h_j M_a = N_a h_i.
struct HomSystem {
  std::vector<int> uoff;
  int total = 0;
  Matrix squares;
};

HomSystem hom_system(const Representation& dom, const Representation& cod) {
  if (dom.alg != cod.alg) throw error("modules over different algebras");
  const Field& f = dom.field();
  const Quiver& q = dom.alg->quiver();
  HomSystem s;
  s.uoff.resize(q.n_vertices);
  for (int v = 0; v < q.n_vertices; ++v) {
    s.uoff[v] = s.total;
    s.total += cod.dims[v] * dom.dims[v];
  }
  int n_rows = 0;
  for (const auto& a : q.arrows) n_rows += cod.dims[a.tgt] * dom.dims[a.src];
  Matrix S(n_rows, s.total, f);
  int row = 0;
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    int i = q.arrows[a].src, j = q.arrows[a].tgt;
    const Matrix& Ma = dom.arrow_maps[a];
    const Matrix& Na = cod.arrow_maps[a];
    for (int r = 0; r < cod.dims[j]; ++r)
      for (int c = 0; c < dom.dims[i]; ++c) {
        for (int k = 0; k < dom.dims[j]; ++k) {
          Scalar& e = S.at(row, s.uoff[j] + r * dom.dims[j] + k);
          e = f.add(e, Ma.at(k, c));
        }
        for (int k = 0; k < cod.dims[i]; ++k) {
          Scalar& e = S.at(row, s.uoff[i] + k * dom.dims[i] + c);
          e = f.sub(e, Na.at(r, k));
        }
        ++row;
      }
  }
  s.squares = std::move(S);
  return s;
}

ModuleMorphism unpack_morphism(const Representation& dom, const Representation& cod,
                               const HomSystem& s, const Matrix& sol, int col) {
  ModuleMorphism h;
  h.dom = dom;
  h.cod = cod;
  for (size_t v = 0; v < dom.dims.size(); ++v) {
    Matrix hv(cod.dims[v], dom.dims[v], dom.field());
    for (int r = 0; r < cod.dims[v]; ++r)
      for (int c = 0; c < dom.dims[v]; ++c)
        hv.at(r, c) = sol.at(s.uoff[v] + r * dom.dims[v] + c, col);
    h.maps.push_back(std::move(hv));
  }
  return h;
}

// non-throwing check of the commuting squares
bool squares_commute(const ModuleMorphism& h) {
  const Quiver& q = h.dom.alg->quiver();
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    int i = q.arrows[a].src, j = q.arrows[a].tgt;
    if (mul(h.maps[j], h.dom.arrow_maps[a], Exec::Auto) !=
        mul(h.cod.arrow_maps[a], h.maps[i], Exec::Auto))
      return false;
  }
  return true;
}

}  // namespace

std::vector<ModuleMorphism> hom_basis(const Representation& m, const Representation& n) {
  HomSystem s = hom_system(m, n);
  Matrix K = kernel_basis(s.squares);
  std::vector<ModuleMorphism> out;
  for (int c = 0; c < K.cols(); ++c) {
    ModuleMorphism h = unpack_morphism(m, n, s, K, c);
    h.validate();
    out.push_back(std::move(h));
  }
  return out;
}

int hom_dim(const Representation& m, const Representation& n) {
  return kernel_basis(hom_system(m, n).squares).cols();
}

std::optional<ModuleMorphism> lift(const ModuleMorphism& q, const ModuleMorphism& f) {
  if (q.cod != f.cod) throw error("lift target mismatch");
  const Representation &A = f.dom, &B = q.dom, &C = q.cod;
  const Field& field = A.field();
  // vertexwise injective q pins the candidate down: solve each vertex
  // separately, then accept iff the squares commute
  bool inj = true;
  for (size_t v = 0; v < B.dims.size() && inj; ++v)
    inj = rank(q.maps[v]) == B.dims[v];
  if (inj) {
    ModuleMorphism h;
    h.dom = A;
    h.cod = B;
    for (size_t v = 0; v < A.dims.size(); ++v) {
      auto x = solve_linear(q.maps[v], f.maps[v]);
      if (!x) return std::nullopt;
      h.maps.push_back(std::move(*x));
    }
    if (!squares_commute(h)) return std::nullopt;
    return h;
  }
  HomSystem s = hom_system(A, B);
  int extra = 0;
  for (size_t v = 0; v < A.dims.size(); ++v) extra += C.dims[v] * A.dims[v];
  Matrix sys(s.squares.rows() + extra, s.total, field);
  Matrix rhs(sys.rows(), 1, field);
  for (int r = 0; r < s.squares.rows(); ++r)
    for (int c = 0; c < s.total; ++c) sys.at(r, c) = s.squares.at(r, c);
  int row = s.squares.rows();
  // q_v h_v = f_v
  for (size_t v = 0; v < A.dims.size(); ++v) {
    for (int r = 0; r < C.dims[v]; ++r)
      for (int c = 0; c < A.dims[v]; ++c) {
        for (int k = 0; k < B.dims[v]; ++k)
          sys.at(row, s.uoff[v] + k * A.dims[v] + c) = q.maps[v].at(r, k);
        rhs.at(row, 0) = f.maps[v].at(r, c);
        ++row;
      }
  }
  auto sol = solve_linear(sys, rhs);
  if (!sol) return std::nullopt;
  ModuleMorphism h = unpack_morphism(A, B, s, *sol, 0);
  h.validate();
  return h;
}

std::optional<ModuleMorphism> colift(const ModuleMorphism& q, const ModuleMorphism& f) {
  if (q.dom != f.dom) throw error("colift source mismatch");
  const Representation &C = q.dom, &A = q.cod, &B = f.cod;
  const Field& field = A.field();
  // dual fast path: vertexwise surjective q
  bool surj = true;
  for (size_t v = 0; v < A.dims.size() && surj; ++v)
    surj = rank(q.maps[v]) == A.dims[v];
  if (surj) {
    ModuleMorphism h;
    h.dom = A;
    h.cod = B;
    for (size_t v = 0; v < A.dims.size(); ++v) {
      auto x = solve_linear(q.maps[v].transpose(), f.maps[v].transpose());
      if (!x) return std::nullopt;
      h.maps.push_back(x->transpose());
    }
    if (!squares_commute(h)) return std::nullopt;
    return h;
  }
  HomSystem s = hom_system(A, B);
  int extra = 0;
  for (size_t v = 0; v < A.dims.size(); ++v) extra += B.dims[v] * C.dims[v];
  Matrix sys(s.squares.rows() + extra, s.total, field);
  Matrix rhs(sys.rows(), 1, field);
  for (int r = 0; r < s.squares.rows(); ++r)
    for (int c = 0; c < s.total; ++c) sys.at(r, c) = s.squares.at(r, c);
  int row = s.squares.rows();
  // h_v q_v = f_v
  for (size_t v = 0; v < A.dims.size(); ++v) {
    for (int r = 0; r < B.dims[v]; ++r)
      for (int c = 0; c < C.dims[v]; ++c) {
        for (int k = 0; k < A.dims[v]; ++k)
          sys.at(row, s.uoff[v] + r * A.dims[v] + k) = q.maps[v].at(k, c);
        rhs.at(row, 0) = f.maps[v].at(r, c);
        ++row;
      }
  }
  auto sol = solve_linear(sys, rhs);
  if (!sol) return std::nullopt;
  ModuleMorphism h = unpack_morphism(A, B, s, *sol, 0);
  h.validate();
  return h;
}

std::optional<ModuleMorphism> section_for(const ModuleMorphism& p) {
  return lift(p, identity_morphism(p.cod));
}

std::optional<ModuleMorphism> retraction_for(const ModuleMorphism& i) {
  return colift(i, identity_morphism(i.dom));
}

// --- sub/quotient ------------------------------------------------------------

namespace {

// Build S -> M from per-vertex bases already closed under the action and with
// independent columns.
ModuleMorphism sub_from_closed(const Representation& m, std::vector<Matrix> bases) {
  const Quiver& q = m.alg->quiver();
  Representation s;
  s.alg = m.alg;
  for (const auto& b : bases) s.dims.push_back(b.cols());
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    int i = q.arrows[a].src, j = q.arrows[a].tgt;
    auto t = solve_linear(bases[j], m.arrow_maps[a] * bases[i]);
    if (!t) throw internal_check_error("claimed submodule is not closed");
    s.arrow_maps.push_back(std::move(*t));
  }
  ModuleMorphism inc;
  inc.dom = std::move(s);
  inc.cod = m;
  inc.maps = std::move(bases);
  inc.dom.validate();
  inc.validate();
  return inc;
}

}  // namespace

ModuleMorphism sub_inclusion(const Representation& m, const std::vector<Matrix>& spans) {
  if (spans.size() != m.dims.size()) throw error("span list shape mismatch");
  std::vector<Matrix> bases;
  for (size_t v = 0; v < spans.size(); ++v) {
    if (spans[v].rows() != m.dims[v]) throw error("span rows mismatch");
    bases.push_back(column_space_basis(spans[v]));
  }
  const Quiver& q = m.alg->quiver();
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t a = 0; a < q.arrows.size(); ++a) {
      int i = q.arrows[a].src, j = q.arrows[a].tgt;
      Matrix img = m.arrow_maps[a] * bases[i];
      if (!columns_contained(img, bases[j])) {
        bases[j] = column_space_basis(Matrix::hstack(bases[j], img));
        changed = true;
      }
    }
  }
  return sub_from_closed(m, std::move(bases));
}

ModuleMorphism kernel_inclusion(const ModuleMorphism& f) {
  std::vector<Matrix> bases;
  for (const auto& mv : f.maps) bases.push_back(kernel_basis(mv));
  return sub_from_closed(f.dom, std::move(bases));
}

ModuleMorphism image_inclusion(const ModuleMorphism& f) {
  std::vector<Matrix> bases;
  for (const auto& mv : f.maps) bases.push_back(column_space_basis(mv));
  return sub_from_closed(f.cod, std::move(bases));
}

ModuleMorphism quotient_projection(const Representation& m, const ModuleMorphism& inc) {
  if (inc.cod != m) throw error("inclusion does not land in the module");
  const Field& f = m.field();
  const Quiver& q = m.alg->quiver();
  std::vector<Matrix> pi(m.dims.size(), Matrix(0, 0, f));
  std::vector<Matrix> sigma(m.dims.size(), Matrix(0, 0, f));
  for (size_t v = 0; v < m.dims.size(); ++v) {
    const Matrix& S = inc.maps[v];
    int d = m.dims[v], r = S.cols();
    // coordinates not needed to span S give a complement
    Rref rr = rref(S.transpose());
    std::vector<char> covered(d, 0);
    for (int p : rr.pivot_cols) covered[p] = 1;
    Matrix E(d, d - r, f);
    int c = 0;
    for (int k = 0; k < d; ++k)
      if (!covered[k]) E.at(k, c++) = f.one();
    if (c != d - r) throw internal_check_error("complement has the wrong size");
    auto inv = inverse(Matrix::hstack(S, E));
    if (!inv) throw internal_check_error("submodule basis is degenerate");
    std::vector<int> tail(d - r);
    for (int k = 0; k < d - r; ++k) tail[k] = r + k;
    pi[v] = inv->rows_subset(tail);
    sigma[v] = std::move(E);
  }
  Representation quo;
  quo.alg = m.alg;
  for (size_t v = 0; v < m.dims.size(); ++v) quo.dims.push_back(pi[v].rows());
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    int i = q.arrows[a].src, j = q.arrows[a].tgt;
    quo.arrow_maps.push_back(pi[j] * m.arrow_maps[a] * sigma[i]);
  }
  quo.validate();
  ModuleMorphism proj;
  proj.dom = m;
  proj.cod = std::move(quo);
  proj.maps = std::move(pi);
  proj.validate();
  return proj;
}

ModuleMorphism cokernel_projection(const ModuleMorphism& f) {
  return quotient_projection(f.cod, image_inclusion(f));
}

ModuleMorphism radical_inclusion(const Representation& m) {
  const Field& f = m.field();
  const Quiver& q = m.alg->quiver();
  std::vector<Matrix> spans;
  for (size_t v = 0; v < m.dims.size(); ++v) spans.emplace_back(m.dims[v], 0, f);
  for (size_t a = 0; a < q.arrows.size(); ++a)
    spans[q.arrows[a].tgt] = Matrix::hstack(spans[q.arrows[a].tgt], m.arrow_maps[a]);
  std::vector<Matrix> bases;
  for (auto& s : spans) bases.push_back(column_space_basis(s));
  return sub_from_closed(m, std::move(bases));
}

ModuleMorphism socle_inclusion(const Representation& m) {
  const Field& f = m.field();
  const Quiver& q = m.alg->quiver();
  std::vector<Matrix> stacked;
  for (size_t v = 0; v < m.dims.size(); ++v) stacked.emplace_back(0, m.dims[v], f);
  for (size_t a = 0; a < q.arrows.size(); ++a)
    stacked[q.arrows[a].src] = Matrix::vstack(stacked[q.arrows[a].src], m.arrow_maps[a]);
  std::vector<Matrix> bases;
  for (auto& s : stacked) bases.push_back(kernel_basis(s));
  return sub_from_closed(m, std::move(bases));
}

ModuleMorphism top_projection(const Representation& m) {
  return quotient_projection(m, radical_inclusion(m));
}

ModuleMorphism projective_cover(const Representation& m) {
  const Field& f = m.field();
  ModuleMorphism rad = radical_inclusion(m);
  // lift a basis of M/rad M to standard basis vectors of M
  std::vector<std::pair<int, int>> gens;  // (vertex, coordinate)
  for (size_t v = 0; v < m.dims.size(); ++v) {
    Matrix cur = rad.maps[v];
    for (int k = 0; k < m.dims[v]; ++k) {
      Matrix e(m.dims[v], 1, f);
      e.at(k, 0) = f.one();
      Matrix ext = Matrix::hstack(cur, e);
      if (rank(ext) > cur.cols()) {
        cur = std::move(ext);
        gens.emplace_back(static_cast<int>(v), k);
      }
    }
    if (cur.cols() != m.dims[v])
      throw internal_check_error("top lift does not span the fibre");
  }
  std::vector<Representation> parts;
  std::vector<std::vector<Matrix>> blocks;  // per generator, per vertex
  for (auto [v, k] : gens) {
    parts.push_back(projective(m.alg, v));
    auto lists = projective_basis_paths(m.alg, v);
    std::vector<Matrix> cols;
    for (size_t w = 0; w < m.dims.size(); ++w) {
      Matrix B(m.dims[w], static_cast<int>(lists[w].size()), f);
      for (size_t c = 0; c < lists[w].size(); ++c) {
        Matrix pa = path_action(m, m.alg->basis()[lists[w][c]]);
        for (int r = 0; r < m.dims[w]; ++r) B.at(r, static_cast<int>(c)) = pa.at(r, k);
      }
      cols.push_back(std::move(B));
    }
    blocks.push_back(std::move(cols));
  }
  ModuleMorphism cover;
  cover.dom = parts.empty() ? zero_rep(m.alg) : direct_sum(parts);
  cover.cod = m;
  for (size_t w = 0; w < m.dims.size(); ++w) {
    Matrix row(m.dims[w], 0, f);
    for (const auto& b : blocks) row = Matrix::hstack(row, b[w]);
    if (rank(row) != m.dims[w])
      throw internal_check_error("projective cover is not surjective");
    cover.maps.push_back(std::move(row));
  }
  cover.validate();
  return cover;
}

ModuleMorphism injective_envelope(const Representation& m) {
  ModuleMorphism c = projective_cover(dualize(m));
  ModuleMorphism e = dualize(c);
  if (e.dom != m) throw internal_check_error("double dual is not the identity");
  return e;
}

std::vector<int> cover_vertices(const Representation& m) {
  ModuleMorphism t = top_projection(m);
  std::vector<int> out;
  for (int v = 0; v < m.alg->n_vertices(); ++v)
    for (int k = 0; k < t.cod.dims[static_cast<size_t>(v)]; ++k) out.push_back(v);
  return out;
}

std::vector<ModuleMorphism> hom_basis_from_projective(const std::vector<int>& verts,
                                                      const Representation& n) {
  const AlgebraPtr& alg = n.alg;
  const Field& f = n.field();
  int n_v = alg->n_vertices();
  std::vector<Representation> parts;
  for (int v : verts) parts.push_back(projective(alg, v));
  Representation dom = parts.empty() ? zero_rep(alg) : direct_sum(parts);

  // lazily cache the action of each basis path on N
  std::vector<Matrix> pa(static_cast<size_t>(alg->dimension()), Matrix(0, 0, f));
  std::vector<char> have(static_cast<size_t>(alg->dimension()), 0);
  auto action = [&](int i) -> const Matrix& {
    if (!have[static_cast<size_t>(i)]) {
      pa[static_cast<size_t>(i)] = path_action(n, alg->basis()[static_cast<size_t>(i)]);
      have[static_cast<size_t>(i)] = 1;
    }
    return pa[static_cast<size_t>(i)];
  };
  // column offset of each summand inside the sum, per vertex
  std::vector<std::vector<int>> off(verts.size(), std::vector<int>(n_v, 0));
  std::vector<int> run(static_cast<size_t>(n_v), 0);
  for (size_t s = 0; s < verts.size(); ++s) {
    for (int u = 0; u < n_v; ++u) off[s][static_cast<size_t>(u)] = run[static_cast<size_t>(u)];
    for (int u = 0; u < n_v; ++u) run[static_cast<size_t>(u)] += parts[s].dims[static_cast<size_t>(u)];
  }

  // the morphism for (summand at v, k-th basis vector of N_v) sends the path
  // p to (k-th vector) . p
  std::vector<ModuleMorphism> out;
  for (size_t s = 0; s < verts.size(); ++s) {
    int v = verts[s];
    auto lists = projective_basis_paths(alg, v);
    for (int k = 0; k < n.dims[static_cast<size_t>(v)]; ++k) {
      ModuleMorphism h;
      h.dom = dom;
      h.cod = n;
      for (int u = 0; u < n_v; ++u) {
        Matrix B(n.dims[static_cast<size_t>(u)], dom.dims[static_cast<size_t>(u)], f);
        for (size_t c = 0; c < lists[static_cast<size_t>(u)].size(); ++c) {
          const Matrix& act = action(lists[static_cast<size_t>(u)][c]);
          for (int r = 0; r < n.dims[static_cast<size_t>(u)]; ++r)
            B.at(r, off[s][static_cast<size_t>(u)] + static_cast<int>(c)) = act.at(r, k);
        }
        h.maps.push_back(std::move(B));
      }
      out.push_back(std::move(h));
    }
  }
  return out;
}

bool is_projective_rep(const Representation& m) {
  return projective_cover(m).dom.total_dim() == m.total_dim();
}

bool is_injective_rep(const Representation& m) {
  return injective_envelope(m).cod.total_dim() == m.total_dim();
}

// --- direct sums -------------------------------------------------------------

Representation direct_sum(const std::vector<Representation>& parts) {
  if (parts.empty()) throw error("direct sum needs at least one part");
  const Field& f = parts.front().field();
  for (const auto& p : parts)
    if (p.alg != parts.front().alg) throw error("summands over different algebras");
  Representation m;
  m.alg = parts.front().alg;
  m.dims.assign(parts.front().dims.size(), 0);
  for (const auto& p : parts)
    for (size_t v = 0; v < m.dims.size(); ++v) m.dims[v] += p.dims[v];
  const Quiver& q = m.alg->quiver();
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    int i = q.arrows[a].src, j = q.arrows[a].tgt;
    Matrix A(m.dims[j], m.dims[i], f);
    int ro = 0, co = 0;
    for (const auto& p : parts) {
      for (int r = 0; r < p.dims[j]; ++r)
        for (int c = 0; c < p.dims[i]; ++c)
          A.at(ro + r, co + c) = p.arrow_maps[a].at(r, c);
      ro += p.dims[j];
      co += p.dims[i];
    }
    m.arrow_maps.push_back(std::move(A));
  }
  return m;
}

ModuleMorphism summand_inclusion(const std::vector<Representation>& parts, int k) {
  Representation sum = direct_sum(parts);
  const Field& f = sum.field();
  ModuleMorphism inc;
  inc.dom = parts[k];
  inc.cod = sum;
  for (size_t v = 0; v < sum.dims.size(); ++v) {
    Matrix M(sum.dims[v], parts[k].dims[v], f);
    int off = 0;
    for (int p = 0; p < k; ++p) off += parts[p].dims[v];
    for (int r = 0; r < parts[k].dims[v]; ++r) M.at(off + r, r) = f.one();
    inc.maps.push_back(std::move(M));
  }
  return inc;
}

ModuleMorphism summand_projection(const std::vector<Representation>& parts, int k) {
  Representation sum = direct_sum(parts);
  const Field& f = sum.field();
  ModuleMorphism pr;
  pr.dom = sum;
  pr.cod = parts[k];
  for (size_t v = 0; v < sum.dims.size(); ++v) {
    Matrix M(parts[k].dims[v], sum.dims[v], f);
    int off = 0;
    for (int p = 0; p < k; ++p) off += parts[p].dims[v];
    for (int r = 0; r < parts[k].dims[v]; ++r) M.at(r, off + r) = f.one();
    pr.maps.push_back(std::move(M));
  }
  return pr;
}

// --- duality -----------------------------------------------------------------

Representation dualize(const Representation& m) {
  Representation d;
  d.alg = m.alg->opposite();
  d.dims = m.dims;
  for (const auto& a : m.arrow_maps) d.arrow_maps.push_back(a.transpose());
  return d;
}

ModuleMorphism dualize(const ModuleMorphism& f) {
  ModuleMorphism d;
  d.dom = dualize(f.cod);
  d.cod = dualize(f.dom);
  for (const auto& m : f.maps) d.maps.push_back(m.transpose());
  return d;
}

// --- indecomposability -------------------------------------------------------

namespace {

// Polynomials over the field, coefficients low to high, no trailing zeros.
using Poly = std::vector<Scalar>;

Poly ptrim(Poly p) {
  while (!p.empty() && Field::is_zero(p.back())) p.pop_back();
  return p;
}

Poly pmul(const Poly& a, const Poly& b, const Field& f) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, f.zero());
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = f.add(c[i + j], f.mul(a[i], b[j]));
  return c;
}

std::pair<Poly, Poly> pdivmod(Poly a, const Poly& b, const Field& f) {
  if (b.empty()) throw error("polynomial division by zero");
  Poly q(a.size() > b.size() - 1 ? a.size() - b.size() + 1 : 0, f.zero());
  Scalar lead_inv = f.inv(b.back());
  for (int i = static_cast<int>(a.size()) - 1;
       i >= static_cast<int>(b.size()) - 1; --i) {
    if (Field::is_zero(a[i])) continue;
    Scalar c = f.mul(a[i], lead_inv);
    q[i - (b.size() - 1)] = c;
    for (size_t j = 0; j < b.size(); ++j)
      a[i - (b.size() - 1) + j] = f.sub(a[i - (b.size() - 1) + j], f.mul(c, b[j]));
  }
  return {ptrim(std::move(q)), ptrim(std::move(a))};
}

Poly pmonic(Poly p, const Field& f) {
  if (p.empty()) return p;
  Scalar inv = f.inv(p.back());
  for (auto& c : p) c = f.mul(c, inv);
  return p;
}

Poly pgcd(Poly a, Poly b, const Field& f) {
  a = ptrim(std::move(a));
  b = ptrim(std::move(b));
  while (!b.empty()) {
    Poly r = pdivmod(a, b, f).second;
    a = std::move(b);
    b = std::move(r);
  }
  return pmonic(std::move(a), f);
}

Poly plcm(const Poly& a, const Poly& b, const Field& f) {
  if (a.empty() || b.empty()) return {};
  Poly g = pgcd(a, b, f);
  return pmonic(pmul(pdivmod(a, g, f).first, b, f), f);
}

Scalar peval(const Poly& p, const Scalar& x, const Field& f) {
  Scalar r = f.zero();
  for (auto it = p.rbegin(); it != p.rend(); ++it) r = f.add(f.mul(r, x), *it);
  return r;
}

// p(F) v by Horner, without forming p(F)
Matrix papply(const Poly& p, const Matrix& F, const Matrix& v, const Field& f) {
  Matrix r(v.rows(), v.cols(), f);
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    r = F * r;
    if (!Field::is_zero(*it)) r = r + v.scaled(*it);
  }
  return r;
}

// minimal polynomial of v under F via one Krylov matrix and one solve
Poly minpoly_vec(const Matrix& F, const Matrix& v, const Field& f) {
  int n = F.rows();
  Matrix K(n, 0, f);
  Matrix w = v;
  for (int k = 0; k <= n; ++k) {
    auto x = solve_linear(K, w);
    if (x) {
      Poly p(k + 1, f.zero());
      for (int i = 0; i < k; ++i) p[i] = f.neg(x->at(i, 0));
      p[k] = f.one();
      return p;
    }
    K = Matrix::hstack(K, w);
    w = F * w;
  }
  throw internal_check_error("Krylov chain never became dependent");
}

Poly minpoly(const Matrix& F, const Field& f) {
  int n = F.rows();
  Poly m{f.one()};
  for (int i = 0; i < n; ++i) {
    Matrix e(n, 1, f);
    e.at(i, 0) = f.one();
    if (papply(m, F, e, f).is_zero()) continue;
    m = plcm(m, minpoly_vec(F, e, f), f);
  }
  return m;
}

std::vector<Scalar> root_candidates(const Poly& m, const Field& f) {
  std::vector<Scalar> out;
  auto push = [&](const Scalar& c) {
    Scalar r = f.reduce(c);
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
  };
  for (long k = 0; k <= 16; ++k) {
    push(f.from_long(k));
    push(f.from_long(-k));
  }
  if (f.is_rational()) {
    // rational roots p/q of the integer-cleared polynomial: p | a_0, q | a_n
    mpz_class den_lcm = 1;
    for (const auto& c : m) den_lcm = lcm(den_lcm, c.get_den());
    std::vector<mpz_class> ints;
    for (const auto& c : m) ints.push_back(c.get_num() * (den_lcm / c.get_den()));
    mpz_class a0 = 0;
    for (const auto& z : ints)
      if (z != 0) {
        a0 = abs(z);
        break;
      }
    mpz_class an = abs(ints.back());
    auto divisors = [](const mpz_class& n) {
      std::vector<mpz_class> ds;
      if (n == 0) return ds;
      for (mpz_class i = 1; i * i <= n && i < 1000000; ++i)
        if (n % i == 0) {
          ds.push_back(i);
          ds.push_back(n / i);
        }
      return ds;
    };
    auto ps = divisors(a0), qs = divisors(an);
    for (const auto& p : ps)
      for (const auto& q : qs) {
        if (out.size() > 4096) return out;
        Scalar c(p, q);
        c.canonicalize();
        push(c);
        push(-c);
      }
  } else if (f.characteristic() <= (1 << 20)) {
    // full residue scan; duplicates of the small candidates above only cost
    // one extra evaluation each
    long p = static_cast<long>(f.characteristic());
    for (long r = 0; r < p; ++r) out.push_back(f.from_long(r));
  }
  return out;
}

// m = (t - c)^mult * rest with rest(c) != 0 and deg rest >= 1, if such a
// rational root exists
std::optional<std::pair<Poly, Poly>> coprime_split(const Poly& m, const Field& f) {
  for (const Scalar& c : root_candidates(m, f)) {
    if (!Field::is_zero(peval(m, c, f))) continue;
    Poly lin{f.neg(c), f.one()};
    Poly u{f.one()};
    Poly rest = m;
    while (!rest.empty() && Field::is_zero(peval(rest, c, f))) {
      rest = pdivmod(rest, lin, f).first;
      u = pmul(u, lin, f);
    }
    if (rest.size() >= 2) return std::make_pair(u, rest);
  }
  return std::nullopt;
}

Matrix total_endo_matrix(const Representation& m, const std::vector<Matrix>& maps) {
  const Field& f = m.field();
  int n = m.total_dim();
  Matrix F(n, n, f);
  int off = 0;
  for (size_t v = 0; v < m.dims.size(); ++v) {
    for (int r = 0; r < m.dims[v]; ++r)
      for (int c = 0; c < m.dims[v]; ++c) F.at(off + r, off + c) = maps[v].at(r, c);
    off += m.dims[v];
  }
  return F;
}

// rank of the Gram matrix of the action trace form tr_M(fg) on End(M);
// equals 1 iff End(M) is local with residue field k, valid in characteristic
// 0 or p > dim M
int end_gram_rank(const Representation& m, const std::vector<ModuleMorphism>& ends) {
  const Field& f = m.field();
  if (!f.is_rational() &&
      f.characteristic() <= static_cast<unsigned long>(m.total_dim()))
    throw error("indecomposability test needs characteristic 0 or p > dim");
  int k = static_cast<int>(ends.size());
  Matrix G(k, k, f);
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) {
      Scalar t = f.zero();
      for (size_t v = 0; v < m.dims.size(); ++v) {
        const Matrix &A = ends[i].maps[v], &B = ends[j].maps[v];
        for (int r = 0; r < A.rows(); ++r)
          for (int c = 0; c < A.cols(); ++c) t = f.add(t, f.mul(A.at(r, c), B.at(c, r)));
      }
      G.at(i, j) = t;
      G.at(j, i) = t;
    }
  return rank(G);
}

std::optional<std::pair<Representation, Representation>> try_split(
    const Representation& m, const std::vector<ModuleMorphism>& ends) {
  const Field& f = m.field();
  int k = static_cast<int>(ends.size());
  std::vector<std::vector<Scalar>> cands;
  for (int i = 0; i < k; ++i) {
    std::vector<Scalar> c(k, f.zero());
    c[i] = f.one();
    cands.push_back(std::move(c));
  }
  for (int i = 0; i < std::min(k, 8); ++i)
    for (int j = i + 1; j < std::min(k, 8); ++j)
      for (long s : {1L, -1L, 2L}) {
        std::vector<Scalar> c(k, f.zero());
        c[i] = f.one();
        c[j] = f.from_long(s);
        cands.push_back(std::move(c));
      }
  std::mt19937_64 rng(0x5eedc0de);
  std::uniform_int_distribution<long> coeff(-8, 8);
  for (int round = 0; round < 40; ++round) {
    std::vector<Scalar> c(k);
    for (int i = 0; i < k; ++i) c[i] = f.from_long(coeff(rng));
    cands.push_back(std::move(c));
  }

  for (const auto& coeffs : cands) {
    std::vector<Matrix> maps;
    for (size_t v = 0; v < m.dims.size(); ++v) {
      Matrix acc(m.dims[v], m.dims[v], f);
      for (int i = 0; i < k; ++i)
        if (!Field::is_zero(coeffs[i])) acc = acc + ends[i].maps[v].scaled(coeffs[i]);
      maps.push_back(std::move(acc));
    }
    Matrix F = total_endo_matrix(m, maps);
    Poly mp = minpoly(F, f);
    auto split = coprime_split(mp, f);
    if (!split) continue;
    auto part = [&](const Poly& u) {
      std::vector<Matrix> bases;
      for (size_t v = 0; v < m.dims.size(); ++v) {
        Matrix Uv(m.dims[v], m.dims[v], f);
        // u(f_v) via Horner
        for (auto it = u.rbegin(); it != u.rend(); ++it) {
          Uv = Uv * maps[v];
          if (!Field::is_zero(*it))
            Uv = Uv + Matrix::identity(m.dims[v], f).scaled(*it);
        }
        bases.push_back(kernel_basis(Uv));
      }
      return sub_from_closed(m, std::move(bases)).dom;
    };
    Representation a = part(split->first), b = part(split->second);
    if (a.total_dim() == 0 || b.total_dim() == 0 ||
        a.total_dim() + b.total_dim() != m.total_dim())
      throw internal_check_error("coprime kernels do not decompose the module");
    return std::make_pair(std::move(a), std::move(b));
  }
  return std::nullopt;
}

}  // namespace

bool is_indecomposable(const Representation& m) {
  if (is_zero(m)) return false;
  return end_gram_rank(m, hom_basis(m, m)) == 1;
}

std::vector<Representation> decompose(const Representation& m) {
  std::vector<Representation> out;
  if (is_zero(m)) return out;
  std::vector<Representation> work{m};
  while (!work.empty()) {
    Representation x = std::move(work.back());
    work.pop_back();
    auto ends = hom_basis(x, x);
    if (end_gram_rank(x, ends) == 1) {
      out.push_back(std::move(x));
      continue;
    }
    auto split = try_split(x, ends);
    if (!split) throw error("decomposition failed");
    work.push_back(std::move(split->first));
    work.push_back(std::move(split->second));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Representation& a, const Representation& b) {
                     if (a.total_dim() != b.total_dim())
                       return a.total_dim() < b.total_dim();
                     return a.dims < b.dims;
                   });
  return out;
}

bool is_isomorphic(const Representation& m, const Representation& n,
                   std::uint64_t seed) {
  if (m.alg != n.alg) throw error("modules over different algebras");
  if (m.dims != n.dims) return false;
  if (m.total_dim() == 0) return true;
  const Field& f = m.field();
  auto homs = hom_basis(m, n);
  int k = static_cast<int>(homs.size());
  if (k == 0) return false;

  auto invertible = [&](const std::vector<Scalar>& coeffs) {
    for (size_t v = 0; v < m.dims.size(); ++v) {
      if (m.dims[v] == 0) continue;
      Matrix acc(n.dims[v], m.dims[v], f);
      for (int i = 0; i < k; ++i)
        if (!Field::is_zero(coeffs[i])) acc = acc + homs[i].maps[v].scaled(coeffs[i]);
      if (Field::is_zero(det(acc))) return false;
    }
    return true;
  };

  if (k <= 4) {
    // exhaustive over small coefficients
    std::vector<long> vals{0, 1, -1, 2, -2};
    std::vector<int> idx(k, 0);
    while (true) {
      std::vector<Scalar> coeffs(k);
      bool all_zero = true;
      for (int i = 0; i < k; ++i) {
        coeffs[i] = f.from_long(vals[idx[i]]);
        all_zero = all_zero && idx[i] == 0;
      }
      if (!all_zero && invertible(coeffs)) return true;
      int p = 0;
      while (p < k && ++idx[p] == static_cast<int>(vals.size())) idx[p++] = 0;
      if (p == k) break;
    }
  } else {
    for (int i = 0; i < k; ++i) {
      std::vector<Scalar> coeffs(k, f.zero());
      coeffs[i] = f.one();
      if (invertible(coeffs)) return true;
    }
  }
  std::mt19937_64 rng(seed ^ 0x517cc1b727220a95ULL);
  long box = f.is_rational() ? 2L * m.total_dim() + 4
                             : f.characteristic() - 1;
  std::uniform_int_distribution<long> coeff(f.is_rational() ? -box : 0, box);
  for (int round = 0; round < 60; ++round) {
    std::vector<Scalar> coeffs(k);
    for (int i = 0; i < k; ++i) coeffs[i] = f.from_long(coeff(rng));
    if (invertible(coeffs)) return true;
  }
  return false;
}

}  // namespace qhom
