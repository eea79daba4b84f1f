#include <qhom/algebra.hpp>
#include <qhom/errors.hpp>

#include <algorithm>
#include <map>
#include <sstream>

namespace qhom {

bool Quiver::connected() const {
  if (n_vertices <= 1) return true;
  std::vector<std::vector<int>> adj(n_vertices);
  for (const auto& a : arrows) {
    adj[a.src].push_back(a.tgt);
    adj[a.tgt].push_back(a.src);
  }
  std::vector<char> seen(n_vertices, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == n_vertices;
}

Relation normalize_relation(const Quiver& q, const Field& f, Relation r) {
  std::map<std::vector<int>, Scalar> acc;
  int src = -1, tgt = -1, len = -1;
  for (auto& [coeff, arrows] : r.terms) {
    if (arrows.size() < 2)
      throw error("relation terms must be paths of length at least 2");
    int s = -1, t = -1;
    for (size_t k = 0; k < arrows.size(); ++k) {
      int a = arrows[k];
      if (a < 0 || a >= static_cast<int>(q.arrows.size()))
        throw error("relation references an unknown arrow");
      if (k == 0)
        s = q.arrows[a].src;
      else if (q.arrows[a].src != t)
        throw error("relation term is not a composable path");
      t = q.arrows[a].tgt;
    }
    if (src < 0) {
      src = s;
      tgt = t;
      len = static_cast<int>(arrows.size());
    } else {
      if (s != src || t != tgt)
        throw error("relation terms must be parallel paths");
      if (static_cast<int>(arrows.size()) != len)
        throw error(
            "degreewise construction requires length-homogeneous relations");
    }
    Scalar c = f.reduce(coeff);
    auto it = acc.find(arrows);
    if (it == acc.end())
      acc.emplace(arrows, c);
    else
      it->second = f.add(it->second, c);
  }
  Relation out;
  for (auto& [path, c] : acc)
    if (!Field::is_zero(c)) out.terms.emplace_back(c, path);
  return out;
}

namespace {

// Scaffolding for one path length during the degreewise construction.
struct DegData {
  std::vector<Path> paths;  // surviving (basis) paths at this length
  // candidates: (basis index at previous length, arrow), in that order
  std::vector<std::pair<int, int>> cand;
  std::map<std::pair<int, int>, int> cand_index;
  // candidate -> sparse coordinates over this length's basis
  std::vector<std::vector<std::pair<int, Scalar>>> reduce;
};

}  // namespace

std::shared_ptr<Algebra> Algebra::build_impl(Quiver q, std::vector<Relation> rels,
                                             Field f, int cap) {
  if (q.n_vertices < 1) throw error("quiver needs at least one vertex");
  if (cap < 2) throw error("path length cap must be at least 2");
  for (const auto& a : q.arrows)
    if (a.src < 0 || a.src >= q.n_vertices || a.tgt < 0 || a.tgt >= q.n_vertices)
      throw error("arrow endpoint out of range");

  std::vector<Relation> relations;
  for (auto& r : rels) {
    Relation n = normalize_relation(q, f, std::move(r));
    if (!n.terms.empty()) relations.push_back(std::move(n));
  }

  std::vector<DegData> degs;
  // Length 0: trivial paths (never inside an admissible ideal).
  {
    DegData d0;
    for (int v = 0; v < q.n_vertices; ++v) d0.paths.push_back(Path{v, v, {}});
    degs.push_back(std::move(d0));
  }
  // Length 1: arrows (admissible ideals contain no linear part).
  if (!q.arrows.empty()) {
    DegData d1;
    for (int a = 0; a < static_cast<int>(q.arrows.size()); ++a) {
      d1.cand.emplace_back(q.arrows[a].src, a);
      d1.cand_index[{q.arrows[a].src, a}] = a;
      d1.paths.push_back(Path{q.arrows[a].src, q.arrows[a].tgt, {a}});
      d1.reduce.push_back({{a, f.one()}});
    }
    degs.push_back(std::move(d1));
  }

  // Multiply a dense coordinate vector over the basis at `deg` by one arrow,
  // landing in the basis at deg+1 (empty when the algebra has died there).
  auto step = [&](int deg, const std::vector<Scalar>& coords, int arrow) {
    if (deg + 1 >= static_cast<int>(degs.size()))
      return std::vector<Scalar>();  // everything of that length is zero
    const DegData& up = degs[deg + 1];
    std::vector<Scalar> out(up.paths.size(), f.zero());
    const DegData& here = degs[deg];
    for (size_t b = 0; b < coords.size(); ++b) {
      if (Field::is_zero(coords[b])) continue;
      if (here.paths[b].tgt != q.arrows[arrow].src) continue;
      auto it = up.cand_index.find({static_cast<int>(b), arrow});
      if (it == up.cand_index.end())
        throw internal_check_error("missing path candidate in degree table");
      for (const auto& [lb, rc] : up.reduce[it->second])
        out[lb] = f.add(out[lb], f.mul(coords[b], rc));
    }
    return out;
  };

  // Degreewise quotient: candidates of length d are (basis of length d-1) x
  // arrows; the subspace to kill is spanned by u * r for every relation r and
  // every surviving path u with u.tgt = r.src (right extensions of dead
  // elements die automatically through the reduction maps).
  for (int d = 2; static_cast<int>(degs.size()) == d && d <= cap; ++d) {
    const DegData& prev = degs[d - 1];
    if (prev.paths.empty()) break;
    DegData cur;
    for (int b = 0; b < static_cast<int>(prev.paths.size()); ++b)
      for (int a = 0; a < static_cast<int>(q.arrows.size()); ++a)
        if (prev.paths[b].tgt == q.arrows[a].src) {
          cur.cand_index[{b, a}] = static_cast<int>(cur.cand.size());
          cur.cand.emplace_back(b, a);
        }
    if (cur.cand.empty()) break;  // no composable paths of this length

    std::vector<std::vector<Scalar>> gens;
    for (const auto& rel : relations) {
      int len = static_cast<int>(rel.terms.front().second.size());
      if (len > d) continue;
      const auto& lower = degs[d - len];
      for (int u = 0; u < static_cast<int>(lower.paths.size()); ++u) {
        int rel_src = q.arrows[rel.terms.front().second.front()].src;
        if (lower.paths[u].tgt != rel_src) continue;
        std::vector<Scalar> gen(cur.cand.size(), f.zero());
        bool nonzero = false;
        for (const auto& [coeff, arrows] : rel.terms) {
          std::vector<Scalar> coords(lower.paths.size(), f.zero());
          coords[u] = f.one();
          int deg = d - len;
          for (size_t k = 0; k + 1 < arrows.size(); ++k) {
            coords = step(deg, coords, arrows[k]);
            ++deg;
            if (coords.empty()) break;
          }
          if (coords.empty()) continue;
          int last = arrows.back();
          for (size_t b = 0; b < coords.size(); ++b) {
            if (Field::is_zero(coords[b])) continue;
            if (degs[d - 1].paths[b].tgt != q.arrows[last].src)
              throw internal_check_error("relation term lost composability");
            int w = cur.cand_index.at({static_cast<int>(b), last});
            gen[w] = f.add(gen[w], f.mul(coeff, coords[b]));
            nonzero = nonzero || !Field::is_zero(gen[w]);
          }
        }
        if (nonzero) gens.push_back(std::move(gen));
      }
    }

    std::vector<char> is_pivot(cur.cand.size(), 0);
    Matrix R(0, 0, f);
    std::vector<int> pivots;
    if (!gens.empty()) {
      Matrix G(static_cast<int>(gens.size()), static_cast<int>(cur.cand.size()), f);
      for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = 0; j < gens[i].size(); ++j)
          G.at(static_cast<int>(i), static_cast<int>(j)) = gens[i][j];
      Rref rr = rref(G);
      R = rr.reduced;
      pivots = rr.pivot_cols;
      for (int p : pivots) is_pivot[p] = 1;
    }
    std::vector<int> basis_pos(cur.cand.size(), -1);
    for (size_t w = 0; w < cur.cand.size(); ++w) {
      if (is_pivot[w]) continue;
      basis_pos[w] = static_cast<int>(cur.paths.size());
      Path p = prev.paths[cur.cand[w].first];
      p.arrows.push_back(cur.cand[w].second);
      p.tgt = q.arrows[cur.cand[w].second].tgt;
      cur.paths.push_back(std::move(p));
    }
    cur.reduce.assign(cur.cand.size(), {});
    for (size_t w = 0; w < cur.cand.size(); ++w) {
      if (!is_pivot[w]) {
        cur.reduce[w] = {{basis_pos[w], f.one()}};
        continue;
      }
      int row = static_cast<int>(std::find(pivots.begin(), pivots.end(),
                                           static_cast<int>(w)) -
                                 pivots.begin());
      for (size_t j = 0; j < cur.cand.size(); ++j) {
        if (is_pivot[j]) continue;
        const Scalar& c = R.at(row, static_cast<int>(j));
        if (!Field::is_zero(c)) cur.reduce[w].emplace_back(basis_pos[j], f.neg(c));
      }
    }
    bool empty = cur.paths.empty();
    if (!empty && d == cap)
      throw cap_error("not admissible within cap");
    if (!empty) degs.push_back(std::move(cur));
  }

  auto alg = std::shared_ptr<Algebra>(new Algebra());
  alg->field_ = f;
  alg->relations_ = std::move(relations);
  std::vector<std::pair<int, int>> locate;  // basis index -> (deg, local)
  for (int d = 0; d < static_cast<int>(degs.size()); ++d)
    for (int b = 0; b < static_cast<int>(degs[d].paths.size()); ++b) {
      alg->basis_.push_back(degs[d].paths[b]);
      locate.emplace_back(d, b);
    }

  int D = static_cast<int>(alg->basis_.size());
  alg->table_.assign(static_cast<size_t>(D) * D, {});
  for (int i = 0; i < D; ++i)
    for (int j = 0; j < D; ++j) {
      std::vector<Scalar> out(D, f.zero());
      const Path& p = alg->basis_[i];
      const Path& r = alg->basis_[j];
      if (p.tgt == r.src) {
        auto [dp, lp] = locate[i];
        std::vector<Scalar> coords(degs[dp].paths.size(), f.zero());
        coords[lp] = f.one();
        int deg = dp;
        for (int a : r.arrows) {
          coords = step(deg, coords, a);
          ++deg;
          if (coords.empty()) break;
        }
        if (!coords.empty()) {
          // global offset of this degree block
          int off = 0;
          for (int dd = 0; dd < deg; ++dd)
            off += static_cast<int>(degs[dd].paths.size());
          for (size_t b = 0; b < coords.size(); ++b)
            out[off + static_cast<int>(b)] = coords[b];
        }
      }
      alg->table_[static_cast<size_t>(i) * D + j] = std::move(out);
    }

  alg->quiver_ = std::move(q);  // `step` reads q, so move it in only now
  alg->finalize();
  return alg;
}

AlgebraPtr Algebra::build(Quiver q, std::vector<Relation> relations, Field f,
                          int path_length_cap) {
  return build_impl(std::move(q), std::move(relations), f, path_length_cap);
}

void Algebra::finalize() {
  int D = dimension();
  by_source_.assign(quiver_.n_vertices, {});
  by_target_.assign(quiver_.n_vertices, {});
  for (int i = 0; i < D; ++i) {
    by_source_[basis_[i].src].push_back(i);
    by_target_[basis_[i].tgt].push_back(i);
  }
  // Identity: e = sum of trivial paths acts as 1 on both sides.
  for (int j = 0; j < D; ++j) {
    std::vector<Scalar> left(D, field_.zero()), right(D, field_.zero());
    for (int v = 0; v < quiver_.n_vertices; ++v) {
      const auto& lv = table(trivial_index(v), j);
      const auto& rv = table(j, trivial_index(v));
      for (int k = 0; k < D; ++k) {
        left[k] = field_.add(left[k], lv[k]);
        right[k] = field_.add(right[k], rv[k]);
      }
    }
    for (int k = 0; k < D; ++k) {
      Scalar want = (k == j) ? field_.one() : field_.zero();
      if (left[k] != want || right[k] != want)
        throw internal_check_error("multiplication table has no identity");
    }
  }
  // Associativity over all basis triples.
  for (int i = 0; i < D; ++i)
    for (int j = 0; j < D; ++j) {
      const auto& ij = table(i, j);
      bool ij_zero = true;
      for (const auto& c : ij)
        if (!Field::is_zero(c)) {
          ij_zero = false;
          break;
        }
      for (int k = 0; k < D; ++k) {
        std::vector<Scalar> lhs(D, field_.zero());
        if (!ij_zero)
          for (int g = 0; g < D; ++g) {
            if (Field::is_zero(ij[g])) continue;
            const auto& gk = table(g, k);
            for (int t = 0; t < D; ++t)
              lhs[t] = field_.add(lhs[t], field_.mul(ij[g], gk[t]));
          }
        const auto& jk = table(j, k);
        std::vector<Scalar> rhs(D, field_.zero());
        for (int g = 0; g < D; ++g) {
          if (Field::is_zero(jk[g])) continue;
          const auto& ig = table(i, g);
          for (int t = 0; t < D; ++t)
            rhs[t] = field_.add(rhs[t], field_.mul(jk[g], ig[t]));
        }
        if (lhs != rhs) throw internal_check_error("multiplication not associative");
      }
    }
}

std::vector<Scalar> Algebra::multiply(const std::vector<Scalar>& x,
                                      const std::vector<Scalar>& y) const {
  int D = dimension();
  if (static_cast<int>(x.size()) != D || static_cast<int>(y.size()) != D)
    throw std::invalid_argument("element coordinate length mismatch");
  std::vector<Scalar> out(D, field_.zero());
  for (int i = 0; i < D; ++i) {
    if (Field::is_zero(x[i])) continue;
    for (int j = 0; j < D; ++j) {
      if (Field::is_zero(y[j])) continue;
      Scalar c = field_.mul(x[i], y[j]);
      const auto& t = table(i, j);
      for (int k = 0; k < D; ++k)
        if (!Field::is_zero(t[k])) out[k] = field_.add(out[k], field_.mul(c, t[k]));
    }
  }
  return out;
}

AlgebraPtr Algebra::opposite() const {
  std::lock_guard<std::mutex> lock(op_mutex_);
  if (opposite_strong_) return opposite_strong_;
  if (auto back = opposite_weak_.lock()) return back;

  auto op = std::shared_ptr<Algebra>(new Algebra());
  op->field_ = field_;
  op->quiver_.n_vertices = quiver_.n_vertices;
  for (const auto& a : quiver_.arrows)
    op->quiver_.arrows.push_back(Arrow{a.name, a.tgt, a.src});
  for (const auto& r : relations_) {
    Relation rr;
    for (const auto& [c, arrows] : r.terms) {
      std::vector<int> rev(arrows.rbegin(), arrows.rend());
      rr.terms.emplace_back(c, std::move(rev));
    }
    op->relations_.push_back(std::move(rr));
  }
  for (const auto& p : basis_) {
    Path q;
    q.src = p.tgt;
    q.tgt = p.src;
    q.arrows.assign(p.arrows.rbegin(), p.arrows.rend());
    op->basis_.push_back(std::move(q));
  }
  int D = dimension();
  op->table_.resize(static_cast<size_t>(D) * D);
  for (int i = 0; i < D; ++i)
    for (int j = 0; j < D; ++j)
      op->table_[static_cast<size_t>(i) * D + j] = table_[static_cast<size_t>(j) * D + i];
  op->finalize();

  opposite_strong_ = op;
  op->opposite_weak_ = weak_from_this();
  return opposite_strong_;
}

std::string Algebra::path_to_string(const Path& p) const {
  if (p.trivial()) return "e_" + std::to_string(p.src + 1);
  std::string s;
  for (size_t k = 0; k < p.arrows.size(); ++k) {
    if (k) s += "*";
    s += quiver_.arrows[p.arrows[k]].name;
  }
  return s;
}

std::string Algebra::relation_to_string(const Relation& r) const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [c, arrows] : r.terms) {
    if (!first) os << " + ";
    first = false;
    if (c != Scalar(1)) os << c.get_str() << "*";
    for (size_t k = 0; k < arrows.size(); ++k)
      os << (k ? "*" : "") << quiver_.arrows[arrows[k]].name;
  }
  return os.str();
}

}  // namespace qhom
