// Acceptance gate for the whole repository, run over the checked-in corpus.
// Prints one PASS/FAIL line per criterion and exits nonzero if any fails.
//
//  1. the construction: endomorphism algebras of the five small bases have
//     global dimension <= 2 and dominant dimension >= 2, each under 30s
//  2. the first theorem, both directions
//  3. the canonical cotilting module and its two exactness properties
//  4. tilting counts over the linear quivers, and the failure witness on the
//     first non-hereditary case
//  5. the subcategory identities Cogen T = {pd <= 1}, Gen T = {id <= 1}
//  6. torsionless / co-torsionless counts agree on the finite corpus
//  7. indecomposable counts against closed formulas and a string-walk oracle
//  8. cross-route sentinels: two global dimension routes, two test routes,
//     three splitting routes, and dual Ext computations on random pairs
//  9. byte-identical reports, full corpus inside the time budget
#include <qhom/algfile.hpp>
#include <qhom/artheory.hpp>
#include <qhom/auslander.hpp>
#include <qhom/commands.hpp>
#include <qhom/homology.hpp>
#include <qhom/tilting.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace qhom;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::vector<std::string> kBases = {"a1", "a2", "a3", "n2", "n3"};
const std::vector<std::string> kFinite = {"a1",      "a2",      "a3",      "a4",     "n2",
                                          "n3",      "ausl_a2", "ausl_a3", "ausl_n2", "ausl_n3"};

// lazily parsed algebras and certified contexts, shared between criteria
struct Corpus {
  std::string dir;
  std::map<std::string, AlgebraFile> files;
  std::map<std::string, AlgebraPtr> algs;
  std::map<std::string, IndContext> ctxs;

  std::string path(const std::string& name) { return dir + "/" + name + ".alg"; }
  const AlgebraFile& file(const std::string& name) {
    auto it = files.find(name);
    if (it == files.end())
      it = files.emplace(name, parse_algebra_file(slurp(path(name)))).first;
    return it->second;
  }
  AlgebraPtr alg(const std::string& name) {
    auto it = algs.find(name);
    if (it == algs.end()) it = algs.emplace(name, algebra_from_file(file(name))).first;
    return it->second;
  }
  IndContext& ctx(const std::string& name) {
    auto it = ctxs.find(name);
    if (it == ctxs.end()) it = ctxs.emplace(name, build_ind_context(alg(name))).first;
    return it->second;
  }
};

Representation sum_of(const IndContext& ctx, const std::vector<int>& ids) {
  std::vector<Representation> parts;
  for (int i : ids) parts.push_back(ctx.module(i));
  return direct_sum(parts);
}

// ---------------------------------------------------------------- criterion 1

bool criterion1(Corpus& c, std::string& note) {
  for (const std::string& base : kBases) {
    auto t0 = Clock::now();
    AuslanderContext ac = build_auslander(c.alg(base));
    Capped gl = global_dimension(ac.alg);
    Capped dd = dominant_dimension(ac.alg);
    double dt = seconds_since(t0);
    if (!(gl.finite && gl.value <= 2)) {
      note = "gl.dim of the endomorphism algebra over " + base + " is not <= 2";
      return false;
    }
    // a resolution that stayed projective throughout settles domdim >= 2
    if (dd.finite && dd.value < 2) {
      note = "domdim of the endomorphism algebra over " + base + " is < 2";
      return false;
    }
    if (dt >= 30.0) {
      note = "construction over " + base + " took " + std::to_string(dt) + "s";
      return false;
    }
    if (!ac.ctx) {
      note = "context over " + base + " not certified";
      return false;
    }
    c.algs["ausl_" + base] = ac.alg;
    c.ctxs.emplace("ausl_" + base, *ac.ctx);
  }
  note = "five constructions, gl.dim <= 2 and domdim >= 2 each";
  return true;
}

// ---------------------------------------------------------------- criterion 2

bool criterion2(Corpus& c, std::string& note) {
  // forward: the characterization holds on every constructed algebra
  for (const std::string& base : kBases) {
    const IndContext& ctx = c.ctx("ausl_" + base);
    auto r = verify_claims(ctx, {"T1"});
    if (r[0].verdict != "pass") {
      note = "T1 fails over the endomorphism algebra of " + base;
      return false;
    }
    if (!is_auslander(c.alg("ausl_" + base), &ctx)) {
      note = "construction over " + base + " not recognized";
      return false;
    }
  }
  // backward: on algebras failing the test, the claimed equivalence still
  // holds -- the candidate torsion pair must fail too
  for (const std::string& base : {std::string("a2"), std::string("n3")}) {
    const IndContext& ctx = c.ctx(base);
    if (is_auslander(c.alg(base), &ctx)) {
      note = base + " wrongly recognized";
      return false;
    }
    auto r = verify_claims(ctx, {"T1"});
    if (r[0].verdict != "pass") {
      note = "T1 equivalence fails over " + base;
      return false;
    }
  }
  note = "equivalence verified forward on five algebras, backward on a2 and n3";
  return true;
}

// ---------------------------------------------------------------- criterion 3

bool criterion3(Corpus& c, std::string& note) {
  for (const std::string& base : kBases) {
    const IndContext& ctx = c.ctx("ausl_" + base);
    auto r = verify_claims(ctx, {"T3"});
    if (r[0].verdict != "pass") {
      note = "T3 fails over the endomorphism algebra of " + base;
      return false;
    }
    // re-verify the witnesses independently of the claim machinery
    CanonicalTilting ct = canonical_tilting(ctx);
    if (!ct.exists || !ct.flags.cotilting) {
      note = "canonical module over " + base + " is not cotilting";
      return false;
    }
    Representation t = sum_of(ctx, ct.ids);
    if (!has_hereditary_property(t, ctx).holds) {
      note = "hereditary property fails over " + base;
      return false;
    }
    if (!has_cohereditary_property(t, ctx).holds) {
      note = "cohereditary property fails over " + base;
      return false;
    }
  }
  note = "canonical cotilting module with both exactness properties, five algebras";
  return true;
}

// ---------------------------------------------------------------- criterion 4

bool criterion4(Corpus& c, std::string& note) {
  const std::map<std::string, size_t> expected = {{"a1", 1}, {"a2", 2}, {"a3", 5}, {"a4", 14}};
  for (const auto& [base, count] : expected) {
    const IndContext& ctx = c.ctx(base);
    auto sets = enumerate_tilting(ctx);
    if (sets.size() != count) {
      note = base + " has " + std::to_string(sets.size()) + " tilting modules, expected " +
             std::to_string(count);
      return false;
    }
    for (const auto& ids : sets)
      if (!has_hereditary_property(sum_of(ctx, ids), ctx).holds) {
        note = "a tilting module over " + base + " lacks the hereditary property";
        return false;
      }
  }
  // the first non-hereditary case: the regular module is tilting but the
  // property fails, witnessed by a module of projective dimension exactly 2
  const IndContext& ctx = c.ctx("ausl_n2");
  Representation lam = regular_module(c.alg("ausl_n2"));
  if (!classify_tilting(lam).tilting) {
    note = "the regular module over ausl_n2 is not tilting";
    return false;
  }
  HereditaryReport rep = has_hereditary_property(lam, ctx);
  if (rep.holds || rep.failures.empty()) {
    note = "expected a hereditary-property failure over ausl_n2";
    return false;
  }
  for (int f : rep.failures)
    if (!(ctx.pd[static_cast<size_t>(f)] == Capped::exactly(2))) {
      note = "a failure witness over ausl_n2 does not have pd 2";
      return false;
    }
  note = "counts 1/2/5/14 over the linear quivers, pd-2 failure witness over ausl_n2";
  return true;
}

// ---------------------------------------------------------------- criterion 5

bool criterion5(Corpus& c, std::string& note) {
  for (const std::string& base : kBases) {
    const IndContext& ctx = c.ctx("ausl_" + base);
    auto r = verify_claims(ctx, {"MINE-PROP"});
    if (r[0].verdict != "pass") {
      note = "subcategory identities fail over " + base;
      return false;
    }
  }
  // independent recomputation on one instance
  const IndContext& ctx = c.ctx("ausl_n2");
  Representation t = sum_of(ctx, canonical_tilting(ctx).ids);
  for (int i = 0; i < ctx.size(); ++i) {
    bool in_cogen = cogen_membership(t, ctx.module(i)).member;
    bool small_pd = ctx.pd[static_cast<size_t>(i)].finite && ctx.pd[static_cast<size_t>(i)].value <= 1;
    bool in_gen = gen_membership(t, ctx.module(i)).member;
    bool small_id = ctx.id[static_cast<size_t>(i)].finite && ctx.id[static_cast<size_t>(i)].value <= 1;
    if (in_cogen != small_pd || in_gen != small_id) {
      note = "direct membership check fails at module " + std::to_string(i);
      return false;
    }
  }
  note = "Cogen T = {pd <= 1} and Gen T = {id <= 1} on five algebras";
  return true;
}

// ---------------------------------------------------------------- criterion 6

bool criterion6(Corpus& c, std::string& note) {
  for (const std::string& name : kFinite) {
    const IndContext& ctx = c.ctx(name);
    auto r = verify_claims(ctx, {"TORSION-COUNT"});
    if (r[0].verdict != "pass") {
      note = "count claim fails over " + name;
      return false;
    }
    // recount directly
    Representation lam = regular_module(c.alg(name));
    Representation dlam = dualize(lam);
    int torsionless = 0, cotorsionless = 0;
    for (int i = 0; i < ctx.size(); ++i) {
      if (cogen_membership(lam, ctx.module(i)).member) ++torsionless;
      if (gen_membership(dlam, dualize(ctx.module(i))).member) ++cotorsionless;
    }
    if (torsionless != cotorsionless) {
      note = "counts differ over " + name;
      return false;
    }
  }
  note = "torsionless = co-torsionless on all ten finite corpus algebras";
  return true;
}

// ---------------------------------------------------------------- criterion 7

// independent count of the string modules of a monomial quadratic
// presentation: reduced walks over the arrows and their formal inverses,
// avoiding relation subwords in either reading, up to inversion
int string_module_count(const AlgebraFile& f) {
  std::set<std::pair<int, int>> rel;  // (first arrow, second arrow), traversal order
  for (const Relation& r : f.relations) {
    if (r.terms.size() != 1 || r.terms[0].second.size() != 2)
      throw error("string oracle needs monomial quadratic relations");
    rel.insert({r.terms[0].second[0], r.terms[0].second[1]});
  }
  int na = static_cast<int>(f.quiver.arrows.size());
  auto src = [&](int l) {  // letters: 2a = arrow a forward, 2a+1 = inverse
    const Arrow& a = f.quiver.arrows[static_cast<size_t>(l / 2)];
    return l % 2 == 0 ? a.src : a.tgt;
  };
  auto tgt = [&](int l) {
    const Arrow& a = f.quiver.arrows[static_cast<size_t>(l / 2)];
    return l % 2 == 0 ? a.tgt : a.src;
  };
  auto ok_pair = [&](int x, int y) {
    if (tgt(x) != src(y)) return false;
    if (x / 2 == y / 2 && x % 2 != y % 2) return false;  // immediate backtrack
    if (x % 2 == 0 && y % 2 == 0 && rel.count({x / 2, y / 2})) return false;
    if (x % 2 == 1 && y % 2 == 1 && rel.count({y / 2, x / 2})) return false;
    return true;
  };
  std::set<std::vector<int>> seen;  // canonical form: min(walk, inverted walk)
  auto canon = [&](const std::vector<int>& w) {
    std::vector<int> inv;
    for (auto it = w.rbegin(); it != w.rend(); ++it) inv.push_back(*it ^ 1);
    return std::min(w, inv);
  };
  std::vector<std::vector<int>> frontier;
  for (int l = 0; l < 2 * na; ++l) frontier.push_back({l});
  for (int len = 1; !frontier.empty(); ++len) {
    if (len > 64) throw error("string oracle walk budget exceeded");
    std::vector<std::vector<int>> next;
    for (const auto& w : frontier) {
      seen.insert(canon(w));
      for (int l = 0; l < 2 * na; ++l)
        if (ok_pair(w.back(), l)) {
          auto e = w;
          e.push_back(l);
          next.push_back(std::move(e));
        }
    }
    frontier = std::move(next);
  }
  return f.quiver.n_vertices + static_cast<int>(seen.size());
}

bool criterion7(Corpus& c, std::string& note) {
  const std::map<std::string, int> expected = {{"a1", 1}, {"a2", 3}, {"a3", 6},
                                               {"a4", 10}, {"n2", 2}, {"n3", 3}};
  for (const auto& [name, count] : expected) {
    int n = name[0] == 'a' ? name[1] - '0' : 0;
    if (n > 0 && count != n * (n + 1) / 2) {
      note = "closed formula mismatch in the expectation table";
      return false;
    }
    if (c.ctx(name).size() != count) {
      note = name + " has " + std::to_string(c.ctx(name).size()) + " indecomposables, expected " +
             std::to_string(count);
      return false;
    }
  }
  int walks = string_module_count(c.file("ausl_n2"));
  if (walks != 5 || c.ctx("ausl_n2").size() != walks) {
    note = "string oracle gives " + std::to_string(walks) + ", context has " +
           std::to_string(c.ctx("ausl_n2").size());
    return false;
  }
  IndecompList kron = enumerate_indecomposables(c.alg("kronecker"));
  if (kron.certified || !kron.cap_exceeded) {
    note = "enumeration over the Kronecker algebra must report the cap";
    return false;
  }
  note = "counts match n(n+1)/2, the string oracle (5), and the Kronecker cap";
  return true;
}

// ---------------------------------------------------------------- criterion 8

bool criterion8(Corpus& c, std::string& note) {
  // (a) global dimension: max pd over simples vs 1 + max pd over radicals
  for (const std::string& name :
       {std::string("a1"), std::string("a2"), std::string("a3"), std::string("a4"),
        std::string("ausl_a2"), std::string("ausl_a3"), std::string("ausl_n2"),
        std::string("ausl_n3"), std::string("kronecker")}) {
    AlgebraPtr alg = c.alg(name);
    Capped lib = global_dimension(alg);
    int via_simples = 0, via_radicals = -1;
    for (int v = 0; v < alg->n_vertices(); ++v) {
      Capped ps = proj_dim(simple(alg, v));
      if (!ps.finite) {
        note = "unexpected infinite pd over " + name;
        return false;
      }
      via_simples = std::max(via_simples, ps.value);
      Representation rad = radical_inclusion(projective(alg, v)).dom;
      int total = 0;
      for (int d : rad.dims) total += d;
      if (total == 0) continue;
      Capped pr = proj_dim(rad);
      via_radicals = std::max(via_radicals, pr.value);
    }
    int rad_route = via_radicals < 0 ? 0 : 1 + via_radicals;
    if (!(lib.finite && lib.value == via_simples && lib.value == rad_route)) {
      note = "global dimension routes disagree over " + name;
      return false;
    }
  }
  // (b) the recognition test vs the plain dimension test
  for (const std::string& name : kFinite) {
    AlgebraPtr alg = c.alg(name);
    Capped gl = global_dimension(alg), dd = dominant_dimension(alg);
    bool via_dims = gl.finite && gl.value <= 2 && (!dd.finite || dd.value >= 2);
    if (is_auslander(alg, &c.ctx(name)) != via_dims) {
      note = "recognition routes disagree over " + name;
      return false;
    }
  }
  // (c) splitting decided three ways on every induced torsion pair
  int pairs = 0;
  for (const std::string& name :
       {std::string("a2"), std::string("a3"), std::string("n2"), std::string("n3"),
        std::string("ausl_a2"), std::string("ausl_n2")}) {
    const IndContext& ctx = c.ctx(name);
    std::vector<std::pair<PairSource, std::vector<int>>> sources;
    for (const auto& ids : enumerate_tilting(ctx)) sources.push_back({PairSource::tilting, ids});
    for (const auto& ids : enumerate_cotilting(ctx))
      sources.push_back({PairSource::cotilting, ids});
    for (const auto& [kind, ids] : sources) {
      TorsionPair tp = torsion_pair_from(kind, sum_of(ctx, ids), ctx);
      if (!tp.valid) {
        note = "an induced pair over " + name + " failed verification: " + tp.failure;
        return false;
      }
      bool lib = is_splitting_pair(tp, ctx);
      bool cover = static_cast<int>(tp.torsion_ids.size() + tp.free_ids.size()) == ctx.size();
      bool ext = true;
      for (int y : tp.free_ids)
        for (int x : tp.torsion_ids)
          if (ctx.ext1[static_cast<size_t>(y)][static_cast<size_t>(x)] != 0) ext = false;
      if (lib != cover || lib != ext) {
        note = "splitting routes disagree over " + name;
        return false;
      }
      ++pairs;
    }
  }
  if (pairs < 20) {
    note = "too few torsion pairs exercised: " + std::to_string(pairs);
    return false;
  }
  // (d) Ext^1 through projective syzygies vs through the dual route
  std::mt19937_64 rng(20260819);
  std::vector<const IndContext*> pool;
  for (const std::string& name : kFinite) pool.push_back(&c.ctx(name));
  for (int trial = 0; trial < 200; ++trial) {
    const IndContext& ctx = *pool[rng() % pool.size()];
    int i = static_cast<int>(rng() % static_cast<std::uint64_t>(ctx.size()));
    int j = static_cast<int>(rng() % static_cast<std::uint64_t>(ctx.size()));
    int direct = ctx.ext1[static_cast<size_t>(i)][static_cast<size_t>(j)];
    int dual = ext_dim(dualize(ctx.module(j)), dualize(ctx.module(i)), 1);
    if (direct != dual) {
      note = "Ext routes disagree at trial " + std::to_string(trial);
      return false;
    }
  }
  note = "dimension, recognition, splitting, and 200 dual-Ext sentinels agree";
  return true;
}

// ---------------------------------------------------------------- criterion 9

bool criterion9(Corpus& c, std::string& note) {
  std::string all;
  for (const std::string& id : known_claims()) all += (all.empty() ? "" : ",") + id;

  std::string j1 = "acceptance_r1.json", j2 = "acceptance_r2.json";
  std::ostringstream sink;
  for (const std::string& j : {j1, j2}) {
    std::ostringstream out, err;
    if (run_command({"verify", c.path("ausl_n3"), "--claims", all, "--json", j}, out, err) != 0) {
      note = "verify over ausl_n3 did not exit 0";
      return false;
    }
  }
  bool same = slurp(j1) == slurp(j2);
  std::remove(j1.c_str());
  std::remove(j2.c_str());
  if (!same) {
    note = "two identical runs produced different reports";
    return false;
  }

  auto t0 = Clock::now();
  std::vector<std::string> names = kFinite;
  names.push_back("kronecker");
  for (const std::string& name : names) {
    std::ostringstream out, err;
    int code = run_command({"verify", c.path(name), "--claims", all}, out, err);
    if (code != 0) {
      note = "verify over " + name + " exited " + std::to_string(code);
      return false;
    }
  }
  double dt = seconds_since(t0);
  if (dt >= 600.0) {
    note = "full corpus took " + std::to_string(dt) + "s";
    return false;
  }
  std::ostringstream n;
  n << "byte-identical reports; full corpus in " << static_cast<int>(dt) << "s";
  note = n.str();
  return true;
}

}  // namespace

int main() {
  Corpus corpus{CORPUS_DIR, {}, {}, {}};
  using Criterion = bool (*)(Corpus&, std::string&);
  const std::vector<Criterion> criteria = {criterion1, criterion2, criterion3,
                                           criterion4, criterion5, criterion6,
                                           criterion7, criterion8, criterion9};
  int passed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    std::string note;
    bool ok = false;
    try {
      ok = criteria[i](corpus, note);
    } catch (const std::exception& e) {
      note = std::string("exception: ") + e.what();
    }
    std::cout << "criterion " << i + 1 << ": " << (ok ? "PASS" : "FAIL") << " -- " << note << "\n";
    if (ok) ++passed;
  }
  std::cout << passed << "/" << criteria.size() << " criteria passed\n";
  return passed == static_cast<int>(criteria.size()) ? 0 : 1;
}
