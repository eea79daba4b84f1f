#include <qhom/algfile.hpp>
#include <qhom/auslander.hpp>
#include <qhom/commands.hpp>
#include <qhom/errors.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace qhom {

namespace {

constexpr const char* kToolVersion = "0.1.0";

using ordered = nlohmann::ordered_json;

ordered capped_json(const Capped& c) {
  return c.finite ? ordered(c.value) : ordered("at_least_cap");
}

std::string capped_text(const Capped& c) {
  return (c.finite ? "" : "at least ") + std::to_string(c.value);
}

ordered dims_json(const Representation& m) {
  ordered a = ordered::array();
  for (int d : m.dims) a.push_back(d);
  return a;
}

std::string dims_text(const Representation& m) {
  std::string s;
  for (size_t v = 0; v < m.dims.size(); ++v)
    s += (v ? "," : "") + std::to_string(m.dims[v]);
  return s;
}

Field parse_field_spec(const std::string& spec) {
  if (spec == "rational") return Field::rationals();
  if (spec.rfind("gf", 0) == 0) {
    std::string num = spec.substr(2);
    if (!num.empty() && (num[0] == ':' || num[0] == ' ')) num = num.substr(1);
    try {
      return Field::gf(std::stoul(num));
    } catch (const std::exception&) {
      throw error("bad field spec '" + spec + "'");
    }
  }
  throw error("bad field spec '" + spec + "' (use rational or gf<p>)");
}

struct Invocation {
  std::string file;
  std::string field_spec;
  int cap_resolution = kDefaultResolutionCap;
  int cap_count = 512;
  int cap_size = 64;
  std::uint64_t seed = 0;
  std::string json_path;
  bool require_certified = false;
  bool enumerate = false;
  bool check_property = false;
  std::string claims_csv;
};

struct Loaded {
  std::string text;
  AlgebraFile file;
  AlgebraPtr alg;
  std::vector<std::pair<std::string, Representation>> modules;
};

Loaded load(const Invocation& inv) {
  std::ifstream in(inv.file, std::ios::binary);
  if (!in) throw error("cannot open '" + inv.file + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  Loaded l;
  l.text = buf.str();
  l.file = parse_algebra_file(l.text);
  if (!inv.field_spec.empty()) l.file.field = parse_field_spec(inv.field_spec);
  l.alg = algebra_from_file(l.file);
  l.modules = modules_from_file(l.file, l.alg);
  return l;
}

void write_report(const Invocation& inv, const std::string& command,
                  const Loaded& l, const ordered& results) {
  if (inv.json_path.empty()) return;
  ordered report;
  report["tool_version"] = kToolVersion;
  report["input_digest"] = input_digest(l.text);
  report["results"] = results;
  ordered flags;
  flags["command"] = command;
  flags["field"] = l.file.field.name();
  flags["cap_resolution"] = inv.cap_resolution;
  flags["cap_count"] = inv.cap_count;
  flags["cap_size"] = inv.cap_size;
  flags["seed"] = inv.seed;
  flags["require_certified"] = inv.require_certified;
  report["flags"] = flags;
  std::ofstream out(inv.json_path, std::ios::binary);
  if (!out) throw error("cannot write '" + inv.json_path + "'");
  out << report.dump(2) << "\n";
}

int cmd_analyze(const Invocation& inv, std::ostream& out) {
  Loaded l = load(inv);
  EnumCaps caps{inv.cap_count, inv.cap_size};
  Capped gl = global_dimension(l.alg, inv.cap_resolution);
  Capped dd = dominant_dimension(l.alg, inv.cap_resolution);
  IndecompList list = enumerate_indecomposables(l.alg, caps);

  ordered results;
  results["field"] = l.file.field.name();
  results["vertices"] = l.alg->n_vertices();
  results["dimension"] = l.alg->dimension();
  results["global_dimension"] = capped_json(gl);
  results["dominant_dimension"] = capped_json(dd);
  results["indecomposable_count"] =
      list.certified ? ordered(static_cast<int>(list.modules.size()))
                     : ordered("exceeds_cap");
  results["certified"] = list.certified;
  if (list.certified) {
    ordered inds = ordered::array();
    for (const Representation& m : list.modules) inds.push_back(dims_json(m));
    results["indecomposables"] = inds;
  }
  ordered mods = ordered::array();
  for (const auto& [name, m] : l.modules) {
    ordered entry;
    entry["name"] = name;
    entry["dims"] = dims_json(m);
    entry["projective_dimension"] = capped_json(proj_dim(m, inv.cap_resolution));
    entry["injective_dimension"] = capped_json(inj_dim(m, inv.cap_resolution));
    mods.push_back(entry);
  }
  results["modules"] = mods;

  out << "field " << l.file.field.name() << ", vertices " << l.alg->n_vertices()
      << ", dimension " << l.alg->dimension() << "\n";
  out << "global dimension " << capped_text(gl) << "\n";
  out << "dominant dimension " << capped_text(dd) << "\n";
  if (list.certified)
    out << "indecomposables " << list.modules.size() << " (complete)\n";
  else
    out << "indecomposables exceeds_cap\n";
  for (const auto& [name, m] : l.modules)
    out << "module " << name << ": dims " << dims_text(m) << ", pd "
        << capped_text(proj_dim(m, inv.cap_resolution)) << ", id "
        << capped_text(inj_dim(m, inv.cap_resolution)) << "\n";

  write_report(inv, "analyze", l, results);
  if (inv.require_certified && !list.certified)
    throw cap_error("indecomposable enumeration not certified within caps");
  return 0;
}

int cmd_auslander(const Invocation& inv, std::ostream& out) {
  Loaded l = load(inv);
  EnumCaps caps{inv.cap_count, inv.cap_size};
  AuslanderContext ac = build_auslander(l.alg, caps, inv.cap_resolution);
  Capped gl = global_dimension(ac.alg, inv.cap_resolution);
  Capped dd = dominant_dimension(ac.alg, inv.cap_resolution);
  bool ausl = is_auslander(ac.alg, ac.ctx ? &*ac.ctx : nullptr, inv.cap_resolution);

  ordered results;
  results["base_dimension"] = ac.base->dimension();
  results["base_indecomposables"] = ac.base_ctx.size();
  results["dimension"] = ac.alg->dimension();
  results["vertices"] = ac.alg->n_vertices();
  ordered vdims = ordered::array();
  for (const Representation& m : ac.base_ctx.list.modules) vdims.push_back(dims_json(m));
  results["vertex_modules"] = vdims;
  results["presentation"] = render_algebra_file(ac.alg);
  results["global_dimension"] = capped_json(gl);
  results["dominant_dimension"] = capped_json(dd);
  results["is_auslander"] = ausl;
  results["certified"] = ac.ctx.has_value();

  out << "base dimension " << ac.base->dimension() << ", indecomposables "
      << ac.base_ctx.size() << "\n";
  out << "endomorphism algebra: dimension " << ac.alg->dimension() << ", vertices "
      << ac.alg->n_vertices() << "\n";
  out << render_algebra_file(ac.alg);
  out << "global dimension " << capped_text(gl) << "\n";
  out << "dominant dimension " << capped_text(dd) << "\n";
  out << "auslander " << (ausl ? "yes" : "no") << "\n";

  write_report(inv, "auslander", l, results);
  if (inv.require_certified && !ac.ctx)
    throw cap_error("indecomposable enumeration not certified within caps");
  return 0;
}

int cmd_tilting(const Invocation& inv, std::ostream& out) {
  Loaded l = load(inv);
  EnumCaps caps{inv.cap_count, inv.cap_size};
  bool need_ctx = inv.enumerate || inv.check_property;
  IndContext ctx;
  bool certified = false;
  if (need_ctx) {
    ctx = build_ind_context(l.alg, caps, inv.cap_resolution);
    certified = ctx.list.certified;
    if (inv.require_certified && !certified)
      throw cap_error("indecomposable enumeration not certified within caps");
  }

  ordered results;
  ordered mods = ordered::array();
  std::vector<std::pair<std::string, Representation>> named;
  named.push_back({"Lambda", regular_module(l.alg)});
  for (const auto& nm : l.modules) named.push_back(nm);
  for (const auto& [name, m] : named) {
    TiltingFlags tf = classify_tilting(m, inv.cap_resolution);
    ordered entry;
    entry["name"] = name;
    entry["dims"] = dims_json(m);
    entry["partial_tilting"] = tf.partial_tilting;
    entry["tilting"] = tf.tilting;
    entry["partial_cotilting"] = tf.partial_cotilting;
    entry["cotilting"] = tf.cotilting;
    out << "module " << name << ": dims " << dims_text(m)
        << (tf.tilting ? ", tilting" : ", not tilting")
        << (tf.cotilting ? ", cotilting" : ", not cotilting") << "\n";
    if (inv.check_property && tf.tilting) {
      if (!certified) {
        entry["hereditary_property"] = "exceeds_cap";
        out << "  hereditary property: exceeds_cap\n";
      } else {
        HereditaryReport hr = has_hereditary_property(m, ctx);
        entry["hereditary_property"] = hr.holds;
        ordered fails = ordered::array();
        for (int i : hr.failures) fails.push_back(dims_json(ctx.module(i)));
        entry["failures"] = fails;
        out << "  hereditary property: " << (hr.holds ? "holds" : "fails") << "\n";
        for (int i : hr.failures)
          out << "  fails at dims " << dims_text(ctx.module(i)) << "\n";
      }
    }
    mods.push_back(entry);
  }
  results["modules"] = mods;

  if (inv.enumerate) {
    if (!certified) {
      results["enumerated"] = "exceeds_cap";
      out << "enumeration: exceeds_cap\n";
    } else {
      std::vector<std::vector<int>> tilts = enumerate_tilting(ctx);
      ordered arr = ordered::array();
      for (const std::vector<int>& t : tilts) {
        ordered entry;
        ordered ids = ordered::array();
        ordered dims = ordered::array();
        std::vector<Representation> parts;
        for (int i : t) {
          ids.push_back(i);
          dims.push_back(dims_json(ctx.module(i)));
          parts.push_back(ctx.module(i));
        }
        entry["summands"] = ids;
        entry["dims"] = dims;
        if (inv.check_property) {
          HereditaryReport hr = has_hereditary_property(direct_sum(parts), ctx);
          entry["hereditary_property"] = hr.holds;
          ordered fails = ordered::array();
          for (int i : hr.failures) fails.push_back(dims_json(ctx.module(i)));
          entry["failures"] = fails;
        }
        arr.push_back(entry);
      }
      results["enumerated"] = arr;
      results["count"] = static_cast<int>(tilts.size());
      out << "tilting modules: " << tilts.size() << "\n";
      for (const ordered& e : arr) {
        out << " ";
        for (const ordered& d : e["dims"]) {
          out << " [";
          for (size_t k = 0; k < d.size(); ++k)
            out << (k ? "," : "") << d[k].get<int>();
          out << "]";
        }
        if (inv.check_property)
          out << (e["hereditary_property"].get<bool>() ? "  property holds"
                                                       : "  property fails");
        out << "\n";
      }
    }
  }

  write_report(inv, "tilting", l, results);
  return 0;
}

int cmd_verify(const Invocation& inv, std::ostream& out) {
  Loaded l = load(inv);
  std::vector<std::string> claims;
  std::istringstream cs(inv.claims_csv);
  std::string c;
  while (std::getline(cs, c, ','))
    if (!c.empty()) claims.push_back(c);
  if (claims.empty()) throw error("no claims given");

  EnumCaps caps{inv.cap_count, inv.cap_size};
  IndContext ctx = build_ind_context(l.alg, caps, inv.cap_resolution);
  if (inv.require_certified && !ctx.list.certified)
    throw cap_error("indecomposable enumeration not certified within caps");
  std::vector<ClaimReport> reports = verify_claims(ctx, claims);

  ordered results;
  results["certified"] = ctx.list.certified;
  ordered arr = ordered::array();
  bool failed = false;
  for (const ClaimReport& r : reports) {
    ordered entry;
    entry["id"] = r.id;
    entry["verdict"] = r.verdict;
    ordered w = ordered::array();
    for (const std::string& s : r.witnesses) w.push_back(s);
    entry["witnesses"] = w;
    arr.push_back(entry);
    failed = failed || r.verdict == "fail";
    out << r.id << ": " << r.verdict << "\n";
    for (const std::string& s : r.witnesses) out << "  " << s << "\n";
  }
  results["claims"] = arr;

  write_report(inv, "verify", l, results);
  return failed ? 1 : 0;
}

}  // namespace

int run_command(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"bound quiver algebras: homological invariants and tilting theory"};
  app.require_subcommand(1);
  Invocation inv;
  app.add_option("--field", inv.field_spec, "override the file's field (rational, gf<p>)");
  app.add_option("--cap-resolution", inv.cap_resolution, "resolution length cap");
  app.add_option("--cap-count", inv.cap_count, "indecomposable count cap");
  app.add_option("--cap-size", inv.cap_size, "module size cap");
  app.add_option("--seed", inv.seed, "seed echoed into reports");
  app.add_option("--json", inv.json_path, "write the structured report here");
  app.add_flag("--require-certified", inv.require_certified,
               "exit 3 when enumeration is not certified");

  CLI::App* analyze = app.add_subcommand("analyze", "dimensions and enumeration");
  analyze->add_option("file", inv.file)->required();
  analyze->fallthrough();
  CLI::App* ausl = app.add_subcommand("auslander", "endomorphism algebra of the additive generator");
  ausl->add_option("file", inv.file)->required();
  ausl->fallthrough();
  CLI::App* tilt = app.add_subcommand("tilting", "tilting classification");
  tilt->add_option("file", inv.file)->required();
  tilt->add_flag("--enumerate", inv.enumerate, "list all tilting modules");
  tilt->add_flag("--check-hereditary-property", inv.check_property,
                 "test kernels of minimal approximations over Gen T");
  tilt->fallthrough();
  CLI::App* verify = app.add_subcommand("verify", "run claim checks");
  verify->add_option("file", inv.file)->required();
  verify->add_option("--claims", inv.claims_csv, "comma-separated claim ids")->required();
  verify->fallthrough();

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(inv, out);
    if (ausl->parsed()) return cmd_auslander(inv, out);
    if (tilt->parsed()) return cmd_tilting(inv, out);
    return cmd_verify(inv, out);
  } catch (const cap_error& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const internal_check_error& e) {
    err << "internal check failed: " << e.what() << "\n";
    return 2;
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace qhom
