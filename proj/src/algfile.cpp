#include <qhom/algfile.hpp>
#include <qhom/errors.hpp>

#include <cctype>
#include <cstdint>
#include <map>
#include <sstream>

namespace qhom {

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

bool looks_numeric(const std::string& s) {
  return !s.empty() && (std::isdigit(static_cast<unsigned char>(s[0])) ||
                        s[0] == '-' || s[0] == '+');
}

Scalar parse_scalar(const std::string& s, int line) {
  try {
    Scalar x(s);
    x.canonicalize();
    return x;
  } catch (const std::invalid_argument&) {
    throw parse_error("bad number '" + s + "'", line);
  }
}

Scalar reduce_at(const Field& f, const Scalar& x, int line) {
  try {
    return f.reduce(x);
  } catch (const error& e) {
    throw parse_error(e.what(), line);
  }
}

int parse_int(const std::string& s, int line) {
  size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw parse_error("expected an integer, got '" + s + "'", line);
  }
  if (used != s.size())
    throw parse_error("expected an integer, got '" + s + "'", line);
  return v;
}

// "[[1,2],[0,1]]" -> rows of scalars; "[]" is an empty matrix
std::vector<std::vector<Scalar>> parse_rows(const std::string& text, int line) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw parse_error("matrix must be bracketed like [[1,2],[3,4]]", line);
  std::string body = s.substr(1, s.size() - 2);
  std::vector<std::vector<Scalar>> rows;
  size_t i = 0;
  while (i < body.size()) {
    if (body[i] == ',') {
      ++i;
      continue;
    }
    if (body[i] != '[') throw parse_error("expected '[' starting a matrix row", line);
    size_t close = body.find(']', i);
    if (close == std::string::npos)
      throw parse_error("unterminated matrix row", line);
    std::string row = body.substr(i + 1, close - i - 1);
    std::vector<Scalar> entries;
    std::istringstream in(row);
    std::string cell;
    while (std::getline(in, cell, ','))
      if (!cell.empty()) entries.push_back(parse_scalar(cell, line));
    rows.push_back(std::move(entries));
    i = close + 1;
  }
  return rows;
}

}  // namespace

AlgebraFile parse_algebra_file(const std::string& text) {
  AlgebraFile f;
  bool saw_field = false, saw_vertices = false, past_header = false;
  std::map<std::string, int> arrow_ids;
  ModuleBlock* block = nullptr;

  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string stripped = raw.substr(0, raw.find('#'));
    std::vector<std::string> tok = split_ws(stripped);
    if (tok.empty()) continue;
    const std::string& key = tok[0];

    if (key == "field") {
      if (past_header || saw_field)
        throw parse_error("field must be declared once, before arrows and modules", line);
      saw_field = true;
      if (tok.size() == 2 && tok[1] == "rational") {
        f.field = Field::rationals();
      } else if (tok.size() == 3 && tok[1] == "gf") {
        try {
          f.field = Field::gf(static_cast<unsigned long>(parse_int(tok[2], line)));
        } catch (const parse_error&) {
          throw;
        } catch (const error& e) {
          throw parse_error(e.what(), line);
        }
      } else {
        throw parse_error("field must be 'rational' or 'gf <p>'", line);
      }
    } else if (key == "vertices") {
      if (saw_vertices) throw parse_error("duplicate vertices directive", line);
      if (tok.size() != 2) throw parse_error("usage: vertices <n>", line);
      int n = parse_int(tok[1], line);
      if (n < 1) throw parse_error("need at least one vertex", line);
      f.quiver.n_vertices = n;
      saw_vertices = true;
    } else if (key == "arrow") {
      if (!saw_vertices) throw parse_error("vertices must be declared before arrows", line);
      if (block) throw parse_error("arrows must precede module blocks", line);
      past_header = true;
      if (tok.size() != 4) throw parse_error("usage: arrow <name> <src> <tgt>", line);
      if (looks_numeric(tok[1]) || tok[1].find('*') != std::string::npos)
        throw parse_error("arrow name '" + tok[1] + "' is not an identifier", line);
      if (arrow_ids.count(tok[1]))
        throw parse_error("duplicate arrow name '" + tok[1] + "'", line);
      int src = parse_int(tok[2], line), tgt = parse_int(tok[3], line);
      if (src < 1 || src > f.quiver.n_vertices || tgt < 1 || tgt > f.quiver.n_vertices)
        throw parse_error("arrow endpoint out of range (vertices are 1-based)", line);
      arrow_ids[tok[1]] = static_cast<int>(f.quiver.arrows.size());
      f.quiver.arrows.push_back({tok[1], src - 1, tgt - 1});
    } else if (key == "relation") {
      if (block) throw parse_error("relations must precede module blocks", line);
      past_header = true;
      if (tok.size() < 2) throw parse_error("empty relation", line);
      Relation rel;
      size_t i = 1;
      while (i < tok.size()) {
        // one term up to the next '+'
        std::vector<std::string> factors;
        std::string term = tok[i];
        for (size_t start = 0;;) {
          size_t star = term.find('*', start);
          factors.push_back(term.substr(start, star - start));
          if (star == std::string::npos) break;
          start = star + 1;
        }
        Scalar coeff(1);
        size_t k = 0;
        if (looks_numeric(factors[0])) {
          coeff = parse_scalar(factors[0], line);
          k = 1;
        }
        if (coeff == 0) throw parse_error("zero coefficient in relation", line);
        std::vector<int> arrows;
        for (; k < factors.size(); ++k) {
          auto it = arrow_ids.find(factors[k]);
          if (it == arrow_ids.end())
            throw parse_error("undeclared arrow '" + factors[k] + "'", line);
          arrows.push_back(it->second);
        }
        if (arrows.size() < 2)
          throw parse_error("relation terms need paths of length at least 2", line);
        for (size_t a = 0; a + 1 < arrows.size(); ++a)
          if (f.quiver.arrows[arrows[a]].tgt != f.quiver.arrows[arrows[a + 1]].src)
            throw parse_error("path is not composable", line);
        if (!rel.terms.empty()) {
          const std::vector<int>& first = rel.terms.front().second;
          bool parallel =
              f.quiver.arrows[first.front()].src == f.quiver.arrows[arrows.front()].src &&
              f.quiver.arrows[first.back()].tgt == f.quiver.arrows[arrows.back()].tgt;
          if (!parallel) throw parse_error("relation terms must be parallel paths", line);
          if (first.size() != arrows.size())
            throw parse_error("relation terms must have equal length", line);
        }
        rel.terms.push_back({reduce_at(f.field, coeff, line), std::move(arrows)});
        ++i;
        if (i < tok.size()) {
          if (tok[i] != "+")
            throw parse_error("expected '+' between relation terms", line);
          ++i;
          if (i == tok.size()) throw parse_error("relation ends with '+'", line);
        }
      }
      f.relations.push_back(std::move(rel));
    } else if (key == "module") {
      if (!saw_vertices) throw parse_error("vertices must be declared before modules", line);
      past_header = true;
      if (tok.size() != 2) throw parse_error("usage: module <Name>", line);
      for (const ModuleBlock& b : f.modules)
        if (b.name == tok[1])
          throw parse_error("duplicate module name '" + tok[1] + "'", line);
      f.modules.push_back({tok[1], line, {}, {}});
      f.modules.back().maps.assign(f.quiver.arrows.size(), std::nullopt);
      block = &f.modules.back();
    } else if (key == "dim") {
      if (!block) throw parse_error("dim outside a module block", line);
      if (!block->dims.empty()) throw parse_error("duplicate dim line", line);
      std::string rest;
      for (size_t k = 1; k < tok.size(); ++k) rest += tok[k];
      std::vector<int> dims;
      std::istringstream ds(rest);
      std::string cell;
      while (std::getline(ds, cell, ',')) dims.push_back(parse_int(cell, line));
      if (static_cast<int>(dims.size()) != f.quiver.n_vertices)
        throw parse_error("dim needs one entry per vertex", line);
      for (int d : dims)
        if (d < 0) throw parse_error("negative dimension", line);
      block->dims = std::move(dims);
    } else if (key == "map") {
      if (!block) throw parse_error("map outside a module block", line);
      if (block->dims.empty()) throw parse_error("dim must precede map lines", line);
      if (tok.size() < 2) throw parse_error("usage: map <arrow> [[...]]", line);
      auto it = arrow_ids.find(tok[1]);
      if (it == arrow_ids.end())
        throw parse_error("undeclared arrow '" + tok[1] + "'", line);
      if (block->maps[it->second])
        throw parse_error("duplicate map for arrow '" + tok[1] + "'", line);
      std::string rest;
      for (size_t k = 2; k < tok.size(); ++k) rest += tok[k];
      std::vector<std::vector<Scalar>> rows = parse_rows(rest, line);
      const Arrow& ar = f.quiver.arrows[it->second];
      int r = block->dims[ar.tgt], c = block->dims[ar.src];
      if (static_cast<int>(rows.size()) != r)
        throw parse_error("map needs " + std::to_string(r) + " rows", line);
      Matrix m(r, c, f.field);
      for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
          throw parse_error("map rows need " + std::to_string(c) + " entries", line);
        for (int j = 0; j < c; ++j) m.at(i, j) = reduce_at(f.field, rows[i][j], line);
      }
      block->maps[it->second] = std::move(m);
    } else {
      throw parse_error("unknown directive '" + key + "'", line);
    }
  }
  if (!saw_vertices) throw parse_error("missing vertices directive", line);
  for (const ModuleBlock& b : f.modules)
    if (b.dims.empty())
      throw parse_error("module '" + b.name + "' has no dim line", b.line);
  return f;
}

AlgebraPtr algebra_from_file(const AlgebraFile& f, int path_cap) {
  return Algebra::build(f.quiver, f.relations, f.field, path_cap);
}

std::vector<std::pair<std::string, Representation>> modules_from_file(
    const AlgebraFile& f, const AlgebraPtr& alg) {
  std::vector<std::pair<std::string, Representation>> out;
  for (const ModuleBlock& b : f.modules) {
    Representation m;
    m.alg = alg;
    m.dims = b.dims;
    for (size_t a = 0; a < f.quiver.arrows.size(); ++a) {
      const Arrow& ar = f.quiver.arrows[a];
      if (b.maps[a])
        m.arrow_maps.push_back(*b.maps[a]);
      else
        m.arrow_maps.push_back(Matrix(b.dims[ar.tgt], b.dims[ar.src], f.field));
    }
    try {
      m.validate();
    } catch (const error& e) {
      throw parse_error("module '" + b.name + "': " + e.what(), b.line);
    }
    out.push_back({b.name, std::move(m)});
  }
  return out;
}

std::string render_algebra_file(const AlgebraPtr& alg) {
  std::ostringstream out;
  out << "field " << (alg->field().is_rational()
                          ? std::string("rational")
                          : "gf " + std::to_string(alg->field().characteristic()))
      << "\n";
  out << "vertices " << alg->n_vertices() << "\n";
  for (const Arrow& a : alg->quiver().arrows)
    out << "arrow " << a.name << " " << a.src + 1 << " " << a.tgt + 1 << "\n";
  for (const Relation& r : alg->relations()) {
    out << "relation";
    bool first = true;
    for (const auto& [c, arrows] : r.terms) {
      out << (first ? " " : " + ");
      first = false;
      if (!(c == 1)) out << c.get_str() << "*";
      for (size_t k = 0; k < arrows.size(); ++k)
        out << (k ? "*" : "") << alg->quiver().arrows[arrows[k]].name;
    }
    out << "\n";
  }
  return out.str();
}

std::string input_digest(const std::string& text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream out;
  out << std::hex;
  for (int i = 15; i >= 0; --i) out << ((h >> (4 * i)) & 0xF);
  return out.str();
}

}  // namespace qhom
