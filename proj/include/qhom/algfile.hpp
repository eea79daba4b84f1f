#pragma once
// Line-oriented text format for bound quiver algebras and their modules.
//
//   # comment
//   field rational            (or: field gf <p>)
//   vertices <n>              vertices are 1-based in files, 0-based in code
//   arrow <name> <src> <tgt>
//   relation <term> [ + <term> ...]   term = [coeff*]name(*name)*, left to right
//   module <Name>
//     dim d1,...,dn
//     map <arrow> [[row],[row],...]   omitted maps are zero
//
// Parsing reports positioned errors; the conversion between 1-based file
// vertices and 0-based internal ids happens here and nowhere else.

#include <qhom/algebra.hpp>
#include <qhom/rep.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qhom {

struct ModuleBlock {
  std::string name;
  int line = 0;  // of the module directive, for error reporting
  std::vector<int> dims;
  std::vector<std::optional<Matrix>> maps;  // indexed by arrow
};

struct AlgebraFile {
  Field field = Field::rationals();
  Quiver quiver;
  std::vector<Relation> relations;
  std::vector<ModuleBlock> modules;
};

AlgebraFile parse_algebra_file(const std::string& text);

AlgebraPtr algebra_from_file(const AlgebraFile& f, int path_cap = 32);

std::vector<std::pair<std::string, Representation>> modules_from_file(
    const AlgebraFile& f, const AlgebraPtr& alg);

// the algebra rendered back into the file grammar, byte-deterministic
std::string render_algebra_file(const AlgebraPtr& alg);

// FNV-1a 64-bit digest of raw input bytes, as 16 hex digits
std::string input_digest(const std::string& text);

}  // namespace qhom
