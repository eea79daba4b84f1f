// Regenerates the derived corpus files: for each representation-finite base
// algebra we build the endomorphism algebra of the sum of all indecomposables
// and write its presentation next to the base file.  The output is
// byte-deterministic, so a test can diff the checked-in files against a fresh
// run.
//
//   corpusgen <corpus-dir>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "qhom/algfile.hpp"
#include "qhom/auslander.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw qhom::error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& dir, const std::string& base) {
    auto file = qhom::parse_algebra_file(slurp(dir + "/" + base + ".alg"));
    auto alg = qhom::algebra_from_file(file);
    auto ac = qhom::build_auslander(alg);
    std::string out_path = dir + "/ausl_" + base + ".alg";
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw qhom::error("cannot write " + out_path);
    out << "# generated by corpusgen from " << base << ".alg\n";
    out << qhom::render_algebra_file(ac.alg);
    std::cout << out_path << ": dimension " << ac.alg->dimension() << ", vertices "
              << ac.alg->n_vertices() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: corpusgen <corpus-dir>\n";
        return 2;
    }
    try {
        for (const char* base : {"a2", "a3", "n2", "n3"}) emit(argv[1], base);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
