#pragma once

// Embedded reference graphs: the Decalin/Bicyclopentyl pair, a cospectral
// 4-regular pair, and the 4x4 rook / Shrikhande strongly regular pair.

#include <span>
#include <string>
#include <vector>

#include "gnnbench/graph.hpp"
#include "gnnbench/matrix.hpp"

namespace gnnbench::golden {

Graph decalin();
Graph bicyclopentyl();
Graph cospectral_g();
Graph cospectral_h();
Graph rook();
Graph shrikhande();

/// Normalized Laplacians as printed with two decimals.
Matrix decalin_laplacian_printed();
Matrix bicyclopentyl_laplacian_printed();

struct Inputs {
    Graph decalin = golden::decalin();
    Graph bicyclopentyl = golden::bicyclopentyl();
    Graph cospectral_g = golden::cospectral_g();
    Graph cospectral_h = golden::cospectral_h();
    Graph rook = golden::rook();
    Graph shrikhande = golden::shrikhande();
};

struct Check {
    std::string name;
    double expected = 0.0;
    double actual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct Report {
    std::vector<Check> checks;
    double seconds = 0.0;
    bool all_pass() const;
    std::size_t failures() const;
};

Report run_suite(const Inputs& in = {});

}  // namespace gnnbench::golden
