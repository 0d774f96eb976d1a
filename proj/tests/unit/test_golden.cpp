#include <doctest.h>

#include "gnnbench/golden.hpp"

using namespace gnnbench;

namespace {

Graph flip_one(Graph g) {
    if (g.has_edge(0, 1))
        g.remove_edge(0, 1);
    else
        g.add_edge(0, 1);
    return g;
}

}  // namespace

TEST_SUITE("golden") {

TEST_CASE("every reference value reproduces") {
    const auto report = golden::run_suite();
    CHECK(report.checks.size() == 40);
    for (const auto& c : report.checks) CHECK_MESSAGE(c.pass, c.name << " expected " << c.expected << " got " << c.actual);
    CHECK(report.all_pass());
    CHECK(report.failures() == 0);
    CHECK(report.seconds < 10.0);
}

TEST_CASE("a perturbed input is caught") {
    const golden::Inputs clean;
    auto perturbations = std::vector<golden::Inputs>(6, clean);
    perturbations[0].decalin = flip_one(clean.decalin);
    perturbations[1].bicyclopentyl = flip_one(clean.bicyclopentyl);
    perturbations[2].cospectral_g = flip_one(clean.cospectral_g);
    perturbations[3].cospectral_h = flip_one(clean.cospectral_h);
    perturbations[4].rook = flip_one(clean.rook);
    perturbations[5].shrikhande = flip_one(clean.shrikhande);
    for (const auto& in : perturbations) {
        const auto report = golden::run_suite(in);
        CHECK(report.failures() >= 1);
        CHECK_FALSE(report.all_pass());
    }
}

}  // TEST_SUITE
