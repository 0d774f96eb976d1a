#include "gnnbench/graphlets.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "gnnbench/matlang.hpp"

namespace gnnbench::graphlets {

std::string_view pattern_name(PatternKind k) {
    switch (k) {
        case PatternKind::three_star: return "3star";
        case PatternKind::triangle: return "tri";
        case PatternKind::tailed_triangle: return "tailedtri";
        case PatternKind::four_cycle: return "4cycle";
    }
    return "?";
}

PatternKind parse_pattern(std::string_view name) {
    for (auto k : {PatternKind::three_star, PatternKind::triangle, PatternKind::tailed_triangle, PatternKind::four_cycle})
        if (pattern_name(k) == name) return k;
    throw std::invalid_argument("unknown pattern '" + std::string(name) + "'");
}

namespace {

std::int64_t to_integer(double x, std::string_view what) {
    const double r = std::round(x);
    if (std::abs(x - r) > 1e-6) throw std::logic_error(std::string(what) + ": non-integral count");
    return static_cast<std::int64_t>(r);
}

}  // namespace

std::int64_t count_3star(const Graph& g) {
    std::int64_t total = 0;
    for (std::size_t v = 0; v < g.n(); ++v) {
        const auto d = static_cast<std::int64_t>(g.degree(v));
        total += d * (d - 1) * (d - 2) / 6;
    }
    return total;
}

std::int64_t count_triangle(const Graph& g) {
    const Matrix a = g.adjacency();
    return to_integer(matmul(matmul(a, a), a).trace() / 6.0, "triangle");
}

std::int64_t count_4cycle(const Graph& g) {
    const Matrix a = g.adjacency();
    const Matrix a2 = matmul(a, a);
    const double value = matmul(a2, a2).trace() + a2.trace() - 2.0 * a2.sum();
    return to_integer(value / 8.0, "4-cycle");
}

std::int64_t count_tailed_triangle(const Graph& g) {
    const Matrix a = g.adjacency();
    const Matrix a3 = matmul(matmul(a, a), a);
    double total = 0.0;
    for (std::size_t v = 0; v < g.n(); ++v) total += a3(v, v) / 2.0 * (static_cast<double>(g.degree(v)) - 2.0);
    return to_integer(total, "tailed triangle");
}

std::int64_t count(const Graph& g, PatternKind k) {
    switch (k) {
        case PatternKind::three_star: return count_3star(g);
        case PatternKind::triangle: return count_triangle(g);
        case PatternKind::tailed_triangle: return count_tailed_triangle(g);
        case PatternKind::four_cycle: return count_4cycle(g);
    }
    return 0;
}

namespace {

// Counts copies of the pattern living on exactly the 4-node set q.
std::int64_t copies_on_quad(const Graph& g, std::array<std::size_t, 4> q, PatternKind k) {
    auto e = [&](int i, int j) { return g.has_edge(q[i], q[j]); };
    std::int64_t c = 0;
    switch (k) {
        case PatternKind::three_star:
            for (int center = 0; center < 4; ++center) {
                bool all = true;
                for (int o = 0; o < 4; ++o)
                    if (o != center && !e(center, o)) all = false;
                c += all ? 1 : 0;
            }
            break;
        case PatternKind::four_cycle: {
            // The three distinct 4-cycles on {0,1,2,3}: 0-1-2-3, 0-1-3-2, 0-2-1-3.
            static constexpr std::array<std::array<int, 4>, 3> cycles{{{0, 1, 2, 3}, {0, 1, 3, 2}, {0, 2, 1, 3}}};
            for (const auto& cy : cycles)
                c += (e(cy[0], cy[1]) && e(cy[1], cy[2]) && e(cy[2], cy[3]) && e(cy[3], cy[0])) ? 1 : 0;
            break;
        }
        case PatternKind::tailed_triangle:
            // Triangle on three nodes plus an edge from one of them to the fourth.
            for (int out = 0; out < 4; ++out) {
                std::array<int, 3> t{};
                int idx = 0;
                for (int i = 0; i < 4; ++i)
                    if (i != out) t[idx++] = i;
                if (!(e(t[0], t[1]) && e(t[0], t[2]) && e(t[1], t[2]))) continue;
                for (int i : t) c += e(i, out) ? 1 : 0;
            }
            break;
        case PatternKind::triangle: break;
    }
    return c;
}

}  // namespace

std::int64_t enumerate_pattern(const Graph& g, PatternKind k) {
    const std::size_t n = g.n();
    if (n > kEnumerationMaxNodes) throw std::invalid_argument("enumerate_pattern: graph has more than 16 nodes");
    std::int64_t total = 0;
    if (k == PatternKind::triangle) {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                for (std::size_t c = b + 1; c < n; ++c)
                    total += (g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c)) ? 1 : 0;
        return total;
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c)
                for (std::size_t d = c + 1; d < n; ++d) total += copies_on_quad(g, {a, b, c, d}, k);
    return total;
}

double custom_sentence(const Graph& g) {
    static const matlang::ExprPtr expr = matlang::parse("ones' * A * diag(f:exp(-1 * A^2 * ones)) * A * ones");
    return matlang::eval_sentence(*expr, g);
}

}  // namespace gnnbench::graphlets
