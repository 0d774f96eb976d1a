#include "gnnbench/wl.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gnnbench::wl {

std::string_view test_name(Test t) {
    switch (t) {
        case Test::wl1: return "1wl";
        case Test::wl2: return "2wl";
        case Test::fwl2: return "2fwl";
    }
    return "?";
}

namespace {

using Sig = std::vector<std::uint32_t>;

struct Ranked {
    std::vector<std::uint32_t> colors;
    std::vector<std::size_t> histogram;
    std::string rendered;
};

// Ranks signatures lexicographically and renders the sorted histogram.
Ranked rank(const std::vector<Sig>& sigs) {
    std::vector<std::uint32_t> order(sigs.size());
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return sigs[a] < sigs[b]; });

    Ranked out;
    out.colors.assign(sigs.size(), 0);
    std::uint32_t next = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i > 0 && sigs[order[i]] != sigs[order[i - 1]]) ++next;
        out.colors[order[i]] = next;
    }
    out.histogram.assign(order.empty() ? 0 : next + 1, 0);
    for (auto c : out.colors) ++out.histogram[c];

    std::string& r = out.rendered;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i > 0 && sigs[order[i]] == sigs[order[i - 1]]) continue;
        const Sig& s = sigs[order[i]];
        r.push_back('[');
        for (std::size_t k = 0; k < s.size(); ++k) {
            if (k) r.push_back(',');
            r += std::to_string(s[k]);
        }
        r += "]x";
        r += std::to_string(out.histogram[out.colors[order[i]]]);
        r.push_back(';');
    }
    return out;
}

template <typename Refine>
Canonical refine_until_stable(unsigned arity, std::vector<Sig> init_sigs, unsigned cap, Refine&& refine) {
    Canonical c;
    c.partition.arity = arity;
    Ranked cur = rank(init_sigs);
    c.rounds.push_back(std::move(cur.rendered));
    unsigned it = 0;
    while (it < cap) {
        Ranked nxt = rank(refine(cur.colors));
        ++it;
        const bool stable = nxt.histogram.size() == cur.histogram.size();
        c.rounds.push_back(std::move(nxt.rendered));
        cur = std::move(nxt);
        if (stable) break;
    }
    c.partition.colors = std::move(cur.colors);
    c.partition.histogram = std::move(cur.histogram);
    c.partition.iterations = it;
    for (std::size_t t = 0; t < c.rounds.size(); ++t) {
        c.signature += 'r';
        c.signature += std::to_string(t);
        c.signature += '{';
        c.signature += c.rounds[t];
        c.signature += '}';
    }
    return c;
}

// Pair initialization shared by 2-WL and 2-FWL: self pairs carry the node
// color, other pairs are tagged edge or nonedge.
std::vector<Sig> pair_init(const Graph& g) {
    const std::size_t n = g.n();
    std::vector<Sig> sigs(n * n);
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t u = 0; u < n; ++u) sigs[v * n + u] = {v == u ? 0u : (g.has_edge(v, u) ? 1u : 2u)};
    return sigs;
}

}  // namespace

Canonical wl1_canonical(const Graph& g, std::optional<std::span<const std::uint32_t>> init) {
    const std::size_t n = g.n();
    if (init && init->size() != n) throw std::invalid_argument("initial coloring must have one entry per node");
    std::vector<Sig> sigs(n);
    for (std::size_t v = 0; v < n; ++v) sigs[v] = {init ? (*init)[v] : 0u};

    std::vector<std::vector<std::size_t>> nbrs(n);
    for (std::size_t v = 0; v < n; ++v) nbrs[v] = g.neighbors(v);

    return refine_until_stable(1, std::move(sigs), static_cast<unsigned>(n), [&](const std::vector<std::uint32_t>& col) {
        std::vector<Sig> out(n);
        for (std::size_t v = 0; v < n; ++v) {
            Sig& s = out[v];
            s.reserve(nbrs[v].size() + 1);
            s.push_back(col[v]);
            for (auto u : nbrs[v]) s.push_back(col[u]);
            std::sort(s.begin() + 1, s.end());
        }
        return out;
    });
}

Canonical wl2_canonical(const Graph& g) {
    const std::size_t n = g.n();
    return refine_until_stable(2, pair_init(g), static_cast<unsigned>(n * n), [&](const std::vector<std::uint32_t>& col) {
        std::vector<Sig> out(n * n);
        std::vector<std::uint32_t> rowm(n), colm(n);
        for (std::size_t v = 0; v < n; ++v) {
            for (std::size_t u = 0; u < n; ++u) {
                for (std::size_t k = 0; k < n; ++k) {
                    rowm[k] = col[v * n + k];
                    colm[k] = col[k * n + u];
                }
                std::sort(rowm.begin(), rowm.end());
                std::sort(colm.begin(), colm.end());
                Sig& s = out[v * n + u];
                s.reserve(2 * n + 1);
                s.push_back(col[v * n + u]);
                s.insert(s.end(), rowm.begin(), rowm.end());
                s.insert(s.end(), colm.begin(), colm.end());
            }
        }
        return out;
    });
}

Canonical fwl2_canonical(const Graph& g) {
    const std::size_t n = g.n();
    return refine_until_stable(2, pair_init(g), static_cast<unsigned>(n * n), [&](const std::vector<std::uint32_t>& col) {
        std::vector<Sig> out(n * n);
        std::vector<std::uint64_t> pairs(n);
        for (std::size_t v = 0; v < n; ++v) {
            for (std::size_t u = 0; u < n; ++u) {
                for (std::size_t k = 0; k < n; ++k)
                    pairs[k] = (std::uint64_t{col[v * n + k]} << 32) | col[k * n + u];
                std::sort(pairs.begin(), pairs.end());
                Sig& s = out[v * n + u];
                s.reserve(2 * n + 1);
                s.push_back(col[v * n + u]);
                for (auto p : pairs) {
                    s.push_back(static_cast<std::uint32_t>(p >> 32));
                    s.push_back(static_cast<std::uint32_t>(p));
                }
            }
        }
        return out;
    });
}

Canonical canonical(Test t, const Graph& g) {
    switch (t) {
        case Test::wl1: return wl1_canonical(g);
        case Test::wl2: return wl2_canonical(g);
        case Test::fwl2: return fwl2_canonical(g);
    }
    throw std::invalid_argument("unknown test");
}

PairVerdict compare(const Canonical& a, const Canonical& b, Test t) {
    PairVerdict v;
    v.test = t;
    const std::size_t common = std::min(a.rounds.size(), b.rounds.size());
    for (std::size_t r = 0; r < common; ++r) {
        if (a.rounds[r] != b.rounds[r]) {
            v.equivalent = false;
            v.separating_iteration = static_cast<unsigned>(r);
            return v;
        }
    }
    if (a.rounds.size() != b.rounds.size()) {
        v.equivalent = false;
        v.separating_iteration = static_cast<unsigned>(common);
    }
    return v;
}

namespace {

PairVerdict equivalent(Test t, const Graph& g, const Graph& h) {
    if (g.n() != h.n()) return {false, 0u, t};
    return compare(canonical(t, g), canonical(t, h), t);
}

}  // namespace

PairVerdict wl1_equivalent(const Graph& g, const Graph& h) { return equivalent(Test::wl1, g, h); }
PairVerdict wl2_equivalent(const Graph& g, const Graph& h) { return equivalent(Test::wl2, g, h); }
PairVerdict fwl2_equivalent(const Graph& g, const Graph& h) { return equivalent(Test::fwl2, g, h); }

double fwl3_tensor_statistic(const Graph& g) {
    const std::size_t n = g.n();
    auto at = [n](std::size_t i, std::size_t j, std::size_t k) { return (i * n + j) * n + k; };
    std::vector<double> t(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                if (i == j && j == k) {
                    t[at(i, j, k)] = 8.0;
                    continue;
                }
                const int code = (g.has_edge(i, j) ? 1 : 0) + (g.has_edge(i, k) ? 2 : 0) + (g.has_edge(j, k) ? 4 : 0);
                t[at(i, j, k)] = code;
            }
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                if (t[at(i, j, k)] != 0.0) continue;
                double acc = 0.0;
                for (std::size_t s = 0; s < n; ++s) acc += t[at(s, j, k)] * t[at(i, s, k)] * t[at(i, j, s)];
                total += acc;
            }
    return total;
}

}  // namespace gnnbench::wl
