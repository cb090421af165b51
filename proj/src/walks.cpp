#include "walks.hpp"

#include <algorithm>
#include <cmath>

#include "necklace/errors.hpp"

namespace necklace::detail {

BoundaryAutomaton::BoundaryAutomaton(const Word& w)
    : q(w.q()), len(int(w.size())), letters(w.letters()) {
    // Prefix function over w (pi[i] = longest proper border of w[0..i)).
    std::vector<int> pi(std::size_t(len) + 1, 0);
    for (int i = 1; i < len; ++i) {
        int k = pi[std::size_t(i)];
        while (k > 0 && letters[std::size_t(i)] != letters[std::size_t(k)]) k = pi[std::size_t(k)];
        if (letters[std::size_t(i)] == letters[std::size_t(k)]) ++k;
        pi[std::size_t(i) + 1] = k;
    }
    delta.assign(std::size_t(len) * q, 0);
    for (int s = 0; s < len; ++s) {
        for (unsigned c = 1; c <= q; ++c) {
            int t;
            if (Letter(c) == letters[std::size_t(s)]) {
                t = s + 1;
                if (t == len) t = pi[std::size_t(len)];
            } else {
                t = s == 0 ? 0 : delta[std::size_t(pi[std::size_t(s)]) * q + (c - 1)];
            }
            delta[std::size_t(s) * q + (c - 1)] = t;
        }
    }
    max_next.assign(std::size_t(len), 0);
    max_next[0] = letters[0];
    for (int s = 1; s < len; ++s)
        max_next[std::size_t(s)] =
            std::max(letters[std::size_t(s)], max_next[std::size_t(pi[std::size_t(s)])]);
}

namespace {

struct ProductGraph {
    int n = 0;
    unsigned q = 2;
    std::vector<int> next;  // n*q, -1 = inadmissible
};

ProductGraph build_product(const BoundaryAutomaton* bound, const AhoCorasick& ac) {
    const int nb = bound ? bound->len : 1;
    const int na = ac.state_count();
    ProductGraph g;
    g.q = bound ? bound->q : ac.q();
    g.n = nb * na;
    g.next.assign(std::size_t(g.n) * g.q, -1);
    for (int b = 0; b < nb; ++b) {
        for (int a = 0; a < na; ++a) {
            if (ac.accepting(a)) continue;
            for (unsigned c = 1; c <= g.q; ++c) {
                if (bound && !bound->admissible(b, Letter(c))) continue;
                int a2 = ac.next(a, Letter(c));
                if (ac.accepting(a2)) continue;
                int b2 = bound ? bound->next(b, Letter(c)) : 0;
                g.next[std::size_t(b * na + a) * g.q + (c - 1)] = b2 * na + a2;
            }
        }
    }
    return g;
}

// Iterative Tarjan; returns component id per node.
std::vector<int> scc_ids(const ProductGraph& g, int& comp_count) {
    std::vector<int> index(std::size_t(g.n), -1), low(std::size_t(g.n), 0), comp(std::size_t(g.n), -1);
    std::vector<char> on_stack(std::size_t(g.n), 0);
    std::vector<int> stack;
    comp_count = 0;
    int next_index = 0;
    struct Frame {
        int v;
        unsigned ci;
    };
    for (int root = 0; root < g.n; ++root) {
        if (index[std::size_t(root)] != -1) continue;
        std::vector<Frame> call{{root, 0}};
        index[std::size_t(root)] = low[std::size_t(root)] = next_index++;
        stack.push_back(root);
        on_stack[std::size_t(root)] = 1;
        while (!call.empty()) {
            Frame& f = call.back();
            if (f.ci < g.q) {
                int w = g.next[std::size_t(f.v) * g.q + f.ci++];
                if (w == -1) continue;
                if (index[std::size_t(w)] == -1) {
                    index[std::size_t(w)] = low[std::size_t(w)] = next_index++;
                    stack.push_back(w);
                    on_stack[std::size_t(w)] = 1;
                    call.push_back({w, 0});
                } else if (on_stack[std::size_t(w)]) {
                    low[std::size_t(f.v)] = std::min(low[std::size_t(f.v)], index[std::size_t(w)]);
                }
            } else {
                if (low[std::size_t(f.v)] == index[std::size_t(f.v)]) {
                    int w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[std::size_t(w)] = 0;
                        comp[std::size_t(w)] = comp_count;
                    } while (w != f.v);
                    ++comp_count;
                }
                int v = f.v;
                call.pop_back();
                if (!call.empty())
                    low[std::size_t(call.back().v)] =
                        std::min(low[std::size_t(call.back().v)], low[std::size_t(v)]);
            }
        }
    }
    return comp;
}

// Pair DP inside one SCC: counts[u][v] = walks u -> v of the current length.
template <class Int>
void accumulate_component(const ProductGraph& g, const std::vector<int>& nodes,
                          const std::vector<std::uint64_t>& steps,
                          std::vector<BigInt>& out) {
    const int s = int(nodes.size());
    std::vector<int> local(std::size_t(g.n), -1);
    for (int i = 0; i < s; ++i) local[std::size_t(nodes[std::size_t(i)])] = i;
    // Local transition list.
    std::vector<std::pair<int, int>> edges;  // (from, to), per admissible char
    for (int i = 0; i < s; ++i)
        for (unsigned c = 0; c < g.q; ++c) {
            int t = g.next[std::size_t(nodes[std::size_t(i)]) * g.q + c];
            if (t != -1 && local[std::size_t(t)] != -1) edges.emplace_back(i, local[std::size_t(t)]);
        }
    std::vector<Int> cur(std::size_t(s) * s, Int(0)), nxt(std::size_t(s) * s, Int(0));
    for (int i = 0; i < s; ++i) cur[std::size_t(i) * s + i] = Int(1);
    std::uint64_t done = 0;
    for (std::size_t si = 0; si < steps.size(); ++si) {
        for (; done < steps[si]; ++done) {
            std::fill(nxt.begin(), nxt.end(), Int(0));
            for (auto [from, to] : edges) {
                Int* dst = &nxt[std::size_t(to) * s];
                const Int* src = &cur[std::size_t(from) * s];
                for (int u = 0; u < s; ++u) dst[u] += src[u];
            }
            cur.swap(nxt);
        }
        Int diag(0);
        for (int i = 0; i < s; ++i) diag += cur[std::size_t(i) * s + i];
        if constexpr (std::is_same_v<Int, BigInt>) {
            out[si] += diag;
        } else if constexpr (std::is_same_v<Int, unsigned __int128>) {
            BigInt hi(std::uint64_t(diag >> 64)), lo(std::uint64_t(diag));
            out[si] += (hi << 64) + lo;
        } else {
            out[si] += BigInt(static_cast<unsigned long>(diag));
        }
    }
}

}  // namespace

std::vector<BigInt> closed_walk_counts(const BoundaryAutomaton* bound,
                                       const AhoCorasick& ac,
                                       const std::vector<std::uint64_t>& steps) {
    for (std::size_t i = 1; i < steps.size(); ++i)
        if (steps[i] <= steps[i - 1]) throw internal_error("closed_walk_counts: steps not ascending");
    std::vector<BigInt> out(steps.size(), BigInt(0));
    if (steps.empty()) return out;
    ProductGraph g = build_product(bound, ac);
    int comp_count = 0;
    std::vector<int> comp = scc_ids(g, comp_count);
    // Closed walks stay within one strongly connected component.
    std::vector<std::vector<int>> members(std::size_t(comp_count));
    for (int v = 0; v < g.n; ++v) members[std::size_t(comp[std::size_t(v)])].push_back(v);

    const std::uint64_t max_steps = steps.back();
    const double bits = double(max_steps) * std::log2(double(g.q)) + 2;
    for (const auto& nodes : members) {
        if (nodes.size() == 1) {
            // Trivial SCC participates only via a self-loop.
            int v = nodes[0];
            bool self = false;
            for (unsigned c = 0; c < g.q && !self; ++c)
                self = g.next[std::size_t(v) * g.q + c] == v;
            if (!self) continue;
        }
        if (bits < 63)
            accumulate_component<std::uint64_t>(g, nodes, steps, out);
        else if (bits < 126)
            accumulate_component<unsigned __int128>(g, nodes, steps, out);
        else
            accumulate_component<BigInt>(g, nodes, steps, out);
    }
    return out;
}

}  // namespace necklace::detail
