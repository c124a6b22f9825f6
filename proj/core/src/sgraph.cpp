#include "quatcong/sgraph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace quatcong {

SignPattern SignPattern::all_plus(long m) { return from_index(m, 0); }

SignPattern SignPattern::all_minus(long m) {
    return from_index(m, (1ul << prime_factors(m).size()) - 1);
}

SignPattern SignPattern::from_index(long m, unsigned long index) {
    if (m < 1 || !is_squarefree(m)) throw std::invalid_argument("sign pattern modulus must be squarefree");
    SignPattern s;
    s.modulus = m;
    auto primes = prime_factors(m);
    for (size_t k = 0; k < primes.size(); ++k) s.signs[primes[k]] = ((index >> k) & 1u) ? SignValue(-1) : SignValue(1);
    return s;
}

std::vector<SignPattern> SignPattern::all_patterns(long m) {
    std::vector<SignPattern> out;
    unsigned long count = 1ul << prime_factors(m).size();
    for (unsigned long i = 0; i < count; ++i) out.push_back(from_index(m, i));
    return out;
}

SignPattern SignPattern::parse(long m, const std::string& text) {
    SignPattern s = all_plus(m);
    auto primes = prime_factors(m);
    if (text.find(':') == std::string::npos) {
        if (text.size() != primes.size()) throw std::invalid_argument("sign pattern needs one sign per prime of the modulus");
        for (size_t k = 0; k < primes.size(); ++k) {
            if (text[k] != '+' && text[k] != '-') throw std::invalid_argument("sign pattern symbols must be + or -");
            s.signs[primes[k]] = SignValue(text[k] == '+' ? 1 : -1);
        }
        return s;
    }
    size_t seen = 0;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t comma = text.find(',', pos);
        std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        size_t colon = item.find(':');
        if (colon == std::string::npos || colon + 2 != item.size()) throw std::invalid_argument("bad sign entry: " + item);
        long p = std::stol(item.substr(0, colon));
        char c = item[colon + 1];
        if (!s.signs.count(p)) throw std::invalid_argument("prime " + std::to_string(p) + " does not divide the modulus");
        if (c != '+' && c != '-') throw std::invalid_argument("bad sign entry: " + item);
        s.signs[p] = SignValue(c == '+' ? 1 : -1);
        ++seen;
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (seen != primes.size()) throw std::invalid_argument("sign pattern must give every prime of the modulus");
    return s;
}

SignValue SignPattern::sign(long p) const {
    auto it = signs.find(p);
    if (it == signs.end()) throw std::invalid_argument("prime not in sign pattern");
    return it->second;
}

std::string SignPattern::to_string() const {
    if (signs.empty()) return "1";
    std::string s;
    for (const auto& [p, v] : signs) s += std::to_string(p) + v.symbol();
    return s;
}

const Involution& involution_for(const std::vector<Involution>& involutions, long p) {
    for (const auto& s : involutions)
        if (s.prime == p) return s;
    throw std::invalid_argument("missing involution for p = " + std::to_string(p));
}

SignedGraph build_graph(size_t h, const std::vector<Involution>& involutions, const SignPattern& chi) {
    SignedGraph g;
    g.vertex_count = h;
    g.modulus = chi.modulus;
    for (const auto& [p, sign] : chi.signs) {
        const Involution& s = involution_for(involutions, p);
        if (s.size() != h) throw std::invalid_argument("build_graph: involution size mismatch");
        for (size_t i = 0; i < h; ++i)
            if (i <= s.permutation[i]) g.edges.push_back({i, s.permutation[i], sign, p});
    }
    return g;
}

SignedGraph build_graph(const ClassSet& cs, const std::vector<Involution>& involutions, const SignPattern& chi) {
    return build_graph(cs.size(), involutions, chi);
}

namespace {

struct UnionFind {
    std::vector<size_t> parent;
    explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    size_t find(size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(size_t a, size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (b < a) std::swap(a, b);
        parent[b] = a;
    }
};

std::vector<std::vector<size_t>> partition_by_edges(size_t n, const std::vector<SignedEdge>& edges) {
    UnionFind uf(n);
    for (const auto& e : edges) uf.unite(e.u, e.v);
    std::vector<std::vector<size_t>> comps;
    std::vector<long> slot(n, -1);
    for (size_t v = 0; v < n; ++v) {
        size_t r = uf.find(v);
        if (slot[r] < 0) {
            slot[r] = static_cast<long>(comps.size());
            comps.emplace_back();
        }
        comps[static_cast<size_t>(slot[r])].push_back(v);
    }
    return comps;
}

}  // namespace

SIdealClassSet components(const SignedGraph& graph) {
    SIdealClassSet out;
    out.components = partition_by_edges(graph.vertex_count, graph.edges);
    for (const auto& c : out.components)
        check(std::has_single_bit(c.size()), "components: size " + std::to_string(c.size()) + " is not a power of 2");

    // Refinement: add the primes one at a time; each new component is the
    // union of at most two previous ones.
    std::vector<long> primes;
    for (const auto& e : graph.edges)
        if (std::find(primes.begin(), primes.end(), e.prime) == primes.end()) primes.push_back(e.prime);
    std::sort(primes.begin(), primes.end());
    std::vector<SignedEdge> so_far;
    auto previous = partition_by_edges(graph.vertex_count, so_far);
    for (long p : primes) {
        for (const auto& e : graph.edges)
            if (e.prime == p) so_far.push_back(e);
        auto next = partition_by_edges(graph.vertex_count, so_far);
        std::vector<size_t> owner(graph.vertex_count);
        for (size_t k = 0; k < previous.size(); ++k)
            for (size_t v : previous[k]) owner[v] = k;
        for (const auto& c : next) {
            std::vector<size_t> parts;
            for (size_t v : c)
                if (std::find(parts.begin(), parts.end(), owner[v]) == parts.end()) parts.push_back(owner[v]);
            check(parts.size() <= 2, "components: refinement fiber larger than 2 at p = " + std::to_string(p));
        }
        previous = std::move(next);
    }
    return out;
}

Admissibility admissible(const SignedGraph& graph, const std::vector<size_t>& component) {
    Admissibility out;
    if (component.empty()) throw std::invalid_argument("admissible: empty component");
    const size_t n = graph.vertex_count;
    std::vector<bool> member(n, false);
    for (size_t v : component) member[v] = true;
    std::vector<std::vector<size_t>> incident(n);
    for (size_t k = 0; k < graph.edges.size(); ++k) {
        const auto& e = graph.edges[k];
        if (member[e.u] != member[e.v]) throw std::invalid_argument("admissible: vertex set is not a union of components");
        if (!member[e.u]) continue;
        incident[e.u].push_back(k);
        if (e.v != e.u) incident[e.v].push_back(k);
    }
    std::vector<int> label(n, 0);
    std::vector<long> parent_edge(n, -1);
    const size_t root = *std::min_element(component.begin(), component.end());
    label[root] = 1;
    std::deque<size_t> queue{root};
    auto path_to_root = [&](size_t x) {
        std::vector<SignedEdge> path;
        while (x != root) {
            const auto& e = graph.edges[static_cast<size_t>(parent_edge[x])];
            path.push_back(e);
            x = (e.u == x) ? e.v : e.u;
        }
        return path;
    };
    while (!queue.empty()) {
        size_t x = queue.front();
        queue.pop_front();
        for (size_t k : incident[x]) {
            const auto& e = graph.edges[k];
            size_t y = (e.u == x) ? e.v : e.u;
            int want = label[x] * e.sign.value();
            if (label[y] == 0) {
                label[y] = want;
                parent_edge[y] = static_cast<long>(k);
                queue.push_back(y);
            } else if (label[y] != want) {
                auto a = path_to_root(x);
                std::reverse(a.begin(), a.end());
                a.push_back(e);
                auto b = path_to_root(y);
                a.insert(a.end(), b.begin(), b.end());
                out.negative_cycle = std::move(a);
                return out;
            }
        }
    }
    for (size_t v : component) {
        if (label[v] == 0) throw std::invalid_argument("admissible: component is not connected");
        (label[v] > 0 ? out.plus : out.minus).push_back(v);
    }
    out.admissible = true;
    return out;
}

SClassNumbers sclass_numbers(const ClassSet& cs, const std::vector<Involution>& involutions, long m) {
    if (cs.level() % m != 0) throw std::invalid_argument("sclass_numbers: modulus must divide N");
    SClassNumbers out;
    out.modulus = m;
    for (const auto& chi : SignPattern::all_patterns(m)) {
        SignedGraph g = build_graph(cs, involutions, chi);
        SIdealClassSet comps = components(g);
        if (out.admissible_counts.empty()) out.h_bs = comps.t();
        check(comps.t() == out.h_bs, "sclass_numbers: components depend on the sign pattern");
        size_t count = 0;
        for (const auto& c : comps.components)
            if (admissible(g, c).admissible) ++count;
        out.admissible_counts.emplace_back(chi, count);
    }
    check(out.admissible_counts.front().second == out.h_bs, "sclass_numbers: all-plus pattern not fully admissible");
    return out;
}

size_t type_number(const ClassSet& cs, const std::vector<Involution>& involutions) {
    return components(build_graph(cs, involutions, SignPattern::all_plus(cs.level()))).t();
}

size_t joint_eigenspace_dim(size_t h, const std::vector<Involution>& involutions, const SignPattern& chi) {
    std::vector<std::vector<Rational>> rows;
    for (const auto& [p, sign] : chi.signs) {
        const Involution& s = involution_for(involutions, p);
        for (size_t i = 0; i < h; ++i) {
            std::vector<Rational> r(h, Rational(0));
            r[s.permutation[i]] += 1;
            r[i] -= sign.value();
            rows.push_back(std::move(r));
        }
    }
    if (rows.empty()) return h;
    RatMatrix m(rows.size(), h);
    for (size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
    return h - rank(m);
}

}  // namespace quatcong
