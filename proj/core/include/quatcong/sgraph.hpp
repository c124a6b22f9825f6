#pragma once

#include "quatcong/hecke.hpp"

#include <map>
#include <string>
#include <vector>

namespace quatcong {

struct SignPattern {
    long modulus = 1;
    std::map<long, SignValue> signs;  // one entry per prime dividing the modulus

    static SignPattern all_plus(long m);
    static SignPattern all_minus(long m);
    // Pattern number `index`: bit k set means the k-th smallest prime is -1.
    static SignPattern from_index(long m, unsigned long index);
    static std::vector<SignPattern> all_patterns(long m);
    // "+-" (one symbol per prime, ascending) or "2:+,13:-"
    static SignPattern parse(long m, const std::string& text);

    SignValue sign(long p) const;
    std::string to_string() const;  // e.g. "2+13-"; "1" for the empty pattern
    bool operator==(const SignPattern&) const = default;
};

struct SignedEdge {
    size_t u = 0, v = 0;  // u <= v; u == v is a loop
    SignValue sign;
    long prime = 0;
};

struct SignedGraph {
    size_t vertex_count = 0;
    long modulus = 1;
    std::vector<SignedEdge> edges;
};

struct SIdealClassSet {
    std::vector<std::vector<size_t>> components;  // ordered by smallest vertex
    size_t t() const { return components.size(); }
};

struct Admissibility {
    bool admissible = false;
    std::vector<size_t> plus, minus;          // witness partition when admissible
    std::vector<SignedEdge> negative_cycle;   // closed walk with sign product -1 otherwise
};

SignedGraph build_graph(size_t h, const std::vector<Involution>& involutions, const SignPattern& chi);
SignedGraph build_graph(const ClassSet& cs, const std::vector<Involution>& involutions, const SignPattern& chi);

// Components; checks power-of-two sizes and size <= 2 fibers when the primes
// of the graph are added one at a time (ascending).
SIdealClassSet components(const SignedGraph& graph);

Admissibility admissible(const SignedGraph& graph, const std::vector<size_t>& component);

struct SClassNumbers {
    long modulus = 1;
    size_t h_bs = 0;
    std::vector<std::pair<SignPattern, size_t>> admissible_counts;  // in from_index order
};

SClassNumbers sclass_numbers(const ClassSet& cs, const std::vector<Involution>& involutions, long m);
size_t type_number(const ClassSet& cs, const std::vector<Involution>& involutions);

// dim of {phi in Q^h : phi o sigma_p = chi_p phi for all p | M}, by exact
// rank computation on the stacked permutation matrices.
size_t joint_eigenspace_dim(size_t h, const std::vector<Involution>& involutions, const SignPattern& chi);

const Involution& involution_for(const std::vector<Involution>& involutions, long p);

}  // namespace quatcong
