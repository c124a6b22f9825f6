#pragma once

#include "quatcong/f2.hpp"
#include "quatcong/level.hpp"
#include "quatcong/sgraph.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace quatcong {

// Saturated sublattice of Z^h, basis as rows.
struct IntegralLattice {
    size_t ambient_rank = 0;
    IntMatrix basis;
    bool stable = false;  // checked against the Brandt matrices and involutions it was built with

    size_t rank() const { return basis.rows(); }
    IntVector vector(size_t i) const { return basis.row(i); }
    bool contains(const IntVector& v) const;
};

IntegralLattice full_lattice(size_t h);
IntegralLattice chi_lattice(const ClassSet& cs, const std::vector<Involution>& involutions, const SignPattern& chi);
IntegralLattice chi_lattice(const LevelData& d, const SignPattern& chi);
// Elements of the lattice orthogonal to the constants for the 2/|Gamma_i| weights.
IntegralLattice cuspidal_sublattice(const ClassSet& cs, const IntegralLattice& lattice);
bool check_stable(const IntegralLattice& lattice, const std::vector<BrandtMatrix>& brandt,
                  const std::vector<Involution>& involutions);

// Reduction mod 2 of a lattice, as a subspace of F2^h.
std::vector<F2Vec> reduce_mod2(const IntegralLattice& lattice);
F2Matrix reduce_mod2(const BrandtMatrix& b);

// A joint generalized eigenspace for the unramified Hecke operators mod 2
// on which the generated algebra is local.
struct Mod2Eigensystem {
    std::vector<F2Vec> subspace;          // in F2^h
    std::map<long, F2Poly> eigendata;     // p -> irreducible radical of the minimal polynomial of T_p
    size_t dimension() const { return subspace.size(); }
    size_t residue_degree() const;
    bool is_eisenstein() const;           // T_p acts with minimal radical x + (p + 1)
    std::string label() const;            // "2:x+1,3:x^2+x+1,..."
};

std::vector<Mod2Eigensystem> mod2_eigensystems(const IntegralLattice& lattice, const std::vector<BrandtMatrix>& brandt);
std::vector<Mod2Eigensystem> mod2_eigensystems(const std::vector<F2Vec>& subspace, size_t h,
                                               const std::vector<BrandtMatrix>& brandt);

// Dimension of the generalized eigenspace of `sys` inside the reduction of
// `lattice` (0 when it does not occur).
size_t multiplicity_in(const Mod2Eigensystem& sys, const IntegralLattice& lattice,
                       const std::vector<BrandtMatrix>& brandt);
bool occurs_in(const Mod2Eigensystem& sys, const IntegralLattice& lattice, const std::vector<BrandtMatrix>& brandt);

struct FlipResult {
    std::optional<IntVector> value;
    size_t refused_component = 0;
    std::vector<SignedEdge> negative_cycle;  // certificate when refused
};

// Rebuilds phi on each chi-component from its smallest vertex by the sign
// rule. Refuses if phi is nonzero on a chi-inadmissible component.
FlipResult flip_construct(const IntVector& phi, const SignPattern& source, const SignPattern& target,
                          const ClassSet& cs, const std::vector<Involution>& involutions);

enum class Statement { thm1, thm2, prop54, prop55 };
std::string to_string(Statement s);
Statement parse_statement(const std::string& s);

struct Witness {
    std::string kind;
    std::string detail;
    std::vector<long> values;
};

struct CongruenceReport {
    long level = 0;
    long modulus = 1;
    Statement statement = Statement::thm2;
    bool hypothesis_ok = false;
    bool verified = false;
    std::map<std::string, bool> checks;
    std::vector<Witness> witnesses;
    std::vector<std::string> notes;
};

bool is_even_product_of_three_primes(long n);

CongruenceReport verify_thm1(const LevelData& d, long m);
CongruenceReport verify_thm2(const LevelData& d);

struct EisensteinConstruction {
    CongruenceReport report;
    std::optional<IntVector> form;  // phi' when the hypotheses hold
};
EisensteinConstruction eisenstein_congruence_construct(const LevelData& d);

// Runs the fixed-point cuspidality argument at every p | N failing the
// fixed-point-free criteria.
CongruenceReport cuspidal_witness(const LevelData& d);

}  // namespace quatcong
