#pragma once

#include "gradecs/abelian.hpp"
#include "gradecs/reflgroup.hpp"
#include "gradecs/rootdata.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gradecs {

// Row families of the stable-grading table.
enum class Family {
    AInner,    // SL(N), Coxeter
    AOuterN,   // N = r d
    AOuterN1,  // N = r d + 1, d > 1
    B,
    C,
    D1,        // n = r l
    D2,        // n = r l + 1, l > 1
    D43,       // triality, m = 12
    E62,       // twisted E6, m = 18
    Exceptional,  // Coxeter gradings of G2, F4, E6, E7, E8
};
std::string family_tag(Family f);

struct GradingDescriptor {
    TypeLabel type = TypeLabel::A;
    int n = 1;
    std::int64_t m = 1;
    int twist = 1;
    int r = 1;
    Family family = Family::AInner;

    // Block length: l for B/C/D, d for outer A, N for inner A, 1 otherwise.
    int block() const;
    // Dimension of the Cartan subspace (differs from r only for the d = 1 outer A row).
    int cartan_rank() const;
    // Parameters of the little Weyl group G(mw, p, r).
    std::int64_t weyl_m() const;
    std::int64_t weyl_p() const;
    bool rank_one() const noexcept { return r == 1 && weyl_rank() == 1; }
    int weyl_rank() const noexcept { return r; }

    std::string key() const;
    friend bool operator==(const GradingDescriptor&, const GradingDescriptor&) = default;
};

std::vector<GradingDescriptor> enumerate_stable_gradings(TypeLabel type, int rank);
// Accepts the full key or the short form "T:n=..:m=..", matching against the table.
GradingDescriptor parse_case_key(const std::string& key);

// Signed-permutation data for the classical little Weyl group embeddings.
struct ClassicalEmbedding {
    int block = 1;
    int blocks = 1;
    std::vector<SignedPerm> tau;  // image of the j-th diagonal generator
    int extra_sign = -1;          // epsilon index negated once per unit of total phase
    SignedPerm operator()(const MonomialElement& g, std::int64_t m) const;
};

struct GradedAutomorphism {
    GradingDescriptor desc;
    RootDatum datum;
    LatticeAut theta;
    IntMatrix diagram;   // pinned diagram automorphism
    IntMatrix w;         // theta = w * diagram
    std::string word;    // how theta was built
    std::optional<SignedPerm> eps_theta;
    std::optional<ClassicalEmbedding> classical;
    // Generator of the cyclic little Weyl group in the non-classical rank-one cases.
    IntMatrix cyclic_generator;
};

GradedAutomorphism realize_theta(const GradingDescriptor& desc);

struct Grading {
    GradedAutomorphism aut;
    std::vector<int> eigenspace_dims;      // dim g_i, i in Z/m
    std::vector<int> torus_dims;           // dim t_i
    std::vector<std::size_t> theta_on_roots;
    std::vector<std::vector<std::size_t>> root_orbits;
    FiniteAbelianGroup I;
    ReflectionGroup Wa;
    IntVec marks_used;                     // n_i (inner rank one) or twisted marks per simple root
    std::vector<std::vector<int>> diagram_orbits;

    const RootDatum& datum() const { return aut.datum; }
    const GradingDescriptor& desc() const { return aut.desc; }
    const IntMatrix& theta() const { return aut.theta.matrix(); }
    std::int64_t m() const { return aut.desc.m; }
    // Lattice image of a little Weyl group element.
    IntMatrix embed(const MonomialElement& g) const { return Wa.embed(g); }
    WeylCode code(const MonomialElement& g) const;
};

Grading build_grading(const GradingDescriptor& desc);

// Named generators of I from the closed forms, in simple-coroot coordinates.
std::vector<std::pair<std::string, TorusElement>> lemma_generators(const GradingDescriptor& desc);
// Standard generators of Z(G) (inner) or Z(G)^diagram (twisted) used by the rank-one formulas.
std::vector<std::pair<std::string, TorusElement>> center_generators(TypeLabel type, int n, int twist);
// gamma-bar_i: images of the fundamental coweights in Z(G), summed over diagram orbits when twisted.
std::vector<TorusElement> center_image_generators(const RootDatum& datum,
                                                  const std::vector<std::vector<int>>& diagram_orbits);

// Orbits of the standard diagram automorphism of the given order, nodes 0-based.
std::vector<std::vector<int>> standard_diagram_orbits(TypeLabel type, int n, int twist);
// Coefficient of an orbit in the restricted highest root (plain mark when twist = 1).
std::int64_t twisted_mark(TypeLabel type, int n, int twist, const std::vector<int>& orbit);

// Element set of the embedded little Weyl group, as sorted Weyl codes.
std::vector<WeylCode> little_weyl_group_codes(const Grading& g, std::int64_t bound = 2000000);
// Compares with weyl_centralizer_oracle; throws OracleDisagreement on mismatch.
void check_little_weyl_group(const Grading& g, std::int64_t bound);

} // namespace gradecs
