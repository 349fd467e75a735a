#pragma once

#include "gradecs/abelian.hpp"
#include "gradecs/cyclotomic.hpp"
#include "gradecs/matrix.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gradecs {

// g(e_i) = zeta_m^{phases[i]} e_{perm[i]}, indices 0-based.
struct MonomialElement {
    std::vector<int> perm;
    IntVec phases;

    static MonomialElement identity(int r);
    int rank() const noexcept { return static_cast<int>(perm.size()); }
    bool is_identity() const;
    friend auto operator<=>(const MonomialElement&, const MonomialElement&) = default;
    friend bool operator==(const MonomialElement&, const MonomialElement&) = default;
};

// a after b, phases mod m.
MonomialElement compose(const MonomialElement& a, const MonomialElement& b, std::int64_t m);
MonomialElement inverse(const MonomialElement& g, std::int64_t m);
MonomialElement power(const MonomialElement& g, std::int64_t e, std::int64_t m);
std::int64_t element_order(const MonomialElement& g, std::int64_t m);
std::string to_string(const MonomialElement& g);

// s_ij^(k): e_i -> z^k e_j, e_j -> z^-k e_i.
MonomialElement transposition(int r, int i, int j, std::int64_t k, std::int64_t m);
// e_i -> z^k e_i.
MonomialElement diagonal(int r, int i, std::int64_t k, std::int64_t m);

// Hyperplane of a reflection: kind 'd' is x_i = 0, kind 't' is x_j = z^k x_i (i < j).
struct HyperplaneKey {
    char kind = 'd';
    int i = 0, j = 0;
    std::int64_t k = 0;
    friend auto operator<=>(const HyperplaneKey&, const HyperplaneKey&) = default;
    friend bool operator==(const HyperplaneKey&, const HyperplaneKey&) = default;
};
std::optional<HyperplaneKey> reflection_hyperplane(const MonomialElement& g, std::int64_t m);
std::string to_string(const HyperplaneKey& h);

struct DistinguishedReflection {
    MonomialElement element;
    HyperplaneKey hyperplane;
    std::int64_t order = 2;
    int orbit = 0;
};

class ReflectionGroup {
public:
    using Embedding = std::function<IntMatrix(const MonomialElement&)>;

    static ReflectionGroup build(std::int64_t m, std::int64_t p, int r);

    std::int64_t m() const noexcept { return m_; }
    std::int64_t p() const noexcept { return p_; }
    int r() const noexcept { return r_; }
    std::int64_t order() const;
    std::string name() const;

    bool contains(const MonomialElement& g) const;
    // s_1..s_{r-1} and the diagonal generator(s) in the standard presentation.
    std::vector<MonomialElement> generators() const;
    std::vector<MonomialElement> elements(std::int64_t bound = 1000000) const;
    // Closed-form list: s_ij^(k) and the diagonal distinguished reflections.
    const std::vector<DistinguishedReflection>& reflections() const noexcept { return reflections_; }
    int num_orbits() const noexcept { return num_orbits_; }
    // Hyperplane orbits recomputed by conjugation inside the enumerated group.
    std::vector<std::vector<HyperplaneKey>> orbits_by_enumeration(std::int64_t bound = 1000000) const;

    void attach_embedding(Embedding e) { embed_ = std::move(e); }
    bool has_embedding() const noexcept { return static_cast<bool>(embed_); }
    IntMatrix embed(const MonomialElement& g) const;

private:
    std::int64_t m_ = 1, p_ = 1;
    int r_ = 1;
    std::vector<DistinguishedReflection> reflections_;
    int num_orbits_ = 0;
    Embedding embed_;
};

// Conjugation action of the lift of g on a torus element.
TorusElement reflection_action_on_group(const ReflectionGroup& group, const MonomialElement& g,
                                        const TorusElement& x);

// Distinguished reflections of a finite monomial group, found from first principles.
std::vector<DistinguishedReflection> reflections_by_enumeration(const std::vector<MonomialElement>& elems,
                                                                std::int64_t m);

// One cyclotomic Hecke algebra factor.
struct HeckeRelation {
    std::string orbit;  // e.g. "transposition" or "diagonal"
    std::int64_t order = 2;
    UnitRootPoly relation;
};

struct HeckePresentation {
    std::string group;  // e.g. "G(4,1,2)"
    std::int64_t m = 1, p = 1;
    int r = 1;
    std::vector<HeckeRelation> relations;
    std::string label;  // "H^{a,b}(G(m,1,r))", "H^{m/2}(G(m,2,r))", "trivial(...)" or ""
};

// Checks degrees and recognizes the named families.
HeckePresentation assemble_hecke(std::int64_t m, std::int64_t p, int r, std::vector<HeckeRelation> relations);

// Labels of a tensor product of factors, in a stable order.
std::string hecke_product_label(const std::vector<HeckePresentation>& factors);

} // namespace gradecs
