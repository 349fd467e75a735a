#pragma once

#include "gradecs/cyclotomic.hpp"
#include "gradecs/grading.hpp"

#include <functional>
#include <string>
#include <vector>

namespace gradecs {

// Character of I. coords are taken on I.generators(): chi(g_i) = coords_i / d_i.
struct TorusCharacter {
    IntVec coords;
    std::vector<Rat> values;  // on the named generators, in [0, 1)
    IntVec exponents;         // values scaled by the orders of the named generators

    bool trivial() const;
    friend bool operator==(const TorusCharacter& a, const TorusCharacter& b) { return a.coords == b.coords; }
};

TorusCharacter make_character(const FiniteAbelianGroup& I, IntVec coords);
Rat evaluate(const FiniteAbelianGroup& I, const TorusCharacter& chi, const TorusElement& t);
// All characters, sorted by exponent vector.
std::vector<TorusCharacter> enumerate_characters(const FiniteAbelianGroup& I);
// t -> chi(w t)
TorusCharacter pull_back(const FiniteAbelianGroup& I, const TorusCharacter& chi, const IntMatrix& w);
// "gamma1=-1, gamma2=1" with values as roots of unity.
std::string describe(const FiniteAbelianGroup& I, const TorusCharacter& chi);

struct CharacterOrbit {
    TorusCharacter rep;  // lexicographically smallest exponent vector
    std::vector<TorusCharacter> members;
};
std::vector<CharacterOrbit> orbit_representatives(const FiniteAbelianGroup& I, const std::vector<IntMatrix>& gens);

// Rank-one data read off a theta-stable root subsystem: k simple factors permuted cyclically,
// with theta^k acting on the first factor through a diagram automorphism of order twist.
struct RankOneType {
    int components = 0;
    TypeLabel type = TypeLabel::A;
    int rank = 0;
    int twist = 1;
    std::vector<std::size_t> simple;          // root indices of the first factor, standard order
    std::vector<std::size_t> all_simple;      // root indices of every factor
    std::vector<std::vector<int>> node_orbits;
    IntVec marks;                             // one per node orbit
    std::string tag() const;
    std::int64_t coxeter_degree() const;      // 1 + sum of marks
};

// Simple roots of a closed subsystem w.r.t. the ambient positive system; with dual set,
// indecomposability is read on coroots.
std::vector<std::size_t> subsystem_simple_roots(const RootDatum& datum, const std::vector<std::size_t>& subsystem,
                                                bool dual);
// Cartan-type pairing matrix of those simple roots (of the coroot system when dual).
IntMatrix subsystem_pairing(const RootDatum& datum, const std::vector<std::size_t>& simple, bool dual);

// subsystem: root indices, closed under negation and theta. With dual set, the roles of roots
// and coroots are exchanged.
RankOneType classify_rank_one(const RootDatum& datum, const std::vector<std::size_t>& theta_on_roots,
                              const std::vector<std::size_t>& subsystem, bool dual);

// (x - 1) prod_i (x^{n_i} - exp(-2 pi i v_i)).
UnitRootPoly rank_one_polynomial(const IntVec& marks, const std::vector<Rat>& values);
// chi is given by its value on torus elements (in Q/Z).
using CenterCharacter = std::function<Rat(const TorusElement&)>;
UnitRootPoly coxeter_monodromy(const RootDatum& datum, const CenterCharacter& chi);
UnitRootPoly twisted_coxeter_monodromy(const RootDatum& datum, int twist, const CenterCharacter& chi);

struct RankOneReduction {
    std::size_t reflection = 0;   // index into Wa.reflections()
    std::int64_t order = 2;
    std::vector<std::size_t> roots;
    RankOneType kind;
    std::vector<TorusElement> delta;  // images of the gamma-bar's, one per node orbit
    std::vector<TorusElement> Is;     // elements of I_s
};

struct ReflectionMonodromy {
    UnitRootPoly R;
    std::int64_t e = 1;
    UnitRootPoly Rbar;
};

// Factor G(c,p,b) of a reflection subgroup acting on the listed coordinates.
struct SubgroupBlock {
    std::vector<int> coords;
    std::int64_t c = 1, p = 1;
    std::int64_t order() const;
    std::string name() const;
    bool trivial() const { return order() == 1; }
};

// Reflection subgroup of W_a generated by s_h^{power[h]}; power[h] >= order(h) drops h.
struct ReflectionSubgroup {
    std::vector<std::int64_t> power;
    std::vector<SubgroupBlock> blocks;
    std::vector<std::vector<std::size_t>> hyperplane_orbits;  // indices into Wa.reflections()
    std::vector<int> orbit_block;                             // block of each orbit
    std::int64_t order() const;
    std::string name() const;  // product of nontrivial blocks, "1" if none
};
ReflectionSubgroup reflection_subgroup(const ReflectionGroup& Wa, std::vector<std::int64_t> power);

struct StabilizerData {
    TorusCharacter chi;
    std::int64_t orbit_size = 1;
    std::int64_t stabilizer_order = 1;        // |W_{a,chi}|
    std::vector<ReflectionMonodromy> mono;    // aligned with Wa.reflections()
    ReflectionSubgroup w0;
    std::int64_t quotient_order() const { return stabilizer_order / w0.order(); }
};

struct MchiDescriptor {
    TorusCharacter chi;
    std::int64_t induction_index = 1;
    std::vector<HeckePresentation> hecke;  // nontrivial factors only
    std::string label;
    std::int64_t total_rank = 1;
    bool tau_trivial = true;
};

// Per-grading character analysis. Holds the rank-one reductions of every distinguished reflection.
class CharacterAnalysis {
public:
    explicit CharacterAnalysis(Grading g);

    const Grading& grading() const noexcept { return g_; }
    const std::vector<RankOneReduction>& reductions() const noexcept { return red_; }
    const std::vector<CharacterOrbit>& orbits() const noexcept { return orbits_; }
    const std::vector<IntMatrix>& reflection_matrices() const noexcept { return refl_; }

    // Smallest e >= 1 with s^e fixing chi.
    std::int64_t stabilizing_power(std::size_t refl, const TorusCharacter& chi) const;
    ReflectionMonodromy reflection_monodromy(std::size_t refl, const TorusCharacter& chi) const;
    StabilizerData stabilizer_data(const TorusCharacter& chi) const;
    MchiDescriptor build_mchi(const StabilizerData& st) const;

private:
    Grading g_;
    std::vector<IntMatrix> refl_;
    std::vector<RankOneReduction> red_;
    std::vector<CharacterOrbit> orbits_;
};

// Order-independent form of a Hecke factor for comparing labels up to the G(c,p,1) = G(c/p,1,1) identification.
std::string canonical_hecke(const HeckePresentation& h);
std::vector<std::string> canonical_hecke_product(const std::vector<HeckePresentation>& factors);

} // namespace gradecs
