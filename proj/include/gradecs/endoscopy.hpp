#pragma once

#include "gradecs/charmono.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gradecs {

enum class CheckStatus { pass, fail, unchecked };
std::string to_string(CheckStatus s);

// Roots and coroots exchanged; theta acts on X^*(T) through its adjoint.
struct DualDatum {
    RootDatum datum;
    IntMatrix theta;
};
DualDatum make_dual(const Grading& g);

// Element of X^*(T) (x) Q/Z in fundamental-weight coordinates, fixed by the transpose of theta,
// whose linking pairing with I reproduces chi.
RatVec char_to_dual_torus(const Grading& g, const TorusCharacter& chi);

// Whether w lies in the Weyl group of the root subsystem (given as root indices).
bool in_subsystem_weyl_group(const RootDatum& datum, const std::vector<std::size_t>& subsystem, const IntMatrix& w);

struct EndoscopyReport {
    TorusCharacter chi;
    RatVec y;
    std::vector<std::size_t> dual_roots;  // alpha with alpha-check(y) = 1
    std::vector<Component> components;    // of the dual subsystem
    std::string dual_type;                // e.g. "D4 x B2", "1" if empty
    std::optional<std::int64_t> component_group_order;
    std::vector<std::int64_t> d;          // per distinguished reflection
    ReflectionSubgroup wen;
    std::vector<CheckStatus> mono2, min_mono;  // per distinguished reflection
    std::vector<std::string> notes;
    bool divisibility = true;  // e_s | d_s everywhere
};

EndoscopyReport endoscopy_group(const CharacterAnalysis& ca, const StabilizerData& st,
                                std::int64_t orbit_bound = 2000000);

} // namespace gradecs
