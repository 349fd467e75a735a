#pragma once

#include "gradecs/matrix.hpp"
#include "gradecs/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace gradecs {

// A point of T = X_*(T) (x) Q/Z in lattice coordinates, entries kept in [0, 1).
using TorusElement = RatVec;

// Integer row in the dual lattice X^*(T); evaluates on a torus element into Q/Z.
using Weight = IntVec;

Rat pair(const Weight& phi, const TorusElement& t);

// Finite subgroup {t in T : A t = 0 in T} for an integer square matrix A of full rank,
// with invariant factors and explicit generators in T.
class FiniteAbelianGroup {
public:
    FiniteAbelianGroup() = default;
    static FiniteAbelianGroup kernel_of(const IntMatrix& A);

    std::size_t dim() const noexcept { return V_.rows(); }
    // d_1 | d_2 | ..., trivial factors dropped.
    const IntVec& invariant_factors() const noexcept { return factors_; }
    std::int64_t order() const;
    std::int64_t exponent() const;
    const std::vector<TorusElement>& generators() const noexcept { return gens_; }

    bool contains(const TorusElement& t) const;
    // Coordinates of t on generators(), each mod the matching factor.
    IntVec coordinates(const TorusElement& t) const;
    TorusElement element(const IntVec& coords) const;
    std::vector<TorusElement> elements() const;

    // Characters as coordinate vectors k: chi(g_i) = k_i / d_i.
    std::vector<IntVec> characters() const;
    Rat evaluate(const IntVec& chi, const TorusElement& t) const;
    // Integer weight restricting to chi, and the character of a weight.
    Weight weight_of(const IntVec& chi) const;
    IntVec character_of(const Weight& phi) const;

    void add_named(std::string name, TorusElement t);
    const std::vector<std::pair<std::string, TorusElement>>& named() const noexcept { return named_; }

private:
    IntVec factors_;
    std::vector<std::size_t> slots_;  // SNF positions of the nontrivial factors
    std::vector<TorusElement> gens_;
    IntMatrix V_, Vinv_;
    IntVec diagonal_;
    std::vector<std::pair<std::string, TorusElement>> named_;
};

TorusElement add(const TorusElement& a, const TorusElement& b);
TorusElement scale(std::int64_t k, const TorusElement& a);
TorusElement act(const IntMatrix& w, const TorusElement& t);
std::int64_t element_order(const TorusElement& t);

// Subgroup generated by a list of elements, as a sorted set.
std::vector<TorusElement> generated_subgroup(const std::vector<TorusElement>& gens);

std::string to_string(const TorusElement& t);

} // namespace gradecs
