#pragma once

#include "gradecs/abelian.hpp"
#include "gradecs/matrix.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gradecs {

enum class TypeLabel { A, B, C, D, E6, E7, E8, F4, G2 };

std::string to_string(TypeLabel t);
// Accepts "A".."D", "E6", "F4", "G2"; a bare "E" needs the rank to pick E6/E7/E8.
std::optional<TypeLabel> parse_type(const std::string& s, int rank = 0);
bool valid_type_rank(TypeLabel t, int rank);
// Short name such as "B4" or "E6".
std::string type_name(TypeLabel t, int rank);

struct Root {
    IntVec coeffs;      // in simple roots
    IntVec functional;  // lambda -> <lambda, beta> on X_* coordinates
    IntVec coroot;      // in simple coroots
    int height = 0;
};

// Lattice automorphism of X_*(T) in simple-coroot coordinates.
class LatticeAut {
public:
    LatticeAut() = default;
    explicit LatticeAut(IntMatrix m, std::int64_t max_order = 1000);
    const IntMatrix& matrix() const noexcept { return m_; }
    std::int64_t order() const noexcept { return order_; }

private:
    IntMatrix m_;
    std::int64_t order_ = 1;
};

// Root datum of a simply connected group; X_* is the coroot lattice and every
// vector below is written in simple-coroot coordinates.
class RootDatum {
public:
    static RootDatum build(TypeLabel type, int rank);
    // Datum with pairing P(i, j) = <coroot_i, root_j>; type taken from identification.
    static RootDatum from_pairing(const IntMatrix& P);

    TypeLabel type() const noexcept { return type_; }
    int rank() const noexcept { return rank_; }
    std::string name() const { return type_name(type_, rank_); }
    // P(i, j) = <coroot_i, root_j>
    const IntMatrix& pairing() const noexcept { return P_; }
    const std::vector<Rat>& simple_lengths() const noexcept { return len2_; }

    // Positive roots by height (simple roots first, in order), then their negatives.
    const std::vector<Root>& roots() const noexcept { return roots_; }
    std::size_t num_positive() const noexcept { return roots_.size() / 2; }
    // Index of -beta.
    std::size_t negative(std::size_t i) const;
    std::optional<std::size_t> index_of_coroot(const IntVec& c) const;
    std::optional<std::size_t> index_of_coeffs(const IntVec& c) const;
    std::size_t highest_root() const noexcept { return num_positive() - 1; }
    const IntVec& marks() const { return roots_[highest_root()].coeffs; }
    std::size_t dim() const noexcept { return roots_.size() + rank_; }

    IntMatrix simple_reflection(int i) const;
    IntMatrix reflection(std::size_t root) const;
    // Image of root index under a lattice automorphism acting on coroots.
    std::size_t act_on_root(const IntMatrix& w, std::size_t root) const;
    std::vector<RatVec> fundamental_coweights() const;
    FiniteAbelianGroup center() const;
    std::int64_t weyl_order() const;
    RootDatum dual() const { return from_pairing(P_.transpose()); }

    // Classical realization: columns are simple coroots in epsilon coordinates.
    const IntMatrix& epsilon_coroots() const { return eps_; }
    bool classical() const noexcept { return type_ <= TypeLabel::D; }

private:
    void populate();

    TypeLabel type_ = TypeLabel::A;
    int rank_ = 0;
    IntMatrix P_;
    IntMatrix eps_;
    std::vector<Rat> len2_;
    std::vector<Root> roots_;
    std::map<IntVec, std::size_t> by_coroot_, by_coeffs_;
};

// Irreducible component of a Cartan-type pairing matrix.
struct Component {
    TypeLabel type;
    int rank;
    // labeling[k] = local index of the standard k-th simple root
    std::vector<int> labeling;
    std::string name() const { return type_name(type, rank); }
};
std::vector<Component> identify_components(const IntMatrix& P);
// Treats B2 = C2 and D3 = A3 as the same type.
bool same_type(TypeLabel a, int ra, TypeLabel b, int rb);

// Signed permutation: e_i -> sign[i] e_{image[i]}.
struct SignedPerm {
    std::vector<int> image;
    std::vector<int> sign;
    friend auto operator<=>(const SignedPerm&, const SignedPerm&) = default;
    friend bool operator==(const SignedPerm&, const SignedPerm&) = default;
};
SignedPerm compose(const SignedPerm& a, const SignedPerm& b);  // a after b
IntMatrix signed_perm_matrix(const SignedPerm& s);
// Weyl element of a classical datum given as a signed permutation of epsilons.
IntMatrix coroot_matrix(const RootDatum& datum, const SignedPerm& s);
// Inverse of coroot_matrix up to the -1 ambiguity in type A.
std::optional<SignedPerm> as_signed_perm(const RootDatum& datum, const IntMatrix& w);

// Epsilon-coordinate vector of the coroot lattice in simple-coroot coordinates.
IntVec eps_to_coroot(const RootDatum& datum, const IntVec& v);

// Compact identifier of a Weyl group element: root indices of the images of the simple coroots.
using WeylCode = std::uint64_t;
WeylCode weyl_code(const RootDatum& datum, const IntMatrix& w);
WeylCode weyl_code(const RootDatum& datum, const SignedPerm& s);

std::int64_t max_weyl_oracle_bound();
// All w in W commuting with theta, as sorted codes.
std::vector<WeylCode> weyl_centralizer_oracle(const RootDatum& datum, const LatticeAut& theta,
                                              std::int64_t bound);

} // namespace gradecs
