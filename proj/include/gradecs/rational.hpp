#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace gradecs {

using Rat = boost::rational<std::int64_t>;
using RatVec = std::vector<Rat>;
using IntVec = std::vector<std::int64_t>;

// Representative of q mod 1 in [0, 1).
inline Rat frac(Rat q) {
    std::int64_t n = q.numerator(), d = q.denominator();
    std::int64_t r = ((n % d) + d) % d;
    return Rat(r, d);
}

inline RatVec frac(const RatVec& v) {
    RatVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = frac(v[i]);
    return out;
}

inline bool is_integral(Rat q) { return q.denominator() == 1; }

inline bool is_integral(const RatVec& v) {
    for (const auto& q : v)
        if (q.denominator() != 1) return false;
    return true;
}

inline std::int64_t lcm_den(const RatVec& v) {
    std::int64_t l = 1;
    for (const auto& q : v) l = std::lcm(l, q.denominator());
    return l;
}

// Order of q in Q/Z.
inline std::int64_t order_mod1(Rat q) { return frac(q).denominator(); }

inline std::string to_string(Rat q) {
    if (q.denominator() == 1) return std::to_string(q.numerator());
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

inline RatVec to_rat(const IntVec& v) { return RatVec(v.begin(), v.end()); }

inline std::int64_t mod_floor(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

} // namespace gradecs
