#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace polyjoin {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Coefficient ring tag: the integers, the rationals, or a prime field.
struct RingSpec {
    enum class Tag { Z, Q, Fp };
    Tag tag = Tag::Z;
    std::uint64_t p = 0;

    static RingSpec Z() { return {Tag::Z, 0}; }
    static RingSpec Q() { return {Tag::Q, 0}; }
    static RingSpec Fp(std::uint64_t p) {
        if (!is_prime(p)) throw unsupported_ring_error("modulus " + std::to_string(p) + " is not prime");
        return {Tag::Fp, p};
    }

    bool is_field() const { return tag != Tag::Z; }

    /// Accepts "Z", "Q", "F2", "F3", and "Fp:<p>".
    static RingSpec parse(std::string_view s) {
        if (s == "Z") return Z();
        if (s == "Q") return Q();
        if (s == "F2") return Fp(2);
        if (s == "F3") return Fp(3);
        if (s.rfind("Fp:", 0) == 0) {
            std::uint64_t p = 0;
            for (char c : s.substr(3)) {
                if (c < '0' || c > '9') throw unsupported_ring_error("bad ring spec: " + std::string(s));
                p = p * 10 + static_cast<std::uint64_t>(c - '0');
            }
            return Fp(p);
        }
        throw unsupported_ring_error("unknown ring: " + std::string(s));
    }

    std::string str() const {
        switch (tag) {
        case Tag::Z: return "Z";
        case Tag::Q: return "Q";
        case Tag::Fp: return p == 2 ? "F2" : p == 3 ? "F3" : "Fp:" + std::to_string(p);
        }
        return "?";
    }

    bool operator==(const RingSpec& o) const { return tag == o.tag && (tag != Tag::Fp || p == o.p); }
    bool operator!=(const RingSpec& o) const { return !(*this == o); }
};

} // namespace polyjoin
