#pragma once

#include "tsr/errors.hpp"

#include <cstdint>

namespace tsr {

// Arithmetic in the prime field F_p. Coefficients are kept in [0, p).
struct field_spec {
    std::uint32_t p;

    explicit field_spec(std::uint32_t prime = 2) : p(prime) {
        if (p < 2) throw domain_error("field characteristic must be a prime");
        for (std::uint32_t d = 2; d * d <= p; ++d)
            if (p % d == 0) throw domain_error(std::to_string(p) + " is not prime");
    }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return (a + b) % p; }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return (a + p - b) % p; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
    }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p - a; }

    std::uint32_t inv(std::uint32_t a) const {
        // Fermat: a^(p-2) mod p
        std::uint32_t result = 1, base = a % p, e = p - 2;
        while (e) {
            if (e & 1) result = mul(result, base);
            base = mul(base, base);
            e >>= 1;
        }
        return result;
    }

    // Reduces a signed integer coefficient into [0, p).
    std::uint32_t from_int(long long c) const {
        long long m = c % static_cast<long long>(p);
        if (m < 0) m += p;
        return static_cast<std::uint32_t>(m);
    }

    bool operator==(const field_spec&) const = default;
};

} // namespace tsr
