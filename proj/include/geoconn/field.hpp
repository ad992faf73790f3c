#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "geoconn/errors.hpp"

namespace geoconn {

/// Element of a finite field F_q, q = p^e. The raw value packs the
/// coefficient vector of the residue base p: raw = sum c_i * p^i. For prime
/// fields this is just the canonical residue.
struct Fq {
    std::uint32_t raw = 0;
    friend bool operator==(Fq a, Fq b) { return a.raw == b.raw; }
    friend bool operator!=(Fq a, Fq b) { return a.raw != b.raw; }
    friend bool operator<(Fq a, Fq b) { return a.raw < b.raw; }
};

/// Arithmetic context for F_q = F_p[t]/(modulus), q = p^e. Elements are
/// plain Fq values; every operation goes through the field object. All
/// operations are exact; immutable after construction and safe to share
/// across threads.
///
/// The modulus for e > 1 is the lexicographically least monic irreducible
/// polynomial of degree e over F_p, "least" meaning the smallest packed
/// value sum c_i p^i of the non-leading coefficients. This makes results
/// reproducible bit-for-bit for every (p, e). For (3, 2) it is t^2 + 1.
class Field {
public:
    explicit Field(std::uint32_t p);
    Field(std::uint32_t p, std::uint32_t e);
    // Explicit modulus: coefficients c_0..c_{e-1} of a monic degree-e
    // polynomial; must be irreducible over F_p.
    Field(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus);

    std::uint32_t characteristic() const { return p_; }
    std::uint32_t extension_degree() const { return e_; }
    std::uint64_t size() const { return q_; }
    /// Non-leading modulus coefficients c_0..c_{e-1}; empty when e = 1.
    const std::vector<std::uint32_t>& modulus() const { return mod_; }

    Fq zero() const { return Fq{0}; }
    Fq one() const { return Fq{1}; }
    /// The class of t, e > 1 only.
    Fq generator_element() const;
    /// Image of an integer under Z -> F_p -> F_q.
    Fq from_int(std::int64_t v) const;
    Fq element(std::uint64_t packed) const;

    bool is_zero(Fq a) const { return a.raw == 0; }

    Fq add(Fq a, Fq b) const;
    Fq sub(Fq a, Fq b) const;
    Fq neg(Fq a) const;
    Fq mul(Fq a, Fq b) const;
    Fq inv(Fq a) const;
    Fq div(Fq a, Fq b) const;
    Fq pow(Fq a, std::uint64_t k) const;

    /// c -> c^p; a field automorphism (finite fields are perfect).
    Fq frobenius(Fq a) const;
    /// The unique d with d^p = c; inverse of frobenius.
    Fq pth_root(Fq a) const;

    /// Base-p coefficient vector of length e.
    std::vector<std::uint32_t> digits(Fq a) const;
    std::string to_string(Fq a) const;

    bool operator==(const Field& o) const {
        return p_ == o.p_ && e_ == o.e_ && mod_ == o.mod_;
    }

private:
    void build_tables();
    std::vector<std::uint32_t> unpack(std::uint32_t v) const;
    std::uint32_t pack(const std::vector<std::uint32_t>& c) const;
    std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const;

    std::uint32_t p_ = 0;
    std::uint32_t e_ = 1;
    std::uint64_t q_ = 0;
    std::vector<std::uint32_t> mod_;
    // discrete log tables for e > 1 (exp_[k] = g^k packed, log_[packed] = k)
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
};

using FieldPtr = std::shared_ptr<const Field>;

FieldPtr make_field(std::uint32_t p, std::uint32_t e = 1);

} // namespace geoconn
