#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "geoconn/field.hpp"

namespace geoconn {

enum class OrderKind { Grevlex, Lex, Block };

/// Monomial order on a fixed variable list. Grevlex and Block compare the
/// weighted degree first, so both are graded orders for the ring's grading.
/// Block(k) eliminates the first k variables.
struct MonomialOrder {
    OrderKind kind = OrderKind::Grevlex;
    std::size_t block = 0;

    static MonomialOrder grevlex() { return {OrderKind::Grevlex, 0}; }
    static MonomialOrder lex() { return {OrderKind::Lex, 0}; }
    static MonomialOrder elimination_block(std::size_t k) { return {OrderKind::Block, k}; }

    bool operator==(const MonomialOrder&) const = default;
};

class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::uint32_t> exps) : e_(std::move(exps)) {}

    static Monomial one(std::size_t nvars) { return Monomial(std::vector<std::uint32_t>(nvars, 0)); }
    static Monomial variable(std::size_t nvars, std::size_t i, std::uint32_t exp = 1);

    std::size_t nvars() const { return e_.size(); }
    std::uint32_t exponent(std::size_t i) const { return e_[i]; }
    const std::vector<std::uint32_t>& exponents() const { return e_; }

    bool is_one() const;
    Monomial mul(const Monomial& o) const; // checked for overflow
    bool divides(const Monomial& o) const; // this | o
    Monomial divide(const Monomial& o) const; // this / o, o | this required
    Monomial lcm(const Monomial& o) const;
    bool coprime(const Monomial& o) const;
    Monomial power(std::uint32_t k) const;

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return e_ != o.e_; }

private:
    std::vector<std::uint32_t> e_;
};

/// The ambient graded polynomial ring: coefficient field, ordered variable
/// names, positive integer weights, and the active monomial order.
/// Immutable; shared by value semantics through RingPtr.
class RingContext {
public:
    RingContext(FieldPtr field, std::vector<std::string> variables,
                std::vector<std::uint32_t> weights = {},
                MonomialOrder order = MonomialOrder::grevlex());

    const FieldPtr& field() const { return field_; }
    std::size_t nvars() const { return vars_.size(); }
    const std::vector<std::string>& variables() const { return vars_; }
    const std::string& variable_name(std::size_t i) const { return vars_[i]; }
    std::uint32_t weight(std::size_t i) const { return weights_[i]; }
    const std::vector<std::uint32_t>& weights() const { return weights_; }
    const MonomialOrder& order() const { return order_; }

    /// Sum of the variable weights; the twist used for the duality strand.
    std::uint64_t sigma() const;

    int var_index(const std::string& name) const; // -1 when absent

    std::uint64_t weighted_degree(const Monomial& m) const;

    /// Three-way comparison under the ring's monomial order.
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

    bool operator==(const RingContext& o) const;

private:
    int cmp_grevlex(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) const;

    FieldPtr field_;
    std::vector<std::string> vars_;
    std::vector<std::uint32_t> weights_;
    MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const RingContext>;

RingPtr make_ring(FieldPtr field, std::vector<std::string> variables,
                  std::vector<std::uint32_t> weights = {},
                  MonomialOrder order = MonomialOrder::grevlex());

bool same_ring(const RingPtr& a, const RingPtr& b);

/// All monomials of the given weighted degree, sorted descending in the
/// ring's monomial order.
std::vector<Monomial> monomials_of_degree(const RingPtr& ctx, std::uint64_t degree);

} // namespace geoconn
