#include "geoconn/field.hpp"

#include <algorithm>

namespace geoconn {

namespace {

constexpr std::uint64_t kMaxExtensionSize = 1ull << 22;

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Coefficients low to high, over F_p. Leading coefficient assumed nonzero.
using PolyFp = std::vector<std::uint32_t>;

PolyFp poly_mod(PolyFp a, const PolyFp& b, std::uint32_t p) {
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        std::uint64_t lead = a.back();
        if (lead != 0) {
            // b is monic in every call site
            std::size_t shift = a.size() - 1 - db;
            for (std::size_t i = 0; i <= db; ++i) {
                std::uint64_t t = (std::uint64_t)b[i] * lead % p;
                a[shift + i] = (std::uint32_t)((a[shift + i] + p - t) % p);
            }
        }
        a.pop_back();
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

bool divides(const PolyFp& divisor, const PolyFp& f, std::uint32_t p) {
    return poly_mod(f, divisor, p).empty();
}

// Monic polynomial of degree e from packed non-leading coefficients.
PolyFp monic_from_value(std::uint64_t v, std::uint32_t e, std::uint32_t p) {
    PolyFp f(e + 1, 0);
    for (std::uint32_t i = 0; i < e; ++i) {
        f[i] = (std::uint32_t)(v % p);
        v /= p;
    }
    f[e] = 1;
    return f;
}

bool is_irreducible(const PolyFp& f, std::uint32_t p) {
    const std::uint32_t e = (std::uint32_t)f.size() - 1;
    for (std::uint32_t d = 1; 2 * d <= e; ++d) {
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t v = 0; v < count; ++v) {
            if (divides(monic_from_value(v, d, p), f, p)) return false;
        }
    }
    return true;
}

std::vector<std::uint32_t> canonical_modulus(std::uint32_t p, std::uint32_t e) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < e; ++i) count *= p;
    for (std::uint64_t v = 0; v < count; ++v) {
        PolyFp f = monic_from_value(v, e, p);
        if (is_irreducible(f, p)) {
            f.pop_back();
            return f;
        }
    }
    throw internal_error("no irreducible modulus found");
}

} // namespace

Field::Field(std::uint32_t p) : Field(p, 1) {}

Field::Field(std::uint32_t p, std::uint32_t e) {
    if (!is_prime(p)) throw value_error("field characteristic must be prime");
    if (e < 1) throw value_error("extension degree must be >= 1");
    p_ = p;
    e_ = e;
    q_ = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        q_ *= p;
        if (e > 1 && q_ > kMaxExtensionSize)
            throw value_error("extension field too large");
    }
    if (e > 1) {
        mod_ = canonical_modulus(p, e);
        build_tables();
    }
}

Field::Field(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus) {
    if (!is_prime(p)) throw value_error("field characteristic must be prime");
    if (e < 2) throw value_error("explicit modulus requires e >= 2");
    if (modulus.size() != e) throw value_error("modulus must list e coefficients");
    p_ = p;
    e_ = e;
    q_ = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        q_ *= p;
        if (q_ > kMaxExtensionSize) throw value_error("extension field too large");
    }
    for (auto& c : modulus) c %= p;
    PolyFp f = modulus;
    f.push_back(1);
    if (!is_irreducible(f, p)) throw value_error("modulus is reducible");
    mod_ = std::move(modulus);
    build_tables();
}

std::vector<std::uint32_t> Field::unpack(std::uint32_t v) const {
    std::vector<std::uint32_t> c(e_, 0);
    for (std::uint32_t i = 0; i < e_; ++i) {
        c[i] = v % p_;
        v /= p_;
    }
    return c;
}

std::uint32_t Field::pack(const std::vector<std::uint32_t>& c) const {
    std::uint32_t v = 0;
    for (std::uint32_t i = e_; i-- > 0;) v = v * p_ + c[i];
    return v;
}

std::uint32_t Field::mul_slow(std::uint32_t a, std::uint32_t b) const {
    auto ca = unpack(a);
    auto cb = unpack(b);
    std::vector<std::uint32_t> prod(2 * e_ - 1, 0);
    for (std::uint32_t i = 0; i < e_; ++i)
        for (std::uint32_t j = 0; j < e_; ++j)
            prod[i + j] = (std::uint32_t)((prod[i + j] + (std::uint64_t)ca[i] * cb[j]) % p_);
    // reduce by x^e = -mod_
    for (std::uint32_t k = 2 * e_ - 2; k >= e_; --k) {
        std::uint64_t lead = prod[k];
        if (lead) {
            prod[k] = 0;
            for (std::uint32_t i = 0; i < e_; ++i) {
                std::uint64_t t = (std::uint64_t)mod_[i] * lead % p_;
                prod[k - e_ + i] = (std::uint32_t)((prod[k - e_ + i] + p_ - t) % p_);
            }
        }
        if (k == e_) break;
    }
    prod.resize(e_);
    return pack(prod);
}

void Field::build_tables() {
    // factor q-1
    std::vector<std::uint64_t> primes;
    std::uint64_t m = q_ - 1;
    for (std::uint64_t d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            primes.push_back(d);
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) primes.push_back(m);

    auto pow_slow = [&](std::uint32_t a, std::uint64_t k) {
        std::uint32_t r = 1, base = a;
        while (k) {
            if (k & 1) r = mul_slow(r, base);
            base = mul_slow(base, base);
            k >>= 1;
        }
        return r;
    };

    std::uint32_t gen = 0;
    for (std::uint32_t g = 2; g < q_; ++g) {
        bool ok = true;
        for (std::uint64_t pr : primes) {
            if (pow_slow(g, (q_ - 1) / pr) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            gen = g;
            break;
        }
    }
    if (gen == 0) throw internal_error("no multiplicative generator found");

    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    std::uint32_t acc = 1;
    for (std::uint64_t k = 0; k < q_ - 1; ++k) {
        exp_[k] = acc;
        log_[acc] = (std::uint32_t)k;
        acc = mul_slow(acc, gen);
    }
}

Fq Field::generator_element() const {
    if (e_ == 1) throw value_error("prime field has no extension generator");
    return Fq{(std::uint32_t)p_}; // the class of t packs as p
}

Fq Field::from_int(std::int64_t v) const {
    std::int64_t r = v % (std::int64_t)p_;
    if (r < 0) r += p_;
    return Fq{(std::uint32_t)r};
}

Fq Field::element(std::uint64_t packed) const {
    if (packed >= q_) throw value_error("element value out of range");
    return Fq{(std::uint32_t)packed};
}

Fq Field::add(Fq a, Fq b) const {
    if (e_ == 1) return Fq{(std::uint32_t)(((std::uint64_t)a.raw + b.raw) % p_)};
    std::uint32_t out = 0, mul = 1;
    std::uint32_t x = a.raw, y = b.raw;
    for (std::uint32_t i = 0; i < e_; ++i) {
        std::uint32_t s = (x % p_ + y % p_) % p_;
        out += s * mul;
        mul *= p_;
        x /= p_;
        y /= p_;
    }
    return Fq{out};
}

Fq Field::neg(Fq a) const {
    if (e_ == 1) return Fq{a.raw == 0 ? 0 : p_ - a.raw};
    std::uint32_t out = 0, mul = 1;
    std::uint32_t x = a.raw;
    for (std::uint32_t i = 0; i < e_; ++i) {
        std::uint32_t d = x % p_;
        out += (d == 0 ? 0 : p_ - d) * mul;
        mul *= p_;
        x /= p_;
    }
    return Fq{out};
}

Fq Field::sub(Fq a, Fq b) const { return add(a, neg(b)); }

Fq Field::mul(Fq a, Fq b) const {
    if (e_ == 1) return Fq{(std::uint32_t)((std::uint64_t)a.raw * b.raw % p_)};
    if (a.raw == 0 || b.raw == 0) return Fq{0};
    std::uint64_t k = (std::uint64_t)log_[a.raw] + log_[b.raw];
    if (k >= q_ - 1) k -= q_ - 1;
    return Fq{exp_[k]};
}

Fq Field::inv(Fq a) const {
    if (a.raw == 0) throw value_error("division by zero");
    if (e_ == 1) return pow(a, p_ - 2);
    std::uint64_t k = log_[a.raw];
    return Fq{exp_[(q_ - 1 - k) % (q_ - 1)]};
}

Fq Field::div(Fq a, Fq b) const { return mul(a, inv(b)); }

Fq Field::pow(Fq a, std::uint64_t k) const {
    if (a.raw == 0) return k == 0 ? one() : zero();
    if (e_ == 1) {
        // a != 0, so reduce the exponent mod the group order p-1
        std::uint64_t r = 1, base = a.raw, kk = k % (p_ - 1);
        while (kk) {
            if (kk & 1) r = r * base % p_;
            base = base * base % p_;
            kk >>= 1;
        }
        return Fq{(std::uint32_t)r};
    }
    std::uint64_t l = (std::uint64_t)log_[a.raw] % (q_ - 1);
    std::uint64_t kk = k % (q_ - 1);
    return Fq{exp_[l * kk % (q_ - 1)]};
}

Fq Field::frobenius(Fq a) const {
    if (e_ == 1) return a;
    return pow(a, p_);
}

Fq Field::pth_root(Fq a) const {
    if (e_ == 1) return a;
    // (a^(p^(e-1)))^p = a^(p^e) = a
    std::uint64_t k = 1;
    for (std::uint32_t i = 0; i + 1 < e_; ++i) k *= p_;
    return pow(a, k);
}

std::vector<std::uint32_t> Field::digits(Fq a) const { return unpack(a.raw); }

std::string Field::to_string(Fq a) const {
    if (e_ == 1) return std::to_string(a.raw);
    auto c = unpack(a.raw);
    std::string s;
    for (std::uint32_t i = e_; i-- > 0;) {
        if (c[i] == 0) continue;
        if (!s.empty()) s += "+";
        if (i == 0) {
            s += std::to_string(c[i]);
        } else {
            if (c[i] != 1) s += std::to_string(c[i]) + "*";
            s += "t";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s.empty() ? "0" : s;
}

FieldPtr make_field(std::uint32_t p, std::uint32_t e) {
    return std::make_shared<Field>(p, e);
}

} // namespace geoconn
