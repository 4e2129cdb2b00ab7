#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ingraph/errors.hpp"

namespace ingraph {

class FqElem;

namespace fqdetail {

/// Immutable payload behind Fq handles: field parameters plus dense
/// operation tables for small orders.
struct FieldRep {
    uint32_t p = 0;
    unsigned m = 0;
    uint32_t q = 0;
    std::vector<uint32_t> modulus;  // c0..cm, c_m = 1
    uint32_t generator = 0;

    bool tabled = false;
    std::vector<uint32_t> mul_table;   // q*q
    std::vector<uint32_t> inv_table;   // q
    std::vector<uint32_t> frob_table;  // m*q

    void check_value(uint32_t a) const {
        if (a >= q)
            throw UsageError("encoded value " + std::to_string(a) + " outside field of order " +
                             std::to_string(q));
    }

    uint32_t add(uint32_t a, uint32_t b) const {
        check_value(a);
        check_value(b);
        if (m == 1) {
            const uint64_t s = static_cast<uint64_t>(a) + b;
            return static_cast<uint32_t>(s >= q ? s - q : s);
        }
        if (p == 2) return a ^ b;
        uint32_t r = 0, mult = 1;
        while (a != 0 || b != 0) {
            r += (a % p + b % p) % p * mult;
            a /= p;
            b /= p;
            mult *= p;
        }
        return r;
    }

    uint32_t neg(uint32_t a) const {
        check_value(a);
        if (m == 1) return a == 0 ? 0 : q - a;
        if (p == 2) return a;
        uint32_t r = 0, mult = 1;
        while (a != 0) {
            const uint32_t d = a % p;
            r += (d == 0 ? 0 : p - d) * mult;
            a /= p;
            mult *= p;
        }
        return r;
    }

    uint32_t mul(uint32_t a, uint32_t b) const {
        check_value(a);
        check_value(b);
        if (tabled) return mul_table[static_cast<size_t>(a) * q + b];
        return mul_nocache(a, b);
    }

    uint32_t pow(uint32_t a, uint64_t e) const {
        check_value(a);
        uint32_t r = 1, base = a;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    uint32_t inv(uint32_t a) const {
        check_value(a);
        if (a == 0) throw DomainError("zero has no multiplicative inverse");
        if (tabled) return inv_table[a];
        return pow(a, static_cast<uint64_t>(q) - 2);
    }

    uint32_t frobenius(uint32_t a, unsigned t) const {
        check_value(a);
        if (t >= m) throw UsageError("Frobenius exponent " + std::to_string(t) + " outside [0, m)");
        if (tabled) return frob_table[static_cast<size_t>(t) * q + a];
        uint32_t r = a;
        for (unsigned i = 0; i < t; ++i) r = pow(r, p);
        return r;
    }

    uint32_t mul_nocache(uint32_t a, uint32_t b) const;
    void finish_init();  // tables and generator
};

/// Exhaustive check that `poly` (coefficients low-first, any degree >= 1)
/// has no monic divisor of degree 1..deg/2 over F_p. Trial division only.
bool is_irreducible(uint32_t p, const std::vector<uint32_t>& poly);

} // namespace fqdetail

/// The finite field F_q with q = p^m, realized as F_p[x]/(modulus).
///
/// Elements are encoded as integers in [0, q): the polynomial
/// c_0 + c_1 x + ... + c_{m-1} x^{m-1} is stored as sum c_i p^i.
/// The encoding is bijective and gives elements a total order that the
/// rest of the library uses for canonical forms.
///
/// An Fq is a cheap copyable handle to an immutable description, so values
/// built over it can keep their own copy and never dangle. All raw-value
/// operations take and return encoded values; everything is safe for
/// concurrent reads.
class Fq {
public:
    /// Construct F_{p^m} with the default modulus: the lexicographically
    /// smallest monic irreducible polynomial of degree m over F_p,
    /// coefficients compared low-degree-first.
    Fq(uint32_t p, unsigned m);

    /// Construct with an explicit modulus given as coefficients
    /// c_0, ..., c_m (low degree first, c_m = 1). Throws UsageError if the
    /// polynomial is not monic of degree m or not irreducible.
    Fq(uint32_t p, unsigned m, std::vector<uint32_t> modulus);

    /// Parse a field configuration string "p^m" or "p^m:c0,c1,...,cm".
    static Fq parse(const std::string& spec);

    uint32_t characteristic() const { return d_->p; }
    unsigned degree() const { return d_->m; }
    uint32_t order() const { return d_->q; }
    const std::vector<uint32_t>& modulus() const { return d_->modulus; }

    /// Canonical configuration string, always with the modulus spelled out.
    std::string to_string() const;

    bool operator==(const Fq& other) const {
        return d_ == other.d_ ||
               (d_->p == other.d_->p && d_->m == other.d_->m && d_->modulus == other.d_->modulus);
    }
    bool operator!=(const Fq& other) const { return !(*this == other); }

    uint32_t add(uint32_t a, uint32_t b) const { return d_->add(a, b); }
    uint32_t sub(uint32_t a, uint32_t b) const { return d_->add(a, d_->neg(b)); }
    uint32_t neg(uint32_t a) const { return d_->neg(a); }
    uint32_t mul(uint32_t a, uint32_t b) const { return d_->mul(a, b); }
    uint32_t inv(uint32_t a) const { return d_->inv(a); }  // DomainError on a = 0
    uint32_t pow(uint32_t a, uint64_t e) const { return d_->pow(a, e); }

    /// Frobenius power a -> a^(p^t), 0 <= t < m. t = 0 is the identity.
    uint32_t frobenius(uint32_t a, unsigned t) const { return d_->frobenius(a, t); }

    /// All q elements in increasing encoded value.
    std::vector<uint32_t> elements() const;

    /// A fixed generator of the multiplicative group.
    uint32_t generator() const { return d_->generator; }

    FqElem element(uint32_t value) const;

private:
    std::shared_ptr<const fqdetail::FieldRep> d_;
};

/// A field element bound to its field; arithmetic between elements of
/// different fields is a UsageError.
class FqElem {
public:
    FqElem(const Fq& field, uint32_t value);

    uint32_t value() const { return value_; }
    const Fq& field() const { return field_; }

    FqElem inverse() const { return {field_, field_.inv(value_)}; }
    FqElem frobenius(unsigned t) const { return {field_, field_.frobenius(value_, t)}; }

    friend FqElem operator+(const FqElem& a, const FqElem& b);
    friend FqElem operator-(const FqElem& a, const FqElem& b);
    friend FqElem operator*(const FqElem& a, const FqElem& b);
    friend FqElem operator/(const FqElem& a, const FqElem& b);
    friend bool operator==(const FqElem& a, const FqElem& b);
    friend bool operator!=(const FqElem& a, const FqElem& b) { return !(a == b); }

private:
    Fq field_;
    uint32_t value_;
};

} // namespace ingraph
