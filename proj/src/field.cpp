#include "ingraph/field.hpp"

#include <algorithm>
#include <sstream>

namespace ingraph {

namespace {

constexpr uint64_t kMaxOrder = 1u << 20;  // desk scale; exhaustive searches stay cheap
constexpr uint32_t kTableLimit = 512;     // build dense op tables up to this order

bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// --- dense polynomial helpers over F_p, coefficients low degree first ---

int poly_deg(const std::vector<uint32_t>& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[static_cast<size_t>(i)] != 0) return i;
    return -1;
}

std::vector<uint32_t> poly_mul(uint32_t p, const std::vector<uint32_t>& a,
                               const std::vector<uint32_t>& b) {
    std::vector<uint32_t> c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = static_cast<uint32_t>((c[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % p);
    }
    return c;
}

// remainder of a divided by monic divisor d
std::vector<uint32_t> poly_rem(uint32_t p, std::vector<uint32_t> a,
                               const std::vector<uint32_t>& d) {
    const int dd = poly_deg(d);
    for (int i = poly_deg(a); i >= dd; i = poly_deg(a)) {
        const uint32_t c = a[static_cast<size_t>(i)];
        if (c == 0) continue;
        const int shift = i - dd;
        for (int j = 0; j <= dd; ++j) {
            const uint64_t sub = static_cast<uint64_t>(c) * d[static_cast<size_t>(j)] % p;
            uint32_t& t = a[static_cast<size_t>(j + shift)];
            t = static_cast<uint32_t>((t + p - sub) % p);
        }
    }
    return a;
}

uint64_t ipow(uint64_t base, unsigned e) {
    uint64_t r = 1;
    while (e--) r *= base;
    return r;
}

std::vector<uint32_t> value_to_poly(uint32_t v, uint32_t p, unsigned m) {
    std::vector<uint32_t> c(m, 0);
    for (unsigned i = 0; i < m && v != 0; ++i) {
        c[i] = v % p;
        v /= p;
    }
    return c;
}

uint32_t poly_to_value(const std::vector<uint32_t>& c, uint32_t p, unsigned m) {
    uint64_t v = 0;
    for (unsigned i = m; i-- > 0;) v = v * p + (i < c.size() ? c[i] : 0);
    return static_cast<uint32_t>(v);
}

std::vector<uint32_t> prime_factors(uint64_t n) {
    std::vector<uint32_t> fs;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(static_cast<uint32_t>(d));
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(static_cast<uint32_t>(n));
    return fs;
}

void validate_parameters(uint32_t p, unsigned m) {
    if (!is_prime(p)) throw UsageError("field characteristic " + std::to_string(p) + " is not prime");
    if (m < 1) throw UsageError("extension degree must be at least 1");
    if (ipow(p, m) > kMaxOrder)
        throw UsageError("field order " + std::to_string(ipow(p, m)) + " exceeds supported size");
}

} // namespace

namespace fqdetail {

bool is_irreducible(uint32_t p, const std::vector<uint32_t>& poly) {
    const int deg = poly_deg(poly);
    if (deg < 1) return false;
    // trial division by every monic polynomial of degree 1..deg/2
    for (int d = 1; 2 * d <= deg; ++d) {
        const uint64_t count = ipow(p, static_cast<unsigned>(d));
        for (uint64_t v = 0; v < count; ++v) {
            std::vector<uint32_t> div(static_cast<size_t>(d) + 1, 0);
            uint64_t t = v;
            for (int i = 0; i < d; ++i) {
                div[static_cast<size_t>(i)] = static_cast<uint32_t>(t % p);
                t /= p;
            }
            div[static_cast<size_t>(d)] = 1;
            if (poly_deg(poly_rem(p, poly, div)) < 0) return false;
        }
    }
    return true;
}

uint32_t FieldRep::mul_nocache(uint32_t a, uint32_t b) const {
    if (m == 1) return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p);
    const auto pa = value_to_poly(a, p, m);
    const auto pb = value_to_poly(b, p, m);
    auto prod = poly_mul(p, pa, pb);
    prod = poly_rem(p, std::move(prod), modulus);
    return poly_to_value(prod, p, m);
}

void FieldRep::finish_init() {
    if (q <= kTableLimit) {
        mul_table.resize(static_cast<size_t>(q) * q);
        for (uint32_t a = 0; a < q; ++a)
            for (uint32_t b = 0; b <= a; ++b) {
                const uint32_t r = mul_nocache(a, b);
                mul_table[static_cast<size_t>(a) * q + b] = r;
                mul_table[static_cast<size_t>(b) * q + a] = r;
            }
        inv_table.assign(q, 0);
        for (uint32_t a = 1; a < q; ++a) {
            uint32_t r = 1, base = a;
            uint64_t e = static_cast<uint64_t>(q) - 2;
            while (e) {
                if (e & 1) r = mul_table[static_cast<size_t>(r) * q + base];
                base = mul_table[static_cast<size_t>(base) * q + base];
                e >>= 1;
            }
            inv_table[a] = r;
        }
        frob_table.resize(static_cast<size_t>(m) * q);
        for (uint32_t a = 0; a < q; ++a) frob_table[a] = a;
        for (unsigned t = 1; t < m; ++t)
            for (uint32_t a = 0; a < q; ++a) {
                const uint32_t prev = frob_table[static_cast<size_t>(t - 1) * q + a];
                uint32_t r = 1;
                for (uint32_t i = 0; i < p; ++i) r = mul_table[static_cast<size_t>(r) * q + prev];
                frob_table[static_cast<size_t>(t) * q + a] = r;
            }
        tabled = true;
    }

    // smallest multiplicative generator
    if (q == 2) {
        generator = 1;
        return;
    }
    const auto factors = prime_factors(static_cast<uint64_t>(q) - 1);
    for (uint32_t g = 2; g < q; ++g) {
        bool primitive = true;
        for (uint32_t f : factors)
            if (pow(g, (static_cast<uint64_t>(q) - 1) / f) == 1) {
                primitive = false;
                break;
            }
        if (primitive) {
            generator = g;
            return;
        }
    }
    throw IntegrityError("no multiplicative generator found");
}

} // namespace fqdetail

Fq::Fq(uint32_t p, unsigned m) {
    validate_parameters(p, m);
    auto rep = std::make_shared<fqdetail::FieldRep>();
    rep->p = p;
    rep->m = m;
    rep->q = static_cast<uint32_t>(ipow(p, m));

    if (m == 1) {
        rep->modulus = {0, 1};  // x, by convention; unused by arithmetic
    } else {
        // scan (c0, c1, ..., c_{m-1}) in lexicographic order, low degree first
        const uint64_t count = ipow(p, m);
        for (uint64_t v = 0; v < count && rep->modulus.empty(); ++v) {
            std::vector<uint32_t> cand(m + 1, 0);
            uint64_t t = v;
            for (unsigned i = m; i-- > 0;) {
                cand[i] = static_cast<uint32_t>(t % p);
                t /= p;
            }
            cand[m] = 1;
            if (fqdetail::is_irreducible(p, cand)) rep->modulus = std::move(cand);
        }
        if (rep->modulus.empty()) throw IntegrityError("no irreducible modulus found");
    }
    rep->finish_init();
    d_ = std::move(rep);
}

Fq::Fq(uint32_t p, unsigned m, std::vector<uint32_t> modulus) {
    validate_parameters(p, m);
    if (modulus.size() != m + 1)
        throw UsageError("modulus must list m+1 coefficients, low degree first");
    for (uint32_t c : modulus)
        if (c >= p) throw UsageError("modulus coefficient out of range [0, p)");
    if (modulus[m] != 1) throw UsageError("modulus must be monic");
    if (m > 1 && !fqdetail::is_irreducible(p, modulus))
        throw UsageError("modulus is not irreducible over F_" + std::to_string(p));

    auto rep = std::make_shared<fqdetail::FieldRep>();
    rep->p = p;
    rep->m = m;
    rep->q = static_cast<uint32_t>(ipow(p, m));
    rep->modulus = std::move(modulus);
    rep->finish_init();
    d_ = std::move(rep);
}

Fq Fq::parse(const std::string& spec) {
    const auto caret = spec.find('^');
    if (caret == std::string::npos)
        throw UsageError("field spec must look like \"p^m\" or \"p^m:c0,c1,...\": " + spec);
    const auto colon = spec.find(':', caret);
    uint32_t p = 0;
    unsigned m = 0;
    try {
        p = static_cast<uint32_t>(std::stoul(spec.substr(0, caret)));
        m = static_cast<unsigned>(
            std::stoul(spec.substr(caret + 1, colon == std::string::npos ? std::string::npos
                                                                         : colon - caret - 1)));
    } catch (const std::exception&) {
        throw UsageError("cannot parse field spec: " + spec);
    }
    if (colon == std::string::npos) return Fq(p, m);

    std::vector<uint32_t> coeffs;
    std::stringstream ss(spec.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            coeffs.push_back(static_cast<uint32_t>(std::stoul(item)));
        } catch (const std::exception&) {
            throw UsageError("bad modulus coefficient in field spec: " + item);
        }
    }
    return Fq(p, m, std::move(coeffs));
}

std::string Fq::to_string() const {
    std::ostringstream os;
    os << characteristic() << '^' << degree();
    if (degree() > 1) {
        os << ':';
        for (size_t i = 0; i < modulus().size(); ++i) {
            if (i) os << ',';
            os << modulus()[i];
        }
    }
    return os.str();
}

std::vector<uint32_t> Fq::elements() const {
    std::vector<uint32_t> all(order());
    for (uint32_t i = 0; i < order(); ++i) all[i] = i;
    return all;
}

FqElem Fq::element(uint32_t value) const { return {*this, value}; }

FqElem::FqElem(const Fq& field, uint32_t value) : field_(field), value_(value) {
    if (value >= field.order())
        throw UsageError("encoded value " + std::to_string(value) + " outside field of order " +
                         std::to_string(field.order()));
}

namespace {
const Fq& require_same_field(const FqElem& a, const FqElem& b) {
    if (a.field() != b.field())
        throw UsageError("elements of " + a.field().to_string() + " and " + b.field().to_string() +
                         " cannot be combined");
    return a.field();
}
} // namespace

FqElem operator+(const FqElem& a, const FqElem& b) {
    const Fq& f = require_same_field(a, b);
    return {f, f.add(a.value(), b.value())};
}

FqElem operator-(const FqElem& a, const FqElem& b) {
    const Fq& f = require_same_field(a, b);
    return {f, f.sub(a.value(), b.value())};
}

FqElem operator*(const FqElem& a, const FqElem& b) {
    const Fq& f = require_same_field(a, b);
    return {f, f.mul(a.value(), b.value())};
}

FqElem operator/(const FqElem& a, const FqElem& b) {
    const Fq& f = require_same_field(a, b);
    return {f, f.mul(a.value(), f.inv(b.value()))};
}

bool operator==(const FqElem& a, const FqElem& b) {
    return a.field() == b.field() && a.value() == b.value();
}

} // namespace ingraph
