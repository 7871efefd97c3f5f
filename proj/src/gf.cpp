#include "arclab/gf.hpp"

#include <array>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>

namespace arclab {

namespace {

constexpr std::uint32_t kDefaultMaxQ = 1u << 20;
constexpr std::uint32_t kTableLimit = 1u << 16;
constexpr std::size_t kMaxDeg = 40; // 2h-1 with h <= 20

using PolyBuf = std::array<std::uint32_t, kMaxDeg + 1>;

void decompose(std::uint32_t code, std::uint32_t p, std::uint32_t h, PolyBuf& out) {
    for (std::uint32_t i = 0; i < h; ++i) {
        out[i] = code % p;
        code /= p;
    }
}

std::uint32_t compose(const PolyBuf& c, std::uint32_t p, std::uint32_t h) {
    std::uint64_t acc = 0;
    for (std::uint32_t i = h; i-- > 0;)
        acc = acc * p + c[i];
    return static_cast<std::uint32_t>(acc);
}

int poly_degree(std::span<const std::uint32_t> a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i] != 0) return i;
    return -1;
}

// Remainder of a mod b over F_p; b must be monic.
std::vector<std::uint32_t> poly_mod(std::vector<std::uint32_t> a,
                                    std::span<const std::uint32_t> b,
                                    std::uint32_t p) {
    const int db = poly_degree(b);
    int da = poly_degree(a);
    while (da >= db && db >= 0) {
        const std::uint64_t lead = a[static_cast<std::size_t>(da)];
        const int shift = da - db;
        if (lead != 0) {
            for (int i = 0; i <= db; ++i) {
                std::uint64_t v = a[static_cast<std::size_t>(i + shift)] + p * lead;
                v -= (lead * b[static_cast<std::size_t>(i)]) % p;
                a[static_cast<std::size_t>(i + shift)] = static_cast<std::uint32_t>(v % p);
            }
        }
        --da;
        while (da >= 0 && a[static_cast<std::size_t>(da)] == 0) --da;
    }
    a.resize(static_cast<std::size_t>(db > 0 ? db : 1), 0);
    return a;
}

} // namespace

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool poly_is_irreducible(std::uint32_t p, std::span<const std::uint32_t> poly) {
    const int deg = poly_degree(poly);
    if (deg <= 0) return false;
    if (deg == 1) return true;
    // Trial division by every monic polynomial of degree 1..deg/2.
    for (int d = 1; d <= deg / 2; ++d) {
        std::uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            std::vector<std::uint32_t> divisor(static_cast<std::size_t>(d) + 1, 0);
            std::uint64_t c = code;
            for (int i = 0; i < d; ++i) {
                divisor[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(c % p);
                c /= p;
            }
            divisor[static_cast<std::size_t>(d)] = 1;
            std::vector<std::uint32_t> rem =
                poly_mod(std::vector<std::uint32_t>(poly.begin(), poly.end()), divisor, p);
            if (poly_degree(rem) < 0) return false;
        }
    }
    return true;
}

std::uint32_t Field::max_order() {
    if (const char* env = std::getenv("ARCLAB_MAX_Q")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v >= 2 &&
            v <= std::numeric_limits<std::uint32_t>::max())
            return static_cast<std::uint32_t>(v);
        throw std::invalid_argument("ARCLAB_MAX_Q is not a valid field size: " +
                                    std::string(env));
    }
    return kDefaultMaxQ;
}

Field Field::make(std::uint32_t p, std::uint32_t h) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    if (h < 1) throw std::invalid_argument("field extension degree must be >= 1");
    const std::uint32_t limit = max_order();
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < h; ++i) {
        q *= p;
        if (q > limit)
            throw std::invalid_argument("field size p^h exceeds the configured limit");
    }

    Field f;
    f.p_ = p;
    f.h_ = h;
    f.q_ = static_cast<std::uint32_t>(q);

    // Lexicographically smallest monic irreducible: scan the non-leading
    // coefficients as a base-p integer, low digit = constant term.
    std::uint64_t ncand = 1;
    for (std::uint32_t i = 0; i < h; ++i) ncand *= p;
    for (std::uint64_t code = 0; code < ncand; ++code) {
        std::vector<std::uint32_t> cand(h + 1, 0);
        std::uint64_t c = code;
        for (std::uint32_t i = 0; i < h; ++i) {
            cand[i] = static_cast<std::uint32_t>(c % p);
            c /= p;
        }
        cand[h] = 1;
        if (poly_is_irreducible(p, cand)) {
            f.modulus_ = std::move(cand);
            break;
        }
    }
    if (f.modulus_.empty())
        throw std::logic_error("no irreducible modulus found"); // cannot happen
    f.init_tables();
    return f;
}

Field Field::with_modulus(std::uint32_t p, std::uint32_t h,
                          std::vector<std::uint32_t> modulus) {
    Field f = make(p, h);
    if (modulus.size() != static_cast<std::size_t>(h) + 1)
        throw std::invalid_argument("modulus must have degree h");
    for (std::uint32_t c : modulus)
        if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
    if (modulus.back() != 1) throw std::invalid_argument("modulus must be monic");
    if (!poly_is_irreducible(p, modulus))
        throw std::invalid_argument("modulus is reducible");
    f.modulus_ = std::move(modulus);
    f.tables_ = false;
    f.log_.clear();
    f.exp_.clear();
    f.init_tables();
    return f;
}

std::string Field::modulus_string() const {
    std::string s;
    for (int i = static_cast<int>(h_); i >= 0; --i) {
        const std::uint32_t c = modulus_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        if (!s.empty()) s += "+";
        if (i == 0) {
            s += std::to_string(c);
        } else {
            if (c != 1) s += std::to_string(c);
            s += (i == 1) ? "x" : "x^" + std::to_string(i);
        }
    }
    return s.empty() ? "0" : s;
}

Fe Field::element(std::uint64_t code) const {
    if (code >= q_) throw std::invalid_argument("element code out of range");
    return Fe{static_cast<std::uint32_t>(code)};
}

std::vector<std::uint32_t> Field::coeffs(Fe a) const {
    std::vector<std::uint32_t> out(h_);
    std::uint32_t c = a.code;
    for (std::uint32_t i = 0; i < h_; ++i) {
        out[i] = c % p_;
        c /= p_;
    }
    return out;
}

Fe Field::from_coeffs(std::span<const std::uint32_t> c) const {
    if (c.size() > h_) throw std::invalid_argument("too many coefficients");
    std::uint64_t acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] >= p_) throw std::invalid_argument("coefficient out of range");
        acc = acc * p_ + c[i];
    }
    return Fe{static_cast<std::uint32_t>(acc)};
}

Fe Field::add(Fe a, Fe b) const {
    if (h_ == 1) return Fe{static_cast<std::uint32_t>((static_cast<std::uint64_t>(a.code) + b.code) % p_)};
    if (p_ == 2) return Fe{a.code ^ b.code};
    PolyBuf da{}, db{};
    decompose(a.code, p_, h_, da);
    decompose(b.code, p_, h_, db);
    for (std::uint32_t i = 0; i < h_; ++i) da[i] = (da[i] + db[i]) % p_;
    return Fe{compose(da, p_, h_)};
}

Fe Field::neg(Fe a) const {
    if (h_ == 1) return Fe{(p_ - a.code) % p_};
    if (p_ == 2) return a;
    PolyBuf da{};
    decompose(a.code, p_, h_, da);
    for (std::uint32_t i = 0; i < h_; ++i) da[i] = (p_ - da[i]) % p_;
    return Fe{compose(da, p_, h_)};
}

Fe Field::sub(Fe a, Fe b) const { return add(a, neg(b)); }

Fe Field::mul_poly(Fe a, Fe b) const {
    if (h_ == 1)
        return Fe{static_cast<std::uint32_t>((static_cast<std::uint64_t>(a.code) * b.code) % p_)};
    PolyBuf da{}, db{}, prod{};
    decompose(a.code, p_, h_, da);
    decompose(b.code, p_, h_, db);
    prod.fill(0);
    for (std::uint32_t i = 0; i < h_; ++i) {
        if (da[i] == 0) continue;
        for (std::uint32_t j = 0; j < h_; ++j) {
            if (db[j] == 0) continue;
            prod[i + j] = static_cast<std::uint32_t>(
                (prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p_);
        }
    }
    // Reduce modulo the monic modulus, high degree down.
    for (std::uint32_t d = 2 * h_ - 2; d >= h_; --d) {
        const std::uint64_t lead = prod[d];
        if (lead != 0) {
            prod[d] = 0;
            for (std::uint32_t i = 0; i < h_; ++i) {
                std::uint64_t v = prod[d - h_ + i] + p_ * lead;
                v -= (lead * modulus_[i]) % p_;
                prod[d - h_ + i] = static_cast<std::uint32_t>(v % p_);
            }
        }
        if (d == h_) break;
    }
    return Fe{compose(prod, p_, h_)};
}

Fe Field::pow_poly(Fe a, std::uint64_t e) const {
    Fe result = one();
    Fe base = a;
    while (e) {
        if (e & 1) result = mul_poly(result, base);
        base = mul_poly(base, base);
        e >>= 1;
    }
    return result;
}

void Field::init_tables() {
    if (q_ > kTableLimit) return;
    const std::uint32_t n = q_ - 1;
    exp_.assign(n, 1);
    log_.assign(q_, 0);
    if (n == 1) {
        tables_ = true;
        return;
    }
    std::vector<std::uint32_t> prime_factors;
    {
        std::uint32_t m = n;
        for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= m; ++d)
            if (m % d == 0) {
                prime_factors.push_back(d);
                while (m % d == 0) m /= d;
            }
        if (m > 1) prime_factors.push_back(m);
    }
    std::uint32_t gen = 0;
    for (std::uint32_t g = 2; g < q_; ++g) {
        bool primitive = true;
        for (std::uint32_t f : prime_factors)
            if (pow_poly(Fe{g}, n / f) == one()) {
                primitive = false;
                break;
            }
        if (primitive) {
            gen = g;
            break;
        }
    }
    Fe acc = one();
    for (std::uint32_t i = 0; i < n; ++i) {
        exp_[i] = acc.code;
        log_[acc.code] = i;
        acc = mul_poly(acc, Fe{gen});
    }
    tables_ = true;
}

Fe Field::mul(Fe a, Fe b) const {
    if (a.code == 0 || b.code == 0) return zero();
    if (tables_) {
        const std::uint32_t n = q_ - 1;
        return Fe{exp_[(static_cast<std::uint64_t>(log_[a.code]) + log_[b.code]) % n]};
    }
    return mul_poly(a, b);
}

Fe Field::inv(Fe a) const {
    if (a.code == 0) throw std::domain_error("inverse of zero");
    if (tables_) {
        const std::uint32_t n = q_ - 1;
        return Fe{exp_[(n - log_[a.code]) % n]};
    }
    return pow_poly(a, q_ - 2);
}

Fe Field::div(Fe a, Fe b) const { return mul(a, inv(b)); }

Fe Field::pow(Fe a, std::int64_t e) const {
    if (a.code == 0) {
        if (e == 0) return one();
        if (e < 0) throw std::domain_error("inverse of zero");
        return zero();
    }
    const std::int64_t n = q_ - 1;
    std::int64_t m = e % n;
    if (m < 0) m += n;
    if (tables_)
        return Fe{exp_[(static_cast<std::uint64_t>(log_[a.code]) * static_cast<std::uint64_t>(m)) %
                       static_cast<std::uint64_t>(n)]};
    return pow_poly(a, static_cast<std::uint64_t>(m));
}

Fe Field::minus_one_pow(std::uint64_t exponent) const {
    return (exponent & 1) ? neg(one()) : one();
}

} // namespace arclab
