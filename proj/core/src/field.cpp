#include "quasimix/field.hpp"

#include <algorithm>
#include <charconv>

#include "quasimix/error.hpp"

namespace quasimix {

namespace {

bool is_prime(int v) {
    if (v < 2) return false;
    for (int d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

// Polynomials over F_p as coefficient vectors, constant term first,
// trailing zeros trimmed.
using Poly = std::vector<int>;

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mul(const Poly& f, const Poly& g, int p) {
    if (f.empty() || g.empty()) return {};
    Poly r(f.size() + g.size() - 1, 0);
    for (size_t i = 0; i < f.size(); ++i)
        for (size_t j = 0; j < g.size(); ++j)
            r[i + j] = (r[i + j] + f[i] * g[j]) % p;
    trim(r);
    return r;
}

// f mod g, g monic.
Poly poly_mod(Poly f, const Poly& g, int p) {
    trim(f);
    while (f.size() >= g.size()) {
        int c = f.back();
        size_t shift = f.size() - g.size();
        for (size_t i = 0; i < g.size(); ++i) {
            int& t = f[shift + i];
            t = ((t - c * g[i]) % p + p) % p;
        }
        trim(f);
    }
    return f;
}

bool poly_is_zero(const Poly& f) { return f.empty(); }

// Exhaustive trial division by monic polynomials of degree 1..deg/2.
// Fine at desk scale (deg <= 4, p <= 101).
bool is_irreducible(const Poly& f, int p) {
    int deg = static_cast<int>(f.size()) - 1;
    if (deg < 1) return false;
    for (int d = 1; 2 * d <= deg; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long code = 0; code < count; ++code) {
            Poly g(d + 1, 0);
            long long c = code;
            for (int i = 0; i < d; ++i) {
                g[i] = static_cast<int>(c % p);
                c /= p;
            }
            g[d] = 1;
            if (poly_is_zero(poly_mod(f, g, p))) return false;
        }
    }
    return true;
}

Poly smallest_irreducible(int p, int n) {
    long long count = 1;
    for (int i = 0; i < n; ++i) count *= p;
    for (long long code = 0; code < count; ++code) {
        Poly f(n + 1, 0);
        long long c = code;
        for (int i = 0; i < n; ++i) {
            f[i] = static_cast<int>(c % p);
            c /= p;
        }
        f[n] = 1;
        if (is_irreducible(f, p)) return f;
    }
    throw structural_error("no degree-" + std::to_string(n) +
                           " irreducible polynomial found over F_" + std::to_string(p));
}

} // namespace

FieldPtr Field::make(int p, int n, long long max_q) {
    if (p < 3 || p % 2 == 0) throw parameter_error("field characteristic must be an odd prime, got p=" + std::to_string(p));
    if (!is_prime(p)) throw parameter_error("field characteristic must be prime, got p=" + std::to_string(p));
    if (n < 1) throw parameter_error("extension degree must be >= 1, got n=" + std::to_string(n));
    long long q = 1;
    for (int i = 0; i < n; ++i) {
        q *= p;
        if (q > kHardMaxQ) break;
    }
    long long ceiling = std::min(max_q, kHardMaxQ);
    if (q > ceiling)
        throw parameter_error("q = " + std::to_string(p) + "^" + std::to_string(n) +
                              " exceeds the supported ceiling " + std::to_string(ceiling));

    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = p;
    f->n_ = n;
    f->q_ = static_cast<int>(q);
    f->modulus_ = (n == 1) ? std::vector<int>{0, 1} : smallest_irreducible(p, n);

    const int Q = f->q_;
    auto coeffs_of = [&](int a) {
        Poly c(n, 0);
        for (int i = 0; i < n; ++i) {
            c[i] = a % p;
            a /= p;
        }
        return c;
    };
    auto index_of = [&](const Poly& c) {
        int idx = 0;
        for (int i = n - 1; i >= 0; --i) idx = idx * p + (i < static_cast<int>(c.size()) ? c[i] : 0);
        return idx;
    };

    f->add_.resize(static_cast<size_t>(Q) * Q);
    f->mul_.resize(static_cast<size_t>(Q) * Q);
    f->neg_.resize(Q);
    for (int a = 0; a < Q; ++a) {
        Poly ca = coeffs_of(a);
        Poly nc(n);
        for (int i = 0; i < n; ++i) nc[i] = (p - ca[i]) % p;
        f->neg_[a] = index_of(nc);
        for (int b = 0; b < Q; ++b) {
            Poly cb = coeffs_of(b);
            Poly sum(n);
            for (int i = 0; i < n; ++i) sum[i] = (ca[i] + cb[i]) % p;
            f->add_[static_cast<size_t>(a) * Q + b] = index_of(sum);
            Poly prod = poly_mod(poly_mul(ca, cb, p), f->modulus_, p);
            f->mul_[static_cast<size_t>(a) * Q + b] = index_of(prod);
        }
    }

    f->inv_.assign(Q, -1);
    for (int a = 1; a < Q; ++a)
        for (int b = 1; b < Q; ++b)
            if (f->mul_[static_cast<size_t>(a) * Q + b] == 1) {
                f->inv_[a] = b;
                break;
            }
    for (int a = 1; a < Q; ++a)
        if (f->inv_[a] < 0) throw structural_error("field element without inverse; modulus is not irreducible");

    f->square_.assign(Q, 0);
    for (int a = 0; a < Q; ++a) f->square_[f->mul_[static_cast<size_t>(a) * Q + a]] = 1;

    // Absolute trace: a + a^p + ... + a^(p^(n-1)). Lands in the prime
    // subfield, whose elements are exactly the indices 0..p-1.
    f->trace_.resize(Q);
    for (int a = 0; a < Q; ++a) {
        int t = 0;
        int frob = a;
        for (int i = 0; i < n; ++i) {
            t = f->add_[static_cast<size_t>(t) * Q + frob];
            int next = frob;
            for (int e = 1; e < p; ++e) next = f->mul_[static_cast<size_t>(next) * Q + frob];
            frob = next;
        }
        if (t >= p) throw structural_error("trace fell outside the prime subfield");
        f->trace_[a] = t;
    }

    f->epsilon_ = (Q % 4 == 1) ? 1 : -1;
    bool minus_one_square = f->square_[f->neg_[1]] != 0;
    if (minus_one_square != (f->epsilon_ == 1))
        throw structural_error("epsilon_q disagrees with the quadratic character of -1");

    return f;
}

FieldPtr Field::parse(std::string_view spec, long long max_q) {
    int p = 0, n = 1;
    size_t caret = spec.find('^');
    std::string_view ps = spec.substr(0, caret);
    auto res = std::from_chars(ps.data(), ps.data() + ps.size(), p);
    if (res.ec != std::errc() || res.ptr != ps.data() + ps.size())
        throw parameter_error("bad field spec '" + std::string(spec) + "', expected \"p\" or \"p^n\"");
    if (caret != std::string_view::npos) {
        std::string_view ns = spec.substr(caret + 1);
        res = std::from_chars(ns.data(), ns.data() + ns.size(), n);
        if (res.ec != std::errc() || res.ptr != ns.data() + ns.size() || ns.empty())
            throw parameter_error("bad field spec '" + std::string(spec) + "', expected \"p\" or \"p^n\"");
    }
    return make(p, n, max_q);
}

std::string Field::label() const {
    return n_ == 1 ? std::to_string(p_) : std::to_string(p_) + "^" + std::to_string(n_);
}

int Field::inv(int a) const {
    if (a == 0) throw division_by_zero("inverse of zero in F_" + label());
    return inv_[a];
}

int Field::pow(int a, long long e) const {
    if (e < 0) throw parameter_error("negative exponent; invert first");
    int r = 1;
    int base = a;
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

std::vector<int> Field::coeffs(int a) const {
    std::vector<int> c(n_);
    for (int i = 0; i < n_; ++i) {
        c[i] = a % p_;
        a /= p_;
    }
    return c;
}

int Field::from_coeffs(const std::vector<int>& c) const {
    if (static_cast<int>(c.size()) > n_) throw parameter_error("coefficient vector longer than extension degree");
    int idx = 0;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
        if (c[i] < 0 || c[i] >= p_) throw parameter_error("coefficient out of [0, p)");
        idx = idx * p_ + c[i];
    }
    return idx;
}

} // namespace quasimix
