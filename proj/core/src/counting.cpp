#include "quasimix/counting.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>

#include "quasimix/error.hpp"
#include "quasimix/prng.hpp"

namespace quasimix {

namespace {

constexpr double kRealSlack = 1e-9;
constexpr double kRoundingTol = 1e-6;

const SdpGroup& common_group(const std::vector<GroupSubset>& sets, size_t min_count) {
    if (sets.size() < min_count)
        throw parameter_error("need at least " + std::to_string(min_count) + " sets");
    const SdpGroup* g = &sets.front().group();
    for (const GroupSubset& s : sets)
        if (&s.group() != g) throw parameter_error("sets must live in the same group");
    return *g;
}

int128 size_product(const std::vector<GroupSubset>& sets, size_t from) {
    int128 p = 1;
    for (size_t i = from; i < sets.size(); ++i) p *= sets[i].size();
    return p;
}

long long budget_of(const CountOptions& opts) {
    return opts.step_budget > 0 ? opts.step_budget : default_step_budget();
}

// Per-fiber cardinalities over H; fibers are contiguous index ranges.
std::vector<long long> dot_fiber_counts(const GroupSubset& x) {
    const SdpGroup& g = x.group();
    std::vector<long long> c(g.h_size(), 0);
    for (int idx : x.indices()) ++c[g.dot(idx)];
    return c;
}

std::vector<int128> h_convolve(const SdpGroup& g, const std::vector<int128>& a,
                               const std::vector<long long>& b) {
    std::vector<int128> out(g.h_size(), 0);
    for (int h1 = 0; h1 < g.h_size(); ++h1) {
        if (a[h1] == 0) continue;
        for (int h2 = 0; h2 < g.h_size(); ++h2) {
            if (b[h2] == 0) continue;
            out[g.h_mul(h1, h2)] += a[h1] * b[h2];
        }
    }
    return out;
}

std::vector<int128> dot_product_counts(const std::vector<GroupSubset>& sets) {
    const SdpGroup& g = sets.front().group();
    std::vector<long long> first = dot_fiber_counts(sets.front());
    std::vector<int128> acc(first.begin(), first.end());
    for (size_t i = 1; i < sets.size(); ++i)
        acc = h_convolve(g, acc, dot_fiber_counts(sets[i]));
    return acc;
}

int128 round_to_integer(long double v, const char* who) {
    long double nearest = std::floor(v + 0.5L);
    if (std::fabs(v - nearest) > kRoundingTol)
        throw numeric_error(std::string(who) + ": value " + std::to_string(static_cast<double>(v)) +
                            " is farther than 1e-6 from an integer");
    return static_cast<int128>(nearest);
}

} // namespace

long long default_step_budget() {
    static const long long value = [] {
        if (const char* env = std::getenv("QUASIMIX_BUDGET")) {
            char* end = nullptr;
            long long v = std::strtoll(env, &end, 10);
            if (end != env && v > 0) return v;
        }
        return 100'000'000LL;
    }();
    return value;
}

int128 count_Mk_bruteforce(const std::vector<GroupSubset>& sets, const CountOptions& opts) {
    const SdpGroup& g = common_group(sets, 2);
    if (size_product(sets, 1) > budget_of(opts))
        throw resource_error("brute-force tuple count exceeds the step budget");
    std::vector<std::vector<int>> idx;
    for (size_t i = 1; i < sets.size(); ++i) idx.push_back(sets[i].indices());
    const GroupSubset& x0 = sets[0];
    int128 count = 0;
    // depth-first over X1 x ... x Xk with running prefix products
    std::function<void(size_t, int)> walk = [&](size_t level, int prefix) {
        if (level == idx.size()) {
            if (x0.contains(prefix)) ++count;
            return;
        }
        for (int x : idx[level]) walk(level + 1, level == 0 ? x : g.mul(prefix, x));
    };
    if (std::any_of(idx.begin(), idx.end(), [](const auto& v) { return v.empty(); })) return 0;
    walk(0, g.identity());
    return count;
}

std::vector<int128> convolution_counts(const std::vector<GroupSubset>& sets,
                                       const CountOptions& opts) {
    const SdpGroup& g = common_group(sets, 1);
    long long cost = 0;
    for (size_t i = 1; i < sets.size(); ++i) cost += g.size() * sets[i].size();
    if (cost > budget_of(opts))
        throw resource_error("group convolution exceeds the step budget");
    std::vector<int128> r(g.size(), 0);
    for (int x : sets[0].indices()) r[x] = 1;
    std::vector<int128> next(g.size());
    for (size_t i = 1; i < sets.size(); ++i) {
        std::fill(next.begin(), next.end(), 0);
        const std::vector<int> xi = sets[i].indices();
        std::vector<int> xi_inv(xi.size());
        for (size_t j = 0; j < xi.size(); ++j) xi_inv[j] = g.inv(xi[j]);
        for (int x = 0; x < g.size(); ++x) {
            int128 acc = 0;
            for (int yinv : xi_inv) acc += r[g.mul(x, yinv)];
            next[x] = acc;
        }
        r.swap(next);
    }
    return r;
}

int128 count_Mk_convolution(const std::vector<GroupSubset>& sets, const CountOptions& opts) {
    common_group(sets, 2);
    std::vector<GroupSubset> rest(sets.begin() + 1, sets.end());
    std::vector<int128> r = convolution_counts(rest, opts);
    int128 total = 0;
    for (int x : sets[0].indices()) total += r[x];
    return total;
}

int128 count_Mk_spectral(const std::vector<GroupSubset>& sets, const IrrepCensus& census) {
    const SdpGroup& g = common_group(sets, 2);
    if (&census.group().group() != &g)
        throw parameter_error("census and sets belong to different groups");
    FourierCoefficients c0 = fourier_transform(census, indicator(sets[0]));
    std::vector<FourierCoefficients> cs;
    for (size_t i = 1; i < sets.size(); ++i)
        cs.push_back(fourier_transform(census, indicator(sets[i])));
    long double pairing = 0;
    for (int i = 0; i < census.count(); ++i) {
        ComplexMatrix prod = cs[0].at(i);
        for (size_t j = 1; j < cs.size(); ++j) prod = prod * cs[j].at(i);
        const cplx term = ComplexMatrix::hs_inner(prod, c0.at(i));
        pairing += static_cast<long double>(census.irreps()[i].degree()) * term.real();
    }
    long double scale = 1;
    for (size_t i = 1; i < sets.size(); ++i) scale *= g.size();
    return round_to_integer(pairing * scale, "count_Mk_spectral");
}

int128 count_Mk(const std::vector<GroupSubset>& sets, const CountOptions& opts) {
    const SdpGroup& g = common_group(sets, 2);
    const long long budget = budget_of(opts);
    const int128 brute_cost = size_product(sets, 1);
    long long conv_cost = 0;
    for (size_t i = 2; i < sets.size(); ++i) conv_cost += g.size() * sets[i].size();
    conv_cost += g.size();
    if (brute_cost <= std::min<int128>(conv_cost, budget)) return count_Mk_bruteforce(sets, opts);
    if (conv_cost <= budget) return count_Mk_convolution(sets, opts);
    if (brute_cost <= budget) return count_Mk_bruteforce(sets, opts);
    if (opts.census) return count_Mk_spectral(sets, *opts.census);
    throw resource_error("count exceeds the step budget and no census was supplied "
                         "for the spectral path");
}

int128 count_Mk_dot(const std::vector<GroupSubset>& sets) {
    const SdpGroup& g = common_group(sets, 2);
    std::vector<GroupSubset> rest(sets.begin() + 1, sets.end());
    std::vector<int128> conv = dot_product_counts(rest);
    std::vector<long long> c0 = dot_fiber_counts(sets[0]);
    int128 total = 0;
    for (int h = 0; h < g.h_size(); ++h) total += conv[h] * c0[h];
    return total;
}

int128 count_Nk_dot(const std::vector<GroupSubset>& sets) {
    common_group(sets, 1);
    std::vector<int128> conv = dot_product_counts(sets);
    int128 total = 0;
    for (int128 v : conv) total += v * v;
    return total;
}

int128 energy(const GroupSubset& x, const GroupSubset& y, const CountOptions& opts) {
    if (&x.group() != &y.group()) throw parameter_error("sets must live in the same group");
    const SdpGroup& g = x.group();
    if (x.size() * y.size() > budget_of(opts))
        throw resource_error("energy enumeration exceeds the step budget");
    std::vector<long long> r(g.size(), 0);
    const std::vector<int> ys = y.indices();
    for (int a : x.indices())
        for (int b : ys) ++r[g.mul(a, b)];
    int128 e = 0;
    for (long long v : r) e += static_cast<int128>(v) * v;
    return e;
}

int128 energy_dot(const GroupSubset& x, const GroupSubset& y) {
    if (&x.group() != &y.group()) throw parameter_error("sets must live in the same group");
    const SdpGroup& g = x.group();
    std::vector<long long> cx = dot_fiber_counts(x);
    std::vector<int128> acc(cx.begin(), cx.end());
    std::vector<int128> conv = h_convolve(g, acc, dot_fiber_counts(y));
    int128 e = 0;
    for (int128 v : conv) e += v * v;
    return e;
}

GroupSubset product_set(const std::vector<GroupSubset>& sets, const CountOptions& opts) {
    const SdpGroup& g = common_group(sets, 1);
    const long long budget = budget_of(opts);
    GroupSubset acc = sets[0];
    for (size_t i = 1; i < sets.size(); ++i) {
        if (acc.size() * sets[i].size() > budget)
            throw resource_error("product set enumeration exceeds the step budget");
        GroupSubset next(g);
        const std::vector<int> xs = sets[i].indices();
        for (int a : acc.indices())
            for (int b : xs) next.add(g.mul(a, b));
        acc = std::move(next);
    }
    return acc;
}

VerificationReport verify_mixing(const std::vector<GroupSubset>& sets, long long D,
                                 const CountOptions& opts) {
    const SdpGroup& g = common_group(sets, 3);
    const int k = static_cast<int>(sets.size()) - 1;
    const int128 m = count_Mk(sets, opts);
    const int128 m_dot = count_Mk_dot(sets);
    const long long n_size = g.n_size();

    // scaled exact difference |M |N| - M_dot| avoids the division
    int128 diff = m * n_size - m_dot;
    if (diff < 0) diff = -diff;
    long double bound_sq = 1.0L;
    for (int i = 0; i < k - 1; ++i) bound_sq *= g.size();
    for (const GroupSubset& s : sets) bound_sq *= s.size();
    for (int i = 0; i < k - 1; ++i) bound_sq /= D;
    const long double bound = std::sqrt(bound_sq);

    VerificationReport rep;
    rep.theorem = "mixing";
    rep.k = k;
    for (const GroupSubset& s : sets) rep.sizes.push_back(s.size());
    rep.lhs = static_cast<double>(to_long_double(diff) / n_size);
    rep.rhs = static_cast<double>(bound);
    rep.slack = rep.rhs - rep.lhs;
    rep.pass = to_long_double(diff) <= static_cast<long double>(n_size) * (bound + kRealSlack);
    rep.add_extra("M", m);
    rep.add_extra("M_dot", m_dot);
    rep.add_extra("D", D);
    rep.add_extra("N", n_size);
    return rep;
}

VerificationReport verify_l2(const std::vector<GroupSubset>& sets, long long D,
                             const CountOptions& opts) {
    const SdpGroup& g = common_group(sets, 2);
    const int k = static_cast<int>(sets.size());
    std::vector<int128> conv = convolution_counts(sets, opts);
    int128 m = 0; // sum of squared tuple counts; ||conv||_2^2 = m / |G|^{2k-1}
    for (int128 v : conv) m += v * v;
    const int128 n_dot = count_Nk_dot(sets);
    const long long g_size = g.size();
    const long long h_size = g.h_size();
    const int128 sizes_prod = size_product(sets, 0);

    // lower:  |H| N_dot <= m |G|
    // upper:  m |G| D^{k-1} <= |H| N_dot D^{k-1} + |X1|...|Xk| |G|^k
    // Everything fits 128 bits at any size the step budget admits.
    const int128 dpow = ipow(D, k - 1);
    const bool lower_ok = h_size * n_dot <= m * g_size;
    const bool upper_ok = m * g_size * dpow <= h_size * n_dot * dpow + sizes_prod * ipow(g_size, k);

    const long double gs = static_cast<long double>(g_size);
    long double norm_sq = to_long_double(m);
    for (int i = 0; i < 2 * k - 1; ++i) norm_sq /= gs;
    long double lower = static_cast<long double>(h_size) * to_long_double(n_dot);
    for (int i = 0; i < 2 * k; ++i) lower /= gs;
    long double upper = lower + to_long_double(sizes_prod) / (to_long_double(dpow) * std::pow(gs, k));

    VerificationReport rep;
    rep.theorem = "l2";
    rep.k = k;
    for (const GroupSubset& s : sets) rep.sizes.push_back(s.size());
    rep.lhs = static_cast<double>(norm_sq);
    rep.rhs = static_cast<double>(upper);
    rep.slack = static_cast<double>(std::min(upper - norm_sq, norm_sq - lower));
    rep.pass = lower_ok && upper_ok;
    rep.add_extra("lower", static_cast<double>(lower));
    rep.add_extra("m", m);
    rep.add_extra("N_dot", n_dot);
    rep.add_extra("D", D);
    return rep;
}

VerificationReport verify_energy(const GroupSubset& x, const GroupSubset& y, long long D,
                                 const CountOptions& opts) {
    if (&x.group() != &y.group()) throw parameter_error("sets must live in the same group");
    const SdpGroup& g = x.group();
    const int128 e = energy(x, y, opts);
    const int128 e_dot = energy_dot(x, y);
    const long long g_size = g.size();
    const long long h_size = g.h_size();

    // lower:  |H| E_dot <= E |G|
    // upper:  E |G| D <= |H| E_dot D + |G|^2 |X||Y|
    const bool lower_ok = h_size * e_dot <= e * g_size;
    const bool upper_ok =
        e * g_size * D <= h_size * e_dot * D + static_cast<int128>(g_size) * g_size * x.size() * y.size();

    const long double main_term = static_cast<long double>(h_size) * to_long_double(e_dot) / g_size;
    const long double err_term =
        static_cast<long double>(g_size) * x.size() * y.size() / static_cast<long double>(D);

    VerificationReport rep;
    rep.theorem = "energy";
    rep.k = 2;
    rep.sizes = {x.size(), y.size()};
    rep.lhs = static_cast<double>(to_long_double(e));
    rep.rhs = static_cast<double>(main_term + err_term);
    rep.slack = static_cast<double>(std::min(main_term + err_term - to_long_double(e),
                                             to_long_double(e) - main_term));
    rep.pass = lower_ok && upper_ok;
    rep.add_extra("E", e);
    rep.add_extra("E_dot", e_dot);
    rep.add_extra("D", D);
    return rep;
}

VerificationReport verify_product_growth(const std::vector<GroupSubset>& sets, long long D,
                                         const CountOptions& opts) {
    const SdpGroup& g = common_group(sets, 2);
    const int k = static_cast<int>(sets.size());
    const GroupSubset prod = product_set(sets, opts);
    const int128 n_dot = count_Nk_dot(sets);
    const int128 sizes_prod = size_product(sets, 0);
    const long long n_size = g.n_size();
    const int128 gpow = ipow(g.size(), k - 1);
    const int128 dpow = ipow(D, k - 1);
    const int128 p2 = 2 * static_cast<int128>(prod.size());

    // 2P N_dot >= |N| (|X1|...|Xk|)^2   or   2P |G|^{k-1} >= D^{k-1} |X1|...|Xk|
    // An empty factor makes both sides zero and the claim trivially true.
    const bool first_ok = p2 * n_dot >= n_size * sizes_prod * sizes_prod;
    const bool second_ok = p2 * gpow >= dpow * sizes_prod;

    const long double t1 = n_dot == 0
                               ? 0.0L
                               : static_cast<long double>(n_size) * to_long_double(sizes_prod) *
                                     to_long_double(sizes_prod) / to_long_double(n_dot);
    const long double t2 = to_long_double(dpow) * to_long_double(sizes_prod) / to_long_double(gpow);

    VerificationReport rep;
    rep.theorem = "growth";
    rep.k = k;
    for (const GroupSubset& s : sets) rep.sizes.push_back(s.size());
    rep.lhs = static_cast<double>(0.5L * std::min(t1, t2));
    rep.rhs = static_cast<double>(prod.size());
    rep.slack = rep.rhs - rep.lhs;
    rep.pass = first_ok || second_ok;
    rep.add_extra("product_size", static_cast<long long>(prod.size()));
    rep.add_extra("N_dot", n_dot);
    rep.add_extra("D", D);
    return rep;
}

VerificationReport verify_bias(const GroupSubset& x, double m_threshold, int exceptions,
                               const IrrepCensus& census, const CountOptions& opts) {
    const SdpGroup& g = x.group();
    if (&census.group().group() != &g)
        throw parameter_error("census and set belong to different groups");
    if (exceptions < 0) throw parameter_error("exception count must be >= 0");
    const int q_one = census.type_one_count(); // Q
    const long long d_min = census.quasirandom_degree().value_or(0);
    if (d_min == 0) throw structural_error("bias verifier requires type II irreps");

    FourierCoefficients coeffs = fourier_transform(census, indicator(x));
    std::vector<int> gamma0;
    for (int r = 0; r < q_one; ++r)
        if (std::abs(coeffs.at(r).at(0, 0)) > m_threshold) gamma0.push_back(r);
    if (static_cast<int>(gamma0.size()) > exceptions)
        throw parameter_error("coefficient profile has " + std::to_string(gamma0.size()) +
                              " indices above M, more than the declared " +
                              std::to_string(exceptions));

    const int128 e = energy(x, x, opts); // ||1_X * 1_X||_2^2 = E / |G|^3
    const long long g_size = g.size();
    const int128 x4 = ipow(static_cast<int128>(x.size()), 4);

    bool chain_ok;
    if (m_threshold == 0.0) {
        // all-integer instance: E D |G| <= D k |X|^4 + |X|^2 |G|^2
        chain_ok = e * d_min * g_size <=
                   d_min * static_cast<int128>(exceptions) * x4 +
                       static_cast<int128>(x.size()) * x.size() * g_size * g_size;
    } else {
        const long double lhs = to_long_double(e) / (static_cast<long double>(g_size) *
                                                     g_size * g_size);
        const long double rhs =
            static_cast<long double>(exceptions) * to_long_double(x4) /
                std::pow(static_cast<long double>(g_size), 4) +
            static_cast<long double>(q_one - exceptions) * std::pow(m_threshold, 4) +
            static_cast<long double>(x.size()) * x.size() /
                (static_cast<long double>(d_min) * g_size * g_size);
        chain_ok = lhs <= rhs + kRealSlack;
    }

    // support bound, exact: |XX| E >= |X|^4
    const GroupSubset xx = product_set({x, x}, opts);
    const bool support_ok = static_cast<int128>(xx.size()) * e >= x4;

    const long double l2_sq = to_long_double(e) / (static_cast<long double>(g_size) * g_size * g_size);
    const long double s0 = static_cast<long double>(exceptions) * to_long_double(x4) /
                           std::pow(static_cast<long double>(g_size), 4);
    const long double s1 = static_cast<long double>(q_one - exceptions) * std::pow(m_threshold, 4);
    const long double s2 = static_cast<long double>(x.size()) * x.size() /
                           (static_cast<long double>(d_min) * g_size * g_size);

    VerificationReport rep;
    rep.theorem = "bias";
    rep.k = 2;
    rep.sizes = {x.size()};
    rep.lhs = static_cast<double>(l2_sq);
    rep.rhs = static_cast<double>(s0 + s1 + s2);
    rep.slack = rep.rhs - rep.lhs;
    rep.pass = chain_ok && support_ok;
    rep.add_extra("l2_sq", static_cast<double>(l2_sq));
    rep.add_extra("sigma0_bound", static_cast<double>(s0));
    rep.add_extra("sigma1_bound", static_cast<double>(s1));
    rep.add_extra("sigma2_bound", static_cast<double>(s2));
    rep.add_extra("support_lower_bound",
                  e == 0 ? 0.0 : static_cast<double>(to_long_double(x4) / to_long_double(e)));
    rep.add_extra("XX_size", static_cast<long long>(xx.size()));
    rep.add_extra("E", e);
    rep.add_extra("M", m_threshold);
    rep.add_extra("exceptions", static_cast<long long>(exceptions));
    rep.add_extra("gamma0_size", static_cast<long long>(gamma0.size()));
    return rep;
}

GroupSubset random_subset(const SdpGroup& g, double density, std::uint64_t seed) {
    if (density < 0.0 || density > 1.0) throw parameter_error("density must lie in [0, 1]");
    SplitMix64 rng(seed);
    GroupSubset s(g);
    for (int i = 0; i < g.size(); ++i)
        if (rng.next_unit() < density) s.add(i);
    return s;
}

GroupSubset example1_subset(const RigidMotionGroup& g0, int k, int l) {
    const int big_q = g0.rotation_count();
    if (k < 1 || l < 1 || k * l != big_q)
        throw parameter_error("example1 requires k l = Q = " + std::to_string(big_q));
    const SdpGroup& g = g0.group();
    GroupSubset s(g);
    for (int idx = 0; idx < g.size(); ++idx)
        if (g.dot(idx) % k == 0) s.add(idx);
    return s;
}

GroupSubset structured_subset(const RigidMotionGroup& g0, const std::string& spec) {
    const std::string prefix = "example1(";
    if (spec.rfind(prefix, 0) == 0 && spec.back() == ')') {
        const std::string args = spec.substr(prefix.size(), spec.size() - prefix.size() - 1);
        const size_t comma = args.find(',');
        if (comma != std::string::npos) {
            const int k = std::stoi(args.substr(0, comma));
            const int l = std::stoi(args.substr(comma + 1));
            return example1_subset(g0, k, l);
        }
    }
    throw parameter_error("unknown structured subset spec '" + spec + "'");
}

} // namespace quasimix
