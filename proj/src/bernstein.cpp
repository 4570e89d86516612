#include "atlas/bernstein.hpp"

#include "atlas/classifier.hpp"
#include "atlas/error.hpp"
#include "atlas/lattice.hpp"
#include "atlas/volume.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>

namespace atlas {

namespace {

constexpr long long kCoeffBound = 97;
constexpr int kMaxRejectFactor = 20;

// Dense univariate polynomial over Q, lowest degree first, no trailing zeros.
using Poly = std::vector<Rational>;

void trim(Poly& p)
{
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly derivative(const Poly& p)
{
    Poly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long long>(i));
    trim(d);
    return d;
}

Poly remainder(Poly a, const Poly& b)
{
    while (degree(a) >= degree(b)) {
        const Rational f = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

Poly gcd(Poly a, Poly b)
{
    while (!b.empty()) {
        Poly r = remainder(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Drop the power of x dividing p: roots at 0 are not in the torus.
Poly strip_zero_roots(Poly p)
{
    std::size_t z = 0;
    while (z < p.size() && p[z] == 0) ++z;
    p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(z));
    return p;
}

bool has_common_torus_root(const Poly& a, const Poly& b)
{
    if (a.empty() || b.empty()) return true;
    return degree(gcd(strip_zero_roots(a), strip_zero_roots(b))) > 0;
}

// Number of distinct non-zero roots, or nothing if p has a repeated root.
std::optional<int> simple_torus_roots(const Poly& p)
{
    Poly q = strip_zero_roots(p);
    if (q.empty()) return std::nullopt;
    if (degree(q) == 0) return 0;
    if (degree(gcd(q, derivative(q))) > 0) return std::nullopt;
    return degree(q);
}

Poly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys)
{
    // Newton divided differences, then expand.
    const std::size_t n = xs.size();
    std::vector<Rational> c = ys;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) c[i] = (c[i] - c[i - 1]) / (xs[i] - xs[i - j]);
    Poly p{c[n - 1]};
    for (std::size_t k = n - 1; k-- > 0;) {
        Poly next(p.size() + 1, Rational(0));
        for (std::size_t i = 0; i < p.size(); ++i) {
            next[i + 1] += p[i];
            next[i] -= p[i] * xs[k];
        }
        next[0] += c[k];
        p = std::move(next);
    }
    trim(p);
    return p;
}

// Bivariate polynomial with non-negative exponents: coeff[(i, j)] of x^i y^j.
using Bivariate = std::map<std::pair<long long, long long>, Integer>;

long long deg_y(const Bivariate& f)
{
    long long d = 0;
    for (const auto& [e, c] : f) d = std::max(d, e.second);
    return d;
}

long long deg_x(const Bivariate& f)
{
    long long d = 0;
    for (const auto& [e, c] : f) d = std::max(d, e.first);
    return d;
}

// Coefficient of y^j as a polynomial in x.
Poly y_coefficient(const Bivariate& f, long long j)
{
    Poly p;
    for (const auto& [e, c] : f) {
        if (e.second != j) continue;
        if (p.size() <= static_cast<std::size_t>(e.first)) p.resize(static_cast<std::size_t>(e.first) + 1, Rational(0));
        p[static_cast<std::size_t>(e.first)] += Rational(c);
    }
    trim(p);
    return p;
}

// f(x0, y) as integer coefficients in y, lowest first, padded to degree dy.
std::vector<Integer> specialize(const Bivariate& f, const Integer& x0, long long dy)
{
    std::vector<Integer> out(static_cast<std::size_t>(dy) + 1, Integer(0));
    for (const auto& [e, c] : f) out[static_cast<std::size_t>(e.second)] += c * boost::multiprecision::pow(x0, static_cast<unsigned>(e.first));
    return out;
}

Integer sylvester_determinant(const std::vector<Integer>& f, const std::vector<Integer>& g)
{
    const std::size_t m = f.size() - 1, n = g.size() - 1, size = m + n;
    if (size == 0) return 1;
    IntMatrix s(size, size);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t i = 0; i <= m; ++i) s(r, r + i) = f[m - i];
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t i = 0; i <= n; ++i) s(n + r, r + i) = g[n - i];
    return determinant(s);
}

// Res_y(f, g) with the formal y-degrees, as a polynomial in x.
Poly resultant_in_y(const Bivariate& f, const Bivariate& g)
{
    const long long df = deg_y(f), dg = deg_y(g);
    const long long bound = deg_x(f) * dg + deg_x(g) * df;
    std::vector<Rational> xs, ys;
    for (long long i = 0; i <= bound; ++i) {
        Integer x0 = i + 1;
        xs.emplace_back(x0);
        ys.emplace_back(sylvester_determinant(specialize(f, x0, df), specialize(g, x0, dg)));
    }
    return interpolate(xs, ys);
}

std::vector<Integer> draw_coefficients(std::mt19937_64& rng, std::size_t n)
{
    std::uniform_int_distribution<long long> dist(-kCoeffBound, kCoeffBound);
    std::vector<Integer> out;
    for (std::size_t i = 0; i < n; ++i) {
        long long c = 0;
        while (c == 0) c = dist(rng);
        out.emplace_back(c);
    }
    return out;
}

// Shift exponents to be non-negative; torus roots are unchanged.
Bivariate polynomial_on(const std::vector<Point>& a, const std::vector<Integer>& coeffs)
{
    const std::size_t r = a.front().size();
    std::vector<Integer> low(r);
    for (std::size_t c = 0; c < r; ++c) {
        low[c] = a[0][c];
        for (const auto& p : a) low[c] = std::min(low[c], p[c]);
    }
    Bivariate f;
    for (std::size_t i = 0; i < a.size(); ++i) {
        long long ex = r > 0 ? static_cast<long long>(a[i][0] - low[0]) : 0;
        long long ey = r > 1 ? static_cast<long long>(a[i][1] - low[1]) : 0;
        f[{ex, ey}] += coeffs[i];
    }
    return f;
}

std::optional<int> count_rank_one(const Support& a, std::mt19937_64& rng)
{
    return simple_torus_roots(y_coefficient(polynomial_on(a.points(), draw_coefficients(rng, a.size())), 0));
}

// Unimodular exponent maps tried in turn; torus root counts do not change, but
// one of them usually gives the roots distinct x-coordinates.
constexpr long long kCoordinateChanges[][4] = {
    {1, 0, 0, 1}, {0, 1, 1, 0}, {1, 1, 0, 1}, {1, 0, 1, 1}, {1, 2, 0, 1}, {2, 1, 1, 1}, {1, -1, 0, 1}, {3, 1, 2, 1},
};

std::vector<Point> transformed(const Support& a, const long long (&m)[4])
{
    std::vector<Point> pts;
    for (const auto& p : a) pts.push_back({m[0] * p[0] + m[1] * p[1], m[2] * p[0] + m[3] * p[1]});
    return pts;
}

std::optional<int> count_rank_two(const Support& a, const Support& b, std::mt19937_64& rng)
{
    const std::vector<Integer> ca = draw_coefficients(rng, a.size());
    const std::vector<Integer> cb = draw_coefficients(rng, b.size());
    for (const auto& m : kCoordinateChanges) {
        const Bivariate f = polynomial_on(transformed(a, m), ca);
        const Bivariate g = polynomial_on(transformed(b, m), cb);
        // Spurious resultant roots from a common zero of both leading coefficients,
        // and roots with y = 0, make this projection unusable.
        if (has_common_torus_root(y_coefficient(f, deg_y(f)), y_coefficient(g, deg_y(g)))) continue;
        if (has_common_torus_root(y_coefficient(f, 0), y_coefficient(g, 0))) continue;
        if (auto count = simple_torus_roots(resultant_in_y(f, g))) return count;
    }
    return std::nullopt;
}

} // namespace

OracleVerdict bernstein_oracle(const SupportTuple& t, int trials, std::uint64_t seed)
{
    if (classify(t).kind != TupleKind::BK) fail(ErrorCode::NotBK, "the root-count oracle needs a BK-tuple");
    NormalizedTuple n = normalize(t);
    const std::size_t rank = n.tuple.ambient_rank();
    if (rank > 2) fail(ErrorCode::RankTooHigh, "root counting is implemented up to rank 2, got " + std::to_string(rank));

    OracleVerdict v;
    v.mixed_volume = rank == 0 ? Integer(1) : ambient_mixed_volume(n.tuple);
    std::mt19937_64 rng(seed);
    const int max_draws = trials * kMaxRejectFactor;
    for (int draw = 0; draw < max_draws && v.accepted < trials; ++draw) {
        std::optional<int> count;
        if (rank == 0)
            count = 1;
        else if (rank == 1)
            count = count_rank_one(n.tuple[0], rng);
        else
            count = count_rank_two(n.tuple[0], n.tuple[1], rng);
        if (!count) {
            ++v.rejected;
            continue;
        }
        ++v.accepted;
        Integer c = *count;
        if (c != v.mixed_volume) ++v.mismatches;
        v.max_count = std::max(v.max_count, c);
        v.counts.push_back(std::move(c));
    }
    return v;
}

} // namespace atlas
