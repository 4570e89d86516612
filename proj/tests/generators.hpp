#pragma once

#include "atlas/classifier.hpp"
#include "atlas/support.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace atlas::testing {

inline long long uniform(std::mt19937_64& rng, long long lo, long long hi)
{
    return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

inline Point random_point(std::mt19937_64& rng, std::size_t dim, long long lo, long long hi)
{
    Point p;
    for (std::size_t i = 0; i < dim; ++i) p.emplace_back(uniform(rng, lo, hi));
    return p;
}

inline Support random_support(std::mt19937_64& rng, std::size_t dim, std::size_t max_points, long long box)
{
    long long capacity = 1;
    for (std::size_t i = 0; i < dim && capacity < static_cast<long long>(max_points); ++i) capacity *= box + 1;
    const auto count =
        static_cast<std::size_t>(uniform(rng, 1, std::min(capacity, static_cast<long long>(max_points))));
    std::set<Point> pts;
    while (pts.size() < count) pts.insert(random_point(rng, dim, 0, box));
    return Support(std::vector<Point>(pts.begin(), pts.end()));
}

inline SupportTuple random_tuple(std::mt19937_64& rng, std::size_t dim, int k, std::size_t max_points, long long box)
{
    std::vector<Support> s;
    for (int i = 0; i < k; ++i) s.push_back(random_support(rng, dim, max_points, box));
    return SupportTuple(dim, std::move(s));
}

/// Random unimodular matrix built from elementary operations.
/// Rejection sampling: square tuples until one is BK.
inline SupportTuple random_bk_tuple(std::mt19937_64& rng, std::size_t max_rank, std::size_t max_points)
{
    for (;;) {
        auto n = static_cast<std::size_t>(uniform(rng, 1, static_cast<long long>(max_rank)));
        SupportTuple t = random_tuple(rng, n, static_cast<int>(n), max_points, uniform(rng, 1, 2));
        if (classify(t).kind == TupleKind::BK) return t;
    }
}

inline IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int steps = 6)
{
    IntMatrix m = IntMatrix::identity(n);
    if (n < 2) return m;
    for (int i = 0; i < steps; ++i) {
        auto a = static_cast<std::size_t>(uniform(rng, 0, static_cast<long long>(n) - 1));
        auto b = static_cast<std::size_t>(uniform(rng, 0, static_cast<long long>(n) - 2));
        if (b >= a) ++b;
        m.add_row_multiple(a, b, Integer(uniform(rng, -2, 2)));
        if (uniform(rng, 0, 3) == 0) m.swap_rows(a, b);
    }
    return m;
}

} // namespace atlas::testing
