#pragma once

#include "atlas/index_subset.hpp"
#include "atlas/integer.hpp"
#include "atlas/lattice.hpp"

#include <cstddef>
#include <vector>

namespace atlas {

/// A finite non-empty set of lattice points, kept sorted and duplicate-free.
class Support {
public:
    Support() = default;
    explicit Support(std::vector<Point> points);
    Support(std::initializer_list<std::initializer_list<long long>> points);

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return points_.size(); }
    const std::vector<Point>& points() const { return points_; }
    const Point& operator[](std::size_t i) const { return points_[i]; }
    auto begin() const { return points_.begin(); }
    auto end() const { return points_.end(); }

    /// Lexicographically smallest point; used as the translation anchor.
    const Point& anchor() const { return points_.front(); }

    Support translated(const Point& shift) const;
    Support mapped(const IntMatrix& linear_map) const;
    /// Differences p - anchor() for every non-anchor point.
    std::vector<Point> differences() const;

    bool operator==(const Support&) const = default;

private:
    std::size_t dim_ = 0;
    std::vector<Point> points_;
};

/// An ordered tuple of supports living in Z^ambient_rank. Order matters:
/// every report refers back to these positions.
class SupportTuple {
public:
    SupportTuple() = default;
    SupportTuple(std::size_t ambient_rank, std::vector<Support> supports);

    std::size_t ambient_rank() const { return ambient_rank_; }
    int size() const { return static_cast<int>(supports_.size()); }
    const Support& operator[](int i) const { return supports_[static_cast<std::size_t>(i)]; }
    const std::vector<Support>& supports() const { return supports_; }
    IndexSubset all() const { return IndexSubset::full(size()); }

    bool operator==(const SupportTuple&) const = default;

private:
    std::size_t ambient_rank_ = 0;
    std::vector<Support> supports_;
};

struct NormalizationRecord {
    std::size_t input_rank = 0;
    std::vector<Point> translations;  ///< subtracted from each support
    IntMatrix coordinate_map;         ///< rank x input_rank, iso on the saturated span

    bool operator==(const NormalizationRecord&) const = default;
};

struct NormalizedTuple {
    SupportTuple tuple;
    NormalizationRecord record;
};

/// Affine dimension of a finite point set (0 for a single point).
std::size_t affine_dimension(const std::vector<Point>& points);

/// Lattice generated by the translated supports of `s` (i.e. by differences).
Sublattice tuple_lattice(const SupportTuple& t, IndexSubset s);

/// Index of the generated lattice in its saturation.
Integer saturation_index(const Sublattice& s);

/// dim of the affine span of the Minkowski sum over `s`.
std::size_t span_dimension(const SupportTuple& t, IndexSubset s);

/// Translate every support to contain the origin and restrict to the
/// saturated span so that the result spans its ambient lattice.
NormalizedTuple normalize(const SupportTuple& t);

int defect(const SupportTuple& t, IndexSubset s);

SupportTuple subtuple(const SupportTuple& t, IndexSubset s);

/// Project the supports outside `b` along the saturated span of the supports in `b`.
SupportTuple quotient_tuple(const SupportTuple& t, IndexSubset b);

Support minkowski_sum(const std::vector<Support>& supports);

/// Union of A_i x {e_i} in Z^(n+k).
Support cayley_set(const SupportTuple& t);

} // namespace atlas
