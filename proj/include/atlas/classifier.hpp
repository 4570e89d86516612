#pragma once

#include "atlas/index_subset.hpp"
#include "atlas/support.hpp"

#include <optional>
#include <vector>

namespace atlas {

/// Defect of every subset of a tuple, indexed by bit mask. The empty subset has defect 0.
class DefectTable {
public:
    DefectTable() = default;
    explicit DefectTable(const SupportTuple& t, int max_size = kMaxTupleSize);

    int size() const { return k_; }
    int operator()(IndexSubset s) const { return defects_[s.bits()]; }
    /// dim of the affine span of the Minkowski sum over s.
    int span_dimension(IndexSubset s) const { return defects_[s.bits()] + s.size(); }

private:
    int k_ = 0;
    std::vector<int> defects_;
};

struct DefectScan {
    int min_defect = 0;
    std::vector<IndexSubset> minimizers;  ///< inclusion-minimal, lexicographic order
};

DefectScan min_defect_scan(const DefectTable& table);
DefectScan min_defect_scan(const SupportTuple& t);

IndexSubset minimal_defect_subtuple(const DefectTable& table);
IndexSubset minimal_defect_subtuple(const SupportTuple& t);

/// Inclusion-minimal subsets of negative defect; each has defect -1.
std::vector<IndexSubset> circuits(const DefectTable& table);
std::vector<IndexSubset> circuits(const SupportTuple& t);

bool is_essential(const DefectTable& table);
bool is_essential(const SupportTuple& t);

enum class TupleKind { LinearlyDependent, BK, Underdetermined };

std::string_view kind_name(TupleKind kind);

struct TupleClass {
    TupleKind kind = TupleKind::BK;
    int min_defect = 0;
    int total_defect = 0;
    std::optional<IndexSubset> minimal_subtuple;
    std::vector<IndexSubset> circuits;
    bool essential = true;

    bool unique_circuit() const { return circuits.size() == 1; }
    bool operator==(const TupleClass&) const = default;
};

TupleClass classify(const SupportTuple& t, int max_size = kMaxTupleSize);

} // namespace atlas
