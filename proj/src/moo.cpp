#include "mosar/moo.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace mosar {

bool ObjectiveVector::feasible(double tol) const {
    const int m = dimension();
    for (int i = m - constraint_count; i < m; ++i) {
        if (values[static_cast<std::size_t>(i)] > tol) return false;
    }
    return true;
}

Dominance compare(const ObjectiveVector& a, const ObjectiveVector& b) {
    if (a.dimension() != b.dimension())
        throw std::invalid_argument("compare: objective dimension mismatch");
    bool a_better = false, b_better = false;
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        if (a.values[i] < b.values[i]) a_better = true;
        else if (b.values[i] < a.values[i]) b_better = true;
    }
    if (a_better && b_better) return Dominance::NonDominated;
    if (a_better) return Dominance::ADominatesB;
    if (b_better) return Dominance::BDominatesA;
    return Dominance::Equal;
}

ObjectiveRanges::ObjectiveRanges(int dimension)
    : lo_(static_cast<std::size_t>(dimension), 0.0),
      hi_(static_cast<std::size_t>(dimension), 0.0) {
    if (dimension < 1) throw std::invalid_argument("ObjectiveRanges: dimension < 1");
    lo_.assign(lo_.size(), std::numeric_limits<double>::infinity());
    hi_.assign(hi_.size(), -std::numeric_limits<double>::infinity());
}

void ObjectiveRanges::expand(const ObjectiveVector& v) {
    if (lo_.empty()) {
        lo_.assign(v.values.size(), std::numeric_limits<double>::infinity());
        hi_.assign(v.values.size(), -std::numeric_limits<double>::infinity());
    }
    if (v.values.size() != lo_.size())
        throw std::invalid_argument("ObjectiveRanges::expand: dimension mismatch");
    for (std::size_t i = 0; i < lo_.size(); ++i) {
        lo_[i] = std::min(lo_[i], v.values[i]);
        hi_[i] = std::max(hi_[i], v.values[i]);
    }
}

double ObjectiveRanges::width_or_unit(int i) const {
    const double w = max(i) - min(i);
    return w > 0.0 ? w : 1.0;
}

ObjectiveRanges objective_ranges(std::span<const ObjectiveVector> entries) {
    if (entries.empty()) throw std::invalid_argument("objective_ranges: empty input");
    ObjectiveRanges r;
    for (const auto& e : entries) r.expand(e);
    return r;
}

double delta_dom(const ObjectiveVector& a, const ObjectiveVector& b,
                 const ObjectiveRanges& ranges) {
    if (a.dimension() != b.dimension() || ranges.dimension() != a.dimension())
        throw std::invalid_argument("delta_dom: dimension mismatch");
    double product = 1.0;
    bool any = false;
    for (int i = 0; i < a.dimension(); ++i) {
        const double av = a.values[static_cast<std::size_t>(i)];
        const double bv = b.values[static_cast<std::size_t>(i)];
        if (av == bv) continue;
        any = true;
        product *= std::abs(av - bv) / ranges.width_or_unit(i);
    }
    return any ? product : 0.0;
}

ArchiveClassification Archive::classify(const ObjectiveVector& candidate) const {
    std::vector<std::size_t> dominated, dominating;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        switch (compare(candidate, entries_[i].objectives)) {
            case Dominance::ADominatesB: dominated.push_back(i); break;
            case Dominance::BDominatesA: dominating.push_back(i); break;
            default: break;
        }
    }
    // Transitivity with the archive invariant rules out both at once.
    assert(dominated.empty() || dominating.empty());
    if (!dominated.empty())
        return {ArchiveClassification::Kind::DominatesMembers, std::move(dominated)};
    if (!dominating.empty())
        return {ArchiveClassification::Kind::DominatedByMembers, std::move(dominating)};
    return {ArchiveClassification::Kind::NonDominated, {}};
}

bool Archive::insert(ArchiveEntry entry) {
    for (const auto& e : entries_) {
        switch (compare(entry.objectives, e.objectives)) {
            case Dominance::BDominatesA:
                throw std::invalid_argument("Archive::insert: entry is dominated");
            case Dominance::Equal:
                return false;
            default: break;
        }
    }
    std::erase_if(entries_, [&](const ArchiveEntry& e) {
        return compare(entry.objectives, e.objectives) == Dominance::ADominatesB;
    });
    entries_.push_back(std::move(entry));
    return true;
}

void Archive::remove(std::span<const std::size_t> sorted_indices) {
    if (sorted_indices.empty()) return;
    std::vector<ArchiveEntry> kept;
    kept.reserve(entries_.size() - sorted_indices.size());
    std::size_t next = 0;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (next < sorted_indices.size() && sorted_indices[next] == i) {
            ++next;
            continue;
        }
        kept.push_back(std::move(entries_[i]));
    }
    entries_ = std::move(kept);
}

bool Archive::contains_objectives(const ObjectiveVector& v) const {
    for (const auto& e : entries_) {
        if (compare(v, e.objectives) == Dominance::Equal) return true;
    }
    return false;
}

int Archive::feasible_count(double tol) const {
    int n = 0;
    for (const auto& e : entries_) {
        if (e.objectives.feasible(tol)) ++n;
    }
    return n;
}

std::vector<std::vector<std::size_t>> fast_nondominated_sort(
    std::span<const ObjectiveVector> entries, std::span<const int> objective_subset) {
    if (objective_subset.empty())
        throw std::invalid_argument("fast_nondominated_sort: empty objective subset");
    if (entries.empty()) return {};
    for (int idx : objective_subset) {
        if (idx < 0 || idx >= entries.front().dimension())
            throw std::invalid_argument("fast_nondominated_sort: subset index out of range");
    }

    auto dominates = [&](std::size_t a, std::size_t b) {
        bool better = false;
        for (int idx : objective_subset) {
            const double av = entries[a].values[static_cast<std::size_t>(idx)];
            const double bv = entries[b].values[static_cast<std::size_t>(idx)];
            if (av > bv) return false;
            if (av < bv) better = true;
        }
        return better;
    };

    const std::size_t n = entries.size();
    std::vector<int> domination_count(n, 0);
    std::vector<std::vector<std::size_t>> dominated_by(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (dominates(i, j)) {
                dominated_by[i].push_back(j);
                ++domination_count[j];
            } else if (dominates(j, i)) {
                dominated_by[j].push_back(i);
                ++domination_count[i];
            }
        }
    }

    std::vector<std::vector<std::size_t>> fronts;
    std::vector<std::size_t> current;
    for (std::size_t i = 0; i < n; ++i) {
        if (domination_count[i] == 0) current.push_back(i);
    }
    while (!current.empty()) {
        std::vector<std::size_t> next;
        for (std::size_t i : current) {
            for (std::size_t j : dominated_by[i]) {
                if (--domination_count[j] == 0) next.push_back(j);
            }
        }
        std::sort(next.begin(), next.end());
        fronts.push_back(std::move(current));
        current = std::move(next);
    }
    return fronts;
}

}  // namespace mosar
