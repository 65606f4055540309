#pragma once

// Incrementally built row space over Q with sparse rows. Every stored echelon
// row remembers how it was derived from the inserted rows, so membership
// queries can return exact coefficients over the original rows.

#include "nilalg/rational.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

namespace nilalg {

using SparseVector = std::map<std::size_t, Rational>;

class RowSpace {
public:
    explicit RowSpace(std::size_t dimension) : dimension_(dimension) {}

    std::size_t dimension() const noexcept { return dimension_; }
    std::size_t rank() const noexcept { return echelon_.size(); }
    bool full() const noexcept { return rank() == dimension_; }

    /// Inserts a row tagged with an opaque caller id. Returns true if it
    /// increased the rank; dependent rows are dropped.
    bool insert(SparseVector row, std::size_t tag) {
        check_columns(row);
        std::vector<std::pair<std::size_t, Rational>> steps;
        reduce(row, &steps);
        if (row.empty())
            return false;
        auto pivot = row.begin()->first;
        Rational scale = row.begin()->second;
        Rational inv = 1 / scale;
        EchelonRow e;
        e.entries.reserve(row.size());
        for (auto &[c, v] : row)
            e.entries.emplace_back(c, v * inv);
        e.pivot = pivot;
        e.tag = tag;
        e.scale = scale;
        e.steps = std::move(steps);
        pivots_.emplace(pivot, echelon_.size());
        echelon_.push_back(std::move(e));
        return true;
    }

    bool contains(SparseVector v) const {
        check_columns(v);
        reduce(v, nullptr);
        return v.empty();
    }

    /// Coefficients c_i with v = sum c_i * (row inserted with tag t_i), or
    /// nullopt if v is not in the row space. Only independent rows appear.
    std::optional<std::vector<std::pair<std::size_t, Rational>>> express(SparseVector v) const {
        check_columns(v);
        std::vector<std::pair<std::size_t, Rational>> steps;
        reduce(v, &steps);
        if (!v.empty())
            return std::nullopt;
        // v = sum_j t_j e_j with e_j = (row_j - sum mu_ji e_i) / s_j.
        std::vector<Rational> t(echelon_.size());
        for (auto &[idx, f] : steps)
            t[idx] += f;
        std::vector<std::pair<std::size_t, Rational>> result;
        for (std::size_t j = echelon_.size(); j-- > 0;) {
            if (t[j] == 0)
                continue;
            const auto &e = echelon_[j];
            Rational coef = t[j] / e.scale;
            result.emplace_back(e.tag, coef);
            for (auto &[i, mu] : e.steps)
                t[i] -= coef * mu;
        }
        std::reverse(result.begin(), result.end());
        return result;
    }

    /// Tags of the rows that form the current basis, in insertion order.
    std::vector<std::size_t> basis_tags() const {
        std::vector<std::size_t> tags;
        tags.reserve(echelon_.size());
        for (auto &e : echelon_)
            tags.push_back(e.tag);
        return tags;
    }

private:
    struct EchelonRow {
        std::size_t pivot = 0;
        std::size_t tag = 0;
        Rational scale;
        std::vector<std::pair<std::size_t, Rational>> entries;  // normalized, pivot entry 1
        std::vector<std::pair<std::size_t, Rational>> steps;    // (echelon index, factor)
    };

    void check_columns(const SparseVector &v) const {
        if (!v.empty() && v.rbegin()->first >= dimension_)
            throw std::out_of_range("RowSpace: column index out of range");
    }

    void reduce(SparseVector &row, std::vector<std::pair<std::size_t, Rational>> *steps) const {
        auto it = row.begin();
        while (it != row.end()) {
            auto found = pivots_.find(it->first);
            if (found == pivots_.end()) {
                ++it;
                continue;
            }
            const auto &e = echelon_[found->second];
            Rational factor = it->second;
            std::size_t col = it->first;
            for (auto &[c, v] : e.entries) {
                auto &slot = row[c];
                slot -= factor * v;
                if (slot == 0)
                    row.erase(c);
            }
            if (steps)
                steps->emplace_back(found->second, factor);
            it = row.upper_bound(col);
        }
    }

    std::size_t dimension_;
    std::vector<EchelonRow> echelon_;
    std::unordered_map<std::size_t, std::size_t> pivots_;
};

} // namespace nilalg
