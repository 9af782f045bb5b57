#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "surf10/graded.hpp"

namespace surf10 {

/// Graded Betti numbers keyed by (homological index i, internal degree j);
/// zeros are implicit. Displayed in the row convention row = j - i, matching
/// the standard computer-algebra layout.
struct BettiTable {
    std::map<std::pair<int, int>, int64_t> entries;

    void add(int i, int j, int64_t v) {
        if (v == 0) return;
        entries[{i, j}] += v;
        if (entries[{i, j}] == 0) entries.erase({i, j});
    }

    int64_t get(int i, int j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? 0 : it->second;
    }

    int projective_dimension() const {
        int m = 0;
        for (const auto& [k, v] : entries) m = std::max(m, k.first);
        return m;
    }

    /// Max row index = max (internal degree - homological index).
    int regularity() const {
        int m = 0;
        bool any = false;
        for (const auto& [k, v] : entries) {
            m = any ? std::max(m, k.second - k.first) : k.second - k.first;
            any = true;
        }
        return m;
    }

    /// N_{d,p}: rows >= d vanish in homological range 1..p. (In classical
    /// indexing: beta_{i,i+j} = 0 for 1 <= i <= p and j >= d.)
    bool check_property_N(int d, int p) const {
        for (const auto& [k, v] : entries) {
            auto [i, j] = k;
            if (i >= 1 && i <= p && j - i >= d && v != 0) return false;
        }
        return true;
    }

    /// ACM iff projective dimension equals the codimension.
    bool is_acm(int codim) const { return projective_dimension() == codim; }

    /// Coefficients of sum (-1)^i beta_{i,j} t^j — must reproduce the Hilbert
    /// numerator of the resolved module.
    std::vector<int64_t> alternating_sum() const {
        std::vector<int64_t> out;
        for (const auto& [k, v] : entries) {
            auto [i, j] = k;
            if (out.size() <= static_cast<size_t>(j)) out.resize(static_cast<size_t>(j) + 1, 0);
            out[static_cast<size_t>(j)] += (i % 2 == 0 ? v : -v);
        }
        while (!out.empty() && out.back() == 0) out.pop_back();
        return out;
    }

    /// Aligned text in the row convention, with a total row:
    ///        0  1  2  3
    /// total: 1 10 15  6
    /// 0:     1  .  .  .
    /// ...
    std::string to_text() const {
        int pd = projective_dimension();
        int min_row = 0, max_row = 0;
        bool any = false;
        for (const auto& [k, v] : entries) {
            int row = k.second - k.first;
            min_row = any ? std::min(min_row, row) : row;
            max_row = any ? std::max(max_row, row) : row;
            any = true;
        }
        std::vector<int64_t> totals(static_cast<size_t>(pd) + 1, 0);
        for (const auto& [k, v] : entries) totals[static_cast<size_t>(k.first)] += v;
        auto cell = [](int64_t v) { return v == 0 ? std::string(".") : std::to_string(v); };
        size_t width = 1;
        for (int64_t t : totals) width = std::max(width, std::to_string(t).size());
        std::ostringstream os;
        auto pad = [&](const std::string& s) {
            return std::string(width > s.size() ? width - s.size() : 0, ' ') + s;
        };
        size_t label = std::max<size_t>(std::to_string(max_row).size() + 1, 6);
        auto lab = [&](const std::string& s) {
            return s + std::string(label > s.size() ? label - s.size() : 0, ' ');
        };
        os << lab("");
        for (int i = 0; i <= pd; ++i) os << ' ' << pad(std::to_string(i));
        os << '\n' << lab("total:");
        for (int i = 0; i <= pd; ++i) os << ' ' << pad(std::to_string(totals[static_cast<size_t>(i)]));
        os << '\n';
        for (int row = min_row; row <= max_row; ++row) {
            os << lab(std::to_string(row) + ":");
            for (int i = 0; i <= pd; ++i) os << ' ' << pad(cell(get(i, i + row)));
            os << '\n';
        }
        return os.str();
    }

    friend bool operator==(const BettiTable& a, const BettiTable& b) {
        return a.entries == b.entries;
    }
};

/// Betti table read off a minimal resolution's twists: beta_0 from F_0,
/// beta_i from the column twists of the i-th differential.
inline BettiTable betti_from_resolution(const FreeResolution& res) {
    BettiTable b;
    for (int t : res.f0_twists) b.add(0, t, 1);
    for (size_t k = 0; k < res.diffs.size(); ++k)
        for (int t : res.diffs[k].col_twists) b.add(static_cast<int>(k) + 1, t, 1);
    return b;
}

} // namespace surf10
