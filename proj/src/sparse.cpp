#include "cotilt/sparse.hpp"

#include <algorithm>

namespace cotilt {

namespace {

// a + f*b for sorted sparse rows
SparseRow axpy(const SparseRow& a, const Scalar& f, const SparseRow& b)
{
    SparseRow out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.push_back({b[j].first, f * b[j].second});
            ++j;
        } else {
            Scalar v = a[i].second + f * b[j].second;
            if (!v.is_zero()) out.push_back({a[i].first, v});
            ++i;
            ++j;
        }
    }
    return out;
}

Scalar coeff(const SparseRow& r, int c)
{
    for (const auto& [k, v] : r) {
        if (k == c) return v;
        if (k > c) break;
    }
    return Scalar(0);
}

}  // namespace

void SparseEliminator::add(SparseRow row)
{
    std::erase_if(row, [](const auto& e) { return e.second.is_zero(); });
    // Existing rows are fully reduced, so one pass over their pivots suffices.
    for (const auto& [p, prow] : rows_) {
        Scalar c = coeff(row, p);
        if (!c.is_zero()) row = axpy(row, -c, prow);
    }
    if (row.empty()) return;
    int piv = row.front().first;
    Scalar inv = row.front().second.inverse();
    for (auto& e : row) e.second *= inv;
    for (auto& [p, prow] : rows_) {
        Scalar c = coeff(prow, piv);
        if (!c.is_zero()) prow = axpy(prow, -c, row);
    }
    rows_.emplace(piv, std::move(row));
}

std::vector<int> SparseEliminator::free_columns() const
{
    std::vector<int> out;
    for (int c = 0; c < n_; ++c)
        if (!rows_.count(c)) out.push_back(c);
    return out;
}

SparseRow SparseEliminator::null_vector(int free_col) const
{
    SparseRow v;
    for (const auto& [p, prow] : rows_) {
        Scalar c = coeff(prow, free_col);
        if (!c.is_zero()) v.push_back({p, -c});
    }
    v.push_back({free_col, Scalar(1)});
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
}

}  // namespace cotilt
