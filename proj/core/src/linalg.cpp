#include "nashforge/linalg.hpp"

#include <cassert>

namespace nashforge {

void ScalarMatrix::append_row(const std::vector<Scalar>& row) {
    assert(row.size() == cols_);
    a_.insert(a_.end(), row.begin(), row.end());
    ++rows_;
}

std::vector<size_t> ScalarMatrix::rref() {
    std::vector<size_t> pivot_cols;
    size_t r = 0;
    for (size_t c = 0; c < cols_ && r < rows_; ++c) {
        size_t p = r;
        while (p < rows_ && at(p, c).is_zero()) ++p;
        if (p == rows_) continue;
        if (p != r)
            for (size_t j = c; j < cols_; ++j) std::swap(at(p, j), at(r, j));
        Scalar inv = at(r, c).inverse();
        for (size_t j = c; j < cols_; ++j) at(r, j) = at(r, j) * inv;
        for (size_t i = 0; i < rows_; ++i) {
            if (i == r || at(i, c).is_zero()) continue;
            Scalar f = at(i, c);
            for (size_t j = c; j < cols_; ++j) at(i, j) = at(i, j) - f * at(r, j);
        }
        pivot_cols.push_back(c);
        ++r;
    }
    return pivot_cols;
}

size_t ScalarMatrix::rank() const {
    ScalarMatrix m = *this;
    return m.rref().size();
}

std::vector<std::vector<Scalar>> ScalarMatrix::null_space() const {
    ScalarMatrix m = *this;
    std::vector<size_t> pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (size_t free_c = 0; free_c < cols_; ++free_c) {
        if (is_pivot[free_c]) continue;
        std::vector<Scalar> v(cols_, Scalar::zero(F_));
        v[free_c] = Scalar::one(F_);
        for (size_t pr = 0; pr < pivots.size(); ++pr)
            v[pivots[pr]] = -m.at(pr, free_c);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool SparseRank::add_row(std::map<size_t, Scalar> row) {
    for (;;) {
        // drop explicit zeros at the front
        while (!row.empty() && row.begin()->second.is_zero()) row.erase(row.begin());
        if (row.empty()) return false;
        auto it = pivots_.find(row.begin()->first);
        if (it == pivots_.end()) break;
        Scalar f = row.begin()->second;
        for (const auto& [c, v] : it->second) {
            auto jt = row.find(c);
            Scalar nv = (jt == row.end() ? Scalar::zero(F_) : jt->second) - f * v;
            if (nv.is_zero()) {
                if (jt != row.end()) row.erase(jt);
            } else {
                row[c] = nv;
            }
        }
    }
    size_t lead = row.begin()->first;
    Scalar inv = row.begin()->second.inverse();
    for (auto& [c, v] : row) v = v * inv;
    pivots_.emplace(lead, std::move(row));
    return true;
}

}  // namespace nashforge
