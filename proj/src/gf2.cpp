#include "hypercolor/gf2.hpp"

#include <bit>

namespace hypercolor {

int BitVec::popcount() const {
    int c = 0;
    for (auto word : w) c += std::popcount(word);
    return c;
}

bool BitVec::zero() const {
    for (auto word : w)
        if (word) return false;
    return true;
}

int BitVec::dot(const BitVec& o) const {
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < w.size(); ++k) acc ^= w[k] & o.w[k];
    return std::popcount(acc) & 1;
}

int BitVec::lowest_bit() const {
    for (std::size_t k = 0; k < w.size(); ++k)
        if (w[k]) return static_cast<int>(k * 64 + std::countr_zero(w[k]));
    return -1;
}

std::vector<int> BitVec::ones() const {
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
        if (get(i)) out.push_back(i);
    return out;
}

std::string BitVec::to_string() const {
    std::string s(n, '0');
    for (int i = 0; i < n; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

BinaryMatrix BinaryMatrix::identity(int n) {
    BinaryMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i);
    return m;
}

BitVec BinaryMatrix::mul(const BitVec& v) const {
    BitVec out(rows_);
    for (int i = 0; i < rows_; ++i)
        if (r_[i].dot(v)) out.set(i);
    return out;
}

BinaryMatrix BinaryMatrix::gram(const BinaryMatrix& o) const {
    BinaryMatrix out(rows_, o.rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < o.rows_; ++j)
            if (r_[i].dot(o.r_[j])) out.set(i, j);
    return out;
}

BitVec GF2Span::reduce(BitVec v) const {
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (v.get(pivots[i])) v ^= rows[i];
    return v;
}

bool GF2Span::add(BitVec v) {
    v = reduce(v);
    int p = v.lowest_bit();
    if (p < 0) return false;
    // Keep earlier rows reduced against the new pivot.
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (rows[i].get(p)) rows[i] ^= v;
    rows.push_back(std::move(v));
    pivots.push_back(p);
    return true;
}

int rank_gf2(const BinaryMatrix& m) {
    GF2Span s(m.cols());
    for (int i = 0; i < m.rows(); ++i) s.add(m.row(i));
    return s.rank();
}

GF2Span row_span(const BinaryMatrix& m) {
    GF2Span s(m.cols());
    for (int i = 0; i < m.rows(); ++i) s.add(m.row(i));
    return s;
}

std::vector<BitVec> kernel_basis(const BinaryMatrix& m) {
    int rows = m.rows(), cols = m.cols();
    // Gaussian elimination tracking pivot columns.
    std::vector<BitVec> work;
    work.reserve(rows);
    for (int i = 0; i < rows; ++i) work.push_back(m.row(i));
    std::vector<int> pivot_of_col(cols, -1);
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i)
            if (work[i].get(c)) { pr = i; break; }
        if (pr < 0) continue;
        std::swap(work[r], work[pr]);
        for (int i = 0; i < rows; ++i)
            if (i != r && work[i].get(c)) work[i] ^= work[r];
        pivot_of_col[c] = r;
        ++r;
    }
    std::vector<BitVec> basis;
    for (int c = 0; c < cols; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        BitVec v(cols);
        v.set(c);
        for (int c2 = 0; c2 < cols; ++c2) {
            int pr = pivot_of_col[c2];
            if (pr >= 0 && work[pr].get(c)) v.set(c2);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

bool in_row_span(const BinaryMatrix& m, const BitVec& target) {
    GF2Span s = row_span(m);
    return s.contains(target);
}

}  // namespace hypercolor
