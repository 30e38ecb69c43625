#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hypercolor {

/// Dense bit vector over GF(2), packed into 64-bit words.
struct BitVec {
    int n = 0;
    std::vector<std::uint64_t> w;

    BitVec() = default;
    explicit BitVec(int bits) : n(bits), w((bits + 63) / 64, 0) {}

    bool get(int i) const { return (w[i >> 6] >> (i & 63)) & 1u; }
    void set(int i, bool v = true) {
        std::uint64_t m = std::uint64_t(1) << (i & 63);
        if (v) w[i >> 6] |= m; else w[i >> 6] &= ~m;
    }
    void flip(int i) { w[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    BitVec& operator^=(const BitVec& o) {
        for (std::size_t k = 0; k < w.size(); ++k) w[k] ^= o.w[k];
        return *this;
    }
    friend BitVec operator^(BitVec a, const BitVec& b) { a ^= b; return a; }
    bool operator==(const BitVec& o) const { return n == o.n && w == o.w; }

    int popcount() const;
    bool zero() const;
    /// Parity of the AND of two vectors (GF(2) inner product).
    int dot(const BitVec& o) const;
    /// Index of lowest set bit, or -1.
    int lowest_bit() const;
    std::vector<int> ones() const;
    std::string to_string() const;
};

/// Row-major dense matrix over GF(2).
class BinaryMatrix {
  public:
    BinaryMatrix() = default;
    BinaryMatrix(int rows, int cols) : rows_(rows), cols_(cols), r_(rows, BitVec(cols)) {}

    static BinaryMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    BitVec& row(int i) { return r_[i]; }
    const BitVec& row(int i) const { return r_[i]; }
    bool get(int i, int j) const { return r_[i].get(j); }
    void set(int i, int j, bool v = true) { r_[i].set(j, v); }
    void append_row(const BitVec& v) { r_.push_back(v); ++rows_; }

    bool operator==(const BinaryMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && r_ == o.r_; }

    /// H * v over GF(2); v has cols() bits, result has rows() bits.
    BitVec mul(const BitVec& v) const;
    /// A * B^T: (i,j) entry is parity of overlap between row i of *this and row j of o.
    BinaryMatrix gram(const BinaryMatrix& o) const;

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<BitVec> r_;
};

/// Incrementally maintained echelonized span of bit vectors.
/// Supports rank queries and membership tests by reduction.
struct GF2Span {
    int n = 0;
    std::vector<BitVec> rows;   // echelon rows, one pivot each
    std::vector<int> pivots;    // pivot column of rows[i]

    GF2Span() = default;
    explicit GF2Span(int bits) : n(bits) {}

    int rank() const { return static_cast<int>(rows.size()); }
    /// Reduces v against the span in place; returns the residue.
    BitVec reduce(BitVec v) const;
    bool contains(const BitVec& v) const { return reduce(v).zero(); }
    /// Adds v to the span. Returns true if the rank grew.
    bool add(BitVec v);
};

int rank_gf2(const BinaryMatrix& m);
GF2Span row_span(const BinaryMatrix& m);
/// Basis of { x : m * x = 0 }.
std::vector<BitVec> kernel_basis(const BinaryMatrix& m);
/// Solves m^T stacked: is target in the row span of m?
bool in_row_span(const BinaryMatrix& m, const BitVec& target);

}  // namespace hypercolor
