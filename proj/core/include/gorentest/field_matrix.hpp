// Exact dense linear algebra over prime fields F_p.
//
// Matrices over F_2 are stored bit-packed (64 entries per word); all other
// characteristics use one 32-bit word per entry. Elimination is plain
// Gauss-Jordan with a fixed pivot order (leftmost column, topmost row), so
// every basis this header hands out is reproducible bit for bit.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gorentest {

using Elem = std::uint32_t;
using Vec = std::vector<Elem>;

class PrimeField {
 public:
  /// Throws std::invalid_argument unless 2 <= p <= 2^31-1 and p is prime.
  explicit PrimeField(std::uint64_t p);

  std::uint32_t characteristic() const { return p_; }
  bool is_binary() const { return p_ == 2; }

  Elem reduce(std::int64_t v) const {
    auto r = v % static_cast<std::int64_t>(p_);
    return static_cast<Elem>(r < 0 ? r + p_ : r);
  }
  Elem add(Elem a, Elem b) const {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Elem>(s >= p_ ? s - p_ : s);
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>((std::uint64_t{a} * b) % p_);
  }
  /// Multiplicative inverse; a must be nonzero.
  Elem inv(Elem a) const;
  /// (-1)^e as a field element.
  Elem sign(long long e) const { return (e % 2 == 0) ? 1 : neg(1); }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

class FieldMatrix {
 public:
  FieldMatrix(PrimeField field, std::size_t rows, std::size_t cols);

  static FieldMatrix identity(PrimeField field, std::size_t n);
  /// Builds a matrix from row-major integer data (reduced mod p).
  static FieldMatrix from_rows(PrimeField field,
                               const std::vector<std::vector<long long>>& rows);
  static FieldMatrix column_vector(PrimeField field, const Vec& v);

  const PrimeField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Elem at(std::size_t r, std::size_t c) const {
    if (binary_) return (bits_[r * stride_ + c / 64] >> (c % 64)) & 1U;
    return vals_[r * cols_ + c];
  }
  void set(std::size_t r, std::size_t c, Elem v) {
    if (binary_) {
      auto& w = bits_[r * stride_ + c / 64];
      const std::uint64_t mask = std::uint64_t{1} << (c % 64);
      w = (v & 1U) ? (w | mask) : (w & ~mask);
    } else {
      vals_[r * cols_ + c] = v;
    }
  }
  void add_at(std::size_t r, std::size_t c, Elem v) {
    if (binary_) {
      if (v & 1U) bits_[r * stride_ + c / 64] ^= std::uint64_t{1} << (c % 64);
    } else {
      auto& x = vals_[r * cols_ + c];
      x = field_.add(x, v);
    }
  }

  Vec column(std::size_t c) const;
  Vec row(std::size_t r) const;
  void set_column(std::size_t c, const Vec& v);

  bool is_zero() const;
  std::size_t nonzeros() const;

  FieldMatrix transpose() const;
  FieldMatrix block(std::size_t r0, std::size_t c0, std::size_t nr,
                    std::size_t nc) const;
  /// Adds `b` into the block with top-left corner (r0, c0).
  void add_block(std::size_t r0, std::size_t c0, const FieldMatrix& b);
  /// Adds `scale * b` into the block with top-left corner (r0, c0).
  void add_block(std::size_t r0, std::size_t c0, const FieldMatrix& b,
                 Elem scale);
  FieldMatrix scaled(Elem s) const;

  Vec apply(const Vec& v) const;

  std::string to_string() const;

  friend bool operator==(const FieldMatrix& a, const FieldMatrix& b);

 private:
  friend class Eliminator;
  friend FieldMatrix compose(const FieldMatrix& a, const FieldMatrix& b);
  friend FieldMatrix operator+(const FieldMatrix& a, const FieldMatrix& b);

  PrimeField field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  bool binary_ = false;
  std::size_t stride_ = 0;  // words per row when binary
  std::vector<std::uint64_t> bits_;
  std::vector<Elem> vals_;
};

/// A * B. Throws std::invalid_argument on shape mismatch.
FieldMatrix compose(const FieldMatrix& a, const FieldMatrix& b);
FieldMatrix operator+(const FieldMatrix& a, const FieldMatrix& b);
FieldMatrix operator-(const FieldMatrix& a, const FieldMatrix& b);
FieldMatrix direct_sum(const FieldMatrix& a, const FieldMatrix& b);
/// Entry ((i, j), (k, l)) = a(i, k) * b(j, l), rows indexed i * rows(b) + j.
FieldMatrix kronecker(const FieldMatrix& a, const FieldMatrix& b);
/// Block-diagonal matrix with `copies` copies of `a`.
FieldMatrix repeat_diagonal(const FieldMatrix& a, std::size_t copies);
/// Horizontal / vertical concatenation; empty input lists are illegal.
FieldMatrix hstack(std::span<const FieldMatrix> parts);
FieldMatrix vstack(std::span<const FieldMatrix> parts);

struct RankProfile {
  std::size_t rank = 0;
  FieldMatrix kernel_basis;          // cols(A) x nullity
  FieldMatrix image_basis;           // rows(A) x rank, pivot columns of A
  std::vector<std::size_t> pivot_columns;
};

RankProfile rank_profile(const FieldMatrix& a);
std::size_t rank(const FieldMatrix& a);
std::optional<Vec> solve(const FieldMatrix& a, const Vec& b);

/// For B of full column rank r: an r x rows(B) matrix L with L * B = I.
/// Throws std::invalid_argument if B does not have full column rank.
FieldMatrix left_inverse(const FieldMatrix& b);
/// Inverse of a square matrix, or nullopt when singular.
std::optional<FieldMatrix> inverse(const FieldMatrix& a);

/// Completes the columns of a full-column-rank B (n x r) with standard basis
/// vectors to a basis of F^n; returns the indices of the added unit vectors
/// (in increasing order).
std::vector<std::size_t> complement_units(const FieldMatrix& b);

}  // namespace gorentest
