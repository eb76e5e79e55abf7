#include "gorentest/field_matrix.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace gorentest {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t q = 3; q * q <= p; q += 2)
    if (p % q == 0) return false;
  return true;
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

PrimeField::PrimeField(std::uint64_t p) {
  if (p < 2 || p > 2147483647ULL || !is_prime(p))
    throw std::invalid_argument("modulus " + std::to_string(p) +
                                " is not a prime in [2, 2^31-1]");
  p_ = static_cast<std::uint32_t>(p);
}

Elem PrimeField::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  // Fermat: a^(p-2).
  std::uint64_t result = 1, base = a, e = p_ - 2;
  while (e) {
    if (e & 1) result = (result * base) % p_;
    base = (base * base) % p_;
    e >>= 1;
  }
  return static_cast<Elem>(result);
}

FieldMatrix::FieldMatrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), binary_(field.is_binary()) {
  if (binary_) {
    stride_ = (cols + 63) / 64;
    bits_.assign(rows * stride_, 0);
  } else {
    vals_.assign(rows * cols, 0);
  }
}

FieldMatrix FieldMatrix::identity(PrimeField field, std::size_t n) {
  FieldMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

FieldMatrix FieldMatrix::from_rows(
    PrimeField field, const std::vector<std::vector<long long>>& rows) {
  const std::size_t nc = rows.empty() ? 0 : rows.front().size();
  FieldMatrix m(field, rows.size(), nc);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require(rows[i].size() == nc, "ragged row data");
    for (std::size_t j = 0; j < nc; ++j) m.set(i, j, field.reduce(rows[i][j]));
  }
  return m;
}

FieldMatrix FieldMatrix::column_vector(PrimeField field, const Vec& v) {
  FieldMatrix m(field, v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m.set(i, 0, v[i]);
  return m;
}

Vec FieldMatrix::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

Vec FieldMatrix::row(std::size_t r) const {
  Vec v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v[c] = at(r, c);
  return v;
}

void FieldMatrix::set_column(std::size_t c, const Vec& v) {
  require(v.size() == rows_, "set_column: length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) set(r, c, v[r]);
}

bool FieldMatrix::is_zero() const {
  if (binary_)
    return std::all_of(bits_.begin(), bits_.end(),
                       [](std::uint64_t w) { return w == 0; });
  return std::all_of(vals_.begin(), vals_.end(),
                     [](Elem e) { return e == 0; });
}

std::size_t FieldMatrix::nonzeros() const {
  std::size_t n = 0;
  if (binary_) {
    for (auto w : bits_) n += static_cast<std::size_t>(std::popcount(w));
  } else {
    for (auto e : vals_) n += (e != 0);
  }
  return n;
}

FieldMatrix FieldMatrix::transpose() const {
  FieldMatrix t(field_, cols_, rows_);
  if (binary_) {
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t w = 0; w < stride_; ++w) {
        std::uint64_t word = bits_[r * stride_ + w];
        while (word) {
          const auto b = static_cast<std::size_t>(std::countr_zero(word));
          t.set(w * 64 + b, r, 1);
          word &= word - 1;
        }
      }
  } else {
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) {
        const Elem e = vals_[r * cols_ + c];
        if (e) t.vals_[c * rows_ + r] = e;
      }
  }
  return t;
}

FieldMatrix FieldMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr,
                               std::size_t nc) const {
  require(r0 + nr <= rows_ && c0 + nc <= cols_, "block out of range");
  FieldMatrix b(field_, nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) {
      const Elem e = at(r0 + r, c0 + c);
      if (e) b.set(r, c, e);
    }
  return b;
}

void FieldMatrix::add_block(std::size_t r0, std::size_t c0,
                            const FieldMatrix& b) {
  add_block(r0, c0, b, 1);
}

void FieldMatrix::add_block(std::size_t r0, std::size_t c0,
                            const FieldMatrix& b, Elem scale) {
  require(r0 + b.rows_ <= rows_ && c0 + b.cols_ <= cols_,
          "add_block out of range");
  if (scale == 0) return;
  if (b.binary_) {
    for (std::size_t r = 0; r < b.rows_; ++r)
      for (std::size_t w = 0; w < b.stride_; ++w) {
        std::uint64_t word = b.bits_[r * b.stride_ + w];
        while (word) {
          const auto bit = static_cast<std::size_t>(std::countr_zero(word));
          add_at(r0 + r, c0 + w * 64 + bit, 1);
          word &= word - 1;
        }
      }
    return;
  }
  for (std::size_t r = 0; r < b.rows_; ++r)
    for (std::size_t c = 0; c < b.cols_; ++c) {
      const Elem e = b.vals_[r * b.cols_ + c];
      if (e) add_at(r0 + r, c0 + c, field_.mul(e, scale));
    }
}

FieldMatrix FieldMatrix::scaled(Elem s) const {
  if (binary_) return (s & 1U) ? *this : FieldMatrix(field_, rows_, cols_);
  FieldMatrix m(*this);
  for (auto& e : m.vals_) e = field_.mul(e, s);
  return m;
}

Vec FieldMatrix::apply(const Vec& v) const {
  require(v.size() == cols_, "apply: length mismatch");
  Vec out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      const Elem a = at(r, c);
      if (a && v[c]) acc = (acc + std::uint64_t{a} * v[c]) % field_.characteristic();
    }
    out[r] = static_cast<Elem>(acc);
  }
  return out;
}

std::string FieldMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << at(r, c);
    os << "]\n";
  }
  return os.str();
}

bool operator==(const FieldMatrix& a, const FieldMatrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
         a.bits_ == b.bits_ && a.vals_ == b.vals_;
}

FieldMatrix compose(const FieldMatrix& a, const FieldMatrix& b) {
  require(a.cols_ == b.rows_, "compose: inner dimensions differ");
  require(a.field_ == b.field_, "compose: fields differ");
  FieldMatrix c(a.field_, a.rows_, b.cols_);
  if (a.binary_) {
    for (std::size_t i = 0; i < a.rows_; ++i) {
      std::uint64_t* out = &c.bits_[i * c.stride_];
      for (std::size_t w = 0; w < a.stride_; ++w) {
        std::uint64_t word = a.bits_[i * a.stride_ + w];
        while (word) {
          const auto k = w * 64 + static_cast<std::size_t>(std::countr_zero(word));
          const std::uint64_t* in = &b.bits_[k * b.stride_];
          for (std::size_t x = 0; x < b.stride_; ++x) out[x] ^= in[x];
          word &= word - 1;
        }
      }
    }
    return c;
  }
  const std::uint64_t p = a.field_.characteristic();
  const bool lazy = p < 65536;
  std::vector<std::uint64_t> acc(b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const std::uint64_t f = a.vals_[i * a.cols_ + k];
      if (!f) continue;
      const Elem* in = &b.vals_[k * b.cols_];
      if (lazy) {
        for (std::size_t j = 0; j < b.cols_; ++j) acc[j] += f * in[j];
      } else {
        for (std::size_t j = 0; j < b.cols_; ++j) acc[j] = (acc[j] + f * in[j]) % p;
      }
    }
    for (std::size_t j = 0; j < b.cols_; ++j)
      c.vals_[i * c.cols_ + j] = static_cast<Elem>(acc[j] % p);
  }
  return c;
}

FieldMatrix operator+(const FieldMatrix& a, const FieldMatrix& b) {
  require(a.rows_ == b.rows_ && a.cols_ == b.cols_, "sum: shape mismatch");
  FieldMatrix c(a);
  if (a.binary_) {
    for (std::size_t i = 0; i < c.bits_.size(); ++i) c.bits_[i] ^= b.bits_[i];
  } else {
    for (std::size_t i = 0; i < c.vals_.size(); ++i)
      c.vals_[i] = a.field_.add(c.vals_[i], b.vals_[i]);
  }
  return c;
}

FieldMatrix operator-(const FieldMatrix& a, const FieldMatrix& b) {
  return a + b.scaled(a.field().neg(1));
}

FieldMatrix direct_sum(const FieldMatrix& a, const FieldMatrix& b) {
  FieldMatrix m(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  m.add_block(0, 0, a);
  m.add_block(a.rows(), a.cols(), b);
  return m;
}

FieldMatrix kronecker(const FieldMatrix& a, const FieldMatrix& b) {
  const PrimeField& f = a.field();
  FieldMatrix m(f, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Elem x = a.at(i, k);
      if (x) m.add_block(i * b.rows(), k * b.cols(), b, x);
    }
  return m;
}

FieldMatrix repeat_diagonal(const FieldMatrix& a, std::size_t copies) {
  FieldMatrix m(a.field(), a.rows() * copies, a.cols() * copies);
  for (std::size_t s = 0; s < copies; ++s) m.add_block(s * a.rows(), s * a.cols(), a);
  return m;
}

FieldMatrix hstack(std::span<const FieldMatrix> parts) {
  require(!parts.empty(), "hstack of nothing");
  std::size_t cols = 0;
  for (const auto& p : parts) {
    require(p.rows() == parts[0].rows(), "hstack: row counts differ");
    cols += p.cols();
  }
  FieldMatrix m(parts[0].field(), parts[0].rows(), cols);
  std::size_t c0 = 0;
  for (const auto& p : parts) {
    m.add_block(0, c0, p);
    c0 += p.cols();
  }
  return m;
}

FieldMatrix vstack(std::span<const FieldMatrix> parts) {
  require(!parts.empty(), "vstack of nothing");
  std::size_t rows = 0;
  for (const auto& p : parts) {
    require(p.cols() == parts[0].cols(), "vstack: column counts differ");
    rows += p.rows();
  }
  FieldMatrix m(parts[0].field(), rows, parts[0].cols());
  std::size_t r0 = 0;
  for (const auto& p : parts) {
    m.add_block(r0, 0, p);
    r0 += p.rows();
  }
  return m;
}

// Row reduction on a private copy. `full` selects Gauss-Jordan (reduced row
// echelon form); otherwise only rows below each pivot are cleared.
class Eliminator {
 public:
  Eliminator(FieldMatrix m, bool full) : m_(std::move(m)), full_(full) {}

  void run() {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m_.cols_ && r < m_.rows_; ++c) {
      std::size_t i = r;
      while (i < m_.rows_ && m_.at(i, c) == 0) ++i;
      if (i == m_.rows_) continue;
      swap_rows(i, r);
      normalize(r, c);
      for (std::size_t k = full_ ? 0 : r + 1; k < m_.rows_; ++k)
        if (k != r && m_.at(k, c) != 0) eliminate(k, r, c);
      pivots_.push_back(c);
      ++r;
    }
  }

  const FieldMatrix& matrix() const { return m_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    if (m_.binary_) {
      std::swap_ranges(m_.bits_.begin() + a * m_.stride_,
                       m_.bits_.begin() + (a + 1) * m_.stride_,
                       m_.bits_.begin() + b * m_.stride_);
    } else {
      std::swap_ranges(m_.vals_.begin() + a * m_.cols_,
                       m_.vals_.begin() + (a + 1) * m_.cols_,
                       m_.vals_.begin() + b * m_.cols_);
    }
  }

  void normalize(std::size_t r, std::size_t c) {
    if (m_.binary_) return;
    const Elem inv = m_.field_.inv(m_.at(r, c));
    if (inv == 1) return;
    Elem* row = &m_.vals_[r * m_.cols_];
    for (std::size_t j = c; j < m_.cols_; ++j) row[j] = m_.field_.mul(row[j], inv);
  }

  // row k -= m[k][c] * row r
  void eliminate(std::size_t k, std::size_t r, std::size_t c) {
    if (m_.binary_) {
      std::uint64_t* dst = &m_.bits_[k * m_.stride_];
      const std::uint64_t* src = &m_.bits_[r * m_.stride_];
      for (std::size_t w = c / 64; w < m_.stride_; ++w) dst[w] ^= src[w];
      return;
    }
    const std::uint64_t p = m_.field_.characteristic();
    const std::uint64_t f = p - m_.at(k, c);
    Elem* dst = &m_.vals_[k * m_.cols_];
    const Elem* src = &m_.vals_[r * m_.cols_];
    for (std::size_t j = c; j < m_.cols_; ++j)
      if (src[j]) dst[j] = static_cast<Elem>((dst[j] + f * src[j]) % p);
  }

  FieldMatrix m_;
  bool full_;
  std::vector<std::size_t> pivots_;
};

RankProfile rank_profile(const FieldMatrix& a) {
  Eliminator e(a, /*full=*/true);
  e.run();
  const auto& rref = e.matrix();
  const auto& piv = e.pivots();
  const PrimeField& f = a.field();

  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : piv) is_pivot[c] = true;

  RankProfile out{piv.size(), FieldMatrix(f, a.cols(), a.cols() - piv.size()),
                  FieldMatrix(f, a.rows(), piv.size()), piv};
  std::size_t k = 0;
  for (std::size_t col = 0; col < a.cols(); ++col) {
    if (is_pivot[col]) continue;
    out.kernel_basis.set(col, k, 1);
    for (std::size_t r = 0; r < piv.size(); ++r) {
      const Elem x = rref.at(r, col);
      if (x) out.kernel_basis.set(piv[r], k, f.neg(x));
    }
    ++k;
  }
  for (std::size_t j = 0; j < piv.size(); ++j)
    for (std::size_t r = 0; r < a.rows(); ++r) {
      const Elem x = a.at(r, piv[j]);
      if (x) out.image_basis.set(r, j, x);
    }
  return out;
}

std::size_t rank(const FieldMatrix& a) {
  // Elimination cost is linear in the row count; reduce the shorter side.
  Eliminator e(a.rows() > a.cols() * 2 ? a.transpose() : a, /*full=*/false);
  e.run();
  return e.pivots().size();
}

std::optional<Vec> solve(const FieldMatrix& a, const Vec& b) {
  require(b.size() == a.rows(), "solve: right-hand side length mismatch");
  FieldMatrix aug(a.field(), a.rows(), a.cols() + 1);
  aug.add_block(0, 0, a);
  for (std::size_t r = 0; r < b.size(); ++r) aug.set(r, a.cols(), b[r]);
  Eliminator e(std::move(aug), /*full=*/true);
  e.run();
  const auto& piv = e.pivots();
  if (!piv.empty() && piv.back() == a.cols()) return std::nullopt;
  Vec x(a.cols(), 0);
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = e.matrix().at(r, a.cols());
  return x;
}

FieldMatrix left_inverse(const FieldMatrix& b) {
  const std::size_t r = b.cols();
  const auto rows = rank_profile(b.transpose()).pivot_columns;
  require(rows.size() == r, "left_inverse: matrix lacks full column rank");
  FieldMatrix sub(b.field(), r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) sub.set(i, j, b.at(rows[i], j));
  const auto inv = inverse(sub);
  FieldMatrix l(b.field(), r, b.rows());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) l.set(i, rows[j], inv->at(i, j));
  return l;
}

std::optional<FieldMatrix> inverse(const FieldMatrix& a) {
  require(a.rows() == a.cols(), "inverse: matrix not square");
  const std::size_t n = a.rows();
  FieldMatrix aug(a.field(), n, 2 * n);
  aug.add_block(0, 0, a);
  aug.add_block(0, n, FieldMatrix::identity(a.field(), n));
  Eliminator e(std::move(aug), /*full=*/true);
  e.run();
  const auto& piv = e.pivots();
  if (piv.size() < n || (n > 0 && piv[n - 1] >= n)) return std::nullopt;
  return e.matrix().block(0, n, n, n);
}

std::vector<std::size_t> complement_units(const FieldMatrix& b) {
  const std::size_t n = b.rows();
  FieldMatrix aug(b.field(), n, b.cols() + n);
  aug.add_block(0, 0, b);
  aug.add_block(0, b.cols(), FieldMatrix::identity(b.field(), n));
  Eliminator e(std::move(aug), /*full=*/false);
  e.run();
  std::vector<std::size_t> units;
  for (auto c : e.pivots())
    if (c >= b.cols()) units.push_back(c - b.cols());
  require(n - units.size() == b.cols(),
          "complement_units: matrix lacks full column rank");
  return units;
}

}  // namespace gorentest
