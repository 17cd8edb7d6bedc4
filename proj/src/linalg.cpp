#include "rigid/linalg.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace rigid {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t cols) { return (cols + kWordBits - 1) / kWordBits; }

bool test_bit(const std::uint64_t* row, std::size_t c) {
  return (row[c / kWordBits] >> (c % kWordBits)) & 1u;
}

void pack_row(std::span<const Elem> src, std::uint64_t* dst, std::size_t words) {
  std::fill(dst, dst + words, 0);
  for (std::size_t c = 0; c < src.size(); ++c)
    if (src[c] != 0) dst[c / kWordBits] |= std::uint64_t{1} << (c % kWordBits);
}

struct PackedMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t words = 0;
  std::vector<std::uint64_t> bits;

  explicit PackedMatrix(const DenseMatrix& a)
      : rows(a.rows()), cols(a.cols()), words(word_count(a.cols())), bits(rows * words, 0) {
    for (std::size_t r = 0; r < rows; ++r) pack_row(a.row(r), row(r), words);
  }
  PackedMatrix(std::size_t r, std::size_t c)
      : rows(r), cols(c), words(word_count(c)), bits(r * words, 0) {}

  std::uint64_t* row(std::size_t r) { return bits.data() + r * words; }
  const std::uint64_t* row(std::size_t r) const { return bits.data() + r * words; }
  void swap_rows(std::size_t a, std::size_t b) {
    if (a != b) std::swap_ranges(row(a), row(a) + words, row(b));
  }
  void xor_into(std::size_t dst, std::size_t src, std::size_t from_word) {
    std::uint64_t* d = row(dst);
    const std::uint64_t* s = row(src);
    for (std::size_t w = from_word; w < words; ++w) d[w] ^= s[w];
  }
};

// dst[j] -= factor * src[j] for j >= from.
void axpy_sub(const Field& f, Elem factor, std::span<const Elem> src, std::span<Elem> dst,
              std::size_t from) {
  const Elem* mul = f.mul_row(f.neg(factor));
  for (std::size_t j = from; j < dst.size(); ++j)
    if (src[j] != 0) dst[j] = f.add(dst[j], mul[src[j]]);
}

void scale(const Field& f, Elem factor, std::span<Elem> row, std::size_t from) {
  const Elem* mul = f.mul_row(factor);
  for (std::size_t j = from; j < row.size(); ++j) row[j] = mul[row[j]];
}

void require_gf2(const Field& f) {
  if (f.q() != 2) throw Error(ErrorCode::MismatchedParameters, "packed path requires q = 2");
}

}  // namespace

DenseMatrix DenseMatrix::identity(Field field, std::size_t n) {
  DenseMatrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

DenseMatrix DenseMatrix::from_rows(Field field, const std::vector<std::vector<int>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  DenseMatrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorCode::DimensionMismatch, "ragged rows");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!field.contains(rows[r][c]))
        throw Error(ErrorCode::IndexOutOfRange, "entry " + std::to_string(rows[r][c]));
      m(r, c) = static_cast<Elem>(rows[r][c]);
    }
  }
  return m;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

DenseMatrix DenseMatrix::select_rows(std::span<const std::size_t> indices) const {
  DenseMatrix out(field_, indices.size(), cols_);
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] >= rows_) throw Error(ErrorCode::IndexOutOfRange, "row index");
    std::copy_n(row(indices[i]).begin(), cols_, out.row(i).begin());
  }
  return out;
}

std::size_t rank(const DenseMatrix& a) {
  return a.field().q() == 2 ? rank_gf2_packed(a) : rank_generic(a);
}

std::size_t rank_generic(const DenseMatrix& a) {
  DenseMatrix m = a;
  const Field& f = m.field();
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && m(pivot, c) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != r) std::swap_ranges(m.row(pivot).begin(), m.row(pivot).end(), m.row(r).begin());
    scale(f, f.inv(m(r, c)), m.row(r), c);
    for (std::size_t i = r + 1; i < m.rows(); ++i)
      if (m(i, c) != 0) axpy_sub(f, m(i, c), m.row(r), m.row(i), c);
    ++r;
  }
  return r;
}

std::size_t rank_gf2_packed(const DenseMatrix& a) {
  require_gf2(a.field());
  PackedMatrix m(a);
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows && !test_bit(m.row(pivot), c)) ++pivot;
    if (pivot == m.rows) continue;
    m.swap_rows(pivot, r);
    for (std::size_t i = r + 1; i < m.rows; ++i)
      if (test_bit(m.row(i), c)) m.xor_into(i, r, c / kWordBits);
    ++r;
  }
  return r;
}

RowSpanner::RowSpanner(Field field, std::size_t cols)
    : field_(std::move(field)), cols_(cols), words_(word_count(cols)) {
  if (field_.q() == 2)
    packed_scratch_.resize(words_);
  else
    scratch_.resize(cols_);
}

bool RowSpanner::offer(std::span<const Elem> row) {
  if (row.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "row length");
  if (pivots_.size() == cols_) return false;
  return field_.q() == 2 ? offer_gf2(row) : offer_generic(row);
}

bool RowSpanner::offer_generic(std::span<const Elem> row) {
  std::copy(row.begin(), row.end(), scratch_.begin());
  // Each basis row is zero left of its pivot and at the pivots of earlier rows.
  for (std::size_t j = 0; j < pivots_.size(); ++j) {
    const Elem c = scratch_[pivots_[j]];
    if (c != 0) axpy_sub(field_, c, basis_[j], scratch_, pivots_[j]);
  }
  const auto it = std::find_if(scratch_.begin(), scratch_.end(), [](Elem e) { return e != 0; });
  if (it == scratch_.end()) return false;
  const auto pivot = static_cast<std::size_t>(it - scratch_.begin());
  scale(field_, field_.inv(*it), scratch_, pivot);
  pivots_.push_back(pivot);
  basis_.push_back(scratch_);
  return true;
}

bool RowSpanner::offer_gf2(std::span<const Elem> row) {
  pack_row(row, packed_scratch_.data(), words_);
  for (std::size_t j = 0; j < pivots_.size(); ++j) {
    if (!test_bit(packed_scratch_.data(), pivots_[j])) continue;
    const auto& b = packed_basis_[j];
    for (std::size_t w = pivots_[j] / kWordBits; w < words_; ++w) packed_scratch_[w] ^= b[w];
  }
  for (std::size_t w = 0; w < words_; ++w) {
    if (packed_scratch_[w] == 0) continue;
    pivots_.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(packed_scratch_[w])));
    packed_basis_.push_back(packed_scratch_);
    return true;
  }
  return false;
}

std::vector<std::size_t> spanning_rows(const DenseMatrix& a) {
  RowSpanner spanner(a.field(), a.cols());
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < a.rows(); ++r)
    if (spanner.offer(a.row(r))) out.push_back(r);
  return out;
}

namespace {

std::vector<Elem> solve_gf2(const DenseMatrix& a, std::span<const Elem> b) {
  const std::size_t n = a.rows();
  PackedMatrix m(n, n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    pack_row(a.row(r), m.row(r), m.words);
    if (b[r] != 0) m.row(r)[n / kWordBits] |= std::uint64_t{1} << (n % kWordBits);
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && !test_bit(m.row(pivot), c)) ++pivot;
    if (pivot == n) throw Error(ErrorCode::Singular, "no pivot in column " + std::to_string(c));
    m.swap_rows(pivot, c);
    for (std::size_t i = 0; i < n; ++i)
      if (i != c && test_bit(m.row(i), c)) m.xor_into(i, c, c / kWordBits);
  }
  std::vector<Elem> x(n);
  for (std::size_t r = 0; r < n; ++r) x[r] = test_bit(m.row(r), n) ? 1 : 0;
  return x;
}

std::vector<Elem> solve_generic(const DenseMatrix& a, std::span<const Elem> b) {
  const std::size_t n = a.rows();
  const Field& f = a.field();
  DenseMatrix m(f, n, n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    std::copy_n(a.row(r).begin(), n, m.row(r).begin());
    m(r, n) = b[r];
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m(pivot, c) == 0) ++pivot;
    if (pivot == n) throw Error(ErrorCode::Singular, "no pivot in column " + std::to_string(c));
    if (pivot != c) std::swap_ranges(m.row(pivot).begin(), m.row(pivot).end(), m.row(c).begin());
    scale(f, f.inv(m(c, c)), m.row(c), c);
    for (std::size_t i = 0; i < n; ++i)
      if (i != c && m(i, c) != 0) axpy_sub(f, m(i, c), m.row(c), m.row(i), c);
  }
  std::vector<Elem> x(n);
  for (std::size_t r = 0; r < n; ++r) x[r] = m(r, n);
  return x;
}

}  // namespace

std::vector<Elem> solve(const DenseMatrix& a, std::span<const Elem> b) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::DimensionMismatch, "solve needs a square matrix");
  if (b.size() != a.rows()) throw Error(ErrorCode::DimensionMismatch, "right-hand side length");
  for (Elem e : b)
    if (!a.field().contains(e)) throw Error(ErrorCode::IndexOutOfRange, "rhs entry");
  return a.field().q() == 2 ? solve_gf2(a, b) : solve_generic(a, b);
}

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows() || !(a.field() == b.field()))
    throw Error(ErrorCode::DimensionMismatch, "matmul inner dimensions");
  const Field& f = a.field();
  DenseMatrix out(f, a.rows(), b.cols());
  if (f.q() == 2) {
    const PackedMatrix pb(b);
    std::vector<std::uint64_t> acc(pb.words);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t k = 0; k < a.cols(); ++k) {
        if (a(i, k) == 0) continue;
        const std::uint64_t* src = pb.row(k);
        for (std::size_t w = 0; w < pb.words; ++w) acc[w] ^= src[w];
      }
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = test_bit(acc.data(), j) ? 1 : 0;
    }
    return out;
  }
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto dst = out.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Elem c = a(i, k);
      if (c == 0) continue;
      const Elem* mul = f.mul_row(c);
      const auto src = b.row(k);
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (src[j] != 0) dst[j] = f.add(dst[j], mul[src[j]]);
    }
  }
  return out;
}

std::uint64_t hamming_distance(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorCode::DimensionMismatch, "shape mismatch");
  std::uint64_t d = 0;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    const auto ra = a.row(r);
    const auto rb = b.row(r);
    for (std::size_t c = 0; c < a.cols(); ++c) d += ra[c] != rb[c];
  }
  return d;
}

}  // namespace rigid
