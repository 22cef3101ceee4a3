#include "modcert/gf2.hpp"

#include <algorithm>
#include <utility>

#include "modcert/error.hpp"

namespace modcert::gf2 {

namespace {

void require_same_length(const BitVector& a, const BitVector& b, const char* op) {
  if (a.size() != b.size())
    throw InvalidInput(std::string(op) + ": length mismatch (" + std::to_string(a.size()) +
                       " vs " + std::to_string(b.size()) + ")");
}

void require_dimension(std::size_t d) {
  if (d > kMaxDimension)
    throw InvalidInput("GF(2) dimension " + std::to_string(d) + " exceeds cap " +
                       std::to_string(kMaxDimension));
}

// True iff v has a set coordinate strictly above i.
bool any_above(const BitVector& v, std::size_t i) {
  const auto words = v.words();
  const std::size_t w = i / kWordBits;
  const std::size_t shift = i % kWordBits;
  if (shift + 1 < kWordBits && (words[w] >> (shift + 1)) != 0) return true;
  for (std::size_t k = w + 1; k < words.size(); ++k)
    if (words[k]) return true;
  return false;
}

}  // namespace

BitVector BitVector::of(std::initializer_list<int> bits) {
  BitVector v(bits.size());
  std::size_t i = 0;
  for (int b : bits) v.set(i++, b != 0);
  return v;
}

bool BitVector::any() const noexcept {
  return std::any_of(words_.begin(), words_.end(), [](Word w) { return w != 0; });
}

std::size_t BitVector::count() const noexcept {
  std::size_t c = 0;
  for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::optional<std::size_t> BitVector::first_set() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w]) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
  return std::nullopt;
}

std::vector<std::size_t> BitVector::ones() const {
  std::vector<std::size_t> out;
  for_each_set([&](std::size_t i) { out.push_back(i); });
  return out;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  require_same_length(*this, other, "xor");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
  require_same_length(*this, other, "and");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

std::string BitVector::to_string() const {
  std::string s(len_, '0');
  for_each_set([&](std::size_t i) { s[i] = '1'; });
  return s;
}

bool SupportOrder::operator()(const BitVector& a, const BitVector& b) const {
  require_same_length(a, b, "support order");
  const auto diff = (a ^ b).first_set();
  if (!diff) return false;
  if (a.get(*diff)) return any_above(b, *diff);
  return !any_above(a, *diff);
}

BitVector vec_add(const BitVector& a, const BitVector& b) { return a ^ b; }

bool dot(const BitVector& a, const BitVector& b) {
  require_same_length(a, b, "dot");
  Word acc = 0;
  const auto wa = a.words();
  const auto wb = b.words();
  for (std::size_t w = 0; w < wa.size(); ++w) acc ^= wa[w] & wb[w];
  return std::popcount(acc) & 1;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
  require_dimension(rows);
  require_dimension(cols);
  data_.assign(rows, BitVector(cols));
}

BitMatrix BitMatrix::identity(std::size_t k) {
  BitMatrix m(k, k);
  for (std::size_t i = 0; i < k; ++i) m.set(i, i);
  return m;
}

BitMatrix BitMatrix::from_columns(std::span<const BitVector> columns, std::size_t rows) {
  BitMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw InvalidInput("from_columns: column length mismatch");
    columns[c].for_each_set([&](std::size_t r) { m.set(r, c); });
  }
  return m;
}

BitMatrix BitMatrix::from_rows(std::span<const BitVector> rows, std::size_t cols) {
  BitMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InvalidInput("from_rows: row length mismatch");
    m.data_[r] = rows[r];
  }
  return m;
}

BitVector BitMatrix::column(std::size_t c) const {
  BitVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    if (data_[r].get(c)) v.set(r);
  return v;
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) data_[r].for_each_set([&](std::size_t c) { t.set(c, r); });
  return t;
}

BitVector mat_vec(const BitMatrix& m, const BitVector& x) {
  if (x.size() != m.cols()) throw InvalidInput("mat_vec: dimension mismatch");
  BitVector out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (dot(m.row(r), x)) out.set(r);
  return out;
}

namespace {

// Row-reduces `rows` in place (Gauss-Jordan), applying every row operation to
// the parallel arrays in `riders` as well. Returns the pivot columns.
template <class... Riders>
std::vector<std::size_t> eliminate(std::vector<BitVector>& rows, std::size_t cols,
                                   Riders&... riders) {
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t c = 0; c < cols && next < rows.size(); ++c) {
    std::size_t r = next;
    while (r < rows.size() && !rows[r].get(c)) ++r;
    if (r == rows.size()) continue;
    if (r != next) {
      std::swap(rows[r], rows[next]);
      (std::swap(riders[r], riders[next]), ...);
    }
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == next || !rows[k].get(c)) continue;
      rows[k] ^= rows[next];
      ((riders[k] ^= riders[next]), ...);
    }
    pivots.push_back(c);
    ++next;
  }
  return pivots;
}

std::vector<BitVector> copy_rows(const BitMatrix& m) {
  std::vector<BitVector> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  return rows;
}

}  // namespace

std::size_t rank(const BitMatrix& m) {
  auto rows = copy_rows(m);
  return eliminate(rows, m.cols()).size();
}

std::vector<std::size_t> pivot_columns(const BitMatrix& m) {
  auto rows = copy_rows(m);
  return eliminate(rows, m.cols());
}

SolveResult solve_or_dual(const BitMatrix& m, const BitVector& t) {
  if (t.size() != m.rows())
    throw InvalidInput("solve_or_dual: rhs length " + std::to_string(t.size()) + " != rows " +
                       std::to_string(m.rows()));
  auto rows = copy_rows(m);
  // The right-hand side rides along as 1-bit vectors.
  std::vector<BitVector> rhs_bits;
  std::vector<BitVector> ops;
  rhs_bits.reserve(m.rows());
  ops.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    rhs_bits.emplace_back(1).set(0, t.get(r));
    ops.emplace_back(m.rows()).set(r);
  }

  const auto pivots = eliminate(rows, m.cols(), rhs_bits, ops);

  for (std::size_t r = pivots.size(); r < rows.size(); ++r) {
    if (!rhs_bits[r].get(0)) continue;
    Dual dual{std::move(ops[r])};
    if (mat_vec(m.transpose(), dual.y).any() || !dot(dual.y, t))
      throw InternalError("solve_or_dual: dual witness does not annihilate the system");
    return dual;
  }

  BitVector x(m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x.set(pivots[i], rhs_bits[i].get(0));
  if (!(mat_vec(m, x) == t)) throw InternalError("solve_or_dual: solution does not satisfy the system");
  return Solution{std::move(x)};
}

}  // namespace modcert::gf2
