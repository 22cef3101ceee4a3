#pragma once

// Dense linear algebra over GF(2), packed 64 coordinates per word.

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace modcert::gf2 {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

/// Largest row or column count accepted by the matrix routines.
inline constexpr std::size_t kMaxDimension = 4096;

class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t len) : len_(len), words_((len + kWordBits - 1) / kWordBits, 0) {}

  /// Builds a vector from a 0/1 list, e.g. `BitVector::of({1, 0, 1})`.
  static BitVector of(std::initializer_list<int> bits);

  std::size_t size() const noexcept { return len_; }
  bool empty() const noexcept { return len_ == 0; }

  bool get(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i, bool value = true) {
    const Word mask = Word{1} << (i % kWordBits);
    if (value)
      words_[i / kWordBits] |= mask;
    else
      words_[i / kWordBits] &= ~mask;
  }
  void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

  bool any() const noexcept;
  std::size_t count() const noexcept;
  std::optional<std::size_t> first_set() const noexcept;

  /// Calls f(i) for every set coordinate, in increasing order.
  template <class F>
  void for_each_set(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits) {
        f(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  std::vector<std::size_t> ones() const;

  BitVector& operator^=(const BitVector& other);
  BitVector& operator&=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }

  friend bool operator==(const BitVector&, const BitVector&) = default;

  std::span<const Word> words() const noexcept { return {words_.data(), words_.size()}; }

  /// Coordinates as a '0'/'1' string, coordinate 0 first.
  std::string to_string() const;

 private:
  std::size_t len_ = 0;
  // Cores up to 128 positions stay inline.
  boost::container::small_vector<Word, 2> words_;
};

/// Orders vectors of equal length by the lexicographic order of their sorted
/// support lists: {0,1} < {0,1,2} < {0,2} < {1}. The empty support is least.
struct SupportOrder {
  bool operator()(const BitVector& a, const BitVector& b) const;
};

BitVector vec_add(const BitVector& a, const BitVector& b);
bool dot(const BitVector& a, const BitVector& b);

class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  static BitMatrix identity(std::size_t k);
  static BitMatrix from_columns(std::span<const BitVector> columns, std::size_t rows);
  static BitMatrix from_rows(std::span<const BitVector> rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  bool get(std::size_t r, std::size_t c) const { return data_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool value = true) { data_[r].set(c, value); }

  const BitVector& row(std::size_t r) const { return data_[r]; }
  BitVector column(std::size_t c) const;
  BitMatrix transpose() const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BitVector> data_;
};

BitVector mat_vec(const BitMatrix& m, const BitVector& x);
std::size_t rank(const BitMatrix& m);

/// M x = t holds exactly.
struct Solution {
  BitVector x;
};

/// y^T M = 0 and y^T t = 1: a certificate that M x = t has no solution.
struct Dual {
  BitVector y;
};

using SolveResult = std::variant<Solution, Dual>;

/// Gauss-Jordan elimination on [M | t | I], pivoting on the lowest-index
/// available row. A consistent system yields the solution with every free
/// variable 0; an inconsistent one yields the row-operation record of the
/// first zero row whose right-hand side is 1. Either result is checked against
/// the system before it is returned (InternalError on failure).
SolveResult solve_or_dual(const BitMatrix& m, const BitVector& t);

/// Indices of the pivot columns chosen by the same elimination, in order.
/// These columns form a basis of the column space.
std::vector<std::size_t> pivot_columns(const BitMatrix& m);

}  // namespace modcert::gf2
