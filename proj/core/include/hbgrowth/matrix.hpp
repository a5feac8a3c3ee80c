#ifndef HBGROWTH_MATRIX_HPP_
#define HBGROWTH_MATRIX_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "hbgrowth/error.hpp"

namespace hbg {

// Square matrix of nonnegative integers, row-major. Dimensions in this
// domain are tiny (one row per 1-handle), so a dense flat vector is used
// throughout.
struct NonNegMatrix {
  int dim = 0;
  std::vector<long long> entries;  // dim*dim, row-major

  NonNegMatrix() = default;
  NonNegMatrix(int n, std::vector<long long> e);
  // From rows, e.g. NonNegMatrix::from_rows({{3,1},{0,2}}).
  static NonNegMatrix from_rows(const std::vector<std::vector<long long>>& rows);
  static NonNegMatrix identity(int n);

  long long& at(int i, int j) { return entries[static_cast<size_t>(i) * dim + j]; }
  long long at(int i, int j) const { return entries[static_cast<size_t>(i) * dim + j]; }

  bool operator==(const NonNegMatrix&) const = default;
};

// Exact int64 product. Inputs here are small enough that overflow is a
// programming error; it is checked and reported.
NonNegMatrix multiply(const NonNegMatrix& a, const NonNegMatrix& b);

// Square matrix of signed integers (abelianizations live here).
struct IntMatrix {
  int dim = 0;
  std::vector<long long> entries;

  IntMatrix() = default;
  IntMatrix(int n, std::vector<long long> e);
  static IntMatrix identity(int n);

  long long& at(int i, int j) { return entries[static_cast<size_t>(i) * dim + j]; }
  long long at(int i, int j) const { return entries[static_cast<size_t>(i) * dim + j]; }

  bool operator==(const IntMatrix&) const = default;
};

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

// Exact determinant by fraction-free (Bareiss) elimination.
long long determinant(const IntMatrix& m);

// Arbitrary-precision unsigned integer, base 2^32 limbs. Only what exact
// matrix powers need: addition, multiplication, comparison, conversion.
class BigNat {
 public:
  BigNat() = default;
  BigNat(unsigned long long value);  // NOLINT(runtime/explicit) - numeric literal init

  bool is_zero() const { return limbs_.empty(); }
  BigNat& operator+=(const BigNat& other);
  friend BigNat operator+(BigNat a, const BigNat& b) { return a += b; }
  friend BigNat operator*(const BigNat& a, const BigNat& b);
  friend bool operator==(const BigNat& a, const BigNat& b) { return a.limbs_ == b.limbs_; }
  friend bool operator<(const BigNat& a, const BigNat& b);

  double to_double() const;
  std::string to_string() const;  // decimal

 private:
  std::vector<uint32_t> limbs_;  // little-endian, normalized (no trailing zeros)
};

// Square matrix over BigNat, the carrier for exact integer powers.
struct BigMatrix {
  int dim = 0;
  std::vector<BigNat> entries;

  static BigMatrix from(const NonNegMatrix& m);
  static BigMatrix identity(int n);
  BigNat& at(int i, int j) { return entries[static_cast<size_t>(i) * dim + j]; }
  const BigNat& at(int i, int j) const { return entries[static_cast<size_t>(i) * dim + j]; }
};

BigMatrix multiply(const BigMatrix& a, const BigMatrix& b);

// m^n computed exactly, n >= 1.
BigMatrix exact_power(const NonNegMatrix& m, int n);

}  // namespace hbg

#endif  // HBGROWTH_MATRIX_HPP_
