#include "hbgrowth/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace hbg {

namespace {

void check_square_size(int dim, size_t n, const char* what) {
  if (dim < 0 || n != static_cast<size_t>(dim) * static_cast<size_t>(dim)) {
    throw Error(std::string(what) + ": entry count does not match dimension");
  }
}

}  // namespace

NonNegMatrix::NonNegMatrix(int n, std::vector<long long> e) : dim(n), entries(std::move(e)) {
  check_square_size(dim, entries.size(), "NonNegMatrix");
  for (long long x : entries) {
    if (x < 0) throw Error("NonNegMatrix: negative entry");
  }
}

NonNegMatrix NonNegMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<long long> flat;
  flat.reserve(static_cast<size_t>(n) * n);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) throw Error("NonNegMatrix: ragged rows");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return NonNegMatrix(n, std::move(flat));
}

NonNegMatrix NonNegMatrix::identity(int n) {
  NonNegMatrix m;
  m.dim = n;
  m.entries.assign(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

NonNegMatrix multiply(const NonNegMatrix& a, const NonNegMatrix& b) {
  if (a.dim != b.dim) throw Error("matrix product: dimension mismatch");
  NonNegMatrix c;
  c.dim = a.dim;
  c.entries.assign(static_cast<size_t>(a.dim) * a.dim, 0);
  for (int i = 0; i < a.dim; ++i) {
    for (int k = 0; k < a.dim; ++k) {
      const long long aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < a.dim; ++j) {
        __int128 acc = static_cast<__int128>(c.at(i, j)) + static_cast<__int128>(aik) * b.at(k, j);
        if (acc > INT64_MAX) throw Error("matrix product: int64 overflow, use exact_power");
        c.at(i, j) = static_cast<long long>(acc);
      }
    }
  }
  return c;
}

IntMatrix::IntMatrix(int n, std::vector<long long> e) : dim(n), entries(std::move(e)) {
  check_square_size(dim, entries.size(), "IntMatrix");
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m;
  m.dim = n;
  m.entries.assign(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.dim != b.dim) throw Error("matrix product: dimension mismatch");
  IntMatrix c;
  c.dim = a.dim;
  c.entries.assign(static_cast<size_t>(a.dim) * a.dim, 0);
  for (int i = 0; i < a.dim; ++i) {
    for (int k = 0; k < a.dim; ++k) {
      const long long aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < a.dim; ++j) {
        c.at(i, j) += aik * b.at(k, j);
      }
    }
  }
  return c;
}

long long determinant(const IntMatrix& m) {
  // Bareiss fraction-free elimination; all intermediate divisions are exact.
  const int n = m.dim;
  if (n == 0) return 1;
  std::vector<__int128> a(m.entries.begin(), m.entries.end());
  auto at = [&](int i, int j) -> __int128& { return a[static_cast<size_t>(i) * n + j]; };
  __int128 prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (at(k, k) == 0) {
      int pivot = -1;
      for (int i = k + 1; i < n; ++i) {
        if (at(i, k) != 0) {
          pivot = i;
          break;
        }
      }
      if (pivot < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(at(k, j), at(pivot, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  return static_cast<long long>(sign * at(n - 1, n - 1));
}

BigNat::BigNat(unsigned long long value) {
  while (value != 0) {
    limbs_.push_back(static_cast<uint32_t>(value & 0xffffffffULL));
    value >>= 32;
  }
}

BigNat& BigNat::operator+=(const BigNat& other) {
  const size_t n = std::max(limbs_.size(), other.limbs_.size());
  limbs_.resize(n, 0);
  uint64_t carry = 0;
  for (size_t i = 0; i < n; ++i) {
    uint64_t sum = carry + limbs_[i] + (i < other.limbs_.size() ? other.limbs_[i] : 0);
    limbs_[i] = static_cast<uint32_t>(sum & 0xffffffffULL);
    carry = sum >> 32;
  }
  if (carry != 0) limbs_.push_back(static_cast<uint32_t>(carry));
  return *this;
}

BigNat operator*(const BigNat& a, const BigNat& b) {
  BigNat out;
  if (a.is_zero() || b.is_zero()) return out;
  out.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
  for (size_t i = 0; i < a.limbs_.size(); ++i) {
    uint64_t carry = 0;
    for (size_t j = 0; j < b.limbs_.size(); ++j) {
      uint64_t cur = out.limbs_[i + j] + static_cast<uint64_t>(a.limbs_[i]) * b.limbs_[j] + carry;
      out.limbs_[i + j] = static_cast<uint32_t>(cur & 0xffffffffULL);
      carry = cur >> 32;
    }
    size_t k = i + b.limbs_.size();
    while (carry != 0) {
      uint64_t cur = out.limbs_[k] + carry;
      out.limbs_[k] = static_cast<uint32_t>(cur & 0xffffffffULL);
      carry = cur >> 32;
      ++k;
    }
  }
  while (!out.limbs_.empty() && out.limbs_.back() == 0) out.limbs_.pop_back();
  return out;
}

bool operator<(const BigNat& a, const BigNat& b) {
  if (a.limbs_.size() != b.limbs_.size()) return a.limbs_.size() < b.limbs_.size();
  for (size_t i = a.limbs_.size(); i-- > 0;) {
    if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i];
  }
  return false;
}

double BigNat::to_double() const {
  double out = 0.0;
  for (size_t i = limbs_.size(); i-- > 0;) {
    out = out * 4294967296.0 + static_cast<double>(limbs_[i]);
  }
  return out;
}

std::string BigNat::to_string() const {
  if (is_zero()) return "0";
  std::vector<uint32_t> work = limbs_;
  std::string out;
  while (!work.empty()) {
    // divide by 10^9, collecting the remainder
    uint64_t rem = 0;
    for (size_t i = work.size(); i-- > 0;) {
      uint64_t cur = (rem << 32) | work[i];
      work[i] = static_cast<uint32_t>(cur / 1000000000ULL);
      rem = cur % 1000000000ULL;
    }
    while (!work.empty() && work.back() == 0) work.pop_back();
    std::string chunk = std::to_string(rem);
    if (!work.empty()) chunk.insert(0, 9 - chunk.size(), '0');
    out.insert(0, chunk);
  }
  return out;
}

BigMatrix BigMatrix::from(const NonNegMatrix& m) {
  BigMatrix out;
  out.dim = m.dim;
  out.entries.reserve(m.entries.size());
  for (long long x : m.entries) out.entries.emplace_back(static_cast<unsigned long long>(x));
  return out;
}

BigMatrix BigMatrix::identity(int n) {
  BigMatrix out;
  out.dim = n;
  out.entries.assign(static_cast<size_t>(n) * n, BigNat());
  for (int i = 0; i < n; ++i) out.at(i, i) = BigNat(1);
  return out;
}

BigMatrix multiply(const BigMatrix& a, const BigMatrix& b) {
  if (a.dim != b.dim) throw Error("matrix product: dimension mismatch");
  BigMatrix c;
  c.dim = a.dim;
  c.entries.assign(static_cast<size_t>(a.dim) * a.dim, BigNat());
  for (int i = 0; i < a.dim; ++i) {
    for (int k = 0; k < a.dim; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (int j = 0; j < a.dim; ++j) {
        if (b.at(k, j).is_zero()) continue;
        c.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    }
  }
  return c;
}

BigMatrix exact_power(const NonNegMatrix& m, int n) {
  if (n < 1) throw Error("exact_power: exponent must be positive");
  BigMatrix base = BigMatrix::from(m);
  BigMatrix out = BigMatrix::identity(m.dim);
  bool first = true;
  while (n > 0) {
    if (n & 1) {
      out = first ? base : multiply(out, base);
      first = false;
    }
    n >>= 1;
    if (n > 0) base = multiply(base, base);
  }
  return out;
}

}  // namespace hbg
