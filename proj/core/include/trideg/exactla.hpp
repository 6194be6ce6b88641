#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace trideg::la {

/// Prime field GF(p) with p < 2^31. Primality is checked on construction.
class Field {
 public:
  explicit Field(std::uint32_t p);

  [[nodiscard]] std::uint32_t modulus() const { return p_; }

  [[nodiscard]] std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  [[nodiscard]] std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  [[nodiscard]] std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  [[nodiscard]] std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }
  [[nodiscard]] std::uint32_t inv(std::uint32_t a) const;
  [[nodiscard]] std::uint32_t reduce(std::int64_t v) const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint32_t p);

/// Residue together with its modulus.
class FieldElement {
 public:
  FieldElement(std::int64_t value, std::uint32_t modulus);

  [[nodiscard]] std::uint32_t value() const { return value_; }
  [[nodiscard]] std::uint32_t modulus() const { return modulus_; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator-() const;
  [[nodiscard]] FieldElement inverse() const;

  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  std::uint32_t value_;
  std::uint32_t modulus_;
};

/// Dense row-major matrix over GF(p).
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, std::uint32_t modulus);
  Matrix(std::size_t rows, std::size_t cols, std::uint32_t modulus,
         std::vector<std::uint32_t> entries);

  static Matrix identity(std::size_t n, std::uint32_t modulus);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] std::uint32_t modulus() const { return modulus_; }

  [[nodiscard]] std::uint32_t operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  void set(std::size_t r, std::size_t c, std::uint32_t v) { entries_[r * cols_ + c] = v % modulus_; }

  [[nodiscard]] std::span<const std::uint32_t> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  [[nodiscard]] std::span<const std::uint32_t> entries() const { return entries_; }
  [[nodiscard]] std::vector<std::uint32_t> column(std::size_t c) const;
  [[nodiscard]] bool is_zero() const;

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;

  /// Columns selected in order.
  [[nodiscard]] Matrix select_columns(std::span<const std::size_t> cols) const;
  /// [this | o]
  [[nodiscard]] Matrix hconcat(const Matrix& o) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::uint32_t modulus_;
  std::vector<std::uint32_t> entries_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank;
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Some X with a·X = b, or nullopt when the system is inconsistent.
/// Free variables are set to zero. Throws InputError on a row mismatch.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

/// Columns form a basis of the right kernel of a.
Matrix kernel_basis(const Matrix& a);

}  // namespace trideg::la
