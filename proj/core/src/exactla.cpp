#include "trideg/exactla.hpp"

#include <string>

#include "trideg/error.hpp"

namespace trideg::la {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

Field::Field(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw InputError("field modulus " + std::to_string(p) + " is not a prime below 2^31");
  }
}

std::uint32_t Field::inv(std::uint32_t a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of zero in GF(p)");
  // Extended Euclid on signed 64-bit values.
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a % p_;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return reduce(t);
}

std::uint32_t Field::reduce(std::int64_t v) const {
  std::int64_t m = v % static_cast<std::int64_t>(p_);
  if (m < 0) m += p_;
  return static_cast<std::uint32_t>(m);
}

FieldElement::FieldElement(std::int64_t value, std::uint32_t modulus)
    : value_(Field(modulus).reduce(value)), modulus_(modulus) {}

namespace {
void require_same(const FieldElement& a, const FieldElement& b) {
  if (a.modulus() != b.modulus()) throw InputError("field elements over different moduli");
}
}  // namespace

FieldElement FieldElement::operator+(const FieldElement& o) const {
  require_same(*this, o);
  return {static_cast<std::int64_t>(value_) + o.value_, modulus_};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  require_same(*this, o);
  return {static_cast<std::int64_t>(value_) - o.value_, modulus_};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  require_same(*this, o);
  return {static_cast<std::int64_t>(static_cast<std::uint64_t>(value_) * o.value_ % modulus_),
          modulus_};
}
FieldElement FieldElement::operator-() const { return {-static_cast<std::int64_t>(value_), modulus_}; }
FieldElement FieldElement::inverse() const { return {Field(modulus_).inv(value_), modulus_}; }

Matrix::Matrix(std::size_t rows, std::size_t cols, std::uint32_t modulus)
    : rows_(rows), cols_(cols), modulus_(modulus), entries_(rows * cols, 0) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::uint32_t modulus,
               std::vector<std::uint32_t> entries)
    : rows_(rows), cols_(cols), modulus_(modulus), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) throw InputError("matrix entry count does not match shape");
  for (auto& e : entries_) e %= modulus_;
}

Matrix Matrix::identity(std::size_t n, std::uint32_t modulus) {
  Matrix m(n, n, modulus);
  for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = 1 % modulus;
  return m;
}

std::vector<std::uint32_t> Matrix::column(std::size_t c) const {
  std::vector<std::uint32_t> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = entries_[r * cols_ + c];
  return out;
}

bool Matrix::is_zero() const {
  for (auto e : entries_) {
    if (e != 0) return false;
  }
  return true;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_ || modulus_ != o.modulus_) throw InputError("matrix product shape mismatch");
  Matrix out(rows_, o.cols_, modulus_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      std::uint64_t a = entries_[i * cols_ + k];
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        auto& slot = out.entries_[i * o.cols_ + j];
        slot = static_cast<std::uint32_t>((slot + a * o.entries_[k * o.cols_ + j]) % modulus_);
      }
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || modulus_ != o.modulus_) {
    throw InputError("matrix sum shape mismatch");
  }
  Matrix out = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    out.entries_[i] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(entries_[i]) + o.entries_[i]) % modulus_);
  }
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || modulus_ != o.modulus_) {
    throw InputError("matrix difference shape mismatch");
  }
  Matrix out = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    out.entries_[i] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(entries_[i]) + modulus_ - o.entries_[i]) % modulus_);
  }
  return out;
}

Matrix Matrix::select_columns(std::span<const std::size_t> cols) const {
  Matrix out(rows_, cols.size(), modulus_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t j = 0; j < cols.size(); ++j) out.entries_[r * cols.size() + j] = (*this)(r, cols[j]);
  }
  return out;
}

Matrix Matrix::hconcat(const Matrix& o) const {
  if (rows_ != o.rows_ || modulus_ != o.modulus_) throw InputError("hconcat row mismatch");
  Matrix out(rows_, cols_ + o.cols_, modulus_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out.entries_[r * out.cols_ + c] = (*this)(r, c);
    for (std::size_t c = 0; c < o.cols_; ++c) out.entries_[r * out.cols_ + cols_ + c] = o(r, c);
  }
  return out;
}

RrefResult rref(const Matrix& m) {
  const Field f(m.modulus());
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::uint32_t> a(m.entries().begin(), m.entries().end());
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && a[sel * cols + c] == 0) ++sel;
    if (sel == rows) continue;
    if (sel != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[sel * cols + j], a[r * cols + j]);
    }
    const std::uint32_t inv = f.inv(a[r * cols + c]);
    for (std::size_t j = c; j < cols; ++j) a[r * cols + j] = f.mul(a[r * cols + j], inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const std::uint32_t factor = a[i * cols + c];
      if (factor == 0) continue;
      for (std::size_t j = c; j < cols; ++j) {
        a[i * cols + j] = f.sub(a[i * cols + j], f.mul(factor, a[r * cols + j]));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  const std::size_t rk = pivots.size();
  return {Matrix(rows, cols, m.modulus(), std::move(a)), std::move(pivots), rk};
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw InputError("solve: a and b have different row counts");
  if (a.modulus() != b.modulus()) throw InputError("solve: moduli differ");
  const RrefResult red = rref(a.hconcat(b));
  Matrix x(a.cols(), b.cols(), a.modulus());
  for (std::size_t i = 0; i < red.rank; ++i) {
    const std::size_t c = red.pivots[i];
    if (c >= a.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x.set(c, j, red.reduced(i, a.cols() + j));
  }
  return x;
}

Matrix kernel_basis(const Matrix& a) {
  const Field f(a.modulus());
  const RrefResult red = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : red.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  Matrix k(a.cols(), free_cols.size(), a.modulus());
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    const std::size_t fc = free_cols[j];
    k.set(fc, j, 1);
    for (std::size_t i = 0; i < red.rank; ++i) k.set(red.pivots[i], j, f.neg(red.reduced(i, fc)));
  }
  return k;
}

}  // namespace trideg::la
