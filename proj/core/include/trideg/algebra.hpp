#pragma once

// Path algebras A = kQ/I with monomial relations.
//
// Conventions: paths are arrow sequences in traversal order and the product
// p·q is "p, then q"; so e_{s(p)}·p = p = p·e_{t(p)}. Right projectives are
// P_v = e_v A, and Hom(P_v, P_w) ≅ e_w A e_v acts by left multiplication, so
// composing morphisms is multiplying algebra elements in matrix order.

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "trideg/exactla.hpp"

namespace trideg {

struct Arrow {
  std::string name;
  std::size_t source;
  std::size_t target;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

struct QuiverPresentation {
  std::uint32_t field = 2;
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  /// Each relation is a path (arrow indices, traversal order) declared zero.
  std::vector<std::vector<std::size_t>> relations;
  std::optional<std::size_t> nilpotency_bound;
  friend bool operator==(const QuiverPresentation&, const QuiverPresentation&) = default;
};

struct BasisPath {
  std::size_t start;
  std::size_t end;
  std::vector<std::size_t> arrows;
  [[nodiscard]] std::size_t length() const { return arrows.size(); }
};

/// Nonzero paths modulo the monomial relations, ordered by (length, lex).
class PathBasis {
 public:
  PathBasis() = default;
  explicit PathBasis(std::vector<BasisPath> paths);

  [[nodiscard]] std::size_t size() const { return paths_.size(); }
  [[nodiscard]] const BasisPath& operator[](std::size_t i) const { return paths_[i]; }
  [[nodiscard]] const std::vector<BasisPath>& paths() const { return paths_; }
  [[nodiscard]] std::optional<std::size_t> find(std::size_t start,
                                               const std::vector<std::size_t>& arrows) const;

 private:
  std::vector<BasisPath> paths_;
  std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> index_;
};

/// Dense coefficient vector over the path basis.
class AlgebraElement {
 public:
  AlgebraElement() = default;
  explicit AlgebraElement(std::size_t dim) : coeffs_(dim, 0) {}
  explicit AlgebraElement(std::vector<std::uint32_t> coeffs) : coeffs_(std::move(coeffs)) {}

  [[nodiscard]] std::size_t dimension() const { return coeffs_.size(); }
  [[nodiscard]] std::uint32_t operator[](std::size_t i) const { return coeffs_[i]; }
  void set(std::size_t i, std::uint32_t v) { coeffs_[i] = v; }
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] const std::vector<std::uint32_t>& coefficients() const { return coeffs_; }

  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

 private:
  std::vector<std::uint32_t> coeffs_;
};

class Algebra {
 public:
  /// Enumerates the path basis. Throws InputError for malformed
  /// presentations and for infinite-dimensional quotients.
  static std::shared_ptr<const Algebra> build(QuiverPresentation q);

  [[nodiscard]] const QuiverPresentation& presentation() const { return pres_; }
  [[nodiscard]] const la::Field& field() const { return field_; }
  [[nodiscard]] std::uint32_t modulus() const { return field_.modulus(); }
  [[nodiscard]] const PathBasis& basis() const { return basis_; }
  [[nodiscard]] std::size_t dimension() const { return basis_.size(); }
  [[nodiscard]] std::size_t vertex_count() const { return pres_.vertices.size(); }
  [[nodiscard]] const std::string& vertex_name(std::size_t v) const { return pres_.vertices.at(v); }
  [[nodiscard]] std::size_t vertex_index(const std::string& name) const;

  /// Basis index of p·q, or nullopt when the product vanishes.
  [[nodiscard]] std::optional<std::size_t> product_index(std::size_t p, std::size_t q) const {
    auto r = product_[p * basis_.size() + q];
    if (r < 0) return std::nullopt;
    return static_cast<std::size_t>(r);
  }

  [[nodiscard]] AlgebraElement zero() const { return AlgebraElement(dimension()); }
  [[nodiscard]] AlgebraElement idempotent(std::size_t v) const;
  [[nodiscard]] AlgebraElement path_element(std::size_t path, std::uint32_t coeff = 1) const;
  [[nodiscard]] AlgebraElement one() const;

  [[nodiscard]] AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const;
  [[nodiscard]] AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) const;
  [[nodiscard]] AlgebraElement sub(const AlgebraElement& a, const AlgebraElement& b) const;
  [[nodiscard]] AlgebraElement neg(const AlgebraElement& a) const;
  [[nodiscard]] AlgebraElement scale(const AlgebraElement& a, std::uint32_t c) const;

  /// Basis indices of paths starting at `start` and ending at `end`, i.e. a
  /// basis of e_start A e_end.
  [[nodiscard]] const std::vector<std::size_t>& paths_between(std::size_t start, std::size_t end) const {
    return between_[start * vertex_count() + end];
  }
  /// Position of a basis path inside paths_between(start, end).
  [[nodiscard]] std::size_t local_index(std::size_t path) const { return local_[path]; }

  /// Basis of Hom(P_v, P_w) = e_w A e_v.
  [[nodiscard]] std::vector<AlgebraElement> hom_basis(std::size_t v, std::size_t w) const;
  /// True when every nonzero coefficient of a lies in e_w A e_v.
  [[nodiscard]] bool in_hom(const AlgebraElement& a, std::size_t v, std::size_t w) const;

  /// dim_k (P_v e_w): number of basis paths from v to w.
  [[nodiscard]] std::vector<std::size_t> projective_dimension_vector(std::size_t v) const;

  [[nodiscard]] std::string path_name(std::size_t path) const;
  [[nodiscard]] std::optional<std::size_t> parse_path(const std::string& name) const;

  [[nodiscard]] bool is_acyclic() const;

 private:
  explicit Algebra(QuiverPresentation q);

  QuiverPresentation pres_;
  la::Field field_;
  PathBasis basis_;
  std::vector<std::int64_t> product_;
  std::vector<std::vector<std::size_t>> between_;
  std::vector<std::size_t> local_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Build the basis of a presentation (the standalone form of Algebra::build).
PathBasis build_basis(const QuiverPresentation& q);

/// Matrix whose entries are algebra elements. Row i / column j carry the
/// vertices of the target / source summands; those labels live with the
/// complexes, not here.
class AlgMatrix {
 public:
  AlgMatrix() = default;
  AlgMatrix(std::size_t rows, std::size_t cols, std::size_t dim)
      : rows_(rows), cols_(cols), entries_(rows * cols, AlgebraElement(dim)) {}

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] const AlgebraElement& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  AlgebraElement& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  [[nodiscard]] bool is_zero() const;

  friend bool operator==(const AlgMatrix&, const AlgMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<AlgebraElement> entries_;
};

AlgMatrix mat_mul(const Algebra& a, const AlgMatrix& x, const AlgMatrix& y);
AlgMatrix mat_add(const Algebra& a, const AlgMatrix& x, const AlgMatrix& y);
AlgMatrix mat_sub(const Algebra& a, const AlgMatrix& x, const AlgMatrix& y);
AlgMatrix mat_neg(const Algebra& a, const AlgMatrix& x);
AlgMatrix mat_scale(const Algebra& a, const AlgMatrix& x, std::uint32_t c);
/// Identity on ⊕ e_v A for the listed vertices.
AlgMatrix mat_identity(const Algebra& a, const std::vector<std::size_t>& vertices);

/// Assemble a block matrix; blocks[i][j] must have consistent shapes given
/// the row heights and column widths.
AlgMatrix mat_blocks(const Algebra& a, const std::vector<std::size_t>& row_heights,
                     const std::vector<std::size_t>& col_widths,
                     const std::vector<std::vector<const AlgMatrix*>>& blocks);
/// Sub-block [r0, r0+nr) × [c0, c0+nc).
AlgMatrix mat_slice(const AlgMatrix& x, std::size_t r0, std::size_t nr, std::size_t c0, std::size_t nc);

}  // namespace trideg
