#pragma once

// Bounded complexes of finitely generated projectives over a path algebra,
// i.e. objects of K^b(proj A).
//
// Indexing is cohomological: d^n : X^n -> X^{n+1}. Shift is
// X[k]^n = X^{n+k} with d_{X[k]} = (-1)^k d_X; maps shift without sign.
// The cone of f : X -> Y has cone^n = X^{n+1} ⊕ Y^n (X part first) and
// differential [[-d_X, 0], [f, d_Y]].

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "trideg/algebra.hpp"

namespace trideg {

using Terms = std::map<int, std::vector<std::size_t>>;
using Blocks = std::map<int, AlgMatrix>;

class Complex {
 public:
  /// Validates hom constraints, shapes, and d∘d = 0; throws InputError.
  /// Empty terms are dropped; differentials between nonempty terms are kept
  /// (missing ones are zero).
  Complex(AlgebraPtr algebra, Terms terms, Blocks differentials);

  static Complex zero(AlgebraPtr algebra);
  static Complex stalk(AlgebraPtr algebra, std::vector<std::size_t> vertices, int degree);

  [[nodiscard]] const Algebra& algebra() const { return *algebra_; }
  [[nodiscard]] const AlgebraPtr& algebra_ptr() const { return algebra_; }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] const std::vector<std::size_t>& term(int n) const;
  [[nodiscard]] std::size_t rank(int n) const { return term(n).size(); }
  /// d^n : X^n -> X^{n+1}; zero matrix of the right shape when absent.
  [[nodiscard]] AlgMatrix differential(int n) const;
  [[nodiscard]] const Blocks& differentials() const { return diffs_; }

  [[nodiscard]] std::vector<int> support() const;
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] int min_degree() const;
  [[nodiscard]] int max_degree() const;
  [[nodiscard]] std::size_t total_rank() const;

  friend bool operator==(const Complex& a, const Complex& b);

 private:
  AlgebraPtr algebra_;
  Terms terms_;
  Blocks diffs_;
};

/// Zero matrix X^n -> Y^m shaped by the term lists.
AlgMatrix zero_block(const Algebra& a, const std::vector<std::size_t>& target,
                     const std::vector<std::size_t>& source);

/// Degree-0 map commuting with the differentials.
class ChainMap {
 public:
  /// Validates shapes, hom constraints and f d = d f; throws InputError.
  ChainMap(Complex source, Complex target, Blocks components);
  ChainMap(std::shared_ptr<const Complex> source, std::shared_ptr<const Complex> target,
           Blocks components);

  [[nodiscard]] const Complex& source() const { return *source_; }
  [[nodiscard]] const Complex& target() const { return *target_; }
  [[nodiscard]] const std::shared_ptr<const Complex>& source_ptr() const { return source_; }
  [[nodiscard]] const std::shared_ptr<const Complex>& target_ptr() const { return target_; }
  [[nodiscard]] const Blocks& components() const { return comps_; }
  /// f^n : X^n -> Y^n, zero when absent.
  [[nodiscard]] AlgMatrix at(int n) const;

  friend bool operator==(const ChainMap& a, const ChainMap& b);

 private:
  std::shared_ptr<const Complex> source_;
  std::shared_ptr<const Complex> target_;
  Blocks comps_;
};

/// Degree -1 map h^n : X^n -> Y^{n-1}; a proof object for f - g = d h + h d.
class Homotopy {
 public:
  Homotopy(Complex source, Complex target, Blocks components);
  Homotopy(std::shared_ptr<const Complex> source, std::shared_ptr<const Complex> target,
           Blocks components);
  static Homotopy zero(const ChainMap& between);

  [[nodiscard]] const Complex& source() const { return *source_; }
  [[nodiscard]] const Complex& target() const { return *target_; }
  [[nodiscard]] const std::shared_ptr<const Complex>& source_ptr() const { return source_; }
  [[nodiscard]] const std::shared_ptr<const Complex>& target_ptr() const { return target_; }
  [[nodiscard]] const Blocks& components() const { return comps_; }
  [[nodiscard]] AlgMatrix at(int n) const;

  friend bool operator==(const Homotopy& a, const Homotopy& b);

 private:
  std::shared_ptr<const Complex> source_;
  std::shared_ptr<const Complex> target_;
  Blocks comps_;
};

// --- elementary maps -------------------------------------------------------

ChainMap identity_map(const Complex& x);
ChainMap zero_map(const Complex& x, const Complex& y);
/// g ∘ f
ChainMap compose(const ChainMap& g, const ChainMap& f);
ChainMap add(const ChainMap& f, const ChainMap& g);
ChainMap subtract(const ChainMap& f, const ChainMap& g);
ChainMap negate(const ChainMap& f);
ChainMap scale(const ChainMap& f, std::uint32_t c);
/// f^k, k >= 0 (k = 0 gives the identity).
ChainMap power(const ChainMap& f, std::size_t k);

Homotopy add(const Homotopy& h, const Homotopy& k);
Homotopy negate(const Homotopy& h);
Homotopy scale(const Homotopy& h, std::uint32_t c);
/// g ∘ h and h ∘ f for a homotopy h and chain maps f, g.
Homotopy compose(const ChainMap& g, const Homotopy& h);
Homotopy compose(const Homotopy& h, const ChainMap& f);

/// d h + h d, the chain map a homotopy is supposed to produce.
ChainMap boundary_of(const Homotopy& h);
/// f - g == d h + h d, exactly.
bool witnesses(const Homotopy& h, const ChainMap& f, const ChainMap& g);
/// f == d h + h d, exactly.
bool witnesses_null(const Homotopy& h, const ChainMap& f);

// --- shift, sum, cone ------------------------------------------------------

Complex shift(const Complex& x, int k);
ChainMap shift(const ChainMap& f, int k);
Homotopy shift(const Homotopy& h, int k);

struct DirectSum {
  Complex sum;
  ChainMap inject_first;
  ChainMap inject_second;
  ChainMap project_first;
  ChainMap project_second;
};

/// x ⊕ y with x's summands listed first in every degree.
DirectSum direct_sum(const Complex& x, const Complex& y);
Complex direct_sum(const std::vector<Complex>& parts, const AlgebraPtr& algebra);

/// (f; g) : Z -> X ⊕ Y for f : Z -> X, g : Z -> Y.
ChainMap column(const ChainMap& f, const ChainMap& g);
/// (f, g) : X ⊕ Y -> W for f : X -> W, g : Y -> W.
ChainMap row(const ChainMap& f, const ChainMap& g);
/// (h; k) : X -> Y ⊕ Y' for homotopies h : X -> Y, k : X -> Y'.
Homotopy column(const Homotopy& h, const Homotopy& k);
/// f ⊕ g : X ⊕ Y -> X' ⊕ Y'.
ChainMap diagonal(const ChainMap& f, const ChainMap& g);

struct Cone {
  Complex complex;
  ChainMap inclusion;   // Y -> cone(f)
  ChainMap projection;  // cone(f) -> X[1]
  Homotopy null_homotopy;  // witnesses inclusion ∘ f ≃ 0
};

Cone cone(const ChainMap& f);

/// Map of cones induced by a square b∘f - f'∘a = d h + h d:
/// [[a[1], 0], [h[1], b]] : cone(f) -> cone(f').
ChainMap cone_map(const ChainMap& f, const ChainMap& f_prime, const ChainMap& a,
                  const ChainMap& b, const Homotopy& h);

/// Chain map that sends summand perm[n][i] of X^n to summand i of Y^n by the
/// identity; throws InputError if the result is not a chain map.
ChainMap permutation_map(const Complex& x, const Complex& y,
                         const std::map<int, std::vector<std::size_t>>& perm);

// --- homotopy questions ------------------------------------------------------

std::optional<Homotopy> is_nullhomotopic(const ChainMap& f);
/// Homotopy with f - g = d h + h d, if any.
std::optional<Homotopy> find_homotopy(const ChainMap& f, const ChainMap& g);
std::optional<Homotopy> is_contractible(const Complex& x);

/// Certificate for an isomorphism in K^b: the contraction of cone(f) and the
/// homotopy inverse read off from it.
struct IsoCertificate {
  ChainMap map;
  ChainMap inverse;
  Homotopy contraction;  // on cone(map)
};

std::optional<IsoCertificate> is_iso(const ChainMap& f);
/// Re-checks every part of an iso certificate exactly.
bool verify_iso(const IsoCertificate& c);

struct SearchOptions {
  std::size_t budget = 256;
  std::uint64_t seed = 0;
};

struct IsoSearch {
  std::optional<IsoCertificate> certificate;
  std::size_t attempts = 0;
  bool found_by_candidate = false;
};

/// Semi-decision for X ≅ Y in K^b: tries `candidate` (or the identity when
/// X == Y), then a basis of Hom(X, Y) modulo homotopy, then up to `budget`
/// random combinations. Absent means "not found", not "not isomorphic".
IsoSearch find_iso(const Complex& x, const Complex& y, const SearchOptions& opts = {},
                   const std::optional<ChainMap>& candidate = std::nullopt);

/// Basis of chain maps X -> Y.
std::vector<ChainMap> chain_map_basis(const Complex& x, const Complex& y);
/// Chain maps X -> Y whose representatives form a basis of Hom_K(X, Y).
std::vector<ChainMap> hom_basis_mod_homotopy(const Complex& x, const Complex& y);
std::size_t hom_dimension_mod_homotopy(const Complex& x, const Complex& y);

/// H^n(X)·e_v dimensions, per degree n of the support, per vertex v.
using HomologyDims = std::map<int, std::vector<std::size_t>>;
HomologyDims homology_dims(const Complex& x);
/// Drops degrees whose homology vanishes.
HomologyDims nonzero_homology(const Complex& x);

std::string describe(const Complex& x);

}  // namespace trideg
