#pragma once

// Flattening of graded-map equations into one linear system over GF(p).
//
// An unknown is a graded map of fixed degree between two term layouts; its
// coordinates are the path coefficients of every matrix entry, restricted to
// the hom space e_t A e_s the entry must live in. Equations are graded maps
// too. Every term has the shape  coeff · L · U^{n} · R  with known algebra
// matrices L and R (either may be the identity).

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "trideg/complexes.hpp"

namespace trideg {

class MapSpace {
 public:
  MapSpace(const Algebra& algebra, Terms source, Terms target, int degree);
  MapSpace(const Complex& source, const Complex& target, int degree)
      : MapSpace(source.algebra(), source.terms(), target.terms(), degree) {}

  [[nodiscard]] std::size_t size() const { return size_; }
  [[nodiscard]] int degree() const { return degree_; }
  [[nodiscard]] const std::vector<int>& degrees() const { return degrees_; }
  [[nodiscard]] bool has_block(int n) const;
  [[nodiscard]] const std::vector<std::size_t>& source_term(int n) const;
  [[nodiscard]] const std::vector<std::size_t>& target_term(int n) const;  // target^{n+degree}
  /// First coordinate of entry (i, j) of block n.
  [[nodiscard]] std::size_t offset(int n, std::size_t i, std::size_t j) const;

  [[nodiscard]] Blocks to_blocks(std::span<const std::uint32_t> coords) const;
  [[nodiscard]] std::vector<std::uint32_t> to_coords(const Blocks& blocks) const;

 private:
  const Algebra* algebra_;
  Terms source_;
  Terms target_;
  int degree_;
  std::vector<int> degrees_;
  std::map<int, std::size_t> block_offset_;
  std::map<int, std::vector<std::size_t>> entry_offsets_;  // row-major within a block
  std::size_t size_ = 0;
};

struct AffineSolution {
  std::vector<std::uint32_t> particular;
  la::Matrix kernel;  // columns span the homogeneous solutions
};

class LinearSystem {
 public:
  explicit LinearSystem(const Algebra& algebra) : algebra_(&algebra) {}

  std::size_t add_unknown(MapSpace space);
  std::size_t add_equation(MapSpace space);

  /// Adds coeff · left · U_unknown^{n_in} · right to block n_out of equation
  /// `eq`. Null matrices stand for identities. Missing blocks are skipped.
  void add_term(std::size_t eq, int n_out, std::size_t unknown, int n_in,
                const AlgMatrix* left, const AlgMatrix* right, std::uint32_t coeff = 1);

  [[nodiscard]] std::size_t unknown_count() const;
  [[nodiscard]] std::size_t equation_count() const;
  [[nodiscard]] const MapSpace& unknown(std::size_t i) const { return unknowns_[i]; }
  [[nodiscard]] const MapSpace& equation(std::size_t i) const { return equations_[i]; }

  [[nodiscard]] la::Matrix matrix() const;
  /// Right-hand side from one Blocks value per equation space.
  [[nodiscard]] std::vector<std::uint32_t> flatten_equations(const std::vector<Blocks>& values) const;
  /// Unknown coordinates split into one Blocks value per unknown space.
  [[nodiscard]] std::vector<Blocks> split_unknowns(std::span<const std::uint32_t> coords) const;

  [[nodiscard]] std::optional<AffineSolution> solve(const std::vector<Blocks>& rhs) const;
  [[nodiscard]] std::optional<std::vector<std::uint32_t>> solve_particular(const std::vector<Blocks>& rhs) const;

 private:
  struct Term {
    std::size_t eq;
    int n_out;
    std::size_t unknown;
    int n_in;
    std::optional<AlgMatrix> left;
    std::optional<AlgMatrix> right;
    std::uint32_t coeff;
  };

  [[nodiscard]] std::size_t unknown_offset(std::size_t u) const;
  [[nodiscard]] std::size_t equation_offset(std::size_t e) const;

  const Algebra* algebra_;
  std::vector<MapSpace> unknowns_;
  std::vector<MapSpace> equations_;
  std::vector<Term> terms_;
};

/// particular + kernel · c for uniformly random c.
std::vector<std::uint32_t> sample(const AffineSolution& s, std::mt19937_64& rng);

/// The system h ↦ d_Y h + h d_X from degree -1 maps to chain-map coordinates.
LinearSystem homotopy_system(const Complex& x, const Complex& y);
/// The system f ↦ d_Y f - f d_X whose kernel is the chain maps X -> Y.
LinearSystem commutation_system(const Complex& x, const Complex& y);

/// Chain map X -> Y given coordinates in MapSpace(X, Y, 0).
ChainMap chain_map_from_coords(const Complex& x, const Complex& y, std::span<const std::uint32_t> coords);

}  // namespace trideg
