#pragma once

// K₀ classes in the free basis of indecomposable projectives, the pairing
// induction on zero-class shift sums, and degenerations obtained from
// towers 0 = M₀ -> M₁ -> ... -> M_n = M with cone(f_k) ≅ S_k[r_k].

#include <cstdint>
#include <string>
#include <vector>

#include "trideg/degeneration.hpp"

namespace trideg {

struct K0Class {
  std::vector<std::int64_t> coefficients;  // indexed by vertex
  [[nodiscard]] bool is_zero() const;
  friend bool operator==(const K0Class&, const K0Class&) = default;
};

/// Σ_n (-1)^n [X^n].
K0Class k0_class(const Complex& x);

struct ShiftTerm {
  std::string gen;
  int shift = 0;
  std::size_t mult = 1;
  friend bool operator==(const ShiftTerm&, const ShiftTerm&) = default;
};

/// ⊕ S[k]^m with pairwise distinct (S, k).
struct ShiftSum {
  std::vector<ShiftTerm> terms;
  /// Throws InputError on zero multiplicities or repeated (S, k).
  void validate() const;
  /// Sum of the even-shift multiplicities; equals the odd one for a zero class.
  [[nodiscard]] std::size_t m() const;
};

struct ShiftPair {
  std::string gen;
  int even_shift = 0;
  int odd_shift = 0;
  std::size_t mult = 1;
  friend bool operator==(const ShiftPair&, const ShiftPair&) = default;
};

/// Splits a zero-class shift sum into pairs (S[k] ⊕ S[l])^q with k even and
/// l odd. Each step takes q = the least multiplicity of the generator and
/// peels its smallest even shift against its largest odd shift. Throws
/// InputError naming the generator when its alternating sum is nonzero.
std::vector<ShiftPair> pair_decompose(const ShiftSum& x);

struct ConeTag {
  std::string gen;
  Complex generator;
  int shift = 0;
  [[nodiscard]] Complex object() const { return trideg::shift(generator, shift); }
};

struct Tower {
  std::vector<Complex> objects;       // M_0 = 0, ..., M_n = M
  std::vector<ChainMap> maps;         // f_k : M_{k-1} -> M_k, k = 1..n
  std::vector<ConeTag> tags;          // C_k = S_k[r_k]
  std::vector<IsoCertificate> cones;  // cone(f_k) -> C_k
  [[nodiscard]] std::size_t length() const { return maps.size(); }
};

/// Builds the certificates cone(f_k) ≅ S_k[r_k]; the projection onto the
/// first summand is tried before searching. Throws CertificateError when a
/// step cannot be certified.
Tower certify_tower(std::vector<Complex> objects, std::vector<ChainMap> maps, std::vector<ConeTag> tags,
                    const SearchOptions& opts = {});
bool verify_tower(const Tower& t);

struct TowerStep {
  DegenerationWitness witness;
  Complex expected;       // M_{k-1} ⊕ C_k ⊕ ... ⊕ C_n
  IsoCertificate iso;     // witness.n -> expected
};

/// M_n ⪯ M_{n-1} ⊕ C_n ⪯ ... ⪯ C_1 ⊕ ... ⊕ C_n, one pushout along the zero
/// endomorphism per step.
std::vector<TowerStep> tower_nil_chain(const Tower& t, const SearchOptions& opts = {});

/// One triangle ⊕_{k<n} M_k -> (⊕_{k<n} M_k) ⊕ M -> ⊕ C_k.
TowerStep tower_delta_witness(const Tower& t, const SearchOptions& opts = {});

/// ⊕ C_k in tower order.
Complex tower_cone_sum(const Tower& t);

}  // namespace trideg
