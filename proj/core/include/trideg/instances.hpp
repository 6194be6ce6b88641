#pragma once

// Seeded random instances at desk scale and the worked examples.

#include <cstdint>
#include <random>
#include <string>

#include "trideg/degeneration.hpp"
#include "trideg/grothendieck.hpp"

namespace trideg::instances {

using Rng = std::mt19937_64;

AlgebraPtr a2(std::uint32_t p = 2);
/// Linear A₃ (α : 1 -> 2, β : 2 -> 3), optionally with the relation α·β = 0.
AlgebraPtr a3(std::uint32_t p = 2, bool with_relation = true);
/// One vertex, loop x, x·x = 0.
AlgebraPtr loop(std::uint32_t p = 2);
/// One of the algebras above, chosen at random.
AlgebraPtr random_algebra(Rng& rng, std::uint32_t p);

struct ComplexShape {
  int min_degree = -2;
  int amplitude = 3;            // number of consecutive degrees, at most 5
  std::size_t max_term = 2;     // summands per degree
  std::size_t max_total = 12;   // total k-dimension of all terms
};

/// Random complex: random term lists, differentials drawn uniformly from the
/// solutions of d^n d^{n-1} = 0 degree by degree.
Complex random_complex(const AlgebraPtr& alg, Rng& rng, const ComplexShape& shape = {});
ChainMap random_chain_map(const Complex& x, const Complex& y, Rng& rng);
/// Chain map whose entries lie in the radical; nilpotent on the nose.
ChainMap random_radical_map(const Complex& x, const Complex& y, Rng& rng);
/// 0, a radical endomorphism, or (rarely) an arbitrary one.
ChainMap random_endomorphism(const Complex& z, Rng& rng);

/// left_witness with random Z, M, v (radical or zero) and u.
DegenerationWitness random_left_witness(const AlgebraPtr& alg, Rng& rng, const ComplexShape& shape = {});
/// deg_pullback or ged_pushout of random data.
HomotopyCartesian random_deg(const AlgebraPtr& alg, Rng& rng, const ComplexShape& shape = {});
HomotopyCartesian random_ged(const AlgebraPtr& alg, Rng& rng, const ComplexShape& shape = {});

/// Two right witnesses sharing M, N and s: Deg(u, v) and a second triangle
/// through Z' = Z ⊕ W with u' = λu, v' = v ⊕ id_W and t' = (λ r; 0).
std::pair<DegenerationWitness, DegenerationWitness> random_shared_s_pair(const AlgebraPtr& alg, Rng& rng,
                                                                          const ComplexShape& shape = {});
std::pair<DegenerationWitness, DegenerationWitness> shared_s_pair(const DegenerationWitness& w1, const Complex& w_extra,
                                                                   std::uint32_t lambda);

/// M_k = cone(φ_k : S_k[r_k - 1] -> M_{k-1}), f_k the inclusion.
Tower random_tower(const AlgebraPtr& alg, Rng& rng, std::size_t length, const SearchOptions& opts = {});

/// Zero-class shift sum with m(X) <= max_m over up to three generators.
ShiftSum random_zero_class(Rng& rng, std::size_t max_m = 8);

/// Simple module S_1 of A₂ as its projective resolution P_2 -α-> P_1 (degrees -1, 0).
Complex simple_resolution(const AlgebraPtr& a2);

struct Zwara {
  AlgebraPtr algebra;
  Complex n1;       // P_2 stalk
  Complex m;        // P_1 stalk
  Complex n2;       // P_2 -> P_1 resolving S_1
  ChainMap iota;    // n1 -> m
  ChainMap rho;     // m -> n2
  DegenerationWitness witness;  // left_witness(n1, 0, ι)
};

Zwara zwara(std::uint32_t p = 2);

}  // namespace trideg::instances
