#pragma once

// Homology obstructions to 0 ≤_Δ M, and the positive witness
// 0 ≤_{Δ+nil} S[1] ⊕ S.
//
// If 0 ≤_Δ M there is a triangle Z -f-> Z -> M -> Z[1]. Where H^{n-1}(M) and
// H^{n+1}(M) vanish, the long exact sequence makes H^n(f) injective and
// H^{n+1}(f) surjective; on finite-length homology both are isomorphisms,
// which forces H^n(M) = 0. So a degree with H^n(M) ≠ 0 and vanishing
// neighbours rules out 0 ≤_Δ M.

#include <optional>
#include <string>

#include "trideg/complexes.hpp"
#include "trideg/degeneration.hpp"

namespace trideg {

struct ObstructionCertificate {
  int degree = 0;
  HomologyDims homology;  // full dimension table the decision was read from
  std::string flag = "LES-certificate";
};

/// Highest degree n with H^n ≠ 0 and H^{n±1} = 0. Absent means no
/// certificate, not that a degeneration exists.
std::optional<ObstructionCertificate> isolated_homology_obstruction(const Complex& m);
/// Recomputes the homology and re-checks the isolation condition.
bool verify_obstruction(const ObstructionCertificate& c, const Complex& m);

struct ZeroDegeneration {
  DegenerationWitness witness;  // M = 0, Z = s, v = 0
  IsoCertificate iso;           // N -> s[1] ⊕ s
};

ZeroDegeneration zero_degenerates_witness(const Complex& s);

}  // namespace trideg
