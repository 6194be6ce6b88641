#pragma once

// Triangle degenerations.
//
// Left form:  Z -(v;u)-> Z ⊕ M -> N -> Z[1], with v an endomorphism of Z.
// Right form: N -(s;t)-> M ⊕ Z -(u, v)-> Z -> N[1].
// A witness stores the components of its triangle exactly as they occur,
// including signs introduced by the cone conventions.

#include <optional>
#include <string>

#include "trideg/complexes.hpp"
#include "trideg/triangles.hpp"

namespace trideg {

enum class Side { left, right };

std::string to_string(Side s);

struct NilpotencyCertificate {
  std::size_t exponent = 1;
  Homotopy homotopy;  // witnesses v^exponent ≃ 0
};

struct DegenerationWitness {
  Side side;
  Complex m;
  Complex n;
  Complex z;
  ChainMap v;  // endomorphism of Z
  ChainMap u;  // left: Z -> M, right: M -> Z
  Triangle triangle;
  std::optional<NilpotencyCertificate> nil;
};

/// First exponent k <= bound with v^k ≃ 0. The default bound is
/// 1 + dim End_K(Z).
std::optional<NilpotencyCertificate> nilpotency_certificate(const ChainMap& v,
                                                            std::optional<std::size_t> bound = std::nullopt);
bool verify_nilpotency(const NilpotencyCertificate& c, const ChainMap& v);

/// N = cone((v;u)) with the standard triangle. Attaches a nilpotency
/// certificate when one is found.
DegenerationWitness left_witness(const ChainMap& v, const ChainMap& u);

/// Checks the triangle, its shape against (side, M, N, Z, v, u) and the
/// nilpotency certificate.
bool verify_witness(const DegenerationWitness& w);

struct HomotopyCartesian {
  Complex n;
  ChainMap r;  // Deg: N -> Z;  Ged: Z -> N
  ChainMap s;  // Deg: N -> M;  Ged: M -> N
  DegenerationWitness witness;
};

/// Deg(u, v) for u : M -> Z: N = cone((u, -v) : M ⊕ Z -> Z)[-1]. The right
/// triangle is N -(s;r)-> M ⊕ Z -(-u, v)-> Z.
HomotopyCartesian deg_pullback(const ChainMap& u, const ChainMap& v, const SearchOptions& opts = {});

/// Ged(u', v) for u' : Z -> M: N = cone((u'; -v) : Z -> M ⊕ Z). The left
/// triangle is Z -(-v; u')-> Z ⊕ M -> N.
HomotopyCartesian ged_pushout(const ChainMap& u_prime, const ChainMap& v, const SearchOptions& opts = {});

struct ConeComparison {
  Complex cone_pi;
  Complex cone_v;
  ChainMap alpha;  // cone(v) -> cone(π)
  std::optional<IsoCertificate> certificate;
  bool verdict = false;
  bool explicit_alpha = false;  // true when the completion formula was an iso
};

/// For a left witness with second map (τ, π) : Z ⊕ M -> N, compares cone(π)
/// with cone(v) through the completed morphism of triangles.
ConeComparison theorem_cone_comparison(const DegenerationWitness& w, const SearchOptions& opts = {});

struct Factorization {
  Complex g2;   // Ged(w, ν2)
  Complex g12;  // Ged(w, ν1 ν2)
  ChainMap f;   // g2 -> g12
  std::optional<DegenerationWitness> witness;  // Ged(w,ν2) ≤ Ged(w,ν1ν2), left
  bool verdict = false;
};

/// ν1 ν2 means ν1 ∘ ν2.
Factorization factorization_chain(const ChainMap& w, const ChainMap& nu1, const ChainMap& nu2,
                                  const SearchOptions& opts = {});

struct TwoPushout {
  Complex x;   // pushout along (t, t')
  Complex y;   // pushout along (u, u')
  ChainMap d;  // x -> y
  std::optional<DegenerationWitness> witness;  // X ≤ Y, left, with Z'
  bool verdict = false;
};

/// Two right witnesses with equal M, N and equal s-component.
TwoPushout two_pushout_theorem(const DegenerationWitness& w1, const DegenerationWitness& w2,
                               const SearchOptions& opts = {});

struct ConeZero {
  Complex z;
  Complex cone;     // cone(v) for v = 0
  Complex target;   // Z[1] ⊕ Z
  IsoSearch iso;
  DegenerationWitness follow_up;  // cone(0) ≤ Z[1] ⊕ Z, v-component 0
  IsoSearch follow_up_iso;        // follow_up.n ≅ Z[1] ⊕ Z
};

/// cone(0_Z) ≅ Z[1] ⊕ Z and the witness cone(v) ≤_{Δ+nil} Z ⊕ Z[1].
ConeZero cone_zero(const Complex& z, const SearchOptions& opts = {});

/// The follow-up witness for an arbitrary endomorphism v: N = cone(v) and
/// left_witness(0, ε) with ε : Z -> cone(v) the inclusion.
DegenerationWitness cone_follow_up(const ChainMap& v);

}  // namespace trideg
