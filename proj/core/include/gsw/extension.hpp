#pragma once

#include <vector>

#include "gsw/fields.hpp"
#include "gsw/polynomial.hpp"

namespace gsw {

/// Field homomorphism F_{p^a} -> F_{p^b} (a | b) fixing F_p. The generator
/// of the source is sent to the smallest root (by code) of the source
/// modulus in the target, so repeated construction yields the same map.
class Embedding {
 public:
  Embedding(const Fq& from, const Fq& to);

  const Fq& source() const { return from_; }
  const Fq& target() const { return to_; }
  FqElement operator()(FqElement x) const;
  Polynomial operator()(const Polynomial& f) const;

 private:
  Fq from_, to_;
  std::vector<FqElement> basis_image_;  // images of 1, t, ..., t^{n-1}
};

FqElement embed(FqElement x, const Fq& from, const Fq& to);

/// Smallest field containing both (degree lcm); returns one of the inputs
/// when its degree is already a multiple of the other's.
Fq compositum(const Fq& a, const Fq& b);

struct RootMultiplicity {
  FqElement root;
  unsigned multiplicity = 0;
};

struct SplitResult {
  Fq field;
  std::vector<RootMultiplicity> roots;  // sorted by code
};

/// Roots of f lying in f's own coefficient field, with multiplicities,
/// sorted by code. Small fields are searched exhaustively; larger ones go
/// through gcd(f, T^q - T) and equal-degree splitting.
std::vector<RootMultiplicity> roots_in_field(const Polynomial& f);

/// Distinct roots via gcd(f, T^q - T) and randomized equal-degree splitting
/// (deterministic seed), regardless of field size.
std::vector<FqElement> distinct_roots_by_splitting(const Polynomial& f);
/// Distinct roots by evaluating f at every field element.
std::vector<FqElement> distinct_roots_exhaustive(const Polynomial& f);

/// Least k such that f splits into linear factors over the degree-k
/// extension of its coefficient field (distinct-degree factorization).
unsigned splitting_degree(const Polynomial& f);

/// Extension where f splits, and all its roots there. Throws InvalidInput
/// for f = 0.
SplitResult roots_in_splitting_field(const Polynomial& f);

struct ArtinSchreierRoot {
  Fq field;
  FqElement root;
};

/// gamma with gamma^p - gamma = c, in F itself when possible and otherwise in
/// the degree-p extension. The smallest root (by code) is returned.
ArtinSchreierRoot artin_schreier_root(const Fq& field, FqElement c);

}  // namespace gsw
