#pragma once

#include "mrb/dendriform.hpp"

#include <cstdint>

namespace mrb {

// K[t]/(t^n) with monomial basis 1, t, ..., t^{n-1}.
Algebra truncated_polynomial(std::size_t n);

// Upper triangular 2x2 matrices, basis E11, E12, E22.
Algebra upper_triangular();

// Basis e, n with e.e = e, e.n = n and every other product zero.
Algebra one_sided_extension();

// P_k(t^j) = t^{k+j+1}/(k+j+1), zero once the degree reaches n; labels "0".."q-1".
OperatorFamily truncated_integration(std::size_t n = 6, std::size_t q = 2);

// Zero algebra, zero actions, zero maps.
OperatorFamily zero_family(std::size_t a, std::size_t m, std::size_t q);

// The isomorphic copy of F along invertible g on A and h on M: P'_x = g P_x h^{-1}.
OperatorFamily transport_family(const OperatorFamily& F, const DenseMatrix& g, const DenseMatrix& h);

// Random unit-triangular product, invertible with small entries.
DenseMatrix random_invertible(std::uint64_t seed, std::size_t n);

// Seeded relative Rota-Baxter triple (single label) with dim A, dim M <= 3, built
// as an isomorphic copy of one of a handful of base examples.
OperatorFamily random_rota_baxter(std::uint64_t seed);

// Seeded matching family over a small algebra. When `valid` is false the maps are
// random and usually fail the matching identity.
OperatorFamily random_matching_family(std::uint64_t seed, bool valid, std::size_t q = 2);

// One-dimensional matching dendriform algebra with a <_x a = prec[x] a, a >_x a = succ[x] a.
// Passes the axioms iff prec[y] * succ[x] = 0 for all x, y.
MatchingDendriform line_dendriform(const std::vector<Scalar>& prec, const std::vector<Scalar>& succ,
                                   LabelSet labels = LabelSet({"a", "b"}));

// Every one-dimensional structure on two labels with coefficients in {-1, 0, 1}.
std::vector<MatchingDendriform> line_dendriform_grid();

// Seeded dendriform induced from a random matching family.
MatchingDendriform random_dendriform(std::uint64_t seed, std::size_t q = 2);

} // namespace mrb
