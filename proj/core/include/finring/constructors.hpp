#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "finring/ring.hpp"

namespace finring {

// Z_m, one generator.
FiniteRing cyclic_ring(std::uint32_t m);

// Z_p[x]/(f) with basis 1, x, ..., x^(k-1). `coefficients` lists f from the
// constant term up: {1, 1, 1} is x^2 + x + 1. Throws NotPrime, NotMonic.
FiniteRing poly_quotient(std::uint32_t p, std::span<const std::int64_t> coefficients);

// M_n(R) over the basis {g_t E_ij}: coordinate (i*n + j)*k + t holds the
// g_t-component of entry (i, j), where k is the rank of R.
struct MatrixRing {
  FiniteRing ring;
  FiniteRing base;
  std::size_t n = 0;

  std::size_t coordinate(std::size_t i, std::size_t j, std::size_t t) const {
    return (i * n + j) * base.rank() + t;
  }
  Element entry(const Element& m, std::size_t i, std::size_t j) const;
  // Entries in row-major order.
  Element from_entries(std::span<const Element> entries) const;
  // a * E_ij
  Element elementary(std::size_t i, std::size_t j, const Element& a) const;
  // c * I
  Element scalar(const Element& c) const;
  Element transpose(const Element& m) const;
};

// Throws SizeLimitExceeded unless |R|^(n^2) <= kScanLimit.
MatrixRing matrix_ring(const FiniteRing& base, std::size_t n);

// Upper-triangular n x n matrices; coordinates list the positions i <= j in
// row-major order, each contributing base.rank() coordinates.
FiniteRing upper_triangular_ring(const FiniteRing& base, std::size_t n);

// Componentwise operations, unity (1, 1).
FiniteRing direct_sum(const FiniteRing& left, const FiniteRing& right);

// {aI + bE12 + cE23 + dE13} inside 3 x 3 matrices over Z_p, basis
// (I, E12, E23, E13).
FiniteRing heisenberg_ring(std::uint32_t p);

bool is_prime(std::uint64_t n);

}  // namespace finring
