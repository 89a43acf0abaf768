#include "finring/constructors.hpp"

#include <string>

namespace finring {

namespace {

Element zeros(std::size_t k) { return Element(k); }

Element unit_vector(std::size_t k, std::size_t i) {
  Element e(k);
  e[i] = 1;
  return e;
}

std::string poly_name(std::span<const std::int64_t> coeffs, std::uint32_t p) {
  std::string out;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    const auto c = ((coeffs[i] % p) + p) % p;
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (c != 1 || i == 0) out += std::to_string(c);
    if (i >= 1) out += 'x';
    if (i >= 2) out += '^' + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

void check_size(std::uint64_t order, std::string_view what) {
  if (order > kScanLimit) {
    throw RingError(ErrorCode::SizeLimitExceeded,
                    std::string(what) + " would have order " +
                        std::to_string(order) + ", limit is " +
                        std::to_string(kScanLimit));
  }
}

std::uint64_t checked_power(std::uint64_t base, std::size_t exp,
                            std::string_view what) {
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    result *= base;
    check_size(result, what);
  }
  return result;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FiniteRing cyclic_ring(std::uint32_t m) {
  if (m < 2) {
    throw RingError(ErrorCode::InvalidArgument,
                    "Z_m needs m >= 2, got " + std::to_string(m));
  }
  return make_ring({m}, {Element{1}}, Element{1}, "Z" + std::to_string(m));
}

FiniteRing poly_quotient(std::uint32_t p,
                         std::span<const std::int64_t> coefficients) {
  if (!is_prime(p)) {
    throw RingError(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  }
  if (coefficients.size() < 2) {
    throw RingError(ErrorCode::InvalidArgument,
                    "modulus polynomial must have degree >= 1");
  }
  const std::size_t k = coefficients.size() - 1;
  const auto lead = ((coefficients[k] % p) + p) % p;
  if (lead != 1) {
    throw RingError(ErrorCode::NotMonic,
                    "leading coefficient is " + std::to_string(lead) + " mod " +
                        std::to_string(p));
  }
  if (k > kMaxFactors) {
    throw RingError(ErrorCode::SizeLimitExceeded,
                    "degree " + std::to_string(k) + " exceeds " +
                        std::to_string(kMaxFactors));
  }
  // x^k = -(c_0 + ... + c_{k-1} x^{k-1})
  std::vector<std::int64_t> tail(k);
  for (std::size_t i = 0; i < k; ++i) {
    tail[i] = ((-coefficients[i]) % p + p) % p;
  }
  // Reduce a polynomial of degree <= 2k-2 modulo f.
  auto reduce = [&](std::vector<std::int64_t> poly) {
    for (std::size_t d = poly.size(); d-- > k;) {
      const std::int64_t c = poly[d] % p;
      if (c == 0) continue;
      poly[d] = 0;
      for (std::size_t i = 0; i < k; ++i) {
        poly[d - k + i] = (poly[d - k + i] + c * tail[i]) % p;
      }
    }
    Element out(k);
    for (std::size_t i = 0; i < k; ++i) {
      out[i] = static_cast<std::uint32_t>(poly[i] % p);
    }
    return out;
  };

  std::vector<Element> table;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<std::int64_t> poly(2 * k - 1, 0);
      poly[i + j] = 1;
      table.push_back(reduce(std::move(poly)));
    }
  }
  return make_ring(std::vector<std::uint32_t>(k, p), std::move(table),
                   unit_vector(k, 0),
                   "Z" + std::to_string(p) + "[x]/(" +
                       poly_name(coefficients, p) + ")");
}

Element MatrixRing::entry(const Element& m, std::size_t i,
                          std::size_t j) const {
  Element a(base.rank());
  for (std::size_t t = 0; t < base.rank(); ++t) a[t] = m[coordinate(i, j, t)];
  return a;
}

Element MatrixRing::from_entries(std::span<const Element> entries) const {
  if (entries.size() != n * n) {
    throw RingError(ErrorCode::DimensionMismatch,
                    "expected " + std::to_string(n * n) + " matrix entries");
  }
  Element m(ring.rank());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Element& a = entries[i * n + j];
      base.check_element(a);
      for (std::size_t t = 0; t < base.rank(); ++t) m[coordinate(i, j, t)] = a[t];
    }
  }
  return m;
}

Element MatrixRing::elementary(std::size_t i, std::size_t j,
                               const Element& a) const {
  base.check_element(a);
  Element m(ring.rank());
  for (std::size_t t = 0; t < base.rank(); ++t) m[coordinate(i, j, t)] = a[t];
  return m;
}

Element MatrixRing::scalar(const Element& c) const {
  Element m(ring.rank());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t t = 0; t < base.rank(); ++t) m[coordinate(i, i, t)] = c[t];
  }
  return m;
}

Element MatrixRing::transpose(const Element& m) const {
  Element out(ring.rank());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t t = 0; t < base.rank(); ++t) {
        out[coordinate(j, i, t)] = m[coordinate(i, j, t)];
      }
    }
  }
  return out;
}

namespace {

// Shared builder for full and upper-triangular matrix rings: `positions`
// lists the admitted (i, j) pairs, and the product of g_s E_ij with
// g_t E_jl is (g_s g_t) E_il.
FiniteRing matrix_like(const FiniteRing& base, std::size_t n,
                       const std::vector<std::pair<std::size_t, std::size_t>>& positions,
                       std::string name) {
  const std::size_t kb = base.rank();
  const std::size_t k = positions.size() * kb;
  auto slot = [&](std::size_t i, std::size_t j) {
    for (std::size_t s = 0; s < positions.size(); ++s) {
      if (positions[s] == std::pair{i, j}) return s;
    }
    return positions.size();
  };

  std::vector<std::uint32_t> orders;
  for (std::size_t s = 0; s < positions.size(); ++s) {
    for (std::uint32_t d : base.factor_orders()) orders.push_back(d);
  }

  std::vector<Element> table(k * k, zeros(k));
  for (std::size_t a = 0; a < positions.size(); ++a) {
    for (std::size_t b = 0; b < positions.size(); ++b) {
      const auto [i, j] = positions[a];
      const auto [j2, l] = positions[b];
      if (j != j2) continue;
      const std::size_t target = slot(i, l);
      for (std::size_t s = 0; s < kb; ++s) {
        for (std::size_t t = 0; t < kb; ++t) {
          const Element& p = base.structure_constant(s, t);
          Element& cell = table[(a * kb + s) * k + (b * kb + t)];
          for (std::size_t u = 0; u < kb; ++u) cell[target * kb + u] = p[u];
        }
      }
    }
  }

  Element unity(k);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t s = slot(i, i);
    for (std::size_t u = 0; u < kb; ++u) unity[s * kb + u] = base.unity()[u];
  }
  return make_ring(std::move(orders), std::move(table), unity, std::move(name));
}

}  // namespace

MatrixRing matrix_ring(const FiniteRing& base, std::size_t n) {
  if (n < 2) {
    throw RingError(ErrorCode::InvalidArgument, "matrix size must be >= 2");
  }
  checked_power(base.order(), n * n, "matrix ring");
  std::vector<std::pair<std::size_t, std::size_t>> positions;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) positions.emplace_back(i, j);
  }
  std::string name = "M" + std::to_string(n) + "(" + base.name() + ")";
  return {matrix_like(base, n, positions, std::move(name)), base, n};
}

FiniteRing upper_triangular_ring(const FiniteRing& base, std::size_t n) {
  if (n < 1) {
    throw RingError(ErrorCode::InvalidArgument, "matrix size must be >= 1");
  }
  checked_power(base.order(), n * (n + 1) / 2, "upper-triangular ring");
  std::vector<std::pair<std::size_t, std::size_t>> positions;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) positions.emplace_back(i, j);
  }
  return matrix_like(base, n, positions,
                     "UT" + std::to_string(n) + "(" + base.name() + ")");
}

FiniteRing direct_sum(const FiniteRing& left, const FiniteRing& right) {
  const std::size_t a = left.rank();
  const std::size_t b = right.rank();
  const std::size_t k = a + b;
  if (k > kMaxFactors) {
    throw RingError(ErrorCode::SizeLimitExceeded,
                    "direct sum would need " + std::to_string(k) +
                        " cyclic factors");
  }
  std::vector<std::uint32_t> orders(left.factor_orders().begin(),
                                    left.factor_orders().end());
  orders.insert(orders.end(), right.factor_orders().begin(),
                right.factor_orders().end());

  std::vector<Element> table(k * k, zeros(k));
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < a; ++j) {
      const Element& p = left.structure_constant(i, j);
      for (std::size_t t = 0; t < a; ++t) table[i * k + j][t] = p[t];
    }
  }
  for (std::size_t i = 0; i < b; ++i) {
    for (std::size_t j = 0; j < b; ++j) {
      const Element& p = right.structure_constant(i, j);
      for (std::size_t t = 0; t < b; ++t) table[(a + i) * k + a + j][a + t] = p[t];
    }
  }
  Element unity(k);
  for (std::size_t t = 0; t < a; ++t) unity[t] = left.unity()[t];
  for (std::size_t t = 0; t < b; ++t) unity[a + t] = right.unity()[t];
  return make_ring(std::move(orders), std::move(table), unity,
                   left.name() + "x" + right.name());
}

FiniteRing heisenberg_ring(std::uint32_t p) {
  if (p < 2) {
    throw RingError(ErrorCode::InvalidArgument,
                    "heisenberg ring needs p >= 2, got " + std::to_string(p));
  }
  checked_power(p, 4, "heisenberg ring");
  constexpr std::size_t kI = 0, kE12 = 1, kE23 = 2, kE13 = 3;
  std::vector<Element> table(16, zeros(4));
  for (std::size_t x = 0; x < 4; ++x) {
    table[kI * 4 + x] = unit_vector(4, x);
    table[x * 4 + kI] = unit_vector(4, x);
  }
  table[kE12 * 4 + kE23] = unit_vector(4, kE13);
  return make_ring({p, p, p, p}, std::move(table), unit_vector(4, kI),
                   "H3(Z" + std::to_string(p) + ")");
}

}  // namespace finring
