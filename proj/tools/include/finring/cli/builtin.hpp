#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "finring/ring.hpp"

namespace finring::cli {

// Builtin ring expressions, as a token list:
//
//   zmod <m>                       | zmod<m>
//   heisenberg <p>                 | heisenberg<p>
//   polyquot <p> <c_0> ... <c_k>   | polyquot<p>:<c_0>,...,<c_k>
//   matrix <builtin> <n>
//   triangular <builtin> <n>
//   dsum <builtin> <builtin>
//
// Polynomial coefficients run from the constant term up. The spaced
// polyquot form consumes all remaining tokens, so nested polynomial rings
// must use the compact form: `matrix polyquot2:1,1,1 2`.
//
// Throws UnknownBuiltin on grammar errors; constructor errors propagate.
FiniteRing build_builtin(const std::vector<std::string>& tokens);

// Splits on whitespace and parses.
FiniteRing build_builtin(std::string_view expression);

}  // namespace finring::cli
