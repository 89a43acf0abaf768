#include "finring/cli/builtin.hpp"

#include <charconv>
#include <sstream>

#include "finring/constructors.hpp"

namespace finring::cli {

namespace {

[[noreturn]] void unknown(const std::string& why) {
  throw RingError(ErrorCode::UnknownBuiltin, why);
}

std::int64_t integer(std::string_view tok) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    unknown("expected an integer, got '" + std::string(tok) + "'");
  }
  return v;
}

std::uint32_t positive(std::string_view tok) {
  const std::int64_t v = integer(tok);
  if (v < 0 || v > 0x7fffffff) unknown("value out of range: " + std::string(tok));
  return static_cast<std::uint32_t>(v);
}

bool starts_with(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

class Parser {
 public:
  explicit Parser(const std::vector<std::string>& tokens) : toks_(tokens) {}

  FiniteRing parse_all() {
    FiniteRing r = parse(/*top_level=*/true);
    if (pos_ != toks_.size()) unknown("unexpected token '" + toks_[pos_] + "'");
    return r;
  }

 private:
  const std::string& next(std::string_view what) {
    if (pos_ >= toks_.size()) unknown("missing " + std::string(what));
    return toks_[pos_++];
  }

  FiniteRing parse(bool top_level) {
    const std::string head = next("builtin name");
    if (head == "zmod") return cyclic_ring(positive(next("modulus")));
    if (head == "heisenberg") return heisenberg_ring(positive(next("prime")));
    if (head == "matrix" || head == "triangular") {
      const FiniteRing base = parse(false);
      const std::uint32_t n = positive(next("matrix size"));
      return head == "matrix" ? matrix_ring(base, n).ring
                              : upper_triangular_ring(base, n);
    }
    if (head == "dsum") {
      const FiniteRing left = parse(false);
      const FiniteRing right = parse(false);
      return direct_sum(left, right);
    }
    if (head == "polyquot") {
      if (!top_level) unknown("nested polyquot must use polyquot<p>:<coefficients>");
      const std::uint32_t p = positive(next("prime"));
      std::vector<std::int64_t> coeffs;
      while (pos_ < toks_.size()) coeffs.push_back(integer(toks_[pos_++]));
      return poly_quotient(p, coeffs);
    }
    if (starts_with(head, "polyquot")) {
      const std::string_view rest = std::string_view(head).substr(8);
      const auto colon = rest.find(':');
      if (colon == std::string_view::npos) unknown("expected polyquot<p>:<coefficients>");
      const std::uint32_t p = positive(rest.substr(0, colon));
      std::vector<std::int64_t> coeffs;
      std::string_view list = rest.substr(colon + 1);
      while (!list.empty()) {
        const auto comma = list.find(',');
        coeffs.push_back(integer(list.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        list = list.substr(comma + 1);
      }
      return poly_quotient(p, coeffs);
    }
    if (starts_with(head, "zmod") && head.size() > 4) {
      return cyclic_ring(positive(std::string_view(head).substr(4)));
    }
    if (starts_with(head, "heisenberg") && head.size() > 10) {
      return heisenberg_ring(positive(std::string_view(head).substr(10)));
    }
    unknown("unknown builtin '" + head + "'");
  }

  const std::vector<std::string>& toks_;
  std::size_t pos_ = 0;
};

}  // namespace

FiniteRing build_builtin(const std::vector<std::string>& tokens) {
  return Parser(tokens).parse_all();
}

FiniteRing build_builtin(std::string_view expression) {
  std::istringstream in{std::string(expression)};
  std::vector<std::string> tokens;
  for (std::string t; in >> t;) tokens.push_back(t);
  return build_builtin(tokens);
}

}  // namespace finring::cli
