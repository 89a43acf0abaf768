#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "finring/ring.hpp"

namespace finring::lab {

// Skipped means the statement's hypothesis does not hold for the ring, so
// the conditional is vacuously true; it is never folded into Pass.
enum class Status { Pass, Fail, Skipped };

std::string_view to_string(Status status);

struct Check {
  std::string id;  // e.g. "lemma1.central"
  Status status = Status::Pass;
  std::vector<Element> witness;
  std::string detail;
};

// b^(q^r) = b^(q^s) with r < s and t = s - r, where q = p^n is the
// characteristic of the component containing b.
struct ExponentRecord {
  Element b;
  std::uint64_t r = 0;
  std::uint64_t s = 0;
  std::uint64_t t = 0;
};

struct ComponentTrace {
  std::string ring;
  std::uint64_t order = 0;
  std::uint64_t p = 0;
  std::uint32_t n = 0;
  std::uint64_t quotient_order = 0;  // |R/N|
  std::vector<ExponentRecord> exponents;
};

struct VerificationReport {
  std::string subject;
  std::uint64_t order = 0;
  std::string statement;  // lemma1, lemma2, lemma3, theorem1, jacobson, theorem2
  std::vector<Check> checks;
  std::vector<ComponentTrace> trace;
  std::vector<std::pair<std::string, std::string>> facts;

  // Fail if any check failed, otherwise Skipped if the hypothesis was
  // absent, otherwise Pass.
  Status status() const;
  const Check* first_with(Status status) const;
};

// For every idempotent e commuting with all nilpotents: e is central. Also
// replays (xe - exe)^2 = 0, (ex - exe)^2 = 0 and xe - exe = (xe - exe)e
// for every idempotent e and every x.
VerificationReport lemma1_check(const FiniteRing& ring);

// Hypothesis: the idempotents are exactly {0, 1}. Every element is then
// nilpotent or a unit, never both, and its eventual idempotent is 0 or 1.
VerificationReport lemma2_check(const FiniteRing& ring);

// Hypothesis: every commutator is central. Checks
// a b^i = b^i a + i c b^(i-1) with c = ab - ba for 1 <= i <= cap_i
// (default 2 * char), and b^(char) central when char is a prime power.
VerificationReport lemma3_check(const FiniteRing& ring,
                                std::optional<std::uint64_t> cap_i = {});

// Hypothesis: N is inside C. Asserts commutativity and replays the proof
// on every indecomposable component, recording the exponents per element.
VerificationReport theorem1_verify(const FiniteRing& ring);

// Hypothesis: every x has some n(x) > 1 with x^n(x) = x. Asserts
// commutativity and N = {0}.
VerificationReport jacobson_check(const FiniteRing& ring);

// In M_n(R): the centralizer of the nilpotents equals {cI : c central in R}
// and the center of M_n(R); replays the elimination against x E_1n.
VerificationReport theorem2_check(const FiniteRing& base, std::size_t n);

// A deliberately false claim ("every element is a unit") used to exercise
// failure reporting end to end. Fails on every nonzero ring with witness 0.
VerificationReport injected_fault_check(const FiniteRing& ring);

// Re-executes a failed check's witness through the ring primitives and
// reports whether the violated equation is reproduced.
bool witness_reproduces(const FiniteRing& ring, const Check& check);

}  // namespace finring::lab
