#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "finring/lab.hpp"
#include "finring/ring.hpp"

namespace finring {

enum class Provenance { Constructed, Enumerated, File };

std::string_view to_string(Provenance p);

struct CorpusEntry {
  FiniteRing ring;
  Provenance provenance = Provenance::Constructed;
};

using Corpus = std::vector<CorpusEntry>;

inline constexpr std::uint64_t kEnumerationLimit = 16;

// Invariant-factor types of the abelian groups of the given order:
// d_0 >= d_1 >= ... with d_{i+1} | d_i and product `order`.
std::vector<std::vector<std::uint32_t>> abelian_group_types(std::uint64_t order);

// Every unital ring of the given order up to isomorphism, sorted by the
// canonical encoding (factor orders, then the generator-product table) and
// named R<order>_<position>. Each additive group is searched with the unity
// placed on the first invariant factor, which is always possible since an
// element of maximal order spans a direct summand. Associativity is pruned
// on generator triples as soon as their products are determined, and the
// results are deduplicated by fingerprint bucketing plus find_isomorphism.
// `max_results` stops the search after that many isomorphism classes.
Corpus enumerate_unital_rings(std::uint64_t order,
                              std::optional<std::size_t> max_results = {},
                              std::uint64_t limit = kEnumerationLimit);

struct CorpusReport {
  std::vector<lab::VerificationReport> reports;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
};

// Runs lemma1/lemma2/lemma3/theorem1/jacobson on every ring, and
// theorem2 with n = 2 where |R|^4 fits the scan limit. Reports are in
// corpus order; failures never stop the run.
CorpusReport corpus_verify(const Corpus& corpus);

}  // namespace finring
