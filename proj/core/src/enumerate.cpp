#include "finring/enumerate.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <map>
#include <numeric>
#include <string>

#include "finring/decompose.hpp"
#include "finring/isomorphism.hpp"

namespace finring {

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::Constructed: return "constructed";
    case Provenance::Enumerated: return "enumerated";
    case Provenance::File: return "file";
  }
  return "?";
}

namespace {

void partitions(std::uint32_t n, std::uint32_t max_part,
                std::vector<std::uint32_t>& current,
                std::vector<std::vector<std::uint32_t>>& out) {
  if (n == 0) {
    out.push_back(current);
    return;
  }
  for (std::uint32_t part = std::min(n, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions(n - part, part, current, out);
    current.pop_back();
  }
}

// Backtracking search for generator-product tables on a fixed additive
// group with the unity at g_0.
class TableSearch {
 public:
  TableSearch(std::vector<std::uint32_t> orders,
              std::function<bool(const FiniteRing&)> on_ring)
      : orders_(std::move(orders)),
        k_(orders_.size()),
        table_(k_ * k_, Element(k_)),
        known_(k_ * k_, false),
        on_ring_(std::move(on_ring)) {
    for (std::size_t j = 0; j < k_; ++j) {
      table_[j] = unit(j);            // g_0 g_j = g_j
      table_[j * k_] = unit(j);       // g_j g_0 = g_j
      known_[j] = known_[j * k_] = true;
    }
    for (std::size_t i = 1; i < k_; ++i) {
      for (std::size_t j = 1; j < k_; ++j) pending_.emplace_back(i, j);
    }
    std::stable_sort(pending_.begin(), pending_.end(),
                     [](const auto& a, const auto& b) {
                       return std::max(a.first, a.second) <
                              std::max(b.first, b.second);
                     });
  }

  void run() { descend(0); }

 private:
  Element unit(std::size_t i) const {
    Element e(k_);
    e[i] = 1;
    return e;
  }

  // Values x with d_i x = d_j x = 0.
  std::vector<Element> candidates(std::size_t i, std::size_t j) const {
    const std::uint32_t g = std::gcd(orders_[i], orders_[j]);
    std::vector<Element> out{Element(k_)};
    for (std::size_t t = 0; t < k_; ++t) {
      const std::uint32_t step = orders_[t] / std::gcd(orders_[t], g);
      std::vector<Element> next;
      for (const Element& x : out) {
        for (std::uint32_t c = 0; c < orders_[t]; c += step) {
          Element y = x;
          y[t] = c;
          next.push_back(y);
        }
      }
      out = std::move(next);
    }
    return out;
  }

  // sum_m coeff_m * P[m][l] (right = true) or sum_m coeff_m * P[l][m].
  std::optional<Element> combine(const Element& coeff, std::size_t l,
                                 bool right) const {
    std::array<std::uint64_t, kMaxFactors> acc{};
    for (std::size_t m = 0; m < k_; ++m) {
      if (coeff[m] == 0) continue;
      const std::size_t cell = right ? m * k_ + l : l * k_ + m;
      if (!known_[cell]) return std::nullopt;
      const Element& p = table_[cell];
      for (std::size_t t = 0; t < k_; ++t) {
        acc[t] = (acc[t] + std::uint64_t{coeff[m]} * p[t]) % orders_[t];
      }
    }
    Element out(k_);
    for (std::size_t t = 0; t < k_; ++t) out[t] = static_cast<std::uint32_t>(acc[t]);
    return out;
  }

  bool associative_so_far() const {
    for (std::size_t i = 1; i < k_; ++i) {
      for (std::size_t j = 1; j < k_; ++j) {
        if (!known_[i * k_ + j]) continue;
        for (std::size_t l = 1; l < k_; ++l) {
          if (!known_[j * k_ + l]) continue;
          const auto lhs = combine(table_[i * k_ + j], l, /*right=*/true);
          if (!lhs) continue;
          const auto rhs = combine(table_[j * k_ + l], i, /*right=*/false);
          if (!rhs) continue;
          if (*lhs != *rhs) return false;
        }
      }
    }
    return true;
  }

  void descend(std::size_t depth) {
    if (stop_) return;
    if (depth == pending_.size()) {
      Element unity(k_);
      if (k_ > 0) unity[0] = 1;
      const FiniteRing ring = make_ring(orders_, table_, unity, "candidate");
      if (!on_ring_(ring)) stop_ = true;
      return;
    }
    const auto [i, j] = pending_[depth];
    const std::size_t cell = i * k_ + j;
    known_[cell] = true;
    for (const Element& x : candidates(i, j)) {
      table_[cell] = x;
      if (associative_so_far()) descend(depth + 1);
      if (stop_) break;
    }
    known_[cell] = false;
    table_[cell] = Element(k_);
  }

  std::vector<std::uint32_t> orders_;
  std::size_t k_;
  std::vector<Element> table_;
  std::vector<bool> known_;
  std::vector<std::pair<std::size_t, std::size_t>> pending_;
  std::function<bool(const FiniteRing&)> on_ring_;
  bool stop_ = false;
};

std::vector<std::uint32_t> encoding(const FiniteRing& ring) {
  std::vector<std::uint32_t> out(ring.factor_orders().begin(),
                                 ring.factor_orders().end());
  for (std::size_t i = 0; i < ring.rank(); ++i) {
    for (std::size_t j = 0; j < ring.rank(); ++j) {
      const auto c = ring.structure_constant(i, j).coords();
      out.insert(out.end(), c.begin(), c.end());
    }
  }
  return out;
}

}  // namespace

std::vector<std::vector<std::uint32_t>> abelian_group_types(std::uint64_t order) {
  if (order == 0) return {};
  std::vector<std::vector<std::uint32_t>> types{{}};
  for (const auto& [p, e] : factorize(order)) {
    std::vector<std::vector<std::uint32_t>> parts;
    std::vector<std::uint32_t> scratch;
    partitions(e, e, scratch, parts);
    std::vector<std::vector<std::uint32_t>> next;
    for (const auto& type : types) {
      for (const auto& lambda : parts) {
        std::vector<std::uint32_t> merged(std::max(type.size(), lambda.size()), 1);
        for (std::size_t i = 0; i < merged.size(); ++i) {
          std::uint32_t factor = 1;
          if (i < lambda.size()) {
            for (std::uint32_t c = 0; c < lambda[i]; ++c) {
              factor *= static_cast<std::uint32_t>(p);
            }
          }
          merged[i] = (i < type.size() ? type[i] : 1) * factor;
        }
        next.push_back(std::move(merged));
      }
    }
    types = std::move(next);
  }
  std::sort(types.begin(), types.end());
  return types;
}

Corpus enumerate_unital_rings(std::uint64_t order,
                              std::optional<std::size_t> max_results,
                              std::uint64_t limit) {
  if (order == 0 || order > limit) {
    throw RingError(ErrorCode::SizeLimitExceeded,
                    "enumeration supports orders 1.." + std::to_string(limit) +
                        ", got " + std::to_string(order));
  }
  std::vector<FiniteRing> reps;
  std::map<RingFingerprint, std::vector<std::size_t>> buckets;
  auto keep_going = [&] { return !max_results || reps.size() < *max_results; };

  for (const auto& type : abelian_group_types(order)) {
    if (!keep_going()) break;
    TableSearch search(type, [&](const FiniteRing& ring) {
      RingFingerprint fp = ring_fingerprint(ring);
      auto& bucket = buckets[fp];
      for (std::size_t r : bucket) {
        if (find_isomorphism(ring, reps[r])) return true;
      }
      bucket.push_back(reps.size());
      reps.push_back(ring);
      return keep_going();
    });
    search.run();
  }

  std::sort(reps.begin(), reps.end(),
            [](const FiniteRing& a, const FiniteRing& b) {
              return encoding(a) < encoding(b);
            });
  const std::size_t width = std::to_string(reps.size()).size();
  Corpus corpus;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    std::string idx = std::to_string(i + 1);
    idx.insert(0, width - idx.size(), '0');
    corpus.push_back({reps[i].renamed("R" + std::to_string(order) + "_" + idx),
                      Provenance::Enumerated});
  }
  return corpus;
}

CorpusReport corpus_verify(const Corpus& corpus) {
  CorpusReport out;
  for (const CorpusEntry& entry : corpus) {
    const FiniteRing& r = entry.ring;
    out.reports.push_back(lab::lemma1_check(r));
    out.reports.push_back(lab::lemma2_check(r));
    out.reports.push_back(lab::lemma3_check(r));
    out.reports.push_back(lab::theorem1_verify(r));
    out.reports.push_back(lab::jacobson_check(r));
    if (r.order() * r.order() * r.order() * r.order() <= kScanLimit) {
      out.reports.push_back(lab::theorem2_check(r, 2));
    }
  }
  for (const auto& rep : out.reports) {
    switch (rep.status()) {
      case lab::Status::Pass: ++out.passed; break;
      case lab::Status::Fail: ++out.failed; break;
      case lab::Status::Skipped: ++out.skipped; break;
    }
  }
  return out;
}

}  // namespace finring
