#include "finring/lab.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <unordered_map>

#include "finring/constructors.hpp"
#include "finring/decompose.hpp"
#include "finring/structure.hpp"

namespace finring::lab {

std::string_view to_string(Status status) {
  switch (status) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Skipped: return "SKIP";
  }
  return "?";
}

Status VerificationReport::status() const {
  if (first_with(Status::Fail)) return Status::Fail;
  if (first_with(Status::Skipped)) return Status::Skipped;
  return Status::Pass;
}

const Check* VerificationReport::first_with(Status wanted) const {
  for (const Check& c : checks) {
    if (c.status == wanted) return &c;
  }
  return nullptr;
}

namespace {

VerificationReport start(const FiniteRing& ring, std::string statement) {
  VerificationReport r;
  r.subject = ring.name();
  r.order = ring.order();
  r.statement = std::move(statement);
  return r;
}

// Accumulates one check: the first violation is kept as witness.
class CheckBuilder {
 public:
  explicit CheckBuilder(std::string id) { check_.id = std::move(id); }

  bool failed() const { return check_.status == Status::Fail; }
  void fail(std::vector<Element> witness, std::string detail) {
    if (failed()) return;
    check_.status = Status::Fail;
    check_.witness = std::move(witness);
    check_.detail = std::move(detail);
  }
  void note(std::string detail) {
    if (!failed()) check_.detail = std::move(detail);
  }
  Check done() { return std::move(check_); }

 private:
  Check check_;
};

Check skipped(std::string id, std::vector<Element> witness, std::string detail) {
  return {std::move(id), Status::Skipped, std::move(witness), std::move(detail)};
}

bool commutes_with_all(const FiniteRing& ring, const Element& e,
                       const ElementSet& set) {
  return std::all_of(set.begin(), set.end(), [&](const Element& b) {
    return ring.mul(e, b) == ring.mul(b, e);
  });
}

// First generator not commuting with x.
std::optional<Element> noncommuting_generator(const FiniteRing& ring,
                                              const Element& x) {
  for (std::size_t i = 0; i < ring.rank(); ++i) {
    const Element g = ring.generator(i);
    if (ring.mul(x, g) != ring.mul(g, x)) return g;
  }
  return std::nullopt;
}

// b^(q^m) by repeated q-th powers.
Element iterated_power(const FiniteRing& ring, const Element& b,
                       std::uint64_t q, std::uint64_t m) {
  Element x = b;
  for (std::uint64_t i = 0; i < m; ++i) x = ring.pow(x, q);
  return x;
}

// (a b^i) versus (b^i a + i c b^(i-1)) with c = ab - ba.
bool lemma3_identity_holds(const FiniteRing& ring, const Element& a,
                           const Element& b, std::uint64_t i) {
  const Element c = commutator(ring, a, b);
  const Element bi = ring.pow(b, i);
  const Element lhs = ring.mul(a, bi);
  const Element correction =
      i == 1 ? c
             : ring.mul(ring.scale(static_cast<std::int64_t>(i), c),
                        ring.pow(b, i - 1));
  return lhs == ring.add(ring.mul(bi, a), correction);
}

std::optional<std::uint64_t> parse_field(std::string_view detail,
                                         std::string_view key) {
  const auto pos = detail.find(key);
  if (pos == std::string_view::npos) return std::nullopt;
  const char* first = detail.data() + pos + key.size();
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(first, detail.data() + detail.size(), value);
  if (ec != std::errc{}) return std::nullopt;
  return value;
}

bool same_set(const ElementSet& a, const ElementSet& b) { return a == b; }

}  // namespace

VerificationReport lemma1_check(const FiniteRing& ring) {
  VerificationReport report = start(ring, "lemma1");
  const ElementSet nil = nilpotents(ring);
  const ElementSet idem = idempotents(ring);

  CheckBuilder identity("lemma1.identity");
  CheckBuilder central("lemma1.central");
  std::size_t exempt = 0;
  for (const Element& e : idem) {
    for (const Element& x : elements(ring)) {
      const Element exe = ring.mul(ring.mul(e, x), e);
      const Element u = ring.sub(ring.mul(x, e), exe);
      const Element v = ring.sub(ring.mul(e, x), exe);
      if (!ring.mul(u, u).is_zero() || !ring.mul(v, v).is_zero() ||
          ring.mul(u, e) != u) {
        identity.fail({e, x}, "e=" + e.to_string() + " x=" + x.to_string());
      }
    }
    if (!commutes_with_all(ring, e, nil)) {
      ++exempt;
      continue;
    }
    if (auto g = noncommuting_generator(ring, e)) {
      central.fail({e, *g}, "idempotent " + e.to_string() +
                                " commutes with N but not with " +
                                g->to_string());
    }
  }
  identity.note(std::to_string(idem.size()) + " idempotents x " +
                std::to_string(ring.order()) + " elements");
  central.note(std::to_string(idem.size() - exempt) +
               " idempotents commute with N, " + std::to_string(exempt) +
               " exempt");
  report.checks.push_back(identity.done());
  report.checks.push_back(central.done());
  report.facts.emplace_back("n_nilpotents", std::to_string(nil.size()));
  report.facts.emplace_back("n_idempotents", std::to_string(idem.size()));
  return report;
}

VerificationReport lemma2_check(const FiniteRing& ring) {
  VerificationReport report = start(ring, "lemma2");
  const ElementSet idem = idempotents(ring);
  for (const Element& e : idem) {
    if (!e.is_zero() && e != ring.unity()) {
      report.checks.push_back(skipped(
          "lemma2.hypothesis", {e},
          "nontrivial idempotent " + e.to_string()));
      return report;
    }
  }

  CheckBuilder dichotomy("lemma2.dichotomy");
  CheckBuilder eventual("lemma2.eventual_idempotent");
  std::uint64_t n_nil = 0, n_unit = 0;
  for (const Element& x : elements(ring)) {
    const PowerCycle pc = power_cycle(ring, x);
    const bool nil = pc.eventual_idempotent.is_zero();
    const bool unit = is_unit(ring, x).is_unit;
    n_nil += nil;
    n_unit += unit;
    // In the zero ring 0 = 1 is both; the lemma concerns nonzero rings.
    if (ring.order() > 1 && nil == unit) {
      dichotomy.fail({x}, x.to_string() + (nil ? " is both nilpotent and a unit"
                                               : " is neither nilpotent nor a unit"));
    }
    if (!pc.eventual_idempotent.is_zero() &&
        pc.eventual_idempotent != ring.unity()) {
      eventual.fail({x}, "eventual idempotent of " + x.to_string() + " is " +
                             pc.eventual_idempotent.to_string());
    }
  }
  dichotomy.note("|N|=" + std::to_string(n_nil) +
                 " |U|=" + std::to_string(n_unit));
  report.checks.push_back(dichotomy.done());
  report.checks.push_back(eventual.done());
  report.facts.emplace_back("n_nilpotents", std::to_string(n_nil));
  report.facts.emplace_back("n_units", std::to_string(n_unit));
  return report;
}

VerificationReport lemma3_check(const FiniteRing& ring,
                                std::optional<std::uint64_t> cap_i) {
  VerificationReport report = start(ring, "lemma3");
  require_order_at_most(ring, kScanLimit, "lemma3_check");
  const std::uint64_t ch = characteristic(ring);
  const std::uint64_t cap = cap_i.value_or(2 * ch);

  for (const Element& a : elements(ring)) {
    for (std::size_t i = 0; i < ring.rank(); ++i) {
      const Element g = ring.generator(i);
      const Element c = commutator(ring, a, g);
      if (!is_central(ring, c)) {
        report.checks.push_back(skipped(
            "lemma3.hypothesis", {a, g},
            "commutator [" + a.to_string() + "," + g.to_string() +
                "] = " + c.to_string() + " is not central"));
        return report;
      }
    }
  }

  CheckBuilder identity("lemma3.identity");
  for (const Element& a : elements(ring)) {
    for (const Element& b : elements(ring)) {
      for (std::uint64_t i = 1; i <= cap && !identity.failed(); ++i) {
        if (!lemma3_identity_holds(ring, a, b, i)) {
          identity.fail({a, b}, "i=" + std::to_string(i));
        }
      }
    }
  }
  identity.note("1 <= i <= " + std::to_string(cap));
  report.checks.push_back(identity.done());

  const auto factors = factorize(ch);
  if (factors.size() != 1) {
    report.checks.push_back(skipped(
        "lemma3.power_central", {},
        std::string(finring::to_string(ErrorCode::NotPrimePowerCharacteristic)) +
            " char=" + std::to_string(ch)));
    return report;
  }
  CheckBuilder power("lemma3.power_central");
  for (const Element& b : elements(ring)) {
    const Element bq = ring.pow(b, ch);
    if (!is_central(ring, bq)) {
      power.fail({b}, "q=" + std::to_string(ch) + " b^q=" + bq.to_string());
    }
  }
  power.note("q=" + std::to_string(ch));
  report.checks.push_back(power.done());
  return report;
}

namespace {

void replay_component(const FiniteRing& comp, VerificationReport& report) {
  const std::string where = "component " + comp.name() + ": ";
  const ElementSet nil = nilpotents(comp);
  const ElementSet cen = center(comp);
  ComponentTrace trace;
  trace.ring = comp.name();
  trace.order = comp.order();

  {
    CheckBuilder c("theorem1.no_idempotents");
    for (const Element& e : idempotents(comp)) {
      if (!e.is_zero() && e != comp.unity()) {
        c.fail({e}, where + "nontrivial idempotent " + e.to_string());
      }
    }
    c.note(where + "idempotents are {0,1}");
    report.checks.push_back(c.done());
  }

  const std::uint64_t ch = characteristic(comp);
  const auto factors = factorize(ch);
  {
    CheckBuilder c("theorem1.prime_power_char");
    if (factors.size() != 1) {
      c.fail({comp.unity()}, where + "char " + std::to_string(ch) +
                                 " is not a prime power");
    } else {
      trace.p = factors.front().first;
      trace.n = factors.front().second;
      c.note(where + "char=" + std::to_string(ch) + "=" +
             std::to_string(trace.p) + "^" + std::to_string(trace.n));
    }
    report.checks.push_back(c.done());
    if (c.failed()) {
      report.trace.push_back(std::move(trace));
      return;
    }
  }

  {
    CheckBuilder c("theorem1.nil_ideal");
    const Ideal gen = ideal_generated(comp, nil);
    for (const Element& x : gen.members) {
      if (!contains(nil, x)) {
        c.fail({x}, where + x.to_string() + " is in the ideal generated by N");
        break;
      }
    }
    c.note(where + "|N|=" + std::to_string(nil.size()));
    report.checks.push_back(c.done());
  }

  {
    CheckBuilder c("theorem1.quotient_field");
    const Quotient q = quotient(comp, Ideal{nil});
    trace.quotient_order = q.ring.order();
    if (!is_field(q.ring)) {
      // The first representative whose coset is a nonzero non-unit.
      for (const Element& y : elements(q.ring)) {
        if (!y.is_zero() && !is_unit(q.ring, y).is_unit) {
          c.fail({q.representatives[q.ring.index_of(y)]},
                 where + "coset of the witness is not invertible in R/N");
          break;
        }
      }
      c.fail({}, where + "R/N is not a field");
    }
    c.note(where + "R/N is a field of order " +
           std::to_string(q.ring.order()));
    report.checks.push_back(c.done());
  }

  {
    CheckBuilder c("theorem1.commutators_nil");
    for (const Element& x : nil) {
      if (auto g = noncommuting_generator(comp, x)) {
        c.fail({x, *g}, where + "nilpotent not central");
        break;
      }
    }
    for (const Element& x : elements(comp)) {
      if (c.failed()) break;
      for (std::size_t i = 0; i < comp.rank(); ++i) {
        const Element g = comp.generator(i);
        if (!contains(nil, commutator(comp, x, g))) {
          c.fail({x, g}, where + "commutator is not nilpotent");
          break;
        }
      }
    }
    c.note(where + "[R,R] in N in C");
    report.checks.push_back(c.done());
  }

  {
    CheckBuilder exps("theorem1.exponents");
    CheckBuilder all_central("theorem1.center_is_everything");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < trace.n; ++i) q *= trace.p;
    const std::string qs = "q=" + std::to_string(q);
    for (const Element& b : elements(comp)) {
      // b_i = b^(q^i) for i >= 1; pigeonhole bounds the search by |R| + 1.
      std::unordered_map<std::uint64_t, std::uint64_t> first_seen;
      Element cur = b;
      ExponentRecord rec{b, 0, 0, 0};
      for (std::uint64_t i = 1; i <= comp.order() + 1; ++i) {
        cur = comp.pow(cur, q);
        auto [it, fresh] = first_seen.emplace(comp.index_of(cur), i);
        if (!fresh) {
          rec.r = it->second;
          rec.s = i;
          rec.t = rec.s - rec.r;
          break;
        }
      }
      if (rec.t == 0) {
        exps.fail({b}, where + qs + " no repetition found");
        continue;
      }
      const Element bt = iterated_power(comp, b, q, rec.t);
      if (!contains(nil, comp.sub(bt, b))) {
        exps.fail({b}, where + qs + " t=" + std::to_string(rec.t) +
                           " b^(q^t)-b is not nilpotent");
      } else if (!is_central(comp, bt)) {
        exps.fail({b}, where + qs + " t=" + std::to_string(rec.t) +
                           " b^(q^t) is not central");
      }
      // b = b^(q^t) - (b^(q^t) - b) with both terms central.
      if (!contains(cen, b)) all_central.fail({b}, where + "not central");
      trace.exponents.push_back(std::move(rec));
    }
    exps.note(where + qs);
    all_central.note(where + "|C|=|R|=" + std::to_string(comp.order()));
    report.checks.push_back(exps.done());
    report.checks.push_back(all_central.done());
  }
  report.trace.push_back(std::move(trace));
}

}  // namespace

VerificationReport theorem1_verify(const FiniteRing& ring) {
  VerificationReport report = start(ring, "theorem1");
  const ElementSet nil = nilpotents(ring);
  const ElementSet cen = center(ring);
  for (const Element& x : nil) {
    if (!contains(cen, x)) {
      report.checks.push_back(skipped("theorem1.hypothesis", {x},
                                      "nilpotent " + x.to_string() +
                                          " is not central"));
      return report;
    }
  }

  CheckBuilder comm("theorem1.commutative");
  for (std::size_t i = 0; i < ring.rank() && !comm.failed(); ++i) {
    for (std::size_t j = i + 1; j < ring.rank(); ++j) {
      const Element gi = ring.generator(i);
      const Element gj = ring.generator(j);
      if (ring.mul(gi, gj) != ring.mul(gj, gi)) {
        comm.fail({gi, gj}, "generators do not commute");
        break;
      }
    }
  }
  report.checks.push_back(comm.done());

  const DecompositionTree tree = indecomposable_components(ring);
  const auto leaves = tree.leaves();
  report.facts.emplace_back("components", std::to_string(leaves.size()));
  for (const FiniteRing& leaf : leaves) replay_component(leaf, report);
  return report;
}

VerificationReport jacobson_check(const FiniteRing& ring) {
  VerificationReport report = start(ring, "jacobson");
  require_order_at_most(ring, kScanLimit, "jacobson_check");
  std::uint64_t uniform = 1;
  for (const Element& x : elements(ring)) {
    const PowerCycle pc = power_cycle(ring, x);
    // x^n = x with n > 1 iff x lies on its own cycle; minimal n = cycle + 1.
    if (pc.tail_length != 0) {
      report.checks.push_back(skipped(
          "jacobson.hypothesis", {x},
          x.to_string() + " has no n > 1 with x^n = x"));
      return report;
    }
    uniform = std::lcm(uniform, pc.cycle_length);
  }
  report.facts.emplace_back("uniform_n", std::to_string(uniform + 1));

  CheckBuilder comm("jacobson.commutative");
  for (std::size_t i = 0; i < ring.rank() && !comm.failed(); ++i) {
    for (std::size_t j = i + 1; j < ring.rank(); ++j) {
      const Element gi = ring.generator(i);
      const Element gj = ring.generator(j);
      if (ring.mul(gi, gj) != ring.mul(gj, gi)) {
        comm.fail({gi, gj}, "generators do not commute");
        break;
      }
    }
  }
  comm.note("x^" + std::to_string(uniform + 1) + " = x for all x");
  report.checks.push_back(comm.done());

  CheckBuilder reduced("jacobson.reduced");
  for (const Element& x : nilpotents(ring)) {
    if (!x.is_zero()) reduced.fail({x}, "nonzero nilpotent");
  }
  reduced.note("N = {0}");
  report.checks.push_back(reduced.done());
  return report;
}

VerificationReport theorem2_check(const FiniteRing& base, std::size_t n) {
  const MatrixRing m = matrix_ring(base, n);
  VerificationReport report = start(m.ring, "theorem2");
  report.subject = base.name() + " n=" + std::to_string(n);

  const ElementSet nil = nilpotents(m.ring);
  ElementSet centralizer;
  for (const Element& a : elements(m.ring)) {
    if (commutes_with_all(m.ring, a, nil)) centralizer.push_back(a);
  }
  ElementSet scalars;
  for (const Element& c : center(base)) scalars.push_back(m.scalar(c));
  std::sort(scalars.begin(), scalars.end());

  report.facts.emplace_back("n_nilpotents", std::to_string(nil.size()));
  report.facts.emplace_back("n_centralizer", std::to_string(centralizer.size()));

  {
    CheckBuilder c("theorem2.centralizer");
    if (!same_set(centralizer, scalars)) {
      for (const Element& a : centralizer) {
        if (!contains(scalars, a)) {
          c.fail({a}, "commutes with every nilpotent but is not a central scalar");
          break;
        }
      }
      for (const Element& a : scalars) {
        if (!contains(centralizer, a)) {
          c.fail({a}, "central scalar misses a nilpotent");
          break;
        }
      }
    }
    c.note("|Z|=" + std::to_string(centralizer.size()) + " |N|=" +
           std::to_string(nil.size()));
    report.checks.push_back(c.done());
  }
  {
    CheckBuilder c("theorem2.center");
    if (!same_set(center(m.ring), scalars)) {
      c.fail({}, "center of M_n(R) differs from the central scalars");
    }
    report.checks.push_back(c.done());
  }
  {
    // A commuting with every x E_1n: last row and first column vanish off
    // the corners, a_11 x = x a_nn, and a_11 = a_nn is central in R.
    CheckBuilder c("theorem2.elimination");
    std::vector<Element> probes;
    for (const Element& x : elements(base)) probes.push_back(m.elementary(0, n - 1, x));
    const Element zero = base.zero();
    for (const Element& a : elements(m.ring)) {
      if (!commutes_with_all(m.ring, a, probes)) continue;
      for (std::size_t j = 0; j + 1 < n; ++j) {
        if (m.entry(a, n - 1, j) != zero) c.fail({a}, "a_n" + std::to_string(j + 1) + " != 0");
      }
      for (std::size_t i = 1; i < n; ++i) {
        if (m.entry(a, i, 0) != zero) c.fail({a}, "a_" + std::to_string(i + 1) + "1 != 0");
      }
      const Element a11 = m.entry(a, 0, 0);
      const Element ann = m.entry(a, n - 1, n - 1);
      for (const Element& x : elements(base)) {
        if (base.mul(a11, x) != base.mul(x, ann)) c.fail({a}, "a_11 x != x a_nn");
      }
      if (a11 != ann || !is_central(base, a11)) c.fail({a}, "a_11 not a central a_nn");
    }
    report.checks.push_back(c.done());
  }
  {
    CheckBuilder c("theorem2.transpose");
    for (const Element& a : centralizer) {
      if (!commutes_with_all(m.ring, m.transpose(a), nil)) {
        c.fail({a}, "transpose leaves the centralizer");
      }
    }
    report.checks.push_back(c.done());
  }
  return report;
}

VerificationReport injected_fault_check(const FiniteRing& ring) {
  VerificationReport report = start(ring, "fault");
  CheckBuilder c("fault.every_element_unit");
  for (const Element& x : elements(ring)) {
    if (!is_unit(ring, x).is_unit) {
      c.fail({x}, x.to_string() + " is not a unit");
      break;
    }
  }
  report.checks.push_back(c.done());
  return report;
}

bool witness_reproduces(const FiniteRing& ring, const Check& check) {
  const auto& w = check.witness;
  for (const Element& x : w) {
    if (!ring.contains(x)) return false;
  }
  const std::string& id = check.id;
  auto arity = [&](std::size_t k) { return w.size() == k; };

  if (id == "lemma1.identity" && arity(2)) {
    const Element& e = w[0];
    const Element& x = w[1];
    if (!is_idempotent(ring, e)) return false;
    const Element exe = ring.mul(ring.mul(e, x), e);
    const Element u = ring.sub(ring.mul(x, e), exe);
    const Element v = ring.sub(ring.mul(e, x), exe);
    return !ring.mul(u, u).is_zero() || !ring.mul(v, v).is_zero() ||
           ring.mul(u, e) != u;
  }
  if (id == "lemma1.central" && arity(2)) {
    const Element& e = w[0];
    return is_idempotent(ring, e) &&
           commutes_with_all(ring, e, nilpotents(ring)) &&
           ring.mul(e, w[1]) != ring.mul(w[1], e);
  }
  if (id == "lemma2.dichotomy" && arity(1)) {
    return is_nilpotent(ring, w[0]) == is_unit(ring, w[0]).is_unit;
  }
  if (id == "lemma2.eventual_idempotent" && arity(1)) {
    const Element e = power_cycle(ring, w[0]).eventual_idempotent;
    return !e.is_zero() && e != ring.unity();
  }
  if (id == "lemma3.identity" && arity(2)) {
    const auto i = parse_field(check.detail, "i=");
    return i && *i >= 1 && !lemma3_identity_holds(ring, w[0], w[1], *i);
  }
  if ((id == "lemma3.power_central" || id == "theorem1.exponents") && arity(1)) {
    const auto q = parse_field(check.detail, "q=");
    if (!q) return false;
    if (id == "lemma3.power_central") return !is_central(ring, ring.pow(w[0], *q));
    const auto t = parse_field(check.detail, "t=");
    if (!t) return true;  // no repetition: cannot happen in a finite ring
    const Element bt = iterated_power(ring, w[0], *q, *t);
    return !is_nilpotent(ring, ring.sub(bt, w[0])) || !is_central(ring, bt);
  }
  if ((id == "theorem1.commutative" || id == "jacobson.commutative" ||
       id == "theorem1.commutators_nil") &&
      arity(2)) {
    if (id == "theorem1.commutators_nil") {
      return (is_nilpotent(ring, w[0]) &&
              ring.mul(w[0], w[1]) != ring.mul(w[1], w[0])) ||
             !is_nilpotent(ring, commutator(ring, w[0], w[1]));
    }
    return ring.mul(w[0], w[1]) != ring.mul(w[1], w[0]);
  }
  if (id == "theorem1.no_idempotents" && arity(1)) {
    return is_idempotent(ring, w[0]) && !w[0].is_zero() && w[0] != ring.unity();
  }
  if (id == "theorem1.center_is_everything" && arity(1)) {
    return !is_central(ring, w[0]);
  }
  if (id == "theorem1.nil_ideal" && arity(1)) {
    return !is_nilpotent(ring, w[0]) &&
           ideal_generated(ring, nilpotents(ring)).contains(w[0]);
  }
  if (id == "jacobson.reduced" && arity(1)) {
    return !w[0].is_zero() && is_nilpotent(ring, w[0]);
  }
  if (id == "fault.every_element_unit" && arity(1)) {
    return !is_unit(ring, w[0]).is_unit;
  }
  return false;
}

}  // namespace finring::lab
