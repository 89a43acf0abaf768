#include "finring/cli/commands.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "finring/cli/builtin.hpp"
#include "finring/cli/ring_spec.hpp"
#include "finring/decompose.hpp"
#include "finring/enumerate.hpp"
#include "finring/isomorphism.hpp"
#include "finring/lab.hpp"
#include "finring/structure.hpp"

namespace finring::cli {

namespace {

constexpr std::uint64_t kListingLimit = 64;

const char* boolean(bool b) { return b ? "true" : "false"; }

std::string listing(const ElementSet& set) {
  std::string out;
  for (const Element& x : set) {
    out += ' ';
    out += x.to_string();
  }
  return out;
}

std::string read_all(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void print_status_line(std::ostream& out, const lab::VerificationReport& rep,
                       const std::string& ring, const std::string& statement,
                       bool verbose) {
  const lab::Status status = rep.status();
  out << lab::to_string(status) << ' ' << ring << ' ' << statement;
  if (status != lab::Status::Pass) {
    const lab::Check* c = rep.first_with(status);
    for (const Element& w : c->witness) out << ' ' << w.to_string();
  }
  out << '\n';
  if (verbose) {
    for (const lab::Check& c : rep.checks) {
      out << "  " << lab::to_string(c.status) << ' ' << c.id;
      if (!c.detail.empty()) out << ": " << c.detail;
      out << '\n';
    }
  }
}

// Uniform error reporting: every library and parse error is an input error.
template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const RingError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

std::string summary(const FiniteRing& ring, const StructureReport& rep) {
  std::ostringstream s;
  s << "order=" << rep.order << " characteristic=" << rep.characteristic
    << " n_nilpotents=" << rep.nilpotents.size()
    << " n_center=" << rep.center.size()
    << " n_idempotents=" << rep.idempotents.size()
    << " n_units=" << rep.units.size()
    << " commutative=" << boolean(rep.is_commutative)
    << " nilpotents_central=" << boolean(rep.nilpotents_central);
  (void)ring;
  return s.str();
}

void print_tree(std::ostream& out, const DecompositionTree& node,
                const std::string& tag, int depth) {
  out << std::string(2 * depth, ' ');
  if (!tag.empty()) out << tag << ": ";
  out << node.ring.name() << " order=" << node.ring.order()
      << " characteristic=" << characteristic(node.ring);
  if (node.is_leaf()) out << " leaf";
  out << '\n';
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    print_tree(out, node.children[i], node.tags[i], depth + 1);
  }
}

}  // namespace

FiniteRing load_ring(const RingSource& source, std::istream& in) {
  std::string text;
  if (!source.builtin.empty()) {
    text = emit_ring_spec(build_builtin(std::string_view(source.builtin)));
  } else if (source.path == "-") {
    text = read_all(in);
  } else {
    std::ifstream file(source.path);
    if (!file) {
      throw RingError(ErrorCode::InvalidArgument,
                      "cannot open '" + source.path + "'");
    }
    text = read_all(file);
  }
  return to_ring(parse_ring_spec(text));
}

int cmd_analyze(const AnalyzeOptions& options, std::istream& in,
                std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const FiniteRing ring = load_ring(options.source, in);
    const StructureReport rep = structure_report(ring);
    if (options.machine) {
      out << "ring=" << ring.name() << '\n'
          << "order=" << rep.order << '\n'
          << "characteristic=" << rep.characteristic << '\n'
          << "n_nilpotents=" << rep.nilpotents.size() << '\n'
          << "n_center=" << rep.center.size() << '\n'
          << "n_idempotents=" << rep.idempotents.size() << '\n'
          << "n_units=" << rep.units.size() << '\n'
          << "commutative=" << boolean(rep.is_commutative) << '\n'
          << "nilpotents_central=" << boolean(rep.nilpotents_central) << '\n';
      return kExitOk;
    }
    out << "ring " << ring.name() << '\n' << summary(ring, rep) << '\n';
    if (ring.order() <= kListingLimit) {
      out << "nilpotents:" << listing(rep.nilpotents) << '\n'
          << "center:" << listing(rep.center) << '\n'
          << "idempotents:" << listing(rep.idempotents) << '\n'
          << "units:" << listing(rep.units) << '\n'
          << "commutators:" << listing(rep.commutators) << '\n'
          << "commutator_ideal:" << listing(rep.commutator_ideal.members) << '\n';
    }
    return kExitOk;
  });
}

int cmd_builtin(const std::vector<std::string>& tokens, std::ostream& out,
                std::ostream& err) {
  return guarded(err, [&] {
    out << emit_ring_spec(build_builtin(tokens));
    return kExitOk;
  });
}

int cmd_verify(const VerifyOptions& options, std::istream& in,
               std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (options.sources.empty()) {
      err << "error: verify needs at least one ring\n";
      return kExitInputError;
    }
    std::vector<FiniteRing> rings;
    for (const RingSource& s : options.sources) rings.push_back(load_ring(s, in));

    const bool any = options.lemma1 || options.lemma2 || options.lemma3 ||
                     options.theorem1 || options.jacobson ||
                     options.theorem2_n.has_value() || options.inject_fault;
    const bool all = options.all || !any;
    bool refuted = false;
    auto emit = [&](const lab::VerificationReport& rep, const FiniteRing& r,
                    const std::string& statement) {
      print_status_line(out, rep, r.name(), statement, options.verbose);
      refuted = refuted || rep.status() == lab::Status::Fail;
    };

    for (const FiniteRing& r : rings) {
      if (all || options.lemma1) emit(lab::lemma1_check(r), r, "lemma1");
      if (all || options.lemma2) emit(lab::lemma2_check(r), r, "lemma2");
      if (all || options.lemma3) emit(lab::lemma3_check(r), r, "lemma3");
      if (all || options.theorem1) emit(lab::theorem1_verify(r), r, "theorem1");
      if (all || options.jacobson) emit(lab::jacobson_check(r), r, "jacobson");
      if (options.theorem2_n) {
        const std::size_t n = *options.theorem2_n;
        emit(lab::theorem2_check(r, n), r, "theorem2(n=" + std::to_string(n) + ")");
      } else if (all && r.order() * r.order() * r.order() * r.order() <= kScanLimit) {
        emit(lab::theorem2_check(r, 2), r, "theorem2(n=2)");
      }
      if (options.inject_fault) emit(lab::injected_fault_check(r), r, "fault");
    }
    return refuted ? kExitRefuted : kExitOk;
  });
}

int cmd_decompose(const RingSource& source, std::istream& in,
                  std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const FiniteRing ring = load_ring(source, in);
    const DecompositionTree tree = indecomposable_components(ring);
    print_tree(out, tree, "", 0);
    const auto leaves = tree.leaves();
    out << "leaves:";
    for (const auto& l : leaves) out << ' ' << l.order();
    out << "\nleaf_characteristics:";
    for (const auto& l : leaves) out << ' ' << characteristic(l);
    out << '\n';
    if (ring.order() > kIsomorphismLimit) {
      out << "reassembled_isomorphic=unchecked\n";
      return kExitOk;
    }
    const FiniteRing sum = reassemble(tree);
    const auto iso = find_isomorphism(sum, ring);
    const bool ok = iso && is_ring_isomorphism(sum, ring, *iso);
    out << "reassembled_isomorphic=" << boolean(ok) << '\n';
    return ok ? kExitOk : kExitRefuted;
  });
}

int cmd_enumerate(const EnumerateOptions& options, std::ostream& out,
                  std::ostream& err) {
  return guarded(err, [&] {
    const Corpus corpus = enumerate_unital_rings(options.order, options.max_results);
    out << "order=" << options.order << '\n' << "count=" << corpus.size() << '\n';
    for (const CorpusEntry& e : corpus) {
      const FiniteRing& r = e.ring;
      out << r.name() << " orders=";
      for (std::size_t t = 0; t < r.rank(); ++t) {
        out << (t ? "," : "") << r.factor_orders()[t];
      }
      out << ' ' << summary(r, structure_report(r)) << '\n';
    }
    if (!options.verify_all) return kExitOk;

    const CorpusReport report = corpus_verify(corpus);
    for (const auto& rep : report.reports) {
      if (options.verbose || rep.status() == lab::Status::Fail) {
        print_status_line(out, rep, rep.subject, rep.statement, options.verbose);
      }
    }
    out << "verify passed=" << report.passed << " failed=" << report.failed
        << " skipped=" << report.skipped << '\n';
    return report.failed > 0 ? kExitRefuted : kExitOk;
  });
}

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Finite ring structure and commutativity checks", "finring"};
  app.require_subcommand(1);

  AnalyzeOptions analyze;
  auto* a = app.add_subcommand("analyze", "Print the structure report of a ring");
  a->add_option("path", analyze.source.path, "Ring-spec file, '-' for stdin");
  a->add_option("--builtin", analyze.source.builtin, "Builtin ring expression");
  a->add_flag("--machine,--json", analyze.machine, "key=value lines only");

  std::vector<std::string> builtin_tokens;
  auto* b = app.add_subcommand("builtin", "Emit the ring-spec text of a builtin ring");
  b->add_option("expression", builtin_tokens, "e.g. matrix zmod2 2")->required();
  b->allow_extras(false);

  VerifyOptions verify;
  std::vector<std::string> verify_paths, verify_builtins;
  std::string theorem2_arg;
  auto* v = app.add_subcommand("verify", "Run lemma and theorem checks");
  v->add_option("paths", verify_paths, "Ring-spec files");
  v->add_option("--builtin", verify_builtins, "Builtin ring expression (repeatable)");
  v->add_flag("--lemma1", verify.lemma1);
  v->add_flag("--lemma2", verify.lemma2);
  v->add_flag("--lemma3", verify.lemma3);
  v->add_flag("--theorem1", verify.theorem1);
  v->add_flag("--jacobson", verify.jacobson);
  v->add_option("--theorem2", theorem2_arg, "Matrix size, as n=<n> or <n>");
  v->add_flag("--all", verify.all);
  v->add_flag("--verbose,-v", verify.verbose);
  v->add_flag("--inject-fault", verify.inject_fault,
              "Add a deliberately false check (exercises exit code 2)")
      ->group("");

  RingSource decompose;
  auto* d = app.add_subcommand("decompose", "Split into indecomposable components");
  d->add_option("path", decompose.path, "Ring-spec file, '-' for stdin");
  d->add_option("--builtin", decompose.builtin, "Builtin ring expression");

  EnumerateOptions enumerate;
  std::size_t max_results = 0;
  auto* e = app.add_subcommand("enumerate", "List unital rings of an order up to isomorphism");
  e->add_option("order", enumerate.order, "Ring order")->required();
  e->add_flag("--verify-all", enumerate.verify_all);
  e->add_option("--max", max_results, "Stop after this many rings");
  e->add_flag("--verbose,-v", enumerate.verbose);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& ex) {
    return app.exit(ex, out, err);
  } catch (const CLI::ParseError& ex) {
    app.exit(ex, out, err);
    return kExitInputError;
  }

  auto one_source = [&](const RingSource& s) {
    if (s.path.empty() == s.builtin.empty()) {
      err << "error: give exactly one of a path or --builtin\n";
      return false;
    }
    return true;
  };

  if (*a) {
    if (!one_source(analyze.source)) return kExitInputError;
    return cmd_analyze(analyze, in, out, err);
  }
  if (*b) return cmd_builtin(builtin_tokens, out, err);
  if (*v) {
    for (auto& p : verify_paths) verify.sources.push_back({p, ""});
    for (auto& x : verify_builtins) verify.sources.push_back({"", x});
    if (!theorem2_arg.empty()) {
      std::string_view arg = theorem2_arg;
      if (arg.substr(0, 2) == "n=") arg.remove_prefix(2);
      std::size_t n = 0;
      auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), n);
      if (ec != std::errc{} || ptr != arg.data() + arg.size() || n < 2) {
        err << "error: --theorem2 expects n=<n> with n >= 2\n";
        return kExitInputError;
      }
      verify.theorem2_n = n;
    }
    return cmd_verify(verify, in, out, err);
  }
  if (*d) {
    if (!one_source(decompose)) return kExitInputError;
    return cmd_decompose(decompose, in, out, err);
  }
  if (*e) {
    if (max_results > 0) enumerate.max_results = max_results;
    return cmd_enumerate(enumerate, out, err);
  }
  return kExitInputError;
}

}  // namespace finring::cli
