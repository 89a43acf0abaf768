#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "finring/ring.hpp"

namespace finring::cli {

// Exit-code contract shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitRefuted = 2;

// A ring-spec file ("-" reads stdin) or a builtin expression. Builtins are
// emitted as spec text and re-parsed, so every ring passes the parser.
struct RingSource {
  std::string path;
  std::string builtin;
};

FiniteRing load_ring(const RingSource& source, std::istream& in);

struct AnalyzeOptions {
  RingSource source;
  bool machine = false;  // key=value lines only
};

struct VerifyOptions {
  std::vector<RingSource> sources;
  bool lemma1 = false;
  bool lemma2 = false;
  bool lemma3 = false;
  bool theorem1 = false;
  bool jacobson = false;
  std::optional<std::size_t> theorem2_n;
  bool all = false;
  bool inject_fault = false;
  bool verbose = false;
};

struct EnumerateOptions {
  std::uint64_t order = 0;
  bool verify_all = false;
  std::optional<std::size_t> max_results;
  bool verbose = false;
};

int cmd_analyze(const AnalyzeOptions& options, std::istream& in,
                std::ostream& out, std::ostream& err);
int cmd_builtin(const std::vector<std::string>& tokens, std::ostream& out,
                std::ostream& err);
int cmd_verify(const VerifyOptions& options, std::istream& in,
               std::ostream& out, std::ostream& err);
int cmd_decompose(const RingSource& source, std::istream& in,
                  std::ostream& out, std::ostream& err);
int cmd_enumerate(const EnumerateOptions& options, std::ostream& out,
                  std::ostream& err);

// Full command line: `finring <analyze|builtin|verify|decompose|enumerate> ...`.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace finring::cli
