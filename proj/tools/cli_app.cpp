#include "cli_app.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "autoseq/automaton.hpp"
#include "autoseq/errors.hpp"
#include "autoseq/periodicity.hpp"
#include "autoseq/realnum.hpp"
#include "autoseq/refutation.hpp"
#include "autoseq/spec_json.hpp"

namespace autoseq::cli {

namespace {

struct UsageError : Error {
  using Error::Error;
};

struct SpecOptions {
  std::string spec_path;
  std::optional<unsigned> base;
  std::optional<Residue> modulus;
  std::string pattern;
  std::string coeffs;
  std::string arithsub;
};

std::vector<Natural> split_naturals(const std::string& text, const char* flag) {
  std::vector<Natural> out;
  std::stringstream in(text);
  std::string piece;
  while (std::getline(in, piece, ',')) {
    if (piece.empty() || piece.find_first_not_of("0123456789") != std::string::npos)
      throw UsageError(std::string(flag) + " expects comma-separated non-negative integers");
    out.emplace_back(piece);
  }
  if (out.empty()) throw UsageError(std::string(flag) + " needs a value");
  return out;
}

std::pair<Natural, Natural> split_pair(const std::string& text, const char* flag) {
  auto v = split_naturals(text, flag);
  if (v.size() != 2) throw UsageError(std::string(flag) + " expects two values a,b");
  return {v[0], v[1]};
}

SequenceSpec resolve_spec(const SpecOptions& o) {
  const bool inline_given = o.base || o.modulus || !o.pattern.empty() || !o.coeffs.empty() || !o.arithsub.empty();
  if (!o.spec_path.empty()) {
    if (inline_given) throw SpecParseError("--spec cannot be combined with inline sequence flags");
    return load_spec_file(o.spec_path);
  }
  try {
    const unsigned k = o.base.value_or(2);
    const Residue l = o.modulus.value_or(2);
    Core core = DigitSumCore{};
    if (!o.pattern.empty()) core = PatternCore{Pattern::parse(o.pattern, k)};
    std::vector<Transform> transforms;
    if (!o.arithsub.empty()) {
      auto [n, step] = split_pair(o.arithsub, "--arithsub");
      transforms.emplace_back(ArithSub{n, step});
    }
    if (!o.coeffs.empty()) transforms.emplace_back(PolyMap{split_naturals(o.coeffs, "--coeffs")});
    return SequenceSpec(k, l, std::move(core), std::move(transforms));
  } catch (const InvalidArgument& e) {
    throw SpecParseError(e.what());
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out_stream, std::ostream& err) {
  CLI::App app{"Automatic sequences from digit-pattern counts: machines, witnesses and numbers", "autoseq"};
  app.fallthrough();
  app.require_subcommand(1);

  SpecOptions so;
  std::string out_path;
  app.add_option("--spec", so.spec_path, "Sequence spec JSON file");
  app.add_option("--k", so.base, "Base k (default 2)");
  app.add_option("--L", so.modulus, "Modulus L (default 2)");
  app.add_option("--pattern", so.pattern, "Digit pattern b_M...b_1 (default: digit-sum core)");
  app.add_option("--coeffs", so.coeffs, "Polynomial output map a_0,a_1,...");
  app.add_option("--arithsub", so.arithsub, "Arithmetic subsequence N,l");
  app.add_option("--out", out_path, "Write contractual output to this file");

  auto* seq = app.add_subcommand("seq", "Print sequence values");
  std::uint64_t from = 0, count = 0;
  bool verify = false;
  seq->add_option("--from", from, "First index");
  seq->add_option("--count", count, "Number of values")->required();
  seq->add_flag("--verify", verify, "Cross-check the automaton against direct evaluation");

  auto* automaton = app.add_subcommand("automaton", "Compile the sequence to a DFAO");
  bool dot = false, minimized = false;
  automaton->add_flag("--dot", dot, "Emit Graphviz DOT");
  automaton->add_flag("--minimize", minimized, "Minimize before output");

  auto* witness = app.add_subcommand("witness", "Gap multiples, residue solutions and refutations");
  std::string lemma_arg, residue_arg, refute_arg;
  std::size_t floor_w1 = 0;
  std::optional<std::size_t> match_w1;
  bool constructive = false;
  std::uint64_t cap = kDefaultSearchCap;
  auto* lemma_opt = witness->add_option("--lemma22", lemma_arg, "Gap multiple for l,t");
  auto* residue_opt = witness->add_option("--prop41", residue_arg, "Digit-count residue solution for l,s");
  auto* refute_opt = witness->add_option("--refute", refute_arg, "Refute constancy of a(N + n l) for N,l");
  lemma_opt->excludes(residue_opt)->excludes(refute_opt);
  residue_opt->excludes(refute_opt);
  witness->add_option("--floor", floor_w1, "Minimum lowest exponent for --lemma22");
  witness->add_option("--match", match_w1, "Required lowest exponent for --lemma22");
  witness->add_flag("--constructive", constructive, "Use the block construction for --prop41");
  witness->add_option("--cap", cap, "Search cap");

  auto* eval = app.add_subcommand("eval", "Evaluate sum a(n) / beta^(n+1)");
  unsigned beta = 0;
  std::optional<std::size_t> decimals, partial, expansion;
  bool diagnose = false;
  std::size_t prefix_len = 4096, max_period = 64, max_preperiod = 256;
  eval->add_option("--beta", beta, "Integer base beta >= L")->required();
  auto* dec_opt = eval->add_option("--digits", decimals, "Decimal digits (truncated)");
  auto* partial_opt = eval->add_option("--partial", partial, "Exact partial sum of T terms");
  auto* exp_opt = eval->add_option("--expansion", expansion, "First T base-beta digits");
  auto* diag_opt = eval->add_flag("--diagnose", diagnose, "Bounded digit-period scan");
  dec_opt->excludes(partial_opt)->excludes(exp_opt)->excludes(diag_opt);
  partial_opt->excludes(exp_opt)->excludes(diag_opt);
  exp_opt->excludes(diag_opt);
  eval->add_option("--prefix", prefix_len, "Prefix length for --diagnose");
  eval->add_option("--max-period", max_period, "Largest period for --diagnose");
  eval->add_option("--max-preperiod", max_preperiod, "Largest preperiod for --diagnose");

  auto* scan = app.add_subcommand("scan", "Search every (N, l) for a non-constancy witness");
  std::uint64_t max_offset = 0, max_step = 0, budget = 10'000;
  scan->add_option("--Nmax", max_offset, "Largest offset N")->required();
  scan->add_option("--lmax", max_step, "Largest step l")->required();
  scan->add_option("--budget", budget, "Largest n searched per (N, l)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out_stream << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  std::ostringstream out;
  int code = kExitOk;
  try {
    if (*seq) {
      if (count < 1) throw UsageError("--count must be >= 1");
      const SequenceSpec spec = resolve_spec(so);
      const Dfao m = compile(spec);
      for (std::uint64_t i = 0; i < count; ++i) {
        const Natural n = Natural(from) + i;
        const Residue v = m.run(n);
        if (verify && v != eval_seq(spec, n)) {
          err << "verification mismatch at n=" << n << "\n";
          return kExitMismatch;
        }
        out << (i ? " " : "") << v;
      }
      out << "\n";
    } else if (*automaton) {
      const SequenceSpec spec = resolve_spec(so);
      const Dfao m = compile(spec, CompileOptions{minimized, kDefaultStateCap});
      err << "states=" << m.state_count() << "\n";
      if (dot) {
        out << to_dot(m);
      } else {
        out << "base=" << m.base() << " modulus=" << m.modulus() << " order=" << to_string(m.order())
            << " states=" << m.state_count() << " initial=" << m.initial() << "\n";
        for (StateId q = 0; q < m.state_count(); ++q) {
          out << q << " out=" << m.output(q) << " ->";
          for (Digit d = 0; d < m.base(); ++d) out << " " << m.next(q, d);
          out << "\n";
        }
      }
    } else if (*witness) {
      if (!lemma_arg.empty()) {
        auto [l, t] = split_pair(lemma_arg, "--lemma22");
        GapQuery q{l, static_cast<std::size_t>(t), so.base.value_or(2), floor_w1, match_w1, cap};
        out << format_gap_witness(find_gap_multiple(q)) << "\n";
      } else if (!residue_arg.empty()) {
        auto [l, s] = split_pair(residue_arg, "--prop41");
        auto sol = solve_residue(l, static_cast<Residue>(s), so.modulus.value_or(2), so.base.value_or(2),
                                 constructive ? ResidueStrategy::Constructive : ResidueStrategy::Scan, cap);
        for (const auto& line : sol.trace) err << line << "\n";
        out << "t=" << sol.t << "\n";
      } else if (!refute_arg.empty()) {
        auto [n, l] = split_pair(refute_arg, "--refute");
        const SequenceSpec spec = resolve_spec(so);
        const auto* core = std::get_if<PatternCore>(&spec.core());
        if (!core || !spec.transforms().empty())
          throw UsageError("--refute needs a pattern spec without transforms");
        auto w = construct_refutation(core->pattern, spec.modulus(), n, l, RefutationOptions{cap, cap});
        for (const auto& line : w.trace) err << format_trace_line(line) << "\n";
        out << format_refutation(w) << "\n";
      } else {
        throw UsageError("witness needs one of --lemma22, --prop41, --refute");
      }
    } else if (*eval) {
      const SequenceSpec spec = resolve_spec(so);
      if (beta < spec.modulus()) {
        err << "error: beta must be at least L=" << spec.modulus() << "\n";
        return kExitBeta;
      }
      DigitStream stream(spec, beta);
      if (decimals) {
        if (*decimals < 1) throw UsageError("--digits must be >= 1");
        out << decimal_digits(stream, *decimals).to_string() << "\n";
      } else if (partial) {
        out << format_rational(stream.partial_sum(*partial)) << "\n";
      } else if (expansion) {
        out << format_beta_digits(stream, *expansion) << "\n";
      } else if (diagnose) {
        auto d = diagnose_periodicity(stream, prefix_len, max_period, max_preperiod);
        out << format_period_scan(d.scan) << "\n";
      } else {
        throw UsageError("eval needs one of --digits, --partial, --expansion, --diagnose");
      }
    } else if (*scan) {
      if (max_step < 1 || budget < 1) throw UsageError("--lmax and --budget must be >= 1");
      const SequenceSpec spec = resolve_spec(so);
      const auto report = scan_everywhere_nonperiodic(spec, max_offset, max_step, budget);
      for (const auto& e : report.entries) out << format_scan_entry(e, budget) << "\n";
      if (!report.all_resolved()) code = kExitUnresolved;
    }
  } catch (const SpecParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitSpec;
  } catch (const StateCapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitStateCap;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (!out_path.empty()) {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << out_path << "\n";
      return kExitUsage;
    }
    file << out.str();
  } else {
    out_stream << out.str();
  }
  return code;
}

}  // namespace autoseq::cli
