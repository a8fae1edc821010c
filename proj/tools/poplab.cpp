// poplab: exact enumeration and verification for permutations avoiding flat
// partially ordered patterns, with banded-permutation counting, recurrence
// discovery, and series expansion of the closed-form generating functions.
//
// Exit codes: 0 success (and all-pass for verify), 1 enumeration cap
// exceeded, 2 usage error, 3 mathematical failure (no fitting recurrence, or
// a verification mismatch).

#include <CLI11.hpp>
#include <iostream>

#include "poplab/banded.hpp"
#include "poplab/enumerate.hpp"
#include "poplab/json_io.hpp"
#include "poplab/rational_gf.hpp"
#include "poplab/system_solver.hpp"
#include "poplab/verify.hpp"

namespace {

using namespace poplab;

struct GlobalOpts {
  std::string format = "plain";  // plain | json | csv
  int jobs = 0;
  int max_n = 0;
  bool ack_large = false;

  EnumOptions enum_options() const {
    if (max_n > 0 && !ack_large)
      throw std::invalid_argument("--max-n raises the enumeration cap; add --ack-large to confirm");
    return EnumOptions{jobs, max_n};
  }
};

BandedSpec parse_banded(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("--banded wants a,b (e.g. 2,2)");
  return BandedSpec{std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
}

std::vector<BigInt> parse_sequence(const std::string& text) {
  std::vector<BigInt> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.emplace_back(item);
  }
  return out;
}

void emit_count(const GlobalOpts& g, const BigInt& value) {
  if (g.format == "json")
    std::cout << nlohmann::json{{"count", value.str()}} << "\n";
  else if (g.format == "csv")
    std::cout << "count\n" << value.str() << "\n";
  else
    std::cout << value.str() << "\n";
}

void emit_sequence(const GlobalOpts& g, const std::vector<BigInt>& seq) {
  if (g.format == "json")
    std::cout << sequence_to_json(seq) << "\n";
  else if (g.format == "csv")
    std::cout << sequence_to_csv(seq);
  else {
    for (size_t i = 0; i < seq.size(); ++i) std::cout << (i ? "," : "") << seq[i].str();
    std::cout << "\n";
  }
}

void emit_poly(const GlobalOpts& g, const MultiPoly& p) {
  if (g.format == "json")
    std::cout << multipoly_to_json(p) << "\n";
  else if (g.format == "csv") {
    std::cout << "e_p,e_q,e_u,e_v,e_s,e_t,coeff\n";
    for (const auto& [m, c] : p.terms()) {
      for (int i = 0; i < kNumVars; ++i) std::cout << m.e[static_cast<size_t>(i)] << ",";
      std::cout << c.str() << "\n";
    }
  } else {
    std::cout << p.to_string() << "\n";
  }
}

void emit_series(const GlobalOpts& g, const XSeries& s) {
  if (g.format == "json")
    std::cout << xseries_to_json(s) << "\n";
  else if (g.format == "csv") {
    std::cout << "n,e_p,e_q,e_u,e_v,e_s,e_t,coeff\n";
    for (int n = 0; n <= s.order(); ++n)
      for (const auto& [m, c] : s.coeff(n).terms()) {
        std::cout << n << ",";
        for (int i = 0; i < kNumVars; ++i) std::cout << m.e[static_cast<size_t>(i)] << ",";
        std::cout << c.str() << "\n";
      }
  } else {
    std::cout << s.to_string() << "\n";
  }
}

int run_verify(const GlobalOpts& g, bool all, const std::string& claim, int n_max) {
  std::vector<ClaimReport> reports;
  if (all)
    reports = verify_all(n_max, g.jobs);
  else if (!claim.empty())
    reports.push_back(verify_claim(claim, n_max, g.jobs));
  else
    throw std::invalid_argument("verify wants --all or --claim <id>");

  bool all_pass = true;
  if (g.format == "json") {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : reports) {
      all_pass = all_pass && r.pass();
      nlohmann::json checks = nlohmann::json::array();
      for (const auto& c : r.checks)
        checks.push_back({{"what", c.what}, {"pass", c.pass}, {"detail", c.detail}});
      out.push_back({{"claim", r.claim}, {"pass", r.pass()}, {"checks", std::move(checks)}});
    }
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& r : reports) {
      all_pass = all_pass && r.pass();
      std::cout << (r.pass() ? "PASS" : "FAIL") << "  " << r.claim << "  ("
                << (r.checks.size() - static_cast<size_t>(r.failed())) << "/" << r.checks.size()
                << " checks)\n";
      for (const auto& c : r.checks)
        if (!c.pass) std::cout << "      failed: " << c.what << " -- " << c.detail << "\n";
    }
    std::cout << (all_pass ? "all claims pass" : "some claims FAILED") << "\n";
  }
  return all_pass ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact enumeration and verification for flat-POP avoiders"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"plain", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--jobs", g.jobs, "parallelism degree (1 = sequential reference path)");
  app.add_option("--max-n", g.max_n, "raise the enumeration cap");
  app.add_flag("--ack-large", g.ack_large, "confirm a raised cap (factorial-size work)");

  std::string pops_text, banded_text, seq_text, claim;
  int n = -1, n_max = -1, terms = -1, k = 0;
  long long kfib_n = 0;
  bool separable = false, verify_everything = false;

  CLI::App* count = app.add_subcommand("count", "count class members exactly");
  count->fallthrough();
  count->add_option("--pops", pops_text, "patterns, e.g. Pj:4,Pt:4");
  count->add_option("--banded", banded_text, "displacement window a,b");
  count->add_option("--n", n, "single length");
  count->add_option("--n-max", n_max, "sequence through this length");
  count->add_flag("--separable", separable, "restrict to separable permutations");

  CLI::App* dist = app.add_subcommand("distribution", "joint six-statistic distribution");
  dist->fallthrough();
  dist->add_option("--pops", pops_text, "patterns, e.g. Pj:3");
  dist->add_option("--n", n, "single length");
  dist->add_option("--n-max", n_max, "series through this length");
  dist->add_flag("--separable", separable, "restrict to separable permutations");

  std::string system_text;
  CLI::App* rec = app.add_subcommand("recurrence", "discover the minimal linear recurrence");
  rec->fallthrough();
  rec->add_option("--banded", banded_text, "displacement window a,b");
  rec->add_option("--system", system_text, "solved-system pair j,l");
  rec->add_option("--seq", seq_text, "explicit comma-separated sequence");
  rec->add_option("--terms", terms, "expand the source through this index");

  CLI::App* kf = app.add_subcommand("kfib", "k-step Fibonacci numbers");
  kf->fallthrough();
  kf->add_option("--k", k, "number of steps")->required();
  kf->add_option("--n", kfib_n, "index")->required();

  CLI::App* ver = app.add_subcommand("verify", "check registered claims against oracles");
  ver->fallthrough();
  ver->add_flag("--all", verify_everything, "verify every registered claim");
  ver->add_option("--claim", claim, "single claim id, e.g. thm2.1");
  ver->add_option("--n-max", n_max, "oracle depth");

  try {
    app.parse(argc, argv);

    if (count->parsed()) {
      if (!banded_text.empty() && (!pops_text.empty() || separable))
        throw std::invalid_argument("--banded cannot be combined with --pops/--separable");
      if (!banded_text.empty()) {
        const BandedSpec spec = parse_banded(banded_text);
        if (n_max >= 0)
          emit_sequence(g, banded_sequence(spec, n_max));
        else if (n >= 0)
          emit_count(g, banded_count(n, spec));
        else
          throw std::invalid_argument("count wants --n or --n-max");
      } else {
        AvoiderQuery q{0, parse_pop_list(pops_text), separable};
        if (n_max >= 0) {
          std::vector<BigInt> seq;
          for (int i = 0; i <= n_max; ++i) {
            q.n = i;
            seq.push_back(count_avoiders(q, g.enum_options()));
          }
          emit_sequence(g, seq);
        } else if (n >= 0) {
          q.n = n;
          emit_count(g, count_avoiders(q, g.enum_options()));
        } else {
          throw std::invalid_argument("count wants --n or --n-max");
        }
      }
      return 0;
    }

    if (dist->parsed()) {
      const std::vector<Pop> pops = parse_pop_list(pops_text);
      if (n_max >= 0)
        emit_series(g, series_bruteforce(pops, separable, n_max, g.enum_options()));
      else if (n >= 0)
        emit_poly(g, distribution({n, pops, separable}, g.enum_options()));
      else
        throw std::invalid_argument("distribution wants --n or --n-max");
      return 0;
    }

    if (rec->parsed()) {
      std::vector<BigInt> seq;
      if (!seq_text.empty()) {
        seq = parse_sequence(seq_text);
      } else if (!system_text.empty()) {
        const BandedSpec jl = parse_banded(system_text);  // reuse the a,b parser for j,l
        if (terms < 0) throw std::invalid_argument("recurrence --system wants --terms");
        seq = solve_system(jl.a, jl.b, terms).counting_sequence();
      } else if (!banded_text.empty()) {
        if (terms < 0) throw std::invalid_argument("recurrence --banded wants --terms");
        seq = banded_sequence(parse_banded(banded_text), terms);
      } else {
        throw std::invalid_argument("recurrence wants --banded, --system, or --seq");
      }
      const Recurrence r = find_recurrence(seq);
      if (g.format == "json") {
        nlohmann::json coeffs = nlohmann::json::array();
        for (const auto& c : r.coeffs) {
          std::ostringstream s;
          s << c;
          coeffs.push_back(s.str());
        }
        std::cout << nlohmann::json{{"order", r.order()},
                                    {"coeffs", std::move(coeffs)},
                                    {"denominator", r.denominator_string()}}
                  << "\n";
      } else {
        std::cout << r.denominator_string() << "\n";
      }
      return 0;
    }

    if (kf->parsed()) {
      emit_count(g, kfib(k, kfib_n));
      return 0;
    }

    if (ver->parsed()) return run_verify(g, verify_everything, claim, n_max < 0 ? 0 : n_max);

    throw std::invalid_argument("no subcommand");
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints usage/help
    return code == 0 ? 0 : 2;
  } catch (const cap_exceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const no_recurrence& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
