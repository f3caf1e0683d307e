// rankmetric command-line tool; talks to the library only through the C API.

#include "rankmetric/rankmetric.h"

#include "CLI11.hpp"

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Globals {
  bool json = false;
  uint64_t budget = 0;
  unsigned threads = 1;
};

// Exit codes: 0 ok, 1 verification failure, 2 input error, 3 budget
// exceeded, 4 internal error.
int report(rm_status st, const char* context) {
  if (st != RM_OK && st != RM_VERIFY_FAILED) std::cerr << "rankmetric " << context << ": " << rm_status_name(st) << ": " << rm_last_error() << "\n";
  return static_cast<int>(st);
}

int emit(rm_status st, char* text, const char* context, const std::string& outfile = {}) {
  if (text) {
    if (outfile.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(outfile);
      if (!out) {
        rm_string_free(text);
        std::cerr << "rankmetric " << context << ": cannot write " << outfile << "\n";
        return RM_INPUT_ERROR;
      }
      out << text;
    }
    rm_string_free(text);
  }
  return report(st, context);
}

rm_options options(const Globals& g) {
  rm_options o;
  rm_options_init(&o);
  if (g.budget) o.budget = g.budget;
  o.threads = g.threads;
  return o;
}

rm_format format(const Globals& g) { return g.json ? RM_JSON : RM_TEXT; }

// q = p^e, or nothing if q is not a prime power.
std::optional<std::pair<unsigned, unsigned>> split_prime_power(uint64_t q) {
  if (q < 2) return std::nullopt;
  uint64_t p = 2;
  while (q % p) ++p;
  unsigned e = 0;
  while (q % p == 0) {
    q /= p;
    ++e;
  }
  if (q != 1) return std::nullopt;
  return std::make_pair(static_cast<unsigned>(p), e);
}

// "1 0 0; 0 1 0" -> flat entries, checking every vector has `len` entries.
std::optional<std::vector<uint32_t>> parse_vectors(const std::string& text, size_t len, size_t& count) {
  std::vector<uint32_t> out;
  count = 0;
  std::stringstream all(text);
  for (std::string part; std::getline(all, part, ';');) {
    std::stringstream ss(part);
    size_t here = 0;
    for (uint64_t v; ss >> v; ++here) out.push_back(static_cast<uint32_t>(v));
    if (!ss.eof()) return std::nullopt;
    if (here == 0) continue;
    if (here != len) return std::nullopt;
    ++count;
  }
  return out;
}

int with_code(const std::string& path, const char* context, const std::function<int(rm_code*)>& fn) {
  rm_code* code = nullptr;
  const rm_status st = rm_code_load(path.c_str(), &code);
  if (st != RM_OK) return report(st, context);
  const int rc = fn(code);
  rm_code_free(code);
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis of linear rank-metric codes over finite fields"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "JSON output (all numbers as decimal strings)");
  app.add_option("--budget", g.budget, "maximum elements per exhaustive scan (default 2^24)");
  app.add_option("--threads", g.threads, "worker threads; affects speed only")->check(CLI::Range(1U, 256U));

  int rc = 0;

  std::string code_path;
  auto* analyze = app.add_subcommand("analyze", "all parameters of a code file");
  analyze->add_option("codefile", code_path, "code file")->required();
  analyze->callback([&] {
    rc = with_code(code_path, "analyze", [&](rm_code* c) {
      const rm_options o = options(g);
      char* out = nullptr;
      const rm_status st = rm_analyze(c, &o, format(g), &out);
      return emit(st, out, "analyze");
    });
  });

  auto* covrad = app.add_subcommand("covrad", "covering radius and its bounds");
  covrad->add_option("codefile", code_path, "code file")->required();
  covrad->callback([&] {
    rc = with_code(code_path, "covrad", [&](rm_code* c) {
      const rm_options o = options(g);
      char* out = nullptr;
      const rm_status st = rm_covering_report(c, &o, format(g), &out);
      return emit(st, out, "covrad");
    });
  });

  uint64_t q = 0;
  size_t n = 0, m = 0, d = 0;
  std::string outfile;
  auto* mrd = app.add_subcommand("mrd-gen", "write an MRD code file");
  mrd->add_option("q", q, "field size (prime power)")->required();
  mrd->add_option("n", n, "rows")->required();
  mrd->add_option("m", m, "columns")->required();
  mrd->add_option("d", d, "minimum distance")->required();
  mrd->add_option("-o,--output", outfile, "output file (default stdout)");
  mrd->callback([&] {
    const auto pe = split_prime_power(q);
    if (!pe) {
      std::cerr << "rankmetric mrd-gen: q = " << q << " is not a prime power\n";
      rc = RM_INPUT_ERROR;
      return;
    }
    char* out = nullptr;
    const rm_status st = rm_mrd_generate(pe->first, pe->second, n, m, d, &out);
    rc = emit(st, out, "mrd-gen", outfile);
  });

  std::string side = "column";
  std::string basis;
  auto* anti = app.add_subcommand("anticode-gen", "write the optimal anticode of a support space U");
  anti->add_option("q", q, "field size (prime power)")->required();
  anti->add_option("n", n, "rows")->required();
  anti->add_option("m", m, "columns")->required();
  anti->add_option("--side", side, "column (U <= F_q^n) or row (U <= F_q^m, square only)")->check(CLI::IsMember({"column", "row"}));
  anti->add_option("--basis", basis, "spanning vectors of U, e.g. \"1 0 0;0 1 1\"");
  anti->add_option("-o,--output", outfile, "output file (default stdout)");
  anti->callback([&] {
    const auto pe = split_prime_power(q);
    if (!pe) {
      std::cerr << "rankmetric anticode-gen: q = " << q << " is not a prime power\n";
      rc = RM_INPUT_ERROR;
      return;
    }
    size_t count = 0;
    const auto vecs = parse_vectors(basis, side == "column" ? n : m, count);
    if (!vecs) {
      std::cerr << "rankmetric anticode-gen: malformed --basis\n";
      rc = RM_INPUT_ERROR;
      return;
    }
    char* out = nullptr;
    const rm_status st = rm_anticode_generate(pe->first, pe->second, n, m, side.c_str(), count, vecs->data(), &out);
    rc = emit(st, out, "anticode-gen", outfile);
  });

  std::string distribution;
  auto* mw = app.add_subcommand("macwilliams", "dual rank distribution of a code file or of a given distribution");
  mw->add_option("codefile", code_path, "code file");
  mw->add_option("--distribution", distribution, "W_0,...,W_n instead of a code file");
  mw->add_option("--q", q, "field size, with --distribution");
  mw->add_option("--n", n, "rows, with --distribution");
  mw->add_option("--m", m, "columns, with --distribution");
  mw->callback([&] {
    if (distribution.empty() == code_path.empty()) {
      std::cerr << "rankmetric macwilliams: give either a code file or --distribution\n";
      rc = RM_INPUT_ERROR;
      return;
    }
    if (!code_path.empty()) {
      rc = with_code(code_path, "macwilliams", [&](rm_code* c) {
        const rm_options o = options(g);
        char** w = nullptr;
        size_t len = 0;
        rm_status st = rm_rank_distribution(c, &o, &w, &len);
        if (st != RM_OK) return report(st, "macwilliams");
        std::string joined;
        for (size_t i = 0; i < len; ++i) joined += (i ? "," : "") + std::string(w[i]);
        rm_string_array_free(w, len);
        char* out = nullptr;
        st = rm_macwilliams(joined.c_str(), rm_code_rows(c), rm_code_cols(c), rm_code_field_order(c), format(g), &out);
        return emit(st, out, "macwilliams");
      });
      return;
    }
    char* out = nullptr;
    const rm_status st = rm_macwilliams(distribution.c_str(), n, m, q, format(g), &out);
    rc = emit(st, out, "macwilliams");
  });

  bool exact = false;
  size_t truncation = 20;
  uint64_t census_budget = 0;
  auto* density = app.add_subcommand("density", "density of MRD codes: census, bounds and asymptotics");
  density->add_option("q", q, "field size")->required();
  density->add_option("n", n, "rows")->required();
  density->add_option("m", m, "columns")->required();
  density->add_option("d", d, "minimum distance")->required();
  density->add_flag("--exact", exact, "exhaustive census of all k-dimensional codes");
  density->add_option("--truncation", truncation, "factors kept in the infinite products")->check(CLI::PositiveNumber);
  density->add_option("--census-budget", census_budget, "maximum number of subspaces in the census (default 10^6)");
  density->callback([&] {
    rm_options o = options(g);
    if (census_budget) o.census_budget = census_budget;
    char* out = nullptr;
    const rm_status st = rm_density(q, n, m, d, exact ? 1 : 0, truncation, &o, format(g), &out);
    rc = emit(st, out, "density");
  });

  std::string level = "desk";
  bool mutate = false;
  std::string dump_dir;
  auto* verify = app.add_subcommand("verify", "cross-check closed forms against brute-force oracles");
  verify->add_option("--level", level, "desk or exhaustive")->check(CLI::IsMember({"desk", "exhaustive"}));
  verify->add_flag("--mutate-transform", mutate, "flip the transform sign; the suite must fail");
  verify->add_option("--dump-dir", dump_dir, "write counterexamples here");
  verify->callback([&] {
    char* out = nullptr;
    const rm_status st = rm_verify(level.c_str(), mutate ? 1 : 0, dump_dir.empty() ? nullptr : dump_dir.c_str(), format(g), &out);
    rc = emit(st, out, "verify");
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : RM_INPUT_ERROR;
  }
  return rc;
}
