#include "rankmetric/rankmetric.h"

#include "codefile.hpp"
#include "constructions.hpp"
#include "covering.hpp"
#include "density.hpp"
#include "error.hpp"
#include "macwilliams.hpp"
#include "report.hpp"
#include "verify.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

struct rm_field {
  rankmetric::FieldPtr field;
};

struct rm_code {
  rankmetric::RankMetricCode code;
};

namespace {

using namespace rankmetric;

thread_local std::string g_last_error;

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

rm_status status_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::budget:
      return RM_BUDGET_EXCEEDED;
    case ErrorKind::internal:
      return RM_INTERNAL_ERROR;
    default:
      return RM_INPUT_ERROR;
  }
}

template <class F>
rm_status guarded(F&& body) {
  try {
    g_last_error.clear();
    return body();
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return RM_INTERNAL_ERROR;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return RM_INTERNAL_ERROR;
  }
}

void require(const void* p, const char* what) {
  if (!p) fail(ErrorKind::input, std::string("null argument: ") + what);
}

EnumOptions enum_options(const rm_options* opt) {
  rm_options o;
  rm_options_init(&o);
  if (opt) o = *opt;
  return {o.budget, o.threads == 0 ? 1U : o.threads};
}

CensusOptions census_options(const rm_options* opt) {
  rm_options o;
  rm_options_init(&o);
  if (opt) o = *opt;
  return {o.census_budget, o.threads == 0 ? 1U : o.threads};
}

std::string render(const Json& j, rm_format fmt, std::string (*text)(const Json&)) { return fmt == RM_JSON ? j.dump(2) + "\n" : text(j); }

RankDistribution parse_distribution(const std::string& s) {
  RankDistribution w;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t comma = s.find(',', start);
    std::string part = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    const auto b = part.find_first_not_of(" \t()");
    const auto e = part.find_last_not_of(" \t()");
    part = b == std::string::npos ? "" : part.substr(b, e - b + 1);
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos) {
      fail(ErrorKind::input, "bad distribution entry '" + part + "'");
    }
    w.counts.emplace_back(part);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return w;
}

}  // namespace

extern "C" {

void rm_options_init(rm_options* opt) {
  if (!opt) return;
  opt->budget = EnumOptions{}.budget;
  opt->threads = 1;
  opt->census_budget = CensusOptions{}.budget;
}

const char* rm_last_error(void) { return g_last_error.c_str(); }

const char* rm_status_name(rm_status status) {
  switch (status) {
    case RM_OK:
      return "ok";
    case RM_VERIFY_FAILED:
      return "verification failed";
    case RM_INPUT_ERROR:
      return "input error";
    case RM_BUDGET_EXCEEDED:
      return "budget exceeded";
    case RM_INTERNAL_ERROR:
      return "internal error";
  }
  return "unknown";
}

void rm_string_free(char* s) { std::free(s); }

void rm_string_array_free(char** arr, size_t length) {
  if (!arr) return;
  for (size_t i = 0; i < length; ++i) std::free(arr[i]);
  std::free(arr);
}

rm_status rm_field_create(unsigned p, unsigned e, rm_field** out) {
  return guarded([&] {
    require(out, "out");
    *out = new rm_field{Field::make(p, e)};
    return RM_OK;
  });
}

void rm_field_free(rm_field* f) { delete f; }

uint32_t rm_field_order(const rm_field* f) { return f ? f->field->q() : 0; }

rm_status rm_field_describe(const rm_field* f, char** out) {
  return guarded([&] {
    require(f, "field");
    require(out, "out");
    *out = dup(f->field->describe());
    return RM_OK;
  });
}

rm_status rm_code_from_generators(const rm_field* f, size_t n, size_t m, size_t count, const uint32_t* entries, rm_code** out) {
  return guarded([&] {
    require(f, "field");
    require(out, "out");
    if (count > 0) require(entries, "entries");
    std::vector<Matrix> gens;
    for (size_t t = 0; t < count; ++t) {
      std::vector<Elem> v(entries + t * n * m, entries + (t + 1) * n * m);
      for (auto x : v) {
        if (x >= f->field->q()) fail(ErrorKind::input, "entry " + std::to_string(x) + " outside the field");
      }
      gens.emplace_back(f->field, n, m, std::move(v));
    }
    *out = new rm_code{RankMetricCode::from_generators(f->field, n, m, gens)};
    return RM_OK;
  });
}

rm_status rm_code_parse(const char* text, rm_code** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new rm_code{parse_code_string(text)};
    return RM_OK;
  });
}

rm_status rm_code_load(const char* path, rm_code** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new rm_code{parse_code_file(path)};
    return RM_OK;
  });
}

void rm_code_free(rm_code* c) { delete c; }
size_t rm_code_dim(const rm_code* c) { return c ? c->code.dim() : 0; }
size_t rm_code_rows(const rm_code* c) { return c ? c->code.n() : 0; }
size_t rm_code_cols(const rm_code* c) { return c ? c->code.m() : 0; }
uint32_t rm_code_field_order(const rm_code* c) { return c ? c->code.field()->q() : 0; }

rm_status rm_code_print(const rm_code* c, char** out) {
  return guarded([&] {
    require(c, "code");
    require(out, "out");
    *out = dup(print_code(c->code));
    return RM_OK;
  });
}

rm_status rm_code_dual(const rm_code* c, rm_code** out) {
  return guarded([&] {
    require(c, "code");
    require(out, "out");
    *out = new rm_code{dual(c->code)};
    return RM_OK;
  });
}

int rm_code_equal(const rm_code* a, const rm_code* b) { return a && b && a->code == b->code ? 1 : 0; }

rm_status rm_rank_distribution(const rm_code* c, const rm_options* opt, char*** out, size_t* length) {
  return guarded([&] {
    require(c, "code");
    require(out, "out");
    require(length, "length");
    const auto w = rank_distribution(c->code, enum_options(opt));
    char** arr = static_cast<char**>(std::calloc(w.size(), sizeof(char*)));
    if (!arr) throw std::bad_alloc();
    try {
      for (size_t i = 0; i < w.size(); ++i) arr[i] = dup(w[i].str());
    } catch (...) {
      rm_string_array_free(arr, w.size());
      throw;
    }
    *out = arr;
    *length = w.size();
    return RM_OK;
  });
}

rm_status rm_minimum_distance(const rm_code* c, const rm_options* opt, size_t* out) {
  return guarded([&] {
    require(c, "code");
    require(out, "out");
    *out = minimum_distance(c->code, enum_options(opt));
    return RM_OK;
  });
}

rm_status rm_covering_radius(const rm_code* c, const rm_options* opt, size_t* out) {
  return guarded([&] {
    require(c, "code");
    require(out, "out");
    *out = covering_radius_exact(c->code, enum_options(opt));
    return RM_OK;
  });
}

rm_status rm_analyze(const rm_code* c, const rm_options* opt, rm_format fmt, char** out) {
  return guarded([&] {
    require(c, "code");
    require(out, "out");
    *out = dup(render(analyze_json(c->code, enum_options(opt)), fmt, analyze_text));
    return RM_OK;
  });
}

rm_status rm_covering_report(const rm_code* c, const rm_options* opt, rm_format fmt, char** out) {
  return guarded([&] {
    require(c, "code");
    require(out, "out");
    *out = dup(render(covering_json(covering_report(c->code, enum_options(opt))), fmt, covering_text));
    return RM_OK;
  });
}

rm_status rm_macwilliams(const char* distribution, size_t n, size_t m, uint64_t q, rm_format fmt, char** out) {
  return guarded([&] {
    require(distribution, "distribution");
    require(out, "out");
    if (n < 1 || n > m) fail(ErrorKind::input, "need 1 <= n <= m");
    const auto w = parse_distribution(distribution);
    if (w.size() != n + 1) fail(ErrorKind::input, "distribution must have n + 1 = " + std::to_string(n + 1) + " entries");
    *out = dup(render(macwilliams_json(w, n, m, q), fmt, macwilliams_text));
    return RM_OK;
  });
}

rm_status rm_density(uint64_t q, size_t n, size_t m, size_t d, int census, size_t truncation, const rm_options* opt, rm_format fmt,
                     char** out) {
  return guarded([&] {
    require(out, "out");
    const auto r = density_report(q, n, m, d, census != 0, truncation, census_options(opt));
    *out = dup(render(density_json(r), fmt, density_text));
    return RM_OK;
  });
}

rm_status rm_mrd_generate(unsigned p, unsigned e, size_t n, size_t m, size_t d, char** out) {
  return guarded([&] {
    require(out, "out");
    const auto built = build_mrd(Field::make(p, e), n, m, d);
    *out = dup(print_code(built.code, mrd_comments(built, d)));
    return RM_OK;
  });
}

rm_status rm_anticode_generate(unsigned p, unsigned e, size_t n, size_t m, const char* side, size_t dim_u, const uint32_t* basis,
                               char** out) {
  return guarded([&] {
    require(side, "side");
    require(out, "out");
    if (dim_u > 0) require(basis, "basis");
    const std::string s = side;
    if (s != "column" && s != "row") fail(ErrorKind::input, "side must be column or row");
    const auto f = Field::make(p, e);
    const size_t len = s == "column" ? n : m;
    std::vector<std::vector<Elem>> vecs;
    for (size_t t = 0; t < dim_u; ++t) {
      std::vector<Elem> v(basis + t * len, basis + (t + 1) * len);
      for (auto x : v) {
        if (x >= f->q()) fail(ErrorKind::input, "entry " + std::to_string(x) + " outside the field");
      }
      vecs.push_back(std::move(v));
    }
    const Subspace u = Subspace::span(f, len, vecs);
    if (s == "row" && n != m) fail(ErrorKind::input, "classification requires square shape (n = m)");
    const auto code = s == "column" ? build_column_anticode(u, m) : build_row_anticode(u, n);
    std::string ustr = u.str();
    for (auto& ch : ustr) {
      if (ch == '\n') ch = ';';
    }
    *out = dup(print_code(code, {s + " anticode, dim U = " + std::to_string(u.dim()), "U = " + ustr}));
    return RM_OK;
  });
}

rm_status rm_verify(const char* level, int mutate_transform, const char* dump_dir, rm_format fmt, char** out) {
  return guarded([&] {
    require(level, "level");
    require(out, "out");
    VerifyOptions opt;
    opt.level = parse_verify_level(level);
    opt.mutate_transform = mutate_transform != 0;
    const auto report = run_verification(opt);
    Json j = verify_json(report);
    std::string text = render(j, fmt, verify_text);
    if (dump_dir && !report.passed()) {
      const auto paths = dump_counterexamples(report, dump_dir);
      if (fmt == RM_TEXT) {
        for (const auto& p : paths) text += "counterexample written to " + p + "\n";
      } else {
        j["dumped"] = paths;
        text = j.dump(2) + "\n";
      }
    }
    *out = dup(text);
    return report.passed() ? RM_OK : RM_VERIFY_FAILED;
  });
}

}  // extern "C"
