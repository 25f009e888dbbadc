#include "newtonfilt/newtonfilt.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "core/error.hpp"
#include "core/reports.hpp"

struct nf_problem {
  nf::Problem problem;
};

namespace {

thread_local std::string last_error;

nf_status fail(nf_status status, const std::string& message) {
  last_error = message;
  return status;
}

// Maps engine exceptions onto status codes.
template <class Fn>
nf_status guarded(Fn&& fn) {
  try {
    last_error.clear();
    fn();
    return NF_OK;
  } catch (const nf::ParseError& e) {
    return fail(NF_ERR_PARSE, e.what());
  } catch (const nf::InputError& e) {
    return fail(NF_ERR_INPUT, e.what());
  } catch (const nf::RangeError& e) {
    return fail(NF_ERR_RANGE, e.what());
  } catch (const nf::InapplicableError& e) {
    return fail(NF_ERR_INAPPLICABLE, e.what());
  } catch (const nf::UnsupportedError& e) {
    return fail(NF_ERR_UNSUPPORTED, e.what());
  } catch (const std::bad_alloc&) {
    return fail(NF_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(NF_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(NF_ERR_INTERNAL, "unknown error");
  }
}

char* copy_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

nf::Method to_method(nf_method m) {
  switch (m) {
    case NF_METHOD_A: return nf::Method::A;
    case NF_METHOD_B: return nf::Method::B;
    case NF_METHOD_BOTH: return nf::Method::Both;
  }
  throw nf::InputError("method", "unknown method code " + std::to_string(static_cast<int>(m)));
}

nf::RunOptions to_run(const nf_options* options) {
  nf::RunOptions run;
  if (!options) return run;
  run.method = to_method(options->method);
  run.threads = options->threads ? options->threads : 1;
  if (options->truncation > 0) run.method_a.truncation = options->truncation;
  run.method_a.force = options->force != 0;
  return run;
}

nf::MultiIndex read_tuple(const int64_t* values, std::size_t size) {
  return nf::MultiIndex(std::vector<nf::Int>(values, values + size));
}

std::vector<nf::MultiIndex> read_targets(const int64_t* values, std::size_t count, std::size_t s) {
  std::vector<nf::MultiIndex> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(read_tuple(values + i * s, s));
  return out;
}

nf_status make_problem(nf::ProblemSpec spec, nf_problem** out) {
  return guarded([&] { *out = new nf_problem{nf::build_problem(std::move(spec))}; });
}

void write_tuple(const nf::MultiIndex& m, int64_t* out) {
  for (std::size_t i = 0; i < m.size(); ++i) out[i] = m[i];
}

}  // namespace

extern "C" {

const char* nf_last_error(void) { return last_error.c_str(); }

const char* nf_status_name(nf_status status) {
  switch (status) {
    case NF_OK: return "ok";
    case NF_ERR_PARSE: return "parse error";
    case NF_ERR_INPUT: return "input error";
    case NF_ERR_RANGE: return "range error";
    case NF_ERR_INAPPLICABLE: return "inapplicable";
    case NF_ERR_UNSUPPORTED: return "unsupported";
    case NF_ERR_NULL_ARGUMENT: return "null argument";
    case NF_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void nf_string_free(char* text) { std::free(text); }

nf_options nf_default_options(void) { return nf_options{NF_METHOD_B, 1, 0, 0}; }

nf_status nf_problem_load(const char* path, nf_problem** out) {
  if (!path || !out) return fail(NF_ERR_NULL_ARGUMENT, "path and out must be non-null");
  *out = nullptr;
  nf::ProblemSpec spec;
  nf_status st = guarded([&] { spec = nf::load_problem(path); });
  return st == NF_OK ? make_problem(std::move(spec), out) : st;
}

nf_status nf_problem_parse(const char* json_text, nf_problem** out) {
  if (!json_text || !out) return fail(NF_ERR_NULL_ARGUMENT, "json_text and out must be non-null");
  *out = nullptr;
  nf::ProblemSpec spec;
  nf_status st = guarded([&] { spec = nf::parse_problem_text(json_text); });
  return st == NF_OK ? make_problem(std::move(spec), out) : st;
}

nf_status nf_problem_from_polynomial(const char* polynomial, const char* const* variables,
                                     size_t variable_count, nf_problem** out) {
  if (!polynomial || !variables || !out) {
    return fail(NF_ERR_NULL_ARGUMENT, "polynomial, variables and out must be non-null");
  }
  *out = nullptr;
  nf::ProblemSpec spec;
  spec.polynomial = polynomial;
  for (size_t j = 0; j < variable_count; ++j) {
    if (!variables[j]) return fail(NF_ERR_NULL_ARGUMENT, "null variable name");
    spec.variables.emplace_back(variables[j]);
  }
  return make_problem(std::move(spec), out);
}

void nf_problem_free(nf_problem* problem) { delete problem; }

size_t nf_problem_num_variables(const nf_problem* problem) {
  return problem ? problem->problem.profile.num_variables() : 0;
}

size_t nf_problem_num_facets(const nf_problem* problem) {
  return problem ? problem->problem.profile.num_facets() : 0;
}

nf_status nf_problem_facet(const nf_problem* problem, size_t index, int64_t* coefficients,
                           int64_t* degree) {
  if (!problem || !coefficients || !degree) return fail(NF_ERR_NULL_ARGUMENT, "null argument");
  const auto& profile = problem->problem.profile;
  if (index >= profile.num_facets()) return fail(NF_ERR_RANGE, "facet index out of range");
  const auto& form = profile.facet(index);
  for (size_t j = 0; j < form.dimension(); ++j) coefficients[j] = form.coefficient(j);
  *degree = form.degree();
  return NF_OK;
}

nf_status nf_problem_stellar_vertex(const nf_problem* problem, int64_t* vertex, int* is_stellar) {
  if (!problem || !vertex || !is_stellar) return fail(NF_ERR_NULL_ARGUMENT, "null argument");
  const auto& m = problem->problem.profile.diagram().stellar_vertex();
  *is_stellar = m.has_value();
  if (m) {
    for (size_t j = 0; j < m->size(); ++j) vertex[j] = (*m)[j];
  }
  return NF_OK;
}

nf_status nf_problem_u_of_f(const nf_problem* problem, int64_t* values) {
  if (!problem || !values) return fail(NF_ERR_NULL_ARGUMENT, "null argument");
  write_tuple(problem->problem.profile.u_f(), values);
  return NF_OK;
}

size_t nf_problem_target_count(const nf_problem* problem) {
  if (!problem || !problem->problem.spec.targets) return 0;
  return problem->problem.spec.targets->size();
}

nf_status nf_problem_target(const nf_problem* problem, size_t index, int64_t* v) {
  if (!problem || !v) return fail(NF_ERR_NULL_ARGUMENT, "null argument");
  if (index >= nf_problem_target_count(problem)) return fail(NF_ERR_RANGE, "target index out of range");
  write_tuple((*problem->problem.spec.targets)[index], v);
  return NF_OK;
}

int nf_problem_box(const nf_problem* problem, int64_t* bounds) {
  if (!problem || !problem->problem.spec.box) return 0;
  if (bounds) write_tuple(*problem->problem.spec.box, bounds);
  return 1;
}

nf_method nf_problem_method(const nf_problem* problem, nf_method fallback) {
  if (!problem || !problem->problem.spec.options.method) return fallback;
  switch (*problem->problem.spec.options.method) {
    case nf::Method::A: return NF_METHOD_A;
    case nf::Method::B: return NF_METHOD_B;
    case nf::Method::Both: return NF_METHOD_BOTH;
  }
  return fallback;
}

nf_status nf_poincare_coefficient(const nf_problem* problem, const int64_t* v,
                                  const nf_options* options, int64_t* coefficient,
                                  int* discrepancy) {
  if (!problem || !v || !coefficient) return fail(NF_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    const auto& p = problem->problem;
    auto run = to_run(options);
    auto rec = nf::poincare_coefficient(p.profile, p.germ, read_tuple(v, p.profile.num_facets()),
                                        run.method, run.method_a);
    *coefficient = rec.coefficient;
    if (discrepancy) *discrepancy = rec.discrepancy;
  });
}

nf_status nf_quotient_dim(const nf_problem* problem, const int64_t* lower, const int64_t* upper,
                          const nf_options* options, int64_t* dim) {
  if (!problem || !lower || !upper || !dim) return fail(NF_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    const auto& p = problem->problem;
    const std::size_t s = p.profile.num_facets();
    auto run = to_run(options);
    nf::QuotientSpec spec(read_tuple(lower, s), read_tuple(upper, s));
    switch (run.method) {
      case nf::Method::A:
        *dim = static_cast<int64_t>(nf::quotient_dim_A(p.profile, p.germ, spec, run.method_a));
        break;
      case nf::Method::B:
        *dim = static_cast<int64_t>(nf::quotient_dim_B(p.profile, p.germ, spec));
        break;
      case nf::Method::Both: {
        auto a = nf::quotient_dim_A(p.profile, p.germ, spec, run.method_a);
        auto b = nf::quotient_dim_B(p.profile, p.germ, spec);
        if (a != b) {
          throw nf::InputError("methods disagree: A = " + std::to_string(a) +
                               ", B = " + std::to_string(b));
        }
        *dim = static_cast<int64_t>(b);
        break;
      }
    }
  });
}

nf_status nf_report_diagram(const nf_problem* problem, char** json_out) {
  if (!problem || !json_out) return fail(NF_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] { *json_out = copy_string(nf::render_report(nf::diagram_report(problem->problem))); });
}

nf_status nf_report_coefficients(const nf_problem* problem, const int64_t* targets,
                                 size_t target_count, const nf_options* options, char** json_out) {
  if (!problem || !json_out || (!targets && target_count)) return fail(NF_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    const auto& p = problem->problem;
    auto list = read_targets(targets, target_count, p.profile.num_facets());
    *json_out = copy_string(nf::render_report(nf::coefficients_report(p, list, to_run(options))));
  });
}

nf_status nf_report_series(const nf_problem* problem, const int64_t* targets, size_t target_count,
                           const int64_t* box, const nf_options* options, char** json_out) {
  if (!problem || !json_out) return fail(NF_ERR_NULL_ARGUMENT, "null argument");
  if (!targets && !box) return fail(NF_ERR_INPUT, "series needs targets or a box");
  return guarded([&] {
    const auto& p = problem->problem;
    const std::size_t s = p.profile.num_facets();
    std::vector<nf::MultiIndex> list;
    if (targets) {
      list = read_targets(targets, target_count, s);
    } else {
      auto upper = read_tuple(box, s);
      if (!upper.is_nonnegative()) throw nf::InputError("box", "bounds must be >= 0");
      list = nf::box_targets(upper);
    }
    *json_out = copy_string(nf::render_report(nf::series_report(p, list, to_run(options))));
  });
}

nf_status nf_report_verify(const nf_problem* problem, const nf_verify_request* request,
                           const nf_options* options, char** json_out, int* holds) {
  if (!problem || !request || !request->claim || !json_out || !holds) {
    return fail(NF_ERR_NULL_ARGUMENT, "null argument");
  }
  return guarded([&] {
    const auto& p = problem->problem;
    const std::size_t s = p.profile.num_facets();
    nf::VerifyRequest req;
    req.claim = nf::parse_claim(request->claim);
    if (request->box) req.box = read_tuple(request->box, s);
    if (request->targets) req.targets = read_targets(request->targets, request->target_count, s);
    req.bound = request->bound;
    req.margin = request->margin;
    auto outcome = nf::verify_claim(p, req, to_run(options));
    *json_out = copy_string(nf::render_report(outcome.report));
    *holds = outcome.holds;
  });
}

nf_status nf_report_order_value(const nf_problem* problem, const char* germ, size_t facet,
                                int64_t budget, char** json_out) {
  if (!problem || !germ || !json_out) return fail(NF_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    std::optional<nf::Int> limit;
    if (budget >= 0) limit = budget;
    *json_out = copy_string(
        nf::render_report(nf::order_value_report(problem->problem, germ, facet, limit)));
  });
}

nf_status nf_report_examples(const char* corpus_dir, int all, unsigned threads, char** json_out,
                             int* all_green) {
  if (!corpus_dir || !json_out || !all_green) return fail(NF_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    auto board = nf::examples_report(corpus_dir, all != 0, threads ? threads : 1);
    *json_out = copy_string(nf::render_report(board.report));
    *all_green = board.all_green;
  });
}

}  // extern "C"
