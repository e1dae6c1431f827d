#include "realtoric/realtoric.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "realtoric/error.hpp"
#include "realtoric/families.hpp"
#include "realtoric/formats.hpp"
#include "realtoric/report.hpp"

using namespace realtoric;

struct rtm_problem {
  Problem problem;
  std::string description;
  std::optional<int> hessenberg_n;
};

struct rtm_report {
  Report report;
};

namespace {

thread_local std::string last_error;

rtm_status fail(rtm_status status, const std::string& message) {
  last_error = message;
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename Body>
rtm_status guarded(Body&& body) {
  try {
    return body();
  } catch (const InputError& e) {
    return fail(RTM_E_INPUT, e.what());
  } catch (const ValidationError& e) {
    return fail(RTM_E_VALIDATION, e.what());
  } catch (const InconsistencyError& e) {
    return fail(RTM_E_INVARIANT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(RTM_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(RTM_E_INTERNAL, e.what());
  }
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string render(const Json& j) { return j.dump(2) + "\n"; }

rtm_problem* wrap(const SmallCover& cover, std::string description) {
  return new rtm_problem{{cover.complex(), cover.chi()}, std::move(description), std::nullopt};
}

}  // namespace

extern "C" {

const char* rtm_version(void) { return "0.1.0"; }

const char* rtm_last_error(void) { return last_error.c_str(); }

void rtm_string_free(char* s) { std::free(s); }

rtm_status rtm_problem_parse(const char* json, const char* description, rtm_problem** out) {
  if (!json || !out) return fail(RTM_E_ARGUMENT, "null argument");
  return guarded([&] {
    Problem problem = problem_from_json(parse_json(json));
    *out = new rtm_problem{std::move(problem), description ? description : "", std::nullopt};
    return RTM_OK;
  });
}

rtm_status rtm_problem_permutahedron(int n, rtm_problem** out) {
  if (!out) return fail(RTM_E_ARGUMENT, "null argument");
  if (n < 2 || n > 10) return fail(RTM_E_ARGUMENT, "permutahedron needs 2 <= n <= 10");
  return guarded([&] {
    auto* p = wrap(permutahedron_cover(n), "permutahedron n=" + std::to_string(n));
    p->hessenberg_n = n;
    *out = p;
    return RTM_OK;
  });
}

rtm_status rtm_problem_graph_assoc(const char* graph_json, const char* description,
                                   rtm_problem** out) {
  if (!graph_json || !out) return fail(RTM_E_ARGUMENT, "null argument");
  return guarded([&] {
    const Graph g = graph_from_json(parse_json(graph_json));
    *out = wrap(graph_associahedron_cover(g), description ? description : "graph associahedron");
    return RTM_OK;
  });
}

rtm_status rtm_problem_to_json(const rtm_problem* problem, char** out) {
  if (!problem || !out) return fail(RTM_E_ARGUMENT, "null argument");
  return guarded([&] {
    *out = duplicate(problem_to_json(problem->problem).dump() + "\n");
    return RTM_OK;
  });
}

int rtm_problem_dimension(const rtm_problem* problem) {
  return problem ? problem->problem.chi.rows() : -1;
}

int rtm_problem_facet_count(const rtm_problem* problem) {
  return problem ? problem->problem.complex.vertex_count() : -1;
}

void rtm_problem_free(rtm_problem* problem) { delete problem; }

rtm_status rtm_validate(const rtm_problem* problem, rtm_format format, char** out) {
  if (!problem || !out) return fail(RTM_E_ARGUMENT, "null argument");
  return guarded([&] {
    const ValidationReport report = validation_report(problem->problem);
    *out = duplicate(format == RTM_FORMAT_JSON ? render(validation_to_json(report))
                                               : validation_to_text(report));
    if (!report.valid()) return fail(RTM_E_VALIDATION, report.errors.front());
    return RTM_OK;
  });
}

rtm_status rtm_report_compute(const rtm_problem* problem, const rtm_options* options,
                              rtm_report** out) {
  if (!problem || !out) return fail(RTM_E_ARGUMENT, "null argument");
  return guarded([&] {
    const SmallCover cover = validate(problem->problem.complex, problem->problem.chi);
    ReportOptions opts;
    if (options) {
      opts.jobs = options->jobs;
      opts.breakdown = options->breakdown != 0;
    }
    opts.hessenberg_n = problem->hessenberg_n;
    *out = new rtm_report{make_report(cover, problem->description, opts)};
    return RTM_OK;
  });
}

rtm_status rtm_report_render(const rtm_report* report, rtm_format format, char** out) {
  if (!report || !out) return fail(RTM_E_ARGUMENT, "null argument");
  return guarded([&] {
    *out = duplicate(format == RTM_FORMAT_JSON ? render(report_to_json(report->report))
                                               : report_to_text(report->report));
    return RTM_OK;
  });
}

size_t rtm_report_degree_count(const rtm_report* report) {
  return report ? report->report.betti.size() : 0;
}

int64_t rtm_report_betti(const rtm_report* report, size_t degree) {
  if (!report || degree >= report->report.betti.size()) return -1;
  return report->report.betti[degree];
}

int rtm_report_orientable(const rtm_report* report) {
  return report && report->report.orientable ? 1 : 0;
}

uint64_t rtm_report_witness(const rtm_report* report) {
  return report && report->report.witness ? *report->report.witness : 0;
}

int64_t rtm_report_euler(const rtm_report* report) { return report ? report->report.euler : 0; }

int rtm_report_closed_form(const rtm_report* report) {
  if (!report || !report->report.closed_form) return -1;
  return report->report.closed_form->match ? 1 : 0;
}

void rtm_report_free(rtm_report* report) { delete report; }

rtm_status rtm_moment_angle_check(const rtm_problem* problem, unsigned jobs, rtm_format format,
                                  char** out) {
  if (!problem || !out) return fail(RTM_E_ARGUMENT, "null argument");
  return guarded([&] {
    const SmallCover cover = validate(problem->problem.complex, problem->problem.chi);
    const CoveringCheck check = covering_identity(cover, betti_numbers(cover, jobs));
    *out = duplicate(format == RTM_FORMAT_JSON ? render(covering_to_json(check))
                                               : covering_to_text(check));
    if (!check.match) return fail(RTM_E_INVARIANT, "covering identity fails");
    return RTM_OK;
  });
}

rtm_status rtm_secant(int k, rtm_format format, char** out) {
  if (!out) return fail(RTM_E_ARGUMENT, "null argument");
  if (k < 0 || k > 500) return fail(RTM_E_ARGUMENT, "secant needs 0 <= k <= 500");
  return guarded([&] {
    const SecantTable table = secant_numbers(k);
    *out = duplicate(format == RTM_FORMAT_JSON ? render(secant_to_json(table))
                                               : secant_to_text(table));
    return RTM_OK;
  });
}

}  // extern "C"
