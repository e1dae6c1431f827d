#include "realtoric/report.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>

#include "realtoric/error.hpp"
#include "realtoric/families.hpp"

namespace realtoric {
namespace {

Json big_to_json(const mpz_class& x) {
  if (x.fits_slong_p()) return Json(static_cast<std::int64_t>(x.get_si()));
  return Json(x.get_str());
}

std::string members_text(Subset rows) {
  std::string out = "{";
  bool first = true;
  for (int i : subset_members(rows)) {
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

std::string face_labels(const std::vector<std::string>& labels, const Face& face) {
  std::string out = "{";
  for (std::size_t i = 0; i < face.size(); ++i) {
    if (i) out += ", ";
    out += labels.at(face[i]);
  }
  return out + "}";
}

Subset subset_from_members(const Json& members) {
  Subset s = 0;
  for (const auto& i : members) s |= Subset{1} << (i.get<int>() - 1);
  return s;
}

}  // namespace

bool Report::same_values(const Report& o) const {
  return input == o.input && n == o.n && m == o.m && betti == o.betti &&
         mod2_betti == o.mod2_betti && orientable == o.orientable && witness == o.witness &&
         euler == o.euler && warnings == o.warnings && closed_form == o.closed_form &&
         breakdown == o.breakdown;
}

Report make_report(const SmallCover& cover, std::string input, const ReportOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  Report report;
  report.input = std::move(input);
  report.n = cover.dimension();
  report.m = cover.facet_count();
  report.warnings = cover.warnings();

  BettiVector betti = betti_numbers(cover, options.jobs);
  std::vector<std::int64_t> resummed(betti.betti.size(), 0);
  for (const auto& entry : betti.breakdown)
    for (const auto& [q, rank] : entry.reduced.ranks) resummed.at(q + 1) += rank;
  if (resummed != betti.betti) throw InconsistencyError("breakdown does not sum to the Betti vector");

  report.betti = betti.betti;
  report.mod2_betti = mod2_betti(cover).entries;
  const Orientability orientation = is_orientable(cover);
  report.orientable = orientation.orientable;
  report.witness = orientation.witness;
  report.euler = euler_characteristic(cover, betti);

  if (options.hessenberg_n) {
    ClosedFormCheck check;
    for (int i = 0; i < static_cast<int>(report.betti.size()); ++i) {
      const mpz_class value = hessenberg_betti_closed_form(*options.hessenberg_n, i);
      if (!value.fits_slong_p()) throw InputError("closed-form value exceeds 64 bits");
      check.expected.push_back(value.get_si());
    }
    check.match = check.expected == report.betti;
    report.closed_form = check;
  }
  if (options.breakdown) {
    std::vector<BreakdownEntry> entries;
    entries.reserve(betti.breakdown.size());
    for (auto& e : betti.breakdown)
      entries.push_back({e.rows, std::move(e.support), std::move(e.reduced)});
    report.breakdown = std::move(entries);
  }
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

Json report_to_json(const Report& r) {
  Json j;
  j["input"] = r.input;
  j["n"] = r.n;
  j["m"] = r.m;
  j["betti"] = r.betti;
  j["mod2_betti"] = r.mod2_betti;
  j["orientable"] = r.orientable;
  if (r.witness)
    j["witness"] = Json{{"mask", *r.witness}, {"subset", subset_members(*r.witness)}};
  else
    j["witness"] = nullptr;
  j["euler_characteristic"] = r.euler;
  j["warnings"] = r.warnings;
  if (r.closed_form) {
    j["closed_form"] = Json{{"values", r.closed_form->expected},
                            {"verdict", r.closed_form->match ? "MATCH" : "MISMATCH"}};
  }
  if (r.breakdown) {
    Json entries = Json::array();
    for (const auto& e : *r.breakdown) {
      Json reduced = Json::object();
      for (const auto& [q, rank] : e.reduced.ranks) reduced[std::to_string(q)] = rank;
      entries.push_back(Json{{"mask", e.rows},
                             {"subset", subset_members(e.rows)},
                             {"support", e.support},
                             {"reduced_betti", std::move(reduced)}});
    }
    j["breakdown"] = std::move(entries);
  }
  return j;
}

Report report_from_json(const Json& j) {
  try {
    Report r;
    r.input = j.at("input").get<std::string>();
    r.n = j.at("n").get<int>();
    r.m = j.at("m").get<int>();
    r.betti = j.at("betti").get<std::vector<std::int64_t>>();
    r.mod2_betti = j.at("mod2_betti").get<std::vector<std::int64_t>>();
    r.orientable = j.at("orientable").get<bool>();
    if (!j.at("witness").is_null()) r.witness = j["witness"].at("mask").get<Subset>();
    r.euler = j.at("euler_characteristic").get<std::int64_t>();
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
    if (j.contains("closed_form")) {
      const auto& c = j["closed_form"];
      r.closed_form = ClosedFormCheck{c.at("values").get<std::vector<std::int64_t>>(),
                                      c.at("verdict").get<std::string>() == "MATCH"};
    }
    if (j.contains("breakdown")) {
      std::vector<BreakdownEntry> entries;
      for (const auto& e : j["breakdown"]) {
        BreakdownEntry entry;
        entry.rows = e.at("mask").get<Subset>();
        if (entry.rows != subset_from_members(e.at("subset")))
          throw InputError("breakdown mask and subset disagree");
        entry.support = e.at("support").get<std::vector<int>>();
        for (const auto& [key, value] : e.at("reduced_betti").items())
          entry.reduced.ranks[std::stoi(key)] = value.get<std::int64_t>();
        entries.push_back(std::move(entry));
      }
      r.breakdown = std::move(entries);
    }
    return r;
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
}

std::string report_to_text(const Report& r) {
  std::ostringstream out;
  out << "input: " << r.input << "\n";
  out << "dimension n = " << r.n << ", facets m = " << r.m << "\n";
  for (const auto& w : r.warnings) out << "warning: " << w << "\n";
  out << "degree" << std::setw(10) << "betti" << std::setw(10) << "mod2";
  if (r.closed_form) out << std::setw(14) << "closed-form";
  out << "\n";
  for (std::size_t q = 0; q < r.betti.size(); ++q) {
    out << std::setw(6) << q << std::setw(10) << r.betti[q] << std::setw(10)
        << (q < r.mod2_betti.size() ? r.mod2_betti[q] : 0);
    if (r.closed_form) out << std::setw(14) << r.closed_form->expected.at(q);
    out << "\n";
  }
  if (r.closed_form) out << "closed form: " << (r.closed_form->match ? "MATCH" : "MISMATCH") << "\n";
  out << "orientable: " << (r.orientable ? "yes" : "no");
  if (r.witness) out << " (witness S = " << members_text(*r.witness) << ", mask " << *r.witness << ")";
  out << "\n";
  out << "euler characteristic: " << r.euler << "\n";
  if (r.breakdown) {
    out << "per-subset contributions (nonzero reduced homology of K_{chi,S}):\n";
    for (const auto& e : *r.breakdown) {
      out << "  S = " << members_text(e.rows) << " (mask " << e.rows << "), |support| = "
          << e.support.size() << ":";
      for (const auto& [q, rank] : e.reduced.ranks)
        out << " H~_" << q << " = " << rank << " -> b_" << q + 1;
      out << "\n";
    }
  }
  out << "time: " << std::fixed << std::setprecision(3) << r.seconds << " s\n";
  return out.str();
}

ValidationReport validation_report(const Problem& problem) {
  ValidationReport report;
  report.labels = problem.complex.labels();
  if (problem.chi.cols() == problem.complex.vertex_count())
    report.faces = check_minors(problem.complex, problem.chi);
  try {
    report.warnings = validate(problem.complex, problem.chi).warnings();
  } catch (const ValidationError& e) {
    report.errors.emplace_back(e.what());
  }
  return report;
}

Json validation_to_json(const ValidationReport& report) {
  Json j;
  j["valid"] = report.valid();
  j["errors"] = report.errors;
  j["warnings"] = report.warnings;
  j["faces"] = Json::array();
  for (const auto& f : report.faces) {
    Json labels = Json::array();
    for (int v : f.face) labels.push_back(report.labels.at(v));
    j["faces"].push_back(Json{{"face", f.face}, {"labels", std::move(labels)},
                              {"nonsingular", f.nonsingular}});
  }
  return j;
}

std::string validation_to_text(const ValidationReport& report) {
  std::ostringstream out;
  for (const auto& f : report.faces)
    out << (f.nonsingular ? "ok    " : "FAIL  ") << face_labels(report.labels, f.face) << "\n";
  for (const auto& w : report.warnings) out << "warning: " << w << "\n";
  for (const auto& e : report.errors) out << "error: " << e << "\n";
  out << (report.valid() ? "valid" : "invalid") << "\n";
  return out.str();
}

Json covering_to_json(const CoveringCheck& c) {
  Json j;
  j["moment_angle_euler"] = big_to_json(c.moment_angle);
  j["sheets"] = big_to_json(c.sheets);
  j["manifold_euler"] = c.manifold;
  j["product"] = big_to_json(c.sheets * static_cast<long>(c.manifold));
  j["verdict"] = c.match ? "MATCH" : "MISMATCH";
  return j;
}

std::string covering_to_text(const CoveringCheck& c) {
  std::ostringstream out;
  out << "chi(Z_K(D^1,S^0)) = " << c.moment_angle.get_str() << "\n";
  out << "2^(m-n) * chi(N) = " << c.sheets.get_str() << " * " << c.manifold << " = "
      << mpz_class(c.sheets * static_cast<long>(c.manifold)).get_str() << "\n";
  out << (c.match ? "MATCH" : "MISMATCH") << "\n";
  return out.str();
}

Json secant_to_json(const SecantTable& table) {
  Json values = Json::array();
  for (const auto& a : table.values) values.push_back(big_to_json(a));
  return Json{{"secant", std::move(values)}};
}

std::string secant_to_text(const SecantTable& table) {
  std::ostringstream out;
  for (std::size_t i = 0; i < table.values.size(); ++i)
    out << "A_" << 2 * i << " = " << table.values[i].get_str() << "\n";
  return out.str();
}

}  // namespace realtoric
