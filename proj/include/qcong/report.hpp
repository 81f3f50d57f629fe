#ifndef QCONG_REPORT_HPP
#define QCONG_REPORT_HPP

// Text, JSON and CSV renderings of sweep results.
//
// Per-case columns: theorem, p, k, s, m, power, strategy, passed,
// residue_degree, lhs_degree, elapsed_ms, note. A zero residue or zero left
// side has degree "zero". JSON additionally carries the residue itself as
// decimal coefficient strings so that a summary re-parses to an equal value.

#include "qcong/sweep.hpp"

#include <json.hpp>

#include <ostream>
#include <sstream>
#include <string>

namespace qcong {

using nlohmann::json;

namespace detail {

inline json degree_to_json(const std::optional<std::size_t> &d) {
  return d ? json(*d) : json("zero");
}

inline std::optional<std::size_t> degree_from_json(const json &j) {
  if (j.is_string()) {
    if (j.get<std::string>() != "zero") throw std::invalid_argument("bad degree value");
    return std::nullopt;
  }
  return j.get<std::size_t>();
}

inline std::string degree_to_text(const std::optional<std::size_t> &d) {
  return d ? std::to_string(*d) : "zero";
}

} // namespace detail

inline json to_json(const VerificationReport &r) {
  json residue = json::array();
  for (const auto &c : r.residue.coeffs()) residue.push_back(c.get_str());
  return json{
      {"theorem", std::string(to_string(r.case_.theorem))},
      {"p", r.case_.p},
      {"k", r.case_.k},
      {"s", r.case_.s},
      {"m", r.case_.m},
      {"power", r.case_.power},
      {"strategy", std::string(to_string(r.strategy))},
      {"passed", r.passed},
      {"residue_degree", detail::degree_to_json(r.residue_degree)},
      {"lhs_degree", detail::degree_to_json(r.lhs_degree)},
      {"elapsed_ms", r.elapsed.count()},
      {"note", r.note},
      {"residue", residue},
  };
}

inline VerificationReport report_from_json(const json &j) {
  VerificationReport r;
  auto theorem = parse_theorem(j.at("theorem").get<std::string>());
  auto strategy = parse_strategy(j.at("strategy").get<std::string>());
  if (!theorem || !strategy) throw std::invalid_argument("unknown theorem or strategy in report");
  r.case_ = CongruenceCase{*theorem,           j.at("p").get<std::int64_t>(),
                           j.at("k").get<std::int64_t>(), j.at("s").get<std::int64_t>(),
                           j.at("m").get<std::int64_t>(), j.at("power").get<int>()};
  r.strategy = *strategy;
  r.passed = j.at("passed").get<bool>();
  r.residue_degree = detail::degree_from_json(j.at("residue_degree"));
  r.lhs_degree = detail::degree_from_json(j.at("lhs_degree"));
  r.elapsed = std::chrono::milliseconds(j.at("elapsed_ms").get<std::int64_t>());
  r.note = j.at("note").get<std::string>();
  std::vector<Integer> coeffs;
  for (const auto &c : j.at("residue")) coeffs.emplace_back(c.get<std::string>());
  r.residue = IntPoly(std::move(coeffs));
  return r;
}

inline json to_json(const SweepSummary &s) {
  json cases = json::array();
  for (const auto &r : s.reports) cases.push_back(to_json(r));
  return json{
      {"theorem", std::string(to_string(s.theorem))},
      {"total_cases", s.total_cases},
      {"passed", s.passed},
      {"failed", s.failed},
      {"skipped_nonprime", s.skipped_nonprime},
      {"skipped_constraint", s.skipped_constraint},
      {"wall_time_ms", s.wall_time.count()},
      {"cases", cases},
  };
}

inline SweepSummary summary_from_json(const json &j) {
  SweepSummary s;
  auto theorem = parse_theorem(j.at("theorem").get<std::string>());
  if (!theorem) throw std::invalid_argument("unknown theorem in summary");
  s.theorem = *theorem;
  s.total_cases = j.at("total_cases").get<std::size_t>();
  s.passed = j.at("passed").get<std::size_t>();
  s.failed = j.at("failed").get<std::size_t>();
  s.skipped_nonprime = j.at("skipped_nonprime").get<std::size_t>();
  s.skipped_constraint = j.at("skipped_constraint").get<std::size_t>();
  s.wall_time = std::chrono::milliseconds(j.at("wall_time_ms").get<std::int64_t>());
  for (const auto &c : j.at("cases")) s.reports.push_back(report_from_json(c));
  return s;
}

inline constexpr const char *csv_header =
    "theorem,p,k,s,m,power,strategy,passed,residue_degree,lhs_degree,elapsed_ms,note";

inline void write_csv(std::ostream &os, const SweepSummary &s) {
  os << csv_header << '\n';
  for (const auto &r : s.reports) {
    const auto &c = r.case_;
    os << to_string(c.theorem) << ',' << c.p << ',' << c.k << ',' << c.s << ',' << c.m << ','
       << c.power << ',' << to_string(r.strategy) << ',' << (r.passed ? "true" : "false") << ','
       << detail::degree_to_text(r.residue_degree) << ',' << detail::degree_to_text(r.lhs_degree)
       << ',' << r.elapsed.count() << ',' << r.note << '\n';
  }
}

inline void write_text(std::ostream &os, const SweepSummary &s) {
  for (const auto &r : s.reports) {
    const auto &c = r.case_;
    os << (r.passed ? "PASS " : "FAIL ") << to_string(c.theorem) << " p=" << c.p << " k=" << c.k
       << " s=" << c.s << " m=" << c.m << " power=" << c.power
       << " strategy=" << to_string(r.strategy)
       << " residue_degree=" << detail::degree_to_text(r.residue_degree)
       << " lhs_degree=" << detail::degree_to_text(r.lhs_degree) << " elapsed_ms=" << r.elapsed.count();
    if (!r.note.empty()) os << " note=" << r.note;
    os << '\n';
  }
  os << "summary: " << to_string(s.theorem) << " total=" << s.total_cases << " passed=" << s.passed
     << " failed=" << s.failed << " skipped_nonprime=" << s.skipped_nonprime
     << " skipped_constraint=" << s.skipped_constraint << " wall_ms=" << s.wall_time.count() << '\n';
}

inline void write_report(std::ostream &os, const SweepSummary &s, OutputFormat format) {
  switch (format) {
  case OutputFormat::text: write_text(os, s); break;
  case OutputFormat::json: os << to_json(s).dump(2) << '\n'; break;
  case OutputFormat::csv: write_csv(os, s); break;
  }
}

} // namespace qcong

#endif // QCONG_REPORT_HPP
