#include "genlab/report.hpp"

#include <charconv>
#include <cstdlib>
#include <ctime>
#include <sstream>

#include "genlab/enumeration.hpp"

namespace genlab {

std::string format_double(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, ptr);
}

std::string current_timestamp() {
  std::time_t t;
  if (const char* env = std::getenv("SOURCE_DATE_EPOCH")) {
    t = static_cast<std::time_t>(std::atoll(env));
  } else {
    t = std::time(nullptr);
  }
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Json to_json(const Interval& iv) {
  return Json{{"kind", "interval"},
              {"lo", iv.lo},
              {"hi", iv.unbounded() ? Json("unbounded") : Json(iv.hi)}};
}

Json to_json(const EscapePoint& pt) {
  Json j{{"block", pt.block},
         {"log_position", pt.log_position},
         {"log_index", pt.log_index}};
  if (pt.position) j["position"] = *pt.position;
  if (pt.index) j["index"] = *pt.index;
  return j;
}

Json to_json(const DivergenceCertificate& cert) {
  if (const auto* ps = std::get_if<PartialSumDivergence>(&cert)) {
    return Json{{"kind", "partial_sum_divergence"},
                {"exponent", ps->exponent},
                {"block", ps->block},
                {"growth", ps->form == GrowthForm::kHarmonicLog ? "harmonic_log" : "linear"},
                {"scale", ps->scale},
                {"skip", ps->skip},
                {"note", ps->note}};
  }
  if (const auto* nv = std::get_if<NonVanishingDivergence>(&cert)) {
    return Json{{"kind", "non_vanishing"},
                {"block", nv->block},
                {"floor_abs", nv->floor_abs},
                {"skip", nv->skip},
                {"note", nv->note}};
  }
  const auto& rb = std::get<RadialBlowupDivergence>(cert);
  return Json{{"kind", "radial_blowup"},
              {"q", rb.q},
              {"gamma", rb.gamma},
              {"omega", rb.omega},
              {"coeff_abs", rb.coeff_abs},
              {"window", rb.window},
              {"dominance", rb.dominance_one_minus_r},
              {"note", rb.note}};
}

Json to_json(const Verdict& v) {
  if (const auto* in = std::get_if<CertifiedIn>(&v)) {
    return Json{{"kind", "verdict"},
                {"verdict", "certified_in"},
                {"upper_bound", in->upper_bound},
                {"derivation", in->derivation}};
  }
  if (const auto* out = std::get_if<CertifiedOut>(&v)) {
    return Json{{"kind", "verdict"}, {"verdict", "certified_out"}, {"evidence", to_json(out->evidence)}};
  }
  const auto& u = std::get<Undetermined>(v);
  return Json{{"kind", "verdict"},
              {"verdict", "undetermined"},
              {"partial_sum", u.partial_sum},
              {"truncation", u.truncation}};
}

Json to_json(const EscapeRecord& rec) {
  return Json{{"kind", "escape"},
              {"point", to_json(rec.point)},
              {"threshold", rec.threshold},
              {"f_psum_bound", rec.f_psum_bound},
              {"required", rec.required},
              {"derivation", rec.derivation}};
}

Json to_json(const RadialSample& s) {
  return Json{{"t", s.t}, {"r", s.r}, {"value", s.value}, {"error", s.error}, {"flagged", s.flagged}};
}

Json to_json(const GrowthReport& g) {
  Json rows = Json::array();
  for (const RadialSample& s : g.trace) rows.push_back(to_json(s));
  Json thresholds = Json::array();
  for (const ThresholdCrossing& c : g.thresholds) {
    Json jc{{"threshold", c.threshold}};
    jc["first_t"] = c.first_t ? Json(*c.first_t) : Json();
    Json inside = Json::array();
    for (bool b : c.inside) inside.push_back(b);
    jc["inside"] = inside;
    thresholds.push_back(jc);
  }
  Json j{{"kind", "radial_trace"}, {"rows", rows}, {"thresholds", thresholds}};
  j["slope"] = g.slope ? Json(*g.slope) : Json();
  j["any_flagged"] = g.any_flagged;
  return j;
}

Json to_json(const QuadratureResult& q) {
  Json j{{"kind", "quadrature"},
         {"value", q.value},
         {"error_estimate", q.error_estimate},
         {"panels", q.panels},
         {"flagged", q.flagged}};
  if (!q.flag_reason.empty()) j["flag_reason"] = q.flag_reason;
  Json trace = Json::array();
  for (const auto& [panels, value] : q.refinement_trace) {
    trace.push_back(Json{{"panels", panels}, {"value", value}});
  }
  j["refinement_trace"] = trace;
  return j;
}

Json ExperimentReport::to_json() const {
  Json j;
  j["command"] = command;
  Json params;
  for (const auto& [k, v] : parameters) params[k] = v;
  j["parameters"] = params;
  j["results"] = results;
  j["versions"] = Json{{"artifact", kArtifactVersion},
                       {"enumeration_scheme", kEnumerationSchemeVersion}};
  j["timestamp"] = timestamp;
  return j;
}

ExperimentReport ExperimentReport::from_json(const Json& j) {
  ExperimentReport r;
  r.command = j.at("command").get<std::string>();
  for (const auto& [k, v] : j.at("parameters").items()) {
    r.parameters[k] = v.get<std::string>();
  }
  for (const auto& entry : j.at("results")) r.results.push_back(entry);
  r.timestamp = j.at("timestamp").get<std::string>();
  return r;
}

std::string ExperimentReport::serialize() const { return to_json().dump(2) + "\n"; }

std::string to_csv(const RadialTraceCsv& trace) {
  std::ostringstream os;
  os << "t,r,value,log_inv_one_minus_r,log_value,flagged\n";
  for (const RadialSample& s : trace.rows) {
    os << s.t << ',' << format_double(s.r) << ',' << format_double(s.value) << ','
       << format_double(std::log(1.0 / (1.0 - s.r))) << ','
       << format_double(s.value > 0.0 ? std::log(s.value) : -kInf) << ',' << (s.flagged ? 1 : 0)
       << '\n';
  }
  return os.str();
}

std::string to_csv(const IndexTraceCsv& trace) {
  std::ostringstream os;
  os << "K,partial_sum,lower_bound\n";
  for (const auto& row : trace.rows) {
    os << row.position << ',' << format_double(row.partial_sum) << ','
       << format_double(row.lower_bound) << '\n';
  }
  return os.str();
}

std::optional<std::string> emit_plot_data(const ExperimentReport& report) {
  RadialTraceCsv radial;
  IndexTraceCsv index;
  for (const Json& entry : report.results) {
    if (!entry.is_object() || !entry.contains("kind")) continue;
    const std::string kind = entry["kind"].get<std::string>();
    if (kind == "radial_trace") {
      for (const Json& row : entry["rows"]) {
        radial.rows.push_back({row["t"].get<int>(), row["r"].get<double>(),
                               row["value"].get<double>(), row["error"].get<double>(),
                               row["flagged"].get<bool>()});
      }
    } else if (kind == "index_trace") {
      for (const Json& row : entry["rows"]) {
        index.rows.push_back({row["K"].get<std::uint64_t>(), row["partial_sum"].get<double>(),
                              row["lower_bound"].get<double>()});
      }
    }
  }
  if (radial.rows.empty() && index.rows.empty()) return std::nullopt;
  if (!radial.rows.empty()) return to_csv(radial);
  return to_csv(index);
}

}  // namespace genlab
