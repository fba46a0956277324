#include "kstab/report.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>

#include "kstab/invariants.hpp"
#include "kstab/quantized.hpp"

namespace kstab {

Format parse_format(std::string_view s) {
  if (s == "json") return Format::Json;
  if (s == "text") return Format::Text;
  if (s == "csv") return Format::Csv;
  throw Error(ErrorCode::InvalidArgument, "unknown format '" + std::string(s) + "' (json, text or csv)");
}

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotFano:
    case ErrorCode::NotPrimitive:
    case ErrorCode::OriginNotInterior:
    case ErrorCode::NotFullDimensional:
      return 2;
    case ErrorCode::DimensionCap:
    case ErrorCode::OverflowGuard:
      return 3;
    case ErrorCode::OracleMismatch:
      return 4;
    default:
      return 1;
  }
}

namespace {

ojson check_entry(const char* name, const Rat& closed, const ToricValuation& witness, const oracle::Sampled& s) {
  ojson c;
  c["check"] = name;
  c["closed_form"] = rational_json(closed);
  c["witness"] = witness.u();
  c["sampled"] = rational_json(s.value);
  c["sampled_witness"] = s.witness;
  c["attained"] = s.value == closed;
  c["ok"] = s.value >= closed;
  return c;
}

}  // namespace

OracleSection oracle_section(const ToricFano& x, int radius) {
  OracleSection out;
  ojson checks = ojson::array();
  std::size_t directions = 0;

  const auto d = delta(x);
  const auto a = alpha_bound(x);
  const auto m = uniform_margin_with_witness(x);
  const std::tuple<const char*, oracle::Functional, const Extremum*> closed[] = {
      {"delta", oracle::Functional::AOverS, &d},
      {"alpha_bound", oracle::Functional::AOverTau, &a},
      {"uniform_margin", oracle::Functional::BetaOverJ, &m},
  };
  for (const auto& [name, f, e] : closed) {
    const auto s = oracle::sampled_infimum(x, f, radius);
    directions = s.directions;
    checks.push_back(check_entry(name, e->value, e->witness, s));
    if (!checks.back()["ok"].get<bool>() && !out.counterexample) {
      out.counterexample = oracle::counterexample_document(x, name, s.witness);
    }
  }

  for (const auto& ray : x.rays()) {
    const auto p = profile(x, ToricValuation(ray));
    ojson c;
    c["check"] = "curve_integral";
    c["ray"] = ray;
    c["exact"] = rational_json(p.curve.integral());
    c["numeric"] = oracle::midpoint_integral(p.curve);
    bool ok = true;
    try {
      ok = oracle::numeric_curve_integral(p.curve) == x.degree() * p.S;
    } catch (const Error&) {
      ok = false;
    }
    c["ok"] = ok;
    checks.push_back(std::move(c));
    if (!ok && !out.counterexample) out.counterexample = oracle::counterexample_document(x, "curve_integral", ray);
  }

  out.json["radius"] = radius;
  out.json["sampled_directions"] = directions;
  out.json["ok"] = !out.counterexample.has_value();
  out.json["checks"] = std::move(checks);
  return out;
}

ojson report_json(const ToricFano& x, const ReportOptions& opt, OracleSection* oracle) {
  const StabilityReport r = verdict(x, opt.search_radius);
  const auto margin = uniform_margin_with_witness(x);
  ojson j;
  j["name"] = x.name();
  j["dim"] = x.dim();
  j["rays"] = x.rays();
  j["degree"] = rational_json(x.degree());
  j["cartier_index"] = x.cartier_index();
  j["barycenter"] = rational_vector_json(x.barycenter());
  j["delta"] = {{"value", rational_json(r.delta)}, {"witness", r.delta_witness.u()}};
  j["alpha_bound"] = {{"value", rational_json(r.alpha_bound)}, {"witness", r.alpha_witness.u()}};
  j["uniform_margin"] = rational_json(r.uniform_margin);
  j["uniform_margin_witness"] = margin.witness.u();
  j["uniform_epsilon"] = rational_json(r.uniform_epsilon);
  j["verdict"] = to_string(r.verdict);
  j["assumption_note"] = r.assumption_note;
  j["search_radius"] = r.search_radius;
  j["sampled_directions"] = r.sampled_directions;
  ojson rows = ojson::array();
  for (const auto& p : r.per_ray_profiles) {
    ojson row;
    row["ray"] = p.u.u();
    row["A"] = rational_json(p.A);
    row["tau"] = rational_json(p.tau);
    row["S"] = rational_json(p.S);
    row["beta"] = rational_json(p.beta);
    row["j"] = rational_json(p.j);
    rows.push_back(std::move(row));
  }
  j["per_ray"] = std::move(rows);
  if (opt.oracle) {
    OracleSection o = oracle_section(x, opt.search_radius);
    j["oracle"] = o.json;
    if (oracle) *oracle = std::move(o);
  }
  return j;
}

namespace {

bool is_scalar_array(const ojson& a) {
  if (!a.is_array()) return false;
  for (const auto& e : a) {
    if (e.is_structured()) return false;
  }
  return true;
}

std::string scalar_text(const ojson& v) {
  if (v.is_string()) return v.get<std::string>();
  if (is_scalar_array(v)) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ",";
      s += scalar_text(v[i]);
    }
    return s + "]";
  }
  return v.dump();
}

void flatten(const ojson& v, const std::string& path, std::vector<std::pair<std::string, std::string>>& out) {
  if (v.is_object()) {
    for (const auto& [key, value] : v.items()) flatten(value, path.empty() ? key : path + "." + key, out);
  } else if (v.is_array() && !is_scalar_array(v)) {
    for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], path + "[" + std::to_string(i) + "]", out);
  } else {
    out.emplace_back(path, scalar_text(v));
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

// Indented JSON with vectors kept on one line.
void pretty(const ojson& v, int depth, std::string& out) {
  const std::string pad(2 * static_cast<std::size_t>(depth + 1), ' ');
  if (v.is_object() && !v.empty()) {
    out += "{\n";
    std::size_t i = 0;
    for (const auto& [key, value] : v.items()) {
      out += pad + ojson(key).dump() + ": ";
      pretty(value, depth + 1, out);
      out += ++i < v.size() ? ",\n" : "\n";
    }
    out += std::string(2 * static_cast<std::size_t>(depth), ' ') + "}";
  } else if (v.is_array() && !is_scalar_array(v)) {
    out += "[\n";
    for (std::size_t i = 0; i < v.size(); ++i) {
      out += pad;
      pretty(v[i], depth + 1, out);
      out += i + 1 < v.size() ? ",\n" : "\n";
    }
    out += std::string(2 * static_cast<std::size_t>(depth), ' ') + "]";
  } else {
    out += v.dump();
  }
}

}  // namespace

std::string render(const ojson& doc, Format f) {
  if (f == Format::Json) {
    std::string out;
    pretty(doc, 0, out);
    return out + "\n";
  }
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(doc, "", rows);
  std::string out;
  if (f == Format::Csv) {
    out = "field,value\n";
    for (const auto& [k, v] : rows) out += csv_field(k) + "," + csv_field(v) + "\n";
  } else {
    for (const auto& [k, v] : rows) out += k + ": " + v + "\n";
  }
  return out;
}

std::vector<DeltaKRow> deltak_table(const ToricFano& x, const std::vector<std::int64_t>& ks, int radius) {
  const Rat d = delta(x).value;
  std::vector<DeltaKRow> rows;
  for (auto k : ks) {
    if (k <= 0) throw Error(ErrorCode::InvalidArgument, "k values must be positive");
    const DeltaK dk = delta_k(x, k, radius);
    rows.push_back(DeltaKRow{k, dk.n_k, dk.sk_at_witness, dk.value, dk.witness.u(), d - dk.value,
                             !x.divides_index(k)});
  }
  return rows;
}

std::string deltak_csv(const std::vector<DeltaKRow>& rows) {
  std::string out = "k,N_k,S_k,delta_k,witness,gap,warning\n";
  for (const auto& r : rows) {
    std::string w;
    for (std::size_t i = 0; i < r.witness.size(); ++i) w += (i ? "," : "") + std::to_string(r.witness[i]);
    out += std::to_string(r.k) + "," + std::to_string(r.n_k) + "," + to_string(r.sk_at_witness) + "," +
           to_string(r.delta_k) + "," + csv_field(w) + "," + to_string(r.gap) + "," +
           (r.index_warning ? "k not a multiple of the Cartier index" : "") + "\n";
  }
  return out;
}

ojson deltak_json(const std::vector<DeltaKRow>& rows) {
  ojson out = ojson::array();
  for (const auto& r : rows) {
    ojson row;
    row["k"] = r.k;
    row["N_k"] = r.n_k;
    row["S_k"] = rational_json(r.sk_at_witness);
    row["delta_k"] = rational_json(r.delta_k);
    row["witness"] = r.witness;
    row["gap"] = rational_json(r.gap);
    row["index_warning"] = r.index_warning;
    out.push_back(std::move(row));
  }
  return out;
}

ojson curve_json(const ToricFano& x, const LatticeVec& u, const Rat& eps) {
  const ToricValuation v(u);
  const auto p = profile(x, v);
  const auto ok = okounkov_barycenter_check(x, v, eps);
  ojson j;
  j["name"] = x.name();
  j["u"] = u;
  j["A"] = rational_json(p.A);
  j["tau"] = rational_json(p.tau);
  j["degree"] = rational_json(x.degree());
  j["breakpoints"] = ojson::array();
  for (const auto& b : p.curve.breakpoints()) j["breakpoints"].push_back(rational_json(b));
  ojson pieces = ojson::array();
  const auto& bps = p.curve.breakpoints();
  for (std::size_t i = 0; i < p.curve.pieces().size(); ++i) {
    ojson piece;
    piece["from"] = rational_json(bps[i]);
    piece["to"] = rational_json(bps[i + 1]);
    piece["coefficients"] = rational_vector_json(p.curve.pieces()[i].coefficients());
    pieces.push_back(std::move(piece));
  }
  j["coefficient_order"] = "ascending powers of x";
  j["pieces"] = std::move(pieces);
  j["integral"] = rational_json(p.curve.integral());
  j["okounkov"] = {{"eps", rational_json(eps)},
                   {"b1", rational_json(ok.b1)},
                   {"hammer_upper", rational_json(ok.hammer_upper)},
                   {"slice_identity_ok", ok.slice_identity_ok},
                   {"curve_ratio", rational_json(ok.curve_ratio)}};
  return j;
}

std::string curve_samples_csv(const ToricFano& x, const LatticeVec& u, int samples) {
  if (samples < 1) throw Error(ErrorCode::InvalidArgument, "samples must be positive");
  const auto p = profile(x, ToricValuation(u));
  const Rat w = p.curve.width();
  std::string out = "x,vol\n";
  char buf[64];
  for (int i = 0; i <= samples; ++i) {
    const Rat t = w * Rat(i, samples);
    std::snprintf(buf, sizeof buf, "%.12g,%.12g\n", to_double(t), to_double(p.curve(t)));
    out += buf;
  }
  return out;
}

ojson catalog_listing() {
  ojson out = ojson::array();
  for (const auto& name : catalog_names()) {
    out.push_back({{"name", name}, {"description", catalog_description(name)}});
  }
  return out;
}

CorpusGate corpus_gate(const oracle::CorpusSpec& spec, int radius) {
  const auto corpus = oracle::random_fano_corpus(spec);
  CorpusGate gate;
  std::size_t checks = 0;
  ojson failures = ojson::array();
  for (const auto& x : corpus) {
    auto o = oracle_section(x, radius);
    for (const auto& c : o.json["checks"]) {
      ++checks;
      if (!c["ok"].get<bool>()) failures.push_back({{"instance", x.name()}, {"check", c}});
    }
    if (o.counterexample) gate.counterexamples.push_back(std::move(*o.counterexample));
  }
  gate.json["seed"] = spec.seed;
  gate.json["dim"] = spec.dim;
  gate.json["instances"] = corpus.size();
  gate.json["radius"] = radius;
  gate.json["checks"] = checks;
  gate.json["ok"] = failures.empty();
  gate.json["failures"] = std::move(failures);
  return gate;
}

std::vector<std::int64_t> parse_int_list(std::string_view s) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const auto comma = std::min(s.find(',', pos), s.size());
    const auto tok = s.substr(pos, comma - pos);
    std::int64_t v = 0;
    const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || end != tok.data() + tok.size()) {
      throw Error(ErrorCode::MalformedInput, "expected a comma-separated integer list, got '" + std::string(s) + "'");
    }
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

}  // namespace kstab
