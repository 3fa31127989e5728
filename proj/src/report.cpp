#include "colourcong/report.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace colourcong {

namespace {

using ordered_json = nlohmann::ordered_json;

template <class T>
std::optional<T> parse_number(std::string_view text) {
  T value{};
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return value;
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

ordered_json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

ordered_json range_json(InclusiveRange r) { return ordered_json::array({r.lo, r.hi}); }

ordered_json claim_json(const CongruenceClaim& c) {
  ordered_json j;
  j["label"] = c.label;
  j["c"] = c.r_slope;
  j["d"] = c.r_intercept;
  j["m"] = c.modulus;
  j["A"] = c.progression;
  j["residues"] = c.residues;
  j["k_range"] = range_json(c.k_range);
  j["n_range"] = range_json(c.n_range);
  return j;
}

ordered_json report_json(const VerificationReport& r, bool timing) {
  ordered_json j;
  j["claim"] = claim_json(r.claim);
  j["truncation_used"] = r.truncation_used;
  j["status"] = to_string(r.status);
  if (r.counterexample) {
    const auto& c = *r.counterexample;
    j["counterexample"] = {{"k", c.k},         {"n", c.n},         {"r", c.r},
                           {"B", c.residue},   {"index", c.index}, {"value", integer_json(c.value)}};
  }
  j["checked_count"] = r.checked_count;
  j["out_of_range_count"] = r.out_of_range_count;
  if (timing) j["wall_time_ms"] = r.wall_time_ms;
  return j;
}

std::string join(const std::vector<std::int64_t>& values, char sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

std::string colour_text(const CongruenceClaim& c) {
  if (c.r_slope == 0) return std::to_string(c.r_intercept);
  std::string s = std::to_string(c.r_slope) + "k";
  if (c.r_intercept > 0) s += "+" + std::to_string(c.r_intercept);
  if (c.r_intercept < 0) s += std::to_string(c.r_intercept);
  return s;
}

std::string status_upper(Status s) {
  auto t = to_string(s);
  for (auto& ch : t) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  return t;
}

ordered_json series_json(const LaurentSeries& s) {
  ordered_json coeffs = ordered_json::array();
  for (auto e = s.offset(); e <= s.bound(); ++e) coeffs.push_back(integer_json(s.coeff(e)));
  return {{"offset", s.offset()}, {"valid_to", s.bound()}, {"coefficients", std::move(coeffs)}};
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::optional<Format> parse_format(std::string_view text) {
  if (text == "json") return Format::json;
  if (text == "csv") return Format::csv;
  if (text == "plain") return Format::plain;
  return std::nullopt;
}

std::string_view to_string(Format f) {
  switch (f) {
    case Format::json: return "json";
    case Format::csv: return "csv";
    case Format::plain: return "plain";
  }
  return "?";
}

void RunConfig::validate() const {
  if (bound && *bound < min_bound) {
    throw std::invalid_argument("bound must be at least " + std::to_string(min_bound));
  }
  if (k_max && *k_max < 0) throw std::invalid_argument("--k-max must be non-negative");
  if (n_max && *n_max < 0) throw std::invalid_argument("--n-max must be non-negative");
}

ParseError::ParseError(std::string source, std::size_t line, const std::string& message)
    : std::runtime_error(source + (line ? ":" + std::to_string(line) : std::string()) + ": " +
                         message),
      source_(std::move(source)),
      line_(line) {}

std::vector<CongruenceClaim> parse_claims(std::istream& in, const std::string& source) {
  std::vector<CongruenceClaim> claims;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto text = trim(std::string_view(raw).substr(0, raw.find('#')));
    if (text.empty()) continue;
    auto fail = [&](const std::string& why) { throw ParseError(source, line_no, why); };

    std::istringstream fields(text);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.size() != 7) {
      fail("expected 7 fields 'c d m A B1[,B2...] kmin..kmax nmin..nmax', got " +
           std::to_string(tok.size()));
    }
    auto integer = [&](const std::string& t, const char* what) {
      auto v = parse_number<std::int64_t>(t);
      if (!v) fail(std::string("bad ") + what + " '" + t + "'");
      return *v;
    };
    auto range = [&](const std::string& t, const char* what) {
      const auto dots = t.find("..");
      if (dots == std::string::npos) fail(std::string("bad ") + what + " '" + t + "'");
      return InclusiveRange{integer(t.substr(0, dots), what), integer(t.substr(dots + 2), what)};
    };

    CongruenceClaim c;
    c.r_slope = integer(tok[0], "c");
    c.r_intercept = integer(tok[1], "d");
    const auto m = integer(tok[2], "m");
    if (m < 2) fail("modulus must be >= 2");
    c.modulus = static_cast<std::uint64_t>(m);
    c.progression = integer(tok[3], "A");
    std::istringstream list(tok[4]);
    for (std::string b; std::getline(list, b, ',');) c.residues.push_back(integer(b, "residue"));
    c.k_range = range(tok[5], "k range");
    c.n_range = range(tok[6], "n range");
    try {
      c.validate();
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
    c.label = source + ":" + std::to_string(line_no);
    claims.push_back(std::move(c));
  }
  if (claims.empty()) throw ParseError(source, 0, "no claims found");
  return claims;
}

std::vector<CongruenceClaim> load_claim_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  return parse_claims(in, path);
}

ProductSpec parse_product_spec(std::string_view text) {
  auto fail = [&](const std::string& why) {
    throw ParseError("product spec", 0, why + " in '" + std::string(text) + "'");
  };
  std::istringstream in{std::string(text)};
  ProductSpec spec;
  for (std::string tok; in >> tok;) {
    const auto close = tok.find(")^");
    if (tok.front() != '(' || close == std::string::npos) fail("factor '" + tok + "' is not (s)^e");
    const auto inner = tok.substr(1, close - 1);
    const auto exponent = parse_number<std::int64_t>(std::string_view(tok).substr(close + 2));
    if (!exponent) fail("bad exponent in '" + tok + "'");
    const auto comma = inner.find(',');
    const auto a = parse_number<Exponent>(std::string_view(inner).substr(0, comma));
    std::optional<Exponent> b = a;
    if (comma != std::string::npos) b = parse_number<Exponent>(std::string_view(inner).substr(comma + 1));
    if (!a || !b) fail("bad base in '" + tok + "'");
    if (*a < 1 || *b < 1) fail("factor bases must be positive");
    spec.general(*a, *b, *exponent);
  }
  if (spec.empty()) fail("no factors");
  return spec;
}

void apply_range_overrides(std::vector<CongruenceClaim>& claims, const RunConfig& config) {
  for (auto& c : claims) {
    if (config.k_max && c.r_slope != 0) c.k_range.hi = *config.k_max;
    if (config.n_max) c.n_range.hi = *config.n_max;
  }
}

int exit_code(const std::vector<VerificationReport>& reports) {
  bool inconclusive = false;
  for (const auto& r : reports) {
    if (r.status == Status::fail) return 1;
    if (r.status == Status::inconclusive) inconclusive = true;
  }
  return inconclusive ? 3 : 0;
}

std::string render_reports(const std::vector<VerificationReport>& reports, Format format,
                           bool timing) {
  std::ostringstream out;
  switch (format) {
    case Format::json: {
      ordered_json arr = ordered_json::array();
      for (const auto& r : reports) arr.push_back(report_json(r, timing));
      out << dump(arr);
      break;
    }
    case Format::csv: {
      out << "label,c,d,m,A,residues,k_min,k_max,n_min,n_max,truncation_used,status,"
             "checked_count,out_of_range_count,cex_k,cex_n,cex_r,cex_B,cex_index,cex_value";
      if (timing) out << ",wall_time_ms";
      out << "\n";
      for (const auto& r : reports) {
        const auto& c = r.claim;
        out << c.label << ',' << c.r_slope << ',' << c.r_intercept << ',' << c.modulus << ','
            << c.progression << ',' << join(c.residues, ';') << ',' << c.k_range.lo << ','
            << c.k_range.hi << ',' << c.n_range.lo << ',' << c.n_range.hi << ','
            << r.truncation_used << ',' << to_string(r.status) << ',' << r.checked_count << ','
            << r.out_of_range_count;
        if (r.counterexample) {
          const auto& x = *r.counterexample;
          out << ',' << x.k << ',' << x.n << ',' << x.r << ',' << x.residue << ',' << x.index
              << ',' << x.value.get_str();
        } else {
          out << ",,,,,,";
        }
        if (timing) out << ',' << std::fixed << std::setprecision(3) << r.wall_time_ms;
        out << "\n";
      }
      break;
    }
    case Format::plain: {
      for (const auto& r : reports) {
        const auto& c = r.claim;
        out << std::left << std::setw(14) << status_upper(r.status) << c.label << ": p_{"
            << colour_text(c) << "}(" << c.progression << "n+B) = 0 mod " << c.modulus
            << ", B in {" << join(c.residues, ',') << "}, k " << c.k_range.lo << ".."
            << c.k_range.hi << ", n " << c.n_range.lo << ".." << c.n_range.hi << "; bound "
            << r.truncation_used << ", " << r.checked_count << " checked";
        if (r.out_of_range_count) out << ", " << r.out_of_range_count << " beyond bound";
        if (timing) out << ", " << std::fixed << std::setprecision(1) << r.wall_time_ms << " ms";
        out << "\n";
        if (r.counterexample) {
          const auto& x = *r.counterexample;
          out << "  counterexample: k=" << x.k << " n=" << x.n << " r=" << x.r << " B="
              << x.residue << ": p_" << x.r << "(" << x.index << ") = " << x.value.get_str()
              << " mod " << c.modulus << "\n";
        }
      }
      std::size_t counts[3] = {0, 0, 0};
      for (const auto& r : reports) ++counts[static_cast<int>(r.status)];
      out << counts[0] << " pass, " << counts[1] << " fail, " << counts[2] << " inconclusive\n";
      break;
    }
  }
  return out.str();
}

std::string render_identity(const IdentityResult& r, Format format) {
  const std::string status = r.holds ? "pass" : "fail";
  std::ostringstream out;
  switch (format) {
    case Format::json: {
      ordered_json j;
      j["id"] = identity_name(r.id);
      j["ring"] = r.ring.to_string();
      j["requested_bound"] = r.requested_bound;
      j["validity_bound"] = r.validity_bound;
      j["status"] = status;
      if (r.first_difference) j["first_difference"] = *r.first_difference;
      out << dump(j);
      break;
    }
    case Format::csv:
      out << "id,ring,requested_bound,validity_bound,status,first_difference\n"
          << identity_name(r.id) << ',' << r.ring.to_string() << ',' << r.requested_bound << ','
          << r.validity_bound << ',' << status << ','
          << (r.first_difference ? std::to_string(*r.first_difference) : "") << "\n";
      break;
    case Format::plain:
      out << (r.holds ? "PASS" : "FAIL") << "  " << identity_name(r.id) << " over "
          << r.ring.to_string() << ", requested bound " << r.requested_bound
          << ", compared through q^" << r.validity_bound;
      if (r.first_difference) out << ", first difference at q^" << *r.first_difference;
      out << "\n";
      break;
  }
  return out.str();
}

std::string render_dissection(const DissectionReport& r, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::json: {
      ordered_json j;
      j["expression"] = r.expression;
      j["m"] = r.modulus;
      j["ring"] = r.ring.to_string();
      j["bound"] = r.bound;
      ordered_json comps = ordered_json::array();
      for (std::size_t i = 0; i < r.components.size(); ++i) {
        ordered_json c;
        c["j"] = i;
        c["zero"] = r.components[i].is_zero();
        c.update(series_json(r.components[i]));
        comps.push_back(std::move(c));
      }
      j["components"] = std::move(comps);
      out << dump(j);
      break;
    }
    case Format::csv:
      out << "j,exponent,coefficient\n";
      for (std::size_t i = 0; i < r.components.size(); ++i) {
        const auto& s = r.components[i];
        for (auto e = s.offset(); e <= s.bound(); ++e) {
          out << i << ',' << e << ',' << s.coeff(e).get_str() << "\n";
        }
      }
      break;
    case Format::plain:
      out << r.expression << " split into " << r.modulus << " progressions over " << r.ring.to_string()
          << ", bound " << r.bound << "\n";
      for (std::size_t i = 0; i < r.components.size(); ++i) {
        const auto& s = r.components[i];
        out << "j=" << i << (s.is_zero() ? " (zero)" : "") << ": " << s << "\n";
      }
      break;
  }
  return out.str();
}

std::string render_scan(const std::vector<ScanCandidate>& candidates, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::json: {
      ordered_json arr = ordered_json::array();
      for (const auto& c : candidates) {
        arr.push_back({{"r", c.claim.r_intercept},
                       {"m", c.claim.modulus},
                       {"A", c.claim.progression},
                       {"B", c.claim.residues.front()},
                       {"probes", c.probes},
                       {"unproven", c.unproven}});
      }
      out << dump(arr);
      break;
    }
    case Format::csv:
      out << "r,m,A,B,probes,unproven\n";
      for (const auto& c : candidates) {
        out << c.claim.r_intercept << ',' << c.claim.modulus << ',' << c.claim.progression << ','
            << c.claim.residues.front() << ',' << c.probes << ','
            << (c.unproven ? "true" : "false") << "\n";
      }
      break;
    case Format::plain:
      for (const auto& c : candidates) {
        out << "p_" << c.claim.r_intercept << "(" << c.claim.progression << "n+"
            << c.claim.residues.front() << ") = 0 mod " << c.claim.modulus << " for "
            << c.probes << " probed n" << (c.unproven ? " (unproven)" : "") << "\n";
      }
      out << candidates.size() << " candidates\n";
      break;
  }
  return out.str();
}

}  // namespace colourcong
