#include "glaisher/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <tuple>

namespace glaisher {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

std::string opt_int(const std::optional<int>& v) {
  return v ? std::to_string(*v) : std::string("null");
}

std::string opt_double(const std::optional<double>& v) {
  return v ? fmt17(*v) : std::string("null");
}

}  // namespace

std::string report_to_json(const VerificationReport& r) {
  std::ostringstream os;
  os << "{\"family\":\"" << json_escape(r.family) << "\",\"n\":" << opt_int(r.n)
     << ",\"a\":" << opt_double(r.a) << ",\"k\":" << opt_int(r.k)
     << ",\"lhs_re\":" << fmt17(r.lhs.real()) << ",\"lhs_im\":" << fmt17(r.lhs.imag())
     << ",\"rhs_re\":" << fmt17(r.rhs.real()) << ",\"rhs_im\":" << fmt17(r.rhs.imag())
     << ",\"abs_err\":" << fmt17(r.abs_err) << ",\"tol\":" << fmt17(r.tol)
     << ",\"pass\":" << (r.pass ? "true" : "false") << ",\"evals\":" << r.evaluations
     << ",\"runtime_ms\":" << fmt17(r.runtime_ms) << ",\"notes\":[";
  for (size_t i = 0; i < r.notes.size(); ++i) {
    if (i) os << ",";
    os << "\"" << json_escape(r.notes[i]) << "\"";
  }
  os << "]}";
  return os.str();
}

std::string reports_to_json(const std::vector<VerificationReport>& rs) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < rs.size(); ++i) {
    if (i) os << ",\n ";
    os << report_to_json(rs[i]);
  }
  os << "]";
  return os.str();
}

std::string report_csv_header() {
  return "family,n,a,k,lhs_re,lhs_im,rhs_re,rhs_im,abs_err,tol,pass,evals,notes";
}

std::string report_to_csv(const VerificationReport& r) {
  std::ostringstream os;
  os << r.family << "," << (r.n ? std::to_string(*r.n) : "") << ","
     << (r.a ? fmt17(*r.a) : "") << "," << (r.k ? std::to_string(*r.k) : "") << ","
     << fmt17(r.lhs.real()) << "," << fmt17(r.lhs.imag()) << "," << fmt17(r.rhs.real())
     << "," << fmt17(r.rhs.imag()) << "," << fmt17(r.abs_err) << "," << fmt17(r.tol)
     << "," << (r.pass ? "true" : "false") << "," << r.evaluations << ",";
  std::string joined;
  for (size_t i = 0; i < r.notes.size(); ++i) {
    if (i) joined += "; ";
    joined += r.notes[i];
  }
  if (joined.find(',') != std::string::npos || joined.find('"') != std::string::npos) {
    std::string quoted = "\"";
    for (char c : joined) {
      if (c == '"') quoted += '"';
      quoted += c;
    }
    quoted += "\"";
    joined = quoted;
  }
  os << joined;
  return os.str();
}

namespace {

std::string fmt10(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

}  // namespace

std::string report_to_text(const VerificationReport& r) {
  std::ostringstream os;
  os << r.family;
  if (r.n) os << " n=" << *r.n;
  if (r.a) os << " a=" << fmt10(*r.a);
  if (r.k) os << " k=" << *r.k;
  os << ": lhs=" << fmt10(r.lhs.real());
  if (r.lhs.imag() != 0.0) os << (r.lhs.imag() < 0 ? "" : "+") << fmt10(r.lhs.imag()) << "i";
  os << " rhs=" << fmt10(r.rhs.real());
  if (r.rhs.imag() != 0.0) os << (r.rhs.imag() < 0 ? "" : "+") << fmt10(r.rhs.imag()) << "i";
  os << " abs_err=" << fmt10(r.abs_err) << " tol=" << fmt10(r.tol)
     << (r.pass ? " PASS" : " FAIL") << " evals=" << r.evaluations;
  for (const auto& note : r.notes) os << "\n    note: " << note;
  return os.str();
}

void sort_reports(std::vector<VerificationReport>& rs) {
  std::stable_sort(rs.begin(), rs.end(),
                   [](const VerificationReport& x, const VerificationReport& y) {
                     return std::make_tuple(x.family, x.n.value_or(0), x.a.value_or(0.0),
                                            x.k.value_or(0)) <
                            std::make_tuple(y.family, y.n.value_or(0), y.a.value_or(0.0),
                                            y.k.value_or(0));
                   });
}

}  // namespace glaisher
