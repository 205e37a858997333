#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <thread>

#include "coulomb/cli/cli.hpp"
#include "coulomb/error.hpp"
#include "coulomb/exactref.hpp"
#include "coulomb/wkb.hpp"

namespace coulomb::cli {

std::string_view to_string(Backend backend) {
  switch (backend) {
    case Backend::kWkb: return "wkb";
    case Backend::kExact: return "exact";
    case Backend::kBoth: return "both";
  }
  return "?";
}

void validate(const SweepSpec& spec) {
  if (!(spec.rho_min > 0.0)) throw UsageError("--rho-min must be positive");
  if (!(spec.rho_max >= spec.rho_min)) throw UsageError("--rho-max must not be below --rho-min");
  if (spec.rho_points < 2) throw UsageError("--rho-points must be at least 2");
  if (!(std::abs(spec.rho_arg) < kPi)) throw UsageError("--rho-arg must lie in (-pi, pi)");
  for (complex z : {spec.ell, spec.eta}) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw UsageError("parameters must be finite");
  }
}

std::vector<complex> rho_grid(const SweepSpec& spec) {
  validate(spec);
  std::vector<complex> out;
  out.reserve(static_cast<std::size_t>(spec.rho_points));
  const double step = (spec.rho_max - spec.rho_min) / (spec.rho_points - 1);
  for (int k = 0; k < spec.rho_points; ++k) {
    const double r = k + 1 == spec.rho_points ? spec.rho_max : spec.rho_min + step * k;
    out.push_back(std::polar(r, spec.rho_arg));
  }
  return out;
}

CoulombQuad EvaluationRecord::quad() const {
  return {{f_re, f_im}, {fp_re, fp_im}, {g_re, g_im}, {gp_re, gp_im}};
}

bool EvaluationRecord::failed() const { return std::isnan(wronskian_error); }

Evaluator wkb_evaluator() {
  return [](const ComplexParams& p) { return wkb::wkb_quad(p); };
}

Evaluator exact_evaluator() {
  return [](const ComplexParams& p) { return exact::exact_quad(p); };
}

namespace {

EvaluationRecord make_record(complex rho, const CoulombQuad& q, std::string_view backend) {
  EvaluationRecord r;
  r.rho_re = rho.real();
  r.rho_im = rho.imag();
  r.f_re = q.f.real();
  r.f_im = q.f.imag();
  r.fp_re = q.fp.real();
  r.fp_im = q.fp.imag();
  r.g_re = q.g.real();
  r.g_im = q.g.imag();
  r.gp_re = q.gp.real();
  r.gp_im = q.gp.imag();
  r.backend = backend;
  r.wronskian_error = std::abs(r.quad().wronskian() - 1.0);
  return r;
}

double parse_double(std::string_view text) {
  if (text == "nan") return std::numeric_limits<double>::quiet_NaN();
  if (text == "inf") return std::numeric_limits<double>::infinity();
  if (text == "-inf") return -std::numeric_limits<double>::infinity();
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::runtime_error("bad number in CSV: " + std::string(text));
  }
  return value;
}

}  // namespace

std::vector<EvaluationRecord> evaluate_grid(complex ell, complex eta, const std::vector<complex>& rhos,
                                            const Evaluator& evaluator, std::string_view backend_name,
                                            std::vector<std::string>* errors, unsigned threads) {
  std::vector<EvaluationRecord> records(rhos.size());
  std::vector<std::string> messages(rhos.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < rhos.size(); i = next++) {
      try {
        records[i] = make_record(rhos[i], evaluator({ell, eta, rhos[i], Omega::kPlus}), backend_name);
      } catch (const std::exception& e) {
        const CoulombQuad nan_quad{complex{NAN, NAN}, complex{NAN, NAN}, complex{NAN, NAN},
                                   complex{NAN, NAN}};
        records[i] = make_record(rhos[i], nan_quad, backend_name);
        messages[i] = e.what();
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, rhos.size())));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  if (errors) {
    for (std::size_t i = 0; i < rhos.size(); ++i) {
      if (!messages[i].empty()) {
        errors->push_back(std::string(backend_name) + " at rho = (" + format_double(rhos[i].real()) + ", " +
                          format_double(rhos[i].imag()) + "): " + messages[i]);
      }
    }
  }
  return records;
}

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
  return std::string(buf, ptr);
}

void write_csv(std::ostream& out, const std::vector<EvaluationRecord>& records) {
  out << kCsvHeader << '\n';
  for (const auto& r : records) {
    for (double v : {r.rho_re, r.rho_im, r.f_re, r.f_im, r.fp_re, r.fp_im, r.g_re, r.g_im, r.gp_re, r.gp_im}) {
      out << format_double(v) << ',';
    }
    out << r.backend << ',' << format_double(r.wronskian_error) << '\n';
  }
}

std::vector<EvaluationRecord> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) throw std::runtime_error("missing CSV header");
  std::vector<EvaluationRecord> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string_view> fields;
    std::string_view rest = line;
    for (std::size_t comma; (comma = rest.find(',')) != std::string_view::npos; rest.remove_prefix(comma + 1)) {
      fields.push_back(rest.substr(0, comma));
    }
    fields.push_back(rest);
    if (fields.size() != 12) throw std::runtime_error("CSV row with " + std::to_string(fields.size()) + " fields");
    EvaluationRecord r;
    double* numeric[] = {&r.rho_re, &r.rho_im, &r.f_re, &r.f_im, &r.fp_re,
                         &r.fp_im,  &r.g_re,   &r.g_im, &r.gp_re, &r.gp_im};
    for (std::size_t i = 0; i < 10; ++i) *numeric[i] = parse_double(fields[i]);
    r.backend = fields[10];
    r.wronskian_error = parse_double(fields[11]);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace coulomb::cli
