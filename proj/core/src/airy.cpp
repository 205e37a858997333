#include "coulomb/airy.hpp"

#include <cmath>
#include <sstream>

#include "coulomb/error.hpp"

namespace coulomb::airy {
namespace {

constexpr double kAi0 = 0.35502805388781723926;   // Ai(0)
constexpr double kAip0 = 0.25881940379280679840;  // -Ai'(0)
constexpr double kSqrt3 = 1.7320508075688772935;
constexpr double kSqrtPi = 1.7724538509055160273;
constexpr double kEps = 1e-17;
// exp() of anything beyond this overflows or loses the result entirely.
constexpr double kMaxExponent = 700.0;

const complex kOmega{-0.5, 0.86602540378443864676};  // exp(2 pi i / 3)
const complex kOmegaBar = std::conj(kOmega);
const complex kPhase{0.86602540378443864676, 0.5};   // exp(i pi / 6)
const complex kPhase5{-0.86602540378443864676, 0.5};  // exp(5 i pi / 6)

[[noreturn]] void overflow(complex z) {
  std::ostringstream os;
  os.precision(17);
  os << "Airy functions not representable at z = (" << z.real() << ", " << z.imag() << ")";
  throw NumericalError(ErrorKind::kOverflow, os.str());
}

bool finite(complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Ai for Im z >= 0, any argument in [0, pi].
detail::AiPair upper_ai(complex z) {
  if (std::arg(z) <= 2.0 * kPi / 3.0) return detail::sector_ai(z);
  // w z has argument in (-2pi/3, -pi/3], z/w in (0, pi/3].
  const detail::AiPair a = detail::sector_ai(kOmega * z);
  const detail::AiPair b = detail::sector_ai(kOmegaBar * z);
  return {-kOmega * a.ai - kOmegaBar * b.ai, -kOmegaBar * a.aip - kOmega * b.aip};
}

detail::AiPair any_ai(complex z) {
  if (z.imag() < 0.0 || (z.imag() == 0.0 && std::signbit(z.imag()))) {
    const detail::AiPair p = upper_ai(std::conj(z));
    return {std::conj(p.ai), std::conj(p.aip)};
  }
  return upper_ai(z);
}

}  // namespace

namespace detail {

SeriesValue maclaurin(complex z) {
  const complex z3 = z * z * z;
  // f = sum 3^k (1/3)_k z^{3k}/(3k)!, g = sum 3^k (2/3)_k z^{3k+1}/(3k+1)!
  complex t = 1.0, s = z, u = 0.5 * z * z, v = 1.0;
  complex f = t, g = s, fp = 0.0, gp = v;
  double f_abs = std::abs(t), g_abs = std::abs(s);
  for (int k = 0; k < 500; ++k) {
    const double dk = k;
    t *= z3 / ((3 * dk + 2) * (3 * dk + 3));
    s *= z3 / ((3 * dk + 3) * (3 * dk + 4));
    fp += u;  // u holds the k+1 term of f'
    u *= z3 / ((3 * dk + 3) * (3 * dk + 5));
    v *= z3 / ((3 * dk + 1) * (3 * dk + 3));
    f += t;
    g += s;
    gp += v;
    f_abs += std::abs(t);
    g_abs += std::abs(s);
    const double scale = std::abs(f) + std::abs(g) + std::abs(fp) + std::abs(gp);
    if (std::abs(t) + std::abs(s) + std::abs(u) + std::abs(v) <= kEps * scale) break;
  }
  SeriesValue out;
  out.quad.ai = kAi0 * f - kAip0 * g;
  out.quad.aip = kAi0 * fp - kAip0 * gp;
  out.quad.bi = kSqrt3 * (kAi0 * f + kAip0 * g);
  out.quad.bip = kSqrt3 * (kAi0 * fp + kAip0 * gp);
  const double ai_abs = std::abs(out.quad.ai);
  const double terms = kAi0 * f_abs + kAip0 * g_abs;
  out.ai_cancellation = ai_abs > 0.0 ? terms / ai_abs : INFINITY;
  return out;
}

AiPair asymptotic_ai(complex z) {
  const complex root = std::sqrt(z);
  const complex zeta = (2.0 / 3.0) * z * root;
  if (-zeta.real() > kMaxExponent) overflow(z);
  const complex quarter = std::sqrt(root);
  // u_k = (6k-5)(6k-3)(6k-1) / ((2k-1) 216 k) u_{k-1},  v_k = -(6k+1)/(6k-1) u_k
  complex sum_u = 1.0, sum_v = 1.0;
  double u = 1.0;
  complex power = 1.0;
  double last = INFINITY;
  const complex inv = -1.0 / zeta;
  for (int k = 1; k < 200; ++k) {
    const double dk = k;
    u *= (6 * dk - 5) * (6 * dk - 3) * (6 * dk - 1) / ((2 * dk - 1) * 216.0 * dk);
    const double v = -(6 * dk + 1) / (6 * dk - 1) * u;
    power *= inv;
    const complex term_u = u * power;
    const complex term_v = v * power;
    const double size = std::abs(term_v);
    if (size >= last) break;  // smallest term reached
    sum_u += term_u;
    sum_v += term_v;
    last = size;
    if (size <= kEps * std::abs(sum_v)) break;
  }
  const complex e = std::exp(-zeta);
  return {e / (2.0 * kSqrtPi * quarter) * sum_u, -quarter * e / (2.0 * kSqrtPi) * sum_v};
}

AiPair taylor_continue(AiPair value, complex from, complex to) {
  constexpr double kMaxStep = 0.5;
  const complex span = to - from;
  const int steps = std::max(1, static_cast<int>(std::ceil(std::abs(span) / kMaxStep)));
  const complex h = span / static_cast<double>(steps);
  complex z0 = from;
  complex w = value.ai, wp = value.aip;
  for (int step = 0; step < steps; ++step) {
    // c_{n+2} = (z0 c_n + c_{n-1}) / ((n+1)(n+2))
    complex c_prev2 = 0.0;  // c_{n-1}
    complex c_prev = w;     // c_n
    complex c_cur = wp;     // c_{n+1}
    complex hp = h;         // h^{n+1}
    complex sum = w + wp * h, dsum = wp;
    for (int n = 0; n < 200; ++n) {
      const complex c_next = (z0 * c_prev + c_prev2) / static_cast<double>((n + 1) * (n + 2));
      const complex term_d = static_cast<double>(n + 2) * c_next * hp;
      hp *= h;
      const complex term = c_next * hp;
      sum += term;
      dsum += term_d;
      c_prev2 = c_prev;
      c_prev = c_cur;
      c_cur = c_next;
      if (n > 4 && std::abs(term) <= kEps * std::abs(sum) &&
          std::abs(term_d) <= kEps * std::abs(dsum)) {
        break;
      }
    }
    w = sum;
    wp = dsum;
    z0 += h;
  }
  return {w, wp};
}

AiPair sector_ai(complex z) {
  const double r = std::abs(z);
  if (r >= kAsymptoticRadius) return asymptotic_ai(z);
  const SeriesValue series = maclaurin(z);
  if (series.ai_cancellation <= kMaxSeriesCancellation) return {series.quad.ai, series.quad.aip};
  const complex anchor = z * (kAsymptoticRadius / r);
  return taylor_continue(asymptotic_ai(anchor), anchor, z);
}

}  // namespace detail

AiryQuad airy_quad(complex z) {
  if (!finite(z)) throw NumericalError(ErrorKind::kDomain, "airy_quad: non-finite argument");
  const detail::AiPair ai = any_ai(z);
  const detail::AiPair plus = any_ai(kOmega * z);
  const detail::AiPair minus = any_ai(kOmegaBar * z);
  AiryQuad q;
  q.ai = ai.ai;
  q.aip = ai.aip;
  q.bi = kPhase * plus.ai + std::conj(kPhase) * minus.ai;
  q.bip = kPhase5 * plus.aip + std::conj(kPhase5) * minus.aip;
  if (!finite(q.ai) || !finite(q.aip) || !finite(q.bi) || !finite(q.bip)) overflow(z);
  return q;
}

}  // namespace coulomb::airy
