// AVX2 + FMA variants of the batch kernels. This translation unit is compiled
// with -mavx2 -mfma; nothing here may run before the dispatcher has checked
// the CPU.

#include <immintrin.h>

#include <array>
#include <cstddef>
#include <variant>

#include "trapbound/energy.hpp"
#include "trapbound/kernels.hpp"

namespace trapbound::kernels::avx2 {

namespace {

constexpr std::size_t kLanes = 4;

// Beyond z = x^2 = 45 the enclosed fraction is 1 to double precision
// (1 - F < 1e-18).
constexpr double kSphereSaturation = 45.0;
constexpr int kSeriesTerms = 120;

struct SeriesTable {
  std::array<double, kSeriesTerms + 1> inv{};  // 1 / (3/2 + n)
  constexpr SeriesTable() {
    for (int n = 1; n <= kSeriesTerms; ++n) inv[n] = 1.0 / (1.5 + n);
  }
};
constexpr SeriesTable kSeries{};

struct ExpTable {
  std::array<double, 14> c{};  // 1 / k!
  constexpr ExpTable() {
    c[0] = 1.0;
    for (int k = 1; k < 14; ++k) c[k] = c[k - 1] / k;
  }
};
constexpr ExpTable kExp{};

inline __m256d set1(double v) { return _mm256_set1_pd(v); }

// exp(x) for x in [-kSphereSaturation, 0]: Cody-Waite reduction by ln 2 and a
// degree-13 Taylor polynomial on |r| <= ln2/2.
__m256d exp_nonpositive(__m256d x) {
  const __m256d k = _mm256_round_pd(_mm256_mul_pd(x, set1(1.4426950408889634)),
                                    _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  __m256d r = _mm256_fnmadd_pd(k, set1(6.93147180369123816490e-01), x);
  r = _mm256_fnmadd_pd(k, set1(1.90821492927058770002e-10), r);

  __m256d p = set1(kExp.c[13]);
  for (int i = 12; i >= 0; --i) p = _mm256_fmadd_pd(p, r, set1(kExp.c[i]));

  // 2^k: k + 1.5*2^52 leaves k in the low mantissa bits.
  const __m256d magic = set1(6755399441055744.0);
  const __m256i ki = _mm256_sub_epi64(_mm256_castpd_si256(_mm256_add_pd(k, magic)),
                                      _mm256_castpd_si256(magic));
  const __m256i bits = _mm256_slli_epi64(_mm256_add_epi64(ki, _mm256_set1_epi64x(1023)), 52);
  return _mm256_mul_pd(p, _mm256_castsi256_pd(bits));
}

// F(x) = P(3/2, x^2) from the all-positive lower incomplete gamma series
// x^3 e^{-x^2} sum_n x^{2n} / Gamma(5/2 + n). No cancellation at small x.
__m256d sphere_fraction_vec(__m256d x) {
  const __m256d z = _mm256_mul_pd(x, x);
  const __m256d saturated = _mm256_cmp_pd(z, set1(kSphereSaturation), _CMP_GT_OQ);
  const __m256d zc = _mm256_min_pd(z, set1(kSphereSaturation));

  __m256d term = set1(detail::kFourThirdsOverSqrtPi);  // 1 / Gamma(5/2)
  __m256d sum = term;
  for (int n = 1; n <= kSeriesTerms; ++n) {
    term = _mm256_mul_pd(_mm256_mul_pd(term, zc), set1(kSeries.inv[n]));
    sum = _mm256_add_pd(sum, term);
  }
  const __m256d cube = _mm256_mul_pd(x, zc);
  const __m256d f = _mm256_mul_pd(_mm256_mul_pd(cube, exp_nonpositive(_mm256_sub_pd(_mm256_setzero_pd(), zc))), sum);
  return _mm256_blendv_pd(f, set1(1.0), saturated);
}

struct Block {
  __m256d total, kinetic, com, interaction;
};

inline void store(const BreakdownColumns& out, std::size_t i, const Block& b) {
  _mm256_storeu_pd(out.total.data() + i, b.total);
  _mm256_storeu_pd(out.kinetic_trap.data() + i, b.kinetic);
  _mm256_storeu_pd(out.com_correction.data() + i, b.com);
  _mm256_storeu_pd(out.interaction.data() + i, b.interaction);
}

// Runs `body` over full blocks, then over a padded copy of the tail.
template <class Body>
void for_blocks(std::span<const double> in, const BreakdownColumns& out, double pad, Body&& body) {
  const std::size_t n = in.size();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) store(out, i, body(_mm256_loadu_pd(in.data() + i)));
  if (i == n) return;

  alignas(32) std::array<double, kLanes> tail{pad, pad, pad, pad};
  for (std::size_t j = i; j < n; ++j) tail[j - i] = in[j];
  const Block b = body(_mm256_load_pd(tail.data()));
  alignas(32) std::array<double, kLanes> t{}, k{}, c{}, e{};
  _mm256_store_pd(t.data(), b.total);
  _mm256_store_pd(k.data(), b.kinetic);
  _mm256_store_pd(c.data(), b.com);
  _mm256_store_pd(e.data(), b.interaction);
  for (std::size_t j = i; j < n; ++j) {
    out.total[j] = t[j - i];
    out.kinetic_trap[j] = k[j - i];
    out.com_correction[j] = c[j - i];
    out.interaction[j] = e[j - i];
  }
}

}  // namespace

void harmonic_bound(std::span<const double> w, const TrapSystem& system,
                    const Interaction& interaction, const BreakdownColumns& out) {
  const double n = static_cast<double>(system.n);
  const double om = system.omega;
  const __m256d om2 = set1(om * om);
  const __m256d two_om = set1(2.0 * om);
  const __m256d kin_coef = set1(0.75 * n);
  const __m256d com_coef = set1(-0.75);
  const __m256d three_quarters = set1(0.75);
  const __m256d n_minus_one = set1(n - 1.0);
  const double half_pairs = 0.5 * pair_count(system, PrefactorVariant::CorrectedPairCount);

  auto base = [&](__m256d wv) {
    const __m256d spread = _mm256_add_pd(wv, _mm256_div_pd(om2, wv));
    Block b;
    b.kinetic = _mm256_mul_pd(kin_coef, spread);
    b.com = _mm256_mul_pd(com_coef, _mm256_sub_pd(spread, two_om));
    b.total = _mm256_mul_pd(three_quarters,
                            _mm256_add_pd(_mm256_mul_pd(n_minus_one, spread), two_om));
    return b;
  };

  if (const auto* delta = std::get_if<DeltaInteraction>(&interaction)) {
    const __m256d coef = set1(half_pairs * delta->b * detail::kInvTwoPiPow32);
    for_blocks(w, out, 1.0, [&](__m256d wv) {
      Block b = base(wv);
      b.interaction = _mm256_mul_pd(coef, _mm256_mul_pd(wv, _mm256_sqrt_pd(wv)));
      b.total = _mm256_add_pd(b.total, b.interaction);
      return b;
    });
    return;
  }

  const auto& well = std::get<StepWell>(interaction);
  const __m256d coef = set1(-half_pairs * well.v);
  const __m256d range = set1(well.r);
  const __m256d half = set1(0.5);
  for_blocks(w, out, 1.0, [&](__m256d wv) {
    Block b = base(wv);
    const __m256d x = _mm256_mul_pd(range, _mm256_sqrt_pd(_mm256_mul_pd(half, wv)));
    b.interaction = _mm256_mul_pd(coef, sphere_fraction_vec(x));
    b.total = _mm256_add_pd(b.total, b.interaction);
    return b;
  });
}

void gaussian_bound(std::span<const double> sigma, const TrapSystem& system, double b,
                    PrefactorVariant variant, const BreakdownColumns& out) {
  const double n = static_cast<double>(system.n);
  const __m256d inv_coef = set1(0.75 * n);
  const __m256d trap_coef = set1(0.75 * n * (system.omega * system.omega));
  const __m256d int_coef = set1(pair_count(system, variant) * b * detail::kInvTwoPiPow32);
  const __m256d one = set1(1.0);

  for_blocks(sigma, out, 1.0, [&](__m256d s) {
    const __m256d inv_s = _mm256_div_pd(one, s);
    const __m256d inv_s2 = _mm256_mul_pd(inv_s, inv_s);
    Block r;
    r.kinetic = _mm256_add_pd(_mm256_mul_pd(inv_coef, inv_s2),
                              _mm256_mul_pd(trap_coef, _mm256_mul_pd(s, s)));
    r.com = _mm256_setzero_pd();
    r.interaction = _mm256_mul_pd(int_coef, _mm256_mul_pd(inv_s2, inv_s));
    r.total = _mm256_add_pd(r.kinetic, r.interaction);
    return r;
  });
}

void sphere_fraction(std::span<const double> x, std::span<double> out) {
  const std::size_t n = x.size();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes)
    _mm256_storeu_pd(out.data() + i, sphere_fraction_vec(_mm256_loadu_pd(x.data() + i)));
  if (i == n) return;
  alignas(32) std::array<double, kLanes> tail{};
  for (std::size_t j = i; j < n; ++j) tail[j - i] = x[j];
  _mm256_store_pd(tail.data(), sphere_fraction_vec(_mm256_load_pd(tail.data())));
  for (std::size_t j = i; j < n; ++j) out[j] = tail[j - i];
}

}  // namespace trapbound::kernels::avx2
