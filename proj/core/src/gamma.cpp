#include <array>
#include <cstdint>

#include "lrkm/error.hpp"
#include "lrkm/fracops.hpp"

namespace lrkm {

namespace {

// Lanczos approximation, N = 13, g = 6.024680040776729583740234375, in the
// rational form of Godfrey/Pugh as tabulated by Boost.Math (lanczos13m53).
// Good to a few ulp of binary64.
constexpr double kLanczosG = 6.024680040776729583740234375;

constexpr std::array<double, 13> kNum = {
    23531376880.41075968857200767445163675473,
    42919803642.64909876895789904700198885093,
    35711959237.35566804944018545154716670596,
    17921034426.03720969991975575445893111267,
    6039542586.35202800506429164430729792107,
    1439720407.311721673663223072794912393972,
    248874557.8620541565114603864132294232163,
    31426415.58540019438061423162831820536287,
    2876370.628935372441225409051620849613599,
    186056.2653952234950402949897160456992822,
    8071.672002365816210638002902272250613822,
    210.8242777515793458725097339207133627117,
    2.506628274631000270164908177133837338626,
};

// Coefficients of the rising factorial z (z+1) ... (z+11).
constexpr std::array<std::uint64_t, 13> kDenom = {
    0u,         39916800u, 120543840u, 150917976u, 105258076u, 45995730u, 13339535u,
    2637558u,   357423u,   32670u,     1925u,      66u,        1u,
};

real lanczos_sum(const real& z) {
  real num = 0;
  real den = 0;
  for (std::size_t i = kNum.size(); i-- > 0;) {
    num = num * z + real(kNum[i]);
    den = den * z + real(kDenom[i]);
  }
  return num / den;
}

}  // namespace

real gamma(const real& x) {
  if (!isfinite(x) || !(x > 0)) throw DomainError("gamma: argument must be positive and finite");

  // Exact factorials for small integers.
  if (x == floor(x) && x <= 30) {
    real f = 1;
    for (int k = 2; k < static_cast<int>(to_double(x)); ++k) f *= k;
    return f;
  }
  if (x < 1) return gamma(x + 1) / x;

  const real zgh = x + real(kLanczosG) - real(0.5);
  // Split the power so large arguments overflow only when Gamma itself does.
  const real half_power = pow(zgh, (x - real(0.5)) / 2);
  return lanczos_sum(x) * (half_power / exp(zgh)) * half_power;
}

}  // namespace lrkm
