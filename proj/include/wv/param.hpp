#ifndef WV_PARAM_HPP
#define WV_PARAM_HPP

#include <array>
#include <optional>
#include <string>

namespace wv {

// Symbolic parameters of the model and its reductions. The order fixes the
// exponent-vector layout in ParamPoly.
enum class Param : int {
  beta = 0,
  c,
  k,
  q,
  p0,
  kappa,
  nu,
  n,
  mu,
  sigma,
  v0,
  C0,
  C1,
};

inline constexpr int kNumParams = 13;

inline constexpr std::array<const char*, kNumParams> kParamNames = {
    "beta", "c", "k", "q", "p0", "kappa", "nu", "n", "mu", "sigma",
    "v0", "C0", "C1"};

inline const char* param_name(Param p) {
  return kParamNames[static_cast<int>(p)];
}

std::optional<Param> param_from_name(const std::string& name);

}  // namespace wv

#endif
