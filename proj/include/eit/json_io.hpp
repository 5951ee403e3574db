#pragma once

#include "eit/trig_coeffs.hpp"
#include "json.hpp"

namespace eit {

/// Fixture format: {"N": order, "re": [...], "im": [...]} with 2N+1 entries in
/// ascending index order.
inline void to_json(nlohmann::json& j, const TrigCoeffs& g) {
  std::vector<double> re, im;
  re.reserve(g.count());
  im.reserve(g.count());
  for (const Complex& c : g.raw()) {
    re.push_back(c.real());
    im.push_back(c.imag());
  }
  j = nlohmann::json{{"N", g.order()}, {"re", re}, {"im", im}};
}

inline void from_json(const nlohmann::json& j, TrigCoeffs& g) {
  const int order = j.at("N").get<int>();
  const auto re = j.at("re").get<std::vector<double>>();
  const auto im = j.at("im").get<std::vector<double>>();
  if (re.size() != im.size() || re.size() != 2 * static_cast<std::size_t>(order) + 1)
    throw nlohmann::json::other_error::create(501, "TrigCoeffs: re/im length must be 2N+1", &j);
  std::vector<Complex> c(re.size());
  for (std::size_t i = 0; i < re.size(); ++i) c[i] = Complex{re[i], im[i]};
  g = TrigCoeffs(order, std::move(c));
}

}  // namespace eit
