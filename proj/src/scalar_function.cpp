#include "lomean/scalar_function.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lomean/matrix.hpp"

namespace lomean {

void ScalarFunction::require_normalized(double tol) const {
  const double v = eval(1.0);
  if (std::abs(v - 1.0) > tol) {
    std::ostringstream os;
    os << "function '" << label << "' is not normalized: f(1) = " << v;
    throw DomainError(os.str());
  }
}

void ScalarFunction::require_nonnegative_on_grid() const {
  auto probe = [&](double t) {
    if (eval(t) < -1e-12) {
      std::ostringstream os;
      os << "function '" << label << "' is negative at t = " << t << " (f = " << eval(t) << ")";
      throw DomainError(os.str());
    }
  };
  probe(0.0);
  for (int i = 0; i <= 24; ++i) probe(1e-6 * std::pow(10.0, 12.0 * i / 24.0));
}

double log_mean_generator(double t) {
  if (t <= 0.0) return 0.0;
  const double u = t - 1.0;
  if (std::abs(u) < 1e-4) {
    // (t-1)/ln t = 1 + u/2 - u^2/12 + u^3/24 - ...
    return 1.0 + u * (0.5 + u * (-1.0 / 12.0 + u * (1.0 / 24.0)));
  }
  return u / std::log(t);
}

ScalarFunction lookup_function(const std::string& name) {
  if (name == "sqrt")
    return {[](double t) { return std::sqrt(std::max(t, 0.0)); }, "sqrt", true};
  if (name == "arithmetic") return {[](double t) { return 0.5 * (1.0 + t); }, "arithmetic", true};
  if (name == "harmonic")
    return {[](double t) { return t <= 0.0 ? 0.0 : 2.0 * t / (1.0 + t); }, "harmonic", true};
  if (name == "logmean") return {log_mean_generator, "logmean", true};
  if (name == "const") return {[](double) { return 1.0; }, "const", true};
  if (name == "identity") return {[](double t) { return t; }, "identity", true};
  if (name == "square") return {[](double t) { return t * t; }, "square", false};
  if (name == "cube") return {[](double t) { return t * t * t; }, "cube", false};
  if (name == "exp") return {[](double t) { return std::exp(t); }, "exp", false};
  if (name.rfind("power:", 0) == 0) {
    const std::string arg = name.substr(6);
    double p = 0.0;
    try {
      size_t pos = 0;
      p = std::stod(arg, &pos);
      if (pos != arg.size()) throw std::invalid_argument(arg);
    } catch (const std::exception&) {
      throw DomainError("lookup_function: bad power exponent '" + arg + "'");
    }
    if (p < 0.0) throw DomainError("lookup_function: power exponent must be >= 0");
    const bool monotone = p <= 1.0;
    return {[p](double t) { return std::pow(std::max(t, 0.0), p); }, name, monotone};
  }
  throw DomainError("lookup_function: unknown function '" + name + "'");
}

std::vector<std::string> registry_names() {
  return {"power:0.3", "sqrt", "arithmetic", "harmonic", "logmean", "const",
          "square",    "cube", "exp"};
}

ScalarFunction tabulated_function(std::vector<double> t, std::vector<double> f,
                                  std::string label) {
  if (t.size() != f.size() || t.size() < 2)
    throw DomainError("tabulated_function: need matching t/f arrays with at least 2 nodes");
  if (t.front() < 0.0) throw DomainError("tabulated_function: nodes must be >= 0");
  for (size_t i = 1; i < t.size(); ++i)
    if (!(t[i] > t[i - 1])) throw DomainError("tabulated_function: t must be strictly increasing");

  auto eval = [t = std::move(t), f = std::move(f)](double x) {
    if (x <= t.front()) return f.front();
    if (x >= t.back()) return f.back();
    const auto it = std::upper_bound(t.begin(), t.end(), x);
    const size_t hi = static_cast<size_t>(it - t.begin());
    const double w = (x - t[hi - 1]) / (t[hi] - t[hi - 1]);
    return f[hi - 1] + w * (f[hi] - f[hi - 1]);
  };
  return {std::move(eval), std::move(label), false};
}

}  // namespace lomean
