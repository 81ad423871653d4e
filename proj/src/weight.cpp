#include "potlab/weight.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "potlab/errors.hpp"

namespace potlab {

Weight1D::Weight1D(std::function<double(double)> density, Exponent p,
                   std::vector<double> singular, std::string description)
    : density_(std::move(density)),
      p_(p),
      singular_(std::move(singular)),
      description_(std::move(description)) {}

Weight1D Weight1D::constant(double c, Exponent p) {
  if (!(c > 0.0)) throw InputError("Weight1D::constant: c must be positive");
  return Weight1D([c](double) { return c; }, p, {}, "const " + std::to_string(c));
}

Weight1D Weight1D::power(double alpha, Exponent p) {
  return Weight1D([alpha](double x) { return std::pow(std::abs(x), alpha); }, p,
                  {0.0}, "pow " + std::to_string(alpha));
}

Weight1D Weight1D::exponential(double k, Exponent p) {
  return Weight1D([k](double x) { return std::exp(k * x); }, p, {},
                  "exp " + std::to_string(k));
}

Weight1D Weight1D::table(std::vector<std::pair<double, double>> samples, Exponent p) {
  if (samples.size() < 2) {
    throw InputError("Weight1D::table: need at least two samples");
  }
  for (size_t i = 0; i < samples.size(); ++i) {
    if (!(samples[i].second > 0.0)) {
      throw InputError("Weight1D::table: weight samples must be positive");
    }
    if (i > 0 && !(samples[i].first > samples[i - 1].first)) {
      throw InputError("Weight1D::table: x must be strictly increasing");
    }
  }
  // Piecewise-constant with breakpoints at sample midpoints.
  std::vector<double> breaks;
  breaks.reserve(samples.size() - 1);
  for (size_t i = 0; i + 1 < samples.size(); ++i) {
    breaks.push_back(0.5 * (samples[i].first + samples[i + 1].first));
  }
  auto tbl = std::make_shared<std::vector<std::pair<double, double>>>(std::move(samples));
  auto brk = std::make_shared<std::vector<double>>(breaks);
  auto density = [tbl, brk](double x) {
    size_t i = std::upper_bound(brk->begin(), brk->end(), x) - brk->begin();
    return (*tbl)[i].second;
  };
  return Weight1D(density, p, *brk, "table[" + std::to_string(tbl->size()) + "]");
}

Weight1D Weight1D::from_density(std::function<double(double)> density, Exponent p,
                                std::vector<double> singular_hints,
                                std::string description) {
  return Weight1D(std::move(density), p, std::move(singular_hints),
                  std::move(description));
}

Weight1D Weight1D::parse(const std::string& spec, Exponent p) {
  std::istringstream in(spec);
  std::string kind;
  in >> kind;
  if (kind == "const") {
    double c;
    if (!(in >> c)) throw InputError("weight grammar: 'const c' expects a number");
    return constant(c, p);
  }
  if (kind == "pow") {
    double alpha;
    if (!(in >> alpha)) throw InputError("weight grammar: 'pow alpha' expects a number");
    return power(alpha, p);
  }
  if (kind == "exp") {
    double k;
    if (!(in >> k)) throw InputError("weight grammar: 'exp k' expects a number");
    return exponential(k, p);
  }
  if (kind == "table") {
    std::string path;
    if (!(in >> path)) throw InputError("weight grammar: 'table <path>' expects a path");
    std::ifstream file(path);
    if (!file) throw InputError("weight table: cannot open " + path);
    std::vector<std::pair<double, double>> samples;
    std::string line;
    while (std::getline(file, line)) {
      if (line.empty()) continue;
      std::replace(line.begin(), line.end(), ',', ' ');
      std::istringstream row(line);
      double x, w;
      if (row >> x >> w) samples.emplace_back(x, w);
    }
    return table(std::move(samples), p);
  }
  throw InputError("weight grammar: unknown kind '" + kind + "'");
}

double Weight1D::operator()(double x) const {
  double w = density_(x);
  if (!(w >= 0.0)) throw InputError("Weight1D: density must be positive (got negative/NaN)");
  return w;
}

double Weight1D::dual_density(double x) const {
  return std::pow(density_(x), p_.dual_density_exponent());
}

}  // namespace potlab
