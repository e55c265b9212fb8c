#include "memest/moments.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace memest {

void PopulationParams::validate() const {
  if (!(rho >= -1.0 && rho <= 1.0))
    throw std::invalid_argument("rho must lie in [-1, 1], got " + format_double(rho));
  if (!(sigma2_y >= 0.0) || !(sigma2_x >= 0.0) || !(sigma2_u >= 0.0) || !(sigma2_v >= 0.0))
    throw std::invalid_argument("variances must be nonnegative");
  if (mu_x == 0.0)
    throw std::invalid_argument("mu_x must be nonzero (ratio-type formulas divide by mu_x)");
  if (n < 2)
    throw std::invalid_argument("sample size n must be >= 2");
  if (population_size && *population_size <= 0)
    throw std::invalid_argument("population size N must be positive");
}

PopulationParams PopulationParams::without_measurement_error() const {
  PopulationParams q = *this;
  q.sigma2_u = 0.0;
  q.sigma2_v = 0.0;
  return q;
}

DerivedMoments derive_moments(const PopulationParams& p) {
  p.validate();
  if (p.mu_y == 0.0)
    throw std::invalid_argument("mu_y must be nonzero (c_y undefined)");
  const double n = static_cast<double>(p.n);
  DerivedMoments m;
  m.r_m = p.mu_y / p.mu_x;
  m.c_x = std::sqrt(p.sigma2_x) / p.mu_x;
  m.c_y = std::sqrt(p.sigma2_y) / p.mu_y;
  // Summed as separate quotients so that the error contribution is the
  // exact difference against the zero-error moments.
  m.v_ym = p.sigma2_y / n + p.sigma2_u / n;
  m.v_xm = p.sigma2_x / n + p.sigma2_v / n;
  m.v_yxm = p.rho * std::sqrt(p.sigma2_y * p.sigma2_x) / n;
  return m;
}

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

namespace {

double parse_double(const std::string& key, const std::string& text) {
  double v = 0.0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
    throw std::invalid_argument("parameter '" + key + "': not a number: '" + text + "'");
  return v;
}

long parse_long(const std::string& key, const std::string& text) {
  long v = 0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
    throw std::invalid_argument("parameter '" + key + "': not an integer: '" + text + "'");
  return v;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  auto e = s.find_last_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, e - b + 1);
}

}  // namespace

PopulationParams read_params(std::istream& in) {
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto eq = t.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("params line " + std::to_string(lineno) + ": expected key=value");
    std::string key = trim(t.substr(0, eq));
    std::string val = trim(t.substr(eq + 1));
    if (!kv.emplace(key, val).second)
      throw std::invalid_argument("params: duplicate key '" + key + "'");
  }
  auto need = [&](const char* key) -> const std::string& {
    auto it = kv.find(key);
    if (it == kv.end())
      throw std::invalid_argument(std::string("params: missing key '") + key + "'");
    return it->second;
  };
  PopulationParams p;
  p.mu_y = parse_double("mu_y", need("mu_y"));
  p.mu_x = parse_double("mu_x", need("mu_x"));
  p.sigma2_y = parse_double("sigma2_y", need("sigma2_y"));
  p.sigma2_x = parse_double("sigma2_x", need("sigma2_x"));
  p.rho = parse_double("rho", need("rho"));
  p.sigma2_u = parse_double("sigma2_u", need("sigma2_u"));
  p.sigma2_v = parse_double("sigma2_v", need("sigma2_v"));
  p.n = parse_long("n", need("n"));
  const std::string& N = need("N");
  if (N == "infinite" || N == "inf")
    p.population_size = std::nullopt;
  else
    p.population_size = parse_long("N", N);
  for (const auto& [key, val] : kv) {
    static const char* known[] = {"mu_y", "mu_x", "sigma2_y", "sigma2_x", "rho",
                                  "sigma2_u", "sigma2_v", "n", "N"};
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) throw std::invalid_argument("params: unknown key '" + key + "'");
  }
  p.validate();
  return p;
}

PopulationParams read_params_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open params file: " + path);
  return read_params(in);
}

std::string write_params(const PopulationParams& p) {
  std::ostringstream out;
  out << "mu_y=" << format_double(p.mu_y) << "\n";
  out << "mu_x=" << format_double(p.mu_x) << "\n";
  out << "sigma2_y=" << format_double(p.sigma2_y) << "\n";
  out << "sigma2_x=" << format_double(p.sigma2_x) << "\n";
  out << "rho=" << format_double(p.rho) << "\n";
  out << "sigma2_u=" << format_double(p.sigma2_u) << "\n";
  out << "sigma2_v=" << format_double(p.sigma2_v) << "\n";
  out << "n=" << p.n << "\n";
  out << "N=" << (p.population_size ? std::to_string(*p.population_size) : "infinite") << "\n";
  return out.str();
}

void write_params_file(const PopulationParams& p, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write params file: " + path);
  out << write_params(p);
}

}  // namespace memest
