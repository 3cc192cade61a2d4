#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ferrex/checks.hpp"
#include "ferrex/errors.hpp"
#include "ferrex/ferrers.hpp"
#include "ferrex/hypergeometric.hpp"
#include "ferrex/polynomials.hpp"

namespace {

using Params = std::map<std::string, double>;

// Lower-case scientific, 16 significant digits, exponent without the
// plus sign or leading zeros: 0.4 -> 4.000000000000000e-1.
std::string fmt16(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.15e", v);
  std::string s(buf);
  auto e = s.find('e');
  std::string mant = s.substr(0, e);
  std::string exp = s.substr(e + 1);
  bool neg = exp[0] == '-';
  size_t i = (exp[0] == '+' || exp[0] == '-') ? 1 : 0;
  while (i + 1 < exp.size() && exp[i] == '0') ++i;
  return mant + "e" + (neg ? "-" : "") + exp.substr(i);
}

std::string fmt_grid(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

struct Registered {
  std::vector<std::string> required;
  bool open_interval;  // domain (-1, 1): grid endpoints get clamped
  double (*eval)(const Params&);
};

double need(const Params& p, const std::string& k) { return p.at(k); }

const std::map<std::string, Registered>& registry() {
  static const std::map<std::string, Registered> reg = {
      {"ferrers_p",
       {{"nu", "mu", "x"}, true, [](const Params& p) {
          return ferrex::ferrers_p(need(p, "nu"), need(p, "mu"), need(p, "x"))
              .value;
        }}},
      {"ferrers_q",
       {{"nu", "mu", "x"}, true, [](const Params& p) {
          return ferrex::ferrers_q(need(p, "nu"), need(p, "mu"), need(p, "x"))
              .value;
        }}},
      {"legendre_q",
       {{"nu", "mu", "x"}, false, [](const Params& p) {
          ferrex::Normalization norm = p.count("hobson") && p.at("hobson") != 0
                                           ? ferrex::Normalization::hobson
                                           : ferrex::Normalization::olver;
          return ferrex::legendre_q(
                     {need(p, "nu"), need(p, "mu"), need(p, "x"), norm})
              .value;
        }}},
      {"gegenbauer",
       {{"n", "lambda", "x"}, true, [](const Params& p) {
          return ferrex::gegenbauer_c((int)need(p, "n"), need(p, "lambda"),
                                      need(p, "x"));
        }}},
      {"jacobi",
       {{"n", "alpha", "beta", "x"}, true, [](const Params& p) {
          return ferrex::jacobi_p((int)need(p, "n"), need(p, "alpha"),
                                  need(p, "beta"), need(p, "x"));
        }}},
      {"hermite",
       {{"n", "x"}, false, [](const Params& p) {
          return ferrex::hermite_h((int)need(p, "n"), need(p, "x"));
        }}},
      {"meixner",
       {{"n", "beta", "c", "x"}, false, [](const Params& p) {
          return ferrex::meixner_m((int)need(p, "n"), need(p, "x"),
                                   need(p, "beta"), need(p, "c"));
        }}},
      {"chebyshev_t",
       {{"n", "x"}, true, [](const Params& p) {
          return ferrex::chebyshev_t((int)need(p, "n"), need(p, "x"));
        }}},
      {"chebyshev_u",
       {{"n", "x"}, true, [](const Params& p) {
          return ferrex::chebyshev_u((int)need(p, "n"), need(p, "x"));
        }}},
      {"legendre_p",
       {{"n", "x"}, true, [](const Params& p) {
          return ferrex::legendre_p((int)need(p, "n"), need(p, "x"));
        }}},
      {"bessel_j",
       {{"lambda", "x"}, false, [](const Params& p) {
          return ferrex::bessel_j(need(p, "lambda"), need(p, "x")).value;
        }}},
      {"gauss_2f1",
       {{"a", "b", "c", "x"}, false, [](const Params& p) {
          return ferrex::gauss_2f1(need(p, "a"), need(p, "b"), need(p, "c"),
                                   need(p, "x"))
              .value;
        }}},
  };
  return reg;
}

struct Grid {
  double start, stop, step;
};

bool parse_grid(const std::string& s, Grid* g) {
  double a, b, c;
  char tail;
  if (std::sscanf(s.c_str(), "%lf:%lf:%lf%c", &a, &b, &c, &tail) != 3) {
    return false;
  }
  if (!(c > 0.0) || !(a < b)) return false;
  *g = {a, b, c};
  return true;
}

const Registered* lookup(const std::string& fn, const Params& params) {
  auto it = registry().find(fn);
  if (it == registry().end()) {
    std::fprintf(stderr, "unknown function: %s\n", fn.c_str());
    return nullptr;
  }
  for (const auto& k : it->second.required) {
    if (!params.count(k)) {
      std::fprintf(stderr, "missing required parameter --%s\n", k.c_str());
      return nullptr;
    }
  }
  return &it->second;
}

int run_numeric(const std::function<int()>& body) {
  try {
    return body();
  } catch (const ferrex::DomainError& e) {
    std::printf("DomainError\n");
    std::fprintf(stderr, "%s\n", e.what());
  } catch (const ferrex::PoleError& e) {
    std::printf("PoleError\n");
    std::fprintf(stderr, "%s\n", e.what());
  } catch (const ferrex::ConvergenceError& e) {
    std::printf("ConvergenceError\n");
    std::fprintf(stderr, "%s\n", e.what());
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ferrex: Ferrers / associated Legendre function toolkit"};
  app.require_subcommand(1);

  std::string fn, grid_str, format = "csv", suite_name;
  double tol = 0.0;
  Params params;
  auto add_param_flags = [&](CLI::App* cmd) {
    for (const char* name : {"nu", "mu", "x", "z", "n", "lambda", "alpha",
                             "beta", "c", "a", "b", "gamma"}) {
      cmd->add_option_function<double>(
          std::string("--") + name,
          [&params, name](double v) { params[name] = v; });
    }
    cmd->add_flag_callback("--hobson", [&params] { params["hobson"] = 1.0; });
  };

  CLI::App* eval = app.add_subcommand("eval", "evaluate one function value");
  eval->add_option("--fn", fn)->required();
  add_param_flags(eval);

  CLI::App* table = app.add_subcommand("table", "tabulate over an x grid");
  table->add_option("--fn", fn)->required();
  table->add_option("--x-grid", grid_str)->required();
  table->add_option("--format", format)
      ->check(CLI::IsMember({"csv", "json"}));
  add_param_flags(table);

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite_name)->required();
  verify->add_option("--tol", tol);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  if (eval->parsed()) {
    const Registered* r = lookup(fn, params);
    if (!r) return 2;
    return run_numeric([&] {
      std::printf("%s\n", fmt16(r->eval(params)).c_str());
      return 0;
    });
  }

  if (table->parsed()) {
    Grid g;
    if (!parse_grid(grid_str, &g)) {
      std::fprintf(stderr, "malformed grid '%s' (want start:stop:step)\n",
                   grid_str.c_str());
      return 2;
    }
    // Placeholder so lookup() does not reject before the grid fills in x.
    params["x"] = 0.0;
    const Registered* r = lookup(fn, params);
    if (!r) return 2;
    return run_numeric([&] {
      std::vector<std::pair<double, double>> rows;
      int steps = (int)std::floor((g.stop - g.start) / g.step + 1e-9);
      for (int i = 0; i <= steps; ++i) {
        double x = g.start + i * g.step;
        if (r->open_interval && std::abs(x) >= 1.0 - 1e-12) {
          double clamped = std::copysign(1.0 - 1e-9, x);
          std::fprintf(stderr,
                       "warning: grid point %.17g clamped to %.17g\n", x,
                       clamped);
          x = clamped;
        }
        params["x"] = x;
        rows.emplace_back(x, r->eval(params));
      }
      if (format == "json") {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& [x, v] : rows) {
          arr.push_back({{"x", x}, {"value", v}});
        }
        std::printf("%s\n", arr.dump(2).c_str());
      } else {
        std::printf("x,value\n");
        for (const auto& [x, v] : rows) {
          std::printf("%s,%s\n", fmt_grid(x).c_str(), fmt16(v).c_str());
        }
      }
      return 0;
    });
  }

  // verify
  ferrex::Suite suite;
  if (!ferrex::parse_suite(suite_name, &suite)) {
    std::fprintf(stderr, "unknown suite: %s\n", suite_name.c_str());
    return 2;
  }
  return run_numeric([&] {
    std::vector<ferrex::CheckReport> reports = ferrex::run_suite(suite);
    int passed = 0;
    for (auto& r : reports) {
      if (!r.passed && tol > 0.0 && r.rel_err <= tol) r.passed = true;
      if (r.passed) ++passed;
    }
    std::printf("%s\n", ferrex::reports_to_json(reports).c_str());
    std::fprintf(stderr, "passed %d/%zu\n", passed, reports.size());
    return passed == (int)reports.size() ? 0 : 1;
  });
}
