// Command-line front end.
//
// Exit codes: 0 ok, 1 usage, 2 a check or acceptance criterion failed,
// 3 a numerical rank or precision decision could not be certified.
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "thetawb/acceptance.hpp"
#include "thetawb/chowring.hpp"
#include "thetawb/errors.hpp"
#include "thetawb/invariants.hpp"
#include "thetawb/series.hpp"
#include "thetawb/thetanum.hpp"
#include "thetawb/verlinde.hpp"

using nlohmann::ordered_json;
using namespace thetawb;

namespace {

enum Exit { kOk = 0, kUsage = 1, kCheckFailed = 2, kIndeterminate = 3 };

struct RunConfig {
  int g = 0;
  int d = 0;
  int k = 0;
  int gmin = 3;
  int gmax = 8;
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> tau_seed;
  double tol = kDefaultThetaTol;
  std::string route = "all";
  std::string format = "text";
  std::string json_path;
};

// What a subcommand produces: a JSON document plus a flat table for csv and
// a few lines for text.
struct Report {
  ordered_json data = ordered_json::object();
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> text;
  int exit_code = kOk;
};

template <class T>
std::string cell(const T& v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

std::string cell(const mpz_class& v) { return v.get_str(); }
std::string cell(bool v) { return v ? "true" : "false"; }

ordered_json big(const mpz_class& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

ordered_json complex_json(const Complex& c) { return ordered_json::array({c.real(), c.imag()}); }

void key_value(Report& r, const std::string& key, const std::string& value) {
  if (r.header.empty()) r.header = {"key", "value"};
  r.rows.push_back({key, value});
}

// ---------------------------------------------------------------------------

Report chern_table(const RunConfig& c) {
  if (c.gmin < 2 || c.gmax > 12 || c.gmin > c.gmax) throw std::invalid_argument("need 2 <= gmin <= gmax <= 12");
  Report r;
  r.header = {"g", "c_g(Q1)"};
  ordered_json rows = ordered_json::array();
  for (int g = c.gmin; g <= c.gmax; ++g) {
    const mpz_class newton = top_chern_Q1(g);
    const mpz_class via_exp = top_chern_Q1_via_exp(g);
    const SegreCheck segre = segre_equals_chern(g);
    const bool agree = newton == via_exp && segre.equal;
    if (!agree) r.exit_code = kCheckFailed;
    rows.push_back({{"g", g}, {"top_chern", big(newton)}, {"routes_agree", agree}, {"segre_equal", segre.equal}});
    r.rows.push_back({cell(g), cell(newton)});
    r.text.push_back("g=" + cell(g) + "  c_g(Q1)=" + cell(newton) + (agree ? "" : "  ROUTES DISAGREE"));
  }
  r.data["rows"] = rows;
  return r;
}

Report euler(const RunConfig& c) {
  if (c.g < 1 || c.d < 1 || c.d > c.g || c.g > 12) throw std::invalid_argument("need 1 <= d <= g <= 12");
  Report r;
  r.data["g"] = c.g;
  r.data["d"] = c.d;
  std::vector<std::pair<std::string, std::int64_t>> values;
  if (c.route == "sub" || c.route == "all") values.emplace_back("sub", euler_char_substitution(c.g, c.d));
  if (c.route == "res" || c.route == "all") values.emplace_back("res", euler_char_residue(c.g, c.d));
  if (c.route == "binom" || c.route == "all") values.emplace_back("binom", euler_char_binomial(c.g, c.d));
  if (values.empty()) throw std::invalid_argument("route must be sub, res, binom or all");
  if (c.route == "all") values.emplace_back("hrr", euler_char_hrr(c.g, c.d).get_si());

  bool agree = true;
  ordered_json routes = ordered_json::object();
  for (const auto& [name, v] : values) {
    routes[name] = v;
    agree = agree && v == values.front().second;
    key_value(r, name, cell(v));
  }
  const std::int64_t twisted = euler_char_twisted(c.g, c.d);
  r.data["routes"] = routes;
  r.data["agree"] = agree;
  r.data["twisted"] = twisted;
  key_value(r, "agree", cell(agree));
  key_value(r, "twisted", cell(twisted));
  std::ostringstream line;
  line << "chi(L_x) at g=" << c.g << " d=" << c.d << ":";
  for (const auto& [name, v] : values) line << ' ' << name << '=' << v;
  line << (agree ? "  (agree)" : "  (DISAGREE)");
  r.text.push_back(line.str());
  r.text.push_back("chi(L_x(-p)) = " + cell(twisted));
  if (!agree) r.exit_code = kCheckFailed;
  return r;
}

Report ranks(const RunConfig& c) {
  if (c.g < 1) throw std::invalid_argument("need g >= 1");
  Report r;
  r.header = {"g", "d", "rank_Q", "rank_N", "polarity_defect"};
  ordered_json rows = ordered_json::array();
  const int lo = c.d > 0 ? c.d : 0;
  const int hi = c.d > 0 ? c.d : c.g - 1;
  for (int d = lo; d <= hi; ++d) {
    const auto [q, n] = rank_formulas(c.g, d);
    const std::int64_t defect = polarity_defect(c.g, d);
    rows.push_back({{"d", d}, {"rank_Q", q}, {"rank_N", n}, {"polarity_defect", defect}});
    r.rows.push_back({cell(c.g), cell(d), cell(q), cell(n), cell(defect)});
    r.text.push_back("d=" + cell(d) + "  rank Q=" + cell(q) + "  rank N=" + cell(n) + "  defect=" + cell(defect));
  }
  r.data["g"] = c.g;
  r.data["rows"] = rows;
  return r;
}

Report verlinde(const RunConfig& c) {
  const VerlindeResult v = verlinde_su2_detailed(c.g, c.k);
  Report r;
  r.data["g"] = c.g;
  r.data["k"] = c.k;
  r.data["value"] = big(v.value);
  r.data["precision_bits"] = v.precision_bits;
  r.data["residual"] = v.residual;
  key_value(r, "value", cell(v.value));
  key_value(r, "precision_bits", cell(v.precision_bits));
  key_value(r, "residual", cell(v.residual));
  r.text.push_back(cell(v.value));
  return r;
}

Report dims(const RunConfig& c) {
  if (c.g < 2 || c.g > 8) throw std::invalid_argument("need 2 <= g <= 8");
  Report r;
  const mpz_class sym_cube = sym_power_dim(c.g, 3);
  const mpz_class verlinde3 = verlinde_su2(c.g, 3);
  const auto k_cubics = k_invariant_cubic_dimension(c.g);
  const mpz_class quartics = invariant_quartic_count(c.g);
  const auto basis = invariant_quartic_dimension(c.g);
  const mpz_class even6 = even_theta_dim(c.g, 6);
  r.data["g"] = c.g;
  r.data["symCube"] = big(sym_cube);
  r.data["verlinde3"] = big(verlinde3);
  r.data["kInvCubics"] = k_cubics;
  r.data["invariantQuartics"] = big(quartics);
  r.data["quarticBasis"] = basis;
  r.data["evenTheta6"] = big(even6);
  r.data["cubicKernel"] = big(sym_cube - verlinde3);
  for (const auto& [key, value] : r.data.items())
    if (key != "schema" && key != "g") key_value(r, key, value.dump());
  for (const auto& row : r.rows) r.text.push_back(row[0] + " = " + row[1]);
  return r;
}

ordered_json label_json(const QuarticLabel& label) {
  ordered_json data = ordered_json::array();
  for (const auto& v : label.data) data.push_back(v.bits());
  return {{"type", label.type_name()}, {"data", data}};
}

Report invariants(const RunConfig& c) {
  if (c.g < 2 || c.g > 8) throw std::invalid_argument("need 2 <= g <= 8");
  Report r;
  const auto basis = quartic_basis(c.g);
  const auto cubics = k_invariant_cubics(c.g);
  r.data["g"] = c.g;
  ordered_json labels = ordered_json::array();
  r.header = {"index", "type", "data", "polynomial"};
  for (std::size_t i = 0; i < basis.size(); ++i) {
    labels.push_back(label_json(basis[i].label));
    std::string data;
    for (const auto& v : basis[i].label.data) data += (data.empty() ? "" : " ") + cell(v.bits());
    r.rows.push_back({cell(i), basis[i].label.type_name(), data, to_text(basis[i].poly)});
  }
  r.data["quartic_basis"] = labels;
  r.data["quartic_count"] = basis.size();
  r.data["k_invariant_cubic_count"] = cubics.size();
  r.text.push_back("invariant quartics: " + cell(basis.size()));
  r.text.push_back("K-invariant cubics: " + cell(cubics.size()));
  for (const auto& row : r.rows) r.text.push_back("  " + row[1] + " [" + row[2] + "]");
  return r;
}

Report restrict_lemma(const RunConfig& c) {
  const RestrictionCertificate cert = combined_restriction_is_injective(c.g);
  Report r;
  r.data["g"] = c.g;
  r.data["rank"] = cert.rank;
  r.data["dimension"] = cert.dimension;
  r.data["injective"] = cert.injective;
  r.data["outside_hypothesis"] = cert.outside_hypothesis;
  key_value(r, "rank", cell(cert.rank));
  key_value(r, "dimension", cell(cert.dimension));
  key_value(r, "injective", cell(cert.injective));
  std::string line = std::string(cert.injective ? "injective" : "not injective") + ", rank " + cell(cert.rank) + "/" +
                     cell(cert.dimension);
  if (cert.outside_hypothesis) line += " (g < 3: not asserted)";
  r.text.push_back(line);
  if (!cert.injective && !cert.outside_hypothesis) r.exit_code = kCheckFailed;
  return r;
}

Report reconstruction(const RunConfig& c, int g) {
  const std::uint64_t tau_seed = c.tau_seed.value_or(g == 2 ? acceptance::kTauSeedG2 : acceptance::kTauSeedG3);
  const SiegelTau tau = random_tau(g, tau_seed);
  const QuarticReconstruction q = g == 3 ? coble_quartic(tau, c.seed, c.tol) : kummer_quartic(tau, c.seed, c.tol);
  const auto basis = quartic_basis(g);

  Report r;
  r.data["g"] = g;
  r.data["seed"] = c.seed;
  r.data["tau_seed"] = tau_seed;
  ordered_json coeffs = ordered_json::array();
  r.header = {"index", "type", "data", "re", "im"};
  for (std::size_t i = 0; i < basis.size(); ++i) {
    coeffs.push_back({{"label", label_json(basis[i].label)}, {"value", complex_json(q.coordinates[i])}});
    std::string data;
    for (const auto& v : basis[i].label.data) data += (data.empty() ? "" : " ") + cell(v.bits());
    r.rows.push_back({cell(i), basis[i].label.type_name(), data, cell(q.coordinates[i].real()),
                      cell(q.coordinates[i].imag())});
    r.text.push_back(basis[i].label.type_name() + " [" + data + "]  " + cell(q.coordinates[i].real()) + " " +
                     cell(q.coordinates[i].imag()) + "i");
  }
  r.data["coefficients"] = coeffs;
  r.data["spectrum"] = q.kernel.spectrum;
  r.data["gap_ratio"] = q.kernel.gap_ratio;
  r.data["value_residual"] = q.value_residual;
  if (g == 3) r.data["gradient_residual"] = q.gradient_residual;
  r.data["invariance_residual"] = q.invariance_residual;
  r.text.push_back("gap ratio " + cell(q.kernel.gap_ratio) + ", value residual " + cell(q.value_residual) +
                   (g == 3 ? ", gradient residual " + cell(q.gradient_residual) : std::string()) +
                   ", invariance residual " + cell(q.invariance_residual));
  return r;
}

Report selftest(const RunConfig&) {
  Report r;
  r.header = {"criterion", "title", "passed", "seconds", "detail"};
  ordered_json list = ordered_json::array();
  for (const auto& res : acceptance::run_all()) {
    list.push_back({{"criterion", res.id},
                    {"title", res.title},
                    {"passed", res.passed},
                    {"seconds", res.seconds},
                    {"detail", res.detail}});
    r.rows.push_back({cell(res.id), res.title, cell(res.passed), cell(res.seconds), res.detail});
    r.text.push_back(acceptance::format_line(res));
    if (!res.passed) r.exit_code = kCheckFailed;
  }
  r.data["criteria"] = list;
  return r;
}

// ---------------------------------------------------------------------------

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

void emit(const Report& r, const std::string& command, const RunConfig& c) {
  ordered_json doc = {{"schema", "1"}, {"command", command}};
  for (const auto& [key, value] : r.data.items()) doc[key] = value;
  if (!c.json_path.empty()) {
    std::ofstream out(c.json_path);
    if (!out) throw std::runtime_error("cannot write " + c.json_path);
    out << doc.dump(2) << '\n';
  }
  if (c.format == "json") {
    std::cout << doc.dump(2) << '\n';
  } else if (c.format == "csv") {
    auto line = [](const std::vector<std::string>& cells) {
      std::string s;
      for (std::size_t i = 0; i < cells.size(); ++i) s += (i ? "," : "") + csv_escape(cells[i]);
      return s;
    };
    std::cout << line(r.header) << '\n';
    for (const auto& row : r.rows) std::cout << line(row) << '\n';
  } else {
    for (const auto& l : r.text) std::cout << l << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Theta-function workbench: Heisenberg invariants, intersection numbers and Kummer reconstructions"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--json", cfg.json_path, "Also write the JSON document to this path");
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  };
  struct Command {
    std::string name;
    std::string help;
    std::function<Report(const RunConfig&)> run;
    CLI::App* app = nullptr;
  };
  std::vector<Command> commands = {
      {"chern-table", "Top Chern class of Q_1 on the Jacobian", chern_table},
      {"euler", "Euler characteristics of L_x on S^d C by several routes", euler},
      {"ranks", "Ranks of Q_d and N_d and the polarity defect", ranks},
      {"verlinde", "SU(2) Verlinde number at genus g, level k", verlinde},
      {"dims", "Dimension counts around cubics and quartics", dims},
      {"invariants", "Heisenberg-invariant quartic basis and K-invariant cubics", invariants},
      {"restrict-lemma", "Injectivity of the combined eigenspace restriction", restrict_lemma},
      {"coble", "Numerical Coble quartic for a random genus-3 period matrix",
       [](const RunConfig& c) { return reconstruction(c, 3); }},
      {"kummer-quartic", "Numerical Kummer quartic for a random genus-2 period matrix",
       [](const RunConfig& c) { return reconstruction(c, 2); }},
      {"selftest", "Run every acceptance criterion", selftest},
  };
  for (auto& cmd : commands) {
    cmd.app = app.add_subcommand(cmd.name, cmd.help);
    common(cmd.app);
  }
  auto sub = [&](const std::string& name) {
    for (auto& cmd : commands)
      if (cmd.name == name) return cmd.app;
    return static_cast<CLI::App*>(nullptr);
  };
  sub("chern-table")->add_option("--gmin", cfg.gmin, "Smallest genus")->capture_default_str();
  sub("chern-table")->add_option("--gmax", cfg.gmax, "Largest genus")->capture_default_str();
  for (const char* name : {"euler", "ranks", "verlinde", "dims", "invariants", "restrict-lemma"})
    sub(name)->add_option("--g", cfg.g, "Genus")->required();
  sub("euler")->add_option("--d", cfg.d, "Degree")->required();
  sub("euler")->add_option("--route", cfg.route, "Route")->check(CLI::IsMember({"sub", "res", "binom", "all"}));
  sub("ranks")->add_option("--d", cfg.d, "Single degree (default: all 0..g-1)");
  sub("verlinde")->add_option("--k", cfg.k, "Level")->required();
  for (const char* name : {"coble", "kummer-quartic"}) {
    sub(name)->add_option("--seed", cfg.seed, "Sample seed")->capture_default_str();
    sub(name)->add_option("--tau-seed", cfg.tau_seed, "Seed of the random period matrix");
    sub(name)->add_option("--tol", cfg.tol, "Theta truncation tolerance")->capture_default_str();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  for (const auto& cmd : commands) {
    if (!cmd.app->parsed()) continue;
    try {
      const Report r = cmd.run(cfg);
      emit(r, cmd.name, cfg);
      return r.exit_code;
    } catch (const NumericIndeterminate& e) {
      std::cerr << "numeric indeterminacy: " << e.what() << '\n';
      if (!e.spectrum().empty()) {
        std::cerr << "spectrum:";
        for (double s : e.spectrum()) std::cerr << ' ' << s;
        std::cerr << '\n';
      }
      return kIndeterminate;
    } catch (const CheckFailure& e) {
      std::cerr << "check failed: " << e.what() << '\n';
      return kCheckFailed;
    } catch (const std::invalid_argument& e) {
      std::cerr << "invalid argument: " << e.what() << '\n';
      return kUsage;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kCheckFailed;
    }
  }
  return kUsage;
}
