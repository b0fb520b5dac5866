#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <nlohmann/json.hpp>
#include <sstream>

namespace adams_cli {
namespace {

using Json = nlohmann::ordered_json;

// Thrown inside run() to unwind with a specific exit code.
struct Failure {
  int code;
  std::string message;
};

int exit_for(adams_status s) {
  switch (s) {
    case ADAMS_OK: return kExitOk;
    case ADAMS_E_QUADRATURE: return kExitQuadrature;
    case ADAMS_E_INTERNAL: return kExitInternal;
    default: return kExitDomain;
  }
}

void check(adams_status s) {
  if (s != ADAMS_OK) {
    throw Failure{exit_for(s), std::string(adams_status_name(s)) + ": " + adams_last_error()};
  }
}

struct ProfileHandle {
  adams_profile* p = nullptr;
  ~ProfileHandle() { adams_profile_free(p); }
};

std::string number_17(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void dump(const Json& j, int level, std::ostringstream& out) {
  const std::string pad(static_cast<std::size_t>(2 * (level + 1)), ' ');
  const std::string close(static_cast<std::size_t>(2 * level), ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out << "{}";
        return;
      }
      out << "{\n";
      bool first = true;
      for (const auto& [key, val] : j.items()) {
        out << (first ? "" : ",\n") << pad << Json(key).dump() << ": ";
        first = false;
        dump(val, level + 1, out);
      }
      out << '\n' << close << '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out << "[]";
        return;
      }
      out << "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        out << (i ? ",\n" : "") << pad;
        dump(j[i], level + 1, out);
      }
      out << '\n' << close << ']';
      return;
    }
    case Json::value_t::number_float:
      out << number_17(j.get<double>());
      return;
    default:
      out << j.dump();
  }
}

std::string to_json_text(const Json& j) {
  std::ostringstream out;
  dump(j, 0, out);
  out << '\n';
  return out.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

class Params {
 public:
  explicit Params(const std::map<std::string, std::string>& m) : m_(m) {}
  bool has(const std::string& k) const { return m_.count(k) > 0; }
  std::string str(const std::string& k, const std::string& fallback = "") const {
    auto it = m_.find(k);
    return it == m_.end() ? fallback : it->second;
  }
  double num(const std::string& k, double fallback) const {
    return has(k) ? std::stod(m_.at(k)) : fallback;
  }
  double num(const std::string& k) const {
    if (!has(k)) throw Failure{kExitUsage, "missing --" + k};
    return std::stod(m_.at(k));
  }
  int integer(const std::string& k, int fallback) const {
    return has(k) ? std::stoi(m_.at(k)) : fallback;
  }
  int integer(const std::string& k) const {
    if (!has(k)) throw Failure{kExitUsage, "missing --" + k};
    return std::stoi(m_.at(k));
  }
  bool flag(const std::string& k) const { return has(k); }

 private:
  const std::map<std::string, std::string>& m_;
};

std::string read_all(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kExitDomain, "cannot read " + path};
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Json parse_profile_json(const adams_profile* p) {
  char* text = nullptr;
  check(adams_profile_to_json(p, &text));
  Json j = Json::parse(text);
  adams_string_free(text);
  return j;
}

// --- commands ---------------------------------------------------------------

std::string cmd_constants(const RunConfig& c, const Params& p) {
  const int m = p.integer("m");
  const int n = p.integer("n");
  double beta = 0.0;
  double product = 0.0;
  double sphere = 0.0;
  double ball = 0.0;
  check(adams_beta0(m, n, &beta));
  check(adams_beta0_product_form(m, n, &product));
  check(adams_sphere_constants(n, &sphere, &ball));
  if (c.output_format == "csv") {
    return "m,n,beta0,beta0_product_form,omega_sphere,omega_ball\n" + std::to_string(m) + "," +
           std::to_string(n) + "," + format_shortest(beta) + "," + format_shortest(product) + "," +
           format_shortest(sphere) + "," + format_shortest(ball) + "\n";
  }
  Json j;
  j["m"] = m;
  j["n"] = n;
  j["beta0"] = beta;
  j["beta0_product_form"] = product;
  j["omega_sphere"] = sphere;
  j["omega_ball"] = ball;
  return to_json_text(j);
}

std::string cmd_level(const RunConfig& c, const Params& p) {
  const int m = p.integer("m");
  const int n = p.integer("n");
  const double measure = p.num("measure", 1.0);
  double level = 0.0;
  check(adams_concentration_level(m, n, measure, &level));
  if (c.output_format == "csv") {
    return "m,n,measure,level\n" + std::to_string(m) + "," + std::to_string(n) + "," +
           format_shortest(measure) + "," + format_shortest(level) + "\n";
  }
  Json j;
  j["m"] = m;
  j["n"] = n;
  j["measure"] = measure;
  j["level"] = level;
  return to_json_text(j);
}

std::string cmd_hardy(const RunConfig& c, const Params& p) {
  const int trials = p.integer("trials", 100);
  Json j;
  if (p.str("mode", "sandwich") == "second-order") {
    const int n = p.integer("n");
    const double pp = p.num("p");
    const double q = p.num("q");
    const double R = p.num("R", 1.0);
    double ratio = 0.0;
    double constant = 0.0;
    check(adams_second_order_probe(n, pp, q, R, trials, c.seed, &ratio, &constant));
    j["mode"] = "second-order";
    j["n"] = n;
    j["p"] = pp;
    j["q"] = q;
    j["R"] = R;
    j["constant"] = constant;
    j["trials"] = trials;
    j["seed"] = c.seed;
    j["max_ratio"] = ratio;
    j["violation"] = ratio > constant;
  } else {
    adams_hardy_setup s{p.num("p"), p.num("q"), p.num("alpha"), p.num("theta"), p.num("R", 1.0),
                        p.str("side", "left") == "right" ? 1 : 0};
    double lower = 0.0;
    double upper = 0.0;
    double k = 0.0;
    double ratio = 0.0;
    check(adams_hardy_sandwich(&s, &lower, &upper, &k));
    check(adams_hardy_probe(&s, trials, c.seed, &ratio));
    j["mode"] = "sandwich";
    j["side"] = s.side == 0 ? "left" : "right";
    j["p"] = s.p;
    j["q"] = s.q;
    j["alpha"] = s.alpha;
    j["theta"] = s.theta;
    j["R"] = s.R;
    j["B"] = lower;
    j["k"] = k;
    j["upper"] = upper;
    j["trials"] = trials;
    j["seed"] = c.seed;
    j["max_ratio"] = ratio;
    j["violation"] = ratio > upper + 1e-9;
  }
  if (c.output_format == "csv") {
    std::string head;
    std::string row;
    for (const auto& [key, val] : j.items()) {
      head += (head.empty() ? "" : ",") + key;
      std::string cell = val.is_number_float() ? format_shortest(val.get<double>())
                         : val.is_string()     ? csv_field(val.get<std::string>())
                                               : val.dump();
      row += (row.empty() ? "" : ",") + cell;
    }
    return head + "\n" + row + "\n";
  }
  return to_json_text(j);
}

std::string cmd_rearrange(const RunConfig& c, const Params& p) {
  const std::string text = read_all(p.str("input", "-"));
  std::vector<double> measures;
  std::vector<double> values;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw Failure{kExitDomain, "rearrange: line " + std::to_string(line_no) + " is not measure,value"};
    }
    try {
      std::size_t used = 0;
      const double m = std::stod(line.substr(0, comma), &used);
      const double v = std::stod(line.substr(comma + 1));
      measures.push_back(m);
      values.push_back(v);
    } catch (const std::exception&) {
      if (line_no == 1) continue;  // header row
      throw Failure{kExitDomain, "rearrange: bad number on line " + std::to_string(line_no)};
    }
  }
  const std::size_t count = measures.size();
  std::vector<double> out_m(count);
  std::vector<double> out_v(count);
  std::vector<double> radii;
  check(adams_rearrange(measures.data(), values.data(), count, out_m.data(), out_v.data()));
  const bool radial = p.has("n");
  if (radial) {
    radii.resize(count);
    std::vector<double> tmp(count);
    check(adams_symmetrize(measures.data(), values.data(), count, p.integer("n"), radii.data(),
                           tmp.data()));
  }
  if (p.has("talenti-R")) {
    ProfileHandle h;
    check(adams_talenti(out_m.data(), out_v.data(), count, p.integer("n"), p.num("talenti-R"), &h.p));
    Json j;
    j["n"] = p.integer("n");
    j["R"] = p.num("talenti-R");
    j["profile"] = parse_profile_json(h.p);
    return to_json_text(j);
  }
  if (c.output_format == "json") {
    Json j;
    j["cells"] = Json::array();
    for (std::size_t i = 0; i < count; ++i) {
      Json cell;
      cell["measure"] = out_m[i];
      cell["value"] = out_v[i];
      if (radial) cell["radius"] = radii[i];
      j["cells"].push_back(cell);
    }
    return to_json_text(j);
  }
  std::string out = radial ? "measure,value,radius\n" : "measure,value\n";
  for (std::size_t i = 0; i < count; ++i) {
    out += format_shortest(out_m[i]) + "," + format_shortest(out_v[i]);
    if (radial) out += "," + format_shortest(radii[i]);
    out += "\n";
  }
  return out;
}

std::string cmd_cc(const RunConfig& c, const Params& p) {
  const double pp = p.num("p");
  const double q = pp / (pp - 1.0);
  const std::string family = p.str("family", "moser");
  ProfileHandle h;
  Json j;
  j["family"] = family;
  j["p"] = pp;
  j["q"] = q;
  double J = 0.0;
  if (family == "maximizer") {
    const double A = p.num("A", 5.0);
    const double eps = p.num("epsilon", 0.01);
    const int knots = p.integer("knots", 12);
    check(adams_concentration_maximizer(pp, A, eps, knots, c.seed, &c.quadrature, &h.p, &J));
    j["A"] = A;
    j["epsilon"] = eps;
    j["knots"] = knots;
    j["seed"] = c.seed;
  } else {
    if (family == "moser") {
      const double a = p.num("a");
      check(adams_moser_family(a, pp, &h.p));
      j["a"] = a;
    } else {
      check(adams_profile_from_json(read_all(p.str("profile", "-")).c_str(), &h.p));
    }
    check(adams_cc_functional(h.p, q, &c.quadrature, p.flag("unchecked") ? 0 : 1, &J));
  }
  double energy = 0.0;
  check(adams_energy(h.p, pp, 0.0, INFINITY, &c.quadrature, &energy));
  j["energy"] = energy;
  j["J"] = J;
  if (family == "maximizer") j["profile"] = parse_profile_json(h.p);
  if (c.output_format == "csv") {
    return "family,p,q,energy,J\n" + csv_field(family) + "," + format_shortest(pp) + "," +
           format_shortest(q) + "," + format_shortest(energy) + "," + format_shortest(J) + "\n";
  }
  return to_json_text(j);
}

std::string cmd_t0(const RunConfig& c) {
  double raw = 0.0;
  int t0 = 0;
  int threshold = 0;
  check(adams_t_zero(&raw, &t0, &threshold));
  if (c.output_format == "csv") {
    return "raw,T0,n_threshold\n" + format_shortest(raw) + "," + std::to_string(t0) + "," +
           std::to_string(threshold) + "\n";
  }
  Json j;
  j["raw"] = raw;
  j["T0"] = t0;
  j["n_threshold"] = threshold;
  return to_json_text(j);
}

std::string cmd_sweep(const RunConfig& c, const Params& p, bool& assertion_failed) {
  const int from = p.integer("n-from");
  const int to = p.integer("n-to");
  const int step = p.integer("step", 2);
  const bool extended = p.flag("extended");
  if (step < 1 || to < from) throw Failure{kExitDomain, "extremal-sweep: empty or invalid range"};
  int threshold = 0;
  {
    double raw = 0.0;
    int t0 = 0;
    check(adams_t_zero(&raw, &t0, &threshold));
  }
  std::vector<adams_verdict_row> rows;
  std::vector<adams_testfn_params> params;
  for (int n = from; n <= to; n += step) {
    adams_verdict_row row{};
    adams_testfn_params tp{};
    check(adams_extremal_params(n, extended ? 1 : 0, &tp));
    check(adams_extremal_verdict(n, extended ? 1 : 0, &c.quadrature, &row));
    rows.push_back(row);
    params.push_back(tp);
    if (n >= threshold) {
      const bool ok = row.gap_analytic && row.gap_numeric && row.norm_chain_bound <= 1.0 &&
                      row.norm_quadrature <= row.norm_chain_bound + 1e-9 &&
                      row.functional_quadrature >= row.functional_lower - 1e-8;
      if (!ok) assertion_failed = true;
    }
  }
  const auto b = [](int v) { return std::string(v ? "true" : "false"); };
  if (c.output_format == "json") {
    Json j;
    j["n_threshold"] = threshold;
    j["rows"] = Json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& r = rows[i];
      Json row;
      row["n"] = r.n;
      Json prm;
      prm["b"] = params[i].b;
      prm["s"] = params[i].s;
      prm["lambda"] = params[i].lambda;
      prm["sigma"] = params[i].sigma;
      prm["admissible"] = params[i].admissible != 0;
      row["params"] = prm;
      row["norm_chain"] = r.norm_chain_bound;
      row["norm_quad"] = r.norm_quadrature;
      row["J_lower"] = r.functional_lower;
      row["J_quad"] = r.functional_quadrature;
      row["level"] = r.level;
      row["gap_analytic"] = r.gap_analytic != 0;
      row["gap_numeric"] = r.gap_numeric != 0;
      j["rows"].push_back(row);
    }
    return to_json_text(j);
  }
  std::string out = "n,norm_chain,norm_quad,J_lower,J_quad,level,gap_analytic,gap_numeric\n";
  for (const auto& r : rows) {
    out += std::to_string(r.n) + "," + format_shortest(r.norm_chain_bound) + "," +
           format_shortest(r.norm_quadrature) + "," + format_shortest(r.functional_lower) + "," +
           format_shortest(r.functional_quadrature) + "," + format_shortest(r.level) + "," +
           b(r.gap_analytic) + "," + b(r.gap_numeric) + "\n";
  }
  return out;
}

// --- parsing ----------------------------------------------------------------

struct OptionSpec {
  const char* name;
  const char* help;
  enum Kind { kInt, kReal, kText, kFlag } kind;
};

void add_options(CLI::App* sub, const std::vector<OptionSpec>& specs,
                 std::map<std::string, std::string>& store,
                 std::vector<std::pair<std::string, CLI::Option*>>& registry) {
  for (const auto& s : specs) {
    CLI::Option* opt = nullptr;
    const std::string flag = std::string("--") + s.name;
    if (s.kind == OptionSpec::kFlag) {
      opt = sub->add_flag(flag, s.help);
    } else {
      opt = sub->add_option(flag, store[s.name], s.help);
      if (s.kind == OptionSpec::kInt) opt->check(CLI::TypeValidator<int>("INT"));
      if (s.kind == OptionSpec::kReal) opt->check(CLI::Number);
    }
    registry.emplace_back(s.name, opt);
  }
}

}  // namespace

std::string format_shortest(double v) {
  if (!std::isfinite(v)) return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, r.ptr);
}

ParseOutcome parse_args(const std::vector<std::string>& args, std::ostream& out,
                        std::ostream& err) {
  CLI::App app{"Sharp constants, concentration levels and extremal checks for Adams inequalities",
               "adams"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string format;
  std::string output;
  std::string seed_text = "0";
  std::string rel_tol;
  std::string truncation;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--output", output, "Write results to this file instead of stdout");
  app.add_option("--seed", seed_text, "Seed for randomized probes")
      ->check(CLI::TypeValidator<std::uint64_t>("UINT"));
  app.add_option("--rel-tol", rel_tol, "Quadrature relative tolerance")->check(CLI::Number);
  app.add_option("--truncation-eps", truncation, "Tail truncation tolerance")->check(CLI::Number);

  std::map<std::string, std::map<std::string, std::string>> stores;
  std::map<std::string, std::vector<std::pair<std::string, CLI::Option*>>> registry;
  const auto command = [&](const char* name, const char* help, const std::vector<OptionSpec>& specs) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_options(sub, specs, stores[name], registry[name]);
    return sub;
  };
  using K = OptionSpec;
  command("constants", "Sharp exponent beta0(m, n) and sphere constants",
          {{"m", "Derivative order", K::kInt}, {"n", "Dimension", K::kInt}})
      ->get_option("--m")->required();
  app.get_subcommand("constants")->get_option("--n")->required();
  command("level", "Concentration level |Omega| (1 + e^{psi(n/m) + gamma})",
          {{"m", "Derivative order", K::kInt},
           {"n", "Dimension", K::kInt},
           {"measure", "Domain measure (default 1)", K::kReal}});
  app.get_subcommand("level")->get_option("--m")->required();
  app.get_subcommand("level")->get_option("--n")->required();
  command("hardy", "Weighted Hardy sandwich and randomized probes",
          {{"mode", "sandwich | second-order", K::kText},
           {"p", "Derivative exponent", K::kReal},
           {"q", "Function exponent", K::kReal},
           {"alpha", "Derivative weight exponent", K::kReal},
           {"theta", "Function weight exponent", K::kReal},
           {"R", "Interval length (default 1)", K::kReal},
           {"side", "left | right vanishing endpoint", K::kText},
           {"n", "Dimension for second-order mode", K::kInt},
           {"trials", "Random trials (default 100)", K::kInt}});
  app.get_subcommand("hardy")->get_option("--mode")->check(CLI::IsMember({"sandwich", "second-order"}));
  app.get_subcommand("hardy")->get_option("--side")->check(CLI::IsMember({"left", "right"}));
  app.get_subcommand("hardy")->get_option("--p")->required();
  app.get_subcommand("hardy")->get_option("--q")->required();
  command("rearrange", "Decreasing rearrangement of measure,value CSV rows",
          {{"input", "CSV file or - for stdin (default -)", K::kText},
           {"n", "Dimension for symmetrization radii", K::kInt},
           {"talenti-R", "Emit the radial Poisson solution on B_R", K::kReal}});
  command("cc", "One-dimensional exponential functional J(g)",
          {{"p", "Energy exponent", K::kReal},
           {"family", "moser | file | maximizer", K::kText},
           {"a", "Moser family parameter", K::kReal},
           {"profile", "Profile JSON file for family=file", K::kText},
           {"A", "Concentration window for the maximizer", K::kReal},
           {"epsilon", "Energy allowed on (0, A)", K::kReal},
           {"knots", "Maximizer knot count", K::kInt},
           {"unchecked", "Skip the unit-energy check", K::kFlag}});
  app.get_subcommand("cc")->get_option("--p")->required();
  app.get_subcommand("cc")->get_option("--family")->check(CLI::IsMember({"moser", "file", "maximizer"}));
  command("extremal-sweep", "Test-function verdict rows over a range of n",
          {{"n-from", "First n", K::kInt},
           {"n-to", "Last n", K::kInt},
           {"step", "Step (default 2)", K::kInt},
           {"extended", "Allow odd n", K::kFlag},
           {"assert", "Exit 4 if a row at or above the threshold fails", K::kFlag}});
  app.get_subcommand("extremal-sweep")->get_option("--n-from")->required();
  app.get_subcommand("extremal-sweep")->get_option("--n-to")->required();
  command("t0", "Dimension threshold constant", {});

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return {std::nullopt, kExitOk};
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return {std::nullopt, kExitOk};
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return {std::nullopt, kExitUsage};
  }

  RunConfig config;
  CLI::App* sub = app.get_subcommands().front();
  config.command = sub->get_name();
  for (const auto& [name, opt] : registry[config.command]) {
    if (opt->count() == 0) continue;
    config.params[name] = opt->get_type_size() == 0 ? "true" : stores[config.command][name];
  }
  if (config.command == "hardy") {
    const bool second = config.params.count("mode") && config.params["mode"] == "second-order";
    const char* needed[] = {"alpha", "theta"};
    if (second && !config.params.count("n")) {
      err << "error: --n is required for --mode second-order\n\n" << sub->help();
      return {std::nullopt, kExitUsage};
    }
    for (const char* k : needed) {
      if (!second && !config.params.count(k)) {
        err << "error: --" << k << " is required for --mode sandwich\n\n" << sub->help();
        return {std::nullopt, kExitUsage};
      }
    }
  }
  if (config.command == "cc") {
    const std::string family = config.params.count("family") ? config.params["family"] : "moser";
    if (family == "moser" && !config.params.count("a")) {
      err << "error: --a is required for --family moser\n\n" << sub->help();
      return {std::nullopt, kExitUsage};
    }
  }
  if (config.command == "rearrange" && config.params.count("talenti-R") && !config.params.count("n")) {
    err << "error: --talenti-R requires --n\n\n" << sub->help();
    return {std::nullopt, kExitUsage};
  }

  const bool csv_default = config.command == "extremal-sweep" || config.command == "rearrange";
  config.output_format = !format.empty() ? format : (csv_default ? "csv" : "json");
  if (!output.empty()) config.output_path = output;
  config.seed = std::stoull(seed_text);
  adams_quad_spec_default(&config.quadrature);
  if (const char* env = std::getenv("ADAMS_QUAD_RTOL"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0') {
      err << "error: ADAMS_QUAD_RTOL is not a number: " << env << "\n";
      return {std::nullopt, kExitUsage};
    }
    config.quadrature.rel_tol = v;
  }
  if (!rel_tol.empty()) config.quadrature.rel_tol = std::stod(rel_tol);
  if (!truncation.empty()) config.quadrature.truncation_epsilon = std::stod(truncation);
  return {config, kExitOk};
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const Params p(config.params);
  bool assertion_failed = false;
  std::string text;
  try {
    if (config.command == "constants") {
      text = cmd_constants(config, p);
    } else if (config.command == "level") {
      text = cmd_level(config, p);
    } else if (config.command == "hardy") {
      text = cmd_hardy(config, p);
    } else if (config.command == "rearrange") {
      text = cmd_rearrange(config, p);
    } else if (config.command == "cc") {
      text = cmd_cc(config, p);
    } else if (config.command == "extremal-sweep") {
      text = cmd_sweep(config, p, assertion_failed);
    } else if (config.command == "t0") {
      text = cmd_t0(config);
    } else {
      err << "error: unknown command " << config.command << "\n";
      return kExitUsage;
    }
  } catch (const Failure& f) {
    err << "error: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInternal;
  }

  if (config.output_path) {
    std::ofstream file(*config.output_path, std::ios::binary | std::ios::trunc);
    if (!file || !(file << text)) {
      err << "error: cannot write " << *config.output_path << "\n";
      return kExitDomain;
    }
  } else {
    out << text;
  }
  if (assertion_failed) {
    err << "assertion: a verdict row at or above the threshold failed\n";
    return kExitAssertion;
  }
  return kExitOk;
}

}  // namespace adams_cli
