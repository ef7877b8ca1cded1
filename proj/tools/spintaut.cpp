#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "spintaut/hodge.hpp"
#include "spintaut/integrate.hpp"
#include "spintaut/io.hpp"
#include "spintaut/spin.hpp"
#include "spintaut/strata.hpp"
#include "spintaut/verify.hpp"

using namespace spintaut;

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 2;
constexpr int kVerifyFailed = 3;

struct Request {
  int g = -1;
  int n = -1;
  std::string a;
  int k = 1;
  int deg = -1;
  int m = -1;
  int r_window = 0;
  std::string left, right;
  std::string cache;
  std::string format = "json";
  int threads = 0;
};

std::vector<int> parse_vector(const std::string& text) {
  if (text.empty()) throw ValidationError("vector", "--a is required, e.g. --a=3,-1");
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size())
      throw ValidationError("vector", "malformed entry '" + item + "' in --a; use comma-separated integers");
    out.push_back(v);
  }
  return out;
}

void need(bool ok, const std::string& what) {
  if (!ok) throw ValidationError("arguments", what);
}

int signature_n(const Request& r) { return static_cast<int>(parse_vector(r.a).size()); }

void emit_class(const Request& r, int g, int n, const TautClass& x) {
  if (r.format == "json")
    std::cout << class_document(g, n, x).dump(2) << "\n";
  else
    std::cout << "class on M_" << g << "," << n << "\n" << class_to_text(x);
}

void emit_series(const Request& r, int g, int n, const SeriesClass& s) {
  if (r.format == "json") {
    Json doc;
    doc["schema"] = kSchema;
    doc["g"] = g;
    doc["n"] = n;
    doc["series"] = Json::array();
    for (const auto& c : s.coeffs) doc["series"].push_back(class_to_json(c));
    std::cout << doc.dump(2) << "\n";
  } else {
    for (int d = 0; d <= s.max_degree(); ++d) std::cout << "t^" << d << ":\n" << class_to_text(s.coeffs[d]);
  }
}

int emit_check(const Request& r, const std::string& suite, const CheckResult& c) {
  if (r.format == "json") {
    Json doc;
    doc["schema"] = kSchema;
    doc["suite"] = suite;
    doc["ok"] = c.ok;
    doc["detail"] = c.detail;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << (c.ok ? "PASS " : "FAIL ") << suite << ": " << c.detail << "\n";
  }
  return c.ok ? kOk : kVerifyFailed;
}

TautClass read_class(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("input", "cannot read " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::exception& e) {
    throw ValidationError("json", path + ": " + e.what());
  }
  return class_from_document(doc);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact spin tautological classes on moduli of curves"};
  app.require_subcommand(1);
  app.fallthrough();
  Request r;
  app.add_option("--cache", r.cache, "integral cache file (default: $SPINTAUT_CACHE)");
  app.add_option("--format", r.format, "output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--threads", r.threads, "cap on worker threads (0 = hardware)")->check(CLI::NonNegativeNumber);

  auto add_g = [&](CLI::App* s) { s->add_option("--g", r.g, "genus")->required()->check(CLI::NonNegativeNumber); };
  auto add_n = [&](CLI::App* s) { s->add_option("--n", r.n, "number of markings")->check(CLI::NonNegativeNumber); };
  auto add_a = [&](CLI::App* s) { s->add_option("--a", r.a, "signature, e.g. --a=3,-1")->required(); };
  auto add_k = [&](CLI::App* s) { s->add_option("--k", r.k, "k (odd, positive)"); };

  auto* pixton = app.add_subcommand("pixton", "degree-c spin Pixton class");
  add_g(pixton), add_a(pixton), add_k(pixton);
  pixton->add_option("--deg", r.deg, "degree c")->required();
  pixton->add_option("--r-window", r.r_window, "first r of the sampling window");
  auto* dr = app.add_subcommand("dr", "spin double ramification cycle");
  add_g(dr), add_a(dr), add_k(dr);
  auto* star = app.add_subcommand("stargraph", "star-graph sum H(a,k)");
  add_g(star), add_a(star), add_k(star);
  auto* strata = app.add_subcommand("strata", "signed stratum class");
  add_g(strata), add_a(strata), add_k(strata);
  auto* segre = app.add_subcommand("segre", "spin segre series s_g(t)");
  add_g(segre), add_n(segre);
  segre->add_option("--deg", r.deg, "top t-degree");
  auto* mero = app.add_subcommand("segre-mero", "meromorphic series with the pole at leg 1");
  add_g(mero), add_n(mero);
  mero->add_option("--deg", r.deg, "top t-degree");
  auto* dconst = app.add_subcommand("dconst", "the constant d(g,m)");
  add_g(dconst);
  dconst->add_option("--m", r.m, "m")->required()->check(CLI::NonNegativeNumber);
  auto* lambda = app.add_subcommand("lambda", "Hodge class lambda_j");
  add_g(lambda), add_n(lambda);
  lambda->add_option("--deg", r.deg, "j")->required();
  auto* pair = app.add_subcommand("pair", "intersection pairing of two class documents");
  pair->add_option("--left", r.left, "class JSON file")->required();
  pair->add_option("--right", r.right, "class JSON file")->required();

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->require_subcommand(1);
  auto* v_round = verify->add_subcommand("roundtrip", "segre round trip");
  add_g(v_round), add_n(v_round);
  auto* v_mumford = verify->add_subcommand("mumford", "Mumford identity");
  add_g(v_mumford), add_n(v_mumford);
  auto* v_poly = verify->add_subcommand("polynomiality", "spin Pixton polynomiality for c <= g");
  add_g(v_poly), add_a(v_poly), add_k(v_poly);
  auto* v_thm = verify->add_subcommand("thm12", "DR equals the star-graph sum");
  add_g(v_thm), add_a(v_thm), add_k(v_thm);
  auto* v_dvv = verify->add_subcommand("dvv", "DVV base values, string and dilaton");
  auto* v_dconst = verify->add_subcommand("dconst", "d-constant identities and L_g(0)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  if (r.cache.empty())
    if (const char* env = std::getenv("SPINTAUT_CACHE")) r.cache = env;
  if (!r.cache.empty() && std::filesystem::exists(r.cache) && !integral_cache::load(r.cache))
    std::cerr << "warning: ignoring cache " << r.cache << " (version mismatch or failed spot-check)\n";
  set_thread_limit(r.threads);

  // small genera need markings to be stable
  auto default_n = [&](int g) { return r.n >= 0 ? r.n : (g == 0 ? 3 : g == 1 ? 1 : 0); };

  int status = kOk;
  try {
    if (*pixton) {
      auto a = parse_vector(r.a);
      std::optional<int> start;
      if (r.r_window > 0) start = r.r_window;
      emit_class(r, r.g, signature_n(r), pixton_spin(r.g, a, r.k, r.deg, start));
    } else if (*dr) {
      emit_class(r, r.g, signature_n(r), dr_spin(r.g, parse_vector(r.a), r.k));
    } else if (*star) {
      emit_class(r, r.g, signature_n(r), stargraph_spin(r.g, parse_vector(r.a), r.k));
    } else if (*strata) {
      auto a = parse_vector(r.a);
      emit_class(r, r.g, signature_n(r), stratum_class_spin(r.g, a, r.k));
    } else if (*segre || *mero) {
      const int n = default_n(r.g);
      const int dim = 3 * r.g - 3 + n;
      need(2 * r.g - 2 + n > 0, "unstable (g, n); add markings with --n");
      const int deg = r.deg < 0 ? dim : r.deg;
      need(deg >= 0 && deg <= dim, "--deg must lie in [0, 3g-3+n]");
      emit_series(r, r.g, n, *segre ? segre_spin(r.g, n, deg) : segre_spin_mero(r.g, n, deg));
    } else if (*dconst) {
      // d(g,m) is integral; print it as an integer
      std::cout << d_constant(r.g, r.m).get_num().get_str() << "\n";
    } else if (*lambda) {
      const int n = default_n(r.g);
      need(2 * r.g - 2 + n > 0, "unstable (g, n); add markings with --n");
      need(r.deg >= 0, "--deg must be nonnegative");
      emit_class(r, r.g, n, r.deg == 0 ? TautClass::fundamental(Ambient::connected(r.g, n)) : lambda_class(r.g, n, r.deg));
    } else if (*pair) {
      TautClass x = read_class(r.left), y = read_class(r.right);
      need(x.ambient() == y.ambient(), "both classes must live on the same moduli space");
      const int dim = x.ambient().dimension();
      Rational total = 0;
      for (int d = 0; d <= dim; ++d) {
        TautClass xd = x.degree_part(d), yd = y.degree_part(dim - d);
        if (!xd.is_zero() && !yd.is_zero()) total += pairing(xd, yd);
      }
      std::cout << to_string(total) << "\n";
    } else if (*v_round) {
      status = emit_check(r, "roundtrip", check_roundtrip(r.g, default_n(r.g)));
    } else if (*v_mumford) {
      status = emit_check(r, "mumford", check_mumford(r.g, default_n(r.g)));
    } else if (*v_poly) {
      status = emit_check(r, "polynomiality", check_polynomiality(r.g, parse_vector(r.a), r.k));
    } else if (*v_thm) {
      status = emit_check(r, "thm12", check_star_identity(r.g, parse_vector(r.a), r.k));
    } else if (*v_dvv) {
      status = emit_check(r, "dvv", check_dvv(20261016u, 50));
    } else if (*v_dconst) {
      CheckResult c = check_dconst();
      CheckResult l = check_L_constant();
      if (!l.ok) c = l;
      else if (c.ok) c.detail += "; " + l.detail;
      status = emit_check(r, "dconst", c);
    }
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const PolynomialityError& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kVerifyFailed;
  }
  if (!r.cache.empty()) integral_cache::save(r.cache);
  return status;
}
