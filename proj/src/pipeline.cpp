#include "nilcert/pipeline.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "nilcert/certificate.hpp"
#include "nilcert/ln.hpp"

namespace nilcert {

namespace {

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open " + path + " for writing");
  file << contents;
  if (!file) throw UsageError("failed writing " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open " + path);
  std::ostringstream s;
  s << file.rdbuf();
  return s.str();
}

nlohmann::ordered_json metrics_json(const StructuralMetrics& s) {
  nlohmann::ordered_json j;
  j["height"] = s.height;
  j["shortestSinkPath"] = s.shortest_sink_path;
  j["vertices"] = s.vertex_count;
  j["edges"] = s.edge_count;
  j["sinks"] = s.leaf_count;
  j["treeLeaves"] = s.tree_leaf_count;
  return j;
}

std::string metrics_text(const StructuralMetrics& s) {
  std::ostringstream out;
  out << s.vertex_count << " vertices, " << s.edge_count << " edges, " << s.leaf_count
      << " sinks, height " << s.height << ", shortest sink path " << s.shortest_sink_path
      << ", tree leaves " << s.tree_leaf_count;
  return out.str();
}

std::string polynomial_text(const std::vector<std::string>& coeffs) {
  std::string s;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (k) s += " + ";
    s += coeffs[k];
    if (k == 1) s += "*T";
    if (k > 1) s += "*T^" + std::to_string(k);
  }
  return s;
}

}  // namespace

std::vector<mpz_class> parse_coefficients(const std::string& text) {
  std::vector<mpz_class> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw UsageError("empty coefficient in '" + text + "'");
    item = item.substr(first, last - first + 1);
    mpz_class value;
    if (value.set_str(item, 10) != 0) throw UsageError("bad coefficient '" + item + "'");
    out.push_back(value);
  }
  if (out.empty() || text.back() == ',') throw UsageError("bad coefficient list '" + text + "'");
  return out;
}

nlohmann::ordered_json RunReport::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["m"] = m;
  j["mode"] = mode;
  if (mode == "concrete") {
    j["ring"] = ring;
    j["f"] = f;
    j["g"] = g;
  }
  j["earlyStop"] = early_stop;
  auto& ts = j["targets"] = nlohmann::ordered_json::array();
  for (const auto& t : targets) {
    nlohmann::ordered_json e;
    e["i0"] = t.target;
    e["e"] = t.exponent;
    if (t.minimal) e["minimal"] = *t.minimal;
    e["status"] = t.status;
    if (t.metrics) e["metrics"] = metrics_json(*t.metrics);
    ts.push_back(e);
  }
  j["metrics"] = metrics ? metrics_json(*metrics) : nlohmann::ordered_json();
  j["certificate"] = certificate;
  auto& fs = j["files"] = nlohmann::ordered_json::object();
  for (const auto& [kind, path] : files) fs[kind] = path;
  return j;
}

std::string RunReport::to_text() const {
  std::ostringstream out;
  out << "instance: " << mode;
  if (mode == "concrete") out << " over " << ring;
  out << ", n=" << n << ", m=" << m << "\n";
  if (mode == "concrete") {
    out << "f = " << polynomial_text(f) << "\n";
    out << "g = " << polynomial_text(g) << "\n";
  }
  if (metrics) out << "digraph: " << metrics_text(*metrics) << "\n";
  for (const auto& t : targets) {
    out << "target a" << t.target << ": e=" << t.exponent << " " << t.status;
    if (t.minimal) out << " (minimal " << *t.minimal << ")";
    out << "\n";
    if (t.metrics) out << "  digraph: " << metrics_text(*t.metrics) << "\n";
  }
  out << "certificate: " << certificate << "\n";
  for (const auto& [kind, path] : files) out << kind << ": " << path << "\n";
  return out.str();
}

RunReport run_pipeline(const ProblemInstance& instance, const RunFlags& flags) {
  RunReport report;
  report.n = instance.n;
  report.m = instance.m;
  report.early_stop = flags.early_stop;
  report.mode = instance.is_generic() ? "generic" : "concrete";

  if (!instance.is_generic()) {
    const auto& mode = instance.concrete_mode();
    report.ring = mode.ring.to_string();
    for (const auto& x : mode.a) report.f.push_back(x.get_str());
    for (const auto& x : mode.b) report.g.push_back(x.get_str());
    if (auto bad = check_unit(convolution(mode.a, mode.b, mode.ring))) throw NotAUnit(*bad);
  }

  const auto oracle = make_oracle(instance);
  std::optional<Digraph> shared;
  if (!flags.early_stop) {
    shared = grow_digraph(instance, *oracle);
    report.metrics = structural_metrics(*shared);
  }

  std::optional<WitnessBuilder> builder;
  const bool want_certs = instance.is_generic() && flags.certificates;
  if (want_certs) builder.emplace(instance.n, instance.m);
  std::string cert_dump;
  std::string dot;
  bool any_failed = false;

  for (unsigned target : instance.targets) {
    TargetReport t;
    t.target = target;
    std::optional<Digraph> own;
    if (flags.early_stop) {
      own = grow_digraph(instance, *oracle, SplitOptions{true, target});
      t.metrics = structural_metrics(*own);
    }
    const Digraph& d = own ? *own : *shared;
    if (dot.empty()) dot = emit_dot(d);
    t.exponent = d.root().exponent;

    if (instance.is_generic()) {
      if (want_certs) {
        const auto cert = extract_certificate(d, target, *builder);
        const bool ok = verify_symbolic(cert).pass;
        t.status = ok ? "verified" : "failed";
        any_failed = any_failed || !ok;
        cert_dump += dump_certificate(cert);
      } else {
        t.status = "not-applicable";
      }
    } else {
      const auto check = verify_concrete(instance, target, t.exponent);
      t.status = check.pass ? "verified" : "failed";
      any_failed = any_failed || !check.pass;
      if (flags.minimal) t.minimal = check.minimal;
    }
    report.targets.push_back(std::move(t));
  }

  if (instance.is_generic() && !flags.certificates) {
    report.certificate = "not-applicable";
  } else {
    report.certificate = any_failed ? "failed" : "verified";
  }

  if (!flags.emit_dot.empty()) {
    write_file(flags.emit_dot, dot);
    report.files.emplace_back("dot", flags.emit_dot);
  }
  if (!flags.emit_cert.empty()) {
    if (want_certs) {
      write_file(flags.emit_cert, cert_dump);
      report.files.emplace_back("certificate", flags.emit_cert);
    } else {
      report.notices.push_back("no certificate to emit in this mode; --emit-cert ignored");
    }
  }
  if (flags.minimal && instance.is_generic())
    report.notices.push_back("--minimal applies to concrete instances only");
  if (!flags.emit_json.empty()) {
    report.files.emplace_back("json", flags.emit_json);
    write_file(flags.emit_json, report.to_json().dump(2) + "\n");
  }
  return report;
}

// --- command line --------------------------------------------------------------

namespace {

void add_run_flags(CLI::App* cmd, RunFlags& flags, std::vector<unsigned>& targets) {
  cmd->add_option("--target", targets, "Target index i0 in [1, n]; repeatable (default: all)");
  cmd->add_option("--emit-dot", flags.emit_dot, "Write the digraph in Graphviz format");
  cmd->add_option("--emit-cert", flags.emit_cert, "Write the certificate dump");
  cmd->add_option("--emit-json", flags.emit_json, "Write the JSON report");
  cmd->add_flag("--json", flags.json, "Print the JSON report instead of text");
  cmd->add_flag("--early-stop", flags.early_stop, "Stop once the target lies in the ideal");
}

int report_error(std::ostream& err, const std::string& cls, const std::string& what, int code) {
  err << "ERROR:" << cls << ": " << what << "\n";
  return code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nilpotency exponents and certificates for coefficients of unit polynomials", "nilcert"};
  app.require_subcommand(1);

  RunFlags flags;
  std::vector<unsigned> targets;
  unsigned n = 0;
  unsigned m = 0;
  std::string modulus_text;
  std::string f_text;
  std::string g_text;
  std::uint64_t ln_modulus = 0;
  std::uint64_t ln_ideal = 0;
  std::string cert_path;

  auto* generic = app.add_subcommand("generic", "Indeterminate coefficients of degrees n, m");
  generic->add_option("--n", n, "Degree of f")->required();
  generic->add_option("--m", m, "Degree of g")->required();
  generic->add_flag("--no-cert", [&](std::int64_t) { flags.certificates = false; },
                    "Skip certificate construction");
  add_run_flags(generic, flags, targets);

  auto* concrete = app.add_subcommand("concrete", "Coefficients in Z/N");
  concrete->add_option("--modulus", modulus_text, "N >= 2")->required();
  concrete->add_option("--f", f_text, "Coefficients of f, lowest degree first")->required();
  concrete->add_option("--g", g_text, "Coefficients of g, lowest degree first")->required();
  concrete->add_flag("--minimal", flags.minimal, "Report the least exponent that works");
  add_run_flags(concrete, flags, targets);

  auto* ln = app.add_subcommand("ln", "Prime decomposition of the radical of (d) in Z/N");
  ln->add_option("--modulus", ln_modulus, "N >= 2")->required();
  ln->add_option("--ideal", ln_ideal, "Generator d dividing N")->required();
  ln->add_flag("--json", flags.json, "Print JSON instead of text");

  auto* pascal = app.add_subcommand("pascal", "Exponent grid for degrees n, m");
  pascal->add_option("--n", n, "Degree of f")->required();
  pascal->add_option("--m", m, "Degree of g")->required();
  pascal->add_flag("--json", flags.json, "Print JSON instead of text");

  auto* verify = app.add_subcommand("verify-cert", "Re-check a certificate dump");
  verify->add_option("file", cert_path, "Certificate dump")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    return report_error(err, "usage", e.what(), kExitUsage);
  }

  try {
    if (*generic || *concrete) {
      ProblemInstance instance;
      if (*generic) {
        instance = ProblemInstance::generic(n, m, targets);
      } else {
        const auto ring = RingHandle::modular(mpz_class(modulus_text));
        auto a = parse_coefficients(f_text);
        auto b = parse_coefficients(g_text);
        for (const auto* list : {&a, &b}) {
          for (const auto& x : *list) {
            if (x < 0 || x >= ring.modulus())
              err << "NOTICE: coefficient " << x.get_str() << " reduced mod "
                  << ring.modulus().get_str() << "\n";
          }
        }
        instance = ProblemInstance::concrete(ring, std::move(a), std::move(b), targets);
      }
      const auto report = run_pipeline(instance, flags);
      for (const auto& notice : report.notices) err << "NOTICE: " << notice << "\n";
      out << (flags.json ? report.to_json().dump(2) + "\n" : report.to_text());
      return report.all_verified() ? kExitOk
                                   : report_error(err, "verification",
                                                  "a requested verification failed",
                                                  kExitVerification);
    }
    if (*ln) {
      const auto primes = ln_decompose(ln_modulus, ln_ideal);
      const auto radical = radical_modn(ln_modulus, ln_ideal);
      std::uint64_t product = 1;
      for (auto p : primes) product *= p;
      const bool ok = product == radical;
      if (flags.json) {
        nlohmann::ordered_json j;
        j["modulus"] = ln_modulus;
        j["ideal"] = ln_ideal;
        j["radical"] = radical;
        j["primes"] = primes;
        j["verified"] = ok;
        out << j.dump(2) << "\n";
      } else {
        out << "radical of (" << ln_ideal << ") in Z/" << ln_modulus << ": (" << radical << ")\n";
        out << "primes:";
        for (auto p : primes) out << " " << p;
        out << "\n";
      }
      return ok ? kExitOk
                : report_error(err, "verification", "primes do not meet to the radical",
                               kExitVerification);
    }
    if (*pascal) {
      if (n < 1) throw UsageError("n must be at least 1");
      const auto grid = pascal_grid(n, m);
      if (flags.json) {
        nlohmann::ordered_json j;
        j["n"] = n;
        j["m"] = m;
        j["grid"] = grid;
        j["root"] = grid[0][0];
        out << j.dump(2) << "\n";
      } else {
        std::size_t width = std::to_string(grid[0][0]).size();
        for (const auto& row : grid) {
          for (std::size_t p = 0; p < row.size(); ++p) {
            if (p) out << ' ';
            if (row[p] == 0)
              out << std::setw(static_cast<int>(width)) << '.';
            else
              out << std::setw(static_cast<int>(width)) << row[p];
          }
          out << "\n";
        }
        out << "root exponent: " << grid[0][0] << "\n";
      }
      return kExitOk;
    }
    if (*verify) {
      const auto certs = parse_certificates(read_file(cert_path));
      bool ok = true;
      for (const auto& cert : certs) {
        const bool pass = verify_symbolic(cert).pass;
        out << "i0=" << cert.target << " e=" << cert.exponent << ": "
            << (pass ? "verified" : "failed") << "\n";
        ok = ok && pass;
      }
      return ok ? kExitOk
                : report_error(err, "verification", "certificate does not expand to zero",
                               kExitVerification);
    }
  } catch (const NotAUnit& e) {
    return report_error(err, "not-a-unit", e.what(), kExitNotAUnit);
  } catch (const UsageError& e) {
    return report_error(err, "usage", e.what(), kExitUsage);
  } catch (const std::invalid_argument& e) {
    return report_error(err, "usage", e.what(), kExitUsage);
  } catch (const std::exception& e) {
    return report_error(err, "internal", e.what(), kExitInternal);
  }
  return kExitUsage;
}

}  // namespace nilcert
