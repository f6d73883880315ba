// cubiclat: exact-arithmetic certificates for sublattices of the cubic
// fourfold cohomology model, plus the discriminant predicates around them.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cubiclat/ambient.hpp"
#include "cubiclat/certificate.hpp"
#include "cubiclat/errors.hpp"
#include "cubiclat/json_io.hpp"
#include "cubiclat/linalg.hpp"
#include "cubiclat/predicates.hpp"
#include "cubiclat/short_vectors.hpp"

namespace {

using namespace cubiclat;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;    // check failed / predicate false / infeasible
constexpr int kExitUsage = 2;   // usage or input error

std::vector<Int> parse_int_list(const std::vector<std::string>& raw) {
  std::vector<Int> out;
  out.reserve(raw.size());
  for (const std::string& s : raw) out.push_back(parse_decimal(s));
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

std::string tri_line(const RatioWitness& w, const char* n_key,
                     const char* a_key) {
  if (w.status == TriState::True) {
    return "true   (" + std::string(n_key) + "=" + to_decimal(*w.n) + ", " +
           a_key + "=" + to_decimal(*w.a) + ")";
  }
  return "false up to a <= " + to_decimal(w.bound);
}

// ---- info ------------------------------------------------------------

int run_info(bool as_json) {
  const AmbientModel& m = build_ambient();
  if (as_json) {
    ordered_json out;
    out["rank"] = "25";
    out["blocks"] = {"E8 (t1.1..t1.8)", "E8 (t2.1..t2.8)", "U (e1.1, e1.2)",
                     "U (e2.1, e2.2)", "A2 (a1, a2)", "I3 (f1, f2, f3)"};
    out["h2"] = {"f1", "f2", "f3"};
    out["h2_norm"] = to_decimal(ambient_pairing(m.h2, m.h2));
    out["columns"] = m.names;
    ordered_json gram = ordered_json::array();
    for (std::size_t i = 0; i < kAmbientRank; ++i) {
      ordered_json row = ordered_json::array();
      for (std::size_t j = 0; j < kAmbientRank; ++j) {
        row.push_back(to_decimal(m.gram(i, j)));
      }
      gram.push_back(std::move(row));
    }
    out["gram"] = std::move(gram);
    std::cout << out.dump(2) << "\n";
    return kExitPass;
  }
  std::cout << "ambient lattice: rank 25\n"
            << "blocks: E8 (t1.1..t1.8), E8 (t2.1..t2.8), U (e1.1,e1.2), "
               "U (e2.1,e2.2), A2 (a1,a2), I3 (f1,f2,f3)\n"
            << "h2 = f1 + f2 + f3, (h2,h2) = "
            << ambient_pairing(m.h2, m.h2) << "\n";
  return kExitPass;
}

// ---- predicates ------------------------------------------------------

int run_predicates(const std::string& d_raw, const std::string& bound_raw,
                   bool as_json) {
  const Int d = parse_decimal(d_raw);
  const Int bound = parse_decimal(bound_raw);
  if (sgn(bound) <= 0) throw Error("--bound must be positive");
  const PredicateReport r = predicate_report(d, bound);
  if (as_json) {
    // the same shape as inside certificates
    std::cout << predicate_report_to_json_text(r);
    return r.star ? kExitPass : kExitFail;
  }
  std::cout << "d = " << d << "\n";
  std::cout << "  star        (d>=8, d=0,2 mod 6) : "
            << (r.star ? "true" : "false") << "\n";
  std::cout << "  double_star (6m^2 or 6m^2+2)    : ";
  if (r.double_star.holds) {
    std::cout << "true   (m=" << *r.double_star.m << ")\n";
  } else {
    std::cout << "false\n";
  }
  std::cout << "  assoc_k3    (4,9,p=2[3] coprime): "
            << (r.assoc_k3 ? "true" : "false") << "\n";
  std::cout << "  bulles      (d=f^2 g)           : ";
  if (r.bulles.holds) {
    std::cout << "true   (f=" << *r.bulles.f << ", g=" << *r.bulles.g
              << ", n=" << *r.bulles.n << ")\n";
  } else {
    std::cout << "false\n";
  }
  std::cout << "  llsvs       ((6n^2+6n+2)/a^2)   : "
            << tri_line(r.llsvs, "n", "a") << "\n";
  std::cout << "  fano_hilb   (2(n^2+n+1))        : ";
  if (r.fano_hilb.holds) {
    std::cout << "true   (n=" << *r.fano_hilb.n << ")\n";
  } else {
    std::cout << "false\n";
  }
  std::cout << "  addington   ((2n^2+2n+2)/a^2)   : "
            << tri_line(r.addington, "n", "a") << "\n";
  return r.star ? kExitPass : kExitFail;
}

// ---- certify ---------------------------------------------------------

void print_certificate_summary(const Certificate& cert) {
  std::cout << "tuple:";
  for (const Int& d : cert.tuple) std::cout << " " << d;
  std::cout << "\nmode: " << cert.mode << "\n";
  std::cout << "rank: " << cert.checks.rank
            << "  positive_definite: "
            << (cert.checks.positive_definite ? "true" : "false")
            << "  min_nonzero_norm: " << cert.checks.min_nonzero_norm
            << "  no_norm2_vectors: "
            << (cert.checks.no_norm2_vectors ? "true" : "false") << "\n";
  std::cout << "labellings:";
  for (const LabellingCheck& lab : cert.labellings) {
    std::cout << " " << lab.discriminant
              << (lab.matches_d && lab.saturated_in_m ? "" : "(!)");
  }
  std::cout << "\n";
  if (cert.k3.ns_rank_lower_bound) {
    std::cout << "k3: ns_rank_lower_bound = " << *cert.k3.ns_rank_lower_bound
              << "\n";
  } else {
    std::cout << "k3: no discriminant with an associated K3 surface\n";
  }
  std::cout << "verdict: " << (cert.passed() ? "pass" : "fail") << "\n";
  if (!cert.passed()) {
    std::cout << "failed:";
    for (const std::string& f : cert.failed_checks) std::cout << " " << f;
    std::cout << "\n";
  }
}

int emit_certificate(const Certificate& cert, const std::string& out_path,
                     bool as_json) {
  const std::string text = certificate_to_json_text(cert);
  if (!out_path.empty()) write_file(out_path, text);
  if (as_json) {
    std::cout << text;
  } else {
    print_certificate_summary(cert);
  }
  return cert.passed() ? kExitPass : kExitFail;
}

int run_certify(const std::vector<std::string>& disc_raw,
                const std::string& mode, const std::vector<std::string>& params,
                const std::string& bound_raw, const std::string& out_path,
                bool as_json) {
  const Int bound = parse_decimal(bound_raw);
  Certificate cert;
  if (mode == "auto") {
    if (!params.empty()) throw Error("--params only applies to case mode");
    if (disc_raw.empty()) throw Error("certify needs --discriminants");
    cert = certify(parse_int_list(disc_raw), bound);
  } else if (mode.rfind("case:", 0) == 0) {
    const std::string case_id = mode.substr(5);
    if (params.empty()) throw Error("case mode needs --params n1,n2,...");
    cert = certify_case(case_id, parse_int_list(params), bound);
    if (!disc_raw.empty() && parse_int_list(disc_raw) != cert.tuple) {
      throw Error("--discriminants disagree with the case parameters");
    }
  } else {
    throw Error("--mode must be 'auto' or 'case:<ID>'");
  }
  return emit_certificate(cert, out_path, as_json);
}

// ---- verify ----------------------------------------------------------

int run_verify(const std::string& path) {
  const VerifyResult res = verify_json_text(read_file(path));
  if (res.pass) {
    std::cout << "pass\n";
    return kExitPass;
  }
  std::cout << "fail:";
  for (const std::string& r : res.reasons) std::cout << " " << r;
  std::cout << "\n";
  return kExitFail;
}

// ---- search ----------------------------------------------------------

int run_search(std::size_t count, const std::vector<std::string>& include_raw,
               const std::string& max_d_raw, bool no_distinct,
               const std::string& bound_raw, const std::string& out_path,
               bool as_json) {
  SearchOptions opt;
  opt.count = count;
  opt.include = parse_int_list(include_raw);
  opt.max_d = parse_decimal(max_d_raw);
  opt.require_distinct = !no_distinct;
  opt.predicate_bound = parse_decimal(bound_raw);
  const SearchResult res = search_tuple(opt);
  return emit_certificate(res.certificate, out_path, as_json);
}

// ---- shortvec --------------------------------------------------------

IntMatrix named_lattice(const std::string& name) {
  if (name == "E8") {
    IntMatrix g(8, 8);
    const IntMatrix& ambient = build_ambient().gram;
    for (std::size_t i = 0; i < 8; ++i) {
      for (std::size_t j = 0; j < 8; ++j) g(i, j) = ambient(i, j);
    }
    return g;
  }
  if (name == "A2") return IntMatrix::from_rows({{2, 1}, {1, 2}});
  if (name == "U2") return IntMatrix::from_rows({{0, 1}, {1, 0}});
  if (name == "ambient") return build_ambient().gram;
  if (name.rfind("file:", 0) == 0) {
    return gram_from_json_text(read_file(name.substr(5)));
  }
  throw Error("unknown lattice '" + name +
              "' (expected E8, A2, U2, ambient or file:<gram.json>)");
}

int run_shortvec(const std::string& lattice, const std::string& bound_raw,
                 bool as_json) {
  const Int bound = parse_decimal(bound_raw);
  const IntMatrix gram = named_lattice(lattice);
  const ShortVectorList list = short_vectors(gram, bound);
  if (as_json) {
    std::cout << short_vector_list_to_json_text(list, lattice);
    return kExitPass;
  }
  std::cout << "lattice " << lattice << ", bound " << bound << ": "
            << list.pairs.size() << " pairs (" << 2 * list.pairs.size()
            << " vectors)\n";
  for (const auto& [coords, norm] : list.pairs) {
    std::cout << "  (";
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (i) std::cout << ",";
      std::cout << coords[i];
    }
    std::cout << ")  norm " << norm << "\n";
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact lattice certificates for cubic fourfold divisor "
               "intersections"};
  app.require_subcommand(1);

  auto* info = app.add_subcommand("info", "print the ambient model summary");
  bool info_json = false;
  info->add_flag("--json", info_json, "machine-readable output");

  auto* preds = app.add_subcommand("predicates",
                                   "decide all discriminant conditions");
  std::string pred_d;
  std::string pred_bound = std::to_string(kDefaultSearchBound);
  bool pred_json = false;
  preds->add_option("d", pred_d, "discriminant")->required();
  preds->add_option("--bound", pred_bound,
                    "search bound for the tri-state predicates");
  preds->add_flag("--json", pred_json, "machine-readable output");

  auto* cert = app.add_subcommand("certify",
                                  "assemble a sublattice and run all checks");
  std::vector<std::string> cert_d;
  std::string cert_mode = "auto";
  std::vector<std::string> cert_params;
  std::string cert_bound = std::to_string(kDefaultSearchBound);
  std::string cert_out;
  bool cert_json = false;
  cert->add_option("--discriminants", cert_d, "d1,d2,...")->delimiter(',');
  cert->add_option("--mode", cert_mode, "auto or case:<ID>");
  cert->add_option("--params", cert_params, "n1,n2,... for case mode")
      ->delimiter(',');
  cert->add_option("--bound", cert_bound, "predicate search bound");
  cert->add_option("--out", cert_out, "write the certificate JSON here");
  cert->add_flag("--json", cert_json, "print the certificate JSON");

  auto* ver = app.add_subcommand("verify", "re-check a certificate file");
  std::string ver_path;
  ver->add_option("file", ver_path, "certificate JSON path")->required();

  auto* sea = app.add_subcommand("search",
                                 "find a passing discriminant tuple");
  std::size_t sea_count = 0;
  std::vector<std::string> sea_include;
  std::string sea_maxd = "10000";
  bool sea_nodistinct = false;
  std::string sea_bound = std::to_string(kDefaultSearchBound);
  std::string sea_out;
  bool sea_json = false;
  sea->add_option("--count", sea_count, "tuple length (1..20)")->required();
  sea->add_option("--include", sea_include, "d values that must appear")
      ->delimiter(',');
  sea->add_option("--max-d", sea_maxd, "largest fill value to consider");
  sea->add_flag("--no-distinct", sea_nodistinct,
                "allow repeated discriminants");
  sea->add_option("--bound", sea_bound, "predicate search bound");
  sea->add_option("--out", sea_out, "write the certificate JSON here");
  sea->add_flag("--json", sea_json, "print the certificate JSON");

  auto* sv = app.add_subcommand("shortvec",
                                "enumerate short vectors of a lattice");
  std::string sv_lattice;
  std::string sv_bound;
  bool sv_json = false;
  sv->add_option("--lattice", sv_lattice,
                 "E8 | A2 | U2 | ambient | file:<gram.json>")
      ->required();
  sv->add_option("--bound", sv_bound, "norm bound (positive)")->required();
  sv->add_flag("--json", sv_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (info->parsed()) return run_info(info_json);
    if (preds->parsed()) return run_predicates(pred_d, pred_bound, pred_json);
    if (cert->parsed()) {
      return run_certify(cert_d, cert_mode, cert_params, cert_bound, cert_out,
                         cert_json);
    }
    if (ver->parsed()) return run_verify(ver_path);
    if (sea->parsed()) {
      return run_search(sea_count, sea_include, sea_maxd, sea_nodistinct,
                        sea_bound, sea_out, sea_json);
    }
    if (sv->parsed()) return run_shortvec(sv_lattice, sv_bound, sv_json);
  } catch (const InfeasibleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
