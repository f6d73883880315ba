#include "cubiclat/json_io.hpp"

#include <json.hpp>

#include "cubiclat/ambient.hpp"
#include "cubiclat/errors.hpp"

namespace cubiclat {

namespace {

using ordered_json = nlohmann::ordered_json;
using nlohmann::json;

std::string int_str(const Int& v) { return to_decimal(v); }

// ---- writers -------------------------------------------------------------

ordered_json matrix_json(const IntMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_str(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json basis_json(const IntMatrix& basis) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < basis.cols(); ++j) {
      if (sgn(basis(i, j)) == 0) continue;
      ordered_json term;
      term["name"] = name_of(j);
      term["coeff"] = int_str(basis(i, j));
      row.push_back(std::move(term));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json tri_json(TriState status, const char* const* witness_keys,
                      std::initializer_list<const std::optional<Int>*> values,
                      const Int* bound) {
  ordered_json out;
  out["status"] = std::string(to_string(status));
  if (status == TriState::True) {
    ordered_json w;
    std::size_t k = 0;
    for (const auto* v : values) {
      w[witness_keys[k++]] = int_str(**v);
    }
    out["witness"] = std::move(w);
  }
  if (bound != nullptr) out["bound"] = int_str(*bound);
  return out;
}

ordered_json predicate_report_json(const PredicateReport& r) {
  ordered_json out;
  out["d"] = int_str(r.d);
  out["star"] = r.star;

  static const char* m_keys[] = {"m"};
  static const char* fgn_keys[] = {"f", "g", "n"};
  static const char* n_keys[] = {"n"};
  static const char* na_keys[] = {"n", "a"};

  out["double_star"] =
      tri_json(r.double_star.holds ? TriState::True : TriState::False, m_keys,
               {&r.double_star.m}, nullptr);
  out["assoc_k3"] = r.assoc_k3;
  out["bulles"] = tri_json(r.bulles.holds ? TriState::True : TriState::False,
                           fgn_keys, {&r.bulles.f, &r.bulles.g, &r.bulles.n},
                           nullptr);
  out["llsvs"] =
      tri_json(r.llsvs.status, na_keys, {&r.llsvs.n, &r.llsvs.a},
               &r.llsvs.bound);
  out["fano_hilb"] =
      tri_json(r.fano_hilb.holds ? TriState::True : TriState::False, n_keys,
               {&r.fano_hilb.n}, nullptr);
  out["addington"] =
      tri_json(r.addington.status, na_keys, {&r.addington.n, &r.addington.a},
               &r.addington.bound);
  return out;
}

// ---- strict readers ------------------------------------------------------

const json& need(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw SchemaError(std::string("missing field '") + key + "'");
  }
  return obj.at(key);
}

std::string need_string(const json& obj, const char* key) {
  const json& v = need(obj, key);
  if (!v.is_string()) {
    throw SchemaError(std::string("field '") + key + "' must be a string");
  }
  return v.get<std::string>();
}

bool need_bool(const json& obj, const char* key) {
  const json& v = need(obj, key);
  if (!v.is_boolean()) {
    throw SchemaError(std::string("field '") + key + "' must be a boolean");
  }
  return v.get<bool>();
}

Int need_int(const json& obj, const char* key) {
  const json& v = need(obj, key);
  if (v.is_string()) return parse_decimal(v.get<std::string>());
  if (v.is_number_integer()) return Int(v.get<long>());
  throw SchemaError(std::string("field '") + key +
                    "' must be a decimal string");
}

Int json_int(const json& v, const char* what) {
  if (v.is_string()) return parse_decimal(v.get<std::string>());
  if (v.is_number_integer()) return Int(v.get<long>());
  throw SchemaError(std::string(what) + " must be a decimal string");
}

const json& need_array(const json& obj, const char* key) {
  const json& v = need(obj, key);
  if (!v.is_array()) {
    throw SchemaError(std::string("field '") + key + "' must be an array");
  }
  return v;
}

std::size_t need_size(const json& obj, const char* key) {
  const Int v = need_int(obj, key);
  if (sgn(v) < 0 || v > 1000000) {
    throw SchemaError(std::string("field '") + key + "' out of range");
  }
  return static_cast<std::size_t>(v.get_ui());
}

std::size_t json_size(const json& v, const char* what) {
  const Int x = json_int(v, what);
  if (sgn(x) < 0 || x > 1000000) {
    throw SchemaError(std::string(what) + " out of range");
  }
  return static_cast<std::size_t>(x.get_ui());
}

IntMatrix matrix_from_json(const json& rows, const char* what) {
  if (!rows.is_array()) throw SchemaError(std::string(what) + ": not an array");
  std::vector<std::vector<Int>> data;
  data.reserve(rows.size());
  for (const json& row : rows) {
    if (!row.is_array()) {
      throw SchemaError(std::string(what) + ": row is not an array");
    }
    std::vector<Int> r;
    r.reserve(row.size());
    for (const json& cell : row) r.push_back(json_int(cell, what));
    data.push_back(std::move(r));
  }
  try {
    return IntMatrix::from_rows(data);
  } catch (const DimensionMismatchError&) {
    throw SchemaError(std::string(what) + ": ragged rows");
  }
}

TriState tri_from_string(const std::string& s) {
  if (s == "true") return TriState::True;
  if (s == "false") return TriState::False;
  if (s == "false_up_to_bound") return TriState::FalseUpToBound;
  throw SchemaError("unknown status '" + s + "'");
}

PredicateReport predicate_report_from_json(const json& obj) {
  PredicateReport r;
  r.d = need_int(obj, "d");
  r.star = need_bool(obj, "star");

  const json& ds = need(obj, "double_star");
  r.double_star.holds = tri_from_string(need_string(ds, "status")) ==
                        TriState::True;
  if (r.double_star.holds) {
    r.double_star.m = need_int(need(ds, "witness"), "m");
  }
  r.assoc_k3 = need_bool(obj, "assoc_k3");

  const json& bu = need(obj, "bulles");
  r.bulles.holds = tri_from_string(need_string(bu, "status")) == TriState::True;
  if (r.bulles.holds) {
    const json& w = need(bu, "witness");
    r.bulles.f = need_int(w, "f");
    r.bulles.g = need_int(w, "g");
    r.bulles.n = need_int(w, "n");
  }

  const json& ll = need(obj, "llsvs");
  r.llsvs.status = tri_from_string(need_string(ll, "status"));
  r.llsvs.bound = need_int(ll, "bound");
  if (sgn(r.llsvs.bound) <= 0) throw SchemaError("llsvs bound must be positive");
  if (r.llsvs.status == TriState::True) {
    const json& w = need(ll, "witness");
    r.llsvs.n = need_int(w, "n");
    r.llsvs.a = need_int(w, "a");
  }

  const json& fa = need(obj, "fano_hilb");
  r.fano_hilb.holds =
      tri_from_string(need_string(fa, "status")) == TriState::True;
  if (r.fano_hilb.holds) {
    r.fano_hilb.n = need_int(need(fa, "witness"), "n");
  }

  const json& ad = need(obj, "addington");
  r.addington.status = tri_from_string(need_string(ad, "status"));
  r.addington.bound = need_int(ad, "bound");
  if (sgn(r.addington.bound) <= 0) {
    throw SchemaError("addington bound must be positive");
  }
  if (r.addington.status == TriState::True) {
    const json& w = need(ad, "witness");
    r.addington.n = need_int(w, "n");
    r.addington.a = need_int(w, "a");
  }
  return r;
}

}  // namespace

std::string certificate_to_json_text(const Certificate& cert) {
  ordered_json out;
  out["schema_version"] = cert.schema_version;
  out["mode"] = cert.mode;
  ordered_json tuple = ordered_json::array();
  for (const Int& d : cert.tuple) tuple.push_back(int_str(d));
  out["tuple"] = std::move(tuple);
  out["basis"] = basis_json(cert.basis);
  out["gram"] = matrix_json(cert.gram);

  ordered_json checks;
  checks["gram_integral_symmetric"] = cert.checks.gram_integral_symmetric;
  checks["rank"] = int_str(Int(static_cast<long>(cert.checks.rank)));
  checks["rank_at_most_21"] = cert.checks.rank_at_most_21;
  checks["positive_definite"] = cert.checks.positive_definite;
  checks["h2_norm_3"] = cert.checks.h2_norm_3;
  checks["min_nonzero_norm"] = int_str(cert.checks.min_nonzero_norm);
  checks["no_norm2_vectors"] = cert.checks.no_norm2_vectors;
  out["checks"] = std::move(checks);

  ordered_json labellings = ordered_json::array();
  for (const LabellingCheck& lab : cert.labellings) {
    ordered_json l;
    l["index"] = int_str(Int(static_cast<long>(lab.index)));
    l["gram_2x2"] = matrix_json(lab.gram2);
    l["discriminant"] = int_str(lab.discriminant);
    l["matches_d"] = lab.matches_d;
    l["saturated_in_M"] = lab.saturated_in_m;
    labellings.push_back(std::move(l));
  }
  out["labellings"] = std::move(labellings);

  ordered_json k3;
  k3["rank_AX_lower_bound"] =
      int_str(Int(static_cast<long>(cert.k3.rank_ax_lower_bound)));
  k3["some_d_has_assoc_k3"] = cert.k3.some_d_has_assoc_k3;
  if (cert.k3.ns_rank_lower_bound) {
    k3["ns_rank_lower_bound"] =
        int_str(Int(static_cast<long>(*cert.k3.ns_rank_lower_bound)));
  }
  ordered_json witnesses = ordered_json::array();
  for (std::size_t w : cert.k3.witnesses) {
    witnesses.push_back(int_str(Int(static_cast<long>(w))));
  }
  k3["witnesses"] = std::move(witnesses);
  out["k3_report"] = std::move(k3);

  ordered_json reports = ordered_json::array();
  for (const PredicateReport& r : cert.predicate_reports) {
    reports.push_back(predicate_report_json(r));
  }
  out["predicate_reports"] = std::move(reports);

  out["delegated_hypotheses"] = cert.delegated_hypotheses;

  ordered_json extended;
  extended["norm6_orthogonal_h2_pairs"] =
      int_str(cert.norm6_orthogonal_h2_pairs);
  out["extended"] = std::move(extended);

  out["verdict"] = cert.passed() ? "pass" : "fail";
  out["failed_checks"] = cert.failed_checks;

  return out.dump(2) + "\n";
}

Certificate certificate_from_json_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SchemaError("certificate must be a JSON object");

  Certificate cert;
  cert.schema_version = need_string(doc, "schema_version");
  if (cert.schema_version != "1") {
    throw SchemaError("unsupported schema_version '" + cert.schema_version +
                      "'");
  }
  cert.mode = need_string(doc, "mode");
  for (const json& d : need_array(doc, "tuple")) {
    cert.tuple.push_back(json_int(d, "tuple entry"));
  }

  const json& basis_rows = need_array(doc, "basis");
  std::vector<std::vector<Int>> rows;
  rows.reserve(basis_rows.size());
  for (const json& row : basis_rows) {
    if (!row.is_array()) throw SchemaError("basis row must be an array");
    std::vector<Int> coords(kAmbientRank, Int(0));
    for (const json& term : row) {
      const std::string name = need_string(term, "name");
      std::size_t col;
      try {
        col = column_of(name);
      } catch (const UnknownBasisNameError& e) {
        throw SchemaError(e.what());
      }
      coords[col] = need_int(term, "coeff");
    }
    rows.push_back(std::move(coords));
  }
  cert.basis = IntMatrix::from_rows(rows);

  cert.gram = matrix_from_json(need_array(doc, "gram"), "gram");

  const json& checks = need(doc, "checks");
  cert.checks.gram_integral_symmetric =
      need_bool(checks, "gram_integral_symmetric");
  cert.checks.rank = need_size(checks, "rank");
  cert.checks.rank_at_most_21 = need_bool(checks, "rank_at_most_21");
  cert.checks.positive_definite = need_bool(checks, "positive_definite");
  cert.checks.h2_norm_3 = need_bool(checks, "h2_norm_3");
  cert.checks.min_nonzero_norm = need_int(checks, "min_nonzero_norm");
  cert.checks.no_norm2_vectors = need_bool(checks, "no_norm2_vectors");

  for (const json& l : need_array(doc, "labellings")) {
    LabellingCheck lab;
    lab.index = need_size(l, "index");
    lab.gram2 = matrix_from_json(need_array(l, "gram_2x2"), "gram_2x2");
    if (lab.gram2.rows() != 2 || lab.gram2.cols() != 2) {
      throw SchemaError("gram_2x2 must be 2x2");
    }
    lab.discriminant = need_int(l, "discriminant");
    lab.matches_d = need_bool(l, "matches_d");
    lab.saturated_in_m = need_bool(l, "saturated_in_M");
    cert.labellings.push_back(std::move(lab));
  }

  const json& k3 = need(doc, "k3_report");
  cert.k3.rank_ax_lower_bound = need_size(k3, "rank_AX_lower_bound");
  cert.k3.some_d_has_assoc_k3 = need_bool(k3, "some_d_has_assoc_k3");
  if (k3.contains("ns_rank_lower_bound")) {
    cert.k3.ns_rank_lower_bound = need_size(k3, "ns_rank_lower_bound");
  }
  if (cert.k3.ns_rank_lower_bound.has_value() !=
      cert.k3.some_d_has_assoc_k3) {
    throw SchemaError("ns_rank_lower_bound must be present iff "
                      "some_d_has_assoc_k3");
  }
  for (const json& w : need_array(k3, "witnesses")) {
    cert.k3.witnesses.push_back(json_size(w, "witness index"));
  }

  for (const json& r : need_array(doc, "predicate_reports")) {
    cert.predicate_reports.push_back(predicate_report_from_json(r));
  }

  for (const json& h : need_array(doc, "delegated_hypotheses")) {
    if (!h.is_string()) throw SchemaError("delegated hypothesis must be text");
    cert.delegated_hypotheses.push_back(h.get<std::string>());
  }

  cert.norm6_orthogonal_h2_pairs =
      need_int(need(doc, "extended"), "norm6_orthogonal_h2_pairs");

  for (const json& f : need_array(doc, "failed_checks")) {
    if (!f.is_string()) throw SchemaError("failed check must be text");
    cert.failed_checks.push_back(f.get<std::string>());
  }
  const std::string verdict = need_string(doc, "verdict");
  if (verdict != "pass" && verdict != "fail") {
    throw SchemaError("verdict must be 'pass' or 'fail'");
  }
  if ((verdict == "pass") != cert.failed_checks.empty()) {
    throw SchemaError("verdict inconsistent with failed_checks");
  }
  return cert;
}

VerifyResult verify_json_text(const std::string& text) {
  return verify(certificate_from_json_text(text));
}

std::string predicate_report_to_json_text(const PredicateReport& report) {
  return predicate_report_json(report).dump(2) + "\n";
}

IntMatrix gram_from_json_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
  const Int r = need_int(doc, "rank");
  IntMatrix gram = matrix_from_json(need_array(doc, "gram"), "gram");
  if (Int(static_cast<long>(gram.rows())) != r || !gram.is_square()) {
    throw SchemaError("gram must be rank x rank");
  }
  return gram;
}

std::string short_vector_list_to_json_text(const ShortVectorList& list,
                                           const std::string& lattice_label) {
  ordered_json out;
  out["lattice"] = lattice_label;
  out["bound"] = int_str(list.bound);
  out["pair_count"] = int_str(Int(static_cast<long>(list.pairs.size())));
  out["vector_count"] = int_str(Int(2 * static_cast<long>(list.pairs.size())));
  ordered_json pairs = ordered_json::array();
  for (const auto& [coords, norm] : list.pairs) {
    ordered_json p;
    ordered_json c = ordered_json::array();
    for (const Int& x : coords) c.push_back(int_str(x));
    p["coords"] = std::move(c);
    p["norm"] = int_str(norm);
    pairs.push_back(std::move(p));
  }
  out["pairs"] = std::move(pairs);
  return out.dump(2) + "\n";
}

}  // namespace cubiclat
