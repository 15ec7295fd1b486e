#pragma once

#include <openssl/evp.h>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "polystab/certificates.hpp"
#include "polystab/polytope.hpp"
#include "polystab/qt.hpp"
#include "polystab/surd.hpp"
#include "polystab/switched.hpp"

namespace polystab {

using Json = nlohmann::json;

// ---------------------------------------------------------------------------
// Files, canonical bytes, content hashes.
// ---------------------------------------------------------------------------

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open '" + path + "' for reading");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// Write via a sibling temp file and rename so readers never observe a
// partially written document.
inline void write_file_atomic(const std::string& path,
                              const std::string& bytes) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw FormatError("cannot open '" + tmp + "' for writing");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) throw FormatError("short write to '" + tmp + "'");
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw FormatError("cannot move '" + tmp + "' into place");
}

inline Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

// Canonical serialization: keys sorted (the default object storage), two
// space indent, trailing newline.  Equal documents give equal bytes, so
// hashes of these bytes identify content.
inline std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

inline std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(),
                 nullptr) != 1)
    throw FormatError("sha256 digest failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[md[i] >> 4]);
    out.push_back(hex[md[i] & 0xf]);
  }
  return out;
}

inline std::string instance_hash(const Json& doc) {
  return sha256_hex(canonical_dump(doc));
}

// ---------------------------------------------------------------------------
// Field access with location-bearing errors.
// ---------------------------------------------------------------------------

namespace jsondetail {

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw FormatError("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end())
    throw FormatError(std::string("missing field '") + key + "'");
  return *it;
}

inline std::string str(const Json& j, const char* key) {
  const Json& f = field(j, key);
  if (!f.is_string())
    throw FormatError(std::string("field '") + key + "' must be a string");
  return f.get<std::string>();
}

inline std::size_t size_field(const Json& j, const char* key) {
  const Json& f = field(j, key);
  if (!f.is_number_unsigned() && !f.is_number_integer())
    throw FormatError(std::string("field '") + key + "' must be an integer");
  const std::int64_t v = f.get<std::int64_t>();
  if (v < 0)
    throw FormatError(std::string("field '") + key + "' must be nonnegative");
  return static_cast<std::size_t>(v);
}

inline double num(const Json& j, const char* key) {
  const Json& f = field(j, key);
  if (!f.is_number())
    throw FormatError(std::string("field '") + key + "' must be a number");
  return f.get<double>();
}

}  // namespace jsondetail

// ---------------------------------------------------------------------------
// Scalars: rationals as "p/q" strings, big integers as int64 when they fit.
// ---------------------------------------------------------------------------

inline Json rat_to_json(const Rat& r) { return r.to_string(); }

inline Rat rat_from_json(const Json& j) {
  if (!j.is_string()) throw FormatError("rational must be a \"p/q\" string");
  return Rat::parse(j.get<std::string>());
}

inline Json mpz_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
  return z.get_str();
}

inline mpz_class mpz_from_json(const Json& j) {
  if (j.is_number_integer() || j.is_number_unsigned())
    return mpz_class(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    try {
      return mpz_class(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      throw FormatError("bad integer literal: '" + j.get<std::string>() +
                        "'");
    }
  }
  throw FormatError("integer must be a JSON number or decimal string");
}

inline Json surd_to_json(const Surd& s) {
  Json j;
  j["a"] = rat_to_json(s.a());
  j["b"] = rat_to_json(s.b());
  j["c"] = mpz_to_json(s.c());
  return j;
}

inline Surd surd_from_json(const Json& j) {
  return Surd(rat_from_json(jsondetail::field(j, "a")),
              rat_from_json(jsondetail::field(j, "b")),
              mpz_from_json(jsondetail::field(j, "c")));
}

// ---------------------------------------------------------------------------
// Matrices and vectors.
// ---------------------------------------------------------------------------

inline Json matrix_to_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(rat_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline RatMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty())
    throw FormatError("matrix must be a nonempty array of rows");
  std::vector<std::vector<Rat>> rows;
  for (const auto& rj : j) {
    if (!rj.is_array() || rj.empty())
      throw FormatError("matrix row must be a nonempty array");
    std::vector<Rat> row;
    for (const auto& e : rj) row.push_back(rat_from_json(e));
    if (!rows.empty() && row.size() != rows.front().size())
      throw DimensionMismatch("ragged matrix rows");
    rows.push_back(std::move(row));
  }
  RatMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j2 = 0; j2 < m.cols(); ++j2) m(i, j2) = rows[i][j2];
  return m;
}

inline Json surd_vec_to_json(const std::vector<Surd>& v) {
  Json arr = Json::array();
  for (const auto& s : v) arr.push_back(surd_to_json(s));
  return arr;
}

inline std::vector<Surd> surd_vec_from_json(const Json& j) {
  if (!j.is_array()) throw FormatError("expected an array of surds");
  std::vector<Surd> v;
  for (const auto& e : j) v.push_back(surd_from_json(e));
  return v;
}

// ---------------------------------------------------------------------------
// Documents.  Every file carries a "kind" discriminator so consumers can
// route without guessing: "qt-instance", the three polytope kinds,
// "singularity-certificate", "switching-signal", "decay-report".
// ---------------------------------------------------------------------------

inline Json provenance_to_json(const Provenance& p) {
  Json j;
  j["graph_dimacs"] = p.graph_dimacs;
  j["tau"] = rat_to_json(p.tau);
  j["istar"] = p.istar;
  return j;
}

inline Provenance provenance_from_json(const Json& j) {
  Provenance p;
  p.graph_dimacs = jsondetail::str(j, "graph_dimacs");
  p.tau = rat_from_json(jsondetail::field(j, "tau"));
  p.istar = jsondetail::size_field(j, "istar");
  return p;
}

inline Json qt_to_json(const QtInstance& q) {
  Json j;
  j["kind"] = "qt-instance";
  j["n"] = q.n;
  j["minv"] = matrix_to_json(q.minv);
  if (q.provenance) j["provenance"] = provenance_to_json(*q.provenance);
  return j;
}

inline QtInstance qt_from_json(const Json& j) {
  if (jsondetail::str(j, "kind") != "qt-instance")
    throw FormatError("document is not a qt-instance");
  QtInstance q;
  q.n = jsondetail::size_field(j, "n");
  q.minv = matrix_from_json(jsondetail::field(j, "minv"));
  if (q.minv.rows() != q.n || q.minv.cols() != q.n)
    throw DimensionMismatch("minv shape disagrees with n");
  if (j.contains("provenance"))
    q.provenance = provenance_from_json(j.at("provenance"));
  return q;
}

inline Json polytope_to_json(const PolytopeInstance& inst) {
  Json j;
  j["kind"] = to_string(inst.kind);
  j["dim"] = inst.dim;
  Json mats = Json::array();
  for (const auto& m : inst.matrices) mats.push_back(matrix_to_json(m));
  j["matrices"] = std::move(mats);
  if (inst.provenance)
    j["provenance"] = provenance_to_json(*inst.provenance);
  return j;
}

inline PolytopeInstance polytope_from_json(const Json& j) {
  PolytopeInstance inst;
  inst.kind = kind_from_string(jsondetail::str(j, "kind"));
  inst.dim = jsondetail::size_field(j, "dim");
  const Json& mats = jsondetail::field(j, "matrices");
  if (!mats.is_array() || mats.empty())
    throw FormatError("'matrices' must be a nonempty array");
  for (const auto& mj : mats) inst.matrices.push_back(matrix_from_json(mj));
  if (j.contains("provenance"))
    inst.provenance = provenance_from_json(j.at("provenance"));
  inst.validate();
  return inst;
}

inline Json certificate_to_json(const SingularityCertificate& cert) {
  Json j;
  j["kind"] = "singularity-certificate";
  j["weights"] = surd_vec_to_json(cert.weights);
  j["kernel"] = surd_vec_to_json(cert.kernel);
  j["radicand"] = mpz_to_json(cert.radicand);
  j["instance_sha256"] = cert.instance_sha256;
  return j;
}

inline SingularityCertificate certificate_from_json(const Json& j) {
  if (jsondetail::str(j, "kind") != "singularity-certificate")
    throw FormatError("document is not a singularity-certificate");
  SingularityCertificate cert;
  cert.weights = surd_vec_from_json(jsondetail::field(j, "weights"));
  cert.kernel = surd_vec_from_json(jsondetail::field(j, "kernel"));
  cert.radicand = mpz_from_json(jsondetail::field(j, "radicand"));
  cert.instance_sha256 = jsondetail::str(j, "instance_sha256");
  return cert;
}

inline Json signal_to_json(const SwitchingSignal& s) {
  Json j;
  j["kind"] = "switching-signal";
  j["horizon"] = s.horizon;
  j["breakpoints"] = s.breakpoints;
  j["controls"] = s.controls;
  return j;
}

inline SwitchingSignal signal_from_json(const Json& j) {
  if (jsondetail::str(j, "kind") != "switching-signal")
    throw FormatError("document is not a switching-signal");
  SwitchingSignal s;
  s.horizon = jsondetail::num(j, "horizon");
  const Json& bp = jsondetail::field(j, "breakpoints");
  const Json& cs = jsondetail::field(j, "controls");
  if (!bp.is_array() || !cs.is_array())
    throw FormatError("'breakpoints' and 'controls' must be arrays");
  for (const auto& b : bp) {
    if (!b.is_number()) throw FormatError("breakpoints must be numbers");
    s.breakpoints.push_back(b.get<double>());
  }
  for (const auto& row : cs) {
    if (!row.is_array()) throw FormatError("each control must be an array");
    std::vector<double> c;
    for (const auto& x : row) {
      if (!x.is_number()) throw FormatError("control weights must be numbers");
      c.push_back(x.get<double>());
    }
    s.controls.push_back(std::move(c));
  }
  return s;
}

inline Json report_to_json(const DecayReport& r) {
  Json j;
  j["kind"] = "decay-report";
  j["final_norm"] = r.final_norm;
  j["max_norm_increase"] = r.max_norm_increase;
  j["decay_exponent"] = r.decay_exponent;
  j["monotone_within_tol"] = r.monotone_within_tol;
  j["note"] = r.note;
  return j;
}

// ---------------------------------------------------------------------------
// Trajectory CSV: one row per sample, full double precision.
// ---------------------------------------------------------------------------

inline std::string trajectory_csv(const Trajectory& traj) {
  std::string out = "t";
  const std::size_t d =
      traj.states.empty() ? 0 : static_cast<std::size_t>(traj.states[0].size());
  for (std::size_t i = 1; i <= d; ++i) out += ",x" + std::to_string(i);
  out += ",l2norm\n";
  char buf[64];
  for (std::size_t r = 0; r < traj.times.size(); ++r) {
    std::snprintf(buf, sizeof buf, "%.17g", traj.times[r]);
    out += buf;
    for (std::size_t i = 0; i < d; ++i) {
      std::snprintf(buf, sizeof buf, "%.17g",
                    traj.states[r](static_cast<Eigen::Index>(i)));
      out += ',';
      out += buf;
    }
    std::snprintf(buf, sizeof buf, "%.17g", traj.norms[r]);
    out += ',';
    out += buf;
    out += '\n';
  }
  return out;
}

}  // namespace polystab
