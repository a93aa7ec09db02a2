// Copyright 2026 The Entrobound Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "entrobound/serialization.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "entrobound/error.hpp"

namespace entrobound {

namespace {

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

void write_json(const Json& j, std::string& out, int level) {
  const std::string pad(2 * (level + 1), ' ');
  const std::string close_pad(2 * level, ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad;
        out += Json(it.key()).dump();
        out += ": ";
        write_json(it.value(), out, level + 1);
      }
      out += "\n" + close_pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      bool inline_ok = j.size() <= 8;
      for (const auto& e : j) inline_ok = inline_ok && is_scalar(e);
      if (inline_ok) {
        out += "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) out += ", ";
          write_json(j[i], out, level + 1);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ",\n";
        out += pad;
        write_json(j[i], out, level + 1);
      }
      out += "\n" + close_pad + "]";
      return;
    }
    case Json::value_t::number_float: {
      const double x = j.get<double>();
      if (std::isfinite(x)) {
        out += format_double(x);
      } else {
        out += "\"" + format_double(x) + "\"";
      }
      return;
    }
    default:
      out += j.dump();
  }
}

double unit_scale(LogBase base) { return from_bits(1.0, base); }

const char* unit_name(LogBase base) {
  return base == LogBase::kBits ? "bits" : "nats";
}

Json maybe_number(const std::optional<double>& v) {
  return v ? Json(*v) : Json(nullptr);
}

// Reads a finite number or one of the strings written for infinities.
double number_field(const Json& j, const std::string& where) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return kInfinity;
    if (s == "-inf") return -kInfinity;
  }
  throw InstanceError(where + " is not a number");
}

const Json& require(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) {
    throw InstanceError(where + ": missing field \"" + key + "\"");
  }
  return j.at(key);
}

Eigen::MatrixXd read_block(const Json& rows, int dim, const std::string& field) {
  const std::string where = "unitary JSON: field \"" + field + "\"";
  if (!rows.is_array() || rows.size() != static_cast<std::size_t>(dim)) {
    throw InstanceError(where + " must be an array of " + std::to_string(dim) +
                        " rows");
  }
  Eigen::MatrixXd m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const Json& row = rows[i];
    const std::string row_where = where + "[" + std::to_string(i) + "]";
    if (!row.is_array() || row.size() != static_cast<std::size_t>(dim)) {
      throw InstanceError(row_where + " must have " + std::to_string(dim) +
                          " entries");
    }
    for (int k = 0; k < dim; ++k) {
      if (!row[k].is_number()) {
        throw InstanceError(row_where + "[" + std::to_string(k) +
                            "] is not a number");
      }
      m(i, k) = row[k].get<double>();
    }
  }
  return m;
}

}  // namespace

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  std::string s(buf);
  // Keep a JSON float recognizable as such.
  if (s.find_first_of(".eE") == std::string::npos) s += ".0";
  return s;
}

std::string dump_json(const Json& j) {
  std::string out;
  write_json(j, out, 0);
  out += "\n";
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InstanceError("cannot open input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InstanceError("cannot open output file '" + path + "'");
  out << text;
  if (!out) throw InstanceError("failed writing output file '" + path + "'");
}

MeasurementPair parse_unitary_json(std::string_view text, const std::string& label) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::ostringstream msg;
    msg << "unitary JSON: malformed document at byte " << e.byte;
    throw InstanceError(msg.str());
  }
  if (!j.is_object()) throw InstanceError("unitary JSON: top level must be an object");
  const Json& dim_field = require(j, "dim", "unitary JSON");
  if (!dim_field.is_number_integer() || dim_field.get<long long>() < 2 ||
      dim_field.get<long long>() > 4096) {
    throw InstanceError("unitary JSON: field \"dim\" must be an integer in [2, 4096]");
  }
  const int dim = dim_field.get<int>();
  const Eigen::MatrixXd re = read_block(require(j, "re", "unitary JSON"), dim, "re");
  const Eigen::MatrixXd im = read_block(require(j, "im", "unitary JSON"), dim, "im");
  Matrix u(dim, dim);
  u.real() = re;
  u.imag() = im;
  std::string name = label;
  if (j.contains("label") && j["label"].is_string()) name = j["label"].get<std::string>();
  return MeasurementPair::from_unitary(std::move(u), name);
}

MeasurementPair load_unitary(const std::string& path) {
  try {
    return parse_unitary_json(read_text_file(path), path);
  } catch (const InstanceError& e) {
    throw InstanceError(path + ": " + e.what());
  }
}

Json unitary_to_json(const MeasurementPair& pair) {
  const Matrix& u = pair.unitary();
  Json re = Json::array(), im = Json::array();
  for (Eigen::Index i = 0; i < u.rows(); ++i) {
    Json rr = Json::array(), ri = Json::array();
    for (Eigen::Index k = 0; k < u.cols(); ++k) {
      rr.push_back(u(i, k).real());
      ri.push_back(u(i, k).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ri));
  }
  Json j;
  j["dim"] = pair.dim();
  if (!pair.label().empty()) j["label"] = pair.label();
  j["re"] = std::move(re);
  j["im"] = std::move(im);
  return j;
}

Json vector_to_json(const Vector& v) {
  Json re = Json::array(), im = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    re.push_back(v(i).real());
    im.push_back(v(i).imag());
  }
  Json j;
  j["re"] = std::move(re);
  j["im"] = std::move(im);
  return j;
}

Json to_json(const NormParams& params) {
  Json j;
  j["N"] = params.N;
  j["lambda"] = params.lambda;
  j["mu"] = params.mu;
  j["r"] = params.r;
  j["s"] = params.s;
  j["r_dual"] = maybe_number(params.r_dual);
  j["s_dual"] = maybe_number(params.s_dual);
  j["t"] = maybe_number(params.t);
  return j;
}

Json to_json(const BoundResult& r, LogBase base) {
  const double k = unit_scale(base);
  Json j;
  j["unit"] = unit_name(base);
  j["lambda"] = r.lambda;
  j["mu"] = r.mu;
  j["lower"] = k * r.lower;
  j["upper"] = k * r.upper;
  j["gap"] = k * r.gap();
  j["method"] = to_string(r.method);
  j["lower_method"] = to_string(r.lower_method);
  j["upper_method"] = to_string(r.upper_method);
  j["witness"] = vector_to_json(r.witness);
  j["params"] = r.params ? to_json(*r.params) : Json(nullptr);
  j["iterations"] = r.iterations;
  j["converged"] = r.converged;
  j["max_objective_increase"] = k * r.max_objective_increase;
  Json trace = Json::array();
  for (const auto& t : r.omega_trace) trace.push_back(Json::array({t.N, k * t.bound}));
  j["omega_trace"] = std::move(trace);
  Json defects = Json::array();
  for (const auto& t : r.omega_trace) defects.push_back(t.cross_check_defect);
  j["omega_cross_check_defects"] = std::move(defects);
  return j;
}

Json to_json(const PositiveHull& hull, LogBase base) {
  const double k = unit_scale(base);
  Json tangents = Json::array();
  for (const Tangent& t : hull.tangents) {
    Json e;
    e["lambda"] = t.lambda;
    e["mu"] = t.mu;
    e["c"] = k * t.c;
    e["lower"] = k * t.lower;
    e["certified"] = t.certified;
    tangents.push_back(std::move(e));
  }
  Json vertices = Json::array();
  for (const Vertex& v : hull.vertices) vertices.push_back(Json::array({k * v[0], k * v[1]}));
  Json j;
  j["unit"] = unit_name(base);
  j["tangents"] = std::move(tangents);
  j["vertices"] = std::move(vertices);
  return j;
}

PositiveHull hull_from_json(const Json& j) {
  if (!j.is_object()) throw InstanceError("hull JSON: top level must be an object");
  double k = 1.0;
  if (j.contains("unit")) {
    const Json& unit = j["unit"];
    if (unit == "nats") {
      k = 1.0 / from_bits(1.0, LogBase::kNats);
    } else if (unit != "bits") {
      throw InstanceError("hull JSON: field \"unit\" must be \"bits\" or \"nats\"");
    }
  }
  const Json& ts = require(j, "tangents", "hull JSON");
  if (!ts.is_array()) throw InstanceError("hull JSON: field \"tangents\" must be an array");
  std::vector<Tangent> tangents;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const std::string where = "hull JSON: tangents[" + std::to_string(i) + "]";
    Tangent t;
    t.lambda = number_field(require(ts[i], "lambda", where), where + ".lambda");
    t.mu = number_field(require(ts[i], "mu", where), where + ".mu");
    t.c = k * number_field(require(ts[i], "c", where), where + ".c");
    t.lower = ts[i].contains("lower")
                  ? k * number_field(ts[i]["lower"], where + ".lower")
                  : t.c;
    t.certified = ts[i].value("certified", false);
    if (!(t.lambda >= 0.0) || !(t.mu >= 0.0) || !(t.lambda + t.mu > 0.0)) {
      throw InstanceError(where + " has invalid weights");
    }
    tangents.push_back(t);
  }
  PositiveHull hull = hull_from_tangents(std::move(tangents));
  if (j.contains("vertices")) {
    const Json& vs = j["vertices"];
    if (!vs.is_array()) throw InstanceError("hull JSON: field \"vertices\" must be an array");
    hull.vertices.clear();
    for (std::size_t i = 0; i < vs.size(); ++i) {
      const std::string where = "hull JSON: vertices[" + std::to_string(i) + "]";
      if (!vs[i].is_array() || vs[i].size() != 2) {
        throw InstanceError(where + " must be a pair [hx, hy]");
      }
      hull.vertices.push_back({k * number_field(vs[i][0], where),
                               k * number_field(vs[i][1], where)});
    }
  }
  return hull;
}

bool is_hull_document(const Json& j) {
  return j.is_object() && j.contains("tangents");
}

Json to_json(const AdditivityReport& r, LogBase base) {
  const double k = unit_scale(base);
  Json j;
  j["c_a"] = k * r.c_a.upper;
  j["c_b"] = k * r.c_b.upper;
  j["c_ab"] = k * r.c_ab.upper;
  j["lower_a"] = k * r.c_a.lower;
  j["lower_b"] = k * r.c_b.lower;
  j["lower_ab"] = k * r.c_ab.lower;
  j["defect"] = k * r.defect;
  j["witness_product"] = k * r.witness_product;
  j["witness_defect"] = k * r.witness_defect;
  j["max_gap"] = k * r.max_gap;
  j["tol"] = k * r.tol;
  j["gap_guard"] = k * r.gap_guard;
  j["pass"] = r.pass;
  return j;
}

Json to_json(const MultiplicativityReport& r) {
  Json j;
  j["p"] = r.p;
  j["q"] = r.q;
  j["eta_a"] = r.eta_a;
  j["eta_b"] = r.eta_b;
  j["eta_ab"] = r.eta_ab;
  j["defect"] = r.defect;
  j["tol"] = r.tol;
  j["exact"] = r.exact;
  j["pass"] = r.pass;
  return j;
}

Json to_json(const HullCompositionReport& r, LogBase base) {
  const double k = unit_scale(base);
  Json j;
  j["discrepancy"] = k * r.discrepancy;
  j["tol"] = k * r.tol;
  j["pass"] = r.pass;
  j["direct"] = to_json(r.direct, base);
  j["composed"] = to_json(r.composed, base);
  return j;
}

Json to_json(const ThreePauliReport& r, LogBase base) {
  const double k = unit_scale(base);
  Json j;
  j["unit"] = unit_name(base);
  j["local_min"] = k * r.local_min;
  j["product_min"] = k * r.product_min;
  j["bell_value"] = k * r.bell_value;
  j["violated"] = r.violated;
  j["local_witness"] = vector_to_json(r.local_witness);
  return j;
}

Json to_json(const RenyiCheckReport& r, LogBase base) {
  const double k = unit_scale(base);
  Json j;
  j["unit"] = unit_name(base);
  j["lambda"] = r.lambda;
  j["mu"] = r.mu;
  j["N"] = r.N;
  j["alpha_x"] = r.alpha_x;
  j["alpha_y"] = r.alpha_y;
  j["bound"] = k * r.bound;
  j["sampled_infimum"] = k * r.sampled_infimum;
  j["worst_slack"] = k * r.worst_slack;
  j["samples"] = r.samples;
  j["violations"] = r.violations;
  j["pass"] = r.pass;
  return j;
}

std::string samples_csv(const std::vector<UncertaintyPoint>& points, LogBase base) {
  const double k = unit_scale(base);
  std::string out;
  out.reserve(points.size() * 40);
  for (const UncertaintyPoint& p : points) {
    out += format_double(k * p.hx);
    out += ',';
    out += format_double(k * p.hy);
    out += '\n';
  }
  return out;
}

}  // namespace entrobound
