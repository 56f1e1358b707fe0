#include "qgauss/json_io.hpp"

#include <fstream>

#include "qgauss/format.hpp"
#include "qgauss/targets.hpp"

namespace qg {

Json complex_to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2)
    return Complex(j[0].get<double>(), j[1].get<double>());
  throw std::invalid_argument("complex value must be a number or [re, im]");
}

Json matrix_to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument("matrix must be a non-empty array of rows");
  const auto rows = j.size();
  const auto cols = j[0].size();
  ComplexMatrix m(rows, cols);
  for (size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols)
      throw std::invalid_argument("matrix rows must have equal length");
    for (size_t c = 0; c < cols; ++c) m(r, c) = complex_from_json(j[r][c]);
  }
  return m;
}

Json tensor_op_to_json(const TensorOperator& w) {
  Json ja = Json::array();
  for (int a = 0; a < w.n; ++a) {
    Json jb = Json::array();
    for (int b = 0; b < w.n; ++b) {
      Json jc = Json::array();
      for (int c = 0; c < w.n; ++c) {
        Json jd = Json::array();
        for (int d = 0; d < w.n; ++d)
          jd.push_back(complex_to_json(w.at(a, b, c, d)));
        jc.push_back(std::move(jd));
      }
      jb.push_back(std::move(jc));
    }
    ja.push_back(std::move(jb));
  }
  return ja;
}

TensorOperator tensor_op_from_json(const Json& j) {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument("tensor operator must be a 4-deep nested array");
  const int n = int(j.size());
  TensorOperator w(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          w.at(a, b, c, d) = complex_from_json(j.at(a).at(b).at(c).at(d));
  return w;
}

Json spec_to_json(const GaussianSpec& spec) {
  Json j;
  j["target"] = target_name(spec.target.kind);
  j["n"] = spec.target.n;
  Json ls = Json::array();
  for (const auto& l : spec.L) ls.push_back(matrix_to_json(l));
  j["L"] = std::move(ls);
  j["H"] = matrix_to_json(spec.H);
  return j;
}

GaussianSpec spec_from_json(const Json& j) {
  GaussianSpec spec;
  spec.target.kind = target_kind_from_name(j.at("target").get<std::string>());
  spec.target.n = j.at("n").get<int>();
  const int m = spec.ambient_dim();
  if (j.contains("L"))
    for (const auto& l : j.at("L")) spec.L.push_back(matrix_from_json(l));
  if (j.contains("H"))
    spec.H = matrix_from_json(j.at("H"));
  else
    spec.H = ComplexMatrix::Zero(m, m);
  return spec;
}

GaussianSpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  Json j;
  in >> j;
  return spec_from_json(j);
}

namespace {

void append_escaped(std::string& out, const std::string& s) {
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
}

void dump_value(std::string& out, const Json& j, int indent) {
  const std::string pad(indent * 2, ' ');
  const std::string pad_in((indent + 1) * 2, ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) { out += "{}"; break; }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad_in;
        append_escaped(out, it.key());
        out += ": ";
        dump_value(out, it.value(), indent + 1);
      }
      out += "\n" + pad + "}";
      break;
    }
    case Json::value_t::array: {
      if (j.empty()) { out += "[]"; break; }
      // flat arrays of scalars stay on one line
      bool scalars = true;
      for (const auto& v : j)
        if (v.is_structured()) { scalars = false; break; }
      if (scalars) {
        out += "[";
        bool first = true;
        for (const auto& v : j) {
          if (!first) out += ", ";
          first = false;
          dump_value(out, v, indent);
        }
        out += "]";
      } else {
        out += "[\n";
        bool first = true;
        for (const auto& v : j) {
          if (!first) out += ",\n";
          first = false;
          out += pad_in;
          dump_value(out, v, indent + 1);
        }
        out += "\n" + pad + "]";
      }
      break;
    }
    case Json::value_t::string:
      append_escaped(out, j.get<std::string>());
      break;
    case Json::value_t::boolean:
      out += j.get<bool>() ? "true" : "false";
      break;
    case Json::value_t::number_integer:
      out += std::to_string(j.get<long long>());
      break;
    case Json::value_t::number_unsigned:
      out += std::to_string(j.get<unsigned long long>());
      break;
    case Json::value_t::number_float:
      out += format_double(j.get<double>());
      break;
    case Json::value_t::null:
    default:
      out += "null";
      break;
  }
}

}  // namespace

std::string dump_json(const Json& j) {
  std::string out;
  dump_value(out, j, 0);
  out += '\n';
  return out;
}

void write_json(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << dump_json(j);
}

}  // namespace qg
