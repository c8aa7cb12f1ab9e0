#include "uqso/json_io.hpp"

#include <algorithm>
#include <fstream>

namespace uqso::io {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorKind::InvalidArgument, "malformed JSON: " + what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer())
    bad(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

double number(const Json& v, const char* what) {
  if (!v.is_number())
    bad(std::string(what) + " must be a number");
  return v.get<double>();
}

std::map<reps::EntryKey, Complex> indexed_from_json(const Json& list, const char* name) {
  if (!list.is_array())
    bad(std::string("\"") + name + "\" must be an array");
  std::map<reps::EntryKey, Complex> out;
  for (const Json& item : list) {
    reps::EntryKey key{int_field(item, "i"), int_field(item, "j")};
    if (!out.emplace(key, complex_from_json(field(item, "value"))).second)
      bad(std::string("duplicate entry in \"") + name + "\"");
  }
  return out;
}

Json indexed_to_json(const std::map<reps::EntryKey, Complex>& m) {
  Json list = Json::array();
  // Row j ascending, then i, matching the parameter inventory.
  std::vector<reps::EntryKey> keys;
  for (const auto& [k, v] : m)
    keys.push_back(k);
  std::sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second < b.second : a.first < b.first;
  });
  for (const auto& k : keys)
    list.push_back(Json{{"i", k.first}, {"j", k.second}, {"value", complex_to_json(m.at(k))}});
  return list;
}

} // namespace

Json complex_to_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Complex complex_from_json(const Json& j) {
  if (j.is_number())
    return {j.get<double>(), 0.0};
  return {number(field(j, "re"), "\"re\""), number(field(j, "im"), "\"im\"")};
}

Json params_to_json(const reps::ParamsOmega& omega) {
  Json top = Json::array();
  for (const auto& z : omega.mTop)
    top.push_back(complex_to_json(z));
  return Json{{"n", omega.n},
              {"orderK", omega.root.order()},
              {"t", omega.root.t()},
              {"mTop", top},
              {"h", indexed_to_json(omega.h)},
              {"c", indexed_to_json(omega.c)}};
}

reps::ParamsOmega params_from_json(const Json& j) {
  int t = j.is_object() && j.contains("t") ? int_field(j, "t") : 1;
  reps::ParamsOmega omega{int_field(j, "n"), RootOfUnity(int_field(j, "orderK"), t), {}, {}, {}};
  const Json& top = field(j, "mTop");
  if (!top.is_array())
    bad("\"mTop\" must be an array");
  for (const Json& z : top)
    omega.mTop.push_back(complex_from_json(z));
  omega.h = indexed_from_json(field(j, "h"), "h");
  omega.c = indexed_from_json(field(j, "c"), "c");
  return omega;
}

Json rep_to_json(const std::vector<reps::SparseOperator>& ops) {
  Json gens = Json::array();
  for (const auto& op : ops) {
    Json entries = Json::array();
    for (const auto& e : op.entries)
      entries.push_back(Json::array({e.row, e.col, complex_to_json(e.value)}));
    gens.push_back(Json{{"name", op.name}, {"entries", entries}});
  }
  return Json{{"dim", ops.empty() ? 0 : ops.front().dim}, {"generators", gens}};
}

std::vector<reps::SparseOperator> rep_from_json(const Json& j) {
  const Json& dim_field = field(j, "dim");
  if (!dim_field.is_number_unsigned() && !dim_field.is_number_integer())
    bad("\"dim\" must be an integer");
  const auto dim = dim_field.get<std::size_t>();
  const Json& gens = field(j, "generators");
  if (!gens.is_array())
    bad("\"generators\" must be an array");
  std::vector<reps::SparseOperator> ops;
  for (const Json& g : gens) {
    const Json& name = field(g, "name");
    if (!name.is_string())
      bad("generator name must be a string");
    std::vector<reps::SparseEntry> entries;
    for (const Json& e : field(g, "entries")) {
      if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() || !e[1].is_number_integer())
        bad("entries must be [row, col, value]");
      entries.push_back({e[0].get<std::size_t>(), e[1].get<std::size_t>(), complex_from_json(e[2])});
    }
    ops.push_back(reps::SparseOperator::assemble(name.get<std::string>(), dim, std::move(entries)));
  }
  return ops;
}

Json residual_report_to_json(const reps::ResidualReport& report, std::optional<std::size_t> commutant_dim) {
  Json list = Json::array();
  for (const auto& r : report.residuals)
    list.push_back(Json{{"relation", r.relation}, {"residual", r.residual}});
  if (commutant_dim)
    list.push_back(Json{{"commutantDim", *commutant_dim}});
  return list;
}

Json check_report_to_json(const djembed::CheckReport& report) {
  Json list = Json::array();
  for (const auto& e : report.entries) {
    Json residual = e.residual ? Json(*e.residual) : Json(nullptr);
    list.push_back(Json{{"check", e.check}, {"mode", e.mode}, {"pass", e.pass}, {"residual", residual}});
  }
  return list;
}

Json relation_report_to_json(const pbw::RelationReport& report) {
  Json list = Json::array();
  for (const auto& c : report.checks)
    list.push_back(
        Json{{"relation", c.relation}, {"exactZero", c.exact_zero()}, {"residual", c.residual.to_string()}});
  return list;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    fail(ErrorKind::Io, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::InvalidArgument, "malformed JSON in " + path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out)
    fail(ErrorKind::Io, "cannot write " + path);
  out << j.dump(2) << "\n";
  if (!out)
    fail(ErrorKind::Io, "write to " + path + " failed");
}

} // namespace uqso::io
