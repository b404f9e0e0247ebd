#include "chromod/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace chromod {

Json json_envelope(const std::string& command) {
  Json j;
  j["schema"] = "chromod/1";
  j["command"] = command;
  return j;
}

Json json_poly(const QPoly& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.get_str());
  return arr;
}

Json json_rat(const QRat& r) {
  if (auto p = r.is_polynomial()) return json_poly(*p);
  Json j;
  j["num"] = json_poly(r.num());
  j["den"] = json_poly(r.den());
  return j;
}

Json json_partition(const Partition& lambda) {
  Json arr = Json::array();
  for (int i = 1; i <= lambda.length(); ++i) arr.push_back(lambda.part(i));
  return arr;
}

Json json_symfunc(const SymFunc& f) {
  Json j;
  j["degree"] = f.degree();
  j["basis"] = basis_name(f.basis());
  Json terms = Json::array();
  for (const auto& [lambda, c] : f.coeffs()) {
    Json t;
    t["lambda"] = json_partition(lambda);
    t["coeff"] = json_rat(c);
    terms.push_back(std::move(t));
  }
  j["coefficients"] = std::move(terms);
  return j;
}

Json json_expansion(const Expansion& exp) {
  Json terms = Json::array();
  for (const auto& [lambda, c] : exp) {
    Json t;
    t["lambda"] = json_partition(lambda);
    t["num"] = json_poly(c.num());
    t["den"] = json_poly(c.den());
    terms.push_back(std::move(t));
  }
  return terms;
}

Json json_xpoly(const XPoly& f) {
  Json arr = Json::array();
  for (int d = 0; d <= f.degree(); ++d) arr.push_back(json_rat(f.coefficient(d)));
  Json j;
  j["xcoeffs"] = std::move(arr);
  return j;
}

namespace {

Json json_point(const NetworkPoint& p) { return Json::array({p.first, p.second}); }

std::string point_name(const NetworkPoint& p) {
  return std::to_string(p.first) + "," + std::to_string(p.second);
}

}  // namespace

Json json_network(const PlanarNetwork& net) {
  Json j;
  j["n"] = net.n;
  j["start"] = json_point(net.start);
  Json edges = Json::array();
  for (const auto& [key, w] : net.edges) {
    Json e;
    e["from"] = json_point(key.first);
    e["step"] = key.second == NetworkStep::vertical ? "vertical" : "diagonal";
    e["weight"] = json_rat(w);
    edges.push_back(std::move(e));
  }
  j["edges"] = std::move(edges);
  Json ends = Json::array();
  for (const auto& [point, lambda] : net.endpoints) {
    Json e;
    e["point"] = json_point(point);
    e["lambda"] = json_partition(lambda);
    ends.push_back(std::move(e));
  }
  j["endpoints"] = std::move(ends);
  return j;
}

std::string network_dot(const PlanarNetwork& net) {
  std::string out = "digraph network {\n";
  for (const auto& [point, lambda] : net.endpoints)
    out += "  \"" + point_name(point) + "\" [shape=doublecircle label=\"" +
           lambda.str() + "\"];\n";
  for (const auto& [key, w] : net.edges) {
    const auto& [from, step] = key;
    const NetworkPoint to =
        step == NetworkStep::vertical
            ? NetworkPoint{from.first, from.second - 1}
            : NetworkPoint{from.first - 1, from.second - 1};
    out += "  \"" + point_name(from) + "\" -> \"" + point_name(to) +
           "\" [label=\"" + w.str() + "\"";
    if (step == NetworkStep::diagonal) out += " style=dashed";
    out += "];\n";
  }
  out += "}\n";
  return out;
}

Json json_shape_report(const ShapeReport& rep, const std::string& check) {
  Json j;
  j["h"] = rep.h.values();
  j["two_center"] = rep.two_center;
  j["coefficients"] = rep.coefficients.size();
  Json fails = Json::array();
  for (const auto& [lambda, what] : rep.failures) {
    if (check != "all" && what != check) continue;
    Json f;
    f["lambda"] = json_partition(lambda);
    f["what"] = what;
    fails.push_back(std::move(f));
  }
  j["failures"] = std::move(fails);
  return j;
}

Json json_suite_result(const SuiteResult& r) {
  Json j;
  j["suite"] = r.name;
  j["pass"] = r.passed();
  j["checked"] = r.checked;
  j["failed"] = r.failed;
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

void save_cache(const std::string& path,
                const std::map<std::vector<int>, Expansion>& entries) {
  std::ofstream out(path, std::ios::trunc);
  if (!out)
    throw std::runtime_error("cache: cannot write " + path);
  Json header;
  header["schema"] = "chromod/1";
  header["kind"] = "engine-cache";
  out << header.dump() << "\n";
  for (const auto& [key, exp] : entries) {
    Json line;
    line["h"] = key;
    line["terms"] = json_expansion(exp);
    out << line.dump() << "\n";
  }
}

std::map<std::vector<int>, Expansion> load_cache(const std::string& path) {
  std::map<std::vector<int>, Expansion> out;
  std::ifstream in(path);
  if (!in) return out;  // nothing cached yet
  std::string text;
  long lineno = 0;
  const auto fail = [&](const std::string& why) {
    throw std::runtime_error("cache: " + path + " line " +
                             std::to_string(lineno) + ": " + why);
  };
  while (std::getline(in, text)) {
    ++lineno;
    if (text.empty()) continue;
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) fail("not valid JSON");
    if (lineno == 1) {
      if (j.value("schema", "") != "chromod/1" ||
          j.value("kind", "") != "engine-cache")
        fail("not a chromod/1 engine-cache header");
      continue;
    }
    try {
      std::vector<int> key = j.at("h").get<std::vector<int>>();
      Expansion exp;
      for (const auto& t : j.at("terms")) {
        std::vector<int> parts = t.at("lambda").get<std::vector<int>>();
        const auto read_poly = [](const Json& arr) {
          std::vector<mpz_class> c;
          for (const auto& s : arr) c.emplace_back(s.get<std::string>());
          return QPoly(std::move(c));
        };
        exp.emplace(Partition(std::move(parts)),
                    QRat(read_poly(t.at("num")), read_poly(t.at("den"))));
      }
      out[std::move(key)] = std::move(exp);
    } catch (const Json::exception& e) {
      fail(e.what());
    }
  }
  return out;
}

}  // namespace chromod
