#include "clusternl/report.hpp"

#include <cstdio>

namespace clusternl {

namespace {

std::string num17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void render(const Json& j, const std::string& prefix, std::string& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object() || value.is_array()) {
        out += prefix + key + ":\n";
        render(value, prefix + "  ", out);
      } else {
        out += prefix + key + ": " + (value.is_string() ? value.get<std::string>() : value.dump());
        out += "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& value : j) {
      if (value.is_object() || value.is_array()) {
        out += prefix + "-\n";
        render(value, prefix + "  ", out);
      } else {
        out += prefix + "- " +
               (value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
      }
    }
  } else {
    out += prefix + (j.is_string() ? j.get<std::string>() : j.dump()) + "\n";
  }
}

}  // namespace

std::string element_str(const StabilizerElement& e) {
  std::string word = e.word.unsigned_word().str().substr(1);
  return (e.sign < 0 ? "-" : "+") + word;
}

Json graph_json(const Graph& g) {
  Json j;
  j["sites"] = g.site_count();
  Json edges = Json::array();
  for (auto [a, b] : g.edges()) edges.push_back(Json::array({a, b}));
  j["edges"] = std::move(edges);
  return j;
}

Json argument_json(const GhzArgument& arg, bool verified) {
  Json j;
  Json elems = Json::array();
  for (const auto& e : arg.elements) elems.push_back(element_str(e));
  j["elements"] = std::move(elems);
  j["window"] = arg.window;
  j["cooperating_sites"] = arg.cooperating_sites;
  j["verified"] = verified;
  return j;
}

Json bound_report_json(const BoundReport& r) {
  Json j;
  j["classical_bound"] = num17(r.classical_bound);
  j["quantum_value"] = num17(r.quantum_value);
  j["algebraic_bound"] = num17(r.algebraic_bound);
  j["certified"] = r.certified;
  Json settings = Json::array();
  for (const auto& party : r.settings.bloch) {
    Json labels = Json::array();
    for (const auto& b : party) {
      if (!b) {
        labels.push_back("identity");
      } else {
        labels.push_back(Json::array(
            {num17(b->bloch[0]), num17(b->bloch[1]), num17(b->bloch[2])}));
      }
    }
    settings.push_back(std::move(labels));
  }
  j["settings"] = std::move(settings);
  Json witness = Json::object();
  for (const auto& [pl, v] : r.lhv_witness) {
    witness["p" + std::to_string(pl.first) + ".l" + std::to_string(pl.second)] = v;
  }
  j["lhv_witness"] = std::move(witness);
  return j;
}

std::string render_tree(const Json& j) {
  std::string out;
  render(j, "", out);
  return out;
}

}  // namespace clusternl
