#include "tracedist/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "tracedist/error.hpp"
#include "tracedist/numeric.hpp"

namespace tracedist::io {

json polynomial_to_json(const IntPolynomial& f) {
  json out = json::array();
  for (const auto& c : f.coefficients()) out.push_back(c.get_str());
  return out;
}

IntPolynomial polynomial_from_json(const json& j) {
  if (!j.is_array()) throw InputError("polynomial must be a JSON array");
  std::vector<mpz_class> coeffs;
  for (const auto& item : j) {
    if (!item.is_string()) throw InputError("polynomial coefficients must be decimal strings");
    mpz_class c;
    if (c.set_str(item.get<std::string>(), 10) != 0) {
      throw InputError("bad integer coefficient '" + item.get<std::string>() + "'");
    }
    coeffs.push_back(c);
  }
  return IntPolynomial(std::move(coeffs));
}

json profile_to_json(const MeanProfile& profile) { return json(profile.values); }

json decision_to_json(const Decision& d) {
  json out = {{"choice", to_string(d.choice)},
              {"statistic", d.statistic},
              {"margin", d.margin},
              {"method", to_string(d.method)},
              {"T", d.samples},
              {"tie", d.tie}};
  if (d.k) out["k"] = *d.k;
  return out;
}

json certificate_to_json(const SupremumCertificate& cert) {
  return {{"lower", cert.lower},
          {"upper", cert.upper},
          {"witness_theta", cert.witness_theta},
          {"grid_points", cert.grid_points},
          {"refine_rounds", cert.refine_rounds},
          {"lipschitz_bound", cert.lipschitz_bound},
          {"curvature_bound", cert.curvature_bound}};
}

json blocks_to_json(const std::optional<BlockDecomposition>& blocks) {
  if (!blocks) return nullptr;
  json out = json::array();
  for (const auto& b : blocks->blocks) {
    json item = {{"start", b.start},
                 {"length", b.length},
                 {"case", case_label(b.kind)},
                 {"s", b.shared.to_string()}};
    if (b.a) item["a"] = *b.a;
    if (b.b) item["b"] = *b.b;
    out.push_back(std::move(item));
  }
  return out;
}

json analysis_to_json(const PairAnalysis& a) {
  json out = {
      {"x", a.x.to_string()},
      {"y", a.y.to_string()},
      {"n", a.n},
      {"p", a.channel.label()},
      {"hamming_distance", a.hamming},
      {"edit_distance", a.edit},
      {"weight_difference", a.weight_difference},
      {"trivially_distinguishable", a.trivially_distinguishable},
      {"difference", polynomial_to_json(a.difference)},
      {"multiplicity", a.multiplicity},
      {"sign_changes", a.sign_changes},
      {"pte", {{"D_x", a.ones_x}, {"D_y", a.ones_y}, {"degree", a.pte_degree}}},
      {"quotient_mass", {{"sum", a.quotient_mass.get_str()}}},
      {"supremum", certificate_to_json(a.supremum)},
      {"sup_lower_bound",
       {{"exact", a.sup_lower_bound.get_str()}, {"value", to_double(a.sup_lower_bound)}}},
      {"l1_separation", a.l1_separation},
      {"block_decomposition", blocks_to_json(a.blocks)},
  };
  if (a.quotient_mass_bound) out["quotient_mass"]["bound"] = *a.quotient_mass_bound;
  return out;
}

json pair_to_json(const PairFile& pair) {
  json meta = {{"family", pair.meta.family}, {"prefix_len", pair.meta.prefix_len}};
  meta["k"] = pair.meta.k ? json(*pair.meta.k) : json(nullptr);
  meta["p"] = pair.meta.p ? json(*pair.meta.p) : json(nullptr);
  return {{"x", pair.x.to_string()}, {"y", pair.y.to_string()}, {"meta", std::move(meta)}};
}

PairFile pair_from_json(const json& j) {
  try {
    PairFile out;
    out.x = BitString::parse(j.at("x").get<std::string>());
    out.y = BitString::parse(j.at("y").get<std::string>());
    if (j.contains("meta")) {
      const json& m = j.at("meta");
      out.meta.family = m.value("family", std::string("custom"));
      out.meta.prefix_len = m.value("prefix_len", std::size_t{0});
      if (m.contains("k") && !m.at("k").is_null()) out.meta.k = m.at("k").get<unsigned>();
      if (m.contains("p") && !m.at("p").is_null()) out.meta.p = m.at("p").get<std::string>();
    }
    return out;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed pair file: ") + e.what());
  }
}

void write_traces(std::ostream& os, const TraceBatch& batch) {
  os << "# n=" << batch.source_length << " p=" << batch.channel.label() << " seed=" << batch.seed
     << '\n';
  for (const auto& t : batch.traces) os << t << '\n';
}

TraceBatch read_traces(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line.rfind("# ", 0) != 0) {
    throw InputError("trace file must start with '# n=<n> p=<p> seed=<seed>'");
  }
  TraceBatch batch;
  std::istringstream header(line.substr(2));
  std::string field;
  bool have_n = false, have_p = false, have_seed = false;
  while (header >> field) {
    const auto eq = field.find('=');
    if (eq == std::string::npos) throw InputError("bad trace header field '" + field + "'");
    const std::string key = field.substr(0, eq), value = field.substr(eq + 1);
    try {
      if (key == "n") {
        batch.source_length = std::stoull(value);
        have_n = true;
      } else if (key == "p") {
        batch.channel = CircleParams::parse(value);
        have_p = true;
      } else if (key == "seed") {
        batch.seed = std::stoull(value);
        have_seed = true;
      }
    } catch (const std::logic_error&) {
      throw InputError("bad trace header value '" + field + "'");
    }
  }
  if (!have_n || !have_p || !have_seed) throw InputError("trace header needs n, p and seed");
  while (std::getline(is, line)) {
    BitString trace = BitString::parse(line);
    if (trace.size() > batch.source_length) throw InputError("trace longer than n");
    batch.traces.push_back(std::move(trace));
  }
  return batch;
}

}  // namespace tracedist::io
