#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "json.hpp"
#include "tracedist/channel.hpp"
#include "tracedist/construct.hpp"
#include "tracedist/distinguish.hpp"
#include "tracedist/polynomial.hpp"

namespace tracedist::io {

using nlohmann::json;

/// Array of decimal integer strings, index = degree.
json polynomial_to_json(const IntPolynomial& f);
IntPolynomial polynomial_from_json(const json& j);

/// Array of numbers.
json profile_to_json(const MeanProfile& profile);

json decision_to_json(const Decision& d);
json certificate_to_json(const SupremumCertificate& cert);
json blocks_to_json(const std::optional<BlockDecomposition>& blocks);
json analysis_to_json(const PairAnalysis& a);

struct PairMeta {
  std::string family = "custom";
  std::optional<unsigned> k;
  std::size_t prefix_len = 0;
  std::optional<std::string> p;
};

struct PairFile {
  BitString x, y;
  PairMeta meta;
};

/// {x, y, meta: {family, k, prefix_len, p}}
json pair_to_json(const PairFile& pair);
PairFile pair_from_json(const json& j);

/// Header "# n=<n> p=<p> seed=<seed>" then one trace per line.
void write_traces(std::ostream& os, const TraceBatch& batch);
/// Throws InputError on a malformed header, a non-binary line, or a trace longer than n.
TraceBatch read_traces(std::istream& is);

}  // namespace tracedist::io
