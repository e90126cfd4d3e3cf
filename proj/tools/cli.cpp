#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "tracedist/channel.hpp"
#include "tracedist/construct.hpp"
#include "tracedist/distinguish.hpp"
#include "tracedist/error.hpp"
#include "tracedist/io.hpp"
#include "tracedist/rng.hpp"

namespace tracedist::cli {

namespace {

using io::json;

// Stream id reserved for random prefixes so they never collide with trace indices.
constexpr std::uint64_t kPrefixStream = 0x7072656669780000ULL;

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot open '" + path + "' for writing");
  file << text;
}

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << file.rdbuf();
  return ss.str();
}

io::PairFile load_pair(const std::string& path) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw InputError("pair file is not valid JSON: " + std::string(e.what()));
  }
  return io::pair_from_json(j);
}

BitString random_bits(std::size_t len, std::uint64_t seed) {
  const CounterRng rng(seed, kPrefixStream);
  BitString out;
  for (std::size_t i = 0; i < len; ++i) out.push_back(static_cast<std::uint8_t>(rng.bits(i) >> 63));
  return out;
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (format == f) return;
  }
  throw InputError("unsupported --format '" + format + "' for this command");
}

struct Options {
  std::string p = "1/2";
  std::uint64_t seed = 0;
  std::uint64_t num = 1;
  std::size_t grid = SupremumOptions{}.grid;
  unsigned refine = SupremumOptions{}.refine_rounds;
  std::string out_path;
  std::string format;
  unsigned k = 0;
  std::vector<unsigned> k_list;
  std::vector<std::size_t> n_list;
  std::string prefix;
  std::size_t prefix_random = 0;
  bool has_prefix_random = false;
  std::string prefix_len = "0";
  std::string method = "potential";
  std::string metric = "l1";
  std::string pair_path;
  std::string traces_path;
  std::string string_value;
  std::string x, y;
  std::string family = "hard";
  bool p_given = false;
};

SupremumOptions supremum_options(const Options& o) {
  SupremumOptions s;
  s.grid = o.grid;
  s.refine_rounds = o.refine;
  return s;
}

int cmd_generate(const Options& o, std::ostream& out, std::ostream& err) {
  require_format(o.format.empty() ? "json" : o.format, {"json"});
  BitString prefix = BitString::parse(o.prefix);
  if (o.has_prefix_random) {
    if (!o.prefix.empty()) throw InputError("--prefix and --prefix-random are exclusive");
    prefix = random_bits(o.prefix_random, o.seed);
  }
  const HardPairSpec spec = hard_pair(o.k, prefix);
  io::PairFile pair{spec.x, spec.y, {"hard", spec.k, prefix.size(), std::nullopt}};
  if (o.p_given) pair.meta.p = CircleParams::parse(o.p).label();
  emit(io::pair_to_json(pair).dump(2) + "\n", o.out_path, out);
  std::ostream& summary = o.out_path.empty() ? err : out;
  summary << "n=" << spec.n << " length=" << spec.x.size() << " prefix_len=" << prefix.size()
          << " predicted_multiplicity=" << spec.k + 2 << '\n';
  return kExitOk;
}

int cmd_analyze(const Options& o, std::ostream& out) {
  const std::string format = o.format.empty() ? "json" : o.format;
  require_format(format, {"json", "text"});
  BitString x, y;
  if (!o.pair_path.empty()) {
    const io::PairFile pair = load_pair(o.pair_path);
    x = pair.x;
    y = pair.y;
  } else {
    x = BitString::parse(o.x);
    y = BitString::parse(o.y);
  }
  const PairAnalysis a = analyze_pair(x, y, CircleParams::parse(o.p), supremum_options(o));
  const json j = io::analysis_to_json(a);
  if (format == "json") {
    emit(j.dump(2) + "\n", o.out_path, out);
  } else {
    std::ostringstream ss;
    for (const auto& [key, value] : j.items()) ss << key << ": " << value.dump() << '\n';
    emit(ss.str(), o.out_path, out);
  }
  return kExitOk;
}

int cmd_sample(const Options& o, std::ostream& out) {
  require_format(o.format.empty() ? "text" : o.format, {"text"});
  if (o.num < 1) throw InputError("--num must be at least 1");
  const BitString x = BitString::parse(o.string_value);
  const TraceBatch batch = sample_batch(x, CircleParams::parse(o.p), o.seed, o.num);
  std::ostringstream ss;
  io::write_traces(ss, batch);
  emit(ss.str(), o.out_path, out);
  return kExitOk;
}

int cmd_distinguish(const Options& o, std::ostream& out) {
  require_format(o.format.empty() ? "json" : o.format, {"json"});
  const io::PairFile pair = load_pair(o.pair_path);
  std::istringstream traces(read_file(o.traces_path));
  TraceBatch batch = io::read_traces(traces);
  if (batch.source_length != pair.x.size()) {
    throw InputError("trace header n does not match the pair length");
  }
  const CircleParams c = o.p_given ? CircleParams::parse(o.p) : batch.channel;
  Decision d;
  if (o.method == "potential") {
    d = potential_distinguish(batch, pair.x, pair.y, c);
  } else if (o.method == "mean") {
    if (o.metric != "l1" && o.metric != "linf") throw InputError("--metric must be l1 or linf");
    d = mean_based_distinguish(batch, pair.x, pair.y, c,
                               o.metric == "l1" ? ProfileMetric::L1 : ProfileMetric::LInf);
  } else {
    throw InputError("--method must be mean or potential");
  }
  emit(io::decision_to_json(d).dump(2) + "\n", o.out_path, out);
  return kExitOk;
}

struct SweepRow {
  std::string family;
  std::size_t param = 0;
  std::size_t n = 0;
  SupremumCertificate sup;
  unsigned multiplicity = 0;
  int pte = -1;
  double l1 = 0.0;
};

SweepRow sweep_row(const std::string& family, std::size_t param, const BitString& x,
                   const BitString& y, const CircleParams& c, const SupremumOptions& s) {
  const IntPolynomial f = from_string(x) - from_string(y);
  SweepRow row;
  row.family = family;
  row.param = param;
  row.n = x.size();
  row.sup = circle_supremum(f, c, s);
  row.multiplicity = multiplicity_at_one(f).k;
  row.pte = pte_degree(x, y);
  row.l1 = profile_l1_separation(x, y, c);
  return row;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  const std::string format = o.format.empty() ? "csv" : o.format;
  require_format(format, {"csv", "json", "text"});
  const CircleParams c = CircleParams::parse(o.p);
  const SupremumOptions s = supremum_options(o);
  std::vector<SweepRow> rows;
  if (o.family == "hard") {
    if (o.k_list.empty()) throw InputError("sweep --family hard needs --k");
    std::vector<unsigned> ks = o.k_list;
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    for (unsigned k : ks) {
      const IntPolynomial r = cyclotomic_R(k);  // validates k before sizing the prefix
      std::size_t prefix_len = 0;
      if (o.prefix_len == "n") {
        prefix_len = static_cast<std::size_t>(r.degree());
      } else {
        try {
          prefix_len = std::stoull(o.prefix_len);
        } catch (const std::logic_error&) {
          throw InputError("--prefix-len must be an integer or 'n'");
        }
      }
      const HardPairSpec spec = hard_pair(k, BitString::zeros(prefix_len));
      rows.push_back(sweep_row("hard", k, spec.x, spec.y, c, s));
    }
  } else if (o.family == "intro") {
    if (o.n_list.empty()) throw InputError("sweep --family intro needs --n");
    std::vector<std::size_t> ns = o.n_list;
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
    for (std::size_t n : ns) {
      if (n < 3 || (n - 3) % 4 != 0) throw InputError("intro pair lengths are 4j + 3");
      const auto [x, y] = intro_pair((n - 3) / 4);
      rows.push_back(sweep_row("intro", (n - 3) / 4, x, y, c, s));
    }
  } else {
    throw InputError("--family must be hard or intro");
  }

  std::ostringstream ss;
  if (format == "json") {
    json arr = json::array();
    for (const auto& r : rows) {
      arr.push_back({{"family", r.family},
                     {"k", r.param},
                     {"n", r.n},
                     {"sup_lo", r.sup.lower},
                     {"sup_hi", r.sup.upper},
                     {"multiplicity", r.multiplicity},
                     {"pte_degree", r.pte},
                     {"l1_separation", r.l1}});
    }
    ss << arr.dump(2) << '\n';
  } else {
    const char sep = format == "csv" ? ',' : ' ';
    ss << "family" << sep << "k" << sep << "n" << sep << "sup_lo" << sep << "sup_hi" << sep
       << "multiplicity" << sep << "pte_degree" << sep << "l1_separation" << '\n';
    for (const auto& r : rows) {
      ss << r.family << sep << r.param << sep << r.n << sep << format_double(r.sup.lower) << sep
         << format_double(r.sup.upper) << sep << r.multiplicity << sep << r.pte << sep
         << format_double(r.l1) << '\n';
    }
  }
  emit(ss.str(), o.out_path, out);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mean-based trace distinguishing: hard pairs, certified suprema, experiments"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", o.out_path, "Output file (default stdout)");
    sub->add_option("--format", o.format, "json, csv or text");
  };
  auto add_p = [&](CLI::App* sub) {
    sub->add_option("--p", o.p, "Deletion probability, rational a/b or decimal")
        ->each([&](const std::string&) { o.p_given = true; });
  };
  auto add_grid = [&](CLI::App* sub) {
    sub->add_option("--grid", o.grid, "Coarse theta grid size");
    sub->add_option("--refine", o.refine, "Refinement rounds");
  };

  CLI::App* generate = app.add_subcommand("generate", "Write an edit-distance-4 hard pair");
  generate->add_option("--k", o.k, "Odd cyclotomic depth")->required();
  generate->add_option("--prefix", o.prefix, "Prefix bits a");
  generate->add_option("--prefix-random", o.prefix_random, "Random prefix length")
      ->each([&](const std::string&) { o.has_prefix_random = true; });
  generate->add_option("--seed", o.seed, "Seed for --prefix-random");
  add_p(generate);
  add_common(generate);

  CLI::App* analyze = app.add_subcommand("analyze", "Analyze a string pair");
  analyze->add_option("--pair", o.pair_path, "Pair JSON file");
  analyze->add_option("--x", o.x, "First string");
  analyze->add_option("--y", o.y, "Second string");
  add_p(analyze);
  add_grid(analyze);
  add_common(analyze);

  CLI::App* sample = app.add_subcommand("sample", "Sample deletion-channel traces");
  sample->add_option("--string", o.string_value, "Source string")->required();
  sample->add_option("--num,-T", o.num, "Number of traces");
  sample->add_option("--seed", o.seed, "Seed");
  add_p(sample);
  add_common(sample);

  CLI::App* distinguish = app.add_subcommand("distinguish", "Decide which string produced traces");
  distinguish->add_option("--pair", o.pair_path, "Pair JSON file")->required();
  distinguish->add_option("--traces", o.traces_path, "Trace file")->required();
  distinguish->add_option("--method", o.method, "mean or potential");
  distinguish->add_option("--metric", o.metric, "Profile distance for --method mean: l1 or linf");
  add_p(distinguish);
  add_common(distinguish);

  CLI::App* sweep = app.add_subcommand("sweep", "Tabulate suprema and separations over a family");
  sweep->add_option("--family", o.family, "hard or intro");
  sweep->add_option("--k", o.k_list, "Odd k values (hard family)")->delimiter(',');
  sweep->add_option("--n", o.n_list, "String lengths 4j+3 (intro family)")->delimiter(',');
  sweep->add_option("--prefix-len", o.prefix_len, "Zero prefix length for hard pairs, or 'n'");
  add_p(sweep);
  add_grid(sweep);
  add_common(sweep);

  std::vector<std::string> argv_storage;
  argv_storage.emplace_back("tracedist");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (generate->parsed()) return cmd_generate(o, out, err);
    if (analyze->parsed()) {
      if (o.pair_path.empty() && (o.x.empty() || o.y.empty())) {
        throw InputError("analyze needs --pair or both --x and --y");
      }
      return cmd_analyze(o, out);
    }
    if (sample->parsed()) return cmd_sample(o, out);
    if (distinguish->parsed()) return cmd_distinguish(o, out);
    if (sweep->parsed()) return cmd_sweep(o, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvariantError& e) {
    err << "internal invariant violated: " << e.what() << '\n';
    return kExitInvariant;
  }
  return kExitUsage;
}

}  // namespace tracedist::cli
