#include "cogsec/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include <boost/program_options.hpp>
#include <fmt/format.h>
#include <fmt/ranges.h>

namespace po = boost::program_options;

namespace cogsec {

namespace {

constexpr const char* kKeys[] = {
    "schemes",   "snr_grid_db", "relay_counts", "secrecy_rates", "p0",        "pd",
    "pf",        "gamma_p_db",  "sigma2_sd",    "sigma2_se",     "sigma2_pd", "sigma2_pe",
    "sigma2_si", "sigma2_id",   "sigma2_pi",    "sigma2_ie",     "trials",    "seed",
    "output",
};

constexpr const char* kRequired[] = {
    "schemes",    "snr_grid_db", "secrecy_rates", "p0",
    "gamma_p_db", "sigma2_sd",   "sigma2_se",     "sigma2_pd",
    "sigma2_pe",
};

constexpr const char* kRequiredForRelaying[] = {
    "relay_counts", "sigma2_si", "sigma2_id", "sigma2_pi", "sigma2_ie",
};

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::string_view rest = text;
  while (true) {
    const auto comma = rest.find(',');
    items.push_back(trim(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return items;
}

template <typename T>
T parse_number(const std::string& key, const std::string& text) {
  T value{};
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw ConfigError(key, "cannot parse '" + text + "' as a number");
  }
  return value;
}

template <typename T>
std::vector<T> parse_number_list(const std::string& key, const std::string& text) {
  std::vector<T> out;
  for (const std::string& item : split_list(text)) out.push_back(parse_number<T>(key, item));
  return out;
}

// Maps model field names onto the configuration keys that set them.
std::string config_key_for(const std::string& field) {
  if (field == "secrecy_rate") return "secrecy_rates";
  if (field == "gamma_s_db") return "snr_grid_db";
  return field;
}

}  // namespace

SweepPlan ExperimentSpec::plan() const {
  SweepPlan plan;
  plan.schemes = schemes;
  plan.snr_grid_db = snr_grid_db;
  plan.relay_counts = relay_counts;
  plan.secrecy_rates = secrecy_rates;
  plan.trials = trials;
  plan.seed = seed;
  return plan;
}

void check(const ExperimentSpec& spec) {
  if (spec.schemes.empty()) throw ConfigError("schemes", "list is empty");
  if (spec.snr_grid_db.empty()) throw ConfigError("snr_grid_db", "list is empty");
  if (spec.secrecy_rates.empty()) throw ConfigError("secrecy_rates", "list is empty");
  if (spec.trials == 0) throw ConfigError("trials", "must be >= 1");
  if (!std::is_sorted(spec.snr_grid_db.begin(), spec.snr_grid_db.end(),
                      std::less_equal<double>())) {
    throw ConfigError("snr_grid_db", "grid must be strictly increasing");
  }
  const bool relaying = std::find(spec.schemes.begin(), spec.schemes.end(),
                                  Scheme::opportunistic) != spec.schemes.end();
  if (relaying && spec.relay_counts.empty()) {
    throw ConfigError("relay_counts", "required by the opportunistic scheme");
  }
  for (std::size_t n : spec.relay_counts) {
    if (n == 0) throw ConfigError("relay_counts", "relay counts must be positive");
  }
  try {
    for (double snr : spec.snr_grid_db) {
      for (double rate : spec.secrecy_rates) {
        SystemParams p = spec.params;
        p.gamma_s_db = snr;
        p.secrecy_rate = rate;
        validate(p);
      }
    }
  } catch (const ParamError& e) {
    throw ConfigError(config_key_for(e.field()), e.what());
  }
}

ExperimentSpec parse_config(std::istream& in) {
  po::options_description desc;
  for (const char* key : kKeys) desc.add_options()(key, po::value<std::string>());

  po::variables_map vm;
  try {
    po::store(po::parse_config_file(in, desc, false), vm);
  } catch (const po::unknown_option& e) {
    throw ConfigError(e.get_option_name(), "unknown key");
  } catch (const po::error& e) {
    throw ConfigError("", e.what());
  }

  auto has = [&](const char* key) {
    return vm.count(key) != 0 && !trim(vm[key].as<std::string>()).empty();
  };
  auto get = [&](const char* key) { return trim(vm[key].as<std::string>()); };

  for (const char* key : kRequired) {
    if (!has(key)) throw ConfigError(key, "required key is missing");
  }

  ExperimentSpec spec;
  for (const std::string& name : split_list(get("schemes"))) {
    try {
      spec.schemes.push_back(parse_scheme(name));
    } catch (const std::invalid_argument& e) {
      throw ConfigError("schemes", e.what());
    }
  }
  if (std::find(spec.schemes.begin(), spec.schemes.end(), Scheme::opportunistic) !=
      spec.schemes.end()) {
    for (const char* key : kRequiredForRelaying) {
      if (!has(key)) throw ConfigError(key, "required key is missing (opportunistic scheme)");
    }
  }

  SystemParams& p = spec.params;
  LinkBudget& l = p.links;
  const std::pair<const char*, double*> scalars[] = {
      {"p0", &p.p0},               {"pd", &p.pd},
      {"pf", &p.pf},               {"gamma_p_db", &p.gamma_p_db},
      {"sigma2_sd", &l.sigma2_sd}, {"sigma2_se", &l.sigma2_se},
      {"sigma2_pd", &l.sigma2_pd}, {"sigma2_pe", &l.sigma2_pe},
      {"sigma2_si", &l.sigma2_si}, {"sigma2_id", &l.sigma2_id},
      {"sigma2_pi", &l.sigma2_pi}, {"sigma2_ie", &l.sigma2_ie},
  };
  for (const auto& [key, target] : scalars) {
    if (has(key)) *target = parse_number<double>(key, get(key));
  }

  spec.snr_grid_db = parse_number_list<double>("snr_grid_db", get("snr_grid_db"));
  spec.secrecy_rates = parse_number_list<double>("secrecy_rates", get("secrecy_rates"));
  if (has("relay_counts")) {
    spec.relay_counts = parse_number_list<std::size_t>("relay_counts", get("relay_counts"));
  }
  if (has("trials")) spec.trials = parse_number<std::uint64_t>("trials", get("trials"));
  if (has("seed")) spec.seed = parse_number<std::uint64_t>("seed", get("seed"));
  if (has("output")) spec.output_path = get("output");

  p.gamma_s_db = spec.snr_grid_db.front();
  p.secrecy_rate = spec.secrecy_rates.front();
  p.n_relays = spec.relay_counts.empty()
                   ? 0
                   : *std::max_element(spec.relay_counts.begin(), spec.relay_counts.end());

  check(spec);
  return spec;
}

ExperimentSpec load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open config file '" + path.string() + "'");
  }
  return parse_config(in);
}

std::string describe(const ExperimentSpec& spec) {
  std::vector<std::string_view> schemes;
  for (Scheme s : spec.schemes) schemes.push_back(to_string(s));
  const SystemParams& p = spec.params;
  const LinkBudget& l = p.links;

  std::string out;
  auto line = [&](std::string_view key, const auto& value) {
    out += fmt::format("{} = {}\n", key, value);
  };
  line("schemes", fmt::format("{}", fmt::join(schemes, ",")));
  line("snr_grid_db", fmt::format("{}", fmt::join(spec.snr_grid_db, ",")));
  if (!spec.relay_counts.empty()) {
    line("relay_counts", fmt::format("{}", fmt::join(spec.relay_counts, ",")));
  }
  line("secrecy_rates", fmt::format("{}", fmt::join(spec.secrecy_rates, ",")));
  line("p0", p.p0);
  line("pd", p.pd);
  line("pf", p.pf);
  line("gamma_p_db", p.gamma_p_db);
  line("sigma2_sd", l.sigma2_sd);
  line("sigma2_se", l.sigma2_se);
  line("sigma2_pd", l.sigma2_pd);
  line("sigma2_pe", l.sigma2_pe);
  line("sigma2_si", l.sigma2_si);
  line("sigma2_id", l.sigma2_id);
  line("sigma2_pi", l.sigma2_pi);
  line("sigma2_ie", l.sigma2_ie);
  line("trials", spec.trials);
  line("seed", spec.seed);
  line("output", spec.output_path.string());
  return out;
}

}  // namespace cogsec
